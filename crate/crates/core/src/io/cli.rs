use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::codes::{automorphism_group, fixed_subcode, min_distance, pi_project, DistanceMode, LinearCode};
use crate::perm::Permutation;
use crate::pipeline::{
    filter_candidates, orbit_reps, run_pipeline, selftest, standard_frame, PipelineConfig, PipelineRun, Verdict,
};

use super::{read_db, DbRecord, ReportDoc};

/// Expected numbers for the length-72 run.
const PAPER_N: usize = 72;
const PAPER_TARGET_D: usize = 16;
const PAPER_DB: usize = 41;
const PAPER_LIBRARY: usize = 14;
const PAPER_REPS: usize = 242;
const PAPER_BUCKETS: usize = 40;
const PAPER_SURVIVORS: usize = 22;

#[derive(Parser, Debug)]
#[command(name = "fixglue", version, about = "Gluing search for self-dual codes with an elementary abelian automorphism group")]
struct Cli {
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, env = "FIXGLUE_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Auto,
    Exhaustive,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum distance of every code in a database.
    Mindist {
        db: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
        /// Stop as soon as a word of weight below W is found.
        #[arg(long, value_name = "W")]
        early_abort: Option<usize>,
    },
    /// Automorphism group order and generators.
    Aut { db: PathBuf },
    /// Fixed subcode of a permutation given in 1-based cycle notation.
    Fixed {
        db: PathBuf,
        #[arg(long)]
        perm: String,
    },
    /// The standard involutions for length N.
    Frame {
        #[arg(long)]
        n: usize,
    },
    /// Orbit representatives of the codes admitting the Klein group.
    OrbitReps {
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        n: usize,
        /// Library codes need minimum distance at least half of this.
        #[arg(long, default_value_t = 0)]
        target_d: usize,
    },
    /// Full search for length N and minimum distance D.
    GlueSearch {
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target_d: usize,
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        /// Record the wall time in the report.
        #[arg(long)]
        wall_time: bool,
    },
    /// The length-72 run against the database of self-dual [36,18,8] codes.
    VerifyPaper {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        #[arg(long)]
        wall_time: bool,
    },
    /// Length-8 end-to-end run.
    Selftest,
}

type Outcome = Result<i32, String>;

/// Runs the command line with process stdout and stderr.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_cli_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Exit status: 0 on success, 1 on usage, I/O or validation errors, 2 when
/// a run disagrees with the expected outcome.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let msg = e.render().to_string();
            let _ = writeln!(err, "{}", msg.lines().next().unwrap_or("invalid arguments"));
            return 1;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let threads = pool.current_num_threads();
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli.command, threads, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {}", msg.replace('\n', " "));
            1
        }
    }
}

fn load(path: &PathBuf) -> Result<Vec<DbRecord>, String> {
    read_db(path).map_err(|e| match e {
        super::DbError::Parse { .. } => format!("{}: {e}", path.display()),
        _ => e.to_string(),
    })
}

fn label(i: usize, r: &DbRecord) -> String {
    r.name.clone().unwrap_or_else(|| format!("#{}", i + 1))
}

fn codes(records: &[DbRecord]) -> Vec<LinearCode> {
    records.iter().map(|r| r.code.clone()).collect()
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(e)?
    };
}

fn dispatch(cmd: Command, threads: usize, out: &mut Vec<u8>) -> Outcome {
    match cmd {
        Command::Mindist { db, mode, early_abort } => {
            let mode = match mode {
                Mode::Auto => DistanceMode::Auto,
                Mode::Exhaustive => DistanceMode::Exhaustive,
            };
            for (i, r) in load(&db)?.iter().enumerate() {
                let d = min_distance(&r.code, mode, early_abort).map_err(e)?;
                say!(out, "{}\t[{},{}]\td={d}", label(i, r), r.code.len(), r.code.dim());
            }
            Ok(0)
        }
        Command::Aut { db } => {
            for (i, r) in load(&db)?.iter().enumerate() {
                let g = automorphism_group(&r.code).map_err(e)?;
                say!(out, "{}\t|Aut| = {}", label(i, r), g.order());
                for x in g.generators() {
                    say!(out, "  {x}");
                }
            }
            Ok(0)
        }
        Command::Fixed { db, perm } => {
            for (i, r) in load(&db)?.iter().enumerate() {
                let sigma = Permutation::parse(&perm, r.code.len()).map_err(e)?;
                if !r.code.is_automorphism(&sigma) {
                    say!(out, "{}\tnot an automorphism", label(i, r));
                    continue;
                }
                let f = fixed_subcode(&r.code, &sigma).map_err(e)?;
                say!(out, "{}\tdim C(sigma) = {}", label(i, r), f.dim());
                if sigma.is_involution() && sigma.is_fixed_point_free() {
                    let p = pi_project(&f, &sigma).map_err(e)?;
                    let sd = if p.is_self_dual() { "self-dual" } else { "not self-dual" };
                    say!(out, "  projection [{},{}] {sd}", p.len(), p.dim());
                    for row in p.generator().rows() {
                        say!(out, "  {row}");
                    }
                }
            }
            Ok(0)
        }
        Command::Frame { n } => {
            let f = standard_frame(n).map_err(e)?;
            say!(out, "alpha = {}", f.alpha);
            say!(out, "beta  = {}", f.beta);
            say!(out, "gamma = {}", f.gamma);
            say!(out, "chi   = {}", f.chi);
            say!(out, "mu    = {}", f.mu);
            Ok(0)
        }
        Command::OrbitReps { db, n, target_d } => {
            let frame = standard_frame(n).map_err(e)?;
            let lib = filter_candidates(&codes(&load(&db)?), &frame, target_d / 2).map_err(e)?;
            let reps = orbit_reps(&lib, &frame).map_err(e)?;
            say!(out, "library {} representatives {}", lib.len(), reps.len());
            for r in &reps.entries {
                let rows: Vec<String> = r.code.generator().rows().iter().map(|x| x.to_string()).collect();
                say!(out, "{}\t{}\t{}\t{}", r.source, r.chi_class, r.mu_class, rows.join(" "));
            }
            Ok(0)
        }
        Command::GlueSearch {
            db,
            n,
            target_d,
            report,
            wall_time,
        } => {
            let db = codes(&load(&db)?);
            let start = Instant::now();
            let run = run_pipeline(&db, &PipelineConfig::new(n, target_d)).map_err(e)?;
            finish(&run, threads, wall_time.then(|| start.elapsed().as_millis()), report, out)?;
            Ok(0)
        }
        Command::VerifyPaper { db, report, wall_time } => {
            let db = codes(&load(&db)?);
            let bad = db
                .iter()
                .position(|c| c.len() != 36 || !c.is_self_dual() || min_distance(c, DistanceMode::Auto, None).ok() != Some(8));
            if db.len() != PAPER_DB || bad.is_some() {
                return Err(format!(
                    "expected {PAPER_DB} self-dual [36,18,8] codes, found {} (first invalid entry: {})",
                    db.len(),
                    bad.map_or("none".into(), |i| format!("#{}", i + 1))
                ));
            }
            let start = Instant::now();
            let run = run_pipeline(&db, &PipelineConfig::new(PAPER_N, PAPER_TARGET_D)).map_err(e)?;
            finish(&run, threads, wall_time.then(|| start.elapsed().as_millis()), report, out)?;
            let got = [run.library.len(), run.reps.len(), run.partition.len(), run.survivors.len()];
            let want = [PAPER_LIBRARY, PAPER_REPS, PAPER_BUCKETS, PAPER_SURVIVORS];
            let ok = got == want && run.verdict == Verdict::Contradiction;
            say!(out, "expected counts {want:?}, verdict CONTRADICTION: {}", if ok { "match" } else { "MISMATCH" });
            Ok(if ok { 0 } else { 2 })
        }
        Command::Selftest => {
            let run = selftest().map_err(e)?;
            finish(&run, threads, None, None, out)?;
            Ok(if run.verdict == Verdict::Consistent { 0 } else { 2 })
        }
    }
}

fn finish(
    run: &PipelineRun,
    threads: usize,
    wall_time_ms: Option<u128>,
    report: Option<PathBuf>,
    out: &mut Vec<u8>,
) -> Result<(), String> {
    let doc = ReportDoc::new(run, threads, wall_time_ms);
    let c = &doc.counts;
    say!(
        out,
        "n={} target_d={} database={} library={} representatives={} buckets={} work_items={} survivors={}",
        doc.run.n,
        doc.run.target_d,
        c.database,
        c.library,
        c.representatives,
        c.buckets,
        c.work_items,
        c.survivors
    );
    for s in &doc.survivors {
        say!(out, "survivor [{},{},{}] pair_dim={} pair={}", s.n, s.k, s.min_distance, s.pair_dim, s.pair);
    }
    let rows: Vec<String> = doc.cases_table.iter().map(|r| format!("({},{},{})", r[0], r[1], r[2])).collect();
    say!(out, "cases table {}", rows.join(" "));
    say!(out, "verdict {}", doc.verdict);
    if let Some(path) = report {
        std::fs::write(&path, doc.to_json() + "\n").map_err(|x| format!("{}: {x}", path.display()))?;
    }
    Ok(())
}
