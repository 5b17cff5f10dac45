//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. The full-length run only happens when
//! `FIXGLUE_PAPER_DB` names the database of self-dual [36,18,8] codes.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use fixglue::codes::{
    automorphism_group, automorphism_group_brute_force, equivalence, fixed_subcode, library, min_distance,
    pi_project, weight_enumerator, DistanceMode, LinearCode,
};
use fixglue::gf2::{BitMatrix, BitVector};
use fixglue::io::parse_db;
use fixglue::pipeline::{
    filter_candidates, orbit_reps, profiles_of, run_pipeline, selftest, standard_frame, PipelineConfig, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn random_matrix(rows: usize, cols: usize, rng: &mut impl Rng) -> BitMatrix {
    let rows = (0..rows)
        .map(|_| BitVector::from_support(cols, (0..cols).filter(|_| rng.gen::<bool>())))
        .collect();
    BitMatrix::from_rows(cols, rows)
}

fn algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=64);
        let a = random_matrix(rng.gen_range(0..=n), n, &mut rng);
        let b = random_matrix(rng.gen_range(0..=n), n, &mut rng);
        let ker = a.kernel_basis();
        let nullity_ok = a.rank() + ker.nrows() == n
            && ker.rank() == ker.nrows()
            && ker.rows().iter().all(|x| a.mul_vec(x).is_zero());
        let (c, d) = (LinearCode::new(&a), LinearCode::new(&b));
        let bidual_ok = c.dual().dual() == c && c.dual().dim() == n - c.dim();
        let sum_ok = c.sum(&d).dim() + c.intersection(&d).dim() == c.dim() + d.dim();
        if !(nullity_ok && bidual_ok && sum_ok) {
            bad += 1;
        }
    }
    check(bad == 0, format!("{bad} of 1000 pairs violate an identity"))
}

fn distance_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    for _ in 0..100 {
        let c = library::random_code(24, 12, &mut rng);
        let auto = min_distance(&c, DistanceMode::Auto, None).unwrap();
        let full = min_distance(&c, DistanceMode::Exhaustive, None).unwrap();
        bad += usize::from(auto != full);
    }
    check(bad == 0, format!("{bad} of 100 [24,12] codes disagree"))
}

fn e8_suite() -> Outcome {
    let e8 = library::e8();
    let d = min_distance(&e8, DistanceMode::Exhaustive, None).unwrap();
    let we = weight_enumerator(&e8).unwrap();
    let aut = automorphism_group(&e8).unwrap();
    let brute = automorphism_group_brute_force(&e8).unwrap();
    let same = aut.order() == brute.order() && aut.is_subgroup_of(&brute);
    let ok = e8.is_self_dual() && d == 4 && we.counts() == [1, 0, 0, 0, 14, 0, 0, 0, 1] && same;
    check(
        ok,
        format!("d = {d}, A = {:?}, |Aut| = {} (brute force {})", we.counts(), aut.order(), brute.order()),
    )
}

fn golay() -> Outcome {
    let g = library::golay24();
    let we = weight_enumerator(&g).unwrap();
    let d = min_distance(&g, DistanceMode::Exhaustive, None).unwrap();
    check(
        d == 8 && we.total() == 4096 && we.min_distance() == Some(8),
        format!("d = {d} over {} codewords", we.total()),
    )
}

/// Counts `(self-dual projections, involutions tried)` over the
/// fixed-point-free involutions of `Aut(c)`.
fn projection_tally(c: &LinearCode) -> (usize, usize) {
    let aut = automorphism_group(c).unwrap();
    let mut tally = (0, 0);
    aut.for_each_element(|x| {
        if x.is_involution() && x.is_fixed_point_free() {
            let p = pi_project(&fixed_subcode(c, x).unwrap(), x).unwrap();
            tally.0 += usize::from(p.len() == c.len() / 2 && p.is_self_dual());
            tally.1 += 1;
        }
        true
    });
    tally
}

fn fixed_structure() -> Outcome {
    let (e8_ok, e8_all) = projection_tally(&library::e8());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alpha = standard_frame(16).unwrap().alpha;
    let (mut ok, mut all) = (0, 0);
    for _ in 0..10 {
        let c = common::random_invariant_self_dual(16, &[alpha.clone()], &mut rng);
        let (a, b) = projection_tally(&c);
        ok += a;
        all += b;
    }
    check(
        e8_ok == e8_all && ok == all,
        format!("self-dual projections: e8 {e8_ok}/{e8_all}, sampled [16,8] codes {ok}/{all}"),
    )
}

fn lemma_rep() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (n, lib) in [(8, vec![library::i2(2)]), (16, vec![library::e8(), library::i2(4)])] {
        let frame = standard_frame(n).unwrap();
        let reps = orbit_reps(&filter_candidates(&lib, &frame, 1).unwrap(), &frame).unwrap();
        let perms = [frame.chi.clone(), frame.mu.clone()];
        let oracle = common::invariant_code_orbits(&lib, &perms);
        let keys: std::collections::BTreeSet<LinearCode> =
            reps.entries.iter().map(|r| common::orbit_key(&r.code, &perms)).collect();
        pass &= keys.len() == reps.len() && keys == oracle;
        details.push(format!("degree {}: {} reps, {} orbits", n / 2, reps.len(), oracle.len()));
    }
    check(pass, details.join("; "))
}

fn end_to_end() -> Outcome {
    let run = selftest().unwrap();
    let e8 = library::e8();
    let has_e8 = run
        .survivors
        .iter()
        .any(|s| s.code.dim() == e8.dim() && equivalence(&s.code, &e8).unwrap().is_some());
    let profiles_ok = run.survivors.iter().all(|s| {
        let got: BTreeMap<_, _> = profiles_of(&s.code)
            .unwrap()
            .into_iter()
            .map(|p| ((p.triple_dim, p.pair_dims, p.glue_roles), p.multiplicity))
            .collect();
        got == common::brute_profiles(&s.code)
    });
    let shapes: Vec<String> = run
        .survivors
        .iter()
        .map(|s| format!("[{},{},{}]", s.code.len(), s.code.dim(), s.min_distance))
        .collect();
    check(
        has_e8 && run.verdict == Verdict::Consistent && profiles_ok,
        format!(
            "survivors {}, e8 among them: {has_e8}, verdict {}, profiles match brute force: {profiles_ok}",
            shapes.join(" "),
            run.verdict
        ),
    )
}

fn full_scale() -> Outcome {
    let Ok(path) = std::env::var("FIXGLUE_PAPER_DB") else {
        return Outcome::Skip("FIXGLUE_PAPER_DB not set".into());
    };
    let db = parse_db(&path).unwrap();
    let ingest_ok = db.len() == 41
        && db
            .iter()
            .all(|c| c.len() == 36 && c.is_self_dual() && min_distance(c, DistanceMode::Auto, None).unwrap() == 8);
    let run = run_pipeline(&db, &PipelineConfig::new(72, 16)).unwrap();
    let counts = [run.library.len(), run.reps.len(), run.partition.len(), run.survivors.len()];
    let shapes_ok = run
        .survivors
        .iter()
        .all(|s| s.code.dim() == 26 && s.min_distance == 16 && s.pair_dim == 10);
    let profiles_ok = run
        .profiles
        .iter()
        .flatten()
        .all(|p| p.triple_dim == 5 && p.pair_dims[0] == 10);
    let table: Vec<(usize, usize, usize)> = run.table.rows.iter().copied().collect();
    let want_table = vec![(5, 9, 9), (5, 9, 10), (6, 9, 9), (6, 9, 10), (6, 9, 11), (6, 10, 10), (6, 10, 11)];
    check(
        ingest_ok
            && counts == [14, 242, 40, 22]
            && shapes_ok
            && profiles_ok
            && table == want_table
            && run.verdict == Verdict::Contradiction,
        format!("counts {counts:?}, table {table:?}, verdict {}", run.verdict),
    )
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "algebra identities", limit: Duration::from_secs(5), run: algebra },
        Criterion { id: 2, name: "distance oracle", limit: Duration::from_secs(60), run: distance_oracle },
        Criterion { id: 3, name: "e8 suite", limit: Duration::from_secs(60), run: e8_suite },
        Criterion { id: 4, name: "Golay distance", limit: Duration::from_secs(10), run: golay },
        Criterion { id: 5, name: "fixed-code structure", limit: Duration::from_secs(30), run: fixed_structure },
        Criterion { id: 6, name: "orbit representatives", limit: Duration::from_secs(60), run: lemma_rep },
        Criterion { id: 7, name: "desk-scale end-to-end", limit: Duration::from_secs(60), run: end_to_end },
        Criterion { id: 8, name: "full-scale reproduction", limit: Duration::from_secs(12 * 3600), run: full_scale },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let late = took > c.limit;
        let (tag, detail) = match outcome {
            Outcome::Pass(d) if !late => ("PASS", d),
            Outcome::Pass(d) | Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Outcome::Skip(d) => ("SKIP", d),
        };
        println!(
            "criterion {} {tag}: {} | {detail} | {:.2}s of {}s",
            c.id,
            c.name,
            took.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
