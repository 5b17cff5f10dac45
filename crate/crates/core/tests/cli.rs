use std::path::Path;
use std::process::Command;

use fixglue::codes::{canonical_form, library};
use fixglue::io::{parse_db, run_cli_with, write_db, write_records, DbRecord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fixglue").chain(args.iter().copied());
    let code = run_cli_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn db_file(dir: &Path, name: &str, codes: &[(&str, fixglue::codes::LinearCode)]) -> String {
    let path = dir.join(name);
    let recs: Vec<DbRecord> = codes
        .iter()
        .map(|(n, c)| DbRecord {
            name: Some(n.to_string()),
            code: c.clone(),
        })
        .collect();
    write_records(&recs, &path).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn database_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("random.db");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let codes: Vec<_> = (0..10)
        .map(|i| library::random_code(12 + i, 3 + i / 2, &mut rng))
        .collect();
    write_db(&codes, &path).unwrap();
    let back = parse_db(&path).unwrap();
    assert_eq!(back.len(), codes.len());
    for (a, b) in codes.iter().zip(&back) {
        assert_eq!(canonical_form(a).unwrap(), canonical_form(b).unwrap());
    }
}

#[test]
fn frame_prints_cycles() {
    let (code, out, _) = run(&["frame", "--n", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("alpha = (1,2)(3,4)(5,6)(7,8)"));
    assert!(out.contains("beta  = (1,3)(2,4)(5,7)(6,8)"));
    assert!(out.contains("gamma = (1,5)(2,6)(3,7)(4,8)"));
}

#[test]
fn selftest_is_consistent() {
    let (code, out, _) = run(&["selftest"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict CONSISTENT"), "{out}");
}

#[test]
fn code_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let db = db_file(dir.path(), "e8.db", &[("e8", library::e8()), ("rep8", library::repetition(8))]);
    let (code, out, _) = run(&["mindist", &db]);
    assert_eq!(code, 0);
    assert_eq!(out, "e8\t[8,4]\td=4\nrep8\t[8,1]\td=8\n");
    let (code, out, _) = run(&["mindist", &db, "--mode", "exhaustive", "--early-abort", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("e8\t[8,4]\td=4"));
    let (code, out, _) = run(&["aut", &db]);
    assert_eq!(code, 0);
    assert!(out.contains("e8\t|Aut| = 1344"));
    assert!(out.contains("rep8\t|Aut| = 40320"));
    let (code, out, _) = run(&["fixed", &db, "--perm", "(1,2)(3,4)(5,6)(7,8)"]);
    assert_eq!(code, 0);
    assert!(out.contains("e8\tdim C(sigma) = 3"), "{out}");
    assert!(out.contains("projection [4,3] not self-dual"));
    let (code, out, _) = run(&["orbit-reps", "--db", &db_file(dir.path(), "i2.db", &[("i2", library::i2(2))]), "--n", "8"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("library 1 representatives 3"), "{out}");
}

#[test]
fn errors_are_one_line_and_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.db");
    std::fs::write(&bad, "code 4 1\n1200\n").unwrap();
    let missing = dir.path().join("missing.db");
    let cases: Vec<Vec<String>> = vec![
        vec!["mindist".into(), missing.display().to_string()],
        vec!["mindist".into(), bad.display().to_string()],
        vec!["frame".into(), "--n".into(), "12".into()],
        vec!["frame".into(), "--bogus".into()],
        vec!["nope".into()],
        vec!["verify-paper".into(), "--db".into(), bad.display().to_string()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _, err) = run(&args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
    let (_, _, err) = run(&["mindist", bad.to_str().unwrap()]);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_paper_rejects_a_wrong_database() {
    let dir = tempfile::tempdir().unwrap();
    let db = db_file(dir.path(), "short.db", &[("e8", library::e8())]);
    let (code, _, err) = run(&["verify-paper", "--db", &db]);
    assert_eq!(code, 1);
    assert!(err.contains("41"), "{err}");
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let db = db_file(dir.path(), "lib.db", &[("e8", library::e8()), ("i2^4", library::i2(4))]);
    let mut reports = Vec::new();
    for threads in ["1", "1", "3"] {
        let path = dir.path().join(format!("report{}.json", reports.len()));
        let (code, _, err) = run(&[
            "glue-search", "--db", &db, "--n", "16", "--target-d", "4", "--threads", threads, "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{err}");
        reports.push(std::fs::read_to_string(&path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let json: Vec<serde_json::Value> = reports.iter().map(|r| serde_json::from_str(r).unwrap()).collect();
    assert_eq!(json[0]["survivors"], json[2]["survivors"]);
    assert_eq!(json[0]["run"]["threads"], 1);
    assert!(json[0]["run"].get("wall_time_ms").is_none());
    let counts = &json[0]["counts"];
    assert_eq!(counts["survivors"].as_u64().unwrap() as usize, json[0]["survivors"].as_array().unwrap().len());
    assert!(["CONSISTENT", "CONTRADICTION", "UNDETERMINED"].contains(&json[0]["verdict"].as_str().unwrap()));
}

#[test]
fn binary_reads_thread_count_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let db = db_file(dir.path(), "i2.db", &[("i2", library::i2(2))]);
    let report = dir.path().join("r.json");
    let status = Command::new(env!("CARGO_BIN_EXE_fixglue"))
        .args(["glue-search", "--db", &db, "--n", "8", "--target-d", "4", "--wall-time", "--report"])
        .arg(&report)
        .env("FIXGLUE_THREADS", "2")
        .output()
        .unwrap();
    assert!(status.status.success());
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["run"]["threads"], 2);
    assert!(json["run"]["wall_time_ms"].is_u64());
    let status = Command::new(env!("CARGO_BIN_EXE_fixglue")).arg("selftest").status().unwrap();
    assert_eq!(status.code(), Some(0));
}
