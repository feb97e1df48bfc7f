//! End-to-end tests of the `cliquepart` binary: flag handling, exit
//! codes, file outputs, and the echoed-config reproducibility contract.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cliquepart"))
}

fn run(args: &[&str], cwd: &Path) -> Output {
    bin().args(args).current_dir(cwd).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Triangle with w01 = 1, w12 = 1, w02 = -1.
const TRIANGLE: &str = "cpp 1 3 custom -\n0 1 1\n0 2 -1\n1 2 1\n";

#[test]
fn gen_writes_named_deterministic_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["gen", "random", "30", "--seed", "42", "--count", "10"], dir.path());
    assert!(out.status.success(), "{}", stderr_str(&out));
    assert_eq!(stdout_str(&out).lines().count(), 10);

    let first = std::fs::read(dir.path().join("random_n30_s42.cpp")).unwrap();
    let last = std::fs::read(dir.path().join("random_n30_s51.cpp")).unwrap();
    assert_ne!(first, last);

    // re-running overwrites with identical bytes
    let rerun = run(&["gen", "random", "30", "--seed", "42", "--count", "10"], dir.path());
    assert!(rerun.status.success());
    assert_eq!(std::fs::read(dir.path().join("random_n30_s42.cpp")).unwrap(), first);
}

#[test]
fn gen_rejects_bad_cluster_count() {
    let dir = tempfile::tempdir().unwrap();
    let ok = run(&["gen", "structured", "30", "--clusters", "5"], dir.path());
    assert!(ok.status.success());
    let bad = run(&["gen", "structured", "30", "--clusters", "7"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr_str(&bad).contains("does not divide"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = run(&["gen", "bogus", "10"], dir.path());
    assert_eq!(unknown.status.code(), Some(2));
    let missing = run(&["solve"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn count_reports_all_kinds_and_expectations() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "random", "30", "--seed", "1"], dir.path());
    let out = run(
        &["count", "random_n30_s1.cpp", "--kinds", "all", "--expected"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout_str(&out);
    let header = text.lines().next().unwrap();
    // 4 meta columns + 8 kinds + 8 expected
    assert_eq!(header.split(',').count(), 20);
    let row = text.lines().nth(1).unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[4], "12180"); // full formulation count
    assert!(text.contains("9135")); // expected strict-reduction count
}

#[test]
fn solve_triangle_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("tri.cpp"), TRIANGLE).unwrap();
    let out = run(&["solve", "tri.cpp", "--kind", "P", "--engine", "oracle"], dir.path());
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("value: 1"), "{text}");
    assert!(text.contains("status: optimal"));
}

#[test]
fn solve_planted_clusters_with_bnb() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "structured", "30", "--p-in", "1/1", "--seed", "3"], dir.path());
    let out = run(
        &["solve", "structured_n30_s3.cpp", "--kind", "pFRP", "--engine", "bnb"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("value: 75"));
}

#[test]
fn solve_rejects_oversized_vector_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "random", "30", "--seed", "1"], dir.path());
    let out = run(
        &["solve", "random_n30_s1.cpp", "--kind", "P", "--engine", "vectors"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("n <= 7"));
}

#[test]
fn solve_json_output_parses() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("tri.cpp"), TRIANGLE).unwrap();
    let out = run(
        &["solve", "tri.cpp", "--kind", "pFRP", "--engine", "vectors", "--all", "--format", "json"],
        dir.path(),
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["value"], 1);
    assert_eq!(v["optima"], 2);
    assert_eq!(v["status"], "optimal");
}

#[test]
fn verify_fuzz_passes_across_families() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["random", "sparse", "modularity"] {
        let out = run(&["verify", "--fuzz", family, "5", "20", "42"], dir.path());
        assert_eq!(out.status.code(), Some(0), "{family}: {}", stdout_str(&out));
        assert!(stdout_str(&out).contains("20/20 pass"), "{family}");
    }
    let jobs = run(
        &["verify", "--fuzz", "random", "6", "12", "7", "--jobs", "4"],
        dir.path(),
    );
    assert!(stdout_str(&jobs).contains("12/12 pass"));
}

#[test]
fn verify_experimental_flag_logs_conjecture() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["verify", "--fuzz", "sparse", "5", "10", "0", "--experimental"],
        dir.path(),
    );
    // conjecture findings never flip the exit code
    assert_eq!(out.status.code(), Some(0), "{}", stdout_str(&out));
    assert!(stdout_str(&out).contains("10/10 pass"));
}

#[test]
fn verify_reads_instance_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("tri.cpp"), TRIANGLE).unwrap();
    let out = run(&["verify", "tri.cpp"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("1/1 pass"));
}

#[test]
fn verify_rejects_oversized_files() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "random", "8", "--seed", "1"], dir.path());
    let out = run(&["verify", "random_n8_s1.cpp"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("n <= 7"));
}

#[test]
fn export_writes_one_file_per_kind() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("tri.cpp"), TRIANGLE).unwrap();
    let out = run(&["export", "tri.cpp", "--kinds", "pFRP,P", "--out", "lp"], dir.path());
    assert!(out.status.success());
    let reduced = std::fs::read_to_string(dir.path().join("lp/tri__pfrp.lp")).unwrap();
    assert_eq!(reduced.matches("\n t_").count(), 1);
    let full = std::fs::read_to_string(dir.path().join("lp/tri__p.lp")).unwrap();
    assert_eq!(full.matches("\n t_").count(), 3);

    let rerun = run(&["export", "tri.cpp", "--kinds", "pFRP,P", "--out", "lp"], dir.path());
    assert!(rerun.status.success());
    assert_eq!(
        std::fs::read_to_string(dir.path().join("lp/tri__pfrp.lp")).unwrap(),
        reduced
    );
}

#[test]
fn bench_rows_match_count_and_share_values() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "structured", "12", "--clusters", "3", "--seed", "5", "--count", "2"], dir.path());
    std::fs::write(
        dir.path().join("manifest.txt"),
        "structured_n12_s5.cpp\nstructured_n12_s6.cpp\n",
    )
    .unwrap();
    let out = run(
        &["bench", "manifest.txt", "--kinds", "mRP,pCP,pFRP", "--engine", "bnb"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr_str(&out));
    let text = stdout_str(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.contains("optimal")));

    // per instance, the repaired value is identical across kinds
    for stem in ["structured_n12_s5", "structured_n12_s6"] {
        let values: Vec<&str> = rows
            .iter()
            .filter(|r| r.contains(stem))
            .map(|r| r.split(',').nth(8).unwrap())
            .collect();
        assert_eq!(values.len(), 3);
        assert!(values.windows(2).all(|w| w[0] == w[1]), "{values:?}");
    }

    // counts column agrees with the count subcommand
    let count_out = run(
        &["count", "structured_n12_s5.cpp", "--kinds", "mRP,pCP,pFRP"],
        dir.path(),
    );
    let count_row = stdout_str(&count_out).lines().nth(1).unwrap().to_string();
    let counts: Vec<String> =
        count_row.split(',').skip(4).take(3).map(str::to_string).collect();
    for (row, count) in rows.iter().filter(|r| r.contains("structured_n12_s5")).zip(&counts) {
        assert_eq!(row.split(',').nth(5).unwrap(), count);
    }
}

#[test]
fn bench_empty_manifest_is_header_only() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("manifest.txt"), "# nothing here\n").unwrap();
    let out = run(&["bench", "manifest.txt", "--engine", "bnb"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout_str(&out).lines().count(), 1);
}

#[test]
fn echoed_config_reproduces_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(
        &["gen", "sparse", "10", "--seed", "11", "--count", "3", "--out", "a"],
        dir.path(),
    );
    assert!(first.status.success());
    let echo = stderr_str(&first);
    let config_line = echo
        .lines()
        .find_map(|l| l.strip_prefix("config: "))
        .expect("config echo present")
        .to_string();

    // replay the echoed config verbatim, into a second directory
    let replay_args: Vec<String> = config_line
        .split(' ')
        .map(|t| if t == "a" { "b".to_string() } else { t.to_string() })
        .collect();
    let replay = bin()
        .args(&replay_args)
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(replay.status.success(), "{}", stderr_str(&replay));

    for seed in 11..14 {
        let a = std::fs::read(dir.path().join(format!("a/sparse_n10_s{seed}.cpp"))).unwrap();
        let b = std::fs::read(dir.path().join(format!("b/sparse_n10_s{seed}.cpp"))).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn count_json_mirrors_csv_schema() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "sparse", "8", "--seed", "2"], dir.path());
    let csv_out = run(&["count", "sparse_n8_s2.cpp", "--kinds", "mRP"], dir.path());
    let json_out = run(
        &["count", "sparse_n8_s2.cpp", "--kinds", "mRP", "--format", "json"],
        dir.path(),
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&json_out)).unwrap();
    let obj = &parsed.as_array().unwrap()[0];
    let csv_text = stdout_str(&csv_out);
    let (header, row) = {
        let mut lines = csv_text.lines();
        (lines.next().unwrap(), lines.next().unwrap())
    };
    for (key, value) in header.split(',').zip(row.split(',')) {
        assert_eq!(obj[key], serde_json::Value::String(value.to_string()));
    }
}
