//! End-to-end runs of the `liecheck` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn liecheck(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_liecheck"));
    cmd.args(args).env_remove("LIECHECK_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("LIECHECK_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_all_quick_passes() {
    let out = liecheck(&["verify-all", "--quick"], None);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = report(&out);
    assert_eq!(v["passed"], true);
    assert!(v["result"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn e8_search_is_empty_and_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = liecheck(
        &[
            "search",
            "two-root-sum",
            "--type",
            "E8",
            "--p",
            "7",
            "--r",
            "1",
            "--lambda",
            "table2:short",
            "--out",
            dir.path().to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    let rows = v["result"]["results"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["outcome"]["solutions"].as_array().unwrap().len(), 0);
    assert_eq!(v["manifest"]["table1"]["admissible"], true);
    let written: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("search-two-root-sum.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(written["manifest"]["digest"], v["manifest"]["digest"]);
}

#[test]
fn linkage_check_reports_witness() {
    let out = liecheck(
        &[
            "linkage", "check", "--type", "A2", "--p", "5", "--lambda", "0,0", "--mu", "3,3",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["result"]["linked"], true);
    assert!(v["result"]["witness"].is_object());
}

#[test]
fn typec_table_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = liecheck(
        &[
            "typec",
            "table",
            "--p",
            "3",
            "--n-min",
            "12",
            "--n-max",
            "12",
            "--provider",
            "c12p3",
            "--out",
            dir.path().to_str().unwrap(),
        ],
        None,
    );
    let csv = std::fs::read_to_string(dir.path().join("typec-table.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,j_list,undetermined"));
    assert!(csv.lines().any(|l| l == "12,6,none"), "{csv}");
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn second_run_hits_the_cache() {
    let cache = tempfile::tempdir().unwrap();
    let args = ["linkage", "lemma-b", "--rank", "4", "--p", "7"];
    let first = report(&liecheck(&args, Some(cache.path())));
    let second = report(&liecheck(&args, Some(cache.path())));
    assert_eq!(first["manifest"]["cache_hit"], false);
    assert_eq!(second["manifest"]["cache_hit"], true);
    assert_eq!(first["manifest"]["digest"], second["manifest"]["digest"]);
    assert_eq!(first["result"], second["result"]);

    let bypass = report(&liecheck(
        &[
            "--no-cache",
            "linkage",
            "lemma-b",
            "--rank",
            "4",
            "--p",
            "7",
        ],
        Some(cache.path()),
    ));
    assert_eq!(bypass["manifest"]["cache_hit"], false);
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let cache = tempfile::tempdir().unwrap();
    let args = ["rootsys", "info", "--type", "G2"];
    let first = report(&liecheck(&args, Some(cache.path())));
    for entry in std::fs::read_dir(cache.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{\"tampered\": true}").unwrap();
    }
    let again = report(&liecheck(&args, Some(cache.path())));
    assert_eq!(again["manifest"]["cache_hit"], false);
    assert_eq!(again["manifest"]["digest"], first["manifest"]["digest"]);
    let third = report(&liecheck(&args, Some(cache.path())));
    assert_eq!(third["manifest"]["cache_hit"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["rootsys", "info", "--type", "Q3"],
        vec!["rootsys", "info", "--type", "B1"],
        vec![
            "linkage", "check", "--type", "A2", "--p", "5", "--lambda", "1,x", "--mu", "0,0",
        ],
        vec![
            "linkage", "check", "--type", "A2", "--p", "6", "--lambda", "1,0", "--mu", "0,0",
        ],
        vec!["no-such-command"],
    ] {
        let out = liecheck(&args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failed_check_exits_1() {
    // G2 at p = 5 lies outside the admissible range and the fixed-point bound fails there.
    let out = liecheck(
        &[
            "search",
            "fixed-points",
            "--type",
            "G2",
            "--p",
            "5",
            "--lambda",
            "table2:long",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["manifest"]["table1"]["admissible"], false);
}
