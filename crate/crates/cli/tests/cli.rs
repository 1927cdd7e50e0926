//! End-to-end tests of the batch runner: exit codes, report schema shape,
//! and byte-level reproducibility of report bodies.

use std::process::Command;

fn pform() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pform"))
}

#[test]
fn list_prints_all_suites() {
    let out = pform().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for suite in [
        "appendix-a",
        "appendix-b",
        "closure",
        "relations",
        "tower",
        "kinematics",
        "superfield",
        "all",
    ] {
        assert!(text.contains(suite), "missing suite {suite}");
    }
    // Check ids are listed with the suites.
    for id in ["ALGEBRA", "EPEP6", "FTR4", "QCHI_CONSIST", "MASTER6"] {
        assert!(text.contains(id), "missing check id {id}");
    }
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = pform()
        .args(["verify", "--suite", "nope"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_options_are_usage_errors() {
    let out = pform()
        .args(["verify", "--suite", "appendix-b", "--jobs", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = pform()
        .args(["verify", "--suite", "appendix-b", "--jet-order", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn appendix_b_passes_with_schema_compliant_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = pform()
        .args([
            "verify",
            "--suite",
            "appendix-b",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();

    // Required fields of the published schema.
    for field in [
        "config",
        "representation_fingerprint",
        "orientation_note",
        "entries",
        "total_checks",
        "passed",
        "failed",
        "timing_ms",
    ] {
        assert!(report.get(field).is_some(), "missing field {field}");
    }
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 9);
    for e in entries {
        for field in ["id", "pass", "informational", "summary"] {
            assert!(e.get(field).is_some(), "entry missing {field}");
        }
        assert_eq!(e["pass"], true);
    }
    assert_eq!(report["failed"], 0);
    // Entries are sorted by id.
    let ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn report_bodies_are_reproducible() {
    // Two runs with the same config must agree byte for byte once the
    // timing section is stripped.
    let render = || {
        let out = pform()
            .args(["verify", "--suite", "kinematics", "--format", "json"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value =
            serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(render(), render());
}

#[test]
fn markdown_is_derived_from_the_same_data() {
    let out = pform()
        .args(["verify", "--suite", "appendix-b", "--format", "markdown"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| appendix-b/FTR4 | pass |"));
    assert!(text.contains("representation fingerprint"));
}
