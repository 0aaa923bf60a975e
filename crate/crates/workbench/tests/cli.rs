use std::process::Command;

use dade_workbench::run_args;
use serde_json::Value;

fn dade(args: &[&str]) -> dade_workbench::Outcome {
    run_args(std::iter::once("dade").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&dade(&full).stdout).unwrap()
}

#[test]
fn dade_bounds_of_the_symmetric_group() {
    let out = dade(&["dade-bounds", "preset:symmetric:3", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "lower C/C_b: Z/2\nupper C/C_ba+: Z/4\ntag: exact_upper\n");
    let v = json(&["dade-bounds", "preset:symmetric:3", "3"]);
    assert_eq!(v["schema"], "dade-workbench/1");
    assert_eq!(v["lower"]["invariant_factors"], serde_json::json!([2]));
    assert_eq!(v["upper"]["invariant_factors"], serde_json::json!([4]));
    assert_eq!(v["pclass_order"], serde_json::json!(["1", "C3"]));
}

#[test]
fn tensor_induction_from_the_sylow_subgroup() {
    let out = dade(&["jnd", "preset:symmetric:3", "3", "[S/S]+[S/1]"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("[G/G]+3[G/C2]+[G/1]"));
    let v = json(&["jnd", "preset:symmetric:3", "3", "1*[S/S] + 1*[S/1]"]);
    assert_eq!(v["result"]["multiplicities"], serde_json::json!([1, 3, 0, 1]));
    assert_eq!(v["class_order"], serde_json::json!(["1", "C2", "C3", "S3"]));
}

#[test]
fn borel_smith_failure_names_the_dyadic_section() {
    let out = dade(&["check-bs", "preset:cyclic:4", "2", "2,1,1"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("FAIL\nBS-iii at 1 < C2 < C4"), "{}", out.stdout);
    let v = json(&["check-bs", "preset:cyclic:4", "2", "2,1,1"]);
    assert_eq!(v["passed"], false);
    assert_eq!(v["failures"][0]["label"], "BS-iii");
    assert_eq!(dade(&["check-bs", "preset:cyclic:4", "2", "2,2,0"]).code, 0);
}

#[test]
fn exit_codes_separate_usage_from_domain_errors() {
    assert_eq!(dade(&["frobnicate"]).code, 2);
    assert_eq!(dade(&["check-bs", "preset:symmetric:3", "4", "1"]).code, 2);
    assert_eq!(dade(&["check-bs", "preset:symmetric:3", "3", "1,2,3"]).code, 2);
    assert_eq!(dade(&["classes", "preset:nosuch:3"]).code, 2);
    assert_eq!(dade(&["classes", "/nonexistent/group.txt"]).code, 2);
    let bound = dade(&["--max-order", "10", "classes", "preset:symmetric:4"]);
    assert_eq!(bound.code, 1);
    assert!(bound.stderr.contains("error"), "{}", bound.stderr);
    assert_eq!(dade(&["realize", "preset:symmetric:3", "3", "2,0"]).code, 1);
    assert_eq!(dade(&["--max-cells", "10", "moore", "--factors", "[G/1];[G/1]", "--p", "3"]).code, 1);
}

#[test]
fn every_example_reproduces_except_the_frobenius_decomposition() {
    for id in ["s3-syzygy-square", "s4-jnd", "d8-not-dade", "s3-end-not-dade", "semidirect-table", "pgroup-dade"] {
        let out = dade(&["reproduce", id]);
        assert_eq!(out.code, 0, "{id}:\n{}", out.stdout);
        assert!(out.stdout.starts_with(&format!("{id}: PASS")));
    }
    let v = json(&["reproduce", "s3-syzygy-square"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["quantity"] == "order in the Dade group" && c["observed"] == "4"));
    assert!(checks.iter().any(|c| c["quantity"] == "sign multiplicity in M⊗M" && c["observed"] == "1"));
}

#[test]
fn frobenius_decomposition_reports_its_diff() {
    let out = dade(&["reproduce", "c7c3-jnd"]);
    assert_eq!(out.code, 1);
    let v = json(&["reproduce", "c7c3-jnd"]);
    let observed: Vec<(&str, &str, bool)> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["expected"].as_str().unwrap(), c["observed"].as_str().unwrap(), c["ok"].as_bool().unwrap()))
        .collect();
    assert_eq!(observed, vec![("1", "1", true), ("3", "1", false), ("15", "15", true), ("7", "775", false), ("16384", "16384", true)]);
}

#[test]
fn moore_report_on_a_join_of_transposition_orbits() {
    let out = dade(&["moore", "--factors", "[G/C2];[G/C2]", "--p", "3"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v = json(&["moore", "preset:symmetric:3", "--factors", "[G/C2];[G/C2]", "--p", "3"]);
    assert_eq!(v["case"], "sylow-free");
    assert_eq!(v["top_dim"], 4);
    assert_eq!(v["dim_function"], serde_json::json!([2, 0]));
    assert_eq!(v["homology"][0]["reduced_betti_from_minus_one"], serde_json::json!([0, 0, 4]));
}

#[test]
fn sign_is_not_orientable_but_its_double_is_realized() {
    let v = json(&["orientable", "preset:symmetric:3", "3", "sign"]);
    assert_eq!(v["orientable"], false);
    assert_eq!(v["witness"]["det"], "-1");
    let v = json(&["orientable", "preset:symmetric:3", "3", "2*reduced:[G/C2]"]);
    assert_eq!(v["orientable"], true);
    assert_eq!(v["dim_function"], serde_json::json!([4, 0]));
    let v = json(&["realize", "preset:symmetric:3", "3", "4,0"]);
    assert_eq!(v["realized"], true);
    assert_eq!(v["psi_zero"], true);
    assert_eq!(v["dim_function"], serde_json::json!([4, 0]));
}

#[test]
fn module_files_round_trip_through_the_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let path = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let g = "preset:symmetric:3";
    assert_eq!(dade(&["modrep-build", g, "3", "delta", "--gset", "[G/C2]", "--out", &path("d.rep")]).code, 0);
    assert_eq!(dade(&["modrep-combine", g, "--op", "tensor", &path("d.rep"), &path("d.rep"), "--out", &path("dd.rep")]).code, 0);
    let info = json(&["modrep-info", g, &path("dd.rep")]);
    assert_eq!(info["dim"], 4);
    assert_eq!(info["jordan"][0]["blocks"], serde_json::json!([1, 3]));
    let verdict = json(&["modrep-dade", g, &path("d.rep")]);
    assert_eq!(verdict["dade"], true);
    assert_eq!(verdict["capped"], true);
    assert_eq!(json(&["modrep-order", g, &path("d.rep")])["order"], 4);
    assert_eq!(dade(&["modrep-order", g, &path("d.rep"), "--bound", "3"]).code, 1);
    assert_eq!(dade(&["modrep-build", g, "3", "perm", "--out", &path("x.rep")]).code, 2);
    // Same module read against another group.
    assert_eq!(dade(&["modrep-info", "preset:cyclic:3", &path("d.rep")]).code, 2);
    let perm = path("p.rep");
    assert_eq!(dade(&["modrep-build", g, "3", "perm", "--gset", "[G/C3]", "--out", &perm]).code, 0);
    assert_eq!(dade(&["modrep-combine", g, "--op", "end", &perm, "--out", &path("e.rep")]).code, 0);
    assert_eq!(json(&["modrep-info", g, &path("e.rep")])["linear_multiplicities"], serde_json::json!([2, 2]));
    assert_eq!(json(&["modrep-dade", g, &perm])["dade"], false);
}

#[test]
fn group_files_are_read_in_cycle_notation() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s3.txt");
    std::fs::write(&file, "# symmetric group on three points\n(0 1 2)\n(0,1)\n").unwrap();
    let from_file = json(&["classes", file.to_str().unwrap()]);
    let preset = json(&["classes", "preset:symmetric:3"]);
    assert_eq!(from_file["classes"], preset["classes"]);
    std::fs::write(&file, "(0 1 2\n").unwrap();
    assert_eq!(dade(&["classes", file.to_str().unwrap()]).code, 2);
}

#[test]
fn machine_output_is_byte_identical_across_runs() {
    let bin = env!("CARGO_BIN_EXE_dade");
    for args in [
        vec!["--json", "marks", "preset:symmetric:4"],
        vec!["--json", "moore", "--factors", "[G/1];[G/C2]", "--p", "3", "--seed", "7"],
        vec!["--json", "lattice", "preset:dihedral:8", "2", "--kind", "cb"],
        vec!["--json", "reproduce", "d8-not-dade"],
    ] {
        let runs: Vec<Vec<u8>> = (0..2).map(|_| Command::new(bin).args(&args).output().unwrap().stdout).collect();
        assert!(!runs[0].is_empty());
        assert_eq!(runs[0], runs[1], "{args:?}");
    }
}

#[test]
fn the_binary_forwards_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dade");
    let ok = Command::new(bin).args(["psi", "preset:symmetric:3", "3", "4,0"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "quotient: Z/4\nresidues: [0]\nzero: true\n");
    let fail = Command::new(bin).args(["check-artin", "preset:symmetric:3", "3", "2,0", "--oriented"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = Command::new(bin).args(["lattice", "preset:symmetric:3", "3"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
