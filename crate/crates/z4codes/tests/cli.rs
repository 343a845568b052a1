//! End-to-end tests of the `z4codes` binary: construct/analyze/verify/graph
//! pipelines, exit codes, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_z4codes"))
}

fn work_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("z4codes-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str], dir: &PathBuf) -> Output {
    binary()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn construct_yk_is_deterministic_and_analyzable() {
    let dir = work_dir("yk");
    let out = run(&["construct", "yk", "--k", "2", "-o", "y2.z4m"], &dir);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("w2 = 8"));
    let bytes = std::fs::read_to_string(dir.join("y2.z4m")).unwrap();
    assert_eq!(bytes, "2 6\n1 1 1 1 0 2\n0 1 2 3 1 1\n");

    let out = run(&["analyze", "y2.z4m", "--json", "y2.json"], &dir);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("min Lee distance:      6"));
    assert!(text.contains("Plotkin-optimal:       yes"));
    assert!(text.contains("projective:            yes"));
    assert!(text.contains("t=2"));
    let json = std::fs::read_to_string(dir.join("y2.json")).unwrap();
    assert_eq!(
        json,
        "{\"n\":6,\"k1\":2,\"k2\":0,\"size\":16,\"dL\":6,\
         \"distribution\":{\"0\":1,\"6\":12,\"8\":3},\
         \"plotkinBound\":6,\"plotkinOptimal\":true,\
         \"projective\":true,\"projectiveMethod\":\"both\",\
         \"weightClass\":\"two-weight\",\"weights\":[6,8],\
         \"family\":{\"t\":2,\"w1\":6,\"w2\":8,\"Aw1\":12,\"Aw2\":3},\
         \"su1\":{\"q\":2,\"l\":4,\"m\":2},\"grayLinear\":null}"
    );
}

#[test]
fn su2_example_bytes_are_frozen() {
    let dir = work_dir("su2");
    let out = run(&["construct", "su2-example", "-o", "s.z4m"], &dir);
    assert!(out.status.success());
    let bytes = std::fs::read_to_string(dir.join("s.z4m")).unwrap();
    assert_eq!(
        bytes,
        "3 14\n\
         1 0 0 3 3 3 2 0 0 3 1 2 3 3\n\
         0 1 0 2 1 3 0 1 3 2 0 1 1 1\n\
         0 0 1 2 2 2 3 1 1 1 1 2 1 3\n"
    );
    let out = run(&["analyze", "s.z4m"], &dir);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Plotkin-optimal:       no"));
    assert!(text.contains("optimal family:        not a member"));
    assert!(text.contains("binary image family:   none"));
}

#[test]
fn family_file_carries_provenance_comment_and_round_trips() {
    let dir = work_dir("family");
    let out = run(
        &["construct", "family", "--k1", "2", "--k2", "1", "--t", "2", "-o", "f.z4m"],
        &dir,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let bytes = std::fs::read_to_string(dir.join("f.z4m")).unwrap();
    assert!(bytes.starts_with("# family k1=2 k2=1 t=2\n3 12\n"));

    // Round trip: the report computed through the CLI equals the report
    // computed in-memory on the parsed file, byte for byte.
    let out = run(&["analyze", "f.z4m", "--json", "f.json"], &dir);
    assert!(out.status.success(), "{}", stderr(&out));
    let cli_json = std::fs::read_to_string(dir.join("f.json")).unwrap();
    let matrix = z4codes::read_z4m(&bytes).unwrap();
    let form = matrix.standardize().unwrap();
    let config = z4codes::RunConfig::default();
    let report = z4codes::parallel::analyze_parallel(&form, &config, false, None).unwrap();
    assert_eq!(cli_json, z4codes::report::report_json(&report));
}

#[test]
fn augment_writes_the_lengthened_code() {
    let dir = work_dir("augment");
    run(&["construct", "yk", "--k", "2", "-o", "y2.z4m"], &dir);
    let out = run(
        &["construct", "augment", "--input", "y2.z4m", "--mode", "full-row", "-o", "a.z4m"],
        &dir,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("(3 x 24)"));
    assert!(text.contains("predicted distribution: 0:1  24:60  32:3"));
    let out = run(&["analyze", "a.z4m"], &dir);
    assert!(stdout(&out).contains("weight distribution:   0:1  24:60  32:3"));
}

#[test]
fn oneweight_is_constant_weight() {
    let dir = work_dir("oneweight");
    let out = run(
        &["construct", "oneweight", "--k1", "1", "--k2", "1", "-o", "ow.z4m"],
        &dir,
    );
    assert!(out.status.success());
    let out = run(&["analyze", "ow.z4m"], &dir);
    let text = stdout(&out);
    assert!(text.contains("weight class:          one-weight"));
    assert!(text.contains("weight distribution:   0:1  8:7"));
}

#[test]
fn enumerate_tabulates_and_realizes() {
    let dir = work_dir("enumerate");
    let out = run(&["enumerate", "--k1", "2", "--k2", "1", "--realize"], &dir);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("8           16               30            1"));
    assert!(text.contains("12           16               28            3"));
    assert!(text.contains("t=1: realized and verified"));
    assert!(text.contains("t=2: realized and verified"));

    let out = run(&["enumerate", "--k1", "0", "--k2", "5"], &dir);
    assert!(out.status.success());
    assert!(stdout(&out).contains("no family members"));

    let out = run(&["enumerate", "--k1", "0", "--k2", "1"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_every_identity() {
    let dir = work_dir("verify");
    run(&["construct", "yk", "--k", "2", "-o", "y2.z4m"], &dir);
    let out = run(&["verify", "y2.z4m"], &dir);
    assert!(out.status.success());
    let text = stdout(&out);
    for check in [
        "unit-column-sum",
        "total-weight-sum",
        "even-subgroup-column-sum",
        "coset-column-sum",
        "even-subgroup-code-sum",
        "coset-code-sum",
        "two-weight-quadratic",
    ] {
        assert!(text.contains(check), "missing {check} in:\n{text}");
    }
    assert!(text.contains("result: all ok"));

    // A matrix with a unit-free column: the code-sum identities skip with a
    // reason instead of failing.
    std::fs::write(dir.join("evencol.z4m"), "1 2\n1 2\n").unwrap();
    let out = run(&["verify", "evencol.z4m"], &dir);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("skip"));
    assert!(text.contains("result: all ok"));
}

#[test]
fn graph_verifies_and_exports() {
    let dir = work_dir("graph");
    run(&["construct", "yk", "--k", "2", "-o", "y2.z4m"], &dir);
    let out = run(&["graph", "y2.z4m", "--check-srg", "--export", "y2.edges"], &dir);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("16 vertices, degree 12, 96 edges"));
    assert!(text.contains("SRG(16, 12, 8, 12)"));
    assert!(text.contains("K_{4 x 4}"));
    assert!(text.contains("family claim (t = 2): graph matches"));
    let edges = std::fs::read_to_string(dir.join("y2.edges")).unwrap();
    assert_eq!(edges.lines().count(), 96);
    assert!(edges.starts_with("0 "));

    run(&["construct", "su2-example", "-o", "s.z4m"], &dir);
    let out = run(&["graph", "s.z4m", "--check-srg", "--json", "s.json"], &dir);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("complete multipartite: no"));
    let json = std::fs::read_to_string(dir.join("s.json")).unwrap();
    assert!(json.starts_with("{\"isSrg\":true,\"params\":{\"v\":64,\"k\":28,\"lambda\":12,\"mu\":12}"));
    assert!(json.contains("\"multipartite\":null"));
}

#[test]
fn exit_codes_distinguish_failure_kinds() {
    let dir = work_dir("exitcodes");
    // Parse error -> 2, with line and column in the message.
    std::fs::write(dir.join("bad.z4m"), "1 3\n0 1 7\n").unwrap();
    let out = run(&["analyze", "bad.z4m"], &dir);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2, column 5"));
    // Missing file -> 3.
    let out = run(&["analyze", "missing.z4m"], &dir);
    assert_eq!(out.status.code(), Some(3));
    // Unknown flag -> 2 (clap usage error).
    let out = run(&["analyze", "--no-such-flag"], &dir);
    assert_eq!(out.status.code(), Some(2));
    // Empty file -> 2.
    std::fs::write(dir.join("empty.z4m"), "").unwrap();
    let out = run(&["analyze", "empty.z4m"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn worker_count_does_not_change_report_bytes() {
    let dir = work_dir("workers");
    run(
        &["construct", "family", "--k1", "2", "--k2", "1", "--t", "1", "-o", "f.z4m"],
        &dir,
    );
    let mut outputs = Vec::new();
    for workers in ["1", "4"] {
        let out = binary()
            .args(["analyze", "f.z4m", "--json", "f.json"])
            .env("Z4CODES_THREADS", workers)
            .current_dir(&dir)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", stderr(&out));
        outputs.push((stdout(&out), std::fs::read_to_string(dir.join("f.json")).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);

    // An invalid override is a usage error.
    let out = binary()
        .args(["analyze", "f.z4m"])
        .env("Z4CODES_THREADS", "zero")
        .current_dir(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
