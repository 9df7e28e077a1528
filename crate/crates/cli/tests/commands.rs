use ribbonfold_cli::{run, sweep, Outcome, EXIT_CERTIFICATE, EXIT_INVALID, EXIT_LINK, EXIT_OK};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("ribbonfold").chain(args.iter().copied()))
}

fn json_out(args: &[&str]) -> Value {
    let o = cli(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn bound_examples() {
    assert_eq!(json_out(&["bound", "-p", "3", "-q", "2", "-r", "4", "-s", "2"])["rib_upper_bound"], 24);
    let v = json_out(&["bound", "-p", "5", "-q", "2", "-r", "3", "-s", "1"]);
    assert_eq!(v["rib_upper_bound"], 10);
    assert_eq!(v["case"], "REDUCED");
}

#[test]
fn exit_codes() {
    let link = cli(&["bound", "-p", "4", "-q", "2", "-r", "2", "-s", "1"]);
    assert_eq!(link.code, EXIT_LINK);
    let err: Value = serde_json::from_str(&link.stderr).unwrap();
    assert_eq!(err["error"], "link");
    assert_eq!(cli(&["bound", "-p", "3", "-q", "2", "-r", "9", "-s", "1"]).code, EXIT_INVALID);
    assert_eq!(cli(&["bound", "-p", "3", "-q", "2", "-r", "2", "-s", "0"]).code, EXIT_INVALID);
    assert_eq!(cli(&["bound", "-p", "3"]).code, EXIT_INVALID);
    assert_eq!(cli(&["bound", "-p", "3", "-q", "1", "-r", "2", "-s", "1"]).code, EXIT_INVALID);
    assert_eq!(cli(&["bound", "-p", "3", "-q", "1", "-r", "2", "-s", "1", "--permissive"]).code, EXIT_OK);
    assert_eq!(cli(&["plan", "-p", "3", "-q", "2", "-r", "2", "-s", "1", "--width", "0"]).code, EXIT_INVALID);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_INVALID);
}

#[test]
fn negative_inputs_normalise() {
    let v = json_out(&["bound", "-p", "3", "-q", "-2", "-r", "2", "-s", "-1"]);
    assert_eq!(v["params"]["s"], 1);
    assert_eq!(v["rib_upper_bound"], 10);
}

#[test]
fn plan_examples() {
    let v = json_out(&["plan", "-p", "3", "-q", "2", "-r", "2", "-s", "1"]);
    let bands: Vec<(u64, &str)> =
        v["bands"].as_array().unwrap().iter().map(|b| (b["weight"].as_u64().unwrap(), b["fold"].as_str().unwrap())).collect();
    assert_eq!(bands, vec![(1, "T1"), (2, "T3"), (2, "T4"), (1, "DIRECT")]);
    assert_eq!(v["bands"][2]["box"], 1);
    assert_eq!(v["length_over_w"], 10);

    let v = json_out(&["plan", "-p", "5", "-q", "2", "-r", "3", "-s", "2"]);
    assert!(v["bands"].as_array().unwrap().iter().any(|b| b["fold"] == "T3T4_COMBINED"));

    assert_eq!(json_out(&["plan", "-p", "3", "-q", "2", "-r", "1", "-s", "1"])["length_over_w"], 6);
    // the REDUCED construction still pays for the rolls on a single strand
    assert_eq!(json_out(&["plan", "-p", "3", "-q", "2", "-r", "1", "-s", "7"])["length_over_w"], 18);

    let v = json_out(&["plan", "-p", "5", "-q", "2", "-r", "3", "-s", "2", "--standard"]);
    assert_eq!(v["case"], "STANDARD");
    assert_eq!(v["length_over_w"], 22);
    assert_eq!(v["rib_upper_bound"], 16);
}

#[test]
fn plan_text() {
    let o = cli(&["plan", "-p", "3", "-q", "2", "-r", "4", "-s", "1", "--format", "text"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("EXTENDED"));
    assert!(o.stdout.contains("length/w = 16"));
    assert_eq!(cli(&["plan", "-p", "3", "-q", "2", "-r", "4", "-s", "1", "--format", "svg"]).code, EXIT_INVALID);
}

#[test]
fn render_writes_valid_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.svg");
    let path_str = path.to_str().unwrap();
    let o = cli(&["render", "-p", "3", "-q", "2", "-r", "2", "-s", "1", "--out", path_str]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let report: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(report["fold_lines_disjoint"], true);
    assert_eq!(report["crossings_consistent"], true);
    assert_eq!(report["measured_length_over_w"], "10");
    assert!(report["violations"].as_array().unwrap().is_empty());
    let first = std::fs::read(&path).unwrap();
    assert!(first.starts_with(b"<?xml"));

    let again = cli(&["render", "-p", "3", "-q", "2", "-r", "2", "-s", "1", "--out", path_str]);
    assert_eq!(again, o);
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn render_invalid_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.svg");
    let o = cli(&["render", "-p", "3", "-q", "2", "-r", "7", "-s", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(!path.exists());
    let o = cli(&["render", "-p", "6", "-q", "4", "-r", "2", "-s", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_LINK);
    assert!(!path.exists());
}

#[test]
fn render_to_stdout() {
    let o = cli(&["render", "-p", "5", "-q", "3", "-r", "6", "-s", "-2"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("<svg"));
    let o = cli(&["render", "-p", "5", "-q", "3", "-r", "6", "-s", "-2", "--format", "text"]);
    assert!(o.stdout.contains("fold lines disjoint: true"));
}

#[test]
fn verify_examples() {
    for args in [["-p", "3", "-q", "2", "-r", "2", "-s", "1"], ["-p", "5", "-q", "3", "-r", "2", "-s", "1"]] {
        let mut full = vec!["verify"];
        full.extend(args);
        let v = json_out(&full);
        for check in ["identity_check", "invariant_check", "route_check", "plan_length_check"] {
            assert_eq!(v[check]["status"], "pass", "{args:?} {check}");
        }
        assert_eq!(v["passed"], true);
    }
    let v = json_out(&["verify", "-p", "2", "-q", "3", "-r", "2", "-s", "1"]);
    assert_eq!(v["transforms"]["swapped_pq"], true);
    assert_eq!(v["invariant_check"]["status"], "pass");
}

#[test]
fn verify_skips_large_diagrams() {
    let v = json_out(&["verify", "-p", "11", "-q", "7", "-r", "9", "-s", "3"]);
    assert_eq!(v["route_check"]["status"], "skipped");
    assert_eq!(v["passed"], true);
}

#[test]
fn certificate_failure_code_is_distinct() {
    assert_ne!(EXIT_CERTIFICATE, EXIT_OK);
    assert_ne!(EXIT_CERTIFICATE, EXIT_INVALID);
}

#[test]
fn sweep_filters_links() {
    let v = json_out(&["sweep", "--range-p", "3:5", "--range-q", "2:3", "--range-r", "1:4", "--range-s", "1:2"]);
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        let (p, q) = (e["input"]["p"].as_i64().unwrap(), e["input"]["q"].as_i64().unwrap());
        assert_ne!((p, q), (4, 2));
        assert!(!(p == 3 && q == 3));
    }
    let skipped = v["skipped"].as_array().unwrap();
    assert!(skipped.iter().any(|s| s["input"]["p"] == 4 && s["input"]["q"] == 2 && s["reason"].as_str().unwrap().contains("gcd")));
    let hit = entries
        .iter()
        .find(|e| e["input"] == serde_json::json!({"p": 5, "q": 2, "r": 3, "s": 1}))
        .unwrap();
    assert_eq!(hit["case"], "REDUCED");
    assert_eq!(hit["rib_upper_bound"], 10);
}

#[test]
fn sweep_is_sorted_and_repeatable() {
    let args = ["sweep", "--range-p", "-3:6", "--range-q", "-2:4", "--range-r", "0:6", "--range-s", "-2:2"];
    let a = cli(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a, cli(&args));
    let report = sweep((-3, 6), (-2, 4), (0, 6), (-2, 2), false).unwrap();
    let keys: Vec<_> = report.entries.iter().map(|e| e.input).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(report.entries.len() + report.skipped.len(), 10 * 7 * 7 * 5);
}

#[test]
fn sweep_rejects_bad_ranges() {
    assert_eq!(cli(&["sweep", "--range-p", "5:3", "--range-q", "2:3", "--range-r", "1:2", "--range-s", "1:1"]).code, EXIT_INVALID);
    assert_eq!(cli(&["sweep", "--range-p", "x", "--range-q", "2:3", "--range-r", "1:2", "--range-s", "1:1"]).code, EXIT_INVALID);
    let huge = cli(&["sweep", "--range-p", "0:1000", "--range-q", "0:1000", "--range-r", "0:1000", "--range-s", "1:1"]);
    assert_eq!(huge.code, EXIT_INVALID);
}
