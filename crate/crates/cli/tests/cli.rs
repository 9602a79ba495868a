use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use chevalley_core::group::FiniteSubgroup;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chevalley")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn rootsys_text_matches_golden() {
    let o = run(&["rootsys", "--type", "G2", "--format", "text"]);
    assert_eq!(code(&o), 0);
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/rootsys_g2.txt");
    assert_eq!(stdout(&o), fs::read_to_string(golden).unwrap());
}

#[test]
fn rootsys_json_parses() {
    let o = run(&["rootsys", "--type", "E8", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["num_roots"], 240);
    assert_eq!(v["bad_primes"], serde_json::json!([2, 3, 5]));
}

#[test]
fn primes_for_type_a() {
    let o = run(&["primes", "--type", "A5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bad"], serde_json::json!([]));
    let three = v["primes"].as_array().unwrap().iter().find(|p| p["p"] == 3).unwrap();
    assert_eq!(three["good"], true);
    assert_eq!(three["very_good"], false);
}

#[test]
fn structure_constants_dump() {
    let o = run(&["structure", "--type", "G2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 14);
    assert_eq!(v["basis"][0], "h1");
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["rootsys", "--type", "Q7"])), 3);
    assert_eq!(code(&run(&["verify", "--suite", "other"])), 3);
    assert_eq!(code(&run(&["verify", "--suite", "g2-char2", "--scenario", "S11"])), 3);
    assert_eq!(code(&run(&["verify", "--suite", "g2-char2", "--field", "gf16"])), 3);
    assert_eq!(code(&run(&["closure", "--field", "gf6", "--gens", "m"])), 3);
    assert_eq!(code(&run(&["closure", "--field", "gf2", "--gens", "h"])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn verify_writes_report_and_is_deterministic() {
    let a = scratch("s1_a.json");
    let b = scratch("s1_b.json");
    for path in [&a, &b] {
        let o = run(&["verify", "--suite", "g2-char2", "--scenario", "S1,S5", "--no-timing", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["id"], "S1");
    assert_eq!(v[1]["metrics"]["separable_in_g"], false);
    assert!(v[0]["timing_ms"].is_null());
}

#[test]
fn budget_exhaustion_exits_2() {
    let o = run(&["verify", "--suite", "g2-char2", "--scenario", "S4", "--budget", "100"]);
    assert_eq!(code(&o), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "skipped");
    assert!(v[0]["skip_reason"].as_str().unwrap().contains("budget"));
}

#[test]
fn closure_of_g2_over_gf2_with_dump() {
    let dump = scratch("g2_gf2.bin");
    let o = run(&["closure", "--group", "G2", "--field", "gf2", "--gens", "simple-roots", "--cap", "2000000", "--dump", dump.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 12096);
    let g = FiniteSubgroup::read_dump(fs::File::open(&dump).unwrap()).unwrap();
    assert_eq!(g.order(), 12096);
}

#[test]
fn closure_cap_exits_2() {
    let o = run(&["closure", "--field", "gf2", "--gens", "simple-roots", "--cap", "1000"]);
    assert_eq!(code(&o), 2);
}
