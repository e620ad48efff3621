use std::io::Write;
use std::process::{Command, Stdio};

use spectough_cli::{run, CommandOutcome, EXIT_FINDING, EXIT_OK, EXIT_USAGE};

fn cli(args: &[&str]) -> CommandOutcome {
    run(std::iter::once("spectough").chain(args.iter().copied()))
}

fn temp_graph(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn rho_of_family_has_nine_decimals() {
    let out = cli(&["rho", "--family", "tough-int", "--n", "14", "--tau", "2"]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.stderr);
    let line = out.stdout.trim();
    assert_eq!(line.split('.').nth(1).unwrap().len(), 9);
    let value: f64 = line.parse().unwrap();
    assert!(value > 12.0 && value < 12.1);
}

#[test]
fn tough_from_file() {
    // C_4
    let f = temp_graph("4 4\n0 1\n1 2\n2 3\n0 3\n");
    let path = f.path().to_str().unwrap();
    let out = cli(&["tough", "--in", path, "--kind", "variation"]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "value = 2\ncut = 0 2\ncomponents = 2\n");

    let out = cli(&["tough", "--in", path, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["value"], "1");
    assert_eq!(v["witness"]["cut"], serde_json::json!([0, 2]));
}

#[test]
fn graph6_input() {
    let f = temp_graph("D~{\n");
    let out = cli(&["rho", "--in", f.path().to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(out.stdout, "4.000000000\n");
}

#[test]
fn remark_table() {
    let out = cli(&["remark", "--json"]);
    assert_eq!(out.exit_code, EXIT_OK);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out.stdout).unwrap();
    let winners: Vec<&str> = rows.iter().map(|r| r["winner"].as_str().unwrap()).collect();
    assert_eq!(winners, ["B", "B", "A"]);
    assert!((rows[0]["rho_b"].as_f64().unwrap() - 18.499).abs() < 0.005);
}

#[test]
fn usage_errors_exit_one() {
    let out = cli(&["frobnicate"]);
    assert_eq!(out.exit_code, EXIT_USAGE);
    assert!(out.stderr.contains("Usage"));
    assert!(out.stdout.is_empty());

    let out = cli(&["rho", "--bogus"]);
    assert_eq!(out.exit_code, EXIT_USAGE);

    let out = cli(&["rho", "--family", "tough-int", "--n", "10", "--tau", "2"]);
    assert_eq!(out.exit_code, EXIT_USAGE);
    assert!(out.stderr.contains("2tau^2+3tau"), "{}", out.stderr);

    let f = temp_graph("3 1\n0 0\n");
    let out = cli(&["rho", "--in", f.path().to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_USAGE);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
}

#[test]
fn help_lists_flags() {
    let out = cli(&["search", "--help"]);
    assert_eq!(out.exit_code, EXIT_OK);
    for flag in ["--theorem", "--samples", "--seed", "--n", "--tau-inv", "--r-inv", "--json"] {
        assert!(out.stdout.contains(flag), "missing {flag}");
    }
    for sub in [
        "rho", "spectrum", "tough", "construct", "bounds", "lemma", "rotate", "brouwer", "verify", "search", "remark",
    ] {
        let out = cli(&[sub, "--help"]);
        assert_eq!(out.exit_code, EXIT_OK, "{sub}");
        assert!(out.stdout.contains("--json"), "{sub}");
    }
}

#[test]
fn verify_classifies_extremal() {
    let out = cli(&[
        "verify", "--family", "tough-frac-delta", "--n", "16", "--tau-inv", "1", "--delta", "2", "--theorem", "t11-ii",
        "--json",
    ]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "consistent_extremal");
}

#[test]
fn failing_lemma_is_a_finding() {
    let out = cli(&["lemma", "--lemma", "l43", "--k", "2", "--n", "20"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("holds"));
    // n = 4s + 4: both graphs coincide, so the strict inequality fails
    let out = cli(&["lemma", "--lemma", "l44", "--n", "8", "--s", "1"]);
    assert_eq!(out.exit_code, EXIT_FINDING);
    let out = cli(&["lemma", "--lemma", "l44", "--n", "9", "--s", "1"]);
    assert_eq!(out.exit_code, EXIT_USAGE);
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--theorem", "t11-i", "--n", "14", "--tau", "2", "--samples", "30", "--seed", "7", "--json"];
    let a = cli(&args);
    let b = cli(&args);
    assert_eq!(a.exit_code, EXIT_OK, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["checked"], 30);
    assert_eq!(v["theorem"], "T11_I");
    assert_eq!(v["params"]["tau"], 2);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    let histogram = v["histogram"].as_object().unwrap();
    assert_eq!(histogram.len(), 4);
}

#[test]
fn construct_roundtrips_through_rho() {
    let out = cli(&["construct", "--family", "bip-frac", "--n", "16", "--r-inv", "2"]);
    let f = temp_graph(&out.stdout);
    let from_file = cli(&["rho", "--in", f.path().to_str().unwrap()]);
    let direct = cli(&["rho", "--family", "bip-frac", "--n", "16", "--r-inv", "2"]);
    assert_eq!(from_file.stdout, direct.stdout);

    let out = cli(&["construct", "--family", "bip-frac", "--n", "16", "--r-inv", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["partition"].as_array().unwrap().len(), 4);
}

#[test]
fn bounds_rotate_brouwer() {
    let star = temp_graph("4 3\n0 1\n0 2\n0 3\n");
    let out = cli(&["bounds", "--in", star.path().to_str().unwrap(), "--bound", "hong", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v[0]["equality_case"], true);

    let p4 = temp_graph("4 3\n0 1\n1 2\n2 3\n");
    let out = cli(&["rotate", "--in", p4.path().to_str().unwrap(), "--s1", "2", "--s2", "1", "--t-set", "0"]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("rho after  = 1.732050808"));
    let out = cli(&["rotate", "--in", p4.path().to_str().unwrap(), "--s1", "1", "--s2", "2", "--t-set", "0"]);
    assert_eq!(out.exit_code, EXIT_USAGE);

    let c6 = temp_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let out = cli(&["brouwer", "--in", c6.path().to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("margin = 1.000000000"));
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spectough"))
        .args(["spectrum", "--in", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"3 3\n0 1\n1 2\n0 2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2.000000000\n-1.000000000\n-1.000000000\n");
}
