use std::process::{Command, Output};

use flagweak::export::{compare_shapes, parse_golden, DiagramShape, JsonHasse, GOLDEN_B2};

fn flagweak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagweak"))
        .args(args)
        .env_remove("FLAGWEAK_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn hasse_json_matches_golden_b2() {
    let out = flagweak(&["hasse", "--r", "2", "--n", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: JsonHasse = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json.nodes.len(), 8);
    let actual = DiagramShape::of_json(&json).unwrap();
    let diff = compare_shapes(&parse_golden(GOLDEN_B2).unwrap(), &actual);
    assert!(diff.is_empty(), "{diff}");
}

#[test]
fn hasse_dot_and_text() {
    let out = flagweak(&["hasse", "--r", "2", "--n", "3", "--format", "dot"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")).count(), 48);
    assert!(text.contains("color=red") && text.contains("color=black"));

    let out = flagweak(&["hasse", "--r", "2", "--n", "1"]);
    assert_eq!(stdout(&out).lines().next(), Some("nodes=2 edges=1"));

    let out = flagweak(&["hasse", "--r", "2", "--n", "2", "--from", "1,-2", "--to", "-2,-1", "--signed"]);
    assert_eq!(stdout(&out).lines().next(), Some("nodes=6 edges=7"));
}

#[test]
fn check_suites() {
    for args in [
        ["check", "lattice", "--r", "2", "--n", "3"],
        ["check", "genfun", "--r", "3", "--n", "2"],
        ["check", "lattice", "--r", "1", "--n", "2"],
    ] {
        let out = flagweak(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        assert!(stdout(&out).starts_with("PASS"), "{args:?}");
    }
    let out = flagweak(&["check", "all", "--r", "2", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn chains_mobius_and_genfun() {
    let out = flagweak(&["chains", "--r", "2", "--n", "2", "--diameter"]);
    assert_eq!(
        stdout(&out).lines().next(),
        Some("chains=4 connected=true diameter=3 (exact)")
    );
    let out = flagweak(&["chains", "--r", "3", "--n", "2"]);
    assert!(stdout(&out).contains("moves=generic (empirical)"));
    let out = flagweak(&["chains", "--r", "2", "--n", "2", "--format", "dot"]);
    assert_eq!(stdout(&out).matches(" -- ").count(), 3);

    let out = flagweak(&["mobius", "--r", "2", "--n", "2", "--from", "12", "--to", "-1,-2"]);
    assert_eq!(stdout(&out).lines().next(), Some("+1"));
    let out = flagweak(&["mobius", "--r", "2", "--n", "2", "--from", "12", "--to", "-2,-1"]);
    assert_eq!(stdout(&out).lines().next(), Some("0"));
    let out = flagweak(&["mobius", "--r", "2", "--n", "2", "--signed"]);
    let table = stdout(&out);
    assert!(table.starts_with("from,to,mobius,class\n"));
    assert!(table.contains("\"1,2\",\"-2,-1\",0,contractible"));

    let out = flagweak(&["genfun", "finv", "--r", "2", "--n", "2"]);
    assert_eq!(stdout(&out), "1 + 2*q + 2*q^2 + 2*q^3 + q^4\n");
    let out = flagweak(&["genfun", "wdes", "--r", "2", "--n", "2", "--json"]);
    assert_eq!(stdout(&out), "[1,4,3]\n");
    let out = flagweak(&["genfun", "bivariate", "--r", "2", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 + q*t\n");
}

#[test]
fn present_verify() {
    let out = flagweak(&["present", "verify", "--r", "2", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("closure(a) order=24 expected=24"));
    let out = flagweak(&["present", "verify", "--r", "3", "--n", "2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn exit_codes() {
    let out = flagweak(&["mobius", "--r", "2", "--n", "2", "--from", "1,-2", "--to", "-1,2"]);
    assert_eq!(code(&out), 2);
    let out = flagweak(&["hasse", "--r", "2", "--n", "2", "--from", "1,1"]);
    assert_eq!(code(&out), 2);
    let out = flagweak(&["hasse", "--r", "2"]);
    assert_eq!(code(&out), 2);
    let out = flagweak(&["hasse", "--r", "2", "--n", "3", "--cap", "10"]);
    assert_eq!(code(&out), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_flagweak"))
        .args(["hasse", "--r", "2", "--n", "3"])
        .env("FLAGWEAK_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    let out = flagweak(&["chains", "--r", "2", "--n", "3", "--chain-cap", "10"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn output_is_deterministic() {
    let args = ["check", "all", "--r", "2", "--n", "3"];
    let one = flagweak(&["--jobs", "1", args[0], args[1], args[2], args[3], args[4], args[5]]);
    let many = flagweak(&args);
    assert_eq!(stdout(&one), stdout(&many));
    let a = flagweak(&["hasse", "--r", "3", "--n", "2", "--format", "json"]);
    let b = flagweak(&["hasse", "--r", "3", "--n", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
