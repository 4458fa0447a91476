use std::process::{Command, Output};

fn run(args: &[&str], budget: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tgw"));
    cmd.args(args).env_remove("TGW_BUDGET");
    if let Some(b) = budget {
        cmd.env("TGW_BUDGET", b);
    }
    cmd.output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args, None).status.code().unwrap()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["check", "B2"], 0),
        (&["check", "B2", "B2xB2"], 0),
        (&["check", "Z3"], 1),
        (&["check", "Z3", "--lenient"], 0),
        (&["ideals", "B2xB2"], 0),
        (&["spec", "B2xB2"], 0),
        (&["modules", "B2"], 0),
        (&["simples", "Z3"], 1),
        (&["ext", "Z3", "--lenient"], 2),
        (&["adjunction", "B2xB2"], 0),
        (&["localize", "B2xB2"], 0),
        (&["gelfand", "B2xB2"], 0),
        (&["embed", "B2xB2", "--format", "dot"], 0),
        (&["ideals", "B2", "--format", "dot"], 2),
        (&["check", "no-such-fixture"], 2),
        (&["frobnicate"], 2),
        (&["report"], 0),
    ];
    for (args, want) in cases {
        assert_eq!(code(args), *want, "tgw {}", args.join(" "));
    }
}

#[test]
fn budget_environment() {
    assert_eq!(run(&["ideals", "B2xB2"], Some("2")).status.code(), Some(2));
    assert_eq!(run(&["ideals", "B2xB2"], Some("not-a-number")).status.code(), Some(2));
    assert_eq!(run(&["ideals", "B2xB2"], Some("8")).status.code(), Some(0));
}

#[test]
fn violations_carry_witnesses() {
    let out = run(&["check", "Z3"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("zero-absorbing"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_and_json_exports_parse() {
    let csv = String::from_utf8(run(&["embed", "B2xB2", "--format", "csv"], None).stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("label,weight,x1,x2"));
    assert_eq!(lines.count(), 2);
    let json = run(&["spec", "B2xB2", "--format", "json"], None).stdout;
    let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert!(v.is_object());
}
