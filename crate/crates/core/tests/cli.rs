use std::process::{Command, Output};

fn xi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xi"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_exact_and_float() {
    let out = xi(&["eval", "xi", "--m", "2", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "m\tquantity\tmode\tvalue\n2\txi\texact\t5/2\n"
    );

    let out = xi(&["eval", "gamma2", "--m", "1", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"m\":1,\"quantity\":\"gamma2\",\"mode\":\"exact\",\"value\":\"3\"}\n"
    );

    let out = xi(&[
        "eval", "xi", "--m", "2", "--mode", "float", "--format", "csv",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("m,quantity,mode,value,terms_used,truncation_bound")
    );
    assert!(lines
        .next()
        .unwrap()
        .starts_with("2,xi,float,2.5000000000000000,3,"));
}

#[test]
fn exact_records_parse_back() {
    let out = xi(&["eval", "xi2", "--m", "1:30"]);
    for (line, m) in stdout(&out).lines().skip(1).zip(1u64..) {
        let value: xi_identity::ExactRational = line.rsplit('\t').next().unwrap().parse().unwrap();
        assert_eq!(value, xi_identity::xi2_exact(m).unwrap());
    }
}

#[test]
fn verify_ranges() {
    let out = xi(&["verify", "--range", "1:50", "--cross-check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect();
    assert_eq!(rows.len(), 50);
    assert!(rows
        .iter()
        .all(|r| r.ends_with("\ttrue\ttrue\ttrue\ttrue\ttrue")));
    assert_eq!(text.lines().last(), Some("# checked=50 passed=50 failed=0"));

    let out = xi(&["verify", "--range", "1:1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = xi(&["verify", "--range", "1:500"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("# checked=500 passed=500 failed=0\n"));
}

#[test]
fn verify_output_independent_of_jobs() {
    let serial = xi(&[
        "verify",
        "--range",
        "1:120",
        "--cross-check",
        "--values",
        "--format",
        "json",
    ]);
    let parallel = xi(&[
        "verify",
        "--range",
        "1:120",
        "--cross-check",
        "--values",
        "--format",
        "json",
        "--jobs",
        "8",
    ]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn comparator_table() {
    let out = xi(&["table", "--m", "1,2,4", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "m,langford_bound,maurer_bound,xi_value\n\
         1,2.0000000000000000,2.0000000000000000,2.0000000000000000\n\
         2,3.0000000000000000,2.8284271247461903,2.5000000000000000\n\
         4,5.0000000000000000,4.0000000000000000,3.2187500000000000\n"
    );
    let json = xi(&["table", "--m", "2", "--format", "json", "--mode", "float"]);
    assert_eq!(
        stdout(&json),
        "{\"m\":2,\"langford_bound\":3.0000000000000000,\"maurer_bound\":2.8284271247461903,\"xi_value\":2.5000000000000000}\n"
    );
}

#[test]
fn abel_and_hurwitz_subcommands() {
    let out = xi(&[
        "abel", "--m", "2", "--x", "1", "--y", "1", "--p", "0", "--q", "-1",
    ]);
    assert_eq!(
        stdout(&out),
        "m\tquantity\tmode\tvalue\n2\tabel\texact\t16/1\n"
    );
    let out = xi(&["hurwitz", "--m", "1:3", "--xs", "0,0,0", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "m,quantity,mode,value\n1,hurwitz,exact,3/1\n2,hurwitz,exact,18/1\n3,hurwitz,exact,159/1\n"
    );
    let out = xi(&["hurwitz", "--m", "2", "--xs", "-1/2,3", "--ps", "-1,0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_codes_and_diagnostics() {
    let out = xi(&["eval", "xi", "--m", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("m must be at least 1"));

    assert_eq!(xi(&["eval", "xi"]).status.code(), Some(2));
    assert_eq!(xi(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(xi(&["table", "--m", "0"]).status.code(), Some(3));
    assert_eq!(xi(&["verify", "--range", "0:4"]).status.code(), Some(3));

    let out = xi(&["hurwitz", "--m", "2", "--xs", "0,1", "--ps", "-1,0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("j=1"));

    assert_eq!(xi(&["--help"]).status.code(), Some(0));
}
