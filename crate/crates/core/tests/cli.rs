//! Element syntax round trips and the `pgr` binary's exit-code contract.

use std::io::Write;
use std::process::Command;

use pgr_core::dsl::{self, parse_in, print_canonical, DslError};
use pgr_core::worked;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRODUCT: &str = "-105j*g(2,0) + 40j*g(1,1) + -70j*g(2,1) + -140j*g(1,2) + 275j*g(2,2)";

fn pgr(args: &[&str]) -> (i32, String, String) {
    pgr_env(args, &[])
}

fn pgr_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pgr"));
    cmd.args(args).env_remove("PGR_CONFIG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn round_trip_on_random_elements() {
    let gr = worked::context();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..500 {
        let x = gr.random_element(&mut rng, 9, -50, 50);
        let text = print_canonical(&gr, &x);
        assert_eq!(parse_in(&gr, &text).unwrap(), x, "{text}");
    }
}

proptest! {
    #[test]
    fn legacy_and_index_forms_agree(terms in prop::collection::vec((-99i64..=99, 1u64..=9), 0..6)) {
        let gr = worked::context();
        let legacy = terms.iter().map(|(c, g)| format!("{c}j*g{g}")).collect::<Vec<_>>().join(" + ");
        let indexed = terms
            .iter()
            .map(|(c, g)| format!("{c}j*g({},{})", (g - 1) % 3, (g - 1) / 3))
            .collect::<Vec<_>>()
            .join(" + ");
        let text = if terms.is_empty() { "0".to_string() } else { legacy };
        let indexed = if terms.is_empty() { "0".to_string() } else { indexed };
        let a = parse_in(&gr, &text).unwrap();
        prop_assert_eq!(&a, &parse_in(&gr, &indexed).unwrap());
        prop_assert_eq!(parse_in(&gr, &print_canonical(&gr, &a)).unwrap(), a);
    }
}

#[test]
fn parse_errors_carry_offsets() {
    let gr = worked::context();
    match parse_in(&gr, "5j*g(1,") {
        Err(DslError::Parse { offset, .. }) => assert_eq!(offset, 7),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_in(&gr, "5j*g(3,0)"), Err(DslError::KeyRange(_))));
    assert!(matches!(parse_in(&gr, "5j3*g1"), Err(DslError::Parse { offset: 1, .. })));
}

#[test]
fn binary_multiplies_the_worked_example() {
    let (code, out, _) = pgr(&["mul", "5j*g5; 2j*g7 + -7j*g8; -4j*g2 + 7j*g3 + -3j*g6"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), PRODUCT);
    let (code, out, _) = pgr(&["--json", "aug", PRODUCT]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"result":"0j"}"#);
}

#[test]
fn exit_codes() {
    assert_eq!(pgr(&["eval", "5j*g("]).0, dsl::EXIT_PARSE);
    assert_eq!(pgr(&["frobnicate"]).0, dsl::EXIT_PARSE);
    assert_eq!(pgr(&["eval", "5j*g10"]).0, dsl::EXIT_DOMAIN);
    assert_eq!(pgr(&["mul", "1j*g1; 1j*g1"]).0, dsl::EXIT_DOMAIN);
    assert_eq!(pgr(&["--q", "3", "eval", "1j3*g1"]).0, dsl::EXIT_DOMAIN);
    assert_eq!(pgr(&["--group", "derived", "--base", "cyclic:3", "verify", "nonderived"]).0, dsl::EXIT_VERIFY);
    let (code, out, err) = pgr(&["verify", "group-assoc"]);
    assert_eq!(code, dsl::EXIT_OK, "{err}");
    assert!(out.starts_with("HOLDS"));
    let (code, out, _) = pgr(&["--json", "eval", "5j*g("]);
    assert_eq!(code, dsl::EXIT_PARSE);
    assert!(out.is_empty());
}

#[test]
fn config_file_and_environment() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"ring": {{"kind": "jroot", "q": 2, "modulus": 2}}, "group": {{"kind": "derived", "base": "cyclic:3"}}}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let (code, out, err) = pgr(&["--config", path, "mul", "1j*g(1); 1j*g(1); 1j*g(2)"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.trim(), "1j*g(1)");
    let (code, out, _) = pgr_env(&["mul", "1j*g(1); 1j*g(1); 1j*g(2)"], &[("PGR_CONFIG", path)]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1j*g(1)");
    // flags override the file
    let (code, out, _) = pgr_env(&["--mod", "3", "mul", "1j*g(1); 1j*g(1); 1j*g(2)"], &[("PGR_CONFIG", path)]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2j*g(1)");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"ring": {{"kind": "quaternion"}}}}"#).unwrap();
    assert_eq!(pgr(&["--config", bad.path().to_str().unwrap(), "arity"]).0, dsl::EXIT_DOMAIN);
}

#[test]
fn repl_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pgr"))
        .arg("repl")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"aug 5j*g5\neval 1j*g(\naug 2j*g7 + -7j*g8\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "5j");
    assert!(lines[1].starts_with("error: parse error"));
    assert_eq!(lines[2], "-5j");
}
