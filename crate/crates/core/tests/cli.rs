use std::process::Command;

use perron::cli::run_with;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    run_stdin(args, "")
}

fn run_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["perron"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(argv, &mut input.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn lines(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn documented_examples() {
    let (code, out, _) = run(&["expand", "--system", "engel", "--x", "3/8", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"digits\":[3,9,9,9]}\n");

    let (_, out, _) = run(&[
        "cylinder", "--system", "engel", "--word", "2,3", "--sign", "P",
    ]);
    assert_eq!(out, "{\"lo\":\"2/3\",\"hi\":\"3/4\",\"diam\":\"1/12\"}\n");

    let (code, out, _) = run(&["alt-expand", "--system", "pierce", "--x", "2/5", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"digits\":[3],\"is_point\":true,\"rank\":2}\n");

    let (_, out, _) = run(&["transform", "--kind", "t", "--word", "2,3,5"]);
    assert_eq!(out, "{\"digits\":[2,4,7]}\n");
    let (_, out, _) = run(&["transform", "--kind", "g", "--word", "4,6,10", "--inverse"]);
    assert_eq!(out, "{\"digits\":[3,5,9]}\n");
}

#[test]
fn rationals_in_lowest_terms() {
    let (_, out, _) = run(&["eval", "--system", "engel", "--word", "3,9"]);
    assert_eq!(out, "{\"value\":\"10/27\"}\n");
    let (_, out, _) = run(&[
        "cylinder", "--system", "engel", "--word", "2", "--sign", "P-",
    ]);
    assert_eq!(out, "{\"lo\":\"1/2\",\"hi\":\"1/1\",\"diam\":\"1/2\"}\n");
    let (_, out, _) = run(&[
        "measure",
        "--system",
        "luroth",
        "--predicate",
        "alphabet:2,3",
        "--rank",
        "2",
        "--cap",
        "3",
    ]);
    assert_eq!(out, "{\"measure\":\"4/9\"}\n");
}

#[test]
fn cover_and_verify_pipeline() {
    let (code, out, _) = run(&[
        "cover", "--system", "luroth", "--lo", "21/100", "--hi", "3/5",
    ]);
    assert_eq!(code, 0);
    let sets = lines(&out);
    assert!(!sets.is_empty() && sets.len() <= 3);
    let array = serde_json::to_string(&sets).unwrap();
    let (code, out, _) = run_stdin(
        &[
            "verify", "--system", "luroth", "--lo", "21/100", "--hi", "3/5",
        ],
        &array,
    );
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[0]["covers"], Value::Bool(true));

    let (_, out, _) = run(&[
        "verify",
        "--system",
        "luroth",
        "--lo",
        "1/5",
        "--hi",
        "1/2",
        "--sets",
        r#"[{"sign":"P","prefix":[],"from":4,"to":5}]"#,
    ]);
    assert_eq!(lines(&out)[0]["covers"], Value::Bool(false));

    let (_, out, _) = run(&[
        "cover", "--system", "luroth", "--cut", "3/10", "--side", "from-inf",
    ]);
    let v = &lines(&out)[0];
    assert_eq!(v["single"]["from"], serde_json::json!(4));
    assert_eq!(v["tight"].as_array().unwrap().len(), 2);
}

#[test]
fn split_output() {
    let set = r#"{"sign":"P","prefix":[],"from":2,"to":"inf"}"#;
    let (code, out, _) = run(&[
        "split", "--system", "luroth", "--set", set, "--alpha", "1", "--eps", "0.5", "--blocks",
        "4",
    ]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v.len(), 5);
    assert_eq!(v[0]["from"], serde_json::json!(2));
    assert_eq!(v[0]["to"], serde_json::json!(6));
    assert_eq!(v[3]["to"], serde_json::json!(781));
    assert_eq!(v[4]["s"], serde_json::json!(4));
    assert_eq!(v[4]["residue"], serde_json::json!("1/781"));
}

#[test]
fn dimension_commands() {
    let (code, out, _) = run(&[
        "dim",
        "--system",
        "luroth",
        "--predicate",
        "alphabet:2,3",
        "--rank",
        "6",
        "--cap",
        "64",
        "--tol",
        "1e-9",
    ]);
    assert_eq!(code, 0);
    let v = &lines(&out)[0];
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["s", "rank", "cap", "residual", "bases"]);
    assert_eq!(v["bases"], serde_json::json!(64));
    let s = v["s"].as_f64().unwrap();
    let (_, out, _) = run(&["moran", "--ratios", "1/2,1/6"]);
    let m = lines(&out)[0]["s"].as_f64().unwrap();
    assert!((s - m).abs() < 2e-9);

    let (code, _, err) = run(&["dim", "--system", "engel-mod", "--rank", "4", "--cap", "5"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
}

#[test]
fn exit_codes() {
    let (code, out, err) = run(&["expand", "--system", "engel", "--x", "1/2", "--frobnicate"]);
    assert_eq!((code, out.as_str()), (64, ""));
    assert!(err.contains("Usage"));
    assert_eq!(run(&["nonsense"]).0, 64);
    assert_eq!(run(&["expand", "--system", "engel"]).0, 64);
    assert_eq!(run(&["expand", "--system", "engel", "--x", "a/b"]).0, 2);
    assert_eq!(run(&["expand", "--system", "sylvester", "--x", "1/2"]).0, 2);
    assert_eq!(
        run(&["cylinder", "--system", "engel-mod", "--word", "2,2"]).0,
        2
    );
    assert_eq!(run(&["expand", "--system", "engel", "--x", "3/2"]).0, 3);
    assert_eq!(
        run(&["alt-expand", "--system", "pierce", "--x", "1/1"]).0,
        3
    );
    assert_eq!(run(&["moran", "--ratios", "2/3,2/3"]).0, 3);
    assert_eq!(
        run(&["split", "--system", "luroth", "--set", "{}", "--alpha", "1", "--eps", "1"]).0,
        2
    );
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_perron");
    let args = [
        "dim", "--system", "luroth", "--rank", "1", "--cap", "20000", "--tol", "1e-12",
    ];
    let first = Command::new(bin)
        .args(args)
        .env("PERRON_THREADS", "1")
        .output()
        .unwrap();
    let second = Command::new(bin)
        .args(args)
        .env("PERRON_THREADS", "4")
        .output()
        .unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let third = Command::new(bin).args(args).output().unwrap();
    assert_eq!(first.stdout, third.stdout);

    let bad = Command::new(bin)
        .args(["cover", "--bogus"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(64));
}
