use std::process::{Command, Output};

use fusionkit::coefficient::fusion_oracle;
use fusionkit::{FusionContext, Partition};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn value(args: &[&str]) -> String {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o).lines().next().unwrap().to_string()
}

#[test]
fn lr_values() {
    assert_eq!(value(&["lr", "2,1", "2,1", "3,2,1"]), "2");
    assert_eq!(
        value(&["lr", "2,1", "2,1", "3,2,1", "--method", "lattice"]),
        "2"
    );
    assert_eq!(value(&["lr", "1", "1", "2"]), "1");
    assert_eq!(value(&["lr", "1", "1", "3"]), "0");
}

#[test]
fn malformed_partitions_are_input_errors() {
    assert_eq!(code(&["lr", "1,x", "1", "2"]), 2);
    assert_eq!(code(&["lr", "1,2", "1", "2"]), 2);
    assert_eq!(code(&["fusion", "1", "1", "2", "--n", "1", "--k", "2"]), 2);
}

#[test]
fn adjoint_square_matches_oracle() {
    let c = FusionContext::new(3, 2).unwrap();
    let adj: Partition = "2,1".parse().unwrap();
    let nu: Partition = "3,2,1".parse().unwrap();
    let expected = fusion_oracle(&adj, &adj, &nu, &c).unwrap();
    assert_eq!(expected, 1);
    for method in ["rule", "oracle", "remark13"] {
        let got = value(&[
            "fusion", "2,1,0", "2,1,0", "3,2,1", "--n", "3", "--k", "2", "--method", method,
        ]);
        assert_eq!(got, expected.to_string(), "{method}");
    }
}

#[test]
fn fusion_examples() {
    assert_eq!(
        value(&["fusion", "1,0,0", "1,1,0", "2,1,0", "--n", "3", "--k", "2", "--method", "oracle"]),
        "1"
    );
    assert_eq!(
        code(&["fusion", "2,1,0", "2,1,0", "4,2,0", "--n", "3", "--k", "2"]),
        2
    );
    assert_eq!(code(&["fusion", "0", "3", "3", "--n", "3", "--k", "3"]), 3);
    assert_eq!(
        value(&["fusion", "0", "3", "3", "--n", "3", "--k", "3", "--method", "oracle"]),
        "1"
    );
}

#[test]
fn explain_lists_one_line_per_path() {
    let o = run(&[
        "fusion",
        "2,1",
        "2,1",
        "3,2,1",
        "--n",
        "3",
        "--k",
        "3",
        "--explain",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    let count: usize = lines.next().unwrap().parse().unwrap();
    assert_eq!(count, 2);
    assert_eq!(lines.count(), count);
}

#[test]
fn rule_and_oracle_agree_on_a_grid() {
    let shapes = ["0", "1", "1,1", "2", "2,1", "2,2", "1,1,1", "3,1", "2,1,1"];
    let mus = ["1", "1,1", "2", "2,1", "2,2", "2,1,1"];
    for l in shapes {
        for m in mus {
            for nu in [
                "2,1", "3,1", "2,2", "3,2", "2,2,1", "3,2,1", "3,3", "4,2", "3,1,1",
            ] {
                let args = |method| {
                    [
                        "fusion", l, m, nu, "--n", "3", "--k", "2", "--method", method,
                    ]
                };
                let rule = run(&args("rule"));
                let oracle = run(&args("oracle"));
                assert_eq!(rule.status.code(), oracle.status.code(), "{l} {m} {nu}");
                assert_eq!(rule.stdout, oracle.stdout, "{l} {m} {nu}");
            }
        }
    }
}

#[test]
fn sl2_level_one_table() {
    let o = run(&[
        "table",
        "--n",
        "2",
        "--k",
        "1",
        "--mu",
        "1,0",
        "--max-size",
        "2",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "lambda,mu,nu,n,k,N\n0,1,1,2,1,1\n1,1,\"1,1\",2,1,1\n\"1,1\",1,\"2,1\",2,1,1\n"
    );
}

#[test]
fn table_json_rows_have_all_fields() {
    let o = run(&[
        "table",
        "--n",
        "3",
        "--k",
        "2",
        "--mu",
        "2,1",
        "--max-size",
        "3",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "fusionkit.table/1");
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        for f in ["lambda", "mu", "nu", "n", "k", "N"] {
            assert!(r.get(f).is_some(), "{f}");
        }
        assert!(r["N"].as_i64().unwrap() > 0);
    }
}

#[test]
fn table_output_is_deterministic() {
    let args = [
        "table",
        "--n",
        "3",
        "--k",
        "2",
        "--mu",
        "2,1",
        "--max-size",
        "5",
        "--format",
        "csv",
    ];
    let a = run(&args);
    let serial = run(&[&args[..], &["--jobs", "1"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, run(&args).stdout);
    assert_eq!(a.stdout, serial.stdout);
}

#[test]
fn verify_smoke() {
    let o = run(&[
        "verify",
        "--suite",
        "all",
        "--n-max",
        "2",
        "--k-max",
        "2",
        "--size-max",
        "4",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "fusionkit.report/1");
    assert_eq!(v["passed"], true);
    assert!(v["wall_time_ms"].as_u64().unwrap() < 5000);
    let suites: std::collections::BTreeSet<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["suite"].as_str().unwrap().to_string())
        .collect();
    assert!(suites.contains("gepner-witten") && suites.contains("involution"));
}

#[test]
fn verify_involution_suite() {
    let o = run(&[
        "verify",
        "--suite",
        "involution",
        "--n-max",
        "4",
        "--k-max",
        "3",
        "--size-max",
        "9",
    ]);
    assert!(o.status.success());
}

#[test]
fn gepner_witten_suite_never_fails_the_run() {
    let o = run(&[
        "verify",
        "--suite",
        "gepner-witten",
        "--k-max",
        "3",
        "--size-max",
        "6",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let printed = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "gepner_witten_printed_threshold")
        .unwrap();
    assert!(printed["failed"].as_u64().unwrap() > 0);
    assert!(!printed["counterexamples"].as_array().unwrap().is_empty());
}
