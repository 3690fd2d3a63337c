use std::collections::BTreeMap;
use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_blockwitness"));
    cmd.args(args).env_remove("BLOCKWITNESS_SCAN_MAX");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn witness_plain() {
    let o = run(&["witness", "--n", "9", "--p", "3", "--q", "2"]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).starts_with("case=I.a partition=[2,1,1,1,1,1,1,1] host=3 divisor=2 degree=8 ")
    );
    let o = run(&["witness", "--n", "10", "--p", "2", "--q", "5"]);
    assert!(
        stdout(&o).starts_with("case=II.a partition=[3,1,1,1,1,1,1,1] host=5 divisor=2 degree=36 ")
    );
}

#[test]
fn json_and_plain_carry_the_same_fields() {
    for (n, p, q) in [
        ("9", "3", "2"),
        ("10", "5", "2"),
        ("30", "7", "5"),
        ("17", "3", "2"),
    ] {
        let plain = stdout(&run(&["witness", "--n", n, "--p", p, "--q", q]));
        let fields: BTreeMap<String, String> = plain
            .split_whitespace()
            .map(|kv| {
                let (k, v) = kv.split_once('=').unwrap();
                (k.to_string(), v.to_string())
            })
            .collect();
        let json: serde_json::Value = serde_json::from_str(&stdout(&run(&[
            "witness", "--n", n, "--p", p, "--q", q, "--json",
        ])))
        .unwrap();
        let obj = json.as_object().unwrap();
        let from_json: BTreeMap<String, String> = obj
            .iter()
            .map(|(k, v)| (k.clone(), v.as_str().map_or(v.to_string(), str::to_string)))
            .collect();
        assert_eq!(fields, from_json, "({n},{p},{q})");
    }
}

#[test]
fn deferrals_exit_one() {
    let o = run(&["witness", "--n", "8", "--p", "3", "--q", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("small-n: deferred to table methods"));
    let o = run(&["witness", "--n", "11", "--p", "7", "--q", "5"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("abelian-sylow"));
}

#[test]
fn falsified_case_tree_is_an_internal_error() {
    let o = run(&["witness", "--n", "23", "--p", "11", "--q", "3"]);
    assert_eq!(code(&o), 3);
    let err = stderr(&o);
    assert!(err.starts_with("bug: internal consistency failure"));
    assert!(err.contains("n=23, p=11, q=3"));
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        vec!["witness", "--n", "x", "--p", "3", "--q", "2"],
        vec!["witness", "--n", "9", "--p", "4", "--q", "2"],
        vec!["witness", "--n", "9", "--p", "3", "--q", "3"],
        vec![
            "verify-c", "--n", "9", "--p", "3", "--q", "2", "--group", "gl",
        ],
        vec!["degrees", "--n", "5", "--partition", "[3,1]"],
        vec!["degrees", "--n", "5", "--partition", "[1,3]"],
        vec!["export-table", "--n", "5", "--primes", "2,7"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).is_empty());
    }
}

#[test]
fn oracle_subcommands() {
    let o = run(&["verify-b", "--n", "9", "--p", "3", "--q", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("sets_equal=false"));
    for group in ["sn", "an"] {
        let o = run(&[
            "verify-c", "--n", "12", "--p", "5", "--q", "3", "--group", group,
        ]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains("condition=true"));
    }
}

#[test]
fn scan_is_deterministic_and_ordered() {
    let a = run(&["scan", "--n-min", "9", "--n-max", "16", "--cross-validate"]);
    let b = run(&["scan", "--n-min", "9", "--n-max", "16", "--cross-validate"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let keys: Vec<(u64, u64, u64)> = stdout(&a)
        .lines()
        .filter(|l| l.starts_with("result"))
        .map(|l| {
            let get = |k: &str| -> u64 {
                l.split_whitespace()
                    .find_map(|kv| kv.strip_prefix(k))
                    .unwrap()
                    .parse()
                    .unwrap()
            };
            (get("n="), get("p="), get("q="))
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(stdout(&a).lines().all(|l| !l.contains("agree=false")));
    assert!(stdout(&a).contains("result n=9 p=3 q=2 case=I.a agree=true"));
}

#[test]
fn scan_cap_from_environment() {
    let o = run_env(
        &["scan", "--n-min", "9", "--n-max", "40"],
        &[("BLOCKWITNESS_SCAN_MAX", "10")],
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o)
        .lines()
        .filter(|l| l.starts_with("result"))
        .all(|l| l.starts_with("result n=9 ") || l.starts_with("result n=10 ")));
}

#[test]
fn scan_reports_the_falsified_tuples() {
    let o = run(&["scan", "--n-min", "23", "--n-max", "23"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("result n=23 p=11 q=3 case=falsified"));
}

#[test]
fn degrees_listing() {
    let o = run(&["degrees", "--n", "5"]);
    assert_eq!(code(&o), 0);
    let degrees: Vec<u64> = stdout(&o)
        .lines()
        .map(|l| {
            l.split_whitespace()
                .nth(1)
                .unwrap()
                .strip_prefix("degree=")
                .unwrap()
                .parse()
                .unwrap()
        })
        .collect();
    assert_eq!(degrees, [1, 4, 5, 6, 5, 4, 1]);
    let o = run(&["degrees", "--n", "9", "--partition", "(1^7,2)"]);
    assert_eq!(
        stdout(&o),
        "partition=[2,1,1,1,1,1,1,1] degree=8 factored=2^3\n"
    );
}

#[test]
fn export_then_audit() {
    let o = run(&["export-table", "--n", "9", "--primes", "2,3"]);
    assert_eq!(code(&o), 0);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&o.stdout).unwrap();
    let path = file.path().to_str().unwrap();

    let c = run(&["check-table", path, "--conjecture", "c"]);
    assert_eq!(code(&c), 0);
    assert!(stdout(&c).starts_with("finding C 2 3 consistent \"condition=false"));
    let b = run(&["check-table", path, "--conjecture", "b"]);
    assert_eq!(code(&b), 0);
    assert!(stdout(&b).starts_with("finding B 2 3 consistent"));

    let text = stdout(&o).replace("char [9] 1 ", "char [9] 2 ");
    let mut broken = tempfile::NamedTempFile::new().unwrap();
    broken.write_all(text.as_bytes()).unwrap();
    let e = run(&[
        "check-table",
        broken.path().to_str().unwrap(),
        "--conjecture",
        "c",
    ]);
    assert_eq!(code(&e), 2);
    assert!(stderr(&e).contains("invariant violated"));
}

#[test]
fn violations_exit_one() {
    let text = "group fake\norder 6\nprimes 2 3\ntrivial 1\ncomplete false\nchar 1 1 2:1 3:1\n";
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    let o = run(&[
        "check-table",
        file.path().to_str().unwrap(),
        "--conjecture",
        "b",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("finding B 2 3 violation"));
}
