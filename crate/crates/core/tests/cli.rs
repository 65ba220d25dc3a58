use std::io::Write;
use std::process::{Command, Output};

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-forge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let o = forge(&[
        "coeffs", "--triple", "0,0,1", "--form", "P", "--n", "6", "--ogf",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 1 2 3 5 7 11\n");

    let o = forge(&["table-w", "--n-list", "2,1000"]);
    assert_eq!(stdout(&o), "2 2.7032\n1000 0.6899\n");

    let o = forge(&["coeffs", "--triple", "0,1,0", "--form", "Q", "--n", "4"]);
    assert_eq!(stdout(&o), "1 1 1 5 11\n");
}

#[test]
fn table_three_column() {
    let o = forge(&[
        "table-w",
        "--log10n-list",
        "4,6,8,10,20,50,100,1000,10000,100000",
    ]);
    let s = stdout(&o);
    let values: Vec<&str> = s.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(
        values,
        [
            "0.7063", "0.7437", "0.7745", "0.7987", "0.8666", "0.9295", "0.9583", "0.9937",
            "0.9991", "0.9998"
        ]
    );
}

#[test]
fn output_formats() {
    let base = ["coeffs", "--triple", "0,1,0", "--form", "P", "--n", "3"];
    let run = |fmt: &str| {
        let mut args = base.to_vec();
        args.extend(["--format", fmt]);
        stdout(&forge(&args))
    };
    assert_eq!(run("bfile"), "0 1\n1 1\n2 3\n3 11\n");
    assert_eq!(run("tsv"), "n\tvalue\n0\t1\n1\t1\n2\t3\n3\t11\n");
    let json: serde_json::Value = serde_json::from_str(&run("json")).unwrap();
    assert_eq!(json["values"], serde_json::json!(["1", "1", "3", "11"]));
    assert_eq!(json["kind"], "egf");
    assert_eq!(json["triple"], serde_json::json!([0, 1, 0]));
}

#[test]
fn weighted_verb() {
    let o = forge(&["weighted", "--triple", "0,1,0", "--v", "1/2", "--n", "2"]);
    assert_eq!(stdout(&o), "1 1/4 7/16\n");
    let o = forge(&["weighted", "--triple", "0,1,0", "--v", "-1", "--n", "4"]);
    assert_eq!(stdout(&o), "1 1 1 5 11\n");
}

#[test]
fn estimate_and_logasymp() {
    let o = forge(&["estimate", "--triple", "0,0,1", "--form", "P", "--n", "100"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("estimate 1.99"), "{s}");

    let o = forge(&["estimate", "--triple", "1,0,0", "--form", "P", "--n", "100"]);
    let s = stdout(&o);
    assert!(s.contains("log-only: solvable saddle equation"), "{s}");
    assert!(s.contains("log_asymptotic"));

    let o = forge(&[
        "logasymp", "--triple", "0,1,0", "--form", "P", "--log10n", "100000",
    ]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    let l = 1e5 * std::f64::consts::LN_10;
    assert!((v - l * l / 2.0).abs() / v < 1e-12);
}

#[test]
fn figure1_invariant() {
    let o = forge(&["figure1", "--nmax", "455"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n\tlog_exact\tconjectured\tkotesovec\thalf_log_squared"
    );
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split('\t').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 454);
    let ratio = |n: usize| {
        let r = &rows[n - 2];
        assert_eq!(r[0] as usize, n);
        r[3] / r[1]
    };
    assert!((ratio(455) - 1.0).abs() <= 0.15);
    assert!((ratio(455) - 1.0).abs() < (ratio(100) - 1.0).abs());
}

#[test]
fn compare_against_bfile() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("b000041.txt");
    let mut f = std::fs::File::create(&good).unwrap();
    writeln!(f, "# partitions").unwrap();
    for (n, v) in [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42].iter().enumerate() {
        writeln!(f, "{n} {v}").unwrap();
    }
    drop(f);
    let path = good.to_str().unwrap();
    let o = forge(&[
        "compare", "--triple", "0,0,1", "--form", "P", "--bfile", path, "--ogf",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("matched_prefix 11"));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n1 1\n2 3\n3 11\n4 58\n").unwrap();
    let o = forge(&[
        "compare",
        "--triple",
        "0,1,0",
        "--form",
        "P",
        "--bfile",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let s = stdout(&o);
    assert!(s.contains("index 4\nexpected 58\nactual 59"), "{s}");

    let shifted = dir.path().join("shifted.txt");
    std::fs::write(&shifted, "1 1\n2 1\n3 3\n4 11\n").unwrap();
    let o = forge(&[
        "compare",
        "--triple",
        "0,1,0",
        "--form",
        "P",
        "--bfile",
        shifted.to_str().unwrap(),
        "--offset",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let broken = dir.path().join("broken.txt");
    std::fs::write(&broken, "1 5\n1 6\n").unwrap();
    let o = forge(&[
        "compare",
        "--triple",
        "0,1,0",
        "--form",
        "P",
        "--bfile",
        broken.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("non-increasing index at line 2"));

    let o = forge(&[
        "compare",
        "--triple",
        "0,1,0",
        "--form",
        "P",
        "--bfile",
        "/nonexistent/b.txt",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_status_contract() {
    assert_eq!(forge(&[]).status.code(), Some(2));
    assert_eq!(forge(&["coeffs", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        forge(&["coeffs", "--triple", "1,-1,0", "--form", "P", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        forge(&["coeffs", "--triple", "0,1,0", "--form", "P", "--n", "3", "--ogf"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        forge(&["estimate", "--triple", "0,1,0", "--form", "P", "--n", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        forge(&["oracle", "--triple", "0,1,0", "--n", "1000"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(forge(&["--version"]).status.code(), Some(0));
}

#[test]
fn oracle_bound_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_partition-forge"))
        .args(["oracle", "--triple", "0,0,1", "--n", "45"])
        .env("PARTITION_FORGE_ORACLE_BOUND", "50")
        .output()
        .unwrap();
    assert!(o.status.success());
    // 45! p(45), p(45) = 89134
    let fact: num_bigint::BigInt = (1..=45u32).map(num_bigint::BigInt::from).product();
    assert_eq!(stdout(&o).trim(), (fact * 89134u32).to_string());
}
