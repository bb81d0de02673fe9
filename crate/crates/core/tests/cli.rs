mod common;

use serde_json::Value;
use torus_bounds::cli::{dispatch, Outcome};

use common::f0_oracle;

fn run(args: &str) -> Outcome {
    run_env(args, None)
}

fn run_env(args: &str, ceiling: Option<&str>) -> Outcome {
    let argv = std::iter::once("torus-bounds").chain(args.split_whitespace());
    dispatch(argv, ceiling)
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn eval_f0_payload() {
    let out = run("eval f0 --n 54");
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["result"], serde_json::json!({"n": 54, "f0": "5100"}));
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "eval f0");
    assert_eq!(v["inputs"]["n"], 54);
    assert!(v["precision_bits"].is_u64());
}

#[test]
fn eval_quantities() {
    let v = json(&run("eval s --n 74"));
    assert_eq!(v["result"]["s"], "10");
    let v = json(&run("eval envelope --n 54"));
    let lo: f64 = v["result"]["envelope"]["lo"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    let hi: f64 = v["result"]["envelope"]["hi"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!(lo <= hi && (lo / 1.6199601013464e18 - 1.0).abs() < 1e-12);
    let v = json(&run("eval s-alpha --alpha 4 --n 64"));
    assert_eq!(v["result"]["s_alpha"]["lo"], v["result"]["s_alpha"]["hi"]);
    assert_eq!(v["result"]["components_bound"], "49");
    let v = json(&run("eval kappa --i 6"));
    assert_eq!(v["result"]["n_i"], 247);
    let v = json(&run("eval weyl --group B:2"));
    assert_eq!(v["result"]["weyl_order"], "8");
    let v = json(&run("eval chi --space Gr:2:4"));
    assert_eq!(v["result"]["chi"], "6");
}

#[test]
fn usage_and_domain_errors_exit_three() {
    for args in [
        "eval f0",
        "eval f0 --n 53",
        "eval f0 --n abc",
        "eval nope --n 4",
        "frobnicate",
        "figure --which 3 --range 54:74:2 --format csv",
        "figure --which 1 --range 3:9:2 --format csv",
        "figure --which 1 --range 54:74 --format csv",
        "obstruct genus --n 18 --rank 5 --spin",
        "obstruct product --n 64 --rank 15 --chi-factor 2 --k 1",
        "obstruct euler --n 54 --rank 14",
        "certify --suite no-such-claim",
        "eval chi --space Gr:3:5",
    ] {
        let out = run(args);
        assert_eq!(out.code, 3, "{args}: {}", out.stderr);
        assert!(!out.stderr.is_empty(), "{args}");
        assert!(out.stdout.is_empty(), "{args}");
    }
    assert_eq!(run_env("eval f0 --n 54", Some("lots")).code, 3);
}

#[test]
fn help_is_not_an_error() {
    let out = run("--help");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("obstruct"));
}

#[test]
fn table1_rows() {
    let out = run("table1 --max-i 6");
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v = json(&out);
    let rows = v["result"]["rows"].as_array().unwrap();
    let ns: Vec<u64> = rows.iter().map(|r| r["n_i"].as_u64().unwrap()).collect();
    assert_eq!(ns, [54, 74, 100, 135, 183, 247]);
    for r in rows {
        assert_eq!(r["within_tolerance"], true);
        let lo: f64 = r["kappa"]["lo"].as_str().unwrap().parse().unwrap();
        let hi: f64 = r["kappa"]["hi"].as_str().unwrap().parse().unwrap();
        let printed: f64 = r["printed"].as_str().unwrap().parse().unwrap();
        assert!(lo <= hi);
        assert!((lo / printed - 1.0).abs() <= 5e-6);
    }
}

#[test]
fn figure_rows() {
    let out = run("figure --which 1 --range 54:74:2 --format csv");
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "n,f0,envelope_lo,envelope_hi,ref_exponential");
    assert_eq!(lines.len(), 12);
    assert!(lines[1].starts_with("54,5100,"));
    for line in &lines[1..] {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 5);
        let n: u64 = cols[0].parse().unwrap();
        assert_eq!(cols[1], f0_oracle(n).to_string());
        let lo: f64 = cols[2].parse().unwrap();
        let hi: f64 = cols[3].parse().unwrap();
        assert!(lo <= hi);
        let reference: f64 = cols[4].parse().unwrap();
        assert!((reference / (1.13576e-12 * 2f64.powi(n as i32)) - 1.0).abs() < 1e-12);
    }
    // kappa_1 * env(54) = f0(54)
    let row: Vec<&str> = lines[1].split(',').collect();
    assert!(row[2].parse::<f64>().unwrap() <= 5100.0 && row[3].parse::<f64>().unwrap() >= 5100.0);

    let v = json(&run("figure --which 2 --range 247:251:2 --format json"));
    assert_eq!(v["result"]["kappa_index"], 6);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["f0"], f0_oracle(247).to_string());

    let out = run("figure --which 1 --range 2:10:2 --format csv");
    for line in out.stdout.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let n: u64 = cols[0].parse().unwrap();
        assert_eq!(cols[1], (n / 2 + 1).to_string());
    }
}

#[test]
fn obstruct_exit_codes_and_payloads() {
    let out = run("obstruct euler --n 54 --rank 14 --chi 6000 --json");
    assert_eq!(out.code, 1);
    let v = json(&out);
    let e = &v["result"]["entries"][0];
    assert_eq!(e["applicable"], "CertTrue");
    assert_eq!(e["obstructed"], "CertTrue");
    assert_eq!(e["values"]["f0"], "5100");
    assert_eq!(run("obstruct euler --n 54 --rank 14 --chi 5000").code, 0);
    assert_eq!(run("obstruct euler --n 54 --rank 13 --chi 6000").code, 0);
    assert_eq!(
        run("obstruct product --n 800 --rank 24 --chi-factor 2 --k 400").code,
        1
    );
    assert_eq!(
        run("obstruct symmspace --n 1024 --rank 27 --ss-rank 303").code,
        1
    );
    assert_eq!(
        run("obstruct symmspace --n 1024 --rank 27 --ss-rank 302").code,
        0
    );
    assert_eq!(
        run("obstruct connsum --n 64 --rank 15 --chi-factor 3 --k 5").code,
        0
    );
    let v = json(&run("obstruct tower --n 14 --rank 7 --fibers 2,6 --json"));
    assert!(v["result"]["flags"][0]
        .as_str()
        .unwrap()
        .contains("vacuous"));
    let v = json(&run("obstruct genus --n 64 --rank 15 --spin --json"));
    assert_eq!(v["result"]["entries"][0]["values"]["vanishing_count"], "4");
}

#[test]
fn output_is_deterministic() {
    for args in [
        "eval envelope --n 1000",
        "table1 --max-i 6",
        "certify --suite T1-n-seq,L2.2-base,L4.1-exceptions --json",
        "figure --which 1 --range 54:120:2 --format json",
    ] {
        assert_eq!(run(args), run(args), "{args}");
    }
    let one = run("certify --suite T1-kappa,L2.2-extended --json --jobs 1");
    let many = run("certify --suite T1-kappa,L2.2-extended --json --jobs 8");
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn precision_override_reaches_the_certifier() {
    let out = run_env("certify --suite T1-kappa --json", Some("16"));
    assert_eq!(out.code, 2);
    let v = json(&out);
    assert_eq!(v["precision_bits"], 16);
    assert_eq!(
        run_env("certify --suite T1-kappa --precision 4096", Some("16")).code,
        0
    );
    let out = run("certify --suite T1-n-seq,L4.1-exceptions");
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("VIOLATED"));
}
