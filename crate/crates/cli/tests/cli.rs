use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_implicit-deriv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn expand_second_order_text() {
    let o = run(&["expand", "--n", "2", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-Fxx/Fy + 2*Fx*Fxy/Fy^2 - Fx^2*Fyy/Fy^3\n");
    assert_eq!(stdout(&run(&["expand", "--n", "2"])), stdout(&o));
}

#[test]
fn expand_json_follows_the_schema() {
    let o = run(&["expand", "--n", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema"], "implicit-deriv/1");
    assert_eq!(doc["n"], 4);
    let terms = doc["terms"].as_array().unwrap();
    assert_eq!(doc["term_count"], 24);
    assert_eq!(terms.len(), 24);
    for t in terms {
        let obj = t.as_object().unwrap();
        assert_eq!(obj.len(), 3);
        assert!(t["coefficient"].as_str().unwrap().parse::<i64>().is_ok());
        assert!(t["fy_exponent"].as_u64().is_some());
        for pair in t["partition"].as_array().unwrap() {
            assert_eq!(pair.as_array().unwrap().len(), 2);
        }
    }
}

#[test]
fn expand_latex() {
    let o = run(&["expand", "--n", "1", "--format", "latex"]);
    assert_eq!(stdout(&o), "-\\frac{F_{x}}{F_{y}}\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["expand", "--n", "6", "--format", "json"][..],
        &["verify", "--max", "6", "--jobs", "4", "--json"][..],
        &["partitions", "--n", "5", "--json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn count_table_and_bfile() {
    let o = run(&["count", "--max", "5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1 1\n2 3\n3 9\n4 24\n5 61\n");
    let both = run(&["count", "--max", "8", "--method", "both"]);
    assert_eq!(code(&both), 0);
    assert_eq!(stdout(&both), stdout(&run(&["count", "--max", "8", "--method", "enum"])));
    let b = stdout(&run(&["count", "--max", "5", "--bfile"]));
    assert!(b.starts_with('#'));
    assert_eq!(b.lines().skip(1).collect::<Vec<_>>().join("\n") + "\n", stdout(&o));
    assert_eq!(code(&run(&["count", "--max", "5", "--degree", "3"])), 1);
}

#[test]
fn verify_passes_and_catches_mutations() {
    let o = run(&["verify", "--max", "8"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 8);
    for index in ["0", "100", "731"] {
        let m = run(&["verify", "--max", "8", "--mutate-term", index]);
        assert_eq!(code(&m), 2, "index {index}");
    }
    assert_eq!(code(&run(&["verify", "--max", "3", "--mutate-term", "99"])), 1);
}

#[test]
fn verify_json_follows_the_report_schema() {
    let o = run(&["verify", "--max", "3", "--json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = doc.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for (k, r) in reports.iter().enumerate() {
        assert_eq!(r["n"], k as u64 + 1);
        assert_eq!(r["status"], "equal");
        for key in ["missing", "extra", "coefficient_mismatches"] {
            assert!(r[key].as_array().unwrap().is_empty());
        }
    }
}

#[test]
fn verify_cf_mode_confirms_the_q_factor() {
    let o = run(&["verify", "--max", "6", "--cf-mode", "--json"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r2 = &doc[1];
    assert_eq!(r2["status"], "mismatch");
    let m = &r2["coefficient_mismatches"][0];
    assert_eq!(m["partition"], serde_json::json!([[1, 0], [1, 0], [0, 2]]));
    assert_eq!((m["expected"].as_str(), m["found"].as_str()), (Some("-1"), Some("-2")));
}

#[test]
fn compare_cf_table_and_count() {
    let o = run(&["compare-cf", "--n", "2"]);
    assert_eq!(
        stdout(&o),
        "partition\tcorrected\toriginal\tq\n(2,0)\t-1\t-1\t1\n(1,1)+(1,0)\t2\t2\t1\n(1,0)+(1,0)+(0,2)\t-1\t-2\t2\n"
    );
    let c = run(&["compare-cf", "--n", "2", "--count"]);
    assert_eq!(stdout(&c), "n=2 historical=2 a(n)=3 differ\n");
}

#[test]
fn partitions_listing() {
    let o = run(&["partitions", "--n", "2"]);
    assert_eq!(stdout(&o), "(2,0)\t1\t-\n(1,1)+(1,0)\t2\t+\n(1,0)+(1,0)+(0,2)\t1\t-\n");
    let j: Value = serde_json::from_str(&stdout(&run(&["partitions", "--n", "3", "--json"]))).unwrap();
    assert_eq!(j["count"], 9);
    assert_eq!(j["partitions"][0]["partition"], serde_json::json!([[3, 0]]));
    assert_eq!(j["partitions"][0]["alpha"], "1");
    assert_eq!(j["partitions"][0]["sign"], -1);
}

#[test]
fn eval_circle_and_log() {
    let o = run(&["eval", "--expr", "x^2+y^2-1", "--x", "0", "--y", "1", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-1\n");
    let l = run(&["eval", "--expr", "x-exp(y)", "--x", "1", "--y", "0", "--n", "3"]);
    assert_eq!(stdout(&l), "2\n");
    let s = run(&["eval", "--expr", "x-exp(y)", "--x", "1", "--solve-y", "0.5", "--n", "1", "--fd-check"]);
    assert_eq!(code(&s), 0);
    let lines: Vec<String> = stdout(&s).lines().map(String::from).collect();
    assert_eq!(lines.len(), 3);
    let value: f64 = lines[0].parse().unwrap();
    assert!((value - 1.0).abs() < 1e-12);
    assert!(lines[1].starts_with("fd "));
    let diff: f64 = lines[2].strip_prefix("abs_diff ").unwrap().parse().unwrap();
    assert!(diff < 1e-4);
}

#[test]
fn eval_warns_off_curve() {
    let o = run(&["eval", "--expr", "x^2+y^2-1", "--x", "0", "--y", "2", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["expand"])), 1);
    assert_eq!(code(&run(&["expand", "--n", "0"])), 1);
    assert_eq!(code(&run(&["expand", "--n", "2", "--format", "pdf"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    let singular = run(&["eval", "--expr", "x^2+y^2-1", "--x", "1", "--y", "0", "--n", "2"]);
    assert_eq!(code(&singular), 3);
    assert!(singular.stdout.is_empty());
    assert!(!singular.stderr.is_empty());
    assert_eq!(code(&run(&["eval", "--expr", "x^2+y^2-1", "--x", "2", "--solve-y", "1", "--n", "1"])), 3);
    assert_eq!(code(&run(&["eval", "--expr", "x-*y", "--x", "1", "--y", "0", "--n", "1"])), 1);
    assert_eq!(code(&run(&["eval", "--expr", "x-tan(y)", "--x", "1", "--y", "0", "--n", "1"])), 1);
}
