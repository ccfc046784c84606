use std::process::{Command, Output};

use griffiths_core::exactnum::ExactRational;
use griffiths_core::report::VerificationReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_griffiths")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_an_exact_value() {
    let o = run(&["eval", "griffiths", "--c", "1,1,1,1", "--N", "3", "--i", "1", "--j", "1", "--x", "1", "--y", "1"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "-7/20");
    assert_eq!(v["params"]["c0"], "-13");
}

#[test]
fn eval_table_has_one_row_per_pair() {
    let o = run(&["eval", "griffiths", "--c", "1/2,1/3,1/5,1/7", "--N", "2", "--table", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,x,y,value"));
    assert_eq!(lines.count(), 36);
}

#[test]
fn json_values_are_strings() {
    let o = run(&["eval", "racah", "--c", "1/2,1/3,1/5", "--N", "3", "--table"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    fn all_leaves_strings(v: &Value) -> bool {
        match v {
            Value::Object(m) => m.values().all(all_leaves_strings),
            Value::Array(a) => a.iter().all(all_leaves_strings),
            Value::String(_) => true,
            _ => false,
        }
    }
    assert!(all_leaves_strings(&v["values"]), "{v}");
}

fn value_of(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}");
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn rational(v: &Value) -> ExactRational {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn degree_zero_equals_normalization_product() {
    let t = value_of(&["eval", "tratnik", "--c", "1/2,1/3,1/5,1/7", "--N", "2", "--i", "0", "--j", "0", "--x", "1", "--y", "0"]);
    let c0 = t["params"]["c0"].as_str().unwrap().to_string();
    let first = value_of(&["eval", "racah", "--c", "1/2,1/3,1/5", "--N", "2", "--n", "0", "--x", "0"]);
    let second = value_of(&["eval", "racah", "--c", &format!("1/5,{c0},1/7"), "--N", "1", "--n", "0", "--x", "0"]);
    assert_eq!(rational(&t["value"]), rational(&first["value"]) * rational(&second["value"]));
}

#[test]
fn verify_exits_zero_on_exact_relations() {
    for rel in ["racah", "tratnik-recurrence1", "griffiths-duality-transport", "griffiths-appendix"] {
        let o = run(&["verify", rel, "--c", if rel == "racah" { "1/2,1/3,1/5" } else { "1/2,1/3,1/5,1/7" }, "--N", "2", "--format", "csv"]);
        assert!(o.status.success(), "{rel}: {}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        assert_eq!(text.lines().next(), Some("relation,status,checked,failures,skipped"));
        assert!(text.lines().skip(1).all(|l| l.contains(",exact,")), "{text}");
    }
}

#[test]
fn report_json_round_trips() {
    let o = run(&["verify", "griffiths-weight-identity", "--c", "1/2,1/3,1/5,1/7", "--N", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
}

#[test]
fn negative_size_is_a_usage_error() {
    let o = run(&["eval", "racah", "--N", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn seeded_parameters_are_reproducible() {
    let a = run(&["eval", "griffiths", "--N", "2", "--seed", "7", "--i", "1", "--j", "0", "--x", "0", "--y", "1"]);
    let b = run(&["eval", "griffiths", "--N", "2", "--seed", "7", "--i", "1", "--j", "0", "--x", "0", "--y", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn domains_names_the_cancelled_factor() {
    let o = run(&["domains", "--c", "1/2,1/3,1/5,1/7", "--N", "3", "--param", "2", "--k", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(c2+1)"));
}

#[test]
fn sixj_routes_agree() {
    let o = run(&["wigner", "sixj", "--j", "1,1,1,1/2,1/2,1/2", "--method", "both"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], true);
}

#[test]
fn limits_are_exact() {
    for kind in ["dHdHR", "RHH", "dHRH"] {
        let o = run(&["limits", "--kind", kind, "--c", "1/2,1/3,1/5,1/7", "--N", "2", "--format", "csv"]);
        assert!(o.status.success(), "{kind}");
    }
    let o = run(&["limits", "--kind", "krawtchouk", "--sigma", "-3,2,-1,5,-3", "--N", "2", "--format", "csv"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 4);
}
