use intdisc_web::{evaluate_json, hyp2f1_json, invariants_json};
use serde_json::Value;

const FERMAT: &str = "form n=3 r=3\n3 0 0 = 1\n0 3 0 = 1\n0 0 3 = 1\n";

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn invariants_of_the_fermat_cubic() {
    let v = parse(invariants_json(FERMAT).unwrap());
    assert_eq!(v["case"], "3|3");
    assert_eq!(v["D"], "108");
    assert_eq!(v["invariants"][1]["exact"], "-6");
}

#[test]
fn evaluate_quartic() {
    let v = parse(evaluate_json("form n=2 r=4\n4 0 = 1\n0 4 = 1\n", "1").unwrap());
    assert!((v["value"].as_f64().unwrap() - 2f64.powf(-0.25)).abs() < 1e-14);
    assert!(evaluate_json(FERMAT, "3").is_err());
}

#[test]
fn hyp2f1_elementary_value() {
    // 2F1(1, 1; 2; t) = -ln(1 - t) / t
    let v = parse(hyp2f1_json(1.0, 1.0, 2.0, 0.4).unwrap());
    let expect = -(0.6f64).ln() / 0.4;
    assert!((v["value"].as_f64().unwrap() - expect).abs() < 1e-14);
    assert_eq!(v["route"], "series");
}

#[test]
fn errors_are_messages() {
    let e = invariants_json("form n=2 r=2\n3 0 = 1\n").unwrap_err();
    assert!(e.contains("line 2"));
}
