mod support;

use rnpoly::poly::{compute_r, compute_r_tilde, support as support_of, RSequence};
use rnpoly::DegreeSequence;
use support::listed;

#[test]
fn r2_to_r6_match_listings() {
    let mut seq = RSequence::new();
    for n in 2..=6 {
        assert_eq!(seq.get(n).unwrap(), &listed(n), "R_{n}");
    }
}

#[test]
fn r6_text_form() {
    assert_eq!(
        compute_r(6).unwrap().to_string(),
        "-30*X2*X5^2 - 120*X3*X4*X5 - 30*X4^3 + 300*X2^2*X4^2 + 900*X2*X3^2*X4 \
         + 210*X3^4 - 1200*X2^3*X3^2 + 120*X2^6"
    );
    assert_eq!(compute_r(3).unwrap().to_string(), "-2*X2^3");
    assert_eq!(compute_r(2).unwrap().to_string(), "0");
}

#[test]
fn r_tilde_5() {
    let mut expected = listed(5);
    expected.add_term(rnpoly::Monomial::new([(5, 2)]).unwrap(), 1.into());
    assert_eq!(compute_r_tilde(5).unwrap(), expected);
    assert_eq!(compute_r_tilde(5).unwrap().len(), 5);
}

#[test]
fn r5_support() {
    let s = support_of(&compute_r(5).unwrap());
    let expected: Vec<DegreeSequence> = ["4,4,2", "4,3,3", "3,3,2,2", "2,2,2,2,2"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(s.into_iter().rev().collect::<Vec<_>>(), expected);
}

#[test]
fn json_form_of_r5() {
    let p = compute_r(5).unwrap();
    let v: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 4);
    assert_eq!(arr[0]["exponents"], serde_json::json!({"2": 1, "4": 2}));
    assert_eq!(arr[0]["coeff"], "-20");
    assert_eq!(arr[3]["coeff"], "-24");
}
