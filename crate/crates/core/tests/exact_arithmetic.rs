mod common;

use common::{any_rational, small_rational};
use griffiths_core::exactnum::{naive_pfq, pochhammer, terminating_pfq, ExactRational, Field, Poly, RatFunc};
use num_traits::Zero;
use proptest::prelude::*;

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(any_rational(), 1..=max_deg + 1).prop_map(Poly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(6), poly(6).prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| RatFunc::new(n, d).expect("nonzero denominator"))
}

proptest! {
    #[test]
    fn pochhammer_splits(a in any_rational(), n in 0u64..8, m in 0u64..8) {
        let lhs = pochhammer(&a, n + m);
        let rhs = pochhammer(&a, n) * pochhammer(&a.addi(n as i64), m);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hypergeometric_matches_naive_sum(
        top in prop::collection::vec(any_rational(), 1..4),
        bottom in prop::collection::vec(small_rational(), 0..3),
        arg in any_rational(),
        n_terms in 0usize..=8,
    ) {
        let fast = terminating_pfq(&top, &bottom, &arg, n_terms);
        let slow = naive_pfq(&top, &bottom, &arg, n_terms);
        if let (Ok(a), Ok(b)) = (fast, slow) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn rational_functions_form_a_field(f in ratfunc(), g in ratfunc()) {
        prop_assume!(!g.is_zero());
        let back = (f.clone() * &g).div_checked(&g, "test").unwrap();
        prop_assert_eq!(back, f.clone());
        prop_assert_eq!(f.clone() + &g - &g, f);
    }

    #[test]
    fn limits_commute_with_arithmetic(f in ratfunc(), g in ratfunc()) {
        if let (Ok(a), Ok(b)) = (f.limit_at_zero(), g.limit_at_zero()) {
            prop_assert_eq!((f.clone() + &g).limit_at_zero().unwrap(), &a + &b);
            prop_assert_eq!((f.clone() * &g).limit_at_zero().unwrap(), &a * &b);
        }
        if let (Ok(a), Ok(b)) = (f.limit_at_infinity(), g.limit_at_infinity()) {
            prop_assert_eq!((f.clone() * &g).limit_at_infinity().unwrap(), &a * &b);
            let s = (f.clone() + &g).limit_at_infinity().unwrap();
            prop_assert_eq!(s, a + b);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfunc(), g in ratfunc(), t in any_rational()) {
        if let (Ok(a), Ok(b)) = (f.eval(&t), g.eval(&t)) {
            prop_assert_eq!((f.clone() * &g).eval(&t).unwrap(), &a * &b);
            prop_assert_eq!((f + g).eval(&t).unwrap(), a + b);
        }
    }
}

#[test]
fn terminating_sum_examples() {
    let one = ExactRational::from_int(1);
    // 2F1(-2, 3; 4; 1) = (4-3)_2 / (4)_2 by Chu-Vandermonde
    let v = terminating_pfq(&[ExactRational::from_int(-2), ExactRational::from_int(3)], &[ExactRational::from_int(4)], &one, 2).unwrap();
    assert_eq!(v, ExactRational::new(2.into(), 20.into()));
}
