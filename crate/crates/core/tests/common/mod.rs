#![allow(dead_code)]

use griffiths_core::bivariate::{genericity_check, BivariateParams};
use griffiths_core::exactnum::{rat, ExactRational};
use proptest::prelude::*;

/// Nonzero rationals with small numerator and denominator.
pub fn small_rational() -> impl Strategy<Value = ExactRational> {
    (1i64..=40, any::<bool>(), 1i64..=13).prop_map(|(p, neg, q)| rat(if neg { -p } else { p }, q))
}

pub fn any_rational() -> impl Strategy<Value = ExactRational> {
    (-40i64..=40, 1i64..=13).prop_map(|(p, q)| rat(p, q))
}

/// `c1..c4` accepted by the genericity check at size `n`.
pub fn generic_params(n: i64) -> impl Strategy<Value = BivariateParams<ExactRational>> {
    [small_rational(), small_rational(), small_rational(), small_rational()]
        .prop_map(move |[a, b, c, d]| BivariateParams::new(a, b, c, d, n))
        .prop_filter("generic", genericity_check)
}

pub fn fixed_sets(n: i64) -> Vec<BivariateParams<ExactRational>> {
    vec![
        BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), n),
        BivariateParams::new(rat(2, 3), rat(-7, 4), rat(5, 2), rat(3, 11), n),
        BivariateParams::new(rat(-1, 3), rat(9, 5), rat(4, 7), rat(-5, 13), n),
    ]
}
