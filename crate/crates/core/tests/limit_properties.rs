mod common;

use common::generic_params;
use griffiths_core::bivariate::BivariateParams;
use griffiths_core::exactnum::{int, ExactRational};
use griffiths_core::limits::{limit_check, limit_orthogonality, univariate_krawtchouk_limit, HybridKind, KrawtchoukSpeeds, LimitSpec};
use proptest::prelude::*;

fn speeds(n: i64) -> impl Strategy<Value = KrawtchoukSpeeds> {
    prop::array::uniform4(-6i64..=6).prop_filter_map("admissible speeds", move |s| {
        let sigma = [-(s[0] + s[1] + s[2] + s[3]), s[0], s[1], s[2], s[3]].map(int);
        KrawtchoukSpeeds::new(sigma, n).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn hybrid_limits_match(p in generic_params(2)) {
        for k in HybridKind::ALL {
            let spec = LimitSpec::Hybrid(k);
            let r = limit_check(&spec, &p);
            prop_assert!(r.is_exact(), "{} {:?}", k.name(), r.counterexamples);
            let r = limit_orthogonality(&spec, &p);
            prop_assert!(r.is_exact(), "{} {:?}", k.name(), r.counterexamples);
        }
    }

    #[test]
    fn krawtchouk_limit_matches(sp in speeds(2)) {
        let p = BivariateParams::new(ExactRational::from(int(0)), int(0), int(0), int(0), 2);
        prop_assert!(univariate_krawtchouk_limit(&sp, 3).is_exact());
        let spec = LimitSpec::Krawtchouk(sp);
        let r = limit_check(&spec, &p);
        prop_assert!(r.is_exact(), "{:?}", r.counterexamples);
        prop_assert!(limit_orthogonality(&spec, &p).is_exact());
    }
}

#[test]
fn offsets_do_not_change_the_limit() {
    let sigma = [-3, 2, -1, 5, -3].map(int);
    let n = 2;
    let a = KrawtchoukSpeeds::new(sigma.clone(), n).unwrap();
    let b = KrawtchoukSpeeds::with_offsets(sigma, [-1, -2, -1, -2, -1].map(int), n).unwrap();
    let p = BivariateParams::new(int(0), int(0), int(0), int(0), n);
    assert!(limit_check(&LimitSpec::Krawtchouk(a), &p).is_exact());
    assert!(limit_check(&LimitSpec::Krawtchouk(b), &p).is_exact());
}
