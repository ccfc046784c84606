mod common;

use common::small_rational;
use griffiths_core::exactnum::{ExactRational, Field};
use griffiths_core::racah_uni::{
    cont_a, cont_b, cont_c, cont_d, degree_in_lambda, genericity_check, omega, racah_p, verify_uni, Sign, UniParams, UniRelation,
};
use proptest::prelude::*;

fn generic_uni() -> impl Strategy<Value = UniParams<ExactRational>> {
    (small_rational(), small_rational(), small_rational(), 1i64..=5)
        .prop_map(|(a, b, c, n)| UniParams::new(a, b, c, n))
        .prop_filter("generic", genericity_check)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_relation_is_exact(p in generic_uni()) {
        for rel in UniRelation::ALL {
            let r = verify_uni(rel, &p);
            prop_assert!(r.is_exact(), "{} {:?}", rel.name(), r.counterexamples);
        }
    }

    #[test]
    fn degree_in_lambda_equals_index(p in generic_uni()) {
        for n in 0..=p.n {
            prop_assert_eq!(degree_in_lambda(n, &p).unwrap(), Some(n as usize));
        }
    }

    #[test]
    fn contiguity_reflections(p in generic_uni(), t in small_rational()) {
        for s in [Sign::Plus, Sign::Minus] {
            let reflected_n = -t.clone() - p.c23().addi(1);
            if let (Ok(c), Ok(a)) = (cont_c(s, &t, &p), cont_a(s, &reflected_n, &p)) {
                prop_assert_eq!(c, a);
            }
            let reflected_x = -t.clone() - p.c12().addi(1);
            if let (Ok(d), Ok(b)) = (cont_d(s, &t, &p), cont_b(s, &reflected_x, &p)) {
                prop_assert_eq!(d, b);
            }
        }
    }

    #[test]
    fn duality_with_reversed_parameters(p in generic_uni()) {
        let dual = UniParams::new(p.c3.clone(), p.c2.clone(), p.c1.clone(), p.n);
        for n in 0..=p.n {
            for x in 0..=p.n {
                let lhs = omega(x, &dual).unwrap() * racah_p(n, &ExactRational::from_int(x), &p).unwrap();
                let rhs = omega(n, &p).unwrap() * racah_p(x, &ExactRational::from_int(n), &dual).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn degree_zero_is_the_normalization() {
    let p = UniParams::new(
        ExactRational::new(1.into(), 2.into()),
        ExactRational::new(1.into(), 3.into()),
        ExactRational::new(1.into(), 5.into()),
        4,
    );
    for x in 0..=4 {
        assert_eq!(racah_p(0, &ExactRational::from_int(x), &p).unwrap(), omega(0, &p).unwrap());
    }
    assert_eq!(racah_p(5, &ExactRational::from_int(0), &p).unwrap(), ExactRational::from_int(0));
}
