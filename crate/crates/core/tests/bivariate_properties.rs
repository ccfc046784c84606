mod common;

use common::{fixed_sets, generic_params};
use griffiths_core::bivariate::{degree_pairs, grid_points};
use griffiths_core::griffiths::{
    appendix_sweep, griffiths_g, griffiths_g_bounded, griffiths_table, verify_griffiths_with, AppendixCase, GriffithsForm,
    GriffithsRelation, SumBound,
};
use griffiths_core::racah_uni::omega;
use griffiths_core::tratnik::{tratnik_t, tratnik_table, verify_tratnik_with, TratnikRelation};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn tratnik_relations_hold(p in (1i64..=3).prop_flat_map(generic_params)) {
        let t = tratnik_table(&p).unwrap();
        for rel in TratnikRelation::ALL {
            let r = verify_tratnik_with(rel, &p, &t);
            prop_assert!(r.is_exact(), "{} {:?}", rel.name(), r.counterexamples);
        }
    }

    #[test]
    fn griffiths_relations_hold(p in (1i64..=3).prop_flat_map(generic_params)) {
        let t = griffiths_table(&p, GriffithsForm::TripleSum).unwrap();
        for rel in GriffithsRelation::ALL {
            let r = verify_griffiths_with(rel, &p, &t);
            prop_assert!(r.is_exact(), "{} {:?}", rel.name(), r.counterexamples);
        }
    }

    #[test]
    fn summation_bound_is_immaterial(p in (1i64..=3).prop_flat_map(generic_params)) {
        for d in degree_pairs(p.n) {
            for g in grid_points(p.n) {
                let base = griffiths_g(d, g, &p, GriffithsForm::TripleSum).unwrap();
                for b in [SumBound::NMinusY, SumBound::MinJY] {
                    prop_assert_eq!(griffiths_g_bounded(d, g, &p, b).unwrap(), base.clone());
                }
            }
        }
    }

    #[test]
    fn appendix_identities_hold(p in (1i64..=3).prop_flat_map(generic_params)) {
        for case in AppendixCase::ALL {
            let r = appendix_sweep(case, &p);
            prop_assert!(r.is_exact(), "{} {:?}", case.name(), r.counterexamples);
        }
    }
}

#[test]
fn degree_zero_tratnik_is_a_product_of_normalizations() {
    for p in fixed_sets(3) {
        for g in grid_points(3) {
            let expected = omega(0, &p.uni(1, 2, 3, 3)).unwrap() * omega(0, &p.uni(3, 0, 4, 3 - g.x)).unwrap();
            assert_eq!(tratnik_t(degree_pairs(0)[0], g, &p).unwrap(), expected);
        }
    }
}

#[test]
fn forms_agree_on_fixed_sets() {
    for p in fixed_sets(4) {
        let t = griffiths_table(&p, GriffithsForm::TripleSum).unwrap();
        assert!(verify_griffiths_with(GriffithsRelation::FormAgreement, &p, &t).is_exact());
    }
}
