use griffiths_core::exactnum::int;
use griffiths_core::wigner::{ninej, sixj, triangle_ok, HalfInteger, SixjMethod, SquareRootRational};
use griffiths_core::Error;
use proptest::prelude::*;

type Six = [HalfInteger; 6];

/// `{t0 t1 t2; b0 b1 b2}` stored as `[t0, t1, t2, b0, b1, b2]`.
fn admissible(s: &Six) -> bool {
    let [t0, t1, t2, b0, b1, b2] = *s;
    triangle_ok(t0, t1, t2) && triangle_ok(t0, b1, b2) && triangle_ok(b0, t1, b2) && triangle_ok(b0, b1, t2)
}

fn sixj_entries() -> impl Strategy<Value = Six> {
    prop::array::uniform6(0i64..=12).prop_map(|a| a.map(HalfInteger::from_twice)).prop_filter("triangles", admissible)
}

fn eval(s: &Six, m: SixjMethod) -> Result<SquareRootRational, Error> {
    sixj(s[0], s[1], s[2], s[3], s[4], s[5], m)
}

/// The 24 classical symmetries: column permutations and swaps of the
/// upper and lower entries in two columns.
fn symmetries(s: &Six) -> Vec<Six> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let flips = [[false, false, false], [true, true, false], [true, false, true], [false, true, true]];
    let mut out = Vec::new();
    for p in perms {
        for f in flips {
            let mut v = *s;
            for (k, &col) in p.iter().enumerate() {
                let (top, bottom) = (s[col], s[col + 3]);
                let (top, bottom) = if f[k] { (bottom, top) } else { (top, bottom) };
                v[k] = top;
                v[k + 3] = bottom;
            }
            out.push(v);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, max_global_rejects: 1 << 20, ..ProptestConfig::default() })]

    #[test]
    fn sixj_has_the_tetrahedral_symmetries(s in sixj_entries()) {
        let base = eval(&s, SixjMethod::RacahSum).unwrap();
        let images = symmetries(&s);
        prop_assert_eq!(images.len(), 24);
        for v in images {
            prop_assert_eq!(eval(&v, SixjMethod::RacahSum).unwrap(), base.clone());
        }
    }

    #[test]
    fn hypergeometric_agrees_with_racah_sum(s in sixj_entries()) {
        match eval(&s, SixjMethod::Hypergeometric) {
            Ok(v) => prop_assert_eq!(v, eval(&s, SixjMethod::RacahSum).unwrap()),
            Err(e) => prop_assert!(matches!(e, Error::ConstraintViolation(_)), "{e}"),
        }
    }

    #[test]
    fn ninej_with_zero_entry_reduces(a in 0i64..=6, b in 0i64..=6, c in 0i64..=6, d in 0i64..=6, e in 0i64..=6, f in 0i64..=6) {
        let h = HalfInteger::from_twice;
        let (a, b, c, d, e, f) = (h(a), h(b), h(c), h(d), h(e), h(f));
        prop_assume!(triangle_ok(a, b, e) && triangle_ok(c, d, e) && triangle_ok(a, c, f) && triangle_ok(b, d, f));
        let m = [[a, b, e], [c, d, e], [f, f, h(0)]];
        let six = sixj(a, b, e, d, c, f, SixjMethod::RacahSum).unwrap();
        let sign = if (b + c + e + f).to_int().unwrap() % 2 == 0 { 1 } else { -1 };
        let norm = SquareRootRational::sqrt(&int((e.twice() + 1) * (f.twice() + 1))).unwrap();
        prop_assert_eq!(ninej(&m).unwrap(), six.div(&norm).unwrap().scale(&int(sign)));
    }
}

#[test]
fn triangle_violations_are_errors() {
    let h = HalfInteger::from_int;
    assert!(matches!(sixj(h(1), h(1), h(3), h(1), h(1), h(1), SixjMethod::RacahSum), Err(Error::TriangleViolation(..))));
    assert!(matches!(ninej(&[[h(0), h(0), h(1)], [h(0); 3], [h(0); 3]]), Err(Error::TriangleViolation(..))));
}
