//! Parameter parsing and seeded sampling of generic parameters.

use griffiths_core::bivariate::{genericity_check, BivariateParams};
use griffiths_core::exactnum::{parse_rational, rat, ExactRational};
use griffiths_core::racah_uni::{genericity_check as uni_generic, UniParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn parse_list(s: &str) -> Result<Vec<ExactRational>, String> {
    s.split(',').map(|t| parse_rational(t).map_err(|e| e.to_string())).collect()
}

/// `c1,c2,c3,c4` (with `c0` from the constraint) or `c0,c1,c2,c3,c4`.
pub fn bivariate(list: &[ExactRational], n: i64) -> Result<BivariateParams<ExactRational>, String> {
    match list {
        [c1, c2, c3, c4] => Ok(BivariateParams::new(c1.clone(), c2.clone(), c3.clone(), c4.clone(), n)),
        [c0, c1, c2, c3, c4] => {
            BivariateParams::from_all([c0.clone(), c1.clone(), c2.clone(), c3.clone(), c4.clone()], n).map_err(|e| e.to_string())
        }
        _ => Err(format!("expected 4 or 5 parameters, got {}", list.len())),
    }
}

pub fn univariate(list: &[ExactRational], n: i64) -> Result<UniParams<ExactRational>, String> {
    match list {
        [c1, c2, c3] => Ok(UniParams::new(c1.clone(), c2.clone(), c3.clone(), n)),
        _ => Err(format!("expected 3 parameters c1,c2,c3, got {}", list.len())),
    }
}

/// Rationals `p/q` with `1 <= |p| <= 12`, `1 <= q <= 12`.
fn sample(rng: &mut ChaCha8Rng) -> ExactRational {
    let mut p: i64 = rng.gen_range(1..=12);
    if rng.gen_bool(0.5) {
        p = -p;
    }
    rat(p, rng.gen_range(1..=12))
}

/// Draws `c1..c4` until the set passes the genericity check.
pub fn sample_bivariate(seed: u64, n: i64) -> BivariateParams<ExactRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let p = BivariateParams::new(sample(&mut rng), sample(&mut rng), sample(&mut rng), sample(&mut rng), n);
        if genericity_check(&p) {
            return p;
        }
    }
}

pub fn sample_univariate(seed: u64, n: i64) -> UniParams<ExactRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let p = UniParams::new(sample(&mut rng), sample(&mut rng), sample(&mut rng), n);
        if uni_generic(&p) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        let v = parse_list("1/2,-3,4/6").unwrap();
        assert_eq!(v[2], rat(2, 3));
        assert!(parse_list("1/0").is_err());
        assert!(bivariate(&v, 2).is_err());
    }

    #[test]
    fn sampling_is_reproducible_and_generic() {
        let a = sample_bivariate(7, 3);
        assert_eq!(a, sample_bivariate(7, 3));
        assert!(genericity_check(&a));
        assert!(uni_generic(&sample_univariate(7, 4)));
    }
}
