//! Exact scalars: big rationals, one-variable polynomials and rational
//! functions, Pochhammer symbols and terminating hypergeometric sums.

mod field;
mod hypergeom;
mod poly;
mod ratfunc;
mod scalar;

pub use field::Field;
pub use hypergeom::{naive_pfq, terminating_pfq};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::Scalar;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type ExactRational = BigRational;

pub fn rat(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Rising factorial `a (a+1) ... (a+n-1)`.
pub fn pochhammer<F: Field>(a: &F, n: u64) -> F {
    let mut out = F::one();
    for k in 0..n {
        out = out * a.addi(k as i64);
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Pochhammer symbol with a signed length; negative lengths are rejected by
/// the callers' index conventions, so they are treated as the empty product.
pub fn poch<F: Field>(a: &F, n: i64) -> F {
    pochhammer(a, n.max(0) as u64)
}

pub fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= k;
    }
    out
}

pub fn binomial(n: i64, k: i64) -> ExactRational {
    if n < 0 || k < 0 || k > n {
        return ExactRational::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for t in 0..k {
        out = out * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    BigRational::from_integer(out)
}

/// `(-1)^n` for any integer `n`.
pub fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Product of `num` divided by product of `den`.
pub fn ratio<F: Field>(num: &[F], den: &[F], ctx: &'static str) -> Result<F> {
    let mut n = F::one();
    for f in num {
        n = n * f;
    }
    if n.is_zero() {
        return Ok(n);
    }
    let mut d = F::one();
    for f in den {
        d = d * f;
    }
    n.div_checked(&d, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(7), 0), int(1));
        assert_eq!(pochhammer(&int(3), 4), int(360));
        assert_eq!(pochhammer(&int(-2), 5), int(0));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(5, 6), int(0));
    }

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn sign_of_negative_exponent() {
        assert_eq!(sign(-1), -1);
        assert_eq!(sign(-2), 1);
        assert_eq!(sign(3), -1);
    }
}
