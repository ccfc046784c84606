use super::{pochhammer, Field};
use crate::error::{Error, Result};

/// Terminating generalized hypergeometric sum
/// `sum_{k=0}^{n_terms} prod (top)_k / prod (bottom)_k * arg^k / k!`,
/// evaluated by multiplying successive term ratios. A vanishing top factor
/// ends the sum; a vanishing bottom factor before that is an error.
pub fn terminating_pfq<F: Field>(top: &[F], bottom: &[F], arg: &F, n_terms: usize) -> Result<F> {
    let mut sum = F::one();
    let mut term = F::one();
    for k in 0..n_terms {
        let kk = k as i64;
        let mut num = arg.clone();
        for a in top {
            num = num * a.addi(kk);
        }
        if num.is_zero() {
            break;
        }
        let mut den = F::from_int(kk + 1);
        for b in bottom {
            den = den * b.addi(kk);
        }
        if den.is_zero() {
            return Err(Error::VanishingDenominator("hypergeometric bottom parameter"));
        }
        term = term * num.div_checked(&den, "hypergeometric term")?;
        sum = sum + &term;
    }
    Ok(sum)
}

/// Reference summation from explicit Pochhammer products.
pub fn naive_pfq<F: Field>(top: &[F], bottom: &[F], arg: &F, n_terms: usize) -> Result<F> {
    let mut sum = F::zero();
    let mut power = F::one();
    let mut fact = F::one();
    for k in 0..=n_terms {
        let mut num = power.clone();
        for a in top {
            num = num * pochhammer(a, k as u64);
        }
        if num.is_zero() {
            break;
        }
        let mut den = fact.clone();
        for b in bottom {
            den = den * pochhammer(b, k as u64);
        }
        sum = sum + num.div_checked(&den, "hypergeometric term")?;
        power = power * arg;
        fact = fact.muli(k as i64 + 1);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, ExactRational};

    fn v(xs: &[i64]) -> Vec<ExactRational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn single_term() {
        let r = terminating_pfq(&v(&[0, 3, 4, 5]), &v(&[6, 7, 8]), &int(1), 0).unwrap();
        assert_eq!(r, int(1));
    }

    #[test]
    fn two_terms() {
        let r = terminating_pfq(&v(&[-1, 1, 1, 1]), &v(&[2, 2, 2]), &int(1), 1).unwrap();
        assert_eq!(r, rat(7, 8));
    }

    #[test]
    fn zero_top_before_zero_bottom() {
        let top = v(&[-2, 1, -1, 4]);
        let bottom = v(&[2, 7, -2]);
        let r = terminating_pfq(&top, &bottom, &int(1), 2).unwrap();
        let oracle = naive_pfq(&top, &bottom, &int(1), 2).unwrap();
        assert_eq!(r, oracle);
        assert_eq!(r, rat(5, 7));
    }

    #[test]
    fn zero_bottom_first_is_error() {
        let r = terminating_pfq(&v(&[-3, 1]), &v(&[-1]), &int(1), 3);
        assert!(matches!(r, Err(Error::VanishingDenominator(_))));
    }
}
