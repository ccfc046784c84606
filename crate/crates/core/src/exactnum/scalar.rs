use super::{ExactRational, Field, RatFunc};
use crate::error::{Error, Result};
use std::fmt;

/// A value that is either a plain rational or a formal rational function.
/// Arithmetic never mixes the two variants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(ExactRational),
    Function(RatFunc),
}

impl Scalar {
    fn zip<A, B>(&self, o: &Scalar, fr: A, ff: B) -> Result<Scalar>
    where
        A: FnOnce(&ExactRational, &ExactRational) -> Result<ExactRational>,
        B: FnOnce(&RatFunc, &RatFunc) -> Result<RatFunc>,
    {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => fr(a, b).map(Scalar::Rational),
            (Scalar::Function(a), Scalar::Function(b)) => ff(a, b).map(Scalar::Function),
            _ => Err(Error::MixedScalar),
        }
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar> {
        self.zip(o, |a, b| Ok(a + b), |a, b| Ok(a + b))
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar> {
        self.zip(o, |a, b| Ok(a - b), |a, b| Ok(a - b))
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar> {
        self.zip(o, |a, b| Ok(a * b), |a, b| Ok(a * b))
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar> {
        self.zip(o, |a, b| a.div_checked(b, "scalar division"), |a, b| a.div_checked(b, "scalar division"))
    }

    pub fn as_rational(&self) -> Option<&ExactRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Function(_) => None,
        }
    }
}

impl From<ExactRational> for Scalar {
    fn from(r: ExactRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<RatFunc> for Scalar {
    fn from(f: RatFunc) -> Self {
        Scalar::Function(f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Function(g) => write!(f, "{g}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn mixing_is_an_error() {
        let a = Scalar::from(int(1));
        let b = Scalar::from(RatFunc::var());
        assert_eq!(a.try_add(&b), Err(Error::MixedScalar));
        assert_eq!(b.try_mul(&a), Err(Error::MixedScalar));
    }

    #[test]
    fn same_variant_arithmetic() {
        let a = Scalar::from(rat(1, 2));
        let b = Scalar::from(rat(1, 3));
        assert_eq!(a.try_add(&b).unwrap(), Scalar::from(rat(5, 6)));
        assert_eq!(a.try_div(&Scalar::from(int(0))), Err(Error::VanishingDenominator("scalar division")));
    }
}
