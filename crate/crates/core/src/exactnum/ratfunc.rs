use super::{ExactRational, Field, Poly};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced quotient `num / den` of polynomials in one formal symbol.
/// The denominator is monic and coprime to the numerator; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds and reduces `num / den`; `None` if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_poly(Poly::zero()));
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_constant() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        Some(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        let lead = den.leading();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The formal symbol.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `a + b t`.
    pub fn linear(a: ExactRational, b: ExactRational) -> Self {
        Self::from_poly(Poly::new(vec![a, b]))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at the symbol = 0.
    pub fn limit_at_zero(&self) -> Result<ExactRational> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        Ok(self.num.coeff(0) / d0)
    }

    /// Limit as the symbol tends to infinity.
    pub fn limit_at_infinity(&self) -> Result<ExactRational> {
        let dn = match self.num.degree() {
            None => return Ok(ExactRational::zero()),
            Some(d) => d,
        };
        let dd = self.den.degree().unwrap_or(0);
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Ok(ExactRational::zero()),
            std::cmp::Ordering::Equal => Ok(self.num.leading() / self.den.leading()),
            std::cmp::Ordering::Greater => Err(Error::Divergent),
        }
    }

    /// Order of vanishing at zero (negative for a pole); `None` for zero.
    pub fn order_at_zero(&self) -> Option<i64> {
        let v = self.num.valuation()? as i64;
        Some(v - self.den.valuation().unwrap_or(0) as i64)
    }

    /// Coefficient of the lowest power of the symbol in the Laurent expansion at zero.
    pub fn leading_at_zero(&self) -> Option<ExactRational> {
        let vn = self.num.valuation()?;
        let vd = self.den.valuation().unwrap_or(0);
        Some(self.num.coeff(vn) / self.den.coeff(vd))
    }

    /// Degree of the numerator minus degree of the denominator; `None` for zero.
    pub fn order_at_infinity(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        Some(dn - self.den.degree().unwrap_or(0) as i64)
    }

    /// Leading coefficient of the expansion at infinity.
    pub fn leading_at_infinity(&self) -> Option<ExactRational> {
        if self.num.is_zero() {
            return None;
        }
        Some(self.num.leading() / self.den.leading())
    }

    pub fn eval(&self, t: &ExactRational) -> Result<ExactRational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::VanishingDenominator("rational function evaluation"));
        }
        Ok(self.num.eval(t) / d)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_constant() {
                return RatFunc { num: &self.num + &o.num, den: self.den.clone() };
            }
            return RatFunc::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        let g = Poly::gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g);
        let d2 = o.den.div_exact(&g);
        let num = &(&self.num * &d2) + &(&o.num * &d1);
        if num.is_zero() {
            return RatFunc::from_poly(Poly::zero());
        }
        let den = &(&d1 * &d2) * &g;
        if g.is_constant() {
            return RatFunc::normalized(num, den);
        }
        let h = Poly::gcd(&num, &g);
        if h.is_constant() {
            RatFunc::normalized(num, den)
        } else {
            RatFunc::normalized(num.div_exact(&h), den.div_exact(&h))
        }
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFunc::from_poly(Poly::zero());
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let (n1, d2) = if g1.is_constant() { (self.num.clone(), o.den.clone()) } else { (self.num.div_exact(&g1), o.den.div_exact(&g1)) };
        let (n2, d1) = if g2.is_constant() { (o.num.clone(), self.den.clone()) } else { (o.num.div_exact(&g2), self.den.div_exact(&g2)) };
        RatFunc::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
}

impl Field for RatFunc {
    fn from_rational(r: &ExactRational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::normalized(self.den.clone(), self.num.clone()))
        }
    }
    fn to_rational(&self) -> Option<ExactRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.leading().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, pochhammer};

    fn eps() -> RatFunc {
        RatFunc::var()
    }

    #[test]
    fn limit_at_zero_examples() {
        let e = eps();
        let f = (&e * &e + e.clone()).div_checked(&e, "test").unwrap();
        assert_eq!(f.limit_at_zero().unwrap(), int(1));
        let g = pochhammer(&e, 2).div_checked(&pochhammer(&e, 1), "test").unwrap();
        assert_eq!(g.limit_at_zero().unwrap(), int(1));
        let h = RatFunc::one().div_checked(&e, "test").unwrap();
        assert_eq!(h.limit_at_zero(), Err(Error::PoleAtZero));
    }

    #[test]
    fn limit_at_infinity_examples() {
        let t = eps();
        let f = t.muli(2).addi(1).div_checked(&t.addi(3), "test").unwrap();
        assert_eq!(f.limit_at_infinity().unwrap(), int(2));
        let g = RatFunc::one().div_checked(&t.addi(1), "test").unwrap();
        assert_eq!(g.limit_at_infinity().unwrap(), int(0));
        let h = (&t * &t).div_checked(&t, "test").unwrap();
        assert_eq!(h.limit_at_infinity(), Err(Error::Divergent));
    }

    #[test]
    fn canonical_form_is_unique() {
        let t = eps();
        let a = (t.addi(1) * t.addi(2)).div_checked(&(t.addi(2) * t.muli(3)), "test").unwrap();
        let b = t.addi(1).div_checked(&t.muli(3), "test").unwrap();
        assert_eq!(a, b);
        assert!(a.den().leading().is_one());
    }

    #[test]
    fn orders_and_leading_terms() {
        let t = eps();
        let f = (&t * &t).muli(5).div_checked(&t.addi(2), "test").unwrap();
        assert_eq!(f.order_at_zero(), Some(2));
        assert_eq!(f.leading_at_zero(), Some(crate::exactnum::rat(5, 2)));
        assert_eq!(f.order_at_infinity(), Some(1));
        assert_eq!(f.leading_at_infinity(), Some(int(5)));
    }
}
