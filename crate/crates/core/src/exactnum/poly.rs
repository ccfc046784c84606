use super::ExactRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one formal symbol with rational coefficients, stored in
/// ascending order and trimmed so the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<ExactRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(ExactRational::one())
    }

    /// The formal symbol itself.
    pub fn var() -> Self {
        Poly::new(vec![ExactRational::zero(), ExactRational::one()])
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> ExactRational {
        self.coeffs.last().cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, t: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, s: &ExactRational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        if lead.is_one() {
            return self.clone();
        }
        self.scale(&lead.recip())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv_lead = d.leading().recip();
        let mut quot = vec![ExactRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &inv_lead;
            if q.is_zero() {
                continue;
            }
            for (m, dc) in d.coeffs.iter().enumerate() {
                rem[k + m] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient when `d` is known to divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        if d.is_constant() {
            return self.scale(&d.leading().recip());
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        let (mut x, mut y) = if a.coeffs.len() >= b.coeffs.len() { (a.monic(), b.monic()) } else { (b.monic(), a.monic()) };
        while !y.is_zero() {
            let r = x.div_rem(&y).1.monic();
            x = y;
            y = r;
        }
        x
    }

    /// Shifts the formal symbol: returns p(t + s).
    pub fn shift(&self, s: &ExactRational) -> Poly {
        let mut out = Poly::zero();
        let lin = Poly::new(vec![s.clone(), ExactRational::one()]);
        for c in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &Poly::constant(c.clone());
        }
        out
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.coeffs.get(k), o.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![ExactRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
