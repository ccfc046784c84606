//! Wigner 6j and 9j symbols in exact arithmetic, and the proportionality of
//! Griffiths polynomials at negative-integer parameters to 9j symbols.

use crate::bivariate::{degree_pairs, grid_points, BivariateParams, DegreePair, GridPoint};
use crate::error::{Error, Result};
use crate::exactnum::{factorial, terminating_pfq, ExactRational, RatFunc};
use crate::griffiths::{griffiths_table, GriffithsForm};
use crate::report::VerificationReport;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A non-negative or negative multiple of 1/2, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub fn from_int(v: i64) -> Self {
        HalfInteger { twice: 2 * v }
    }

    pub fn from_rational(r: &ExactRational) -> Result<Self> {
        let t = r * ExactRational::from_integer(2.into());
        if !t.is_integer() {
            return Err(Error::Parse(format!("{r} is not a multiple of 1/2")));
        }
        let twice = i64::try_from(t.to_integer()).map_err(|_| Error::Parse(format!("{r} out of range")))?;
        Ok(HalfInteger { twice })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_rational(&crate::exactnum::parse_rational(s)?)
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_rational(&self) -> ExactRational {
        ExactRational::new(self.twice.into(), 2.into())
    }

    /// The integer value; fails for odd halves.
    pub fn to_int(&self) -> Result<i64> {
        if self.is_integer() {
            Ok(self.twice / 2)
        } else {
            Err(Error::ConstraintViolation(format!("{self} is not an integer")))
        }
    }
}

impl std::ops::Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, o: HalfInteger) -> HalfInteger {
        HalfInteger { twice: self.twice + o.twice }
    }
}

impl std::ops::Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, o: HalfInteger) -> HalfInteger {
        HalfInteger { twice: self.twice - o.twice }
    }
}

impl std::ops::Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> HalfInteger {
        HalfInteger { twice: -self.twice }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// `rational_part * sqrt(radicand)` with an integer radicand free of small
/// square factors, and radicand 1 for zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareRootRational {
    rational_part: ExactRational,
    radicand: BigInt,
}

const TRIAL_PRIMES_BELOW: u32 = 1000;

fn small_primes() -> Vec<u32> {
    let mut ps: Vec<u32> = Vec::new();
    for n in 2..TRIAL_PRIMES_BELOW {
        if ps.iter().take_while(|p| *p * *p <= n).all(|p| n % p != 0) {
            ps.push(n);
        }
    }
    ps
}

/// Splits `n > 0` as `outside^2 * inside`.
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut inside = n.clone();
    let mut outside = BigInt::one();
    for p in small_primes() {
        let p = BigInt::from(p);
        let sq = &p * &p;
        while (&inside % &sq).is_zero() {
            inside /= &sq;
            outside *= &p;
        }
        if sq > inside {
            break;
        }
    }
    let r = inside.sqrt();
    if &r * &r == inside {
        outside *= r;
        inside = BigInt::one();
    }
    (outside, inside)
}

impl SquareRootRational {
    pub fn from_rational(r: ExactRational) -> Self {
        SquareRootRational { rational_part: r, radicand: BigInt::one() }
    }

    /// `r * sqrt(q)`; fails for negative `q`.
    pub fn new(r: ExactRational, q: &ExactRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::DegenerateParameter(format!("negative radicand {q}")));
        }
        if r.is_zero() || q.is_zero() {
            return Ok(Self::zero());
        }
        // sqrt(a/b) = sqrt(a b) / b
        let (a, b) = (q.numer().clone(), q.denom().clone());
        let (outside, inside) = extract_square(&(&a * &b));
        Ok(SquareRootRational { rational_part: r * ExactRational::new(outside, b), radicand: inside })
    }

    pub fn sqrt(q: &ExactRational) -> Result<Self> {
        Self::new(ExactRational::one(), q)
    }

    pub fn zero() -> Self {
        Self::from_rational(ExactRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero()
    }

    pub fn rational_part(&self) -> &ExactRational {
        &self.rational_part
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    /// The exact square.
    pub fn square(&self) -> ExactRational {
        &self.rational_part * &self.rational_part * ExactRational::from_integer(self.radicand.clone())
    }

    pub fn mul(&self, o: &SquareRootRational) -> SquareRootRational {
        let q = ExactRational::from_integer(&self.radicand * &o.radicand);
        Self::new(&self.rational_part * &o.rational_part, &q).expect("radicands are non-negative")
    }

    pub fn scale(&self, r: &ExactRational) -> SquareRootRational {
        if r.is_zero() {
            return Self::zero();
        }
        SquareRootRational { rational_part: &self.rational_part * r, radicand: self.radicand.clone() }
    }

    pub fn div(&self, o: &SquareRootRational) -> Result<SquareRootRational> {
        if o.is_zero() {
            return Err(Error::VanishingDenominator("square-root division"));
        }
        let q = ExactRational::new(self.radicand.clone(), o.radicand.clone());
        Self::new(&self.rational_part / &o.rational_part, &q)
    }

    /// Sum of two values with the same radicand.
    pub fn try_add(&self, o: &SquareRootRational) -> Result<SquareRootRational> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != o.radicand {
            return Err(Error::IncommensurableRadicals(self.to_string(), o.to_string()));
        }
        let r = &self.rational_part + &o.rational_part;
        if r.is_zero() {
            return Ok(Self::zero());
        }
        Ok(SquareRootRational { rational_part: r, radicand: self.radicand.clone() })
    }
}

impl fmt::Display for SquareRootRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.rational_part)
        } else {
            write!(f, "{}*sqrt({})", self.rational_part, self.radicand)
        }
    }
}

pub fn triangle_ok(a: HalfInteger, b: HalfInteger, c: HalfInteger) -> bool {
    let (a, b, c) = (a.twice, b.twice, c.twice);
    a >= 0 && b >= 0 && c >= 0 && (a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0
}

fn fact(h: HalfInteger) -> Result<ExactRational> {
    let v = h.to_int()?;
    if v < 0 {
        return Err(Error::ConstraintViolation(format!("factorial of {v}")));
    }
    Ok(ExactRational::from_integer(factorial(v as u64)))
}

fn require_triangle(a: HalfInteger, b: HalfInteger, c: HalfInteger) -> Result<()> {
    if triangle_ok(a, b, c) {
        Ok(())
    } else {
        Err(Error::TriangleViolation(a.to_string(), b.to_string(), c.to_string()))
    }
}

/// `sqrt((a-b+c)! / ((-a+b+c)! (a+b+c+1)! (a+b-c)!))`, the normalization
/// used with the hypergeometric form of the 6j symbol.
pub fn delta_symbol(a: HalfInteger, b: HalfInteger, c: HalfInteger) -> Result<SquareRootRational> {
    require_triangle(a, b, c)?;
    let one = HalfInteger::from_int(1);
    let q = fact(a - b + c)? / (fact(-a + b + c)? * fact(a + b + c + one)? * fact(a + b - c)?);
    SquareRootRational::sqrt(&q)
}

/// The usual triangle coefficient `sqrt((a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!)`.
pub fn delta_standard(a: HalfInteger, b: HalfInteger, c: HalfInteger) -> Result<SquareRootRational> {
    require_triangle(a, b, c)?;
    let one = HalfInteger::from_int(1);
    let q = fact(a + b - c)? * fact(a - b + c)? * fact(-a + b + c)? / fact(a + b + c + one)?;
    SquareRootRational::sqrt(&q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SixjMethod {
    /// Terminating 4F3 form; needs the extra inequalities on the entries.
    Hypergeometric,
    /// Single alternating sum over `z`.
    RacahSum,
}

/// `{j123 j1 j23; j2 j3 j12}`.
pub fn sixj(
    j123: HalfInteger,
    j1: HalfInteger,
    j23: HalfInteger,
    j2: HalfInteger,
    j3: HalfInteger,
    j12: HalfInteger,
    method: SixjMethod,
) -> Result<SquareRootRational> {
    for (a, b, c) in [(j123, j1, j23), (j123, j3, j12), (j2, j1, j12), (j2, j3, j23)] {
        require_triangle(a, b, c)?;
    }
    match method {
        SixjMethod::RacahSum => racah_sum(j123, j1, j23, j2, j3, j12),
        SixjMethod::Hypergeometric => hypergeometric_sixj(j123, j1, j23, j2, j3, j12),
    }
}

/// `{a b c; d e g}` by the single-sum formula.
fn racah_sum(a: HalfInteger, b: HalfInteger, c: HalfInteger, d: HalfInteger, e: HalfInteger, g: HalfInteger) -> Result<SquareRootRational> {
    let pref = delta_standard(a, b, c)?.mul(&delta_standard(a, e, g)?).mul(&delta_standard(d, b, g)?).mul(&delta_standard(d, e, c)?);
    let lows = [a + b + c, a + e + g, d + b + g, d + e + c];
    let highs = [a + b + d + e, b + c + e + g, c + a + g + d];
    let lo = lows.iter().map(|h| h.to_int()).collect::<Result<Vec<_>>>()?.into_iter().max().unwrap_or(0);
    let hi = highs.iter().map(|h| h.to_int()).collect::<Result<Vec<_>>>()?.into_iter().min().unwrap_or(-1);
    let mut s = ExactRational::zero();
    for z in lo..=hi {
        let zh = HalfInteger::from_int(z);
        let mut den = ExactRational::one();
        for l in lows {
            den *= fact(zh - l)?;
        }
        for h in highs {
            den *= fact(h - zh)?;
        }
        let term = ExactRational::from_integer(factorial((z + 1) as u64)) / den;
        s += if z % 2 == 0 { term } else { -term };
    }
    Ok(pref.scale(&s))
}

fn hypergeometric_sixj(
    j123: HalfInteger,
    j1: HalfInteger,
    j23: HalfInteger,
    j2: HalfInteger,
    j3: HalfInteger,
    j12: HalfInteger,
) -> Result<SquareRootRational> {
    if !(j123 + j1 >= j2 + j3 && (j123 - j1).twice >= (j2 - j3).twice.abs()) {
        return Err(Error::ConstraintViolation(format!(
            "need j123+j1 >= j2+j3 and j123-j1 >= |j2-j3| for {{{j123} {j1} {j23}; {j2} {j3} {j12}}}"
        )));
    }
    let one = HalfInteger::from_int(1);
    let s = j1 + j2 + j3;
    let sign = if (s + j123).to_int()? % 2 == 0 { 1 } else { -1 };
    let two_j2 = HalfInteger::from_twice(2 * j2.twice);
    let rational = ExactRational::from_integer(sign.into()) * fact(two_j2)? * fact(s - j123)? * fact(s + j123 + one)?;
    let norm =
        delta_symbol(j1, j2, j12)?.mul(&delta_symbol(j12, j3, j123)?).mul(&delta_symbol(j23, j2, j3)?).mul(&delta_symbol(j123, j1, j23)?);
    let r = |h: HalfInteger| h.to_rational();
    let top = [r(j12 - j1 - j2), r(-j12 - j1 - j2 - one), r(j23 - j2 - j3), r(-j23 - j2 - j3 - one)];
    let bottom = [r(-two_j2), r(j123 - s), r(-j123 - s - one)];
    let n = top
        .iter()
        .filter(|t| t.is_integer() && !t.is_positive())
        .map(|t| -t.to_integer())
        .min()
        .ok_or_else(|| Error::ConstraintViolation("series does not terminate".into()))?;
    let n = usize::try_from(n).map_err(|_| Error::ConstraintViolation("series length".into()))?;
    let series = terminating_pfq(&top, &bottom, &ExactRational::one(), n)?;
    Ok(norm.scale(&(rational * series)))
}

/// A 3x3 array `[[j1, j2, j12], [j3, j4, j34], [j13, j24, j0]]`.
pub type NinejEntries = [[HalfInteger; 3]; 3];

/// The 9j symbol as a sum over `j234` of three 6j symbols.
pub fn ninej(m: &NinejEntries) -> Result<SquareRootRational> {
    let [[j1, j2, j12], [j3, j4, j34], [j13, j24, j0]] = *m;
    for (a, b, c) in [(j1, j2, j12), (j3, j4, j34), (j13, j24, j0), (j1, j3, j13), (j2, j4, j24), (j12, j34, j0)] {
        require_triangle(a, b, c)?;
    }
    let abs = |h: HalfInteger| HalfInteger::from_twice(h.twice.abs());
    let lo = [abs(j24 - j3), abs(j1 - j0), abs(j2 - j34)].into_iter().max().unwrap();
    let hi = [j24 + j3, j1 + j0, j2 + j34].into_iter().min().unwrap();
    let mut total = SquareRootRational::zero();
    let mut x = lo;
    while x <= hi {
        let six = |a, b, c, d, e, g| -> Result<SquareRootRational> {
            if [(a, b, c), (a, e, g), (d, b, g), (d, e, c)].iter().all(|&(p, q, r)| triangle_ok(p, q, r)) {
                racah_sum(a, b, c, d, e, g)
            } else {
                Ok(SquareRootRational::zero())
            }
        };
        let term = six(j24, j3, x, j1, j0, j13)?.mul(&six(x, j2, j34, j4, j3, j24)?).mul(&six(j34, j0, j12, j1, j2, x)?);
        let w = ExactRational::from_integer(((if x.twice % 2 == 0 { 1 } else { -1 }) * (x.twice + 1)).into());
        total = total.try_add(&term.scale(&w))?;
        x = x + HalfInteger::from_int(1);
    }
    Ok(total)
}

/// The 9j entries associated with `G_{i,j}(x,y)` for parameters `(c0, ..., c4)`.
pub fn griffiths_ninej_entries(c: &[ExactRational; 5], d: DegreePair, g: GridPoint) -> Result<NinejEntries> {
    let h = ExactRational::new(1.into(), 2.into());
    let one = ExactRational::one();
    let two = ExactRational::from_integer(2.into());
    let half = |v: ExactRational| HalfInteger::from_rational(&(-(&h * v)));
    let int = |v: i64| ExactRational::from_integer(v.into());
    let (c0, c1, c2, c3, c4) = (&c[0], &c[1], &c[2], &c[3], &c[4]);
    Ok([
        [half(c2 + &one)?, half(c4 + &one)?, HalfInteger::from_rational(&(-int(g.x) - &h * (c2 + c4 + &two)))?],
        [half(c3 + &one)?, half(c0 + &one)?, HalfInteger::from_rational(&(-int(g.y) - &h * (c0 + c3 + &two)))?],
        [
            HalfInteger::from_rational(&(-int(d.i) - &h * (c2 + c3 + &two)))?,
            HalfInteger::from_rational(&(-int(d.j) - &h * (c0 + c4 + &two)))?,
            half(c1 + &one)?,
        ],
    ])
}

/// Non-negative entries, the six triangles, and the inequalities that let
/// each 6j of the triple sum take its hypergeometric form (the
/// summation-index inequalities are imposed at `a = 0`).
pub fn ninej_admissible(c: &[ExactRational; 5], n: i64, d: DegreePair, g: GridPoint) -> Result<bool> {
    let m = griffiths_ninej_entries(c, d, g)?;
    if m.iter().flatten().any(|h| h.twice < 0) {
        return Ok(false);
    }
    let [[j1, j2, j12], [j3, j4, j34], [j13, j24, j0]] = m;
    if ![(j1, j2, j12), (j3, j4, j34), (j13, j24, j0), (j1, j3, j13), (j2, j4, j24), (j12, j34, j0)]
        .iter()
        .all(|&(a, b, cc)| triangle_ok(a, b, cc))
    {
        return Ok(false);
    }
    let int = |v: i64| ExactRational::from_integer(v.into());
    let zero = ExactRational::zero();
    let pair = |idx: i64, s1: &ExactRational, lin: ExactRational, sub: &ExactRational, l: &ExactRational, r: &ExactRational| {
        int(n + 1 - idx) + s1 >= zero && (lin - int(2 * idx + 1) - sub) >= (l - r).abs()
    };
    let (c0, c1, c2, c3, c4) = (&c[0], &c[1], &c[2], &c[3], &c[4]);
    Ok(pair(d.j, &(c1 + c2), c3.clone(), &(c0 + c4), c1, c2)
        && pair(0, &(c0 + c3), c4.clone(), &(c1 + c2), c0, c3)
        && pair(g.y, &(c2 + c4), c1.clone(), &(c0 + c3), c2, c4))
}

/// Direction along which negative-integer parameters are approached; the
/// entries sum to zero so the constraint is kept.
pub const LIMIT_DIRECTION: [i64; 5] = [1, 2, -3, 5, -5];

/// Outcome of evaluating `G` at negative-integer parameters along [`LIMIT_DIRECTION`].
#[derive(Debug, Clone, PartialEq)]
pub enum DirectionalValue {
    Finite(ExactRational),
    Pole,
}

/// `G_{i,j}(x,y)` on the whole triangle at `c + eps * sigma`, `eps -> 0`.
pub fn directional_griffiths(p: &BivariateParams<ExactRational>) -> Result<BTreeMap<(i64, i64, i64, i64), DirectionalValue>> {
    let c: [RatFunc; 5] = std::array::from_fn(|m| RatFunc::linear(p.c(m).clone(), ExactRational::from_integer(LIMIT_DIRECTION[m].into())));
    let q = BivariateParams::from_all(c, p.n)?;
    let table = griffiths_table(&q, GriffithsForm::TripleSum)?;
    Ok(table
        .iter()
        .map(|(k, v)| {
            let val = match v.order_at_zero() {
                None => DirectionalValue::Finite(ExactRational::zero()),
                Some(o) if o > 0 => DirectionalValue::Finite(ExactRational::zero()),
                Some(0) => DirectionalValue::Finite(v.limit_at_zero().expect("order zero has a finite value")),
                Some(_) => DirectionalValue::Pole,
            };
            (*k, val)
        })
        .collect())
}

/// Tests that `G_{i,j}(x,y)^2 / 9j^2` factors as `f(i,j) g(x,y)` by checking
/// every 2x2 minor over admissible points with a nonzero 9j.
pub fn griffiths_ninej_check(p: &BivariateParams<ExactRational>) -> Result<VerificationReport> {
    let n = p.n;
    let c = p.all().clone();
    if !c.iter().all(|v| v.is_integer() && v.is_negative()) {
        return Err(Error::ConstraintViolation("all five parameters must be negative integers".into()));
    }
    let mut r = VerificationReport::new("griffiths-ninej", p.param_map(), format!("i+j<={n}, x+y<={n}, admissible points"));
    let values = directional_griffiths(p)?;
    let mut ratios: BTreeMap<(DegreePair, GridPoint), ExactRational> = BTreeMap::new();
    let mut admissible = 0;
    for d in degree_pairs(n) {
        for g in grid_points(n) {
            let loc = format!("(i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y);
            if !ninej_admissible(&c, n, d, g)? {
                r.skip(loc, "outside the admissible region");
                continue;
            }
            admissible += 1;
            let nj = ninej(&griffiths_ninej_entries(&c, d, g)?)?;
            if nj.is_zero() {
                r.skip(loc, "9j symbol vanishes");
                continue;
            }
            match &values[&(d.i, d.j, g.x, g.y)] {
                DirectionalValue::Pole => r.skip(loc, "directional limit of G is singular"),
                DirectionalValue::Finite(v) => {
                    ratios.insert((d, g), v * v / nj.square());
                }
            }
        }
    }
    if admissible == 0 {
        return Err(Error::ConstraintViolation("no admissible sweep point".into()));
    }
    let rows: Vec<DegreePair> = {
        let mut v: Vec<_> = ratios.keys().map(|k| k.0).collect();
        v.dedup();
        v
    };
    let mut cols: Vec<GridPoint> = ratios.keys().map(|k| k.1).collect();
    cols.sort();
    cols.dedup();
    for (a, d1) in rows.iter().enumerate() {
        for d2 in &rows[a + 1..] {
            for (b, g1) in cols.iter().enumerate() {
                for g2 in &cols[b + 1..] {
                    let get = |d: &DegreePair, g: &GridPoint| ratios.get(&(*d, *g));
                    if let (Some(r11), Some(r12), Some(r21), Some(r22)) = (get(d1, g1), get(d1, g2), get(d2, g1), get(d2, g2)) {
                        r.check(
                            || format!("minor rows ({},{}),({},{}) cols ({},{}),({},{})", d1.i, d1.j, d2.i, d2.j, g1.x, g1.y, g2.x, g2.y),
                            Ok(r11 * r22),
                            Ok(r12 * r21),
                        );
                    }
                }
            }
        }
    }
    r.note(format!("{} admissible points with nonzero 9j; {} rows, {} columns", ratios.len(), rows.len(), cols.len()));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn h(twice: i64) -> HalfInteger {
        HalfInteger::from_twice(twice)
    }

    fn i(v: i64) -> HalfInteger {
        HalfInteger::from_int(v)
    }

    #[test]
    fn triangles() {
        assert!(triangle_ok(i(1), i(1), i(1)));
        assert!(!triangle_ok(i(1), i(1), i(3)));
        assert!(triangle_ok(h(1), h(1), i(1)));
        assert!(!triangle_ok(h(1), i(1), i(1)));
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_symbol(i(0), i(0), i(0)).unwrap(), SquareRootRational::from_rational(int(1)));
        let d = delta_symbol(i(1), i(1), i(1)).unwrap();
        assert_eq!(d.square(), rat(1, 24));
        assert_eq!(d.radicand(), &BigInt::from(6));
        assert!(matches!(delta_symbol(i(1), i(1), i(3)), Err(Error::TriangleViolation(..))));
    }

    #[test]
    fn sqrt_normalization() {
        let a = SquareRootRational::sqrt(&rat(8, 3)).unwrap();
        assert_eq!(a.rational_part(), &rat(2, 3));
        assert_eq!(a.radicand(), &BigInt::from(6));
        let b = SquareRootRational::sqrt(&rat(3, 2)).unwrap();
        assert!(a.try_add(&b).is_ok());
        assert!(matches!(a.try_add(&SquareRootRational::sqrt(&int(2)).unwrap()), Err(Error::IncommensurableRadicals(..))));
        assert_eq!(a.mul(&b).square(), int(4));
        assert_eq!(a.div(&b).unwrap(), SquareRootRational::from_rational(rat(4, 3)));
    }

    #[test]
    fn sixj_examples() {
        for m in [SixjMethod::RacahSum, SixjMethod::Hypergeometric] {
            assert_eq!(sixj(i(0), i(0), i(0), i(0), i(0), i(0), m).unwrap(), SquareRootRational::from_rational(int(1)));
        }
        let a = sixj(i(1), i(1), i(1), i(1), i(1), i(1), SixjMethod::RacahSum).unwrap();
        let b = sixj(i(1), i(1), i(1), i(1), i(1), i(1), SixjMethod::Hypergeometric).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, SquareRootRational::from_rational(rat(1, 6)));
        // j123 + j1 < j2 + j3
        assert!(matches!(sixj(i(1), i(0), i(1), i(1), i(1), i(1), SixjMethod::Hypergeometric), Err(Error::ConstraintViolation(_))));
        assert!(sixj(i(1), i(0), i(1), i(1), i(1), i(1), SixjMethod::RacahSum).is_ok());
        // {1/2 1/2 1; 1/2 1/2 0} = 1/2
        let v = sixj(h(1), h(1), i(1), h(1), h(1), i(0), SixjMethod::RacahSum).unwrap();
        assert_eq!(v, SquareRootRational::from_rational(rat(1, 2)));
    }

    #[test]
    fn ninej_examples() {
        let z = [[i(0); 3]; 3];
        assert_eq!(ninej(&z).unwrap(), SquareRootRational::from_rational(int(1)));
        let bad = [[i(1), i(1), i(3)], [i(0), i(0), i(0)], [i(1), i(1), i(0)]];
        assert!(matches!(ninej(&bad), Err(Error::TriangleViolation(..))));
    }

    #[test]
    fn ninej_with_zero_corner_is_a_sixj() {
        // {a b e; c d e; f f 0} = (-1)^(b+c+e+f) {a b e; d c f} / sqrt((2e+1)(2f+1))
        for (a, b, c, d, e, f) in
            [(i(1), i(1), i(1), i(1), i(1), i(1)), (h(1), h(1), i(1), i(1), i(1), h(1)), (i(2), i(1), i(1), i(2), i(2), i(1))]
        {
            let m = [[a, b, e], [c, d, e], [f, f, i(0)]];
            let six = racah_sum(a, b, e, d, c, f).unwrap();
            let sign = if (b + c + e + f).to_int().unwrap() % 2 == 0 { 1 } else { -1 };
            let norm = SquareRootRational::sqrt(&int((e.twice() + 1) * (f.twice() + 1))).unwrap();
            let expected = six.div(&norm).unwrap().scale(&int(sign));
            assert_eq!(ninej(&m).unwrap(), expected);
        }
    }

    #[test]
    fn entry_map() {
        let p = BivariateParams::new(int(-2), int(-3), int(-2), int(-2), 3);
        let m = griffiths_ninej_entries(p.all(), DegreePair::new(0, 0), GridPoint::new(0, 0)).unwrap();
        assert_eq!(m[0][0], i(1));
        assert_eq!(m[2][2], h(1));
    }

    #[test]
    fn ninej_proportionality_small() {
        let p = BivariateParams::from_all([int(-1), int(-2), int(-2), int(-2), int(-2)], 3).unwrap();
        let r = griffiths_ninej_check(&p).unwrap();
        assert!(r.is_exact(), "{:?}", r.counterexamples);
        assert!(r.sweep.checked > 0);
        assert!(r.sweep.skipped > 0);
    }

    #[test]
    fn rejects_non_integer_parameters() {
        let p = BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), 2);
        assert!(griffiths_ninej_check(&p).is_err());
    }
}
