//! Hahn, dual Hahn and Krawtchouk polynomials, and the families obtained
//! from Griffiths polynomials when two or all parameters tend to infinity.

use crate::bivariate::{degree_pairs, grid_points, BivariateParams, DegreePair, GridPoint, RacahCache};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, poch, sign, terminating_pfq, ExactRational, Field, RatFunc};
use crate::griffiths::{degree_weight, grid_weight, griffiths_g, griffiths_table, GriffithsForm};
use crate::racah_uni::{racah_p, UniParams};
use crate::report::{param_map, VerificationReport};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// `H_n(x; c1, c2; N)`; zero for `n` outside `0..=N`.
pub fn hahn_h<F: Field>(n: i64, x: i64, c1: &F, c2: &F, big_n: i64) -> Result<F> {
    if big_n < 0 || n < 0 || n > big_n {
        return Ok(F::zero());
    }
    let pref = (F::from_rational(&binomial(big_n, n)) * c1.addi(2 * n + 1) * poch(&c2.addi(1), n))
        .div_checked(&poch(&c1.addi(n + 1), big_n + 1), "Hahn prefactor")?;
    if pref.is_zero() {
        return Ok(pref);
    }
    let top = [F::from_int(-x), F::from_int(-n), c1.addi(n + 1)];
    let bottom = [c2.addi(1), F::from_int(-big_n)];
    Ok(pref * terminating_pfq(&top, &bottom, &F::one(), n as usize)?)
}

/// `H~_n(x; c1, c2; N)`; zero for `n` outside `0..=N`.
pub fn dual_hahn_ht<F: Field>(n: i64, x: i64, c1: &F, c2: &F, big_n: i64) -> Result<F> {
    if big_n < 0 || n < 0 || n > big_n {
        return Ok(F::zero());
    }
    let pref = F::from_rational(&binomial(big_n, n)) * poch(&c2.addi(1), n);
    if pref.is_zero() {
        return Ok(pref);
    }
    let top = [F::from_int(-n), F::from_int(-x), c1.addi(x + 1)];
    let bottom = [c2.addi(1), F::from_int(-big_n)];
    Ok(pref * terminating_pfq(&top, &bottom, &F::one(), n as usize)?)
}

/// `K_n(x; p; N)`; zero for `n` outside `0..=N`.
pub fn krawtchouk_k(n: i64, x: i64, p: &ExactRational, big_n: i64) -> Result<ExactRational> {
    if p.is_zero() || p.is_one() {
        return Err(Error::DegenerateParameter(format!("Krawtchouk parameter {p}")));
    }
    if big_n < 0 || n < 0 || n > big_n {
        return Ok(ExactRational::zero());
    }
    let q = p / (ExactRational::one() - p);
    let mut pref = binomial(big_n, n);
    for _ in 0..n {
        pref *= &q;
    }
    let top = [ExactRational::from_integer((-n).into()), ExactRational::from_integer((-x).into())];
    let bottom = [ExactRational::from_integer((-big_n).into())];
    Ok(pref * terminating_pfq(&top, &bottom, &p.recip(), n as usize)?)
}

/// `(c3+1)_{N-j} / (c4+1)_{N-y} * G_{i,j}(x,y)`.
pub fn normalized_griffiths<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>) -> Result<F> {
    let n = p.n;
    let s = poch(&p.c(3).addi(1), n - d.j).div_checked(&poch(&p.c(4).addi(1), n - g.y), "normalized Griffiths")?;
    Ok(s * griffiths_g(d, g, p, GriffithsForm::TripleSum)?)
}

/// The three limits in which two parameters are shifted by `+t` and `-t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HybridKind {
    /// `c0 - t`, `c3 + t`.
    DualHahnDualHahnRacah,
    /// `c0 - t`, `c4 + t`.
    RacahHahnHahn,
    /// `c1 + t`, `c2 - t`.
    DualHahnRacahHahn,
}

impl HybridKind {
    pub const ALL: [HybridKind; 3] = [HybridKind::DualHahnDualHahnRacah, HybridKind::RacahHahnHahn, HybridKind::DualHahnRacahHahn];

    pub fn name(&self) -> &'static str {
        match self {
            HybridKind::DualHahnDualHahnRacah => "dHdHR",
            HybridKind::RacahHahnHahn => "RHH",
            HybridKind::DualHahnRacahHahn => "dHRH",
        }
    }

    /// Coefficients of `t` added to `(c1, c2, c3, c4)`; `c0` follows from the constraint.
    pub fn shift(&self) -> [i64; 4] {
        match self {
            HybridKind::DualHahnDualHahnRacah => [0, 0, 1, 0],
            HybridKind::RacahHahnHahn => [0, 0, 0, 1],
            HybridKind::DualHahnRacahHahn => [1, -1, 0, 0],
        }
    }
}

/// Speeds `sigma` and offsets `d` for `c_k = sigma_k t + d_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrawtchoukSpeeds {
    sigma: [ExactRational; 5],
    offsets: [ExactRational; 5],
}

/// `sigma_j (sigma_i + sigma_j + sigma_k) / ((sigma_i + sigma_j)(sigma_j + sigma_k))`.
pub fn krawtchouk_parameter(s: &[ExactRational; 5], i: usize, j: usize, k: usize) -> Result<ExactRational> {
    let den = (&s[i] + &s[j]) * (&s[j] + &s[k]);
    if den.is_zero() {
        return Err(Error::DegenerateParameter(format!("sigma_{i}+sigma_{j} or sigma_{j}+sigma_{k} vanishes")));
    }
    Ok(&s[j] * (&s[i] + &s[j] + &s[k]) / den)
}

impl KrawtchoukSpeeds {
    /// Offsets default to `(-2N-3, 0, 0, 0, 0)`.
    pub fn new(sigma: [ExactRational; 5], n: i64) -> Result<Self> {
        let mut offsets: [ExactRational; 5] = std::array::from_fn(|_| ExactRational::zero());
        offsets[0] = ExactRational::from_integer((-2 * n - 3).into());
        Self::with_offsets(sigma, offsets, n)
    }

    pub fn with_offsets(sigma: [ExactRational; 5], offsets: [ExactRational; 5], n: i64) -> Result<Self> {
        let total: ExactRational = sigma.iter().sum();
        if !total.is_zero() {
            return Err(Error::ConstraintViolation(format!("speeds sum to {total}, expected 0")));
        }
        let total: ExactRational = offsets.iter().sum();
        if total != ExactRational::from_integer((-2 * n - 3).into()) {
            return Err(Error::ConstraintViolation(format!("offsets sum to {total}, expected {}", -2 * n - 3)));
        }
        let s = KrawtchoukSpeeds { sigma, offsets };
        for (a, b) in [(2, 3), (0, 4), (1, 2)] {
            if (&s.sigma[a] + &s.sigma[b]).is_zero() {
                return Err(Error::DegenerateParameter(format!("sigma_{a}+sigma_{b} vanishes")));
            }
        }
        if s.sigma[3].is_zero() {
            return Err(Error::DegenerateParameter("sigma_3 vanishes".into()));
        }
        for [i, j, k] in KRAWTCHOUK_TRIPLES {
            let q = krawtchouk_parameter(&s.sigma, i, j, k)?;
            if q.is_zero() || q.is_one() {
                return Err(Error::DegenerateParameter(format!("Krawtchouk parameter for ({i},{j},{k}) is {q}")));
            }
        }
        Ok(s)
    }

    pub fn sigma(&self) -> &[ExactRational; 5] {
        &self.sigma
    }

    pub fn offsets(&self) -> &[ExactRational; 5] {
        &self.offsets
    }

    /// `(s1/(s2+s3))^(N-j) (s3/(s0+s4))^N`, the part of the prefactor
    /// depending on the degrees.
    pub fn degree_prefactor(&self, j: i64, n: i64) -> ExactRational {
        let s = &self.sigma;
        pow(&s[1] / (&s[2] + &s[3]), n - j) * pow(&s[3] / (&s[0] + &s[4]), n)
    }

    /// `(s4/(s1+s2))^(N-y)`.
    pub fn grid_prefactor(&self, y: i64, n: i64) -> ExactRational {
        let s = &self.sigma;
        pow(&s[4] / (&s[1] + &s[2]), n - y)
    }

    /// `(s1/(s2+s3))^(N-j) (s3/(s0+s4))^N (s4/(s1+s2))^(N-y)`.
    pub fn prefactor(&self, j: i64, y: i64, n: i64) -> ExactRational {
        self.degree_prefactor(j, n) * self.grid_prefactor(y, n)
    }
}

fn pow(b: ExactRational, e: i64) -> ExactRational {
    let mut out = ExactRational::one();
    for _ in 0..e {
        out *= &b;
    }
    out
}

const KRAWTCHOUK_TRIPLES: [[usize; 3]; 3] = [[1, 2, 3], [3, 0, 4], [4, 2, 1]];

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq)]
pub enum LimitSpec {
    Hybrid(HybridKind),
    Krawtchouk(KrawtchoukSpeeds),
}

impl LimitSpec {
    pub fn name(&self) -> &'static str {
        match self {
            LimitSpec::Hybrid(k) => k.name(),
            LimitSpec::Krawtchouk(_) => "krawtchouk",
        }
    }

    /// Parameters as functions of `t`. Hybrid kinds shift `p`; the
    /// Krawtchouk kind uses only `p.n`.
    pub fn substitute(&self, p: &BivariateParams<ExactRational>) -> Result<BivariateParams<RatFunc>> {
        match self {
            LimitSpec::Hybrid(k) => {
                let s = k.shift();
                let c: [RatFunc; 4] =
                    std::array::from_fn(|m| RatFunc::linear(p.c(m + 1).clone(), ExactRational::from_integer(s[m].into())));
                let [c1, c2, c3, c4] = c;
                Ok(BivariateParams::new(c1, c2, c3, c4, p.n))
            }
            LimitSpec::Krawtchouk(sp) => {
                let c = std::array::from_fn(|m| RatFunc::linear(sp.offsets[m].clone(), sp.sigma[m].clone()));
                BivariateParams::from_all(c, p.n)
            }
        }
    }

    /// Factors `alpha(i,j)` and `beta(x,y)` such that `alpha beta G` tends
    /// to the limit family.
    fn scaling(&self, q: &BivariateParams<RatFunc>, d: DegreePair, g: GridPoint) -> Result<(RatFunc, RatFunc)> {
        let n = q.n;
        match self {
            LimitSpec::Hybrid(_) => {
                Ok((poch(&q.c(3).addi(1), n - d.j), RatFunc::one().div_checked(&poch(&q.c(4).addi(1), n - g.y), "normalized Griffiths")?))
            }
            LimitSpec::Krawtchouk(sp) => {
                let a = sp.degree_prefactor(d.j, n);
                let b = sp.grid_prefactor(g.y, n);
                Ok((RatFunc::constant(a.recip()), RatFunc::constant(b.recip())))
            }
        }
    }
}

/// The closed-form limit family of a hybrid kind, in the unshifted parameters.
pub fn hybrid_limit<F: Field>(kind: HybridKind, d: DegreePair, g: GridPoint, p: &BivariateParams<F>) -> Result<F> {
    let n = p.n;
    let (i, j, x, y) = (d.i, d.j, g.x, g.y);
    let c = |k: usize| p.c(k).clone();
    let cache = RacahCache::new(p);
    let mut s = F::zero();
    for a in 0..=n - j {
        let term = match kind {
            HybridKind::DualHahnDualHahnRacah => {
                let w = poch(&c(1).addi(1), n - j - i)
                    .div_checked(&(poch(&c(4).addi(1), n - y) * poch(&c(4).addi(1), j)), "dual Hahn limit weight")?;
                w.muli(sign(n + j))
                    * dual_hahn_ht(i, a, &p.sum(&[1, 2]), &c(2), n - j)?
                    * dual_hahn_ht(j, y, &p.sum(&[3, 0]), &p.sum(&[3, 0, 4]).addi(n - a + 1), n - a)?
                    * cache.p([4, 2, 1], a, x, n - y)?
            }
            HybridKind::RacahHahnHahn => {
                let w = (poch(&c(3).addi(1), n - j - a) * poch(&c(3).addi(1), n - j))
                    .div_checked(&poch(&c(1).addi(1), a), "Hahn limit weight")?;
                w.muli(sign(a + j))
                    * cache.p([1, 2, 3], i, a, n - j)?
                    * hahn_h(j, y, &p.sum(&[0, 4]), &p.sum(&[3, 0, 4]).addi(n - a + 1), n - a)?
                    * hahn_h(a, x, &p.sum(&[1, 2]), &c(2), n - y)?
            }
            HybridKind::DualHahnRacahHahn => {
                if a > n - y {
                    continue;
                }
                let w = (poch(&c(3).addi(1), n - j) * poch(&c(4).addi(1), n - y - a))
                    .div_checked(&(poch(&c(4).addi(1), n - y) * poch(&c(3).addi(1), i)), "mixed limit weight")?;
                w.muli(sign(n + i + j))
                    * dual_hahn_ht(i, a, &p.sum(&[1, 2]), &p.sum(&[1, 2, 3]).addi(n - j + 1), n - j)?
                    * cache.p([3, 0, 4], j, y, n - a)?
                    * hahn_h(a, x, &p.sum(&[1, 2]), &p.sum(&[1, 2, 4]).addi(n - y + 1), n - y)?
            }
        };
        s = s + term;
    }
    Ok(s)
}

/// `g~_{i,j}(x,y)`, the convolution of three Krawtchouk polynomials.
pub fn krawtchouk_griffiths(d: DegreePair, g: GridPoint, sp: &KrawtchoukSpeeds, n: i64) -> Result<ExactRational> {
    let s = &sp.sigma;
    let p123 = krawtchouk_parameter(s, 1, 2, 3)?;
    let p304 = krawtchouk_parameter(s, 3, 0, 4)?;
    let p421 = krawtchouk_parameter(s, 4, 2, 1)?;
    let base = -(&s[0] + &s[4]) / &s[3];
    let mut w = ExactRational::one();
    let mut total = ExactRational::zero();
    for a in 0..=n - d.j {
        total += &w * krawtchouk_k(d.i, a, &p123, n - d.j)? * krawtchouk_k(d.j, g.y, &p304, n - a)? * krawtchouk_k(a, g.x, &p421, n - g.y)?;
        w *= &base;
    }
    Ok(total)
}

/// The limit family selected by `spec` at `(d, g)`.
pub fn limit_family(spec: &LimitSpec, d: DegreePair, g: GridPoint, p: &BivariateParams<ExactRational>) -> Result<ExactRational> {
    match spec {
        LimitSpec::Hybrid(k) => hybrid_limit(*k, d, g, p),
        LimitSpec::Krawtchouk(sp) => krawtchouk_griffiths(d, g, sp, p.n),
    }
}

fn spec_params(spec: &LimitSpec, p: &BivariateParams<ExactRational>) -> std::collections::BTreeMap<String, String> {
    match spec {
        LimitSpec::Hybrid(_) => p.param_map(),
        LimitSpec::Krawtchouk(sp) => {
            let join = |v: &[ExactRational; 5]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            param_map([("sigma", join(&sp.sigma)), ("offsets", join(&sp.offsets)), ("N", p.n.to_string())])
        }
    }
}

/// Compares the `t -> infinity` limit of the rescaled Griffiths polynomials
/// with the closed-form family on the full grid.
pub fn limit_check(spec: &LimitSpec, p: &BivariateParams<ExactRational>) -> VerificationReport {
    let n = p.n;
    let mut r = VerificationReport::new(format!("limit-{}", spec.name()), spec_params(spec, p), format!("i+j<={n}, x+y<={n}"));
    let prepared = spec.substitute(p).and_then(|q| griffiths_table(&q, GriffithsForm::TripleSum).map(|t| (q, t)));
    let (q, table) = match prepared {
        Ok(v) => v,
        Err(e) => {
            r.fail("t-dependent table", format!("error: {e}"), "");
            return r;
        }
    };
    for d in degree_pairs(n) {
        for g in grid_points(n) {
            let lhs = spec.scaling(&q, d, g).and_then(|(a, b)| (a * b * table.get(d.i, d.j, g.x, g.y)).limit_at_infinity());
            r.check(|| format!("(i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y), lhs, limit_family(spec, d, g, p));
        }
    }
    r
}

/// Leading coefficients at infinity, required to share one order.
fn uniform_leading(values: &[RatFunc]) -> Result<(i64, Vec<ExactRational>)> {
    let mut order = None;
    let mut out = Vec::with_capacity(values.len());
    for v in values {
        let o = v.order_at_infinity().ok_or(Error::DegenerateParameter("weight vanishes identically".into()))?;
        if *order.get_or_insert(o) != o {
            return Err(Error::DegenerateParameter("weights grow at different rates".into()));
        }
        out.push(v.leading_at_infinity().expect("nonzero"));
    }
    Ok((order.unwrap_or(0), out))
}

/// Orthogonality of the limit family with the leading terms of the
/// rescaled Griffiths weights.
pub fn limit_orthogonality(spec: &LimitSpec, p: &BivariateParams<ExactRational>) -> VerificationReport {
    let n = p.n;
    let mut r =
        VerificationReport::new(format!("limit-{}-orthogonality", spec.name()), spec_params(spec, p), format!("i+j<={n}, x+y<={n}"));
    let degs = degree_pairs(n);
    let grid = grid_points(n);
    let weights = (|| {
        let q = spec.substitute(p)?;
        let origin = (DegreePair::new(0, 0), GridPoint::new(0, 0));
        let mut gw = Vec::new();
        for g in &grid {
            let (_, b) = spec.scaling(&q, origin.0, *g)?;
            gw.push(grid_weight(g.x, g.y, &q)?.div_checked(&(b.clone() * b), "grid weight")?);
        }
        let mut dw = Vec::new();
        for d in &degs {
            let (a, _) = spec.scaling(&q, *d, origin.1)?;
            dw.push(a.clone() * a * degree_weight(d.i, d.j, &q)?);
        }
        let (og, lg) = uniform_leading(&gw)?;
        let (od, ld) = uniform_leading(&dw)?;
        if og != od {
            return Err(Error::DegenerateParameter(format!("grid weights of order {og}, degree weights of order {od}")));
        }
        let mut fam = HashMap::new();
        for d in &degs {
            for g in &grid {
                fam.insert((*d, *g), limit_family(spec, *d, *g, p)?);
            }
        }
        Ok((lg, ld, fam))
    })();
    let (lg, ld, fam) = match weights {
        Ok(v) => v,
        Err(e) => {
            r.fail("limit weights", format!("error: {e}"), "");
            return r;
        }
    };
    for (k1, d1) in degs.iter().enumerate() {
        for d2 in &degs {
            let mut s = ExactRational::zero();
            for (w, g) in lg.iter().zip(&grid) {
                s += w * &fam[&(*d1, *g)] * &fam[&(*d2, *g)];
            }
            let rhs = if d1 == d2 { ld[k1].clone() } else { ExactRational::zero() };
            r.check(|| format!("(i,j)=({},{}), (k,l)=({},{})", d1.i, d1.j, d2.i, d2.j), Ok(s), Ok(rhs));
        }
    }
    r
}

/// `p_n(x; s_i t + d_i, s_j t + d_j, s_k t + d_k; N) -> (s_i/(s_j+s_k))^N K_n(x; p_ijk; N)`
/// for the three parameter triples met in the Griffiths convolution.
pub fn univariate_krawtchouk_limit(sp: &KrawtchoukSpeeds, n: i64) -> VerificationReport {
    let mut r = VerificationReport::new(
        "limit-racah-krawtchouk",
        spec_params(
            &LimitSpec::Krawtchouk(sp.clone()),
            &BivariateParams::new(ExactRational::zero(), ExactRational::zero(), ExactRational::zero(), ExactRational::zero(), n),
        ),
        format!("0<=n,x<={n}"),
    );
    let s = &sp.sigma;
    for [i, j, k] in KRAWTCHOUK_TRIPLES {
        let c = |m: usize| RatFunc::linear(sp.offsets[m].clone(), s[m].clone());
        let up = UniParams::new(c(i), c(j), c(k), n);
        let q = match krawtchouk_parameter(s, i, j, k) {
            Ok(q) => q,
            Err(e) => {
                r.fail(format!("triple ({i},{j},{k})"), format!("error: {e}"), "");
                continue;
            }
        };
        let scale = pow(&s[i] / (&s[j] + &s[k]), n);
        for deg in 0..=n {
            for x in 0..=n {
                let lhs = racah_p(deg, &RatFunc::from_int(x), &up).and_then(|v| v.limit_at_infinity());
                let rhs = krawtchouk_k(deg, x, &q, n).map(|v| &scale * v);
                r.check(|| format!("triple ({i},{j},{k}), n={deg}, x={x}"), lhs, rhs);
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, naive_pfq, rat};

    fn sigma(v: [i64; 5]) -> [ExactRational; 5] {
        v.map(int)
    }

    #[test]
    fn hahn_examples() {
        let (c1, c2) = (rat(1, 2), rat(1, 3));
        for n in 0..=3 {
            let pref = binomial(3, n) * (&c1 + int(2 * n + 1)) * poch(&(&c2 + int(1)), n) / poch(&(&c1 + int(n + 1)), 4);
            assert_eq!(hahn_h(n, 0, &c1, &c2, 3).unwrap(), pref);
            assert_eq!(dual_hahn_ht(n, 0, &c1, &c2, 3).unwrap(), binomial(3, n) * poch(&(&c2 + int(1)), n));
        }
        for x in 0..=3 {
            assert_eq!(dual_hahn_ht(0, x, &c1, &c2, 3).unwrap(), int(1));
        }
        let (one, two) = (int(1), int(2));
        let series = naive_pfq(&[int(-1), int(-1), int(3)], &[two.clone(), int(-2)], &one, 1).unwrap();
        let pref = int(2) * int(4) * int(2) / poch(&int(3), 3);
        assert_eq!(hahn_h(1, 1, &one, &one, 2).unwrap(), pref * series);
        let series = naive_pfq(&[int(-1), int(-1), int(3)], &[two, int(-2)], &one, 1).unwrap();
        assert_eq!(dual_hahn_ht(1, 1, &one, &one, 2).unwrap(), int(4) * series);
    }

    #[test]
    fn krawtchouk_examples() {
        let p = rat(1, 3);
        for n in 0..=3 {
            let q = rat(1, 2);
            assert_eq!(krawtchouk_k(n, 0, &p, 3).unwrap(), binomial(3, n) * poch(&q, 0) * q.pow(n as i32));
            assert_eq!(krawtchouk_k(0, n, &p, 3).unwrap(), int(1));
        }
        assert_eq!(krawtchouk_k(1, 1, &rat(1, 2), 2).unwrap(), int(0));
        assert!(matches!(krawtchouk_k(1, 1, &int(1), 2), Err(Error::DegenerateParameter(_))));
    }

    #[test]
    fn normalized_matches_griffiths_at_top_degree() {
        let p = BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), 3);
        let (d, g) = (DegreePair::new(0, 3), GridPoint::new(0, 3));
        assert_eq!(normalized_griffiths(d, g, &p).unwrap(), griffiths_g(d, g, &p, GriffithsForm::TripleSum).unwrap());
        let (d, g) = (DegreePair::new(1, 1), GridPoint::new(1, 0));
        let s = poch(&rat(6, 5), 2) / poch(&rat(8, 7), 3);
        assert_eq!(normalized_griffiths(d, g, &p).unwrap(), s * griffiths_g(d, g, &p, GriffithsForm::TripleSum).unwrap());
    }

    #[test]
    fn hybrid_limits_small() {
        let p = BivariateParams::new(int(1), int(1), int(1), int(1), 2);
        for k in HybridKind::ALL {
            let r = limit_check(&LimitSpec::Hybrid(k), &p);
            assert!(r.is_exact(), "{}: {:?}", k.name(), r.counterexamples);
        }
    }

    #[test]
    fn krawtchouk_limit_small() {
        let sp = KrawtchoukSpeeds::new(sigma([-4, 1, 1, 1, 1]), 2).unwrap();
        let p = BivariateParams::new(int(0), int(0), int(0), int(0), 2);
        assert!(univariate_krawtchouk_limit(&sp, 2).is_exact());
        let r = limit_check(&LimitSpec::Krawtchouk(sp), &p);
        assert!(r.is_exact(), "{:?}", r.counterexamples);
    }

    #[test]
    fn orthogonality_survives_limits() {
        let p = BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), 2);
        for k in HybridKind::ALL {
            let r = limit_orthogonality(&LimitSpec::Hybrid(k), &p);
            assert!(r.is_exact(), "{}: {:?}", k.name(), r.counterexamples);
        }
        let sp = KrawtchoukSpeeds::new(sigma([-3, 2, -1, 5, -3]), 2).unwrap();
        let r = limit_orthogonality(&LimitSpec::Krawtchouk(sp), &p);
        assert!(r.is_exact(), "{:?}", r.counterexamples);
    }

    #[test]
    fn speed_validation() {
        assert!(matches!(KrawtchoukSpeeds::new(sigma([1, 1, 1, 1, 1]), 2), Err(Error::ConstraintViolation(_))));
        assert!(matches!(KrawtchoukSpeeds::new(sigma([0, 1, -1, 1, -1]), 2), Err(Error::DegenerateParameter(_))));
    }
}
