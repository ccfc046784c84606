//! Bivariate Griffiths polynomials of Racah type
//! `G_{i,j}(x,y) = sum_a (-1)^a p_i(a; c1,c2,c3; N-j) p_j(y; c3,c0,c4; N-a) p_a(x; c4,c2,c1; N-y)`.

use crate::bivariate::{
    degree_pairs, grid_points, in_triangle, triangle, BivariateParams, DegreePair, FamilyTable, GridPoint, RacahCache, StencilTable,
};
use crate::error::Result;
use crate::exactnum::{factorial, poch, rat, ratio, terminating_pfq, ExactRational, Field};
use crate::interp::fit_total_degree;
use crate::racah_uni::{
    cont_a, cont_b, cont_d, cont_lambda, cont_mu, cont_s, cont_sigma, diff_b, diff_d, diff_s, f_factor, lambda, mu, omega, racah_p, rec_a,
    rec_c, rec_sigma, Sign,
};
use crate::report::VerificationReport;
use crate::tratnik::{diff_stencil_entry, lambda_weight, rational_view, rec_stencil_entry, stencil_residual, tratnik_cached};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GriffithsForm {
    /// Alternating sum of three univariate factors.
    TripleSum,
    /// `sum_a (-1)^a T_{i,j}(a, y) p_a(x; c4, c2, c1; N-y)`.
    ConvRight,
    /// `sum_a (-1)^a p_i(a; c1, c2, c3; N-j) T_{j,a}(y, x; c3, c0, c4, c1)`.
    ConvLeft,
}

impl GriffithsForm {
    pub const ALL: [GriffithsForm; 3] = [GriffithsForm::TripleSum, GriffithsForm::ConvRight, GriffithsForm::ConvLeft];

    pub fn name(&self) -> &'static str {
        match self {
            GriffithsForm::TripleSum => "triple-sum",
            GriffithsForm::ConvRight => "conv-right",
            GriffithsForm::ConvLeft => "conv-left",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// Upper limit of the `a`-summation in the triple-sum form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumBound {
    NMinusJ,
    NMinusX,
    NMinusY,
    MinJX,
    MinJY,
}

impl SumBound {
    pub fn value(&self, d: DegreePair, g: GridPoint, n: i64) -> i64 {
        match self {
            SumBound::NMinusJ => n - d.j,
            SumBound::NMinusX => n - g.x,
            SumBound::NMinusY => n - g.y,
            SumBound::MinJX => (n - d.j).min(n - g.x),
            SumBound::MinJY => (n - d.j).min(n - g.y),
        }
    }
}

pub fn griffiths_g<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>, form: GriffithsForm) -> Result<F> {
    let cache = RacahCache::new(p);
    match form {
        GriffithsForm::TripleSum => triple_sum(&cache, d, g, SumBound::NMinusJ),
        GriffithsForm::ConvRight => conv_right(&cache, d, g),
        GriffithsForm::ConvLeft => {
            let q = p.permuted([3, 0, 4, 1]);
            conv_left(&cache, &RacahCache::new(&q), d, g)
        }
    }
}

/// The triple-sum form truncated at the chosen bound.
pub fn griffiths_g_bounded<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>, bound: SumBound) -> Result<F> {
    triple_sum(&RacahCache::new(p), d, g, bound)
}

pub(crate) fn triple_sum<F: Field>(cache: &RacahCache<'_, F>, d: DegreePair, g: GridPoint, bound: SumBound) -> Result<F> {
    let n = cache.params().n;
    if !in_triangle(d.i, d.j, n) || !in_triangle(g.x, g.y, n) {
        return Ok(F::zero());
    }
    let mut s = F::zero();
    for a in 0..=bound.value(d, g, n) {
        let t = cache.p([1, 2, 3], d.i, a, n - d.j)?;
        if t.is_zero() {
            continue;
        }
        let u = cache.p([3, 0, 4], d.j, g.y, n - a)?;
        if u.is_zero() {
            continue;
        }
        let term = t * u * cache.p([4, 2, 1], a, g.x, n - g.y)?;
        s = if a % 2 == 0 { s + term } else { s - term };
    }
    Ok(s)
}

fn conv_right<F: Field>(cache: &RacahCache<'_, F>, d: DegreePair, g: GridPoint) -> Result<F> {
    let n = cache.params().n;
    if !in_triangle(d.i, d.j, n) || !in_triangle(g.x, g.y, n) {
        return Ok(F::zero());
    }
    let mut s = F::zero();
    for a in 0..=n - g.y {
        let t = tratnik_cached(cache, d, GridPoint::new(a, g.y))?;
        if t.is_zero() {
            continue;
        }
        let term = t * cache.p([4, 2, 1], a, g.x, n - g.y)?;
        s = if a % 2 == 0 { s + term } else { s - term };
    }
    Ok(s)
}

/// `cache` is over `p`, `swapped` over `p` relabeled as `(c3, c0, c4, c1)`.
fn conv_left<F: Field>(cache: &RacahCache<'_, F>, swapped: &RacahCache<'_, F>, d: DegreePair, g: GridPoint) -> Result<F> {
    let n = cache.params().n;
    if !in_triangle(d.i, d.j, n) || !in_triangle(g.x, g.y, n) {
        return Ok(F::zero());
    }
    let mut s = F::zero();
    for a in 0..=n - d.j {
        let t = cache.p([1, 2, 3], d.i, a, n - d.j)?;
        if t.is_zero() {
            continue;
        }
        let term = t * tratnik_cached(swapped, DegreePair::new(d.j, a), GridPoint::new(g.y, g.x))?;
        s = if a % 2 == 0 { s + term } else { s - term };
    }
    Ok(s)
}

/// All values of the chosen form on the triangle.
pub fn griffiths_table<F: Field>(p: &BivariateParams<F>, form: GriffithsForm) -> Result<FamilyTable<F>> {
    let cache = RacahCache::new(p);
    match form {
        GriffithsForm::TripleSum => FamilyTable::build(p.n, |d, g| triple_sum(&cache, d, g, SumBound::NMinusJ)),
        GriffithsForm::ConvRight => FamilyTable::build(p.n, |d, g| conv_right(&cache, d, g)),
        GriffithsForm::ConvLeft => {
            let q = p.permuted([3, 0, 4, 1]);
            let swapped = RacahCache::new(&q);
            FamilyTable::build(p.n, |d, g| conv_left(&cache, &swapped, d, g))
        }
    }
}

/// The factor `Omega(i; c1,c2,c3; N-j) (2j+c04+1) (c3+1)_y / (j! (c0+1)_y)`.
pub fn polynomial_form_prefactor<F: Field>(d: DegreePair, y: i64, p: &BivariateParams<F>) -> Result<F> {
    let w = omega(d.i, &p.uni(1, 2, 3, p.n - d.j))?;
    let inv_fact = F::from_rational(&ExactRational::new(1.into(), factorial(d.j as u64)));
    Ok(w * ratio(
        &[inv_fact, p.sum(&[0, 4]).addi(2 * d.j + 1), poch(&p.c(3).addi(1), y)],
        &[poch(&p.c(0).addi(1), y)],
        "Griffiths polynomial form prefactor",
    )?)
}

/// The single-sum form with three terminating series, valid on the grid.
pub fn griffiths_polynomial_form<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>) -> Result<F> {
    let (i, j, x, y, n) = (d.i, d.j, g.x, g.y, p.n);
    if !in_triangle(i, j, n) || !in_triangle(x, y, n) {
        return Ok(F::zero());
    }
    let k = |v: i64| F::from_int(v);
    let one = F::one();
    let (c12, c30, c04, c24, c123, c23) =
        (p.sum(&[1, 2]), p.sum(&[3, 0]), p.sum(&[0, 4]), p.sum(&[2, 4]), p.sum(&[1, 2, 3]), p.sum(&[2, 3]));
    let c2p = p.c(2).addi(1);
    let shifted = -c30.addi(n + y + 1);
    let mut s = F::zero();
    for a in 0..=n - j {
        let coeff = ratio(
            &[poch(&k(a - n), j), poch(&c2p, a), poch(&p.c(0).addi(1), n - a), poch(&k(y - n), a), poch(&shifted, a)],
            &[
                F::from_rational(&ExactRational::from_integer(factorial(a as u64))),
                poch(&c04.addi(j + 1), n - a + 1),
                poch(&c12.addi(a + 1), a),
                poch(&p.c(1).addi(1), a),
            ],
            "Griffiths polynomial form",
        )?;
        if coeff.is_zero() {
            continue;
        }
        let f1 = terminating_pfq(
            &[k(-i), c23.addi(i + 1), k(-a), c12.addi(a + 1)],
            &[c2p.clone(), -c04.addi(n + j + 1), k(j - n)],
            &one,
            i as usize,
        )?;
        let f2 = terminating_pfq(
            &[k(-a), c12.addi(a + 1), k(-x), c24.addi(x + 1)],
            &[c2p.clone(), shifted.clone(), k(y - n)],
            &one,
            a as usize,
        )?;
        let f3 = terminating_pfq(
            &[k(j + a - n), c123.addi(n - j + a + 2), k(y + a - n), shifted.addi(a)],
            &[c12.addi(2 * a + 2), -p.c(0).addi(n - a), k(a - n)],
            &one,
            (n - j - a) as usize,
        )?;
        s = s + coeff * f1 * f2 * f3;
    }
    Ok(polynomial_form_prefactor(d, y, p)? * s)
}

/// Exact-fit certificate: `G_{i,j}` divided by its prefactor is a polynomial
/// of total degree `<= N - j` in `(lambda(x; c24), lambda(y; c30))`.
pub fn polynomiality_certificate(d: DegreePair, p: &BivariateParams<ExactRational>) -> Result<bool> {
    Ok(fit_total_degree(&normalized_samples(d, p)?, (p.n - d.j) as usize).is_some())
}

pub fn normalized_samples(
    d: DegreePair,
    p: &BivariateParams<ExactRational>,
) -> Result<Vec<((ExactRational, ExactRational), ExactRational)>> {
    let cache = RacahCache::new(p);
    let (c24, c30) = (p.sum(&[2, 4]), p.sum(&[3, 0]));
    let mut out = Vec::new();
    for g in grid_points(p.n) {
        let v = triple_sum(&cache, d, g, SumBound::NMinusJ)?.div_checked(&polynomial_form_prefactor(d, g.y, p)?, "normalization")?;
        let u = lambda(&ExactRational::from_integer(g.x.into()), &c24);
        let w = lambda(&ExactRational::from_integer(g.y.into()), &c30);
        out.push(((u, w), v));
    }
    Ok(out)
}

/// A correction table whose four corner entries are zero by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionTable<F> {
    table: StencilTable<F>,
}

impl<F: Field> CorrectionTable<F> {
    /// `edge` is queried only for the five non-corner shifts.
    pub fn build(mut edge: impl FnMut(i64, i64) -> Result<F>) -> Result<Self> {
        let table = StencilTable::build(|e, f| if e != 0 && f != 0 { Ok(F::zero()) } else { edge(e, f) })?;
        Ok(CorrectionTable { table })
    }

    pub fn get(&self, e: i64, f: i64) -> &F {
        self.table.get(e, f)
    }

    pub fn as_stencil(&self) -> &StencilTable<F> {
        &self.table
    }
}

/// `Gamma^{e,f}_{i,j}`, the correction of the second recurrence.
pub fn gamma_entry<F: Field>(e: i64, f: i64, i: i64, j: i64, p: &BivariateParams<F>) -> Result<F> {
    let n = p.n;
    let (ii, jj) = (F::from_int(i), F::from_int(j));
    Ok(match (e, f) {
        (0, 1) => rec_c(&jj, &p.uni(1, 0, 4, n - i))?,
        (0, -1) => rec_a(&jj, &p.uni(1, 0, 4, n - i))?,
        (1, 0) => rec_c(&ii, &p.uni(1, 2, 3, n - j))?,
        (-1, 0) => rec_a(&ii, &p.uni(1, 2, 3, n - j))?,
        (0, 0) => {
            let h = F::from_rational(&rat(1, 2));
            let quarter = F::from_rational(&rat(1, 4));
            let (c3, c4) = (p.c(3), p.c(4));
            let a = p.sum(&[2, 3]) - p.sum(&[0, 1]);
            let b = p.sum(&[0, 4]) - p.sum(&[1, 2]);
            -rec_sigma(&ii, &p.uni(1, 2, 3, n - j))? + rec_sigma(&jj, &p.uni(1, 0, 4, n - i))?
                - quarter * (c3.clone() * c3 - c4.clone() * c4)
                + (k_minus_half(i - n, c4, &h)) * (ii.clone() + h.clone() * a)
                - (k_minus_half(j - n, c3, &h)) * (jj.clone() + h * b)
        }
        _ => F::zero(),
    })
}

/// `k - (c + 1) / 2`.
fn k_minus_half<F: Field>(k: i64, c: &F, h: &F) -> F {
    F::from_int(k) - h.clone() * c.addi(1)
}

/// `Psi^{e,f}(x,y)`, the correction of the second difference equation.
pub fn psi_entry<F: Field>(e: i64, f: i64, x: i64, y: i64, p: &BivariateParams<F>) -> Result<F> {
    let n = p.n;
    let (xx, yy) = (F::from_int(x), F::from_int(y));
    Ok(match (e, f) {
        (0, 1) => diff_b(&xx, &p.uni(4, 2, 1, n - y))?,
        (0, -1) => diff_d(&xx, &p.uni(4, 2, 1, n - y))?,
        (1, 0) => diff_b(&yy, &p.uni(3, 0, 1, n - x))?,
        (-1, 0) => diff_d(&yy, &p.uni(3, 0, 1, n - x))?,
        (0, 0) => gamma_entry(0, 0, x, y, &p.permuted([1, 2, 4, 3]))?,
        _ => F::zero(),
    })
}

/// The first-recurrence stencil and the second-recurrence correction at
/// `(i, j)`; entry `(e, f)` multiplies `G_{i+e, j+f}`.
pub fn griffiths_rec_stencils<F: Field>(d: DegreePair, p: &BivariateParams<F>) -> Result<(StencilTable<F>, CorrectionTable<F>)> {
    let a = StencilTable::build(|e, f| rec_stencil_entry(e, f, d.i + e, d.j + f, p))?;
    let gamma = CorrectionTable::build(|e, f| gamma_entry(e, f, d.i + e, d.j + f, p))?;
    Ok((a, gamma))
}

/// The first-difference stencil `D^{f,e}(y, x; c3, c0, c4, c1)` and the
/// correction `Psi^{f,e}(x, y)`; entry `(e, f)` multiplies `G(x+e, y+f)`.
pub fn griffiths_diff_stencils<F: Field>(g: GridPoint, p: &BivariateParams<F>) -> Result<(StencilTable<F>, CorrectionTable<F>)> {
    let q = p.permuted([3, 0, 4, 1]);
    let d = StencilTable::build(|e, f| diff_stencil_entry(f, e, g.y, g.x, &q))?;
    let psi = CorrectionTable::build(|e, f| psi_entry(f, e, g.x, g.y, p))?;
    Ok((d, psi))
}

/// Checks `Lambda(y;c3,c0;N) / Lambda(j;c4,c0;N)` against its four-Omega
/// rewriting through the intermediate index `a`.
pub fn weight_identity<F: Field>(y: i64, j: i64, a: i64, p: &BivariateParams<F>) -> (Result<F>, Result<F>) {
    let n = p.n;
    let lhs = (|| lambda_weight(y, p.c(3), p.c(0), n)?.div_checked(&lambda_weight(j, p.c(4), p.c(0), n)?, "weight identity"))();
    let rhs = (|| {
        let num = omega(y, &p.uni(4, 0, 3, n - a))? * omega(a, &p.uni(3, 2, 1, n - j))?;
        let den = omega(j, &p.uni(3, 0, 4, n - a))? * omega(a, &p.uni(4, 2, 1, n - y))?;
        num.div_checked(&den, "weight identity")
    })();
    (lhs, rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GriffithsRelation {
    Orthogonality,
    Duality,
    Rec1,
    Rec2,
    Diff1,
    Diff2,
    FormAgreement,
    WeightIdentity,
    PolynomialForm,
    DualityTransport,
}

impl GriffithsRelation {
    pub const ALL: [GriffithsRelation; 10] = [
        GriffithsRelation::Orthogonality,
        GriffithsRelation::Duality,
        GriffithsRelation::Rec1,
        GriffithsRelation::Rec2,
        GriffithsRelation::Diff1,
        GriffithsRelation::Diff2,
        GriffithsRelation::FormAgreement,
        GriffithsRelation::WeightIdentity,
        GriffithsRelation::PolynomialForm,
        GriffithsRelation::DualityTransport,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GriffithsRelation::Orthogonality => "orthogonality",
            GriffithsRelation::Duality => "duality",
            GriffithsRelation::Rec1 => "rec1",
            GriffithsRelation::Rec2 => "rec2",
            GriffithsRelation::Diff1 => "diff1",
            GriffithsRelation::Diff2 => "diff2",
            GriffithsRelation::FormAgreement => "form-agreement",
            GriffithsRelation::WeightIdentity => "weight-identity",
            GriffithsRelation::PolynomialForm => "polynomial-form",
            GriffithsRelation::DualityTransport => "duality-transport",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.replace('_', "-");
        Self::ALL.into_iter().find(|r| r.name() == s)
    }
}

pub fn verify_griffiths<F: Field>(relation: GriffithsRelation, p: &BivariateParams<F>) -> VerificationReport {
    match griffiths_table(p, GriffithsForm::TripleSum) {
        Ok(t) => verify_griffiths_with(relation, p, &t),
        Err(e) => {
            let mut r = VerificationReport::new(format!("griffiths-{}", relation.name()), p.param_map(), "table");
            r.fail("table", format!("error: {e}"), "");
            r
        }
    }
}

/// `W(i,j) = Omega(i; c1,c2,c3; N-j) Lambda(j; c4,c0; N)`.
pub(crate) fn degree_weight<F: Field>(i: i64, j: i64, p: &BivariateParams<F>) -> Result<F> {
    Ok(omega(i, &p.uni(1, 2, 3, p.n - j))? * lambda_weight(j, p.c(4), p.c(0), p.n)?)
}

/// `Omega(x; c1,c2,c4; N-y) Lambda(y; c3,c0; N)`.
pub(crate) fn grid_weight<F: Field>(x: i64, y: i64, p: &BivariateParams<F>) -> Result<F> {
    Ok(omega(x, &p.uni(1, 2, 4, p.n - y))? * lambda_weight(y, p.c(3), p.c(0), p.n)?)
}

/// Same as [`verify_griffiths`] reusing a precomputed triple-sum table.
pub fn verify_griffiths_with<F: Field>(relation: GriffithsRelation, p: &BivariateParams<F>, t: &FamilyTable<F>) -> VerificationReport {
    let n = p.n;
    let mut r = VerificationReport::new(format!("griffiths-{}", relation.name()), p.param_map(), format!("i+j<={n}, x+y<={n}"));
    let k = |v: i64| F::from_int(v);
    let half = F::from_rational(&rat(1, 2));
    let dual_params = p.permuted([1, 2, 4, 3]);
    match relation {
        GriffithsRelation::Orthogonality => {
            let weights: Vec<(GridPoint, Result<F>)> = grid_points(n).into_iter().map(|g| (g, grid_weight(g.x, g.y, p))).collect();
            for d1 in degree_pairs(n) {
                for d2 in degree_pairs(n) {
                    let lhs = (|| {
                        let mut s = F::zero();
                        for (g, w) in &weights {
                            s = s + w.clone()? * t.get(d1.i, d1.j, g.x, g.y) * t.get(d2.i, d2.j, g.x, g.y);
                        }
                        Ok(s)
                    })();
                    let rhs = if d1 == d2 { degree_weight(d1.i, d1.j, p) } else { Ok(F::zero()) };
                    r.check(|| format!("(i,j)=({},{}), (k,l)=({},{})", d1.i, d1.j, d2.i, d2.j), lhs, rhs);
                }
            }
        }
        GriffithsRelation::Duality => {
            let dual = match griffiths_table(&dual_params, GriffithsForm::TripleSum) {
                Ok(v) => v,
                Err(e) => {
                    r.fail("dual table", format!("error: {e}"), "");
                    return r;
                }
            };
            for d in degree_pairs(n) {
                for g in grid_points(n) {
                    let lhs = (|| t.get(d.i, d.j, g.x, g.y).div_checked(&degree_weight(d.i, d.j, p)?, "duality"))();
                    let rhs = (|| dual.get(g.x, g.y, d.i, d.j).div_checked(&grid_weight(g.x, g.y, p)?, "duality"))();
                    r.check(|| format!("(i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y), lhs, rhs);
                }
            }
        }
        GriffithsRelation::Rec1 | GriffithsRelation::Rec2 => {
            for d in degree_pairs(n) {
                let stencils = griffiths_rec_stencils(d, p);
                for g in grid_points(n) {
                    let (i, j, x, y) = (d.i, d.j, g.x, g.y);
                    let res = stencils.as_ref().map_err(Clone::clone).and_then(|(a, gamma)| {
                        let eig = if relation == GriffithsRelation::Rec1 {
                            lambda(&k(y), &p.sum(&[3, 0])) + half.clone() * p.c(3).addi(1) * p.c(0).addi(1)
                        } else {
                            lambda(&k(x), &p.sum(&[4, 2])) + half.clone() * p.c(2).addi(1) * p.c(4).addi(1)
                        };
                        stencil_residual(
                            eig,
                            &t.get(i, j, x, y),
                            |e, f| in_triangle(i + e, j + f, n),
                            |e, f| {
                                Ok(if relation == GriffithsRelation::Rec1 {
                                    a.get(e, f).clone()
                                } else {
                                    a.get(e, f).clone() - gamma.get(e, f)
                                })
                            },
                            |e, f| t.get(i + e, j + f, x, y),
                        )
                    });
                    r.check_zero(|| format!("(i,j,x,y)=({i},{j},{x},{y})"), res);
                }
            }
        }
        GriffithsRelation::Diff1 | GriffithsRelation::Diff2 => {
            for g in grid_points(n) {
                let stencils = griffiths_diff_stencils(g, p);
                for d in degree_pairs(n) {
                    let (i, j, x, y) = (d.i, d.j, g.x, g.y);
                    let res = stencils.as_ref().map_err(Clone::clone).and_then(|(dd, psi)| {
                        let eig = if relation == GriffithsRelation::Diff1 {
                            mu(&k(j), &p.sum(&[0, 4])) + half.clone() * p.c(4).addi(1) * p.c(0).addi(1)
                        } else {
                            mu(&k(i), &p.sum(&[2, 3])) + half.clone() * p.c(2).addi(1) * p.c(3).addi(1)
                        };
                        stencil_residual(
                            eig,
                            &t.get(i, j, x, y),
                            |e, f| in_triangle(x + e, y + f, n),
                            |e, f| {
                                Ok(if relation == GriffithsRelation::Diff1 {
                                    dd.get(e, f).clone()
                                } else {
                                    dd.get(e, f).clone() - psi.get(e, f)
                                })
                            },
                            |e, f| t.get(i, j, x + e, y + f),
                        )
                    });
                    r.check_zero(|| format!("(i,j,x,y)=({i},{j},{x},{y})"), res);
                }
            }
        }
        GriffithsRelation::FormAgreement => {
            for form in [GriffithsForm::ConvRight, GriffithsForm::ConvLeft] {
                match griffiths_table(p, form) {
                    Ok(other) => {
                        for d in degree_pairs(n) {
                            for g in grid_points(n) {
                                r.check(
                                    || format!("{} at (i,j,x,y)=({},{},{},{})", form.name(), d.i, d.j, g.x, g.y),
                                    Ok(other.get(d.i, d.j, g.x, g.y)),
                                    Ok(t.get(d.i, d.j, g.x, g.y)),
                                );
                            }
                        }
                    }
                    Err(e) => r.fail(form.name(), format!("error: {e}"), ""),
                }
            }
            let cache = RacahCache::new(p);
            for bound in [SumBound::NMinusY, SumBound::MinJY] {
                for d in degree_pairs(n) {
                    for g in grid_points(n) {
                        r.check(
                            || format!("bound {bound:?} at (i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y),
                            triple_sum(&cache, d, g, bound),
                            Ok(t.get(d.i, d.j, g.x, g.y)),
                        );
                    }
                }
            }
        }
        GriffithsRelation::WeightIdentity => {
            for y in 0..=n {
                for j in 0..=n {
                    for a in 0..=n - y.max(j) {
                        let (lhs, rhs) = weight_identity(y, j, a, p);
                        r.check(|| format!("(y,j,a)=({y},{j},{a})"), lhs, rhs);
                    }
                }
            }
            r.sweep.ranges = format!("0<=y,j<={n}, 0<=a<=N-max(y,j)");
        }
        GriffithsRelation::PolynomialForm => {
            for d in degree_pairs(n) {
                for g in grid_points(n) {
                    r.check(
                        || format!("single-sum form at (i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y),
                        griffiths_polynomial_form(d, g, p),
                        Ok(t.get(d.i, d.j, g.x, g.y)),
                    );
                }
            }
            if let Some(rp) = rational_view(p) {
                for d in degree_pairs(n) {
                    let cert = polynomiality_certificate(d, &rp);
                    r.check_bool(
                        || format!("degree bound at (i,j)=({},{})", d.i, d.j),
                        matches!(cert, Ok(true)),
                        || (format!("{cert:?}"), format!("fit of total degree <= {}", n - d.j)),
                    );
                }
            } else {
                r.note("interpolation certificate needs rational parameters; skipped");
            }
        }
        GriffithsRelation::DualityTransport => duality_transport(p, &dual_params, &mut r),
    }
    r
}

/// Relabels the recurrence stencils of the dual family, conjugated by the
/// grid weight, and compares them entrywise with the difference stencils.
fn duality_transport<F: Field>(p: &BivariateParams<F>, q: &BivariateParams<F>, r: &mut VerificationReport) {
    let n = p.n;
    for g in grid_points(n) {
        let (x, y) = (g.x, g.y);
        let (rec, diff) = match (griffiths_rec_stencils(DegreePair::new(x, y), q), griffiths_diff_stencils(g, p)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                r.fail(format!("(x,y)=({x},{y})"), format!("error: {e}"), "");
                continue;
            }
        };
        let w0 = grid_weight(x, y, p);
        for (e, f) in crate::bivariate::SHIFTS {
            if !in_triangle(x + e, y + f, n) {
                continue;
            }
            let scale = (|| grid_weight(x + e, y + f, p)?.div_checked(&w0.clone()?, "grid weight"))();
            let loc = |which: &str| format!("{which} shift ({e},{f}) at (x,y)=({x},{y})");
            r.check(|| loc("rec1->diff1"), scale.clone().map(|s| s * rec.0.get(e, f)), Ok(diff.0.get(e, f).clone()));
            r.check(
                || loc("rec2->diff2"),
                scale.map(|s| s * (rec.0.get(e, f).clone() - rec.1.get(e, f))),
                Ok(diff.0.get(e, f).clone() - diff.1.get(e, f)),
            );
        }
    }
}

/// The three cases of the appendix identity: the degree shift `epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AppendixCase {
    EpsPlus,
    EpsMinus,
    EpsZero,
}

impl AppendixCase {
    pub const ALL: [AppendixCase; 3] = [AppendixCase::EpsMinus, AppendixCase::EpsZero, AppendixCase::EpsPlus];

    pub fn eps(&self) -> i64 {
        match self {
            AppendixCase::EpsPlus => 1,
            AppendixCase::EpsMinus => -1,
            AppendixCase::EpsZero => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AppendixCase::EpsPlus => "eps-plus",
            AppendixCase::EpsMinus => "eps-minus",
            AppendixCase::EpsZero => "eps-zero",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Both sides of the three-term identity that turns the rewritten
/// recurrence of the left convolution form into the second recurrence.
pub fn three_term_identity<F: Field>(eps: i64, i: i64, j: i64, a: i64, p: &BivariateParams<F>) -> (Result<F>, Result<F>) {
    let n = p.n;
    let q = p.permuted([3, 0, 4, 1]);
    let fam = p.uni(1, 2, 3, n - j);
    let lhs = (|| {
        let mut s = F::zero();
        for f in -1..=1 {
            let v = racah_p(i, &F::from_int(a - f), &fam)? * rec_stencil_entry(eps, f, j + eps, a, &q)?;
            s = if f == 0 { s + v } else { s - v };
        }
        Ok(s)
    })();
    let rhs = (|| {
        let shifted = p.uni(1, 2, 3, n - j - eps);
        let mut s = F::zero();
        for m in -1..=1 {
            let v = racah_p(i + m, &F::from_int(a), &shifted)?;
            if v.is_zero() {
                continue;
            }
            s = s + v * (rec_stencil_entry(m, eps, i + m, j + eps, p)? - gamma_entry(m, eps, i + m, j + eps, p)?);
        }
        Ok(s)
    })();
    (lhs, rhs)
}

/// The auxiliary coefficient identities at one `(i, j, a)`; returns
/// `(label, lhs, rhs)` triples.
fn auxiliary_identities<F: Field>(
    case: AppendixCase,
    i: i64,
    j: i64,
    a: i64,
    p: &BivariateParams<F>,
) -> Vec<(&'static str, Result<F>, Result<F>)> {
    let n = p.n;
    let k = |v: i64| F::from_int(v);
    let (c12, c04, c03) = (p.sum(&[1, 2]), p.sum(&[0, 4]), p.sum(&[0, 3]));
    let fa = || f_factor(&k(a), p.c(1), p.c(2));
    let fa_reflected = || f_factor(&(-c12.addi(a + 1)), p.c(1), p.c(2));
    let fj1 = || f_factor(&k(j - 1), p.c(4), p.c(0));
    let mut out = Vec::new();
    match case {
        AppendixCase::EpsMinus | AppendixCase::EpsPlus => {
            if j >= 1 {
                let inner = p.uni(1, 2, 3, n - j + 1);
                out.push((
                    "A-minus bridge",
                    (|| Ok(fa_reflected()? * cont_a(Sign::Minus, &k(j - 1), &p.uni(3, 0, 4, n - a + 1))?))(),
                    (|| Ok(cont_d(Sign::Minus, &k(a), &inner)? * fj1()?))(),
                ));
                out.push((
                    "A bridge",
                    (|| Ok((fa()? + fa_reflected()?) * rec_a(&k(j - 1), &p.uni(3, 0, 4, n - a))?))(),
                    (|| {
                        let s = cont_s(Sign::Minus, &k(a), &inner)? + cont_lambda(Sign::Plus, &k(a), &p.uni(1, 2, 3, n - j));
                        Ok(-s * fj1()?)
                    })(),
                ));
                out.push((
                    "A-plus bridge",
                    (|| Ok(fa()? * cont_a(Sign::Plus, &k(j - 1), &p.uni(3, 0, 4, n - a - 1))?))(),
                    (|| Ok(cont_b(Sign::Minus, &k(a), &inner)? * fj1()?))(),
                ));
            }
            out.push((
                "F mu identity",
                (|| Ok(f_factor(&k(j), p.c(4), p.c(0))? * cont_mu(Sign::Minus, &k(i), &p.uni(1, 2, 3, n - j))))(),
                (|| Ok(-rec_a(&k(j), &p.uni(1, 0, 4, n - i))?))(),
            ));
        }
        AppendixCase::EpsZero => {
            let (x, y) = (a, j);
            let fx = || Ok::<F, crate::Error>(f_factor(&k(x), p.c(2), p.c(1))? + f_factor(&(-c12.addi(x + 1)), p.c(2), p.c(1))?);
            out.push((
                "B sigma-plus identity",
                (|| Ok(fx()? * diff_b(&k(y), &p.uni(3, 0, 4, n - x))?))(),
                (|| Ok(cont_sigma(Sign::Plus, &k(x), &p.uni(4, 2, 1, n - y - 1))? * f_factor(&k(y), p.c(3), p.c(0))?))(),
            ));
            out.push((
                "D sigma-minus identity",
                (|| Ok(fx()? * diff_d(&k(y), &p.uni(3, 0, 4, n - x))?))(),
                (|| Ok(cont_sigma(Sign::Minus, &k(x), &p.uni(4, 2, 1, n - y + 1))? * f_factor(&(-c03.addi(y + 1)), p.c(3), p.c(0))?))(),
            ));
            let q = p.permuted([3, 0, 4, 1]);
            let kk = || Ok::<F, crate::Error>(f_factor(&k(j), p.c(0), p.c(4))? + f_factor(&(-c04.addi(j + 1)), p.c(0), p.c(4))?);
            let half = F::from_rational(&rat(1, 2));
            out.push((
                "centre reduction",
                (|| {
                    let s = mu(&k(i), &p.sum(&[2, 3])) + diff_s(&k(x), &p.uni(1, 2, 3, n - j))?;
                    Ok(rec_stencil_entry(0, 0, j, x, &q)? - kk()? * s)
                })(),
                (|| {
                    let s =
                        lambda(&k(x), &c12) + k(i) * p.sum(&[2, 3]).addi(i + 1) + half.clone() * p.c(2).addi(1) * p.sum(&[1, 2, 3]).addi(1);
                    Ok(-(kk()? * s))
                })(),
            ));
        }
    }
    out
}

/// Checks the three-term identity and its auxiliary coefficient identities
/// at one `(i, j, a)`.
pub fn appendix_identities<F: Field>(case: AppendixCase, i: i64, j: i64, a: i64, p: &BivariateParams<F>) -> VerificationReport {
    let mut r = VerificationReport::new(format!("griffiths-appendix-{}", case.name()), p.param_map(), format!("(i,j,a)=({i},{j},{a})"));
    let (lhs, rhs) = three_term_identity(case.eps(), i, j, a, p);
    r.check(|| format!("three-term identity at (i,j,a)=({i},{j},{a})"), lhs, rhs);
    for (label, lhs, rhs) in auxiliary_identities(case, i, j, a, p) {
        r.check(|| format!("{label} at (i,j,a)=({i},{j},{a})"), lhs, rhs);
    }
    r
}

/// [`appendix_identities`] over `i + j <= N` and `0 <= a <= N - j - eps`,
/// plus the coefficient identities over their own wider ranges.
pub fn appendix_sweep<F: Field>(case: AppendixCase, p: &BivariateParams<F>) -> VerificationReport {
    let n = p.n;
    let eps = case.eps();
    let mut r =
        VerificationReport::new(format!("griffiths-appendix-{}", case.name()), p.param_map(), format!("i+j<={n}, 0<=a<=N-j-({eps})"));
    for (j, i) in triangle(n) {
        for a in 0..=n - j - eps {
            let (lhs, rhs) = three_term_identity(eps, i, j, a, p);
            r.check(|| format!("three-term identity at (i,j,a)=({i},{j},{a})"), lhs, rhs);
        }
    }
    match case {
        AppendixCase::EpsMinus | AppendixCase::EpsPlus => {
            for j in 0..=n {
                for a in 0..=n + 1 {
                    for (label, lhs, rhs) in auxiliary_identities(case, 0, j, a, p) {
                        if label != "F mu identity" {
                            r.check(|| format!("{label} at (j,a)=({j},{a})"), lhs, rhs);
                        }
                    }
                }
                for i in 0..=n {
                    for (label, lhs, rhs) in auxiliary_identities(case, i, j, 0, p) {
                        if label == "F mu identity" {
                            r.check(|| format!("{label} at (i,j)=({i},{j})"), lhs, rhs);
                        }
                    }
                }
            }
        }
        AppendixCase::EpsZero => {
            for (j, i) in triangle(n) {
                for x in 0..=n - j {
                    for (label, lhs, rhs) in auxiliary_identities(case, i, j, x, p) {
                        r.check(|| format!("{label} at (i,j,x)=({i},{j},{x})"), lhs, rhs);
                    }
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, sign};

    fn ones(n: i64) -> BivariateParams<ExactRational> {
        BivariateParams::new(int(1), int(1), int(1), int(1), n)
    }

    fn sample(n: i64) -> BivariateParams<ExactRational> {
        BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), n)
    }

    #[test]
    fn boundary_conventions() {
        let p = sample(3);
        let g = GridPoint::new(1, 0);
        for form in GriffithsForm::ALL {
            assert_eq!(griffiths_g(DegreePair::new(1, -1), g, &p, form).unwrap(), int(0));
            assert_eq!(griffiths_g(DegreePair::new(1, 3), g, &p, form).unwrap(), int(0));
        }
    }

    #[test]
    fn forms_agree_pointwise() {
        let p = ones(3);
        for d in degree_pairs(3) {
            for g in grid_points(3) {
                let a = griffiths_g(d, g, &p, GriffithsForm::TripleSum).unwrap();
                assert_eq!(a, griffiths_g(d, g, &p, GriffithsForm::ConvRight).unwrap());
                assert_eq!(a, griffiths_g(d, g, &p, GriffithsForm::ConvLeft).unwrap());
            }
        }
    }

    #[test]
    fn top_degree_is_factorwise_sum() {
        let p = sample(3);
        let g = GridPoint::new(1, 1);
        let mut s = int(0);
        for a in 0..=3 {
            let t = racah_p(3, &int(a), &p.uni(1, 2, 3, 3)).unwrap()
                * racah_p(0, &int(1), &p.uni(3, 0, 4, 3 - a)).unwrap()
                * racah_p(a, &int(1), &p.uni(4, 2, 1, 2)).unwrap();
            s += t * int(sign(a));
        }
        assert_eq!(griffiths_g(DegreePair::new(3, 0), g, &p, GriffithsForm::TripleSum).unwrap(), s);
    }

    #[test]
    fn bound_as_printed_differs() {
        let p = sample(3);
        let mut differ = false;
        for d in degree_pairs(3) {
            for g in grid_points(3) {
                let base = griffiths_g_bounded(d, g, &p, SumBound::NMinusJ).unwrap();
                assert_eq!(base, griffiths_g_bounded(d, g, &p, SumBound::NMinusY).unwrap());
                assert_eq!(base, griffiths_g_bounded(d, g, &p, SumBound::MinJY).unwrap());
                differ |= base != griffiths_g_bounded(d, g, &p, SumBound::NMinusX).unwrap();
                differ |= base != griffiths_g_bounded(d, g, &p, SumBound::MinJX).unwrap();
            }
        }
        assert!(differ);
    }

    #[test]
    fn correction_corners_vanish() {
        let p = sample(2);
        let (_, gamma) = griffiths_rec_stencils(DegreePair::new(1, 1), &p).unwrap();
        let (_, psi) = griffiths_diff_stencils(GridPoint::new(1, 0), &p).unwrap();
        for (e, f) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            assert_eq!(*gamma.get(e, f), int(0));
            assert_eq!(*psi.get(e, f), int(0));
        }
    }

    #[test]
    fn gamma_centre_at_origin() {
        let p = ones(2);
        let h = rat(1, 2);
        let (c0, c3, c4) = (p.c(0).clone(), int(1), int(1));
        let direct = -rec_sigma(&int(0), &p.uni(1, 2, 3, 2)).unwrap() + rec_sigma(&int(0), &p.uni(1, 0, 4, 2)).unwrap()
            - rat(1, 4) * (&c3 * &c3 - &c4 * &c4)
            + (int(-2) - &h * int(2)) * (&h * (int(2) - &c0 - int(1)))
            - (int(-2) - &h * int(2)) * (&h * (&c0 + int(1) - int(2)));
        assert_eq!(gamma_entry(0, 0, 0, 0, &p).unwrap(), direct);
    }

    #[test]
    fn psi_edge_at_x_zero() {
        let p = sample(3);
        let direct = diff_b(&int(0), &p.uni(4, 2, 1, 2)).unwrap();
        assert_eq!(psi_entry(0, 1, 0, 1, &p).unwrap(), direct);
        assert!(direct != int(0));
    }

    #[test]
    fn last_row_normalized_is_constant() {
        let p = sample(3);
        let s = normalized_samples(DegreePair::new(0, 3), &p).unwrap();
        assert!(s.iter().all(|(_, v)| *v == s[0].1));
        assert!(polynomiality_certificate(DegreePair::new(1, 1), &sample(4)).unwrap());
    }

    #[test]
    fn appendix_examples() {
        let p = ones(3);
        for case in AppendixCase::ALL {
            let r = appendix_identities(case, 0, 1, 1, &p);
            assert!(r.is_exact(), "{case:?}: {:?}", r.counterexamples);
        }
    }

    #[test]
    fn all_relations_small() {
        for p in [ones(2), sample(3)] {
            for rel in GriffithsRelation::ALL {
                let r = verify_griffiths(rel, &p);
                assert!(r.is_exact(), "{rel:?} N={}: {:?}", p.n, r.counterexamples);
            }
            for case in AppendixCase::ALL {
                let r = appendix_sweep(case, &p);
                assert!(r.is_exact(), "{case:?} N={}: {:?}", p.n, r.counterexamples);
            }
        }
    }
}
