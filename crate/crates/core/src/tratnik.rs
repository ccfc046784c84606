//! Bivariate Tratnik polynomials of Racah type
//! `T_{i,j}(x,y) = p_i(x; c1,c2,c3; N-j) p_j(y; c3,c0,c4; N-x)`.

use crate::bivariate::{
    degree_pairs, grid_points, in_triangle, BivariateParams, DegreePair, FamilyTable, GridPoint, RacahCache, StencilTable, SHIFTS,
};
use crate::error::Result;
use crate::exactnum::{binomial, factorial, poch, rat, ratio, sign, terminating_pfq, ExactRational, Field};
use crate::interp::fit_total_degree;
use crate::racah_uni::{
    cont_a, cont_c, cont_lambda, cont_sigma, diff_b, diff_d, diff_s, f_factor, lambda, mu, omega, rec_a, rec_c, rec_sigma, DiffCoeffs,
    RecCoeffs, Sign,
};
use crate::report::VerificationReport;

pub fn tratnik_t<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>) -> Result<F> {
    tratnik_cached(&RacahCache::new(p), d, g)
}

pub(crate) fn tratnik_cached<F: Field>(cache: &RacahCache<'_, F>, d: DegreePair, g: GridPoint) -> Result<F> {
    let n = cache.params().n;
    if !in_triangle(d.i, d.j, n) || !in_triangle(g.x, g.y, n) {
        return Ok(F::zero());
    }
    let a = cache.p([1, 2, 3], d.i, g.x, n - d.j)?;
    if a.is_zero() {
        return Ok(a);
    }
    Ok(a * cache.p([3, 0, 4], d.j, g.y, n - g.x)?)
}

/// All values `T_{i,j}(x,y)` on the triangle.
pub fn tratnik_table<F: Field>(p: &BivariateParams<F>) -> Result<FamilyTable<F>> {
    let cache = RacahCache::new(p);
    FamilyTable::build(p.n, |d, g| tratnik_cached(&cache, d, g))
}

/// The weight `Lambda(x; c1, c2; N)`; zero outside `0..=N`.
pub fn lambda_weight<F: Field>(x: i64, c1: &F, c2: &F, n: i64) -> Result<F> {
    if x < 0 || x > n {
        return Ok(F::zero());
    }
    let c12 = c1.clone() + c2;
    ratio(
        &[F::from_rational(&(binomial(n, x) * ExactRational::from_integer(sign(x).into()))), c12.addi(2 * x + 1), poch(&c2.addi(1), x)],
        &[poch(&c1.addi(1), x), poch(&c12.addi(x + 1), n + 1)],
        "Lambda weight",
    )
}

/// Checks `Lambda(x;c1,c2;N) / Lambda(j;c4,c0;N) = Omega(x;c3,c2,c1;N-j) / Omega(j;c3,c0,c4;N-x)`.
pub fn weight_ratio_identity<F: Field>(x: i64, j: i64, p: &BivariateParams<F>) -> VerificationReport {
    let n = p.n;
    let mut r = VerificationReport::new("tratnik-weight-ratio", p.param_map(), format!("x={x}, j={j}"));
    let lhs = (|| lambda_weight(x, p.c(1), p.c(2), n)?.div_checked(&lambda_weight(j, p.c(4), p.c(0), n)?, "weight ratio"))();
    let rhs = (|| omega(x, &p.uni(3, 2, 1, n - j))?.div_checked(&omega(j, &p.uni(3, 0, 4, n - x))?, "weight ratio"))();
    r.check(|| format!("x={x}, j={j}"), lhs, rhs);
    r
}

/// The prefactor of the polynomial form that depends on `(i, j)` and `x` only.
pub fn polynomial_form_prefactor<F: Field>(d: DegreePair, x: i64, p: &BivariateParams<F>) -> Result<F> {
    let (i, j, n) = (d.i, d.j, p.n);
    let c23 = p.sum(&[2, 3]);
    let c04 = p.sum(&[0, 4]);
    let s = rat(sign(i + j), 1) / ExactRational::from_integer(factorial(j as u64));
    ratio(
        &[
            F::from_rational(&(s * binomial(n - j, i))),
            c23.addi(2 * i + 1),
            poch(&p.c(0).addi(1), j),
            poch(&p.c(2).addi(1), n - j),
            poch(&p.c(1).addi(1), x),
        ],
        &[poch(&c23.addi(i + 1), n - j + 1), poch(&c04.addi(j + 1), j), poch(&p.c(4).addi(1), j), poch(&p.c(2).addi(1), x)],
        "Tratnik polynomial form prefactor",
    )
}

/// The Whipple-transformed product form, valid on the grid.
pub fn tratnik_polynomial_form<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>) -> Result<F> {
    let (i, j, x, y, n) = (d.i, d.j, g.x, g.y, p.n);
    if !in_triangle(i, j, n) || !in_triangle(x, y, n) {
        return Ok(F::zero());
    }
    let pre = polynomial_form_prefactor(d, x, p)?;
    let (c12, c23, c03, c04) = (p.sum(&[1, 2]), p.sum(&[2, 3]), p.sum(&[0, 3]), p.sum(&[0, 4]));
    let k = |v: i64| F::from_int(v);
    let f1 = terminating_pfq(
        &[k(i + j - n), -c23.addi(n + i - j + 1), k(x - n + j), -c12.addi(n + x - j + 1)],
        &[c04.addi(2 * j + 2), -p.c(2).addi(n - j), k(j - n)],
        &F::one(),
        (n - i - j) as usize,
    )?;
    let shifted = -c12.addi(n + x + 1);
    let f2 = poch(&k(x - n), j)
        * poch(&shifted, j)
        * terminating_pfq(
            &[k(-j), c04.addi(j + 1), k(-y), c03.addi(y + 1)],
            &[p.c(0).addi(1), shifted.clone(), k(x - n)],
            &F::one(),
            j as usize,
        )?;
    Ok(pre * f1 * f2)
}

/// Tratnik's original two-factor expression under the substitution
/// `gamma = -N-1, x1 = y, x2 = N-x, n1 = j, n2 = N-i-j, eta = c0,
/// alpha1 = c0+c3+1, alpha2 = c4+1, alpha3 = c1+1`.
pub fn historical_r<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>) -> Result<F> {
    let n = p.n;
    let k = |v: i64| F::from_int(v);
    let gamma = k(-n - 1);
    let (x1, x2, n1, n2) = (g.y, n - g.x, d.j, n - d.i - d.j);
    let eta = p.c(0).clone();
    let a1 = p.sum(&[0, 3]).addi(1);
    let a2 = p.c(4).addi(1);
    let a3 = p.c(1).addi(1);
    let one = F::one();
    let first = poch(&eta.addi(1), n1)
        * poch(&(a1.clone() + &a2).addi(x2), n1)
        * poch(&k(-x2), n1)
        * terminating_pfq(
            &[k(-n1), eta.clone() + &a2 + k(n1), k(-x1), a1.addi(x1)],
            &[eta.addi(1), (a1.clone() + &a2).addi(x2), k(-x2)],
            &one,
            n1 as usize,
        )?;
    let b1 = eta.clone() + &a2 + k(2 * n1 + 1);
    let b2 = a1.clone() + &a2 + &a3 - &gamma + k(n1 - 1);
    let b3 = gamma.clone() + k(n1 + 1);
    let second = poch(&b1, n2)
        * poch(&b2, n2)
        * poch(&b3, n2)
        * terminating_pfq(
            &[k(-n2), eta + &a2 + &a3 + k(n2 + 2 * n1), k(n1 - x2), a1 + &a2 + k(x2 + n1)],
            &[b1, b2, b3],
            &one,
            n2 as usize,
        )?;
    Ok(first * second)
}

/// The factor relating [`historical_r`] to `T_{i,j}(x,y)`.
pub fn historical_factor<F: Field>(d: DegreePair, g: GridPoint, p: &BivariateParams<F>) -> Result<F> {
    let (i, j, x, n) = (d.i, d.j, g.x, p.n);
    let (c23, c04) = (p.sum(&[2, 3]), p.sum(&[0, 4]));
    let s = ExactRational::from_integer(factorial(j as u64) * factorial((n - i - j) as u64) * sign(i + j));
    ratio(
        &[
            F::from_rational(&s),
            poch(&p.c(4).addi(1), j),
            poch(&c23.addi(i + 1), n - j + 1),
            poch(&c04.addi(j + 1), n - i + 1),
            poch(&p.c(2).addi(1), x),
        ],
        &[poch(&p.c(2).addi(1), i), c23.addi(2 * i + 1), c04.addi(2 * j + 1), poch(&p.c(1).addi(1), x)],
        "historical conversion factor",
    )
}

/// The coefficient `A^{e,f}_{i,j}` of the second recurrence.
pub fn rec_stencil_entry<F: Field>(e: i64, f: i64, i: i64, j: i64, p: &BivariateParams<F>) -> Result<F> {
    let n = p.n;
    let jj = F::from_int(j);
    let ii = F::from_int(i);
    let c04 = p.sum(&[0, 4]);
    let fm = || f_factor(&(-(jj.clone() + c04.addi(1))), p.c(4), p.c(0));
    let fp = || f_factor(&jj, p.c(4), p.c(0));
    let fs = || Ok::<F, crate::Error>(fp()? + fm()?);
    Ok(match (e, f) {
        (1, 1) => -(fm()? * cont_c(Sign::Minus, &ii, &p.uni(1, 2, 3, n - j + 1))?),
        (0, 1) => fm()? * cont_sigma(Sign::Minus, &ii, &p.uni(1, 2, 3, n - j + 1))?,
        (-1, 1) => -(fm()? * cont_a(Sign::Minus, &ii, &p.uni(1, 2, 3, n - j + 1))?),
        (1, -1) => -(fp()? * cont_c(Sign::Plus, &ii, &p.uni(1, 2, 3, n - j - 1))?),
        (0, -1) => fp()? * cont_sigma(Sign::Plus, &ii, &p.uni(1, 2, 3, n - j - 1))?,
        (-1, -1) => -(fp()? * cont_a(Sign::Plus, &ii, &p.uni(1, 2, 3, n - j - 1))?),
        (1, 0) => fs()? * rec_c(&ii, &p.uni(1, 2, 3, n - j))?,
        (-1, 0) => fs()? * rec_a(&ii, &p.uni(1, 2, 3, n - j))?,
        (0, 0) => {
            let m = n - j;
            let c123 = p.sum(&[1, 2, 3]);
            let half = F::from_rational(&rat(1, 2));
            let inner =
                rec_sigma(&ii, &p.uni(1, 2, 3, m))? + F::from_int(m * m) + c123.addi(2).muli(m) + half * p.c(3).addi(1) * c123.addi(1);
            -(fs()? * inner)
        }
        _ => panic!("shift ({e}, {f}) out of range"),
    })
}

/// The coefficient `D^{e,f}(x,y)` of the second difference equation.
pub fn diff_stencil_entry<F: Field>(e: i64, f: i64, x: i64, y: i64, p: &BivariateParams<F>) -> Result<F> {
    let n = p.n;
    let xx = F::from_int(x);
    let yy = F::from_int(y);
    let c12 = p.sum(&[1, 2]);
    let fam = p.uni(3, 0, 4, n - x);
    let fp = || f_factor(&xx, p.c(1), p.c(2));
    let fm = || f_factor(&(-(xx.clone() + c12.addi(1))), p.c(1), p.c(2));
    let fs = || Ok::<F, crate::Error>(fp()? + fm()?);
    use crate::racah_uni::{cont_b, cont_d, cont_s};
    Ok(match (e, f) {
        (1, 1) => -(fp()? * cont_b(Sign::Minus, &yy, &fam)?),
        (1, 0) => fp()? * cont_s(Sign::Minus, &yy, &fam)?,
        (1, -1) => -(fp()? * cont_d(Sign::Minus, &yy, &fam)?),
        (-1, 1) => -(fm()? * cont_b(Sign::Plus, &yy, &fam)?),
        (-1, 0) => fm()? * cont_s(Sign::Plus, &yy, &fam)?,
        (-1, -1) => -(fm()? * cont_d(Sign::Plus, &yy, &fam)?),
        (0, 1) => fs()? * diff_b(&yy, &fam)?,
        (0, -1) => fs()? * diff_d(&yy, &fam)?,
        (0, 0) => {
            let m = n - x;
            let c034 = p.sum(&[0, 3, 4]);
            let half = F::from_rational(&rat(1, 2));
            let inner = diff_s(&yy, &fam)? + F::from_int(m * m) + c034.addi(2).muli(m) + half * p.c(3).addi(1) * c034.addi(1);
            -(fs()? * inner)
        }
        _ => panic!("shift ({e}, {f}) out of range"),
    })
}

/// First recurrence coefficients `{A_{i-1}, C_{i+1}, Sigma_i}` for the
/// family `(c1, c2, c3; N - j)`, and the second-recurrence stencil whose
/// entry `(e, f)` multiplies `T_{i+e, j+f}`.
pub fn tratnik_rec_stencil<F: Field>(d: DegreePair, p: &BivariateParams<F>) -> Result<(RecCoeffs<F>, StencilTable<F>)> {
    let fam = p.uni(1, 2, 3, p.n - d.j);
    let k = |v: i64| F::from_int(v);
    let first = RecCoeffs { a: rec_a(&k(d.i - 1), &fam)?, c: rec_c(&k(d.i + 1), &fam)?, sigma: rec_sigma(&k(d.i), &fam)? };
    let second = StencilTable::build(|e, f| rec_stencil_entry(e, f, d.i + e, d.j + f, p))?;
    Ok((first, second))
}

/// First difference coefficients `{B, D, S}(y; c3, c0, c4; N - x)`, and the
/// second-difference stencil whose entry `(e, f)` multiplies `T(x+e, y+f)`.
pub fn tratnik_diff_stencil<F: Field>(g: GridPoint, p: &BivariateParams<F>) -> Result<(DiffCoeffs<F>, StencilTable<F>)> {
    let fam = p.uni(3, 0, 4, p.n - g.x);
    let yy = F::from_int(g.y);
    let first = DiffCoeffs { b: diff_b(&yy, &fam)?, d: diff_d(&yy, &fam)?, s: diff_s(&yy, &fam)? };
    let second = StencilTable::build(|e, f| diff_stencil_entry(e, f, g.x, g.y, p))?;
    Ok((first, second))
}

/// `eig * center - sum over in-domain shifts of coeff(e, f) * value(e, f)`.
pub(crate) fn stencil_residual<F: Field>(
    eig: F,
    center: &F,
    mut in_domain: impl FnMut(i64, i64) -> bool,
    mut coeff: impl FnMut(i64, i64) -> Result<F>,
    mut value: impl FnMut(i64, i64) -> F,
) -> Result<F> {
    let mut r = eig * center;
    for (e, f) in SHIFTS {
        if !in_domain(e, f) {
            continue;
        }
        let v = value(e, f);
        if v.is_zero() {
            continue;
        }
        r = r - coeff(e, f)? * v;
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TratnikRelation {
    Orthogonality,
    Duality,
    Recurrence1,
    Recurrence2,
    Difference1,
    Difference2,
    Polynomiality,
    Historical,
    WeightRatio,
    Bridge,
}

impl TratnikRelation {
    pub const ALL: [TratnikRelation; 10] = [
        TratnikRelation::Orthogonality,
        TratnikRelation::Duality,
        TratnikRelation::Recurrence1,
        TratnikRelation::Recurrence2,
        TratnikRelation::Difference1,
        TratnikRelation::Difference2,
        TratnikRelation::Polynomiality,
        TratnikRelation::Historical,
        TratnikRelation::WeightRatio,
        TratnikRelation::Bridge,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TratnikRelation::Orthogonality => "orthogonality",
            TratnikRelation::Duality => "duality",
            TratnikRelation::Recurrence1 => "recurrence1",
            TratnikRelation::Recurrence2 => "recurrence2",
            TratnikRelation::Difference1 => "difference1",
            TratnikRelation::Difference2 => "difference2",
            TratnikRelation::Polynomiality => "polynomiality",
            TratnikRelation::Historical => "historical",
            TratnikRelation::WeightRatio => "weight-ratio",
            TratnikRelation::Bridge => "bridge",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }
}

pub fn verify_tratnik<F: Field>(relation: TratnikRelation, p: &BivariateParams<F>) -> VerificationReport {
    match tratnik_table(p) {
        Ok(t) => verify_tratnik_with(relation, p, &t),
        Err(e) => {
            let mut r = VerificationReport::new(format!("tratnik-{}", relation.name()), p.param_map(), "table");
            r.fail("table", format!("error: {e}"), "");
            r
        }
    }
}

/// Same as [`verify_tratnik`] reusing a precomputed table.
pub fn verify_tratnik_with<F: Field>(relation: TratnikRelation, p: &BivariateParams<F>, t: &FamilyTable<F>) -> VerificationReport {
    let n = p.n;
    let mut r = VerificationReport::new(format!("tratnik-{}", relation.name()), p.param_map(), format!("i+j<={n}, x+y<={n}"));
    let k = |v: i64| F::from_int(v);
    let half = F::from_rational(&rat(1, 2));
    match relation {
        TratnikRelation::Orthogonality => {
            let weights: Vec<(GridPoint, Result<F>)> = grid_points(n)
                .into_iter()
                .map(|g| (g, (|| Ok(lambda_weight(g.x, p.c(1), p.c(2), n)? * omega(g.y, &p.uni(4, 0, 3, n - g.x))?))()))
                .collect();
            for d1 in degree_pairs(n) {
                for d2 in degree_pairs(n) {
                    let lhs = (|| {
                        let mut s = F::zero();
                        for (g, w) in &weights {
                            let w = w.clone()?;
                            s = s + w * t.get(d1.i, d1.j, g.x, g.y) * t.get(d2.i, d2.j, g.x, g.y);
                        }
                        Ok(s)
                    })();
                    let rhs = if d1 == d2 {
                        (|| Ok(lambda_weight(d1.j, p.c(4), p.c(0), n)? * omega(d1.i, &p.uni(1, 2, 3, n - d1.j))?))()
                    } else {
                        Ok(F::zero())
                    };
                    r.check(|| format!("(i,j)=({},{}), (k,l)=({},{})", d1.i, d1.j, d2.i, d2.j), lhs, rhs);
                }
            }
        }
        TratnikRelation::Duality => {
            let q = p.permuted([4, 0, 3, 1]);
            let dual = match tratnik_table(&q) {
                Ok(v) => v,
                Err(e) => {
                    r.fail("dual table", format!("error: {e}"), "");
                    return r;
                }
            };
            for d in degree_pairs(n) {
                for g in grid_points(n) {
                    let lhs = (|| {
                        let w = omega(d.i, &p.uni(1, 2, 3, n - d.j))? * lambda_weight(d.j, p.c(4), p.c(0), n)?;
                        t.get(d.i, d.j, g.x, g.y).div_checked(&w, "duality")
                    })();
                    let rhs = (|| {
                        let w = omega(g.y, &p.uni(4, 0, 3, n - g.x))? * lambda_weight(g.x, p.c(1), p.c(2), n)?;
                        dual.get(g.y, g.x, d.j, d.i).div_checked(&w, "duality")
                    })();
                    r.check(|| format!("(i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y), lhs, rhs);
                }
            }
        }
        TratnikRelation::Recurrence1 | TratnikRelation::Recurrence2 => {
            for d in degree_pairs(n) {
                for g in grid_points(n) {
                    let (i, j, x, y) = (d.i, d.j, g.x, g.y);
                    let center = t.get(i, j, x, y);
                    let res = if relation == TratnikRelation::Recurrence1 {
                        let fam = p.uni(1, 2, 3, n - j);
                        let eig = lambda(&k(x), &p.sum(&[1, 2]));
                        stencil_residual(
                            eig,
                            &center,
                            |e, f| f == 0 && in_triangle(i + e, j, n),
                            |e, _| match e {
                                1 => rec_c(&k(i + 1), &fam),
                                -1 => rec_a(&k(i - 1), &fam),
                                _ => Ok(-rec_sigma(&k(i), &fam)?),
                            },
                            |e, _| t.get(i + e, j, x, y),
                        )
                    } else {
                        let eig = lambda(&k(y), &p.sum(&[3, 0])) + half.clone() * p.c(3).addi(1) * p.c(0).addi(1);
                        stencil_residual(
                            eig,
                            &center,
                            |e, f| in_triangle(i + e, j + f, n),
                            |e, f| rec_stencil_entry(e, f, i + e, j + f, p),
                            |e, f| t.get(i + e, j + f, x, y),
                        )
                    };
                    r.check_zero(|| format!("(i,j,x,y)=({i},{j},{x},{y})"), res);
                }
            }
        }
        TratnikRelation::Difference1 | TratnikRelation::Difference2 => {
            for d in degree_pairs(n) {
                for g in grid_points(n) {
                    let (i, j, x, y) = (d.i, d.j, g.x, g.y);
                    let center = t.get(i, j, x, y);
                    let res = if relation == TratnikRelation::Difference1 {
                        let fam = p.uni(3, 0, 4, n - x);
                        let eig = mu(&k(j), &p.sum(&[0, 4]));
                        stencil_residual(
                            eig,
                            &center,
                            |e, f| e == 0 && in_triangle(x, y + f, n),
                            |_, f| match f {
                                1 => diff_b(&k(y), &fam),
                                -1 => diff_d(&k(y), &fam),
                                _ => Ok(-diff_s(&k(y), &fam)?),
                            },
                            |_, f| t.get(i, j, x, y + f),
                        )
                    } else {
                        let eig = mu(&k(i), &p.sum(&[2, 3])) + half.clone() * p.c(2).addi(1) * p.c(3).addi(1);
                        stencil_residual(
                            eig,
                            &center,
                            |e, f| in_triangle(x + e, y + f, n),
                            |e, f| diff_stencil_entry(e, f, x, y, p),
                            |e, f| t.get(i, j, x + e, y + f),
                        )
                    };
                    r.check_zero(|| format!("(i,j,x,y)=({i},{j},{x},{y})"), res);
                }
            }
        }
        TratnikRelation::Polynomiality => {
            for d in degree_pairs(n) {
                for g in grid_points(n) {
                    r.check(
                        || format!("product form at (i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y),
                        tratnik_polynomial_form(d, g, p),
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
                        || (format!("{cert:?}"), format!("fit of total degree <= {}", n - d.i)),
                    );
                }
            } else {
                r.note("interpolation certificate needs rational parameters; skipped");
            }
        }
        TratnikRelation::Historical => {
            for d in degree_pairs(n) {
                for g in grid_points(n) {
                    let rhs = historical_factor(d, g, p).map(|f| f * t.get(d.i, d.j, g.x, g.y));
                    r.check(|| format!("(i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y), historical_r(d, g, p), rhs);
                }
            }
        }
        TratnikRelation::WeightRatio => {
            for (x, j) in crate::bivariate::triangle(n) {
                r = r.merge(weight_ratio_identity(x, j, p));
            }
            r.sweep.ranges = format!("x+j<={n}");
        }
        TratnikRelation::Bridge => bridge_identities(p, &mut r),
    }
    r
}

pub(crate) fn rational_view<F: Field>(p: &BivariateParams<F>) -> Option<BivariateParams<ExactRational>> {
    let c: Vec<ExactRational> = p.all().iter().map(|v| v.to_rational()).collect::<Option<_>>()?;
    BivariateParams::from_all(c.try_into().ok()?, p.n).ok()
}

/// Exact-fit certificate: `T_{i,j}` divided by its `(i,j,x)` prefactor is a
/// polynomial of total degree `<= N - i` in `(lambda(x; c12), lambda(y; c03))`.
pub fn polynomiality_certificate(d: DegreePair, p: &BivariateParams<ExactRational>) -> Result<bool> {
    Ok(fit_total_degree(&normalized_samples(d, p)?, (p.n - d.i) as usize).is_some())
}

/// Samples `((lambda(x;c12), lambda(y;c03)), T / prefactor)` over the grid.
pub fn normalized_samples(
    d: DegreePair,
    p: &BivariateParams<ExactRational>,
) -> Result<Vec<((ExactRational, ExactRational), ExactRational)>> {
    let cache = RacahCache::new(p);
    let (c12, c03) = (p.sum(&[1, 2]), p.sum(&[0, 3]));
    let mut out = Vec::new();
    for g in grid_points(p.n) {
        let v = tratnik_cached(&cache, d, g)?.div_checked(&polynomial_form_prefactor(d, g.x, p)?, "normalization")?;
        let u = lambda(&ExactRational::from_integer(g.x.into()), &c12);
        let w = lambda(&ExactRational::from_integer(g.y.into()), &c03);
        out.push(((u, w), v));
    }
    Ok(out)
}

/// The three coefficient identities linking the `(c3, c0, c4; N - x)`
/// recurrence coefficients to the contiguity eigenvalues of `(c1, c2, c3; N - j)`.
fn bridge_identities<F: Field>(p: &BivariateParams<F>, r: &mut VerificationReport) {
    let n = p.n;
    let k = |v: i64| F::from_int(v);
    let half = F::from_rational(&rat(1, 2));
    let c04 = p.sum(&[0, 4]);
    let (c12, c123) = (p.sum(&[1, 2]), p.sum(&[1, 2, 3]));
    for j in 0..=n {
        for x in 0..=n {
            let fam = p.uni(3, 0, 4, n - x);
            let inner = p.uni(1, 2, 3, n - j);
            let loc = |s: &str| format!("{s} at (j,x)=({j},{x})");
            r.check(
                || loc("C_{j+1} bridge"),
                rec_c(&k(j + 1), &fam),
                (|| Ok(-(f_factor(&(-c04.addi(j + 2)), p.c(4), p.c(0))? * cont_lambda(Sign::Minus, &k(x), &inner))))(),
            );
            r.check(
                || loc("Sigma_j bridge"),
                (|| Ok(rec_sigma(&k(j), &fam)? - half.clone() * p.c(3).addi(1) * p.c(0).addi(1)))(),
                (|| {
                    let m = n - j;
                    let fs = f_factor(&k(j), p.c(4), p.c(0))? + f_factor(&(-c04.addi(j + 1)), p.c(4), p.c(0))?;
                    let bracket =
                        lambda(&k(x), &c12) - F::from_int(m * m) - c123.addi(2).muli(m) - half.clone() * p.c(3).addi(1) * c123.addi(1);
                    Ok(-(fs * bracket))
                })(),
            );
            r.check(
                || loc("A_{j-1} bridge"),
                rec_a(&k(j - 1), &fam),
                (|| Ok(-(f_factor(&k(j - 1), p.c(4), p.c(0))? * cont_lambda(Sign::Plus, &k(x), &inner))))(),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, pochhammer};
    use crate::racah_uni::racah_p;

    fn ones(n: i64) -> BivariateParams<ExactRational> {
        BivariateParams::new(int(1), int(1), int(1), int(1), n)
    }

    fn sample(n: i64) -> BivariateParams<ExactRational> {
        BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), n)
    }

    #[test]
    fn t00_is_product_of_omegas() {
        let p = sample(3);
        for g in grid_points(3) {
            let expected = omega(0, &p.uni(1, 2, 3, 3)).unwrap() * omega(0, &p.uni(3, 0, 4, 3 - g.x)).unwrap();
            assert_eq!(tratnik_t(DegreePair::new(0, 0), g, &p).unwrap(), expected);
        }
    }

    #[test]
    fn boundary_conventions() {
        let p = sample(3);
        let g = GridPoint::new(1, 1);
        assert_eq!(tratnik_t(DegreePair::new(1, -1), g, &p).unwrap(), int(0));
        assert_eq!(tratnik_t(DegreePair::new(-1, 1), g, &p).unwrap(), int(0));
        assert_eq!(tratnik_t(DegreePair::new(2, 2), g, &p).unwrap(), int(0));
    }

    #[test]
    fn t11_factorwise() {
        let p = ones(3);
        let a = racah_p(1, &int(1), &p.uni(1, 2, 3, 2)).unwrap();
        let b = racah_p(1, &int(1), &p.uni(3, 0, 4, 2)).unwrap();
        assert_eq!(tratnik_t(DegreePair::new(1, 1), GridPoint::new(1, 1), &p).unwrap(), a * b);
    }

    #[test]
    fn lambda_weight_examples() {
        let (c1, c2) = (rat(2, 3), rat(5, 7));
        let c12 = c1.clone() + &c2;
        assert_eq!(lambda_weight(0, &c1, &c2, 3).unwrap(), int(1) / pochhammer(&c12.addi(2), 3));
        assert_eq!(lambda_weight(0, &int(1), &int(1), 2).unwrap(), rat(1, 20));
        assert!(lambda_weight(1, &int(1), &int(1), 2).unwrap() < int(0));
    }

    #[test]
    fn weight_ratio_examples() {
        assert!(weight_ratio_identity(0, 0, &sample(3)).is_exact());
        assert!(weight_ratio_identity(1, 2, &ones(4)).is_exact());
    }

    #[test]
    fn polynomial_form_with_j_zero_has_unit_prefactor_pochhammers() {
        let p = ones(3);
        let g = GridPoint::new(2, 1);
        let k = int(g.x - 3);
        assert_eq!(pochhammer(&k, 0), int(1));
        assert_eq!(tratnik_polynomial_form(DegreePair::new(1, 0), g, &p).unwrap(), tratnik_t(DegreePair::new(1, 0), g, &p).unwrap());
    }

    #[test]
    fn historical_trivial_series() {
        let p = sample(3);
        let d = DegreePair::new(3, 0);
        for g in grid_points(3) {
            let r = historical_r(d, g, &p).unwrap();
            assert_eq!(r, historical_factor(d, g, &p).unwrap() * tratnik_t(d, g, &p).unwrap());
        }
    }

    #[test]
    fn rec_stencil_corner_example() {
        let p = sample(3);
        let direct =
            -(f_factor(&(-(p.sum(&[0, 4]).addi(2))), p.c(4), p.c(0)).unwrap() * cont_a(Sign::Minus, &int(0), &p.uni(1, 2, 3, 3)).unwrap());
        assert_eq!(rec_stencil_entry(-1, 1, 0, 1, &p).unwrap(), direct.clone());
        let (_, table) = tratnik_rec_stencil(DegreePair::new(1, 0), &p).unwrap();
        assert_eq!(*table.get(-1, 1), direct);
    }

    #[test]
    fn diff_stencil_edge_zero() {
        let p = sample(3);
        for x in 0..=3 {
            let y = 3 - x;
            assert_eq!(diff_stencil_entry(0, 1, x, y, &p).unwrap(), int(0));
            assert_eq!(diff_stencil_entry(-1, 1, x, y, &p).unwrap() * int(0), int(0));
        }
        for x in 0..=3 {
            assert_eq!(diff_stencil_entry(0, -1, x, 0, &p).unwrap(), int(0));
        }
    }

    #[test]
    fn all_relations_small() {
        for p in [ones(3), sample(2), sample(3)] {
            for rel in TratnikRelation::ALL {
                let r = verify_tratnik(rel, &p);
                assert!(r.is_exact(), "{rel:?} N={}: {:?}", p.n, r.counterexamples);
            }
        }
    }

    #[test]
    fn orthogonality_matrix_size() {
        let r = verify_tratnik(TratnikRelation::Orthogonality, &ones(3));
        assert_eq!(r.sweep.checked, 100);
    }
}
