//! Univariate Racah polynomials `p_n(x; c1, c2, c3; N)` normalized by the
//! weight `Omega`, their bispectral coefficients and the contiguity families
//! linking `N` to `N +- 1`.

use crate::error::Result;
use crate::exactnum::{binomial, poch, ratio, terminating_pfq, ExactRational, Field};
use crate::report::{param_map, VerificationReport};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
pub struct UniParams<F> {
    pub c1: F,
    pub c2: F,
    pub c3: F,
    pub n: i64,
}

impl<F: Field> UniParams<F> {
    pub fn new(c1: F, c2: F, c3: F, n: i64) -> Self {
        UniParams { c1, c2, c3, n }
    }

    pub fn c12(&self) -> F {
        self.c1.clone() + &self.c2
    }

    pub fn c13(&self) -> F {
        self.c1.clone() + &self.c3
    }

    pub fn c23(&self) -> F {
        self.c2.clone() + &self.c3
    }

    pub fn c123(&self) -> F {
        self.c12() + &self.c3
    }

    /// Same parameters with a different `N`.
    pub fn with_n(&self, n: i64) -> Self {
        UniParams { n, ..self.clone() }
    }

    /// The parameter order `(c3, c2, c1)` of the dual family.
    pub fn dual(&self) -> Self {
        UniParams { c1: self.c3.clone(), c2: self.c2.clone(), c3: self.c1.clone(), n: self.n }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `{A, C, Sigma}` at one index.
#[derive(Debug, Clone, PartialEq)]
pub struct RecCoeffs<F> {
    pub a: F,
    pub c: F,
    pub sigma: F,
}

/// `{B, D, S}` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffCoeffs<F> {
    pub b: F,
    pub d: F,
    pub s: F,
}

/// True iff no denominator met while sweeping `0 <= n, x <= N` (and the
/// `N +- 1` contiguity families) vanishes.
pub fn genericity_check(p: &UniParams<ExactRational>) -> bool {
    let n = p.n;
    if n < 0 {
        return false;
    }
    let (c1, c2, c3) = (&p.c1, &p.c2, &p.c3);
    let (c12, c23, c123) = (p.c12(), p.c23(), p.c123());
    let mut factors: Vec<ExactRational> = Vec::new();
    for m in (n - 1).max(0)..=n + 1 {
        for k in 0..=m {
            factors.push(c3.addi(k + 1));
            factors.push(c1.addi(k + 1));
            factors.push(c2.addi(k + 1));
            factors.push(c123.addi(m + 2 + k));
        }
        for k in 1..=2 * m + 1 {
            factors.push(c23.addi(k));
            factors.push(c12.addi(k));
        }
    }
    for k in 0..=2 * n + 4 {
        factors.push(c23.addi(k));
        factors.push(c12.addi(k));
    }
    factors.iter().all(|f| !f.is_zero())
}

/// The normalization `Omega(n; c1, c2, c3; N)`; zero outside `0..=N`.
pub fn omega<F: Field>(n: i64, p: &UniParams<F>) -> Result<F> {
    let big_n = p.n;
    if n < 0 || n > big_n {
        return Ok(F::zero());
    }
    let (c23, c123) = (p.c23(), p.c123());
    ratio(
        &[
            F::from_rational(&binomial(big_n, n)),
            c23.addi(2 * n + 1),
            poch(&p.c2.addi(1), n),
            poch(&c123.addi(big_n + 2), n),
            poch(&p.c1.addi(1), big_n - n),
        ],
        &[poch(&p.c3.addi(1), n), poch(&c23.addi(n + 1), big_n + 1)],
        "omega",
    )
}

/// `p_n(x; c1, c2, c3; N)`; zero when `n` lies outside `0..=N`.
/// The variable may be any field element.
pub fn racah_p<F: Field>(n: i64, x: &F, p: &UniParams<F>) -> Result<F> {
    let big_n = p.n;
    if big_n < 0 || n < 0 || n > big_n {
        return Ok(F::zero());
    }
    let w = omega(n, p)?;
    if w.is_zero() {
        return Ok(w);
    }
    let top = [F::from_int(-n), p.c23().addi(n + 1), -x.clone(), x.clone() + p.c12().addi(1)];
    let bottom = [p.c2.addi(1), p.c123().addi(big_n + 2), F::from_int(-big_n)];
    Ok(w * terminating_pfq(&top, &bottom, &F::one(), n as usize)?)
}

/// `lambda(x; c12) = x (x + c12 + 1)`.
pub fn lambda<F: Field>(x: &F, c12: &F) -> F {
    x.clone() * (x.clone() + c12.addi(1))
}

/// `mu_n(c23) = n (n + c23 + 1)`.
pub fn mu<F: Field>(n: &F, c23: &F) -> F {
    n.clone() * (n.clone() + c23.addi(1))
}

pub fn rec_a<F: Field>(n: &F, p: &UniParams<F>) -> Result<F> {
    let (c23, big_n) = (p.c23(), p.n);
    ratio(
        &[n.addi(-big_n), n.clone() + p.c123().addi(big_n + 2), n.clone() + p.c2.addi(1), n.clone() + c23.addi(1)],
        &[n.muli(2) + c23.addi(1), n.muli(2) + c23.addi(2)],
        "recurrence coefficient A",
    )
}

pub fn rec_c<F: Field>(n: &F, p: &UniParams<F>) -> Result<F> {
    let (c23, big_n) = (p.c23(), p.n);
    ratio(
        &[n.clone(), n.clone() - p.c1.addi(big_n + 1), n.clone() + c23.addi(big_n + 1), n.clone() + &p.c3],
        &[n.muli(2) + &c23, n.muli(2) + c23.addi(1)],
        "recurrence coefficient C",
    )
}

pub fn rec_sigma<F: Field>(n: &F, p: &UniParams<F>) -> Result<F> {
    Ok(rec_a(n, p)? + rec_c(n, p)?)
}

pub fn rec_coeffs<F: Field>(n: i64, p: &UniParams<F>) -> Result<RecCoeffs<F>> {
    let nn = F::from_int(n);
    let a = rec_a(&nn, p)?;
    let c = rec_c(&nn, p)?;
    Ok(RecCoeffs { sigma: a.clone() + &c, a, c })
}

pub fn diff_b<F: Field>(x: &F, p: &UniParams<F>) -> Result<F> {
    let (c12, big_n) = (p.c12(), p.n);
    ratio(
        &[x.addi(-big_n), x.clone() + p.c2.addi(1), x.clone() + p.c123().addi(big_n + 2), x.clone() + c12.addi(1)],
        &[x.muli(2) + c12.addi(1), x.muli(2) + c12.addi(2)],
        "difference coefficient B",
    )
}

pub fn diff_d<F: Field>(x: &F, p: &UniParams<F>) -> Result<F> {
    let (c12, big_n) = (p.c12(), p.n);
    ratio(
        &[x.clone(), x.clone() + &p.c1, x.clone() - p.c3.addi(big_n + 1), x.clone() + c12.addi(big_n + 1)],
        &[x.muli(2) + &c12, x.muli(2) + c12.addi(1)],
        "difference coefficient D",
    )
}

pub fn diff_s<F: Field>(x: &F, p: &UniParams<F>) -> Result<F> {
    Ok(diff_b(x, p)? + diff_d(x, p)?)
}

pub fn diff_coeffs<F: Field>(x: i64, p: &UniParams<F>) -> Result<DiffCoeffs<F>> {
    let xx = F::from_int(x);
    let b = diff_b(&xx, p)?;
    let d = diff_d(&xx, p)?;
    Ok(DiffCoeffs { s: b.clone() + &d, b, d })
}

/// `F(x; c1, c2) = (x+c2+1)(x+c12+1) / ((2x+c12+1)(2x+c12+2))`.
pub fn f_factor<F: Field>(x: &F, c1: &F, c2: &F) -> Result<F> {
    let c12 = c1.clone() + c2;
    ratio(&[x.clone() + c2.addi(1), x.clone() + c12.addi(1)], &[x.muli(2) + c12.addi(1), x.muli(2) + c12.addi(2)], "F factor")
}

/// `-n - c23 - 1`, the reflection exchanging `A` and `C` type coefficients.
fn reflect<F: Field>(n: &F, c: &F) -> F {
    -(n.clone() + c.addi(1))
}

/// Eigenvalue `lambda^sign(x)` of the contiguity recurrence.
pub fn cont_lambda<F: Field>(sign: Sign, x: &F, p: &UniParams<F>) -> F {
    let big_n = p.n;
    match sign {
        Sign::Plus => (x.clone() + p.c12().addi(big_n + 2)) * x.addi(-big_n - 1),
        Sign::Minus => (x.clone() + p.c123().addi(big_n + 1)) * (x.addi(-big_n) - &p.c3),
    }
}

pub fn cont_a<F: Field>(sign: Sign, n: &F, p: &UniParams<F>) -> Result<F> {
    let big_n = p.n;
    let f = f_factor(n, &p.c3, &p.c2)?;
    Ok(match sign {
        Sign::Plus => -(n.addi(-big_n - 1) * n.addi(-big_n) * f),
        Sign::Minus => {
            let c = p.c123();
            -((n.clone() + c.addi(big_n + 1)) * (n.clone() + c.addi(big_n + 2)) * f)
        }
    })
}

pub fn cont_c<F: Field>(sign: Sign, n: &F, p: &UniParams<F>) -> Result<F> {
    cont_a(sign, &reflect(n, &p.c23()), p)
}

pub fn cont_sigma<F: Field>(sign: Sign, n: &F, p: &UniParams<F>) -> Result<F> {
    let big_n = p.n;
    let constant = match sign {
        Sign::Plus => F::from_int(big_n + 1) * p.c3.addi(big_n + 1),
        Sign::Minus => p.c12().addi(big_n + 1) * p.c123().addi(big_n + 1),
    };
    Ok(cont_a(sign, n, p)? + cont_c(sign, n, p)? + constant)
}

pub fn contiguity_rec_coeffs<F: Field>(sign: Sign, n: i64, p: &UniParams<F>) -> Result<RecCoeffs<F>> {
    let nn = F::from_int(n);
    Ok(RecCoeffs { a: cont_a(sign, &nn, p)?, c: cont_c(sign, &nn, p)?, sigma: cont_sigma(sign, &nn, p)? })
}

/// Eigenvalue `mu^sign_n` of the contiguity difference equation.
pub fn cont_mu<F: Field>(sign: Sign, n: &F, p: &UniParams<F>) -> F {
    let big_n = p.n;
    match sign {
        Sign::Plus => (n.clone() + p.c123().addi(big_n + 2)) * (n.addi(-big_n - 1) - &p.c1),
        Sign::Minus => n.addi(-big_n) * (n.clone() + p.c23().addi(big_n + 1)),
    }
}

pub fn cont_b<F: Field>(sign: Sign, x: &F, p: &UniParams<F>) -> Result<F> {
    let big_n = p.n;
    let f = f_factor(x, &p.c1, &p.c2)?;
    Ok(match sign {
        Sign::Plus => {
            let c = p.c123();
            -((x.clone() + c.addi(big_n + 2)) * (x.clone() + c.addi(big_n + 3)) * f)
        }
        Sign::Minus => -(x.addi(-big_n) * x.addi(-big_n + 1) * f),
    })
}

pub fn cont_d<F: Field>(sign: Sign, x: &F, p: &UniParams<F>) -> Result<F> {
    cont_b(sign, &reflect(x, &p.c12()), p)
}

pub fn cont_s<F: Field>(sign: Sign, x: &F, p: &UniParams<F>) -> Result<F> {
    let big_n = p.n;
    let constant = match sign {
        Sign::Plus => p.c23().addi(big_n + 2) * p.c123().addi(big_n + 2),
        Sign::Minus => F::from_int(big_n) * p.c1.addi(big_n),
    };
    Ok(cont_b(sign, x, p)? + cont_d(sign, x, p)? + constant)
}

pub fn contiguity_diff_coeffs<F: Field>(sign: Sign, x: i64, p: &UniParams<F>) -> Result<DiffCoeffs<F>> {
    let xx = F::from_int(x);
    Ok(DiffCoeffs { b: cont_b(sign, &xx, p)?, d: cont_d(sign, &xx, p)?, s: cont_s(sign, &xx, p)? })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniRelation {
    Duality,
    Orthogonality,
    Recurrence,
    Difference,
    ContiguityRec(Sign),
    ContiguityDiff(Sign),
}

impl UniRelation {
    pub const ALL: [UniRelation; 8] = [
        UniRelation::Duality,
        UniRelation::Orthogonality,
        UniRelation::Recurrence,
        UniRelation::Difference,
        UniRelation::ContiguityRec(Sign::Plus),
        UniRelation::ContiguityRec(Sign::Minus),
        UniRelation::ContiguityDiff(Sign::Plus),
        UniRelation::ContiguityDiff(Sign::Minus),
    ];

    pub fn name(&self) -> &'static str {
        match self {
            UniRelation::Duality => "duality",
            UniRelation::Orthogonality => "orthogonality",
            UniRelation::Recurrence => "recurrence",
            UniRelation::Difference => "difference",
            UniRelation::ContiguityRec(Sign::Plus) => "contiguity-rec-plus",
            UniRelation::ContiguityRec(Sign::Minus) => "contiguity-rec-minus",
            UniRelation::ContiguityDiff(Sign::Plus) => "contiguity-diff-plus",
            UniRelation::ContiguityDiff(Sign::Minus) => "contiguity-diff-minus",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }
}

pub fn uni_param_map<F: Field>(p: &UniParams<F>) -> std::collections::BTreeMap<String, String> {
    param_map([("c1", p.c1.to_string()), ("c2", p.c2.to_string()), ("c3", p.c3.to_string()), ("N", p.n.to_string())])
}

/// Sweeps one relation over `0 <= n, x <= N`. The minus contiguity
/// recurrence lands on the `N - 1` family, whose variable range is `0..N`.
pub fn verify_uni<F: Field>(relation: UniRelation, p: &UniParams<F>) -> VerificationReport {
    let big_n = p.n;
    let x_max = match relation {
        UniRelation::ContiguityRec(Sign::Minus) => big_n - 1,
        _ => big_n,
    };
    let mut report =
        VerificationReport::new(format!("racah-{}", relation.name()), uni_param_map(p), format!("0<=n<={big_n}, 0<=x<={x_max}"));
    let k = |v: i64| F::from_int(v);
    let pv = |n: i64, x: i64, q: &UniParams<F>| racah_p(n, &k(x), q);
    let (c12, c23) = (p.c12(), p.c23());
    let (weights, values) = if relation == UniRelation::Orthogonality {
        let dual = p.dual();
        let weights: Vec<Result<F>> = (0..=big_n).map(|x| omega(x, &dual)).collect();
        let values: Vec<Vec<Result<F>>> = (0..=big_n).map(|n| (0..=big_n).map(|x| pv(n, x, p)).collect()).collect();
        (weights, values)
    } else {
        (Vec::new(), Vec::new())
    };
    for n in 0..=big_n {
        if relation == UniRelation::Orthogonality {
            for m in 0..=big_n {
                let lhs = (|| {
                    let mut s = F::zero();
                    for x in 0..=big_n as usize {
                        let (w, a, b) = (weights[x].clone()?, values[n as usize][x].clone()?, values[m as usize][x].clone()?);
                        s = s + w * a * b;
                    }
                    Ok(s)
                })();
                let rhs = if n == m { omega(n, p) } else { Ok(F::zero()) };
                report.check(|| format!("n={n}, m={m}"), lhs, rhs);
            }
            continue;
        }
        for x in 0..=x_max {
            let (nn, xx) = (k(n), k(x));
            let loc = || format!("n={n}, x={x}");
            match relation {
                UniRelation::Duality => {
                    let lhs = (|| Ok(omega(x, &p.dual())? * pv(n, x, p)?))();
                    let rhs = (|| Ok(omega(n, p)? * pv(x, n, &p.dual())?))();
                    report.check(loc, lhs, rhs);
                }
                UniRelation::Recurrence => {
                    let lhs = pv(n, x, p).map(|v| lambda(&xx, &c12) * v);
                    let rhs = (|| {
                        let mut r = -(rec_sigma(&nn, p)? * pv(n, x, p)?);
                        if n < big_n {
                            r = r + rec_c(&k(n + 1), p)? * pv(n + 1, x, p)?;
                        }
                        if n > 0 {
                            r = r + rec_a(&k(n - 1), p)? * pv(n - 1, x, p)?;
                        }
                        Ok(r)
                    })();
                    report.check(loc, lhs, rhs);
                }
                UniRelation::Difference => {
                    let lhs = pv(n, x, p).map(|v| mu(&nn, &c23) * v);
                    let rhs =
                        (|| Ok(diff_b(&xx, p)? * pv(n, x + 1, p)? - diff_s(&xx, p)? * pv(n, x, p)? + diff_d(&xx, p)? * pv(n, x - 1, p)?))();
                    report.check(loc, lhs, rhs);
                }
                UniRelation::ContiguityRec(sign) => {
                    let q = p.with_n(if sign == Sign::Plus { big_n + 1 } else { big_n - 1 });
                    let lhs = pv(n, x, p).map(|v| cont_lambda(sign, &xx, p) * v);
                    let rhs = (|| {
                        let mut r = -(cont_sigma(sign, &nn, p)? * pv(n, x, &q)?);
                        if n < q.n {
                            r = r + cont_c(sign, &k(n + 1), p)? * pv(n + 1, x, &q)?;
                        }
                        if n > 0 && n - 1 <= q.n {
                            r = r + cont_a(sign, &k(n - 1), p)? * pv(n - 1, x, &q)?;
                        }
                        Ok(r)
                    })();
                    report.check(loc, lhs, rhs);
                }
                UniRelation::ContiguityDiff(sign) => {
                    let q = p.with_n(if sign == Sign::Plus { big_n + 1 } else { big_n - 1 });
                    let lhs = pv(n, x, p).map(|v| cont_mu(sign, &nn, p) * v);
                    let rhs = (|| {
                        Ok(cont_b(sign, &xx, p)? * pv(n, x + 1, &q)? - cont_s(sign, &xx, p)? * pv(n, x, &q)?
                            + cont_d(sign, &xx, p)? * pv(n, x - 1, &q)?)
                    })();
                    report.check(loc, lhs, rhs);
                }
                UniRelation::Orthogonality => unreachable!(),
            }
        }
    }
    report
}

/// Exact degree of `p_n` as a polynomial in `lambda(x)`, recovered by
/// interpolation over `x = 0..=N`.
pub fn degree_in_lambda(n: i64, p: &UniParams<ExactRational>) -> Result<Option<usize>> {
    let c12 = p.c12();
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    for x in 0..=p.n {
        let xx = ExactRational::from_integer(x.into());
        nodes.push(lambda(&xx, &c12));
        values.push(racah_p(n, &xx, p)?);
    }
    let coeffs = crate::interp::newton_coefficients(&nodes, &values)?;
    Ok(coeffs.iter().rposition(|c| !c.is_zero()))
}
