//! Griffiths polynomials with one parameter at a negative integer `c_l = -k`,
//! realized as limits of a formal carrier `c_l = -k + eps`.

use crate::bivariate::{degree_pairs, grid_points, in_triangle, BivariateParams, DegreePair, FamilyTable, GridPoint, SHIFTS};
use crate::error::{Error, Result};
use crate::exactnum::{rat, ExactRational, Field, RatFunc};
use crate::griffiths::{gamma_entry, griffiths_table, psi_entry, GriffithsForm};
use crate::racah_uni::{lambda, mu, omega};
use crate::report::VerificationReport;
use crate::tratnik::{diff_stencil_entry, lambda_weight, rec_stencil_entry};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// `c_which = -k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Specialization {
    pub which: usize,
    pub k: i64,
}

impl Specialization {
    pub fn new(which: usize, k: i64, n: i64) -> Result<Self> {
        if which > 4 {
            return Err(Error::ConstraintViolation(format!("parameter index {which} not in 0..=4")));
        }
        if k < 1 || k > n {
            return Err(Error::ConstraintViolation(format!("k = {k} not in 1..={n}")));
        }
        Ok(Specialization { which, k })
    }

    /// The parameter that absorbs the constraint: `c0`, or `c4` when `c0` is specialized.
    pub fn compensating(&self) -> usize {
        if self.which == 0 {
            4
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The first alternative listed for each parameter.
    Upper,
    Lower,
}

impl Branch {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "upper" | "A" | "a" => Some(Branch::Upper),
            "lower" | "B" | "b" => Some(Branch::Lower),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Branch::Upper => "upper",
            Branch::Lower => "lower",
        }
    }
}

/// One of the two admissible restrictions of `(i, j)` and `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RestrictedDomain {
    pub spec: Specialization,
    pub branch: Branch,
    pub n: i64,
}

impl RestrictedDomain {
    pub fn contains_degree(&self, d: DegreePair) -> bool {
        let (k, n) = (self.spec.k, self.n);
        let low = match self.spec.which {
            0 => d.j < k,
            1 => d.i + d.j > n - k,
            2 | 3 => d.i < k,
            _ => d.j < k,
        };
        in_triangle(d.i, d.j, n) && (low == (self.branch == Branch::Upper))
    }

    pub fn contains_point(&self, g: GridPoint) -> bool {
        let (k, n) = (self.spec.k, self.n);
        let low = match self.spec.which {
            0 | 3 => g.y < k,
            1 => g.x + g.y > n - k,
            _ => g.x < k,
        };
        in_triangle(g.x, g.y, n) && (low == (self.branch == Branch::Upper))
    }

    /// True at the positions where the branch imposes `G_{i,j}(x,y) = 0`:
    /// one index on the boundary just outside its domain, the other inside.
    pub fn is_boundary_zero(&self, d: DegreePair, g: GridPoint) -> bool {
        let (k, n) = (self.spec.k, self.n);
        if !in_triangle(d.i, d.j, n) || !in_triangle(g.x, g.y, n) {
            return false;
        }
        match (self.spec.which, self.branch) {
            (0, Branch::Upper) => d.j == k && self.contains_point(g),
            (0, Branch::Lower) => g.y == k - 1 && self.contains_degree(d),
            (1, Branch::Upper) => d.i + d.j == n - k && self.contains_point(g),
            (1, Branch::Lower) => g.x + g.y == n - k + 1 && self.contains_degree(d),
            (2, Branch::Upper) => d.i == k && self.contains_point(g),
            (2, Branch::Lower) => g.x == k - 1 && self.contains_degree(d),
            (3, Branch::Upper) => g.y == k && self.contains_degree(d),
            (3, Branch::Lower) => d.i == k - 1 && self.contains_point(g),
            (_, Branch::Upper) => g.x == k && self.contains_degree(d),
            (_, Branch::Lower) => d.j == k - 1 && self.contains_point(g),
        }
    }

    pub fn describe(&self) -> String {
        let k = self.spec.k;
        let nk = self.n - k;
        let up = self.branch == Branch::Upper;
        let (cmp, ge) = (if up { "<" } else { ">=" }, if up { ">" } else { "<=" });
        match self.spec.which {
            0 => format!("j{cmp}{k}, y{cmp}{k}"),
            1 => format!("i+j{ge}{nk}, x+y{ge}{nk}"),
            2 => format!("i{cmp}{k}, x{cmp}{k}"),
            3 => format!("i{cmp}{k}, y{cmp}{k}"),
            _ => format!("j{cmp}{k}, x{cmp}{k}"),
        }
    }
}

pub fn restricted_domains(s: Specialization, n: i64) -> (RestrictedDomain, RestrictedDomain) {
    (RestrictedDomain { spec: s, branch: Branch::Upper, n }, RestrictedDomain { spec: s, branch: Branch::Lower, n })
}

/// True where the limit polynomial vanishes identically across the branches.
pub fn vanishes(s: Specialization, n: i64, d: DegreePair, g: GridPoint) -> bool {
    let k = s.k;
    match s.which {
        0 => d.j >= k && g.y < k,
        1 => d.i + d.j <= n - k && g.x + g.y > n - k,
        2 => d.i >= k && g.x < k,
        3 => d.i < k && g.y >= k,
        _ => d.j < k && g.x >= k,
    }
}

/// Carrier parameters: `c_which = -k + eps`, the compensating parameter
/// re-derived from the constraint, the rest taken from `base`.
pub fn epsilon_params(s: Specialization, base: &BivariateParams<ExactRational>) -> Result<BivariateParams<RatFunc>> {
    let n = base.n;
    Specialization::new(s.which, s.k, n)?;
    let comp = s.compensating();
    let mut c: [RatFunc; 5] = std::array::from_fn(|m| RatFunc::constant(base.c(m).clone()));
    c[s.which] = RatFunc::linear(rat(-s.k, 1), rat(1, 1));
    let others = (0..5).filter(|&m| m != comp).fold(RatFunc::zero(), |acc, m| acc + &c[m]);
    c[comp] = RatFunc::constant(rat(-2 * n - 3, 1)) - others;
    for (m, v) in c.iter().enumerate() {
        if m == s.which {
            continue;
        }
        let v0 = v.limit_at_zero()?;
        if v0.is_integer() && v0 < ExactRational::zero() && v0 >= rat(-n, 1) {
            return Err(Error::UnsupportedSpecialization(format!("c{m} = {v0} is also a negative integer in -N..-1")));
        }
    }
    BivariateParams::from_all(c, n)
}

/// The `eps -> 0` value of a quantity computed over the carrier.
pub fn specialize_scalar(
    quantity: impl FnOnce(&BivariateParams<RatFunc>) -> Result<RatFunc>,
    s: Specialization,
    base: &BivariateParams<ExactRational>,
) -> Result<ExactRational> {
    quantity(&epsilon_params(s, base)?)?.limit_at_zero()
}

/// Carrier values of `G`, computed once per specialization and shared by both branches.
pub struct SpecializedFamily {
    pub spec: Specialization,
    pub params: BivariateParams<RatFunc>,
    pub table: FamilyTable<RatFunc>,
    pub limits: HashMap<(i64, i64, i64, i64), Result<ExactRational>>,
}

impl SpecializedFamily {
    pub fn new(s: Specialization, base: &BivariateParams<ExactRational>) -> Result<Self> {
        let params = epsilon_params(s, base)?;
        let table = griffiths_table(&params, GriffithsForm::TripleSum)?;
        let limits = table.iter().map(|(key, v)| (*key, v.limit_at_zero())).collect();
        Ok(SpecializedFamily { spec: s, params, table, limits })
    }

    pub fn n(&self) -> i64 {
        self.params.n
    }

    /// The specialized value; zero outside the triangle.
    pub fn value(&self, d: DegreePair, g: GridPoint) -> Result<ExactRational> {
        self.limits.get(&(d.i, d.j, g.x, g.y)).cloned().unwrap_or_else(|| Ok(ExactRational::zero()))
    }
}

/// Multiplier of `G_{i+e, j+f}` in the first recurrence at degree `(i, j)`.
fn rec_mult(q: &BivariateParams<RatFunc>, i: i64, j: i64, e: i64, f: i64) -> Result<RatFunc> {
    rec_stencil_entry(e, f, i + e, j + f, q)
}

fn gamma_mult(q: &BivariateParams<RatFunc>, i: i64, j: i64, e: i64, f: i64) -> Result<RatFunc> {
    gamma_entry(e, f, i + e, j + f, q)
}

/// Multiplier of `G(x+e, y+f)` in the first difference equation at `(x, y)`.
fn diff_mult(q: &BivariateParams<RatFunc>, x: i64, y: i64, e: i64, f: i64) -> Result<RatFunc> {
    diff_stencil_entry(f, e, y, x, &q.permuted([3, 0, 4, 1]))
}

fn psi_mult(q: &BivariateParams<RatFunc>, x: i64, y: i64, e: i64, f: i64) -> Result<RatFunc> {
    psi_entry(f, e, x, y, q)
}

/// A coefficient the specialization forces to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientProbe {
    /// Recurrence stencil and its correction at degree `(i, j)`, shift `(e, f)`.
    Recurrence { i: i64, j: i64, e: i64, f: i64 },
    /// Difference stencil and its correction at `(x, y)`, shift `(e, f)`.
    Difference { x: i64, y: i64, e: i64, f: i64 },
}

/// The coefficients listed as vanishing for the specialization, restricted
/// to centres and targets on the triangle.
pub fn coefficient_probes(s: Specialization, n: i64) -> Vec<CoefficientProbe> {
    let k = s.k;
    let mut out = Vec::new();
    let mut rec = |i: i64, j: i64, e: i64, f: i64| {
        if in_triangle(i, j, n) && in_triangle(i + e, j + f, n) {
            out.push(CoefficientProbe::Recurrence { i, j, e, f });
        }
    };
    for t in -1..=1 {
        for m in 0..=n {
            match s.which {
                0 => rec(m, k, t, -1),
                2 => rec(k, m, -1, t),
                3 => rec(k - 1, m, 1, t),
                4 => rec(m, k - 1, t, 1),
                _ => {}
            }
        }
    }
    if s.which == 1 {
        for (i, j) in crate::bivariate::triangle(n) {
            if i + j == n - k {
                rec(i, j, 1, 0);
                rec(i, j, 0, 1);
            }
            if i + j == n - k || i + j == n - k - 1 {
                rec(i, j, 1, 1);
            }
        }
    }
    let mut diff = Vec::new();
    let mut dpush = |x: i64, y: i64, e: i64, f: i64| {
        if in_triangle(x, y, n) && in_triangle(x + e, y + f, n) {
            diff.push(CoefficientProbe::Difference { x, y, e, f });
        }
    };
    for t in -1..=1 {
        for m in 0..=n {
            match s.which {
                0 => dpush(m, k - 1, t, 1),
                2 => dpush(k - 1, m, 1, t),
                3 => dpush(m, k, t, -1),
                4 => dpush(k, m, -1, t),
                _ => {}
            }
        }
    }
    if s.which == 1 {
        for (x, y) in crate::bivariate::triangle(n) {
            if x + y == n - k + 1 {
                dpush(x, y, -1, 0);
                dpush(x, y, 0, -1);
            }
            if x + y == n - k + 1 || x + y == n - k + 2 {
                dpush(x, y, -1, -1);
            }
        }
    }
    out.extend(diff);
    out
}

/// The four bispectral relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bispectral {
    Rec1,
    Rec2,
    Diff1,
    Diff2,
}

impl Bispectral {
    pub const ALL: [Bispectral; 4] = [Bispectral::Rec1, Bispectral::Rec2, Bispectral::Diff1, Bispectral::Diff2];

    pub fn name(&self) -> &'static str {
        match self {
            Bispectral::Rec1 => "rec1",
            Bispectral::Rec2 => "rec2",
            Bispectral::Diff1 => "diff1",
            Bispectral::Diff2 => "diff2",
        }
    }
}

/// Carrier residual of one relation with terms outside the domain dropped.
fn restricted_residual(rel: Bispectral, fam: &SpecializedFamily, dom: &RestrictedDomain, d: DegreePair, g: GridPoint) -> Result<RatFunc> {
    let q = &fam.params;
    let k = |v: i64| RatFunc::from_int(v);
    let half = RatFunc::constant(rat(1, 2));
    let (i, j, x, y) = (d.i, d.j, g.x, g.y);
    let eig = match rel {
        Bispectral::Rec1 => lambda(&k(y), &q.sum(&[3, 0])) + half * q.c(3).addi(1) * q.c(0).addi(1),
        Bispectral::Rec2 => lambda(&k(x), &q.sum(&[4, 2])) + half * q.c(2).addi(1) * q.c(4).addi(1),
        Bispectral::Diff1 => mu(&k(j), &q.sum(&[0, 4])) + half * q.c(4).addi(1) * q.c(0).addi(1),
        Bispectral::Diff2 => mu(&k(i), &q.sum(&[2, 3])) + half * q.c(2).addi(1) * q.c(3).addi(1),
    };
    let mut r = eig * fam.table.get(i, j, x, y);
    for (e, f) in SHIFTS {
        let (coeff, value) = match rel {
            Bispectral::Rec1 | Bispectral::Rec2 => {
                let t = DegreePair::new(i + e, j + f);
                if !dom.contains_degree(t) {
                    continue;
                }
                let mut c = rec_mult(q, i, j, e, f)?;
                if rel == Bispectral::Rec2 {
                    c = c - gamma_mult(q, i, j, e, f)?;
                }
                (c, fam.table.get(t.i, t.j, x, y))
            }
            Bispectral::Diff1 | Bispectral::Diff2 => {
                let t = GridPoint::new(x + e, y + f);
                if !dom.contains_point(t) {
                    continue;
                }
                let mut c = diff_mult(q, x, y, e, f)?;
                if rel == Bispectral::Diff2 {
                    c = c - psi_mult(q, x, y, e, f)?;
                }
                (c, fam.table.get(i, j, t.x, t.y))
            }
        };
        r = r - coeff * value;
    }
    Ok(r)
}

/// The four weight factors over the carrier.
fn grid_weight(q: &BivariateParams<RatFunc>, g: GridPoint) -> Result<(RatFunc, RatFunc)> {
    Ok((lambda_weight(g.y, q.c(3), q.c(0), q.n)?, omega(g.x, &q.uni(1, 2, 4, q.n - g.y))?))
}

fn degree_weight(q: &BivariateParams<RatFunc>, d: DegreePair) -> Result<(RatFunc, RatFunc)> {
    Ok((lambda_weight(d.j, q.c(4), q.c(0), q.n)?, omega(d.i, &q.uni(1, 2, 3, q.n - d.j))?))
}

/// A weight factor with its vanishing power of `(c_l + k)` removed.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedFactor {
    pub cancelled_order: i64,
    pub value: ExactRational,
}

fn reduce(f: &RatFunc) -> Result<ReducedFactor> {
    match (f.order_at_zero(), f.leading_at_zero()) {
        (Some(o), Some(v)) => Ok(ReducedFactor { cancelled_order: o, value: v }),
        _ => Err(Error::DegenerateParameter("weight factor vanishes identically".into())),
    }
}

/// The modified weights `(Lambda~ Omega~)(x, y)` and `(Lambda- Omega-)(i, j)`
/// on a domain, each factor reduced by minimal cancellation.
pub struct RestrictedWeights {
    pub grid: Vec<(GridPoint, [ReducedFactor; 2])>,
    pub degree: Vec<(DegreePair, [ReducedFactor; 2])>,
}

impl RestrictedWeights {
    pub fn compute(q: &BivariateParams<RatFunc>, dom: &RestrictedDomain) -> Result<Self> {
        let mut grid = Vec::new();
        for g in grid_points(q.n).into_iter().filter(|g| dom.contains_point(*g)) {
            let (a, b) = grid_weight(q, g)?;
            grid.push((g, [reduce(&a)?, reduce(&b)?]));
        }
        let mut degree = Vec::new();
        for d in degree_pairs(q.n).into_iter().filter(|d| dom.contains_degree(*d)) {
            let (a, b) = degree_weight(q, d)?;
            degree.push((d, [reduce(&a)?, reduce(&b)?]));
        }
        Ok(RestrictedWeights { grid, degree })
    }

    fn product(f: &[ReducedFactor; 2]) -> ExactRational {
        &f[0].value * &f[1].value
    }

    /// Distinct cancelled orders `(grid Lambda, grid Omega, degree Lambda, degree Omega)`.
    pub fn cancelled_orders(&self) -> [Vec<i64>; 4] {
        let collect = |it: Vec<i64>| {
            let mut v = it;
            v.sort();
            v.dedup();
            v
        };
        [
            collect(self.grid.iter().map(|(_, f)| f[0].cancelled_order).collect()),
            collect(self.grid.iter().map(|(_, f)| f[1].cancelled_order).collect()),
            collect(self.degree.iter().map(|(_, f)| f[0].cancelled_order).collect()),
            collect(self.degree.iter().map(|(_, f)| f[1].cancelled_order).collect()),
        ]
    }
}

/// Which part of the restricted verification to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RestrictedCheck {
    VanishingPattern,
    BoundaryZeros,
    CoefficientZeros,
    Bispectral(Bispectral),
    WeightRatio,
    Orthogonality,
}

impl RestrictedCheck {
    pub const ALL: [RestrictedCheck; 9] = [
        RestrictedCheck::VanishingPattern,
        RestrictedCheck::BoundaryZeros,
        RestrictedCheck::CoefficientZeros,
        RestrictedCheck::Bispectral(Bispectral::Rec1),
        RestrictedCheck::Bispectral(Bispectral::Rec2),
        RestrictedCheck::Bispectral(Bispectral::Diff1),
        RestrictedCheck::Bispectral(Bispectral::Diff2),
        RestrictedCheck::WeightRatio,
        RestrictedCheck::Orthogonality,
    ];

    pub fn name(&self) -> String {
        match self {
            RestrictedCheck::VanishingPattern => "vanishing-pattern".into(),
            RestrictedCheck::BoundaryZeros => "boundary-zeros".into(),
            RestrictedCheck::CoefficientZeros => "coefficient-zeros".into(),
            RestrictedCheck::Bispectral(b) => format!("restricted-{}", b.name()),
            RestrictedCheck::WeightRatio => "weight-ratio".into(),
            RestrictedCheck::Orthogonality => "restricted-orthogonality".into(),
        }
    }
}

fn to_scalar_result(r: Result<RatFunc>) -> Result<ExactRational> {
    r.and_then(|v| v.limit_at_zero())
}

/// All restricted checks for one branch, merged into a single report.
pub fn verify_restricted(s: Specialization, branch: Branch, base: &BivariateParams<ExactRational>) -> VerificationReport {
    match SpecializedFamily::new(s, base) {
        Ok(fam) => verify_restricted_with(&fam, branch, &RestrictedCheck::ALL),
        Err(e) => {
            let mut r = VerificationReport::new(
                format!("domains-c{}", s.which),
                base.param_map(),
                format!("c{}=-{}, {}", s.which, s.k, branch.name()),
            );
            r.fail("carrier setup", format!("error: {e}"), "");
            r
        }
    }
}

/// Runs the selected checks against a precomputed carrier family.
pub fn verify_restricted_with(fam: &SpecializedFamily, branch: Branch, checks: &[RestrictedCheck]) -> VerificationReport {
    let s = fam.spec;
    let n = fam.n();
    let dom = RestrictedDomain { spec: s, branch, n };
    let mut params = fam.params.param_map();
    params.insert("specialization".into(), format!("c{}=-{}+eps", s.which, s.k));
    params.insert("branch".into(), branch.name().into());
    let mut report = VerificationReport::new(format!("domains-c{}", s.which), params, dom.describe());
    let zero = ExactRational::zero();
    for check in checks {
        let name = check.name();
        let r = &mut report;
        match check {
            RestrictedCheck::VanishingPattern => {
                for d in degree_pairs(n) {
                    for g in grid_points(n) {
                        if vanishes(s, n, d, g) {
                            r.check(|| format!("{name} at (i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y), fam.value(d, g), Ok(zero.clone()));
                        }
                    }
                }
            }
            RestrictedCheck::BoundaryZeros => {
                for d in degree_pairs(n) {
                    for g in grid_points(n) {
                        if dom.is_boundary_zero(d, g) {
                            r.check(|| format!("{name} at (i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y), fam.value(d, g), Ok(zero.clone()));
                        }
                    }
                }
            }
            RestrictedCheck::CoefficientZeros => {
                for probe in coefficient_probes(s, n) {
                    let (a, b, loc) = match probe {
                        CoefficientProbe::Recurrence { i, j, e, f } => (
                            rec_mult(&fam.params, i, j, e, f),
                            gamma_mult(&fam.params, i, j, e, f),
                            format!("recurrence at (i,j)=({i},{j}), shift ({e},{f})"),
                        ),
                        CoefficientProbe::Difference { x, y, e, f } => (
                            diff_mult(&fam.params, x, y, e, f),
                            psi_mult(&fam.params, x, y, e, f),
                            format!("difference at (x,y)=({x},{y}), shift ({e},{f})"),
                        ),
                    };
                    r.check(|| format!("{loc}, stencil"), to_scalar_result(a), Ok(zero.clone()));
                    r.check(|| format!("{loc}, correction"), to_scalar_result(b), Ok(zero.clone()));
                }
            }
            RestrictedCheck::Bispectral(rel) => {
                for d in degree_pairs(n).into_iter().filter(|d| dom.contains_degree(*d)) {
                    for g in grid_points(n).into_iter().filter(|g| dom.contains_point(*g)) {
                        r.check(
                            || format!("{name} at (i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y),
                            to_scalar_result(restricted_residual(*rel, fam, &dom, d, g)),
                            Ok(zero.clone()),
                        );
                    }
                }
            }
            RestrictedCheck::WeightRatio | RestrictedCheck::Orthogonality => {
                let w = match RestrictedWeights::compute(&fam.params, &dom) {
                    Ok(w) => w,
                    Err(e) => {
                        r.fail(format!("{name} weights"), format!("error: {e}"), "");
                        continue;
                    }
                };
                if *check == RestrictedCheck::WeightRatio {
                    weight_ratio_check(fam, &w, r);
                } else {
                    let o = w.cancelled_orders();
                    r.note(format!(
                        "minimal-cancellation split, cancelled powers of (c{}+{}): grid Lambda {:?}, grid Omega {:?}, degree Lambda {:?}, degree Omega {:?}",
                        s.which, s.k, o[0], o[1], o[2], o[3]
                    ));
                    orthogonality_check(fam, &w, r);
                }
            }
        }
    }
    report
}

/// The modified cross-ratio equals the limit of the generic cross-ratio.
fn weight_ratio_check(fam: &SpecializedFamily, w: &RestrictedWeights, r: &mut VerificationReport) {
    let q = &fam.params;
    for (g, gf) in &w.grid {
        for (d, df) in &w.degree {
            let generic = (|| {
                let (a, b) = grid_weight(q, *g)?;
                let (c, e) = degree_weight(q, *d)?;
                (a * b).div_checked(&(c * e), "weight cross-ratio")?.limit_at_zero()
            })();
            let modified = Ok(RestrictedWeights::product(gf) / RestrictedWeights::product(df));
            r.check(|| format!("weight ratio at (i,j,x,y)=({},{},{},{})", d.i, d.j, g.x, g.y), modified, generic);
        }
    }
}

fn orthogonality_check(fam: &SpecializedFamily, w: &RestrictedWeights, r: &mut VerificationReport) {
    let values: Result<Vec<Vec<ExactRational>>> =
        w.degree.iter().map(|(d, _)| w.grid.iter().map(|(g, _)| fam.value(*d, *g)).collect()).collect();
    let values = match values {
        Ok(v) => v,
        Err(e) => {
            r.fail("restricted orthogonality values", format!("error: {e}"), "");
            return;
        }
    };
    let gw: Vec<ExactRational> = w.grid.iter().map(|(_, f)| RestrictedWeights::product(f)).collect();
    for (a, (d1, f1)) in w.degree.iter().enumerate() {
        for (b, (d2, _)) in w.degree.iter().enumerate() {
            let mut s = ExactRational::zero();
            for (m, wg) in gw.iter().enumerate() {
                s += wg * &values[a][m] * &values[b][m];
            }
            let rhs = if a == b { RestrictedWeights::product(f1) } else { ExactRational::zero() };
            r.check(|| format!("orthogonality (i,j)=({},{}), (m,n)=({},{})", d1.i, d1.j, d2.i, d2.j), Ok(s), Ok(rhs));
        }
    }
    if w.degree.is_empty() {
        r.note("empty degree domain");
    }
}

/// Quick consistency check of the carrier against direct evaluation: the
/// limit of a quantity with no `c_which` dependence is its generic value.
pub fn carrier_consistency(s: Specialization, base: &BivariateParams<ExactRational>) -> Result<bool> {
    let v = specialize_scalar(|q| Ok(q.c(s.which).clone() + RatFunc::one()), s, base)?;
    Ok(v == rat(1 - s.k, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn base(n: i64) -> BivariateParams<ExactRational> {
        BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), n)
    }

    #[test]
    fn domain_predicates() {
        let (a, b) = restricted_domains(Specialization::new(2, 1, 3).unwrap(), 3);
        assert!(a.contains_degree(DegreePair::new(0, 2)) && !a.contains_degree(DegreePair::new(1, 0)));
        assert!(b.contains_point(GridPoint::new(1, 0)) && !b.contains_point(GridPoint::new(0, 1)));
        let (a, b) = restricted_domains(Specialization::new(0, 2, 3).unwrap(), 3);
        assert!(a.is_boundary_zero(DegreePair::new(0, 2), GridPoint::new(0, 1)));
        assert!(b.is_boundary_zero(DegreePair::new(0, 2), GridPoint::new(0, 1)));
        let (a, b) = restricted_domains(Specialization::new(1, 1, 3).unwrap(), 3);
        assert!(a.contains_degree(DegreePair::new(3, 0)) && !a.contains_degree(DegreePair::new(1, 1)));
        assert!(b.contains_point(GridPoint::new(1, 1)));
        assert!(Specialization::new(5, 1, 3).is_err());
        assert!(Specialization::new(2, 4, 3).is_err());
    }

    #[test]
    fn specialize_examples() {
        let s = Specialization::new(2, 1, 2).unwrap();
        let b = base(2);
        assert!(carrier_consistency(s, &b).unwrap());
        let ratio = specialize_scalar(
            |q| {
                let e = q.c(2).addi(1);
                (e.clone() * e.addi(1)).div_checked(&e, "test")
            },
            s,
            &b,
        )
        .unwrap();
        assert_eq!(ratio, int(1));
        let g = specialize_scalar(
            |q| crate::griffiths::griffiths_g(DegreePair::new(1, 0), GridPoint::new(0, 0), q, GriffithsForm::TripleSum),
            s,
            &b,
        )
        .unwrap();
        assert_eq!(g, int(0));
        let pole = specialize_scalar(|q| q.c(2).addi(1).inv().ok_or(Error::PoleAtZero), s, &b);
        assert_eq!(pole, Err(Error::PoleAtZero));
    }

    #[test]
    fn rejects_second_specialization() {
        let b = BivariateParams::new(int(-1), rat(1, 3), rat(1, 5), rat(1, 7), 3);
        assert!(matches!(epsilon_params(Specialization::new(2, 1, 3).unwrap(), &b), Err(Error::UnsupportedSpecialization(_))));
    }

    #[test]
    fn c4_coefficient_zeros() {
        let fam = SpecializedFamily::new(Specialization::new(4, 2, 4).unwrap(), &base(4)).unwrap();
        let r = verify_restricted_with(&fam, Branch::Upper, &[RestrictedCheck::CoefficientZeros]);
        assert!(r.is_exact(), "{:?}", r.counterexamples);
    }

    #[test]
    fn c2_and_c3_examples() {
        let r = verify_restricted(Specialization::new(2, 1, 3).unwrap(), Branch::Lower, &base(3));
        assert!(r.is_exact(), "{:?}", r.counterexamples);
        let r = verify_restricted(Specialization::new(3, 1, 3).unwrap(), Branch::Upper, &base(3));
        assert!(r.is_exact(), "{:?}", r.counterexamples);
    }

    #[test]
    fn every_parameter_small() {
        for which in 0..5 {
            let fam = SpecializedFamily::new(Specialization::new(which, 1, 3).unwrap(), &base(3)).unwrap();
            for branch in [Branch::Upper, Branch::Lower] {
                let r = verify_restricted_with(&fam, branch, &RestrictedCheck::ALL);
                assert!(r.is_exact(), "c{which} {branch:?}: {:?}", r.counterexamples);
            }
        }
    }
}
