//! Parameters, index sets and stencil containers shared by the bivariate
//! families.

use crate::error::{Error, Result};
use crate::exactnum::{ExactRational, Field};
use crate::racah_uni::{genericity_check as uni_generic, racah_p, UniParams};
use crate::report::param_map;
use num_traits::Zero;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

/// Parameters `(c0, c1, c2, c3, c4; N)` with `c0 + ... + c4 = -2N - 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateParams<F> {
    c: [F; 5],
    pub n: i64,
}

impl<F: Field> BivariateParams<F> {
    /// Derives `c0` from the constraint.
    pub fn new(c1: F, c2: F, c3: F, c4: F, n: i64) -> Self {
        let c0 = F::from_int(-2 * n - 3) - &c1 - &c2 - &c3 - &c4;
        BivariateParams { c: [c0, c1, c2, c3, c4], n }
    }

    /// All five parameters; fails unless they satisfy the constraint.
    pub fn from_all(c: [F; 5], n: i64) -> Result<Self> {
        let total = c.iter().fold(F::zero(), |acc, v| acc + v);
        if total != F::from_int(-2 * n - 3) {
            return Err(Error::ConstraintViolation(format!("c0+c1+c2+c3+c4 = {total}, expected {}", -2 * n - 3)));
        }
        Ok(BivariateParams { c, n })
    }

    pub fn c(&self, k: usize) -> &F {
        &self.c[k]
    }

    pub fn all(&self) -> &[F; 5] {
        &self.c
    }

    /// Sum of the listed parameters, e.g. `sum(&[0, 4])` for `c04`.
    pub fn sum(&self, ks: &[usize]) -> F {
        ks.iter().fold(F::zero(), |acc, &k| acc + &self.c[k])
    }

    /// Univariate parameters `(c_a, c_b, c_c; m)`.
    pub fn uni(&self, a: usize, b: usize, c: usize, m: i64) -> UniParams<F> {
        UniParams::new(self.c[a].clone(), self.c[b].clone(), self.c[c].clone(), m)
    }

    /// Relabels `(c1, c2, c3, c4)` as `(c_o0, c_o1, c_o2, c_o3)`; the
    /// remaining index becomes the new `c0`.
    pub fn permuted(&self, order: [usize; 4]) -> Self {
        let rest = (0..5).find(|k| !order.contains(k)).expect("order must omit one index");
        BivariateParams {
            c: [
                self.c[rest].clone(),
                self.c[order[0]].clone(),
                self.c[order[1]].clone(),
                self.c[order[2]].clone(),
                self.c[order[3]].clone(),
            ],
            n: self.n,
        }
    }

    pub fn param_map(&self) -> BTreeMap<String, String> {
        param_map([
            ("c0", self.c[0].to_string()),
            ("c1", self.c[1].to_string()),
            ("c2", self.c[2].to_string()),
            ("c3", self.c[3].to_string()),
            ("c4", self.c[4].to_string()),
            ("N", self.n.to_string()),
        ])
    }
}

/// Univariate parameter orderings met by the bivariate families, their
/// duals, stencils and corrections.
const TRIPLES: [[usize; 3]; 12] =
    [[1, 2, 3], [3, 2, 1], [3, 0, 4], [4, 0, 3], [4, 2, 1], [1, 2, 4], [1, 0, 4], [4, 0, 1], [3, 0, 1], [1, 0, 3], [3, 2, 4], [4, 2, 3]];

/// True iff no denominator met in the bivariate sweeps vanishes.
pub fn genericity_check(p: &BivariateParams<ExactRational>) -> bool {
    if p.n < 0 {
        return false;
    }
    for t in TRIPLES {
        for m in 0..=p.n {
            if !uni_generic(&p.uni(t[0], t[1], t[2], m)) {
                return false;
            }
        }
    }
    (0..5).all(|k| (1..=p.n + 1).all(|m| !p.c(k).addi(m).is_zero()))
}

/// Degree indices `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreePair {
    pub i: i64,
    pub j: i64,
}

/// Variable values `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl DegreePair {
    pub fn new(i: i64, j: i64) -> Self {
        DegreePair { i, j }
    }
}

impl GridPoint {
    pub fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }
}

pub fn in_triangle(a: i64, b: i64, n: i64) -> bool {
    a >= 0 && b >= 0 && a + b <= n
}

/// All `(a, b)` with `a, b >= 0` and `a + b <= n`.
pub fn triangle(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            out.push((a, b));
        }
    }
    out
}

pub fn degree_pairs(n: i64) -> Vec<DegreePair> {
    triangle(n).into_iter().map(|(i, j)| DegreePair::new(i, j)).collect()
}

pub fn grid_points(n: i64) -> Vec<GridPoint> {
    triangle(n).into_iter().map(|(x, y)| GridPoint::new(x, y)).collect()
}

/// The nine neighbour shifts `(e, f)`.
pub const SHIFTS: [(i64, i64); 9] = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 0), (0, 1), (1, -1), (1, 0), (1, 1)];

/// Nine coefficients indexed by a shift pair in `{-1, 0, 1}^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct StencilTable<F> {
    entries: [F; 9],
}

fn slot(e: i64, f: i64) -> usize {
    assert!((-1..=1).contains(&e) && (-1..=1).contains(&f), "shift out of range");
    ((e + 1) * 3 + (f + 1)) as usize
}

impl<F: Field> StencilTable<F> {
    pub fn build(mut entry: impl FnMut(i64, i64) -> Result<F>) -> Result<Self> {
        let mut v = Vec::with_capacity(9);
        for (e, f) in SHIFTS {
            v.push(entry(e, f)?);
        }
        Ok(StencilTable { entries: v.try_into().unwrap_or_else(|_| unreachable!()) })
    }

    pub fn get(&self, e: i64, f: i64) -> &F {
        &self.entries[slot(e, f)]
    }

    /// Entrywise difference.
    pub fn minus(&self, o: &StencilTable<F>) -> StencilTable<F> {
        let mut entries = self.entries.clone();
        for (k, v) in entries.iter_mut().enumerate() {
            *v = v.clone() - &o.entries[k];
        }
        StencilTable { entries }
    }
}

type RacahKey = ([usize; 3], i64, i64, i64);

/// Memoized univariate values `p_n(x; c_a, c_b, c_c; m)` for one parameter set.
pub struct RacahCache<'a, F> {
    params: &'a BivariateParams<F>,
    map: RefCell<HashMap<RacahKey, F>>,
}

impl<'a, F: Field> RacahCache<'a, F> {
    pub fn new(params: &'a BivariateParams<F>) -> Self {
        RacahCache { params, map: RefCell::new(HashMap::new()) }
    }

    pub fn params(&self) -> &BivariateParams<F> {
        self.params
    }

    pub fn p(&self, t: [usize; 3], n: i64, x: i64, m: i64) -> Result<F> {
        if m < 0 || n < 0 || n > m {
            return Ok(F::zero());
        }
        let key = (t, n, x, m);
        if let Some(v) = self.map.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = racah_p(n, &F::from_int(x), &self.params.uni(t[0], t[1], t[2], m))?;
        self.map.borrow_mut().insert(key, v.clone());
        Ok(v)
    }
}

/// Values of a bivariate family on all `(i, j) x (x, y)` in the triangle.
#[derive(Debug, Clone)]
pub struct FamilyTable<F> {
    pub n: i64,
    values: HashMap<(i64, i64, i64, i64), F>,
}

impl<F: Field> FamilyTable<F> {
    pub fn build(n: i64, mut f: impl FnMut(DegreePair, GridPoint) -> Result<F>) -> Result<Self> {
        let mut values = HashMap::new();
        for d in degree_pairs(n) {
            for g in grid_points(n) {
                values.insert((d.i, d.j, g.x, g.y), f(d, g)?);
            }
        }
        Ok(FamilyTable { n, values })
    }

    /// Zero outside the triangle, following the boundary conventions.
    pub fn get(&self, i: i64, j: i64, x: i64, y: i64) -> F {
        self.values.get(&(i, j, x, y)).cloned().unwrap_or_else(F::zero)
    }

    pub fn contains(&self, i: i64, j: i64, x: i64, y: i64) -> bool {
        self.values.contains_key(&(i, j, x, y))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64, i64, i64), &F)> {
        self.values.iter()
    }

    pub fn map<G: Field>(&self, mut f: impl FnMut(&F) -> Result<G>) -> Result<FamilyTable<G>> {
        let mut values = HashMap::new();
        for (k, v) in &self.values {
            values.insert(*k, f(v)?);
        }
        Ok(FamilyTable { n: self.n, values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn constraint_by_construction() {
        let p = BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), 3);
        assert_eq!(p.sum(&[0, 1, 2, 3, 4]), int(-9));
        let q = p.permuted([3, 0, 4, 1]);
        assert_eq!(q.c(0), p.c(2));
        assert_eq!(q.c(1), p.c(3));
        assert!(BivariateParams::from_all(q.all().clone(), 3).is_ok());
        assert!(BivariateParams::from_all([int(0), int(0), int(0), int(0), int(0)], 3).is_err());
    }

    #[test]
    fn genericity() {
        assert!(genericity_check(&BivariateParams::new(int(1), int(1), int(1), int(1), 3)));
        assert!(genericity_check(&BivariateParams::new(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), 4)));
        assert!(!genericity_check(&BivariateParams::new(int(1), int(-1), int(1), int(1), 3)));
    }

    #[test]
    fn triangle_sizes() {
        assert_eq!(triangle(2).len(), 6);
        assert_eq!(triangle(0), vec![(0, 0)]);
    }

    #[test]
    fn stencil_indexing() {
        let t = StencilTable::build(|e, f| Ok(int(10 * e + f))).unwrap();
        assert_eq!(*t.get(1, -1), int(9));
        assert_eq!(*t.get(-1, 0), int(-10));
    }
}
