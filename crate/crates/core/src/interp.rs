//! Exact interpolation used to certify polynomial degrees.

use crate::error::{Error, Result};
use crate::exactnum::ExactRational;
use num_traits::Zero;

/// Newton divided differences of `values` over distinct `nodes`. The index
/// of the last nonzero entry is the exact degree of the interpolant.
pub fn newton_coefficients(nodes: &[ExactRational], values: &[ExactRational]) -> Result<Vec<ExactRational>> {
    let mut table = values.to_vec();
    let n = nodes.len();
    for level in 1..n {
        for k in (level..n).rev() {
            let den = &nodes[k] - &nodes[k - level];
            if den.is_zero() {
                return Err(Error::VanishingDenominator("repeated interpolation node"));
            }
            table[k] = (&table[k] - &table[k - 1]) / den;
        }
    }
    Ok(table)
}

/// Monomials `u^a v^b` with `a + b <= deg`, ordered by total degree.
pub fn monomials(deg: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=deg {
        for a in (0..=total).rev() {
            out.push((a, total - a));
        }
    }
    out
}

fn power(base: &ExactRational, e: usize) -> ExactRational {
    let mut out = ExactRational::from_integer(1.into());
    for _ in 0..e {
        out *= base;
    }
    out
}

/// Solves for a bivariate polynomial of total degree `<= deg` through every
/// sample `((u, v), value)`. Returns the coefficients (ordered as in
/// [`monomials`]) when an exact fit exists and is unique, `None` otherwise.
pub fn fit_total_degree(samples: &[((ExactRational, ExactRational), ExactRational)], deg: usize) -> Option<Vec<ExactRational>> {
    let basis = monomials(deg);
    let cols = basis.len();
    let mut rows: Vec<Vec<ExactRational>> = samples
        .iter()
        .map(|((u, v), val)| {
            let mut row: Vec<ExactRational> = basis.iter().map(|&(a, b)| power(u, a) * power(v, b)).collect();
            row.push(val.clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].recip();
        for v in &mut rows[pivot_row][col..] {
            *v = &*v * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() < cols {
        return None;
    }
    if rows[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut coeffs = vec![ExactRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        coeffs[c] = rows[r][cols].clone();
    }
    Some(coeffs)
}

/// Smallest total degree admitting an exact fit.
pub fn minimal_total_degree(samples: &[((ExactRational, ExactRational), ExactRational)], max_deg: usize) -> Option<usize> {
    (0..=max_deg).find(|&d| fit_total_degree(samples, d).is_some())
}
