//! Complete and complete bipartite graphs through their bad-colouring
//! polynomials. For each number of colours `lambda = 0..=|V|` the colourings
//! are counted exactly by a colour-class recursion, then the polynomial in
//! `lambda` is recovered by interpolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::binom;
use crate::bipoly::BiPoly;
use crate::engines::tutte_from_coboundary;
use crate::error::{Error, Result};

pub const COMPLETE_GRAPH_LIMIT: usize = 30;
pub const COMPLETE_BIPARTITE_EDGE_LIMIT: usize = 64;

/// Polynomial in `t` as a dense coefficient vector.
type TPoly = Vec<BigInt>;

fn add_shifted(acc: &mut TPoly, p: &TPoly, scale: &BigInt, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            acc[shift + i] += c * scale;
        }
    }
}

/// Recovers `sum_k a_k lambda^k` from its values at `lambda = 0..=d`, through
/// forward differences and falling factorials. Fails if the interpolant is
/// not integral.
fn interpolate_integral(values: &[BigInt]) -> Result<Vec<BigInt>> {
    let d = values.len() - 1;
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(d + 1);
    for k in 0..=d {
        leading.push(diffs[0].clone());
        for i in 0..d - k {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // d! * f(lambda) = sum_k Delta^k f(0) * d!/k! * lambda (lambda-1) ... (lambda-k+1)
    let mut fact = vec![BigInt::one(); d + 1];
    for k in 1..=d {
        fact[k] = &fact[k - 1] * BigInt::from(k);
    }
    let mut out = vec![BigInt::zero(); d + 1];
    let mut falling: Vec<BigInt> = vec![BigInt::one()];
    for (k, delta) in leading.iter().enumerate() {
        if !delta.is_zero() {
            let w = delta * (&fact[d] / &fact[k]);
            for (i, c) in falling.iter().enumerate() {
                out[i] += c * &w;
            }
        }
        // falling *= (lambda - k)
        let mut next = vec![BigInt::zero(); falling.len() + 1];
        for (i, c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * BigInt::from(k);
        }
        falling = next;
    }
    out.into_iter()
        .map(|c| {
            let (q, r) = c.div_rem(&fact[d]);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::NonExactDivision(
                    "interpolated coefficient is not integral".into(),
                ))
            }
        })
        .collect()
}

/// Assembles `B(lambda, t)` (with `lambda` in the first slot) from its values
/// `values[lambda]` at `lambda = 0..=d`.
fn assemble(values: &[TPoly]) -> Result<BiPoly> {
    let tdeg = values.iter().map(Vec::len).max().unwrap_or(0);
    let columns: Vec<Vec<BigInt>> = (0..tdeg)
        .into_par_iter()
        .map(|j| {
            let vals: Vec<BigInt> = values.iter().map(|v| v.get(j).cloned().unwrap_or_default()).collect();
            interpolate_integral(&vals)
        })
        .collect::<Result<_>>()?;
    let mut out = BiPoly::zero();
    for (j, col) in columns.into_iter().enumerate() {
        for (i, c) in col.into_iter().enumerate() {
            if !c.is_zero() {
                out.add_term((i as u32, j as u32), c);
            }
        }
    }
    Ok(out)
}

/// Divides `lambda * chi_bar` by `lambda` (the first variable).
fn drop_lambda(b: &BiPoly) -> Result<BiPoly> {
    b.exact_div(&BiPoly::x())
}

/// Bad-colouring polynomial `B_{K_n}(lambda, t)`, `lambda` in the first slot.
pub fn complete_graph_bad_colouring(n: usize) -> Result<BiPoly> {
    if n == 0 {
        return Err(Error::InvalidSize("K_0 has no vertices".into()));
    }
    if n > COMPLETE_GRAPH_LIMIT {
        return Err(Error::SizeBudgetExceeded(format!(
            "K_{n} exceeds the limit of {COMPLETE_GRAPH_LIMIT} vertices"
        )));
    }
    // layer[m] = colourings of m labelled vertices with c colours.
    let mut layer: Vec<TPoly> = vec![Vec::new(); n + 1];
    layer[0] = vec![BigInt::one()];
    let mut values = vec![vec![BigInt::zero()]];
    for _colours in 1..=n {
        let mut next: Vec<TPoly> = vec![Vec::new(); n + 1];
        for (m, slot) in next.iter_mut().enumerate() {
            for k in 0..=m {
                let prev = &layer[m - k];
                if prev.is_empty() {
                    continue;
                }
                add_shifted(slot, prev, &binom(m as i64, k as i64), k * k.saturating_sub(1) / 2);
            }
        }
        values.push(next[n].clone());
        layer = next;
    }
    assemble(&values)
}

/// Tutte polynomial of the complete graph `K_n`, `1 <= n <= 30`.
pub fn complete_graph(n: usize) -> Result<BiPoly> {
    let b = complete_graph_bad_colouring(n)?;
    tutte_from_coboundary(&drop_lambda(&b)?, n as u32 - 1)
}

/// Bad-colouring polynomial of `K_{n,m}`, `lambda` in the first slot.
pub fn complete_bipartite_bad_colouring(n: usize, m: usize) -> Result<BiPoly> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidSize("both sides of K_{n,m} need a vertex".into()));
    }
    if n * m > COMPLETE_BIPARTITE_EDGE_LIMIT {
        return Err(Error::SizeBudgetExceeded(format!(
            "K_{{{n},{m}}} exceeds the limit of {COMPLETE_BIPARTITE_EDGE_LIMIT} edges"
        )));
    }
    let idx = |a: usize, b: usize| a * (m + 1) + b;
    let mut layer: Vec<TPoly> = vec![Vec::new(); (n + 1) * (m + 1)];
    layer[0] = vec![BigInt::one()];
    let mut values = vec![vec![BigInt::zero()]];
    for _colours in 1..=n + m {
        let next: Vec<TPoly> = (0..(n + 1) * (m + 1))
            .into_par_iter()
            .map(|cell| {
                let (a, b) = (cell / (m + 1), cell % (m + 1));
                let mut slot = Vec::new();
                for i in 0..=a {
                    for j in 0..=b {
                        let prev = &layer[idx(a - i, b - j)];
                        if prev.is_empty() {
                            continue;
                        }
                        let w = binom(a as i64, i as i64) * binom(b as i64, j as i64);
                        add_shifted(&mut slot, prev, &w, i * j);
                    }
                }
                slot
            })
            .collect();
        values.push(next[idx(n, m)].clone());
        layer = next;
    }
    assemble(&values)
}

/// Tutte polynomial of `K_{n,m}`, `n * m <= 64`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<BiPoly> {
    let b = complete_bipartite_bad_colouring(n, m)?;
    tutte_from_coboundary(&drop_lambda(&b)?, (n + m - 1) as u32)
}
