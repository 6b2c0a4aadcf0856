use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::binom;
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};

fn xm1() -> BiPoly {
    &BiPoly::x() - &BiPoly::one()
}

fn ym1() -> BiPoly {
    &BiPoly::y() - &BiPoly::one()
}

/// `xy - x - y`, the Tutte polynomial change caused by one relaxation.
pub(crate) fn relax_delta() -> BiPoly {
    BiPoly::from_terms([(1, 1, 1), (1, 0, -1), (0, 1, -1)])
}

/// Corank-nullity expansion of the uniform matroid `U_{r,n}`.
fn uniform_by_sizes(r: usize, n: usize) -> BiPoly {
    let (r, n) = (r as i64, n as i64);
    let mut out = BiPoly::constant(binom(n, r));
    let (xm, ym) = (xm1(), ym1());
    for i in 0..r {
        out += &xm.pow((r - i) as u32).scale(binom(n, i));
    }
    for i in r + 1..=n {
        out += &ym.pow((i - r) as u32).scale(binom(n, i));
    }
    out
}

/// Basis-activity form of `U_{r,n}`.
fn uniform_by_activities(r: usize, n: usize) -> BiPoly {
    if r == n {
        return BiPoly::monomial(1, n as u32, 0);
    }
    if r == 0 {
        return BiPoly::monomial(1, 0, n as u32);
    }
    let (r, n) = (r as i64, n as i64);
    let mut out = BiPoly::zero();
    for j in 1..=n - r {
        out += &BiPoly::monomial(binom(n - j - 1, r - 1), 0, j as u32);
    }
    for i in 1..=r {
        out += &BiPoly::monomial(binom(n - i - 1, n - r - 1), i as u32, 0);
    }
    out
}

/// Tutte polynomial of `U_{r,n}`, computed by both the subset expansion and
/// the activity form, which must agree.
pub fn uniform(r: usize, n: usize) -> Result<BiPoly> {
    if r > n {
        return Err(Error::InvalidRank { rank: r, size: n });
    }
    let a = uniform_by_sizes(r, n);
    let b = uniform_by_activities(r, n);
    assert_eq!(a, b, "uniform closed forms disagree for U({r}, {n})");
    Ok(a)
}

/// The `n`-cycle: `x + x^2 + ... + x^{n-1} + y`.
pub fn cycle(n: usize) -> Result<BiPoly> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("a cycle needs at least 2 edges, got {n}")));
    }
    Ok(&(&BiPoly::geometric_x(n as u32) - &BiPoly::one()) + &BiPoly::y())
}

/// `n` parallel edges, the dual of the `n`-cycle.
pub fn multilink(n: usize) -> Result<BiPoly> {
    Ok(cycle(n)?.swap_xy())
}

/// Rank-`r` sparse paving matroid on `n` elements with `ch_count`
/// circuit-hyperplanes.
pub fn sparse_paving(r: usize, n: usize, ch_count: u64) -> Result<BiPoly> {
    if r == 0 || r >= n {
        return Err(Error::InvalidParameters(format!(
            "sparse paving needs 0 < r < n, got r = {r}, n = {n}"
        )));
    }
    // Each (r-1)-set lies in at most one circuit-hyperplane and each
    // (r+1)-set contains at most one.
    let total = binom(n as i64, r as i64);
    let cap = std::cmp::min(&total / BigInt::from(n - r + 1), &total / BigInt::from(r + 1));
    if BigInt::from(ch_count) > cap {
        return Err(Error::InvalidParameters(format!(
            "at most {cap} circuit-hyperplanes fit in a rank-{r} sparse paving matroid on {n} elements"
        )));
    }
    Ok(&uniform(r, n)? + &relax_delta().scale(ch_count))
}

/// Effect of relaxing one circuit-hyperplane.
pub fn relax_poly(t: &BiPoly) -> BiPoly {
    t - &relax_delta()
}

/// Inverse of [`relax_poly`].
pub fn unrelax_poly(t: &BiPoly) -> BiPoly {
    t + &relax_delta()
}

/// Free extension `M + e` from `T_M` and `T_M(1, y)`.
pub fn free_ext_poly(t: &BiPoly, t_at_x1: &BiPoly) -> Result<BiPoly> {
    let x = BiPoly::x();
    let coeff = &(&xm1() * &BiPoly::y()) - &x;
    let numer = &(&x * t) + &(&coeff * t_at_x1);
    numer.exact_div(&xm1())
}

/// Block-size profile of the hyperplanes of a paving matroid:
/// `block_sizes[k]` is the number of blocks with `k` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PavingSpec {
    pub r: usize,
    pub n: usize,
    pub block_sizes: BTreeMap<usize, u64>,
}

impl PavingSpec {
    pub fn new(r: usize, n: usize, block_sizes: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, b) in block_sizes {
            *map.entry(k).or_insert(0) += b;
        }
        PavingSpec { r, n, block_sizes: map }
    }

    /// Every `(r-1)`-subset lies in exactly one block.
    pub fn validate(&self) -> Result<()> {
        let (r, n) = (self.r, self.n);
        if r < 2 || r > n {
            return Err(Error::InvalidPartition(format!("rank {r} is outside 2..={n}")));
        }
        let mut covered = BigInt::zero();
        for (&k, &b) in &self.block_sizes {
            if b == 0 {
                continue;
            }
            if k < r - 1 || k > n {
                return Err(Error::InvalidPartition(format!(
                    "block size {k} is outside {}..={n}",
                    r - 1
                )));
            }
            covered += binom(k as i64, r as i64 - 1) * BigInt::from(b);
        }
        let needed = binom(n as i64, r as i64 - 1);
        if covered != needed {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {covered} of the {needed} subsets of size {}",
                r - 1
            )));
        }
        Ok(())
    }

    fn b(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        BigInt::from(*self.block_sizes.get(&(k as usize)).unwrap_or(&0))
    }
}

/// Tutte polynomial of a paving matroid from the sizes of its hyperplanes.
pub fn paving(spec: &PavingSpec) -> Result<BiPoly> {
    spec.validate()?;
    let (r, n) = (spec.r as i64, spec.n as i64);
    let mut out = BiPoly::zero();
    for i in 2..=r {
        out += &BiPoly::monomial(binom(n - i - 1, r - i), i as u32, 0);
    }
    let series = |j: i64, top: i64| -> BigInt { (0..=n).map(|k| binom(top + k, top) * spec.b(k + j + r - 1)).sum() };
    let t10 = series(0, r - 2) + binom(n - 2, r - 1) - binom(n, r - 1);
    out += &BiPoly::monomial(t10, 1, 0);
    for j in 1..=n {
        out += &BiPoly::monomial(series(j, r - 2), 1, j as u32);
        out += &BiPoly::monomial(binom(n - j - 1, r - 1) - series(j, r - 1), 0, j as u32);
    }
    Ok(out)
}

/// The Catalan matroid `M_n`, `n >= 2`: the coefficient of `x^i y^j` is
/// `(i+j-2)/(n-1) * C(2n-i-j-1, n-i-j+1)`.
pub fn catalan(n: usize) -> Result<BiPoly> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("the Catalan formula needs n >= 2, got {n}")));
    }
    let n = n as i64;
    let mut out = BiPoly::zero();
    for s in 2..=n + 1 {
        let c = BigRational::new(
            BigInt::from(s - 2) * binom(2 * n - s - 1, n - s + 1),
            BigInt::from(n - 1),
        );
        assert!(c.is_integer(), "non-integral Catalan coefficient at degree {s}");
        let c = c.to_integer();
        for i in 1..s {
            out += &BiPoly::monomial(c.clone(), i as u32, (s - i) as u32);
        }
    }
    Ok(out)
}

/// Steiner systems `S(t, t+1, v)` with known existence, as `(t, k, v)`.
pub const STEINER_SYSTEMS: [(usize, usize, usize); 8] = [
    (2, 3, 7),
    (2, 3, 9),
    (2, 3, 13),
    (2, 3, 15),
    (3, 4, 8),
    (3, 4, 10),
    (4, 5, 11),
    (5, 6, 12),
];

/// A Steiner system `S(k-1, k, v)` is sparse paving of rank `k` whose blocks
/// are its circuit-hyperplanes.
pub fn steiner_sparse(t: usize, k: usize, v: usize) -> Result<BiPoly> {
    if !STEINER_SYSTEMS.contains(&(t, k, v)) {
        return Err(Error::UnknownSystem(format!("S({t},{k},{v})")));
    }
    let blocks = binom(v as i64, t as i64) / binom(k as i64, t as i64);
    let blocks: u64 = blocks.try_into().expect("block counts are small");
    sparse_paving(k, v, blocks)
}
