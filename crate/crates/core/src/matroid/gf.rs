use super::set::ElementSet;
use crate::error::{Error, Result};

/// Matrix over the prime field GF(p). Column `k` is ground-set element `k`
/// of the represented matroid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GfMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl GfMatrix {
    pub fn new(p: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidMatroid(format!("field order {p} is not prime")));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatroid(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&v| v >= p) {
            return Err(Error::InvalidMatroid(format!("entry {bad} is not a residue mod {p}")));
        }
        Ok(GfMatrix { p, rows, cols, entries })
    }

    /// Builds from signed integer rows, reducing every entry mod `p`.
    pub fn from_signed_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatroid("ragged matrix rows".into()));
        }
        let entries = rows.iter().flatten().map(|&v| v.rem_euclid(p as i64) as u32).collect();
        Self::new(p, rows.len(), cols, entries)
    }

    /// `[I_k | A]` where `a_rows` are the rows of `A`.
    pub fn identity_augmented(p: u32, a_rows: &[Vec<i64>]) -> Result<Self> {
        let k = a_rows.len();
        let rows: Vec<Vec<i64>> = a_rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = vec![0i64; k];
                row[i] = 1;
                row.extend_from_slice(r);
                row
            })
            .collect();
        Self::from_signed_rows(p, &rows)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Rank of the selected columns, by Gaussian elimination over GF(p).
    pub fn column_rank(&self, cols: ElementSet) -> usize {
        let p = self.p as u64;
        let selected: Vec<usize> = cols.iter().collect();
        if selected.is_empty() || self.rows == 0 {
            return 0;
        }
        // Work on the transpose: one row per selected column.
        let mut m: Vec<Vec<u64>> = selected
            .iter()
            .map(|&c| (0..self.rows).map(|r| self.entry(r, c) as u64).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.rows {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = pow_mod(m[rank][col], p - 2, p);
            for v in m[rank].iter_mut() {
                *v = *v * inv % p;
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (v, pv) in row.iter_mut().zip(&pivot_row) {
                        *v = (*v + (p - f) * pv) % p;
                    }
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}
