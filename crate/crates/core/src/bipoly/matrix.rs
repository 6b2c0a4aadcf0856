use super::BiPoly;
use crate::error::{Error, Result};

/// Dense matrix of [`BiPoly`] entries, used for transfer matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![BiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BiPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BiPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &BiPoly) {
        self.entries[i * self.cols + j] += v;
    }

    pub fn mat_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A^k`, with `A^0 = I` regardless of invertibility.
    pub fn mat_pow(&self, k: u32) -> Result<PolyMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut result = PolyMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mat_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn trace(&self) -> Result<BiPoly> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    pub fn entry_sum(&self) -> BiPoly {
        self.entries.iter().cloned().sum()
    }
}
