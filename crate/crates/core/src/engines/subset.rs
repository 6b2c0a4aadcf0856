use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bipoly::{powers, BiPoly};
use crate::error::Result;
use crate::matroid::{ElementSet, Matroid, ENUMERATION_LIMIT};
use crate::Error;

const CHUNK: u64 = 1 << 12;

/// Number of subsets `A` with corank `z(A)` and nullity `n(A)`, indexed
/// `[z][n]`.
pub fn corank_nullity_counts(m: &Matroid) -> Result<Vec<Vec<u64>>> {
    let n = m.ground_size();
    if n > ENUMERATION_LIMIT {
        return Err(Error::GroundSetTooLarge {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let r = m.full_rank();
    let empty = || vec![vec![0u64; n - r + 1]; r + 1];
    let total = 1u64 << n;
    let chunks = total.div_ceil(CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .fold(empty, |mut acc, c| {
            let end = ((c + 1) * CHUNK).min(total);
            for bits in c * CHUNK..end {
                let a = ElementSet::from_bits(bits);
                let ra = m.rank(a);
                acc[r - ra][a.len() - ra] += 1;
            }
            acc
        })
        .reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        });
    Ok(counts)
}

/// Tutte polynomial by the rank-nullity expansion over all subsets.
pub fn tutte_subset(m: &Matroid) -> Result<BiPoly> {
    let counts = corank_nullity_counts(m)?;
    let r = m.full_rank() as u32;
    let nul = (m.ground_size() - m.full_rank()) as u32;
    let xs = powers(&(&BiPoly::x() - &BiPoly::one()), r);
    let ys = powers(&(&BiPoly::y() - &BiPoly::one()), nul);
    let mut out = BiPoly::zero();
    for (z, row) in counts.iter().enumerate() {
        for (k, &c) in row.iter().enumerate() {
            if c != 0 {
                out += &(&xs[z] * &ys[k]).scale(BigInt::from(c));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{GfMatrix, Graph};

    #[test]
    fn u25() {
        let t = tutte_subset(&Matroid::uniform(2, 5).unwrap()).unwrap();
        assert_eq!(t, "x^2 + 3*x + 3*y + 2*y^2 + y^3".parse().unwrap());
    }

    #[test]
    fn empty_is_one() {
        assert!(tutte_subset(&Matroid::empty()).unwrap().is_one());
    }

    #[test]
    fn fano() {
        let f7 = Matroid::linear(
            GfMatrix::identity_augmented(2, &[vec![1, 1, 0, 1], vec![1, 0, 1, 1], vec![0, 1, 1, 1]]).unwrap(),
        )
        .unwrap();
        let expected: BiPoly = "x^3 + 4*x^2 + 3*x + 7*x*y + 3*y + 6*y^2 + 3*y^3 + y^4".parse().unwrap();
        assert_eq!(tutte_subset(&f7).unwrap(), expected);
    }

    #[test]
    fn dual_c4() {
        let m = Matroid::graphic(Graph::cycle(4)).unwrap().dual();
        assert_eq!(tutte_subset(&m).unwrap(), "x + y + y^2 + y^3".parse().unwrap());
    }
}
