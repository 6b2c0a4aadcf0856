use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bipoly::UniPoly;
use crate::error::{Error, Result};
use crate::matroid::Graph;

/// Largest vertex count for exhaustive colouring enumeration.
pub const COLOURING_VERTEX_LIMIT: usize = 12;

/// Bad-colouring polynomial `B(G; colors, t) = sum_j b_j t^j`, where `b_j`
/// counts colourings with exactly `j` monochromatic edges. Loops are always
/// monochromatic.
pub fn bad_colouring(g: &Graph, colors: u32) -> Result<UniPoly> {
    let v = g.vertex_count();
    if v > COLOURING_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: v,
            limit: COLOURING_VERTEX_LIMIT,
        });
    }
    if colors == 0 {
        return Err(Error::InvalidParameters("at least one colour is required".into()));
    }
    let k = colors as u64;
    let total = k
        .checked_pow(v as u32)
        .ok_or_else(|| Error::SizeBudgetExceeded("too many colourings".into()))?;
    let e = g.edge_count();
    let counts = (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; e + 1],
            |mut acc, code| {
                let mut col = [0u64; COLOURING_VERTEX_LIMIT];
                let mut c = code;
                for slot in col.iter_mut().take(v) {
                    *slot = c % k;
                    c /= k;
                }
                let bad = g.edges().iter().filter(|&&(a, b)| col[a] == col[b]).count();
                acc[bad] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; e + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(UniPoly::from_int_coeffs(counts.into_iter().map(BigInt::from)))
}
