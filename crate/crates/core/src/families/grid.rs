use crate::bipoly::BiPoly;
use crate::error::{Error, Result};

/// `(T(L_{2,n}), T(Q_{2,n}))`, where `Q_{2,n}` is `L_{2,n}` with its first
/// rung contracted.
fn ladder_pair(n: usize) -> (BiPoly, BiPoly) {
    let a = BiPoly::from_terms([(2, 0, 1), (1, 0, 1), (0, 0, 1)]);
    let b = BiPoly::from_terms([(1, 0, 1), (0, 0, 1)]);
    let y = BiPoly::y();
    let mut l = BiPoly::x();
    let mut q = BiPoly::one();
    for _ in 1..n {
        let yq = &y * &q;
        let next_l = &(&a * &l) + &yq;
        let next_q = &(&b * &l) + &yq;
        l = next_l;
        q = next_q;
    }
    (l, q)
}

/// Tutte polynomial of the `2 x n` grid (the ladder with `n` rungs).
pub fn grid2(n: usize) -> Result<BiPoly> {
    if n == 0 {
        return Err(Error::InvalidSize("a ladder needs at least one rung".into()));
    }
    Ok(ladder_pair(n).0)
}
