use std::collections::HashSet;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::matroid::{bases, ElementSet, Matroid};

/// Largest basis count accepted by [`tutte_activities`].
pub const BASIS_LIMIT: usize = 1_000_000;

/// Tutte polynomial as `sum_B x^{i(B)} y^{e(B)}` over bases, where activity
/// is taken with respect to `order` (`order[k]` is the `k`-th smallest
/// element).
pub fn tutte_activities(m: &Matroid, order: &[usize]) -> Result<BiPoly> {
    let n = m.ground_size();
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::InvalidParameters("order must list every element once".into()));
    }
    for (k, &e) in order.iter().enumerate() {
        m.check_element(e)?;
        if pos[e] != usize::MAX {
            return Err(Error::InvalidParameters("order must list every element once".into()));
        }
        pos[e] = k;
    }
    let all = bases(m)?;
    if all.len() > BASIS_LIMIT {
        return Err(Error::SizeBudgetExceeded(format!(
            "{} bases exceed the activity limit of {BASIS_LIMIT}",
            all.len()
        )));
    }
    let set: HashSet<ElementSet> = all.iter().copied().collect();
    let ground = m.ground_set();
    let mut out = BiPoly::zero();
    for &b in &all {
        let outside = ground.difference(b);
        // e in B is internally active when no f outside B that can replace it
        // comes earlier in the order.
        let internal = b
            .iter()
            .filter(|&e| {
                outside
                    .iter()
                    .all(|f| pos[f] > pos[e] || !set.contains(&b.without(e).with(f)))
            })
            .count();
        let external = outside
            .iter()
            .filter(|&e| {
                b.iter()
                    .all(|f| pos[f] > pos[e] || !set.contains(&b.without(f).with(e)))
            })
            .count();
        out += &BiPoly::monomial(1, internal as u32, external as u32);
    }
    Ok(out)
}

/// Activities with respect to the natural order `0 < 1 < ... < n-1`.
pub fn tutte_activities_natural(m: &Matroid) -> Result<BiPoly> {
    let order: Vec<usize> = (0..m.ground_size()).collect();
    tutte_activities(m, &order)
}
