use std::collections::BTreeSet;

use super::{ElementSet, Matroid, Variant};
use crate::error::{Error, Result};

/// A lattice-path step: East `(1, 0)` or North `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn parse_path(s: &str) -> Result<Vec<Step>> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'E' | 'e' => Ok(Step::E),
                'N' | 'n' => Ok(Step::N),
                other => Err(Error::Parse(format!("unknown lattice step {other:?}"))),
            })
            .collect()
    }

    pub fn path_to_string(path: &[Step]) -> String {
        path.iter().map(|s| if *s == Step::E { 'E' } else { 'N' }).collect()
    }
}

fn north_prefix(path: &[Step]) -> Vec<usize> {
    let mut out = vec![0];
    for s in path {
        out.push(out.last().unwrap() + usize::from(*s == Step::N));
    }
    out
}

impl Matroid {
    /// Lattice-path matroid `M[P, Q]`: bases are the sets of North-step
    /// positions of the paths staying between `lower` and `upper`.
    pub fn lattice_path(lower: Vec<Step>, upper: Vec<Step>) -> Result<Matroid> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidMatroid("bounding paths have different lengths".into()));
        }
        let n = lower.len();
        Self::check_size(n)?;
        let lo = north_prefix(&lower);
        let hi = north_prefix(&upper);
        if lo[n] != hi[n] {
            return Err(Error::InvalidMatroid("bounding paths end at different points".into()));
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InvalidMatroid("lower path rises above the upper path".into()));
        }
        let r = lo[n];
        let mut bases = BTreeSet::new();
        let mut stack = vec![(0usize, 0usize, ElementSet::EMPTY)];
        while let Some((pos, norths, set)) = stack.pop() {
            if pos == n {
                bases.insert(set);
                continue;
            }
            if norths < hi[pos + 1] {
                stack.push((pos + 1, norths + 1, set.with(pos)));
            }
            if norths >= lo[pos + 1] {
                stack.push((pos + 1, norths, set));
            }
        }
        Ok(Matroid::from_parts(n, r, Variant::LatticePath { lower, upper, bases }))
    }

    /// The Catalan matroid `M_n`: paths from `(0,0)` to `(n,n)` staying in
    /// `0 <= y <= x`.
    pub fn catalan(n: usize) -> Result<Matroid> {
        let lower = [vec![Step::E; n], vec![Step::N; n]].concat();
        let upper = (0..n).flat_map(|_| [Step::E, Step::N]).collect();
        Matroid::lattice_path(lower, upper)
    }

    pub fn lattice_bounds(&self) -> Option<(&[Step], &[Step])> {
        match &*self.variant {
            Variant::LatticePath { lower, upper, .. } => Some((lower, upper)),
            _ => None,
        }
    }
}
