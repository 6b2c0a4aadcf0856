use rayon::prelude::*;

use super::{k_subsets, ElementSet, Matroid};
use crate::error::{Error, Result};

/// Largest ground set accepted by the exhaustive enumerations.
pub const ENUMERATION_LIMIT: usize = 24;

fn guard(m: &Matroid) -> Result<()> {
    if m.ground_size() > ENUMERATION_LIMIT {
        return Err(Error::GroundSetTooLarge {
            size: m.ground_size(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// `table[bits] = rank(bits)` for every subset, computed in parallel.
pub fn rank_table(m: &Matroid) -> Result<Vec<u8>> {
    guard(m)?;
    let size = 1usize << m.ground_size();
    let mut table = vec![0u8; size];
    table.par_chunks_mut(4096).enumerate().for_each(|(chunk, out)| {
        let start = chunk * 4096;
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = m.rank(ElementSet::from_bits((start + i) as u64)) as u8;
        }
    });
    Ok(table)
}

pub fn bases(m: &Matroid) -> Result<Vec<ElementSet>> {
    guard(m)?;
    let r = m.full_rank();
    Ok(k_subsets(m.ground_size(), r).filter(|&a| m.rank(a) == r).collect())
}

pub fn spanning_sets(m: &Matroid) -> Result<Vec<ElementSet>> {
    let table = rank_table(m)?;
    let r = m.full_rank() as u8;
    Ok(table
        .iter()
        .enumerate()
        .filter(|&(_, &k)| k == r)
        .map(|(bits, _)| ElementSet::from_bits(bits as u64))
        .collect())
}

pub fn circuits(m: &Matroid) -> Result<Vec<ElementSet>> {
    let table = rank_table(m)?;
    Ok(table
        .par_iter()
        .enumerate()
        .filter_map(|(bits, &r)| {
            let a = ElementSet::from_bits(bits as u64);
            let ok = a.len() == r as usize + 1 && a.iter().all(|e| table[a.without(e).bits() as usize] == r);
            ok.then_some(a)
        })
        .collect())
}

pub fn flats(m: &Matroid) -> Result<Vec<ElementSet>> {
    let table = rank_table(m)?;
    let full = m.ground_set();
    Ok(table
        .par_iter()
        .enumerate()
        .filter_map(|(bits, &r)| {
            let a = ElementSet::from_bits(bits as u64);
            let closed = full.difference(a).iter().all(|e| table[a.with(e).bits() as usize] > r);
            closed.then_some(a)
        })
        .collect())
}

/// Flats grouped by rank: entry `k` lists the flats of rank `k`.
pub fn flats_by_rank(m: &Matroid) -> Result<Vec<Vec<ElementSet>>> {
    let mut out = vec![Vec::new(); m.full_rank() + 1];
    for f in flats(m)? {
        out[m.rank(f)].push(f);
    }
    Ok(out)
}

pub fn hyperplanes(m: &Matroid) -> Result<Vec<ElementSet>> {
    let r = m.full_rank();
    if r == 0 {
        guard(m)?;
        return Ok(Vec::new());
    }
    Ok(flats(m)?.into_iter().filter(|&f| m.rank(f) == r - 1).collect())
}

impl Matroid {
    /// Maximal sets of pairwise parallel non-loop elements, ordered by least
    /// element.
    pub fn parallel_classes(&self) -> Vec<ElementSet> {
        let mut classes: Vec<ElementSet> = Vec::new();
        let mut seen = ElementSet::EMPTY;
        for e in 0..self.ground_size() {
            if seen.contains(e) || self.rank(ElementSet::singleton(e)) == 0 {
                continue;
            }
            let class: ElementSet = (e..self.ground_size())
                .filter(|&f| f == e || self.rank(ElementSet::singleton(e).with(f)) == 1)
                .collect();
            seen = seen.union(class);
            classes.push(class);
        }
        classes
    }

    /// Parallel classes of the dual.
    pub fn series_classes(&self) -> Vec<ElementSet> {
        self.dual().parallel_classes()
    }
}
