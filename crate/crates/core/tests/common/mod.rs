#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tutte::matroid::{k_subsets, ElementSet, GfMatrix, Graph, Matroid};

pub fn random_uniform(rng: &mut impl Rng) -> Matroid {
    let n = rng.gen_range(0..=9);
    let r = rng.gen_range(0..=n);
    Matroid::uniform(r, n).unwrap()
}

/// Loops and parallel edges allowed.
pub fn random_graphic(rng: &mut impl Rng, max_edges: usize) -> Matroid {
    let v = rng.gen_range(1..=6);
    let e = rng.gen_range(0..=max_edges);
    let edges = (0..e).map(|_| (rng.gen_range(0..v), rng.gen_range(0..v))).collect();
    Matroid::graphic(Graph::new(v, edges).unwrap()).unwrap()
}

/// Circuit-hyperplanes chosen greedily from a shuffled list of r-subsets.
pub fn random_sparse_paving(rng: &mut impl Rng, max_n: usize) -> Matroid {
    let n = rng.gen_range(4..=max_n);
    let r = rng.gen_range(2..=n - 2);
    let mut candidates: Vec<ElementSet> = k_subsets(n, r).collect();
    candidates.shuffle(rng);
    let want = rng.gen_range(0..=6);
    let mut chosen: Vec<ElementSet> = Vec::new();
    for c in candidates {
        if chosen.len() == want {
            break;
        }
        if chosen.iter().all(|d| c.symmetric_difference(*d).len() > 2) {
            chosen.push(c);
        }
    }
    Matroid::sparse_paving(r, n, chosen).unwrap()
}

pub fn random_linear(rng: &mut impl Rng) -> Matroid {
    let p = *[2u32, 3].choose(rng).unwrap();
    let rows = rng.gen_range(1..=4);
    let cols = rng.gen_range(1..=9);
    let entries = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
    Matroid::linear(GfMatrix::new(p, rows, cols, entries).unwrap()).unwrap()
}

pub fn random_matroid(rng: &mut impl Rng) -> Matroid {
    match rng.gen_range(0..4) {
        0 => random_uniform(rng),
        1 => random_graphic(rng, 8),
        2 => random_sparse_paving(rng, 10),
        _ => random_linear(rng),
    }
}
