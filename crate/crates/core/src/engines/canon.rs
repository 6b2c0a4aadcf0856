//! Relabeling-invariant keys for loopless multigraphs.
//!
//! Colour refinement followed by a bounded individualization search. Every
//! key is an exact encoding of a relabeled copy of the input, so equal keys
//! always mean isomorphic graphs; when the search cap is hit, isomorphic
//! graphs may receive different keys, which only costs memo hits.

use super::dc::MultiGraph;

const LEAF_CAP: usize = 64;

fn refine(g: &MultiGraph, mut colors: Vec<u32>) -> Vec<u32> {
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..g.n)
            .map(|v| {
                let mut nb: Vec<(u32, u32)> = (0..g.n)
                    .filter(|&w| w != v && g.get(v, w) > 0)
                    .map(|w| (colors[w], g.get(v, w)))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<(u32, u32)>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        colors = sigs.iter().map(|s| sorted.binary_search(&s).unwrap() as u32).collect();
        let next = count_classes(&colors);
        if next == classes {
            return colors;
        }
        classes = next;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn encode(g: &MultiGraph, colors: &[u32]) -> Vec<u32> {
    // colors form a permutation here: vertex v gets label colors[v].
    let mut inv = vec![0usize; g.n];
    for (v, &c) in colors.iter().enumerate() {
        inv[c as usize] = v;
    }
    let mut key = Vec::with_capacity(1 + g.n * g.n / 2);
    key.push(g.n as u32);
    for i in 0..g.n {
        for j in i..g.n {
            key.push(g.get(inv[i], inv[j]));
        }
    }
    key
}

fn search(g: &MultiGraph, colors: Vec<u32>, leaves: &mut usize) -> Vec<u32> {
    let colors = refine(g, colors);
    let mut counts = vec![0usize; g.n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(cell) = (0..g.n).find(|&c| counts[c] > 1) else {
        *leaves += 1;
        return encode(g, &colors);
    };
    let members: Vec<usize> = (0..g.n).filter(|&v| colors[v] as usize == cell).collect();
    let mut best: Option<Vec<u32>> = None;
    for (i, &v) in members.iter().enumerate() {
        if i > 0 && *leaves >= LEAF_CAP {
            break;
        }
        // Individualize v: it sorts just before the rest of its cell.
        let next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| if w == v { 2 * c } else { 2 * c + 1 })
            .collect();
        let key = search(g, next, leaves);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

pub(crate) fn canonical_key(g: &MultiGraph) -> Vec<u32> {
    let mut leaves = 0;
    search(g, vec![0; g.n], &mut leaves)
}
