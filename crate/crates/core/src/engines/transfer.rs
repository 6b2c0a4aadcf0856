use std::collections::BTreeMap;

use crate::bipoly::{BiPoly, PolyMatrix, UniPoly};
use crate::error::{Error, Result};

/// A partition of the frontier vertices, as block labels in order of first
/// appearance.
type State = Vec<u8>;

fn normalize(labels: &[u8]) -> State {
    let mut map = BTreeMap::new();
    labels
        .iter()
        .map(|l| {
            let next = map.len() as u8;
            *map.entry(*l).or_insert(next)
        })
        .collect()
}

fn block_count(s: &[u8]) -> u32 {
    s.iter().copied().max().map_or(0, |m| m as u32 + 1)
}

/// Weighted states of a growing spanning-subgraph expansion. Weights live in
/// `u = x - 1` (first slot) and `w = y - 1` (second slot).
#[derive(Clone, Debug)]
struct Frontier {
    states: BTreeMap<Vec<u8>, BiPoly>,
}

impl Frontier {
    fn single(state: Vec<u8>) -> Self {
        Frontier {
            states: BTreeMap::from([(state, BiPoly::one())]),
        }
    }

    fn push(map: &mut BTreeMap<Vec<u8>, BiPoly>, s: Vec<u8>, w: BiPoly) {
        *map.entry(s).or_default() += &w;
    }

    fn add_vertex(&mut self) {
        let old = std::mem::take(&mut self.states);
        for (mut s, w) in old {
            s.push(u8::MAX);
            let s = normalize(&s);
            Self::push(&mut self.states, s, w);
        }
    }

    /// Either skip the edge (weight 1) or take it: a merge costs nothing, a
    /// new cycle costs `w`.
    fn add_edge(&mut self, a: usize, b: usize) {
        let old = std::mem::take(&mut self.states);
        for (s, wt) in old {
            Self::push(&mut self.states, s.clone(), wt.clone());
            if s[a] == s[b] {
                Self::push(&mut self.states, s, &wt * &BiPoly::y());
            } else {
                let (from, to) = (s[b], s[a]);
                let merged: Vec<u8> = s.iter().map(|&l| if l == from { to } else { l }).collect();
                Self::push(&mut self.states, normalize(&merged), wt);
            }
        }
    }

    /// Drops frontier vertex `a`; a component that loses its last frontier
    /// vertex is closed and contributes `u`.
    fn remove_vertex(&mut self, a: usize) {
        let old = std::mem::take(&mut self.states);
        for (s, wt) in old {
            let alone = s.iter().filter(|&&l| l == s[a]).count() == 1;
            let mut rest = s.clone();
            rest.remove(a);
            let wt = if alone { &wt * &BiPoly::x() } else { wt };
            Self::push(&mut self.states, normalize(&rest), wt);
        }
    }
}

/// Transfer data for grids of width `m`: the reachable boundary partitions,
/// the initial row vector for the first column, the one-column step matrix
/// and the closing column vector, all in `u = x - 1`, `w = y - 1`.
#[derive(Clone, Debug)]
pub struct GridTransfer {
    pub states: Vec<Vec<u8>>,
    pub initial: PolyMatrix,
    pub step: PolyMatrix,
    pub closing: PolyMatrix,
}

fn column_step(m: usize, from: &[u8]) -> Frontier {
    let mut f = Frontier::single(from.to_vec());
    for _ in 0..m {
        f.add_vertex();
    }
    for i in 0..m {
        f.add_edge(i, m + i);
    }
    for i in 0..m - 1 {
        f.add_edge(m + i, m + i + 1);
    }
    for _ in 0..m {
        f.remove_vertex(0);
    }
    f
}

pub fn grid_transfer_matrix(m: usize) -> Result<GridTransfer> {
    if !(2..=4).contains(&m) {
        return Err(Error::UnsupportedWidth(m));
    }
    let mut first = Frontier::single(Vec::new());
    for _ in 0..m {
        first.add_vertex();
    }
    for i in 0..m - 1 {
        first.add_edge(i, i + 1);
    }
    // Close the state set under the column step.
    let mut index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut queue: Vec<Vec<u8>> = first.states.keys().cloned().collect();
    let mut transitions: Vec<(Vec<u8>, Frontier)> = Vec::new();
    while let Some(s) = queue.pop() {
        if index.contains_key(&s) {
            continue;
        }
        index.insert(s.clone(), 0);
        let f = column_step(m, &s);
        queue.extend(f.states.keys().filter(|t| !index.contains_key(*t)).cloned());
        transitions.push((s, f));
    }
    let states: Vec<Vec<u8>> = index.keys().cloned().collect();
    for (i, s) in states.iter().enumerate() {
        index.insert(s.clone(), i);
    }
    let c = states.len();
    let mut step = PolyMatrix::zeros(c, c);
    for (s, f) in &transitions {
        for (t, w) in &f.states {
            step.add_to(index[s], index[t], w);
        }
    }
    let mut initial = PolyMatrix::zeros(1, c);
    for (s, w) in &first.states {
        initial.add_to(0, index[s], w);
    }
    let mut closing = PolyMatrix::zeros(c, 1);
    for (i, s) in states.iter().enumerate() {
        closing.set(i, 0, BiPoly::monomial(1, block_count(s) - 1, 0));
    }
    Ok(GridTransfer {
        states,
        initial,
        step,
        closing,
    })
}

/// Tutte polynomial of the `m x n` grid graph by the column transfer matrix.
pub fn transfer_grid(m: usize, n: usize) -> Result<BiPoly> {
    let tm = grid_transfer_matrix(m)?;
    if n < 2 {
        return Err(Error::InvalidSize(format!("grid length {n} is below 2")));
    }
    let row = tm.initial.mat_mul(&tm.step.mat_pow(n as u32 - 1)?)?;
    let shifted = row.mat_mul(&tm.closing)?.get(0, 0).clone();
    let one = BiPoly::one();
    Ok(shifted.compose(&(&BiPoly::x() - &one), &(&BiPoly::y() - &one)))
}

/// The `colors x colors` matrix whose `(i, j)` entry is `t^{[j = 0] + [i = j]}`
/// (with `t` in the first slot): rim vertex colours `i -> j` with the hub
/// coloured `0`.
pub fn wheel_matrix(colors: u32) -> PolyMatrix {
    let k = colors as usize;
    let mut d = PolyMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let e = u32::from(j == 0) + u32::from(i == j);
            d.set(i, j, BiPoly::monomial(1, e, 0));
        }
    }
    d
}

/// Bad-colouring polynomial of the wheel `W_n` as `colors * trace(D^n)`.
pub fn transfer_wheel(n: u32, colors: u32) -> Result<UniPoly> {
    if colors < 2 {
        return Err(Error::InvalidParameters(
            "the wheel transfer needs at least two colours".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidSize("a wheel needs at least one spoke".into()));
    }
    let tr = wheel_matrix(colors).mat_pow(n)?.trace()?;
    UniPoly::from_bipoly_x(&tr.scale(colors))
}
