use std::collections::HashMap;

use super::canon::canonical_key;
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::matroid::{ElementSet, Graph, Matroid};

pub const DEFAULT_BUDGET_NODES: u64 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct DcOptions {
    /// Maximum number of recursion nodes before giving up.
    pub budget_nodes: u64,
    /// Use the multigraph recursion for graphic matroids.
    pub use_graph_structure: bool,
}

impl Default for DcOptions {
    fn default() -> Self {
        DcOptions {
            budget_nodes: DEFAULT_BUDGET_NODES,
            use_graph_structure: true,
        }
    }
}

pub fn tutte_dc(m: &Matroid) -> Result<BiPoly> {
    tutte_dc_with(m, &DcOptions::default())
}

pub fn tutte_dc_with(m: &Matroid, opts: &DcOptions) -> Result<BiPoly> {
    match m.as_graph() {
        Some(g) if opts.use_graph_structure => tutte_dc_graph(g, opts.budget_nodes),
        _ => {
            let mut dc = MatroidDc {
                m,
                nodes: 0,
                budget: opts.budget_nodes,
                memo: HashMap::new(),
            };
            dc.solve(m.ground_set(), ElementSet::EMPTY)
        }
    }
}

struct MatroidDc<'a> {
    m: &'a Matroid,
    nodes: u64,
    budget: u64,
    memo: HashMap<(ElementSet, ElementSet), BiPoly>,
}

impl MatroidDc<'_> {
    /// Tutte polynomial of `(M / c) | r`.
    fn solve(&mut self, r: ElementSet, c: ElementSet) -> Result<BiPoly> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceBudgetExceeded(self.budget));
        }
        if let Some(t) = self.memo.get(&(r, c)) {
            return Ok(t.clone());
        }
        let m = self.m;
        let rc = m.rank(c);
        let rk = |a: ElementSet| m.rank(a.union(c)) - rc;
        let r_all = rk(r);
        let mut loops = 0;
        let mut coloops = 0;
        let mut rest = r;
        for e in r.iter() {
            if rk(ElementSet::singleton(e)) == 0 {
                loops += 1;
                rest = rest.without(e);
            } else if rk(r.without(e)) < r_all {
                coloops += 1;
                rest = rest.without(e);
            }
        }
        let factor = BiPoly::monomial(1, coloops, loops);
        let result = if rest.is_empty() {
            factor
        } else {
            &factor * &self.reduce(rest, c, &rk)?
        };
        self.memo.insert((r, c), result.clone());
        Ok(result)
    }

    /// `rest` has no loops or coloops in `M / c`.
    fn reduce(&mut self, rest: ElementSet, c: ElementSet, rk: &dyn Fn(ElementSet) -> usize) -> Result<BiPoly> {
        let r_rest = rk(rest);
        let parallel = largest_class(rest, |e, f| rk(ElementSet::singleton(e).with(f)) == 1);
        if parallel.len() >= 2 && rk(rest.difference(parallel)) == r_rest {
            let del = self.solve(rest.difference(parallel), c)?;
            let con = self.solve(rest.difference(parallel), c.union(parallel))?;
            return Ok(&del + &(&BiPoly::geometric_y(parallel.len() as u32) * &con));
        }
        let series = largest_class(rest, |e, f| rk(rest.without(e).without(f)) < r_rest);
        if series.len() >= 2 && rk(series) == series.len() {
            let del = self.solve(rest.difference(series), c)?;
            let con = self.solve(rest.difference(series), c.union(series))?;
            return Ok(&(&BiPoly::geometric_x(series.len() as u32) * &del) + &con);
        }
        let pivot = if parallel.len() >= 2 {
            parallel.min().unwrap()
        } else {
            rest.iter().last().unwrap()
        };
        let del = self.solve(rest.without(pivot), c)?;
        let con = self.solve(rest.without(pivot), c.with(pivot))?;
        Ok(&del + &con)
    }
}

/// Largest class of the equivalence relation `related` on `set`.
fn largest_class(set: ElementSet, related: impl Fn(usize, usize) -> bool) -> ElementSet {
    let mut best = ElementSet::EMPTY;
    let mut seen = ElementSet::EMPTY;
    for e in set.iter() {
        if seen.contains(e) {
            continue;
        }
        let class: ElementSet = set
            .iter()
            .filter(|&f| f == e || (!seen.contains(f) && related(e, f)))
            .collect();
        seen = seen.union(class);
        if class.len() > best.len() {
            best = class;
        }
    }
    best
}

/// Multigraph as a symmetric multiplicity matrix; the diagonal counts loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MultiGraph {
    pub(crate) n: usize,
    pub(crate) mult: Vec<u32>,
}

impl MultiGraph {
    pub(crate) fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut mg = MultiGraph {
            n,
            mult: vec![0; n * n],
        };
        for &(u, v) in g.edges() {
            mg.add(u, v, 1);
        }
        mg
    }

    pub(crate) fn get(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    fn add(&mut self, u: usize, v: usize, k: u32) {
        self.mult[u * self.n + v] += k;
        if u != v {
            self.mult[v * self.n + u] += k;
        }
    }

    fn set(&mut self, u: usize, v: usize, k: u32) {
        self.mult[u * self.n + v] = k;
        self.mult[v * self.n + u] = k;
    }

    fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| v != u && self.get(u, v) > 0)
    }

    fn simple_degree(&self, u: usize) -> usize {
        self.neighbours(u).count()
    }

    #[cfg(test)]
    fn edge_count(&self) -> u32 {
        let mut total = 0;
        for u in 0..self.n {
            total += self.get(u, u);
            for v in u + 1..self.n {
                total += self.get(u, v);
            }
        }
        total
    }

    /// Subgraph induced by `vs`, relabeled in the given order.
    fn induced(&self, vs: &[usize]) -> MultiGraph {
        let n = vs.len();
        let mut out = MultiGraph {
            n,
            mult: vec![0; n * n],
        };
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate() {
                out.mult[i * n + j] = self.get(a, b);
            }
        }
        out
    }

    fn remove_vertices(&self, gone: &[usize]) -> MultiGraph {
        let keep: Vec<usize> = (0..self.n).filter(|v| !gone.contains(v)).collect();
        self.induced(&keep)
    }

    /// Identifies `v` with `u`; edges between them become loops.
    fn merge(&self, u: usize, v: usize) -> MultiGraph {
        let mut g = self.clone();
        let uv = g.get(u, v);
        let vv = g.get(v, v);
        g.set(u, v, 0);
        for w in 0..g.n {
            if w != u && w != v {
                let k = g.get(v, w);
                g.add(u, w, k);
            }
        }
        g.mult[u * g.n + u] += uv + vv;
        g.remove_vertices(&[v])
    }
}

struct GraphDc {
    nodes: u64,
    budget: u64,
    memo: HashMap<Vec<u32>, BiPoly>,
}

pub fn tutte_dc_graph(g: &Graph, budget: u64) -> Result<BiPoly> {
    let mut dc = GraphDc {
        nodes: 0,
        budget,
        memo: HashMap::new(),
    };
    dc.solve(MultiGraph::from_graph(g))
}

impl GraphDc {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceBudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn solve(&mut self, mut g: MultiGraph) -> Result<BiPoly> {
        self.tick()?;
        let mut loops = 0;
        for v in 0..g.n {
            loops += g.get(v, v);
            g.mult[v * g.n + v] = 0;
        }
        let mut result = BiPoly::monomial(1, 0, loops);
        for block in blocks(&g) {
            let b = g.induced(&block);
            let t = self.solve_block(b)?;
            result = &result * &t;
        }
        Ok(result)
    }

    /// `b` is loopless and 2-connected, or a single bundle of parallel edges.
    fn solve_block(&mut self, b: MultiGraph) -> Result<BiPoly> {
        if b.n == 2 {
            let k = b.get(0, 1);
            return Ok(&BiPoly::x() + &(&BiPoly::y() * &BiPoly::geometric_y(k - 1)));
        }
        let simple = (0..b.n).all(|u| b.neighbours(u).all(|v| b.get(u, v) == 1));
        if simple && (0..b.n).all(|u| b.simple_degree(u) == 2) {
            let k = b.n as u32;
            return Ok(&(&BiPoly::x() * &BiPoly::geometric_x(k - 1)) + &BiPoly::y());
        }
        self.tick()?;
        let key = canonical_key(&b);
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        let result = self.reduce_block(&b)?;
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    fn reduce_block(&mut self, b: &MultiGraph) -> Result<BiPoly> {
        // Parallel class: never a cocircuit in a 2-connected block with at
        // least three vertices.
        let mut best: Option<(usize, usize, u32)> = None;
        for u in 0..b.n {
            for v in u + 1..b.n {
                let k = b.get(u, v);
                if k >= 2 && best.is_none_or(|(_, _, bk)| k > bk) {
                    best = Some((u, v, k));
                }
            }
        }
        if let Some((u, v, k)) = best {
            let mut del = b.clone();
            del.set(u, v, 0);
            let con = del.merge(u, v);
            let td = self.solve(del)?;
            let tc = self.solve(con)?;
            return Ok(&td + &(&BiPoly::geometric_y(k) * &tc));
        }
        // Series class: a maximal path through degree-2 vertices.
        if let Some(w) = (0..b.n).find(|&u| b.simple_degree(u) == 2) {
            let (internal, ends, len) = series_path(b, w);
            let del = b.remove_vertices(&internal);
            let mut con = b.clone();
            for &x in &internal {
                for y in 0..con.n {
                    con.set(x, y, 0);
                }
            }
            let con = con.merge(ends.0, ends.1).remove_vertices(
                &internal
                    .iter()
                    .map(|&x| if x > ends.1 { x - 1 } else { x })
                    .collect::<Vec<_>>(),
            );
            let td = self.solve(del)?;
            let tc = self.solve(con)?;
            return Ok(&(&BiPoly::geometric_x(len) * &td) + &tc);
        }
        // Plain deletion-contraction on an edge between high-degree vertices.
        let (mut eu, mut ev, mut score) = (0, 0, 0);
        for u in 0..b.n {
            for v in b.neighbours(u) {
                let s = b.simple_degree(u) + b.simple_degree(v);
                if u < v && s > score {
                    (eu, ev, score) = (u, v, s);
                }
            }
        }
        let mut del = b.clone();
        del.set(eu, ev, 0);
        let con = del.merge(eu, ev);
        let td = self.solve(del)?;
        let tc = self.solve(con)?;
        Ok(&td + &tc)
    }
}

/// Walks from the degree-2 vertex `w` in both directions. Returns the
/// internal vertices, the two end vertices (ordered) and the number of edges.
fn series_path(b: &MultiGraph, w: usize) -> (Vec<usize>, (usize, usize), u32) {
    let mut internal = vec![w];
    let nb: Vec<usize> = b.neighbours(w).collect();
    let mut ends = [0usize; 2];
    for (side, &start) in nb.iter().enumerate() {
        let (mut prev, mut cur) = (w, start);
        while b.simple_degree(cur) == 2 && cur != w {
            internal.push(cur);
            let next = b.neighbours(cur).find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        ends[side] = cur;
    }
    let len = internal.len() as u32 + 1;
    let (a, c) = (ends[0].min(ends[1]), ends[0].max(ends[1]));
    (internal, (a, c), len)
}

/// Vertex sets of the blocks (maximal 2-connected pieces and bridges) of the
/// underlying simple graph. Isolated vertices are skipped.
fn blocks(g: &MultiGraph) -> Vec<Vec<usize>> {
    let n = g.n;
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    // Iterative DFS to stay safe on long paths.
    for root in 0..n {
        if disc[root] != usize::MAX || g.simple_degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut frames: Vec<(usize, usize, Vec<usize>)> = vec![(root, usize::MAX, g.neighbours(root).collect())];
        while let Some(frame) = frames.last_mut() {
            let (u, parent) = (frame.0, frame.1);
            if let Some(v) = frame.2.pop() {
                if disc[v] == usize::MAX {
                    stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    let nb = g.neighbours(v).collect();
                    frames.push((v, u, nb));
                } else if v != parent && disc[v] < disc[u] {
                    stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                frames.pop();
                if let Some(pf) = frames.last() {
                    let p = pf.0;
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut vs = Vec::new();
                        while let Some((a, b)) = stack.pop() {
                            vs.push(a);
                            vs.push(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        vs.sort_unstable();
                        vs.dedup();
                        out.push(vs);
                    }
                }
            }
        }
    }
    out
}
