use super::set::ElementSet;
use crate::error::{Error, Result};

/// Finite multigraph. An edge `(u, u)` is a loop; repeated pairs are parallel
/// edges. Edge `k` is ground-set element `k` of the graphic matroid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns `false` when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidMatroid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Rank of an edge subset: number of vertices minus number of components
    /// of the spanning subgraph it induces.
    pub fn rank_of(&self, edges: ElementSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        edges
            .iter()
            .filter(|&e| {
                let (u, v) = self.edges[e];
                uf.union(u, v)
            })
            .count()
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        let merged = self.edges.iter().filter(|&&(u, v)| uf.union(u, v)).count();
        self.vertex_count - merged
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph { vertex_count: n, edges }
    }

    /// `K_{n,m}` with parts `0..n` and `n..n+m`.
    pub fn complete_bipartite(n: usize, m: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..m {
                edges.push((u, n + v));
            }
        }
        Graph {
            vertex_count: n + m,
            edges,
        }
    }

    /// The cycle `C_n`; for `n = 2` two parallel edges, for `n = 1` a loop.
    pub fn cycle(n: usize) -> Graph {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph { vertex_count: n, edges }
    }

    /// Two vertices joined by `n` parallel edges.
    pub fn multilink(n: usize) -> Graph {
        Graph {
            vertex_count: 2,
            edges: vec![(0, 1); n],
        }
    }

    pub fn path(n_edges: usize) -> Graph {
        Graph {
            vertex_count: n_edges + 1,
            edges: (0..n_edges).map(|i| (i, i + 1)).collect(),
        }
    }

    /// The wheel `W_n`: hub `0`, rim vertices `1..=n`. Rim edges come first
    /// (elements `0..n`), spokes after (elements `n..2n`).
    pub fn wheel(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (1 + i, 1 + (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (0, 1 + i)));
        Graph {
            vertex_count: n + 1,
            edges,
        }
    }

    /// The fan obtained from `W_n` by deleting one rim edge.
    pub fn fan(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (1 + i, 2 + i)).collect();
        edges.extend((0..n).map(|i| (0, 1 + i)));
        Graph {
            vertex_count: n + 1,
            edges,
        }
    }

    /// The grid `L_{m,n}`: `m` rows, `n` columns, vertex `(i, j)` is `i + m*j`.
    pub fn grid(m: usize, n: usize) -> Graph {
        let mut edges = Vec::new();
        for j in 0..n {
            for i in 0..m {
                let v = i + m * j;
                if i + 1 < m {
                    edges.push((v, v + 1));
                }
                if j + 1 < n {
                    edges.push((v, v + m));
                }
            }
        }
        Graph {
            vertex_count: m * n,
            edges,
        }
    }

    /// Merges the endpoints of edge `e` and removes it; other edges between
    /// the same endpoints become loops.
    pub fn contract_edge(&self, e: usize) -> Graph {
        let (a, b) = self.edges[e];
        if a == b {
            return self.delete_edge(e);
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != e)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .collect();
        Graph {
            vertex_count: self.vertex_count - 1,
            edges,
        }
    }

    pub fn delete_edge(&self, e: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Replaces every edge by a path of `k` edges; edge `e` becomes elements
    /// `k*e .. k*e + k`.
    pub fn subdivide(&self, k: usize) -> Graph {
        let mut vertex_count = self.vertex_count;
        let mut edges = Vec::with_capacity(self.edges.len() * k);
        for &(u, v) in &self.edges {
            let mut prev = u;
            for _ in 0..k.saturating_sub(1) {
                edges.push((prev, vertex_count));
                prev = vertex_count;
                vertex_count += 1;
            }
            edges.push((prev, v));
        }
        Graph { vertex_count, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.rank_of(ElementSet::full(6)), 3);
        let tri: ElementSet = [0, 1, 3].into_iter().collect(); // 01, 02, 12
        assert_eq!(k4.rank_of(tri), 2);
        let loops = Graph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(loops.rank_of(ElementSet::full(2)), 0);
    }

    #[test]
    fn constructions() {
        assert_eq!(Graph::wheel(4).edge_count(), 8);
        assert_eq!(Graph::grid(2, 3).edge_count(), 7);
        assert_eq!(Graph::grid(3, 3).edge_count(), 12);
        assert_eq!(Graph::complete_bipartite(2, 3).edge_count(), 6);
        let c = Graph::cycle(5).contract_edge(0);
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.edge_count(), 4);
        assert_eq!(c.rank_of(ElementSet::full(4)), 3);
        let s = Graph::multilink(3).subdivide(2);
        assert_eq!((s.vertex_count(), s.edge_count()), (5, 6));
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }
}
