use super::{ElementSet, Graph, Matroid, Variant, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// A matroid together with a distinguished element that is neither a loop
/// nor a coloop.
#[derive(Clone, Debug)]
pub struct PointedMatroid {
    matroid: Matroid,
    point: usize,
}

impl PointedMatroid {
    pub fn new(matroid: Matroid, point: usize) -> Result<Self> {
        if matroid.is_loop(point)? || matroid.is_coloop(point)? {
            return Err(Error::PreconditionViolated(format!(
                "base point {point} is a loop or a coloop"
            )));
        }
        Ok(PointedMatroid { matroid, point })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn point(&self) -> usize {
        self.point
    }

    /// Elements other than the point, in increasing order.
    pub fn others(&self) -> Vec<usize> {
        (0..self.matroid.ground_size()).filter(|&e| e != self.point).collect()
    }
}

#[derive(Debug)]
pub struct TwoSumData {
    left: PointedMatroid,
    right: PointedMatroid,
    left_keep: Vec<usize>,
    right_keep: Vec<usize>,
}

impl TwoSumData {
    pub(super) fn rank(&self, a: ElementSet) -> usize {
        let k = self.left_keep.len();
        let bits = a.bits();
        let a1 = ElementSet::from_bits(bits & ElementSet::full(k).bits()).map_through(&self.left_keep);
        let a2 = ElementSet::from_bits(if k >= 64 { 0 } else { bits >> k }).map_through(&self.right_keep);
        let (m1, p1) = (&self.left.matroid, self.left.point);
        let (m2, p2) = (&self.right.matroid, self.right.point);
        let separate = m1.rank(a1) + m2.rank(a2);
        let joined = m1.rank(a1.with(p1)) + m2.rank(a2.with(p2)) - 1;
        separate.min(joined)
    }
}

/// Generalized parallel connection along a shared triangle, with the
/// triangle deleted afterwards. Internally the two ground sets are glued
/// into one index space: `m1` keeps its own indices, the non-triangle
/// elements of `m2` follow.
#[derive(Debug)]
pub struct DeltaSumData {
    m1: Matroid,
    m2: Matroid,
    triangle1: ElementSet,
    /// `m2` element to glued index.
    glue2: Vec<usize>,
    /// Element of the sum to glued index.
    outer: Vec<usize>,
}

impl DeltaSumData {
    fn part2(&self, f: ElementSet) -> ElementSet {
        self.glue2
            .iter()
            .enumerate()
            .filter(|&(_, &g)| f.contains(g))
            .map(|(j, _)| j)
            .collect()
    }

    fn part1(&self, f: ElementSet) -> ElementSet {
        f.intersection(self.m1.ground_set())
    }

    pub(super) fn rank(&self, a: ElementSet) -> usize {
        let mut f = a.map_through(&self.outer);
        loop {
            let c1 = self.m1.closure(self.part1(f));
            let c2 = self.m2.closure(self.part2(f)).map_through(&self.glue2);
            let next = f.union(c1).union(c2);
            if next == f {
                break;
            }
            f = next;
        }
        self.m1.rank(self.part1(f)) + self.m2.rank(self.part2(f)) - self.m1.rank(f.intersection(self.triangle1))
    }
}

#[derive(Debug)]
pub struct TensorData {
    base: Matroid,
    pointed: PointedMatroid,
    others: Vec<usize>,
}

impl TensorData {
    pub(super) fn rank(&self, a: ElementSet) -> usize {
        let s = self.others.len();
        let block = ElementSet::full(s).bits();
        let n = self.pointed.matroid();
        let d = self.pointed.point();
        let mut spanned = ElementSet::EMPTY;
        let mut total = 0;
        for e in 0..self.base.ground_size() {
            let part = ElementSet::from_bits((a.bits() >> (e * s)) & block).map_through(&self.others);
            let r = n.rank(part);
            total += r;
            if n.rank(part.with(d)) == r {
                spanned = spanned.with(e);
            }
        }
        total + self.base.rank(spanned) - spanned.len()
    }
}

fn check_total(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            size: n,
            limit: MAX_ELEMENTS,
        });
    }
    Ok(())
}

impl Matroid {
    pub fn dual(&self) -> Matroid {
        match &*self.variant {
            Variant::Dual(m) => m.clone(),
            Variant::Uniform => Matroid::from_parts(self.n, self.n - self.rank, Variant::Uniform),
            _ => Matroid::from_parts(self.n, self.n - self.rank, Variant::Dual(self.clone())),
        }
    }

    /// Deletes `deleted` and contracts `contracted`; the remaining elements
    /// are renumbered in increasing order.
    pub fn minor(&self, deleted: ElementSet, contracted: ElementSet) -> Result<Matroid> {
        let gone = deleted.union(contracted);
        if let Some(e) = gone.difference(self.ground_set()).min() {
            return Err(Error::ElementOutOfRange {
                element: e,
                size: self.n,
            });
        }
        if !deleted.intersection(contracted).is_empty() {
            return Err(Error::InvalidParameters(
                "an element cannot be both deleted and contracted".into(),
            ));
        }
        if gone.is_empty() {
            return Ok(self.clone());
        }
        if let Variant::Graphic(g) = &*self.variant {
            let mut g = g.clone();
            // Remove from the highest index down so lower indices stay valid.
            let mut order: Vec<usize> = gone.iter().collect();
            order.reverse();
            for e in order {
                g = if contracted.contains(e) {
                    g.contract_edge(e)
                } else {
                    g.delete_edge(e)
                };
            }
            return Matroid::graphic(g);
        }
        let keep_here: Vec<usize> = self.ground_set().difference(gone).iter().collect();
        let (parent, keep, contracted) = match &*self.variant {
            Variant::Minor {
                parent,
                keep,
                contracted: c0,
                ..
            } => (
                parent.clone(),
                keep_here.iter().map(|&i| keep[i]).collect(),
                c0.union(contracted.map_through(keep)),
            ),
            _ => (self.clone(), keep_here, contracted),
        };
        let contracted_rank = parent.rank(contracted);
        let n = keep.len();
        let rank = parent.rank(ElementSet::full(keep.len()).map_through(&keep).union(contracted)) - contracted_rank;
        Ok(Matroid::from_parts(
            n,
            rank,
            Variant::Minor {
                parent,
                keep,
                contracted,
                contracted_rank,
            },
        ))
    }

    pub fn delete(&self, e: usize) -> Result<Matroid> {
        self.check_element(e)?;
        self.minor(ElementSet::singleton(e), ElementSet::EMPTY)
    }

    pub fn contract(&self, e: usize) -> Result<Matroid> {
        self.check_element(e)?;
        self.minor(ElementSet::EMPTY, ElementSet::singleton(e))
    }

    /// Declares the circuit-hyperplane `x` a basis.
    pub fn relax(&self, x: ElementSet) -> Result<Matroid> {
        if !x.is_subset(self.ground_set()) || !self.is_circuit(x) || !self.is_hyperplane(x) {
            return Err(Error::NotCircuitHyperplane);
        }
        if let Variant::SparsePaving { circuit_hyperplanes } = &*self.variant {
            let mut rest = circuit_hyperplanes.clone();
            rest.remove(&x);
            return Matroid::sparse_paving(self.rank, self.n, rest);
        }
        Ok(Matroid::from_parts(
            self.n,
            self.rank,
            Variant::Relaxed {
                parent: self.clone(),
                set: x,
            },
        ))
    }

    /// Adds a new element `n` placed as independently as possible.
    pub fn free_extension(&self) -> Result<Matroid> {
        check_total(self.n + 1)?;
        Ok(Matroid::view(self.n + 1, Variant::FreeExtension(self.clone())))
    }

    pub fn direct_sum(parts: &[Matroid]) -> Result<Matroid> {
        let n = parts.iter().map(Matroid::ground_size).sum();
        check_total(n)?;
        let rank = parts.iter().map(Matroid::full_rank).sum();
        Ok(Matroid::from_parts(n, rank, Variant::DirectSum(parts.to_vec())))
    }

    /// Adds a new element `n` parallel to `e`.
    pub fn parallel_extension(&self, e: usize) -> Result<Matroid> {
        self.check_element(e)?;
        check_total(self.n + 1)?;
        if let Variant::Graphic(g) = &*self.variant {
            let mut edges = g.edges().to_vec();
            edges.push(edges[e]);
            return Matroid::graphic(Graph::new(g.vertex_count(), edges)?);
        }
        let mut origin: Vec<usize> = (0..self.n).collect();
        origin.push(e);
        Ok(Matroid::from_parts(
            self.n + 1,
            self.rank,
            Variant::Pullback {
                parent: self.clone(),
                origin,
            },
        ))
    }

    /// Replaces each element by `k` parallel copies; element `e` becomes
    /// `k*e .. k*e + k`.
    pub fn thicken(&self, k: usize) -> Result<Matroid> {
        if k == 0 {
            return Err(Error::InvalidParameters("k must be at least 1".into()));
        }
        check_total(self.n * k)?;
        if let Variant::Graphic(g) = &*self.variant {
            let edges = g.edges().iter().flat_map(|&uv| std::iter::repeat_n(uv, k)).collect();
            return Matroid::graphic(Graph::new(g.vertex_count(), edges)?);
        }
        Ok(Matroid::from_parts(
            self.n * k,
            self.rank,
            Variant::Pullback {
                parent: self.clone(),
                origin: (0..self.n * k).map(|i| i / k).collect(),
            },
        ))
    }

    /// Replaces each element by `k` elements in series; element `e` becomes
    /// `k*e .. k*e + k`.
    pub fn stretch(&self, k: usize) -> Result<Matroid> {
        if k == 0 {
            return Err(Error::InvalidParameters("k must be at least 1".into()));
        }
        check_total(self.n * k)?;
        if let Variant::Graphic(g) = &*self.variant {
            return Matroid::graphic(g.subdivide(k));
        }
        Ok(self.dual().thicken(k)?.dual())
    }

    /// 2-sum of `self` with a copy of `n` at every element. Element `e`
    /// becomes `s*e .. s*e + s` where `s = |N| - 1`, following the order of
    /// `n.others()`.
    pub fn tensor(&self, n: &PointedMatroid) -> Result<Matroid> {
        let others = n.others();
        check_total(self.n * others.len())?;
        Ok(Matroid::view(
            self.n * others.len(),
            Variant::Tensor(TensorData {
                base: self.clone(),
                pointed: n.clone(),
                others,
            }),
        ))
    }

    /// 2-sum. The result has the non-point elements of the left matroid
    /// first, then those of the right matroid, each in increasing order.
    pub fn two_sum(left: &PointedMatroid, right: &PointedMatroid) -> Result<Matroid> {
        let left_keep = left.others();
        let right_keep = right.others();
        let n = left_keep.len() + right_keep.len();
        check_total(n)?;
        Ok(Matroid::view(
            n,
            Variant::TwoSum(TwoSumData {
                left: left.clone(),
                right: right.clone(),
                left_keep,
                right_keep,
            }),
        ))
    }

    /// Delta-sum along the triangle `t1` of `m1` identified elementwise with
    /// `t2` of `m2`. Positions are `[p, s, q]`. The result has the
    /// non-triangle elements of `m1` first, then those of `m2`.
    pub fn delta_sum(m1: &Matroid, m2: &Matroid, t1: [usize; 3], t2: [usize; 3]) -> Result<Matroid> {
        for &e in &t1 {
            m1.check_element(e)?;
        }
        for &e in &t2 {
            m2.check_element(e)?;
        }
        let tri1: ElementSet = t1.into_iter().collect();
        let tri2: ElementSet = t2.into_iter().collect();
        if tri1.len() != 3 || tri2.len() != 3 || !m1.is_circuit(tri1) || !m2.is_circuit(tri2) {
            return Err(Error::PreconditionViolated(
                "the shared set must be a 3-circuit in both matroids".into(),
            ));
        }
        let total = m1.n + m2.n - 6;
        check_total(m1.n + m2.n - 3)?;
        for (m, tri, t, name) in [(m1, tri1, t1, "first"), (m2, tri2, t2, "second")] {
            let outside = m.ground_set().difference(tri);
            let r_out = m.rank(outside);
            for (pos, label) in [(1, "s"), (0, "p")] {
                if m.rank(outside.with(t[pos])) != r_out {
                    return Err(Error::PreconditionViolated(format!(
                        "the {name} matroid has no circuit meeting the triangle exactly in {label}"
                    )));
                }
            }
        }
        if let (Some(g1), Some(g2)) = (m1.as_graph(), m2.as_graph()) {
            return Matroid::graphic(glue_graphs(g1, g2, t1, t2)?);
        }
        let (a, b, ta, tb, swapped) = if is_modular_flat(m1, tri1)? {
            (m1, m2, t1, t2, false)
        } else if is_modular_flat(m2, tri2)? {
            (m2, m1, t2, t1, true)
        } else {
            return Err(Error::PreconditionViolated(
                "the triangle is not a modular flat of either matroid".into(),
            ));
        };
        let tri_a: ElementSet = ta.into_iter().collect();
        let tri_b: ElementSet = tb.into_iter().collect();
        let mut next = a.n;
        let glue2: Vec<usize> = (0..b.n)
            .map(|j| match tb.iter().position(|&x| x == j) {
                Some(i) => ta[i],
                None => {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        let a_outer: Vec<usize> = a.ground_set().difference(tri_a).iter().collect();
        let b_outer: Vec<usize> = b.ground_set().difference(tri_b).iter().map(|j| glue2[j]).collect();
        // Keep the element order "first matroid, then second" even when the
        // modular side is the second one.
        let outer = if swapped {
            b_outer.into_iter().chain(a_outer).collect()
        } else {
            a_outer.into_iter().chain(b_outer).collect()
        };
        Ok(Matroid::view(
            total,
            Variant::DeltaSum(DeltaSumData {
                m1: a.clone(),
                m2: b.clone(),
                triangle1: tri_a,
                glue2,
                outer,
            }),
        ))
    }
}

/// `t` is a flat and `r(F) + r(T) = r(F ∪ T) + r(F ∩ T)` for every flat `F`.
pub fn is_modular_flat(m: &Matroid, t: ElementSet) -> Result<bool> {
    if !m.is_flat(t) {
        return Ok(false);
    }
    let rt = m.rank(t);
    Ok(super::flats(m)?
        .into_iter()
        .all(|f| m.rank(f) + rt == m.rank(f.union(t)) + m.rank(f.intersection(t))))
}

fn glue_graphs(g1: &Graph, g2: &Graph, t1: [usize; 3], t2: [usize; 3]) -> Result<Graph> {
    // The triangle vertex opposite edge i is the one that edge does not touch.
    let opposite = |g: &Graph, t: [usize; 3], i: usize| -> Result<usize> {
        let (a, b) = g.edges()[t[(i + 1) % 3]];
        let (c, d) = g.edges()[t[(i + 2) % 3]];
        [a, b]
            .into_iter()
            .find(|&v| v == c || v == d)
            .ok_or_else(|| Error::PreconditionViolated("triangle edges do not form a triangle".into()))
    };
    let mut vmap: Vec<Option<usize>> = vec![None; g2.vertex_count()];
    for i in 0..3 {
        vmap[opposite(g2, t2, i)?] = Some(opposite(g1, t1, i)?);
    }
    let mut vertex_count = g1.vertex_count();
    for slot in vmap.iter_mut() {
        if slot.is_none() {
            *slot = Some(vertex_count);
            vertex_count += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = g1
        .edges()
        .iter()
        .enumerate()
        .filter(|(k, _)| !t1.contains(k))
        .map(|(_, &uv)| uv)
        .collect();
    edges.extend(
        g2.edges()
            .iter()
            .enumerate()
            .filter(|(k, _)| !t2.contains(k))
            .map(|(_, &(u, v))| (vmap[u].unwrap(), vmap[v].unwrap())),
    );
    Graph::new(vertex_count, edges)
}

#[cfg(test)]
mod tests {
    use super::super::GfMatrix;
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    fn fano() -> Matroid {
        Matroid::linear(
            GfMatrix::identity_augmented(2, &[vec![1, 1, 0, 1], vec![1, 0, 1, 1], vec![0, 1, 1, 1]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn dual_of_uniform() {
        let d = Matroid::uniform(2, 5).unwrap().dual();
        assert!(d.rank_agrees(&Matroid::uniform(3, 5).unwrap()));
        let f = fano();
        assert!(f.dual().dual().rank_agrees(&f));
        let view = Matroid::from_parts(5, 2, Variant::Dual(Matroid::uniform(3, 5).unwrap()));
        assert!(view.rank_agrees(&Matroid::uniform(2, 5).unwrap()));
    }

    #[test]
    fn minors_follow_parent() {
        let f = fano();
        let m = f.minor(set(&[6]), set(&[0])).unwrap();
        assert_eq!(m.ground_size(), 5);
        for bits in 0..32u64 {
            let a = ElementSet::from_bits(bits);
            let keep = [1, 2, 3, 4, 5];
            assert_eq!(m.rank(a), f.rank(a.map_through(&keep).with(0)) - 1);
        }
        // Nested minors flatten.
        let mm = m.contract(0).unwrap();
        assert!(mm.rank_agrees(&f.minor(set(&[6]), set(&[0, 1])).unwrap()));
    }

    #[test]
    fn graphic_minors_stay_graphic() {
        let c5 = Matroid::graphic(Graph::cycle(5)).unwrap();
        let c4 = c5.contract(2).unwrap();
        assert!(c4.as_graph().is_some());
        assert!(c4.rank_agrees(&Matroid::graphic(Graph::cycle(4)).unwrap()));
        let path = c5.delete(0).unwrap();
        assert_eq!(path.full_rank(), 4);
        assert!((0..4).all(|e| path.is_coloop(e).unwrap()));
    }

    #[test]
    fn relax_requires_circuit_hyperplane() {
        let f = fano();
        assert!(matches!(f.relax(set(&[0, 1, 2])), Err(Error::NotCircuitHyperplane)));
        let line = set(&[0, 1, 3]);
        let fm = f.relax(line).unwrap();
        assert_eq!(fm.rank(line), 3);
        assert_eq!(fm.rank(set(&[0, 2, 4])), 2);
    }

    #[test]
    fn free_extension_of_uniform() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(u
            .free_extension()
            .unwrap()
            .rank_agrees(&Matroid::uniform(2, 5).unwrap()));
    }

    #[test]
    fn direct_sum_rank() {
        let m = Matroid::direct_sum(&[Matroid::uniform(1, 1).unwrap(), Matroid::uniform(0, 1).unwrap()]).unwrap();
        assert_eq!(m.full_rank(), 1);
        assert!(m.is_coloop(0).unwrap());
        assert!(m.is_loop(1).unwrap());
    }

    #[test]
    fn two_sum_with_two_circuit_is_identity() {
        let f = fano();
        let left = PointedMatroid::new(f.clone(), 6).unwrap();
        let right = PointedMatroid::new(Matroid::uniform(1, 2).unwrap(), 0).unwrap();
        let s = Matroid::two_sum(&left, &right).unwrap();
        // Element 6 of F7 is replaced by the single remaining element.
        assert!(s.rank_agrees(&f));
    }

    #[test]
    fn pointed_rejects_coloop() {
        assert!(PointedMatroid::new(Matroid::uniform(1, 1).unwrap(), 0).is_err());
        assert!(PointedMatroid::new(Matroid::uniform(0, 2).unwrap(), 0).is_err());
    }

    #[test]
    fn stretch_matches_dual_thicken_dual() {
        let m = Matroid::sparse_paving(2, 4, [set(&[0, 1])]).unwrap();
        for k in 1..=3 {
            let s = m.stretch(k).unwrap();
            let via_views = Matroid::view(4 * k, Variant::Dual(m.dual().thicken(k).unwrap()));
            assert!(s.rank_agrees(&via_views));
        }
    }

    #[test]
    fn stretch_of_multilink_is_k23() {
        let m = Matroid::graphic(Graph::multilink(3)).unwrap();
        let s = m.stretch(2).unwrap();
        let k23 = Matroid::graphic(Graph::complete_bipartite(2, 3)).unwrap();
        // Same matroid up to relabeling: compare rank profiles by size.
        let profile = |m: &Matroid| {
            let mut counts = vec![0usize; 64];
            for bits in 0..1u64 << m.ground_size() {
                let a = ElementSet::from_bits(bits);
                counts[a.len() * 8 + m.rank(a)] += 1;
            }
            counts
        };
        assert_eq!(profile(&s), profile(&k23));
    }

    #[test]
    fn tensor_with_two_circuit_is_identity() {
        let f = fano();
        let n = PointedMatroid::new(Matroid::uniform(1, 2).unwrap(), 1).unwrap();
        assert!(f.tensor(&n).unwrap().rank_agrees(&f));
    }

    #[test]
    fn tensor_with_circuit_is_stretch() {
        let m = Matroid::sparse_paving(2, 4, [set(&[0, 1])]).unwrap();
        let n = PointedMatroid::new(Matroid::uniform(2, 3).unwrap(), 2).unwrap();
        assert!(m.tensor(&n).unwrap().rank_agrees(&m.dual().thicken(2).unwrap().dual()));
    }

    #[test]
    fn graphic_delta_sum_of_two_k4() {
        // K4 edges: 01 02 03 12 13 23; triangle {01, 02, 12} = elements 0, 1, 3.
        let k4 = Matroid::graphic(Graph::complete(4)).unwrap();
        let s = Matroid::delta_sum(&k4, &k4, [0, 1, 3], [0, 1, 3]).unwrap();
        assert_eq!(s.ground_size(), 6);
        let g = s.as_graph().unwrap();
        assert_eq!(g.vertex_count(), 5);
        // Two apexes joined to the three triangle vertices: K_{2,3}.
        let mut degree = vec![0; 5];
        for &(u, v) in g.edges() {
            degree[u] += 1;
            degree[v] += 1;
        }
        degree.sort();
        assert_eq!(degree, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn delta_sum_preconditions() {
        let k4 = Matroid::graphic(Graph::complete(4)).unwrap();
        // Triangle plus a pendant edge: no circuit through s avoiding the triangle.
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let m2 = Matroid::graphic(g).unwrap();
        assert!(matches!(
            Matroid::delta_sum(&k4, &m2, [0, 1, 3], [0, 1, 2]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            Matroid::delta_sum(&k4, &k4, [0, 1, 2], [0, 1, 3]),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn general_delta_sum_agrees_with_graph_gluing() {
        let k4 = Matroid::graphic(Graph::complete(4)).unwrap();
        let k4_linear = Matroid::linear(
            // Signed incidence of K4 edges 01 02 03 12 13 23 over GF(3).
            GfMatrix::from_signed_rows(
                3,
                &[
                    vec![1, 1, 1, 0, 0, 0],
                    vec![-1, 0, 0, 1, 1, 0],
                    vec![0, -1, 0, -1, 0, 1],
                ],
            )
            .unwrap(),
        )
        .unwrap();
        assert!(k4.rank_agrees(&k4_linear));
        let graphic = Matroid::delta_sum(&k4, &k4, [0, 1, 3], [0, 1, 3]).unwrap();
        let general = Matroid::delta_sum(&k4_linear, &k4_linear, [0, 1, 3], [0, 1, 3]).unwrap();
        assert!(graphic.as_graph().is_some());
        assert!(general.as_graph().is_none());
        assert!(graphic.rank_agrees(&general));
    }
}
