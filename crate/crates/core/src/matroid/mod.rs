//! Matroids on ground sets `{0, .., n-1}` with a uniform rank oracle.
//!
//! Every construction (dual, minors, relaxation, sums, ...) is a view that
//! answers rank queries through the matroids it was built from, so engines can
//! be run on the result without ever materializing a basis list.

mod construct;
mod enumerate;
mod gf;
mod graph;
pub mod io;
mod lattice;
mod set;

use std::collections::BTreeSet;
use std::sync::Arc;

pub use construct::PointedMatroid;
pub use enumerate::{bases, circuits, flats, flats_by_rank, hyperplanes, rank_table, spanning_sets, ENUMERATION_LIMIT};
pub use gf::{is_prime, GfMatrix};
pub use graph::Graph;
pub use lattice::Step;
pub use set::{k_subsets, ElementSet, MAX_ELEMENTS};

use crate::error::{Error, Result};

/// Largest ground set on which [`Matroid::basis_list`] checks the exchange axiom.
pub const EXCHANGE_CHECK_LIMIT: usize = 16;

#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    variant: Arc<Variant>,
}

#[derive(Debug)]
pub enum Variant {
    Uniform,
    Graphic(Graph),
    Linear(GfMatrix),
    SparsePaving {
        circuit_hyperplanes: BTreeSet<ElementSet>,
    },
    /// Only blocks with more than `r - 1` elements are stored; every other
    /// `(r-1)`-subset is its own block.
    PavingPartition {
        blocks: Vec<ElementSet>,
    },
    BasisList {
        bases: BTreeSet<ElementSet>,
    },
    LatticePath {
        lower: Vec<Step>,
        upper: Vec<Step>,
        bases: BTreeSet<ElementSet>,
    },
    Dual(Matroid),
    /// Elements of the minor are `keep[i]` in the parent; `contracted` is
    /// a set of parent elements.
    Minor {
        parent: Matroid,
        keep: Vec<usize>,
        contracted: ElementSet,
        contracted_rank: usize,
    },
    Relaxed {
        parent: Matroid,
        set: ElementSet,
    },
    /// The new element is the last one.
    FreeExtension(Matroid),
    /// Parts occupy consecutive blocks of the ground set.
    DirectSum(Vec<Matroid>),
    /// Element `i` behaves as `origin[i]` of the parent (parallel copies).
    Pullback {
        parent: Matroid,
        origin: Vec<usize>,
    },
    TwoSum(construct::TwoSumData),
    DeltaSum(construct::DeltaSumData),
    Tensor(construct::TensorData),
}

impl Matroid {
    fn from_parts(n: usize, rank: usize, variant: Variant) -> Matroid {
        Matroid {
            n,
            rank,
            variant: Arc::new(variant),
        }
    }

    /// Builds a view and computes its full rank from the oracle.
    fn view(n: usize, variant: Variant) -> Matroid {
        let mut m = Matroid::from_parts(n, 0, variant);
        m.rank = m.rank_of_uncached(ElementSet::full(n));
        m
    }

    fn check_size(n: usize) -> Result<()> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                size: n,
                limit: MAX_ELEMENTS,
            });
        }
        Ok(())
    }

    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        Self::check_size(n)?;
        if r > n {
            return Err(Error::InvalidRank { rank: r, size: n });
        }
        Ok(Matroid::from_parts(n, r, Variant::Uniform))
    }

    pub fn empty() -> Matroid {
        Matroid::from_parts(0, 0, Variant::Uniform)
    }

    pub fn graphic(g: Graph) -> Result<Matroid> {
        Self::check_size(g.edge_count())?;
        let n = g.edge_count();
        let r = g.rank_of(ElementSet::full(n));
        Ok(Matroid::from_parts(n, r, Variant::Graphic(g)))
    }

    pub fn linear(m: GfMatrix) -> Result<Matroid> {
        Self::check_size(m.cols())?;
        let n = m.cols();
        let r = m.column_rank(ElementSet::full(n));
        Ok(Matroid::from_parts(n, r, Variant::Linear(m)))
    }

    /// Sparse paving matroid of rank `r` whose circuit-hyperplanes are `chs`.
    pub fn sparse_paving(r: usize, n: usize, chs: impl IntoIterator<Item = ElementSet>) -> Result<Matroid> {
        Self::check_size(n)?;
        if r > n {
            return Err(Error::InvalidRank { rank: r, size: n });
        }
        let full = ElementSet::full(n);
        let set: BTreeSet<ElementSet> = chs.into_iter().collect();
        for c in &set {
            if c.len() != r || !c.is_subset(full) {
                return Err(Error::InvalidMatroid(format!(
                    "circuit-hyperplane {c:?} is not an {r}-subset of the ground set"
                )));
            }
        }
        let v: Vec<_> = set.iter().collect();
        for (i, a) in v.iter().enumerate() {
            for b in &v[i + 1..] {
                if a.symmetric_difference(**b).len() <= 2 {
                    return Err(Error::InvalidMatroid(format!(
                        "circuit-hyperplanes {a:?} and {b:?} differ in at most two elements"
                    )));
                }
            }
        }
        Ok(Matroid::from_parts(
            n,
            r,
            Variant::SparsePaving {
                circuit_hyperplanes: set,
            },
        ))
    }

    /// Paving matroid of rank `r` given by its hyperplanes: a family of sets in
    /// which every `(r-1)`-subset lies in at most one member. Unlisted
    /// `(r-1)`-subsets are their own blocks.
    pub fn paving_partition(r: usize, n: usize, blocks: impl IntoIterator<Item = ElementSet>) -> Result<Matroid> {
        Self::check_size(n)?;
        if r == 0 || r > n {
            return Err(Error::InvalidRank { rank: r, size: n });
        }
        let full = ElementSet::full(n);
        let mut kept: Vec<ElementSet> = Vec::new();
        for b in blocks {
            if !b.is_subset(full) || b.len() < r - 1 {
                return Err(Error::InvalidPartition(format!(
                    "block {b:?} has fewer than {} elements or leaves the ground set",
                    r - 1
                )));
            }
            if b.len() > r - 1 {
                kept.push(b);
            }
        }
        for (i, a) in kept.iter().enumerate() {
            for b in &kept[i + 1..] {
                if a.intersection(*b).len() >= r - 1 {
                    return Err(Error::InvalidPartition(format!(
                        "blocks {a:?} and {b:?} share an {}-subset",
                        r - 1
                    )));
                }
            }
        }
        if kept.contains(&full) {
            return Err(Error::InvalidPartition("a block cannot be the whole ground set".into()));
        }
        Ok(Matroid::from_parts(n, r, Variant::PavingPartition { blocks: kept }))
    }

    /// Matroid given by its bases. The exchange axiom is verified when
    /// `n <= EXCHANGE_CHECK_LIMIT`.
    pub fn basis_list(n: usize, bases: impl IntoIterator<Item = ElementSet>) -> Result<Matroid> {
        Self::check_size(n)?;
        let bases: BTreeSet<ElementSet> = bases.into_iter().collect();
        let Some(first) = bases.iter().next() else {
            return Err(Error::InvalidMatroid("a matroid has at least one basis".into()));
        };
        let r = first.len();
        let full = ElementSet::full(n);
        if bases.iter().any(|b| b.len() != r || !b.is_subset(full)) {
            return Err(Error::InvalidMatroid(
                "bases must be equicardinal subsets of the ground set".into(),
            ));
        }
        if n <= EXCHANGE_CHECK_LIMIT {
            for a in &bases {
                for b in &bases {
                    for x in a.difference(*b).iter() {
                        let ok = b.difference(*a).iter().any(|y| bases.contains(&a.without(x).with(y)));
                        if !ok {
                            return Err(Error::InvalidMatroid(format!(
                                "basis exchange fails for {a:?}, {b:?} at element {x}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Matroid::from_parts(n, r, Variant::BasisList { bases }))
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank
    }

    pub fn variant(&self) -> &Variant {
        &self.variant
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match &*self.variant {
            Variant::Graphic(g) => Some(g),
            _ => None,
        }
    }

    pub fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            return Err(Error::ElementOutOfRange {
                element: e,
                size: self.n,
            });
        }
        Ok(())
    }

    /// Rank with an explicit range check.
    pub fn try_rank(&self, a: ElementSet) -> Result<usize> {
        if let Some(e) = a.difference(self.ground_set()).min() {
            return Err(Error::ElementOutOfRange {
                element: e,
                size: self.n,
            });
        }
        Ok(self.rank(a))
    }

    /// Rank of `a`; elements outside the ground set are ignored.
    pub fn rank(&self, a: ElementSet) -> usize {
        let a = a.intersection(self.ground_set());
        if a == self.ground_set() {
            return self.rank;
        }
        self.rank_of_uncached(a)
    }

    fn rank_of_uncached(&self, a: ElementSet) -> usize {
        let r = self.rank;
        match &*self.variant {
            Variant::Uniform => a.len().min(r),
            Variant::Graphic(g) => g.rank_of(a),
            Variant::Linear(m) => m.column_rank(a),
            Variant::SparsePaving { circuit_hyperplanes } => {
                if a.len() == r && circuit_hyperplanes.contains(&a) {
                    r - 1
                } else {
                    a.len().min(r)
                }
            }
            Variant::PavingPartition { blocks } => {
                if a.len() >= r && blocks.iter().any(|b| a.is_subset(*b)) {
                    r - 1
                } else {
                    a.len().min(r)
                }
            }
            Variant::BasisList { bases } | Variant::LatticePath { bases, .. } => {
                bases.iter().map(|b| b.intersection(a).len()).max().unwrap_or(0)
            }
            Variant::Dual(m) => a.len() + m.rank(self.ground_set().difference(a)) - m.rank,
            Variant::Minor {
                parent,
                keep,
                contracted,
                contracted_rank,
            } => parent.rank(a.map_through(keep).union(*contracted)) - contracted_rank,
            Variant::Relaxed { parent, set } => {
                if a == *set {
                    parent.rank
                } else {
                    parent.rank(a)
                }
            }
            Variant::FreeExtension(m) => {
                let e = self.n - 1;
                if !a.contains(e) {
                    m.rank(a)
                } else {
                    let base = m.rank(a.without(e));
                    if base == m.rank {
                        base
                    } else {
                        base + 1
                    }
                }
            }
            Variant::DirectSum(parts) => {
                let mut offset = 0;
                let mut total = 0;
                for p in parts {
                    let bits = if p.n == 0 {
                        0
                    } else {
                        (a.bits() >> offset) & ElementSet::full(p.n).bits()
                    };
                    total += p.rank(ElementSet::from_bits(bits));
                    offset += p.n;
                }
                total
            }
            Variant::Pullback { parent, origin } => parent.rank(a.map_through(origin)),
            Variant::TwoSum(d) => d.rank(a),
            Variant::DeltaSum(d) => d.rank(a),
            Variant::Tensor(d) => d.rank(a),
        }
    }

    pub fn is_loop(&self, e: usize) -> Result<bool> {
        self.check_element(e)?;
        Ok(self.rank(ElementSet::singleton(e)) == 0)
    }

    pub fn is_coloop(&self, e: usize) -> Result<bool> {
        self.check_element(e)?;
        Ok(self.rank(self.ground_set().without(e)) < self.rank)
    }

    pub fn is_independent(&self, a: ElementSet) -> bool {
        self.rank(a) == a.len()
    }

    pub fn closure(&self, a: ElementSet) -> ElementSet {
        let r = self.rank(a);
        self.ground_set()
            .difference(a)
            .iter()
            .filter(|&e| self.rank(a.with(e)) == r)
            .fold(a, ElementSet::with)
    }

    pub fn is_flat(&self, a: ElementSet) -> bool {
        self.closure(a) == a
    }

    pub fn is_circuit(&self, a: ElementSet) -> bool {
        !a.is_empty() && self.rank(a) + 1 == a.len() && a.iter().all(|e| self.is_independent(a.without(e)))
    }

    pub fn is_hyperplane(&self, a: ElementSet) -> bool {
        self.rank > 0 && self.rank(a) + 1 == self.rank && self.is_flat(a)
    }

    /// True when the two matroids have the same size and agree on the rank of
    /// every subset. Exponential; intended for tests on small ground sets.
    pub fn rank_agrees(&self, other: &Matroid) -> bool {
        self.n == other.n
            && self.rank == other.rank
            && (0..1u64 << self.n).all(|bits| {
                let a = ElementSet::from_bits(bits);
                self.rank(a) == other.rank(a)
            })
    }
}
