//! Finite posets stored as a transitively closed strict-order bit matrix.
//!
//! Vertices are the ids `0..n`. Every [`Poset`] is immutable after
//! construction; all queries are read-only.

pub(crate) mod antichain;
mod dilworth;
mod io;
mod ladder;
pub(crate) mod matching;
mod product;

pub use antichain::{antichain_join, antichain_meet, maximum_antichains, sqsubseteq, Antichain};
pub use dilworth::{dilworth_partition, is_dilworth_edge, maximum_antichain, width, ChainPartition};
pub use io::PosetJson;
pub use ladder::{find_max_ladder, LadderEmbedding, LadderSearch};
pub use product::lex_product;

use std::sync::OnceLock;

use crate::bitset::{BitMatrix, BitSet};
use crate::error::{Error, Result};

/// A finite strict partial order on `0..n`.
#[derive(Clone)]
pub struct Poset {
    n: usize,
    /// `above.get(u, v)` iff `u < v`.
    above: BitMatrix,
    /// `below.get(v, u)` iff `u < v`.
    below: BitMatrix,
    width: OnceLock<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.above == other.above
    }
}

impl Eq for Poset {}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .finish()
    }
}

/// Build a poset from `(lower, upper)` pairs, closing transitively.
pub fn build_poset(n: usize, relations: &[(usize, usize)]) -> Result<Poset> {
    Poset::new(n, relations)
}

impl Poset {
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut m = BitMatrix::new(n);
        for &(u, v) in relations {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            m.set(u, v, true);
        }
        m.transitive_closure();
        if let Some(v) = (0..n).find(|&v| m.get(v, v)) {
            return Err(Error::Cycle(v));
        }
        Ok(Self::from_closed(m))
    }

    /// Wraps a matrix that is already irreflexive and transitively closed.
    pub(crate) fn from_closed(above: BitMatrix) -> Self {
        let n = above.size();
        debug_assert!((0..n).all(|v| !above.get(v, v)));
        let mut below = BitMatrix::new(n);
        for u in 0..n {
            for v in above.row(u).iter() {
                below.set(v, u, true);
            }
        }
        Self {
            n,
            above,
            below,
            width: OnceLock::new(),
        }
    }

    /// Closes an arbitrary acyclic relation matrix.
    pub(crate) fn from_relation_matrix(mut m: BitMatrix) -> Result<Self> {
        m.transitive_closure();
        if let Some(v) = (0..m.size()).find(|&v| m.get(v, v)) {
            return Err(Error::Cycle(v));
        }
        Ok(Self::from_closed(m))
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_closed(BitMatrix::new(n))
    }

    pub fn chain(n: usize) -> Self {
        let mut m = BitMatrix::new(n);
        for u in 0..n {
            for v in u + 1..n {
                m.set(u, v, true);
            }
        }
        Self::from_closed(m)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn less(&self, u: usize, v: usize) -> bool {
        self.above.get(u, v)
    }

    #[inline]
    pub fn leq(&self, u: usize, v: usize) -> bool {
        u == v || self.less(u, v)
    }

    #[inline]
    pub fn comparable(&self, u: usize, v: usize) -> bool {
        u == v || self.less(u, v) || self.less(v, u)
    }

    #[inline]
    pub fn incomparable(&self, u: usize, v: usize) -> bool {
        !self.comparable(u, v)
    }

    /// Strict up-set `U(u)`.
    pub fn up_set(&self, u: usize) -> &BitSet {
        self.above.row(u)
    }

    /// Strict down-set `D(u)`.
    pub fn down_set(&self, u: usize) -> &BitSet {
        self.below.row(u)
    }

    /// `I(u)`: vertices incomparable to `u`.
    pub fn incomparable_set(&self, u: usize) -> BitSet {
        let mut s = BitSet::full(self.n);
        s.difference_with(self.up_set(u));
        s.difference_with(self.down_set(u));
        s.remove(u);
        s
    }

    /// Closed interval `[u, v]`.
    pub fn interval(&self, u: usize, v: usize) -> BitSet {
        let mut s = self.up_set(u).clone();
        s.intersect_with(self.down_set(v));
        if self.leq(u, v) {
            s.insert(u);
            s.insert(v);
        }
        s
    }

    /// Minimal elements of the subposet induced by `set`, ascending.
    pub fn minimal_of(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&v| !set.iter().any(|&u| self.less(u, v)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Maximal elements of the subposet induced by `set`, ascending.
    pub fn maximal_of(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&v| !set.iter().any(|&u| self.less(v, u)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_chain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.comparable(u, v)))
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.incomparable(u, v)))
    }

    /// Induced subposet; vertex `k` of the result is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Poset {
        let k = vertices.len();
        let mut m = BitMatrix::new(k);
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if self.less(u, v) {
                    m.set(a, b, true);
                }
            }
        }
        Poset::from_closed(m)
    }

    /// The order with every relation reversed.
    pub fn dual(&self) -> Poset {
        Poset::from_closed(self.below.clone())
    }

    /// All strict comparabilities `(u, v)` with `u < v`, row-major.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.up_set(u).iter().map(move |v| (u, v)))
            .collect()
    }

    /// Cover pairs (the transitive reduction), row-major.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(u, v)| {
                let mut between = self.up_set(u).clone();
                between.intersect_with(self.down_set(v));
                between.is_empty()
            })
            .collect()
    }

    pub fn relation_count(&self) -> usize {
        self.above.count()
    }

    /// A linear extension: ascending by down-set size, ties by id.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.vertices().collect();
        order.sort_by_key(|&v| (self.down_set(v).count(), v));
        order
    }

    pub(crate) fn cached_width(&self, compute: impl FnOnce() -> usize) -> usize {
        *self.width.get_or_init(compute)
    }
}
