//! Width, Dilworth partitions and Dilworth edges via bipartite matching
//! on the split graph of the strict order.

use serde::{Deserialize, Serialize};

use super::matching::{max_matching, Matching};
use super::Poset;
use crate::bitset::BitMatrix;
use crate::error::{Error, Result};

/// Vertex → chain assignment, chains numbered `1..=n_chains`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainPartition {
    assignment: Vec<usize>,
    n_chains: usize,
}

impl ChainPartition {
    /// Compacts arbitrary positive labels to `1..=k`, preserving label order.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let assignment = labels
            .iter()
            .map(|l| distinct.binary_search(l).unwrap() + 1)
            .collect();
        Self {
            assignment,
            n_chains: distinct.len(),
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn chain_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn n_chains(&self) -> usize {
        self.n_chains
    }

    /// Members of each chain, ascending by id.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_chains];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }

    /// Every class is a nonempty chain of `poset` and every vertex is assigned.
    pub fn is_valid_for(&self, poset: &Poset) -> bool {
        self.assignment.len() == poset.len()
            && self.chains().iter().all(|c| !c.is_empty() && poset.is_chain(c))
    }
}

fn split_graph(poset: &Poset) -> Vec<Vec<usize>> {
    poset.vertices().map(|u| poset.up_set(u).iter().collect()).collect()
}

fn split_matching(poset: &Poset) -> (Vec<Vec<usize>>, Matching) {
    let adj = split_graph(poset);
    let m = max_matching(poset.len(), &adj);
    (adj, m)
}

/// Size of a largest antichain (Dilworth via König).
pub fn width(poset: &Poset) -> usize {
    poset.cached_width(|| poset.len() - split_matching(poset).1.size)
}

/// A chain partition with exactly `width(poset)` chains. Chains are
/// numbered by their least vertex id.
pub fn dilworth_partition(poset: &Poset) -> ChainPartition {
    let (_, m) = split_matching(poset);
    let n = poset.len();
    let mut label = vec![0usize; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != 0 {
            continue;
        }
        // walk back to the chain head, then forward
        let mut head = start;
        while let Some(prev) = m.right[head] {
            head = prev;
        }
        next += 1;
        let mut cur = Some(head);
        while let Some(v) = cur {
            label[v] = next;
            cur = m.left[v];
        }
    }
    ChainPartition {
        assignment: label,
        n_chains: next,
    }
}

/// A deterministic maximum antichain, ascending by id.
pub fn maximum_antichain(poset: &Poset) -> Vec<usize> {
    let (adj, m) = split_matching(poset);
    let (left, right) = m.alternating_reach(&adj);
    poset.vertices().filter(|&v| left[v] && !right[v]).collect()
}

/// Whether some Dilworth partition puts the comparable pair `u, v` in one
/// chain.
///
/// The pair is contracted together with a maximal chain `Z` of the open
/// interval `(u, v)` into a single vertex, and the contracted poset is
/// tested for a `width(poset)`-chain cover. A cover using `u, Z', v` can
/// always absorb further interval elements, so maximal chains suffice.
pub fn is_dilworth_edge(poset: &Poset, u: usize, v: usize) -> Result<bool> {
    let n = poset.len();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v || poset.incomparable(u, v) {
        return Err(Error::NotComparable(u, v));
    }
    let (lo, hi) = if poset.less(u, v) { (u, v) } else { (v, u) };
    let target = width(poset);
    let inner = {
        let mut s = poset.up_set(lo).clone();
        s.intersect_with(poset.down_set(hi));
        s.iter().collect::<Vec<_>>()
    };
    let mut found = false;
    for_each_maximal_chain(poset, &inner, &mut |z| {
        if !found && width(&contract(poset, lo, hi, z)) == target {
            found = true;
        }
        !found
    });
    Ok(found)
}

/// Replaces `lo`, `z`, `hi` by one vertex sitting below `U(hi)` and above `D(lo)`.
fn contract(poset: &Poset, lo: usize, hi: usize, z: &[usize]) -> Poset {
    let keep: Vec<usize> = poset
        .vertices()
        .filter(|&x| x != lo && x != hi && !z.contains(&x))
        .collect();
    let k = keep.len();
    let mut m = BitMatrix::new(k + 1);
    for (a, &x) in keep.iter().enumerate() {
        for (b, &y) in keep.iter().enumerate() {
            if poset.less(x, y) {
                m.set(a, b, true);
            }
        }
        if poset.less(x, lo) {
            m.set(a, k, true);
        }
        if poset.less(hi, x) {
            m.set(k, a, true);
        }
    }
    Poset::from_closed(m)
}

/// Calls `visit` with every maximal chain of the subposet on `set`
/// (the empty chain when `set` is empty); stops when `visit` returns false.
fn for_each_maximal_chain(poset: &Poset, set: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) {
    if set.is_empty() {
        visit(&[]);
        return;
    }
    let covers = |a: usize| -> Vec<usize> {
        set.iter()
            .copied()
            .filter(|&b| poset.less(a, b) && !set.iter().any(|&c| poset.less(a, c) && poset.less(c, b)))
            .collect()
    };
    fn walk(
        path: &mut Vec<usize>,
        covers: &dyn Fn(usize) -> Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        let next = covers(last);
        if next.is_empty() {
            return visit(path);
        }
        for b in next {
            path.push(b);
            let go_on = walk(path, covers, visit);
            path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    for start in poset.minimal_of(set) {
        let mut path = vec![start];
        if !walk(&mut path, &covers, visit) {
            return;
        }
    }
}
