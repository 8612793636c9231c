//! Antichains and the lattice of maximum antichains.

use serde::{Deserialize, Serialize};

use super::{width, Poset};
use crate::error::{Error, Result};

/// A sorted set of pairwise incomparable vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Antichain(Vec<usize>);

impl Antichain {
    pub fn new(poset: &Poset, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= poset.len()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: poset.len() });
        }
        if !poset.is_antichain(&members) {
            return Err(Error::NotAntichain(members));
        }
        Ok(Self(members))
    }

    /// Caller guarantees the members are sorted and pairwise incomparable.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `A ⊆ D[B]`: every member of `self` lies at or below a member of `other`.
    pub fn dominated_by(&self, poset: &Poset, other: &Antichain) -> bool {
        self.iter().all(|a| other.iter().any(|b| poset.leq(a, b)))
    }

    pub fn is_maximum_in(&self, poset: &Poset) -> bool {
        self.len() == width(poset) && poset.is_antichain(&self.0)
    }

    fn union(&self, other: &Antichain) -> Vec<usize> {
        let mut u: Vec<usize> = self.iter().chain(other.iter()).collect();
        u.sort_unstable();
        u.dedup();
        u
    }
}

fn require_maximum(poset: &Poset, a: &Antichain) -> Result<()> {
    if a.iter().any(|v| v >= poset.len()) || !a.is_maximum_in(poset) {
        Err(Error::NotMaximumAntichain(a.0.clone()))
    } else {
        Ok(())
    }
}

/// `A ⊑ B` on maximum antichains.
pub fn sqsubseteq(poset: &Poset, a: &Antichain, b: &Antichain) -> Result<bool> {
    require_maximum(poset, a)?;
    require_maximum(poset, b)?;
    Ok(a.dominated_by(poset, b))
}

/// `A ∧ B = Min(A ∪ B)`.
pub fn antichain_meet(poset: &Poset, a: &Antichain, b: &Antichain) -> Result<Antichain> {
    require_maximum(poset, a)?;
    require_maximum(poset, b)?;
    Ok(meet_unchecked(poset, a, b))
}

/// `A ∨ B = Max(A ∪ B)`.
pub fn antichain_join(poset: &Poset, a: &Antichain, b: &Antichain) -> Result<Antichain> {
    require_maximum(poset, a)?;
    require_maximum(poset, b)?;
    Ok(join_unchecked(poset, a, b))
}

pub(crate) fn meet_unchecked(poset: &Poset, a: &Antichain, b: &Antichain) -> Antichain {
    Antichain::from_sorted(poset.minimal_of(&a.union(b)))
}

pub(crate) fn join_unchecked(poset: &Poset, a: &Antichain, b: &Antichain) -> Antichain {
    Antichain::from_sorted(poset.maximal_of(&a.union(b)))
}

/// Every maximum antichain, lexicographically sorted. Exhaustive; fails
/// with [`Error::CapExceeded`] rather than truncating.
pub fn maximum_antichains(poset: &Poset, cap: usize) -> Result<Vec<Antichain>> {
    let w = width(poset);
    let mut out = Vec::new();
    if w == 0 {
        out.push(Antichain(Vec::new()));
        return Ok(out);
    }
    let mut current = Vec::with_capacity(w);
    collect(poset, w, 0, &mut current, &mut out, cap)?;
    Ok(out)
}

fn collect(
    poset: &Poset,
    w: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Antichain>,
    cap: usize,
) -> Result<()> {
    if current.len() == w {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(Antichain(current.clone()));
        return Ok(());
    }
    let need = w - current.len();
    for v in from..poset.len() {
        if poset.len() - v < need {
            break;
        }
        if current.iter().all(|&u| poset.incomparable(u, v)) {
            current.push(v);
            collect(poset, w, v + 1, current, out, cap)?;
            current.pop();
        }
    }
    Ok(())
}
