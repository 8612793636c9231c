use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{Antichain, Poset, PosetJson};

/// A poset with its antichains `A_1, …, A_n` in presentation order.
///
/// Construction only checks that every listed set is an antichain of the
/// poset; the regularity conditions are left to
/// [`verify_regular`](super::verify_regular).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularInstance {
    poset: Poset,
    antichains: Vec<Antichain>,
    w: usize,
}

impl RegularInstance {
    pub fn new(poset: Poset, antichains: Vec<Vec<usize>>, w: usize) -> Result<Self> {
        let antichains = antichains
            .into_iter()
            .map(|a| Antichain::new(&poset, a))
            .collect::<Result<_>>()?;
        Ok(Self { poset, antichains, w })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    /// `A_i`, 1-based.
    pub fn antichain(&self, i: usize) -> &Antichain {
        &self.antichains[i - 1]
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn len(&self) -> usize {
        self.antichains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.antichains.is_empty()
    }

    /// `A(x)` as a 1-based index: the first antichain containing `x`.
    pub fn layer_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.poset.len()];
        for (i, a) in self.antichains.iter().enumerate().rev() {
            for v in a.iter() {
                out[v] = Some(i + 1);
            }
        }
        out
    }

    /// `dominates[i][j]` iff `A_{i+1} ⊑ A_{j+1}` (raw domination, no
    /// maximality check).
    pub fn dominance(&self) -> Vec<Vec<bool>> {
        self.antichains
            .iter()
            .map(|a| self.antichains.iter().map(|b| a.dominated_by(&self.poset, b)).collect())
            .collect()
    }

    /// The instance presented only up to `A_k`, on the induced subposet.
    /// Vertex ids are renumbered in ascending order of the originals.
    pub fn prefix(&self, k: usize) -> Result<RegularInstance> {
        if k > self.len() {
            return Err(Error::BadParameters(format!("prefix {k} of {} antichains", self.len())));
        }
        let mut keep: Vec<usize> = self.antichains[..k].iter().flat_map(|a| a.iter()).collect();
        keep.sort_unstable();
        keep.dedup();
        let poset = self.poset.induced(&keep);
        let relabel = |v: usize| keep.binary_search(&v).unwrap();
        let antichains = self.antichains[..k]
            .iter()
            .map(|a| a.iter().map(relabel).collect())
            .collect();
        RegularInstance::new(poset, antichains, self.w)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    poset: PosetJson,
    antichains: Vec<Vec<usize>>,
    w: usize,
}

impl Serialize for RegularInstance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            poset: PosetJson::from_poset(&self.poset, false),
            antichains: self.antichains.iter().map(|a| a.members().to_vec()).collect(),
            w: self.w,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RegularInstance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let poset = w.poset.to_poset().map_err(serde::de::Error::custom)?;
        RegularInstance::new(poset, w.antichains, w.w).map_err(serde::de::Error::custom)
    }
}
