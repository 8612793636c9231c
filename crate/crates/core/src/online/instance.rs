use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{width, Poset, PosetJson};

/// A poset together with the order its vertices are revealed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnlineInstance {
    poset: Poset,
    presentation: Vec<usize>,
    width_bound: usize,
}

impl OnlineInstance {
    pub fn new(poset: Poset, presentation: Vec<usize>, width_bound: usize) -> Result<Self> {
        let n = poset.len();
        let mut seen = vec![false; n];
        if presentation.len() != n {
            return Err(Error::BadPresentation(n));
        }
        for &v in &presentation {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::BadPresentation(n));
            }
        }
        let w = width(&poset);
        if w > width_bound {
            return Err(Error::WidthExceeded { width: w, bound: width_bound });
        }
        Ok(Self {
            poset,
            presentation,
            width_bound,
        })
    }

    /// Presents vertices in id order with the poset's own width as bound.
    pub fn in_id_order(poset: Poset) -> Self {
        let w = width(&poset);
        let order = poset.vertices().collect();
        Self::new(poset, order, w).expect("identity presentation is valid")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn presentation(&self) -> &[usize] {
        &self.presentation
    }

    pub fn width_bound(&self) -> usize {
        self.width_bound
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Arrival position of every vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.presentation.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    #[serde(flatten)]
    poset: PosetJson,
    presentation: Vec<usize>,
    width_bound: usize,
}

impl Serialize for OnlineInstance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            poset: PosetJson::from_poset(&self.poset, false),
            presentation: self.presentation.clone(),
            width_bound: self.width_bound,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OnlineInstance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let poset = w.poset.to_poset().map_err(serde::de::Error::custom)?;
        OnlineInstance::new(poset, w.presentation, w.width_bound).map_err(serde::de::Error::custom)
    }
}
