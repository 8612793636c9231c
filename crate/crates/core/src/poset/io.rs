use serde::{Deserialize, Serialize};

use super::Poset;
use crate::error::Result;

/// Wire form of a poset: `{"n": 3, "relations": [[0,1],[1,2]]}`.
///
/// Relations are read as generators of the order and closed on load. When
/// `closed` is set the writer lists every comparability instead of covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub relations: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub closed: bool,
}

impl PosetJson {
    pub fn from_poset(poset: &Poset, closed: bool) -> Self {
        let relations = if closed { poset.relations() } else { poset.covers() };
        Self {
            n: poset.len(),
            relations,
            closed,
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        Poset::new(self.n, &self.relations)
    }
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson::from_poset(self, false).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PosetJson::deserialize(d)?
            .to_poset()
            .map_err(serde::de::Error::custom)
    }
}
