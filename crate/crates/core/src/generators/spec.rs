use serde::{Deserialize, Serialize};

use super::{gen_core, gen_ladder, gen_qk, gen_qk_padded, gen_regular_with_ladder, gen_rn, CoreKind, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::online::{GrundyColoring, OnlineInstance};
use crate::poset::{LadderEmbedding, Poset};
use crate::regular::RegularInstance;

/// A named generator with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Rn { n: usize },
    Ladder { m: usize },
    CoreI { w: usize },
    CoreS { w: usize, k: usize },
    CoreT { w: usize, k: usize },
    RegularLadder { w: usize },
    Qk { m: usize, k: usize, pad_to: Option<usize> },
}

/// Generator output, one variant per file schema.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Generated {
    Online(OnlineInstance),
    Poset(Poset),
    Regular { instance: RegularInstance, ladder: LadderEmbedding },
    Colored { poset: Poset, coloring: GrundyColoring },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Generated> {
        Ok(match *self {
            GeneratorSpec::Rn { n } => {
                if n == 0 {
                    return Err(Error::BadParameters("R_n needs n >= 1".into()));
                }
                Generated::Online(gen_rn(n))
            }
            GeneratorSpec::Ladder { m } => {
                if m == 0 {
                    return Err(Error::BadParameters("L_m needs m >= 1".into()));
                }
                Generated::Poset(gen_ladder(m))
            }
            GeneratorSpec::CoreI { w } => Generated::Poset(gen_core(CoreKind::I, w)?),
            GeneratorSpec::CoreS { w, k } => Generated::Poset(gen_core(CoreKind::S(k), w)?),
            GeneratorSpec::CoreT { w, k } => Generated::Poset(gen_core(CoreKind::T(k), w)?),
            GeneratorSpec::RegularLadder { w } => {
                let (instance, ladder) = gen_regular_with_ladder(w)?;
                Generated::Regular { instance, ladder }
            }
            GeneratorSpec::Qk { m, k, pad_to } => {
                let (poset, coloring) = match pad_to {
                    Some(t) => gen_qk_padded(m, k, t, DEFAULT_SIZE_CAP)?,
                    None => gen_qk(m, k, DEFAULT_SIZE_CAP)?,
                };
                Generated::Colored { poset, coloring }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse_from_json() {
        let s: GeneratorSpec = serde_json::from_str(r#"{"kind":"core-s","w":4,"k":2}"#).unwrap();
        assert_eq!(s, GeneratorSpec::CoreS { w: 4, k: 2 });
        assert!(matches!(s.generate().unwrap(), Generated::Poset(_)));
        let bad = GeneratorSpec::CoreT { w: 2, k: 3 };
        assert_eq!(bad.generate().unwrap_err(), Error::BadK { k: 3, w: 2 });
    }
}
