use serde::{Deserialize, Serialize};

use super::OnlineInstance;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::{width, Poset};

/// A vertex coloring with colors `1..=n_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrundyColoring {
    color: Vec<usize>,
    n_colors: usize,
}

impl GrundyColoring {
    pub fn new(color: Vec<usize>) -> Self {
        let n_colors = color.iter().copied().max().unwrap_or(0);
        Self { color, n_colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.color
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.color[v]
    }

    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    /// Color classes `P_1, …, P_n`, each ascending by id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_colors];
        for (v, &c) in self.color.iter().enumerate() {
            if c >= 1 {
                out[c - 1].push(v);
            }
        }
        out
    }
}

/// Outcome of checking (G1)–(G3), naming the first failed condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition")]
pub enum GrundyVerdict {
    Valid,
    /// Wrong length or a color outside `1..`.
    Malformed { reason: String },
    /// (G1): two incomparable vertices share a color.
    G1 { color: usize, u: usize, v: usize },
    /// (G2): a color below the maximum is unused.
    G2 { color: usize },
    /// (G3): `vertex` sees no incomparable vertex of `color`.
    G3 { vertex: usize, color: usize },
}

impl GrundyVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, GrundyVerdict::Valid)
    }

    pub fn condition(&self) -> &'static str {
        match self {
            GrundyVerdict::Valid => "ok",
            GrundyVerdict::Malformed { .. } => "shape",
            GrundyVerdict::G1 { .. } => "G1",
            GrundyVerdict::G2 { .. } => "G2",
            GrundyVerdict::G3 { .. } => "G3",
        }
    }
}

pub fn verify_grundy(poset: &Poset, g: &GrundyColoring) -> GrundyVerdict {
    let n = poset.len();
    if g.color.len() != n {
        return GrundyVerdict::Malformed {
            reason: format!("{} colors for {} vertices", g.color.len(), n),
        };
    }
    if let Some(v) = (0..n).find(|&v| g.color[v] == 0) {
        return GrundyVerdict::Malformed {
            reason: format!("vertex {v} has color 0"),
        };
    }
    let classes = g.classes();
    for (i, class) in classes.iter().enumerate() {
        for (a, &u) in class.iter().enumerate() {
            if let Some(&v) = class[a + 1..].iter().find(|&&v| poset.incomparable(u, v)) {
                return GrundyVerdict::G1 { color: i + 1, u, v };
            }
        }
    }
    if let Some(i) = classes.iter().position(Vec::is_empty) {
        return GrundyVerdict::G2 { color: i + 1 };
    }
    for v in 0..n {
        for i in 1..g.color[v] {
            if !classes[i - 1].iter().any(|&u| poset.incomparable(u, v)) {
                return GrundyVerdict::G3 { vertex: v, color: i };
            }
        }
    }
    GrundyVerdict::Valid
}

/// First-Fit over an arbitrary vertex order (need not cover every vertex;
/// unpresented vertices get color 0).
pub fn first_fit_order(poset: &Poset, order: &[usize]) -> GrundyColoring {
    let n = poset.len();
    let mut color = vec![0; n];
    let mut chains: Vec<BitSet> = Vec::new();
    for &v in order {
        let mut comparable = poset.up_set(v).clone();
        comparable.union_with(poset.down_set(v));
        let j = match chains.iter().position(|c| c.is_subset(&comparable)) {
            Some(j) => j,
            None => {
                chains.push(BitSet::new(n));
                chains.len() - 1
            }
        };
        chains[j].insert(v);
        color[v] = j + 1;
    }
    GrundyColoring::new(color)
}

pub fn first_fit(instance: &OnlineInstance) -> GrundyColoring {
    first_fit_order(instance.poset(), instance.presentation())
}

/// Presents color class 1 first, then class 2, and so on; ascending id
/// inside a class. First-Fit on the result reproduces `g`.
pub fn grundy_to_presentation(poset: &Poset, g: &GrundyColoring) -> Result<OnlineInstance> {
    let verdict = verify_grundy(poset, g);
    if !verdict.holds() {
        return Err(Error::InvalidGrundy(format!("{verdict:?}")));
    }
    let order: Vec<usize> = g.classes().concat();
    OnlineInstance::new(poset.clone(), order, width(poset))
}
