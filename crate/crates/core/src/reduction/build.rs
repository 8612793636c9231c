//! Labeled points `(u, A_i)` with the relations `≤_U` and `≤_R`.

use crate::bitset::BitMatrix;
use crate::error::{Error, Result};
use crate::poset::matching::{edge_in_perfect_matching, max_matching};
use crate::poset::{width, Antichain, Poset};
use crate::regular::{is_core, RegularInstance};

/// The growing structure `(U, ≤_U, ≤_R, B_1..B_n)`. Point ids are
/// assigned in block order; inside a block, in ascending vertex id.
#[derive(Debug, Clone)]
pub struct RegularBuild {
    w: usize,
    antichains: Vec<Antichain>,
    /// `(vertex, block)` per point, block 0-based.
    points: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    /// `dom[i][j]` iff `A_i ⊑ A_j`.
    dom: Vec<Vec<bool>>,
    u: BitMatrix,
    r: BitMatrix,
    /// `(p, s)` of each block, 0-based, as fixed at insertion.
    neighbours: Vec<(Option<usize>, Option<usize>)>,
}

impl RegularBuild {
    pub fn new(w: usize) -> Self {
        Self {
            w,
            antichains: Vec::new(),
            points: Vec::new(),
            blocks: Vec::new(),
            dom: Vec::new(),
            u: BitMatrix::new(0),
            r: BitMatrix::new(0),
            neighbours: Vec::new(),
        }
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    /// Points of `B_i` (0-based block index).
    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    /// `(vertex, block)` of a point.
    pub fn point(&self, a: usize) -> (usize, usize) {
        self.points[a]
    }

    pub fn u_less(&self, a: usize, b: usize) -> bool {
        self.u.get(a, b)
    }

    pub fn r_less(&self, a: usize, b: usize) -> bool {
        self.r.get(a, b)
    }

    /// Points `≤_R`-comparable to `a`, `a` included.
    pub fn r_comparable(&self, a: usize) -> crate::bitset::BitSet {
        let mut c = self.r.column(a);
        c.union_with(self.r.row(a));
        c.insert(a);
        c
    }

    /// `(p(i), s(i))` of block `i`, 0-based.
    pub fn neighbours(&self, i: usize) -> (Option<usize>, Option<usize>) {
        self.neighbours[i]
    }

    /// Adds `B_i = {(u, A_i) : u ∈ A_i}`. `poset` must contain every
    /// vertex of every block so far with unchanged relations among them.
    /// Returns the new block index.
    pub fn push(&mut self, poset: &Poset, antichain: Antichain) -> Result<usize> {
        let i = self.blocks.len();
        let step = i + 1;
        if let Some(j) = self.antichains.iter().position(|a| *a == antichain) {
            return Err(violated(step, format!("A_{step} repeats A_{}", j + 1)));
        }
        for row in self.dom.iter_mut() {
            row.push(false);
        }
        let mut row = Vec::with_capacity(i + 1);
        for (j, a) in self.antichains.iter().enumerate() {
            row.push(antichain.dominated_by(poset, a));
            self.dom[j][i] = a.dominated_by(poset, &antichain);
        }
        row.push(true);
        self.dom.push(row);
        self.antichains.push(antichain);

        let mut block = Vec::with_capacity(self.w);
        for v in self.antichains[i].iter() {
            let a = self.u.push();
            self.r.push();
            self.points.push((v, i));
            block.push(a);
        }
        self.blocks.push(block);
        self.extend_u(poset, i);
        let (p, s) = crate::regular::verify::ps_with(&self.dom, i + 1);
        let (p, s) = (p.map(|x| x - 1), s.map(|x| x - 1));
        self.neighbours.push((p, s));
        self.extend_r(i, p, s)?;
        Ok(i)
    }

    fn extend_u(&mut self, poset: &Poset, i: usize) {
        let new = self.blocks[i].clone();
        for &a in &new {
            let (u, _) = self.points[a];
            for b in 0..self.points.len() {
                let (v, j) = self.points[b];
                if j == i {
                    continue;
                }
                if poset.leq(u, v) && self.dom[i][j] {
                    self.u.set(a, b, true);
                }
                if poset.leq(v, u) && self.dom[j][i] {
                    self.u.set(b, a, true);
                }
            }
        }
    }

    /// Cross graph of `lower → upper` under `≤_U`, as adjacency by position.
    fn cross(&self, lower: usize, upper: usize) -> Vec<Vec<usize>> {
        let up = &self.blocks[upper];
        self.blocks[lower]
            .iter()
            .map(|&a| (0..up.len()).filter(|&k| self.u.get(a, up[k])).collect())
            .collect()
    }

    /// Dilworth edges of the bipartite pair, as point pairs.
    fn dilworth_edges(&self, lower: usize, upper: usize, step: usize) -> Result<Vec<(usize, usize)>> {
        let adj = self.cross(lower, upper);
        let k = self.blocks[upper].len();
        if adj.len() != k || max_matching(k, &adj).size != k {
            return Err(violated(
                step,
                format!("(B_{}, B_{}, ≤_U) has no perfect matching", lower + 1, upper + 1),
            ));
        }
        let mut out = Vec::new();
        for (x, ns) in adj.iter().enumerate() {
            for &y in ns {
                if edge_in_perfect_matching(k, &adj, x, y) {
                    out.push((self.blocks[lower][x], self.blocks[upper][y]));
                }
            }
        }
        Ok(out)
    }

    fn extend_r(&mut self, i: usize, p: Option<usize>, s: Option<usize>) -> Result<()> {
        let step = i + 1;
        let new = self.blocks[i].clone();
        if let Some(s) = s {
            for (a, b) in self.dilworth_edges(i, s, step)? {
                self.r.set(a, b, true);
            }
        }
        if let Some(p) = p {
            for (a, b) in self.dilworth_edges(p, i, step)? {
                self.r.set(a, b, true);
            }
        }
        // everything else only through B_s (upwards) or B_p (downwards)
        for &a in &new {
            if let Some(s) = s {
                let mut up = crate::bitset::BitSet::new(self.points.len());
                for &z in &self.blocks[s] {
                    if self.r.get(a, z) {
                        up.union_with(self.r.row(z));
                    }
                }
                self.r.row_mut(a).union_with(&up);
            }
            if let Some(p) = p {
                for &z in &self.blocks[p] {
                    if self.r.get(z, a) {
                        for c in self.r.column(z).iter().collect::<Vec<_>>() {
                            self.r.set(c, a, true);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `(U, ≤_U)` as a poset on point ids.
    pub fn u_poset(&self) -> Poset {
        Poset::from_closed(self.u.clone())
    }

    /// `(U, ≤_R)` as a poset on point ids.
    pub fn r_poset(&self) -> Poset {
        Poset::from_closed(self.r.clone())
    }

    /// `((U, ≤_R), B_1, …, B_n)`.
    pub fn to_regular_instance(&self) -> Result<RegularInstance> {
        RegularInstance::new(self.r_poset(), self.blocks.clone(), self.w)
    }

    /// Runtime checks after the latest block: `≤_R ⊆ ≤_U`, `≤_R`
    /// transitively closed, the new block forms cores with its neighbours
    /// under `≤_R`, `(U, ≤_U)` has width `w` with every block maximum, and
    /// `≤_U` is irreflexive and antisymmetric.
    pub fn check_latest(&self) -> Result<()> {
        let i = self.blocks.len() - 1;
        let step = i + 1;
        let n = self.points.len();
        for a in 0..n {
            if self.u.get(a, a) || self.r.get(a, a) {
                return Err(violated(step, format!("point {a} is below itself")));
            }
            let mut extra = self.r.row(a).clone();
            extra.difference_with(self.u.row(a));
            if let Some(b) = extra.iter().next() {
                return Err(violated(step, format!("≤_R ⊄ ≤_U at ({a}, {b})")));
            }
            if let Some(b) = self.u.row(a).iter().find(|&b| self.u.get(b, a)) {
                return Err(violated(step, format!("≤_U not antisymmetric at ({a}, {b})")));
            }
        }
        let mut closed = self.r.clone();
        closed.transitive_closure();
        if closed != self.r {
            return Err(violated(step, "≤_R is not transitively closed".into()));
        }
        let mut u_closed = self.u.clone();
        u_closed.transitive_closure();
        if u_closed != self.u {
            return Err(violated(step, "≤_U is not transitively closed".into()));
        }
        let r = self.r_poset();
        let (p, s) = self.neighbours[i];
        for (lo, hi) in [(Some(i), s), (p, Some(i))] {
            if let (Some(lo), Some(hi)) = (lo, hi) {
                if is_core(&r, &self.blocks[lo], &self.blocks[hi]) != Ok(true) {
                    return Err(violated(
                        step,
                        format!("(B_{}, B_{}, ≤_R) is not a core", lo + 1, hi + 1),
                    ));
                }
            }
        }
        let u = self.u_poset();
        let wu = width(&u);
        if wu != self.w {
            return Err(violated(step, format!("(U, ≤_U) has width {wu}")));
        }
        if let Some(j) = self.blocks.iter().position(|b| b.len() != self.w || !u.is_antichain(b)) {
            return Err(violated(step, format!("B_{} is not a maximum antichain of U", j + 1)));
        }
        Ok(())
    }
}

fn violated(step: usize, claim: String) -> Error {
    Error::InvariantViolated { step, claim }
}
