use serde::Serialize;

use super::core::{core_witness, is_core};
use super::RegularInstance;
use crate::poset::width;

/// `(p(i), s(i))`, 1-based, computed over `A_1..A_{i-1}`.
pub fn derive_ps(inst: &RegularInstance, i: usize) -> (Option<usize>, Option<usize>) {
    ps_with(&inst.dominance(), i)
}

pub(crate) fn ps_with(dom: &[Vec<bool>], i: usize) -> (Option<usize>, Option<usize>) {
    let me = i - 1;
    let below: Vec<usize> = (0..me).filter(|&j| dom[j][me] && !dom[me][j]).collect();
    let above: Vec<usize> = (0..me).filter(|&j| dom[me][j] && !dom[j][me]).collect();
    let p = below.iter().copied().find(|&j| below.iter().all(|&k| dom[k][j]));
    let s = above.iter().copied().find(|&j| above.iter().all(|&k| dom[j][k]));
    (p.map(|j| j + 1), s.map(|j| j + 1))
}

/// One failed regularity condition, with witnesses. Antichain indices are
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum Violation {
    /// The poset's width differs from the declared `w`.
    Width { declared: usize, actual: usize },
    /// `A_index` does not have `w` elements.
    Size { index: usize, len: usize },
    /// (R1): `vertex` lies in no antichain.
    R1 { vertex: usize },
    /// (R2): `vertex` lies in both `A_first` and `A_second`.
    R2 { vertex: usize, first: usize, second: usize },
    /// (R3): `A_i` and `A_j` are ⊑-incomparable.
    R3 { i: usize, j: usize },
    /// (R4): the pair `A_lower`, `A_upper` is no core; `edge` names a cross
    /// comparability outside every perfect matching when there is one.
    R4 { i: usize, lower: usize, upper: usize, edge: Option<(usize, usize)> },
    /// (R5): `x < y` with no witness in the required neighbour layer.
    R5 { x: usize, y: usize, i: usize, j: usize },
}

impl Violation {
    pub fn condition(&self) -> &'static str {
        match self {
            Violation::Width { .. } => "width",
            Violation::Size { .. } => "size",
            Violation::R1 { .. } => "R1",
            Violation::R2 { .. } => "R2",
            Violation::R3 { .. } => "R3",
            Violation::R4 { .. } => "R4",
            Violation::R5 { .. } => "R5",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RegularVerdict {
    pub violations: Vec<Violation>,
}

impl RegularVerdict {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, condition: &str) -> bool {
        self.violations.iter().any(|v| v.condition() == condition)
    }
}

/// Checks (R1)–(R5), width and layer sizes. (R4) and (R5) are evaluated
/// against `p(i)`, `s(i)` as they stand when `A_i` is presented.
pub fn verify_regular(inst: &RegularInstance) -> RegularVerdict {
    let p = inst.poset();
    let n = inst.len();
    let mut out = Vec::new();
    let actual = width(p);
    if actual != inst.w() {
        out.push(Violation::Width { declared: inst.w(), actual });
    }
    for (i, a) in inst.antichains().iter().enumerate() {
        if a.len() != inst.w() {
            out.push(Violation::Size { index: i + 1, len: a.len() });
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; p.len()];
    for (i, a) in inst.antichains().iter().enumerate() {
        for v in a.iter() {
            match owner[v] {
                Some(first) => out.push(Violation::R2 { vertex: v, first, second: i + 1 }),
                None => owner[v] = Some(i + 1),
            }
        }
    }
    out.extend(p.vertices().filter(|&v| owner[v].is_none()).map(|vertex| Violation::R1 { vertex }));
    let dom = inst.dominance();
    for i in 0..n {
        for j in i + 1..n {
            if !dom[i][j] && !dom[j][i] {
                out.push(Violation::R3 { i: i + 1, j: j + 1 });
            }
        }
    }
    for i in 1..=n {
        let (pi, si) = ps_with(&dom, i);
        let ai = inst.antichain(i).members();
        for (lower, upper) in [(Some(i), si), (pi, Some(i))] {
            let (Some(lo), Some(hi)) = (lower, upper) else { continue };
            let (a, b) = (inst.antichain(lo).members(), inst.antichain(hi).members());
            if is_core(p, a, b) != Ok(true) {
                let edge = if a.len() == b.len() { core_witness(p, a, b) } else { None };
                out.push(Violation::R4 { i, lower: lo, upper: hi, edge });
            }
        }
        // comparabilities between A_i and earlier layers
        for j in 1..i {
            for x in ai.iter().copied() {
                for y in inst.antichain(j).iter() {
                    if p.less(x, y) {
                        let ok = si.is_some_and(|s| {
                            inst.antichain(s).iter().any(|z| p.less(x, z) && p.leq(z, y))
                        });
                        if !ok {
                            out.push(Violation::R5 { x, y, i, j });
                        }
                    } else if p.less(y, x) {
                        let ok = pi.is_some_and(|q| {
                            inst.antichain(q).iter().any(|z| p.leq(y, z) && p.less(z, x))
                        });
                        if !ok {
                            out.push(Violation::R5 { x: y, y: x, i: j, j: i });
                        }
                    }
                }
            }
        }
    }
    RegularVerdict { violations: out }
}

/// A pair `x ≤ y` between `A_r` and `A_s` with no `z ∈ A_t` in between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P7Failure {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub x: usize,
    pub y: usize,
}

/// Results of the pairwise-core and middle-witness checks. The middle
/// layer `A_t` is chosen two ways: earliest presented within `[A_t, A_s]`
/// (`p7_upper`) and within `[A_r, A_t]` (`p7_lower`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct P67Verdict {
    pub p6: Vec<(usize, usize)>,
    pub p7_upper: Vec<P7Failure>,
    pub p7_lower: Vec<P7Failure>,
}

impl P67Verdict {
    pub fn passes(&self) -> bool {
        self.p6.is_empty() && self.p7_upper.is_empty() && self.p7_lower.is_empty()
    }
}

pub fn verify_p6_p7(inst: &RegularInstance) -> P67Verdict {
    let p = inst.poset();
    let n = inst.len();
    let dom = &inst.dominance();
    let strict = |a: usize, b: usize| dom[a][b] && !dom[b][a];
    let mut out = P67Verdict::default();
    for r in 0..n {
        for s in 0..n {
            if !strict(r, s) {
                continue;
            }
            let (ar, as_) = (inst.antichains()[r].members(), inst.antichains()[s].members());
            if is_core(p, ar, as_) != Ok(true) {
                out.p6.push((r + 1, s + 1));
            }
            let between = |lo: usize, hi: usize| (0..n).filter(move |&k| dom[lo][k] && dom[k][hi]);
            for t in between(r, s) {
                let upper = between(t, s).all(|k| k >= t);
                let lower = between(r, t).all(|k| k >= t);
                if !upper && !lower {
                    continue;
                }
                let at = inst.antichains()[t].members();
                for x in ar.iter().copied() {
                    for y in as_.iter().copied() {
                        if !p.leq(x, y) || at.iter().any(|&z| p.leq(x, z) && p.leq(z, y)) {
                            continue;
                        }
                        let f = P7Failure { r: r + 1, s: s + 1, t: t + 1, x, y };
                        if upper {
                            out.p7_upper.push(f.clone());
                        }
                        if lower {
                            out.p7_lower.push(f);
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn two_layers() -> RegularInstance {
        let p = Poset::new(4, &[(0, 2), (1, 3)]).unwrap();
        RegularInstance::new(p, vec![vec![0, 1], vec![2, 3]], 2).unwrap()
    }

    #[test]
    fn first_layer_has_no_neighbours() {
        assert_eq!(derive_ps(&two_layers(), 1), (None, None));
        assert_eq!(derive_ps(&two_layers(), 2), (Some(1), None));
    }

    #[test]
    fn matching_layers_are_regular() {
        let inst = two_layers();
        assert!(verify_regular(&inst).passes());
        assert!(verify_p6_p7(&inst).passes());
    }

    #[test]
    fn single_antichain_is_trivially_regular() {
        let inst = RegularInstance::new(Poset::antichain(2), vec![vec![0, 1]], 2).unwrap();
        assert!(verify_regular(&inst).passes());
        assert!(verify_p6_p7(&inst).passes());
    }

    #[test]
    fn broken_conditions_are_named() {
        let p = Poset::new(4, &[(0, 2), (0, 3), (1, 3)]).unwrap();
        let inst = RegularInstance::new(p, vec![vec![0, 1], vec![2, 3]], 2).unwrap();
        let v = verify_regular(&inst);
        assert!(v.fails("R4"));
        assert!(v.violations.contains(&Violation::R4 { i: 2, lower: 1, upper: 2, edge: Some((0, 3)) }));

        let inst = RegularInstance::new(Poset::antichain(3), vec![vec![0, 1], vec![1, 2]], 2).unwrap();
        let v = verify_regular(&inst);
        assert!(v.fails("R2"));
        assert!(v.fails("width"));

        let inst = RegularInstance::new(Poset::chain(3), vec![vec![0], vec![2]], 1).unwrap();
        let v = verify_regular(&inst);
        assert_eq!(v.violations, vec![Violation::R1 { vertex: 1 }]);
    }

    #[test]
    fn shortcut_past_the_middle_layer_breaks_r5() {
        let p = Poset::new(6, &[(0, 2), (1, 3), (2, 4), (3, 5), (0, 5)]).unwrap();
        let inst = RegularInstance::new(p, vec![vec![0, 1], vec![2, 3], vec![4, 5]], 2).unwrap();
        let v = verify_regular(&inst);
        assert_eq!(v.violations, vec![Violation::R5 { x: 0, y: 5, i: 1, j: 3 }]);
        assert_eq!(derive_ps(&inst, 3), (Some(2), None));
    }
}
