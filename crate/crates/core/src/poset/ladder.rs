//! Induced ladder search.
//!
//! A ladder `L_m` has legs `x_1 < … < x_m` and `y_1 < … < y_m` with
//! `x_i < y_j` iff `i ≤ j` and `y_i ∥ x_j` for `i < j`. A rung sequence
//! extends by `(x, y)` iff `x_k < x`, `y_k < y`, `x < y`, `x ∥ y_k` and
//! `y_1 ≮ x`, so for a fixed top-of-first-rung `y_1` the longest ladder is
//! a longest path over rung pairs, computed along a linear extension.

use serde::{Deserialize, Serialize};

use super::Poset;

/// Rungs `(lower, upper)` listed bottom-up.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LadderEmbedding {
    pub rungs: Vec<(usize, usize)>,
}

impl LadderEmbedding {
    pub fn len(&self) -> usize {
        self.rungs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rungs.is_empty()
    }

    /// Whether the listed vertices induce `L_m` with these legs.
    pub fn is_valid_in(&self, poset: &Poset) -> bool {
        let n = poset.len();
        let r = &self.rungs;
        if r.iter().any(|&(x, y)| x >= n || y >= n) {
            return false;
        }
        for i in 0..r.len() {
            let (xi, yi) = r[i];
            if !poset.less(xi, yi) {
                return false;
            }
            for &(xj, yj) in &r[i + 1..] {
                let ok = poset.less(xi, xj)
                    && poset.less(yi, yj)
                    && poset.less(xi, yj)
                    && poset.incomparable(yi, xj);
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.rungs.iter().flat_map(|&(x, y)| [x, y]).collect()
    }
}

type Filter<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;

/// Configurable longest-ladder search.
pub struct LadderSearch<'a> {
    poset: &'a Poset,
    cap: usize,
    filter: Option<Filter<'a>>,
}

/// Largest `m ≤ cap` such that `L_m` is an induced subposet, with a witness.
pub fn find_max_ladder(poset: &Poset, cap: usize) -> (usize, LadderEmbedding) {
    LadderSearch::new(poset).cap(cap).run()
}

impl<'a> LadderSearch<'a> {
    pub fn new(poset: &'a Poset) -> Self {
        Self {
            poset,
            cap: usize::MAX,
            filter: None,
        }
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Only allow consecutive rungs whose previous upper vertex `y` and next
    /// lower vertex `x` satisfy `filter(y, x)`.
    pub fn with_transition_filter(mut self, filter: impl Fn(usize, usize) -> bool + 'a) -> Self {
        self.filter = Some(Box::new(filter));
        self
    }

    pub fn run(&self) -> (usize, LadderEmbedding) {
        let mut best = LadderEmbedding::default();
        if self.cap == 0 {
            return (0, best);
        }
        let cap = self.cap;
        let mut table = Table::new(self.poset.len());
        for y1 in self.poset.vertices() {
            let mut stop = false;
            self.sweep(y1, &mut table, &mut |t, x, y, len| {
                if len > best.len() {
                    best = t.path(x, y);
                    if best.len() >= cap {
                        best.rungs.truncate(cap);
                        stop = true;
                    }
                }
                !stop
            });
            if stop {
                break;
            }
        }
        (best.len(), best)
    }

    /// A ladder with exactly `rungs` rungs whose first upper vertex `y_1` and
    /// last lower vertex `x` satisfy `goal(y_1, x)`, if one exists.
    pub fn find_ending(&self, rungs: usize, goal: impl Fn(usize, usize) -> bool) -> Option<LadderEmbedding> {
        assert!(self.filter.is_none(), "rung deletion may break a transition filter");
        if rungs == 0 {
            return None;
        }
        let mut table = Table::new(self.poset.len());
        for y1 in self.poset.vertices() {
            let mut found = None;
            self.sweep(y1, &mut table, &mut |t, x, y, len| {
                if len >= rungs && goal(y1, x) {
                    let full = t.path(x, y);
                    let mut kept: Vec<_> = full.rungs[..rungs - 1].to_vec();
                    kept.push(*full.rungs.last().unwrap());
                    found = Some(LadderEmbedding { rungs: kept });
                    return false;
                }
                true
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Longest-path sweep for ladders whose first rung has upper vertex `y1`.
    /// `visit(table, x, y, len)` sees each reachable last rung; returning
    /// false stops the sweep.
    fn sweep(&self, y1: usize, t: &mut Table, visit: &mut dyn FnMut(&Table, usize, usize, usize) -> bool) {
        let p = self.poset;
        let n = p.len();
        if p.down_set(y1).is_empty() {
            return;
        }
        t.clear();
        let mut ys: Vec<usize> = p.up_set(y1).iter().collect();
        ys.push(y1);
        for x in p.down_set(y1).iter() {
            t.set(x, y1, 1, NONE);
            if !visit(t, x, y1, 1) {
                return;
            }
        }
        let mut via = vec![(0u32, NONE); n];
        for xn in p.linear_extension() {
            if p.less(y1, xn) || xn == y1 {
                continue;
            }
            // best ladder ending at (x, y) with x < xn, per y
            let mut any = false;
            for &y in &ys {
                via[y] = (0, NONE);
            }
            for x in p.down_set(xn).iter() {
                for &y in &ys {
                    let len = t.len(x, y);
                    if len > via[y].0 {
                        via[y] = (len, x);
                        any = true;
                    }
                }
            }
            if !any {
                continue;
            }
            for yn in p.up_set(xn).iter() {
                if !p.less(y1, yn) {
                    continue;
                }
                let mut best = (0u32, NONE, NONE);
                for &y in &ys {
                    let (len, x) = via[y];
                    if len > best.0
                        && p.less(y, yn)
                        && p.incomparable(y, xn)
                        && self.filter.as_ref().is_none_or(|f| f(y, xn))
                    {
                        best = (len, x, y);
                    }
                }
                if best.0 > 0 {
                    let len = best.0 + 1;
                    t.set(xn, yn, len, best.1 * n + best.2);
                    if !visit(t, xn, yn, len as usize) {
                        return;
                    }
                }
            }
        }
    }
}

const NONE: usize = usize::MAX;

struct Table {
    n: usize,
    len: Vec<u32>,
    pred: Vec<usize>,
}

impl Table {
    fn new(n: usize) -> Self {
        Self {
            n,
            len: vec![0; n * n],
            pred: vec![NONE; n * n],
        }
    }

    fn clear(&mut self) {
        self.len.fill(0);
    }

    #[inline]
    fn len(&self, x: usize, y: usize) -> u32 {
        self.len[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, len: u32, pred: usize) {
        self.len[x * self.n + y] = len;
        self.pred[x * self.n + y] = pred;
    }

    fn path(&self, x: usize, y: usize) -> LadderEmbedding {
        let mut rungs = vec![(x, y)];
        let mut cur = self.pred[x * self.n + y];
        while cur != NONE {
            let (px, py) = (cur / self.n, cur % self.n);
            rungs.push((px, py));
            cur = self.pred[cur];
        }
        rungs.reverse();
        LadderEmbedding { rungs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ladder(m: usize) -> Poset {
        let mut rel = Vec::new();
        for i in 0..m {
            rel.push((i, m + i));
            if i + 1 < m {
                rel.push((i, i + 1));
                rel.push((m + i, m + i + 1));
            }
        }
        Poset::new(2 * m, &rel).unwrap()
    }

    #[test]
    fn antichain_has_no_ladder() {
        assert_eq!(find_max_ladder(&Poset::antichain(4), 10).0, 0);
        assert_eq!(find_max_ladder(&Poset::antichain(0), 10).0, 0);
    }

    #[test]
    fn chain_has_one_rung() {
        let (m, w) = find_max_ladder(&Poset::chain(5), 10);
        assert_eq!(m, 1);
        assert!(w.is_valid_in(&Poset::chain(5)));
    }

    #[test]
    fn identity_ladder() {
        let p = ladder(7);
        let (m, w) = find_max_ladder(&p, 100);
        assert_eq!(m, 7);
        assert!(w.is_valid_in(&p));
        let (m, w) = find_max_ladder(&p, 3);
        assert_eq!(m, 3);
        assert!(w.is_valid_in(&p));
    }

    #[test]
    fn invalid_embeddings_are_rejected() {
        let p = ladder(3);
        // x_2 = 1 lies below y_1 = 4
        let bad = LadderEmbedding { rungs: vec![(0, 4), (1, 5)] };
        assert!(!bad.is_valid_in(&p));
        let skipped = LadderEmbedding { rungs: vec![(0, 3), (2, 5)] };
        assert!(skipped.is_valid_in(&p));
    }
}
