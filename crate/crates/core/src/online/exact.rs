//! Exact First-Fit chromatic numbers for small posets.
//!
//! Two independent routes: a search over every presentation order, and a
//! memoised search over Grundy colorings in which the first color class
//! must be a maximal chain of what remains.

use std::collections::HashSet;

use rayon::prelude::*;

use super::GrundyColoring;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest poset handled by the presentation search.
pub const EXHAUSTIVE_LIMIT: usize = 9;
/// Largest poset handled by the Grundy search.
pub const GRUNDY_LIMIT: usize = 16;

/// `χ_FF(P)`: presentation search up to [`EXHAUSTIVE_LIMIT`], Grundy search
/// up to [`GRUNDY_LIMIT`].
pub fn chi_ff_exact(poset: &Poset) -> Result<usize> {
    if poset.len() <= EXHAUSTIVE_LIMIT {
        chi_ff_exhaustive(poset)
    } else {
        grundy_number(poset).map(|g| g.n_colors())
    }
}

/// Maximum First-Fit color count over all presentations.
pub fn chi_ff_exhaustive(poset: &Poset) -> Result<usize> {
    let n = poset.len();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge { n, limit: EXHAUSTIVE_LIMIT });
    }
    if n == 0 {
        return Ok(0);
    }
    // incomparability masks
    let inc: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| poset.incomparable(u, v)).fold(0, |m, u| m | 1 << u))
        .collect();
    let best = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut search = Presentations {
                inc: &inc,
                colors: vec![0u8; n],
                seen: HashSet::new(),
                best: 0,
            };
            search.place(first);
            search.dfs(1);
            search.best
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

struct Presentations<'a> {
    inc: &'a [u32],
    colors: Vec<u8>,
    seen: HashSet<u64>,
    best: usize,
}

impl Presentations<'_> {
    fn place(&mut self, v: usize) {
        let mut used = 0u32;
        let mut m = self.inc[v];
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.colors[u] != 0 {
                used |= 1 << self.colors[u];
            }
        }
        // least color (from 1) with no incomparable member
        self.colors[v] = (!(used | 1)).trailing_zeros() as u8;
    }

    fn key(&self) -> u64 {
        self.colors.iter().enumerate().fold(0, |k, (v, &c)| k | (c as u64) << (4 * v))
    }

    fn dfs(&mut self, placed: usize) {
        let n = self.colors.len();
        if !self.seen.insert(self.key()) {
            return;
        }
        let used = *self.colors.iter().max().unwrap() as usize;
        if placed == n {
            self.best = self.best.max(used);
            return;
        }
        // every further vertex adds at most one color
        if used + (n - placed) <= self.best {
            return;
        }
        for v in 0..n {
            if self.colors[v] == 0 {
                self.place(v);
                self.dfs(placed + 1);
                self.colors[v] = 0;
            }
        }
    }
}

/// A Grundy coloring with the most colors (so `n_colors = χ_FF(P)`).
pub fn grundy_number(poset: &Poset) -> Result<GrundyColoring> {
    let n = poset.len();
    if n > GRUNDY_LIMIT {
        return Err(Error::TooLarge { n, limit: GRUNDY_LIMIT });
    }
    let mut g = GrundySearch::new(poset);
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let best = g.gamma(full);
    let mut color = vec![0; n];
    let mut rest = full;
    for c in 1..=best {
        let target = best - c;
        let mut chosen = None;
        g.for_each_maximal_chain(rest, &mut |chain, search| {
            if search.gamma(rest & !chain) == target {
                chosen = Some(chain);
                false
            } else {
                true
            }
        });
        let chain = chosen.expect("memoised value has a realising chain");
        for (v, slot) in color.iter_mut().enumerate() {
            if chain >> v & 1 == 1 {
                *slot = c as usize;
            }
        }
        rest &= !chain;
    }
    Ok(GrundyColoring::new(color))
}

struct GrundySearch {
    n: usize,
    less: Vec<u32>,
    memo: Vec<u8>,
}

const UNKNOWN: u8 = u8::MAX;

impl GrundySearch {
    fn new(poset: &Poset) -> Self {
        let n = poset.len();
        let less = (0..n)
            .map(|u| poset.up_set(u).iter().fold(0, |m, v| m | 1 << v))
            .collect();
        Self {
            n,
            less,
            memo: vec![UNKNOWN; 1 << n],
        }
    }

    fn gamma(&mut self, set: u32) -> u8 {
        if set == 0 {
            return 0;
        }
        if self.memo[set as usize] != UNKNOWN {
            return self.memo[set as usize];
        }
        let mut best = 0u8;
        let size = set.count_ones() as u8;
        self.for_each_maximal_chain(set, &mut |chain, search| {
            let g = 1 + search.gamma(set & !chain);
            best = best.max(g);
            best < size
        });
        self.memo[set as usize] = best;
        best
    }

    /// Maximal chains of the subposet on `set` are exactly the cover paths
    /// from a minimal to a maximal element.
    fn for_each_maximal_chain(&mut self, set: u32, visit: &mut dyn FnMut(u32, &mut Self) -> bool) {
        let minimal: Vec<usize> = (0..self.n)
            .filter(|&v| set >> v & 1 == 1 && (0..self.n).all(|u| set >> u & 1 == 0 || self.less[u] >> v & 1 == 0))
            .collect();
        for m in minimal {
            if !self.walk(set, m, 1 << m, visit) {
                return;
            }
        }
    }

    fn walk(&mut self, set: u32, top: usize, chain: u32, visit: &mut dyn FnMut(u32, &mut Self) -> bool) -> bool {
        let above = self.less[top] & set;
        if above == 0 {
            return visit(chain, self);
        }
        let mut m = above;
        while m != 0 {
            let y = m.trailing_zeros() as usize;
            m &= m - 1;
            // y covers top inside set iff nothing in `above` lies below y
            let mut between = above;
            let mut is_cover = true;
            while between != 0 {
                let z = between.trailing_zeros() as usize;
                between &= between - 1;
                if self.less[z] >> y & 1 == 1 {
                    is_cover = false;
                    break;
                }
            }
            if is_cover && !self.walk(set, y, chain | 1 << y, visit) {
                return false;
            }
        }
        true
    }
}
