//! Brute-force oracles, written without the library's algorithms.

#![allow(dead_code)]

use chainpart::poset::Poset;
use rand::Rng;

/// Random poset on `n` vertices: each pair `i < j` related with probability `p`.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, p: f64) -> Poset {
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                rel.push((i, j));
            }
        }
    }
    Poset::new(n, &rel).unwrap()
}

pub fn poset_from_bits(n: usize, bits: &[bool]) -> Poset {
    let mut rel = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                rel.push((i, j));
            }
            k += 1;
        }
    }
    Poset::new(n, &rel).unwrap()
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn is_antichain(p: &Poset, set: &[usize]) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| a == b || p.incomparable(a, b)))
}

fn is_chain(p: &Poset, set: &[usize]) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| a == b || p.comparable(a, b)))
}

pub fn brute_width(p: &Poset) -> usize {
    (0u32..1 << p.len())
        .map(members)
        .filter(|s| is_antichain(p, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// All maximum antichains, each sorted, in lexicographic order.
pub fn brute_maximum_antichains(p: &Poset) -> Vec<Vec<usize>> {
    let w = brute_width(p);
    let mut out: Vec<Vec<usize>> = (0u32..1 << p.len())
        .map(members)
        .filter(|s| s.len() == w && is_antichain(p, s))
        .collect();
    out.sort();
    out
}

/// Every partition of the vertices into exactly `k` chains, as labels.
pub fn chain_covers(p: &Poset, k: usize) -> Vec<Vec<usize>> {
    fn go(p: &Poset, k: usize, v: usize, label: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if v == p.len() {
            if used == k {
                out.push(label.clone());
            }
            return;
        }
        if used + (p.len() - v) < k {
            return;
        }
        for c in 0..(used + 1).min(k) {
            if (0..v).all(|u| label[u] != c || p.comparable(u, v)) {
                label.push(c);
                go(p, k, v + 1, label, used.max(c + 1), out);
                label.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, k, 0, &mut Vec::new(), 0, &mut out);
    out
}

pub fn brute_dilworth_edge(p: &Poset, u: usize, v: usize) -> bool {
    chain_covers(p, brute_width(p)).iter().any(|l| l[u] == l[v])
}

/// Rungs `(x_i, y_i)` form an induced ladder.
pub fn is_induced_ladder(p: &Poset, rungs: &[(usize, usize)]) -> bool {
    let m = rungs.len();
    let mut seen = std::collections::HashSet::new();
    for &(x, y) in rungs {
        if !seen.insert(x) || !seen.insert(y) {
            return false;
        }
    }
    for i in 0..m {
        for j in 0..m {
            let (xi, yi) = rungs[i];
            let (xj, yj) = rungs[j];
            if i < j && !(p.less(xi, xj) && p.less(yi, yj)) {
                return false;
            }
            if p.less(xi, yj) != (i <= j) {
                return false;
            }
            if p.less(yj, xi) {
                return false;
            }
        }
    }
    true
}

/// Longest induced ladder by plain backtracking.
pub fn brute_ladder(p: &Poset) -> usize {
    fn grow(p: &Poset, rungs: &mut Vec<(usize, usize)>, best: &mut usize) {
        *best = (*best).max(rungs.len());
        for x in p.vertices() {
            for y in p.vertices() {
                rungs.push((x, y));
                if is_induced_ladder(p, rungs) {
                    grow(p, rungs, best);
                }
                rungs.pop();
            }
        }
    }
    let mut best = 0;
    grow(p, &mut Vec::new(), &mut best);
    best
}

/// Colors First-Fit assigns along `order`, by vertex.
pub fn naive_first_fit(p: &Poset, order: &[usize]) -> Vec<usize> {
    let mut color = vec![0; p.len()];
    for (k, &v) in order.iter().enumerate() {
        let mut c = 1;
        while order[..k].iter().any(|&u| color[u] == c && p.incomparable(u, v)) {
            c += 1;
        }
        color[v] = c;
    }
    color
}

/// `max` over all `n!` presentations of the First-Fit color count.
pub fn brute_chi_ff(p: &Poset) -> usize {
    fn perms(k: usize, a: &mut Vec<usize>, p: &Poset, best: &mut usize) {
        if k == a.len() {
            let used = naive_first_fit(p, a).into_iter().max().unwrap_or(0);
            *best = (*best).max(used);
            return;
        }
        for i in k..a.len() {
            a.swap(k, i);
            perms(k + 1, a, p, best);
            a.swap(k, i);
        }
    }
    let mut best = 0;
    perms(0, &mut (0..p.len()).collect(), p, &mut best);
    best
}

/// Best Grundy coloring by branch and bound over chain partitions and
/// orders of their classes. Returns the coloring (colors `1..`).
pub fn brute_grundy(p: &Poset) -> Vec<usize> {
    struct Search<'a> {
        p: &'a Poset,
        best: Vec<usize>,
        best_k: usize,
    }
    // class `b` may follow class `a`: every member of `b` misses some member of `a`
    fn follows(p: &Poset, a: &[usize], b: &[usize]) -> bool {
        b.iter().all(|&v| a.iter().any(|&u| p.incomparable(u, v)))
    }
    fn order(p: &Poset, classes: &[Vec<usize>], placed: &mut Vec<usize>) -> bool {
        if placed.len() == classes.len() {
            return true;
        }
        for c in 0..classes.len() {
            if placed.contains(&c) {
                continue;
            }
            if placed.iter().all(|&a| follows(p, &classes[a], &classes[c])) {
                placed.push(c);
                if order(p, classes, placed) {
                    return true;
                }
                placed.pop();
            }
        }
        false
    }
    fn go(s: &mut Search, v: usize, classes: &mut Vec<Vec<usize>>) {
        let n = s.p.len();
        if classes.len() + (n - v) <= s.best_k {
            return;
        }
        if v == n {
            let mut placed = Vec::new();
            if order(s.p, classes, &mut placed) {
                s.best_k = classes.len();
                let mut color = vec![0; n];
                for (pos, &c) in placed.iter().enumerate() {
                    for &u in &classes[c] {
                        color[u] = pos + 1;
                    }
                }
                s.best = color;
            }
            return;
        }
        classes.push(vec![v]);
        go(s, v + 1, classes);
        classes.pop();
        for c in 0..classes.len() {
            if classes[c].iter().all(|&u| s.p.comparable(u, v)) {
                classes[c].push(v);
                go(s, v + 1, classes);
                classes[c].pop();
            }
        }
    }
    let mut s = Search { p, best: Vec::new(), best_k: 0 };
    go(&mut s, 0, &mut Vec::new());
    s.best
}

/// Color classes are chains.
pub fn classes_are_chains(p: &Poset, colors: &[usize]) -> bool {
    let k = colors.iter().copied().max().unwrap_or(0);
    (1..=k).all(|c| {
        let class: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == c).collect();
        is_chain(p, &class)
    })
}
