//! Maximum bipartite matching by augmenting paths.
//!
//! Left vertices are tried in ascending order and neighbour lists are
//! scanned in the order given, so the result is fully deterministic.

pub(crate) struct Matching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    pub size: usize,
}

pub(crate) fn max_matching(n_right: usize, adj: &[Vec<usize>]) -> Matching {
    let n_left = adj.len();
    let mut m = Matching {
        left: vec![None; n_left],
        right: vec![None; n_right],
        size: 0,
    };
    let mut seen = vec![usize::MAX; n_right];
    for u in 0..n_left {
        if augment(u, u, adj, &mut m, &mut seen) {
            m.size += 1;
        }
    }
    m
}

fn augment(u: usize, stamp: usize, adj: &[Vec<usize>], m: &mut Matching, seen: &mut [usize]) -> bool {
    for &v in &adj[u] {
        if seen[v] == stamp {
            continue;
        }
        seen[v] = stamp;
        let free = match m.right[v] {
            None => true,
            Some(w) => augment(w, stamp, adj, m, seen),
        };
        if free {
            m.left[u] = Some(v);
            m.right[v] = Some(u);
            return true;
        }
    }
    false
}

impl Matching {
    /// König: vertices reachable from unmatched left vertices along
    /// alternating paths, returned as (left_reached, right_reached).
    pub fn alternating_reach(&self, adj: &[Vec<usize>]) -> (Vec<bool>, Vec<bool>) {
        let mut left = vec![false; self.left.len()];
        let mut right = vec![false; self.right.len()];
        let mut stack: Vec<usize> = (0..self.left.len())
            .filter(|&u| self.left[u].is_none())
            .collect();
        for &u in &stack {
            left[u] = true;
        }
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if right[v] || self.left[u] == Some(v) {
                    continue;
                }
                right[v] = true;
                if let Some(w) = self.right[v] {
                    if !left[w] {
                        left[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        (left, right)
    }
}

/// Whether the bipartite graph has a perfect matching that uses edge `(a, b)`.
pub(crate) fn edge_in_perfect_matching(n_right: usize, adj: &[Vec<usize>], a: usize, b: usize) -> bool {
    if adj.len() != n_right || !adj[a].contains(&b) {
        return false;
    }
    let reduced: Vec<Vec<usize>> = adj
        .iter()
        .enumerate()
        .map(|(u, ns)| {
            if u == a {
                Vec::new()
            } else {
                ns.iter().copied().filter(|&v| v != b).collect()
            }
        })
        .collect();
    max_matching(n_right, &reduced).size + 1 == n_right
}
