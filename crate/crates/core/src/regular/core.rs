use crate::error::{Error, Result};
use crate::poset::matching::{edge_in_perfect_matching, max_matching};
use crate::poset::Poset;

/// Whether `P[A ∪ B]`, with `A` the lower layer, is a core: every cross
/// comparability lies in a perfect matching of the cross graph.
pub fn is_core(poset: &Poset, lower: &[usize], upper: &[usize]) -> Result<bool> {
    if lower.len() != upper.len() {
        return Err(Error::SizeMismatch(lower.len(), upper.len()));
    }
    for side in [lower, upper] {
        if !poset.is_antichain(side) {
            return Err(Error::NotAntichain(side.to_vec()));
        }
    }
    if lower.iter().any(|&a| upper.iter().any(|&b| poset.less(b, a))) {
        return Ok(false);
    }
    let adj: Vec<Vec<usize>> = lower
        .iter()
        .map(|&a| (0..upper.len()).filter(|&j| poset.less(a, upper[j])).collect())
        .collect();
    let k = upper.len();
    if max_matching(k, &adj).size != k {
        return Ok(false);
    }
    Ok((0..k).all(|i| adj[i].iter().all(|&j| edge_in_perfect_matching(k, &adj, i, j))))
}

/// First cross edge `(a, b)` of a failing core, if any edge is to blame.
pub(crate) fn core_witness(poset: &Poset, lower: &[usize], upper: &[usize]) -> Option<(usize, usize)> {
    let adj: Vec<Vec<usize>> = lower
        .iter()
        .map(|&a| (0..upper.len()).filter(|&j| poset.less(a, upper[j])).collect())
        .collect();
    let k = upper.len();
    (0..k)
        .flat_map(|i| adj[i].iter().map(move |&j| (i, j)))
        .find(|&(i, j)| !edge_in_perfect_matching(k, &adj, i, j))
        .map(|(i, j)| (lower[i], upper[j]))
}
