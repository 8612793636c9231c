use super::RegularInstance;
use crate::poset::{find_max_ladder, LadderEmbedding, LadderSearch};

/// `m = find_max_ladder(P, 2w²+1)` and whether `m ≤ 2w²`.
pub fn ladder_bound_check(inst: &RegularInstance) -> (usize, bool) {
    let bound = 2 * inst.w() * inst.w();
    let (m, _) = find_max_ladder(inst.poset(), bound + 1);
    (m, m <= bound)
}

/// Longest ladder with `A(y_i) ⊑ A(x_{i+1})` at every step.
pub fn canonical_ladder_max(inst: &RegularInstance) -> (usize, LadderEmbedding) {
    let layer = inst.layer_of();
    let dom = inst.dominance();
    let p = inst.poset();
    LadderSearch::new(p)
        .with_transition_filter(move |y, x| match (layer[y], layer[x]) {
            (Some(a), Some(b)) => dom[a - 1][b - 1],
            _ => false,
        })
        .run()
}

/// A `(2w+1)`-rung ladder with `A(y_1) ⋢ A(x_{2w+1})`, if any exists.
pub fn long_ladder_violation(inst: &RegularInstance) -> Option<LadderEmbedding> {
    let layer = inst.layer_of();
    let dom = inst.dominance();
    let rungs = 2 * inst.w() + 1;
    LadderSearch::new(inst.poset()).find_ending(rungs, |y1, x| match (layer[y1], layer[x]) {
        (Some(a), Some(b)) => !dom[a - 1][b - 1],
        _ => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    #[test]
    fn chain_of_singletons() {
        let inst = RegularInstance::new(Poset::chain(4), (0..4).map(|v| vec![v]).collect(), 1).unwrap();
        let (m, ok) = ladder_bound_check(&inst);
        assert!(ok);
        assert!(m <= 2);
        assert!(canonical_ladder_max(&inst).0 <= 1);
        assert!(long_ladder_violation(&inst).is_none());
    }
}
