use super::cores::CoreKind;
use crate::bitset::BitMatrix;
use crate::error::{Error, Result};
use crate::poset::{LadderEmbedding, Poset};
use crate::regular::RegularInstance;

/// Id of the `pos`-th point of `A_i` in copy `copy` (0-based copy, 1-based
/// `i` and `pos`) of the width-`w` construction.
pub fn regular_ladder_vertex(w: usize, copy: usize, i: usize, pos: usize) -> usize {
    (copy * (2 * w + 1) + (i - 1)) * w + (pos - 1)
}

/// Cores between the layers of one copy, as `(lower layer, upper layer,
/// type)` with 1-based layer indices.
fn layer_cores(w: usize) -> Vec<(usize, usize, CoreKind)> {
    let mut out = vec![(2, 1, CoreKind::S(w))];
    for i in 3..=w + 1 {
        out.push((i, 1, CoreKind::S(w + 2 - i)));
        out.push((i - 1, i, CoreKind::I));
    }
    out.push((1, w + 2, CoreKind::T(w)));
    for i in w + 3..=2 * w + 1 {
        out.push((i, i - 1, CoreKind::I));
        out.push((1, i, CoreKind::T(2 * w + 2 - i)));
    }
    out
}

/// A width-`w` regular poset built from `⌊(w+2)/2⌋` glued copies of a
/// `(2w+1)`-layer block, together with an induced ladder of
/// `w·⌊(w+2)/2⌋` rungs.
pub fn gen_regular_with_ladder(w: usize) -> Result<(RegularInstance, LadderEmbedding)> {
    if w < 2 {
        return Err(Error::BadParameters(format!("regular ladder construction needs w >= 2, got {w}")));
    }
    let h = (w + 2) / 2;
    let layers = 2 * w + 1;
    let n = h * layers * w;
    let id = |copy, i, pos| regular_ladder_vertex(w, copy, i, pos);
    let mut m = BitMatrix::new(n);
    let cores = layer_cores(w);
    for copy in 0..h {
        for &(lo, hi, kind) in &cores {
            for (a, b) in kind.edges(w)? {
                m.set(id(copy, lo, a), id(copy, hi, b), true);
            }
        }
        if copy + 1 < h {
            // top layer A_{w+2} of this copy under bottom layer A_2 of the next
            for i in 1..=w {
                m.set(id(copy, w + 2, i), id(copy + 1, 2, i), true);
            }
        }
    }
    let poset = Poset::from_relation_matrix(m)?;
    let antichains = (0..h)
        .flat_map(|copy| (1..=layers).map(move |i| (1..=w).map(|pos| id(copy, i, pos)).collect()))
        .collect();
    let inst = RegularInstance::new(poset, antichains, w)?;
    let rungs = (0..h)
        .flat_map(|copy| (1..=w).map(move |i| (id(copy, i + 1, 1), id(copy, 2 * w + 2 - i, w))))
        .collect();
    Ok((inst, LadderEmbedding { rungs }))
}
