use super::rn::gen_rn;
use crate::error::{Error, Result};
use crate::online::{first_fit, GrundyColoring};
use crate::poset::{lex_product, width, Poset};

/// Default vertex cap for [`gen_qk`].
pub const DEFAULT_SIZE_CAP: usize = 5000;

/// `R_{m-1}` with a new minimum `0̂` (id 0; `R` shifted up by one) and the
/// First-Fit Grundy coloring of `R_{m-1}` extended by `0̂ ↦ 1`.
pub fn qk_base(m: usize) -> Result<(Poset, GrundyColoring)> {
    if m < 2 {
        return Err(Error::BadParameters(format!("Q_k needs m >= 2, got {m}")));
    }
    let r = gen_rn(m - 1);
    let f = first_fit(&r);
    let n = r.len() + 1;
    let mut rel: Vec<(usize, usize)> = r.poset().relations().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
    rel.extend((1..n).map(|v| (0, v)));
    let mut color = vec![1];
    color.extend_from_slice(f.colors());
    Ok((Poset::new(n, &rel)?, GrundyColoring::new(color)))
}

/// `Q_0` is a point and `Q_{k+1} = P·Q_k`, colored by
/// `h(p, q) = (f(p) - 1)·|g| + g(q)`.
pub fn gen_qk(m: usize, k: usize, cap: usize) -> Result<(Poset, GrundyColoring)> {
    let (base, f) = qk_base(m)?;
    let size = u32::try_from(k)
        .ok()
        .and_then(|k| base.len().checked_pow(k))
        .unwrap_or(usize::MAX);
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    let mut q = Poset::antichain(1);
    let mut g = GrundyColoring::new(vec![1]);
    for _ in 0..k {
        let nq = q.len();
        let colors = g.n_colors();
        let mut h = vec![0; base.len() * nq];
        for p in base.vertices() {
            for v in q.vertices() {
                h[p * nq + v] = (f.color_of(p) - 1) * colors + g.color_of(v);
            }
        }
        q = lex_product(&base, &q);
        g = GrundyColoring::new(h);
    }
    Ok((q, g))
}

/// [`gen_qk`] padded with isolated vertices up to width `target`; each new
/// vertex takes a fresh color.
pub fn gen_qk_padded(m: usize, k: usize, target: usize, cap: usize) -> Result<(Poset, GrundyColoring)> {
    let (q, g) = gen_qk(m, k, cap)?;
    let w = width(&q);
    if target < w {
        return Err(Error::BadParameters(format!("target width {target} below width {w}")));
    }
    let extra = target - w;
    let n = q.len();
    let padded = Poset::new(n + extra, &q.relations())?;
    let mut color = g.colors().to_vec();
    color.extend((1..=extra).map(|i| g.n_colors() + i));
    Ok((padded, GrundyColoring::new(color)))
}
