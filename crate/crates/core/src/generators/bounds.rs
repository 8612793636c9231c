/// `w^{2.5 lg(2w) + 2 lg m}`, the First-Fit bound on `L_m`-free posets of
/// width `w`.
pub fn ff_upper_bound(m: usize, w: usize) -> f64 {
    let (m, w) = (m as f64, w as f64);
    w.powf(2.5 * (2.0 * w).log2() + 2.0 * m.log2())
}

/// `w · ff_upper_bound(2w²+1, w)`: a bound for the reduction with
/// First-Fit on every level.
pub fn composite_upper_bound(w: usize) -> f64 {
    w as f64 * ff_upper_bound(2 * w * w + 1, w)
}
