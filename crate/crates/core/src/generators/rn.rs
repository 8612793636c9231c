use crate::online::OnlineInstance;
use crate::poset::Poset;

/// Id of `x^k_i` in `R_n` (`1 ≤ i ≤ k`): chains in presentation order,
/// each chain bottom-up, so ids are presentation positions.
pub fn rn_vertex(k: usize, i: usize) -> usize {
    debug_assert!(1 <= i && i <= k);
    (k - 1) * k / 2 + (k - i)
}

/// The width-2 poset `R_n` whose presentation forces First-Fit to use `n`
/// chains. Chain `X^k` is `x^k_k < … < x^k_1`; `x^k_i` lies above all of
/// `X^1..X^{k-2}` and above `x^{k-1}_j` exactly for `j ≥ i`.
pub fn gen_rn(n: usize) -> OnlineInstance {
    let size = n * (n + 1) / 2;
    let mut rel = Vec::new();
    for k in 1..=n {
        for i in 1..=k {
            let v = rn_vertex(k, i);
            if i < k {
                rel.push((rn_vertex(k, i + 1), v));
            }
            if k >= 2 {
                for j in i..k {
                    rel.push((rn_vertex(k - 1, j), v));
                }
            }
            if k >= 3 {
                // x^{k-2}_1 is the top of X^{k-2}
                rel.push((rn_vertex(k - 2, 1), v));
            }
        }
    }
    let poset = Poset::new(size, &rel).expect("R_n relations are acyclic");
    let w = if n >= 2 { 2 } else { 1 };
    OnlineInstance::new(poset, (0..size).collect(), w).expect("R_n has width at most 2")
}
