use super::Poset;
use crate::bitset::BitMatrix;

/// Lexicographic product `P·Q`: `(p1,q1) < (p2,q2)` iff `p1 < p2`, or
/// `p1 = p2` and `q1 < q2`. Vertex `(p, q)` gets id `p·|Q| + q`.
pub fn lex_product(p: &Poset, q: &Poset) -> Poset {
    let nq = q.len();
    let n = p.len() * nq;
    let mut m = BitMatrix::new(n);
    for p1 in p.vertices() {
        for q1 in q.vertices() {
            let a = p1 * nq + q1;
            for p2 in p.up_set(p1).iter() {
                for q2 in 0..nq {
                    m.set(a, p2 * nq + q2, true);
                }
            }
            for q2 in q.up_set(q1).iter() {
                m.set(a, p1 * nq + q2, true);
            }
        }
    }
    Poset::from_closed(m)
}
