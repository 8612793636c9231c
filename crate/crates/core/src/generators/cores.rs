use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Ladder `L_m`: `x_i = i-1`, `y_i = m+i-1`.
pub fn gen_ladder(m: usize) -> Poset {
    let mut rel = Vec::new();
    for i in 0..m {
        rel.push((i, m + i));
        if i + 1 < m {
            rel.push((i, i + 1));
            rel.push((m + i, m + i + 1));
        }
    }
    Poset::new(2 * m, &rel).expect("ladder relations are acyclic")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "k")]
pub enum CoreKind {
    I,
    S(usize),
    T(usize),
}

impl CoreKind {
    /// Pairs `(i, j)`, 1-based, with `u_i < v_j`.
    pub(crate) fn edges(self, w: usize) -> Result<Vec<(usize, usize)>> {
        let k = match self {
            CoreKind::I => 1,
            CoreKind::S(k) | CoreKind::T(k) => k,
        };
        if k == 0 || k > w {
            return Err(Error::BadK { k, w });
        }
        let s = s_edges(k, w);
        Ok(match self {
            CoreKind::T(_) => {
                // T_k is S_k turned upside down
                let mut t: Vec<_> = s.into_iter().map(|(i, j)| (w + 1 - j, w + 1 - i)).collect();
                t.sort_unstable();
                t
            }
            _ => s,
        })
    }
}

fn s_edges(k: usize, w: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=w {
        for j in 1..=w {
            let hit = if i == 1 {
                j <= k
            } else if i <= k {
                j + 1 == i || j == i
            } else {
                i == j
            };
            if hit {
                out.push((i, j));
            }
        }
    }
    out
}

/// Two `w`-antichains: `u_i = i-1` below, `v_j = w+j-1` above.
pub fn gen_core(kind: CoreKind, w: usize) -> Result<Poset> {
    let rel: Vec<_> = kind
        .edges(w)?
        .into_iter()
        .map(|(i, j)| (i - 1, w + j - 1))
        .collect();
    Poset::new(2 * w, &rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{find_max_ladder, width};
    use crate::regular::is_core;

    fn cross(p: &Poset, w: usize) -> Vec<(usize, usize)> {
        p.relations().into_iter().map(|(u, v)| (u + 1, v - w + 1)).collect()
    }

    #[test]
    fn ladders() {
        assert_eq!(gen_ladder(1), Poset::chain(2));
        assert_eq!(width(&gen_ladder(5)), 2);
        assert_eq!(find_max_ladder(&gen_ladder(7), 20).0, 7);
    }

    #[test]
    fn s1_and_t1_are_the_identity() {
        let i = gen_core(CoreKind::I, 4).unwrap();
        assert_eq!(gen_core(CoreKind::S(1), 4).unwrap(), i);
        assert_eq!(gen_core(CoreKind::T(1), 4).unwrap(), i);
    }

    #[test]
    fn s6_at_width_6() {
        let p = gen_core(CoreKind::S(6), 6).unwrap();
        let mut expect: Vec<_> = (1..=6).map(|j| (1, j)).collect();
        for i in 2..=6 {
            expect.extend([(i, i - 1), (i, i)]);
        }
        expect.sort_unstable();
        assert_eq!(cross(&p, 6), expect);
    }

    #[test]
    fn t4_at_width_6() {
        let p = gen_core(CoreKind::T(4), 6).unwrap();
        let mut expect: Vec<_> = (1..=6).map(|i| (i, i)).collect();
        expect.extend([(3, 6), (4, 6), (5, 6), (4, 3), (5, 4), (6, 5)]);
        expect.sort_unstable();
        assert_eq!(cross(&p, 6), expect);
    }

    #[test]
    fn every_core_type_is_a_core() {
        for w in 1..=6 {
            let lower: Vec<usize> = (0..w).collect();
            let upper: Vec<usize> = (w..2 * w).collect();
            for k in 1..=w {
                for kind in [CoreKind::I, CoreKind::S(k), CoreKind::T(k)] {
                    let p = gen_core(kind, w).unwrap();
                    assert_eq!(is_core(&p, &lower, &upper), Ok(true), "{kind:?} w={w}");
                }
            }
        }
    }

    #[test]
    fn k_out_of_range() {
        assert_eq!(gen_core(CoreKind::S(0), 3), Err(Error::BadK { k: 0, w: 3 }));
        assert_eq!(gen_core(CoreKind::T(4), 3), Err(Error::BadK { k: 4, w: 3 }));
    }
}
