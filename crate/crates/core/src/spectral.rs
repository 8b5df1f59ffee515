//! Cospectrality and walk counts, decided exactly on integer data.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::linalg::{CharPoly, JsonInt};

/// Characteristic polynomial of the adjacency matrix. The empty graph has
/// the constant polynomial 1.
pub fn char_poly(g: &Graph) -> CharPoly {
    if g.order() == 0 {
        return CharPoly::one();
    }
    g.adjacency_matrix().char_poly().expect("adjacency matrices are square")
}

pub fn cospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && char_poly(g) == char_poly(h)
}

/// Cospectral, with cospectral complements.
pub fn generalized_cospectral(g: &Graph, h: &Graph) -> bool {
    cospectral(g, h) && cospectral(&g.complement(), &h.complement())
}

/// `w_i = 𝟏ᵀ A^i 𝟏` for `i = 0..=L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WalkCountSequence(pub Vec<BigInt>);

impl Serialize for WalkCountSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(JsonInt))
    }
}

/// Per-vertex walk counts `A^i 𝟏`, for `i = 0..=max_len`.
pub(crate) fn walk_vectors(g: &Graph, max_len: usize) -> Vec<Vec<BigInt>> {
    let n = g.order();
    let mut out = Vec::with_capacity(max_len + 1);
    let mut v = vec![BigInt::from(1); n];
    for i in 0..=max_len {
        if i > 0 {
            v = (0..n).map(|x| g.neighbors(x).iter().map(|&y| &v[y]).sum()).collect();
        }
        out.push(v.clone());
    }
    out
}

pub fn walk_counts(g: &Graph, max_len: usize) -> WalkCountSequence {
    WalkCountSequence(walk_vectors(g, max_len).into_iter().map(|v| v.into_iter().sum()).collect())
}

/// Equal total walk counts of every length.
///
/// Each sequence satisfies the linear recurrence given by its
/// characteristic polynomial, so both generating functions are rational
/// with denominators of degree at most `n_Γ` and `n_Δ`. Agreement on the
/// first `n_Γ + n_Δ` terms therefore forces agreement everywhere.
pub fn walk_equivalent(g: &Graph, h: &Graph) -> bool {
    let window = g.order() + h.order();
    if window == 0 {
        return true;
    }
    walk_counts(g, window - 1) == walk_counts(h, window - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn two_k3() -> Graph {
        disjoint_union(&complete(3).unwrap(), &complete(3).unwrap())
    }

    fn c4_k1() -> Graph {
        disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap())
    }

    fn ints(v: &[i64]) -> WalkCountSequence {
        WalkCountSequence(v.iter().copied().map(BigInt::from).collect())
    }

    /// Walks counted one by one.
    fn enumerate_walks(g: &Graph, len: usize) -> u64 {
        fn from(g: &Graph, x: usize, left: usize) -> u64 {
            if left == 0 {
                1
            } else {
                g.neighbors(x).iter().map(|&y| from(g, y, left - 1)).sum()
            }
        }
        (0..g.order()).map(|x| from(g, x, len)).sum()
    }

    #[test]
    fn cospectral_examples() {
        let star = complete_bipartite(1, 4).unwrap();
        assert!(cospectral(&star, &c4_k1()));
        assert!(!cospectral(&cycle(6).unwrap(), &two_k3()));
        assert!(cospectral(&petersen(), &petersen()));
        assert!(!generalized_cospectral(&star, &c4_k1()));
        let g = path(5).unwrap();
        assert!(generalized_cospectral(&g, &g.permute(&[4, 2, 0, 1, 3]).unwrap()));
    }

    #[test]
    fn complements_of_the_cospectral_pair() {
        // K1 + K4 versus the cone over 2K2
        let a = char_poly(&complete_bipartite(1, 4).unwrap().complement());
        let b = char_poly(&c4_k1().complement());
        assert_eq!(a.to_string(), "x^5 - 6x^3 - 8x^2 - 3x");
        assert_eq!(b.to_string(), "x^5 - 6x^3 - 4x^2 + 5x + 4");
    }

    #[test]
    fn walk_count_examples() {
        assert_eq!(walk_counts(&cycle(6).unwrap(), 3), ints(&[6, 12, 24, 48]));
        assert_eq!(walk_counts(&complete(1).unwrap(), 2), ints(&[1, 0, 0]));
        assert_eq!(walk_counts(&complete_bipartite(1, 4).unwrap(), 2), ints(&[5, 8, 20]));
        assert_eq!(walk_counts(&c4_k1(), 2).0[2], BigInt::from(16));
    }

    #[test]
    fn walk_equivalence_examples() {
        assert!(walk_equivalent(&cycle(6).unwrap(), &two_k3()));
        assert!(!walk_equivalent(&complete_bipartite(1, 4).unwrap(), &c4_k1()));
        assert!(walk_equivalent(&petersen(), &petersen()));
    }

    #[test]
    fn walk_counts_match_enumeration() {
        for g in [path(5).unwrap(), c4_k1(), complete_bipartite(2, 3).unwrap(), complete(4).unwrap()] {
            let w = walk_counts(&g, 4);
            for (i, wi) in w.0.iter().enumerate() {
                assert_eq!(*wi, BigInt::from(enumerate_walks(&g, i)));
            }
        }
    }

    #[test]
    fn empty_graph_polynomial() {
        assert_eq!(char_poly(&Graph::empty(0)).degree(), 0);
    }
}
