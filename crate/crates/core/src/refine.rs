//! Colour refinement (1-dimensional Weisfeiler–Leman).
//!
//! Colours are canonical: at every round the distinct encodings are sorted
//! and a vertex's colour is the rank of its encoding. Since an encoding only
//! mentions colours of the previous round, the colour names never depend on
//! the vertex labeling.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::linalg::RatMatrix;

/// What a colour was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ColorEncoding {
    /// Round 0: the vertex degree.
    Degree(usize),
    /// Later rounds: own colour and the sorted multiset of neighbour colours.
    Refined { previous: u32, neighbors: Vec<u32> },
}

/// Fixed point of colour refinement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableColoring {
    color: Vec<u32>,
    rounds: usize,
    /// Per round: the sorted encodings with their multiplicities. The
    /// position in the list is the colour id at that round.
    trace: Vec<Vec<(ColorEncoding, usize)>>,
}

impl StableColoring {
    pub fn color(&self, x: usize) -> u32 {
        self.color[x]
    }

    pub fn colors(&self) -> &[u32] {
        &self.color
    }

    pub fn num_colors(&self) -> usize {
        self.trace.last().map_or(0, Vec::len)
    }

    /// Class size per colour id.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.trace.last().map_or_else(Vec::new, |t| t.iter().map(|(_, c)| *c).collect())
    }

    /// Number of iterations that split the partition.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// The encoding that produced each final colour.
    pub fn history(&self) -> Vec<&ColorEncoding> {
        self.trace.last().map_or_else(Vec::new, |t| t.iter().map(|(e, _)| e).collect())
    }

    /// The full per-round record of encodings and multiplicities. Two graphs
    /// are C²-equivalent exactly when these traces are equal; this is an
    /// isomorphism invariant usable as a hash key.
    pub fn trace(&self) -> &[Vec<(ColorEncoding, usize)>] {
        &self.trace
    }
}

fn canonical_ranks(enc: &[ColorEncoding]) -> (Vec<u32>, Vec<(ColorEncoding, usize)>) {
    let mut counts: BTreeMap<&ColorEncoding, usize> = BTreeMap::new();
    for e in enc {
        *counts.entry(e).or_default() += 1;
    }
    let index: BTreeMap<&ColorEncoding, u32> =
        counts.keys().enumerate().map(|(i, e)| (*e, i as u32)).collect();
    let colors = enc.iter().map(|e| index[e]).collect();
    let table = counts.into_iter().map(|(e, c)| (e.clone(), c)).collect();
    (colors, table)
}

/// Refines from the degree colouring until the number of classes stops growing.
pub fn color_refine(g: &Graph) -> StableColoring {
    let n = g.order();
    let initial: Vec<_> = (0..n).map(|x| ColorEncoding::Degree(g.degree(x))).collect();
    let (mut color, table) = canonical_ranks(&initial);
    let mut trace = vec![table];
    let mut rounds = 0;
    loop {
        let enc: Vec<_> = (0..n)
            .map(|x| {
                let mut neighbors: Vec<u32> = g.neighbors(x).iter().map(|&y| color[y]).collect();
                neighbors.sort_unstable();
                ColorEncoding::Refined { previous: color[x], neighbors }
            })
            .collect();
        let (next, table) = canonical_ranks(&enc);
        if table.len() == trace.last().unwrap().len() {
            break;
        }
        debug_assert!(table.len() > trace.last().unwrap().len());
        color = next;
        trace.push(table);
        rounds += 1;
    }
    StableColoring { color, rounds, trace }
}

/// Refinement of the disjoint union `Γ + Δ`, so both graphs share colour names.
#[derive(Clone, Debug)]
pub struct JointColoring {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub stable: StableColoring,
}

pub fn joint_refine(g: &Graph, h: &Graph) -> JointColoring {
    let stable = color_refine(&disjoint_union(g, h));
    let (left, right) = stable.colors().split_at(g.order());
    JointColoring { left: left.to_vec(), right: right.to_vec(), stable }
}

fn histogram(colors: &[u32], k: usize) -> Vec<usize> {
    let mut h = vec![0; k];
    for &c in colors {
        h[c as usize] += 1;
    }
    h
}

/// Equal iterated degree sequences, decided on the joint refinement.
pub fn c2_equivalent(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let joint = joint_refine(g, h);
    let k = joint.stable.num_colors();
    histogram(&joint.left, k) == histogram(&joint.right, k)
}

/// A doubly stochastic `S` with `S A = B S` (rows indexed by `Δ`, columns by
/// `Γ`), or `None` when the graphs are not C²-equivalent.
///
/// `S[u][w] = 1/m` when `u` and `w` share a joint colour whose class has `m`
/// vertices in each graph. The witness is verified exactly before it is
/// returned; a failed verification is reported as [`Error::Internal`].
pub fn fractional_witness(g: &Graph, h: &Graph) -> Result<Option<RatMatrix>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    let n = g.order();
    if n == 0 {
        return Err(Error::Empty);
    }
    let joint = joint_refine(g, h);
    let k = joint.stable.num_colors();
    let hist = histogram(&joint.left, k);
    if hist != histogram(&joint.right, k) {
        return Ok(None);
    }
    let s = RatMatrix::from_fn(n, n, |u, w| {
        if joint.right[u] == joint.left[w] {
            BigRational::new(BigInt::from(1), BigInt::from(hist[joint.left[w] as usize]))
        } else {
            BigRational::from_integer(BigInt::from(0))
        }
    });
    let a = g.adjacency_matrix().to_rational();
    let b = h.adjacency_matrix().to_rational();
    if !s.is_doubly_stochastic() {
        return Err(Error::Internal("fractional witness is not doubly stochastic".into()));
    }
    if s.mul(&a)? != b.mul(&s)? {
        return Err(Error::Internal("fractional witness fails SA = BS".into()));
    }
    Ok(Some(s))
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

    #[test]
    fn regular_graphs_stay_monochromatic() {
        let c = color_refine(&cycle(6).unwrap());
        assert_eq!(c.class_sizes(), vec![6]);
        assert_eq!(c.rounds(), 0);
    }

    #[test]
    fn star_and_subdivision_classes() {
        let star = color_refine(&complete_bipartite(1, 4).unwrap());
        let mut sizes = star.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 4]);

        let s = color_refine(&subdivision(&complete(4).unwrap()));
        let mut sizes = s.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 6]);
        assert_eq!(s.rounds(), 0);
    }

    #[test]
    fn path_needs_rounds() {
        let c = color_refine(&path(5).unwrap());
        // ends, next-to-ends, centre
        assert_eq!(c.class_sizes(), vec![2, 2, 1]);
        assert_eq!(c.rounds(), 1);
        assert_eq!(c.color(0), c.color(4));
        assert_eq!(c.color(1), c.color(3));
    }

    #[test]
    fn stable_coloring_is_equitable() {
        for g in [path(7).unwrap(), petersen(), subdivision(&cycle(5).unwrap()), c4_k1()] {
            let c = color_refine(&g);
            for x in 0..g.order() {
                for y in 0..g.order() {
                    if c.color(x) != c.color(y) {
                        continue;
                    }
                    let mut nx: Vec<_> = g.neighbors(x).iter().map(|&z| c.color(z)).collect();
                    let mut ny: Vec<_> = g.neighbors(y).iter().map(|&z| c.color(z)).collect();
                    nx.sort_unstable();
                    ny.sort_unstable();
                    assert_eq!(nx, ny);
                }
            }
        }
    }

    #[test]
    fn c2_examples() {
        assert!(c2_equivalent(&cycle(6).unwrap(), &two_k3()));
        assert!(!c2_equivalent(&complete_bipartite(1, 4).unwrap(), &c4_k1()));
        assert!(c2_equivalent(&petersen(), &petersen()));
        assert!(!c2_equivalent(&path(3).unwrap(), &path(4).unwrap()));
    }

    #[test]
    fn witness_examples() {
        let s = fractional_witness(&cycle(6).unwrap(), &two_k3()).unwrap().unwrap();
        let sixth = BigRational::new(BigInt::from(1), BigInt::from(6));
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(s.get(i, j), &sixth);
            }
        }
        let g = path(4).unwrap();
        assert!(fractional_witness(&g, &g).unwrap().unwrap().is_doubly_stochastic());
        assert_eq!(fractional_witness(&complete_bipartite(1, 4).unwrap(), &c4_k1()).unwrap(), None);
        assert_eq!(fractional_witness(&Graph::empty(0), &Graph::empty(0)), Err(Error::Empty));
    }

    #[test]
    fn traces_are_label_invariant() {
        let g = subdivision(&path(4).unwrap());
        let h = g.permute(&[6, 2, 0, 5, 1, 3, 4]).unwrap();
        assert_eq!(color_refine(&g).trace(), color_refine(&h).trace());
    }
}
