//! Finite simple undirected graphs on the vertex set `0..n`.
//!
//! A [`Graph`] is immutable once built. Every constructor validates its
//! input, so the adjacency relation is always symmetric and irreflexive.

mod distance;
pub mod generators;
pub mod graph6;
mod iso;

pub use distance::DistanceTable;
pub use generators::*;
pub use iso::find_isomorphism;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges and
    /// both orientations of the same edge are accepted and merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_adjacency(n, adj))
    }

    /// `adj` must already be symmetric with a false diagonal.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        let nbrs = (0..n)
            .map(|x| (0..n).filter(|&y| adj[x * n + y]).collect())
            .collect();
        Graph { n, adj, nbrs }
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(n, vec![false; n * n])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x * self.n + y]
    }

    #[inline]
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.nbrs[x]
    }

    #[inline]
    pub fn degree(&self, x: usize) -> usize {
        self.nbrs[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.nbrs.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// The 0/1 adjacency matrix. Panics on the empty graph, which has no
    /// matrix of positive dimension.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| i64::from(self.adjacent(i, j)))
    }

    /// Graph with adjacency matrix `J - I - A`.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let adj = (0..n * n)
            .map(|idx| idx / n != idx % n && !self.adj[idx])
            .collect();
        Self::from_adjacency(n, adj)
    }

    /// Relabels vertices: vertex `x` becomes `perm[x]`. The result is the
    /// graph `P A P^T` for the permutation matrix with `P[perm[x]][x] = 1`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let n = self.n;
        let mut adj = vec![false; n * n];
        for x in 0..n {
            for &y in &self.nbrs[x] {
                adj[perm[x] * n + perm[y]] = true;
            }
        }
        Ok(Self::from_adjacency(n, adj))
    }

    /// Checks whether `perm` maps edges onto edges and non-edges onto non-edges.
    pub fn is_isomorphism_to(&self, other: &Graph, perm: &[usize]) -> bool {
        if self.n != other.n || check_permutation(perm, self.n).is_err() {
            return false;
        }
        (0..self.n).all(|x| {
            (0..self.n).all(|y| self.adjacent(x, y) == other.adjacent(perm[x], perm[y]))
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &y in &self.nbrs[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// A proper 2-colouring (`false`/`true` per vertex) if the graph is
    /// bipartite. The smallest vertex of every component gets `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for comp in self.components() {
            let root = comp[0];
            side[root] = Some(false);
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                let sx = side[x].unwrap();
                for &y in &self.nbrs[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            stack.push(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn distances(&self) -> DistanceTable {
        DistanceTable::new(self)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Dimension(format!(
            "permutation of length {} for {} vertices",
            perm.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    Ok(())
}
