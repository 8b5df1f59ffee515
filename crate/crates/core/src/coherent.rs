//! Two-dimensional Weisfeiler–Leman refinement and the coherent
//! configuration of a graph.
//!
//! Pairs start with colour 0 (diagonal), 1 (edge) or 2 (other). A round
//! replaces the colour of `(x, y)` by the multiset
//! `{ (f(x, z), f(z, y)) : z ∈ X }`, and the loop stops once the number of
//! colour classes stops growing. Relation indices are canonical ranks of
//! the sorted encodings at each round, so two graphs that are
//! indistinguishable by the refinement end up with identical indices.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoherentConfiguration {
    n: usize,
    rank: usize,
    rel: Vec<u32>,
    diagonal: Vec<bool>,
    edge: Vec<bool>,
    converse: Vec<usize>,
    sizes: Vec<usize>,
    p: Vec<u32>,
    rounds: usize,
}

impl CoherentConfiguration {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of relations `s`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Index of the relation containing `(x, y)`.
    #[inline]
    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.rel[x * self.n + y] as usize
    }

    /// Intersection number `p_ij(k)`: for any `(x, y)` in `R_k`, the number
    /// of `z` with `(x, z) ∈ R_i` and `(z, y) ∈ R_j`.
    #[inline]
    pub fn p(&self, i: usize, j: usize, k: usize) -> u32 {
        let s = self.rank;
        self.p[(i * s + j) * s + k]
    }

    pub fn is_diagonal(&self, i: usize) -> bool {
        self.diagonal[i]
    }

    pub fn is_edge(&self, i: usize) -> bool {
        self.edge[i]
    }

    /// The set `H` of relations whose union is the diagonal.
    pub fn diagonal_relations(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.diagonal[i]).collect()
    }

    /// The set `G` of relations whose union is the edge set.
    pub fn edge_relations(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.edge[i]).collect()
    }

    /// `j` with `(x, y) ∈ R_i ⇔ (y, x) ∈ R_j`.
    pub fn converse(&self, i: usize) -> usize {
        self.converse[i]
    }

    /// `|R_i|` as a set of ordered pairs.
    pub fn relation_size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    /// Refinement rounds that split the pair partition.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Isomorphism-invariant fingerprint: rank, the diagonal/edge/converse
    /// structure, relation sizes and the full tensor.
    pub fn canonical_key(&self) -> Vec<u32> {
        let mut key = vec![self.n as u32, self.rank as u32];
        key.extend(self.diagonal.iter().map(|&b| u32::from(b)));
        key.extend(self.edge.iter().map(|&b| u32::from(b)));
        key.extend(self.converse.iter().map(|&c| c as u32));
        key.extend(self.sizes.iter().map(|&c| c as u32));
        key.extend_from_slice(&self.p);
        key
    }

    fn same_structure_under(&self, other: &Self, sigma: &[usize]) -> bool {
        let s = self.rank;
        (0..s).all(|i| {
            self.diagonal[i] == other.diagonal[sigma[i]]
                && self.edge[i] == other.edge[sigma[i]]
                && sigma[self.converse[i]] == other.converse[sigma[i]]
        }) && (0..s).all(|i| {
            (0..s).all(|j| (0..s).all(|k| self.p(i, j, k) == other.p(sigma[i], sigma[j], sigma[k])))
        })
    }
}

impl Serialize for CoherentConfiguration {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.n;
        let s = self.rank;
        let rel: Vec<&[u32]> = (0..n).map(|x| &self.rel[x * n..(x + 1) * n]).collect();
        let p: Vec<Vec<&[u32]>> = (0..s)
            .map(|i| (0..s).map(|j| &self.p[(i * s + j) * s..(i * s + j + 1) * s]).collect())
            .collect();
        let mut st = ser.serialize_struct("CoherentConfiguration", 7)?;
        st.serialize_field("n", &n)?;
        st.serialize_field("rank", &s)?;
        st.serialize_field("relColor", &rel)?;
        st.serialize_field("p", &p)?;
        st.serialize_field("H", &self.diagonal_relations())?;
        st.serialize_field("G", &self.edge_relations())?;
        st.serialize_field("converse", &self.converse)?;
        st.end()
    }
}

/// Ranks `items` by sorted order of their keys; returns per-item ranks and
/// the number of distinct keys.
fn rank_by<K: Ord>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut r = 0u32;
    for w in 0..idx.len() {
        if w > 0 && keys[idx[w]] != keys[idx[w - 1]] {
            r += 1;
        }
        out[idx[w]] = r;
    }
    let distinct = if keys.is_empty() { 0 } else { r as usize + 1 };
    (out, distinct)
}

/// Computes the coherent configuration of `g` and its intersection numbers.
///
/// Every pair of every relation is counted, so the returned tensor is
/// verified rather than read off a single witness. A constancy failure is
/// an [`Error::Internal`].
pub fn wl2_refine(g: &Graph) -> Result<CoherentConfiguration> {
    let n = g.order();
    let initial: Vec<u32> = (0..n * n)
        .map(|idx| {
            let (x, y) = (idx / n, idx % n);
            if x == y {
                0
            } else if g.adjacent(x, y) {
                1
            } else {
                2
            }
        })
        .collect();
    let (mut color, mut classes) = rank_by(&initial);
    let mut rounds = 0;
    let mut enc: Vec<Vec<u64>> = vec![Vec::with_capacity(n); n * n];
    loop {
        let base = classes as u64;
        for x in 0..n {
            for y in 0..n {
                let e = &mut enc[x * n + y];
                e.clear();
                e.extend((0..n).map(|z| u64::from(color[x * n + z]) * base + u64::from(color[z * n + y])));
                e.sort_unstable();
            }
        }
        let (next, count) = rank_by(&enc);
        if count == classes {
            break;
        }
        debug_assert!(count > classes);
        color = next;
        classes = count;
        rounds += 1;
    }
    build_configuration(g, color, classes, rounds)
}

fn build_configuration(g: &Graph, rel: Vec<u32>, s: usize, rounds: usize) -> Result<CoherentConfiguration> {
    let n = g.order();
    let mut witness: Vec<Option<(usize, usize)>> = vec![None; s];
    let mut sizes = vec![0usize; s];
    for x in 0..n {
        for y in 0..n {
            let k = rel[x * n + y] as usize;
            sizes[k] += 1;
            witness[k].get_or_insert((x, y));
        }
    }
    let witness: Vec<(usize, usize)> = witness
        .into_iter()
        .map(|w| w.ok_or_else(|| Error::Internal("empty relation".into())))
        .collect::<Result<_>>()?;

    let diagonal: Vec<bool> = witness.iter().map(|&(x, y)| x == y).collect();
    let edge: Vec<bool> = witness.iter().map(|&(x, y)| x != y && g.adjacent(x, y)).collect();
    let converse: Vec<usize> = witness.iter().map(|&(x, y)| rel[y * n + x] as usize).collect();
    for x in 0..n {
        for y in 0..n {
            let k = rel[x * n + y] as usize;
            if diagonal[k] != (x == y) || edge[k] != (x != y && g.adjacent(x, y)) {
                return Err(Error::Internal(format!("relation {k} mixes pair types")));
            }
            if converse[k] != rel[y * n + x] as usize {
                return Err(Error::Internal(format!("relation {k} has no single converse")));
            }
        }
    }

    let mut p = vec![0u32; s * s * s];
    let mut filled = vec![false; s];
    let mut nnz = vec![0usize; s];
    let mut scratch = vec![0u32; s * s];
    let mut touched: Vec<usize> = Vec::with_capacity(n);
    for x in 0..n {
        for y in 0..n {
            let k = rel[x * n + y] as usize;
            for z in 0..n {
                let slot = rel[x * n + z] as usize * s + rel[z * n + y] as usize;
                if scratch[slot] == 0 {
                    touched.push(slot);
                }
                scratch[slot] += 1;
            }
            if !filled[k] {
                for &slot in &touched {
                    p[slot * s + k] = scratch[slot];
                }
                nnz[k] = touched.len();
                filled[k] = true;
            } else if touched.len() != nnz[k] || touched.iter().any(|&slot| p[slot * s + k] != scratch[slot]) {
                return Err(Error::Internal(format!(
                    "intersection numbers not constant on relation {k} at ({x}, {y})"
                )));
            }
            for &slot in &touched {
                scratch[slot] = 0;
            }
            touched.clear();
        }
    }

    Ok(CoherentConfiguration { n, rank: s, rel, diagonal, edge, converse, sizes, p, rounds })
}

/// Equal rank and equal intersection numbers under some bijection of
/// relation indices that maps diagonal relations to diagonal relations and
/// edge relations to edge relations.
///
/// The identity is tried first; canonical indices make it succeed whenever
/// the two refinements ran identically. Otherwise indices are grouped by a
/// joint refinement of tensor invariants and a backtracking search looks
/// for the bijection inside those groups.
pub fn intersection_equivalent(a: &CoherentConfiguration, b: &CoherentConfiguration) -> bool {
    if a.rank != b.rank {
        return false;
    }
    let s = a.rank;
    let identity: Vec<usize> = (0..s).collect();
    if a.same_structure_under(b, &identity) {
        return true;
    }
    let (ca, cb) = index_classes(a, b);
    let mut ha: Vec<u32> = ca.clone();
    let mut hb: Vec<u32> = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return false;
    }
    // most constrained first
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..s).collect();
    order.sort_by_key(|&i| (class_size[&ca[i]], i));
    let mut sigma = vec![usize::MAX; s];
    let mut used = vec![false; s];
    search(a, b, &ca, &cb, &order, 0, &mut sigma, &mut used)
}

/// Joint colour refinement of the relation indices of both configurations.
fn index_classes(a: &CoherentConfiguration, b: &CoherentConfiguration) -> (Vec<u32>, Vec<u32>) {
    let s = a.rank;
    let init = |c: &CoherentConfiguration, i: usize| {
        vec![u32::from(c.diagonal[i]), u32::from(c.edge[i]), u32::from(c.converse[i] == i), c.sizes[i] as u32]
    };
    let keys: Vec<Vec<u32>> = (0..s).map(|i| init(a, i)).chain((0..s).map(|i| init(b, i))).collect();
    let (mut col, mut count) = rank_by(&keys);
    loop {
        let enc = |c: &CoherentConfiguration, off: usize, i: usize| {
            let mut rows: Vec<[u32; 5]> = Vec::with_capacity(s * s);
            for j in 0..s {
                for k in 0..s {
                    rows.push([col[off + j], col[off + k], c.p(i, j, k), c.p(j, i, k), c.p(j, k, i)]);
                }
            }
            rows.sort_unstable();
            (col[off + i], rows)
        };
        let keys: Vec<_> = (0..s).map(|i| enc(a, 0, i)).chain((0..s).map(|i| enc(b, s, i))).collect();
        let (next, c) = rank_by(&keys);
        if c == count {
            break;
        }
        col = next;
        count = c;
    }
    let cb = col.split_off(s);
    (col, cb)
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &CoherentConfiguration,
    b: &CoherentConfiguration,
    ca: &[u32],
    cb: &[u32],
    order: &[usize],
    depth: usize,
    sigma: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return a.same_structure_under(b, sigma);
    }
    let i = order[depth];
    for cand in 0..b.rank {
        if used[cand] || ca[i] != cb[cand] {
            continue;
        }
        if a.diagonal[i] != b.diagonal[cand] || a.edge[i] != b.edge[cand] {
            continue;
        }
        sigma[i] = cand;
        let ci = a.converse[i];
        let conv_ok = sigma[ci] == usize::MAX || sigma[ci] == b.converse[cand];
        if conv_ok && consistent(a, b, &order[..=depth], sigma) {
            used[cand] = true;
            if search(a, b, ca, cb, order, depth + 1, sigma, used) {
                return true;
            }
            used[cand] = false;
        }
        sigma[i] = usize::MAX;
    }
    false
}

/// Checks every triple that involves the most recently assigned index.
fn consistent(a: &CoherentConfiguration, b: &CoherentConfiguration, assigned: &[usize], sigma: &[usize]) -> bool {
    let i = *assigned.last().unwrap();
    let si = sigma[i];
    assigned.iter().all(|&u| {
        let su = sigma[u];
        assigned.iter().all(|&v| {
            let sv = sigma[v];
            a.p(i, u, v) == b.p(si, su, sv) && a.p(u, i, v) == b.p(su, si, sv) && a.p(u, v, i) == b.p(su, sv, si)
        })
    })
}

/// C³-equivalence, decided through intersection equivalence of the two
/// coherent configurations.
pub fn c3_equivalent(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    Ok(intersection_equivalent(&wl2_refine(g)?, &wl2_refine(h)?))
}
