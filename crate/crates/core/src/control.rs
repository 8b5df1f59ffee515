//! Walk matrices, controllability, and isomorphism certificates for
//! controllable graphs.
//!
//! For controllable `Γ` the only candidate isomorphism onto `Δ` is
//! `Q = W_Δ W_Γ⁻¹`: any permutation `P` with `P A Pᵀ = B` also satisfies
//! `P W_Γ = W_Δ`, and `W_Γ` is invertible. So checking `Q` settles the
//! question in both directions.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{IntMatrix, RatMatrix};
use crate::spectral::walk_vectors;

/// `W = [𝟏, A𝟏, …, A^{n-1}𝟏]`; entry `(x, j)` counts walks of length `j` from `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMatrix(IntMatrix);

impl WalkMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn row(&self, x: usize) -> &[BigInt] {
        self.0.row(x)
    }

    pub fn det(&self) -> BigInt {
        self.0.det().expect("walk matrices are square")
    }
}

/// Built from repeated products `A (A^{j-1} 𝟏)`, never from matrix powers.
pub fn walk_matrix(g: &Graph) -> Result<WalkMatrix> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Empty);
    }
    let cols = walk_vectors(g, n - 1);
    Ok(WalkMatrix(IntMatrix::from_fn(n, n, |x, j| cols[j][x].clone())))
}

/// `det W ≠ 0`. The empty graph is not controllable.
pub fn is_controllable(g: &Graph) -> bool {
    walk_matrix(g).is_ok_and(|w| !w.det().is_zero())
}

/// A permutation `perm` (vertex `x` of `Γ` to `perm[x]` of `Δ`) with
/// `P W_Γ = W_Δ`, matching vertices whose length-`n` walk-count rows agree.
/// `None` when the row multisets differ.
///
/// Rows are truncated at length `n - 1`: by Cayley–Hamilton, later columns
/// are combinations of these.
pub fn walk_row_matching(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch(g.order(), h.order()));
    }
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let wg = walk_matrix(g)?;
    let wh = walk_matrix(h)?;
    let by_row = |w: &WalkMatrix| {
        let mut v: Vec<usize> = (0..n).collect();
        v.sort_by(|&a, &b| w.row(a).cmp(w.row(b)).then(a.cmp(&b)));
        v
    };
    let og = by_row(&wg);
    let oh = by_row(&wh);
    let mut perm = vec![0; n];
    for (&x, &y) in og.iter().zip(&oh) {
        if wg.row(x).cmp(wh.row(y)) != Ordering::Equal {
            return Ok(None);
        }
        perm[x] = y;
    }
    Ok(Some(perm))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
    Inapplicable,
}

/// Which identities were checked exactly, and whether they held.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateChecks {
    /// Walk-row matching produced `P` with `P W_Γ = W_Δ`.
    pub pw_gamma_equals_w_delta: bool,
    /// That `P` equals `Q = W_Δ W_Γ⁻¹`.
    pub q_equals_p: bool,
    /// `Q` is a permutation matrix.
    pub q_is_permutation: bool,
    /// `Q A Qᵀ = B`.
    pub qaqt_equals_b: bool,
    /// `Q 𝟏 = 𝟏`.
    pub q_ones_equals_ones: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoCertificate {
    pub verdict: Verdict,
    /// Vertex `x` of `Γ` maps to `permutation[x]` of `Δ`.
    pub permutation: Option<Vec<usize>>,
    pub checks: CertificateChecks,
    pub rationale: String,
}

fn rational_ones(n: usize) -> RatMatrix {
    RatMatrix::from_fn(n, 1, |_, _| num_rational::BigRational::from_integer(1.into()))
}

/// Isomorphism decision for a pair of controllable graphs.
///
/// Returns an `Inapplicable` certificate when either graph is not
/// controllable. An `Isomorphic` verdict is only issued after `Q A Qᵀ = B`
/// has been verified by exact multiplication.
pub fn controllable_iso(g: &Graph, h: &Graph) -> Result<IsoCertificate> {
    if !is_controllable(g) || !is_controllable(h) {
        return Ok(IsoCertificate {
            verdict: Verdict::Inapplicable,
            permutation: None,
            checks: CertificateChecks::default(),
            rationale: "at least one graph has a singular walk matrix".into(),
        });
    }
    if g.order() != h.order() {
        return Ok(IsoCertificate {
            verdict: Verdict::NotIsomorphic,
            permutation: None,
            checks: CertificateChecks::default(),
            rationale: "different orders".into(),
        });
    }
    let n = g.order();
    let wg = walk_matrix(g)?;
    let wh = walk_matrix(h)?;
    let inv = match wg.matrix().rat_inverse() {
        Ok(m) => m,
        Err(Error::Singular) => {
            return Err(Error::Internal("controllable graph with singular walk matrix".into()))
        }
        Err(e) => return Err(e),
    };
    let q = wh.matrix().to_rational().mul(&inv)?;
    let a = g.adjacency_matrix().to_rational();
    let b = h.adjacency_matrix().to_rational();
    let mut checks = CertificateChecks {
        q_is_permutation: q.as_permutation().is_some(),
        q_ones_equals_ones: q.mul(&rational_ones(n))? == rational_ones(n),
        qaqt_equals_b: q.mul(&a)?.mul(&q.transpose())? == b,
        ..CertificateChecks::default()
    };
    let q_perm = q.as_permutation();

    if let Some(p) = walk_row_matching(g, h)? {
        let pw = IntMatrix::from_fn(n, n, |i, j| {
            let x = p.iter().position(|&y| y == i).expect("bijection");
            wg.matrix().get(x, j).clone()
        });
        checks.pw_gamma_equals_w_delta = &pw == wh.matrix();
        checks.q_equals_p = q_perm.as_ref() == Some(&p);
        if !checks.pw_gamma_equals_w_delta || !checks.q_equals_p {
            return Err(Error::Internal(
                "walk-row matching disagrees with W_Δ W_Γ⁻¹ for controllable graphs".into(),
            ));
        }
    }

    let iso = checks.q_is_permutation && checks.qaqt_equals_b;
    Ok(if iso {
        let perm = q_perm.expect("checked above");
        if !g.is_isomorphism_to(h, &perm) {
            return Err(Error::Internal("verified Q is not an isomorphism".into()));
        }
        IsoCertificate {
            verdict: Verdict::Isomorphic,
            permutation: Some(perm),
            checks,
            rationale: "Q = W_Δ W_Γ⁻¹ is a permutation matrix with Q A Qᵀ = B".into(),
        }
    } else {
        IsoCertificate {
            verdict: Verdict::NotIsomorphic,
            permutation: None,
            checks,
            rationale: "Q = W_Δ W_Γ⁻¹ is the only candidate and it is not an isomorphism".into(),
        }
    })
}
