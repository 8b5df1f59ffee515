//! Exact decision procedures for graph equivalences: colour refinement
//! (C²), coherent configurations (C³), cospectrality and walk counts,
//! controllable-graph isomorphism certificates, and distance-regularized
//! graphs.
//!
//! All arithmetic is on integers or rationals; nothing is decided through
//! floating point.

pub mod coherent;
pub mod control;
pub mod corpus;
pub mod drg;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod refine;
pub mod report;
pub mod spectral;

pub use coherent::{c3_equivalent, intersection_equivalent, wl2_refine, CoherentConfiguration};
pub use control::{controllable_iso, is_controllable, walk_matrix, IsoCertificate, Verdict};
pub use drg::{classify, count_pnums, dbrg_pnums, drg_pnums, local_array, Classification, IntersectionArray};
pub use error::{Error, Result};
pub use graph::Graph;
pub use refine::{c2_equivalent, color_refine, fractional_witness, joint_refine, StableColoring};
pub use spectral::{char_poly, cospectral, generalized_cospectral, walk_counts, walk_equivalent};
