//! Graph toughness and adjacency spectral radii.
//!
//! The crate computes Chvátal toughness, Enomoto's variation of toughness and
//! their one-sided bipartite analogues by exact cut enumeration, spectral
//! radii by power iteration and dense Jacobi solves, and exact characteristic
//! polynomials of equitable quotient matrices. The [`verify`] module turns the
//! spectral sufficient conditions for `τ`-toughness into executable checks.

pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod ratio;
pub mod spectra;
pub mod toughness;
pub mod verify;

pub use error::{Error, Result};
pub use family::{build_family, Family, FamilySpec};
pub use graph::{
    bipartite_join, complete, complete_bipartite, complete_join_empty, cycle, disjoint_union, empty_bipartite, join,
    path, petersen, Bipartite, Graph, Side, SidePartition,
};
pub use io::{parse_graph, serialize_graph, GraphFormat};
pub use ratio::ExactRatio;
pub use spectra::{
    char_poly, full_spectrum, largest_real_root, quotient_matrix, second_largest_absolute_eigenvalue,
    spectral_radius, CharPoly, QuotientMatrix, RationalMatrix, SpectralResult,
};
pub use toughness::{
    bipartite_toughness, components_after_deletion, is_tau_tough, toughness, variation_toughness, BipartiteKind,
    CutWitness, Toughness,
};
