//! Executable checks of the spectral toughness theorems and their lemmas.

pub mod bounds;
pub mod brouwer;
pub mod lemmas;
pub mod random;
pub mod remark;
pub mod rotation;
pub mod search;
pub mod theorem;

pub use bounds::{check_bound, Bound, BoundReport};
pub use brouwer::{brouwer_margin, BrouwerReport};
pub use lemmas::{check_lemma_comparison, sweep, sweep_grid, ComparisonReport, Lemma, LemmaParams};
pub use random::{random_graph, split_seed, RandomModel};
pub use remark::{compare_candidates, reproduce_remark, RemarkRow, Winner};
pub use rotation::{rotation_experiment, RotationReport};
pub use search::{search_counterexamples, Counterexample, SearchReport};
pub use theorem::{
    check_graph_against_theorem, matches_family, threshold, Status, TheoremChecker, TheoremId, Threshold, Verdict,
};
