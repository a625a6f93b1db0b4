//! Explicit extremal and near-extremal graph families.

mod bipartite;
mod blowups;
mod cycle_rich;
mod families;
mod field;
mod girth;
mod recipe;

use thiserror::Error;

use crate::graph::GraphError;

pub use bipartite::{biregular_bipartite, k_regular_bipartite};
pub use blowups::{apex_witness, blowup_cover, c5_blowup_regular, BlowupCover, C5Blowup};
pub use cycle_rich::{cycle_rich, CycleRich};
pub use families::{
    clique_minus_matching, cycle_complement, g_family, is_almost_star, is_star,
    regex_threshold, regex_tree_closed_form, rex_paths_closed_form, theorem6_extremal,
    theorem6_extremal_with, theorem6_plan, turan_graph, Component, CyclePartition, PathsPlan,
};
pub use girth::{
    deficient_high_girth, deficient_high_girth_with, high_girth_library, high_girth_regular,
    high_girth_regular_with, moore_bound, projective_plane_incidence, symplectic_quadrangle_incidence,
    DeficiencyPattern, Deficient, DEFAULT_SWAP_BUDGET,
};
pub use recipe::{Artifact, ConstructionRecipe, Family};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("clique minus a perfect matching needs an even order, got {0}")]
    OddOrder(usize),
    #[error("{0} has no partition into parts of size at least 4")]
    NoPartition(usize),
    #[error("pattern is not a tree")]
    NotATree,
    #[error("infeasible degrees: {0}")]
    InfeasibleDegrees(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("search budget of {0} attempts exhausted")]
    SearchExhausted(u64),
    #[error("the forbidden graph maps homomorphically into the core")]
    DichotomyViolated,
    #[error("unsupported order {0}: need n = 1 (mod 5) and n >= 11")]
    UnsupportedResidue(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
