//! Pattern counting and containment, homomorphism existence, and the
//! structural recognizers used by the dichotomy and stability checks.

mod c5;
mod count;
mod shorthand;
mod structure;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::canon::{self, CanonicalForm};
use crate::graph::Graph;

pub use c5::{c5_partition, c5_partition_default, C5Error, C5Partition, DEFAULT_EPS};
pub use shorthand::{parse_pattern, PatternError};
pub use structure::{erdos_gallai_path_check, exists_homomorphism, is_extended_friendship};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub pattern_canon: CanonicalForm,
    pub host_order: usize,
    #[serde(with = "crate::bigstr")]
    pub copies: BigUint,
    #[serde(with = "crate::bigstr")]
    pub labeled_copies: BigUint,
    pub nodes_explored: u64,
}

/// Injections `V(h) -> V(g)` mapping every edge of `h` onto an edge of `g`.
pub fn count_injective_homs(h: &Graph, g: &Graph) -> BigUint {
    count::injective_homs(h, g).0
}

/// Order of the automorphism group of `h`.
pub fn automorphism_count(h: &Graph) -> BigUint {
    match canon::canonical_labeling(h) {
        Ok(l) => l.aut_order,
        Err(_) => count_injective_homs(h, h),
    }
}

/// Not necessarily induced copies of `h` in `g`.
///
/// # Panics
/// If `h` is larger than the canonical-form cap.
pub fn count_copies(h: &Graph, g: &Graph) -> CountReport {
    let label = canon::canonical_labeling(h).expect("pattern within the canonical-form cap");
    let (labeled, nodes) = count::injective_homs(h, g);
    let copies = &labeled / &label.aut_order;
    CountReport {
        pattern_canon: label.form(),
        host_order: g.order(),
        copies,
        labeled_copies: labeled,
        nodes_explored: nodes,
    }
}

/// Whether `g` contains a copy of `f`; stops at the first one found.
pub fn contains(f: &Graph, g: &Graph) -> bool {
    count::has_injective_hom(f, g)
}
