//! Minimum-weight safe separators in vertex-weighted AT-free graphs.
//!
//! A vertex set `S` is a *safe* `A,B`-separator when removing it leaves `A`
//! inside one connected component and `B` inside another. Deciding whether
//! one exists is NP-hard in general; on AT-free graphs the lightest one is
//! found in polynomial time by combining two small families of minimal
//! separators ("close" to `A` and to `B`) with a max-flow vertex cut.
//!
//! ```
//! use safesep::{QueryInstance, SafeSeparatorAnswer, VertexSet, WeightedGraph, min_safe_separator, Mode};
//!
//! // path 0-1-2-3-4 with unit weights
//! let g = WeightedGraph::from_edges(vec![1; 5], &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
//! let q = QueryInstance::new(g, VertexSet::from([0]), VertexSet::from([4])).unwrap();
//! match min_safe_separator(&q, Mode::Fast).unwrap() {
//!     SafeSeparatorAnswer::Found { separator, weight } => {
//!         assert_eq!(separator.to_vec(), vec![1]);
//!         assert_eq!(weight, 1);
//!     }
//!     SafeSeparatorAnswer::None => unreachable!(),
//! }
//! ```

pub mod atfree;
pub mod cli;
pub mod close_to;
mod error;
pub mod flow;
pub mod graph;
pub mod oracle;
pub mod safe_sep;
pub mod separators;
mod vertex_set;

pub use atfree::{find_asteroidal_triple, is_at_free, AtWitness};
pub use close_to::{close_family_bound_check, close_to, close_to_with, CloseToReport, SeparatorFamily};
pub use error::{Result, SepError};
pub use flow::{min_weight_st_separator, vertex_connectivity_st};
pub use graph::{ComponentPartition, Subdivision, WeightedGraph};
pub use safe_sep::{build_contracted_instance, min_safe_separator, QueryInstance, SafeSeparatorAnswer};
pub use vertex_set::VertexSet;

/// Whether algorithms re-check their structural preconditions.
///
/// `Verified` confirms the input is AT-free and that the component
/// neighbourhoods seen inside close-separator enumeration form a chain; both
/// checks are skipped in `Fast` mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Fast,
    Verified,
}
