//! Permutation model of the local branching of a spectral cover: local
//! monodromies at zeros of `Q_{2n}` and `Δ`, what happens when two of them
//! merge, and the global relation they satisfy.

mod global;
mod local;
mod merge;
mod perm;

pub use global::{generic_witness, validate_global_monodromy, GlobalReport};
pub use local::{enumerate_local_monodromies, LocalMonodromy, SheetInvolution, ZeroKind};
pub use merge::{
    classify_merge, enumerate_all_merges, resolution_count, DegenerationClass, MergeOutcome,
    MergeTable, MAX_MERGE_N,
};
pub use perm::Permutation;
