//! Permutations, planar binary trees, bi-leveled trees and compositions,
//! together with the maps and surgeries relating them.

pub mod bileveled;
pub mod composition;
pub mod permutation;
pub mod planar;
pub mod splitting;
pub mod tree;

pub use bileveled::{
    all_bileveled, avoids_pinned, beta, check_circling, compose_decomposition,
    forest_decomposition, is_coinvariant_shape, max_min, min_min, phi, right_cuts, right_graft,
    BiLeveledTree, CircledTree, ForestDecomposition,
};
pub use composition::{composition_to_bileveled, qsym_composition, Composition};
pub use permutation::Permutation;
pub use planar::{
    all_planar, gamma_left, gamma_right, left_comb, max_perm, min_perm, right_comb, tau, tau_fiber,
    PlanarTree,
};
pub use splitting::{graft, graft_msym_ssym, graft_msym_ysym, splittings, Splitting};
pub use tree::Tree;
