//! The bijection `Φ` from tableaux to permutations and the PT chain on
//! `S_{N+1}`.

mod permutation;
mod phi;
mod transitions;

pub use permutation::{
    collapse, normalize, perm_stats, project_perm, Label, LabeledPermutation, PermStats, Permutation,
};
pub use phi::{boundary_labels, phi, phi_inverse, PhiTable};
pub use transitions::{perm_transitions, PermMove};
