//! Young diagrams, PASEP states, and permutation tableaux.

mod enumerate;
mod shape;
mod tableau;

pub use enumerate::{enumerate_tableaux, f_lambda, fillings, weight_sum};
pub use shape::{shape_from_state, state_from_shape, PasepState, Shape, Step};
pub use tableau::{is_valid_tableau, ConjugateTableau, PermutationTableau, TableauJson, TableauStats};
