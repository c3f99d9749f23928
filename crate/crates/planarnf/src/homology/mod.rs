//! Homological operators on graded slices, their kernels, Bargmann
//! adjoints, the homological-equation solver, and the nested subspace
//! chains that drive renormalization.

mod chain;
mod operator;
mod solve;

pub use chain::{build_chain, same_span, StabilizedJet, SubspaceChain};
pub use operator::{operator_matrix, GradedOperator, HomologyError};
pub use solve::{solve_homological, solve_joint, FreePolicy, HomologicalSolution};
