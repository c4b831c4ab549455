//! Exact decomposition of split Lie algebras and their weight modules into
//! ideals and submodules indexed by connection classes of roots and weights.
//!
//! All arithmetic is over ℚ. Subspaces are kept in reduced row echelon form,
//! so equal subspaces compare equal.

pub mod algebra;
pub mod commands;
pub mod connections;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod functional;
pub mod involution;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod par;
pub mod rational;
pub mod report;
pub mod split;
pub mod weight;

pub use algebra::{LieAlgebra, StructureConstants};
pub use connections::{connect, connect_roots, connect_weights, find_connection, is_connection, Mode, Partition};
pub use decomposition::{
    decompose_algebra, decompose_algebra_with_weights, decompose_module, ideal_for_class, minimal_weight_submodules,
    pair, simplicity_report, submodule_closure, submodule_for_class, Verdict,
};
pub use error::{Error, Result};
pub use functional::Functional;
pub use involution::Involution;
pub use linalg::{Matrix, Subspace};
pub use rational::Rational;
pub use split::{split, SplitData};
pub use weight::{weight_decompose, ModuleAction, WeightData};
