//! Groups, cyclotomic numbers and integer linear algebra.

pub mod cyclotomic;
pub mod group;
pub mod snf;

pub use cyclotomic::Cyclotomic;
pub use group::{FiniteAbelianGroup, FiniteGroup};
pub use snf::{smith_normal_form, solve_mod, ModSolution, SmithDecomposition};
