pub mod algebra;
pub mod complex;
pub mod equivalence;
pub mod error;
pub mod labelling;
pub mod matrix2cat;
pub mod statesum;
pub mod structure;

pub use error::{Error, Result};
