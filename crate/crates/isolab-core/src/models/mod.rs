//! Finite partial structures over a theory's signature, term evaluation with
//! strict (Kleene) semantics, sequent satisfaction by exhaustive environment
//! iteration, model checking, and homomorphism classification.

mod eval;
mod file;
mod hom;
mod structure;

pub use eval::{check_model, eval_term, holds, ModelReport, Violation};
pub use file::{parse_model_file, ModelFile, ModelFileError};
pub use hom::{check_homomorphism, HomClassification, HomError, Homomorphism};
pub use structure::{ModelError, PartialStructure};
