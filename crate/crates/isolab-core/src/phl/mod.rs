//! Multi-sorted signatures with partial operations, terms, Horn sequents,
//! and theories, together with the `.thy` surface syntax.
//!
//! Equality of terms is not assumed reflexive: an equation `t = u` asserts
//! that both sides are defined and equal, and `def(t)` is sugar for `t = t`.

mod formula;
mod parser;
mod pretty;
mod signature;
mod term;
mod theory;

pub use formula::{Equation, Formula, Sequent};
pub use parser::{parse_term_in_context, parse_theory, ParseError};
pub use signature::{Context, OpDecl, Signature, SignatureError};
pub use term::{infer_sort, substitute, Term, TermError};
pub use theory::Theory;
