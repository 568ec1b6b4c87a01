//! isolab-core: partial Horn theories over multi-sorted signatures with
//! partial operations, finite partial models, per-theory word-problem engines
//! for a model with one adjoined indeterminate, and covariant isotropy groups
//! computed both by brute-force search and by closed forms.
//!
//! The crate is organized in layers:
//!
//! * [`phl`] — signatures, terms, Horn sequents, theories, and the `.thy`
//!   surface syntax (parser and canonical printer).
//! * [`models`] — finite partial structures, term evaluation, sequent
//!   satisfaction, model checking, and homomorphism classification.
//! * [`theories`] — concrete finite algebra (monoids, groups, categories,
//!   strict monoidal categories, crossed modules), theory builders for the
//!   builtin theory kinds, and encoding/decoding between the concrete types
//!   and generic partial structures.
//! * [`nf`] — normal-form engines deciding word problems over a model with
//!   one adjoined indeterminate, with rewrite-based and compositional routes.
//! * [`isotropy`] — the definable-inner-automorphism checker, brute-force
//!   isotropy groups, closed forms, and group-isomorphism testing.
//! * [`suites`] — deterministic randomized consistency suites shared by the
//!   test harness and the CLI.

pub mod isotropy;
pub mod models;
pub mod nf;
pub mod par;
pub mod phl;
pub mod suites;
pub mod theories;
