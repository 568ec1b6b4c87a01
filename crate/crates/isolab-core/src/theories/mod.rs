//! Concrete finite algebraic structures (monoids, groups, categories,
//! strict monoidal categories, crossed modules, presheaves), builders for
//! the builtin theory kinds, conversions to and from generic partial
//! structures, and a small fixture library.

mod build;
mod category;
mod encode;
pub mod fixtures;
mod monoid;
mod presheaf;
mod smc;
mod xmod;

pub use build::{
    builtin_theory, category_theory, cmonoid_theory, group_theory, monoid_theory,
    presheaf_theory, strmoncat_theory, strsymmoncat_theory, xmod_theory, BuiltinTheoryKind,
};
pub use category::FiniteCategory;
pub use encode::{
    decode_category, decode_monoid, decode_presheaf, decode_smc, decode_xmod, encode_category,
    encode_monoid, encode_presheaf, encode_smc, encode_xmod, EncodeError,
};
pub use monoid::{
    enumerate_monoids, monoid_isomorphic, AlgebraError, FiniteGroup, FiniteMonoid,
};
pub use presheaf::Presheaf;
pub use smc::{delta, nabla, ob_monoid, arr_monoid, FiniteStrictMonCat};
pub use xmod::CrossedModule;
