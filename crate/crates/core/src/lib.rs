// `!(x < y)` is used on purpose so that NaN takes the failing branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
pub mod cubic;
pub mod error;
pub mod geom;
pub mod axioms;
pub mod script;
pub mod constructions;
