#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::wrong_self_convention)]

pub mod algebra;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod field;
pub mod io;
pub mod linalg;
pub mod matalg;
pub mod nested_colimit;
pub mod poly;
pub mod silting;
pub mod stability;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
