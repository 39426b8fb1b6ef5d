//! The guide's chapters, compiled so that their snippets run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/algebras.md")]
pub mod algebras {}

#[doc = include_str!("../../../book/src/complexes.md")]
pub mod complexes {}

#[doc = include_str!("../../../book/src/silting.md")]
pub mod silting {}

#[doc = include_str!("../../../book/src/stability.md")]
pub mod stability {}

#[doc = include_str!("../../../book/src/nested_chains.md")]
pub mod nested_chains {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
