//! Compiles every `rust` code fence in the book as a doc-test, so
//! `cargo test --workspace` fails whenever a chapter drifts out of sync
//! with the library. mdBook itself cannot run examples against crate
//! dependencies; routing the chapters through rustdoc can.
//!
//! One module per chapter keeps test failures attributable to a file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/intervals.md")]
pub mod intervals {}

#[doc = include_str!("../../../book/src/coverage.md")]
pub mod coverage {}

#[doc = include_str!("../../../book/src/special-functions.md")]
pub mod special_functions {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
