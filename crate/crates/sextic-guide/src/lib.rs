//! The workspace book, compiled.
//!
//! Each module embeds one chapter of `book/` verbatim, so every Rust
//! snippet in the book runs as a doc-test under `cargo test` and the
//! prose can never drift away from the code it describes.  Render the
//! pretty version with `mdbook build book`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scrollar-geography.md")]
pub mod scrollar_geography {}

#[doc = include_str!("../../../book/src/splitting-loci.md")]
pub mod splitting_loci {}

#[doc = include_str!("../../../book/src/witnesses.md")]
pub mod witnesses {}

#[doc = include_str!("../../../book/src/exact-solver.md")]
pub mod exact_solver {}

#[doc = include_str!("../../../book/src/file-formats.md")]
pub mod file_formats {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

// The workspace README rides along so its snippet stays compiling too.
#[doc = include_str!("../../../README.md")]
#[doc(hidden)]
pub mod readme {}
