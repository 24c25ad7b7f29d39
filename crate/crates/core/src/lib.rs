//! Exact computation in the Higman-Thompson groups `G_{k,1}`.
//!
//! Elements are represented by tables: bijections between two finite
//! maximal prefix codes over the alphabet `A_k = {a_0, ..., a_{k-1}}`. A
//! table `{(p, q)}` acts on words by `p·w ↦ q·w`; the group element is the
//! maximum extension of that partial map, and multiplication is composition
//! followed by maximum extension.
//!
//! Besides the group arithmetic the crate implements the embeddings between
//! these groups: the successor-based embedding of `G_{2,1}` into every
//! `G_{k,1}` ([`embeddings::iota`]), Higman's code-substitution embedding
//! ([`embeddings::higman_embed`]), and their composite
//! ([`embeddings::embed_any`]), which embeds `G_{i,1}` into `G_{j,1}` for
//! all `i, j >= 2`.
//!
//! ```
//! use higman_thompson::{embeddings, format, Alphabet};
//!
//! let swap = format::parse_element("G 2\n0 -> 1\n1 -> 0\n").unwrap();
//! let image = embeddings::iota(&swap, Alphabet::new(3).unwrap()).unwrap();
//! assert_eq!(
//!     format::serialize(&image),
//!     "G 3\n0 -> 0\n10 -> 11\n11 -> 10\n12 -> 2\n2 -> 12\n"
//! );
//! assert!(embeddings::in_mixed_subgroup(&image));
//! ```

pub mod cli;
pub mod embeddings;
mod error;
pub mod format;
pub mod successor;
pub mod tables;
pub mod verify;
pub mod words;

pub use error::{Error, Result, TableDefect};
pub use tables::{GroupElement, Table};
pub use words::{Alphabet, PrefixCode, Word};
