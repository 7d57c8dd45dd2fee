//! Exact computation of the osp(1|2) link invariant `Ĵ` from braid words, and
//! of the Z×Z₄-graded ("e-graded") Khovanov and covering Khovanov complexes
//! that categorify it.
//!
//! Everything here is pure and allocation-only; file formats, the corpus and
//! the command-line front end live in the `ebraid` crate.

#![no_std]

extern crate alloc;

pub mod braid;
pub mod covering;
pub mod cube;
mod error;
pub mod homology;
pub mod oracle;
pub mod scalar;
pub mod skein;
pub mod tl;
mod uf;

pub use error::{Error, Result};

pub use braid::BraidWord;
pub use scalar::{CyclotomicInt4, GaussLaurent, PiScalar, TauLaurent};
