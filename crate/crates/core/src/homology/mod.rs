//! The e-graded Khovanov complex of a braid closure and its homology.

mod complex;
pub mod frobenius;
mod snf;
mod sparse;
mod table;

pub(crate) use complex::{chain_layout, label, with_label};
pub use complex::{tqft_complex, ChainComplex, EGradedComplex, Generator};
pub use frobenius::{FrobeniusSpec, BASIS_DEGREES};
pub use snf::{invariant_factors, invariant_factors_dense, rank_mod2, smith_normal_form, IntMatrix, SmithForm};
pub use sparse::{Entry, SparseMatrix};
pub use table::{forget_tau, forget_tau_mod2, homology, homology_mod2, HomologyGroup, HomologyTable, Mod2Table};
