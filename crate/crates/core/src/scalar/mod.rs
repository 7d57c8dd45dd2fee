//! Exact scalars: Z[τ]/(τ⁴−1), Z[π]/(π²−1), and Laurent polynomials in `q`
//! over them.

mod cyclotomic;
mod gauss;
mod laurent;
mod pi;

pub use cyclotomic::CyclotomicInt4;
pub use gauss::{GaussLaurent, Gaussian};
pub use laurent::{idempotent_component, idempotent_component_scaled, specialize_tau, tau_monomial, TauLaurent};
pub use pi::PiScalar;
