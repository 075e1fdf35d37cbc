//! Exact kernels for the critical-value map `(α₁, …, α_n) ↦ (f'(α₁), …, f'(α_n))`
//! of `f = ∏ (x − αᵢ)^{kᵢ}`.
//!
//! * [`rational`], [`poly`], [`roots`]: exact scalars, sparse multivariate
//!   polynomials in `x, α₁, …`, and seeded root sampling.
//! * [`matrix`]: exact determinants, minors and rank.
//! * [`jacobian`]: the simple-root Jacobian `T`, its principal minors and the
//!   discriminant identity they satisfy, plus the structural facts behind it.
//! * [`lab`]: multiple roots: the Jacobian `M` for a multiplicity profile,
//!   rank checks, minor enumeration and root-difference factorization.
//!
//! Everything is exact; there is no floating point anywhere in the crate.

pub mod error;
pub mod exec;
pub mod jacobian;
pub mod lab;
pub mod matrix;
pub mod poly;
pub mod profile;
pub mod rational;
pub mod ring;
pub mod roots;

pub use error::{Error, Result};
pub use exec::Execution;
pub use matrix::Matrix;
pub use poly::{Monomial, Poly};
pub use profile::MultiplicityProfile;
pub use rational::Rational;
pub use ring::RingEntry;
pub use roots::{sample_distinct_roots, RootVector};

/// Bound on numerators and denominators of sampled roots unless a caller
/// chooses otherwise.
pub const DEFAULT_ROOT_BOUND: u64 = 16;
