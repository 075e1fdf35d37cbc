//! Multiple roots: the Jacobian `M` of `αᵢ ↦ f'(αᵢ)` for
//! `f = ∏ (x − αᵢ)^{kᵢ}`, its rank at rational points, its `s × s` minors and
//! their factorization into root differences.
//!
//! Rows of multiple roots vanish identically (`f'(αᵢ) ≡ 0` there), so
//! `rank M ≤ s`, the number of simple roots. [`conjecture_check`] tests that
//! the bound is attained.

mod bullets;
mod conjecture;
mod factor;
mod m_matrix;
mod minors;

pub use bullets::{
    bullet_checks, has_bullet_family, BulletReport, DoubleMultipleReport, MinorResidual, OneMultipleReport,
    SingleSimpleReport,
};
pub use conjecture::{conjecture_check, ConjectureReport, Verdict, Witness};
pub use factor::{factor_minor, FactorizationReport, PairExponents};
pub use m_matrix::{build_m, closed_form_m, derivative_m, numeric_m, SimpleRootJacobian};
pub use minors::{enumerate_minors, minor_for, Minor};
