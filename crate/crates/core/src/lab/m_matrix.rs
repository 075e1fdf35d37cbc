use crate::jacobian::derivative_matrix_of;
use crate::poly::deleted_product;
use crate::{Error, Matrix, MultiplicityProfile, Poly, Rational, Result, RootVector};

/// `M` for a profile, over the context `x, α₁ … α_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleRootJacobian {
    profile: MultiplicityProfile,
    matrix: Matrix<Poly>,
}

impl SimpleRootJacobian {
    pub fn profile(&self) -> &MultiplicityProfile {
        &self.profile
    }

    pub fn matrix(&self) -> &Matrix<Poly> {
        &self.matrix
    }

    /// Entry `(i, j)`, one-based.
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        self.matrix.get(i - 1, j - 1)
    }

    /// Evaluates at distinct roots.
    pub fn evaluate(&self, roots: &RootVector) -> Result<Matrix<Rational>> {
        check_roots(&self.profile, roots)?;
        self.matrix.evaluate(&roots.point_with_x(Rational::zero()))
    }
}

fn check_roots(profile: &MultiplicityProfile, roots: &RootVector) -> Result<()> {
    if roots.len() != profile.r() {
        return Err(Error::Argument(format!("{} roots for a profile with r = {}", roots.len(), profile.r())));
    }
    roots.check_distinct()
}

/// Closed form: zero rows for multiple roots; for a simple root `i` and
/// `j ≠ i`, `M_ij = −k_j (αᵢ − αⱼ)^{k_j − 1} ∏_{m ≠ i,j} (αᵢ − α_m)^{k_m}`,
/// and `M_ii` makes the row sum vanish.
pub fn closed_form_m(profile: &MultiplicityProfile) -> Result<Matrix<Poly>> {
    let r = profile.r();
    let nvars = r + 1;
    let mut m = Matrix::from_fn(r, r, |_, _| Poly::zero(nvars));
    for i in profile.simple_indices() {
        let mut diagonal = Poly::zero(nvars);
        for j in (1..=r).filter(|&j| j != i) {
            let mut entry = Poly::constant(nvars, Rational::from(-(profile.k(j) as i64)));
            for m_idx in (1..=r).filter(|&m| m != i) {
                let e = if m_idx == j { profile.k(j) - 1 } else { profile.k(m_idx) };
                entry = &entry * &Poly::difference(nvars, i, m_idx)?.pow(e);
            }
            diagonal = &diagonal - &entry;
            *m.get_mut(i - 1, j - 1) = entry;
        }
        *m.get_mut(i - 1, i - 1) = diagonal;
    }
    Ok(m)
}

/// `∂/∂αⱼ [f'(αᵢ)]` from the expanded `f`, with no closed form involved.
pub fn derivative_m(profile: &MultiplicityProfile) -> Result<Matrix<Poly>> {
    let f = deleted_product(profile.multiplicities(), &[])?;
    derivative_matrix_of(&f, profile.r())
}

/// Builds `M` from the closed form and confirms it against [`derivative_m`];
/// a disagreement is a kernel fault.
pub fn build_m(profile: &MultiplicityProfile) -> Result<SimpleRootJacobian> {
    let matrix = closed_form_m(profile)?;
    if matrix != derivative_m(profile)? {
        return Err(Error::Kernel(format!("closed-form M disagrees with differentiation for {profile}")));
    }
    Ok(SimpleRootJacobian { profile: profile.clone(), matrix })
}

/// `M` at distinct rational roots straight from the closed form.
pub fn numeric_m(profile: &MultiplicityProfile, roots: &RootVector) -> Result<Matrix<Rational>> {
    check_roots(profile, roots)?;
    let a = roots.values();
    let r = profile.r();
    let mut m = Matrix::from_fn(r, r, |_, _| Rational::zero());
    for i in profile.simple_indices() {
        let mut diagonal = Rational::zero();
        for j in (1..=r).filter(|&j| j != i) {
            let mut entry = Rational::from(-(profile.k(j) as i64));
            for m_idx in (1..=r).filter(|&m| m != i) {
                let e = if m_idx == j { profile.k(j) - 1 } else { profile.k(m_idx) };
                entry = &entry * &(&a[i - 1] - &a[m_idx - 1]).pow(e);
            }
            diagonal = &diagonal - &entry;
            *m.get_mut(i - 1, j - 1) = entry;
        }
        *m.get_mut(i - 1, i - 1) = diagonal;
    }
    Ok(m)
}
