use super::Poly;
use crate::{Error, Result};

/// `∏_{m ∉ deleted} (x − α_m)^{k_m}` in the context `x, α₁ … α_r`.
///
/// `multiplicities[m - 1]` is `k_m`; pass all ones for the simple-root case,
/// where this is `f`, `f_k` or `f_{kℓ}` depending on the deleted set.
pub fn deleted_product(multiplicities: &[u32], deleted: &[usize]) -> Result<Poly> {
    let r = multiplicities.len();
    if let Some(&bad) = deleted.iter().find(|&&m| m == 0 || m > r) {
        return Err(Error::Index(format!("root index {bad} outside 1..={r}")));
    }
    let nvars = r + 1;
    if nvars > super::MAX_VARS {
        return Err(Error::Argument(format!("{r} roots exceed the supported variable count")));
    }
    let mut acc = Poly::one(nvars);
    for (m, &k) in (1..=r).zip(multiplicities) {
        if deleted.contains(&m) {
            continue;
        }
        let factor = Poly::difference(nvars, 0, m)?;
        for _ in 0..k {
            acc = &acc * &factor;
        }
    }
    Ok(acc)
}

/// `∏_{i<j ∈ indices} (αᵢ − αⱼ)²`, the discriminant of the monic polynomial
/// whose roots are the chosen `α`s.
pub fn discriminant_square_product(nvars: usize, indices: &[usize]) -> Result<Poly> {
    if indices.is_empty() {
        return Err(Error::Argument("empty root index set".into()));
    }
    let mut acc = Poly::one(nvars);
    for (pos, &i) in indices.iter().enumerate() {
        if i == 0 {
            return Err(Error::Index("root indices start at 1".into()));
        }
        for &j in &indices[pos + 1..] {
            let d = Poly::difference(nvars, i, j)?;
            acc = &(&acc * &d) * &d;
        }
    }
    Ok(acc)
}
