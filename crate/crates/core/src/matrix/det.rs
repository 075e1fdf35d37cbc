use std::collections::HashMap;

use super::Matrix;
use crate::ring::RingEntry;
use crate::{Error, Poly, Result};

/// Largest size handled by cofactor expansion in [`determinant`].
pub const COFACTOR_MAX: usize = 3;

/// Largest symbolic determinant computed without an explicit override.
pub const SYMBOLIC_GUARD: usize = 8;

fn check_square<T: Clone>(m: &Matrix<T>) -> Result<()> {
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", m.rows(), m.cols())));
    }
    Ok(())
}

/// Exact determinant: cofactor expansion up to [`COFACTOR_MAX`], fraction-free
/// elimination above it.
pub fn determinant<T: RingEntry>(m: &Matrix<T>) -> Result<T> {
    check_square(m)?;
    if m.rows() <= COFACTOR_MAX {
        cofactor_expansion(m)
    } else {
        bareiss(m)
    }
}

/// Symbolic determinant, refused above [`SYMBOLIC_GUARD`] unless overridden.
///
/// Uses [`minor_expansion`]: with sparse low-degree entries it avoids the
/// large exact divisions that dominate Bareiss over a polynomial ring.
pub fn symbolic_determinant(m: &Matrix<Poly>, override_guard: bool) -> Result<Poly> {
    if m.rows() > SYMBOLIC_GUARD && !override_guard {
        return Err(Error::Guard { size: m.rows(), guard: SYMBOLIC_GUARD });
    }
    minor_expansion(m)
}

/// Division-free Laplace expansion with memoized minors: the determinant of
/// the first `k + 1` rows on each `(k + 1)`-subset of columns is built from
/// the `k`-row minors by expanding along row `k`. `O(2ⁿ · n)` products.
pub fn minor_expansion<T: RingEntry>(m: &Matrix<T>) -> Result<T> {
    check_square(m)?;
    let n = m.rows();
    if n > 24 {
        return Err(Error::Shape(format!("{n}x{n} is too large for subset expansion")));
    }
    let zero = m.get(0, 0).zero_like();
    // level k: column mask with k bits -> minor on rows 0..k
    let mut level: HashMap<u32, T> = HashMap::from([(0u32, m.get(0, 0).one_like())]);
    for row in 0..n {
        let mut next: HashMap<u32, T> = HashMap::new();
        for (&mask, minor) in &level {
            if minor.is_zero_entry() {
                continue;
            }
            for col in (0..n).filter(|c| mask & (1 << c) == 0) {
                let a = m.get(row, col);
                if a.is_zero_entry() {
                    continue;
                }
                // columns of the new minor above `col` come after it; moving
                // `col` to the last position costs one sign per such column
                let above = (mask >> col).count_ones();
                let term = a.times(minor);
                let term = if above % 2 == 1 { term.negated() } else { term };
                let slot = next.entry(mask | (1 << col)).or_insert_with(|| zero.clone());
                *slot = slot.plus(&term);
            }
        }
        level = next;
    }
    Ok(level.remove(&((1u32 << n) - 1)).unwrap_or(zero))
}

/// Laplace expansion along the first row.
pub fn cofactor_expansion<T: RingEntry>(m: &Matrix<T>) -> Result<T> {
    check_square(m)?;
    let n = m.rows();
    Ok(match n {
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0).times(m.get(1, 1)).minus(&m.get(0, 1).times(m.get(1, 0))),
        _ => {
            let mut acc = m.get(0, 0).zero_like();
            for j in 0..n {
                let a = m.get(0, j);
                if a.is_zero_entry() {
                    continue;
                }
                let term = a.times(&cofactor_expansion(&m.submatrix(&[0], &[j])?)?);
                acc = if j % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
            }
            acc
        }
    })
}

/// Bareiss fraction-free elimination. Every interior division is exact in
/// an integral domain, so a nonzero remainder means a kernel bug and panics.
/// Pivots are the first nonzero entry at or below the diagonal.
pub fn bareiss<T: RingEntry>(m: &Matrix<T>) -> Result<T> {
    check_square(m)?;
    let n = m.rows();
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = m.get(0, 0).one_like();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero_entry() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero_entry()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(prev.zero_like()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let num = pivot.times(a.get(i, j)).minus(&lead.times(a.get(k, j)));
                let value = num
                    .exact_quotient(&prev)
                    .unwrap_or_else(|| panic!("Bareiss step {k}: inexact division of {num} by {prev}"));
                a.data[i * n + j] = value;
            }
            a.data[i * n + k] = lead.zero_like();
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { det.negated() } else { det })
}
