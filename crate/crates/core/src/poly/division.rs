use super::{Monomial, Poly};
use crate::{Error, Result};

/// Leading-term division in graded lex. In an exact division the leading
/// monomial of the divisor divides the leading monomial of every remainder,
/// so the first failure proves the division is inexact.
pub(super) fn div_exact(p: &Poly, d: &Poly) -> Option<Poly> {
    let (lm, lc) = d.leading_term()?;
    let (lm, lc) = (*lm, lc.clone());
    let mut rem = p.clone();
    let mut quot = Poly::zero(p.nvars);
    while let Some((m, c)) = rem.leading_term() {
        let qm = m.div(&lm)?;
        let qc = c / &lc;
        rem.add_scaled_shifted(&-&qc, &qm, d);
        quot.terms.insert(qm, qc);
    }
    Some(quot)
}

/// Divides `p` by `αₐ − α_b` by synthetic division in `αₐ`.
///
/// Returns the quotient and whether the remainder `p|_{αₐ := α_b}` vanished.
/// When it did not, the returned quotient is still the synthetic-division
/// quotient, but `quotient · (αₐ − α_b) ≠ p`.
pub fn divide_linear_difference(p: &Poly, a: usize, b: usize) -> Result<(Poly, bool)> {
    if a == b {
        return Err(Error::Argument(format!("cannot divide by α{a} − α{b}")));
    }
    if a == 0 || b == 0 {
        return Err(Error::Argument("root indices start at 1".into()));
    }
    p.check_var(a)?;
    p.check_var(b)?;

    let degree = p.degree_in(a)?.unwrap_or(0) as usize;
    // coeffs[e] = coefficient of αₐ^e, free of αₐ
    let mut coeffs = vec![Poly::zero(p.nvars); degree + 1];
    for (m, c) in p.terms() {
        coeffs[m.exp(a) as usize].terms.insert(m.with_exp(a, 0), c.clone());
    }

    let alpha_b = Monomial::var(b);
    let one = crate::Rational::one();
    let mut quot = Poly::zero(p.nvars);
    let mut carry = Poly::zero(p.nvars);
    for e in (1..=degree).rev() {
        // q_{e-1} = c_e + α_b · q_e
        let mut next = std::mem::replace(&mut coeffs[e], Poly::zero(p.nvars));
        next.add_scaled_shifted(&one, &alpha_b, &carry);
        for (m, c) in next.terms() {
            quot.terms.insert(m.with_exp(a, (e - 1) as u32), c.clone());
        }
        carry = next;
    }
    let mut remainder = std::mem::replace(&mut coeffs[0], Poly::zero(p.nvars));
    remainder.add_scaled_shifted(&one, &alpha_b, &carry);
    Ok((quot, remainder.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::{a, c};
    use crate::Rational;

    #[test]
    fn difference_of_squares() {
        let p = &(&a(3, 1) * &a(3, 1)) - &(&a(3, 2) * &a(3, 2));
        let (q, ok) = divide_linear_difference(&p, 1, 2).unwrap();
        assert!(ok);
        assert_eq!(q, &a(3, 1) + &a(3, 2));
    }

    #[test]
    fn nonzero_remainder() {
        let p = &a(3, 1) + &a(3, 2);
        let (_, ok) = divide_linear_difference(&p, 1, 2).unwrap();
        assert!(!ok);
    }

    #[test]
    fn repeated_division_extracts_square() {
        let d = Poly::difference(4, 1, 2).unwrap();
        let p = (&d * &d).scale(&Rational::from(-2));
        let (q1, ok1) = divide_linear_difference(&p, 1, 2).unwrap();
        let (q2, ok2) = divide_linear_difference(&q1, 1, 2).unwrap();
        assert!(ok1 && ok2);
        assert_eq!(q2, c(4, -2));
        let (_, ok3) = divide_linear_difference(&q2, 1, 2).unwrap();
        assert!(!ok3);
    }

    #[test]
    fn reversed_pair_negates_quotient() {
        let d = Poly::difference(3, 1, 2).unwrap();
        let (q, ok) = divide_linear_difference(&d, 2, 1).unwrap();
        assert!(ok);
        assert_eq!(q, c(3, -1));
    }

    #[test]
    fn argument_errors() {
        let p = a(3, 1);
        assert!(matches!(divide_linear_difference(&p, 1, 1), Err(Error::Argument(_))));
        assert!(matches!(divide_linear_difference(&p, 0, 1), Err(Error::Argument(_))));
        assert!(matches!(divide_linear_difference(&p, 1, 3), Err(Error::Context(_))));
    }
}
