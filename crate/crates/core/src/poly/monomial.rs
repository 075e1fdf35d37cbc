/// Largest supported ambient variable count (`x` plus fifteen roots).
pub const MAX_VARS: usize = 16;

/// Exponent vector over `x, α₁, …, α₁₅`.
///
/// Ordering is graded lexicographic with `x > α₁ > … > α₁₅`: total degree
/// first, then the exponent of `x`, then of `α₁`, and so on. The cached
/// degree sits before the exponents, so the derived ordering is exactly
/// that. Unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    degree: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { degree: 0, exps: [0; MAX_VARS] };

    pub fn var(v: usize) -> Self {
        Self::ONE.with_exp(v, 1)
    }

    #[inline]
    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v] as u32
    }

    pub fn with_exp(mut self, v: usize, e: u32) -> Self {
        let old = self.exps[v] as u16;
        self.exps[v] = u8::try_from(e).expect("exponent exceeds 255");
        self.degree = self.degree - old + e as u16;
        self
    }

    pub fn total_degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).expect("exponent exceeds 255");
        }
        Monomial { degree: self.degree + other.degree, exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_sub(*o)?;
        }
        Some(Monomial { degree: self.degree - other.degree, exps })
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1)
    }

    /// Exponents in variable order `x, α₁, …`.
    pub fn exponents(&self) -> [u8; MAX_VARS] {
        self.exps
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", &self.exponents()[..self.support_len()])
    }
}
