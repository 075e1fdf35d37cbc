//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are indexed `0 = x` and `i = αᵢ` for `i ≥ 1`. A polynomial
//! carries its ambient variable count; arithmetic between polynomials with
//! different counts is a context error. Terms live in a map ordered by
//! graded lex (see [`Monomial`]), so the last entry is the leading term and
//! iteration order is canonical.

mod division;
mod monomial;
mod products;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

pub use division::divide_linear_difference;
pub use monomial::{Monomial, MAX_VARS};
pub use products::{deleted_product, discriminant_square_product};

use crate::{Error, Rational, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    /// Panics if `nvars` exceeds [`MAX_VARS`]; callers validate sizes up front.
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "ambient variable count {nvars} exceeds {MAX_VARS}");
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, v: usize) -> Result<Self> {
        let mut p = Poly::zero(nvars);
        p.check_var(v)?;
        p.terms.insert(Monomial::var(v), Rational::one());
        Ok(p)
    }

    /// `αₐ − α_b`, or `x − α_b` when `a = 0`.
    pub fn difference(nvars: usize, a: usize, b: usize) -> Result<Self> {
        Ok(&Poly::var(nvars, a)? - &Poly::var(nvars, b)?)
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            if m.support_len() > nvars {
                return Err(Error::Context(format!("monomial {m:?} uses a variable outside 0..{nvars}")));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Value of a constant polynomial; `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.total_degree())
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, v: usize) -> Result<Option<u32>> {
        self.check_var(v)?;
        Ok(self.terms.keys().map(|m| m.exp(v)).max())
    }

    /// The coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, v: usize, e: u32) -> Result<Poly> {
        self.check_var(v)?;
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exp(v) == e {
                out.terms.insert(m.with_exp(v, 0), c.clone());
            }
        }
        Ok(out)
    }

    pub fn check_var(&self, v: usize) -> Result<()> {
        if v >= self.nvars {
            return Err(Error::Context(format!("variable {v} outside ambient context of {} variables", self.nvars)));
        }
        Ok(())
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Context(format!("ambient variable counts differ: {} vs {}", self.nvars, other.nvars)));
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · m · other`
    fn add_scaled_shifted(&mut self, c: &Rational, m: &Monomial, other: &Poly) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), c * oc);
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut out = Poly::zero(self.nvars);
        if small.terms.len() * large.terms.len() <= 256 {
            for (m, c) in &small.terms {
                out.add_scaled_shifted(c, m, large);
            }
            return Ok(out);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(large.terms.len() * 2);
        for (m, c) in &small.terms {
            for (om, oc) in &large.terms {
                let prod = c * oc;
                match acc.entry(m.mul(om)) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        let sum = slot.get() + &prod;
                        *slot.get_mut() = sum;
                    }
                }
            }
        }
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Product of a list of polynomials; the empty product is one.
    pub fn product<'a, I>(nvars: usize, factors: I) -> Poly
    where
        I: IntoIterator<Item = &'a Poly>,
    {
        factors.into_iter().fold(Poly::one(nvars), |acc, f| &acc * f)
    }

    pub fn partial_derivative(&self, v: usize) -> Result<Poly> {
        self.check_var(v)?;
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.terms.insert(m.with_exp(v, e - 1), c * &Rational::from(e as i64));
            }
        }
        Ok(out)
    }

    /// Replaces variable `v` by the polynomial `value`.
    pub fn substitute(&self, v: usize, value: &Poly) -> Result<Poly> {
        self.check_var(v)?;
        self.check_same(value)?;
        let max_e = self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Poly::one(self.nvars));
        for e in 1..=max_e as usize {
            let next = &powers[e - 1] * value;
            powers.push(next);
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out.add_scaled_shifted(c, &m.with_exp(v, 0), &powers[e]);
        }
        Ok(out)
    }

    pub fn substitute_value(&self, v: usize, value: &Rational) -> Result<Poly> {
        self.substitute(v, &Poly::constant(self.nvars, value.clone()))
    }

    /// Evaluates at a full point, one value per ambient variable.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::Context(format!(
                "point has {} coordinates, context has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut cache: Vec<Vec<Rational>> = point.iter().map(|p| vec![Rational::one(), p.clone()]).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, powers) in cache.iter_mut().enumerate() {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                while powers.len() <= e {
                    let next = &powers[powers.len() - 1] * &powers[1];
                    powers.push(next);
                }
                t = &t * &powers[e];
            }
            total = &total + &t;
        }
        Ok(total)
    }

    /// Renames variables: old variable `v` becomes `map[v]`. `map` must be a
    /// permutation of `0..nvars`.
    pub fn rename_vars(&self, map: &[usize]) -> Result<Poly> {
        let mut seen = vec![false; self.nvars];
        if map.len() != self.nvars || map.iter().any(|&t| t >= self.nvars || std::mem::replace(&mut seen[t], true)) {
            return Err(Error::Argument(format!("{map:?} is not a permutation of 0..{}", self.nvars)));
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let renamed = (0..self.nvars).fold(Monomial::ONE, |acc, v| acc.with_exp(map[v], m.exp(v)));
            (renamed, c.clone())
        });
        Poly::from_terms(self.nvars, terms)
    }

    pub fn swap_vars(&self, u: usize, v: usize) -> Result<Poly> {
        self.check_var(u)?;
        self.check_var(v)?;
        let mut map: Vec<usize> = (0..self.nvars).collect();
        map.swap(u, v);
        self.rename_vars(&map)
    }

    /// Exact multivariate division: `Some(q)` with `q · divisor = self`, or
    /// `None` when `divisor` does not divide `self`.
    pub fn checked_div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        self.check_same(divisor)?;
        Ok(division::div_exact(self, divisor))
    }

    /// Shorthand for [`Poly::checked_div_exact`] that panics on a context mismatch.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        self.checked_div_exact(divisor).expect("polynomial context mismatch")
    }
}

impl fmt::Display for Poly {
    /// Terms in descending graded-lex order, e.g. `a2^2 - 2*a1*a2 + a1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut first = true;
            for v in 0..self.nvars {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if v == 0 {
                    f.write_str("x")?;
                } else {
                    write!(f, "a{v}")?;
                }
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.nvars, self)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// Operator forms panic on context mismatch; use the `checked_*` methods
// when the contexts are not known to agree.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial context mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial context mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial context mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}
