use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::poly::divide_linear_difference;
use crate::{Error, Poly, Rational, Result};

/// Exponent `t` of `(αₐ − α_b)` for each pair `a < b` that divides the input.
/// Serializes as a map keyed `"a-b"`, in pair order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairExponents(pub BTreeMap<(usize, usize), u32>);

impl PairExponents {
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.0.get(&(a, b)).copied().unwrap_or(0)
    }
}

impl Serialize for PairExponents {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for ((a, b), t) in &self.0 {
            map.serialize_entry(&format!("{a}-{b}"), t)?;
        }
        map.end()
    }
}

/// `det = c · ∏ (αₐ − α_b)^t · g` with `g` free of root differences and
/// leading coefficient one.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub c: Rational,
    pub exponents: PairExponents,
    pub g: Poly,
    /// The product reproduces the input exactly.
    pub roundtrip_ok: bool,
    /// No `(αₐ − α_b)` divides `g`.
    pub residual_coprime: bool,
}

impl FactorizationReport {
    pub fn reconstruct(&self) -> Result<Poly> {
        let nvars = self.g.nvars();
        let mut acc = self.g.scale(&self.c);
        for (&(a, b), &t) in &self.exponents.0 {
            acc = &acc * &Poly::difference(nvars, a, b)?.pow(t);
        }
        Ok(acc)
    }
}

fn divisible_by_any_pair(p: &Poly) -> Result<bool> {
    let r = p.nvars() - 1;
    for a in 1..=r {
        for b in a + 1..=r {
            if divide_linear_difference(p, a, b)?.1 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Extracts the maximal power of each `(αₐ − α_b)`, pairs in lexicographic
/// order, then moves the leading coefficient of the remainder into `c`.
pub fn factor_minor(det: &Poly) -> Result<FactorizationReport> {
    if det.is_zero() {
        return Err(Error::Argument("cannot factor the zero polynomial".into()));
    }
    let r = det.nvars().saturating_sub(1);
    let mut rest = det.clone();
    let mut exponents = BTreeMap::new();
    for a in 1..=r {
        for b in a + 1..=r {
            let mut t = 0;
            loop {
                let (q, divisible) = divide_linear_difference(&rest, a, b)?;
                if !divisible {
                    break;
                }
                rest = q;
                t += 1;
            }
            if t > 0 {
                exponents.insert((a, b), t);
            }
        }
    }
    let c = rest.leading_term().map(|(_, c)| c.clone()).expect("nonzero remainder");
    let g = rest.scale(&c.recip().expect("nonzero leading coefficient"));
    let mut report =
        FactorizationReport { c, exponents: PairExponents(exponents), g, roundtrip_ok: false, residual_coprime: false };
    report.roundtrip_ok = report.reconstruct()? == *det;
    report.residual_coprime = !divisible_by_any_pair(&report.g)?;
    Ok(report)
}
