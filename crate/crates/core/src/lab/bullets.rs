//! Checks of the specific minor shapes predicted for three profile families:
//!
//! * exactly one simple root: the `1 × 1` minors against
//!   `−k₁ · f_r(α_r) / (α_r − α₁)`;
//! * `(k, 1, …, 1)`: the exponent pattern of the principal minor and its
//!   constant against the rising products `k(k+1)⋯(k+r−1)` and `k(k+1)⋯(k+r−2)`;
//! * `(k, ℓ, 1, 1, 1)`: the residual factor `g` of each minor against the
//!   linear forms `α₁ + 2α₂ − 3α₃` and `α₁ + 2α₂ − 3α₄`.
//!
//! Constants and residuals are reported, not asserted; a disagreement with
//! the predicted value is recorded as a finding.

use serde::Serialize;

use super::factor::{factor_minor, FactorizationReport};
use super::m_matrix::build_m;
use super::minors::{enumerate_minors, minor_for};
use crate::exec::Execution;
use crate::poly::{deleted_product, divide_linear_difference};
use crate::{Error, MultiplicityProfile, Poly, Rational, Result};

#[derive(Clone, Debug, Serialize)]
pub struct OneByOne {
    pub column: usize,
    pub minor: Poly,
    pub matches_prediction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingleSimpleReport {
    /// `−k₁ · f_r(α_r) / (α_r − α₁)`
    pub prediction: Poly,
    pub minors: Vec<OneByOne>,
    pub matching_columns: Vec<usize>,
    /// Column `r`, the diagonal (principal) choice.
    pub principal_column: usize,
    pub principal_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finding: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OneMultipleReport {
    pub k: u32,
    pub r: usize,
    pub principal_columns: Vec<usize>,
    pub factorization: FactorizationReport,
    /// `t(α₁ − α_ℓ) = k − 1` and `t(α_m − α_ℓ) = 2` for `1 < m < ℓ`, and no
    /// other root differences.
    pub exponent_pattern_ok: bool,
    /// `k(k+1)⋯(k+r−1)`
    pub candidate_full: Rational,
    /// `k(k+1)⋯(k+r−2)`
    pub candidate_short: Rational,
    pub matches_full: bool,
    pub matches_short: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finding: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorResidual {
    pub columns: Vec<usize>,
    pub factorization: FactorizationReport,
    /// `g ∝ α₁ + 2α₂ − 3α₃`
    pub matches_alpha3_form: bool,
    /// `g ∝ α₁ + 2α₂ − 3α₄`
    pub matches_alpha4_form: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleMultipleReport {
    pub k: u32,
    pub l: u32,
    pub principal_columns: Vec<usize>,
    pub principal_matches_alpha3_form: bool,
    /// Column sets whose residual is proportional to `α₁ + 2α₂ − 3α₄`.
    pub alpha4_form_columns: Vec<Vec<usize>>,
    pub minors: Vec<MinorResidual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finding: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "pattern", rename_all = "kebab-case")]
pub enum BulletReport {
    SingleSimpleRoot(SingleSimpleReport),
    OneMultipleRoot(OneMultipleReport),
    TwoMultipleRoots(DoubleMultipleReport),
}

impl BulletReport {
    pub fn finding(&self) -> Option<&str> {
        match self {
            BulletReport::SingleSimpleRoot(r) => r.finding.as_deref(),
            BulletReport::OneMultipleRoot(r) => r.finding.as_deref(),
            BulletReport::TwoMultipleRoots(r) => r.finding.as_deref(),
        }
    }

    /// Roundtrip failures are kernel faults, never findings.
    pub fn roundtrips_ok(&self) -> bool {
        match self {
            BulletReport::SingleSimpleRoot(_) => true,
            BulletReport::OneMultipleRoot(r) => r.factorization.roundtrip_ok,
            BulletReport::TwoMultipleRoots(r) => r.minors.iter().all(|m| m.factorization.roundtrip_ok),
        }
    }
}

fn rising_product(k: u32, len: usize) -> Rational {
    (0..len as i64).fold(Rational::one(), |acc, i| &acc * &Rational::from(k as i64 + i))
}

fn single_simple(profile: &MultiplicityProfile) -> Result<SingleSimpleReport> {
    let r = profile.r();
    let nvars = r + 1;
    let m = build_m(profile)?;
    let f_r_at_root = deleted_product(profile.multiplicities(), &[r])?.substitute(0, &Poly::var(nvars, r)?)?;
    let (quotient, divisible) = divide_linear_difference(&f_r_at_root, r, 1)?;
    if !divisible {
        return Err(Error::Kernel(format!("f_r(α_r) not divisible by α{r} − α1")));
    }
    let prediction = quotient.scale(&Rational::from(-(profile.k(1) as i64)));
    let minors: Vec<OneByOne> = (1..=r)
        .map(|column| {
            let minor = m.entry(r, column).clone();
            let matches_prediction = minor == prediction;
            OneByOne { column, minor, matches_prediction }
        })
        .collect();
    let matching_columns: Vec<usize> = minors.iter().filter(|o| o.matches_prediction).map(|o| o.column).collect();
    let principal_matches = matching_columns.contains(&r);
    let finding = (!principal_matches)
        .then(|| format!("prediction matches column(s) {matching_columns:?}, not the principal column {r}"));
    Ok(SingleSimpleReport { prediction, minors, matching_columns, principal_column: r, principal_matches, finding })
}

fn one_multiple(profile: &MultiplicityProfile) -> Result<OneMultipleReport> {
    let (k, r) = (profile.k(1), profile.r());
    let principal_columns = profile.simple_indices();
    let minor = minor_for(profile, &principal_columns, false)?;
    let factorization = factor_minor(&minor.det)?;

    let mut expected = std::collections::BTreeMap::new();
    for l in 2..=r {
        expected.insert((1, l), k - 1);
        for m in 2..l {
            expected.insert((m, l), 2);
        }
    }
    expected.retain(|_, t| *t > 0);
    let exponent_pattern_ok = factorization.exponents.0 == expected;

    let candidate_full = rising_product(k, r);
    let candidate_short = rising_product(k, r - 1);
    let observed = factorization.c.abs();
    let matches_full = factorization.g.as_constant().is_some() && observed == candidate_full;
    let matches_short = factorization.g.as_constant().is_some() && observed == candidate_short;
    let finding = (!matches_full).then(|| {
        format!(
            "observed |c| = {observed}, rising product to k+r-1 gives {candidate_full}, to k+r-2 gives {candidate_short}"
        )
    });
    Ok(OneMultipleReport {
        k,
        r,
        principal_columns,
        factorization,
        exponent_pattern_ok,
        candidate_full,
        candidate_short,
        matches_full,
        matches_short,
        finding,
    })
}

/// `true` when `g` is a nonzero scalar multiple of `target`.
fn proportional(g: &Poly, target: &Poly) -> bool {
    match (g.leading_term(), target.leading_term()) {
        (Some((gm, gc)), Some((tm, tc))) => gm == tm && g.scale(&(tc / gc)) == *target,
        _ => false,
    }
}

fn two_multiple(profile: &MultiplicityProfile, exec: Execution) -> Result<DoubleMultipleReport> {
    let nvars = profile.r() + 1;
    let a = |i| Poly::var(nvars, i);
    let form = |last: usize| -> Result<Poly> { Ok(&(&a(1)? + &a(2)?.scale(&2.into())) - &a(last)?.scale(&3.into())) };
    let (form3, form4) = (form(3)?, form(4)?);
    let principal_columns = profile.simple_indices();

    let minors = enumerate_minors(profile, false, exec)?
        .into_iter()
        .filter(|m| !m.det.is_zero())
        .map(|m| {
            let factorization = factor_minor(&m.det)?;
            let matches_alpha3_form = proportional(&factorization.g, &form3);
            let matches_alpha4_form = proportional(&factorization.g, &form4);
            Ok(MinorResidual { columns: m.columns, factorization, matches_alpha3_form, matches_alpha4_form })
        })
        .collect::<Result<Vec<_>>>()?;

    let principal_matches_alpha3_form = minors.iter().any(|m| m.columns == principal_columns && m.matches_alpha3_form);
    let alpha4_form_columns: Vec<Vec<usize>> =
        minors.iter().filter(|m| m.matches_alpha4_form).map(|m| m.columns.clone()).collect();
    let finding = if !principal_matches_alpha3_form {
        let g = minors.iter().find(|m| m.columns == principal_columns).map(|m| m.factorization.g.to_string());
        Some(format!(
            "principal residual is {} rather than a multiple of a1 + 2*a2 - 3*a3",
            g.unwrap_or_else(|| "0".into())
        ))
    } else if alpha4_form_columns.is_empty() {
        Some("no minor has a residual proportional to a1 + 2*a2 - 3*a4".into())
    } else {
        None
    };
    Ok(DoubleMultipleReport {
        k: profile.k(1),
        l: profile.k(2),
        principal_columns,
        principal_matches_alpha3_form,
        alpha4_form_columns,
        minors,
        finding,
    })
}

fn families(profile: &MultiplicityProfile) -> [bool; 3] {
    let ks = profile.multiplicities();
    let (r, s) = (profile.r(), profile.s());
    [s == 1 && r >= 2, r >= 2 && ks[0] > 1 && s == r - 1, r == 5 && ks[0] > 1 && ks[1] > 1 && s == 3]
}

/// Whether [`bullet_checks`] has anything to say about `profile`.
pub fn has_bullet_family(profile: &MultiplicityProfile) -> bool {
    families(profile).contains(&true)
}

/// Runs every check whose profile family contains `profile`.
pub fn bullet_checks(profile: &MultiplicityProfile, exec: Execution) -> Result<Vec<BulletReport>> {
    let [single, one, two] = families(profile);
    let mut out = Vec::new();
    if single {
        out.push(BulletReport::SingleSimpleRoot(single_simple(profile)?));
    }
    if one {
        out.push(BulletReport::OneMultipleRoot(one_multiple(profile)?));
    }
    if two {
        out.push(BulletReport::TwoMultipleRoots(two_multiple(profile, exec)?));
    }
    if out.is_empty() {
        return Err(Error::Argument(format!("profile {profile} matches none of the checked families")));
    }
    Ok(out)
}
