use serde::Serialize;

use super::build_m;
use crate::exec::Execution;
use crate::matrix::{symbolic_determinant, SYMBOLIC_GUARD};
use crate::{Error, MultiplicityProfile, Poly, Result};

/// An `s × s` minor of `M` on the simple-root rows.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Minor {
    /// One-based column indices, increasing.
    pub columns: Vec<usize>,
    pub det: Poly,
}

/// All `k`-subsets of `1..=r` in lexicographic order.
pub(crate) fn combinations(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..=r {
            if r - c + 1 < k - cur.len() {
                break;
            }
            cur.push(c);
            rec(c + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r, k, &mut Vec::new(), &mut out);
    out
}

/// Determinants of every minor on the last `s` rows, one per `s`-subset of
/// columns, in lexicographic column order.
pub fn enumerate_minors(profile: &MultiplicityProfile, override_guard: bool, exec: Execution) -> Result<Vec<Minor>> {
    let s = profile.s();
    if s == 0 {
        return Err(Error::Argument(format!("profile {profile} has no simple roots")));
    }
    if s > SYMBOLIC_GUARD && !override_guard {
        return Err(Error::Guard { size: s, guard: SYMBOLIC_GUARD });
    }
    let m = build_m(profile)?;
    let rows: Vec<usize> = profile.simple_indices().iter().map(|i| i - 1).collect();
    exec.try_map(combinations(profile.r(), s), |columns| {
        let zero_based: Vec<usize> = columns.iter().map(|c| c - 1).collect();
        let det = symbolic_determinant(&m.matrix().select(&rows, &zero_based), true)?;
        Ok(Minor { columns, det })
    })
}

/// Minor for one explicit column choice (one-based, increasing).
pub fn minor_for(profile: &MultiplicityProfile, columns: &[usize], override_guard: bool) -> Result<Minor> {
    let s = profile.s();
    if columns.len() != s || columns.iter().any(|&c| c == 0 || c > profile.r()) {
        return Err(Error::Argument(format!("columns {columns:?} are not {s} indices in 1..={}", profile.r())));
    }
    if columns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument(format!("columns {columns:?} must be strictly increasing")));
    }
    let m = build_m(profile)?;
    let rows: Vec<usize> = profile.simple_indices().iter().map(|i| i - 1).collect();
    let cols: Vec<usize> = columns.iter().map(|c| c - 1).collect();
    let det = symbolic_determinant(&m.matrix().select(&rows, &cols), override_guard)?;
    Ok(Minor { columns: columns.to_vec(), det })
}
