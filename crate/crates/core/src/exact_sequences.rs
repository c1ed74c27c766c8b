//! Dimension tables for the long exact sequence of Thm 4.1
//!
//! ```text
//! … → ⊕_{σ∈X_k} H̃_i(lk σ) → H̃_i(skel^c_k) → H̃_i(skel^c_{k−1}) → ⊕ H̃_{i−1}(lk σ) → …
//! ```
//!
//! and for its Cohen-Macaulay specialisations. The maps are never built;
//! only necessary conditions on dimensions are audited, so coefficients
//! must be a field.

use std::fmt::Write as _;

use serde::Serialize;

use crate::characterizations::{check_cohen_macaulay, coskeleton_homology, link_homology, Method};
use crate::complex::FacePoset;
use crate::error::{Error, Result};
use crate::homology::Coefficients;

/// `a_i = Σ dim H̃_i(lk σ)`, `b_i = dim H̃_i(skel^c_k)`, `c_i = dim H̃_i(skel^c_{k−1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceRow {
    pub i: i32,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub k: i32,
    pub d: i32,
    pub coeff: Coefficients,
    /// One row per degree `−1..=d`; everything outside is zero.
    pub rows: Vec<SequenceRow>,
}

impl SequenceTable {
    fn get(&self, i: i32) -> SequenceRow {
        self.rows
            .iter()
            .copied()
            .find(|r| r.i == i)
            .unwrap_or(SequenceRow { i, a: 0, b: 0, c: 0 })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,i,a,b,c\n");
        for r in &self.rows {
            let _ = writeln!(s, "{},{},{},{},{}", self.k, r.i, r.a, r.b, r.c);
        }
        s
    }
}

fn require_field(coeff: Coefficients, what: &'static str) -> Result<()> {
    if coeff.is_field() {
        Ok(())
    } else {
        Err(Error::FieldRequired(what))
    }
}

/// The three columns of Thm 4.1 for one `k`, each from its own order complex.
pub fn les_table(x: &FacePoset, k: i32, coeff: Coefficients) -> Result<SequenceTable> {
    require_field(coeff, "les_table")?;
    let d = x.dim();
    if k < 0 || k > d {
        return Err(Error::OutOfRange(format!("k = {k} must lie in 0..={d}")));
    }
    let links: Vec<_> = x.faces_of_dim(k).map(|s| link_homology(x, s, coeff)).collect();
    let b = coskeleton_homology(x, k, coeff);
    let c = coskeleton_homology(x, k - 1, coeff);
    let rows = (-1..=d)
        .map(|i| SequenceRow {
            i,
            a: links.iter().map(|h| h.rank(i)).sum(),
            b: b.rank(i),
            c: c.rank(i),
        })
        .collect();
    Ok(SequenceTable { k, d, coeff, rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    /// `Σ_i (−1)^i (a_i − b_i + c_i)`
    pub alternating_sum: i64,
    /// Neighbour bounds that fail, e.g. `"b_0 <= a_0 + c_0"`.
    pub violated_bounds: Vec<String>,
    pub passed: bool,
}

/// Necessary conditions for the table to come from an exact sequence.
pub fn exactness_audit(t: &SequenceTable) -> AuditReport {
    let mut sum = 0i64;
    let mut violated = Vec::new();
    for i in -1..=t.d + 1 {
        let r = t.get(i);
        let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
        sum += sign * (r.a as i64 - r.b as i64 + r.c as i64);
        let below = t.get(i - 1);
        let above = t.get(i + 1);
        if r.b > r.a + r.c {
            violated.push(format!("b_{i} <= a_{i} + c_{i}"));
        }
        if r.c > r.b + below.a {
            violated.push(format!("c_{i} <= b_{i} + a_{}", i - 1));
        }
        if r.a > r.b + above.c {
            violated.push(format!("a_{i} <= b_{i} + c_{}", i + 1));
        }
    }
    AuditReport {
        alternating_sum: sum,
        passed: sum == 0 && violated.is_empty(),
        violated_bounds: violated,
    }
}

/// One short exact sequence of Cor 5.4:
/// `0 → H̃_{d−k}(skel^c_{k−1}) → ⊕ H̃_{d−k−1}(lk σ) → H̃_{d−k−1}(skel^c_k) → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortSequence {
    pub k: i32,
    pub left: usize,
    pub middle: usize,
    pub right: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmSequenceReport {
    pub coeff: Coefficients,
    pub short: Vec<ShortSequence>,
    /// `dim H̃_d(|X|)`
    pub leading: usize,
    /// `Σ_{σ∈X_k} dim H̃_{d−k−1}(lk σ)` for `k = 0..=d`
    pub link_terms: Vec<usize>,
    /// The final `R`.
    pub trailing: usize,
    /// Alternating sum along the Cor 5.6 sequence, zero when exact.
    pub alternating_sum: i64,
    pub holds: bool,
}

/// Cor 5.4 additivity for every `k`, and the Cor 5.6 Euler relation.
pub fn cm_sequence_check(x: &FacePoset, coeff: Coefficients) -> Result<CmSequenceReport> {
    require_field(coeff, "cm_sequence_check")?;
    let cm = check_cohen_macaulay(x, coeff, Method::Coskeleton);
    if !cm.verdict {
        let why = cm.witness.map(|w| w.to_string()).unwrap_or_default();
        return Err(Error::NotCohenMacaulay(why));
    }
    let d = x.dim();
    let cos: Vec<_> = (-1..=d).map(|k| coskeleton_homology(x, k, coeff)).collect();
    let coskel = |k: i32| &cos[(k + 1) as usize];
    let mut short = Vec::new();
    let mut link_terms = Vec::new();
    for k in 0..=d {
        let middle: usize = x
            .faces_of_dim(k)
            .map(|s| link_homology(x, s, coeff).rank(d - k - 1))
            .sum();
        let left = coskel(k - 1).rank(d - k);
        let right = coskel(k).rank(d - k - 1);
        short.push(ShortSequence {
            k,
            left,
            middle,
            right,
            holds: left + right == middle,
        });
        link_terms.push(middle);
    }
    let leading = coskel(-1).rank(d);
    let trailing = 1;
    // positions: H̃_d at 0, the k-th link term at k + 1, R at d + 2
    let sign = |p: i32| if p % 2 == 0 { 1i64 } else { -1 };
    let alternating_sum = leading as i64
        + link_terms
            .iter()
            .enumerate()
            .map(|(k, &m)| sign(k as i32 + 1) * m as i64)
            .sum::<i64>()
        + sign(d + 2) * trailing as i64;
    Ok(CmSequenceReport {
        coeff,
        holds: alternating_sum == 0 && short.iter().all(|s| s.holds),
        short,
        leading,
        link_terms,
        trailing,
        alternating_sum,
    })
}
