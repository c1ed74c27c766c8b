//! Predicates from §3 and §5, each computable by more than one route.
//!
//! Every verdict records the route that produced it, so tests can run the
//! definition and the co-skeleton characterisation side by side and demand
//! agreement. Verdicts depend on the coefficient ring in general; it is
//! stored with each one.

mod balls;
mod cohen_macaulay;
mod duality;
mod leray;
mod spheres;

pub use balls::{check_stacked, classify_homology_type, Classification, HomologyType};
pub use cohen_macaulay::check_cohen_macaulay;
pub use duality::{dual_boundary_flip, link_shift_check, LinkShiftReport};
pub use leray::{check_leray, induced_leray_reading};
pub use spheres::{
    alexander_duality_check, check_neighbourly, skeleton_extremality_check, AlexanderReport, AlexanderRow,
    ExtremalityReport,
};

use std::fmt;

use serde::Serialize;

use crate::complex::{coskeleton_faces, link_faces, FaceId, FacePoset};
use crate::homology::{open_set_homology, Coefficients, HomologyProfile};

/// Which side of an equivalence produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Definition,
    Coskeleton,
    Skeleton,
    Combinatorial,
    Induced,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Definition => "definition",
            Method::Coskeleton => "coskeleton",
            Method::Skeleton => "skeleton",
            Method::Combinatorial => "combinatorial",
            Method::Induced => "induced",
        };
        f.write_str(s)
    }
}

/// Why a predicate failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_id: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<i32>,
    pub reason: String,
}

impl Witness {
    pub(crate) fn reason(reason: impl Into<String>) -> Self {
        Witness {
            face: None,
            face_id: None,
            k: None,
            degree: None,
            reason: reason.into(),
        }
    }

    pub(crate) fn at_face(x: &FacePoset, f: FaceId, degree: Option<i32>, reason: impl Into<String>) -> Self {
        Witness {
            face: Some(x.label(f).to_string()),
            face_id: Some(f.0),
            k: None,
            degree,
            reason: reason.into(),
        }
    }

    pub(crate) fn at_coskeleton(k: i32, degree: i32, reason: impl Into<String>) -> Self {
        Witness {
            face: None,
            face_id: None,
            k: Some(k),
            degree: Some(degree),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reason)?;
        if let Some(face) = &self.face {
            write!(f, " at face {face}")?;
        }
        if let Some(k) = self.k {
            write!(f, " at k = {k}")?;
        }
        if let Some(i) = self.degree {
            write!(f, " in degree {i}")?;
        }
        Ok(())
    }
}

/// Outcome of one predicate evaluated by one method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub predicate: String,
    pub params: Vec<(String, i64)>,
    pub coeff: Coefficients,
    pub method: Method,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    pub(crate) fn new(
        predicate: &str,
        params: &[(&str, i64)],
        coeff: Coefficients,
        method: Method,
        failure: Option<Witness>,
    ) -> Self {
        PropertyVerdict {
            predicate: predicate.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            coeff,
            method,
            verdict: failure.is_none(),
            witness: failure,
        }
    }
}

impl fmt::Display for PropertyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{}({}) over {} by {}: {}",
            self.predicate,
            params.join(", "),
            self.coeff,
            self.method,
            self.verdict
        )?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}

/// `H̃_*(|lk σ|)` through the order complex of the link face set.
pub fn link_homology(x: &FacePoset, sigma: FaceId, coeff: Coefficients) -> HomologyProfile {
    let lk = link_faces(x, sigma).expect("face of x");
    open_set_homology(&lk, coeff).expect("links are upward closed")
}

/// `H̃_*(|skel^c_k X|)`.
pub fn coskeleton_homology(x: &FacePoset, k: i32, coeff: Coefficients) -> HomologyProfile {
    open_set_homology(&coskeleton_faces(x, k), coeff).expect("co-skeletons are upward closed")
}

/// Link homology of every face, indexed by face id (the empty face first).
pub fn link_profiles(x: &FacePoset, coeff: Coefficients) -> Vec<HomologyProfile> {
    x.faces().map(|f| link_homology(x, f, coeff)).collect()
}

/// First facet whose dimension differs from `dim X`.
pub(crate) fn impurity(x: &FacePoset) -> Option<Witness> {
    let d = x.dim();
    x.facets().into_iter().find(|&f| x.dim_of(f) != d).map(|f| {
        Witness::at_face(
            x,
            f,
            None,
            format!("not pure: facet of dimension {}", x.dim_of(f)),
        )
    })
}
