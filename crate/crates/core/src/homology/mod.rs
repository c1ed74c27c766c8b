//! Reduced homology and cohomology over ℤ, ℚ and prime fields.
//!
//! The chain complex is augmented (`C_{−1} = R`), so the empty complex has
//! `H̃_{−1} = R` and every other complex is computed uniformly.

pub mod chain;
pub mod field;
pub mod snf;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{FacePoset, FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::subdivision::order_complex;
use chain::{boundary_matrix, SparseMatrix};

/// Coefficient ring `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Coefficients {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::OutOfRange(format!("prime {p} is too large")));
        }
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::NotPrime(p));
        }
        Ok(Coefficients::PrimeField(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Coefficients::Integers)
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Rationals => write!(f, "Q"),
            Coefficients::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// Accepts `z`, `q` and `gf:p`.
impl FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "z" => Ok(Coefficients::Integers),
            "q" => Ok(Coefficients::Rationals),
            _ => {
                let p = lower
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown coefficients {s:?}")))?;
                Coefficients::prime(p)
            }
        }
    }
}

/// One homology group: `R^rank` plus, over ℤ, `⊕ ℤ/t` for each invariant
/// factor `t > 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Group {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl Group {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// `≅ R`.
    pub fn is_free_rank_one(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

/// Nonzero reduced homology groups by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    pub coeff: Coefficients,
    groups: BTreeMap<i32, Group>,
}

impl HomologyProfile {
    pub fn new(coeff: Coefficients) -> Self {
        HomologyProfile {
            coeff,
            groups: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, degree: i32, group: Group) {
        if group.is_zero() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, group);
        }
    }

    pub fn group(&self, degree: i32) -> Group {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: i32) -> usize {
        self.groups.get(&degree).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, degree: i32) -> &[u64] {
        self.groups.get(&degree).map_or(&[], |g| &g.torsion)
    }

    pub fn is_zero_in(&self, degree: i32) -> bool {
        !self.groups.contains_key(&degree)
    }

    /// All groups vanish.
    pub fn is_acyclic(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn nonzero_degrees(&self) -> Vec<i32> {
        self.groups.keys().copied().collect()
    }

    pub fn groups(&self) -> impl Iterator<Item = (i32, &Group)> {
        self.groups.iter().map(|(&i, g)| (i, g))
    }

    /// `true` when the only nonzero group is `R` in degree `d`.
    pub fn is_sphere_like(&self, d: i32) -> bool {
        self.groups.len() == 1 && self.groups.get(&d).is_some_and(Group::is_free_rank_one)
    }

    /// Moves every group from degree `i` to `i + s`.
    pub fn shifted(&self, s: i32) -> Self {
        HomologyProfile {
            coeff: self.coeff,
            groups: self.groups.iter().map(|(&i, g)| (i + s, g.clone())).collect(),
        }
    }

    /// Same groups, ignoring which coefficients produced them.
    pub fn same_groups(&self, other: &HomologyProfile) -> bool {
        self.groups == other.groups
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let groups: BTreeMap<String, &Group> = self.groups.iter().map(|(i, g)| (i.to_string(), g)).collect();
        let mut st = ser.serialize_struct("HomologyProfile", 2)?;
        st.serialize_field("coeff", &self.coeff)?;
        st.serialize_field("groups", &groups)?;
        st.end()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|(i, g)| {
                let mut terms = Vec::new();
                if g.rank > 0 {
                    terms.push(if g.rank == 1 {
                        self.coeff.to_string()
                    } else {
                        format!("{}^{}", self.coeff, g.rank)
                    });
                }
                terms.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
                format!("H{i} = {}", terms.join(" + "))
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn rank_and_torsion(m: &SparseMatrix, coeff: Coefficients) -> (usize, Vec<u64>) {
    match coeff {
        Coefficients::Integers => {
            let s = snf::smith(m);
            let t = s.torsion_u64();
            (s.rank, t)
        }
        Coefficients::Rationals => (field::rank_rational(m), Vec::new()),
        Coefficients::PrimeField(p) => (field::rank_mod_p(m, p), Vec::new()),
    }
}

/// `H̃_*(K; R)`.
pub fn homology(k: &SimplicialComplex, coeff: Coefficients) -> HomologyProfile {
    let d = k.dim();
    // bd[j] = rank and torsion of ∂_j : C_j → C_{j−1}, j = 0..=d
    let bd: Vec<(usize, Vec<u64>)> = (0..=d)
        .map(|j| rank_and_torsion(&boundary_matrix(k, j), coeff))
        .collect();
    let rank_of = |j: i32| if (0..=d).contains(&j) { bd[j as usize].0 } else { 0 };
    let mut profile = HomologyProfile::new(coeff);
    for i in -1..=d {
        let c = k.faces_of_dim(i).len();
        let rank = c - rank_of(i) - rank_of(i + 1);
        let torsion = if i < d {
            bd[(i + 1) as usize].1.clone()
        } else {
            Vec::new()
        };
        profile.set(i, Group { rank, torsion });
    }
    profile
}

/// `H̃^*(K; R)`, computed from the transposed boundary matrices.
pub fn cohomology(k: &SimplicialComplex, coeff: Coefficients) -> HomologyProfile {
    let d = k.dim();
    // co[j] = rank and torsion of δ^j = ∂_{j+1}^T : C^j → C^{j+1}, j = -1..d-1
    let co: Vec<(usize, Vec<u64>)> = (-1..d)
        .map(|j| rank_and_torsion(&boundary_matrix(k, j + 1).transpose(), coeff))
        .collect();
    let delta = |j: i32| {
        if (-1..d).contains(&j) {
            Some(&co[(j + 1) as usize])
        } else {
            None
        }
    };
    let mut profile = HomologyProfile::new(coeff);
    for i in -1..=d {
        let c = k.faces_of_dim(i).len();
        let rank = c - delta(i).map_or(0, |x| x.0) - delta(i - 1).map_or(0, |x| x.0);
        let torsion = delta(i - 1).map_or_else(Vec::new, |x| x.1.clone());
        profile.set(i, Group { rank, torsion });
    }
    profile
}

/// `H̃_*(|S|)` for an upward-closed face set, via its order complex.
pub fn open_set_homology(s: &FaceSet<'_>, coeff: Coefficients) -> Result<HomologyProfile> {
    Ok(homology(&order_complex(s)?.complex, coeff))
}

/// Cohomology counterpart of [`open_set_homology`].
pub fn open_set_cohomology(s: &FaceSet<'_>, coeff: Coefficients) -> Result<HomologyProfile> {
    Ok(cohomology(&order_complex(s)?.complex, coeff))
}

/// `H̃_*(|X|)` of a face poset, through its barycentric subdivision.
pub fn poset_homology(x: &FacePoset, coeff: Coefficients) -> HomologyProfile {
    open_set_homology(&FaceSet::all_nonempty(x), coeff).expect("upward closed")
}
