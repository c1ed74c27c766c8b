//! JSON complex files.
//!
//! ```json
//! {"kind": "simplicial", "facets": [["1", "2", "4"], ["2", "5"]]}
//! {"kind": "poset", "faces": [{"id": 0, "dim": -1}, {"id": 1, "dim": 0, "label": "a"}], "covers": [[0, 1]]}
//! {"kind": "cubical", "ambient": 2, "cubes": [[[0, 1], [0, 0]]]}
//! {"kind": "cubical", "ambient": 3, "chi": ["**0", "1*1"]}
//! ```
//!
//! Simplicial labels may be strings or integers. Cubes are closed under
//! faces on load, and every file is validated.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize};

use crate::complex::{parse_chi, Complex, Cube, CubicalComplex, FacePoset, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ComplexFile {
    Simplicial {
        #[serde(deserialize_with = "label_lists")]
        facets: Vec<Vec<String>>,
    },
    Poset {
        faces: Vec<PosetFace>,
        covers: Vec<(usize, usize)>,
    },
    Cubical {
        ambient: usize,
        #[serde(default = "unit", skip_serializing_if = "is_unit")]
        span: i64,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        cubes: Vec<Cube>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        chi: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFace {
    pub id: usize,
    pub dim: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

fn unit() -> i64 {
    1
}

fn is_unit(s: &i64) -> bool {
    *s == 1
}

fn label_lists<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<String>>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Label {
        S(String),
        I(i64),
    }
    let raw: Vec<Vec<Label>> = Vec::deserialize(d)?;
    Ok(raw
        .into_iter()
        .map(|f| {
            f.into_iter()
                .map(|l| match l {
                    Label::S(s) => s,
                    Label::I(i) => i.to_string(),
                })
                .collect()
        })
        .collect())
}

impl ComplexFile {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex files serialize")
    }

    /// Builds and validates the complex.
    pub fn into_complex(self) -> Result<Complex> {
        let complex: Complex = match self {
            ComplexFile::Simplicial { facets } => SimplicialComplex::from_labelled(&facets)?.into(),
            ComplexFile::Poset { faces, covers } => {
                let index: BTreeMap<usize, usize> =
                    faces.iter().enumerate().map(|(i, f)| (f.id, i)).collect();
                if index.len() != faces.len() {
                    return Err(Error::Malformed("duplicate face id".into()));
                }
                let lookup = |id: usize| index.get(&id).copied().ok_or(Error::UnknownFace(id));
                let covers = covers
                    .iter()
                    .map(|&(lo, hi)| Ok((lookup(lo)?, lookup(hi)?)))
                    .collect::<Result<Vec<_>>>()?;
                let dims = faces.iter().map(|f| f.dim).collect();
                let labels = faces
                    .iter()
                    .map(|f| f.label.clone().unwrap_or_else(|| f.id.to_string()))
                    .collect();
                FacePoset::from_parts(dims, labels, &covers)?.0.into()
            }
            ComplexFile::Cubical {
                ambient,
                span,
                cubes,
                chi,
            } => {
                let mut all = cubes;
                for s in &chi {
                    all.push(parse_chi(ambient, s)?);
                }
                if span < 1 {
                    return Err(Error::Malformed(format!("span {span} must be positive")));
                }
                CubicalComplex::with_span(ambient, span, all)?.into()
            }
        };
        complex.validate().into_result()?;
        Ok(complex)
    }

    /// Facets for simplicial and cubical complexes, the full Hasse diagram
    /// for posets.
    pub fn from_complex(c: &Complex) -> Self {
        match c {
            Complex::Simplicial(s) => ComplexFile::Simplicial {
                facets: s
                    .facets()
                    .iter()
                    .map(|f| f.iter().map(|&v| s.label(v).to_string()).collect())
                    .collect(),
            },
            Complex::Poset(p) => ComplexFile::Poset {
                faces: p
                    .faces()
                    .map(|f| PosetFace {
                        id: f.0,
                        dim: p.dim_of(f),
                        label: Some(p.label(f).to_string()),
                    })
                    .collect(),
                covers: p
                    .faces()
                    .flat_map(|f| p.up(f).iter().map(move |g| (f.0, g.0)))
                    .collect(),
            },
            Complex::Cubical(q) => ComplexFile::Cubical {
                ambient: q.ambient(),
                span: q.span(),
                cubes: q.facets(),
                chi: Vec::new(),
            },
        }
    }
}

pub fn read_complex(json: &str) -> Result<Complex> {
    ComplexFile::from_json(json)?.into_complex()
}

pub fn write_complex(c: &Complex) -> String {
    ComplexFile::from_complex(c).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplicial_with_integer_labels() {
        let c = read_complex(r#"{"kind":"simplicial","facets":[[1,2,3],[3,"4"]]}"#).unwrap();
        assert_eq!(c.f_vector(), vec![4, 4, 1]);
        let again = read_complex(&write_complex(&c)).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn poset_round_trip_and_validation() {
        let sq = Complex::Cubical(CubicalComplex::from_chi(2, &["**"]).unwrap());
        let p = Complex::Poset(sq.face_poset());
        assert_eq!(read_complex(&write_complex(&p)).unwrap(), p);
        // a square poset missing one cover
        let bad = r#"{"kind":"poset","faces":[{"id":0,"dim":-1},{"id":1,"dim":0},{"id":2,"dim":0},{"id":3,"dim":1}],"covers":[[0,1],[0,2],[1,3]]}"#;
        assert!(matches!(read_complex(bad), Err(Error::Invalid(_))));
    }

    #[test]
    fn cubical_forms() {
        let a = read_complex(r#"{"kind":"cubical","ambient":2,"chi":["*0","1*"]}"#).unwrap();
        let b =
            read_complex(r#"{"kind":"cubical","ambient":2,"cubes":[[[0,1],[0,0]],[[1,1],[0,1]]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(read_complex(&write_complex(&a)).unwrap(), a);
        assert!(read_complex(r#"{"kind":"cubical","ambient":2,"chi":["*"]}"#).is_err());
        assert!(read_complex(r#"{"kind":"torus"}"#).is_err());
    }
}
