//! JSON file formats: algebras, linear maps and affine families.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`); integers given as
//! plain JSON numbers are accepted on input. Basis indices are 1-based.
//! Matrices are lists of rows, and column `j` holds the image of `e_j`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{LinearMap, OmegaAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{format_scalar, parse_scalar, Matrix, Scalar, Vector};
use crate::local::{AffineFamily, OpenCondition};

/// A rational as it appears in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub Scalar);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => parse_scalar(&t)
                .map(Rational)
                .map_err(serde::de::Error::custom),
            Raw::Int(v) => Ok(Rational(crate::linalg::int(v))),
        }
    }
}

pub mod scalar {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
        Rational(v.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        Ok(Rational::deserialize(d)?.0)
    }
}

pub mod scalar_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| Rational(x.clone())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vector, D::Error> {
        Ok(Vec::<Rational>::deserialize(d)?.into_iter().map(|r| r.0).collect())
    }
}

pub mod scalar_rows {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vector], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(
            v.iter()
                .map(|row| row.iter().map(|x| Rational(x.clone())).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vector>, D::Error> {
        Ok(Vec::<Vec<Rational>>::deserialize(d)?
            .into_iter()
            .map(|row| row.into_iter().map(|r| r.0).collect())
            .collect())
    }
}

pub mod opt_scalar {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Scalar>, s: S) -> std::result::Result<S::Ok, S::Error> {
        v.as_ref().map(|x| Rational(x.clone())).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Scalar>, D::Error> {
        Ok(Option::<Rational>::deserialize(d)?.map(|r| r.0))
    }
}

pub fn matrix_to_rows(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().cloned().map(Rational).collect())
        .collect()
}

pub fn matrix_from_rows(rows: &[Vec<Rational>]) -> Result<Matrix> {
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(
        cols,
        rows.iter()
            .map(|r| r.iter().map(|x| x.0.clone()).collect())
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaEntry {
    pub i: usize,
    pub j: usize,
    pub value: Rational,
}

/// On-disk algebra description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub omega: Vec<OmegaEntry>,
}

impl AlgebraDocument {
    pub fn from_algebra(a: &OmegaAlgebra) -> Self {
        let n = a.dim();
        let mut brackets = Vec::new();
        let mut omega = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: BTreeMap<usize, Rational> = a
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                    .map(|(k, v)| (k + 1, Rational(v.clone())))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        coeffs,
                    });
                }
                let w = a.omega_entry(i, j);
                if !num_traits::Zero::is_zero(w) {
                    omega.push(OmegaEntry {
                        i: i + 1,
                        j: j + 1,
                        value: Rational(w.clone()),
                    });
                }
            }
        }
        Self {
            name: a.name().to_string(),
            dim: n,
            basis: Some(a.basis_labels().to_vec()),
            brackets,
            omega,
        }
    }

    pub fn to_algebra(&self) -> Result<OmegaAlgebra> {
        let n = self.dim;
        let mut a = OmegaAlgebra::abelian(self.name.clone(), n);
        if let Some(labels) = &self.basis {
            a = a.with_basis_labels(labels.clone())?;
        }
        let check_pair = |what: &str, i: usize, j: usize| -> Result<()> {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Parse(format!(
                    "{what} entry ({i}, {j}) outside 1..={n}"
                )));
            }
            if i >= j {
                return Err(Error::Parse(format!(
                    "{what} entry ({i}, {j}) must have i < j"
                )));
            }
            Ok(())
        };
        let mut seen = std::collections::BTreeSet::new();
        for b in &self.brackets {
            check_pair("bracket", b.i, b.j)?;
            if !seen.insert((b.i, b.j)) {
                return Err(Error::Parse(format!("bracket ({}, {}) listed twice", b.i, b.j)));
            }
            let mut coeffs = vec![<Scalar as num_traits::Zero>::zero(); n];
            for (&k, v) in &b.coeffs {
                if k == 0 || k > n {
                    return Err(Error::Parse(format!(
                        "bracket ({}, {}) has coefficient index {k} outside 1..={n}",
                        b.i, b.j
                    )));
                }
                coeffs[k - 1] = v.0.clone();
            }
            a.set_bracket(b.i - 1, b.j - 1, &coeffs)?;
        }
        let mut seen = std::collections::BTreeSet::new();
        for w in &self.omega {
            check_pair("omega", w.i, w.j)?;
            if !seen.insert((w.i, w.j)) {
                return Err(Error::Parse(format!("omega ({}, {}) listed twice", w.i, w.j)));
            }
            a.set_omega(w.i - 1, w.j - 1, w.value.0.clone())?;
        }
        Ok(a)
    }
}

pub fn algebra_to_json(a: &OmegaAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraDocument::from_algebra(a)).expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<OmegaAlgebra> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    doc.to_algebra()
}

pub fn read_algebra(path: &Path) -> Result<OmegaAlgebra> {
    algebra_from_json(&std::fs::read_to_string(path)?)
}

/// A map file holds a single square matrix, either bare or as `{"matrix": ...}`.
#[derive(Deserialize)]
#[serde(untagged)]
enum MapDocument {
    Bare(Vec<Vec<Rational>>),
    Wrapped { matrix: Vec<Vec<Rational>> },
}

pub fn map_from_json(text: &str) -> Result<LinearMap> {
    let rows = match serde_json::from_str::<MapDocument>(text)? {
        MapDocument::Bare(r) | MapDocument::Wrapped { matrix: r } => r,
    };
    LinearMap::new(matrix_from_rows(&rows)?)
}

pub fn map_to_json(m: &LinearMap) -> String {
    serde_json::to_string(&matrix_to_rows(m.matrix())).expect("serializable")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OpenConditionDocument {
    #[serde(default)]
    pub coeffs: BTreeMap<String, Rational>,
    #[serde(default = "zero_rational")]
    pub constant: Rational,
}

fn zero_rational() -> Rational {
    Rational(<Scalar as num_traits::Zero>::zero())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub base: Vec<Vec<Rational>>,
    #[serde(default)]
    pub directions: Vec<Vec<Vec<Rational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Vec<String>>,
    #[serde(default)]
    pub open_conditions: Vec<OpenConditionDocument>,
}

impl FamilyDocument {
    pub fn to_family(&self) -> Result<AffineFamily> {
        let base = matrix_from_rows(&self.base)?;
        let directions = self
            .directions
            .iter()
            .map(|d| matrix_from_rows(d))
            .collect::<Result<Vec<_>>>()?;
        let names = match &self.parameters {
            Some(p) => p.clone(),
            None => (1..=directions.len()).map(|i| format!("t{i}")).collect(),
        };
        if names.len() != directions.len() {
            return Err(Error::Parse(format!(
                "{} parameter names for {} directions",
                names.len(),
                directions.len()
            )));
        }
        let open = self
            .open_conditions
            .iter()
            .map(|c| {
                let mut coeffs = vec![<Scalar as num_traits::Zero>::zero(); names.len()];
                for (name, v) in &c.coeffs {
                    let idx = names.iter().position(|n| n == name).ok_or_else(|| {
                        Error::Parse(format!("open condition uses unknown parameter {name:?}"))
                    })?;
                    coeffs[idx] = v.0.clone();
                }
                Ok(OpenCondition {
                    coeffs,
                    constant: c.constant.0.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        AffineFamily::new(base, directions, names, open)
    }

    pub fn from_family(f: &AffineFamily) -> Self {
        Self {
            base: matrix_to_rows(f.base()),
            directions: f.directions().iter().map(matrix_to_rows).collect(),
            parameters: Some(f.parameter_names().to_vec()),
            open_conditions: f
                .open_conditions()
                .iter()
                .map(|c| OpenConditionDocument {
                    coeffs: f
                        .parameter_names()
                        .iter()
                        .zip(&c.coeffs)
                        .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                        .map(|(n, v)| (n.clone(), Rational(v.clone())))
                        .collect(),
                    constant: Rational(c.constant.clone()),
                })
                .collect(),
        }
    }
}

pub fn family_from_json(text: &str) -> Result<AffineFamily> {
    serde_json::from_str::<FamilyDocument>(text)?.to_family()
}

pub fn family_to_json(f: &AffineFamily) -> String {
    serde_json::to_string_pretty(&FamilyDocument::from_family(f)).expect("serializable")
}
