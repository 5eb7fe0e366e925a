//! JSON exchange format.
//!
//! Rationals are strings `"p/q"` (a bare integer is accepted on input),
//! Gaussian rationals are `{"re": .., "im": ..}`, matrices are arrays of
//! rows, subspaces are `{"ambient_dim": k, "basis": [rows]}`. A structure is
//! `{"n": n, "repr": "aut", "j": {"j1": .., "j2": .., "j3": .., "j4": ..}}`,
//! `{"n": n, "repr": "E", "E": subspace}` or
//! `{"n": n, "repr": "spinor", "spinor": [{"indices": [..], "coeff": ..}]}`
//! with 1-based indices. Two-forms and bivectors are
//! `{"n": n, "matrix": b}` with `b[i][j]` the value on the `i`-th and `j`-th
//! basis elements.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::gcs::{BiVector, GcAut, IsotropicE, TwoForm};
use crate::linalg::{format_rational, parse_rational, Gq, Matrix, Rational, Subspace};
use crate::relations::LinearRelation;
use crate::spinor::{self, mask_indices, Multivector, SpinorLine};
use crate::{GcError, Result};

fn bad(msg: impl Into<String>) -> GcError {
    GcError::Parse(msg.into())
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GqJson {
    pub re: String,
    pub im: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SubspaceJson<T> {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<T>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BlocksJson {
    pub j1: Vec<Vec<String>>,
    pub j2: Vec<Vec<String>>,
    pub j3: Vec<Vec<String>>,
    pub j4: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermJson {
    pub indices: Vec<usize>,
    pub coeff: GqJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GcsJson {
    pub n: usize,
    pub repr: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<BlocksJson>,
    #[serde(rename = "E", skip_serializing_if = "Option::is_none", default)]
    pub e: Option<SubspaceJson<GqJson>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spinor: Option<Vec<TermJson>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SkewJson {
    pub n: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RelationJson {
    pub source: GcsJson,
    pub target: GcsJson,
    pub graph: SubspaceJson<String>,
}

/// Which form a structure is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Repr {
    Aut,
    E,
    Spinor,
}

impl Repr {
    pub fn parse(s: &str) -> Option<Repr> {
        match s {
            "aut" => Some(Repr::Aut),
            "E" => Some(Repr::E),
            "spinor" => Some(Repr::Spinor),
            _ => None,
        }
    }
}

pub fn rational_json(r: &Rational) -> String {
    format_rational(r)
}

pub fn parse_rational_json(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| bad(format!("not a rational: {s:?}")))
}

pub fn gq_json(z: &Gq) -> GqJson {
    GqJson {
        re: format_rational(&z.re),
        im: format_rational(&z.im),
    }
}

pub fn parse_gq(z: &GqJson) -> Result<Gq> {
    Ok(Gq::new(parse_rational_json(&z.re)?, parse_rational_json(&z.im)?))
}

pub fn matrix_json(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

pub fn parse_matrix(rows: &[Vec<String>], shape: Option<(usize, usize)>) -> Result<Matrix<Rational>> {
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) {
        return Err(bad("matrix rows have different lengths"));
    }
    if let Some((r, c)) = shape {
        if rows.len() != r || cols != c {
            return Err(GcError::DimensionMismatch {
                expected: r,
                found: rows.len(),
            });
        }
    }
    let data = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational_json(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(cols, data))
}

pub fn subspace_json(s: &Subspace<Rational>) -> SubspaceJson<String> {
    SubspaceJson {
        ambient_dim: s.ambient_dim(),
        basis: s
            .basis_vectors()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect(),
    }
}

pub fn parse_subspace(s: &SubspaceJson<String>) -> Result<Subspace<Rational>> {
    let rows = s
        .basis
        .iter()
        .map(|r| {
            if r.len() != s.ambient_dim {
                return Err(GcError::DimensionMismatch {
                    expected: s.ambient_dim,
                    found: r.len(),
                });
            }
            r.iter().map(|x| parse_rational_json(x)).collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::from_rows(s.ambient_dim, rows))
}

pub fn complex_subspace_json(s: &Subspace<Gq>) -> SubspaceJson<GqJson> {
    SubspaceJson {
        ambient_dim: s.ambient_dim(),
        basis: s.basis_vectors().iter().map(|r| r.iter().map(gq_json).collect()).collect(),
    }
}

pub fn parse_complex_subspace(s: &SubspaceJson<GqJson>) -> Result<Subspace<Gq>> {
    let rows = s
        .basis
        .iter()
        .map(|r| {
            if r.len() != s.ambient_dim {
                return Err(GcError::DimensionMismatch {
                    expected: s.ambient_dim,
                    found: r.len(),
                });
            }
            r.iter().map(parse_gq).collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::from_rows(s.ambient_dim, rows))
}

pub fn multivector_json(m: &Multivector) -> Vec<TermJson> {
    m.terms()
        .into_iter()
        .map(|(mask, c)| TermJson {
            indices: mask_indices(mask),
            coeff: gq_json(&c),
        })
        .collect()
}

pub fn parse_multivector(n: usize, terms: &[TermJson]) -> Result<Multivector> {
    let mut m = Multivector::zero(n);
    for t in terms {
        if t.indices.iter().any(|&i| i == 0 || i > n) {
            return Err(bad(format!("form index out of range 1..={n}")));
        }
        let mono = Multivector::monomial(n, &t.indices, parse_gq(&t.coeff)?)?;
        m = m.add(&mono);
    }
    Ok(m)
}

pub fn gcs_json(x: &GcAut, repr: Repr) -> Result<GcsJson> {
    let n = x.n();
    let mut out = GcsJson {
        n,
        repr: String::new(),
        j: None,
        e: None,
        spinor: None,
    };
    match repr {
        Repr::Aut => {
            out.repr = "aut".into();
            out.j = Some(BlocksJson {
                j1: matrix_json(&x.j1()),
                j2: matrix_json(&x.j2()),
                j3: matrix_json(&x.j3()),
                j4: matrix_json(&x.j4()),
            });
        }
        Repr::E => {
            out.repr = "E".into();
            out.e = Some(complex_subspace_json(x.eigenspace().subspace()));
        }
        Repr::Spinor => {
            out.repr = "spinor".into();
            out.spinor = Some(multivector_json(x.spinor()?.rep()));
        }
    }
    Ok(out)
}

pub fn parse_gcs(g: &GcsJson) -> Result<GcAut> {
    let n = g.n;
    match g.repr.as_str() {
        "aut" => {
            let j = g.j.as_ref().ok_or_else(|| bad("repr \"aut\" needs a \"j\" field"))?;
            let b = |rows: &Vec<Vec<String>>| parse_matrix(rows, Some((n, n)));
            GcAut::from_blocks(&b(&j.j1)?, &b(&j.j2)?, &b(&j.j3)?, &b(&j.j4)?)
        }
        "E" => {
            let e = g.e.as_ref().ok_or_else(|| bad("repr \"E\" needs an \"E\" field"))?;
            let e = parse_complex_subspace(e)?;
            if e.ambient_dim() != 2 * n {
                return Err(GcError::DimensionMismatch {
                    expected: 2 * n,
                    found: e.ambient_dim(),
                });
            }
            GcAut::from_eigenspace(&IsotropicE::new(e)?)
        }
        "spinor" => {
            let terms = g.spinor.as_ref().ok_or_else(|| bad("repr \"spinor\" needs a \"spinor\" field"))?;
            let phi = parse_multivector(n, terms)?;
            let ann = spinor::annihilator_subspace(&phi)?;
            if ann.dim() != n {
                return Err(GcError::NotPure);
            }
            let line = SpinorLine::new(phi)?;
            GcAut::from_eigenspace(&IsotropicE::new(line.annihilator())?)
        }
        other => Err(bad(format!("unknown repr {other:?}"))),
    }
}

pub fn two_form_json(b: &TwoForm) -> SkewJson {
    SkewJson {
        n: b.dim(),
        matrix: matrix_json(&b.bilinear()),
    }
}

pub fn parse_two_form(s: &SkewJson) -> Result<TwoForm> {
    TwoForm::from_bilinear(parse_matrix(&s.matrix, Some((s.n, s.n)))?)
}

pub fn bivector_json(b: &BiVector) -> SkewJson {
    SkewJson {
        n: b.dim(),
        matrix: matrix_json(&b.bilinear()),
    }
}

pub fn parse_bivector(s: &SkewJson) -> Result<BiVector> {
    BiVector::from_bilinear(parse_matrix(&s.matrix, Some((s.n, s.n)))?)
}

pub fn relation_json(r: &LinearRelation) -> Result<RelationJson> {
    Ok(RelationJson {
        source: gcs_json(&r.source, Repr::Aut)?,
        target: gcs_json(&r.target, Repr::Aut)?,
        graph: subspace_json(&r.graph),
    })
}

pub fn parse_relation(r: &RelationJson) -> Result<LinearRelation> {
    LinearRelation::new(parse_gcs(&r.source)?, parse_gcs(&r.target)?, parse_subspace(&r.graph)?)
}

/// Deserializes `T` from a JSON value, reporting failures as parse errors.
pub fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| bad(e.to_string()))
}

pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| bad(e.to_string()))
}

/// Real vector written as rational strings.
pub fn vector_json(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn complex_vector_json(v: &[Gq]) -> Vec<GqJson> {
    v.iter().map(gq_json).collect()
}

/// True when every entry is zero.
pub fn is_zero_vector(v: &[Gq]) -> bool {
    v.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcs::{standard_complex, standard_symplectic};
    use crate::linalg::{int, rat};

    #[test]
    fn structure_round_trips_through_every_repr() {
        let x = GcAut::symplectic(&standard_symplectic(1))
            .unwrap()
            .direct_sum(&GcAut::complex(&standard_complex(1)).unwrap());
        for repr in [Repr::Aut, Repr::E, Repr::Spinor] {
            let text = serde_json::to_string(&gcs_json(&x, repr).unwrap()).unwrap();
            let back = parse_gcs(&from_str::<GcsJson>(&text).unwrap()).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn aut_output_is_stable() {
        let x = GcAut::symplectic(&standard_symplectic(1)).unwrap();
        let text = serde_json::to_string(&gcs_json(&x, Repr::Aut).unwrap()).unwrap();
        assert_eq!(
            text,
            r#"{"n":2,"repr":"aut","j":{"j1":[["0/1","0/1"],["0/1","0/1"]],"j2":[["0/1","-1/1"],["1/1","0/1"]],"j3":[["0/1","-1/1"],["1/1","0/1"]],"j4":[["0/1","0/1"],["0/1","0/1"]]}}"#
        );
    }

    #[test]
    fn invalid_blocks_name_the_equation() {
        let g: GcsJson = from_str(
            r#"{"n":1,"repr":"aut","j":{"j1":[["0"]],"j2":[["1"]],"j3":[["-1"]],"j4":[["0"]]}}"#,
        )
        .unwrap();
        let err = parse_gcs(&g).unwrap_err().to_string();
        assert!(err.contains("skewness of J2"), "{err}");
    }

    #[test]
    fn rationals_and_skew_forms() {
        assert_eq!(parse_rational_json("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational_json("1.5").is_err());
        let b = TwoForm::from_terms(3, &[(0, 2, int(5))]);
        assert_eq!(parse_two_form(&two_form_json(&b)).unwrap(), b);
    }
}
