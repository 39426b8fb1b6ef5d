//! JSON formats for algebras, representations and two-term complexes.
//!
//! * algebra: `{"vertices":[1,2],"arrows":[{"id":"a","src":1,"tgt":2}],"relations":[]}`,
//!   each relation a list of `{"path":"a.c","coef":"1"}` terms;
//! * representation: `{"dim":[1,1],"matrices":{"a":[["1"]],"b":[["0"]]}}`, the
//!   matrix of `a: s -> t` having `dim[s]` rows and `dim[t]` columns;
//! * complex: `{"neg":[..],"zero":[..],"d":[[[{"path":"a","coef":"1"}], ..], ..]}`,
//!   summands ordered by vertex, entry `(r, c)` a combination of paths from the
//!   vertex of row `r` to the vertex of column `c`.
//!
//! Scalars are written as `"p/q"` strings; integers and strings are accepted on input.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{build_algebra, Algebra, PathAlgebra, Quiver, Relation, Representation};
use crate::complexes::{PMat, TwoTermComplex};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, Field};
use crate::linalg::Matrix;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub src: Value,
    pub tgt: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub path: String,
    pub coef: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub vertices: Vec<Value>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dim: Vec<usize>,
    #[serde(default)]
    pub matrices: BTreeMap<String, Vec<Vec<Value>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub neg: Vec<usize>,
    pub zero: Vec<usize>,
    pub d: Vec<Vec<Vec<TermJson>>>,
}

fn label(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse(format!("bad vertex label {other}"))),
    }
}

/// A scalar given as a string (`"p/q"`, decimal) or a JSON integer.
pub fn parse_scalar(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(crate::field::rat(n.as_i64().unwrap_or_default())),
        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
    }
}

fn scalar_value<F: Field>(f: &F, x: &F::Elem) -> Value {
    Value::String(format_rational(&f.to_rational(x)))
}

fn vertex_value(label: &str) -> Value {
    match label.parse::<i64>() {
        Ok(n) => Value::from(n),
        Err(_) => Value::String(label.to_string()),
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<PathAlgebra> {
    let vertices: Vec<String> = j.vertices.iter().map(label).collect::<Result<_>>()?;
    let arrows: Vec<(String, String, String)> = j
        .arrows
        .iter()
        .map(|a| Ok((a.id.clone(), label(&a.src)?, label(&a.tgt)?)))
        .collect::<Result<_>>()?;
    let quiver = Quiver::new(&vertices, &arrows)?;
    let mut relations: Vec<Relation> = Vec::new();
    for rel in &j.relations {
        let mut r = Vec::new();
        for t in rel {
            r.push((parse_scalar(&t.coef)?, quiver.parse_path(&t.path)?));
        }
        relations.push(r);
    }
    build_algebra(quiver, relations)
}

pub fn algebra_to_json(a: &PathAlgebra) -> AlgebraJson {
    let q = a.quiver();
    AlgebraJson {
        vertices: q.vertices().iter().map(|v| vertex_value(v)).collect(),
        arrows: q
            .arrows()
            .iter()
            .map(|ar| ArrowJson {
                id: ar.id.clone(),
                src: vertex_value(q.vertex_label(ar.src)),
                tgt: vertex_value(q.vertex_label(ar.tgt)),
            })
            .collect(),
        relations: a
            .relations()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(c, p)| TermJson {
                        path: q.path_name(p),
                        coef: Value::String(format_rational(c)),
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn parse_algebra(text: &str) -> Result<PathAlgebra> {
    algebra_from_json(&serde_json::from_str(text)?)
}

pub fn representation_from_json<F: Field>(alg: &Algebra<F>, j: &RepresentationJson) -> Result<Representation<F>> {
    let f = alg.field();
    let q = alg.quiver();
    if j.dim.len() != alg.rank() {
        return Err(Error::Invalid(format!("dimension vector has length {}, expected {}", j.dim.len(), alg.rank())));
    }
    for key in j.matrices.keys() {
        if q.arrow_index(key).is_none() {
            return Err(Error::Invalid(format!("unknown arrow `{key}`")));
        }
    }
    let mut mats = Vec::new();
    for ar in q.arrows() {
        let (r, c) = (j.dim[ar.src], j.dim[ar.tgt]);
        let m = match j.matrices.get(&ar.id) {
            None => Matrix::from_fn(r, c, |_, _| f.zero()),
            Some(rows) => {
                let shape_ok = (rows.len() == r && rows.iter().all(|row| row.len() == c)) || (r * c == 0 && rows.iter().all(|row| row.is_empty()));
                if !shape_ok {
                    return Err(Error::Invalid(format!("matrix of `{}` must be {r}x{c}", ar.id)));
                }
                let mut data = Vec::with_capacity(r * c);
                for row in rows {
                    for x in row {
                        data.push(f.from_rational(&parse_scalar(x)?)?);
                    }
                }
                Matrix::from_rows(r, c, data)
            }
        };
        mats.push(m);
    }
    Representation::new(alg, j.dim.clone(), mats)
}

pub fn representation_to_json<F: Field>(m: &Representation<F>) -> RepresentationJson {
    let f = m.field();
    let q = m.algebra().quiver();
    let matrices = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, ar)| {
            let mat = m.matrix(i);
            let rows = (0..mat.rows())
                .map(|r| (0..mat.cols()).map(|c| scalar_value(f, mat.get(r, c))).collect())
                .collect();
            (ar.id.clone(), rows)
        })
        .collect();
    RepresentationJson {
        dim: m.dims().clone(),
        matrices,
    }
}

pub fn parse_representation<F: Field>(alg: &Algebra<F>, text: &str) -> Result<Representation<F>> {
    representation_from_json(alg, &serde_json::from_str(text)?)
}

fn expand(m: &[usize]) -> Vec<usize> {
    m.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat(v).take(k)).collect()
}

pub fn complex_from_json<F: Field>(alg: &Algebra<F>, j: &ComplexJson) -> Result<TwoTermComplex<F>> {
    let f = alg.field();
    let l = alg.rank();
    if j.neg.len() != l || j.zero.len() != l {
        return Err(Error::Invalid(format!("multiplicity vectors must have length {l}")));
    }
    let rows = expand(&j.neg);
    let cols = expand(&j.zero);
    let shape_ok = j.d.len() == rows.len() && j.d.iter().all(|r| r.len() == cols.len());
    // an empty degree may omit the rows of the differential entirely
    if !shape_ok && !(j.d.iter().all(|r| r.is_empty()) && (rows.is_empty() || cols.is_empty())) {
        return Err(Error::Invalid(format!("differential must be {}x{}", rows.len(), cols.len())));
    }
    let mut d = PMat::zero(alg, rows.clone(), cols.clone());
    for (r, row) in j.d.iter().enumerate() {
        for (c, terms) in row.iter().enumerate() {
            let (u, w) = (rows[r], cols[c]);
            let mut entry = vec![f.zero(); alg.dim(u, w)];
            for t in terms {
                let p = alg.quiver().parse_path(&t.path)?;
                if p.src != u || p.tgt != w {
                    return Err(Error::Invalid(format!("path `{}` does not run from vertex {} to vertex {}", t.path, u + 1, w + 1)));
                }
                let coef = f.from_rational(&parse_scalar(&t.coef)?)?;
                for (k, x) in alg.reduce_path(&p) {
                    entry[*k] = f.add(&entry[*k], &f.mul(&coef, x));
                }
            }
            d.set_entry(r, c, entry);
        }
    }
    Ok(TwoTermComplex::new(alg, d))
}

pub fn complex_to_json<F: Field>(x: &TwoTermComplex<F>) -> ComplexJson {
    let x = x.sorted();
    let alg = x.algebra();
    let f = alg.field();
    let q = alg.quiver();
    let d = x.diff();
    let rows = (0..d.nrows())
        .map(|r| {
            (0..d.ncols())
                .map(|c| {
                    let basis = alg.basis(d.rows()[r], d.cols()[c]);
                    d.entry(r, c)
                        .iter()
                        .zip(basis)
                        .filter(|(e, _)| !f.is_zero(e))
                        .map(|(e, p)| TermJson {
                            path: q.path_name(p),
                            coef: scalar_value(f, e),
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    ComplexJson {
        neg: x.neg_multiplicities(),
        zero: x.zero_multiplicities(),
        d: rows,
    }
}

pub fn parse_complex<F: Field>(alg: &Algebra<F>, text: &str) -> Result<TwoTermComplex<F>> {
    complex_from_json(alg, &serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    const KRONECKER: &str = r#"{"vertices":[1,2],"arrows":[{"id":"a","src":1,"tgt":2},{"id":"b","src":1,"tgt":2}],"relations":[]}"#;

    #[test]
    fn algebra_round_trip() {
        let a = parse_algebra(KRONECKER).unwrap();
        assert_eq!(a, PathAlgebra::kronecker());
        let back = serde_json::to_string(&algebra_to_json(&a)).unwrap();
        assert_eq!(back, KRONECKER);
    }

    #[test]
    fn representation_and_complex_round_trip() {
        let alg = PathAlgebra::kronecker().over(Rationals).unwrap();
        let m = parse_representation(&alg, r#"{"dim":[1,1],"matrices":{"a":[["1"]],"b":[["1/2"]]}}"#).unwrap();
        let j = representation_to_json(&m);
        assert_eq!(j.matrices["b"][0][0], Value::String("1/2".into()));
        assert_eq!(representation_from_json(&alg, &j).unwrap(), m);

        let x = parse_complex(&alg, r#"{"neg":[1,0],"zero":[0,2],"d":[[[{"path":"a","coef":"1"}],[{"path":"b","coef":1}]]]}"#).unwrap();
        assert_eq!(x.g_vector(), vec![-1, 2]);
        assert_eq!(complex_from_json(&alg, &complex_to_json(&x)).unwrap(), x);
        assert!(parse_complex(&alg, r#"{"neg":[0,1],"zero":[1,0],"d":[[[{"path":"a","coef":"1"}]]]}"#).is_err());
    }
}
