//! JSON encodings for fields, algebras, subspaces, groups and polynomials.
//!
//! Rationals are strings `"num/den"`, residues are integers, fields are
//! `{"type":"Q"}` or `{"type":"GF","p":3}`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groups::GroupTable;
use crate::poly::Polynomial;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldJson {
    Q,
    GF { p: u64 },
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson::Q,
            FieldSpec::PrimeField(p) => FieldJson::GF { p },
        }
    }
}

impl TryFrom<FieldJson> for FieldSpec {
    type Error = Error;
    fn try_from(f: FieldJson) -> Result<Self> {
        match f {
            FieldJson::Q => Ok(FieldSpec::Rationals),
            FieldJson::GF { p } => FieldSpec::prime(p),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<Vec<Value>>,
    #[serde(default)]
    pub basis_names: Vec<String>,
    pub table: Vec<Vec<Vec<Value>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub basis: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
    #[serde(default)]
    pub names: Vec<String>,
}

pub fn field_to_json(f: FieldSpec) -> Value {
    serde_json::to_value(FieldJson::from(f)).expect("serializable")
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Residue { value, .. } => json!(value),
        Scalar::Rational(_) => json!(s.to_fraction_string()),
    }
}

pub fn scalar_from_json(field: FieldSpec, v: &Value) -> Result<Scalar> {
    let bad = || Error::Parse(format!("invalid scalar {v} for field {field}"));
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(bad)?;
            Ok(field.from_i64(i))
        }
        Value::String(text) => {
            let text = text.trim();
            let (num, den) = text.split_once('/').unwrap_or((text, "1"));
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            field.rational(num, den).map_err(|_| bad())
        }
        _ => Err(bad()),
    }
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn element_to_json(x: &Element) -> Value {
    vector_to_json(x.coords())
}

fn vector_from_json(field: FieldSpec, len: usize, v: &[Value]) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(Error::Parse(format!(
            "expected a vector of length {len}, found {}",
            v.len()
        )));
    }
    v.iter().map(|x| scalar_from_json(field, x)).collect()
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let doc = AlgebraJson {
        field: a.field().into(),
        dim: a.dim(),
        one: a.one().ok().map(|u| u.coords().iter().map(scalar_to_json).collect()),
        basis_names: a.basis_names().to_vec(),
        table: a
            .table_nested()
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(scalar_to_json).collect()).collect())
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

/// Parses and validates an algebra document.
pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let doc: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    algebra_from_doc(doc)
}

pub fn algebra_from_doc(doc: AlgebraJson) -> Result<Algebra> {
    let field = FieldSpec::try_from(doc.field)?;
    let n = doc.dim;
    if doc.table.len() != n || doc.table.iter().any(|row| row.len() != n) {
        return Err(Error::Parse(format!("table must be {n}×{n}×{n}")));
    }
    let mut table = Vec::with_capacity(n * n * n);
    for row in &doc.table {
        for v in row {
            table.extend(vector_from_json(field, n, v)?);
        }
    }
    let one = doc
        .one
        .map(|u| vector_from_json(field, n, &u).map(Element::new))
        .transpose()?;
    Algebra::new(field, n, table, one, doc.basis_names)
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    let basis: Vec<Value> = s.basis().iter().map(element_to_json).collect();
    json!({ "basis": basis })
}

pub fn subspace_from_json(field: FieldSpec, ambient_dim: usize, text: &str) -> Result<Subspace> {
    let doc: SubspaceJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let rows = doc
        .basis
        .iter()
        .map(|r| vector_from_json(field, ambient_dim, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::from_rows(field, ambient_dim, rows))
}

pub fn group_to_json(g: &GroupTable) -> Value {
    serde_json::to_value(GroupJson {
        order: g.order(),
        mul: g.rows(),
        identity: g.identity(),
        names: g.names().to_vec(),
    })
    .expect("serializable")
}

pub fn group_from_json(text: &str) -> Result<GroupTable> {
    let doc: GroupJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.mul.len() != doc.order {
        return Err(Error::InvalidGroupTable(format!(
            "order {} but {} table rows",
            doc.order,
            doc.mul.len()
        )));
    }
    GroupTable::new(doc.mul, doc.identity, doc.names)
}

pub fn polynomial_to_json(f: &Polynomial) -> Value {
    vector_to_json(f.coeffs())
}
