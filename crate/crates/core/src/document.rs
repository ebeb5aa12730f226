//! JSON documents for every structure in the crate.
//!
//! Output is canonical: keys sorted, no whitespace, scalars as reduced
//! `"p/q"` strings (integers without a denominator), structure constants
//! listed sparsely and sorted by `(i, j, k)`. On input, constants may also be
//! given as a dense `n×n×n` array and matrices as nested rows. Floats are
//! rejected everywhere.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, StructureTensor};
use crate::operators::{OOperator, OperatorDomain, OperatorKind, RotaBaxterOperator};
use crate::report::{ValidationReport, Violation};
use crate::structures::{Algebra, Bimodule, BimoduleAlgebra, DendriformDi, DendriformTri};

pub const SCHEMA_VERSION: &str = "1";

/// Decorative names. Semantics never depend on them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    pub name: Option<String>,
    pub basis: Option<Vec<String>>,
    pub typo_corrected: bool,
}

impl Labels {
    pub fn named(name: impl Into<String>) -> Self {
        Labels {
            name: Some(name.into()),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Algebra(Algebra),
    Bimodule(Bimodule),
    BimoduleAlgebra(BimoduleAlgebra),
    Operator(OOperator),
    RotaBaxter(RotaBaxterOperator),
    DendriformDi(DendriformDi),
    DendriformTri(DendriformTri),
    Matrix(Matrix),
    Report(ValidationReport),
    ResultSet(ResultSet),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Algebra(_) => "algebra",
            Payload::Bimodule(_) => "bimodule",
            Payload::BimoduleAlgebra(_) => "bimodule_algebra",
            Payload::Operator(_) => "operator",
            Payload::RotaBaxter(_) => "rota_baxter",
            Payload::DendriformDi(_) => "dendriform_di",
            Payload::DendriformTri(_) => "dendriform_tri",
            Payload::Matrix(_) => "matrix",
            Payload::Report(_) => "report",
            Payload::ResultSet(_) => "result_set",
        }
    }
}

/// A labelled payload; the items of a result set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub labels: Labels,
    pub payload: Payload,
}

impl Entry {
    pub fn new(payload: Payload) -> Self {
        Entry {
            labels: Labels::default(),
            payload,
        }
    }

    pub fn named(name: impl Into<String>, payload: Payload) -> Self {
        Entry {
            labels: Labels::named(name),
            payload,
        }
    }
}

/// Output of a bulk command: named groups of entries plus counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResultSet {
    pub what: String,
    pub note: Option<String>,
    pub counts: BTreeMap<String, u64>,
    pub groups: BTreeMap<String, Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub schema_version: String,
    pub field: FieldSpec,
    pub labels: Labels,
    pub payload: Payload,
}

impl Document {
    pub fn new(field: FieldSpec, payload: Payload) -> Self {
        Document {
            schema_version: SCHEMA_VERSION.to_string(),
            field,
            labels: Labels::default(),
            payload,
        }
    }

    pub fn with_labels(mut self, labels: Labels) -> Self {
        self.labels = labels;
        self
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Document> {
        parse_document(&std::fs::read(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, emit_document(self))?;
        Ok(())
    }
}

// ---------------------------------------------------------------- parsing

pub fn parse_document(bytes: &[u8]) -> Result<Document> {
    let v: Value = serde_json::from_slice(bytes).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = as_object(&v, "")?;
    let version = str_field(top, "schema_version", "")?;
    if version != SCHEMA_VERSION {
        return Err(Error::schema("schema_version", format!("unsupported version `{version}`")));
    }
    let field = parse_field(get(top, "field", "")?, "field")?;
    let p = Parser { field };
    let entry = p.entry(get(top, "payload", "")?, "payload")?;
    Ok(Document {
        schema_version: version.to_string(),
        field,
        labels: entry.labels,
        payload: entry.payload,
    })
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::schema(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(path, "expected an array"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::schema(join(path, key), "missing"))
}

fn str_field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a str> {
    get(obj, key, path)?
        .as_str()
        .ok_or_else(|| Error::schema(join(path, key), "expected a string"))
}

fn usize_value(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::schema(path, "expected a non-negative integer"))
}

fn usize_field(obj: &Map<String, Value>, key: &str, path: &str) -> Result<usize> {
    usize_value(get(obj, key, path)?, &join(path, key))
}

fn parse_field(v: &Value, path: &str) -> Result<FieldSpec> {
    let obj = as_object(v, path)?;
    match str_field(obj, "kind", path)? {
        "rational" => Ok(FieldSpec::Rational),
        "prime" => {
            let p = get(obj, "p", path)?
                .as_u64()
                .ok_or_else(|| Error::schema(join(path, "p"), "expected an integer"))?;
            FieldSpec::prime(p).map_err(|e| Error::schema(join(path, "p"), e.to_string()))
        }
        other => Err(Error::schema(join(path, "kind"), format!("unknown field kind `{other}`"))),
    }
}

fn dims_to_schema(path: String) -> impl FnOnce(Error) -> Error {
    move |e| match e {
        Error::DimensionMismatch(msg) => Error::schema(path, msg),
        other => other,
    }
}

struct Parser {
    field: FieldSpec,
}

impl Parser {
    fn scalar(&self, v: &Value, path: &str) -> Result<Scalar> {
        match v {
            Value::String(s) => self.field.parse_scalar(s),
            Value::Number(n) if n.is_i64() || n.is_u64() => {
                let num: BigInt = n.to_string().parse().expect("integer literal");
                Ok(self.field.from_ratio(num, BigInt::from(1)).expect("unit denominator"))
            }
            Value::Number(_) => Err(Error::schema(path, "floating-point values are not allowed")),
            _ => Err(Error::schema(path, "expected a rational string")),
        }
    }

    fn scalars(&self, v: &Value, path: &str) -> Result<Vec<Scalar>> {
        as_array(v, path)?
            .iter()
            .enumerate()
            .map(|(i, x)| self.scalar(x, &format!("{path}[{i}]")))
            .collect()
    }

    fn tensor(&self, v: &Value, dim: usize, path: &str) -> Result<StructureTensor> {
        let items = as_array(v, path)?;
        if items.first().is_some_and(Value::is_array) {
            return self.dense_tensor(items, dim, path);
        }
        let mut entries = Vec::with_capacity(items.len());
        for (n, item) in items.iter().enumerate() {
            let ipath = format!("{path}[{n}]");
            let obj = as_object(item, &ipath)?;
            let idx = |key: &str| -> Result<usize> {
                let i = usize_field(obj, key, &ipath)?;
                if i >= dim {
                    return Err(Error::schema(join(&ipath, key), format!("index {i} out of range for dimension {dim}")));
                }
                Ok(i)
            };
            let (i, j, k) = (idx("i")?, idx("j")?, idx("k")?);
            let c = self.scalar(get(obj, "c", &ipath)?, &join(&ipath, "c"))?;
            entries.push((i, j, k, c));
        }
        StructureTensor::from_sparse(self.field, dim, entries).map_err(dims_to_schema(path.to_string()))
    }

    fn dense_tensor(&self, items: &[Value], dim: usize, path: &str) -> Result<StructureTensor> {
        let bad = || Error::schema(path, format!("dense constants must be {dim}x{dim}x{dim}"));
        if items.len() != dim {
            return Err(bad());
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for (i, plane) in items.iter().enumerate() {
            let rows = as_array(plane, &format!("{path}[{i}]"))?;
            if rows.len() != dim {
                return Err(bad());
            }
            for (j, row) in rows.iter().enumerate() {
                let row = self.scalars(row, &format!("{path}[{i}][{j}]"))?;
                if row.len() != dim {
                    return Err(bad());
                }
                flat.extend(row);
            }
        }
        StructureTensor::from_dense(self.field, dim, flat)
    }

    /// A `rows×cols` matrix given flat row-major or as nested rows.
    fn matrix(&self, v: &Value, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
        let items = as_array(v, path)?;
        let (got_rows, flat) = if items.first().is_some_and(Value::is_array) {
            let mut flat = Vec::new();
            for (r, row) in items.iter().enumerate() {
                let row = self.scalars(row, &format!("{path}[{r}]"))?;
                if row.len() != cols {
                    return Err(Error::schema(path, format!("expected {rows}x{cols}, row {r} has {} entries", row.len())));
                }
                flat.extend(row);
            }
            (items.len(), flat)
        } else {
            let flat = self.scalars(v, path)?;
            (flat.len().checked_div(cols).unwrap_or(rows), flat)
        };
        if got_rows != rows || flat.len() != rows * cols {
            return Err(Error::schema(
                path,
                format!("expected {rows}x{cols} ({} entries), got {} entries", rows * cols, flat.len()),
            ));
        }
        Matrix::from_entries(self.field, rows, cols, flat).map_err(dims_to_schema(path.to_string()))
    }

    fn labels(&self, obj: &Map<String, Value>, path: &str) -> Result<Labels> {
        let name = match obj.get("name") {
            None => None,
            Some(v) => Some(
                v.as_str()
                    .ok_or_else(|| Error::schema(join(path, "name"), "expected a string"))?
                    .to_string(),
            ),
        };
        let basis = match obj.get("basis") {
            None => None,
            Some(v) => {
                let bpath = join(path, "basis");
                let names = as_array(v, &bpath)?
                    .iter()
                    .map(|b| b.as_str().map(str::to_string).ok_or_else(|| Error::schema(bpath.as_str(), "expected strings")))
                    .collect::<Result<Vec<_>>>()?;
                Some(names)
            }
        };
        let typo_corrected = match obj.get("typo_corrected") {
            None => false,
            Some(v) => v
                .as_bool()
                .ok_or_else(|| Error::schema(join(path, "typo_corrected"), "expected a boolean"))?,
        };
        Ok(Labels {
            name,
            basis,
            typo_corrected,
        })
    }

    fn entry(&self, v: &Value, path: &str) -> Result<Entry> {
        let obj = as_object(v, path)?;
        if let Some(f) = obj.get("field") {
            let inner = parse_field(f, &join(path, "field"))?;
            if inner != self.field {
                return Err(Error::FieldMismatch(self.field, inner));
            }
        }
        let labels = self.labels(obj, path)?;
        if let Some(basis) = &labels.basis {
            if let Some(dim) = obj.get("dim").and_then(Value::as_u64) {
                if basis.len() as u64 != dim {
                    return Err(Error::schema(join(path, "basis"), format!("{} names for dimension {dim}", basis.len())));
                }
            }
        }
        let payload = match str_field(obj, "kind", path)? {
            "algebra" => Payload::Algebra(self.algebra(obj, path)?),
            "bimodule" => Payload::Bimodule(self.bimodule(obj, path)?),
            "bimodule_algebra" => Payload::BimoduleAlgebra(self.bimodule_algebra(obj, path)?),
            "operator" => Payload::Operator(self.operator(obj, path)?),
            "rota_baxter" => Payload::RotaBaxter(self.rota_baxter(obj, path)?),
            "dendriform_di" => {
                let dim = usize_field(obj, "dim", path)?;
                Payload::DendriformDi(DendriformDi::new(
                    self.tensor(get(obj, "prec", path)?, dim, &join(path, "prec"))?,
                    self.tensor(get(obj, "succ", path)?, dim, &join(path, "succ"))?,
                )?)
            }
            "dendriform_tri" => {
                let dim = usize_field(obj, "dim", path)?;
                Payload::DendriformTri(DendriformTri::new(
                    self.tensor(get(obj, "prec", path)?, dim, &join(path, "prec"))?,
                    self.tensor(get(obj, "succ", path)?, dim, &join(path, "succ"))?,
                    self.tensor(get(obj, "dot", path)?, dim, &join(path, "dot"))?,
                )?)
            }
            "matrix" => {
                let rows = usize_field(obj, "rows", path)?;
                let cols = usize_field(obj, "cols", path)?;
                Payload::Matrix(self.matrix(get(obj, "entries", path)?, rows, cols, &join(path, "entries"))?)
            }
            "report" => Payload::Report(self.report(obj, path)?),
            "result_set" => Payload::ResultSet(self.result_set(obj, path)?),
            other => return Err(Error::schema(join(path, "kind"), format!("unknown payload kind `{other}`"))),
        };
        Ok(Entry { labels, payload })
    }

    fn algebra(&self, obj: &Map<String, Value>, path: &str) -> Result<Algebra> {
        let dim = usize_field(obj, "dim", path)?;
        Ok(Algebra::new(self.tensor(get(obj, "product", path)?, dim, &join(path, "product"))?))
    }

    fn sub_algebra(&self, obj: &Map<String, Value>, key: &str, path: &str) -> Result<Algebra> {
        let apath = join(path, key);
        let aobj = as_object(get(obj, key, path)?, &apath)?;
        if let Some(kind) = aobj.get("kind").and_then(Value::as_str) {
            if kind != "algebra" {
                return Err(Error::schema(join(&apath, "kind"), "expected an algebra"));
            }
        }
        self.algebra(aobj, &apath)
    }

    fn actions(&self, obj: &Map<String, Value>, key: &str, n: usize, m: usize, path: &str) -> Result<Vec<Matrix>> {
        let apath = join(path, key);
        let mats = as_array(get(obj, key, path)?, &apath)?;
        if mats.len() != n {
            return Err(Error::schema(apath, format!("expected {n} matrices, one per algebra basis element, got {}", mats.len())));
        }
        mats.iter()
            .enumerate()
            .map(|(i, v)| self.matrix(v, m, m, &format!("{apath}[{i}]")))
            .collect()
    }

    fn bimodule(&self, obj: &Map<String, Value>, path: &str) -> Result<Bimodule> {
        let algebra = self.sub_algebra(obj, "algebra", path)?;
        let m = usize_field(obj, "dim", path)?;
        let n = algebra.dim();
        let left = self.actions(obj, "left_action", n, m, path)?;
        let right = self.actions(obj, "right_action", n, m, path)?;
        Bimodule::new(algebra, m, left, right).map_err(dims_to_schema(path.to_string()))
    }

    fn bimodule_algebra(&self, obj: &Map<String, Value>, path: &str) -> Result<BimoduleAlgebra> {
        let bm = self.bimodule(obj, path)?;
        let product = self.tensor(get(obj, "product", path)?, bm.dim(), &join(path, "product"))?;
        BimoduleAlgebra::new(bm, product).map_err(dims_to_schema(path.to_string()))
    }

    fn operator(&self, obj: &Map<String, Value>, path: &str) -> Result<OOperator> {
        let dpath = join(path, "domain");
        let dobj = as_object(get(obj, "domain", path)?, &dpath)?;
        let kind = str_field(obj, "operator_kind", path)?;
        let domain = match (kind, dobj.get("kind").and_then(Value::as_str)) {
            ("module", None | Some("bimodule")) => OperatorDomain::Module(self.bimodule(dobj, &dpath)?),
            ("algebra", None | Some("bimodule_algebra")) => OperatorDomain::Algebra(self.bimodule_algebra(dobj, &dpath)?),
            ("module" | "algebra", Some(other)) => {
                return Err(Error::schema(join(&dpath, "kind"), format!("`{other}` does not fit a {kind}-kind operator")))
            }
            (other, _) => return Err(Error::schema(join(path, "operator_kind"), format!("unknown operator kind `{other}`"))),
        };
        let map = self.matrix(get(obj, "matrix", path)?, domain.algebra().dim(), domain.dim(), &join(path, "matrix"))?;
        let weight = match (domain.kind(), obj.get("weight")) {
            (OperatorKind::Algebra, Some(w)) => Some(self.scalar(w, &join(path, "weight"))?),
            (OperatorKind::Algebra, None) => return Err(Error::schema(join(path, "weight"), "missing for an algebra-kind operator")),
            (OperatorKind::Module, Some(_)) => return Err(Error::schema(join(path, "weight"), "module-kind operators carry no weight")),
            (OperatorKind::Module, None) => None,
        };
        OOperator::new(domain, map, weight).map_err(dims_to_schema(path.to_string()))
    }

    fn rota_baxter(&self, obj: &Map<String, Value>, path: &str) -> Result<RotaBaxterOperator> {
        let algebra = self.sub_algebra(obj, "algebra", path)?;
        let n = algebra.dim();
        let map = self.matrix(get(obj, "matrix", path)?, n, n, &join(path, "matrix"))?;
        let weight = self.scalar(get(obj, "weight", path)?, &join(path, "weight"))?;
        RotaBaxterOperator::new(algebra, map, weight).map_err(dims_to_schema(path.to_string()))
    }

    fn report(&self, obj: &Map<String, Value>, path: &str) -> Result<ValidationReport> {
        let passed = get(obj, "passed", path)?
            .as_bool()
            .ok_or_else(|| Error::schema(join(path, "passed"), "expected a boolean"))?;
        let structure_kind = str_field(obj, "structure_kind", path)?.to_string();
        let violation_count = usize_field(obj, "violation_count", path)?;
        let vpath = join(path, "violations");
        let mut violations = Vec::new();
        for (n, v) in as_array(get(obj, "violations", path)?, &vpath)?.iter().enumerate() {
            let ipath = format!("{vpath}[{n}]");
            let vo = as_object(v, &ipath)?;
            let indices = as_array(get(vo, "indices", &ipath)?, &join(&ipath, "indices"))?
                .iter()
                .map(|i| usize_value(i, &join(&ipath, "indices")))
                .collect::<Result<_>>()?;
            violations.push(Violation {
                axiom: str_field(vo, "axiom", &ipath)?.to_string(),
                indices,
                lhs: self.scalars(get(vo, "lhs", &ipath)?, &join(&ipath, "lhs"))?,
                rhs: self.scalars(get(vo, "rhs", &ipath)?, &join(&ipath, "rhs"))?,
            });
        }
        if passed != (violation_count == 0) || violations.len() > violation_count || (passed && !violations.is_empty()) {
            return Err(Error::schema(path, "inconsistent pass flag and violation count"));
        }
        Ok(ValidationReport {
            passed,
            structure_kind,
            violations,
            violation_count,
        })
    }

    fn result_set(&self, obj: &Map<String, Value>, path: &str) -> Result<ResultSet> {
        let what = str_field(obj, "what", path)?.to_string();
        let note = match obj.get("note") {
            None => None,
            Some(v) => Some(v.as_str().ok_or_else(|| Error::schema(join(path, "note"), "expected a string"))?.to_string()),
        };
        let mut counts = BTreeMap::new();
        if let Some(c) = obj.get("counts") {
            let cpath = join(path, "counts");
            for (k, v) in as_object(c, &cpath)? {
                let n = v.as_u64().ok_or_else(|| Error::schema(join(&cpath, k), "expected an integer"))?;
                counts.insert(k.clone(), n);
            }
        }
        let mut groups = BTreeMap::new();
        if let Some(g) = obj.get("groups") {
            let gpath = join(path, "groups");
            for (k, v) in as_object(g, &gpath)? {
                let kpath = join(&gpath, k);
                let items = as_array(v, &kpath)?
                    .iter()
                    .enumerate()
                    .map(|(i, e)| self.entry(e, &format!("{kpath}[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                groups.insert(k.clone(), items);
            }
        }
        Ok(ResultSet {
            what,
            note,
            counts,
            groups,
        })
    }
}

// ---------------------------------------------------------------- emission

pub fn emit_document(doc: &Document) -> String {
    let mut top = Map::new();
    top.insert("schema_version".into(), Value::String(doc.schema_version.clone()));
    top.insert("field".into(), field_value(doc.field));
    top.insert("payload".into(), entry_value(&doc.labels, &doc.payload));
    serde_json::to_string(&Value::Object(top)).expect("JSON values always serialize")
}

pub fn field_value(field: FieldSpec) -> Value {
    let mut m = Map::new();
    match field {
        FieldSpec::Rational => {
            m.insert("kind".into(), "rational".into());
        }
        FieldSpec::Prime(p) => {
            m.insert("kind".into(), "prime".into());
            m.insert("p".into(), p.into());
        }
    }
    Value::Object(m)
}

fn scalar_value(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn scalars_value(xs: &[Scalar]) -> Value {
    Value::Array(xs.iter().map(scalar_value).collect())
}

fn tensor_value(t: &StructureTensor) -> Value {
    Value::Array(
        t.nonzero()
            .map(|(i, j, k, c)| {
                let mut m = Map::new();
                m.insert("i".into(), i.into());
                m.insert("j".into(), j.into());
                m.insert("k".into(), k.into());
                m.insert("c".into(), scalar_value(c));
                Value::Object(m)
            })
            .collect(),
    )
}

fn matrix_value(m: &Matrix) -> Value {
    scalars_value(m.entries())
}

fn algebra_fields(a: &Algebra, m: &mut Map<String, Value>) {
    m.insert("dim".into(), a.dim().into());
    m.insert("product".into(), tensor_value(a.product()));
}

fn algebra_value(a: &Algebra) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), "algebra".into());
    algebra_fields(a, &mut m);
    Value::Object(m)
}

fn bimodule_fields(b: &Bimodule, m: &mut Map<String, Value>) {
    m.insert("dim".into(), b.dim().into());
    m.insert("algebra".into(), algebra_value(b.algebra()));
    m.insert("left_action".into(), Value::Array(b.left_matrices().iter().map(matrix_value).collect()));
    m.insert("right_action".into(), Value::Array(b.right_matrices().iter().map(matrix_value).collect()));
}

fn domain_value(d: &OperatorDomain) -> Value {
    let mut m = Map::new();
    match d {
        OperatorDomain::Module(b) => {
            m.insert("kind".into(), "bimodule".into());
            bimodule_fields(b, &mut m);
        }
        OperatorDomain::Algebra(r) => {
            m.insert("kind".into(), "bimodule_algebra".into());
            bimodule_fields(r.bimodule(), &mut m);
            m.insert("product".into(), tensor_value(r.product()));
        }
    }
    Value::Object(m)
}

pub fn report_value(r: &ValidationReport) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), "report".into());
    m.insert("passed".into(), r.passed.into());
    m.insert("structure_kind".into(), r.structure_kind.clone().into());
    m.insert("violation_count".into(), r.violation_count.into());
    let vs = r
        .violations
        .iter()
        .map(|v| {
            let mut o = Map::new();
            o.insert("axiom".into(), v.axiom.clone().into());
            o.insert("indices".into(), Value::Array(v.indices.iter().map(|&i| i.into()).collect()));
            o.insert("lhs".into(), scalars_value(&v.lhs));
            o.insert("rhs".into(), scalars_value(&v.rhs));
            Value::Object(o)
        })
        .collect();
    m.insert("violations".into(), Value::Array(vs));
    Value::Object(m)
}

fn payload_value(p: &Payload) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), p.kind().into());
    match p {
        Payload::Algebra(a) => algebra_fields(a, &mut m),
        Payload::Bimodule(b) => bimodule_fields(b, &mut m),
        Payload::BimoduleAlgebra(r) => {
            bimodule_fields(r.bimodule(), &mut m);
            m.insert("product".into(), tensor_value(r.product()));
        }
        Payload::Operator(op) => {
            m.insert("operator_kind".into(), op.kind().as_str().into());
            m.insert("domain".into(), domain_value(op.domain()));
            m.insert("matrix".into(), matrix_value(op.map()));
            if let Some(w) = op.weight() {
                m.insert("weight".into(), scalar_value(w));
            }
        }
        Payload::RotaBaxter(rb) => {
            m.insert("algebra".into(), algebra_value(rb.algebra()));
            m.insert("matrix".into(), matrix_value(rb.map()));
            m.insert("weight".into(), scalar_value(rb.weight()));
        }
        Payload::DendriformDi(d) => {
            m.insert("dim".into(), d.prec().dim().into());
            m.insert("prec".into(), tensor_value(d.prec()));
            m.insert("succ".into(), tensor_value(d.succ()));
        }
        Payload::DendriformTri(t) => {
            m.insert("dim".into(), t.prec().dim().into());
            m.insert("prec".into(), tensor_value(t.prec()));
            m.insert("succ".into(), tensor_value(t.succ()));
            m.insert("dot".into(), tensor_value(t.dot()));
        }
        Payload::Matrix(x) => {
            m.insert("rows".into(), x.rows().into());
            m.insert("cols".into(), x.cols().into());
            m.insert("entries".into(), matrix_value(x));
        }
        Payload::Report(r) => {
            if let Value::Object(o) = report_value(r) {
                m = o;
            }
        }
        Payload::ResultSet(rs) => {
            m.insert("what".into(), rs.what.clone().into());
            if let Some(n) = &rs.note {
                m.insert("note".into(), n.clone().into());
            }
            let counts: Map<String, Value> = rs.counts.iter().map(|(k, v)| (k.clone(), (*v).into())).collect();
            m.insert("counts".into(), Value::Object(counts));
            let groups: Map<String, Value> = rs
                .groups
                .iter()
                .map(|(k, items)| {
                    let vs = items.iter().map(|e| entry_value(&e.labels, &e.payload)).collect();
                    (k.clone(), Value::Array(vs))
                })
                .collect();
            m.insert("groups".into(), Value::Object(groups));
        }
    }
    m
}

fn entry_value(labels: &Labels, payload: &Payload) -> Value {
    let mut m = payload_value(payload);
    if let Some(n) = &labels.name {
        m.insert("name".into(), n.clone().into());
    }
    if let Some(b) = &labels.basis {
        m.insert("basis".into(), Value::Array(b.iter().map(|s| s.clone().into()).collect()));
    }
    if labels.typo_corrected {
        m.insert("typo_corrected".into(), true.into());
    }
    Value::Object(m)
}
