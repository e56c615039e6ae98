//! Diagram files: one JSON object per file, either a class-mode diagram or a
//! matrix-mode set of intersection matrices.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use trisect_core::surface::Diagram;
use trisect_core::{DiagramMatrices, IntMatrix, SurfaceSignature};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// JSON path of the offending field, e.g. `alpha[1][0]`.
    pub field: Option<String>,
    /// Source line for syntax errors.
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            field: Some(field.into()),
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.line, &self.field) {
            (Some(line), _) => write!(f, "line {line}: {}", self.message),
            (None, Some(field)) => write!(f, "field `{field}`: {}", self.message),
            (None, None) => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

type Vectors = Vec<Vec<BigInt>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFile {
    pub sig: SurfaceSignature,
    pub k: Option<[usize; 3]>,
    pub alpha: Vectors,
    pub beta: Vectors,
    pub gamma: Vectors,
    pub arcs: Option<Vectors>,
    pub standard_arcs: Option<Vectors>,
    pub standard_position_assertion: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub sig: SurfaceSignature,
    pub k1: usize,
    pub q_gamma_beta: Vectors,
    pub q_alpha_gamma: Vectors,
    pub q_a_gamma: Vectors,
    pub q_beta_alpha: Option<Vectors>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramFile {
    Class(ClassFile),
    Matrix(MatrixFile),
}

impl DiagramFile {
    pub fn signature(&self) -> &SurfaceSignature {
        match self {
            DiagramFile::Class(c) => &c.sig,
            DiagramFile::Matrix(m) => &m.sig,
        }
    }
}

pub fn parse_path(path: &Path) -> Result<DiagramFile, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError {
        field: None,
        line: None,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<DiagramFile, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError {
        field: None,
        line: Some(e.line()),
        message: e.to_string(),
    })?;
    parse_value(&value)
}

pub fn parse_value(value: &Value) -> Result<DiagramFile, ParseError> {
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError::at("$", "expected a JSON object"))?;
    let mode = obj
        .get("mode")
        .ok_or_else(|| ParseError::at("mode", "missing field"))?
        .as_str()
        .ok_or_else(|| ParseError::at("mode", "expected \"class\" or \"matrix\""))?;
    let sig = signature(obj)?;
    match mode {
        "class" => class_file(obj, sig).map(DiagramFile::Class),
        "matrix" => matrix_file(obj, sig).map(DiagramFile::Matrix),
        other => Err(ParseError::at(
            "mode",
            format!("expected \"class\" or \"matrix\", found {other:?}"),
        )),
    }
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), ParseError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(ParseError::at(k.as_str(), "unknown field")),
        None => Ok(()),
    }
}

fn integer(v: &Value, field: &str) -> Result<BigInt, ParseError> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| ParseError::at(field, format!("expected an integer, found {n}"))),
        other => Err(ParseError::at(
            field,
            format!("expected an integer, found {other}"),
        )),
    }
}

fn count(obj: &Map<String, Value>, field: &str) -> Result<usize, ParseError> {
    let v = obj
        .get(field)
        .ok_or_else(|| ParseError::at(field, "missing field"))?;
    count_value(v, field)
}

fn count_value(v: &Value, field: &str) -> Result<usize, ParseError> {
    let n = integer(v, field)?;
    usize::try_from(n).map_err(|_| ParseError::at(field, "expected a non-negative integer"))
}

fn signature(obj: &Map<String, Value>) -> Result<SurfaceSignature, ParseError> {
    let (g, p, b) = (count(obj, "g")?, count(obj, "p")?, count(obj, "b")?);
    SurfaceSignature::new(g, p, b).map_err(|e| ParseError::at("g/p/b", e.to_string()))
}

/// A list of rows, each of exactly `width` integers.
fn rows(v: &Value, field: &str, width: usize) -> Result<Vectors, ParseError> {
    let list = v
        .as_array()
        .ok_or_else(|| ParseError::at(field, "expected an array of integer arrays"))?;
    list.iter()
        .enumerate()
        .map(|(i, row)| {
            let here = format!("{field}[{i}]");
            let entries = row
                .as_array()
                .ok_or_else(|| ParseError::at(here.as_str(), "expected an array of integers"))?;
            if entries.len() != width {
                return Err(ParseError::at(
                    here.as_str(),
                    format!("expected {width} entries, found {}", entries.len()),
                ));
            }
            entries
                .iter()
                .enumerate()
                .map(|(j, x)| integer(x, &format!("{here}[{j}]")))
                .collect()
        })
        .collect()
}

fn sized_rows(
    obj: &Map<String, Value>,
    field: &str,
    height: usize,
    width: usize,
) -> Result<Option<Vectors>, ParseError> {
    let Some(v) = obj.get(field) else {
        return Ok(None);
    };
    let r = rows(v, field, width)?;
    if r.len() != height {
        return Err(ParseError::at(
            field,
            format!("expected {height} rows, found {}", r.len()),
        ));
    }
    Ok(Some(r))
}

fn required(
    obj: &Map<String, Value>,
    field: &str,
    height: usize,
    width: usize,
) -> Result<Vectors, ParseError> {
    sized_rows(obj, field, height, width)?.ok_or_else(|| ParseError::at(field, "missing field"))
}

const CLASS_KEYS: [&str; 12] = [
    "mode",
    "g",
    "p",
    "b",
    "k",
    "alpha",
    "beta",
    "gamma",
    "arcs",
    "standard_arcs",
    "standard_position_assertion",
    "comment",
];

fn class_file(obj: &Map<String, Value>, sig: SurfaceSignature) -> Result<ClassFile, ParseError> {
    check_keys(obj, &CLASS_KEYS)?;
    let n = sig.n();
    let family = |name: &str| -> Result<Vectors, ParseError> {
        let v = obj
            .get(name)
            .ok_or_else(|| ParseError::at(name, "missing field"))?;
        rows(v, name, n)
    };
    let k = match obj.get("k") {
        None => None,
        Some(v) => {
            let list = v
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| ParseError::at("k", "expected three integers [k1, k2, k3]"))?;
            let mut k = [0; 3];
            for (i, x) in list.iter().enumerate() {
                k[i] = count_value(x, &format!("k[{i}]"))?;
            }
            Some(k)
        }
    };
    let assertion = match obj.get("standard_position_assertion") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => {
            return Err(ParseError::at(
                "standard_position_assertion",
                "expected a boolean",
            ))
        }
    };
    Ok(ClassFile {
        sig,
        k,
        alpha: family("alpha")?,
        beta: family("beta")?,
        gamma: family("gamma")?,
        arcs: sized_rows(obj, "arcs", n, n)?,
        standard_arcs: sized_rows(obj, "standard_arcs", sig.l(), n)?,
        standard_position_assertion: assertion,
    })
}

const MATRIX_KEYS: [&str; 10] = [
    "mode",
    "g",
    "p",
    "b",
    "k1",
    "Q_gamma_beta",
    "Q_alpha_gamma",
    "Q_a_gamma",
    "Q_beta_alpha",
    "comment",
];

fn matrix_file(obj: &Map<String, Value>, sig: SurfaceSignature) -> Result<MatrixFile, ParseError> {
    check_keys(obj, &MATRIX_KEYS)?;
    let (m, l) = (sig.curves(), sig.l());
    Ok(MatrixFile {
        sig,
        k1: count(obj, "k1")?,
        q_gamma_beta: required(obj, "Q_gamma_beta", m, m)?,
        q_alpha_gamma: required(obj, "Q_alpha_gamma", m, m)?,
        q_a_gamma: required(obj, "Q_a_gamma", l, m)?,
        q_beta_alpha: sized_rows(obj, "Q_beta_alpha", m, m)?,
    })
}

pub fn int(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integer"))
}

pub fn rows_json(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(int).collect()))
            .collect(),
    )
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    rows_json(&m.to_rows())
}

fn matrix(rows: &[Vec<BigInt>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(rows, cols)
}

/// Canonical JSON form; parsing it yields the same `DiagramFile`.
pub fn to_json(file: &DiagramFile) -> Value {
    let sig = file.signature();
    let mut obj = Map::new();
    obj.insert("g".into(), sig.g().into());
    obj.insert("p".into(), sig.p().into());
    obj.insert("b".into(), sig.b().into());
    match file {
        DiagramFile::Class(c) => {
            obj.insert("mode".into(), "class".into());
            if let Some(k) = c.k {
                obj.insert("k".into(), k.to_vec().into());
            }
            obj.insert("alpha".into(), rows_json(&c.alpha));
            obj.insert("beta".into(), rows_json(&c.beta));
            obj.insert("gamma".into(), rows_json(&c.gamma));
            if let Some(a) = &c.arcs {
                obj.insert("arcs".into(), rows_json(a));
            }
            if let Some(a) = &c.standard_arcs {
                obj.insert("standard_arcs".into(), rows_json(a));
            }
            obj.insert(
                "standard_position_assertion".into(),
                c.standard_position_assertion.into(),
            );
        }
        DiagramFile::Matrix(m) => {
            obj.insert("mode".into(), "matrix".into());
            obj.insert("k1".into(), m.k1.into());
            obj.insert("Q_gamma_beta".into(), rows_json(&m.q_gamma_beta));
            obj.insert("Q_alpha_gamma".into(), rows_json(&m.q_alpha_gamma));
            obj.insert("Q_a_gamma".into(), rows_json(&m.q_a_gamma));
            if let Some(q) = &m.q_beta_alpha {
                obj.insert("Q_beta_alpha".into(), rows_json(q));
            }
        }
    }
    Value::Object(obj)
}

impl ClassFile {
    /// Builds the core diagram. The standard-position assertion comes from
    /// the file or from `assert_standard`; it only takes effect when the
    /// standard arcs are present.
    pub fn diagram(&self, assert_standard: bool) -> trisect_core::Result<Diagram> {
        let n = self.sig.n();
        let mut d = Diagram::new(
            self.sig,
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
        )?;
        if let Some(k) = self.k {
            d = d.with_k(k);
        }
        if let Some(a) = &self.arcs {
            d = d.with_arcs(matrix(a, n))?;
        }
        if self.standard_position_assertion || assert_standard {
            if let Some(a) = &self.standard_arcs {
                d = d.with_standard_position(matrix(a, n))?;
            }
        }
        Ok(d)
    }
}

impl MatrixFile {
    pub fn matrices(&self) -> trisect_core::Result<DiagramMatrices> {
        let m = self.sig.curves();
        DiagramMatrices::new(
            self.sig,
            self.k1,
            matrix(&self.q_gamma_beta, m),
            matrix(&self.q_alpha_gamma, m),
            matrix(&self.q_a_gamma, m),
            self.q_beta_alpha.as_ref().map(|q| matrix(q, m)),
        )
    }
}
