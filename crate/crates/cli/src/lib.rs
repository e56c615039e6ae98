//! File-based front end for `trisect-core`: parses a diagram file, runs one
//! command and produces a deterministic report plus an exit status.

pub mod input;
pub mod report;

use std::path::Path;

use serde_json::{Map, Value};

use trisect_core::charclass::{linking_matrix_y, spin_y, spin_z, w2_y, w2_z};
use trisect_core::homology::{build_cy, build_cz, h_closed_forms, homology_of, intersection_form};
use trisect_core::surface::validate;
use trisect_core::{Diagram, DiagramMatrices, Error, HomologyResult};

use input::{ClassFile, DiagramFile, MatrixFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Homology,
    Form,
    W2,
    Spin,
    Report,
}

/// Which construction to use: the `Y` or `Z` decomposition, or the closed
/// formulas (homology only).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Complex {
    Y,
    Z,
    Closed,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// `None` means every construction that applies.
    pub complex: Option<Complex>,
    pub format: Format,
    pub assert_standard_position: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Rejected = 1,
    ParseError = 2,
    Precondition = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    status: Status,
    message: String,
}

impl Failure {
    fn precondition(message: impl Into<String>) -> Self {
        Self {
            status: Status::Precondition,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::StandardPositionNotAsserted | Error::Missing(_) => Status::Precondition,
            _ => Status::Rejected,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

/// Accumulates report sections; a failure stops the pipeline but keeps the
/// sections computed so far.
struct Run {
    out: Map<String, Value>,
}

impl Run {
    fn put(&mut self, key: &str, v: Value) {
        self.out.insert(key.into(), v);
    }
}

pub fn run(command: Command, path: &Path, opts: &Options) -> Outcome {
    match input::parse_path(path) {
        Ok(file) => run_file(command, &file, opts),
        Err(e) => parse_failure(e),
    }
}

pub fn run_str(command: Command, text: &str, opts: &Options) -> Outcome {
    match input::parse_str(text) {
        Ok(file) => run_file(command, &file, opts),
        Err(e) => parse_failure(e),
    }
}

fn parse_failure(e: input::ParseError) -> Outcome {
    Outcome {
        status: Status::ParseError,
        stdout: String::new(),
        stderr: format!("parse error: {e}\n"),
    }
}

pub fn run_file(command: Command, file: &DiagramFile, opts: &Options) -> Outcome {
    let mut run = Run { out: Map::new() };
    let sig = *file.signature();
    run.put("command", command_name(command).into());
    run.put("signature", report::signature(&sig));
    if command == Command::Report {
        run.put("conventions", report::conventions(&sig));
    }
    let result = match file {
        DiagramFile::Class(c) => class_mode(&mut run, command, c, opts),
        DiagramFile::Matrix(m) => matrix_mode(&mut run, command, m, opts),
    };
    let (status, stderr) = match result {
        Ok(()) => (Status::Ok, String::new()),
        Err(f) => {
            run.put("error", f.message.clone().into());
            (f.status, format!("error: {}\n", f.message))
        }
    };
    let value = Value::Object(run.out);
    let stdout = match opts.format {
        Format::Json => report::to_json_string(&value),
        Format::Text => report::render_text(&value),
    };
    Outcome {
        status,
        stdout,
        stderr,
    }
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Validate => "validate",
        Command::Homology => "homology",
        Command::Form => "form",
        Command::W2 => "w2",
        Command::Spin => "spin",
        Command::Report => "report",
    }
}

fn class_mode(
    run: &mut Run,
    command: Command,
    c: &ClassFile,
    opts: &Options,
) -> Result<(), Failure> {
    run.put("mode", "class".into());
    let d = c.diagram(opts.assert_standard_position)?;
    let v = validate(&d);
    run.put("validation", report::validation(&v));
    if !v.is_valid() {
        let failed: Vec<String> = v
            .failures()
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect();
        return Err(Failure {
            status: Status::Rejected,
            message: format!("diagram rejected: {}", failed.join("; ")),
        });
    }
    match command {
        Command::Validate => Ok(()),
        Command::Homology => homology(run, &d, opts.complex.unwrap_or(Complex::All)),
        Command::Form => {
            run.put("intersection_form", report::form(&intersection_form(&d)?));
            Ok(())
        }
        Command::W2 | Command::Spin => characteristic(run, command, &d, c, opts),
        Command::Report => {
            homology(run, &d, Complex::All)?;
            run.put("intersection_form", report::form(&intersection_form(&d)?));
            characteristic(run, Command::W2, &d, c, opts)?;
            characteristic(run, Command::Spin, &d, c, opts)
        }
    }
}

fn homology(run: &mut Run, d: &Diagram, complex: Complex) -> Result<(), Failure> {
    let mut results: Vec<HomologyResult> = Vec::new();
    if matches!(complex, Complex::Y | Complex::All) {
        results.push(homology_of(&build_cy(d)?));
    }
    if matches!(complex, Complex::Z | Complex::All) {
        results.push(homology_of(&build_cz(d)?));
    }
    if matches!(complex, Complex::Closed | Complex::All) {
        results.push(h_closed_forms(d)?);
    }
    let mut section = Map::new();
    for r in &results {
        section.insert(r.source.name().into(), report::homology(r));
    }
    let agree = results.windows(2).all(|w| w[0].isomorphic(&w[1]));
    section.insert("agree".into(), agree.into());
    run.put("homology", Value::Object(section));
    if !agree {
        return Err(Failure {
            status: Status::Rejected,
            message: "internal error: homology computations disagree".into(),
        });
    }
    Ok(())
}

/// Matrices for the `Y` formulas of a class-mode diagram, or the reason they
/// are unavailable.
fn standard_matrices(
    d: &Diagram,
    c: &ClassFile,
    opts: &Options,
) -> Result<DiagramMatrices, Failure> {
    if !(c.standard_position_assertion || opts.assert_standard_position) {
        return Err(Error::StandardPositionNotAsserted.into());
    }
    if c.standard_arcs.is_none() {
        return Err(Failure::precondition(
            "the gamma-basis w2 formula needs `standard_arcs` (l arcs completing alpha and beta)",
        ));
    }
    Ok(DiagramMatrices::from_standard_diagram(d)?)
}

fn characteristic(
    run: &mut Run,
    command: Command,
    d: &Diagram,
    c: &ClassFile,
    opts: &Options,
) -> Result<(), Failure> {
    let complex = opts.complex.unwrap_or(Complex::All);
    if complex == Complex::Closed {
        return Err(Failure::precondition(
            "--complex closed applies to homology only",
        ));
    }
    let key = if command == Command::W2 { "w2" } else { "spin" };
    let mut section = Map::new();
    if matches!(complex, Complex::Z | Complex::All) {
        let v = match command {
            Command::W2 => report::w2(&w2_z(d)?),
            _ => report::spin(&spin_z(d)?),
        };
        section.insert("Z".into(), v);
    }
    let y = match complex {
        Complex::Y => Some(standard_matrices(d, c, opts)?),
        // best effort: included only when the preconditions hold
        _ => standard_matrices(d, c, opts).ok(),
    };
    if let Some(m) = y {
        let v = match command {
            Command::W2 => report::w2(&w2_y(&m)),
            _ => report::spin(&spin_y(&m)),
        };
        section.insert("Y".into(), v);
    }
    if let (Some(Value::Object(z)), Some(Value::Object(y))) = (section.get("Z"), section.get("Y")) {
        if command == Command::Spin && z.get("spin") != y.get("spin") {
            run.put(key, Value::Object(section));
            return Err(Failure {
                status: Status::Rejected,
                message: "internal error: spin verdicts disagree".into(),
            });
        }
    }
    run.put(key, Value::Object(section));
    Ok(())
}

fn matrix_mode(
    run: &mut Run,
    command: Command,
    m: &MatrixFile,
    opts: &Options,
) -> Result<(), Failure> {
    run.put("mode", "matrix".into());
    let mats = m.matrices()?;
    run.put(
        "validation",
        serde_json::json!({"valid": true, "k1": mats.k1()}),
    );
    let complex = opts.complex.unwrap_or(Complex::All);
    let needs_y = matches!(command, Command::W2 | Command::Spin | Command::Report);
    if needs_y && !matches!(complex, Complex::Y | Complex::All) {
        return Err(Failure::precondition(
            "matrix-mode input supports only the Y formulas (--complex y)",
        ));
    }
    match command {
        Command::Validate => Ok(()),
        Command::Homology | Command::Form => Err(Failure::precondition(
            "homology and the intersection form need class-mode input",
        )),
        Command::W2 => {
            run.put("w2", section_y(report::w2(&w2_y(&mats))));
            Ok(())
        }
        Command::Spin => {
            run.put("spin", section_y(report::spin(&spin_y(&mats))));
            Ok(())
        }
        Command::Report => {
            run.put(
                "linking",
                section_y(input::matrix_json(&linking_matrix_y(&mats))),
            );
            run.put("w2", section_y(report::w2(&w2_y(&mats))));
            run.put("spin", section_y(report::spin(&spin_y(&mats))));
            Ok(())
        }
    }
}

fn section_y(v: Value) -> Value {
    let mut m = Map::new();
    m.insert("Y".into(), v);
    Value::Object(m)
}
