//! The `dendrop` command line.
//!
//! Exit status: 0 when every validation the command ran passed, 1 when one
//! failed, 2 on unreadable input or a usage error. Reports are printed in
//! every case and written with `--report` when requested.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalogue::builtin_catalogue;
use crate::constructions::{
    canonical_operator_from_di, canonical_operator_from_tri, check_splitting, domain_dendriform_di,
    domain_dendriform_tri, kernel_ideal_check, range_dendriform_di, range_dendriform_quotient,
    range_dendriform_tri,
};
use crate::document::{Document, Entry, Labels, Payload, ResultSet};
use crate::enumeration::{Enumeration, PhiImage, DEFAULT_BUDGET};
use crate::equivalence::{verify_dendriform_iso, verify_operator_equiv, IsoSearch};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, PivotRule};
use crate::operators::{validate_o_operator, validate_rota_baxter, OOperator, OperatorKind};
use crate::report::ValidationReport;
use crate::structures::{
    validate_associativity, validate_bimodule, validate_bimodule_algebra, validate_dendriform_di,
    validate_dendriform_tri, Algebra, Dendriform, DendriformDi, DendriformTri,
};

#[derive(Parser, Debug)]
#[command(name = "dendrop", version, about = "Exact checks for O-operators and dendriform structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every identity the document's structure must satisfy.
    Validate {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build the dendriform structure on the domain or on the range of an operator.
    Construct {
        #[arg(value_enum)]
        side: Side,
        operator: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The identity operator on the star algebra that recovers a dendriform structure.
    Canonical {
        dendriform: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check that the dendriform products sum to the algebra product.
    SplitCheck {
        dendriform: PathBuf,
        algebra: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Verify a dendriform isomorphism, or search GL_n(F_p) for one.
    Iso {
        d1: PathBuf,
        d2: PathBuf,
        #[arg(long, conflicts_with = "search_fp", required_unless_present = "search_fp")]
        witness: Option<PathBuf>,
        #[arg(long)]
        search_fp: bool,
        /// Where to write a witness found by the search.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Verify that (f, g) is an equivalence between two operators.
    Equiv {
        op1: PathBuf,
        op2: PathBuf,
        #[arg(long = "f")]
        f: PathBuf,
        #[arg(long = "g")]
        g: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Brute-force enumeration over F_p.
    Enumerate {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        prime: u64,
        /// Largest candidate space to walk.
        #[arg(long, env = "DENDROP_BUDGET")]
        budget: Option<u64>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// The built-in two-dimensional dialgebras, each validated.
    Catalogue {
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Domain,
    Range,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Assoc,
    Rb0,
    DendriformDi,
    PhiImage,
}

/// What a command produced. Text goes to stdout unless the document does.
struct Outcome {
    what: &'static str,
    field: FieldSpec,
    reports: Vec<(String, ValidationReport)>,
    /// Failures that are not identity violations.
    failures: Vec<String>,
    notes: Vec<String>,
    counts: BTreeMap<String, u64>,
    output: Option<Document>,
}

impl Outcome {
    fn new(what: &'static str, field: FieldSpec) -> Self {
        Outcome {
            what,
            field,
            reports: Vec::new(),
            failures: Vec::new(),
            notes: Vec::new(),
            counts: BTreeMap::new(),
            output: None,
        }
    }

    fn push(&mut self, name: impl Into<String>, r: ValidationReport) -> bool {
        let ok = r.passed;
        self.reports.push((name.into(), r));
        ok
    }

    fn passed(&self) -> bool {
        self.failures.is_empty() && self.reports.iter().all(|(_, r)| r.passed)
    }

    fn report_document(&self) -> Document {
        if let ([(name, r)], true, true) = (&self.reports[..], self.failures.is_empty(), self.counts.is_empty()) {
            return Document::new(self.field, Payload::Report(r.clone())).with_labels(Labels::named(name.clone()));
        }
        let mut groups = BTreeMap::new();
        groups.insert(
            "reports".to_string(),
            self.reports
                .iter()
                .map(|(n, r)| Entry::named(n.clone(), Payload::Report(r.clone())))
                .collect(),
        );
        let note = (!self.failures.is_empty()).then(|| self.failures.join("; "));
        Document::new(
            self.field,
            Payload::ResultSet(ResultSet {
                what: self.what.to_string(),
                note,
                counts: self.counts.clone(),
                groups,
            }),
        )
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Runs the command line on explicit arguments, the first being the program name.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let (report_path, output_path) = paths(&cli.command);
    match dispatch(cli.command) {
        Ok(out) => finish(out, report_path, output_path),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn paths(c: &Command) -> (Option<PathBuf>, Option<PathBuf>) {
    match c {
        Command::Validate { report, .. } | Command::SplitCheck { report, .. } | Command::Equiv { report, .. } => {
            (report.clone(), None)
        }
        Command::Construct { report, output, .. }
        | Command::Canonical { report, output, .. }
        | Command::Iso { report, output, .. }
        | Command::Catalogue { report, output } => (report.clone(), output.clone()),
        Command::Enumerate { output, .. } => (None, output.clone()),
    }
}

fn finish(out: Outcome, report_path: Option<PathBuf>, output_path: Option<PathBuf>) -> i32 {
    let doc_to_stdout = out.output.is_some() && output_path.is_none();
    let say = |s: &str| {
        if doc_to_stdout {
            eprint!("{s}")
        } else {
            print!("{s}")
        }
    };
    for (name, r) in &out.reports {
        say(&format!("{name}: {r}"));
    }
    for (k, v) in &out.counts {
        say(&format!("{k}: {v}\n"));
    }
    for n in &out.notes {
        say(&format!("{n}\n"));
    }
    for f in &out.failures {
        say(&format!("FAIL: {f}\n"));
    }
    let mut code = if out.passed() { 0 } else { 1 };
    if let Some(path) = report_path {
        if let Err(e) = out.report_document().write(&path) {
            eprintln!("error: {}: {e}", path.display());
            code = 2;
        }
    }
    if let Some(doc) = &out.output {
        match &output_path {
            Some(path) => {
                if let Err(e) = doc.write(path) {
                    eprintln!("error: {}: {e}", path.display());
                    code = 2;
                }
            }
            None => println!("{}", crate::document::emit_document(doc)),
        }
    }
    code
}

fn load(path: &Path) -> Result<Document> {
    Document::read(path).map_err(|e| match e {
        Error::Io(msg) => Error::Io(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn wrong_kind(doc: &Document, expected: &str) -> Error {
    Error::schema("payload.kind", format!("expected {expected}, got {}", doc.payload.kind()))
}

fn load_operator(path: &Path) -> Result<(FieldSpec, OOperator)> {
    let doc = load(path)?;
    match doc.payload {
        Payload::Operator(op) => Ok((doc.field, op)),
        Payload::RotaBaxter(rb) => {
            // weight 0 reads as a module-kind operator, giving dialgebras
            let op = crate::operators::rb_as_o_operator(&rb)?;
            Ok((doc.field, if rb.weight().is_zero() { op.as_module() } else { op }))
        }
        _ => Err(wrong_kind(&doc, "operator")),
    }
}

fn load_matrix(path: &Path) -> Result<Matrix> {
    let doc = load(path)?;
    match doc.payload {
        Payload::Matrix(m) => Ok(m),
        _ => Err(wrong_kind(&doc, "matrix")),
    }
}

enum Dend {
    Di(DendriformDi),
    Tri(DendriformTri),
}

impl Dend {
    fn as_dyn(&self) -> &dyn Dendriform {
        match self {
            Dend::Di(d) => d,
            Dend::Tri(t) => t,
        }
    }

    fn validate(&self) -> ValidationReport {
        match self {
            Dend::Di(d) => validate_dendriform_di(d),
            Dend::Tri(t) => validate_dendriform_tri(t),
        }
    }

    fn payload(self) -> Payload {
        match self {
            Dend::Di(d) => Payload::DendriformDi(d),
            Dend::Tri(t) => Payload::DendriformTri(t),
        }
    }
}

fn load_dendriform(path: &Path) -> Result<(FieldSpec, Dend)> {
    let doc = load(path)?;
    match doc.payload {
        Payload::DendriformDi(d) => Ok((doc.field, Dend::Di(d))),
        Payload::DendriformTri(t) => Ok((doc.field, Dend::Tri(t))),
        _ => Err(wrong_kind(&doc, "a dendriform dialgebra or trialgebra")),
    }
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Validate { file, .. } => validate(&file),
        Command::Construct { side, operator, .. } => construct(side, &operator),
        Command::Canonical { dendriform, .. } => canonical(&dendriform),
        Command::SplitCheck { dendriform, algebra, .. } => split_check(&dendriform, &algebra),
        Command::Iso { d1, d2, witness, .. } => iso(&d1, &d2, witness.as_deref()),
        Command::Equiv { op1, op2, f, g, .. } => equiv(&op1, &op2, &f, &g),
        Command::Enumerate {
            what, dim, prime, budget, ..
        } => enumerate(what, dim, prime, budget.unwrap_or(DEFAULT_BUDGET)),
        Command::Catalogue { .. } => catalogue(),
    }
}

fn validate_payload(out: &mut Outcome, name: String, payload: &Payload) {
    let report = match payload {
        Payload::Algebra(a) => validate_associativity(a),
        Payload::Bimodule(b) => validate_bimodule(b),
        Payload::BimoduleAlgebra(r) => validate_bimodule_algebra(r),
        Payload::Operator(op) => validate_o_operator(op),
        Payload::RotaBaxter(rb) => validate_rota_baxter(rb),
        Payload::DendriformDi(d) => validate_dendriform_di(d),
        Payload::DendriformTri(t) => validate_dendriform_tri(t),
        Payload::ResultSet(rs) => {
            for (group, items) in &rs.groups {
                for (i, e) in items.iter().enumerate() {
                    let label = e.labels.name.clone().unwrap_or_else(|| format!("{group}[{i}]"));
                    validate_payload(out, label, &e.payload);
                }
            }
            return;
        }
        Payload::Matrix(_) | Payload::Report(_) => {
            out.notes.push(format!("{name}: {} documents carry no identities", payload.kind()));
            return;
        }
    };
    out.push(name, report);
}

fn validate(file: &Path) -> Result<Outcome> {
    let doc = load(file)?;
    let mut out = Outcome::new("validate", doc.field);
    let name = doc.labels.name.clone().unwrap_or_else(|| doc.payload.kind().to_string());
    validate_payload(&mut out, name, &doc.payload);
    Ok(out)
}

fn construct(side: Side, path: &Path) -> Result<Outcome> {
    let (field, op) = load_operator(path)?;
    let mut out = Outcome::new("construct", field);
    if !out.push("operator", validate_o_operator(&op)) {
        return Ok(out);
    }
    let algebra_kind = op.kind() == OperatorKind::Algebra;
    let built = match side {
        Side::Domain => {
            let d = if algebra_kind {
                Dend::Tri(domain_dendriform_tri(&op)?)
            } else {
                Dend::Di(domain_dendriform_di(&op)?)
            };
            out.push("operator homomorphism", crate::constructions::check_operator_homomorphism(&op, d.as_dyn()));
            d
        }
        Side::Range => {
            let (d, algebra) = if op.map().is_invertible() {
                let d = if algebra_kind {
                    Dend::Tri(range_dendriform_tri(&op)?)
                } else {
                    Dend::Di(range_dendriform_di(&op)?)
                };
                (d, op.codomain().clone())
            } else {
                if !kernel_ideal_check(&op) {
                    out.failures.push("operator is not invertible and its kernel is not an ideal".into());
                    return Ok(out);
                }
                let q = range_dendriform_quotient(&op, PivotRule::LowestIndex)?;
                out.notes.push(format!(
                    "operator is not invertible; structure built on its {}-dimensional image",
                    q.tri.dim()
                ));
                let d = match (algebra_kind, q.tri.to_di()) {
                    (false, Some(di)) => Dend::Di(di),
                    _ => Dend::Tri(q.tri),
                };
                (d, q.image_algebra)
            };
            out.push("splitting", check_splitting(d.as_dyn(), &algebra)?);
            d
        }
    };
    out.push("constructed", built.validate());
    out.output = Some(Document::new(field, built.payload()));
    Ok(out)
}

fn canonical(path: &Path) -> Result<Outcome> {
    let (field, d) = load_dendriform(path)?;
    let mut out = Outcome::new("canonical", field);
    if !out.push("input", d.validate()) {
        return Ok(out);
    }
    let op = match &d {
        Dend::Di(di) => canonical_operator_from_di(di)?.1,
        Dend::Tri(t) => canonical_operator_from_tri(t)?.1,
    };
    out.push("canonical operator", validate_o_operator(&op));
    let back = match &d {
        Dend::Di(di) => domain_dendriform_di(&op)? == *di,
        Dend::Tri(t) => domain_dendriform_tri(&op)? == *t,
    };
    if back {
        out.notes.push("round trip: domain structure equals the input".into());
    } else {
        out.failures.push("round trip: domain structure differs from the input".into());
    }
    out.output = Some(Document::new(field, Payload::Operator(op)));
    Ok(out)
}

fn split_check(dpath: &Path, apath: &Path) -> Result<Outcome> {
    let (field, d) = load_dendriform(dpath)?;
    let adoc = load(apath)?;
    let algebra: Algebra = match adoc.payload {
        Payload::Algebra(a) => a,
        _ => return Err(wrong_kind(&adoc, "algebra")),
    };
    if adoc.field != field {
        return Err(Error::FieldMismatch(field, adoc.field));
    }
    let mut out = Outcome::new("split-check", field);
    out.push("splitting", check_splitting(d.as_dyn(), &algebra)?);
    Ok(out)
}

fn same_shape(a: Dend, b: Dend) -> Result<(Dend, Dend)> {
    match (&a, &b) {
        (Dend::Di(_), Dend::Di(_)) | (Dend::Tri(_), Dend::Tri(_)) => Ok((a, b)),
        _ => Err(Error::KindMismatch {
            expected: "two dialgebras or two trialgebras",
        }),
    }
}

fn iso(p1: &Path, p2: &Path, witness: Option<&Path>) -> Result<Outcome> {
    let (field, d1) = load_dendriform(p1)?;
    let (field2, d2) = load_dendriform(p2)?;
    if field != field2 {
        return Err(Error::FieldMismatch(field, field2));
    }
    let (d1, d2) = same_shape(d1, d2)?;
    let mut out = Outcome::new("iso", field);
    match witness {
        Some(w) => {
            let f = load_matrix(w)?;
            out.push("isomorphism", verify_dendriform_iso(d1.as_dyn(), d2.as_dyn(), &f)?);
        }
        None => {
            let found = IsoSearch::default().search(d1.as_dyn(), d2.as_dyn())?;
            out.counts.insert("candidates_examined".into(), found.candidates_examined);
            match found.witness {
                Some(w) => {
                    out.push("isomorphism", verify_dendriform_iso(d1.as_dyn(), d2.as_dyn(), &w.matrix)?);
                    out.output = Some(Document::new(field, Payload::Matrix(w.matrix)));
                }
                None => out.failures.push("no isomorphism exists".into()),
            }
        }
    }
    Ok(out)
}

fn equiv(p1: &Path, p2: &Path, fpath: &Path, gpath: &Path) -> Result<Outcome> {
    let (field, op1) = load_operator(p1)?;
    let (_, op2) = load_operator(p2)?;
    let f = load_matrix(fpath)?;
    let g = load_matrix(gpath)?;
    let mut out = Outcome::new("equiv", field);
    out.push("equivalence", verify_operator_equiv(&op1, &op2, &f, &g)?);
    Ok(out)
}

fn entries<T>(items: impl IntoIterator<Item = T>, wrap: impl Fn(T) -> Payload) -> Vec<Entry> {
    items.into_iter().map(|x| Entry::new(wrap(x))).collect()
}

fn enumerate(what: What, n: usize, p: u64, budget: u64) -> Result<Outcome> {
    let field = FieldSpec::prime(p)?;
    let run = Enumeration {
        budget,
        parallel: true,
    };
    let mut out = Outcome::new("enumerate", field);
    let mut rs = ResultSet::default();
    match what {
        What::Assoc => {
            let algebras = run.associative_products(n, p)?;
            rs.what = "assoc".into();
            rs.counts.insert("algebras".into(), algebras.len() as u64);
            rs.groups.insert("algebras".into(), entries(algebras, Payload::Algebra));
        }
        What::Rb0 => {
            let algebras = run.associative_products(n, p)?;
            let mut ops = Vec::new();
            for a in &algebras {
                ops.extend(run.rb_operators(a, &field.zero())?);
            }
            rs.what = "rb0".into();
            rs.counts.insert("algebras".into(), algebras.len() as u64);
            rs.counts.insert("rb_pairs".into(), ops.len() as u64);
            rs.groups.insert("operators".into(), entries(ops, Payload::RotaBaxter));
        }
        What::DendriformDi => {
            let all = run.dendriform_di(n, p)?;
            rs.what = "dendriform-di".into();
            rs.counts.insert("dialgebras".into(), all.len() as u64);
            rs.groups.insert("dialgebras".into(), entries(all, Payload::DendriformDi));
        }
        What::PhiImage => {
            let phi = run.phi_image(n, p)?;
            rs.what = "phi-image".into();
            rs.note = Some(PhiImage::LABEL.into());
            for (k, v) in [
                ("algebras", phi.associative_algebras),
                ("rb_pairs", phi.rb_pairs),
                ("all", phi.all.len()),
                ("image", phi.image.len()),
                ("missing", phi.missing.len()),
            ] {
                rs.counts.insert(k.into(), v as u64);
            }
            let mut witnesses = Vec::new();
            let mut image = Vec::new();
            for w in phi.image {
                let rb = crate::operators::RotaBaxterOperator::new(w.algebra, w.operator, field.zero())?;
                witnesses.push(Entry::new(Payload::RotaBaxter(rb)));
                image.push(Entry::new(Payload::DendriformDi(w.dendriform)));
            }
            rs.groups.insert("image".into(), image);
            rs.groups.insert("image_witnesses".into(), witnesses);
            rs.groups.insert("missing".into(), entries(phi.missing, Payload::DendriformDi));
            out.notes.push(PhiImage::LABEL.into());
        }
    }
    out.counts = rs.counts.clone();
    out.output = Some(Document::new(field, Payload::ResultSet(rs)));
    Ok(out)
}

fn catalogue() -> Result<Outcome> {
    let q = FieldSpec::Rational;
    let mut out = Outcome::new("catalogue", q);
    let mut items = Vec::new();
    for e in builtin_catalogue() {
        out.push(e.name, validate_dendriform_di(&e.dendriform));
        items.push(Entry {
            labels: Labels {
                name: Some(e.name.to_string()),
                basis: Some(vec!["e1".into(), "e2".into()]),
                typo_corrected: e.typo_corrected,
            },
            payload: Payload::DendriformDi(e.dendriform),
        });
    }
    let mut groups = BTreeMap::new();
    groups.insert("entries".to_string(), items);
    out.output = Some(Document::new(
        q,
        Payload::ResultSet(ResultSet {
            what: "catalogue".into(),
            note: None,
            counts: BTreeMap::new(),
            groups,
        }),
    ));
    Ok(out)
}
