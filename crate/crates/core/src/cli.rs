//! Command dispatch for the `pwb` binary.
//!
//! Exit codes: 0 when every check passes, 1 when an identity fails (or a
//! construction's precondition does not hold), 2 on input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    check_algebra, check_almost_poisson, check_associativity, check_awb, check_comm_assoc,
    AlgebraData, AwbVariant,
};
use crate::bialgebra::{
    build_double, check_coalgebra, check_dbialgebra, check_infinitesimal, dualize_coalgebra,
    encode_as_coalgebra, equivalence_report, BialgebraData,
};
use crate::document::{parse_document_with, to_json, Document};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational};
use crate::fixtures;
use crate::matched_pair::{bowtie, check_matched_pair_ap, check_matched_pair_caa};
use crate::operators::{
    associated_ap, check_nijenhuis_awb, check_relative_averaging_with, check_tridendriform,
    check_weighted_rrb, dendrify, graph_subalgebra_check, induced_awb_with, nijenhuis_from_operator,
    BracketForm, OperatorContext, OperatorData,
};
use crate::report::CheckReport;
use crate::representation::{
    awb_semidirect, check_module_ap, check_module_comm_assoc, check_rep, dual_rep, hemisemi_direct,
    semidirect_ap, semidirect_assoc, Actions, ModuleAlgebraData, RepresentationData,
};

#[derive(Parser, Debug)]
#[command(name = "pwb", version, about = "Exact checks and constructions for algebras with bracket")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Rho,
    Mu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Semidirect,
    Hemisemi,
    Bowtie,
    Double,
    Dendrify,
    Awb,
    DualRep,
    DualCoalgebra,
    Associated,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Parameter value for parametric documents, as `name=p/q`.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Action used on the right of the averaging bracket condition.
    #[arg(long, value_enum, default_value = "rho")]
    bracket_form: FormArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a document against the axioms of its kind.
    Check {
        file: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a new document from existing ones and print it.
    Derive {
        #[arg(value_enum)]
        construction: Construction,
        #[arg(required = true)]
        files: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the D-bialgebra, matched-pair and Manin-triple verdicts.
    Equiv {
        file: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every check that applies to the documents and list all violations.
    Report {
        #[arg(required = true)]
        files: Vec<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                CommandOutcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = CommandOutcome::default();
    match execute(cli.command, &mut out) {
        Ok(code) => out.code = code,
        Err(Error::Precondition { what, report }) => {
            out.stdout.push_str(&format!("precondition failed ({what}): {report}\n"));
            out.code = 1;
        }
        Err(e) => {
            out.stderr.push_str(&format!("error: {e}\n"));
            out.code = 2;
        }
    }
    out
}

fn execute(command: Command, out: &mut CommandOutcome) -> Result<i32> {
    match command {
        Command::Check { file, common, format } => {
            let doc = load(&file, &common)?;
            let section = primary_check(&doc, form(&common))?;
            let passed = section.1.passed();
            emit(out, format, "check", &[(file, vec![section])]);
            Ok(code(passed))
        }
        Command::Report { files, common, format } => {
            let mut all = Vec::new();
            let mut passed = true;
            for file in files {
                let doc = load(&file, &common)?;
                let sections = full_report(&doc, form(&common))?;
                passed &= sections[0].1.passed();
                all.push((file, sections));
            }
            emit(out, format, "report", &all);
            Ok(code(passed))
        }
        Command::Equiv { file, common, format } => {
            let b = match load(&file, &common)? {
                Document::Bialgebra(b) => b,
                other => return Err(wrong_kind("bialgebra", &other)),
            };
            let eq = equivalence_report(&b)?;
            let sections = vec![
                ("d-bialgebra".to_string(), eq.dbialgebra),
                ("matched-pair".to_string(), eq.matched_pair),
                ("manin-triple".to_string(), eq.manin_triple),
            ];
            let passed = sections.iter().all(|s| s.1.passed());
            emit(out, format, "equiv", &[(file, sections)]);
            Ok(code(passed))
        }
        Command::Derive { construction, files, common } => {
            let docs = files
                .iter()
                .map(|f| load(f, &common))
                .collect::<Result<Vec<_>>>()?;
            let doc = derive(construction, docs, form(&common))?;
            out.stdout.push_str(&to_json(&doc));
            Ok(0)
        }
    }
}

fn code(passed: bool) -> i32 {
    if passed {
        0
    } else {
        1
    }
}

fn form(common: &Common) -> BracketForm {
    match common.bracket_form {
        FormArg::Rho => BracketForm::Rho,
        FormArg::Mu => BracketForm::Mu,
    }
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, Rational>> {
    raw.iter()
        .map(|p| {
            let (name, value) = p
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("--param expects NAME=VALUE, found {p:?}")))?;
            Ok((name.trim().to_string(), parse_rational(value)?))
        })
        .collect()
}

/// `-` for standard input; otherwise the file as given, then with `.json`
/// appended, then the bundled fixture of the same name when the path is
/// `fixtures/<name>`.
fn resolve(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut text)
            .map_err(|e| Error::Input(format!("standard input: {e}")))?;
        return Ok(text);
    }
    let candidates = [PathBuf::from(path), PathBuf::from(format!("{path}.json"))];
    for candidate in &candidates {
        if candidate.is_file() {
            return std::fs::read_to_string(candidate)
                .map_err(|e| Error::Input(format!("{}: {e}", candidate.display())));
        }
    }
    let p = Path::new(path);
    let in_fixtures = p
        .parent()
        .and_then(Path::file_name)
        .is_some_and(|d| d == "fixtures");
    if in_fixtures {
        let stem = p.file_name().and_then(|s| s.to_str()).unwrap_or_default();
        let stem = stem.strip_suffix(".json").unwrap_or(stem);
        if let Some(text) = fixtures::source(stem) {
            return Ok(text.to_string());
        }
    }
    Err(Error::Input(format!("{path}: no such file")))
}

fn load(path: &str, common: &Common) -> Result<Document> {
    let text = resolve(path)?;
    let params = parse_params(&common.params)?;
    parse_document_with(&text, &params).map_err(|e| match e {
        Error::Parse { locus, message } => Error::Parse {
            locus: format!("{path}: {locus}"),
            message,
        },
        other => other,
    })
}

fn wrong_kind(expected: &str, found: &Document) -> Error {
    Error::Input(format!("expected a {expected} document, found {}", found.kind_name()))
}

type Section = (String, CheckReport);

fn algebra_check_name(a: &AlgebraData) -> String {
    a.kind().name().to_string()
}

fn module_check(m: &ModuleAlgebraData) -> Result<Section> {
    if m.carrier_bracket().is_some() && matches!(m.rep().actions(), Actions::AlmostPoisson { .. }) {
        Ok(("module-almost-poisson".into(), check_module_ap(m)?))
    } else {
        Ok(("module-comm-assoc".into(), check_module_comm_assoc(m)?))
    }
}

fn rep_check_name(rep: &RepresentationData) -> String {
    match rep.actions() {
        Actions::Assoc { .. } => "assoc-representation",
        Actions::AlmostPoisson { .. } => "almost-poisson-representation",
        Actions::Awb { .. } => "awb-representation",
    }
    .to_string()
}

/// The check `check` runs: the axioms of the document's declared kind.
fn primary_check(doc: &Document, form: BracketForm) -> Result<Section> {
    Ok(match doc {
        Document::Algebra(a) => (algebra_check_name(a), check_algebra(a)?),
        Document::Representation(r) => (rep_check_name(r), check_rep(r)?),
        Document::ModuleAlgebra(m) => module_check(m)?,
        Document::MatchedPair(mp) => match mp.rho1() {
            Some(_) => ("matched-pair-almost-poisson".into(), check_matched_pair_ap(mp)?),
            None => ("matched-pair-comm-assoc".into(), check_matched_pair_caa(mp)),
        },
        Document::Coalgebra(c) => ("coalgebra".into(), check_coalgebra(c)),
        Document::Bialgebra(b) => ("d-bialgebra".into(), check_dbialgebra(b)?),
        Document::Operator(op) => match op.context() {
            OperatorContext::RotaBaxter { .. } => ("rota-baxter".into(), check_weighted_rrb(op)?),
            OperatorContext::Averaging { .. } => {
                ("averaging".into(), check_relative_averaging_with(op, form)?)
            }
        },
        Document::Tridendriform(t) => ("tridendriform".into(), check_tridendriform(t)?),
    })
}

/// The primary check followed by related checks on the same data.
fn full_report(doc: &Document, form: BracketForm) -> Result<Vec<Section>> {
    let mut sections = vec![primary_check(doc, form)?];
    match doc {
        Document::Algebra(a) => {
            sections.push(("associativity".into(), check_associativity(a.product())));
            sections.push(("comm-assoc".into(), check_comm_assoc(a)));
            if a.bracket().is_some() {
                sections.push(("almost-poisson".into(), check_almost_poisson(a)?));
                sections.push(("awb-left".into(), check_awb(a, AwbVariant::Left)?));
                sections.push(("awb-right".into(), check_awb(a, AwbVariant::Right)?));
            }
        }
        Document::Representation(r) => {
            sections.push(("base".into(), check_algebra(r.base())?));
            if !matches!(r.actions(), Actions::Awb { .. }) {
                sections.push(("dual-representation".into(), check_rep(&dual_rep(r)?)?));
            }
        }
        Document::Bialgebra(b) => {
            sections.push(("infinitesimal".into(), check_infinitesimal(b)));
            if let Ok(eq) = equivalence_report(b) {
                sections.push(("matched-pair".into(), eq.matched_pair));
                sections.push(("manin-triple".into(), eq.manin_triple));
            }
        }
        Document::Operator(op) => {
            if let OperatorContext::Averaging { .. } = op.context() {
                let (n, hemi) = nijenhuis_from_operator(op)?;
                sections.push(("nijenhuis".into(), check_nijenhuis_awb(&n, &hemi)?));
                sections.push(("graph-closure".into(), graph_subalgebra_check(op)?));
            }
        }
        _ => {}
    }
    Ok(sections)
}

fn one(construction: Construction, mut docs: Vec<Document>) -> Result<Document> {
    if docs.len() != 1 {
        return Err(Error::Input(format!(
            "derive {} takes exactly one document",
            construction.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
        )));
    }
    Ok(docs.remove(0))
}

fn representation_of(doc: &Document) -> Result<&RepresentationData> {
    match doc {
        Document::Representation(r) => Ok(r),
        Document::ModuleAlgebra(m) => Ok(m.rep()),
        Document::Operator(op) => Ok(op.rep()),
        other => Err(wrong_kind("representation", other)),
    }
}

fn averaging_operator(doc: Document) -> Result<OperatorData> {
    match doc {
        Document::Operator(op) if matches!(op.context(), OperatorContext::Averaging { .. }) => Ok(op),
        other => Err(wrong_kind("averaging operator", &other)),
    }
}

fn derive(construction: Construction, docs: Vec<Document>, form: BracketForm) -> Result<Document> {
    use Construction::*;
    if construction == Double {
        return derive_double(docs);
    }
    let doc = one(construction, docs)?;
    Ok(match construction {
        Semidirect => {
            let rep = representation_of(&doc)?;
            match rep.actions() {
                Actions::Assoc { .. } => semidirect_assoc(rep)?,
                Actions::AlmostPoisson { .. } => semidirect_ap(rep)?,
                Actions::Awb { .. } => awb_semidirect(rep)?,
            }
            .into()
        }
        Hemisemi => hemisemi_direct(representation_of(&doc)?)?.into(),
        Bowtie => match doc {
            Document::MatchedPair(mp) => bowtie(&mp)?.into(),
            other => return Err(wrong_kind("matched-pair", &other)),
        },
        Dendrify => match doc {
            Document::Operator(op) => dendrify(&op)?.into(),
            other => return Err(wrong_kind("operator", &other)),
        },
        Awb => induced_awb_with(&averaging_operator(doc)?, form)?.into(),
        DualRep => dual_rep(representation_of(&doc)?)?.into(),
        DualCoalgebra => match doc {
            Document::Coalgebra(c) => dualize_coalgebra(&c).into(),
            Document::Algebra(a) => encode_as_coalgebra(&a).into(),
            other => return Err(wrong_kind("coalgebra", &other)),
        },
        Associated => match doc {
            Document::Tridendriform(t) => associated_ap(&t)?.into(),
            other => return Err(wrong_kind("tridendriform", &other)),
        },
        Double => unreachable!("handled above"),
    })
}

/// `double` accepts a bialgebra, or an algebra followed by a coalgebra.
fn derive_double(docs: Vec<Document>) -> Result<Document> {
    let b = match <[Document; 1]>::try_from(docs) {
        Ok([Document::Bialgebra(b)]) => b,
        Ok([other]) => return Err(wrong_kind("bialgebra", &other)),
        Err(docs) => match <[Document; 2]>::try_from(docs) {
            Ok([Document::Algebra(a), Document::Coalgebra(c)]) => BialgebraData::new(a, c)?,
            _ => {
                return Err(Error::Input(
                    "derive double takes a bialgebra, or an algebra and a coalgebra".into(),
                ))
            }
        },
    };
    Ok(build_double(&b)?.0.into())
}

fn violation_value(v: &crate::report::Violation) -> Value {
    let coords = |x: &[Rational]| x.iter().map(format_rational).collect::<Vec<_>>();
    json!({
        "identity": v.identity.name(),
        "scope": v.scope.map(|s| s.name()),
        "indices": v.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "lhs": coords(&v.lhs),
        "rhs": coords(&v.rhs),
    })
}

fn emit(out: &mut CommandOutcome, format: Format, command: &str, files: &[(String, Vec<Section>)]) {
    match format {
        Format::Text => {
            for (file, sections) in files {
                if files.len() > 1 || command == "report" {
                    out.stdout.push_str(&format!("{file}\n"));
                }
                for (name, report) in sections {
                    out.stdout.push_str(&format!("{name}: {report}\n"));
                }
            }
        }
        Format::Machine => {
            let files: Vec<Value> = files
                .iter()
                .map(|(file, sections)| {
                    let checks: Vec<Value> = sections
                        .iter()
                        .map(|(name, report)| {
                            json!({
                                "check": name,
                                "passed": report.passed(),
                                "violations": report.violations().iter().map(violation_value).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    json!({ "file": file, "checks": checks })
                })
                .collect();
            let value = json!({ "command": command, "files": files });
            out.stdout.push_str(&serde_json::to_string_pretty(&value).expect("serializable"));
            out.stdout.push('\n');
        }
    }
}
