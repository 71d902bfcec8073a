//! Command-line driver: loads an operator, runs the requested stage of the
//! pipeline and renders the result as JSON, CSV or a text table.
//!
//! Exit status: 0 on success, 1 when a certificate fails (or the report is
//! inconsistent), 2 on any error.

use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mirror_integrality::certify::{
    certify_primes, n_integrality_report, select_primes, DworkCertificate, GaugeCertificate,
    IntegralityReport, KsvCertificate, PrimeCertificates, PrimeSelection, ReportInput,
    SkippedPrime,
};
use mirror_integrality::fixtures::{fixture, FIXTURE_NAMES};
use mirror_integrality::padic::denominator_support;
use mirror_integrality::picard_fuchs::{
    frobenius_solutions, load_operator, mirror_map, monodromy_matrix, MirrorMap, MonodromyRanks,
    PfOperator, SolutionBasis,
};
use mirror_integrality::series::{format_rational, RationalSeries};
use mirror_integrality::yukawa::{instanton_extract, yukawa, InstantonSeries, YukawaData};
use mirror_integrality::Error;
use serde::Serialize;

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_CERTIFICATE_FAILURE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mirror-integrality",
    version,
    about = "Mirror maps, instanton numbers and p-adic integrality certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Solve,
    MirrorMap,
    Yukawa,
    Instantons,
    Certify,
    Report,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frobenius basis of solutions at t = 0.
    Solve(JobArgs),
    /// Canonical coordinate q(t) and its inverse t(q).
    MirrorMap(JobArgs),
    /// Yukawa coupling in t and in q.
    Yukawa(JobArgs),
    /// Instanton numbers n_1 .. n_D.
    Instantons(JobArgs),
    /// Dwork, KSV and gauge certificates for the selected primes.
    Certify(JobArgs),
    /// Full pipeline and integrality report.
    Report(JobArgs),
}

impl Command {
    pub fn split(self) -> (CommandKind, JobArgs) {
        match self {
            Command::Solve(a) => (CommandKind::Solve, a),
            Command::MirrorMap(a) => (CommandKind::MirrorMap, a),
            Command::Yukawa(a) => (CommandKind::Yukawa, a),
            Command::Instantons(a) => (CommandKind::Instantons, a),
            Command::Certify(a) => (CommandKind::Certify, a),
            Command::Report(a) => (CommandKind::Report, a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["operator", "fixture"])))]
pub struct JobArgs {
    /// Operator spec file (JSON).
    #[arg(long, value_name = "PATH")]
    pub operator: Option<PathBuf>,
    /// Built-in operator.
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
    /// Working series order.
    #[arg(long, default_value_t = 64)]
    pub order: usize,
    /// Largest instanton degree D.
    #[arg(long, default_value_t = 16)]
    pub max_degree: usize,
    /// Explicit primes, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "prime_bound",
        value_name = "P1,P2,..."
    )]
    pub primes: Option<Vec<u64>>,
    /// Certify admissible primes up to this bound.
    #[arg(long, value_name = "INT")]
    pub prime_bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorSource {
    File(PathBuf),
    Fixture(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub source: OperatorSource,
    pub order: usize,
    pub max_degree: usize,
    pub primes: PrimeSelection,
    pub format: Format,
    pub out: Option<PathBuf>,
}

pub const DEFAULT_PRIME_BOUND: u64 = 50;

impl JobConfig {
    pub fn from_args(args: JobArgs) -> Result<Self, CliError> {
        let source = match (args.operator, args.fixture) {
            (Some(path), None) => OperatorSource::File(path),
            (None, Some(name)) => OperatorSource::Fixture(name),
            _ => {
                return Err(CliError::config(
                    "exactly one of --operator and --fixture is required",
                ))
            }
        };
        let primes = match (args.primes, args.prime_bound) {
            (Some(list), _) => PrimeSelection::List(list),
            (None, bound) => PrimeSelection::Bound(bound.unwrap_or(DEFAULT_PRIME_BOUND)),
        };
        let config = JobConfig {
            source,
            order: args.order,
            max_degree: args.max_degree,
            primes,
            format: args.format,
            out: args.out,
        };
        if config.order <= config.max_degree {
            return Err(CliError::config(format!(
                "--order {} must exceed --max-degree {}",
                config.order, config.max_degree
            )));
        }
        Ok(config)
    }

    /// Checks what depends on the operator.
    pub fn validate_for(&self, op: &PfOperator) -> Result<(), CliError> {
        if let PrimeSelection::Bound(b) = self.primes {
            let need = op.rank() as u64 + 2;
            if b < need {
                return Err(CliError::config(format!(
                    "--prime-bound {b} is below rank + 2 = {need}"
                )));
            }
        }
        Ok(())
    }
}

/// Error with the module and operation that raised it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub location: &'static str,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn core(location: &'static str, e: Error) -> Self {
        CliError {
            location,
            kind: e.name(),
            message: e.to_string(),
        }
    }

    fn config(message: impl Into<String>) -> Self {
        CliError {
            location: "cli::JobConfig",
            kind: "InvalidConfig",
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed ({}): {}",
            self.location, self.kind, self.message
        )
    }
}

impl std::error::Error for CliError {}

fn at(location: &'static str) -> impl FnOnce(Error) -> CliError {
    move |e| CliError::core(location, e)
}

pub fn load(source: &OperatorSource) -> Result<PfOperator, CliError> {
    match source {
        OperatorSource::Fixture(name) => fixture(name).map_err(|e| {
            let mut err = CliError::core("fixtures::fixture", e);
            err.message
                .push_str(&format!(" (available: {})", FIXTURE_NAMES.join(", ")));
            err
        }),
        OperatorSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::core(
                    "picard_fuchs::load_operator",
                    Error::MalformedSpec(format!("cannot read {}: {e}", path.display())),
                )
            })?;
            load_operator(&text).map_err(at("picard_fuchs::load_operator"))
        }
    }
}

/// Stages computed for one job, in pipeline order.
struct Job {
    op: PfOperator,
    basis: SolutionBasis,
    mirror: Option<MirrorMap>,
}

impl Job {
    fn new(op: PfOperator, order: usize) -> Result<Self, CliError> {
        let basis =
            frobenius_solutions(&op, order).map_err(at("picard_fuchs::frobenius_solutions"))?;
        Ok(Job {
            op,
            basis,
            mirror: None,
        })
    }

    fn mirror(&mut self) -> Result<&MirrorMap, CliError> {
        if self.mirror.is_none() {
            self.mirror = Some(mirror_map(&self.basis).map_err(at("picard_fuchs::mirror_map"))?);
        }
        Ok(self.mirror.as_ref().expect("just computed"))
    }

    fn yukawa(&mut self) -> Result<YukawaData, CliError> {
        self.mirror()?;
        let mm = self.mirror.as_ref().expect("just computed");
        yukawa(&self.op, &self.basis, mm).map_err(at("yukawa::yukawa"))
    }

    /// Yukawa data when the operator supports it.
    fn optional_yukawa(&mut self) -> Result<Option<YukawaData>, CliError> {
        if self.op.rank() == 4 && self.op.n0().is_some() {
            self.yukawa().map(Some)
        } else {
            Ok(None)
        }
    }

    fn report_input(&mut self, max_degree: usize) -> Result<ReportInput, CliError> {
        let y = self.optional_yukawa()?;
        let instantons = match &y {
            Some(y) => Some(extract(&y.y_q, max_degree)?),
            None => None,
        };
        let order = self.basis.order();
        Ok(ReportInput {
            name: self.op.name().to_string(),
            rank: self.op.rank(),
            declared_n: self.op.declared_n().cloned(),
            q_of_t: self.mirror()?.q_of_t.truncate(order),
            y_q: y.map(|y| y.y_q),
            instantons,
        })
    }
}

fn extract(y: &RationalSeries, max_degree: usize) -> Result<InstantonSeries, CliError> {
    instanton_extract(y, max_degree).map_err(at("yukawa::instanton_extract"))
}

/// Rendered document plus whether every certificate in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.passed {
            EXIT_SUCCESS
        } else {
            EXIT_CERTIFICATE_FAILURE
        }
    }
}

pub fn run(command: CommandKind, config: &JobConfig) -> Result<Outcome, CliError> {
    let op = load(&config.source)?;
    config.validate_for(&op)?;
    let mut job = Job::new(op, config.order)?;
    let name = job.op.name().to_string();
    let order = config.order;
    let (document, passed) = match command {
        CommandKind::Solve => {
            let ranks =
                monodromy_matrix(&job.basis).map_err(at("picard_fuchs::monodromy_matrix"))?;
            let doc = SolveDoc {
                operator: &name,
                order,
                rank: job.op.rank(),
                pure_parts: (0..job.basis.rank())
                    .map(|k| job.basis.pure_part(k))
                    .collect(),
                monodromy: MonodromyDoc {
                    matrix: ranks
                        .entries()
                        .iter()
                        .map(|row| row.iter().map(format_rational).collect())
                        .collect(),
                    ranks: ranks.ranks(),
                },
            };
            (emit(&doc, config.format)?, true)
        }
        CommandKind::MirrorMap => {
            let mm = job.mirror()?;
            let (support, unfactored) = denominator_support(mm.q_of_t.coeffs());
            let doc = MirrorDoc {
                operator: &name,
                order,
                q_of_t: &mm.q_of_t,
                t_of_q: &mm.t_of_q,
                denominator_primes: support.into_iter().collect(),
                unfactored_denominators: unfactored.iter().map(ToString::to_string).collect(),
            };
            (emit(&doc, config.format)?, true)
        }
        CommandKind::Yukawa => {
            let y = job.yukawa()?;
            let doc = YukawaDoc {
                operator: &name,
                order,
                n0: format_rational(&y.n0),
                w_t: &y.w_t,
                y_q: &y.y_q,
            };
            (emit(&doc, config.format)?, true)
        }
        CommandKind::Instantons => {
            let y = job.yukawa()?;
            let inst = extract(&y.y_q, config.max_degree)?;
            (emit(&InstantonDoc::new(&name, &inst), config.format)?, true)
        }
        CommandKind::Certify => {
            let input = job.report_input(config.max_degree)?;
            // an explicit list is certified as given; a bound keeps admissible primes only
            let (primes, skipped) = match &config.primes {
                PrimeSelection::List(list) => {
                    let mut list = list.clone();
                    list.sort_unstable();
                    list.dedup();
                    (list, Vec::new())
                }
                bound => select_primes(&input, bound).map_err(at("certify::select_primes"))?,
            };
            let certs = certify_primes(&input, &primes).map_err(at("certify::certify_primes"))?;
            let passed = certs.iter().all(PrimeCertificates::passed);
            let doc = CertifyDoc::new(&name, order, &certs, skipped);
            (emit(&doc, config.format)?, passed)
        }
        CommandKind::Report => {
            let input = job.report_input(config.max_degree)?;
            let report = n_integrality_report(&input, &config.primes)
                .map_err(at("certify::n_integrality_report"))?;
            (emit(&ReportDoc(&report), config.format)?, report.consistent)
        }
    };
    Ok(Outcome { document, passed })
}

/// A document that can be rendered in every output format.
pub trait Render: Serialize {
    fn csv(&self) -> Vec<Vec<String>>;
    fn text(&self) -> String;
}

pub fn emit<R: Render>(doc: &R, format: Format) -> Result<String, CliError> {
    let io = |e: String| CliError {
        location: "cli::emit",
        kind: "IOError",
        message: e,
    };
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).map_err(|e| io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in doc.csv() {
                w.write_record(&row).map_err(|e| io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| io(e.to_string()))
        }
        Format::Text => Ok(doc.text()),
    }
}

pub fn write_output(document: &str, out: Option<&Path>) -> Result<(), CliError> {
    let result = match out {
        Some(path) => std::fs::write(path, document),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(document.as_bytes())
                .and_then(|_| stdout.flush())
        }
    };
    result.map_err(|e| CliError {
        location: "cli::emit",
        kind: "IOError",
        message: e.to_string(),
    })
}

fn join_primes(primes: &[u64]) -> String {
    primes
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn series_rows(columns: &[(&str, &RationalSeries)]) -> Vec<Vec<String>> {
    let mut header = vec!["n".to_string()];
    header.extend(columns.iter().map(|(name, _)| name.to_string()));
    let len = columns.iter().map(|(_, s)| s.order()).max().unwrap_or(0);
    let mut rows = vec![header];
    for n in 0..len {
        let mut row = vec![n.to_string()];
        for (_, s) in columns {
            row.push(if n < s.order() {
                format_rational(s.coeff(n))
            } else {
                String::new()
            });
        }
        rows.push(row);
    }
    rows
}

#[derive(Serialize)]
struct MonodromyDoc {
    matrix: Vec<Vec<String>>,
    ranks: MonodromyRanks,
}

#[derive(Serialize)]
struct SolveDoc<'a> {
    operator: &'a str,
    order: usize,
    rank: usize,
    /// `y_k = sum_j g_(k-j) log(t)^j / j!`
    pure_parts: Vec<&'a RationalSeries>,
    monodromy: MonodromyDoc,
}

impl Render for SolveDoc<'_> {
    fn csv(&self) -> Vec<Vec<String>> {
        let names: Vec<String> = (0..self.pure_parts.len())
            .map(|k| format!("g_{k}"))
            .collect();
        let cols: Vec<(&str, &RationalSeries)> = names
            .iter()
            .map(String::as_str)
            .zip(self.pure_parts.iter().copied())
            .collect();
        series_rows(&cols)
    }

    fn text(&self) -> String {
        let mut s = format!(
            "operator {}, rank {}, order {}\n",
            self.operator, self.rank, self.order
        );
        s.push_str("y_k = sum_j g_(k-j) log(t)^j / j!\n");
        for (k, g) in self.pure_parts.iter().enumerate() {
            let _ = writeln!(s, "g_{k} = {g}");
        }
        let r = &self.monodromy.ranks;
        let _ = writeln!(
            s,
            "monodromy: rank N^{} = {}, rank N^{} = {}, N^{} = 0: {}",
            r.rank.saturating_sub(1),
            r.top,
            r.rank.saturating_sub(2),
            r.subtop,
            r.rank,
            r.nilpotent
        );
        s
    }
}

#[derive(Serialize)]
struct MirrorDoc<'a> {
    operator: &'a str,
    order: usize,
    q_of_t: &'a RationalSeries,
    t_of_q: &'a RationalSeries,
    denominator_primes: Vec<u64>,
    unfactored_denominators: Vec<String>,
}

impl Render for MirrorDoc<'_> {
    fn csv(&self) -> Vec<Vec<String>> {
        series_rows(&[("q_of_t", self.q_of_t), ("t_of_q", self.t_of_q)])
    }

    fn text(&self) -> String {
        let mut s = format!("operator {}, order {}\n", self.operator, self.order);
        let _ = writeln!(s, "q(t) = {}", self.q_of_t);
        let _ = writeln!(s, "t(q) = {}", self.t_of_q);
        let _ = writeln!(
            s,
            "denominator primes of q(t): {:?}",
            self.denominator_primes
        );
        if !self.unfactored_denominators.is_empty() {
            let _ = writeln!(
                s,
                "unfactored denominators: {}",
                self.unfactored_denominators.join(", ")
            );
        }
        s
    }
}

#[derive(Serialize)]
struct YukawaDoc<'a> {
    operator: &'a str,
    order: usize,
    n0: String,
    w_t: &'a RationalSeries,
    y_q: &'a RationalSeries,
}

impl Render for YukawaDoc<'_> {
    fn csv(&self) -> Vec<Vec<String>> {
        series_rows(&[("w_t", self.w_t), ("y_q", self.y_q)])
    }

    fn text(&self) -> String {
        format!(
            "operator {}, order {}, n0 = {}\nW(t) = {}\nY(q) = {}\n",
            self.operator, self.order, self.n0, self.w_t, self.y_q
        )
    }
}

#[derive(Serialize)]
struct InstantonRow {
    d: usize,
    n_d: String,
    denominator_primes: Vec<u64>,
}

#[derive(Serialize)]
struct InstantonDoc<'a> {
    operator: &'a str,
    order: usize,
    max_degree: usize,
    n0: String,
    instantons: Vec<InstantonRow>,
}

impl<'a> InstantonDoc<'a> {
    fn new(operator: &'a str, inst: &InstantonSeries) -> Self {
        let instantons = inst
            .numbers
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, n)| InstantonRow {
                d,
                n_d: format_rational(n),
                denominator_primes: denominator_support(std::iter::once(n))
                    .0
                    .into_iter()
                    .collect(),
            })
            .collect();
        InstantonDoc {
            operator,
            order: inst.source_order,
            max_degree: inst.max_degree(),
            n0: format_rational(&inst.numbers[0]),
            instantons,
        }
    }
}

impl Render for InstantonDoc<'_> {
    fn csv(&self) -> Vec<Vec<String>> {
        let mut rows = vec![vec!["d".into(), "n_d".into(), "denominator_primes".into()]];
        for r in &self.instantons {
            rows.push(vec![
                r.d.to_string(),
                r.n_d.clone(),
                join_primes(&r.denominator_primes),
            ]);
        }
        rows
    }

    fn text(&self) -> String {
        let width = self
            .instantons
            .iter()
            .map(|r| r.n_d.len())
            .max()
            .unwrap_or(0)
            .max(3);
        let mut s = format!(
            "operator {}, order {}, n0 = {}\n{:>4}  {:>width$}  denominator primes\n",
            self.operator, self.order, self.n0, "d", "n_d"
        );
        for r in &self.instantons {
            let _ = writeln!(
                s,
                "{:>4}  {:>width$}  {}",
                r.d,
                r.n_d,
                join_primes(&r.denominator_primes)
            );
        }
        s
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum AnyCertificate<'a> {
    Dwork(&'a DworkCertificate),
    Ksv(&'a KsvCertificate),
    Gauge(&'a GaugeCertificate),
}

#[derive(Serialize)]
struct CertifyDoc<'a> {
    operator: &'a str,
    order: usize,
    certified_primes: Vec<u64>,
    skipped_primes: Vec<SkippedPrime>,
    certificates: Vec<AnyCertificate<'a>>,
    #[serde(skip)]
    rows: Vec<Vec<String>>,
}

impl<'a> CertifyDoc<'a> {
    fn new(
        operator: &'a str,
        order: usize,
        certs: &'a [PrimeCertificates],
        skipped_primes: Vec<SkippedPrime>,
    ) -> Self {
        let mut certificates = Vec::new();
        for c in certs {
            certificates.push(AnyCertificate::Dwork(&c.dwork));
            certificates.extend(c.ksv.as_ref().map(AnyCertificate::Ksv));
            certificates.extend(c.gauge.as_ref().map(AnyCertificate::Gauge));
        }
        let rows = certs
            .iter()
            .flat_map(PrimeCertificates::summaries)
            .map(summary_row)
            .collect();
        CertifyDoc {
            operator,
            order,
            certified_primes: certs.iter().map(|c| c.prime).collect(),
            skipped_primes,
            certificates,
            rows,
        }
    }
}

const SUMMARY_HEADER: [&str; 7] = [
    "kind",
    "prime",
    "order",
    "verdict",
    "failure_index",
    "failure_valuation",
    "witness_verified",
];

fn summary_row(c: mirror_integrality::certify::CertificateSummary) -> Vec<String> {
    vec![
        tag(&c.kind),
        c.prime.to_string(),
        c.order.to_string(),
        tag(&c.verdict),
        c.failure.map_or(String::new(), |f| f.index.to_string()),
        c.failure.map_or(String::new(), |f| f.valuation.to_string()),
        c.witness_verified.to_string(),
    ]
}

/// Tag of a unit enum as serialized, e.g. `"pass"`.
fn tag<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::new(),
    }
}

fn summary_table(rows: &[Vec<String>]) -> String {
    let mut s = format!(
        "{:<6} {:>5} {:>6} {:<7} {}\n",
        "kind", "prime", "order", "verdict", "first failure"
    );
    for r in rows {
        let failure = if r[4].is_empty() {
            "-".to_string()
        } else {
            format!("index {}, valuation {}", r[4], r[5])
        };
        let _ = writeln!(
            s,
            "{:<6} {:>5} {:>6} {:<7} {}",
            r[0], r[1], r[2], r[3], failure
        );
    }
    s
}

impl Render for CertifyDoc<'_> {
    fn csv(&self) -> Vec<Vec<String>> {
        let mut rows = vec![SUMMARY_HEADER.iter().map(|h| h.to_string()).collect()];
        rows.extend(self.rows.iter().cloned());
        rows
    }

    fn text(&self) -> String {
        let mut s = format!("operator {}, order {}\n", self.operator, self.order);
        s.push_str(&summary_table(&self.rows));
        for p in &self.skipped_primes {
            let _ = writeln!(s, "skipped p = {}: {}", p.prime, p.reason);
        }
        s
    }
}

struct ReportDoc<'a>(&'a IntegralityReport);

impl Serialize for ReportDoc<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl ReportDoc<'_> {
    fn rows(&self) -> Vec<Vec<String>> {
        self.0
            .certificates
            .iter()
            .cloned()
            .map(summary_row)
            .collect()
    }
}

impl Render for ReportDoc<'_> {
    fn csv(&self) -> Vec<Vec<String>> {
        let mut rows = vec![SUMMARY_HEADER.iter().map(|h| h.to_string()).collect()];
        rows.extend(self.rows());
        rows
    }

    fn text(&self) -> String {
        let r = self.0;
        let mut s = format!(
            "operator {}, order {}, max degree {}\n",
            r.operator, r.order, r.max_degree
        );
        let _ = writeln!(s, "N_observed: {}", r.n_observed);
        let _ = writeln!(s, "N_declared: {}", r.n_declared.as_deref().unwrap_or("-"));
        let _ = writeln!(
            s,
            "mirror map denominator primes: {:?}",
            r.mirror_map_support
        );
        let _ = writeln!(s, "instanton denominator primes: {:?}", r.instanton_support);
        if !r.unfactored_denominators.is_empty() {
            let _ = writeln!(
                s,
                "unfactored denominators: {}",
                r.unfactored_denominators.join(", ")
            );
        }
        for v in &r.n_violations {
            let _ = writeln!(
                s,
                "violation: n_{} = {} (primes {:?})",
                v.degree, v.value, v.primes
            );
        }
        let _ = writeln!(s, "certified primes: {:?}", r.certified_primes);
        for p in &r.skipped_primes {
            let _ = writeln!(s, "skipped p = {}: {}", p.prime, p.reason);
        }
        s.push_str(&summary_table(&self.rows()));
        let _ = writeln!(s, "consistent: {}", r.consistent);
        for note in &r.notes {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }
}
