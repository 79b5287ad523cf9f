//! Command-line front end: `grasscode <count|enumerate|verify|equiv|aut>`.
//!
//! Exit codes: 0 success, 1 a verified-false result or violation, 2 usage
//! or parameter error, 3 a resource guard was hit.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codegraph::{self, build_graph, hyperplane_sections, top_members, GraphError};
use crate::codespace::{
    count_by_enumeration, count_nondegenerate, enumerate_codes, enumerate_grassmannian, parse_matrix,
    CodeError, Subspace,
};
use crate::equiv::{self, EquivError, Mode, DEFAULT_VERTEX_GUARD};
use crate::gf::{Elem, Field, GfError};
use crate::linalg;
use crate::report::{Params, Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "grasscode", version, about = "Graphs of non-degenerate linear codes over GF(q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Omit timing fields so output is byte-reproducible.
    #[arg(long, global = true)]
    pub no_meta: bool,
    /// Worker threads (defaults to all cores).
    #[arg(long, env = "GRASSCODE_THREADS", global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Dims {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub q: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    StarSize,
    StarMaximality,
    TopBounds,
    TopSections,
    Separation,
    Connectivity,
    Cliques,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Generalized,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Generalized => Mode::Generalized,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count non-degenerate [n,k]_q codes by formula and by enumeration.
    Count(Dims),
    /// List non-degenerate codes (or all subspaces with --all) in canonical form.
    Enumerate {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Run one exhaustive check and print its report.
    Verify {
        #[arg(long, value_enum)]
        lemma: Lemma,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: u32,
        /// Generator matrix of a single (k+1)-dimensional code (top-sections only).
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Decide monomial equivalence of two codes given as matrix files.
    Equiv {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
    },
    /// Automorphism group order of Γ(n,k)_q against the monomial image.
    Aut {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
        /// Largest vertex count to search.
        #[arg(long, default_value_t = DEFAULT_VERTEX_GUARD)]
        guard: usize,
    },
}

/// What a command prints and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn out(stdout: String, code: i32) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Equiv(#[from] EquivError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Equiv(EquivError::SearchSpaceTooLarge { .. }) => EXIT_GUARD,
            _ => EXIT_USAGE,
        }
    }
}

struct Ctx {
    format: Format,
    no_meta: bool,
}

impl Ctx {
    fn emit(&self, mut value: Value, text: String, code: i32, started: Instant) -> Outcome {
        let stdout = match self.format {
            Format::Json => {
                if !self.no_meta {
                    value["elapsed_ms"] = json!(started.elapsed().as_millis() as u64);
                }
                serde_json::to_string_pretty(&value).unwrap() + "\n"
            }
            Format::Text => text,
        };
        Outcome::out(stdout, code)
    }

    fn emit_report(&self, report: Report) -> Outcome {
        let report = if self.no_meta { report.without_meta() } else { report };
        let code = if report.passed() { EXIT_OK } else { EXIT_VIOLATION };
        let stdout = match self.format {
            Format::Json => report.to_json() + "\n",
            Format::Text => report_text(&report),
        };
        Outcome::out(stdout, code)
    }
}

fn report_text(r: &Report) -> String {
    let mut out = format!(
        "{} (n={}, k={}, q={}): {} checks, {} violations\n",
        r.check,
        r.params.n,
        r.params.k,
        r.params.q,
        r.checked_count,
        r.violations.len()
    );
    for v in &r.violations {
        out.push_str(&format!("  {}: {}\n", v.subject, v.message));
    }
    if let Some(d) = r.details.get("distinct_sections") {
        out.push_str(&format!("  distinct hyperplane sections: {d}\n"));
    }
    if let Some(Value::Array(top)) = r.details.get("top_restriction") {
        out.push_str(&format!("  non-degenerate hyperplanes: {}\n", top.len()));
    }
    if let Some(Value::Array(missing)) = r.details.get("missing_columns") {
        let pts: Vec<String> = missing
            .iter()
            .map(|p| {
                let xs: Vec<String> = p.as_array().into_iter().flatten().map(|x| x.to_string()).collect();
                format!("({})", xs.join(","))
            })
            .collect();
        out.push_str(&format!("  points missing from the columns: {}\n", pts.join(" ")));
    }
    out
}

fn params_json(n: usize, k: usize, q: u32) -> Value {
    json!({ "n": n, "k": k, "q": q })
}

fn read_matrix(path: &Path, field: &Field) -> Result<Subspace, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let m = parse_matrix(&text, field)?;
    Ok(Subspace::from_matrix(field, &m)?)
}

fn rows_json(s: &Subspace) -> Value {
    json!(s.rows().map(<[Elem]>::to_vec).collect::<Vec<_>>())
}

fn one_based(classes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    classes.iter().map(|c| c.iter().map(|i| i + 1).collect()).collect()
}

/// Parses arguments and runs; clap errors are rendered like other failures.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) if e.use_stderr() => Outcome {
            stdout: String::new(),
            stderr: e.to_string(),
            code: EXIT_USAGE,
        },
        Err(e) => Outcome::out(e.to_string(), EXIT_OK),
    }
}

pub fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.threads {
        // a global pool can only be installed once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let ctx = Ctx {
        format: cli.format,
        no_meta: cli.no_meta,
    };
    let result = match cli.command {
        Command::Count(d) => cmd_count(&ctx, d),
        Command::Enumerate { dims, all, limit } => cmd_enumerate(&ctx, dims, all, limit),
        Command::Verify {
            lemma,
            n,
            k,
            q,
            matrix,
        } => cmd_verify(&ctx, lemma, n, k, q, matrix.as_deref()),
        Command::Equiv { a, b, q, mode } => cmd_equiv(&ctx, &a, &b, q, mode.into()),
        Command::Aut { dims, mode, guard } => cmd_aut(&ctx, dims, mode.into(), guard),
    };
    result.unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: e.exit_code(),
    })
}

fn cmd_count(ctx: &Ctx, d: Dims) -> Result<Outcome, CliError> {
    let started = Instant::now();
    Field::new(d.q)?;
    if d.k == 0 || d.k > d.n {
        return Err(CliError::Usage(format!("need 1 <= k <= n, got n = {}, k = {}", d.n, d.k)));
    }
    let formula = count_nondegenerate(d.n, d.k, d.q);
    let enumerated = count_by_enumeration(d.n, d.k, d.q);
    let agree = formula == enumerated.into();
    let value = json!({
        "schema": SCHEMA_VERSION,
        "command": "count",
        "params": params_json(d.n, d.k, d.q),
        "count": formula.to_string(),
        "enumerated": enumerated.to_string(),
        "agree": agree,
    });
    let text = format!(
        "C({},{})_{}: {} (enumeration {}, {})\n",
        d.n,
        d.k,
        d.q,
        formula,
        enumerated,
        if agree { "cross-check OK" } else { "MISMATCH" }
    );
    Ok(ctx.emit(value, text, if agree { EXIT_OK } else { EXIT_VIOLATION }, started))
}

fn cmd_enumerate(ctx: &Ctx, d: Dims, all: bool, limit: Option<usize>) -> Result<Outcome, CliError> {
    let started = Instant::now();
    Field::new(d.q)?;
    if d.k == 0 || d.k > d.n {
        return Err(CliError::Usage(format!("need 1 <= k <= n, got n = {}, k = {}", d.n, d.k)));
    }
    let items: Box<dyn Iterator<Item = Subspace>> = if all {
        Box::new(enumerate_grassmannian(d.n, d.k, d.q))
    } else {
        Box::new(enumerate_codes(d.n, d.k, d.q))
    };
    let codes: Vec<Subspace> = items.take(limit.unwrap_or(usize::MAX)).collect();
    let mut text = String::new();
    for c in &codes {
        text.push_str(&linalg_text(c));
        text.push('\n');
    }
    let value = json!({
        "schema": SCHEMA_VERSION,
        "command": "enumerate",
        "params": params_json(d.n, d.k, d.q),
        "nondegenerate_only": !all,
        "count": codes.len(),
        "codes": codes.iter().map(rows_json).collect::<Vec<_>>(),
    });
    Ok(ctx.emit(value, text, EXIT_OK, started))
}

fn linalg_text(s: &Subspace) -> String {
    crate::codespace::format_matrix(&s.to_matrix())
}

fn require(v: Option<usize>, name: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this check")))
}

fn cmd_verify(
    ctx: &Ctx,
    lemma: Lemma,
    n: Option<usize>,
    k: Option<usize>,
    q: u32,
    matrix: Option<&Path>,
) -> Result<Outcome, CliError> {
    let field = Field::new(q)?;
    if let (Lemma::TopSections, Some(path)) = (lemma, matrix) {
        let u = read_matrix(path, &field)?;
        return Ok(ctx.emit_report(top_sections_of(&field, &u)?));
    }
    if matrix.is_some() {
        return Err(CliError::Usage("--matrix is only accepted by --lemma top-sections".into()));
    }
    let (n, k) = (require(n, "n")?, require(k, "k")?);
    let report = match lemma {
        Lemma::StarSize => codegraph::verify_star_sizes(n, k, q)?,
        Lemma::TopSections => codegraph::verify_top_sections(n, k, q)?,
        Lemma::Separation => codegraph::verify_separation(n, k, q)?,
        Lemma::StarMaximality => codegraph::verify_star_propositions(&build_graph(n, k, q)?),
        Lemma::TopBounds => codegraph::verify_top_bounds(&build_graph(n, k, q)?),
        Lemma::Connectivity => codegraph::verify_connectivity(&build_graph(n, k, q)?),
        Lemma::Cliques => codegraph::verify_cliques(&build_graph(n, k, q)?),
    };
    Ok(ctx.emit_report(report))
}

/// Hyperplane-section analysis of a single non-degenerate code `u`, with its
/// non-degenerate hyperplanes and the projective points missing from its columns.
pub fn top_sections_of(field: &Field, u: &Subspace) -> Result<Report, CliError> {
    let started = Instant::now();
    let n = u.ambient_dim();
    let d = u.dim();
    let mut report = Report::new(
        "top-sections",
        Params {
            n,
            k: d.saturating_sub(1),
            q: field.order(),
        },
    );
    let sections = hyperplane_sections(field, u)?;
    let mut violations = Vec::new();
    report.checked_count = codegraph::check_sections(field, u, &mut violations)?;
    report.violations = violations;
    let top: Vec<Subspace> = top_members(field, u)
        .into_iter()
        .filter(Subspace::is_nondegenerate)
        .collect();
    let columns: Vec<Vec<Elem>> = (0..n)
        .map(|j| {
            let mut c = u.column(j);
            linalg::normalize(field, &mut c);
            c
        })
        .collect();
    let missing: Vec<Vec<Elem>> = enumerate_grassmannian(d, 1, field.order())
        .map(|p| p.row(0).to_vec())
        .filter(|p| !columns.contains(p))
        .collect();
    let common = top
        .split_first()
        .and_then(|(first, rest)| rest.iter().try_fold(first.clone(), |acc, x| acc.intersection(field, x)));
    report.details = json!({
        "code": rows_json(u),
        "sections": sections.sections.iter().map(rows_json).collect::<Vec<_>>(),
        "distinct_sections": sections.distinct(),
        "section_classes": one_based(&sections.section_classes),
        "column_classes": one_based(&sections.column_classes),
        "missing_columns": missing,
        "top_restriction": top.iter().map(rows_json).collect::<Vec<_>>(),
        "top_restriction_common_subspace": common.as_ref().map(rows_json),
    });
    Ok(report.finish(started))
}

fn cmd_equiv(ctx: &Ctx, a: &Path, b: &Path, q: u32, mode: Mode) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let field = Field::new(q)?;
    let c1 = read_matrix(a, &field)?;
    let c2 = read_matrix(b, &field)?;
    let witness = equiv::are_equivalent(&field, &c1, &c2, mode)?;
    let value = json!({
        "schema": SCHEMA_VERSION,
        "command": "equiv",
        "params": params_json(c1.ambient_dim(), c1.dim(), q),
        "mode": mode,
        "equivalent": witness.is_some(),
        "witness": witness,
    });
    let text = match &witness {
        Some(w) => format!("{}\n", w.to_json()),
        None => "inequivalent\n".to_string(),
    };
    let code = if witness.is_some() { EXIT_OK } else { EXIT_VIOLATION };
    Ok(ctx.emit(value, text, code, started))
}

fn cmd_aut(ctx: &Ctx, d: Dims, mode: Mode, guard: usize) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let g = build_graph(d.n, d.k, d.q)?;
    let cmp = equiv::compare_with_monomial_group(&g, mode, guard)?;
    let value = json!({
        "schema": SCHEMA_VERSION,
        "command": "aut",
        "params": params_json(d.n, d.k, d.q),
        "result": cmp,
    });
    let text = format!(
        "|Aut(Γ({},{})_{})| = {}, monomial image {} of group order {}: {}\n",
        d.n,
        d.k,
        d.q,
        cmp.automorphism_order,
        cmp.monomial_image_order,
        cmp.monomial_group_order,
        if cmp.matches { "matches" } else { "MISMATCH" }
    );
    let code = if cmp.matches { EXIT_OK } else { EXIT_VIOLATION };
    Ok(ctx.emit(value, text, code, started))
}
