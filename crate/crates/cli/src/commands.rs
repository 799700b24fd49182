//! Subcommands. Each maps onto one library operation and returns a report
//! that is a pure function of its inputs and flags.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coalglab::acceptance::{self, AcceptanceConfig, CriterionResult};
use coalglab::coalgebra::{coradical, coradical_filtration, path_coalgebra, wedge};
use coalglab::comodule::DimensionVector;
use coalglab::embeddings::{
    bounded_quiver_embedding, functor_f, functor_g, nilpotent_modules, quiver_reps_up_to, shift_embedding,
    verify_representation_embedding, Functor, NilpotentFreeModule,
};
use coalglab::exactlin::{Field, Scalar, Subspace};
use coalglab::ext::{cf_dimvec, cf_dimvec_report, ext_quiver, wildness_witness, CfComparison, WitnessKind};
use coalglab::localization::{lift_idempotent, localize_coalgebra, localize_comodule, section_s, Localization};
use coalglab::oracle::{enumerate_comodules, ORACLE_BUDGET};
use coalglab::{Coalgebra, Comodule, Quiver};
use serde_json::{json, Value};

use crate::doc::{self, DocError, Node, VERSION};

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "COALGLAB_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "coalglab", version, about = "Exact computations with coalgebras and comodules")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Field for built-in constructions: Q or GF:p.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed recorded in reports; every current operation is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Enumeration budget (overrides COALGLAB_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbedKind {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    Shift,
    Bounded,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarnessFunctor {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    Shift,
    Bounded,
    Identity,
    Zero,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Some,
    None,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a coalgebra or comodule document.
    Check { input: String },
    /// Path coalgebra of a quiver, truncated at a path length.
    PathCoalgebra {
        /// Quiver document, or builtin:NAME (single-arrow, two-cycle, point,
        /// loops:K, kronecker:M, line:N).
        quiver: String,
        #[arg(long, default_value_t = 1)]
        max_len: usize,
    },
    /// Wedge V ^ W of two subspaces.
    Wedge {
        coalgebra: String,
        /// full, zero, comma-separated basis labels, or @subspace.json.
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Coradical, or the whole coradical filtration.
    Coradical {
        coalgebra: String,
        #[arg(long)]
        filtration: bool,
    },
    /// Coefficient coalgebra of a comodule.
    Cf { comodule: String },
    /// The cf recursion for a dimension vector, compared with the oracle.
    Cfdim {
        coalgebra: String,
        /// a:1,b:2 or @dimvec.json.
        #[arg(long)]
        d: String,
        #[arg(long)]
        no_oracle: bool,
    },
    /// Ext quiver of a pointed coalgebra.
    ExtQuiver { coalgebra: String },
    /// Search for a wildness witness.
    WildWitness {
        coalgebra: String,
        /// Fail (exit 1) unless the outcome matches.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Localization eCe, or T(M) for a comodule M.
    Localize {
        coalgebra: String,
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
        #[arg(long)]
        comodule: Option<String>,
    },
    /// The section S(N) = eC cotensor N of an eCe-comodule.
    Section {
        coalgebra: String,
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
        #[arg(long)]
        comodule: String,
    },
    /// Apply an embedding functor to a module or representation document.
    Embed {
        #[arg(value_enum)]
        functor: EmbedKind,
        input: String,
        /// Blocks in the shift embedding (default: the number of variables).
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[arg(long, value_delimiter = ',')]
        lambdas: Vec<String>,
    },
    /// Isomorphism classes of comodules with a given dimension vector.
    Enumerate {
        coalgebra: String,
        #[arg(long)]
        d: String,
    },
    /// Run the embedding harness on an enumerated corpus.
    VerifyEmbedding {
        #[arg(value_enum)]
        functor: HarnessFunctor,
        /// Largest module dimension (or total representation dimension).
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Number of variables for nilpotent corpora.
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Quiver for the bounded embedding.
        #[arg(long, default_value = "builtin:kronecker:2")]
        quiver: String,
        /// Blocks in the shift embedding (default: the number of variables).
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[arg(long, value_delimiter = ',')]
        lambdas: Vec<String>,
    },
    /// Run the acceptance suite.
    Acceptance {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CmdError {
    #[error(transparent)]
    Doc(#[from] DocError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] coalglab::Error),
}

impl CmdError {
    fn exit_code(&self) -> i32 {
        match self {
            CmdError::Core(coalglab::Error::CheckFailed(_)) => 1,
            _ => 2,
        }
    }
}

fn input(msg: impl Into<String>) -> CmdError {
    CmdError::Input(msg.into())
}

type CmdResult<T> = std::result::Result<T, CmdError>;

/// What a subcommand produced.
pub struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn doc(json: Value, text: String) -> Report {
        Report { json, text, ok: true }
    }
}

/// Result of a full invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let common = cli.common.clone();
    let report = match execute(cli.command, &common) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let body = match common.format {
        Format::Json => doc::to_text(&report.json),
        Format::Text => report.text,
    };
    let code = if report.ok { 0 } else { 1 };
    match &common.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}

impl Common {
    fn budget(&self) -> CmdResult<u128> {
        if let Some(b) = self.budget {
            return Ok(b);
        }
        match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| input(format!("{BUDGET_ENV}={s:?} is not a non-negative integer"))),
            Err(_) => Ok(ORACLE_BUDGET),
        }
    }

    fn field_or(&self, default: Field) -> CmdResult<Field> {
        match &self.field {
            Some(s) => Ok(s.parse()?),
            None => Ok(default),
        }
    }

    /// Rejects a `--field` that contradicts a document's field.
    fn agree(&self, actual: Field) -> CmdResult<()> {
        if let Some(s) = &self.field {
            let f: Field = s.parse()?;
            if f != actual {
                return Err(input(format!("--field {f} does not match the document field {actual}")));
            }
        }
        Ok(())
    }
}

fn load_coalgebra(path: &str, common: &Common) -> CmdResult<Arc<Coalgebra>> {
    let (v, _) = doc::read_json(path)?;
    let c = doc::coalgebra_from(Node::root(&v))?;
    common.agree(c.field())?;
    Ok(Arc::new(c))
}

fn load_comodule(path: &str, common: &Common) -> CmdResult<Comodule> {
    let (v, base) = doc::read_json(path)?;
    let m = doc::comodule_from(Node::root(&v), base.as_deref())?;
    common.agree(m.field())?;
    Ok(m)
}

fn builtin_quiver(name: &str) -> CmdResult<Quiver> {
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    let n = |default: usize| -> CmdResult<usize> {
        arg.map_or(Ok(default), |a| a.parse().map_err(|_| input(format!("bad parameter in builtin:{name}"))))
    };
    Ok(match base {
        "single-arrow" => Quiver::single_arrow(),
        "two-cycle" => Quiver::two_cycle(),
        "point" => Quiver::point(),
        "loops" => Quiver::loops(n(1)?),
        "kronecker" => Quiver::kronecker(n(2)?),
        "line" => Quiver::line(n(3)?),
        _ => return Err(input(format!("unknown builtin quiver {name:?}"))),
    })
}

fn load_quiver(arg: &str) -> CmdResult<Quiver> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin_quiver(name);
    }
    let (v, _) = doc::read_json(arg)?;
    Ok(doc::quiver_from(Node::root(&v))?)
}

fn parse_subspace(c: &Coalgebra, arg: &str) -> CmdResult<Subspace> {
    let f = c.field();
    let s = match arg.trim() {
        "full" => Subspace::full(f, c.dim()),
        "zero" | "" => Subspace::zero(f, c.dim()),
        s if s.starts_with('@') => {
            let (v, _) = doc::read_json(&s[1..])?;
            let sub = doc::subspace_from(Node::root(&v))?;
            if sub.field() != f || sub.ambient_dim() != c.dim() {
                return Err(input(format!("subspace {s} does not live in this coalgebra")));
            }
            sub
        }
        s => {
            let labels: Vec<&str> = s.split(',').map(str::trim).collect();
            c.span_of(&labels)?
        }
    };
    Ok(s)
}

fn parse_dimvec(arg: &str) -> CmdResult<DimensionVector> {
    if let Some(path) = arg.strip_prefix('@') {
        let (v, _) = doc::read_json(path)?;
        return Ok(doc::dimvec_from(Node::root(&v))?);
    }
    Ok(arg.parse()?)
}

fn default_lambdas(n: usize) -> Vec<i64> {
    (0..n as i64).collect()
}

fn parse_lambdas(field: Field, raw: &[String], default: &[i64]) -> CmdResult<Vec<Scalar>> {
    if raw.is_empty() {
        return Ok(default.iter().map(|&x| field.from_i64(x)).collect());
    }
    raw.iter().map(|s| Ok(field.parse_scalar(s)?)).collect()
}

fn subspace_text(c: &Coalgebra, s: &Subspace) -> String {
    let mut t = format!("dim {} of {}\n", s.dim(), c.dim());
    for v in s.vectors() {
        let _ = writeln!(t, "  {}", c.format_vector(&v));
    }
    t
}

fn coalgebra_text(c: &Coalgebra) -> String {
    let mut t = format!("coalgebra over {} of dimension {}\n", c.field(), c.dim());
    for (i, l) in c.labels().iter().enumerate() {
        let terms: Vec<String> = c
            .delta(i)
            .iter()
            .map(|(j, k, mu)| {
                let pair = format!("{} (x) {}", c.labels()[*j], c.labels()[*k]);
                if mu.is_one() {
                    pair
                } else {
                    format!("{mu}*{pair}")
                }
            })
            .collect();
        let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let _ = writeln!(t, "  Delta({l}) = {rhs}; eps({l}) = {}", c.counit()[i]);
    }
    t
}

fn comodule_text(m: &Comodule) -> String {
    let c = m.coalgebra();
    let mut t = format!("comodule of dimension {} over a coalgebra of dimension {}\n", m.dim(), c.dim());
    let mut rows: Vec<Vec<String>> = vec![Vec::new(); m.dim()];
    for (s, i, tt, coef) in m.rho_terms() {
        let term = format!("{} (x) x{tt}", c.labels()[i]);
        rows[s].push(if coef.is_one() { term } else { format!("{coef}*{term}") });
    }
    for (s, r) in rows.iter().enumerate() {
        let rhs = if r.is_empty() { "0".to_string() } else { r.join(" + ") };
        let _ = writeln!(t, "  rho(x{s}) = {rhs}");
    }
    t
}

fn quiver_text(q: &Quiver) -> String {
    let mut t = format!("quiver with vertices {}\n", q.vertices().join(", "));
    for (l, s, tt) in q.arrows() {
        let _ = writeln!(t, "  {l}: {} -> {}", q.vertices()[*s], q.vertices()[*tt]);
    }
    t
}

fn localization(c: &Arc<Coalgebra>, keep: &[String]) -> CmdResult<Localization> {
    let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
    let p = lift_idempotent(c, &keep)?;
    Ok(localize_coalgebra(&p)?)
}

fn execute(cmd: Command, common: &Common) -> CmdResult<Report> {
    match cmd {
        Command::Check { input: path } => check(&path, common),
        Command::PathCoalgebra { quiver, max_len } => {
            let q = load_quiver(&quiver)?;
            let c = path_coalgebra(common.field_or(Field::Rational)?, &q, max_len)?;
            Ok(Report::doc(doc::coalgebra_to_value(&c), coalgebra_text(&c)))
        }
        Command::Wedge { coalgebra, v, w } => {
            let c = load_coalgebra(&coalgebra, common)?;
            let s = wedge(&c, &parse_subspace(&c, &v)?, &parse_subspace(&c, &w)?);
            Ok(Report::doc(doc::subspace_to_value(&s), subspace_text(&c, &s)))
        }
        Command::Coradical { coalgebra, filtration } => {
            let c = load_coalgebra(&coalgebra, common)?;
            if filtration {
                let f = coradical_filtration(&c)?;
                let mut text = String::new();
                for (i, s) in f.iter().enumerate() {
                    let _ = write!(text, "C_{i}: {}", subspace_text(&c, s));
                }
                let json = json!({
                    "version": VERSION,
                    "filtration": f.iter().map(doc::subspace_to_value).collect::<Vec<_>>(),
                });
                Ok(Report::doc(json, text))
            } else {
                let s = coradical(&c)?;
                Ok(Report::doc(doc::subspace_to_value(&s), subspace_text(&c, &s)))
            }
        }
        Command::Cf { comodule } => {
            let m = load_comodule(&comodule, common)?;
            let s = m.cf();
            Ok(Report::doc(doc::subspace_to_value(&s), subspace_text(m.coalgebra(), &s)))
        }
        Command::Cfdim { coalgebra, d, no_oracle } => cfdim(&coalgebra, &d, no_oracle, common),
        Command::ExtQuiver { coalgebra } => {
            let c = load_coalgebra(&coalgebra, common)?;
            let q = ext_quiver(&c)?.quiver();
            Ok(Report::doc(doc::quiver_to_value(&q), quiver_text(&q)))
        }
        Command::WildWitness { coalgebra, expect } => wild_witness(&coalgebra, expect, common),
        Command::Localize { coalgebra, keep, comodule } => {
            let c = load_coalgebra(&coalgebra, common)?;
            let loc = localization(&c, &keep)?;
            match comodule {
                None => {
                    let l = loc.coalgebra();
                    Ok(Report::doc(doc::coalgebra_to_value(l), coalgebra_text(l)))
                }
                Some(path) => {
                    let m = load_comodule(&path, common)?;
                    if **m.coalgebra() != *c {
                        return Err(input("the comodule is not over the given coalgebra"));
                    }
                    let (t, _) = localize_comodule(&loc, &m)?;
                    Ok(Report::doc(doc::comodule_to_value(&t), comodule_text(&t)))
                }
            }
        }
        Command::Section { coalgebra, keep, comodule } => {
            let c = load_coalgebra(&coalgebra, common)?;
            let loc = localization(&c, &keep)?;
            let n = load_comodule(&comodule, common)?;
            if n.coalgebra() != loc.coalgebra() {
                return Err(input("the comodule is not over the localized coalgebra eCe"));
            }
            let n = Comodule::from_matrices(loc.coalgebra().clone(), n.phi().to_vec())?;
            let (s, _) = section_s(&loc, &n)?;
            Ok(Report::doc(doc::comodule_to_value(&s), comodule_text(&s)))
        }
        Command::Embed { functor, input: path, trunc, bound, lambdas } => embed(functor, &path, trunc, bound, &lambdas, common),
        Command::Enumerate { coalgebra, d } => {
            let c = load_coalgebra(&coalgebra, common)?;
            let d = parse_dimvec(&d)?;
            let ms = enumerate_comodules(&c, &d, common.budget()?)?;
            let mut text = format!("{} isomorphism classes with dimension vector {d}\n", ms.len());
            for (i, m) in ms.iter().enumerate() {
                let _ = write!(text, "[{i}] {}", comodule_text(m));
            }
            let json = json!({
                "version": VERSION,
                "dimvec": doc::dimvec_to_value(&d),
                "count": ms.len(),
                "comodules": ms.iter().map(doc::comodule_to_value).collect::<Vec<_>>(),
            });
            Ok(Report::doc(json, text))
        }
        Command::VerifyEmbedding { functor, dim, vars, quiver, trunc, bound, lambdas } => {
            verify_embedding(functor, dim, vars, &quiver, trunc, bound, &lambdas, common)
        }
        Command::Acceptance { only } => run_acceptance(&only, common),
    }
}

fn check_json(ok: bool, what: &str, violations: &[String]) -> Value {
    json!({"version": VERSION, "kind": what, "ok": ok, "violations": violations})
}

fn check(path: &str, common: &Common) -> CmdResult<Report> {
    let (v, base) = doc::read_json(path)?;
    Node::root(&v).version()?;
    let (what, violations) = match doc::kind_of(&v) {
        Some(doc::Kind::Coalgebra) => {
            let c = doc::coalgebra_from(Node::root(&v))?;
            common.agree(c.field())?;
            ("coalgebra", c.check().violations)
        }
        Some(doc::Kind::Comodule) => {
            let m = doc::comodule_from(Node::root(&v), base.as_deref())?;
            common.agree(m.field())?;
            let mut all: Vec<String> = m.coalgebra().check().violations.iter().map(|s| format!("coalgebra: {s}")).collect();
            all.extend(m.check().violations);
            ("comodule", all)
        }
        _ => return Err(input(format!("{path}: check expects a coalgebra or comodule document"))),
    };
    let ok = violations.is_empty();
    let mut text = format!("{what}: {}\n", if ok { "valid" } else { "invalid" });
    for v in &violations {
        let _ = writeln!(text, "  {v}");
    }
    Ok(Report { json: check_json(ok, what, &violations), text, ok })
}

fn cfdim(path: &str, d: &str, no_oracle: bool, common: &Common) -> CmdResult<Report> {
    let c = load_coalgebra(path, common)?;
    let d = parse_dimvec(d)?;
    let (recursion, oracle, ok) = if no_oracle || c.field() == Field::Rational {
        let why = if no_oracle { "not run" } else { "not run (oracles need a finite field)" };
        (cf_dimvec(&c, &d)?, why.to_string(), true)
    } else {
        let r = cf_dimvec_report(&c, &d, common.budget()?)?;
        let (word, ok) = match r.comparison {
            CfComparison::Equal => ("equal".to_string(), true),
            CfComparison::StrictGap(g) => (format!("strict gap of dimension {g}"), false),
            CfComparison::Violation => ("violation: oracle not contained".to_string(), false),
        };
        (r.recursion, word, ok)
    };
    let text = format!("cf({d}): {}oracle: {oracle}\n", subspace_text(&c, &recursion));
    let json = json!({
        "version": VERSION,
        "dimvec": doc::dimvec_to_value(&d),
        "recursion": doc::subspace_to_value(&recursion),
        "oracle": oracle,
    });
    Ok(Report { json, text, ok })
}

fn wild_witness(path: &str, expect: Option<Expect>, common: &Common) -> CmdResult<Report> {
    let c = load_coalgebra(path, common)?;
    let w = wildness_witness(&c)?;
    let (json, text, sound) = match &w {
        None => (
            json!({"version": VERSION, "found": false}),
            "no witness: every Ext multiplicity is at most 2\n".to_string(),
            true,
        ),
        Some(w) => {
            let (kind, at) = match &w.kind {
                WitnessKind::Kronecker3 { source, target } => ("kronecker-3", vec![source.clone(), target.clone()]),
                WitnessKind::ThreeLoops { vertex } => ("three-loops", vec![vertex.clone()]),
            };
            let mut text = format!("witness {kind} at {}\n", at.join(" -> "));
            for (l, v) in w.model.labels().iter().zip(&w.basis) {
                let _ = writeln!(text, "  {l} = {}", c.format_vector(v));
            }
            let _ = writeln!(text, "  check: {}", w.check);
            let _ = writeln!(text, "  matches model: {}", w.matches_model);
            let json = json!({
                "version": VERSION,
                "found": true,
                "kind": kind,
                "vertices": at,
                "basis": w.basis.iter().map(|v| Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())).collect::<Vec<_>>(),
                "model": doc::coalgebra_to_value(&w.model),
                "check": {"ok": w.check.is_ok(), "violations": w.check.violations},
                "matches_model": w.matches_model,
            });
            (json, text, w.check.is_ok() && w.matches_model)
        }
    };
    let expected = match expect {
        None => true,
        Some(Expect::Some) => w.is_some(),
        Some(Expect::None) => w.is_none(),
    };
    Ok(Report { json, text, ok: sound && expected })
}

fn embed(kind: EmbedKind, path: &str, trunc: Option<usize>, bound: usize, lambdas: &[String], common: &Common) -> CmdResult<Report> {
    let (v, _) = doc::read_json(path)?;
    let node = Node::root(&v);
    match kind {
        EmbedKind::F | EmbedKind::G | EmbedKind::Shift => {
            let m = doc::module_from(node)?;
            common.agree(m.field())?;
            match kind {
                EmbedKind::F => {
                    let r = functor_f(&NilpotentFreeModule::new(m)?);
                    Ok(Report::doc(doc::rep_to_value(&r), format!("representation with dims {:?}\n", r.dims())))
                }
                EmbedKind::G => {
                    let g = functor_g(&NilpotentFreeModule::new(m)?)?;
                    Ok(Report::doc(doc::comodule_to_value(&g), comodule_text(&g)))
                }
                _ => {
                    let trunc = trunc.unwrap_or(m.variables());
                    let ls = parse_lambdas(m.field(), lambdas, &default_lambdas(trunc))?;
                    let out = shift_embedding(&m, trunc, &ls)?;
                    Ok(Report::doc(doc::module_to_value(&out), module_text(&out)))
                }
            }
        }
        EmbedKind::Bounded => {
            let r = doc::rep_from(node)?;
            common.agree(r.field())?;
            let ls = parse_lambdas(r.field(), lambdas, &[1, 2])?;
            let out = bounded_quiver_embedding(&r, bound, &ls)?;
            Ok(Report::doc(doc::module_to_value(&out), module_text(&out)))
        }
    }
}

fn module_text(m: &coalglab::embeddings::FreeModule) -> String {
    format!("module of dimension {} with {} generators over {}\n", m.dim(), m.variables(), m.field())
}

#[allow(clippy::too_many_arguments)]
fn verify_embedding(
    kind: HarnessFunctor,
    dim: usize,
    vars: usize,
    quiver: &str,
    trunc: Option<usize>,
    bound: usize,
    lambdas: &[String],
    common: &Common,
) -> CmdResult<Report> {
    let field = common.field_or(Field::Prime(5))?;
    if field == Field::Rational {
        return Err(input("verify-embedding enumerates a finite corpus; pass --field GF:p"));
    }
    let budget = common.budget()?;
    let (functor, corpus) = if kind == HarnessFunctor::Bounded {
        let q = load_quiver(quiver)?;
        let ls = parse_lambdas(field, lambdas, &[1, 2])?;
        let reps = quiver_reps_up_to(field, &q, dim, budget)?;
        (Functor::bounded(q, bound, ls)?, reps.iter().map(|r| r.action_module()).collect::<Vec<_>>())
    } else {
        let mut ms = Vec::new();
        for d in 1..=dim {
            ms.extend(nilpotent_modules(field, d, vars, budget)?);
        }
        let functor = match kind {
            HarnessFunctor::F => Functor::f(),
            HarnessFunctor::G => Functor::g(),
            HarnessFunctor::Identity => Functor::identity(),
            HarnessFunctor::Zero => Functor::zero(),
            _ => {
                let trunc = trunc.unwrap_or(vars);
                Functor::shift(trunc, parse_lambdas(field, lambdas, &default_lambdas(trunc))?)?
            }
        };
        (functor, ms.iter().map(|m| m.module().action_module()).collect())
    };
    let r = verify_representation_embedding(&functor, &corpus)?;
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({"kind": c.kind, "subject": c.subject, "passed": c.passed, "detail": c.detail}))
        .collect();
    let json = json!({
        "version": VERSION,
        "functor": r.functor,
        "field": field.to_string(),
        "corpus": corpus.len(),
        "passed": r.passed(),
        "checks": checks,
    });
    let text = format!("{} objects over {field}\n{r}", corpus.len());
    Ok(Report { json, text, ok: r.passed() })
}

fn criterion_json(r: &CriterionResult) -> Value {
    json!({"id": r.id, "title": r.title, "passed": r.passed, "summary": r.summary, "details": r.details})
}

fn run_acceptance(only: &[u8], common: &Common) -> CmdResult<Report> {
    if let Some(bad) = only.iter().find(|&&i| i == 0 || i > acceptance::CRITERIA) {
        return Err(input(format!("no criterion {bad}")));
    }
    let cfg = AcceptanceConfig { budget: common.budget()? };
    let wanted = |i: u8| only.is_empty() || only.contains(&i);
    let mut results: Vec<CriterionResult> = (1..acceptance::CRITERIA)
        .filter(|&i| wanted(i))
        .map(|i| acceptance::run_criterion(i, &cfg))
        .collect();
    if wanted(acceptance::CRITERIA) {
        // In-process determinism: the suite is rerun and compared.
        let first: String = acceptance::report(&cfg);
        let second: String = acceptance::report(&cfg);
        let same = first == second;
        results.push(CriterionResult {
            id: acceptance::CRITERIA,
            title: acceptance::title(acceptance::CRITERIA),
            passed: same,
            summary: if same { "two runs gave identical reports".into() } else { "reports differ between runs".into() },
            details: vec![format!("report length {} bytes", first.len())],
        });
    }
    let ok = results.iter().all(|r| r.passed);
    let text: String = results.iter().map(ToString::to_string).collect();
    let json = json!({
        "version": VERSION,
        "seed": common.seed,
        "budget": cfg.budget.to_string(),
        "passed": ok,
        "criteria": results.iter().map(criterion_json).collect::<Vec<_>>(),
    });
    Ok(Report { json, text, ok })
}
