//! The `bmwcell` command line: argument handling, text and JSON reports, and
//! the on-disk cache of cell-module structure constants.

use crate::algebra::{Algebra, Gen};
use crate::cellular::CellError;
use crate::combin::{layer_of, Partition, Path};
use crate::exactring::linalg::Matrix;
use crate::exactring::{AlgebraKind, CoeffFraction, RingError, Specialization};
use crate::specsim::{self, Outcome, SpecError, Verdict, Witness};
use crate::towers::{Tower, TowerError};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path as FsPath, PathBuf};
use std::time::Instant;

pub const CACHE_VERSION: u32 = 1;
const CACHE_FORMAT: &str = "bmwcell-structure-constants";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Bmw,
    Brauer,
}

impl From<AlgebraArg> for AlgebraKind {
    fn from(a: AlgebraArg) -> AlgebraKind {
        match a {
            AlgebraArg::Bmw => AlgebraKind::Bmw,
            AlgebraArg::Brauer => AlgebraKind::Brauer,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "bmwcell", about = "Cell modules, path bases and Gram forms of Brauer and B–M–W algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "bmw")]
    pub algebra: AlgebraArg,
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    /// Partition as comma separated parts; `0` or `()` for the empty partition.
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    /// Specialization such as `z=4`, `r=-q^-3` or `q=zeta(5),r=2`.
    #[arg(long, global = true)]
    pub spec: Option<String>,
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Dimensions of the algebra and of its cell modules.
    Dim,
    /// The path basis of a cell module.
    Basis,
    /// Gram matrix of a cell module and its determinant.
    Gram,
    /// Transition matrix from the path basis to the cell basis.
    Transition,
    /// Jucys–Murphy operators in the path basis.
    Jm,
    /// The restriction filtration of a cell module.
    Filtration,
    /// Content-vector criterion for semisimplicity.
    Certify {
        /// Largest root-of-unity order and |k| for r = ±q^k in the B–M–W note.
        #[arg(long, default_value_t = 24)]
        max_order: u32,
    },
    /// Semisimplicity from the ranks of the specialised Gram matrices.
    GramCertify,
    /// Necessary condition for Hom(S^lambda, S^mu) to be nonzero.
    Hom {
        #[arg(long)]
        mu: String,
    },
    /// Root structure of the Brauer Gram determinants against p_k(z).
    Conjecture,
    /// Builds or checks the structure-constant cache.
    Cache,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Pole(String),
    Io(String),
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        if e.is_pole() {
            CliError::Pole(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::Pole(_) => CliError::Pole(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CellError> for CliError {
    fn from(e: CellError) -> Self {
        match e {
            CellError::Ring(r) => r.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<TowerError> for CliError {
    fn from(e: TowerError) -> Self {
        match e {
            TowerError::Cell(c) => c.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

struct Ctx {
    kind: AlgebraKind,
    n: usize,
    json: bool,
    cache_dir: Option<PathBuf>,
    warnings: Vec<String>,
}

fn frac_str(x: &CoeffFraction) -> Value {
    Value::String(x.to_string())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(frac_str).collect())).collect())
}

fn path_json(t: &Path) -> Value {
    Value::Array(t.shapes().iter().map(|p| Value::String(p.to_string())).collect())
}

fn kind_name(k: AlgebraKind) -> &'static str {
    match k {
        AlgebraKind::Bmw => "bmw",
        AlgebraKind::Brauer => "brauer",
    }
}

fn parse_partition(s: Option<&str>, n: usize) -> Result<Partition, CliError> {
    let s = s.ok_or_else(|| CliError::Input("--lambda is required".into()))?;
    let p: Partition = s.parse().map_err(|e| CliError::Input(format!("malformed partition {:?}: {}", s, e)))?;
    layer_of(&p, n).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(p)
}

fn parse_spec(kind: AlgebraKind, s: Option<&str>) -> Result<Specialization, CliError> {
    match s {
        None => Ok(Specialization::generic(kind)),
        Some(s) => Ok(Specialization::parse(kind, s)?),
    }
}

/// Runs the command line and captures its output.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return RunOutput { code, stdout, stderr };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> RunOutput {
    let mut ctx = Ctx {
        kind: cli.algebra.into(),
        n: cli.n,
        json: cli.json,
        cache_dir: cli.cache_dir.clone(),
        warnings: Vec::new(),
    };
    let start = Instant::now();
    let result = if !(1..=8).contains(&cli.n) {
        Err(CliError::Input(format!("n must lie in 1..=8, got {}", cli.n)))
    } else {
        dispatch(cli, &mut ctx)
    };
    let mut stderr = String::new();
    for w in &ctx.warnings {
        let _ = writeln!(stderr, "warning: {}", w);
    }
    match result {
        Ok((payload, text)) => {
            let stdout = if ctx.json {
                let report = json!({
                    "command": command_name(&cli.command),
                    "parameters": {
                        "algebra": kind_name(ctx.kind),
                        "n": cli.n,
                        "lambda": cli.lambda,
                        "spec": cli.spec,
                    },
                    "result": payload,
                    "timing_ms": start.elapsed().as_millis() as u64,
                });
                serde_json::to_string_pretty(&report).expect("serialisable") + "\n"
            } else {
                text
            };
            RunOutput { code: 0, stdout, stderr }
        }
        Err(e) => {
            let (code, msg) = match e {
                CliError::Input(m) => (2, m),
                CliError::Pole(m) => (3, m),
                CliError::Io(m) => (2, m),
            };
            let _ = writeln!(stderr, "error: {}", msg);
            RunOutput { code, stdout: String::new(), stderr }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dim => "dim",
        Command::Basis => "basis",
        Command::Gram => "gram",
        Command::Transition => "transition",
        Command::Jm => "jm",
        Command::Filtration => "filtration",
        Command::Certify { .. } => "certify",
        Command::GramCertify => "gram-certify",
        Command::Hom { .. } => "hom",
        Command::Conjecture => "conjecture",
        Command::Cache => "cache",
    }
}

type Answer = Result<(Value, String), CliError>;

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> Answer {
    let (kind, n) = (ctx.kind, ctx.n);
    match &cli.command {
        Command::Dim => cmd_dim(kind, n),
        Command::Basis | Command::Transition | Command::Jm | Command::Filtration | Command::Gram => {
            let lambda = parse_partition(cli.lambda.as_deref(), n)?;
            let tower = Tower::new(kind, n);
            load_cache(&tower, ctx)?;
            match cli.command {
                Command::Basis => cmd_basis(&tower, &lambda, n),
                Command::Transition => cmd_transition(&tower, &lambda, n),
                Command::Jm => cmd_jm(&tower, &lambda, n),
                Command::Filtration => cmd_filtration(&tower, &lambda, n),
                _ => {
                    let spec = parse_spec(kind, cli.spec.as_deref())?;
                    cmd_gram(tower.algebra(n)?, &lambda, &spec)
                }
            }
        }
        Command::Certify { max_order } => {
            let spec = parse_spec(kind, cli.spec.as_deref())?;
            cmd_certify(kind, n, &spec, *max_order)
        }
        Command::GramCertify => {
            let spec = parse_spec(kind, cli.spec.as_deref())?;
            let tower = Tower::new(kind, n);
            load_cache(&tower, ctx)?;
            let v = specsim::gram_rank_certify(tower.algebra(n)?, &spec)?;
            Ok(verdict_out(&v, &spec))
        }
        Command::Hom { mu } => {
            let lambda = parse_partition(cli.lambda.as_deref(), n)?;
            let mu = parse_partition(Some(mu), n)?;
            let spec = parse_spec(kind, cli.spec.as_deref())?;
            let holds = specsim::hom_obstruction(kind, &lambda, &mu, n, &spec)?;
            let text = if holds {
                format!("identity holds for {} -> {}: Hom may be nonzero\n", lambda, mu)
            } else {
                format!("identity fails for {} -> {}: Hom(S^{}, S^{}) = 0\n", lambda, mu, lambda, mu)
            };
            Ok((
                json!({"lambda": lambda.to_string(), "mu": mu.to_string(), "identity_holds": holds, "hom_vanishes": !holds}),
                text,
            ))
        }
        Command::Conjecture => cmd_conjecture(n),
        Command::Cache => cmd_cache(ctx),
    }
}

fn cmd_dim(kind: AlgebraKind, n: usize) -> Answer {
    let (total, rows) = Tower::dimension_check(n)?;
    let mut text = format!("dim B_{}({}) = {}\n", n, if kind == AlgebraKind::Bmw { "q,r" } else { "z" }, total);
    let mut shapes = Vec::new();
    for (lambda, paths, cells) in &rows {
        let _ = writeln!(text, "  S^{:<10} paths {:>5}   cells {:>5}", lambda.to_string(), paths, cells);
        shapes.push(json!({"lambda": lambda.to_string(), "paths": paths, "cell_basis": cells}));
    }
    Ok((json!({"dimension": total, "cell_modules": shapes}), text))
}

fn cmd_basis(tower: &Tower, lambda: &Partition, n: usize) -> Answer {
    let pb = tower.path_basis(lambda, n)?;
    let mut text = String::new();
    let mut items = Vec::new();
    for (j, t) in pb.paths.iter().enumerate() {
        let col: Vec<CoeffFraction> = (0..pb.transition.rows()).map(|i| pb.transition[(i, j)].clone()).collect();
        let words: Vec<Value> = pb.words[j]
            .iter()
            .map(|(c, w)| json!({"coeff": c.to_string(), "word": w.iter().map(|g| g.to_string()).collect::<Vec<_>>()}))
            .collect();
        let _ = writeln!(text, "m_{} = [{}]", t, col.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        items.push(
            json!({"path": path_json(t), "coordinates": col.iter().map(frac_str).collect::<Vec<_>>(), "b_t": words}),
        );
    }
    Ok((json!({"lambda": lambda.to_string(), "dimension": pb.paths.len(), "basis": items}), text))
}

fn cmd_transition(tower: &Tower, lambda: &Partition, n: usize) -> Answer {
    let pb = tower.path_basis(lambda, n)?;
    let mut text = String::from("columns:\n");
    for (j, t) in pb.paths.iter().enumerate() {
        let _ = writeln!(text, "  {}: {}", j + 1, t);
    }
    let _ = write!(text, "{}", pb.transition);
    Ok((
        json!({"lambda": lambda.to_string(), "paths": pb.paths.iter().map(path_json).collect::<Vec<_>>(), "matrix": matrix_json(&pb.transition)}),
        text,
    ))
}

fn cmd_gram(alg: &Algebra, lambda: &Partition, spec: &Specialization) -> Answer {
    let g = alg.cell_module(lambda)?.gram();
    let det = g.det();
    let mut text = format!("{}det = {}\n", g, det);
    let mut payload = json!({"lambda": lambda.to_string(), "matrix": matrix_json(&g), "determinant": det.to_string()});
    if !spec.is_generic() {
        let gs = g.try_map(|x| spec.apply(x))?;
        let norm = |x: CoeffFraction| spec.apply(&x).expect("specialised values have no poles");
        let rank = gs.rank_with(&norm);
        let ds = spec.apply(&det)?;
        let _ = write!(text, "at {}:\n{}det = {}\nrank = {} of {}\n", spec, gs, ds, rank, g.rows());
        payload["specialized"] =
            json!({"spec": spec.to_string(), "matrix": matrix_json(&gs), "determinant": ds.to_string(), "rank": rank});
    }
    Ok((payload, text))
}

fn cmd_jm(tower: &Tower, lambda: &Partition, n: usize) -> Answer {
    let r = tower.jm_triangularity(lambda, n)?;
    let (alpha, scalar) = tower.central_scalar(lambda, n)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (t, d) in r.paths.iter().zip(&r.diagonals) {
        let _ = writeln!(text, "{}: ({})", t, d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        rows.push(json!({"path": path_json(t), "diagonal": d.iter().map(frac_str).collect::<Vec<_>>()}));
    }
    let _ = writeln!(text, "triangular: {}", if r.ok() { "yes" } else { "NO" });
    for v in &r.violations {
        let _ = writeln!(text, "  {}", v);
    }
    let _ = writeln!(text, "central element acts as {} ({})", alpha, if scalar { "scalar" } else { "NOT scalar" });
    Ok((
        json!({"lambda": lambda.to_string(), "paths": rows, "triangular": r.ok(), "violations": r.violations,
               "central": {"scalar": alpha.to_string(), "is_scalar": scalar}}),
        text,
    ))
}

fn cmd_filtration(tower: &Tower, lambda: &Partition, n: usize) -> Answer {
    let r = tower.filtration_check(lambda, n)?;
    let mut text = String::new();
    for (mu, d) in &r.layers {
        let _ = writeln!(text, "N^{}: dim {}", mu, d);
    }
    let _ = writeln!(text, "filtration: {}", if r.ok() { "pass" } else { "FAIL" });
    for f in &r.failures {
        let _ = writeln!(text, "  {}", f);
    }
    let layers: Vec<Value> = r.layers.iter().map(|(m, d)| json!({"mu": m.to_string(), "dimension": d})).collect();
    Ok((json!({"lambda": lambda.to_string(), "layers": layers, "pass": r.ok(), "failures": r.failures}), text))
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Paths { s, t, vector } => json!({
            "s": path_json(s), "t": path_json(t),
            "content_vector": vector.iter().map(frac_str).collect::<Vec<_>>(),
        }),
        Witness::Gram { lambda, rank, dim } => json!({"lambda": lambda.to_string(), "rank": rank, "dim": dim}),
    }
}

fn verdict_out(v: &Verdict, spec: &Specialization) -> (Value, String) {
    let mut text = format!("{} at {}\n", v.outcome, spec);
    for w in &v.witnesses {
        match w {
            Witness::Paths { s, t, vector } => {
                let _ = writeln!(
                    text,
                    "  {} and {} share ({})",
                    s,
                    t,
                    vector.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                );
            }
            Witness::Gram { lambda, rank, dim } => {
                let _ = writeln!(text, "  S^{}: rank {} of {}", lambda, rank, dim);
            }
        }
    }
    let mut payload = json!({
        "outcome": v.outcome.to_string(),
        "witnesses": v.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
    });
    if !v.radicals.is_empty() {
        payload["radicals"] = Value::Array(
            v.radicals.iter().map(|(l, d, r)| json!({"lambda": l.to_string(), "dim": d, "dim_rad": r})).collect(),
        );
        for (l, d, r) in &v.radicals {
            let _ = writeln!(text, "  dim RAD(S^{}) = {} of {}", l, r, d);
        }
    }
    (payload, text)
}

fn cmd_certify(kind: AlgebraKind, n: usize, spec: &Specialization, max_order: u32) -> Answer {
    let v = specsim::certify(kind, n, spec)?;
    debug_assert_ne!(v.outcome, Outcome::CertifiedNotSemisimple);
    let (mut payload, mut text) = verdict_out(&v, spec);
    if kind == AlgebraKind::Bmw {
        let note = specsim::necessary_condition_note(spec, max_order)?;
        let mut parts = Vec::new();
        if let Some(k) = note.root_of_unity {
            parts.push(format!("q is a root of unity of order {}", k));
        }
        if let Some((s, k)) = note.r_power {
            parts.push(format!("r = {}q^{}", if s < 0 { "-" } else { "" }, k));
        }
        let _ = writeln!(
            text,
            "note: {}",
            if parts.is_empty() { "neither q a root of unity nor r = ±q^k".to_string() } else { parts.join("; ") }
        );
        payload["note"] = json!({
            "root_of_unity_order": note.root_of_unity,
            "r_power": note.r_power.map(|(s, k)| json!({"sign": s, "k": k})),
        });
    }
    Ok((payload, text))
}

fn cmd_conjecture(n: usize) -> Answer {
    let e = specsim::conjecture_evidence(n)?;
    let roots: Vec<Value> =
        e.split.roots.iter().map(|(x, m)| json!({"root": x.to_string(), "multiplicity": m})).collect();
    let predicted: Vec<String> = e.predicted.iter().map(|x| x.to_string()).collect();
    let mut text = format!("det Gram(S^{}) at n = {}: {}\n", e.lambda, n, e.determinant);
    let _ = writeln!(
        text,
        "rational roots: {}",
        e.split.roots.iter().map(|(x, m)| format!("{} (x{})", x, m)).collect::<Vec<_>>().join(", ")
    );
    if !e.split.remainder.is_constant() {
        let _ = writeln!(text, "nonlinear remainder: {}", e.split.remainder);
    }
    let _ = writeln!(text, "predicted by p_{}: {}", e.k, predicted.join(", "));
    let _ = writeln!(text, "{}", if e.agree { "agreement" } else { "DISCREPANCY" });
    if let Some(s) = e.agree_shifted {
        let _ = writeln!(text, "roots of z p_{}: {}", e.k - 1, if s { "agreement" } else { "no agreement" });
    }
    Ok((
        json!({"lambda": e.lambda.to_string(), "k": e.k, "determinant": e.determinant.to_string(),
               "roots": roots, "remainder": e.split.remainder.to_string(), "predicted": predicted, "agree": e.agree,
               "agree_shifted": e.agree_shifted}),
        text,
    ))
}

// ---- cache -------------------------------------------------------------

fn cache_file(dir: &FsPath, kind: AlgebraKind, n: usize) -> PathBuf {
    dir.join(format!("{}-n{}.json", kind_name(kind), n))
}

fn parse_gen(s: &str) -> Option<Gen> {
    let (head, rest) = s.split_at(1);
    match head {
        "E" => rest.parse().ok().map(Gen::E),
        "T" => match rest.strip_suffix("^-1") {
            Some(i) => i.parse().ok().map(Gen::TInv),
            None => rest.parse().ok().map(Gen::T),
        },
        _ => None,
    }
}

/// Serialises the generator matrices of every cell module of `alg`.
pub fn cache_contents(alg: &Algebra) -> Result<String, CellError> {
    let mut modules = serde_json::Map::new();
    for lambda in Partition::cell_shapes(alg.n()) {
        let cm = alg.cell_module(&lambda)?;
        let mut gens = serde_json::Map::new();
        for (g, m) in cm.actions() {
            gens.insert(g.to_string(), matrix_json(m));
        }
        modules.insert(lambda.to_string(), Value::Object(gens));
    }
    let vars = match alg.kind() {
        AlgebraKind::Bmw => vec!["q", "r"],
        AlgebraKind::Brauer => vec!["z"],
    };
    let doc = json!({
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "algebra": kind_name(alg.kind()),
        "n": alg.n(),
        "variables": vars,
        "modules": Value::Object(modules),
    });
    Ok(serde_json::to_string_pretty(&doc).expect("serialisable") + "\n")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Loaded,
    Missing,
    Stale(u64),
    Corrupt(String),
}

type Modules = Vec<(Partition, BTreeMap<Gen, Matrix>)>;

fn decode(text: &str, kind: AlgebraKind, n: usize) -> Result<Modules, CacheStatus> {
    let bad = |m: &str| CacheStatus::Corrupt(m.to_string());
    let doc: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    if doc["format"] != CACHE_FORMAT {
        return Err(bad("unknown format"));
    }
    let version = doc["version"].as_u64().ok_or_else(|| bad("missing version"))?;
    if version != CACHE_VERSION as u64 {
        return Err(CacheStatus::Stale(version));
    }
    if doc["algebra"] != kind_name(kind) || doc["n"].as_u64() != Some(n as u64) {
        return Err(bad("header does not match the algebra"));
    }
    let modules = doc["modules"].as_object().ok_or_else(|| bad("missing modules"))?;
    let mut out = Vec::new();
    for (key, gens) in modules {
        let lambda: Partition = key.parse().map_err(|_| bad("bad partition"))?;
        let mut acts = BTreeMap::new();
        for (g, m) in gens.as_object().ok_or_else(|| bad("bad module"))? {
            let g = parse_gen(g).ok_or_else(|| bad("bad generator"))?;
            let rows = m
                .as_array()
                .ok_or_else(|| bad("bad matrix"))?
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| bad("bad row"))?
                        .iter()
                        .map(|x| {
                            x.as_str().and_then(|s| s.parse::<CoeffFraction>().ok()).ok_or_else(|| bad("bad entry"))
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            if rows.iter().any(|r| r.len() != rows.len()) {
                return Err(bad("matrix is not square"));
            }
            acts.insert(g, Matrix::from_rows(rows));
        }
        out.push((lambda, acts));
    }
    if out.len() != Partition::cell_shapes(n).len() {
        return Err(bad("wrong number of cell modules"));
    }
    Ok(out)
}

/// Reads the cache for `alg` into its cell-module table.
pub fn read_cache(dir: &FsPath, alg: &Algebra) -> CacheStatus {
    let path = cache_file(dir, alg.kind(), alg.n());
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(_) => return CacheStatus::Missing,
    };
    match decode(&text, alg.kind(), alg.n()) {
        Ok(modules) => {
            for (lambda, acts) in modules {
                if let Err(e) = alg.restore_cell_module(&lambda, acts) {
                    return CacheStatus::Corrupt(e.to_string());
                }
            }
            CacheStatus::Loaded
        }
        Err(s) => s,
    }
}

/// Writes the cache for `alg` atomically (temporary file, then rename).
pub fn write_cache(dir: &FsPath, alg: &Algebra) -> Result<PathBuf, String> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let text = cache_contents(alg).map_err(|e| e.to_string())?;
    let path = cache_file(dir, alg.kind(), alg.n());
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| e.to_string())?;
    tmp.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    tmp.persist(&path).map_err(|e| e.to_string())?;
    Ok(path)
}

fn sync_level(dir: &FsPath, alg: &Algebra, warnings: &mut Vec<String>) -> Result<CacheStatus, CliError> {
    let status = read_cache(dir, alg);
    match &status {
        CacheStatus::Loaded => return Ok(status),
        CacheStatus::Missing => {}
        CacheStatus::Stale(v) => warnings.push(format!(
            "ignoring cache for {} n={} with version {} (expected {}); recomputing",
            kind_name(alg.kind()),
            alg.n(),
            v,
            CACHE_VERSION
        )),
        CacheStatus::Corrupt(m) => {
            warnings.push(format!("corrupt cache for {} n={} ({}); recomputing", kind_name(alg.kind()), alg.n(), m))
        }
    }
    write_cache(dir, alg).map_err(CliError::Io)?;
    Ok(status)
}

fn load_cache(tower: &Tower, ctx: &mut Ctx) -> Result<(), CliError> {
    let Some(dir) = ctx.cache_dir.clone() else { return Ok(()) };
    for k in 1..=tower.height() {
        sync_level(&dir, tower.algebra(k)?, &mut ctx.warnings)?;
    }
    Ok(())
}

fn cmd_cache(ctx: &mut Ctx) -> Answer {
    let dir = ctx.cache_dir.clone().ok_or_else(|| CliError::Input("--cache-dir is required".into()))?;
    let tower = Tower::new(ctx.kind, ctx.n);
    let mut levels = Vec::new();
    let mut text = String::new();
    for k in 1..=ctx.n {
        let alg = tower.algebra(k)?;
        let status = sync_level(&dir, alg, &mut ctx.warnings)?;
        let path = cache_file(&dir, ctx.kind, k);
        let on_disk = std::fs::read_to_string(&path).map_err(|e| CliError::Io(e.to_string()))?;
        let fresh = Algebra::new(ctx.kind, k);
        let roundtrip = match decode(&on_disk, ctx.kind, k) {
            Ok(modules) => {
                for (lambda, acts) in modules {
                    fresh.restore_cell_module(&lambda, acts)?;
                }
                cache_contents(&fresh)? == on_disk
            }
            Err(_) => false,
        };
        let s = match status {
            CacheStatus::Loaded => "hit",
            CacheStatus::Missing => "written",
            CacheStatus::Stale(_) => "rewritten (stale)",
            CacheStatus::Corrupt(_) => "rewritten (corrupt)",
        };
        let _ =
            writeln!(text, "{}: {} (round trip {})", path.display(), s, if roundtrip { "exact" } else { "MISMATCH" });
        levels.push(json!({"n": k, "file": path.display().to_string(), "status": s, "roundtrip_exact": roundtrip}));
    }
    Ok((json!({"levels": levels}), text))
}
