//! Validation, execution and result tables.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tautchi::complexes::{self, GroupSpec};
use tautchi::euler::{self, ChiResult, EulerOptions, NSource};
use tautchi::rational::{choose, to_exact_string};
use tautchi::symgroup::IndexSet;
use tautchi::{BundleSpec, ChernCharacter, DivisorClass, SurfaceModel};

use crate::job::{parse_fiber, BundleEntry, Exact, JobFile, JobKind, SurfaceSpec};
use crate::{CliError, EXIT_JOB_ERROR, EXIT_OK, EXIT_VERIFY_FAILED};

/// Default and largest `k` for `verify_complexes`.
pub const VERIFY_K_MAX: usize = 7;
/// Group-invariant checks are limited to `k <= 6`.
const VERIFY_GROUP_K_MAX: usize = 6;
const VERIFY_DIMS_K_MAX: usize = 10;
const VERIFY_BINOM_K_MAX: usize = 20;

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub force_brute_n: bool,
    pub threads: Option<usize>,
}

/// Resolved inputs shared by all jobs.
#[derive(Debug, Clone)]
pub struct Context {
    pub surface: SurfaceModel,
    pub bundles: HashMap<String, ChernCharacter>,
    pub line: ChernCharacter,
}

/// One row of work. Sweeps expand to one task per `n`.
#[derive(Debug, Clone)]
pub enum Task {
    Compute { id: String, kind: JobKind, parameters: BTreeMap<String, Value> },
    VerifyPair { id: String, k: usize, ell: usize },
    VerifyDimensions { id: String, k_max: usize },
    VerifyBinomial { id: String, k_max: usize },
}

impl Task {
    pub fn id(&self) -> &str {
        match self {
            Task::Compute { id, .. } | Task::VerifyPair { id, .. } | Task::VerifyDimensions { id, .. } | Task::VerifyBinomial { id, .. } => id,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Plan {
    pub context: Context,
    pub tasks: Vec<Task>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "error")]
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRow {
    pub label: String,
    pub coefficient: String,
    pub factors: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRow {
    pub id: String,
    pub kind: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    /// Exact value as `"p/q"` or `"p"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<TermRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    pub fn exit_code(&self) -> u8 {
        if self.rows.iter().any(|r| r.status == Status::Error) {
            EXIT_JOB_ERROR
        } else if self.rows.iter().any(|r| r.status == Status::Fail) {
            EXIT_VERIFY_FAILED
        } else {
            EXIT_OK
        }
    }

    /// JSON array of rows.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.rows).expect("rows serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        Ok(ResultTable { rows: serde_json::from_str(text)? })
    }

    /// Fixed-width text table.
    pub fn render(&self) -> String {
        let header = ["id", "kind", "parameters", "value"];
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect();
                let value = match r.status {
                    Status::Ok => r.value.clone().unwrap_or_default(),
                    Status::Pass => "PASS".to_string(),
                    Status::Fail => {
                        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                        format!("FAIL ({})", failed.join(", "))
                    }
                    Status::Error => format!("ERROR: {}", r.error.as_deref().unwrap_or("")),
                };
                [r.id.clone(), r.kind.clone(), params.join(" "), value]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |row: [&str; 4]| {
            let mut s = String::new();
            for (i, (c, w)) in row.iter().zip(widths).enumerate() {
                if i + 1 == row.len() {
                    s.push_str(c);
                } else {
                    s.push_str(c);
                    s.push_str(&" ".repeat(w - c.chars().count() + 2));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(header);
        for row in &cells {
            out.push_str(&line([&row[0], &row[1], &row[2], &row[3]]));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(compact).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

fn build_surface(spec: &SurfaceSpec) -> Result<SurfaceModel, CliError> {
    let invalid = |message: &str| CliError::Usage(format!("surface: {message}"));
    if let Some(preset) = &spec.preset {
        if spec.gram.is_some() || spec.canonical.is_some() {
            return Err(invalid("give either a preset or explicit data, not both"));
        }
        return match preset.to_ascii_lowercase().as_str() {
            "p2" => Ok(SurfaceModel::projective_plane()),
            "quadric" | "p1xp1" => Ok(SurfaceModel::quadric()),
            "k3" => {
                let degree = spec.degree.unwrap_or(2);
                if degree <= 0 || degree % 2 != 0 {
                    return Err(invalid("the K3 degree must be positive and even"));
                }
                Ok(SurfaceModel::k3(degree))
            }
            other => Err(invalid(&format!("unknown preset {other:?}"))),
        };
    }
    match (&spec.gram, &spec.canonical, spec.c2) {
        (None, None, None) => Ok(SurfaceModel::projective_plane()),
        (Some(gram), Some(canonical), Some(c2)) => {
            let name = spec.name.clone().unwrap_or_else(|| "X".into());
            Ok(SurfaceModel::new(name, gram.clone(), canonical.clone(), c2)?)
        }
        _ => Err(invalid("needs a preset or all of gram, canonical and c2")),
    }
}

fn divisor(values: &[Exact]) -> DivisorClass {
    DivisorClass::new(values.iter().map(|e| e.0.clone()).collect())
}

fn bundle_character(surface: &SurfaceModel, entry: &BundleEntry) -> Result<ChernCharacter, CliError> {
    let fail = |message: String| CliError::Bundle { name: entry.name.clone(), message };
    let c1 = if entry.c1.is_empty() { DivisorClass::zero(surface.picard_rank()) } else { divisor(&entry.c1) };
    if c1.len() != surface.picard_rank() {
        return Err(fail(format!("c1 has {} entries, the Picard rank is {}", c1.len(), surface.picard_rank())));
    }
    let spec = BundleSpec { name: entry.name.clone(), rank: entry.rank, c1, c2: entry.c2.0.clone() };
    spec.chern_character(surface).map_err(|e| fail(e.to_string()))
}

/// Bundles that need no definition: `O`, `K`, `Omega` and `T`.
fn builtin_bundles(s: &SurfaceModel) -> Vec<(&'static str, ChernCharacter)> {
    vec![("O", s.unit()), ("K", s.omega()), ("Omega", s.cotangent()), ("T", s.tangent())]
}

/// Validates a job file and expands it into tasks.
pub fn plan(file: &JobFile) -> Result<Plan, CliError> {
    let surface = build_surface(&file.surface)?;
    let mut bundles: HashMap<String, ChernCharacter> = builtin_bundles(&surface).into_iter().map(|(n, c)| (n.to_string(), c)).collect();
    let mut defined = HashSet::new();
    for entry in &file.bundles {
        if !defined.insert(entry.name.clone()) {
            return Err(CliError::Bundle { name: entry.name.clone(), message: "defined twice".into() });
        }
        if bundles.contains_key(&entry.name) {
            return Err(CliError::Bundle { name: entry.name.clone(), message: "is a builtin name".into() });
        }
        bundles.insert(entry.name.clone(), bundle_character(&surface, entry)?);
    }
    let line = match &file.line_bundle {
        None => surface.unit(),
        Some(c1) => {
            if c1.len() != surface.picard_rank() {
                return Err(CliError::Usage(format!("line_bundle has {} entries, the Picard rank is {}", c1.len(), surface.picard_rank())));
            }
            surface.line_bundle(divisor(c1))?
        }
    };
    let context = Context { surface, bundles, line };

    let mut tasks = Vec::new();
    let mut ids = HashSet::new();
    for (index, job) in file.jobs.iter().enumerate() {
        let id = job.id.clone().unwrap_or_else(|| format!("job{}", index + 1));
        let invalid = |message: String| CliError::Validation { job: id.clone(), message };
        if !ids.insert(id.clone()) {
            return Err(invalid("duplicate job id".into()));
        }
        for name in job.kind.bundle_names() {
            if !context.bundles.contains_key(name) {
                return Err(invalid(format!("undefined bundle {name:?}")));
            }
        }
        let ns: Vec<Option<usize>> = match (job.kind.n(), job.sweep) {
            (None, Some(_)) => return Err(invalid(format!("{} does not depend on n, so it cannot be swept", job.kind.name()))),
            (None, None) => vec![None],
            (Some(Some(_)), Some(_)) => return Err(invalid("give either n or a sweep, not both".into())),
            (Some(None), None) => return Err(invalid("missing n".into())),
            (Some(n), None) => vec![n],
            (Some(None), Some(sweep)) => sweep.values().map(Some).collect(),
        };
        if let JobKind::VerifyComplexes { k_max } = job.kind {
            let k_max = k_max.unwrap_or(VERIFY_K_MAX);
            if k_max == 0 || k_max > VERIFY_K_MAX {
                return Err(invalid(format!("k_max must be between 1 and {VERIFY_K_MAX}")));
            }
            tasks.extend(verify_tasks(&id, k_max));
            continue;
        }
        for n in ns {
            let kind = with_n(&job.kind, n);
            validate(&context, &kind).map_err(invalid)?;
            let row_id = match (job.sweep, n) {
                (Some(_), Some(n)) => format!("{id}[n={n}]"),
                _ => id.clone(),
            };
            tasks.push(Task::Compute { id: row_id, parameters: parameters(&kind), kind });
        }
    }
    Ok(Plan { context, tasks })
}

/// Tasks of one `verify_complexes` run.
pub fn verify_tasks(id: &str, k_max: usize) -> Vec<Task> {
    let mut tasks: Vec<Task> = (1..=k_max)
        .flat_map(|k| (1..=k).map(move |ell| (k, ell)))
        .map(|(k, ell)| Task::VerifyPair { id: format!("{id}[k={k},l={ell}]"), k, ell })
        .collect();
    tasks.push(Task::VerifyDimensions { id: format!("{id}[dims]"), k_max: VERIFY_DIMS_K_MAX.max(k_max) });
    tasks.push(Task::VerifyBinomial { id: format!("{id}[binom]"), k_max: VERIFY_BINOM_K_MAX.max(k_max) });
    tasks
}

fn with_n(kind: &JobKind, value: Option<usize>) -> JobKind {
    let mut kind = kind.clone();
    match &mut kind {
        JobKind::Scala { n, .. }
        | JobKind::EulerThree { n, .. }
        | JobKind::HTop { n, .. }
        | JobKind::H0 { n, .. }
        | JobKind::K0Invariants { n, .. } => *n = value,
        _ => {}
    }
    kind
}

fn validate(ctx: &Context, kind: &JobKind) -> Result<(), String> {
    let n = kind.n().flatten().unwrap_or(0);
    match kind {
        JobKind::Scala { .. } | JobKind::K0Invariants { .. } | JobKind::HTop { .. } if n < 1 => {
            return Err("n must be at least 1".into());
        }
        JobKind::EulerThree { bundles, .. } => {
            if bundles.len() != 3 {
                return Err(format!("euler_three needs exactly 3 bundles, got {}", bundles.len()));
            }
            if n < 3 {
                return Err(format!("euler_three needs n >= 3, got n = {n}"));
            }
        }
        JobKind::H0 { h0, .. } => {
            if h0.is_empty() {
                return Err("h0 needs at least one value".into());
            }
            if n < h0.len() {
                return Err(format!("h0 needs n >= k = {}, got n = {n}", h0.len()));
            }
        }
        JobKind::HTop { k, h2, .. } => {
            if *k == 0 || *k > euler::HARD_K_LIMIT {
                return Err(format!("k must be between 1 and {}", euler::HARD_K_LIMIT));
            }
            for key in h2.keys() {
                match parse_fiber(key) {
                    Some(fiber) if fiber.iter().all(|&t| t < *k) => {}
                    _ => return Err(format!("invalid h2 key {key:?} for k = {k}")),
                }
            }
        }
        JobKind::SymPowerTwo { bundle, k } => {
            if !ctx.bundles[bundle].is_rank_one() {
                return Err(format!("sym_power_two needs a line bundle, {bundle:?} has rank {}", ctx.bundles[bundle].ch0));
            }
            if *k == 0 || *k > complexes::MAX_GROUP_K {
                return Err(format!("k must be between 1 and {}", complexes::MAX_GROUP_K));
            }
        }
        _ => {}
    }
    let names = kind.bundle_names();
    match kind {
        JobKind::EulerBicharTwo { e, f } if e.is_empty() || f.is_empty() => Err("both e and f need at least one bundle".into()),
        JobKind::EulerTwo { .. } | JobKind::K0Invariants { .. } if names.is_empty() => Err("needs at least one bundle".into()),
        JobKind::EulerTwo { .. } | JobKind::K0Invariants { .. } if names.len() > euler::DEFAULT_K_GUARD => {
            Err(format!("{} bundles exceed the limit of {}", names.len(), euler::DEFAULT_K_GUARD))
        }
        _ => Ok(()),
    }
}

fn parameters(kind: &JobKind) -> BTreeMap<String, Value> {
    let mut p = BTreeMap::new();
    let mut put = |k: &str, v: Value| {
        p.insert(k.to_string(), v);
    };
    match kind {
        JobKind::Scala { bundle, n } => {
            put("bundle", json!(bundle));
            put("n", json!(n));
        }
        JobKind::EulerTwo { bundles } => put("bundles", json!(bundles)),
        JobKind::EulerBicharTwo { e, f } => {
            put("e", json!(e));
            put("f", json!(f));
        }
        JobKind::EulerThree { bundles, n } | JobKind::K0Invariants { bundles, n } => {
            put("bundles", json!(bundles));
            put("n", json!(n));
        }
        JobKind::SymPowerTwo { bundle, k } => {
            put("bundle", json!(bundle));
            put("k", json!(k));
        }
        JobKind::HTop { k, h2, q, n } => {
            put("k", json!(k));
            put("h2", json!(h2));
            put("q", json!(q));
            put("n", json!(n));
        }
        JobKind::H0 { h0, n } => {
            put("h0", json!(h0));
            put("n", json!(n));
        }
        JobKind::VerifyComplexes { k_max } => put("k_max", json!(k_max)),
    }
    p
}

/// Runs all tasks, in parallel when requested; rows keep task order.
pub fn run_tasks(plan: &Plan, opts: &RunOptions) -> Result<ResultTable, CliError> {
    let work = || plan.tasks.par_iter().map(|t| run_task(&plan.context, t, opts)).collect::<Vec<_>>();
    let rows = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Threads(e.to_string()))?
            .install(work),
        None => work(),
    };
    Ok(ResultTable { rows })
}

fn row(id: &str, kind: &str, parameters: BTreeMap<String, Value>) -> ResultRow {
    ResultRow { id: id.to_string(), kind: kind.to_string(), parameters, status: Status::Ok, value: None, error: None, terms: Vec::new(), checks: Vec::new() }
}

pub fn run_task(ctx: &Context, task: &Task, opts: &RunOptions) -> ResultRow {
    match task {
        Task::Compute { id, kind, parameters } => {
            let mut r = row(id, kind.name(), parameters.clone());
            match compute(ctx, kind, opts) {
                Ok((value, terms)) => {
                    r.value = Some(value);
                    r.terms = terms;
                }
                Err(e) => {
                    r.status = Status::Error;
                    r.error = Some(e);
                }
            }
            r
        }
        Task::VerifyPair { id, k, ell } => {
            let params = BTreeMap::from([("k".to_string(), json!(k)), ("l".to_string(), json!(ell))]);
            checks_row(row(id, "verify_complexes", params), verify_pair(*k, *ell))
        }
        Task::VerifyDimensions { id, k_max } => {
            let params = BTreeMap::from([("k_max".to_string(), json!(k_max)), ("check".to_string(), json!("dimensions"))]);
            checks_row(row(id, "verify_complexes", params), verify_dimensions(*k_max))
        }
        Task::VerifyBinomial { id, k_max } => {
            let params = BTreeMap::from([("k_max".to_string(), json!(k_max)), ("check".to_string(), json!("binomial"))]);
            checks_row(row(id, "verify_complexes", params), verify_binomial(*k_max))
        }
    }
}

fn checks_row(mut r: ResultRow, checks: Vec<CheckRow>) -> ResultRow {
    r.status = if checks.iter().all(|c| c.passed) { Status::Pass } else { Status::Fail };
    r.checks = checks;
    r
}

fn term_rows(result: &ChiResult) -> Vec<TermRow> {
    result
        .terms()
        .iter()
        .map(|t| TermRow {
            label: t.label.clone(),
            coefficient: to_exact_string(&t.coefficient),
            factors: t.factors.iter().map(to_exact_string).collect(),
            value: to_exact_string(&t.value()),
        })
        .collect()
}

fn compute(ctx: &Context, kind: &JobKind, opts: &RunOptions) -> Result<(String, Vec<TermRow>), String> {
    let s = &ctx.surface;
    let l = &ctx.line;
    let get = |names: &[String]| -> Vec<ChernCharacter> { names.iter().map(|n| ctx.bundles[n].clone()).collect() };
    let eopts = EulerOptions { n_source: if opts.force_brute_n { NSource::BruteForce } else { NSource::ClosedForm }, ..EulerOptions::default() };
    let chi = |r: Result<ChiResult, euler::EulerError>| -> Result<(String, Vec<TermRow>), String> {
        let r = r.map_err(|e| e.to_string())?;
        Ok((to_exact_string(r.value()), term_rows(&r)))
    };
    let need_n = |n: &Option<usize>| n.ok_or_else(|| "missing n".to_string());
    match kind {
        JobKind::Scala { bundle, n } => chi(euler::chi_scala_result(s, need_n(n)?, &ctx.bundles[bundle], l)),
        JobKind::EulerTwo { bundles } => chi(euler::euler_two(s, &get(bundles), l, &eopts)),
        JobKind::EulerBicharTwo { e, f } => chi(euler::euler_bichar_two(s, &get(e), &get(f), &eopts)),
        JobKind::EulerThree { bundles, n } => chi(euler::euler_three(s, need_n(n)?, &get(bundles), l)),
        JobKind::SymPowerTwo { bundle, k } => chi(euler::sym_power_euler_two(s, &ctx.bundles[bundle], *k, l)),
        JobKind::K0Invariants { bundles, n } => chi(euler::chi_k0_invariants(s, need_n(n)?, &get(bundles), l, &eopts)),
        JobKind::HTop { k, h2, q, n } => {
            let map: HashMap<IndexSet, u64> = h2
                .iter()
                .map(|(key, &v)| parse_fiber(key).map(|f| (f.into_iter().collect(), v)).ok_or_else(|| format!("invalid h2 key {key:?}")))
                .collect::<Result<_, _>>()?;
            let v = euler::h_top_dim(*k, need_n(n)?, &map, *q).map_err(|e| e.to_string())?;
            Ok((v.to_string(), Vec::new()))
        }
        JobKind::H0 { h0, n } => {
            let v = euler::h0_dim(h0, need_n(n)?).map_err(|e| e.to_string())?;
            Ok((v.to_string(), Vec::new()))
        }
        JobKind::VerifyComplexes { .. } => Err("verify_complexes is expanded before execution".into()),
    }
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckRow {
    CheckRow { name: name.to_string(), passed, detail: detail.into() }
}

fn failure(name: &str, e: impl std::fmt::Display) -> CheckRow {
    check(name, false, e.to_string())
}

/// All checks on one complex `R̃_ℓ` for `S_k`.
pub fn verify_pair(k: usize, ell: usize) -> Vec<CheckRow> {
    let c = match complexes::build_r_complex(k, ell) {
        Ok(c) => c,
        Err(e) => return vec![failure("build", e)],
    };
    let mut out = Vec::new();
    out.push(match c.check_d_squared() {
        Ok(ok) => check("d^2 = 0", ok, ""),
        Err(e) => failure("d^2 = 0", e),
    });
    let dims_ok = (0..=c.max_degree()).all(|i| BigInt::from(c.dim(i)) == complexes::dim_formula(k, ell, i as usize));
    let dims: Vec<String> = c.degrees().map(|d| c.dim(d).to_string()).collect();
    out.push(check("dimensions", dims_ok, format!("dims {}", dims.join(" "))));
    out.push(match complexes::verify_exactness(&c) {
        Ok(r) => {
            let h: Vec<String> = r.degrees.iter().map(|d| format!("H^{}={}", d.degree, d.cohomology)).collect();
            check("exactness", r.passed(), h.join(" "))
        }
        Err(e) => failure("exactness", e),
    });
    out.push(match complexes::nkl_brute(k, ell) {
        Ok(r) => check(
            "N(k,l)",
            r.agrees(),
            format!("kernel {} euler {} closed form {}", r.kernel_route, r.euler_route, r.closed_form),
        ),
        Err(e) => failure("N(k,l)", e),
    });
    let actions = complexes::attach_s2_hat(&c).and_then(|hat| {
        let tilde = complexes::attach_s2_tilde(&c)?;
        complexes::attach_sk_times_s2(&c, complexes::TauConvention::Hat)?;
        Ok(hat.all_signed_permutations() && tilde.all_signed_permutations())
    });
    out.push(match actions {
        Ok(signed) => check("chain maps", signed, "tau acts by signed permutations"),
        Err(e) => failure("chain maps", e),
    });
    if k <= VERIFY_GROUP_K_MAX {
        out.push(match complexes::lemma_ul_check(&c) {
            Ok(r) => check("U_l", r.passed(), format!("dim U {} rank {} ker d0 {}", r.dim_u, r.rank_on_u, r.kernel_d0)),
            Err(e) => failure("U_l", e),
        });
        let vanishing: Result<Vec<usize>, _> =
            (1..=c.max_degree()).map(|i| complexes::invariant_dim(&c, i, GroupSpec::sk()).map(|r| r.projector_rank)).collect();
        out.push(match vanishing {
            Ok(dims) => check("S_k invariants", dims.iter().all(|&d| d == 0), format!("positive degrees {dims:?}")),
            Err(e) => failure("S_k invariants", e),
        });
    }
    out
}

/// Dimension formulas against a direct count of basis labels, `k <= k_max`.
pub fn verify_dimensions(k_max: usize) -> Vec<CheckRow> {
    let mut bad = Vec::new();
    for k in 1..=k_max {
        for ell in 1..=k {
            let mut alt = BigInt::from(0);
            for i in 0..=k - ell {
                let counted: usize = IndexSet::subsets_of_size(k, ell + i)
                    .into_iter()
                    .map(|m| (1usize << (k - m.len())) * IndexSet::subsets_of_size(m.len() - 1, ell - 1).len())
                    .sum();
                let formula = complexes::dim_formula(k, ell, i);
                if BigInt::from(counted) != formula {
                    bad.push(format!("dim R^{i} at k={k} l={ell}"));
                }
                alt = if i % 2 == 0 { alt + formula } else { alt - formula };
            }
            if alt != complexes::dim_u(k, ell) {
                bad.push(format!("chi at k={k} l={ell}"));
            }
        }
    }
    vec![check("dimension formulas", bad.is_empty(), if bad.is_empty() { format!("k <= {k_max}") } else { bad.join("; ") })]
}

/// `sum_i (-1)^i 2^{k-l-i} binom(k, l+i) binom(l+i-1, l-1) = sum_{j>=l} binom(k, j)`.
pub fn verify_binomial(k_max: usize) -> Vec<CheckRow> {
    let mut bad = Vec::new();
    for k in 1..=k_max as u64 {
        for ell in 1..=k {
            let mut lhs = BigInt::from(0);
            for i in 0..=k - ell {
                let term = (BigInt::from(1) << (k - ell - i)) * choose(k, ell + i) * choose(ell + i - 1, ell - 1);
                lhs = if i % 2 == 0 { lhs + term } else { lhs - term };
            }
            let rhs: BigInt = (ell..=k).map(|j| choose(k, j)).sum();
            if lhs != rhs {
                bad.push(format!("k={k} l={ell}"));
            }
        }
    }
    vec![check("binomial identity", bad.is_empty(), if bad.is_empty() { format!("k <= {k_max}") } else { bad.join("; ") })]
}
