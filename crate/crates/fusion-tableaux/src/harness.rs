//! The verification harness: every identity the crate implements,
//! registered as a named check producing a [`CheckReport`], plus the table
//! emitters behind the CLI.
//!
//! Default bounds reproduce the full verification grid; overriding a bound
//! in [`SuiteConfig`] shrinks (or extends) every check it applies to.
//! Reports serialize as `{check, params, status, witness?, ms}`; the
//! canonical report file zeroes the `ms` field so identical configs
//! produce byte-identical files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::fock;
use crate::fusion::{self, EvaluationParams};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::qseries;
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{StableTableau, TwoRowSYT};
use crate::Result;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One check's result. A failing report always carries a witness.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub ms: u128,
}

impl CheckReport {
    pub fn pass(check: &str, params: BTreeMap<String, Value>) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            status: CheckStatus::Pass,
            witness: None,
            ms: 0,
        }
    }

    pub fn fail(check: &str, params: BTreeMap<String, Value>, witness: Value) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            status: CheckStatus::Fail,
            witness: Some(witness),
            ms: 0,
        }
    }

    pub fn skipped(check: &str, params: BTreeMap<String, Value>) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            status: CheckStatus::Skipped,
            witness: None,
            ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// Which evaluation points to use where a single choice is needed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZChoice {
    #[default]
    Consecutive,
    Geometric,
}

impl ZChoice {
    pub fn params(self, n: usize) -> EvaluationParams {
        match self {
            ZChoice::Consecutive => EvaluationParams::consecutive(n),
            ZChoice::Geometric => EvaluationParams::geometric(n),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ZChoice::Consecutive => "consecutive",
            ZChoice::Geometric => "geometric",
        }
    }
}

/// Output format for emitted tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Tsv,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Tsv => "tsv",
        }
    }
}

/// Bounds and output options for a suite run. `None` bounds mean the
/// default verification grid; explicit values override it per check.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub n_max: Option<u32>,
    pub k_max: Option<u32>,
    pub degree_max: Option<u64>,
    pub z_points: ZChoice,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub jobs: Option<usize>,
    /// Restrict the run to checks whose name matches exactly.
    pub only: Option<String>,
}

impl SuiteConfig {
    fn n_bound(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }

    fn k_bound(&self, default: u32) -> u32 {
        self.k_max.unwrap_or(default)
    }

    fn degree_bound(&self, default: u64) -> u64 {
        self.degree_max.unwrap_or(default)
    }
}

struct CheckDef {
    name: &'static str,
    params: BTreeMap<String, Value>,
    run: Box<dyn Fn() -> CheckReport + Send + Sync>,
}

fn params_of(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn outcome(name: &'static str, params: BTreeMap<String, Value>, witness: Option<Value>) -> CheckReport {
    match witness {
        None => CheckReport::pass(name, params),
        Some(w) => CheckReport::fail(name, params, w),
    }
}

/// Wraps a fallible check body; library errors become failing reports.
fn check_body<F>(name: &'static str, params: BTreeMap<String, Value>, body: F) -> CheckReport
where
    F: Fn() -> Result<Option<Value>>,
{
    match body() {
        Ok(witness) => outcome(name, params, witness),
        Err(e) => CheckReport::fail(name, params, json!({ "error": e.to_string() })),
    }
}

/// All registered checks under the given bounds, in deterministic order.
fn registry(config: &SuiteConfig) -> Vec<CheckDef> {
    let mut defs: Vec<CheckDef> = Vec::new();
    let mut add = |name: &'static str,
                   params: BTreeMap<String, Value>,
                   run: Box<dyn Fn() -> CheckReport + Send + Sync>| {
        defs.push(CheckDef { name, params, run });
    };

    // 1. The grading chain: fusion q-characters = maj distribution =
    //    Kostka-Foulkes reversal, per even N, two z choices.
    let t1_max = config.n_bound(10);
    for n in (2..=t1_max).step_by(2) {
        let params = params_of(&[("N", json!(n))]);
        let p = params.clone();
        add(
            "theorem1-chain",
            params,
            Box::new(move || {
                check_body("theorem1-chain", p.clone(), || {
                    let report = fusion::verify_theorem1(n)?;
                    if report.passed {
                        return Ok(None);
                    }
                    let witness = match report.counterexample() {
                        Some(c) => json!({
                            "k": c.k,
                            "shape": c.shape,
                            "fusion": c.fusion,
                            "maj": c.maj,
                            "kedem": c.kedem,
                        }),
                        None => json!({ "z_independent": report.z_independent }),
                    };
                    Ok(Some(witness))
                })
            }),
        );
    }

    // 2. maj + charge = N(N-1)/2, both statistics from first principles.
    {
        let n_max = config.n_bound(12);
        let params = params_of(&[("n_max", json!(n_max))]);
        let p = params.clone();
        add(
            "charge-maj-complement",
            params,
            Box::new(move || {
                check_body("charge-maj-complement", p.clone(), || {
                    for n in 1..=n_max {
                        let target = n as u64 * (n as u64 - 1) / 2;
                        for b in 0..=n / 2 {
                            let shape = Partition::two_row(n - b, b)?;
                            for t in TwoRowSYT::enumerate_shape(&shape)? {
                                if t.maj() + t.charge() != target {
                                    return Ok(Some(json!({
                                        "tableau": t,
                                        "maj": t.maj(),
                                        "charge": t.charge(),
                                        "expected_sum": target,
                                    })));
                                }
                            }
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 3. Enumerated maj distribution equals the closed q-hook formula.
    {
        let n_max = config.n_bound(14);
        let params = params_of(&[("n_max", json!(n_max))]);
        let p = params.clone();
        add(
            "maj-qhook-oracle",
            params,
            Box::new(move || {
                check_body("maj-qhook-oracle", p.clone(), || {
                    for n in 1..=n_max {
                        for b in 0..=n / 2 {
                            let shape = Partition::two_row(n - b, b)?;
                            let enumerated = qseries::maj_gf(&shape)?;
                            let hook = qseries::qhook_maj_gf(&shape)?;
                            if enumerated != hook {
                                return Ok(Some(json!({
                                    "shape": shape,
                                    "enumerated": enumerated,
                                    "qhook": hook,
                                })));
                            }
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 4. Embedding laws: maj shift, r-stability, principal values.
    {
        let n_max = config.n_bound(12);
        let k_max = config.k_bound(6);
        let params = params_of(&[("n_max", json!(n_max)), ("k_max", json!(k_max))]);
        let p = params.clone();
        add(
            "embedding-laws",
            params,
            Box::new(move || {
                check_body("embedding-laws", p.clone(), || {
                    for n in 1..=n_max {
                        for b in 0..=n / 2 {
                            let shape = Partition::two_row(n - b, b)?;
                            for t in TwoRowSYT::enumerate_shape(&shape)? {
                                let e = t.embed();
                                if e.maj() != t.maj() + n as u64 + 1 {
                                    return Ok(Some(json!({
                                        "tableau": t,
                                        "embedded_maj": e.maj(),
                                        "expected": t.maj() + n as u64 + 1,
                                    })));
                                }
                                if n % 2 == 0 {
                                    let s = StableTableau::new(t.clone())?;
                                    let ext = StableTableau::new(e)?;
                                    if s.stable_major_index() != ext.stable_major_index() {
                                        return Ok(Some(json!({
                                            "tableau": t,
                                            "r": s.stable_major_index(),
                                            "r_extended": ext.stable_major_index(),
                                        })));
                                    }
                                }
                            }
                        }
                    }
                    for k in 0..=k_max {
                        for len in [2 * k.max(1), 2 * k + 2, 2 * k + 6] {
                            let t = StableTableau::new(TwoRowSYT::principal(k, len)?)?;
                            if t.stable_major_index() != (k as u64).pow(2) {
                                return Ok(Some(json!({
                                    "principal_k": k,
                                    "length": len,
                                    "r": t.stable_major_index(),
                                })));
                            }
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 5. Level generating function = Gaussian binomial = box partitions,
    //    with the stabilized coefficients equal to partition numbers.
    {
        let k_max = config.k_bound(8);
        let params = params_of(&[("k_max", json!(k_max))]);
        let p = params.clone();
        add(
            "qbinomial-level",
            params,
            Box::new(move || {
                check_body("qbinomial-level", p.clone(), || {
                    for level in 1..=k_max {
                        let mut gf = QPoly::zero();
                        for t in StableTableau::enumerate_level(level)? {
                            gf.add_term(&BigInt::from(1), t.stable_major_index() as usize);
                        }
                        let gauss = qseries::gauss_binomial(2 * level, level)?;
                        let boxes = qseries::box_partition_gf(level);
                        if gf != gauss || gauss != boxes {
                            return Ok(Some(json!({
                                "level": level,
                                "tableau_gf": gf,
                                "gauss_binomial": gauss,
                                "box_gf": boxes,
                            })));
                        }
                    }
                    let top = qseries::gauss_binomial(2 * k_max, k_max)?;
                    for d in 0..=k_max.min(8) as usize {
                        let pd = Partition::all_of(d as u32).len();
                        if top.coeff(d) != BigInt::from(pd) {
                            return Ok(Some(json!({
                                "degree": d,
                                "coefficient": top.coeff(d).to_string(),
                                "partition_number": pd,
                            })));
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 6. Rectangular Schur formula with exact sign and factorial.
    {
        let k_max = config.k_bound(4);
        let params = params_of(&[("k_max", json!(k_max))]);
        let p = params.clone();
        add(
            "rectangular-schur",
            params,
            Box::new(move || {
                check_body("rectangular-schur", p.clone(), || {
                    for k in 1..=k_max {
                        for m in 0..=k {
                            let rep = fock::verify_rectangular(k, m)?;
                            if !rep.passed {
                                return Ok(Some(json!({
                                    "k": k,
                                    "m": m,
                                    "witness": rep.witness,
                                })));
                            }
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 7a. General Schur reconstruction from e-words.
    {
        let k_max = config.k_bound(3);
        let params = params_of(&[("k_max", json!(k_max))]);
        let p = params.clone();
        add(
            "gensegal-schur",
            params,
            Box::new(move || {
                check_body("gensegal-schur", p.clone(), || {
                    for k in 1..=k_max {
                        for nu in Partition::all_in_box(k, k) {
                            let got = fock::schur_via_gensegal(&nu, k)?;
                            let expected = SymFunc::basis_element(Basis::S, nu.clone());
                            if got != expected {
                                return Ok(Some(json!({
                                    "k": k,
                                    "nu": nu,
                                    "got": got,
                                })));
                            }
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 7b. The e-word images span Λ_{n×n} with full rank C(2n, n).
    {
        let k_max = config.k_bound(4);
        let params = params_of(&[("n_max", json!(k_max))]);
        let p = params.clone();
        add(
            "f2n-span-rank",
            params,
            Box::new(move || {
                check_body("f2n-span-rank", p.clone(), || {
                    for n in 1..=k_max {
                        let rep = fock::f2n_span_check(n)?;
                        if !rep.passed {
                            return Ok(Some(json!({
                                "n": n,
                                "rank": rep.rank,
                                "dimension": rep.box_dimension,
                                "witness": rep.witness,
                            })));
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 8. Virasoro commutators with central charge 1 + singular vectors.
    {
        let degree_max = config.degree_bound(8);
        let k_max = config.k_bound(4);
        let params = params_of(&[
            ("degree_max", json!(degree_max)),
            ("k_max", json!(k_max)),
            ("mn_max", json!(4)),
        ]);
        let p = params.clone();
        add(
            "virasoro-structure",
            params,
            Box::new(move || {
                check_body("virasoro-structure", p.clone(), || {
                    for m in -4i64..=4 {
                        for n in -4i64..=4 {
                            let rep = fock::virasoro_commutator_check(m, n, degree_max);
                            if !rep.passed {
                                return Ok(Some(json!({
                                    "m": m,
                                    "n": n,
                                    "witness": rep.witness,
                                })));
                            }
                        }
                    }
                    for k in 1..=k_max {
                        let rep = fock::singular_vector_check(k, 4)?;
                        if !rep.passed {
                            return Ok(Some(json!({ "k": k, "witness": rep.witness })));
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 9. Heisenberg CCR and adjointness under the modified inner product.
    {
        let degree_max = config.degree_bound(8);
        let params = params_of(&[("degree_max", json!(degree_max)), ("nm_max", json!(4))]);
        let p = params.clone();
        add(
            "heisenberg-structure",
            params,
            Box::new(move || {
                check_body("heisenberg-structure", p.clone(), || {
                    for n in 1..=4u32 {
                        for m in 1..=4u32 {
                            let rep = fock::heisenberg_ccr_check(n, m, degree_max)?;
                            if !rep.passed {
                                return Ok(Some(json!({
                                    "n": n,
                                    "m": m,
                                    "witness": rep.witness,
                                })));
                            }
                        }
                        let rep = fock::adjointness_check(n, degree_max)?;
                        if !rep.passed {
                            return Ok(Some(json!({ "n": n, "witness": rep.witness })));
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 10. Schur-Weyl dimension identity Σ (2k+1) f^{(n+k,n-k)} = 2^N.
    {
        let n_max = config.n_bound(14);
        let params = params_of(&[("n_max", json!(n_max))]);
        let p = params.clone();
        add(
            "schur-weyl-dimension",
            params,
            Box::new(move || {
                check_body("schur-weyl-dimension", p.clone(), || {
                    for n in (2..=n_max).step_by(2) {
                        let mut total = 0u64;
                        for k in 0..=n / 2 {
                            total += (2 * k as u64 + 1)
                                * TwoRowSYT::enumerate(n, k)?.len() as u64;
                        }
                        if total != 1u64 << n {
                            return Ok(Some(json!({
                                "N": n,
                                "sum": total,
                                "expected": 1u64 << n,
                            })));
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 11. Fusion grading does not depend on the evaluation points.
    let zi_max = config.n_bound(8);
    for n in (2..=zi_max).step_by(2) {
        let params = params_of(&[("N", json!(n))]);
        let p = params.clone();
        add(
            "fusion-z-independence",
            params,
            Box::new(move || {
                check_body("fusion-z-independence", p.clone(), || {
                    let a = fusion::build_filtration(n, &EvaluationParams::consecutive(n as usize))?;
                    let b = fusion::build_filtration(n, &EvaluationParams::geometric(n as usize))?;
                    if a != b {
                        return Ok(Some(json!({
                            "consecutive": a,
                            "geometric": b,
                        })));
                    }
                    Ok(None)
                })
            }),
        );
    }

    // 12. L_0 spectrum on Λ_{K×K} = stable-major-index multiset at level K.
    {
        let k_max = config.k_bound(4);
        let params = params_of(&[("k_max", json!(k_max))]);
        let p = params.clone();
        add(
            "l0-spectrum",
            params,
            Box::new(move || {
                check_body("l0-spectrum", p.clone(), || {
                    for level in 1..=k_max {
                        let spectrum = fock::l0_spectrum_on_box(level)?;
                        let mut stable: Vec<u64> = StableTableau::enumerate_level(level)?
                            .iter()
                            .map(StableTableau::stable_major_index)
                            .collect();
                        stable.sort_unstable();
                        if spectrum != stable {
                            return Ok(Some(json!({
                                "level": level,
                                "l0_spectrum": spectrum,
                                "stable_major_indices": stable,
                            })));
                        }
                    }
                    Ok(None)
                })
            }),
        );
    }

    defs.sort_by(|a, b| {
        a.name
            .cmp(b.name)
            .then_with(|| params_order(&a.params, &b.params))
    });
    defs
}

/// Orders parameter maps key by key, comparing numeric values numerically
/// so `{"N": 2}` sorts before `{"N": 10}`.
fn params_order(a: &BTreeMap<String, Value>, b: &BTreeMap<String, Value>) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((ka, va)), Some((kb, vb))) => {
                let key = ka.cmp(kb);
                if key != Ordering::Equal {
                    return key;
                }
                let value = match (va.as_i64(), vb.as_i64()) {
                    (Some(x), Some(y)) => x.cmp(&y),
                    _ => va.to_string().cmp(&vb.to_string()),
                };
                if value != Ordering::Equal {
                    return value;
                }
            }
        }
    }
}

/// Names of every registered check, for CLI validation and help text.
pub fn check_names() -> Vec<&'static str> {
    let defs = registry(&SuiteConfig::default());
    let mut names: Vec<&'static str> = defs.iter().map(|d| d.name).collect();
    names.dedup();
    names.sort_unstable();
    names.dedup();
    names
}

/// Runs every registered check (or only the named one) within the config
/// bounds. Checks run on a worker pool of the configured width; the report
/// order is deterministic regardless of scheduling. If an output directory
/// is configured, the canonical report file is written there.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut defs = registry(config);
    if let Some(only) = &config.only {
        defs.retain(|d| d.name == only);
        if defs.is_empty() {
            return Err(Error::domain(format!(
                "no check named `{only}`; known checks: {}",
                check_names().join(", ")
            )));
        }
    }
    // fail on an unwritable output path before running anything
    if let Some(dir) = &config.out {
        std::fs::create_dir_all(dir)?;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::internal(format!("worker pool: {e}")))?;
    let mut reports: Vec<CheckReport> = pool.install(|| {
        defs.par_iter()
            .map(|def| {
                let start = Instant::now();
                let mut report = (def.run)();
                report.ms = start.elapsed().as_millis();
                report
            })
            .collect()
    });
    reports.sort_by(|a, b| {
        a.check
            .cmp(&b.check)
            .then_with(|| params_order(&a.params, &b.params))
    });

    if let Some(dir) = &config.out {
        write_reports(&reports, dir)?;
    }
    Ok(reports)
}

/// Writes the canonical `reports.json`: same schema, `ms` zeroed so that
/// identical configs give byte-identical files.
pub fn write_reports(reports: &[CheckReport], dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let canonical: Vec<CheckReport> = reports
        .iter()
        .map(|r| CheckReport {
            ms: 0,
            ..r.clone()
        })
        .collect();
    let path = dir.join("reports.json");
    let mut text = serde_json::to_string_pretty(&canonical)
        .map_err(|e| Error::internal(format!("report serialization: {e}")))?;
    text.push('\n');
    std::fs::write(&path, text)?;
    Ok(path)
}

/// The table kinds the CLI can emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    MajDist,
    KostkaFoulkes,
    GradedChar,
    QBinomial,
    GensegalMatrix,
}

impl TableKind {
    pub fn label(self) -> &'static str {
        match self {
            TableKind::MajDist => "maj-dist",
            TableKind::KostkaFoulkes => "kostka-foulkes",
            TableKind::GradedChar => "graded-char",
            TableKind::QBinomial => "q-binomial",
            TableKind::GensegalMatrix => "gensegal-matrix",
        }
    }
}

/// Parameters for [`emit_table`]; which field matters depends on the kind.
#[derive(Clone, Copy, Debug, Default)]
pub struct TableParams {
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub z_points: ZChoice,
}

fn require_n(params: &TableParams, kind: TableKind) -> Result<u32> {
    params.n.ok_or_else(|| {
        Error::domain(format!("table {} requires --N", kind.label()))
    })
}

fn require_k(params: &TableParams, kind: TableKind) -> Result<u32> {
    params.k.ok_or_else(|| {
        Error::domain(format!("table {} requires --k", kind.label()))
    })
}

/// Builds a table as a string in the requested format, together with the
/// file stem it should be written under. Output is byte-stable for fixed
/// parameters.
pub fn render_table(
    kind: TableKind,
    params: &TableParams,
    format: OutputFormat,
) -> Result<(String, String)> {
    match kind {
        TableKind::MajDist => {
            let n = require_n(params, kind)?;
            let shapes = two_row_shapes(n)?;
            let rows: Vec<(Partition, QPoly)> = shapes
                .into_iter()
                .map(|s| {
                    let gf = qseries::maj_gf(&s)?;
                    Ok((s, gf))
                })
                .collect::<Result<_>>()?;
            let stem = format!("maj-dist-N{n}");
            Ok((render_shape_polys("maj_gf", &rows, format), stem))
        }
        TableKind::KostkaFoulkes => {
            let n = require_n(params, kind)?;
            let shapes = two_row_shapes(n)?;
            let rows: Vec<(Partition, QPoly)> = shapes
                .into_iter()
                .map(|s| {
                    let gf = qseries::kostka_foulkes_column(&s, n)?;
                    Ok((s, gf))
                })
                .collect::<Result<_>>()?;
            let stem = format!("kostka-foulkes-N{n}");
            Ok((render_shape_polys("kostka_foulkes", &rows, format), stem))
        }
        TableKind::GradedChar => {
            let n = require_n(params, kind)?;
            let z = params.z_points.params(n as usize);
            let table = fusion::build_filtration(n, &z)?;
            let stem = format!("graded-char-N{n}-{}", params.z_points.label());
            let text = match format {
                OutputFormat::Tsv => table.to_tsv(),
                OutputFormat::Json => pretty_json(&table)?,
            };
            Ok((text, stem))
        }
        TableKind::QBinomial => {
            let k = require_k(params, kind)?;
            let poly = qseries::gauss_binomial(2 * k, k)?;
            let stem = format!("q-binomial-k{k}");
            let text = match format {
                OutputFormat::Json => pretty_json(&poly)?,
                OutputFormat::Tsv => {
                    let mut out = String::from("exponent\tcoefficient\n");
                    for (e, c) in poly.coeffs().iter().enumerate() {
                        out.push_str(&format!("{e}\t{c}\n"));
                    }
                    out
                }
            };
            Ok((text, stem))
        }
        TableKind::GensegalMatrix => {
            let k = require_k(params, kind)?;
            if k == 0 {
                return Err(Error::domain("--k must be positive"));
            }
            let words = fock::f2n_zero_basis(k)?;
            let shapes = Partition::all_in_box(k, k);
            let index: std::collections::HashMap<&Partition, usize> =
                shapes.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut entries: Vec<Vec<String>> = Vec::with_capacity(words.len());
            for word in &words {
                let image = fock::e_word_apply(word);
                let mut row = vec!["0".to_string(); shapes.len()];
                for (lam, c) in image.terms() {
                    let i = index.get(lam).ok_or_else(|| {
                        Error::inconsistent(format!("{word} leaves the {k}×{k} box"))
                    })?;
                    row[*i] = c.to_string();
                }
                entries.push(row);
            }
            let stem = format!("gensegal-matrix-k{k}");
            let text = match format {
                OutputFormat::Json => {
                    let value = json!({
                        "k": k,
                        "words": words.iter().map(|w| w.indices().to_vec()).collect::<Vec<_>>(),
                        "shapes": shapes,
                        "entries": entries,
                    });
                    let mut s = serde_json::to_string_pretty(&value)
                        .map_err(|e| Error::internal(e.to_string()))?;
                    s.push('\n');
                    s
                }
                OutputFormat::Tsv => {
                    let mut out = String::from("word");
                    for s in &shapes {
                        out.push_str(&format!("\ts{s}"));
                    }
                    out.push('\n');
                    for (word, row) in words.iter().zip(&entries) {
                        out.push_str(&format!("{word}"));
                        for e in row {
                            out.push_str(&format!("\t{e}"));
                        }
                        out.push('\n');
                    }
                    out
                }
            };
            Ok((text, stem))
        }
    }
}

/// Renders a table and writes it under the output directory. Returns the
/// path written.
pub fn emit_table(
    kind: TableKind,
    params: &TableParams,
    format: OutputFormat,
    out_dir: &Path,
) -> Result<PathBuf> {
    let (text, stem) = render_table(kind, params, format)?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join(format!("{stem}.{}", format.extension()));
    std::fs::write(&path, text)?;
    Ok(path)
}

fn two_row_shapes(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::domain("--N must be positive"));
    }
    (0..=n / 2).map(|b| Partition::two_row(n - b, b)).collect()
}

fn render_shape_polys(
    field: &str,
    rows: &[(Partition, QPoly)],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Tsv => {
            let mut out = format!("shape\t{field}\n");
            for (shape, poly) in rows {
                out.push_str(&format!(
                    "{shape}\t{}\n",
                    poly.to_decimal_strings().join(",")
                ));
            }
            out
        }
        OutputFormat::Json => {
            let value: Vec<Value> = rows
                .iter()
                .map(|(shape, poly)| json!({ "shape": shape, field: poly }))
                .collect();
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn pretty_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::internal(format!("serialization: {e}")))?;
    s.push('\n');
    Ok(s)
}
