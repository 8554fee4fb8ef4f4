//! Batch command surface: load a workbench document, run named jobs, and
//! emit a deterministic structured report.
//!
//! Documents and reports are JSON. A document declares, under one prime
//! `p`, named algebras, ring maps, modules, module morphisms, CDG-rings,
//! cotorsion oracles, and an ordered job list; every entry is validated at
//! load time. Each job is one line of whitespace-separated tokens naming a
//! command and its entity arguments. Reports list one entry per executed
//! job with a status (`pass`, `fail`, or `error`), a command-specific
//! detail object, machine-checkable certificates (matrix identities over
//! 𝔽_p), and the assumption ledger inherited from the oracles involved.
//! Serialization is canonical — struct fields in declared order, maps with
//! sorted keys, matrices row-major — so re-running a document yields
//! byte-identical bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::adjunction::RingMap;
use crate::algebra::{same_algebra, Algebra, AlgebraMorphism};
use crate::cdg::{
    co_contra_scan, contracting_homotopy, delta_extension, is_coacyclic, is_contraacyclic,
    verify_totalization_acyclicity, AcyclicityEvidence, AcyclicityReport, CDGModule, CDGRing,
    CdgThreeTerm, check_shift_identity,
};
use crate::cotorsion::{
    rel_coresolution_dim, rel_resolution_dim, salce_precover_from_preenvelope,
    salce_preenvelope_from_precover, Approximation, CotorsionOracle, RelDim,
};
use crate::exactfield::FpMatrix;
use crate::fixtures;
use crate::modcat::{ext_dim, hom_dim, tor_dim, Module, ModuleMorphism, ShortExactSeq, Side};
use crate::towers::{
    bongartz_preenvelope, cotilting_check, dual_bongartz_precover, membership_in_ca,
    membership_in_fa_dual, q_preenvelope, tilting_check, w_precover, ApproximationCertificate,
    LiftedPairConfig, MembershipCertificate, TowerDirection,
};

// ---------------------------------------------------------------------------
// Document model (deserialized shape)
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct DocRoot {
    p: u32,
    #[serde(default)]
    algebras: BTreeMap<String, DocAlgebra>,
    #[serde(default)]
    ring_maps: BTreeMap<String, DocRingMap>,
    #[serde(default)]
    modules: BTreeMap<String, DocModule>,
    #[serde(default)]
    morphisms: BTreeMap<String, DocMorphism>,
    #[serde(default)]
    cdg_rings: BTreeMap<String, DocCdgRing>,
    #[serde(default)]
    oracles: BTreeMap<String, DocOracle>,
    #[serde(default)]
    jobs: Vec<DocJob>,
}

#[derive(Deserialize)]
struct DocAlgebra {
    /// Name in the fixture registry; excludes the explicit fields below.
    fixture: Option<String>,
    /// Fixture parameter (graded dual numbers take the degree of x).
    degree: Option<i64>,
    basis: Option<Vec<String>>,
    unit: Option<Vec<i64>>,
    degrees: Option<Vec<i64>>,
    /// table[i][j] = coordinates of e_i·e_j in the basis.
    table: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Deserialize)]
struct DocRingMap {
    source: String,
    target: String,
    /// Row-major (dim target) × (dim source); image of the j-th source
    /// basis vector in column j. Omitted iff `unit_embedding` is set.
    matrix: Option<Vec<Vec<i64>>>,
    /// Source must be the one-dimensional field algebra; the map sends its
    /// unit to the target's unit.
    #[serde(default)]
    unit_embedding: bool,
}

#[derive(Deserialize)]
struct DocModule {
    algebra: String,
    side: String,
    /// action[i] = row-major matrix of the i-th basis element.
    action: Option<Vec<Vec<Vec<i64>>>>,
    grading: Option<Vec<i64>>,
    /// The regular representation.
    #[serde(default)]
    regular: bool,
    free: Option<DocFree>,
    /// Differential making the module a CDG-module over a matching
    /// CDG-ring; validated by the `cdg-validate` / CDG jobs that use it.
    dm: Option<Vec<Vec<i64>>>,
}

#[derive(Deserialize)]
struct DocFree {
    copies: usize,
    shifts: Option<Vec<i64>>,
}

#[derive(Deserialize)]
struct DocMorphism {
    source: String,
    target: String,
    matrix: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct DocCdgRing {
    fixture: Option<String>,
    algebra: Option<String>,
    /// Row-major dim × dim matrix of the derivation.
    d: Option<Vec<Vec<i64>>>,
    /// Coordinates of the curvature element.
    h: Option<Vec<i64>>,
}

#[derive(Deserialize)]
struct DocOracle {
    /// "proj_all" or "all_inj".
    builtin: Option<String>,
    algebra: Option<String>,
    side: Option<String>,
    generated: Option<Vec<String>>,
    cogenerated: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct DocJob {
    name: String,
    run: String,
}

// ---------------------------------------------------------------------------
// Loaded workbench
// ---------------------------------------------------------------------------

/// A fully resolved and validated document: every entry constructed and
/// checked, ready to execute jobs against.
pub struct Workbench {
    pub p: u32,
    algebras: BTreeMap<String, Arc<Algebra>>,
    ring_maps: BTreeMap<String, RingMap>,
    modules: BTreeMap<String, Arc<Module>>,
    module_dms: BTreeMap<String, FpMatrix>,
    morphisms: BTreeMap<String, ModuleMorphism>,
    cdg_rings: BTreeMap<String, CDGRing>,
    oracles: BTreeMap<String, OracleSpec>,
    jobs: Vec<(String, String)>,
}

impl std::fmt::Debug for Workbench {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Workbench")
            .field("p", &self.p)
            .field("algebras", &self.algebras.keys().collect::<Vec<_>>())
            .field("modules", &self.modules.keys().collect::<Vec<_>>())
            .field("jobs", &self.jobs.iter().map(|(n, _)| n).collect::<Vec<_>>())
            .finish_non_exhaustive()
    }
}

/// Oracles are stored as build recipes and assembled per job (the oracle
/// type carries provider closures and is not serializable itself).
enum OracleSpec {
    ProjAll(String, Side),
    AllInj(String, Side),
    Generated(Vec<String>),
    Cogenerated(Vec<String>),
}

/// Document loading failure: either malformed JSON (with position) or a
/// named entity failing validation.
#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{entity}: {violation}")]
    Validation { entity: String, violation: String },
}

fn invalid(entity: &str, violation: impl std::fmt::Display) -> DocError {
    DocError::Validation { entity: entity.to_string(), violation: violation.to_string() }
}

fn parse_side(entity: &str, s: &str) -> Result<Side, DocError> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(invalid(entity, format!("side must be `left` or `right`, got `{other}`"))),
    }
}

fn rows_to_matrix(
    entity: &str,
    p: u32,
    rows: &[Vec<i64>],
    expect: Option<(usize, usize)>,
) -> Result<FpMatrix, DocError> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|row| row.len() != c) {
        return Err(invalid(entity, "ragged matrix"));
    }
    if let Some((er, ec)) = expect {
        if (r, c) != (er, ec) {
            return Err(invalid(entity, format!("matrix must be {er}×{ec}, got {r}×{c}")));
        }
    }
    Ok(FpMatrix::from_fn(p, r, c, |i, j| rows[i][j]))
}

fn column_vector(entity: &str, p: u32, coords: &[i64], dim: usize) -> Result<FpMatrix, DocError> {
    if coords.len() != dim {
        return Err(invalid(entity, format!("expected {dim} coordinates, got {}", coords.len())));
    }
    Ok(FpMatrix::from_fn(p, dim, 1, |i, _| coords[i]))
}

fn build_algebra(name: &str, p: u32, d: &DocAlgebra, max_dim: usize) -> Result<Arc<Algebra>, DocError> {
    let entity = format!("algebra `{name}`");
    if let Some(f) = &d.fixture {
        let a = match f.as_str() {
            "prime_field" => fixtures::prime_field(p),
            "graded_prime_field" => fixtures::graded_prime_field(p),
            "dual_numbers" => fixtures::dual_numbers(p),
            "graded_dual_numbers" => fixtures::graded_dual_numbers(p, d.degree.unwrap_or(1)),
            "graded_truncated_cubic" => fixtures::graded_truncated_cubic(p),
            "a2" => fixtures::a2(p),
            "a3_zero_relation" => fixtures::a3_zero_relation(p),
            "upper_triangular" => fixtures::upper_triangular(p),
            "diagonal" => fixtures::diagonal(p),
            other => return Err(invalid(&entity, format!("unknown fixture `{other}`"))),
        };
        return Ok(a);
    }
    let basis = d.basis.as_ref().ok_or_else(|| invalid(&entity, "missing `basis`"))?;
    let dim = basis.len();
    if dim == 0 || dim > max_dim {
        return Err(invalid(&entity, format!("dimension {dim} outside 1..={max_dim}")));
    }
    let unit = d.unit.as_ref().ok_or_else(|| invalid(&entity, "missing `unit`"))?;
    if unit.len() != dim {
        return Err(invalid(&entity, "unit coordinate length"));
    }
    let table = d.table.as_ref().ok_or_else(|| invalid(&entity, "missing `table`"))?;
    if table.len() != dim
        || table.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
    {
        return Err(invalid(&entity, "table must be dim × dim × dim"));
    }
    if let Some(deg) = &d.degrees {
        if deg.len() != dim {
            return Err(invalid(&entity, "degree vector length"));
        }
    }
    let a = Algebra::new(
        p,
        dim,
        |i, j| table[i][j].clone(),
        unit,
        Some(basis.clone()),
        d.degrees.clone(),
    );
    a.validate().map_err(|e| invalid(&entity, e))?;
    Ok(Arc::new(a))
}

/// Parses and validates a workbench document. Every named entry is
/// constructed and passed through its validator; the first failure is
/// reported with the entity name.
pub fn load_document(text: &str, max_dim: usize) -> Result<Workbench, DocError> {
    let doc: DocRoot = serde_json::from_str(text).map_err(|e| DocError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let p = doc.p;
    if p < 2 || (2..p).any(|d| p % d == 0) {
        return Err(invalid("document", format!("p = {p} is not prime")));
    }

    let mut algebras = BTreeMap::new();
    for (name, da) in &doc.algebras {
        algebras.insert(name.clone(), build_algebra(name, p, da, max_dim)?);
    }

    let mut ring_maps = BTreeMap::new();
    for (name, drm) in &doc.ring_maps {
        let entity = format!("ring map `{name}`");
        let source = algebras
            .get(&drm.source)
            .ok_or_else(|| invalid(&entity, format!("unknown algebra `{}`", drm.source)))?;
        let target = algebras
            .get(&drm.target)
            .ok_or_else(|| invalid(&entity, format!("unknown algebra `{}`", drm.target)))?;
        let matrix = if drm.unit_embedding {
            if source.dim() != 1 {
                return Err(invalid(&entity, "unit_embedding needs a one-dimensional source"));
            }
            target.unit().clone()
        } else {
            let rows = drm
                .matrix
                .as_ref()
                .ok_or_else(|| invalid(&entity, "missing `matrix` (or set unit_embedding)"))?;
            rows_to_matrix(&entity, p, rows, Some((target.dim(), source.dim())))?
        };
        let morphism = AlgebraMorphism::new(Arc::clone(source), Arc::clone(target), matrix)
            .map_err(|e| invalid(&entity, e))?;
        ring_maps.insert(name.clone(), RingMap::new(morphism));
    }

    let mut modules = BTreeMap::new();
    let mut module_dms = BTreeMap::new();
    for (name, dm) in &doc.modules {
        let entity = format!("module `{name}`");
        let algebra = algebras
            .get(&dm.algebra)
            .ok_or_else(|| invalid(&entity, format!("unknown algebra `{}`", dm.algebra)))?;
        let side = parse_side(&entity, &dm.side)?;
        let built = if dm.regular {
            Module::regular(algebra, side)
        } else if let Some(f) = &dm.free {
            if f.copies == 0 || f.copies * algebra.dim() > max_dim {
                return Err(invalid(&entity, format!("free module exceeds max dim {max_dim}")));
            }
            if let Some(s) = &f.shifts {
                if s.len() != f.copies {
                    return Err(invalid(&entity, "shifts length must equal copies"));
                }
            }
            Module::free(algebra, side, f.copies, f.shifts.as_deref())
        } else {
            let action = dm.action.as_ref().ok_or_else(|| {
                invalid(&entity, "missing `action` (or set `regular` / `free`)")
            })?;
            if action.len() != algebra.dim() {
                return Err(invalid(&entity, "one action matrix per basis element"));
            }
            let mdim = action.first().map_or(0, Vec::len);
            if mdim > max_dim {
                return Err(invalid(&entity, format!("dimension {mdim} exceeds {max_dim}")));
            }
            let mats = action
                .iter()
                .map(|rows| rows_to_matrix(&entity, p, rows, Some((mdim, mdim))))
                .collect::<Result<Vec<_>, _>>()?;
            Module::new(Arc::clone(algebra), side, mats, dm.grading.clone())
                .map_err(|e| invalid(&entity, e))?
        };
        if let Some(rows) = &dm.dm {
            let d = rows_to_matrix(&entity, p, rows, Some((built.dim(), built.dim())))?;
            module_dms.insert(name.clone(), d);
        }
        modules.insert(name.clone(), built);
    }

    let mut morphisms = BTreeMap::new();
    for (name, df) in &doc.morphisms {
        let entity = format!("morphism `{name}`");
        let source = modules
            .get(&df.source)
            .ok_or_else(|| invalid(&entity, format!("unknown module `{}`", df.source)))?;
        let target = modules
            .get(&df.target)
            .ok_or_else(|| invalid(&entity, format!("unknown module `{}`", df.target)))?;
        let matrix =
            rows_to_matrix(&entity, p, &df.matrix, Some((target.dim(), source.dim())))?;
        let f = ModuleMorphism::new(Arc::clone(source), Arc::clone(target), matrix)
            .map_err(|e| invalid(&entity, e))?;
        morphisms.insert(name.clone(), f);
    }

    let mut cdg_rings = BTreeMap::new();
    for (name, dc) in &doc.cdg_rings {
        let entity = format!("cdg ring `{name}`");
        let ring = if let Some(f) = &dc.fixture {
            match f.as_str() {
                "field_cdg_ring" => fixtures::field_cdg_ring(p),
                "epsilon_cdg_ring" => fixtures::epsilon_cdg_ring(p),
                "truncated_poly_cdg_ring" => fixtures::truncated_poly_cdg_ring(p),
                other => return Err(invalid(&entity, format!("unknown fixture `{other}`"))),
            }
        } else {
            let aname =
                dc.algebra.as_ref().ok_or_else(|| invalid(&entity, "missing `algebra`"))?;
            let algebra = algebras
                .get(aname)
                .ok_or_else(|| invalid(&entity, format!("unknown algebra `{aname}`")))?;
            let n = algebra.dim();
            let drows = dc.d.as_ref().ok_or_else(|| invalid(&entity, "missing `d`"))?;
            let d = rows_to_matrix(&entity, p, drows, Some((n, n)))?;
            let hcoords = dc.h.as_ref().ok_or_else(|| invalid(&entity, "missing `h`"))?;
            let h = column_vector(&entity, p, hcoords, n)?;
            CDGRing::new(Arc::clone(algebra), d, h).map_err(|e| invalid(&entity, e))?
        };
        cdg_rings.insert(name.clone(), ring);
    }

    let mut oracles = BTreeMap::new();
    for (name, doco) in &doc.oracles {
        let entity = format!("oracle `{name}`");
        let spec = if let Some(b) = &doco.builtin {
            let aname =
                doco.algebra.as_ref().ok_or_else(|| invalid(&entity, "missing `algebra`"))?;
            if !algebras.contains_key(aname) {
                return Err(invalid(&entity, format!("unknown algebra `{aname}`")));
            }
            let side = parse_side(
                &entity,
                doco.side.as_deref().ok_or_else(|| invalid(&entity, "missing `side`"))?,
            )?;
            match b.as_str() {
                "proj_all" => OracleSpec::ProjAll(aname.clone(), side),
                "all_inj" => OracleSpec::AllInj(aname.clone(), side),
                other => return Err(invalid(&entity, format!("unknown builtin `{other}`"))),
            }
        } else if let Some(gens) = &doco.generated {
            for g in gens {
                if !modules.contains_key(g) {
                    return Err(invalid(&entity, format!("unknown module `{g}`")));
                }
            }
            if gens.is_empty() {
                return Err(invalid(&entity, "generated pair needs at least one generator"));
            }
            OracleSpec::Generated(gens.clone())
        } else if let Some(cogens) = &doco.cogenerated {
            for g in cogens {
                if !modules.contains_key(g) {
                    return Err(invalid(&entity, format!("unknown module `{g}`")));
                }
            }
            if cogens.is_empty() {
                return Err(invalid(&entity, "cogenerated pair needs at least one cogenerator"));
            }
            OracleSpec::Cogenerated(cogens.clone())
        } else {
            return Err(invalid(&entity, "set `builtin`, `generated`, or `cogenerated`"));
        };
        oracles.insert(name.clone(), spec);
    }

    let mut jobs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for j in &doc.jobs {
        if !seen.insert(j.name.clone()) {
            return Err(invalid("jobs", format!("duplicate job name `{}`", j.name)));
        }
        jobs.push((j.name.clone(), j.run.clone()));
    }

    Ok(Workbench {
        p,
        algebras,
        ring_maps,
        modules,
        module_dms,
        morphisms,
        cdg_rings,
        oracles,
        jobs,
    })
}

// ---------------------------------------------------------------------------
// Report model (serialized shape)
// ---------------------------------------------------------------------------

/// Row-major matrix with explicit shape (so zero-row/zero-column matrices
/// survive the round trip).
#[derive(Clone, Serialize, Deserialize)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
}

fn mat_of(m: &FpMatrix) -> Mat {
    let (r, c) = (m.rows(), m.cols());
    let mut entries = Vec::with_capacity(r * c);
    for i in 0..r {
        for j in 0..c {
            entries.push(i64::from(m.entry(i, j)));
        }
    }
    Mat { rows: r, cols: c, entries }
}

fn mat_back(p: u32, m: &Mat) -> Result<FpMatrix, String> {
    if m.entries.len() != m.rows * m.cols {
        return Err("matrix entry count does not match its shape".to_string());
    }
    Ok(FpMatrix::from_fn(p, m.rows, m.cols, |i, j| m.entries[i * m.cols + j]))
}

/// A machine-checkable matrix identity over 𝔽_p. `recheck_certificate`
/// re-verifies each variant from the stored matrices alone, with no module
/// reconstruction and no recomputation of the original run.
#[derive(Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// 0 → K → L → M → 0: i injective, q surjective, q∘i = 0, and
    /// rank i + rank q = dim L.
    Exact { label: String, i: Mat, q: Mat },
    /// q ∘ section = id (a retraction of the sequence's surjection).
    Split { label: String, q: Mat, section: Mat },
    /// t∘d + d∘t = id (a contracting homotopy against the differential d).
    Homotopy { label: String, d: Mat, t: Mat },
    /// Square and invertible.
    Iso { label: String, matrix: Mat },
    /// Full column rank.
    Injection { label: String, matrix: Mat },
    /// Full row rank.
    Surjection { label: String, matrix: Mat },
    /// second ∘ first = 0.
    ZeroComposite { label: String, first: Mat, second: Mat },
    /// Recorded dimensions (data, not an identity; recheck accepts it).
    DimensionTable { label: String, rows: Vec<Vec<i64>> },
}

/// One executed job.
#[derive(Serialize, Deserialize)]
pub struct JobReport {
    pub job: String,
    pub command: String,
    /// "pass" | "fail" | "error".
    pub status: String,
    pub detail: Value,
    pub certificates: Vec<Certificate>,
    pub assumptions: Vec<String>,
}

/// The full report for one run: one entry per selected job, in document
/// order.
#[derive(Serialize, Deserialize)]
pub struct Report {
    pub p: u32,
    pub jobs: Vec<JobReport>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.jobs.iter().all(|j| j.status == "pass")
    }
}

/// Canonical serialization: pretty JSON with sorted object keys and a
/// trailing newline. Identical runs produce identical bytes.
pub fn render_report(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("reports are serializable");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Job execution
// ---------------------------------------------------------------------------

/// Knobs shared by all jobs.
#[derive(Clone, Copy)]
pub struct RunOptions {
    /// Resolution-length cap fed to relative-dimension computations and to
    /// the CDG acyclicity deciders.
    pub cap: usize,
    /// Global safety cap on entity dimensions.
    pub max_dim: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { cap: 32, max_dim: 512 }
    }
}

struct JobFailure(String);

type JobOutcome = Result<(String, Value, Vec<Certificate>, Vec<String>), JobFailure>;

fn fail(msg: impl Into<String>) -> JobFailure {
    JobFailure(msg.into())
}

impl Workbench {
    /// Names of the declared jobs, in document order.
    pub fn job_names(&self) -> impl Iterator<Item = &str> {
        self.jobs.iter().map(|(n, _)| n.as_str())
    }

    fn module(&self, name: &str) -> Result<&Arc<Module>, JobFailure> {
        self.modules.get(name).ok_or_else(|| fail(format!("unknown module `{name}`")))
    }

    fn morphism(&self, name: &str) -> Result<&ModuleMorphism, JobFailure> {
        self.morphisms.get(name).ok_or_else(|| fail(format!("unknown morphism `{name}`")))
    }

    fn ring_map(&self, name: &str) -> Result<&RingMap, JobFailure> {
        self.ring_maps.get(name).ok_or_else(|| fail(format!("unknown ring map `{name}`")))
    }

    fn cdg_ring(&self, name: &str) -> Result<&CDGRing, JobFailure> {
        self.cdg_rings.get(name).ok_or_else(|| fail(format!("unknown cdg ring `{name}`")))
    }

    fn oracle(&self, name: &str) -> Result<CotorsionOracle, JobFailure> {
        let spec =
            self.oracles.get(name).ok_or_else(|| fail(format!("unknown oracle `{name}`")))?;
        Ok(match spec {
            OracleSpec::ProjAll(a, side) => CotorsionOracle::proj_all(&self.algebras[a], *side),
            OracleSpec::AllInj(a, side) => CotorsionOracle::all_inj(&self.algebras[a], *side),
            OracleSpec::Generated(gens) => CotorsionOracle::generated(
                format!("generated({})", gens.join(", ")),
                gens.iter().map(|g| Arc::clone(&self.modules[g])).collect(),
            ),
            OracleSpec::Cogenerated(cogens) => CotorsionOracle::cogenerated(
                format!("cogenerated({})", cogens.join(", ")),
                cogens.iter().map(|g| Arc::clone(&self.modules[g])).collect(),
            ),
        })
    }

    /// A document module declared with a `dm` field, as a CDG-module over
    /// the given ring (validated here).
    fn cdg_module(&self, c: &CDGRing, name: &str) -> Result<CDGModule, JobFailure> {
        let carrier = self.module(name)?;
        let dmat = self
            .module_dms
            .get(name)
            .ok_or_else(|| fail(format!("module `{name}` has no `dm` differential")))?;
        CDGModule::new(c, Arc::clone(carrier), dmat.clone())
            .map_err(|e| fail(format!("module `{name}` is not a CDG-module: {e}")))
    }
}

fn ses_certificate(label: &str, s: &ShortExactSeq) -> Certificate {
    Certificate::Exact { label: label.to_string(), i: mat_of(&s.i.matrix), q: mat_of(&s.q.matrix) }
}

fn tower_certificates(cert: &ApproximationCertificate, out: &mut Vec<Certificate>) {
    out.push(ses_certificate("approximation sequence", &cert.sequence));
    for (i, map) in cert.tower.maps.iter().enumerate() {
        // Filtration maps G_i ↪ G_{i+1} are injective; cofiltration maps
        // G_{i+1} ↠ G_i are surjective.
        out.push(match cert.tower.direction {
            TowerDirection::Filtration => Certificate::Injection {
                label: format!("filtration step {i}"),
                matrix: mat_of(&map.matrix),
            },
            TowerDirection::Cofiltration => Certificate::Surjection {
                label: format!("cofiltration step {i}"),
                matrix: mat_of(&map.matrix),
            },
        });
    }
    for (i, layer) in cert.tower.layers.iter().enumerate() {
        out.push(Certificate::Iso {
            label: format!("layer {i} identification ({})", layer.note),
            matrix: mat_of(&layer.iso.matrix),
        });
    }
}

fn tower_detail(cert: &ApproximationCertificate) -> Value {
    json!({
        "sequence_dims": [
            cert.sequence.kernel_module().dim(),
            cert.sequence.middle_module().dim(),
            cert.sequence.quotient_module().dim(),
        ],
        "tower_end": format!("{:?}", cert.tower_end),
        "stage_dims": cert.tower.stages.iter().map(|s| s.dim()).collect::<Vec<_>>(),
        "layer_dims": cert.tower.layers.iter().map(|l| l.model.dim()).collect::<Vec<_>>(),
        "layer_notes": cert.tower.layers.iter().map(|l| l.note.clone()).collect::<Vec<_>>(),
        "end_statement": cert.end_statement,
        "condition_sample": cert.condition_sample,
    })
}

fn membership_payload(mc: &MembershipCertificate) -> (Value, Vec<Certificate>, Vec<String>) {
    let mut certs = Vec::new();
    tower_certificates(&mc.certificate, &mut certs);
    if let Some(sp) = &mc.splitting {
        certs.push(Certificate::Split {
            label: "approximation splits".to_string(),
            q: mat_of(&mc.certificate.sequence.q.matrix),
            section: mat_of(&sp.section.matrix),
        });
    }
    let detail = json!({
        "member": mc.member,
        "ext1_dim": mc.ext1_dim,
        "obstruction_degree": mc.obstruction.as_ref().map(|o| o.degree),
        "tower": tower_detail(&mc.certificate),
    });
    (detail, certs, mc.certificate.assumptions.clone())
}

fn approximation_payload(label: &str, a: &Approximation) -> (Value, Vec<Certificate>) {
    let mut certs = vec![ses_certificate(label, &a.sequence)];
    if let Some(w) = &a.extension_witness {
        certs.push(ses_certificate("extension witness", w));
    }
    let detail = json!({
        "sequence_dims": [
            a.sequence.kernel_module().dim(),
            a.sequence.middle_module().dim(),
            a.sequence.quotient_module().dim(),
        ],
        "has_witness": a.extension_witness.is_some(),
    });
    (detail, certs)
}

fn acyclicity_payload(
    role: &str,
    r: &AcyclicityReport,
) -> (Value, Vec<Certificate>, Vec<String>) {
    let mut certs = Vec::new();
    let mut assumptions = Vec::new();
    let evidence = match &r.evidence {
        AcyclicityEvidence::ContractingHomotopy(_) => "contracting_homotopy",
        AcyclicityEvidence::Membership(mc) => {
            let (_, mut inner, asum) = membership_payload(mc);
            certs.append(&mut inner);
            assumptions = asum;
            "membership"
        }
    };
    let detail = json!({
        "role": role,
        "member": r.member,
        "evidence": evidence,
        "dimension_sample": r
            .dimension_sample
            .iter()
            .map(|(d, rd)| json!({"dim": d, "verified": rd.to_string()}))
            .collect::<Vec<_>>(),
    });
    (detail, certs, assumptions)
}

/// Splits job tokens at a `/` separator: entity arguments before it, sample
/// module names after.
fn split_samples<'a>(tokens: &'a [&'a str]) -> (&'a [&'a str], &'a [&'a str]) {
    match tokens.iter().position(|t| *t == "/") {
        Some(k) => (&tokens[..k], &tokens[k + 1..]),
        None => (tokens, &[]),
    }
}

fn parse_count(tok: &str) -> Result<usize, JobFailure> {
    tok.parse::<usize>().map_err(|_| fail(format!("`{tok}` is not a count")))
}

fn default_samples(c: &CDGRing) -> Vec<Arc<Module>> {
    vec![Module::free(c.r(), Side::Left, 1, None)]
}

fn resolve_samples(
    wb: &Workbench,
    c: &CDGRing,
    names: &[&str],
) -> Result<Vec<Arc<Module>>, JobFailure> {
    if names.is_empty() {
        return Ok(default_samples(c));
    }
    names.iter().map(|n| wb.module(n).map(Arc::clone)).collect()
}

fn execute(wb: &Workbench, run: &str, opts: &RunOptions) -> JobOutcome {
    let tokens: Vec<&str> = run.split_whitespace().collect();
    let (&command, args) =
        tokens.split_first().ok_or_else(|| fail("empty job command"))?;
    match command {
        "validate" => {
            let mut entries = Vec::new();
            for (name, a) in &wb.algebras {
                a.validate().map_err(|e| fail(format!("algebra `{name}`: {e}")))?;
                entries.push(json!({"entity": format!("algebra `{name}`"), "ok": true}));
            }
            for (name, m) in &wb.modules {
                Module::new(
                    Arc::clone(m.algebra()),
                    m.side(),
                    (0..m.algebra().dim()).map(|b| m.action(b).clone()).collect(),
                    m.grading().map(<[i64]>::to_vec),
                )
                .map_err(|e| fail(format!("module `{name}`: {e}")))?;
                entries.push(json!({"entity": format!("module `{name}`"), "ok": true}));
            }
            for (name, f) in &wb.morphisms {
                ModuleMorphism::new(
                    Arc::clone(&f.source),
                    Arc::clone(&f.target),
                    f.matrix.clone(),
                )
                .map_err(|e| fail(format!("morphism `{name}`: {e}")))?;
                entries.push(json!({"entity": format!("morphism `{name}`"), "ok": true}));
            }
            for (name, c) in &wb.cdg_rings {
                CDGRing::new(Arc::clone(c.r()), c.d().clone(), c.h().clone())
                    .map_err(|e| fail(format!("cdg ring `{name}`: {e}")))?;
                entries.push(json!({"entity": format!("cdg ring `{name}`"), "ok": true}));
            }
            Ok(("pass".into(), json!({"checked": entries}), Vec::new(), Vec::new()))
        }

        "ext" | "tor" => {
            let [mn, nn, count] = args else {
                return Err(fail(format!("usage: {command} M N count")));
            };
            let m = wb.module(mn)?;
            let n = wb.module(nn)?;
            let count = parse_count(count)?;
            if !same_algebra(m.algebra(), n.algebra()) {
                return Err(fail(format!("`{mn}` and `{nn}` live over different algebras")));
            }
            if command == "ext" && m.side() != n.side() {
                return Err(fail(format!("ext needs same-side modules: `{mn}`, `{nn}`")));
            }
            if command == "tor" && (m.side() != Side::Right || n.side() != Side::Left) {
                return Err(fail(format!(
                    "tor pairs a right module with a left module: `{mn}` ⊗ `{nn}`"
                )));
            }
            let dims: Vec<i64> = (0..count)
                .map(|i| {
                    if command == "ext" {
                        ext_dim(m, n, i) as i64
                    } else {
                        tor_dim(m, n, i) as i64
                    }
                })
                .collect();
            let rows: Vec<Vec<i64>> =
                dims.iter().enumerate().map(|(i, d)| vec![i as i64, *d]).collect();
            let cert = Certificate::DimensionTable {
                label: format!("{command}({mn}, {nn}) in degrees 0..{count}"),
                rows,
            };
            Ok(("pass".into(), json!({"dims": dims}), vec![cert], Vec::new()))
        }

        "hom" => {
            let [mn, nn] = args else { return Err(fail("usage: hom M N")) };
            let m = wb.module(mn)?;
            let n = wb.module(nn)?;
            if !same_algebra(m.algebra(), n.algebra()) || m.side() != n.side() {
                return Err(fail(format!(
                    "hom needs same-side modules over one algebra: `{mn}`, `{nn}`"
                )));
            }
            let d = hom_dim(m, n);
            Ok(("pass".into(), json!({"dim": d}), Vec::new(), Vec::new()))
        }

        "salce" => {
            let [on, mn, dir] = args else {
                return Err(fail("usage: salce ORACLE M to-preenvelope|to-precover"));
            };
            let o = wb.oracle(on)?;
            let m = wb.module(mn)?;
            let apx = match *dir {
                "to-preenvelope" => salce_preenvelope_from_precover(&o, m),
                "to-precover" => salce_precover_from_preenvelope(&o, m),
                other => return Err(fail(format!("unknown direction `{other}`"))),
            }
            .map_err(|e| fail(e.to_string()))?;
            let (detail, certs) = approximation_payload("converted approximation", &apx);
            Ok(("pass".into(), detail, certs, o.assumptions().to_vec()))
        }

        "rd" | "cd" => {
            let [on, mn] = args else {
                return Err(fail(format!("usage: {command} ORACLE M")));
            };
            let o = wb.oracle(on)?;
            let m = wb.module(mn)?;
            let rd = if command == "rd" {
                rel_resolution_dim(&o, m, opts.cap)
            } else {
                rel_coresolution_dim(&o, m, opts.cap)
            }
            .map_err(|e| fail(e.to_string()))?;
            let detail = json!({
                "dimension": rd.to_string(),
                "exact": matches!(rd, RelDim::Exactly(_)),
                "cap": opts.cap,
            });
            Ok(("pass".into(), detail, Vec::new(), o.assumptions().to_vec()))
        }

        "q-tower" | "w-tower" => {
            let [rmn, on, k, mn] = args else {
                return Err(fail(format!("usage: {command} RINGMAP ORACLE k M")));
            };
            let rm = wb.ring_map(rmn)?;
            let o = wb.oracle(on)?;
            let k = parse_count(k)?;
            let m = wb.module(mn)?;
            let cert = if command == "q-tower" {
                let cfg = LiftedPairConfig::coinduced(rm.clone(), o, k)
                    .map_err(|e| fail(e.to_string()))?;
                q_preenvelope(&cfg, m, k)
            } else {
                let cfg = LiftedPairConfig::induced(rm.clone(), o, k)
                    .map_err(|e| fail(e.to_string()))?;
                w_precover(&cfg, m, k)
            }
            .map_err(|e| fail(e.to_string()))?;
            cert.verify().map_err(|e| fail(format!("certificate replay failed: {e}")))?;
            let mut certs = Vec::new();
            tower_certificates(&cert, &mut certs);
            Ok(("pass".into(), tower_detail(&cert), certs, cert.assumptions.clone()))
        }

        "membership" => {
            let [class, rmn, on, k, mn] = args else {
                return Err(fail("usage: membership ca|fa RINGMAP ORACLE k M"));
            };
            let rm = wb.ring_map(rmn)?;
            let o = wb.oracle(on)?;
            let k = parse_count(k)?;
            let m = wb.module(mn)?;
            let mc = match *class {
                "ca" => {
                    let cfg = LiftedPairConfig::coinduced(rm.clone(), o, k)
                        .map_err(|e| fail(e.to_string()))?;
                    membership_in_ca(&cfg, m)
                }
                "fa" => {
                    let cfg = LiftedPairConfig::induced(rm.clone(), o, k)
                        .map_err(|e| fail(e.to_string()))?;
                    membership_in_fa_dual(&cfg, m)
                }
                other => return Err(fail(format!("unknown membership class `{other}`"))),
            }
            .map_err(|e| fail(e.to_string()))?;
            let (detail, certs, assumptions) = membership_payload(&mc);
            Ok(("pass".into(), detail, certs, assumptions))
        }

        "bongartz" | "dual-bongartz" => {
            let (&mn, gens) = args
                .split_first()
                .ok_or_else(|| fail(format!("usage: {command} M S1 [S2 ...]")))?;
            let m = wb.module(mn)?;
            let list = gens
                .iter()
                .map(|g| wb.module(g).map(Arc::clone))
                .collect::<Result<Vec<_>, _>>()?;
            let cert = if command == "bongartz" {
                bongartz_preenvelope(&list, m)
            } else {
                dual_bongartz_precover(&list, m)
            }
            .map_err(|e| fail(e.to_string()))?;
            cert.verify().map_err(|e| fail(format!("certificate replay failed: {e}")))?;
            let mut certs = Vec::new();
            tower_certificates(&cert, &mut certs);
            Ok(("pass".into(), tower_detail(&cert), certs, cert.assumptions.clone()))
        }

        "tilting-check" | "cotilting-check" => {
            let ([tn, k], chain) = args.split_first_chunk::<2>().ok_or_else(|| {
                fail(format!("usage: {command} T n f0 .. fn"))
            })?;
            let t = wb.module(tn)?;
            let n = parse_count(k)?;
            let witness = chain
                .iter()
                .map(|f| wb.morphism(f).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            let report = if command == "tilting-check" {
                tilting_check(t, n, &witness)
            } else {
                cotilting_check(t, n, &witness)
            }
            .map_err(|e| fail(e.to_string()))?;
            let status = if report.pass { "pass" } else { "fail" };
            let detail = json!({
                "dimension": report.dimension.to_string(),
                "clause1_pass": report.clause1_pass,
                "ext_self_dims": report.ext_self_dims,
                "clause2_pass": report.clause2_pass,
                "chain_exact": report.chain_exact,
                "terms_in_class": report.terms_in_class,
                "end_ok": report.end_ok,
                "clause3_pass": report.clause3_pass,
                "pass": report.pass,
            });
            let certs = witness
                .iter()
                .enumerate()
                .map(|(i, f)| Certificate::DimensionTable {
                    label: format!("witness map {i}: {}→{}", f.source.dim(), f.target.dim()),
                    rows: vec![vec![f.matrix.rank() as i64]],
                })
                .collect();
            Ok((status.into(), detail, certs, report.assumptions.clone()))
        }

        "cdg-validate" => {
            let (&cn, rest) = args
                .split_first()
                .ok_or_else(|| fail("usage: cdg-validate CDGRING [M ...]"))?;
            let c = wb.cdg_ring(cn)?;
            CDGRing::new(Arc::clone(c.r()), c.d().clone(), c.h().clone())
                .map_err(|e| fail(format!("cdg ring `{cn}`: {e}")))?;
            let mut entries = vec![json!({
                "entity": format!("cdg ring `{cn}`"),
                "dim": c.r().dim(),
                "ok": true,
            })];
            for mn in rest {
                let x = wb.cdg_module(c, mn)?;
                entries.push(json!({
                    "entity": format!("cdg module `{mn}`"),
                    "dim": x.dim(),
                    "ok": true,
                }));
            }
            Ok(("pass".into(), json!({"checked": entries}), Vec::new(), Vec::new()))
        }

        "delta-ext" => {
            let [cn] = args else { return Err(fail("usage: delta-ext CDGRING")) };
            let c = wb.cdg_ring(cn)?;
            let ext = delta_extension(c);
            let dim_ok = ext.algebra.dim() == 2 * c.r().dim();
            let reg = Module::regular(c.r(), Side::Left);
            let theta =
                check_shift_identity(c, &ext, &reg).map_err(|e| fail(e.to_string()))?;
            let status = if dim_ok { "pass" } else { "fail" };
            let detail = json!({
                "dim": ext.algebra.dim(),
                "dim_doubles": dim_ok,
                "degrees": ext.algebra.degrees(),
                "labels": ext.algebra.labels(),
                "window": ext.algebra.window(),
            });
            let certs = vec![
                Certificate::Injection {
                    label: "base ring embeds".to_string(),
                    matrix: mat_of(&ext.embedding.matrix),
                },
                Certificate::Iso {
                    label: "coinduction is shifted induction on the regular module"
                        .to_string(),
                    matrix: mat_of(&theta.matrix),
                },
            ];
            Ok((status.into(), detail, certs, Vec::new()))
        }

        "totalize" => {
            let [cn, kn, ln, mn, fnm, gnm] = args else {
                return Err(fail("usage: totalize CDGRING K L M f g"));
            };
            let c = wb.cdg_ring(cn)?;
            let ext = delta_extension(c);
            let k = wb.cdg_module(c, kn)?;
            let l = wb.cdg_module(c, ln)?;
            let m = wb.cdg_module(c, mn)?;
            let f = wb.morphism(fnm)?;
            let g = wb.morphism(gnm)?;
            let s = CdgThreeTerm::new(c, k, l, m, f.matrix.clone(), g.matrix.clone())
                .map_err(|e| fail(e.to_string()))?;
            let report =
                verify_totalization_acyclicity(c, &ext, &s, opts.cap, &default_samples(c))
                    .map_err(|e| fail(e.to_string()))?;
            let status = if report.pass { "pass" } else { "fail" };
            let mut certs = vec![
                ses_certificate("structural extension", &report.sequence),
                Certificate::Homotopy {
                    label: "sub term contracts".to_string(),
                    t: mat_of(&report.sub_homotopy),
                    d: mat_of(
                        &report.sequence.kernel_module().rho_of(&ext.delta),
                    ),
                },
                Certificate::Homotopy {
                    label: "quotient term contracts".to_string(),
                    t: mat_of(&report.quotient_homotopy),
                    d: mat_of(
                        &report.sequence.quotient_module().rho_of(&ext.delta),
                    ),
                },
            ];
            let mut detail_map = serde_json::Map::new();
            detail_map.insert("pass".into(), json!(report.pass));
            detail_map.insert("totalization_dim".into(), json!(report.totalization.dim()));
            for (role, membership) in [
                ("contraacyclic", &report.contraacyclic),
                ("coacyclic", &report.coacyclic),
            ] {
                match membership {
                    Some(r) => {
                        let (d, mut cs, _) = acyclicity_payload(role, r);
                        certs.append(&mut cs);
                        detail_map.insert(role.into(), d);
                    }
                    None => {
                        detail_map.insert(
                            role.into(),
                            json!({"role": role, "refused": "dimension hypothesis unverified"}),
                        );
                    }
                }
            }
            Ok((status.into(), Value::Object(detail_map), certs, Vec::new()))
        }

        "contractible" => {
            let [cn, mn] = args else { return Err(fail("usage: contractible CDGRING M")) };
            let c = wb.cdg_ring(cn)?;
            let x = wb.cdg_module(c, mn)?;
            match contracting_homotopy(c, &x) {
                Some(t) => {
                    let cert = Certificate::Homotopy {
                        label: format!("contracting homotopy of `{mn}`"),
                        d: mat_of(&x.dm),
                        t: mat_of(&t),
                    };
                    Ok(("pass".into(), json!({"contractible": true}), vec![cert], Vec::new()))
                }
                None => {
                    Ok(("pass".into(), json!({"contractible": false}), Vec::new(), Vec::new()))
                }
            }
        }

        "contraacyclic" | "coacyclic" => {
            let (entity_args, sample_names) = split_samples(args);
            let [cn, mn] = entity_args else {
                return Err(fail(format!("usage: {command} CDGRING M [/ S1 ...]")));
            };
            let c = wb.cdg_ring(cn)?;
            let ext = delta_extension(c);
            let x = wb.cdg_module(c, mn)?;
            let samples = resolve_samples(wb, c, sample_names)?;
            let r = if command == "contraacyclic" {
                is_contraacyclic(c, &ext, &x, opts.cap, &samples)
            } else {
                is_coacyclic(c, &ext, &x, opts.cap, &samples)
            }
            .map_err(|e| fail(e.to_string()))?;
            let (detail, mut certs, assumptions) = acyclicity_payload(command, &r);
            if let AcyclicityEvidence::ContractingHomotopy(t) = &r.evidence {
                certs.push(Certificate::Homotopy {
                    label: format!("contracting homotopy of `{mn}`"),
                    d: mat_of(&x.dm),
                    t: mat_of(t),
                });
            }
            Ok(("pass".into(), detail, certs, assumptions))
        }

        "co-eq-contra-scan" => {
            let (entity_args, sample_names) = split_samples(args);
            let (&cn, xs) = entity_args
                .split_first()
                .ok_or_else(|| fail("usage: co-eq-contra-scan CDGRING X1 [X2 ...] [/ S1 ...]"))?;
            if xs.is_empty() {
                return Err(fail("co-eq-contra-scan needs at least one module"));
            }
            let c = wb.cdg_ring(cn)?;
            let ext = delta_extension(c);
            let mods = xs
                .iter()
                .map(|m| wb.cdg_module(c, m))
                .collect::<Result<Vec<_>, _>>()?;
            let samples = resolve_samples(wb, c, sample_names)?;
            let scan = co_contra_scan(c, &ext, &mods, opts.cap, &samples)
                .map_err(|e| fail(e.to_string()))?;
            let status = if scan.all_agree { "pass" } else { "fail" };
            let rows: Vec<Value> = xs
                .iter()
                .zip(&scan.rows)
                .map(|(name, row)| {
                    json!({
                        "module": name,
                        "dim": row.dim,
                        "contraacyclic": row.contraacyclic,
                        "coacyclic": row.coacyclic,
                    })
                })
                .collect();
            let detail = json!({"all_agree": scan.all_agree, "rows": rows});
            Ok((status.into(), detail, Vec::new(), Vec::new()))
        }

        other => Err(fail(format!("unknown command `{other}`"))),
    }
}

/// Runs the selected jobs (`None` = all) in document order. A failing or
/// erroring job never prevents later jobs from running; panics inside a job
/// are caught and reported as errors.
pub fn run_jobs(wb: &Workbench, selector: Option<&str>, opts: &RunOptions) -> Report {
    let mut jobs = Vec::new();
    for (name, run) in &wb.jobs {
        if let Some(sel) = selector {
            if sel != "all" && sel != name {
                continue;
            }
        }
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
            execute(wb, run, opts)
        }));
        let report = match outcome {
            Ok(Ok((status, detail, certificates, assumptions))) => JobReport {
                job: name.clone(),
                command: run.clone(),
                status,
                detail,
                certificates,
                assumptions,
            },
            Ok(Err(JobFailure(msg))) => JobReport {
                job: name.clone(),
                command: run.clone(),
                status: "error".to_string(),
                detail: json!({ "message": msg }),
                certificates: Vec::new(),
                assumptions: Vec::new(),
            },
            Err(payload) => {
                let msg = payload
                    .downcast_ref::<&str>()
                    .map(|s| (*s).to_string())
                    .or_else(|| payload.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "job panicked".to_string());
                JobReport {
                    job: name.clone(),
                    command: run.clone(),
                    status: "error".to_string(),
                    detail: json!({ "message": msg }),
                    certificates: Vec::new(),
                    assumptions: Vec::new(),
                }
            }
        };
        jobs.push(report);
    }
    Report { p: wb.p, jobs }
}

// ---------------------------------------------------------------------------
// Recheck: verify stored certificates without recomputation
// ---------------------------------------------------------------------------

/// Outcome of re-verifying one stored certificate.
#[derive(Serialize)]
pub struct RecheckRow {
    pub job: String,
    pub label: String,
    pub ok: bool,
}

fn recheck_certificate(p: u32, c: &Certificate) -> Result<bool, String> {
    Ok(match c {
        Certificate::Exact { i, q, .. } => {
            let im = mat_back(p, i)?;
            let qm = mat_back(p, q)?;
            if im.rows() != qm.cols() {
                return Err("sequence shapes do not compose".to_string());
            }
            qm.mul(&im).is_zero()
                && im.rank() == im.cols()
                && qm.rank() == qm.rows()
                && im.rank() + qm.rank() == im.rows()
        }
        Certificate::Split { q, section, .. } => {
            let qm = mat_back(p, q)?;
            let s = mat_back(p, section)?;
            qm.mul(&s) == FpMatrix::identity(p, qm.rows())
        }
        Certificate::Homotopy { d, t, .. } => {
            let dm = mat_back(p, d)?;
            let tm = mat_back(p, t)?;
            tm.mul(&dm).add(&dm.mul(&tm)) == FpMatrix::identity(p, dm.rows())
        }
        Certificate::Iso { matrix, .. } => {
            let m = mat_back(p, matrix)?;
            m.rows() == m.cols() && m.rank() == m.rows()
        }
        Certificate::Injection { matrix, .. } => {
            let m = mat_back(p, matrix)?;
            m.rank() == m.cols()
        }
        Certificate::Surjection { matrix, .. } => {
            let m = mat_back(p, matrix)?;
            m.rank() == m.rows()
        }
        Certificate::ZeroComposite { first, second, .. } => {
            let f = mat_back(p, first)?;
            let s = mat_back(p, second)?;
            s.mul(&f).is_zero()
        }
        // Recorded data, not an identity; nothing to verify.
        Certificate::DimensionTable { .. } => true,
    })
}

/// Re-verifies every certificate stored in a serialized report. This checks
/// the matrix identities alone — no document entities are rebuilt and no
/// homological computation is repeated — so it is fast and independent of
/// the code paths that produced the report.
pub fn recheck_report(text: &str) -> Result<Vec<RecheckRow>, DocError> {
    let report: Report = serde_json::from_str(text).map_err(|e| DocError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut rows = Vec::new();
    for job in &report.jobs {
        for cert in &job.certificates {
            let label = match cert {
                Certificate::Exact { label, .. }
                | Certificate::Split { label, .. }
                | Certificate::Homotopy { label, .. }
                | Certificate::Iso { label, .. }
                | Certificate::Injection { label, .. }
                | Certificate::Surjection { label, .. }
                | Certificate::ZeroComposite { label, .. }
                | Certificate::DimensionTable { label, .. } => label.clone(),
            };
            let ok = match recheck_certificate(report.p, cert) {
                Ok(v) => v,
                Err(_) => false,
            };
            rows.push(RecheckRow { job: job.job.clone(), label, ok });
        }
    }
    Ok(rows)
}
