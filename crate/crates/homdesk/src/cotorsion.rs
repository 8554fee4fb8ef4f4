//! Cotorsion pairs as operational oracles.
//!
//! A cotorsion pair (𝔉, ℭ) on the module category is presented here not as a
//! pair of symbolic classes but as an *oracle*: membership predicates for
//! both classes together with providers that produce special precovers
//! 0 → C′ → F → M → 0 (F ∈ 𝔉, C′ ∈ ℭ) and special preenvelopes
//! 0 → M → C → F′ → 0 (C ∈ ℭ, F′ ∈ 𝔉). Completeness of a pair is exactly
//! the statement that such providers exist, and the Salce conversions below
//! turn either provider into the other one.
//!
//! Every sequence an oracle hands out is certified on construction: the ends
//! are checked against the membership predicates whenever those are directly
//! decidable, and otherwise come with an explicit extension witness. A
//! failed certification aborts with the offending module attached.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{same_algebra, Algebra};
use crate::exactfield::FpMatrix;
use crate::modcat::{
    cogenerator_embedding, ext_dim, free_cover, hom_space, is_injective, is_projective, is_split,
    map_from_pushout, map_into_pullback, pullback, pushout, Module, ModuleMorphism, SesError,
    ShortExactSeq, Side,
};

/// Errors from oracle assembly, approximation requests, and certification.
#[derive(Debug, Error)]
pub enum CotorsionError {
    #[error("oracle `{oracle}` has no precover provider")]
    NoPrecoverProvider { oracle: String },
    #[error("oracle `{oracle}` has no preenvelope provider")]
    NoPreenvelopeProvider { oracle: String },
    #[error("oracle `{oracle}` cannot decide membership in {class}")]
    MembershipUndecidable { oracle: String, class: char },
    #[error(
        "oracle `{oracle}`: certification of the {role} (dim {dim}) failed: \
         the module is not in {class}"
    )]
    CertificationFailed {
        oracle: String,
        role: &'static str,
        class: char,
        dim: usize,
        module: Arc<Module>,
    },
    #[error("oracle `{oracle}` provider failed: {message}")]
    Provider { oracle: String, message: String },
    #[error("constructed sequence is not short exact: {0}")]
    Sequence(#[from] SesError),
    #[error("module belongs to a different category than oracle `{oracle}`")]
    CategoryMismatch { oracle: String },
    #[error("filtration chain is inconsistent at stage {stage}: {reason}")]
    BadFiltration { stage: usize, reason: &'static str },
}

/// A special approximation sequence together with the witness that certifies
/// its middle term when membership is not directly decidable.
///
/// For a precover the sequence is 0 → C′ → F → M → 0; for a preenvelope it
/// is 0 → M → C → F′ → 0. Salce-converted outputs carry an
/// `extension_witness` 0 → E → H → F → 0 (resp. 0 → C′ → H → I → 0) whose
/// outer terms lie in the relevant class, certifying the middle term H by
/// extension closure.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub sequence: ShortExactSeq,
    pub extension_witness: Option<ShortExactSeq>,
}

impl Approximation {
    pub fn plain(sequence: ShortExactSeq) -> Self {
        Approximation { sequence, extension_witness: None }
    }
}

/// Result of a capped relative (co)resolution-dimension computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelDim {
    Exactly(usize),
    /// The iteration did not terminate within the cap; the dimension is at
    /// least the stored value (= cap + 1).
    AtLeast(usize),
}

impl std::fmt::Display for RelDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelDim::Exactly(l) => write!(f, "{l}"),
            RelDim::AtLeast(l) => write!(f, ">={l}"),
        }
    }
}

type ProviderFn =
    Arc<dyn Fn(&Arc<Module>) -> Result<Approximation, CotorsionError> + Send + Sync>;

enum OracleKind {
    /// (Proj, All): 𝔉 = projectives, ℭ = everything.
    ProjAll,
    /// (All, Inj): 𝔉 = everything, ℭ = injectives.
    AllInj,
    /// Pair generated by a finite list 𝒮: ℭ = 𝒮^{⊥₁}, 𝔉 = ^{⊥₁}(𝒮^{⊥₁}).
    Generated { gens: Vec<Arc<Module>> },
    /// Pair cogenerated by a finite list 𝒯: 𝔉 = ^{⊥₁}𝒯, ℭ = (^{⊥₁}𝒯)^{⊥₁}.
    Cogenerated { cogens: Vec<Arc<Module>> },
}

/// Operational presentation of a complete cotorsion pair.
pub struct CotorsionOracle {
    name: String,
    algebra: Arc<Algebra>,
    side: Side,
    kind: OracleKind,
    precover_fn: Option<ProviderFn>,
    preenvelope_fn: Option<ProviderFn>,
    /// Assumptions the oracle's answers rely on beyond direct computation;
    /// surfaced verbatim in every report that cites this oracle.
    assumptions: Vec<String>,
}

/// The standing reduction used by generated/cogenerated oracles: class
/// membership is tested against single copies of the listed modules, which
/// decides orthogonality against arbitrary (co)products of them because Ext
/// out of (into) a finite-dimensional module commutes with those.
pub const KAPPA_REDUCTION: &str = "kappa-reduction: orthogonality is tested against single \
     copies of the listed modules; products and coproducts over larger \
     cardinals are reduced to kappa = 1 (finite-dimensionality assumption)";

impl CotorsionOracle {
    /// The builtin pair (Proj, All).
    pub fn proj_all(algebra: &Arc<Algebra>, side: Side) -> Self {
        CotorsionOracle {
            name: "(Proj, All)".to_string(),
            algebra: Arc::clone(algebra),
            side,
            kind: OracleKind::ProjAll,
            precover_fn: None,
            preenvelope_fn: None,
            assumptions: Vec::new(),
        }
    }

    /// The builtin pair (All, Inj).
    pub fn all_inj(algebra: &Arc<Algebra>, side: Side) -> Self {
        CotorsionOracle {
            name: "(All, Inj)".to_string(),
            algebra: Arc::clone(algebra),
            side,
            kind: OracleKind::AllInj,
            precover_fn: None,
            preenvelope_fn: None,
            assumptions: Vec::new(),
        }
    }

    /// The pair generated by 𝒮: ℭ = 𝒮^{⊥₁}. Membership in ℭ is decided by
    /// the finite Ext¹ grid against the generators; membership in 𝔉 needs a
    /// precover provider (the precover splits iff the module is in 𝔉).
    pub fn generated(name: impl Into<String>, gens: Vec<Arc<Module>>) -> Self {
        assert!(!gens.is_empty(), "a generated pair needs at least one generator");
        let algebra = Arc::clone(gens[0].algebra());
        let side = gens[0].side();
        assert!(
            gens.iter().all(|g| same_algebra(g.algebra(), &algebra) && g.side() == side),
            "generators must live in one module category"
        );
        CotorsionOracle {
            name: name.into(),
            algebra,
            side,
            kind: OracleKind::Generated { gens },
            precover_fn: None,
            preenvelope_fn: None,
            assumptions: vec![KAPPA_REDUCTION.to_string()],
        }
    }

    /// The pair cogenerated by 𝒯: 𝔉 = ^{⊥₁}𝒯. Membership in 𝔉 is decided by
    /// the finite Ext¹ grid against the cogenerators; membership in ℭ needs
    /// a preenvelope provider.
    pub fn cogenerated(name: impl Into<String>, cogens: Vec<Arc<Module>>) -> Self {
        assert!(!cogens.is_empty(), "a cogenerated pair needs at least one cogenerator");
        let algebra = Arc::clone(cogens[0].algebra());
        let side = cogens[0].side();
        assert!(
            cogens.iter().all(|c| same_algebra(c.algebra(), &algebra) && c.side() == side),
            "cogenerators must live in one module category"
        );
        CotorsionOracle {
            name: name.into(),
            algebra,
            side,
            kind: OracleKind::Cogenerated { cogens },
            precover_fn: None,
            preenvelope_fn: None,
            assumptions: vec![KAPPA_REDUCTION.to_string()],
        }
    }

    /// Installs a custom precover provider (used by tower constructions).
    pub fn with_precover(
        mut self,
        f: impl Fn(&Arc<Module>) -> Result<Approximation, CotorsionError> + Send + Sync + 'static,
    ) -> Self {
        self.precover_fn = Some(Arc::new(f));
        self
    }

    /// Installs a custom preenvelope provider.
    pub fn with_preenvelope(
        mut self,
        f: impl Fn(&Arc<Module>) -> Result<Approximation, CotorsionError> + Send + Sync + 'static,
    ) -> Self {
        self.preenvelope_fn = Some(Arc::new(f));
        self
    }

    /// Records an extra standing assumption, surfaced in reports.
    pub fn with_assumption(mut self, a: impl Into<String>) -> Self {
        self.assumptions.push(a.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn assumptions(&self) -> &[String] {
        &self.assumptions
    }

    /// The generator list 𝒮 when the pair is generated.
    pub fn generators(&self) -> Option<&[Arc<Module>]> {
        match &self.kind {
            OracleKind::Generated { gens } => Some(gens),
            _ => None,
        }
    }

    /// The cogenerator list 𝒯 when the pair is cogenerated.
    pub fn cogenerators(&self) -> Option<&[Arc<Module>]> {
        match &self.kind {
            OracleKind::Cogenerated { cogens } => Some(cogens),
            _ => None,
        }
    }

    fn check_category(&self, m: &Arc<Module>) -> Result<(), CotorsionError> {
        if same_algebra(m.algebra(), &self.algebra) && m.side() == self.side {
            Ok(())
        } else {
            Err(CotorsionError::CategoryMismatch { oracle: self.name.clone() })
        }
    }

    /// Membership in 𝔉 when decidable without invoking providers.
    fn direct_in_f(&self, m: &Arc<Module>) -> Option<bool> {
        match &self.kind {
            OracleKind::ProjAll => Some(is_projective(m)),
            OracleKind::AllInj => Some(true),
            OracleKind::Generated { .. } => None,
            OracleKind::Cogenerated { cogens } => {
                Some(cogens.iter().all(|t| ext_dim(m, t, 1) == 0))
            }
        }
    }

    /// Membership in ℭ when decidable without invoking providers.
    fn direct_in_c(&self, m: &Arc<Module>) -> Option<bool> {
        match &self.kind {
            OracleKind::ProjAll => Some(true),
            OracleKind::AllInj => Some(is_injective(m)),
            OracleKind::Generated { gens } => Some(gens.iter().all(|s| ext_dim(s, m, 1) == 0)),
            OracleKind::Cogenerated { .. } => None,
        }
    }

    /// Does M lie in 𝔉? For a generated pair this runs the precover and
    /// tests splitting: M ∈ 𝔉 iff its special precover splits, since 𝔉 is
    /// closed under direct summands and Ext¹(M, C′) = 0 makes the sequence
    /// split.
    pub fn in_f(&self, m: &Arc<Module>) -> Result<bool, CotorsionError> {
        self.check_category(m)?;
        if let Some(v) = self.direct_in_f(m) {
            return Ok(v);
        }
        if self.precover_available() {
            let apx = self.precover(m)?;
            Ok(is_split(&apx.sequence).is_some())
        } else {
            Err(CotorsionError::MembershipUndecidable { oracle: self.name.clone(), class: 'F' })
        }
    }

    /// Does M lie in ℭ? Dual of `in_f`.
    pub fn in_c(&self, m: &Arc<Module>) -> Result<bool, CotorsionError> {
        self.check_category(m)?;
        if let Some(v) = self.direct_in_c(m) {
            return Ok(v);
        }
        if self.preenvelope_available() {
            let apx = self.preenvelope(m)?;
            Ok(is_split(&apx.sequence).is_some())
        } else {
            Err(CotorsionError::MembershipUndecidable { oracle: self.name.clone(), class: 'C' })
        }
    }

    fn precover_available(&self) -> bool {
        matches!(self.kind, OracleKind::ProjAll)
            || self.precover_fn.is_some()
            || self.preenvelope_primary()
    }

    fn preenvelope_available(&self) -> bool {
        matches!(self.kind, OracleKind::AllInj)
            || self.preenvelope_fn.is_some()
            || self.precover_primary()
    }

    /// True when a precover source exists that is not itself the Salce
    /// fallback (prevents mutual recursion between the two fallbacks).
    fn precover_primary(&self) -> bool {
        matches!(self.kind, OracleKind::ProjAll) || self.precover_fn.is_some()
    }

    fn preenvelope_primary(&self) -> bool {
        matches!(self.kind, OracleKind::AllInj) || self.preenvelope_fn.is_some()
    }

    /// A special precover 0 → C′ → F → M → 0, certified on construction.
    pub fn precover(&self, m: &Arc<Module>) -> Result<Approximation, CotorsionError> {
        self.check_category(m)?;
        let apx = if let Some(f) = &self.precover_fn {
            f(m)?
        } else if matches!(self.kind, OracleKind::ProjAll) {
            Approximation::plain(free_cover(m))
        } else if self.preenvelope_primary() {
            salce_precover_from_preenvelope(self, m)?
        } else {
            return Err(CotorsionError::NoPrecoverProvider { oracle: self.name.clone() });
        };
        self.certify(&apx, true)?;
        Ok(apx)
    }

    /// A special preenvelope 0 → M → C → F′ → 0, certified on construction.
    pub fn preenvelope(&self, m: &Arc<Module>) -> Result<Approximation, CotorsionError> {
        self.check_category(m)?;
        let apx = if let Some(f) = &self.preenvelope_fn {
            f(m)?
        } else if matches!(self.kind, OracleKind::AllInj) {
            Approximation::plain(ShortExactSeq::from_injection(cogenerator_embedding(m)))
        } else if self.precover_primary() {
            salce_preenvelope_from_precover(self, m)?
        } else {
            return Err(CotorsionError::NoPreenvelopeProvider { oracle: self.name.clone() });
        };
        self.certify(&apx, false)?;
        Ok(apx)
    }

    /// Certifies the ends of an approximation against the directly decidable
    /// membership predicates. Ends whose predicate needs a provider are
    /// covered by the extension witness carried on the approximation (or by
    /// the provider's own certification) and are not re-derived here, which
    /// keeps certification non-recursive.
    fn certify(&self, apx: &Approximation, precover: bool) -> Result<(), CotorsionError> {
        let (f_end, c_end, f_role, c_role) = if precover {
            (
                apx.sequence.middle_module(),
                apx.sequence.kernel_module(),
                "precover middle term",
                "precover kernel",
            )
        } else {
            (
                apx.sequence.quotient_module(),
                apx.sequence.middle_module(),
                "preenvelope cokernel",
                "preenvelope middle term",
            )
        };
        if self.direct_in_f(f_end) == Some(false) {
            return Err(CotorsionError::CertificationFailed {
                oracle: self.name.clone(),
                role: f_role,
                class: 'F',
                dim: f_end.dim(),
                module: Arc::clone(f_end),
            });
        }
        if self.direct_in_c(c_end) == Some(false) {
            return Err(CotorsionError::CertificationFailed {
                oracle: self.name.clone(),
                role: c_role,
                class: 'C',
                dim: c_end.dim(),
                module: Arc::clone(c_end),
            });
        }
        Ok(())
    }
}

/// Converts a preenvelope provider into a special precover of M.
///
/// Construction: take the free cover E ↠ M with kernel N (free modules lie
/// in 𝔉 for every cotorsion pair), a special preenvelope 0 → N → C → F → 0,
/// and the pushout H of N → E against N → C. The result is
/// 0 → C → H → M → 0; the returned witness 0 → E → H → F → 0 has free E and
/// F ∈ 𝔉, so H ∈ 𝔉 by extension closure.
pub fn salce_precover_from_preenvelope(
    o: &CotorsionOracle,
    m: &Arc<Module>,
) -> Result<Approximation, CotorsionError> {
    o.check_category(m)?;
    let cover = free_cover(m); // 0 → N → E → M → 0
    let n = cover.kernel_module();
    let env = o.preenvelope(n)?; // 0 → N → C → F → 0
    let c = env.sequence.middle_module();
    let f = env.sequence.quotient_module();
    let (_h, j_e, j_c) = pushout(&cover.i, &env.sequence.i);
    // H → M kills C and restricts to the cover on E.
    let q_h = map_from_pushout(&j_e, &j_c, &cover.q, &ModuleMorphism::zero_map(c, m));
    // H → F kills E and restricts to the envelope quotient on C.
    let w_q = map_from_pushout(
        &j_e,
        &j_c,
        &ModuleMorphism::zero_map(cover.middle_module(), f),
        &env.sequence.q,
    );
    let witness = ShortExactSeq::new(j_e, w_q)?;
    let sequence = ShortExactSeq::new(j_c, q_h)?;
    debug_assert_eq!(
        sequence.middle_module().dim(),
        witness.kernel_module().dim() + witness.quotient_module().dim()
    );
    Ok(Approximation { sequence, extension_witness: Some(witness) })
}

/// Converts a precover provider into a special preenvelope of M.
///
/// Dual construction: embed M into a power of the injective cogenerator,
/// 0 → M → I → N → 0 (injectives lie in ℭ for every cotorsion pair), take a
/// special precover 0 → C′ → F → N → 0, and the pullback H of I → N against
/// F → N. The result is 0 → M → H → F → 0; the witness 0 → C′ → H → I → 0
/// certifies H ∈ ℭ by extension closure.
pub fn salce_preenvelope_from_precover(
    o: &CotorsionOracle,
    m: &Arc<Module>,
) -> Result<Approximation, CotorsionError> {
    o.check_category(m)?;
    let emb = ShortExactSeq::from_injection(cogenerator_embedding(m)); // 0 → M → I → N → 0
    let n = emb.quotient_module();
    let cov = o.precover(n)?; // 0 → C′ → F → N → 0
    let c_prime = cov.sequence.kernel_module();
    let (_h, p_i, p_f) = pullback(&emb.q, &cov.sequence.q);
    // M → H lifts the embedding into I with zero F-component.
    let i_h = map_into_pullback(
        &p_i,
        &p_f,
        &emb.i,
        &ModuleMorphism::zero_map(m, cov.sequence.middle_module()),
    );
    // C′ → H lifts the precover kernel with zero I-component.
    let w_i = map_into_pullback(
        &p_i,
        &p_f,
        &ModuleMorphism::zero_map(c_prime, emb.middle_module()),
        &cov.sequence.i,
    );
    let witness = ShortExactSeq::new(w_i, p_i)?;
    let sequence = ShortExactSeq::new(i_h, p_f)?;
    debug_assert_eq!(
        sequence.middle_module().dim(),
        witness.kernel_module().dim() + witness.quotient_module().dim()
    );
    Ok(Approximation { sequence, extension_witness: Some(witness) })
}

/// Grid of dim Ext¹(F, C) over the sample; the pair is orthogonal on the
/// sample iff every entry vanishes.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub grid: Vec<Vec<usize>>,
    pub pass: bool,
    pub assumptions: Vec<String>,
}

pub fn check_orthogonal(
    o: &CotorsionOracle,
    f_sample: &[Arc<Module>],
    c_sample: &[Arc<Module>],
) -> OrthogonalityReport {
    let grid: Vec<Vec<usize>> = f_sample
        .iter()
        .map(|f| c_sample.iter().map(|c| ext_dim(f, c, 1)).collect())
        .collect();
    let pass = grid.iter().all(|row| row.iter().all(|&d| d == 0));
    OrthogonalityReport { grid, pass, assumptions: o.assumptions().to_vec() }
}

/// Hereditarity evidence on a finite sample: the Ext² grid must vanish,
/// kernels of sampled surjections between 𝔉-members must stay in 𝔉
/// (resolving), and cokernels of sampled injections between ℭ-members must
/// stay in ℭ (coresolving).
#[derive(Clone, Debug)]
pub struct HereditaryReport {
    pub ext2_grid: Vec<Vec<usize>>,
    pub ext2_pass: bool,
    /// Number of surjections F_i ↠ F_j examined.
    pub kernel_cases: usize,
    pub kernel_closure_pass: bool,
    /// Number of injections C_i ↪ C_j examined.
    pub cokernel_cases: usize,
    pub cokernel_closure_pass: bool,
    pub pass: bool,
    pub assumptions: Vec<String>,
}

/// Deterministic sample of morphisms between two modules: every hom-basis
/// element plus the sum of all basis elements.
fn sampled_homs(m: &Arc<Module>, n: &Arc<Module>) -> Vec<ModuleMorphism> {
    let basis = hom_space(m, n);
    let mut out = basis.clone();
    if basis.len() > 1 {
        let p = m.p();
        let mut total = FpMatrix::zero(p, n.dim(), m.dim());
        for b in &basis {
            total = total.add(&b.matrix);
        }
        out.push(ModuleMorphism::new_internal(Arc::clone(m), Arc::clone(n), total));
    }
    out
}

pub fn check_hereditary(
    o: &CotorsionOracle,
    f_sample: &[Arc<Module>],
    c_sample: &[Arc<Module>],
) -> Result<HereditaryReport, CotorsionError> {
    let ext2_grid: Vec<Vec<usize>> = f_sample
        .iter()
        .map(|f| c_sample.iter().map(|c| ext_dim(f, c, 2)).collect())
        .collect();
    let ext2_pass = ext2_grid.iter().all(|row| row.iter().all(|&d| d == 0));

    let mut kernel_cases = 0;
    let mut kernel_closure_pass = true;
    for fi in f_sample {
        for fj in f_sample {
            for h in sampled_homs(fi, fj) {
                if !h.is_surjective_map() {
                    continue;
                }
                kernel_cases += 1;
                let (k, _incl) = h.kernel();
                if !o.in_f(&k)? {
                    kernel_closure_pass = false;
                }
            }
        }
    }

    let mut cokernel_cases = 0;
    let mut cokernel_closure_pass = true;
    for ci in c_sample {
        for cj in c_sample {
            for h in sampled_homs(ci, cj) {
                if !h.is_injective_map() {
                    continue;
                }
                cokernel_cases += 1;
                let (c, _proj, _sect) = h.cokernel();
                if !o.in_c(&c)? {
                    cokernel_closure_pass = false;
                }
            }
        }
    }

    let pass = ext2_pass && kernel_closure_pass && cokernel_closure_pass;
    Ok(HereditaryReport {
        ext2_grid,
        ext2_pass,
        kernel_cases,
        kernel_closure_pass,
        cokernel_cases,
        cokernel_closure_pass,
        pass,
        assumptions: o.assumptions().to_vec(),
    })
}

/// 𝔉-resolution dimension of M, capped. Iterates special precovers
/// M ← F₀ ← F₁ ← … and returns the first l whose kernel C_l lies in 𝔉; for
/// a hereditary complete pair that first l is the true relative dimension.
pub fn rel_resolution_dim(
    o: &CotorsionOracle,
    m: &Arc<Module>,
    cap: usize,
) -> Result<RelDim, CotorsionError> {
    if o.in_f(m)? {
        return Ok(RelDim::Exactly(0));
    }
    let mut current = Arc::clone(m);
    for l in 1..=cap {
        let apx = o.precover(&current)?;
        let kernel = Arc::clone(apx.sequence.kernel_module());
        if o.in_f(&kernel)? {
            return Ok(RelDim::Exactly(l));
        }
        current = kernel;
    }
    Ok(RelDim::AtLeast(cap + 1))
}

/// ℭ-coresolution dimension of N, capped; dual of `rel_resolution_dim`
/// (iterates special preenvelope cokernels).
pub fn rel_coresolution_dim(
    o: &CotorsionOracle,
    n: &Arc<Module>,
    cap: usize,
) -> Result<RelDim, CotorsionError> {
    if o.in_c(n)? {
        return Ok(RelDim::Exactly(0));
    }
    let mut current = Arc::clone(n);
    for l in 1..=cap {
        let apx = o.preenvelope(&current)?;
        let cokernel = Arc::clone(apx.sequence.quotient_module());
        if o.in_c(&cokernel)? {
            return Ok(RelDim::Exactly(l));
        }
        current = cokernel;
    }
    Ok(RelDim::AtLeast(cap + 1))
}

/// Finite instance of the Eklof lemma: if X carries a finite filtration
/// 0 = X₀ ⊂ X₁ ⊂ … ⊂ X_n = X with layers L_i = X_{i+1}/X_i, and
/// Ext¹(L_i, C) = 0 for every layer, then Ext¹(X, C) = 0.
#[derive(Clone, Debug)]
pub struct EklofReport {
    /// dim Ext¹(L_i, C) per layer (dual check: dim Ext¹(F, L_i)).
    pub layer_ext_dims: Vec<usize>,
    pub hypothesis_holds: bool,
    /// dim Ext¹(X, C) for the filtered module (dual: dim Ext¹(F, X)).
    pub filtered_ext_dim: usize,
    /// The implication "hypothesis ⇒ vanishing" holds.
    pub pass: bool,
}

/// Validates the filtration chain (stage i is 0 → X_i → X_{i+1} → L_i → 0,
/// starting from X₀ = 0) and checks the Eklof implication against C.
pub fn eklof_finite_check(
    filtration: &[ShortExactSeq],
    c: &Arc<Module>,
) -> Result<EklofReport, CotorsionError> {
    if filtration.is_empty() {
        return Err(CotorsionError::BadFiltration { stage: 0, reason: "empty filtration" });
    }
    if filtration[0].kernel_module().dim() != 0 {
        return Err(CotorsionError::BadFiltration {
            stage: 0,
            reason: "filtration must start at the zero module",
        });
    }
    for (i, pair) in filtration.windows(2).enumerate() {
        if **pair[0].middle_module() != **pair[1].kernel_module() {
            return Err(CotorsionError::BadFiltration {
                stage: i + 1,
                reason: "middle of one stage must be the kernel of the next",
            });
        }
    }
    let layer_ext_dims: Vec<usize> =
        filtration.iter().map(|s| ext_dim(s.quotient_module(), c, 1)).collect();
    let hypothesis_holds = layer_ext_dims.iter().all(|&d| d == 0);
    let x = filtration.last().unwrap().middle_module();
    let filtered_ext_dim = ext_dim(x, c, 1);
    let pass = !hypothesis_holds || filtered_ext_dim == 0;
    Ok(EklofReport { layer_ext_dims, hypothesis_holds, filtered_ext_dim, pass })
}

/// Dual finite Eklof check: stage i of the cofiltration is
/// 0 → L_i → G_{i+1} → G_i → 0, starting from G₀ = 0 and ending at X; if
/// Ext¹(F, L_i) = 0 for every layer then Ext¹(F, X) = 0.
pub fn dual_eklof_finite_check(
    cofiltration: &[ShortExactSeq],
    f: &Arc<Module>,
) -> Result<EklofReport, CotorsionError> {
    if cofiltration.is_empty() {
        return Err(CotorsionError::BadFiltration { stage: 0, reason: "empty cofiltration" });
    }
    if cofiltration[0].quotient_module().dim() != 0 {
        return Err(CotorsionError::BadFiltration {
            stage: 0,
            reason: "cofiltration must start at the zero module",
        });
    }
    for (i, pair) in cofiltration.windows(2).enumerate() {
        if **pair[0].middle_module() != **pair[1].quotient_module() {
            return Err(CotorsionError::BadFiltration {
                stage: i + 1,
                reason: "middle of one stage must be the quotient of the next",
            });
        }
    }
    let layer_ext_dims: Vec<usize> =
        cofiltration.iter().map(|s| ext_dim(f, s.kernel_module(), 1)).collect();
    let hypothesis_holds = layer_ext_dims.iter().all(|&d| d == 0);
    let x = cofiltration.last().unwrap().middle_module();
    let filtered_ext_dim = ext_dim(f, x, 1);
    let pass = !hypothesis_holds || filtered_ext_dim == 0;
    Ok(EklofReport { layer_ext_dims, hypothesis_holds, filtered_ext_dim, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        a2, a3_zero_relation, dual_numbers, one_dim_module, prime_field, random_module,
        seeded_rng, submodule_generated, vertex_simple,
    };
    use crate::modcat::{dual, is_split, Module};
    use proptest::prelude::*;

    fn trivial_over_dual(p: u32) -> (Arc<Algebra>, Arc<Module>) {
        let a = dual_numbers(p);
        let k = one_dim_module(&a, Side::Left, &[1, 0]).unwrap();
        (a, k)
    }

    /// The i-th standard coordinate column of 𝔽_p^dim.
    fn coord(p: u32, dim: usize, i: usize) -> FpMatrix {
        let mut v = FpMatrix::zero(p, dim, 1);
        v.set(i, 0, 1);
        v
    }

    #[test]
    fn proj_all_precover_is_free_cover_and_certified() {
        let (a, k) = trivial_over_dual(5);
        let o = CotorsionOracle::proj_all(&a, Side::Left);
        let apx = o.precover(&k).unwrap();
        // Free cover of a 1-dim module over the 2-dim algebra: middle dim 2.
        assert_eq!(apx.sequence.middle_module().dim(), 2);
        assert_eq!(apx.sequence.kernel_module().dim(), 1);
        assert!(apx.extension_witness.is_none());
        assert!(o.in_f(apx.sequence.middle_module()).unwrap());
        assert!(o.in_c(apx.sequence.kernel_module()).unwrap());
    }

    #[test]
    fn all_inj_preenvelope_is_cogenerator_embedding() {
        let (a, k) = trivial_over_dual(3);
        let o = CotorsionOracle::all_inj(&a, Side::Left);
        let apx = o.preenvelope(&k).unwrap();
        assert_eq!(apx.sequence.kernel_module().dim(), 1);
        // k embeds into one copy of D(A), which has dim 2.
        assert_eq!(apx.sequence.middle_module().dim(), 2);
        assert!(o.in_c(apx.sequence.middle_module()).unwrap());
    }

    #[test]
    fn salce_preenvelope_for_proj_all_over_dual_numbers() {
        // (Proj, All) over k[x]/x², M = k: embed k into D(A) (dim 2), the
        // cokernel is k again, its free cover is A (dim 2), and the pullback
        // has dim 2 + 2 − 1 = 3, giving 0 → k → H → A → 0.
        let (a, k) = trivial_over_dual(5);
        let o = CotorsionOracle::proj_all(&a, Side::Left);
        let apx = o.preenvelope(&k).unwrap();
        assert_eq!(apx.sequence.kernel_module().dim(), 1);
        assert_eq!(apx.sequence.middle_module().dim(), 3);
        assert_eq!(apx.sequence.quotient_module().dim(), 2);
        // The cokernel must be projective (it is free here).
        assert!(is_projective(apx.sequence.quotient_module()));
        // Witness 0 → C′ → H → I → 0 with I the injective cogenerator copy.
        let w = apx.extension_witness.expect("salce output carries a witness");
        assert_eq!(w.quotient_module().dim(), 2);
        assert_eq!(w.kernel_module().dim() + w.quotient_module().dim(), 3);
        assert!(is_injective(w.quotient_module()));
    }

    #[test]
    fn salce_precover_for_all_inj_over_dual_numbers() {
        // (All, Inj) over k[x]/x², M = k: free cover A ↠ k has kernel k,
        // whose injective preenvelope is 0 → k → D(A) → k → 0; the pushout
        // gives 0 → D(A) → H → k → 0 with dim H = 3.
        let (a, k) = trivial_over_dual(3);
        let o = CotorsionOracle::all_inj(&a, Side::Left);
        let apx = o.precover(&k).unwrap();
        assert_eq!(apx.sequence.kernel_module().dim(), 2);
        assert_eq!(apx.sequence.middle_module().dim(), 3);
        assert_eq!(apx.sequence.quotient_module().dim(), 1);
        assert!(is_injective(apx.sequence.kernel_module()));
        // Witness 0 → E → H → F → 0: dim identity dim H = dim E + dim F.
        let w = apx.extension_witness.expect("salce output carries a witness");
        assert_eq!(
            apx.sequence.middle_module().dim(),
            w.kernel_module().dim() + w.quotient_module().dim()
        );
    }

    #[test]
    fn salce_precover_splits_when_module_is_already_in_f() {
        // M = A ∈ Proj: 0 → C → H → A → 0 splits since Ext¹(A, C) = 0.
        let a = dual_numbers(5);
        let m = Module::regular(&a, Side::Left);
        let o = CotorsionOracle::proj_all(&a, Side::Left);
        let apx = o.precover(&m).unwrap();
        assert!(is_split(&apx.sequence).is_some());
    }

    #[test]
    fn salce_preenvelope_splits_when_module_is_already_in_c() {
        // M = D(A) ∈ Inj: 0 → D(A) → H → F′ → 0 splits.
        let a = dual_numbers(3);
        let m = dual(&Module::regular(&a, Side::Right));
        let o = CotorsionOracle::all_inj(&a, Side::Left);
        let apx = o.preenvelope(&m).unwrap();
        assert!(is_split(&apx.sequence).is_some());
    }

    #[test]
    fn orthogonality_reports_for_builtin_pairs() {
        let a = a2(3);
        let s1 = vertex_simple(&a, 0, Side::Left);
        let s2 = vertex_simple(&a, 1, Side::Left);
        let reg = Module::regular(&a, Side::Left);
        let da = dual(&Module::regular(&a, Side::Right));

        let proj_all = CotorsionOracle::proj_all(&a, Side::Left);
        let rep = check_orthogonal(&proj_all, &[Arc::clone(&reg)], &[s1.clone(), s2.clone()]);
        assert!(rep.pass);

        let all_inj = CotorsionOracle::all_inj(&a, Side::Left);
        let rep = check_orthogonal(&all_inj, &[s1.clone(), s2.clone(), reg], &[da]);
        assert!(rep.pass);

        // Non-orthogonal sample: Ext¹(S₁, S₂) = k over A₂.
        let rep = check_orthogonal(&proj_all, &[s1], &[s2]);
        assert_eq!(rep.grid, vec![vec![1]]);
        assert!(!rep.pass);
    }

    #[test]
    fn builtin_pairs_are_hereditary_on_samples() {
        let a = a2(3);
        let s1 = vertex_simple(&a, 0, Side::Left);
        let s2 = vertex_simple(&a, 1, Side::Left);
        let reg = Module::regular(&a, Side::Left);
        let da = dual(&Module::regular(&a, Side::Right));

        let proj_all = CotorsionOracle::proj_all(&a, Side::Left);
        let rep = check_hereditary(
            &proj_all,
            &[Arc::clone(&reg)],
            &[s1.clone(), s2.clone(), Arc::clone(&da)],
        )
        .unwrap();
        assert!(rep.pass, "report: {rep:?}");
        assert!(rep.kernel_cases > 0, "sample should contain at least one surjection");

        let all_inj = CotorsionOracle::all_inj(&a, Side::Left);
        let rep = check_hereditary(&all_inj, &[s1, s2, reg], &[da]).unwrap();
        assert!(rep.pass, "report: {rep:?}");
    }

    #[test]
    fn resolution_dimension_over_a2_and_dual_numbers() {
        let a = a2(3);
        let o = CotorsionOracle::proj_all(&a, Side::Left);
        // S at the arrow's source vertex: 0 → P → P → S exact, S not
        // projective, so rd = 1.
        let s1 = vertex_simple(&a, 0, Side::Left);
        assert_eq!(rel_resolution_dim(&o, &s1, 4).unwrap(), RelDim::Exactly(1));
        // S at the target vertex is projective: rd = 0.
        let s2 = vertex_simple(&a, 1, Side::Left);
        assert_eq!(rel_resolution_dim(&o, &s2, 4).unwrap(), RelDim::Exactly(0));

        // Dual numbers: syzygies of k are periodic, never projective.
        let (ad, k) = trivial_over_dual(2);
        let od = CotorsionOracle::proj_all(&ad, Side::Left);
        assert_eq!(rel_resolution_dim(&od, &k, 3).unwrap(), RelDim::AtLeast(4));
        assert_eq!(rel_resolution_dim(&od, &k, 5).unwrap(), RelDim::AtLeast(6));
    }

    #[test]
    fn coresolution_dimension_over_a2_and_field() {
        let a = a2(3);
        let o = CotorsionOracle::all_inj(&a, Side::Left);
        // S₂ = P₂ is not injective over A₂ and embeds with injective
        // cokernel (global dimension 1): cd = 1.
        let s2 = vertex_simple(&a, 1, Side::Left);
        assert_eq!(rel_coresolution_dim(&o, &s2, 4).unwrap(), RelDim::Exactly(1));
        // S₁ = I₁ is injective: cd = 0.
        let s1 = vertex_simple(&a, 0, Side::Left);
        assert_eq!(rel_coresolution_dim(&o, &s1, 4).unwrap(), RelDim::Exactly(0));

        // Over a field everything is injective.
        let f = prime_field(7);
        let of = CotorsionOracle::all_inj(&f, Side::Left);
        let v = one_dim_module(&f, Side::Left, &[1]).unwrap();
        assert_eq!(rel_coresolution_dim(&of, &v, 4).unwrap(), RelDim::Exactly(0));
    }

    #[test]
    fn builtin_dimensions_match_homological_dimensions_at_gldim_two() {
        // A₃ with the composite relation has global dimension 2:
        // pd S₁ = 2, pd S₂ = 1, pd S₃ = 0, mirrored by injective dimensions
        // id S₃ = 2, id S₂ = 1, id S₁ = 0.
        let a = a3_zero_relation(3);
        let proj_all = CotorsionOracle::proj_all(&a, Side::Left);
        let all_inj = CotorsionOracle::all_inj(&a, Side::Left);
        let s: Vec<_> = (0..3).map(|v| vertex_simple(&a, v, Side::Left)).collect();

        assert_eq!(rel_resolution_dim(&proj_all, &s[0], 4).unwrap(), RelDim::Exactly(2));
        assert_eq!(rel_resolution_dim(&proj_all, &s[1], 4).unwrap(), RelDim::Exactly(1));
        assert_eq!(rel_resolution_dim(&proj_all, &s[2], 4).unwrap(), RelDim::Exactly(0));

        assert_eq!(rel_coresolution_dim(&all_inj, &s[2], 4).unwrap(), RelDim::Exactly(2));
        assert_eq!(rel_coresolution_dim(&all_inj, &s[1], 4).unwrap(), RelDim::Exactly(1));
        assert_eq!(rel_coresolution_dim(&all_inj, &s[0], 4).unwrap(), RelDim::Exactly(0));

        // Cross-check against Ext vanishing: the relation forces a nonzero
        // Ext² from S₁ to S₃ and nothing in degree 3.
        assert_eq!(ext_dim(&s[0], &s[2], 2), 1);
        assert_eq!(ext_dim(&s[0], &s[2], 3), 0);
    }

    #[test]
    fn generated_and_cogenerated_membership_grids() {
        let a = a2(3);
        let s1 = vertex_simple(&a, 0, Side::Left);
        let s2 = vertex_simple(&a, 1, Side::Left);
        let reg = Module::regular(&a, Side::Left);
        let p1 = submodule_generated(&reg, &[coord(3, 3, 0)]).0;
        assert_eq!(p1.dim(), 2);

        // Cogenerated by S₂: 𝔉 = ^{⊥₁}S₂. Ext¹(S₁, S₂) = k, so S₁ ∉ 𝔉,
        // while P₁ is projective hence in 𝔉.
        let o = CotorsionOracle::cogenerated("perp-of-S2", vec![s2.clone()]);
        assert!(!o.in_f(&s1).unwrap());
        assert!(o.in_f(&p1).unwrap());
        // ℭ needs a provider: undecidable by design.
        assert!(matches!(
            o.in_c(&s1),
            Err(CotorsionError::MembershipUndecidable { class: 'C', .. })
        ));
        // κ-reduction is a recorded assumption and reaches reports.
        let rep = check_orthogonal(&o, &[p1.clone()], &[s2.clone()]);
        assert!(rep.assumptions.iter().any(|s| s.contains("kappa")));

        // Generated by S₁: ℭ = S₁^{⊥₁}. Ext¹(S₁, S₂) = k, so S₂ ∉ ℭ;
        // Ext¹(S₁, S₁) = 0, so S₁ ∈ ℭ.
        let o = CotorsionOracle::generated("S1-perp", vec![s1.clone()]);
        assert!(!o.in_c(&s2).unwrap());
        assert!(o.in_c(&s1).unwrap());
        assert!(matches!(o.precover(&s1), Err(CotorsionError::NoPrecoverProvider { .. })));
    }

    #[test]
    fn custom_provider_and_certification_failure() {
        // A deliberately wrong provider for a cogenerated pair: it returns
        // 0 → 0 → M → M → 0, whose middle term is the module itself. For
        // M = S₁ ∉ ^{⊥₁}S₂ certification must abort with the offending
        // module attached.
        let a = a2(3);
        let s1 = vertex_simple(&a, 0, Side::Left);
        let s2 = vertex_simple(&a, 1, Side::Left);
        let o = CotorsionOracle::cogenerated("broken", vec![s2]).with_precover(|m| {
            let z = Module::zero(m.algebra(), m.side());
            let i = ModuleMorphism::zero_map(&z, m);
            let q = ModuleMorphism::identity(m);
            Ok(Approximation::plain(ShortExactSeq::new(i, q).unwrap()))
        });
        let err = o.precover(&s1).unwrap_err();
        match err {
            CotorsionError::CertificationFailed { class, dim, module, .. } => {
                assert_eq!(class, 'F');
                assert_eq!(dim, 1);
                assert_eq!(*module, *s1);
            }
            other => panic!("expected certification failure, got {other}"),
        }
    }

    #[test]
    fn eklof_finite_check_on_a2_filtration() {
        // P₁ over A₂ is filtered as 0 ⊂ S₂ ⊂ P₁ with layers S₂, S₁.
        let a = a2(3);
        let reg = Module::regular(&a, Side::Left);
        let (p1, _incl) = submodule_generated(&reg, &[coord(3, 3, 0)]);
        // The radical of P₁ is spanned by the arrow (coordinate 1 in P₁).
        let (rad, rad_incl) = submodule_generated(&p1, &[coord(3, 2, 1)]);
        assert_eq!(rad.dim(), 1);
        let z = Module::zero(&a, Side::Left);
        let stage0 = ShortExactSeq::new(
            ModuleMorphism::zero_map(&z, &rad),
            ModuleMorphism::identity(&rad),
        )
        .unwrap();
        let stage1 = ShortExactSeq::from_injection(rad_incl);
        let filtration = [stage0, stage1];

        // C injective: hypothesis holds, conclusion verified.
        let i1 = vertex_simple(&a, 0, Side::Left); // S₁ = I₁ is injective
        let rep = eklof_finite_check(&filtration, &i1).unwrap();
        assert!(rep.hypothesis_holds, "layer dims: {:?}", rep.layer_ext_dims);
        assert_eq!(rep.filtered_ext_dim, 0);
        assert!(rep.pass);

        // C = S₂: Ext¹(S₁-layer, S₂) ≠ 0, hypothesis fails, check is
        // vacuous (still a pass).
        let s2 = vertex_simple(&a, 1, Side::Left);
        let rep = eklof_finite_check(&filtration, &s2).unwrap();
        assert!(!rep.hypothesis_holds);
        assert!(rep.pass);

        // Chain validation: stages out of order are rejected.
        let bad = [filtration[1].clone(), filtration[0].clone()];
        assert!(matches!(
            eklof_finite_check(&bad, &i1),
            Err(CotorsionError::BadFiltration { .. })
        ));
    }

    #[test]
    fn dual_eklof_finite_check_on_a2_cofiltration() {
        // Cofiltration of P₁: P₁ ↠ S₁ ↠ 0 with layers S₂ (kernel of
        // P₁ → S₁) and S₁ (kernel of S₁ → 0).
        let a = a2(3);
        let reg = Module::regular(&a, Side::Left);
        let (p1, _incl) = submodule_generated(&reg, &[coord(3, 3, 0)]);
        let z = Module::zero(&a, Side::Left);
        let (rad, rad_incl) = submodule_generated(&p1, &[coord(3, 2, 1)]);
        let _ = rad;
        let stage2 = ShortExactSeq::from_injection(rad_incl); // 0 → S₂ → P₁ → S₁ → 0
        let s1_quot = Arc::clone(stage2.quotient_module());
        let stage1 = ShortExactSeq::new(
            ModuleMorphism::identity(&s1_quot),
            ModuleMorphism::zero_map(&s1_quot, &z),
        )
        .unwrap(); // 0 → S₁ → S₁ → 0 → 0
        let cofiltration = [stage1, stage2];

        // F projective: hypothesis holds trivially and Ext¹(F, P₁) = 0.
        let rep = dual_eklof_finite_check(&cofiltration, &reg).unwrap();
        assert!(rep.hypothesis_holds);
        assert!(rep.pass);

        // F = S₁: Ext¹(S₁, S₂-layer) = k, hypothesis fails, vacuous pass;
        // the conclusion value Ext¹(S₁, P₁) is still reported.
        let s1 = vertex_simple(&a, 0, Side::Left);
        let rep = dual_eklof_finite_check(&cofiltration, &s1).unwrap();
        assert!(!rep.hypothesis_holds);
        assert!(rep.pass);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        // Salce round-trip validity on random modules over the dual
        // numbers: both conversions yield certified short exact sequences
        // satisfying the dimension identity, and split exactly when the
        // input is already in the relevant class.
        #[test]
        fn salce_outputs_are_valid_on_random_modules(seed in 0u64..1000) {
            let a = dual_numbers(3);
            let mut rng = seeded_rng(seed);
            let m = random_module(&a, Side::Left, 2, 2, &mut rng);

            let proj_all = CotorsionOracle::proj_all(&a, Side::Left);
            let env = salce_preenvelope_from_precover(&proj_all, &m).unwrap();
            prop_assert_eq!(env.sequence.kernel_module().dim(), m.dim());
            let w = env.extension_witness.unwrap();
            prop_assert_eq!(
                env.sequence.middle_module().dim(),
                w.kernel_module().dim() + w.quotient_module().dim()
            );
            prop_assert!(is_projective(env.sequence.quotient_module()));
            if is_projective(&m) {
                // M ∈ 𝔉 … the PREENVELOPE test is about ℭ, so instead:
                // the precover of a projective module splits.
                let cov = proj_all.precover(&m).unwrap();
                prop_assert!(is_split(&cov.sequence).is_some());
            }

            let all_inj = CotorsionOracle::all_inj(&a, Side::Left);
            let cov = salce_precover_from_preenvelope(&all_inj, &m).unwrap();
            prop_assert_eq!(cov.sequence.quotient_module().dim(), m.dim());
            prop_assert!(is_injective(cov.sequence.kernel_module()));
            if is_injective(&m) {
                let env = all_inj.preenvelope(&m).unwrap();
                prop_assert!(is_split(&env.sequence).is_some());
            }
        }
    }
}
