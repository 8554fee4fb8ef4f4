//! Filtration and cofiltration towers certifying special approximations.
//!
//! The constructions here make cotorsion pairs *lifted* along a ring map
//! R → A operational. For a complete base pair (𝔉, ℭ) over R:
//!
//! * the Q-step pulls a module M back against the coinduced surjection
//!   Hom_R(A, F(ᴿM)) ↠ Hom_R(A, ᴿM), dropping the relative resolution
//!   dimension of the restriction by one; iterating yields a special
//!   precover of M whose kernel is cofiltered by coinduced modules;
//! * the W-step pushes N out along A ⊗_R ᴿN → A ⊗_R C(ᴿN), dually, and
//!   iterating yields a special preenvelope whose cokernel is filtered by
//!   induced modules.
//!
//! Every tower is a self-verifying object: it stores the stage modules, the
//! stage maps, and for each layer an explicit isomorphism from the
//! recomputed (co)kernel onto the named model module, so `verify_tower` can
//! replay the whole certificate from scratch.
//!
//! The same chain-to-tower machinery drives the Bongartz-style universal
//! extension towers for finite exceptional sequences and the (co)tilting
//! checks at the end of the module.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::adjunction::{coinduce, coinduce_map, induce, induce_map, nu, pi, RingMap};
use crate::algebra::same_algebra;
use crate::cotorsion::{
    rel_coresolution_dim, rel_resolution_dim, Approximation, CotorsionError, CotorsionOracle,
    RelDim, KAPPA_REDUCTION,
};
use crate::exactfield::FpMatrix;
use crate::modcat::{
    classify_ext1, ext, ext_dim, hom_space, is_in_add, is_injective, is_projective, is_split,
    map_from_pushout, map_into_pullback, power_module, pullback, pushout, realize_ext1_rep,
    tor_dim, ExtClass, Module, ModuleMorphism, Resolution, SesError, ShortExactSeq, Side,
    Splitting,
};

/// Hard cap on tower lengths. Only finite towers are in scope: transfinite
/// filtrations have no desk-scale realization, so any request beyond this
/// cap is rejected rather than approximated.
pub const MAX_TOWER_LENGTH: usize = 32;

/// Errors from tower construction and verification.
#[derive(Debug, Error)]
pub enum TowersError {
    #[error("base oracle failed: {0}")]
    Base(#[from] CotorsionError),
    #[error("sequence assembly failed: {0}")]
    Sequence(#[from] SesError),
    #[error(
        "requested tower length {requested} exceeds the finite cap {cap}; transfinite \
         towers are outside the desk-scale scope (see the project ledger)"
    )]
    BeyondFiniteScope { requested: usize, cap: usize },
    #[error(
        "tower did not close after {steps} steps although the capped relative dimension \
         admitted it; this error certifies a construction bug"
    )]
    DidNotTerminate { steps: usize },
    #[error("hypothesis failed: {what}")]
    HypothesisFailed { what: String },
    #[error("precondition not met: {what}")]
    Precondition { what: String },
    #[error(
        "staged invariant broken at stage {stage}: Ext¹ against input {index} has \
         dimension {dim} instead of 0"
    )]
    StagedInvariantBroken { stage: usize, index: usize, dim: usize },
    #[error("tower verification failed at {place}: {reason}")]
    Verify { place: String, reason: String },
}

/// Whether the stage maps are inclusions (filtration, layers are cokernels)
/// or surjections (cofiltration, layers are kernels).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerDirection {
    Filtration,
    Cofiltration,
}

/// One layer of a tower: the named model module the layer is isomorphic to,
/// together with an explicit isomorphism from the *recomputed* canonical
/// (co)kernel of the stage map onto that model.
#[derive(Clone, Debug)]
pub struct TowerLayer {
    pub model: Arc<Module>,
    pub iso: ModuleMorphism,
    pub note: String,
}

/// A finite filtration 0 = G₀ ↪ G₁ ↪ ⋯ ↪ G_n or cofiltration
/// G_n ↠ ⋯ ↠ G₁ ↠ G₀ = 0 of `target`, with an identified layer at every
/// stage. `stages[0]` is always the zero module and `stages.last()` the
/// filtered module itself; `maps[i]` connects stages i and i+1 in the
/// direction dictated by `direction`.
#[derive(Clone, Debug)]
pub struct Tower {
    pub direction: TowerDirection,
    pub stages: Vec<Arc<Module>>,
    pub maps: Vec<ModuleMorphism>,
    pub layers: Vec<TowerLayer>,
}

impl Tower {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// The module the tower filters or cofilters.
    pub fn target(&self) -> &Arc<Module> {
        self.stages.last().expect("a tower has at least the zero stage")
    }
}

fn verify_fail(place: impl Into<String>, reason: impl Into<String>) -> TowersError {
    TowersError::Verify { place: place.into(), reason: reason.into() }
}

/// Replays a tower from scratch: checks the stage bookkeeping, re-derives
/// every kernel/cokernel, and revalidates every layer isomorphism against
/// the stored model.
pub fn verify_tower(t: &Tower) -> Result<(), TowersError> {
    if t.stages.len() != t.maps.len() + 1 {
        return Err(verify_fail("stage count", "stages must be maps + 1"));
    }
    if t.layers.len() != t.maps.len() {
        return Err(verify_fail("layer count", "layers must match maps"));
    }
    if t.stages[0].dim() != 0 {
        return Err(verify_fail("stage 0", "the bottom stage must be the zero module"));
    }
    for (i, map) in t.maps.iter().enumerate() {
        let place = format!("stage map {i}");
        let (expect_src, expect_tgt) = match t.direction {
            TowerDirection::Cofiltration => (&t.stages[i + 1], &t.stages[i]),
            TowerDirection::Filtration => (&t.stages[i], &t.stages[i + 1]),
        };
        if **expect_src != *map.source || **expect_tgt != *map.target {
            return Err(verify_fail(place, "map endpoints do not match the stages"));
        }
        let layer = &t.layers[i];
        let canonical = match t.direction {
            TowerDirection::Cofiltration => {
                if !map.is_surjective_map() {
                    return Err(verify_fail(place, "cofiltration stage map is not onto"));
                }
                map.kernel().0
            }
            TowerDirection::Filtration => {
                if !map.is_injective_map() {
                    return Err(verify_fail(place, "filtration stage map is not injective"));
                }
                map.cokernel().0
            }
        };
        if *canonical != *layer.iso.source {
            return Err(verify_fail(place, "layer iso does not start on the canonical (co)kernel"));
        }
        if *layer.iso.target != *layer.model {
            return Err(verify_fail(place, "layer iso does not end on the stated model"));
        }
        let revalidated =
            ModuleMorphism::new(canonical, Arc::clone(&layer.model), layer.iso.matrix.clone());
        match revalidated {
            Ok(m) if m.is_iso() => {}
            Ok(_) => return Err(verify_fail(place, "layer witness is not invertible")),
            Err(_) => return Err(verify_fail(place, "layer witness is not a module map")),
        }
    }
    Ok(())
}

/// The length-0 cofiltration of the zero module, packaged with the trivial
/// sequence 0 → 0 → M → M → 0 (identity surjection).
fn trivial_cofiltration(m: &Arc<Module>) -> (Tower, ShortExactSeq) {
    let idm = ModuleMorphism::identity(m);
    let (z, incl) = idm.kernel();
    let seq = ShortExactSeq::new(incl, idm).expect("identity map completes to a trivial sequence");
    let tower = Tower {
        direction: TowerDirection::Cofiltration,
        stages: vec![z],
        maps: Vec::new(),
        layers: Vec::new(),
    };
    (tower, seq)
}

/// The length-0 filtration of the zero module, packaged with the trivial
/// sequence 0 → N → N → 0 → 0 (identity injection).
fn trivial_filtration(n: &Arc<Module>) -> (Tower, ShortExactSeq) {
    let idn = ModuleMorphism::identity(n);
    let (z, proj, _) = idn.cokernel();
    let seq = ShortExactSeq::new(idn, proj).expect("identity map completes to a trivial sequence");
    let tower = Tower {
        direction: TowerDirection::Filtration,
        stages: vec![z],
        maps: Vec::new(),
        layers: Vec::new(),
    };
    (tower, seq)
}

/// Prepends a zero layer (the 0-th power of `layer_of`) below a tower, so
/// that the displayed layer list starts with the designated bottom class
/// even when that layer happens to be zero.
fn prepend_zero_layer(mut t: Tower, layer_of: &Arc<Module>, note: &str) -> Tower {
    let first = Arc::clone(&t.stages[0]);
    let zero = Module::zero(first.algebra(), first.side());
    let (model, _, _) = power_module(layer_of, 0);
    let p = first.p();
    let (map, canonical) = match t.direction {
        TowerDirection::Cofiltration => {
            let map = ModuleMorphism::zero_map(&first, &zero);
            let km = map.kernel().0;
            (map, km)
        }
        TowerDirection::Filtration => {
            let map = ModuleMorphism::zero_map(&zero, &first);
            let cm = map.cokernel().0;
            (map, cm)
        }
    };
    let iso = ModuleMorphism::new(canonical, Arc::clone(&model), FpMatrix::zero(p, 0, 0))
        .expect("the zero layer witness is a module map");
    assert!(iso.is_iso(), "the zero layer witness must be invertible");
    t.stages.insert(0, zero);
    t.maps.insert(0, map);
    t.layers.insert(0, TowerLayer { model, iso, note: note.to_string() });
    t
}

/// Factor `rhs` through the surjection `through` (both maps share a domain):
/// returns the unique x with x·through = rhs.
fn descend(through: &FpMatrix, rhs: &FpMatrix) -> FpMatrix {
    through
        .transpose()
        .solve(&rhs.transpose())
        .expect("map must factor through the quotient")
        .transpose()
}

/// Layer witness supplied by one construction step.
struct StepWitness {
    /// For a cofiltration chain: an injection L → X_{i+1} whose image is
    /// ker(chain[i]). For a filtration chain: a surjection X_{i+1} → L whose
    /// kernel is im(chain[i]).
    edge: ModuleMorphism,
    /// Isomorphism from L onto the display model.
    iso: ModuleMorphism,
    note: String,
}

/// Assembles the kernel cofiltration of a chain of surjections
/// X_j ↠ X_{j-1} ↠ ⋯ ↠ X_0 (with `chain[i]: X_{i+1} ↠ X_i`). Returns the
/// tower on D′ = ker(X_j → X_0) together with 0 → D′ → X_j → X_0 → 0. The
/// i-th tower layer is identified with the model of `steps[i]`, which
/// witnesses ker(chain[i]).
fn cofiltration_from_surjection_chain(
    chain: &[ModuleMorphism],
    steps: &[StepWitness],
) -> (Tower, ShortExactSeq) {
    let j = chain.len();
    assert!(j >= 1, "an empty chain has no cofiltration; use the trivial certificate");
    assert_eq!(steps.len(), j, "one witness per chain map");
    let x0 = Arc::clone(&chain[0].target);
    let mut composites = vec![ModuleMorphism::identity(&x0)];
    for link in chain {
        let next = composites.last().unwrap().after(link);
        composites.push(next);
    }
    let mut kernels = Vec::with_capacity(j + 1);
    let mut incls = Vec::with_capacity(j + 1);
    for t in &composites {
        let (g, incl) = t.kernel();
        kernels.push(g);
        incls.push(incl);
    }
    let mut maps = Vec::with_capacity(j);
    for i in 0..j {
        let rhs = chain[i].matrix.mul(&incls[i + 1].matrix);
        let u = incls[i]
            .matrix
            .solve(&rhs)
            .expect("the chain map restricts to the composite kernels");
        let m = ModuleMorphism::new(Arc::clone(&kernels[i + 1]), Arc::clone(&kernels[i]), u)
            .expect("restricted stage map is a module map");
        assert!(m.is_surjective_map(), "kernel stage maps of a surjection chain are onto");
        maps.push(m);
    }
    let mut layers = Vec::with_capacity(j);
    for i in 0..j {
        let (km, kincl) = maps[i].kernel();
        // Into X_{i+1}, where the layer sits inside ker(chain[i]).
        let into_x = incls[i + 1].matrix.mul(&kincl.matrix);
        let onto_l = steps[i]
            .edge
            .matrix
            .solve(&into_x)
            .expect("the tower layer lies on the witnessed step kernel");
        let mat = steps[i].iso.matrix.mul(&onto_l);
        let iso = ModuleMorphism::new(km, Arc::clone(&steps[i].iso.target), mat)
            .expect("layer identification is a module map");
        assert!(iso.is_iso(), "layer identification must be invertible");
        layers.push(TowerLayer {
            model: Arc::clone(&steps[i].iso.target),
            iso,
            note: steps[i].note.clone(),
        });
    }
    let seq = ShortExactSeq::new(incls[j].clone(), composites[j].clone())
        .expect("composite of the chain is exact against its kernel");
    let tower = Tower { direction: TowerDirection::Cofiltration, stages: kernels, maps, layers };
    (tower, seq)
}

/// Assembles the cokernel filtration of a chain of injections
/// X_0 ↪ X_1 ↪ ⋯ ↪ X_j (with `chain[i]: X_i ↪ X_{i+1}`). Returns the tower
/// on D = coker(X_0 → X_j) together with 0 → X_0 → X_j → D → 0.
fn filtration_from_injection_chain(
    chain: &[ModuleMorphism],
    steps: &[StepWitness],
) -> (Tower, ShortExactSeq) {
    let j = chain.len();
    assert!(j >= 1, "an empty chain has no filtration; use the trivial certificate");
    assert_eq!(steps.len(), j, "one witness per chain map");
    let x0 = Arc::clone(&chain[0].source);
    let mut composites = vec![ModuleMorphism::identity(&x0)];
    for link in chain {
        let next = link.after(composites.last().unwrap());
        composites.push(next);
    }
    let mut quots = Vec::with_capacity(j + 1);
    let mut projs = Vec::with_capacity(j + 1);
    for u in &composites {
        let (d, proj, _) = u.cokernel();
        quots.push(d);
        projs.push(proj);
    }
    let mut maps = Vec::with_capacity(j);
    for i in 0..j {
        let rhs = projs[i + 1].matrix.mul(&chain[i].matrix);
        let mat = descend(&projs[i].matrix, &rhs);
        let m = ModuleMorphism::new(Arc::clone(&quots[i]), Arc::clone(&quots[i + 1]), mat)
            .expect("descended stage map is a module map");
        assert!(m.is_injective_map(), "cokernel stage maps of an injection chain are injective");
        maps.push(m);
    }
    let mut layers = Vec::with_capacity(j);
    for i in 0..j {
        let (cm, cproj, _) = maps[i].cokernel();
        // X_{i+1} ↠ cm and X_{i+1} ↠ L both kill exactly im(chain[i]).
        let onto_cm = cproj.matrix.mul(&projs[i + 1].matrix);
        let g = descend(&steps[i].edge.matrix, &onto_cm);
        let ginv = g.inverse().expect("the two quotient presentations coincide");
        let mat = steps[i].iso.matrix.mul(&ginv);
        let iso = ModuleMorphism::new(cm, Arc::clone(&steps[i].iso.target), mat)
            .expect("layer identification is a module map");
        assert!(iso.is_iso(), "layer identification must be invertible");
        layers.push(TowerLayer {
            model: Arc::clone(&steps[i].iso.target),
            iso,
            note: steps[i].note.clone(),
        });
    }
    let seq = ShortExactSeq::new(composites[j].clone(), projs[j].clone())
        .expect("composite of the chain is exact against its cokernel");
    let tower = Tower { direction: TowerDirection::Filtration, stages: quots, maps, layers };
    (tower, seq)
}

/// Given 0 → D → H → C₀ → 0 whose kernel D is the target of an existing
/// cofiltration, produces the cofiltration of H that stacks C₀ as a new
/// bottom layer below the layers of D. `bottom_iso` identifies C₀ (the
/// literal quotient of `ses`) with the display model.
fn extend_cofiltration(
    ses: &ShortExactSeq,
    inner: &Tower,
    bottom_model: &Arc<Module>,
    bottom_iso: &ModuleMorphism,
    bottom_note: &str,
) -> Tower {
    assert_eq!(inner.direction, TowerDirection::Cofiltration);
    assert_eq!(
        **ses.kernel_module(),
        **inner.target(),
        "the inner cofiltration must sit on the kernel of the extension"
    );
    let j = inner.length();
    let h = ses.middle_module();
    let d = ses.kernel_module();
    let p = h.p();
    // Composite surjections π_i: D ↠ inner stage i.
    let mut pis_rev = vec![ModuleMorphism::identity(d)];
    for i in (0..j).rev() {
        let next = inner.maps[i].after(pis_rev.last().unwrap());
        pis_rev.push(next);
    }
    pis_rev.reverse();
    let pis = pis_rev;
    // K_i = ker(π_i) ⊆ D ⊆ H, and the quotients H/K_i.
    let mut kincls = Vec::with_capacity(j);
    let mut embs = Vec::with_capacity(j);
    let mut stage_mods = Vec::with_capacity(j + 1);
    let mut projs = Vec::with_capacity(j + 1);
    let mut sects = Vec::with_capacity(j + 1);
    for pi_i in pis.iter().take(j) {
        let (k_i, kincl) = pi_i.kernel();
        let emb = ModuleMorphism::new(
            Arc::clone(&k_i),
            Arc::clone(h),
            ses.i.matrix.mul(&kincl.matrix),
        )
        .expect("kernel stage embeds in the extension middle");
        let (hq, hproj, hsect) = emb.cokernel();
        kincls.push(kincl);
        embs.push(emb);
        stage_mods.push(hq);
        projs.push(hproj);
        sects.push(hsect);
    }
    // K_j = ker(id) = 0, so the top quotient is H itself.
    stage_mods.push(Arc::clone(h));
    projs.push(ModuleMorphism::identity(h));
    sects.push(FpMatrix::identity(p, h.dim()));
    let zero = Module::zero(h.algebra(), h.side());
    let mut stages = vec![Arc::clone(&zero)];
    stages.extend(stage_mods.iter().cloned());
    let mut maps = Vec::with_capacity(j + 1);
    maps.push(ModuleMorphism::zero_map(&stage_mods[0], &zero));
    for t in 1..=j {
        let mat = descend(&projs[t].matrix, &projs[t - 1].matrix);
        let m = ModuleMorphism::new(
            Arc::clone(&stage_mods[t]),
            Arc::clone(&stage_mods[t - 1]),
            mat,
        )
        .expect("quotient stage map is a module map");
        assert!(m.is_surjective_map());
        maps.push(m);
    }
    let mut layers = Vec::with_capacity(j + 1);
    {
        // Bottom layer: H/K₀ = H/D ≅ C₀.
        let (km, kincl) = maps[0].kernel();
        let g = descend(&projs[0].matrix, &ses.q.matrix);
        let mat = bottom_iso.matrix.mul(&g).mul(&kincl.matrix);
        let iso = ModuleMorphism::new(km, Arc::clone(bottom_model), mat)
            .expect("bottom layer identification is a module map");
        assert!(iso.is_iso(), "bottom layer identification must be invertible");
        layers.push(TowerLayer {
            model: Arc::clone(bottom_model),
            iso,
            note: bottom_note.to_string(),
        });
    }
    for t in 0..j {
        // Layer t+1 of the new tower = layer t of the inner tower:
        // ker(H/K_{t+1} → H/K_t) = K_t/K_{t+1} ≅ ker(inner map t).
        let (km, kincl) = maps[t + 1].kernel();
        let lift = sects[t + 1].mul(&kincl.matrix);
        let z = embs[t]
            .matrix
            .solve(&lift)
            .expect("lifted layer representatives land in the next kernel stage");
        let in_d = kincls[t].matrix.mul(&z);
        let v = pis[t + 1].matrix.mul(&in_d);
        let (_, lk_incl) = inner.maps[t].kernel();
        let y = lk_incl
            .matrix
            .solve(&v)
            .expect("projected layer representatives land in the inner layer");
        let mat = inner.layers[t].iso.matrix.mul(&y);
        let iso = ModuleMorphism::new(km, Arc::clone(&inner.layers[t].model), mat)
            .expect("layer identification is a module map");
        assert!(iso.is_iso(), "stacked layer identification must be invertible");
        layers.push(TowerLayer {
            model: Arc::clone(&inner.layers[t].model),
            iso,
            note: inner.layers[t].note.clone(),
        });
    }
    Tower { direction: TowerDirection::Cofiltration, stages, maps, layers }
}

/// Given 0 → E → H → D → 0 whose quotient D is the target of an existing
/// filtration, produces the filtration of H that stacks E as a new bottom
/// layer below the layers of D. `bottom_iso` identifies E (the literal
/// kernel of `ses`) with the display model.
fn extend_filtration(
    ses: &ShortExactSeq,
    inner: &Tower,
    bottom_model: &Arc<Module>,
    bottom_iso: &ModuleMorphism,
    bottom_note: &str,
) -> Tower {
    assert_eq!(inner.direction, TowerDirection::Filtration);
    assert_eq!(
        **ses.quotient_module(),
        **inner.target(),
        "the inner filtration must sit on the quotient of the extension"
    );
    let j = inner.length();
    let h = ses.middle_module();
    let d = ses.quotient_module();
    // Composite injections η_t: inner stage t ↪ D.
    let mut etas_rev = vec![ModuleMorphism::identity(d)];
    for t in (0..j).rev() {
        let next = etas_rev.last().unwrap().after(&inner.maps[t]);
        etas_rev.push(next);
    }
    etas_rev.reverse();
    let etas = etas_rev;
    // Preimages P_t = q⁻¹(S_t) ⊆ H.
    let mut pmods = Vec::with_capacity(j + 1);
    let mut pincls = Vec::with_capacity(j + 1);
    for eta in etas.iter().take(j) {
        let (_, dproj, _) = eta.cokernel();
        let c = dproj.after(&ses.q);
        let (p_t, pincl) = c.kernel();
        pmods.push(p_t);
        pincls.push(pincl);
    }
    pmods.push(Arc::clone(h));
    pincls.push(ModuleMorphism::identity(h));
    let zero = Module::zero(h.algebra(), h.side());
    let mut stages = vec![Arc::clone(&zero)];
    stages.extend(pmods.iter().cloned());
    let mut maps = Vec::with_capacity(j + 1);
    maps.push(ModuleMorphism::zero_map(&zero, &pmods[0]));
    for t in 1..=j {
        let mat = pincls[t]
            .matrix
            .solve(&pincls[t - 1].matrix)
            .expect("preimage stages are nested");
        let m = ModuleMorphism::new(Arc::clone(&pmods[t - 1]), Arc::clone(&pmods[t]), mat)
            .expect("preimage stage map is a module map");
        assert!(m.is_injective_map());
        maps.push(m);
    }
    let mut layers = Vec::with_capacity(j + 1);
    {
        // Bottom layer: P₀ = ker q = im i ≅ E.
        let (cm, cproj, csect) = maps[0].cokernel();
        let w = ses
            .i
            .matrix
            .solve(&pincls[0].matrix)
            .expect("the bottom preimage stage is the embedded kernel");
        let mat = bottom_iso.matrix.mul(&w).mul(&csect);
        let iso = ModuleMorphism::new(cm, Arc::clone(bottom_model), mat)
            .expect("bottom layer identification is a module map");
        assert!(iso.is_iso(), "bottom layer identification must be invertible");
        let _ = cproj;
        layers.push(TowerLayer {
            model: Arc::clone(bottom_model),
            iso,
            note: bottom_note.to_string(),
        });
    }
    for t in 0..j {
        // Layer t+1 of the new tower = layer t of the inner tower:
        // P_{t+1}/P_t ≅ S_{t+1}/S_t ≅ coker(inner map t).
        let (cm, cproj, _) = maps[t + 1].cokernel();
        let y = etas[t + 1]
            .matrix
            .solve(&ses.q.matrix.mul(&pincls[t + 1].matrix))
            .expect("the preimage stage maps into its filtration stage");
        let (_, lcproj, _) = inner.maps[t].cokernel();
        let psi = lcproj.matrix.mul(&y);
        let g = descend(&cproj.matrix, &psi);
        let mat = inner.layers[t].iso.matrix.mul(&g);
        let iso = ModuleMorphism::new(cm, Arc::clone(&inner.layers[t].model), mat)
            .expect("layer identification is a module map");
        assert!(iso.is_iso(), "stacked layer identification must be invertible");
        layers.push(TowerLayer {
            model: Arc::clone(&inner.layers[t].model),
            iso,
            note: inner.layers[t].note.clone(),
        });
    }
    Tower { direction: TowerDirection::Filtration, stages, maps, layers }
}

/// Which kind of special approximation a certificate testifies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproximationSide {
    Precover,
    Preenvelope,
}

/// Which term of the certified sequence carries the tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerEnd {
    Kernel,
    Middle,
    Quotient,
}

/// A special approximation sequence together with the tower certifying the
/// class membership of one end and a verified statement about the other.
#[derive(Clone, Debug)]
pub struct ApproximationCertificate {
    pub side: ApproximationSide,
    /// Precover: 0 → C′ → F → M → 0. Preenvelope: 0 → N → C → F′ → 0.
    pub sequence: ShortExactSeq,
    /// The term of `sequence` that `tower` filters or cofilters.
    pub tower_end: TowerEnd,
    pub tower: Tower,
    /// What was verified about the end not covered by the tower.
    pub end_statement: String,
    /// The per-run side-condition instances actually checked, with results.
    pub condition_sample: Vec<(String, bool)>,
    /// Standing assumptions inherited from the base oracle and the finite
    /// reduction of index sets.
    pub assumptions: Vec<String>,
}

impl ApproximationCertificate {
    /// Replays the structural part of the certificate: the tower sits on the
    /// declared end of the sequence and verifies from scratch.
    pub fn verify(&self) -> Result<(), TowersError> {
        let end = match self.tower_end {
            TowerEnd::Kernel => self.sequence.kernel_module(),
            TowerEnd::Middle => self.sequence.middle_module(),
            TowerEnd::Quotient => self.sequence.quotient_module(),
        };
        if **end != **self.tower.target() {
            return Err(verify_fail("certificate", "tower does not sit on the declared end"));
        }
        verify_tower(&self.tower)
    }
}

/// Which adjoint is used to lift the base pair along R → A.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftSide {
    /// ℭ_A is cofiltered by coinduced modules Hom_R(A, −); 𝔉_A is the
    /// restriction preimage of 𝔉. Drives Q-steps.
    Coinduced,
    /// 𝔉^A is filtered by induced modules A ⊗_R −; ℭ^A is the restriction
    /// preimage of ℭ. Drives W-steps.
    Induced,
}

/// A base cotorsion pair over R, the ring map R → A, and the finite cap on
/// tower lengths, with the lifting preconditions checked at assembly.
pub struct LiftedPairConfig {
    rm: RingMap,
    base: CotorsionOracle,
    k: usize,
    side: LiftSide,
    preconditions: Vec<String>,
}

impl fmt::Debug for LiftedPairConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LiftedPairConfig")
            .field("base", &self.base.name())
            .field("k", &self.k)
            .field("side", &self.side)
            .finish_non_exhaustive()
    }
}

impl LiftedPairConfig {
    /// Configuration for the coinduced lift. Requires the restriction of A
    /// to lie in the base 𝔉 (so coinduced surjections stay special).
    pub fn coinduced(
        rm: RingMap,
        base: CotorsionOracle,
        k: usize,
    ) -> Result<LiftedPairConfig, TowersError> {
        Self::assemble(rm, base, k, LiftSide::Coinduced)
    }

    /// Configuration for the induced lift. Requires the dual of A as a right
    /// R-module to lie in the base ℭ (the finite substitute for the
    /// character-module condition).
    pub fn induced(
        rm: RingMap,
        base: CotorsionOracle,
        k: usize,
    ) -> Result<LiftedPairConfig, TowersError> {
        Self::assemble(rm, base, k, LiftSide::Induced)
    }

    fn assemble(
        rm: RingMap,
        base: CotorsionOracle,
        k: usize,
        side: LiftSide,
    ) -> Result<LiftedPairConfig, TowersError> {
        if k > MAX_TOWER_LENGTH {
            return Err(TowersError::BeyondFiniteScope { requested: k, cap: MAX_TOWER_LENGTH });
        }
        if !same_algebra(base.algebra(), rm.r()) || base.side() != Side::Left {
            return Err(TowersError::Precondition {
                what: "the base oracle must govern left modules over the source ring".to_string(),
            });
        }
        let mut preconditions = Vec::new();
        match side {
            LiftSide::Coinduced => {
                let ok = base.in_f(rm.a_as_left_r())?;
                if !ok {
                    return Err(TowersError::Precondition {
                        what: format!(
                            "the restriction of A is not in 𝔉 for base `{}`",
                            base.name()
                        ),
                    });
                }
                preconditions
                    .push("restriction of A lies in the base 𝔉 (verified)".to_string());
            }
            LiftSide::Induced => {
                let aplus = crate::modcat::dual(rm.a_as_right_r());
                let ok = base.in_c(&aplus)?;
                if !ok {
                    return Err(TowersError::Precondition {
                        what: format!(
                            "the dual of A as a right module is not in ℭ for base `{}`",
                            base.name()
                        ),
                    });
                }
                preconditions.push(
                    "dual of A as a right R-module lies in the base ℭ (verified)".to_string(),
                );
            }
        }
        Ok(LiftedPairConfig { rm, base, k, side, preconditions })
    }

    pub fn rm(&self) -> &RingMap {
        &self.rm
    }

    pub fn base(&self) -> &CotorsionOracle {
        &self.base
    }

    pub fn cap(&self) -> usize {
        self.k
    }

    pub fn side(&self) -> LiftSide {
        self.side
    }

    pub fn preconditions(&self) -> &[String] {
        &self.preconditions
    }

    fn expect_side(&self, want: LiftSide, op: &str) -> Result<(), TowersError> {
        if self.side != want {
            return Err(TowersError::Precondition {
                what: format!("{op} needs a {want:?}-side configuration"),
            });
        }
        Ok(())
    }

    fn check_module(&self, m: &Arc<Module>) -> Result<(), TowersError> {
        if !same_algebra(m.algebra(), self.rm.a()) || m.side() != Side::Left {
            return Err(TowersError::Precondition {
                what: "the module must be a left module over the lifted algebra".to_string(),
            });
        }
        Ok(())
    }

    fn check_cap(&self, k: usize) -> Result<(), TowersError> {
        if k > self.k {
            return Err(TowersError::BeyondFiniteScope { requested: k, cap: self.k });
        }
        Ok(())
    }

    /// The special base precover of an R-module, short-circuiting to the
    /// trivial sequence 0 → 0 → M → M → 0 when M already lies in 𝔉.
    fn base_precover(&self, m: &Arc<Module>) -> Result<Approximation, TowersError> {
        if self.base.in_f(m)? {
            let z = Module::zero(self.rm.r(), Side::Left);
            let seq =
                ShortExactSeq::new(ModuleMorphism::zero_map(&z, m), ModuleMorphism::identity(m))?;
            return Ok(Approximation::plain(seq));
        }
        Ok(self.base.precover(m)?)
    }

    /// The special base preenvelope, short-circuiting to the trivial
    /// sequence 0 → N → N → 0 → 0 when N already lies in ℭ.
    fn base_preenvelope(&self, n: &Arc<Module>) -> Result<Approximation, TowersError> {
        if self.base.in_c(n)? {
            let idn = ModuleMorphism::identity(n);
            let (_, proj, _) = idn.cokernel();
            let seq = ShortExactSeq::new(idn, proj)?;
            return Ok(Approximation::plain(seq));
        }
        Ok(self.base.preenvelope(n)?)
    }
}

/// One Q-step: the pullback of M against the coinduced surjection over the
/// base precover of its restriction.
#[derive(Clone, Debug)]
pub struct QStep {
    /// Q(M).
    pub module: Arc<Module>,
    /// 0 → K → Q(M) → M → 0.
    pub sequence: ShortExactSeq,
    /// Hom_R(A, C′(ᴿM)): the coinduced model of the kernel.
    pub kernel_model: Arc<Module>,
    /// Isomorphism from the canonical kernel K onto the model.
    pub kernel_iso: ModuleMorphism,
    /// dim C′(ᴿM) over R.
    pub base_kernel_dim: usize,
    /// The coinduction side condition instance checked for this step.
    pub condition_instance: (String, bool),
}

/// Performs one Q-step on a left A-module M: choose a special base precover
/// 0 → C′ → F → ᴿM → 0, coinduce, and pull M back against
/// Hom_R(A, F) ↠ Hom_R(A, ᴿM). Requires Ext¹_R(ᴿA, C′) = 0 so that the
/// coinduced map stays onto. The kernel of Q(M) ↠ M is identified with the
/// coinduced module Hom_R(A, C′) by an explicit isomorphism.
pub fn q_step(cfg: &LiftedPairConfig, m: &Arc<Module>) -> Result<QStep, TowersError> {
    cfg.expect_side(LiftSide::Coinduced, "q_step")?;
    cfg.check_module(m)?;
    let rm = &cfg.rm;
    let rmod = rm.restrict(m);
    let base_pre = cfg.base_precover(&rmod)?;
    let cprime = base_pre.sequence.kernel_module();
    let obstruction = ext_dim(rm.a_as_left_r(), cprime, 1);
    if obstruction != 0 {
        return Err(TowersError::Precondition {
            what: format!(
                "Ext¹_R(ᴿA, C′(ᴿM)) has dimension {obstruction}; the coinduced surjection \
                 would not be onto"
            ),
        });
    }
    let nuphi = nu(rm, m);
    let cf = coinduce(rm, base_pre.sequence.middle_module());
    let theta = coinduce_map(rm, &base_pre.sequence.q, &cf, &nuphi.coinduced);
    assert!(
        theta.is_surjective_map(),
        "Hom_R(A, q) must stay onto once the Ext¹ obstruction vanishes"
    );
    let dagger = rm.restrict(&cf.module);
    let dagger_ok = cfg.base.in_f(&dagger)?;
    let condition_instance = (
        format!(
            "restriction of Hom_R(A, F) lies in 𝔉 for the base precover middle F of dim {}",
            base_pre.sequence.middle_module().dim()
        ),
        dagger_ok,
    );
    if !dagger_ok {
        return Err(TowersError::Precondition {
            what: format!("{}: failed", condition_instance.0),
        });
    }
    let (_, p_m, p_cf) = pullback(&nuphi.nu, &theta);
    assert!(p_m.is_surjective_map(), "the pullback of an onto map is onto");
    let sequence = ShortExactSeq::from_surjection(p_m);
    let ci = coinduce(rm, cprime);
    let jmap = coinduce_map(rm, &base_pre.sequence.i, &ci, &cf);
    let into_cf = p_cf.matrix.mul(&sequence.i.matrix);
    let y = jmap
        .matrix
        .solve(&into_cf)
        .expect("the pullback kernel lands in the coinduced kernel");
    let kernel_iso =
        ModuleMorphism::new(Arc::clone(sequence.kernel_module()), Arc::clone(&ci.module), y)
            .expect("kernel identification is a module map");
    assert!(kernel_iso.is_iso(), "the pullback kernel must match the coinduced model");
    Ok(QStep {
        module: Arc::clone(sequence.middle_module()),
        sequence,
        kernel_model: Arc::clone(&ci.module),
        kernel_iso,
        base_kernel_dim: cprime.dim(),
        condition_instance,
    })
}

/// Iterates Q-steps until the restriction lands in the base 𝔉, assembling
/// the kernel cofiltration: a special-precover certificate
/// 0 → D′ → Q^j(M) → M → 0 with D′ cofiltered by coinduced modules.
pub fn q_tower(
    cfg: &LiftedPairConfig,
    m: &Arc<Module>,
    k: usize,
) -> Result<ApproximationCertificate, TowersError> {
    cfg.expect_side(LiftSide::Coinduced, "q_tower")?;
    cfg.check_module(m)?;
    cfg.check_cap(k)?;
    match rel_resolution_dim(&cfg.base, &cfg.rm.restrict(m), k)? {
        RelDim::Exactly(_) => {}
        RelDim::AtLeast(l) => {
            return Err(TowersError::Precondition {
                what: format!(
                    "the relative resolution dimension of the restriction is at least {l}, \
                     beyond the requested tower length {k}"
                ),
            });
        }
    }
    let mut chain = Vec::new();
    let mut steps = Vec::new();
    let mut condition_sample = Vec::new();
    let mut cur = Arc::clone(m);
    while !cfg.base.in_f(&cfg.rm.restrict(&cur))? {
        if chain.len() == k {
            return Err(TowersError::DidNotTerminate { steps: k });
        }
        let st = q_step(cfg, &cur)?;
        condition_sample.push(st.condition_instance.clone());
        steps.push(StepWitness {
            edge: st.sequence.i.clone(),
            iso: st.kernel_iso.clone(),
            note: format!(
                "coinduced layer Hom_R(A, C′) over a base kernel of dim {}",
                st.base_kernel_dim
            ),
        });
        chain.push(st.sequence.q.clone());
        cur = st.module;
    }
    let steps_taken = chain.len();
    let (tower, sequence) = if chain.is_empty() {
        trivial_cofiltration(m)
    } else {
        cofiltration_from_surjection_chain(&chain, &steps)
    };
    let end_ok = cfg.base.in_f(&cfg.rm.restrict(sequence.middle_module()))?;
    assert!(end_ok, "the loop exit condition certifies the middle term");
    let mut assumptions = cfg.base.assumptions().to_vec();
    assumptions.extend(cfg.preconditions.iter().cloned());
    Ok(ApproximationCertificate {
        side: ApproximationSide::Precover,
        sequence,
        tower_end: TowerEnd::Kernel,
        tower,
        end_statement: format!(
            "restriction of Q^{steps_taken}(M) lies in 𝔉 for base `{}` (verified)",
            cfg.base.name()
        ),
        condition_sample,
        assumptions,
    })
}

/// Builds a special preenvelope 0 → N → H → Q^j(N′) → 0 in the coinduced
/// lift: embed N into the coinduced module over a base preenvelope of its
/// restriction, then pull back the Q-tower precover of the cokernel N′.
/// The middle term H is cofiltered by coinduced modules (the tower), and
/// the quotient restricts into the base 𝔉.
pub fn q_preenvelope(
    cfg: &LiftedPairConfig,
    n: &Arc<Module>,
    k: usize,
) -> Result<ApproximationCertificate, TowersError> {
    cfg.expect_side(LiftSide::Coinduced, "q_preenvelope")?;
    cfg.check_module(n)?;
    cfg.check_cap(k)?;
    let rm = &cfg.rm;
    let rn = rm.restrict(n);
    let base_env = cfg.base_preenvelope(&rn)?;
    let nuphi = nu(rm, n);
    let cmid = base_env.sequence.middle_module();
    let cstar = coinduce(rm, cmid);
    let hom_i = coinduce_map(rm, &base_env.sequence.i, &nuphi.coinduced, &cstar);
    let e = hom_i.after(&nuphi.nu);
    assert!(e.is_injective_map(), "ν composed with a coinduced injection stays injective");
    let ses_e = ShortExactSeq::from_injection(e);
    let nprime = Arc::clone(ses_e.quotient_module());
    let inner = q_tower(cfg, &nprime, k)?;
    let (_, p_cstar, p_q) = pullback(&ses_e.q, &inner.sequence.q);
    let i_main = map_into_pullback(
        &p_cstar,
        &p_q,
        &ses_e.i,
        &ModuleMorphism::zero_map(n, inner.sequence.middle_module()),
    );
    let seq_main = ShortExactSeq::new(i_main, p_q.clone())?;
    let dprime = inner.sequence.kernel_module();
    let i_wit = map_into_pullback(
        &p_cstar,
        &p_q,
        &ModuleMorphism::zero_map(dprime, &cstar.module),
        &inner.sequence.i,
    );
    let seq_wit = ShortExactSeq::new(i_wit, p_cstar.clone())?;
    let bottom_iso = ModuleMorphism::identity(&cstar.module);
    let tower = extend_cofiltration(
        &seq_wit,
        &inner.tower,
        &cstar.module,
        &bottom_iso,
        &format!("coinduced layer Hom_R(A, C) over a base preenvelope of dim {}", cmid.dim()),
    );
    let mut condition_sample = inner.condition_sample.clone();
    let bottom_ok = cfg.base.in_c(cmid)?;
    condition_sample.push((
        format!(
            "the base preenvelope middle C of dim {} lies in ℭ, making Hom_R(A, C) a ℭ_A-layer",
            cmid.dim()
        ),
        bottom_ok,
    ));
    if !bottom_ok {
        return Err(TowersError::Verify {
            place: "q_preenvelope bottom layer".to_string(),
            reason: "the base preenvelope middle does not lie in ℭ".to_string(),
        });
    }
    let quot_ok = cfg.base.in_f(&rm.restrict(seq_main.quotient_module()))?;
    assert!(quot_ok, "the inner certificate guarantees the quotient end");
    Ok(ApproximationCertificate {
        side: ApproximationSide::Preenvelope,
        sequence: seq_main,
        tower_end: TowerEnd::Middle,
        tower,
        end_statement: format!(
            "restriction of the quotient Q^{}(N′) lies in 𝔉 for base `{}` (verified)",
            inner.tower.length(),
            cfg.base.name()
        ),
        condition_sample,
        assumptions: inner.assumptions,
    })
}

/// One W-step: the pushout of N along the induced injection under the base
/// preenvelope of its restriction.
#[derive(Clone, Debug)]
pub struct WStep {
    /// W(N).
    pub module: Arc<Module>,
    /// 0 → N → W(N) → D → 0.
    pub sequence: ShortExactSeq,
    /// A ⊗_R F′(ᴿN): the induced model of the cokernel.
    pub cokernel_model: Arc<Module>,
    /// Isomorphism from the canonical cokernel onto the model.
    pub cokernel_iso: ModuleMorphism,
    /// dim F′(ᴿN) over R.
    pub base_cokernel_dim: usize,
    /// The induction side condition instance checked for this step.
    pub condition_instance: (String, bool),
}

/// Performs one W-step on a left A-module N: choose a special base
/// preenvelope 0 → ᴿN → C → F′ → 0, induce, and push N out along
/// A ⊗_R ᴿN → A ⊗_R C. Requires Tor₁^R(Aᴿ, F′) = 0 so that the induced map
/// stays injective. The cokernel of N ↪ W(N) is identified with the induced
/// module A ⊗_R F′ by an explicit isomorphism.
pub fn w_step(cfg: &LiftedPairConfig, n: &Arc<Module>) -> Result<WStep, TowersError> {
    cfg.expect_side(LiftSide::Induced, "w_step")?;
    cfg.check_module(n)?;
    let rm = &cfg.rm;
    let rn = rm.restrict(n);
    let base_env = cfg.base_preenvelope(&rn)?;
    let fprime = base_env.sequence.quotient_module();
    let obstruction = tor_dim(rm.a_as_right_r(), fprime, 1);
    if obstruction != 0 {
        return Err(TowersError::Precondition {
            what: format!(
                "Tor₁^R(Aᴿ, F′(ᴿN)) has dimension {obstruction}; the induced injection \
                 would not stay injective"
            ),
        });
    }
    let pieps = pi(rm, n);
    let ind_c = induce(rm, base_env.sequence.middle_module());
    let tmap = induce_map(rm, &base_env.sequence.i, &pieps.induced, &ind_c);
    assert!(
        tmap.is_injective_map(),
        "A ⊗ i must stay injective once the Tor₁ obstruction vanishes"
    );
    let dagger = rm.restrict(&ind_c.module);
    let dagger_ok = cfg.base.in_c(&dagger)?;
    let condition_instance = (
        format!(
            "restriction of A ⊗_R C lies in ℭ for the base preenvelope middle C of dim {}",
            base_env.sequence.middle_module().dim()
        ),
        dagger_ok,
    );
    if !dagger_ok {
        return Err(TowersError::Precondition {
            what: format!("{}: failed", condition_instance.0),
        });
    }
    let (_, j_n, j_c) = pushout(&pieps.pi, &tmap);
    assert!(j_n.is_injective_map(), "the pushout of an injection is injective");
    let sequence = ShortExactSeq::from_injection(j_n);
    let ind_f = induce(rm, fprime);
    let qmap = induce_map(rm, &base_env.sequence.q, &ind_c, &ind_f);
    let through = sequence.q.matrix.mul(&j_c.matrix);
    let chi = descend(&through, &qmap.matrix);
    let cokernel_iso =
        ModuleMorphism::new(Arc::clone(sequence.quotient_module()), Arc::clone(&ind_f.module), chi)
            .expect("cokernel identification is a module map");
    assert!(cokernel_iso.is_iso(), "the pushout cokernel must match the induced model");
    Ok(WStep {
        module: Arc::clone(sequence.middle_module()),
        sequence,
        cokernel_model: Arc::clone(&ind_f.module),
        cokernel_iso,
        base_cokernel_dim: fprime.dim(),
        condition_instance,
    })
}

/// Iterates W-steps until the restriction lands in the base ℭ, assembling
/// the cokernel filtration: a special-preenvelope certificate
/// 0 → N → W^j(N) → D → 0 with D filtered by induced modules.
pub fn w_tower(
    cfg: &LiftedPairConfig,
    n: &Arc<Module>,
    k: usize,
) -> Result<ApproximationCertificate, TowersError> {
    cfg.expect_side(LiftSide::Induced, "w_tower")?;
    cfg.check_module(n)?;
    cfg.check_cap(k)?;
    match rel_coresolution_dim(&cfg.base, &cfg.rm.restrict(n), k)? {
        RelDim::Exactly(_) => {}
        RelDim::AtLeast(l) => {
            return Err(TowersError::Precondition {
                what: format!(
                    "the relative coresolution dimension of the restriction is at least {l}, \
                     beyond the requested tower length {k}"
                ),
            });
        }
    }
    let mut chain = Vec::new();
    let mut steps = Vec::new();
    let mut condition_sample = Vec::new();
    let mut cur = Arc::clone(n);
    while !cfg.base.in_c(&cfg.rm.restrict(&cur))? {
        if chain.len() == k {
            return Err(TowersError::DidNotTerminate { steps: k });
        }
        let st = w_step(cfg, &cur)?;
        condition_sample.push(st.condition_instance.clone());
        steps.push(StepWitness {
            edge: st.sequence.q.clone(),
            iso: st.cokernel_iso.clone(),
            note: format!(
                "induced layer A ⊗_R F′ over a base cokernel of dim {}",
                st.base_cokernel_dim
            ),
        });
        chain.push(st.sequence.i.clone());
        cur = st.module;
    }
    let steps_taken = chain.len();
    let (tower, sequence) = if chain.is_empty() {
        trivial_filtration(n)
    } else {
        filtration_from_injection_chain(&chain, &steps)
    };
    let end_ok = cfg.base.in_c(&cfg.rm.restrict(sequence.middle_module()))?;
    assert!(end_ok, "the loop exit condition certifies the middle term");
    let mut assumptions = cfg.base.assumptions().to_vec();
    assumptions.extend(cfg.preconditions.iter().cloned());
    Ok(ApproximationCertificate {
        side: ApproximationSide::Preenvelope,
        sequence,
        tower_end: TowerEnd::Quotient,
        tower,
        end_statement: format!(
            "restriction of W^{steps_taken}(N) lies in ℭ for base `{}` (verified)",
            cfg.base.name()
        ),
        condition_sample,
        assumptions,
    })
}

/// Builds a special precover 0 → W^j(N′) → H → M → 0 in the induced lift:
/// cover M by the induced module over a base precover of its restriction,
/// then push out the W-tower preenvelope of the kernel N′. The middle term
/// H is filtered by induced modules (the tower), and the kernel restricts
/// into the base ℭ.
pub fn w_precover(
    cfg: &LiftedPairConfig,
    m: &Arc<Module>,
    k: usize,
) -> Result<ApproximationCertificate, TowersError> {
    cfg.expect_side(LiftSide::Induced, "w_precover")?;
    cfg.check_module(m)?;
    cfg.check_cap(k)?;
    let rm = &cfg.rm;
    let rmod = rm.restrict(m);
    let base_cov = cfg.base_precover(&rmod)?;
    let fmid = base_cov.sequence.middle_module();
    let ind_f = induce(rm, fmid);
    let pieps = pi(rm, m);
    let cover = pieps.pi.after(&induce_map(rm, &base_cov.sequence.q, &ind_f, &pieps.induced));
    assert!(cover.is_surjective_map(), "π composed with an induced surjection stays onto");
    let ses_cov = ShortExactSeq::from_surjection(cover);
    let nprime = Arc::clone(ses_cov.kernel_module());
    let inner = w_tower(cfg, &nprime, k)?;
    let (_, j_e, j_w) = pushout(&ses_cov.i, &inner.sequence.i);
    let q_main = map_from_pushout(
        &j_e,
        &j_w,
        &ses_cov.q,
        &ModuleMorphism::zero_map(inner.sequence.middle_module(), m),
    );
    let seq_main = ShortExactSeq::new(j_w.clone(), q_main)?;
    let dmod = inner.sequence.quotient_module();
    let q_wit = map_from_pushout(
        &j_e,
        &j_w,
        &ModuleMorphism::zero_map(ses_cov.middle_module(), dmod),
        &inner.sequence.q,
    );
    let seq_wit = ShortExactSeq::new(j_e.clone(), q_wit)?;
    let bottom_iso = ModuleMorphism::identity(&ind_f.module);
    let tower = extend_filtration(
        &seq_wit,
        &inner.tower,
        &ind_f.module,
        &bottom_iso,
        &format!("induced layer A ⊗_R F over a base precover of dim {}", fmid.dim()),
    );
    let mut condition_sample = inner.condition_sample.clone();
    let bottom_ok = cfg.base.in_f(fmid)?;
    condition_sample.push((
        format!(
            "the base precover middle F of dim {} lies in 𝔉, making A ⊗_R F an 𝔉^A-layer",
            fmid.dim()
        ),
        bottom_ok,
    ));
    if !bottom_ok {
        return Err(TowersError::Verify {
            place: "w_precover bottom layer".to_string(),
            reason: "the base precover middle does not lie in 𝔉".to_string(),
        });
    }
    let kernel_ok = cfg.base.in_c(&rm.restrict(seq_main.kernel_module()))?;
    assert!(kernel_ok, "the inner certificate guarantees the kernel end");
    Ok(ApproximationCertificate {
        side: ApproximationSide::Precover,
        sequence: seq_main,
        tower_end: TowerEnd::Middle,
        tower,
        end_statement: format!(
            "restriction of the kernel W^{}(N′) lies in ℭ for base `{}` (verified)",
            inner.tower.length(),
            cfg.base.name()
        ),
        condition_sample,
        assumptions: inner.assumptions,
    })
}

/// Decision certificate for membership in a lifted class.
#[derive(Clone, Debug)]
pub struct MembershipCertificate {
    pub member: bool,
    /// The special approximation the decision is read off from.
    pub certificate: ApproximationCertificate,
    /// Present exactly when the module is a member: the section/retraction
    /// pair splitting the approximation.
    pub splitting: Option<Splitting>,
    /// Present exactly when the module is not a member: the nonzero class of
    /// the approximation sequence.
    pub obstruction: Option<ExtClass>,
    /// dim Ext¹ between the approximation's other end and the module.
    pub ext1_dim: usize,
}

/// Decides membership of X in the coinduced-lift class ℭ_A: X belongs to it
/// exactly when its special preenvelope splits, making X a direct summand
/// of the cofiltered middle term.
pub fn membership_in_ca(
    cfg: &LiftedPairConfig,
    x: &Arc<Module>,
) -> Result<MembershipCertificate, TowersError> {
    let certificate = q_preenvelope(cfg, x, cfg.k)?;
    let splitting = is_split(&certificate.sequence);
    let member = splitting.is_some();
    let ext1_dim = ext_dim(certificate.sequence.quotient_module(), x, 1);
    assert_eq!(
        member,
        ext1_dim == 0,
        "splitting of the special preenvelope must agree with Ext¹-vanishing"
    );
    let obstruction = if member {
        None
    } else {
        let class = classify_ext1(&certificate.sequence);
        assert!(!class.is_zero(), "a non-split sequence has a nonzero class");
        Some(class)
    };
    Ok(MembershipCertificate { member, certificate, splitting, obstruction, ext1_dim })
}

/// Decides membership of X in the induced-lift class 𝔉^A: X belongs to it
/// exactly when its special precover splits, making X a direct summand of
/// the filtered middle term.
pub fn membership_in_fa_dual(
    cfg: &LiftedPairConfig,
    x: &Arc<Module>,
) -> Result<MembershipCertificate, TowersError> {
    let certificate = w_precover(cfg, x, cfg.k)?;
    let splitting = is_split(&certificate.sequence);
    let member = splitting.is_some();
    let ext1_dim = ext_dim(x, certificate.sequence.kernel_module(), 1);
    assert_eq!(
        member,
        ext1_dim == 0,
        "splitting of the special precover must agree with Ext¹-vanishing"
    );
    let obstruction = if member {
        None
    } else {
        let class = classify_ext1(&certificate.sequence);
        assert!(!class.is_zero(), "a non-split sequence has a nonzero class");
        Some(class)
    };
    Ok(MembershipCertificate { member, certificate, splitting, obstruction, ext1_dim })
}

fn opposite(side: Side) -> Side {
    match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

/// Does the regular module lie in the additive closure of images of maps
/// from powers of `s`? Equivalent to `s` generating the module category.
fn generates(s: &Arc<Module>) -> bool {
    let reg = Module::regular(s.algebra(), s.side());
    let homs = hom_space(s, &reg);
    if homs.is_empty() {
        return reg.dim() == 0;
    }
    let mats: Vec<&FpMatrix> = homs.iter().map(|h| &h.matrix).collect();
    FpMatrix::hstack(s.p(), &mats).rank() == reg.dim()
}

/// Does the dual of the regular module embed into a finite power of `s`?
/// Equivalent to `s` cogenerating the module category.
fn cogenerates(s: &Arc<Module>) -> bool {
    let co = crate::modcat::dual(&Module::regular(s.algebra(), opposite(s.side())));
    let homs = hom_space(&co, s);
    if homs.is_empty() {
        return co.dim() == 0;
    }
    let mats: Vec<&FpMatrix> = homs.iter().map(|h| &h.matrix).collect();
    FpMatrix::vstack(s.p(), &mats).rank() == co.dim()
}

/// Builds the universal-extension cofiltration 0 → D′ → F → M → 0 for a
/// finite sequence 𝒯 = (S₀, …, S_n) with S₀ an injective cogenerator and
/// Ext¹(S_j, S_i) = 0 for i ≤ j. Working up from G₁ = M, each stage glues
/// on the full Ext¹(G_i, S_i)-basis as one diagonal extension
/// 0 → S_i^{d_i} → G_{i+1} → G_i → 0, so the kernel D′ is cofiltered by
/// finite powers of the S_i and F = G_{n+1} satisfies Ext¹(F, S_i) = 0 for
/// every i. Index sets are the finite Ext¹ bases; at this scale that finite
/// replacement is exact, and it is still recorded as an assumption.
pub fn dual_bongartz_precover(
    tees: &[Arc<Module>],
    m: &Arc<Module>,
) -> Result<ApproximationCertificate, TowersError> {
    if tees.is_empty() {
        return Err(TowersError::Precondition {
            what: "the cogenerating sequence must be nonempty".to_string(),
        });
    }
    let algebra = m.algebra();
    let side = m.side();
    if !tees.iter().all(|t| same_algebra(t.algebra(), algebra) && t.side() == side) {
        return Err(TowersError::Precondition {
            what: "all sequence members must live in the category of the input".to_string(),
        });
    }
    let n = tees.len() - 1;
    if !is_injective(&tees[0]) {
        return Err(TowersError::HypothesisFailed {
            what: "S₀ is not injective".to_string(),
        });
    }
    if !cogenerates(&tees[0]) {
        return Err(TowersError::HypothesisFailed {
            what: "S₀ is not a cogenerator: the dual of the regular module does not embed \
                   into a finite power of it"
                .to_string(),
        });
    }
    for j in 0..=n {
        for i in 0..=j {
            let d = ext_dim(&tees[j], &tees[i], 1);
            if d != 0 {
                return Err(TowersError::HypothesisFailed {
                    what: format!("Ext¹(S_{j}, S_{i}) has dimension {d} instead of 0"),
                });
            }
        }
    }
    let mut g = Arc::clone(m);
    let mut chain = Vec::new();
    let mut steps = Vec::new();
    for i in 1..=n {
        let (d, classes) = ext(&g, &tees[i], 1);
        let (pw, _, _) = power_module(&tees[i], d);
        let ses = if d == 0 {
            ShortExactSeq::new(ModuleMorphism::zero_map(&pw, &g), ModuleMorphism::identity(&g))?
        } else {
            let reps: Vec<&FpMatrix> = classes.iter().map(|c| &c.rep.matrix).collect();
            let stacked = FpMatrix::vstack(m.p(), &reps);
            let rep =
                ModuleMorphism::new(Arc::clone(&classes[0].rep.source), Arc::clone(&pw), stacked)
                    .expect("the diagonal representative is a module map");
            realize_ext1_rep(&classes[0].resolution.steps[0], &rep)
        };
        let gnext = Arc::clone(ses.middle_module());
        for t in 0..=i {
            let dd = ext_dim(&gnext, &tees[t], 1);
            if dd != 0 {
                return Err(TowersError::StagedInvariantBroken { stage: i, index: t, dim: dd });
            }
        }
        steps.push(StepWitness {
            edge: ses.i.clone(),
            iso: ModuleMorphism::identity(&pw),
            note: format!("power of S_{i} of size {d} (full Ext¹ basis)"),
        });
        chain.push(ses.q.clone());
        g = gnext;
    }
    for t in 0..=n {
        let dd = ext_dim(&g, &tees[t], 1);
        if dd != 0 {
            return Err(TowersError::StagedInvariantBroken { stage: n + 1, index: t, dim: dd });
        }
    }
    let (raw_tower, sequence) = if chain.is_empty() {
        trivial_cofiltration(m)
    } else {
        cofiltration_from_surjection_chain(&chain, &steps)
    };
    let tower = prepend_zero_layer(raw_tower, &tees[0], "power of S₀ of size 0 (injective layer)");
    Ok(ApproximationCertificate {
        side: ApproximationSide::Precover,
        sequence,
        tower_end: TowerEnd::Kernel,
        tower,
        end_statement: format!(
            "Ext¹(F, S_i) = 0 recomputed for every 0 ≤ i ≤ {n} on the middle term"
        ),
        condition_sample: Vec::new(),
        assumptions: vec![KAPPA_REDUCTION.to_string()],
    })
}

/// Builds the universal-extension filtration 0 → N → D → D/N → 0 for a
/// finite sequence 𝒮 = (S₀, …, S_n) with S₀ a projective generator and
/// Ext¹(S_i, S_j) = 0 for i ≤ j. Working up from G₁ = N, each stage glues
/// on the full Ext¹(S_i, G_i)-basis as one diagonal extension
/// 0 → G_i → G_{i+1} → S_i^{d_i} → 0, so D/N is filtered by finite powers
/// of the S_i and D = G_{n+1} satisfies Ext¹(S_i, D) = 0 for every i.
pub fn bongartz_preenvelope(
    esses: &[Arc<Module>],
    n_mod: &Arc<Module>,
) -> Result<ApproximationCertificate, TowersError> {
    if esses.is_empty() {
        return Err(TowersError::Precondition {
            what: "the generating sequence must be nonempty".to_string(),
        });
    }
    let algebra = n_mod.algebra();
    let side = n_mod.side();
    if !esses.iter().all(|s| same_algebra(s.algebra(), algebra) && s.side() == side) {
        return Err(TowersError::Precondition {
            what: "all sequence members must live in the category of the input".to_string(),
        });
    }
    let n = esses.len() - 1;
    if !is_projective(&esses[0]) {
        return Err(TowersError::HypothesisFailed {
            what: "S₀ is not projective".to_string(),
        });
    }
    if !generates(&esses[0]) {
        return Err(TowersError::HypothesisFailed {
            what: "S₀ is not a generator: the regular module is not covered by maps from \
                   finite powers of it"
                .to_string(),
        });
    }
    for i in 0..=n {
        for j in i..=n {
            let d = ext_dim(&esses[i], &esses[j], 1);
            if d != 0 {
                return Err(TowersError::HypothesisFailed {
                    what: format!("Ext¹(S_{i}, S_{j}) has dimension {d} instead of 0"),
                });
            }
        }
    }
    let mut g = Arc::clone(n_mod);
    let mut chain = Vec::new();
    let mut steps = Vec::new();
    for i in 1..=n {
        let (d, classes) = ext(&esses[i], &g, 1);
        let (pw, _, _) = power_module(&esses[i], d);
        let ses = if d == 0 {
            ShortExactSeq::new(ModuleMorphism::identity(&g), ModuleMorphism::zero_map(&g, &pw))?
        } else {
            // Over the power's own cover sequence: the canonical syzygy of a
            // power is the matching power of the syzygy, block by block, so
            // the per-copy representatives concatenate to one morphism.
            let res = Resolution::of(&pw, 1);
            let step = &res.steps[0];
            let per_copy = classes[0].rep.source.dim();
            assert_eq!(step.kernel_module().dim(), d * per_copy);
            let reps: Vec<&FpMatrix> = classes.iter().map(|c| &c.rep.matrix).collect();
            let stacked = FpMatrix::hstack(n_mod.p(), &reps);
            let rep =
                ModuleMorphism::new(Arc::clone(step.kernel_module()), Arc::clone(&g), stacked)
                    .expect("the diagonal representative is a module map");
            realize_ext1_rep(step, &rep)
        };
        let gnext = Arc::clone(ses.middle_module());
        for t in 0..=i {
            let dd = ext_dim(&esses[t], &gnext, 1);
            if dd != 0 {
                return Err(TowersError::StagedInvariantBroken { stage: i, index: t, dim: dd });
            }
        }
        steps.push(StepWitness {
            edge: ses.q.clone(),
            iso: ModuleMorphism::identity(&pw),
            note: format!("power of S_{i} of size {d} (full Ext¹ basis)"),
        });
        chain.push(ses.i.clone());
        g = gnext;
    }
    for t in 0..=n {
        let dd = ext_dim(&esses[t], &g, 1);
        if dd != 0 {
            return Err(TowersError::StagedInvariantBroken { stage: n + 1, index: t, dim: dd });
        }
    }
    let (raw_tower, sequence) = if chain.is_empty() {
        trivial_filtration(n_mod)
    } else {
        filtration_from_injection_chain(&chain, &steps)
    };
    let tower =
        prepend_zero_layer(raw_tower, &esses[0], "power of S₀ of size 0 (projective layer)");
    Ok(ApproximationCertificate {
        side: ApproximationSide::Preenvelope,
        sequence,
        tower_end: TowerEnd::Quotient,
        tower,
        end_statement: format!(
            "Ext¹(S_i, D) = 0 recomputed for every 0 ≤ i ≤ {n} on the middle term"
        ),
        condition_sample: Vec::new(),
        assumptions: vec![KAPPA_REDUCTION.to_string()],
    })
}

/// The cotorsion oracle for the pair cogenerated by 𝒯, with the universal
/// extension tower installed as its precover provider. Preenvelopes then
/// arise through the Salce conversion; for 𝒯 = {injective cogenerator} that
/// conversion returns the plain cogenerator-embedding sequence.
pub fn dual_bongartz_oracle(name: impl Into<String>, tees: Vec<Arc<Module>>) -> CotorsionOracle {
    let list = tees.clone();
    CotorsionOracle::cogenerated(name, tees).with_precover(move |m| {
        let cert = dual_bongartz_precover(&list, m).map_err(|e| CotorsionError::Provider {
            oracle: "universal extension tower".to_string(),
            message: e.to_string(),
        })?;
        Ok(Approximation::plain(cert.sequence))
    })
}

/// The cotorsion oracle for the pair generated by 𝒮, with the universal
/// extension tower installed as its preenvelope provider. Precovers then
/// arise through the Salce conversion.
pub fn bongartz_oracle(name: impl Into<String>, esses: Vec<Arc<Module>>) -> CotorsionOracle {
    let list = esses.clone();
    CotorsionOracle::generated(name, esses).with_preenvelope(move |n| {
        let cert = bongartz_preenvelope(&list, n).map_err(|e| CotorsionError::Provider {
            oracle: "universal extension tower".to_string(),
            message: e.to_string(),
        })?;
        Ok(Approximation::plain(cert.sequence))
    })
}

/// Clause-by-clause report of a (co)tilting check.
#[derive(Clone, Debug)]
pub struct TiltingReport {
    /// The capped homological dimension computed for clause 1.
    pub dimension: RelDim,
    pub clause1_pass: bool,
    /// dim Ext^i of the module against itself for i = 1, …, n+2.
    pub ext_self_dims: Vec<usize>,
    pub clause2_pass: bool,
    pub chain_exact: bool,
    /// One entry per resolving term: does it lie in the additive closure?
    pub terms_in_class: Vec<bool>,
    /// The far end of the witness chain is the regular module (tilting)
    /// resp. an injective cogenerator (cotilting).
    pub end_ok: bool,
    pub clause3_pass: bool,
    pub pass: bool,
    pub assumptions: Vec<String>,
}

/// Is the composable chain exact: first map injective, last map onto, and
/// at every junction ker = im (checked by composite vanishing and ranks)?
fn chain_is_exact(maps: &[ModuleMorphism]) -> bool {
    if maps.is_empty() {
        return false;
    }
    for w in maps.windows(2) {
        if *w[0].target != *w[1].source {
            return false;
        }
        if !w[1].matrix.mul(&w[0].matrix).is_zero() {
            return false;
        }
        if w[0].matrix.rank() + w[1].matrix.rank() != w[0].target.dim() {
            return false;
        }
    }
    maps.first().unwrap().is_injective_map() && maps.last().unwrap().is_surjective_map()
}

/// Checks the three cotilting clauses for U at parameter n. The witness is
/// the chain of n+1 maps U_n → ⋯ → U_0 → J forming the exact coresolution
/// 0 → U_n → ⋯ → U_0 → J → 0 demanded by clause 3: every U_t must lie in
/// the additive closure of U and J must be an injective cogenerator.
/// Self-orthogonality is checked up to degree n+2; the finite reduction of
/// product index sets is exact at this scale and recorded as an assumption.
pub fn cotilting_check(
    u: &Arc<Module>,
    n: usize,
    witness: &[ModuleMorphism],
) -> Result<TiltingReport, TowersError> {
    if witness.len() != n + 1 {
        return Err(TowersError::Precondition {
            what: format!("the witness chain needs {} maps, got {}", n + 1, witness.len()),
        });
    }
    let oracle = CotorsionOracle::all_inj(u.algebra(), u.side());
    let dimension = rel_coresolution_dim(&oracle, u, n)?;
    let clause1_pass = matches!(dimension, RelDim::Exactly(l) if l <= n);
    let ext_self_dims: Vec<usize> = (1..=n + 2).map(|i| ext_dim(u, u, i)).collect();
    let clause2_pass = ext_self_dims.iter().all(|&d| d == 0);
    let chain_exact = chain_is_exact(witness);
    let terms_in_class: Vec<bool> = witness.iter().map(|d| is_in_add(&d.source, u)).collect();
    let far_end = &witness.last().unwrap().target;
    let end_ok = is_injective(far_end) && cogenerates(far_end);
    let clause3_pass = chain_exact && terms_in_class.iter().all(|&b| b) && end_ok;
    let pass = clause1_pass && clause2_pass && clause3_pass;
    Ok(TiltingReport {
        dimension,
        clause1_pass,
        ext_self_dims,
        clause2_pass,
        chain_exact,
        terms_in_class,
        end_ok,
        clause3_pass,
        pass,
        assumptions: vec![KAPPA_REDUCTION.to_string()],
    })
}

/// Checks the three tilting clauses for T at parameter n. The witness is
/// the chain of n+1 maps R → T⁰ → ⋯ → Tⁿ forming the exact coresolution
/// 0 → R → T⁰ → ⋯ → Tⁿ → 0 demanded by clause 3: every T^t must lie in the
/// additive closure of T and the chain must start on the regular module.
pub fn tilting_check(
    t: &Arc<Module>,
    n: usize,
    witness: &[ModuleMorphism],
) -> Result<TiltingReport, TowersError> {
    if witness.len() != n + 1 {
        return Err(TowersError::Precondition {
            what: format!("the witness chain needs {} maps, got {}", n + 1, witness.len()),
        });
    }
    let oracle = CotorsionOracle::proj_all(t.algebra(), t.side());
    let dimension = rel_resolution_dim(&oracle, t, n)?;
    let clause1_pass = matches!(dimension, RelDim::Exactly(l) if l <= n);
    let ext_self_dims: Vec<usize> = (1..=n + 2).map(|i| ext_dim(t, t, i)).collect();
    let clause2_pass = ext_self_dims.iter().all(|&d| d == 0);
    // The chain 0 → R → T⁰ → ⋯ → Tⁿ → 0 is exact iff R ↪ T⁰ is injective,
    // the junctions are exact, and the last map is onto.
    let chain_exact = chain_is_exact(witness);
    let terms_in_class: Vec<bool> = witness.iter().map(|d| is_in_add(&d.target, t)).collect();
    let reg = Module::regular(t.algebra(), t.side());
    let end_ok = *witness.first().unwrap().source == *reg;
    let clause3_pass = chain_exact && terms_in_class.iter().all(|&b| b) && end_ok;
    let pass = clause1_pass && clause2_pass && clause3_pass;
    Ok(TiltingReport {
        dimension,
        clause1_pass,
        ext_self_dims,
        clause2_pass,
        chain_exact,
        terms_in_class,
        end_ok,
        clause3_pass,
        pass,
        assumptions: vec![KAPPA_REDUCTION.to_string()],
    })
}

/// Report for a candidate derived sequence U = U₀, U₁, …, U_n of cotilting
/// modules attached to a cotilting module of parameter n.
#[derive(Clone, Debug)]
pub struct DerivedSequenceReport {
    /// U₀ is the given cotilting module itself.
    pub u0_matches: bool,
    /// Per sample module: (dim, left predicate, right predicate) where the
    /// left predicate is Ext¹(X, U_j) = 0 for all j and the right one is
    /// Ext^i(X, U) = 0 for 1 ≤ i ≤ n+1.
    pub sample_rows: Vec<(usize, bool, bool)>,
    pub sample_agrees: bool,
    /// Cotilting reports for U_j at parameter n − j.
    pub level_reports: Vec<TiltingReport>,
    pub levels_pass: bool,
    pub pass: bool,
    pub assumptions: Vec<String>,
}

/// Verifies a candidate derived sequence for a cotilting module U of
/// parameter n: each candidate U_j (with its own witness chain) must be
/// cotilting of parameter n − j, U₀ must be U itself, and on the declared
/// sample the class cut out by simultaneous Ext¹-vanishing against all U_j
/// must agree with the class cut out by total Ext-vanishing against U.
pub fn verify_derived_sequence(
    u: &Arc<Module>,
    n: usize,
    candidates: &[(Arc<Module>, Vec<ModuleMorphism>)],
    sample: &[Arc<Module>],
) -> Result<DerivedSequenceReport, TowersError> {
    if candidates.len() != n + 1 {
        return Err(TowersError::Precondition {
            what: format!("need {} candidate modules, got {}", n + 1, candidates.len()),
        });
    }
    let u0_matches = *candidates[0].0 == **u;
    let mut sample_rows = Vec::with_capacity(sample.len());
    for x in sample {
        let left = candidates.iter().all(|(uj, _)| ext_dim(x, uj, 1) == 0);
        let right = (1..=n + 1).all(|i| ext_dim(x, u, i) == 0);
        sample_rows.push((x.dim(), left, right));
    }
    let sample_agrees = sample_rows.iter().all(|&(_, l, r)| l == r);
    let mut level_reports = Vec::with_capacity(candidates.len());
    for (j, (uj, wit)) in candidates.iter().enumerate() {
        level_reports.push(cotilting_check(uj, n - j, wit)?);
    }
    let levels_pass = level_reports.iter().all(|r| r.pass);
    let pass = u0_matches && sample_agrees && levels_pass;
    Ok(DerivedSequenceReport {
        u0_matches,
        sample_rows,
        sample_agrees,
        level_reports,
        levels_pass,
        pass,
        assumptions: vec![KAPPA_REDUCTION.to_string()],
    })
}
