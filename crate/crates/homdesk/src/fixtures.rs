//! Shared desk-scale fixtures: the standard small algebras, their canonical
//! modules (vertex simples, indecomposable projectives and injectives), ring
//! morphisms between fixtures, and seeded random module / short-exact-
//! sequence generators. Everything here is deterministic: random fixtures
//! take an explicit ChaCha seed so test runs and reports are reproducible.

use crate::algebra::{path_algebra, Algebra, AlgebraMorphism, PathRelation};
use crate::cdg::CDGRing;
use crate::exactfield::FpMatrix;
use crate::modcat::{
    direct_sum, dual, ext, realize_ext1, ExtClass, Module, ModuleError, ModuleMorphism,
    ShortExactSeq, Side,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

/// The prime field 𝔽_p as a one-dimensional algebra.
pub fn prime_field(p: u32) -> Arc<Algebra> {
    Arc::new(Algebra::new(p, 1, |_, _| vec![1], &[1], Some(vec!["1".into()]), None))
}

/// 𝔽_p with the trivial grading (everything in degree 0).
pub fn graded_prime_field(p: u32) -> Arc<Algebra> {
    Arc::new(Algebra::new(p, 1, |_, _| vec![1], &[1], Some(vec!["1".into()]), Some(vec![0])))
}

fn dual_numbers_table(i: usize, j: usize) -> Vec<i64> {
    match (i, j) {
        (0, 0) => vec![1, 0],
        (0, 1) | (1, 0) => vec![0, 1],
        (1, 1) => vec![0, 0],
        _ => unreachable!(),
    }
}

/// The dual numbers 𝔽_p[x]/(x²), basis {1, x}.
pub fn dual_numbers(p: u32) -> Arc<Algebra> {
    Arc::new(Algebra::new(p, 2, dual_numbers_table, &[1, 0], Some(vec!["1".into(), "x".into()]), None))
}

/// Graded dual numbers 𝔽_p[x]/(x²) with x placed in the given degree.
pub fn graded_dual_numbers(p: u32, degree: i64) -> Arc<Algebra> {
    Arc::new(Algebra::new(
        p,
        2,
        dual_numbers_table,
        &[1, 0],
        Some(vec!["1".into(), "x".into()]),
        Some(vec![0, degree]),
    ))
}

/// 𝔽_p[x]/(x³) with x in degree 1, basis {1, x, x²}.
pub fn graded_truncated_cubic(p: u32) -> Arc<Algebra> {
    Arc::new(Algebra::new(
        p,
        3,
        |i, j| {
            let mut coords = vec![0i64; 3];
            if i + j < 3 {
                coords[i + j] = 1;
            }
            coords
        },
        &[1, 0, 0],
        Some(vec!["1".into(), "x".into(), "x²".into()]),
        Some(vec![0, 1, 2]),
    ))
}

// ---------------------------------------------------------------------------
// CDG-rings
// ---------------------------------------------------------------------------

/// The graded field as a CDG-ring with d = 0 and h = 0. Its δ-extension is
/// the graded dual numbers, so its CDG-modules are complexes of vector
/// spaces — the calibration fixture for every curved construction.
pub fn field_cdg_ring(p: u32) -> CDGRing {
    CDGRing::new(graded_prime_field(p), FpMatrix::zero(p, 1, 1), FpMatrix::zero(p, 1, 1))
        .expect("the graded field is a CDG-ring")
}

/// 𝔽_p[ε]/(ε²) with ε in degree 2, zero differential and curvature h = ε.
/// Its δ-extension is 𝔽_p[δ]/(δ⁴) with δ in degree 1 and δ² = ε — a ring of
/// infinite graded global dimension, exercising the honest-refusal paths.
pub fn epsilon_cdg_ring(p: u32) -> CDGRing {
    CDGRing::new(
        graded_dual_numbers(p, 2),
        FpMatrix::zero(p, 2, 2),
        FpMatrix::from_rows(p, &[vec![0], vec![1]]),
    )
    .expect("the ε-ring with curvature ε is a CDG-ring")
}

/// 𝔽_p[x]/(x³) with x in degree 1, d(x) = x² and h = 0: a DG-ring with a
/// genuinely nonzero differential, exercising every Koszul sign.
pub fn truncated_poly_cdg_ring(p: u32) -> CDGRing {
    let d = FpMatrix::from_rows(p, &[vec![0, 0, 0], vec![0, 0, 0], vec![0, 1, 0]]);
    CDGRing::new(graded_truncated_cubic(p), d, FpMatrix::zero(p, 3, 1))
        .expect("the truncated polynomial DG-ring is valid")
}

/// The A₂ quiver algebra: two vertices, one arrow, dimension 3
/// (basis e1, e2, a1).
pub fn a2(p: u32) -> Arc<Algebra> {
    Arc::new(path_algebra(p, 2, &[(0, 1)], &[]).expect("A2 is a valid quiver"))
}

/// The A₃ quiver algebra with the composite relation a2·a1 = 0, dimension 5
/// (basis e1, e2, e3, a1, a2).
pub fn a3_zero_relation(p: u32) -> Arc<Algebra> {
    let rel = PathRelation { terms: vec![(1, vec![0, 1])] };
    Arc::new(path_algebra(p, 3, &[(0, 1), (1, 2)], &[rel]).expect("A3 with a2a1=0 is valid"))
}

/// Upper-triangular 2×2 matrices, basis {e11, e12, e22}.
pub fn upper_triangular(p: u32) -> Arc<Algebra> {
    Arc::new(Algebra::new(
        p,
        3,
        |i, j| match (i, j) {
            (0, 0) => vec![1, 0, 0],
            (0, 1) => vec![0, 1, 0],
            (1, 2) => vec![0, 1, 0],
            (2, 2) => vec![0, 0, 1],
            _ => vec![0, 0, 0],
        },
        &[1, 0, 1],
        Some(vec!["e11".into(), "e12".into(), "e22".into()]),
        None,
    ))
}

/// The split semisimple algebra 𝔽_p × 𝔽_p (diagonal 2×2 matrices).
pub fn diagonal(p: u32) -> Arc<Algebra> {
    Arc::new(Algebra::new(
        p,
        2,
        |i, j| if i == j { (0..2).map(|k| i64::from(k == i)).collect() } else { vec![0, 0] },
        &[1, 1],
        Some(vec!["e11".into(), "e22".into()]),
        None,
    ))
}

/// The semisimple diagonal 𝔽_p × 𝔽_p embedded on the corner idempotents of
/// the upper-triangular 2×2 fixture: (a, b) ↦ a·e11 + b·e22.
pub fn diagonal_in_triangular(p: u32) -> AlgebraMorphism {
    let d = diagonal(p);
    let t = upper_triangular(p);
    let m = FpMatrix::from_fn(p, 3, 2, |r, c| i64::from((c == 0 && r == 0) || (c == 1 && r == 2)));
    AlgebraMorphism::new(d, t, m).expect("the diagonal embeds in the triangular algebra")
}

/// A₂ ⊗ 𝔽_p[x]/(x²) (dimension 6) together with the two factor embeddings
/// A₂ → T (a ↦ a⊗1) and 𝔽_p[x]/(x²) → T (r ↦ 1⊗r). Basis order is
/// factor-major: index = (A₂ index)·2 + (dual-numbers index).
pub fn a2_tensor_dual(p: u32) -> (Arc<Algebra>, AlgebraMorphism, AlgebraMorphism) {
    let a = a2(p);
    let d = dual_numbers(p);
    let t = Arc::new(crate::algebra::tensor_product(&a, &d));
    let (da, dd) = (a.dim(), d.dim());
    // a_i ↦ Σ_x unit_d[x] · e_{i·dd + x}
    let left = FpMatrix::from_fn(p, da * dd, da, |n, i| {
        if n / dd == i { d.unit().entry(n % dd, 0) as i64 } else { 0 }
    });
    // r_x ↦ Σ_i unit_a[i] · e_{i·dd + x}
    let right = FpMatrix::from_fn(p, da * dd, dd, |n, x| {
        if n % dd == x { a.unit().entry(n / dd, 0) as i64 } else { 0 }
    });
    let f_a = AlgebraMorphism::new(a, Arc::clone(&t), left).expect("a ↦ a⊗1 is a ring map");
    let f_d = AlgebraMorphism::new(d, Arc::clone(&t), right).expect("r ↦ 1⊗r is a ring map");
    (t, f_a, f_d)
}

/// The unit map 𝔽_p → A for any fixture algebra.
pub fn unit_embedding(a: &Arc<Algebra>) -> AlgebraMorphism {
    let f = prime_field(a.p());
    let m = FpMatrix::from_fn(a.p(), a.dim(), 1, |r, _| a.unit().entry(r, 0) as i64);
    AlgebraMorphism::new(f, Arc::clone(a), m).expect("unit map is a ring map")
}

// ---------------------------------------------------------------------------
// Canonical modules
// ---------------------------------------------------------------------------

/// A one-dimensional module where basis element i acts by the scalar
/// values[i]; validates that this really is an algebra map A → 𝔽_p.
pub fn one_dim_module(a: &Arc<Algebra>, side: Side, values: &[i64]) -> Result<Arc<Module>, ModuleError> {
    assert_eq!(values.len(), a.dim());
    let p = a.p();
    let action = values.iter().map(|&v| FpMatrix::from_rows(p, &[vec![v]])).collect();
    Module::new(Arc::clone(a), side, action, None)
}

/// The vertex simple S_v of a path-algebra fixture: the vertex idempotent
/// e_v acts by 1, every other path by 0. (Vertices occupy the first basis
/// indices of `path_algebra` output.)
pub fn vertex_simple(a: &Arc<Algebra>, v: usize, side: Side) -> Arc<Module> {
    let values: Vec<i64> = (0..a.dim()).map(|i| i64::from(i == v)).collect();
    one_dim_module(a, side, &values).expect("vertex simples are valid")
}

/// The trivial module k over a local fixture like the dual numbers: the unit
/// acts by 1 and all nilpotent basis elements by 0.
pub fn trivial_module(a: &Arc<Algebra>, side: Side) -> Arc<Module> {
    let mut values = vec![0i64; a.dim()];
    for i in 0..a.dim() {
        values[i] = a.unit().entry(i, 0) as i64;
    }
    one_dim_module(a, side, &values).expect("trivial module is valid for this fixture")
}

/// The A-submodule of M generated by the given coordinate columns, with its
/// inclusion. The basis is the canonical (echelon) basis of the closure of
/// the span under the algebra action.
pub fn submodule_generated(m: &Arc<Module>, gens: &[FpMatrix]) -> (Arc<Module>, ModuleMorphism) {
    let p = m.p();
    let dim = m.dim();
    let mut span = FpMatrix::zero(p, dim, 0);
    let mut work: Vec<FpMatrix> = Vec::new();
    let grow = |span: &mut FpMatrix, v: &FpMatrix, work: &mut Vec<FpMatrix>| {
        if !v.is_zero() && !span.spans(v) {
            *span = FpMatrix::hstack(p, &[span, v]).column_basis();
            work.push(v.clone());
        }
    };
    for g in gens {
        assert_eq!(g.rows(), dim, "generator must live in M");
        grow(&mut span, g, &mut work);
    }
    while let Some(v) = work.pop() {
        for &gi in m.algebra().generators() {
            let w = m.action(gi).mul(&v);
            grow(&mut span, &w, &mut work);
        }
    }
    let b = span;
    let action: Vec<FpMatrix> = (0..m.algebra().dim())
        .map(|bb| b.solve(&m.action(bb).mul(&b)).expect("closure is action-invariant"))
        .collect();
    let grading = m.grading().map(|g| {
        (0..b.cols())
            .map(|j| {
                let lead = (0..dim).find(|&r| b.entry(r, j) != 0).expect("basis column is nonzero");
                let d = g[lead];
                for r in 0..dim {
                    assert!(b.entry(r, j) == 0 || g[r] == d, "submodule generators must be homogeneous");
                }
                d
            })
            .collect()
    });
    let sub = Module::new_internal(Arc::clone(m.algebra()), m.side(), action, grading);
    let incl = ModuleMorphism::new_internal(Arc::clone(&sub), Arc::clone(m), b);
    (sub, incl)
}

/// Quotient M / ⟨gens⟩ with its projection.
pub fn quotient_by_submodule(m: &Arc<Module>, gens: &[FpMatrix]) -> (Arc<Module>, ModuleMorphism) {
    let (_sub, incl) = submodule_generated(m, gens);
    let (q, proj, _s) = incl.cokernel();
    (q, proj)
}

fn coordinate(p: u32, n: usize, i: usize) -> FpMatrix {
    FpMatrix::from_fn(p, n, 1, |r, _| i64::from(r == i))
}

/// The indecomposable projective at vertex v: the submodule of the regular
/// module generated by the idempotent coordinate e_v (left side: A·e_v, the
/// paths starting at v).
pub fn projective_at(a: &Arc<Algebra>, v: usize, side: Side) -> (Arc<Module>, ModuleMorphism) {
    let reg = Module::regular(a, side);
    submodule_generated(&reg, &[coordinate(a.p(), a.dim(), v)])
}

/// The indecomposable injective at vertex v: the dual of the opposite-side
/// indecomposable projective.
pub fn injective_at(a: &Arc<Algebra>, v: usize, side: Side) -> Arc<Module> {
    let (pv, _incl) = projective_at(a, v, side.flip());
    dual(&pv)
}

// ---------------------------------------------------------------------------
// Seeded random fixtures
// ---------------------------------------------------------------------------

/// Deterministic RNG for fixtures; the same seed must always produce the
/// same objects.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random column vector in 𝔽_p^n.
pub fn random_vector(p: u32, n: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
    FpMatrix::from_fn(p, n, 1, |_, _| rng.gen_range(0..p) as i64)
}

/// A uniformly random invertible n×n matrix (rejection sampling).
pub fn random_invertible(p: u32, n: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
    loop {
        let m = FpMatrix::from_fn(p, n, n, |_, _| rng.gen_range(0..p) as i64);
        if m.rank() == n {
            return m;
        }
    }
}

/// A random module: the quotient of A^copies by the submodule generated by
/// `relations` random elements. Ungraded algebras only.
pub fn random_module(
    a: &Arc<Algebra>,
    side: Side,
    copies: usize,
    relations: usize,
    rng: &mut ChaCha8Rng,
) -> Arc<Module> {
    assert!(!a.is_graded(), "random modules are generated over ungraded fixtures");
    let f = Module::free(a, side, copies, None);
    let gens: Vec<FpMatrix> = (0..relations).map(|_| random_vector(a.p(), f.dim(), rng)).collect();
    let (q, _proj) = quotient_by_submodule(&f, &gens);
    q
}

/// M conjugated by an invertible change of basis g, with the isomorphism
/// M → M^g given by g itself.
pub fn conjugated_module(m: &Arc<Module>, g: &FpMatrix) -> (Arc<Module>, ModuleMorphism) {
    assert!(m.grading().is_none(), "conjugation scrambles gradings");
    assert!(g.rows() == m.dim() && g.cols() == m.dim());
    let ginv = g.inverse().expect("conjugator must be invertible");
    let action = (0..m.algebra().dim()).map(|b| g.mul(m.action(b)).mul(&ginv)).collect();
    let conj = Module::new_internal(Arc::clone(m.algebra()), m.side(), action, None);
    let iso = ModuleMorphism::new_internal(Arc::clone(m), Arc::clone(&conj), g.clone());
    (conj, iso)
}

/// A split short exact sequence 0 → K → E → Q → 0 disguised by a random
/// change of basis on the middle term.
pub fn random_split_ses(
    k: &Arc<Module>,
    q: &Arc<Module>,
    rng: &mut ChaCha8Rng,
) -> ShortExactSeq {
    let (sum, incls, projs) = direct_sum(&[k, q]);
    let g = random_invertible(sum.p(), sum.dim(), rng);
    let (e, iso) = conjugated_module(&sum, &g);
    let i = ModuleMorphism::new_internal(Arc::clone(k), Arc::clone(&e), iso.matrix.mul(&incls[0].matrix));
    let ginv = g.inverse().expect("invertible");
    let qm = ModuleMorphism::new_internal(e, Arc::clone(q), projs[1].matrix.mul(&ginv));
    ShortExactSeq::new(i, qm).expect("disguised split sequence is exact")
}

/// A random extension 0 → sub → E → quot → 0: realizes a random linear
/// combination of a basis of Ext¹(quot, sub). Falls back to the canonical
/// split sequence when Ext¹ vanishes (or the combination is zero).
pub fn random_extension(
    sub: &Arc<Module>,
    quot: &Arc<Module>,
    rng: &mut ChaCha8Rng,
) -> ShortExactSeq {
    let (d, classes) = ext(quot, sub, 1);
    if d == 0 {
        return ShortExactSeq::canonical_split(sub, quot);
    }
    let p = sub.p();
    let mut rep = FpMatrix::zero(p, sub.dim(), classes[0].rep.source.dim());
    for c in &classes {
        let coeff = rng.gen_range(0..p);
        if coeff != 0 {
            rep = rep.add(&c.rep.matrix.scale(coeff));
        }
    }
    let combined = ExtClass {
        degree: 1,
        rep: ModuleMorphism::new_internal(Arc::clone(&classes[0].rep.source), Arc::clone(sub), rep),
        resolution: Arc::clone(&classes[0].resolution),
        factor_space: classes[0].factor_space.clone(),
    };
    realize_ext1(&combined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::{hom_dim, is_injective, is_projective, is_split};

    #[test]
    fn all_algebra_fixtures_validate() {
        for p in [2u32, 3, 5] {
            assert_eq!(prime_field(p).validate(), Ok(()));
            assert_eq!(graded_prime_field(p).validate(), Ok(()));
            assert_eq!(dual_numbers(p).validate(), Ok(()));
            assert_eq!(graded_dual_numbers(p, 2).validate(), Ok(()));
            assert_eq!(a2(p).validate(), Ok(()));
            assert_eq!(a3_zero_relation(p).validate(), Ok(()));
            assert_eq!(upper_triangular(p).validate(), Ok(()));
            assert_eq!(diagonal(p).validate(), Ok(()));
            let (t, _, _) = a2_tensor_dual(p);
            assert_eq!(t.validate(), Ok(()));
        }
        assert_eq!(a3_zero_relation(3).dim(), 5, "a2a1 = 0 kills the long path");
    }

    #[test]
    fn canonical_modules_have_expected_shapes() {
        let a = a2(3);
        let (p1, incl1) = projective_at(&a, 0, Side::Left);
        let (p2, _) = projective_at(&a, 1, Side::Left);
        assert_eq!(p1.dim(), 2, "P1 = {{e1, a1}}");
        assert_eq!(p2.dim(), 1, "P2 = {{e2}} is simple projective");
        assert!(incl1.is_injective_map());
        assert!(is_projective(&p1) && is_projective(&p2));
        let i1 = injective_at(&a, 0, Side::Left);
        let i2 = injective_at(&a, 1, Side::Left);
        assert_eq!(i1.dim(), 1, "I1 = S1 over A2");
        assert_eq!(i2.dim(), 2);
        assert!(is_injective(&i1) && is_injective(&i2));
        let s1 = vertex_simple(&a, 0, Side::Left);
        let s2 = vertex_simple(&a, 1, Side::Left);
        assert_eq!(hom_dim(&p1, &s1), 1, "top of P1 is S1");
        assert_eq!(hom_dim(&p1, &s2), 0);
        assert_eq!(**&i1, *s1, "I1 and S1 coincide over A2");

        let t = a3_zero_relation(3);
        let dims: Vec<usize> = (0..3).map(|v| projective_at(&t, v, Side::Left).0.dim()).collect();
        assert_eq!(dims, vec![2, 2, 1], "projectives of A3 with a2a1 = 0");
        let idims: Vec<usize> = (0..3).map(|v| injective_at(&t, v, Side::Left).dim()).collect();
        assert_eq!(idims, vec![1, 2, 2], "injectives mirror the projectives");
    }

    #[test]
    fn trivial_module_over_local_fixtures() {
        let d = dual_numbers(5);
        let k = trivial_module(&d, Side::Left);
        assert_eq!(k.dim(), 1);
        assert!(k.action(1).is_zero());
        // the same recipe fails where the "nilpotent part" is not an ideal
        assert!(one_dim_module(&dual_numbers(5), Side::Left, &[1, 1]).is_err());
    }

    #[test]
    fn submodule_and_quotient_dimensions_add_up() {
        let a = upper_triangular(3);
        let reg = Module::regular(&a, Side::Left);
        // A·e11: left multiples of e11 — spans {e11} over upper-triangular?
        // e12·e11 = 0T, e11·e11 = e11; closure of e11 under left action.
        let (s, incl) = submodule_generated(&reg, &[coordinate(3, 3, 0)]);
        let (q, proj) = quotient_by_submodule(&reg, &[coordinate(3, 3, 0)]);
        assert_eq!(s.dim() + q.dim(), reg.dim());
        assert!(incl.is_injective_map());
        assert!(proj.is_surjective_map());
        // generated by everything = the whole module
        let (all, _) = submodule_generated(&reg, &[coordinate(3, 3, 0), coordinate(3, 3, 1), coordinate(3, 3, 2)]);
        assert_eq!(all.dim(), 3);
        // generated by nothing = zero
        let (z, _) = submodule_generated(&reg, &[]);
        assert_eq!(z.dim(), 0);
    }

    #[test]
    fn tensor_fixture_maps_are_ring_morphisms() {
        let (t, f_a, f_d) = a2_tensor_dual(3);
        assert_eq!(t.dim(), 6);
        // images of the two units agree
        assert_eq!(f_a.matrix.mul(f_a.source.unit()), *t.unit());
        assert_eq!(f_d.matrix.mul(f_d.source.unit()), *t.unit());
        // images commute: (a⊗1)(1⊗r) = a⊗r = (1⊗r)(a⊗1)
        let a_img = f_a.matrix.column_at(2); // a1 ⊗ 1
        let d_img = f_d.matrix.column_at(1); // 1 ⊗ x
        let prod1 = t.left_mult_of(&a_img).mul(&d_img);
        let prod2 = t.left_mult_of(&d_img).mul(&a_img);
        assert_eq!(prod1, prod2);
        assert!(!prod1.is_zero());
        let u = unit_embedding(&a2(3));
        assert_eq!(u.matrix.cols(), 1);
    }

    #[test]
    fn random_fixtures_are_deterministic_and_valid() {
        let a = a2(3);
        let m1 = random_module(&a, Side::Left, 2, 3, &mut seeded_rng(7));
        let m2 = random_module(&a, Side::Left, 2, 3, &mut seeded_rng(7));
        assert_eq!(*m1, *m2, "same seed, same module");
        let m3 = random_module(&a, Side::Left, 2, 3, &mut seeded_rng(8));
        // different seed is allowed to coincide, but the sizes stay bounded
        assert!(m3.dim() <= 6);

        let k = vertex_simple(&a, 1, Side::Left);
        let q = vertex_simple(&a, 0, Side::Left);
        let ses = random_split_ses(&k, &q, &mut seeded_rng(11));
        assert!(is_split(&ses).is_some(), "disguised split sequence still splits");
        assert_eq!(ses.middle_module().dim(), 2);

        // Ext¹(S1, S2) = k over A2: seeds that draw a nonzero coefficient
        // produce a non-split extension with middle P1.
        let e = random_extension(&k, &q, &mut seeded_rng(1));
        let e_again = random_extension(&k, &q, &mut seeded_rng(1));
        assert_eq!(e.i.matrix, e_again.i.matrix, "extension fixture is reproducible");
        let any_nonsplit = (0..6u64).any(|s| is_split(&random_extension(&k, &q, &mut seeded_rng(s))).is_none());
        assert!(any_nonsplit, "some seed realizes the nontrivial class");

        // Ext¹(S2, S1) = 0: the fallback is the canonical split sequence.
        let f = random_extension(&q, &k, &mut seeded_rng(3));
        assert!(is_split(&f).is_some());
    }

    #[test]
    fn conjugated_module_is_isomorphic() {
        let a = dual_numbers(2);
        let reg = Module::regular(&a, Side::Left);
        let g = random_invertible(2, 2, &mut seeded_rng(42));
        let (conj, iso) = conjugated_module(&reg, &g);
        assert!(iso.is_iso());
        assert_eq!(conj.dim(), 2);
        // conjugation preserves homological invariants
        assert_eq!(is_projective(&reg), is_projective(&conj));
    }
}
