//! Finite-dimensional unital associative algebras over 𝔽_p by structure
//! constants, optionally ℤ-graded with finite support, plus algebra
//! homomorphisms and a quiver-with-relations path-algebra builder.
//!
//! An algebra is immutable after construction; the constructor caches the
//! left/right multiplication matrices and a greedy unital generating set
//! (used to shrink intertwining solves downstream). Validation is a separate
//! operation that reports the first failing law in scan order.

use crate::exactfield::{quotient_basis, FpMatrix};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// First-failure report from [`Algebra::validate`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraViolation {
    #[error("associativity fails at basis triple ({i}, {j}, {l}): (b{i}·b{j})·b{l} ≠ b{i}·(b{j}·b{l})")]
    NotAssociative { i: usize, j: usize, l: usize },
    #[error("left unit law fails at basis element {j}: 1·b{j} ≠ b{j}")]
    LeftUnitFails { j: usize },
    #[error("right unit law fails at basis element {i}: b{i}·1 ≠ b{i}")]
    RightUnitFails { i: usize },
    #[error("unit is not concentrated in degree 0 (nonzero coordinate at basis element {i} of degree {degree})")]
    UnitNotDegreeZero { i: usize, degree: i64 },
    #[error("product b{i}·b{j} has a component at basis element {k} of degree {found}, expected degree {expected}")]
    ProductNotGraded { i: usize, j: usize, k: usize, found: i64, expected: i64 },
}

/// Violation report from [`AlgebraMorphism::new`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismViolation {
    #[error("matrix shape {got_rows}x{got_cols} does not match (dim target, dim source) = ({want_rows}, {want_cols})")]
    ShapeMismatch { got_rows: usize, got_cols: usize, want_rows: usize, want_cols: usize },
    #[error("source and target algebras live over different moduli")]
    ModulusMismatch,
    #[error("morphism does not preserve the unit")]
    UnitNotPreserved,
    #[error("morphism does not preserve the product of basis pair ({i}, {j})")]
    MultiplicationNotPreserved { i: usize, j: usize },
    #[error("gradings incompatible: matrix entry at (target {k}, source {i}) couples degree {src_degree} to degree {tgt_degree}")]
    DegreeNotPreserved { k: usize, i: usize, src_degree: i64, tgt_degree: i64 },
    #[error("exactly one of source/target is graded; morphisms require both or neither")]
    GradingMismatch,
}

/// A finite-dimensional unital associative 𝔽_p-algebra given by structure
/// constants `c[i][j][k]` with `b_i·b_j = Σ_k c_{ij}^k b_k`, optionally
/// ℤ-graded (one degree per basis element, finite support window).
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    p: u32,
    dim: usize,
    /// Flat structure constants: mult[(i*dim + j)*dim + k] = c_{ij}^k.
    mult: Vec<u32>,
    unit: FpMatrix,
    labels: Vec<String>,
    degrees: Option<Vec<i64>>,
    /// Cached left multiplication matrices: L_i · x = b_i · x.
    left: Vec<FpMatrix>,
    /// Cached right multiplication matrices: R_i · x = x · b_i.
    right: Vec<FpMatrix>,
    /// Greedy unital generating set (increasing basis indices).
    generators: Vec<usize>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over F_{}, basis [{}]{})", self.dim, self.p, self.labels.join(", "),
            if self.degrees.is_some() { ", graded" } else { "" })
    }
}

impl Algebra {
    /// Builds an algebra from a product function returning the coordinate
    /// vector of `b_i · b_j` (entries reduced mod p). Does not validate; call
    /// [`Algebra::validate`] or construct through a trusted builder.
    pub fn new(
        p: u32,
        dim: usize,
        mut mult_fn: impl FnMut(usize, usize) -> Vec<i64>,
        unit: &[i64],
        labels: Option<Vec<String>>,
        degrees: Option<Vec<i64>>,
    ) -> Self {
        assert!(dim >= 1, "unital algebras have dim >= 1");
        assert_eq!(unit.len(), dim, "unit coordinate length");
        if let Some(d) = &degrees {
            assert_eq!(d.len(), dim, "degree vector length");
        }
        let mut mult = vec![0u32; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let v = mult_fn(i, j);
                assert_eq!(v.len(), dim, "product coordinate length at ({i},{j})");
                for k in 0..dim {
                    mult[(i * dim + j) * dim + k] = v[k].rem_euclid(p as i64) as u32;
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..dim).map(|i| format!("b{i}")).collect());
        assert_eq!(labels.len(), dim, "label count");
        let unit = FpMatrix::from_fn(p, dim, 1, |i, _| unit[i]);
        let mut a = Algebra { p, dim, mult, unit, labels, degrees, left: Vec::new(), right: Vec::new(), generators: Vec::new() };
        a.left = (0..dim)
            .map(|i| FpMatrix::from_fn(p, dim, dim, |k, j| a.c(i, j, k) as i64))
            .collect();
        a.right = (0..dim)
            .map(|j| FpMatrix::from_fn(p, dim, dim, |k, i| a.c(i, j, k) as i64))
            .collect();
        a.generators = a.compute_generators();
        a
    }

    /// Structure constant c_{ij}^k.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u32 {
        self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of the unit, as a dim×1 column.
    pub fn unit(&self) -> &FpMatrix {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn is_graded(&self) -> bool {
        self.degrees.is_some()
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    /// Degree of basis element i; panics on ungraded algebras.
    pub fn degree_of(&self, i: usize) -> i64 {
        self.degrees.as_ref().expect("ungraded algebra has no degrees")[i]
    }

    /// Grading support window (lo, hi); None for ungraded algebras.
    pub fn window(&self) -> Option<(i64, i64)> {
        let d = self.degrees.as_ref()?;
        Some((*d.iter().min().unwrap(), *d.iter().max().unwrap()))
    }

    /// Coordinates of b_i · b_j as a column vector.
    pub fn mult_coords(&self, i: usize, j: usize) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.dim, 1, |k, _| self.c(i, j, k) as i64)
    }

    /// Left multiplication matrix L_i (x ↦ b_i·x).
    pub fn left_mult(&self, i: usize) -> &FpMatrix {
        &self.left[i]
    }

    /// Right multiplication matrix R_i (x ↦ x·b_i).
    pub fn right_mult(&self, i: usize) -> &FpMatrix {
        &self.right[i]
    }

    /// Left multiplication by an arbitrary element (column vector of coords).
    pub fn left_mult_of(&self, x: &FpMatrix) -> FpMatrix {
        assert_eq!(x.rows(), self.dim);
        let mut acc = FpMatrix::zero(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            let c = x.entry(i, 0);
            if c != 0 {
                acc = acc.add(&self.left[i].scale(c));
            }
        }
        acc
    }

    /// Right multiplication by an arbitrary element.
    pub fn right_mult_of(&self, x: &FpMatrix) -> FpMatrix {
        assert_eq!(x.rows(), self.dim);
        let mut acc = FpMatrix::zero(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            let c = x.entry(i, 0);
            if c != 0 {
                acc = acc.add(&self.right[i].scale(c));
            }
        }
        acc
    }

    /// Product of two elements given by coordinate columns.
    pub fn mul_elements(&self, x: &FpMatrix, y: &FpMatrix) -> FpMatrix {
        self.left_mult_of(x).mul(y)
    }

    /// Checks all algebra laws, reporting the first failure in scan order:
    /// unit laws first, then associativity over all basis triples, then
    /// grading compatibility when degrees are present.
    pub fn validate(&self) -> Result<(), AlgebraViolation> {
        let lu = self.left_mult_of(&self.unit);
        for j in 0..self.dim {
            if !(0..self.dim).all(|k| lu.entry(k, j) == u32::from(k == j)) {
                return Err(AlgebraViolation::LeftUnitFails { j });
            }
        }
        let ru = self.right_mult_of(&self.unit);
        for i in 0..self.dim {
            if !(0..self.dim).all(|k| ru.entry(k, i) == u32::from(k == i)) {
                return Err(AlgebraViolation::RightUnitFails { i });
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mult_coords(i, j);
                for l in 0..self.dim {
                    // (b_i b_j) b_l vs b_i (b_j b_l)
                    let lhs = self.right[l].mul(&ij);
                    let rhs = self.left[i].mul(&self.mult_coords(j, l));
                    if lhs != rhs {
                        return Err(AlgebraViolation::NotAssociative { i, j, l });
                    }
                }
            }
        }
        if let Some(deg) = &self.degrees {
            for i in 0..self.dim {
                if self.unit.entry(i, 0) != 0 && deg[i] != 0 {
                    return Err(AlgebraViolation::UnitNotDegreeZero { i, degree: deg[i] });
                }
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        if self.c(i, j, k) != 0 && deg[k] != deg[i] + deg[j] {
                            return Err(AlgebraViolation::ProductNotGraded {
                                i, j, k,
                                found: deg[k],
                                expected: deg[i] + deg[j],
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra: c'_{ij}^k = c_{ji}^k. Involutive.
    pub fn opposite(&self) -> Algebra {
        Algebra::new(
            self.p,
            self.dim,
            |i, j| (0..self.dim).map(|k| self.c(j, i, k) as i64).collect(),
            &(0..self.dim).map(|i| self.unit.entry(i, 0) as i64).collect::<Vec<_>>(),
            Some(self.labels.clone()),
            self.degrees.clone(),
        )
    }

    /// A cached greedy unital generating set: scan basis elements in order,
    /// adding any not yet inside the unital subalgebra generated so far.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn compute_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.unital_closure(&gens);
        for i in 0..self.dim {
            let e = FpMatrix::from_fn(self.p, self.dim, 1, |r, _| i64::from(r == i));
            if !span.spans(&e) {
                gens.push(i);
                span = self.unital_closure(&gens);
            }
        }
        gens
    }

    /// Column span of the unital subalgebra generated by the given basis
    /// indices (closure of {1, b_g} under right multiplication by the b_g).
    fn unital_closure(&self, gens: &[usize]) -> FpMatrix {
        let mut cols: Vec<FpMatrix> = vec![self.unit.clone()];
        for &g in gens {
            cols.push(FpMatrix::from_fn(self.p, self.dim, 1, |r, _| i64::from(r == g)));
        }
        let mut span = {
            let refs: Vec<&FpMatrix> = cols.iter().collect();
            FpMatrix::hstack(self.p, &refs).column_basis()
        };
        let mut work: Vec<FpMatrix> = (0..span.cols()).map(|j| span.column_at(j)).collect();
        while let Some(v) = work.pop() {
            for &g in gens {
                let w = self.right[g].mul(&v);
                if !span.spans(&w) {
                    span = FpMatrix::hstack(self.p, &[&span, &w]).column_basis();
                    work.push(w);
                }
            }
        }
        span
    }
}

/// Structural "same algebra" test used by module operations: pointer
/// equality shortcut, falling back to full structural equality.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Plain (ungraded) tensor product A ⊗_k B, basis (i,x) ↦ i·dim(B) + x.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Algebra {
    assert_eq!(a.p(), b.p(), "mixing moduli in tensor_product");
    assert!(!a.is_graded() && !b.is_graded(), "tensor_product is for ungraded algebras");
    let (da, db) = (a.dim(), b.dim());
    let unit = {
        let mut u = vec![0i64; da * db];
        for i in 0..da {
            for x in 0..db {
                u[i * db + x] = (a.unit().entry(i, 0) as u64 * b.unit().entry(x, 0) as u64) as i64;
            }
        }
        u
    };
    let labels: Vec<String> = (0..da * db)
        .map(|n| format!("{}*{}", a.label(n / db), b.label(n % db)))
        .collect();
    Algebra::new(
        a.p(),
        da * db,
        |m, n| {
            let (i, x) = (m / db, m % db);
            let (j, y) = (n / db, n % db);
            let ca = a.mult_coords(i, j);
            let cb = b.mult_coords(x, y);
            (0..da * db)
                .map(|t| (ca.entry(t / db, 0) as u64 * cb.entry(t % db, 0) as u64) as i64)
                .collect()
        },
        &unit,
        Some(labels),
        None,
    )
}

/// A validated unital algebra homomorphism R → A as a dim(A) × dim(R) matrix
/// on basis coordinates.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub matrix: FpMatrix,
}

impl AlgebraMorphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: FpMatrix) -> Result<Self, MorphismViolation> {
        if source.p() != target.p() || matrix.p() != source.p() {
            return Err(MorphismViolation::ModulusMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(MorphismViolation::ShapeMismatch {
                got_rows: matrix.rows(),
                got_cols: matrix.cols(),
                want_rows: target.dim(),
                want_cols: source.dim(),
            });
        }
        if matrix.mul(source.unit()) != *target.unit() {
            return Err(MorphismViolation::UnitNotPreserved);
        }
        for i in 0..source.dim() {
            let fi = matrix.column_at(i);
            for j in 0..source.dim() {
                let fj = matrix.column_at(j);
                let lhs = target.mul_elements(&fi, &fj);
                let rhs = matrix.mul(&source.mult_coords(i, j));
                if lhs != rhs {
                    return Err(MorphismViolation::MultiplicationNotPreserved { i, j });
                }
            }
        }
        match (source.degrees(), target.degrees()) {
            (None, None) => {}
            (Some(sd), Some(td)) => {
                for k in 0..target.dim() {
                    for i in 0..source.dim() {
                        if matrix.entry(k, i) != 0 && td[k] != sd[i] {
                            return Err(MorphismViolation::DegreeNotPreserved {
                                k, i,
                                src_degree: sd[i],
                                tgt_degree: td[k],
                            });
                        }
                    }
                }
            }
            _ => return Err(MorphismViolation::GradingMismatch),
        }
        Ok(AlgebraMorphism { source, target, matrix })
    }

    pub fn identity(a: &Arc<Algebra>) -> Self {
        AlgebraMorphism {
            source: Arc::clone(a),
            target: Arc::clone(a),
            matrix: FpMatrix::identity(a.p(), a.dim()),
        }
    }

    /// Image of an element (coordinate column of the source).
    pub fn apply(&self, x: &FpMatrix) -> FpMatrix {
        self.matrix.mul(x)
    }
}

/// One relation in a path algebra: a linear combination of parallel paths,
/// each path given by its arrow indices in traversal order (first arrow
/// first). Admissibility requires every path to have length ≥ 2.
#[derive(Clone, Debug)]
pub struct PathRelation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathAlgebraError {
    #[error("quiver has a directed cycle; the path algebra would be infinite-dimensional")]
    Cyclic,
    #[error("arrow {index} has an endpoint outside 0..{vertices}")]
    BadArrow { index: usize, vertices: usize },
    #[error("relation {relation}, term {term}: arrows do not compose into a path")]
    BadPath { relation: usize, term: usize },
    #[error("relation {relation}: terms are not parallel (distinct sources or targets)")]
    NotParallel { relation: usize },
    #[error("relation {relation}, term {term}: path has length < 2 (relations must be admissible)")]
    NotAdmissible { relation: usize, term: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Path {
    src: usize,
    tgt: usize,
    /// Arrow indices in traversal order (first applied first).
    arrows: Vec<usize>,
}

/// Builds the path algebra of an acyclic quiver modulo admissible relations.
///
/// Multiplication follows function composition: for paths q and p, the
/// product `b_q · b_p` is "first p, then q", nonzero exactly when p ends
/// where q starts. Consequently the left ideal A·e_v is spanned by the paths
/// *starting* at v.
///
/// The basis of the quotient is the canonical set of surviving paths: those
/// at non-pivot coordinates of the ideal's echelon form (vertices and arrows
/// always survive for admissible relations). Labels are `e{v+1}` for trivial
/// paths and concatenations like `a2a1` ("first a1, then a2") otherwise.
pub fn path_algebra(
    p: u32,
    vertices: usize,
    arrows: &[(usize, usize)],
    relations: &[PathRelation],
) -> Result<Algebra, PathAlgebraError> {
    assert!(vertices >= 1, "need at least one vertex");
    for (index, &(s, t)) in arrows.iter().enumerate() {
        if s >= vertices || t >= vertices {
            return Err(PathAlgebraError::BadArrow { index, vertices });
        }
    }
    // Cycle detection: DFS three-coloring.
    {
        let mut color = vec![0u8; vertices]; // 0 white, 1 gray, 2 black
        fn dfs(v: usize, color: &mut [u8], arrows: &[(usize, usize)]) -> bool {
            color[v] = 1;
            for &(s, t) in arrows {
                if s == v {
                    if color[t] == 1 {
                        return false;
                    }
                    if color[t] == 0 && !dfs(t, color, arrows) {
                        return false;
                    }
                }
            }
            color[v] = 2;
            true
        }
        for v in 0..vertices {
            if color[v] == 0 && !dfs(v, &mut color, arrows) {
                return Err(PathAlgebraError::Cyclic);
            }
        }
    }

    // Exhaustive path enumeration, shortest first, extension in arrow order.
    let mut paths: Vec<Path> = (0..vertices).map(|v| Path { src: v, tgt: v, arrows: vec![] }).collect();
    let mut frontier: Vec<usize> = (0..paths.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &qi in &frontier {
            for (ai, &(s, t)) in arrows.iter().enumerate() {
                if s == paths[qi].tgt {
                    let mut arr = paths[qi].arrows.clone();
                    arr.push(ai);
                    next.push(Path { src: paths[qi].src, tgt: t, arrows: arr });
                }
            }
        }
        frontier = (paths.len()..paths.len() + next.len()).collect();
        paths.extend(next);
    }
    let n = paths.len();
    let index: std::collections::BTreeMap<(usize, Vec<usize>), usize> =
        paths.iter().enumerate().map(|(i, q)| ((q.src, q.arrows.clone()), i)).collect();

    // b_i · b_j = "first j, then i".
    let compose = |i: usize, j: usize| -> Option<usize> {
        if paths[j].tgt != paths[i].src {
            return None;
        }
        let mut arr = paths[j].arrows.clone();
        arr.extend_from_slice(&paths[i].arrows);
        Some(*index.get(&(paths[j].src, arr)).expect("closed under composition"))
    };

    // Relation vectors in the full path space.
    let mut rel_vectors: Vec<FpMatrix> = Vec::new();
    for (ri, rel) in relations.iter().enumerate() {
        let mut v = FpMatrix::zero(p, n, 1);
        let mut ends: Option<(usize, usize)> = None;
        for (ti, (coeff, arrow_seq)) in rel.terms.iter().enumerate() {
            if arrow_seq.len() < 2 {
                return Err(PathAlgebraError::NotAdmissible { relation: ri, term: ti });
            }
            for w in arrow_seq.windows(2) {
                if arrows[w[0]].1 != arrows[w[1]].0 {
                    return Err(PathAlgebraError::BadPath { relation: ri, term: ti });
                }
            }
            if arrow_seq.iter().any(|&a| a >= arrows.len()) {
                return Err(PathAlgebraError::BadPath { relation: ri, term: ti });
            }
            let src = arrows[arrow_seq[0]].0;
            let tgt = arrows[*arrow_seq.last().unwrap()].1;
            match ends {
                None => ends = Some((src, tgt)),
                Some(e) if e != (src, tgt) => return Err(PathAlgebraError::NotParallel { relation: ri }),
                _ => {}
            }
            let pi = *index.get(&(src, arrow_seq.clone())).expect("validated path");
            let cur = v.entry(pi, 0) as i64 + *coeff;
            v.set(pi, 0, cur.rem_euclid(p as i64) as u32);
        }
        rel_vectors.push(v);
    }

    // Two-sided ideal: span of u·ρ·w over all path pairs (u, w).
    let mut ideal_cols: Vec<FpMatrix> = Vec::new();
    for v in &rel_vectors {
        for u in 0..n {
            for w in 0..n {
                let mut col = FpMatrix::zero(p, n, 1);
                let mut nonzero = false;
                for t in 0..n {
                    let c = v.entry(t, 0);
                    if c == 0 {
                        continue;
                    }
                    // b_u · b_t · b_w
                    if let Some(tw) = compose(t, w) {
                        if let Some(r) = compose(u, tw) {
                            let cur = (col.entry(r, 0) as u64 + c as u64) % p as u64;
                            col.set(r, 0, cur as u32);
                            nonzero = true;
                        }
                    }
                }
                if nonzero && !col.is_zero() {
                    ideal_cols.push(col);
                }
            }
        }
    }
    let ideal = if ideal_cols.is_empty() {
        FpMatrix::zero(p, n, 0)
    } else {
        let refs: Vec<&FpMatrix> = ideal_cols.iter().collect();
        FpMatrix::hstack(p, &refs)
    };
    let q = quotient_basis(p, n, &ideal);
    let survivors = q.complement_coords.clone();
    let m = survivors.len();

    let label_of = |path: &Path| -> String {
        if path.arrows.is_empty() {
            format!("e{}", path.src + 1)
        } else {
            path.arrows.iter().rev().map(|a| format!("a{}", a + 1)).collect::<Vec<_>>().join("")
        }
    };
    let labels: Vec<String> = survivors.iter().map(|&s| label_of(&paths[s])).collect();

    let unit_full = {
        let mut u = FpMatrix::zero(p, n, 1);
        for v in 0..vertices {
            u.set(v, 0, 1);
        }
        q.projection.mul(&u)
    };
    let unit: Vec<i64> = (0..m).map(|i| unit_full.entry(i, 0) as i64).collect();

    let alg = Algebra::new(
        p,
        m,
        |i, j| {
            match compose(survivors[i], survivors[j]) {
                None => vec![0; m],
                Some(r) => {
                    let col = q.projection.column_at(r);
                    (0..m).map(|k| col.entry(k, 0) as i64).collect()
                }
            }
        },
        &unit,
        Some(labels),
        None,
    );
    debug_assert_eq!(alg.validate(), Ok(()));
    Ok(alg)
}
