//! Exact dense linear algebra over prime fields 𝔽_p.
//!
//! Everything downstream reduces to the operations in this module, so the
//! contract is strict: entries live in `[0, p)`, all arithmetic is exact, and
//! the canonical forms (RREF, kernel bases, quotient complements) are
//! deterministic functions of the input — two equal matrices always produce
//! bit-identical results.
//!
//! Pivoting rule: first nonzero entry in column order, scanning rows top to
//! bottom. Kernel bases are the standard back-substitution basis read off the
//! RREF, one vector per free column, in increasing column order. Quotient
//! complements are spanned by the standard coordinate vectors at the non-pivot
//! coordinates of the subspace's row echelon form.

use std::fmt;
use thiserror::Error;

/// Errors from scalar/matrix construction and solving.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearError {
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is not invertible")]
    NotInvertible,
}

/// Checks that `p` is a prime with `2 <= p < 2^31`, by trial division.
pub fn validate_prime(p: u32) -> Result<(), LinearError> {
    let p64 = p as u64;
    if p < 2 || p64 >= (1u64 << 31) {
        return Err(LinearError::NotPrime(p64));
    }
    let mut d = 2u64;
    while d * d <= p64 {
        if p64 % d == 0 {
            return Err(LinearError::NotPrime(p64));
        }
        d += 1;
    }
    Ok(())
}

/// Inverse of `a` modulo the prime `p` (extended Euclid). Panics on `a == 0`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(a % p != 0, "attempted to invert 0 mod {p}");
    // Extended Euclid on (a, p); p < 2^31 so i64 never overflows.
    let (mut r0, mut r1) = (a as i64 % p as i64, p as i64);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert!(r0 == 1, "gcd(a, p) != 1 with p prime and a nonzero");
    s0.rem_euclid(p as i64) as u32
}

/// A dense matrix over 𝔽_p, row-major, entries reduced into `[0, p)`.
///
/// Zero-row and zero-column shapes are fully supported; they show up
/// constantly as zero modules and empty bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {} [", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:>4}", self.entry(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl FpMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    /// The n×n identity.
    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row slices of signed integers, reducing mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &x in row {
                data.push(x.rem_euclid(p as i64) as u32);
            }
        }
        FpMatrix { p, rows: r, cols: c, data }
    }

    /// Builds a matrix entry-wise from a function (values reduced mod p).
    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = Self::zero(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j).rem_euclid(p as i64) as u32);
            }
        }
        m
    }

    /// A single column vector from coordinates.
    pub fn column(p: u32, coords: &[u32]) -> Self {
        let mut m = Self::zero(p, coords.len(), 1);
        for (i, &x) in coords.iter().enumerate() {
            m.set(i, 0, x % p);
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v % self.p;
    }

    fn assert_same_p(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing moduli {} and {}", self.p, other.p);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.entry(i, j) == u32::from(i == j)))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_p(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| ((a as u64 + b as u64) % self.p as u64) as u32)
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let p = self.p as u64;
        let data = self.data.iter().map(|&a| ((p - a as u64) % p) as u32).collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        let c = c as u64 % p;
        let data = self.data.iter().map(|&a| ((a as u64 * c) % p) as u32).collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_p(other);
        assert_eq!(self.cols, other.rows, "shape mismatch in mul: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let p = self.p as u64;
        let mut out = Self::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.data[i * other.cols + j] as u64;
                    out.data[i * other.cols + j] = ((cur + a * other.entry(k, j) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.entry(i, j));
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other | ...]`.
    pub fn hstack(p: u32, parts: &[&FpMatrix]) -> Self {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zero(p, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.p, p, "mixing moduli in hstack");
            assert_eq!(m.rows, rows, "row mismatch in hstack");
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.entry(i, j));
                }
            }
            off += m.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(p: u32, parts: &[&FpMatrix]) -> Self {
        let cols = parts.first().map_or(0, |m| m.cols);
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Self::zero(p, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.p, p, "mixing moduli in vstack");
            assert_eq!(m.cols, cols, "col mismatch in vstack");
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(off + i, j, m.entry(i, j));
                }
            }
            off += m.rows;
        }
        out
    }

    /// Block diagonal sum of the given matrices.
    pub fn block_diag(p: u32, parts: &[&FpMatrix]) -> Self {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zero(p, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            assert_eq!(m.p, p, "mixing moduli in block_diag");
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(ro + i, co + j, m.entry(i, j));
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        self.assert_same_p(other);
        let p = self.p as u64;
        let mut out = Self::zero(self.p, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.entry(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = (a * other.entry(k, l) as u64) % p;
                        out.set(i * other.rows + k, j * other.cols + l, v as u32);
                    }
                }
            }
        }
        out
    }

    /// Selects columns (in the given order) into a new matrix.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zero(self.p, self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.entry(i, j));
            }
        }
        out
    }

    /// Selects rows (in the given order) into a new matrix.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zero(self.p, rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.entry(i, j));
            }
        }
        out
    }

    /// The j-th column as a column vector.
    pub fn column_at(&self, j: usize) -> Self {
        self.select_columns(&[j])
    }

    /// Flattens the matrix column-by-column into a single column vector
    /// (vec(M) with column-major order).
    pub fn vectorize(&self) -> Self {
        let mut out = Self::zero(self.p, self.rows * self.cols, 1);
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.set(j * self.rows + i, 0, self.entry(i, j));
            }
        }
        out
    }

    /// Inverse of `vectorize` for a given shape.
    pub fn unvectorize(p: u32, v: &FpMatrix, rows: usize, cols: usize) -> Self {
        assert_eq!(v.cols, 1);
        assert_eq!(v.rows, rows * cols, "unvectorize shape mismatch");
        let mut out = Self::zero(p, rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                out.set(i, j, v.entry(j * rows + i, 0));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: u32) {
        let p = self.p as u64;
        let c = c as u64;
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = ((self.data[idx] as u64 * c) % p) as u32;
        }
    }

    /// row[target] -= c * row[source]
    fn row_axpy(&mut self, target: usize, source: usize, c: u32) {
        let p = self.p as u64;
        let c = c as u64;
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j] as u64;
            if s == 0 {
                continue;
            }
            let idx = target * self.cols + j;
            let cur = self.data[idx] as u64;
            self.data[idx] = ((cur + p * p - (c * s) % p) % p) as u32;
        }
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// Deterministic: scans columns left to right, picks the first row (top to
    /// bottom) with a nonzero entry, normalizes pivots to 1 and clears their
    /// columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.entry(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = inv_mod(m.entry(r, c), m.p);
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.entry(i, c);
                    if f != 0 {
                        m.row_axpy(i, r, f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel, returned as the columns of a
    /// `cols × nullity` matrix, ordered by increasing free-column index.
    pub fn kernel(&self) -> FpMatrix {
        self.kernel_with_free().0
    }

    /// Kernel basis together with the free-column indices; the k-th basis
    /// vector has a 1 at the k-th free column and support only there and at
    /// pivot columns (useful for degree bookkeeping downstream).
    pub fn kernel_with_free(&self) -> (FpMatrix, Vec<usize>) {
        let (r, pivots) = self.rref();
        let p64 = self.p as u64;
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = FpMatrix::zero(self.p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, 1);
            for (t, &pc) in pivots.iter().enumerate() {
                let v = r.entry(t, f);
                if v != 0 {
                    out.set(pc, k, ((p64 - v as u64) % p64) as u32);
                }
            }
        }
        (out, free)
    }

    /// Solves `self * X = rhs` for a matrix `X` (any number of right-hand
    /// columns). Returns the canonical solution with free variables set to 0,
    /// or `NoSolution`.
    pub fn solve(&self, rhs: &FpMatrix) -> Result<FpMatrix, LinearError> {
        self.assert_same_p(rhs);
        assert_eq!(self.rows, rhs.rows, "solve: lhs {}x{} vs rhs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let aug = FpMatrix::hstack(self.p, &[self, rhs]);
        let (r, pivots) = aug.rref();
        // Any pivot in the rhs block certifies inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(LinearError::NoSolution);
        }
        let mut x = FpMatrix::zero(self.p, self.cols, rhs.cols);
        for (t, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.entry(t, self.cols + j));
            }
        }
        Ok(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<FpMatrix, LinearError> {
        if !self.is_square() {
            return Err(LinearError::NotInvertible);
        }
        if self.rank() < self.rows {
            return Err(LinearError::NotInvertible);
        }
        self.solve(&FpMatrix::identity(self.p, self.rows))
            .map_err(|_| LinearError::NotInvertible)
    }

    /// Canonical basis of the column space, as the columns of a
    /// `rows × rank` matrix (the RREF row basis of the transpose,
    /// transposed back).
    pub fn column_basis(&self) -> FpMatrix {
        let (r, pivots) = self.transpose().rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose()
    }

    /// True iff the columns of `other` lie in the column span of `self`.
    pub fn spans(&self, other: &FpMatrix) -> bool {
        self.solve(other).is_ok()
    }
}

/// Data describing a quotient V / U of coordinate spaces: a projection onto
/// canonical complement coordinates and the section picking those same
/// standard basis vectors.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    /// `q × n` matrix: the quotient map in coordinates.
    pub projection: FpMatrix,
    /// `n × q` matrix: section of the projection (projection · section = id).
    pub section: FpMatrix,
    /// Pivot coordinates of the subspace (its echelon leading coordinates).
    pub subspace_coords: Vec<usize>,
    /// The complement coordinates, in increasing order; the classes of these
    /// standard basis vectors form the canonical basis of the quotient.
    pub complement_coords: Vec<usize>,
}

/// Computes the canonical quotient data for `F_p^ambient / span(columns of sub)`.
///
/// The complement is spanned by the standard coordinate vectors at the
/// non-pivot coordinates of the subspace's reduced echelon form, so the
/// section is a plain coordinate inclusion and all grading/bookkeeping on the
/// ambient coordinates descends verbatim to the quotient.
pub fn quotient_basis(p: u32, ambient: usize, sub: &FpMatrix) -> QuotientBasis {
    assert_eq!(sub.rows(), ambient, "subspace columns must live in the ambient space");
    let (r, pivots) = sub.transpose().rref();
    let s = pivots.len();
    let is_pivot = {
        let mut v = vec![false; ambient];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let complement: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
    let q = complement.len();
    let p64 = p as u64;
    // projection(x) reads off the complement coordinates of x after reducing
    // by the echelon basis rows b_t (pivot at pivots[t]):
    //   proj[i][j] = [j == complement[i]] - sum_t [j == pivots[t]] * b_t[complement[i]]
    let mut projection = FpMatrix::zero(p, q, ambient);
    for (i, &ci) in complement.iter().enumerate() {
        projection.set(i, ci, 1);
        for (t, &pt) in pivots.iter().enumerate() {
            let v = r.entry(t, ci);
            if v != 0 {
                projection.set(i, pt, ((p64 - v as u64) % p64) as u32);
            }
        }
    }
    let mut section = FpMatrix::zero(p, ambient, q);
    for (i, &ci) in complement.iter().enumerate() {
        section.set(ci, i, 1);
    }
    debug_assert!(projection.mul(&section).is_identity());
    debug_assert!(s == sub.rank());
    QuotientBasis { projection, section, subspace_coords: pivots, complement_coords: complement }
}
