//! Exact linear algebra over GF(q): vectors, matrices, row reduction,
//! kernels, and canonical subspaces.
//!
//! A [`Subspace`] is always stored through its reduced row-echelon basis, so
//! subspace equality is plain structural comparison. That canonical form is
//! what lets the verifier compare computed centers and derived algebras
//! against predicted ones by `==`.

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::field::{Felt, FieldRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
}

/// Membership tests below this ambient dimension run on a stack buffer.
const STACK_AMBIENT: usize = 8;

/// A coordinate vector in F_q^n.
#[derive(Clone)]
pub struct Vector {
    field: FieldRef,
    coords: Vec<Felt>,
}

impl Vector {
    pub fn new(field: FieldRef, coords: Vec<Felt>) -> Self {
        Self { field, coords }
    }

    pub fn zero(field: FieldRef, n: usize) -> Self {
        Self { field, coords: vec![Felt::ZERO; n] }
    }

    /// Standard basis vector e_i (0-based).
    pub fn unit(field: FieldRef, n: usize, i: usize) -> Self {
        let mut coords = vec![Felt::ZERO; n];
        coords[i] = Felt::ONE;
        Self { field, coords }
    }

    /// Builds a vector from raw element indices.
    pub fn from_indices(field: &FieldRef, idxs: &[u64]) -> Self {
        let coords = idxs.iter().map(|&i| field.elt(i as usize)).collect();
        Self { field: field.clone(), coords }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Felt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, LinAlgError> {
        check_fields(&self.field, &other.field)?;
        check_len(self.len(), other.len())?;
        let f = &self.field;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Vector { field: self.field.clone(), coords })
    }

    pub fn scale(&self, c: Felt) -> Vector {
        let f = &self.field;
        let coords = self.coords.iter().map(|&a| f.mul(c, a)).collect();
        Vector { field: self.field.clone(), coords }
    }
}

impl PartialEq for Vector {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coords == other.coords
    }
}
impl Eq for Vector {}

impl Index<usize> for Vector {
    type Output = Felt;
    fn index(&self, i: usize) -> &Felt {
        &self.coords[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// A rows x cols matrix over GF(q), row-major.
#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Felt>,
}

impl Matrix {
    pub fn zeros(field: FieldRef, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![Felt::ZERO; rows * cols] }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Felt::ONE;
        }
        m
    }

    pub fn from_rows(field: FieldRef, rows: Vec<Vec<Felt>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            check_len(cols, r.len())?;
        }
        let nrows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(Self { field, rows: nrows, cols, data })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Felt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product, coordinates given as a raw slice.
    pub fn apply(&self, v: &[Felt]) -> Result<Vec<Felt>, LinAlgError> {
        check_len(self.cols, v.len())?;
        let f = &self.field;
        let mut out = vec![Felt::ZERO; self.rows];
        for r in 0..self.rows {
            let row = self.row(r);
            let mut acc = Felt::ZERO;
            for c in 0..self.cols {
                acc = f.add(acc, f.mul(row[c], v[c]));
            }
            out[r] = acc;
        }
        Ok(out)
    }

    /// Reduced row-echelon form and rank. Zero rows are kept, so the result
    /// has the same shape as the input.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut rows: Vec<Vec<Felt>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let rank = rref_rows(&self.field, &mut rows);
        let m = Matrix::from_rows(self.field.clone(), rows).expect("shape preserved");
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Felt>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        rref_rows(&self.field, &mut rows)
    }

    /// Right kernel: the subspace of x with M x = 0.
    pub fn kernel(&self) -> Subspace {
        let mut rows: Vec<Vec<Felt>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let basis = kernel_rows(&self.field, &mut rows, self.cols);
        Subspace::from_rows(self.field.clone(), self.cols, basis)
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl Index<(usize, usize)> for Matrix {
    type Output = Felt;
    fn index(&self, (r, c): (usize, usize)) -> &Felt {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Felt {
        assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.describe())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// A subspace of F_q^n held by its canonical RREF basis. Two subspaces are
/// equal iff their bases are identical.
#[derive(Clone)]
pub struct Subspace {
    field: FieldRef,
    ambient: usize,
    basis: Vec<Vec<Felt>>,
}

impl Subspace {
    pub fn zero(field: FieldRef, ambient: usize) -> Self {
        Self { field, ambient, basis: Vec::new() }
    }

    pub fn full(field: FieldRef, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut row = vec![Felt::ZERO; ambient];
                row[i] = Felt::ONE;
                row
            })
            .collect();
        Self { field, ambient, basis }
    }

    /// Span of arbitrary coordinate rows; reduces to the canonical basis.
    pub fn from_rows(field: FieldRef, ambient: usize, mut rows: Vec<Vec<Felt>>) -> Self {
        let rank = rref_rows(&field, &mut rows);
        rows.truncate(rank);
        Self { field, ambient, basis: rows }
    }

    /// Span of a list of vectors. The ambient dimension is explicit so that
    /// the empty list still denotes the zero subspace of the right space.
    pub fn span(field: &FieldRef, ambient: usize, vs: &[Vector]) -> Result<Self, LinAlgError> {
        let mut rows = Vec::with_capacity(vs.len());
        for v in vs {
            check_fields(field, v.field())?;
            check_len(ambient, v.len())?;
            rows.push(v.coords().to_vec());
        }
        Ok(Self::from_rows(field.clone(), ambient, rows))
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Felt>] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis
            .iter()
            .map(|row| Vector::new(self.field.clone(), row.clone()))
            .collect()
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LinAlgError> {
        check_fields(&self.field, v.field())?;
        check_len(self.ambient, v.len())?;
        Ok(self.contains_coords(v.coords()))
    }

    /// Membership by residual reduction against the RREF basis.
    pub fn contains_coords(&self, v: &[Felt]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        if self.ambient <= STACK_AMBIENT {
            let mut residual = [Felt::ZERO; STACK_AMBIENT];
            residual[..self.ambient].copy_from_slice(v);
            self.reduce_residual(&mut residual[..self.ambient])
        } else {
            let mut residual = v.to_vec();
            self.reduce_residual(&mut residual)
        }
    }

    fn reduce_residual(&self, residual: &mut [Felt]) -> bool {
        let f = &self.field;
        for row in &self.basis {
            let pivot = row.iter().position(|c| !c.is_zero()).expect("basis rows are nonzero");
            let c = residual[pivot];
            if !c.is_zero() {
                for i in pivot..self.ambient {
                    residual[i] = f.sub(residual[i], f.mul(c, row[i]));
                }
            }
        }
        residual.iter().all(|c| c.is_zero())
    }

    /// Intersection via the kernel of stacked coordinate constraints: x lies
    /// in a row space exactly when it is annihilated by the kernel of the
    /// basis matrix.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        check_fields(&self.field, &other.field)?;
        check_len(self.ambient, other.ambient)?;
        let mut constraints = constraint_rows(&self.field, self.ambient, &self.basis);
        constraints.extend(constraint_rows(&self.field, self.ambient, &other.basis));
        let basis = kernel_rows(&self.field, &mut constraints, self.ambient);
        Ok(Subspace::from_rows(self.field.clone(), self.ambient, basis))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        check_fields(&self.field, &other.field)?;
        check_len(self.ambient, other.ambient)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::from_rows(self.field.clone(), self.ambient, rows))
    }

    /// All q^dim member vectors, coefficient tuples in base-q counting order
    /// against the basis (first basis row varies fastest).
    pub fn enumerate(&self) -> SubspaceIter<'_> {
        let total = self.field.q().pow(self.dim() as u32);
        SubspaceIter { space: self, next: 0, total }
    }

    /// Visits every member in the same order as [`Subspace::enumerate`]
    /// through one reused buffer; the hot path for graph enumeration.
    pub fn for_each_member<F: FnMut(&[Felt])>(&self, mut visit: F) {
        let f = &self.field;
        let q = f.q();
        let total = q.pow(self.dim() as u32);
        let mut v = vec![Felt::ZERO; self.ambient];
        for m in 0..total {
            v.iter_mut().for_each(|c| *c = Felt::ZERO);
            let mut x = m;
            for row in &self.basis {
                let c = f.elt(x % q);
                x /= q;
                if !c.is_zero() {
                    for i in 0..self.ambient {
                        v[i] = f.add(v[i], f.mul(c, row[i]));
                    }
                }
            }
            visit(&v);
        }
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.ambient == other.ambient && self.basis == other.basis
    }
}
impl Eq for Subspace {}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of F^{}; basis {:?})", self.dim(), self.ambient, self.basis)
    }
}

pub struct SubspaceIter<'a> {
    space: &'a Subspace,
    next: usize,
    total: usize,
}

impl Iterator for SubspaceIter<'_> {
    type Item = Vec<Felt>;

    fn next(&mut self) -> Option<Vec<Felt>> {
        if self.next >= self.total {
            return None;
        }
        let f = &self.space.field;
        let q = f.q();
        let mut m = self.next;
        self.next += 1;
        let mut out = vec![Felt::ZERO; self.space.ambient];
        for row in &self.space.basis {
            let c = f.elt(m % q);
            m /= q;
            if !c.is_zero() {
                for i in 0..self.space.ambient {
                    out[i] = f.add(out[i], f.mul(c, row[i]));
                }
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = self.total - self.next;
        (rem, Some(rem))
    }
}

#[inline]
fn check_fields(a: &FieldRef, b: &FieldRef) -> Result<(), LinAlgError> {
    if std::sync::Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(LinAlgError::FieldMismatch)
    }
}

#[inline]
fn check_len(expected: usize, got: usize) -> Result<(), LinAlgError> {
    if expected == got {
        Ok(())
    } else {
        Err(LinAlgError::DimensionMismatch { expected, got })
    }
}

/// In-place Gauss-Jordan elimination; returns the rank. Pivot rows bubble to
/// the top in pivot-column order, the rest become zero rows.
pub(crate) fn rref_rows(f: &FieldRef, rows: &mut [Vec<Felt>]) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]).expect("pivot is nonzero");
        for c in col..ncols {
            rows[rank][c] = f.mul(inv, rows[rank][c]);
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col];
                for c in col..ncols {
                    let t = f.mul(factor, rows[rank][c]);
                    rows[r][c] = f.sub(rows[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Kernel basis of the matrix given by `rows` (destroyed in the process),
/// returned as canonical RREF rows of length `ncols`.
pub(crate) fn kernel_rows(f: &FieldRef, rows: &mut Vec<Vec<Felt>>, ncols: usize) -> Vec<Vec<Felt>> {
    let rank = rref_rows(f, rows);
    rows.truncate(rank);
    // pivot column of each reduced row
    let mut pivot_of_row = Vec::with_capacity(rank);
    let mut is_pivot = vec![false; ncols];
    for row in rows.iter() {
        let p = row.iter().position(|c| !c.is_zero()).expect("nonzero row");
        pivot_of_row.push(p);
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(ncols - rank);
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Felt::ZERO; ncols];
        v[free] = Felt::ONE;
        for (r, &pc) in pivot_of_row.iter().enumerate() {
            v[pc] = f.neg(rows[r][free]);
        }
        basis.push(v);
    }
    let rank = rref_rows(f, &mut basis);
    basis.truncate(rank);
    basis
}

/// Rows c with c . x = 0 for every x in the span of `basis`; used to express
/// membership in a row space as a homogeneous linear system.
fn constraint_rows(f: &FieldRef, ambient: usize, basis: &[Vec<Felt>]) -> Vec<Vec<Felt>> {
    let mut rows: Vec<Vec<Felt>> = basis.to_vec();
    kernel_rows(f, &mut rows, ambient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn gf(p: u64, k: u32) -> FieldRef {
        Field::gf(p, k).unwrap()
    }

    fn vec_of(f: &FieldRef, idxs: &[u64]) -> Vector {
        Vector::from_indices(f, idxs)
    }

    #[test]
    fn rref_identity_and_zero() {
        let f2 = gf(2, 1);
        let id = Matrix::identity(f2.clone(), 3);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);

        let f3 = gf(3, 1);
        let z = Matrix::zeros(f3, 2, 4);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_dependent_rows() {
        let f5 = gf(5, 1);
        let m = Matrix::from_rows(
            f5.clone(),
            vec![
                vec![Felt(1), Felt(2)],
                vec![Felt(2), Felt(4)],
            ],
        )
        .unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), &[Felt(1), Felt(2)]);
        assert_eq!(r.row(1), &[Felt(0), Felt(0)]);
    }

    #[test]
    fn kernel_edge_cases() {
        let f2 = gf(2, 1);
        let z = Matrix::zeros(f2.clone(), 2, 3);
        assert_eq!(z.kernel(), Subspace::full(f2.clone(), 3));

        let id = Matrix::identity(f2.clone(), 4);
        assert_eq!(id.kernel(), Subspace::zero(f2.clone(), 4));

        let m = Matrix::from_rows(f2.clone(), vec![vec![Felt(1), Felt(1)]]).unwrap();
        let ker = m.kernel();
        assert_eq!(ker.dim(), 1);
        assert_eq!(ker.basis(), &[vec![Felt(1), Felt(1)]]);
    }

    #[test]
    fn span_canonicalizes() {
        let f2 = gf(2, 1);
        let s = Subspace::span(&f2, 3, &[]).unwrap();
        assert!(s.is_zero());

        let e1 = Vector::unit(f2.clone(), 3, 0);
        let e1e2 = vec_of(&f2, &[1, 1, 0]);
        let s = Subspace::span(&f2, 3, &[e1.clone(), e1e2]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis(), &[vec![Felt(1), Felt(0), Felt(0)], vec![Felt(0), Felt(1), Felt(0)]]);

        let f5 = gf(5, 1);
        let s = Subspace::span(&f5, 3, &[vec_of(&f5, &[1, 2, 0]), vec_of(&f5, &[2, 4, 0])]).unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn span_rejects_mixed_lengths() {
        let f2 = gf(2, 1);
        let err = Subspace::span(&f2, 3, &[vec_of(&f2, &[1, 0])]).unwrap_err();
        assert!(matches!(err, LinAlgError::DimensionMismatch { .. }));
    }

    #[test]
    fn intersect_and_sum() {
        let f2 = gf(2, 1);
        let e1 = Subspace::span(&f2, 2, &[Vector::unit(f2.clone(), 2, 0)]).unwrap();
        let e2 = Subspace::span(&f2, 2, &[Vector::unit(f2.clone(), 2, 1)]).unwrap();
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(f2.clone(), 2));

        // distinct lines in F_3^2 meet only at the origin
        let f3 = gf(3, 1);
        let l1 = Subspace::span(&f3, 2, &[vec_of(&f3, &[1, 1])]).unwrap();
        let l2 = Subspace::span(&f3, 2, &[vec_of(&f3, &[1, 2])]).unwrap();
        assert!(l1.intersect(&l2).unwrap().is_zero());
    }

    #[test]
    fn enumerate_small_subspaces() {
        let f3 = gf(3, 1);
        let zero = Subspace::zero(f3.clone(), 2);
        let all: Vec<_> = zero.enumerate().collect();
        assert_eq!(all, vec![vec![Felt(0), Felt(0)]]);

        let line = Subspace::span(&f3, 2, &[Vector::unit(f3.clone(), 2, 0)]).unwrap();
        let all: Vec<_> = line.enumerate().collect();
        assert_eq!(all.len(), 3);
        assert!(all.contains(&vec![Felt(2), Felt(0)]));

        let f2 = gf(2, 1);
        let plane = Subspace::span(
            &f2,
            3,
            &[Vector::unit(f2.clone(), 3, 0), Vector::unit(f2.clone(), 3, 1)],
        )
        .unwrap();
        assert_eq!(plane.enumerate().count(), 4);
    }

    #[test]
    fn contains_agrees_with_enumeration() {
        let f3 = gf(3, 1);
        let s = Subspace::span(&f3, 3, &[vec_of(&f3, &[1, 2, 0]), vec_of(&f3, &[0, 1, 1])]).unwrap();
        let members: Vec<_> = s.enumerate().collect();
        assert_eq!(members.len(), 9);
        let mut hits = 0;
        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    let v = vec_of(&f3, &[a, b, c]);
                    let inside = s.contains(&v).unwrap();
                    assert_eq!(inside, members.contains(&v.coords().to_vec()));
                    if inside {
                        hits += 1;
                    }
                }
            }
        }
        assert_eq!(hits, 9);
    }

    // Exhaustive subspace pairs are tiny for n <= 3 over GF(2)/GF(3); proptest
    // drives the same checks over random spanning sets for n = 4.
    proptest! {
        #[test]
        fn grassmann_identity(
            q in prop::sample::select(vec![2u64, 3]),
            rows1 in prop::collection::vec(prop::collection::vec(0u64..3, 4), 0..4),
            rows2 in prop::collection::vec(prop::collection::vec(0u64..3, 4), 0..4),
        ) {
            let f = gf(q, 1);
            let vs1: Vec<Vector> = rows1
                .iter()
                .map(|r| Vector::new(f.clone(), r.iter().map(|&c| f.int(c as i64)).collect()))
                .collect();
            let vs2: Vec<Vector> = rows2
                .iter()
                .map(|r| Vector::new(f.clone(), r.iter().map(|&c| f.int(c as i64)).collect()))
                .collect();
            let s1 = Subspace::span(&f, 4, &vs1).unwrap();
            let s2 = Subspace::span(&f, 4, &vs2).unwrap();
            let sum = s1.sum(&s2).unwrap();
            let int = s1.intersect(&s2).unwrap();
            prop_assert_eq!(s1.dim() + s2.dim(), sum.dim() + int.dim());
            // canonical form is idempotent
            prop_assert_eq!(&Subspace::span(&f, 4, &s1.basis_vectors()).unwrap(), &s1);
            // intersection members lie in both
            for v in int.basis_vectors() {
                prop_assert!(s1.contains(&v).unwrap());
                prop_assert!(s2.contains(&v).unwrap());
            }
        }

        #[test]
        fn rank_nullity(
            rows in prop::collection::vec(prop::collection::vec(0u64..5, 3), 1..5),
        ) {
            let f = gf(5, 1);
            let m = Matrix::from_rows(
                f.clone(),
                rows.iter().map(|r| r.iter().map(|&c| f.elt(c as usize)).collect()).collect(),
            ).unwrap();
            let ker = m.kernel();
            prop_assert_eq!(m.rank() + ker.dim(), m.cols());
            for v in ker.basis_vectors() {
                prop_assert!(m.apply(v.coords()).unwrap().iter().all(|c| c.is_zero()));
            }
        }
    }
}
