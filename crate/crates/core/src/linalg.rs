//! Dense exact matrices, reduced row echelon form, linear solving, and an
//! incremental sparse echelon basis for the large structured systems built
//! by the extension and complex code.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;
/// Sparse vector: `(column, value)` sorted by column, no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn zero_vec(field: &FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: &FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vector {
    a.iter().map(|x| x * c).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(field: &FieldSpec, v: &SparseVec, n: usize) -> Vector {
    let mut out = zero_vec(field, n);
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// A solution set `particular + span(kernel_basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub kernel_basis: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix with the given vectors as columns; `rows` fixes the height
    /// when there are no columns.
    pub fn from_columns(field: &FieldSpec, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: &FieldSpec, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Reduced row echelon form. Pivot search: leftmost nonzero column,
    /// first nonzero row at or below the current pivot row.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot is invertible");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            let pivot_row: Vector = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if !pivot_row[j].is_zero() {
                        let v = m.get(i, j) - &(&f * &pivot_row[j]);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: pivots.len(),
            pivot_columns: pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = SparseEchelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            e.insert(to_sparse(self.row(i)));
        }
        e.rank()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let r = self.rref();
        kernel_from_rref(&r.reduced, &r.pivot_columns)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let r = aug.rref();
        if r.pivot_columns.iter().take(n).enumerate().any(|(i, &c)| c != i) || r.rank < n {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.reduced.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }
}

fn kernel_from_rref(reduced: &Matrix, pivots: &[usize]) -> Vec<Vector> {
    let field = reduced.field();
    let mut out = Vec::new();
    for f in 0..reduced.cols() {
        if pivots.contains(&f) {
            continue;
        }
        let mut v = zero_vec(field, reduced.cols());
        v[f] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            let x = reduced.get(row, f);
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        out.push(v);
    }
    out
}

/// Solves `a * x = b`; `Ok(None)` iff `b` is not in the column space.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Option<Solution>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    let mut sys = LinearSystem::new(a.field(), a.cols());
    for i in 0..a.rows() {
        sys.add_equation(to_sparse(a.row(i)), b[i].clone());
    }
    Ok(sys.solve())
}

/// Incrementally maintained reduced row echelon basis of a subspace of
/// `K^width`, stored sparsely and keyed by pivot column.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    field: FieldSpec,
    width: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new(field: &FieldSpec, width: usize) -> Self {
        SparseEchelon {
            field: field.clone(),
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// The reduced basis rows in pivot order.
    pub fn basis(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.rows.iter().map(|(k, v)| (*k, v))
    }

    /// Normal form of `v` modulo the span: the unique representative
    /// supported on non-pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        for (col, c) in v {
            if let Some(row) = self.rows.get(col) {
                for (j, x) in row {
                    let t = c * x;
                    let e = acc.entry(*j).or_insert_with(|| self.field.zero());
                    *e -= &t;
                }
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn reduce_dense(&self, v: &[Scalar]) -> Vector {
        to_dense(&self.field, &self.reduce(&to_sparse(v)), self.width)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> bool {
        self.contains(&to_sparse(v))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead is invertible");
        let r: SparseVec = r.into_iter().map(|(j, x)| (j, &x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(j, _)| *j) {
                let f = row[pos].1.clone();
                let mut acc: BTreeMap<usize, Scalar> = std::mem::take(row).into_iter().collect();
                for (j, x) in &r {
                    let e = acc.entry(*j).or_insert_with(|| self.field.zero());
                    *e -= &(&f * x);
                }
                *row = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(to_sparse(v))
    }

    /// Basis of a complement: the non-pivot unit vectors' indices.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|c| !self.rows.contains_key(c)).collect()
    }

    pub fn dense_rows(&self) -> Vec<Vector> {
        self.rows.values().map(|r| to_dense(&self.field, r, self.width)).collect()
    }
}

/// Accumulates equations `coeffs · x = rhs` and solves them exactly.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    unknowns: usize,
    echelon: SparseEchelon,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new(field: &FieldSpec, unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            echelon: SparseEchelon::new(field, unknowns + 1),
            inconsistent: false,
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn add_equation(&mut self, mut coeffs: SparseVec, rhs: Scalar) {
        if self.inconsistent {
            return;
        }
        debug_assert!(coeffs.iter().all(|(j, _)| *j < self.unknowns));
        if !rhs.is_zero() {
            coeffs.push((self.unknowns, rhs));
        }
        self.echelon.insert(coeffs);
        if self.echelon.is_pivot(self.unknowns) {
            self.inconsistent = true;
        }
    }

    /// Homogeneous equation given as a dense row.
    pub fn add_homogeneous_dense(&mut self, coeffs: &[Scalar]) {
        let rhs = self.echelon.field.zero();
        self.add_equation(to_sparse(coeffs), rhs);
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    pub fn solve(&self) -> Option<Solution> {
        if self.inconsistent {
            return None;
        }
        let field = &self.echelon.field;
        let n = self.unknowns;
        let mut particular = zero_vec(field, n);
        for (p, row) in self.echelon.basis() {
            if let Ok(pos) = row.binary_search_by_key(&n, |(j, _)| *j) {
                particular[p] = row[pos].1.clone();
            }
        }
        let mut kernel = Vec::new();
        for f in 0..n {
            if self.echelon.is_pivot(f) {
                continue;
            }
            let mut v = zero_vec(field, n);
            v[f] = field.one();
            for (p, row) in self.echelon.basis() {
                if let Ok(pos) = row.binary_search_by_key(&f, |(j, _)| *j) {
                    v[p] = -&row[pos].1;
                }
            }
            kernel.push(v);
        }
        Some(Solution {
            particular,
            kernel_basis: kernel,
        })
    }
}

/// Basis of the span of `vectors` (a maximal independent subset, in order).
pub fn independent_subset(field: &FieldSpec, width: usize, vectors: &[Vector]) -> Vec<usize> {
    let mut e = SparseEchelon::new(field, width);
    vectors
        .iter()
        .enumerate()
        .filter(|(_, v)| e.insert_dense(v))
        .map(|(i, _)| i)
        .collect()
}

/// Coordinates of `v` with respect to the independent list `basis`, if `v`
/// lies in its span.
pub fn coordinates(field: &FieldSpec, basis: &[Vector], v: &[Scalar]) -> Option<Vector> {
    let a = Matrix::from_columns(field, v.len(), basis);
    solve_linear(&a, v).ok().flatten().map(|s| s.particular)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_proportional_rows() {
        let q = FieldSpec::Rationals;
        let id = Matrix::identity(&q, 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 2);
        let m = Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.reduced, Matrix::from_i64(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_columns, vec![0]);
    }

    #[test]
    fn solve_examples() {
        let q = FieldSpec::Rationals;
        let id = Matrix::identity(&q, 3);
        let b: Vector = [4, -1, 7].iter().map(|&v| q.from_i64(v)).collect();
        let s = solve_linear(&id, &b).unwrap().unwrap();
        assert_eq!(s.particular, b);
        assert!(s.kernel_basis.is_empty());

        let z = Matrix::zeros(&q, 2, 2);
        let s = solve_linear(&z, &zero_vec(&q, 2)).unwrap().unwrap();
        assert!(is_zero_vec(&s.particular));
        assert_eq!(s.kernel_basis.len(), 2);

        let a = Matrix::from_i64(&q, &[&[1, 1]]);
        let s = solve_linear(&a, &[q.from_i64(2)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&s.particular), vec![q.from_i64(2)]);
        assert_eq!(s.kernel_basis.len(), 1);
        assert!(is_zero_vec(&a.mul_vec(&s.kernel_basis[0])));
    }

    #[test]
    fn solve_inconsistent_and_mismatch() {
        let q = FieldSpec::Rationals;
        let a = Matrix::from_i64(&q, &[&[1, 1], &[2, 2]]);
        assert_eq!(solve_linear(&a, &[q.from_i64(1), q.from_i64(3)]).unwrap(), None);
        assert!(matches!(
            solve_linear(&a, &[q.from_i64(1)]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = FieldSpec::Prime(7);
        let m = Matrix::from_i64(&f, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 2));
        assert!(Matrix::from_i64(&f, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn echelon_normal_forms() {
        let q = FieldSpec::Rationals;
        let mut e = SparseEchelon::new(&q, 3);
        assert!(e.insert_dense(&[q.from_i64(1), q.from_i64(1), q.zero()]));
        assert!(!e.insert_dense(&[q.from_i64(2), q.from_i64(2), q.zero()]));
        assert!(e.insert_dense(&[q.zero(), q.from_i64(1), q.from_i64(1)]));
        assert_eq!(e.rank(), 2);
        // (0,0,1) reduces to itself modulo span{(1,0,-1),(0,1,1)}
        let nf = e.reduce_dense(&[q.zero(), q.zero(), q.one()]);
        assert_eq!(nf, vec![q.zero(), q.zero(), q.one()]);
        assert!(e.contains_dense(&[q.from_i64(1), q.from_i64(2), q.from_i64(1)]));
    }
}
