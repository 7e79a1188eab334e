//! Finite-dimensional unital algebras in structure-constant form, and the
//! structural computations on them: radical, idempotents, blocks, basic
//! algebras, Gabriel quivers and one-sided projectivity.

mod gabriel;
mod idempotents;
mod modules;
mod radical;

pub use gabriel::{gabriel_quiver, multiplicity_matrix, same_quiver_shape, GabrielQuiver};
pub use idempotents::{
    basic_reduction, block_decomposition, lift_idempotents, BasicReduction, BlockDecomposition,
    IdempotentDecomposition, DEFAULT_SPLIT_ATTEMPTS,
};
pub use modules::{is_projective_left, is_projective_right, LeftModule, ProjectivityReport, RightModule};
pub use radical::radical_via_trace;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{
    axpy, is_zero_vec, to_dense, to_sparse, unit_vec, vec_sub, zero_vec, Matrix, SparseEchelon,
    SparseVec, Vector,
};

/// Where an algebra came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Origin {
    Presentation,
    BaseChange,
    SkewGroup,
    Quotient,
    Manual,
    Corner,
    Product,
    FieldExtension,
}

#[derive(Debug, Clone)]
pub struct AssocAlgebra {
    field: FieldSpec,
    dim: usize,
    /// `products[i * dim + j]` is `b_i * b_j`.
    products: Vec<SparseVec>,
    unit: Vector,
    radical: Option<Vec<Vector>>,
    origin: Origin,
    labels: Option<Vec<String>>,
}

impl AssocAlgebra {
    /// Builds an algebra from its multiplication rule on basis elements.
    /// No axioms are checked; see [`AssocAlgebra::validate`].
    pub fn from_fn(
        field: &FieldSpec,
        dim: usize,
        unit: Vector,
        origin: Origin,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                products.push(to_sparse(&product(i, j)));
            }
        }
        AssocAlgebra {
            field: field.clone(),
            dim,
            products,
            unit,
            radical: None,
            origin,
            labels: None,
        }
    }

    pub fn with_radical(mut self, radical: Vec<Vector>) -> Self {
        self.radical = Some(radical);
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &Vector {
        &self.unit
    }
    pub fn origin(&self) -> Origin {
        self.origin
    }
    pub fn designated_radical(&self) -> Option<&Vec<Vector>> {
        self.radical.as_ref()
    }
    pub fn labels(&self) -> Option<&Vec<String>> {
        self.labels.as_ref()
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        zero_vec(&self.field, self.dim)
    }

    /// `b_i * b_j`, sparse.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero();
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &ys {
                let ab = a * *b;
                for (k, c) in &self.products[i * self.dim + j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn mul3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.mul(&self.mul(x, y), z)
    }

    pub fn pow(&self, x: &[Scalar], n: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        self.mul(e, e) == e
    }

    /// Matrix of `y -> x*y` in the standard basis.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_element(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y*x` in the standard basis.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_element(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Checks the unit law and associativity on all basis triples.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = self.basis_element(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidAlgebra(format!("unit law fails on basis element {i}")));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = to_dense(&self.field, self.basis_product(i, j), self.dim);
                for k in 0..self.dim {
                    let left = self.mul(&ij, &self.basis_element(k));
                    let jk = to_dense(&self.field, self.basis_product(j, k), self.dim);
                    let right = self.mul(&self.basis_element(i), &jk);
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on basis triple ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The designated radical if present, otherwise the trace-form radical.
    pub fn radical_basis(&self) -> Result<Vec<Vector>> {
        if let Some(r) = &self.radical {
            return Ok(r.clone());
        }
        match radical_via_trace(self) {
            Ok(r) => Ok(r),
            Err(Error::PositiveCharacteristic) => Err(Error::RadicalUnavailable),
            Err(e) => Err(e),
        }
    }

    /// Checks that the designated radical spans a nilpotent two-sided
    /// ideal; in characteristic 0 also that the quotient is semisimple.
    pub fn validate_radical(&self) -> Result<()> {
        let Some(r) = &self.radical else {
            return Ok(());
        };
        let span = Span::new(&self.field, self.dim, r);
        for x in r {
            for i in 0..self.dim {
                let b = self.basis_element(i);
                if !span.contains(&self.mul(&b, x)) || !span.contains(&self.mul(x, &b)) {
                    return Err(Error::InvalidAlgebra("designated radical is not an ideal".into()));
                }
            }
        }
        if self.nilpotency_index(r).is_none() {
            return Err(Error::InvalidAlgebra("designated radical is not nilpotent".into()));
        }
        if self.field.characteristic() == 0 {
            let trace_rad = radical_via_trace(self)?;
            let t = Span::new(&self.field, self.dim, &trace_rad);
            if t.dim() != span.dim() || !r.iter().all(|x| t.contains(x)) {
                return Err(Error::InvalidAlgebra(
                    "designated radical differs from the trace-form radical".into(),
                ));
            }
        }
        Ok(())
    }

    /// Smallest `n` with `I^n = 0` for the ideal spanned by `ideal`, if the
    /// ideal is nilpotent.
    pub fn nilpotency_index(&self, ideal: &[Vector]) -> Option<usize> {
        let basis = Span::new(&self.field, self.dim, ideal).basis().to_vec();
        let mut power = basis.clone();
        let mut n = 1;
        loop {
            if power.is_empty() {
                return Some(n);
            }
            if n > self.dim + 1 {
                return None;
            }
            let mut next = SparseEchelon::new(&self.field, self.dim);
            for x in &power {
                for y in &basis {
                    next.insert_dense(&self.mul(x, y));
                }
            }
            power = next.dense_rows();
            n += 1;
        }
    }

    /// Products `{x*y}` spanning `I*J`.
    pub fn ideal_product(&self, i: &[Vector], j: &[Vector]) -> Vec<Vector> {
        let mut e = SparseEchelon::new(&self.field, self.dim);
        for x in i {
            for y in j {
                e.insert_dense(&self.mul(x, y));
            }
        }
        e.dense_rows()
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vector> {
        let n = self.dim;
        // z commutes with every basis element: (L_z - R_z) applied... solve
        // sum_k z_k (b_k b_i - b_i b_k) = 0 for all i.
        let mut sys = crate::linalg::LinearSystem::new(&self.field, n);
        for i in 0..n {
            let mut cols: Vec<Vector> = Vec::with_capacity(n);
            for k in 0..n {
                let a = to_dense(&self.field, self.basis_product(k, i), n);
                let b = to_dense(&self.field, self.basis_product(i, k), n);
                cols.push(vec_sub(&a, &b));
            }
            let m = Matrix::from_columns(&self.field, n, &cols);
            for r in 0..n {
                sys.add_homogeneous_dense(m.row(r));
            }
        }
        sys.solve().map(|s| s.kernel_basis).unwrap_or_default()
    }

    /// The algebra structure on a subspace closed under multiplication,
    /// with unit `unit` (which must lie in the subspace). Returns the
    /// subalgebra whose basis element `i` is `basis[i]`.
    pub fn subalgebra(&self, basis: &[Vector], unit: &[Scalar], origin: Origin) -> Result<AssocAlgebra> {
        let coords = CoordinateMap::new(&self.field, self.dim, basis);
        let unit_c = coords
            .coords(unit)
            .ok_or_else(|| Error::InvalidAlgebra("unit not in subspace".into()))?;
        let mut err = None;
        let sub = AssocAlgebra::from_fn(&self.field, basis.len(), unit_c, origin, |i, j| {
            let p = self.mul(&basis[i], &basis[j]);
            match coords.coords(&p) {
                Some(c) => c,
                None => {
                    err = Some(Error::InvalidAlgebra("subspace not closed under products".into()));
                    zero_vec(&self.field, basis.len())
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        let sub = match &self.radical {
            Some(r) => {
                // rad(eAe) = e rad(A) e; here the subspace is a corner or a
                // block, and the intersection is computed from the images.
                let unit_full = unit.to_vec();
                let mut e = SparseEchelon::new(&self.field, basis.len());
                for x in r {
                    let y = self.mul3(&unit_full, x, &unit_full);
                    if let Some(c) = coords.coords(&y) {
                        e.insert_dense(&c);
                    }
                }
                sub.with_radical(e.dense_rows())
            }
            None => sub,
        };
        Ok(sub)
    }

    /// The corner algebra `eAe` and its basis inside `A`.
    pub fn corner(&self, e: &[Scalar]) -> Result<(AssocAlgebra, Vec<Vector>)> {
        let spanning: Vec<Vector> = (0..self.dim)
            .map(|i| self.mul3(e, &self.basis_element(i), e))
            .collect();
        let basis = Span::new(&self.field, self.dim, &spanning).basis().to_vec();
        let sub = self.subalgebra(&basis, e, Origin::Corner)?;
        Ok((sub, basis))
    }

    /// `A / I` for a two-sided ideal `I`, with basis the standard basis
    /// vectors not among the echelon pivots of `I`. Also returns the
    /// projection as a function of coordinates, via the echelon form.
    pub fn quotient(&self, ideal: &[Vector]) -> Quotient {
        let mut ech = SparseEchelon::new(&self.field, self.dim);
        for v in ideal {
            ech.insert_dense(v);
        }
        let free = ech.free_columns();
        let field = self.field.clone();
        let project = |v: &[Scalar]| -> Vector {
            let r = ech.reduce_dense(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let unit = project(&self.unit);
        let alg = AssocAlgebra::from_fn(&field, free.len(), unit, Origin::Corner, |i, j| {
            project(&to_dense(&field, self.basis_product(free[i], free[j]), self.dim))
        });
        Quotient {
            algebra: alg,
            echelon: ech,
            free,
        }
    }

    pub fn direct_product(&self, other: &AssocAlgebra) -> Result<AssocAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("direct product of algebras over different fields".into()));
        }
        let (m, n) = (self.dim, other.dim);
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        let alg = AssocAlgebra::from_fn(&self.field, m + n, unit, Origin::Product, |i, j| {
            let mut v = zero_vec(&self.field, m + n);
            if i < m && j < m {
                for (k, c) in self.basis_product(i, j) {
                    v[*k] = c.clone();
                }
            } else if i >= m && j >= m {
                for (k, c) in other.basis_product(i - m, j - m) {
                    v[m + *k] = c.clone();
                }
            }
            v
        });
        let radical = match (&self.radical, &other.radical) {
            (Some(a), Some(b)) => {
                let mut r: Vec<Vector> = a
                    .iter()
                    .map(|x| {
                        let mut v = x.clone();
                        v.extend(zero_vec(&self.field, n));
                        v
                    })
                    .collect();
                r.extend(b.iter().map(|y| {
                    let mut v = zero_vec(&self.field, m);
                    v.extend(y.iter().cloned());
                    v
                }));
                Some(r)
            }
            _ => None,
        };
        Ok(match radical {
            Some(r) => alg.with_radical(r),
            None => alg,
        })
    }

    /// `A ⊗_Q K` as a `K`-algebra with the same basis; requires `A` over `Q`
    /// and `K` a number field.
    pub fn extend_scalars(&self, ext: &FieldSpec) -> Result<AssocAlgebra> {
        if self.field != FieldSpec::Rationals || !matches!(ext, FieldSpec::NumberField(_)) {
            return Err(Error::FieldMismatch(
                "scalar extension is supported from Q to a number field".into(),
            ));
        }
        let emb = |v: &Vector| -> Vector { v.iter().map(|x| ext.embed(x)).collect() };
        let mut alg = self.clone();
        alg.field = ext.clone();
        alg.products = self
            .products
            .iter()
            .map(|p| p.iter().map(|(k, c)| (*k, ext.embed(c))).collect())
            .collect();
        alg.unit = emb(&self.unit);
        alg.radical = self.radical.as_ref().map(|r| r.iter().map(emb).collect());
        alg.origin = Origin::FieldExtension;
        Ok(alg)
    }

    /// Minimal polynomial of `x` inside the corner with unit `e`
    /// (`x` must satisfy `x = e x e`), as coefficients, monic.
    pub fn minimal_polynomial(&self, x: &[Scalar], e: &[Scalar]) -> crate::poly::Poly {
        let mut powers: Vec<Vector> = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), x);
            let a = Matrix::from_columns(&self.field, self.dim, &powers);
            if let Ok(Some(sol)) = crate::linalg::solve_linear(&a, &next) {
                // x^d = sum c_i x^i  =>  x^d - sum c_i x^i
                let mut coeffs: Vec<Scalar> = sol.particular.iter().map(|c| -c).collect();
                coeffs.push(self.field.one());
                return crate::poly::Poly::new(coeffs);
            }
            powers.push(next);
        }
    }

    /// Evaluates a polynomial at `x` in the corner with unit `e`.
    pub fn eval_poly(&self, p: &crate::poly::Poly, x: &[Scalar], e: &[Scalar]) -> Vector {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            axpy(&mut acc, c, e);
        }
        acc
    }

    pub fn is_zero_element(x: &[Scalar]) -> bool {
        is_zero_vec(x)
    }

    /// Inverse of `x` in the corner `eAe`, if any.
    pub fn corner_inverse(&self, x: &[Scalar], e: &[Scalar]) -> Option<Vector> {
        // Solve x * y = e with y in span{e b_i e}.
        let spanning: Vec<Vector> = (0..self.dim)
            .map(|i| self.mul3(e, &self.basis_element(i), e))
            .collect();
        let basis = Span::new(&self.field, self.dim, &spanning).basis().to_vec();
        let cols: Vec<Vector> = basis.iter().map(|b| self.mul(x, b)).collect();
        let a = Matrix::from_columns(&self.field, self.dim, &cols);
        let sol = crate::linalg::solve_linear(&a, e).ok()??;
        let mut y = self.zero();
        for (c, b) in sol.particular.iter().zip(&basis) {
            axpy(&mut y, c, b);
        }
        if self.mul(&y, x) == e {
            Some(y)
        } else {
            None
        }
    }

    /// Parses the manual JSON entry format
    /// `{ field, dimension, unit, structureConstants, radicalBasis? }`.
    pub fn from_json(text: &str) -> Result<AssocAlgebra> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra JSON: {e}")))?;
        let field: FieldSpec = v["field"]
            .as_str()
            .ok_or_else(|| Error::Parse("algebra JSON: missing \"field\"".into()))?
            .parse()?;
        if !field.is_field() {
            return Err(Error::NotAField(field.descriptor()));
        }
        let dim = v["dimension"]
            .as_u64()
            .ok_or_else(|| Error::Parse("algebra JSON: missing \"dimension\"".into()))? as usize;
        let unit = json_vector(&field, &v["unit"], dim)?;
        let sc = v["structureConstants"]
            .as_array()
            .ok_or_else(|| Error::Parse("algebra JSON: missing \"structureConstants\"".into()))?;
        if sc.len() != dim {
            return Err(Error::Parse("structureConstants must be dim x dim x dim".into()));
        }
        let mut table = Vec::with_capacity(dim * dim);
        for row in sc {
            let row = row
                .as_array()
                .filter(|r| r.len() == dim)
                .ok_or_else(|| Error::Parse("structureConstants must be dim x dim x dim".into()))?;
            for entry in row {
                table.push(json_vector(&field, entry, dim)?);
            }
        }
        let mut alg = AssocAlgebra::from_fn(&field, dim, unit, Origin::Manual, |i, j| {
            table[i * dim + j].clone()
        });
        if let Some(r) = v.get("radicalBasis").filter(|r| !r.is_null()) {
            let r = r
                .as_array()
                .ok_or_else(|| Error::Parse("radicalBasis must be a list of vectors".into()))?;
            let rad = r.iter().map(|x| json_vector(&field, x, dim)).collect::<Result<Vec<_>>>()?;
            alg = alg.with_radical(rad);
        }
        alg.validate()?;
        alg.validate_radical()?;
        Ok(alg)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vec_json = |v: &Vector| -> serde_json::Value {
            serde_json::Value::Array(v.iter().map(|x| serde_json::Value::String(x.to_string())).collect())
        };
        let sc: Vec<serde_json::Value> = (0..self.dim)
            .map(|i| {
                serde_json::Value::Array(
                    (0..self.dim)
                        .map(|j| vec_json(&to_dense(&self.field, self.basis_product(i, j), self.dim)))
                        .collect(),
                )
            })
            .collect();
        let mut obj = serde_json::json!({
            "field": self.field.descriptor(),
            "dimension": self.dim,
            "unit": vec_json(&self.unit),
            "structureConstants": sc,
        });
        if let Some(r) = &self.radical {
            obj["radicalBasis"] = serde_json::Value::Array(r.iter().map(vec_json).collect());
        }
        obj
    }
}

pub(crate) fn json_scalar(field: &FieldSpec, v: &serde_json::Value) -> Result<Scalar> {
    match v {
        serde_json::Value::Number(n) => field.parse_scalar(&n.to_string()),
        serde_json::Value::String(s) => field.parse_scalar(s),
        _ => Err(Error::Parse(format!("expected a scalar literal, found {v}"))),
    }
}

pub(crate) fn json_vector(field: &FieldSpec, v: &serde_json::Value, dim: usize) -> Result<Vector> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == dim)
        .ok_or_else(|| Error::Parse(format!("expected a vector of length {dim}")))?;
    arr.iter().map(|x| json_scalar(field, x)).collect()
}

/// `A / I` together with the reduction data.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: AssocAlgebra,
    echelon: SparseEchelon,
    free: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.echelon.reduce_dense(v);
        self.free.iter().map(|&c| r[c].clone()).collect()
    }

    /// A preimage in `A` of a quotient element.
    pub fn lift(&self, v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.algebra.field(), self.echelon.width());
        for (x, &c) in v.iter().zip(&self.free) {
            out[c] = x.clone();
        }
        out
    }
}

/// A subspace with an echelon basis, for membership tests.
#[derive(Debug, Clone)]
pub struct Span {
    echelon: SparseEchelon,
    basis: Vec<Vector>,
}

impl Span {
    /// Spans `vectors`; `basis()` is a maximal independent subset of them.
    pub fn new(field: &FieldSpec, width: usize, vectors: &[Vector]) -> Self {
        let mut echelon = SparseEchelon::new(field, width);
        let mut basis = Vec::new();
        for v in vectors {
            if echelon.insert_dense(v) {
                basis.push(v.clone());
            }
        }
        Span { echelon, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.echelon.contains_dense(v)
    }

    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        if self.echelon.insert_dense(v) {
            self.basis.push(v.to_vec());
            true
        } else {
            false
        }
    }

    pub fn echelon(&self) -> &SparseEchelon {
        &self.echelon
    }
}

/// Coordinates with respect to a fixed independent list, via an invertible
/// square submatrix.
#[derive(Debug, Clone)]
pub struct CoordinateMap {
    basis: Vec<Vector>,
    rows: Vec<usize>,
    inverse: Matrix,
}

impl CoordinateMap {
    pub fn new(field: &FieldSpec, width: usize, basis: &[Vector]) -> Self {
        let k = basis.len();
        // Choose k coordinates where the basis is independent: pivots of
        // the matrix whose rows are the basis vectors.
        let m = Matrix::from_rows(field, if k == 0 { vec![] } else { basis.to_vec() });
        let rows: Vec<usize> = if k == 0 { vec![] } else { m.rref().pivot_columns };
        assert_eq!(rows.len(), k, "coordinate basis must be independent");
        let mut sub = Matrix::zeros(field, k, k);
        for (i, &r) in rows.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                sub.set(i, j, b[r].clone());
            }
        }
        let inverse = sub.inverse().expect("pivot submatrix is invertible");
        let _ = width;
        CoordinateMap {
            basis: basis.to_vec(),
            rows,
            inverse,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let picked: Vector = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.mul_vec(&picked);
        let field = self.inverse.field().clone();
        let mut back = zero_vec(&field, v.len());
        for (x, b) in c.iter().zip(&self.basis) {
            axpy(&mut back, x, b);
        }
        if back == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn combine(&self, c: &[Scalar]) -> Vector {
        let field = self.inverse.field().clone();
        let n = self.basis.first().map_or(0, |b| b.len());
        let mut out = zero_vec(&field, n);
        for (x, b) in c.iter().zip(&self.basis) {
            axpy(&mut out, x, b);
        }
        out
    }
}


#[cfg(test)]
mod tests {
    use super::test_algebras::*;
    use super::*;

    #[test]
    fn matrix_algebra_is_valid() {
        let q = FieldSpec::Rationals;
        matrix_algebra(&q, 2).validate().unwrap();
        dual_numbers(&q).validate().unwrap();
        q_times_q().validate().unwrap();
    }

    #[test]
    fn center_of_matrix_algebra_is_scalars() {
        let q = FieldSpec::Rationals;
        let m = matrix_algebra(&q, 2);
        let z = m.center();
        assert_eq!(z.len(), 1);
        assert_eq!(Span::new(&q, 4, &z).contains(m.unit()), true);
    }

    #[test]
    fn corner_of_matrix_algebra() {
        let q = FieldSpec::Rationals;
        let m = matrix_algebra(&q, 2);
        let (c, basis) = m.corner(&m.basis_element(0)).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(basis[0], m.basis_element(0));
    }

    #[test]
    fn manual_json_roundtrip() {
        let q = FieldSpec::Rationals;
        let a = dual_numbers(&q).with_radical(vec![unit_vec(&q, 2, 1)]);
        let text = a.to_json().to_string();
        let b = AssocAlgebra::from_json(&text).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.designated_radical().unwrap().len(), 1);
        // non-associative table is rejected
        let bad = r#"{"field":"Q","dimension":1,"unit":["1"],"structureConstants":[[["2"]]]}"#;
        assert!(AssocAlgebra::from_json(bad).is_err());
    }

    #[test]
    fn minimal_polynomial_of_idempotent() {
        let q = FieldSpec::Rationals;
        let m = matrix_algebra(&q, 2);
        let p = m.minimal_polynomial(&m.basis_element(0), m.unit());
        // x^2 - x
        assert_eq!(p.coeffs(), &[q.zero(), q.from_i64(-1), q.one()]);
    }
}
