//! Certificates for split and separable extensions, and the restriction of
//! `B` to a one-sided `A`-module.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{ExtensionKind, ExtensionMorphism};
use crate::algebra::{is_projective_left, is_projective_right, lift_idempotents, LeftModule, ProjectivityReport, RightModule};
use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{zero_vec, LinearSystem, Matrix, SparseEchelon, SparseVec, Vector};

fn accumulate(field: &FieldSpec, terms: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let e = acc.entry(i).or_insert_with(|| field.zero());
        *e += &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Solves for a `k`-linear `π: B -> A` with `π∘φ = id`,
/// `π(φ(a) b) = a π(b)` and `π(b φ(a)) = π(b) a`. The result has one column
/// per basis element of `B`.
pub fn split_witness(phi: &ExtensionMorphism) -> Option<Matrix> {
    let (a, b) = (phi.source(), phi.target());
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let var = |r: usize, c: usize| r * nb + c;
    let mut sys = LinearSystem::new(field, na * nb);
    let images: Vec<Vector> = (0..na).map(|i| phi.image(i)).collect();
    for (i, img) in images.iter().enumerate() {
        for r in 0..na {
            let eq = accumulate(field, img.iter().enumerate().map(|(c, x)| (var(r, c), x.clone())));
            let rhs = if r == i { field.one() } else { field.zero() };
            sys.add_equation(eq, rhs);
        }
    }
    for (i, img) in images.iter().enumerate() {
        let ai = a.basis_element(i);
        let left = a.left_mult_matrix(&ai);
        let right = a.right_mult_matrix(&ai);
        for j in 0..nb {
            let bj = b.basis_element(j);
            let v = b.mul(img, &bj);
            let w = b.mul(&bj, img);
            for r in 0..na {
                let l = v
                    .iter()
                    .enumerate()
                    .map(|(c, x)| (var(r, c), x.clone()))
                    .chain((0..na).map(|s| (var(s, j), -left.get(r, s))));
                sys.add_equation(accumulate(field, l), field.zero());
                let rr = w
                    .iter()
                    .enumerate()
                    .map(|(c, x)| (var(r, c), x.clone()))
                    .chain((0..na).map(|s| (var(s, j), -right.get(r, s))));
                sys.add_equation(accumulate(field, rr), field.zero());
            }
            if sys.is_inconsistent() {
                return None;
            }
        }
    }
    let sol = sys.solve()?;
    let rows: Vec<Vector> = (0..na).map(|r| sol.particular[r * nb..(r + 1) * nb].to_vec()).collect();
    let pi = Matrix::from_rows(field, rows);
    debug_assert!(verify_split(phi, &pi));
    Some(pi)
}

/// Rechecks the three identity families of a split retraction on all
/// basis elements.
pub fn verify_split(phi: &ExtensionMorphism, pi: &Matrix) -> bool {
    let (a, b) = (phi.source(), phi.target());
    if pi.rows() != a.dim() || pi.cols() != b.dim() {
        return false;
    }
    if pi.mul(phi.map()) != Matrix::identity(a.field(), a.dim()) {
        return false;
    }
    (0..a.dim()).all(|i| {
        let img = phi.image(i);
        let ai = a.basis_element(i);
        (0..b.dim()).all(|j| {
            let bj = b.basis_element(j);
            let pb = pi.column(j);
            pi.mul_vec(&b.mul(&img, &bj)) == a.mul(&ai, &pb) && pi.mul_vec(&b.mul(&bj, &img)) == a.mul(&pb, &ai)
        })
    })
}

/// `B ⊗_A B` as the quotient of `B ⊗_k B` (basis `b_i ⊗ b_j` at index
/// `i * dim B + j`) by the span of `b φ(a) ⊗ b' - b ⊗ φ(a) b'`.
#[derive(Debug, Clone)]
pub struct TensorQuotient {
    field: FieldSpec,
    nb: usize,
    relations: SparseEchelon,
    free: Vec<usize>,
    position: BTreeMap<usize, usize>,
}

impl TensorQuotient {
    pub fn new(phi: &ExtensionMorphism) -> Self {
        let b = phi.target();
        let field = b.field().clone();
        let nb = b.dim();
        let mut relations = SparseEchelon::new(&field, nb * nb);
        let images: Vec<Vector> = (0..phi.source().dim()).map(|k| phi.image(k)).collect();
        for img in &images {
            for i in 0..nb {
                let x = b.mul(&b.basis_element(i), img);
                for j in 0..nb {
                    let y = b.mul(img, &b.basis_element(j));
                    let terms = x
                        .iter()
                        .enumerate()
                        .map(|(m, c)| (m * nb + j, c.clone()))
                        .chain(y.iter().enumerate().map(|(m, c)| (i * nb + m, -c)));
                    relations.insert(accumulate(&field, terms));
                }
            }
        }
        let free = relations.free_columns();
        let position = free.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        TensorQuotient {
            field,
            nb,
            relations,
            free,
            position,
        }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Coordinates in the quotient basis of a tensor in `B ⊗_k B`.
    pub fn project(&self, t: &SparseVec) -> Vector {
        let mut out = zero_vec(&self.field, self.dim());
        for (c, x) in self.relations.reduce(t) {
            out[self.position[&c]] = x;
        }
        out
    }

    /// The representative supported on the quotient basis.
    pub fn lift(&self, coords: &[Scalar]) -> SparseVec {
        self.free
            .iter()
            .zip(coords)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&c, x)| (c, x.clone()))
            .collect()
    }

    pub fn is_zero(&self, t: &SparseVec) -> bool {
        self.relations.contains(t)
    }

    /// `(i, j)` for the tensor index.
    pub fn pair(&self, index: usize) -> (usize, usize) {
        (index / self.nb, index % self.nb)
    }
}

fn left_act(b: &crate::algebra::AssocAlgebra, k: usize, t: &SparseVec) -> Vec<(usize, Scalar)> {
    let nb = b.dim();
    let mut out = Vec::new();
    for (idx, c) in t {
        let (i, j) = (idx / nb, idx % nb);
        for (m, x) in b.basis_product(k, i) {
            out.push((m * nb + j, c * x));
        }
    }
    out
}

fn right_act(b: &crate::algebra::AssocAlgebra, k: usize, t: &SparseVec) -> Vec<(usize, Scalar)> {
    let nb = b.dim();
    let mut out = Vec::new();
    for (idx, c) in t {
        let (i, j) = (idx / nb, idx % nb);
        for (m, x) in b.basis_product(j, k) {
            out.push((i * nb + m, c * x));
        }
    }
    out
}

fn multiply_out(b: &crate::algebra::AssocAlgebra, t: &SparseVec) -> Vector {
    let nb = b.dim();
    let mut out = b.zero();
    for (idx, c) in t {
        for (m, x) in b.basis_product(idx / nb, idx % nb) {
            out[*m] += &(c * x);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeparabilityCertificate {
    /// `dim B ⊗_A B`.
    pub quotient_dimension: usize,
    /// Representative in `B ⊗_k B` as `(i, j, coefficient)` for `b_i ⊗ b_j`.
    #[serde(serialize_with = "serialize_terms")]
    pub terms: Vec<(usize, usize, Scalar)>,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &[(usize, usize, Scalar)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(terms.len()))?;
    for (i, j, c) in terms {
        seq.serialize_element(&(i, j, c.to_string()))?;
    }
    seq.end()
}

impl SeparabilityCertificate {
    fn from_tensor(tq: &TensorQuotient, t: &SparseVec) -> Self {
        SeparabilityCertificate {
            quotient_dimension: tq.dim(),
            terms: t
                .iter()
                .map(|(idx, c)| {
                    let (i, j) = tq.pair(*idx);
                    (i, j, c.clone())
                })
                .collect(),
        }
    }

    pub fn tensor(&self, nb: usize) -> SparseVec {
        let mut t: SparseVec = self.terms.iter().map(|(i, j, c)| (i * nb + j, c.clone())).collect();
        t.sort_by_key(|(i, _)| *i);
        t
    }
}

/// Solves for `e ∈ B ⊗_A B` with `μ(e) = 1` and `b e = e b` for all basis
/// elements `b`; the solution is re-verified before it is returned.
pub fn separability_idempotent(phi: &ExtensionMorphism) -> Option<SeparabilityCertificate> {
    let tq = TensorQuotient::new(phi);
    separability_in(phi, &tq)
}

fn separability_in(phi: &ExtensionMorphism, tq: &TensorQuotient) -> Option<SeparabilityCertificate> {
    let b = phi.target();
    let field = b.field();
    let q = tq.dim();
    let mut sys = LinearSystem::new(field, q);
    let basis_tensors: Vec<SparseVec> = tq.free.iter().map(|&c| vec![(c, field.one())]).collect();
    // normalization: μ(e) = 1
    let mus: Vec<Vector> = basis_tensors.iter().map(|t| multiply_out(b, t)).collect();
    for m in 0..b.dim() {
        let eq = accumulate(field, mus.iter().enumerate().map(|(f, v)| (f, v[m].clone())));
        sys.add_equation(eq, b.unit()[m].clone());
    }
    // centrality: b_k e - e b_k = 0 in the quotient
    for k in 0..b.dim() {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); q];
        for (f, t) in basis_tensors.iter().enumerate() {
            let mut diff = left_act(b, k, t);
            diff.extend(right_act(b, k, t).into_iter().map(|(i, c)| (i, -c)));
            let proj = tq.project(&accumulate(field, diff));
            for (g, x) in proj.into_iter().enumerate() {
                if !x.is_zero() {
                    rows[g].push((f, x));
                }
            }
        }
        for r in rows {
            if !r.is_empty() {
                sys.add_equation(accumulate(field, r), field.zero());
            }
        }
        if sys.is_inconsistent() {
            return None;
        }
    }
    let sol = sys.solve()?;
    let t = tq.lift(&sol.particular);
    let cert = SeparabilityCertificate::from_tensor(tq, &t);
    verify_in(phi, tq, &cert).then_some(cert)
}

/// Rechecks `μ(e) = 1` and `b e - e b ∈ N` for every basis element `b`,
/// where `N` is the kernel of `B ⊗_k B -> B ⊗_A B`.
pub fn verify_separability(phi: &ExtensionMorphism, cert: &SeparabilityCertificate) -> bool {
    verify_in(phi, &TensorQuotient::new(phi), cert)
}

fn verify_in(phi: &ExtensionMorphism, tq: &TensorQuotient, cert: &SeparabilityCertificate) -> bool {
    let b = phi.target();
    let t = cert.tensor(b.dim());
    if &multiply_out(b, &t) != b.unit() {
        return false;
    }
    (0..b.dim()).all(|k| {
        let mut diff = left_act(b, k, &t);
        diff.extend(right_act(b, k, &t).into_iter().map(|(i, c)| (i, -c)));
        tq.is_zero(&accumulate(b.field(), diff))
    })
}

/// The classical element `(1/|G|) Σ_g (1 ⊗ g) ⊗ (1 ⊗ g⁻¹)` of a skew group
/// extension, or `None` if `|G|` is not invertible.
pub fn skew_separability_formula(
    phi: &ExtensionMorphism,
    action: &super::GroupAction,
) -> Option<SeparabilityCertificate> {
    let ExtensionKind::SkewGroup { order, .. } = phi.kind() else {
        return None;
    };
    let b = phi.target();
    let field = b.field();
    let inv = field.from_i64(*order as i64).inv()?;
    let a = phi.source();
    let m = *order;
    let nb = b.dim();
    let one_g = |g: usize| -> Vec<(usize, Scalar)> {
        a.unit()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i * m + g, c.clone()))
            .collect()
    };
    let mut terms = Vec::new();
    for g in 0..m {
        for (x, cx) in one_g(g) {
            for (y, cy) in one_g(action.inverse(g)) {
                terms.push((x * nb + y, &(&cx * &cy) * &inv));
            }
        }
    }
    let t = accumulate(field, terms);
    let tq = TensorQuotient::new(phi);
    let cert = SeparabilityCertificate::from_tensor(&tq, &t);
    verify_in(phi, &tq, &cert).then_some(cert)
}

/// `B` as a right `A`-module (`b·a = b φ(a)`) and as a left `A`-module
/// (`a·b = φ(a) b`).
pub fn restriction_modules(phi: &ExtensionMorphism) -> Result<(RightModule, LeftModule)> {
    let (a, b) = (phi.source(), phi.target());
    let right = (0..a.dim()).map(|i| b.right_mult_matrix(&phi.image(i))).collect();
    let left = (0..a.dim()).map(|i| b.left_mult_matrix(&phi.image(i))).collect();
    Ok((RightModule::new(a, b.dim(), right)?, LeftModule::new(a, b.dim(), left)?))
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessReport {
    #[serde(serialize_with = "serialize_matrix")]
    pub split_retraction: Option<Matrix>,
    pub separability_idempotent: Option<SeparabilityCertificate>,
    pub right_projective: ProjectivityReport,
    pub left_projective: ProjectivityReport,
}

fn serialize_matrix<S: serde::Serializer>(m: &Option<Matrix>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match m {
        None => s.serialize_none(),
        Some(m) => {
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
                .collect();
            s.serialize_some(&rows)
        }
    }
}

/// All witnesses for `φ`; projectivity uses primitive idempotents of `A`
/// found with `seed`.
pub fn witness_report(phi: &ExtensionMorphism, seed: u64) -> Result<WitnessReport> {
    let dec = lift_idempotents(phi.source(), seed)?;
    let (right, left) = restriction_modules(phi)?;
    Ok(WitnessReport {
        split_retraction: split_witness(phi),
        separability_idempotent: separability_idempotent(phi),
        right_projective: is_projective_right(phi.source(), &right, &dec)?,
        left_projective: is_projective_left(phi.source(), &left, &dec)?,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::diamond;
    use super::super::*;
    use super::*;
    use crate::quiver::path_basis_algebra;

    fn point(field: &FieldSpec) -> crate::algebra::AssocAlgebra {
        crate::algebra::AssocAlgebra::from_fn(field, 1, vec![field.one()], crate::algebra::Origin::Manual, |_, _| {
            vec![field.one()]
        })
    }

    #[test]
    fn example_quotient_witnesses() {
        let m = quotient_extension(&diamond("b*a"), diamond("").parse_relations(&["d*c"]).unwrap()).unwrap();
        let e = separability_idempotent(&m).unwrap();
        assert!(verify_separability(&m, &e));
        assert_eq!(e.quotient_dimension, 8);
        assert!(split_witness(&m).is_none());
        let w = witness_report(&m, 0).unwrap();
        assert!(!w.right_projective.projective);
    }

    #[test]
    fn base_change_witnesses() {
        let k = parse_extension("Q[x]/(x^2-2)").unwrap();
        let a = path_basis_algebra(&diamond("b*a")).unwrap();
        let m = base_change(&a, &k).unwrap();
        let pi = split_witness(&m).unwrap();
        assert!(verify_split(&m, &pi));
        let e = separability_idempotent(&m).unwrap();
        assert!(verify_separability(&m, &e));
        let w = witness_report(&m, 0).unwrap();
        assert!(w.right_projective.projective && w.left_projective.projective);
        assert_eq!(w.right_projective.multiplicities, vec![2, 2, 2, 2]);
    }

    #[test]
    fn skew_witnesses_depend_on_the_characteristic() {
        let q = FieldSpec::Rationals;
        let m = skew_group_algebra(&point(&q), &GroupAction::cyclic_trivial(&point(&q), 2)).unwrap();
        assert!(split_witness(&m).is_some());
        let e = separability_idempotent(&m).unwrap();
        assert!(verify_separability(&m, &e));
        let g = GroupAction::cyclic_trivial(&point(&q), 2);
        assert!(skew_separability_formula(&m, &g).is_some());

        let f2 = FieldSpec::prime(2).unwrap();
        let g = GroupAction::cyclic_trivial(&point(&f2), 2);
        let m = skew_group_algebra(&point(&f2), &g).unwrap();
        assert!(separability_idempotent(&m).is_none());
        assert!(skew_separability_formula(&m, &g).is_none());
        assert!(split_witness(&m).is_some());
    }

    #[test]
    fn identity_witnesses() {
        let a = path_basis_algebra(&diamond("b*a")).unwrap();
        let m = ExtensionMorphism::identity(&a);
        let pi = split_witness(&m).unwrap();
        assert_eq!(pi, Matrix::identity(a.field(), a.dim()));
        assert!(separability_idempotent(&m).is_some());
        let w = witness_report(&m, 0).unwrap();
        assert!(w.right_projective.projective && w.left_projective.projective);
    }
}
