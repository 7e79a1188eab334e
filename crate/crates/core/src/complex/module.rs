//! Modules given by action matrices, complexes of them, and minimal
//! projective resolutions.

use std::sync::Arc;

use super::{zero_entries, DimVector, ProjAlgebra, ProjComplex};
use crate::algebra::{LeftModule, Span};
use crate::error::{Error, Result};
use crate::linalg::{unit_vec, Matrix, SparseEchelon, Vector};

/// `A f_v` as a left module in the basis of the projective.
pub fn projective_module(base: &ProjAlgebra, v: usize) -> LeftModule {
    LeftModule {
        dim: base.projective_dim(v),
        action: base.projective_action(v).to_vec(),
    }
}

pub(crate) fn sum_of_projectives(base: &ProjAlgebra, vertices: &[usize]) -> LeftModule {
    let field = base.field();
    let mut out = LeftModule {
        dim: 0,
        action: vec![Matrix::zeros(field, 0, 0); base.algebra().dim()],
    };
    for &v in vertices {
        out = out.direct_sum(&projective_module(base, v));
    }
    out
}

/// `rad(A) M` as a list of spanning vectors.
fn radical_of(base: &ProjAlgebra, m: &LeftModule, within: &[Vector]) -> Vec<Vector> {
    let a = base.algebra();
    let mut span = Span::new(base.field(), m.dim, &[]);
    for r in base.radical().basis() {
        let op = m.act(a, r);
        for z in within {
            span.insert(&op.mul_vec(z));
        }
    }
    span.basis().to_vec()
}

/// `M / N` for a submodule `N` spanned by `sub`, with the projection
/// `M -> M/N` and a linear section `M/N -> M`.
pub fn quotient_module(base: &ProjAlgebra, m: &LeftModule, sub: &[Vector]) -> Result<(LeftModule, Matrix, Matrix)> {
    let field = base.field();
    let a = base.algebra();
    let mut ech = SparseEchelon::new(field, m.dim);
    for v in sub {
        ech.insert_dense(v);
    }
    for op in &m.action {
        for v in sub {
            if !ech.contains_dense(&op.mul_vec(v)) {
                return Err(Error::InvalidModule("the subspace is not a submodule".into()));
            }
        }
    }
    let free = ech.free_columns();
    let q = free.len();
    let mut proj = Matrix::zeros(field, q, m.dim);
    for j in 0..m.dim {
        let r = ech.reduce_dense(&unit_vec(field, m.dim, j));
        for (i, &f) in free.iter().enumerate() {
            proj.set(i, j, r[f].clone());
        }
    }
    let lift_cols: Vec<Vector> = free.iter().map(|&f| unit_vec(field, m.dim, f)).collect();
    let lift = Matrix::from_columns(field, m.dim, &lift_cols);
    let action = m.action.iter().map(|op| proj.mul(op).mul(&lift)).collect();
    let quotient = LeftModule { dim: q, action };
    debug_assert!(LeftModule::new(a, quotient.dim, quotient.action.clone()).is_ok());
    Ok((quotient, proj, lift))
}

/// The simple top of `A f_v`.
pub fn simple_module(base: &ProjAlgebra, v: usize) -> LeftModule {
    let p = projective_module(base, v);
    let all: Vec<Vector> = (0..p.dim).map(|j| unit_vec(base.field(), p.dim, j)).collect();
    let rad = radical_of(base, &p, &all);
    quotient_module(base, &p, &rad).expect("rad P is a submodule").0
}

/// The module of a quiver representation: `dims[v]` is the dimension at
/// vertex `v` and `arrows[a]` is the `dims[t] x dims[s]` matrix of arrow
/// `a: s -> t`. Relations are checked through the module axioms.
pub fn module_from_representation(base: &ProjAlgebra, dims: &[usize], arrows: &[Matrix]) -> Result<LeftModule> {
    let pa = base
        .path_algebra()
        .ok_or_else(|| Error::InvalidModule("representations need an algebra given by a presentation".into()))?;
    let q = pa.presentation().quiver();
    let field = base.field();
    if dims.len() != q.vertex_count() || arrows.len() != q.arrow_count() {
        return Err(Error::DimensionMismatch("one dimension per vertex and one matrix per arrow".into()));
    }
    for (i, m) in arrows.iter().enumerate() {
        let arr = q.arrow(i);
        if m.rows() != dims[arr.target] || m.cols() != dims[arr.source] {
            return Err(Error::DimensionMismatch(format!("matrix of arrow {} has the wrong shape", arr.label)));
        }
    }
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let total: usize = dims.iter().sum();
    let action = pa
        .basis()
        .iter()
        .map(|path| {
            let s = path.source();
            let mut block = Matrix::identity(field, dims[s]);
            for &ar in path.arrows() {
                block = arrows[ar].mul(&block);
            }
            let t = path.target(q);
            let mut full = Matrix::zeros(field, total, total);
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    full.set(offsets[t] + i, offsets[s] + j, block.get(i, j).clone());
                }
            }
            full
        })
        .collect();
    LeftModule::new(base.algebra(), total, action)
}

/// A bounded complex of modules with k-linear differentials.
#[derive(Debug, Clone)]
pub struct ModuleComplex {
    base: Arc<ProjAlgebra>,
    lo: i64,
    terms: Vec<LeftModule>,
    diffs: Vec<Matrix>,
}

impl ModuleComplex {
    pub fn new(base: Arc<ProjAlgebra>, lo: i64, terms: Vec<LeftModule>, diffs: Vec<Matrix>) -> Result<Self> {
        let a = base.algebra();
        if diffs.len() + 1 != terms.len() && !(terms.is_empty() && diffs.is_empty()) {
            return Err(Error::InvalidComplex("wrong number of differentials".into()));
        }
        for t in &terms {
            LeftModule::new(a, t.dim, t.action.clone())?;
        }
        for (k, d) in diffs.iter().enumerate() {
            let (x, y) = (&terms[k], &terms[k + 1]);
            if d.rows() != y.dim || d.cols() != x.dim {
                return Err(Error::InvalidComplex(format!("differential {k} has the wrong shape")));
            }
            if x.action.iter().zip(&y.action).any(|(ax, ay)| d.mul(ax) != ay.mul(d)) {
                return Err(Error::InvalidComplex(format!("differential {k} is not A-linear")));
            }
            if k > 0 && !d.mul(&diffs[k - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!("d^{} d^{} is not zero", k, k - 1)));
            }
        }
        Ok(Self::new_unchecked(base, lo, terms, diffs))
    }

    pub(crate) fn new_unchecked(base: Arc<ProjAlgebra>, lo: i64, terms: Vec<LeftModule>, diffs: Vec<Matrix>) -> Self {
        ModuleComplex { base, lo, terms, diffs }
    }

    pub fn zero(base: Arc<ProjAlgebra>) -> Self {
        ModuleComplex { base, lo: 0, terms: vec![], diffs: vec![] }
    }

    /// A module placed in a single degree.
    pub fn stalk(base: Arc<ProjAlgebra>, degree: i64, m: LeftModule) -> Self {
        ModuleComplex { base, lo: degree, terms: vec![m], diffs: vec![] }
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.terms.is_empty()).then(|| (self.lo, self.lo + self.terms.len() as i64 - 1))
    }

    pub fn term(&self, degree: i64) -> Option<&LeftModule> {
        let k = degree - self.lo;
        (k >= 0).then(|| self.terms.get(k as usize)).flatten()
    }

    fn rank_at(&self, degree: i64) -> usize {
        let k = degree - self.lo;
        if k < 0 {
            return 0;
        }
        self.diffs.get(k as usize).map_or(0, |d| d.rank())
    }

    pub fn component_dim_vector(&self) -> DimVector {
        let mut d = DimVector::zero();
        for (k, t) in self.terms.iter().enumerate() {
            d.set(self.lo + k as i64, t.dim);
        }
        d
    }

    pub fn cohomology_dim_vector(&self) -> DimVector {
        let mut d = DimVector::zero();
        for (k, t) in self.terms.iter().enumerate() {
            let i = self.lo + k as i64;
            d.set(i, t.dim - self.rank_at(i) - self.rank_at(i - 1));
        }
        d
    }

    /// `0 -> X^t / Im d^{t-1} -> X^{t+1} -> ...`, which keeps the
    /// cohomology in degrees `>= t`.
    pub fn good_truncate(&self, t: i64) -> ModuleComplex {
        let Some((lo, hi)) = self.support() else {
            return self.clone();
        };
        if t <= lo {
            return self.clone();
        }
        if t > hi {
            return ModuleComplex::zero(self.base.clone());
        }
        let k = (t - lo) as usize;
        let image = self.diffs[k - 1].transpose().row_vectors();
        let (q, _, lift) = quotient_module(&self.base, &self.terms[k], &image).expect("images are submodules");
        let mut terms = vec![q];
        terms.extend_from_slice(&self.terms[k + 1..]);
        let mut diffs = Vec::new();
        if k < self.diffs.len() {
            diffs.push(self.diffs[k].mul(&lift));
            diffs.extend_from_slice(&self.diffs[k + 1..]);
        }
        ModuleComplex::new_unchecked(self.base.clone(), t, terms, diffs)
    }
}

/// A minimal projective resolution `P^{-depth} -> ... -> P^0` of a module;
/// `complete` means the kernel at the bottom vanished.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub complex: ProjComplex,
    pub complete: bool,
}

/// Generators of `omega` modulo `rad(A) omega`, one list per vertex, as
/// vectors `f_u z` in the ambient module.
fn top_generators(base: &ProjAlgebra, ambient: &LeftModule, omega: &[Vector]) -> Vec<(usize, Vector)> {
    let a = base.algebra();
    let rad = radical_of(base, ambient, omega);
    let mut gens = Vec::new();
    for u in 0..base.vertex_count() {
        let e = ambient.act(a, base.idempotent(u));
        let mut ech = SparseEchelon::new(base.field(), ambient.dim);
        for y in &rad {
            ech.insert_dense(&e.mul_vec(y));
        }
        for z in omega {
            let y = e.mul_vec(z);
            if ech.insert_dense(&y) {
                gens.push((u, y));
            }
        }
    }
    gens
}

/// The cover `(+) A f_u -> ambient` sending the generator of summand `g`
/// to `gens[g]`.
fn cover_matrix(base: &ProjAlgebra, ambient: &LeftModule, gens: &[(usize, Vector)]) -> Matrix {
    let a = base.algebra();
    let mut cols = Vec::new();
    for (u, z) in gens {
        for x in base.projective_basis(*u) {
            cols.push(ambient.act(a, x).mul_vec(z));
        }
    }
    Matrix::from_columns(base.field(), ambient.dim, &cols)
}

/// Resolution by iterated projective covers down to degree `-depth`.
pub fn minimal_proj_resolution(base: &Arc<ProjAlgebra>, m: &LeftModule, depth: usize) -> Result<Resolution> {
    let a = base.algebra();
    if m.action.len() != a.dim() || m.action.iter().any(|op| op.rows() != m.dim || op.cols() != m.dim) {
        return Err(Error::InvalidModule("action matrices have the wrong shape".into()));
    }
    let field = base.field();
    let mut ambient = m.clone();
    let mut ambient_vertices: Option<Vec<usize>> = None;
    let mut omega: Vec<Vector> = (0..m.dim).map(|j| unit_vec(field, m.dim, j)).collect();
    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut diffs_down = Vec::new();
    for level in 0..=depth {
        if omega.is_empty() {
            break;
        }
        let gens = top_generators(base, &ambient, &omega);
        let vertices: Vec<usize> = gens.iter().map(|(u, _)| *u).collect();
        if let Some(prev) = &ambient_vertices {
            let mut d = zero_entries(base, prev.len(), gens.len());
            for (g, (_, z)) in gens.iter().enumerate() {
                let mut off = 0;
                for (s, &v) in prev.iter().enumerate() {
                    let n = base.projective_dim(v);
                    d[s][g] = base.projective_combine(v, &z[off..off + n]);
                    off += n;
                }
            }
            diffs_down.push(d);
        }
        let pi = cover_matrix(base, &ambient, &gens);
        omega = pi.kernel();
        ambient = sum_of_projectives(base, &vertices);
        ambient_vertices = Some(vertices.clone());
        terms.push(vertices);
        let _ = level;
    }
    let complete = omega.is_empty();
    let lo = -(terms.len() as i64 - 1);
    terms.reverse();
    diffs_down.reverse();
    let complex = ProjComplex::new(base.clone(), lo.min(0), terms, diffs_down)?;
    Ok(Resolution { complex, complete })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{diamond, dual_numbers, el, presented, DIAMOND};
    use super::*;

    #[test]
    fn simple_tops_are_one_dimensional() {
        let b = diamond(&["b*a"]);
        for v in 0..4 {
            let s = simple_module(&b, v);
            assert_eq!(s.dim, 1);
            let e = s.act(b.algebra(), b.idempotent(v));
            assert!(e.get(0, 0).is_one());
        }
    }

    #[test]
    fn projective_resolves_to_its_stalk() {
        let b = diamond(&["b*a"]);
        let r = minimal_proj_resolution(&b, &projective_module(&b, 0), 4).unwrap();
        assert!(r.complete);
        assert_eq!(r.complex, ProjComplex::stalk(b, 0, vec![0]).unwrap());
    }

    #[test]
    fn simple_two_over_diamond_ba() {
        // rad P2 is spanned by b, a copy of the simple P4.
        let b = diamond(&["b*a"]);
        let r = minimal_proj_resolution(&b, &simple_module(&b, 1), 5).unwrap();
        assert!(r.complete);
        let c = &r.complex;
        assert_eq!(c.support(), Some((-1, 0)));
        assert_eq!(c.term(0), &[1]);
        assert_eq!(c.term(-1), &[3]);
        let d = c.differential(-1).unwrap();
        let bb = el(&b, "b");
        let ratio = d[0][0].iter().zip(&bb).find(|(_, y)| !y.is_zero()).map(|(x, _)| x.clone()).unwrap();
        assert_eq!(d[0][0], crate::linalg::vec_scale(&bb, &ratio));
        assert!(c.is_homotopically_minimal());
        assert_eq!(c.cohomology_dim_vector(), DimVector::delta(0, 1));
    }

    #[test]
    fn simple_one_over_diamond_ba_dc() {
        // S1 has P1 <- P2 (+) P3 <- P4 (+) P4 with H^0 = S1.
        let b = diamond(&["b*a", "d*c"]);
        let r = minimal_proj_resolution(&b, &simple_module(&b, 0), 2).unwrap();
        let c = &r.complex;
        assert!(r.complete);
        assert_eq!(c.term_data(), vec![(-2, vec![3, 3]), (-1, vec![1, 2]), (0, vec![0])]);
        // Oracle: ranks of the small matrices by hand. d^{-1} has rank 2
        // (image a, c), d^{-2} has rank 2 (image b, d).
        assert_eq!(c.differential_matrix(-1).rank(), 2);
        assert_eq!(c.differential_matrix(-2).rank(), 2);
        assert_eq!(c.cohomology_dim_vector(), DimVector::delta(0, 1));
    }

    #[test]
    fn dual_numbers_periodic() {
        let b = dual_numbers();
        let r = minimal_proj_resolution(&b, &simple_module(&b, 0), 5).unwrap();
        assert!(!r.complete);
        let c = &r.complex;
        for i in -5..=0 {
            assert_eq!(c.term(i), &[0]);
        }
        // Truncation at depth leaves a kernel of dimension 1 at the bottom.
        assert_eq!(c.cohomology_dim_vector(), DimVector::from_pairs(&[(0, 1), (-5, 1)]));
    }

    #[test]
    fn representations_and_relations() {
        let b = presented("Q", DIAMOND, &["b*a"]);
        let f = b.field().clone();
        let one = Matrix::from_i64(&f, &[&[1]]);
        let ok = module_from_representation(&b, &[1, 1, 0, 1], &[one.clone(), Matrix::zeros(&f, 1, 1), Matrix::zeros(&f, 0, 1), Matrix::zeros(&f, 1, 0)]);
        assert!(ok.is_ok());
        let bad = module_from_representation(&b, &[1, 1, 0, 1], &[one.clone(), one, Matrix::zeros(&f, 0, 1), Matrix::zeros(&f, 1, 0)]);
        assert_eq!(bad.unwrap_err().name(), "InvalidModule");
    }

    #[test]
    fn good_truncation() {
        let b = diamond(&["b*a"]);
        let s = ModuleComplex::stalk(b.clone(), 0, simple_module(&b, 0));
        assert_eq!(s.good_truncate(0).cohomology_dim_vector(), s.cohomology_dim_vector());
        assert!(s.good_truncate(1).cohomology_dim_vector().is_zero());
        // P4 --b--> P2: H^0 = 0, H^1 = S2; truncating at 1 keeps H^1 only.
        let c = ProjComplex::new(b.clone(), 0, vec![vec![3], vec![1]], vec![vec![vec![el(&b, "b")]]])
            .unwrap()
            .to_module_complex();
        assert_eq!(c.cohomology_dim_vector(), DimVector::delta(1, 1));
        let t = c.good_truncate(1);
        assert_eq!(t.component_dim_vector(), DimVector::delta(1, 1));
        assert_eq!(t.cohomology_dim_vector(), DimVector::delta(1, 1));
        // Truncating P1 --a--> P2 at 1 gives the cokernel P2 / a P1.
        let e = ProjComplex::new(b.clone(), 0, vec![vec![1], vec![0]], vec![vec![vec![el(&b, "a")]]]).unwrap();
        let m = e.to_module_complex();
        let h = m.cohomology_dim_vector();
        assert_eq!(m.good_truncate(1).cohomology_dim_vector(), DimVector::from_pairs(&[(1, h.get(1))]));
    }
}
