//! Bounded complexes of finitely generated projective left modules.
//!
//! Projectives are the summands `A f_v` for a chosen complete set of
//! primitive orthogonal idempotents `f_v`. A morphism `A f_v -> A f_w` is
//! right multiplication `x -> x h` by an element `h` of `f_v A f_w`, and a
//! differential is a matrix of such elements, indexed `[row][column]` by the
//! summands of the target and source terms. The composite "first `h`, then
//! `k`" has entry `h * k`.

mod module;
mod scalars;
mod search;

pub use module::{
    minimal_proj_resolution, module_from_representation, projective_module, quotient_module,
    simple_module, ModuleComplex, Resolution,
};
pub use scalars::{extend_scalars_complex, lemma_bound, projective_dictionary, ProjectiveDictionary};
pub use search::{
    chain_map_space, finiteness_sampler, iso_search, lemma_iso_roundtrip, module_hom_space,
    module_iso_search, random_complex, IsoOutcome, RoundtripReport, SamplerReport,
    DEFAULT_SAMPLER_BUDGET, FINITE_FIELD_CAVEAT,
};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AssocAlgebra, CoordinateMap, Span};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{axpy, is_zero_vec, unit_vec, vec_sub, zero_vec, LinearSystem, Matrix, Vector};
use crate::quiver::{parse_path, PathAlgebra, Presentation};

/// Basis and left action of one indecomposable projective `A f_v`.
#[derive(Debug, Clone)]
struct Projective {
    basis: Vec<Vector>,
    coords: CoordinateMap,
    left: Vec<Matrix>,
}

/// An algebra with a complete set of primitive orthogonal idempotents,
/// one per vertex.
#[derive(Debug, Clone)]
pub struct ProjAlgebra {
    algebra: AssocAlgebra,
    labels: Vec<String>,
    idempotents: Vec<Vector>,
    radical: Span,
    projectives: Vec<Projective>,
    homs: Vec<Vec<Vec<Vector>>>,
    radical_homs: Vec<Vec<Vec<Vector>>>,
    path_algebra: Option<PathAlgebra>,
}

impl ProjAlgebra {
    /// The path algebra of an admissible presentation, with the trivial
    /// paths as idempotents.
    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        let pa = PathAlgebra::new(p)?;
        let a = pa.algebra().clone();
        let n = p.quiver().vertex_count();
        let idempotents = (0..n).map(|v| unit_vec(a.field(), a.dim(), v)).collect();
        let labels = p.quiver().vertices().to_vec();
        let mut out = Self::build(a, idempotents, labels)?;
        out.path_algebra = Some(pa);
        Ok(out)
    }

    /// Any algebra with a radical, together with primitive orthogonal
    /// idempotents summing to 1.
    pub fn from_idempotents(a: AssocAlgebra, idempotents: Vec<Vector>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != idempotents.len() {
            return Err(Error::DimensionMismatch("one label per idempotent is required".into()));
        }
        let mut sum = a.zero();
        for (i, e) in idempotents.iter().enumerate() {
            if e.len() != a.dim() || !a.is_idempotent(e) || is_zero_vec(e) {
                return Err(Error::InvalidAlgebra(format!("element {i} is not a nonzero idempotent")));
            }
            for (j, f) in idempotents.iter().enumerate() {
                if i != j && !is_zero_vec(&a.mul(e, f)) {
                    return Err(Error::InvalidAlgebra(format!("idempotents {i} and {j} are not orthogonal")));
                }
            }
            axpy(&mut sum, &a.field().one(), e);
        }
        if &sum != a.unit() {
            return Err(Error::InvalidAlgebra("idempotents do not sum to 1".into()));
        }
        Self::build(a, idempotents, labels)
    }

    fn build(a: AssocAlgebra, idempotents: Vec<Vector>, labels: Vec<String>) -> Result<Self> {
        let field = a.field().clone();
        let n = a.dim();
        let radical = Span::new(&field, n, &a.radical_basis()?);
        let basis_elems: Vec<Vector> = (0..n).map(|i| a.basis_element(i)).collect();
        let mut projectives = Vec::new();
        for f in &idempotents {
            let gens: Vec<Vector> = basis_elems.iter().map(|b| a.mul(b, f)).collect();
            let basis = Span::new(&field, n, &gens).basis().to_vec();
            let coords = CoordinateMap::new(&field, n, &basis);
            let left = basis_elems
                .iter()
                .map(|b| {
                    let cols: Vec<Vector> = basis
                        .iter()
                        .map(|x| coords.coords(&a.mul(b, x)).expect("A f is a left ideal"))
                        .collect();
                    Matrix::from_columns(&field, basis.len(), &cols)
                })
                .collect();
            projectives.push(Projective { basis, coords, left });
        }
        let corner = |v: usize, w: usize, src: &[Vector]| -> Vec<Vector> {
            let gens: Vec<Vector> = src.iter().map(|b| a.mul3(&idempotents[v], b, &idempotents[w])).collect();
            Span::new(&field, n, &gens).basis().to_vec()
        };
        let m = idempotents.len();
        let mut homs = vec![vec![Vec::new(); m]; m];
        let mut radical_homs = vec![vec![Vec::new(); m]; m];
        for v in 0..m {
            for w in 0..m {
                homs[v][w] = corner(v, w, &basis_elems);
                radical_homs[v][w] = corner(v, w, radical.basis());
            }
        }
        Ok(ProjAlgebra {
            algebra: a,
            labels,
            idempotents,
            radical,
            projectives,
            homs,
            radical_homs,
            path_algebra: None,
        })
    }

    pub fn algebra(&self) -> &AssocAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> &FieldSpec {
        self.algebra.field()
    }

    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn idempotent(&self, v: usize) -> &Vector {
        &self.idempotents[v]
    }

    pub fn path_algebra(&self) -> Option<&PathAlgebra> {
        self.path_algebra.as_ref()
    }

    pub fn radical(&self) -> &Span {
        &self.radical
    }

    pub fn in_radical(&self, x: &[Scalar]) -> bool {
        self.radical.contains(x)
    }

    /// `dim_k A f_v`.
    pub fn projective_dim(&self, v: usize) -> usize {
        self.projectives[v].basis.len()
    }

    /// The largest `dim_k A f_v`.
    pub fn max_projective_dim(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.projective_dim(v)).max().unwrap_or(0)
    }

    pub fn projective_basis(&self, v: usize) -> &[Vector] {
        &self.projectives[v].basis
    }

    /// Coordinates of an element of `A f_v` in its basis.
    pub fn projective_coords(&self, v: usize, x: &[Scalar]) -> Option<Vector> {
        self.projectives[v].coords.coords(x)
    }

    pub fn projective_combine(&self, v: usize, c: &[Scalar]) -> Vector {
        if c.is_empty() {
            return self.algebra.zero();
        }
        self.projectives[v].coords.combine(c)
    }

    /// Matrices of left multiplication by basis elements on `A f_v`.
    pub fn projective_action(&self, v: usize) -> &[Matrix] {
        &self.projectives[v].left
    }

    /// Basis of `f_v A f_w = Hom(A f_v, A f_w)`.
    pub fn hom_basis(&self, v: usize, w: usize) -> &[Vector] {
        &self.homs[v][w]
    }

    /// Basis of `f_v rad(A) f_w`, the radical morphisms.
    pub fn radical_hom_basis(&self, v: usize, w: usize) -> &[Vector] {
        &self.radical_homs[v][w]
    }

    pub fn is_hom(&self, v: usize, w: usize, h: &[Scalar]) -> bool {
        self.algebra.mul3(&self.idempotents[v], h, &self.idempotents[w]) == h
    }

    /// The k-linear matrix of `x -> x h` from `A f_v` to `A f_w`.
    pub fn hom_matrix(&self, v: usize, w: usize, h: &[Scalar]) -> Matrix {
        let src = &self.projectives[v];
        let tgt = &self.projectives[w];
        let cols: Vec<Vector> = src
            .basis
            .iter()
            .map(|x| tgt.coords.coords(&self.algebra.mul(x, h)).expect("entry lies in f_v A f_w"))
            .collect();
        Matrix::from_columns(self.field(), tgt.basis.len(), &cols)
    }

    /// `g` in `f_w A f_v` with `h g = f_v` and `g h = f_w`, if `h` is an
    /// isomorphism `A f_v -> A f_w`.
    pub fn invert_hom(&self, v: usize, w: usize, h: &[Scalar]) -> Option<Vector> {
        let cands = &self.homs[w][v];
        let n = self.algebra.dim();
        let mut sys = LinearSystem::new(self.field(), cands.len());
        let left: Vec<Vector> = cands.iter().map(|g| self.algebra.mul(h, g)).collect();
        let right: Vec<Vector> = cands.iter().map(|g| self.algebra.mul(g, h)).collect();
        for (prods, target) in [(&left, &self.idempotents[v]), (&right, &self.idempotents[w])] {
            for r in 0..n {
                let coeffs = prods.iter().enumerate().filter(|(_, p)| !p[r].is_zero()).map(|(k, p)| (k, p[r].clone())).collect();
                sys.add_equation(coeffs, target[r].clone());
            }
        }
        let sol = sys.solve()?;
        let mut g = self.algebra.zero();
        for (c, b) in sol.particular.iter().zip(cands) {
            axpy(&mut g, c, b);
        }
        Some(g)
    }

    /// Parses `{"path": coefficient, ...}` into an algebra element; needs
    /// a presentation.
    pub fn parse_element(&self, map: &serde_json::Map<String, serde_json::Value>) -> Result<Vector> {
        let pa = self
            .path_algebra
            .as_ref()
            .ok_or_else(|| Error::Parse("path notation needs an algebra given by a presentation".into()))?;
        let q = pa.presentation().quiver();
        let mut out = self.algebra.zero();
        for (path, coeff) in map {
            let c = match coeff {
                serde_json::Value::String(s) => self.field().parse_scalar(s)?,
                serde_json::Value::Number(x) => self.field().parse_scalar(&x.to_string())?,
                other => return Err(Error::Parse(format!("coefficient {other} is not a number"))),
            };
            let p = parse_path(q, path)?;
            axpy(&mut out, &c, &pa.reduce_path(&p));
        }
        Ok(out)
    }

    /// An element as `{"path": "coefficient"}` (basis labels when no
    /// presentation is attached).
    pub fn element_to_json(&self, x: &[Scalar]) -> serde_json::Value {
        let labels: Vec<String> = match (&self.path_algebra, self.algebra.labels()) {
            (Some(pa), _) => pa.basis().iter().map(|p| p.display(pa.presentation().quiver())).collect(),
            (None, Some(l)) => l.clone(),
            (None, None) => (0..x.len()).map(|i| format!("b{i}")).collect(),
        };
        let mut map = serde_json::Map::new();
        for (c, l) in x.iter().zip(labels) {
            if !c.is_zero() {
                map.insert(l, serde_json::Value::String(c.to_string()));
            }
        }
        serde_json::Value::Object(map)
    }
}

/// A finitely supported vector of natural numbers indexed by degrees.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(BTreeMap<i64, usize>);

impl DimVector {
    pub fn zero() -> Self {
        DimVector(BTreeMap::new())
    }

    pub fn delta(degree: i64, value: usize) -> Self {
        let mut d = DimVector::zero();
        d.set(degree, value);
        d
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        let mut d = DimVector::zero();
        for &(i, n) in pairs {
            d.set(i, d.get(i) + n);
        }
        d
    }

    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn set(&mut self, degree: i64, value: usize) {
        if value == 0 {
            self.0.remove(&degree);
        } else {
            self.0.insert(degree, value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest and largest degree with a nonzero entry.
    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.0.keys().next()?, *self.0.keys().next_back()?))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&i, &n)| (i, n))
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        let mut out = self.clone();
        for (i, n) in other.iter() {
            out.set(i, out.get(i) + n);
        }
        out
    }

    pub fn scale(&self, k: usize) -> DimVector {
        let mut out = DimVector::zero();
        for (i, n) in self.iter() {
            out.set(i, n * k);
        }
        out
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.iter().all(|(i, n)| n <= other.get(i))
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(i, n)| format!("{i}:{n}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A differential as `[row][column]` entries.
pub type Differential = Vec<Vec<Vector>>;

/// A bounded complex of projectives `... -> X^i -> X^{i+1} -> ...`.
#[derive(Debug, Clone)]
pub struct ProjComplex {
    base: Arc<ProjAlgebra>,
    lo: i64,
    terms: Vec<Vec<usize>>,
    diffs: Vec<Differential>,
}

impl PartialEq for ProjComplex {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.base, &other.base)
            && self.terms == other.terms
            && self.diffs == other.diffs
            && (self.terms.is_empty() || self.lo == other.lo)
    }
}

impl ProjComplex {
    /// `terms[k]` lists the vertices of the summands in degree `lo + k`;
    /// `diffs[k]` maps degree `lo + k` to `lo + k + 1`.
    pub fn new(base: Arc<ProjAlgebra>, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<Differential>) -> Result<Self> {
        let c = ProjComplex { base, lo, terms, diffs };
        c.validate()?;
        Ok(c.normalized())
    }

    pub(crate) fn new_unchecked(base: Arc<ProjAlgebra>, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<Differential>) -> Self {
        ProjComplex { base, lo, terms, diffs }.normalized()
    }

    pub fn zero(base: Arc<ProjAlgebra>) -> Self {
        ProjComplex { base, lo: 0, terms: vec![], diffs: vec![] }
    }

    pub fn stalk(base: Arc<ProjAlgebra>, degree: i64, vertices: Vec<usize>) -> Result<Self> {
        Self::new(base, degree, vec![vertices], vec![])
    }

    fn validate(&self) -> Result<()> {
        let n = self.base.vertex_count();
        let dim = self.base.algebra.dim();
        if self.diffs.len() + 1 != self.terms.len() && !(self.terms.is_empty() && self.diffs.is_empty()) {
            return Err(Error::InvalidComplex(format!(
                "{} terms need {} differentials, got {}",
                self.terms.len(),
                self.terms.len().saturating_sub(1),
                self.diffs.len()
            )));
        }
        for t in &self.terms {
            if let Some(v) = t.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidComplex(format!("vertex index {v} out of range")));
            }
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = (&self.terms[k], &self.terms[k + 1]);
            if d.len() != tgt.len() || d.iter().any(|row| row.len() != src.len()) {
                return Err(Error::InvalidComplex(format!(
                    "differential in degree {} has the wrong shape",
                    self.lo + k as i64
                )));
            }
            for (r, row) in d.iter().enumerate() {
                for (c, h) in row.iter().enumerate() {
                    if h.len() != dim || !self.base.is_hom(src[c], tgt[r], h) {
                        return Err(Error::InvalidComplex(format!(
                            "entry ({r}, {c}) in degree {} is not a map P{} -> P{}",
                            self.lo + k as i64,
                            self.base.labels[src[c]],
                            self.base.labels[tgt[r]]
                        )));
                    }
                }
            }
        }
        if let Some(i) = self.d_squared_failure() {
            return Err(Error::InvalidComplex(format!("d^{} d^{} is not zero", i + 1, i)));
        }
        Ok(())
    }

    /// First degree `i` with `d^{i+1} d^i != 0`.
    fn d_squared_failure(&self) -> Option<i64> {
        let a = &self.base.algebra;
        for k in 0..self.diffs.len().saturating_sub(1) {
            let (d0, d1) = (&self.diffs[k], &self.diffs[k + 1]);
            for row in d1 {
                for c in 0..self.terms[k].len() {
                    let mut acc = a.zero();
                    for (m, e) in row.iter().enumerate() {
                        if !is_zero_vec(e) && !is_zero_vec(&d0[m][c]) {
                            acc = crate::linalg::vec_add(&acc, &a.mul(&d0[m][c], e));
                        }
                    }
                    if !is_zero_vec(&acc) {
                        return Some(self.lo + k as i64);
                    }
                }
            }
        }
        None
    }

    pub fn is_complex(&self) -> bool {
        self.d_squared_failure().is_none()
    }

    /// Drops zero terms at both ends.
    fn normalized(mut self) -> Self {
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn base(&self) -> &Arc<ProjAlgebra> {
        &self.base
    }

    /// Lowest and highest degree with a nonzero term.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.terms.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.terms.len() as i64 - 1))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn index(&self, degree: i64) -> Option<usize> {
        let k = degree - self.lo;
        (k >= 0 && (k as usize) < self.terms.len()).then_some(k as usize)
    }

    /// Vertices of the summands in degree `i`.
    pub fn term(&self, degree: i64) -> &[usize] {
        self.index(degree).map_or(&[], |k| &self.terms[k])
    }

    /// The differential from degree `i` to `i + 1`, if both terms exist.
    pub fn differential(&self, degree: i64) -> Option<&Differential> {
        self.index(degree).and_then(|k| self.diffs.get(k))
    }

    pub fn term_dim(&self, degree: i64) -> usize {
        self.term(degree).iter().map(|&v| self.base.projective_dim(v)).sum()
    }

    /// The k-linear matrix of `d^i`.
    pub fn differential_matrix(&self, degree: i64) -> Matrix {
        let field = self.base.field();
        let (rows, cols) = (self.term_dim(degree + 1), self.term_dim(degree));
        let mut m = Matrix::zeros(field, rows, cols);
        let Some(d) = self.differential(degree) else {
            return m;
        };
        let (src, tgt) = (self.term(degree), self.term(degree + 1));
        let mut r0 = 0;
        for (r, &w) in tgt.iter().enumerate() {
            let mut c0 = 0;
            for (c, &v) in src.iter().enumerate() {
                if !is_zero_vec(&d[r][c]) {
                    let block = self.base.hom_matrix(v, w, &d[r][c]);
                    for i in 0..block.rows() {
                        for j in 0..block.cols() {
                            m.set(r0 + i, c0 + j, block.get(i, j).clone());
                        }
                    }
                }
                c0 += self.base.projective_dim(v);
            }
            r0 += self.base.projective_dim(w);
        }
        m
    }

    pub fn component_dim_vector(&self) -> DimVector {
        let mut d = DimVector::zero();
        if let Some((lo, hi)) = self.support() {
            for i in lo..=hi {
                d.set(i, self.term_dim(i));
            }
        }
        d
    }

    pub fn cohomology_dim_vector(&self) -> DimVector {
        let mut d = DimVector::zero();
        if let Some((lo, hi)) = self.support() {
            let ranks: Vec<usize> = (lo - 1..=hi).map(|i| self.differential_matrix(i).rank()).collect();
            for i in lo..=hi {
                let k = (i - lo) as usize;
                d.set(i, self.term_dim(i) - ranks[k + 1] - ranks[k]);
            }
        }
        d
    }

    /// Every differential entry lies in the radical.
    pub fn is_homotopically_minimal(&self) -> bool {
        self.diffs.iter().flatten().flatten().all(|h| self.base.in_radical(h))
    }

    /// A homotopy-equivalent minimal complex, by repeated cancellation of
    /// a contractible summand `P_v -> P_w` carried by an invertible entry.
    pub fn minimize(&self) -> ProjComplex {
        let mut c = self.clone();
        while let Some((k, r, s, g)) = c.find_unit_entry() {
            c = c.cancel(k, r, s, &g);
            debug_assert!(c.is_complex());
        }
        c
    }

    fn find_unit_entry(&self) -> Option<(usize, usize, usize, Vector)> {
        for (k, d) in self.diffs.iter().enumerate() {
            for (r, row) in d.iter().enumerate() {
                for (s, h) in row.iter().enumerate() {
                    if self.base.in_radical(h) {
                        continue;
                    }
                    let (v, w) = (self.terms[k][s], self.terms[k + 1][r]);
                    if let Some(g) = self.base.invert_hom(v, w, h) {
                        return Some((k, r, s, g));
                    }
                }
            }
        }
        None
    }

    /// Removes summand `s` of degree `lo + k` and summand `t` of degree
    /// `lo + k + 1`, where `d^k[t][s]` has inverse `g`.
    fn cancel(&self, k: usize, t: usize, s: usize, g: &[Scalar]) -> ProjComplex {
        let a = &self.base.algebra;
        let mut terms = self.terms.clone();
        let mut diffs = self.diffs.clone();
        let d = &self.diffs[k];
        let mut new_d = Vec::new();
        for (y, row) in d.iter().enumerate() {
            if y == t {
                continue;
            }
            let b = &row[s];
            let mut new_row = Vec::new();
            for (x, entry) in row.iter().enumerate() {
                if x == s {
                    continue;
                }
                let c = &d[t][x];
                if is_zero_vec(b) || is_zero_vec(c) {
                    new_row.push(entry.clone());
                } else {
                    new_row.push(vec_sub(entry, &a.mul3(c, g, b)));
                }
            }
            new_d.push(new_row);
        }
        diffs[k] = new_d;
        if k > 0 {
            diffs[k - 1].remove(s);
        }
        if k + 1 < diffs.len() {
            for row in diffs[k + 1].iter_mut() {
                row.remove(t);
            }
        }
        terms[k].remove(s);
        terms[k + 1].remove(t);
        ProjComplex::new_unchecked(self.base.clone(), self.lo, terms, diffs)
    }

    /// Keeps the degrees `>= t`.
    pub fn brutal_truncate(&self, t: i64) -> ProjComplex {
        match self.support() {
            None => self.clone(),
            Some((lo, _)) if t <= lo => self.clone(),
            Some((_, hi)) if t > hi => ProjComplex::zero(self.base.clone()),
            Some((lo, _)) => {
                let k = (t - lo) as usize;
                ProjComplex::new_unchecked(
                    self.base.clone(),
                    t,
                    self.terms[k..].to_vec(),
                    self.diffs[k..].to_vec(),
                )
            }
        }
    }

    pub fn direct_sum(&self, other: &ProjComplex) -> Result<ProjComplex> {
        if !Arc::ptr_eq(&self.base, &other.base) {
            return Err(Error::InvalidComplex("summands live over different algebras".into()));
        }
        let (lo, hi) = match (self.support(), other.support()) {
            (None, _) => return Ok(other.clone()),
            (_, None) => return Ok(self.clone()),
            (Some((a, b)), Some((c, d))) => (a.min(c), b.max(d)),
        };
        let zero = self.base.algebra.zero();
        let mut terms = Vec::new();
        for i in lo..=hi {
            let mut t = self.term(i).to_vec();
            t.extend_from_slice(other.term(i));
            terms.push(t);
        }
        let mut diffs = Vec::new();
        for i in lo..hi {
            let (s1, s2) = (self.term(i).len(), other.term(i).len());
            let (t1, t2) = (self.term(i + 1).len(), other.term(i + 1).len());
            let mut d = vec![vec![zero.clone(); s1 + s2]; t1 + t2];
            if let Some(x) = self.differential(i) {
                for r in 0..t1 {
                    for c in 0..s1 {
                        d[r][c] = x[r][c].clone();
                    }
                }
            }
            if let Some(y) = other.differential(i) {
                for r in 0..t2 {
                    for c in 0..s2 {
                        d[t1 + r][s1 + c] = y[r][c].clone();
                    }
                }
            }
            diffs.push(d);
        }
        Ok(ProjComplex::new_unchecked(self.base.clone(), lo, terms, diffs))
    }

    /// Sorted summand vertices per degree; an isomorphism invariant.
    pub fn term_data(&self) -> Vec<(i64, Vec<usize>)> {
        let Some((lo, hi)) = self.support() else {
            return vec![];
        };
        (lo..=hi)
            .map(|i| {
                let mut t = self.term(i).to_vec();
                t.sort_unstable();
                (i, t)
            })
            .collect()
    }

    /// The complex literal: `{"lo", "terms": [[vertex labels]],
    /// "differentials": [[[{"path": "coeff"}]]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<Vec<String>> = self
            .terms
            .iter()
            .map(|t| t.iter().map(|&v| self.base.labels[v].clone()).collect())
            .collect();
        let diffs: Vec<Vec<Vec<serde_json::Value>>> = self
            .diffs
            .iter()
            .map(|d| d.iter().map(|row| row.iter().map(|h| self.base.element_to_json(h)).collect()).collect())
            .collect();
        serde_json::json!({ "lo": self.lo, "terms": terms, "differentials": diffs })
    }

    pub fn from_json(base: Arc<ProjAlgebra>, text: &str) -> Result<ProjComplex> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Literal {
            #[serde(default)]
            lo: i64,
            terms: Vec<Vec<String>>,
            #[serde(default)]
            differentials: Vec<Vec<Vec<serde_json::Map<String, serde_json::Value>>>>,
        }
        let lit: Literal = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let terms: Vec<Vec<usize>> = lit
            .terms
            .iter()
            .map(|t| {
                t.iter()
                    .map(|l| base.vertex_index(l).ok_or_else(|| Error::UnknownVertex(l.clone())))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        let diffs: Vec<Differential> = lit
            .differentials
            .iter()
            .map(|d| {
                d.iter()
                    .map(|row| row.iter().map(|h| base.parse_element(h)).collect::<Result<Vec<Vector>>>())
                    .collect::<Result<Differential>>()
            })
            .collect::<Result<_>>()?;
        let diffs = if diffs.is_empty() && terms.len() > 1 {
            let zero = base.algebra.zero();
            (0..terms.len() - 1)
                .map(|k| vec![vec![zero.clone(); terms[k].len()]; terms[k + 1].len()])
                .collect()
        } else {
            diffs
        };
        ProjComplex::new(base, lit.lo, terms, diffs)
    }

    /// The underlying complex of modules.
    pub fn to_module_complex(&self) -> ModuleComplex {
        let Some((lo, hi)) = self.support() else {
            return ModuleComplex::zero(self.base.clone());
        };
        let terms = (lo..=hi).map(|i| module::sum_of_projectives(&self.base, self.term(i))).collect();
        let diffs = (lo..hi).map(|i| self.differential_matrix(i)).collect();
        ModuleComplex::new_unchecked(self.base.clone(), lo, terms, diffs)
    }
}

pub(crate) fn zero_entries(base: &ProjAlgebra, rows: usize, cols: usize) -> Differential {
    vec![vec![zero_vec(base.field(), base.algebra.dim()); cols]; rows]
}
