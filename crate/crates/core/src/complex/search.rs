//! Isomorphism search for complexes and modules, the truncated-resolution
//! roundtrip check, the finite-field enumeration sampler and random
//! complexes.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use super::{minimal_proj_resolution, zero_entries, DimVector, Differential, ProjAlgebra, ProjComplex};
use crate::algebra::LeftModule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{axpy, Matrix, Vector};
use crate::seeded_rng;

/// Default number of candidates the sampler and exhaustive searches may
/// visit.
pub const DEFAULT_SAMPLER_BUDGET: u64 = 1 << 20;

/// Random trials when exhaustion is not possible.
const RANDOM_ATTEMPTS: usize = 64;

pub const FINITE_FIELD_CAVEAT: &str = "Finite-field enumeration is evidence only: derived-discreteness is \
defined over an infinite field, and a finite count over F_p neither proves nor refutes it.";

/// Result of an isomorphism search. `NotIsomorphic` is exact; `NotShown`
/// means the randomized search found no isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(Vec<Matrix>),
    NotIsomorphic(String),
    NotShown(usize),
}

impl IsoOutcome {
    pub fn as_option(&self) -> Option<bool> {
        match self {
            IsoOutcome::Isomorphic(_) => Some(true),
            IsoOutcome::NotIsomorphic(_) => Some(false),
            IsoOutcome::NotShown(_) => None,
        }
    }
}

/// Searches `span(basis)` for an element whose matrices are all
/// invertible: exhaustively over a small finite field, otherwise by
/// seeded random combinations.
fn search_invertible(
    field: &crate::field::FieldSpec,
    basis: &[Vec<Matrix>],
    seed: u64,
    budget: u64,
) -> IsoOutcome {
    let r = basis.len();
    let combine = |coeffs: &[Scalar]| -> Vec<Matrix> {
        let parts = basis[0].len();
        (0..parts)
            .map(|d| {
                let mut m = Matrix::zeros(field, basis[0][d].rows(), basis[0][d].cols());
                for (c, b) in coeffs.iter().zip(basis) {
                    if !c.is_zero() {
                        m = m.add(&b[d].scale(c));
                    }
                }
                m
            })
            .collect()
    };
    let good = |ms: &[Matrix]| ms.iter().all(|m| m.is_invertible());
    if let Some(elements) = field.elements() {
        let p = elements.len() as u64;
        let total = (r as u32 <= 64).then(|| p.checked_pow(r as u32)).flatten();
        if let Some(total) = total.filter(|&t| t <= budget) {
            let mut digits = vec![0usize; r];
            for _ in 0..total {
                let coeffs: Vec<Scalar> = digits.iter().map(|&d| elements[d].clone()).collect();
                let ms = combine(&coeffs);
                if good(&ms) {
                    return IsoOutcome::Isomorphic(ms);
                }
                for d in digits.iter_mut() {
                    *d += 1;
                    if *d < elements.len() {
                        break;
                    }
                    *d = 0;
                }
            }
            return IsoOutcome::NotIsomorphic(format!("exhaustive search over {total} candidates"));
        }
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let coeffs: Vec<Scalar> = (0..r).map(|_| field.random(&mut rng, 1 << 20)).collect();
        let ms = combine(&coeffs);
        if good(&ms) {
            return IsoOutcome::Isomorphic(ms);
        }
    }
    IsoOutcome::NotShown(RANDOM_ATTEMPTS)
}

/// A basis of the chain maps `x -> y` on the union of the supports, each
/// given degreewise by k-linear matrices from `lo` upward.
pub fn chain_map_space(x: &ProjComplex, y: &ProjComplex) -> Result<(i64, Vec<Vec<Matrix>>)> {
    if !Arc::ptr_eq(x.base(), y.base()) {
        return Err(Error::InvalidComplex("complexes live over different algebras".into()));
    }
    let base = x.base();
    let field = base.field();
    let (lo, hi) = match (x.support(), y.support()) {
        (None, None) => return Ok((0, vec![])),
        (Some(s), None) | (None, Some(s)) => s,
        (Some((a, b)), Some((c, d))) => (a.min(c), b.max(d)),
    };
    // Elementary maps: one hom basis element in one block position.
    let mut units: Vec<(usize, Matrix)> = Vec::new();
    for i in lo..=hi {
        let (src, tgt) = (x.term(i), y.term(i));
        let mut r0 = 0;
        for &w in tgt {
            let mut c0 = 0;
            for &v in src {
                for h in base.hom_basis(v, w) {
                    let block = base.hom_matrix(v, w, h);
                    let mut m = Matrix::zeros(field, y.term_dim(i), x.term_dim(i));
                    for a in 0..block.rows() {
                        for b in 0..block.cols() {
                            m.set(r0 + a, c0 + b, block.get(a, b).clone());
                        }
                    }
                    units.push(((i - lo) as usize, m));
                }
                c0 += base.projective_dim(v);
            }
            r0 += base.projective_dim(w);
        }
    }
    let dx: Vec<Matrix> = (lo..=hi).map(|i| x.differential_matrix(i)).collect();
    let dy: Vec<Matrix> = (lo..=hi).map(|i| y.differential_matrix(i)).collect();
    // Equation k: F^{k+1} dx^k - dy^k F^k = 0, flattened.
    let sizes: Vec<usize> = (0..(hi - lo) as usize).map(|k| dy[k].rows() * dx[k].cols()).collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let total: usize = sizes.iter().sum();
    let mut columns = Vec::new();
    for (k, m) in &units {
        let mut col = vec![field.zero(); total];
        let mut put = |eq: usize, mat: &Matrix, sign: bool| {
            let cols = mat.cols();
            for a in 0..mat.rows() {
                for b in 0..cols {
                    let v = mat.get(a, b);
                    if !v.is_zero() {
                        let idx = offsets[eq] + a * cols + b;
                        col[idx] = if sign { &col[idx] + v } else { &col[idx] - v };
                    }
                }
            }
        };
        if *k < sizes.len() {
            put(*k, &dy[*k].mul(m), false);
        }
        if *k > 0 {
            put(k - 1, &m.mul(&dx[k - 1]), true);
        }
        columns.push(col);
    }
    let kernel = if total == 0 {
        (0..units.len()).map(|i| crate::linalg::unit_vec(field, units.len(), i)).collect()
    } else {
        Matrix::from_columns(field, total, &columns).kernel()
    };
    let degrees = (hi - lo + 1) as usize;
    let basis = kernel
        .iter()
        .map(|c| {
            let mut ms: Vec<Matrix> = (lo..=hi).map(|i| Matrix::zeros(field, y.term_dim(i), x.term_dim(i))).collect();
            for (coef, (k, m)) in c.iter().zip(&units) {
                if !coef.is_zero() {
                    ms[*k] = ms[*k].add(&m.scale(coef));
                }
            }
            debug_assert_eq!(ms.len(), degrees);
            ms
        })
        .collect();
    Ok((lo, basis))
}

/// Searches for an isomorphism of complexes. For minimal complexes this
/// decides homotopy equivalence, and differing term data is an exact
/// negative.
pub fn iso_search(x: &ProjComplex, y: &ProjComplex, seed: u64, budget: u64) -> Result<IsoOutcome> {
    if x.term_data() != y.term_data() {
        if !Arc::ptr_eq(x.base(), y.base()) {
            return Err(Error::InvalidComplex("complexes live over different algebras".into()));
        }
        return Ok(IsoOutcome::NotIsomorphic("term data differ".into()));
    }
    let (_, basis) = chain_map_space(x, y)?;
    if x.is_zero() {
        return Ok(IsoOutcome::Isomorphic(vec![]));
    }
    if basis.is_empty() {
        return Ok(IsoOutcome::NotIsomorphic("only the zero chain map exists".into()));
    }
    Ok(search_invertible(x.base().field(), &basis, seed, budget))
}

/// A basis of `Hom_A(x, y)` as k-linear matrices.
pub fn module_hom_space(base: &ProjAlgebra, x: &LeftModule, y: &LeftModule) -> Vec<Matrix> {
    let field = base.field();
    let (n, m) = (x.dim, y.dim);
    if n == 0 || m == 0 {
        return if n == 0 && m == 0 { vec![] } else { vec![] };
    }
    // Unknown T[r][k] at index r * n + k; T X_i - Y_i T = 0.
    let mut rows = Vec::new();
    for (ax, ay) in x.action.iter().zip(&y.action) {
        for r in 0..m {
            for c in 0..n {
                let mut row = vec![field.zero(); m * n];
                for k in 0..n {
                    let v = ax.get(k, c);
                    if !v.is_zero() {
                        row[r * n + k] = &row[r * n + k] + v;
                    }
                }
                for k in 0..m {
                    let v = ay.get(r, k);
                    if !v.is_zero() {
                        row[k * n + c] = &row[k * n + c] - v;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..m * n).map(|i| crate::linalg::unit_vec(field, m * n, i)).collect()
    } else {
        Matrix::from_rows(field, rows).kernel()
    };
    kernel
        .iter()
        .map(|t| Matrix::from_rows(field, (0..m).map(|r| t[r * n..(r + 1) * n].to_vec()).collect()))
        .collect()
}

/// Searches for a module isomorphism `x -> y`.
pub fn module_iso_search(base: &ProjAlgebra, x: &LeftModule, y: &LeftModule, seed: u64, budget: u64) -> IsoOutcome {
    if x.dim != y.dim {
        return IsoOutcome::NotIsomorphic("dimensions differ".into());
    }
    let a = base.algebra();
    for v in 0..base.vertex_count() {
        let e = base.idempotent(v);
        if x.act(a, e).rank() != y.act(a, e).rank() {
            return IsoOutcome::NotIsomorphic("dimension vectors differ".into());
        }
    }
    if x.dim == 0 {
        return IsoOutcome::Isomorphic(vec![]);
    }
    let basis: Vec<Vec<Matrix>> = module_hom_space(base, x, y).into_iter().map(|m| vec![m]).collect();
    if basis.is_empty() {
        return IsoOutcome::NotIsomorphic("Hom(x, y) = 0".into());
    }
    search_invertible(base.field(), &basis, seed, budget)
}

/// Outcome of comparing truncated minimal resolutions against module
/// isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RoundtripReport {
    pub truncation: i64,
    pub depth: usize,
    pub truncations_equivalent: Option<bool>,
    pub modules_isomorphic: Option<bool>,
    /// False only for a counterexample: equivalent truncations of
    /// non-isomorphic modules.
    pub consistent: bool,
}

/// Resolves both modules to depth `|t| + 2`, truncates brutally at `t`
/// and compares the truncations, then checks the modules independently.
pub fn lemma_iso_roundtrip(
    base: &Arc<ProjAlgebra>,
    x: &LeftModule,
    y: &LeftModule,
    t: i64,
    seed: u64,
    budget: u64,
) -> Result<RoundtripReport> {
    if t >= 0 {
        return Err(Error::DepthInsufficient(format!(
            "modules sit in degree 0, so the truncation degree must be negative, got {t}"
        )));
    }
    let depth = t.unsigned_abs() as usize + 2;
    let px = minimal_proj_resolution(base, x, depth)?.complex.brutal_truncate(t);
    let py = minimal_proj_resolution(base, y, depth)?.complex.brutal_truncate(t);
    let truncations_equivalent = iso_search(&px, &py, seed, budget)?.as_option();
    let modules_isomorphic = module_iso_search(base, x, y, seed, budget).as_option();
    Ok(RoundtripReport {
        truncation: t,
        depth,
        truncations_equivalent,
        modules_isomorphic,
        consistent: !(truncations_equivalent == Some(true) && modules_isomorphic == Some(false)),
    })
}

/// Class count and representatives found by [`finiteness_sampler`].
#[derive(Debug, Clone)]
pub struct SamplerReport {
    pub field: String,
    pub component_dims: DimVector,
    pub radical_only: bool,
    pub candidates: u64,
    pub complexes: usize,
    pub class_count: usize,
    pub representatives: Vec<ProjComplex>,
    pub caveat: &'static str,
}

impl SamplerReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field,
            "componentDims": self.component_dims,
            "radicalOnly": self.radical_only,
            "candidates": self.candidates,
            "complexes": self.complexes,
            "classCount": self.class_count,
            "representatives": self.representatives.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "caveat": self.caveat,
        })
    }
}

/// Nondecreasing vertex lists whose projectives have total dimension `n`.
fn term_choices(base: &ProjAlgebra, n: usize) -> Vec<Vec<usize>> {
    fn go(base: &ProjAlgebra, from: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in from..base.vertex_count() {
            let d = base.projective_dim(v);
            if d <= left {
                cur.push(v);
                go(base, v, left - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(base, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Enumerates every complex over `F_p` with component dimension vector
/// `cdim` and groups them into isomorphism classes of complexes.
pub fn finiteness_sampler(base: &Arc<ProjAlgebra>, cdim: &DimVector, radical_only: bool, budget: u64) -> Result<SamplerReport> {
    let field = base.field();
    let elements = field.elements().ok_or(Error::InfiniteFieldUnsupported)?;
    let p = elements.len() as u64;
    let mut report = SamplerReport {
        field: field.descriptor(),
        component_dims: cdim.clone(),
        radical_only,
        candidates: 0,
        complexes: 0,
        class_count: 0,
        representatives: vec![],
        caveat: FINITE_FIELD_CAVEAT,
    };
    let Some((lo, hi)) = cdim.support() else {
        report.candidates = 1;
        report.complexes = 1;
        report.class_count = 1;
        report.representatives.push(ProjComplex::zero(base.clone()));
        return Ok(report);
    };
    let per_degree: Vec<Vec<Vec<usize>>> = (lo..=hi).map(|i| term_choices(base, cdim.get(i))).collect();
    // Every choice of terms, with its elementary differential entries.
    let mut choices: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for opts in &per_degree {
        choices = choices
            .into_iter()
            .flat_map(|c| {
                opts.iter().map(move |o| {
                    let mut c = c.clone();
                    c.push(o.clone());
                    c
                })
            })
            .collect();
    }
    let hom = |v: usize, w: usize| -> &[Vector] {
        if radical_only {
            base.radical_hom_basis(v, w)
        } else {
            base.hom_basis(v, w)
        }
    };
    type Slot = (usize, usize, usize, Vector);
    let slots_of = |terms: &[Vec<usize>]| -> Vec<Slot> {
        let mut slots = Vec::new();
        for k in 0..terms.len().saturating_sub(1) {
            for (r, &w) in terms[k + 1].iter().enumerate() {
                for (s, &v) in terms[k].iter().enumerate() {
                    for h in hom(v, w) {
                        slots.push((k, r, s, h.clone()));
                    }
                }
            }
        }
        slots
    };
    let mut total: u64 = 0;
    for terms in &choices {
        let u = slots_of(terms).len() as u32;
        let count = p.checked_pow(u).ok_or_else(|| Error::BudgetExceeded(format!("{p}^{u} candidates")))?;
        total = total.saturating_add(count);
        if total > budget {
            return Err(Error::BudgetExceeded(format!("more than {budget} candidate differentials")));
        }
    }
    report.candidates = total;
    let mut seen = 0usize;
    for (ci, terms) in choices.iter().enumerate() {
        let slots = slots_of(terms);
        let count = p.pow(slots.len() as u32);
        let mut buckets: BTreeMap<Vec<usize>, Vec<ProjComplex>> = BTreeMap::new();
        let mut digits = vec![0usize; slots.len()];
        for _ in 0..count {
            let mut diffs: Vec<Differential> = (0..terms.len() - 1)
                .map(|k| zero_entries(base, terms[k + 1].len(), terms[k].len()))
                .collect();
            for ((k, r, s, h), &d) in slots.iter().zip(&digits) {
                if d != 0 {
                    axpy(&mut diffs[*k][*r][*s], &elements[d], h);
                }
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < elements.len() {
                    break;
                }
                *d = 0;
            }
            let c = ProjComplex {
                base: base.clone(),
                lo,
                terms: terms.clone(),
                diffs,
            };
            if !c.is_complex() {
                continue;
            }
            seen += 1;
            let key: Vec<usize> = (lo..hi).map(|i| c.differential_matrix(i).rank()).collect();
            let reps = buckets.entry(key).or_default();
            let mut matched = false;
            for rep in reps.iter() {
                match iso_search(rep, &c, ci as u64, budget)? {
                    IsoOutcome::Isomorphic(_) => {
                        matched = true;
                        break;
                    }
                    IsoOutcome::NotIsomorphic(_) => {}
                    IsoOutcome::NotShown(_) => {
                        return Err(Error::BudgetExceeded("chain-map space too large to exhaust".into()));
                    }
                }
            }
            if !matched {
                reps.push(c);
            }
        }
        for reps in buckets.into_values() {
            report.representatives.extend(reps);
        }
    }
    report.complexes = seen;
    report.class_count = report.representatives.len();
    Ok(report)
}

/// A random complex with the given terms: each differential is a random
/// element of the space of maps killing the previous one. Entries may be
/// invertible, so the result is usually not minimal.
pub fn random_complex<R: Rng>(base: &Arc<ProjAlgebra>, lo: i64, terms: Vec<Vec<usize>>, rng: &mut R, spread: i64) -> ProjComplex {
    let field = base.field();
    let a = base.algebra();
    let mut diffs: Vec<Differential> = Vec::new();
    for k in 0..terms.len().saturating_sub(1) {
        let (src, tgt) = (&terms[k], &terms[k + 1]);
        let mut unknowns: Vec<(usize, usize, &Vector)> = Vec::new();
        for (r, &w) in tgt.iter().enumerate() {
            for (s, &v) in src.iter().enumerate() {
                for h in base.hom_basis(v, w) {
                    unknowns.push((r, s, h));
                }
            }
        }
        let coeff_space: Vec<Vector> = match diffs.last() {
            None => (0..unknowns.len()).map(|i| crate::linalg::unit_vec(field, unknowns.len(), i)).collect(),
            Some(prev) => {
                let below = prev.first().map_or(0, |row| row.len());
                let n = a.dim();
                let len = tgt.len() * below * n;
                if len == 0 || unknowns.is_empty() {
                    (0..unknowns.len()).map(|i| crate::linalg::unit_vec(field, unknowns.len(), i)).collect()
                } else {
                    let cols: Vec<Vector> = unknowns
                        .iter()
                        .map(|&(r, s, h)| {
                            let mut col = vec![field.zero(); len];
                            for x in 0..below {
                                let prod = a.mul(&prev[s][x], h);
                                let off = (r * below + x) * n;
                                col[off..off + n].clone_from_slice(&prod);
                            }
                            col
                        })
                        .collect();
                    Matrix::from_columns(field, len, &cols).kernel()
                }
            }
        };
        let mut coeffs = vec![field.zero(); unknowns.len()];
        for b in &coeff_space {
            let c = field.random(rng, spread);
            axpy(&mut coeffs, &c, b);
        }
        let mut d = zero_entries(base, tgt.len(), src.len());
        for (c, &(r, s, h)) in coeffs.iter().zip(&unknowns) {
            axpy(&mut d[r][s], c, h);
        }
        diffs.push(d);
    }
    ProjComplex::new(base.clone(), lo, terms, diffs).expect("random differentials compose to zero")
}

#[cfg(test)]
mod tests {
    use super::super::tests::{diamond, el, presented, DIAMOND};
    use super::super::{simple_module, projective_module};
    use super::*;

    #[test]
    fn sampler_rejects_infinite_fields() {
        let b = diamond(&["b*a"]);
        let err = finiteness_sampler(&b, &DimVector::delta(0, 1), false, 1000).unwrap_err();
        assert_eq!(err.name(), "InfiniteFieldUnsupported");
    }

    #[test]
    fn sampler_over_f2_point() {
        let k = presented("F_2", "vertices 1\n", &[]);
        let r = finiteness_sampler(&k, &DimVector::from_pairs(&[(0, 1), (1, 1)]), false, 1000).unwrap();
        assert_eq!(r.complexes, 2);
        assert_eq!(r.class_count, 2);
        let radical = finiteness_sampler(&k, &DimVector::from_pairs(&[(0, 1), (1, 1)]), true, 1000).unwrap();
        assert_eq!(radical.class_count, 1);
    }

    #[test]
    fn sampler_is_deterministic_on_diamond() {
        let b = presented("F_2", DIAMOND, &["b*a"]);
        let n = DimVector::from_pairs(&[(-1, 1), (0, 2)]);
        let r1 = finiteness_sampler(&b, &n, false, 1 << 16).unwrap();
        let r2 = finiteness_sampler(&b, &n, false, 1 << 16).unwrap();
        assert_eq!(r1.class_count, r2.class_count);
        assert!(r1.class_count > 0);
        assert_eq!(r1.to_json(), r2.to_json());
        let small = finiteness_sampler(&b, &n, false, 2);
        assert_eq!(small.unwrap_err().name(), "BudgetExceeded");
    }

    #[test]
    fn iso_search_on_conjugate_complexes() {
        let b = diamond(&["b*a"]);
        let x = ProjComplex::new(b.clone(), 0, vec![vec![3], vec![0]], vec![vec![vec![el(&b, "d*c")]]]).unwrap();
        let two = crate::linalg::vec_scale(&el(&b, "d*c"), &b.field().from_i64(2));
        let y = ProjComplex::new(b.clone(), 0, vec![vec![3], vec![0]], vec![vec![vec![two]]]).unwrap();
        assert!(matches!(iso_search(&x, &y, 0, 1000).unwrap(), IsoOutcome::Isomorphic(_)));
        let z = ProjComplex::new(b.clone(), 0, vec![vec![3], vec![0]], vec![vec![vec![b.algebra().zero()]]]).unwrap();
        assert_eq!(iso_search(&x, &z, 0, 1000).unwrap().as_option(), None);
        let w = ProjComplex::stalk(b, 0, vec![3]).unwrap();
        assert_eq!(iso_search(&x, &w, 0, 1000).unwrap().as_option(), Some(false));
    }

    #[test]
    fn roundtrip_on_simples() {
        let b = diamond(&["b*a"]);
        let (s1, s2) = (simple_module(&b, 0), simple_module(&b, 1));
        let same = lemma_iso_roundtrip(&b, &s1, &s1, -1, 0, 1000).unwrap();
        assert_eq!(same.truncations_equivalent, Some(true));
        assert_eq!(same.modules_isomorphic, Some(true));
        let diff = lemma_iso_roundtrip(&b, &s1, &s2, -1, 0, 1000).unwrap();
        assert_eq!(diff.truncations_equivalent, Some(false));
        assert_eq!(diff.modules_isomorphic, Some(false));
        assert!(diff.consistent);
        // Oracle: Hom(S1, S2) = 0.
        assert!(module_hom_space(&b, &s1, &s2).is_empty());
        assert_eq!(module_hom_space(&b, &s1, &s1).len(), 1);
        let err = lemma_iso_roundtrip(&b, &s1, &s2, 0, 0, 1000).unwrap_err();
        assert_eq!(err.name(), "DepthInsufficient");
    }

    #[test]
    fn module_iso_of_projectives() {
        let b = presented("F_3", DIAMOND, &["b*a"]);
        let p = projective_module(&b, 0);
        assert!(matches!(module_iso_search(&b, &p, &p, 0, 1 << 12), IsoOutcome::Isomorphic(_)));
    }

    #[test]
    fn random_complexes_are_complexes() {
        let b = diamond(&["b*a"]);
        let mut rng = seeded_rng(5);
        for _ in 0..10 {
            let c = random_complex(&b, -1, vec![vec![0, 3], vec![1, 2, 0], vec![3, 0]], &mut rng, 2);
            assert!(c.is_complex());
            let m = c.minimize();
            assert!(m.is_homotopically_minimal());
            assert_eq!(m.cohomology_dim_vector(), c.cohomology_dim_vector());
        }
    }
}
