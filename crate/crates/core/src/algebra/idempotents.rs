//! Primitive idempotents, blocks and basic algebras.

use serde::Serialize;

use super::{AssocAlgebra, CoordinateMap, Origin, Span};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{axpy, is_zero_vec, vec_add, vec_scale, vec_sub, LinearSystem, Vector};
use crate::poly::Poly;
use crate::seeded_rng;

/// Random elements tried per corner before giving up on splitting it.
pub const DEFAULT_SPLIT_ATTEMPTS: usize = 64;

const MAX_LIFT_STEPS: usize = 64;

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Intertwiner {
    /// Class representative `i` and member `j`.
    pub from: usize,
    pub to: usize,
    /// `x` in `e_i A e_j` and `y` in `e_j A e_i` with `xy = e_i`, `yx = e_j`.
    #[serde(skip)]
    pub x: Vector,
    #[serde(skip)]
    pub y: Vector,
}

#[derive(Debug, Clone)]
pub struct IdempotentDecomposition {
    pub idempotents: Vec<Vector>,
    /// Partition of the indices of `idempotents`; each class sorted, the
    /// first member is its representative.
    pub iso_classes: Vec<Vec<usize>>,
    pub intertwiners: Vec<Intertwiner>,
}

impl IdempotentDecomposition {
    pub fn representatives(&self) -> Vec<usize> {
        self.iso_classes.iter().map(|c| c[0]).collect()
    }

    /// Re-checks `e^2 = e`, orthogonality, completeness and every
    /// intertwiner exactly.
    pub fn verify(&self, a: &AssocAlgebra) -> bool {
        let mut sum = a.zero();
        for (i, e) in self.idempotents.iter().enumerate() {
            if !a.is_idempotent(e) || is_zero_vec(e) {
                return false;
            }
            for (j, f) in self.idempotents.iter().enumerate() {
                if i != j && !is_zero_vec(&a.mul(e, f)) {
                    return false;
                }
            }
            sum = vec_add(&sum, e);
        }
        if &sum != a.unit() {
            return false;
        }
        self.intertwiners.iter().all(|t| {
            let (ei, ej) = (&self.idempotents[t.from], &self.idempotents[t.to]);
            a.mul3(ei, &t.x, ej) == t.x
                && a.mul3(ej, &t.y, ei) == t.y
                && &a.mul(&t.x, &t.y) == ei
                && &a.mul(&t.y, &t.x) == ej
        })
    }
}

/// Splits the corner `f A f` of `a` along an eigenvalue of `x` in `fAf`.
/// Returns two nonzero orthogonal idempotents summing to `f`.
fn split_by_element(a: &AssocAlgebra, x: &[Scalar], f: &[Scalar]) -> Option<(Vector, Vector)> {
    let field = a.field();
    let m = a.minimal_polynomial(x, f);
    for lambda in m.roots(field) {
        let lin = Poly::linear_root(&lambda, field);
        let mut g = m.clone();
        let mut k = 0;
        loop {
            let (quo, rem) = g.divrem(&lin, field);
            if !rem.is_zero() {
                break;
            }
            g = quo;
            k += 1;
        }
        if g.degree() == Some(0) {
            continue;
        }
        let (gcd, _s, t) = lin.pow(k, field).ext_gcd(&g, field);
        if gcd.degree() != Some(0) {
            continue;
        }
        let e1 = a.eval_poly(&t.mul(&g, field), x, f);
        let e2 = vec_sub(f, &e1);
        if is_zero_vec(&e1) || is_zero_vec(&e2) || !a.is_idempotent(&e1) {
            continue;
        }
        return Some((e1, e2));
    }
    None
}

/// How a corner that cannot be split is treated.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Unsplittable {
    /// Only one-dimensional corners are primitive.
    Error,
    /// Commutative corners that are fields are accepted (blocks).
    AllowField,
}

/// Primitive orthogonal idempotents of a semisimple algebra `s`.
fn split_semisimple(
    s: &AssocAlgebra,
    seed: u64,
    attempts: usize,
    mode: Unsplittable,
) -> Result<Vec<Vector>> {
    let field = s.field().clone();
    let mut rng = seeded_rng(seed);
    let mut todo = vec![s.unit().clone()];
    let mut done = Vec::new();
    if is_zero_vec(s.unit()) {
        return Ok(done);
    }
    while let Some(f) = todo.pop() {
        let spanning: Vec<Vector> = (0..s.dim()).map(|i| s.mul3(&f, &s.basis_element(i), &f)).collect();
        let corner = Span::new(&field, s.dim(), &spanning);
        if corner.dim() == 1 {
            done.push(f);
            continue;
        }
        let mut pieces = None;
        for b in corner.basis() {
            pieces = split_by_element(s, b, &f);
            if pieces.is_some() {
                break;
            }
        }
        if pieces.is_none() {
            for _ in 0..attempts {
                let mut x = s.zero();
                for b in corner.basis() {
                    axpy(&mut x, &field.random(&mut rng, 3), b);
                }
                pieces = split_by_element(s, &x, &f);
                if pieces.is_some() {
                    break;
                }
            }
        }
        match pieces {
            Some((e1, e2)) => {
                todo.push(e2);
                todo.push(e1);
            }
            None => {
                if mode == Unsplittable::AllowField && is_field_corner(s, &corner, &f) {
                    done.push(f);
                } else {
                    return Err(match mode {
                        Unsplittable::Error => Error::NonSplitSemisimpleQuotient(format!(
                            "a simple component of dimension {} over {} has no primitive idempotent defined over the field",
                            corner.dim(),
                            field
                        )),
                        Unsplittable::AllowField => Error::CenterNotSplit(format!(
                            "a component of the center of dimension {} could not be split or certified as a field",
                            corner.dim()
                        )),
                    });
                }
            }
        }
    }
    done.sort_by(|x, y| leading_key(x).cmp(&leading_key(y)));
    Ok(done)
}

fn leading_key(v: &[Scalar]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX)
}

/// A commutative corner is certified to be a field when some basis element
/// generates it with a minimal polynomial of degree at most 3 without roots.
fn is_field_corner(s: &AssocAlgebra, corner: &Span, f: &[Scalar]) -> bool {
    let d = corner.dim();
    if d > 3 {
        return false;
    }
    corner.basis().iter().any(|b| {
        let m = s.minimal_polynomial(b, f);
        m.degree() == Some(d) && m.roots(s.field()).is_empty()
    })
}

/// Lifts an idempotent modulo a nilpotent ideal by `e -> 3e^2 - 2e^3`,
/// inside the corner with unit `f`.
fn lift_idempotent(a: &AssocAlgebra, x: &[Scalar], f: &[Scalar]) -> Result<Vector> {
    let field = a.field();
    let mut e = a.mul3(f, x, f);
    let (three, two) = (field.from_i64(3), field.from_i64(2));
    for _ in 0..MAX_LIFT_STEPS {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        e = vec_sub(&vec_scale(&e2, &three), &vec_scale(&e3, &two));
    }
    Err(Error::InvalidAlgebra(
        "idempotent lifting did not converge; the radical is not nilpotent".into(),
    ))
}

/// A complete set of primitive orthogonal idempotents, grouped into
/// isomorphism classes with certificates.
pub fn lift_idempotents(a: &AssocAlgebra, seed: u64) -> Result<IdempotentDecomposition> {
    let rad = a.radical_basis()?;
    let quot = a.quotient(&rad);
    let abar = &quot.algebra;
    let bars = split_semisimple(abar, seed, DEFAULT_SPLIT_ATTEMPTS, Unsplittable::Error)?;

    let mut idempotents = Vec::with_capacity(bars.len());
    let mut f = a.unit().clone();
    for (i, ebar) in bars.iter().enumerate() {
        let e = if i + 1 == bars.len() {
            f.clone()
        } else {
            lift_idempotent(a, &quot.lift(ebar), &f)?
        };
        f = vec_sub(&f, &e);
        idempotents.push(e);
    }

    // e_i ~ e_j iff e_i Abar e_j != 0.
    let n = bars.len();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut iso_classes: Vec<Vec<usize>> = Vec::new();
    let mut intertwiners = Vec::new();
    for i in 0..n {
        if class_of[i].is_some() {
            continue;
        }
        let c = iso_classes.len();
        class_of[i] = Some(c);
        let mut members = vec![i];
        for j in i + 1..n {
            if class_of[j].is_some() {
                continue;
            }
            if let Some(u) = (0..abar.dim())
                .map(|k| abar.mul3(&bars[i], &abar.basis_element(k), &bars[j]))
                .find(|u| !is_zero_vec(u))
            {
                let t = intertwiner(a, &quot, abar, &idempotents, &bars, i, j, &u)?;
                intertwiners.push(t);
                class_of[j] = Some(c);
                members.push(j);
            }
        }
        iso_classes.push(members);
    }
    let d = IdempotentDecomposition {
        idempotents,
        iso_classes,
        intertwiners,
    };
    debug_assert!(d.verify(a));
    Ok(d)
}

#[allow(clippy::too_many_arguments)]
fn intertwiner(
    a: &AssocAlgebra,
    quot: &super::Quotient,
    abar: &AssocAlgebra,
    idem: &[Vector],
    bars: &[Vector],
    i: usize,
    j: usize,
    u: &[Scalar],
) -> Result<Intertwiner> {
    let field = abar.field();
    // Find v in e_j Abar e_i with u v = e_i.
    let spanning: Vec<Vector> = (0..abar.dim())
        .map(|k| abar.mul3(&bars[j], &abar.basis_element(k), &bars[i]))
        .collect();
    let cand = Span::new(field, abar.dim(), &spanning);
    let mut sys = LinearSystem::new(field, cand.dim());
    let images: Vec<Vector> = cand.basis().iter().map(|b| abar.mul(u, b)).collect();
    for r in 0..abar.dim() {
        let coeffs = images
            .iter()
            .enumerate()
            .filter(|(_, im)| !im[r].is_zero())
            .map(|(k, im)| (k, im[r].clone()))
            .collect();
        sys.add_equation(coeffs, bars[i][r].clone());
    }
    let sol = sys
        .solve()
        .ok_or_else(|| Error::NonSplitSemisimpleQuotient("no matrix-unit pair between idempotents".into()))?;
    let mut v = abar.zero();
    for (c, b) in sol.particular.iter().zip(cand.basis()) {
        axpy(&mut v, c, b);
    }
    let (ei, ej) = (&idem[i], &idem[j]);
    let x = a.mul3(ei, &quot.lift(u), ej);
    let y0 = a.mul3(ej, &quot.lift(&v), ei);
    let w = a
        .corner_inverse(&a.mul(&x, &y0), ei)
        .ok_or_else(|| Error::InvalidAlgebra("intertwiner is not invertible modulo the radical".into()))?;
    let y = a.mul(&y0, &w);
    if &a.mul(&x, &y) != ei || &a.mul(&y, &x) != ej {
        return Err(Error::InvalidAlgebra("intertwiner certificate failed to verify".into()));
    }
    Ok(Intertwiner { from: i, to: j, x, y })
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub central_idempotents: Vec<Vector>,
    /// The block algebras `cAc`.
    pub blocks: Vec<AssocAlgebra>,
    /// For each block, its basis inside `A`.
    pub embeddings: Vec<Vec<Vector>>,
}

impl BlockDecomposition {
    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.dim()).collect()
    }
}

/// Intersection of two subspaces.
pub(crate) fn intersect(field: &FieldSpec, width: usize, u: &[Vector], v: &[Vector]) -> Vec<Vector> {
    let u = Span::new(field, width, u).basis().to_vec();
    let v = Span::new(field, width, v).basis().to_vec();
    let n = u.len() + v.len();
    let mut sys = LinearSystem::new(field, n);
    for r in 0..width {
        let mut coeffs = Vec::new();
        for (k, x) in u.iter().enumerate() {
            if !x[r].is_zero() {
                coeffs.push((k, x[r].clone()));
            }
        }
        for (k, x) in v.iter().enumerate() {
            if !x[r].is_zero() {
                coeffs.push((u.len() + k, -&x[r]));
            }
        }
        sys.add_equation(coeffs, field.zero());
    }
    let kernel = sys.solve().map(|s| s.kernel_basis).unwrap_or_default();
    kernel
        .iter()
        .map(|k| {
            let mut out = crate::linalg::zero_vec(field, width);
            for (c, x) in k.iter().zip(&u) {
                axpy(&mut out, c, x);
            }
            out
        })
        .collect()
}

/// Central primitive idempotents and the corresponding blocks.
pub fn block_decomposition(a: &AssocAlgebra, seed: u64) -> Result<BlockDecomposition> {
    let field = a.field().clone();
    let center = a.center();
    let rad = a.radical_basis()?;
    let zrad = intersect(&field, a.dim(), &center, &rad);
    let zmap = CoordinateMap::new(&field, a.dim(), &center);
    let zalg = a.subalgebra(&center, a.unit(), Origin::Corner)?;
    let zrad_coords: Vec<Vector> = zrad.iter().map(|x| zmap.coords(x).expect("in center")).collect();
    let zquot = zalg.quotient(&zrad_coords);
    let bars = split_semisimple(&zquot.algebra, seed, DEFAULT_SPLIT_ATTEMPTS, Unsplittable::AllowField)?;
    let mut central = Vec::new();
    for b in &bars {
        let lifted = zmap.combine(&zquot.lift(b));
        central.push(lift_idempotent(a, &lifted, a.unit())?);
    }
    let mut sum = a.zero();
    for c in &central {
        sum = vec_add(&sum, c);
    }
    if &sum != a.unit() {
        return Err(Error::InvalidAlgebra("lifted central idempotents do not sum to 1".into()));
    }
    let mut blocks = Vec::new();
    let mut embeddings = Vec::new();
    for c in &central {
        let (b, basis) = a.corner(c)?;
        blocks.push(b);
        embeddings.push(basis);
    }
    Ok(BlockDecomposition {
        central_idempotents: central,
        blocks,
        embeddings,
    })
}

#[derive(Debug, Clone)]
pub struct BasicReduction {
    pub algebra: AssocAlgebra,
    /// Size of each isomorphism class, in class order.
    pub multiplicities: Vec<usize>,
    /// `e`, the sum of one idempotent per class.
    pub idempotent: Vector,
    /// Basis of `eAe` inside `A`.
    pub embedding: Vec<Vector>,
    /// The chosen idempotents in the coordinates of the basic algebra.
    pub vertex_idempotents: Vec<Vector>,
}

/// `eAe` for `e` a sum of one primitive idempotent per isomorphism class.
pub fn basic_reduction(a: &AssocAlgebra, seed: u64) -> Result<BasicReduction> {
    let d = lift_idempotents(a, seed)?;
    let reps = d.representatives();
    let mut e = a.zero();
    for &r in &reps {
        e = vec_add(&e, &d.idempotents[r]);
    }
    let (alg, embedding) = a.corner(&e)?;
    let coords = CoordinateMap::new(a.field(), a.dim(), &embedding);
    let vertex_idempotents = reps
        .iter()
        .map(|&r| coords.coords(&d.idempotents[r]).expect("idempotent lies in its corner"))
        .collect();
    Ok(BasicReduction {
        algebra: alg,
        multiplicities: d.iso_classes.iter().map(|c| c.len()).collect(),
        idempotent: e,
        embedding,
        vertex_idempotents,
    })
}

#[cfg(test)]
mod tests {
    use super::super::test_algebras::*;
    use super::*;
    use crate::quiver::{parse_presentation, path_basis_algebra};

    fn diamond_ba() -> AssocAlgebra {
        path_basis_algebra(
            &parse_presentation(
                "field Q\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrelations\nb*a\nend\n",
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_paths_are_the_primitive_idempotents() {
        let a = diamond_ba();
        let d = lift_idempotents(&a, 0).unwrap();
        assert_eq!(d.idempotents.len(), 4);
        assert_eq!(d.iso_classes.len(), 4);
        for v in 0..4 {
            assert_eq!(d.idempotents[v], a.basis_element(v));
        }
        assert!(d.verify(&a));
    }

    #[test]
    fn group_algebra_splits() {
        let q = FieldSpec::Rationals;
        let a = group_algebra_z2(&q);
        let d = lift_idempotents(&a, 0).unwrap();
        let half = q.parse_scalar("1/2").unwrap();
        let mut got = d.idempotents.clone();
        got.sort_by_key(|v| v[1].to_string());
        assert_eq!(got, vec![vec![half.clone(), -&half], vec![half.clone(), half.clone()]]);
        assert_eq!(d.iso_classes.len(), 2);
    }

    #[test]
    fn matrix_algebra_one_class() {
        let q = FieldSpec::Rationals;
        let m = matrix_algebra(&q, 2);
        let d = lift_idempotents(&m, 0).unwrap();
        assert_eq!(d.idempotents.len(), 2);
        assert_eq!(d.iso_classes, vec![vec![0, 1]]);
        assert!(d.verify(&m));
        let b = basic_reduction(&m, 0).unwrap();
        assert_eq!(b.algebra.dim(), 1);
        assert_eq!(b.multiplicities, vec![2]);
    }

    #[test]
    fn non_split_quotient_reported() {
        // Q(sqrt 2) as a 2-dimensional Q-algebra: basis 1, x with x^2 = 2.
        let q = FieldSpec::Rationals;
        let a = AssocAlgebra::from_fn(&q, 2, crate::linalg::unit_vec(&q, 2, 0), Origin::Manual, |i, j| {
            match (i, j) {
                (0, k) | (k, 0) => crate::linalg::unit_vec(&q, 2, k),
                _ => vec![q.from_i64(2), q.zero()],
            }
        });
        assert_eq!(lift_idempotents(&a, 0).unwrap_err().name(), "NonSplitSemisimpleQuotient");
        // but it is a single block
        let b = block_decomposition(&a, 0).unwrap();
        assert_eq!(b.block_dims(), vec![2]);
    }

    #[test]
    fn blocks() {
        let q = FieldSpec::Rationals;
        assert_eq!(block_decomposition(&diamond_ba(), 0).unwrap().block_dims(), vec![9]);
        let mut dims = block_decomposition(&group_algebra_z2(&q), 0).unwrap().block_dims();
        dims.sort();
        assert_eq!(dims, vec![1, 1]);
        let prod = diamond_ba().direct_product(&AssocAlgebra::from_fn(
            &q,
            1,
            vec![q.one()],
            Origin::Manual,
            |_, _| vec![q.one()],
        ).with_radical(vec![]))
        .unwrap();
        let mut dims = block_decomposition(&prod, 0).unwrap().block_dims();
        dims.sort();
        assert_eq!(dims, vec![1, 9]);
    }

    #[test]
    fn presented_algebra_is_basic() {
        let a = diamond_ba();
        let b = basic_reduction(&a, 0).unwrap();
        assert_eq!(b.algebra.dim(), 9);
        assert_eq!(b.multiplicities, vec![1, 1, 1, 1]);
    }
}
