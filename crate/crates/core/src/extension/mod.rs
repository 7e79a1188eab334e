//! Algebra extensions `φ: A -> B`: base change, skew group algebras and
//! quotients, with witnesses for split and separable extensions.

mod action;
mod experiment;
mod witness;

pub use action::GroupAction;
pub use experiment::{
    classify_algebra, piecewise_hereditary, run_consistency_experiment, AlgebraVerdict, BlockVerdict,
    ExperimentMode, ExperimentReport, ImplicationCheck, Outcome,
};
pub use witness::{
    restriction_modules, separability_idempotent, skew_separability_formula, split_witness, verify_separability,
    verify_split, witness_report, SeparabilityCertificate, TensorQuotient, WitnessReport,
};

use serde::Serialize;

use crate::algebra::{AssocAlgebra, Origin};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{to_dense, zero_vec, Matrix, Vector};
use crate::quiver::{PathAlgebra, Presentation, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum ExtensionKind {
    Identity,
    #[serde(rename_all = "camelCase")]
    BaseChange {
        field: String,
        degree: usize,
        /// The modulus has a rational root, so `K` is a product of fields.
        etale_not_field: bool,
    },
    #[serde(rename_all = "camelCase")]
    SkewGroup {
        order: usize,
        order_invertible: bool,
    },
    Quotient,
    Manual,
}

/// A validated unital algebra map. `map` has one column per basis element
/// of the source, holding its image in the target basis.
#[derive(Debug, Clone)]
pub struct ExtensionMorphism {
    source: AssocAlgebra,
    target: AssocAlgebra,
    map: Matrix,
    kind: ExtensionKind,
    source_presentation: Option<Presentation>,
    target_presentation: Option<Presentation>,
    extension_field: Option<FieldSpec>,
}

impl ExtensionMorphism {
    pub fn new(source: AssocAlgebra, target: AssocAlgebra, map: Matrix) -> Result<Self> {
        let m = ExtensionMorphism {
            source,
            target,
            map,
            kind: ExtensionKind::Manual,
            source_presentation: None,
            target_presentation: None,
            extension_field: None,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn identity(a: &AssocAlgebra) -> Self {
        ExtensionMorphism {
            source: a.clone(),
            target: a.clone(),
            map: Matrix::identity(a.field(), a.dim()),
            kind: ExtensionKind::Identity,
            source_presentation: None,
            target_presentation: None,
            extension_field: None,
        }
    }

    pub fn with_source_presentation(mut self, p: Presentation) -> Self {
        self.source_presentation = Some(p);
        self
    }

    /// Checks that the map is unital and multiplicative on basis pairs.
    pub fn validate(&self) -> Result<()> {
        let (a, b) = (&self.source, &self.target);
        if a.field() != b.field() {
            return Err(Error::FieldMismatch("source and target have different fields".into()));
        }
        if self.map.rows() != b.dim() || self.map.cols() != a.dim() {
            return Err(Error::InvalidMorphism(format!(
                "map is {}x{}, expected {}x{}",
                self.map.rows(),
                self.map.cols(),
                b.dim(),
                a.dim()
            )));
        }
        if &self.apply(a.unit()) != b.unit() {
            return Err(Error::InvalidMorphism("the unit is not sent to the unit".into()));
        }
        let images: Vec<Vector> = (0..a.dim()).map(|i| self.map.column(i)).collect();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.apply(&to_dense(a.field(), a.basis_product(i, j), a.dim()));
                if lhs != b.mul(&images[i], &images[j]) {
                    return Err(Error::InvalidMorphism(format!(
                        "map is not multiplicative on basis elements {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &AssocAlgebra {
        &self.source
    }

    pub fn target(&self) -> &AssocAlgebra {
        &self.target
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn kind(&self) -> &ExtensionKind {
        &self.kind
    }

    pub fn source_presentation(&self) -> Option<&Presentation> {
        self.source_presentation.as_ref()
    }

    pub fn target_presentation(&self) -> Option<&Presentation> {
        self.target_presentation.as_ref()
    }

    /// For a base change by a field `K`, the field; the target is then
    /// classified through `A ⊗ K` as a `K`-algebra.
    pub fn extension_field(&self) -> Option<&FieldSpec> {
        self.extension_field.as_ref()
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.map.mul_vec(x)
    }

    /// `φ(a_i)` for the `i`-th basis element of the source.
    pub fn image(&self, i: usize) -> Vector {
        self.map.column(i)
    }

    pub fn is_surjective(&self) -> bool {
        self.map.rank() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.map.rank() == self.source.dim()
    }
}

/// Parses the descriptor of a separable extension of `Q`; a repeated
/// factor in the modulus is reported as `InseparablePolynomial`.
pub fn parse_extension(text: &str) -> Result<FieldSpec> {
    match text.parse::<FieldSpec>() {
        Ok(f @ FieldSpec::NumberField(_)) => Ok(f),
        Ok(_) => Err(Error::MalformedDescriptor(format!(
            "{text} is not of the form Q[x]/(f)"
        ))),
        Err(Error::NotSquarefree(f)) => Err(Error::InseparablePolynomial(f)),
        Err(e) => Err(e),
    }
}

fn algebraic_coeffs(s: &Scalar, degree: usize) -> Vec<Scalar> {
    match s {
        Scalar::Algebraic(c, _) => c.iter().cloned().map(Scalar::Rational).collect(),
        Scalar::Rational(q) => {
            let mut v = vec![Scalar::Rational(q.clone())];
            v.resize(degree, FieldSpec::Rationals.zero());
            v
        }
        Scalar::Residue(..) => unreachable!("number fields are extensions of Q"),
    }
}

/// `A -> A ⊗_Q K` for `K = Q[x]/(f)`, with `A ⊗ K` viewed as a
/// `Q`-algebra with basis `a_i ⊗ x^j` at index `i * deg f + j`.
pub fn base_change(a: &AssocAlgebra, ext: &FieldSpec) -> Result<ExtensionMorphism> {
    let FieldSpec::NumberField(nf) = ext else {
        return Err(Error::FieldMismatch("base change needs a field Q[x]/(f)".into()));
    };
    if a.field() != &FieldSpec::Rationals {
        return Err(Error::FieldMismatch("base change is supported for algebras over Q".into()));
    }
    let q = FieldSpec::Rationals;
    let d = nf.degree();
    let n = a.dim();
    let x = ext.generator().expect("number field has a generator");
    // powers[k] = coefficients of x^k reduced modulo f
    let powers: Vec<Vec<Scalar>> = (0..2 * d).map(|k| algebraic_coeffs(&x.pow(k as u64), d)).collect();
    let dim = n * d;
    let mut unit = zero_vec(&q, dim);
    for (i, c) in a.unit().iter().enumerate() {
        unit[i * d] = c.clone();
    }
    let b = AssocAlgebra::from_fn(&q, dim, unit, Origin::BaseChange, |s, t| {
        let (i, j) = (s / d, s % d);
        let (k, l) = (t / d, t % d);
        let mut out = zero_vec(&q, dim);
        for (m, c) in a.basis_product(i, k) {
            for (r, p) in powers[j + l].iter().enumerate() {
                if !p.is_zero() {
                    out[m * d + r] += &(c * p);
                }
            }
        }
        out
    });
    let radical: Option<Vec<Vector>> = a.designated_radical().map(|rad| {
        rad.iter()
            .flat_map(|r| {
                (0..d).map(move |j| {
                    let mut v = zero_vec(&FieldSpec::Rationals, n * d);
                    for (i, c) in r.iter().enumerate() {
                        v[i * d + j] = c.clone();
                    }
                    v
                })
            })
            .collect()
    });
    let mut b = match radical {
        Some(r) => b.with_radical(r),
        None => b,
    };
    if let Some(labels) = a.labels() {
        let names: Vec<String> = labels
            .iter()
            .flat_map(|l| {
                (0..d).map(move |j| match j {
                    0 => l.clone(),
                    1 => format!("{l}⊗x"),
                    _ => format!("{l}⊗x^{j}"),
                })
            })
            .collect();
        b = b.with_labels(names);
    }
    let cols: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = zero_vec(&q, dim);
            v[i * d] = q.one();
            v
        })
        .collect();
    let map = Matrix::from_columns(&q, dim, &cols);
    let mut m = ExtensionMorphism::new(a.clone(), b, map)?;
    m.kind = ExtensionKind::BaseChange {
        field: ext.descriptor(),
        degree: d,
        etale_not_field: !nf.is_field(),
    };
    if nf.is_field() {
        m.extension_field = Some(ext.clone());
    }
    Ok(m)
}

/// `A -> AG` with basis `a_i ⊗ g` at index `i * |G| + g` and product
/// `(a ⊗ g)(b ⊗ h) = a g(b) ⊗ gh`.
pub fn skew_group_algebra(a: &AssocAlgebra, action: &GroupAction) -> Result<ExtensionMorphism> {
    action.validate(a)?;
    let field = a.field().clone();
    let n = a.dim();
    let m = action.order();
    let dim = n * m;
    let mut unit = zero_vec(&field, dim);
    for (i, c) in a.unit().iter().enumerate() {
        unit[i * m + action.identity()] = c.clone();
    }
    let b = AssocAlgebra::from_fn(&field, dim, unit, Origin::SkewGroup, |s, t| {
        let (i, g) = (s / m, s % m);
        let (k, h) = (t / m, t % m);
        let gk = action.matrix(g).column(k);
        let prod = a.mul(&a.basis_element(i), &gk);
        let gh = action.product(g, h);
        let mut out = zero_vec(&field, dim);
        for (l, c) in prod.into_iter().enumerate() {
            out[l * m + gh] = c;
        }
        out
    });
    let order_invertible = !field.from_i64(m as i64).is_zero();
    let mut b = b;
    if order_invertible {
        if let Some(rad) = a.designated_radical() {
            let r: Vec<Vector> = rad
                .iter()
                .flat_map(|r| {
                    (0..m).map(move |g| {
                        let mut v = zero_vec(a.field(), dim);
                        for (i, c) in r.iter().enumerate() {
                            v[i * m + g] = c.clone();
                        }
                        v
                    })
                })
                .collect();
            b = b.with_radical(r);
        }
    }
    if let Some(labels) = a.labels() {
        let names = labels
            .iter()
            .flat_map(|l| action.elements().iter().map(move |g| format!("{l}⊗{g}")))
            .collect();
        b = b.with_labels(names);
    }
    let cols: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = zero_vec(&field, dim);
            v[i * m + action.identity()] = field.one();
            v
        })
        .collect();
    let map = Matrix::from_columns(&field, dim, &cols);
    let mut ext = ExtensionMorphism::new(a.clone(), b, map)?;
    ext.kind = ExtensionKind::SkewGroup {
        order: m,
        order_invertible,
    };
    Ok(ext)
}

/// The canonical surjection `kQ/I -> kQ/(I + extra)` on path bases.
pub fn quotient_extension(p: &Presentation, extra: Vec<Relation>) -> Result<ExtensionMorphism> {
    let big = p.with_relations(extra);
    let pa = PathAlgebra::new(p)?;
    let pb = PathAlgebra::new(&big)?;
    let field = p.field();
    let cols: Vec<Vector> = pa.basis().iter().map(|x| pb.reduce_path(x)).collect();
    let map = Matrix::from_columns(field, pb.algebra().dim(), &cols);
    let mut m = ExtensionMorphism::new(
        pa.algebra().clone(),
        pb.algebra().clone().with_origin(Origin::Quotient),
        map,
    )?;
    m.kind = ExtensionKind::Quotient;
    m.source_presentation = Some(p.clone());
    m.target_presentation = Some(big);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_algebras::*;
    use crate::algebra::block_decomposition;
    use crate::quiver::{parse_presentation, path_basis_algebra};

    pub(crate) fn diamond(rel: &str) -> Presentation {
        let mut text = String::from(
            "field Q\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n",
        );
        if !rel.is_empty() {
            text.push_str(&format!("relations\n{rel}\nend\n"));
        }
        parse_presentation(&text).unwrap()
    }

    fn point(field: &FieldSpec) -> AssocAlgebra {
        AssocAlgebra::from_fn(field, 1, vec![field.one()], Origin::Manual, |_, _| vec![field.one()])
    }

    #[test]
    fn base_change_dimensions_and_blocks() {
        let k = parse_extension("Q[x]/(x^2-2)").unwrap();
        let a = path_basis_algebra(&diamond("b*a")).unwrap();
        let m = base_change(&a, &k).unwrap();
        assert_eq!(m.target().dim(), 18);
        m.target().validate().unwrap();
        m.target().validate_radical().unwrap();
        let m = base_change(&point(&FieldSpec::Rationals), &k).unwrap();
        assert_eq!(m.target().dim(), 2);
        let split = parse_extension("Q[x]/(x^2-1)").unwrap();
        let m = base_change(&point(&FieldSpec::Rationals), &split).unwrap();
        assert!(matches!(m.kind(), ExtensionKind::BaseChange { etale_not_field: true, .. }));
        assert_eq!(block_decomposition(m.target(), 0).unwrap().block_dims(), vec![1, 1]);
        assert_eq!(parse_extension("Q[x]/(x^2)").unwrap_err().name(), "InseparablePolynomial");
    }

    #[test]
    fn skew_group_examples() {
        let q = FieldSpec::Rationals;
        let t = GroupAction::cyclic_trivial(&point(&q), 2);
        let m = skew_group_algebra(&point(&q), &t).unwrap();
        assert_eq!(block_decomposition(m.target(), 0).unwrap().block_dims(), vec![1, 1]);
        let swap = GroupAction::from_matrices(
            &q_times_q(),
            vec!["e".into(), "g".into()],
            vec![vec![0, 1], vec![1, 0]],
            vec![Matrix::identity(&q, 2), Matrix::from_i64(&q, &[&[0, 1], &[1, 0]])],
        )
        .unwrap();
        let m = skew_group_algebra(&q_times_q(), &swap).unwrap();
        let r = crate::algebra::basic_reduction(m.target(), 0).unwrap();
        assert_eq!(r.algebra.dim(), 1);
        assert_eq!(r.multiplicities, vec![2]);
    }

    #[test]
    fn quotient_maps() {
        let m = quotient_extension(&diamond("b*a"), diamond("").parse_relations(&["d*c"]).unwrap()).unwrap();
        assert_eq!((m.source().dim(), m.target().dim()), (9, 8));
        assert!(m.is_surjective());
        let m = quotient_extension(&diamond("b*a"), vec![]).unwrap();
        assert_eq!(m.map(), &Matrix::identity(&FieldSpec::Rationals, 9));
        let m = quotient_extension(&diamond(""), diamond("").parse_relations(&["b*a"]).unwrap()).unwrap();
        assert_eq!((m.source().dim(), m.target().dim()), (10, 9));
    }

    #[test]
    fn non_multiplicative_maps_are_rejected() {
        let q = FieldSpec::Rationals;
        let a = q_times_q();
        let map = Matrix::from_i64(&q, &[&[1, 1], &[0, 0]]);
        assert_eq!(ExtensionMorphism::new(a.clone(), a, map).unwrap_err().name(), "InvalidMorphism");
    }
}
