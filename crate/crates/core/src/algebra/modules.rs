//! One-sided modules given by action matrices, and projectivity via tops.

use serde::Serialize;

use super::{AssocAlgebra, IdempotentDecomposition, Span};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Vector};

/// A right module: `action[i]` is the matrix of `m -> m * b_i`.
#[derive(Debug, Clone)]
pub struct RightModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

/// A left module: `action[i]` is the matrix of `m -> b_i * m`.
#[derive(Debug, Clone)]
pub struct LeftModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

fn combine(a: &AssocAlgebra, action: &[Matrix], dim: usize, x: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(a.field(), dim, dim);
    for (c, op) in x.iter().zip(action) {
        if !c.is_zero() {
            m = m.add(&op.scale(c));
        }
    }
    m
}

fn check_action(a: &AssocAlgebra, action: &[Matrix], dim: usize, right: bool) -> Result<()> {
    if action.len() != a.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::InvalidModule("action matrices have the wrong shape".into()));
    }
    if combine(a, action, dim, a.unit()) != Matrix::identity(a.field(), dim) {
        return Err(Error::InvalidModule("the unit does not act as the identity".into()));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let prod = crate::linalg::to_dense(a.field(), a.basis_product(i, j), a.dim());
            let lhs = combine(a, action, dim, &prod);
            let rhs = if right {
                action[j].mul(&action[i])
            } else {
                action[i].mul(&action[j])
            };
            if lhs != rhs {
                return Err(Error::InvalidModule(format!(
                    "action is not compatible with the product of basis elements {i} and {j}"
                )));
            }
        }
    }
    Ok(())
}

impl RightModule {
    pub fn new(a: &AssocAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        check_action(a, &action, dim, true)?;
        Ok(RightModule { dim, action })
    }

    pub fn regular(a: &AssocAlgebra) -> Self {
        RightModule {
            dim: a.dim(),
            action: (0..a.dim()).map(|i| a.right_mult_matrix(&a.basis_element(i))).collect(),
        }
    }

    pub fn direct_sum(&self, other: &RightModule) -> RightModule {
        RightModule {
            dim: self.dim + other.dim,
            action: self.action.iter().zip(&other.action).map(|(x, y)| x.direct_sum(y)).collect(),
        }
    }

    pub fn act(&self, a: &AssocAlgebra, x: &[Scalar]) -> Matrix {
        combine(a, &self.action, self.dim, x)
    }
}

impl LeftModule {
    pub fn new(a: &AssocAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        check_action(a, &action, dim, false)?;
        Ok(LeftModule { dim, action })
    }

    pub fn regular(a: &AssocAlgebra) -> Self {
        LeftModule {
            dim: a.dim(),
            action: (0..a.dim()).map(|i| a.left_mult_matrix(&a.basis_element(i))).collect(),
        }
    }

    pub fn direct_sum(&self, other: &LeftModule) -> LeftModule {
        LeftModule {
            dim: self.dim + other.dim,
            action: self.action.iter().zip(&other.action).map(|(x, y)| x.direct_sum(y)).collect(),
        }
    }

    pub fn act(&self, a: &AssocAlgebra, x: &[Scalar]) -> Matrix {
        combine(a, &self.action, self.dim, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProjectivityReport {
    pub projective: bool,
    /// Multiplicity of each indecomposable projective (one per isomorphism
    /// class of primitive idempotents) in the projective cover.
    pub multiplicities: Vec<usize>,
    pub cover_dimension: usize,
    pub module_dimension: usize,
}

fn image_dim(field: &crate::field::FieldSpec, width: usize, vs: Vec<Vector>) -> usize {
    Span::new(field, width, &vs).dim()
}

fn projectivity(
    a: &AssocAlgebra,
    dim: usize,
    act: impl Fn(&[Scalar]) -> Matrix,
    decomposition: &IdempotentDecomposition,
    right: bool,
) -> Result<ProjectivityReport> {
    let field = a.field();
    let rad = a.radical_basis()?;
    let basis: Vec<Vector> = (0..dim).map(|i| crate::linalg::unit_vec(field, dim, i)).collect();
    let rad_ops: Vec<Matrix> = rad.iter().map(|r| act(r)).collect();
    let mrad: Vec<Vector> = rad_ops
        .iter()
        .flat_map(|op| basis.iter().map(move |v| op.mul_vec(v)))
        .collect();
    let mrad = Span::new(field, dim, &mrad).basis().to_vec();
    let mut multiplicities = Vec::new();
    let mut cover = 0;
    for rep in decomposition.representatives() {
        let e = &decomposition.idempotents[rep];
        let op = act(e);
        let me = image_dim(field, dim, basis.iter().map(|v| op.mul_vec(v)).collect());
        let mre = image_dim(field, dim, mrad.iter().map(|v| op.mul_vec(v)).collect());
        let m = me - mre;
        // dim eA (right) or dim Ae (left)
        let proj_dim = if right {
            a.left_mult_matrix(e).rank()
        } else {
            a.right_mult_matrix(e).rank()
        };
        cover += m * proj_dim;
        multiplicities.push(m);
    }
    Ok(ProjectivityReport {
        projective: cover == dim,
        multiplicities,
        cover_dimension: cover,
        module_dimension: dim,
    })
}

/// Projectivity of a right module: the projective cover built from the
/// top `M / M rad A` has the same dimension as `M`.
pub fn is_projective_right(
    a: &AssocAlgebra,
    m: &RightModule,
    decomposition: &IdempotentDecomposition,
) -> Result<ProjectivityReport> {
    projectivity(a, m.dim, |x| m.act(a, x), decomposition, true)
}

/// The left-module mirror of [`is_projective_right`].
pub fn is_projective_left(
    a: &AssocAlgebra,
    m: &LeftModule,
    decomposition: &IdempotentDecomposition,
) -> Result<ProjectivityReport> {
    projectivity(a, m.dim, |x| m.act(a, x), decomposition, false)
}
