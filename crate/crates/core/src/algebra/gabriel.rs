//! Recovering a quiver presentation from a basic split algebra.

use super::{lift_idempotents, AssocAlgebra, Span};
use crate::error::{Error, Result};
use crate::linalg::{axpy, Matrix, SparseEchelon, Vector};
use crate::quiver::{Arrow, Path, PathAlgebra, Presentation, Quiver, Relation, DEFAULT_NILPOTENCY_CAP};

#[derive(Debug, Clone)]
pub struct GabrielQuiver {
    pub presentation: Presentation,
    /// Primitive idempotent for each vertex, in the coordinates of the input.
    pub vertex_idempotents: Vec<Vector>,
    /// Chosen radical element for each arrow.
    pub arrow_elements: Vec<Vector>,
    /// Image of each basis path of the presentation's path algebra; these
    /// form a basis of the input algebra and multiply compatibly.
    pub path_images: Vec<Vector>,
}

fn arrow_label(k: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if k < 26 {
        (letters[k] as char).to_string()
    } else {
        format!("{}{}", letters[k % 26] as char, k / 26)
    }
}

/// The Gabriel quiver of a basic algebra with split semisimple quotient,
/// with relations spanning the kernel of `kQ -> A` degree by degree up to
/// `degree_cap` (default: the nilpotency index of the radical). The result
/// is checked to be isomorphic to the input.
pub fn gabriel_quiver(a: &AssocAlgebra, degree_cap: Option<usize>, seed: u64) -> Result<GabrielQuiver> {
    let field = a.field().clone();
    let dec = lift_idempotents(a, seed)?;
    if dec.iso_classes.iter().any(|c| c.len() > 1) {
        return Err(Error::NotBasic(
            "some primitive idempotents are isomorphic; apply the basic reduction first".into(),
        ));
    }
    let idem = dec.idempotents.clone();
    let n = idem.len();
    let rad = a.radical_basis()?;
    let rad2 = a.ideal_product(&rad, &rad);
    let nil = a
        .nilpotency_index(&rad)
        .ok_or_else(|| Error::InvalidAlgebra("radical is not nilpotent".into()))?;
    let cap = degree_cap.unwrap_or(nil);

    let mut arrows = Vec::new();
    let mut arrow_elements: Vec<Vector> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let sq: Vec<Vector> = rad2.iter().map(|r| a.mul3(&idem[j], r, &idem[i])).collect();
            let mut span = Span::new(&field, a.dim(), &sq);
            for r in &rad {
                let x = a.mul3(&idem[j], r, &idem[i]);
                if span.insert(&x) {
                    arrows.push(Arrow {
                        label: String::new(),
                        source: i,
                        target: j,
                    });
                    arrow_elements.push(x);
                }
            }
        }
    }
    for (k, ar) in arrows.iter_mut().enumerate() {
        ar.label = arrow_label(k);
    }
    let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let quiver = Quiver::new(vertices, arrows)?;

    let image = |p: &Path| -> Vector {
        let mut x = idem[p.source()].clone();
        for &ar in p.arrows() {
            x = a.mul(&arrow_elements[ar], &x);
        }
        x
    };

    // Degreewise kernel of kQ_l -> A, keeping only generators not already
    // in kQ_1 I_{l-1} + I_{l-1} kQ_1.
    let mut relations: Vec<Relation> = Vec::new();
    let mut prev_paths: Vec<Path> = quiver.paths_of_length(1);
    let mut prev_kernel = SparseEchelon::new(&field, prev_paths.len());
    {
        let cols: Vec<Vector> = prev_paths.iter().map(&image).collect();
        for k in Matrix::from_columns(&field, a.dim(), &cols).kernel() {
            prev_kernel.insert_dense(&k);
        }
        if prev_kernel.rank() > 0 {
            return Err(Error::InvalidAlgebra("arrow elements are linearly dependent".into()));
        }
    }
    let mut len = 2;
    loop {
        let paths = quiver.paths_of_length(len);
        if paths.is_empty() {
            break;
        }
        let index: std::collections::HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut generated = SparseEchelon::new(&field, paths.len());
        for (_, row) in prev_kernel.basis() {
            let first = &prev_paths[row[0].0];
            for ar in quiver.out_arrows(first.target(&quiver)) {
                let mut v: Vec<_> = row.iter().map(|(i, c)| (index[&prev_paths[*i].then(ar)], c.clone())).collect();
                v.sort_by_key(|(i, _)| *i);
                generated.insert(v);
            }
            for ar in quiver.in_arrows(first.source()) {
                let mut v: Vec<_> = row
                    .iter()
                    .map(|(i, c)| (index[&prev_paths[*i].after_arrow(&quiver, ar)], c.clone()))
                    .collect();
                v.sort_by_key(|(i, _)| *i);
                generated.insert(v);
            }
        }
        let cols: Vec<Vector> = paths.iter().map(&image).collect();
        let all_zero = cols.iter().all(|c| crate::linalg::is_zero_vec(c));
        let kernel = Matrix::from_columns(&field, a.dim(), &cols).kernel();
        let mut kernel_ech = generated.clone();
        for k in &kernel {
            if kernel_ech.insert_dense(k) {
                if len > cap {
                    return Err(Error::CapTooSmall(format!(
                        "a relation of length {len} is needed but the degree cap is {cap}"
                    )));
                }
                let reduced = generated.reduce_dense(k);
                let terms = reduced
                    .iter()
                    .zip(&paths)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, p)| (c.clone(), p.clone()))
                    .collect();
                let rel = Relation::new(&quiver, terms)?;
                generated.insert_dense(&reduced);
                relations.push(rel);
            }
        }
        if all_zero && generated.rank() == paths.len() {
            break;
        }
        prev_paths = paths;
        prev_kernel = kernel_ech;
        len += 1;
        if len > cap + 1 {
            return Err(Error::CapTooSmall(format!(
                "paths of length {len} are not yet in the generated ideal at degree cap {cap}"
            )));
        }
    }

    let pres = Presentation::new(field.clone(), quiver, relations).with_cap(DEFAULT_NILPOTENCY_CAP.max(nil + 1));
    let pa = PathAlgebra::new(&pres)?;
    if pa.algebra().dim() != a.dim() {
        return Err(Error::CapTooSmall(format!(
            "recovered presentation has dimension {} but the algebra has dimension {}",
            pa.algebra().dim(),
            a.dim()
        )));
    }
    // The images of basis paths must be a basis and the map multiplicative.
    let path_images: Vec<Vector> = pa.basis().iter().map(&image).collect();
    if Span::new(&field, a.dim(), &path_images).dim() != a.dim() {
        return Err(Error::CapTooSmall("images of basis paths are not independent".into()));
    }
    let pb = pa.algebra();
    for i in 0..pb.dim() {
        for j in 0..pb.dim() {
            let lhs = a.mul(&path_images[i], &path_images[j]);
            let prod = crate::linalg::to_dense(&field, pb.basis_product(i, j), pb.dim());
            let mut rhs = a.zero();
            for (c, img) in prod.iter().zip(&path_images) {
                axpy(&mut rhs, c, img);
            }
            if lhs != rhs {
                return Err(Error::CapTooSmall(
                    "the kernel of kQ -> A is not generated by homogeneous relations".into(),
                ));
            }
        }
    }
    Ok(GabrielQuiver {
        presentation: pres,
        vertex_idempotents: idem,
        arrow_elements,
        path_images,
    })
}

/// `m[i][j]` = number of arrows from `i` to `j`.
pub fn multiplicity_matrix(p: &Presentation) -> Vec<Vec<usize>> {
    let q = p.quiver();
    let n = q.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for a in q.arrows() {
        m[a.source][a.target] += 1;
    }
    m
}

/// Whether two arrow-multiplicity matrices agree up to a simultaneous
/// permutation of vertices.
pub fn same_quiver_shape(x: &[Vec<usize>], y: &[Vec<usize>]) -> bool {
    let n = x.len();
    if y.len() != n {
        return false;
    }
    let sig = |m: &[Vec<usize>], v: usize| -> (usize, usize, usize) {
        let out: usize = m[v].iter().sum();
        let inn: usize = m.iter().map(|r| r[v]).sum();
        (out, inn, m[v][v])
    };
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        x: &[Vec<usize>],
        y: &[Vec<usize>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig: &dyn Fn(&[Vec<usize>], usize) -> (usize, usize, usize),
    ) -> bool {
        let n = x.len();
        if k == n {
            return true;
        }
        for c in 0..n {
            if used[c] || sig(x, k) != sig(y, c) {
                continue;
            }
            let consistent = (0..k).all(|i| x[i][k] == y[perm[i]][c] && x[k][i] == y[c][perm[i]]);
            if !consistent {
                continue;
            }
            perm[k] = c;
            used[c] = true;
            if go(k + 1, x, y, perm, used, sig) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    go(0, x, y, &mut perm, &mut used, &sig)
}

#[cfg(test)]
mod tests {
    use super::super::test_algebras::*;
    use super::*;
    use crate::field::FieldSpec;
    use crate::quiver::{parse_presentation, path_basis_algebra};

    #[test]
    fn diamond_roundtrip() {
        let p = parse_presentation(
            "field Q\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrelations\nb*a\nend\n",
        )
        .unwrap();
        let a = path_basis_algebra(&p).unwrap();
        let g = gabriel_quiver(&a, None, 0).unwrap();
        assert_eq!(g.presentation.quiver().arrow_count(), 4);
        assert_eq!(g.presentation.relations().len(), 1);
        assert!(same_quiver_shape(&multiplicity_matrix(&p), &multiplicity_matrix(&g.presentation)));
        assert_eq!(path_basis_algebra(&g.presentation).unwrap().dim(), 9);
    }

    #[test]
    fn field_and_dual_numbers() {
        let q = FieldSpec::Rationals;
        let k = AssocAlgebra::from_fn(&q, 1, vec![q.one()], super::super::Origin::Manual, |_, _| vec![q.one()]);
        let g = gabriel_quiver(&k, None, 0).unwrap();
        assert_eq!(g.presentation.quiver().vertex_count(), 1);
        assert_eq!(g.presentation.quiver().arrow_count(), 0);
        let d = dual_numbers(&q);
        let g = gabriel_quiver(&d, None, 0).unwrap();
        assert_eq!(g.presentation.quiver().arrow_count(), 1);
        let rels: Vec<String> = g.presentation.relations().iter().map(|r| r.display(g.presentation.quiver())).collect();
        assert_eq!(rels, vec!["a*a"]);
    }

    #[test]
    fn non_basic_rejected() {
        let m = matrix_algebra(&FieldSpec::Rationals, 2);
        assert_eq!(gabriel_quiver(&m, None, 0).unwrap_err().name(), "NotBasic");
    }

    #[test]
    fn shape_comparison_is_up_to_permutation() {
        let x = vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]];
        let y = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]];
        assert!(same_quiver_shape(&x, &y));
        let z = vec![vec![0, 1, 1], vec![0, 0, 0], vec![0, 0, 0]];
        assert!(!same_quiver_shape(&x, &z));
    }
}
