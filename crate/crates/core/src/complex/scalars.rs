//! The a-priori bound on minimal complexes and `B (x)_A -` on complexes.

use std::sync::Arc;

use super::{DimVector, Differential, ProjAlgebra, ProjComplex};
use crate::algebra::lift_idempotents;
use crate::error::{Error, Result};
use crate::extension::{ExtensionKind, ExtensionMorphism};
use crate::linalg::{axpy, Vector};

/// `m_i = (n_i + m_{i+1}) * M` downward from the top of the support of
/// `n` to `t`, where `M` is the largest `dim_k A f_v`. Every minimal
/// bounded-above complex with cohomology dimension vector `n` has
/// `dim_k P^i <= m_i`.
pub fn lemma_bound(base: &ProjAlgebra, n: &DimVector, t: i64) -> DimVector {
    let Some((_, r)) = n.support() else {
        return DimVector::zero();
    };
    let big_m = base.max_projective_dim();
    let mut out = DimVector::zero();
    let mut above = 0usize;
    let mut i = r;
    while i >= t {
        above = (n.get(i) + above) * big_m;
        out.set(i, above);
        i -= 1;
    }
    out
}

/// How `B (x)_A A e_v = B phi(e_v)` splits into the chosen projectives of
/// `B`: `phi(e_v)` is the sum of the idempotents of `target` listed in
/// `parts[v]`.
#[derive(Debug, Clone)]
pub struct ProjectiveDictionary {
    pub target: Arc<ProjAlgebra>,
    pub parts: Vec<Vec<usize>>,
}

impl ProjectiveDictionary {
    /// `dim_k B phi(e_v)` for each vertex `v` of `A`.
    pub fn image_dims(&self) -> Vec<usize> {
        self.parts
            .iter()
            .map(|p| p.iter().map(|&w| self.target.projective_dim(w)).sum())
            .collect()
    }
}

/// Splits each `phi(e_v)` into primitive idempotents of `B`. Under an
/// identity or a base change by a field the images are already primitive;
/// otherwise each corner `phi(e_v) B phi(e_v)` is split by idempotent
/// lifting.
pub fn projective_dictionary(source: &ProjAlgebra, phi: &ExtensionMorphism, seed: u64) -> Result<ProjectiveDictionary> {
    if phi.source().dim() != source.algebra().dim() || phi.source().field() != source.field() {
        return Err(Error::DictionaryUnavailable("the morphism does not start at this algebra".into()));
    }
    let b = phi.target();
    let keep_whole = match phi.kind() {
        ExtensionKind::Identity => true,
        ExtensionKind::BaseChange { .. } => phi.extension_field().is_some(),
        _ => false,
    };
    let mut idempotents: Vec<Vector> = Vec::new();
    let mut labels = Vec::new();
    let mut parts = Vec::new();
    for v in 0..source.vertex_count() {
        let e = phi.apply(source.idempotent(v));
        let label = &source.labels()[v];
        let pieces: Vec<Vector> = if keep_whole {
            vec![e]
        } else {
            let (corner, embedding) = b.corner(&e).map_err(|err| Error::DictionaryUnavailable(err.to_string()))?;
            let dec = lift_idempotents(&corner, seed).map_err(|err| Error::DictionaryUnavailable(err.to_string()))?;
            dec.idempotents
                .iter()
                .map(|c| {
                    let mut x = b.zero();
                    for (coef, basis) in c.iter().zip(&embedding) {
                        axpy(&mut x, coef, basis);
                    }
                    x
                })
                .collect()
        };
        let mut ids = Vec::new();
        for (j, x) in pieces.into_iter().enumerate() {
            ids.push(idempotents.len());
            labels.push(if keep_whole { label.clone() } else { format!("{label}.{}", j + 1) });
            idempotents.push(x);
        }
        parts.push(ids);
    }
    let target = ProjAlgebra::from_idempotents(b.clone(), idempotents, labels)
        .map_err(|err| Error::DictionaryUnavailable(err.to_string()))?;
    Ok(ProjectiveDictionary {
        target: Arc::new(target),
        parts,
    })
}

/// Termwise `B (x)_A -`: summand `A e_v` becomes the summands of
/// `parts[v]` and an entry `h` becomes the blocks `f_w phi(h) f_w'`.
pub fn extend_scalars_complex(c: &ProjComplex, phi: &ExtensionMorphism, dict: &ProjectiveDictionary) -> Result<ProjComplex> {
    if phi.source().dim() != c.base().algebra().dim() || dict.parts.len() != c.base().vertex_count() {
        return Err(Error::DictionaryUnavailable("the dictionary does not match the complex".into()));
    }
    let tb = &dict.target;
    let b = tb.algebra();
    let Some((lo, hi)) = c.support() else {
        return Ok(ProjComplex::zero(tb.clone()));
    };
    let expand = |i: i64| -> Vec<(usize, usize)> {
        c.term(i)
            .iter()
            .enumerate()
            .flat_map(|(s, &v)| dict.parts[v].iter().map(move |&w| (s, w)))
            .collect()
    };
    let terms: Vec<Vec<usize>> = (lo..=hi).map(|i| expand(i).into_iter().map(|(_, w)| w).collect()).collect();
    let mut diffs: Vec<Differential> = Vec::new();
    for i in lo..hi {
        let d = c.differential(i).expect("inner differential");
        let (src, tgt) = (expand(i), expand(i + 1));
        let mut out = Vec::new();
        for &(r, w2) in &tgt {
            let mut row = Vec::new();
            for &(s, w1) in &src {
                let image = phi.apply(&d[r][s]);
                row.push(b.mul3(tb.idempotent(w1), &image, tb.idempotent(w2)));
            }
            out.push(row);
        }
        diffs.push(out);
    }
    ProjComplex::new(tb.clone(), lo, terms, diffs)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{diamond, el, presented};
    use super::*;
    use crate::algebra::block_decomposition;
    use crate::extension::{base_change, skew_group_algebra, GroupAction};
    use crate::field::FieldSpec;

    #[test]
    fn bound_over_the_ground_field() {
        let k = presented("Q", "vertices 1\n", &[]);
        let m = lemma_bound(&k, &DimVector::delta(0, 1), -2);
        assert_eq!(m, DimVector::from_pairs(&[(0, 1), (-1, 1), (-2, 1)]));
        assert!(lemma_bound(&k, &DimVector::zero(), -3).is_zero());
    }

    #[test]
    fn bound_over_diamond_ba() {
        // P1 = span{e1, a, c, d*c}, so M = 4.
        let b = diamond(&["b*a"]);
        let m = lemma_bound(&b, &DimVector::delta(0, 1), -1);
        assert_eq!(m, DimVector::from_pairs(&[(0, 4), (-1, 16)]));
    }

    fn sample_complex(b: &Arc<ProjAlgebra>) -> ProjComplex {
        ProjComplex::new(b.clone(), 0, vec![vec![3], vec![0, 1]], vec![vec![vec![el(b, "d*c")], vec![el(b, "b")]]])
            .unwrap()
    }

    #[test]
    fn identity_leaves_the_complex_unchanged() {
        let b = diamond(&["b*a"]);
        let phi = ExtensionMorphism::identity(b.algebra());
        let dict = projective_dictionary(&b, &phi, 0).unwrap();
        let c = sample_complex(&b);
        let e = extend_scalars_complex(&c, &phi, &dict).unwrap();
        assert_eq!(e.term_data(), c.term_data());
        assert_eq!(e.component_dim_vector(), c.component_dim_vector());
        assert_eq!(e.cohomology_dim_vector(), c.cohomology_dim_vector());
    }

    #[test]
    fn base_change_doubles_component_dims() {
        let b = diamond(&["b*a"]);
        let k = FieldSpec::number_field(&[-2, 0, 1]).unwrap();
        let phi = base_change(b.algebra(), &k).unwrap();
        let dict = projective_dictionary(&b, &phi, 0).unwrap();
        assert_eq!(dict.image_dims(), vec![8, 4, 4, 2]);
        let c = sample_complex(&b);
        let e = extend_scalars_complex(&c, &phi, &dict).unwrap();
        assert_eq!(e.component_dim_vector(), c.component_dim_vector().scale(2));
        assert_eq!(e.cohomology_dim_vector(), c.cohomology_dim_vector().scale(2));
        assert!(e.is_homotopically_minimal());
    }

    #[test]
    fn trivial_skew_action_splits_into_two_blocks() {
        let b = diamond(&["b*a"]);
        let g = GroupAction::cyclic_trivial(b.algebra(), 2);
        let phi = skew_group_algebra(b.algebra(), &g).unwrap();
        let dict = projective_dictionary(&b, &phi, 3).unwrap();
        assert!(dict.parts.iter().all(|p| p.len() == 2));
        let c = sample_complex(&b);
        let e = extend_scalars_complex(&c, &phi, &dict).unwrap();
        assert_eq!(e.component_dim_vector(), c.component_dim_vector().scale(2));
        assert_eq!(e.cohomology_dim_vector(), c.cohomology_dim_vector().scale(2));
        // Oracle: B has two blocks; each summand of the extended complex
        // lies in exactly one of them.
        let blocks = block_decomposition(phi.target(), 0).unwrap();
        assert_eq!(blocks.blocks.len(), 2);
        let tb = &dict.target;
        for w in 0..tb.vertex_count() {
            let inside: Vec<bool> = blocks
                .central_idempotents
                .iter()
                .map(|z| tb.algebra().mul(z, tb.idempotent(w)) == *tb.idempotent(w))
                .collect();
            assert_eq!(inside.iter().filter(|x| **x).count(), 1);
        }
    }
}
