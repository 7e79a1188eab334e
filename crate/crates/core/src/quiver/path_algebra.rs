//! `kQ/I` in structure-constant form, by degreewise reduction.
//!
//! Relations are homogeneous, so `I` is graded and `I_l` is spanned by the
//! relations of length `l` together with `kQ_1 I_{l-1}` and `I_{l-1} kQ_1`.
//! Each `I_l` is kept in reduced echelon form over the paths of length `l`;
//! the basis of the quotient in degree `l` is the set of non-pivot paths.

use std::collections::HashMap;

use super::{Path, Presentation};
use crate::algebra::{AssocAlgebra, Origin};
use crate::error::{AdmissibleFailure, Error, Result};
use crate::field::Scalar;
use crate::linalg::{unit_vec, zero_vec, SparseEchelon, SparseVec, Vector};

/// Paths of one length beyond this count abort the computation.
const PATH_BUDGET: usize = 200_000;

#[derive(Debug, Clone)]
struct Level {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    ideal: SparseEchelon,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleReport {
    /// Length of the longest path with nonzero residue class.
    pub longest_nonzero: usize,
    /// Surviving basis paths per length.
    pub dims_by_length: Vec<usize>,
}

/// A presentation together with its path basis and multiplication.
#[derive(Debug, Clone)]
pub struct PathAlgebra {
    presentation: Presentation,
    levels: Vec<Level>,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    algebra: AssocAlgebra,
}

fn check_relations(p: &Presentation) -> Result<()> {
    let q = p.quiver();
    for r in p.relations() {
        let mut len = None;
        for (_, path) in r.terms() {
            if path.len() < 2 {
                return Err(Error::NotAdmissible {
                    reason: AdmissibleFailure::LengthOneTerm,
                    detail: format!("relation {} has a term of length {}", r.display(q), path.len()),
                });
            }
            match len {
                None => len = Some(path.len()),
                Some(l) if l != path.len() => {
                    return Err(Error::NotAdmissible {
                        reason: AdmissibleFailure::NonHomogeneous,
                        detail: format!("relation {} mixes path lengths", r.display(q)),
                    })
                }
                _ => {}
            }
        }
    }
    Ok(())
}

fn compute_levels(p: &Presentation) -> Result<Vec<Level>> {
    check_relations(p)?;
    let q = p.quiver();
    let field = p.field();
    let cap = p.nilpotency_cap();
    let trivial: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut levels = vec![Level {
        index: trivial.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect(),
        ideal: SparseEchelon::new(field, trivial.len()),
        paths: trivial,
    }];
    for len in 1.. {
        let prev = levels.last().unwrap();
        let mut paths = Vec::new();
        for x in &prev.paths {
            for a in q.out_arrows(x.target(q)) {
                paths.push(x.then(a));
            }
        }
        if paths.len() > PATH_BUDGET {
            return Err(Error::NotAdmissible {
                reason: AdmissibleFailure::CapExceeded,
                detail: format!("more than {PATH_BUDGET} paths of length {len}"),
            });
        }
        paths.sort_by(|x, y| x.arrows().cmp(y.arrows()));
        let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut ideal = SparseEchelon::new(field, paths.len());
        for (_, row) in prev.ideal.basis() {
            // Every path in a row shares its endpoints, since relations are
            // parallel.
            let first = &prev.paths[row[0].0];
            let (s, t) = (first.source(), first.target(q));
            for a in q.out_arrows(t) {
                let v: SparseVec = row.iter().map(|(i, c)| (index[&prev.paths[*i].then(a)], c.clone())).collect();
                ideal.insert(sorted(v));
            }
            for a in q.in_arrows(s) {
                let v: SparseVec = row
                    .iter()
                    .map(|(i, c)| (index[&prev.paths[*i].after_arrow(q, a)], c.clone()))
                    .collect();
                ideal.insert(sorted(v));
            }
        }
        for r in p.relations() {
            if r.terms()[0].1.len() == len {
                let v: SparseVec = r.terms().iter().map(|(c, x)| (index[x], c.clone())).collect();
                ideal.insert(sorted(v));
            }
        }
        let surviving = paths.len() - ideal.rank();
        if surviving == 0 {
            break;
        }
        if len >= cap {
            return Err(Error::NotAdmissible {
                reason: AdmissibleFailure::CapExceeded,
                detail: format!("{surviving} paths of length {len} survive, cap is {cap}"),
            });
        }
        levels.push(Level { paths, index, ideal });
    }
    Ok(levels)
}

fn sorted(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Checks that relations have terms of length at least 2 (and are
/// homogeneous), and that every path of length `cap` vanishes.
pub fn admissible_check(p: &Presentation) -> Result<AdmissibleReport> {
    let levels = compute_levels(p)?;
    Ok(AdmissibleReport {
        longest_nonzero: levels.len() - 1,
        dims_by_length: levels.iter().map(|l| l.paths.len() - l.ideal.rank()).collect(),
    })
}

pub fn path_basis_algebra(p: &Presentation) -> Result<AssocAlgebra> {
    Ok(PathAlgebra::new(p)?.algebra)
}

impl PathAlgebra {
    pub fn new(p: &Presentation) -> Result<Self> {
        let levels = compute_levels(p)?;
        let mut basis = Vec::new();
        for l in &levels {
            for c in l.ideal.free_columns() {
                basis.push(l.paths[c].clone());
            }
        }
        let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut pa = PathAlgebra {
            presentation: p.clone(),
            levels,
            basis,
            basis_index,
            algebra: AssocAlgebra::from_fn(p.field(), 0, vec![], Origin::Presentation, |_, _| vec![]),
        };
        let field = p.field().clone();
        let q = p.quiver().clone();
        let dim = pa.basis.len();
        let mut unit = zero_vec(&field, dim);
        for v in 0..q.vertex_count() {
            unit[v] = field.one();
        }
        let algebra = AssocAlgebra::from_fn(&field, dim, unit, Origin::Presentation, |i, j| {
            match pa.basis[i].compose(&q, &pa.basis[j]) {
                Some(path) => pa.reduce_path(&path),
                None => zero_vec(&field, dim),
            }
        });
        let radical: Vec<Vector> = (q.vertex_count()..dim).map(|i| unit_vec(&field, dim, i)).collect();
        let labels = pa.basis.iter().map(|x| x.display(&q)).collect();
        pa.algebra = algebra.with_radical(radical).with_labels(labels);
        Ok(pa)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn algebra(&self) -> &AssocAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> AssocAlgebra {
        self.algebra
    }

    /// Basis paths, in basis order: trivial paths, arrows, longer paths.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, path: &Path) -> Option<usize> {
        self.basis_index.get(path).copied()
    }

    /// Longest length of a path with nonzero class.
    pub fn loewy_length(&self) -> usize {
        self.levels.len()
    }

    /// Coordinates of the residue class of a path.
    pub fn reduce_path(&self, path: &Path) -> Vector {
        let field = self.presentation.field();
        let dim = self.basis.len();
        let mut out = zero_vec(field, dim);
        let Some(level) = self.levels.get(path.len()) else {
            return out;
        };
        let Some(&i) = level.index.get(path) else {
            return out;
        };
        let nf = level.ideal.reduce(&vec![(i, field.one())]);
        for (c, x) in nf {
            out[self.basis_index[&level.paths[c]]] = x;
        }
        out
    }

    /// Coordinates of a linear combination of paths.
    pub fn reduce_combination(&self, terms: &[(Scalar, Path)]) -> Vector {
        let field = self.presentation.field();
        let mut out = zero_vec(field, self.basis.len());
        for (c, p) in terms {
            crate::linalg::axpy(&mut out, c, &self.reduce_path(p));
        }
        out
    }

    /// Class of an element given in the basis of another path algebra on
    /// the same quiver.
    pub fn reduce_from(&self, other: &PathAlgebra, v: &[Scalar]) -> Vector {
        let terms: Vec<(Scalar, Path)> = v
            .iter()
            .zip(other.basis())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, p)| (c.clone(), p.clone()))
            .collect();
        self.reduce_combination(&terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_presentation;

    fn diamond(rel: &str) -> Presentation {
        let mut text = String::from(
            "field Q\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n",
        );
        if !rel.is_empty() {
            text.push_str(&format!("relations\n{rel}\nend\n"));
        }
        parse_presentation(&text).unwrap()
    }

    #[test]
    fn diamond_dimensions() {
        assert_eq!(path_basis_algebra(&diamond("b*a")).unwrap().dim(), 9);
        assert_eq!(path_basis_algebra(&diamond("b*a\nd*c")).unwrap().dim(), 8);
        assert_eq!(path_basis_algebra(&diamond("")).unwrap().dim(), 10);
        assert_eq!(path_basis_algebra(&diamond("b*a - d*c")).unwrap().dim(), 9);
    }

    #[test]
    fn admissibility() {
        let r = admissible_check(&diamond("b*a")).unwrap();
        assert_eq!(r.longest_nonzero, 2);
        assert_eq!(r.dims_by_length, vec![4, 4, 1]);
        let loop_q = parse_presentation("field Q\nvertices 1\narrow t : 1 -> 1\n").unwrap();
        match admissible_check(&loop_q).unwrap_err() {
            Error::NotAdmissible { reason, .. } => assert_eq!(reason, AdmissibleFailure::CapExceeded),
            e => panic!("{e:?}"),
        }
        let dual = parse_presentation("field Q\nvertices 1\narrow t : 1 -> 1\nrelations\nt*t\nend\n").unwrap();
        assert_eq!(path_basis_algebra(&dual).unwrap().dim(), 2);
        let short = parse_presentation("field Q\nvertices 1\narrow t : 1 -> 1\nrelations\nt*t - t\nend\n").unwrap();
        match admissible_check(&short).unwrap_err() {
            Error::NotAdmissible { reason, .. } => assert_eq!(reason, AdmissibleFailure::LengthOneTerm),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn structure_constants_are_associative() {
        for rel in ["b*a", "b*a\nd*c", "", "b*a - d*c"] {
            let a = path_basis_algebra(&diamond(rel)).unwrap();
            a.validate().unwrap();
            a.validate_radical().unwrap();
        }
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        let pa = PathAlgebra::new(&diamond("b*a - d*c")).unwrap();
        let q = pa.presentation().quiver().clone();
        let ba = crate::quiver::parse_path(&q, "b*a").unwrap();
        let dc = crate::quiver::parse_path(&q, "d*c").unwrap();
        assert_eq!(pa.reduce_path(&ba), pa.reduce_path(&dc));
    }
}
