//! Finite groups acting on algebras by automorphisms.

use std::collections::BTreeMap;

use crate::algebra::{json_vector, AssocAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{to_dense, Matrix, Vector};
use crate::quiver::{Path, PathAlgebra};

/// A finite group given by its multiplication table, acting on an algebra.
/// `matrices[g]` has the image `g(b_j)` of the `j`-th basis element in
/// column `j`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    matrices: Vec<Matrix>,
}

fn check_table(elements: &[String], table: &[Vec<usize>]) -> Result<usize> {
    let m = elements.len();
    if m == 0 || table.len() != m || table.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
        return Err(Error::InvalidAction("multiplication table has the wrong shape".into()));
    }
    let identity = (0..m)
        .find(|&e| (0..m).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::InvalidAction("the table has no identity element".into()))?;
    for g in 0..m {
        if !(0..m).any(|h| table[g][h] == identity && table[h][g] == identity) {
            return Err(Error::InvalidAction(format!("{} has no inverse", elements[g])));
        }
        for h in 0..m {
            for k in 0..m {
                if table[table[g][h]][k] != table[g][table[h][k]] {
                    return Err(Error::InvalidAction("the table is not associative".into()));
                }
            }
        }
    }
    Ok(identity)
}

/// Checks that `m` is a unital algebra automorphism of `a`.
fn check_automorphism(a: &AssocAlgebra, m: &Matrix, name: &str) -> Result<()> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::InvalidAction(format!("matrix of {name} has the wrong shape")));
    }
    if !m.is_invertible() {
        return Err(Error::InvalidAction(format!("{name} does not act invertibly")));
    }
    if &m.mul_vec(a.unit()) != a.unit() {
        return Err(Error::InvalidAction(format!("{name} does not fix the unit")));
    }
    let images: Vec<Vector> = (0..a.dim()).map(|j| m.column(j)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = m.mul_vec(&to_dense(a.field(), a.basis_product(i, j), a.dim()));
            if lhs != a.mul(&images[i], &images[j]) {
                return Err(Error::InvalidAction(format!(
                    "{name} is not multiplicative (it does not preserve the relations)"
                )));
            }
        }
    }
    Ok(())
}

impl GroupAction {
    pub fn from_matrices(
        a: &AssocAlgebra,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        let identity = check_table(&elements, &table)?;
        let g = GroupAction {
            elements,
            table,
            identity,
            matrices,
        };
        g.validate(a)?;
        Ok(g)
    }

    /// Extends actions of generators to the whole group along the table.
    pub fn from_generators(
        a: &AssocAlgebra,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: Vec<(usize, Matrix)>,
    ) -> Result<Self> {
        let identity = check_table(&elements, &table)?;
        let m = elements.len();
        let mut known: Vec<Option<Matrix>> = vec![None; m];
        known[identity] = Some(Matrix::identity(a.field(), a.dim()));
        let mut queue = vec![identity];
        while let Some(x) = queue.pop() {
            for (s, ms) in &generators {
                let y = table[*s][x];
                let my = ms.mul(known[x].as_ref().unwrap());
                match &known[y] {
                    Some(old) if old != &my => {
                        return Err(Error::InvalidAction(format!(
                            "generator matrices are inconsistent with the table at {}",
                            elements[y]
                        )))
                    }
                    Some(_) => {}
                    None => {
                        known[y] = Some(my);
                        queue.push(y);
                    }
                }
            }
        }
        let matrices = known
            .into_iter()
            .enumerate()
            .map(|(g, x)| {
                x.ok_or_else(|| Error::InvalidAction(format!("{} is not generated", elements[g])))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_matrices(a, elements, table, matrices)
    }

    /// `Z/n` acting trivially.
    pub fn cyclic_trivial(a: &AssocAlgebra, n: usize) -> Self {
        let elements = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupAction {
            elements,
            table,
            identity: 0,
            matrices: vec![Matrix::identity(a.field(), a.dim()); n],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn product(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.table[g][h] == self.identity).expect("validated group")
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.matrices.iter().all(|m| m == &Matrix::identity(m.field(), m.rows()))
    }

    /// Checks the group table, that every element acts by a unital
    /// automorphism, that the identity acts trivially, and that
    /// `M_{gh} = M_g M_h`.
    pub fn validate(&self, a: &AssocAlgebra) -> Result<()> {
        check_table(&self.elements, &self.table)?;
        if self.matrices.len() != self.order() {
            return Err(Error::InvalidAction("one matrix per group element is required".into()));
        }
        if self.matrices[self.identity] != Matrix::identity(a.field(), a.dim()) {
            return Err(Error::InvalidAction("the identity does not act trivially".into()));
        }
        for (g, m) in self.matrices.iter().enumerate() {
            check_automorphism(a, m, &self.elements[g])?;
        }
        for g in 0..self.order() {
            for h in 0..self.order() {
                if self.matrices[self.table[g][h]] != self.matrices[g].mul(&self.matrices[h]) {
                    return Err(Error::InvalidAction(format!(
                        "action of {}{} differs from the composite",
                        self.elements[g], self.elements[h]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parses the group-action JSON format:
    ///
    /// ```json
    /// { "elements": ["e", "g"],
    ///   "table": [["e", "g"], ["g", "e"]],
    ///   "generators": { "g": { "vertices": {"1": "2", "2": "1"}, "arrows": {} } } }
    /// ```
    ///
    /// A generator is given either by vertex and arrow permutations (moved
    /// labels only; the algebra must come from a presentation) or by a
    /// `"matrix"` whose rows are rows of the action matrix.
    pub fn from_json(text: &str, a: &AssocAlgebra, pa: Option<&PathAlgebra>) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("group action JSON: {e}")))?;
        let elements: Vec<String> = v["elements"]
            .as_array()
            .ok_or_else(|| Error::Parse("group action JSON: missing \"elements\"".into()))?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| Error::Parse("element labels must be strings".into())))
            .collect::<Result<_>>()?;
        let index = |s: &serde_json::Value| -> Result<usize> {
            let s = s.as_str().ok_or_else(|| Error::Parse("table entries must be element labels".into()))?;
            elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| Error::InvalidAction(format!("unknown group element {s}")))
        };
        let table: Vec<Vec<usize>> = v["table"]
            .as_array()
            .ok_or_else(|| Error::Parse("group action JSON: missing \"table\"".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("table rows must be lists".into()))?
                    .iter()
                    .map(index)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let gens = v["generators"]
            .as_object()
            .ok_or_else(|| Error::Parse("group action JSON: missing \"generators\"".into()))?;
        let mut generators = Vec::new();
        for (name, data) in gens {
            let g = index(&serde_json::Value::String(name.clone()))?;
            let m = if let Some(rows) = data.get("matrix") {
                let rows = rows
                    .as_array()
                    .ok_or_else(|| Error::Parse("matrix must be a list of rows".into()))?
                    .iter()
                    .map(|r| json_vector(a.field(), r, a.dim()))
                    .collect::<Result<Vec<_>>>()?;
                if rows.len() != a.dim() {
                    return Err(Error::InvalidAction(format!("matrix of {name} has the wrong shape")));
                }
                Matrix::from_rows(a.field(), rows)
            } else {
                let pa = pa.ok_or_else(|| {
                    Error::InvalidAction("permutation data needs an algebra given by a presentation".into())
                })?;
                let perm = |key: &str| -> Result<BTreeMap<String, String>> {
                    match data.get(key) {
                        None => Ok(BTreeMap::new()),
                        Some(obj) => obj
                            .as_object()
                            .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an object")))?
                            .iter()
                            .map(|(k, x)| {
                                x.as_str()
                                    .map(|s| (k.clone(), s.to_string()))
                                    .ok_or_else(|| Error::Parse(format!("\"{key}\" values must be labels")))
                            })
                            .collect(),
                    }
                };
                permutation_matrix(pa, &perm("vertices")?, &perm("arrows")?)?
            };
            generators.push((g, m));
        }
        Self::from_generators(a, elements, table, generators)
    }
}

fn full_permutation(labels: &[String], moved: &BTreeMap<String, String>, what: &str) -> Result<Vec<usize>> {
    let find = |s: &str| -> Result<usize> {
        labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::InvalidAction(format!("unknown {what} {s}")))
    };
    let mut perm: Vec<usize> = (0..labels.len()).collect();
    for (from, to) in moved {
        perm[find(from)?] = find(to)?;
    }
    let mut seen = perm.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != labels.len() {
        return Err(Error::InvalidAction(format!("the {what} map is not a permutation")));
    }
    Ok(perm)
}

/// The linear map on `kQ/I` induced by permutations of vertices and arrows
/// (moved labels only). It is an automorphism only if the permutation
/// preserves `I`, which [`GroupAction::validate`] checks.
pub fn permutation_matrix(
    pa: &PathAlgebra,
    vertices: &BTreeMap<String, String>,
    arrows: &BTreeMap<String, String>,
) -> Result<Matrix> {
    let q = pa.presentation().quiver();
    let vperm = full_permutation(q.vertices(), vertices, "vertex")?;
    let arrow_labels: Vec<String> = q.arrows().iter().map(|a| a.label.clone()).collect();
    let aperm = full_permutation(&arrow_labels, arrows, "arrow")?;
    for (i, ar) in q.arrows().iter().enumerate() {
        let img = q.arrow(aperm[i]);
        if img.source != vperm[ar.source] || img.target != vperm[ar.target] {
            return Err(Error::InvalidAction(format!(
                "arrow {} is not sent to an arrow between the image vertices",
                ar.label
            )));
        }
    }
    let cols: Vec<Vector> = pa
        .basis()
        .iter()
        .map(|p| {
            let img = if p.is_trivial() {
                Path::trivial(vperm[p.source()])
            } else {
                Path::from_arrows(q, p.arrows().iter().map(|&x| aperm[x]).collect())
                    .expect("arrow permutation respects composability")
            };
            pa.reduce_path(&img)
        })
        .collect();
    Ok(Matrix::from_columns(pa.presentation().field(), pa.basis().len(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::tests::diamond;

    const SWAP: &str = r#"{ "elements": ["e", "s"], "table": [["e", "s"], ["s", "e"]],
        "generators": { "s": { "vertices": {"2": "3", "3": "2"}, "arrows": {"a": "c", "c": "a", "b": "d", "d": "b"} } } }"#;

    #[test]
    fn swap_must_preserve_relations() {
        let pa = PathAlgebra::new(&diamond("b*a")).unwrap();
        let err = GroupAction::from_json(SWAP, pa.algebra(), Some(&pa)).unwrap_err();
        assert_eq!(err.name(), "InvalidAction");
        let pa = PathAlgebra::new(&diamond("b*a\nd*c")).unwrap();
        let g = GroupAction::from_json(SWAP, pa.algebra(), Some(&pa)).unwrap();
        assert_eq!(g.order(), 2);
        assert!(!g.is_trivial());
    }

    #[test]
    fn bad_tables_are_rejected() {
        let pa = PathAlgebra::new(&diamond("b*a")).unwrap();
        let a = pa.algebra();
        let err = GroupAction::from_matrices(
            a,
            vec!["e".into(), "g".into()],
            vec![vec![0, 1], vec![1, 1]],
            vec![Matrix::identity(a.field(), a.dim()); 2],
        )
        .unwrap_err();
        assert_eq!(err.name(), "InvalidAction");
    }
}
