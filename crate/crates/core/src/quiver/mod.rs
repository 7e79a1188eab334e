//! Quivers, paths, relations and presentations `kQ/I`.

mod parse;
mod path_algebra;

pub use parse::{parse_path, parse_presentation};
pub use path_algebra::{admissible_check, path_basis_algebra, AdmissibleReport, PathAlgebra};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

pub const DEFAULT_NILPOTENCY_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.as_str(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex label {v}")));
            }
        }
        let mut seen_arrows = HashMap::new();
        for a in &arrows {
            if seen_arrows.insert(a.label.as_str(), ()).is_some() {
                return Err(Error::Parse(format!("duplicate arrow label {}", a.label)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::UnknownVertex(format!("endpoint of arrow {}", a.label)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from `(label, source label, target label)` triples.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let idx = |l: &str| {
            vs.iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::UnknownVertex(l.to_string()))
        };
        let mut arr = Vec::new();
        for (l, s, t) in arrows {
            arr.push(Arrow {
                label: l.to_string(),
                source: idx(s)?,
                target: idx(t)?,
            });
        }
        Quiver::new(vs, arr)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }
    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].source == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].target == v)
    }

    /// Components of the underlying undirected graph, each sorted, ordered
    /// by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for a in &self.arrows {
            let (ra, rb) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// All paths of length `len`, in lexicographic order of their arrow
    /// index sequences (traversal order).
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut level: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &level {
                let end = p.target(self);
                for a in self.out_arrows(end) {
                    next.push(p.then(a));
                }
            }
            level = next;
        }
        if len > 0 {
            level.sort_by(|x, y| x.arrows.cmp(&y.arrows));
        }
        level
    }
}

/// A path, stored as its start vertex and its arrows in traversal order.
/// Displayed right to left: the path "a then b" prints as `b*a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path {
            start: q.arrows[a].source,
            arrows: vec![a],
        }
    }

    /// From arrows in traversal order; checks composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::NonComposablePath("empty arrow list".into()))?;
        for w in arrows.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                return Err(Error::NonComposablePath(format!(
                    "{} ends at {} but {} starts at {}",
                    q.arrows[w[0]].label,
                    q.vertices[q.arrows[w[0]].target],
                    q.arrows[w[1]].label,
                    q.vertices[q.arrows[w[1]].source]
                )));
            }
        }
        Ok(Path {
            start: q.arrows[first].source,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }

    /// Arrow indices in traversal order.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// This path followed by arrow `a` (caller ensures composability).
    pub fn then(&self, a: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            start: self.start,
            arrows,
        }
    }

    /// Arrow `a` followed by this path.
    pub fn after_arrow(&self, q: &Quiver, a: usize) -> Path {
        let mut arrows = vec![a];
        arrows.extend_from_slice(&self.arrows);
        Path {
            start: q.arrows[a].source,
            arrows,
        }
    }

    /// The algebra product `self * other`, i.e. `other` first, if the
    /// endpoints match.
    pub fn compose(&self, q: &Quiver, other: &Path) -> Option<Path> {
        if other.target(q) != self.start {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            start: other.start,
            arrows,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices[self.start]);
        }
        self.arrows
            .iter()
            .rev()
            .map(|&a| q.arrows[a].label.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A linear combination of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(Scalar, Path)>,
}

impl Relation {
    /// Combines repeated paths and drops zero coefficients; checks that all
    /// paths are parallel.
    pub fn new(q: &Quiver, terms: Vec<(Scalar, Path)>) -> Result<Self> {
        let mut combined: Vec<(Scalar, Path)> = Vec::new();
        for (c, p) in terms {
            match combined.iter_mut().find(|(_, x)| *x == p) {
                Some(entry) => entry.0 += &c,
                None => combined.push((c, p)),
            }
        }
        combined.retain(|(c, _)| !c.is_zero());
        if let Some((_, p0)) = combined.first() {
            let (s, t) = (p0.source(), p0.target(q));
            for (_, p) in &combined[1..] {
                if p.source() != s || p.target(q) != t {
                    return Err(Error::NonParallelRelation(format!(
                        "{} and {} are not parallel",
                        p0.display(q),
                        p.display(q)
                    )));
                }
            }
        }
        Ok(Relation { terms: combined })
    }

    pub fn monomial(path: Path, field: &FieldSpec) -> Self {
        Relation {
            terms: vec![(field.one(), path)],
        }
    }

    pub fn terms(&self) -> &[(Scalar, Path)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single path of a monomial relation with coefficient 1.
    pub fn as_unit_monomial(&self) -> Option<&Path> {
        match self.terms.as_slice() {
            [(c, p)] if c.is_one() => Some(p),
            _ => None,
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                if mag.contains(['(', '+']) || mag.contains(" ") {
                    out.push_str(&format!("({mag}) "));
                } else {
                    out.push_str(&format!("{mag} "));
                }
            }
            out.push_str(&p.display(q));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    nilpotency_cap: usize,
}

impl Presentation {
    pub fn new(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>) -> Self {
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Presentation {
            field,
            quiver,
            relations,
            nilpotency_cap: DEFAULT_NILPOTENCY_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.nilpotency_cap = cap;
        self
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub fn nilpotency_cap(&self) -> usize {
        self.nilpotency_cap
    }

    /// The same quiver with extra relations appended.
    pub fn with_relations(&self, extra: Vec<Relation>) -> Presentation {
        let mut p = self.clone();
        p.relations.extend(extra.into_iter().filter(|r| !r.is_zero()));
        p
    }

    /// Parses relation expressions against this quiver.
    pub fn parse_relations(&self, texts: &[&str]) -> Result<Vec<Relation>> {
        texts
            .iter()
            .map(|t| parse::parse_relation_line(&self.field, &self.quiver, t, 1))
            .collect()
    }

    /// Same presentation over another field; coefficients must be rational.
    pub fn over_field(&self, field: &FieldSpec) -> Result<Presentation> {
        let mut relations = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for (c, p) in r.terms() {
                let q = c
                    .as_rational()
                    .ok_or_else(|| Error::FieldMismatch("relation coefficient is not rational".into()))?;
                terms.push((field.from_rational(&q)?, p.clone()));
            }
            relations.push(Relation::new(&self.quiver, terms)?);
        }
        Ok(Presentation {
            field: field.clone(),
            quiver: self.quiver.clone(),
            relations,
            nilpotency_cap: self.nilpotency_cap,
        })
    }

    /// Reorders and renames vertices and arrows: the old vertex `v` moves to
    /// position `vertex_perm[v]`, the old arrow `a` to `arrow_perm[a]`.
    pub fn relabel(
        &self,
        vertex_perm: &[usize],
        arrow_perm: &[usize],
        vertex_label: impl Fn(&str) -> String,
        arrow_label: impl Fn(&str) -> String,
    ) -> Result<Presentation> {
        let q = &self.quiver;
        let mut vertices = vec![String::new(); q.vertex_count()];
        for (old, &new) in vertex_perm.iter().enumerate() {
            vertices[new] = vertex_label(&q.vertices[old]);
        }
        let mut arrows: Vec<Option<Arrow>> = vec![None; q.arrow_count()];
        for (old, &new) in arrow_perm.iter().enumerate() {
            let a = &q.arrows[old];
            arrows[new] = Some(Arrow {
                label: arrow_label(&a.label),
                source: vertex_perm[a.source],
                target: vertex_perm[a.target],
            });
        }
        let quiver = Quiver::new(vertices, arrows.into_iter().map(|a| a.unwrap()).collect())?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let terms = r
                .terms()
                .iter()
                .map(|(c, p)| {
                    let path = if p.is_trivial() {
                        Path::trivial(vertex_perm[p.start])
                    } else {
                        Path {
                            start: vertex_perm[p.start],
                            arrows: p.arrows.iter().map(|&a| arrow_perm[a]).collect(),
                        }
                    };
                    (c.clone(), path)
                })
                .collect();
            relations.push(Relation::new(&quiver, terms)?);
        }
        Ok(Presentation {
            field: self.field.clone(),
            quiver,
            relations,
            nilpotency_cap: self.nilpotency_cap,
        })
    }

    /// The opposite presentation: every arrow reversed, every path read
    /// backwards. Presents the opposite algebra.
    pub fn opposite(&self) -> Result<Presentation> {
        let q = &self.quiver;
        let arrows = q
            .arrows
            .iter()
            .map(|a| Arrow {
                label: a.label.clone(),
                source: a.target,
                target: a.source,
            })
            .collect();
        let quiver = Quiver::new(q.vertices.clone(), arrows)?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let terms = r
                .terms()
                .iter()
                .map(|(c, p)| {
                    let path = Path {
                        start: p.target(q),
                        arrows: p.arrows.iter().rev().copied().collect(),
                    };
                    (c.clone(), path)
                })
                .collect();
            relations.push(Relation::new(&quiver, terms)?);
        }
        Ok(Presentation {
            field: self.field.clone(),
            quiver,
            relations,
            nilpotency_cap: self.nilpotency_cap,
        })
    }

    /// The presentation in the text format accepted by
    /// [`parse_presentation`].
    pub fn to_text(&self) -> String {
        let q = &self.quiver;
        let mut s = format!("field {}\nvertices {}\n", self.field.descriptor(), q.vertices.join(" "));
        for a in &q.arrows {
            s.push_str(&format!(
                "arrow {} : {} -> {}\n",
                a.label, q.vertices[a.source], q.vertices[a.target]
            ));
        }
        if !self.relations.is_empty() {
            s.push_str("relations\n");
            for r in &self.relations {
                s.push_str(&format!("  {}\n", r.display(q)));
            }
            s.push_str("end\n");
        }
        if self.nilpotency_cap != DEFAULT_NILPOTENCY_CAP {
            s.push_str(&format!("cap {}\n", self.nilpotency_cap));
        }
        s
    }

    /// The sub-presentation on a set of vertices (closed under the arrows
    /// between them), e.g. a connected component.
    pub fn restrict_to(&self, vertices: &[usize]) -> Result<Presentation> {
        let q = &self.quiver;
        let vmap: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let keep: Vec<usize> = (0..q.arrow_count())
            .filter(|&a| vmap.contains_key(&q.arrows[a].source) && vmap.contains_key(&q.arrows[a].target))
            .collect();
        let amap: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let quiver = Quiver::new(
            vertices.iter().map(|&v| q.vertices[v].clone()).collect(),
            keep.iter()
                .map(|&a| Arrow {
                    label: q.arrows[a].label.clone(),
                    source: vmap[&q.arrows[a].source],
                    target: vmap[&q.arrows[a].target],
                })
                .collect(),
        )?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let Some((_, p0)) = r.terms().first() else { continue };
            if !vmap.contains_key(&p0.start) {
                continue;
            }
            let terms = r
                .terms()
                .iter()
                .map(|(c, p)| {
                    (
                        c.clone(),
                        Path {
                            start: vmap[&p.start],
                            arrows: p.arrows.iter().map(|a| amap[a]).collect(),
                        },
                    )
                })
                .collect();
            relations.push(Relation::new(&quiver, terms)?);
        }
        Ok(Presentation {
            field: self.field.clone(),
            quiver,
            relations,
            nilpotency_cap: self.nilpotency_cap,
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
