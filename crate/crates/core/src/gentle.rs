//! The combinatorial criterion for derived-discreteness of a presentation:
//! gentle one-cycle quivers with the clock condition, and hereditary
//! algebras of Dynkin type.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::quiver::{Path, Presentation, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GentleReport {
    pub gentle: bool,
    pub violations: Vec<String>,
}

/// Quadratic monomial relations as arrow pairs `(first, second)` in
/// traversal order, or `None` if some relation is not of that form.
fn quadratic_monomials(p: &Presentation) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for r in p.relations() {
        match r.terms() {
            [(c, path)] if !c.is_zero() && path.len() == 2 => out.push((path.arrows()[0], path.arrows()[1])),
            _ => return None,
        }
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// Checks the gentle conditions: monomial quadratic relations, at most two
/// arrows in and out of each vertex, and for every arrow `b` at most one
/// arrow `a` with `ba` in `I` and at most one composable `a'` with `ba'`
/// not in `I`, and dually on the other side.
pub fn is_gentle(p: &Presentation) -> GentleReport {
    let q = p.quiver();
    let mut violations = Vec::new();
    let rels = match quadratic_monomials(p) {
        Some(r) => r,
        None => {
            for r in p.relations() {
                let ok = matches!(r.terms(), [(c, path)] if !c.is_zero() && path.len() == 2);
                if !ok {
                    violations.push(format!("relation {} is not a monomial of length 2", r.display(q)));
                }
            }
            Vec::new()
        }
    };
    for v in 0..q.vertex_count() {
        let outs = q.out_arrows(v).count();
        let ins = q.in_arrows(v).count();
        if outs > 2 {
            violations.push(format!("vertex {} has {outs} outgoing arrows", q.vertex_label(v)));
        }
        if ins > 2 {
            violations.push(format!("vertex {} has {ins} incoming arrows", q.vertex_label(v)));
        }
    }
    if violations.is_empty() {
        let zero = |a: usize, b: usize| rels.contains(&(a, b));
        for b in 0..q.arrow_count() {
            let label = &q.arrow(b).label;
            let before: Vec<usize> = q.in_arrows(q.arrow(b).source).collect();
            let after: Vec<usize> = q.out_arrows(q.arrow(b).target).collect();
            let killed_before = before.iter().filter(|&&a| zero(a, b)).count();
            let alive_before = before.len() - killed_before;
            let killed_after = after.iter().filter(|&&c| zero(b, c)).count();
            let alive_after = after.len() - killed_after;
            if killed_before > 1 {
                violations.push(format!("{killed_before} arrows a with {label}*a in I"));
            }
            if alive_before > 1 {
                violations.push(format!("{alive_before} arrows a with {label}*a not in I"));
            }
            if killed_after > 1 {
                violations.push(format!("{killed_after} arrows c with c*{label} in I"));
            }
            if alive_after > 1 {
                violations.push(format!("{alive_after} arrows c with c*{label} not in I"));
            }
        }
    }
    GentleReport {
        gentle: violations.is_empty(),
        violations,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Orientation {
    With,
    Against,
}

impl Orientation {
    fn flip(self) -> Self {
        match self {
            Orientation::With => Orientation::Against,
            Orientation::Against => Orientation::With,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleStep {
    pub arrow: usize,
    pub label: String,
    pub orientation: Orientation,
}

/// The unique cycle of a one-cycle component, as a closed walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Cycle {
    /// Visited vertices; the walk returns to the first one.
    pub vertices: Vec<usize>,
    pub steps: Vec<CycleStep>,
}

impl Cycle {
    /// The same cycle traversed in the opposite direction.
    pub fn reversed(&self) -> Cycle {
        let n = self.vertices.len();
        let vertices = (0..n).map(|i| self.vertices[(n - i) % n]).collect();
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| CycleStep {
                arrow: s.arrow,
                label: s.label.clone(),
                orientation: s.orientation.flip(),
            })
            .collect();
        Cycle { vertices, steps }
    }

    pub fn orientation_of(&self, arrow: usize) -> Option<Orientation> {
        self.steps.iter().find(|s| s.arrow == arrow).map(|s| s.orientation)
    }

    /// Checks that this is a closed walk through distinct vertices whose
    /// orientation flags match the arrows' directions.
    pub fn is_valid_in(&self, q: &Quiver) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.steps.len() != n {
            return false;
        }
        let mut seen = self.vertices.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != n {
            return false;
        }
        let mut arrows: Vec<usize> = self.steps.iter().map(|s| s.arrow).collect();
        arrows.sort();
        arrows.dedup();
        if arrows.len() != n {
            return false;
        }
        self.steps.iter().enumerate().all(|(i, s)| {
            let (from, to) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let a = q.arrow(s.arrow);
            match s.orientation {
                Orientation::With => a.source == from && a.target == to,
                Orientation::Against => a.target == from && a.source == to,
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentCycles {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
    /// First Betti number `edges - vertices + 1` of the underlying graph.
    pub betti: usize,
    pub cycle: Option<Cycle>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleReport {
    pub components: Vec<ComponentCycles>,
}

fn component_arrows(q: &Quiver, vertices: &[usize]) -> Vec<usize> {
    (0..q.arrow_count()).filter(|&a| vertices.contains(&q.arrow(a).source)).collect()
}

/// Extracts the cycle of a component with Betti number 1 by pruning
/// leaves, then walks it from its smallest vertex along the lowest-index
/// arrow.
fn extract_cycle(q: &Quiver, vertices: &[usize], arrows: &[usize]) -> Cycle {
    let mut alive_v: Vec<usize> = vertices.to_vec();
    let mut alive_a: Vec<usize> = arrows.to_vec();
    loop {
        let leaf = alive_v.iter().copied().find(|&v| {
            alive_a
                .iter()
                .map(|&a| (q.arrow(a).source == v) as usize + (q.arrow(a).target == v) as usize)
                .sum::<usize>()
                <= 1
        });
        match leaf {
            Some(v) => {
                alive_v.retain(|&w| w != v);
                alive_a.retain(|&a| q.arrow(a).source != v && q.arrow(a).target != v);
            }
            None => break,
        }
    }
    let start = *alive_v.iter().min().expect("a one-cycle component has a cycle");
    let mut cycle_vertices = vec![start];
    let mut steps = Vec::new();
    let mut used: Vec<usize> = Vec::new();
    let mut current = start;
    while steps.len() < alive_a.len() {
        let next = alive_a
            .iter()
            .copied()
            .filter(|a| !used.contains(a))
            .find(|&a| q.arrow(a).source == current || q.arrow(a).target == current)
            .expect("cycle is connected");
        let ar = q.arrow(next);
        let (orientation, to) = if ar.source == current {
            (Orientation::With, ar.target)
        } else {
            (Orientation::Against, ar.source)
        };
        used.push(next);
        steps.push(CycleStep {
            arrow: next,
            label: ar.label.clone(),
            orientation,
        });
        if to != start {
            cycle_vertices.push(to);
        }
        current = to;
    }
    Cycle {
        vertices: cycle_vertices,
        steps,
    }
}

pub fn cycle_structure(p: &Presentation) -> CycleReport {
    let q = p.quiver();
    let components = q
        .connected_components()
        .into_iter()
        .map(|vs| {
            let arrows = component_arrows(q, &vs);
            let betti = arrows.len() + 1 - vs.len();
            let cycle = (betti == 1).then(|| extract_cycle(q, &vs, &arrows));
            ComponentCycles {
                vertices: vs,
                arrows,
                betti,
                cycle,
            }
        })
        .collect();
    CycleReport { components }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClockCounts {
    pub clockwise: usize,
    pub counterclockwise: usize,
    pub holds: bool,
    /// Relations of the component not lying on the cycle, excluded from
    /// both counts.
    pub off_cycle: Vec<String>,
}

fn relations_in(p: &Presentation, vertices: &[usize]) -> Vec<(usize, usize)> {
    quadratic_monomials(p)
        .unwrap_or_default()
        .into_iter()
        .filter(|(a, _)| vertices.contains(&p.quiver().arrow(*a).source))
        .collect()
}

/// Counts relations along and against a given traversal of the cycle.
pub fn clock_counts(p: &Presentation, vertices: &[usize], cycle: &Cycle) -> ClockCounts {
    let q = p.quiver();
    let (mut cw, mut ccw) = (0, 0);
    let mut off_cycle = Vec::new();
    for (a, b) in relations_in(p, vertices) {
        match (cycle.orientation_of(a), cycle.orientation_of(b)) {
            (Some(Orientation::With), Some(Orientation::With)) => cw += 1,
            (Some(Orientation::Against), Some(Orientation::Against)) => ccw += 1,
            _ => off_cycle.push(format!("{}*{}", q.arrow(b).label, q.arrow(a).label)),
        }
    }
    ClockCounts {
        clockwise: cw,
        counterclockwise: ccw,
        holds: cw != ccw,
        off_cycle,
    }
}

/// The clock condition on a connected gentle presentation with exactly one
/// cycle, for the canonical traversal.
pub fn clock_condition(p: &Presentation) -> crate::Result<ClockCounts> {
    if !is_gentle(p).gentle {
        return Err(crate::Error::NotApplicable("the presentation is not gentle".into()));
    }
    let report = cycle_structure(p);
    match report.components.as_slice() {
        [c] if c.betti == 1 => Ok(clock_counts(p, &c.vertices, c.cycle.as_ref().unwrap())),
        [c] => Err(crate::Error::NotApplicable(format!(
            "the quiver has Betti number {}, not 1",
            c.betti
        ))),
        _ => Err(crate::Error::NotApplicable("the quiver is not connected".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Dynkin type of the underlying graph of a connected vertex set, if it is
/// a simply laced Dynkin diagram.
fn dynkin_graph_type(q: &Quiver, vertices: &[usize], arrows: &[usize]) -> Option<DynkinType> {
    let n = vertices.len();
    if arrows.len() + 1 != n {
        return None;
    }
    let neighbours = |v: usize| -> Vec<usize> {
        arrows
            .iter()
            .filter_map(|&a| {
                let ar = q.arrow(a);
                if ar.source == v {
                    Some(ar.target)
                } else if ar.target == v {
                    Some(ar.source)
                } else {
                    None
                }
            })
            .collect()
    };
    let branch: Vec<usize> = vertices.iter().copied().filter(|&v| neighbours(v).len() >= 3).collect();
    match branch.as_slice() {
        [] => Some(DynkinType::A(n)),
        [c] => {
            let nb = neighbours(*c);
            if nb.len() != 3 {
                return None;
            }
            let mut arms: Vec<usize> = nb
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Some(DynkinType::D(n)),
                [1, 2, 2] => Some(DynkinType::E(6)),
                [1, 2, 3] => Some(DynkinType::E(7)),
                [1, 2, 4] => Some(DynkinType::E(8)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// The Dynkin type of a connected presentation without relations whose
/// underlying graph is a Dynkin diagram.
pub fn dynkin_hereditary_type(p: &Presentation) -> Option<DynkinType> {
    let q = p.quiver();
    let comps = q.connected_components();
    if comps.len() != 1 || !p.relations().is_empty() {
        return None;
    }
    dynkin_graph_type(q, &comps[0], &component_arrows(q, &comps[0]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    DerivedDiscrete(DiscreteReason),
    NotDerivedDiscrete(NotDiscreteReason),
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscreteReason {
    GentleOneCycleClock,
    HereditaryDynkin(DynkinType),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotDiscreteReason {
    GentleOneCycleNoClock,
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::DerivedDiscrete(_) => "DerivedDiscrete",
            Verdict::NotDerivedDiscrete(_) => "NotDerivedDiscrete",
            Verdict::Unknown(_) => "Unknown",
        }
    }

    pub fn is_definite(&self) -> bool {
        !matches!(self, Verdict::Unknown(_))
    }

    /// Combines the verdicts of the connected components of one algebra.
    pub fn combine<'a>(parts: impl IntoIterator<Item = &'a Verdict>) -> Verdict {
        let mut unknown = None;
        let mut all_dd = true;
        for v in parts {
            match v {
                Verdict::NotDerivedDiscrete(_) => return v.clone(),
                Verdict::Unknown(r) => {
                    all_dd = false;
                    unknown.get_or_insert_with(|| r.clone());
                }
                Verdict::DerivedDiscrete(_) => {}
            }
        }
        if all_dd {
            Verdict::DerivedDiscrete(DiscreteReason::GentleOneCycleClock)
        } else {
            Verdict::Unknown(unknown.unwrap())
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::DerivedDiscrete(DiscreteReason::GentleOneCycleClock) => {
                write!(f, "DerivedDiscrete(GentleOneCycleClock)")
            }
            Verdict::DerivedDiscrete(DiscreteReason::HereditaryDynkin(t)) => {
                write!(f, "DerivedDiscrete(HereditaryDynkin({t}))")
            }
            Verdict::NotDerivedDiscrete(NotDiscreteReason::GentleOneCycleNoClock) => {
                write!(f, "NotDerivedDiscrete(GentleOneCycleNoClock)")
            }
            Verdict::Unknown(r) => write!(f, "Unknown({r})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("status", self.status())?;
        match self {
            Verdict::DerivedDiscrete(DiscreteReason::GentleOneCycleClock) => {
                m.serialize_entry("reason", "GentleOneCycleClock")?
            }
            Verdict::DerivedDiscrete(DiscreteReason::HereditaryDynkin(t)) => {
                m.serialize_entry("reason", "HereditaryDynkin")?;
                m.serialize_entry("type", t)?;
            }
            Verdict::NotDerivedDiscrete(_) => m.serialize_entry("reason", "GentleOneCycleNoClock")?,
            Verdict::Unknown(r) => m.serialize_entry("reason", r)?,
        }
        m.serialize_entry("text", &self.to_string())?;
        m.end()
    }
}

/// Data backing a component verdict, sufficient to recheck it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Evidence {
    pub vertex_count: usize,
    pub arrow_count: usize,
    pub betti: usize,
    pub gentle: GentleReport,
    pub cycle: Option<Cycle>,
    pub clock: Option<ClockCounts>,
    pub dynkin: Option<DynkinType>,
    pub relation_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentVerdict {
    /// Vertex labels of the component.
    pub vertices: Vec<String>,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub components: Vec<ComponentVerdict>,
    /// The verdict for the whole algebra.
    pub overall: Verdict,
}

fn classify_component(p: &Presentation) -> ComponentVerdict {
    let q = p.quiver();
    let vertices: Vec<usize> = (0..q.vertex_count()).collect();
    let arrows: Vec<usize> = (0..q.arrow_count()).collect();
    let betti = arrows.len() + 1 - vertices.len();
    let gentle = is_gentle(p);
    let dynkin = if p.relations().is_empty() {
        dynkin_graph_type(q, &vertices, &arrows)
    } else {
        None
    };
    let cycle = (betti == 1).then(|| extract_cycle(q, &vertices, &arrows));
    let clock = match (&cycle, gentle.gentle) {
        (Some(c), true) => Some(clock_counts(p, &vertices, c)),
        _ => None,
    };
    let verdict = if let Some(t) = dynkin {
        Verdict::DerivedDiscrete(DiscreteReason::HereditaryDynkin(t))
    } else if !gentle.gentle {
        Verdict::Unknown(if p.relations().is_empty() {
            "hereditary but not of Dynkin type, and not gentle".into()
        } else {
            "presentation is not gentle".into()
        })
    } else if betti != 1 {
        Verdict::Unknown(format!("gentle with Betti number {betti}, not 1"))
    } else {
        let c = clock.as_ref().unwrap();
        if c.holds {
            Verdict::DerivedDiscrete(DiscreteReason::GentleOneCycleClock)
        } else if c.off_cycle.is_empty() {
            Verdict::NotDerivedDiscrete(NotDiscreteReason::GentleOneCycleNoClock)
        } else {
            Verdict::Unknown("clock condition fails and some relations lie off the cycle".into())
        }
    };
    ComponentVerdict {
        vertices: q.vertices().to_vec(),
        verdict,
        evidence: Evidence {
            vertex_count: vertices.len(),
            arrow_count: arrows.len(),
            betti,
            gentle,
            cycle,
            clock,
            dynkin,
            relation_count: p.relations().len(),
        },
    }
}

/// Classifies each connected component of the presentation.
pub fn classify_derived_discrete(p: &Presentation) -> Classification {
    let components: Vec<ComponentVerdict> = p
        .quiver()
        .connected_components()
        .iter()
        .map(|vs| classify_component(&p.restrict_to(vs).expect("components restrict cleanly")))
        .collect();
    let overall = if components.len() == 1 {
        components[0].verdict.clone()
    } else {
        Verdict::combine(components.iter().map(|c| &c.verdict))
    };
    Classification { components, overall }
}

impl ComponentVerdict {
    /// Rechecks a definite verdict from its evidence against the
    /// presentation of the component.
    pub fn replay(&self, component: &Presentation) -> bool {
        let q = component.quiver();
        let e = &self.evidence;
        if e.vertex_count != q.vertex_count() || e.arrow_count != q.arrow_count() {
            return false;
        }
        if e.betti + q.vertex_count() != q.arrow_count() + 1 {
            return false;
        }
        match &self.verdict {
            Verdict::Unknown(_) => true,
            Verdict::DerivedDiscrete(DiscreteReason::HereditaryDynkin(t)) => {
                component.relations().is_empty() && e.betti == 0 && dynkin_size(*t) == q.vertex_count()
            }
            Verdict::DerivedDiscrete(DiscreteReason::GentleOneCycleClock)
            | Verdict::NotDerivedDiscrete(_) => {
                let (Some(cycle), Some(clock)) = (&e.cycle, &e.clock) else {
                    return false;
                };
                if e.betti != 1 || !cycle.is_valid_in(q) || !is_gentle(component).gentle {
                    return false;
                }
                let mut cw = 0;
                let mut ccw = 0;
                for r in component.relations() {
                    let Some(path) = r.terms().first().map(|(_, p)| p) else {
                        continue;
                    };
                    let o: Vec<Option<Orientation>> = path.arrows().iter().map(|&a| cycle.orientation_of(a)).collect();
                    if o.iter().all(|x| *x == Some(Orientation::With)) {
                        cw += 1;
                    } else if o.iter().all(|x| *x == Some(Orientation::Against)) {
                        ccw += 1;
                    }
                }
                let holds = cw != ccw;
                cw == clock.clockwise
                    && ccw == clock.counterclockwise
                    && holds == matches!(self.verdict, Verdict::DerivedDiscrete(_))
            }
        }
    }
}

fn dynkin_size(t: DynkinType) -> usize {
    match t {
        DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
    }
}

/// Arrow labels along the cycle, in traversal order.
pub fn cycle_path_labels(p: &Presentation, cycle: &Cycle) -> Vec<String> {
    let q = p.quiver();
    cycle
        .steps
        .iter()
        .map(|s| Path::arrow(q, s.arrow).display(q))
        .collect()
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
    fn gentleness() {
        assert!(is_gentle(&diamond("b*a")).gentle);
        assert!(is_gentle(&diamond("b*a\nd*c")).gentle);
        let r = is_gentle(&diamond("b*a - d*c"));
        assert!(!r.gentle);
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn diamond_cycle() {
        let r = cycle_structure(&diamond(""));
        assert_eq!(r.components.len(), 1);
        let c = r.components[0].cycle.as_ref().unwrap();
        assert_eq!(c.vertices, vec![0, 1, 3, 2]);
        let flags: Vec<(&str, Orientation)> = c.steps.iter().map(|s| (s.label.as_str(), s.orientation)).collect();
        assert_eq!(
            flags,
            vec![
                ("a", Orientation::With),
                ("b", Orientation::With),
                ("d", Orientation::Against),
                ("c", Orientation::Against)
            ]
        );
        assert!(c.is_valid_in(diamond("").quiver()));
        assert!(c.reversed().is_valid_in(diamond("").quiver()));
    }

    #[test]
    fn betti_numbers() {
        let a3 = parse_presentation("field Q\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\n").unwrap();
        assert_eq!(cycle_structure(&a3).components[0].betti, 0);
        let text = "field Q\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\narrow e : 1 -> 4\n";
        assert_eq!(cycle_structure(&parse_presentation(text).unwrap()).components[0].betti, 2);
    }

    #[test]
    fn clock_on_the_diamond() {
        let c = clock_condition(&diamond("b*a")).unwrap();
        assert_eq!((c.clockwise, c.counterclockwise, c.holds), (1, 0, true));
        let c = clock_condition(&diamond("b*a\nd*c")).unwrap();
        assert_eq!((c.clockwise, c.counterclockwise, c.holds), (1, 1, false));
        let a3 = parse_presentation("field Q\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\n").unwrap();
        assert_eq!(clock_condition(&a3).unwrap_err().name(), "NotApplicable");
    }

    #[test]
    fn dynkin_types() {
        let a3 = parse_presentation("field Q\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\n").unwrap();
        assert_eq!(dynkin_hereditary_type(&a3), Some(DynkinType::A(3)));
        let d4 = parse_presentation(
            "field Q\nvertices 0 1 2 3\narrow a : 1 -> 0\narrow b : 2 -> 0\narrow c : 3 -> 0\n",
        )
        .unwrap();
        assert_eq!(dynkin_hereditary_type(&d4), Some(DynkinType::D(4)));
        assert_eq!(dynkin_hereditary_type(&diamond("")), None);
        let e6 = parse_presentation(
            "field Q\nvertices 1 2 3 4 5 6\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 3 -> 4\narrow d : 4 -> 5\narrow e : 6 -> 3\n",
        )
        .unwrap();
        assert_eq!(dynkin_hereditary_type(&e6), Some(DynkinType::E(6)));
    }

    #[test]
    fn classification_examples() {
        let v = classify_derived_discrete(&diamond("b*a"));
        assert_eq!(v.overall.to_string(), "DerivedDiscrete(GentleOneCycleClock)");
        let v = classify_derived_discrete(&diamond("b*a\nd*c"));
        assert_eq!(v.overall.to_string(), "NotDerivedDiscrete(GentleOneCycleNoClock)");
        let point = parse_presentation("field Q\nvertices 1\n").unwrap();
        assert_eq!(
            classify_derived_discrete(&point).overall.to_string(),
            "DerivedDiscrete(HereditaryDynkin(A1))"
        );
        let v = classify_derived_discrete(&diamond("b*a - d*c"));
        assert_eq!(v.overall.status(), "Unknown");
        for p in [diamond("b*a"), diamond("b*a\nd*c"), point] {
            let c = classify_derived_discrete(&p);
            assert!(c.components[0].replay(&p));
        }
    }
}
