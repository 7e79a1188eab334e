//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output; exits nonzero if any
//! criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;

use quiveralg::algebra::basic_reduction;
use quiveralg::complex::{
    finiteness_sampler, lemma_bound, lemma_iso_roundtrip, minimal_proj_resolution, module_from_representation,
    random_complex, simple_module, DimVector, ProjAlgebra, FINITE_FIELD_CAVEAT,
};
use quiveralg::extension::{
    base_change, parse_extension, quotient_extension, run_consistency_experiment, separability_idempotent,
    skew_group_algebra, split_witness, verify_separability, verify_split, witness_report, ExperimentMode,
    ExtensionMorphism, GroupAction, Outcome,
};
use quiveralg::gentle::{classify_derived_discrete, cycle_structure, clock_counts};
use quiveralg::algebra::gabriel_quiver;
use quiveralg::linalg::Matrix;
use quiveralg::quiver::{parse_presentation, path_basis_algebra, PathAlgebra, Presentation};
use quiveralg::seeded_rng;

/// Wall-clock limit for a single `classify` invocation.
const CLASSIFY_LIMIT: Duration = Duration::from_secs(1);
/// Random complexes per fixture algebra.
const MINIMIZE_SAMPLES: usize = 500;
/// Largest resolution depth checked against the bound.
const BOUND_MAX_DEPTH: usize = 6;
/// Largest total module dimension enumerated over F_3.
const ROUNDTRIP_MAX_DIM: usize = 3;
/// Candidate budget for each exhaustive isomorphism search.
const SEARCH_BUDGET: u64 = 1 << 16;

type Check = Result<String, String>;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture_path(name: &str) -> PathBuf {
    root().join("fixtures").join(name)
}

fn load(name: &str) -> Presentation {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_presentation(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn all_presentations() -> Vec<(String, Presentation)> {
    let mut names: Vec<String> = std::fs::read_dir(root().join("fixtures"))
        .unwrap()
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".quiver"))
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

fn proj(name: &str) -> Arc<ProjAlgebra> {
    Arc::new(ProjAlgebra::from_presentation(&load(name)).unwrap())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn quotient_ba_dc() -> ExtensionMorphism {
    let p = load("diamond_ba.quiver");
    let rels = p.parse_relations(&["d*c"]).unwrap();
    quotient_extension(&p, rels).unwrap()
}

fn base_change_sqrt2(file: &str) -> ExtensionMorphism {
    let p = load(file);
    let pa = PathAlgebra::new(&p).unwrap();
    let k = parse_extension("Q[x]/(x^2-2)").unwrap();
    base_change(pa.algebra(), &k).unwrap().with_source_presentation(p)
}

fn trivial_skew(file: &str) -> ExtensionMorphism {
    let p = load(file);
    let pa = PathAlgebra::new(&p).unwrap();
    let g = GroupAction::cyclic_trivial(pa.algebra(), 2);
    skew_group_algebra(pa.algebra(), &g).unwrap().with_source_presentation(p)
}

fn c1_classify_clock() -> Check {
    let mut detail = Vec::new();
    for (file, code, counts) in [("diamond_ba.quiver", 0, "(1, 0)"), ("diamond_ba_dc.quiver", 2, "(1, 1)")] {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_quiveralg"))
            .arg("classify")
            .arg(fixture_path(file))
            .output()
            .map_err(err)?;
        let elapsed = start.elapsed();
        let text = String::from_utf8_lossy(&out.stdout);
        let expected = if code == 0 { "DerivedDiscrete(" } else { "NotDerivedDiscrete(" };
        ensure(text.starts_with(expected), || format!("{file}: {text}"))?;
        ensure(text.contains(&format!("clock counts {counts}")), || format!("{file}: {text}"))?;
        ensure(out.status.code() == Some(code), || format!("{file}: exit {:?}", out.status.code()))?;
        ensure(elapsed < CLASSIFY_LIMIT, || format!("{file}: took {elapsed:?}"))?;
        detail.push(format!("{file} {counts} in {} ms", elapsed.as_millis()));
    }
    Ok(detail.join("; "))
}

fn c2_quotient_witnesses() -> Check {
    let phi = quotient_ba_dc();
    let cert = separability_idempotent(&phi).ok_or("no separability idempotent")?;
    ensure(verify_separability(&phi, &cert), || "certificate fails re-verification".into())?;
    let w = witness_report(&phi, 0).map_err(err)?;
    ensure(!w.right_projective.projective, || "B_A reported projective".into())?;
    Ok("separable (re-verified), B_A not projective".into())
}

fn c3_split_and_separable() -> Check {
    for (name, phi) in [
        ("base change x^2-2", base_change_sqrt2("diamond_ba.quiver")),
        ("skew Z/2", trivial_skew("diamond_ba.quiver")),
    ] {
        let pi = split_witness(&phi).ok_or_else(|| format!("{name}: no split retraction"))?;
        ensure(verify_split(&phi, &pi), || format!("{name}: retraction fails re-verification"))?;
        let cert = separability_idempotent(&phi).ok_or_else(|| format!("{name}: no separability idempotent"))?;
        ensure(verify_separability(&phi, &cert), || format!("{name}: idempotent fails re-verification"))?;
    }
    let phi = trivial_skew("diamond_ba_f2.quiver");
    ensure(separability_idempotent(&phi).is_none(), || "F_2 skew Z/2 has a separability idempotent".into())?;
    Ok("both witnesses re-verified for base change and skew; absent over F_2".into())
}

fn c4_consistency() -> Check {
    let mut runs = 0;
    for (name, phi) in [
        ("base change", base_change_sqrt2("diamond_ba.quiver")),
        ("skew", trivial_skew("diamond_ba.quiver")),
        ("base change dc", base_change_sqrt2("diamond_ba_dc.quiver")),
        ("skew dc", trivial_skew("diamond_ba_dc.quiver")),
    ] {
        for mode in [ExperimentMode::Theorem41, ExperimentMode::Prop53] {
            let r = run_consistency_experiment(&phi, mode, 0).map_err(err)?;
            ensure(r.outcome == Outcome::Consistent, || format!("{name} {mode:?}: {:?}", r.outcome))?;
            for b in &r.target.blocks {
                ensure(b.verdict == r.source.overall, || {
                    format!("{name} {mode:?}: block {} vs A {}", b.verdict, r.source.overall)
                })?;
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs CONSISTENT, block verdicts equal A's"))
}

fn c5_bound() -> Check {
    let mut cases = 0;
    for file in ["diamond_ba.quiver", "diamond_ba_dc.quiver", "dual_numbers.quiver"] {
        let base = proj(file);
        for v in 0..base.vertex_count() {
            let s = simple_module(&base, v);
            for depth in 1..=BOUND_MAX_DEPTH {
                let r = minimal_proj_resolution(&base, &s, depth).map_err(err)?;
                let dims = r.complex.component_dim_vector();
                let bound = lemma_bound(&base, &DimVector::delta(0, s.dim), -(depth as i64));
                ensure(dims.le(&bound), || format!("{file} S{v} depth {depth}: {dims} > {bound}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases}/{cases} cases within the bound"))
}

fn c6_minimize() -> Check {
    let mut total = 0;
    for file in ["diamond_ba.quiver", "diamond_ba_dc.quiver", "dual_numbers.quiver", "a3.quiver"] {
        let base = proj(file);
        let mut rng = seeded_rng(6);
        for i in 0..MINIMIZE_SAMPLES {
            let len = rng.gen_range(1..=4);
            let terms: Vec<Vec<usize>> = (0..len)
                .map(|_| (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..base.vertex_count())).collect())
                .collect();
            let lo = rng.gen_range(-2..=1);
            let c = random_complex(&base, lo, terms, &mut rng, 2);
            ensure(c.is_complex(), || format!("{file} #{i}: input d^2 != 0"))?;
            let m = c.minimize();
            ensure(m.is_complex(), || format!("{file} #{i}: output d^2 != 0"))?;
            ensure(m.is_homotopically_minimal(), || format!("{file} #{i}: output not minimal"))?;
            ensure(m.cohomology_dim_vector() == c.cohomology_dim_vector(), || {
                format!("{file} #{i}: cohomology changed")
            })?;
            ensure(m.component_dim_vector().le(&c.component_dim_vector()), || {
                format!("{file} #{i}: component dims grew")
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} complexes over 4 algebras"))
}

/// Every representation of total dimension at most `max_dim`, in a fixed
/// order.
fn representations(base: &ProjAlgebra, p: &Presentation, max_dim: usize) -> Vec<quiveralg::algebra::LeftModule> {
    let q = p.quiver();
    let field = p.field();
    let elems = field.elements().expect("finite field");
    let n = q.vertex_count();
    let mut dim_vectors = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for d in &dim_vectors {
            let used: usize = d.iter().sum();
            for k in 0..=max_dim - used {
                let mut e: Vec<usize> = d.clone();
                e.push(k);
                next.push(e);
            }
        }
        dim_vectors = next;
    }
    let mut out = Vec::new();
    for dims in dim_vectors.into_iter().filter(|d| d.iter().sum::<usize>() > 0) {
        let shapes: Vec<(usize, usize)> =
            q.arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let mut digits = vec![0usize; entries];
        loop {
            let mut k = 0;
            let mats: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let mut m = Matrix::zeros(field, r, c);
                    for i in 0..r {
                        for j in 0..c {
                            m.set(i, j, elems[digits[k]].clone());
                            k += 1;
                        }
                    }
                    m
                })
                .collect();
            if let Ok(m) = module_from_representation(base, &dims, &mats) {
                out.push(m);
            }
            let mut pos = 0;
            while pos < entries && digits[pos] + 1 == elems.len() {
                digits[pos] = 0;
                pos += 1;
            }
            if pos == entries {
                break;
            }
            digits[pos] += 1;
        }
    }
    out
}

fn c7_truncation_roundtrip() -> Check {
    let mut pairs = 0;
    let mut equivalent = 0;
    for file in ["diamond_ba_f3.quiver", "diamond_ba_dc_f3.quiver"] {
        let p = load(file);
        let base = Arc::new(ProjAlgebra::from_presentation(&p).map_err(err)?);
        let modules = representations(&base, &p, ROUNDTRIP_MAX_DIM);
        let t = -1;
        let depth = 3;
        let truncated: Vec<_> = modules
            .iter()
            .map(|m| minimal_proj_resolution(&base, m, depth).map(|r| r.complex.brutal_truncate(t).term_data()))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for i in 0..modules.len() {
            for j in i..modules.len() {
                pairs += 1;
                // Different term data: the minimal truncations are not
                // isomorphic, so the implication holds vacuously.
                if truncated[i] != truncated[j] {
                    continue;
                }
                let r = lemma_iso_roundtrip(&base, &modules[i], &modules[j], t, 0, SEARCH_BUDGET).map_err(err)?;
                ensure(r.consistent, || format!("{file}: counterexample at modules {i}, {j}"))?;
                ensure(r.truncations_equivalent.is_some() && r.modules_isomorphic.is_some(), || {
                    format!("{file}: search inconclusive at modules {i}, {j}")
                })?;
                if r.truncations_equivalent == Some(true) {
                    equivalent += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} module pairs, {equivalent} with equivalent truncations, 0 counterexamples"))
}

fn c8_sampler() -> Check {
    let mut detail = Vec::new();
    for file in ["diamond_ba_f2.quiver", "diamond_ba_f3.quiver"] {
        let base = proj(file);
        for cdim in [DimVector::from_pairs(&[(-1, 1), (0, 2)]), DimVector::from_pairs(&[(-1, 2), (0, 1)])] {
            let first = finiteness_sampler(&base, &cdim, false, quiveralg::complex::DEFAULT_SAMPLER_BUDGET)
                .map_err(err)?;
            let again = finiteness_sampler(&base, &cdim, false, quiveralg::complex::DEFAULT_SAMPLER_BUDGET)
                .map_err(err)?;
            ensure(first.to_json() == again.to_json(), || format!("{file} {cdim}: re-run differs"))?;
            ensure(first.caveat == FINITE_FIELD_CAVEAT, || format!("{file}: caveat missing"))?;
            detail.push(format!("{file} {cdim}: {}", first.class_count));
        }
    }
    Ok(detail.join("; "))
}

fn multiplicities(p: &Presentation) -> Vec<Vec<usize>> {
    let n = p.quiver().vertex_count();
    let mut m = vec![vec![0; n]; n];
    for a in p.quiver().arrows() {
        m[a.source][a.target] += 1;
    }
    m
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn same_up_to_relabel(x: &[Vec<usize>], y: &[Vec<usize>]) -> bool {
    x.len() == y.len()
        && permutations(x.len())
            .iter()
            .any(|s| (0..x.len()).all(|i| (0..x.len()).all(|j| x[i][j] == y[s[i]][s[j]])))
}

fn c9_gabriel_roundtrip() -> Check {
    let fixtures = all_presentations();
    for (name, p) in &fixtures {
        let a = path_basis_algebra(p).map_err(err)?;
        let g = gabriel_quiver(&a, None, 0).map_err(|e| format!("{name}: {e}"))?;
        let q = &g.presentation;
        ensure(q.quiver().vertex_count() == p.quiver().vertex_count(), || format!("{name}: vertex count"))?;
        ensure(same_up_to_relabel(&multiplicities(p), &multiplicities(q)), || {
            format!("{name}: arrow multiplicities differ")
        })?;
    }
    let p = load("two_points.quiver");
    let pa = PathAlgebra::new(&p).map_err(err)?;
    let text = std::fs::read_to_string(fixture_path("two_points_swap.json")).map_err(err)?;
    let swap = GroupAction::from_json(&text, pa.algebra(), Some(&pa)).map_err(err)?;
    let skew = skew_group_algebra(pa.algebra(), &swap).map_err(err)?;
    let basic = basic_reduction(skew.target(), 0).map_err(err)?;
    ensure(basic.algebra.dim() == 1, || format!("basic reduction has dimension {}", basic.algebra.dim()))?;
    Ok(format!("{} fixtures; basic reduction of the swap skew algebra has dimension 1", fixtures.len()))
}

fn c10_invariance() -> Check {
    let fixtures = all_presentations();
    let mut variants = 0;
    for (name, p) in &fixtures {
        let base = classify_derived_discrete(p).overall;
        let q = p.quiver();
        let vperm: Vec<usize> = (0..q.vertex_count()).rev().collect();
        let aperm: Vec<usize> = (0..q.arrow_count()).rev().collect();
        let relabeled = p
            .relabel(&vperm, &aperm, |v| format!("v{v}"), |a| format!("x{a}"))
            .map_err(err)?;
        for (kind, other) in [("relabel", relabeled), ("opposite", p.opposite().map_err(err)?)] {
            let v = classify_derived_discrete(&other).overall;
            ensure(v == base, || format!("{name} {kind}: {v} vs {base}"))?;
            variants += 1;
        }
        for comp in cycle_structure(p).components {
            if let Some(cycle) = &comp.cycle {
                let forward = clock_counts(p, &comp.vertices, cycle);
                let backward = clock_counts(p, &comp.vertices, &cycle.reversed());
                ensure(forward.holds == backward.holds, || format!("{name}: clock verdict depends on direction"))?;
                ensure(
                    forward.clockwise == backward.counterclockwise && forward.counterclockwise == backward.clockwise,
                    || format!("{name}: reversal does not swap the counts"),
                )?;
                variants += 1;
            }
        }
    }
    Ok(format!("{} fixtures, {variants} variants agree", fixtures.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("classify: clock counts (1,0) and (1,1), under 1 s", c1_classify_clock),
        ("quotient: separable, B_A not projective", c2_quotient_witnesses),
        ("base change and skew: split and separable", c3_split_and_separable),
        ("theorem41 and prop53 consistent", c4_consistency),
        ("resolutions within the dimension bound", c5_bound),
        ("minimization on random complexes", c6_minimize),
        ("truncated resolutions detect isomorphism over F_3", c7_truncation_roundtrip),
        ("finite-field sampler stable with caveat", c8_sampler),
        ("Gabriel quiver roundtrip and basic reduction", c9_gabriel_roundtrip),
        ("relabel and reversal invariance", c10_invariance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
