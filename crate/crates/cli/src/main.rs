//! `quiveralg`: classification, extension witnesses and complexes of
//! projectives from the command line.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use quiveralg::complex::{
    finiteness_sampler, lemma_bound, minimal_proj_resolution, projective_module, simple_module, DimVector,
    ProjAlgebra, ProjComplex, DEFAULT_SAMPLER_BUDGET,
};
use quiveralg::extension::{
    base_change, parse_extension, quotient_extension, run_consistency_experiment, separability_idempotent,
    skew_group_algebra, split_witness, verify_separability, verify_split, witness_report, ExperimentMode,
    ExtensionMorphism, GroupAction, Outcome,
};
use quiveralg::gentle::{classify_derived_discrete, Verdict};
use quiveralg::quiver::{admissible_check, parse_presentation, PathAlgebra, Presentation};
use quiveralg::Error;

use report::Report;

#[derive(Parser)]
#[command(name = "quiveralg", version, about = "Exact computations with quiver algebras, extensions and complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write a JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Nilpotency cap for presentations.
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation and check admissibility.
    Validate { file: PathBuf },
    /// Decide derived-discreteness by the gentle one-cycle criterion.
    Classify { file: PathBuf },
    /// Build an extension and describe it.
    Extend {
        #[command(subcommand)]
        kind: ExtendCommand,
    },
    /// Search for split, separability or projectivity certificates.
    Witness {
        kind: WitnessKind,
        #[command(flatten)]
        ext: ExtensionArgs,
    },
    /// Operations on complexes of projectives.
    Complex {
        #[command(subcommand)]
        op: ComplexCommand,
    },
    /// Check implications between properties of A and B on one extension.
    Experiment {
        mode: ModeArg,
        #[command(flatten)]
        ext: ExtensionArgs,
    },
}

#[derive(Subcommand)]
enum ExtendCommand {
    /// A -> A (x) K for K = Q[x]/(f).
    BaseChange {
        file: PathBuf,
        #[arg(long)]
        field: String,
    },
    /// A -> AG for a finite group acting on A.
    Skew {
        file: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// A -> A/I for extra relations.
    Quotient {
        file: PathBuf,
        #[arg(long = "add", required = true)]
        add: Vec<String>,
    },
}

#[derive(Args)]
struct ExtensionArgs {
    /// Quotient of this presentation by the `--add` relations.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["base_change", "skew"])]
    quotient: Option<PathBuf>,
    #[arg(long, value_name = "RELATION", requires = "quotient")]
    add: Vec<String>,
    /// Base change of this presentation to `--field`.
    #[arg(long, value_name = "FILE", requires = "field", conflicts_with = "skew")]
    base_change: Option<PathBuf>,
    #[arg(long, value_name = "FIELD")]
    field: Option<String>,
    /// Skew group algebra of this presentation under `--action`.
    #[arg(long, value_name = "FILE", requires = "action")]
    skew: Option<PathBuf>,
    #[arg(long, value_name = "JSON")]
    action: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    Split,
    Separable,
    Projective,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Theorem41,
    Prop51,
    Prop53,
}

#[derive(Subcommand)]
enum ComplexCommand {
    /// Cancel contractible summands until every entry is radical.
    Minimize {
        file: PathBuf,
        #[arg(long)]
        complex: PathBuf,
    },
    /// Brutal (default) or good truncation at a degree.
    Truncate {
        file: PathBuf,
        #[arg(long)]
        complex: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: i64,
        #[arg(long)]
        good: bool,
    },
    /// Minimal projective resolution of a simple or projective module.
    Resolve {
        file: PathBuf,
        #[arg(long, value_name = "VERTEX", conflicts_with = "projective", required_unless_present = "projective")]
        simple: Option<String>,
        #[arg(long, value_name = "VERTEX")]
        projective: Option<String>,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// The dimension bound for minimal complexes with given cohomology.
    Bound {
        file: PathBuf,
        /// Cohomology dimensions as `degree:dim,...`.
        #[arg(long, allow_hyphen_values = true)]
        cohomology: String,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
    },
    /// Enumerate complexes over F_p with given term dimensions.
    Sample {
        file: PathBuf,
        /// Term dimensions as `degree:dim,...`.
        #[arg(long, allow_hyphen_values = true)]
        cdim: String,
        #[arg(long)]
        radical_only: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLER_BUDGET)]
        budget: u64,
    },
}

enum Status {
    Success,
    Negative,
}

struct Failure {
    name: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            name: e.name().to_string(),
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        name: "Usage".into(),
        message: message.into(),
    }
}

type Outcome_ = Result<Status, Failure>;

struct Ctx {
    report: Report,
    seed: u64,
    cap: Option<usize>,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        self.report.read_input(path).map_err(|m| Failure { name: "Io".into(), message: m })
    }

    fn presentation(&mut self, path: &Path) -> Result<Presentation, Failure> {
        let text = self.read(path)?;
        let p = parse_presentation(&text)?;
        Ok(match self.cap {
            Some(c) => p.with_cap(c),
            None => p,
        })
    }

    fn proj_algebra(&mut self, path: &Path) -> Result<Arc<ProjAlgebra>, Failure> {
        let p = self.presentation(path)?;
        Ok(Arc::new(ProjAlgebra::from_presentation(&p)?))
    }

    fn extension(&mut self, ext: &ExtensionArgs) -> Result<ExtensionMorphism, Failure> {
        if let Some(file) = &ext.quotient {
            let p = self.presentation(file)?;
            let texts: Vec<&str> = ext.add.iter().map(String::as_str).collect();
            let rels = p.parse_relations(&texts)?;
            return Ok(quotient_extension(&p, rels)?);
        }
        if let Some(file) = &ext.base_change {
            let p = self.presentation(file)?;
            let pa = PathAlgebra::new(&p)?;
            let field = parse_extension(ext.field.as_deref().unwrap_or_default())?;
            return Ok(base_change(pa.algebra(), &field)?.with_source_presentation(p));
        }
        if let Some(file) = &ext.skew {
            let p = self.presentation(file)?;
            let pa = PathAlgebra::new(&p)?;
            let action_path = ext.action.as_ref().expect("clap requires --action");
            let text = self.read(action_path)?;
            let action = GroupAction::from_json(&text, pa.algebra(), Some(&pa))?;
            return Ok(skew_group_algebra(pa.algebra(), &action)?.with_source_presentation(p));
        }
        Err(usage("choose an extension with --quotient, --base-change or --skew"))
    }
}

fn describe_extension(ctx: &mut Ctx, phi: &ExtensionMorphism) {
    println!(
        "A: dimension {} over {}; B: dimension {}",
        phi.source().dim(),
        phi.source().field().descriptor(),
        phi.target().dim()
    );
    ctx.report.verdict("extension", phi.kind());
    ctx.report.verdict("sourceDimension", phi.source().dim());
    ctx.report.verdict("targetDimension", phi.target().dim());
    if let Some(q) = phi.target_presentation() {
        ctx.report.certificate("targetPresentation", q.to_text());
    }
}

fn validate(ctx: &mut Ctx, file: &Path) -> Outcome_ {
    let p = ctx.presentation(file)?;
    let q = p.quiver();
    println!("{} vertices, {} arrows, {} relations", q.vertex_count(), q.arrow_count(), p.relations().len());
    ctx.report.verdict("vertices", q.vertex_count());
    ctx.report.verdict("arrows", q.arrow_count());
    ctx.report.verdict("relations", p.relations().len());
    match admissible_check(&p) {
        Ok(r) => {
            let dim: usize = r.dims_by_length.iter().sum();
            println!("admissible; dimension {dim}, basis paths by length {:?}", r.dims_by_length);
            ctx.report.verdict("admissible", true);
            ctx.report.verdict("dimension", dim);
            ctx.report.verdict("dimsByLength", &r.dims_by_length);
            Ok(Status::Success)
        }
        Err(Error::NotAdmissible { reason, detail }) => {
            println!("not admissible ({reason}): {detail}");
            ctx.report.verdict("admissible", false);
            ctx.report.verdict("reason", reason);
            Ok(Status::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

fn classify(ctx: &mut Ctx, file: &Path) -> Outcome_ {
    let p = ctx.presentation(file)?;
    admissible_check(&p)?;
    let c = classify_derived_discrete(&p);
    println!("{}", c.overall);
    for comp in &c.components {
        let clock = comp
            .evidence
            .clock
            .as_ref()
            .map(|k| format!(", clock counts ({}, {})", k.clockwise, k.counterclockwise))
            .unwrap_or_default();
        println!("  component {{{}}}: {}{clock}", comp.vertices.join(", "), comp.verdict);
    }
    ctx.report.verdict("overall", &c.overall);
    ctx.report.verdict("components", &c.components);
    Ok(match c.overall {
        Verdict::NotDerivedDiscrete(_) => Status::Negative,
        _ => Status::Success,
    })
}

fn extend(ctx: &mut Ctx, kind: &ExtendCommand) -> Outcome_ {
    let args = match kind {
        ExtendCommand::BaseChange { file, field } => ExtensionArgs {
            quotient: None,
            add: vec![],
            base_change: Some(file.clone()),
            field: Some(field.clone()),
            skew: None,
            action: None,
        },
        ExtendCommand::Skew { file, action } => ExtensionArgs {
            quotient: None,
            add: vec![],
            base_change: None,
            field: None,
            skew: Some(file.clone()),
            action: Some(action.clone()),
        },
        ExtendCommand::Quotient { file, add } => ExtensionArgs {
            quotient: Some(file.clone()),
            add: add.clone(),
            base_change: None,
            field: None,
            skew: None,
            action: None,
        },
    };
    let phi = ctx.extension(&args)?;
    describe_extension(ctx, &phi);
    Ok(Status::Success)
}

fn witness(ctx: &mut Ctx, kind: WitnessKind, ext: &ExtensionArgs) -> Outcome_ {
    let phi = ctx.extension(ext)?;
    describe_extension(ctx, &phi);
    match kind {
        WitnessKind::Split => match split_witness(&phi) {
            Some(pi) => {
                let ok = verify_split(&phi, &pi);
                println!("split retraction found; re-verified: {ok}");
                ctx.report.verdict("split", true);
                ctx.report.verdict("verified", ok);
                let rows: Vec<Vec<String>> =
                    (0..pi.rows()).map(|i| pi.row(i).iter().map(|x| x.to_string()).collect()).collect();
                ctx.report.certificate("retraction", rows);
                Ok(Status::Success)
            }
            None => {
                println!("no A-bimodule retraction B -> A exists");
                ctx.report.verdict("split", false);
                Ok(Status::Negative)
            }
        },
        WitnessKind::Separable => match separability_idempotent(&phi) {
            Some(cert) => {
                let ok = verify_separability(&phi, &cert);
                println!(
                    "separability idempotent found ({} terms in B (x)_A B of dimension {}); re-verified: {ok}",
                    cert.terms.len(),
                    cert.quotient_dimension
                );
                ctx.report.verdict("separable", true);
                ctx.report.verdict("verified", ok);
                ctx.report.certificate("separabilityIdempotent", &cert);
                Ok(Status::Success)
            }
            None => {
                println!("no separability idempotent exists");
                ctx.report.verdict("separable", false);
                Ok(Status::Negative)
            }
        },
        WitnessKind::Projective => {
            let w = witness_report(&phi, ctx.seed)?;
            let (r, l) = (&w.right_projective, &w.left_projective);
            println!("B projective as right A-module: {}", r.projective);
            println!("B projective as left A-module: {}", l.projective);
            ctx.report.verdict("rightProjective", r);
            ctx.report.verdict("leftProjective", l);
            Ok(if r.projective && l.projective { Status::Success } else { Status::Negative })
        }
    }
}

fn experiment(ctx: &mut Ctx, mode: ModeArg, ext: &ExtensionArgs) -> Outcome_ {
    let phi = ctx.extension(ext)?;
    describe_extension(ctx, &phi);
    let mode = match mode {
        ModeArg::Theorem41 => ExperimentMode::Theorem41,
        ModeArg::Prop51 => ExperimentMode::Prop51,
        ModeArg::Prop53 => ExperimentMode::Prop53,
    };
    let r = run_consistency_experiment(&phi, mode, ctx.seed)?;
    println!("A: {}", r.source.overall);
    println!("B: {}", r.target.overall);
    for check in &r.checks {
        println!("  {:?}: {}", check.status, check.statement);
    }
    println!("outcome: {}", serde_json::to_value(r.outcome).expect("serializes").as_str().unwrap_or("?"));
    for c in &r.caveats {
        ctx.report.caveat(c.clone());
    }
    ctx.report.verdict("outcome", r.outcome);
    ctx.report.verdict("source", &r.source);
    ctx.report.verdict("target", &r.target);
    ctx.report.verdict("checks", &r.checks);
    ctx.report.certificate("witnesses", &r.witnesses);
    Ok(if r.outcome == Outcome::Violation { Status::Negative } else { Status::Success })
}

fn parse_dims(text: &str) -> Result<DimVector, Failure> {
    let mut pairs = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (d, n) = part
            .rsplit_once(':')
            .ok_or_else(|| usage(format!("expected degree:dimension, got {part}")))?;
        let d: i64 = d.trim().parse().map_err(|_| usage(format!("bad degree {d}")))?;
        let n: usize = n.trim().parse().map_err(|_| usage(format!("bad dimension {n}")))?;
        pairs.push((d, n));
    }
    Ok(DimVector::from_pairs(&pairs))
}

fn vertex(base: &ProjAlgebra, label: &str) -> Result<usize, Failure> {
    base.vertex_index(label).ok_or_else(|| Error::UnknownVertex(label.to_string()).into())
}

fn record_complex(ctx: &mut Ctx, key: &str, c: &ProjComplex) {
    ctx.report.verdict(&format!("{key}ComponentDims"), c.component_dim_vector());
    ctx.report.verdict(&format!("{key}CohomologyDims"), c.cohomology_dim_vector());
    ctx.report.verdict(&format!("{key}Minimal"), c.is_homotopically_minimal());
    ctx.report.certificate(key, c.to_json());
}

fn complex(ctx: &mut Ctx, op: &ComplexCommand) -> Outcome_ {
    match op {
        ComplexCommand::Minimize { file, complex } => {
            let base = ctx.proj_algebra(file)?;
            let text = ctx.read(complex)?;
            let c = ProjComplex::from_json(base, &text)?;
            let m = c.minimize();
            println!("terms {} -> {}", c.component_dim_vector(), m.component_dim_vector());
            println!("cohomology {}", m.cohomology_dim_vector());
            record_complex(ctx, "input", &c);
            record_complex(ctx, "minimized", &m);
            Ok(Status::Success)
        }
        ComplexCommand::Truncate { file, complex, at, good } => {
            let base = ctx.proj_algebra(file)?;
            let text = ctx.read(complex)?;
            let c = ProjComplex::from_json(base, &text)?;
            if *good {
                let t = c.to_module_complex().good_truncate(*at);
                println!("terms {}; cohomology {}", t.component_dim_vector(), t.cohomology_dim_vector());
                ctx.report.verdict("truncatedComponentDims", t.component_dim_vector());
                ctx.report.verdict("truncatedCohomologyDims", t.cohomology_dim_vector());
            } else {
                let t = c.brutal_truncate(*at);
                println!("terms {}; cohomology {}", t.component_dim_vector(), t.cohomology_dim_vector());
                record_complex(ctx, "truncated", &t);
            }
            Ok(Status::Success)
        }
        ComplexCommand::Resolve { file, simple, projective, depth } => {
            let base = ctx.proj_algebra(file)?;
            let m = match (simple, projective) {
                (Some(v), _) => simple_module(&base, vertex(&base, v)?),
                (None, Some(v)) => projective_module(&base, vertex(&base, v)?),
                (None, None) => return Err(usage("give --simple or --projective")),
            };
            let r = minimal_proj_resolution(&base, &m, *depth)?;
            let dims = r.complex.component_dim_vector();
            let bound = lemma_bound(&base, &DimVector::delta(0, m.dim), -(*depth as i64));
            println!("terms {dims}; complete: {}", r.complete);
            println!("bound {bound}; within bound: {}", dims.le(&bound));
            record_complex(ctx, "resolution", &r.complex);
            ctx.report.verdict("complete", r.complete);
            ctx.report.verdict("bound", &bound);
            ctx.report.verdict("withinBound", dims.le(&bound));
            if !r.complete {
                ctx.report.caveat(format!(
                    "the resolution was cut at depth {depth}; the lowest term carries a nonzero kernel"
                ));
            }
            Ok(Status::Success)
        }
        ComplexCommand::Bound { file, cohomology, from } => {
            let base = ctx.proj_algebra(file)?;
            let n = parse_dims(cohomology)?;
            let b = lemma_bound(&base, &n, *from);
            println!("M = {}; bound {b}", base.max_projective_dim());
            ctx.report.verdict("maxProjectiveDimension", base.max_projective_dim());
            ctx.report.verdict("bound", &b);
            Ok(Status::Success)
        }
        ComplexCommand::Sample { file, cdim, radical_only, budget } => {
            let base = ctx.proj_algebra(file)?;
            let n = parse_dims(cdim)?;
            let r = finiteness_sampler(&base, &n, *radical_only, *budget)?;
            println!(
                "{} candidates, {} complexes, {} isomorphism classes",
                r.candidates, r.complexes, r.class_count
            );
            println!("note: {}", r.caveat);
            ctx.report.caveat(r.caveat);
            ctx.report.verdict("candidates", r.candidates);
            ctx.report.verdict("complexes", r.complexes);
            ctx.report.verdict("classCount", r.class_count);
            ctx.report.certificate("sample", r.to_json());
            Ok(Status::Success)
        }
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Validate { .. } => "validate".into(),
        Command::Classify { .. } => "classify".into(),
        Command::Extend { kind } => match kind {
            ExtendCommand::BaseChange { .. } => "extend base-change".into(),
            ExtendCommand::Skew { .. } => "extend skew".into(),
            ExtendCommand::Quotient { .. } => "extend quotient".into(),
        },
        Command::Witness { kind, .. } => format!("witness {}", kind.to_possible_value().expect("named").get_name()),
        Command::Complex { op } => match op {
            ComplexCommand::Minimize { .. } => "complex minimize".into(),
            ComplexCommand::Truncate { .. } => "complex truncate".into(),
            ComplexCommand::Resolve { .. } => "complex resolve".into(),
            ComplexCommand::Bound { .. } => "complex bound".into(),
            ComplexCommand::Sample { .. } => "complex sample".into(),
        },
        Command::Experiment { mode, .. } => {
            format!("experiment {}", mode.to_possible_value().expect("named").get_name())
        }
    }
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for negative answers, so usage errors exit 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mut ctx = Ctx {
        report: Report::new(&command_name(&cli.command), cli.seed),
        seed: cli.seed,
        cap: cli.cap,
    };
    let result = match &cli.command {
        Command::Validate { file } => validate(&mut ctx, file),
        Command::Classify { file } => classify(&mut ctx, file),
        Command::Extend { kind } => extend(&mut ctx, kind),
        Command::Witness { kind, ext } => witness(&mut ctx, *kind, ext),
        Command::Complex { op } => complex(&mut ctx, op),
        Command::Experiment { mode, ext } => experiment(&mut ctx, *mode, ext),
    };
    let code = match &result {
        Ok(Status::Success) => 0,
        Ok(Status::Negative) => 2,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ctx.report.verdict("error", json!({ "name": f.name, "message": f.message }));
            1
        }
    };
    if let Some(path) = &cli.json {
        if let Err(m) = ctx.report.write(path) {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code)
}
