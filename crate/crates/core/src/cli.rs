//! The `gstone` command line.
//!
//! Every subcommand writes a JSON document to `--out` when given and a short
//! human summary to standard output. Exit codes: 0 when all requested checks
//! pass, 1 when a check fails, 2 for input errors and 3 when a resource
//! guard aborts the computation.

use crate::constructions::{
    distributive_completion, graded_symmetric_inverse_monoid, graph_inverse_semigroup, pair_groupoid,
    FiniteGraph, GradedSet, DEFAULT_MAX_IDEALS, DEFAULT_MAX_POINTS,
};
use crate::duality::{check_roundtrip_gp, check_roundtrip_sg, slice_semigroup, ultrafilter_groupoid};
use crate::error::{Error, Result};
use crate::grading::{AnyGroup, GradedGroup, IntVectorGroup, TableGroup};
use crate::groupoid::{FiniteGradedGroupoid, GroupoidDoc, DEFAULT_MAX_MORPHISMS, DEFAULT_MAX_SLICES};
use crate::invsemi::{GradedInverseSemigroup, SemigroupDoc, DEFAULT_MAX_ELEMENTS};
use crate::lemmas::{lemma_suite, random_instance};
use crate::ring::{phi_psi_iso_check, PrimeField, Rationals, RingReport};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "gstone", version, about = "Graded Stone duality for finite inverse semigroups and groupoids")]
pub struct Cli {
    /// Where to write the JSON output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Bound on enumerated slices.
    #[arg(long, global = true)]
    pub max_slices: Option<usize>,
    /// Bound on semigroup elements and groupoid morphisms read or built.
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a graded inverse semigroup.
    ValidateSemigroup {
        #[arg(long)]
        semigroup: PathBuf,
    },
    /// Check the axioms of a graded groupoid.
    ValidateGroupoid {
        #[arg(long)]
        groupoid: PathBuf,
    },
    /// Build a standard instance.
    Example {
        #[command(subcommand)]
        kind: ExampleKind,
    },
    /// Apply a duality functor: ultrafilter groupoid or slice semigroup.
    Dualize {
        #[command(flatten)]
        instance: Instance,
        /// Use all slices rather than homogeneous ones.
        #[arg(long)]
        nongraded: bool,
    },
    /// Check that the natural map into the double dual is an isomorphism.
    Roundtrip {
        #[command(flatten)]
        instance: Instance,
    },
    /// Run the property checks on a semigroup file or a seeded random instance.
    LemmaSuite {
        #[arg(long, conflicts_with = "seed", required_unless_present = "seed")]
        semigroup: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Compare the enveloping rings of all and of homogeneous slices.
    RingCheck {
        #[arg(long)]
        groupoid: PathBuf,
        /// `Q` or `F_p` for a prime `p` up to 97.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Render a groupoid, or the ultrafilter groupoid of a semigroup, as DOT.
    ExportDot {
        #[command(flatten)]
        instance: Instance,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Instance {
    #[arg(long)]
    pub semigroup: Option<PathBuf>,
    #[arg(long)]
    pub groupoid: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ExampleKind {
    /// The graded symmetric inverse monoid of a graded set.
    Igr {
        #[command(flatten)]
        points: Points,
    },
    /// The pair groupoid of a graded set.
    PairGroupoid {
        #[command(flatten)]
        points: Points,
    },
    /// The graph inverse semigroup of a finite acyclic graph.
    GraphIs {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// The distributive completion of a graph inverse semigroup or a file.
    Completion {
        #[arg(long, conflicts_with_all = ["vertices", "edges"])]
        semigroup: Option<PathBuf>,
        #[command(flatten)]
        graph: GraphArgs,
        /// Build the ungraded completion, trivially graded.
        #[arg(long)]
        nongraded: bool,
    },
}

#[derive(Debug, Args)]
pub struct Points {
    /// Points as `name:degree`, for example `a:0 b:1`.
    #[arg(long, num_args = 1.., required = true)]
    pub points: Vec<String>,
    /// `Z`, `Z^n`, `Z/n` or `S3`. Ranks of `Z` are read off the degrees.
    #[arg(long, default_value = "Z")]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long, num_args = 1..)]
    pub vertices: Vec<String>,
    /// Edges as `name:source:range`.
    #[arg(long, num_args = 0..)]
    pub edges: Vec<String>,
}

struct Guards {
    max_slices: usize,
    max_elements: Option<usize>,
}

impl Guards {
    fn semigroup_bound(&self) -> usize {
        self.max_elements.unwrap_or(DEFAULT_MAX_ELEMENTS)
    }

    fn groupoid_bound(&self) -> usize {
        self.max_elements.unwrap_or(DEFAULT_MAX_MORPHISMS)
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    max_slices: usize,
    max_elements: Option<usize>,
    passed: bool,
    result: T,
}

struct Outcome {
    passed: bool,
    json: String,
    summary: String,
}

impl Outcome {
    fn report<T: Serialize>(command: &str, guards: &Guards, passed: bool, result: T, summary: String) -> Self {
        let env = Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            max_slices: guards.max_slices,
            max_elements: guards.max_elements,
            passed,
            result,
        };
        Self {
            passed,
            json: to_json(&env),
            summary,
        }
    }

    fn document<T: Serialize>(doc: &T, summary: String) -> Self {
        Self {
            passed: true,
            json: to_json(doc),
            summary,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code. The human summary goes to `stdout`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("gstone: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<bool> {
    let guards = Guards {
        max_slices: cli.max_slices.unwrap_or(DEFAULT_MAX_SLICES),
        max_elements: cli.max_elements,
    };
    let outcome = match &cli.command {
        Command::ExportDot { instance } => {
            let dot = match instance_kind(instance) {
                InstanceKind::Semigroup(p) => ultrafilter_groupoid(&load_semigroup(p, &guards)?)?.groupoid.to_dot(),
                InstanceKind::Groupoid(p) => load_groupoid(p, &guards)?.to_dot(),
            };
            match &cli.out {
                Some(path) => {
                    write_file(path, &dot)?;
                    writeln!(stdout, "wrote DOT to {}", path.display()).map_err(io_error)?;
                }
                None => write!(stdout, "{dot}").map_err(io_error)?,
            }
            return Ok(true);
        }
        command => dispatch(command, &guards)?,
    };
    match &cli.out {
        Some(path) => write_file(path, &outcome.json)?,
        None if !outcome.passed || is_document(&cli.command) => {
            write!(stdout, "{}", outcome.json).map_err(io_error)?
        }
        None => {}
    }
    writeln!(stdout, "{}", outcome.summary).map_err(io_error)?;
    Ok(outcome.passed)
}

fn is_document(command: &Command) -> bool {
    matches!(command, Command::Example { .. } | Command::Dualize { .. })
}

fn dispatch(command: &Command, guards: &Guards) -> Result<Outcome> {
    match command {
        Command::ValidateSemigroup { semigroup } => {
            let s = load_semigroup_unchecked(semigroup, guards)?;
            let report = s.validate();
            let passed = report.is_valid();
            let mut summary = format!("{}: {} elements, {report}", semigroup.display(), s.len());
            let boolean = passed.then(|| s.is_graded_boolean());
            if let Some(b) = &boolean {
                summary.push_str(&format!(
                    "\ngraded-Boolean: {}, Boolean: {}",
                    b.is_graded_boolean(),
                    b.is_boolean()
                ));
            }
            #[derive(Serialize)]
            struct Out<T> {
                validation: crate::Report,
                boolean: Option<T>,
            }
            Ok(Outcome::report(
                "validate-semigroup",
                guards,
                passed,
                Out {
                    validation: report,
                    boolean,
                },
                summary,
            ))
        }
        Command::ValidateGroupoid { groupoid } => {
            let g = load_groupoid_unchecked(groupoid, guards)?;
            let report = g.validate();
            let summary = format!(
                "{}: {} morphisms, {} objects, {report}",
                groupoid.display(),
                g.len(),
                g.objects().len()
            );
            Ok(Outcome::report("validate-groupoid", guards, report.is_valid(), report, summary))
        }
        Command::Example { kind } => example(kind, guards),
        Command::Dualize { instance, nongraded } => match instance_kind(instance) {
            InstanceKind::Semigroup(p) => {
                let dual = ultrafilter_groupoid(&load_semigroup(p, guards)?)?;
                let summary = format!(
                    "G(S): {} morphisms over {} objects",
                    dual.groupoid.len(),
                    dual.groupoid.objects().len()
                );
                Ok(Outcome::document(&dual.groupoid.to_doc(), summary))
            }
            InstanceKind::Groupoid(p) => {
                let g = load_groupoid(p, guards)?;
                let dual = slice_semigroup(&g, !nongraded, guards.max_slices)?;
                let label = if *nongraded { "S(G)" } else { "S^gr(G)" };
                let summary = format!("{label}: {} elements", dual.semigroup.len());
                Ok(Outcome::document(&dual.semigroup.to_doc(), summary))
            }
        },
        Command::Roundtrip { instance } => {
            let report = match instance_kind(instance) {
                InstanceKind::Semigroup(p) => {
                    check_roundtrip_sg(&p.display().to_string(), &load_semigroup(p, guards)?, guards.max_slices)?
                }
                InstanceKind::Groupoid(p) => {
                    check_roundtrip_gp(&p.display().to_string(), &load_groupoid(p, guards)?, guards.max_slices)?
                }
            };
            let mut summary = format!("{} {}: iso = {}", report.instance, report.direction, report.iso);
            if let Some(w) = &report.witness {
                summary.push_str(&format!(" ({w})"));
            }
            Ok(Outcome::report("roundtrip", guards, report.iso, report, summary))
        }
        Command::LemmaSuite { semigroup, seed } => {
            let (name, s) = match (semigroup, seed) {
                (Some(p), _) => (p.display().to_string(), load_semigroup(p, guards)?),
                (None, Some(seed)) => random_instance(*seed)?,
                (None, None) => return Err(Error::input("lemma-suite needs --semigroup or --seed")),
            };
            let report = lemma_suite(&s, guards.max_slices)?;
            let mut summary = format!("lemma suite on {name} ({} elements)", s.len());
            for c in &report.checks {
                let verdict = if c.failures == 0 { "ok" } else { "FAILED" };
                summary.push_str(&format!("\n  {:<28} {verdict} ({} cases)", c.name, c.cases));
            }
            for reason in &report.skipped {
                summary.push_str(&format!("\n  skipped: {reason}"));
            }
            #[derive(Serialize)]
            struct Out<'a> {
                instance: &'a str,
                report: &'a crate::lemmas::LemmaReport,
            }
            let passed = report.is_valid();
            Ok(Outcome::report(
                "lemma-suite",
                guards,
                passed,
                Out {
                    instance: &name,
                    report: &report,
                },
                summary,
            ))
        }
        Command::RingCheck { groupoid, field } => {
            let g = load_groupoid(groupoid, guards)?;
            let report = ring_check(&g, field, guards.max_slices)?;
            let summary = format!(
                "over {}: dim F<S(G)> = {}, dim F<S^gr(G)> = {}, iso = {}",
                report.field, report.dim_nongraded, report.dim_graded, report.iso
            );
            Ok(Outcome::report("ring-check", guards, report.iso, report, summary))
        }
        Command::ExportDot { .. } => unreachable!("handled by the caller"),
    }
}

fn ring_check(g: &FiniteGradedGroupoid<AnyGroup>, field: &str, max_slices: usize) -> Result<RingReport> {
    let f = field.trim();
    if f.eq_ignore_ascii_case("q") {
        return phi_psi_iso_check(Rationals, g, max_slices);
    }
    let p = f
        .strip_prefix("F_")
        .or_else(|| f.strip_prefix('F'))
        .or_else(|| f.strip_prefix("GF"))
        .unwrap_or(f)
        .parse::<u32>()
        .map_err(|_| Error::input(format!("unknown field {field:?}; expected Q or F_p")))?;
    phi_psi_iso_check(PrimeField::new(p)?, g, max_slices)
}

fn example(kind: &ExampleKind, guards: &Guards) -> Result<Outcome> {
    match kind {
        ExampleKind::Igr { points } => {
            let x = parse_points(points)?;
            let s = graded_symmetric_inverse_monoid(&x, DEFAULT_MAX_POINTS)?;
            check_size(s.len(), guards.semigroup_bound())?;
            let summary = format!("I^gr(X): {} elements on {} points", s.len(), x.len());
            Ok(Outcome::document(&s.to_doc(), summary))
        }
        ExampleKind::PairGroupoid { points } => {
            let x = parse_points(points)?;
            let g = pair_groupoid(&x)?;
            check_size(g.len(), guards.groupoid_bound())?;
            let summary = format!("pair groupoid: {} morphisms on {} points", g.len(), x.len());
            Ok(Outcome::document(&g.to_doc(), summary))
        }
        ExampleKind::GraphIs { graph } => {
            let graph = parse_graph(graph)?;
            let s = graph_inverse_semigroup(&graph, guards.semigroup_bound())?;
            let summary = format!("graph inverse semigroup: {} elements", s.len());
            Ok(Outcome::document(&s.to_doc(), summary))
        }
        ExampleKind::Completion {
            semigroup,
            graph,
            nongraded,
        } => {
            let d = match semigroup {
                Some(p) => {
                    let s = load_semigroup(p, guards)?;
                    distributive_completion(&s, !nongraded, DEFAULT_MAX_IDEALS)?.semigroup.to_doc()
                }
                None => {
                    let s = graph_inverse_semigroup(&parse_graph(graph)?, guards.semigroup_bound())?;
                    distributive_completion(&s, !nongraded, DEFAULT_MAX_IDEALS)?.semigroup.to_doc()
                }
            };
            check_size(d.elements.len(), guards.semigroup_bound())?;
            let label = if *nongraded { "D(S)" } else { "D^gr(S)" };
            let summary = format!("{label}: {} elements", d.elements.len());
            Ok(Outcome::document(&d, summary))
        }
    }
}

fn check_size(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::resource("constructed elements", bound));
    }
    Ok(())
}

fn parse_group(text: &str, sample: Option<&str>) -> Result<AnyGroup> {
    let text = text.trim();
    if text == "Z" {
        let rank = sample.map_or(1, |d| d.split(',').count());
        return Ok(IntVectorGroup::new(rank).into());
    }
    if let Some(n) = text.strip_prefix("Z^") {
        let rank = n.parse().map_err(|_| Error::input(format!("bad rank in {text:?}")))?;
        return Ok(IntVectorGroup::new(rank).into());
    }
    if let Some(n) = text.strip_prefix("Z/") {
        let n: usize = n.parse().map_err(|_| Error::input(format!("bad order in {text:?}")))?;
        if n == 0 {
            return Err(Error::input("cyclic group of order 0"));
        }
        return Ok(TableGroup::cyclic(n).into());
    }
    if text == "S3" {
        return Ok(TableGroup::symmetric3().into());
    }
    Err(Error::input(format!("unknown group {text:?}; expected Z, Z^n, Z/n or S3")))
}

fn parse_points(args: &Points) -> Result<GradedSet<AnyGroup>> {
    let pairs = args
        .points
        .iter()
        .map(|p| {
            p.split_once(':')
                .ok_or_else(|| Error::input(format!("point {p:?} is not of the form name:degree")))
        })
        .collect::<Result<Vec<_>>>()?;
    let group = parse_group(&args.group, pairs.first().map(|(_, d)| *d))?;
    let points = pairs
        .into_iter()
        .map(|(n, d)| Ok((n.to_string(), group.parse(d)?)))
        .collect::<Result<Vec<_>>>()?;
    GradedSet::new(points, group)
}

fn parse_graph(args: &GraphArgs) -> Result<FiniteGraph> {
    if args.vertices.is_empty() {
        return Err(Error::input("a graph needs --vertices"));
    }
    let edges = args
        .edges
        .iter()
        .map(|e| match e.split(':').collect::<Vec<_>>()[..] {
            [n, s, r] => Ok((n, s, r)),
            _ => Err(Error::input(format!("edge {e:?} is not of the form name:source:range"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let vertices: Vec<&str> = args.vertices.iter().map(String::as_str).collect();
    FiniteGraph::new(&vertices, &edges)
}

enum InstanceKind<'a> {
    Semigroup(&'a Path),
    Groupoid(&'a Path),
}

fn instance_kind(i: &Instance) -> InstanceKind<'_> {
    match (&i.semigroup, &i.groupoid) {
        (Some(p), _) => InstanceKind::Semigroup(p),
        (None, Some(p)) => InstanceKind::Groupoid(p),
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn load_semigroup(path: &Path, guards: &Guards) -> Result<GradedInverseSemigroup<AnyGroup>> {
    GradedInverseSemigroup::from_doc(&read_json::<SemigroupDoc>(path)?, guards.semigroup_bound())
}

fn load_semigroup_unchecked(path: &Path, guards: &Guards) -> Result<GradedInverseSemigroup<AnyGroup>> {
    GradedInverseSemigroup::from_doc_unchecked(&read_json::<SemigroupDoc>(path)?, guards.semigroup_bound())
}

fn load_groupoid(path: &Path, guards: &Guards) -> Result<FiniteGradedGroupoid<AnyGroup>> {
    FiniteGradedGroupoid::from_doc(&read_json::<GroupoidDoc>(path)?, guards.groupoid_bound())
}

fn load_groupoid_unchecked(path: &Path, guards: &Guards) -> Result<FiniteGradedGroupoid<AnyGroup>> {
    FiniteGradedGroupoid::from_doc_unchecked(&read_json::<GroupoidDoc>(path)?, guards.groupoid_bound())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))
}

fn io_error(e: std::io::Error) -> Error {
    Error::input(format!("cannot write output: {e}"))
}
