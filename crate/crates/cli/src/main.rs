//! `chordcycle`: JSON-reporting front end for the chordcycle library.
//!
//! Every command prints one `RunReport` to stdout. Diagnostics go to stderr.
//! Exit codes: 0 success, 2 nothing found within the bound, 1 error or a
//! failed re-verification.

mod report;
mod verify;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use chordcycle::chordsearch::{chord_spectrum, find_cycle_with_exact_chords, find_k_wheel, SearchOutcome};
use chordcycle::corpus::{random_connected, random_graph, seeded};
use chordcycle::extraction::extraction_sequence;
use chordcycle::gadgets::{self, ConnectorModel, Distinguished, GadgetBlueprint};
use chordcycle::io::{self, Format};
use chordcycle::numtheory::{self, NumError};
use chordcycle::{chord_count, chromatic_number, clique_number, Cycle, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use report::RunReport;

#[derive(Parser)]
#[command(name = "chordcycle", version, about = "Exact tools for cycles with a prescribed number of chords")]
struct Cli {
    /// Also write the report (or, for `random`, the graph) to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add wall-clock time to the report; breaks byte-identical output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the chords of a cycle given as vertex ids.
    Chords(ChordsArgs),
    /// Find a cycle with exactly k chords.
    Find(FindArgs),
    /// All chord counts realised by cycles up to a length bound.
    Spectrum(SpectrumArgs),
    /// Find an induced cycle with a vertex seeing at least k of it.
    Wheel(WheelArgs),
    /// Additive decompositions into squares or pronic numbers.
    Decompose(DecomposeArgs),
    /// Build a gadget and re-verify its predicted chord count.
    Gadget(GadgetArgs),
    /// Chain of BFS-layer extractions.
    Extract(ExtractArgs),
    /// Seeded random graph.
    Random(RandomArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FormatArg {
    Dimacs,
    Json,
}

#[derive(Args, Serialize)]
struct GraphSource {
    /// Graph file; DIMACS unless `--format json` or a `.json` extension.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args, Serialize)]
struct ChordsArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: GraphSource,
    /// Cycle as comma-separated zero-based vertex ids.
    #[arg(long, value_delimiter = ',', required = true)]
    cycle: Vec<usize>,
}

#[derive(Args, Serialize)]
struct FindArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: GraphSource,
    #[arg(long)]
    k: usize,
    /// Longest cycle considered; defaults to the vertex count.
    #[arg(long)]
    max_len: Option<usize>,
}

#[derive(Args, Serialize)]
struct SpectrumArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: GraphSource,
    #[arg(long)]
    max_len: Option<usize>,
}

#[derive(Args, Serialize)]
struct WheelArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: GraphSource,
    #[arg(long)]
    k: usize,
    /// Longest rim considered; defaults to the vertex count.
    #[arg(long)]
    max_len: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum DecomposeKind {
    Squares20,
    Pronic80,
    Squares4,
}

#[derive(Args, Serialize)]
struct DecomposeArgs {
    #[arg(value_enum)]
    kind: DecomposeKind,
    #[arg(long)]
    k: u64,
    /// Floor: bases above it (squares20) or at least it (pronic80).
    #[arg(long, default_value_t = 1)]
    c: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum GadgetName {
    /// RIM_LEN SPOKES
    Wheel,
    /// ELL A
    BicliquePath,
    /// ELL A_1 .. A_r
    CompleteCase,
    /// ELL A_1 .. A_r
    OnesideCase,
    /// ELL A_1 .. A_r (connectors from --model)
    MultiBiclique,
    /// LEN_1 .. LEN_k
    Case1,
    /// LEN_1 .. LEN_s
    Case2,
    /// SIGMA REQUIREMENT
    ChordTable,
    /// PATH_LEN K
    Fan,
    /// T
    Mycielski,
}

#[derive(Args, Serialize)]
struct GadgetArgs {
    #[arg(value_enum)]
    name: GadgetName,
    params: Vec<usize>,
    /// Hub-hub edges for the case assemblies, as `u-v` pairs.
    #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
    hub_edges: Vec<(usize, usize)>,
    /// Connector model (JSON) for `multi-biclique`; none means no extra links.
    #[arg(long)]
    model: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct ExtractArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: GraphSource,
    /// Number of extraction steps.
    #[arg(long)]
    p: usize,
}

#[derive(Args, Serialize)]
struct RandomArgs {
    #[arg(long)]
    n: usize,
    /// Edge probability.
    #[arg(long, default_value_t = 0.5)]
    prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Start from a random spanning tree so the graph is connected.
    #[arg(long)]
    connected: bool,
    /// Format of the graph written by `--out`.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once('-').ok_or_else(|| format!("expected u-v, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(u)?, parse(v)?))
}

fn load(source: &GraphSource) -> Result<Graph> {
    let text = std::fs::read_to_string(&source.graph)
        .with_context(|| format!("reading {}", source.graph.display()))?;
    let format = match source.format {
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Dimacs) => Format::Dimacs,
        None if source.graph.extension().is_some_and(|e| e == "json") => Format::Json,
        None => Format::Dimacs,
    };
    let parsed = io::parse(&text, format).with_context(|| format!("parsing {}", source.graph.display()))?;
    Ok(parsed.graph)
}

fn inputs(args: &impl Serialize) -> BTreeMap<String, Value> {
    match serde_json::to_value(args).expect("arguments serialise") {
        Value::Object(map) => map.into_iter().collect(),
        other => BTreeMap::from([("value".to_string(), other)]),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, inputs, result) = match &cli.command {
        Command::Chords(a) => ("chords", inputs(a), cmd_chords(a)),
        Command::Find(a) => ("find", inputs(a), cmd_find(a)),
        Command::Spectrum(a) => ("spectrum", inputs(a), cmd_spectrum(a)),
        Command::Wheel(a) => ("wheel", inputs(a), cmd_wheel(a)),
        Command::Decompose(a) => ("decompose", inputs(a), cmd_decompose(a)),
        Command::Gadget(a) => ("gadget", inputs(a), cmd_gadget(a)),
        Command::Extract(a) => ("extract", inputs(a), cmd_extract(a)),
        Command::Random(a) => ("random", inputs(a), cmd_random(a, cli.out.as_deref())),
    };
    let mut report = match result {
        Ok(report) => RunReport { command: name.into(), inputs, ..report },
        Err(err) => {
            eprintln!("error: {err:#}");
            RunReport::failed(name, inputs, &err)
        }
    };
    if cli.timing {
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        eprintln!("{name}: {elapsed:.1} ms");
        report.wall_time_ms = Some(elapsed);
    }
    for check in report.checks.iter().filter(|c| c.predicted != c.measured) {
        eprintln!(
            "verification failed: {} predicted {} measured {}",
            check.name, check.predicted, check.measured
        );
    }

    let text = serde_json::to_string_pretty(&report).expect("report serialises");
    // a closed pipe downstream is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let (Some(path), false) = (&cli.out, matches!(cli.command, Command::Random(_))) {
        if let Err(err) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: writing {}: {err}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(report.status.code() as u8)
}

fn blank() -> RunReport {
    RunReport::new("", BTreeMap::new())
}

fn check_cycle(report: &mut RunReport, g: &Graph, cycle: &Cycle, chords: usize) {
    let vs = cycle.vertices();
    report.check("cycle_is_valid", true, verify::is_walk(g, vs, true));
    report.check("chord_count", chords, verify::chords(g, vs, true));
}

fn cmd_chords(a: &ChordsArgs) -> Result<RunReport> {
    let g = load(&a.source)?;
    let cycle = Cycle::new(&g, a.cycle.clone())?;
    let count = chord_count(&g, &cycle)?;
    let pairs = chordcycle::chords(&g, &cycle)?;
    let mut report = blank().outcome(json!({ "cycle": cycle, "chords": count, "chord_pairs": pairs }));
    check_cycle(&mut report, &g, &cycle, count);
    Ok(report)
}

fn cmd_find(a: &FindArgs) -> Result<RunReport> {
    let g = load(&a.source)?;
    let max_len = a.max_len.unwrap_or(g.n());
    let outcome = find_cycle_with_exact_chords(&g, a.k, max_len);
    let mut report = blank().outcome(&outcome);
    match &outcome {
        SearchOutcome::Found { cycle } => check_cycle(&mut report, &g, cycle, a.k),
        SearchOutcome::NoneUpTo { .. } => report = report.none(),
    }
    Ok(report)
}

fn cmd_spectrum(a: &SpectrumArgs) -> Result<RunReport> {
    let g = load(&a.source)?;
    let spectrum = chord_spectrum(&g, a.max_len.unwrap_or(g.n()));
    let mut report = blank().outcome(&spectrum);
    for (&k, cycle) in &spectrum.achievable {
        check_cycle(&mut report, &g, cycle, k);
    }
    Ok(report)
}

fn cmd_wheel(a: &WheelArgs) -> Result<RunReport> {
    let g = load(&a.source)?;
    let Some(wheel) = find_k_wheel(&g, a.k, a.max_len.unwrap_or(g.n())) else {
        return Ok(blank().outcome(json!({ "status": "none_up_to", "max_len": a.max_len.unwrap_or(g.n()) })).none());
    };
    let mut report = blank().outcome(&wheel);
    let rim = wheel.rim.vertices();
    check_cycle(&mut report, &g, &wheel.rim, 0);
    let spokes = rim.iter().filter(|&&v| g.has_edge(wheel.hub, v)).count();
    report.check("spokes", wheel.spokes, spokes);
    report.check("hub_off_rim", true, !rim.contains(&wheel.hub));
    report.check("at_least_k", true, spokes >= a.k);
    Ok(report)
}

fn cmd_decompose(a: &DecomposeArgs) -> Result<RunReport> {
    let sum_sq = |terms: &[u64]| terms.iter().map(|&x| x * x).sum::<u64>();
    let outcome = match a.kind {
        DecomposeKind::Squares4 => {
            let terms = numtheory::four_squares(a.k);
            let mut report = blank().outcome(json!({ "target": a.k, "terms": terms }));
            report.check("sum", a.k, sum_sq(&terms));
            return Ok(report);
        }
        DecomposeKind::Squares20 => numtheory::twenty_squares_above(a.k, a.c).map(|d| {
            let mut report = blank().outcome(&d);
            report.check("sum", a.k, sum_sq(&d.terms));
            report.check("terms", numtheory::SQUARE_TERMS, d.terms.len());
            report.check("all_above_floor", true, d.terms.iter().all(|&x| x > a.c));
            report
        }),
        DecomposeKind::Pronic80 => numtheory::eighty_pronic(a.k, a.c).map(|d| {
            let mut report = blank().outcome(&d);
            report.check("sum", a.k, d.terms.iter().map(|&x| x * (x + 1)).sum());
            report.check("terms", numtheory::PRONIC_TERMS, d.terms.len());
            report.check("all_at_least_floor", true, d.terms.iter().all(|&x| x >= a.c));
            report
        }),
    };
    match outcome {
        Ok(report) => Ok(report),
        Err(err @ NumError::Infeasible { .. }) => {
            eprintln!("{err}");
            Ok(blank().outcome(json!({ "status": "infeasible", "reason": err.to_string() })).none())
        }
        Err(err) => Err(err.into()),
    }
}

fn want(params: &[usize], n: usize, usage: &str) -> Result<()> {
    if params.len() != n {
        bail!("expected {n} parameters ({usage}), got {}", params.len());
    }
    Ok(())
}

fn cmd_gadget(a: &GadgetArgs) -> Result<RunReport> {
    let p = &a.params;
    let blueprint: GadgetBlueprint = match a.name {
        GadgetName::Wheel => {
            want(p, 2, "RIM_LEN SPOKES")?;
            gadgets::gen_wheel(p[0], p[1])?
        }
        GadgetName::BicliquePath => {
            want(p, 2, "ELL A")?;
            gadgets::biclique_path(p[0], p[1])?
        }
        GadgetName::CompleteCase | GadgetName::OnesideCase | GadgetName::MultiBiclique => {
            let Some((&ell, seq)) = p.split_first() else {
                bail!("expected ELL A_1 .. A_r");
            };
            match a.name {
                GadgetName::CompleteCase => gadgets::assemble_complete_case(seq.len(), ell, seq, &a.hub_edges)?,
                GadgetName::OnesideCase => gadgets::assemble_oneside_case(seq.len(), ell, seq, &a.hub_edges)?,
                _ => {
                    let model = match &a.model {
                        Some(path) => load_model(path)?,
                        None => ConnectorModel::new(seq.len(), ell),
                    };
                    if (model.r, model.ell) != (seq.len(), ell) {
                        bail!("model is for r = {}, ell = {}", model.r, model.ell);
                    }
                    gadgets::assemble_multi_biclique(seq, &model)?
                }
            }
        }
        GadgetName::Case1 => gadgets::case1_gadget(p.len(), p)?,
        GadgetName::Case2 => gadgets::case2_gadget(p.len(), p)?,
        GadgetName::ChordTable => {
            want(p, 2, "SIGMA REQUIREMENT")?;
            gadgets::chord_table_path(p[0], p[1])?
        }
        GadgetName::Fan => {
            want(p, 2, "PATH_LEN K")?;
            gadgets::gen_fan(p[0], p[1])?
        }
        GadgetName::Mycielski => {
            want(p, 1, "T")?;
            return mycielski_report(p[0]);
        }
    };
    let (vs, closed) = match &blueprint.distinguished {
        Distinguished::Cycle(c) => (c.vertices(), true),
        Distinguished::Path(q) => (q.vertices(), false),
    };
    let g = &blueprint.graph;
    let valid = verify::is_walk(g, vs, closed);
    let measured = verify::chords(g, vs, closed);
    let mut report = blank().outcome(&blueprint);
    report.check("distinguished_is_valid", true, valid);
    report.check("chord_count", blueprint.predicted_chords, measured);
    Ok(report)
}

fn load_model(path: &Path) -> Result<ConnectorModel> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing connector model {}", path.display()))
}

/// Largest graph whose chromatic number is recomputed for the report.
const EXACT_CHECK_VERTICES: usize = 24;

fn mycielski_report(t: usize) -> Result<RunReport> {
    let g = gadgets::gen_mycielski(t)?;
    let mut outcome = json!({ "t": t, "n": g.n(), "edge_count": g.edge_count(), "graph": g });
    let mut checks = Vec::new();
    if g.n() <= EXACT_CHECK_VERTICES {
        let coloring = chromatic_number(&g)?;
        let clique = clique_number(&g)?;
        outcome["chi"] = json!(coloring.chi);
        outcome["omega"] = json!(clique.omega);
        checks.push(("chi", t, coloring.chi));
        checks.push(("coloring_is_proper", 1, verify::is_proper(&g, &coloring.colors) as usize));
        checks.push(("clique_is_clique", 1, verify::is_clique(&g, &clique.vertices) as usize));
        checks.push(("omega", 2.min(t), clique.omega));
    }
    let mut report = blank().outcome(outcome);
    report.check("triangle_free", false, verify::has_triangle(&g));
    for (name, want, got) in checks {
        report.check(name, want, got);
    }
    Ok(report)
}

fn cmd_extract(a: &ExtractArgs) -> Result<RunReport> {
    let g = load(&a.source)?;
    let chain = extraction_sequence(&g, a.p)?;
    let mut report = blank().outcome(&chain);
    report.check("chain_certificate", true, chain.verify(&g)?);
    for (j, step) in chain.steps.iter().enumerate() {
        let (sub, _) = g.induced_subgraph(&step.vertices)?;
        let coloring = chromatic_number(&sub)?;
        report.check(&format!("step_{}_coloring_is_proper", j + 1), true, verify::is_proper(&sub, &coloring.colors));
        report.check(&format!("step_{}_halving_bound", j + 1), true, coloring.chi << (j + 1) >= chain.chi);
    }
    Ok(report)
}

fn cmd_random(a: &RandomArgs, out: Option<&Path>) -> Result<RunReport> {
    if !(0.0..=1.0).contains(&a.prob) {
        bail!("edge probability must lie in [0, 1], got {}", a.prob);
    }
    let mut rng = seeded(a.seed);
    let g = if a.connected {
        random_connected(&mut rng, a.n, a.prob)
    } else {
        random_graph(&mut rng, a.n, a.prob)
    };
    if let Some(path) = out {
        let text = match a.format {
            FormatArg::Json => io::to_json(&g, None),
            FormatArg::Dimacs => io::to_dimacs(&g),
        };
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut report = blank().outcome(json!({ "n": g.n(), "edge_count": g.edge_count(), "connected": g.is_connected(), "graph": g }));
    if a.connected {
        report.check("connected", true, g.is_connected() || g.n() == 0);
    }
    Ok(report)
}
