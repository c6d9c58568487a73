//! Per-command work. Graphs are processed on the rayon pool and results are
//! collected in input order, so reports do not depend on `--jobs`.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::path::Path;
use std::time::Instant;

use pentagraph::coloring::{chromatic_number_bruteforce, four_color_layers, three_color_unchecked};
use pentagraph::corpus::{visit_corpus, CorpusSpec, Mode};
use pentagraph::decomposition::{find_p3_cutset, find_strong_star_bruteforce};
use pentagraph::io::{write_dot, write_graph6};
use pentagraph::structure::{contains_induced, five_holes, is_isomorphic, local_jump_pairs, StructureError};
use pentagraph::{
    decompose_with, fixtures, four_color, recognize, verify_coloring, Coloring, ColoringError, DecompositionError,
    DecompositionOutcome, Graph, Limits, Priority, Verdict,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{Budget, InputDescriptor, RunReport, Timing};
use crate::{
    load, Cli, CliError, Command, CorpusArgs, Emit, InputFormat, ModeArg, Outcome, Property, EXIT_INDETERMINATE,
    EXIT_NO, EXIT_OK,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Yes,
    No,
    Indeterminate,
}

/// The result for one input graph.
struct Item {
    label: &'static str,
    status: Status,
    value: Value,
    coloring: Option<Coloring>,
}

impl Item {
    fn new(label: &'static str, status: Status, value: Value) -> Self {
        Item { label, status, value, coloring: None }
    }
}

/// Negative answers dominate budget exhaustion, which dominates success.
fn exit_code(statuses: impl IntoIterator<Item = Status>) -> i32 {
    let mut code = EXIT_OK;
    for s in statuses {
        match s {
            Status::No => return EXIT_NO,
            Status::Indeterminate => code = EXIT_INDETERMINATE,
            Status::Yes => {}
        }
    }
    code
}

pub(crate) fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let limits = Limits::default().with_max_steps(cli.common.max_steps);
    let dot_ok = matches!(cli.command, Command::Color3 { .. } | Command::Color4 { .. });
    if cli.common.emit == Emit::Dot && !dot_ok {
        return Err(CliError::Usage("--emit dot is only available for color3 and color4".into()));
    }
    let lim = &limits;
    match &cli.command {
        Command::Recognize { input } => {
            per_graph(cli, start, "recognize", input, json!({}), |g| recognize_item(g, lim))
        }
        Command::Color3 { input, priority } => {
            let p = Priority::from(*priority);
            per_graph(cli, start, "color3", input, json!({ "priority": p }), |g| color_item(g, 3, lim, p))
        }
        Command::Color4 { input } => {
            per_graph(cli, start, "color4", input, json!({}), |g| color_item(g, 4, lim, Priority::Cheap))
        }
        Command::Decompose { input, priority } => {
            let p = Priority::from(*priority);
            per_graph(cli, start, "decompose", input, json!({ "priority": p }), |g| decompose_item(g, lim, p))
        }
        Command::Oracle { input, k_max } => {
            let k = *k_max;
            per_graph(cli, start, "oracle", input, json!({ "k_max": k }), |g| oracle_item(g, k))
        }
        Command::Verify { input, which, priority } => {
            let mut which = which.clone();
            which.sort();
            which.dedup();
            verify(cli, start, input, &which, Priority::from(*priority), lim)
        }
        Command::Corpus(args) => corpus(cli, start, args, limits),
    }
}

fn format_name(f: InputFormat) -> &'static str {
    match f {
        InputFormat::G6 => "g6",
        InputFormat::Dimacs => "dimacs",
        InputFormat::Json => "json",
    }
}

fn load_described(cli: &Cli, input: &Path) -> Result<(Vec<Graph>, InputDescriptor), CliError> {
    let (graphs, format) = load(input, cli.common.format)?;
    let desc =
        InputDescriptor { path: input.display().to_string(), format: format_name(format).into(), graphs: graphs.len() };
    Ok((graphs, desc))
}

#[allow(clippy::too_many_arguments)]
fn report(
    cli: &Cli,
    start: Instant,
    command: &str,
    input: Option<InputDescriptor>,
    params: Value,
    results: Vec<Value>,
    summary: Value,
    indeterminate: usize,
    exit_code: i32,
) -> String {
    RunReport {
        command: command.into(),
        input,
        params,
        results,
        summary,
        budget: Budget { max_steps: cli.common.max_steps, indeterminate },
        exit_code,
        timing: (!cli.common.no_timing).then(|| Timing { elapsed_ms: start.elapsed().as_millis() as u64 }),
    }
    .to_json()
}

fn per_graph<F>(
    cli: &Cli,
    start: Instant,
    command: &str,
    input: &Path,
    params: Value,
    work: F,
) -> Result<Outcome, CliError>
where
    F: Fn(&Graph) -> Item + Sync,
{
    let (graphs, desc) = load_described(cli, input)?;
    let items: Vec<Item> = graphs.par_iter().map(&work).collect();
    let exit_code = exit_code(items.iter().map(|i| i.status));
    if cli.common.emit == Emit::Dot {
        let text = graphs.iter().zip(&items).map(|(g, it)| write_dot(g, it.coloring.as_ref())).collect();
        return Ok(Outcome { text, side_report: None, exit_code });
    }
    let mut by_status: BTreeMap<&str, usize> = BTreeMap::new();
    for it in &items {
        *by_status.entry(it.label).or_default() += 1;
    }
    let indeterminate = items.iter().filter(|i| i.status == Status::Indeterminate).count();
    let results = items
        .into_iter()
        .zip(&graphs)
        .enumerate()
        .map(|(i, (it, g))| {
            let mut v = json!({ "index": i, "n": g.n(), "graph6": write_graph6(g), "status": it.label });
            if let (Value::Object(dst), Value::Object(src)) = (&mut v, it.value) {
                dst.extend(src);
            }
            v
        })
        .collect();
    let summary = json!({ "graphs": graphs.len(), "by_status": by_status });
    let text = report(cli, start, command, Some(desc), params, results, summary, indeterminate, exit_code);
    Ok(Outcome { text, side_report: None, exit_code })
}

fn recognize_item(g: &Graph, limits: &Limits) -> Item {
    let r = recognize(g, limits);
    let (label, status) = match r.verdict {
        Verdict::Pentagraph => ("pentagraph", Status::Yes),
        Verdict::NotPentagraph => ("not_pentagraph", Status::No),
        Verdict::Indeterminate => ("indeterminate", Status::Indeterminate),
    };
    Item::new(label, status, json!({ "report": r }))
}

/// Recognition ahead of colouring or decomposition: `Err` carries the
/// refusal.
fn admit(g: &Graph, limits: &Limits) -> Result<(), Item> {
    let r = recognize(g, limits);
    match r.verdict {
        Verdict::Pentagraph => Ok(()),
        Verdict::NotPentagraph => Err(Item::new("refused", Status::No, json!({ "witness": r.witness }))),
        Verdict::Indeterminate => Err(Item::new("indeterminate", Status::Indeterminate, json!({}))),
    }
}

fn coloring_indeterminate(e: &ColoringError) -> bool {
    match e {
        ColoringError::RecognitionIndeterminate => true,
        ColoringError::Decomposition(d) => d.is_indeterminate(),
        _ => false,
    }
}

fn color_item(g: &Graph, k: u8, limits: &Limits, priority: Priority) -> Item {
    if let Err(refusal) = admit(g, limits) {
        return refusal;
    }
    let result = if k == 3 { three_color_unchecked(g, limits, priority) } else { four_color(g) };
    match result {
        Ok(c) if verify_coloring(g, &c).unwrap_or(false) => {
            let mut it = Item::new("colored", Status::Yes, json!({ "colors_used": c.used(), "coloring": c }));
            it.coloring = Some(c);
            it
        }
        Ok(c) => Item::new("failed", Status::No, json!({ "error": "colouring did not verify", "coloring": c })),
        Err(e) if coloring_indeterminate(&e) => {
            Item::new("indeterminate", Status::Indeterminate, json!({ "error": e.to_string() }))
        }
        Err(e) => Item::new("failed", Status::No, json!({ "error": e.to_string() })),
    }
}

fn decompose_item(g: &Graph, limits: &Limits, priority: Priority) -> Item {
    if let Err(refusal) = admit(g, limits) {
        return refusal;
    }
    match decompose_with(g, limits, priority) {
        Ok(o) => {
            let verified = o.verify(g);
            let status = if verified { Status::Yes } else { Status::No };
            let label = if verified { "decomposed" } else { "failed" };
            Item::new(label, status, json!({ "outcome": o, "verified": verified }))
        }
        Err(e) if e.is_indeterminate() => {
            Item::new("indeterminate", Status::Indeterminate, json!({ "error": e.to_string() }))
        }
        Err(e) => Item::new("failed", Status::No, json!({ "error": e.to_string() })),
    }
}

fn oracle_item(g: &Graph, k_max: usize) -> Item {
    let chi = chromatic_number_bruteforce(g, k_max);
    let label = match chi {
        Some(0) => "chi_0",
        Some(1) => "chi_1",
        Some(2) => "chi_2",
        Some(3) => "chi_3",
        Some(4) => "chi_4",
        Some(_) => "chi_5_or_more",
        None => "above_k_max",
    };
    Item::new(label, Status::Yes, json!({ "chromatic_number": chi }))
}

/// Result of one property on one graph.
struct Check {
    verdict: &'static str,
    detail: Value,
}

impl Check {
    fn pass(detail: Value) -> Self {
        Check { verdict: "pass", detail }
    }
    fn fail(detail: Value) -> Self {
        Check { verdict: "fail", detail }
    }
    fn skip(reason: &str) -> Self {
        Check { verdict: "skip", detail: json!({ "reason": reason }) }
    }
    fn indeterminate(detail: Value) -> Self {
        Check { verdict: "indeterminate", detail }
    }
}

/// The fixed graphs the P2 property exempts.
struct Family {
    p2: Graph,
    exceptions: Vec<Graph>,
}

impl Family {
    fn new() -> Self {
        Family {
            p2: fixtures::p2(),
            exceptions: vec![fixtures::petersen(), fixtures::p0(), fixtures::p1(), fixtures::p2()],
        }
    }

    fn exceptional(&self, g: &Graph) -> bool {
        self.exceptions.iter().any(|h| h.n() == g.n() && is_isomorphic(h, g).is_some())
    }
}

fn check_t12(g: &Graph) -> Check {
    let bad_layer = four_color_layers(g)
        .iter()
        .flat_map(|l| l.layers.iter().copied())
        .find(|&layer| !g.induced(layer).graph.is_bipartite());
    if let Some(layer) = bad_layer {
        return Check::fail(json!({ "non_bipartite_layer": layer }));
    }
    match four_color(g) {
        Ok(c) if c.is_proper(g) => Check::pass(json!({ "colors_used": c.used() })),
        Ok(c) => Check::fail(json!({ "improper": c })),
        Err(e) => Check::fail(json!({ "error": e.to_string() })),
    }
}

fn decomposition_check(e: DecompositionError) -> Check {
    if e.is_indeterminate() {
        Check::indeterminate(json!({ "error": e.to_string() }))
    } else {
        Check::fail(json!({ "error": e.to_string() }))
    }
}

fn check_t13(g: &Graph, limits: &Limits, priority: Priority) -> Check {
    match decompose_with(g, limits, priority) {
        Ok(o) if o != DecompositionOutcome::NoneFound && o.verify(g) => Check::pass(json!({ "outcome": o.name() })),
        Ok(o) => Check::fail(json!({ "outcome": o })),
        Err(e) => decomposition_check(e),
    }
}

fn check_t25(g: &Graph, limits: &Limits, family: &Family) -> Check {
    if contains_induced(g, &family.p2).is_none() {
        return Check::skip("no induced P2");
    }
    if family.exceptional(g) {
        return Check::skip("exceptional graph");
    }
    if let Some(cut) = find_p3_cutset(g) {
        return Check::pass(json!({ "via": "p3", "cutset": cut }));
    }
    match find_strong_star_bruteforce(g, limits) {
        Ok(Some(star)) => Check::pass(json!({ "via": "star", "cutset": star })),
        Ok(None) => Check::fail(json!({ "error": "no P3-cutset and no strong parity star-cutset" })),
        Err(e) => decomposition_check(e),
    }
}

fn check_t31(g: &Graph, limits: &Limits, family: &Family) -> Check {
    let holes = five_holes(g);
    if holes.is_empty() {
        return Check::skip("no 5-hole");
    }
    if contains_induced(g, &family.p2).is_some() {
        return Check::skip("contains an induced P2");
    }
    let (mut pairs, mut partial) = (0, false);
    for hole in &holes {
        match local_jump_pairs(g, hole, limits) {
            Ok(found) => {
                if let Some(v) = found.violation() {
                    return Check::fail(json!({ "hole": hole, "pair": v }));
                }
                pairs += found.pairs.len();
                partial |= found.indeterminate;
            }
            Err(StructureError::Contract(m)) => return Check::fail(json!({ "error": m })),
            Err(e) => return Check::indeterminate(json!({ "error": e.to_string() })),
        }
    }
    let detail = json!({ "holes": holes.len(), "pairs": pairs });
    if partial {
        Check::indeterminate(detail)
    } else {
        Check::pass(detail)
    }
}

#[derive(Default, serde::Serialize)]
struct Tally {
    pass: usize,
    fail: usize,
    skip: usize,
    indeterminate: usize,
    first_counterexample: Option<Value>,
}

fn verify(
    cli: &Cli,
    start: Instant,
    input: &Path,
    which: &[Property],
    priority: Priority,
    limits: &Limits,
) -> Result<Outcome, CliError> {
    let (graphs, desc) = load_described(cli, input)?;
    let family = Family::new();
    let checks: Vec<Vec<(Property, Check)>> = graphs
        .par_iter()
        .map(|g| {
            which
                .iter()
                .map(|&t| {
                    let c = match t {
                        Property::T12 => check_t12(g),
                        Property::T13 => check_t13(g, limits, priority),
                        Property::T25 => check_t25(g, limits, &family),
                        Property::T31 => check_t31(g, limits, &family),
                    };
                    (t, c)
                })
                .collect()
        })
        .collect();
    let mut tallies: BTreeMap<Property, Tally> = which.iter().map(|&t| (t, Tally::default())).collect();
    let mut statuses = Vec::with_capacity(graphs.len());
    let mut results = Vec::with_capacity(graphs.len());
    for (i, (g, row)) in graphs.iter().zip(checks).enumerate() {
        let mut status = Status::Yes;
        let mut entry = serde_json::Map::new();
        for (t, c) in row {
            let tally = tallies.get_mut(&t).expect("tally per property");
            match c.verdict {
                "pass" => tally.pass += 1,
                "skip" => tally.skip += 1,
                "indeterminate" => {
                    tally.indeterminate += 1;
                    if status == Status::Yes {
                        status = Status::Indeterminate;
                    }
                }
                _ => {
                    tally.fail += 1;
                    status = Status::No;
                    if tally.first_counterexample.is_none() {
                        tally.first_counterexample =
                            Some(json!({ "index": i, "graph6": write_graph6(g), "detail": c.detail.clone() }));
                    }
                }
            }
            entry.insert(
                serde_json::to_value(t).expect("names serialize").as_str().expect("string").into(),
                json!({ "verdict": c.verdict, "detail": c.detail }),
            );
        }
        statuses.push(status);
        results.push(json!({ "index": i, "n": g.n(), "graph6": write_graph6(g), "checks": entry }));
    }
    let exit_code = exit_code(statuses.iter().copied());
    let indeterminate = statuses.iter().filter(|&&s| s == Status::Indeterminate).count();
    let params = json!({ "which": which, "priority": priority });
    let summary = json!({ "graphs": graphs.len(), "properties": tallies });
    let text = report(cli, start, "verify", Some(desc), params, results, summary, indeterminate, exit_code);
    Ok(Outcome { text, side_report: None, exit_code })
}

fn corpus(cli: &Cli, start: Instant, args: &CorpusArgs, limits: Limits) -> Result<Outcome, CliError> {
    let spec = CorpusSpec {
        mode: match args.mode {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Random => Mode::Random,
        },
        n_min: args.n_min,
        n_max: args.n_max,
        seed: cli.common.seed,
        target_count: args.count,
        edge_probability: (args.p_min, args.p_max),
        labeled: args.labeled,
        limits,
    };
    let mut text = String::new();
    let mut by_n: BTreeMap<usize, usize> = BTreeMap::new();
    let mut bipartite = 0usize;
    let summary = visit_corpus(&spec, |g| {
        text.push_str(&write_graph6(&g));
        text.push('\n');
        *by_n.entry(g.n()).or_default() += 1;
        bipartite += g.is_bipartite() as usize;
        ControlFlow::Continue(())
    })?;
    let fraction = if summary.emitted == 0 { 0.0 } else { bipartite as f64 / summary.emitted as f64 };
    let stats = json!({
        "emitted": summary.emitted,
        "truncated": summary.truncated,
        "by_n": by_n,
        "bipartite": bipartite,
        "bipartite_fraction": fraction,
    });
    let side = report(cli, start, "corpus", None, json!(spec), Vec::new(), stats, summary.indeterminate, EXIT_OK);
    Ok(Outcome { text, side_report: Some(side), exit_code: EXIT_OK })
}
