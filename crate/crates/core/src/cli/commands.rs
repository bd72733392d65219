use rayon::prelude::*;
use serde::Serialize;
use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::format::{csv_row, sig12};
use super::{
    AnalyzeArgs, Command, GenerateArgs, InputArgs, InputFormat, OutputFormat, SweepArgs,
    SweepFamily, VerifyArgs, EXIT_COUNTEREXAMPLE, EXIT_ERROR, EXIT_OK,
};
use crate::error::{Error, Result};
use crate::graph::enumerate::connected_graphs;
use crate::graph::{
    make_complete, make_complete_bipartite, make_cycle, make_dumbbell,
    make_join_clique_independent, make_path, make_random, make_star, make_tightness_family,
    parse_edge_list, parse_graph6, serialize_graph6, Graph, TightnessKind,
};
use crate::matching::{factor_critical, maximum_matching, FactorCriticalVerdict, MatchingCertificate};
use crate::spectra::{spectrum, SpectralSummary};
use crate::structure::{balloons, BalloonReport};
use crate::verify::{
    evaluate_graph, hunt_counterexamples, tightness_sweep, HuntParams, HuntReport, SweepRow,
    T5Grid, TheoremId, TheoremVerdict, VerifierCaps,
};

/// Graphs are analysed in chunks of this size so output streams.
const CHUNK: usize = 1024;

/// A parsed input graph and the 1-based line where its record starts.
#[derive(Clone, Debug, PartialEq)]
pub struct InputGraph {
    pub line: usize,
    pub graph: Graph,
}

/// An input record that failed to parse.
#[derive(Clone, Debug, PartialEq)]
pub struct InputError {
    pub line: usize,
    pub error: Error,
}

pub(super) fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Analyze(args) => analyze(args, stdout, stderr),
        Command::Verify(args) => verify(args, stdout, stderr),
        Command::Hunt(args) => hunt(args, stdout, stderr),
        Command::Sweep(args) => sweep(args, stdout),
        Command::Generate(args) => generate(args, stdout),
    }
}

/// Exit status for a finished hunt.
pub fn counterexample_exit_code(report: &HuntReport) -> i32 {
    if report.counterexample_count > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

/// Parses an inclusive range `lo..hi` (or `lo..=hi`, or a single value). A range
/// with `hi < lo` is empty.
pub fn parse_s_range(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("bad s range {text:?}, expected lo..hi"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((lo, hi)) => {
            let lo = number(lo)?;
            let hi = number(hi.strip_prefix('=').unwrap_or(hi))?;
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![number(text)?]),
    }
}

/// Splits input text into graphs. With [`InputFormat::Auto`] the text is an edge
/// list when its first non-blank line is `n m`, and graph6 lines otherwise.
/// Edge-list input may hold several graphs back to back.
pub fn read_graphs(text: &str, format: InputFormat) -> (Vec<InputGraph>, Vec<InputError>) {
    let format = match format {
        InputFormat::Auto => {
            let first = text.lines().map(str::trim).find(|l| !l.is_empty());
            match first {
                Some(l) if l.split_whitespace().count() == 2
                    && l.split_whitespace().all(|w| w.parse::<usize>().is_ok()) =>
                {
                    InputFormat::Edgelist
                }
                _ => InputFormat::Graph6,
            }
        }
        f => f,
    };
    match format {
        InputFormat::Edgelist => read_edge_lists(text),
        _ => read_graph6_lines(text),
    }
}

fn read_graph6_lines(text: &str) -> (Vec<InputGraph>, Vec<InputError>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if body.trim().is_empty() {
            continue;
        }
        match parse_graph6(body) {
            Ok(graph) => graphs.push(InputGraph { line: i + 1, graph }),
            Err(error) => errors.push(InputError { line: i + 1, error }),
        }
    }
    (graphs, errors)
}

fn read_edge_lists(text: &str) -> (Vec<InputGraph>, Vec<InputError>) {
    let lines: Vec<&str> = text.lines().collect();
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        if lines[i].trim().is_empty() {
            i += 1;
            continue;
        }
        let start = i;
        let m = lines[i]
            .split_whitespace()
            .nth(1)
            .and_then(|w| w.parse::<usize>().ok());
        let Some(m) = m else {
            // Without a usable header the rest of the file cannot be framed.
            let error = parse_edge_list(lines[i]).err().unwrap_or(Error::EdgeList {
                line: 1,
                reason: "expected header \"n m\"".into(),
            });
            errors.push(InputError { line: start + 1, error: shift_line(error, start) });
            break;
        };
        i += 1;
        let mut taken = 0;
        while i < lines.len() && taken < m {
            if !lines[i].trim().is_empty() {
                taken += 1;
            }
            i += 1;
        }
        match parse_edge_list(&lines[start..i].join("\n")) {
            Ok(graph) => graphs.push(InputGraph { line: start + 1, graph }),
            Err(error) => errors.push(InputError { line: start + 1, error: shift_line(error, start) }),
        }
    }
    (graphs, errors)
}

fn shift_line(error: Error, offset: usize) -> Error {
    match error {
        Error::EdgeList { line, reason } => Error::EdgeList { line: line + offset, reason },
        other => other,
    }
}

fn load_input(args: &InputArgs, stderr: &mut dyn Write) -> Result<(Vec<InputGraph>, bool)> {
    let mut text = String::new();
    if args.input.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(&args.input)
            .map_err(|e| Error::Io(format!("{}: {e}", args.input.display())))?
            .read_to_string(&mut text)?;
    }
    let (graphs, errors) = read_graphs(&text, args.input_format);
    for e in &errors {
        writeln!(stderr, "{}:{}: {}", args.input.display(), e.line, e.error)?;
    }
    Ok((graphs, !errors.is_empty()))
}

/// Runs `body` against the output file, or against `stdout` when there is none.
fn with_output<T>(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<T>,
) -> Result<T> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            let mut w = BufWriter::new(file);
            let out = body(&mut w)?;
            w.flush()?;
            Ok(out)
        }
        None => {
            let out = body(stdout)?;
            stdout.flush()?;
            Ok(out)
        }
    }
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn opt<T: ToString>(value: Option<T>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

// ---------------------------------------------------------------- analyze

#[derive(Serialize)]
struct AnalysisRecord {
    record: &'static str,
    index: usize,
    line: usize,
    graph6: Option<String>,
    n: usize,
    m: usize,
    connected: bool,
    /// `μ_2` is zero within tolerance, i.e. the spectrum says disconnected.
    mu2_zero: bool,
    mu2: f64,
    mun: f64,
    spectrum: SpectralSummary,
    alpha_prime: usize,
    perfect_matching: bool,
    matching: MatchingCertificate,
    factor_critical: FactorCriticalVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    balloons: Option<BalloonReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    balloons_absent_reason: Option<String>,
}

fn analyze_one(index: usize, input: &InputGraph) -> Result<AnalysisRecord> {
    let g = &input.graph;
    let spec = spectrum(g)?;
    let matching = maximum_matching(g);
    let (balloon_report, absent) = match balloons(g) {
        Ok(r) => (Some(r), None),
        Err(Error::Precondition(reason)) => (None, Some(reason)),
        Err(e) => return Err(e),
    };
    Ok(AnalysisRecord {
        record: "analysis",
        index,
        line: input.line,
        graph6: serialize_graph6(g).ok(),
        n: g.n(),
        m: g.m(),
        connected: g.is_connected(),
        mu2_zero: !spec.indicates_connected(),
        mu2: spec.mu2,
        mun: spec.mun,
        spectrum: spec,
        alpha_prime: matching.size,
        perfect_matching: 2 * matching.size == g.n(),
        matching,
        factor_critical: factor_critical(g),
        balloons: balloon_report,
        balloons_absent_reason: absent,
    })
}

const ANALYZE_CSV_HEADER: [&str; 11] = [
    "index", "line", "n", "m", "connected", "mu2", "mun", "alpha_prime", "perfect_matching",
    "factor_critical", "balloon_count",
];

fn analyze(args: AnalyzeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let (graphs, mut failed) = load_input(&args.input, stderr)?;
    let pool = thread_pool(args.output.jobs)?;
    let format = args.output.format;
    let errors = with_output(args.output.output.as_deref(), stdout, |out| {
        if format == OutputFormat::Csv {
            out.write_all(csv_row(ANALYZE_CSV_HEADER).as_bytes())?;
        }
        let mut errors = Vec::new();
        for (c, chunk) in graphs.chunks(CHUNK).enumerate() {
            let records: Vec<Result<AnalysisRecord>> = pool.install(|| {
                chunk
                    .par_iter()
                    .enumerate()
                    .map(|(i, g)| analyze_one(c * CHUNK + i, g))
                    .collect()
            });
            for (input, rec) in chunk.iter().zip(records) {
                let rec = match rec {
                    Ok(rec) => rec,
                    Err(e) => {
                        errors.push((input.line, e));
                        continue;
                    }
                };
                match format {
                    OutputFormat::Json => json_line(out, &rec)?,
                    OutputFormat::Csv => out.write_all(
                        csv_row([
                            rec.index.to_string(),
                            rec.line.to_string(),
                            rec.n.to_string(),
                            rec.m.to_string(),
                            rec.connected.to_string(),
                            sig12(rec.mu2),
                            sig12(rec.mun),
                            rec.alpha_prime.to_string(),
                            rec.perfect_matching.to_string(),
                            rec.factor_critical.is_factor_critical.to_string(),
                            opt(rec.balloons.as_ref().map(|b| b.count)),
                        ])
                        .as_bytes(),
                    )?,
                }
            }
        }
        Ok(errors)
    })?;
    for (line, e) in &errors {
        writeln!(stderr, "{}:{line}: {e}", args.input.input.display())?;
        failed = true;
    }
    Ok(if failed { EXIT_ERROR } else { EXIT_OK })
}

// ---------------------------------------------------------------- verify / hunt

/// Parses `cycle-space=24,q=16,tree=16`; unspecified caps keep their defaults.
pub(crate) fn parse_caps(text: Option<&str>) -> Result<VerifierCaps> {
    let mut caps = VerifierCaps::default();
    let Some(text) = text else {
        return Ok(caps);
    };
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("bad cap {item:?}, expected key=value")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad cap value in {item:?}")))?;
        match key.trim() {
            "cycle-space" => caps.even_subgraph.cycle_space_dim = value,
            "q" => caps.even_subgraph.q_condition_vertices = value,
            "tree" => caps.spanning_tree_vertices = value,
            other => return Err(Error::InvalidParameter(format!("unknown cap {other:?}"))),
        }
    }
    Ok(caps)
}

fn parse_theorems(selection: Option<&[String]>) -> Result<Vec<TheoremId>> {
    let Some(items) = selection else {
        return Ok(TheoremId::ALL.to_vec());
    };
    let mut out = Vec::new();
    for item in items.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        if item.eq_ignore_ascii_case("all") {
            out.extend(TheoremId::ALL);
        } else {
            out.push(item.parse()?);
        }
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::InvalidParameter("empty theorem selection".into()));
    }
    Ok(out)
}

fn hunt_params(args: &VerifyArgs) -> Result<(Vec<TheoremId>, HuntParams)> {
    let theorems = parse_theorems(args.theorems.as_deref())?;
    let t5_grid = if args.t5_grid.trim().eq_ignore_ascii_case("auto") {
        T5Grid::PerGraphMaximal
    } else {
        let values = args
            .t5_grid
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidParameter(format!("bad t5 grid value {v:?}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        T5Grid::Explicit(values)
    };
    let params = HuntParams {
        r_grid: args.r_grid.clone(),
        t5_grid,
        k_grid: args.k_grid.clone(),
        caps: parse_caps(args.caps.as_deref())?,
    };
    Ok((theorems, params))
}

#[derive(Serialize)]
struct VerdictRecord<'a> {
    record: &'static str,
    graph_index: usize,
    line: usize,
    theorem: TheoremId,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'a TheoremVerdict>,
}

const VERIFY_CSV_HEADER: [&str; 14] = [
    "graph_index", "line", "theorem", "status", "r", "k", "n", "delta", "hypothesis_holds",
    "margin", "conclusion_holds", "conclusion_bound", "counterexample", "reason",
];

fn verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let (theorems, params) = hunt_params(&args)?;
    let (graphs, failed) = load_input(&args.input, stderr)?;
    let pool = thread_pool(args.output.jobs)?;
    let format = args.output.format;
    let found = with_output(args.output.output.as_deref(), stdout, |out| {
        if format == OutputFormat::Csv {
            out.write_all(csv_row(VERIFY_CSV_HEADER).as_bytes())?;
        }
        let mut found = false;
        for (c, chunk) in graphs.chunks(CHUNK).enumerate() {
            let outcomes: Vec<_> = pool.install(|| {
                chunk
                    .par_iter()
                    .map(|g| evaluate_graph(&g.graph, &theorems, &params))
                    .collect()
            });
            for (i, (input, outcomes)) in chunk.iter().zip(outcomes).enumerate() {
                for (theorem, outcome) in outcomes {
                    let (verdict, reason) = match &outcome {
                        Ok(v) => (Some(v), None),
                        Err(e) => (None, Some(e.to_string())),
                    };
                    found |= verdict.is_some_and(|v| v.counterexample);
                    let rec = VerdictRecord {
                        record: "verdict",
                        graph_index: c * CHUNK + i,
                        line: input.line,
                        theorem,
                        status: if verdict.is_some() { "checked" } else { "skipped" },
                        reason,
                        verdict,
                    };
                    match format {
                        OutputFormat::Json => json_line(out, &rec)?,
                        OutputFormat::Csv => out.write_all(verdict_csv(&rec).as_bytes())?,
                    }
                }
            }
        }
        Ok(found)
    })?;
    Ok(if failed {
        EXIT_ERROR
    } else if found {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}

fn verdict_csv(rec: &VerdictRecord) -> String {
    let v = rec.verdict;
    csv_row([
        rec.graph_index.to_string(),
        rec.line.to_string(),
        rec.theorem.to_string(),
        rec.status.to_string(),
        opt(v.and_then(|v| v.r).map(sig12)),
        opt(v.and_then(|v| v.k)),
        opt(v.map(|v| v.n)),
        opt(v.map(|v| v.delta)),
        opt(v.map(|v| v.hypothesis_holds)),
        opt(v.map(|v| sig12(v.margin))),
        opt(v.map(|v| v.conclusion_holds)),
        opt(v.and_then(|v| v.conclusion_bound).map(sig12)),
        opt(v.map(|v| v.counterexample)),
        rec.reason.clone().unwrap_or_default(),
    ])
}

#[derive(Serialize)]
struct HuntSummary<'a> {
    record: &'static str,
    theorems: &'a [TheoremId],
    params: &'a HuntParams,
    #[serde(flatten)]
    report: &'a HuntReport,
}

fn hunt(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let (theorems, params) = hunt_params(&args)?;
    let (graphs, failed) = load_input(&args.input, stderr)?;
    let report = hunt_counterexamples(
        graphs.into_iter().map(|g| g.graph),
        &theorems,
        &params,
        args.output.jobs,
    )?;
    let format = args.output.format;
    with_output(args.output.output.as_deref(), stdout, |out| {
        match format {
            OutputFormat::Json => json_line(
                out,
                &HuntSummary { record: "hunt_summary", theorems: &theorems, params: &params, report: &report },
            ),
            OutputFormat::Csv => {
                let header = ["theorem", "checked", "hypothesis_held", "vacuous", "skipped", "counterexamples"];
                out.write_all(csv_row(header).as_bytes())?;
                for (t, c) in &report.per_theorem {
                    out.write_all(
                        csv_row([
                            t.to_string(),
                            c.checked.to_string(),
                            c.hypothesis_held.to_string(),
                            c.vacuous.to_string(),
                            c.skipped.to_string(),
                            c.counterexamples.to_string(),
                        ])
                        .as_bytes(),
                    )?;
                }
                Ok(())
            }
        }
    })?;
    for ce in &report.counterexamples {
        writeln!(
            stderr,
            "counterexample: graph {} ({}) fails {}",
            ce.graph_index,
            ce.graph6.as_deref().unwrap_or("n > 62"),
            ce.verdict.theorem
        )?;
    }
    Ok(if failed { EXIT_ERROR } else { counterexample_exit_code(&report) })
}

// ---------------------------------------------------------------- sweep

fn tightness_kind(family: SweepFamily) -> TightnessKind {
    match family {
        SweepFamily::Bipartite => TightnessKind::Bipartite,
        SweepFamily::Join => TightnessKind::Join,
    }
}

#[derive(Serialize)]
struct SweepRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    row: &'a SweepRow,
}

const SWEEP_CSV_HEADER: [&str; 12] = [
    "s", "t", "n", "mu2", "mun", "ratio", "alpha_prime", "bound", "gap", "r", "closed_form_ratio",
    "deficit",
];

fn sweep(args: SweepArgs, stdout: &mut dyn Write) -> Result<i32> {
    let s_values = parse_s_range(&args.s_range)?;
    let rows = tightness_sweep(tightness_kind(args.family), args.r, args.a, s_values)?;
    with_output(args.output.as_deref(), stdout, |out| {
        if args.format == OutputFormat::Csv {
            out.write_all(csv_row(SWEEP_CSV_HEADER).as_bytes())?;
        }
        for row in &rows {
            match args.format {
                OutputFormat::Json => json_line(out, &SweepRecord { record: "sweep_row", row })?,
                OutputFormat::Csv => out.write_all(
                    csv_row([
                        row.s.to_string(),
                        row.t.to_string(),
                        row.n.to_string(),
                        sig12(row.mu2),
                        sig12(row.mun),
                        sig12(row.ratio),
                        row.alpha_prime.to_string(),
                        sig12(row.bound),
                        sig12(row.gap),
                        sig12(row.r),
                        sig12(row.closed_form_ratio),
                        sig12(row.deficit),
                    ])
                    .as_bytes(),
                )?,
            }
        }
        Ok(())
    })?;
    if let Some(path) = &args.plot_data {
        let mut text = String::from("# s gap\n");
        for row in &rows {
            text.push_str(&format!("{} {}\n", row.s, sig12(row.gap)));
        }
        std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- generate

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidParameter(format!("family {family} needs --{flag}")))
}

/// Parses a block name such as `C5` (cycle) or `K4` (complete graph).
fn parse_block(name: &str) -> Result<Graph> {
    let name = name.trim();
    let bad = || Error::InvalidParameter(format!("bad block {name:?}, expected Cn or Kn"));
    let (kind, size) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    let size: usize = size.parse().map_err(|_| bad())?;
    match kind {
        "C" | "c" => make_cycle(size),
        "K" | "k" => make_complete(size),
        _ => Err(bad()),
    }
}

fn generated_graphs(args: &GenerateArgs) -> Result<Vec<Graph>> {
    let family = args.family.as_str();
    let s = || need(args.s, "s", family);
    let t = || need(args.t, "t", family);
    let n = || need(args.n, "n", family);
    Ok(match family {
        "complete_bipartite" => vec![make_complete_bipartite(s()?, t()?)?],
        "join_clique_independent" => vec![make_join_clique_independent(s()?, t()?)?],
        "star" => vec![make_star(t()?)?],
        "path" => vec![make_path(n()?)?],
        "cycle" => vec![make_cycle(n()?)?],
        "complete" => vec![make_complete(n()?)?],
        "connected" => connected_graphs(n()?)?,
        "random" => {
            let n = n()?;
            let p = need(args.p, "p", family)?;
            let seed = need(args.seed, "seed", family)?;
            (0..args.count as u64)
                .map(|i| make_random(n, p, seed.wrapping_add(i)))
                .collect::<Result<_>>()?
        }
        "dumbbell" => {
            let spec = need(args.blocks.as_deref(), "blocks", family)?;
            let blocks = spec.split(',').map(parse_block).collect::<Result<Vec<_>>>()?;
            let [left, right] = blocks.as_slice() else {
                return Err(Error::InvalidParameter("dumbbell needs exactly two blocks".into()));
            };
            vec![make_dumbbell(left, right)?]
        }
        "tightness" => {
            let kind = tightness_kind(need(args.kind, "kind", family)?);
            let r = need(args.r, "r", family)?;
            let a = need(args.a, "a", family)?;
            let s_values = match (&args.s_range, args.s) {
                (Some(range), _) => parse_s_range(range)?,
                (None, Some(s)) => vec![s],
                (None, None) => return Err(Error::InvalidParameter("tightness needs --s or --s-range".into())),
            };
            s_values
                .into_iter()
                .map(|s| make_tightness_family(r, s, a, kind).map(|m| m.graph))
                .collect::<Result<_>>()?
        }
        other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
    })
}

fn generate(args: GenerateArgs, stdout: &mut dyn Write) -> Result<i32> {
    let graphs = generated_graphs(&args)?;
    let lines = graphs.iter().map(serialize_graph6).collect::<Result<Vec<_>>>()?;
    with_output(args.output.as_deref(), stdout, |out| {
        for line in &lines {
            writeln!(out, "{line}")?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}
