use std::fs::OpenOptions;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use deza::census::{build_family, existing_keys, parse_pipeline, run_census, CensusRecord, Outcome};
use deza::classify::{children, is_divisible_design_flag, is_strictly_deza, recognize_deza, recognize_srg};
use deza::graph6::{from_graph6, parse_lines, to_graph6};
use deza::spectra::spectrum;
use deza::switching::{
    chain_gdss2, find_seidel_automorphisms, Construction, GdssMode, Variant, SEIDEL_SEARCH_MAX_ORDER,
};
use deza::{induced_embedding, Error, Graph, Permutation};

/// Construct and certify Deza graphs obtained from strongly regular graphs.
///
/// Exit codes: 0 success, 1 a check or construction failed, 2 usage or I/O error.
#[derive(Parser)]
#[command(name = "deza", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 line of a named graph: lattice M, triangular N, rook2xm M, clebsch16.
    Construct {
        family: String,
        params: Vec<usize>,
    },
    /// List Seidel automorphisms (image arrays, one per line) of a graph.
    SeidelSearch {
        /// graph6 string; read from standard input when omitted.
        graph: Option<String>,
        /// Only fixed-point-free automorphisms.
        #[arg(long)]
        fpf: bool,
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Apply a construction to a graph and print the result as graph6.
    Switch {
        #[arg(value_enum)]
        construction: SwitchKind,
        /// graph6 string; read from standard input when omitted.
        graph: Option<String>,
        /// Permutation image, comma separated (acts on H for gdss1/gdss2).
        #[arg(long, conflicts_with = "search")]
        perm: Option<String>,
        /// Use the first Seidel automorphism found by search.
        #[arg(long)]
        search: bool,
        /// Vertices of H, comma separated, for gdss1/gdss2 (default: all).
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = VariantArg::N1)]
        variant: VariantArg,
        /// Print the certificate as JSON instead of the graph6 line.
        #[arg(long)]
        json: bool,
    },
    /// Report Deza and strongly regular parameters, spectrum and children of graph6 inputs.
    Verify {
        /// graph6 strings; read line by line from standard input when omitted.
        graphs: Vec<String>,
        /// Fail unless every input is a Deza graph with these parameters, e.g. 21,10,5,4.
        #[arg(long)]
        expect: Option<String>,
        /// Replay every record of a census file instead.
        #[arg(long, conflicts_with_all = ["graphs", "expect"])]
        census: Option<PathBuf>,
    },
    /// Run every worked scenario and print one verdict line each.
    ReproducePaper,
    /// Run a pipeline of tasks and append new records to a census file.
    Census {
        /// File with one JSON task per line.
        pipeline: PathBuf,
        /// Census file, created if missing, appended to otherwise.
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SwitchKind {
    DualSeidel,
    Gdss1,
    Gdss2,
    AddPerm,
    PermShift,
    ChainGdss2,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    N1,
    N2,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_)
            | Error::InvalidSubset(_)
            | Error::InvalidArgument(_)
            | Error::Parse { .. }
            | Error::UnsupportedSize { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        usage(e.to_string())
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn failed(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { family, params } => construct(&family, &params),
        Command::SeidelSearch { graph, fpf, limit } => seidel_search(graph, fpf, limit),
        Command::Switch {
            construction,
            graph,
            perm,
            search,
            subset,
            variant,
            json,
        } => switch(construction, graph, perm, search, subset, variant, json),
        Command::Verify { graphs, expect, census } => match census {
            Some(path) => replay(&path),
            None => verify(graphs, expect),
        },
        Command::ReproducePaper => reproduce(),
        Command::Census { pipeline, out } => census(&pipeline, &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("deza: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(arg: Option<String>) -> Result<Graph, Failure> {
    let text = match arg {
        Some(s) => s,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s.lines().find(|l| !l.trim().is_empty()).unwrap_or("").to_string()
        }
    };
    Ok(from_graph6(text.trim().as_bytes())?)
}

fn parse_usizes(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| usage(format!("bad integer '{x}' in '{s}'"))))
        .collect()
}

fn construct(family: &str, params: &[usize]) -> Result<(), Failure> {
    println!("{}", to_graph6(&build_family(family, params)?));
    Ok(())
}

fn seidel_search(graph: Option<String>, fpf: bool, limit: usize) -> Result<(), Failure> {
    let g = read_graph(graph)?;
    if g.n() > SEIDEL_SEARCH_MAX_ORDER {
        eprintln!(
            "deza: warning: search above {SEIDEL_SEARCH_MAX_ORDER} vertices may be slow; supply a permutation instead"
        );
    }
    let mut out = io::stdout().lock();
    for w in find_seidel_automorphisms(&g, fpf, limit) {
        let image: Vec<String> = w.perm.image().iter().map(ToString::to_string).collect();
        writeln!(out, "{}", image.join(","))?;
    }
    Ok(())
}

fn switch(
    kind: SwitchKind,
    graph: Option<String>,
    perm: Option<String>,
    search: bool,
    subset: Option<String>,
    variant: VariantArg,
    json: bool,
) -> Result<(), Failure> {
    let g = read_graph(graph)?;
    if let SwitchKind::ChainGdss2 = kind {
        let m = (1..=g.n()).find(|m| m * m >= g.n()).unwrap_or(0);
        let mut out = io::stdout().lock();
        for (h, cert) in chain_gdss2(&g, m)? {
            if json {
                writeln!(out, "{}", cert.to_json())?;
            } else {
                writeln!(out, "{}", to_graph6(&h))?;
            }
        }
        return Ok(());
    }
    let subset = match subset {
        Some(s) => parse_usizes(&s)?,
        None => (0..g.n()).collect(),
    };
    let acting_on = match kind {
        SwitchKind::Gdss1 | SwitchKind::Gdss2 => g.induced(&subset),
        _ => g.clone(),
    };
    let fpf = matches!(kind, SwitchKind::AddPerm | SwitchKind::PermShift);
    let perm = match (perm, search) {
        (Some(p), _) => Permutation::new(parse_usizes(&p)?)?,
        (None, true) => find_seidel_automorphisms(&acting_on, fpf, 1)
            .into_iter()
            .next()
            .map(|w| w.perm)
            .ok_or_else(|| failed("no Seidel automorphism found"))?,
        (None, false) => return Err(usage("give --perm or --search")),
    };
    let variant = match variant {
        VariantArg::N1 => Variant::N1,
        VariantArg::N2 => Variant::N2,
    };
    let construction = match kind {
        SwitchKind::DualSeidel => Construction::DualSeidel { parent: g, perm },
        SwitchKind::AddPerm => Construction::AddPermutation { parent: g, perm },
        SwitchKind::PermShift => Construction::PermutationShift { parent: g, perm },
        SwitchKind::Gdss1 | SwitchKind::Gdss2 => Construction::Gdss {
            embedding: induced_embedding(&g, &subset)?,
            p11: perm,
            variant,
            mode: if matches!(kind, SwitchKind::Gdss1) {
                GdssMode::Gdss1
            } else {
                GdssMode::Gdss2
            },
        },
        SwitchKind::ChainGdss2 => unreachable!("handled above"),
    };
    let (h, cert) = construction.run()?;
    if json {
        println!("{}", cert.to_json());
    } else {
        println!("{}", to_graph6(&h));
    }
    if !cert.all_checks_hold() {
        return Err(failed("certificate has failing checks"));
    }
    Ok(())
}

fn report(g: &Graph) -> Result<serde_json::Value, Failure> {
    let mut r = json!({ "graph6": to_graph6(g), "n": g.n() });
    r["srg"] = json!(recognize_srg(g).map(|p| p.tuple()));
    match recognize_deza(g) {
        Ok(p) => {
            r["deza"] = json!([p.n, p.k, p.b, p.a]);
            r["strict"] = json!(is_strictly_deza(g));
            r["spectrum"] = json!(spectrum(g)?.to_string());
            if let Ok(c) = children(g, &p) {
                r["children"] = json!({
                    "a": recognize_srg(&c.a_child).map(|s| s.tuple()),
                    "b": recognize_srg(&c.b_child).map(|s| s.tuple()),
                });
                r["divisible_design"] = json!(is_divisible_design_flag(&c));
            }
        }
        Err(e) => {
            r["deza"] = serde_json::Value::Null;
            r["reason"] = json!(e.to_string());
            r["spectrum"] = json!(spectrum(g)?.to_string());
        }
    }
    Ok(r)
}

fn verify(graphs: Vec<String>, expect: Option<String>) -> Result<(), Failure> {
    let graphs: Vec<Graph> = if graphs.is_empty() {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        parse_lines(&s)?
    } else {
        graphs
            .iter()
            .map(|s| from_graph6(s.as_bytes()))
            .collect::<Result<_, _>>()?
    };
    let expect = expect.map(|e| parse_usizes(&e)).transpose()?;
    if expect.as_ref().is_some_and(|e| e.len() != 4) {
        return Err(usage("--expect takes n,k,b,a"));
    }
    let mut mismatches = 0;
    for g in &graphs {
        let r = report(g)?;
        println!("{r}");
        if let Some(e) = &expect {
            if r["deza"] != json!(e) {
                mismatches += 1;
            }
        }
    }
    if mismatches > 0 {
        return Err(failed(format!("{mismatches} graph(s) do not have the expected parameters")));
    }
    Ok(())
}

fn replay(path: &PathBuf) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)?;
    let mut bad = 0;
    for (i, line) in text.lines().enumerate() {
        let value: serde_json::Value =
            serde_json::from_str(line).map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
        if value.get("error").is_some() {
            continue;
        }
        let record: CensusRecord =
            serde_json::from_value(value).map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
        let ok = record.replay().unwrap_or(false);
        println!("{} line {}: {}", if ok { "ok" } else { "MISMATCH" }, i + 1, record.canonical);
        bad += usize::from(!ok);
    }
    if bad > 0 {
        return Err(failed(format!("{bad} record(s) did not replay")));
    }
    Ok(())
}

fn reproduce() -> Result<(), Failure> {
    let reports = deza::reproduce::run_all();
    let failures = reports.iter().filter(|r| !r.passed()).count();
    for r in &reports {
        println!("{}", r.line());
    }
    println!("{} of {} scenarios passed", reports.len() - failures, reports.len());
    if failures > 0 {
        return Err(failed(format!("{failures} scenario(s) failed")));
    }
    Ok(())
}

fn census(pipeline: &PathBuf, out: &PathBuf) -> Result<(), Failure> {
    let text = std::fs::read_to_string(pipeline)
        .map_err(|e| usage(format!("cannot read {}: {e}", pipeline.display())))?;
    let tasks = parse_pipeline(&text)?;
    let existing = match std::fs::read_to_string(out) {
        Ok(s) => s,
        Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(usage(format!("cannot read {}: {e}", out.display()))),
    };
    let mut seen = existing_keys(&existing);
    let old_lines: std::collections::HashSet<&str> = existing.lines().collect();
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(out)
        .map_err(|e| usage(format!("cannot open {}: {e}", out.display())))?;
    let (mut added, mut failures) = (0, 0);
    for outcome in run_census(&tasks, &mut seen) {
        let line = match outcome {
            Outcome::Added(r) => {
                added += 1;
                serde_json::to_string(&r)
            }
            Outcome::Duplicate { line, canonical } => {
                eprintln!("note: task on line {line} duplicates {canonical}; skipped");
                continue;
            }
            Outcome::Failed(e) => {
                failures += 1;
                eprintln!("error: task on line {}: {}", e.line, e.error);
                serde_json::to_string(&e)
            }
        };
        let line = line.map_err(|e| usage(e.to_string()))?;
        // a failure already on record is not repeated
        if !old_lines.contains(line.as_str()) {
            writeln!(file, "{line}")?;
        }
    }
    eprintln!("{added} record(s) added, {failures} task failure(s)");
    if failures > 0 {
        return Err(failed(format!("{failures} task(s) failed")));
    }
    Ok(())
}
