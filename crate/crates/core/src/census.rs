//! Pipeline tasks and the append-only census of certified results.
//!
//! A pipeline file holds one JSON task per line (blank lines and lines starting
//! with `#` are skipped):
//!
//! ```text
//! {"family": "triangular", "params": [7], "construction": "gdss1",
//!  "subgraph": "lattice:3", "witness": "transpose", "variant": "N1"}
//! ```
//!
//! The census file holds one JSON record per line; the canonical graph6 string
//! of the output is the deduplication key.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::classify::{children, recognize_srg};
use crate::error::{Error, Result};
use crate::families::{
    clebsch_16_10, lattice_central, lattice_graph, lattice_in_triangular, lattice_rows,
    lattice_sublattice, lattice_transpose, rook_2xm, rook_2xm_central, triangular_graph,
    triangular_neighbourhood_rook, triangular_reflection, triangular_sub,
};
use crate::graph::{induced_embedding, Graph, Permutation};
use crate::graph6::to_graph6;
use crate::iso::canonical_form;
use crate::spectra::spectrum;
use crate::switching::{
    chain_gdss2, find_seidel_automorphisms, Construction, GdssMode, SwitchCertificate, Variant,
};

/// Builds a graph from a family name and its integer parameters.
pub fn build_family(family: &str, params: &[usize]) -> Result<Graph> {
    let one = |what: &str| match params {
        [x] => Ok(*x),
        _ => Err(Error::InvalidParameter(format!(
            "{what} takes exactly one parameter, got {}",
            params.len()
        ))),
    };
    match family {
        "lattice" => lattice_graph(one("lattice")?),
        "triangular" => triangular_graph(one("triangular")?),
        "rook2xm" => rook_2xm(one("rook2xm")?),
        "clebsch16" if params.is_empty() => Ok(clebsch_16_10()),
        "clebsch16" => Err(Error::InvalidParameter("clebsch16 takes no parameters".into())),
        other => Err(Error::InvalidParameter(format!(
            "unknown family '{other}' (expected lattice, triangular, clebsch16 or rook2xm)"
        ))),
    }
}

/// Vertex set of `H`: a named subgraph or an explicit list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgraphSpec {
    Named(String),
    Vertices(Vec<usize>),
}

/// Seidel automorphism source: a name or an explicit image array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessSpec {
    Named(String),
    Image(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    pub family: String,
    #[serde(default)]
    pub params: Vec<usize>,
    /// One of `dual-seidel`, `gdss1`, `gdss2`, `add-perm`, `perm-shift`, `chain-gdss2`.
    pub construction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgraph: Option<SubgraphSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSpec>,
}

/// Shape of a graph as far as named symmetries are concerned.
#[derive(Clone, Copy, Debug)]
enum Shape {
    Lattice(usize),
    Triangular(usize),
    Rook(usize),
    Other,
}

fn family_shape(family: &str, params: &[usize]) -> Shape {
    match (family, params) {
        ("lattice", [m]) => Shape::Lattice(*m),
        ("triangular", [n]) => Shape::Triangular(*n),
        ("rook2xm", [m]) => Shape::Rook(*m),
        _ => Shape::Other,
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad integer '{x}' in '{s}'")))
        })
        .collect()
}

/// Resolves a subgraph description against a parent of the given shape.
fn resolve_subgraph(parent: Shape, n: usize, spec: &SubgraphSpec) -> Result<(Vec<usize>, Shape)> {
    let name = match spec {
        SubgraphSpec::Vertices(v) => return Ok((v.clone(), Shape::Other)),
        SubgraphSpec::Named(s) => s.as_str(),
    };
    let (head, arg) = name.split_once(':').unwrap_or((name, ""));
    let bad = || Error::InvalidArgument(format!("subgraph '{name}' does not apply to this parent"));
    match (head, parent) {
        ("all", _) => Ok(((0..n).collect(), parent)),
        ("lattice", Shape::Triangular(t)) => {
            let m = parse_list(arg)?[..].first().copied().ok_or_else(bad)?;
            Ok((lattice_in_triangular(t, m)?, Shape::Lattice(m)))
        }
        ("lattice", Shape::Lattice(big)) => {
            let m = parse_list(arg)?[..].first().copied().ok_or_else(bad)?;
            Ok((lattice_sublattice(big, m)?, Shape::Lattice(m)))
        }
        ("triangular", Shape::Triangular(t)) => {
            let k = parse_list(arg)?[..].first().copied().ok_or_else(bad)?;
            Ok((triangular_sub(t, k)?, Shape::Triangular(k)))
        }
        ("rows", Shape::Lattice(m)) => {
            let rows = parse_list(arg)?;
            let shape = if rows.len() == 2 { Shape::Rook(m) } else { Shape::Other };
            Ok((lattice_rows(m, &rows)?, shape))
        }
        ("neighbourhood", Shape::Triangular(t)) => {
            Ok((triangular_neighbourhood_rook(t)?, Shape::Rook(t - 2)))
        }
        _ => Err(bad()),
    }
}

fn resolve_witness(g: &Graph, shape: Shape, spec: &WitnessSpec, require_fpf: bool) -> Result<Permutation> {
    let name = match spec {
        WitnessSpec::Image(v) => return Permutation::new(v.clone()),
        WitnessSpec::Named(s) => s.as_str(),
    };
    let unknown = || {
        Error::InvalidArgument(format!("witness '{name}' is not defined for this graph"))
    };
    let (head, arg) = name.split_once(':').unwrap_or((name, ""));
    match (head, shape) {
        ("transpose", Shape::Lattice(m)) => Ok(lattice_transpose(m)),
        ("central", Shape::Lattice(m)) => Ok(lattice_central(m)),
        ("central", Shape::Rook(m)) => Ok(rook_2xm_central(m)),
        ("reflection", Shape::Triangular(n)) => Ok(triangular_reflection(n)),
        ("search", _) => {
            let index = if arg.is_empty() { 0 } else { parse_list(arg)?[0] };
            find_seidel_automorphisms(g, require_fpf, index + 1)
                .into_iter()
                .nth(index)
                .map(|w| w.perm)
                .ok_or_else(|| {
                    Error::PreconditionViolation(format!("search found no Seidel automorphism #{index}"))
                })
        }
        _ => Err(unknown()),
    }
}

fn parse_variant(v: Option<&str>) -> Result<Variant> {
    match v.unwrap_or("N1") {
        "N1" | "n1" => Ok(Variant::N1),
        "N2" | "n2" => Ok(Variant::N2),
        other => Err(Error::InvalidArgument(format!("unknown variant '{other}'"))),
    }
}

impl Task {
    /// Resolves the task to the constructions it describes.
    pub fn constructions(&self) -> Result<Vec<Construction>> {
        let parent = build_family(&self.family, &self.params)?;
        let shape = family_shape(&self.family, &self.params);
        let witness = self
            .witness
            .clone()
            .unwrap_or_else(|| WitnessSpec::Named("search".into()));
        let whole = |fpf: bool| resolve_witness(&parent, shape, &witness, fpf);
        let one = |c: Construction| Ok(vec![c]);
        match self.construction.as_str() {
            "dual-seidel" => one(Construction::DualSeidel {
                perm: whole(false)?,
                parent,
            }),
            "add-perm" => one(Construction::AddPermutation {
                perm: whole(true)?,
                parent,
            }),
            "perm-shift" => one(Construction::PermutationShift {
                perm: whole(true)?,
                parent,
            }),
            "gdss1" | "gdss2" => {
                let mode = if self.construction == "gdss1" {
                    GdssMode::Gdss1
                } else {
                    GdssMode::Gdss2
                };
                let spec = self
                    .subgraph
                    .clone()
                    .unwrap_or_else(|| SubgraphSpec::Named("all".into()));
                let (subset, sub_shape) = resolve_subgraph(shape, parent.n(), &spec)?;
                let embedding = induced_embedding(&parent, &subset)?;
                let p11 = resolve_witness(&embedding.induced(), sub_shape, &witness, false)?;
                one(Construction::Gdss {
                    embedding,
                    p11,
                    variant: parse_variant(self.variant.as_deref())?,
                    mode,
                })
            }
            other => Err(Error::InvalidArgument(format!("unknown construction '{other}'"))),
        }
    }

    /// Runs the task, returning one graph and certificate per output.
    pub fn run(&self) -> Result<Vec<(Graph, SwitchCertificate)>> {
        if self.construction == "chain-gdss2" {
            let m = match (self.family.as_str(), &self.params[..]) {
                ("lattice", [m]) => *m,
                _ => {
                    return Err(Error::InvalidArgument(
                        "chain-gdss2 needs family lattice with one parameter".into(),
                    ))
                }
            };
            return chain_gdss2(&lattice_graph(m)?, m);
        }
        self.constructions()?.iter().map(Construction::run).collect()
    }
}

/// Parses a pipeline file; the error carries the 1-based line number.
pub fn parse_pipeline(text: &str) -> Result<Vec<(usize, Task)>> {
    let mut out = vec![];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let task = serde_json::from_str(line).map_err(|e| Error::Parse {
            offset: i + 1,
            message: format!("line {}: {e}", i + 1),
        })?;
        out.push((i + 1, task));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChildRecord {
    /// `(n, k, lambda, mu)` when the child is strongly regular.
    pub srg: Option<(usize, usize, usize, usize)>,
    /// Canonical graph6 of the child, its isomorphism class.
    pub canonical: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub construction: String,
    pub inputs: Task,
    /// Index of the output when one task produces several graphs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub b: usize,
    pub a: usize,
    pub spectrum: String,
    pub children: Option<[ChildRecord; 2]>,
    pub strict: bool,
    pub canonical: String,
}

impl CensusRecord {
    pub fn new(task: &Task, step: Option<usize>, g: &Graph, cert: &SwitchCertificate) -> Result<Self> {
        let p = cert.output;
        let kids = match children(g, &p) {
            Ok(c) => {
                let record = |h: &Graph| -> Result<ChildRecord> {
                    Ok(ChildRecord {
                        srg: recognize_srg(h).map(|s| s.tuple()),
                        canonical: canonical_form(h)?.graph6,
                    })
                };
                Some([record(&c.a_child)?, record(&c.b_child)?])
            }
            Err(_) => None,
        };
        Ok(CensusRecord {
            construction: cert.construction.kind().to_string(),
            inputs: task.clone(),
            step,
            graph6: to_graph6(g),
            n: p.n,
            k: p.k,
            b: p.b,
            a: p.a,
            spectrum: spectrum(g)?.to_string(),
            children: kids,
            strict: cert.strict,
            canonical: canonical_form(g)?.graph6,
        })
    }

    /// Re-runs the recorded task and checks that it reproduces the same canonical graph.
    pub fn replay(&self) -> Result<bool> {
        let outputs = self.inputs.run()?;
        let index = self.step.unwrap_or(0);
        let Some((g, _)) = outputs.get(index) else {
            return Ok(false);
        };
        Ok(canonical_form(g)?.graph6 == self.canonical)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub error: String,
    pub line: usize,
    pub inputs: Task,
}

/// What happened to one output of one task.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Added(Box<CensusRecord>),
    Duplicate { line: usize, canonical: String },
    Failed(ErrorRecord),
}

/// Canonical keys already present in a census file's contents.
pub fn existing_keys(census: &str) -> HashSet<String> {
    census
        .lines()
        .filter_map(|l| serde_json::from_str::<serde_json::Value>(l).ok())
        .filter_map(|v| v.get("canonical")?.as_str().map(str::to_string))
        .collect()
}

/// Runs every task in order; records whose canonical key is in `seen` are
/// reported as duplicates, new keys are added to `seen`.
pub fn run_census(tasks: &[(usize, Task)], seen: &mut HashSet<String>) -> Vec<Outcome> {
    let mut out = vec![];
    for (line, task) in tasks {
        let fail = |e: Error| {
            Outcome::Failed(ErrorRecord {
                error: e.to_string(),
                line: *line,
                inputs: task.clone(),
            })
        };
        let results = match task.run() {
            Ok(r) => r,
            Err(e) => {
                out.push(fail(e));
                continue;
            }
        };
        let multi = results.len() > 1;
        for (i, (g, cert)) in results.iter().enumerate() {
            match CensusRecord::new(task, multi.then_some(i), g, cert) {
                Ok(rec) if seen.contains(&rec.canonical) => out.push(Outcome::Duplicate {
                    line: *line,
                    canonical: rec.canonical,
                }),
                Ok(rec) => {
                    seen.insert(rec.canonical.clone());
                    out.push(Outcome::Added(Box::new(rec)));
                }
                Err(e) => out.push(fail(e)),
            }
        }
    }
    out
}
