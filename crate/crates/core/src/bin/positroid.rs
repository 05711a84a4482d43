//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 input error. Errors go to
//! stderr as `{"error": code, "detail": message}`.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use positroid::geometry::{
    graph_svg, membrane_from_graph, membrane_svg, tiling_from_graph, tiling_svg, CyclicProjection,
};
use positroid::measurement::{boundary_measurement, VertexData};
use positroid::moves::{build_reduced_plabic, flip_graph};
use positroid::positroid::bases_from_json;
use positroid::weak_separation::{maximal_size, maximal_ws_collections};
use positroid::{baues, verify};
use positroid::{
    DecoratedPermutation, Error, GrassmannNecklace, GrassmannianGraph, Positroid, Result,
};

#[derive(Parser)]
#[command(
    name = "positroid",
    version,
    about = "Positroids, plabic graphs and their geometry"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Perm,
    Necklace,
    Positroid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Picture {
    Graph,
    Tiling,
    Membrane,
}

#[derive(Subcommand)]
enum Cmd {
    /// Convert between decorated permutations, necklaces and positroids.
    Convert {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        /// Input file; stdin when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Ground set size, needed when a positroid is given as a bare list of bases.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run an oracle suite.
    Verify {
        #[arg(long, value_parser = verify::SUITES)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Operations on a single graph.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Boundary measurement with seeded positive vertex data.
    Measure {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Flip graph of complete reduced plabic graphs of type (k, n).
    Flipgraph {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Include every node and edge.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weakly separated collections.
    Wsc {
        #[command(subcommand)]
        cmd: WscCmd,
    },
    /// Monotone paths on the hypersimplex.
    Paths {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Count only the longest paths.
        #[arg(long)]
        longest: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Reduced plabic graph for a decorated permutation.
    Build {
        /// One-line notation, e.g. "3,4,5,1,2".
        #[arg(long)]
        perm: String,
        /// Fixed point colors, e.g. "2=1,4=0"; unspecified fixed points get 0.
        #[arg(long, default_value = "")]
        colors: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    ReduceCheck {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    Strands {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Faces {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual tiling of a complete reduced graph.
    Tile {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Membrane {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Dot {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Svg {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "tiling")]
        kind: Picture,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum WscCmd {
    /// All maximal weakly separated collections in binom([n], k).
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Input(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => Ok(std::fs::read_to_string(p)?),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_json(path: &Option<PathBuf>) -> Result<Value> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn read_graph(path: &Option<PathBuf>) -> Result<GrassmannianGraph> {
    GrassmannianGraph::from_json(&read_json(path)?)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            let mut stdout = std::io::stdout().lock();
            let nl = if text.ends_with('\n') { "" } else { "\n" };
            match write!(stdout, "{text}{nl}").and_then(|_| stdout.flush()) {
                // A closed pipe (`| head`) is not an error.
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn emit_json(v: &Value, out: &Option<PathBuf>) -> Result<()> {
    emit(&serde_json::to_string_pretty(v)?, out)
}

fn parse_perm(perm: &str, colors: &str) -> Result<DecoratedPermutation> {
    let images = perm
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad entry {x:?} in --perm")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut col: BTreeMap<usize, u8> = BTreeMap::new();
    for part in colors.split(',').filter(|p| !p.trim().is_empty()) {
        let (i, c) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad color {part:?}")))?;
        let i = i
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad color {part:?}")))?;
        let c = c
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad color {part:?}")))?;
        col.insert(i, c);
    }
    for (p, &x) in images.iter().enumerate() {
        if x == p + 1 {
            col.entry(p + 1).or_insert(0);
        }
    }
    DecoratedPermutation::new(images, &col)
}

/// `{"n": 5, "w": [3,4,5,1,2], "colors": {"2": 1}}`; validation errors keep their own codes.
fn perm_from_json(v: &Value) -> Result<DecoratedPermutation> {
    let w: Vec<usize> = serde_json::from_value(
        v.get("w")
            .cloned()
            .ok_or_else(|| Error::Parse("missing w".into()))?,
    )?;
    if let Some(n) = v.get("n").and_then(Value::as_u64) {
        if n as usize != w.len() {
            return Err(Error::SizeMismatch(format!(
                "n = {n} but w has {} entries",
                w.len()
            )));
        }
    }
    let raw: BTreeMap<String, u8> = match v.get("colors") {
        Some(c) => serde_json::from_value(c.clone())?,
        None => BTreeMap::new(),
    };
    let colors = raw
        .into_iter()
        .map(|(i, c)| {
            i.parse::<usize>()
                .map(|i| (i, c))
                .map_err(|_| Error::Parse(format!("bad color key {i:?}")))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    DecoratedPermutation::new(w, &colors)
}

fn positroid_json(m: &Positroid) -> Value {
    json!({"n": m.n(), "k": m.k(), "bases": m})
}

fn convert(from: Kind, to: Kind, input: &Value, n: Option<usize>) -> Result<Value> {
    let w: DecoratedPermutation = match from {
        Kind::Perm => perm_from_json(input)?,
        Kind::Necklace => {
            let sets: Vec<positroid::Subset> = serde_json::from_value(input.clone())?;
            GrassmannNecklace::new(sets.len(), sets)?.permutation()?
        }
        Kind::Positroid => {
            let (n, bases) = match input {
                Value::Object(o) => {
                    let n = o
                        .get("n")
                        .and_then(Value::as_u64)
                        .ok_or_else(|| Error::Parse("missing n".into()))?;
                    (
                        n as usize,
                        bases_from_json(
                            o.get("bases")
                                .ok_or_else(|| Error::Parse("missing bases".into()))?,
                        )?,
                    )
                }
                other => (
                    n.ok_or_else(|| Error::InvalidInput("a bare list of bases needs --n".into()))?,
                    bases_from_json(other)?,
                ),
            };
            Positroid::try_new(n, bases)?.necklace().permutation()?
        }
    };
    Ok(match to {
        Kind::Perm => serde_json::to_value(&w)?,
        Kind::Necklace => serde_json::to_value(w.necklace())?,
        Kind::Positroid => positroid_json(&w.necklace().positroid()),
    })
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    match cli.cmd {
        Cmd::Convert { from, to, input, n } => {
            let v = convert(from, to, &read_json(&input)?, n)?;
            emit_json(&v, &None)?;
        }
        Cmd::Verify { suite, max_n, out } => {
            let report = verify::run_suite(&suite, max_n)?;
            let v = report.to_json();
            emit_json(&v, &out)?;
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Cmd::Graph { cmd } => graph(cmd)?,
        Cmd::Measure { graph, seed, out } => {
            let g = read_graph(&graph)?;
            let p = boundary_measurement(&g, &VertexData::seeded(&g, seed))?;
            emit_json(&p.to_json(), &out)?;
        }
        Cmd::Flipgraph { k, n, full, out } => {
            let fg = flip_graph(k, n)?;
            let v = if full {
                fg.to_json()
            } else {
                json!({
                    "k": k,
                    "n": n,
                    "nodes": fg.node_count(),
                    "edges": fg.edge_count(),
                    "connected": fg.is_connected(),
                    "diameter": fg.diameter(),
                })
            };
            emit_json(&v, &out)?;
        }
        Cmd::Wsc {
            cmd: WscCmd::Enumerate { k, n, out },
        } => {
            let cs = maximal_ws_collections(k, n)?;
            let v = json!({
                "k": k,
                "n": n,
                "count": cs.len(),
                "size": maximal_size(k, n),
                "collections": cs.iter().map(|c| c.iter().map(|s| s.label()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            emit_json(&v, &out)?;
        }
        Cmd::Paths { k, n, longest, out } => {
            let v = if longest {
                let (len, count) = baues::longest_monotone_paths(k, n)?;
                json!({"k": k, "n": n, "length": len, "longest": count.to_string(),
                       "hook_length": baues::hook_length_count(k, n).to_string()})
            } else {
                let (lo, hi) = baues::path_length_range(k, n)?;
                json!({"k": k, "n": n, "paths": baues::monotone_paths(k, n)?.to_string(),
                       "shortest": lo, "longest_length": hi})
            };
            emit_json(&v, &out)?;
        }
    }
    Ok(())
}

fn graph(cmd: GraphCmd) -> Result<()> {
    match cmd {
        GraphCmd::Build { perm, colors, out } => {
            let g = build_reduced_plabic(&parse_perm(&perm, &colors)?)?;
            emit_json(&g.to_json(), &out)
        }
        GraphCmd::ReduceCheck { input } => {
            let g = read_graph(&input)?;
            let v = g.reduced_violation();
            emit_json(
                &json!({"reduced": v.is_none(), "violation": v.map(|v| v.to_string())}),
                &None,
            )
        }
        GraphCmd::Strands { input, out } => {
            let g = read_graph(&input)?;
            let strands: Vec<Value> = g
                .strands()
                .iter()
                .map(|s| json!({"start": s.start, "end": s.end, "half_edges": s.half_edges}))
                .collect();
            let perm = g
                .strand_permutation()
                .ok()
                .map(serde_json::to_value)
                .transpose()?;
            emit_json(
                &json!({"permutation": perm, "reduced": g.is_reduced(), "strands": strands}),
                &out,
            )
        }
        GraphCmd::Faces { input, out } => {
            let g = read_graph(&input)?;
            let labels = g.face_labels()?;
            let faces = g.faces();
            let list: Vec<Value> = (0..faces.count())
                .map(|f| {
                    let boundary: Vec<usize> = faces.arcs(f).to_vec();
                    json!({"face": f, "label": labels[f].label(), "internal": faces.is_internal(f), "boundary_arcs": boundary})
                })
                .collect();
            let distinct: BTreeSet<String> = labels.iter().map(|s| s.label()).collect();
            emit_json(&json!({"faces": list, "labels": distinct}), &out)
        }
        GraphCmd::Tile { input, out } => {
            let g = read_graph(&input)?;
            let t = tiling_from_graph(&g, &CyclicProjection::standard(g.n()))?;
            emit_json(&t.to_json(), &out)
        }
        GraphCmd::Membrane { input, out } => {
            let g = read_graph(&input)?;
            emit_json(&membrane_from_graph(&g)?.to_json(), &out)
        }
        GraphCmd::Dot { input, out } => emit(&read_graph(&input)?.to_dot(), &out),
        GraphCmd::Svg { input, kind, out } => {
            let g = read_graph(&input)?;
            let p = CyclicProjection::standard(g.n());
            let svg = match kind {
                Picture::Graph => graph_svg(&g, &p)?,
                Picture::Tiling => tiling_svg(&tiling_from_graph(&g, &p)?)?,
                Picture::Membrane => membrane_svg(&membrane_from_graph(&g)?, &p)?,
            };
            emit(&svg, &out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("{}", json!({"error": e.code(), "detail": e.to_string()}));
            ExitCode::from(2)
        }
    }
}
