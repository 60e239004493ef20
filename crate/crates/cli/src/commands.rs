//! Subcommand implementations. Each returns a JSON payload and a text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use cyconv_core::exact::{brute_force_hn, solve, SolveReport};
use cyconv_core::graph::{self, parse_graph, Multigraph};
use cyconv_core::knot::{analyze_knot, bundled_db, parse_pd, pd_to_plane_graph, KnotRecord};
use cyconv_core::plane::{hull_fc, trace_faces, FaceConvexity, PlaneGraph, RotationSystem};
use cyconv_core::poly::{hn_chordal, hn_forest, hn_grid_graph, hn_p4sparse};
use cyconv_core::random;
use cyconv_core::reduce::{lift_hull_set, reduce as reduce_graph, terminal_hull, TerminalKind};
use cyconv_core::{hull_cc, is_hull_set, CycleConvexity, Error, VertexSet};

use crate::{
    CensusArgs, ConvexityKind, GenArgs, GenKind, GraphArg, HnArgs, HullArgs, KnotArgs, Method,
};

pub struct Output {
    pub json: Value,
    pub text: String,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// A graph, with its embedding when the file is a rotation system.
struct Input {
    graph: Multigraph,
    plane: Option<PlaneGraph>,
}

fn load(arg: &GraphArg) -> Result<Input> {
    let text = read(&arg.graph)?;
    let is_rotation = serde_json::from_str::<Value>(&text)
        .ok()
        .is_some_and(|v| v.get("rotations").is_some());
    if is_rotation {
        let pg = trace_faces(&RotationSystem::parse(&text)?)?;
        Ok(Input {
            graph: pg.underlying().clone(),
            plane: Some(pg),
        })
    } else {
        Ok(Input {
            graph: parse_graph(&text)?,
            plane: None,
        })
    }
}

fn plane(input: &Input) -> Result<&PlaneGraph> {
    input.plane.as_ref().ok_or_else(|| {
        Error::Precondition(
            "face convexity needs an embedded input (a rotation system file)".into(),
        )
        .into()
    })
}

fn ids(set: &VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn hull(args: &HullArgs) -> Result<Output> {
    let input = load(&args.input)?;
    let n = input.graph.order();
    let seeds = VertexSet::try_from_ids(n, args.set.iter().copied())
        .map_err(|id| Error::VertexOutOfRange { id, n })?;
    let (hull, steps, witnesses): (VertexSet, Vec<Option<u32>>, BTreeMap<usize, Value>) =
        match args.convexity {
            ConvexityKind::Cycle => {
                let t = hull_cc(&input.graph, &seeds);
                let w = (0..n)
                    .filter_map(|v| t.witnesses[v].as_ref().map(|c| (v, json!(c))))
                    .collect();
                (t.hull, t.steps, w)
            }
            ConvexityKind::Face => {
                let pg = plane(&input)?;
                let t = hull_fc(pg, &seeds);
                let w = (0..n)
                    .filter_map(|v| {
                        t.witness_face[v].map(|f| {
                            (
                                v,
                                json!({"face": f, "vertices": pg.face_vertices(f).to_vec()}),
                            )
                        })
                    })
                    .collect();
                (t.hull, t.steps, w)
            }
        };
    let contaminated: BTreeMap<usize, u32> = (0..n)
        .filter_map(|v| steps[v].filter(|&k| k > 0).map(|k| (v, k)))
        .collect();
    let mut json = json!({
        "convexity": match args.convexity { ConvexityKind::Cycle => "cycle", ConvexityKind::Face => "face" },
        "set": seeds,
        "hull": hull,
        "is_hull_set": hull.is_full(),
        "steps": contaminated,
    });
    let mut text = format!("hull: {}\nhull set: {}\n", ids(&hull), hull.is_full());
    for (v, k) in &contaminated {
        let _ = write!(text, "step {k}: {v}");
        if args.trace {
            let _ = write!(text, "  via {}", witnesses[v]);
        }
        text.push('\n');
    }
    if args.trace {
        json["witnesses"] = json!(witnesses);
    }
    Ok(Output { json, text })
}

fn is_precondition(e: &Error) -> bool {
    matches!(e, Error::Precondition(_) | Error::NotP4Sparse(_))
}

fn hn_by(
    method: Method,
    g: &Multigraph,
    dims: Option<(usize, usize)>,
) -> Result<SolveReport, Error> {
    match method {
        Method::Forest => hn_forest(g),
        Method::Chordal => hn_chordal(g),
        Method::Grid => match dims {
            Some((m, n)) => {
                if graph::make_grid(m, n)? != *g {
                    return Err(Error::Precondition(format!(
                        "graph is not the {m}x{n} grid in row-major order"
                    )));
                }
                cyconv_core::poly::hn_grid(m, n)
            }
            None => hn_grid_graph(g),
        },
        Method::P4sparse => hn_p4sparse(g),
        Method::Exact => Ok(solve(&CycleConvexity::new(g))),
        Method::Bruteforce => brute_force_hn(&CycleConvexity::new(g)),
        Method::Auto => unreachable!("auto is resolved by the caller"),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::Exact => "exact",
        Method::Bruteforce => "bruteforce",
        Method::Chordal => "chordal",
        Method::Grid => "grid",
        Method::P4sparse => "p4sparse",
        Method::Forest => "forest",
    }
}

#[derive(Serialize)]
struct HnOutput<'a> {
    hn: usize,
    witness: &'a VertexSet,
    method: &'static str,
    convexity: &'static str,
    lower_bound: usize,
    forced: &'a VertexSet,
    nodes_explored: u64,
}

pub fn hn(args: &HnArgs) -> Result<Output> {
    let input = load(&args.input)?;
    let dims = args.rows.zip(args.cols);
    let (report, method, convexity) = match args.convexity {
        ConvexityKind::Face => {
            let conv = FaceConvexity::new(plane(&input)?);
            let report = match args.method {
                Method::Auto | Method::Exact => solve(&conv),
                Method::Bruteforce => brute_force_hn(&conv)?,
                other => {
                    return Err(Error::Precondition(format!(
                        "method {} applies to cycle convexity only",
                        method_name(other)
                    ))
                    .into())
                }
            };
            let m = if args.method == Method::Bruteforce {
                Method::Bruteforce
            } else {
                Method::Exact
            };
            (report, m, "face")
        }
        ConvexityKind::Cycle if args.method == Method::Auto => {
            let mut found = None;
            for m in [
                Method::Forest,
                Method::Chordal,
                Method::Grid,
                Method::P4sparse,
            ] {
                match hn_by(m, &input.graph, dims) {
                    Ok(r) => {
                        found = Some((r, m));
                        break;
                    }
                    Err(e) if is_precondition(&e) => continue,
                    Err(e) => return Err(e.into()),
                }
            }
            let (r, m) = match found {
                Some(x) => x,
                None => (hn_by(Method::Exact, &input.graph, dims)?, Method::Exact),
            };
            (r, m, "cycle")
        }
        ConvexityKind::Cycle => (
            hn_by(args.method, &input.graph, dims)?,
            args.method,
            "cycle",
        ),
    };
    let out = HnOutput {
        hn: report.hn,
        witness: &report.witness,
        method: method_name(method),
        convexity,
        lower_bound: report.lower_bound,
        forced: &report.forced,
        nodes_explored: report.nodes_explored,
    };
    let text = format!(
        "hn: {}\nwitness: {}\nmethod: {}\n",
        report.hn,
        ids(&report.witness),
        out.method
    );
    Ok(Output {
        json: serde_json::to_value(&out)?,
        text,
    })
}

pub fn reduce(args: &GraphArg) -> Result<Output> {
    let input = load(args)?;
    let g = &input.graph;
    let script = reduce_graph(g)?;
    let (terminal, exact_terminal) = match script.terminal_kind {
        TerminalKind::Nontrivial => {
            let last = script.replay()?.pop().expect("replay includes the input");
            let (dense, ids) = last.to_dense();
            let r = solve(&CycleConvexity::new(&dense));
            (r.witness.iter().map(|i| ids[i]).collect(), true)
        }
        _ => (terminal_hull(&script)?, false),
    };
    let lifted = lift_hull_set(&script, &terminal)?;
    let witness = VertexSet::from_ids(g.order(), lifted);
    if !is_hull_set(g, &witness) {
        return Err(Error::Internal(format!("lifted set {witness} is not a hull set")).into());
    }
    let mut text = String::new();
    for (i, step) in script.steps.iter().enumerate() {
        let _ = writeln!(text, "{i:>3} {} removes {:?}", step.op.name(), step.removed);
    }
    let _ = writeln!(
        text,
        "terminal: {} vertices ({})\nterminal hull set: {:?}\nbound: {}\nwitness: {}",
        script.terminal.vertices.len(),
        serde_json::to_value(script.terminal_kind)?
            .as_str()
            .unwrap_or(""),
        terminal,
        witness.len(),
        ids(&witness)
    );
    let json = json!({
        "bound": witness.len(),
        "witness": witness,
        "terminal_hull": terminal,
        "terminal_solved_exactly": exact_terminal,
        "script": script,
    });
    Ok(Output { json, text })
}

fn record_lines(records: &[KnotRecord]) -> String {
    let mut text = format!(
        "{:<10} {:>9} {:>5} {:>5}  witnesses\n",
        "name", "crossings", "hn_cc", "hn_fc"
    );
    for r in records {
        let _ = writeln!(
            text,
            "{:<10} {:>9} {:>5} {:>5}  {:?} {:?}",
            r.name, r.crossings, r.hn_cc, r.hn_fc, r.witness_cc, r.witness_fc
        );
    }
    text
}

pub fn knot(args: &KnotArgs) -> Result<Output> {
    let db = parse_pd(&read(&args.pd)?)?;
    let records = db
        .par_iter()
        .map(analyze_knot)
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Output {
        text: record_lines(&records),
        json: serde_json::to_value(&records)?,
    })
}

pub fn census(args: &CensusArgs) -> Result<Output> {
    let db = match &args.pd {
        Some(path) => parse_pd(&read(path)?)?,
        None => bundled_db(args.max_crossings >= 9),
    };
    let c = cyconv_core::knot::census(&db, args.max_crossings)?;
    let totals: BTreeMap<usize, usize> = c.counts.keys().map(|&k| (k, c.total(k))).collect();
    let json = json!({
        "max_crossings": args.max_crossings,
        "counts": c.counts,
        "totals": totals,
        "all_equal": c.differing().is_empty(),
        "records": c.records,
    });
    Ok(Output {
        text: c.to_text(),
        json,
    })
}

fn graph_output(g: &Multigraph) -> Result<Output> {
    let mut text = format!("{}\n", g.order());
    for (u, v) in g.edge_list() {
        let _ = writeln!(text, "{u} {v}");
    }
    Ok(Output {
        json: serde_json::to_value(g.to_json())?,
        text,
    })
}

fn plane_output(pg: &PlaneGraph) -> Result<Output> {
    let json = serde_json::to_value(pg.to_rotation_system())?;
    let text = format!("{json}\n");
    Ok(Output { json, text })
}

pub fn gen(args: &GenArgs) -> Result<Output> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let g = match &args.kind {
        GenKind::Grid { m, n } => graph::make_grid(*m, *n)?,
        GenKind::Gk { k } => graph::make_gk(*k)?,
        GenKind::Complete { n } => graph::make_complete(*n),
        GenKind::Cycle { n } => graph::make_cycle(*n)?,
        GenKind::Path { n } => graph::make_path(*n)?,
        GenKind::RandomChordal { n } => random::random_chordal(&mut rng, *n, 0.5),
        GenKind::RandomP4sparse { n } => random::random_p4sparse(&mut rng, *n),
        GenKind::RandomForest { n } => random::random_forest(&mut rng, *n, 0.8),
        GenKind::RandomFourRegular { n } => {
            if *n < 2 {
                return Err(Error::Precondition(
                    "a loopless 4-regular graph needs two vertices".into(),
                )
                .into());
            }
            random::random_four_regular(&mut rng, *n)
        }
        GenKind::RandomPlane { m, n } => {
            if *m < 2 || *n < 2 {
                return Err(
                    Error::Precondition("both grid dimensions must be at least 2".into()).into(),
                );
            }
            return plane_output(&random::random_planar_four_regular(&mut rng, *m, *n, 0.5));
        }
        GenKind::Diagram { pd } => {
            let db = parse_pd(&read(pd)?)?;
            let first = db
                .first()
                .ok_or_else(|| Error::Parse("no diagram in the PD file".into()))?;
            return plane_output(&pd_to_plane_graph(first)?);
        }
    };
    graph_output(&g)
}
