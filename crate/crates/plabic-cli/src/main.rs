//! Command-line surface over the plabic library.
//!
//! Every subcommand takes a graph from `--fixture NAME` or `--input PATH`
//! and prints either a human-readable table or line-delimited records
//! (`--format records`). Output for a fixed input is byte-identical across
//! runs. Exit codes: 0 success, 1 input error or failed comparison, 2
//! internal invariant failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use plabic::ehrhart::{count_lattice_points, ehrhart_data};
use plabic::error::Error;
use plabic::fixtures::{builtin, builtin_names, validate_fixture};
use plabic::graph::{dart_edge, dart_forward, parse_graph, DiskGraph};
use plabic::matching::{
    enumerate_flows, enumerate_matchings, enumerate_orientations, FlowComponent, Orientation,
};
use plabic::measurement::{evaluate_plucker, plucker_polynomials};
use plabic::polytope::{build_polytope, face_lattice, facets};
use plabic::positroid::{matroid_polytope, positroid_bases, project_psi};
use plabic::sets::BoundarySet;

#[derive(Parser)]
#[command(name = "plabic", version, about = "plane-bipartite disk graphs: matchings, flows, positroids, matching polytopes", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Human,
    Records,
}

#[derive(Args)]
struct Source {
    /// Built-in fixture name (see `plabic fixture --list`).
    #[arg(long, conflicts_with = "input")]
    fixture: Option<String>,
    /// Graph file path.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output style.
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct OrientationPick {
    /// Source set selecting the perfect orientation, e.g. `1,3`.
    /// Defaults to the first orientation in canonical order.
    #[arg(long)]
    orientation: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a graph, printing a summary.
    Validate(Source),
    /// The type (k,n) of the graph.
    Type(Source),
    /// All almost perfect matchings, one sorted edge list per line.
    Matchings(Source),
    /// All perfect orientations with their source sets and edge tails.
    Orientations(Source),
    /// All flows of one perfect orientation.
    Flows {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        pick: OrientationPick,
    },
    /// Symbolic Pluecker coordinates of one perfect orientation.
    Pluecker {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        pick: OrientationPick,
    },
    /// Evaluate Pluecker coordinates at positive edge weights.
    Evaluate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        pick: OrientationPick,
        /// Weight assignment `edge=num/den,...`.
        #[arg(long, conflicts_with = "all_ones")]
        weights: Option<String>,
        /// Give every edge weight 1.
        #[arg(long)]
        all_ones: bool,
    },
    /// The positroid: all bases, one per line.
    Positroid(Source),
    /// Vertex count and dimension of the matching polytope.
    Polytope(Source),
    /// Faces of the boundary-contracted graph as dart walks.
    Faces(Source),
    /// Facets: edge equivalence classes and their facet subgraphs.
    Facets(Source),
    /// The f-vector of the matching polytope.
    Fvector(Source),
    /// Lattice point counts and the Ehrhart polynomial.
    Ehrhart {
        #[command(flatten)]
        source: Source,
        /// Count a single dilation instead of the whole table.
        #[arg(long)]
        dilation: Option<u32>,
    },
    /// The h*-vector.
    Hstar(Source),
    /// Euclidean and normalized volume.
    Volume(Source),
    /// Vertices of the matroid polytope.
    Matroid(Source),
    /// The projection of matching-polytope vertices onto positroid bases.
    Project(Source),
    /// Validate a fixture against its expected statistics.
    Fixture {
        /// Fixture name.
        #[arg(long)]
        fixture: Option<String>,
        /// List available fixtures.
        #[arg(long)]
        list: bool,
    },
    /// Check every fixture graph against its reference statistics.
    Report,
}

fn load(source: &Source) -> Result<(DiskGraph, String), Error> {
    match (&source.fixture, &source.input) {
        (Some(name), None) => Ok((builtin(name)?.graph, name.clone())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("cannot read {}: {e}", path.display()),
            })?;
            Ok((parse_graph(&text)?, path.display().to_string()))
        }
        _ => Err(Error::Parse { line: 0, msg: "give exactly one of --fixture or --input".into() }),
    }
}

fn pick_orientation(g: &DiskGraph, pick: &OrientationPick) -> Result<Orientation, Error> {
    let all = enumerate_orientations(g)?;
    match &pick.orientation {
        None => all
            .into_iter()
            .next()
            .ok_or_else(|| Error::NoSuchOrientation("(graph has none)".into())),
        Some(spec) => {
            let want = BoundarySet::parse(spec, g.n())?;
            all.into_iter()
                .find(|o| o.source_set(g) == want)
                .ok_or_else(|| Error::NoSuchOrientation(want.to_string()))
        }
    }
}

fn parse_weights(
    g: &DiskGraph,
    weights: &Option<String>,
    all_ones: bool,
) -> Result<Vec<BigRational>, Error> {
    if all_ones || weights.is_none() {
        return Ok(vec![BigRational::one(); g.edge_count()]);
    }
    let mut out = vec![BigRational::one(); g.edge_count()];
    for part in weights.as_deref().unwrap_or("").split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (id, val) = part.split_once('=').ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("expected edge=num/den, got `{part}`"),
        })?;
        let e = g.edge_index(id.trim()).ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("unknown edge `{id}`"),
        })?;
        let (num, den) = val.split_once('/').unwrap_or((val, "1"));
        let num: BigInt = num.trim().parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad numerator in `{part}`"),
        })?;
        let den: BigInt = den.trim().parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad denominator in `{part}`"),
        })?;
        out[e] = BigRational::new(num, den);
    }
    Ok(out)
}

fn edge_ids(g: &DiskGraph, edges: impl IntoIterator<Item = usize>) -> String {
    edges.into_iter().map(|e| g.edges()[e].id.clone()).collect::<Vec<_>>().join(",")
}

/// Records mode always writes rationals as `num/den`.
fn rat_nd(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

fn flow_text(g: &DiskGraph, components: &[FlowComponent]) -> String {
    if components.is_empty() {
        return "empty".into();
    }
    components
        .iter()
        .map(|c| match c {
            FlowComponent::Cycle(es) => format!("cycle({})", edge_ids(g, es.iter().copied())),
            FlowComponent::Walk { source, dest, edges } => format!(
                "walk({}->{}: {})",
                source + 1,
                dest + 1,
                edge_ids(g, edges.iter().copied())
            ),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<bool, Error> {
    // Returns Ok(all_passed); comparison commands may report failure.
    match cli.cmd {
        Cmd::Validate(src) => {
            let (g, name) = load(&src)?;
            for w in g.warnings() {
                println!("warning: {w}");
            }
            let t = g.graph_type()?;
            match src.format {
                Format::Human => println!(
                    "ok: {name} ({} internal vertices, {} edges, {} boundary, type {t})",
                    g.internal_count(),
                    g.edge_count(),
                    g.n()
                ),
                Format::Records => println!(
                    "valid {name} internal={} edges={} boundary={} type={t}",
                    g.internal_count(),
                    g.edge_count(),
                    g.n()
                ),
            }
            Ok(true)
        }
        Cmd::Type(src) => {
            let (g, _) = load(&src)?;
            let t = g.graph_type()?;
            match src.format {
                Format::Human => println!("{t}"),
                Format::Records => println!("type {} {}", t.k, t.n),
            }
            Ok(true)
        }
        Cmd::Matchings(src) => {
            let (g, _) = load(&src)?;
            for m in enumerate_matchings(&g)? {
                let ids = edge_ids(&g, m.edge_set().iter());
                match src.format {
                    Format::Human => println!("{ids}"),
                    Format::Records => println!("matching {ids}"),
                }
            }
            Ok(true)
        }
        Cmd::Orientations(src) => {
            let (g, _) = load(&src)?;
            for o in enumerate_orientations(&g)? {
                let tails = o
                    .tails(&g)
                    .into_iter()
                    .map(|(e, t)| format!("{e}:{t}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                let src_set = o.source_set(&g);
                match src.format {
                    Format::Human => println!("I={src_set}  {tails}"),
                    Format::Records => println!("orientation {src_set} {tails}"),
                }
            }
            Ok(true)
        }
        Cmd::Flows { source, pick } => {
            let (g, _) = load(&source)?;
            let o = pick_orientation(&g, &pick)?;
            for f in enumerate_flows(&g, &o)? {
                let text = flow_text(&g, &f.components);
                match source.format {
                    Format::Human => println!("J={}  {text}", f.destination),
                    Format::Records => println!("flow {} {text}", f.destination),
                }
            }
            Ok(true)
        }
        Cmd::Pluecker { source, pick } => {
            let (g, _) = load(&source)?;
            let o = pick_orientation(&g, &pick)?;
            let polys = plucker_polynomials(&g, &o)?;
            let names: Vec<String> = g.edges().iter().map(|e| e.id.clone()).collect();
            for (j, p) in &polys {
                match source.format {
                    Format::Human => println!("p{j} = {}", p.display(&names)),
                    Format::Records => println!("pluecker {j} {}", p.display(&names)),
                }
            }
            Ok(true)
        }
        Cmd::Evaluate { source, pick, weights, all_ones } => {
            let (g, _) = load(&source)?;
            let o = pick_orientation(&g, &pick)?;
            let w = parse_weights(&g, &weights, all_ones)?;
            let v = evaluate_plucker(&g, &o, &w)?;
            for (j, val) in v.entries() {
                match source.format {
                    Format::Human => println!("p{j} = {val}"),
                    Format::Records => println!("value {j} {}", rat_nd(val)),
                }
            }
            Ok(true)
        }
        Cmd::Positroid(src) => {
            let (g, _) = load(&src)?;
            let p = positroid_bases(&g)?;
            match src.format {
                Format::Human => {
                    println!("k={} n={} bases={}", p.k, p.n, p.bases.len());
                    for b in &p.bases {
                        println!("{b}");
                    }
                }
                Format::Records => {
                    for b in &p.bases {
                        println!("basis {b}");
                    }
                }
            }
            Ok(true)
        }
        Cmd::Polytope(src) => {
            let (g, _) = load(&src)?;
            let p = build_polytope(&g)?;
            match src.format {
                Format::Human => println!("vertices={} dim={}", p.vertices.len(), p.dim),
                Format::Records => println!("polytope {} {}", p.vertices.len(), p.dim),
            }
            Ok(true)
        }
        Cmd::Faces(src) => {
            let (g, _) = load(&src)?;
            let fs = g.faces();
            if src.format == Format::Human {
                println!("faces {}", fs.count());
            }
            for (i, face) in fs.faces().iter().enumerate() {
                let walk = face
                    .iter()
                    .map(|&d| {
                        let sign = if dart_forward(d) { "+" } else { "-" };
                        format!("{}{sign}", g.edges()[dart_edge(d)].id)
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                match src.format {
                    Format::Human => println!("face {i}: {walk}"),
                    Format::Records => println!("face {i} {walk}"),
                }
            }
            Ok(true)
        }
        Cmd::Facets(src) => {
            let (g, _) = load(&src)?;
            for f in facets(&g)? {
                let class = edge_ids(&g, f.class.iter().copied());
                let sub = edge_ids(&g, f.subgraph.iter());
                match src.format {
                    Format::Human => println!("class={{{class}}} facet={{{sub}}}"),
                    Format::Records => println!("facet {class} | {sub}"),
                }
            }
            Ok(true)
        }
        Cmd::Fvector(src) => {
            let (g, _) = load(&src)?;
            let fl = face_lattice(&g)?;
            let text = fl
                .f_vector
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
            match src.format {
                Format::Human => println!("{text}"),
                Format::Records => println!("fvector {text}"),
            }
            Ok(true)
        }
        Cmd::Ehrhart { source, dilation } => {
            let (g, _) = load(&source)?;
            if let Some(t) = dilation {
                let count = count_lattice_points(&g, t);
                match source.format {
                    Format::Human => println!("L({t}) = {count}"),
                    Format::Records => println!("count {t} {count}"),
                }
                return Ok(true);
            }
            let data = ehrhart_data(&g)?;
            for (t, c) in data.counts.iter().enumerate() {
                match source.format {
                    Format::Human => println!("L({t}) = {c}"),
                    Format::Records => println!("count {t} {c}"),
                }
            }
            match source.format {
                Format::Human => {
                    let poly = data
                        .polynomial
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    println!("polynomial: {poly}");
                }
                Format::Records => {
                    let poly =
                        data.polynomial.iter().map(rat_nd).collect::<Vec<_>>().join(",");
                    println!("polynomial {poly}");
                }
            }
            Ok(true)
        }
        Cmd::Hstar(src) => {
            let (g, _) = load(&src)?;
            let data = ehrhart_data(&g)?;
            let text = data
                .h_star
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
            match src.format {
                Format::Human => println!("{text}"),
                Format::Records => println!("hstar {text}"),
            }
            Ok(true)
        }
        Cmd::Volume(src) => {
            let (g, _) = load(&src)?;
            let data = ehrhart_data(&g)?;
            match src.format {
                Format::Human => {
                    println!("{} (normalized {})", data.euclidean_volume, data.normalized_volume)
                }
                Format::Records => println!(
                    "volume {} {}",
                    rat_nd(&data.euclidean_volume),
                    data.normalized_volume
                ),
            }
            Ok(true)
        }
        Cmd::Matroid(src) => {
            let (g, _) = load(&src)?;
            let p = positroid_bases(&g)?;
            let q = matroid_polytope(&p);
            for (b, v) in &q.vertices {
                let coords =
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                match src.format {
                    Format::Human => println!("{b} -> ({coords})"),
                    Format::Records => println!("vertex {b} {coords}"),
                }
            }
            Ok(true)
        }
        Cmd::Project(src) => {
            let (g, _) = load(&src)?;
            let ms = enumerate_matchings(&g)?;
            let psi = project_psi(&g)?;
            for (i, m) in ms.iter().enumerate() {
                let ids = edge_ids(&g, m.edge_set().iter());
                match src.format {
                    Format::Human => println!("{ids} -> {}", psi.images[i]),
                    Format::Records => println!("image {ids} {}", psi.images[i]),
                }
            }
            for (b, fiber) in &psi.fibers {
                match src.format {
                    Format::Human => println!("fiber {b}: {}", fiber.len()),
                    Format::Records => println!("fiber {b} {}", fiber.len()),
                }
            }
            Ok(true)
        }
        Cmd::Fixture { fixture, list } => {
            if list {
                for name in builtin_names() {
                    println!("{name}");
                }
                return Ok(true);
            }
            let name = fixture.ok_or_else(|| Error::Parse {
                line: 0,
                msg: "give --fixture NAME or --list".into(),
            })?;
            let report = validate_fixture(&name)?;
            let mut ok = true;
            for c in &report.checks {
                let verdict = if c.pass() { "PASS" } else { "FAIL" };
                ok &= c.pass();
                println!(
                    "check {} {}: expected={} actual={} {verdict}",
                    report.name, c.label, c.expected, c.actual
                );
            }
            Ok(ok)
        }
        Cmd::Report => {
            let mut ok = true;
            let mut table = String::new();
            for name in ["g24", "g2n(5)", "g2n(6)", "g36", "g26-alt"] {
                let report = validate_fixture(name)?;
                for c in &report.checks {
                    let verdict = if c.pass() { "ok" } else { "MISMATCH" };
                    ok &= c.pass();
                    writeln!(
                        table,
                        "{:<8} {:<9} expected {:<40} got {:<40} {verdict}",
                        report.name, c.label, c.expected, c.actual
                    )
                    .unwrap();
                }
            }
            // The vertex-count formula for the fan family.
            for n in 4..=8usize {
                let g = builtin(&format!("g2n({n})"))?.graph;
                let got = enumerate_matchings(&g)?.len();
                let want = n * (n - 1) * (n - 2) / 6 + n - 1;
                let verdict = if got == want { "ok" } else { "MISMATCH" };
                ok &= got == want;
                writeln!(
                    table,
                    "{:<8} {:<9} expected {:<40} got {:<40} {verdict}",
                    format!("g2n({n})"),
                    "vertices",
                    want,
                    got
                )
                .unwrap();
            }
            print!("{table}");
            println!("report: {}", if ok { "all values reproduced" } else { "MISMATCHES FOUND" });
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a pipe goes away (e.g. `| head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::Internal(_)) => {
            eprintln!("internal error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
