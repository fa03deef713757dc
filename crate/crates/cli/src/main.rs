use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use facetint::decide::{decide_with, DecideOptions, Verdict};
use facetint::drawing::{circle_planarized, ingest_polylines, PlanarizedDrawing};
use facetint::export::{to_dot, to_svg, Overlay};
use facetint::facecolor::{color_faces_exact, k3nplus_coloring, outerface_3coloring};
use facetint::flow3::{is_edge_3_critical, is_vertex_3_critical, is_z3_connected, kmn_mod3_orientation, mod3_orientation};
use facetint::formats::{self, FormatError};
use facetint::guards::Guards;
use facetint::multigraph::named::{complete_bipartite, k3n_plus};
use facetint::multigraph::{GraphError, Multigraph};
use facetint::normalize::normalize;

#[derive(Parser)]
#[command(name = "facetint", version, about = "Face colourings of drawings and modulo-3-orientations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Planarize a polyline drawing into a combinatorial map.
    Planarize { input: PathBuf, #[arg(short)] o: Option<PathBuf> },
    /// List the faces of a map.
    Faces { input: PathBuf },
    /// Write the dual multigraph.
    Dual { input: PathBuf, #[arg(short)] o: Option<PathBuf> },
    /// Face-k-colour a map.
    Color {
        input: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u8).range(2..=4))]
        k: u8,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Find a modulo-3-orientation.
    Flow3 { input: PathBuf, #[arg(short)] o: Option<PathBuf> },
    /// Test Z3-connectivity.
    Z3conn { input: PathBuf },
    /// Test vertex- or edge-3-criticality.
    Critical { input: PathBuf, kind: Criticality },
    /// Decide facial 3-colourability.
    Decide { input: PathBuf, #[arg(long)] json: bool },
    /// Turn a drawing into a good drawing of the same graph.
    Normalize {
        input: PathBuf,
        /// Print one JSON report per surgery and keep a map snapshot after each one.
        #[arg(long)]
        trace: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Generate graphs, orientations and drawings.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// 3-colour a drawing whose vertices all lie on the outer face.
    ColorOuter { input: PathBuf, #[arg(short)] o: Option<PathBuf> },
    /// 3-colour a drawing of K_{3,n}^+.
    ColorK3nplus { input: PathBuf, #[arg(short)] o: Option<PathBuf> },
    /// Render a map as SVG or DOT.
    Export {
        format: ExportFormat,
        input: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        orientation: Option<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// K_{m,n}; with --orient, its modulo-3-orientation instead.
    Kmn {
        m: usize,
        n: usize,
        #[arg(long)]
        orient: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// K_{3,n}^+.
    K3nplus { n: usize, #[arg(short)] o: Option<PathBuf> },
    /// Straight-line drawing with the vertices on a circle.
    Circle {
        input: PathBuf,
        /// Comma-separated vertex ids, clockwise; defaults to the file order.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Criticality {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Svg,
    Dot,
}

enum Fail {
    Negative(String),
    Usage(String),
    Invalid(String),
    Guard(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Negative(_) => 1,
            Fail::Usage(_) => 2,
            Fail::Invalid(_) => 3,
            Fail::Guard(_) => 4,
        }
    }
}

fn invalid(path: &Path, e: impl std::fmt::Display) -> Fail {
    Fail::Invalid(format!("{}: {e}", path.display()))
}

impl From<GraphError> for Fail {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::GuardExceeded { .. } => Fail::Guard(e.to_string()),
            _ => Fail::Invalid(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| invalid(path, e))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T, FormatError>) -> Result<T, Fail> {
    parse(&read(path)?).map_err(|e| invalid(path, e))
}

fn graph(path: &Path) -> Result<Multigraph, Fail> {
    load(path, formats::parse_graph)
}

fn cmap(path: &Path) -> Result<PlanarizedDrawing, Fail> {
    load(path, formats::parse_cmap)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Fail> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| invalid(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn snapshot_path(out: Option<&Path>, k: usize) -> PathBuf {
    let base = out.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("normalize.cmap"));
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    base.with_file_name(format!("{stem}.step{k}.cmap"))
}

fn run(cmd: Cmd, guards: Guards) -> Result<(), Fail> {
    match cmd {
        Cmd::Planarize { input, o } => {
            let p = load(&input, formats::parse_poly)?;
            let d = ingest_polylines(&p).map_err(|e| invalid(&input, e))?;
            emit(o.as_deref(), &formats::write_cmap(&d))
        }
        Cmd::Faces { input } => {
            let faces = cmap(&input)?.faces();
            let mut s = format!("faces {} outer {}\n", faces.len(), faces.outer);
            for (i, orbit) in faces.orbits.iter().enumerate() {
                let darts: Vec<String> =
                    orbit.iter().map(|&d| format!("{}{}", if d % 2 == 0 { '+' } else { '-' }, d / 2)).collect();
                s.push_str(&format!("face {i} {}\n", darts.join(" ")));
            }
            emit(None, &s)
        }
        Cmd::Dual { input, o } => {
            let dual = cmap(&input)?.dual();
            emit(o.as_deref(), &format!("# outer face {}\n{}", dual.outer, formats::write_graph(&dual.graph)))
        }
        Cmd::Color { input, k, o } => {
            let d = cmap(&input)?;
            let n = d.faces().len();
            if n > guards.faces {
                return Err(Fail::Guard(format!("face colouring is limited to {} faces, map has {n}", guards.faces)));
            }
            let c = color_faces_exact(&d, k).ok_or_else(|| Fail::Negative(format!("no face-{k}-colouring")))?;
            emit(o.as_deref(), &formats::write_coloring(&c))
        }
        Cmd::Flow3 { input, o } => {
            let g = graph(&input)?;
            let or = mod3_orientation(&g).ok_or_else(|| Fail::Negative("no modulo-3-orientation".into()))?;
            emit(o.as_deref(), &formats::write_orientation(&or))
        }
        Cmd::Z3conn { input } => {
            if is_z3_connected(&graph(&input)?, guards.z3conn)? {
                emit(None, "Z3-connected\n")
            } else {
                Err(Fail::Negative("not Z3-connected".into()))
            }
        }
        Cmd::Critical { input, kind } => {
            let g = graph(&input)?;
            if g.vertex_count() > guards.critical {
                return Err(Fail::Guard(format!(
                    "criticality checks are limited to {} vertices, input has {}",
                    guards.critical,
                    g.vertex_count()
                )));
            }
            let (yes, name) = match kind {
                Criticality::Vertex => (is_vertex_3_critical(&g), "vertex"),
                Criticality::Edge => (is_edge_3_critical(&g), "edge"),
            };
            if yes {
                emit(None, &format!("{name}-3-critical\n"))
            } else {
                Err(Fail::Negative(format!("not {name}-3-critical")))
            }
        }
        Cmd::Decide { input, json } => {
            let g = graph(&input)?;
            let d = decide_with(&g, &DecideOptions { guards, ..DecideOptions::default() });
            let text = if json {
                let v = json!({
                    "schema": 1,
                    "verdict": d.verdict,
                    "rule": d.rule,
                    "certificate": d.certificate,
                    "timings": d.timings,
                });
                format!("{v}\n")
            } else {
                let rule = serde_json::to_value(d.rule).expect("rule");
                let verdict = serde_json::to_value(d.verdict).expect("verdict");
                format!("{} {}\n", verdict.as_str().unwrap_or_default(), rule.as_str().unwrap_or_default())
            };
            emit(None, &text)?;
            match d.verdict {
                Verdict::No => Err(Fail::Negative(String::new())),
                _ => Ok(()),
            }
        }
        Cmd::Normalize { input, trace, o } => {
            let d = cmap(&input)?;
            let n = normalize(&d).map_err(|e| invalid(&input, e))?;
            if trace {
                for (k, r) in n.reports.iter().enumerate() {
                    let mut v = serde_json::to_value(r).expect("report");
                    v["schema"] = json!(1);
                    v["step"] = json!(k);
                    let after = n.steps.get(k + 1).map_or(&n.drawing, |s| &s.before);
                    let path = snapshot_path(o.as_deref(), k);
                    fs::write(&path, formats::write_cmap(after)).map_err(|e| invalid(&path, e))?;
                    v["snapshot"] = json!(path.display().to_string());
                    // the map itself goes to stdout when there is no -o
                    if o.is_some() {
                        println!("{v}");
                    } else {
                        eprintln!("{v}");
                    }
                }
            }
            emit(o.as_deref(), &formats::write_cmap(&n.drawing))
        }
        Cmd::Gen { what } => match what {
            Gen::Kmn { m, n, orient, o } => {
                if orient {
                    let or = kmn_mod3_orientation(m, n).map_err(|e| Fail::Usage(e.to_string()))?;
                    emit(o.as_deref(), &formats::write_orientation(&or))
                } else {
                    emit(o.as_deref(), &formats::write_graph(&complete_bipartite(m, n)))
                }
            }
            Gen::K3nplus { n, o } => emit(o.as_deref(), &formats::write_graph(&k3n_plus(n))),
            Gen::Circle { input, order, o } => {
                let g = graph(&input)?;
                let order = order.unwrap_or_else(|| g.vertices().collect());
                let d = circle_planarized(&g, &order).map_err(|e| Fail::Usage(e.to_string()))?;
                emit(o.as_deref(), &formats::write_cmap(&d))
            }
        },
        Cmd::ColorOuter { input, o } => {
            let c = outerface_3coloring(&cmap(&input)?).map_err(|e| invalid(&input, e))?;
            emit(o.as_deref(), &formats::write_coloring(&c))
        }
        Cmd::ColorK3nplus { input, o } => {
            let c = k3nplus_coloring(&cmap(&input)?).map_err(|e| invalid(&input, e))?;
            emit(o.as_deref(), &formats::write_coloring(&c))
        }
        Cmd::Export { format, input, coloring, orientation, o } => {
            let d = cmap(&input)?;
            let c = coloring.as_deref().map(|p| load(p, formats::parse_coloring)).transpose()?;
            let or = orientation
                .as_deref()
                .map(|p| load(p, |t| formats::parse_orientation(t, d.underlying())))
                .transpose()?;
            let overlay = Overlay { coloring: c.as_ref(), orientation: or.as_ref() };
            let text = match format {
                ExportFormat::Svg => to_svg(&d, overlay),
                ExportFormat::Dot => to_dot(&d, overlay),
            }
            .map_err(|e| invalid(&input, e))?;
            emit(o.as_deref(), &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Guards::from_env().map_err(|e| Fail::Usage(format!("FACETINT_GUARDS: {e}"))).and_then(|g| run(cli.cmd, g));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Fail::Negative(m) | Fail::Usage(m) | Fail::Invalid(m) | Fail::Guard(m)) = &f;
            if !m.is_empty() {
                eprintln!("facetint: {m}");
            }
            ExitCode::from(f.code())
        }
    }
}
