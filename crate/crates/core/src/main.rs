use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use chordcut::format::{certificate_to_dot, graph_to_dot};
use chordcut::{
    build_bounded_digraph, check_preconditions, enumerate_holes, every_hole_edge_has_avoiding_path,
    exact_competition_number, find_chordal_cut, find_induced_octahedron, generate, is_chordal, shared_hole_edge,
    verify_certificate, DigraphDocument, GenParams, Graph, GraphDocument, HoleSet, Style, VertexSet,
    EXACT_VERTEX_LIMIT,
};

#[derive(Parser)]
#[command(name = "chordcut", version, about = "Hole analysis, chordal cuts and competition-graph certificates")]
struct Cli {
    /// Print the report as a single JSON object.
    #[arg(long, global = true)]
    json: bool,
    /// Also write a Graphviz rendering to this path.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Holes, class preconditions and the per-(hole, edge) S/T table.
    Analyze { file: PathBuf },
    /// Search for a chordal cut.
    FindCut { file: PathBuf },
    /// Build an acyclic digraph with at most h(G)+1 added vertices.
    Build {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a digraph document against a graph.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Exact competition number for graphs with at most 7 vertices.
    ExactK {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
    /// Generate a random graph in the class.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        holes: usize,
        #[arg(long, default_value = "mixed")]
        style: Style,
        #[arg(long, default_value_t = 8)]
        min_vertices: usize,
        #[arg(long, default_value_t = 20)]
        max_vertices: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Exit status plus report contents.
struct Report {
    command: &'static str,
    input: Value,
    results: Map<String, Value>,
    verified: bool,
    status: u8,
    /// Document printed ahead of the report in text mode.
    document: Option<String>,
    message: Option<String>,
}

impl Report {
    fn new(command: &'static str, input: Value) -> Self {
        Report { command, input, results: Map::new(), verified: false, status: 0, document: None, message: None }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    fn print(&self, as_json: bool) {
        if as_json {
            let mut results = self.results.clone();
            if let Some(doc) = &self.document {
                results.insert("document".into(), doc.clone().into());
            }
            if let Some(msg) = &self.message {
                results.insert("message".into(), msg.clone().into());
            }
            let out = json!({
                "command": self.command,
                "input": self.input,
                "results": results,
                "verified": self.verified,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json value"));
            return;
        }
        let prefix = if self.document.is_some() { "# " } else { "" };
        if let Some(doc) = &self.document {
            print!("{doc}");
        }
        if let Some(msg) = &self.message {
            println!("{prefix}{msg}");
        }
        for (key, value) in &self.results {
            match value {
                Value::Array(items) if items.iter().any(Value::is_object) => {
                    for item in items {
                        println!("{prefix}{key}: {}", render_inline(item));
                    }
                }
                other => println!("{prefix}{key}: {}", render_inline(other)),
            }
        }
        println!("{prefix}verified: {}", self.verified);
    }
}

fn render_inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(render_inline).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::Array(_) => format!("{k}={{{}}}", render_inline(v)),
                _ => format!("{k}={}", render_inline(v)),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// Input problems end the run with exit code 2.
struct InputError(String);

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(String, Graph), InputError> {
    let text = read(path)?;
    let doc = GraphDocument::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let name = if doc.name.is_empty() {
        path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "g".into())
    } else {
        doc.name.clone()
    };
    Ok((name, doc.to_graph()))
}

fn labels<'a>(items: impl IntoIterator<Item = &'a chordcut::VertexId>) -> Value {
    items.into_iter().map(|v| Value::from(v.as_str())).collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::from(report.status)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, InputError> {
    match &cli.command {
        Command::Analyze { file } => analyze(cli, file),
        Command::FindCut { file } => find_cut(cli, file),
        Command::Build { file, output } => build(cli, file, output.as_deref()),
        Command::Verify { graph, certificate } => verify(cli, graph, certificate),
        Command::ExactK { file, kmax } => exact_k(cli, file, *kmax),
        Command::Gen { seed, holes, style, min_vertices, max_vertices, output } => {
            let params = GenParams::new(*seed, *min_vertices..=*max_vertices, *holes, *style);
            gen(cli, &params, output.as_deref())
        }
    }
}

fn write_dot(cli: &Cli, text: impl FnOnce() -> String) -> Result<(), InputError> {
    match &cli.dot {
        Some(path) => write(path, &text()),
        None => Ok(()),
    }
}

fn analyze(cli: &Cli, file: &Path) -> Result<Report, InputError> {
    let (name, g) = load_graph(file)?;
    let mut r = Report::new("analyze", json!(file.display().to_string()));
    let holes = enumerate_holes(&g);
    r.set("vertices", g.vertex_count());
    r.set("edges", g.edge_count());
    r.set("h", holes.count());
    r.set("holes", holes.iter().map(|c| Value::from(c.to_string())).collect::<Vec<_>>());
    r.set("chordal", holes.is_empty());
    let octahedron = find_induced_octahedron(&g);
    r.set("k222_free", octahedron.is_none());
    if let Some(w) = &octahedron {
        r.set("octahedron", labels(w));
    }
    let shared = shared_hole_edge(&holes);
    r.set("hole_edge_disjoint", shared.is_none());
    if let Some((_, _, e)) = &shared {
        r.set("shared_edge", e.to_string());
    }
    let mut pairs = Vec::new();
    for hole in &holes {
        for e in hole.edges() {
            let a = chordcut::cut_analysis_with_limit(&g, hole, &e, 0).expect("enumerated hole edge");
            pairs.push(json!({
                "hole": hole.to_string(),
                "edge": e.to_string(),
                "s_nonempty": a.s_nonempty,
                "t_empty": a.t_ce.is_empty(),
                "t": labels(&a.t_ce),
            }));
        }
    }
    r.set("pairs", pairs);
    r.verified = true;
    write_dot(cli, || graph_to_dot(&g, &name, &holes, &VertexSet::new()))?;
    Ok(r)
}

fn find_cut(cli: &Cli, file: &Path) -> Result<Report, InputError> {
    let (name, g) = load_graph(file)?;
    let mut r = Report::new("find-cut", json!(file.display().to_string()));
    let marked = match find_chordal_cut(&g) {
        Err(e) => {
            r.status = 1;
            r.message = Some(e.to_string());
            VertexSet::new()
        }
        Ok(None) => {
            r.status = 1;
            let hypothesis = every_hole_edge_has_avoiding_path(&g).unwrap_or(false);
            r.message = Some(if hypothesis {
                "no chordal cut found although every hole edge has a nonempty S".into()
            } else {
                "no chordal cut found; hypothesis (every hole edge has a nonempty S) not satisfied".into()
            });
            VertexSet::new()
        }
        Ok(Some(cert)) => {
            r.verified = cert.verify(&g);
            r.set("hole", cert.hole.to_string());
            r.set("edge", cert.edge.to_string());
            r.set("x", labels(&cert.x_ce));
            r.set("u", labels(&cert.u_ce));
            r.set("peo", labels(cert.peo.order()));
            cert.x_ce.clone()
        }
    };
    write_dot(cli, || graph_to_dot(&g, &name, &enumerate_holes(&g), &marked))?;
    Ok(r)
}

fn build(cli: &Cli, file: &Path, output: Option<&Path>) -> Result<Report, InputError> {
    let (name, g) = load_graph(file)?;
    let mut r = Report::new("build", json!(file.display().to_string()));
    let cert = match build_bounded_digraph(&g) {
        Ok(cert) => cert,
        Err(e) => {
            r.status = 1;
            r.message = Some(e.to_string());
            return Ok(r);
        }
    };
    let h = check_preconditions(&g).map(|s| s.count()).unwrap_or_default();
    let doc = DigraphDocument::from_certificate(&name, &cert).to_text();
    r.set("h", h);
    r.set("added", cert.claimed_k());
    r.set("arcs", cert.digraph.arc_count());
    match verify_certificate(&g, &cert) {
        Ok(()) => r.verified = true,
        Err(defect) => {
            r.status = 1;
            r.set("defect", defect.to_string());
        }
    }
    match output {
        Some(path) => {
            write(path, &doc)?;
            r.set("output", path.display().to_string());
        }
        None => r.document = Some(doc),
    }
    write_dot(cli, || certificate_to_dot(&cert, &name))?;
    Ok(r)
}

fn verify(cli: &Cli, graph: &Path, certificate: &Path) -> Result<Report, InputError> {
    let (_, g) = load_graph(graph)?;
    let text = read(certificate)?;
    let doc = DigraphDocument::parse(&text).map_err(|e| InputError(format!("{}: {e}", certificate.display())))?;
    let cert = doc.to_certificate(&g.vertex_set());
    let mut r = Report::new(
        "verify",
        json!({"graph": graph.display().to_string(), "certificate": certificate.display().to_string()}),
    );
    r.set("added", cert.claimed_k());
    match verify_certificate(&g, &cert) {
        Ok(()) => r.verified = true,
        Err(defect) => {
            r.status = 1;
            r.set("defect", defect.to_string());
        }
    }
    write_dot(cli, || certificate_to_dot(&cert, &doc.name))?;
    Ok(r)
}

fn exact_k(cli: &Cli, file: &Path, kmax: usize) -> Result<Report, InputError> {
    let (name, g) = load_graph(file)?;
    if g.vertex_count() > EXACT_VERTEX_LIMIT {
        return Err(InputError(format!(
            "exact search supports at most {EXACT_VERTEX_LIMIT} vertices, got {}",
            g.vertex_count()
        )));
    }
    let mut r = Report::new("exact-k", json!(file.display().to_string()));
    r.set("kmax", kmax);
    match exact_competition_number(&g, kmax) {
        Some(k) => {
            r.set("k", k);
            r.verified = true;
        }
        None => {
            r.set("k", Value::Null);
            r.status = 1;
            r.message = Some(format!("k exceeds {kmax}"));
        }
    }
    write_dot(cli, || graph_to_dot(&g, &name, &enumerate_holes(&g), &VertexSet::new()))?;
    Ok(r)
}

fn gen(cli: &Cli, params: &GenParams, output: Option<&Path>) -> Result<Report, InputError> {
    let g = generate(params).map_err(|e| InputError(e.to_string()))?;
    let name = format!("gen{}", params.seed);
    let doc = GraphDocument::from_graph(&name, &g).to_text();
    let mut r = Report::new("gen", serde_json::to_value(params).expect("plain struct"));
    let holes = check_preconditions(&g).ok();
    r.verified = holes.is_some();
    r.set("vertices", g.vertex_count());
    r.set("edges", g.edge_count());
    r.set("h", holes.as_ref().map_or(0, HoleSet::count));
    r.set("chordal", is_chordal(&g));
    match output {
        Some(path) => {
            write(path, &doc)?;
            r.set("output", path.display().to_string());
        }
        None => r.document = Some(doc),
    }
    write_dot(cli, || graph_to_dot(&g, &name, &holes.clone().unwrap_or_default(), &VertexSet::new()))?;
    Ok(r)
}
