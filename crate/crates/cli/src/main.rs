//! `csf-lab`: chromatic symmetric functions, basis expansions, U-polynomials
//! and lambda-matrices of small graphs from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (bad input, failed
//! identity or verification), 3 resource guard.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use csf_lab::graph::{enumerate_graphs, format_edge_list, parse_edge_list, parse_graph6, to_graph6, Graph, GraphClass, SpecialKind};
use csf_lab::par::Exec;
use csf_lab::partition::{enumerate_partitions, Partition};
use csf_lab::reconstruct::{induced_subgraph_census, lambda_matrix_with, reconstruct_coefficient, verify_matrix_relation};
use csf_lab::routes::{
    expand_in_forest_basis, expand_via_linear_solve, route_between_forests, route_to_dnc_star_form, route_to_girth3,
    route_to_path_form, route_to_star_form, BasisExpansion, BasisName, ChromaticBasis, Route, Strategy,
};
use csf_lab::symmetric::{csf, stable_partition_census};
use csf_lab::upoly::{corner_number_of, restricted_u, u_polynomial_forest, u_polynomial_general, verify_theorem_u_equiv};
use csf_lab::verify::{march_identity_holds, run_suite, Suite, SuiteConfig, SuiteReport};
use csf_lab::Error;

#[derive(Parser)]
#[command(name = "csf-lab", version, about = "Chromatic symmetric functions of small graphs")]
struct Cli {
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// CSF in the monomial basis.
    Csf {
        #[command(flatten)]
        graph: GraphInput,
        /// Print the independent-partition census instead.
        #[arg(long)]
        census: bool,
        #[arg(long)]
        json: bool,
    },
    /// Expansion of the CSF in a chromatic basis.
    Expand {
        #[command(flatten)]
        graph: GraphInput,
        /// star, path or file:<path> (one `lambda ; graph6` line per partition).
        #[arg(long, default_value = "star")]
        basis: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Path)]
        strategy: StrategyArg,
        /// Keep only partitions of length at most l(Part(G)) + k.
        #[arg(long)]
        truncate: Option<usize>,
        /// Also report the corner number and compare with U-polynomials.
        #[arg(long)]
        corner: bool,
        #[arg(long)]
        json: bool,
    },
    /// U-polynomial (forest form, restricted or two-variable).
    Upoly {
        #[command(flatten)]
        graph: GraphInput,
        /// Restrict to edge subsets of at most k edges (forests only).
        #[arg(long)]
        k: Option<usize>,
        /// Two-variable form with (y - 1) powers; works for any graph.
        #[arg(long)]
        general: bool,
        #[arg(long)]
        json: bool,
    },
    /// Chromatic polynomial values from the CSF at x_1 = ... = x_k = 1.
    Chromatic {
        #[command(flatten)]
        graph: GraphInput,
        /// A single number of colors; defaults to 0..=n.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Routes and their marches.
    Route {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = FormArg::Path)]
        form: FormArg,
        /// Route to this forest instead (same component partition).
        #[arg(long)]
        to_g6: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Reconstruct an independent-partition count from k-vertex induced subgraphs.
    Reconstruct {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Lambda-matrix of a family of graphs and its exact rank.
    LambdaMatrix {
        #[arg(long, value_enum, default_value_t = FamilyArg::Complete)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        /// Explicit family members (overrides --family).
        #[arg(long = "g6", num_args = 1..)]
        g6: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        /// A suite name, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// Edge-list file: vertex count on the first line, then `u v` per line.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Path,
    Star,
    Dnc,
    /// Exact linear solve; the only option for non-forest bases.
    Solve,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Path,
    Star,
    Dnc,
    Girth3,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// K_lambda for every partition of n.
    Complete,
    Forests,
    Trees,
    All,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_resource() { 3 } else { 2 }, message: e.to_string() }
    }
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

type CliResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match cli.command {
        Command::Csf { graph, census, json } => cmd_csf(&graph.load()?, census, json),
        Command::Expand { graph, basis, strategy, truncate, corner, json } => {
            cmd_expand(&graph.load()?, &basis, strategy, truncate, corner, json)
        }
        Command::Upoly { graph, k, general, json } => cmd_upoly(&graph.load()?, k, general, json),
        Command::Chromatic { graph, k, json } => cmd_chromatic(&graph.load()?, k, json),
        Command::Route { graph, form, to_g6, json } => cmd_route(&graph.load()?, form, to_g6.as_deref(), json),
        Command::Reconstruct { graph, lambda, k, json } => cmd_reconstruct(&graph.load()?, lambda.as_deref(), k, json),
        Command::LambdaMatrix { family, n, g6, json } => cmd_lambda_matrix(family, n, &g6, json, exec),
        Command::Verify { suite, n, seed, json } => cmd_verify(&suite, n, seed, json, exec),
    }
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Failure> {
        match (&self.g6, &self.edges) {
            (Some(text), _) => Ok(parse_graph6(text)?),
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::domain(format!("cannot read {}: {e}", path.display())))?;
                Ok(parse_edge_list(&text)?)
            }
            (None, None) => unreachable!("clap requires one graph source"),
        }
    }
}

fn render(json: bool, value: Value, text: impl FnOnce() -> String) -> String {
    if json {
        value.to_string()
    } else {
        text()
    }
}

fn cmd_csf(g: &Graph, census: bool, json: bool) -> CliResult {
    // Printing the canonical form makes the output independent of labeling.
    let canonical = g.canonical();
    if census {
        let c = stable_partition_census(&canonical)?;
        let counts: serde_json::Map<String, Value> =
            c.iter().map(|(l, k)| (l.to_string(), Value::String(k.to_string()))).collect();
        let value = json!({"graph6": to_graph6(&canonical), "census": counts});
        return Ok(render(json, value, || {
            c.iter().map(|(l, k)| format!("{l}\t{k}")).collect::<Vec<_>>().join("\n")
        }));
    }
    let f = csf(&canonical)?;
    Ok(render(json, f.to_json(), || f.to_string()))
}

fn load_basis(spec: &str, n: usize) -> Result<ChromaticBasis, Failure> {
    match spec {
        "star" => Ok(ChromaticBasis::star(n)?),
        "path" => Ok(ChromaticBasis::path(n)?),
        _ => {
            let path = spec
                .strip_prefix("file:")
                .ok_or_else(|| Failure::domain(format!("unknown basis {spec:?}; expected star, path or file:<path>")))?;
            let text =
                fs::read_to_string(path).map_err(|e| Failure::domain(format!("cannot read basis file {path}: {e}")))?;
            Ok(ChromaticBasis::parse(&text, BasisName::File(path.to_string()))?)
        }
    }
}

fn coeff_table(x: &BasisExpansion) -> String {
    if x.coeffs.is_empty() {
        return "0".to_string();
    }
    x.coeffs.iter().map(|(l, c)| format!("{l}\t{c}")).collect::<Vec<_>>().join("\n")
}

fn cmd_expand(g: &Graph, basis: &str, strategy: StrategyArg, truncate: Option<usize>, corner: bool, json: bool) -> CliResult {
    let basis = load_basis(basis, g.n())?;
    let x = match strategy {
        StrategyArg::Solve => expand_via_linear_solve(g, &basis)?,
        StrategyArg::Path => expand_in_forest_basis(g, &basis, Strategy::PathRouting)?,
        StrategyArg::Star => expand_in_forest_basis(g, &basis, Strategy::StarRouting)?,
        StrategyArg::Dnc => expand_in_forest_basis(g, &basis, Strategy::DncRouting)?,
    };
    x.verify()?;
    let mu = g.part();
    let shown = match truncate {
        Some(k) => csf_lab::routes::truncate_expansion(&x, &mu, k),
        None => x.clone(),
    };
    let mut value = shown.to_json();
    let mut text = coeff_table(&shown);
    if corner {
        let c = corner_number_of(&x, &mu);
        value["corner"] = json!(c.to_string());
        text.push_str(&format!("\ncorner number: {c}"));
        if g.is_forest() && basis.element(&mu).is_some_and(Graph::is_forest) {
            let report = verify_theorem_u_equiv(g, &basis)?;
            text.push_str(&format!("\nU comparison holds: {}", report.holds()));
            value["u_equiv"] = report.to_json();
        }
    }
    Ok(render(json, value, || text))
}

fn cmd_upoly(g: &Graph, k: Option<usize>, general: bool, json: bool) -> CliResult {
    if general {
        let u = u_polynomial_general(g)?;
        return Ok(render(json, u.to_json(), || {
            u.terms().map(|(l, p, c)| format!("{l}\t(y-1)^{p}\t{c}")).collect::<Vec<_>>().join("\n")
        }));
    }
    let u = match k {
        Some(k) => restricted_u(g, k)?,
        None => u_polynomial_forest(g)?,
    };
    Ok(render(json, u.to_json(), || u.terms().map(|(l, c)| format!("{l}\t{c}")).collect::<Vec<_>>().join("\n")))
}

fn cmd_chromatic(g: &Graph, k: Option<usize>, json: bool) -> CliResult {
    let f = csf(g)?;
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=g.n()).collect(),
    };
    let values: Vec<(usize, String)> = ks.iter().map(|&k| (k, f.specialize_ones(k).to_string())).collect();
    let map: serde_json::Map<String, Value> = values.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect();
    Ok(render(json, json!({"graph6": to_graph6(g), "values": map}), || {
        values.iter().map(|(k, v)| format!("chi({k}) = {v}")).collect::<Vec<_>>().join("\n")
    }))
}

fn route_json(r: &Route) -> Result<Value, Failure> {
    let steps: Vec<Value> = r
        .steps()
        .iter()
        .map(|s| {
            json!({
                "witness": [s.witness.0, s.witness.1, s.witness.2],
                "target": to_graph6(&s.target),
                "positive": to_graph6(&s.positive_remainder),
                "negative": to_graph6(&s.negative_remainder),
            })
        })
        .collect();
    Ok(json!({
        "start": to_graph6(r.start()),
        "end": to_graph6(r.end()),
        "steps": steps,
        "march_identity": march_identity_holds(r)?,
    }))
}

fn cmd_route(g: &Graph, form: FormArg, to: Option<&str>, json: bool) -> CliResult {
    let route = match (to, form) {
        (Some(text), _) => route_between_forests(g, &parse_graph6(text)?)?,
        (None, FormArg::Path) => route_to_path_form(g)?,
        (None, FormArg::Star) => route_to_star_form(g)?,
        (None, FormArg::Dnc) => route_to_dnc_star_form(g)?,
        (None, FormArg::Girth3) => route_to_girth3(g)?,
    };
    let value = route_json(&route)?;
    if !value["march_identity"].as_bool().unwrap_or(false) {
        return Err(Error::IdentityViolated.into());
    }
    Ok(render(json, value, || {
        let mut lines = vec![format!("start {}", to_graph6(route.start()))];
        for s in route.steps() {
            let (a, b, c) = s.witness;
            lines.push(format!(
                "step ({a},{b},{c}) -> {}  P={}  N={}",
                to_graph6(&s.target),
                to_graph6(&s.positive_remainder),
                to_graph6(&s.negative_remainder)
            ));
        }
        lines.push(format!("end {}\n{}", to_graph6(route.end()), format_edge_list(route.end()).trim_end()));
        lines.join("\n")
    }))
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse::<Partition>().map_err(|e| Error::from(e).into())
}

fn cmd_reconstruct(g: &Graph, lambda: Option<&str>, k: usize, json: bool) -> CliResult {
    if lambda.is_none() {
        // Without a partition, report the induced-subgraph relation for every
        // k-reducible partition.
        let report = verify_matrix_relation(g, k)?;
        let columns: Vec<Value> = report
            .columns
            .iter()
            .map(|c| json!({"lambda": c.lambda.to_string(), "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string()}))
            .collect();
        let census = induced_subgraph_census(g, k)?;
        let subgraphs: Vec<Value> = census
            .iter()
            .map(|(key, c)| json!({"graph6": to_graph6(&key.graph()), "count": c.to_string()}))
            .collect();
        let value = json!({"k": k, "subgraphs": subgraphs, "columns": columns, "holds": report.holds()});
        return Ok(render(json, value, || {
            let mut lines: Vec<String> =
                report.columns.iter().map(|c| format!("{}\t{}\t{}", c.lambda, c.lhs, c.rhs)).collect();
            lines.push(format!("holds: {}", report.holds()));
            lines.join("\n")
        }));
    }
    let lambda = parse_partition(lambda.unwrap_or_default())?;
    let value = reconstruct_coefficient(g, &lambda, k)?;
    let census = stable_partition_census(g)?.get(&lambda);
    let agrees = value.to_string() == census.to_string();
    let out = json!({
        "graph6": to_graph6(g),
        "lambda": lambda.to_string(),
        "k": k,
        "value": value.to_string(),
        "census": census.to_string(),
        "agrees": agrees,
    });
    if !agrees {
        return Err(Error::IdentityViolated.into());
    }
    Ok(render(json, out, || format!("c_{lambda} = {value}")))
}

fn cmd_lambda_matrix(family: FamilyArg, n: Option<usize>, g6: &[String], json: bool, exec: Exec) -> CliResult {
    let graphs: Vec<Graph> = if !g6.is_empty() {
        g6.iter().map(|t| parse_graph6(t)).collect::<Result<_, _>>()?
    } else {
        let n = n.ok_or_else(|| Failure { code: 1, message: "--n is required with --family".into() })?;
        match family {
            FamilyArg::Complete => enumerate_partitions(n)?
                .iter()
                .map(|l| Graph::special(SpecialKind::CompleteMultipartite, l))
                .collect::<Result<_, _>>()?,
            FamilyArg::Forests => enumerate_graphs(n, GraphClass::Forests)?,
            FamilyArg::Trees => enumerate_graphs(n, GraphClass::Trees)?,
            FamilyArg::All => enumerate_graphs(n, GraphClass::All)?,
        }
    };
    let m = lambda_matrix_with(&graphs, exec)?;
    Ok(render(json, m.to_json(), || {
        let header: Vec<String> = m.columns.iter().map(Partition::to_string).collect();
        let mut lines = vec![format!("graph6\t{}", header.join("\t"))];
        for (g, row) in m.rows.iter().zip(&m.entries) {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            lines.push(format!("{}\t{}", to_graph6(g), cells.join("\t")));
        }
        lines.push(format!("rank {}", m.rank()));
        lines.join("\n")
    }))
}

fn report_json(r: &SuiteReport) -> Value {
    json!({
        "suite": r.suite.name(),
        "n": r.n,
        "items": r.items.to_string(),
        "checks": r.checks.to_string(),
        "passed": r.passed(),
        "summary": r.summary(),
        "failures": r.failures,
        "notes": r.notes,
    })
}

fn cmd_verify(suite: &str, n: Option<usize>, seed: u64, json: bool, exec: Exec) -> CliResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|e: String| Failure { code: 1, message: e })?]
    };
    let config = SuiteConfig { n, seed, exec };
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, &config)).collect::<Result<_, _>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let out = if json {
        Value::Array(reports.iter().map(report_json).collect()).to_string()
    } else {
        let mut lines = Vec::new();
        for r in &reports {
            lines.push(r.summary());
            lines.extend(r.notes.iter().map(|note| format!("  {note}")));
            lines.extend(r.failures.iter().map(|f| format!("  FAIL {f}")));
        }
        lines.join("\n")
    };
    if passed {
        Ok(out)
    } else {
        println!("{out}");
        Err(Failure::domain("verification failed"))
    }
}
