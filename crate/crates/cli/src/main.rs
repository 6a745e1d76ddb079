use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use prodcolor::coloring::{
    chromatic_number, chromatic_span, is_f_free, is_lp1_labelling, is_proper, lp1_range, lp1_span,
    min_lp1_range, min_lp1_span, span, Coloring, ColoringError, ForbiddenFamily,
};
use prodcolor::construct::{lp1_pipeline, product_pipeline, ConstructError, Factor};
use prodcolor::graphs::{Graph, GraphExpr};
use prodcolor::sidon::{
    density, find_violation, first_elements, generate_r, generate_s, generate_t, max_sidon_subset,
    SetKind, SidonError, SmallPrimes,
};
use prodcolor::tables::{
    diff_against_reference, reproduce_grid_table, reproduce_s_table, reproduce_t_table, TableId,
};
use prodcolor::{Budget, Rational};

#[derive(Parser)]
#[command(
    name = "prodcolor",
    version,
    about = "F-free colourings of Cartesian products via multiplicative Sidon sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate, verify and measure k-multiplicative sets
    #[command(subcommand)]
    Sidon(SidonCommand),
    /// Solve, check and construct colourings
    #[command(subcommand)]
    Color(ColorCommand),
    /// Regenerate a reference table
    Reproduce(ReproduceArgs),
}

#[derive(Subcommand)]
enum SidonCommand {
    /// List elements of R_k, S_k or T_k
    Gen {
        #[arg(long = "set", default_value = "s")]
        set: SetKind,
        #[arg(long)]
        k: u64,
        /// Number of leading elements
        #[arg(long, conflicts_with = "limit")]
        count: Option<usize>,
        /// All elements up to this bound
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        csv: bool,
    },
    /// Check a set for the k-multiplicative property
    Verify {
        #[arg(long)]
        k: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<u64>,
    },
    /// Largest k-multiplicative subset of [n]
    Max {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Exact density of R_k, S_k or T_k
    Density {
        #[arg(long = "set", default_value = "s")]
        set: SetKind,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Measure {
    /// chromatic number, or the label range with --p
    Chi,
    /// chromatic span, or the edge span with --p
    Span,
    /// label range of an L(p,1)-labelling
    Range,
}

#[derive(Args)]
struct GraphArgs {
    /// Shorthand such as P3xP3 or C5^2xK2, a JSON file, or inline JSON
    #[arg(long)]
    graph: String,
    /// p3, p4, acyclic, none or explicit:<file>
    #[arg(long, default_value = "none")]
    family: String,
    /// Separation for L(p,1)-labellings
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Subcommand)]
enum ColorCommand {
    /// Exact optimum with a witness
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "chi")]
        measure: Measure,
    },
    /// Validate a supplied colouring
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated colours
        #[arg(long, value_delimiter = ',', conflicts_with = "coloring")]
        colors: Option<Vec<i64>>,
        /// {"colors": [...]} as a file or inline JSON
        #[arg(long)]
        coloring: Option<String>,
    },
    /// Colour a product through a k-multiplicative set
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "r")]
        strategy: SetKind,
        /// Force the factor span bound
        #[arg(long)]
        k: Option<u64>,
    },
}

#[derive(Args)]
struct ReproduceArgs {
    table: TableId,
    /// Compare with the embedded reference copy
    #[arg(long)]
    diff: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    k_max: Option<u64>,
    #[arg(long)]
    d_max: Option<usize>,
}

enum Failure {
    Usage(String),
    Violation(String),
    Budget { message: String, partial: Value },
}

impl From<SidonError> for Failure {
    fn from(e: SidonError) -> Self {
        match e {
            SidonError::BudgetExceeded { ref best, .. } => Failure::Budget {
                partial: json!({ "status": "budget_exhausted", "best": best }),
                message: e.to_string(),
            },
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<ColoringError> for Failure {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::BudgetExceeded {
                upper_bound,
                ref witness,
                ..
            } => Failure::Budget {
                partial: json!({
                    "status": "budget_exhausted",
                    "upper_bound": upper_bound,
                    "coloring": witness,
                }),
                message: e.to_string(),
            },
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Coloring(c) => c.into(),
            ConstructError::Sidon(s) => s.into(),
            ConstructError::VerificationFailed(_) => Failure::Violation(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn print_json(value: &Value) {
    let text = serde_json::to_string_pretty(value).expect("JSON values always serialise");
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn read_text_or_inline(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(trimmed.to_string());
    }
    fs::read_to_string(Path::new(arg)).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}

fn parse_graph(arg: &str) -> Result<GraphExpr, Failure> {
    let text = if Path::new(arg).is_file() {
        read_text_or_inline(arg)?
    } else {
        arg.to_string()
    };
    text.parse::<GraphExpr>()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_family(arg: &str) -> Result<ForbiddenFamily, Failure> {
    let family = match arg.strip_prefix("explicit:") {
        Some(file) => {
            let text = read_text_or_inline(file)?;
            let graphs: Vec<Graph> =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
            ForbiddenFamily::Explicit(graphs)
        }
        None => arg.parse().map_err(Failure::Usage)?,
    };
    family
        .validate()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(family)
}

/// Accepts `{"colors": [...]}` or any object with such a value under `"coloring"`,
/// so `color solve` output can be piped straight back in.
fn parse_coloring(text: &str) -> Result<Coloring, Failure> {
    let bad = |e: serde_json::Error| Failure::Usage(format!("coloring: {e}"));
    let mut value: Value = serde_json::from_str(text).map_err(bad)?;
    if value.get("colors").is_none() {
        if let Some(inner) = value.get_mut("coloring") {
            value = inner.take();
        }
    }
    serde_json::from_value(value).map_err(bad)
}

fn cmd_sidon(cmd: SidonCommand) -> CmdResult {
    match cmd {
        SidonCommand::Gen {
            set,
            k,
            count,
            limit,
            csv,
        } => {
            let generated = match (count, limit) {
                (_, Some(limit)) => match set {
                    SetKind::R => {
                        let count = limit.saturating_sub(1).checked_div(k).map_or(0, |q| q + 1);
                        generate_r(k, count as usize)?
                    }
                    SetKind::S => generate_s(k, limit)?,
                    SetKind::T => generate_t(k, limit)?,
                },
                (count, None) => first_elements(set, k, count.unwrap_or(15))?,
            };
            if csv {
                let items: Vec<String> = generated.elements().iter().map(u64::to_string).collect();
                let _ = writeln!(io::stdout().lock(), "{}", items.join(","));
            } else {
                print_json(&json!({
                    "set": set,
                    "k": k,
                    "elements": generated.elements(),
                }));
            }
            Ok(0)
        }
        SidonCommand::Verify { k, elements } => {
            if k == 0 {
                return Err(Failure::Usage("k must be a positive integer".into()));
            }
            if elements.contains(&0) {
                return Err(Failure::Usage("elements must be positive".into()));
            }
            let mut sorted = elements;
            sorted.sort_unstable();
            sorted.dedup();
            match find_violation(&sorted, k) {
                None => {
                    print_json(&json!({ "k": k, "elements": sorted, "multiplicative": true }));
                    Ok(0)
                }
                Some(v) => {
                    print_json(&json!({
                        "k": k,
                        "elements": sorted,
                        "multiplicative": false,
                        "violation": v,
                        "witness": [v.a, v.b, v.x, v.y],
                    }));
                    Ok(1)
                }
            }
        }
        SidonCommand::Max { n, k } => {
            let best = max_sidon_subset(n, k, Budget::from_env())?;
            let small = SmallPrimes::new(k);
            let s_count = (1..=n).filter(|&x| small.in_s(x)).count();
            let t_count = (1..=n).filter(|&x| small.in_t(x)).count();
            let ratio = if s_count == 0 {
                Value::Null
            } else {
                json!(Rational::new(best.len() as i64, s_count as i64).display_with_approx())
            };
            print_json(&json!({
                "n": n,
                "k": k,
                "cardinality": best.len(),
                "witness": best.elements(),
                "s_count": s_count,
                "t_count": t_count,
                "ratio_to_s": ratio,
            }));
            Ok(0)
        }
        SidonCommand::Density { set, k } => {
            let d = density(set, k)?;
            print_json(&json!({
                "set": set,
                "k": k,
                "density": d.to_string(),
                "approx": format!("{:.6}", d.to_f64()),
            }));
            Ok(0)
        }
    }
}

fn cmd_color(cmd: ColorCommand) -> CmdResult {
    let budget = Budget::from_env();
    match cmd {
        ColorCommand::Solve { graph, measure } => {
            let g = parse_graph(&graph.graph)?
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?
                .graph;
            let family = parse_family(&graph.family)?;
            let (name, opt) = match (graph.p, measure) {
                (None, Measure::Chi) => ("chi", chromatic_number(&g, &family, budget)?),
                (None, Measure::Span) => ("span", chromatic_span(&g, &family, budget)?),
                (None, Measure::Range) => {
                    return Err(Failure::Usage("--measure range needs --p".into()))
                }
                (Some(p), Measure::Span) => ("lp1_span", min_lp1_span(&g, p, budget)?),
                (Some(p), _) => ("lp1_range", min_lp1_range(&g, p, budget)?),
            };
            print_json(&json!({
                "measure": name,
                "family": family.to_string(),
                "p": graph.p,
                "value": opt.value,
                "coloring": opt.coloring,
            }));
            Ok(0)
        }
        ColorCommand::Check {
            graph,
            colors,
            coloring,
        } => {
            let g = parse_graph(&graph.graph)?
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?
                .graph;
            let c = match (colors, coloring) {
                (Some(colors), _) => Coloring::new(colors),
                (None, Some(arg)) => parse_coloring(&read_text_or_inline(&arg)?)?,
                (None, None) => {
                    return Err(Failure::Usage(
                        "one of --colors or --coloring is required".into(),
                    ))
                }
            };
            if c.len() != g.vertex_count() {
                return Err(Failure::Usage(format!(
                    "colouring has {} entries but the graph has {} vertices",
                    c.len(),
                    g.vertex_count()
                )));
            }
            if let Some(p) = graph.p {
                let ok = is_lp1_labelling(&g, &c, p)?;
                print_json(&json!({
                    "p": p,
                    "valid": ok,
                    "span": if ok { json!(lp1_span(&g, &c)?) } else { Value::Null },
                    "range": if ok { json!(lp1_range(&g, &c)?) } else { Value::Null },
                }));
                return Ok(if ok { 0 } else { 1 });
            }
            let family = parse_family(&graph.family)?;
            let proper = is_proper(&g, &c)?;
            let free = proper && is_f_free(&g, &c, &family)?;
            print_json(&json!({
                "family": family.to_string(),
                "proper": proper,
                "f_free": free,
                "colour_count": c.colour_count(),
                "span": if proper { json!(span(&g, &c)?) } else { Value::Null },
            }));
            Ok(if free { 0 } else { 1 })
        }
        ColorCommand::Construct { graph, strategy, k } => {
            let expr = parse_graph(&graph.graph)?;
            let factors = expr
                .factors
                .iter()
                .map(Factor::try_from)
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(p) = graph.p {
                let (product, plan, report) = lp1_pipeline(&factors, p, strategy, budget)?;
                if !is_lp1_labelling(&product.graph, &report.folded, p)? {
                    return Err(Failure::Violation(
                        "output is not an L(p,1)-labelling".into(),
                    ));
                }
                print_json(&json!({
                    "p": p,
                    "strategy": strategy,
                    "k": plan.k,
                    "sidon": plan.sidon.elements(),
                    "span": report.span,
                    "range": report.range,
                    "bound": 2 * plan.k * plan.sidon.max().unwrap_or(1),
                    "labelling": report.folded,
                    "verified": true,
                }));
                return Ok(0);
            }
            let family = parse_family(&graph.family)?;
            let report = product_pipeline(&factors, &family, k, strategy, budget)?;
            let g = &report.product.graph;
            if !is_proper(g, &report.coloring)? || !is_f_free(g, &report.coloring, &family)? {
                return Err(Failure::Violation(format!("output is not {family}-free")));
            }
            print_json(&json!({
                "family": family.to_string(),
                "strategy": strategy,
                "k": report.k,
                "sidon": report.sidon.elements(),
                "factor_spans": report.factor_spans,
                "span": report.span,
                "colour_count": report.colour_count,
                "bound": report.bound,
                "closed_form_bound": report.closed_form_bound,
                "coloring": report.coloring,
                "verified": true,
            }));
            Ok(0)
        }
    }
}

fn cmd_reproduce(args: ReproduceArgs) -> CmdResult {
    let report = match args.table {
        TableId::S => reproduce_s_table(2, args.k_max.unwrap_or(30))?,
        TableId::T => reproduce_t_table(2, args.k_max.unwrap_or(15))?,
        TableId::Grid => reproduce_grid_table(args.d_max.unwrap_or(15))?,
    };
    let mismatches = if args.diff {
        diff_against_reference(&report)
    } else {
        Vec::new()
    };
    if args.csv {
        let _ = write!(io::stdout().lock(), "{}", report.to_csv());
        for m in &mismatches {
            eprintln!("mismatch: {m}");
        }
    } else if args.diff {
        let mut value = serde_json::to_value(&report).expect("reports serialise");
        value["mismatches"] = json!(mismatches);
        print_json(&value);
    } else {
        print_json(&serde_json::to_value(&report).expect("reports serialise"));
    }
    Ok(if mismatches.is_empty() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sidon(cmd) => cmd_sidon(cmd),
        Command::Color(cmd) => cmd_color(cmd),
        Command::Reproduce(args) => cmd_reproduce(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget { message, partial }) => {
            print_json(&partial);
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}
