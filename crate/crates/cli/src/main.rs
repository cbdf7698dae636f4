//! `dvisit`: batch front end for visits, homogeneous sets and property suites.
//!
//! Exit codes: 0 success, 1 failed property suite, 2 configuration error,
//! 3 unverified homogeneous report.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dvisit::dsl::{builtin, DslColoring, TableColoring};
use dvisit::suites::{run_suite, Suite};
use dvisit::{enumerate_visit, homog_pipeline, ColorTree, ColorWord, Coloring, PriorityList};

#[derive(Parser)]
#[command(name = "dvisit", version, about = "Complete D-visits of color trees and homogeneous sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the complete visit of a tree.
    Visit(VisitArgs),
    /// Extract homogeneous sets of a coloring through its Erdős tree.
    Homog(HomogArgs),
    /// Run seeded property suites.
    Check(CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Text,
}

impl Emit {
    fn ext(self) -> &'static str {
        match self {
            Emit::Json => "json",
            Emit::Dot => "dot",
            Emit::Text => "txt",
        }
    }
}

#[derive(clap::Args)]
struct VisitArgs {
    /// Tree file (JSON) or family: unary, complete:K, full:K:D.
    #[arg(long)]
    tree: String,
    /// Comma-separated colors, lowest priority first. Default 0,1,…,k−1.
    #[arg(long)]
    priority: Option<String>,
    /// Comma-separated root word. Default: the empty word.
    #[arg(long)]
    root: Option<String>,
    #[arg(long, default_value_t = 100)]
    budget: usize,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct HomogArgs {
    /// Coloring expression in x and y.
    #[arg(long, group = "source")]
    coloring: Option<String>,
    /// constant:I, sum-mod, diff-mod, block:B, table:PATH.
    #[arg(long, group = "source")]
    builtin: Option<String>,
    /// Table coloring file (JSON).
    #[arg(long, group = "source")]
    table: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Number of naturals colored, N.
    #[arg(long, default_value_t = 100)]
    horizon: usize,
    #[arg(long, default_value_t = 1000)]
    budget: usize,
    #[arg(long)]
    priority: Option<String>,
    /// Division by zero in the expression is an error.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the visit trace of the word tree here.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CheckArgs {
    /// visits, oracle, expansion, erdos, homog, dsl or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    cases: usize,
}

/// A configuration problem: reported on stderr, exit 2.
struct ConfigError(String);

impl<E: std::fmt::Display> From<E> for ConfigError {
    fn from(e: E) -> Self {
        ConfigError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Visit(args) => cmd_visit(args),
        Command::Homog(args) => cmd_homog(args),
        Command::Check(args) => cmd_check(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn output_path(out: Option<PathBuf>, name: &str) -> PathBuf {
    out.unwrap_or_else(|| match std::env::var_os("DVISIT_OUT_DIR") {
        Some(dir) => Path::new(&dir).join(name),
        None => PathBuf::from(name),
    })
}

fn write_output(path: &Path, text: &str) -> Result<(), ConfigError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| ConfigError(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<u32>, ConfigError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| ConfigError(format!("bad {what} entry {s:?}"))))
        .collect()
}

fn parse_priority(text: Option<&str>, k: u32) -> Result<PriorityList, ConfigError> {
    let Some(text) = text else {
        return Ok(PriorityList::standard(k));
    };
    let colors = parse_list(text, "priority")?;
    let priority = PriorityList::with_k(colors.into_iter().map(Into::into).collect(), k)?;
    if !priority.covers(k) {
        return Err(ConfigError(format!("priority {text} must list every color below {k}")));
    }
    Ok(priority)
}

fn load_tree(source: &str) -> Result<ColorTree, ConfigError> {
    let path = Path::new(source);
    if path.exists() {
        Ok(ColorTree::load(path)?)
    } else {
        ColorTree::family(source).map_err(|e| ConfigError(format!("{source}: not a file, {e}")))
    }
}

fn cmd_visit(args: VisitArgs) -> Result<u8, ConfigError> {
    if args.budget == 0 {
        return Err(ConfigError("budget must be at least 1".into()));
    }
    let tree = load_tree(&args.tree)?;
    let priority = parse_priority(args.priority.as_deref(), tree.k())?;
    let root = match &args.root {
        Some(text) => ColorWord::from_indices(parse_list(text, "root")?),
        None => ColorWord::root(),
    };
    let visit = enumerate_visit(&tree, &priority, &root, args.budget)?;
    let text = match args.emit {
        Emit::Json => serde_json::to_string_pretty(&visit.trace())? + "\n",
        Emit::Dot => visit.to_dot(),
        Emit::Text => {
            let stable = visit.stable_indices();
            let mut s = String::new();
            for (i, w) in visit.order.iter().enumerate() {
                let mark = if stable.contains(&i) { " *" } else { "" };
                s.push_str(&format!("{i}\t{w}{mark}\n"));
            }
            s
        }
    };
    let path = output_path(args.out, &format!("visit.{}", args.emit.ext()));
    write_output(&path, &text)?;
    println!(
        "visit: {} entries, terminated={}, stable={}, branch length {}",
        visit.order.len(),
        visit.terminated,
        visit.stable_indices().len(),
        visit.branch().len()
    );
    println!("wrote {}", path.display());
    Ok(0)
}

fn load_coloring(args: &HomogArgs) -> Result<Box<dyn Coloring>, ConfigError> {
    if args.k == 0 {
        return Err(ConfigError("k must be at least 1".into()));
    }
    if let Some(src) = &args.coloring {
        return Ok(Box::new(DslColoring::parse(src, args.k)?.strict(args.strict)));
    }
    if let Some(name) = &args.builtin {
        return Ok(builtin(name, args.k)?);
    }
    if let Some(path) = &args.table {
        let table = TableColoring::load(path)?;
        if table.k() != args.k {
            return Err(ConfigError(format!("table has k={}, but --k {}", table.k(), args.k)));
        }
        return Ok(Box::new(table));
    }
    Err(ConfigError("one of --coloring, --builtin or --table is required".into()))
}

fn cmd_homog(args: HomogArgs) -> Result<u8, ConfigError> {
    if args.horizon == 0 || args.budget == 0 {
        return Err(ConfigError("horizon and budget must be at least 1".into()));
    }
    let coloring = load_coloring(&args)?;
    let priority = parse_priority(args.priority.as_deref(), args.k)?;
    let run = homog_pipeline(coloring.as_ref(), args.horizon, args.budget, Some(&priority))?;
    let report = &run.report;
    let text = match args.emit {
        Emit::Json => serde_json::to_string_pretty(report)? + "\n",
        Emit::Dot => run.tree.to_dot(Some(report)),
        Emit::Text => {
            let mut s = format!("N={} verified={}\nbranch {:?}\n", report.n, report.verified, report.branch);
            for (i, set) in report.sets.iter().enumerate() {
                s.push_str(&format!("H{i} ({}) {set:?}\n", set.len()));
            }
            s
        }
    };
    let path = output_path(args.out, &format!("homog.{}", args.emit.ext()));
    write_output(&path, &text)?;
    if let Some(trace) = &args.trace {
        write_output(trace, &(serde_json::to_string_pretty(&run.visit.trace())? + "\n"))?;
    }
    for (i, set) in report.sets.iter().enumerate() {
        println!("H{i}: {} elements", set.len());
    }
    println!("branch length {}, verified={}", report.branch.len(), report.verified);
    println!("wrote {}", path.display());
    if report.verified {
        Ok(0)
    } else {
        eprintln!("error: an extracted set is not monochromatic");
        Ok(3)
    }
}

fn cmd_check(args: CheckArgs) -> Result<u8, ConfigError> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse::<Suite>().map_err(|_| ConfigError(format!("unknown suite {:?}", args.suite)))?]
    };
    let mut code = 0;
    for suite in suites {
        let report = run_suite(suite, args.seed, args.cases);
        if report.passed() {
            println!("{}: pass ({} cases)", suite.name(), report.cases);
        } else {
            code = 1;
            println!("{}: FAIL ({} of {} cases)", suite.name(), report.failures.len(), report.cases);
            for f in &report.failures {
                eprintln!("{} case {}: {}\n  counterexample: {}", suite.name(), f.case, f.message, f.counterexample);
            }
        }
    }
    Ok(code)
}
