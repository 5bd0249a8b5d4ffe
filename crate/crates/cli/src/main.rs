use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kdim::enumerate::enumerate_connected;
use kdim::families::FamilySpec;
use kdim::formulas::{
    dim_k_complete, dim_k_cycle, dim_k_fan, dim_k_multipartite, dim_k_path, dim_k_petersen, dim_k_wheel,
    wheel_deletion_delta, FamilyValue,
};
use kdim::io::{read_graph, to_graph6, write_graph, GraphFormat};
use kdim::lab::{run_all, run_suite, Suite, SweepConfig, SweepReport};
use kdim::solver::{solve_dim, solve_dim_k, Certificate, SolveOptions};
use kdim::{Error, Graph, Result};

#[derive(Parser)]
#[command(name = "kdim", version, about = "Distance-k metric dimension of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Edgelist,
    Graph6,
}

impl From<FileFormat> for GraphFormat {
    fn from(f: FileFormat) -> GraphFormat {
        match f {
            FileFormat::Edgelist => GraphFormat::EdgeList,
            FileFormat::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute dim_k exactly, with a certificate.
    Solve(SolveArgs),
    /// Evaluate a closed-form value.
    Formula(FormulaArgs),
    /// Write a family member to a file.
    Generate(GenerateArgs),
    /// Run one verification suite.
    Verify(VerifyArgs),
    /// Run every verification suite with default ranges.
    Sweep(SweepArgs),
    /// List connected graphs of a given order, one per isomorphism class.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Family spec such as `cycle:n=13` or `petersen`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    graph: Option<String>,
    /// Graph file; `.g6` means graph6, anything else an edge list.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    input_format: Option<FileFormat>,
    /// Radius; omit for the classical metric dimension.
    #[arg(long)]
    k: Option<u32>,
    /// Branch-and-bound node limit.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    allow_disconnected: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Output,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    beta: Option<usize>,
    /// Part sizes such as `1/2/2`.
    #[arg(long)]
    parts: Option<String>,
}

impl FamilyArgs {
    fn params(&self, k: Option<u32>) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        let nums = [("n", self.n), ("m", self.m), ("a", self.a), ("b", self.b), ("c", self.c), ("x", self.x), ("beta", self.beta)];
        for (key, v) in nums {
            if let Some(v) = v {
                p.insert(key.to_string(), v.to_string());
            }
        }
        if let Some(k) = k {
            p.insert("k".into(), k.to_string());
        }
        if let Some(parts) = &self.parts {
            p.insert("parts".into(), parts.clone());
        }
        p
    }
}

#[derive(Args)]
struct FormulaArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Output,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Family parameter k, where the family takes one.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FileFormat,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; output does not depend on it.
    #[arg(long, env = "KDIM_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Random instances in randomized suites.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    k_max: Option<u32>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Output,
}

/// Outcome of a successful run: whether every check passed.
type Outcome = Result<bool>;

fn load_graph(args: &SolveArgs) -> Result<Graph> {
    match (&args.graph, &args.file) {
        (Some(spec), _) => spec.parse::<FamilySpec>()?.graph(),
        (None, Some(path)) => {
            let fmt = args.input_format.map(GraphFormat::from).unwrap_or_else(|| GraphFormat::from_path(path));
            read_graph(path, fmt)
        }
        (None, None) => Err(Error::Input("give --graph or --file".into())),
    }
}

fn certificate_csv(c: &Certificate) -> String {
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    let set: Vec<String> = c.set.iter().map(usize::to_string).collect();
    format!(
        "n,k,dim,set,method,twin,diameter,refined\n{},{},{},{},{},{},{},{}\n",
        c.n,
        c.k,
        c.dim,
        set.join(" "),
        c.method.as_str(),
        c.bounds.twin,
        opt(c.bounds.diameter),
        opt(c.bounds.refined)
    )
}

fn solve(args: SolveArgs) -> Outcome {
    let g = load_graph(&args)?;
    let opts = SolveOptions { budget: args.budget, allow_disconnected: args.allow_disconnected };
    let cert = match args.k {
        Some(k) => solve_dim_k(&g, k, opts)?,
        None => solve_dim(&g, opts)?,
    };
    match args.format {
        Output::Json => println!("{}", cert.to_json()),
        Output::Csv => print!("{}", certificate_csv(&cert)),
        Output::Text => println!("dim_{} = {} ({}) set = {:?}", cert.k, cert.dim, cert.method.as_str(), cert.set),
    }
    Ok(true)
}

fn require<T>(v: Option<T>, name: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::Input(format!("family '{family}' needs --{name}")))
}

fn formula(args: FormulaArgs) -> Outcome {
    let f = &args.family;
    let name = f.family.trim().to_ascii_lowercase().replace('-', "_");
    let k = args.k;
    let value: FamilyValue = match name.as_str() {
        "path" => dim_k_path(require(f.n, "n", &name)?, k)?,
        "cycle" => dim_k_cycle(require(f.n, "n", &name)?, k)?,
        "wheel" => dim_k_wheel(require(f.n, "n", &name)?, k)?,
        "fan" => dim_k_fan(require(f.n, "n", &name)?, k)?,
        "complete" => dim_k_complete(require(f.n, "n", &name)?, k)?,
        "petersen" => dim_k_petersen(k)?,
        "multipartite" => {
            let spec: FamilySpec = format!("multipartite:parts={}", require(f.parts.clone(), "parts", &name)?).parse()?;
            let FamilySpec::Multipartite { parts } = spec else { unreachable!("parsed as multipartite") };
            dim_k_multipartite(&parts, k)?
        }
        "wheel_deletion" => {
            let x = require(f.x, "x", &name)?;
            let delta = wheel_deletion_delta(k, x)?;
            FamilyValue {
                family: name.clone(),
                params: vec![x],
                k,
                value: delta as usize,
                branch: "dim_k(wheel) - dim_k(rim)".into(),
            }
        }
        other => {
            return Err(Error::Input(format!(
                "no closed form for '{other}' (known: path, cycle, wheel, fan, complete, petersen, multipartite, wheel_deletion)"
            )))
        }
    };
    match args.format {
        Output::Json => println!("{}", serde_json::to_string(&value).expect("serializes")),
        Output::Csv => {
            let params: Vec<String> = value.params.iter().map(usize::to_string).collect();
            print!("family,params,k,value,branch\n{},{},{},{},\"{}\"\n", value.family, params.join(" "), value.k, value.value, value.branch)
        }
        Output::Text => println!("{}", value.value),
    }
    Ok(true)
}

fn generate(args: GenerateArgs) -> Outcome {
    let spec = FamilySpec::from_parts(&args.family.family, &args.family.params(args.k))?;
    let g = spec.graph()?;
    write_graph(&g, &args.out, args.format.into())?;
    eprintln!("wrote {} (n={}, m={}) to {}", spec, g.order(), g.size(), args.out.display());
    Ok(true)
}

fn emit_report(report: &SweepReport, format: Output) -> Outcome {
    match format {
        Output::Json => {
            let doc = serde_json::json!({
                "suite": report.suite,
                "summary": report.summary(),
                "passed": report.passed(),
                "rows": report.rows,
            });
            println!("{doc}");
        }
        Output::Csv => print!("{}", report.to_csv()),
        Output::Text => print!("{}", report.to_text()),
    }
    Ok(report.passed())
}

fn config(run: &RunArgs, n_max: Option<usize>, k_max: Option<u32>) -> Result<SweepConfig> {
    if run.jobs == 0 {
        return Err(Error::Input("--jobs must be at least 1".into()));
    }
    Ok(SweepConfig { n_max, k_max, samples: run.samples, seed: run.seed, jobs: run.jobs })
}

fn verify(args: VerifyArgs) -> Outcome {
    let suite: Suite = args.suite.parse()?;
    let cfg = config(&args.run, args.n_max, args.k_max)?;
    emit_report(&run_suite(suite, &cfg)?, args.run.format)
}

fn sweep(args: SweepArgs) -> Outcome {
    let cfg = config(&args.run, None, None)?;
    emit_report(&run_all(&cfg)?, args.run.format)
}

fn enumerate(args: EnumerateArgs) -> Outcome {
    let graphs = enumerate_connected(args.n)?;
    let codes: Vec<String> = graphs.iter().map(to_graph6).collect();
    match args.format {
        Output::Json => println!("{}", serde_json::to_string(&codes).expect("serializes")),
        Output::Csv => {
            println!("index,graph6,edges");
            for (i, (c, g)) in codes.iter().zip(&graphs).enumerate() {
                println!("{i},{c},{}", g.size());
            }
        }
        Output::Text => codes.iter().for_each(|c| println!("{c}")),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Formula(a) => formula(a),
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Enumerate(a) => enumerate(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
