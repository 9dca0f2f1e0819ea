use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use verifiers::{Bounds, TheoremId};

use cli_corpus::{corpus, runner, show};

/// Verification harness for weak second maximal subgroups, WSM-groups,
/// strongly irreducible chief factors, and non-vanishing elements over a
/// corpus of small finite groups.
#[derive(Parser)]
#[command(name = "grouplab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected checks over a corpus and emit a JSON report.
    Run(RunArgs),
    /// Pretty-print one group's lattice, chief series, and character table.
    Show(ShowArgs),
    /// Recompute cached results and compare byte-for-byte.
    VerifyCache(VerifyCacheArgs),
}

#[derive(Args)]
struct BoundArgs {
    /// Largest group order for full subgroup-lattice enumeration
    /// (hard cap 2000).
    #[arg(long, default_value_t = 500)]
    lattice_bound: u64,
    /// Largest group order for character tables.
    #[arg(long, default_value_t = 2000)]
    char_bound: u64,
    /// Largest subgroup index for transversal-closure maximality tests.
    #[arg(long, default_value_t = 100_000)]
    index_bound: u64,
    /// Largest p^dim for exhaustive module-vector enumeration.
    #[arg(long, default_value_t = 10_000)]
    vector_bound: usize,
}

impl BoundArgs {
    fn to_bounds(&self) -> Result<Bounds, String> {
        if self.lattice_bound > 2000 {
            return Err(format!(
                "--lattice-bound {} exceeds the hard cap of 2000",
                self.lattice_bound
            ));
        }
        Ok(Bounds {
            lattice: self.lattice_bound as u128,
            character: self.char_bound as u128,
            index: self.index_bound as u128,
            vector: self.vector_bound,
        })
    }
}

#[derive(Args)]
struct RunArgs {
    /// Line-delimited JSON corpus file; defaults to the builtin corpus of
    /// all constructor families up to order 200.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Comma-separated theorem ids
    /// (A,B,C,key_lemma,lemma_3_1,lemma_4_1,lemma_4_3,remark_supersolvable,
    /// remark_order72,remark_nonsolvable); defaults to all.
    #[arg(long, value_delimiter = ',')]
    theorems: Option<Vec<String>>,
    #[command(flatten)]
    bounds: BoundArgs,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cache directory for per-group results.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Include wall-clock timings in the report (breaks byte-for-byte
    /// reproducibility).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ShowArgs {
    /// A corpus group name (with --corpus) or a constructor expression such
    /// as "sym(4)" or "direct(alt(7),alt(7))".
    group: String,
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Also print the exact character table.
    #[arg(long)]
    table: bool,
    #[command(flatten)]
    bounds: BoundArgs,
}

#[derive(Args)]
struct VerifyCacheArgs {
    #[arg(long)]
    cache: PathBuf,
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[command(flatten)]
    bounds: BoundArgs,
}

fn load_corpus(
    path: &Option<PathBuf>,
) -> Result<Vec<(corpus::GroupSpec, permgroup_core::GroupHandle)>, String> {
    match path {
        Some(p) => corpus::parse_corpus(p).map_err(|e| e.to_string()),
        None => Ok(corpus::default_corpus()),
    }
}

fn parse_theorems(arg: &Option<Vec<String>>) -> Result<Vec<TheoremId>, String> {
    match arg {
        None => Ok(TheoremId::ALL.to_vec()),
        Some(names) => {
            let mut out = Vec::new();
            for n in names {
                let t: TheoremId = n.trim().parse()?;
                if !out.contains(&t) {
                    out.push(t);
                }
            }
            if out.is_empty() {
                return Err("no theorems selected".to_string());
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run(args) => run_command(args),
        Command::Show(args) => show_command(args),
        Command::VerifyCache(args) => verify_cache_command(args),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run_command(args: RunArgs) -> Result<u8, String> {
    let bounds = args.bounds.to_bounds()?;
    let theorems = parse_theorems(&args.theorems)?;
    let corpus = load_corpus(&args.corpus)?;
    let opts = runner::RunOptions {
        corpus_label: args
            .corpus
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "builtin-default".to_string()),
        theorems,
        bounds,
        jobs: args.jobs,
        cache_dir: args.cache,
        timings: args.timings,
    };
    let (report, exit) = runner::run(&corpus, &opts);
    runner::write_report(&report, args.out.as_deref()).map_err(|e| e.to_string())?;
    Ok(exit as u8)
}

fn show_command(args: ShowArgs) -> Result<u8, String> {
    let bounds = args.bounds.to_bounds()?;
    let handle = if let Some(path) = &args.corpus {
        let corpus = corpus::parse_corpus(path).map_err(|e| e.to_string())?;
        corpus
            .into_iter()
            .find(|(s, _)| s.name == args.group)
            .map(|(_, h)| h)
            .ok_or_else(|| format!("group '{}' not found in the corpus", args.group))?
    } else {
        cli_corpus::build_source(&args.group).map_err(|e| e.to_string())?
    };
    show::print_group(&args.group, &handle, bounds, args.table);
    Ok(0)
}

fn verify_cache_command(args: VerifyCacheArgs) -> Result<u8, String> {
    let bounds = args.bounds.to_bounds()?;
    let corpus = load_corpus(&args.corpus)?;
    Ok(runner::verify_cache(&corpus, &args.cache, bounds) as u8)
}
