mod construct;
mod error;
mod input;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rexlab_core::oracle::{default_cache_path, CacheStatus, OracleOptions, RexCache};
use rexlab_core::patterns::count_copies;

use crate::construct::FlagParams;
use crate::error::{CliError, Result};
use crate::suites::{Suite, VerifyOpts};

/// Regular generalized Turán numbers: constructions, counting and
/// exhaustive search.
#[derive(Parser)]
#[command(name = "rexlab", version)]
struct Cli {
    /// Worker threads for the oracle.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a construction from a recipe (inline JSON, a file, or flags).
    Construct(ConstructArgs),
    /// Count copies of a pattern in every graph of a host file.
    Count {
        #[arg(long)]
        pattern: String,
        /// graph6 (one graph per line) or edge-list file.
        host: PathBuf,
    },
    /// Exhaustive rex(n, pattern, forbid) over all regular graphs on n vertices.
    Brute(BruteArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Inspect or clear the oracle cache.
    Cache {
        #[command(subcommand)]
        action: CacheCmd,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// Recipe JSON, or a path to a file holding it.
    recipe: Option<String>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    g: Option<i64>,
    /// Extra parameter as key=value; non-integers are graph parameters.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Swap budget for randomized searches.
    #[arg(long)]
    budget: Option<u64>,
    /// graph6 output file; the manifest is written beside it as .json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BruteArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    forbid: String,
    /// Only this regularity.
    #[arg(long)]
    r: Option<usize>,
    /// Enumeration node budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Recompute and cross-check against the stored row.
    #[arg(long)]
    no_cache: bool,
    /// Disable the triangle degree-bound prune.
    #[arg(long)]
    no_prune: bool,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long)]
    forbid: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum CacheCmd {
    /// Print the cache location.
    Path,
    /// List stored records.
    Show,
    /// Delete the cache file.
    Clear,
}

fn print_json<T: serde::Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn construct(args: ConstructArgs, json: bool) -> Result<()> {
    let text = args.recipe.as_deref().map(input::json_or_file).transpose()?;
    let flags = FlagParams {
        family: args.family,
        n: args.n,
        k: args.k,
        r: args.r,
        g: args.g,
        params: args.params,
        seed: args.seed,
        budget: args.budget,
    };
    let recipe = construct::recipe_from(text.as_deref(), &flags)?;
    let manifest = construct::build(recipe)?;
    if let Some(out) = &args.out {
        let mpath = construct::write(&manifest, out)?;
        if !json {
            eprintln!("wrote {} and {}", out.display(), mpath.display());
        }
    }
    if json {
        print_json(&manifest);
    } else {
        for a in &manifest.artifacts {
            println!("{}", a.label);
            println!("  graph6     {}", a.graph6);
            println!("  order      {}  edges {}", a.order, a.edges);
            println!("  degree     {}", a.degree.map_or("irregular".into(), |d| d.to_string()));
            println!("  girth      {}", a.girth.map_or("acyclic".into(), |g| g.to_string()));
            println!("  triangles  {}", a.triangles);
            for c in &a.checks {
                let tag = if c.ok { "PASS" } else { "FAIL" };
                println!("  {tag} {}: expected {}, observed {}", c.name, c.expected, c.observed);
            }
            for n in &a.notes {
                println!("  note: {n}");
            }
        }
    }
    if manifest.all_ok() {
        Ok(())
    } else {
        Err(CliError::Verification("a construction check failed".into()))
    }
}

fn count(pattern: &str, host: &std::path::Path) -> Result<()> {
    let h = input::pattern(pattern)?;
    for g in input::graph_file(host)? {
        print_json(&count_copies(&h, &g));
    }
    Ok(())
}

fn brute(args: BruteArgs, json: bool) -> Result<()> {
    let (h, f) = (input::pattern(&args.pattern)?, input::pattern(&args.forbid)?);
    let mut opts = OracleOptions::default();
    if let Some(b) = args.budget {
        opts.budget = b;
    }
    opts.degree_prune = !args.no_prune;
    let cache = RexCache::new(default_cache_path());
    let (rec, status) = cache.rex(args.n, &h, &f, args.r, &opts, args.no_cache)?;
    if json {
        print_json(&rec);
        return Ok(());
    }
    let source = match status {
        CacheStatus::Hit => "cache hit".to_string(),
        CacheStatus::Stored => format!("computed, stored in {}", cache.path().display()),
        CacheStatus::Recomputed(Some(true)) => "recomputed, matches the cache".to_string(),
        CacheStatus::Recomputed(_) => "recomputed, nothing cached".to_string(),
    };
    println!("rex({}, {}, {}) = {}", rec.n, args.pattern, args.forbid, rec.best_value);
    println!("  status        {}", if rec.exhaustive { "exhaustive" } else { "INCONCLUSIVE (node budget hit)" });
    println!("  regularity    {}", rec.best_regularity.map_or("none".into(), |r| r.to_string()));
    println!("  scanned       {:?}", rec.regularities_scanned);
    println!("  certificates  {}", rec.certificates.len());
    for c in &rec.certificates {
        println!("    {}  |Aut| = {}", c.canon_graph6, c.automorphism_count);
    }
    println!("  source        {source}");
    Ok(())
}

fn verify(args: VerifyArgs, json: bool) -> Result<()> {
    let opts = VerifyOpts {
        n: args.n,
        k: args.k,
        n_max: args.n_max,
        k_max: args.k_max,
        m: args.m,
        ell: args.ell,
        g: args.g,
        pattern: args.pattern,
        forbid: args.forbid,
        seed: args.seed,
        budget: args.budget,
    };
    let rep = suites::run(args.suite, &opts)?;
    if json {
        print_json(&rep);
    } else {
        print!("{}", rep.to_table());
    }
    if rep.failed() {
        Err(CliError::Verification(format!("{} checks failed", rep.totals.fail)))
    } else {
        Ok(())
    }
}

fn cache(action: CacheCmd, json: bool) -> Result<()> {
    let cache = RexCache::new(default_cache_path());
    match action {
        CacheCmd::Path => println!("{}", cache.path().display()),
        CacheCmd::Clear => cache.clear()?,
        CacheCmd::Show => {
            for rec in cache.records()? {
                if json {
                    print_json(&rec);
                } else {
                    println!(
                        "n={} pattern={} forbidden={} r={} best={} certificates={}",
                        rec.n,
                        rec.pattern.canon_graph6,
                        rec.forbidden.canon_graph6,
                        rec.r_filter.map_or("any".into(), |r| r.to_string()),
                        rec.best_value,
                        rec.certificates.len()
                    );
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("{}", CliError::Usage(e.to_string()));
            return ExitCode::from(2);
        }
    }
    let json = cli.json;
    let result = match cli.cmd {
        Cmd::Construct(a) => construct(a, json),
        Cmd::Count { pattern, host } => count(&pattern, &host),
        Cmd::Brute(a) => brute(a, json),
        Cmd::Verify(a) => verify(a, json),
        Cmd::Cache { action } => cache(action, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rexlab: {e}");
            e.exit_code()
        }
    }
}
