use clap::{Args, Parser, Subcommand};
use skewcat::{demo_document, parse, run};
use skewcat_core::gen::SampleConfig;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Verify skew monoidal structure, reflections, warpings, and comonad
/// liftings over declaratively described finite categories.
#[derive(Parser)]
#[command(name = "skewcat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Seed for the deterministic sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampled instances per check on large carriers.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Fibre size bound for sampled objects of slice categories.
    #[arg(long = "fibre-bound", default_value_t = 3)]
    fibre_bound: usize,
    /// Also write the JSON report to this file.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and execute its directives.
    Check {
        /// Path to the document.
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run a built-in demonstration document.
    Demo {
        /// Which demo: `section5` (injective coreflection) or `section8`
        /// (non-injective comonadic lift).
        which: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, opts) = match cli.command {
        Command::Check { file, opts } => match std::fs::read_to_string(&file) {
            Ok(text) => (text, opts),
            Err(e) => {
                eprintln!("skewcat: cannot read {}: {e}", file.display());
                return ExitCode::from(2);
            }
        },
        Command::Demo { which, opts } => match demo_document(&which) {
            Some(text) => (text.to_string(), opts),
            None => {
                eprintln!("skewcat: unknown demo `{which}` (expected section5 or section8)");
                return ExitCode::from(2);
            }
        },
    };
    let started = Instant::now();
    let (doc, env) = match parse(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("skewcat: {e}");
            return ExitCode::from(2);
        }
    };
    let cfg = SampleConfig {
        seed: opts.seed,
        samples: opts.samples,
        fibre_bound: opts.fibre_bound,
    };
    let report = run(&doc, &env, &cfg);
    let json = report.to_json();
    print!("{json}");
    if let Some(path) = &opts.json {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("skewcat: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    // Human summary, timing included, on stderr only: reports stay
    // byte-identical across runs.
    for d in &report.directives {
        eprintln!("{:5} {}", d.outcome, d.directive);
    }
    eprintln!(
        "skewcat: {} directive(s), outcome {}, {:.2?}",
        report.directives.len(),
        report.outcome,
        started.elapsed()
    );
    ExitCode::from(report.exit_code() as u8)
}
