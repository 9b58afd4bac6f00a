//! Command-line entry point: fetch | build | stats | eval.
//!
//! Configuration precedence is flags over the optional TOML config file
//! over built-in defaults; all randomness flows from the single seed.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::eval::EvalArgs;
use config::RunConfig;

#[derive(Parser)]
#[command(
    name = "conala-bodies",
    version,
    about = "Corpus construction and evaluation toolkit for CoNaLa with StackOverflow question bodies"
)]
struct Cli {
    /// TOML config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Question-body cache directory.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Output directory for exports and reports.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DataArgs {
    /// Annotated training file (CoNaLa JSON).
    #[arg(long)]
    annotated_train: Option<PathBuf>,

    /// Annotated test file (CoNaLa JSON).
    #[arg(long)]
    annotated_test: Option<PathBuf>,

    /// Mined pairs file (CoNaLa JSONL).
    #[arg(long)]
    mined: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Fetch and cache question bodies for all configured data files.
    Fetch {
        #[command(flatten)]
        data: DataArgs,
    },
    /// Build splits and export model-input JSONL per variant.
    Build {
        #[command(flatten)]
        data: DataArgs,

        /// Top mined examples to keep (by probability).
        #[arg(long)]
        mined_k: Option<usize>,

        /// Seed driving the validation carve-outs.
        #[arg(long)]
        seed: Option<u64>,

        /// Variant name, comma list, or "all".
        #[arg(long)]
        variant: Option<String>,

        /// Combine mined data into train/valid.
        #[arg(long, overrides_with = "no_mined")]
        with_mined: bool,

        /// Annotated data only.
        #[arg(long, overrides_with = "with_mined")]
        no_mined: bool,
    },
    /// Print dataset statistics tables.
    Stats {
        #[command(flatten)]
        data: DataArgs,

        #[arg(long)]
        mined_k: Option<usize>,

        /// Also compute the full mined row (needs all mined bodies cached).
        #[arg(long)]
        full_mined: bool,

        /// Token counting strategy: whitespace | code.
        #[arg(long)]
        stats_tokenizer: Option<String>,

        /// Also write the rows as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Score candidate snippets against references.
    Eval {
        /// Candidate file (JSONL text or lists, or plain text).
        #[arg(long)]
        candidates: PathBuf,

        /// Reference file, aligned by position.
        #[arg(long)]
        references: PathBuf,

        /// Full-variant rendered bodies, aligned by position.
        #[arg(long)]
        bodies: Option<PathBuf>,

        /// BLEU smoothing strategy: add-one | floor.
        #[arg(long)]
        smoothing: Option<String>,

        /// Oracle aggregation: corpus | mean-sentence.
        #[arg(long, default_value = "corpus")]
        oracle_aggregation: String,
    },
}

fn apply_data_args(config: &mut RunConfig, data: &DataArgs) {
    if let Some(path) = &data.annotated_train {
        config.annotated_train = Some(path.clone());
    }
    if let Some(path) = &data.annotated_test {
        config.annotated_test = Some(path.clone());
    }
    if let Some(path) = &data.mined {
        config.mined = Some(path.clone());
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let base = RunConfig::load(cli.config.as_deref())?;
    let mut config = commands::resolved_config(&base, &cli.cache_dir, &cli.out_dir);

    match &cli.command {
        Command::Fetch { data } => {
            apply_data_args(&mut config, data);
            config.validate()?;
            commands::fetch::run(&config)?;
        }
        Command::Build {
            data,
            mined_k,
            seed,
            variant,
            with_mined,
            no_mined,
        } => {
            apply_data_args(&mut config, data);
            if let Some(k) = mined_k {
                config.mined_k = *k;
            }
            if let Some(seed) = seed {
                config.seed = *seed;
            }
            if let Some(variant) = variant {
                config.variant = variant.clone();
            }
            if *with_mined {
                config.with_mined = true;
            }
            if *no_mined {
                config.with_mined = false;
            }
            config.validate()?;
            commands::build::run(&config)?;
        }
        Command::Stats {
            data,
            mined_k,
            full_mined,
            stats_tokenizer,
            json,
        } => {
            apply_data_args(&mut config, data);
            if let Some(k) = mined_k {
                config.mined_k = *k;
            }
            if *full_mined {
                config.full_mined = true;
            }
            if let Some(tokenizer) = stats_tokenizer {
                config.stats_tokenizer = tokenizer.clone();
            }
            config.validate()?;
            commands::stats::run(&config, json.as_ref())?;
        }
        Command::Eval {
            candidates,
            references,
            bodies,
            smoothing,
            oracle_aggregation,
        } => {
            if let Some(smoothing) = smoothing {
                config.smoothing = smoothing.clone();
            }
            config.validate()?;
            let args = EvalArgs {
                candidates: candidates.clone(),
                references: references.clone(),
                bodies: bodies.clone(),
                oracle_aggregation: oracle_aggregation.clone(),
            };
            commands::eval::run(&config, &args)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::FAILURE
        }
    }
}
