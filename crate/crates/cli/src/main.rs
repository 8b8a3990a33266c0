use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tagkit_cli::commands::{
    run_eval, run_preprocess, run_recommend_eval, run_stats, run_sweep, CorpusOptions,
    OutputFormat, RecommendEvalOptions,
};
use tagkit_cli::error::CliError;
use tagkit_cli::sweep::SweepMode;
use tagkit_core::{Ranking, VectorizerKind};

/// Evaluate top-k hashtag recommendations (hit rate, precision, recall, F1,
/// hit ratio) and run a content-based reference recommender end to end.
#[derive(Parser)]
#[command(name = "tagkit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    /// Machine-readable report, full precision.
    Json,
    /// Aligned plain-text table, two decimals.
    Table,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Table => OutputFormat::Table,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VectorizerArg {
    Tfidf,
    Mowe,
}

impl From<VectorizerArg> for VectorizerKind {
    fn from(v: VectorizerArg) -> VectorizerKind {
        match v {
            VectorizerArg::Tfidf => VectorizerKind::TfIdf,
            VectorizerArg::Mowe => VectorizerKind::Mowe,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RankingArg {
    Popularity,
    Relevance,
}

impl From<RankingArg> for Ranking {
    fn from(r: RankingArg) -> Ranking {
        match r {
            RankingArg::Popularity => Ranking::Popularity,
            RankingArg::Relevance => Ranking::Relevance,
        }
    }
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus file: one {"id","user","timestamp","text"} object per line.
    corpus: PathBuf,

    /// Stopword override file (one word per line, '#' comments).
    #[arg(long)]
    stopwords: Option<PathBuf>,

    /// Keep only users whose tweets carry at least this many hashtags.
    #[arg(long, default_value_t = 3)]
    min_user_hashtags: usize,

    /// Count hashtag tokens toward the three-word eligibility minimum.
    #[arg(long)]
    count_hashtag_words: bool,
}

impl From<&CorpusArgs> for CorpusOptions {
    fn from(a: &CorpusArgs) -> CorpusOptions {
        CorpusOptions {
            corpus: a.corpus.clone(),
            stopwords: a.stopwords.clone(),
            min_user_hashtags: a.min_user_hashtags,
            count_hashtag_words: a.count_hashtag_words,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Score an evaluation record file.
    Eval {
        /// Records file: one {"record_id","recommended","ground_truth"} per line.
        records: PathBuf,

        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },

    /// Emit a closed-form metric table for a match schedule.
    Sweep {
        /// Hold n_R fixed at this value; n_G varies from 1 upward.
        #[arg(long, group = "mode")]
        fix_nr: Option<usize>,

        /// Hold n_G fixed at this value; n_R varies from 1 upward.
        #[arg(long, group = "mode", required_unless_present = "fix_nr")]
        fix_ng: Option<usize>,

        /// Match counts, one per row (comma separated).
        #[arg(long, value_delimiter = ',', required = true)]
        matches: Vec<usize>,

        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },

    /// Run the reference recommender over a corpus and score it.
    RecommendEval {
        #[command(flatten)]
        corpus: CorpusArgs,

        /// Recommendation list size.
        #[arg(long)]
        k: usize,

        /// Cosine similarity threshold for retrieval.
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,

        #[arg(long, value_enum, default_value_t = VectorizerArg::Tfidf)]
        vectorizer: VectorizerArg,

        #[arg(long, value_enum, default_value_t = RankingArg::Relevance)]
        ranking: RankingArg,

        /// Most recent fraction of the corpus used as the test set.
        #[arg(long, default_value_t = 0.10)]
        split_fraction: f64,

        /// Word-embedding file (required with --vectorizer mowe).
        #[arg(long)]
        embeddings: Option<PathBuf>,

        /// Reserved; the pipeline is deterministic and ignores it.
        #[arg(long)]
        seed: Option<u64>,

        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },

    /// Hashtags-per-tweet statistics of the post-filter corpus.
    Stats {
        #[command(flatten)]
        corpus: CorpusArgs,

        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },

    /// Emit the normalized, filtered corpus as JSONL.
    Preprocess {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Eval { records, format } => run_eval(&records, format.into()),
        Command::Sweep {
            fix_nr,
            fix_ng,
            matches,
            format,
        } => {
            let (mode, fixed) = match (fix_nr, fix_ng) {
                (Some(v), None) => (SweepMode::FixNr, v),
                (None, Some(v)) => (SweepMode::FixNg, v),
                _ => return Err(CliError::config("exactly one of --fix-nr / --fix-ng is required")),
            };
            run_sweep(mode, fixed, &matches, format.into())
        }
        Command::RecommendEval {
            corpus,
            k,
            threshold,
            vectorizer,
            ranking,
            split_fraction,
            embeddings,
            seed,
            format,
        } => {
            if let Some(seed) = seed {
                eprintln!("note: --seed {seed} ignored; the pipeline is deterministic");
            }
            let options = RecommendEvalOptions {
                corpus: (&corpus).into(),
                embeddings,
                k,
                threshold,
                vectorizer: vectorizer.into(),
                ranking: ranking.into(),
                split_fraction,
            };
            run_recommend_eval(&options, format.into())
        }
        Command::Stats { corpus, format } => run_stats(&(&corpus).into(), format.into()),
        Command::Preprocess { corpus } => run_preprocess(&(&corpus).into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            eprintln!("completed in {:.3}s", started.elapsed().as_secs_f64());
            ExitCode::SUCCESS
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code() as u8)
        }
    }
}
