use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rueppel_lab::commands::{self, CliError, RingKind, Settings};
use rueppel_lab::config::load_config;
use rueppel_lab::output::Format;

/// Exact-arithmetic toolkit for Hankel transforms, continued fractions and
/// Riordan arrays of the Rueppel/Catalan sequence family.
#[derive(Parser)]
#[command(name = "rueppel-lab", version, max_term_width = 100)]
struct Cli {
    /// Output format: plain, json, csv or bfile.
    #[arg(long, global = true)]
    format: Option<Format>,

    /// Coefficient ring: int, rat or poly-bc.
    #[arg(long, global = true)]
    ring: Option<RingKind>,

    /// Configuration file (simple `key = value` lines).
    #[arg(long, global = true, default_value = "rueppel-lab.toml")]
    config: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a generating-function expression into its coefficients.
    Expand {
        /// Expression over the atoms c, r, rbc, motzkin, x.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Number of coefficients.
        #[arg(short)]
        n: Option<usize>,
    },
    /// Hankel transform of an expression or a catalog sequence.
    Hankel {
        /// Expression, or an A-number such as A036987.
        #[arg(allow_hyphen_values = true)]
        target: String,
        /// Largest matrix order.
        #[arg(short)]
        n: Option<usize>,
        /// Drop this many leading terms first.
        #[arg(long, default_value_t = 0)]
        shift: usize,
    },
    /// Stieltjes or Jacobi continued-fraction parameters of an expression.
    Cfrac {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Fraction kind: s or j.
        #[arg(long)]
        kind: String,
        /// Expansion depth.
        #[arg(short)]
        d: Option<usize>,
    },
    /// Build a Riordan array, or apply it to a series.
    Riordan {
        /// The pair's first series g (g(0) != 0).
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// The pair's second series f (f(0) = 0).
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Matrix order.
        #[arg(short, default_value_t = 9)]
        n: usize,
        /// Remove the first row (the stretched-array convention).
        #[arg(long)]
        strip_first_row: bool,
        /// Apply the array to this series instead of printing the matrix.
        #[arg(long, allow_hyphen_values = true)]
        apply: Option<String>,
    },
    /// Terms of a named catalog sequence.
    Catalog {
        /// A-number, e.g. A088567.
        id: String,
        /// Number of terms.
        #[arg(short, default_value_t = 20)]
        n: usize,
    },
    /// Run one registered check, or all of them.
    Verify {
        /// Check id, or "all".
        #[arg(default_value = "all")]
        target: String,
        /// Depth override for a single check.
        #[arg(short)]
        d: Option<usize>,
        /// Depth profile for "all", e.g. "hankel=32,poly=9,cf=64".
        #[arg(long)]
        depth_profile: Option<String>,
        /// Parallel workers for "all".
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Cross-check a catalog sequence against its OEIS b-file.
    Compare {
        /// A-number.
        id: String,
        /// Number of local terms to compare.
        #[arg(short, default_value_t = 64)]
        n: usize,
        /// Allow a network fetch (cached); default is fixtures only.
        #[arg(long)]
        network: bool,
    },
    /// List the registered checks.
    Checks,
}

fn build_settings(cli: &Cli) -> Result<(Settings, Format), CliError> {
    let file = load_config(&cli.config).map_err(CliError::Usage)?;
    let mut settings = Settings::default();
    if let Some(ring) = file.get("ring") {
        settings.ring = ring.parse().map_err(CliError::Usage)?;
    }
    if let Some(n) = file.get_usize("series_order").map_err(CliError::Usage)? {
        settings.series_order = n;
    }
    if let Some(n) = file.get_usize("hankel_order_int").map_err(CliError::Usage)? {
        settings.hankel_order_int = n;
    }
    if let Some(n) = file.get_usize("hankel_order_poly").map_err(CliError::Usage)? {
        settings.hankel_order_poly = n;
    }
    if let Some(n) = file.get_usize("cf_depth").map_err(CliError::Usage)? {
        settings.cf_depth = n;
    }
    if let Some(n) = file.get_usize("verify_jobs").map_err(CliError::Usage)? {
        settings.jobs = n.max(1);
    }
    if let Some(url) = file.get("oeis_base_url") {
        settings.oeis.base_url = url.to_string();
    }
    if let Some(dir) = file.get("oeis_cache_dir") {
        settings.oeis.cache_dir = PathBuf::from(dir);
    }
    if let Some(offline) = file.get_bool("oeis_offline").map_err(CliError::Usage)? {
        settings.oeis.offline = offline;
    }
    let mut format = Format::Plain;
    if let Some(f) = file.get("format") {
        format = f.parse().map_err(CliError::Usage)?;
    }
    if let Some(f) = cli.format {
        format = f;
    }
    if let Some(r) = cli.ring {
        settings.ring = r;
    }
    Ok((settings, format))
}

fn dispatch(cli: &Cli, settings: &Settings) -> Result<commands::Outcome, CliError> {
    match &cli.command {
        Command::Expand { expr, n } => {
            commands::expand(settings, expr, n.unwrap_or(settings.series_order))
        }
        Command::Hankel { target, n, shift } => commands::hankel(settings, target, *n, *shift),
        Command::Cfrac { expr, kind, d } => commands::cfrac(settings, expr, kind, *d),
        Command::Riordan {
            g,
            f,
            n,
            strip_first_row,
            apply,
        } => commands::riordan(settings, g, f, *n, *strip_first_row, apply.as_deref()),
        Command::Catalog { id, n } => commands::catalog_terms(settings, id, *n),
        Command::Verify {
            target,
            d,
            depth_profile,
            jobs,
        } => {
            let profile = match depth_profile {
                Some(spec) => commands::parse_depth_profile(spec)?,
                None => Default::default(),
            };
            let mut settings = settings.clone();
            if let Some(jobs) = jobs {
                settings.jobs = (*jobs).max(1);
            }
            commands::verify(&settings, target, *d, &profile)
        }
        Command::Compare { id, n, network } => commands::compare(settings, id, *n, *network),
        Command::Checks => {
            let reports: Vec<String> = rueppel_core::verify::registry()
                .iter()
                .map(|def| format!("{}  —  {}", def.id, def.summary))
                .collect();
            println!("{}", reports.join("\n"));
            std::process::exit(0);
        }
    }
}

fn main() -> ExitCode {
    // Deep polynomial work (continued fractions over b, c) legitimately
    // exceeds the library's conservative degree default.
    rueppel_core::exact::set_degree_bound(1024);
    let cli = Cli::parse();
    let (settings, format) = match build_settings(&cli) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("usage error: {e}");
            return ExitCode::from(2);
        }
    };
    match dispatch(&cli, &settings) {
        Ok(outcome) => match outcome.record.render(format) {
            Ok(text) => {
                print!("{text}");
                if outcome.verification_failed {
                    ExitCode::from(3)
                } else {
                    ExitCode::SUCCESS
                }
            }
            Err(message) => {
                eprintln!("usage error: {message}");
                ExitCode::from(2)
            }
        },
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Computation(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
