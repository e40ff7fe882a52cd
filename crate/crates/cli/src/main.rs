use std::path::PathBuf;
use std::process::ExitCode;

use beta_moments::exact::{parse_rational, ExactRational};
use beta_moments::moments::MomentSpec;
use beta_moments::oeis::OeisClient;
use beta_moments_cli::commands;
use beta_moments_cli::{Format, OutputRecord};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "betamom", version, about = "Exact moments of shifted Beta laws and the identities they satisfy")]
struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    /// OEIS fixture directory (overrides BETAMOM_FIXTURES).
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    /// Never go online (also set by BETAMOM_OFFLINE=1).
    #[arg(long, global = true)]
    offline: bool,
    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> Result<ExactRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct SpecArgs {
    /// Left end of the support `[c, c+4]`.
    #[arg(short, default_value = "0", allow_hyphen_values = true, value_parser = rational)]
    c: ExactRational,
    #[arg(short = 'a', long = "alpha", allow_hyphen_values = true, value_parser = rational)]
    alpha: ExactRational,
    #[arg(short = 'b', long = "beta", allow_hyphen_values = true, value_parser = rational)]
    beta: ExactRational,
}

impl SpecArgs {
    fn spec(&self) -> beta_moments::error::Result<MomentSpec> {
        MomentSpec::new(self.c.clone(), self.alpha.clone(), self.beta.clone())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Moments M_n(c, α, β).
    Moments {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short = 'n', default_value_t = 10)]
        count: usize,
        /// Also print q^n M_n.
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        scale: Option<ExactRational>,
    },
    /// Check one identity, or `all`.
    Verify {
        id: String,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
        /// Largest n for the series identities.
        #[arg(long, default_value_t = 4)]
        infinite_n_max: u64,
        /// Terms summed before the certified tail.
        #[arg(short = 'J', default_value_t = 256)]
        truncation: u64,
    },
    /// Hankel determinants of the moment sequence.
    Hankel {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short = 'N', default_value_t = 8)]
        order: usize,
    },
    /// Generating-function coefficients, of a cataloged closed form or of a spec.
    Gf {
        /// Closed-form id such as `cor-b`, `bc-10` or `gen-i:1/2,3/2`.
        id: Option<String>,
        #[arg(short, allow_hyphen_values = true, value_parser = rational)]
        c: Option<ExactRational>,
        #[arg(short = 'a', long = "alpha", value_parser = rational)]
        alpha: Option<ExactRational>,
        #[arg(short = 'b', long = "beta", value_parser = rational)]
        beta: Option<ExactRational>,
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
    /// Compare q^n M_n against an OEIS entry, or search the cited entries.
    Match {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = rational)]
        scale: ExactRational,
        /// A-number, or `auto`.
        #[arg(long, default_value = "auto")]
        oeis: String,
    },
    /// Integrality of the scaled moments of Beta(p/r, 1 - p/r), or the non-integral demo.
    Integrality {
        /// `p r N`, or `demo [count]`.
        args: Vec<String>,
    },
    /// List the cataloged sequence identifications.
    Catalog,
    /// Check every cataloged OEIS citation.
    Claims,
}

fn run(cli: &Cli) -> Result<OutputRecord, String> {
    let client = || {
        let mut c = OeisClient::from_env();
        if let Some(dir) = &cli.fixtures {
            c = c.with_fixtures(dir.clone());
        }
        if cli.offline {
            c = c.force_offline();
        }
        c
    };
    let e = |x: beta_moments::error::Error| x.to_string();
    Ok(match &cli.command {
        Command::Moments { spec, count, scale } => commands::moments(&spec.spec().map_err(e)?, *count, scale.as_ref()),
        Command::Verify {
            id,
            n_max,
            infinite_n_max,
            truncation,
        } => commands::verify(id, *n_max, *infinite_n_max, *truncation).map_err(e)?,
        Command::Hankel { spec, order } => commands::hankel(&spec.spec().map_err(e)?, *order),
        Command::Gf {
            id,
            c,
            alpha,
            beta,
            order,
        } => match (id, alpha, beta) {
            (Some(id), None, None) => commands::gf_closed_form(id, *order).map_err(e)?,
            (None, Some(a), Some(b)) => {
                let c = c.clone().unwrap_or_default();
                commands::gf_spec(&MomentSpec::new(c, a.clone(), b.clone()).map_err(e)?, *order)
            }
            _ => return Err("give either a closed-form id or -a and -b".into()),
        },
        Command::Match { spec, scale, oeis } => {
            let id = (oeis != "auto").then_some(oeis.as_str());
            commands::match_sequence(&client(), &spec.spec().map_err(e)?, scale, id).map_err(e)?
        }
        Command::Integrality { args } => {
            let num = |s: &String| s.parse::<u64>().map_err(|_| format!("not a nonnegative integer: {s}"));
            match args.as_slice() {
                [d] if d == "demo" => commands::integrality_demo(9),
                [d, k] if d == "demo" => commands::integrality_demo(num(k)?),
                [p, r, n] => commands::integrality(num(p)?, num(r)?, num(n)?).map_err(e)?,
                _ => return Err("usage: integrality <p> <r> <N> | integrality demo [count]".into()),
            }
        }
        Command::Catalog => commands::catalog_listing(),
        Command::Claims => commands::claims(&client()).map_err(e)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(record) => {
            let mut out = std::io::stdout().lock();
            if let Err(err) = record.write(cli.format, &mut out) {
                eprintln!("error: {err}");
                return ExitCode::from(2);
            }
            if record.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
