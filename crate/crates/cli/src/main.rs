//! Command-line surface for the exact branched-cover library.
//!
//! Exit codes: 0 on success, 1 on a computation error (budget exceeded,
//! degree mismatch, failed verification), 2 on a usage error.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hurwitz_core::character::char_table;
use hurwitz_core::cutjoin::{structure_constants, structure_constants_oracle, CutJoinOp};
use hurwitz_core::genfun::GenFunSeries;
use hurwitz_core::hurwitz::{
    hurwitz_number, hurwitz_oracle_with_budget, source_euler, CoverSpec, DEFAULT_ORACLE_BUDGET,
};
use hurwitz_core::partition::Partition;
use hurwitz_core::scalar::BigRational;
use hurwitz_core::verify::{operator_checks, verify_all, CheckStatus};

/// Environment variable overriding the default enumeration budget.
const BUDGET_ENV: &str = "HURWITZ_ORACLE_BUDGET";

fn version_string() -> &'static str {
    static VERSION: std::sync::OnceLock<String> = std::sync::OnceLock::new();
    VERSION.get_or_init(|| {
        format!(
            "{} (library {}, output format {})",
            env!("CARGO_PKG_VERSION"),
            hurwitz_core::LIBRARY_VERSION,
            hurwitz_core::FORMAT_VERSION
        )
    })
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Wrapper so clap can parse a semicolon-separated profile list as one value.
#[derive(Clone)]
struct ProfileList(Vec<Partition>);

fn parse_profile_list(s: &str) -> Result<ProfileList, String> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(ProfileList(Vec::new()));
    }
    t.split(';')
        .map(|tok| tok.trim().parse::<Partition>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(ProfileList)
}

fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<BigRational, String> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| format!("not a rational number: {e}"))
}

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version = version_string(),
    about = "Exact branched-cover counts, cut-and-join operators, and generating functions",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the character table of the symmetric group on `degree` symbols.
    CharTable {
        #[arg(long)]
        degree: usize,
    },
    /// Count branched covers with the given base genus and profiles.
    Hurwitz {
        /// Genus of the base surface.
        #[arg(long)]
        genus: usize,
        /// Sheet count.
        #[arg(long)]
        degree: usize,
        /// Semicolon-separated ramification profiles, e.g. "(2,1);(3)".
        #[arg(long, default_value = "", value_parser = parse_profile_list)]
        profiles: ProfileList,
        /// Count by brute-force tuple enumeration instead of character sums.
        #[arg(long)]
        oracle: bool,
        /// Enumeration budget in composed tuples (default from
        /// HURWITZ_ORACLE_BUDGET or built-in).
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Graded cut-and-join operators.
    #[command(subcommand)]
    Cutjoin(CutjoinCmd),
    /// Genus-graded generating-function series.
    Genfun {
        /// Sheet count.
        #[arg(long)]
        degree: usize,
        /// Genus of the base surface.
        #[arg(long)]
        genus: usize,
        /// Semicolon-separated marked profiles, one u variable each.
        #[arg(long, default_value = "", value_parser = parse_profile_list)]
        marks: ProfileList,
        /// Use the double power-sum alphabet (q and p).
        #[arg(long)]
        double: bool,
        /// Truncation order in each u variable.
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Run the self-verification suite for all degrees up to `degree`.
    Verify {
        /// Largest degree to verify.
        #[arg(long)]
        degree: usize,
        /// Enumeration budget in composed tuples (default from
        /// HURWITZ_ORACLE_BUDGET or built-in).
        #[arg(long)]
        budget: Option<u128>,
    },
}

#[derive(Subcommand)]
enum CutjoinCmd {
    /// Print one operator as matrix entries and differential terms.
    Show {
        #[arg(long)]
        degree: usize,
        /// Branching profile of the operator, e.g. "(2,1)".
        #[arg(long, value_parser = parse_partition_arg)]
        partition: Partition,
        /// Rescale to the normalized operator (diagonal on the deformed
        /// Schur basis).
        #[arg(long)]
        normalized: bool,
        /// Substitute a rational value for z, e.g. "1" or "2/3".
        #[arg(long, value_parser = parse_rational_arg)]
        z: Option<BigRational>,
    },
    /// Print the nonzero structure constants of the operator algebra.
    Constants {
        #[arg(long)]
        degree: usize,
        /// Compute them from raw class-sum products instead of character
        /// sums.
        #[arg(long)]
        oracle: bool,
    },
    /// Check composition, commutativity, and the diagonal action at one
    /// degree.
    Verify {
        #[arg(long)]
        degree: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn resolve_budget(flag: Option<u128>) -> Result<u128, String> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => raw
            .parse::<u128>()
            .map_err(|_| format!("{BUDGET_ENV} must be an unsigned integer, got {raw:?}")),
        Err(_) => Ok(DEFAULT_ORACLE_BUDGET),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.cmd {
        Cmd::CharTable { degree } => {
            if degree == 0 {
                return Err("degree must be positive".into());
            }
            let table = char_table(degree);
            match format {
                Format::Text => println!("{}", render::char_table_text(&table)),
                Format::Json => println!("{}", render::char_table_json(&table)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hurwitz {
            genus,
            degree,
            profiles,
            oracle,
            budget,
        } => {
            let spec =
                CoverSpec::new(genus, degree, profiles.0).map_err(|e| e.to_string())?;
            let (value, method) = if oracle {
                let budget = resolve_budget(budget)?;
                (
                    hurwitz_oracle_with_budget(&spec, budget).map_err(|e| e.to_string())?,
                    "enumeration",
                )
            } else {
                (hurwitz_number(&spec), "character")
            };
            let euler = source_euler(&spec).euler();
            match format {
                Format::Text => match euler {
                    Some(e) => println!("{value} (2h-2 = {e})"),
                    None => println!("{value} (parity failure)"),
                },
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "value": value.to_string(),
                        "euler2h2": euler,
                        "method": method,
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cutjoin(sub) => run_cutjoin(sub, format),
        Cmd::Genfun {
            degree,
            genus,
            marks,
            double,
            order,
        } => {
            let marks = marks.0;
            let orders = vec![order; marks.len()];
            let series = GenFunSeries::build(genus, degree, marks, orders, double)
                .map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", render::series_text(&series)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&series).map_err(|e| e.to_string())?
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { degree, budget } => {
            if degree == 0 {
                return Err("degree must be positive".into());
            }
            let budget = resolve_budget(budget)?;
            let report = verify_all(degree, budget);
            match format {
                Format::Text => println!("{report}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&report).map_err(|e| e.to_string())?
                ),
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_cutjoin(cmd: CutjoinCmd, format: Format) -> Result<ExitCode, String> {
    match cmd {
        CutjoinCmd::Show {
            degree,
            partition,
            normalized,
            z,
        } => {
            let op = if normalized {
                CutJoinOp::build_normalized(degree, &partition)
            } else {
                CutJoinOp::build(degree, &partition)
            }
            .map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", render::operator_text(&op, z.as_ref())?),
                Format::Json => println!("{}", render::operator_json(&op, z.as_ref())?),
            }
            Ok(ExitCode::SUCCESS)
        }
        CutjoinCmd::Constants { degree, oracle } => {
            let constants = if oracle {
                structure_constants_oracle(degree).map_err(|e| e.to_string())?
            } else {
                structure_constants(degree)
            };
            let method = if oracle { "class-sums" } else { "character" };
            match format {
                Format::Text => print!("{}", render::constants_text(&constants)),
                Format::Json => println!("{}", render::constants_json(&constants, method)),
            }
            Ok(ExitCode::SUCCESS)
        }
        CutjoinCmd::Verify { degree } => {
            if degree == 0 {
                return Err("degree must be positive".into());
            }
            let checks = operator_checks(degree);
            let failed = checks
                .iter()
                .any(|c| matches!(c.status, CheckStatus::Fail(_)));
            match format {
                Format::Text => {
                    for c in &checks {
                        println!("{c}");
                    }
                }
                Format::Json => {
                    let doc = serde_json::json!({ "degree": degree, "checks": checks });
                    println!("{doc}");
                }
            }
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}
