//! The `localh` command line: local h-polynomials, noncrossing partition
//! enumeration, permutation statistics and the verification suite.

pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use localh_core::localh::{local_h_barycentric_with_cap, local_h_cluster_with_cap, LocalHResult};
use localh_core::noncrossing::{
    enumerate_nc_a, enumerate_nc_b, nested_singleton_a, nested_singleton_b, pair_count, zero_block,
};
use localh_core::permutations::{
    foata_phi, fss_orbit, is_in_e, orbit_descent_polynomial, orbit_representative, parse_cycles,
    stats, Perm,
};
use localh_core::rootsystems::h_plus;
use localh_core::{CartanType, Error};
use serde_json::Value;

use output::{emit, gamma, poly, Format, Kind, OutputRecord};
use verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Defaults for `--max-n`, per enumeration.
const DEFAULT_MAX_N_BARY: usize = 8;
const DEFAULT_MAX_N_NC_A: usize = 10;
const DEFAULT_MAX_N_NC_B: usize = 6;
const DEFAULT_MAX_N_VERIFY: usize = 7;
const DEFAULT_MAX_RANK: usize = 16;
/// Move classes have up to `2^n` members.
const MAX_ORBIT_N: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "localh",
    version,
    about = "Local h-polynomials of cluster and barycentric subdivisions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Upper bound on n for enumerations and the verification suite.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Upper bound on the rank for inclusion-exclusion sweeps.
    #[arg(long, global = true)]
    max_rank: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Local h-polynomial of the cluster subdivision of an irreducible type.
    Cluster {
        #[arg(long = "type", value_name = "T")]
        ty: CartanType,
        /// Also print the local gamma-vector.
        #[arg(long)]
        gamma: bool,
    },
    /// Local h-polynomial of the barycentric subdivision of the (n-1)-simplex.
    Bary {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: bool,
    },
    /// h-polynomial of the positive part of the cluster complex.
    Hplus {
        #[arg(long = "type", value_name = "T")]
        ty: CartanType,
    },
    /// Noncrossing partitions.
    #[command(subcommand)]
    Nc(NcCommand),
    /// Permutation statistics and maps.
    #[command(subcommand)]
    Perm(PermCommand),
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
enum NcCommand {
    /// List noncrossing partitions of type A or B.
    Enumerate {
        #[arg(long, value_enum)]
        kind: NcKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        filter: Option<NcFilter>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NcKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NcFilter {
    NoSingleton,
    NestedSingletons,
    NoZeroBlock,
}

#[derive(Subcommand, Debug)]
enum PermCommand {
    /// Statistics of a permutation in one-line notation.
    Stats { word: String },
    /// Image under phi of a permutation in cycle notation.
    Phi { cycles: String },
    /// Move class of a permutation in E_n.
    Orbit { word: String },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
    Verify,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };

    let computed = match thread_pool() {
        Ok(Some(pool)) => pool.install(|| dispatch(&cli)),
        Ok(None) => dispatch(&cli),
        Err(msg) => Err(Failure::Usage(msg)),
    };
    let result = computed.and_then(|(record, passed)| {
        emit(out, &record, cli.format)?;
        if passed {
            Ok(())
        } else {
            Err(Failure::Verify)
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::BudgetExceeded { .. }) {
                EXIT_BUDGET
            } else {
                EXIT_USAGE
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// A pool sized by `LOCALH_THREADS`, if set.
fn thread_pool() -> Result<Option<rayon::ThreadPool>, String> {
    let Ok(raw) = std::env::var("LOCALH_THREADS") else {
        return Ok(None);
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("LOCALH_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| e.to_string())
}

fn budget(what: &'static str, requested: usize, limit: usize) -> Result<(), Failure> {
    if requested > limit {
        return Err(Error::BudgetExceeded {
            what,
            requested,
            limit,
        }
        .into());
    }
    Ok(())
}

/// Computes the record for `cli`; the flag is false when verification failed.
fn dispatch(cli: &Cli) -> Result<(OutputRecord, bool), Failure> {
    let max_rank = cli.max_rank.unwrap_or(DEFAULT_MAX_RANK);
    let record = match &cli.command {
        Command::Cluster { ty, gamma } => {
            let res = local_h_cluster_with_cap(*ty, max_rank)?;
            local_h_record(&ty.to_string(), &res, *gamma)
        }
        Command::Bary { n, gamma } => {
            let cap = cli.max_n.unwrap_or(DEFAULT_MAX_N_BARY);
            budget("n", *n, cap)?;
            let res = local_h_barycentric_with_cap(*n, cap)?;
            local_h_record(&format!("barycentric {n}"), &res, *gamma)
        }
        Command::Hplus { ty } => OutputRecord::new(Kind::HPlus)
            .with("type", ty.to_string())
            .with("h_plus", poly(&h_plus(*ty)?)),
        Command::Nc(NcCommand::Enumerate { kind, n, filter }) => {
            nc_record(*kind, *n, *filter, cli.max_n)?
        }
        Command::Perm(cmd) => perm_record(cmd)?,
        Command::Verify { suite } => {
            let max_n = cli.max_n.unwrap_or(DEFAULT_MAX_N_VERIFY);
            let report = verify::run_suite(*suite, max_n, max_rank)?;
            return Ok((report.record(*suite, max_n), report.all_passed()));
        }
    };
    Ok((record, true))
}

fn local_h_record(name: &str, res: &LocalHResult, with_gamma: bool) -> OutputRecord {
    let kind = if with_gamma {
        Kind::Gamma
    } else {
        Kind::LocalH
    };
    let record = OutputRecord::new(kind)
        .with("type", name)
        .with("rank", res.rank())
        .with("source", res.source.to_string())
        .with("ell", poly(&res.ell));
    if with_gamma {
        record.with("xi", gamma(&res.xi))
    } else {
        record
    }
}

fn nc_record(
    kind: NcKind,
    n: usize,
    filter: Option<NcFilter>,
    max_n: Option<usize>,
) -> Result<OutputRecord, Failure> {
    let (items, sizes): (Vec<String>, Vec<usize>) = match kind {
        NcKind::A => {
            budget("n", n, max_n.unwrap_or(DEFAULT_MAX_N_NC_A))?;
            if filter == Some(NcFilter::NoZeroBlock) {
                return Err(Failure::Usage(
                    "--filter no-zero-block applies to --kind B only".into(),
                ));
            }
            let mut kept = Vec::new();
            for p in enumerate_nc_a(n)? {
                let keep = match filter {
                    None => true,
                    Some(NcFilter::NoSingleton) => p.singletons().next().is_none(),
                    Some(NcFilter::NestedSingletons) => {
                        let singles: Vec<u32> = p.singletons().collect();
                        singles
                            .into_iter()
                            .all(|b| nested_singleton_a(&p, b) == Ok(true))
                    }
                    Some(NcFilter::NoZeroBlock) => unreachable!("rejected above"),
                };
                if keep {
                    kept.push((p.to_string(), p.block_count()));
                }
            }
            kept.into_iter().unzip()
        }
        NcKind::B => {
            budget("n", n, max_n.unwrap_or(DEFAULT_MAX_N_NC_B))?;
            let mut kept = Vec::new();
            for p in enumerate_nc_b(n)? {
                let has_zero = zero_block(&p).is_some();
                let keep = match filter {
                    None => true,
                    Some(NcFilter::NoZeroBlock) => !has_zero,
                    Some(NcFilter::NoSingleton) => {
                        !has_zero && p.blocks().iter().all(|b| b.len() > 1)
                    }
                    Some(NcFilter::NestedSingletons) => {
                        !has_zero
                            && p.blocks()
                                .iter()
                                .filter(|b| b.len() == 1 && b[0] > 0)
                                .all(|b| nested_singleton_b(&p, b[0]) == Ok(true))
                    }
                };
                if keep {
                    kept.push((p.to_string(), pair_count(&p)));
                }
            }
            kept.into_iter().unzip()
        }
    };
    let mut histogram = vec![0u64; n + 1];
    for s in &sizes {
        histogram[*s] += 1;
    }
    let filter_name = filter
        .and_then(|f| f.to_possible_value())
        .map_or("none".to_string(), |v| v.get_name().to_string());
    let by = if kind == NcKind::A {
        "by_blocks"
    } else {
        "by_pairs"
    };
    Ok(OutputRecord::new(Kind::NcCount)
        .with("kind", if kind == NcKind::A { "A" } else { "B" })
        .with("n", n)
        .with("filter", filter_name)
        .with("count", items.len())
        .with(by, histogram)
        .with("items", items))
}

fn index_list(set: &std::collections::BTreeSet<usize>) -> Value {
    Value::from(set.iter().copied().collect::<Vec<_>>())
}

fn perm_record(cmd: &PermCommand) -> Result<OutputRecord, Failure> {
    Ok(match cmd {
        PermCommand::Stats { word } => {
            let w: Perm = word.parse()?;
            let s = stats(&w);
            OutputRecord::new(Kind::PermCount)
                .with("word", w.to_string())
                .with("n", w.len())
                .with("des", s.descents.len())
                .with("descents", index_list(&s.descents))
                .with("exc", s.excedances.len())
                .with("excedances", index_list(&s.excedances))
                .with("runs", s.runs())
                .with("run_lengths", s.run_lengths.clone())
                .with("double_descents", index_list(&s.double_descents))
                .with("double_excedances", index_list(&s.double_excedances))
                .with("lr_maxima", index_list(&s.lr_maxima))
                .with("fixed_points", index_list(&s.fixed_points))
                .with("derangement", w.is_derangement())
                .with("in_e", is_in_e(&w))
        }
        PermCommand::Phi { cycles } => {
            let w = parse_cycles(cycles)?;
            let standard: String = w
                .standard_cycles()
                .iter()
                .map(|c| {
                    format!(
                        "({})",
                        c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
                    )
                })
                .collect();
            let image = foata_phi(&w);
            OutputRecord::new(Kind::PermCount)
                .with("cycles", standard)
                .with("word", w.to_string())
                .with("phi", image.to_string())
                .with("derangement", w.is_derangement())
                .with("phi_in_e", is_in_e(&image))
        }
        PermCommand::Orbit { word } => {
            let w: Perm = word.parse()?;
            budget("permutation length", w.len(), MAX_ORBIT_N)?;
            let orbit = fss_orbit(&w)?;
            let rep =
                orbit_representative(&orbit).map_or_else(|| "none".to_string(), Perm::to_string);
            OutputRecord::new(Kind::PermCount)
                .with("word", w.to_string())
                .with("size", orbit.len())
                .with("representative", rep)
                .with(
                    "descent_polynomial",
                    poly(&orbit_descent_polynomial(&orbit)),
                )
                .with(
                    "items",
                    orbit.iter().map(Perm::to_string).collect::<Vec<_>>(),
                )
        }
    })
}
