//! `sedf` — construct, verify, profile and search external difference
//! families from the command line.
//!
//! All structured output is JSON on stdout (`--pretty` switches to plain
//! text). Exit status: 0 success, 1 verification-negative, 2 usage error,
//! 3 search budget exhausted. Errors print one line on stderr.

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use sedf::{
    check_optimal_ooc, confirm_lambda1_theorem, convert_to_classical, correlation_profile,
    cross_correlation_lower_bound, enumerate, extend_append_zero, family_to_sequences,
    verify_family, AbelianGroup, BinarySeq, Canonicalization, Construction, Error, Kind,
    SearchTask, SetFamily, TargetKind,
};

use output::{BoundOutput, ProfileOutput, SearchOutput, SpectrumOutput, VerifyOutput};

#[derive(Parser)]
#[command(name = "sedf", version, about = "External difference family toolkit")]
struct Cli {
    /// Render plain-text tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family and write it as a family file.
    Construct {
        name: ConstructionName,
        /// Group order (two-set, two-set-generalized, extend, convert-classical).
        #[arg(long)]
        v: Option<usize>,
        /// Set size (two-set, two-set-generalized, extend, convert-classical).
        #[arg(long)]
        k: Option<usize>,
        /// Number of sets (power-of-two builds in Z_{2^n}).
        #[arg(long)]
        n: Option<u32>,
        /// First period of the second sequence (two-set-generalized).
        #[arg(long)]
        pattern: Option<String>,
        /// Write the family file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a family file against every difference-family kind.
    Verify {
        /// Family file (JSON).
        input: PathBuf,
        /// Exit non-zero unless the family satisfies this kind.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Print every pairwise and per-set union difference spectrum.
    Spectrum {
        /// Family file (JSON).
        input: PathBuf,
    },
    /// Extend the (v, k) two-set family by an appended zero and translate it
    /// to a classical SEDF (possible exactly when k^2 = v).
    Convert {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        /// Write the classical family file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Auto/cross-correlation profile of equal-weight sequences.
    OocProfile {
        /// Family file (*.json) or inline comma-separated bitstrings.
        input: String,
    },
    /// Exhaustively enumerate families of one kind in a small group.
    Search {
        /// Cyclic group order (alternative to --moduli).
        #[arg(long, conflicts_with = "moduli")]
        v: Option<usize>,
        /// Direct-product moduli, e.g. 2,4.
        #[arg(long, value_delimiter = ',')]
        moduli: Option<Vec<usize>>,
        /// Number of sets.
        #[arg(long)]
        m: usize,
        /// Set size.
        #[arg(long)]
        k: usize,
        /// Family kind: PSEDF, nondisjoint-SEDF or classical-SEDF.
        #[arg(long)]
        kind: String,
        /// Symmetry reduction of the output.
        #[arg(long, value_enum, default_value_t = CanonicalChoice::TranslationReduced)]
        canonical: CanonicalChoice,
        /// Stop after this many families.
        #[arg(long)]
        limit: Option<usize>,
        /// Node-visit budget.
        #[arg(long, default_value_t = sedf::search::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustively confirm that lambda = 1 non-disjoint SEDFs exist exactly
    /// for m = 2 in square-order groups, for all v up to --v-max.
    Confirm {
        #[arg(long = "v-max")]
        v_max: usize,
        /// Node-visit budget.
        #[arg(long, default_value_t = sedf::search::DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionName {
    #[value(name = "two-set")]
    TwoSet,
    #[value(name = "two-set-generalized")]
    TwoSetGeneralized,
    #[value(name = "power-of-two")]
    PowerOfTwo,
    #[value(name = "extend")]
    Extend,
    #[value(name = "convert-classical")]
    ConvertClassical,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CanonicalChoice {
    #[value(name = "none")]
    None,
    #[value(name = "translation-reduced")]
    TranslationReduced,
}

/// Failures carrying their exit status.
enum Failure {
    /// Bad flags or malformed/invalid input: exit 2.
    Usage(String),
    /// The object does not have the asserted property: exit 1.
    Negative(String),
    /// Search budget ran out before the space was covered: exit 3.
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::LambdaObstruction(_) => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Negative(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::Budget(m) => (3, m),
            };
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Construct {
            name,
            v,
            k,
            n,
            pattern,
            out,
        } => {
            let construction = build_request(name, v, k, n, pattern)?;
            let family = construction.build()?;
            emit_family(&family, out.as_deref(), cli.pretty)
        }
        Command::Verify { input, kind } => {
            let asserted = kind.map(|s| parse_positive_kind(&s)).transpose()?;
            let family = read_family(&input)?;
            let report = verify_family(&family);
            let view = VerifyOutput::from_report(&report);
            if cli.pretty {
                println!("{}", view.pretty());
            } else {
                println!("{}", to_json(&view));
            }
            let satisfied = match asserted {
                Some(kind) => report.lambda_for(kind).is_some(),
                None => report.kind != Kind::None,
            };
            if satisfied {
                Ok(())
            } else {
                Err(Failure::Negative(format!(
                    "family is not a {}",
                    asserted.unwrap_or(report.kind)
                )))
            }
        }
        Command::Spectrum { input } => {
            let family = read_family(&input)?;
            let report = verify_family(&family);
            let view = SpectrumOutput::from_report(&report);
            if cli.pretty {
                println!("{}", view.pretty());
            } else {
                println!("{}", to_json(&view));
            }
            Ok(())
        }
        Command::Convert { v, k, out } => {
            let two_set = Construction::TwoSet { v, k }.build()?;
            let (extended, _claim) = extend_append_zero(&two_set)?;
            let classical = convert_to_classical(&two_set)?;
            debug_assert_eq!(extended.order(), classical.order());
            emit_family(&classical, out.as_deref(), cli.pretty)
        }
        Command::OocProfile { input } => {
            let seqs = read_sequences(&input)?;
            let profile = correlation_profile(&seqs)?;
            let (exact, ceil) = cross_correlation_lower_bound(profile.length, profile.weight)?;
            let optimal = seqs.len() >= 2 && check_optimal_ooc(&seqs)?.optimal;
            let view = ProfileOutput {
                v: profile.length,
                w: profile.weight,
                n: profile.size,
                max_auto: profile.max_auto,
                max_cross: profile.max_cross,
                bound: BoundOutput {
                    exact: exact.to_string(),
                    ceil,
                },
                optimal,
            };
            if cli.pretty {
                println!("{}", view.pretty());
            } else {
                println!("{}", to_json(&view));
            }
            Ok(())
        }
        Command::Search {
            v,
            moduli,
            m,
            k,
            kind,
            canonical,
            limit,
            budget,
        } => {
            let moduli = match (v, moduli) {
                (Some(v), None) => vec![v],
                (None, Some(moduli)) => moduli,
                _ => {
                    return Err(Failure::Usage(
                        "exactly one of --v and --moduli is required".into(),
                    ))
                }
            };
            let group = AbelianGroup::new(moduli)?;
            let mut task = SearchTask::new(group, m, k, TargetKind::from_str(&kind)?);
            task.canonicalization = match canonical {
                CanonicalChoice::None => Canonicalization::None,
                CanonicalChoice::TranslationReduced => Canonicalization::TranslationReduced,
            };
            task.limit = limit;
            task.budget = budget;
            let result = enumerate(&task);
            let view = SearchOutput {
                families: result.families,
                exhausted: result.exhausted,
                nodes: result.nodes_visited,
            };
            if cli.pretty {
                println!("{}", view.pretty());
            } else {
                println!("{}", to_json(&view));
            }
            if result.budget_exhausted {
                Err(Failure::Budget("search budget exhausted".into()))
            } else {
                Ok(())
            }
        }
        Command::Confirm { v_max, budget } => {
            let report = confirm_lambda1_theorem(v_max, budget);
            if cli.pretty {
                println!(
                    "v_max: {}  complete: {}  violations: {}  nodes: {}",
                    report.v_max, report.complete, report.violations, report.nodes_visited
                );
                for c in &report.entries {
                    println!(
                        "v={:<3} m={:<3} k={:<2} exists={:<5} predicted={}",
                        c.v, c.m, c.k, c.exists, c.predicted
                    );
                }
            } else {
                println!("{}", to_json(&report));
            }
            if !report.complete {
                Err(Failure::Budget("confirmation budget exhausted".into()))
            } else if report.violations > 0 {
                Err(Failure::Negative(format!(
                    "{} parameter set(s) contradict the classification",
                    report.violations
                )))
            } else {
                Ok(())
            }
        }
    }
}

fn build_request(
    name: ConstructionName,
    v: Option<usize>,
    k: Option<usize>,
    n: Option<u32>,
    pattern: Option<String>,
) -> Result<Construction, Failure> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this construction")))
    };
    Ok(match name {
        ConstructionName::TwoSet => Construction::TwoSet {
            v: need(v, "v")?,
            k: need(k, "k")?,
        },
        ConstructionName::TwoSetGeneralized => {
            let pattern = pattern
                .ok_or_else(|| Failure::Usage("--pattern is required for this construction".into()))?;
            Construction::TwoSetGeneralized {
                v: need(v, "v")?,
                k: need(k, "k")?,
                first_period: BinarySeq::from_str(&pattern)?,
            }
        }
        ConstructionName::PowerOfTwo => Construction::PowerOfTwo {
            n: n.ok_or_else(|| Failure::Usage("--n is required for this construction".into()))?,
        },
        ConstructionName::Extend => Construction::Extend {
            v: need(v, "v")?,
            k: need(k, "k")?,
        },
        ConstructionName::ConvertClassical => Construction::ConvertClassical {
            v: need(v, "v")?,
            k: need(k, "k")?,
        },
    })
}

fn parse_positive_kind(s: &str) -> Result<Kind, Failure> {
    let kind = Kind::from_str(s)?;
    if kind == Kind::None {
        return Err(Failure::Usage("cannot assert the kind \"none\"".into()));
    }
    Ok(kind)
}

fn read_family(path: &Path) -> Result<SetFamily, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("invalid family file {}: {e}", path.display())))
}

fn read_sequences(input: &str) -> Result<Vec<BinarySeq>, Failure> {
    if input.ends_with(".json") {
        let family = read_family(Path::new(input))?;
        Ok(family_to_sequences(&family)?)
    } else {
        input
            .split(',')
            .map(|s| BinarySeq::from_str(s.trim()).map_err(Failure::from))
            .collect()
    }
}

fn emit_family(family: &SetFamily, out: Option<&Path>, pretty: bool) -> Result<(), Failure> {
    let json = to_json(family);
    match out {
        Some(path) => fs::write(path, json + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            if pretty {
                println!("{}", output::pretty_family(family));
            } else {
                println!("{json}");
            }
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output structs serialize")
}
