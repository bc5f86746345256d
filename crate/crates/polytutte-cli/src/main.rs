//! Command-line front end: loads an instance (JSON file, JSON literal, or
//! inline constructor string), runs one subcommand, and reports through the
//! exit code — 0 for success and passing checks, 1 when a requested check
//! fails, 2 for invalid input.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use polytutte::activity::activity_records;
use polytutte::error::Error;
use polytutte::io::load_instance;
use polytutte::point::Permutation;
use polytutte::polymatroid::Polymatroid;
use polytutte::rank::RankFunction;
use polytutte::tutte::{
    classical_tutte_activity, classical_tutte_corank_nullity, correspondence_check,
    default_invariance_permutations, polymatroid_tutte, series_equivalence_check,
    truncated_tilde_series,
};
use polytutte::verify::{fiber_identity_check, lemma_property_suite};

#[derive(Parser)]
#[command(
    name = "polytutte",
    version,
    about = "Exact Tutte polynomials of integer polymatroids, with verification checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArg {
    /// Instance: JSON file path, JSON literal, "uniform:d,n", or
    /// "coverage:seed,n,ground,parts,maxw"
    #[arg(short = 'i', long = "instance")]
    instance: String,
}

impl InstanceArg {
    fn rank(&self) -> Result<RankFunction, Error> {
        load_instance(&self.instance)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every basis in ascending order, one vector per line
    Bases(InstanceArg),
    /// Per-basis active index sets and (oi, oe, ie) count triples
    Activities(InstanceArg),
    /// The Tutte polynomial of the polymatroid
    Tutte {
        #[command(flatten)]
        instance: InstanceArg,
        /// Emit JSON terms instead of canonical text
        #[arg(long)]
        json: bool,
    },
    /// The classical Tutte polynomial of a matroid, via basis activities
    Classical {
        #[command(flatten)]
        instance: InstanceArg,
        /// Also print the subset-expansion oracle and AGREE/DISAGREE
        #[arg(long)]
        oracle: bool,
    },
    /// Distance generating series, truncated beyond a total degree
    Series {
        #[command(flatten)]
        instance: InstanceArg,
        /// Largest total degree kept
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Run verification checks; one PASS/FAIL line per check
    Verify {
        #[command(flatten)]
        instance: InstanceArg,
        /// Comma-separated checks to run
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "sn,fibers,lemmas,series,correspondence"
        )]
        checks: Vec<CheckName>,
        /// Truncation degree for the series check
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Compare against every permutation, not just the default set
        #[arg(long)]
        all_perms: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    /// Invariance of the polynomial under coordinate relabelings
    Sn,
    /// Per-fiber summand identities under adjacent swaps
    Fibers,
    /// Exhaustive exchange, tight-set, and swap-activity properties
    Lemmas,
    /// Truncated distance series against the transformed polynomial
    Series,
    /// Classical Tutte correspondence on matroid instances
    Correspondence,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one subcommand; `Ok(true)` means success / all checks passed.
fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Bases(arg) => {
            let p = Polymatroid::from_rank(arg.rank()?);
            for b in p.bases() {
                println!("{b}");
            }
            Ok(true)
        }
        Command::Activities(arg) => {
            let p = Polymatroid::from_rank(arg.rank()?);
            for r in activity_records(&p)? {
                println!(
                    "{}: internal {}, external {}, (oi, oe, ie) = ({}, {}, {})",
                    r.basis,
                    r.internal,
                    r.external,
                    r.only_internal(),
                    r.only_external(),
                    r.both()
                );
            }
            Ok(true)
        }
        Command::Tutte { instance, json } => {
            let p = Polymatroid::from_rank(instance.rank()?);
            let t = polymatroid_tutte::<BigInt>(&p);
            if json {
                println!("{}", t.to_json());
            } else {
                println!("{t}");
            }
            Ok(true)
        }
        Command::Classical { instance, oracle } => {
            let rank = instance.rank()?;
            let by_activity = classical_tutte_activity::<BigInt>(&rank)?;
            println!("{by_activity}");
            if oracle {
                let by_subsets = classical_tutte_corank_nullity::<BigInt>(&rank)?;
                println!("{by_subsets}");
                let agree = by_activity == by_subsets;
                println!("{}", if agree { "AGREE" } else { "DISAGREE" });
                return Ok(agree);
            }
            Ok(true)
        }
        Command::Series { instance, degree } => {
            let p = Polymatroid::from_rank(instance.rank()?);
            let series = truncated_tilde_series::<BigInt>(&p, degree)?;
            println!("{series}");
            Ok(true)
        }
        Command::Verify {
            instance,
            checks,
            degree,
            all_perms,
        } => {
            let rank = instance.rank()?;
            let p = Polymatroid::from_rank(rank.clone());
            let mut all_passed = true;
            let mut done: Vec<CheckName> = Vec::new();
            for check in checks {
                if done.contains(&check) {
                    continue;
                }
                done.push(check);
                let passed = match check {
                    CheckName::Sn => check_sn(&p, all_perms),
                    CheckName::Fibers => check_fibers(&p)?,
                    CheckName::Lemmas => check_lemmas(&p),
                    CheckName::Series => check_series(&p, degree)?,
                    CheckName::Correspondence => check_correspondence(&rank)?,
                };
                all_passed &= passed;
            }
            Ok(all_passed)
        }
    }
}

fn report(name: &str, failure: Option<String>) -> bool {
    match failure {
        None => {
            println!("{name}: PASS");
            true
        }
        Some(witness) => {
            println!("{name}: FAIL ({witness})");
            false
        }
    }
}

fn check_sn(p: &Polymatroid, all_perms: bool) -> bool {
    let perms = if all_perms {
        Permutation::all(p.n())
    } else {
        default_invariance_permutations(p.n())
    };
    let reference = polymatroid_tutte::<BigInt>(p);
    let failure = perms.iter().find_map(|w| {
        let permuted = p.permuted(w).expect("permutation dimension matches");
        if polymatroid_tutte::<BigInt>(&permuted) == reference {
            None
        } else {
            Some(format!("relabeling {w} changes the polynomial"))
        }
    });
    report("sn", failure)
}

fn check_fibers(p: &Polymatroid) -> Result<bool, Error> {
    let mut failure = None;
    'outer: for h in 0..p.n().saturating_sub(1) {
        for r in fiber_identity_check(p, h)? {
            if !(r.holds && r.interior_match) {
                failure = Some(format!(
                    "pivot {}, fiber through {}: summand identity broken",
                    h + 1,
                    r.fiber.first()
                ));
                break 'outer;
            }
        }
    }
    Ok(report("fibers", failure))
}

fn check_lemmas(p: &Polymatroid) -> bool {
    let suite = lemma_property_suite(p);
    let failure = suite.failures().first().map(|c| c.to_string());
    report("lemmas", failure)
}

fn check_series(p: &Polymatroid, degree: u32) -> Result<bool, Error> {
    let failure = if series_equivalence_check(p, degree)? {
        None
    } else {
        Some(format!(
            "lattice series and transformed polynomial differ at total degree <= {degree}"
        ))
    };
    Ok(report("series", failure))
}

fn check_correspondence(rank: &RankFunction) -> Result<bool, Error> {
    if !rank.is_matroid_rank() {
        println!("correspondence: SKIP (rank table is not a matroid rank function)");
        return Ok(true);
    }
    let identity = correspondence_check(rank)?;
    let routes_agree = classical_tutte_activity::<BigInt>(rank)?
        == classical_tutte_corank_nullity::<BigInt>(rank)?;
    let failure = if let Some((x, y)) = identity.failure {
        Some(format!("identity fails at sample point ({x}, {y})"))
    } else if identity.sample_count < 25 {
        Some(format!("only {} sample points", identity.sample_count))
    } else if !routes_agree {
        Some("activity and subset-expansion routes disagree".to_string())
    } else {
        None
    };
    Ok(report("correspondence", failure))
}
