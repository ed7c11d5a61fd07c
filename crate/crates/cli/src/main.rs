//! Command-line front end: rule evaluation, axiom checking, component
//! analysis, chain inspection, inclusion reports, and simulation.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use relchoice::prelude::*;

enum CliError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Io(e)
    }
}

#[derive(Parser)]
#[command(
    name = "relchoice",
    about = "Majority/minority-based social choice over arbitrary reflexive preference profiles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ProfileArg {
    /// Profile file (see the README for the format)
    #[arg(long)]
    profile: String,
    /// Restrict to these alternatives, comma-separated (default: all)
    #[arg(long)]
    set: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a rule on a profile and print the chosen alternatives
    Choose {
        /// Rule spec, e.g. `D(0.5,1]+N1+M1^C^GC^CC^Id`
        #[arg(long)]
        rule: String,
        #[command(flatten)]
        profile: ProfileArg,
        /// Also print the intermediate set after each evaluation stage
        #[arg(long)]
        trace: bool,
    },
    /// Check axioms against a rule and profile, one report line each
    Axioms {
        #[arg(long)]
        rule: String,
        #[command(flatten)]
        profile: ProfileArg,
        /// Comma-separated axiom ids (default: every supported check)
        #[arg(long)]
        axioms: Option<String>,
        /// Exhaustive quantifier bound on the number of alternatives
        #[arg(long, default_value_t = 5)]
        scope: usize,
        /// Seed for sampled quantifier scopes
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// List the minimal proper components of a profile
    Components {
        #[command(flatten)]
        profile: ProfileArg,
        /// Print the component closure of this pair, e.g. `a,b`
        #[arg(long)]
        pair: Option<String>,
    },
    /// Show the materialized chain members of a rule on a profile
    Chain {
        #[arg(long)]
        rule: String,
        #[command(flatten)]
        profile: ProfileArg,
    },
    /// Check the inclusion lattice of the ten families at one strength
    Inclusions {
        #[command(flatten)]
        profile: ProfileArg,
        /// Strength, decimal or fraction (`0.6`, `4/7`)
        #[arg(long)]
        alpha: String,
    },
    /// Run a Monte-Carlo experiment and print CSV
    Simulate {
        #[arg(long)]
        rule: String,
        /// Profile class: arbitrary-reflexive, linear-order,
        /// total-quasi-order, partial-order, quasi-order, tournament-like
        #[arg(long, default_value = "linear-order")]
        class: String,
        /// Number of alternatives
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Electorate sizes, comma-separated
        #[arg(long, default_value = "5,25,125")]
        n: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1848)]
        seed: u64,
        /// Write the raw per-trial log to this file
        #[arg(long)]
        trial_log: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        // a closed downstream pipe is a normal way to stop reading
        (Err(CliError::Io(e)), _) | (_, Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => {
            ExitCode::SUCCESS
        }
        (Ok(code), Ok(())) => code,
        (Err(CliError::Domain(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (Err(CliError::Io(e)), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load_profile(arg: &ProfileArg) -> Result<(Profile, AltSet)> {
    let text = fs::read_to_string(&arg.profile).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", arg.profile),
    })?;
    let profile = parse_profile(&text)?;
    let set = match &arg.set {
        None => profile.alternatives(),
        Some(labels) => {
            let labels: Vec<&str> = labels.split(',').map(str::trim).collect();
            AltSet::from_labels(profile.universe(), &labels)?
        }
    };
    Ok((profile, set))
}

fn run(cli: Cli, out: &mut impl Write) -> std::result::Result<ExitCode, CliError> {
    match cli.command {
        Command::Choose {
            rule,
            profile,
            trace,
        } => {
            let spec: RuleSpec = rule.parse()?;
            let (profile, set) = load_profile(&profile)?;
            let result = evaluate(&spec, &set, &profile, trace)?;
            if let Some(steps) = &result.trace {
                for step in steps {
                    writeln!(out, "stage {} -> {}", step.stage, step.detail)?;
                }
            }
            for label in result.chosen.sorted_labels() {
                writeln!(out, "{label}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Axioms {
            rule,
            profile,
            axioms,
            scope,
            seed,
        } => {
            let spec: RuleSpec = rule.parse()?;
            let (profile, set) = load_profile(&profile)?;
            let scope = CheckScope {
                exhaustive_m: scope,
                exhaustive_n: scope.min(6),
                samples: 200,
                seed,
            };
            let ids: Vec<String> = match axioms {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => ALL_AXIOM_IDS.iter().map(|s| s.to_string()).collect(),
            };
            for id in &ids {
                if !ALL_AXIOM_IDS.contains(&id.as_str()) {
                    eprintln!("error: unknown axiom id `{id}`");
                    return Ok(ExitCode::from(2));
                }
            }
            for id in &ids {
                for report in run_axiom(id, &spec, &profile, &set, &scope)? {
                    writeln!(out, "{report}")?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Components { profile, pair } => {
            let (profile, set) = load_profile(&profile)?;
            if let Some(pair) = pair {
                let (x, y) = pair
                    .split_once(',')
                    .ok_or_else(|| Error::RuleSyntax(format!("bad pair `{pair}`")))?;
                let xi = profile.universe().index_of(x.trim())?;
                let yi = profile.universe().index_of(y.trim())?;
                let closure = smallest_component(xi, yi, &set, &profile)?;
                writeln!(out, "{closure}")?;
                return Ok(ExitCode::SUCCESS);
            }
            let components = proper_components(&set, &profile);
            // keep only the minimal ones
            let minimal: Vec<&AltSet> = components
                .iter()
                .filter(|b| {
                    !components
                        .iter()
                        .any(|other| other != *b && other.is_subset_of(b))
                })
                .collect();
            if minimal.is_empty() {
                writeln!(out, "none")?;
            } else {
                for b in minimal {
                    writeln!(out, "{b}")?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chain { rule, profile } => {
            let spec: RuleSpec = rule.parse()?;
            let (profile, set) = load_profile(&profile)?;
            let built = build_chain(&spec.chain, &set, &profile)?;
            for member in built.members() {
                writeln!(
                    out,
                    "{} raw{{{}}} hull_pairs={}",
                    member.label(),
                    member.raw.describe(),
                    member.hull.pair_count()
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Inclusions { profile, alpha } => {
            let (profile, set) = load_profile(&profile)?;
            let alpha: Strength = alpha.parse()?;
            let report = verify_inclusions(&profile, &set, alpha)?;
            for check in &report.checks {
                writeln!(
                    out,
                    "inclusion={} holds={} witness={}",
                    check.name,
                    check.holds,
                    check.witness.as_deref().unwrap_or("-")
                )?;
            }
            // like axiom reports, a failed inclusion is data, not an error
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate {
            rule,
            class,
            m,
            n,
            trials,
            seed,
            trial_log,
        } => {
            let spec = ExperimentSpec {
                rule: rule.parse()?,
                class: class.parse()?,
                m,
                n_values: n
                    .split(',')
                    .map(|v| {
                        v.trim().parse::<usize>().map_err(|_| {
                            Error::RuleSyntax(format!("bad electorate size `{v}`"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
                trials,
                seed,
            };
            let result = run_experiment(&spec)?;
            write!(out, "{}", write_csv(&result))?;
            if let Some(path) = trial_log {
                fs::write(&path, write_trial_log(&result)).map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("cannot write {path}: {e}"),
                })?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

const ALL_AXIOM_IDS: [&str; 21] = [
    "I", "Iso", "C", "GC", "Id", "CA", "beta", "SUA", "CC", "wP", "sP", "sP'", "NNP", "sNNR",
    "PR", "wIm", "Im", "sIm", "d_P", "d_R", "d_M",
];

fn run_axiom(
    id: &str,
    spec: &RuleSpec,
    profile: &Profile,
    set: &AltSet,
    scope: &CheckScope,
) -> Result<Vec<AxiomReport>> {
    let consistency = |axiom| check_choice_consistency(axiom, spec, profile, scope);
    let report = match id {
        "I" => consistency(ConsistencyAxiom::I)?,
        "Iso" => consistency(ConsistencyAxiom::Iso)?,
        "C" => consistency(ConsistencyAxiom::C)?,
        "GC" => consistency(ConsistencyAxiom::Gc)?,
        "Id" => consistency(ConsistencyAxiom::Id)?,
        "CA" => consistency(ConsistencyAxiom::Ca)?,
        "beta" => consistency(ConsistencyAxiom::Beta)?,
        "SUA" => consistency(ConsistencyAxiom::Sua)?,
        "CC" => consistency(ConsistencyAxiom::Cc)?,
        "wP" => check_pareto(ParetoVariant::Weak, spec, set, profile)?,
        "sP" => check_pareto(ParetoVariant::Strong, spec, set, profile)?,
        "sP'" => check_pareto(ParetoVariant::StrongPrime, spec, set, profile)?,
        "NNP" => check_pareto(ParetoVariant::NonNegative, spec, set, profile)?,
        "sNNR" => check_snnr(spec, set, profile, &enumerate_steps(profile))?,
        "PR" => check_pr(spec, set, profile, &enumerate_steps(profile))?,
        "d_P" => check_triangle(profile, Metric::Dp)?,
        "d_R" => check_triangle(profile, Metric::Dr)?,
        "d_M" => check_triangle(profile, Metric::Dm)?,
        "wIm" | "Im" | "sIm" => {
            let level = match id {
                "wIm" => ImmunityLevel::Weak,
                "Im" => ImmunityLevel::Plain,
                _ => ImmunityLevel::Strong,
            };
            let built = build_chain(&spec.chain, set, profile)?;
            let mut reports = Vec::new();
            for member in built.members() {
                let mut report = check_immunity(level, spec, &member.raw, set, profile)?;
                report.axiom = format!("{}[{}]", id, member.label());
                reports.push(report);
            }
            return Ok(reports);
        }
        _ => unreachable!("ids validated by the caller"),
    };
    Ok(vec![report])
}
