//! Monte-Carlo experiment harness: determinism and chain-distinctness
//! rates of a rule over random profiles, per electorate size.

use crate::error::Result;
use crate::majority::MajorityType;
use crate::random::{random_profile, PreferenceClass};
use crate::ratio::Ratio;
use crate::rng::derive_seed;
use crate::rules::{evaluate, RuleSpec};

/// A simulation plan: rule, profile class, universe size, electorate
/// sizes, trials per size, and the master seed.
#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub rule: RuleSpec,
    pub class: PreferenceClass,
    pub m: usize,
    pub n_values: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
}

/// Aggregates for one electorate size.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub n: usize,
    pub trials: usize,
    pub determinism_rate: f64,
    pub mean_choice_size: f64,
    pub chain_distinct_rate: f64,
    /// Trials where chain distinctness held but the choice was not a
    /// singleton; always zero for the single-direction families.
    pub implication_violations: usize,
    /// Trials whose rule evaluation failed (counted, not fatal).
    pub errors: usize,
}

/// One trial outcome, for the optional raw log.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub n: usize,
    pub index: usize,
    pub seed: u64,
    pub choice_size: usize,
    pub chain_distinct: bool,
}

#[derive(Clone, Debug)]
pub struct ExperimentResult {
    pub rows: Vec<ExperimentRow>,
    pub trials: Vec<TrialRecord>,
}

/// Whether the type separates every unordered pair at its own strength
/// in the majority band: each pair must hold in exactly one direction
/// somewhere above one half, and the resulting C(m,2) drop-out strengths
/// must be pairwise distinct. The band's relations are then the prefixes
/// of one arc-weighted tournament, each level losing exactly one arc,
/// and the band rule chooses deterministically.
pub fn chain_distinct(kind: MajorityType, profile: &crate::profile::Profile) -> Result<bool> {
    let s = profile.alternatives();
    let t = profile.counts();
    let ds = crate::profile::d_of_set(profile, &s)?;
    let in_band = |c: Ratio| c > Ratio::HALF && c <= Ratio::ONE;
    let members: Vec<usize> = s.iter().collect();
    let mut seen: Vec<Ratio> = Vec::new();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            let fwd = crate::majority::threshold_from_tally(kind, t, ds, x, y)
                .filter(|&c| in_band(c));
            let bwd = crate::majority::threshold_from_tally(kind, t, ds, y, x)
                .filter(|&c| in_band(c));
            let c = match (fwd, bwd) {
                (Some(c), None) | (None, Some(c)) => c,
                _ => return Ok(false),
            };
            if seen.contains(&c) {
                return Ok(false);
            }
            seen.push(c);
        }
    }
    Ok(true)
}

/// Runs the experiment: for each electorate size, draws seeded profiles,
/// evaluates the rule on the full alternative set, and aggregates.
/// Trial seeds derive from (seed, n, index), so results do not depend on
/// scheduling.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult> {
    let mut rows = Vec::new();
    let mut log = Vec::new();
    let first_segment = spec
        .rule
        .chain
        .segments
        .first()
        .ok_or_else(|| crate::error::Error::RuleSyntax("chain has no segments".into()))?;
    let kind = first_segment.kind;
    if spec.trials == 0 {
        return Err(crate::error::Error::RuleSyntax("trials must be at least 1".into()));
    }
    if spec.n_values.contains(&0) {
        return Err(crate::error::Error::RuleSyntax(
            "electorate sizes must be positive".into(),
        ));
    }
    // the per-trial implication is asserted only for the plain
    // single-direction rules over the majority band
    let qualifies = spec.rule.modifiers.is_empty()
        && spec.rule.chain.segments.len() == 1
        && spec.rule.chain.augments.is_empty()
        && first_segment.lo == Ratio::HALF
        && first_segment.hi.ratio() == Ratio::ONE
        && matches!(
            kind,
            MajorityType::R | MajorityType::P | MajorityType::E | MajorityType::D
        );
    for &n in &spec.n_values {
        let mut deterministic = 0usize;
        let mut size_sum = 0usize;
        let mut distinct_count = 0usize;
        let mut violations = 0usize;
        let mut errors = 0usize;
        let mut ok_trials = 0usize;
        for index in 0..spec.trials {
            let trial_seed = derive_seed(spec.seed, n as u64, index as u64);
            let profile = random_profile(trial_seed, spec.m, n, spec.class)?;
            let distinct = chain_distinct(kind, &profile)?;
            match evaluate(&spec.rule, &profile.alternatives(), &profile, false) {
                Ok(result) => {
                    let size = result.chosen.len();
                    ok_trials += 1;
                    size_sum += size;
                    if size == 1 {
                        deterministic += 1;
                    }
                    if distinct {
                        distinct_count += 1;
                        if qualifies && size != 1 {
                            violations += 1;
                        }
                    }
                    log.push(TrialRecord {
                        n,
                        index,
                        seed: trial_seed,
                        choice_size: size,
                        chain_distinct: distinct,
                    });
                }
                Err(_) => {
                    errors += 1;
                }
            }
        }
        let denom = spec.trials.max(1) as f64;
        rows.push(ExperimentRow {
            n,
            trials: spec.trials,
            determinism_rate: deterministic as f64 / denom,
            mean_choice_size: if ok_trials > 0 {
                size_sum as f64 / ok_trials as f64
            } else {
                0.0
            },
            chain_distinct_rate: distinct_count as f64 / denom,
            implication_violations: violations,
            errors,
        });
    }
    Ok(ExperimentResult { rows, trials: log })
}

/// CSV rendering: a fixed header and one row per electorate size, rates
/// with six decimals.
pub fn write_csv(result: &ExperimentResult) -> String {
    let mut out = String::from("n,trials,determinism_rate,mean_choice_size,chain_distinct_rate\n");
    for row in &result.rows {
        out.push_str(&format!(
            "{},{},{:.6},{:.6},{:.6}\n",
            row.n, row.trials, row.determinism_rate, row.mean_choice_size, row.chain_distinct_rate
        ));
    }
    out
}

/// One line per trial: seed, choice size, distinctness flag.
pub fn write_trial_log(result: &ExperimentResult) -> String {
    let mut out = String::new();
    for t in &result.trials {
        out.push_str(&format!(
            "n={} trial={} seed={} choice_size={} chain_distinct={}\n",
            t.n, t.index, t.seed, t.choice_size, t.chain_distinct
        ));
    }
    out
}
