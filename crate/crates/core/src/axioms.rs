//! Decision procedures for the axioms: immunity from binary arguments,
//! Pareto variants, responsiveness, choice-consistency conditions, the
//! pairwise ratio functions, and the pairwise distance triangle checks.
//!
//! Every checker returns an [`AxiomReport`]; a failing verdict always
//! carries a witness that reproduces the failure from the cited inputs.

use std::fmt;

use crate::error::{Error, Result};
use crate::majority::{critical_strengths, majority_relation, MajorityType};
use crate::profile::{
    apply_isomorphism, apply_perturbation, Profile, PerturbationStep,
};
use crate::ratio::{Ratio, Strength};
use crate::relation::{AltSet, Relation};
use crate::rng::Rng;
use crate::rules::{ChoiceRule, RuleSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "na",
        })
    }
}

/// Outcome of one axiom check. Serializes to a single line:
/// `axiom=<id> verdict=<pass|fail|na> scope=<desc> witness=<...>`.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub axiom: String,
    pub verdict: Verdict,
    pub scope: String,
    pub witness: Option<String>,
}

impl AxiomReport {
    fn pass(axiom: impl Into<String>, scope: impl Into<String>) -> AxiomReport {
        AxiomReport {
            axiom: axiom.into(),
            verdict: Verdict::Pass,
            scope: scope.into(),
            witness: None,
        }
    }

    fn fail(
        axiom: impl Into<String>,
        scope: impl Into<String>,
        witness: String,
    ) -> AxiomReport {
        AxiomReport {
            axiom: axiom.into(),
            verdict: Verdict::Fail,
            scope: scope.into(),
            witness: Some(witness),
        }
    }

    fn not_applicable(
        axiom: impl Into<String>,
        scope: impl Into<String>,
        reason: String,
    ) -> AxiomReport {
        AxiomReport {
            axiom: axiom.into(),
            verdict: Verdict::NotApplicable,
            scope: scope.into(),
            witness: Some(reason),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axiom={} verdict={} scope={} witness={}",
            self.axiom,
            self.verdict,
            self.scope,
            self.witness.as_deref().unwrap_or("-")
        )
    }
}

/// How immune a chosen alternative must be to a binary argument against
/// it: answered by one counter-argument, by a path of counter-arguments,
/// or by hull-optimality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImmunityLevel {
    Weak,
    Plain,
    Strong,
}

impl ImmunityLevel {
    pub fn id(&self) -> &'static str {
        match self {
            ImmunityLevel::Weak => "wIm",
            ImmunityLevel::Plain => "Im",
            ImmunityLevel::Strong => "sIm",
        }
    }
}

/// Checks immunity of the rule's choice from arguments encoded in the
/// concrete relation `a` (typically a majority relation).
pub fn check_immunity(
    level: ImmunityLevel,
    rule: &dyn ChoiceRule,
    a: &Relation,
    s: &AltSet,
    profile: &Profile,
) -> Result<AxiomReport> {
    let chosen = rule.choose(s, profile)?;
    let hull = a.transitive_hull(s)?;
    let scope = format!("set={}", s);
    let label = |i: usize| s.universe().label(i);
    for x in chosen.iter() {
        for y in s.iter() {
            if x == y {
                continue;
            }
            match level {
                ImmunityLevel::Weak => {
                    if a.has(y, x) {
                        let answered = s
                            .iter()
                            .any(|z| z != y && a.has(z, y));
                        if !answered {
                            return Ok(AxiomReport::fail(
                                level.id(),
                                scope,
                                format!(
                                    "chosen {} attacked by {} with no counter-argument",
                                    label(x),
                                    label(y)
                                ),
                            ));
                        }
                    }
                }
                ImmunityLevel::Plain => {
                    if a.has(y, x) && !hull.has(x, y) {
                        return Ok(AxiomReport::fail(
                            level.id(),
                            scope,
                            format!(
                                "chosen {} attacked by {} with no argument path back",
                                label(x),
                                label(y)
                            ),
                        ));
                    }
                }
                ImmunityLevel::Strong => {
                    if hull.has(y, x) && !hull.has(x, y) {
                        return Ok(AxiomReport::fail(
                            level.id(),
                            scope,
                            format!("chosen {} is not hull-optimal (beaten by {})", label(x), label(y)),
                        ));
                    }
                }
            }
        }
    }
    Ok(AxiomReport::pass(level.id(), scope))
}

/// The Pareto-style exclusion/inclusion conditions, phrased with the
/// unanimity relations so that cyclic unanimities never force an empty
/// choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParetoVariant {
    /// Unanimous strict preference excludes, unless answered by a path.
    Weak,
    /// Unanimous weak preference excludes, unless answered by a path.
    Strong,
    /// Unanimous strict preference among the decided excludes, unless
    /// answered by a path.
    StrongPrime,
    /// Whatever is unanimously at least as good as something chosen is
    /// chosen too.
    NonNegative,
}

impl ParetoVariant {
    pub fn id(&self) -> &'static str {
        match self {
            ParetoVariant::Weak => "wP",
            ParetoVariant::Strong => "sP",
            ParetoVariant::StrongPrime => "sP'",
            ParetoVariant::NonNegative => "NNP",
        }
    }
}

pub fn check_pareto(
    variant: ParetoVariant,
    rule: &dyn ChoiceRule,
    s: &AltSet,
    profile: &Profile,
) -> Result<AxiomReport> {
    let chosen = rule.choose(s, profile)?;
    let scope = format!("set={}", s);
    let label = |i: usize| s.universe().label(i);
    let unanimity_kind = match variant {
        ParetoVariant::Weak => MajorityType::M,
        ParetoVariant::Strong | ParetoVariant::NonNegative => MajorityType::N,
        ParetoVariant::StrongPrime => MajorityType::B,
    };
    let unanimous = majority_relation(unanimity_kind, Strength::ONE, s, profile)?;
    if variant == ParetoVariant::NonNegative {
        for x in s.iter() {
            if chosen.contains(x) {
                continue;
            }
            if let Some(y) = chosen.iter().find(|&y| unanimous.has(x, y)) {
                return Ok(AxiomReport::fail(
                    variant.id(),
                    scope,
                    format!(
                        "{} is unanimously at least as good as chosen {} but unchosen",
                        label(x),
                        label(y)
                    ),
                ));
            }
        }
        return Ok(AxiomReport::pass(variant.id(), scope));
    }
    let hull = unanimous.transitive_hull(s)?;
    for y in chosen.iter() {
        for x in s.iter() {
            if x != y && unanimous.has(x, y) && !hull.has(y, x) {
                return Ok(AxiomReport::fail(
                    variant.id(),
                    scope,
                    format!(
                        "{} chosen despite unanswered unanimous argument from {}",
                        label(y),
                        label(x)
                    ),
                ));
            }
        }
    }
    Ok(AxiomReport::pass(variant.id(), scope))
}

/// Strong non-negative responsiveness: a single step in favor of a
/// chosen alternative keeps it chosen and admits nobody new.
pub fn check_snnr(
    rule: &dyn ChoiceRule,
    s: &AltSet,
    profile: &Profile,
    steps: &[PerturbationStep],
) -> Result<AxiomReport> {
    let before = rule.choose(s, profile)?;
    let scope = format!("set={},steps={}", s, steps.len());
    for step in steps {
        if !before.contains(step.x) {
            continue;
        }
        let perturbed = apply_perturbation(profile, step)?;
        let after = rule.choose(s, &perturbed)?;
        if !after.contains(step.x) {
            return Ok(AxiomReport::fail(
                "sNNR",
                scope,
                format!(
                    "favoring {} over {} (individual {}) dropped it from {}",
                    s.universe().label(step.x),
                    s.universe().label(step.y),
                    step.individual,
                    before
                ),
            ));
        }
        let newcomer = after.iter().find(|&z| !before.contains(z));
        if let Some(z) = newcomer {
            return Ok(AxiomReport::fail(
                "sNNR",
                scope,
                format!(
                    "favoring {} over {} (individual {}) newly admitted {}",
                    s.universe().label(step.x),
                    s.universe().label(step.y),
                    step.individual,
                    s.universe().label(z)
                ),
            ));
        }
    }
    Ok(AxiomReport::pass("sNNR", scope))
}

/// Positive responsiveness: a single step in favor of one of two chosen
/// alternatives must drop the other.
pub fn check_pr(
    rule: &dyn ChoiceRule,
    s: &AltSet,
    profile: &Profile,
    steps: &[PerturbationStep],
) -> Result<AxiomReport> {
    let before = rule.choose(s, profile)?;
    let scope = format!("set={},steps={}", s, steps.len());
    for step in steps {
        if step.x == step.y || !before.contains(step.x) || !before.contains(step.y) {
            continue;
        }
        let perturbed = apply_perturbation(profile, step)?;
        let after = rule.choose(s, &perturbed)?;
        if after.contains(step.y) {
            return Ok(AxiomReport::fail(
                "PR",
                scope,
                format!(
                    "favoring {} over {} (individual {}) left {} chosen",
                    s.universe().label(step.x),
                    s.universe().label(step.y),
                    step.individual,
                    s.universe().label(step.y)
                ),
            ));
        }
    }
    Ok(AxiomReport::pass("PR", scope))
}

/// Quantifier bounds for the consistency checks: exhaustive subset
/// enumeration up to `exhaustive_m` alternatives (and `exhaustive_n`
/// individuals for isomorphisms), seeded sampling beyond.
#[derive(Clone, Copy, Debug)]
pub struct CheckScope {
    pub exhaustive_m: usize,
    pub exhaustive_n: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckScope {
    fn default() -> CheckScope {
        CheckScope {
            exhaustive_m: 5,
            exhaustive_n: 6,
            samples: 200,
            seed: 0x5eed,
        }
    }
}

impl CheckScope {
    fn feasible_sets(&self, profile: &Profile) -> (Vec<AltSet>, bool) {
        let u = profile.universe();
        let m = u.size();
        if m <= self.exhaustive_m {
            let full = u.full_mask();
            let all = (1..=full).map(|bits| AltSet::from_mask(u, bits)).collect();
            (all, true)
        } else {
            let mut rng = Rng::new(self.seed);
            let full = u.full_mask();
            let mut sets = Vec::new();
            while sets.len() < self.samples {
                let mask = rng.next_u64() & full;
                if mask != 0 {
                    sets.push(AltSet::from_mask(u, mask));
                }
            }
            (sets, false)
        }
    }

    fn describe(&self, exhaustive: bool) -> String {
        if exhaustive {
            "exhaustive".to_string()
        } else {
            format!("sampled({})", self.samples)
        }
    }
}

/// The consistency-style conditions quantified over feasible sets and,
/// where needed, supersets or isomorphic images.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsistencyAxiom {
    /// A pairwise-unanimous winner is the unique choice.
    C,
    /// A pairwise-acceptable alternative is chosen.
    Gc,
    /// Choosing from the choice changes nothing.
    Id,
    /// Chosen in a superset (with overlapping choices) means chosen in
    /// the subset.
    Ca,
    /// Two alternatives chosen together stay together in supersets.
    Beta,
    /// A superset choice inside the subset choice forces equality.
    Sua,
    /// Only preferences on the feasible set matter.
    I,
    /// Relabeling alternatives and individuals relabels the choice.
    Iso,
    /// Collapsing a component never changes the choice.
    Cc,
}

impl ConsistencyAxiom {
    pub const ALL: [ConsistencyAxiom; 9] = [
        ConsistencyAxiom::C,
        ConsistencyAxiom::Gc,
        ConsistencyAxiom::Id,
        ConsistencyAxiom::Ca,
        ConsistencyAxiom::Beta,
        ConsistencyAxiom::Sua,
        ConsistencyAxiom::I,
        ConsistencyAxiom::Iso,
        ConsistencyAxiom::Cc,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            ConsistencyAxiom::C => "C",
            ConsistencyAxiom::Gc => "GC",
            ConsistencyAxiom::Id => "Id",
            ConsistencyAxiom::Ca => "CA",
            ConsistencyAxiom::Beta => "beta",
            ConsistencyAxiom::Sua => "SUA",
            ConsistencyAxiom::I => "I",
            ConsistencyAxiom::Iso => "Iso",
            ConsistencyAxiom::Cc => "CC",
        }
    }
}

impl std::str::FromStr for ConsistencyAxiom {
    type Err = Error;
    fn from_str(s: &str) -> Result<ConsistencyAxiom> {
        ConsistencyAxiom::ALL
            .iter()
            .copied()
            .find(|a| a.id() == s)
            .ok_or_else(|| Error::RuleSyntax(format!("unknown axiom `{s}`")))
    }
}

fn pair_of(u: &std::sync::Arc<crate::relation::Universe>, x: usize, y: usize) -> AltSet {
    AltSet::from_mask(u, 1u64 << x | 1u64 << y)
}

pub fn check_choice_consistency(
    axiom: ConsistencyAxiom,
    rule: &dyn ChoiceRule,
    profile: &Profile,
    scope: &CheckScope,
) -> Result<AxiomReport> {
    let (sets, exhaustive) = scope.feasible_sets(profile);
    let scope_desc = scope.describe(exhaustive);
    let u = profile.universe();
    match axiom {
        ConsistencyAxiom::C => {
            for s in &sets {
                let chosen = rule.choose(s, profile)?;
                for x in s.iter() {
                    let mut beats_all = true;
                    for y in s.iter() {
                        if x == y {
                            continue;
                        }
                        let duel = rule.choose(&pair_of(u, x, y), profile)?;
                        if duel.len() != 1 || !duel.contains(x) {
                            beats_all = false;
                            break;
                        }
                    }
                    if beats_all && (chosen.len() != 1 || !chosen.contains(x)) {
                        return Ok(AxiomReport::fail(
                            axiom.id(),
                            scope_desc,
                            format!(
                                "{} wins every pair of {} but the choice is {}",
                                u.label(x),
                                s,
                                chosen
                            ),
                        ));
                    }
                }
            }
        }
        ConsistencyAxiom::Gc => {
            for s in &sets {
                let chosen = rule.choose(s, profile)?;
                for x in s.iter() {
                    let mut acceptable_everywhere = true;
                    for y in s.iter() {
                        if x == y {
                            continue;
                        }
                        if !rule.choose(&pair_of(u, x, y), profile)?.contains(x) {
                            acceptable_everywhere = false;
                            break;
                        }
                    }
                    if acceptable_everywhere && !chosen.contains(x) {
                        return Ok(AxiomReport::fail(
                            axiom.id(),
                            scope_desc,
                            format!(
                                "{} acceptable in every pair of {} but not chosen from {}",
                                u.label(x),
                                s,
                                chosen
                            ),
                        ));
                    }
                }
            }
        }
        ConsistencyAxiom::Id => {
            for s in &sets {
                let chosen = rule.choose(s, profile)?;
                let again = rule.choose(&chosen, profile)?;
                if again != chosen {
                    return Ok(AxiomReport::fail(
                        axiom.id(),
                        scope_desc,
                        format!("C({s}) = {chosen} but C({chosen}) = {again}"),
                    ));
                }
            }
        }
        ConsistencyAxiom::Ca | ConsistencyAxiom::Beta | ConsistencyAxiom::Sua => {
            for big in &sets {
                let chosen_big = rule.choose(big, profile)?;
                // walk proper nonempty submasks
                let mut sub = (big.mask() - 1) & big.mask();
                while sub != 0 {
                    let small = AltSet::from_mask(u, sub);
                    let chosen_small = rule.choose(&small, profile)?;
                    match axiom {
                        ConsistencyAxiom::Ca => {
                            if chosen_small.intersection(&chosen_big).is_empty() {
                                sub = (sub - 1) & big.mask();
                                continue;
                            }
                            if let Some(x) = chosen_big
                                .intersection(&small)
                                .iter()
                                .find(|&x| !chosen_small.contains(x))
                            {
                                return Ok(AxiomReport::fail(
                                    axiom.id(),
                                    scope_desc,
                                    format!(
                                        "{} chosen from {} but not from {}",
                                        u.label(x),
                                        big,
                                        small
                                    ),
                                ));
                            }
                        }
                        ConsistencyAxiom::Beta => {
                            let pairs: Vec<usize> = chosen_small.iter().collect();
                            for (i, &x) in pairs.iter().enumerate() {
                                for &y in &pairs[i + 1..] {
                                    if chosen_big.contains(x) != chosen_big.contains(y) {
                                        return Ok(AxiomReport::fail(
                                            axiom.id(),
                                            scope_desc,
                                            format!(
                                                "{} and {} both chosen from {} but split by {}",
                                                u.label(x),
                                                u.label(y),
                                                small,
                                                big
                                            ),
                                        ));
                                    }
                                }
                            }
                        }
                        ConsistencyAxiom::Sua => {
                            if chosen_big.is_subset_of(&chosen_small)
                                && chosen_big != chosen_small
                            {
                                return Ok(AxiomReport::fail(
                                    axiom.id(),
                                    scope_desc,
                                    format!(
                                        "C({big}) = {chosen_big} inside C({small}) = {chosen_small}"
                                    ),
                                ));
                            }
                        }
                        _ => unreachable!(),
                    }
                    sub = (sub - 1) & big.mask();
                }
            }
        }
        ConsistencyAxiom::I => {
            for s in &sets {
                let direct = rule.choose(s, profile)?;
                let projected = profile.project(s)?;
                let via = rule.choose(&projected.alternatives(), &projected)?;
                let mut direct_labels = direct.sorted_labels();
                let mut via_labels = via.sorted_labels();
                direct_labels.sort();
                via_labels.sort();
                if direct_labels != via_labels {
                    return Ok(AxiomReport::fail(
                        axiom.id(),
                        scope_desc,
                        format!(
                            "choice from {} differs when outside preferences are dropped: {:?} vs {:?}",
                            s, direct_labels, via_labels
                        ),
                    ));
                }
            }
        }
        ConsistencyAxiom::Iso => {
            return check_iso(rule, profile, scope);
        }
        ConsistencyAxiom::Cc => {
            for s in &sets {
                if s.len() < 2 {
                    continue;
                }
                let chosen = rule.choose(s, profile)?;
                let local = profile.project(s)?;
                let everything = local.alternatives();
                // proper components of the restriction: all of them for
                // small sets, the pairwise closures beyond
                let components: Vec<AltSet> = if s.len() <= scope.exhaustive_m {
                    let full = local.universe().full_mask();
                    (1..full)
                        .filter(|bits| bits.count_ones() >= 2)
                        .map(|bits| AltSet::from_mask(local.universe(), bits))
                        .filter(|b| {
                            crate::profile::is_profile_component(b, &local).unwrap_or(false)
                        })
                        .collect()
                } else {
                    crate::rules::proper_components(&everything, &local)
                };
                for b in &components {
                    let (collapsed, class_label) = crate::profile::quotient(&local, b)?;
                    let quotient_choice =
                        rule.choose(&collapsed.alternatives(), &collapsed)?;
                    let mut expected: Vec<String> = quotient_choice
                        .labels()
                        .into_iter()
                        .filter(|l| *l != class_label)
                        .collect();
                    let class_idx = collapsed.universe().index_of(&class_label)?;
                    if quotient_choice.contains(class_idx) {
                        let inner = local.project(b)?;
                        let inner_choice = rule.choose(&inner.alternatives(), &inner)?;
                        expected.extend(inner_choice.labels());
                    }
                    expected.sort();
                    let got = chosen.sorted_labels();
                    if got != expected {
                        return Ok(AxiomReport::fail(
                            axiom.id(),
                            scope_desc,
                            format!(
                                "collapsing {} inside {} gives {:?}, direct choice is {:?}",
                                b, s, expected, got
                            ),
                        ));
                    }
                }
            }
        }
    }
    Ok(AxiomReport::pass(axiom.id(), scope_desc))
}

fn check_iso(
    rule: &dyn ChoiceRule,
    profile: &Profile,
    scope: &CheckScope,
) -> Result<AxiomReport> {
    let u = profile.universe();
    let m = u.size();
    let n = profile.len();
    let exhaustive = m <= scope.exhaustive_m && n <= scope.exhaustive_n;
    let scope_desc = if exhaustive {
        "exhaustive".to_string()
    } else {
        format!("sampled({})", scope.samples)
    };
    let (sets, _) = scope.feasible_sets(profile);

    let mut maps: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    if exhaustive {
        for phi in permutations(m) {
            for psi in permutations(n) {
                maps.push((phi.clone(), psi));
            }
        }
    } else {
        let mut rng = Rng::new(scope.seed);
        for _ in 0..scope.samples {
            let mut phi: Vec<usize> = (0..m).collect();
            let mut psi: Vec<usize> = (0..n).collect();
            rng.shuffle(&mut phi);
            rng.shuffle(&mut psi);
            maps.push((phi, psi));
        }
    }

    let baseline: Vec<AltSet> = sets
        .iter()
        .map(|s| rule.choose(s, profile))
        .collect::<Result<_>>()?;
    for (phi, psi) in &maps {
        let image = apply_isomorphism(profile, phi, psi);
        for (s, chosen) in sets.iter().zip(&baseline) {
            let mapped_set =
                AltSet::from_mask(u, s.iter().fold(0u64, |acc, x| acc | 1 << phi[x]));
            let image_choice = rule.choose(&mapped_set, &image)?;
            let expected =
                AltSet::from_mask(u, chosen.iter().fold(0u64, |acc, x| acc | 1 << phi[x]));
            if image_choice != expected {
                return Ok(AxiomReport::fail(
                    "Iso",
                    scope_desc,
                    format!(
                        "relabeled choice from {} is {}, expected {}",
                        mapped_set, image_choice, expected
                    ),
                ));
            }
        }
    }
    Ok(AxiomReport::pass("Iso", scope_desc))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            rec(items, k - 1, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let mut items: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    rec(&mut items, k, &mut out);
    out
}

/// The pairwise ratio functions: fraction of weak support among the
/// decided, of strict support among the strict, and of weak support
/// among the weak on both sides, each with the convention 0/0 := 1.
pub fn ratio_functions(profile: &Profile, x: usize, y: usize) -> (Ratio, Ratio, Ratio) {
    let t = profile.counts();
    let delta = Ratio::counts_or_one(t.r(x, y), t.d(x, y));
    let pi = Ratio::counts_or_one(t.p(x, y), t.p(x, y) + t.p(y, x));
    let rho = Ratio::counts_or_one(t.r(x, y), t.r(x, y) + t.r(y, x));
    (delta, pi, rho)
}

/// Pairwise distance flavors derived from the ratio functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// 1 - pi; a distance on profiles of total quasi-orders.
    Dp,
    /// 1 - rho; a distance on profiles of total quasi-orders.
    Dr,
    /// 1 - p/n; a distance on profiles of 3-acyclic relations.
    Dm,
}

impl Metric {
    pub fn id(&self) -> &'static str {
        match self {
            Metric::Dp => "d_P",
            Metric::Dr => "d_R",
            Metric::Dm => "d_M",
        }
    }
}

/// Verifies the triangle inequality of the metric on every ordered
/// triple, in exact arithmetic. Reports `na` when the profile is outside
/// the metric's class.
pub fn check_triangle(profile: &Profile, metric: Metric) -> Result<AxiomReport> {
    let scope = format!("m={}", profile.universe().size());
    let class_ok = profile.individuals().iter().all(|r| {
        let flags = r.classify();
        match metric {
            Metric::Dp | Metric::Dr => flags.quasi_order && flags.complete,
            Metric::Dm => flags.three_acyclic,
        }
    });
    if !class_ok {
        let need = match metric {
            Metric::Dp | Metric::Dr => "total quasi-orders",
            Metric::Dm => "3-acyclic relations",
        };
        return Ok(AxiomReport::not_applicable(
            metric.id(),
            scope,
            format!("profile is not made of {need}"),
        ));
    }
    let t = profile.counts();
    let n = t.n();
    let dist = |x: usize, y: usize| -> Ratio {
        match metric {
            Metric::Dp => Ratio::ONE - Ratio::counts_or_one(t.p(x, y), t.p(x, y) + t.p(y, x)),
            Metric::Dr => Ratio::ONE - Ratio::counts_or_one(t.r(x, y), t.r(x, y) + t.r(y, x)),
            Metric::Dm => Ratio::ONE - Ratio::new(t.p(x, y) as i64, n as i64),
        }
    };
    let m = profile.universe().size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if x == y || y == z || x == z {
                    continue;
                }
                if dist(x, y) + dist(y, z) < dist(x, z) {
                    let u = profile.universe();
                    return Ok(AxiomReport::fail(
                        metric.id(),
                        scope,
                        format!(
                            "d({},{}) + d({},{}) < d({},{})",
                            u.label(x),
                            u.label(y),
                            u.label(y),
                            u.label(z),
                            u.label(x),
                            u.label(z)
                        ),
                    ));
                }
            }
        }
    }
    Ok(AxiomReport::pass(metric.id(), scope))
}

/// Which ratio comparison characterizes the pairwise choices of the
/// rule, for the covered chain families.
enum RatioFamily {
    /// x chosen against y iff pi(x,y) >= pi(y,x).
    PlainPi,
    /// x chosen against y iff rho(x,y) >= rho(y,x).
    PlainRho,
    /// strength-weighted pi thresholds per critical strength
    ThresholdPi,
    /// strength-weighted rho thresholds per critical strength
    ThresholdRho,
}

fn ratio_family(rule: &RuleSpec) -> Result<(RatioFamily, MajorityType, Ratio, Strength)> {
    if !rule.modifiers.is_empty() || rule.chain.segments.len() != 1 || !rule.chain.augments.is_empty()
    {
        return Err(Error::UnsupportedRule(rule.to_string()));
    }
    let seg = rule.chain.segments[0];
    let family = match seg.kind {
        MajorityType::B | MajorityType::M | MajorityType::Ms
            if seg.lo == Ratio::ZERO && seg.hi.ratio() >= Ratio::HALF =>
        {
            RatioFamily::PlainPi
        }
        MajorityType::D if seg.lo <= Ratio::HALF && seg.hi == Strength::ONE => {
            RatioFamily::PlainRho
        }
        MajorityType::N | MajorityType::Ns
            if seg.lo == Ratio::ZERO && seg.hi == Strength::ONE =>
        {
            RatioFamily::PlainRho
        }
        MajorityType::P => RatioFamily::ThresholdPi,
        MajorityType::R => RatioFamily::ThresholdRho,
        _ => return Err(Error::UnsupportedRule(rule.to_string())),
    };
    Ok((family, seg.kind, seg.lo, seg.hi))
}

/// Checks that the rule's two-alternative choices match the ratio
/// comparison that characterizes its family.
pub fn check_ratio_rule_pairs(rule: &RuleSpec, profile: &Profile) -> Result<AxiomReport> {
    let (family, kind, lo, hi) = ratio_family(rule)?;
    let u = profile.universe();
    let scope = format!("rule={rule}");
    let m = u.size();
    for x in 0..m {
        for y in 0..m {
            if x == y {
                continue;
            }
            let pair = pair_of(u, x, y);
            let chose_x = rule.choose(&pair, profile)?.contains(x);
            let (_, pi_xy, rho_xy) = ratio_functions(profile, x, y);
            let (_, pi_yx, rho_yx) = ratio_functions(profile, y, x);
            let expected = match family {
                RatioFamily::PlainPi => pi_xy >= pi_yx,
                RatioFamily::PlainRho => rho_xy >= rho_yx,
                RatioFamily::ThresholdPi | RatioFamily::ThresholdRho => {
                    let (mine, theirs) = match family {
                        RatioFamily::ThresholdPi => (pi_xy, pi_yx),
                        _ => (rho_xy, rho_yx),
                    };
                    let mut optimal_everywhere = true;
                    for alpha in
                        critical_strengths(kind, &pair, profile, lo, hi.ratio())?
                    {
                        let a = alpha.ratio();
                        let rest = Ratio::ONE - a;
                        // the share comparison `own >= a/(1-a) * other`,
                        // cross-multiplied so strength 1 stays exact
                        let ok = if a <= Ratio::HALF {
                            // complete regime: optimal iff own support
                            // reaches the weighted share
                            mine * rest >= a * theirs
                        } else {
                            // antisymmetric regime: optimal iff the
                            // opponent's support stays strictly below
                            theirs * rest < a * mine
                        };
                        if !ok {
                            optimal_everywhere = false;
                            break;
                        }
                    }
                    optimal_everywhere
                }
            };
            if chose_x != expected {
                return Ok(AxiomReport::fail(
                    "ratio-pairs",
                    scope,
                    format!(
                        "pair ({},{}): rule gives {}, ratio comparison gives {}",
                        u.label(x),
                        u.label(y),
                        chose_x,
                        expected
                    ),
                ));
            }
        }
    }
    Ok(AxiomReport::pass("ratio-pairs", scope))
}
