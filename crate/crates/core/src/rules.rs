//! Chain-based choice rules and their modifications.
//!
//! A base rule picks the common optimal elements of a nested family of
//! hulled majority relations. Modifiers wrap a rule: `^C` collapses to a
//! pairwise-unanimous winner when one exists, `^GC` adds every
//! alternative that survives all its pairwise contests, `^CC` makes the
//! rule composition-consistent by recursing through generalized
//! components, and `^Id` iterates to a fixpoint.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::majority::{build_chain, ChainSpec};
use crate::profile::{is_profile_component, quotient, Profile};
use crate::relation::AltSet;

/// Rule modifications, applied left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modifier {
    C,
    Gc,
    Cc,
    Id,
}

impl Modifier {
    pub const ALL: [Modifier; 4] = [Modifier::C, Modifier::Gc, Modifier::Cc, Modifier::Id];

    pub fn name(&self) -> &'static str {
        match self {
            Modifier::C => "C",
            Modifier::Gc => "GC",
            Modifier::Cc => "CC",
            Modifier::Id => "Id",
        }
    }
}

impl fmt::Display for Modifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A chain rule plus an ordered list of modifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSpec {
    pub chain: ChainSpec,
    pub modifiers: Vec<Modifier>,
}

impl RuleSpec {
    pub fn new(chain: ChainSpec, modifiers: Vec<Modifier>) -> Result<RuleSpec> {
        for (i, m) in modifiers.iter().enumerate() {
            if modifiers[..i].contains(m) {
                return Err(Error::RuleSyntax(format!("modifier ^{m} appears twice")));
            }
        }
        let spec = RuleSpec { chain, modifiers };
        spec.check_composition_requirements()?;
        Ok(spec)
    }

    pub fn base(chain: ChainSpec) -> RuleSpec {
        RuleSpec {
            chain,
            modifiers: Vec::new(),
        }
    }

    /// `^CC` relies on the underlying rule answering pairwise contests
    /// coherently; that holds after `^C` and `^GC`, or natively when the
    /// chain uses only antisymmetric or only complete relation types.
    fn check_composition_requirements(&self) -> Result<()> {
        if let Some(cc_at) = self.modifiers.iter().position(|m| *m == Modifier::Cc) {
            let before = &self.modifiers[..cc_at];
            let prepared =
                before.contains(&Modifier::C) && before.contains(&Modifier::Gc);
            let native = self.chain.all_antisymmetric() || self.chain.all_complete();
            if !prepared && !native {
                return Err(Error::RuleConfig(format!(
                    "^CC on `{}` needs ^C and ^GC applied first (or a chain built \
                     from only antisymmetric or only complete types)",
                    self.chain
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for RuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.chain)?;
        for m in &self.modifiers {
            write!(f, "^{m}")?;
        }
        Ok(())
    }
}

impl FromStr for RuleSpec {
    type Err = Error;

    /// The chain grammar followed by `^C ^GC ^CC ^Id` suffixes, e.g.
    /// `D(0.5,1]+N1+M1^C^GC^CC^Id`.
    fn from_str(s: &str) -> Result<RuleSpec> {
        let mut parts = s.split('^');
        let chain: ChainSpec = parts
            .next()
            .ok_or_else(|| Error::RuleSyntax("empty rule".into()))?
            .parse()?;
        let mut modifiers = Vec::new();
        for part in parts {
            let part = part.trim();
            let m = Modifier::ALL
                .iter()
                .copied()
                .find(|m| m.name() == part)
                .ok_or_else(|| Error::RuleSyntax(format!("unknown modifier `^{part}`")))?;
            modifiers.push(m);
        }
        RuleSpec::new(chain, modifiers)
    }
}

/// Anything that maps a feasible set and a profile to a nonempty choice
/// set. Implementations must accept profiles over arbitrary universes so
/// that the composition recursion can hand them quotients.
pub trait ChoiceRule {
    fn choose(&self, s: &AltSet, profile: &Profile) -> Result<AltSet>;
}

impl<F> ChoiceRule for F
where
    F: Fn(&AltSet, &Profile) -> Result<AltSet>,
{
    fn choose(&self, s: &AltSet, profile: &Profile) -> Result<AltSet> {
        self(s, profile)
    }
}

impl ChoiceRule for RuleSpec {
    fn choose(&self, s: &AltSet, profile: &Profile) -> Result<AltSet> {
        StagedRule {
            chain: &self.chain,
            modifiers: &self.modifiers,
        }
        .choose(s, profile)
    }
}

/// A rule spec cut off after a prefix of its modifiers; the evaluation
/// engine peels modifiers from the right.
struct StagedRule<'a> {
    chain: &'a ChainSpec,
    modifiers: &'a [Modifier],
}

impl ChoiceRule for StagedRule<'_> {
    fn choose(&self, s: &AltSet, profile: &Profile) -> Result<AltSet> {
        match self.modifiers.split_last() {
            None => base_choice(self.chain, s, profile),
            Some((last, rest)) => {
                let inner = StagedRule {
                    chain: self.chain,
                    modifiers: rest,
                };
                match last {
                    Modifier::C => modify_c(&inner, s, profile),
                    Modifier::Gc => modify_gc(&inner, s, profile),
                    Modifier::Cc => modify_cc(&inner, s, profile),
                    Modifier::Id => modify_id(&inner, s, profile),
                }
            }
        }
    }
}

/// Common optimal elements of the materialized chain; nonempty for every
/// profile on which the chain is nested.
pub fn base_choice(chain: &ChainSpec, s: &AltSet, profile: &Profile) -> Result<AltSet> {
    if s.len() == 1 {
        return Ok(s.clone());
    }
    let built = build_chain(chain, s, profile)?;
    let chosen = built.chain().common_optimals();
    debug_assert!(!chosen.is_empty());
    Ok(chosen)
}

fn pair_set(s: &AltSet, x: usize, y: usize) -> AltSet {
    AltSet::from_mask(s.universe(), 1u64 << x | 1u64 << y)
}

fn singleton(s: &AltSet, x: usize) -> AltSet {
    AltSet::from_mask(s.universe(), 1u64 << x)
}

/// If some alternative wins every pairwise contest outright, it becomes
/// the unique choice; otherwise the choice is unchanged.
pub fn modify_c(rule: &dyn ChoiceRule, s: &AltSet, profile: &Profile) -> Result<AltSet> {
    for x in s.iter() {
        let mut sole_winner = true;
        for y in s.iter() {
            if x == y {
                continue;
            }
            let duel = rule.choose(&pair_set(s, x, y), profile)?;
            if duel.len() != 1 || !duel.contains(x) {
                sole_winner = false;
                break;
            }
        }
        if sole_winner {
            return Ok(singleton(s, x));
        }
    }
    rule.choose(s, profile)
}

/// Adds every alternative that is acceptable against each single
/// opponent; gives a superset of the unmodified choice.
pub fn modify_gc(rule: &dyn ChoiceRule, s: &AltSet, profile: &Profile) -> Result<AltSet> {
    let mut chosen = rule.choose(s, profile)?;
    for x in s.iter() {
        if chosen.contains(x) {
            continue;
        }
        let mut everywhere = true;
        for y in s.iter() {
            if x == y {
                continue;
            }
            if !rule.choose(&pair_set(s, x, y), profile)?.contains(x) {
                everywhere = false;
                break;
            }
        }
        if everywhere {
            chosen = chosen.union(&singleton(s, x));
        }
    }
    Ok(chosen)
}

/// Iterates the rule on its own output until the choice set is a
/// fixpoint; terminates because the set can only shrink.
pub fn modify_id(rule: &dyn ChoiceRule, s: &AltSet, profile: &Profile) -> Result<AltSet> {
    let mut cur = s.clone();
    loop {
        let next = rule.choose(&cur, profile)?;
        debug_assert!(next.is_subset_of(&cur));
        if next == cur {
            return Ok(next);
        }
        cur = next;
    }
}

/// One inflation step of the component closure: adds every alternative
/// of `s` that fails, for some individual, to relate uniformly (all
/// strictly below, all equivalent, all strictly above, or all undecided)
/// to every member of `a`.
pub fn phi_step(a: &AltSet, s: &AltSet, profile: &Profile) -> Result<AltSet> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.is_subset_of(s) {
        return Err(Error::OutsideFeasibleSet(a.to_string()));
    }
    let finder = ComponentFinder::new(profile, s)?;
    let mut masks = finder.uniform_masks(a.mask());
    Ok(AltSet::from_mask(
        s.universe(),
        finder.expand_once(a.mask(), &mut masks),
    ))
}

/// Per-individual strict/equivalent/undecided rows restricted to the
/// feasible set, prepared once so that repeated closures are cheap.
struct ComponentFinder {
    smask: u64,
    m: usize,
    // per individual: down[x] = strictly below x, up[x] = strictly above,
    // eq[x] = equivalent, un[x] = undecided (within s)
    down: Vec<Vec<u64>>,
    up: Vec<Vec<u64>>,
    eq: Vec<Vec<u64>>,
    un: Vec<Vec<u64>>,
}

/// Running intersections of the four uniformity classes per individual.
struct UniformMasks {
    down: Vec<u64>,
    up: Vec<u64>,
    eq: Vec<u64>,
    un: Vec<u64>,
}

impl ComponentFinder {
    fn new(profile: &Profile, s: &AltSet) -> Result<ComponentFinder> {
        if s.universe() != profile.universe() {
            return Err(Error::UniverseMismatch);
        }
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let m = profile.universe().size();
        let smask = s.mask();
        let n = profile.len();
        let mut down = vec![vec![0u64; m]; n];
        let mut up = vec![vec![0u64; m]; n];
        let mut eq = vec![vec![0u64; m]; n];
        let mut un = vec![vec![0u64; m]; n];
        for (i, rel) in profile.individuals().iter().enumerate() {
            for x in s.iter() {
                let fwd = rel.row(x) & smask;
                let bwd = rel.column(x) & smask;
                let self_bit = 1u64 << x;
                eq[i][x] = fwd & bwd & !self_bit;
                down[i][x] = fwd & !bwd;
                up[i][x] = bwd & !fwd;
                un[i][x] = smask & !fwd & !bwd & !self_bit;
            }
        }
        Ok(ComponentFinder {
            smask,
            m,
            down,
            up,
            eq,
            un,
        })
    }

    fn n(&self) -> usize {
        self.down.len()
    }

    fn uniform_masks(&self, amask: u64) -> UniformMasks {
        let n = self.n();
        let mut masks = UniformMasks {
            down: vec![self.smask; n],
            up: vec![self.smask; n],
            eq: vec![self.smask; n],
            un: vec![self.smask; n],
        };
        let mut bits = amask;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.absorb(x, &mut masks);
        }
        masks
    }

    fn absorb(&self, x: usize, masks: &mut UniformMasks) {
        for i in 0..self.n() {
            masks.down[i] &= self.down[i][x];
            masks.up[i] &= self.up[i][x];
            masks.eq[i] &= self.eq[i][x];
            masks.un[i] &= self.un[i][x];
        }
    }

    fn expand_once(&self, amask: u64, masks: &mut UniformMasks) -> u64 {
        let mut uniform = self.smask;
        for i in 0..self.n() {
            uniform &= masks.down[i] | masks.up[i] | masks.eq[i] | masks.un[i];
        }
        amask | (self.smask & !uniform)
    }

    /// Smallest component containing the seed set: iterate the inflation
    /// step to its fixpoint, absorbing only newly added members.
    fn closure(&self, seed: u64) -> u64 {
        let mut masks = self.uniform_masks(seed);
        let mut cur = seed;
        loop {
            let next = self.expand_once(cur, &mut masks);
            let added = next & !cur;
            if added == 0 {
                return cur;
            }
            let mut bits = added;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.absorb(x, &mut masks);
            }
            cur = next;
        }
    }

    fn all_pair_closures(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let members: Vec<usize> = (0..self.m).filter(|&x| self.smask >> x & 1 == 1).collect();
        for (ai, &x) in members.iter().enumerate() {
            for &y in &members[ai + 1..] {
                let b = self.closure(1u64 << x | 1u64 << y);
                if !out.contains(&b) {
                    out.push(b);
                }
            }
        }
        out
    }
}

/// The smallest component of the profile restricted to `s` that
/// contains both alternatives.
pub fn smallest_component(
    x: usize,
    y: usize,
    s: &AltSet,
    profile: &Profile,
) -> Result<AltSet> {
    if x == y {
        return Err(Error::SameAlternative);
    }
    if !s.contains(x) || !s.contains(y) {
        return Err(Error::OutsideFeasibleSet(format!(
            "{{{},{}}}",
            profile.universe().label(x),
            profile.universe().label(y)
        )));
    }
    let finder = ComponentFinder::new(profile, s)?;
    Ok(AltSet::from_mask(
        s.universe(),
        finder.closure(1u64 << x | 1u64 << y),
    ))
}

/// Every distinct proper component of the restricted profile arising as
/// a pairwise closure, sorted by size then labels. The minimal members
/// of the component family are always among these.
pub fn proper_components(s: &AltSet, profile: &Profile) -> Vec<AltSet> {
    if s.len() < 2 {
        return Vec::new();
    }
    let finder = match ComponentFinder::new(profile, s) {
        Ok(f) => f,
        Err(_) => return Vec::new(),
    };
    let mut sets: Vec<AltSet> = finder
        .all_pair_closures()
        .into_iter()
        .filter(|&b| b != s.mask())
        .map(|b| AltSet::from_mask(s.universe(), b))
        .collect();
    sets.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.sorted_labels().cmp(&b.sorted_labels()))
    });
    sets
}

/// A proper component of the restricted profile, minimal by cardinality
/// and then by sorted labels; `None` when the profile is component-free
/// on `s`.
pub fn minimal_proper_component(s: &AltSet, profile: &Profile) -> Option<AltSet> {
    proper_components(s, profile).into_iter().next()
}

/// Composition-consistent modification: recurse on the quotient by a
/// minimal proper component; when the collapsed class is chosen, expand
/// it by the choice inside the component.
pub fn modify_cc(rule: &dyn ChoiceRule, s: &AltSet, profile: &Profile) -> Result<AltSet> {
    let local = profile.project(s)?;
    let chosen = cc_recurse(rule, &local, None)?;
    AltSet::from_labels(s.universe(), &chosen.sorted_labels())
}

/// As [`modify_cc`], but forcing the first recursion level to use the
/// given component (labels resolved against the restriction). The final
/// choice set does not depend on this; the test suites verify it.
pub fn modify_cc_via(
    rule: &dyn ChoiceRule,
    s: &AltSet,
    profile: &Profile,
    first: &AltSet,
) -> Result<AltSet> {
    let local = profile.project(s)?;
    let forced = AltSet::from_labels(local.universe(), &first.sorted_labels())?;
    let chosen = cc_recurse(rule, &local, Some(&forced))?;
    AltSet::from_labels(s.universe(), &chosen.sorted_labels())
}

fn cc_recurse(
    rule: &dyn ChoiceRule,
    profile: &Profile,
    forced: Option<&AltSet>,
) -> Result<AltSet> {
    let everything = profile.alternatives();
    let component = match forced {
        Some(b) => Some(b.clone()),
        None => minimal_proper_component(&everything, profile),
    };
    let b = match component {
        None => return rule.choose(&everything, profile),
        Some(b) => b,
    };
    debug_assert!(is_profile_component(&b, profile).unwrap_or(false));
    let (collapsed, class_label) = quotient(profile, &b)?;
    let outer = cc_recurse(rule, &collapsed, None)?;
    let class_index = collapsed.universe().index_of(&class_label)?;
    let mut labels: Vec<String> = outer
        .labels()
        .into_iter()
        .filter(|l| *l != class_label)
        .collect();
    if outer.contains(class_index) {
        let inner_profile = profile.project(&b)?;
        let inner = cc_recurse(rule, &inner_profile, None)?;
        labels.extend(inner.labels());
    }
    AltSet::from_labels(profile.universe(), &labels)
}

/// One recorded evaluation stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub stage: String,
    pub detail: String,
}

/// A nonempty choice with an optional stage-by-stage trace.
#[derive(Clone, Debug)]
pub struct ChoiceResult {
    pub chosen: AltSet,
    pub trace: Option<Vec<TraceStep>>,
}

/// Evaluates a rule: the base chain choice followed by the modifiers in
/// listed order. With `want_trace`, records every intermediate set (for
/// the base stage, one entry per chain member).
pub fn evaluate(
    rule: &RuleSpec,
    s: &AltSet,
    profile: &Profile,
    want_trace: bool,
) -> Result<ChoiceResult> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    rule.check_composition_requirements()?;
    let mut trace = want_trace.then(Vec::new);
    let mut current = if let Some(trace) = trace.as_mut() {
        if s.len() == 1 {
            trace.push(TraceStep {
                stage: "base".into(),
                detail: format!("singleton {s}"),
            });
            s.clone()
        } else {
            let built = build_chain(&rule.chain, s, profile)?;
            let mut last = s.clone();
            for (hull, survivors) in built.chain().common_optimals_steps() {
                trace.push(TraceStep {
                    stage: format!("base[{}]", built.member_label_for(&hull)),
                    detail: survivors.to_string(),
                });
                last = survivors;
            }
            last
        }
    } else {
        base_choice(&rule.chain, s, profile)?
    };
    for (i, m) in rule.modifiers.iter().enumerate() {
        let inner = StagedRule {
            chain: &rule.chain,
            modifiers: &rule.modifiers[..i],
        };
        current = match m {
            Modifier::C => modify_c(&inner, s, profile)?,
            Modifier::Gc => modify_gc(&inner, s, profile)?,
            Modifier::Cc => modify_cc(&inner, s, profile)?,
            Modifier::Id => modify_id(&inner, s, profile)?,
        };
        if let Some(trace) = trace.as_mut() {
            trace.push(TraceStep {
                stage: m.name().into(),
                detail: current.to_string(),
            });
        }
    }
    debug_assert!(!current.is_empty());
    debug_assert!(current.is_subset_of(s));
    Ok(ChoiceResult {
        chosen: current,
        trace,
    })
}
