//! The ten majority/minority relation families, their critical
//! strengths, nested chain construction, and the inclusion-lattice
//! checker.
//!
//! Every family relates `x` to `y` when a supporting count reaches a
//! fraction `alpha` of a family-specific denominator. Above one half the
//! definitions carry positivity side conditions; at or below one half
//! those side conditions are dropped and the same formulas define
//! minority relations. All threshold comparisons cross-multiply exact
//! integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::profile::{d_of_set, Profile, Tally};
use crate::ratio::{Ratio, Strength};
use crate::relation::{AltSet, QuasiOrderChain, Relation};

/// The ten relation families.
///
/// `M`/`N` measure fractions of all individuals, `Ms`/`Ns` of the
/// individuals decided somewhere on the feasible set, `B`/`D` of the
/// individuals decided on the pair, `P`/`R` of the support on both sides
/// of the pair, and `U`/`E` let undecided resp. equivalent individuals
/// join a strict majority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MajorityType {
    M,
    N,
    Ms,
    Ns,
    B,
    D,
    P,
    R,
    U,
    E,
}

impl MajorityType {
    pub const ALL: [MajorityType; 10] = [
        MajorityType::M,
        MajorityType::N,
        MajorityType::Ms,
        MajorityType::Ns,
        MajorityType::B,
        MajorityType::D,
        MajorityType::P,
        MajorityType::R,
        MajorityType::U,
        MajorityType::E,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MajorityType::M => "M",
            MajorityType::N => "N",
            MajorityType::Ms => "MS",
            MajorityType::Ns => "NS",
            MajorityType::B => "B",
            MajorityType::D => "D",
            MajorityType::P => "P",
            MajorityType::R => "R",
            MajorityType::U => "U",
            MajorityType::E => "E",
        }
    }

    /// Antisymmetry is guaranteed above one half for every type except
    /// `N`, `NS`, `D`, and for `U`/`E` at every strength.
    pub fn antisymmetric_for(&self, lo: Ratio) -> bool {
        match self {
            MajorityType::U | MajorityType::E => true,
            MajorityType::N | MajorityType::Ns | MajorityType::D => false,
            _ => lo >= Ratio::HALF,
        }
    }

    /// `D`, `P`, `R` are complete relations at strengths at or below one
    /// half.
    pub fn complete_for(&self, hi: Strength) -> bool {
        matches!(self, MajorityType::D | MajorityType::P | MajorityType::R)
            && hi.ratio() <= Ratio::HALF
    }
}

impl fmt::Display for MajorityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MajorityType {
    type Err = Error;
    fn from_str(s: &str) -> Result<MajorityType> {
        MajorityType::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::RuleSyntax(format!("unknown majority type `{s}`")))
    }
}

/// `count >= alpha * weight`, exactly.
#[inline]
fn meets(count: u32, alpha: Ratio, weight: u32) -> bool {
    count as i128 * alpha.den() as i128 >= alpha.num() as i128 * weight as i128
}

fn pair_holds(
    kind: MajorityType,
    alpha: Ratio,
    t: &Tally,
    ds: u32,
    x: usize,
    y: usize,
) -> bool {
    let majority = alpha > Ratio::HALF;
    match kind {
        MajorityType::M => meets(t.p(x, y), alpha, t.n()),
        MajorityType::N => meets(t.r(x, y), alpha, t.n()),
        MajorityType::Ms => meets(t.p(x, y), alpha, ds) && (!majority || ds > 0),
        MajorityType::Ns => meets(t.r(x, y), alpha, ds) && (!majority || ds > 0),
        MajorityType::B => meets(t.p(x, y), alpha, t.d(x, y)) && (!majority || t.d(x, y) > 0),
        MajorityType::D => meets(t.r(x, y), alpha, t.d(x, y)) && (!majority || t.d(x, y) > 0),
        MajorityType::P => {
            let both = t.p(x, y) + t.p(y, x);
            meets(t.p(x, y), alpha, both) && (!majority || both > 0)
        }
        MajorityType::R => {
            meets(t.r(x, y), alpha, t.r(x, y) + t.r(y, x)) && (!majority || t.p(x, y) > 0)
        }
        MajorityType::U => t.p(x, y) > t.p(y, x) && meets(t.p(x, y) + t.u(x, y), alpha, t.n()),
        MajorityType::E => t.p(x, y) > t.p(y, x) && meets(t.r(x, y), alpha, t.d(x, y)),
    }
}

fn relation_from_tally(
    kind: MajorityType,
    alpha: Strength,
    s: &AltSet,
    t: &Tally,
    ds: u32,
) -> Relation {
    let mut rel = Relation::reflexive(s.universe());
    for x in s.iter() {
        for y in s.iter() {
            if x != y && pair_holds(kind, alpha.ratio(), t, ds, x, y) {
                rel.set(x, y);
            }
        }
    }
    rel
}

/// The majority (minority) relation of the given type and strength over
/// the feasible set `s`, returned reflexive.
pub fn majority_relation(
    kind: MajorityType,
    alpha: Strength,
    s: &AltSet,
    profile: &Profile,
) -> Result<Relation> {
    if s.universe() != profile.universe() {
        return Err(Error::UniverseMismatch);
    }
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let t = profile.counts();
    let ds = d_of_set(profile, s)?;
    Ok(relation_from_tally(kind, alpha, s, t, ds))
}

/// The strength at or below which the ordered pair `(x,y)` belongs to the
/// family relation; `None` when it never does. A denominator of zero
/// means the pair holds for every minority strength and no majority one,
/// which is the behavior of a threshold of exactly one half.
fn pair_threshold(kind: MajorityType, t: &Tally, ds: u32, x: usize, y: usize) -> Option<Ratio> {
    let frac = |num: u32, den: u32| {
        if den == 0 {
            Some(Ratio::HALF)
        } else {
            Some(Ratio::new(num as i64, den as i64))
        }
    };
    match kind {
        MajorityType::M => frac(t.p(x, y), t.n()),
        MajorityType::N => frac(t.r(x, y), t.n()),
        MajorityType::Ms => frac(t.p(x, y), ds),
        MajorityType::Ns => frac(t.r(x, y), ds),
        MajorityType::B => frac(t.p(x, y), t.d(x, y)),
        MajorityType::D => frac(t.r(x, y), t.d(x, y)),
        MajorityType::P => frac(t.p(x, y), t.p(x, y) + t.p(y, x)),
        MajorityType::R => frac(t.r(x, y), t.r(x, y) + t.r(y, x)),
        MajorityType::U => (t.p(x, y) > t.p(y, x)).then(|| Ratio::new(
            (t.p(x, y) + t.u(x, y)) as i64,
            t.n() as i64,
        )),
        MajorityType::E => {
            (t.p(x, y) > t.p(y, x)).then(|| Ratio::new(t.r(x, y) as i64, t.d(x, y) as i64))
        }
    }
}

/// The strength at or below which `(x,y)` is in the family relation,
/// straight from the tallies; used by the simulation harness to reason
/// about pair separation.
pub(crate) fn threshold_from_tally(
    kind: MajorityType,
    t: &Tally,
    ds: u32,
    x: usize,
    y: usize,
) -> Option<Ratio> {
    pair_threshold(kind, t, ds, x, y)
}

/// All strengths in `(lo, hi]` at which the family changes, sorted
/// ascending, with `hi` always appended: the relations at the returned
/// strengths are exactly the distinct relations over the whole range.
pub fn critical_strengths(
    kind: MajorityType,
    s: &AltSet,
    profile: &Profile,
    lo: Ratio,
    hi: Ratio,
) -> Result<Vec<Strength>> {
    check_range(lo, hi)?;
    if s.universe() != profile.universe() {
        return Err(Error::UniverseMismatch);
    }
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let t = profile.counts();
    let ds = d_of_set(profile, s)?;
    let mut values = Vec::new();
    for x in s.iter() {
        for y in s.iter() {
            if x == y {
                continue;
            }
            if let Some(c) = pair_threshold(kind, t, ds, x, y) {
                if c > lo && c <= hi {
                    values.push(c);
                }
            }
        }
    }
    values.push(hi);
    values.sort();
    values.dedup();
    values.into_iter().map(Strength::new).collect()
}

fn check_range(lo: Ratio, hi: Ratio) -> Result<()> {
    if lo >= Ratio::ZERO && lo < hi && hi <= Ratio::ONE {
        Ok(())
    } else {
        Err(Error::InvalidRange(lo.to_string(), hi.to_string()))
    }
}

/// One typed half-open strength range `(lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub kind: MajorityType,
    pub lo: Ratio,
    pub hi: Strength,
}

impl Segment {
    pub fn new(kind: MajorityType, lo: Ratio, hi: Strength) -> Result<Segment> {
        check_range(lo, hi.ratio())?;
        Ok(Segment { kind, lo, hi })
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{}]", self.kind, self.lo, self.hi)
    }
}

/// Unanimity relations that may be appended to any chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Augment {
    M1,
    N1,
    B1,
}

impl Augment {
    pub const ALL: [Augment; 3] = [Augment::M1, Augment::N1, Augment::B1];

    pub fn kind(&self) -> MajorityType {
        match self {
            Augment::M1 => MajorityType::M,
            Augment::N1 => MajorityType::N,
            Augment::B1 => MajorityType::B,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Augment::M1 => "M1",
            Augment::N1 => "N1",
            Augment::B1 => "B1",
        }
    }
}

impl fmt::Display for Augment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A declarative chain description: typed strength segments plus
/// unanimity augmentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    pub segments: Vec<Segment>,
    pub augments: Vec<Augment>,
}

impl ChainSpec {
    pub fn new(segments: Vec<Segment>, augments: Vec<Augment>) -> Result<ChainSpec> {
        if segments.is_empty() {
            return Err(Error::RuleSyntax("a chain needs at least one segment".into()));
        }
        Ok(ChainSpec { segments, augments })
    }

    pub fn single(kind: MajorityType, lo: Ratio, hi: Strength) -> Result<ChainSpec> {
        Ok(ChainSpec {
            segments: vec![Segment::new(kind, lo, hi)?],
            augments: Vec::new(),
        })
    }

    /// Every element of the induced family is guaranteed antisymmetric.
    pub fn all_antisymmetric(&self) -> bool {
        self.segments
            .iter()
            .all(|seg| seg.kind.antisymmetric_for(seg.lo))
            && self.augments.iter().all(|a| a.kind().antisymmetric_for(Ratio::HALF))
    }

    /// Every element of the induced family is guaranteed complete.
    pub fn all_complete(&self) -> bool {
        self.segments.iter().all(|seg| seg.kind.complete_for(seg.hi)) && self.augments.is_empty()
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for seg in &self.segments {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{seg}")?;
            first = false;
        }
        for aug in &self.augments {
            write!(f, "+{aug}")?;
        }
        Ok(())
    }
}

impl FromStr for ChainSpec {
    type Err = Error;

    /// Grammar: `TYPE(lo,hi]` segments joined by `+`, then optional
    /// `+M1`/`+N1`/`+B1` augmentations; bounds are decimals or `p/q`
    /// fractions. Example: `D(0.5,1]+N1+M1`.
    fn from_str(s: &str) -> Result<ChainSpec> {
        let mut segments = Vec::new();
        let mut augments = Vec::new();
        for token in s.split('+') {
            let token = token.trim();
            if let Some(aug) = Augment::ALL.iter().find(|a| a.name() == token) {
                augments.push(*aug);
                continue;
            }
            if !augments.is_empty() {
                return Err(Error::RuleSyntax(format!(
                    "segment `{token}` after an augmentation"
                )));
            }
            let open = token
                .find('(')
                .ok_or_else(|| Error::RuleSyntax(format!("bad segment `{token}`")))?;
            let kind: MajorityType = token[..open].parse()?;
            let rest = token[open + 1..]
                .strip_suffix(']')
                .ok_or_else(|| Error::RuleSyntax(format!("segment `{token}` must end with `]`")))?;
            let (lo, hi) = rest
                .split_once(',')
                .ok_or_else(|| Error::RuleSyntax(format!("bad segment bounds in `{token}`")))?;
            let lo: Ratio = lo.trim().parse()?;
            let hi: Strength = hi.trim().parse()?;
            segments.push(Segment::new(kind, lo, hi)?);
        }
        ChainSpec::new(segments, augments)
    }
}

/// One materialized chain element: the relation at a critical strength
/// and its transitive hull on the feasible set.
#[derive(Clone, Debug)]
pub struct ChainMember {
    pub kind: MajorityType,
    pub strength: Strength,
    pub from_augment: bool,
    pub raw: Relation,
    pub hull: Relation,
}

impl ChainMember {
    pub fn label(&self) -> String {
        format!("{}@{}", self.kind, self.strength)
    }
}

/// A chain spec materialized against a profile: all distinct relations
/// at critical strengths plus augmentations, hulled and sorted into a
/// nested quasi-order chain.
#[derive(Clone, Debug)]
pub struct BuiltChain {
    members: Vec<ChainMember>,
    chain: QuasiOrderChain,
}

impl BuiltChain {
    pub fn members(&self) -> &[ChainMember] {
        &self.members
    }

    pub fn chain(&self) -> &QuasiOrderChain {
        &self.chain
    }

    pub fn member_label_for(&self, hull: &Relation) -> String {
        self.members
            .iter()
            .filter(|m| &m.hull == hull)
            .map(|m| m.label())
            .next()
            .unwrap_or_else(|| "?".into())
    }
}

/// Materializes every distinct relation of the spec's segments at their
/// critical strengths, hulls them on `s`, merges the augmentations, and
/// validates nestedness of the whole family. A failed containment is
/// reported with a witness; it signals a rule/profile combination whose
/// family is not a chain.
pub fn build_chain(spec: &ChainSpec, s: &AltSet, profile: &Profile) -> Result<BuiltChain> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.universe() != profile.universe() {
        return Err(Error::UniverseMismatch);
    }
    let t = profile.counts();
    let ds = d_of_set(profile, s)?;
    let mut members = Vec::new();
    for seg in &spec.segments {
        for alpha in critical_strengths(seg.kind, s, profile, seg.lo, seg.hi.ratio())? {
            let raw = relation_from_tally(seg.kind, alpha, s, t, ds);
            if members
                .iter()
                .any(|m: &ChainMember| m.kind == seg.kind && m.raw == raw)
            {
                continue;
            }
            let hull = raw.transitive_hull(s)?;
            members.push(ChainMember {
                kind: seg.kind,
                strength: alpha,
                from_augment: false,
                raw,
                hull,
            });
        }
    }
    for aug in &spec.augments {
        let raw = relation_from_tally(aug.kind(), Strength::ONE, s, t, ds);
        let hull = raw.transitive_hull(s)?;
        members.push(ChainMember {
            kind: aug.kind(),
            strength: Strength::ONE,
            from_augment: true,
            raw,
            hull,
        });
    }
    let mut hulls: Vec<Relation> = Vec::new();
    for m in &members {
        if !hulls.contains(&m.hull) {
            hulls.push(m.hull.clone());
        }
    }
    let chain = match QuasiOrderChain::new_sorted(s.clone(), hulls) {
        Ok(chain) => chain,
        Err(Error::NotNested(w)) => {
            return Err(Error::NotNested(format!("{w} (chain {spec})")));
        }
        Err(e) => return Err(e),
    };
    Ok(BuiltChain { members, chain })
}

/// One checked fact of the inclusion lattice.
#[derive(Clone, Debug)]
pub struct InclusionCheck {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
}

/// Result of checking every inclusion and equality the lattice claims at
/// one strength.
#[derive(Clone, Debug)]
pub struct InclusionReport {
    pub alpha: Strength,
    pub checks: Vec<InclusionCheck>,
}

impl InclusionReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn subset_check(name: &str, a: &Relation, b: &Relation, s: &AltSet) -> InclusionCheck {
    for x in s.iter() {
        for y in s.iter() {
            if x != y && a.has(x, y) && !b.has(x, y) {
                return InclusionCheck {
                    name: name.into(),
                    holds: false,
                    witness: Some(format!(
                        "({},{})",
                        s.universe().label(x),
                        s.universe().label(y)
                    )),
                };
            }
        }
    }
    InclusionCheck {
        name: name.into(),
        holds: true,
        witness: None,
    }
}

fn equal_check(name: &str, a: &Relation, b: &Relation, s: &AltSet) -> InclusionCheck {
    let fwd = subset_check(name, a, b, s);
    if !fwd.holds {
        return fwd;
    }
    subset_check(name, b, a, s)
}

/// Checks, at the given strength, every inclusion and equality the
/// lattice claims in that regime, plus monotone shrinkage against two
/// probe strengths. Failures carry the first offending ordered pair.
pub fn verify_inclusions(profile: &Profile, s: &AltSet, alpha: Strength) -> Result<InclusionReport> {
    let t = profile.counts();
    let ds = d_of_set(profile, s)?;
    let at = |kind: MajorityType, a: Strength| relation_from_tally(kind, a, s, t, ds);
    let rel = |kind: MajorityType| at(kind, alpha);

    use MajorityType::*;
    let mut checks = Vec::new();
    let majority = alpha.ratio() > Ratio::HALF;
    let order: &[(MajorityType, MajorityType)] = if majority {
        &[
            (M, Ms),
            (Ms, B),
            (B, R),
            (R, P),
            (P, E),
            (E, D),
            (M, N),
            (N, Ns),
            (Ns, D),
            (Ms, Ns),
            (B, U),
        ]
    } else {
        &[
            (M, Ms),
            (Ms, B),
            (B, P),
            (P, R),
            (R, D),
            (M, N),
            (N, Ns),
            (Ns, D),
            (Ms, Ns),
            (U, E),
        ]
    };
    for &(small, big) in order {
        checks.push(subset_check(
            &format!("{small}<={big}"),
            &rel(small),
            &rel(big),
            s,
        ));
    }

    // shrinkage: larger strengths give smaller relations, across the
    // regime boundary as well
    let half_alpha = Strength::new(alpha.ratio() * Ratio::HALF).expect("positive");
    let mid_up = Strength::new((alpha.ratio() + Ratio::ONE) * Ratio::HALF).expect("in range");
    for kind in MajorityType::ALL {
        checks.push(subset_check(
            &format!("{kind}@{alpha}<={kind}@{half_alpha}"),
            &rel(kind),
            &at(kind, half_alpha),
            s,
        ));
        checks.push(subset_check(
            &format!("{kind}@{mid_up}<={kind}@{alpha}"),
            &at(kind, mid_up),
            &rel(kind),
            s,
        ));
    }

    let n = t.n() as i64;
    if majority {
        // R = P = E in the low majority band
        if alpha.ratio() <= Ratio::new(n, 2 * n - 1) {
            checks.push(equal_check("R=P", &rel(R), &rel(P), s));
            checks.push(equal_check("P=E", &rel(P), &rel(E), s));
        }
        // a persuaded majority for x rules out the opposing near-complement
        // weak majority: U@a (x,y) forbids N@(1-a+1/n) (y,x)
        let counter = Ratio::ONE - alpha.ratio() + Ratio::new(1, n);
        if counter > Ratio::ZERO && counter <= Ratio::ONE {
            let u_rel = rel(U);
            let n_rel = at(N, Strength::new(counter).expect("checked"));
            let mut holds = true;
            let mut witness = None;
            'search: for x in s.iter() {
                for y in s.iter() {
                    if x != y && u_rel.has(x, y) && n_rel.has(y, x) {
                        holds = false;
                        witness = Some(format!(
                            "({},{})",
                            s.universe().label(x),
                            s.universe().label(y)
                        ));
                        break 'search;
                    }
                }
            }
            checks.push(InclusionCheck {
                name: format!("U@{alpha}-excludes-N@{counter}"),
                holds,
                witness,
            });
        }
    } else {
        // E at minority strengths coincides with R at n/(2n-1)
        let pivot = Strength::new(Ratio::new(n, 2 * n - 1)).expect("in (1/2,1]");
        checks.push(equal_check(
            &format!("E@{alpha}=R@{pivot}"),
            &rel(E),
            &at(R, pivot),
            s,
        ));
        checks.push(equal_check(
            "R@1/2=P@1/2",
            &at(R, Strength::HALF),
            &at(P, Strength::HALF),
            s,
        ));
    }
    Ok(InclusionReport { alpha, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_profile;

    fn cycle3() -> Profile {
        parse_profile(
            "alternatives: a b c\n\
             individual\nlinear a b c\n\
             individual\nlinear b c a\n\
             individual\nlinear c a b\n",
        )
        .unwrap()
    }

    fn strength(s: &str) -> Strength {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_majority_at_two_thirds() {
        let p = cycle3();
        let s = p.alternatives();
        let rel = majority_relation(MajorityType::M, strength("2/3"), &s, &p).unwrap();
        assert!(rel.has(0, 1) && rel.has(1, 2) && rel.has(2, 0));
        assert!(!rel.has(1, 0) && !rel.has(2, 1) && !rel.has(0, 2));
    }

    #[test]
    fn minority_d_is_complete() {
        let p = cycle3();
        let s = p.alternatives();
        for a in ["1/4", "1/2", "1/10"] {
            for kind in [MajorityType::D, MajorityType::P, MajorityType::R] {
                let rel = majority_relation(kind, strength(a), &s, &p).unwrap();
                assert!(rel.is_complete(), "{kind} at {a}");
            }
        }
    }

    #[test]
    fn strength_out_of_range_rejected() {
        assert!("0".parse::<Strength>().is_err());
        assert!("9/8".parse::<Strength>().is_err());
    }

    #[test]
    fn criticals_for_cycle() {
        let p = cycle3();
        let s = p.alternatives();
        let crit =
            critical_strengths(MajorityType::M, &s, &p, Ratio::ZERO, Ratio::ONE).unwrap();
        let shown: Vec<String> = crit.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["1/3", "2/3", "1"]);
    }

    #[test]
    fn criticals_single_individual() {
        let p = parse_profile("alternatives: a b\nindividual\na > b\n").unwrap();
        let s = p.alternatives();
        let crit =
            critical_strengths(MajorityType::M, &s, &p, Ratio::ZERO, Ratio::ONE).unwrap();
        assert_eq!(crit, vec![Strength::ONE]);
    }

    #[test]
    fn consecutive_critical_relations_differ() {
        let p = cycle3();
        let s = p.alternatives();
        for kind in MajorityType::ALL {
            let crit = critical_strengths(kind, &s, &p, Ratio::ZERO, Ratio::ONE).unwrap();
            let rels: Vec<Relation> = crit
                .iter()
                .map(|&a| majority_relation(kind, a, &s, &p).unwrap())
                .collect();
            for pair in rels.windows(2) {
                assert_ne!(pair[0], pair[1], "{kind}");
            }
        }
    }

    #[test]
    fn chain_spec_grammar() {
        let spec: ChainSpec = "D(0.5,1]+N1+M1".parse().unwrap();
        assert_eq!(spec.segments.len(), 1);
        assert_eq!(spec.segments[0].kind, MajorityType::D);
        assert_eq!(spec.segments[0].lo, Ratio::HALF);
        assert_eq!(spec.augments, vec![Augment::N1, Augment::M1]);
        assert_eq!(spec.to_string(), "D(1/2,1]+N1+M1");

        let spec: ChainSpec = "B(0,2/3]+B1+M1".parse().unwrap();
        assert_eq!(spec.segments[0].hi, strength("2/3"));

        let multi: ChainSpec = "M(1/2,1]+B(0,1/2]".parse().unwrap();
        assert_eq!(multi.segments.len(), 2);

        assert!("".parse::<ChainSpec>().is_err());
        assert!("M1".parse::<ChainSpec>().is_err());
        assert!("M(0.5,1]+N1+B(0,1]".parse::<ChainSpec>().is_err());
        assert!("Z(0,1]".parse::<ChainSpec>().is_err());
        assert!("M(1,0.5]".parse::<ChainSpec>().is_err());
    }

    #[test]
    fn build_chain_on_cycle() {
        let p = cycle3();
        let s = p.alternatives();
        let spec: ChainSpec = "M(0.5,1]".parse().unwrap();
        let built = build_chain(&spec, &s, &p).unwrap();
        // M at 2/3 (the cycle) and at 1 (empty)
        assert_eq!(built.members().len(), 2);
        assert_eq!(built.chain().members().len(), 2);
        let hulls = built.chain().members();
        assert_eq!(hulls[0], Relation::reflexive(p.universe()));
        assert_eq!(hulls[1], Relation::complete(p.universe()));
    }

    #[test]
    fn incompatible_augmentation_is_reported() {
        // one individual only equates a and b, the other only ranks c
        // over d: the unanimity-N relation and the B relation are
        // incomparable
        let p = parse_profile(
            "alternatives: a b c d\nindividual\na = b\nindividual\na = b\nc > d\n",
        )
        .unwrap();
        let s = p.alternatives();
        let spec: ChainSpec = "B(0.5,1]+N1".parse().unwrap();
        match build_chain(&spec, &s, &p) {
            Err(Error::NotNested(msg)) => assert!(msg.contains("incomparable"), "{msg}"),
            other => panic!("expected NotNested, got {other:?}"),
        }
    }

    #[test]
    fn unanimity_n_nested_under_d() {
        for seed in 0..30 {
            let p = crate::random::random_profile(seed, 4, 3, crate::random::PreferenceClass::QuasiOrder)
                .unwrap();
            let s = p.alternatives();
            let spec: ChainSpec = "D(0.5,1]+N1+M1".parse().unwrap();
            assert!(build_chain(&spec, &s, &p).is_ok(), "seed {seed}");
        }
    }

    #[test]
    fn inclusions_hold_on_cycle() {
        let p = cycle3();
        let s = p.alternatives();
        for a in ["0.6", "0.3", "0.55", "2/3", "1"] {
            let report = verify_inclusions(&p, &s, strength(a)).unwrap();
            for check in &report.checks {
                assert!(check.holds, "alpha {a}: {} {:?}", check.name, check.witness);
            }
        }
    }

    #[test]
    fn low_band_equalities_use_e_not_u() {
        // one strict voice plus two equivalences: R = P = E at 0.55 but U
        // is empty there
        let p = parse_profile(
            "alternatives: a b\nindividual\na > b\nindividual\na = b\nindividual\na = b\n",
        )
        .unwrap();
        let s = p.alternatives();
        let report = verify_inclusions(&p, &s, strength("0.55")).unwrap();
        assert!(report.all_hold());
        let u = majority_relation(MajorityType::U, strength("0.55"), &s, &p).unwrap();
        assert_eq!(u.pair_count(), 0);
        let r = majority_relation(MajorityType::R, strength("0.55"), &s, &p).unwrap();
        assert_eq!(r.pair_count(), 1);
    }

    #[test]
    fn antisymmetry_guarantees() {
        for seed in 0..25 {
            let p = crate::random::random_profile(
                seed,
                4,
                4,
                crate::random::PreferenceClass::ArbitraryReflexive,
            )
            .unwrap();
            let s = p.alternatives();
            for kind in MajorityType::ALL {
                let high = majority_relation(kind, strength("0.7"), &s, &p).unwrap();
                if !matches!(kind, MajorityType::N | MajorityType::Ns | MajorityType::D) {
                    assert!(high.is_antisymmetric(), "{kind} at 0.7 seed {seed}");
                }
                let low = majority_relation(kind, strength("0.3"), &s, &p).unwrap();
                if matches!(kind, MajorityType::U | MajorityType::E) {
                    assert!(low.is_antisymmetric(), "{kind} at 0.3 seed {seed}");
                }
            }
        }
    }
}
