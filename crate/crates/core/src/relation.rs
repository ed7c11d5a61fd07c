//! Finite relation algebra over a fixed universe of alternatives.
//!
//! Relations are stored as dense bit tables (one `u64` row per
//! alternative), which caps the universe at 64 alternatives. All
//! operations are pure and return new values.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_ALTERNATIVES: usize = 64;

/// An ordered set of distinct alternative labels.
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(Error::BadLabel(label.into(), "label is empty"));
    }
    if label.chars().any(|c| c.is_whitespace()) {
        return Err(Error::BadLabel(label.into(), "label contains whitespace"));
    }
    Ok(())
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Universe>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_ALTERNATIVES {
            return Err(Error::UniverseTooLarge(labels.len()));
        }
        let mut index = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            check_label(label)?;
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Arc::new(Universe { labels, index }))
    }

    /// Universe with labels forbidden to contain braces (the profile file
    /// format reserves them for quotient classes).
    pub fn for_profile<I, S>(labels: I) -> Result<Arc<Universe>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let u = Universe::new(labels)?;
        for label in u.labels() {
            if label.contains('{') || label.contains('}') {
                return Err(Error::BadLabel(label.clone(), "label contains braces"));
            }
        }
        Ok(u)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// Mask with one bit per alternative.
    pub fn full_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }
}

fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// A subset of a universe, kept as a bit mask.
#[derive(Clone, Debug)]
pub struct AltSet {
    universe: Arc<Universe>,
    mask: u64,
}

impl PartialEq for AltSet {
    fn eq(&self, other: &AltSet) -> bool {
        self.universe == other.universe && self.mask == other.mask
    }
}
impl Eq for AltSet {}

impl AltSet {
    pub fn full(universe: &Arc<Universe>) -> AltSet {
        AltSet {
            mask: universe.full_mask(),
            universe: Arc::clone(universe),
        }
    }

    pub fn empty(universe: &Arc<Universe>) -> AltSet {
        AltSet {
            universe: Arc::clone(universe),
            mask: 0,
        }
    }

    pub fn from_mask(universe: &Arc<Universe>, mask: u64) -> AltSet {
        debug_assert_eq!(mask & !universe.full_mask(), 0);
        AltSet {
            universe: Arc::clone(universe),
            mask: mask & universe.full_mask(),
        }
    }

    pub fn from_indices(universe: &Arc<Universe>, indices: &[usize]) -> AltSet {
        let mut mask = 0;
        for &i in indices {
            assert!(i < universe.size());
            mask |= 1 << i;
        }
        AltSet::from_mask(universe, mask)
    }

    pub fn from_labels<S: AsRef<str>>(universe: &Arc<Universe>, labels: &[S]) -> Result<AltSet> {
        let mut mask = 0;
        for label in labels {
            mask |= 1u64 << universe.index_of(label.as_ref())?;
        }
        Ok(AltSet::from_mask(universe, mask))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    pub fn is_subset_of(&self, other: &AltSet) -> bool {
        self.universe == other.universe && self.mask & !other.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..self.universe.size()).filter(move |i| mask >> i & 1 == 1)
    }

    pub fn labels(&self) -> Vec<String> {
        self.iter().map(|i| self.universe.label(i).to_string()).collect()
    }

    /// Labels in lexicographic order (output order for the CLI).
    pub fn sorted_labels(&self) -> Vec<String> {
        let mut labels = self.labels();
        labels.sort();
        labels
    }

    pub fn union(&self, other: &AltSet) -> AltSet {
        debug_assert!(self.universe == other.universe);
        AltSet::from_mask(&self.universe, self.mask | other.mask)
    }

    pub fn difference(&self, other: &AltSet) -> AltSet {
        debug_assert!(self.universe == other.universe);
        AltSet::from_mask(&self.universe, self.mask & !other.mask)
    }

    pub fn intersection(&self, other: &AltSet) -> AltSet {
        debug_assert!(self.universe == other.universe);
        AltSet::from_mask(&self.universe, self.mask & other.mask)
    }
}

impl fmt::Display for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.sorted_labels().join(","))
    }
}

/// A binary relation over a universe, one bit row per alternative.
///
/// Most of the library works with reflexive relations; the part
/// extraction below also produces irreflexive values (strict part,
/// undecidedness part), so reflexivity is a documented convention of the
/// constructors rather than a type invariant.
#[derive(Clone)]
pub struct Relation {
    universe: Arc<Universe>,
    rows: Vec<u64>,
}

impl PartialEq for Relation {
    fn eq(&self, other: &Relation) -> bool {
        self.universe == other.universe && self.rows == other.rows
    }
}
impl Eq for Relation {}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation[{}]", self.describe())
    }
}

/// Classification flags for a relation; see [`Relation::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationFlags {
    pub reflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
    pub complete: bool,
    pub quasi_order: bool,
    pub partial_order: bool,
    pub linear_order: bool,
    /// No cycle `x P y P z P x` in the strict part.
    pub three_acyclic: bool,
    /// Weakening both sides of a strict preference keeps it strict:
    /// `x R a`, `a P b`, `b R y` imply `x P y`.
    pub rpr_in_p: bool,
}

impl Relation {
    /// The diagonal-only relation (the smallest reflexive relation).
    pub fn reflexive(universe: &Arc<Universe>) -> Relation {
        let mut rows = vec![0; universe.size()];
        for (i, row) in rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        Relation {
            universe: Arc::clone(universe),
            rows,
        }
    }

    /// The empty relation (no pairs at all, not even the diagonal).
    pub fn empty(universe: &Arc<Universe>) -> Relation {
        Relation {
            universe: Arc::clone(universe),
            rows: vec![0; universe.size()],
        }
    }

    /// The complete relation on the universe.
    pub fn complete(universe: &Arc<Universe>) -> Relation {
        Relation {
            universe: Arc::clone(universe),
            rows: vec![universe.full_mask(); universe.size()],
        }
    }

    /// Reflexive relation containing the given ordered pairs of labels.
    pub fn from_pairs<S: AsRef<str>>(universe: &Arc<Universe>, pairs: &[(S, S)]) -> Result<Relation> {
        let mut rel = Relation::reflexive(universe);
        for (x, y) in pairs {
            let xi = universe.index_of(x.as_ref())?;
            let yi = universe.index_of(y.as_ref())?;
            rel.set(xi, yi);
        }
        Ok(rel)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.size()
    }

    pub fn has(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn set(&mut self, x: usize, y: usize) {
        self.rows[x] |= 1 << y;
    }

    pub fn clear(&mut self, x: usize, y: usize) {
        self.rows[x] &= !(1 << y);
    }

    pub fn row(&self, x: usize) -> u64 {
        self.rows[x]
    }

    /// Mask of predecessors of `y`: every `x` with `x R y`.
    pub fn column(&self, y: usize) -> u64 {
        let mut col = 0;
        for (x, row) in self.rows.iter().enumerate() {
            col |= (row >> y & 1) << x;
        }
        col
    }

    /// Number of ordered pairs off the diagonal.
    pub fn pair_count(&self) -> usize {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| (row & !(1u64 << i)).count_ones() as usize)
            .sum()
    }

    /// `other` contains every pair of `self`.
    pub fn subset_of(&self, other: &Relation) -> bool {
        self.universe == other.universe
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| row >> i & 1 == 1)
    }

    pub fn is_transitive(&self) -> bool {
        // x R k and k R y must give x R y: row[x] must absorb row[k]
        // for every successor k of x.
        for x in 0..self.size() {
            let mut succ = self.rows[x];
            while succ != 0 {
                let k = succ.trailing_zeros() as usize;
                succ &= succ - 1;
                if self.rows[k] & !self.rows[x] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_antisymmetric(&self) -> bool {
        for x in 0..self.size() {
            for y in x + 1..self.size() {
                if self.has(x, y) && self.has(y, x) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        for x in 0..self.size() {
            for y in x + 1..self.size() {
                if !self.has(x, y) && !self.has(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Strict / equivalence / undecided parts of a reflexive relation.
    ///
    /// `p` is the asymmetric part (irreflexive), `e` the symmetric part
    /// (contains the diagonal), and `u` holds the off-diagonal pairs
    /// related in neither direction (irreflexive, symmetric). Together
    /// with `p` transposed they partition the off-diagonal pairs.
    pub fn parts(&self) -> (Relation, Relation, Relation) {
        let m = self.size();
        let mut p = Relation::empty(&self.universe);
        let mut e = Relation::empty(&self.universe);
        let mut u = Relation::empty(&self.universe);
        for x in 0..m {
            for y in 0..m {
                let fwd = self.has(x, y);
                let bwd = self.has(y, x);
                if fwd && bwd {
                    e.set(x, y);
                } else if fwd {
                    p.set(x, y);
                } else if !bwd && x != y {
                    u.set(x, y);
                }
            }
        }
        (p, e, u)
    }

    /// Restriction to `s`: keeps pairs with both ends in `s` and the full
    /// diagonal, so the result is reflexive.
    pub fn restrict(&self, s: &AltSet) -> Result<Relation> {
        same_universe(&self.universe, &s.universe)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut out = Relation::reflexive(&self.universe);
        for x in s.iter() {
            out.rows[x] |= self.rows[x] & s.mask;
        }
        Ok(out)
    }

    /// Smallest reflexive transitive relation on `s` containing the
    /// restriction of `self` to `s`.
    pub fn transitive_hull(&self, s: &AltSet) -> Result<Relation> {
        let mut out = self.restrict(s)?;
        let m = self.size();
        // Warshall closure over bit rows.
        for k in 0..m {
            let row_k = out.rows[k];
            for x in 0..m {
                if out.rows[x] >> k & 1 == 1 {
                    out.rows[x] |= row_k;
                }
            }
        }
        Ok(out)
    }

    /// The optimal elements of `self` within `s`: every `x` such that
    /// `y R x` implies `x R y` for all `y` in `s`. May be empty when the
    /// relation is not transitive.
    pub fn optimal_elements(&self, s: &AltSet) -> Result<AltSet> {
        same_universe(&self.universe, &s.universe)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut mask = 0;
        for x in s.iter() {
            let above = self.column(x) & s.mask;
            if above & !self.rows[x] == 0 {
                mask |= 1 << x;
            }
        }
        Ok(AltSet::from_mask(&self.universe, mask))
    }

    pub fn classify(&self) -> RelationFlags {
        let reflexive = self.is_reflexive();
        let transitive = self.is_transitive();
        let antisymmetric = self.is_antisymmetric();
        let complete = self.is_complete();
        let (p, _, _) = self.parts();
        let m = self.size();
        let mut three_acyclic = true;
        'outer: for x in 0..m {
            for y in 0..m {
                if !p.has(x, y) {
                    continue;
                }
                // some z with y P z and z P x?
                if p.rows[y] & p.column(x) != 0 {
                    three_acyclic = false;
                    break 'outer;
                }
            }
        }
        let mut rpr_in_p = true;
        'outer2: for a in 0..m {
            for b in 0..m {
                if !p.has(a, b) {
                    continue;
                }
                // x R a and b R y must give x P y
                let xs = self.column(a);
                let ys = self.rows[b];
                for x in 0..m {
                    if xs >> x & 1 == 0 {
                        continue;
                    }
                    if ys & !p.rows[x] != 0 {
                        rpr_in_p = false;
                        break 'outer2;
                    }
                }
            }
        }
        let quasi_order = reflexive && transitive;
        let partial_order = quasi_order && antisymmetric;
        RelationFlags {
            reflexive,
            transitive,
            antisymmetric,
            complete,
            quasi_order,
            partial_order,
            linear_order: partial_order && complete,
            three_acyclic,
            rpr_in_p,
        }
    }

    /// Writes a quasi-order as an intersection of at most `m` total
    /// quasi-orders, each of the two-class form where some subset is
    /// preferred to the rest. Uses the principal predecessor set of each
    /// alternative as the upper class.
    pub fn decompose_quasiorder(&self) -> Result<Vec<Relation>> {
        if !self.is_reflexive() {
            return Err(Error::NotQuasiOrder("relation is not reflexive".into()));
        }
        if !self.is_transitive() {
            return Err(Error::NotQuasiOrder("relation is not transitive".into()));
        }
        let m = self.size();
        let full = self.universe.full_mask();
        let mut class_masks: Vec<u64> = Vec::new();
        for z in 0..m {
            let upper = self.column(z);
            // a full predecessor class yields the complete relation,
            // which never sharpens the intersection
            if upper != full && !class_masks.contains(&upper) {
                class_masks.push(upper);
            }
        }
        if class_masks.is_empty() {
            return Ok(vec![Relation::complete(&self.universe)]);
        }
        let mut factors = Vec::new();
        for upper in class_masks {
            let mut rel = Relation::empty(&self.universe);
            for x in 0..m {
                rel.rows[x] = if upper >> x & 1 == 1 { full } else { full & !upper };
            }
            factors.push(rel);
        }
        Ok(factors)
    }

    /// Top cycle of a tournament restricted to `s`: the optimal elements
    /// of the transitive hull.
    pub fn top_cycle(&self, s: &AltSet) -> Result<AltSet> {
        let restricted = self.restrict(s)?;
        for x in s.iter() {
            for y in s.iter() {
                if x >= y {
                    continue;
                }
                let fwd = restricted.has(x, y);
                let bwd = restricted.has(y, x);
                if fwd && bwd {
                    return Err(Error::NotTournament(format!(
                        "{} and {} are related both ways",
                        self.universe.label(x),
                        self.universe.label(y)
                    )));
                }
                if !fwd && !bwd {
                    return Err(Error::NotTournament(format!(
                        "{} and {} are not comparable",
                        self.universe.label(x),
                        self.universe.label(y)
                    )));
                }
            }
        }
        self.transitive_hull(s)?.optimal_elements(s)
    }

    /// Every related ordered pair off the diagonal, as label tuples in
    /// row-major order.
    pub fn related_pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for x in 0..self.size() {
            for y in 0..self.size() {
                if x != y && self.has(x, y) {
                    out.push((
                        self.universe.label(x).to_string(),
                        self.universe.label(y).to_string(),
                    ));
                }
            }
        }
        out
    }

    /// Compact rendering of the off-diagonal pairs, e.g. `a>b b=c`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for x in 0..self.size() {
            for y in 0..self.size() {
                if x == y || !self.has(x, y) {
                    continue;
                }
                if self.has(y, x) {
                    if x < y {
                        parts.push(format!("{}={}", self.universe.label(x), self.universe.label(y)));
                    }
                } else {
                    parts.push(format!("{}>{}", self.universe.label(x), self.universe.label(y)));
                }
            }
        }
        if parts.is_empty() {
            "(diagonal)".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// A nested family `Q_1 ⊆ … ⊆ Q_k` of quasi-orders on a common base set.
/// Nestedness and transitivity are validated eagerly at construction; a
/// violated containment is a hard error, never silently reordered.
#[derive(Clone, Debug)]
pub struct QuasiOrderChain {
    base: AltSet,
    members: Vec<Relation>,
}

impl QuasiOrderChain {
    /// Builds a chain from members already sorted by containment
    /// (smallest first).
    pub fn new(base: AltSet, members: Vec<Relation>) -> Result<QuasiOrderChain> {
        if base.is_empty() {
            return Err(Error::EmptySet);
        }
        for member in &members {
            same_universe(member.universe(), base.universe())?;
            if !member.is_reflexive() || !member.is_transitive() {
                return Err(Error::NotQuasiOrder(format!(
                    "chain member {}",
                    member.describe()
                )));
            }
        }
        for pair in members.windows(2) {
            if !pair[0].subset_of(&pair[1]) {
                return Err(Error::NotNested(nesting_witness(&pair[0], &pair[1])));
            }
        }
        Ok(QuasiOrderChain { base, members })
    }

    /// Sorts the members by pair count and then validates containment.
    pub fn new_sorted(base: AltSet, mut members: Vec<Relation>) -> Result<QuasiOrderChain> {
        members.sort_by_key(Relation::pair_count);
        members.dedup();
        QuasiOrderChain::new(base, members)
    }

    pub fn base(&self) -> &AltSet {
        &self.base
    }

    pub fn members(&self) -> &[Relation] {
        &self.members
    }

    /// The set of all elements optimal in every member, obtained by the
    /// descending restriction: start with the optimal elements of the
    /// largest member and restrict each smaller member to the survivors.
    /// Nonempty for every valid chain.
    pub fn common_optimals(&self) -> AltSet {
        let mut cur = self.base.clone();
        for q in self.members.iter().rev() {
            cur = q
                .optimal_elements(&cur)
                .expect("chain base is nonempty");
            debug_assert!(!cur.is_empty(), "quasi-order with no optimal elements");
        }
        cur
    }

    /// Like [`common_optimals`](Self::common_optimals), but records the
    /// surviving set after each member (largest member first).
    pub fn common_optimals_steps(&self) -> Vec<(Relation, AltSet)> {
        let mut cur = self.base.clone();
        let mut steps = Vec::new();
        for q in self.members.iter().rev() {
            cur = q.optimal_elements(&cur).expect("chain base is nonempty");
            steps.push((q.clone(), cur.clone()));
        }
        steps
    }
}

pub(crate) fn nesting_witness(a: &Relation, b: &Relation) -> String {
    let mut only_a = None;
    let mut only_b = None;
    for x in 0..a.size() {
        for y in 0..a.size() {
            if a.has(x, y) && !b.has(x, y) && only_a.is_none() {
                only_a = Some((x, y));
            }
            if b.has(x, y) && !a.has(x, y) && only_b.is_none() {
                only_b = Some((x, y));
            }
        }
    }
    let u = a.universe();
    let show = |p: Option<(usize, usize)>| match p {
        Some((x, y)) => format!("({},{})", u.label(x), u.label(y)),
        None => "-".to_string(),
    };
    format!(
        "members are incomparable: first has {} only, second has {} only",
        show(only_a),
        show(only_b)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe(labels: &[&str]) -> Arc<Universe> {
        Universe::new(labels.iter().copied()).unwrap()
    }

    fn rel(u: &Arc<Universe>, pairs: &[(&str, &str)]) -> Relation {
        Relation::from_pairs(u, pairs).unwrap()
    }

    #[test]
    fn universe_rejects_bad_input() {
        assert!(matches!(Universe::new(Vec::<String>::new()), Err(Error::EmptyUniverse)));
        assert!(matches!(
            Universe::new(vec!["a", "a"]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            Universe::new(vec!["a b"]),
            Err(Error::BadLabel(..))
        ));
        let many: Vec<String> = (0..65).map(|i| format!("x{i}")).collect();
        assert!(matches!(Universe::new(many), Err(Error::UniverseTooLarge(65))));
    }

    #[test]
    fn full_width_universe_works() {
        let labels: Vec<String> = (0..64).map(|i| format!("x{i}")).collect();
        let u = Universe::new(labels).unwrap();
        assert_eq!(u.full_mask(), u64::MAX);
        let full = Relation::complete(&u);
        assert!(full.is_complete() && full.is_reflexive() && full.is_transitive());
        let s = AltSet::full(&u);
        assert_eq!(s.len(), 64);
        assert_eq!(full.optimal_elements(&s).unwrap(), s);
        let mut chainy = Relation::reflexive(&u);
        chainy.set(0, 63);
        chainy.set(63, 1);
        let hull = chainy.transitive_hull(&s).unwrap();
        assert!(hull.has(0, 1));
    }

    #[test]
    fn restrict_drops_pairs_leaving_the_set() {
        let u = universe(&["a", "b", "c"]);
        let r = rel(&u, &[("a", "b"), ("b", "c"), ("a", "c")]);
        let s = AltSet::from_labels(&u, &["a", "c"]).unwrap();
        let restricted = r.restrict(&s).unwrap();
        let a = u.index_of("a").unwrap();
        let b = u.index_of("b").unwrap();
        let c = u.index_of("c").unwrap();
        assert!(restricted.has(a, c));
        assert!(!restricted.has(a, b));
        assert!(!restricted.has(b, c));
        assert!(restricted.is_reflexive());
    }

    #[test]
    fn restrict_of_full_relation_is_full_on_set() {
        let u = universe(&["a", "b", "c"]);
        let full = Relation::complete(&u);
        let s = AltSet::from_labels(&u, &["b", "c"]).unwrap();
        let restricted = full.restrict(&s).unwrap();
        let b = u.index_of("b").unwrap();
        let c = u.index_of("c").unwrap();
        assert!(restricted.has(b, c) && restricted.has(c, b));
    }

    #[test]
    fn restrict_requires_nonempty_subset() {
        let u = universe(&["a", "b"]);
        let r = Relation::reflexive(&u);
        assert!(matches!(r.restrict(&AltSet::empty(&u)), Err(Error::EmptySet)));
        let other = universe(&["x", "y"]);
        assert!(matches!(
            r.restrict(&AltSet::full(&other)),
            Err(Error::UniverseMismatch)
        ));
    }

    #[test]
    fn parts_split_pairs() {
        let u = universe(&["a", "b"]);
        let a = u.index_of("a").unwrap();
        let b = u.index_of("b").unwrap();

        let sym = rel(&u, &[("a", "b"), ("b", "a")]);
        let (p, e, _) = sym.parts();
        assert_eq!(p.pair_count(), 0);
        assert!(e.has(a, b) && e.has(b, a));

        let strict = rel(&u, &[("a", "b")]);
        let (p, _, us) = strict.parts();
        assert!(p.has(a, b) && !p.has(b, a));
        assert_eq!(us.pair_count(), 0);

        let blank = Relation::reflexive(&u);
        let (p, _, us) = blank.parts();
        assert_eq!(p.pair_count(), 0);
        assert!(us.has(a, b) && us.has(b, a));
    }

    #[test]
    fn hull_adds_transitive_pairs() {
        let u = universe(&["a", "b", "c"]);
        let r = rel(&u, &[("a", "b"), ("b", "c")]);
        let s = AltSet::full(&u);
        let hull = r.transitive_hull(&s).unwrap();
        assert!(hull.has(0, 2));
        assert!(hull.is_transitive());
        // already transitive input is unchanged
        assert_eq!(hull.transitive_hull(&s).unwrap(), hull);
    }

    #[test]
    fn hull_of_three_cycle_is_complete() {
        let u = universe(&["a", "b", "c"]);
        let r = rel(&u, &[("a", "b"), ("b", "c"), ("c", "a")]);
        let hull = r.transitive_hull(&AltSet::full(&u)).unwrap();
        assert_eq!(hull, Relation::complete(&u));
    }

    #[test]
    fn optimal_elements_cases() {
        let u = universe(&["a", "b", "c"]);
        let s = AltSet::full(&u);
        let cycle = rel(&u, &[("a", "b"), ("b", "c"), ("c", "a")]);
        // raw cycle: every element is beaten without a direct answer
        assert!(cycle.optimal_elements(&s).unwrap().is_empty());
        // hulled cycle: everybody optimal
        let hull = cycle.transitive_hull(&s).unwrap();
        assert_eq!(hull.optimal_elements(&s).unwrap(), s);

        let u2 = universe(&["a", "b"]);
        let top = rel(&u2, &[("a", "b")]);
        let opt = top.optimal_elements(&AltSet::full(&u2)).unwrap();
        assert_eq!(opt.sorted_labels(), vec!["a"]);
    }

    #[test]
    fn classify_linear_order() {
        let u = universe(&["a", "b", "c"]);
        let lin = rel(&u, &[("a", "b"), ("b", "c"), ("a", "c")]);
        let flags = lin.classify();
        assert!(flags.reflexive);
        assert!(flags.transitive);
        assert!(flags.antisymmetric);
        assert!(flags.complete);
        assert!(flags.quasi_order);
        assert!(flags.partial_order);
        assert!(flags.linear_order);
        assert!(flags.three_acyclic);
        assert!(flags.rpr_in_p);
    }

    #[test]
    fn classify_flags_failures() {
        let u = universe(&["a", "b", "c"]);
        let broken = rel(&u, &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "b")]);
        assert!(!broken.classify().transitive);

        let cycle = rel(&u, &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert!(!cycle.classify().three_acyclic);
    }

    #[test]
    fn decompose_identity_relation() {
        let u = universe(&["a", "b"]);
        let q = Relation::reflexive(&u);
        let factors = q.decompose_quasiorder().unwrap();
        assert_eq!(factors.len(), 2);
        let mut meet = Relation::complete(&u);
        for f in &factors {
            for x in 0..2 {
                meet.rows[x] &= f.rows[x];
            }
        }
        assert_eq!(meet, q);
    }

    #[test]
    fn decompose_total_quasi_order_can_be_itself() {
        let u = universe(&["a", "b"]);
        // two classes: {a} above {b}
        let q = rel(&u, &[("a", "b")]);
        let mut q = q;
        q.set(0, 0);
        q.set(1, 1);
        let factors = q.decompose_quasiorder().unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], q);
    }

    #[test]
    fn decompose_rejects_non_quasi_order() {
        let u = universe(&["a", "b", "c"]);
        let r = rel(&u, &[("a", "b"), ("b", "c")]);
        assert!(matches!(r.decompose_quasiorder(), Err(Error::NotQuasiOrder(_))));
    }

    #[test]
    fn top_cycle_cases() {
        let u = universe(&["a", "b", "c"]);
        let s = AltSet::full(&u);
        let linear = rel(&u, &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(linear.top_cycle(&s).unwrap().sorted_labels(), vec!["a"]);

        let cycle = rel(&u, &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(cycle.top_cycle(&s).unwrap(), s);

        let incomplete = rel(&u, &[("a", "b")]);
        assert!(matches!(incomplete.top_cycle(&s), Err(Error::NotTournament(_))));
    }

    #[test]
    fn top_cycle_above_inner_cycle() {
        let u = universe(&["a", "b", "c", "d"]);
        let t = rel(
            &u,
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "a"),
                ("a", "d"),
                ("b", "d"),
                ("c", "d"),
            ],
        );
        let tc = t.top_cycle(&AltSet::full(&u)).unwrap();
        assert_eq!(tc.sorted_labels(), vec!["a", "b", "c"]);
    }

    #[test]
    fn chain_requires_nesting() {
        let u = universe(&["a", "b", "c"]);
        let small = rel(&u, &[("a", "b")]);
        let big = rel(&u, &[("a", "b"), ("a", "c")]);
        let other = rel(&u, &[("b", "c")]);
        let s = AltSet::full(&u);
        assert!(QuasiOrderChain::new(s.clone(), vec![small.clone(), big.clone()]).is_ok());
        assert!(matches!(
            QuasiOrderChain::new_sorted(s, vec![big, other]),
            Err(Error::NotNested(_))
        ));
    }

    #[test]
    fn common_optimals_single_member() {
        let u = universe(&["a", "b"]);
        let s = AltSet::full(&u);
        let q = rel(&u, &[("a", "b")]);
        let chain = QuasiOrderChain::new(s, vec![q.clone()]).unwrap();
        assert_eq!(chain.common_optimals(), q.optimal_elements(chain.base()).unwrap());
    }

    #[test]
    fn common_optimals_cycle_under_complete() {
        let u = universe(&["a", "b", "c"]);
        let s = AltSet::full(&u);
        let hull = rel(&u, &[("a", "b"), ("b", "c"), ("c", "a")])
            .transitive_hull(&s)
            .unwrap();
        let chain =
            QuasiOrderChain::new_sorted(s.clone(), vec![hull, Relation::complete(&u)]).unwrap();
        assert_eq!(chain.common_optimals(), s);
    }
}
