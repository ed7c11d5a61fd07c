//! Seeded random profile generation for the simulation harness and the
//! randomized test batteries.

use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::relation::{Relation, Universe};
use crate::rng::Rng;

/// Preference classes the generator can draw from.
///
/// `ArbitraryReflexive` is uniform over all reflexive relations,
/// `LinearOrder` uniform over permutations, `TotalQuasiOrder` uniform
/// over ordered set partitions (up to 25 alternatives), and
/// `TournamentLike` uniform over complete antisymmetric relations.
/// `PartialOrder` and `QuasiOrder` use random-intersection heuristics:
/// membership in the class and seed determinism are guaranteed, the
/// distribution over the class is not uniform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreferenceClass {
    ArbitraryReflexive,
    LinearOrder,
    TotalQuasiOrder,
    PartialOrder,
    QuasiOrder,
    TournamentLike,
}

impl PreferenceClass {
    pub const ALL: [PreferenceClass; 6] = [
        PreferenceClass::ArbitraryReflexive,
        PreferenceClass::LinearOrder,
        PreferenceClass::TotalQuasiOrder,
        PreferenceClass::PartialOrder,
        PreferenceClass::QuasiOrder,
        PreferenceClass::TournamentLike,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PreferenceClass::ArbitraryReflexive => "arbitrary-reflexive",
            PreferenceClass::LinearOrder => "linear-order",
            PreferenceClass::TotalQuasiOrder => "total-quasi-order",
            PreferenceClass::PartialOrder => "partial-order",
            PreferenceClass::QuasiOrder => "quasi-order",
            PreferenceClass::TournamentLike => "tournament-like",
        }
    }
}

impl FromStr for PreferenceClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<PreferenceClass> {
        PreferenceClass::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::RuleSyntax(format!("unknown preference class `{s}`")))
    }
}

/// Short deterministic labels: `a`..`z`, then `x27`, `x28`, ...
pub fn default_labels(m: usize) -> Vec<String> {
    (0..m)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}

/// Draws a profile of `n` independent individual relations over `m`
/// alternatives. A fixed seed yields a fixed profile.
pub fn random_profile(seed: u64, m: usize, n: usize, class: PreferenceClass) -> Result<Profile> {
    let universe = Universe::new(default_labels(m))?;
    if n == 0 {
        return Err(Error::EmptyProfile);
    }
    let mut rng = Rng::new(seed);
    let individuals = (0..n)
        .map(|_| random_relation(&mut rng, &universe, class))
        .collect();
    Profile::new(universe, individuals)
}

/// Draws one relation of the given class.
pub fn random_relation(
    rng: &mut Rng,
    universe: &Arc<Universe>,
    class: PreferenceClass,
) -> Relation {
    let m = universe.size();
    match class {
        PreferenceClass::ArbitraryReflexive => {
            let mut rel = Relation::reflexive(universe);
            for x in 0..m {
                for y in 0..m {
                    if x != y && rng.bool() {
                        rel.set(x, y);
                    }
                }
            }
            rel
        }
        PreferenceClass::LinearOrder => {
            let mut order: Vec<usize> = (0..m).collect();
            rng.shuffle(&mut order);
            chain_relation(universe, &[order])
        }
        PreferenceClass::TotalQuasiOrder => {
            let blocks = random_ordered_partition(rng, m);
            weak_order_relation(universe, &blocks)
        }
        PreferenceClass::TournamentLike => {
            let mut rel = Relation::reflexive(universe);
            for x in 0..m {
                for y in x + 1..m {
                    if rng.bool() {
                        rel.set(x, y);
                    } else {
                        rel.set(y, x);
                    }
                }
            }
            rel
        }
        PreferenceClass::PartialOrder => {
            // intersection of a few random linear orders
            let k = 1 + rng.index(3);
            let mut rel = Relation::complete(universe);
            for _ in 0..k {
                let mut order: Vec<usize> = (0..m).collect();
                rng.shuffle(&mut order);
                rel = intersect(&rel, &chain_relation(universe, &[order]));
            }
            rel
        }
        PreferenceClass::QuasiOrder => {
            // intersection of a few random total quasi-orders
            let k = 1 + rng.index(3);
            let mut rel = Relation::complete(universe);
            for _ in 0..k {
                let blocks = if m <= MAX_UNIFORM_PARTITION {
                    random_ordered_partition(rng, m)
                } else {
                    heuristic_ordered_partition(rng, m)
                };
                rel = intersect(&rel, &weak_order_relation(universe, &blocks));
            }
            rel
        }
    }
}

fn intersect(a: &Relation, b: &Relation) -> Relation {
    let mut out = Relation::empty(a.universe());
    for x in 0..a.size() {
        for y in 0..a.size() {
            if a.has(x, y) && b.has(x, y) {
                out.set(x, y);
            }
        }
    }
    out
}

fn chain_relation(universe: &Arc<Universe>, orders: &[Vec<usize>]) -> Relation {
    let mut rel = Relation::reflexive(universe);
    for order in orders {
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                rel.set(order[i], order[j]);
            }
        }
    }
    rel
}

fn weak_order_relation(universe: &Arc<Universe>, blocks: &[Vec<usize>]) -> Relation {
    let mut rel = Relation::reflexive(universe);
    for (bi, block) in blocks.iter().enumerate() {
        for &x in block {
            for not_better in &blocks[bi..] {
                for &y in not_better {
                    rel.set(x, y);
                }
            }
        }
    }
    rel
}

const MAX_UNIFORM_PARTITION: usize = 25;

/// Ordered-partition (Fubini) counts, `counts[k]` for k elements.
fn fubini(upto: usize) -> Vec<u128> {
    let mut a = vec![0u128; upto + 1];
    a[0] = 1;
    for k in 1..=upto {
        let mut total = 0u128;
        for first in 1..=k {
            total += binom(k, first) * a[k - first];
        }
        a[k] = total;
    }
    a
}

fn binom(n: usize, k: usize) -> u128 {
    let mut out = 1u128;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// Uniform draw from `0..bound` over 128 bits, by rejection.
fn below_u128(rng: &mut Rng, bound: u128) -> u128 {
    debug_assert!(bound > 0);
    let limit = u128::MAX - u128::MAX % bound;
    loop {
        let wide = (rng.next_u64() as u128) << 64 | rng.next_u64() as u128;
        if wide < limit {
            return wide % bound;
        }
    }
}

/// Uniform ordered set partition of `0..m` (exact counting, m <= 25).
fn random_ordered_partition(rng: &mut Rng, m: usize) -> Vec<Vec<usize>> {
    assert!(m <= MAX_UNIFORM_PARTITION, "uniform partition limited to 25");
    let counts = fubini(m);
    let mut remaining: Vec<usize> = (0..m).collect();
    let mut blocks = Vec::new();
    while !remaining.is_empty() {
        let k = remaining.len();
        // choose the size of the top block with weight C(k,s)*fubini(k-s)
        let mut pick = below_u128(rng, counts[k]);
        let mut size = 0;
        for s in 1..=k {
            let weight = binom(k, s) * counts[k - s];
            if pick < weight {
                size = s;
                break;
            }
            pick -= weight;
        }
        // choose the block members uniformly among the remaining
        rng.shuffle(&mut remaining);
        let mut block: Vec<usize> = remaining.drain(..size).collect();
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

/// Non-uniform fallback for large universes: random ranking with
/// geometric tie blocks.
fn heuristic_ordered_partition(rng: &mut Rng, m: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..m).collect();
    rng.shuffle(&mut items);
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < m {
        let mut size = 1;
        while i + size < m && rng.bool() {
            size += 1;
        }
        let mut block: Vec<usize> = items[i..i + size].to_vec();
        block.sort_unstable();
        blocks.push(block);
        i += size;
    }
    blocks
}

/// True when every individual relation belongs to the class.
pub fn profile_in_class(profile: &Profile, class: PreferenceClass) -> bool {
    profile.individuals().iter().all(|r| {
        let flags = r.classify();
        match class {
            PreferenceClass::ArbitraryReflexive => flags.reflexive,
            PreferenceClass::LinearOrder => flags.linear_order,
            PreferenceClass::TotalQuasiOrder => flags.quasi_order && flags.complete,
            PreferenceClass::PartialOrder => flags.partial_order,
            PreferenceClass::QuasiOrder => flags.quasi_order,
            PreferenceClass::TournamentLike => flags.complete && flags.antisymmetric,
        }
    })
}
