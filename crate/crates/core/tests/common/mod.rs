//! Shared fixture profiles for the integration suites. Each builder
//! documents the structural role the fixture plays in the tests.
#![allow(dead_code)]

use relchoice::prelude::*;

fn parsed(text: &str) -> Profile {
    parse_profile(text).expect("fixture parses")
}

/// The minimal cyclic-majority electorate: three voters whose linear
/// orders rotate a 3-cycle onto the pairwise majorities.
pub fn cycle3() -> Profile {
    parsed(
        "alternatives: a b c\n\
         individual\nlinear a b c\n\
         individual\nlinear b c a\n\
         individual\nlinear c a b\n",
    )
}

/// Four voters over three alternatives whose half-strength strict
/// majority is `c > b` with `a = b`; the pairwise-acceptance extension
/// admits an alternative that is not hull-optimal.
pub fn jury4() -> Profile {
    parsed(
        "alternatives: a b c\n\
         individual\na = c\na > b\nc > b\n\
         individual\nb > a\nb > c\na = c\n\
         individual\nlinear c b a\n\
         individual\nlinear a c b\n",
    )
}

/// Seven voters over three alternatives; the strict-majority chain over
/// (1/7, 4/7] has exactly three members and the pairwise-winner cut
/// picks an alternative outside the middle member's optimals.
pub fn seven_voters() -> Profile {
    parsed(
        "alternatives: a b c\n\
         individual\nlinear a c b\n\
         individual\nlinear a c b\n\
         individual\nlinear c b a\n\
         individual\nb > a\nb > c\na = c\n\
         individual\nb > a\nb > c\na = c\n\
         individual\na = c\na > b\nc > b\n\
         individual\na = c\na > b\nc > b\n",
    )
}

/// Two voters, two disjoint ranked pairs with nothing across: the
/// classic case where two chosen alternatives part ways in a superset.
pub fn twin_pairs() -> Profile {
    parsed(
        "alternatives: a b c d\n\
         individual\na > b\nc > d\n\
         individual\na > b\nc > d\n",
    )
}

/// Three sibling electorates over four alternatives, one perturbation
/// step apart, on which every majority family has the same optimal set;
/// single favoring steps can never break such ties.
pub fn focus_shift() -> [Profile; 3] {
    [
        parsed(
            "alternatives: a b c d\n\
             individual\nlinear d a c b\n\
             individual\nlinear c b d a\n\
             individual\nlinear b a d c\n",
        ),
        parsed(
            "alternatives: a b c d\n\
             individual\nlinear d a c b\n\
             individual\nlinear c b d a\n\
             individual\na = b\na > d\na > c\nb > d\nb > c\nd > c\n",
        ),
        parsed(
            "alternatives: a b c d\n\
             individual\nlinear d a c b\n\
             individual\nlinear c b d a\n\
             individual\nlinear a b d c\n",
        ),
    ]
}

/// Two voters over six alternatives with one genuine profile component
/// ({b,bp}) and one set ({c,cp}) that is a component of the first
/// relation only.
pub fn clustered() -> Profile {
    parsed(
        "alternatives: a b bp c cp d\n\
         individual\n\
         a > b\na > c\nb > bp\nc > cp\nbp > d\na > bp\na > cp\na > d\nb > d\n\
         individual\n\
         b = bp\nc > b\nc > bp\nc > d\nc > cp\nc > a\nb > cp\nbp > cp\nd > a\n",
    )
}

/// Two voters undecided about x and y, each decided about z in one
/// direction only; adding z collapses the choice to x.
pub fn delegation_pair() -> Profile {
    parsed(
        "alternatives: x y z\n\
         individual\nx > z\n\
         individual\nz > y\n",
    )
}

pub fn set(profile: &Profile, labels: &[&str]) -> AltSet {
    AltSet::from_labels(profile.universe(), labels).expect("labels exist")
}

pub fn rule(text: &str) -> RuleSpec {
    text.parse().expect("rule parses")
}

pub fn strength(text: &str) -> Strength {
    text.parse().expect("strength parses")
}

/// Replaces alternative `target` by a freshly labeled block of `size`
/// members: block members inherit the target's outside relations and
/// get arbitrary seeded preferences among themselves. The block is a
/// component of the result by construction.
pub fn plant_block(profile: &Profile, target: &str, size: usize, seed: u64) -> Profile {
    let old = profile.universe();
    let target_idx = old.index_of(target).expect("target exists");
    let mut labels: Vec<String> = Vec::new();
    for (i, label) in old.labels().iter().enumerate() {
        if i == target_idx {
            for k in 0..size {
                labels.push(format!("{label}{k}"));
            }
        } else {
            labels.push(label.clone());
        }
    }
    let universe = Universe::new(labels).expect("small universe");
    let block_range = target_idx..target_idx + size;
    let map_old = |i: usize| if i < target_idx { i } else { i + size - 1 };
    let mut rng = relchoice::rng::Rng::new(seed);
    let individuals = profile
        .individuals()
        .iter()
        .map(|rel| {
            let mut out = Relation::reflexive(&universe);
            for x in 0..old.size() {
                for y in 0..old.size() {
                    if x == y || !rel.has(x, y) {
                        continue;
                    }
                    let xs: Vec<usize> = if x == target_idx {
                        block_range.clone().collect()
                    } else {
                        vec![map_old(x)]
                    };
                    let ys: Vec<usize> = if y == target_idx {
                        block_range.clone().collect()
                    } else {
                        vec![map_old(y)]
                    };
                    for &nx in &xs {
                        for &ny in &ys {
                            if nx != ny {
                                out.set(nx, ny);
                            }
                        }
                    }
                }
            }
            for nx in block_range.clone() {
                for ny in block_range.clone() {
                    if nx != ny && rng.bool() {
                        out.set(nx, ny);
                    }
                }
            }
            out
        })
        .collect();
    Profile::new(universe, individuals).expect("planted profile is valid")
}
