//! Line-based text format for profiles.
//!
//! ```text
//! alternatives: a b c
//! # comment
//! individual
//! a > b
//! b = c
//! linear a b c
//! ```
//!
//! The first non-blank line declares the alternatives. Each `individual`
//! keyword starts a block of statements: `x > y` adds the ordered pair
//! `(x,y)`, `x = y` adds both directions, and `linear x1 x2 ... xk` adds
//! every pair `(xi,xj)` with `i < j`. Reflexive pairs are implicit,
//! duplicate statements are idempotent, `#` starts a comment and blank
//! lines are ignored.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::relation::{Relation, Universe};

pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut universe: Option<Arc<Universe>> = None;
    let mut individuals: Vec<Relation> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if content.is_empty() {
            continue;
        }

        let u = match (&universe, content.strip_prefix("alternatives:")) {
            (None, Some(rest)) => {
                let labels: Vec<&str> = rest.split_whitespace().collect();
                universe = Some(Universe::for_profile(labels).map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?);
                continue;
            }
            (None, None) => {
                return Err(Error::Parse {
                    line,
                    msg: "expected `alternatives: ...` first".into(),
                });
            }
            (Some(_), Some(_)) => {
                return Err(Error::Parse {
                    line,
                    msg: "alternatives already declared".into(),
                });
            }
            (Some(u), None) => u,
        };

        if content == "individual" {
            individuals.push(Relation::reflexive(u));
            continue;
        }

        let rel = individuals.last_mut().ok_or_else(|| Error::Parse {
            line,
            msg: "statement before the first `individual`".into(),
        })?;

        let index = |label: &str| {
            u.index_of(label).map_err(|e| Error::Parse {
                line,
                msg: e.to_string(),
            })
        };

        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [x, ">", y] => {
                rel.set(index(x)?, index(y)?);
            }
            [x, "=", y] => {
                let xi = index(x)?;
                let yi = index(y)?;
                rel.set(xi, yi);
                rel.set(yi, xi);
            }
            ["linear", rest @ ..] if !rest.is_empty() => {
                let indices: Vec<usize> =
                    rest.iter().map(|l| index(l)).collect::<Result<Vec<_>>>()?;
                for i in 0..indices.len() {
                    for j in i + 1..indices.len() {
                        rel.set(indices[i], indices[j]);
                    }
                }
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unrecognized statement `{content}`"),
                });
            }
        }
    }

    let universe = universe.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        msg: "missing `alternatives:` line".into(),
    })?;
    if individuals.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count() + 1,
            msg: "profile declares no individuals".into(),
        });
    }
    Profile::new(universe, individuals)
}

/// Canonical serialization: one `>` or `=` statement per related pair,
/// in universe order, equivalences written once. Round-trips through
/// [`parse_profile`] exactly.
pub fn serialize_profile(profile: &Profile) -> String {
    let u = profile.universe();
    let mut out = format!("alternatives: {}\n", u.labels().join(" "));
    for rel in profile.individuals() {
        out.push_str("individual\n");
        for x in 0..u.size() {
            for y in 0..u.size() {
                if x == y || !rel.has(x, y) {
                    continue;
                }
                if rel.has(y, x) {
                    if x < y {
                        out.push_str(&format!("{} = {}\n", u.label(x), u.label(y)));
                    }
                } else {
                    out.push_str(&format!("{} > {}\n", u.label(x), u.label(y)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_strict_pair() {
        let p = parse_profile("alternatives: a b\nindividual\na > b\n").unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.individual(0).has(0, 1));
        assert!(!p.individual(0).has(1, 0));
    }

    #[test]
    fn linear_sugar_adds_all_pairs() {
        let p = parse_profile("alternatives: a b c\nindividual\nlinear a b c\n").unwrap();
        let r = p.individual(0);
        assert!(r.has(0, 1) && r.has(0, 2) && r.has(1, 2));
        assert!(!r.has(1, 0) && !r.has(2, 0) && !r.has(2, 1));
    }

    #[test]
    fn equivalence_adds_both_directions() {
        let p = parse_profile("alternatives: a b\nindividual\na = b\n").unwrap();
        assert!(p.individual(0).has(0, 1) && p.individual(0).has(1, 0));
    }

    #[test]
    fn comments_blanks_and_duplicates() {
        let p = parse_profile(
            "# heading\nalternatives: a b # trailing\n\nindividual\na > b\na > b\n# done\n",
        )
        .unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.individual(0).has(0, 1));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_profile("individual\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: a a\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: a b\nindividual\na > z\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: a b\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: a b\na > b\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: a{ b\nindividual\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn round_trip_identity() {
        let text = "alternatives: a b c\n\
                    individual\na > b\nb = c\n\
                    individual\nlinear c b a\n\
                    individual\n";
        let p = parse_profile(text).unwrap();
        let q = parse_profile(&serialize_profile(&p)).unwrap();
        assert_eq!(p, q);
    }
}
