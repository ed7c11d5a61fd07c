//! Exact rational arithmetic for strength thresholds and ratio functions.
//!
//! All comparisons cross-multiply in 128-bit integers; no value in the
//! library is ever converted through floating point when a rule is
//! evaluated.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An exact rational with reduced numerator/denominator, denominator > 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i64,
    den: i64,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const HALF: Ratio = Ratio { num: 1, den: 2 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Ratio {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(n: i64) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    /// Quotient of two counts with the convention 0/0 := 1.
    pub fn counts_or_one(num: u32, den: u32) -> Ratio {
        if den == 0 && num == 0 {
            Ratio::ONE
        } else {
            Ratio::new(num as i64, den as i64)
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

fn reduced(num: i128, den: i128) -> Ratio {
    assert!(den != 0, "zero denominator");
    let sign: i128 = if den < 0 { -1 } else { 1 };
    let mut a = num.unsigned_abs();
    let mut b = den.unsigned_abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    let g = a.max(1) as i128;
    let num = sign * num / g;
    let den = sign * den / g;
    assert!(
        num >= i64::MIN as i128 && num <= i64::MAX as i128 && den <= i64::MAX as i128,
        "rational overflow"
    );
    Ratio {
        num: num as i64,
        den: den as i64,
    }
}

impl Add for Ratio {
    type Output = Ratio;
    fn add(self, rhs: Ratio) -> Ratio {
        reduced(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Ratio {
    type Output = Ratio;
    fn sub(self, rhs: Ratio) -> Ratio {
        reduced(
            self.num as i128 * rhs.den as i128 - rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Mul for Ratio {
    type Output = Ratio;
    fn mul(self, rhs: Ratio) -> Ratio {
        reduced(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Div for Ratio {
    type Output = Ratio;
    fn div(self, rhs: Ratio) -> Ratio {
        assert!(rhs.num != 0, "division by zero");
        reduced(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `p/q` fractions, integers, and decimal literals.
    /// Decimals are converted by their literal denominator (`0.5` -> 1/2),
    /// never through floating point.
    fn from_str(s: &str) -> Result<Ratio> {
        let bad = |_| Error::RuleSyntax(format!("bad number `{s}`"));
        if let Some((p, q)) = s.split_once('/') {
            let num: i64 = p.trim().parse().map_err(bad)?;
            let den: i64 = q.trim().parse().map_err(bad)?;
            if den == 0 {
                return Err(Error::RuleSyntax(format!("zero denominator in `{s}`")));
            }
            Ok(Ratio::new(num, den))
        } else if let Some((int, frac)) = s.split_once('.') {
            let int = if int.is_empty() { "0" } else { int };
            let whole: i64 = int.trim().parse().map_err(bad)?;
            let frac = frac.trim();
            if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::RuleSyntax(format!("bad number `{s}`")));
            }
            let digits: i64 = frac.parse().map_err(bad)?;
            let scale = 10_i64.pow(frac.len() as u32);
            let signed = if s.trim_start().starts_with('-') {
                whole * scale - digits
            } else {
                whole * scale + digits
            };
            Ok(Ratio::new(signed, scale))
        } else {
            let n: i64 = s.trim().parse().map_err(bad)?;
            Ok(Ratio::integer(n))
        }
    }
}

/// A rule strength: an exact rational in (0,1].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strength(Ratio);

impl Strength {
    pub const ONE: Strength = Strength(Ratio::ONE);
    pub const HALF: Strength = Strength(Ratio::HALF);

    pub fn new(value: Ratio) -> Result<Strength> {
        if value > Ratio::ZERO && value <= Ratio::ONE {
            Ok(Strength(value))
        } else {
            Err(Error::InvalidStrength(value.to_string()))
        }
    }

    pub fn ratio(&self) -> Ratio {
        self.0
    }

    /// True when the strength is in the majority regime (above one half).
    pub fn is_majority(&self) -> bool {
        self.0 > Ratio::HALF
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Strength {
    type Err = Error;
    fn from_str(s: &str) -> Result<Strength> {
        Strength::new(s.parse()?)
    }
}
