//! Exact rational arithmetic over `i128`, reduced form, positive
//! denominator. The parameter checks hinge on floors and strict
//! inequalities exactly where floating point goes wrong, so every
//! comparison here is integer cross-multiplication.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational (expected `p` or `p/q`)")]
    Parse(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl ExactRational {
    pub const ZERO: ExactRational = ExactRational { num: 0, den: 1 };
    pub const ONE: ExactRational = ExactRational { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Self, RationalError> {
        if den == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        Ok(ExactRational {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn from_integer(n: i128) -> Self {
        ExactRational { num: n, den: 1 }
    }

    pub fn num(self) -> i128 {
        self.num
    }

    pub fn den(self) -> i128 {
        self.den
    }

    /// Greatest integer ≤ self, exact.
    pub fn floor(self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    fn checked(num: Option<i128>, den: Option<i128>) -> Self {
        let num = num.expect("rational overflow");
        let den = den.expect("rational overflow");
        ExactRational::new(num, den).expect("nonzero denominator")
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> Self {
        ExactRational::checked(
            self.num
                .checked_mul(rhs.den)
                .and_then(|a| rhs.num.checked_mul(self.den).and_then(|b| a.checked_add(b))),
            self.den.checked_mul(rhs.den),
        )
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> Self {
        ExactRational::checked(
            self.num
                .checked_mul(rhs.den)
                .and_then(|a| rhs.num.checked_mul(self.den).and_then(|b| a.checked_sub(b))),
            self.den.checked_mul(rhs.den),
        )
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        ExactRational::checked(
            self.num.checked_mul(rhs.num),
            self.den.checked_mul(rhs.den),
        )
    }
}

impl Div for ExactRational {
    type Output = ExactRational;
    /// Panics on a zero divisor.
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.num != 0, "division by zero rational");
        ExactRational::checked(
            self.num.checked_mul(rhs.den),
            self.den.checked_mul(rhs.num),
        )
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self.num.checked_mul(other.den).expect("rational overflow");
        let rhs = other.num.checked_mul(self.den).expect("rational overflow");
        lhs.cmp(&rhs)
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExactRational {
    type Err = RationalError;

    /// Accepts `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self, RationalError> {
        let bad = || RationalError::Parse(s.to_string());
        match s.split_once('/') {
            None => {
                let n: i128 = s.trim().parse().map_err(|_| bad())?;
                Ok(ExactRational::from_integer(n))
            }
            Some((p, q)) => {
                let p: i128 = p.trim().parse().map_err(|_| bad())?;
                let q: i128 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(RationalError::ZeroDenominator);
                }
                ExactRational::new(p, q)
            }
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
