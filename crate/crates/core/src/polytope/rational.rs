use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact arbitrary-precision fraction, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("`{0}` is not an integer or p/q fraction")]
    Syntax(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
}

/// Parses `p/q` or `p`, each with an optional sign.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    let int = |t: &str| -> Result<BigInt, ParseRationalError> {
        let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Syntax(s.to_string()));
        }
        t.parse().map_err(|_| ParseRationalError::Syntax(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if q.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(int(p)?, q))
        }
    }
}

/// `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One coordinate per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector {
    pub coords: Vec<Rational>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector { coords }
    }

    /// The 0/1 incidence vector of `set` in dimension `n`.
    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut coords = vec![Rational::zero(); n];
        for &v in set {
            coords[v] = Rational::one();
        }
        RationalVector { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Sum of the coordinates indexed by `set`.
    pub fn sum_over(&self, set: &[usize]) -> Rational {
        set.iter().fold(Rational::zero(), |acc, &v| acc + &self.coords[v])
    }
}

impl FromStr for RationalVector {
    type Err = ParseRationalError;

    /// Comma-separated coordinates; the empty string is the empty vector.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(RationalVector::new(Vec::new()));
        }
        s.split(',').map(parse_rational).collect::<Result<_, _>>().map(RationalVector::new)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        f.write_str(&parts.join(","))
    }
}
