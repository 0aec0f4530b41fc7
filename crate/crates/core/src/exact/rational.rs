use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
    reason: &'static str,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `-3/7`, `13`, `+2/4` (normalized to `1/2`). A leading U+2212 minus
/// sign is accepted as well as ASCII `-`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        input: text.to_string(),
        reason,
    };
    let trimmed = text.trim();
    let (negative, body) = if let Some(rest) = trimmed.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = trimmed.strip_prefix('\u{2212}') {
        (true, rest)
    } else if let Some(rest) = trimmed.strip_prefix('+') {
        (false, rest)
    } else {
        (false, trimmed)
    };
    let (num_text, den_text) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num_text) {
        return Err(err("numerator must be a non-empty string of decimal digits"));
    }
    let numer: BigInt = num_text.parse().map_err(|_| err("bad numerator"))?;
    let denom: BigInt = match den_text {
        Some(d) if digits(d) => d.parse().map_err(|_| err("bad denominator"))?,
        Some(_) => return Err(err("denominator must be a non-empty string of decimal digits")),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `p/q` in lowest terms, or `p` when the denominator is 1.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Sign as -1, 0, +1.
pub fn sign_of(value: &Rational) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rational("-3/7").unwrap(), frac(-3, 7));
        assert_eq!(parse_rational("13").unwrap(), int(13));
        assert_eq!(parse_rational("4/8").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("\u{2212}2").unwrap(), int(-2));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["1/0", "", "-", "1/", "/2", "1.5", "a", "1/-2", "--1", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(-5)), "-5");
        assert_eq!(format_rational(&int(0)), "0");
    }
}
