//! Exact rational scalars.
//!
//! The scalar type is [`num_rational::BigRational`]; this module adds the
//! textual `"p/q"` format used by every file format and by the CLI.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"`, `"p"`, `"-p/q"`. Whitespace around the parts is ignored,
/// the denominator must be nonzero.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(numer, true) || !valid(denom, false) {
        return Err(bad());
    }
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Least common multiple of the denominators.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values.into_iter().fold(BigInt::one(), |acc, v| {
        // Most denominators are 1 or already divide the running lcm.
        if v.denom().is_one() || (&acc % v.denom()).is_zero() {
            acc
        } else {
            acc.lcm(v.denom())
        }
    })
}

pub(crate) mod serde_rational {
    pub mod vec {
        use super::super::{format_rational, parse_rational, Rational};
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&format_rational(v))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts
                .iter()
                .map(|t| parse_rational(t).map_err(D::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1/-3", "--1", "1.5", "1/", "/2", "+1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&rat(4, -6)), "-2/3");
        assert_eq!(format_rational(&int(7)), "7");
    }
}
