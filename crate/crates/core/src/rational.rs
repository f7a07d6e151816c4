//! Exact rationals and their canonical string form.
//!
//! Every number that leaves the library is written as `"num/den"` with
//! `den > 0` and `gcd(num, den) = 1`, or as `"n"` for integers.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[inline]
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

#[inline]
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => s.parse::<i64>().map(int).map_err(|_| bad()),
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Comma-separated list, as taken by the CLI (`5,3,1,-2` or `1/2,-1/2`).
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn format_rational(q: &Rational) -> String {
    // Ratio keeps itself reduced with a positive denominator.
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> i64 {
    it.into_iter().fold(1i64, |acc, q| acc.lcm(q.denom()))
}

/// Scale a rational vector by a positive factor so that it becomes a primitive
/// integer vector. Zero vectors are returned unchanged.
pub fn primitive_integer(v: &[Rational]) -> Vec<i64> {
    let den = common_denominator(v);
    let ints: Vec<i64> = v.iter().map(|q| (q * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / g).collect()
    }
}

pub fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn deserialize_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(serde::de::Error::custom)
}

pub fn serialize_vec<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

pub fn deserialize_vec<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
    let raw = Vec::<String>::deserialize(d)?;
    raw.iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()
        .map_err(serde::de::Error::custom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(format_rational(&frac(6, 4)), "3/2");
        assert_eq!(format_rational(&frac(-1, 2)), "-1/2");
        assert_eq!(format_rational(&frac(4, -2)), "-2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational(" -3/6 ").unwrap(), frac(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_list("5,3,1,-2").unwrap(), vec![int(5), int(3), int(1), int(-2)]);
    }

    #[test]
    fn primitive() {
        assert_eq!(primitive_integer(&[frac(1, 2), frac(1, 2), int(0)]), vec![1, 1, 0]);
        assert_eq!(primitive_integer(&[int(4), int(-6)]), vec![2, -3]);
    }
}
