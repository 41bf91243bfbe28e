//! Text and JSON forms of polynomials and rationals.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;
use crate::poly::{Poly, Rational};

pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// One signed term such as `-3/2x^4`, `x`, `7` or `2*x^3`.
fn parse_term(term: &str) -> Result<(Rational, usize), PolyError> {
    let bad = || PolyError::Parse(format!("bad term `{term}`"));
    let Some(pos) = term.find('x') else {
        return Ok((parse_rational(term)?, 0));
    };
    let (coef, rest) = term.split_at(pos);
    let coef = coef.trim().trim_end_matches('*').trim();
    let (negative, coef) = match coef.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, coef.strip_prefix('+').unwrap_or(coef)),
    };
    let coef = coef.trim_start_matches('(').trim_end_matches(')');
    let c = if coef.is_empty() { Rational::from_integer(1.into()) } else { parse_rational(coef)? };
    let c = if negative { -c } else { c };
    let rest = rest[1..].trim();
    let k = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?
    };
    Ok((c, k))
}

fn parse_expression(s: &str) -> Result<Poly, PolyError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for i in 1..bytes.len() {
        // A sign splits terms unless it follows `^` or `/` or opens a parenthesis group.
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'^' | b'/' | b'(') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut out = Poly::zero();
    for t in terms {
        let t = t.strip_prefix('+').unwrap_or(t);
        if t.is_empty() {
            return Err(PolyError::Parse(format!("empty term in `{s}`")));
        }
        let (c, k) = parse_term(t)?;
        out = &out + &Poly::monomial(c, k);
    }
    Ok(out)
}

impl FromStr for Poly {
    type Err = PolyError;

    /// Accepts a comma-separated coefficient list, lowest degree first
    /// (`1,0,0,1`), or a sum of monomials in `x` (`1 + 3x - x^2`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        if s.contains('x') {
            return parse_expression(s);
        }
        let coeffs = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs().len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// A rational given as `"num/den"`, `"num"`, or a bare JSON integer.
struct RationalVisitor;

impl<'de> Visitor<'de> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("a rational string \"num/den\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
        parse_rational(v).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(Rational::from_integer(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
        Ok(Rational::from_integer(v.into()))
    }
}

/// Serde adapter for `Rational` fields.
pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }
}

/// Serde adapter for `Vec<Rational>` fields.
pub mod rational_vec_serde {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for c in v {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        d.deserialize_seq(RationalSeq)
    }
}

struct Wrapped(Rational);

impl<'de> Deserialize<'de> for Wrapped {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(RationalVisitor).map(Wrapped)
    }
}

struct RationalSeq;

impl<'de> Visitor<'de> for RationalSeq {
    type Value = Vec<Rational>;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an array of rationals")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<Rational>, A::Error> {
        let mut out = Vec::new();
        while let Some(Wrapped(r)) = seq.next_element()? {
            out.push(r);
        }
        Ok(out)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_seq(RationalSeq).map(Poly::new)
    }
}
