use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::monomial::Monomial;
use super::multi::MultiPoly;
use crate::Error;

/// Parse an expanded polynomial such as `10*x2^3 - (1/3)*x2*x4 + 7`.
/// Only sums of products of numbers and variable powers are accepted.
pub fn parse_poly(src: &str, vars: &[&str]) -> Result<MultiPoly, Error> {
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let cleaned: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let bytes = cleaned.as_bytes();
    let mut start = 0;
    let mut depth = 0;
    let mut pieces = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' => {
                pieces.push(&cleaned[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    pieces.push(&cleaned[start..]);
    for piece in pieces {
        let (neg, body) = match piece.as_bytes().first() {
            Some(b'-') => (true, &piece[1..]),
            Some(b'+') => (false, &piece[1..]),
            _ => (false, piece),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{src}`")));
        }
        let mut coeff = BigRational::one();
        let mut mono = Monomial::one();
        for factor in body.split('*') {
            let f = factor.trim_start_matches('(').trim_end_matches(')');
            if f.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{piece}`")));
            }
            if f.as_bytes()[0].is_ascii_digit() {
                coeff *= parse_number(f)?;
            } else {
                let (name, exp) = match f.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u16>().map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?),
                    None => (f, 1),
                };
                let k = names
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::Variable(name.to_string()))?;
                mono = mono.mul(&Monomial::var(k, exp));
            }
        }
        if neg {
            coeff = -coeff;
        }
        terms.push((mono, coeff));
    }
    Ok(MultiPoly::from_terms(&names, terms))
}

fn parse_number(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("bad number `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
