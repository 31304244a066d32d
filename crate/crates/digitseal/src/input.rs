//! Parsing of polynomials, digit sets, sign strings and witness files.

use std::path::Path;

use digitseal_core::poly::{parse_coeff_list, parse_human};
use digitseal_core::search::DigitSet;
use digitseal_core::IntPoly;

use crate::CliError;

/// Human form (`x^3-x+1`) when the text mentions the variable, otherwise a
/// comma-separated coefficient list, lowest degree first (`1,-1,0,1`).
pub fn parse_poly(s: &str) -> Result<IntPoly, CliError> {
    let t = s.trim();
    let p = if t.contains(['x', 'X']) { parse_human(t)? } else { parse_coeff_list(t)? };
    Ok(p)
}

/// A polynomial ready for searching: a leading `-1` is flipped to `+1`
/// (negation does not change the divisors), other leading coefficients
/// are rejected.
pub fn normalize_monic(p: IntPoly) -> Result<(IntPoly, bool), CliError> {
    if p.is_zero() {
        return Err(CliError::Usage("the zero polynomial has no multiples to search".into()));
    }
    if p.is_monic() {
        return Ok((p, false));
    }
    let neg = -&p;
    if neg.is_monic() {
        return Ok((neg, true));
    }
    Err(CliError::Usage(format!(
        "leading coefficient of {p} must be 1 or -1; a multiple with unit leading digit exists only for monic divisors"
    )))
}

/// Comma- or whitespace-separated integers.
pub fn parse_digit_list(s: &str) -> Result<DigitSet, CliError> {
    let digits = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| CliError::Usage(format!("bad digit `{t}` in `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DigitSet::new(digits)?)
}

/// `+`/`-` (and `0`) characters, whitespace ignored; the first character is
/// the leading coefficient.
pub fn parse_sign_string(s: &str) -> Result<IntPoly, CliError> {
    let mut digits = Vec::new();
    for (i, c) in s.chars().enumerate() {
        match c {
            '+' => digits.push(1),
            '-' => digits.push(-1),
            '0' => digits.push(0),
            c if c.is_whitespace() => {}
            c => return Err(CliError::Usage(format!("malformed sign string: `{c}` at offset {i}"))),
        }
    }
    if digits.is_empty() {
        return Err(CliError::Usage("malformed sign string: no signs".into()));
    }
    if digits[0] == 0 {
        return Err(CliError::Usage("malformed sign string: leading coefficient is 0".into()));
    }
    digits.reverse();
    Ok(IntPoly::from_i64s(&digits))
}

/// Inverse of [`parse_sign_string`] for polynomials with coefficients in
/// `{-1, 0, 1}`; other polynomials get their digits as space-separated
/// integers, leading first.
pub fn digit_string(q: &IntPoly) -> String {
    match q.to_i64s() {
        Some(c) if c.iter().all(|d| (-1..=1).contains(d)) => c
            .iter()
            .rev()
            .map(|d| match d {
                1 => '+',
                -1 => '-',
                _ => '0',
            })
            .collect(),
        _ => q.coeffs().iter().rev().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
    }
}

/// A witness given as a sign string or as a polynomial.
pub fn parse_witness(s: &str) -> Result<IntPoly, CliError> {
    let t = s.trim();
    if !t.is_empty() && t.chars().all(|c| matches!(c, '+' | '-' | '0') || c.is_whitespace()) && t.contains(['+', '-']) {
        parse_sign_string(t)
    } else {
        parse_poly(t)
    }
}

pub fn read_witness_file(path: &Path) -> Result<IntPoly, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    parse_witness(&text)
}
