//! Text forms: human (`x^4+x^3-x+1`) and coefficient list (`1,-1,0,1,1`,
//! lowest degree first). Printers emit canonical strings that re-parse to
//! the same coefficients.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_human(s)
    }
}

/// Parses the human form. Case-insensitive, whitespace ignored, `*` between
/// coefficient and `x` optional; repeated powers are summed.
pub fn parse_human(s: &str) -> Result<IntPoly> {
    let cleaned: String =
        s.chars().filter(|c| !c.is_whitespace()).map(|c| c.to_ascii_lowercase()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty input".to_string()));
    }
    let bytes = cleaned.as_bytes();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut pos = 0;
    let err = |msg: &str, at: usize| Error::Parse(format!("{msg} at offset {at} in {s:?}"));
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
        } else if pos != 0 {
            return Err(err("expected '+' or '-'", pos));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coeff = if pos > start {
            BigInt::from_str(&cleaned[start..pos]).map_err(|_| err("bad coefficient", start))?
        } else {
            BigInt::one()
        };
        let had_number = pos > start;
        let mut power = 0usize;
        if pos < bytes.len() && bytes[pos] == b'*' {
            if !had_number {
                return Err(err("'*' without coefficient", pos));
            }
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b'x' {
                return Err(err("expected 'x' after '*'", pos));
            }
        }
        if pos < bytes.len() && bytes[pos] == b'x' {
            pos += 1;
            power = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let es = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if es == pos {
                    return Err(err("expected exponent", es));
                }
                power = cleaned[es..pos].parse().map_err(|_| err("exponent too large", es))?;
                if power > 1 << 20 {
                    return Err(err("exponent too large", es));
                }
            }
        } else if !had_number {
            return Err(err("expected a term", pos));
        }
        if negative {
            coeff = -coeff;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        coeffs[power] += coeff;
    }
    Ok(IntPoly::new(coeffs))
}

/// Parses `c0,c1,...` (lowest degree first). Whitespace is ignored.
pub fn parse_coeff_list(s: &str) -> Result<IntPoly> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty coefficient list".to_string()));
    }
    cleaned
        .split(',')
        .map(|t| BigInt::from_str(t).map_err(|_| Error::Parse(format!("bad coefficient {t:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(IntPoly::new)
}

pub fn format_coeff_list(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn prints_canonically() {
        assert_eq!(p(&[1, -1, 0, 1, 1]).to_string(), "x^4+x^3-x+1");
        assert_eq!(p(&[1, -1, -1, 3, -1, -1, 1]).to_string(), "x^6-x^5-x^4+3x^3-x^2-x+1");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -2]).to_string(), "-2x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(format_coeff_list(&p(&[1, -1, 0, 1, 1])), "1,-1,0,1,1");
    }

    #[test]
    fn parses_variants() {
        let want = p(&[1, -1, 0, 1, 1]);
        for s in ["x^4+x^3-x+1", "X^4 + X^3 - X + 1", "1 - x + x^3 + x^4", "x^4+x^3-1*x+1"] {
            assert_eq!(parse_human(s).unwrap(), want, "{s}");
        }
        assert_eq!(parse_human("x+x").unwrap(), p(&[0, 2]));
        assert_eq!(parse_human("-3X^2").unwrap(), p(&[0, 0, -3]));
        assert_eq!(parse_human("0").unwrap(), IntPoly::zero());
        assert_eq!(parse_coeff_list("1, -1, 0, 1, 1").unwrap(), want);
        assert_eq!(parse_coeff_list("1,0,0").unwrap(), p(&[1]));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "x^", "2**x", "x^4 x", "y+1", "+", "1,,2", "x^2^3"] {
            assert!(parse_human(s).is_err(), "{s}");
        }
        assert!(parse_coeff_list("1,,2").is_err());
        assert!(parse_coeff_list("a").is_err());
    }

    proptest! {
        #[test]
        fn round_trips(c in prop::collection::vec(-1000i64..1000, 0..15)) {
            let q = p(&c);
            prop_assert_eq!(parse_human(&q.to_string()).unwrap(), q.clone());
            prop_assert_eq!(parse_coeff_list(&format_coeff_list(&q)).unwrap(), q.clone());
            let s = q.to_string();
            prop_assert_eq!(parse_human(&s).unwrap().to_string(), s);
        }
    }
}
