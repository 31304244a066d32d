//! Factorisation over Z for moderate degrees.
//!
//! Each squarefree part is split by searching subsets of its complex roots:
//! a subset closed under conjugation yields a real polynomial whose
//! coefficients, after scaling by a divisor of the leading coefficient, are
//! rounded to integers and confirmed by exact division. Subsets are tried in
//! increasing size, so every confirmed factor is irreducible.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive};

use super::sturm::count_real_roots;
use super::{squarefree_decomposition, IntPoly};
use crate::error::{Error, Result};
use crate::numeric::ComplexDyadic;
use crate::roots::aberth::{aberth_f64, aberth_polish};

/// Largest degree accepted by [`factor_noncyclotomic`] unless overridden.
pub const DEFAULT_FACTOR_DEGREE_CAP: usize = 16;

const POLISH_BITS: u32 = 160;
const ROUNDING_SLACK: f64 = 1e-4;

/// Irreducible factors of `p` with multiplicities, each primitive with a
/// positive leading coefficient. The integer content is dropped. Fails with
/// `UnsupportedDegree` above `cap`.
pub fn factor_noncyclotomic(p: &IntPoly, cap: usize) -> Result<Vec<(IntPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() > cap {
        return Err(Error::UnsupportedDegree { degree: p.deg(), cap });
    }
    let mut out = Vec::new();
    for (part, e) in squarefree_decomposition(p)?.parts {
        for f in split_squarefree(&part) {
            out.push((f, e));
        }
    }
    out.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    Ok(out)
}

/// A real root or a conjugate pair (stored with positive imaginary part).
#[derive(Clone, Copy)]
enum Group {
    Real(f64),
    Pair(Complex64),
}

impl Group {
    fn degree(self) -> usize {
        match self {
            Group::Real(_) => 1,
            Group::Pair(_) => 2,
        }
    }
}

fn root_groups(f: &IntPoly) -> Vec<Group> {
    let approx = aberth_f64(f.coeffs());
    let start: Vec<ComplexDyadic> = approx.iter().map(|z| ComplexDyadic::from_f64(z.re, z.im)).collect();
    let (polished, _) = aberth_polish(f.coeffs(), &start, POLISH_BITS);
    let mut roots: Vec<Complex64> = polished
        .iter()
        .map(|z| {
            let (re, im) = z.to_f64();
            Complex64::new(re, im)
        })
        .collect();
    let nreal = count_real_roots(f);
    roots.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
    let mut groups: Vec<Group> = roots[..nreal].iter().map(|z| Group::Real(z.re)).collect();
    let mut upper: Vec<Complex64> = roots[nreal..].iter().filter(|z| z.im > 0.0).copied().collect();
    // Guard against an unbalanced split of near-real pairs.
    let lower = roots.len() - nreal - upper.len();
    if lower != upper.len() {
        let mut rest: Vec<Complex64> = roots[nreal..].to_vec();
        rest.sort_by(|a, b| a.re.total_cmp(&b.re));
        upper = rest.chunks(2).map(|c| Complex64::new(c[0].re, c[0].im.abs())).collect();
    }
    groups.extend(upper.into_iter().map(Group::Pair));
    groups
}

/// Coefficients (lowest first) of the monic real polynomial with the roots
/// of the chosen groups.
fn monic_from_groups(groups: &[Group]) -> Vec<f64> {
    let mut c = alloc::vec![1.0f64];
    for g in groups {
        let q: [f64; 3] = match *g {
            Group::Real(r) => [-r, 1.0, 0.0],
            Group::Pair(z) => [z.norm_sqr(), -2.0 * z.re, 1.0],
        };
        let qlen = if g.degree() == 1 { 2 } else { 3 };
        let mut next = alloc::vec![0.0; c.len() + qlen - 1];
        for (i, a) in c.iter().enumerate() {
            for (j, b) in q[..qlen].iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        c = next;
    }
    c
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    match n.to_u64() {
        Some(m) if m <= 1 << 24 => (1..=m)
            .filter(|d| m % d == 0)
            .map(BigInt::from)
            .collect(),
        _ => alloc::vec![BigInt::one(), n],
    }
}

fn try_integer_factor(monic: &[f64], lc: &BigInt, f: &IntPoly) -> Option<IntPoly> {
    for d in positive_divisors(lc) {
        let scale = d.to_f64()?;
        let mut coeffs = Vec::with_capacity(monic.len());
        for &m in monic {
            let v = m * scale;
            let r = libm::round(v);
            if !r.is_finite() || (v - r).abs() > ROUNDING_SLACK * (1.0 + v.abs()).min(1e6) {
                break;
            }
            coeffs.push(BigInt::from(r as i128));
        }
        if coeffs.len() != monic.len() {
            continue;
        }
        let g = IntPoly::new(coeffs);
        if g.deg() + 1 != monic.len() || !g.content().is_one() {
            continue;
        }
        if f.div_exact(&g).is_ok() {
            return Some(g);
        }
    }
    None
}

/// Splits a primitive squarefree polynomial into irreducible factors.
fn split_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive_part();
    if f.deg() <= 1 {
        return alloc::vec![f];
    }
    let mut remaining = f.clone();
    let mut groups = root_groups(&f);
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.deg() {
        match find_factor_of_size(&remaining, &groups, size) {
            Some((g, used)) => {
                remaining = remaining.div_exact(&g).expect("verified divisor");
                let mut keep = Vec::with_capacity(groups.len());
                for (i, grp) in groups.into_iter().enumerate() {
                    if !used.contains(&i) {
                        keep.push(grp);
                    }
                }
                groups = keep;
                found.push(g);
            }
            None => size += 1,
        }
    }
    found.push(remaining.primitive_part());
    found
}

/// Searches subsets of `groups` with total degree `size`.
fn find_factor_of_size(f: &IntPoly, groups: &[Group], size: usize) -> Option<(IntPoly, Vec<usize>)> {
    let lc = f.leading().unwrap().clone();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        f: &IntPoly,
        lc: &BigInt,
        groups: &[Group],
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> Option<IntPoly> {
        if left == 0 {
            let sel: Vec<Group> = chosen.iter().map(|&i| groups[i]).collect();
            return try_integer_factor(&monic_from_groups(&sel), lc, f);
        }
        for i in start..groups.len() {
            let d = groups[i].degree();
            if d > left {
                continue;
            }
            chosen.push(i);
            if let Some(g) = rec(f, lc, groups, i + 1, left - d, chosen) {
                return Some(g);
            }
            chosen.pop();
        }
        None
    }
    let g = rec(f, &lc, groups, 0, size, &mut chosen)?;
    Some((g, chosen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn recompose(f: &[(IntPoly, u32)]) -> IntPoly {
        f.iter().map(|(g, e)| g.pow(*e)).product()
    }

    #[test]
    fn splits_known_products() {
        let a = p(&[1, -1, 0, 1]);
        let b = p(&[1, 0, -1, 1]);
        let f = factor_noncyclotomic(&(&a * &b), 16).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(recompose(&f), &a * &b);

        let f = factor_noncyclotomic(&a.pow(2), 16).unwrap();
        assert_eq!(f, alloc::vec![(a.clone(), 2)]);

        // Irreducible Lehmer polynomial stays whole.
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(factor_noncyclotomic(&lehmer, 16).unwrap(), alloc::vec![(lehmer, 1)]);

        // Non-monic: (2x + 1)(3x^2 - 1)
        let g = p(&[1, 2]) * p(&[-1, 0, 3]);
        let f = factor_noncyclotomic(&g, 16).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(recompose(&f), g);
    }

    #[test]
    fn degree_cap() {
        let big = p(&[1; 20]);
        assert!(matches!(factor_noncyclotomic(&big, 16), Err(Error::UnsupportedDegree { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn recomposes_products(
            a in prop::collection::vec(-3i64..4, 1..5),
            b in prop::collection::vec(-3i64..4, 1..5),
        ) {
            let mut a = a; a.push(1);
            let mut b = b; b.push(1);
            let f = p(&a) * p(&b);
            let fac = factor_noncyclotomic(&f, 16).unwrap();
            prop_assert_eq!(recompose(&fac), f.primitive_part());
            prop_assert!(fac.len() >= 2 || fac.iter().map(|x| x.1).sum::<u32>() >= 2);
        }
    }
}
