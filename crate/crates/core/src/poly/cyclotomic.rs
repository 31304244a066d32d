use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::IntPoly;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            while n % q == 0 {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `X^n - 1` by
/// `Phi_d` for every proper divisor `d` of `n`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut phi = IntPoly::monomial(BigInt::one(), n as usize) - IntPoly::one();
    for d in (1..n).filter(|d| n % d == 0) {
        phi = phi
            .divmod_monic(&cyclotomic(d))
            .map(|(q, _)| q)
            .expect("cyclotomic polynomials are monic");
    }
    phi
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicSplit {
    /// Product of cyclotomic polynomials (monic).
    pub cyclo: IntPoly,
    /// Content 1, positive leading coefficient, no cyclotomic divisor.
    pub noncyclo: IntPoly,
    pub scalar: BigInt,
    /// `(n, multiplicity)` for every `Phi_n` removed.
    pub indices: Vec<(u64, u32)>,
}

impl CyclotomicSplit {
    pub fn recompose(&self) -> IntPoly {
        (&self.cyclo * &self.noncyclo).scale(&self.scalar)
    }
}

/// Splits `p = scalar * C * N`. Only indices with `phi(n) <= deg p` can
/// occur, and those satisfy `n <= 2 deg^2`.
pub fn cyclotomic_split(p: &IntPoly) -> Result<CyclotomicSplit> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut scalar = p.content();
    if p.leading().unwrap().is_negative() {
        scalar = -scalar;
    }
    let mut rest = p.primitive_part();
    let mut cyclo = IntPoly::one();
    let mut indices = Vec::new();
    let deg = rest.deg() as u64;
    let bound = 2 * deg * deg;
    for n in 1..=bound {
        if rest.deg() == 0 {
            break;
        }
        let phi = euler_phi(n);
        if phi > rest.deg() as u64 {
            continue;
        }
        let cn = cyclotomic(n);
        let mut mult = 0;
        loop {
            let (q, r) = rest.divmod_monic(&cn)?;
            if !r.is_zero() {
                break;
            }
            rest = q;
            cyclo = &cyclo * &cn;
            mult += 1;
        }
        if mult > 0 {
            indices.push((n, mult));
        }
    }
    let out = CyclotomicSplit { cyclo, noncyclo: rest, scalar, indices };
    debug_assert_eq!(out.recompose(), *p);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(15).deg(), 8);
    }

    #[test]
    fn cyclotomic_degrees_sum_to_n() {
        for n in 1..=40u64 {
            let xn1 = IntPoly::monomial(BigInt::one(), n as usize) - IntPoly::one();
            let total: usize = (1..=n).filter(|d| n % d == 0).map(|d| cyclotomic(d).deg()).sum();
            assert_eq!(total as u64, n);
            assert!(xn1.rem_monic(&cyclotomic(n)).unwrap().is_zero());
            assert_eq!(cyclotomic(n).deg() as u64, euler_phi(n));
        }
    }

    #[test]
    fn split_examples() {
        let s = cyclotomic_split(&p(&[1, 1, 0, 1, 0, -1, 0, -1, 0, 1])).unwrap();
        assert_eq!(s.cyclo, p(&[1, 1]));
        assert_eq!(s.noncyclo, p(&[1, 0, 0, 1, -1, 0, 0, -1, 1]));

        let s = cyclotomic_split(&p(&[1, 1, 1])).unwrap();
        assert_eq!(s.cyclo, p(&[1, 1, 1]));
        assert_eq!(s.noncyclo, IntPoly::one());

        let s = cyclotomic_split(&p(&[1, -1, 0, 1])).unwrap();
        assert_eq!(s.cyclo, IntPoly::one());
        assert_eq!(s.noncyclo, p(&[1, -1, 0, 1]));
    }

    #[test]
    fn split_handles_multiplicity_and_sign() {
        let f = -(cyclotomic(1).pow(2) * cyclotomic(6) * p(&[1, -1, 0, 1])).scale(&3.into());
        let s = cyclotomic_split(&f).unwrap();
        assert_eq!(s.noncyclo, p(&[1, -1, 0, 1]));
        assert_eq!(s.scalar, (-3).into());
        assert_eq!(s.indices, alloc::vec![(1, 2), (6, 1)]);
        assert_eq!(s.recompose(), f);
    }

    #[test]
    fn noncyclo_is_coprime_to_small_cyclotomics() {
        let n = p(&[1, -1, 0, 1]);
        for k in 1..=18 {
            let g = super::super::gcd(&n, &cyclotomic(k));
            assert_eq!(g.deg(), 0, "n = {k}");
        }
    }
}
