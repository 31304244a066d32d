//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored lowest degree first and are always arbitrary
//! precision. The zero polynomial is the empty coefficient vector.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

mod cyclotomic;
mod factor;
mod gcd;
mod squarefree;
mod sturm;
mod text;

pub use cyclotomic::{cyclotomic, cyclotomic_split, euler_phi, CyclotomicSplit};
pub use factor::{factor_noncyclotomic, DEFAULT_FACTOR_DEGREE_CAP};
pub use gcd::gcd;
pub use squarefree::{squarefree_decomposition, SquarefreeDecomposition};
pub use sturm::{count_positive_real_roots, count_real_roots, has_nonneg_real_root};
pub use text::{format_coeff_list, parse_coeff_list, parse_human};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients, lowest degree first. Trailing
    /// zeros are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `X - c`
    pub fn linear_root(c: i64) -> Self {
        Self::from_i64s(&[-c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`, for callers that have
    /// already excluded the zero polynomial.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Converts to machine integers when every coefficient fits.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Substitutes `X -> -X`.
    pub fn negate_x(&self) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division by a monic divisor of degree at least one.
    pub fn divmod_monic(&self, p: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dp = p.degree().ok_or(Error::ConstantDivisor)?;
        if dp == 0 {
            return Err(Error::ConstantDivisor);
        }
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dp {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dp];
        for i in (0..quot.len()).rev() {
            let c = core::mem::take(&mut rem[i + dp]);
            if c.is_zero() {
                continue;
            }
            for (j, pc) in p.coeffs[..dp].iter().enumerate() {
                if !pc.is_zero() {
                    rem[i + j] -= &c * pc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dp);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Remainder modulo a monic divisor.
    pub fn rem_monic(&self, p: &IntPoly) -> Result<IntPoly> {
        self.divmod_monic(p).map(|(_, r)| r)
    }

    /// Exact division over Z by an arbitrary nonzero divisor.
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let n = self.deg();
        if n < dd {
            return Err(Error::InexactDivision);
        }
        let lc = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = core::mem::take(&mut rem[i + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        if rem[..dd].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    /// `X^d P(1/X)`; requires a nonzero constant term so that the degree is
    /// preserved.
    pub fn reciprocal(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(IntPoly { coeffs })
    }

    /// Max absolute coefficient; zero only for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// `k`-fold formal derivative.
    pub fn derivative(&self, k: usize) -> IntPoly {
        if k == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= k {
            return IntPoly::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|i| &self.coeffs[i] * falling_factorial(i, k))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Number of trailing zero coefficients, i.e. the largest `k` with
    /// `X^k | self`.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Removes the largest power of `X` dividing `self`.
    pub fn strip_x_power(&self) -> IntPoly {
        let k = self.x_valuation();
        IntPoly { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Sign of the leading coefficient (`Equal` for zero).
    pub fn leading_sign(&self) -> Ordering {
        self.leading().map_or(Ordering::Equal, |c| c.sign_cmp())
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// `i (i-1) ... (i-k+1)`
pub(crate) fn falling_factorial(i: usize, k: usize) -> BigInt {
    ((i + 1 - k)..=i).fold(BigInt::one(), |acc, m| acc * m)
}

impl core::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) =
            if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl core::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}
