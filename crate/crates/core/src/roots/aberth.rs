//! Simultaneous root iteration (Aberth–Ehrlich), first in `f64` to get
//! starting points and then at arbitrary precision to polish them.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::numeric::{ComplexDyadic, Dyadic, Round};

const MAX_F64_ITERS: usize = 2000;

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Approximate all roots of a polynomial with (exact) integer coefficients
/// given lowest degree first. The leading coefficient must be nonzero.
pub(crate) fn aberth_f64(coeffs: &[BigInt]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = coeffs.iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect();
    if n == 1 {
        return alloc::vec![Complex64::new(-c[0] / c[1], 0.0)];
    }
    let lead = c[n].abs();
    // Starting circle: geometric mean of root moduli, kept away from zero.
    let r0 = if c[0] != 0.0 { libm::pow((c[0] / lead).abs(), 1.0 / n as f64) } else { 1.0 };
    let r0 = r0.clamp(1e-3, 1e3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * core::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::new(r0 * libm::cos(theta), r0 * libm::sin(theta))
        })
        .collect();
    let mut done = alloc::vec![false; n];
    for _ in 0..MAX_F64_ITERS {
        let mut all_done = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = eval_with_derivative(&c, z[i]);
            if p == Complex64::zero() {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != i {
                    s += Complex64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                // Perturb and retry next sweep.
                z[i] = z[i] * Complex64::new(1.0 + 1e-3, 1e-3);
                all_done = false;
                continue;
            }
            z[i] -= w;
            if w.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(1e-300) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }
    z
}

/// Aberth iterations at `prec` bits from the given approximations. Returns
/// the polished approximations and whether the last correction was below
/// `2^(8 - prec)` relative to the root size.
pub(crate) fn aberth_polish(
    coeffs: &[BigInt],
    start: &[ComplexDyadic],
    prec: u32,
) -> (Vec<ComplexDyadic>, bool) {
    let n = start.len();
    let deriv: Vec<BigInt> = coeffs.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    let mut z: Vec<ComplexDyadic> = start.to_vec();
    let max_iters = 12 + 2 * (32 - prec.leading_zeros()) as usize;
    let tol_exp = 8 - prec as i64;
    let one = ComplexDyadic::new(Dyadic::one(), Dyadic::zero());
    let mut converged = false;
    for _ in 0..max_iters {
        let mut worst_ok = true;
        for i in 0..n {
            let p = z[i].eval_poly(coeffs, prec);
            if p.re.is_zero() && p.im.is_zero() {
                continue;
            }
            let dp = z[i].eval_poly(&deriv, prec);
            let Some(ratio) = p.div(&dp, prec) else {
                worst_ok = false;
                continue;
            };
            let mut s = ComplexDyadic::default();
            for j in 0..n {
                if j != i {
                    if let Some(t) = one.div(&z[i].sub(&z[j], prec), prec) {
                        s = s.add(&t, prec);
                    }
                }
            }
            let den = one.sub(&ratio.mul(&s, prec), prec);
            let Some(w) = ratio.div(&den, prec) else {
                worst_ok = false;
                continue;
            };
            z[i] = z[i].sub(&w, prec);
            let size = z[i].abs_f64().max(1.0);
            let wn = w.abs_f64();
            // Compare |w| against 2^tol_exp * size without underflowing f64.
            let scaled = Dyadic::from_f64(wn.max(0.0));
            let bound = Dyadic::from_f64(size).mul_pow2(tol_exp);
            if wn.is_nan() || scaled > bound {
                worst_ok = false;
            }
        }
        if worst_ok {
            converged = true;
            break;
        }
    }
    (z, converged)
}

/// Newton-free exact evaluation helper used by the certifier: rounds a
/// center to `prec` bits.
pub(crate) fn round_point(z: &ComplexDyadic, prec: u32) -> ComplexDyadic {
    ComplexDyadic::new(z.re.round(prec, Round::Nearest), z.im.round(prec, Round::Nearest))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn f64_roots_of_cubic() {
        let z = aberth_f64(&ints(&[1, -1, 0, 1]));
        let real: Vec<_> = z.iter().filter(|r| r.im.abs() < 1e-9).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0].re + 1.324_717_957_244_746).abs() < 1e-12);
        for r in &z {
            if r.im.abs() > 1e-9 {
                assert!((r.norm() - 0.868_836_961_832_709_4).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn polish_reaches_high_precision() {
        let c = ints(&[-2, 0, 1]);
        let start: Vec<_> = aberth_f64(&c).iter().map(|w| ComplexDyadic::from_f64(w.re, w.im)).collect();
        let (z, ok) = aberth_polish(&c, &start, 256);
        assert!(ok);
        for r in z {
            let sq = r.mul(&r, 512);
            let err = sq.re.sub(&Dyadic::from_i64(2)).abs();
            assert!(err < Dyadic::pow2(-240), "{:?}", err.to_f64_approx());
        }
    }
}
