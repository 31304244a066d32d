use num_traits::Signed;

use super::{isolate_roots, refine, RootProfile};
use crate::error::{Error, Result};
use crate::numeric::{Dyadic, Interval, Round};
use crate::poly::IntPoly;

/// Mahler measure `|lc| * prod max(1, |alpha|)` (roots with multiplicity),
/// within `tol` of the true value.
pub fn mahler_measure(p: &IntPoly, tol: f64) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !(tol > 0.0) {
        return Err(Error::Precondition("tolerance must be positive"));
    }
    let lc = p.leading().unwrap().abs();
    if p.deg() == 0 {
        return Ok(Dyadic::from_int(lc).to_f64_approx());
    }
    let mut profile = isolate_roots(p, 64)?;
    let mut target = Dyadic::from_f64(tol / (4.0 * (p.deg() as f64 + 1.0)));
    loop {
        let m = enclosure(&profile, &lc);
        let (lo, hi) = m.to_f64_bounds();
        if hi - lo <= tol {
            return Ok(m.mid().to_f64_approx().clamp(lo, hi));
        }
        // Shrink disks relative to the measure's size.
        target = target.div(&Dyadic::from_f64(hi.max(1.0)), 64, Round::Down).mul_pow2(-8);
        profile = refine(&profile, &target)?;
    }
}

fn enclosure(profile: &RootProfile, lc: &num_bigint::BigInt) -> Interval {
    let prec = profile.precision + 64;
    let one = Dyadic::one();
    let mut acc = Interval::from_int(lc);
    for d in &profile.disks {
        let m = d.modulus(prec);
        let lo = core::cmp::max(m.lo, one.clone());
        let hi = core::cmp::max(m.hi, one.clone());
        acc = acc.mul(&Interval::new(lo, hi).pow(d.multiplicity, prec), prec);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn simple_values() {
        assert!((mahler_measure(&p(&[1, 1, 1]), 1e-9).unwrap() - 1.0).abs() < 1e-9);
        assert!((mahler_measure(&p(&[-2, 1]), 1e-9).unwrap() - 2.0).abs() < 1e-9);
        assert!((mahler_measure(&p(&[3]), 1e-9).unwrap() - 3.0).abs() < 1e-9);
        // Lehmer's polynomial.
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!((mahler_measure(&lehmer, 1e-12).unwrap() - 1.176_280_818_259_917).abs() < 1e-11);
    }

    #[test]
    fn multiplicative() {
        let a = p(&[1, -1, 0, 1]);
        let b = p(&[-1, 1, 1, 1]);
        let ma = mahler_measure(&a, 1e-10).unwrap();
        let mb = mahler_measure(&b, 1e-10).unwrap();
        let mab = mahler_measure(&(&a * &b), 1e-10).unwrap();
        assert!((ma * mb - mab).abs() < 1e-9);
    }
}
