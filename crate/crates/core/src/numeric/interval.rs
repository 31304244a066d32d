use num_bigint::BigInt;

use super::dyadic::{Dyadic, Round};

/// Closed real interval with dyadic endpoints; every operation rounds
/// outward to the requested precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: &BigInt) -> Self {
        Interval::point(Dyadic::from_int(n.clone()))
    }

    pub fn zero() -> Self {
        Interval::point(Dyadic::zero())
    }

    /// `[c - r, c + r]`
    pub fn ball(c: &Dyadic, r: &Dyadic, prec: u32) -> Self {
        Interval {
            lo: c.sub(r).round(prec, Round::Down),
            hi: c.add(r).round(prec, Round::Up),
        }
    }

    pub fn add(&self, o: &Interval, prec: u32) -> Interval {
        Interval {
            lo: self.lo.add(&o.lo).round(prec, Round::Down),
            hi: self.hi.add(&o.hi).round(prec, Round::Up),
        }
    }

    pub fn sub(&self, o: &Interval, prec: u32) -> Interval {
        Interval {
            lo: self.lo.sub(&o.hi).round(prec, Round::Down),
            hi: self.hi.sub(&o.lo).round(prec, Round::Up),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn mul(&self, o: &Interval, prec: u32) -> Interval {
        let cands = [
            self.lo.mul(&o.lo),
            self.lo.mul(&o.hi),
            self.hi.mul(&o.lo),
            self.hi.mul(&o.hi),
        ];
        let lo = cands.iter().min().unwrap();
        let hi = cands.iter().max().unwrap();
        Interval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up) }
    }

    pub fn mul_int(&self, n: &BigInt, prec: u32) -> Interval {
        let a = self.lo.mul_int(n);
        let b = self.hi.mul_int(n);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up) }
    }

    /// `{x^2}`; tight when the interval straddles zero.
    pub fn sqr(&self, prec: u32) -> Interval {
        let a = self.lo.mul(&self.lo);
        let b = self.hi.mul(&self.hi);
        let (mut lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if self.contains_zero() {
            lo = Dyadic::zero();
        }
        Interval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up) }
    }

    /// Division by an interval that excludes zero.
    pub fn div(&self, o: &Interval, prec: u32) -> Option<Interval> {
        if o.contains_zero() {
            return None;
        }
        let mut lo_c = [
            self.lo.div(&o.lo, prec, Round::Down),
            self.lo.div(&o.hi, prec, Round::Down),
            self.hi.div(&o.lo, prec, Round::Down),
            self.hi.div(&o.hi, prec, Round::Down),
        ];
        let mut hi_c = [
            self.lo.div(&o.lo, prec, Round::Up),
            self.lo.div(&o.hi, prec, Round::Up),
            self.hi.div(&o.lo, prec, Round::Up),
            self.hi.div(&o.hi, prec, Round::Up),
        ];
        lo_c.sort();
        hi_c.sort();
        Some(Interval { lo: lo_c[0].clone(), hi: hi_c[3].clone() })
    }

    /// Square root of the nonnegative part.
    pub fn sqrt(&self, prec: u32) -> Interval {
        let lo = if self.lo.is_negative() { Dyadic::zero() } else { self.lo.sqrt(prec, Round::Down) };
        let hi = if self.hi.is_negative() { Dyadic::zero() } else { self.hi.sqrt(prec, Round::Up) };
        Interval { lo, hi }
    }

    pub fn abs(&self) -> Interval {
        if self.contains_zero() {
            let m = core::cmp::max(self.lo.abs(), self.hi.abs());
            Interval { lo: Dyadic::zero(), hi: m }
        } else if self.lo.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32, prec: u32) -> Interval {
        let mut acc = Interval::point(Dyadic::one());
        for _ in 0..e {
            acc = acc.mul(self, prec);
        }
        acc
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() != core::cmp::Ordering::Greater && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    /// Certainly below: every point of `self` is `< o`.
    pub fn lt(&self, o: &Interval) -> bool {
        self.hi < o.lo
    }

    pub fn hull(&self, o: &Interval) -> Interval {
        Interval {
            lo: core::cmp::min(&self.lo, &o.lo).clone(),
            hi: core::cmp::max(&self.hi, &o.hi).clone(),
        }
    }

    /// Outward `f64` bounds.
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (self.lo.to_f64(Round::Down), self.hi.to_f64(Round::Up))
    }
}

/// Axis-aligned complex rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn zero() -> Self {
        ComplexInterval { re: Interval::zero(), im: Interval::zero() }
    }

    pub fn from_int(n: &BigInt) -> Self {
        ComplexInterval { re: Interval::from_int(n), im: Interval::zero() }
    }

    /// Rectangle enclosing the disk `|z - c| <= r`.
    pub fn disk(re: &Dyadic, im: &Dyadic, r: &Dyadic, prec: u32) -> Self {
        ComplexInterval { re: Interval::ball(re, r, prec), im: Interval::ball(im, r, prec) }
    }

    pub fn add(&self, o: &ComplexInterval, prec: u32) -> Self {
        ComplexInterval { re: self.re.add(&o.re, prec), im: self.im.add(&o.im, prec) }
    }

    pub fn sub(&self, o: &ComplexInterval, prec: u32) -> Self {
        ComplexInterval { re: self.re.sub(&o.re, prec), im: self.im.sub(&o.im, prec) }
    }

    pub fn mul(&self, o: &ComplexInterval, prec: u32) -> Self {
        let rr = self.re.mul(&o.re, prec);
        let ii = self.im.mul(&o.im, prec);
        let ri = self.re.mul(&o.im, prec);
        let ir = self.im.mul(&o.re, prec);
        ComplexInterval { re: rr.sub(&ii, prec), im: ri.add(&ir, prec) }
    }

    pub fn mul_int(&self, n: &BigInt, prec: u32) -> Self {
        ComplexInterval { re: self.re.mul_int(n, prec), im: self.im.mul_int(n, prec) }
    }

    pub fn add_int(&self, n: &BigInt, prec: u32) -> Self {
        ComplexInterval { re: self.re.add(&Interval::from_int(n), prec), im: self.im.clone() }
    }

    /// Enclosure of the modulus.
    pub fn abs(&self, prec: u32) -> Interval {
        let s = self.re.sqr(prec).add(&self.im.sqr(prec), prec);
        s.sqrt(prec)
    }

    /// Enclosure of the squared modulus.
    pub fn norm_sqr(&self, prec: u32) -> Interval {
        self.re.sqr(prec).add(&self.im.sqr(prec), prec)
    }

    /// Horner evaluation of an integer polynomial (coefficients lowest
    /// degree first) over the rectangle.
    pub fn eval_poly(&self, coeffs: &[BigInt], prec: u32) -> ComplexInterval {
        let mut acc = ComplexInterval::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(self, prec).add_int(c, prec);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(Dyadic::from_f64(a), Dyadic::from_f64(b))
    }

    #[test]
    fn arithmetic_contains_true_values() {
        let a = iv(1.0, 2.0);
        let b = iv(-3.0, 0.5);
        let m = a.mul(&b, 64);
        assert_eq!(m.to_f64_bounds(), (-6.0, 1.0));
        let s = b.sqr(64);
        assert_eq!(s.to_f64_bounds(), (0.0, 9.0));
        assert_eq!(b.abs().to_f64_bounds(), (0.0, 3.0));
        let q = iv(1.0, 1.0).div(&iv(3.0, 3.0), 40).unwrap();
        let (lo, hi) = q.to_f64_bounds();
        assert!(lo <= 1.0 / 3.0 && 1.0 / 3.0 <= hi);
        assert!(iv(1.0, 2.0).div(&b, 40).is_none());
    }

    #[test]
    fn zero_containment() {
        assert!(iv(-1.0, 1.0).contains_zero());
        assert!(iv(0.0, 1.0).contains_zero());
        assert!(iv(-1.0, 0.0).contains_zero());
        assert!(!iv(0.5, 1.0).contains_zero());
        assert!(!iv(-1.0, -0.5).contains_zero());
    }

    #[test]
    fn complex_modulus_and_horner() {
        let z = ComplexInterval::new(iv(3.0, 3.0), iv(4.0, 4.0));
        let (lo, hi) = z.abs(64).to_f64_bounds();
        assert!(lo <= 5.0 && 5.0 <= hi && hi - lo < 1e-15);
        // x^2 + 1 at i is 0
        let i = ComplexInterval::new(Interval::zero(), iv(1.0, 1.0));
        let coeffs = [BigInt::from(1), BigInt::from(0), BigInt::from(1)];
        let v = i.eval_poly(&coeffs, 64);
        assert!(v.re.contains_zero() && v.im.contains_zero());
    }
}
