use super::dyadic::{Dyadic, Round};
use super::interval::{ComplexInterval, Interval};

/// Complex number with dyadic parts, used for root approximations.
/// Arithmetic rounds to nearest at the given precision; certified bounds go
/// through [`ComplexInterval`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComplexDyadic {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl ComplexDyadic {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        ComplexDyadic { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        ComplexDyadic { re: Dyadic::from_f64(re), im: Dyadic::from_f64(im) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64_approx(), self.im.to_f64_approx())
    }

    pub fn conj(&self) -> Self {
        ComplexDyadic { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Self, prec: u32) -> Self {
        ComplexDyadic {
            re: self.re.add(&o.re).round(prec, Round::Nearest),
            im: self.im.add(&o.im).round(prec, Round::Nearest),
        }
    }

    pub fn sub(&self, o: &Self, prec: u32) -> Self {
        ComplexDyadic {
            re: self.re.sub(&o.re).round(prec, Round::Nearest),
            im: self.im.sub(&o.im).round(prec, Round::Nearest),
        }
    }

    pub fn mul(&self, o: &Self, prec: u32) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexDyadic { re: re.round(prec, Round::Nearest), im: im.round(prec, Round::Nearest) }
    }

    pub fn norm_sqr(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// `None` when dividing by zero.
    pub fn div(&self, o: &Self, prec: u32) -> Option<Self> {
        let den = o.norm_sqr();
        if den.is_zero() {
            return None;
        }
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im));
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im));
        Some(ComplexDyadic {
            re: re.div(&den, prec, Round::Nearest),
            im: im.div(&den, prec, Round::Nearest),
        })
    }

    /// Approximate modulus as `f64`.
    pub fn abs_f64(&self) -> f64 {
        let (a, b) = self.to_f64();
        libm::hypot(a, b)
    }

    pub fn to_interval(&self) -> ComplexInterval {
        ComplexInterval::new(Interval::point(self.re.clone()), Interval::point(self.im.clone()))
    }

    /// Horner evaluation with round-to-nearest.
    pub fn eval_poly(&self, coeffs: &[num_bigint::BigInt], prec: u32) -> Self {
        let mut acc = ComplexDyadic::default();
        for c in coeffs.iter().rev() {
            acc = acc.mul(self, prec);
            acc.re = acc.re.add(&Dyadic::from_int(c.clone())).round(prec, Round::Nearest);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_inverts_multiplication() {
        let a = ComplexDyadic::from_f64(1.5, -2.0);
        let b = ComplexDyadic::from_f64(0.25, 3.0);
        let q = a.mul(&b, 200).div(&b, 200).unwrap();
        let (re, im) = q.to_f64();
        assert!((re - 1.5).abs() < 1e-15 && (im + 2.0).abs() < 1e-15);
        assert!(a.div(&ComplexDyadic::default(), 64).is_none());
    }
}
