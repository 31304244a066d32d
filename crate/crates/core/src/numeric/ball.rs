use alloc::vec::Vec;

use super::dyadic::{next_down, next_up, Dyadic, Round};
use super::interval::ComplexInterval;

const EPS: f64 = f64::EPSILON;
// Absolute slack per operation covering gradual underflow.
const TINY: f64 = 1e-300;

/// Complex disk with `f64` center; `rad` is a certified upper bound on the
/// distance from the center to any enclosed point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F64Ball {
    pub re: f64,
    pub im: f64,
    pub rad: f64,
}

impl F64Ball {
    /// Smallest-effort disk enclosing a complex rectangle.
    pub fn from_interval(z: &ComplexInterval) -> Self {
        let cr = z.re.mid().to_f64(Round::Nearest);
        let ci = z.im.mid().to_f64(Round::Nearest);
        let dcr = Dyadic::from_f64(cr);
        let dci = Dyadic::from_f64(ci);
        let dx = core::cmp::max(z.re.hi.sub(&dcr), dcr.sub(&z.re.lo)).to_f64(Round::Up);
        let dy = core::cmp::max(z.im.hi.sub(&dci), dci.sub(&z.im.lo)).to_f64(Round::Up);
        F64Ball { re: cr, im: ci, rad: next_up(dx + dy) }
    }
}

/// Weights `w_i` for rigorous evaluation of `|sum r_i w_i|` with small
/// integer `r_i`.
#[derive(Clone, Debug, Default)]
pub struct BallVec {
    re: Vec<f64>,
    im: Vec<f64>,
    rad: Vec<f64>,
    l1: Vec<f64>,
}

impl BallVec {
    pub fn new(balls: &[F64Ball]) -> Self {
        BallVec {
            re: balls.iter().map(|b| b.re).collect(),
            im: balls.iter().map(|b| b.im).collect(),
            rad: balls.iter().map(|b| b.rad).collect(),
            l1: balls.iter().map(|b| next_up(b.re.abs() + b.im.abs())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty()
    }

    /// Lower and upper bounds on `|sum r_i w_i|`. Every `|r_i|` must be at
    /// most `2^53` so the conversion to `f64` is exact; `r` may be shorter
    /// than the weight vector (missing entries are zero).
    pub fn abs_bounds(&self, r: &[i64]) -> (f64, f64) {
        let n = r.len().min(self.re.len());
        let (mut sr, mut si, mut spread, mut mag) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for i in 0..n {
            let c = r[i];
            if c == 0 {
                continue;
            }
            let x = c as f64;
            sr += x * self.re[i];
            si += x * self.im[i];
            let ax = x.abs();
            spread += ax * self.rad[i];
            mag += ax * self.l1[i];
        }
        let gamma = (n as f64 + 2.0) * EPS;
        let slack = 1.0 + 2.0 * gamma;
        let err = (spread + gamma * mag) * slack + (n as f64 + 1.0) * TINY;
        let h = libm::hypot(sr, si);
        let hi = next_up(h * (1.0 + 2.0 * EPS) + err);
        let lo = next_down(h * (1.0 - 2.0 * EPS) - err).max(0.0);
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Interval;

    #[test]
    fn bounds_bracket_exact_sum() {
        // weights 1/3 + i/7 and -0.1, sum with r = (3, 10)
        let third = Dyadic::one().div(&Dyadic::from_i64(3), 200, Round::Nearest);
        let seventh = Dyadic::one().div(&Dyadic::from_i64(7), 200, Round::Nearest);
        let tenth = Dyadic::one().div(&Dyadic::from_i64(-10), 200, Round::Nearest);
        let w = [
            F64Ball::from_interval(&ComplexInterval::new(Interval::point(third), Interval::point(seventh))),
            F64Ball::from_interval(&ComplexInterval::new(Interval::point(tenth), Interval::zero())),
        ];
        let v = BallVec::new(&w);
        let (lo, hi) = v.abs_bounds(&[3, 10]);
        let exact = libm::hypot(0.0, 3.0 / 7.0);
        assert!(lo <= exact && exact <= hi, "{lo} {exact} {hi}");
        assert!(hi - lo < 1e-13);
    }

    #[test]
    fn radius_covers_rectangle() {
        let z = ComplexInterval::new(
            Interval::new(Dyadic::from_f64(1.0), Dyadic::from_f64(1.5)),
            Interval::new(Dyadic::from_f64(-0.5), Dyadic::from_f64(0.5)),
        );
        let b = F64Ball::from_interval(&z);
        assert!(b.rad >= libm::hypot(0.25, 0.5));
    }
}
