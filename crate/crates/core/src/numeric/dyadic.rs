use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
    Nearest,
}

/// `mant * 2^exp`, kept with an odd mantissa (or zero with `exp = 0`) so
/// equal values compare structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        match self.mant.trailing_zeros() {
            None => self.exp = 0,
            Some(0) => {}
            Some(tz) => {
                self.mant >>= tz as usize;
                self.exp += tz as i64;
            }
        }
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn one() -> Self {
        Dyadic::from_int(BigInt::one())
    }

    pub fn from_int(n: BigInt) -> Self {
        Dyadic::new(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::from_int(BigInt::from(n))
    }

    /// `2^e`
    pub fn pow2(e: i64) -> Self {
        Dyadic { mant: BigInt::one(), exp: e }
    }

    /// Exact conversion; panics on non-finite input.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite float");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn signum(&self) -> Ordering {
        self.mant.cmp(&BigInt::zero())
    }

    /// Position just above the most significant bit: `|x| < 2^top`.
    pub fn top(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add(&self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &o.mant << (o.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Dyadic) -> Dyadic {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &o.mant, self.exp + o.exp)
    }

    pub fn mul_int(&self, n: &BigInt) -> Dyadic {
        Dyadic::new(&self.mant * n, self.exp)
    }

    /// Multiplies by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Rounds to at most `prec` significant bits.
    pub fn round(&self, prec: u32, mode: Round) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as usize;
        Dyadic::new(shift_round(&self.mant, shift, mode), self.exp + shift as i64)
    }

    /// Quotient rounded to `prec` bits. Panics on division by zero.
    pub fn div(&self, o: &Dyadic, prec: u32, mode: Round) -> Dyadic {
        assert!(!o.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let k = (prec as i64 + 2 + o.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let num = &self.mant << k as usize;
        let q = match mode {
            Round::Down => num.div_floor(&o.mant),
            Round::Up => ceil_div(&num, &o.mant),
            Round::Nearest => {
                let (q, r) = num.div_mod_floor(&o.mant);
                if (r * 2u32).abs() >= o.mant.abs() {
                    q + 1
                } else {
                    q
                }
            }
        };
        Dyadic::new(q, self.exp - o.exp - k).round(prec, mode)
    }

    /// Square root of a nonnegative value, rounded to `prec` bits.
    pub fn sqrt(&self, prec: u32, mode: Round) -> Dyadic {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut k = (2 * prec as i64 + 4 - self.mant.bits() as i64).max(0);
        if (self.exp - k).rem_euclid(2) != 0 {
            k += 1;
        }
        let m = &self.mant << k as usize;
        let mut s = m.sqrt();
        let exact = &s * &s == m;
        match mode {
            Round::Up if !exact => s += 1,
            Round::Nearest => {
                // s^2 <= m < (s+1)^2; round up when m > (s + 1/2)^2
                let twice = &s * 2u32 + 1u32;
                if (&m << 2usize) > &twice * &twice {
                    s += 1;
                }
            }
            _ => {}
        }
        Dyadic::new(s, (self.exp - k) / 2).round(prec, mode)
    }

    /// Directed conversion to `f64`.
    pub fn to_f64(&self, mode: Round) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(53, mode);
        let m = r.mant.to_f64().expect("53-bit mantissa");
        let e = r.exp;
        if e > 1100 {
            return match (mode, r.is_negative()) {
                (Round::Down, false) => f64::MAX,
                (Round::Up, true) => f64::MIN,
                _ => m.signum() * f64::INFINITY,
            };
        }
        if e < -1100 {
            return match (mode, r.is_negative()) {
                (Round::Up, false) => f64::from_bits(1),
                (Round::Down, true) => -f64::from_bits(1),
                _ => 0.0,
            };
        }
        let v = libm::scalbn(m, e as i32);
        if !v.is_finite() {
            return match (mode, r.is_negative()) {
                (Round::Down, false) => f64::MAX,
                (Round::Up, true) => f64::MIN,
                _ => v,
            };
        }
        // Subnormal results may lose bits; nudge outward when directed.
        if Dyadic::from_f64(v) == r {
            v
        } else {
            match mode {
                Round::Up => next_up(v),
                Round::Down => next_down(v),
                Round::Nearest => v,
            }
        }
    }

    pub fn to_f64_approx(&self) -> f64 {
        self.to_f64(Round::Nearest)
    }

    /// Smallest integer `>= self`.
    pub fn ceil_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            shift_round(&self.mant, (-self.exp) as usize, Round::Up)
        }
    }

    /// Largest integer `<= self`.
    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            shift_round(&self.mant, (-self.exp) as usize, Round::Down)
        }
    }

    pub fn round_int(&self) -> BigInt {
        self.add(&Dyadic::pow2(-1)).floor_int()
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == Ordering::Equal {
            return Ordering::Equal;
        }
        // Same sign: compare magnitudes by top bit first.
        let (ta, tb) = (self.top(), other.top());
        if ta != tb {
            let by_mag = ta.cmp(&tb);
            return if sa == Ordering::Greater { by_mag } else { by_mag.reverse() };
        }
        self.sub(other).signum()
    }
}

fn shift_round(m: &BigInt, shift: usize, mode: Round) -> BigInt {
    if shift == 0 {
        return m.clone();
    }
    let floor = m >> shift;
    let rem = m - (&floor << shift);
    if rem.is_zero() {
        return floor;
    }
    match mode {
        Round::Down => floor,
        Round::Up => floor + 1,
        Round::Nearest => {
            let half = BigInt::one() << (shift - 1);
            if rem >= half {
                floor + 1
            } else {
                floor
            }
        }
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

pub fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let b = x.to_bits();
    f64::from_bits(if x > 0.0 { b + 1 } else { b - 1 })
}

pub fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_i64(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(x: f64) -> Dyadic {
        Dyadic::from_f64(x)
    }

    #[test]
    fn f64_round_trip() {
        for x in [0.0, 1.0, -3.5, 0.1, 1e-300, -2.5e300, 5e-324, 1.0 / 3.0] {
            assert_eq!(d(x).to_f64(Round::Nearest), x);
            assert_eq!(d(x).to_f64(Round::Up), x);
            assert_eq!(d(x).to_f64(Round::Down), x);
        }
    }

    #[test]
    fn shift_rounds_toward_negative_infinity() {
        let m = BigInt::from(-5);
        assert_eq!(shift_round(&m, 1, Round::Down), BigInt::from(-3));
        assert_eq!(shift_round(&m, 1, Round::Up), BigInt::from(-2));
        assert_eq!(shift_round(&BigInt::from(5), 1, Round::Down), BigInt::from(2));
    }

    #[test]
    fn directed_division_brackets() {
        let one = Dyadic::one();
        let three = Dyadic::from_i64(3);
        let lo = one.div(&three, 60, Round::Down);
        let hi = one.div(&three, 60, Round::Up);
        assert!(lo < hi);
        assert!(lo.mul(&three) < one);
        assert!(hi.mul(&three) > one);
        assert_eq!(Dyadic::from_i64(6).div(&three, 10, Round::Down), Dyadic::from_i64(2));
        let neg = Dyadic::from_i64(-1).div(&three, 60, Round::Down);
        assert!(neg.mul(&three) < Dyadic::from_i64(-1));
    }

    #[test]
    fn directed_sqrt_brackets() {
        let two = Dyadic::from_i64(2);
        for prec in [20, 64, 300] {
            let lo = two.sqrt(prec, Round::Down);
            let hi = two.sqrt(prec, Round::Up);
            assert!(lo.mul(&lo) < two);
            assert!(hi.mul(&hi) > two);
            assert!(hi.sub(&lo) <= Dyadic::pow2(2 - prec as i64));
        }
        assert_eq!(Dyadic::from_i64(9).sqrt(30, Round::Up), Dyadic::from_i64(3));
        assert_eq!(d(0.25).sqrt(30, Round::Down), d(0.5));
        assert!((two.sqrt(60, Round::Nearest).to_f64_approx() - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn ordering() {
        assert!(d(-1.0) < d(0.5));
        assert!(d(-1.0) < d(-0.5));
        assert!(d(1e10) > d(3.0));
        assert!(d(1.0 + f64::EPSILON) > d(1.0));
        assert_eq!(d(2.0).cmp(&Dyadic::from_i64(2)), Ordering::Equal);
    }

    #[test]
    fn integer_rounding() {
        assert_eq!(d(2.5).floor_int(), BigInt::from(2));
        assert_eq!(d(2.5).ceil_int(), BigInt::from(3));
        assert_eq!(d(-2.5).floor_int(), BigInt::from(-3));
        assert_eq!(d(-2.4).round_int(), BigInt::from(-2));
        assert_eq!(d(7.0).ceil_int(), BigInt::from(7));
    }

    #[test]
    fn next_float_steps() {
        assert!(next_up(1.0) > 1.0);
        assert!(next_down(1.0) < 1.0);
        assert!(next_up(-1.0) > -1.0);
        assert_eq!(next_up(0.0), f64::from_bits(1));
    }
}
