//! Membership in the bounded remainder set: for every root `alpha_j` of `P`
//! (multiplicity `e_j`) and every `k < e_j`,
//! `|R^(k)(alpha_j)| <= k! (B - delta) / ||alpha_j| - 1|^(k+1)`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::digits::DigitSet;
use crate::error::{Error, Result};
use crate::numeric::{BallVec, ComplexInterval, Dyadic, F64Ball, Interval, Round};
use crate::poly::{falling_factorial, gcd, IntPoly};
use crate::roots::{refine_to_precision, CircleStatus, RootDisk, RootProfile};

/// Outcome of a membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RemDecision {
    Accept,
    Reject,
    /// The enclosures straddle a threshold at the current precision.
    Ambiguous,
}

/// One bound: root `root` (index into the profile's disks), derivative
/// order `order`, and an enclosure of the bound's exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdEntry {
    pub root: usize,
    pub order: u32,
    pub value: Interval,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Thresholds {
    pub delta: f64,
    pub bound: i64,
    pub entries: Vec<ThresholdEntry>,
}

impl Thresholds {
    /// Conservative (upper) value of the bound for `(root, order)`.
    pub fn value(&self, root: usize, order: u32) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.root == root && e.order == order)
            .map(|e| e.value.hi.to_f64(Round::Up))
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::Precondition("delta must lie in [0, 1)"));
    }
    Ok(())
}

/// Bounds for every decided root. Undecided roots are skipped when
/// `exclude_unimodular` is set and are an error otherwise.
pub fn compute_thresholds(
    profile: &RootProfile,
    digits: &DigitSet,
    delta: f64,
    exclude_unimodular: bool,
) -> Result<Thresholds> {
    check_delta(delta)?;
    let num_base = Dyadic::from_i64(digits.bound()).sub(&Dyadic::from_f64(delta));
    let mut entries = Vec::new();
    for (j, disk) in profile.disks.iter().enumerate() {
        if disk.circle_status == CircleStatus::OnOrUndecided {
            if exclude_unimodular {
                continue;
            }
            return Err(Error::UnimodularUnresolved);
        }
        let gap = positive_gap(disk, profile.precision);
        for k in 0..disk.multiplicity {
            let prec = profile.precision + 32;
            let num = num_base.mul_int(&factorial(k));
            let pow = gap.pow(k + 1, prec);
            let hi = num.div(&pow.lo, prec, Round::Up);
            let lo = num.div(&pow.hi, prec, Round::Down);
            entries.push(ThresholdEntry { root: j, order: k, value: Interval::new(lo, hi) });
        }
    }
    Ok(Thresholds { delta, bound: digits.bound(), entries })
}

/// Enclosure of `||alpha| - 1|` with a strictly positive lower end; the
/// precision grows until the (exactly decided) side shows through rounding.
fn positive_gap(disk: &crate::roots::RootDisk, base: u32) -> Interval {
    let mut prec = base + 32;
    loop {
        let g = disk.circle_gap(prec).expect("decided disk");
        if g.lo.signum() == core::cmp::Ordering::Greater {
            return g;
        }
        prec *= 2;
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k as u64).fold(BigInt::from(1), |acc, m| acc * m)
}

fn derivative_coeffs(r: &IntPoly, k: u32) -> Vec<BigInt> {
    r.derivative(k as usize).into_coeffs()
}

/// Enclosure of `|R^(k)(alpha)|` over a rectangle containing `alpha`.
fn eval_abs(coeffs: &[BigInt], z: &ComplexInterval, prec: u32) -> Interval {
    z.eval_poly(coeffs, prec).abs(prec)
}

/// Combines per-bound enclosures. A straddling enclosure is settled by
/// `tie` when the value provably equals its bound (the bound is inclusive).
fn decide_entries<'a>(
    entries: impl Iterator<Item = (&'a ThresholdEntry, Interval)>,
    mut tie: impl FnMut(&ThresholdEntry) -> bool,
) -> RemDecision {
    let mut straddling = Vec::new();
    for (e, v) in entries {
        if v.lo > e.value.hi {
            return RemDecision::Reject;
        }
        if v.hi > e.value.lo {
            straddling.push(e);
        }
    }
    if straddling.into_iter().all(|e| tie(e)) {
        RemDecision::Accept
    } else {
        RemDecision::Ambiguous
    }
}

/// `k! (B - delta)` as an exact dyadic.
fn bound_numerator(thresholds: &Thresholds, k: u32) -> Dyadic {
    Dyadic::from_i64(thresholds.bound).sub(&Dyadic::from_f64(thresholds.delta)).mul_int(&factorial(k))
}

fn eval_dyadic(p: &IntPoly, x: &Dyadic) -> Dyadic {
    p.coeffs().iter().rev().fold(Dyadic::zero(), |acc, c| acc.mul(x).add(&Dyadic::from_int(c.clone())))
}

/// Exact test of `|R^(k)(alpha)| * ||alpha| - 1|^(k+1) = c` for a real
/// root `alpha` of `p` isolated by `disk`.
///
/// With `s` the sign of `alpha`, `||alpha| - 1| = u(alpha)` for the linear
/// polynomial `u = sX - 1` (outside) or `1 - sX` (inside), so equality means
/// `alpha` is a root of `S = R^(k) u^(k+1) -+ c`. The roots of
/// `h = gcd(S, p)` are roots of `p`, and the disk holds no root of `p` other
/// than `alpha`; a sign change of the squarefree part of `h` across the disk
/// therefore decides the question. Complex roots are never settled here.
fn on_real_boundary(rk: &IntPoly, k: u32, p: &IntPoly, disk: &RootDisk, c: &Dyadic) -> bool {
    use core::cmp::Ordering::{Greater, Less};
    if !disk.is_real() {
        return false;
    }
    let a = disk.center.re.sub(&disk.radius);
    let b = disk.center.re.add(&disk.radius);
    let s = if a.signum() == Greater {
        1
    } else if b.signum() == Less {
        -1
    } else {
        return false;
    };
    let u = match disk.circle_status {
        CircleStatus::Outside => IntPoly::from_i64s(&[-1, s]),
        CircleStatus::Inside => IntPoly::from_i64s(&[1, -s]),
        CircleStatus::OnOrUndecided => return false,
    };
    let (scale, target) = if c.exponent() < 0 {
        (BigInt::from(1) << (-c.exponent()) as usize, c.mantissa().clone())
    } else {
        (BigInt::from(1), c.mantissa() << c.exponent() as usize)
    };
    let lhs = (rk * &u.pow(k + 1)).scale(&scale);
    for t in [target.clone(), -target] {
        let sp = &lhs - &IntPoly::constant(t);
        if sp.is_zero() {
            return true;
        }
        let h = gcd(&sp, p);
        if h.deg() == 0 {
            continue;
        }
        let Ok(hs) = h.div_exact(&gcd(&h, &h.derivative(1))) else { continue };
        let (fa, fb) = (eval_dyadic(&hs, &a).signum(), eval_dyadic(&hs, &b).signum());
        if (fa == Less && fb == Greater) || (fa == Greater && fb == Less) {
            return true;
        }
    }
    false
}

/// `(g + 1 - 2b)^m = U(g) - b V(g)` for `b^2 = g`, as integer polynomials in `g`.
fn gap_power(m: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut u = alloc::vec![BigInt::from(1)];
    let mut v: Vec<BigInt> = Vec::new();
    let shift_add = |a: &[BigInt], b: &[BigInt], scale_b: i64| -> Vec<BigInt> {
        // (g + 1) a + scale_b g b
        let n = a.len().max(b.len()) + 1;
        let mut out = alloc::vec![BigInt::from(0); n];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
            out[i + 1] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i + 1] += c * scale_b;
        }
        out
    };
    for _ in 0..m {
        let nu = shift_add(&u, &v, 2);
        let nv = {
            let mut t = shift_add(&v, &[], 0);
            for (i, c) in u.iter().enumerate() {
                t[i] += c * 2;
            }
            t
        };
        u = nu;
        v = nv;
    }
    (u, v)
}

/// Exact test of `|R^(k)(alpha)| * (|alpha| - 1)^(k+1) = +-c` for a
/// non-real root `alpha` (with `c = t / s`).
///
/// Write `w = R^(k)(x) R^(k)(y)`, `g = xy` and `(g + 1 - 2b)^(k+1) = U - bV`
/// with `b^2 = g`. At `(x, y) = (alpha, conj alpha)` the equality reads
/// `w (U - |alpha| V) = c^2`, which implies `T(x, y) = 0` for the integer
/// polynomial `T = (w U s^2 - t^2)^2 - g w^2 V^2 s^4`. The converse holds
/// unless `w (U + |alpha| V) = c^2`, which is excluded numerically.
///
/// The values of `T` at all ordered pairs of roots are the roots of an
/// integer polynomial `A` (its coefficients are symmetric functions of the
/// roots of the monic `P`), so certified enclosures of its coefficients
/// round to exact integers. If `A = z^m A1` with `m > 0`, every nonzero
/// root of `A` has modulus at least `|a0| / (|a0| + max |ai|)` (`ai` the
/// coefficients of `A1`), and an enclosure of `T(alpha, conj alpha)` below
/// that bound proves the value is zero.
fn on_complex_boundary(rk: &IntPoly, k: u32, profile: &RootProfile, root: usize, c: &Dyadic) -> bool {
    let disk = &profile.disks[root];
    if disk.is_real() || disk.circle_status == CircleStatus::OnOrUndecided || !profile.poly.is_monic() {
        return false;
    }
    let prec = profile.precision * 2 + 64;
    let (s, t) = if c.exponent() < 0 {
        (BigInt::from(1) << (-c.exponent()) as usize, c.mantissa().clone())
    } else {
        (BigInt::from(1), c.mantissa() << c.exponent() as usize)
    };
    let (s2, t2) = (&s * &s, &t * &t);
    let s4 = &s2 * &s2;
    let (u, v) = gap_power(k + 1);
    let rc = rk.coeffs();
    let conj = |z: &ComplexInterval| ComplexInterval::new(z.re.clone(), z.im.neg());
    let t_at = |x: &ComplexInterval, y: &ComplexInterval| -> ComplexInterval {
        let w = x.eval_poly(rc, prec).mul(&y.eval_poly(rc, prec), prec);
        let g = x.mul(y, prec);
        let wu = w.mul(&g.eval_poly(&u, prec), prec).mul_int(&s2, prec).add_int(&-&t2, prec);
        let wv = w.mul(&g.eval_poly(&v, prec), prec);
        let rhs = g.mul(&wv, prec).mul(&wv, prec).mul_int(&s4, prec);
        wu.mul(&wu, prec).sub(&rhs, prec)
    };
    let alpha = disk.enclosure(prec);
    let value = t_at(&alpha, &conj(&alpha));
    if !value.re.contains_zero() || !value.im.contains_zero() {
        return false;
    }
    // Rule out the companion equation w (U + |alpha| V) = c^2, i.e.
    // |R^(k)(alpha)| (|alpha| + 1)^(k+1) = c.
    let r_abs = alpha.eval_poly(rc, prec).abs(prec);
    let other = disk
        .modulus(prec)
        .add(&Interval::from_int(&BigInt::from(1)), prec)
        .pow(k + 1, prec)
        .div(&Interval::point(c.clone()), prec)
        .and_then(|q| Interval::from_int(&BigInt::from(1)).div(&q, prec));
    match other {
        Some(o) if o.hi < r_abs.lo || r_abs.hi < o.lo => {}
        _ => return false,
    }
    // Annihilator over all ordered pairs of distinct roots.
    let roots: Vec<ComplexInterval> = profile.disks.iter().map(|d| d.enclosure(prec)).collect();
    let mut a = alloc::vec![ComplexInterval::from_int(&BigInt::from(1))];
    for x in &roots {
        for y in &roots {
            let val = t_at(x, y);
            let mut next = alloc::vec![ComplexInterval::zero(); a.len() + 1];
            for (i, ai) in a.iter().enumerate() {
                next[i + 1] = next[i + 1].add(ai, prec);
                next[i] = next[i].sub(&ai.mul(&val, prec), prec);
            }
            a = next;
        }
    }
    let mut ints = Vec::with_capacity(a.len());
    for ai in &a {
        let (lo, hi) = (ai.re.lo.ceil_int(), ai.re.hi.floor_int());
        if lo != hi || !ai.im.contains_zero() || ai.im.lo.ceil_int() != ai.im.hi.floor_int() {
            return false;
        }
        ints.push(lo);
    }
    let m = ints.iter().take_while(|x| *x == &BigInt::from(0)).count();
    if m == 0 || m == ints.len() {
        return false;
    }
    let a0 = ints[m].magnitude().clone();
    let amax = ints[m + 1..].iter().map(|x| x.magnitude().clone()).max().unwrap_or_default();
    let bound = Dyadic::from_int(BigInt::from(a0.clone())).div(
        &Dyadic::from_int(BigInt::from(a0 + amax)),
        prec,
        Round::Down,
    );
    value.abs(prec).hi < bound
}

/// Dispatches the exact equality test by root type.
fn on_boundary(r: &IntPoly, e: &ThresholdEntry, thresholds: &Thresholds, profile: &RootProfile) -> bool {
    let c = bound_numerator(thresholds, e.order);
    let rk = r.derivative(e.order as usize);
    let disk = &profile.disks[e.root];
    if disk.is_real() {
        on_real_boundary(&rk, e.order, &profile.poly, disk, &c)
    } else {
        on_complex_boundary(&rk, e.order, profile, e.root, &c)
    }
}

/// Membership test in outward-rounded interval arithmetic at the profile's
/// precision: accept when every enclosure lies below its bound, reject when
/// some enclosure lies above, ambiguous otherwise.
pub fn in_rem(r: &IntPoly, thresholds: &Thresholds, profile: &RootProfile) -> RemDecision {
    let prec = profile.precision + 32;
    decide_entries(
        thresholds.entries.iter().map(|e| {
            let z = profile.disks[e.root].enclosure(prec);
            (e, eval_abs(&derivative_coeffs(r, e.order), &z, prec))
        }),
        |e| on_boundary(r, e, thresholds, profile),
    )
}

/// Precision level of the escalating evaluator.
struct Level {
    profile: RootProfile,
    thresholds: Thresholds,
    rects: Vec<ComplexInterval>,
}

impl Level {
    fn new(profile: RootProfile, digits: &DigitSet, delta: f64, exclude: bool) -> Result<Self> {
        let thresholds = compute_thresholds(&profile, digits, delta, exclude)?;
        let prec = profile.precision + 32;
        let rects = thresholds.entries.iter().map(|e| profile.disks[e.root].enclosure(prec)).collect();
        Ok(Level { profile, thresholds, rects })
    }

    fn decide(&self, r: &[i64]) -> RemDecision {
        let prec = self.profile.precision + 32;
        let poly = IntPoly::from_i64s(r);
        decide_entries(
            self.thresholds.entries.iter().zip(&self.rects).map(|(e, z)| {
                (e, eval_abs(&derivative_coeffs(&poly, e.order), z, prec))
            }),
            |e| on_boundary(&poly, e, &self.thresholds, &self.profile),
        )
    }
}

/// Membership oracle used by the search: an `f64` midpoint-radius fast
/// path, then exact interval evaluation at escalating precision.
pub(crate) struct RemEvaluator {
    fast: Vec<BallVec>,
    thr_lo: Vec<f64>,
    thr_hi: Vec<f64>,
    levels: Vec<Level>,
    digits: DigitSet,
    delta: f64,
    exclude: bool,
    exhausted: bool,
}

const FAST_LIMIT: i64 = 1 << 53;

impl RemEvaluator {
    pub(crate) fn new(profile: RootProfile, digits: &DigitSet, delta: f64, exclude: bool) -> Result<Self> {
        let level = Level::new(profile, digits, delta, exclude)?;
        let n = level.profile.poly.deg();
        let prec = level.profile.precision + 64;
        let mut fast = Vec::with_capacity(level.thresholds.entries.len());
        let mut thr_lo = Vec::new();
        let mut thr_hi = Vec::new();
        for e in &level.thresholds.entries {
            let z = level.profile.disks[e.root].enclosure(prec);
            let k = e.order as usize;
            let mut balls = Vec::with_capacity(n);
            let mut power = ComplexInterval::from_int(&BigInt::from(1));
            for i in 0..n {
                if i < k {
                    balls.push(F64Ball { re: 0.0, im: 0.0, rad: 0.0 });
                    continue;
                }
                let w = power.mul_int(&falling_factorial(i, k), prec);
                balls.push(F64Ball::from_interval(&w));
                power = power.mul(&z, prec);
            }
            fast.push(BallVec::new(&balls));
            thr_lo.push(e.value.lo.to_f64(Round::Down));
            thr_hi.push(e.value.hi.to_f64(Round::Up));
        }
        Ok(RemEvaluator {
            fast,
            thr_lo,
            thr_hi,
            levels: alloc::vec![level],
            digits: digits.clone(),
            delta,
            exclude,
            exhausted: false,
        })
    }

    /// The most refined profile built so far.
    pub(crate) fn into_profile(mut self) -> RootProfile {
        self.levels.pop().expect("at least one level").profile
    }

    /// `Ambiguous` is only returned once the precision cap is reached.
    pub(crate) fn classify(&mut self, r: &[i64]) -> RemDecision {
        if r.iter().all(|c| c.abs() < FAST_LIMIT) {
            let mut ambiguous = false;
            for (i, w) in self.fast.iter().enumerate() {
                let (lo, hi) = w.abs_bounds(r);
                if lo > self.thr_hi[i] {
                    return RemDecision::Reject;
                }
                if hi > self.thr_lo[i] {
                    ambiguous = true;
                }
            }
            if !ambiguous {
                return RemDecision::Accept;
            }
        }
        let mut idx = 0;
        loop {
            let d = self.levels[idx].decide(r);
            if d != RemDecision::Ambiguous {
                return d;
            }
            idx += 1;
            if idx == self.levels.len() && !self.push_level() {
                return RemDecision::Ambiguous;
            }
        }
    }

    fn push_level(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let last = &self.levels.last().unwrap().profile;
        if last.precision >= last.precision_cap() {
            self.exhausted = true;
            return false;
        }
        let next = refine_to_precision(last, last.precision * 2)
            .and_then(|p| Level::new(p, &self.digits, self.delta, self.exclude));
        match next {
            Ok(level) => {
                self.levels.push(level);
                true
            }
            Err(_) => {
                self.exhausted = true;
                false
            }
        }
    }
}
