//! Certified complex root isolation.
//!
//! Each squarefree factor is split further into the part that shares roots
//! with its reciprocal (the only place genuine unimodular roots can live)
//! and the rest. Roots are approximated by Aberth iteration, polished at an
//! escalating working precision, symmetrised using the exact real-root
//! count, and certified by Weierstrass inclusion disks evaluated in
//! outward-rounded interval arithmetic.

pub(crate) mod aberth;
mod mahler;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{ComplexDyadic, ComplexInterval, Dyadic, Interval, Round};
use crate::poly::{count_real_roots, gcd, squarefree_decomposition, IntPoly};

pub use mahler::mahler_measure;

/// Starting working precision in bits.
pub const DEFAULT_PRECISION: u32 = 64;
/// Largest working precision tried before giving up.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

/// Position of a root relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CircleStatus {
    Inside,
    Outside,
    OnOrUndecided,
}

/// A closed disk holding exactly one distinct root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDisk {
    pub center: ComplexDyadic,
    pub radius: Dyadic,
    /// Multiplicity of the root in the profiled polynomial.
    pub multiplicity: u32,
    pub circle_status: CircleStatus,
    /// True when the root is also a root of the reciprocal polynomial, so
    /// it may lie on the unit circle.
    pub unimodular_candidate: bool,
}

impl RootDisk {
    /// Rectangle enclosing the disk.
    pub fn enclosure(&self, prec: u32) -> ComplexInterval {
        ComplexInterval::disk(&self.center.re, &self.center.im, &self.radius, prec)
    }

    /// Enclosure of the root's modulus.
    pub fn modulus(&self, prec: u32) -> Interval {
        let n2 = self.center.norm_sqr();
        let lo = n2.sqrt(prec, Round::Down).sub(&self.radius).round(prec, Round::Down);
        let lo = if lo.is_negative() { Dyadic::zero() } else { lo };
        let hi = n2.sqrt(prec, Round::Up).add(&self.radius).round(prec, Round::Up);
        Interval::new(lo, hi)
    }

    /// Enclosure of `||alpha| - 1|`, available once the side is decided.
    pub fn circle_gap(&self, prec: u32) -> Option<Interval> {
        let m = self.modulus(prec);
        let one = Interval::point(Dyadic::one());
        match self.circle_status {
            CircleStatus::Outside => Some(m.sub(&one, prec)),
            CircleStatus::Inside => Some(one.sub(&m, prec)),
            CircleStatus::OnOrUndecided => None,
        }
    }

    pub fn is_real(&self) -> bool {
        self.center.im.is_zero()
    }

    pub fn center_f64(&self) -> Complex64 {
        let (re, im) = self.center.to_f64();
        Complex64::new(re, im)
    }

    fn geometric_status(&self) -> CircleStatus {
        geometric_status(&self.center, &self.radius)
    }
}

fn geometric_status(c: &ComplexDyadic, r: &Dyadic) -> CircleStatus {
    let n2 = c.norm_sqr();
    let one = Dyadic::one();
    let outer = one.add(r);
    if n2 > outer.mul(&outer) {
        return CircleStatus::Outside;
    }
    if r < &one {
        let inner = one.sub(r);
        if n2 < inner.mul(&inner) {
            return CircleStatus::Inside;
        }
    }
    CircleStatus::OnOrUndecided
}

/// One factor whose roots are isolated together.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Part {
    poly: IntPoly,
    multiplicity: u32,
    candidate: bool,
    real_roots: usize,
    first: usize,
}

/// Certified disks for every distinct root of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootProfile {
    pub poly: IntPoly,
    pub disks: Vec<RootDisk>,
    /// Working precision in bits the disks were certified at.
    pub precision: u32,
    cap: u32,
    parts: Vec<Part>,
}

impl RootProfile {
    /// Largest disk radius.
    pub fn max_radius(&self) -> Dyadic {
        self.disks.iter().map(|d| d.radius.clone()).max().unwrap_or_default()
    }

    /// Precision ceiling this profile escalates to.
    pub fn precision_cap(&self) -> u32 {
        self.cap
    }

    pub fn has_undecided(&self) -> bool {
        self.disks.iter().any(|d| d.circle_status == CircleStatus::OnOrUndecided)
    }
}

/// Isolates all roots of `p` starting at `precision` bits, escalating up to
/// [`DEFAULT_PRECISION_CAP`].
pub fn isolate_roots(p: &IntPoly, precision: u32) -> Result<RootProfile> {
    isolate_roots_capped(p, precision, DEFAULT_PRECISION_CAP)
}

/// [`isolate_roots`] with an explicit precision ceiling.
pub fn isolate_roots_capped(p: &IntPoly, precision: u32, cap: u32) -> Result<RootProfile> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Err(Error::Precondition("root isolation needs degree at least 1"));
    }
    let cap = cap.max(precision).max(DEFAULT_PRECISION);
    let mut parts = Vec::new();
    for (f, e) in squarefree_decomposition(p)?.parts {
        split_part(&f, e, &mut parts);
    }
    let mut disks = Vec::new();
    let mut used = precision.max(16);
    for part in &mut parts {
        part.first = disks.len();
        let start = initial_approximations(&part.poly);
        let (found, bits) = isolate_part(part, &start, precision.max(16), cap, None)?;
        used = used.max(bits);
        disks.extend(found);
    }
    let profile = RootProfile { poly: p.clone(), disks, precision: used, cap, parts };
    Ok(resolve_circle_status(profile))
}

/// Separates the root `0`, the roots shared with the reciprocal and the
/// remaining roots of a squarefree primitive factor.
fn split_part(f: &IntPoly, e: u32, out: &mut Vec<Part>) {
    let mut push = |poly: IntPoly, candidate: bool| {
        if poly.deg() >= 1 {
            let real_roots = count_real_roots(&poly);
            out.push(Part { poly, multiplicity: e, candidate, real_roots, first: 0 });
        }
    };
    let g = f.strip_x_power();
    if g.deg() < f.deg() {
        push(IntPoly::from_i64s(&[0, 1]), false);
    }
    if g.deg() == 0 {
        return;
    }
    let recip = g.reciprocal().expect("nonzero constant term");
    let shared = gcd(&g, &recip).primitive_part();
    if shared.deg() == 0 {
        push(g, false);
    } else {
        let rest = g.div_exact(&shared).expect("gcd divides").primitive_part();
        push(shared, true);
        push(rest, false);
    }
}

fn initial_approximations(f: &IntPoly) -> Vec<ComplexDyadic> {
    aberth::aberth_f64(f.coeffs())
        .into_iter()
        .map(|z| ComplexDyadic::from_f64(z.re, z.im))
        .collect()
}

/// Runs the precision ladder for one part. Succeeds when certification
/// passes and, if given, every radius is at most `target`.
fn isolate_part(
    part: &Part,
    start: &[ComplexDyadic],
    prec0: u32,
    cap: u32,
    target: Option<&Dyadic>,
) -> Result<(Vec<RootDisk>, u32)> {
    let coeffs = part.poly.coeffs();
    let mut prec = prec0;
    let mut approx: Vec<ComplexDyadic> = start.to_vec();
    loop {
        let (polished, _) = aberth::aberth_polish(coeffs, &approx, prec);
        let rounded: Vec<ComplexDyadic> = polished.iter().map(|z| aberth::round_point(z, prec)).collect();
        match symmetrize(rounded, part.real_roots) {
            Some(centers) => {
                if let Some(radii) = certify(&part.poly, &centers, prec) {
                    if target.is_none_or(|t| radii.iter().all(|r| r <= t)) {
                        let disks = centers
                            .into_iter()
                            .zip(radii)
                            .map(|(center, radius)| {
                                let circle_status = geometric_status(&center, &radius);
                                RootDisk {
                                    center,
                                    radius,
                                    multiplicity: part.multiplicity,
                                    circle_status,
                                    unimodular_candidate: part.candidate,
                                }
                            })
                            .collect();
                        return Ok((disks, prec));
                    }
                }
                approx = centers;
            }
            None => approx = polished,
        }
        if prec >= cap {
            return Err(Error::IsolationFailed { bits: cap });
        }
        prec = (prec * 2).min(cap);
    }
}

/// Forces the `nreal` approximations closest to the real axis onto it and
/// pairs the rest into exact conjugates. Returns `None` when the
/// approximations do not split into conjugate pairs.
fn symmetrize(mut z: Vec<ComplexDyadic>, nreal: usize) -> Option<Vec<ComplexDyadic>> {
    z.sort_by(|a, b| a.im.abs().cmp(&b.im.abs()));
    let mut reals: Vec<ComplexDyadic> =
        z[..nreal].iter().map(|w| ComplexDyadic::new(w.re.clone(), Dyadic::zero())).collect();
    reals.sort_by(|a, b| a.re.cmp(&b.re));
    let mut upper: Vec<ComplexDyadic> = Vec::new();
    let mut lower: Vec<ComplexDyadic> = Vec::new();
    for w in z.into_iter().skip(nreal) {
        match w.im.signum() {
            core::cmp::Ordering::Greater => upper.push(w),
            core::cmp::Ordering::Less => lower.push(w),
            core::cmp::Ordering::Equal => return None,
        }
    }
    if upper.len() != lower.len() {
        return None;
    }
    upper.sort_by(|a, b| a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im)));
    let mut out = reals;
    for u in upper {
        // Partner: the lower approximation nearest to conj(u).
        let target = u.conj();
        let (idx, _) = lower
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let d = ComplexDyadic::new(l.re.sub(&target.re), l.im.sub(&target.im));
                (i, d.norm_sqr())
            })
            .min_by(|a, b| a.1.cmp(&b.1))?;
        let l = lower.swap_remove(idx);
        let re = u.re.add(&l.re).mul_pow2(-1);
        let im = u.im.sub(&l.im).mul_pow2(-1);
        out.push(ComplexDyadic::new(re.clone(), im.clone()));
        out.push(ComplexDyadic::new(re, im.neg()));
    }
    Some(out)
}

/// Weierstrass inclusion radii: with `W_i = f(z_i) / (lc * prod_{j != i}
/// (z_i - z_j))`, the disks `D(z_i, n |W_i|)` cover the roots and, when
/// pairwise disjoint, each holds exactly one. Conjugate disks get the same
/// radius (the larger of the two).
fn certify(f: &IntPoly, centers: &[ComplexDyadic], prec: u32) -> Option<Vec<Dyadic>> {
    let n = centers.len();
    let lc = f.leading().unwrap();
    let wp = prec + 32;
    let points: Vec<ComplexInterval> = centers.iter().map(ComplexDyadic::to_interval).collect();
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let val = points[i].eval_poly(f.coeffs(), wp);
        let mut den = ComplexInterval::from_int(lc);
        for j in 0..n {
            if j != i {
                den = den.mul(&points[i].sub(&points[j], wp), wp);
            }
        }
        let num2 = val.norm_sqr(wp).hi;
        let den2 = den.norm_sqr(wp).lo;
        if den2.is_zero() || den2.is_negative() {
            return None;
        }
        let w = num2.div(&den2, wp, Round::Up).sqrt(wp, Round::Up);
        radii.push(w.mul_int(&BigInt::from(n)).round(prec, Round::Up));
    }
    // Equalise conjugate pairs (centers are stored pairwise after reals).
    let nreal = centers.iter().take_while(|c| c.im.is_zero()).count();
    let mut k = nreal;
    while k + 1 < n {
        let r = core::cmp::max(radii[k].clone(), radii[k + 1].clone());
        radii[k] = r.clone();
        radii[k + 1] = r;
        k += 2;
    }
    if disjoint(centers, &radii) {
        Some(radii)
    } else {
        None
    }
}

fn disjoint(centers: &[ComplexDyadic], radii: &[Dyadic]) -> bool {
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            let d = ComplexDyadic::new(
                centers[i].re.sub(&centers[j].re),
                centers[i].im.sub(&centers[j].im),
            );
            let s = radii[i].add(&radii[j]);
            if d.norm_sqr() <= s.mul(&s) {
                return false;
            }
        }
    }
    true
}

/// Re-isolates with smaller disks. Decided circle statuses are kept:
/// a refinement is only accepted when every previously decided disk is
/// matched by a new disk with the same decided status.
pub fn refine(profile: &RootProfile, target_radius: &Dyadic) -> Result<RootProfile> {
    refine_inner(profile, Some(target_radius), profile.precision.saturating_mul(2))
}

/// Re-isolates at (at least) `precision` bits.
pub fn refine_to_precision(profile: &RootProfile, precision: u32) -> Result<RootProfile> {
    refine_inner(profile, None, precision)
}

fn refine_inner(profile: &RootProfile, target: Option<&Dyadic>, prec0: u32) -> Result<RootProfile> {
    let cap = profile.cap;
    let mut prec = prec0.clamp(DEFAULT_PRECISION, cap);
    loop {
        let mut disks = Vec::with_capacity(profile.disks.len());
        let mut used = prec;
        let mut ok = true;
        for (idx, part) in profile.parts.iter().enumerate() {
            let end = profile.parts.get(idx + 1).map_or(profile.disks.len(), |p| p.first);
            let start: Vec<ComplexDyadic> =
                profile.disks[part.first..end].iter().map(|d| d.center.clone()).collect();
            let (found, bits) = isolate_part(part, &start, prec, cap, target)?;
            used = used.max(bits);
            for d in found {
                match inherited_status(&profile.disks[part.first..end], &d) {
                    Some(s) if s != d.circle_status => ok = false,
                    _ => {}
                }
                disks.push(d);
            }
        }
        if ok {
            let out = RootProfile {
                poly: profile.poly.clone(),
                disks,
                precision: used,
                cap,
                parts: profile.parts.clone(),
            };
            return Ok(out);
        }
        if prec >= cap {
            return Err(Error::IsolationFailed { bits: cap });
        }
        prec = (used * 2).min(cap);
    }
}

/// Decided status of the unique old disk meeting `new`, if any.
fn inherited_status(old: &[RootDisk], new: &RootDisk) -> Option<CircleStatus> {
    let mut hit = None;
    for d in old {
        let diff = ComplexDyadic::new(d.center.re.sub(&new.center.re), d.center.im.sub(&new.center.im));
        let s = d.radius.add(&new.radius);
        if diff.norm_sqr() <= s.mul(&s) {
            if hit.is_some() {
                return None;
            }
            hit = Some(d.circle_status);
        }
    }
    hit.filter(|s| *s != CircleStatus::OnOrUndecided)
}

/// Labels each disk inside/outside when it provably avoids the unit circle.
/// Roots not shared with `reciprocal(p)` cannot be unimodular, so their
/// disks are refined until they resolve (or the precision cap is reached,
/// in which case they stay undecided).
pub fn classify_circle_status(p: &IntPoly, profile: &RootProfile) -> RootProfile {
    debug_assert_eq!(p, &profile.poly);
    resolve_circle_status(profile.clone())
}

fn resolve_circle_status(mut profile: RootProfile) -> RootProfile {
    for d in &mut profile.disks {
        if d.circle_status == CircleStatus::OnOrUndecided {
            d.circle_status = d.geometric_status();
        }
    }
    loop {
        let pending = profile
            .disks
            .iter()
            .any(|d| !d.unimodular_candidate && d.circle_status == CircleStatus::OnOrUndecided);
        if !pending || profile.precision >= profile.cap {
            return profile;
        }
        match refine_to_precision(&profile, profile.precision * 2) {
            Ok(next) => profile = next,
            Err(_) => return profile,
        }
    }
}

/// Checks the necessary containment condition: `p` evaluated over each
/// disk's enclosure contains zero.
pub fn disks_contain_zero(profile: &RootProfile) -> bool {
    let prec = profile.precision + 32;
    profile.disks.iter().all(|d| {
        let v = d.enclosure(prec).eval_poly(profile.poly.coeffs(), prec);
        v.re.contains_zero() && v.im.contains_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn statuses(pr: &RootProfile) -> Vec<CircleStatus> {
        pr.disks.iter().map(|d| d.circle_status).collect()
    }

    fn check_invariants(pr: &RootProfile) {
        let total: u32 = pr.disks.iter().map(|d| d.multiplicity).sum();
        assert_eq!(total as usize, pr.poly.deg());
        let centers: Vec<_> = pr.disks.iter().map(|d| d.center.clone()).collect();
        let radii: Vec<_> = pr.disks.iter().map(|d| d.radius.clone()).collect();
        assert!(disjoint(&centers, &radii));
        assert!(disks_contain_zero(pr));
        for d in &pr.disks {
            if d.circle_status != CircleStatus::OnOrUndecided {
                assert_eq!(d.geometric_status(), d.circle_status);
            }
            if !d.is_real() {
                assert!(pr.disks.iter().any(|e| e.center == d.center.conj()
                    && e.radius == d.radius
                    && e.multiplicity == d.multiplicity));
            }
        }
    }

    #[test]
    fn square_root_of_three() {
        let pr = isolate_roots(&p(&[-3, 0, 1]), 64).unwrap();
        check_invariants(&pr);
        assert_eq!(statuses(&pr), alloc::vec![CircleStatus::Outside; 2]);
        let xs: Vec<f64> = pr.disks.iter().map(|d| d.center_f64().re).collect();
        assert!((xs[0] + 1.732_050_8).abs() < 1e-7 && (xs[1] - 1.732_050_8).abs() < 1e-7);
    }

    #[test]
    fn cubic_profile() {
        let pr = isolate_roots(&p(&[1, -1, 0, 1]), 64).unwrap();
        check_invariants(&pr);
        let real: Vec<_> = pr.disks.iter().filter(|d| d.is_real()).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0].center_f64().re + 1.324_718_0).abs() < 1e-7);
        assert_eq!(real[0].circle_status, CircleStatus::Outside);
        for d in pr.disks.iter().filter(|d| !d.is_real()) {
            assert!((d.center_f64().norm() - 0.868_837_0).abs() < 1e-7);
            assert_eq!(d.circle_status, CircleStatus::Inside);
        }
        let sq = isolate_roots(&p(&[1, -1, 0, 1]).pow(2), 64).unwrap();
        check_invariants(&sq);
        assert_eq!(sq.disks.len(), 3);
        assert!(sq.disks.iter().all(|d| d.multiplicity == 2));
    }

    #[test]
    fn salem_and_cyclotomic_status() {
        let pr = isolate_roots(&p(&[1, -1, -1, -1, 1]), 64).unwrap();
        check_invariants(&pr);
        let count = |s| pr.disks.iter().filter(|d| d.circle_status == s).count();
        assert_eq!(count(CircleStatus::OnOrUndecided), 2);
        assert_eq!(count(CircleStatus::Inside), 1);
        assert_eq!(count(CircleStatus::Outside), 1);

        let pr = isolate_roots(&p(&[1, 1, 1]), 64).unwrap();
        assert_eq!(statuses(&pr), alloc::vec![CircleStatus::OnOrUndecided; 2]);
        let fine = refine(&pr, &Dyadic::pow2(-200)).unwrap();
        assert_eq!(statuses(&fine), alloc::vec![CircleStatus::OnOrUndecided; 2]);
    }

    #[test]
    fn refinement_shrinks_radii() {
        let pr = isolate_roots(&p(&[-3, 0, 1]), 64).unwrap();
        let target = Dyadic::from_f64(1e-30);
        let fine = refine(&pr, &target).unwrap();
        check_invariants(&fine);
        assert!(fine.max_radius() <= target);
        assert_eq!(statuses(&fine), statuses(&pr));
        let coarse = refine(&isolate_roots(&p(&[1, -1, 0, 1]), 64).unwrap(), &Dyadic::from_f64(1e-2)).unwrap();
        assert!(!coarse.has_undecided());
    }

    #[test]
    fn roots_at_zero_and_repeated_factors() {
        // x^2 (x - 2)^3 (x^2 + 1)
        let f = p(&[0, 1]).pow(2) * p(&[-2, 1]).pow(3) * p(&[1, 0, 1]);
        let pr = isolate_roots(&f, 64).unwrap();
        check_invariants(&pr);
        assert_eq!(pr.disks.len(), 4);
    }

    #[test]
    fn reciprocal_moduli_are_inverse() {
        let f = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1, 3]);
        let a = isolate_roots(&f, 64).unwrap();
        let b = isolate_roots(&f.reciprocal().unwrap(), 64).unwrap();
        let mut ma: Vec<f64> = a.disks.iter().map(|d| 1.0 / d.center_f64().norm()).collect();
        let mut mb: Vec<f64> = b.disks.iter().map(|d| d.center_f64().norm()).collect();
        ma.sort_by(f64::total_cmp);
        mb.sort_by(f64::total_cmp);
        for (x, y) in ma.iter().zip(&mb) {
            assert!((x - y).abs() < 1e-9);
        }
    }
}
