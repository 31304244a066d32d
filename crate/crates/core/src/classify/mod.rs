//! Family sweeps: which Borwein (or Newman, Littlewood) polynomials divide
//! some Littlewood polynomial and which divide some Newman polynomial.
//!
//! Cyclotomic factors never change the answer (a multiple of the rest can
//! be stretched to absorb them, except `X - 1` for Newman multiples), so
//! every question is reduced to the noncyclotomic part `N`. Verdicts for
//! irreducible factors are memoized: a factor without a multiple rules out
//! every polynomial containing it, while factors that all have multiples
//! say nothing about their product, which is then searched directly.

mod family;
mod tables;

use core::cell::RefCell;

use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::numeric::{Dyadic, Round};
use crate::poly::{cyclotomic_split, factor_noncyclotomic, has_nonneg_real_root, CyclotomicSplit, IntPoly};
use crate::poly::DEFAULT_FACTOR_DEGREE_CAP;
use crate::roots::{isolate_roots_capped, mahler_measure, RootProfile, DEFAULT_PRECISION};
use crate::search::{
    decide, extend_with_cyclotomic, verify_witness, DigitSet, InconclusiveReason, SearchOptions, Traversal, Verdict,
};

pub use family::{enumerate_family, Family, FamilyIter, FamilySpec};
pub use tables::{count_row, mahler_screen, partition_row, CountRow, PartitionRow};

/// Largest degree for which the four structure classes cover `B_d`.
pub const PARTITION_DEGREE_CAP: usize = 11;

/// Kind of multiple asked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Littlewood,
    Newman,
}

impl Target {
    pub fn digits(self) -> DigitSet {
        match self {
            Target::Littlewood => DigitSet::littlewood(),
            Target::Newman => DigitSet::newman(),
        }
    }
}

/// Tri-state answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Yes,
    No,
    Unknown(InconclusiveReason),
}

impl Membership {
    pub fn is_yes(self) -> bool {
        self == Membership::Yes
    }

    pub fn is_no(self) -> bool {
        self == Membership::No
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Unknown(_) => "inconclusive",
        }
    }
}

/// Why a verdict was reached without (or before) a search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Note {
    /// Only cyclotomic factors: decided by construction.
    Cyclotomic,
    /// A real root in `[0, inf)`; Newman polynomials have none.
    NonnegRealRoot,
    /// A root certifiably outside `1/tau < |z| < tau`.
    Annulus,
    /// Content above 1.
    Content,
    /// The noncyclotomic part is not monic.
    LeadingCoefficient,
    /// `|N(0)| != 1`, while every multiple's lowest nonzero digit is `+-1`.
    ConstantTerm,
    /// This irreducible factor has no multiple.
    Factor(IntPoly),
}

impl Note {
    pub fn label(&self) -> &'static str {
        match self {
            Note::Cyclotomic => "cyclotomic",
            Note::NonnegRealRoot => "fail_real_root",
            Note::Annulus => "fail_annulus",
            Note::Content => "content",
            Note::LeadingCoefficient => "leading_coefficient",
            Note::ConstantTerm => "constant_term",
            Note::Factor(_) => "factor",
        }
    }
}

/// A memoized answer for one polynomial and one target.
#[derive(Clone, Debug, PartialEq)]
pub struct Decision {
    pub membership: Membership,
    /// A multiple with digits in the target set when the answer is yes.
    pub witness: Option<IntPoly>,
    pub note: Option<Note>,
    /// Vertices explored by the deciding search (0 when none ran).
    pub nodes: u64,
}

impl Decision {
    fn no(note: Note) -> Self {
        Decision { membership: Membership::No, witness: None, note: Some(note), nodes: 0 }
    }
}

/// Memo of decisions keyed by polynomial (primitive, positive leading
/// coefficient) and target. Implementations must tolerate concurrent
/// readers if they are shared between threads.
pub trait VerdictCache {
    fn lookup(&self, poly: &IntPoly, target: Target) -> Option<Decision>;
    fn store(&self, poly: &IntPoly, target: Target, decision: &Decision);
}

/// No memoization.
impl VerdictCache for () {
    fn lookup(&self, _: &IntPoly, _: Target) -> Option<Decision> {
        None
    }

    fn store(&self, _: &IntPoly, _: Target, _: &Decision) {}
}

/// Single-threaded memo.
#[derive(Debug, Default)]
pub struct LocalCache {
    map: RefCell<HashMap<(IntPoly, Target), Decision>>,
}

impl LocalCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl VerdictCache for LocalCache {
    fn lookup(&self, poly: &IntPoly, target: Target) -> Option<Decision> {
        self.map.borrow().get(&(poly.clone(), target)).cloned()
    }

    fn store(&self, poly: &IntPoly, target: Target, decision: &Decision) {
        self.map.borrow_mut().insert((poly.clone(), target), decision.clone());
    }
}

/// Shape of the noncyclotomic part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    /// Constant: a product of cyclotomic polynomials.
    C,
    /// Irreducible.
    F1,
    /// Product of two distinct irreducibles.
    F2,
    /// Square of an irreducible.
    M,
}

impl Structure {
    pub fn as_str(self) -> &'static str {
        match self {
            Structure::C => "C",
            Structure::F1 => "F1",
            Structure::F2 => "F2",
            Structure::M => "M",
        }
    }
}

fn shape(factors: &[(IntPoly, u32)]) -> Option<Structure> {
    match factors {
        [] => Some(Structure::C),
        [(_, 1)] => Some(Structure::F1),
        [(_, 1), (_, 1)] => Some(Structure::F2),
        [(_, 2)] => Some(Structure::M),
        _ => None,
    }
}

/// Class of `p` in the four-way partition. The classes are exhaustive for
/// Borwein polynomials of degree at most 11 only.
pub fn partition_structure(p: &IntPoly) -> Result<Structure> {
    if p.deg() > PARTITION_DEGREE_CAP {
        return Err(Error::UnsupportedDegree { degree: p.deg(), cap: PARTITION_DEGREE_CAP });
    }
    let split = cyclotomic_split(p)?;
    let factors = noncyclotomic_factors(&split, DEFAULT_FACTOR_DEGREE_CAP)?;
    shape(&factors).ok_or(Error::Precondition("noncyclotomic part is not of the form f, fg or f^2"))
}

fn noncyclotomic_factors(split: &CyclotomicSplit, cap: usize) -> Result<Vec<(IntPoly, u32)>> {
    if split.noncyclo.deg() == 0 {
        Ok(Vec::new())
    } else {
        factor_noncyclotomic(&split.noncyclo, cap)
    }
}

/// Outcome of the cheap Newman tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NewmanPrefilter {
    Pass,
    FailRealRoot,
    FailAnnulus,
}

/// Necessary conditions for dividing a Newman polynomial: no root in
/// `[0, inf)` and every root inside `1/tau < |z| < tau`, `tau` the golden
/// ratio. `Pass` does not imply that a multiple exists.
pub fn newman_prefilter(p: &IntPoly, profile: &RootProfile) -> NewmanPrefilter {
    if has_nonneg_real_root(p) {
        return NewmanPrefilter::FailRealRoot;
    }
    let prec = profile.precision + 32;
    let five = Dyadic::from_i64(5);
    let one = Dyadic::one();
    // tau = (1 + sqrt 5)/2 and 1/tau = tau - 1.
    let tau_hi = one.add(&five.sqrt(prec, Round::Up)).mul_pow2(-1);
    let inv_tau_lo = five.sqrt(prec, Round::Down).sub(&one).mul_pow2(-1);
    let outside = profile.disks.iter().any(|d| {
        let m = d.modulus(prec);
        m.lo >= tau_hi || m.hi <= inv_tau_lo
    });
    if outside {
        NewmanPrefilter::FailAnnulus
    } else {
        NewmanPrefilter::Pass
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifyOptions {
    /// Options for every search; unimodular roots are always excluded
    /// (which keeps negative answers sound, since exclusion only enlarges
    /// the explored graph), and such graphs are explored breadth-first.
    pub search: SearchOptions,
    pub littlewood: bool,
    pub newman: bool,
    pub mahler: bool,
    pub factor_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            search: SearchOptions::default(),
            littlewood: true,
            newman: true,
            mahler: false,
            factor_cap: DEFAULT_FACTOR_DEGREE_CAP,
        }
    }
}

/// Everything known about one polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassRecord {
    pub poly: IntPoly,
    pub noncyclo: IntPoly,
    /// `(n, multiplicity)` of every cyclotomic factor `Phi_n`.
    pub cyclotomic: Vec<(u64, u32)>,
    pub factors: Vec<(IntPoly, u32)>,
    /// `None` when the noncyclotomic part has another shape.
    pub structure: Option<Structure>,
    pub in_l: Option<Decision>,
    pub in_n: Option<Decision>,
    pub mahler: Option<f64>,
}

impl ClassRecord {
    pub fn l(&self) -> Option<Membership> {
        self.in_l.as_ref().map(|d| d.membership)
    }

    pub fn n(&self) -> Option<Membership> {
        self.in_n.as_ref().map(|d| d.membership)
    }
}

/// Classifies `p` (nonzero, `p(0) != 0`) for the requested targets.
/// Every positive answer carries a verified multiple of `p` itself.
pub fn classify_polynomial(p: &IntPoly, opts: &ClassifyOptions, cache: &dyn VerdictCache) -> Result<ClassRecord> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term() == BigInt::from(0) {
        return Err(Error::ZeroConstantTerm);
    }
    let split = cyclotomic_split(p)?;
    let factors = noncyclotomic_factors(&split, opts.factor_cap)?;
    let structure = shape(&factors);
    let run = |t: Target| membership_of(p, &split, &factors, t, opts, cache);
    let in_l = if opts.littlewood { Some(run(Target::Littlewood)?) } else { None };
    let in_n = if opts.newman { Some(run(Target::Newman)?) } else { None };
    let mahler = if opts.mahler { Some(mahler_measure(p, 1e-10)?) } else { None };
    Ok(ClassRecord {
        poly: p.clone(),
        noncyclo: split.noncyclo.clone(),
        cyclotomic: split.indices.clone(),
        factors,
        structure,
        in_l,
        in_n,
        mahler,
    })
}

fn membership_of(
    p: &IntPoly,
    split: &CyclotomicSplit,
    factors: &[(IntPoly, u32)],
    target: Target,
    opts: &ClassifyOptions,
    cache: &dyn VerdictCache,
) -> Result<Decision> {
    if !split.scalar.abs().is_one() {
        return Ok(Decision::no(Note::Content));
    }
    if target == Target::Newman && has_nonneg_real_root(p) {
        return Ok(Decision::no(Note::NonnegRealRoot));
    }
    let n = &split.noncyclo;
    let mut base = if n.deg() == 0 {
        Decision {
            membership: Membership::Yes,
            witness: Some(IntPoly::one()),
            note: Some(Note::Cyclotomic),
            nodes: 0,
        }
    } else {
        let mut inherited = None;
        if !(factors.len() == 1 && factors[0].1 == 1) {
            for (f, _) in factors {
                if decide_target(f, target, opts, cache)?.membership == Membership::No {
                    inherited = Some(Decision::no(Note::Factor(f.clone())));
                    break;
                }
            }
        }
        match inherited {
            Some(d) => d,
            None => decide_target(n, target, opts, cache)?,
        }
    };
    if base.membership == Membership::Yes {
        let digits = target.digits();
        let mut w = base.witness.take().expect("positive decisions carry a witness");
        for &(k, e) in &split.indices {
            for _ in 0..e {
                w = extend_with_cyclotomic(&w, k, &digits)?;
            }
        }
        assert!(verify_witness(p, &w, &digits), "lifted multiple failed verification");
        base.witness = Some(w);
    }
    Ok(base)
}

/// Memoized decision for a polynomial without cyclotomic factors.
pub fn decide_target(
    f: &IntPoly,
    target: Target,
    opts: &ClassifyOptions,
    cache: &dyn VerdictCache,
) -> Result<Decision> {
    if let Some(d) = cache.lookup(f, target) {
        return Ok(d);
    }
    let d = decide_uncached(f, target, &opts.search)?;
    cache.store(f, target, &d);
    Ok(d)
}

fn decide_uncached(f: &IntPoly, target: Target, search: &SearchOptions) -> Result<Decision> {
    if !f.is_monic() {
        return Ok(Decision::no(Note::LeadingCoefficient));
    }
    if !f.constant_term().abs().is_one() {
        return Ok(Decision::no(Note::ConstantTerm));
    }
    let profile = match isolate_roots_capped(f, DEFAULT_PRECISION, search.precision_cap) {
        Ok(pr) => pr,
        Err(Error::IsolationFailed { .. }) => {
            return Ok(Decision {
                membership: Membership::Unknown(InconclusiveReason::PrecisionCap),
                witness: None,
                note: None,
                nodes: 0,
            })
        }
        Err(e) => return Err(e),
    };
    if target == Target::Newman {
        match newman_prefilter(f, &profile) {
            NewmanPrefilter::FailRealRoot => return Ok(Decision::no(Note::NonnegRealRoot)),
            NewmanPrefilter::FailAnnulus => return Ok(Decision::no(Note::Annulus)),
            NewmanPrefilter::Pass => {}
        }
    }
    let mut so = search.clone();
    so.exclude_unimodular = true;
    if profile.has_undecided() {
        so.traversal = Traversal::Bfs;
    }
    Ok(match decide(f, &target.digits(), &so)? {
        Verdict::Found { witness, nodes_explored, .. } => Decision {
            membership: Membership::Yes,
            witness: Some(witness),
            note: None,
            nodes: nodes_explored,
        },
        Verdict::NoMultiple { nodes_explored, .. } => Decision {
            membership: Membership::No,
            witness: None,
            note: None,
            nodes: nodes_explored,
        },
        Verdict::Inconclusive { reason, nodes_explored } => Decision {
            membership: Membership::Unknown(reason),
            witness: None,
            note: None,
            nodes: nodes_explored,
        },
    })
}

/// Classifies every member of a family (sequentially, sharing `cache`).
pub fn classify_family(spec: FamilySpec, opts: &ClassifyOptions, cache: &dyn VerdictCache) -> Result<Vec<ClassRecord>> {
    enumerate_family(spec).map(|p| classify_polynomial(&p, opts, cache)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn classify(c: &[i64]) -> ClassRecord {
        classify_polynomial(&p(c), &ClassifyOptions::default(), &LocalCache::new()).unwrap()
    }

    #[test]
    fn structure_examples() {
        assert_eq!(partition_structure(&p(&[1, 1, 1])).unwrap(), Structure::C);
        assert_eq!(partition_structure(&p(&[1, -1, 0, 1])).unwrap(), Structure::F1);
        assert_eq!(partition_structure(&p(&[1, 0, -1, 1, 1, 1, -1, 0, 1])).unwrap(), Structure::F2);
        assert_eq!(partition_structure(&p(&[1, -1, 0, 1, 1, 0, -1, 1, 1])).unwrap(), Structure::M);
        let big = p(&[1; 13]);
        assert!(matches!(partition_structure(&big), Err(Error::UnsupportedDegree { .. })));
    }

    #[test]
    fn prefilter_examples() {
        let run = |c: &[i64]| {
            let q = p(c);
            newman_prefilter(&q, &crate::roots::isolate_roots(&q, 64).unwrap())
        };
        assert_eq!(run(&[-2, 1]), NewmanPrefilter::FailRealRoot);
        assert_eq!(run(&[2, 1]), NewmanPrefilter::FailAnnulus);
        assert_eq!(run(&[-1, 1]), NewmanPrefilter::FailRealRoot);
        // X^3 + X^2 - X + 1 has the real root -1.8393 < -tau.
        assert_eq!(run(&[1, -1, 1, 1]), NewmanPrefilter::FailAnnulus);
        assert_eq!(run(&[1, -1, 0, 1]), NewmanPrefilter::Pass);
        // X^2 + X - 1 has the root -tau, exactly on the boundary; not certified.
        assert_eq!(run(&[-1, 1, 1]), NewmanPrefilter::FailRealRoot);
        assert_eq!(run(&[1, 0, 0, 9]), NewmanPrefilter::FailAnnulus);
        assert_eq!(run(&[1, 0, 0, 3]), NewmanPrefilter::Pass);
    }

    #[test]
    fn quartic_is_in_neither() {
        let r = classify(&[1, -1, 0, 1, 1]);
        assert_eq!(r.l(), Some(Membership::No));
        assert_eq!(r.n(), Some(Membership::No));
        assert_eq!(r.structure, Some(Structure::F1));
    }

    #[test]
    fn cyclotomic_products() {
        let r = classify(&[1, 1, 1]);
        assert_eq!((r.l(), r.n()), (Some(Membership::Yes), Some(Membership::Yes)));
        let r = classify(&[-1, 0, 1]);
        assert_eq!((r.l(), r.n()), (Some(Membership::Yes), Some(Membership::No)));
        assert_eq!(r.in_n.unwrap().note, Some(Note::NonnegRealRoot));
        let w = r.in_l.unwrap().witness.unwrap();
        assert!(verify_witness(&p(&[-1, 0, 1]), &w, &DigitSet::littlewood()));
    }

    #[test]
    fn product_of_cubic_and_reciprocal() {
        let r = classify(&[1, 0, -1, 1, 1, 1, -1, 0, 1]);
        assert_eq!(r.l(), Some(Membership::Yes));
        assert_eq!(r.structure, Some(Structure::F2));
        let w = r.in_l.clone().unwrap().witness.unwrap();
        assert!(verify_witness(&p(&[1, 0, -1, 1, 1, 1, -1, 0, 1]), &w, &DigitSet::littlewood()));
        assert_eq!(r.n(), Some(Membership::No));
    }

    #[test]
    fn factor_memo_rules_out_products() {
        let cache = LocalCache::new();
        let opts = ClassifyOptions { newman: false, ..Default::default() };
        let q = p(&[1, -1, 0, 1, 1]);
        let prod = &q * &p(&[1, -1, 0, 1]);
        let r = classify_polynomial(&prod, &opts, &cache).unwrap();
        assert_eq!(r.l(), Some(Membership::No));
        assert_eq!(r.in_l.unwrap().note, Some(Note::Factor(q)));
    }
}
