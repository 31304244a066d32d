//! The remainder graph `G(P, D)` and its exploration.
//!
//! Vertices are integer polynomials `R` with `deg R < deg P`; each digit `d`
//! gives an edge `R -> X*R + d mod P`. A path from a nonzero constant `a`
//! to `0` spells the digits of a multiple of `P` with leading coefficient
//! `a`. Vertices are restricted to the finite set of remainders obeying the
//! root-derivative bounds, so the graph is finite and a completed
//! exploration that never meets `0` proves that no multiple exists.

mod digits;
mod graph;
mod rem;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{cyclotomic, IntPoly};
use crate::roots::{isolate_roots_capped, RootProfile, DEFAULT_PRECISION, DEFAULT_PRECISION_CAP};

pub use digits::{DigitSet, MAX_DIGITS};
pub use rem::{compute_thresholds, in_rem, RemDecision, ThresholdEntry, Thresholds};

use graph::{explore_all, run_pass, PassConfig, PassOutcome};
use rem::RemEvaluator;

/// Default bound on stored vertices per pass.
pub const DEFAULT_NODE_CAP: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Traversal {
    #[default]
    Dfs,
    /// Finds witnesses of minimal degree within each pass.
    Bfs,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOptions {
    /// Strictly descending, in `[0, 1)`; a negative answer needs a final 0.
    pub delta_schedule: Vec<f64>,
    pub node_cap: u64,
    /// Longest digit path (witness degree) explored.
    pub depth_cap: Option<u32>,
    /// Drop the bounds of roots that may lie on the unit circle.
    pub exclude_unimodular: bool,
    pub traversal: Traversal,
    /// Ceiling for the root-isolation precision ladder, in bits.
    pub precision_cap: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            delta_schedule: delta_schedule(0.95, 0.05),
            node_cap: DEFAULT_NODE_CAP,
            depth_cap: None,
            exclude_unimodular: false,
            traversal: Traversal::Dfs,
            precision_cap: DEFAULT_PRECISION_CAP,
        }
    }
}

/// `start, start - step, ...` down to the last positive value, then `0`.
pub fn delta_schedule(start: f64, step: f64) -> Vec<f64> {
    let mut out = Vec::new();
    if step > 0.0 && start > 0.0 {
        let mut i = 0u32;
        loop {
            // Rounded to 12 decimals so that 0.95 - 6 * 0.05 reads as 0.65.
            let v = libm::round((start - i as f64 * step) * 1e12) / 1e12;
            if v <= step * 1e-9 {
                break;
            }
            out.push(v);
            i += 1;
        }
    }
    out.push(0.0);
    out
}

impl SearchOptions {
    /// Options for a single exhaustive pass at `delta = 0`.
    pub fn exhaustive() -> Self {
        SearchOptions { delta_schedule: alloc::vec![0.0], ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.delta_schedule.is_empty() {
            return Err(Error::Precondition("delta schedule is empty"));
        }
        if self.delta_schedule.iter().any(|d| !(0.0..1.0).contains(d)) {
            return Err(Error::Precondition("delta values must lie in [0, 1)"));
        }
        if self.delta_schedule.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Precondition("delta schedule must be strictly descending"));
        }
        if self.node_cap == 0 {
            return Err(Error::Precondition("node cap must be positive"));
        }
        if self.depth_cap == Some(0) {
            return Err(Error::Precondition("depth cap must be positive"));
        }
        Ok(())
    }
}

/// Why a run could not decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InconclusiveReason {
    /// The schedule did not end with `delta = 0`.
    IncompleteSchedule,
    /// Some membership test stayed ambiguous at the precision cap.
    PrecisionCap,
    /// Exploration was cut at the depth cap.
    DepthCap,
    NodeCap,
    /// A remainder coefficient left the 64-bit range.
    Overflow,
    /// A root could not be placed off the unit circle and exclusion was off.
    UnimodularUnresolved,
}

impl InconclusiveReason {
    pub fn as_str(self) -> &'static str {
        match self {
            InconclusiveReason::IncompleteSchedule => "incomplete_schedule",
            InconclusiveReason::PrecisionCap => "precision_cap",
            InconclusiveReason::DepthCap => "depth_cap",
            InconclusiveReason::NodeCap => "node_cap",
            InconclusiveReason::Overflow => "overflow",
            InconclusiveReason::UnimodularUnresolved => "unimodular_unresolved",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Found {
        witness: IntPoly,
        leading_digit: i64,
        degree: usize,
        /// Vertices stored by the pass that found the witness.
        nodes_explored: u64,
        /// Pruning level of that pass.
        delta: f64,
    },
    NoMultiple {
        /// Vertices of the exhausted `delta = 0` graph (over all leading digits).
        nodes_explored: u64,
        max_depth: u32,
    },
    Inconclusive {
        reason: InconclusiveReason,
        nodes_explored: u64,
    },
}

impl Verdict {
    pub fn is_found(&self) -> bool {
        matches!(self, Verdict::Found { .. })
    }

    pub fn is_no_multiple(&self) -> bool {
        matches!(self, Verdict::NoMultiple { .. })
    }

    pub fn witness(&self) -> Option<&IntPoly> {
        match self {
            Verdict::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn nodes_explored(&self) -> u64 {
        match *self {
            Verdict::Found { nodes_explored, .. }
            | Verdict::NoMultiple { nodes_explored, .. }
            | Verdict::Inconclusive { nodes_explored, .. } => nodes_explored,
        }
    }

    /// Process exit status: 0 found, 1 no multiple, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Found { .. } => 0,
            Verdict::NoMultiple { .. } => 1,
            Verdict::Inconclusive { .. } => 2,
        }
    }
}

/// Receives progress notifications from long runs.
pub trait SearchObserver {
    /// Called every million stored vertices.
    fn progress(&mut self, _nodes: u64, _delta: f64) {}
}

impl SearchObserver for () {}

/// `X*R + d mod P` in exact arithmetic.
pub fn step(r: &IntPoly, d: i64, p: &IntPoly) -> Result<IntPoly> {
    (r.shift(1) + IntPoly::constant(BigInt::from(d))).rem_monic(p)
}

/// True iff `q` is a nonzero polynomial whose coefficients (all of them,
/// including zeros below the leading term) lie in `digits`, whose leading
/// coefficient is a nonzero digit, and which `p` divides exactly.
pub fn verify_witness(p: &IntPoly, q: &IntPoly, digits: &DigitSet) -> bool {
    if q.is_zero() || p.is_zero() {
        return false;
    }
    let in_set = |c: &BigInt| c.to_i64().is_some_and(|v| digits.contains(v));
    if !q.coeffs().iter().all(in_set) {
        return false;
    }
    if p.is_monic() && p.deg() >= 1 {
        matches!(q.rem_monic(p), Ok(r) if r.is_zero())
    } else {
        q.div_exact(p).is_ok()
    }
}

/// Explores from one leading digit over the whole schedule.
pub fn search(p: &IntPoly, digits: &DigitSet, leading: i64, opts: &SearchOptions) -> Result<Verdict> {
    if leading == 0 || !digits.contains(leading) {
        return Err(Error::Precondition("leading digit must be a nonzero member of the digit set"));
    }
    run_schedule(p, digits, &[leading], opts, &mut ())
}

/// Decides whether `p` divides a nonzero polynomial with digits in `D`.
pub fn decide(p: &IntPoly, digits: &DigitSet, opts: &SearchOptions) -> Result<Verdict> {
    decide_with(p, digits, opts, &mut ())
}

/// [`decide`] with progress reporting.
pub fn decide_with(
    p: &IntPoly,
    digits: &DigitSet,
    opts: &SearchOptions,
    observer: &mut dyn SearchObserver,
) -> Result<Verdict> {
    let leads = digits.leading_representatives();
    let mut v = run_schedule(p, digits, &leads, opts, observer)?;
    if let Verdict::Found { witness, degree, .. } = &mut v {
        if digits.contains_zero() {
            *witness = witness.strip_x_power();
            *degree = witness.deg();
        }
        assert!(verify_witness(p, witness, digits), "search produced an invalid witness");
    }
    Ok(v)
}

fn check_modulus(p: &IntPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Err(Error::ConstantDivisor);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

enum Prepared {
    Ready { low: Vec<i64>, profile: RootProfile },
    Verdict(Verdict),
}

fn prepare(p: &IntPoly, opts: &SearchOptions) -> Result<Prepared> {
    check_modulus(p)?;
    opts.validate()?;
    let Some(low) = p.coeffs()[..p.deg()].iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>() else {
        return Ok(Prepared::Verdict(Verdict::Inconclusive { reason: InconclusiveReason::Overflow, nodes_explored: 0 }));
    };
    let profile = match isolate_roots_capped(p, DEFAULT_PRECISION, opts.precision_cap) {
        Ok(pr) => pr,
        Err(Error::IsolationFailed { .. }) => {
            return Ok(Prepared::Verdict(Verdict::Inconclusive {
                reason: InconclusiveReason::PrecisionCap,
                nodes_explored: 0,
            }))
        }
        Err(e) => return Err(e),
    };
    if !opts.exclude_unimodular && profile.has_undecided() {
        return Ok(Prepared::Verdict(Verdict::Inconclusive {
            reason: InconclusiveReason::UnimodularUnresolved,
            nodes_explored: 0,
        }));
    }
    Ok(Prepared::Ready { low, profile })
}

fn witness_from_digits(digits: &[i64]) -> IntPoly {
    IntPoly::from_i64s(&digits.iter().rev().copied().collect::<Vec<_>>())
}

/// The pruning schedule is the outer loop and the leading digits the inner
/// one, so cheap high-delta passes run for every digit before any costly
/// low-delta pass. Each pass starts from an empty visited set.
fn run_schedule(
    p: &IntPoly,
    digits: &DigitSet,
    leads: &[i64],
    opts: &SearchOptions,
    observer: &mut dyn SearchObserver,
) -> Result<Verdict> {
    let (low, mut profile) = match prepare(p, opts)? {
        Prepared::Ready { low, profile } => (low, profile),
        Prepared::Verdict(v) => return Ok(v),
    };
    let last = opts.delta_schedule.len() - 1;
    for (i, &delta) in opts.delta_schedule.iter().enumerate() {
        let mut eval = RemEvaluator::new(profile, digits, delta, opts.exclude_unimodular)?;
        let cfg = PassConfig {
            p: &low,
            digits: digits.digits(),
            node_cap: opts.node_cap,
            depth_cap: opts.depth_cap,
            traversal: opts.traversal,
            delta,
        };
        let mut nodes = 0u64;
        let mut max_depth = 0u32;
        let mut reason: Option<InconclusiveReason> = None;
        let note = |r: InconclusiveReason, reason: &mut Option<InconclusiveReason>| {
            *reason = Some(reason.map_or(r, |old| old.max(r)));
        };
        for &a in leads {
            match run_pass(&cfg, a, &mut eval, observer) {
                PassOutcome::Found { digits: path, nodes: k, .. } => {
                    let witness = witness_from_digits(&path);
                    assert!(verify_witness(p, &witness, digits), "search produced an invalid witness");
                    return Ok(Verdict::Found {
                        degree: witness.deg(),
                        witness,
                        leading_digit: a,
                        nodes_explored: nodes + k,
                        delta,
                    });
                }
                PassOutcome::Exhausted { nodes: k, max_depth: m, tainted, depth_truncated } => {
                    nodes += k;
                    max_depth = max_depth.max(m);
                    if tainted {
                        note(InconclusiveReason::PrecisionCap, &mut reason);
                    }
                    if depth_truncated {
                        note(InconclusiveReason::DepthCap, &mut reason);
                    }
                }
                PassOutcome::NodeCap { nodes: k, max_depth: m } => {
                    nodes += k;
                    max_depth = max_depth.max(m);
                    note(InconclusiveReason::NodeCap, &mut reason);
                }
                PassOutcome::Overflow { nodes: k, max_depth: m } => {
                    nodes += k;
                    max_depth = max_depth.max(m);
                    note(InconclusiveReason::Overflow, &mut reason);
                }
            }
        }
        profile = eval.into_profile();
        if i == last {
            if delta != 0.0 {
                note(InconclusiveReason::IncompleteSchedule, &mut reason);
            }
            return Ok(match reason {
                None => Verdict::NoMultiple { nodes_explored: nodes, max_depth },
                Some(reason) => Verdict::Inconclusive { reason, nodes_explored: nodes },
            });
        }
    }
    unreachable!("schedule is nonempty")
}

/// A multiple of `Q * Phi_n` with digits in `D`, built from a multiple `Q`
/// of some `P` with digits in `D`.
///
/// * `0 in D`, `n >= 2`: `Q * (X^((n-1)t) + ... + X^t + 1)` with
///   `t = deg(Q) n + 1`, so the shifted copies never overlap.
/// * `D = -D`: `Q * (X^(d+1) - 1)` when `n | d+1` (always for `n = 1`),
///   otherwise `Q * (X^((n-1)(d+1)) + ... + X^(d+1) + 1)`.
pub fn extend_with_cyclotomic(q: &IntPoly, n: u64, digits: &DigitSet) -> Result<IntPoly> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !q.coeffs().iter().all(|c| c.to_i64().is_some_and(|v| digits.contains(v))) {
        return Err(Error::Precondition("multiple must have all coefficients in the digit set"));
    }
    if n == 0 {
        return Err(Error::Precondition("cyclotomic index must be positive"));
    }
    let d = q.deg() as u64;
    // Sums of shifted copies; the shifts never overlap, so no digit leaves D.
    let shifted_sum = |terms: &[(u64, bool)]| -> IntPoly {
        let top = terms.iter().map(|&(s, _)| s).max().unwrap_or(0) + d;
        let mut c = alloc::vec![BigInt::zero(); top as usize + 1];
        for &(s, negate) in terms {
            for (i, x) in q.coeffs().iter().enumerate() {
                c[s as usize + i] = if negate { -x } else { x.clone() };
            }
        }
        IntPoly::new(c)
    };
    let geometric = |t: u64| shifted_sum(&(0..n).map(|i| (i * t, false)).collect::<Vec<_>>());
    let out = if digits.contains_zero() && n >= 2 {
        geometric(d * n + 1)
    } else if digits.is_symmetric() {
        if (d + 1) % n == 0 {
            shifted_sum(&[(0, true), (d + 1, false)])
        } else {
            geometric(d + 1)
        }
    } else {
        return Err(Error::Precondition("needs 0 in D (with n >= 2) or D = -D"));
    };
    let phi = cyclotomic(n);
    if !verify_witness(&phi, &out, digits) || !verify_witness(q, &out, digits) {
        return Err(Error::Precondition("construction left the digit set"));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub digit: i64,
}

/// The `delta = 0` graph reachable from every nonzero leading digit.
/// Vertex 0 is always the zero remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub modulus: IntPoly,
    pub vertices: Vec<IntPoly>,
    pub edges: Vec<GraphEdge>,
    /// The node cap or the 64-bit range cut the exploration short.
    pub truncated: bool,
    /// Some membership test stayed ambiguous at the precision cap.
    pub precision_tainted: bool,
    pub max_depth: u32,
}

impl GraphDocument {
    /// Whether some edge enters the zero vertex.
    pub fn reaches_zero(&self) -> bool {
        self.edges.iter().any(|e| e.to == 0)
    }
}

pub fn export_graph(p: &IntPoly, digits: &DigitSet, opts: &SearchOptions) -> Result<GraphDocument> {
    let (low, profile) = match prepare(p, opts)? {
        Prepared::Ready { low, profile } => (low, profile),
        Prepared::Verdict(Verdict::Inconclusive { reason: InconclusiveReason::UnimodularUnresolved, .. }) => {
            return Err(Error::UnimodularUnresolved)
        }
        Prepared::Verdict(Verdict::Inconclusive { reason: InconclusiveReason::PrecisionCap, .. }) => {
            return Err(Error::IsolationFailed { bits: opts.precision_cap })
        }
        Prepared::Verdict(_) => return Err(Error::Precondition("modulus coefficients exceed 64 bits")),
    };
    let mut eval = RemEvaluator::new(profile, digits, 0.0, opts.exclude_unimodular)?;
    let leads: Vec<i64> = digits.digits().iter().copied().filter(|&d| d != 0).collect();
    let g = explore_all(&low, digits.digits(), &leads, opts.node_cap, &mut eval);
    Ok(GraphDocument {
        modulus: p.clone(),
        vertices: g.vertices.iter().map(|r| IntPoly::from_i64s(r)).collect(),
        edges: g.edges.into_iter().map(|(from, to, digit)| GraphEdge { from, to, digit }).collect(),
        truncated: g.truncated,
        precision_tainted: g.tainted,
        max_depth: g.max_depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn step_examples() {
        let m = p(&[1, -1, 0, 1]);
        assert_eq!(step(&p(&[1]), 1, &m).unwrap(), p(&[1, 1]));
        assert_eq!(step(&p(&[0, 0, 1]), 0, &m).unwrap(), p(&[-1, 1]));
        assert_eq!(step(&p(&[-1, 0, 1]), 1, &m).unwrap(), IntPoly::zero());
    }

    #[test]
    fn schedule_shape() {
        let s = delta_schedule(0.95, 0.05);
        assert_eq!(s.len(), 20);
        assert_eq!(s[0], 0.95);
        assert_eq!(*s.last().unwrap(), 0.0);
        assert!(s.windows(2).all(|w| w[0] > w[1]));
        assert!(SearchOptions::default().validate().is_ok());
        let bad = SearchOptions { delta_schedule: alloc::vec![0.5, 0.5, 0.0], ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn newman_multiple_of_cubic() {
        let m = p(&[1, -1, 0, 1]);
        let v = decide(&m, &DigitSet::newman(), &SearchOptions::default()).unwrap();
        let w = v.witness().unwrap();
        assert!(verify_witness(&m, w, &DigitSet::newman()));
        assert!(verify_witness(&m, &p(&[1, 0, 0, 0, 1, 1]), &DigitSet::newman()));
        assert!(!verify_witness(&m, &p(&[0, 1, 0, 0, 1, 1]), &DigitSet::newman()));
    }

    #[test]
    fn linear_modulus_outside() {
        let v = search(&p(&[-2, 1]), &DigitSet::newman(), 1, &SearchOptions::default()).unwrap();
        match v {
            Verdict::NoMultiple { nodes_explored, .. } => assert!(nodes_explored <= 2),
            other => panic!("{other:?}"),
        }
        let v = decide(&p(&[-1, 1]), &DigitSet::littlewood(), &SearchOptions::default()).unwrap();
        assert_eq!(
            v,
            Verdict::Inconclusive { reason: InconclusiveReason::UnimodularUnresolved, nodes_explored: 0 }
        );
    }

    #[test]
    fn bfs_finds_minimal_witness() {
        let m = p(&[1, -1, 0, 1]);
        let opts = SearchOptions { traversal: Traversal::Bfs, ..SearchOptions::exhaustive() };
        let v = decide(&m, &DigitSet::newman(), &opts).unwrap();
        assert_eq!(v.witness().unwrap(), &p(&[1, 0, 0, 0, 1, 1]));
    }

    #[test]
    fn cyclotomic_extension() {
        let n = DigitSet::newman();
        let q = p(&[1, 0, 0, 0, 1, 1]);
        let e = extend_with_cyclotomic(&q, 2, &n).unwrap();
        assert_eq!(e, &q * &p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
        let e = extend_with_cyclotomic(&p(&[1, 1]), 3, &n).unwrap();
        assert_eq!(e, p(&[1, 1]) * p(&[1, 0, 0, 0, 1, 0, 0, 0, 1]));
        let l = DigitSet::littlewood();
        let e = extend_with_cyclotomic(&p(&[-1, 1]), 1, &l).unwrap();
        assert_eq!(e, p(&[-1, 1]) * p(&[-1, 0, 1]));
        assert!(extend_with_cyclotomic(&p(&[1, 1]), 1, &n).is_err());
        for k in 2..8 {
            let q = p(&[1, -1, 1, 1]);
            let e = extend_with_cyclotomic(&q, k, &l).unwrap();
            assert!(verify_witness(&(&q * &cyclotomic(k)), &e, &l));
        }
    }

    #[test]
    fn export_small_graphs() {
        let g = export_graph(&p(&[-2, 1]), &DigitSet::newman(), &SearchOptions::default()).unwrap();
        assert_eq!(g.vertices, alloc::vec![IntPoly::zero(), p(&[1])]);
        assert!(g.edges.is_empty() && !g.truncated);
        assert_eq!(
            export_graph(&p(&[-1, 1]), &DigitSet::newman(), &SearchOptions::default()),
            Err(Error::UnimodularUnresolved)
        );
        let g = export_graph(&p(&[1, -1, 0, 1]), &DigitSet::newman(), &SearchOptions::default()).unwrap();
        assert!(g.reaches_zero());
        let path = [p(&[1]), p(&[1, 1]), p(&[0, 1, 1]), p(&[-1, 1, 1]), p(&[-1, 0, 1])];
        for w in path.windows(2) {
            let a = g.vertices.iter().position(|v| v == &w[0]).unwrap();
            let b = g.vertices.iter().position(|v| v == &w[1]).unwrap();
            assert!(g.edges.iter().any(|e| e.from == a && e.to == b));
        }
    }

    mod properties {
        use super::*;
        use crate::roots::isolate_roots;
        use proptest::prelude::*;

        fn arb_monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            (prop::collection::vec(-2i64..3, 1..=max_deg), prop::sample::select(alloc::vec![-1i64, 1])).prop_map(
                |(mut c, c0)| {
                    c[0] = c0;
                    c.push(1);
                    IntPoly::from_i64s(&c)
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

            /// Walking a digit string through the graph lands on the
            /// remainder of the digit polynomial.
            #[test]
            fn steps_reduce_like_the_digit_polynomial(
                m in arb_monic(6),
                digits in prop::collection::vec(-1i64..2, 1..24),
            ) {
                let mut r = IntPoly::constant(digits[0].into());
                for &d in &digits[1..] {
                    r = step(&r, d, &m).unwrap();
                }
                let mut lowest_first = digits.clone();
                lowest_first.reverse();
                let q = IntPoly::from_i64s(&lowest_first);
                prop_assert_eq!(r, q.rem_monic(&m).unwrap());
            }

            /// Every state on a digit path that reaches zero satisfies the
            /// remainder bounds at delta = 0.
            #[test]
            fn states_on_a_path_to_zero_are_in_rem(
                mid in prop::collection::vec(prop::sample::select(alloc::vec![-1i64, 1]), 2..12),
            ) {
                // The digits of a monic Littlewood polynomial q spell a path
                // from its leading digit to zero in G(q, {-1, 1}).
                let mut c = mid.clone();
                c.push(1);
                let m = IntPoly::from_i64s(&c);
                let prof = isolate_roots(&m, 64).unwrap();
                let t = compute_thresholds(&prof, &DigitSet::littlewood(), 0.0, true).unwrap();
                let digits: Vec<i64> = c.into_iter().rev().collect();
                let mut r = IntPoly::constant(digits[0].into());
                for &d in &digits[1..] {
                    prop_assert_ne!(in_rem(&r, &t, &prof), RemDecision::Reject, "state {} of {}", r, m);
                    r = step(&r, d, &m).unwrap();
                }
                prop_assert!(r.is_zero());
            }
        }
    }
}
