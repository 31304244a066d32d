use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::gcd::pseudo_rem;
use super::IntPoly;

/// Sturm chain with exact integer arithmetic. Pseudo-remainders are scaled
/// only by positive factors so every member keeps the sign pattern of the
/// rational Sturm sequence.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = alloc::vec![p.clone(), p.derivative(1)];
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.is_zero() {
            chain.pop();
            break;
        }
        let mut r = pseudo_rem(a, b);
        let steps = (a.deg() + 1).saturating_sub(b.deg()) as u32;
        if b.leading().unwrap().is_negative() && steps % 2 == 1 {
            r = -r;
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let r = IntPoly::new(r.coeffs().iter().map(|x| -(x / &c)).collect());
        chain.push(r);
    }
    chain
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots in `(0, inf)`.
pub fn count_positive_real_roots(p: &IntPoly) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    // Zero roots would break the count at the left endpoint.
    let p = p.strip_x_power();
    let chain = sturm_chain(&p);
    let at_zero = variations(chain.iter().map(|q| q.constant_term().cmp(&BigInt::zero())));
    let at_inf = variations(chain.iter().map(|q| q.leading_sign()));
    at_zero - at_inf
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &IntPoly) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    let at_neg_inf = variations(chain.iter().map(|q| {
        let s = q.leading_sign();
        if q.deg() % 2 == 1 { s.reverse() } else { s }
    }));
    let at_inf = variations(chain.iter().map(|q| q.leading_sign()));
    at_neg_inf - at_inf
}

/// True iff `p` has a real root in `[0, inf)`.
pub fn has_nonneg_real_root(p: &IntPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    p.constant_term().is_zero() || count_positive_real_roots(p) > 0
}
