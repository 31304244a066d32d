use digitseal_core::search::{decide, InconclusiveReason, verify_witness, DigitSet, SearchOptions, Verdict};
use digitseal_core::IntPoly;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn run(c: &[i64], d: DigitSet) -> Verdict {
    run_with(c, d, &SearchOptions::default())
}

fn run_with(c: &[i64], d: DigitSet, opts: &SearchOptions) -> Verdict {
    let m = p(c);
    let v = decide(&m, &d, opts).unwrap();
    if let Some(w) = v.witness() {
        assert!(verify_witness(&m, w, &d));
    }
    v
}

#[test]
fn cubic_has_newman_multiple() {
    assert!(run(&[1, -1, 0, 1], DigitSet::newman()).is_found());
}

#[test]
fn quartic_has_no_littlewood_multiple() {
    let v = run(&[1, -1, 0, 1, 1], DigitSet::littlewood());
    assert!(v.is_no_multiple(), "{v:?}");
}

#[test]
fn cubic_has_no_newman_multiple() {
    let v = run(&[1, -1, 1, 1], DigitSet::newman());
    assert!(v.is_no_multiple(), "{v:?}");
}

#[test]
fn sextic_has_no_newman_multiple() {
    let v = run(&[1, -1, -1, 3, -1, -1, 1], DigitSet::newman());
    assert!(v.is_no_multiple(), "{v:?}");
}

#[test]
fn octic_has_littlewood_multiple() {
    // The factor X^2 + X + 1 has unimodular roots, which must be excluded.
    let c = [1, 0, -1, 1, 1, 1, -1, 0, 1];
    let v = run(&c, DigitSet::littlewood());
    assert_eq!(v, Verdict::Inconclusive { reason: InconclusiveReason::UnimodularUnresolved, nodes_explored: 0 });
    let opts = SearchOptions { exclude_unimodular: true, ..SearchOptions::default() };
    let v = run_with(&c, DigitSet::littlewood(), &opts);
    assert!(v.is_found(), "{v:?}");
}
