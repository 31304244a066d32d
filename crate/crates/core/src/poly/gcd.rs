use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`. `b` must be
/// nonzero.
pub(crate) fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.deg();
    let lc = b.leading().expect("pseudo_rem by zero");
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    if r.len() <= db {
        return a.clone();
    }
    let steps = r.len() - db;
    for _ in 0..steps {
        let top = r.pop().unwrap();
        for c in r.iter_mut() {
            *c *= lc;
        }
        if !top.is_zero() {
            let off = r.len() - db;
            for (j, bc) in b.coeffs()[..db].iter().enumerate() {
                r[off + j] -= &top * bc;
            }
        }
    }
    IntPoly::new(r)
}

/// Gcd over Z[X], normalized to a positive leading coefficient. The content
/// of the result is the gcd of the input contents.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_part().scale(&b.content());
    }
    if b.is_zero() {
        return a.primitive_part().scale(&a.content());
    }
    let cont = num_integer::Integer::gcd(&a.content(), &b.content());
    let (mut x, mut y) = if a.deg() >= b.deg() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = r.primitive_part();
    }
    let g = x.primitive_part();
    if cont.is_one() {
        g
    } else {
        g.scale(&cont.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[1, -1, 0, 1]);
        let g = p(&[1, 1, 1]);
        let h = p(&[-2, 1]);
        assert_eq!(gcd(&(&f * &g), &(&f * &h)), f);
        assert_eq!(gcd(&g, &h), IntPoly::one());
        assert_eq!(gcd(&p(&[2, 2]), &p(&[4, 4])), p(&[2, 2]));
        assert_eq!(gcd(&IntPoly::zero(), &p(&[-1, -1])), p(&[1, 1]));
    }

    #[test]
    fn pseudo_rem_matches_monic_rem() {
        let a = p(&[3, 0, 2, 5, 1]);
        let b = p(&[1, -1, 0, 1]);
        assert_eq!(pseudo_rem(&a, &b), a.rem_monic(&b).unwrap());
    }
}
