use alloc::vec::Vec;

use num_traits::Signed;

use super::{gcd, IntPoly};
use crate::error::{Error, Result};

/// `unit * content * prod factor^multiplicity`, with primitive squarefree
/// factors of positive leading coefficient and increasing multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub parts: Vec<(IntPoly, u32)>,
    /// `content * sign` of the input; `±1` for primitive inputs.
    pub unit: num_bigint::BigInt,
}

impl SquarefreeDecomposition {
    pub fn recompose(&self) -> IntPoly {
        self.parts
            .iter()
            .map(|(f, m)| f.pow(*m))
            .product::<IntPoly>()
            .scale(&self.unit)
    }

    /// Product of the distinct factors.
    pub fn squarefree_part(&self) -> IntPoly {
        self.parts.iter().map(|(f, _)| f.clone()).product()
    }
}

/// Yun's algorithm over primitive integer polynomials. Constant factors are
/// absorbed into `unit` and never listed in `parts`.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut unit = p.content();
    if p.leading().unwrap().is_negative() {
        unit = -unit;
    }
    let f = p.primitive_part();
    let mut parts = Vec::new();
    if f.deg() > 0 {
        let df = f.derivative(1);
        let a0 = gcd(&f, &df);
        let mut b = f.div_exact(&a0)?;
        let c = df.div_exact(&a0)?;
        let mut d = &c - &b.derivative(1);
        let mut mult = 1u32;
        while b.deg() > 0 {
            let a = gcd(&b, &d);
            if a.deg() > 0 {
                parts.push((a.primitive_part(), mult));
            }
            let nb = b.div_exact(&a)?;
            let nc = d.div_exact(&a)?;
            d = &nc - &nb.derivative(1);
            b = nb;
            mult += 1;
        }
    }
    let out = SquarefreeDecomposition { parts, unit };
    debug_assert_eq!(out.recompose(), *p);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn square_of_cubic() {
        let q = p(&[1, -1, 0, 1]);
        let sq = &q * &q;
        assert_eq!(sq, p(&[1, -2, 1, 2, -2, 0, 1]));
        let dec = squarefree_decomposition(&sq).unwrap();
        assert_eq!(dec.parts, alloc::vec![(q, 2)]);
    }

    #[test]
    fn already_squarefree() {
        let q = p(&[1, -1, 0, 1]);
        assert_eq!(squarefree_decomposition(&q).unwrap().parts, alloc::vec![(q, 1)]);
    }

    #[test]
    fn mixed_multiplicities() {
        let f = p(&[-1, 1]).pow(2) * p(&[1, 1]);
        let dec = squarefree_decomposition(&f).unwrap();
        assert_eq!(dec.parts, alloc::vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 2)]);
        assert_eq!(dec.recompose(), f);
    }

    #[test]
    fn content_and_sign_go_to_unit() {
        let f = p(&[-2, 0, -2]).scale(&3.into());
        let dec = squarefree_decomposition(&f).unwrap();
        assert_eq!(dec.unit, (-6).into());
        assert_eq!(dec.parts, alloc::vec![(p(&[1, 0, 1]), 1)]);
        assert_eq!(squarefree_decomposition(&p(&[-5])).unwrap().parts, alloc::vec![]);
    }

    proptest! {
        #[test]
        fn recomposes(a in prop::collection::vec(-3i64..4, 1..4),
                      b in prop::collection::vec(-3i64..4, 1..4),
                      e in 1u32..4) {
            let a = p(&a);
            let b = p(&b);
            prop_assume!(!a.is_zero() && !b.is_zero());
            let f = &a.pow(e) * &b;
            let dec = squarefree_decomposition(&f).unwrap();
            prop_assert_eq!(dec.recompose(), f);
            for (g, _) in &dec.parts {
                prop_assert_eq!(gcd(g, &g.derivative(1)).deg(), 0);
            }
        }
    }
}
