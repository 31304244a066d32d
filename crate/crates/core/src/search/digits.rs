use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest digit set accepted.
pub const MAX_DIGITS: usize = 16;

/// A finite set of integer digits, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitSet {
    digits: Vec<i64>,
    bound: i64,
}

impl DigitSet {
    /// Rejects empty sets, `{0}`, sets larger than [`MAX_DIGITS`] and digits
    /// whose magnitude does not fit comfortably in machine arithmetic.
    pub fn new(digits: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut digits: Vec<i64> = digits.into_iter().collect();
        digits.sort_unstable();
        digits.dedup();
        if digits.is_empty() {
            return Err(Error::InvalidDigitSet("digit set is empty"));
        }
        if digits.iter().all(|&d| d == 0) {
            return Err(Error::InvalidDigitSet("digit set needs a nonzero digit"));
        }
        if digits.len() > MAX_DIGITS {
            return Err(Error::InvalidDigitSet("at most 16 digits are supported"));
        }
        if digits.iter().any(|d| d.unsigned_abs() > 1 << 40) {
            return Err(Error::InvalidDigitSet("digits must satisfy |d| <= 2^40"));
        }
        let bound = digits.iter().map(|d| d.abs()).max().unwrap();
        Ok(DigitSet { digits, bound })
    }

    /// `{-1, 1}`
    pub fn littlewood() -> Self {
        DigitSet { digits: alloc::vec![-1, 1], bound: 1 }
    }

    /// `{0, 1}`
    pub fn newman() -> Self {
        DigitSet { digits: alloc::vec![0, 1], bound: 1 }
    }

    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    /// `B = max |d|`
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn contains(&self, d: i64) -> bool {
        self.digits.binary_search(&d).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0)
    }

    /// `D = -D`
    pub fn is_symmetric(&self) -> bool {
        self.digits.iter().all(|&d| self.contains(-d))
    }

    /// Leading digits to search: every nonzero digit, keeping only the
    /// positive member of each `±` pair when `D = -D`.
    pub fn leading_representatives(&self) -> Vec<i64> {
        let sym = self.is_symmetric();
        self.digits.iter().copied().filter(|&d| d != 0 && (!sym || d > 0)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sets() {
        let l = DigitSet::littlewood();
        assert!(l.is_symmetric() && !l.contains_zero() && l.bound() == 1);
        assert_eq!(l.leading_representatives(), alloc::vec![1]);
        let n = DigitSet::newman();
        assert!(!n.is_symmetric() && n.contains_zero());
        assert_eq!(n.leading_representatives(), alloc::vec![1]);
        assert_eq!(DigitSet::new([1, 0, 1]).unwrap(), n);
        assert_eq!(DigitSet::new([1, -1]).unwrap(), l);
    }

    #[test]
    fn rejects_degenerate_sets() {
        assert!(DigitSet::new([]).is_err());
        assert!(DigitSet::new([0]).is_err());
        assert!(DigitSet::new(0..17).is_err());
        let d = DigitSet::new([-2, 0, 1]).unwrap();
        assert_eq!(d.bound(), 2);
        assert_eq!(d.leading_representatives(), alloc::vec![-2, 1]);
    }
}
