use crate::poly::IntPoly;

/// The polynomial families swept by degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Coefficients in `{-1, 0, 1}`, nonzero constant term.
    Borwein,
    /// Coefficients in `{0, 1}`, constant term 1.
    Newman,
    /// Coefficients in `{-1, 1}`.
    Littlewood,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Borwein => "borwein",
            Family::Newman => "newman",
            Family::Littlewood => "littlewood",
        }
    }

    /// Membership test for an arbitrary polynomial.
    pub fn contains(self, p: &IntPoly) -> bool {
        let Some(c) = p.to_i64s() else { return false };
        if c.len() < 2 {
            return false;
        }
        let (first, last) = (c[0], c[c.len() - 1]);
        match self {
            Family::Borwein => first != 0 && last != 0 && c.iter().all(|x| (-1..=1).contains(x)),
            Family::Newman => first == 1 && last == 1 && c.iter().all(|x| (0..=1).contains(x)),
            Family::Littlewood => c.iter().all(|x| x.abs() == 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub degree: usize,
}

impl FamilySpec {
    pub fn new(family: Family, degree: usize) -> Self {
        FamilySpec { family, degree }
    }

    /// `#B_d = 4 * 3^(d-1)`, `#N_d = 2^(d-1)`, `#L_d = 2^(d+1)` (both
    /// leading signs counted).
    pub fn count(&self) -> u64 {
        if self.degree == 0 {
            return 0;
        }
        let d = self.degree as u32;
        match self.family {
            Family::Borwein => 4 * 3u64.pow(d - 1),
            Family::Newman => 1 << (d - 1),
            Family::Littlewood => 1 << (d + 1),
        }
    }
}

/// Every member of the family, each exactly once, in a fixed order.
pub fn enumerate_family(spec: FamilySpec) -> FamilyIter {
    FamilyIter { spec, next: 0, total: spec.count() }
}

#[derive(Clone, Debug)]
pub struct FamilyIter {
    spec: FamilySpec,
    next: u64,
    total: u64,
}

impl FamilyIter {
    fn decode(&self, mut i: u64) -> IntPoly {
        let d = self.spec.degree;
        let mut c = alloc::vec![0i64; d + 1];
        match self.spec.family {
            Family::Borwein => {
                c[d] = if i % 2 == 0 { 1 } else { -1 };
                i /= 2;
                c[0] = if i % 2 == 0 { 1 } else { -1 };
                i /= 2;
                for x in c.iter_mut().take(d).skip(1) {
                    *x = (i % 3) as i64 - 1;
                    i /= 3;
                }
            }
            Family::Newman => {
                c[0] = 1;
                c[d] = 1;
                for x in c.iter_mut().take(d).skip(1) {
                    *x = (i % 2) as i64;
                    i /= 2;
                }
            }
            Family::Littlewood => {
                for x in c.iter_mut() {
                    *x = if i % 2 == 0 { 1 } else { -1 };
                    i /= 2;
                }
            }
        }
        IntPoly::from_i64s(&c)
    }
}

impl Iterator for FamilyIter {
    type Item = IntPoly;

    fn next(&mut self) -> Option<IntPoly> {
        if self.next >= self.total {
            return None;
        }
        let p = self.decode(self.next);
        self.next += 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for FamilyIter {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec::Vec;

    /// Brute force: every coefficient vector over the family's digits,
    /// filtered by the membership predicate.
    fn brute(family: Family, d: usize) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        let n = 3u64.pow(d as u32 + 1);
        for mut i in 0..n {
            let mut c = Vec::new();
            for _ in 0..=d {
                c.push((i % 3) as i64 - 1);
                i /= 3;
            }
            let p = IntPoly::from_i64s(&c);
            if p.deg() == d && family.contains(&p) {
                out.insert(c);
            }
        }
        out
    }

    #[test]
    fn counts_match_brute_force() {
        for family in [Family::Borwein, Family::Newman, Family::Littlewood] {
            for d in 1..=6 {
                let spec = FamilySpec::new(family, d);
                let listed: BTreeSet<Vec<i64>> = enumerate_family(spec).map(|p| p.to_i64s().unwrap()).collect();
                assert_eq!(listed.len() as u64, spec.count(), "{family:?} {d}");
                assert_eq!(enumerate_family(spec).len() as u64, spec.count());
                assert_eq!(listed, brute(family, d), "{family:?} {d}");
            }
        }
    }

    #[test]
    fn small_examples() {
        let list = |s: FamilySpec| -> BTreeSet<Vec<i64>> { enumerate_family(s).map(|p| p.to_i64s().unwrap()).collect() };
        let b1 = list(FamilySpec::new(Family::Borwein, 1));
        let want: BTreeSet<Vec<i64>> = [[1, 1], [-1, 1], [1, -1], [-1, -1]].iter().map(|c| c.to_vec()).collect();
        assert_eq!(b1, want);
        let n3 = list(FamilySpec::new(Family::Newman, 3));
        let want: BTreeSet<Vec<i64>> =
            [[1, 0, 0, 1], [1, 1, 0, 1], [1, 0, 1, 1], [1, 1, 1, 1]].iter().map(|c| c.to_vec()).collect();
        assert_eq!(n3, want);
        assert_eq!(FamilySpec::new(Family::Borwein, 6).count(), 972);
        assert_eq!(FamilySpec::new(Family::Borwein, 9).count(), 26244);
    }
}
