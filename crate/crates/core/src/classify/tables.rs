use alloc::vec::Vec;

use super::{ClassRecord, Membership, Structure};
use crate::error::Result;
use crate::poly::has_nonneg_real_root;
use crate::roots::mahler_measure;

/// Counts of the four-way decomposition of one degree's family by
/// Littlewood (`L`) and Newman (`N`) multiples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CountRow {
    pub degree: usize,
    pub total: usize,
    pub l_not_n: usize,
    pub n_not_l: usize,
    pub l_and_n: usize,
    pub neither: usize,
    /// Members with at least one inconclusive (or missing) answer; they
    /// are in none of the four counts.
    pub undecided: usize,
}

impl CountRow {
    /// `total - #(L\N) - #(L∩N)`; exact only when nothing is undecided.
    pub fn not_l(&self) -> usize {
        self.total - self.l_not_n - self.l_and_n
    }

    /// `total - #(N\L) - #(L∩N)`; exact only when nothing is undecided.
    pub fn not_n(&self) -> usize {
        self.total - self.n_not_l - self.l_and_n
    }

    /// `total - #(L\N) - #(N\L) - #(L∩N)`; exact only when nothing is
    /// undecided.
    pub fn not_l_or_n(&self) -> usize {
        self.total - self.l_not_n - self.n_not_l - self.l_and_n
    }

    pub fn is_exact(&self) -> bool {
        self.undecided == 0
    }
}

pub fn count_row(degree: usize, records: &[ClassRecord]) -> CountRow {
    let mut row = CountRow { degree, total: records.len(), ..CountRow::default() };
    for r in records {
        match (r.l(), r.n()) {
            (Some(Membership::Yes), Some(Membership::No)) => row.l_not_n += 1,
            (Some(Membership::No), Some(Membership::Yes)) => row.n_not_l += 1,
            (Some(Membership::Yes), Some(Membership::Yes)) => row.l_and_n += 1,
            (Some(Membership::No), Some(Membership::No)) => row.neither += 1,
            _ => row.undecided += 1,
        }
    }
    row
}

/// Sizes of the structure classes of one degree's family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartitionRow {
    pub degree: usize,
    pub total: usize,
    pub c: usize,
    pub f1: usize,
    pub f2: usize,
    pub m: usize,
    /// Members outside the four classes (none below degree 12).
    pub other: usize,
}

pub fn partition_row(degree: usize, records: &[ClassRecord]) -> PartitionRow {
    let mut row = PartitionRow { degree, total: records.len(), ..PartitionRow::default() };
    for r in records {
        match r.structure {
            Some(Structure::C) => row.c += 1,
            Some(Structure::F1) => row.f1 += 1,
            Some(Structure::F2) => row.f2 += 1,
            Some(Structure::M) => row.m += 1,
            None => row.other += 1,
        }
    }
    row
}

/// Records without nonnegative real roots, without a Newman multiple and
/// with Mahler measure below `cutoff`, by increasing measure. Missing
/// measures are computed.
pub fn mahler_screen(records: impl IntoIterator<Item = ClassRecord>, cutoff: f64) -> Result<Vec<ClassRecord>> {
    let mut out = Vec::new();
    if cutoff <= 1.0 {
        return Ok(out);
    }
    for mut r in records {
        if r.n() != Some(Membership::No) || has_nonneg_real_root(&r.poly) {
            continue;
        }
        let m = match r.mahler {
            Some(m) => m,
            None => mahler_measure(&r.poly, 1e-10)?,
        };
        r.mahler = Some(m);
        if m < cutoff {
            out.push(r);
        }
    }
    out.sort_by(|a, b| a.mahler.partial_cmp(&b.mahler).unwrap_or(core::cmp::Ordering::Equal));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{classify_family, ClassifyOptions, Family, FamilySpec, LocalCache};
    use super::*;

    #[test]
    fn low_degree_rows() {
        let cache = LocalCache::new();
        let opts = ClassifyOptions::default();
        let want = [(1, 2, 0, 2), (2, 6, 0, 6), (3, 24, 0, 12)];
        for (d, ln, nl, both) in want {
            let recs = classify_family(FamilySpec::new(Family::Borwein, d), &opts, &cache).unwrap();
            let row = count_row(d, &recs);
            assert!(row.is_exact());
            assert_eq!((row.l_not_n, row.n_not_l, row.l_and_n), (ln, nl, both), "degree {d}");
            assert_eq!(row.not_l(), 0);
            assert_eq!(row.neither, row.not_l_or_n());
        }
    }

    #[test]
    fn partition_small_degrees() {
        let cache = LocalCache::new();
        let opts = ClassifyOptions { littlewood: false, newman: false, ..Default::default() };
        let want = [(1, 4, 4, 0), (2, 12, 8, 4), (3, 36, 12, 24), (4, 108, 20, 88)];
        for (d, total, c, f1) in want {
            let recs = classify_family(FamilySpec::new(Family::Borwein, d), &opts, &cache).unwrap();
            let row = partition_row(d, &recs);
            assert_eq!((row.total, row.c, row.f1, row.f2, row.m, row.other), (total, c, f1, 0, 0, 0));
        }
    }

    #[test]
    fn screen_cutoff_one_is_empty() {
        assert!(mahler_screen(Vec::new(), 1.0).unwrap().is_empty());
    }
}
