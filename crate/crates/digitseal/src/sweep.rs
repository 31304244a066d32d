//! Parallel family sweeps with a shared verdict memo, and the tables and
//! set listings derived from them.

use std::collections::HashMap;
use std::sync::RwLock;

use rayon::prelude::*;

use digitseal_core::classify::{
    classify_polynomial, count_row, enumerate_family, mahler_screen, partition_row, ClassRecord, ClassifyOptions,
    CountRow, Decision, Family, FamilySpec, Membership, PartitionRow, Target, VerdictCache, PARTITION_DEGREE_CAP,
};
use digitseal_core::poly::has_nonneg_real_root;
use digitseal_core::IntPoly;

use crate::CliError;

/// Memo shared between worker threads: many readers, one writer.
#[derive(Debug, Default)]
pub struct SharedCache {
    map: RwLock<HashMap<(IntPoly, Target), Decision>>,
}

impl SharedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl VerdictCache for SharedCache {
    fn lookup(&self, poly: &IntPoly, target: Target) -> Option<Decision> {
        self.map.read().expect("cache lock").get(&(poly.clone(), target)).cloned()
    }

    fn store(&self, poly: &IntPoly, target: Target, decision: &Decision) {
        self.map.write().expect("cache lock").insert((poly.clone(), target), decision.clone());
    }
}

/// Classifies `polys` on `workers` threads; the output keeps input order.
pub fn classify_all(
    polys: Vec<IntPoly>,
    opts: &ClassifyOptions,
    cache: &SharedCache,
    workers: usize,
) -> Result<Vec<ClassRecord>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {workers} workers: {e}")))?;
    pool.install(|| polys.par_iter().map(|p| classify_polynomial(p, opts, cache).map_err(CliError::from)).collect())
}

/// One member of a set listing.
#[derive(Clone, Debug, PartialEq)]
pub struct ListingEntry {
    pub poly: IntPoly,
    /// Set when the reciprocal polynomial appears earlier in the listing.
    pub reciprocal_of: Option<IntPoly>,
    pub mahler: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Listing {
    pub name: &'static str,
    pub description: &'static str,
    pub entries: Vec<ListingEntry>,
}

fn listing(name: &'static str, description: &'static str, polys: Vec<(IntPoly, Option<f64>)>) -> Listing {
    let mut entries: Vec<ListingEntry> = Vec::with_capacity(polys.len());
    for (p, mahler) in polys {
        let rec = p.reciprocal().ok();
        let reciprocal_of = rec.filter(|r| *r != p && entries.iter().any(|e| e.poly == *r));
        entries.push(ListingEntry { poly: p, reciprocal_of, mahler });
    }
    Listing { name, description, entries }
}

fn nonzero_terms(p: &IntPoly) -> usize {
    p.to_i64s().map_or(usize::MAX, |c| c.iter().filter(|x| **x != 0).count())
}

#[derive(Clone, Debug)]
pub struct TableRequest {
    pub family: Family,
    pub min_degree: usize,
    pub max_degree: usize,
    pub workers: usize,
    /// Mahler-measure cutoff for the small-measure listing.
    pub mahler_cutoff: Option<f64>,
    pub options: ClassifyOptions,
}

/// Per-degree summary of a Newman sweep (Littlewood question only).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LittlewoodRow {
    pub degree: usize,
    pub total: usize,
    pub in_l: usize,
    pub not_l: usize,
    pub undecided: usize,
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub family: Family,
    pub counts: Vec<CountRow>,
    pub partition: Vec<PartitionRow>,
    pub littlewood: Vec<LittlewoodRow>,
    pub listings: Vec<Listing>,
    /// Members with an inconclusive answer.
    pub undecided: Vec<IntPoly>,
}

impl TableReport {
    pub fn is_exact(&self) -> bool {
        self.undecided.is_empty()
    }

    pub fn listing(&self, name: &str) -> Option<&Listing> {
        self.listings.iter().find(|l| l.name == name)
    }
}

/// Sweeps every degree of the request and assembles tables and listings.
pub fn build_tables(req: &TableRequest) -> Result<TableReport, CliError> {
    if req.min_degree == 0 || req.min_degree > req.max_degree {
        return Err(CliError::Usage("degree range must satisfy 1 <= min <= max".into()));
    }
    let mut opts = req.options.clone();
    match req.family {
        Family::Borwein => {
            opts.littlewood = true;
            opts.newman = true;
        }
        Family::Newman => {
            opts.littlewood = true;
            opts.newman = false;
        }
        Family::Littlewood => {
            return Err(CliError::Usage("tables are defined for the borwein and newman families".into()))
        }
    }
    let cache = SharedCache::new();
    let mut report = TableReport {
        family: req.family,
        counts: Vec::new(),
        partition: Vec::new(),
        littlewood: Vec::new(),
        listings: Vec::new(),
        undecided: Vec::new(),
    };
    let mut all = Vec::new();
    for d in req.min_degree..=req.max_degree {
        let polys: Vec<IntPoly> = enumerate_family(FamilySpec::new(req.family, d)).collect();
        let recs = classify_all(polys, &opts, &cache, req.workers)?;
        let undecided = |m: Option<Membership>| matches!(m, Some(Membership::Unknown(_)));
        report.undecided.extend(recs.iter().filter(|r| undecided(r.l()) || undecided(r.n())).map(|r| r.poly.clone()));
        match req.family {
            Family::Borwein => {
                report.counts.push(count_row(d, &recs));
                if d <= PARTITION_DEGREE_CAP {
                    report.partition.push(partition_row(d, &recs));
                }
            }
            _ => {
                let in_l = recs.iter().filter(|r| r.l() == Some(Membership::Yes)).count();
                let not_l = recs.iter().filter(|r| r.l() == Some(Membership::No)).count();
                report.littlewood.push(LittlewoodRow {
                    degree: d,
                    total: recs.len(),
                    in_l,
                    not_l,
                    undecided: recs.len() - in_l - not_l,
                });
            }
        }
        all.extend(recs);
    }
    let no_l: Vec<(IntPoly, Option<f64>)> =
        all.iter().filter(|r| r.l() == Some(Membership::No)).map(|r| (r.poly.clone(), None)).collect();
    match req.family {
        Family::Borwein => {
            report.listings.push(listing("not_l", "no Littlewood multiple", no_l.clone()));
            let minus_not_n = all
                .iter()
                .filter(|r| r.n() == Some(Membership::No) && !has_nonneg_real_root(&r.poly))
                .map(|r| (r.poly.clone(), None))
                .collect();
            report.listings.push(listing(
                "minus_not_n",
                "no nonnegative real root and no Newman multiple",
                minus_not_n,
            ));
            let quads = no_l
                .iter()
                .filter(|(p, _)| nonzero_terms(p) == 4 && p.is_monic())
                .cloned()
                .collect();
            report.listings.push(listing("quadrinomials_not_l", "monic quadrinomials without a Littlewood multiple", quads));
            if let Some(cut) = req.mahler_cutoff {
                let screened = mahler_screen(all.iter().cloned(), cut)?;
                let rows = screened.into_iter().map(|r| (r.poly, r.mahler)).collect();
                report.listings.push(listing(
                    "small_mahler_not_n",
                    "no nonnegative real root, no Newman multiple, small Mahler measure",
                    rows,
                ));
            }
        }
        _ => report.listings.push(listing("not_l", "no Littlewood multiple", no_l)),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let opts = ClassifyOptions::default();
        let polys: Vec<IntPoly> = enumerate_family(FamilySpec::new(Family::Borwein, 3)).collect();
        let cache = SharedCache::new();
        let par = classify_all(polys.clone(), &opts, &cache, 3).unwrap();
        assert!(!cache.is_empty());
        let seq: Vec<ClassRecord> =
            polys.iter().map(|p| classify_polynomial(p, &opts, &()).unwrap()).collect();
        assert_eq!(par, seq);
    }

    #[test]
    fn reciprocal_links() {
        let p = IntPoly::from_i64s(&[1, -1, 0, 1, 1]);
        let r = p.reciprocal().unwrap();
        let l = listing("x", "", vec![(p.clone(), None), (-&p, None), (r.clone(), None)]);
        assert_eq!(l.entries[0].reciprocal_of, None);
        assert_eq!(l.entries[1].reciprocal_of, None);
        assert_eq!(l.entries[2].reciprocal_of, Some(p));
    }
}
