//! Remainder states and the traversal engine.
//!
//! States are stored as packed `i64` coefficient rows in an arena and
//! indexed by a hash table keyed on the exact coefficient tuple. All state
//! arithmetic is checked; an overflow ends the pass explicitly.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashTable;

use super::rem::{RemDecision, RemEvaluator};
use super::{SearchObserver, Traversal};

/// Marker in `meta` for a state that failed the membership test.
const REJECTED: u32 = u32::MAX;
/// Sentinel parent for root states.
const NO_PARENT: u32 = u32::MAX;

fn hash_row(row: &[i64]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &c in row {
        h = (h.rotate_left(5) ^ c as u64).wrapping_mul(0x517c_c1b7_2722_0a95);
    }
    h ^= h >> 33;
    h = h.wrapping_mul(0xff51_afd7_ed55_8ccd);
    h ^ (h >> 29)
}

/// Arena of remainder states.
pub(crate) struct StateStore {
    n: usize,
    rows: Vec<i64>,
    /// Depth of the shallowest visit, or [`REJECTED`].
    meta: Vec<u32>,
    parent: Vec<u32>,
    via: Vec<i64>,
    table: HashTable<u32>,
    accepted: u64,
}

impl StateStore {
    pub(crate) fn new(n: usize) -> Self {
        StateStore {
            n,
            rows: Vec::new(),
            meta: Vec::new(),
            parent: Vec::new(),
            via: Vec::new(),
            table: HashTable::new(),
            accepted: 0,
        }
    }

    pub(crate) fn row(&self, id: u32) -> &[i64] {
        let i = id as usize * self.n;
        &self.rows[i..i + self.n]
    }

    pub(crate) fn find(&self, row: &[i64]) -> Option<u32> {
        let h = hash_row(row);
        self.table.find(h, |&id| self.row(id) == row).copied()
    }

    fn insert(&mut self, row: &[i64], meta: u32, parent: u32, via: i64) -> u32 {
        let id = self.meta.len() as u32;
        self.rows.extend_from_slice(row);
        self.meta.push(meta);
        self.parent.push(parent);
        self.via.push(via);
        if meta != REJECTED {
            self.accepted += 1;
        }
        let n = self.n;
        let rows = &self.rows;
        self.table.insert_unique(hash_row(row), id, |&k| {
            let i = k as usize * n;
            hash_row(&rows[i..i + n])
        });
        id
    }

    pub(crate) fn is_accepted(&self, id: u32) -> bool {
        self.meta[id as usize] != REJECTED
    }

    pub(crate) fn accepted(&self) -> u64 {
        self.accepted
    }

}

/// `X*R + d mod P` for monic `P` with low coefficients `p[0..n]`, written
/// into `out`. Returns `false` on overflow.
#[inline]
pub(crate) fn step_i64(r: &[i64], d: i64, p: &[i64], out: &mut [i64]) -> bool {
    let n = r.len();
    let t = r[n - 1];
    if t == 0 {
        out[0] = d;
        out[1..n].copy_from_slice(&r[..n - 1]);
        return true;
    }
    let Some(v) = t.checked_mul(p[0]).and_then(|x| d.checked_sub(x)) else { return false };
    out[0] = v;
    for i in 1..n {
        let Some(v) = t.checked_mul(p[i]).and_then(|x| r[i - 1].checked_sub(x)) else { return false };
        out[i] = v;
    }
    true
}

pub(crate) struct PassConfig<'a> {
    /// Low coefficients `p_0..p_{n-1}` of the monic modulus.
    pub p: &'a [i64],
    pub digits: &'a [i64],
    pub node_cap: u64,
    pub depth_cap: Option<u32>,
    pub traversal: Traversal,
    pub delta: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum PassOutcome {
    /// Digits from the leading digit down to the constant term.
    Found { digits: Vec<i64>, nodes: u64, max_depth: u32 },
    Exhausted { nodes: u64, max_depth: u32, tainted: bool, depth_truncated: bool },
    NodeCap { nodes: u64, max_depth: u32 },
    Overflow { nodes: u64, max_depth: u32 },
}

/// Explores the graph from the constant state `leading`.
pub(crate) fn run_pass(
    cfg: &PassConfig<'_>,
    leading: i64,
    eval: &mut RemEvaluator,
    observer: &mut dyn SearchObserver,
) -> PassOutcome {
    let n = cfg.p.len();
    let mut store = StateStore::new(n);
    let mut root = alloc::vec![0i64; n];
    root[0] = leading;
    let mut tainted = false;
    match eval.classify(&root) {
        RemDecision::Reject => {
            return PassOutcome::Exhausted { nodes: 0, max_depth: 0, tainted: false, depth_truncated: false }
        }
        RemDecision::Ambiguous => tainted = true,
        RemDecision::Accept => {}
    }
    let root_id = store.insert(&root, 0, NO_PARENT, leading);
    let ctx = Ctx { cfg, eval, observer, store, tainted, max_depth: 0, truncated: false, next_report: REPORT_EVERY };
    match cfg.traversal {
        Traversal::Dfs => ctx.dfs(root_id, leading),
        Traversal::Bfs => ctx.bfs(root_id, leading),
    }
}

const REPORT_EVERY: u64 = 1_000_000;

struct Ctx<'a, 'b> {
    cfg: &'a PassConfig<'a>,
    eval: &'b mut RemEvaluator,
    observer: &'b mut dyn SearchObserver,
    store: StateStore,
    tainted: bool,
    max_depth: u32,
    truncated: bool,
    next_report: u64,
}

enum Visit {
    Zero,
    Skip,
    Expand(u32),
    Cap,
}

impl Ctx<'_, '_> {
    /// Classifies the successor `row` reached at `depth` and records it.
    fn visit(&mut self, row: &[i64], depth: u32, parent: u32, digit: i64) -> Visit {
        if row.iter().all(|&c| c == 0) {
            return Visit::Zero;
        }
        if let Some(id) = self.store.find(row) {
            if !self.store.is_accepted(id) {
                return Visit::Skip;
            }
            // Under a depth cap a shallower arrival must be re-expanded.
            if self.cfg.depth_cap.is_some() && depth < self.store.meta[id as usize] {
                self.store.meta[id as usize] = depth;
                self.store.parent[id as usize] = parent;
                self.store.via[id as usize] = digit;
                return Visit::Expand(id);
            }
            return Visit::Skip;
        }
        match self.eval.classify(row) {
            RemDecision::Reject => {
                self.store.insert(row, REJECTED, parent, digit);
                return Visit::Skip;
            }
            RemDecision::Ambiguous => self.tainted = true,
            RemDecision::Accept => {}
        }
        if self.store.accepted() >= self.cfg.node_cap {
            return Visit::Cap;
        }
        let id = self.store.insert(row, depth, parent, digit);
        let nodes = self.store.accepted();
        if nodes >= self.next_report {
            self.next_report += REPORT_EVERY;
            self.observer.progress(nodes, self.cfg.delta);
        }
        Visit::Expand(id)
    }

    fn exhausted(&self) -> PassOutcome {
        PassOutcome::Exhausted {
            nodes: self.store.accepted(),
            max_depth: self.max_depth,
            tainted: self.tainted,
            depth_truncated: self.truncated,
        }
    }

    fn dfs(mut self, root: u32, leading: i64) -> PassOutcome {
        struct Frame {
            id: u32,
            depth: u32,
            next: usize,
        }
        let n = self.cfg.p.len();
        let nd = self.cfg.digits.len();
        let mut stack = alloc::vec![Frame { id: root, depth: 0, next: 0 }];
        let mut path: Vec<i64> = alloc::vec![leading];
        let mut cur = alloc::vec![0i64; n];
        let mut succ = alloc::vec![0i64; n];
        while let Some(top) = stack.last_mut() {
            if top.next >= nd {
                stack.pop();
                path.pop();
                continue;
            }
            let d = self.cfg.digits[top.next];
            top.next += 1;
            let (id, depth) = (top.id, top.depth + 1);
            if self.cfg.depth_cap.is_some_and(|c| depth > c) {
                self.truncated = true;
                top.next = nd;
                continue;
            }
            cur.copy_from_slice(self.store.row(id));
            if !step_i64(&cur, d, self.cfg.p, &mut succ) {
                return PassOutcome::Overflow { nodes: self.store.accepted(), max_depth: self.max_depth };
            }
            match self.visit(&succ, depth, id, d) {
                Visit::Zero => {
                    path.push(d);
                    self.max_depth = self.max_depth.max(depth);
                    return PassOutcome::Found { digits: path, nodes: self.store.accepted(), max_depth: self.max_depth };
                }
                Visit::Skip => {}
                Visit::Expand(child) => {
                    self.max_depth = self.max_depth.max(depth);
                    path.push(d);
                    stack.push(Frame { id: child, depth, next: 0 });
                }
                Visit::Cap => return PassOutcome::NodeCap { nodes: self.store.accepted(), max_depth: self.max_depth },
            }
        }
        self.exhausted()
    }

    fn bfs(mut self, root: u32, _leading: i64) -> PassOutcome {
        let n = self.cfg.p.len();
        let mut queue: VecDeque<(u32, u32)> = VecDeque::new();
        queue.push_back((root, 0));
        let mut cur = alloc::vec![0i64; n];
        let mut succ = alloc::vec![0i64; n];
        while let Some((id, depth)) = queue.pop_front() {
            let child_depth = depth + 1;
            if self.cfg.depth_cap.is_some_and(|c| child_depth > c) {
                self.truncated = true;
                continue;
            }
            cur.copy_from_slice(self.store.row(id));
            for &d in self.cfg.digits {
                if !step_i64(&cur, d, self.cfg.p, &mut succ) {
                    return PassOutcome::Overflow { nodes: self.store.accepted(), max_depth: self.max_depth };
                }
                match self.visit(&succ, child_depth, id, d) {
                    Visit::Zero => {
                        let mut digits = alloc::vec![d];
                        let mut at = id;
                        while at != NO_PARENT {
                            digits.push(self.store.via[at as usize]);
                            at = self.store.parent[at as usize];
                        }
                        digits.reverse();
                        self.max_depth = self.max_depth.max(child_depth);
                        return PassOutcome::Found { digits, nodes: self.store.accepted(), max_depth: self.max_depth };
                    }
                    Visit::Skip => {}
                    Visit::Expand(child) => {
                        self.max_depth = self.max_depth.max(child_depth);
                        queue.push_back((child, child_depth));
                    }
                    Visit::Cap => return PassOutcome::NodeCap { nodes: self.store.accepted(), max_depth: self.max_depth },
                }
            }
        }
        self.exhausted()
    }
}

/// Full reachable graph for export.
pub(crate) struct ExploredGraph {
    pub vertices: Vec<Vec<i64>>,
    pub edges: Vec<(usize, usize, i64)>,
    pub truncated: bool,
    pub max_depth: u32,
    pub tainted: bool,
}

/// Breadth-first enumeration of every accepted state reachable from the
/// given leading digits. Vertex 0 is the zero remainder.
pub(crate) fn explore_all(
    p: &[i64],
    digits: &[i64],
    leads: &[i64],
    node_cap: u64,
    eval: &mut RemEvaluator,
) -> ExploredGraph {
    let n = p.len();
    let mut store = StateStore::new(n);
    let zero = alloc::vec![0i64; n];
    let zero_id = store.insert(&zero, 0, NO_PARENT, 0);
    let mut index: Vec<Option<usize>> = Vec::new();
    let mut vertices: Vec<Vec<i64>> = alloc::vec![zero];
    index.push(Some(0));
    let mut edges = Vec::new();
    let mut queue: VecDeque<(u32, u32)> = VecDeque::new();
    let mut truncated = false;
    let mut tainted = false;
    let mut max_depth = 0;
    fn vertex_of(store: &StateStore, index: &mut Vec<Option<usize>>, vertices: &mut Vec<Vec<i64>>, id: u32) -> usize {
        while index.len() <= id as usize {
            index.push(None);
        }
        *index[id as usize].get_or_insert_with(|| {
            vertices.push(store.row(id).to_vec());
            vertices.len() - 1
        })
    }
    for &a in leads {
        let mut row = alloc::vec![0i64; n];
        row[0] = a;
        if store.find(&row).is_some() {
            continue;
        }
        match eval.classify(&row) {
            RemDecision::Reject => {
                store.insert(&row, REJECTED, NO_PARENT, a);
                continue;
            }
            RemDecision::Ambiguous => tainted = true,
            RemDecision::Accept => {}
        }
        let id = store.insert(&row, 0, NO_PARENT, a);
        vertex_of(&store, &mut index, &mut vertices, id);
        queue.push_back((id, 0));
    }
    let mut succ = alloc::vec![0i64; n];
    'outer: while let Some((id, depth)) = queue.pop_front() {
        let cur = store.row(id).to_vec();
        let from = vertex_of(&store, &mut index, &mut vertices, id);
        for &d in digits {
            if !step_i64(&cur, d, p, &mut succ) {
                truncated = true;
                break 'outer;
            }
            let target = match store.find(&succ) {
                Some(t) if t == zero_id => Some(t),
                Some(t) => store.is_accepted(t).then_some(t),
                None => {
                    let dec = eval.classify(&succ);
                    if dec == RemDecision::Reject {
                        store.insert(&succ, REJECTED, id, d);
                        None
                    } else {
                        if dec == RemDecision::Ambiguous {
                            tainted = true;
                        }
                        if store.accepted() >= node_cap + 1 {
                            truncated = true;
                            break 'outer;
                        }
                        let t = store.insert(&succ, depth + 1, id, d);
                        max_depth = max_depth.max(depth + 1);
                        queue.push_back((t, depth + 1));
                        Some(t)
                    }
                }
            };
            if let Some(t) = target {
                let to = vertex_of(&store, &mut index, &mut vertices, t);
                edges.push((from, to, d));
            }
        }
    }
    ExploredGraph { vertices, edges, truncated, max_depth, tainted }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_reduces_modulo_monic() {
        // P = X^3 - X + 1 -> low coefficients (1, -1, 0)
        let p = [1, -1, 0];
        let mut out = [0; 3];
        assert!(step_i64(&[1, 0, 0], 1, &p, &mut out));
        assert_eq!(out, [1, 1, 0]);
        assert!(step_i64(&[0, 0, 1], 0, &p, &mut out));
        assert_eq!(out, [-1, 1, 0]);
        assert!(step_i64(&[-1, 0, 1], 1, &p, &mut out));
        assert_eq!(out, [0, 0, 0]);
        assert!(!step_i64(&[0, 0, i64::MAX], 0, &[2, 0, 0], &mut out));
    }

    #[test]
    fn store_round_trips_rows() {
        let mut s = StateStore::new(3);
        let a = s.insert(&[1, 2, 3], 0, NO_PARENT, 1);
        let b = s.insert(&[3, 2, 1], REJECTED, a, 0);
        assert_eq!(s.find(&[1, 2, 3]), Some(a));
        assert_eq!(s.find(&[3, 2, 1]), Some(b));
        assert_eq!(s.find(&[0, 0, 0]), None);
        assert!(s.is_accepted(a) && !s.is_accepted(b));
        assert_eq!(s.accepted(), 1);
        for i in 0..5000i64 {
            s.insert(&[i, -i, i * 7], 1, a, 0);
        }
        for i in 0..5000i64 {
            assert_eq!(s.row(s.find(&[i, -i, i * 7]).unwrap()), &[i, -i, i * 7]);
        }
    }
}
