//! Exhaustive enumeration of families in small groups.
//!
//! The search builds families set by set and element by element, keeping the
//! running difference counts the requested kind constrains. A branch dies as
//! soon as any count exceeds the target lambda; counts only grow along a
//! branch, so no solution is ever cut. Every emitted family is re-verified
//! from scratch — the pruning state is never trusted.
//!
//! Canonicalization quotients by *common* translation only, the one symmetry
//! external spectra certify. Set order stays significant by default; sorted
//! enumeration (`sort_sets`) additionally quotients by set permutation,
//! which classification is also invariant under.

use serde::Serialize;

use crate::family::SetFamily;
use crate::group::AbelianGroup;
use crate::verify::{feasible_parameters, verify_family, TargetKind};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Rank-based pruning builds a binomial table; quietly disabled above this
/// group order.
const MAX_RANK_PRUNE_ORDER: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Canonicalization {
    /// Emit every family of the requested kind, duplicates of orbits and all.
    None,
    /// Emit only families that equal their translation-reduced form.
    TranslationReduced,
}

#[derive(Debug, Clone)]
pub struct SearchTask {
    pub group: AbelianGroup,
    pub m: usize,
    pub k: usize,
    pub kind: TargetKind,
    pub canonicalization: Canonicalization,
    /// Restrict to families whose sets are in non-decreasing lexicographic
    /// order. Solutions are closed under set permutation, so this only drops
    /// reorderings.
    pub sort_sets: bool,
    pub limit: Option<usize>,
    /// Upper bound on element-placement attempts.
    pub budget: u64,
}

impl SearchTask {
    pub fn new(group: AbelianGroup, m: usize, k: usize, kind: TargetKind) -> Self {
        SearchTask {
            group,
            m,
            k,
            kind,
            canonicalization: Canonicalization::TranslationReduced,
            sort_sets: false,
            limit: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub families: Vec<SetFamily>,
    /// True iff the whole space was covered (neither budget nor limit cut
    /// the run short).
    pub exhausted: bool,
    /// Element-placement attempts; exact in this single-worker
    /// implementation.
    pub nodes_visited: u64,
    pub budget_exhausted: bool,
}

/// Lambda forced by the counting identity of `kind`, when one exists.
fn implied_lambda(v: usize, m: usize, k: usize, kind: TargetKind) -> Option<usize> {
    if v < 2 || m < 2 || k == 0 || k > v {
        return None;
    }
    let lambda = match kind {
        TargetKind::Psedf => {
            if (k * k) % v != 0 {
                return None;
            }
            k * k / v
        }
        TargetKind::NondisjointSedf => {
            if (k * k * (m - 1)) % v != 0 {
                return None;
            }
            k * k * (m - 1) / v
        }
        TargetKind::ClassicalSedf => {
            if (k * k * (m - 1)) % (v - 1) != 0 {
                return None;
            }
            k * k * (m - 1) / (v - 1)
        }
    };
    feasible_parameters(v, m, k, lambda, kind).then_some(lambda)
}

/// Whether a solution of this shape can contain two equal sets. A duplicate
/// pair puts `k` copies of the identity into one pairwise spectrum, and for
/// `m >= 3` doubles a third set's differences to the pair, so:
fn duplicates_possible(v: usize, m: usize, k: usize, lambda: usize, kind: TargetKind) -> bool {
    match kind {
        TargetKind::ClassicalSedf => false,
        TargetKind::Psedf => lambda == k,
        TargetKind::NondisjointSedf => {
            lambda >= k && (m == 2 || lambda >= 2 * (k * k).div_ceil(v))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OrderMode {
    Free,
    NonDecreasing,
    Strict,
}

/// Finds all families of the requested kind, up to the chosen
/// canonicalization, in deterministic lexicographic order.
pub fn enumerate(task: &SearchTask) -> SearchResult {
    let v = task.group.order();
    let Some(lambda) = implied_lambda(v, task.m, task.k, task.kind) else {
        return SearchResult {
            families: Vec::new(),
            exhausted: true,
            nodes_visited: 0,
            budget_exhausted: false,
        };
    };

    let order_mode = if !task.sort_sets {
        OrderMode::Free
    } else if duplicates_possible(v, task.m, task.k, lambda, task.kind) {
        OrderMode::NonDecreasing
    } else {
        OrderMode::Strict
    };

    let mut searcher = Searcher {
        group: &task.group,
        v,
        m: task.m,
        k: task.k,
        lambda,
        kind: task.kind,
        order_mode,
        zero_first: task.canonicalization == Canonicalization::TranslationReduced,
        canon: task.canonicalization,
        sort_sets: task.sort_sets,
        limit: task.limit,
        budget: task.budget,
        nodes: 0,
        budget_exhausted: false,
        limit_reached: false,
        sets: Vec::with_capacity(task.m),
        pair_counts: match task.kind {
            TargetKind::Psedf => vec![vec![0; v]; task.m * task.m],
            _ => Vec::new(),
        },
        union_counts: match task.kind {
            TargetKind::Psedf => Vec::new(),
            _ => vec![vec![0; v]; task.m],
        },
        used: vec![false; v],
        binomials: (order_mode == OrderMode::Strict && v <= MAX_RANK_PRUNE_ORDER)
            .then(|| binomial_table(v, task.k)),
        solutions: Vec::new(),
    };
    searcher.sets.push(Vec::with_capacity(task.k));
    searcher.place(false);

    SearchResult {
        families: searcher.solutions,
        exhausted: !searcher.budget_exhausted && !searcher.limit_reached,
        nodes_visited: searcher.nodes,
        budget_exhausted: searcher.budget_exhausted,
    }
}

struct Searcher<'a> {
    group: &'a AbelianGroup,
    v: usize,
    m: usize,
    k: usize,
    lambda: usize,
    kind: TargetKind,
    order_mode: OrderMode,
    zero_first: bool,
    canon: Canonicalization,
    sort_sets: bool,
    limit: Option<usize>,
    budget: u64,
    nodes: u64,
    budget_exhausted: bool,
    limit_reached: bool,
    sets: Vec<Vec<usize>>,
    /// PSEDF: running spectrum of ordered pair `(i, j)` at `i * m + j`.
    pair_counts: Vec<Vec<usize>>,
    /// Union kinds: running union spectrum per set.
    union_counts: Vec<Vec<usize>>,
    /// Classical kind: elements already taken by any set.
    used: Vec<bool>,
    binomials: Option<Vec<Vec<u128>>>,
    solutions: Vec<SetFamily>,
}

impl Searcher<'_> {
    fn stopped(&self) -> bool {
        self.budget_exhausted || self.limit_reached
    }

    /// Chooses the next element of the current (last, partial) set.
    /// `tight` means the set so far equals the previous set's prefix.
    fn place(&mut self, tight: bool) {
        let d = self.sets.len() - 1;
        let p = self.sets[d].len();
        if p == self.k {
            self.finish_set(tight);
            return;
        }
        let mut low = if p == 0 { 0 } else { self.sets[d][p - 1] + 1 };
        if tight && d > 0 {
            low = low.max(self.sets[d - 1][p]);
        }
        let high = if self.zero_first && d == 0 && p == 0 {
            0
        } else {
            self.v - (self.k - p)
        };
        for e in low..=high {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.budget_exhausted = true;
                return;
            }
            let child_tight = tight && d > 0 && e == self.sets[d - 1][p];
            if self.kind == TargetKind::ClassicalSedf && self.used[e] {
                continue;
            }
            let ok = self.apply(e);
            if ok {
                self.sets[d].push(e);
                self.place(child_tight);
                self.sets[d].pop();
            }
            self.unapply(e);
            if self.stopped() {
                return;
            }
        }
    }

    fn finish_set(&mut self, tight: bool) {
        let d = self.sets.len() - 1;
        // A set still tight at full length equals its predecessor.
        if self.order_mode == OrderMode::Strict && tight && d > 0 {
            return;
        }
        if self.sets.len() == self.m {
            self.emit();
            return;
        }
        if self.order_mode == OrderMode::Strict {
            if let Some(above) = self.subsets_strictly_above(d) {
                if above < (self.m - self.sets.len()) as u128 {
                    return;
                }
            }
        }
        self.sets.push(Vec::with_capacity(self.k));
        self.place(self.order_mode != OrderMode::Free);
        self.sets.pop();
    }

    /// Adds the cross differences of `e` (joining the current set) against
    /// every complete set. Returns false if any running count exceeded
    /// lambda; the increments are applied either way and must be undone with
    /// [`unapply`](Self::unapply).
    fn apply(&mut self, e: usize) -> bool {
        let d = self.sets.len() - 1;
        let mut ok = true;
        match self.kind {
            TargetKind::Psedf => {
                for j in 0..d {
                    for idx in 0..self.sets[j].len() {
                        let a = self.sets[j][idx];
                        let fwd = self.group.sub(e, a);
                        let count = &mut self.pair_counts[d * self.m + j][fwd];
                        *count += 1;
                        ok &= *count <= self.lambda;
                        let rev = self.group.sub(a, e);
                        let count = &mut self.pair_counts[j * self.m + d][rev];
                        *count += 1;
                        ok &= *count <= self.lambda;
                    }
                }
            }
            TargetKind::NondisjointSedf | TargetKind::ClassicalSedf => {
                if self.kind == TargetKind::ClassicalSedf {
                    self.used[e] = true;
                }
                for j in 0..d {
                    for idx in 0..self.sets[j].len() {
                        let a = self.sets[j][idx];
                        let fwd = self.group.sub(e, a);
                        let count = &mut self.union_counts[d][fwd];
                        *count += 1;
                        ok &= *count <= self.lambda;
                        let rev = self.group.sub(a, e);
                        let count = &mut self.union_counts[j][rev];
                        *count += 1;
                        ok &= *count <= self.lambda;
                    }
                }
            }
        }
        ok
    }

    fn unapply(&mut self, e: usize) {
        let d = self.sets.len() - 1;
        match self.kind {
            TargetKind::Psedf => {
                for j in 0..d {
                    for idx in 0..self.sets[j].len() {
                        let a = self.sets[j][idx];
                        let fwd = self.group.sub(e, a);
                        self.pair_counts[d * self.m + j][fwd] -= 1;
                        let rev = self.group.sub(a, e);
                        self.pair_counts[j * self.m + d][rev] -= 1;
                    }
                }
            }
            TargetKind::NondisjointSedf | TargetKind::ClassicalSedf => {
                if self.kind == TargetKind::ClassicalSedf {
                    self.used[e] = false;
                }
                for j in 0..d {
                    for idx in 0..self.sets[j].len() {
                        let a = self.sets[j][idx];
                        let fwd = self.group.sub(e, a);
                        self.union_counts[d][fwd] -= 1;
                        let rev = self.group.sub(a, e);
                        self.union_counts[j][rev] -= 1;
                    }
                }
            }
        }
    }

    fn emit(&mut self) {
        let family = SetFamily::from_element_lists(self.group.clone(), self.sets.clone())
            .expect("search builds valid families");
        // Soundness gate: re-check with the independent verifier.
        let report = verify_family(&family);
        if report.satisfies(self.kind) != Some(self.lambda) {
            debug_assert!(false, "pruned search reached a non-solution");
            return;
        }
        if self.canon == Canonicalization::TranslationReduced {
            let canonical = if self.sort_sets {
                canonical_sorted_form(&family)
            } else {
                canonical_form(&family)
            };
            if family != canonical {
                return;
            }
        }
        self.solutions.push(family);
        if self.limit.is_some_and(|l| self.solutions.len() >= l) {
            self.limit_reached = true;
        }
    }

    /// Number of k-subsets lexicographically above the just-finished set,
    /// or `None` when rank pruning is disabled.
    fn subsets_strictly_above(&self, d: usize) -> Option<u128> {
        let binomials = self.binomials.as_ref()?;
        let set = &self.sets[d];
        let mut rank: u128 = 0;
        let mut next = 0usize;
        for (i, &s) in set.iter().enumerate() {
            for c in next..s {
                rank = rank.saturating_add(binomials[self.v - 1 - c][self.k - 1 - i]);
            }
            next = s + 1;
        }
        Some(binomials[self.v][self.k].saturating_sub(rank).saturating_sub(1))
    }
}

fn binomial_table(v: usize, k: usize) -> Vec<Vec<u128>> {
    let mut table = vec![vec![0u128; k + 1]; v + 1];
    for n in 0..=v {
        table[n][0] = 1;
        for r in 1..=k.min(n) {
            table[n][r] = table[n - 1][r - 1].saturating_add(table[n - 1][r]);
        }
    }
    table
}

/// Translation-reduced representative: the common translate with the
/// lexicographically smallest encoding. Constant on common-translation
/// orbits and idempotent; set order is preserved.
pub fn canonical_form(family: &SetFamily) -> SetFamily {
    let mut best = family.clone();
    let mut best_encoding = family.encoding();
    for t in 1..family.order() {
        let candidate = family.translate_all(t).expect("t is a group element");
        let encoding = candidate.encoding();
        if encoding < best_encoding {
            best_encoding = encoding;
            best = candidate;
        }
    }
    best
}

/// Like [`canonical_form`] but additionally sorts the sets of each translate,
/// i.e. reduces modulo common translation *and* set order.
pub fn canonical_sorted_form(family: &SetFamily) -> SetFamily {
    let mut best: Option<(Vec<Vec<usize>>, SetFamily)> = None;
    for t in 0..family.order() {
        let translated = family.translate_all(t).expect("t is a group element");
        let mut sets = translated.sets().to_vec();
        sets.sort_by(|a, b| a.elements().cmp(b.elements()));
        let candidate = SetFamily::new(sets).expect("same sets, resorted");
        let encoding = candidate.encoding();
        if best.as_ref().is_none_or(|(b, _)| encoding < *b) {
            best = Some((encoding, candidate));
        }
    }
    best.expect("group is non-empty").1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LambdaOneCase {
    pub v: usize,
    pub m: usize,
    pub k: usize,
    pub exists: bool,
    pub predicted: bool,
}

/// Outcome of sweeping every lambda = 1 feasible parameter set up to
/// `v_max`.
#[derive(Debug, Clone, Serialize)]
pub struct LambdaOneReport {
    pub v_max: usize,
    /// False when the budget ran out before every case was settled.
    pub complete: bool,
    pub violations: usize,
    pub entries: Vec<LambdaOneCase>,
    #[serde(rename = "nodes")]
    pub nodes_visited: u64,
}

/// Checks by exhaustive search that a non-disjoint SEDF with lambda = 1
/// exists exactly for m = 2 and v = k^2, for every feasible (v, m, k) with
/// v <= v_max.
pub fn confirm_lambda1_theorem(v_max: usize, budget: u64) -> LambdaOneReport {
    let mut entries = Vec::new();
    let mut nodes: u64 = 0;
    let mut complete = true;
    'sweep: for v in 2..=v_max {
        let group = AbelianGroup::cyclic(v).expect("v >= 2");
        for k in 1..=v {
            if k * k > v || v % (k * k) != 0 {
                continue;
            }
            let m = v / (k * k) + 1;
            debug_assert!(feasible_parameters(v, m, k, 1, TargetKind::NondisjointSedf));
            let mut task = SearchTask::new(group.clone(), m, k, TargetKind::NondisjointSedf);
            task.sort_sets = true;
            task.limit = Some(1);
            task.budget = budget.saturating_sub(nodes);
            let result = enumerate(&task);
            nodes += result.nodes_visited;
            let exists = !result.families.is_empty();
            if !exists && result.budget_exhausted {
                complete = false;
                break 'sweep;
            }
            entries.push(LambdaOneCase {
                v,
                m,
                k,
                exists,
                predicted: m == 2 && v == k * k,
            });
        }
    }
    let violations = entries.iter().filter(|c| c.exists != c.predicted).count();
    LambdaOneReport {
        v_max,
        complete,
        violations,
        entries,
        nodes_visited: nodes,
    }
}
