//! Exhaustive enumeration of associative Cayley tables of small order,
//! canonical forms up to isomorphism (optionally also anti-isomorphism), and
//! the census driver that streams tables through named predicates.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Hard cap for exhaustive enumeration. Order 5 already has 183k labeled
/// associative tables; order 6 is out of reach for this style of census.
pub const MAX_EXHAUSTIVE_ORDER: usize = 5;

const UNSET: usize = usize::MAX;

/// Evaluates one associativity triple on a partially filled table, treating
/// any triple whose products are not fully determined as fine.
#[inline]
fn triple_ok(table: &[usize], n: usize, a: usize, b: usize, c: usize) -> bool {
    let ab = table[a * n + b];
    if ab == UNSET {
        return true;
    }
    let lhs = table[ab * n + c];
    if lhs == UNSET {
        return true;
    }
    let bc = table[b * n + c];
    if bc == UNSET {
        return true;
    }
    let rhs = table[a * n + bc];
    rhs == UNSET || lhs == rhs
}

/// After placing cell `(i, j)`, checks every triple whose evaluation can
/// touch that cell. Triples completed earlier were already checked, so this
/// is a complete incremental filter.
fn placement_ok(table: &[usize], n: usize, i: usize, j: usize) -> bool {
    for c in 0..n {
        if !triple_ok(table, n, i, j, c) {
            return false;
        }
    }
    for a in 0..n {
        if !triple_ok(table, n, a, i, j) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let v = table[a * n + b];
            if v == UNSET {
                continue;
            }
            // (a, b, j) looks up table[v][j]; (i, a, b) looks up table[i][v]
            if v == i && !triple_ok(table, n, a, b, j) {
                return false;
            }
            if v == j && !triple_ok(table, n, i, a, b) {
                return false;
            }
        }
    }
    true
}

/// Fills cells `cell..stop` row-major, invoking `sink` on every consistent
/// completion of that range. Values are tried in ascending order, so the
/// visit order is lexicographic on the flat table.
fn fill(table: &mut [usize], n: usize, cell: usize, stop: usize, sink: &mut dyn FnMut(&[usize])) {
    if cell == stop {
        sink(table);
        return;
    }
    let (i, j) = (cell / n, cell % n);
    for v in 0..n {
        table[cell] = v;
        if placement_ok(table, n, i, j) {
            fill(table, n, cell + 1, stop, sink);
        }
    }
    table[cell] = UNSET;
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::BoundExceeded {
            order: n,
            bound: MAX_EXHAUSTIVE_ORDER,
        });
    }
    Ok(())
}

/// Every associative `n x n` table exactly once, in lexicographic order.
pub fn enumerate_associative(n: usize) -> Result<Vec<FiniteSemigroup>> {
    check_order(n)?;
    let mut out = Vec::new();
    let mut table = vec![UNSET; n * n];
    fill(&mut table, n, 0, n * n, &mut |t| {
        out.push(FiniteSemigroup::from_flat(n, t.to_vec()).expect("search yields semigroups"));
    });
    Ok(out)
}

/// Serial streaming variant of [`enumerate_associative`].
pub fn for_each_associative(n: usize, mut f: impl FnMut(&FiniteSemigroup)) -> Result<()> {
    check_order(n)?;
    let mut table = vec![UNSET; n * n];
    fill(&mut table, n, 0, n * n, &mut |t| {
        f(&FiniteSemigroup::from_flat(n, t.to_vec()).expect("search yields semigroups"));
    });
    Ok(())
}

/// Consistent first rows; the parallel driver partitions the search space by
/// these prefixes.
fn first_row_prefixes(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut table = vec![UNSET; n * n];
    fill(&mut table, n, 0, n, &mut |t| out.push(t[..n].to_vec()));
    out
}

/// Parallel enumeration with deterministic output: workers own disjoint
/// first-row prefixes and the per-prefix results are concatenated in prefix
/// order, which reproduces the serial lexicographic order.
pub fn enumerate_associative_parallel(n: usize, jobs: usize) -> Result<Vec<FiniteSemigroup>> {
    check_order(n)?;
    let prefixes = first_row_prefixes(n);
    let run = || {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut out = Vec::new();
                let mut table = vec![UNSET; n * n];
                table[..n].copy_from_slice(prefix);
                fill(&mut table, n, n, n * n, &mut |t| {
                    out.push(
                        FiniteSemigroup::from_flat(n, t.to_vec())
                            .expect("search yields semigroups"),
                    );
                });
                out
            })
            .collect::<Vec<_>>()
    };
    let chunks = with_pool(jobs, run)?;
    Ok(chunks.into_iter().flatten().collect())
}

pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        Ok(f())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InternalInconsistency(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

/// How far canonicalization identifies tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalMode {
    /// No identification; tables are kept as-is.
    Labeled,
    /// Up to isomorphism (relabeling).
    Iso,
    /// Up to isomorphism and anti-isomorphism (relabelings of the table and
    /// of its transpose).
    IsoAndAnti,
}

/// Lexicographically least table over all relabelings (and, in
/// `IsoAndAnti` mode, over relabelings of the transpose as well).
pub fn canonical_form(s: &FiniteSemigroup, mode: CanonicalMode) -> FiniteSemigroup {
    let n = s.order();
    assert!(
        n <= 6,
        "canonical form is a full n! minimization; capped at order 6"
    );
    match mode {
        CanonicalMode::Labeled => FiniteSemigroup::from_flat(n, s.table().to_vec()).expect("valid"),
        CanonicalMode::Iso => min_relabeling(s),
        CanonicalMode::IsoAndAnti => min_relabeling(s).min(min_relabeling(&s.transpose())),
    }
}

fn min_relabeling(s: &FiniteSemigroup) -> FiniteSemigroup {
    crate::group::permutations(s.order())
        .into_iter()
        .map(|perm| s.relabeled(&perm))
        .min()
        .expect("at least the identity permutation")
}

/// Searches all relabelings for an isomorphism witness.
pub fn find_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    assert!(
        a.order() <= 6,
        "brute-force isomorphism search is capped at order 6"
    );
    crate::group::permutations(a.order())
        .into_iter()
        .find(|perm| a.is_isomorphic_by(b, perm))
}

/// One representative per canonical-form fiber over all labeled associative
/// tables of order `n`, sorted.
pub fn canonical_representatives(
    n: usize,
    mode: CanonicalMode,
    jobs: usize,
) -> Result<Vec<FiniteSemigroup>> {
    let labeled = enumerate_associative_parallel(n, jobs)?;
    let reps = with_pool(jobs, || {
        labeled
            .par_iter()
            .map(|s| canonical_form(s, mode))
            .collect::<BTreeSet<FiniteSemigroup>>()
    })?;
    Ok(reps.into_iter().collect())
}

/// A named check a census run can evaluate on every table.
#[derive(Clone, Copy)]
pub struct NamedPredicate {
    pub name: &'static str,
    pub description: &'static str,
    pub check: fn(&FiniteSemigroup) -> Result<bool>,
}

/// Configuration of a census run.
#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub order: usize,
    pub mode: CanonicalMode,
    /// Names resolved against [`crate::verify::standard_predicates`].
    pub predicates: Vec<String>,
    /// Worker threads; 0 uses the global default.
    pub jobs: usize,
}

/// Aggregated result of one predicate over the census stream.
#[derive(Debug, Clone)]
pub struct PredicateOutcome {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// First few counterexample tables, in stream order.
    pub counterexamples: Vec<FiniteSemigroup>,
}

const COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub order: usize,
    pub total: usize,
    pub outcomes: Vec<PredicateOutcome>,
}

/// Streams the census (labeled tables, or canonical representatives in the
/// identified modes) through the named predicates. Aggregation is
/// deterministic regardless of the worker count: chunks are merged in
/// stream order.
pub fn census_verify(config: &CensusConfig) -> Result<CensusReport> {
    let predicates: Vec<NamedPredicate> = config
        .predicates
        .iter()
        .map(|name| {
            crate::verify::standard_predicates()
                .iter()
                .find(|p| p.name == *name)
                .copied()
                .ok_or_else(|| Error::Parse(format!("unknown predicate {name:?}")))
        })
        .collect::<Result<_>>()?;
    let stream = match config.mode {
        CanonicalMode::Labeled => enumerate_associative_parallel(config.order, config.jobs)?,
        mode => canonical_representatives(config.order, mode, config.jobs)?,
    };
    let results: Vec<Vec<Result<bool>>> = with_pool(config.jobs, || {
        stream
            .par_iter()
            .map(|s| predicates.iter().map(|p| (p.check)(s)).collect::<Vec<_>>())
            .collect()
    })?;
    let mut outcomes: Vec<PredicateOutcome> = predicates
        .iter()
        .map(|p| PredicateOutcome {
            name: p.name.to_string(),
            checked: 0,
            failures: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    for (s, row) in stream.iter().zip(&results) {
        for (k, verdict) in row.iter().enumerate() {
            let ok = verdict.clone()?;
            outcomes[k].checked += 1;
            if !ok {
                outcomes[k].failures += 1;
                if outcomes[k].counterexamples.len() < COUNTEREXAMPLE_CAP {
                    outcomes[k].counterexamples.push(s.clone());
                }
            }
        }
    }
    Ok(CensusReport {
        order: config.order,
        total: stream.len(),
        outcomes,
    })
}
