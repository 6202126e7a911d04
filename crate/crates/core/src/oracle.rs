//! Exact brute-force solvers. They exist for correctness, not speed: they
//! provide ground truth for tests and approximation-ratio measurement.

use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::{majority_complete, Assignment, FragmentMatrix, Label, SolutionPair};

/// Size limits for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_rows_for_bipartition: usize,
    pub max_cols_for_strings: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_rows_for_bipartition: 20,
            max_cols_for_strings: 10,
        }
    }
}

fn keep_best(best: &mut Option<SolutionPair>, cand: SolutionPair) {
    match best {
        Some(b) if b.order_key() <= cand.order_key() => {}
        _ => *best = Some(cand),
    }
}

/// Optimal solution by enumerating all `2^(n-1)` bipartitions.
///
/// Row 1 is fixed to `A`: renaming the two strings makes the mirrored
/// bipartition equivalent. Among equal-cost solutions the lexicographically
/// smallest `(sigma, sigma', labels)` is returned.
pub fn exact_bipartition(
    m: &FragmentMatrix,
    budget: &OracleBudget,
) -> Result<SolutionPair, Error> {
    let n = m.n();
    if n > budget.max_rows_for_bipartition {
        return Err(Error::BudgetExceeded {
            limit: budget.max_rows_for_bipartition,
            requested: n,
        });
    }
    let mut best: Option<SolutionPair> = None;
    for mask in 0u64..(1u64 << (n - 1)) {
        let labels = (0..n)
            .map(|i| {
                if i > 0 && mask >> (i - 1) & 1 == 1 {
                    Label::B
                } else {
                    Label::A
                }
            })
            .collect();
        let sol = majority_complete(m, &Assignment::new(labels))?;
        keep_best(&mut best, sol);
    }
    Ok(best.unwrap())
}

/// Optimal solution by enumerating all ordered string pairs with
/// `sigma <= sigma'`; each pair is evaluated under the default assignment.
pub fn exact_strings(m: &FragmentMatrix, budget: &OracleBudget) -> Result<SolutionPair, Error> {
    let cols = m.m();
    if cols > budget.max_cols_for_strings {
        return Err(Error::BudgetExceeded {
            limit: budget.max_cols_for_strings,
            requested: cols,
        });
    }
    let to_bits = |word: u64| -> Vec<bool> { (0..cols).map(|j| word >> (cols - 1 - j) & 1 == 1).collect() };
    let mut best: Option<SolutionPair> = None;
    for s in 0u64..(1u64 << cols) {
        let sigma = to_bits(s);
        for t in s..(1u64 << cols) {
            let sol = SolutionPair::with_default_assignment(m, sigma.clone(), to_bits(t))?;
            keep_best(&mut best, sol);
        }
    }
    Ok(best.unwrap())
}

/// Optimal solution among bipartitions with exactly `r` rows labeled `A`.
pub fn exact_fixed_count(
    m: &FragmentMatrix,
    r: usize,
    budget: &OracleBudget,
) -> Result<SolutionPair, Error> {
    let n = m.n();
    if n > budget.max_rows_for_bipartition {
        return Err(Error::BudgetExceeded {
            limit: budget.max_rows_for_bipartition,
            requested: n,
        });
    }
    if r > n {
        return Err(Error::BadFixedCount { n, r });
    }
    let mut best: Option<SolutionPair> = None;
    for mask in masks_with_popcount(n, r) {
        let labels = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Label::A } else { Label::B })
            .collect();
        let sol = majority_complete(m, &Assignment::new(labels))?;
        keep_best(&mut best, sol);
    }
    Ok(best.unwrap())
}

/// All `n`-bit masks with exactly `r` ones, ascending (Gosper's hack).
fn masks_with_popcount(n: usize, r: usize) -> impl Iterator<Item = u64> {
    let done = if r == 0 { 1u64 } else { 1u64 << n };
    let mut cur = if r == 0 { 0u64 } else { (1u64 << r) - 1 };
    let mut exhausted = false;
    core::iter::from_fn(move || {
        if exhausted || cur >= done && r != 0 {
            return None;
        }
        let out = cur;
        if r == 0 {
            exhausted = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let nxt = cur + c;
            cur = (((cur ^ nxt) / c) >> 2) | nxt;
        }
        Some(out)
    })
}
