//! Sampling-based approximation core for SWC-instances (instances whose
//! first column is fully binary): trisections, subdivisions, the weighted and
//! generalized majority votes, and the vote-and-assign solver built on them.
//!
//! Row indices are 0-based throughout; ranges are half-open.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::matrix::{
    cost_fixed, Assignment, FragmentMatrix, Label, SolutionPair,
};
use crate::oracle::{exact_fixed_count, OracleBudget};
use crate::params::{stream, Precision};

/// Three consecutive row ranges `U`, `L`, `X` counted against a reference
/// assignment for one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trisection {
    pub u: Range<usize>,
    pub l: Range<usize>,
    pub x: Range<usize>,
    pub side: Label,
    /// Reference rows inside `u` and `l` respectively.
    pub u_quota: usize,
    pub l_quota: usize,
}

/// A contiguous chunk of rows together with the number of reference rows it
/// is counted (or guessed) to contain. That count is the chunk's weight in
/// the generalized majority vote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chunk {
    pub rows: Range<usize>,
    pub weight: usize,
}

/// Chunks for the upper and lower ranges of one trisection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub upper: Vec<Chunk>,
    pub lower: Vec<Chunk>,
}

impl Subdivision {
    pub fn chunks(&self) -> impl Iterator<Item = &Chunk> {
        self.upper.iter().chain(self.lower.iter())
    }

    pub fn chunk_count(&self) -> usize {
        self.upper.len() + self.lower.len()
    }
}

/// Per-chunk multisets of sampled rows, aligned with a [`Subdivision`].
/// Draws are with repetition; each inner vector is kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selection {
    pub upper: Vec<Vec<usize>>,
    pub lower: Vec<Vec<usize>>,
}

impl Selection {
    pub fn upper_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.upper.iter().flatten().copied()
    }

    pub fn lower_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.lower.iter().flatten().copied()
    }

    pub fn all_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.upper_rows().chain(self.lower_rows())
    }

    /// Checks shape and containment against the subdivision that produced it.
    pub fn validate(&self, sub: &Subdivision, rows_per_chunk: usize) -> Result<(), Error> {
        if self.upper.len() != sub.upper.len() || self.lower.len() != sub.lower.len() {
            return Err(Error::Precondition(
                "selection shape does not match subdivision".into(),
            ));
        }
        let check = |sel: &[Vec<usize>], chunks: &[Chunk]| -> Result<(), Error> {
            for (s, c) in sel.iter().zip(chunks) {
                if s.len() != rows_per_chunk {
                    return Err(Error::Precondition(
                        "selection must hold S rows per chunk".into(),
                    ));
                }
                for &row in s {
                    if !c.rows.contains(&row) {
                        return Err(Error::SelectionOutOfChunk { row });
                    }
                }
            }
            Ok(())
        };
        check(&self.upper, &sub.upper)?;
        check(&self.lower, &sub.lower)
    }
}

/// Returns the first row shared by the two selections, if any.
pub fn selection_overlap(a: &Selection, b: &Selection) -> Option<usize> {
    let mut rows: Vec<usize> = a.all_rows().collect();
    rows.sort_unstable();
    rows.dedup();
    b.all_rows().find(|r| rows.binary_search(r).is_ok())
}

/// Builds the trisection of `m` for one side of a reference assignment.
///
/// `U` starts at row 0 and holds `floor((1-eps) * r)` reference rows, `L`
/// holds the next `ceil((eps - eps^2) * r)`, `X` the rest; `L` and `X` begin
/// with a reference row.
pub fn build_trisection(
    m: &FragmentMatrix,
    reference: &Assignment,
    side: Label,
    prec: &Precision,
) -> Result<Trisection, Error> {
    if reference.len() != m.n() {
        return Err(Error::BadAssignment {
            rows: m.n(),
            labels: reference.len(),
        });
    }
    let refs = reference.rows_with(side);
    let r = refs.len();
    let uq = prec.upper_quota(r);
    let lq = prec.lower_quota(r);
    if uq == 0 || lq == 0 || uq + lq > r {
        return Err(Error::TrisectionTooSmall { side_rows: r });
    }
    let n = m.n();
    // L starts at the (uq+1)-th reference row, X at the first reference row
    // after L's quota (or is empty if none remains).
    let l_start = refs[uq];
    let x_start = if uq + lq < r { refs[uq + lq] } else { n };
    Ok(Trisection {
        u: 0..l_start,
        l: l_start..x_start,
        x: x_start..n,
        side,
        u_quota: uq,
        l_quota: lq,
    })
}

fn effective_chunks(k: usize, len: usize) -> usize {
    // Chunks need at least two rows each to leave sampling headroom at desk
    // scale; a range shorter than 2K collapses to fewer chunks.
    k.min((len / 2).max(1))
}

/// Splits `range` into balanced chunks anchored at reference rows, weighting
/// each chunk by its reference count.
fn chunks_from_reference(
    range: Range<usize>,
    refs: &[usize],
    quota: usize,
    k: usize,
) -> Vec<Chunk> {
    let in_range: Vec<usize> = refs
        .iter()
        .copied()
        .filter(|r| range.contains(r))
        .collect();
    debug_assert!(in_range.len() >= quota);
    let k = effective_chunks(k, quota.max(1)).min(in_range.len().max(1));
    let mut out = Vec::with_capacity(k);
    let mut start = range.start;
    for i in 0..k {
        let lo = i * in_range.len() / k;
        let hi = (i + 1) * in_range.len() / k;
        let end = if i + 1 == k { range.end } else { in_range[hi] };
        out.push(Chunk {
            rows: start..end,
            weight: hi - lo,
        });
        start = end;
    }
    out
}

/// Splits `range` into balanced chunks by row count alone, spreading
/// `quota` across them as weights. Used when the reference is unknown.
fn chunks_unguided(range: Range<usize>, quota: usize, k: usize) -> Vec<Chunk> {
    let len = range.len();
    let k = effective_chunks(k, len);
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let lo = range.start + i * len / k;
        let hi = range.start + (i + 1) * len / k;
        let w = (i + 1) * quota / k - i * quota / k;
        out.push(Chunk {
            rows: lo..hi,
            weight: w.max(1),
        });
    }
    out
}

/// Subdivides a trisection into chunks anchored at reference rows.
pub fn subdivide(
    tri: &Trisection,
    reference: &Assignment,
    prec: &Precision,
) -> Subdivision {
    let refs = reference.rows_with(tri.side);
    Subdivision {
        upper: chunks_from_reference(tri.u.clone(), &refs, tri.u_quota, prec.chunks_per_range),
        lower: chunks_from_reference(tri.l.clone(), &refs, tri.l_quota, prec.chunks_per_range),
    }
}

/// Subdivides a trisection by row counts alone (reference unknown).
pub fn subdivide_unguided(tri: &Trisection, prec: &Precision) -> Subdivision {
    Subdivision {
        upper: chunks_unguided(tri.u.clone(), tri.u_quota, prec.chunks_per_range),
        lower: chunks_unguided(tri.l.clone(), tri.l_quota, prec.chunks_per_range),
    }
}

fn remap(m: &FragmentMatrix, row: usize, col: usize) -> i64 {
    // zeros become -1, wildcards 0 (a row not crossing the column reads as
    // wildcard, so out-of-span rows contribute nothing)
    match m.rows()[row].bit_at(col) {
        Some(true) => 1,
        Some(false) => -1,
        None => 0,
    }
}

/// The weighted majority vote at `col`: upper-range samples are biased by
/// `(1-eps)/(eps-eps^2)` against lower-range samples. Returns the voted bit;
/// a zero balance yields `1`.
pub fn weighted_majority(
    m: &FragmentMatrix,
    col: usize,
    upper_sel: &[usize],
    lower_sel: &[usize],
    prec: &Precision,
) -> bool {
    let (bn, bd) = prec.bias();
    let up: i64 = upper_sel.iter().map(|&i| remap(m, i, col)).sum();
    let lo: i64 = lower_sel.iter().map(|&i| remap(m, i, col)).sum();
    // nu = up * bias + lo, scaled by bd to stay in integers
    up * bn + lo * bd >= 0
}

/// The generalized majority vote at `col`: each selected row is weighted by
/// its chunk's guessed reference count `r(c)`. Returns `1` iff the balance is
/// at least zero.
pub fn generalized_majority(
    m: &FragmentMatrix,
    col: usize,
    chunks: &[(usize, &[usize])],
) -> bool {
    let mut rho = 0i64;
    for (weight, rows) in chunks {
        let s: i64 = rows.iter().map(|&i| remap(m, i, col)).sum();
        rho += *weight as i64 * s;
    }
    rho >= 0
}

/// Votes one side's string over `cols` from its selection.
pub fn vote_string(
    m: &FragmentMatrix,
    cols: Range<usize>,
    sel: &Selection,
    prec: &Precision,
) -> Vec<bool> {
    let upper: Vec<usize> = sel.upper_rows().collect();
    let lower: Vec<usize> = sel.lower_rows().collect();
    cols.map(|col| weighted_majority(m, col, &upper, &lower, prec))
        .collect()
}

/// Margin of row `i` between the two strings: `dist(sigma, row) - dist(sigma', row)`.
fn margin(row: &crate::matrix::Row, sigma: &[bool], sigma_prime: &[bool]) -> i64 {
    row.dist_to(sigma) as i64 - row.dist_to(sigma_prime) as i64
}

/// Assigns the `r` rows with smallest margins (ties by lower row index) to
/// `A` and the rest to `B`. For fixed strings this is the cheapest assignment
/// with exactly `r` rows on `A`.
pub fn assign_by_margin(
    m: &FragmentMatrix,
    sigma: &[bool],
    sigma_prime: &[bool],
    r: usize,
) -> Assignment {
    let mut order: Vec<usize> = (0..m.n()).collect();
    order.sort_by_key(|&i| (margin(&m.rows()[i], sigma, sigma_prime), i));
    Assignment::from_a_set(m.n(), &order[..r])
}

/// Number of distinct selections for one subdivision (multisets of size `S`
/// per chunk), saturating.
fn selection_space(sub: &Subdivision, s: usize) -> u128 {
    let mut total: u128 = 1;
    for c in sub.chunks() {
        let combos = multiset_count(c.rows.len(), s);
        total = total.saturating_mul(combos);
        if total > u128::from(u64::MAX) {
            return u128::MAX;
        }
    }
    total
}

/// `C(k + s - 1, s)`: multisets of size `s` over `k` items, saturating.
fn multiset_count(k: usize, s: usize) -> u128 {
    if k == 0 {
        return 0;
    }
    let mut num: u128 = 1;
    for i in 0..s {
        num = num.saturating_mul((k + i) as u128);
        num /= (i + 1) as u128;
        if num > u128::from(u64::MAX) {
            return u128::MAX;
        }
    }
    num
}

/// All multisets of size `s` over `chunk`, as sorted vectors.
fn chunk_multisets(chunk: &Chunk, s: usize) -> Vec<Vec<usize>> {
    let rows: Vec<usize> = chunk.rows.clone().collect();
    let mut out = Vec::new();
    let mut cur = vec![0usize; s];
    loop {
        out.push(cur.iter().map(|&i| rows[i]).collect());
        // next non-decreasing index vector
        let mut pos = s;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] + 1 < rows.len() {
                let v = cur[pos] + 1;
                for slot in &mut cur[pos..] {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// Enumerates every selection of a subdivision. Only call when
/// [`selection_space`] is small.
fn enumerate_selections(sub: &Subdivision, s: usize) -> Vec<Selection> {
    let upper_opts: Vec<Vec<Vec<usize>>> =
        sub.upper.iter().map(|c| chunk_multisets(c, s)).collect();
    let lower_opts: Vec<Vec<Vec<usize>>> =
        sub.lower.iter().map(|c| chunk_multisets(c, s)).collect();
    let mut out = Vec::new();
    let mut pick = |opts: &[Vec<Vec<usize>>], acc: &mut Vec<Vec<Vec<usize>>>| {
        // cartesian product, depth-first
        fn rec(
            opts: &[Vec<Vec<usize>>],
            cur: &mut Vec<Vec<usize>>,
            acc: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if cur.len() == opts.len() {
                acc.push(cur.clone());
                return;
            }
            for choice in &opts[cur.len()] {
                cur.push(choice.clone());
                rec(opts, cur, acc);
                cur.pop();
            }
        }
        rec(opts, &mut Vec::new(), acc);
    };
    let mut uppers = Vec::new();
    pick(&upper_opts, &mut uppers);
    let mut lowers = Vec::new();
    pick(&lower_opts, &mut lowers);
    for u in &uppers {
        for l in &lowers {
            out.push(Selection {
                upper: u.clone(),
                lower: l.clone(),
            });
        }
    }
    out
}

/// Draws one selection per chunk uniformly from `pool ∩ chunk`. Returns
/// `None` if some chunk has no available row.
fn draw_selection_from_pool(
    rng: &mut ChaCha8Rng,
    sub: &Subdivision,
    pool: Option<&[bool]>,
    s: usize,
) -> Option<Selection> {
    let draw = |rng: &mut ChaCha8Rng, chunks: &[Chunk]| -> Option<Vec<Vec<usize>>> {
        let mut out = Vec::with_capacity(chunks.len());
        for c in chunks {
            let avail: Vec<usize> = match pool {
                Some(p) => c.rows.clone().filter(|&r| p[r]).collect(),
                None => c.rows.clone().collect(),
            };
            if avail.is_empty() {
                return None;
            }
            let mut picks: Vec<usize> =
                (0..s).map(|_| avail[rng.random_range(0..avail.len())]).collect();
            picks.sort_unstable();
            out.push(picks);
        }
        Some(out)
    };
    let upper = draw(rng, &sub.upper)?;
    let lower = draw(rng, &sub.lower)?;
    Some(Selection { upper, lower })
}

/// Draws a disjoint pair of selections for the two sides.
///
/// Rows lying in chunks of both sides are first split between the sides
/// (trial 0 by parity, later trials at random); each side then samples from
/// its own share. Returns `None` when some chunk ends up with no available
/// row, which counts as a failed trial.
pub fn draw_pair_selections(
    rng: &mut ChaCha8Rng,
    n: usize,
    sub_a: &Subdivision,
    sub_b: &Subdivision,
    s: usize,
    parity_split: bool,
) -> Option<(Selection, Selection)> {
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    for c in sub_a.chunks() {
        for r in c.rows.clone() {
            in_a[r] = true;
        }
    }
    for c in sub_b.chunks() {
        for r in c.rows.clone() {
            in_b[r] = true;
        }
    }
    let mut pool_a = vec![false; n];
    let mut pool_b = vec![false; n];
    for r in 0..n {
        match (in_a[r], in_b[r]) {
            (true, false) => pool_a[r] = true,
            (false, true) => pool_b[r] = true,
            (true, true) => {
                let to_a = if parity_split { r % 2 == 0 } else { rng.random() };
                if to_a {
                    pool_a[r] = true;
                } else {
                    pool_b[r] = true;
                }
            }
            (false, false) => {}
        }
    }
    let sel_a = draw_selection_from_pool(rng, sub_a, Some(&pool_a), s)?;
    let sel_b = draw_selection_from_pool(rng, sub_b, Some(&pool_b), s)?;
    Some((sel_a, sel_b))
}

/// One vote-and-assign pass of the core algorithm with fixed selections:
/// vote both strings column by column, then give the `r` smallest-margin
/// rows to `sigma`.
pub fn vote_and_assign(
    m: &FragmentMatrix,
    sel_a: &Selection,
    sel_b: &Selection,
    r: usize,
    prec: &Precision,
) -> Result<SolutionPair, Error> {
    if let Some(row) = selection_overlap(sel_a, sel_b) {
        return Err(Error::SelectionOverlap { row });
    }
    let sigma = vote_string(m, 1..m.m() + 1, sel_a, prec);
    let sigma_prime = vote_string(m, 1..m.m() + 1, sel_b, prec);
    let assignment = assign_by_margin(m, &sigma, &sigma_prime, r);
    let cost = cost_fixed(m, &sigma, &sigma_prime, &assignment)?;
    Ok(SolutionPair {
        sigma,
        sigma_prime,
        assignment,
        cost,
    })
}

/// The core sampling solver on a full SWC-instance.
///
/// With `fixed` selections this is a single vote-and-assign pass. Otherwise
/// the selection space is searched: exhaustively when it has at most
/// `exhaustive_limit` elements, else with `selection_trials` seeded draws;
/// the minimum-cost outcome wins, ties resolved lexicographically.
pub fn swc(
    m: &FragmentMatrix,
    sub_a: &Subdivision,
    sub_b: &Subdivision,
    r: usize,
    r_prime: usize,
    prec: &Precision,
    fixed: Option<(&Selection, &Selection)>,
) -> Result<SolutionPair, Error> {
    prec.check()?;
    let n = m.n();
    if r + r_prime != n {
        return Err(Error::Precondition("r + r' must equal n".into()));
    }
    if !m.rows().iter().all(|row| row.crosses(1)) {
        return Err(Error::Precondition(
            "not an SWC-instance: column 1 has wildcards".into(),
        ));
    }
    if r.min(r_prime) <= prec.small_case {
        return Err(Error::SmallCase {
            r,
            r_prime,
            cutoff: prec.small_case,
        });
    }
    let s = prec.rows_per_chunk;
    if let Some((sel_a, sel_b)) = fixed {
        sel_a.validate(sub_a, s)?;
        sel_b.validate(sub_b, s)?;
        return vote_and_assign(m, sel_a, sel_b, r, prec);
    }

    let mut best: Option<SolutionPair> = None;
    let space = selection_space(sub_a, s).saturating_mul(selection_space(sub_b, s));
    if space <= prec.exhaustive_limit as u128 {
        for sel_a in enumerate_selections(sub_a, s) {
            for sel_b in enumerate_selections(sub_b, s) {
                if selection_overlap(&sel_a, &sel_b).is_some() {
                    continue;
                }
                let sol = vote_and_assign(m, &sel_a, &sel_b, r, prec)?;
                keep_best(&mut best, sol);
            }
        }
    } else {
        let mut rng = stream(prec.seed, tag_for(0x5343, r as u64, n as u64));
        for trial in 0..prec.selection_trials {
            let Some((sel_a, sel_b)) =
                draw_pair_selections(&mut rng, n, sub_a, sub_b, s, trial == 0)
            else {
                continue;
            };
            let sol = vote_and_assign(m, &sel_a, &sel_b, r, prec)?;
            if sol.cost == 0 {
                return Ok(sol);
            }
            keep_best(&mut best, sol);
        }
    }
    best.ok_or_else(|| Error::Precondition("no feasible disjoint selection pair".into()))
}

pub(crate) fn keep_best(best: &mut Option<SolutionPair>, cand: SolutionPair) {
    match best {
        Some(b) if b.order_key() <= cand.order_key() => {}
        _ => *best = Some(cand),
    }
}

pub(crate) fn tag_for(kind: u64, a: u64, b: u64) -> u64 {
    kind.wrapping_mul(0x100_0000_01b3)
        .wrapping_add(a.wrapping_mul(0x9e3779b9))
        .wrapping_add(b)
}

/// Runs the sampling solver on the sampled ranges only (`U ∪ L` of both
/// sides) and assigns every remaining row by the default rule against the
/// computed strings. Rows outside the sampled ranges are never sampled.
///
/// `r` and `r_prime` are the quotas for the sampled region, which must cover
/// its row count exactly.
pub fn swc_with_reassignment(
    m: &FragmentMatrix,
    tri_a: &Trisection,
    tri_b: &Trisection,
    sub_a: &Subdivision,
    sub_b: &Subdivision,
    r: usize,
    r_prime: usize,
    prec: &Precision,
) -> Result<SolutionPair, Error> {
    let n = m.n();
    let sampled_end = (tri_a.l.end).max(tri_b.l.end);
    if sampled_end == n {
        // no X rows anywhere: identical to the plain solver
        return swc(m, sub_a, sub_b, r, r_prime, prec, None);
    }
    let keep: Vec<usize> = (0..sampled_end).collect();
    let inner = m.select_rows(&keep)?;
    let sol = swc(&inner, sub_a, sub_b, r, r_prime, prec, None)?;
    // extend the inner assignment: X rows take the nearer string
    let mut labels: Vec<Label> = sol.assignment.labels().to_vec();
    for row in m.rows().iter().skip(sampled_end) {
        let da = row.dist_to(&sol.sigma);
        let db = row.dist_to(&sol.sigma_prime);
        labels.push(if da <= db { Label::A } else { Label::B });
    }
    SolutionPair::checked(m, sol.sigma, sol.sigma_prime, Assignment::new(labels))
}

/// True iff rows are sorted by nondecreasing binary-part length.
pub fn is_standard_ordered(m: &FragmentMatrix) -> bool {
    m.rows().windows(2).all(|w| w[0].len() <= w[1].len())
}

/// Stable permutation sorting rows into standard ordering; `perm[k]` is the
/// original index of sorted row `k`.
pub fn standard_order_permutation(m: &FragmentMatrix) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..m.n()).collect();
    perm.sort_by_key(|&i| (m.rows()[i].len(), i));
    perm
}

/// Re-labels a solution computed on permuted rows back to original row order.
pub fn unpermute_solution(
    m: &FragmentMatrix,
    sol: SolutionPair,
    perm: &[usize],
) -> Result<SolutionPair, Error> {
    let mut labels = vec![Label::A; perm.len()];
    for (sorted_idx, &orig) in perm.iter().enumerate() {
        labels[orig] = sol.assignment.label(sorted_idx);
    }
    SolutionPair::checked(m, sol.sigma, sol.sigma_prime, Assignment::new(labels))
}

/// The `r` values tried by solvers that guess `|tau(M)|`: every value when
/// `n <= 64`, otherwise a geometric grid plus the endpoints.
pub fn r_grid(n: usize, prec: &Precision) -> Vec<usize> {
    if n <= 64 {
        return (0..=n).collect();
    }
    let mut out = vec![0, n];
    let (en, ed) = (prec.eps_num as u128, prec.eps_den as u128);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    loop {
        let r = num.div_ceil(den) as usize;
        if r >= n {
            break;
        }
        out.push(r);
        out.push(n - r);
        num *= ed + en;
        den *= ed;
        if den > u128::MAX / (ed + en) {
            break;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Exact delegate for small `min(r, n - r)`: the fixed-count oracle run with
/// a budget wide enough for solver-internal use. Returns `None` when even
/// that is infeasible.
pub(crate) fn exact_fixed_small(m: &FragmentMatrix, r: usize) -> Option<SolutionPair> {
    let n = m.n();
    if n >= 64 {
        return None;
    }
    let k = r.min(n - r) as u128;
    let mut combos: u128 = 1;
    for i in 0..k {
        combos = combos.saturating_mul(n as u128 - i) / (i + 1);
    }
    if combos > 200_000 {
        return None;
    }
    let budget = OracleBudget {
        max_rows_for_bipartition: 63,
        max_cols_for_strings: usize::MAX,
    };
    exact_fixed_count(m, r, &budget).ok()
}

/// Trisection guesses when the reference assignment is unknown: quotas are
/// spread over the row count, with a few boundary perturbations.
fn trisection_guesses(n: usize, r: usize, side: Label, prec: &Precision) -> Vec<Trisection> {
    let mut out = Vec::new();
    let uq = prec.upper_quota(r).max(1);
    let lq = prec.lower_quota(r).max(1);
    let scale = |q: usize| (q * n).div_ceil(r.max(1)).min(n);
    let base_b = scale(uq).clamp(1, n - 1);
    let base_c = (base_b + scale(lq)).clamp(base_b + 1, n);
    for db in [0i64, -1, 1] {
        for dc in [0i64, 1, -1] {
            let b = (base_b as i64 + db).clamp(1, n as i64 - 1) as usize;
            let c = (base_c as i64 + dc).clamp(b as i64 + 1, n as i64) as usize;
            let tri = Trisection {
                u: 0..b,
                l: b..c,
                x: c..n,
                side,
                u_quota: uq,
                l_quota: lq,
            };
            if !out.contains(&tri) {
                out.push(tri);
            }
        }
    }
    out
}

/// Top-level solver realizing the core algorithm on an SWC-instance: loops
/// over `r`, delegates small sides to the exact fixed-count solver, and
/// otherwise searches guessed trisections with sampled selections.
pub fn solve_swc(m: &FragmentMatrix, prec: &Precision) -> Result<SolutionPair, Error> {
    prec.check()?;
    if !m.rows().iter().all(|row| row.crosses(1)) {
        return Err(Error::Precondition(
            "not an SWC-instance: column 1 has wildcards".into(),
        ));
    }
    let perm = standard_order_permutation(m);
    let sorted = m.select_rows(&perm)?;
    let n = sorted.n();
    let mut best: Option<SolutionPair> = None;
    for r in r_grid(n, prec) {
        let r_prime = n - r;
        if r.min(r_prime) <= prec.small_case {
            if let Some(sol) = exact_fixed_small(&sorted, r) {
                keep_best(&mut best, sol);
            }
            continue;
        }
        let guesses_a = trisection_guesses(n, r, Label::A, prec);
        let guesses_b = trisection_guesses(n, r_prime, Label::B, prec);
        let pairs = guesses_a.len() * guesses_b.len();
        let mut local = prec.clone();
        local.selection_trials = (prec.selection_trials / pairs.max(1)).max(8);
        for tri_a in &guesses_a {
            let sub_a = subdivide_unguided(tri_a, prec);
            for tri_b in &guesses_b {
                let sub_b = subdivide_unguided(tri_b, prec);
                local.seed = prec.seed ^ tag_for(0x414c, tri_a.l.start as u64, tri_b.l.start as u64);
                if let Ok(sol) = swc(&sorted, &sub_a, &sub_b, r, r_prime, &local, None) {
                    keep_best(&mut best, sol);
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.cost == 0) {
            break;
        }
    }
    let sol = best.ok_or_else(|| Error::Precondition("no candidate solution found".into()))?;
    unpermute_solution(m, sol, &perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{bits_from_str, matrix_from_strs};
    use crate::oracle::exact_bipartition;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn trisection_counts() {
        // 8 reference rows, eps = 1/2: U holds 4, L holds 2, remainder in X
        let m = matrix_from_strs(&["0"; 8]);
        let a = Assignment::uniform(8, Label::A);
        let t = build_trisection(&m, &a, Label::A, &prec()).unwrap();
        assert_eq!(t.u_quota, 4);
        assert_eq!(t.l_quota, 2);
        assert_eq!(t.u, 0..4);
        assert_eq!(t.l, 4..6);
        assert_eq!(t.x, 6..8);

        // n = 4 all on side A: U holds 2, L holds 1, X holds 1
        let m = matrix_from_strs(&["0"; 4]);
        let a = Assignment::uniform(4, Label::A);
        let t = build_trisection(&m, &a, Label::A, &prec()).unwrap();
        assert_eq!((t.u_quota, t.l_quota), (2, 1));
        assert_eq!(t.x, 3..4);
    }

    #[test]
    fn trisection_interleaved_reference() {
        // A rows at even indices: X begins at the first A row after L's quota
        let m = matrix_from_strs(&["0"; 12]);
        let labels = (0..12)
            .map(|i| if i % 2 == 0 { Label::A } else { Label::B })
            .collect();
        let a = Assignment::new(labels);
        let t = build_trisection(&m, &a, Label::A, &prec()).unwrap();
        // 6 reference rows: uq = 3, lq = 2; refs at 0,2,4,6,8,10
        assert_eq!(t.u, 0..6);
        assert_eq!(t.l, 6..10);
        assert_eq!(t.x, 10..12);
        assert_eq!(a.label(t.l.start), Label::A);
        assert_eq!(a.label(t.x.start), Label::A);
    }

    #[test]
    fn trisection_too_small() {
        let m = matrix_from_strs(&["0", "1"]);
        let a = Assignment::new(vec![Label::A, Label::B]);
        assert!(matches!(
            build_trisection(&m, &a, Label::A, &prec()),
            Err(Error::TrisectionTooSmall { side_rows: 1 })
        ));
    }

    #[test]
    fn weighted_majority_examples() {
        // U entries [1,0,-] contribute 0; L entries [0,0] give -2; vote 0
        let m = matrix_from_strs(&["1", "0", "-0", "0", "0"]);
        // row 1 has entry '1' at col 1... build explicit: rows 0..2 are U picks,
        // rows 3..4 L picks; row 2 starts at column 2 so col 1 reads wildcard.
        assert!(!weighted_majority(&m, 1, &[0, 1, 2], &[3, 4], &prec()));
        // empty selections: balance 0, tie yields 1
        assert!(weighted_majority(&m, 1, &[], &[], &prec()));
        // U = [1], L = [0]: 2 - 1 = 1, vote 1
        assert!(weighted_majority(&m, 1, &[0], &[3], &prec()));
    }

    #[test]
    fn generalized_majority_examples() {
        let m = matrix_from_strs(&["1", "1", "0", "1", "1", "1", "-"]);
        // one chunk, weight 4, entries [1,1]: rho = 8 >= 0
        assert!(generalized_majority(&m, 1, &[(4, &[0, 1])]));
        // chunks weighted 9 and 1, entries [0] and [1,1,1]: rho = -9 + 3 < 0
        assert!(!generalized_majority(&m, 1, &[(9, &[2]), (1, &[3, 4, 5])]));
        // all wildcard: rho = 0, tie yields 1
        assert!(generalized_majority(&m, 1, &[(5, &[6, 6])]));
    }

    #[test]
    fn generalized_equal_weights_matches_unweighted() {
        let m = matrix_from_strs(&["10", "01", "11", "00", "1-"]);
        for col in 1..=2 {
            let rows = [0usize, 1, 2, 3, 4];
            let balanced = generalized_majority(&m, col, &[(3, &rows[..2]), (3, &rows[2..])]);
            let s: i64 = rows.iter().map(|&i| remap(&m, i, col)).sum();
            assert_eq!(balanced, s >= 0);
        }
    }

    fn noise_free_instance() -> (FragmentMatrix, Assignment) {
        let mut rows: Vec<&str> = Vec::new();
        for _ in 0..6 {
            rows.push("000000");
        }
        for _ in 0..6 {
            rows.push("111111");
        }
        let labels = (0..12)
            .map(|i| if i < 6 { Label::A } else { Label::B })
            .collect();
        (matrix_from_strs(&rows), Assignment::new(labels))
    }

    #[test]
    fn swc_recovers_noise_free() {
        let (m, truth) = noise_free_instance();
        let p = prec();
        let tri_a = build_trisection(&m, &truth, Label::A, &p).unwrap();
        let tri_b = build_trisection(&m, &truth, Label::B, &p).unwrap();
        let sub_a = subdivide(&tri_a, &truth, &p);
        let sub_b = subdivide(&tri_b, &truth, &p);
        let sol = swc(&m, &sub_a, &sub_b, 6, 6, &p, None).unwrap();
        assert_eq!(sol.cost, 0);
        assert_eq!(sol.sigma, bits_from_str("000000"));
        assert_eq!(sol.sigma_prime, bits_from_str("111111"));
    }

    #[test]
    fn swc_rejects_overlapping_fixed_selections() {
        let (m, truth) = noise_free_instance();
        let p = prec();
        let tri_a = build_trisection(&m, &truth, Label::A, &p).unwrap();
        let tri_b = build_trisection(&m, &truth, Label::B, &p).unwrap();
        let sub_a = subdivide(&tri_a, &truth, &p);
        let sub_b = subdivide(&tri_b, &truth, &p);
        let sel = draw_selection_from_pool(
            &mut stream(1, 1),
            &sub_a,
            None,
            p.rows_per_chunk,
        )
        .unwrap();
        // same selection on both sides shares every row
        let err = swc(&m, &sub_a, &sub_b, 6, 6, &p, Some((&sel, &sel)));
        assert!(matches!(err, Err(Error::SelectionOverlap { .. }) | Err(Error::SelectionOutOfChunk { .. })));
    }

    #[test]
    fn swc_small_case_is_refused() {
        let (m, _) = noise_free_instance();
        let p = prec();
        let tri = Trisection {
            u: 0..6,
            l: 6..9,
            x: 9..12,
            side: Label::A,
            u_quota: 6,
            l_quota: 3,
        };
        let sub = subdivide_unguided(&tri, &p);
        let err = swc(&m, &sub, &sub, 10, 2, &p, None);
        assert!(matches!(err, Err(Error::SmallCase { .. })));
    }

    #[test]
    fn margin_assignment_is_optimal_for_fixed_count() {
        // among assignments with exactly r A-labels none beats the margin rule
        let m = matrix_from_strs(&["010", "011", "101", "100", "111", "001"]);
        let sigma = bits_from_str("010");
        let sigma_prime = bits_from_str("101");
        for r in 0..=m.n() {
            let a = assign_by_margin(&m, &sigma, &sigma_prime, r);
            let base = cost_fixed(&m, &sigma, &sigma_prime, &a).unwrap();
            for mask in 0u32..(1 << m.n()) {
                if mask.count_ones() as usize != r {
                    continue;
                }
                let labels = (0..m.n())
                    .map(|i| if mask >> i & 1 == 1 { Label::A } else { Label::B })
                    .collect();
                let other = cost_fixed(&m, &sigma, &sigma_prime, &Assignment::new(labels)).unwrap();
                assert!(base <= other);
            }
        }
    }

    #[test]
    fn solve_swc_deterministic_and_near_oracle() {
        use crate::gen::{generate, Family, GenSpec};
        let spec = GenSpec {
            n: 12,
            m: 8,
            flip_rate_num: 1,
            flip_rate_den: 10,
            family: Family::Swc,
            balance_num: 1,
            balance_den: 2,
            seed: 42,
        };
        let (m, _) = generate(&spec).unwrap();
        let p = prec();
        let a = solve_swc(&m, &p).unwrap();
        let b = solve_swc(&m, &p).unwrap();
        assert_eq!(a, b);
        let opt = exact_bipartition(&m, &OracleBudget::default()).unwrap().cost;
        assert!(a.cost >= opt);
        assert!(a.cost as f64 <= 1.5 * opt.max(1) as f64 + 1e-9);
    }

    #[test]
    fn reassignment_handles_x_rows() {
        let (m, truth) = noise_free_instance();
        let p = prec();
        let tri_a = build_trisection(&m, &truth, Label::A, &p).unwrap();
        let tri_b = build_trisection(&m, &truth, Label::B, &p).unwrap();
        let sub_a = subdivide(&tri_a, &truth, &p);
        let sub_b = subdivide(&tri_b, &truth, &p);
        // quotas for the sampled region
        let end = tri_a.l.end.max(tri_b.l.end);
        let r_p = (0..end).filter(|&i| truth.label(i) == Label::A).count();
        let sol =
            swc_with_reassignment(&m, &tri_a, &tri_b, &sub_a, &sub_b, r_p, end - r_p, &p).unwrap();
        assert_eq!(sol.cost, 0);
    }
}
