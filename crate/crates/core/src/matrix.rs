//! Instance and solution data model: symbols, gapless rows, distance and cost
//! evaluation, assignments, and per-column majority completion.
//!
//! Columns are 1-based everywhere in the public API, matching the usual
//! presentation of fragment matrices. A row stores only its contiguous binary
//! payload together with its start column; everything outside that span reads
//! as a wildcard.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// One matrix entry: `0`, `1` or the wildcard `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Wildcard,
}

impl Symbol {
    /// Binary value of the symbol, if it has one.
    pub fn bit(self) -> Option<bool> {
        match self {
            Symbol::Zero => Some(false),
            Symbol::One => Some(true),
            Symbol::Wildcard => None,
        }
    }

    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Wildcard => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Symbol::Zero),
            '1' => Some(Symbol::One),
            '-' => Some(Symbol::Wildcard),
            _ => None,
        }
    }
}

/// Distance of two symbols: 1 iff one is `0` and the other `1`.
pub fn dist_symbols(a: Symbol, b: Symbol) -> u64 {
    match (a, b) {
        (Symbol::Zero, Symbol::One) | (Symbol::One, Symbol::Zero) => 1,
        _ => 0,
    }
}

/// Distance of two equal-length symbol strings: the sum of symbol distances.
pub fn dist_strings(s: &[Symbol], t: &[Symbol]) -> Result<u64, Error> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch {
            expected: s.len(),
            got: t.len(),
        });
    }
    Ok(s.iter().zip(t).map(|(&a, &b)| dist_symbols(a, b)).sum())
}

/// A gapless row: a non-empty run of binary values starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Row {
    start: usize,
    bits: Vec<bool>,
}

impl Row {
    /// Builds a row; `start` is 1-based and `bits` must be non-empty.
    pub fn new(start: usize, bits: Vec<bool>) -> Result<Self, Error> {
        if start == 0 {
            return Err(Error::InvalidInstance(String::from("row start must be >= 1")));
        }
        if bits.is_empty() {
            return Err(Error::InvalidInstance(String::from(
                "row has no binary entries",
            )));
        }
        Ok(Row { start, bits })
    }

    /// First column of the binary part (1-based).
    pub fn start(&self) -> usize {
        self.start
    }

    /// Last column of the binary part (1-based).
    pub fn end(&self) -> usize {
        self.start + self.bits.len() - 1
    }

    /// Length of the binary part.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // bits is non-empty by construction
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// True iff the row has a binary entry at `col`.
    pub fn crosses(&self, col: usize) -> bool {
        col >= self.start && col <= self.end()
    }

    /// Binary entry at `col`, or `None` outside the binary part.
    pub fn bit_at(&self, col: usize) -> Option<bool> {
        if self.crosses(col) {
            Some(self.bits[col - self.start])
        } else {
            None
        }
    }

    /// Entry at `col` as a symbol (wildcard outside the binary part).
    pub fn symbol_at(&self, col: usize) -> Symbol {
        match self.bit_at(col) {
            Some(b) => Symbol::from_bit(b),
            None => Symbol::Wildcard,
        }
    }

    /// Mismatches between this row and a full-width binary string.
    pub fn dist_to(&self, sigma: &[bool]) -> u64 {
        self.bits
            .iter()
            .zip(&sigma[self.start - 1..self.start - 1 + self.bits.len()])
            .filter(|(a, b)| a != b)
            .count() as u64
    }

    /// The row expanded to a width-`m` symbol string.
    pub fn expand(&self, m: usize) -> Vec<Symbol> {
        let mut out = vec![Symbol::Wildcard; m];
        for (i, &b) in self.bits.iter().enumerate() {
            out[self.start - 1 + i] = Symbol::from_bit(b);
        }
        out
    }
}

/// A gapless MEC instance: `n` rows over columns `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentMatrix {
    m: usize,
    rows: Vec<Row>,
}

impl FragmentMatrix {
    pub fn new(m: usize, rows: Vec<Row>) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidInstance(String::from("m must be >= 1")));
        }
        if rows.is_empty() {
            return Err(Error::InvalidInstance(String::from("n must be >= 1")));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.end() > m {
                return Err(Error::InvalidInstance(alloc::format!(
                    "row {} ends at column {} beyond m = {}",
                    i + 1,
                    row.end(),
                    m
                )));
            }
        }
        Ok(FragmentMatrix { m, rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Row {
        &self.rows[i]
    }

    /// Entry at (`row`, `col`), both 0-based row index and 1-based column.
    pub fn symbol(&self, row: usize, col: usize) -> Symbol {
        self.rows[row].symbol_at(col)
    }

    /// A new matrix containing the given rows (0-based indices), same width.
    pub fn select_rows(&self, idx: &[usize]) -> Result<FragmentMatrix, Error> {
        let rows = idx.iter().map(|&i| self.rows[i].clone()).collect();
        FragmentMatrix::new(self.m, rows)
    }

    /// The instance with both row order and column order reversed.
    ///
    /// Row `i` becomes row `n - 1 - i`; a binary span `[s, e]` becomes
    /// `[m + 1 - e, m + 1 - s]` with its bits reversed.
    pub fn reversed(&self) -> FragmentMatrix {
        let rows = self
            .rows
            .iter()
            .rev()
            .map(|r| {
                let mut bits = r.bits.clone();
                bits.reverse();
                Row {
                    start: self.m + 1 - r.end(),
                    bits,
                }
            })
            .collect();
        FragmentMatrix {
            m: self.m,
            rows,
        }
    }

    /// Restriction to columns `first..=last`, dropping rows that have no
    /// binary entry there. Returns the restricted matrix and, for each kept
    /// row, its index in `self`.
    pub fn restrict_columns(
        &self,
        first: usize,
        last: usize,
    ) -> Option<(FragmentMatrix, Vec<usize>)> {
        let width = last.checked_sub(first)? + 1;
        let mut rows = Vec::new();
        let mut kept = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let s = r.start().max(first);
            let e = r.end().min(last);
            if s > e {
                continue;
            }
            let bits = r.bits[s - r.start()..=e - r.start()].to_vec();
            rows.push(Row {
                start: s - first + 1,
                bits,
            });
            kept.push(i);
        }
        if rows.is_empty() {
            return None;
        }
        Some((FragmentMatrix { m: width, rows }, kept))
    }
}

/// Which solution string a row is assigned to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A,
    B,
}

impl Label {
    pub fn flipped(self) -> Label {
        match self {
            Label::A => Label::B,
            Label::B => Label::A,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Label::A => 'A',
            Label::B => 'B',
        }
    }
}

/// A per-row assignment to the two solution strings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    labels: Vec<Label>,
}

impl Assignment {
    pub fn new(labels: Vec<Label>) -> Self {
        Assignment { labels }
    }

    /// All `n` rows assigned to one side.
    pub fn uniform(n: usize, label: Label) -> Self {
        Assignment {
            labels: vec![label; n],
        }
    }

    /// Assignment from the set of A-row indices (0-based).
    pub fn from_a_set(n: usize, a_rows: &[usize]) -> Self {
        let mut labels = vec![Label::B; n];
        for &i in a_rows {
            labels[i] = Label::A;
        }
        Assignment { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, row: usize) -> Label {
        self.labels[row]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn count(&self, label: Label) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }

    /// Row indices (0-based) carrying `label`.
    pub fn rows_with(&self, label: Label) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn swapped(&self) -> Assignment {
        Assignment {
            labels: self.labels.iter().map(|l| l.flipped()).collect(),
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// A complete solution: two binary strings, a row assignment and the
/// recomputed error count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionPair {
    pub sigma: Vec<bool>,
    pub sigma_prime: Vec<bool>,
    pub assignment: Assignment,
    pub cost: u64,
}

impl SolutionPair {
    /// Builds a solution, recomputing `cost` from its parts.
    pub fn checked(
        m: &FragmentMatrix,
        sigma: Vec<bool>,
        sigma_prime: Vec<bool>,
        assignment: Assignment,
    ) -> Result<Self, Error> {
        let cost = cost_fixed(m, &sigma, &sigma_prime, &assignment)?;
        Ok(SolutionPair {
            sigma,
            sigma_prime,
            assignment,
            cost,
        })
    }

    /// Builds a solution using the default (row-wise best) assignment.
    pub fn with_default_assignment(
        m: &FragmentMatrix,
        sigma: Vec<bool>,
        sigma_prime: Vec<bool>,
    ) -> Result<Self, Error> {
        let (cost, assignment) = cost(m, &sigma, &sigma_prime)?;
        Ok(SolutionPair {
            sigma,
            sigma_prime,
            assignment,
            cost,
        })
    }

    /// Deterministic comparison key: cost, then lexicographic strings and labels.
    pub fn order_key(&self) -> (u64, &[bool], &[bool], &[Label]) {
        (
            self.cost,
            &self.sigma,
            &self.sigma_prime,
            self.assignment.labels(),
        )
    }

    /// The same solution with the two strings and all labels swapped.
    pub fn swapped(&self) -> SolutionPair {
        SolutionPair {
            sigma: self.sigma_prime.clone(),
            sigma_prime: self.sigma.clone(),
            assignment: self.assignment.swapped(),
            cost: self.cost,
        }
    }
}

fn check_string_len(m: &FragmentMatrix, s: &[bool]) -> Result<(), Error> {
    if s.len() != m.m() {
        return Err(Error::LengthMismatch {
            expected: m.m(),
            got: s.len(),
        });
    }
    Ok(())
}

/// Default-assignment cost of a string pair: each row goes to the nearer
/// string, ties to `sigma`.
pub fn cost(
    m: &FragmentMatrix,
    sigma: &[bool],
    sigma_prime: &[bool],
) -> Result<(u64, Assignment), Error> {
    check_string_len(m, sigma)?;
    check_string_len(m, sigma_prime)?;
    let mut total = 0u64;
    let mut labels = Vec::with_capacity(m.n());
    for row in m.rows() {
        let da = row.dist_to(sigma);
        let db = row.dist_to(sigma_prime);
        if da <= db {
            total += da;
            labels.push(Label::A);
        } else {
            total += db;
            labels.push(Label::B);
        }
    }
    Ok((total, Assignment::new(labels)))
}

/// Cost of a string pair under a caller-supplied assignment.
pub fn cost_fixed(
    m: &FragmentMatrix,
    sigma: &[bool],
    sigma_prime: &[bool],
    assignment: &Assignment,
) -> Result<u64, Error> {
    check_string_len(m, sigma)?;
    check_string_len(m, sigma_prime)?;
    if assignment.len() != m.n() {
        return Err(Error::BadAssignment {
            rows: m.n(),
            labels: assignment.len(),
        });
    }
    let mut total = 0u64;
    for (row, &label) in m.rows().iter().zip(assignment.labels()) {
        total += match label {
            Label::A => row.dist_to(sigma),
            Label::B => row.dist_to(sigma_prime),
        };
    }
    Ok(total)
}

/// Optimal strings for a fixed assignment: the column-wise majority per side.
///
/// Ties and columns with no assigned binary entries yield `1`.
pub fn majority_complete(
    m: &FragmentMatrix,
    assignment: &Assignment,
) -> Result<SolutionPair, Error> {
    if assignment.len() != m.n() {
        return Err(Error::BadAssignment {
            rows: m.n(),
            labels: assignment.len(),
        });
    }
    let mut sigma = vec![false; m.m()];
    let mut sigma_prime = vec![false; m.m()];
    for col in 1..=m.m() {
        let mut balance = [0i64; 2]; // ones minus zeros, per side
        for (row, &label) in m.rows().iter().zip(assignment.labels()) {
            if let Some(bit) = row.bit_at(col) {
                let side = (label == Label::B) as usize;
                balance[side] += if bit { 1 } else { -1 };
            }
        }
        sigma[col - 1] = balance[0] >= 0;
        sigma_prime[col - 1] = balance[1] >= 0;
    }
    SolutionPair::checked(m, sigma, sigma_prime, assignment.clone())
}

/// A parsed but not yet validated instance: every row as a full-width symbol
/// string. This is what [`validate`] inspects, since a [`FragmentMatrix`]
/// cannot even represent a gap.
#[derive(Debug, Clone)]
pub struct RawInstance {
    pub m: usize,
    pub rows: Vec<Vec<Symbol>>,
}

/// A structural problem found in one raw row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowIssue {
    /// 1-based row index with no binary entry.
    Empty { row: usize },
    /// Wildcard at `col` strictly inside the binary part.
    Gap { row: usize, col: usize },
    /// Row width differs from the declared column count.
    Width { row: usize, got: usize },
}

impl fmt::Display for RowIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowIssue::Empty { row } => write!(f, "row {row}: no binary entries"),
            RowIssue::Gap { row, col } => {
                write!(f, "row {row}: wildcard at column {col} inside the binary part")
            }
            RowIssue::Width { row, got } => {
                write!(f, "row {row}: {got} symbols, expected the declared width")
            }
        }
    }
}

/// Structural classification of a valid instance. The flags are independent;
/// an instance matching none of them is a general gapless instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceClass {
    /// No wildcard anywhere.
    pub binary: bool,
    /// Every row crosses column 1.
    pub swc: bool,
    /// No row's column set is strictly contained in another's.
    pub subinterval_free: bool,
}

impl fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tags: Vec<&str> = Vec::new();
        if self.binary {
            tags.push("binary");
        }
        if self.swc {
            tags.push("swc");
        }
        if self.subinterval_free {
            tags.push("subinterval-free");
        }
        if tags.is_empty() {
            tags.push("general");
        }
        write!(f, "{}", tags.join("+"))
    }
}

/// Validation outcome: structural issues plus, when clean, the parsed matrix
/// and its classification.
#[derive(Debug, Clone)]
pub struct Diagnostics {
    pub issues: Vec<RowIssue>,
    pub class: Option<InstanceClass>,
}

impl Diagnostics {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks gaplessness and non-emptiness of every raw row and classifies the
/// instance. Issues are collected, not fatal.
pub fn validate(raw: &RawInstance) -> Diagnostics {
    let mut issues = Vec::new();
    let mut parsed: Vec<Option<Row>> = Vec::with_capacity(raw.rows.len());
    for (i, syms) in raw.rows.iter().enumerate() {
        let row_no = i + 1;
        if syms.len() != raw.m {
            issues.push(RowIssue::Width {
                row: row_no,
                got: syms.len(),
            });
            parsed.push(None);
            continue;
        }
        let first = syms.iter().position(|s| s.bit().is_some());
        let last = syms.iter().rposition(|s| s.bit().is_some());
        match (first, last) {
            (Some(first), Some(last)) => {
                let mut gap = false;
                for (off, s) in syms[first..=last].iter().enumerate() {
                    if s.bit().is_none() {
                        issues.push(RowIssue::Gap {
                            row: row_no,
                            col: first + off + 1,
                        });
                        gap = true;
                    }
                }
                if gap {
                    parsed.push(None);
                } else {
                    let bits = syms[first..=last].iter().map(|s| s.bit().unwrap()).collect();
                    parsed.push(Some(Row {
                        start: first + 1,
                        bits,
                    }));
                }
            }
            _ => {
                issues.push(RowIssue::Empty { row: row_no });
                parsed.push(None);
            }
        }
    }
    let class = if issues.is_empty() && !parsed.is_empty() && raw.m > 0 {
        let rows: Vec<Row> = parsed.into_iter().map(|r| r.unwrap()).collect();
        FragmentMatrix::new(raw.m, rows).ok().map(|m| classify(&m))
    } else {
        None
    };
    Diagnostics { issues, class }
}

/// Classification of an already-valid matrix.
pub fn classify(m: &FragmentMatrix) -> InstanceClass {
    let binary = m.rows().iter().all(|r| r.len() == m.m());
    let swc = m.rows().iter().all(|r| r.start() == 1);
    let mut subinterval_free = true;
    'outer: for (i, a) in m.rows().iter().enumerate() {
        for (j, b) in m.rows().iter().enumerate() {
            if i == j {
                continue;
            }
            // strict containment of a's column set in b's
            if b.start() <= a.start()
                && a.end() <= b.end()
                && (b.start() < a.start() || a.end() < b.end())
            {
                subinterval_free = false;
                break 'outer;
            }
        }
    }
    InstanceClass {
        binary,
        swc,
        subinterval_free,
    }
}

/// Convenience constructor used heavily in tests: `"0-1"`-style full-width
/// row strings.
pub fn matrix_from_strs(rows: &[&str]) -> FragmentMatrix {
    let m = rows[0].len();
    let parsed = rows
        .iter()
        .map(|s| {
            let syms: Vec<Symbol> = s.chars().map(|c| Symbol::from_char(c).unwrap()).collect();
            let first = syms.iter().position(|x| x.bit().is_some()).unwrap();
            let last = syms.iter().rposition(|x| x.bit().is_some()).unwrap();
            let bits = syms[first..=last].iter().map(|x| x.bit().unwrap()).collect();
            Row::new(first + 1, bits).unwrap()
        })
        .collect();
    FragmentMatrix::new(m, parsed).unwrap()
}

/// Parses `"0110"` into a binary string.
pub fn bits_from_str(s: &str) -> Vec<bool> {
    s.chars().map(|c| c == '1').collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms(s: &str) -> Vec<Symbol> {
        s.chars().map(|c| Symbol::from_char(c).unwrap()).collect()
    }

    #[test]
    fn symbol_distance() {
        assert_eq!(dist_symbols(Symbol::Zero, Symbol::One), 1);
        assert_eq!(dist_symbols(Symbol::Wildcard, Symbol::One), 0);
        assert_eq!(dist_symbols(Symbol::Zero, Symbol::Zero), 0);
    }

    #[test]
    fn string_distance() {
        assert_eq!(dist_strings(&syms("01-"), &syms("001")).unwrap(), 1);
        assert_eq!(dist_strings(&syms("000"), &syms("000")).unwrap(), 0);
        assert_eq!(dist_strings(&syms("01"), &syms("10")).unwrap(), 2);
        assert!(dist_strings(&syms("01"), &syms("0")).is_err());
    }

    #[test]
    fn default_assignment_cost() {
        let m = matrix_from_strs(&["00", "11"]);
        let (c, a) = cost(&m, &bits_from_str("00"), &bits_from_str("11")).unwrap();
        assert_eq!(c, 0);
        assert_eq!(a.labels(), &[Label::A, Label::B]);

        // tie goes to sigma
        let m = matrix_from_strs(&["00", "01", "11"]);
        let (c, a) = cost(&m, &bits_from_str("00"), &bits_from_str("11")).unwrap();
        assert_eq!(c, 1);
        assert_eq!(a.labels(), &[Label::A, Label::A, Label::B]);

        let m = matrix_from_strs(&["010", "010", "101", "100"]);
        let (c, a) = cost(&m, &bits_from_str("010"), &bits_from_str("101")).unwrap();
        assert_eq!(c, 1);
        assert_eq!(a.labels(), &[Label::A, Label::A, Label::B, Label::B]);
    }

    #[test]
    fn fixed_assignment_cost() {
        let m = matrix_from_strs(&["00", "00"]);
        let a = Assignment::new(vec![Label::A, Label::B]);
        assert_eq!(cost_fixed(&m, &bits_from_str("00"), &bits_from_str("00"), &a).unwrap(), 0);

        let m = matrix_from_strs(&["0", "1"]);
        let a = Assignment::new(vec![Label::B, Label::A]);
        assert_eq!(cost_fixed(&m, &bits_from_str("0"), &bits_from_str("1"), &a).unwrap(), 2);

        let m = matrix_from_strs(&["010", "101"]);
        let a = Assignment::new(vec![Label::A, Label::B]);
        assert_eq!(
            cost_fixed(&m, &bits_from_str("010"), &bits_from_str("101"), &a).unwrap(),
            0
        );
    }

    #[test]
    fn majority_completion() {
        let m = matrix_from_strs(&["00", "01", "11"]);
        let a = Assignment::new(vec![Label::A, Label::A, Label::B]);
        let sol = majority_complete(&m, &a).unwrap();
        // column 2 ties between 0 and 1 on the A side, tie yields 1
        assert_eq!(sol.sigma, bits_from_str("01"));
        assert_eq!(sol.sigma_prime, bits_from_str("11"));

        let m = matrix_from_strs(&["101"]);
        let sol = majority_complete(&m, &Assignment::uniform(1, Label::A)).unwrap();
        assert_eq!(sol.sigma, bits_from_str("101"));
        assert_eq!(sol.sigma_prime, bits_from_str("111"));

        let m = matrix_from_strs(&["0", "0", "1"]);
        let sol = majority_complete(&m, &Assignment::uniform(3, Label::A)).unwrap();
        assert_eq!(sol.sigma, bits_from_str("0"));
    }

    #[test]
    fn validate_reports_gaps() {
        let raw = RawInstance {
            m: 3,
            rows: vec![syms("0-1")],
        };
        let d = validate(&raw);
        assert_eq!(
            d.issues,
            vec![RowIssue::Gap { row: 1, col: 2 }]
        );
        assert!(d.class.is_none());
    }

    #[test]
    fn validate_classifies() {
        let raw = RawInstance {
            m: 3,
            rows: vec![syms("010"), syms("101"), syms("110")],
        };
        let d = validate(&raw);
        assert!(d.is_clean());
        let c = d.class.unwrap();
        assert!(c.binary && c.swc && c.subinterval_free);

        let raw = RawInstance {
            m: 2,
            rows: vec![syms("11"), syms("1-")],
        };
        let c = validate(&raw).class.unwrap();
        assert!(!c.subinterval_free);
    }

    #[test]
    fn validate_rejects_empty_rows() {
        let raw = RawInstance {
            m: 2,
            rows: vec![syms("--")],
        };
        let d = validate(&raw);
        assert_eq!(d.issues, vec![RowIssue::Empty { row: 1 }]);
    }

    #[test]
    fn reversal_is_involutive() {
        let m = matrix_from_strs(&["01--", "-10-", "--11"]);
        assert_eq!(m.reversed().reversed(), m);
        let r = m.reversed();
        assert_eq!(r.row(0).start(), 1);
        assert_eq!(r.row(0).bits(), bits_from_str("11").as_slice());
    }
}
