//! The Littlewood–Richardson rule: LR fillings of skew shapes, the
//! coefficients they count, and Schubert-class product expansions.
//!
//! A filling is read right to left within each row, rows top to bottom.
//! It is an LR filling when it is semistandard and that reading word is a
//! ballot sequence.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{overlaps, partitions_between, Frame, Partition};

/// `true` iff every prefix has no more `i`s than `(i−1)`s, for all `i ≥ 2`.
pub fn is_ballot(word: &[usize]) -> bool {
    ballot_violation(word).is_none()
}

/// Index of the first letter that breaks the ballot condition.
fn ballot_violation(word: &[usize]) -> Option<usize> {
    let mut counts: Vec<usize> = Vec::new();
    for (pos, &v) in word.iter().enumerate() {
        if v == 0 {
            return Some(pos);
        }
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v >= 2 && counts[v - 1] > counts[v - 2] {
            return Some(pos);
        }
    }
    None
}

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    inner: Partition,
    outer: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { inner, outer })
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of skew boxes in 0-based row `row`.
    pub fn row_len(&self, row: usize) -> usize {
        self.outer.part(row) - self.inner.part(row)
    }

    /// `true` when 1-based `(row, col)` is a box of the skew shape.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row - 1) && col <= self.outer.part(row - 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// First failed condition of a filling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RowDecreases { row: usize, col: usize },
    ColumnNotStrict { row: usize, col: usize },
    NotBallot { position: usize },
    ContentNotPartition,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowDecreases { row, col } => {
                write!(f, "row {row} decreases at column {col}")
            }
            Violation::ColumnNotStrict { row, col } => {
                write!(f, "column {col} is not strictly increasing at row {row}")
            }
            Violation::NotBallot { position } => {
                write!(f, "reading word is not a ballot sequence at letter {}", position + 1)
            }
            Violation::ContentNotPartition => f.write_str("content is not a partition"),
        }
    }
}

/// A filling of a skew shape: `rows[i]` lists the entries of the skew boxes
/// of row `i + 1`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrFilling {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl LrFilling {
    /// Checks only that the entries cover exactly the skew boxes with
    /// positive integers; see [`LrFilling::validate`] for the LR conditions.
    pub fn from_rows(shape: SkewShape, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        let height = shape.outer.len();
        while rows.len() > height && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() != height {
            return Err(Error::MalformedFilling(format!(
                "{} rows given for a shape with {height} rows",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(Error::MalformedFilling(format!(
                    "row {} has {} entries but the shape has {} boxes there",
                    i + 1,
                    row.len(),
                    shape.row_len(i)
                )));
            }
            if row.contains(&0) {
                return Err(Error::MalformedFilling(format!("row {} has a zero entry", i + 1)));
            }
        }
        Ok(LrFilling { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 1-based `(row, col)`, if that box is in the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.has_cell(row, col) {
            return None;
        }
        Some(self.rows[row - 1][col - 1 - self.shape.inner.part(row - 1)])
    }

    /// Right to left within each row, rows top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// Multiplicity of each entry value: `content[i]` counts the `i + 1`s.
    pub fn content_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// The content as a partition, when it is one.
    pub fn content(&self) -> Option<Partition> {
        Partition::new(self.content_counts()).ok()
    }

    /// Semistandard, ballot reading word, partition content; the first
    /// failed condition is reported.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        for (i, row) in self.rows.iter().enumerate() {
            let r = i + 1;
            let start = self.shape.inner.part(i);
            for (j, &v) in row.iter().enumerate() {
                let c = start + j + 1;
                if j > 0 && row[j - 1] > v {
                    return Err(Violation::RowDecreases { row: r, col: c });
                }
                if let Some(above) = self.entry(r - 1, c).filter(|_| r > 1) {
                    if above >= v {
                        return Err(Violation::ColumnNotStrict { row: r, col: c });
                    }
                }
            }
        }
        if let Some(position) = ballot_violation(&self.reading_word()) {
            return Err(Violation::NotBallot { position });
        }
        if self.content().is_none() {
            return Err(Violation::ContentNotPartition);
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Grid rendering: `.` for inner boxes, entries elsewhere.
    pub fn to_grid(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = vec![".".to_string(); self.shape.inner.part(i)];
            cells.extend(row.iter().map(|v| v.to_string()));
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for LrFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

impl Serialize for LrFilling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("outer", &self.shape.outer)?;
        m.serialize_entry("inner", &self.shape.inner)?;
        m.serialize_entry("entries", &self.rows)?;
        m.end()
    }
}

/// Validates explicit rows against a shape: `Err` for malformed coverage,
/// `Ok(Err(violation))` for a well-formed filling that is not LR.
pub fn validate_filling(
    shape: &SkewShape,
    rows: Vec<Vec<usize>>,
) -> Result<std::result::Result<(), Violation>> {
    let filling = LrFilling::from_rows(shape.clone(), rows)?;
    Ok(filling.validate())
}

#[derive(Clone, Copy, Debug)]
struct Slot {
    row: usize,
    above: Option<usize>,
    right: Option<usize>,
}

/// Backtracking stream of the LR fillings of a skew shape with a given
/// content, in reading order with smaller entries tried first.
#[derive(Debug)]
pub struct LrFillings {
    shape: SkewShape,
    content: Vec<usize>,
    slots: Vec<Slot>,
    values: Vec<usize>,
    counts: Vec<usize>,
    depth: usize,
    started: bool,
    done: bool,
}

impl LrFillings {
    pub fn new(shape: SkewShape, content: &Partition) -> Self {
        let done = shape.size() != content.size();
        let mut slots = Vec::with_capacity(shape.size());
        // Index of each box in reading order, per row, left to right.
        let mut index: Vec<Vec<usize>> = Vec::with_capacity(shape.outer.len());
        for i in 0..shape.outer.len() {
            let len = shape.row_len(i);
            let base = slots.len();
            let row_index: Vec<usize> = (0..len).map(|j| base + (len - 1 - j)).collect();
            for j in (0..len).rev() {
                let col = shape.inner.part(i) + j + 1;
                let above = (i > 0 && shape.has_cell(i, col))
                    .then(|| index[i - 1][col - 1 - shape.inner.part(i - 1)]);
                let right = (j + 1 < len).then(|| row_index[j + 1]);
                slots.push(Slot { row: i, above, right });
            }
            index.push(row_index);
        }
        let n = slots.len();
        LrFillings {
            shape,
            content: content.parts().to_vec(),
            slots,
            values: vec![0; n],
            counts: vec![0; content.len()],
            depth: 0,
            started: false,
            done,
        }
    }

    fn bounds(&self, depth: usize) -> (usize, usize) {
        let slot = self.slots[depth];
        let lo = slot.above.map_or(1, |a| self.values[a] + 1);
        let hi = slot.right.map_or(self.content.len(), |r| self.values[r]);
        (lo, hi)
    }

    fn admissible(&self, v: usize) -> bool {
        self.counts[v - 1] < self.content[v - 1] && (v == 1 || self.counts[v - 1] < self.counts[v - 2])
    }

    fn build(&self) -> LrFilling {
        let mut rows: Vec<Vec<usize>> = (0..self.shape.outer.len())
            .map(|i| Vec::with_capacity(self.shape.row_len(i)))
            .collect();
        for (slot, &v) in self.slots.iter().zip(&self.values) {
            rows[slot.row].push(v);
        }
        for row in &mut rows {
            row.reverse();
        }
        LrFilling {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for LrFillings {
    type Item = LrFilling;

    fn next(&mut self) -> Option<LrFilling> {
        if self.done {
            return None;
        }
        let n = self.slots.len();
        let mut candidate;
        if !self.started {
            self.started = true;
            if n == 0 {
                self.done = true;
                return Some(self.build());
            }
            self.depth = 0;
            candidate = self.bounds(0).0;
        } else {
            if n == 0 {
                self.done = true;
                return None;
            }
            self.depth = n - 1;
            let v = self.values[self.depth];
            self.counts[v - 1] -= 1;
            candidate = v + 1;
        }
        loop {
            let (_, hi) = self.bounds(self.depth);
            let found = (candidate..=hi).find(|&v| self.admissible(v));
            match found {
                Some(v) => {
                    self.values[self.depth] = v;
                    self.counts[v - 1] += 1;
                    self.depth += 1;
                    if self.depth == n {
                        return Some(self.build());
                    }
                    candidate = self.bounds(self.depth).0;
                }
                None => {
                    if self.depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                    let v = self.values[self.depth];
                    self.counts[v - 1] -= 1;
                    candidate = v + 1;
                }
            }
        }
    }
}

/// Streams the LR fillings of `shape` with content `content`.
pub fn enumerate_lr_fillings(shape: SkewShape, content: &Partition) -> LrFillings {
    LrFillings::new(shape, content)
}

/// The coefficient `c_{λ,μ}^ν`. With `cap`, counting stops once `cap`
/// fillings are found and `cap` is returned.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition, cap: Option<u64>) -> u64 {
    if lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    let shape = SkewShape {
        inner: lam.clone(),
        outer: nu.clone(),
    };
    let limit = cap.unwrap_or(u64::MAX);
    let mut count = 0u64;
    for _ in LrFillings::new(shape, mu) {
        count = count.checked_add(1).expect("LR coefficient overflow");
        if count >= limit {
            break;
        }
    }
    count
}

/// The expansion of `σ_λ · σ_μ` in the cohomology of the Grassmannian
/// whose Schubert classes are indexed by `frame`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    frame: Frame,
    terms: BTreeMap<Partition, u64>,
}

impl Expansion {
    pub fn zero(frame: Frame) -> Self {
        Expansion {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c <= 1)
    }

    fn insert(&mut self, nu: Partition, coeff: u64) {
        if coeff > 0 {
            self.terms.insert(nu, coeff);
        }
    }

    /// One `coefficient * partition` line per term, keys in lexicographic order.
    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(|(nu, c)| format!("{c} * {nu}\n"))
            .collect()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<Partition, u64>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (nu, coeff) in self.0 {
                    seq.serialize_element(&serde_json::json!({ "nu": nu, "coeff": coeff }))?;
                }
                seq.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("frame", &self.frame)?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.end()
    }
}

/// Candidate `ν ⊆ frame` of the right size containing both factors.
pub(crate) fn candidates(lam: &Partition, mu: &Partition, frame: Frame) -> Vec<Partition> {
    partitions_between(&lam.union(mu), frame, Some(lam.size() + mu.size()))
}

/// `σ_λ · σ_μ = Σ_{ν ⊆ frame} c_{λ,μ}^ν σ_ν`. Overlapping shapes give the
/// zero expansion.
pub fn expand_product(lam: &Partition, mu: &Partition, frame: Frame) -> Result<Expansion> {
    lam.check_fits(frame)?;
    mu.check_fits(frame)?;
    let mut exp = Expansion::zero(frame);
    if overlaps(lam, mu, frame) {
        return Ok(exp);
    }
    for nu in candidates(lam, mu, frame) {
        let c = lr_coefficient(lam, mu, &nu, None);
        exp.insert(nu, c);
    }
    Ok(exp)
}

/// Lexicographically least `ν ⊆ frame` with `c_{λ,μ}^ν ≥ 2`.
pub fn first_multiple_term(lam: &Partition, mu: &Partition, frame: Frame) -> Result<Option<Partition>> {
    lam.check_fits(frame)?;
    mu.check_fits(frame)?;
    if overlaps(lam, mu, frame) {
        return Ok(None);
    }
    Ok(candidates(lam, mu, frame)
        .into_iter()
        .find(|nu| lr_coefficient(lam, mu, nu, Some(2)) >= 2))
}

/// Brute-force multiplicity test: some `ν ⊆ frame` has coefficient ≥ 2.
pub fn has_multiplicity_bruteforce(lam: &Partition, mu: &Partition, frame: Frame) -> Result<bool> {
    Ok(first_multiple_term(lam, mu, frame)?.is_some())
}
