//! Partitions, the rectangle frames they live in, and the shape geometry
//! (lattice paths, corners, complements) the classifier is built on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition stored as its nonzero parts, weakly decreasing.
///
/// All frame-relative formulas treat the parts as zero-padded, so there is
/// exactly one representation of every Young diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// A rectangle with `rows` rows of length `width`.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![width; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Zero-padded part, 0-based.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part (0 for the empty partition).
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Zero-padded parts to exactly `n` entries. Panics if `n < len()`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.len(), "cannot pad {self} to {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `true` when `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Componentwise maximum of two diagrams (their union).
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition {
            parts: (0..n).map(|i| self.part(i).max(other.part(i))).collect(),
        }
    }

    pub fn fits(&self, frame: Frame) -> bool {
        self.len() <= frame.rows && self.first() <= frame.cols
    }

    /// `fits` as a `Result`, for `?` chains.
    pub fn check_fits(&self, frame: Frame) -> Result<()> {
        if self.fits(frame) {
            Ok(())
        } else {
            Err(Error::DoesNotFit {
                partition: self.clone(),
                frame,
            })
        }
    }

    pub fn distinct_part_sizes(&self) -> usize {
        let mut n = 0;
        let mut prev = None;
        for &p in &self.parts {
            if prev != Some(p) {
                n += 1;
                prev = Some(p);
            }
        }
        n
    }

    pub fn shape_class(&self) -> ShapeClass {
        match self.distinct_part_sizes() {
            0 => ShapeClass::Empty,
            1 => ShapeClass::Rectangle,
            2 => ShapeClass::FatHook,
            _ => ShapeClass::Other,
        }
    }

    pub fn is_rectangle(&self) -> bool {
        self.shape_class() == ShapeClass::Rectangle
    }

    pub fn is_fat_hook(&self) -> bool {
        self.shape_class() == ShapeClass::FatHook
    }

    /// A hook `(b, 1^a)` with `b ≥ 2` and `a ≥ 1`.
    pub fn is_hook(&self) -> bool {
        self.len() >= 2 && self.first() >= 2 && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// Segment lengths of the lattice path from the southwest to the
    /// northeast corner of `frame`, in path order.
    pub fn path_segments(&self, frame: Frame) -> Result<Vec<(Step, usize)>> {
        self.check_fits(frame)?;
        let mut steps: Vec<(Step, usize)> = Vec::new();
        let mut push = |step: Step, n: usize| {
            if n == 0 {
                return;
            }
            match steps.last_mut() {
                Some((s, len)) if *s == step => *len += n,
                _ => steps.push((step, n)),
            }
        };
        for row in (0..frame.rows).rev() {
            push(Step::East, self.part(row) - self.part(row + 1));
            push(Step::North, 1);
        }
        push(Step::East, frame.cols - self.first());
        Ok(steps)
    }

    /// Length of the shortest segment of the lattice path of `self` in `frame`.
    pub fn shortness(&self, frame: Frame) -> Result<usize> {
        if frame.rows == 0 || frame.cols == 0 {
            return Err(Error::EmptyFrame(frame));
        }
        let segments = self.path_segments(frame)?;
        Ok(segments.iter().map(|&(_, n)| n).min().unwrap_or(0))
    }

    /// `(α₁ − α_ℓ, α₁ − α_{ℓ−1}, …, α₁ − α₁)` for `α` padded to `rows` parts.
    pub fn star(&self, rows: usize) -> Result<Partition> {
        if self.len() > rows {
            return Err(Error::TooManyRows {
                partition: self.clone(),
                rows,
            });
        }
        let top = self.first();
        let parts = (0..rows).rev().map(|i| top - self.part(i)).collect();
        Partition::new(parts)
    }

    /// Outer corners, top to bottom, in matrix coordinates.
    pub fn corners(&self) -> Result<Vec<Cell>> {
        if self.is_empty() {
            return Err(Error::NoCorners);
        }
        Ok((0..self.len())
            .filter(|&i| self.part(i + 1) < self.parts[i])
            .map(|i| Cell::new(i + 1, self.parts[i]))
            .collect())
    }

    /// The 180°-rotated complement of `self` inside `frame`.
    pub fn rotate_complement(&self, frame: Frame) -> Result<Partition> {
        self.check_fits(frame)?;
        let parts = (0..frame.rows)
            .rev()
            .map(|i| frame.cols - self.part(i))
            .collect();
        Partition::new(parts)
    }

    /// Removes the part in 1-based row `row`.
    pub fn remove_row(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row >= 1 && row <= parts.len() {
            parts.remove(row - 1);
        }
        Partition { parts }
    }

    /// `self ∪ (part)`: inserts one part, keeping the order.
    pub fn with_part(&self, part: usize) -> Partition {
        if part == 0 {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        let at = parts.iter().position(|&p| p < part).unwrap_or(parts.len());
        parts.insert(at, part);
        Partition { parts }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `"4,4,2,2"`, the exponent shorthand `"7^5,3"`, and `""`/`"0"` for ∅.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "0" || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base.parse().map_err(|_| err("parts must be nonnegative integers"))?;
            let exp: usize = exp.parse().map_err(|_| err("exponents must be nonnegative integers"))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            if parts[pos..].iter().any(|&p| p != 0) {
                return Err(err("zero parts may only trail"));
            }
        }
        Partition::new(parts).map_err(|_| err("parts must be weakly decreasing"))
    }
}

/// An `ℓ × k` rectangle: `rows` = ℓ, `cols` = k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Frame {
    pub rows: usize,
    pub cols: usize,
}

impl Frame {
    pub const fn new(rows: usize, cols: usize) -> Self {
        Frame { rows, cols }
    }

    pub const fn transpose(self) -> Frame {
        Frame {
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn is_degenerate(self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    /// Every partition inside the frame, in lexicographic order.
    pub fn partitions(self) -> Vec<Partition> {
        partitions_between(&Partition::empty(), self, None)
    }
}

impl From<(usize, usize)> for Frame {
    fn from((rows, cols): (usize, usize)) -> Self {
        Frame { rows, cols }
    }
}

impl From<Frame> for (usize, usize) {
    fn from(f: Frame) -> Self {
        (f.rows, f.cols)
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Partitions `ν` with `inner ⊆ ν ⊆ frame`, optionally of a fixed size,
/// sorted lexicographically by padded part sequence.
pub fn partitions_between(inner: &Partition, frame: Frame, size: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    if !inner.fits(frame) {
        return out;
    }
    // Suffix sums of the inner shape bound what the remaining rows can absorb.
    let mut floor = vec![0usize; frame.rows + 1];
    for i in (0..frame.rows).rev() {
        floor[i] = floor[i + 1] + inner.part(i);
    }
    let mut current = Vec::with_capacity(frame.rows);
    fill_rows(inner, frame, size, &floor, 0, frame.cols, 0, &mut current, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_rows(
    inner: &Partition,
    frame: Frame,
    size: Option<usize>,
    floor: &[usize],
    row: usize,
    cap: usize,
    used: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == frame.rows {
        if size.is_none_or(|n| n == used) {
            out.push(Partition::new(current.clone()).expect("generated parts are decreasing"));
        }
        return;
    }
    let lo = inner.part(row);
    for p in lo..=cap {
        if let Some(n) = size {
            if used + p + floor[row + 1] > n {
                break;
            }
            // The rows below can add at most `p` each.
            if used + p + p * (frame.rows - row - 1) < n {
                continue;
            }
        }
        current.push(p);
        fill_rows(inner, frame, size, floor, row + 1, p, used + p, current, out);
        current.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeClass {
    Empty,
    Rectangle,
    FatHook,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

/// A box position in matrix convention: row 1 is the top row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `true` iff `λ` and the rotated `μ` share a box of `frame`: some row `i`
/// has `λ_i + μ_{ℓ+1−i} > k`.
pub fn overlaps(lam: &Partition, mu: &Partition, frame: Frame) -> bool {
    (0..frame.rows).any(|i| lam.part(i) + mu.part(frame.rows - 1 - i) > frame.cols)
}
