//! Richardson quadruples and the ways of shrinking them: emptiness
//! demolition, basic demolition (full lines), and Stembridge demolition
//! (lines holding boxes of only one shape), plus the corner geometry used
//! to pick an inductive step.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::classifier::MultiplicityCase;
use crate::error::{Error, Result};
use crate::partition::{overlaps, Cell, Frame, Partition};

/// `(λ, μ, ℓ × k)` with both shapes in the frame and `λ ∩ rotate(μ) = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RichardsonQuadruple {
    lam: Partition,
    mu: Partition,
    frame: Frame,
}

impl RichardsonQuadruple {
    pub fn new(lam: Partition, mu: Partition, frame: Frame) -> Result<Self> {
        lam.check_fits(frame)?;
        mu.check_fits(frame)?;
        if overlaps(&lam, &mu, frame) {
            return Err(Error::Overlap { lam, mu, frame });
        }
        Ok(RichardsonQuadruple { lam, mu, frame })
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn rows(&self) -> usize {
        self.frame.rows
    }

    pub fn cols(&self) -> usize {
        self.frame.cols
    }

    /// `(λ', μ', k × ℓ)`.
    pub fn transpose(&self) -> Self {
        RichardsonQuadruple {
            lam: self.lam.conjugate(),
            mu: self.mu.conjugate(),
            frame: self.frame.transpose(),
        }
    }

    /// `(μ, λ, ℓ × k)`.
    pub fn swap(&self) -> Self {
        RichardsonQuadruple {
            lam: self.mu.clone(),
            mu: self.lam.clone(),
            frame: self.frame,
        }
    }

    /// Every line of the frame: columns first, then rows, lowest index first.
    pub fn lines(&self) -> impl Iterator<Item = LineRef> {
        let cols = (1..=self.frame.cols).map(LineRef::column);
        let rows = (1..=self.frame.rows).map(LineRef::row);
        cols.chain(rows)
    }

    fn check_line(&self, line: LineRef) -> Result<()> {
        let bound = match line.axis {
            Axis::Row => self.frame.rows,
            Axis::Column => self.frame.cols,
        };
        if line.index == 0 || line.index > bound {
            return Err(Error::LineOutOfRange {
                line,
                frame: self.frame,
            });
        }
        Ok(())
    }

    /// Boxes of `λ` and of `rotate(μ)` in 1-based `row`.
    fn row_counts(&self, row: usize) -> (usize, usize) {
        (self.lam.part(row - 1), self.mu.part(self.frame.rows - row))
    }

    pub fn line_status(&self, line: LineRef) -> Result<LineStatus> {
        self.check_line(line)?;
        Ok(match line.axis {
            Axis::Row => {
                let (a, b) = self.row_counts(line.index);
                LineStatus::from_counts(a, b, self.frame.cols)
            }
            Axis::Column => {
                let j = line.index;
                let a = self.lam.conjugate().part(j - 1);
                let b = self.mu.conjugate().part(self.frame.cols - j);
                LineStatus::from_counts(a, b, self.frame.rows)
            }
        })
    }

    /// Boxes of `λ` and of `rotate(μ)` on every line, columns first.
    fn counts(&self) -> Vec<(LineRef, usize, usize)> {
        let lam_t = self.lam.conjugate();
        let mu_t = self.mu.conjugate();
        let (l, k) = (self.frame.rows, self.frame.cols);
        let cols = (1..=k).map(|j| (LineRef::column(j), lam_t.part(j - 1), mu_t.part(k - j)));
        let rows = (1..=l).map(|i| {
            let (a, b) = self.row_counts(i);
            (LineRef::row(i), a, b)
        });
        cols.chain(rows).collect()
    }

    fn statuses(&self) -> Vec<(LineRef, LineStatus)> {
        let (l, k) = (self.frame.rows, self.frame.cols);
        self.counts()
            .into_iter()
            .map(|(line, a, b)| {
                let len = if line.axis == Axis::Row { k } else { l };
                (line, LineStatus::from_counts(a, b, len))
            })
            .collect()
    }

    fn lines_with(&self, pred: impl Fn(LineStatus) -> bool) -> Vec<LineRef> {
        self.statuses()
            .into_iter()
            .filter(|&(_, st)| pred(st))
            .map(|(line, _)| line)
            .collect()
    }

    pub fn full_lines(&self) -> Vec<LineRef> {
        self.lines_with(|st| st == LineStatus::Full)
    }

    pub fn empty_lines(&self) -> Vec<LineRef> {
        self.lines_with(|st| st == LineStatus::Empty)
    }

    /// Lines holding boxes of exactly one of the two shapes. Unlike the
    /// `OnlyLam`/`OnlyMu` statuses this includes full lines, which only
    /// occur on non-basic quadruples.
    pub fn stembridge_lines(&self) -> Vec<LineRef> {
        self.counts()
            .into_iter()
            .filter(|&(_, a, b)| (a > 0) != (b > 0))
            .map(|(line, _, _)| line)
            .collect()
    }

    pub fn is_basic(&self) -> bool {
        self.statuses().iter().all(|&(_, st)| st != LineStatus::Full)
    }

    /// Deletes every full row and column at once.
    ///
    /// A full column puts one box in every row, so deleting it lowers a
    /// row's box count and `k` together; fullness of the other lines is
    /// unchanged and one pass reaches the fixed point.
    pub fn basic_demolition(&self) -> RichardsonQuadruple {
        let full = self.full_lines();
        let full_rows: Vec<usize> = full.iter().filter(|l| l.axis == Axis::Row).map(|l| l.index).collect();
        let full_cols: Vec<usize> = full.iter().filter(|l| l.axis == Axis::Column).map(|l| l.index).collect();
        if full_rows.is_empty() && full_cols.is_empty() {
            return self.clone();
        }
        let (l, k) = (self.frame.rows, self.frame.cols);
        let lam = (1..=l)
            .filter(|i| !full_rows.contains(i))
            .map(|i| {
                let len = self.lam.part(i - 1);
                len - full_cols.iter().filter(|&&c| c <= len).count()
            })
            .collect();
        // μ's row j sits in frame row ℓ+1−j, over columns k−μ_j+1 ..= k.
        let mu = (1..=l)
            .filter(|j| !full_rows.contains(&(l + 1 - j)))
            .map(|j| {
                let len = self.mu.part(j - 1);
                len - full_cols.iter().filter(|&&c| c + len > k).count()
            })
            .collect();
        RichardsonQuadruple {
            lam: Partition::new(lam).expect("column deletion keeps parts ordered"),
            mu: Partition::new(mu).expect("column deletion keeps parts ordered"),
            frame: Frame::new(l - full_rows.len(), k - full_cols.len()),
        }
    }

    /// Emptiness demolition: drops an empty line; the shapes are untouched.
    pub fn remove_empty_line(&self, line: LineRef) -> Result<RichardsonQuadruple> {
        let st = self.line_status(line)?;
        if st != LineStatus::Empty {
            return Err(Error::pre(format!("{line} is {st}, not empty")));
        }
        let frame = match line.axis {
            Axis::Row => Frame::new(self.frame.rows - 1, self.frame.cols),
            Axis::Column => Frame::new(self.frame.rows, self.frame.cols - 1),
        };
        Ok(RichardsonQuadruple {
            lam: self.lam.clone(),
            mu: self.mu.clone(),
            frame,
        })
    }

    /// Removes every empty line.
    pub fn without_empty_lines(&self) -> RichardsonQuadruple {
        let empty = self.empty_lines();
        let rows = empty.iter().filter(|l| l.axis == Axis::Row).count();
        let cols = empty.len() - rows;
        RichardsonQuadruple {
            lam: self.lam.clone(),
            mu: self.mu.clone(),
            frame: Frame::new(self.frame.rows - rows, self.frame.cols - cols),
        }
    }

    /// Stembridge demolition of a single line. Any line whose boxes all
    /// come from one shape qualifies, including a full one.
    pub fn stembridge_demolish(&self, line: LineRef) -> Result<RichardsonQuadruple> {
        self.check_line(line)?;
        if line.axis == Axis::Column {
            return Ok(self.transpose().stembridge_demolish(line.transpose())?.transpose());
        }
        let (l, i) = (self.frame.rows, line.index);
        let (lam, mu) = match self.row_counts(i) {
            (a, 0) if a > 0 => (self.lam.remove_row(i), self.mu.clone()),
            (0, b) if b > 0 => (self.lam.clone(), self.mu.remove_row(l + 1 - i)),
            _ => {
                let st = self.line_status(line)?;
                return Err(Error::pre(format!(
                    "{line} is {st}; Stembridge demolition needs a line with boxes of one shape"
                )));
            }
        };
        Ok(RichardsonQuadruple {
            lam,
            mu,
            frame: Frame::new(l - 1, self.frame.cols),
        })
    }

    /// Whether demolishing `line` keeps the quadruple basic and inside `case`.
    pub fn is_inductive(&self, line: LineRef, case: MultiplicityCase) -> Result<bool> {
        self.check_inductive_pre(case)?;
        if !self.stembridge_lines().contains(&line) {
            return Err(Error::pre(format!("{line} is not a Stembridge line")));
        }
        let next = self.stembridge_demolish(line)?;
        Ok(next.is_basic() && case.holds(&next))
    }

    fn check_inductive_pre(&self, case: MultiplicityCase) -> Result<()> {
        if !self.is_basic() {
            return Err(Error::pre(format!("{self} is not basic")));
        }
        if !case.holds(self) {
            return Err(Error::pre(format!("{self} is not in case {case}")));
        }
        Ok(())
    }

    /// Sequential Stembridge demolition along `path`; each line refers to
    /// the quadruple produced by the previous step.
    pub fn demolish_path(&self, path: &[LineRef]) -> Result<RichardsonQuadruple> {
        path.iter().try_fold(self.clone(), |q, &line| q.stembridge_demolish(line))
    }

    /// Whether a sequence of Stembridge demolitions ends basic and in `case`.
    pub fn is_inductive_path(&self, path: &[LineRef], case: MultiplicityCase) -> Result<bool> {
        self.check_inductive_pre(case)?;
        match self.demolish_path(path) {
            Ok(next) => Ok(!path.is_empty() && next.is_basic() && case.holds(&next)),
            Err(Error::Precondition(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Corners of `rotate(μ)`, top to bottom: boxes with nothing of the
    /// shape above them or to their left.
    pub fn rotated_mu_corners(&self) -> Result<Vec<Cell>> {
        let (l, k) = (self.frame.rows, self.frame.cols);
        let mut corners = self
            .mu
            .corners()?
            .into_iter()
            .map(|c| Cell::new(l + 1 - c.row, k + 1 - c.col))
            .collect::<Vec<_>>();
        corners.sort();
        Ok(corners)
    }

    /// Corners `A` (lowest/leftmost) and `B` (highest/rightmost) of a fat
    /// hook `λ`, and `X` (lowest/leftmost) and `Y` (highest/rightmost) of
    /// `rotate(μ)` for a fat hook `μ`.
    pub fn fat_hook_corners(&self) -> Result<FatHookCorners> {
        if !self.lam.is_fat_hook() || !self.mu.is_fat_hook() {
            return Err(Error::pre(format!("{self}: both shapes must be fat hooks")));
        }
        let lc = self.lam.corners()?;
        let mc = self.rotated_mu_corners()?;
        Ok(FatHookCorners {
            a: lc[1],
            b: lc[0],
            x: mc[1],
            y: mc[0],
        })
    }

    /// `row(A) < row(X)` and `row(B) < row(Y)`.
    pub fn is_well_ordered(&self) -> Result<bool> {
        let c = self.fat_hook_corners()?;
        Ok(c.a.row < c.x.row && c.b.row < c.y.row)
    }

    /// Finds one of: an inductive Stembridge demolition (for the case where
    /// both shapes have at least two part sizes), a hook among the shapes,
    /// or a well-ordered orientation of two fat hooks.
    pub fn propose_reduction(&self) -> Result<Reduction> {
        if !self.is_basic() {
            return Err(Error::pre(format!("{self} is not basic")));
        }
        if self.lam.distinct_part_sizes() < 2 || self.mu.distinct_part_sizes() < 2 {
            return Err(Error::pre(format!("{self}: both shapes need two part sizes")));
        }
        let case = MultiplicityCase::I;
        let lines = self.stembridge_lines();
        for &line in &lines {
            if self.is_inductive(line, case)? {
                return Ok(Reduction::InductiveLine(line));
            }
        }
        for &first in &lines {
            let mid = self.stembridge_demolish(first)?;
            for second in mid.stembridge_lines() {
                if self.is_inductive_path(&[first, second], case)? {
                    return Ok(Reduction::InductivePair(first, second));
                }
            }
        }
        if self.lam.is_hook() {
            return Ok(Reduction::Hook(Side::Lam));
        }
        if self.mu.is_hook() {
            return Ok(Reduction::Hook(Side::Mu));
        }
        if self.lam.is_fat_hook() && self.mu.is_fat_hook() {
            if self.is_well_ordered()? {
                return Ok(Reduction::WellOrdered(Orientation::Original));
            }
            if self.transpose().is_well_ordered()? {
                return Ok(Reduction::WellOrdered(Orientation::Conjugated));
            }
        }
        Err(Error::pre(format!("{self}: no reduction alternative applies")))
    }
}

impl fmt::Display for RichardsonQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}), ({}), {})", self.lam, self.mu, self.frame)
    }
}

impl Serialize for RichardsonQuadruple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("lam", &self.lam)?;
        m.serialize_entry("mu", &self.mu)?;
        m.serialize_entry("frame", &self.frame)?;
        m.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Row,
    Column,
}

/// A row or column of the frame, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LineRef {
    pub axis: Axis,
    pub index: usize,
}

impl LineRef {
    pub const fn row(index: usize) -> Self {
        LineRef { axis: Axis::Row, index }
    }

    pub const fn column(index: usize) -> Self {
        LineRef {
            axis: Axis::Column,
            index,
        }
    }

    pub const fn transpose(self) -> Self {
        LineRef {
            axis: match self.axis {
                Axis::Row => Axis::Column,
                Axis::Column => Axis::Row,
            },
            index: self.index,
        }
    }
}

impl fmt::Display for LineRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axis {
            Axis::Row => write!(f, "row {}", self.index),
            Axis::Column => write!(f, "column {}", self.index),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineStatus {
    Empty,
    OnlyLam,
    OnlyMu,
    Mixed,
    Full,
}

impl LineStatus {
    /// Fullness wins over single-shape occupancy.
    fn from_counts(lam: usize, mu: usize, len: usize) -> Self {
        match (lam, mu) {
            _ if lam + mu == len => LineStatus::Full,
            (0, 0) => LineStatus::Empty,
            (_, 0) => LineStatus::OnlyLam,
            (0, _) => LineStatus::OnlyMu,
            _ => LineStatus::Mixed,
        }
    }
}

impl fmt::Display for LineStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineStatus::Empty => "empty",
            LineStatus::OnlyLam => "only-lambda",
            LineStatus::OnlyMu => "only-mu",
            LineStatus::Mixed => "mixed",
            LineStatus::Full => "full",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FatHookCorners {
    pub a: Cell,
    pub b: Cell,
    pub x: Cell,
    pub y: Cell,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lam,
    Mu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Original,
    Conjugated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    InductiveLine(LineRef),
    /// Two Stembridge demolitions in sequence; the second line indexes the
    /// intermediate quadruple.
    InductivePair(LineRef, LineRef),
    Hook(Side),
    WellOrdered(Orientation),
}

impl Reduction {
    /// Checks the alternative against its own definition on `q`.
    pub fn verify(&self, q: &RichardsonQuadruple) -> bool {
        let case = MultiplicityCase::I;
        match *self {
            Reduction::InductiveLine(line) => q.is_inductive(line, case).unwrap_or(false),
            Reduction::InductivePair(a, b) => q.is_inductive_path(&[a, b], case).unwrap_or(false),
            Reduction::Hook(Side::Lam) => q.lam().is_hook(),
            Reduction::Hook(Side::Mu) => q.mu().is_hook(),
            Reduction::WellOrdered(Orientation::Original) => q.is_well_ordered().unwrap_or(false),
            Reduction::WellOrdered(Orientation::Conjugated) => {
                q.transpose().is_well_ordered().unwrap_or(false)
            }
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reduction::InductiveLine(l) => write!(f, "inductive demolition of {l}"),
            Reduction::InductivePair(a, b) => write!(f, "inductive demolition of {a}, then {b}"),
            Reduction::Hook(Side::Lam) => f.write_str("lambda is a hook"),
            Reduction::Hook(Side::Mu) => f.write_str("mu is a hook"),
            Reduction::WellOrdered(Orientation::Original) => f.write_str("well-ordered"),
            Reduction::WellOrdered(Orientation::Conjugated) => f.write_str("well-ordered after conjugation"),
        }
    }
}
