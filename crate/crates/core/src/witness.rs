//! Explicit evidence of multiplicity: a shape `ν` together with two
//! distinct LR fillings of `ν/λ` with content `μ`.
//!
//! [`find_witness`] searches by brute force. The `witness_*_case`
//! functions build the pair directly for the base configurations of the
//! multiplicity proof, and [`witness_via_reduction`] demolishes a
//! quadruple down to one of those configurations and lifts the shape back.
//! Every constructed filling is checked by the LR engine before it is
//! returned.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::classifier::classify_quadruple;
use crate::demolition::{Axis, LineRef, Reduction, RichardsonQuadruple};
use crate::error::{Error, Result};
use crate::lr::{enumerate_lr_fillings, first_multiple_term, LrFilling, SkewShape};
use crate::partition::{Frame, Partition};

/// Upper bound on the candidate placements a construction tries before
/// giving up.
const SEARCH_LIMIT: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityWitness {
    nu: Partition,
    fillings: [LrFilling; 2],
    steps: Vec<String>,
}

impl MultiplicityWitness {
    /// Checks that both fillings are LR fillings of `ν/λ` with content `μ`,
    /// that they differ, and that `ν` fits the frame of `q`.
    pub fn new(q: &RichardsonQuadruple, first: LrFilling, second: LrFilling) -> Result<Self> {
        for f in [&first, &second] {
            if f.shape().inner() != q.lam() {
                return Err(Error::MalformedFilling(format!(
                    "inner shape ({}) is not ({})",
                    f.shape().inner(),
                    q.lam()
                )));
            }
            if let Err(v) = f.validate() {
                return Err(Error::MalformedFilling(v.to_string()));
            }
            if f.content().as_ref() != Some(q.mu()) {
                return Err(Error::MalformedFilling(format!("content is not ({})", q.mu())));
            }
        }
        if first.shape() != second.shape() {
            return Err(Error::MalformedFilling("the fillings have different shapes".into()));
        }
        if first == second {
            return Err(Error::MalformedFilling("the fillings coincide".into()));
        }
        let nu = first.shape().outer().clone();
        nu.check_fits(q.frame())?;
        Ok(MultiplicityWitness {
            nu,
            fillings: [first, second],
            steps: Vec::new(),
        })
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn fillings(&self) -> &[LrFilling; 2] {
        &self.fillings
    }

    /// How the witness was obtained, one entry per demolition or
    /// construction step. Empty for a plain search.
    pub fn steps(&self) -> &[String] {
        &self.steps
    }

    fn with_steps(mut self, steps: Vec<String>) -> Self {
        self.steps = steps;
        self
    }
}

impl fmt::Display for MultiplicityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nu = ({})", self.nu)?;
        for (i, filling) in self.fillings.iter().enumerate() {
            writeln!(f)?;
            writeln!(f, "filling {}:", i + 1)?;
            write!(f, "{filling}")?;
        }
        Ok(())
    }
}

impl Serialize for MultiplicityWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("nu", &self.nu)?;
        m.serialize_entry("fillings", &self.fillings)?;
        m.serialize_entry("steps", &self.steps)?;
        m.end()
    }
}

/// The lexicographically least `ν` with `c_{λ,μ}^ν ≥ 2` and its first two
/// fillings in enumeration order.
pub fn find_witness(q: &RichardsonQuadruple) -> Option<MultiplicityWitness> {
    let nu = first_multiple_term(q.lam(), q.mu(), q.frame()).ok()??;
    witness_for_shape(q, &nu).ok()
}

/// The first two LR fillings of `ν/λ` with content `μ`, if there are two.
pub fn witness_for_shape(q: &RichardsonQuadruple, nu: &Partition) -> Result<MultiplicityWitness> {
    let shape = SkewShape::new(nu.clone(), q.lam().clone())?;
    let mut it = enumerate_lr_fillings(shape, q.mu());
    match (it.next(), it.next()) {
        (Some(a), Some(b)) => MultiplicityWitness::new(q, a, b),
        _ => Err(Error::pre(format!("c^({nu}) is below 2 for {q}"))),
    }
}

/// Boxes added below `λ`, keyed by 1-based row and column.
#[derive(Clone, Debug)]
struct Cells {
    rows: Vec<BTreeMap<usize, usize>>,
}

impl Cells {
    fn new(rows: usize) -> Self {
        Cells {
            rows: vec![BTreeMap::new(); rows],
        }
    }

    fn put(&mut self, row: usize, col: usize, label: usize) -> Result<()> {
        if row == 0 || row > self.rows.len() {
            return Err(Error::pre(format!("row {row} is outside the frame")));
        }
        if self.rows[row - 1].insert(col, label).is_some() {
            return Err(Error::pre(format!("box ({row}, {col}) is used twice")));
        }
        Ok(())
    }

    fn set(&mut self, row: usize, col: usize, label: usize) {
        self.rows[row - 1].insert(col, label);
    }

    /// Stacks `labels` downwards in column `col`, starting just below `λ`.
    fn column(&mut self, lam: &Partition, col: usize, labels: &[usize]) -> Result<()> {
        let top = lam.conjugate().part(col - 1) + 1;
        for (i, &v) in labels.iter().enumerate() {
            self.put(top + i, col, v)?;
        }
        Ok(())
    }

    /// Turns the boxes into a filling of `ν/λ`. With `justify`, each row's
    /// boxes slide left against `λ`, keeping their order; otherwise they
    /// must already sit flush against it.
    fn realize(&self, q: &RichardsonQuadruple, justify: bool) -> Result<LrFilling> {
        let lam = q.lam();
        let mut outer = Vec::with_capacity(self.rows.len());
        let mut entries = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let start = lam.part(i);
            if !justify && row.keys().zip(start + 1..).any(|(&c, want)| c != want) {
                return Err(Error::pre(format!("row {} is not flush against lambda", i + 1)));
            }
            outer.push(start + row.len());
            entries.push(row.values().copied().collect::<Vec<_>>());
        }
        let nu = Partition::new(outer).map_err(|e| Error::pre(format!("not a skew shape: {e}")))?;
        nu.check_fits(q.frame())?;
        entries.truncate(nu.len());
        let filling = LrFilling::from_rows(SkewShape::new(nu, lam.clone())?, entries)?;
        if let Err(v) = filling.validate() {
            return Err(Error::pre(format!("construction failed: {v}")));
        }
        Ok(filling)
    }
}

fn pair(q: &RichardsonQuadruple, first: &Cells, second: &Cells, justify: bool) -> Result<MultiplicityWitness> {
    MultiplicityWitness::new(q, first.realize(q, justify)?, second.realize(q, justify)?)
        .map_err(|e| Error::pre(e.to_string()))
}

fn check_basic(q: &RichardsonQuadruple) -> Result<()> {
    if q.is_basic() {
        Ok(())
    } else {
        Err(Error::pre(format!("{q} is not basic")))
    }
}

/// Runs `build` on the conjugate quadruple and carries the shape back.
fn via_transpose(
    q: &RichardsonQuadruple,
    build: impl Fn(&RichardsonQuadruple) -> Result<MultiplicityWitness>,
) -> Result<MultiplicityWitness> {
    let w = build(&q.transpose())?;
    witness_for_shape(q, &w.nu.conjugate())
}

/// Room for a horizontal strip in each row: row 1 is bounded by the frame,
/// row `i` by `λ_{i-1}`.
fn strip_room(q: &RichardsonQuadruple) -> Vec<usize> {
    let lam = q.lam();
    (0..q.rows())
        .map(|i| if i == 0 { q.cols() - lam.part(0) } else { lam.part(i - 1) - lam.part(i) })
        .collect()
}

/// Distributions of `total` boxes over rows within `room`, topmost rows
/// filled first. `accept` sees each complete distribution and stops the
/// search by returning `Some`.
fn search_strips<T>(
    room: &[usize],
    total: usize,
    mut accept: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    fn go<T>(
        room: &[usize],
        left: usize,
        counts: &mut Vec<usize>,
        budget: &mut usize,
        accept: &mut dyn FnMut(&[usize]) -> Option<T>,
    ) -> Option<T> {
        let i = counts.len();
        if i == room.len() {
            if left > 0 || *budget == 0 {
                return None;
            }
            *budget -= 1;
            return accept(counts);
        }
        let rest: usize = room[i + 1..].iter().sum();
        let hi = room[i].min(left);
        let lo = left.saturating_sub(rest);
        for c in (lo..=hi).rev() {
            counts.push(c);
            let found = go(room, left - c, counts, budget, accept);
            counts.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    let mut budget = SEARCH_LIMIT;
    go(room, total, &mut Vec::new(), &mut budget, &mut accept)
}

/// `μ = (b, 1^a)` a hook against `λ` with two or more part sizes.
///
/// First filling: a horizontal strip of `b` ones meeting rows 1 and `r`
/// but not filling row `s`, then one box at the end of each of rows
/// `2..=a+2` other than `r`, labelled `2, 3, ...` downwards. Second
/// filling: the last 1 of row `r` takes the label `r`, the labels between
/// rows `r` and `s` go up by one, and the box of row `s` becomes a 1. Here
/// `r` is the first row shorter than row 1 and `s` the first row shorter
/// than row `r`. When `s > a + 2` the last labelled row is moved down to
/// row `s`. Falls back to the conjugate quadruple when the configuration
/// does not fit.
pub fn witness_hook_case(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    check_basic(q)?;
    if !q.mu().is_hook() || q.lam().distinct_part_sizes() < 2 {
        return Err(Error::pre(format!("{q}: needs a hook mu and a lambda with two part sizes")));
    }
    hook_direct(q).or_else(|e| via_transpose(q, hook_direct).map_err(|_| e))
}

fn hook_direct(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    let (lam, l) = (q.lam(), q.rows());
    let b = q.mu().first();
    let a = q.mu().len() - 1;
    let r = (1..=l).find(|&i| lam.part(i - 1) < lam.first()).unwrap_or(l + 1);
    let s = (1..=l).find(|&i| lam.part(i - 1) < lam.part(r - 1)).unwrap_or(l + 1);
    if s > l {
        return Err(Error::pre(format!("{q}: no row below row {r} is shorter")));
    }
    // Rows 2..=a+2 other than r, as long as that reaches row s; otherwise
    // the last of them gives way to row s.
    let mut vertical: Vec<usize> = (2..=l).filter(|&i| i != r).take(a).collect();
    if vertical.len() < a {
        return Err(Error::pre(format!("{q}: too few rows for the column of labels")));
    }
    if !vertical.contains(&s) {
        vertical[a - 1] = s;
    }
    // Label of the row-r box in the second filling: the next label after
    // the vertical boxes above row r.
    let relabel = vertical.iter().filter(|&&i| i < r).count() + 2;
    let room = strip_room(q);
    let found = search_strips(&room, b, |counts| {
        if counts[0] == 0 || counts[r - 1] == 0 || counts[s - 1] == room[s - 1] {
            return None;
        }
        let mut first = Cells::new(l);
        for (i, &c) in counts.iter().enumerate() {
            for col in lam.part(i) + 1..=lam.part(i) + c {
                first.set(i + 1, col, 1);
            }
        }
        let end = |i: usize| lam.part(i - 1) + counts[i - 1];
        for (n, &i) in vertical.iter().enumerate() {
            first.set(i, end(i) + 1, n + 2);
        }
        let mut second = first.clone();
        second.set(r, end(r), relabel);
        for (n, &i) in vertical.iter().enumerate() {
            if r < i && i < s {
                second.set(i, end(i) + 1, n + 3);
            } else if i == s {
                second.set(i, end(i) + 1, 1);
            }
        }
        pair(q, &first, &second, false).ok()
    });
    found.ok_or_else(|| Error::pre(format!("{q}: no strip gives two hook fillings")))
}

/// Two fat hooks in well-ordered position.
///
/// The tiles of `rotate(μ)` outside the columns of `X` and `Y` are
/// repacked below `λ` in columns `k-μ_1 ..= k-1` avoiding the columns of
/// `A` and `B`; the set-aside tiles fill the columns under `A` and `B` and
/// a single 1 in column `k`, in the two ways that give distinct fillings.
/// Uses the conjugate quadruple when only it is well-ordered.
pub fn witness_wellordered_case(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    check_basic(q)?;
    if q.is_well_ordered()? {
        if let Ok(w) = wellordered_direct(q) {
            return Ok(w);
        }
    }
    let t = q.transpose();
    if t.is_well_ordered()? {
        return via_transpose(q, wellordered_direct);
    }
    Err(Error::pre(format!("{q}: the construction does not apply in either orientation")))
}

fn wellordered_direct(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    let (lam, mu) = (q.lam(), q.mu());
    let (l, k) = (q.rows(), q.cols());
    let c = q.fat_hook_corners()?;
    let a = l - c.a.row;
    let x = l - c.x.row + 1;
    let y = l - c.y.row + 1;
    let mu_conj = mu.conjugate();
    // Columns of rotate(μ) left to right; column j holds labels 1..height.
    let heights: Vec<usize> = (k + 1 - mu.first()..=k)
        .filter(|&j| j != c.x.col && j != c.y.col)
        .map(|j| mu_conj.part(k - j))
        .collect();
    let targets: Vec<usize> = (k.saturating_sub(mu.first()).max(1)..k)
        .filter(|&j| j != c.a.col && j != c.b.col)
        .take(heights.len())
        .collect();
    if targets.len() < heights.len() {
        return Err(Error::pre(format!("{q}: not enough columns to repack")));
    }
    let mut base = Cells::new(l);
    for (&col, &h) in targets.iter().zip(&heights) {
        base.column(lam, col, &(1..=h).collect::<Vec<_>>())?;
    }
    base.column(lam, k, &[1])?;
    // The column under A takes `a` labels; when that leaves the column under
    // B too short to tell the fillings apart, shorter columns under A are
    // tried in turn.
    let mut last = Error::pre(format!("{q}: y={y} < a={a}"));
    for under_a in (x..=a.min(y)).rev() {
        let cut = y + x - under_a;
        let mut first = base.clone();
        first.column(lam, c.b.col, &(2..=cut).collect::<Vec<_>>())?;
        first.column(lam, c.a.col, &(1..=x).chain(cut + 1..=y).collect::<Vec<_>>())?;
        let mut second = base.clone();
        second.column(lam, c.b.col, &(1..cut).collect::<Vec<_>>())?;
        second.column(lam, c.a.col, &(2..=x).chain(cut..=y).collect::<Vec<_>>())?;
        match pair(q, &first, &second, true) {
            Ok(w) => return Ok(w),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// A rectangle `μ = (g^h)` against `λ` with three or more part sizes, in
/// one of the two configurations where no further demolition applies:
///
/// * `h = 2` (or `g = 2`, by conjugation): a horizontal strip of `g + 2`
///   boxes over four or more rows, ones with twos beneath them, and the
///   last boxes `B1..B4` of four rows set to `1,1,2,2` or `1,2,1,2`;
/// * `λ = (k-1, 2, 1^{ℓ-3})` and `μ = ((k-2)^h)`: a fixed column table,
///   and the same table with the labels of columns 2 and `k-1` exchanged.
pub fn witness_case_ii_base(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    check_basic(q)?;
    let (lam, mu) = (q.lam(), q.mu());
    let (l, k) = (q.rows(), q.cols());
    if !mu.is_rectangle() || lam.distinct_part_sizes() < 3 {
        return Err(Error::pre(format!("{q}: needs a rectangle mu and three part sizes in lambda")));
    }
    let (g, h) = (mu.first(), mu.len());
    if !(2 <= g && g + 2 <= k && 2 <= h && h + 2 <= l) {
        return Err(Error::pre(format!("{q}: mu must have shortness at least 2")));
    }
    if h == 2 {
        return strip_pairs_direct(q);
    }
    if g == 2 {
        return via_transpose(q, strip_pairs_direct);
    }
    let hook_like = |l: usize, k: usize| {
        let mut parts = vec![k - 1, 2];
        parts.extend(std::iter::repeat_n(1, l - 3));
        Partition::from_unsorted(parts)
    };
    if *lam == hook_like(l, k) && g == k - 2 {
        return column_table_direct(q);
    }
    if q.lam().conjugate() == hook_like(k, l) && h == l - 2 {
        return via_transpose(q, column_table_direct);
    }
    Err(Error::pre(format!("{q} is not a base configuration")))
}

fn strip_pairs_direct(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    let lam = q.lam();
    let l = q.rows();
    let g = q.mu().first();
    let room = strip_room(q);
    let bottom = lam.len() + 1 >= l;
    let found = search_strips(&room, g + 2, |counts| {
        let used: Vec<usize> = (1..=l).filter(|&i| counts[i - 1] > 0).collect();
        if used.len() < 4 || (bottom && counts[l - 1] != 1) {
            return None;
        }
        choose4(&used, bottom.then_some(l)).into_iter().find_map(|bs| {
            let mut base = Cells::new(l);
            for (i, &c) in counts.iter().enumerate() {
                let row = i + 1;
                let last = lam.part(i) + c;
                for col in lam.part(i) + 1..=last {
                    if col == last && bs.contains(&row) {
                        continue;
                    }
                    base.put(row, col, 1).ok()?;
                    base.put(row + 1, col, 2).ok()?;
                }
            }
            let complete = |labels: [usize; 4]| {
                let mut cells = base.clone();
                for (&row, v) in bs.iter().zip(labels) {
                    cells.put(row, lam.part(row - 1) + counts[row - 1], v).ok()?;
                }
                Some(cells)
            };
            let first = complete([1, 1, 2, 2])?;
            let second = complete([1, 2, 1, 2])?;
            pair(q, &first, &second, true).ok()
        })
    });
    found.ok_or_else(|| Error::pre(format!("{q}: no strip gives two fillings")))
}

/// Four-element subsets of `rows` in lexicographic order, optionally forced
/// to end with `last`.
fn choose4(rows: &[usize], last: Option<usize>) -> Vec<[usize; 4]> {
    let n = rows.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for m in j + 1..n {
                for t in m + 1..n {
                    let set = [rows[i], rows[j], rows[m], rows[t]];
                    if last.is_none_or(|r| set[3] == r) {
                        out.push(set);
                    }
                }
            }
        }
    }
    out
}

fn column_table_direct(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    let lam = q.lam();
    let (l, k) = (q.rows(), q.cols());
    let h = q.mu().len();
    if k < 5 {
        return Err(Error::pre(format!("{q}: frame too narrow for the column table")));
    }
    // The second filling exchanges the label lists of columns 2 and k-1,
    // which keeps every box in place.
    let table = |col2: Vec<usize>, colk1: Vec<usize>| -> Result<Cells> {
        let mut cells = Cells::new(l);
        cells.column(lam, k, &[1])?;
        cells.column(lam, k - 1, &colk1)?;
        for col in 3..=k - 2 {
            cells.column(lam, col, &(1..=h).collect::<Vec<_>>())?;
        }
        cells.column(lam, 2, &col2)?;
        cells.column(lam, 1, &[h])?;
        Ok(cells)
    };
    let low: Vec<usize> = (1..h).collect();
    let high: Vec<usize> = (2..=h).collect();
    let first = table(low.clone(), high.clone())?;
    let second = table(high, low)?;
    pair(q, &first, &second, true)
}

/// A fat hook `λ = (c^d, a^b)` of shortness at least 2 against a rectangle
/// `μ = (g^h)` of shortness at least 3, with `g ≤ k - a` and `h < ℓ - d`.
///
/// The filling `F_h` places label columns below `λ` by a fixed table
/// (`h-1, h` in column 1, `h` in column 2, `1..h-2, h` in column `c-1`,
/// `2..h-1` in column `c`, `1..h-1` in column `k-1`, `1` in column `k`,
/// `1..h` in every other column past `a`); `G_h` swaps the bottom labels
/// of columns `c-1` and `c`. Larger `h` extends the columns ending in
/// `b+1`, `g = k-a` adds a full column on the left, and smaller `g` drops
/// full columns.
pub fn witness_case_iii(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    check_basic(q)?;
    caseiii_direct(q).or_else(|e| via_transpose(q, caseiii_direct).map_err(|_| e))
}

fn caseiii_direct(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    let (lam, mu) = (q.lam(), q.mu());
    let (l, k) = (q.rows(), q.cols());
    if !lam.is_fat_hook() || !mu.is_rectangle() {
        return Err(Error::pre(format!("{q}: needs a fat hook lambda and a rectangle mu")));
    }
    let (c, a) = (lam.first(), *lam.parts().last().unwrap_or(&0));
    let d = lam.parts().iter().filter(|&&p| p == c).count();
    let b = lam.len() - d;
    let (g, h) = (mu.first(), mu.len());
    if lam.shortness(q.frame())? < 2 || mu.shortness(q.frame())? < 3 {
        return Err(Error::pre(format!("{q}: shortness too small")));
    }
    if g > k - a || h + d >= l {
        return Err(Error::pre(format!("{q}: outside the direct range (g <= k-a, h < l-d)")));
    }
    let hh = h.min(b + 1);
    let range = |lo: usize, hi: usize| (lo..=hi).collect::<Vec<_>>();
    let special = [c - 1, c, k - 1, k];
    let mut full_cols: Vec<usize> = (a + 1..=k).filter(|j| !special.contains(j)).collect();
    let mut lead: Vec<(usize, Vec<usize>)> = vec![(1, vec![hh - 1, hh]), (2, vec![hh])];
    match g.cmp(&(k - a - 1)) {
        std::cmp::Ordering::Equal => {}
        std::cmp::Ordering::Greater => {
            lead = vec![(1, range(1, hh)), (2, vec![hh - 1, hh]), (3, vec![hh])];
        }
        std::cmp::Ordering::Less => {
            let drop = k - a - 1 - g;
            if drop > full_cols.len() {
                return Err(Error::pre(format!("{q}: too few full columns to remove")));
            }
            full_cols.drain(..drop);
        }
    }
    let build = |swap: bool| -> Result<Cells> {
        let mut cells = Cells::new(l);
        for (col, labels) in &lead {
            cells.column(lam, *col, labels)?;
        }
        let (mut cm1, mut cc) = (range(1, hh - 2), range(2, hh - 1));
        cm1.push(hh);
        if swap {
            let n1 = cm1.len() - 1;
            let n2 = cc.len() - 1;
            std::mem::swap(&mut cm1[n1], &mut cc[n2]);
        }
        cells.column(lam, c - 1, &cm1)?;
        cells.column(lam, c, &cc)?;
        cells.column(lam, k - 1, &range(1, hh - 1))?;
        cells.column(lam, k, &[1])?;
        for &col in &full_cols {
            cells.column(lam, col, &range(1, hh))?;
        }
        Ok(justified(q, cells))
    };
    let mut first = build(false)?;
    let mut second = build(true)?;
    if h > hh {
        let feet = cells_labelled(&first, hh);
        first = extend_below(q, &first, &feet, hh, h)?;
        second = extend_below(q, &second, &feet, hh, h)?;
    }
    pair(q, &first, &second, true)
}

/// The same boxes with every row slid left against `λ`.
fn justified(q: &RichardsonQuadruple, cells: Cells) -> Cells {
    let mut out = Cells::new(cells.rows.len());
    for (i, row) in cells.rows.iter().enumerate() {
        for (j, &v) in row.values().enumerate() {
            out.set(i + 1, q.lam().part(i) + j + 1, v);
        }
    }
    out
}

fn cells_labelled(cells: &Cells, label: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, row) in cells.rows.iter().enumerate() {
        out.extend(row.iter().filter(|(_, &v)| v == label).map(|(&col, _)| (i + 1, col)));
    }
    out
}

/// Hangs `from+1 ..= to` below each of the boxes `feet`.
fn extend_below(
    q: &RichardsonQuadruple,
    cells: &Cells,
    feet: &[(usize, usize)],
    from: usize,
    to: usize,
) -> Result<Cells> {
    let mut out = cells.clone();
    for &(row, col) in feet {
        for (n, v) in (from + 1..=to).enumerate() {
            out.put(row + 1 + n, col, v)?;
        }
    }
    Ok(justified(q, out))
}

/// Demolishes `q` to a configuration with a direct construction, builds a
/// witness there, and lifts its shape back to `q`. Falls back to search
/// wherever a step fails; the steps taken are recorded in
/// [`MultiplicityWitness::steps`].
pub fn witness_via_reduction(q: &RichardsonQuadruple) -> Result<MultiplicityWitness> {
    if !classify_quadruple(q).has_multiplicity() {
        return Err(Error::pre(format!("{q} is multiplicity-free")));
    }
    let mut steps = Vec::new();
    let nu = reduce(q, &mut steps)?;
    let w = match witness_for_shape(q, &nu) {
        Ok(w) => w,
        Err(_) => {
            steps.push(format!("lifted shape ({nu}) has coefficient below 2; searching {q}"));
            find_witness(q).ok_or_else(|| Error::pre(format!("{q}: no witness found")))?
        }
    };
    Ok(w.with_steps(steps))
}

type Builder = fn(&RichardsonQuadruple) -> Result<MultiplicityWitness>;

const BUILDERS: [(&str, Builder); 4] = [
    ("hook", witness_hook_case),
    ("well-ordered", witness_wellordered_case),
    ("rectangle against three part sizes", witness_case_ii_base),
    ("rectangle against a fat hook", witness_case_iii),
];

/// Returns a shape `ν` with `c_{λ,μ}^ν ≥ 2` for a quadruple that has
/// multiplicity.
fn reduce(q: &RichardsonQuadruple, steps: &mut Vec<String>) -> Result<Partition> {
    if !q.is_basic() {
        let d = q.basic_demolition();
        steps.push(format!("basic demolition {q} -> {d}"));
        let nu = reduce(&d, steps)?;
        return lift_basic(&nu, d.frame(), q.frame());
    }
    if !q.empty_lines().is_empty() {
        let d = q.without_empty_lines();
        steps.push(format!("remove empty lines {q} -> {d}"));
        return reduce(&d, steps);
    }
    if let Some(path) = proposed_path(q) {
        let d = q.demolish_path(&path)?;
        let names: Vec<String> = path.iter().map(|l| l.to_string()).collect();
        steps.push(format!("inductive demolition of {} {q} -> {d}", names.join(", then ")));
        let nu = reduce(&d, steps)?;
        return lift_path(q, &path, nu);
    }
    for (variant, swapped) in [(q.clone(), false), (q.swap(), true)] {
        for (name, build) in BUILDERS {
            if let Ok(w) = build(&variant) {
                let side = if swapped { " (factors swapped)" } else { "" };
                steps.push(format!("{name} construction on {variant}{side}: nu = ({})", w.nu));
                return Ok(w.nu);
            }
        }
    }
    for line in q.stembridge_lines() {
        let d = q.stembridge_demolish(line)?;
        if classify_quadruple(&d).has_multiplicity() {
            steps.push(format!("demolition of {line} {q} -> {d}"));
            let nu = reduce(&d, steps)?;
            return lift_path(q, &[line], nu);
        }
    }
    steps.push(format!("search on {q}"));
    find_witness(q)
        .map(|w| w.nu)
        .ok_or_else(|| Error::pre(format!("{q}: no witness found")))
}

/// The inductive demolition offered by the reduction trichotomy, if any.
fn proposed_path(q: &RichardsonQuadruple) -> Option<Vec<LineRef>> {
    match q.propose_reduction().ok()? {
        Reduction::InductiveLine(l) => Some(vec![l]),
        Reduction::InductivePair(a, b) => Some(vec![a, b]),
        Reduction::Hook(_) | Reduction::WellOrdered(_) => None,
    }
}

/// Undoes a basic demolition on a shape: `ν` gains `ℓ - ℓ̃` full rows on
/// top and `k - k̃` boxes in every row.
fn lift_basic(nu: &Partition, small: Frame, big: Frame) -> Result<Partition> {
    let extra = big.cols - small.cols;
    let mut parts = vec![big.cols; big.rows - small.rows];
    parts.extend((0..small.rows).map(|i| nu.part(i) + extra));
    Partition::new(parts)
}

/// Undoes Stembridge demolitions along `path` (each line indexing the
/// quadruple left by the previous one), inserting each removed part.
fn lift_path(q: &RichardsonQuadruple, path: &[LineRef], nu: Partition) -> Result<Partition> {
    let Some((&line, rest)) = path.split_first() else {
        return Ok(nu);
    };
    let next = q.stembridge_demolish(line)?;
    let nu = lift_path(&next, rest, nu)?;
    Ok(insert_line(q, line, &nu))
}

fn insert_line(q: &RichardsonQuadruple, line: LineRef, nu: &Partition) -> Partition {
    if line.axis == Axis::Column {
        return insert_line(&q.transpose(), line.transpose(), &nu.conjugate()).conjugate();
    }
    let i = line.index;
    let part = q.lam().part(i - 1).max(q.mu().part(q.rows() - i));
    nu.with_part(part)
}
