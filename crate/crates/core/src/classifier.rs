//! Closed-form multiplicity-freeness test.
//!
//! A quadruple is first reduced to its basic demolition. On a basic
//! quadruple, multiplicity appears exactly when one of the cases
//! [`MultiplicityCase`] holds; otherwise the product is multiplicity-free
//! and one of the [`FreeReason`] shape conditions explains why.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::demolition::RichardsonQuadruple;
use crate::error::{Error, Result};
use crate::partition::{overlaps, Frame, Partition};

/// The four shape configurations that force a coefficient ≥ 2 on a basic
/// quadruple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultiplicityCase {
    /// Both shapes have at least two part sizes.
    I,
    /// `λ` has at least three part sizes; `μ` is a rectangle of shortness ≥ 2.
    II,
    /// `λ` is a fat hook of shortness ≥ 2; `μ` is a rectangle of shortness ≥ 3.
    III,
    /// II or III with the shapes interchanged.
    IV,
}

impl MultiplicityCase {
    pub const ALL: [MultiplicityCase; 4] = [Self::I, Self::II, Self::III, Self::IV];

    pub fn holds(self, q: &RichardsonQuadruple) -> bool {
        let (lam, mu, frame) = (q.lam(), q.mu(), q.frame());
        match self {
            MultiplicityCase::I => lam.distinct_part_sizes() >= 2 && mu.distinct_part_sizes() >= 2,
            MultiplicityCase::II => case_two(lam, mu, frame),
            MultiplicityCase::III => case_three(lam, mu, frame),
            MultiplicityCase::IV => case_two(mu, lam, frame) || case_three(mu, lam, frame),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MultiplicityCase::I => "I'",
            MultiplicityCase::II => "II'",
            MultiplicityCase::III => "III'",
            MultiplicityCase::IV => "IV'",
        }
    }
}

impl fmt::Display for MultiplicityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn shortness(p: &Partition, frame: Frame) -> usize {
    p.shortness(frame).expect("nonempty shapes imply a nonempty frame")
}

fn case_two(big: &Partition, rect: &Partition, frame: Frame) -> bool {
    big.distinct_part_sizes() >= 3 && rect.is_rectangle() && shortness(rect, frame) >= 2
}

fn case_three(hook: &Partition, rect: &Partition, frame: Frame) -> bool {
    hook.is_fat_hook() && rect.is_rectangle() && shortness(hook, frame) >= 2 && shortness(rect, frame) >= 3
}

/// Why a basic quadruple is multiplicity-free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeReason {
    /// One shape is a rectangle of shortness 1.
    I,
    /// A rectangle of shortness 2 against a fat hook.
    II,
    /// A rectangle against a fat hook of shortness 1.
    III,
    /// Two rectangles.
    IV,
    /// A demolished shape is empty, or the frame collapsed.
    EmptyShape,
}

impl FreeReason {
    pub fn label(self) -> &'static str {
        match self {
            FreeReason::I => "I",
            FreeReason::II => "II",
            FreeReason::III => "III",
            FreeReason::IV => "IV",
            FreeReason::EmptyShape => "empty_shape",
        }
    }
}

impl fmt::Display for FreeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_basic(q: &RichardsonQuadruple) -> Result<()> {
    if q.is_basic() {
        Ok(())
    } else {
        Err(Error::pre(format!("{q} is not basic")))
    }
}

/// First multiplicity-free condition that holds on a basic quadruple with
/// nonempty shapes, checking `λ` before `μ` within each condition.
pub fn theorem1_condition(q: &RichardsonQuadruple) -> Result<Option<FreeReason>> {
    check_basic(q)?;
    let (lam, mu, frame) = (q.lam(), q.mu(), q.frame());
    if lam.is_empty() || mu.is_empty() {
        return Err(Error::pre(format!("{q} has an empty shape")));
    }
    let rect_of = |p: &Partition, s: usize| p.is_rectangle() && shortness(p, frame) == s;
    let reason = if rect_of(lam, 1) || rect_of(mu, 1) {
        Some(FreeReason::I)
    } else if (rect_of(lam, 2) && mu.is_fat_hook()) || (rect_of(mu, 2) && lam.is_fat_hook()) {
        Some(FreeReason::II)
    } else if (lam.is_rectangle() && mu.is_fat_hook() && shortness(mu, frame) == 1)
        || (mu.is_rectangle() && lam.is_fat_hook() && shortness(lam, frame) == 1)
    {
        Some(FreeReason::III)
    } else if lam.is_rectangle() && mu.is_rectangle() {
        Some(FreeReason::IV)
    } else {
        None
    };
    Ok(reason)
}

/// First multiplicity case that holds on a basic quadruple.
pub fn theorem1prime_case(q: &RichardsonQuadruple) -> Result<Option<MultiplicityCase>> {
    check_basic(q)?;
    Ok(MultiplicityCase::ALL.into_iter().find(|c| c.holds(q)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    ZeroProduct,
    MultiplicityFree(FreeReason),
    HasMultiplicity(MultiplicityCase),
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::ZeroProduct => "zero_product",
            Outcome::MultiplicityFree(_) => "multiplicity_free",
            Outcome::HasMultiplicity(_) => "has_multiplicity",
        }
    }

    pub fn has_multiplicity(self) -> bool {
        matches!(self, Outcome::HasMultiplicity(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// The basic quadruple the verdict was read off; absent for a zero product.
    pub demolished: Option<RichardsonQuadruple>,
}

impl Verdict {
    pub fn has_multiplicity(&self) -> bool {
        self.outcome.has_multiplicity()
    }

    pub fn reason(&self) -> Option<FreeReason> {
        match self.outcome {
            Outcome::MultiplicityFree(r) => Some(r),
            _ => None,
        }
    }

    pub fn case(&self) -> Option<MultiplicityCase> {
        match self.outcome {
            Outcome::HasMultiplicity(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.outcome.label())?;
        match self.outcome {
            Outcome::ZeroProduct => Ok(()),
            Outcome::MultiplicityFree(r) => write!(f, " (reason {r})"),
            Outcome::HasMultiplicity(c) => write!(f, " (case {c})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("outcome", self.outcome.label())?;
        m.serialize_entry("reason", &self.reason().map(FreeReason::label))?;
        m.serialize_entry("case", &self.case().map(MultiplicityCase::label))?;
        m.serialize_entry("demolished", &self.demolished)?;
        m.end()
    }
}

/// Decides whether `σ_λ · σ_μ` in the Grassmannian of `frame` has a
/// coefficient ≥ 2, without computing the product.
pub fn classify(lam: &Partition, mu: &Partition, frame: Frame) -> Result<Verdict> {
    lam.check_fits(frame)?;
    mu.check_fits(frame)?;
    if overlaps(lam, mu, frame) {
        return Ok(Verdict {
            outcome: Outcome::ZeroProduct,
            demolished: None,
        });
    }
    let q = RichardsonQuadruple::new(lam.clone(), mu.clone(), frame)?;
    Ok(classify_quadruple(&q))
}

pub fn classify_quadruple(q: &RichardsonQuadruple) -> Verdict {
    let basic = q.basic_demolition();
    let outcome = match theorem1prime_case(&basic).expect("basic demolition is basic") {
        Some(case) => Outcome::HasMultiplicity(case),
        None if basic.lam().is_empty() || basic.mu().is_empty() || basic.frame().is_degenerate() => {
            Outcome::MultiplicityFree(FreeReason::EmptyShape)
        }
        None => {
            let reason = theorem1_condition(&basic)
                .expect("basic quadruple with nonempty shapes")
                .unwrap_or_else(|| panic!("{basic}: neither a multiplicity case nor a free condition holds"));
            Outcome::MultiplicityFree(reason)
        }
    };
    Verdict {
        outcome,
        demolished: Some(basic),
    }
}

/// The frame `(ℓ(λ)+ℓ(μ)) × (λ₁+μ₁)`, large enough that no term of the
/// product is truncated.
pub fn gl_frame(lam: &Partition, mu: &Partition) -> Frame {
    Frame::new(lam.len() + mu.len(), lam.first() + mu.first())
}

/// The `k → ∞` limit: multiplicity-freeness of the tensor product of
/// polynomial `GL` representations.
pub fn classify_gl(lam: &Partition, mu: &Partition) -> Verdict {
    classify(lam, mu, gl_frame(lam, mu)).expect("both shapes fit the GL frame")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(lam: &str, mu: &str, rows: usize, cols: usize) -> RichardsonQuadruple {
        RichardsonQuadruple::new(p(lam), p(mu), Frame::new(rows, cols)).unwrap()
    }

    #[test]
    fn free_condition_examples() {
        assert_eq!(theorem1_condition(&q("4,4,2,2,2", "3,3,3", 6, 6)).unwrap(), Some(FreeReason::III));
        assert_eq!(theorem1_condition(&q("4,4,2,2", "3,3,3", 6, 6)).unwrap(), None);
        assert_eq!(theorem1_condition(&q("2,2", "3,3", 5, 6)).unwrap(), Some(FreeReason::IV));
        assert!(theorem1_condition(&q("", "3,3", 5, 6)).is_err());
        assert!(theorem1_condition(&q("6,5,4,3,2,1,1", "7,6,6,6,5,2", 7, 9)).is_err());
    }

    #[test]
    fn multiplicity_case_examples() {
        assert_eq!(
            theorem1prime_case(&q("3,2,1", "5,4,4,2", 5, 6)).unwrap(),
            Some(MultiplicityCase::I)
        );
        assert_eq!(
            theorem1prime_case(&q("4,4,2,2", "3,3,3", 6, 6)).unwrap(),
            Some(MultiplicityCase::III)
        );
        assert_eq!(theorem1prime_case(&q("1", "1", 2, 2)).unwrap(), None);
        assert_eq!(theorem1prime_case(&q("", "", 0, 0)).unwrap(), None);
        assert_eq!(
            theorem1prime_case(&q("3,3,3", "4,4,2,2", 6, 6)).unwrap(),
            Some(MultiplicityCase::IV)
        );
    }

    #[test]
    fn classify_examples() {
        let v = classify(&p("4,3,2,1"), &p("4,4,2,2,1"), Frame::new(5, 5)).unwrap();
        assert!(matches!(v.outcome, Outcome::MultiplicityFree(_)));
        assert_eq!(v.demolished, Some(q("1", "1", 2, 2)));
        let v = classify(&p("4,3,2,1"), &p("4,4,2,2,1"), Frame::new(6, 5)).unwrap();
        assert!(v.has_multiplicity());
        let v = classify(&p("6,5,4,3,2,1,1"), &p("7,6,6,6,5,2"), Frame::new(7, 9)).unwrap();
        assert_eq!(v.outcome, Outcome::HasMultiplicity(MultiplicityCase::I));
        assert_eq!(v.demolished, Some(q("3,2,1", "5,4,4,2", 5, 6)));
        let v = classify(&p("3"), &p("3"), Frame::new(1, 5)).unwrap();
        assert_eq!(v.outcome, Outcome::ZeroProduct);
        assert!(classify(&p("3"), &p("3"), Frame::new(1, 2)).is_err());
    }

    #[test]
    fn tiling_frame_collapses() {
        let v = classify(&p("2,1"), &p("2,1"), Frame::new(2, 3)).unwrap();
        assert_eq!(v.outcome, Outcome::MultiplicityFree(FreeReason::EmptyShape));
        assert!(v.demolished.unwrap().frame().is_degenerate());
    }

    #[test]
    fn gl_examples() {
        assert!(classify_gl(&p("4,3,2,1"), &p("4,4,2,2,1")).has_multiplicity());
        assert!(!classify_gl(&p("3,1"), &Partition::empty()).has_multiplicity());
        assert!(!classify_gl(&p("1"), &p("1")).has_multiplicity());
        assert_eq!(gl_frame(&p("4,3,2,1"), &p("4,4,2,2,1")), Frame::new(9, 8));
    }

    #[test]
    fn verdict_json() {
        let v = classify(&p("4,4,2,2,2"), &p("3,3,3"), Frame::new(6, 6)).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "outcome": "multiplicity_free",
                "reason": "III",
                "case": null,
                "demolished": {"lam": [4,4,2,2,2], "mu": [3,3,3], "frame": [6,6]}
            })
        );
        let zero = classify(&p("3"), &p("3"), Frame::new(1, 5)).unwrap();
        assert_eq!(
            serde_json::to_value(&zero).unwrap(),
            serde_json::json!({"outcome": "zero_product", "reason": null, "case": null, "demolished": null})
        );
    }
}
