//! Littlewood–Richardson expansions of Schubert-class products on
//! Grassmannians, and a closed-form test for when such a product is
//! multiplicity-free.
//!
//! The pieces:
//!
//! * [`partition`]: partitions inside an `ℓ × k` frame and their geometry.
//! * [`lr`]: LR fillings, coefficients and product expansions (the
//!   brute-force oracle).
//! * [`demolition`]: Richardson quadruples and the emptiness, basic and
//!   Stembridge demolitions.
//! * [`classifier`]: the closed-form verdict.
//! * [`witness`]: explicit pairs of LR fillings proving multiplicity.

pub mod classifier;
pub mod demolition;
pub mod error;
pub mod lr;
pub mod partition;
pub mod witness;

pub use classifier::{classify, classify_gl, FreeReason, MultiplicityCase, Outcome, Verdict};
pub use demolition::{Axis, LineRef, LineStatus, Reduction, RichardsonQuadruple};
pub use error::{Error, Result};
pub use lr::{expand_product, has_multiplicity_bruteforce, lr_coefficient, Expansion, LrFilling, SkewShape};
pub use partition::{overlaps, Cell, Frame, Partition, ShapeClass};
pub use witness::{find_witness, witness_via_reduction, MultiplicityWitness};

