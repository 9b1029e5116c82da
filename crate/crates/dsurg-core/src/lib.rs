//! Exact Heegaard Floer d-invariants of integer surgeries on L-space knots,
//! and the Owens-Strle negative-definite obstruction that certifies intervals
//! of surgery slopes on the pretzel knots P(-2,3,2m+1) carrying no fillable
//! contact structure.
//!
//! All arithmetic is exact: d-invariants and thresholds are arbitrary-
//! precision rationals, window bounds are integer inequalities, and no
//! floating point appears anywhere in a verdict.

pub mod dinvariant;
pub mod error;
pub mod knot;
pub mod numtheory;
pub mod obstruction;
pub mod rational;

pub use dinvariant::{d_negative_surgery, d_surgery, d_unknot, DInvariantTable, SpinCIndex};
pub use error::{Error, Result};
pub use knot::{alternating_sum, AlexanderPolynomial, PretzelKnot, TorsionTable};
pub use numtheory::{is_squarefree, largest_squarefree_in, IntegerInterval};
pub use obstruction::{
    certify_nonfillable_interval, check_slope, default_scan_upper, lemma_window,
    owens_strle_threshold, LemmaWindow, ObstructionReport, ScanResult,
};
pub use rational::Rational;
