//! Exact computation with angles between integer vectors.
//!
//! Angles are represented by their squared tangent, a positive rational, plus
//! an obtuse flag. The crate decides which angles occur in each dimension,
//! which occur against a fixed vector, and produces integer witnesses or
//! Hilbert-symbol certificates of impossibility.

pub mod angle;
pub mod angleset;
pub mod classify;
pub mod error;
pub mod exactnum;
pub mod hilbert;
pub mod oracle;
pub mod shell;
pub mod vector;
pub mod witness;

pub use angle::{angle_between, AngleClass};
pub use angleset::{
    excluded_angle, excluded_vector, hilbert_criterion, hilbert_criterion_holds, s_theta_contains,
    theta_n_contains, theta_n_of_a_contains, theta_n_of_a_contains_with, vector_with_norm,
    Certificate, ExcludedAngle, ExclusionCase, ExclusionCert, Method, Verdict,
};
pub use classify::{
    classify_by_norm, classify_by_tangent, classify_by_tangent_with, TangentReading,
};
pub use error::{Error, Result};
pub use exactnum::{rat_int, rational, Rational};
pub use hilbert::{hilbert_product_check, hilbert_symbol, Place, SymbolValue};
pub use oracle::{
    angle_inventory, brute_force_witness, consistency_report, AngleInventory, ConsistencyReport,
};
pub use vector::IntVec;
pub use witness::{perpendicular, witness_for_angle, SearchBudget};
