//! Algebraic operator properties.
//!
//! Every checker returns a [`PropertyReport`]: a verdict, the decisive
//! extremal value, an optional witness vector, and the threshold that was
//! applied. A `Violated` verdict is always certified by its witness — the
//! defining quantity re-evaluated at the witness reproduces the extremal
//! value. A `Holds` verdict from the sphere optimizer is heuristic (the
//! problem is nonconvex); the `method` string records the search budget.

mod cartesian;
mod checks;
mod criterion;
mod range;
mod report;

pub use cartesian::{cartesian_parts, CartesianPair};
pub use checks::{
    check_accretive_square, check_accretivity, check_hyponormal, check_semiangle,
    AccretivityReports,
};
pub use criterion::{
    brute_force_criterion_min, check_logconvex_criterion, criterion_gradient, criterion_value,
    criterion_value_cartesian, criterion_value_raw, CriterionConfig, CriterionWitness,
    WitnessOrigin, DEFAULT_SEED,
};
pub use range::{lower_bound_m, numerical_range_boundary, RangeBoundary};
pub use report::{PropertyKind, PropertyReport, PropertyStatus};
