//! Exact q-series engine for principal subspaces of level-k standard
//! `sl(2)^`-modules.
//!
//! Three independent routes compute the same bigraded characters:
//!
//! * [`selberg`] solves the Rogers–Selberg system of q-difference equations,
//! * [`qcombinat`] evaluates the Andrews–Gordon multisum (and the Gordon
//!   product side and partition counts),
//! * [`oracle`] takes dimensions of the quotient `A / A_Λ` by exact linear
//!   algebra over the ideal generators.
//!
//! [`report`] compares any two of them cell by cell.

pub mod error;
pub mod oracle;
pub mod qcombinat;
pub mod report;
pub mod selberg;
pub mod series;
pub mod verify;

pub use error::{Error, Result, SeriesError};
pub use oracle::{DimensionTable, GeneratorSet, YMonomial};
pub use qcombinat::{GordonCondition, Partition};
pub use report::{Discrepancy, Status, VerificationReport};
pub use selberg::{RecursionFamily, WeightData};
pub use series::{BiSeries, Coefficient, Specialized, XSpecialization};
