//! Executable instances of the order-theoretic constructions, and the
//! exhaustive small-carrier checker.

pub mod enumerate;
pub mod gallery;

pub use enumerate::{enumerate, EnumerationBounds, EnumerationSummary, EqualityMode};
pub use gallery::{run_all_galleries, run_gallery, ExtractionReport, OracleBool};
