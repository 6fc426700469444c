//! Exhaustive enumeration up to isomorphism, extremal scans and theorem
//! verifiers.

pub mod enumerate;
pub mod scan;
pub mod verify;

pub use enumerate::{classes, enumerate, Classes, EXHAUSTIVE_CAPACITY};
pub use scan::{scan, Objective, ScanOptions, ScanReport};
pub use verify::{verify, TheoremId, VerifyParams, VerifyReport};
