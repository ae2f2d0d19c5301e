//! Fixed workloads shared by the benchmarks.

use nullcone_core::{parse_catalog_spec, ValidatedProblem};

/// Catalog specs timed by the `stratify` bench, smallest first.
pub const WORKLOADS: &[&str] = &[
    "sl2-forms:2,3,3,4,5",
    "gl2-ex3:2,1",
    "sl3-forms:3",
    "g2-adjoint",
    "adjoint:A3",
    "sl3-forms:4",
];

pub fn load(spec: &str) -> ValidatedProblem {
    parse_catalog_spec(spec)
        .expect("catalog spec parses")
        .validate()
        .expect("catalog problem validates")
}
