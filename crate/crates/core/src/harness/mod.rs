//! Instance generators with closed-form ground truth, and suites checking
//! the characterization theorems over a corpus.

mod generate;
mod suites;

pub use generate::{default_corpus, generate, GroundTruth, Instance, InstanceKind, InstanceSpec};
pub use suites::{
    run_suite, truth_table_adequacy, AdequacyReport, FailureRecord, SuiteConfig, SuiteReport,
    TheoremId,
};
