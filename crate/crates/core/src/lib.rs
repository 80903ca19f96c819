//! Connectedness and indecomposability verdicts for squarefree monomial ideals.

pub mod cli;
pub mod crosscheck;
pub mod decompose;
pub mod document;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod oracle;
pub mod parse;
pub mod report;
pub mod sample;
pub mod verdicts;

pub use error::{Error, Result};
