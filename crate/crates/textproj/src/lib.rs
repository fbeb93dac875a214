//! File formats, ingestion, rendering and the command line for the
//! `textproj-core` analyses.
//!
//! The crate reads plain-text corpora from disk, applies regular-expression
//! ignore filters, runs the analyses, renders SVG visualizations and writes
//! a static HTML report. The `textproj` binary exposes all of it as
//! subcommands plus a configurable pipeline.

pub mod analysis;
pub mod cli;
pub mod config;
pub mod error;
pub mod ignore;
pub mod ingest;
pub mod io;
pub mod pipeline;
pub mod report;
pub mod svg;

pub use error::{Error, Result};
