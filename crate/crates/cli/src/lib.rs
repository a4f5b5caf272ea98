//! Command-line front end for `possclust`.
//!
//! Reads a dataset from CSV (or the embedded worked example), runs the crisp,
//! fuzzy or possibilistic stage, and writes the resulting tables as CSV or JSON,
//! optionally with an SVG scatter plot.

pub mod config;
mod error;
pub mod input;
pub mod output;
pub mod plot;
pub mod run;

pub use crate::config::{CentroidSpec, FixtureName, InputSource, Mode, OutputFormat, RunConfig};
pub use crate::error::{CliError, Result};
pub use crate::input::{parse_csv, write_dataset_csv};
pub use crate::plot::{emit_plot, render_svg};
pub use crate::run::{run, Analysis};
