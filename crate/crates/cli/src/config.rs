use std::fmt;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};
use possclust::{CentroidSet, Dataset, Metric, DEFAULT_TIE_TOL};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::input::parse_centroid_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureName {
    /// z1..z12 with centroids (-2.85714, 1) and (2.85714, 1)
    Paper,
    /// z1..z11 with centroids (-3.33, 0) and (3.33, 0)
    PaperSymmetric,
    /// z1..z10 with initial centroids on z3 and z8
    PaperCrisp,
}

impl FixtureName {
    pub fn dataset(self) -> Dataset {
        match self {
            FixtureName::Paper => possclust::fixture::paper_dataset(),
            FixtureName::PaperSymmetric => possclust::fixture::symmetric_subset(),
            FixtureName::PaperCrisp => possclust::fixture::crisp_subset(),
        }
    }

    pub fn centroids(self) -> CentroidSet {
        match self {
            FixtureName::Paper => possclust::fixture::outlier_centroids(),
            FixtureName::PaperSymmetric => possclust::fixture::symmetric_centroids(),
            FixtureName::PaperCrisp => possclust::fixture::crisp_centroids(),
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Crisp,
    Fuzzy,
    Possibilistic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Euclidean,
    Squared,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::Euclidean => Metric::Euclidean,
            MetricArg::Squared => Metric::SquaredEuclidean,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    File(PathBuf),
    Fixture(FixtureName),
}

impl fmt::Display for InputSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputSource::File(p) => write!(f, "{}", p.display()),
            InputSource::Fixture(name) => write!(f, "fixture:{name}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CentroidSpec {
    Explicit(Vec<Vec<f64>>),
    FirstK,
    /// The fixture's own centroids, or first-k for file input.
    Default,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: InputSource,
    pub mode: Mode,
    pub metric: Metric,
    pub clusters: Option<usize>,
    pub centroids: CentroidSpec,
    pub tie_tol: f64,
    pub max_iters: usize,
    pub format: OutputFormat,
    pub plot: Option<PathBuf>,
    pub full_precision: bool,
}

impl RunConfig {
    /// A config for the embedded example with every other setting at its default.
    pub fn fixture(name: FixtureName, mode: Mode) -> Self {
        RunConfig {
            input: InputSource::Fixture(name),
            mode,
            metric: default_metric(mode),
            clusters: None,
            centroids: CentroidSpec::Default,
            tie_tol: DEFAULT_TIE_TOL,
            max_iters: 100,
            format: OutputFormat::Csv,
            plot: None,
            full_precision: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.clusters == Some(0) {
            return Err(CliError::Config("--clusters must be at least 1".into()));
        }
        if self.max_iters == 0 {
            return Err(CliError::Config("--max-iters must be at least 1".into()));
        }
        if !(self.tie_tol >= 0.0 && self.tie_tol.is_finite()) {
            return Err(CliError::Config(
                "--tie-tol must be finite and non-negative".into(),
            ));
        }
        if let CentroidSpec::Explicit(rows) = &self.centroids {
            if rows.is_empty() {
                return Err(CliError::Config("--centroids lists no centroid".into()));
            }
            if let Some(c) = self.clusters.filter(|&c| c != rows.len()) {
                return Err(CliError::Config(format!(
                    "--clusters {c} but {} centroids were given",
                    rows.len()
                )));
            }
        }
        Ok(())
    }
}

/// Squared distances for the outlier stage, plain distances otherwise.
pub fn default_metric(mode: Mode) -> Metric {
    match mode {
        Mode::Possibilistic => Metric::SquaredEuclidean,
        Mode::Crisp | Mode::Fuzzy => Metric::Euclidean,
    }
}

/// Crisp, fuzzy and possibilistic cluster analysis with outlier emphasis.
#[derive(Debug, Parser)]
#[command(name = "possclust", version)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "fixture"])))]
pub struct Args {
    /// CSV dataset: optional header, optional leading label column
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Embedded worked example
    #[arg(long, value_enum)]
    pub fixture: Option<FixtureName>,
    #[arg(long, value_enum, default_value_t = Mode::Possibilistic)]
    pub mode: Mode,
    /// Distance metric [default: squared for possibilistic, euclidean otherwise]
    #[arg(long, value_enum)]
    pub metric: Option<MetricArg>,
    /// Number of clusters
    #[arg(long, value_name = "C")]
    pub clusters: Option<usize>,
    /// "x,y;x,y;..." or "first-k"
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub centroids: Option<String>,
    /// Absolute tolerance for equidistance ties
    #[arg(long, value_name = "R", default_value_t = DEFAULT_TIE_TOL)]
    pub tie_tol: f64,
    /// Maximum Lloyd rounds
    #[arg(long, value_name = "N", default_value_t = 100)]
    pub max_iters: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write an SVG scatter plot here
    #[arg(long, value_name = "PATH")]
    pub plot: Option<PathBuf>,
    /// Do not round CSV distances and memberships
    #[arg(long)]
    pub full_precision: bool,
}

impl TryFrom<Args> for RunConfig {
    type Error = CliError;

    fn try_from(a: Args) -> Result<Self> {
        let input = match (a.input, a.fixture) {
            (Some(path), None) => InputSource::File(path),
            (None, Some(name)) => InputSource::Fixture(name),
            _ => {
                return Err(CliError::Config(
                    "give exactly one of --input and --fixture".into(),
                ))
            }
        };
        let centroids = match a.centroids.as_deref().map(str::trim) {
            None => CentroidSpec::Default,
            Some("first-k") => CentroidSpec::FirstK,
            Some(list) => {
                CentroidSpec::Explicit(parse_centroid_list(list).map_err(CliError::Config)?)
            }
        };
        let cfg = RunConfig {
            input,
            mode: a.mode,
            metric: a
                .metric
                .map(Metric::from)
                .unwrap_or_else(|| default_metric(a.mode)),
            clusters: a.clusters,
            centroids,
            tie_tol: a.tie_tol,
            max_iters: a.max_iters,
            format: a.format,
            plot: a.plot,
            full_precision: a.full_precision,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<RunConfig> {
        let mut argv = vec!["possclust"];
        argv.extend_from_slice(args);
        RunConfig::try_from(
            Args::try_parse_from(argv).map_err(|e| CliError::Config(e.to_string()))?,
        )
    }

    #[test]
    fn defaults() {
        let c = cfg(&["--fixture", "paper"]).unwrap();
        assert_eq!(c.mode, Mode::Possibilistic);
        assert_eq!(c.metric, Metric::SquaredEuclidean);
        assert_eq!(c.centroids, CentroidSpec::Default);
        let c = cfg(&["--fixture", "paper-symmetric", "--mode", "fuzzy"]).unwrap();
        assert_eq!(c.metric, Metric::Euclidean);
    }

    #[test]
    fn centroid_flag() {
        let c = cfg(&["--fixture", "paper", "--centroids", "-2.85714,1;2.85714,1"]).unwrap();
        assert_eq!(
            c.centroids,
            CentroidSpec::Explicit(vec![vec![-2.85714, 1.0], vec![2.85714, 1.0]])
        );
        let c = cfg(&[
            "--input",
            "x.csv",
            "--centroids",
            "first-k",
            "--clusters",
            "3",
        ])
        .unwrap();
        assert_eq!(c.centroids, CentroidSpec::FirstK);
        assert!(matches!(
            cfg(&[
                "--fixture",
                "paper",
                "--centroids",
                "1,2",
                "--clusters",
                "2"
            ]),
            Err(CliError::Config(_))
        ));
        assert!(matches!(
            cfg(&["--fixture", "paper", "--centroids", "1,q"]),
            Err(CliError::Config(_))
        ));
    }

    #[test]
    fn rejects_bad_numbers() {
        assert!(cfg(&["--fixture", "paper", "--clusters", "0"]).is_err());
        assert!(cfg(&["--fixture", "paper", "--max-iters", "0"]).is_err());
        assert!(cfg(&["--fixture", "paper", "--tie-tol", "-1"]).is_err());
        assert!(cfg(&["--mode", "fuzzy"]).is_err());
        assert!(cfg(&["--fixture", "paper", "--input", "a.csv"]).is_err());
    }
}
