use std::fs::File;
use std::io::{BufReader, Write};

use possclust::{
    fuzzy_memberships, lloyd_iterate, run_possibilistic_pipeline, CentroidSet, Dataset,
    LloydResult, MembershipMatrix, PossibilisticRun,
};

use crate::config::{CentroidSpec, InputSource, Mode, OutputFormat, RunConfig};
use crate::error::{CliError, Result};
use crate::input::parse_csv_reader;
use crate::output::{render_csv, render_json};
use crate::plot::emit_plot;

#[derive(Debug, Clone)]
pub enum Stage {
    Crisp,
    Fuzzy(MembershipMatrix),
    Possibilistic(PossibilisticRun),
}

/// Everything a run computed, ready for rendering.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub config: RunConfig,
    pub dataset: Dataset,
    /// Centers the memberships were computed against.
    pub centroids: CentroidSet,
    /// Present in crisp mode and when first-k seeding was refined.
    pub lloyd: Option<LloydResult>,
    /// `distances[i][k]`: element `k` to center `i`, under the configured metric.
    pub distances: Vec<Vec<f64>>,
    pub stage: Stage,
}

impl Analysis {
    /// Final membership matrix of the run.
    pub fn memberships(&self) -> &MembershipMatrix {
        match &self.stage {
            Stage::Crisp => self
                .lloyd
                .as_ref()
                .expect("crisp runs keep their Lloyd result")
                .partition
                .matrix(),
            Stage::Fuzzy(m) => m,
            Stage::Possibilistic(run) => &run.memberships,
        }
    }

    /// Cluster with the largest membership for each element (lowest index on ties).
    pub fn assignment(&self) -> Vec<usize> {
        let m = self.memberships();
        (0..m.elements())
            .map(|k| {
                (0..m.clusters()).fold(0, |best, i| {
                    if m.get(i, k) > m.get(best, k) {
                        i
                    } else {
                        best
                    }
                })
            })
            .collect()
    }

    pub fn outliers(&self) -> Vec<usize> {
        match &self.stage {
            Stage::Possibilistic(run) => run.report.outliers().collect(),
            _ => Vec::new(),
        }
    }
}

pub fn load_dataset(input: &InputSource) -> Result<Dataset> {
    match input {
        InputSource::Fixture(name) => Ok(name.dataset()),
        InputSource::File(path) => {
            let f = File::open(path).map_err(|e| CliError::io(path, e))?;
            parse_csv_reader(BufReader::new(f))
        }
    }
}

fn initial_centroids(cfg: &RunConfig, ds: &Dataset) -> Result<(CentroidSet, bool)> {
    let first_k = |c: usize| {
        if c > ds.len() {
            return Err(CliError::Config(format!(
                "{c} clusters but only {} points",
                ds.len()
            )));
        }
        Ok((CentroidSet::first_k(ds, c)?, true))
    };
    let (set, seeded) = match (&cfg.centroids, &cfg.input) {
        (CentroidSpec::Explicit(rows), _) => {
            let set = CentroidSet::from_coords(rows.iter().cloned())
                .map_err(|e| CliError::Config(format!("--centroids: {e}")))?;
            (set, false)
        }
        (CentroidSpec::Default, InputSource::Fixture(name)) => {
            let set = name.centroids();
            if let Some(c) = cfg.clusters.filter(|&c| c != set.len()) {
                return Err(CliError::Config(format!(
                    "fixture {name} has {} centroids, --clusters asked for {c}",
                    set.len()
                )));
            }
            (set, false)
        }
        (CentroidSpec::FirstK, _) | (CentroidSpec::Default, InputSource::File(_)) => {
            first_k(cfg.clusters.unwrap_or(2))?
        }
    };
    if set.dim() != ds.dim() {
        return Err(CliError::Config(format!(
            "centroids have {} coordinates, the dataset has {}",
            set.dim(),
            ds.dim()
        )));
    }
    Ok((set, seeded))
}

pub fn analyze(cfg: &RunConfig) -> Result<Analysis> {
    cfg.validate()?;
    let dataset = load_dataset(&cfg.input)?;
    let (init, seeded) = initial_centroids(cfg, &dataset)?;

    let lloyd = if cfg.mode == Mode::Crisp || seeded {
        Some(lloyd_iterate(
            &dataset,
            &init,
            cfg.metric,
            cfg.tie_tol,
            cfg.max_iters,
        )?)
    } else {
        None
    };
    let centroids = lloyd.as_ref().map(|r| r.centroids.clone()).unwrap_or(init);

    let stage = match cfg.mode {
        Mode::Crisp => Stage::Crisp,
        Mode::Fuzzy => Stage::Fuzzy(fuzzy_memberships(&dataset, &centroids, cfg.metric)?),
        Mode::Possibilistic => Stage::Possibilistic(run_possibilistic_pipeline(
            &dataset,
            &centroids,
            cfg.metric,
            cfg.tie_tol,
        )?),
    };
    let distances = centroids
        .centers()
        .iter()
        .map(|c| dataset.iter().map(|p| cfg.metric.distance(p, c)).collect())
        .collect::<possclust::Result<Vec<Vec<f64>>>>()?;

    Ok(Analysis {
        config: cfg.clone(),
        dataset,
        centroids,
        lloyd,
        distances,
        stage,
    })
}

/// Runs the configured analysis, writes the report to `out` and the plot, if
/// requested, to its path.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<Analysis> {
    let analysis = analyze(cfg)?;
    let text = match cfg.format {
        OutputFormat::Csv => render_csv(&analysis, cfg.full_precision),
        OutputFormat::Json => render_json(&analysis),
    };
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::io("<stdout>", e))?;
    if let Some(path) = &cfg.plot {
        if analysis.dataset.dim() > 2 {
            eprintln!(
                "warning: plotting the first two of {} coordinates",
                analysis.dataset.dim()
            );
        }
        emit_plot(
            &analysis.dataset,
            &analysis.centroids,
            &analysis.outliers(),
            Some(&analysis.assignment()),
            path,
        )?;
    }
    Ok(analysis)
}
