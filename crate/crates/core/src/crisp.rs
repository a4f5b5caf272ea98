//! Hard partitioning: nearest-centroid assignment and Lloyd reiteration.
//!
//! Elements equidistant from several centroids (within `tie_tol`) are recorded
//! with their full tie set. The `{0, 1}` matrix gives such an element to the
//! lowest-index tied cluster, while the centroid update averages it into every
//! tied cluster. The tie-inclusive mean is what places the two centers of the
//! symmetric example at `(-3.33, 0)` and, once the far point `(0, 7)` is added,
//! at `(-2.857, 1)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{distances_to, CentroidSet, Dataset, Metric, Point};
use crate::membership::{check_row_sums, MembershipMatrix, Regime, Verdict, Violation};

pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// All clusters whose distance to `p` is within `tie_tol` of the minimum.
pub fn nearest_clusters(
    p: &Point,
    centroids: &CentroidSet,
    metric: Metric,
    tie_tol: f64,
) -> Result<Vec<usize>> {
    if centroids.is_empty() {
        return Err(Error::EmptyCentroids);
    }
    let d = distances_to(metric, p, centroids)?;
    Ok(within_tie(&d, tie_tol))
}

pub(crate) fn within_tie(d: &[f64], tie_tol: f64) -> Vec<usize> {
    let min = d.iter().copied().fold(f64::INFINITY, f64::min);
    d.iter()
        .enumerate()
        .filter(|&(_, &v)| v <= min + tie_tol)
        .map(|(i, _)| i)
        .collect()
}

fn check_tie_tol(tie_tol: f64) -> Result<()> {
    if tie_tol >= 0.0 && tie_tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(
            "tie tolerance must be finite and non-negative",
        ))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrispPartition {
    matrix: MembershipMatrix,
    assignment: Vec<usize>,
    tie_sets: Vec<Vec<usize>>,
}

impl CrispPartition {
    /// Builds a partition from the tie set of every element; each element is
    /// assigned to the first (lowest-index) member of its tie set.
    pub fn from_tie_sets(
        clusters: usize,
        tie_sets: Vec<Vec<usize>>,
        metric: Metric,
    ) -> Result<Self> {
        let n = tie_sets.len();
        let mut values = vec![0.0; clusters * n];
        let mut assignment = Vec::with_capacity(n);
        for (k, set) in tie_sets.iter().enumerate() {
            let first = *set
                .iter()
                .min()
                .ok_or(Error::InvalidParameter("empty tie set"))?;
            if set.iter().any(|&i| i >= clusters) {
                return Err(Error::InvalidParameter(
                    "tie set refers to a missing cluster",
                ));
            }
            values[first * n + k] = 1.0;
            assignment.push(first);
        }
        let matrix = MembershipMatrix::new(clusters, n, values, Regime::Crisp, metric)?;
        Ok(CrispPartition {
            matrix,
            assignment,
            tie_sets,
        })
    }

    /// The `{0, 1}` matrix.
    pub fn matrix(&self) -> &MembershipMatrix {
        &self.matrix
    }

    /// The cluster holding the 1 of each column.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn tie_sets(&self) -> &[Vec<usize>] {
        &self.tie_sets
    }

    pub fn clusters(&self) -> usize {
        self.matrix.clusters()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn validate(&self) -> Verdict {
        validate_crisp(&self.matrix)
    }

    /// Element indices contributing to each cluster's tie-inclusive mean.
    pub fn contributors(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.clusters()];
        for (k, set) in self.tie_sets.iter().enumerate() {
            for &i in set {
                members[i].push(k);
            }
        }
        members
    }
}

pub fn crisp_assign(
    ds: &Dataset,
    centroids: &CentroidSet,
    metric: Metric,
    tie_tol: f64,
) -> Result<CrispPartition> {
    check_tie_tol(tie_tol)?;
    centroids.check_against(ds)?;
    let tie_sets = ds
        .iter()
        .map(|p| nearest_clusters(p, centroids, metric, tie_tol))
        .collect::<Result<Vec<_>>>()?;
    CrispPartition::from_tie_sets(centroids.len(), tie_sets, metric)
}

/// Recomputes each center as the mean of every point whose tie set contains it.
pub fn update_centroids(ds: &Dataset, partition: &CrispPartition) -> Result<CentroidSet> {
    if partition.len() != ds.len() {
        return Err(Error::Shape {
            clusters: partition.clusters(),
            elements: ds.len(),
            len: partition.len(),
        });
    }
    let d = ds.dim();
    let mut centers = Vec::with_capacity(partition.clusters());
    for (cluster, members) in partition.contributors().into_iter().enumerate() {
        if members.is_empty() {
            return Err(Error::EmptyCluster { cluster });
        }
        let mut sum = vec![0.0; d];
        for &k in &members {
            for (s, c) in sum.iter_mut().zip(ds[k].coords()) {
                *s += c;
            }
        }
        let n = members.len() as f64;
        centers.push(Point::new(sum.into_iter().map(|s| s / n).collect())?);
    }
    CentroidSet::new(centers)
}

/// Sum of squared distances from each element to its assigned center.
pub fn objective(ds: &Dataset, centroids: &CentroidSet, partition: &CrispPartition) -> Result<f64> {
    ds.iter()
        .zip(partition.assignment())
        .map(|(p, &i)| crate::geometry::squared_euclidean_distance(p, &centroids[i]))
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LloydResult {
    pub centroids: CentroidSet,
    pub partition: CrispPartition,
    pub iterations: usize,
    pub converged: bool,
    /// [`objective`] after each round's update.
    pub objective_history: Vec<f64>,
}

/// Alternates assignment and tie-inclusive update until reassignment against
/// the updated centers reproduces the partition (matrix and tie sets), or
/// `max_iters` rounds have run.
///
/// One round is update-then-reassign, so a start that is already balanced
/// reports `iterations == 1`.
pub fn lloyd_iterate(
    ds: &Dataset,
    init: &CentroidSet,
    metric: Metric,
    tie_tol: f64,
    max_iters: usize,
) -> Result<LloydResult> {
    if max_iters == 0 {
        return Err(Error::InvalidParameter("max_iters must be at least 1"));
    }
    let mut partition = crisp_assign(ds, init, metric, tie_tol)?;
    let mut history = Vec::new();
    for iteration in 1..=max_iters {
        let centroids = update_centroids(ds, &partition).map_err(|e| match e {
            Error::EmptyCluster { cluster } => Error::EmptyClusterAt { cluster, iteration },
            other => other,
        })?;
        history.push(objective(ds, &centroids, &partition)?);
        let next = crisp_assign(ds, &centroids, metric, tie_tol)?;
        if next == partition {
            return Ok(LloydResult {
                centroids,
                partition,
                iterations: iteration,
                converged: true,
                objective_history: history,
            });
        }
        if iteration == max_iters {
            return Ok(LloydResult {
                centroids,
                partition,
                iterations: iteration,
                converged: false,
                objective_history: history,
            });
        }
        partition = next;
    }
    unreachable!("loop returns on its last iteration")
}

/// Checks binary values, unit column sums and row sums in `(0, N)`.
pub fn validate_crisp(m: &MembershipMatrix) -> Verdict {
    let mut violations = Vec::new();
    for i in 0..m.clusters() {
        for (element, &value) in m.row(i).iter().enumerate() {
            if value != 0.0 && value != 1.0 {
                violations.push(Violation::NotBinary {
                    cluster: i,
                    element,
                    value,
                });
            }
        }
    }
    for element in 0..m.elements() {
        let sum = m.column_sum(element);
        if sum != 1.0 {
            violations.push(Violation::ColumnSumNotOne { element, sum });
        }
    }
    check_row_sums(m, &mut violations);
    Verdict { violations }
}
