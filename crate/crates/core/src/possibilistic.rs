//! The outlier stage.
//!
//! Every element's distance to its nearest center (`d_min`) is collected per
//! cluster, over the elements that are unambiguously nearest to that cluster.
//! The upper Tukey fence of each series marks the largest distance a typical
//! member may have. An element whose `d_min` exceeds the fence of every cluster
//! it is nearest to is an outlier.
//!
//! Outliers keep their relative cluster preferences but their whole membership
//! column is multiplied by `d_typic / d_atipic`, where `d_atipic` is the
//! outlier's own `d_min` and `d_typic` is a reference distance of a typical
//! element. The column sum (the element's typicality) therefore drops below one,
//! the further the element lies the lower. For an element split `0.5 / 0.5`
//! between two clusters each membership becomes `(d_typic / d_atipic) / 2`.

use alloc::vec;
use alloc::vec::Vec;

use crate::crisp::within_tie;
use crate::error::{Error, Result};
use crate::fence::{cluster_stats, ClusterStats};
use crate::fuzzy::fuzzy_memberships;
use crate::geometry::{distances_to, CentroidSet, Dataset, Metric};
use crate::membership::{
    check_row_sums, check_unit_interval, MembershipMatrix, Regime, Verdict, Violation, SUM_TOL,
};

#[derive(Debug, Clone, PartialEq)]
pub struct MinDistance {
    pub d_min: f64,
    /// Clusters within the tie tolerance of `d_min`.
    pub nearest: Vec<usize>,
    /// More than one nearest cluster.
    pub ambiguous: bool,
}

pub fn min_distance_series(
    ds: &Dataset,
    centroids: &CentroidSet,
    metric: Metric,
    tie_tol: f64,
) -> Result<Vec<MinDistance>> {
    if !(tie_tol >= 0.0 && tie_tol.is_finite()) {
        return Err(Error::InvalidParameter(
            "tie tolerance must be finite and non-negative",
        ));
    }
    centroids.check_against(ds)?;
    ds.iter()
        .map(|p| {
            let d = distances_to(metric, p, centroids)?;
            let nearest = within_tie(&d, tie_tol);
            let d_min = d.iter().copied().fold(f64::INFINITY, f64::min);
            Ok(MinDistance {
                d_min,
                ambiguous: nearest.len() > 1,
                nearest,
            })
        })
        .collect()
}

/// Per-cluster `(element, d_min)` series over unambiguous members.
pub fn unambiguous_series(mins: &[MinDistance], clusters: usize) -> Vec<Vec<(usize, f64)>> {
    let mut series = vec![Vec::new(); clusters];
    for (k, m) in mins.iter().enumerate() {
        if let [only] = m.nearest[..] {
            series[only].push((k, m.d_min));
        }
    }
    series
}

fn stats_for(stats: &[ClusterStats], cluster: usize) -> Result<&ClusterStats> {
    stats
        .iter()
        .find(|s| s.cluster_index == cluster)
        .ok_or(Error::MissingStats { cluster })
}

/// Flags elements whose `d_min` is strictly above the fence of every one of
/// their nearest clusters.
pub fn detect_outliers(mins: &[MinDistance], stats: &[ClusterStats]) -> Result<Vec<bool>> {
    mins.iter()
        .map(|m| {
            let mut outside = true;
            for &i in &m.nearest {
                outside &= m.d_min > stats_for(stats, i)?.w_sup;
            }
            Ok(outside)
        })
        .collect()
}

/// The reference distance of a typical element.
///
/// This is the largest `d_min` among ambiguous elements that are not outliers.
/// Without such an element it falls back to the smallest `clust_d_max` across
/// clusters, each taken over the cluster's non-outlier members and ignoring
/// clusters whose members all sit on the center. Every outlier
/// lies beyond the fence of its own clusters, so the fallback stays below every
/// outlier distance.
pub fn select_d_typic(
    mins: &[MinDistance],
    outliers: &[bool],
    stats: &[ClusterStats],
) -> Result<f64> {
    if !outliers.iter().any(|&o| !o) {
        return Err(Error::NoTypicalElement);
    }
    let ambiguous = mins
        .iter()
        .zip(outliers)
        .filter(|(m, &o)| m.ambiguous && !o)
        .map(|(m, _)| m.d_min)
        .reduce(f64::max);
    if let Some(d) = ambiguous {
        return Ok(d);
    }
    stats
        .iter()
        .filter_map(|s| {
            s.d_min_series
                .iter()
                .filter(|&&(k, _)| !outliers.get(k).copied().unwrap_or(false))
                .map(|&(_, d)| d)
                .reduce(f64::max)
        })
        .filter(|&d| d > 0.0)
        .reduce(f64::min)
        .ok_or(Error::NoTypicalElement)
}

/// Scales each outlier column of a fuzzy matrix by `d_typic / d_min`; other
/// columns are copied unchanged.
pub fn possibilistic_rescale(
    m: &MembershipMatrix,
    d_typic: f64,
    mins: &[MinDistance],
    outliers: &[bool],
) -> Result<MembershipMatrix> {
    if m.regime() != Regime::Fuzzy {
        return Err(Error::InvalidParameter("rescaling expects a fuzzy matrix"));
    }
    if mins.len() != m.elements() || outliers.len() != m.elements() {
        return Err(Error::Shape {
            clusters: m.clusters(),
            elements: m.elements(),
            len: mins.len(),
        });
    }
    let mut out = m.clone();
    out.set_regime(Regime::Possibilistic);
    if outliers.iter().any(|&o| o) && !(d_typic > 0.0 && d_typic.is_finite()) {
        return Err(Error::InvalidParameter(
            "reference distance must be positive",
        ));
    }
    for (k, (md, _)) in mins
        .iter()
        .zip(outliers)
        .enumerate()
        .filter(|(_, (_, &o))| o)
    {
        let d_atipic = md.d_min;
        if d_atipic <= 0.0 {
            return Err(Error::NonPositiveDistance {
                element: k,
                distance: d_atipic,
            });
        }
        if d_typic >= d_atipic {
            return Err(Error::ReferenceNotBelowOutlier {
                element: k,
                d_typic,
                d_atipic,
            });
        }
        let factor = d_typic / d_atipic;
        for i in 0..m.clusters() {
            out.set(i, k, m.get(i, k) * factor);
        }
    }
    Ok(out)
}

/// Checks values in `[0, 1]`, at least one positive entry per column, column
/// sums at most one (within `1e-9`) and row sums in `(0, N)`.
pub fn validate_possibilistic(m: &MembershipMatrix) -> Verdict {
    let mut violations = Vec::new();
    check_unit_interval(m, &mut violations);
    for element in 0..m.elements() {
        if !m.column(element).iter().any(|&v| v > 0.0) {
            violations.push(Violation::NoPositiveEntry { element });
        }
        let sum = m.column_sum(element);
        if sum > 1.0 + SUM_TOL {
            violations.push(Violation::ColumnSumAboveOne { element, sum });
        }
    }
    check_row_sums(m, &mut violations);
    Verdict { violations }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rescale {
    pub d_typic: f64,
    pub d_atipic: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementReport {
    pub d_min: f64,
    pub nearest: Vec<usize>,
    pub ambiguous: bool,
    pub outlier: bool,
    /// Column sum of the final memberships.
    pub typicality: f64,
    pub rescale: Option<Rescale>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutlierReport {
    pub elements: Vec<ElementReport>,
    pub d_typic: f64,
}

impl OutlierReport {
    pub fn outliers(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.outlier)
            .map(|(k, _)| k)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PossibilisticRun {
    pub fuzzy: MembershipMatrix,
    pub memberships: MembershipMatrix,
    /// One entry per cluster with at least one unambiguous member.
    pub stats: Vec<ClusterStats>,
    pub report: OutlierReport,
}

pub fn run_possibilistic_pipeline(
    ds: &Dataset,
    centroids: &CentroidSet,
    metric: Metric,
    tie_tol: f64,
) -> Result<PossibilisticRun> {
    let fuzzy = fuzzy_memberships(ds, centroids, metric)?;
    let mins = min_distance_series(ds, centroids, metric, tie_tol)?;
    let stats = unambiguous_series(&mins, centroids.len())
        .into_iter()
        .enumerate()
        .filter(|(_, s)| !s.is_empty())
        .map(|(i, s)| cluster_stats(i, s))
        .collect::<Result<Vec<_>>>()?;
    let outliers = detect_outliers(&mins, &stats)?;
    let d_typic = select_d_typic(&mins, &outliers, &stats)?;
    let memberships = possibilistic_rescale(&fuzzy, d_typic, &mins, &outliers)?;
    let elements = mins
        .into_iter()
        .zip(&outliers)
        .enumerate()
        .map(|(k, (m, &outlier))| ElementReport {
            typicality: memberships.column_sum(k),
            rescale: outlier.then_some(Rescale {
                d_typic,
                d_atipic: m.d_min,
            }),
            d_min: m.d_min,
            nearest: m.nearest,
            ambiguous: m.ambiguous,
            outlier,
        })
        .collect();
    Ok(PossibilisticRun {
        fuzzy,
        memberships,
        stats,
        report: OutlierReport { elements, d_typic },
    })
}
