//! Tukey hinges and the upper fence of a cluster's distance series.

use alloc::vec::Vec;

use crate::error::{Error, Result};

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Lower and upper Tukey hinges.
///
/// The sorted series is split in two halves, both of which include the median
/// when the length is odd; the hinges are the medians of those halves.
pub fn quartiles(values: &[f64]) -> Result<(f64, f64)> {
    if values.is_empty() {
        return Err(Error::EmptySeries);
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter("quartiles of a non-finite series"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let half = n.div_ceil(2);
    Ok((median(&sorted[..half]), median(&sorted[n - half..])))
}

/// Distance statistics of one cluster, computed from the minimum distances of
/// its unambiguous members.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterStats {
    pub cluster_index: usize,
    /// `(element index, d_min)` in dataset order.
    pub d_min_series: Vec<(usize, f64)>,
    pub clust_d_max: f64,
    pub q1: f64,
    pub q3: f64,
    pub iqr: f64,
    /// Upper fence `q3 + 1.5 * iqr`.
    pub w_sup: f64,
}

impl ClusterStats {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.d_min_series.iter().map(|&(_, d)| d)
    }
}

pub fn cluster_stats(cluster_index: usize, series: Vec<(usize, f64)>) -> Result<ClusterStats> {
    let values: Vec<f64> = series.iter().map(|&(_, d)| d).collect();
    let (q1, q3) = quartiles(&values)?;
    let clust_d_max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let iqr = q3 - q1;
    Ok(ClusterStats {
        cluster_index,
        d_min_series: series,
        clust_d_max,
        q1,
        q3,
        iqr,
        w_sup: q3 + 1.5 * iqr,
    })
}
