//! Graded memberships against fixed centroids.
//!
//! Element `k` belongs to cluster `i` in proportion to the inverse of its
//! distance: `u_ik = (1 / d_ik) / sum_j (1 / d_jk)`. For two clusters this is
//! `d_2k / (d_1k + d_2k)`. An element sitting on one or more centers splits
//! its membership equally among them, which is the limit of the formula.
//!
//! Under the squared metric the ratio between distances is squared too, so the
//! nearer cluster's share grows: the same point moves from 0.78 to 0.88.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::geometry::{distances_to, CentroidSet, Dataset, Metric};
use crate::membership::{
    check_column_sums_one, check_row_sums, check_unit_interval, MembershipMatrix, Regime, Verdict,
    SUM_TOL,
};

/// Memberships of one element given its distances to every center.
pub(crate) fn inverse_distance_weights(d: &[f64]) -> Vec<f64> {
    let zeros = d.iter().filter(|&&v| v == 0.0).count();
    if zeros > 0 {
        let share = 1.0 / zeros as f64;
        return d
            .iter()
            .map(|&v| if v == 0.0 { share } else { 0.0 })
            .collect();
    }
    // ratios against the nearest distance keep equal distances exactly 1/c
    let min = d.iter().copied().fold(f64::INFINITY, f64::min);
    let ratios: Vec<f64> = d.iter().map(|v| min / v).collect();
    let total: f64 = ratios.iter().sum();
    ratios.iter().map(|r| r / total).collect()
}

pub fn fuzzy_memberships(
    ds: &Dataset,
    centroids: &CentroidSet,
    metric: Metric,
) -> Result<MembershipMatrix> {
    centroids.check_against(ds)?;
    let columns = ds
        .iter()
        .map(|p| distances_to(metric, p, centroids).map(|d| inverse_distance_weights(&d)))
        .collect::<Result<Vec<_>>>()?;
    MembershipMatrix::from_columns(&columns, Regime::Fuzzy, metric)
}

/// One row of a membership table: the element, its distance to each center and
/// its membership to each cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipRow {
    pub label: String,
    pub coords: Vec<f64>,
    pub distances: Vec<f64>,
    pub memberships: Vec<f64>,
}

pub fn membership_table(
    ds: &Dataset,
    centroids: &CentroidSet,
    metric: Metric,
) -> Result<Vec<MembershipRow>> {
    centroids.check_against(ds)?;
    ds.iter()
        .enumerate()
        .map(|(k, p)| {
            let distances = distances_to(metric, p, centroids)?;
            let memberships = inverse_distance_weights(&distances);
            Ok(MembershipRow {
                label: ds.label_or_default(k),
                coords: p.coords().to_vec(),
                distances,
                memberships,
            })
        })
        .collect()
}

/// Checks values in `[0, 1]`, unit column sums (within `1e-9`) and row sums in
/// `(0, N)`. The regime tag is not consulted.
pub fn validate_fuzzy(m: &MembershipMatrix) -> Verdict {
    let mut violations = Vec::new();
    check_unit_interval(m, &mut violations);
    check_column_sums_one(m, SUM_TOL, &mut violations);
    check_row_sums(m, &mut violations);
    Verdict { violations }
}
