//! Outlier-emphasizing cluster analysis.
//!
//! The crate follows a three-stage progression over a fixed set of centroids:
//!
//! * [`crisp`]: nearest-centroid assignment and Lloyd reiteration, each element
//!   belonging to exactly one cluster;
//! * [`fuzzy`]: graded memberships from inverse distances, each column summing to one;
//! * [`possibilistic`]: a Tukey fence over per-cluster minimum distances flags
//!   outliers, whose membership columns are shrunk so their sum encodes how
//!   atypical they are.
//!
//! Distances are either Euclidean or squared Euclidean ([`Metric`]). The squared
//! metric makes large distances dominate membership ratios, which sharpens both
//! cluster separation and outlier visibility.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod crisp;
mod error;
pub mod fence;
pub mod fixture;
pub mod fuzzy;
pub mod geometry;
pub mod membership;
pub mod possibilistic;

pub use crate::crisp::{
    crisp_assign, lloyd_iterate, nearest_clusters, update_centroids, validate_crisp,
    CrispPartition, LloydResult, DEFAULT_TIE_TOL,
};
pub use crate::error::{Error, Result};
pub use crate::fence::{cluster_stats, quartiles, ClusterStats};
pub use crate::fuzzy::{fuzzy_memberships, membership_table, validate_fuzzy, MembershipRow};
pub use crate::geometry::{
    distance, euclidean_distance, squared_euclidean_distance, CentroidSet, Dataset, Metric, Point,
};
pub use crate::membership::{MembershipMatrix, Regime, Verdict, Violation};
pub use crate::possibilistic::{
    detect_outliers, min_distance_series, possibilistic_rescale, run_possibilistic_pipeline,
    select_d_typic, validate_possibilistic, ElementReport, MinDistance, OutlierReport,
    PossibilisticRun, Rescale,
};
