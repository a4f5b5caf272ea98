use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a point needs at least one coordinate")]
    ZeroDimension,
    #[error("coordinate {index} is not finite")]
    NonFinite { index: usize },
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("centroid set is empty")]
    EmptyCentroids,
    #[error("duplicate label {0:?}")]
    DuplicateLabel(alloc::string::String),
    #[error("membership matrix shape {clusters}x{elements} does not match {len} values")]
    Shape {
        clusters: usize,
        elements: usize,
        len: usize,
    },
    #[error("cluster {cluster} has no contributing points")]
    EmptyCluster { cluster: usize },
    #[error("cluster {cluster} became empty at iteration {iteration}")]
    EmptyClusterAt { cluster: usize, iteration: usize },
    #[error("cannot compute quartiles of an empty series")]
    EmptySeries,
    #[error("no statistics for cluster {cluster}")]
    MissingStats { cluster: usize },
    #[error("every element is an outlier, no typical reference distance exists")]
    NoTypicalElement,
    #[error("outlier {element} has non-positive distance {distance}")]
    NonPositiveDistance { element: usize, distance: f64 },
    #[error("reference distance {d_typic} is not below outlier {element} distance {d_atipic}")]
    ReferenceNotBelowOutlier {
        element: usize,
        d_typic: f64,
        d_atipic: f64,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
