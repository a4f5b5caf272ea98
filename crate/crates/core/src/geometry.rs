//! Points, datasets, centroids and the two distance metrics.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::error::{Error, Result};

/// A d-dimensional observation with finite coordinates and an optional label.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
    label: Option<String>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Point {
            coords,
            label: None,
        })
    }

    pub fn labeled(label: impl Into<String>, coords: Vec<f64>) -> Result<Self> {
        let mut p = Point::new(coords)?;
        p.label = Some(label.into());
        Ok(p)
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Returns the point with every coordinate multiplied by `s`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        let mut p = Point::new(self.coords.iter().map(|c| c * s).collect())?;
        p.label = self.label.clone();
        Ok(p)
    }

    /// Returns the point shifted by `offset`.
    pub fn translated(&self, offset: &[f64]) -> Result<Self> {
        check_dims(self.dim(), offset.len())?;
        let mut p = Point::new(self.coords.iter().zip(offset).map(|(c, o)| c + o).collect())?;
        p.label = self.label.clone();
        Ok(p)
    }
}

impl Index<usize> for Point {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.coords[index]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[inline]
fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn common_dim(points: &[Point]) -> Result<usize> {
    let dim = points.first().map(Point::dim).unwrap_or(0);
    for p in points {
        check_dims(dim, p.dim())?;
    }
    Ok(dim)
}

/// An ordered, non-empty collection of points sharing one dimension.
///
/// Labels, where present, are unique. Every downstream result is index-aligned
/// with the order of `points`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    points: Vec<Point>,
    dim: usize,
}

impl Dataset {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let dim = common_dim(&points)?;
        let mut seen = BTreeSet::new();
        for label in points.iter().filter_map(Point::label) {
            if !seen.insert(label) {
                return Err(Error::DuplicateLabel(label.into()));
            }
        }
        Ok(Dataset { points, dim })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// The label of element `k`, or `p{k+1}` when it has none.
    pub fn label_or_default(&self, k: usize) -> String {
        match self.points[k].label() {
            Some(l) => l.into(),
            None => alloc::format!("p{}", k + 1),
        }
    }

    /// Keeps the elements whose labels are in `labels`, in dataset order.
    pub fn select(&self, labels: &[&str]) -> Result<Self> {
        Dataset::new(
            self.points
                .iter()
                .filter(|p| p.label().is_some_and(|l| labels.contains(&l)))
                .cloned()
                .collect(),
        )
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        Dataset::new(
            self.points
                .iter()
                .map(|p| p.scaled(s))
                .collect::<Result<_>>()?,
        )
    }
}

impl Index<usize> for Dataset {
    type Output = Point;

    fn index(&self, index: usize) -> &Point {
        &self.points[index]
    }
}

impl<'a> IntoIterator for &'a Dataset {
    type Item = &'a Point;
    type IntoIter = core::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Ordered cluster centers; cluster `i` is `centers()[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CentroidSet {
    centers: Vec<Point>,
    dim: usize,
}

impl CentroidSet {
    pub fn new(centers: Vec<Point>) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::EmptyCentroids);
        }
        let dim = common_dim(&centers)?;
        Ok(CentroidSet { centers, dim })
    }

    /// Builds centers from raw coordinate rows.
    pub fn from_coords<I, C>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Vec<f64>>,
    {
        CentroidSet::new(
            rows.into_iter()
                .map(|r| Point::new(r.into()))
                .collect::<Result<_>>()?,
        )
    }

    /// Uses the first `c` points of the dataset as initial centers.
    pub fn first_k(ds: &Dataset, c: usize) -> Result<Self> {
        if c == 0 {
            return Err(Error::EmptyCentroids);
        }
        if c > ds.len() {
            return Err(Error::InvalidParameter("more clusters than points"));
        }
        CentroidSet::from_coords(ds.points()[..c].iter().map(|p| p.coords().to_vec()))
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Fails unless the centers live in the dataset's space.
    pub fn check_against(&self, ds: &Dataset) -> Result<()> {
        check_dims(ds.dim(), self.dim)
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        CentroidSet::new(
            self.centers
                .iter()
                .map(|p| p.scaled(s))
                .collect::<Result<_>>()?,
        )
    }
}

impl Index<usize> for CentroidSet {
    type Output = Point;

    fn index(&self, index: usize) -> &Point {
        &self.centers[index]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Metric {
    Euclidean,
    #[default]
    SquaredEuclidean,
}

impl Metric {
    #[inline]
    pub fn distance(self, a: &Point, b: &Point) -> Result<f64> {
        distance(self, a, b)
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::SquaredEuclidean => "squared",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[inline]
fn sum_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub fn squared_euclidean_distance(a: &Point, b: &Point) -> Result<f64> {
    check_dims(a.dim(), b.dim())?;
    Ok(sum_sq(a.coords(), b.coords()))
}

pub fn euclidean_distance(a: &Point, b: &Point) -> Result<f64> {
    squared_euclidean_distance(a, b).map(libm::sqrt)
}

pub fn distance(metric: Metric, a: &Point, b: &Point) -> Result<f64> {
    match metric {
        Metric::Euclidean => euclidean_distance(a, b),
        Metric::SquaredEuclidean => squared_euclidean_distance(a, b),
    }
}

/// Distances from `p` to every center, in center order.
pub(crate) fn distances_to(metric: Metric, p: &Point, centroids: &CentroidSet) -> Result<Vec<f64>> {
    centroids
        .centers()
        .iter()
        .map(|c| distance(metric, p, c))
        .collect()
}
