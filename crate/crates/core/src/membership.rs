//! Membership matrices and the partition conditions they are checked against.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::geometry::Metric;

/// Tolerance on column sums for the fuzzy and possibilistic conditions.
pub const SUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Crisp,
    Fuzzy,
    Possibilistic,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Crisp => "crisp",
            Regime::Fuzzy => "fuzzy",
            Regime::Possibilistic => "possibilistic",
        }
    }
}

/// A `c x N` matrix of membership degrees, stored row-major: row `i` is
/// cluster `i`, column `k` is element `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipMatrix {
    values: Vec<f64>,
    clusters: usize,
    elements: usize,
    regime: Regime,
    metric: Metric,
}

impl MembershipMatrix {
    /// Only the shape is checked here; the value conditions are reported by
    /// the `validate_*` functions.
    pub fn new(
        clusters: usize,
        elements: usize,
        values: Vec<f64>,
        regime: Regime,
        metric: Metric,
    ) -> Result<Self> {
        if clusters * elements != values.len() || clusters == 0 || elements == 0 {
            return Err(Error::Shape {
                clusters,
                elements,
                len: values.len(),
            });
        }
        Ok(MembershipMatrix {
            values,
            clusters,
            elements,
            regime,
            metric,
        })
    }

    /// Builds a matrix from one column (one membership vector) per element.
    pub fn from_columns(columns: &[Vec<f64>], regime: Regime, metric: Metric) -> Result<Self> {
        let elements = columns.len();
        let clusters = columns.first().map(Vec::len).unwrap_or(0);
        let mut values = alloc::vec![0.0; clusters * elements];
        for (k, col) in columns.iter().enumerate() {
            if col.len() != clusters {
                return Err(Error::Shape {
                    clusters,
                    elements,
                    len: col.len() * elements,
                });
            }
            for (i, &v) in col.iter().enumerate() {
                values[i * elements + k] = v;
            }
        }
        MembershipMatrix::new(clusters, elements, values, regime, metric)
    }

    /// Builds a matrix from rows given as nested slices.
    pub fn from_rows(rows: &[&[f64]], regime: Regime, metric: Metric) -> Result<Self> {
        let clusters = rows.len();
        let elements = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut values = Vec::with_capacity(clusters * elements);
        for r in rows {
            if r.len() != elements {
                return Err(Error::Shape {
                    clusters,
                    elements,
                    len: r.len() * clusters,
                });
            }
            values.extend_from_slice(r);
        }
        MembershipMatrix::new(clusters, elements, values, regime, metric)
    }

    #[inline]
    pub fn get(&self, cluster: usize, element: usize) -> f64 {
        self.values[cluster * self.elements + element]
    }

    #[inline]
    pub(crate) fn set(&mut self, cluster: usize, element: usize, v: f64) {
        self.values[cluster * self.elements + element] = v;
    }

    pub fn clusters(&self) -> usize {
        self.clusters
    }

    pub fn elements(&self) -> usize {
        self.elements
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub(crate) fn set_regime(&mut self, regime: Regime) {
        self.regime = regime;
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    /// Row-major values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn row(&self, cluster: usize) -> &[f64] {
        &self.values[cluster * self.elements..(cluster + 1) * self.elements]
    }

    pub fn column(&self, element: usize) -> Vec<f64> {
        (0..self.clusters).map(|i| self.get(i, element)).collect()
    }

    pub fn column_sum(&self, element: usize) -> f64 {
        (0..self.clusters).map(|i| self.get(i, element)).sum()
    }

    pub fn row_sum(&self, cluster: usize) -> f64 {
        self.row(cluster).iter().sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks(self.elements)
    }
}

/// A single failed partition condition, with the offending indices.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// A crisp value other than 0 or 1.
    NotBinary {
        cluster: usize,
        element: usize,
        value: f64,
    },
    /// A value outside `[0, 1]`.
    OutOfUnitInterval {
        cluster: usize,
        element: usize,
        value: f64,
    },
    /// A column that does not sum to one.
    ColumnSumNotOne { element: usize, sum: f64 },
    /// A column with no strictly positive entry.
    NoPositiveEntry { element: usize },
    /// A possibilistic column summing above one.
    ColumnSumAboveOne { element: usize, sum: f64 },
    /// A row sum outside the open interval `(0, N)`.
    RowSumOutOfRange { cluster: usize, sum: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotBinary {
                cluster,
                element,
                value,
            } => {
                write!(f, "u[{cluster}][{element}] = {value} is not 0 or 1")
            }
            Violation::OutOfUnitInterval {
                cluster,
                element,
                value,
            } => {
                write!(f, "u[{cluster}][{element}] = {value} is outside [0, 1]")
            }
            Violation::ColumnSumNotOne { element, sum } => {
                write!(f, "column {element} sums to {sum}, not 1")
            }
            Violation::NoPositiveEntry { element } => {
                write!(f, "column {element} has no positive membership")
            }
            Violation::ColumnSumAboveOne { element, sum } => {
                write!(f, "column {element} sums to {sum} > 1")
            }
            Violation::RowSumOutOfRange { cluster, sum } => {
                write!(f, "row {cluster} sums to {sum}, outside (0, N)")
            }
        }
    }
}

/// The outcome of checking a matrix against a set of partition conditions.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub(crate) fn check_unit_interval(m: &MembershipMatrix, out: &mut Vec<Violation>) {
    for i in 0..m.clusters() {
        for (element, &value) in m.row(i).iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                out.push(Violation::OutOfUnitInterval {
                    cluster: i,
                    element,
                    value,
                });
            }
        }
    }
}

pub(crate) fn check_column_sums_one(m: &MembershipMatrix, tol: f64, out: &mut Vec<Violation>) {
    for element in 0..m.elements() {
        let sum = m.column_sum(element);
        if (sum - 1.0).abs() > tol {
            out.push(Violation::ColumnSumNotOne { element, sum });
        }
    }
}

pub(crate) fn check_row_sums(m: &MembershipMatrix, out: &mut Vec<Violation>) {
    let n = m.elements() as f64;
    for cluster in 0..m.clusters() {
        let sum = m.row_sum(cluster);
        if !(sum > 0.0 && sum < n) {
            out.push(Violation::RowSumOutOfRange { cluster, sum });
        }
    }
}
