//! The worked example: ten points symmetric about `x = 0`, an equidistant
//! point `z11` at the origin and a far point `z12` at `(0, 7)`.
//!
//! Elements are stored in the row order of the reference tables
//! (`z1..z5`, `z11`, `z12`, `z6..z10`).

use alloc::vec::Vec;

use crate::geometry::{CentroidSet, Dataset, Point};

pub const POINTS: [(&str, [f64; 2]); 12] = [
    ("z1", [-6.0, 0.0]),
    ("z2", [-4.0, 2.0]),
    ("z3", [-4.0, 0.0]),
    ("z4", [-4.0, -2.0]),
    ("z5", [-2.0, 0.0]),
    ("z11", [0.0, 0.0]),
    ("z12", [0.0, 7.0]),
    ("z6", [2.0, 0.0]),
    ("z7", [4.0, 2.0]),
    ("z8", [4.0, 0.0]),
    ("z9", [4.0, -2.0]),
    ("z10", [6.0, 0.0]),
];

/// Centers of the symmetric eleven-point layout, as printed (two decimals).
pub const SYMMETRIC_CENTERS: [[f64; 2]; 2] = [[-3.33, 0.0], [3.33, 0.0]];

/// Centers once `z12` is present, as printed (five decimals).
pub const OUTLIER_CENTERS: [[f64; 2]; 2] = [[-2.85714, 1.0], [2.85714, 1.0]];

/// Initial crisp centers, located on `z3` and `z8`.
pub const CRISP_CENTERS: [[f64; 2]; 2] = [[-4.0, 0.0], [4.0, 0.0]];

fn build(keep: impl Fn(&str) -> bool) -> Dataset {
    let points: Vec<Point> = POINTS
        .iter()
        .filter(|(l, _)| keep(l))
        .map(|(l, c)| Point::labeled(*l, c.to_vec()).expect("fixture coordinates are finite"))
        .collect();
    Dataset::new(points).expect("fixture is a valid dataset")
}

fn centers(rows: &[[f64; 2]; 2]) -> CentroidSet {
    CentroidSet::from_coords(rows.iter().map(|r| r.to_vec())).expect("fixture centers are valid")
}

/// All twelve points.
pub fn paper_dataset() -> Dataset {
    build(|_| true)
}

/// `z1..z11` (no far point).
pub fn symmetric_subset() -> Dataset {
    build(|l| l != "z12")
}

/// `z1..z10` (the purely symmetric two-group layout).
pub fn crisp_subset() -> Dataset {
    build(|l| l != "z11" && l != "z12")
}

pub fn symmetric_centroids() -> CentroidSet {
    centers(&SYMMETRIC_CENTERS)
}

pub fn outlier_centroids() -> CentroidSet {
    centers(&OUTLIER_CENTERS)
}

pub fn crisp_centroids() -> CentroidSet {
    centers(&CRISP_CENTERS)
}
