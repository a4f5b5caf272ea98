#![allow(dead_code)]

use possclust::{CentroidSet, Dataset, Point};
use rand::Rng;

/// Tukey hinges by depth counting, independent of the split-halves routine.
///
/// The median sits at depth `(n + 1) / 2`; each hinge sits at depth
/// `(floor(median depth) + 1) / 2` counted from either end. Half-integer depths
/// average the two neighbours.
pub fn hinges_by_depth(values: &[f64]) -> (f64, f64) {
    let mut v = values.to_vec();
    // selection by repeated minimum extraction keeps this away from `sort`
    let mut sorted = Vec::with_capacity(v.len());
    while !v.is_empty() {
        let (pos, _) =
            v.iter().enumerate().fold(
                (0, f64::INFINITY),
                |(bp, bv), (p, &x)| if x < bv { (p, x) } else { (bp, bv) },
            );
        sorted.push(v.swap_remove(pos));
    }
    let n = sorted.len();
    let median_depth2 = n + 1; // twice the median depth
    let hinge_depth2 = median_depth2 / 2 + 1; // twice the hinge depth
    let at_depth = |d2: usize, from_top: bool| -> f64 {
        let pick = |depth: usize| {
            if from_top {
                sorted[n - depth]
            } else {
                sorted[depth - 1]
            }
        };
        if d2.is_multiple_of(2) {
            pick(d2 / 2)
        } else {
            (pick(d2 / 2) + pick(d2 / 2 + 1)) / 2.0
        }
    };
    (at_depth(hinge_depth2, false), at_depth(hinge_depth2, true))
}

pub fn random_point<R: Rng>(rng: &mut R, dim: usize, lo: f64, hi: f64) -> Point {
    Point::new((0..dim).map(|_| rng.gen_range(lo..hi)).collect()).unwrap()
}

pub fn random_dataset<R: Rng>(rng: &mut R, n: usize, dim: usize) -> Dataset {
    Dataset::new(
        (0..n)
            .map(|_| random_point(rng, dim, -10.0, 10.0))
            .collect(),
    )
    .unwrap()
}

pub fn random_centroids<R: Rng>(rng: &mut R, c: usize, dim: usize) -> CentroidSet {
    CentroidSet::new(
        (0..c)
            .map(|_| random_point(rng, dim, -10.0, 10.0))
            .collect(),
    )
    .unwrap()
}

/// `c` blobs of `per` points within `spread` of well-separated centers.
/// Returns the dataset and the blob centers.
pub fn blobs<R: Rng>(
    rng: &mut R,
    c: usize,
    per: usize,
    dim: usize,
    spread: f64,
) -> (Vec<Point>, CentroidSet) {
    let centers: Vec<Point> = (0..c)
        .map(|i| {
            let mut coords: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            coords[0] += 20.0 * i as f64;
            Point::new(coords).unwrap()
        })
        .collect();
    let mut pts = Vec::new();
    for ctr in &centers {
        for _ in 0..per {
            let coords = ctr
                .coords()
                .iter()
                .map(|x| x + rng.gen_range(-spread..spread))
                .collect();
            pts.push(Point::new(coords).unwrap());
        }
    }
    (pts, CentroidSet::new(centers).unwrap())
}
