mod common;

use possclust::crisp::objective;
use possclust::{
    crisp_assign, distance, euclidean_distance, fuzzy_memberships, lloyd_iterate, quartiles,
    run_possibilistic_pipeline, squared_euclidean_distance, validate_fuzzy, validate_possibilistic,
    CentroidSet, Dataset, Metric, Point, DEFAULT_TIE_TOL,
};
use proptest::prelude::*;

fn coords(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-100.0..100.0f64, dim)
}

fn point_pair() -> impl Strategy<Value = (Point, Point)> {
    (1usize..6)
        .prop_flat_map(|d| (coords(d), coords(d)))
        .prop_map(|(a, b)| (Point::new(a).unwrap(), Point::new(b).unwrap()))
}

/// Dataset of `n` points and `c` centroids in `d` dimensions.
fn problem() -> impl Strategy<Value = (Dataset, CentroidSet)> {
    (1usize..5, 1usize..5, 1usize..30).prop_flat_map(|(d, c, n)| {
        (
            prop::collection::vec(coords(d), n),
            prop::collection::vec(coords(d), c),
        )
            .prop_map(|(pts, ctrs)| {
                (
                    Dataset::new(pts.into_iter().map(|p| Point::new(p).unwrap()).collect())
                        .unwrap(),
                    CentroidSet::from_coords(ctrs).unwrap(),
                )
            })
    })
}

fn metric() -> impl Strategy<Value = Metric> {
    prop_oneof![Just(Metric::Euclidean), Just(Metric::SquaredEuclidean)]
}

proptest! {
    #[test]
    fn squared_is_euclidean_squared((a, b) in point_pair()) {
        let e = euclidean_distance(&a, &b).unwrap();
        let s = squared_euclidean_distance(&a, &b).unwrap();
        prop_assert!((s - e * e).abs() <= 1e-12 * s.max(1e-300));
    }

    #[test]
    fn distances_are_symmetric((a, b) in point_pair(), m in metric()) {
        prop_assert_eq!(distance(m, &a, &b).unwrap(), distance(m, &b, &a).unwrap());
    }

    #[test]
    fn scale_equivariance((a, b) in point_pair(), s in 0.01..100.0f64) {
        let (sa, sb) = (a.scaled(s).unwrap(), b.scaled(s).unwrap());
        let e = euclidean_distance(&a, &b).unwrap();
        let q = squared_euclidean_distance(&a, &b).unwrap();
        prop_assert!((euclidean_distance(&sa, &sb).unwrap() - s * e).abs() <= 1e-9 * (1.0 + s * e));
        prop_assert!((squared_euclidean_distance(&sa, &sb).unwrap() - s * s * q).abs() <= 1e-9 * (1.0 + s * s * q));
    }

    #[test]
    fn translation_invariance((a, b) in point_pair(), shift in -50.0..50.0f64) {
        let off = vec![shift; a.dim()];
        let (ta, tb) = (a.translated(&off).unwrap(), b.translated(&off).unwrap());
        let e = euclidean_distance(&a, &b).unwrap();
        prop_assert!((euclidean_distance(&ta, &tb).unwrap() - e).abs() <= 1e-9 * (1.0 + e));
    }

    #[test]
    fn crisp_partitions_validate((ds, c) in problem(), m in metric()) {
        let part = crisp_assign(&ds, &c, m, DEFAULT_TIE_TOL).unwrap();
        // with c = 1 or an unreached cluster the row-sum condition legitimately fails
        let reached = (0..c.len()).all(|i| part.assignment().contains(&i));
        if c.len() > 1 && reached && ds.len() > 1 {
            prop_assert!(part.validate().is_valid());
        }
        for (k, set) in part.tie_sets().iter().enumerate() {
            prop_assert!(set.contains(&part.assignment()[k]));
            prop_assert_eq!(part.matrix().column_sum(k), 1.0);
        }
    }

    #[test]
    fn two_cluster_closed_form((ds, _) in problem(), m in metric(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let c = common::random_centroids(&mut rng, 2, ds.dim());
        let u = fuzzy_memberships(&ds, &c, m).unwrap();
        for (k, p) in ds.iter().enumerate() {
            let d1 = distance(m, p, &c[0]).unwrap();
            let d2 = distance(m, p, &c[1]).unwrap();
            prop_assume!(d1 > 0.0 && d2 > 0.0);
            prop_assert!((u.get(0, k) - d2 / (d1 + d2)).abs() <= 1e-12);
        }
    }

    #[test]
    fn fuzzy_columns_and_order((ds, c) in problem(), m in metric()) {
        let u = fuzzy_memberships(&ds, &c, m).unwrap();
        for (k, p) in ds.iter().enumerate() {
            prop_assert!((u.column_sum(k) - 1.0).abs() <= 1e-12);
            let d: Vec<f64> = c.centers().iter().map(|ctr| distance(m, p, ctr).unwrap()).collect();
            for i in 0..c.len() {
                for j in 0..c.len() {
                    prop_assert_eq!(u.get(i, k) > u.get(j, k), d[i] < d[j]);
                }
            }
        }
        if c.len() > 1 && ds.len() > 1 {
            let v = validate_fuzzy(&u);
            let only_rows = v.violations.iter().all(|x| matches!(x, possclust::Violation::RowSumOutOfRange { .. }));
            prop_assert!(only_rows);
        }
    }

    #[test]
    fn equidistant_elements_split_evenly(c in 1usize..7, r in 0.1..10.0f64, m in metric()) {
        let ctrs = CentroidSet::from_coords((0..c).map(|i| {
            let t = std::f64::consts::TAU * i as f64 / c as f64;
            vec![r * t.cos(), r * t.sin()]
        })).unwrap();
        let origin = Dataset::new(vec![Point::new(vec![0.0, 0.0]).unwrap()]).unwrap();
        let u = fuzzy_memberships(&origin, &ctrs, m).unwrap();
        let ds: Vec<f64> = ctrs.centers().iter().map(|x| distance(m, &origin[0], x).unwrap()).collect();
        // the circle layout only gives equal distances up to rounding
        prop_assume!(ds.iter().all(|&d| d == ds[0]));
        for i in 0..c {
            prop_assert_eq!(u.get(i, 0), 1.0 / c as f64);
        }
    }

    #[test]
    fn membership_scale_invariance((ds, c) in problem(), m in metric(), s in 0.01..100.0f64) {
        let u = fuzzy_memberships(&ds, &c, m).unwrap();
        let v = fuzzy_memberships(&ds.scaled(s).unwrap(), &c.scaled(s).unwrap(), m).unwrap();
        for (a, b) in u.values().iter().zip(v.values()) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn squared_metric_emphasizes(d1 in 0.01..50.0f64, gap in 0.01..50.0f64) {
        let d2 = d1 + gap;
        let ds = Dataset::new(vec![Point::new(vec![0.0]).unwrap()]).unwrap();
        let c = CentroidSet::from_coords([vec![d1], vec![-d2]]).unwrap();
        let e = fuzzy_memberships(&ds, &c, Metric::Euclidean).unwrap();
        let s = fuzzy_memberships(&ds, &c, Metric::SquaredEuclidean).unwrap();
        prop_assert!(s.get(0, 0) > e.get(0, 0));
    }

    #[test]
    fn quartiles_match_depth_oracle(v in prop::collection::vec(-1e3..1e3f64, 1..60)) {
        let (q1, q3) = quartiles(&v).unwrap();
        let (o1, o3) = common::hinges_by_depth(&v);
        prop_assert_eq!((q1, q3), (o1, o3));
        prop_assert!(q1 <= q3);
    }

    #[test]
    fn mirrored_layout_converges_to_mirrored_centers(
        half in prop::collection::vec((0.1..10.0f64, -10.0..10.0f64), 2..20),
        y0 in -5.0..5.0f64,
        x0 in 0.5..8.0f64,
    ) {
        let mut pts = Vec::new();
        for &(x, y) in &half {
            pts.push(Point::new(vec![x, y]).unwrap());
            pts.push(Point::new(vec![-x, y]).unwrap());
        }
        let ds = Dataset::new(pts).unwrap();
        let init = CentroidSet::from_coords([vec![-x0, y0], vec![x0, y0]]).unwrap();
        let r = lloyd_iterate(&ds, &init, Metric::SquaredEuclidean, DEFAULT_TIE_TOL, 100).unwrap();
        prop_assert!(r.converged);
        prop_assert!((r.centroids[0][0] + r.centroids[1][0]).abs() <= 1e-9);
        prop_assert!((r.centroids[0][1] - r.centroids[1][1]).abs() <= 1e-9);
    }

    #[test]
    fn lloyd_fixed_point((ds, c) in problem(), m in metric()) {
        // empty clusters are a reported error, not a property violation
        if let Ok(r) = lloyd_iterate(&ds, &c, m, DEFAULT_TIE_TOL, 200) {
            for w in r.objective_history.windows(2) {
                prop_assert!(w[1] <= w[0] * (1.0 + 1e-12) + 1e-12);
            }
            prop_assert!((objective(&ds, &r.centroids, &r.partition).unwrap()
                - r.objective_history.last().unwrap()).abs() < 1e-9);
            if r.converged {
                let again = crisp_assign(&ds, &r.centroids, m, DEFAULT_TIE_TOL).unwrap();
                prop_assert_eq!(&again, &r.partition);
                let moved = possclust::update_centroids(&ds, &again).unwrap();
                prop_assert_eq!(moved, r.centroids);
            }
        }
    }

    #[test]
    fn fence_flags_are_scale_invariant(seed in any::<u64>(), s in 0.01..100.0f64, m in metric()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (mut pts, ctrs) = common::blobs(&mut rng, 2, 12, 2, 3.0);
        pts.push(Point::new(vec![10.0, 60.0]).unwrap());
        let ds = Dataset::new(pts).unwrap();
        let a = run_possibilistic_pipeline(&ds, &ctrs, m, DEFAULT_TIE_TOL).unwrap();
        let b = run_possibilistic_pipeline(&ds.scaled(s).unwrap(), &ctrs.scaled(s).unwrap(), m, DEFAULT_TIE_TOL).unwrap();
        let f = match m { Metric::Euclidean => s, Metric::SquaredEuclidean => s * s };
        for (x, y) in a.report.elements.iter().zip(&b.report.elements) {
            prop_assert_eq!(x.outlier, y.outlier);
            prop_assert!((y.d_min - f * x.d_min).abs() <= 1e-9 * (1.0 + f * x.d_min));
        }
        for (x, y) in a.stats.iter().zip(&b.stats) {
            prop_assert!((y.w_sup - f * x.w_sup).abs() <= 1e-9 * (1.0 + f * x.w_sup));
        }
        for (x, y) in a.memberships.values().iter().zip(b.memberships.values()) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
        prop_assert!(validate_possibilistic(&a.memberships).is_valid());
    }
}
