//! Table emission.
//!
//! CSV output is one element table followed by mode-specific sections, each
//! preceded by a blank line. Distances, coordinates and fence statistics are
//! rounded half-up to 3 decimals and memberships to 2, unless full precision
//! is requested. JSON always carries full precision.

use possclust::{ClusterStats, MembershipMatrix};
use serde::Serialize;

use crate::config::{CentroidSpec, Mode};
use crate::run::{Analysis, Stage};

const DIST_DIGITS: usize = 3;
const MEMBERSHIP_DIGITS: usize = 2;

/// Rounds half away from zero to `digits` decimals.
pub fn round_half_up(x: f64, digits: usize) -> String {
    let scale = 10f64.powi(digits as i32);
    let r = (x * scale).round() / scale;
    // avoid "-0.000"
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:.digits$}")
}

struct Fmt {
    full: bool,
}

impl Fmt {
    fn num(&self, x: f64, digits: usize) -> String {
        if self.full {
            x.to_string()
        } else {
            round_half_up(x, digits)
        }
    }

    fn dist(&self, x: f64) -> String {
        self.num(x, DIST_DIGITS)
    }

    fn memb(&self, x: f64) -> String {
        self.num(x, MEMBERSHIP_DIGITS)
    }
}

fn one_based(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join("|")
}

fn write_row(w: &mut csv::Writer<Vec<u8>>, row: &[String]) {
    w.write_record(row).expect("writing to memory");
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is UTF-8")
}

fn new_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

pub fn render_csv(a: &Analysis, full_precision: bool) -> String {
    let f = Fmt {
        full: full_precision,
    };
    let mut w = new_writer();
    let c = a.centroids.len();
    let dim = a.dataset.dim();
    let fuzzy: &MembershipMatrix = match &a.stage {
        Stage::Possibilistic(run) => &run.fuzzy,
        _ => a.memberships(),
    };

    let mut header = vec!["label".to_string()];
    header.extend((1..=dim).map(|j| format!("x{j}")));
    for i in 1..=c {
        header.extend((1..=dim).map(|j| format!("c{i}_x{j}")));
    }
    header.extend((1..=c).map(|i| format!("d{i}")));
    header.extend((1..=c).map(|i| format!("u{i}")));
    match &a.stage {
        Stage::Crisp => header.extend(["cluster".into(), "ties".into()]),
        Stage::Fuzzy(_) => {}
        Stage::Possibilistic(_) => {
            header.extend(["d_min", "nearest", "ambiguous", "outlier"].map(String::from));
            header.extend((1..=c).map(|i| format!("p{i}")));
            header.push("typicality".into());
        }
    }
    write_row(&mut w, &header);

    for (k, p) in a.dataset.iter().enumerate() {
        let mut row = vec![a.dataset.label_or_default(k)];
        row.extend(p.coords().iter().map(|&x| f.dist(x)));
        for center in a.centroids.centers() {
            row.extend(center.coords().iter().map(|&x| f.dist(x)));
        }
        row.extend(a.distances.iter().map(|d| f.dist(d[k])));
        row.extend((0..c).map(|i| f.memb(fuzzy.get(i, k))));
        match &a.stage {
            Stage::Crisp => {
                let part = &a
                    .lloyd
                    .as_ref()
                    .expect("crisp runs keep their Lloyd result")
                    .partition;
                row.push((part.assignment()[k] + 1).to_string());
                row.push(one_based(&part.tie_sets()[k]));
            }
            Stage::Fuzzy(_) => {}
            Stage::Possibilistic(run) => {
                let e = &run.report.elements[k];
                row.push(f.dist(e.d_min));
                row.push(one_based(&e.nearest));
                row.push(e.ambiguous.to_string());
                row.push(e.outlier.to_string());
                row.extend((0..c).map(|i| f.memb(run.memberships.get(i, k))));
                row.push(f.num(e.typicality, 4));
            }
        }
        write_row(&mut w, &row);
    }

    let mut sections = vec![finish(w)];

    if let Some(l) = &a.lloyd {
        let mut w = new_writer();
        write_row(
            &mut w,
            &["iterations", "converged", "objective"].map(String::from),
        );
        let objective = l.objective_history.last().copied().unwrap_or(f64::NAN);
        write_row(
            &mut w,
            &[
                l.iterations.to_string(),
                l.converged.to_string(),
                f.dist(objective),
            ],
        );
        sections.push(finish(w));
    }

    if let Stage::Possibilistic(run) = &a.stage {
        let mut w = new_writer();
        write_row(
            &mut w,
            &[
                "cluster",
                "members",
                "clust_d_max",
                "q1",
                "q3",
                "iqr",
                "w_sup",
            ]
            .map(String::from),
        );
        for s in &run.stats {
            write_row(
                &mut w,
                &[
                    (s.cluster_index + 1).to_string(),
                    s.d_min_series.len().to_string(),
                    f.dist(s.clust_d_max),
                    f.dist(s.q1),
                    f.dist(s.q3),
                    f.dist(s.iqr),
                    f.dist(s.w_sup),
                ],
            );
        }
        sections.push(finish(w));
        let mut w = new_writer();
        write_row(&mut w, &["d_typic".to_string(), f.dist(run.report.d_typic)]);
        sections.push(finish(w));
    }

    sections.join("\n")
}

#[derive(Serialize)]
struct JsonPoint<'a> {
    label: String,
    coords: &'a [f64],
}

#[derive(Serialize)]
struct JsonConfig {
    input: String,
    mode: Mode,
    metric: &'static str,
    clusters: usize,
    centroids: &'static str,
    tie_tol: f64,
    max_iters: usize,
}

#[derive(Serialize)]
struct JsonStats<'a> {
    cluster: usize,
    d_min_series: &'a [(usize, f64)],
    clust_d_max: f64,
    q1: f64,
    q3: f64,
    iqr: f64,
    w_sup: f64,
}

impl<'a> From<&'a ClusterStats> for JsonStats<'a> {
    fn from(s: &'a ClusterStats) -> Self {
        JsonStats {
            cluster: s.cluster_index,
            d_min_series: &s.d_min_series,
            clust_d_max: s.clust_d_max,
            q1: s.q1,
            q3: s.q3,
            iqr: s.iqr,
            w_sup: s.w_sup,
        }
    }
}

#[derive(Serialize)]
struct JsonElement<'a> {
    d_min: f64,
    nearest: &'a [usize],
    ambiguous: bool,
    outlier: bool,
    typicality: f64,
    d_atipic: Option<f64>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    d_typic: f64,
    outliers: Vec<usize>,
    elements: Vec<JsonElement<'a>>,
}

#[derive(Serialize)]
struct JsonLloyd<'a> {
    iterations: usize,
    converged: bool,
    objective_history: &'a [f64],
    assignment: &'a [usize],
    tie_sets: &'a [Vec<usize>],
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    dataset: Vec<JsonPoint<'a>>,
    config: JsonConfig,
    centroids: Vec<&'a [f64]>,
    regime: &'static str,
    distances: &'a [Vec<f64>],
    memberships: Vec<&'a [f64]>,
    fuzzy_memberships: Option<Vec<&'a [f64]>>,
    cluster_stats: Vec<JsonStats<'a>>,
    outlier_report: Option<JsonReport<'a>>,
    lloyd: Option<JsonLloyd<'a>>,
}

pub fn render_json(a: &Analysis) -> String {
    let cfg = &a.config;
    let m = a.memberships();
    let (fuzzy, stats, report) = match &a.stage {
        Stage::Possibilistic(run) => (
            Some(run.fuzzy.rows().collect()),
            run.stats.iter().map(JsonStats::from).collect(),
            Some(JsonReport {
                d_typic: run.report.d_typic,
                outliers: run.report.outliers().collect(),
                elements: run
                    .report
                    .elements
                    .iter()
                    .map(|e| JsonElement {
                        d_min: e.d_min,
                        nearest: &e.nearest,
                        ambiguous: e.ambiguous,
                        outlier: e.outlier,
                        typicality: e.typicality,
                        d_atipic: e.rescale.map(|r| r.d_atipic),
                    })
                    .collect(),
            }),
        ),
        _ => (None, Vec::new(), None),
    };
    let doc = JsonDoc {
        dataset: a
            .dataset
            .iter()
            .enumerate()
            .map(|(k, p)| JsonPoint {
                label: a.dataset.label_or_default(k),
                coords: p.coords(),
            })
            .collect(),
        config: JsonConfig {
            input: cfg.input.to_string(),
            mode: cfg.mode,
            metric: cfg.metric.name(),
            clusters: a.centroids.len(),
            centroids: match cfg.centroids {
                CentroidSpec::Explicit(_) => "explicit",
                CentroidSpec::FirstK => "first-k",
                CentroidSpec::Default => "default",
            },
            tie_tol: cfg.tie_tol,
            max_iters: cfg.max_iters,
        },
        centroids: a.centroids.centers().iter().map(|p| p.coords()).collect(),
        regime: m.regime().name(),
        distances: &a.distances,
        memberships: m.rows().collect(),
        fuzzy_memberships: fuzzy,
        cluster_stats: stats,
        outlier_report: report,
        lloyd: a.lloyd.as_ref().map(|l| JsonLloyd {
            iterations: l.iterations,
            converged: l.converged,
            objective_history: &l.objective_history,
            assignment: l.partition.assignment(),
            tie_sets: l.partition.tie_sets(),
        }),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializing plain data");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_half_up(2.6705, 3), "2.671");
        assert_eq!(round_half_up(0.125, 2), "0.13");
        assert_eq!(round_half_up(-0.0001, 3), "0.000");
        assert_eq!(round_half_up(10.878, 3), "10.878");
    }
}
