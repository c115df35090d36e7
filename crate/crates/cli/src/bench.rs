//! Scaling benchmark: sorting and the post-sort phase timed separately.

use std::fmt::Write;
use std::time::{Duration, Instant};

use serde::Serialize;
use zone_core::canonical::canonicalize;
use zone_core::engine::{sort_and_orient, upper_zone_sorted, NoTrace};
use zone_core::{FastRational, Side};

use crate::generate::{generate, Degeneracy};

/// Coefficient bound of benchmark instances; keeps 128-bit rationals exact.
pub const BENCH_BOUND: i64 = 1000;

#[derive(Clone, Debug, Serialize)]
pub struct Trial {
    pub seed: u64,
    pub sort_secs: f64,
    pub post_sort_secs: f64,
    /// Scan steps plus merge events on the busier side.
    pub traversed: usize,
    pub zone_edges: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SizeRecord {
    pub n: usize,
    pub trials: Vec<Trial>,
    pub median_sort_secs: f64,
    pub median_post_sort_secs: f64,
    pub max_traversed_per_n: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub sizes: Vec<SizeRecord>,
    /// Least-squares slope of log(post-sort time) against log(n); needs two sizes.
    pub slope: Option<f64>,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 { v[m] } else { (v[m - 1] + v[m]) / 2.0 }
}

pub fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let k = points.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.ln())).unzip();
    let (mx, my) = (lx.iter().sum::<f64>() / k, ly.iter().sum::<f64>() / k);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Each timing is the best of `repeats` runs on the same instance, which
/// filters out scheduler noise without changing what is measured.
pub fn run_trial(n: usize, seed: u64, repeats: usize) -> Trial {
    let inst = generate::<FastRational>(seed, n, BENCH_BOUND, Degeneracy::None);
    let canonical = canonicalize(&inst.query, &inst.lines).expect("generated lines avoid the query");
    let mut sort_time = Duration::MAX;
    let mut post_time = Duration::MAX;
    let mut traversed = 0;
    let mut zone_edges = 0;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let orders = [Side::Above, Side::Below].map(|side| sort_and_orient(&canonical, side));
        sort_time = sort_time.min(start.elapsed());

        let start = Instant::now();
        let [above, below] = orders;
        let up = upper_zone_sorted(above, Side::Above, None, &mut NoTrace).expect("engine invariant");
        let down = upper_zone_sorted(below, Side::Below, None, &mut NoTrace).expect("engine invariant");
        post_time = post_time.min(start.elapsed());

        traversed = (up.scan_steps + up.merge_events).max(down.scan_steps + down.merge_events);
        zone_edges = up.cell_edges() + down.cell_edges();
    }
    Trial {
        seed,
        sort_secs: sort_time.as_secs_f64(),
        post_sort_secs: post_time.as_secs_f64(),
        traversed,
        zone_edges,
    }
}

pub fn bench(sizes: &[usize], trials: usize, seed: u64, repeats: usize) -> BenchReport {
    let mut records = Vec::with_capacity(sizes.len());
    for (k, &n) in sizes.iter().enumerate() {
        let trials: Vec<Trial> = (0..trials.max(1))
            .map(|t| run_trial(n, seed.wrapping_add((k * 1_000_003 + t) as u64), repeats))
            .collect();
        records.push(SizeRecord {
            n,
            median_sort_secs: median(trials.iter().map(|t| t.sort_secs).collect()),
            median_post_sort_secs: median(trials.iter().map(|t| t.post_sort_secs).collect()),
            max_traversed_per_n: trials.iter().map(|t| t.traversed as f64 / n.max(1) as f64).fold(0.0, f64::max),
            trials,
        });
    }
    let points: Vec<(f64, f64)> = records.iter().map(|r| (r.n as f64, r.median_post_sort_secs)).collect();
    BenchReport { slope: fit_slope(&points), sizes: records }
}

impl BenchReport {
    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{:>8} {:>7} {:>12} {:>14} {:>16} {:>12}", "n", "trials", "sort (ms)", "post-sort (ms)", "traversed / n", "zone edges").unwrap();
        for r in &self.sizes {
            let edges = r.trials.iter().map(|t| t.zone_edges).max().unwrap_or(0);
            writeln!(
                out,
                "{:>8} {:>7} {:>12.3} {:>14.3} {:>16.3} {:>12}",
                r.n,
                r.trials.len(),
                r.median_sort_secs * 1e3,
                r.median_post_sort_secs * 1e3,
                r.max_traversed_per_n,
                edges
            )
            .unwrap();
        }
        match self.slope {
            Some(s) => writeln!(out, "log-log slope of post-sort time: {s:.3}").unwrap(),
            None => writeln!(out, "log-log slope of post-sort time: n/a (one size)").unwrap(),
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_power_law() {
        let pts: Vec<(f64, f64)> = [10.0f64, 100.0, 1000.0].iter().map(|&n| (n, 3.0 * n.powf(1.5))).collect();
        assert!((fit_slope(&pts).unwrap() - 1.5).abs() < 1e-9);
        assert_eq!(fit_slope(&pts[..1]), None);
    }

    #[test]
    fn single_size_has_no_slope() {
        let report = bench(&[64], 1, 3, 1);
        assert_eq!(report.sizes.len(), 1);
        assert_eq!(report.sizes[0].trials.len(), 1);
        assert!(report.slope.is_none());
        assert!(report.sizes[0].max_traversed_per_n <= 6.0);
    }
}
