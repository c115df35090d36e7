//! Seeded random instances against the x-axis.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zone_core::{Line, Scalar};

use crate::instance::InstanceFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    None,
    /// At least two lines (three once `n >= 3`) through one point of the axis.
    Concurrent,
    /// Horizontal lines on both sides of the axis.
    Horizontal,
    Mixed,
}

impl Degeneracy {
    pub const ALL: [Degeneracy; 4] = [Degeneracy::None, Degeneracy::Concurrent, Degeneracy::Horizontal, Degeneracy::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Degeneracy::None => "none",
            Degeneracy::Concurrent => "concurrent",
            Degeneracy::Horizontal => "horizontal",
            Degeneracy::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Degeneracy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Degeneracy::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| format!("unknown degeneracy `{s}` (expected none, concurrent, horizontal or mixed)"))
    }
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen() { v } else { -v }
}

/// `a·x + b·y + c = 0` with `a != 0`, coefficients in `[-bound, bound]`.
fn slanted(rng: &mut ChaCha8Rng, bound: i64) -> [i64; 3] {
    [nonzero(rng, bound), rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)]
}

/// Lines through `(x0, 0)` need `|a·x0| <= bound`.
fn through(rng: &mut ChaCha8Rng, bound: i64, x0: i64) -> [i64; 3] {
    let a = nonzero(rng, (bound / x0.abs().max(1)).max(1));
    [a, rng.gen_range(-bound..=bound), -a * x0]
}

fn horizontal(rng: &mut ChaCha8Rng, bound: i64, above: bool) -> [i64; 3] {
    let h = rng.gen_range(1..=bound);
    [0, 1, if above { -h } else { h }]
}

/// Deterministic in `(seed, n, bound, degeneracy)`; the query is the x-axis.
/// Duplicate lines may occur.
pub fn generate<T: Scalar>(seed: u64, n: usize, bound: i64, degeneracy: Degeneracy) -> InstanceFile<T> {
    assert!(bound >= 1, "coefficient bound must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<[i64; 3]> = Vec::with_capacity(n);

    let concurrent = matches!(degeneracy, Degeneracy::Concurrent | Degeneracy::Mixed);
    let horizontals = matches!(degeneracy, Degeneracy::Horizontal | Degeneracy::Mixed);
    if horizontals {
        for above in [true, false].into_iter().take(n) {
            coeffs.push(horizontal(&mut rng, bound, above));
        }
        // occasionally more than one per side
        while coeffs.len() < n && rng.gen_ratio(1, 4) {
            let above = rng.gen();
            coeffs.push(horizontal(&mut rng, bound, above));
        }
    }
    if concurrent && n - coeffs.len() >= 2 {
        let room = n - coeffs.len();
        let size = if room >= 3 { rng.gen_range(3..=room.min(6)) } else { 2 };
        let x0 = rng.gen_range(-bound..=bound);
        for _ in 0..size {
            coeffs.push(through(&mut rng, bound, x0));
        }
    }
    while coeffs.len() < n {
        coeffs.push(slanted(&mut rng, bound));
    }
    coeffs.shuffle(&mut rng);

    let lines = coeffs
        .into_iter()
        .enumerate()
        .map(|(id, [a, b, c])| Line::from_i64(a, b, c, id).expect("generated lines are not degenerate"))
        .collect();
    InstanceFile {
        query: Line::x_axis().with_source(usize::MAX),
        lines,
    }
}
