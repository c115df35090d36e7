//! Moves the query line onto the x-axis with a rational affine map.

use std::collections::BTreeMap;

use crate::error::ZoneError;
use crate::geometry::{AffineMap, Line, Side};
use crate::scalar::Scalar;

/// An instance in the frame where the query line is the x-axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalInstance<T> {
    /// Distinct, non-horizontal lines in canonical coordinates, in input
    /// order of first occurrence. `source_id` still refers to the input.
    pub lines: Vec<Line<T>>,
    /// Height of the lowest horizontal line strictly above the axis.
    pub horizontals_above: Option<T>,
    /// Height of the highest horizontal line strictly below the axis.
    pub horizontals_below: Option<T>,
    /// Original → canonical.
    pub forward_map: AffineMap<T>,
    /// Canonical → original.
    pub inverse_map: AffineMap<T>,
    /// `(kept, dropped)` source ids of duplicate input lines.
    pub duplicates: Vec<(usize, usize)>,
    /// Source ids of horizontal lines that lie beyond the nearest one on
    /// their side and so never touch the zone.
    pub shadowed_horizontals: Vec<usize>,
}

impl<T: Scalar> CanonicalInstance<T> {
    pub fn n(&self) -> usize {
        self.lines.len()
    }

    /// Lines in the working frame of `side`: unchanged above, reflected
    /// through the x-axis below.
    pub fn working_lines(&self, side: Side) -> Vec<Line<T>> {
        match side {
            Side::Above => self.lines.clone(),
            Side::Below => self
                .lines
                .iter()
                .map(|l| Line::new(l.a.clone(), -l.b.clone(), l.c.clone(), l.source_id).unwrap())
                .collect(),
        }
    }

    /// Clipping height in the working frame of `side` (always positive).
    pub fn clip_height(&self, side: Side) -> Option<T> {
        match side {
            Side::Above => self.horizontals_above.clone(),
            Side::Below => self.horizontals_below.clone().map(|y| -y),
        }
    }

    /// Working frame of `side` → original coordinates.
    pub fn working_to_original(&self, side: Side) -> AffineMap<T> {
        match side {
            Side::Above => self.inverse_map.clone(),
            Side::Below => self.inverse_map.compose(&AffineMap::reflect_y()),
        }
    }
}

/// Affine map sending `query` onto the x-axis.
///
/// For `a·x + b·y + c = 0` with `b ≠ 0` this is `(x, y) ↦ (x, a·x + b·y + c)`;
/// a vertical query swaps coordinates first.
pub fn query_frame<T: Scalar>(query: &Line<T>) -> AffineMap<T> {
    if !query.b.is_zero() {
        AffineMap {
            m: [[T::one(), T::zero()], [query.a.clone(), query.b.clone()]],
            t: [T::zero(), query.c.clone()],
        }
    } else {
        AffineMap {
            m: [[T::zero(), T::one()], [query.a.clone(), T::zero()]],
            t: [T::zero(), query.c.clone()],
        }
    }
}

pub fn canonicalize<T: Scalar>(
    query: &Line<T>,
    input: &[Line<T>],
) -> Result<CanonicalInstance<T>, ZoneError> {
    let forward_map = query_frame(query);
    let inverse_map = forward_map
        .inverse()
        .expect("query frame is invertible for a non-degenerate query");

    let mut seen: BTreeMap<(T, T, T), usize> = BTreeMap::new();
    let mut duplicates = Vec::new();
    let mut lines = Vec::new();
    let mut above: Vec<(T, usize)> = Vec::new();
    let mut below: Vec<(T, usize)> = Vec::new();

    for line in input {
        if line.same_locus(query) {
            return Err(ZoneError::QueryInArrangement {
                source_id: line.source_id,
            });
        }
        let mapped = inverse_map.pull_back(line);
        let key = (mapped.a.clone(), mapped.b.clone(), mapped.c.clone());
        if let Some(&kept) = seen.get(&key) {
            duplicates.push((kept, line.source_id));
            continue;
        }
        seen.insert(key, line.source_id);
        if mapped.is_horizontal() {
            // b = 1, so the line is y = -c
            let height = -mapped.c.clone();
            if height.is_positive() {
                above.push((height, line.source_id));
            } else {
                below.push((height, line.source_id));
            }
        } else {
            lines.push(mapped);
        }
    }

    above.sort();
    below.sort_by(|x, y| y.cmp(x));
    let shadowed_horizontals = above
        .iter()
        .skip(1)
        .chain(below.iter().skip(1))
        .map(|(_, id)| *id)
        .collect();

    Ok(CanonicalInstance {
        lines,
        horizontals_above: above.first().map(|(h, _)| h.clone()),
        horizontals_below: below.first().map(|(h, _)| h.clone()),
        forward_map,
        inverse_map,
        duplicates,
        shadowed_horizontals,
    })
}
