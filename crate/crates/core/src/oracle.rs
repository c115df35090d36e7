//! Brute-force reference construction.
//!
//! A point above the axis lies in cell `i` iff it is right of (or on) the
//! first `i` half-lines and left of (or on) the rest. Each cell is computed
//! by clipping the upper half-plane against those `n` constraints, one at
//! a time, in homogeneous coordinates so that unbounded cells stay exact.
//! Nothing here consults the forests or chains of the engine.

use std::fmt;

use crate::canonical::canonicalize;
use crate::cell::{Cap, Cell, ChainPiece, Zone, ZoneStats};
use crate::error::ZoneError;
use crate::geometry::{Direction, HalfLine, Line, Point, Side};
use crate::region::{Boundary, BoundaryItem, Corner};
use crate::scalar::Scalar;

/// Homogeneous point `(x, y, w)` with `w >= 0`; `w = 0` is a point at
/// infinity in direction `(x, y)`.
type Hom<T> = [T; 3];

fn dot<T: Scalar>(h: &Hom<T>, p: &Hom<T>) -> T {
    h[0].clone() * p[0].clone() + h[1].clone() * p[1].clone() + h[2].clone() * p[2].clone()
}

fn normalize<T: Scalar>(p: Hom<T>) -> Hom<T> {
    let [x, y, w] = p;
    if !w.is_zero() {
        [x / w.clone(), y / w, T::one()]
    } else {
        let d = Direction::new(x, y);
        [d.dx, d.dy, T::zero()]
    }
}

/// Keeps the part of the convex polygon where `h·p >= 0`.
fn clip<T: Scalar>(poly: &[Hom<T>], h: &Hom<T>) -> Vec<Hom<T>> {
    let vals: Vec<T> = poly.iter().map(|p| dot(h, p)).collect();
    let mut out = Vec::with_capacity(poly.len() + 1);
    for k in 0..poly.len() {
        let next = (k + 1) % poly.len();
        let (vp, vq) = (&vals[k], &vals[next]);
        if !vp.is_negative() {
            out.push(poly[k].clone());
        }
        if (vp.is_positive() && vq.is_negative()) || (vp.is_negative() && vq.is_positive()) {
            let (ap, aq) = (vq.abs(), vp.abs());
            let r = [0, 1, 2].map(|c| ap.clone() * poly[k][c].clone() + aq.clone() * poly[next][c].clone());
            out.push(normalize(r));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Half-lines ordered by their x-coordinate at a height `ε` below every
/// crossing above the axis.
pub fn oracle_order<T: Scalar>(lines: &[Line<T>], side: Side) -> Vec<HalfLine<T>> {
    let half: Vec<HalfLine<T>> = lines
        .iter()
        .map(|l| HalfLine::new(l.clone(), side).expect("oracle lines are not horizontal"))
        .collect();
    let mut eps = T::one();
    for (a, ha) in half.iter().enumerate() {
        for hb in &half[a + 1..] {
            if let Some(y) = ha.crossing_height(hb) {
                if y.is_positive() && y < eps {
                    eps = y;
                }
            }
        }
    }
    let eps = eps / T::from_i64(2);
    let mut keyed: Vec<(T, HalfLine<T>)> = half.into_iter().map(|h| (h.x_at(&eps), h)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(keyed.windows(2).all(|w| w[0].0 < w[1].0));
    keyed.into_iter().map(|(_, h)| h).collect()
}

/// Cell `i` of the upper half-plane (working frame) by incremental clipping.
pub fn oracle_cell<T: Scalar>(
    i: usize,
    order: &[HalfLine<T>],
    side: Side,
    y_star: Option<&T>,
) -> Result<Cell<T>, ZoneError> {
    let n = order.len();
    assert!(i <= n, "cell index out of range");
    if n == 0 {
        let cap = y_star.map(|y| Cap { from: None, to: None, height: y.clone() });
        return Ok(Cell::new(0, side, None, None, ChainPiece::empty(), ChainPiece::empty(), None, cap));
    }
    let (zero, one) = (T::zero(), T::one());
    let mut poly: Vec<Hom<T>> = vec![
        [-one.clone(), zero.clone(), zero.clone()],
        [zero.clone(), zero.clone(), one.clone()],
        [one.clone(), zero.clone(), zero.clone()],
        [zero.clone(), one.clone(), zero.clone()],
    ];
    for (j, h) in order.iter().enumerate() {
        // right of: x - run·y - intercept·w >= 0
        let right = [one.clone(), -h.run.clone(), -h.intercept.clone()];
        let constraint = if j < i { right } else { right.map(|c| -c) };
        poly = clip(&poly, &constraint);
        if poly.is_empty() {
            return Err(ZoneError::EmptyCell { index: i, side });
        }
    }
    if let Some(y) = y_star {
        poly = clip(&poly, &[zero.clone(), -one.clone(), y.clone()]);
    }
    let corners: Vec<Corner<T>> = poly
        .into_iter()
        .map(|[x, y, w]| {
            if w.is_zero() {
                Corner::Ideal(Direction::new(x, y))
            } else {
                Corner::Finite(Point::new(x, y))
            }
        })
        .collect();
    let boundary = Boundary::from_corners(corners).ok_or(ZoneError::EmptyCell { index: i, side })?;
    if !boundary.is_convex() {
        return Err(ZoneError::EmptyCell { index: i, side });
    }
    let base_from = (i > 0).then(|| order[i - 1].anchor.clone());
    let base_to = (i < n).then(|| order[i].anchor.clone());
    Cell::from_boundary(i, side, base_from, base_to, boundary)
}

/// Zone by brute force; cubic in `n`, intended for small instances.
pub fn oracle_zone<T: Scalar>(query: &Line<T>, input: &[Line<T>]) -> Result<Zone<T>, ZoneError> {
    let inst = canonicalize(query, input)?;
    let mut sides = Vec::new();
    for side in [Side::Above, Side::Below] {
        let order = oracle_order(&inst.working_lines(side), side);
        let clip_height = inst.clip_height(side);
        let map = inst.working_to_original(side);
        let cells = (0..=order.len())
            .map(|i| oracle_cell(i, &order, side, clip_height.as_ref()).map(|c| c.transform(&map)))
            .collect::<Result<Vec<_>, _>>()?;
        sides.push(cells);
    }
    let lower = sides.pop().unwrap();
    let upper = sides.pop().unwrap();
    let stats = ZoneStats {
        n: inst.n(),
        upper_edges: upper.iter().map(Cell::edge_count).sum(),
        lower_edges: lower.iter().map(Cell::edge_count).sum(),
        clipped_above: inst.horizontals_above.is_some(),
        clipped_below: inst.horizontals_below.is_some(),
        duplicates: inst.duplicates.len(),
        shadowed_horizontals: inst.shadowed_horizontals.len(),
        ..ZoneStats::default()
    };
    Ok(Zone { n: inst.n(), upper, lower, stats, faces: None })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Divergence {
    Structure(String),
    Cell {
        index: usize,
        side: Side,
        field: &'static str,
        left: String,
        right: String,
    },
}

/// Differences between two zones; empty iff they agree cell by cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffReport {
    pub divergences: Vec<Divergence>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.divergences.is_empty()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "zones agree");
        }
        for d in &self.divergences {
            match d {
                Divergence::Structure(what) => writeln!(f, "structural mismatch: {what}")?,
                Divergence::Cell { index, side, field, left, right } => {
                    writeln!(f, "cell {index} ({side}) differs in {field}:")?;
                    writeln!(f, "  left:  {left}")?;
                    writeln!(f, "  right: {right}")?;
                }
            }
        }
        Ok(())
    }
}

fn show_end<T: Scalar>(p: &Option<Point<T>>, inf: &str) -> String {
    p.as_ref().map_or_else(|| inf.to_string(), |p| p.to_string())
}

pub fn show_boundary<T: Scalar>(b: &Boundary<T>) -> String {
    let items: Vec<String> = b
        .items
        .iter()
        .map(|item| match item {
            BoundaryItem::Vertex(p) => p.to_string(),
            BoundaryItem::Ray(r) => format!("ray {} → ({}, {})", r.origin, r.dir.dx, r.dir.dy),
        })
        .collect();
    format!("{}[{}]", if b.bounded { "bounded " } else { "" }, items.join(", "))
}

/// Compares two zones of the same instance, reporting the first divergence.
pub fn diff<T: Scalar>(a: &Zone<T>, b: &Zone<T>) -> DiffReport {
    let mut report = DiffReport::default();
    if a.n != b.n || a.upper.len() != b.upper.len() || a.lower.len() != b.lower.len() {
        report.divergences.push(Divergence::Structure(format!(
            "n = {} with {}+{} cells vs n = {} with {}+{} cells",
            a.n,
            a.upper.len(),
            a.lower.len(),
            b.n,
            b.upper.len(),
            b.lower.len()
        )));
        return report;
    }
    for side in [Side::Above, Side::Below] {
        for (ca, cb) in a.cells(side).iter().zip(b.cells(side)) {
            let divergence = |field, left, right| Divergence::Cell { index: ca.index, side, field, left, right };
            let found = if ca.index != cb.index || ca.side != cb.side {
                Some(divergence("index", format!("{} {}", ca.index, ca.side), format!("{} {}", cb.index, cb.side)))
            } else if ca.base_from != cb.base_from || ca.base_to != cb.base_to {
                Some(divergence(
                    "base",
                    format!("{} .. {}", show_end(&ca.base_from, "-inf"), show_end(&ca.base_to, "+inf")),
                    format!("{} .. {}", show_end(&cb.base_from, "-inf"), show_end(&cb.base_to, "+inf")),
                ))
            } else if ca.boundary != cb.boundary {
                Some(divergence("boundary", show_boundary(&ca.boundary), show_boundary(&cb.boundary)))
            } else {
                None
            };
            if let Some(d) = found {
                report.divergences.push(d);
                return report;
            }
        }
    }
    report
}

/// Top of each half-line's segment in the forward and backward forests,
/// by the direct rule: walking up from its intercept, a half-line stops at
/// its first crossing with an earlier (forward) or later (backward)
/// half-line of `order`. `None` means it never stops. Quadratic.
pub fn naive_forests<T: Scalar>(order: &[HalfLine<T>]) -> (Vec<Option<T>>, Vec<Option<T>>) {
    let n = order.len();
    let mut forward: Vec<Option<T>> = vec![None; n];
    let mut backward: Vec<Option<T>> = vec![None; n];
    let lower = |slot: &mut Option<T>, y: &T| {
        if slot.as_ref().is_none_or(|t| y < t) {
            *slot = Some(y.clone());
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            if let Some(y) = order[i].crossing_height(&order[j]) {
                if y.is_positive() {
                    lower(&mut forward[j], &y);
                    lower(&mut backward[i], &y);
                }
            }
        }
    }
    (forward, backward)
}

/// [`naive_forests`] for a single half-line: linear instead of quadratic.
pub fn naive_top<T: Scalar>(order: &[HalfLine<T>], l: usize, kind: crate::engine::ForestKind) -> Option<T> {
    let others = match kind {
        crate::engine::ForestKind::Forward => &order[..l],
        crate::engine::ForestKind::Backward => &order[l + 1..],
    };
    others
        .iter()
        .filter_map(|h| order[l].crossing_height(h))
        .filter(|y| y.is_positive())
        .min()
}

/// Checks that on every half-line the edges of `forest` are disjoint and
/// cover one segment starting at the axis; returns the top of each
/// segment (`None` when it runs to infinity).
pub fn forest_coverage<T: Scalar>(
    order: &[HalfLine<T>],
    forest: &crate::engine::Forest<T>,
) -> Result<Vec<Option<T>>, String> {
    let mut pieces: Vec<Vec<(T, Option<T>)>> = vec![Vec::new(); order.len()];
    for chain in &forest.chains {
        for (k, &l) in chain.edge_lines.iter().enumerate() {
            pieces[l].push((chain.vertices[k].y.clone(), chain.vertices.get(k + 1).map(|p| p.y.clone())));
        }
    }
    let mut tops = Vec::with_capacity(order.len());
    for (l, mut segs) in pieces.into_iter().enumerate() {
        segs.sort();
        let mut reach = T::zero();
        let mut open = false;
        for (lo, hi) in segs {
            if open || lo != reach {
                return Err(format!(
                    "half-line {l}: piece starting at {lo} does not continue coverage ending at {reach}"
                ));
            }
            match hi {
                Some(h) => reach = h,
                None => open = true,
            }
        }
        tops.push(if open { None } else { Some(reach) });
    }
    Ok(tops)
}

/// Compares the coverage of one half-line against the direct rule.
pub fn top_mismatch<T: Scalar>(l: usize, covered: &Option<T>, expected: &Option<T>) -> Result<(), String> {
    if covered == expected {
        return Ok(());
    }
    let show = |t: &Option<T>| t.as_ref().map_or("+inf".to_string(), T::to_string);
    Err(format!(
        "half-line {l}: chains cover up to {}, direct rule gives {}",
        show(covered),
        show(expected)
    ))
}

/// Checks that the chains of `forest` are edge-disjoint and together cover
/// exactly the segments given by [`naive_forests`].
pub fn forest_diff<T: Scalar>(
    order: &[HalfLine<T>],
    forest: &crate::engine::Forest<T>,
    tops: &[Option<T>],
) -> Result<(), String> {
    let covered = forest_coverage(order, forest)?;
    for (l, (c, t)) in covered.iter().zip(tops).enumerate() {
        top_mismatch(l, c, t)?;
    }
    Ok(())
}
