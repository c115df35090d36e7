//! Zone cells and the zone itself.

use crate::error::ZoneError;
use crate::geometry::{AffineMap, Direction, Point, Side};
use crate::region::{Boundary, BoundaryItem, Corner};
use crate::scalar::Scalar;

/// A y-monotone piece of a cell boundary, listed from the x-axis upward
/// (in the working frame of the cell's side). The last vertex is the apex
/// or a cap endpoint when the cell is closed off at the top; otherwise the
/// piece continues along `ray`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainPiece<T> {
    pub vertices: Vec<Point<T>>,
    pub ray: Option<Direction<T>>,
}

impl<T: Scalar> ChainPiece<T> {
    pub fn empty() -> Self {
        ChainPiece {
            vertices: Vec::new(),
            ray: None,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1) + usize::from(self.ray.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn transform(&self, map: &AffineMap<T>) -> Self {
        ChainPiece {
            vertices: self.vertices.iter().map(|p| map.apply(p)).collect(),
            ray: self.ray.as_ref().map(|d| map.apply_direction(d)),
        }
    }
}

/// Horizontal edge introduced by clipping at a horizontal input line.
/// `None` ends extend to infinity (left for `from`, right for `to`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cap<T> {
    pub from: Option<Point<T>>,
    pub to: Option<Point<T>>,
    pub height: T,
}

/// One piece `C_i` of the zone on one side of the query line.
///
/// Geometric fields are stored in original coordinates once the cell has
/// left the engine; "left", "right" and "up" refer to the working frame in
/// which the cell was built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell<T> {
    pub index: usize,
    pub side: Side,
    /// Intercept of the line before the cell; `None` is -∞.
    pub base_from: Option<Point<T>>,
    /// Intercept of the line after the cell; `None` is +∞.
    pub base_to: Option<Point<T>>,
    pub left: ChainPiece<T>,
    pub right: ChainPiece<T>,
    pub apex: Option<Point<T>>,
    pub cap: Option<Cap<T>>,
    pub boundary: Boundary<T>,
}

impl<T: Scalar> Cell<T> {
    /// Builds a cell from its pieces, given in the working frame. The pieces
    /// must be strictly convex chains without horizontal edges.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        index: usize,
        side: Side,
        base_from: Option<Point<T>>,
        base_to: Option<Point<T>>,
        left: ChainPiece<T>,
        right: ChainPiece<T>,
        apex: Option<Point<T>>,
        cap: Option<Cap<T>>,
    ) -> Self {
        // Chain edges are never horizontal, so no finite corner is collinear
        // with its neighbours; only repeats (apex, cap ends, a zero-length
        // base) and runs at infinity need simplifying.
        let mut corners: Vec<(Corner<T>, bool)> = Vec::new();
        let mut push = |c: Corner<T>| {
            let known_turn = matches!(c, Corner::Finite(_));
            corners.push((c, known_turn));
        };
        let whole_axis = base_from.is_none() && base_to.is_none();
        push(match &base_from {
            Some(p) => Corner::Finite(p.clone()),
            None => Corner::Ideal(Direction::left()),
        });
        if whole_axis {
            push(Corner::Finite(Point::origin()));
        }
        push(match &base_to {
            Some(p) => Corner::Finite(p.clone()),
            None => Corner::Ideal(Direction::right()),
        });
        right.vertices.iter().cloned().for_each(|p| push(Corner::Finite(p)));
        if let Some(d) = &right.ray {
            push(Corner::Ideal(d.clone()));
        }
        if let Some(q) = &apex {
            push(Corner::Finite(q.clone()));
        }
        if let Some(cap) = &cap {
            push(match &cap.to {
                Some(p) => Corner::Finite(p.clone()),
                None => Corner::Ideal(Direction::right()),
            });
            if cap.from.is_none() && cap.to.is_none() {
                push(Corner::Finite(Point::new(T::zero(), cap.height.clone())));
            }
            push(match &cap.from {
                Some(p) => Corner::Finite(p.clone()),
                None => Corner::Ideal(Direction::left()),
            });
        }
        if let Some(d) = &left.ray {
            push(Corner::Ideal(d.clone()));
        }
        left.vertices.iter().rev().cloned().for_each(|p| push(Corner::Finite(p)));
        let boundary = Boundary::from_marked_corners(corners).expect("a cell always has a finite corner");
        Cell {
            index,
            side,
            base_from,
            base_to,
            left,
            right,
            apex,
            cap,
            boundary,
        }
    }

    /// Recovers the boundary pieces from a boundary walk given in the
    /// working frame. The inverse of [`Cell::new`].
    pub fn from_boundary(
        index: usize,
        side: Side,
        base_from: Option<Point<T>>,
        base_to: Option<Point<T>>,
        boundary: Boundary<T>,
    ) -> Result<Self, ZoneError> {
        let bad = |what: &str| {
            ZoneError::InvariantViolation(format!("cell {index} ({side}): {what}"))
        };
        let mut left = ChainPiece::empty();
        let mut right = ChainPiece::empty();
        let mut apex = None;
        let mut cap = None;

        if base_from.is_none() && base_to.is_none() {
            let comps = boundary.components();
            match comps.len() {
                1 => {}
                2 => {
                    let height = match &comps[1][1] {
                        BoundaryItem::Vertex(p) => p.y.clone(),
                        BoundaryItem::Ray(_) => return Err(bad("malformed strip")),
                    };
                    cap = Some(Cap { from: None, to: None, height });
                }
                _ => return Err(bad("unexpected component count")),
            }
        } else if boundary.bounded {
            let v: Vec<Point<T>> = boundary.vertices().cloned().collect();
            let (Some(from), Some(to)) = (&base_from, &base_to) else {
                return Err(bad("bounded cell with an infinite base"));
            };
            let len = v.len();
            let r = v.iter().position(|p| p == to).ok_or_else(|| bad("base_to not on boundary"))?;
            let mut k = r;
            right.vertices.push(v[k].clone());
            while v[(k + 1) % len].y > v[k].y {
                k = (k + 1) % len;
                right.vertices.push(v[k].clone());
            }
            let next = (k + 1) % len;
            if v[next].y == v[k].y {
                cap = Some(Cap {
                    from: Some(v[next].clone()),
                    to: Some(v[k].clone()),
                    height: v[k].y.clone(),
                });
                k = next;
            } else {
                apex = Some(v[k].clone());
            }
            let mut down = vec![v[k].clone()];
            let mut steps = 0;
            while &v[k] != from {
                k = (k + 1) % len;
                down.push(v[k].clone());
                steps += 1;
                if steps > len {
                    return Err(bad("base_from not on boundary"));
                }
            }
            down.reverse();
            left.vertices = down;
        } else {
            let comps = boundary.components();
            if comps.len() != 1 {
                return Err(bad("unbounded cell with several components"));
            }
            let comp = comps[0];
            let (BoundaryItem::Ray(inc), BoundaryItem::Ray(out)) = (&comp[0], &comp[comp.len() - 1]) else {
                return Err(bad("component without rays"));
            };
            let pts: Vec<Point<T>> = comp[1..comp.len() - 1]
                .iter()
                .map(|i| match i {
                    BoundaryItem::Vertex(p) => Ok(p.clone()),
                    BoundaryItem::Ray(_) => Err(bad("ray inside component")),
                })
                .collect::<Result<_, _>>()?;
            match (&base_from, &base_to) {
                (None, Some(to)) => {
                    if &pts[0] != to {
                        return Err(bad("walk does not start at base_to"));
                    }
                    right.vertices = pts.clone();
                    if out.dir.dy.is_positive() {
                        right.ray = Some(out.dir.clone());
                    } else {
                        let last = pts.last().unwrap().clone();
                        cap = Some(Cap {
                            from: None,
                            height: last.y.clone(),
                            to: Some(last),
                        });
                    }
                }
                (Some(from), None) => {
                    if pts.last() != Some(from) {
                        return Err(bad("walk does not end at base_from"));
                    }
                    left.vertices = pts.iter().rev().cloned().collect();
                    if inc.dir.dy.is_positive() {
                        left.ray = Some(inc.dir.clone());
                    } else {
                        cap = Some(Cap {
                            from: Some(pts[0].clone()),
                            to: None,
                            height: pts[0].y.clone(),
                        });
                    }
                }
                (Some(from), Some(to)) => {
                    let b = pts.iter().position(|p| p == from).ok_or_else(|| bad("base_from missing"))?;
                    let t = if &pts[b] == to { b } else { b + 1 };
                    if pts.get(t) != Some(to) {
                        return Err(bad("base endpoints not adjacent"));
                    }
                    left.vertices = pts[..=b].iter().rev().cloned().collect();
                    left.ray = Some(inc.dir.clone());
                    right.vertices = pts[t..].to_vec();
                    right.ray = Some(out.dir.clone());
                }
                (None, None) => unreachable!(),
            }
        }
        let cell = Cell::new(index, side, base_from, base_to, left, right, apex, cap);
        if cell.boundary != boundary {
            return Err(bad("boundary does not decompose into base, chains and top"));
        }
        Ok(cell)
    }

    /// Boundary edges on input lines (rays included, base and cap excluded).
    pub fn edge_count(&self) -> usize {
        self.left.edge_count() + self.right.edge_count()
    }

    pub fn is_bounded(&self) -> bool {
        self.boundary.bounded
    }

    pub fn transform(&self, map: &AffineMap<T>) -> Self {
        Cell {
            index: self.index,
            side: self.side,
            base_from: self.base_from.as_ref().map(|p| map.apply(p)),
            base_to: self.base_to.as_ref().map(|p| map.apply(p)),
            left: self.left.transform(map),
            right: self.right.transform(map),
            apex: self.apex.as_ref().map(|p| map.apply(p)),
            cap: self.cap.as_ref().map(|c| Cap {
                from: c.from.as_ref().map(|p| map.apply(p)),
                to: c.to.as_ref().map(|p| map.apply(p)),
                height: c.height.clone(),
            }),
            boundary: self.boundary.transform(map),
        }
    }
}

/// A full face of the arrangement meeting the query line, possibly made of
/// an upper and a lower cell joined along their common base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face<T> {
    pub upper: Option<usize>,
    pub lower: Option<usize>,
    /// `None` for the whole plane.
    pub boundary: Option<Boundary<T>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZoneStats {
    pub n: usize,
    /// Edge counts of the forward forest, above and below.
    pub forward_edges: [usize; 2],
    /// Edge counts of the backward forest, above and below.
    pub backward_edges: [usize; 2],
    pub upper_edges: usize,
    pub lower_edges: usize,
    /// Edges popped off the live chain during the scans.
    pub scan_steps: usize,
    /// Chain vertices met by the sweeps intersecting chains.
    pub merge_events: usize,
    pub clipped_above: bool,
    pub clipped_below: bool,
    pub duplicates: usize,
    pub shadowed_horizontals: usize,
}

impl ZoneStats {
    /// `2n - 1`; `None` for `n = 0`.
    pub fn forest_bound(&self) -> Option<usize> {
        (self.n > 0).then(|| 2 * self.n - 1)
    }

    pub fn side_bound(&self) -> Option<usize> {
        (self.n > 0).then(|| 4 * self.n - 2)
    }

    pub fn total_bound(&self) -> Option<usize> {
        (self.n > 0).then(|| 8 * self.n - 4)
    }

    pub fn total_edges(&self) -> usize {
        self.upper_edges + self.lower_edges
    }

    /// Post-sort work: scan steps plus merge pair tests.
    pub fn post_sort_work(&self) -> usize {
        self.scan_steps + self.merge_events
    }

    pub fn forests_within_bound(&self) -> bool {
        match self.forest_bound() {
            Some(b) => self.forward_edges.iter().chain(&self.backward_edges).all(|&e| e <= b),
            None => self.forward_edges.iter().chain(&self.backward_edges).all(|&e| e == 0),
        }
    }

    /// Edge bounds of the zone; only meaningful without clipping.
    pub fn zone_within_bounds(&self) -> bool {
        match (self.side_bound(), self.total_bound()) {
            (Some(s), Some(t)) => {
                self.upper_edges <= s && self.lower_edges <= s && self.total_edges() <= t
            }
            _ => self.total_edges() == 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zone<T> {
    pub n: usize,
    /// `C_0 … C_n` above the query line.
    pub upper: Vec<Cell<T>>,
    /// `C_0 … C_n` below the query line.
    pub lower: Vec<Cell<T>>,
    pub stats: ZoneStats,
    pub faces: Option<Vec<Face<T>>>,
}

impl<T: Scalar> Zone<T> {
    pub fn cells(&self, side: Side) -> &[Cell<T>] {
        match side {
            Side::Above => &self.upper,
            Side::Below => &self.lower,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn p(x: i64, y: i64) -> Point<Rational> {
        Point::from_i64(x, y)
    }

    #[test]
    fn round_trip_through_boundary() {
        // triangle on base (0,0)-(4,0) with apex (2,2)
        let cell = Cell::new(
            1,
            Side::Above,
            Some(p(0, 0)),
            Some(p(4, 0)),
            ChainPiece { vertices: vec![p(0, 0), p(2, 2)], ray: None },
            ChainPiece { vertices: vec![p(4, 0), p(2, 2)], ray: None },
            Some(p(2, 2)),
            None,
        );
        assert!(cell.is_bounded());
        assert_eq!(cell.edge_count(), 2);
        let back = Cell::from_boundary(1, Side::Above, Some(p(0, 0)), Some(p(4, 0)), cell.boundary.clone()).unwrap();
        assert_eq!(back, cell);
    }

    #[test]
    fn capped_cell_round_trip() {
        let cap = Cap { from: Some(p(1, 1)), to: Some(p(3, 1)), height: Rational::from_i64(1) };
        let cell = Cell::new(
            1,
            Side::Above,
            Some(p(0, 0)),
            Some(p(4, 0)),
            ChainPiece { vertices: vec![p(0, 0), p(1, 1)], ray: None },
            ChainPiece { vertices: vec![p(4, 0), p(3, 1)], ray: None },
            None,
            Some(cap),
        );
        assert_eq!(cell.boundary.vertices().count(), 4);
        let back = Cell::from_boundary(1, Side::Above, Some(p(0, 0)), Some(p(4, 0)), cell.boundary.clone()).unwrap();
        assert_eq!(back, cell);
    }

    #[test]
    fn half_plane_and_strip() {
        let whole = Cell::<Rational>::new(0, Side::Above, None, None, ChainPiece::empty(), ChainPiece::empty(), None, None);
        assert_eq!(whole.boundary.components().len(), 1);
        assert_eq!(whole.edge_count(), 0);
        let strip = Cell::new(
            0,
            Side::Above,
            None,
            None,
            ChainPiece::empty(),
            ChainPiece::empty(),
            None,
            Some(Cap { from: None, to: None, height: Rational::from_i64(3) }),
        );
        assert_eq!(strip.boundary.components().len(), 2);
        let back = Cell::from_boundary(0, Side::Above, None, None, strip.boundary.clone()).unwrap();
        assert_eq!(back, strip);
    }
}
