//! The zone construction proper.
//!
//! Per side of the query line: sort the half-lines by intercept, build the
//! forward and backward forests with two linear scans, intersect each
//! adjacent pair of chains with a linear sweep, and read off the cells.
//! The lower side reuses the same code on the instance reflected through
//! the axis.

mod assemble;
mod chains;
mod merge;

pub use assemble::{assemble_cell, clip_horizontal};
pub use chains::{build_chains, Chain, ChainDirection, Forest, ForestKind, NoTrace, ScanObserver};
pub use merge::{chain_intersection, Meeting};

use crate::canonical::{canonicalize, CanonicalInstance};
use crate::cell::{Cell, ChainPiece, Face, Zone, ZoneStats};
use crate::error::ZoneError;
use crate::geometry::{AffineMap, Direction, HalfLine, Line, Point, Side};
use crate::region::{Boundary, Corner};
use crate::scalar::Scalar;

/// Half-lines of `side`, in the working frame of that side, sorted by
/// intercept; concurrent half-lines are ordered by which one is further
/// left just above the axis.
pub fn sort_and_orient<T: Scalar>(inst: &CanonicalInstance<T>, side: Side) -> Vec<HalfLine<T>> {
    let mut order: Vec<HalfLine<T>> = inst
        .working_lines(side)
        .into_iter()
        .map(|l| HalfLine::new(l, side).expect("canonical lines are not horizontal"))
        .collect();
    order.sort_by(|a, b| a.axis_order(b));
    order
}

/// Everything computed for one side, in that side's working frame.
#[derive(Clone, Debug)]
pub struct SideResult<T> {
    pub order: Vec<HalfLine<T>>,
    /// `None` when there are no lines.
    pub forward: Option<Forest<T>>,
    pub backward: Option<Forest<T>>,
    pub cells: Vec<Cell<T>>,
    pub scan_steps: usize,
    pub merge_events: usize,
    pub clipped: bool,
}

impl<T: Scalar> SideResult<T> {
    pub fn forest_edges(&self, kind: ForestKind) -> usize {
        let forest = match kind {
            ForestKind::Forward => &self.forward,
            ForestKind::Backward => &self.backward,
        };
        forest.as_ref().map_or(0, Forest::edge_count)
    }

    pub fn cell_edges(&self) -> usize {
        self.cells.iter().map(Cell::edge_count).sum()
    }
}

pub fn upper_zone<T: Scalar>(inst: &CanonicalInstance<T>, side: Side) -> Result<SideResult<T>, ZoneError> {
    let order = sort_and_orient(inst, side);
    upper_zone_sorted(order, side, inst.clip_height(side).as_ref(), &mut NoTrace)
}

/// The post-sort part of [`upper_zone`]: runs in time linear in the number
/// of half-lines.
pub fn upper_zone_sorted<T: Scalar>(
    order: Vec<HalfLine<T>>,
    side: Side,
    clip: Option<&T>,
    observer: &mut impl ScanObserver<T>,
) -> Result<SideResult<T>, ZoneError> {
    let n = order.len();
    if n == 0 {
        let whole = Cell::new(0, side, None, None, ChainPiece::empty(), ChainPiece::empty(), None, None);
        let cells = match clip {
            Some(y) => clip_horizontal(vec![whole], y),
            None => vec![whole],
        };
        return Ok(SideResult {
            order,
            forward: None,
            backward: None,
            cells,
            scan_steps: 0,
            merge_events: 0,
            clipped: clip.is_some(),
        });
    }

    let (forward, forward_steps) = build_chains(&order, ForestKind::Forward, observer);
    let (backward, backward_steps) = build_chains(&order, ForestKind::Backward, observer);
    let mut merge_events = 0;
    let mut cells = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let left = i.checked_sub(1).map(|k| &forward.chains[k]);
        let right = backward.chains.get(i);
        let meeting = match (left, right) {
            (Some(a), Some(b)) => {
                let m = chain_intersection(a, b, &order, observer);
                merge_events += m.events;
                Some(m)
            }
            _ => None,
        };
        cells.push(assemble_cell(i, side, &order, left, right, meeting.as_ref())?);
    }
    if let Some(y) = clip {
        cells = clip_horizontal(cells, y);
    }
    Ok(SideResult {
        order,
        forward: Some(forward),
        backward: Some(backward),
        cells,
        scan_steps: forward_steps + backward_steps,
        merge_events,
        clipped: clip.is_some(),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ZoneOptions {
    /// Also join upper and lower cells into full faces.
    pub stitch: bool,
}

/// The zone of `query` in the arrangement of `input`.
pub fn zone<T: Scalar>(query: &Line<T>, input: &[Line<T>]) -> Result<Zone<T>, ZoneError> {
    zone_with(query, input, ZoneOptions::default())
}

pub fn zone_with<T: Scalar>(
    query: &Line<T>,
    input: &[Line<T>],
    options: ZoneOptions,
) -> Result<Zone<T>, ZoneError> {
    let inst = canonicalize(query, input)?;
    let above = upper_zone(&inst, Side::Above)?;
    let below = upper_zone(&inst, Side::Below)?;
    Ok(assemble_zone(&inst, &above, &below, options))
}

/// Maps both sides back to original coordinates and fills in statistics.
pub fn assemble_zone<T: Scalar>(
    inst: &CanonicalInstance<T>,
    above: &SideResult<T>,
    below: &SideResult<T>,
    options: ZoneOptions,
) -> Zone<T> {
    let to_original = |side: Side, cells: &[Cell<T>]| {
        let map = inst.working_to_original(side);
        cells.iter().map(|c| c.transform(&map)).collect::<Vec<_>>()
    };
    let stats = ZoneStats {
        n: inst.n(),
        forward_edges: [above.forest_edges(ForestKind::Forward), below.forest_edges(ForestKind::Forward)],
        backward_edges: [above.forest_edges(ForestKind::Backward), below.forest_edges(ForestKind::Backward)],
        upper_edges: above.cell_edges(),
        lower_edges: below.cell_edges(),
        scan_steps: above.scan_steps + below.scan_steps,
        merge_events: above.merge_events + below.merge_events,
        clipped_above: above.clipped,
        clipped_below: below.clipped,
        duplicates: inst.duplicates.len(),
        shadowed_horizontals: inst.shadowed_horizontals.len(),
    };
    let faces = options.stitch.then(|| {
        stitch(&above.cells, &below.cells)
            .into_iter()
            .map(|f| Face {
                boundary: f.boundary.map(|b| b.transform(&inst.inverse_map)),
                ..f
            })
            .collect()
    });
    Zone {
        n: inst.n(),
        upper: to_original(Side::Above, &above.cells),
        lower: to_original(Side::Below, &below.cells),
        stats,
        faces,
    }
}

fn zero_length<T: Scalar>(cell: &Cell<T>) -> bool {
    cell.base_from.is_some() && cell.base_from == cell.base_to
}

fn reflect<T: Scalar>(p: &Point<T>) -> Point<T> {
    Point::new(p.x.clone(), -p.y.clone())
}

fn reflect_dir<T: Scalar>(d: &Direction<T>) -> Direction<T> {
    Direction::new(d.dx.clone(), -d.dy.clone())
}

/// Joins upper and lower cells sharing a base into full faces, in
/// canonical coordinates. Cells on a zero-length base are faces of their own.
fn stitch<T: Scalar>(upper: &[Cell<T>], lower: &[Cell<T>]) -> Vec<Face<T>> {
    let mut faces = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < upper.len() || j < lower.len() {
        if i < upper.len() && zero_length(&upper[i]) {
            faces.push(Face { upper: Some(i), lower: None, boundary: Some(upper[i].boundary.clone()) });
            i += 1;
        } else if j < lower.len() && zero_length(&lower[j]) {
            let boundary = lower[j].boundary.transform(&AffineMap::reflect_y());
            faces.push(Face { upper: None, lower: Some(j), boundary: Some(boundary) });
            j += 1;
        } else {
            let boundary = join(&upper[i], &lower[j]);
            faces.push(Face { upper: Some(i), lower: Some(j), boundary });
            i += 1;
            j += 1;
        }
    }
    faces
}

fn join<T: Scalar>(up: &Cell<T>, down: &Cell<T>) -> Option<Boundary<T>> {
    let fin = |p: &Point<T>| Corner::Finite(p.clone());
    let mut c: Vec<Corner<T>> = Vec::new();
    if up.base_from.is_none() && up.base_to.is_none() {
        // no lines: a strip, a half-plane or the whole plane
        let top = up.cap.as_ref().map(|cap| cap.height.clone());
        let bottom = down.cap.as_ref().map(|cap| -cap.height.clone());
        if let Some(b) = bottom {
            c.extend([Corner::Ideal(Direction::left()), fin(&Point::new(T::zero(), b)), Corner::Ideal(Direction::right())]);
        }
        if let Some(t) = top {
            if c.is_empty() {
                c.push(Corner::Ideal(Direction::right()));
            }
            c.extend([fin(&Point::new(T::zero(), t)), Corner::Ideal(Direction::left())]);
        }
        return Boundary::from_corners(c);
    }
    // right side, bottom to top
    if let Some(d) = &down.right.ray {
        c.push(Corner::Ideal(reflect_dir(d)));
    }
    c.extend(down.right.vertices.iter().rev().map(|p| fin(&reflect(p))));
    if up.base_to.is_none() {
        c.push(Corner::Ideal(Direction::right()));
    }
    c.extend(up.right.vertices.iter().map(fin));
    if let Some(d) = &up.right.ray {
        c.push(Corner::Ideal(d.clone()));
    }
    if let Some(q) = &up.apex {
        c.push(fin(q));
    }
    if let Some(cap) = &up.cap {
        c.push(cap.to.as_ref().map_or(Corner::Ideal(Direction::right()), fin));
        c.push(cap.from.as_ref().map_or(Corner::Ideal(Direction::left()), fin));
    }
    if let Some(d) = &up.left.ray {
        c.push(Corner::Ideal(d.clone()));
    }
    c.extend(up.left.vertices.iter().rev().map(fin));
    // left side, top to bottom
    if up.base_from.is_none() {
        c.push(Corner::Ideal(Direction::left()));
    }
    c.extend(down.left.vertices.iter().map(|p| fin(&reflect(p))));
    if let Some(d) = &down.left.ray {
        c.push(Corner::Ideal(reflect_dir(d)));
    }
    if let Some(q) = &down.apex {
        c.push(fin(&reflect(q)));
    }
    if let Some(cap) = &down.cap {
        c.push(cap.from.as_ref().map_or(Corner::Ideal(Direction::left()), |p| fin(&reflect(p))));
        c.push(cap.to.as_ref().map_or(Corner::Ideal(Direction::right()), |p| fin(&reflect(p))));
    }
    Boundary::from_corners(c)
}
