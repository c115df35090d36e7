use crate::cell::{Cap, Cell, ChainPiece};
use crate::engine::chains::Chain;
use crate::engine::merge::Meeting;
use crate::error::ZoneError;
use crate::geometry::{orientation, HalfLine, Orientation, Point, Side};
use crate::scalar::Scalar;

fn prefix<T: Scalar>(chain: &Chain<T>, upto_edge: usize, q: &Point<T>) -> Vec<Point<T>> {
    let mut v: Vec<Point<T>> = chain.vertices[..=upto_edge].to_vec();
    if v.last() != Some(q) {
        v.push(q.clone());
    }
    v
}

fn full_piece<T: Scalar>(chain: &Chain<T>, order: &[HalfLine<T>]) -> ChainPiece<T> {
    ChainPiece {
        vertices: chain.vertices.clone(),
        ray: chain.ray_direction(order),
    }
}

fn check_piece<T: Scalar>(piece: &ChainPiece<T>, turn: Orientation) -> bool {
    piece.vertices.windows(2).all(|w| w[0].y < w[1].y)
        && piece.vertices.windows(3).all(|w| orientation(&w[0], &w[1], &w[2]) == turn)
}

/// Assembles cell `i` of `n` from the chain left of it (`α_i`), the chain
/// right of it (`β_{i+1}`) and their meeting point.
///
/// `left` is absent exactly for `i = 0` and `right` exactly for `i = n`.
pub fn assemble_cell<T: Scalar>(
    i: usize,
    side: Side,
    order: &[HalfLine<T>],
    left: Option<&Chain<T>>,
    right: Option<&Chain<T>>,
    meeting: Option<&Meeting<T>>,
) -> Result<Cell<T>, ZoneError> {
    let n = order.len();
    let violation = |what: &str| ZoneError::InvariantViolation(format!("cell {i} ({side}): {what}"));
    if left.is_none() != (i == 0) || right.is_none() != (i == n) {
        return Err(violation("chains do not match the cell index"));
    }
    let base_from = (i > 0).then(|| order[i - 1].anchor.clone());
    let base_to = (i < n).then(|| order[i].anchor.clone());

    let q = meeting.and_then(|m| m.q.as_ref());
    let (left_piece, right_piece, apex) = match (left, right, q) {
        (Some(a), Some(b), Some(q)) => {
            let m = meeting.unwrap();
            let lp = ChainPiece { vertices: prefix(a, m.left_edge, q), ray: None };
            let rp = ChainPiece { vertices: prefix(b, m.right_edge, q), ray: None };
            (lp, rp, Some(q.clone()))
        }
        (Some(a), Some(b), None) => {
            if !a.unbounded || !b.unbounded {
                return Err(violation("chains neither meet nor both reach infinity"));
            }
            (full_piece(a, order), full_piece(b, order), None)
        }
        (Some(a), None, _) => (full_piece(a, order), ChainPiece::empty(), None),
        (None, Some(b), _) => (ChainPiece::empty(), full_piece(b, order), None),
        (None, None, _) => return Err(violation("no chains")),
    };
    if !check_piece(&left_piece, Orientation::Right) || !check_piece(&right_piece, Orientation::Left) {
        return Err(violation("boundary prefix is not a monotone convex chain"));
    }
    Ok(Cell::new(i, side, base_from, base_to, left_piece, right_piece, apex, None))
}

/// Cuts `piece` at height `y`, returning the truncated piece and the cut
/// point (`None` for an empty piece).
fn truncate<T: Scalar>(piece: &ChainPiece<T>, y: &T) -> (ChainPiece<T>, Option<Point<T>>) {
    let mut vertices = Vec::new();
    for v in &piece.vertices {
        if &v.y < y {
            vertices.push(v.clone());
            continue;
        }
        let cut = if &v.y == y {
            v.clone()
        } else {
            let prev = vertices.last().expect("pieces start on the axis, below the cut");
            let t = (y.clone() - prev.y.clone()) / (v.y.clone() - prev.y.clone());
            Point::new(prev.x.clone() + (v.x.clone() - prev.x.clone()) * t, y.clone())
        };
        vertices.push(cut.clone());
        return (ChainPiece { vertices, ray: None }, Some(cut));
    }
    let Some(last) = vertices.last().cloned() else {
        return (ChainPiece::empty(), None);
    };
    let d = piece.ray.as_ref().expect("a piece ending below the cut continues upward");
    let x = last.x.clone() + d.dx.clone() * (y.clone() - last.y.clone()) / d.dy.clone();
    let cut = Point::new(x, y.clone());
    vertices.push(cut.clone());
    (ChainPiece { vertices, ray: None }, Some(cut))
}

/// Intersects every cell with the strip `0 <= y <= y_star` of its working
/// frame.
pub fn clip_horizontal<T: Scalar>(cells: Vec<Cell<T>>, y_star: &T) -> Vec<Cell<T>> {
    assert!(y_star.is_positive(), "clipping height must be above the axis");
    cells
        .into_iter()
        .map(|cell| {
            if cell.apex.as_ref().is_some_and(|q| &q.y <= y_star) {
                return cell;
            }
            let (left, from) = truncate(&cell.left, y_star);
            let (right, to) = truncate(&cell.right, y_star);
            let (apex, cap) = match (&from, &to) {
                (Some(a), Some(b)) if a == b => (Some(a.clone()), None),
                _ => (None, Some(Cap { from, to, height: y_star.clone() })),
            };
            Cell::new(cell.index, cell.side, cell.base_from, cell.base_to, left, right, apex, cap)
        })
        .collect()
}
