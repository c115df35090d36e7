use crate::engine::chains::{Chain, ScanObserver};
use crate::geometry::{HalfLine, Point};
use crate::scalar::Scalar;

/// Result of sweeping two chains upward from the axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meeting<T> {
    /// Lowest common point strictly above the axis.
    pub q: Option<Point<T>>,
    /// Edges of the left and right chain containing `q`.
    pub left_edge: usize,
    pub right_edge: usize,
    /// Vertices met by the sweep line before it stopped.
    pub events: usize,
}

/// Lowest intersection of a rightward chain `left` and a leftward chain
/// `right`, found by sweeping a horizontal line upward and testing the pair
/// of edges it currently crosses. Linear in the two chain lengths.
pub fn chain_intersection<T: Scalar>(
    left: &Chain<T>,
    right: &Chain<T>,
    order: &[HalfLine<T>],
    observer: &mut impl ScanObserver<T>,
) -> Meeting<T> {
    let (mut ia, mut ib) = (0, 0);
    let mut events = 0;
    loop {
        let lo = std::cmp::max(&left.vertices[ia].y, &right.vertices[ib].y);
        let la = &order[left.edge_lines[ia]];
        let lb = &order[right.edge_lines[ib]];
        let top_a = left.edge_top(ia);
        let top_b = right.edge_top(ib);
        if let Some(y) = la.crossing_height(lb) {
            let below_tops = top_a.is_none_or(|t| &y <= t) && top_b.is_none_or(|t| &y <= t);
            if y.is_positive() && &y >= lo && below_tops {
                let q = la.point_at(y);
                observer.merge_done(left.owner, right.owner, Some(&q));
                return Meeting { q: Some(q), left_edge: ia, right_edge: ib, events };
            }
        }
        // advance past the lower edge top; ties move the left chain first
        let advance_left = match (top_a, top_b) {
            (None, None) => None,
            (Some(_), None) => Some(true),
            (None, Some(_)) => Some(false),
            (Some(a), Some(b)) => Some(a <= b),
        };
        let exhausted = match advance_left {
            None => true,
            Some(true) => {
                ia += 1;
                ia >= left.edge_count()
            }
            Some(false) => {
                ib += 1;
                ib >= right.edge_count()
            }
        };
        if exhausted {
            observer.merge_done(left.owner, right.owner, None);
            return Meeting { q: None, left_edge: ia, right_edge: ib, events };
        }
        events += 1;
        let reached = if advance_left == Some(true) { &left.vertices[ia].y } else { &right.vertices[ib].y };
        observer.merge_event(left.owner, right.owner, reached);
    }
}
