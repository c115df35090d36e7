//! Forward and backward forests, built chain by chain with a Graham-scan
//! style pass over the sorted half-lines.

use crate::geometry::{Direction, HalfLine, Orientation, Point, orientation};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainDirection {
    /// Turns right when walked upward; member of the forward forest.
    Rightward,
    /// Turns left when walked upward; member of the backward forest.
    Leftward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForestKind {
    Forward,
    Backward,
}

/// A y-monotone convex chain starting at the intercept of line `owner`.
///
/// Edge `k` runs from `vertices[k]` upward along line `edge_lines[k]`
/// (indices into the sorted half-line list). A bounded chain has one more
/// vertex than edges; an unbounded chain ends in a ray from its last vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<T> {
    pub owner: usize,
    pub direction: ChainDirection,
    pub vertices: Vec<Point<T>>,
    pub edge_lines: Vec<usize>,
    pub unbounded: bool,
}

impl<T: Scalar> Chain<T> {
    pub fn edge_count(&self) -> usize {
        self.edge_lines.len()
    }

    /// Height of the top of edge `k`; `None` for the final ray.
    pub fn edge_top(&self, k: usize) -> Option<&T> {
        self.vertices.get(k + 1).map(|p| &p.y)
    }

    pub fn ray_direction(&self, order: &[HalfLine<T>]) -> Option<Direction<T>> {
        self.unbounded
            .then(|| order[*self.edge_lines.last().expect("chains have at least one edge")].direction())
    }

    /// y-monotone and turning consistently with `direction`.
    pub fn is_well_formed(&self, order: &[HalfLine<T>]) -> bool {
        if self.edge_lines.is_empty()
            || self.vertices.len() != self.edge_lines.len() + usize::from(!self.unbounded)
        {
            return false;
        }
        if !self.vertices[0].y.is_zero() || self.vertices[0] != order[self.owner].anchor {
            return false;
        }
        if !self.vertices.windows(2).all(|w| w[0].y < w[1].y) {
            return false;
        }
        let on_line = self.edge_lines.iter().enumerate().all(|(k, &l)| {
            let h = &order[l];
            h.x_at(&self.vertices[k].y) == self.vertices[k].x
                && self.vertices.get(k + 1).is_none_or(|p| h.x_at(&p.y) == p.x)
        });
        if !on_line {
            return false;
        }
        let turn = match self.direction {
            ChainDirection::Rightward => Orientation::Right,
            ChainDirection::Leftward => Orientation::Left,
        };
        let mut pts: Vec<Point<T>> = self.vertices.clone();
        if self.unbounded {
            let d = order[*self.edge_lines.last().unwrap()].direction();
            let last = pts.last().unwrap().clone();
            pts.push(Point::new(last.x + d.dx, last.y + d.dy));
        }
        pts.windows(3).all(|w| orientation(&w[0], &w[1], &w[2]) == turn)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest<T> {
    pub kind: ForestKind,
    /// One chain per half-line, indexed by owner.
    pub chains: Vec<Chain<T>>,
}

impl<T: Scalar> Forest<T> {
    pub fn edge_count(&self) -> usize {
        self.chains.iter().map(Chain::edge_count).sum()
    }
}

/// Receives the scan's steps in order. All methods default to no-ops.
pub trait ScanObserver<T> {
    /// `chain` was frozen while inserting half-line `inserted`, or at the
    /// end of the scan when `inserted` is `None`.
    fn chain_frozen(&mut self, _kind: ForestKind, _inserted: Option<usize>, _chain: &Chain<T>) {}

    /// The sweep merging `left` and `right` met a chain vertex at height `y`.
    fn merge_event(&mut self, _left: usize, _right: usize, _y: &T) {}

    fn merge_done(&mut self, _left: usize, _right: usize, _q: Option<&Point<T>>) {}
}

pub struct NoTrace;

impl<T> ScanObserver<T> for NoTrace {}

struct LiveEdge<T> {
    line: usize,
    lower: Point<T>,
}

/// `(intercept, run)` of each half-line, in scan order.
type Params<T> = (T, T);

fn crossing<T: Scalar>(a: &Params<T>, b: &Params<T>) -> Option<T> {
    let dr = a.1.clone() - b.1.clone();
    (!dr.is_zero()).then(|| (b.0.clone() - a.0.clone()) / dr)
}

/// The rightward scan over `params`. Returns chains by owner plus the
/// number of live-chain edges visited.
fn scan<T: Scalar>(params: &[Params<T>]) -> (Vec<Chain<T>>, usize) {
    let n = params.len();
    let mut chains = Vec::with_capacity(n);
    let mut steps = 0;
    let anchor = |i: usize| Point::new(params[i].0.clone(), T::zero());

    // live chain, lowest edge on top of the stack
    let mut live: Vec<LiveEdge<T>> = vec![LiveEdge { line: 0, lower: anchor(0) }];

    for i in 1..n {
        let mut vertices = Vec::new();
        let mut edge_lines = Vec::new();
        let mut unbounded = true;
        while let Some(edge) = live.pop() {
            steps += 1;
            let upper_y = live.last().map(|e| e.lower.y.clone());
            let hit = crossing(&params[edge.line], &params[i]).filter(|y| {
                y.is_positive() && *y >= edge.lower.y && upper_y.as_ref().is_none_or(|u| y <= u)
            });
            vertices.push(edge.lower.clone());
            edge_lines.push(edge.line);
            if let Some(y) = hit {
                let q = Point::new(params[i].0.clone() + params[i].1.clone() * y.clone(), y);
                if upper_y.as_ref() != Some(&q.y) {
                    live.push(LiveEdge { line: edge.line, lower: q.clone() });
                }
                vertices.push(q);
                unbounded = false;
                break;
            }
        }
        chains.push(Chain {
            owner: i - 1,
            direction: ChainDirection::Rightward,
            vertices,
            edge_lines,
            unbounded,
        });
        live.push(LiveEdge { line: i, lower: anchor(i) });
    }

    let mut vertices = Vec::with_capacity(live.len());
    let mut edge_lines = Vec::with_capacity(live.len());
    while let Some(edge) = live.pop() {
        steps += 1;
        vertices.push(edge.lower);
        edge_lines.push(edge.line);
    }
    chains.push(Chain {
        owner: n - 1,
        direction: ChainDirection::Rightward,
        vertices,
        edge_lines,
        unbounded: true,
    });
    (chains, steps)
}

/// Builds the forward (rightward chains, left-to-right insertion) or
/// backward (leftward chains, right-to-left insertion) forest. Returns the
/// forest and the number of live-chain edges visited.
pub fn build_chains<T: Scalar>(
    order: &[HalfLine<T>],
    kind: ForestKind,
    observer: &mut impl ScanObserver<T>,
) -> (Forest<T>, usize) {
    assert!(!order.is_empty(), "build_chains needs at least one half-line");
    let n = order.len();
    match kind {
        ForestKind::Forward => {
            let params: Vec<Params<T>> = order.iter().map(|h| (h.intercept.clone(), h.run.clone())).collect();
            let (chains, steps) = scan(&params);
            for c in &chains {
                let inserted = (c.owner + 1 < n).then_some(c.owner + 1);
                observer.chain_frozen(kind, inserted, c);
            }
            (Forest { kind, chains }, steps)
        }
        ForestKind::Backward => {
            // The backward scan is the forward scan on the mirror image x ↦ -x,
            // whose sorted order is the reversed order.
            let params: Vec<Params<T>> = order
                .iter()
                .rev()
                .map(|h| (-h.intercept.clone(), -h.run.clone()))
                .collect();
            let (mirrored, steps) = scan(&params);
            let mut chains: Vec<Chain<T>> = mirrored
                .into_iter()
                .map(|c| Chain {
                    owner: n - 1 - c.owner,
                    direction: ChainDirection::Leftward,
                    vertices: c.vertices.into_iter().map(|p| Point::new(-p.x, p.y)).collect(),
                    edge_lines: c.edge_lines.into_iter().map(|l| n - 1 - l).collect(),
                    unbounded: c.unbounded,
                })
                .collect();
            for c in &chains {
                let inserted = c.owner.checked_sub(1);
                observer.chain_frozen(kind, inserted, c);
            }
            chains.reverse();
            (Forest { kind, chains }, steps)
        }
    }
}
