//! Canonical boundary representation for convex, possibly unbounded regions.
//!
//! A region's boundary is walked counterclockwise (interior on the left).
//! A bounded region is a single cycle of vertices starting at its
//! lexicographically smallest vertex. An unbounded region has one or two
//! components, each `[Ray(first, incoming), first, …, last, Ray(last, outgoing)]`
//! where both rays point away from their origin towards infinity. Directions
//! are kept exact, so two regions are equal exactly when their
//! representations are.

use crate::geometry::{cross, orientation, AffineMap, Direction, Orientation, Point};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ray<T> {
    pub origin: Point<T>,
    pub dir: Direction<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryItem<T> {
    Vertex(Point<T>),
    Ray(Ray<T>),
}

/// A corner of a boundary cycle: a finite vertex or a point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corner<T> {
    Finite(Point<T>),
    Ideal(Direction<T>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Boundary<T> {
    pub items: Vec<BoundaryItem<T>>,
    pub bounded: bool,
}

impl<T: Scalar> Boundary<T> {
    /// Normalizes a counterclockwise cycle of corners: merges repeated
    /// corners, drops vertices that are not proper turns, and collapses runs
    /// of points at infinity. Returns `None` if no finite corner remains.
    pub fn from_corners(corners: Vec<Corner<T>>) -> Option<Self> {
        Self::from_marked_corners(corners.into_iter().map(|c| (c, false)).collect())
    }

    /// As [`Boundary::from_corners`], but corners marked `true` are known not
    /// to be collinear with their neighbours; only repeats of them are
    /// dropped.
    pub(crate) fn from_marked_corners(corners: Vec<(Corner<T>, bool)>) -> Option<Self> {
        let cycle = simplify_cycle(corners);
        if !cycle.iter().any(|c| matches!(c, Corner::Finite(_))) {
            return None;
        }
        let start = (0..cycle.len()).find(|&i| {
            let prev = &cycle[(i + cycle.len() - 1) % cycle.len()];
            matches!(cycle[i], Corner::Finite(_)) && matches!(prev, Corner::Ideal(_))
        });
        let Some(start) = start else {
            let mut vertices: Vec<Point<T>> = cycle
                .into_iter()
                .map(|c| match c {
                    Corner::Finite(p) => p,
                    Corner::Ideal(_) => unreachable!(),
                })
                .collect();
            rotate_to_min(&mut vertices);
            return Some(Boundary {
                items: vertices.into_iter().map(BoundaryItem::Vertex).collect(),
                bounded: true,
            });
        };

        let len = cycle.len();
        let mut components: Vec<Vec<BoundaryItem<T>>> = Vec::new();
        let mut i = start;
        let mut visited = 0;
        while visited < len {
            let Corner::Ideal(incoming) = &cycle[(i + len - 1) % len] else {
                unreachable!()
            };
            let mut run = Vec::new();
            while let Corner::Finite(p) = &cycle[i % len] {
                run.push(p.clone());
                i += 1;
                visited += 1;
            }
            let Corner::Ideal(outgoing) = &cycle[i % len] else {
                unreachable!()
            };
            let mut comp = Vec::with_capacity(run.len() + 2);
            comp.push(BoundaryItem::Ray(Ray {
                origin: run[0].clone(),
                dir: incoming.clone(),
            }));
            let last = run.last().unwrap().clone();
            comp.extend(run.into_iter().map(BoundaryItem::Vertex));
            comp.push(BoundaryItem::Ray(Ray {
                origin: last,
                dir: outgoing.clone(),
            }));
            components.push(comp);
            // skip the run at infinity
            while visited < len && matches!(cycle[i % len], Corner::Ideal(_)) {
                i += 1;
                visited += 1;
            }
        }
        Some(Boundary::from_components(components))
    }

    fn from_components(mut components: Vec<Vec<BoundaryItem<T>>>) -> Self {
        components.sort_by(|a, b| first_vertex(a).cmp(first_vertex(b)));
        Boundary {
            items: components.into_iter().flatten().collect(),
            bounded: false,
        }
    }

    /// Splits into components; a bounded boundary has exactly one.
    pub fn components(&self) -> Vec<&[BoundaryItem<T>]> {
        if self.bounded {
            return vec![&self.items[..]];
        }
        let mut out = Vec::new();
        let mut start = 0;
        let mut in_component = false;
        for (i, item) in self.items.iter().enumerate() {
            if let BoundaryItem::Ray(_) = item {
                if in_component {
                    out.push(&self.items[start..=i]);
                    in_component = false;
                } else {
                    start = i;
                    in_component = true;
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Point<T>> {
        self.items.iter().filter_map(|item| match item {
            BoundaryItem::Vertex(p) => Some(p),
            BoundaryItem::Ray(_) => None,
        })
    }

    /// Number of boundary edges, rays included.
    pub fn edge_count(&self) -> usize {
        if self.bounded {
            self.items.len()
        } else {
            // [ray, v1..vk, ray] has k - 1 segments and 2 rays
            self.components().iter().map(|c| c.len() - 1).sum()
        }
    }

    /// Image under an affine map, re-normalized (walk direction restored
    /// when the map reverses orientation).
    pub fn transform(&self, map: &AffineMap<T>) -> Self {
        let reverse = map.reverses_orientation();
        if self.bounded {
            let mut vertices: Vec<Point<T>> = self.vertices().map(|p| map.apply(p)).collect();
            if reverse {
                vertices.reverse();
            }
            rotate_to_min(&mut vertices);
            return Boundary {
                items: vertices.into_iter().map(BoundaryItem::Vertex).collect(),
                bounded: true,
            };
        }
        let components = self
            .components()
            .into_iter()
            .map(|comp| {
                let mut mapped: Vec<BoundaryItem<T>> = comp
                    .iter()
                    .map(|item| match item {
                        BoundaryItem::Vertex(p) => BoundaryItem::Vertex(map.apply(p)),
                        BoundaryItem::Ray(r) => BoundaryItem::Ray(Ray {
                            origin: map.apply(&r.origin),
                            dir: map.apply_direction(&r.dir),
                        }),
                    })
                    .collect();
                if reverse {
                    mapped.reverse();
                }
                mapped
            })
            .collect();
        Boundary::from_components(components)
    }

    /// Strict convexity of the counterclockwise walk: every corner is a
    /// proper left turn.
    pub fn is_convex(&self) -> bool {
        if self.bounded {
            let v: Vec<&Point<T>> = self.vertices().collect();
            if v.len() < 3 {
                return false;
            }
            return (0..v.len()).all(|i| {
                orientation(v[i], v[(i + 1) % v.len()], v[(i + 2) % v.len()]) == Orientation::Left
            });
        }
        self.components().iter().all(|comp| {
            let (BoundaryItem::Ray(inc), BoundaryItem::Ray(out)) = (&comp[0], &comp[comp.len() - 1]) else {
                return false;
            };
            let pts: Vec<&Point<T>> = comp[1..comp.len() - 1]
                .iter()
                .map(|i| match i {
                    BoundaryItem::Vertex(p) => p,
                    BoundaryItem::Ray(_) => unreachable!(),
                })
                .collect();
            if pts.len() == 1 {
                // a lone vertex is a true corner unless the two rays are opposite
                let turn = cross(-inc.dir.dx.clone(), -inc.dir.dy.clone(), out.dir.dx.clone(), out.dir.dy.clone());
                return turn.is_positive()
                    || (turn.is_zero() && inc.dir.dx.clone() == -out.dir.dx.clone() && inc.dir.dy.clone() == -out.dir.dy.clone());
            }
            let first_turn = cross(
                -inc.dir.dx.clone(),
                -inc.dir.dy.clone(),
                pts[1].x.clone() - pts[0].x.clone(),
                pts[1].y.clone() - pts[0].y.clone(),
            );
            let n = pts.len();
            let last_turn = cross(
                pts[n - 1].x.clone() - pts[n - 2].x.clone(),
                pts[n - 1].y.clone() - pts[n - 2].y.clone(),
                out.dir.dx.clone(),
                out.dir.dy.clone(),
            );
            first_turn.is_positive()
                && last_turn.is_positive()
                && pts.windows(3).all(|w| orientation(w[0], w[1], w[2]) == Orientation::Left)
        })
    }
}

fn first_vertex<T>(component: &[BoundaryItem<T>]) -> &Point<T> {
    match &component[1] {
        BoundaryItem::Vertex(p) => p,
        BoundaryItem::Ray(r) => &r.origin,
    }
}

fn rotate_to_min<T: Ord>(vertices: &mut [T]) {
    if let Some((idx, _)) = vertices.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)) {
        vertices.rotate_left(idx);
    }
}

/// Whether the middle corner adds nothing to the boundary.
fn redundant<T: Scalar>(prev: &Corner<T>, mid: &Corner<T>, next: &Corner<T>) -> bool {
    match (prev, mid, next) {
        (_, Corner::Ideal(_), _) if prev == mid || mid == next => true,
        (Corner::Ideal(_), Corner::Ideal(_), Corner::Ideal(_)) => true,
        (_, Corner::Finite(_), _) if prev == mid || mid == next => true,
        (Corner::Finite(p), Corner::Finite(v), Corner::Finite(n)) => {
            orientation(p, v, n) == Orientation::Collinear
        }
        (Corner::Finite(p), Corner::Finite(v), Corner::Ideal(d)) => cross(
            v.x.clone() - p.x.clone(),
            v.y.clone() - p.y.clone(),
            d.dx.clone(),
            d.dy.clone(),
        )
        .is_zero(),
        (Corner::Ideal(d), Corner::Finite(v), Corner::Finite(n)) => cross(
            n.x.clone() - v.x.clone(),
            n.y.clone() - v.y.clone(),
            d.dx.clone(),
            d.dy.clone(),
        )
        .is_zero(),
        _ => false,
    }
}

fn simplify_cycle<T: Scalar>(corners: Vec<(Corner<T>, bool)>) -> Vec<Corner<T>> {
    let mut out: Vec<(Corner<T>, bool)> = Vec::with_capacity(corners.len());
    let removable = |out: &[(Corner<T>, bool)], a: usize, b: usize, c: usize| {
        let (prev, mid, next) = (&out[a].0, &out[b].0, &out[c].0);
        if out[b].1 {
            prev == mid || mid == next
        } else {
            redundant(prev, mid, next)
        }
    };
    for c in corners {
        if let Some(last) = out.last_mut() {
            if last.0 == c.0 {
                last.1 &= c.1;
                continue;
            }
        }
        out.push(c);
        while out.len() >= 3 {
            let k = out.len();
            if removable(&out, k - 3, k - 2, k - 1) {
                out.remove(k - 2);
            } else {
                break;
            }
        }
    }
    // close the seam
    loop {
        let k = out.len();
        if k < 3 {
            if k == 2 && out[0].0 == out[1].0 {
                out.pop();
            }
            break;
        }
        if out[k - 1].0 == out[0].0 || removable(&out, k - 2, k - 1, 0) {
            out.pop();
        } else if removable(&out, k - 1, 0, 1) {
            out.remove(0);
        } else {
            break;
        }
    }
    out.into_iter().map(|(c, _)| c).collect()
}
