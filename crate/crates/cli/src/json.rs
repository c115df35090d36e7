//! Stable JSON form of a zone. Rationals are `"num/den"` strings.

use serde::{Deserialize, Serialize};
use zone_core::{Boundary, BoundaryItem, Cell, Point, Scalar, Zone, ZoneStats};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDto {
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirDto {
    pub dx: String,
    pub dy: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayDto {
    pub origin: PointDto,
    pub dir: DirDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ItemDto {
    Ray(RayDto),
    Vertex(PointDto),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EndDto {
    Point(PointDto),
    Infinite(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseDto {
    pub from: EndDto,
    pub to: EndDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDto {
    pub index: usize,
    pub side: String,
    pub base: BaseDto,
    pub boundary: Vec<ItemDto>,
    pub bounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDto {
    pub upper: Option<usize>,
    pub lower: Option<usize>,
    /// `null` for the whole plane.
    pub boundary: Option<Vec<ItemDto>>,
    pub bounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDto {
    pub forward_edges_above: usize,
    pub forward_edges_below: usize,
    pub backward_edges_above: usize,
    pub backward_edges_below: usize,
    pub upper_edges: usize,
    pub lower_edges: usize,
    pub total_edges: usize,
    pub scan_steps: usize,
    pub merge_events: usize,
    pub clipped_above: bool,
    pub clipped_below: bool,
    pub duplicates: usize,
    pub shadowed_horizontals: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZoneDto {
    pub n: usize,
    pub upper: Vec<CellDto>,
    pub lower: Vec<CellDto>,
    pub stats: StatsDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<FaceDto>>,
}

fn point<T: Scalar>(p: &Point<T>) -> PointDto {
    PointDto { x: p.x.to_fraction_string(), y: p.y.to_fraction_string() }
}

fn items<T: Scalar>(b: &Boundary<T>) -> Vec<ItemDto> {
    b.items
        .iter()
        .map(|item| match item {
            BoundaryItem::Vertex(p) => ItemDto::Vertex(point(p)),
            BoundaryItem::Ray(r) => ItemDto::Ray(RayDto {
                origin: point(&r.origin),
                dir: DirDto { dx: r.dir.dx.to_fraction_string(), dy: r.dir.dy.to_fraction_string() },
            }),
        })
        .collect()
}

fn cell<T: Scalar>(c: &Cell<T>) -> CellDto {
    let end = |p: &Option<Point<T>>, inf: &str| p.as_ref().map_or_else(|| EndDto::Infinite(inf.into()), |p| EndDto::Point(point(p)));
    CellDto {
        index: c.index,
        side: c.side.name().to_string(),
        base: BaseDto { from: end(&c.base_from, "-inf"), to: end(&c.base_to, "+inf") },
        boundary: items(&c.boundary),
        bounded: c.boundary.bounded,
    }
}

fn stats(s: &ZoneStats) -> StatsDto {
    StatsDto {
        forward_edges_above: s.forward_edges[0],
        forward_edges_below: s.forward_edges[1],
        backward_edges_above: s.backward_edges[0],
        backward_edges_below: s.backward_edges[1],
        upper_edges: s.upper_edges,
        lower_edges: s.lower_edges,
        total_edges: s.total_edges(),
        scan_steps: s.scan_steps,
        merge_events: s.merge_events,
        clipped_above: s.clipped_above,
        clipped_below: s.clipped_below,
        duplicates: s.duplicates,
        shadowed_horizontals: s.shadowed_horizontals,
    }
}

impl ZoneDto {
    pub fn from_zone<T: Scalar>(z: &Zone<T>) -> Self {
        ZoneDto {
            n: z.n,
            upper: z.upper.iter().map(cell).collect(),
            lower: z.lower.iter().map(cell).collect(),
            stats: stats(&z.stats),
            faces: z.faces.as_ref().map(|faces| {
                faces
                    .iter()
                    .map(|f| FaceDto {
                        upper: f.upper,
                        lower: f.lower,
                        boundary: f.boundary.as_ref().map(items),
                        bounded: f.boundary.as_ref().is_some_and(|b| b.bounded),
                    })
                    .collect()
            }),
        }
    }
}

pub fn to_json<T: Scalar>(z: &Zone<T>) -> String {
    let mut s = serde_json::to_string_pretty(&ZoneDto::from_zone(z)).expect("zone serializes");
    s.push('\n');
    s
}

/// Parses JSON written by [`to_json`], rejecting rationals that are not in
/// reduced `num/den` form.
pub fn parse_json<T: Scalar>(text: &str) -> Result<ZoneDto, String> {
    let dto: ZoneDto = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let canonical = |s: &String| match T::parse_fraction(s) {
        Some(v) if v.to_fraction_string() == *s => Ok(()),
        _ => Err(format!("`{s}` is not a reduced num/den rational")),
    };
    let check_point = |p: &PointDto| canonical(&p.x).and(canonical(&p.y));
    let check_items = |items: &[ItemDto]| {
        items.iter().try_for_each(|i| match i {
            ItemDto::Vertex(p) => check_point(p),
            ItemDto::Ray(r) => check_point(&r.origin).and(canonical(&r.dir.dx)).and(canonical(&r.dir.dy)),
        })
    };
    for c in dto.upper.iter().chain(&dto.lower) {
        check_items(&c.boundary)?;
        for (end, inf) in [(&c.base.from, "-inf"), (&c.base.to, "+inf")] {
            match end {
                EndDto::Point(p) => check_point(p)?,
                EndDto::Infinite(s) if s == inf => {}
                EndDto::Infinite(s) => return Err(format!("bad base end `{s}`")),
            }
        }
    }
    for f in dto.faces.iter().flatten() {
        if let Some(b) = &f.boundary {
            check_items(b)?;
        }
    }
    Ok(dto)
}

pub fn dto_to_json(dto: &ZoneDto) -> String {
    let mut s = serde_json::to_string_pretty(dto).expect("zone serializes");
    s.push('\n');
    s
}
