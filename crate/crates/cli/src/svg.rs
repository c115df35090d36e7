//! SVG rendering. Unbounded cells are cut at the viewport for display only.

use std::f64::consts::PI;
use std::fmt::Write;

use zone_core::{Boundary, BoundaryItem, Line, Scalar, Zone};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl std::str::FromStr for Viewport {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad viewport number `{t}`")))
            .collect::<Result<_, _>>()?;
        let [x0, y0, x1, y1] = v[..] else {
            return Err("viewport takes four numbers x0,y0,x1,y1".into());
        };
        if !(x0 < x1 && y0 < y1) || v.iter().any(|c| !c.is_finite()) {
            return Err("viewport needs x0 < x1 and y0 < y1".into());
        }
        Ok(Viewport { x0, y0, x1, y1 })
    }
}

type Pt = (f64, f64);

/// Bounding box of the zone's finite vertices, padded.
fn auto_fit<T: Scalar>(z: &Zone<T>) -> Option<Viewport> {
    if z.n == 0 {
        return None;
    }
    let pts: Vec<Pt> = z
        .upper
        .iter()
        .chain(&z.lower)
        .flat_map(|c| c.boundary.vertices())
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (x, y) in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = 0.15 * (x1 - x0).max(y1 - y0).max(2.0);
    Some(Viewport { x0: x0 - pad, y0: y0 - pad, x1: x1 + pad, y1: y1 + pad })
}

fn clip_polygon(poly: &[Pt], vp: &Viewport) -> Vec<Pt> {
    // keep a·x + b·y + c >= 0
    let planes = [(1.0, 0.0, -vp.x0), (-1.0, 0.0, vp.x1), (0.0, 1.0, -vp.y0), (0.0, -1.0, vp.y1)];
    let mut out = poly.to_vec();
    for (a, b, c) in planes {
        let input = std::mem::take(&mut out);
        for k in 0..input.len() {
            let p = input[k];
            let q = input[(k + 1) % input.len()];
            let (vp_, vq) = (a * p.0 + b * p.1 + c, a * q.0 + b * q.1 + c);
            if vp_ >= 0.0 {
                out.push(p);
            }
            if (vp_ >= 0.0) != (vq >= 0.0) {
                let t = vp_ / (vp_ - vq);
                out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
            }
        }
    }
    out
}

/// A finite polygon standing in for `b` inside a disc of radius `far`.
fn polygon<T: Scalar>(b: &Boundary<T>, far: f64) -> Vec<Pt> {
    let to_pt = |x: &T, y: &T| (x.to_f64(), y.to_f64());
    if b.bounded {
        return b.vertices().map(|p| to_pt(&p.x, &p.y)).collect();
    }
    let reach = b.vertices().map(|p| p.x.to_f64().abs() + p.y.to_f64().abs()).fold(0.0, f64::max);
    let far = far + reach;
    let mut out = Vec::new();
    let comps = b.components();
    for (k, comp) in comps.iter().enumerate() {
        let ray = |item: &BoundaryItem<T>| match item {
            BoundaryItem::Ray(r) => {
                let (ox, oy) = to_pt(&r.origin.x, &r.origin.y);
                let (dx, dy) = to_pt(&r.dir.dx, &r.dir.dy);
                let len = dx.hypot(dy);
                ((ox + far * dx / len, oy + far * dy / len), dy.atan2(dx))
            }
            BoundaryItem::Vertex(_) => unreachable!("components start and end with rays"),
        };
        let (start, _) = ray(&comp[0]);
        let (end, out_angle) = ray(&comp[comp.len() - 1]);
        out.push(start);
        out.extend(comp.iter().filter_map(|i| match i {
            BoundaryItem::Vertex(p) => Some(to_pt(&p.x, &p.y)),
            BoundaryItem::Ray(_) => None,
        }));
        out.push(end);
        // sweep counterclockwise at infinity to where the next component enters
        let (_, in_angle) = ray(&comps[(k + 1) % comps.len()][0]);
        let mut sweep = in_angle - out_angle;
        while sweep <= 0.0 {
            sweep += 2.0 * PI;
        }
        let steps = (sweep / (PI / 4.0)).ceil() as usize;
        for s in 1..steps {
            let a = out_angle + sweep * s as f64 / steps as f64;
            out.push((2.0 * far * a.cos(), 2.0 * far * a.sin()));
        }
    }
    out
}

fn line_segment<T: Scalar>(l: &Line<T>, vp: &Viewport) -> Option<(Pt, Pt)> {
    let (a, b, c) = (l.a.to_f64(), l.b.to_f64(), l.c.to_f64());
    let mut pts: Vec<Pt> = Vec::new();
    if b != 0.0 {
        for x in [vp.x0, vp.x1] {
            pts.push((x, -(a * x + c) / b));
        }
    } else {
        for y in [vp.y0, vp.y1] {
            pts.push((-(b * y + c) / a, y));
        }
    }
    let clipped = clip_polygon(&pts, vp);
    (clipped.len() >= 2).then(|| (clipped[0], clipped[1]))
}

fn path(poly: &[Pt]) -> String {
    let mut d = String::new();
    for (k, (x, y)) in poly.iter().enumerate() {
        write!(d, "{}{:.4},{:.4} ", if k == 0 { "M" } else { "L" }, x, y).unwrap();
    }
    d.push('Z');
    d
}

/// Renders the zone, the query line and the input lines.
pub fn render<T: Scalar>(
    z: &Zone<T>,
    query: &Line<T>,
    lines: &[Line<T>],
    viewport: Option<Viewport>,
) -> Result<String, String> {
    let vp = viewport
        .or_else(|| auto_fit(z))
        .ok_or("zone has no finite vertices; pass --viewport x0,y0,x1,y1")?;
    let (w, h) = (vp.x1 - vp.x0, vp.y1 - vp.y0);
    let far = 4.0 * (vp.x0.abs().max(vp.x1.abs()) + vp.y0.abs().max(vp.y1.abs()) + w + h);
    let stroke = w.max(h) / 400.0;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.4} {:.4} {:.4} {:.4}" width="800" height="{:.0}">"#,
        vp.x0,
        -vp.y1,
        w,
        h,
        800.0 * h / w
    )
    .unwrap();
    writeln!(out, r#"<g transform="scale(1,-1)" stroke-width="{stroke:.5}">"#).unwrap();
    for (cells, fill) in [(&z.upper, "#9ecae1"), (&z.lower, "#fdd0a2")] {
        for c in cells {
            let poly = clip_polygon(&polygon(&c.boundary, far), &vp);
            if poly.len() >= 3 {
                writeln!(
                    out,
                    r##"<path d="{}" fill="{fill}" fill-opacity="0.7" stroke="#555555" data-index="{}" data-side="{}"/>"##,
                    path(&poly),
                    c.index,
                    c.side
                )
                .unwrap();
            }
        }
    }
    for l in lines {
        if let Some(((ax, ay), (bx, by))) = line_segment(l, &vp) {
            writeln!(out, r#"<line x1="{ax:.4}" y1="{ay:.4}" x2="{bx:.4}" y2="{by:.4}" stroke="black"/>"#).unwrap();
        }
    }
    if let Some(((ax, ay), (bx, by))) = line_segment(query, &vp) {
        writeln!(
            out,
            r#"<line x1="{ax:.4}" y1="{ay:.4}" x2="{bx:.4}" y2="{by:.4}" stroke="crimson" stroke-width="{:.5}"/>"#,
            2.0 * stroke
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
