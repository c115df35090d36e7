//! Plain-text digest of a zone with its edge bounds.

use std::fmt::Write;

use zone_core::{Scalar, Zone};

fn verdict(ok: bool) -> &'static str {
    if ok { "pass" } else { "FAIL" }
}

pub fn summary<T: Scalar>(z: &Zone<T>) -> String {
    let s = &z.stats;
    let mut out = String::new();
    let forests = [
        ("F", s.forward_edges[0]),
        ("B", s.backward_edges[0]),
        ("F-", s.forward_edges[1]),
        ("B-", s.backward_edges[1]),
    ];
    match s.forest_bound() {
        Some(bound) => {
            writeln!(
                out,
                "n={} upper_cells={} lower_cells={} forest_edges(F)={} ≤ {}",
                z.n,
                z.upper.len(),
                z.lower.len(),
                s.forward_edges[0],
                bound
            )
            .unwrap();
            for (name, edges) in forests {
                writeln!(out, "forest {name}: {edges} edges ≤ 2n-1 = {bound} {}", verdict(edges <= bound)).unwrap();
            }
        }
        None => {
            writeln!(out, "n=0 upper_cells={} lower_cells={} forest_edges(F)=0", z.upper.len(), z.lower.len()).unwrap();
        }
    }
    let clipped = s.clipped_above || s.clipped_below;
    match (s.side_bound(), s.total_bound()) {
        (Some(side), Some(total)) if !clipped => {
            writeln!(out, "upper edges: {} ≤ 4n-2 = {side} {}", s.upper_edges, verdict(s.upper_edges <= side)).unwrap();
            writeln!(out, "lower edges: {} ≤ 4n-2 = {side} {}", s.lower_edges, verdict(s.lower_edges <= side)).unwrap();
            writeln!(out, "zone edges: {} ≤ 8n-4 = {total} {}", s.total_edges(), verdict(s.total_edges() <= total)).unwrap();
        }
        _ => {
            let why = if clipped { "clipped by horizontal lines" } else { "no lines" };
            writeln!(
                out,
                "upper edges: {} lower edges: {} (bounds not applicable: {why})",
                s.upper_edges, s.lower_edges
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        "post-sort work: {} ({} scan steps, {} merge events)",
        s.post_sort_work(),
        s.scan_steps,
        s.merge_events
    )
    .unwrap();
    if s.duplicates > 0 || s.shadowed_horizontals > 0 {
        writeln!(out, "ignored: {} duplicate lines, {} shadowed horizontals", s.duplicates, s.shadowed_horizontals).unwrap();
    }
    out
}
