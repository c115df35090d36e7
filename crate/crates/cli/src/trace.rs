//! Step-by-step text replay of the scans and merges for one side.

use zone_core::canonical::canonicalize;
use zone_core::engine::{sort_and_orient, upper_zone_sorted, Chain, ForestKind, ScanObserver};
use zone_core::{Line, Point, Scalar, Side, ZoneError};

pub const TRACE_CAP: usize = 32;

#[derive(Default)]
struct Frames {
    frames: Vec<String>,
}

fn name(kind: ForestKind, owner: usize) -> String {
    match kind {
        ForestKind::Forward => format!("α_{}", owner + 1),
        ForestKind::Backward => format!("β_{}", owner + 1),
    }
}

fn path<T: Scalar>(vertices: &[Point<T>]) -> String {
    vertices.iter().map(ToString::to_string).collect::<Vec<_>>().join(" → ")
}

impl<T: Scalar> ScanObserver<T> for Frames {
    fn chain_frozen(&mut self, kind: ForestKind, inserted: Option<usize>, chain: &Chain<T>) {
        let scan = match kind {
            ForestKind::Forward => "forward",
            ForestKind::Backward => "backward",
        };
        let tail = if chain.unbounded { " → ∞" } else { "" };
        let frame = match inserted {
            Some(i) => format!(
                "{scan} scan: insert l_{}⁺, freeze {} at {}: {}{tail}",
                i + 1,
                name(kind, chain.owner),
                chain.vertices.last().expect("chains are nonempty"),
                path(&chain.vertices)
            ),
            None => format!("{scan} scan: final {}: {}{tail}", name(kind, chain.owner), path(&chain.vertices)),
        };
        self.frames.push(frame);
    }

    fn merge_event(&mut self, left: usize, right: usize, y: &T) {
        self.frames.push(format!(
            "merge {}/{}: sweep meets a vertex at y = {y}",
            name(ForestKind::Forward, left),
            name(ForestKind::Backward, right)
        ));
    }

    fn merge_done(&mut self, left: usize, right: usize, q: Option<&Point<T>>) {
        let end = q.map_or_else(|| "chains never meet".to_string(), |q| format!("meet at q = {q}"));
        self.frames.push(format!(
            "merge {}/{}: {end}",
            name(ForestKind::Forward, left),
            name(ForestKind::Backward, right)
        ));
    }
}

/// Frames for `side`, in the working frame where the query line is the
/// x-axis and `side` is up.
pub fn trace<T: Scalar>(query: &Line<T>, lines: &[Line<T>], side: Side) -> Result<Vec<String>, TraceError> {
    if lines.len() > TRACE_CAP {
        return Err(TraceError::TooLarge(lines.len()));
    }
    let inst = canonicalize(query, lines).map_err(TraceError::Zone)?;
    let order = sort_and_orient(&inst, side);
    let mut frames = Frames::default();
    upper_zone_sorted(order, side, inst.clip_height(side).as_ref(), &mut frames).map_err(TraceError::Zone)?;
    Ok(frames.frames)
}

#[derive(Debug, thiserror::Error)]
pub enum TraceError {
    #[error("trace is limited to {TRACE_CAP} lines, got {0}; try a smaller instance")]
    TooLarge(usize),
    #[error(transparent)]
    Zone(ZoneError),
}
