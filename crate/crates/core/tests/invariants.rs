use proptest::prelude::*;
use zone_core::canonical::canonicalize;
use zone_core::engine::{upper_zone, ForestKind};
use zone_core::oracle::{forest_diff, naive_forests, oracle_order};
use zone_core::{Line, Rational, Side};

fn line(id: usize) -> impl Strategy<Value = Line<Rational>> {
    (-9i64..=9, -9i64..=9, -9i64..=9)
        .prop_filter("nonzero normal", |(a, b, _)| *a != 0 || *b != 0)
        .prop_map(move |(a, b, c)| Line::from_i64(a, b, c, id).unwrap())
}

fn lines() -> impl Strategy<Value = Vec<Line<Rational>>> {
    prop::collection::vec(line(0), 0..=12)
        .prop_map(|v| v.into_iter().enumerate().map(|(i, l)| l.with_source(i)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chains_cells_and_forests(lines in lines()) {
        prop_assume!(lines.iter().all(|l| !l.same_locus(&Line::x_axis())));
        let inst = canonicalize(&Line::x_axis(), &lines).unwrap();
        for side in [Side::Above, Side::Below] {
            let res = upper_zone(&inst, side).unwrap();
            let n = res.order.len();
            let (Some(forward), Some(backward)) = (&res.forward, &res.backward) else {
                prop_assert_eq!(n, 0);
                continue;
            };
            for c in forward.chains.iter().chain(&backward.chains) {
                prop_assert!(c.is_well_formed(&res.order), "{:?}", c);
            }
            prop_assert!(res.cells.iter().all(|c| c.boundary.is_convex()));
            let (f, b) = naive_forests(&res.order);
            prop_assert_eq!(forest_diff(&res.order, forward, &f), Ok(()));
            prop_assert_eq!(forest_diff(&res.order, backward, &b), Ok(()));
            prop_assert!(res.forest_edges(ForestKind::Forward) <= 2 * n - 1);
            prop_assert!(res.forest_edges(ForestKind::Backward) <= 2 * n - 1);
            prop_assert!(res.scan_steps + res.merge_events <= 6 * n);
        }
    }

    #[test]
    fn tie_break_matches_epsilon_order(lines in lines()) {
        prop_assume!(lines.iter().all(|l| !l.is_horizontal()));
        let inst = canonicalize(&Line::x_axis(), &lines).unwrap();
        for side in [Side::Above, Side::Below] {
            let engine = zone_core::engine::sort_and_orient(&inst, side);
            let brute = oracle_order(&inst.working_lines(side), side);
            prop_assert_eq!(engine, brute);
        }
    }
}

#[test]
fn concurrent_ties_follow_slope() {
    // y = x and y = -x meet on the axis; y = -x is further left just above it
    let lines: Vec<Line<Rational>> = vec![Line::from_i64(1, -1, 0, 0).unwrap(), Line::from_i64(1, 1, 0, 1).unwrap()];
    let inst = canonicalize(&Line::x_axis(), &lines).unwrap();
    let above = zone_core::engine::sort_and_orient(&inst, Side::Above);
    assert_eq!(above.iter().map(|h| h.line.source_id).collect::<Vec<_>>(), vec![1, 0]);
    let below = zone_core::engine::sort_and_orient(&inst, Side::Below);
    assert_eq!(below.iter().map(|h| h.line.source_id).collect::<Vec<_>>(), vec![0, 1]);
}
