use proptest::prelude::*;
use zone_core::{diff, oracle_zone, zone, Line, Rational, ZoneError};

fn line(id: usize) -> impl Strategy<Value = Line<Rational>> {
    (-9i64..=9, -9i64..=9, -9i64..=9)
        .prop_filter("nonzero normal", |(a, b, _)| *a != 0 || *b != 0)
        .prop_map(move |(a, b, c)| Line::from_i64(a, b, c, id).unwrap())
}

fn check(query: &Line<Rational>, lines: &[Line<Rational>]) -> Result<(), TestCaseError> {
    match (zone(query, lines), oracle_zone(query, lines)) {
        (Ok(z), Ok(o)) => {
            let report = diff(&z, &o);
            prop_assert!(report.is_empty(), "{}", report);
        }
        (Err(ZoneError::QueryInArrangement { .. }), Err(ZoneError::QueryInArrangement { .. })) => {}
        (z, o) => prop_assert!(false, "engine {:?} vs oracle {:?}", z.err(), o.err()),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn x_axis_query(lines in prop::collection::vec(line(0), 0..=12)) {
        let lines: Vec<_> = lines.into_iter().enumerate().map(|(i, l)| l.with_source(i)).collect();
        check(&Line::x_axis(), &lines)?;
    }

    #[test]
    fn arbitrary_query(query in line(usize::MAX), lines in prop::collection::vec(line(0), 0..=12)) {
        let lines: Vec<_> = lines.into_iter().enumerate().map(|(i, l)| l.with_source(i)).collect();
        check(&query, &lines)?;
    }

    #[test]
    fn concurrent_on_axis(x0 in -5i64..=5, slopes in prop::collection::vec(-9i64..=9, 3..=8), extra in prop::collection::vec(line(0), 0..=4)) {
        // lines through (x0, 0) with various slopes, some vertical
        let mut lines: Vec<Line<Rational>> = slopes
            .iter()
            .map(|&s| if s == 0 { Line::from_i64(1, 0, -x0, 0).unwrap() } else { Line::from_i64(s, -1, -s * x0, 0).unwrap() })
            .collect();
        lines.extend(extra);
        let lines: Vec<_> = lines.into_iter().enumerate().map(|(i, l)| l.with_source(i)).collect();
        check(&Line::x_axis(), &lines)?;
    }
}
