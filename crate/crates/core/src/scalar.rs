//! Exact scalar types.
//!
//! Everything downstream is generic over [`Scalar`], an ordered field with
//! exact arithmetic. Floating point types are deliberately not admitted:
//! the degenerate-input handling relies on exact equality tests.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar:
    Clone + Ord + Num + Signed + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `num / den`; panics if `den == 0`.
    fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Parses an integer or a `p/q` literal. Returns `None` on malformed
    /// text, a zero denominator, or a value that does not fit the type.
    fn parse_fraction(text: &str) -> Option<Self>;

    /// Always `num/den`, reduced, with a positive denominator.
    fn to_fraction_string(&self) -> String;

    /// Lossy conversion, only meant for display.
    fn to_f64(&self) -> f64;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer
        + Signed
        + Clone
        + FromPrimitive
        + ToPrimitive
        + std::str::FromStr
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("i64 does not fit the integer type"))
    }

    fn parse_fraction(text: &str) -> Option<Self> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        if !is_integer_literal(num) || !is_integer_literal(den) {
            return None;
        }
        let num: I = num.parse().ok()?;
        let den: I = den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num, den))
    }

    fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn to_f64(&self) -> f64 {
        match (self.numer().to_f64(), self.denom().to_f64()) {
            (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
            _ => f64::NAN,
        }
    }
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}
