//! `Ratio<i128>` with cheap comparisons.
//!
//! `num_rational` compares ratios by a division-based continued fraction
//! walk, and tests equality the same way. Ratios are always kept reduced
//! with a positive denominator, so equality is a field comparison and
//! ordering is a cross multiplication whenever that fits in 128 bits.
//! Arithmetic is delegated unchanged and panics on overflow.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_rational::Ratio;
use num_traits::{Num, One, Signed, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default)]
pub struct FastRational(pub Ratio<i128>);

impl FastRational {
    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }
}

impl PartialEq for FastRational {
    fn eq(&self, other: &Self) -> bool {
        self.numer() == other.numer() && self.denom() == other.denom()
    }
}

impl Eq for FastRational {}

impl Hash for FastRational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.numer().hash(state);
        self.denom().hash(state);
    }
}

impl Ord for FastRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, c, d) = (self.numer(), self.denom(), other.numer(), other.denom());
        if b == d {
            return a.cmp(&c);
        }
        match (a.checked_mul(d), c.checked_mul(b)) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for FastRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FastRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

macro_rules! delegate_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for FastRational {
            type Output = FastRational;

            fn $method(self, rhs: FastRational) -> FastRational {
                FastRational(self.0.$method(rhs.0))
            }
        }
    )*};
}

delegate_binop!(Add add, Sub sub, Mul mul, Div div, Rem rem);

impl Neg for FastRational {
    type Output = FastRational;

    fn neg(self) -> FastRational {
        FastRational(-self.0)
    }
}

impl Zero for FastRational {
    fn zero() -> Self {
        FastRational(Ratio::zero())
    }

    fn is_zero(&self) -> bool {
        self.numer() == 0
    }
}

impl One for FastRational {
    fn one() -> Self {
        FastRational(Ratio::one())
    }

    fn is_one(&self) -> bool {
        self.numer() == 1 && self.denom() == 1
    }
}

impl Num for FastRational {
    type FromStrRadixErr = <Ratio<i128> as Num>::FromStrRadixErr;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        Ratio::from_str_radix(s, radix).map(FastRational)
    }
}

impl Signed for FastRational {
    fn abs(&self) -> Self {
        FastRational(self.0.abs())
    }

    fn abs_sub(&self, other: &Self) -> Self {
        FastRational(self.0.abs_sub(&other.0))
    }

    fn signum(&self) -> Self {
        FastRational(self.0.signum())
    }

    fn is_positive(&self) -> bool {
        self.numer() > 0
    }

    fn is_negative(&self) -> bool {
        self.numer() < 0
    }
}

impl Scalar for FastRational {
    fn from_i64(v: i64) -> Self {
        FastRational(Ratio::from_integer(i128::from(v)))
    }

    fn parse_fraction(text: &str) -> Option<Self> {
        Ratio::<i128>::parse_fraction(text).map(FastRational)
    }

    fn to_fraction_string(&self) -> String {
        self.0.to_fraction_string()
    }

    fn to_f64(&self) -> f64 {
        Scalar::to_f64(&self.0)
    }
}
