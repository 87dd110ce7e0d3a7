//! The integer scalar abstraction used by the linear algebra.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integers: machine widths for speed, [`BigInt`] when entries
/// may grow during elimination.
pub trait IntegerScalar:
    Clone + Debug + Display + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// `(g, x, y)` with `g = x·a + y·b` and `g > 0`, for `a, b` not both zero.
    fn bezout(a: &Self, b: &Self) -> (Self, Self, Self) {
        let e = a.extended_gcd(b);
        if e.gcd.is_negative() {
            (-e.gcd, -e.x, -e.y)
        } else {
            (e.gcd, e.x, e.y)
        }
    }

    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("small integers are representable")
    }
}

impl IntegerScalar for i64 {}
impl IntegerScalar for i128 {}
impl IntegerScalar for BigInt {}
