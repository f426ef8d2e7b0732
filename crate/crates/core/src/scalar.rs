//! Integer scalar abstraction shared by every exact kernel in the crate.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed Euclidean integer type.
///
/// Implemented for the primitive signed integers and for
/// [`num_bigint::BigInt`]. All algebra in the crate is generic over it;
/// the crate root exports [`BigInt`](num_bigint::BigInt)-backed aliases.
pub trait Scalar:
    Clone + Debug + Display + Eq + Ord + Hash + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("value does not fit the scalar type")
    }

    fn to_i64_exact(&self) -> Option<i64> {
        self.to_i64()
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Sign of an integer as -1, 0 or 1.
pub fn sign_of<T: Scalar>(v: &T) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
