use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer coefficient ring.
///
/// Every divisor met during reduction is monic, so an integral domain
/// with exact division is all the algebra needs. Implemented for the
/// machine integers and for `BigInt`.
pub trait Scalar:
    Clone + Debug + Display + Hash + Ord + Signed + Integer + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer out of range for scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Hash + Ord + Signed + Integer + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}
