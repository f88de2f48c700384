//! Scalar abstraction for grid coordinates.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_rational::BigRational;
use num_traits::Signed;

/// A totally ordered signed ring element usable as a grid coordinate.
///
/// Integer coordinates describe finished representations. Exact rationals
/// serve as a scratch canvas while constructors keep inserting new grid
/// lines between existing ones; the result is compressed back to integers.
pub trait Coord: Clone + Ord + Hash + Debug + Display + Signed {}

impl<T> Coord for T where T: Clone + Ord + Hash + Debug + Display + Signed {}

/// Exact rational scalar used by the construction canvases.
pub type Rational = BigRational;

/// Build a rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Build the rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
