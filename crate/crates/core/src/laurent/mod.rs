//! Multivariate Laurent polynomials, rational functions and polynomial
//! matrices over a [`Scalar`](crate::scalars::Scalar) field.

mod matrix;
mod poly;
mod rational;
mod univariate;

pub use matrix::PolyMatrix;
pub use poly::{var_names, Exponent, LaurentPoly};
pub use rational::{
    default_tolerance, equal_up_to_unit, equal_up_to_unit_tol, rational_reduce, RationalFn, Reduced, Unit,
    UnitClass,
};
pub use univariate::UniPoly;
