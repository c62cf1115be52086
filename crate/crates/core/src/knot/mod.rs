//! Knot and link invariants computed from link diagrams.
//!
//! The Conway polynomial is evaluated by the skein relation with a
//! descending-diagram strategy; the z^2 coefficient of knots is also
//! computable by an independent Gauss-diagram count, and the two routes
//! cross-validate each other.

pub mod braid;
mod conway;
mod gauss;
mod linking;

pub use conway::{a2, conway_polynomial, simplify, ConwayPolynomial};
pub use gauss::a2_gauss;
pub use linking::linking_number;
