//! Hilbert functions of fat point schemes supported on a rational normal
//! cubic curve in P^3.
//!
//! The main entry point is [`cubic::ideal_dim`]: a combinatorial recursion
//! that depends only on the multiplicity multiset, lowering the minimal
//! multiplicity one step at a time and charging each step with the dimension
//! of a fat point ideal on a plane conic ([`conic`]). The [`oracle`] module
//! answers the same questions by exact rank computations of interpolation
//! matrices over a prime field at explicit random points, giving an
//! independent check on every value the recursion produces.

pub mod conic;
pub mod cubic;
pub mod error;
pub mod oracle;
pub mod schemes;

pub use error::Error;
pub use schemes::{binomial, scheme_degree, Ambient, ConicScheme, FatPointScheme};
