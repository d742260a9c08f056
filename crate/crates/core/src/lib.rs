//! Exact Ehrhart polynomials and quasipolynomials of Coxeter permutahedra of
//! classical type and of almost-integral zonotopes.
//!
//! Three independent routes compute the same counting functions:
//!
//! * the forest route ([`zonotope::ehrhart_integral_coxeter`],
//!   [`zonotope::ehrhart_standard_coxeter`]) sums over signed pseudoforests;
//! * the generic route ([`zonotope::ehrhart_almost_integral`]) sums over
//!   independent generator subsets with exact lattice tests;
//! * the series route ([`egf`]) extracts values from exponential generating
//!   functions built on the Lambert `W` series.
//!
//! [`oracle`] counts lattice points directly and serves as ground truth.

pub mod egf;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod quasi;
pub mod roots;
pub mod series;
pub mod signed_graph;
pub mod tables;
pub mod zonotope;

pub use error::{Error, Result};
pub use linalg::{IntVector, RatVector};
pub use quasi::QuasiPolynomial;
pub use roots::{positive_roots, PositiveRootSet, RootFamily};
pub use zonotope::ZonotopeSpec;
