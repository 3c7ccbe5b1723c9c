//! Exact symbolic calculus for characteristic classes of vector bundles.
//!
//! The engine works in two families of graded rings: for oriented bundles of
//! rank `d`, the subring generated by the Pontrjagin classes `p_1 .. p_{d/2}`
//! and the Euler class `e` (subject to `e^2 = p_{d/2}` in even rank and
//! `e^2 = 0` in odd rank), and for unoriented bundles the full mod-2
//! polynomial ring on the Stiefel-Whitney classes `w_1 .. w_d`.
//!
//! On top of the rings sit the rank-one Thom module ([`ThomClass`], a degree
//! shift by `-d`), the sphere-bundle pullback and Gysin pushforward
//! ([`gysin`]), universal tangential classes with their boundary map
//! ([`universal`]), and degree-bounded enumeration of the resulting
//! vanishing verdicts ([`tabulate`]).
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, or
//! the field of two elements. Every value is immutable and every operation
//! is a pure function, so everything here is safe to share across threads.

pub mod coeff;
pub mod error;
pub mod gysin;
pub mod ring;
pub mod tabulate;
pub mod thom;
pub mod universal;

pub use coeff::{CoeffRing, Coefficient};
pub use error::Error;
pub use ring::{basis_of_degree, Flavor, Generator, GradedClass, Monomial, RingSpec, TorsionMode};
pub use tabulate::{enumerate_table, kappa_table, TableRow};
pub use thom::ThomClass;
pub use universal::{
    delta_star, kappa, rho, vanishes_on_boundary, PrimitiveClass, UniversalClass, VanishingReason,
    Verdict,
};
