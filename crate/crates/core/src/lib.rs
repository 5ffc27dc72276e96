//! Exact symbolic reduction of rational second-order ODEs.
//!
//! Given `y'' = M(x,y,y')/N(x,y,y')` with polynomial `M`, `N`, this crate
//! searches for a pair of rational functions (S, R) satisfying the
//! compatibility system
//!
//! ```text
//! D[S] = -phi_y + S phi_y' + S^2
//! D[R] = -R (S + phi_y')
//! R_y  = R_y' S + S_y' R
//! ```
//!
//! with `phi = M/N` and `D = d/dx + y' d/dy + phi d/dy'`, builds the
//! first-order invariant `I(x, y, y')` whose gradient is
//! `(R(phi + S y'), -RS, -R)` by nested quadrature, and verifies `D[I] = 0`
//! both symbolically and numerically. The classical integrating-factor
//! procedure for first-order rational ODEs (Darboux polynomials plus the
//! exponent system) is included and reused by the second-order search.
//!
//! Everything symbolic runs over arbitrary-precision rationals; floats
//! appear only in the Runge-Kutta drift check. The crate is `no_std`
//! compatible (`alloc` required); disable default features and enable
//! `libm` for the numeric verifier without `std`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod algsys;
pub mod darboux;
pub mod gcd;
pub mod integrate;
pub mod invariant;
pub mod limits;
pub mod ode;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod ratfun;
pub mod render;
pub mod search;
pub mod sym;
pub mod unipoly;
pub mod verify;

#[cfg(any(feature = "std", feature = "libm"))]
pub mod numeric;

pub use invariant::{equivalent, ElemInvariant};
pub use ode::{Foode, OdeInput, Soode};
pub use parse::{parse_expr, parse_ode, ParseError};
pub use poly::{Mono, Poly, Var};
pub use rat::Rat;
pub use ratfun::RatFun;
pub use render::{render_invariant, render_poly, render_ratfun};
pub use search::{search, SrPair};
