//! Twisted (h,q)-Euler numbers and polynomials, their generalized versions
//! attached to Dirichlet characters, the associated zeta- and l-functions over
//! the complex numbers, and the p-adic twisted Euler (h,q)-l-function.
//!
//! Everything that can be computed exactly is computed exactly: scalars live in
//! cyclotomic fields `Q(zeta_m)` with big-rational coefficients ([`cyclo`]),
//! complex evaluations use arbitrary-precision floats with rigorous truncation
//! bounds ([`zeta`]), and p-adic evaluations use truncated arithmetic that
//! tracks its certified precision instead of silently claiming more ([`padic`]).
//!
//! The crate is organized bottom-up:
//!
//! * [`rational`] — big-rational helpers and generalized binomial coefficients
//! * [`cyclo`] — exact arithmetic in cyclotomic fields, canonical forms
//! * [`qbracket`] — the q-deformation primitives `[x]_q`, `[x]_{-q}`, `[2]_q`
//! * [`characters`] — Dirichlet characters of odd conductor, Teichmüller twists
//! * [`euler`] — exact twisted (h,q)-Euler polynomials/numbers and the
//!   distribution relation
//! * [`cfloat`] — complex big-float scaffolding and cyclotomic embeddings
//! * [`zeta`] — complex zeta/l-functions interpolating the Euler values
//! * [`padic`] — truncated p-adic and ramified arithmetic, fermionic integrals
//! * [`padic_l`] — p-adic partial zeta functions and the p-adic l-function
//! * [`verify`] — the identity-check suites behind `qeuler verify`

pub mod cfloat;
pub mod characters;
pub mod cyclo;
pub mod error;
pub mod euler;
pub mod padic;
pub mod padic_l;
pub mod qbracket;
pub mod rational;
pub mod verify;
pub mod zeta;

pub use cyclo::Cyclo;
pub use error::Error;
pub use rational::BigRational;
