//! Commutative automorphic loops of order `p^3`.
//!
//! - [`loops`]: a general engine over explicit Cayley tables.
//! - [`free`]: closed-form arithmetic in the free 2-generated commutative
//!   automorphic loop of nilpotency class two and its finite quotient `F_p`.
//! - [`classify`]: the `GL_2(p)` action on the center of `F_p`, its orbits on
//!   3-dimensional subspaces, and the certified catalog of the seven loops of
//!   order `p^3`.

pub mod classify;
pub mod error;
pub mod free;
pub mod loops;
pub mod primes;

pub use error::{Error, Result};
