//! Exact computation in restricted rational Cherednik algebras at `t = 0`.
//!
//! The crate is layered bottom-up: exact scalars and sparse linear algebra,
//! Gröbner bases, complex reflection groups, PBW arithmetic in the rational
//! Cherednik algebra, the restricted quotient, graded Verma modules, a
//! MeatAxe over prime fields, and finally the lifting machinery that turns
//! modular radicals into exact heads and decomposition data.

pub mod cherednik;
pub mod exactalg;
pub mod groebner;
pub mod lift;
pub mod meataxe;
pub mod refgroup;
pub mod restricted;
pub mod verma;
