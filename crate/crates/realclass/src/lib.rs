//! Exact counting of real conjugacy classes in finite linear and unitary
//! groups, cross-checked three independent ways.
//!
//! A conjugacy class is *real* when it is closed under inversion. For the
//! groups GL(n,q), U(n,q), their determinant-one subgroups, and their
//! central quotients PGL(n,q) and PGU(n,q), the number of real classes has
//! closed forms governed by self-reciprocal polynomials over finite fields.
//! This crate implements those counts at three layers:
//!
//! - [`count`]: per-type and total class counts from the closed formulas;
//! - [`series`]: the generating functions whose coefficients reproduce the
//!   same totals, computed as exact truncated integer power series;
//! - [`census`]: a brute-force enumeration of small matrix groups that
//!   recomputes every quantity from the group elements themselves.
//!
//! The three layers share only the field arithmetic in [`ff`] and the
//! polynomial operators in [`poly`], so agreement between them is a real
//! check, not a tautology. [`verify`] wires the cross-layer comparisons
//! into a reusable suite; the `realclass` binary exposes everything on the
//! command line.

// parity and divisibility read as remainder tests throughout
#![allow(clippy::manual_is_multiple_of)]

pub mod census;
pub mod count;
pub mod error;
pub mod ff;
mod guard;
pub mod partition;
pub mod poly;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
