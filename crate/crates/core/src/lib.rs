//! Mesh friezes on simply laced Dynkin diagrams.
//!
//! A mesh frieze assigns a positive real value to every occurrence of a
//! vertex in the translation quiver of a bipartite ADE diagram, subject to
//! the mesh relations: the product of two consecutive occurrences of a
//! vertex equals one plus the product of the neighbouring values between
//! them. This crate provides
//!
//! * the bipartite ADE quivers ([`quiver`]),
//! * exact arithmetic in the small real fields the closed-form friezes
//!   live in ([`algebra`]),
//! * the closed-form constant, 2-periodic and 4-periodic frieze families
//!   ([`families`]),
//! * periodic friezes, band propagation and period detection ([`frieze`]),
//! * a damped Gauss-Newton solver in log coordinates together with
//!   tangent-space and linearised translation-map diagnostics used to
//!   re-derive the size of the solution set numerically ([`solver`]).
//!
//! The crate is `no_std` (with `alloc`); IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod families;
pub mod frieze;
pub mod quiver;
pub mod solver;

pub use algebra::scalar::{Backend, Scalar};
pub use algebra::field::FieldId;
pub use frieze::{FriezeBand, PeriodicFrieze, ResidualReport};
pub use quiver::{BipartiteQuiver, DynkinType, Series};
