//! Exact 24-cell geometry, quaternionic symmetry groups, stereographic
//! edge arcs, a virtual LED fixture and a small sequencing language that
//! lights the fixture by symmetry orbits.
//!
//! The layers build on each other:
//!
//! * [`exactnum`]: ℚ(√2) scalars and exact quaternions.
//! * [`polytope`]: vertex sets, incidence and compounds.
//! * [`symmetry`]: isometries `x ↦ l·x·r`, group closure, stabilizers,
//!   orbits, edge rings and Hopf fibrations.
//! * [`projection`]: stereographic projection of vertices and edge arcs.
//! * [`fixture`]: LED strands laid along the projected arcs.
//! * [`script`]: the scene language, its evaluator and renderer.
//! * [`export`], [`framefile`], [`wire`]: the external file and message
//!   formats.

pub mod catalog;
pub mod exactnum;
pub mod export;
pub mod fixture;
pub mod framefile;
pub mod polytope;
pub mod projection;
pub mod script;
pub mod symmetry;
pub mod validate;
pub mod wire;

pub use exactnum::{QSqrt2, QuatEx};
