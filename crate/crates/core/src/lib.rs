//! Exact solver, formula library and strategy laboratory for the
//! fixed-patrol cops-and-robbers game with a capture radius.
//!
//! The cop commits to a finite walk (the patrol) before play; the robber
//! knows the whole patrol in advance and is captured when, after a cop
//! move, he sits within distance rho of the cop. `range(G)` is the least
//! rho for which some patrol guarantees capture. The crate computes that
//! value exactly on small graphs, checks it against the closed-form
//! predictions available for trees, cycles, cycle-triods, clique-triods,
//! interval graphs and grids, and replays the constructive cop and robber
//! strategies those results come with.

pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod retracts;
pub mod solver;
pub mod strategies;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, Radius, Walk};
pub use vertex_set::VertexSet;
