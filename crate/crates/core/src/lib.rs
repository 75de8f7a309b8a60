//! Guessing games on digraphs.
//!
//! Computes guessing numbers, information defects and linear guessing
//! numbers through the guessing graph, builds digraphs from binary cyclic
//! codes and graph products, and decides solvability of multiple-unicast
//! network coding instances.

pub mod config;
pub mod cyclic;
pub mod digraph;
pub mod error;
pub mod gf_linear;
pub mod guessing_graph;
pub mod netcode;
pub mod search;
pub mod solvers;
pub mod ugraph;

pub use config::ConfigSpace;
pub use digraph::{Digraph, Girth, StructureReport};
pub use error::{Error, Result};
pub use guessing_graph::GuessingGraph;
pub use solvers::{
    guessing_number, information_defect, BoundsReport, GuessingNumber, InformationDefect, Protocol,
    SolveOptions,
};
