//! Multiple-unicast network coding: sink `i` wants the message of source
//! `i`. Merging each source with its sink turns an instance into a digraph
//! whose guessing game decides solvability.

mod instance;
mod io;
mod solve;

pub use instance::{
    bottleneck, butterfly, from_digraph, to_guessing_digraph, GuessingForm, NetworkInstance,
    Provenance, Role,
};
pub use io::{parse_instance, write_instance};
pub use solve::{solvable, Certificate, NodeFunction, Solvability, Verdict, SIMULATION_GUARD};
