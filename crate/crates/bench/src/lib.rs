//! Digraphs shared by the benchmarks.

use guessgraph_core::cyclic::{digraph_from_polynomial, Gf2Poly};
use guessgraph_core::digraph::{standard, StandardKind};
use guessgraph_core::Digraph;

pub fn cycle(n: usize) -> Digraph {
    standard(StandardKind::Cycle(n)).expect("n >= 2")
}

pub fn cycle_square() -> Digraph {
    cycle(3).strong_product(&cycle(3))
}

/// Digraph of a polynomial given as `x^a+...`; panics on a bad literal.
pub fn polynomial_digraph(poly: &str, n: usize) -> Digraph {
    let g: Gf2Poly = poly.parse().expect("valid polynomial literal");
    digraph_from_polynomial(&g, n).expect("constant term set and degree below n")
}
