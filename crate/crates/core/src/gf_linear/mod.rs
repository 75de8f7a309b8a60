//! Linear protocols over prime fields.
//!
//! A linear protocol is given by a matrix `A` supported on the edges of the
//! digraph (`a[u][v] != 0` only if `u -> v`; the diagonal stays zero). Vertex
//! `v` guesses `x_v = -sum_u a[u][v] x_u`, so the fixed configurations form
//! the null space of `I + A^T`, whose dimension is `n - rank(I + A)`.

mod matrix;
mod search;

pub use matrix::{is_prime, parse_matrix, rank_bits, write_matrix, GfMatrix};
pub use search::{
    in_degree_linear_uppers, johnson_half_distance, linear_guessing_number, linear_product_lower,
    ComponentLinear, LinearGuess, ProductLower, DEFAULT_LINEAR_BUDGET,
};

use crate::config::ConfigSpace;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProtocol {
    a: GfMatrix,
}

impl LinearProtocol {
    /// Fails unless `A` is square of order `n` and supported on the edges.
    pub fn new(d: &Digraph, a: GfMatrix) -> Result<Self> {
        if a.rows() != d.n() || a.cols() != d.n() {
            return Err(Error::BadParams(format!(
                "protocol matrix is {}x{}, digraph has {} vertices",
                a.rows(),
                a.cols(),
                d.n()
            )));
        }
        for u in 0..d.n() {
            for v in 0..d.n() {
                if a.get(u, v) != 0 && !d.has_edge(u, v) {
                    return Err(Error::BadParams(format!(
                        "entry ({u}, {v}) is nonzero but {u} -> {v} is not an edge"
                    )));
                }
            }
        }
        Ok(LinearProtocol { a })
    }

    /// The matrix `A` equal to the adjacency matrix times `scale`.
    pub fn scaled_adjacency(d: &Digraph, p: u64, scale: u64) -> Result<Self> {
        let mut a = GfMatrix::zeros(d.n(), d.n(), p)?;
        for (u, v) in d.edges() {
            a.set(u, v, scale);
        }
        Ok(LinearProtocol { a })
    }

    pub fn matrix(&self) -> &GfMatrix {
        &self.a
    }

    pub fn p(&self) -> u64 {
        self.a.p()
    }

    /// `I + A`.
    pub fn shifted(&self) -> GfMatrix {
        let n = self.a.rows();
        GfMatrix::identity(n, self.p())
            .and_then(|i| i.add(&self.a))
            .expect("same field and shape")
    }

    /// `n - rank(I + A)`.
    pub fn fixed_dimension(&self) -> usize {
        self.a.rows() - self.shifted().rank()
    }

    /// Basis of the fixed space.
    pub fn fixed_basis(&self) -> Vec<Vec<u64>> {
        self.shifted().transpose().nullspace()
    }

    /// Weight vertex `v` gives to in-neighbour `u`.
    pub fn coefficient(&self, v: usize, u: usize) -> u64 {
        (self.p() - self.a.get(u, v)) % self.p()
    }

    /// One round of guesses on the word `x`.
    pub fn apply(&self, d: &Digraph, x: &[u64]) -> Vec<u64> {
        let p = self.p();
        (0..d.n())
            .map(|v| {
                d.in_neighbors(v)
                    .iter()
                    .fold(0, |acc, &u| (acc + self.coefficient(v, u) * x[u]) % p)
            })
            .collect()
    }

    /// Fixed-space basis vectors as configuration codes over `[p]^n`.
    pub fn fixed_basis_codes(&self) -> Result<Vec<u64>> {
        let space = ConfigSpace::new(self.a.rows(), self.p())?;
        self.fixed_basis().iter().map(|v| space.encode(v)).collect()
    }

    /// Every element of the fixed space, ascending (guarded by `limit`).
    pub fn fixed_space_codes(&self, limit: u64) -> Result<Vec<u64>> {
        let space = ConfigSpace::new(self.a.rows(), self.p())?;
        let basis = self.fixed_basis_codes()?;
        crate::error::guard_pow("fixed space", self.p(), basis.len() as u32, limit)?;
        let mut all = vec![0u64];
        for b in basis {
            let mut next = Vec::with_capacity(all.len() * self.p() as usize);
            for &x in &all {
                let mut y = x;
                for _ in 0..self.p() {
                    next.push(y);
                    y = space.add(y, b);
                }
            }
            all = next;
        }
        all.sort_unstable();
        Ok(all)
    }
}

/// The parity-check protocol over GF(2): each vertex guesses the sum of its
/// in-neighbours. Its fixed configurations are the null space of
/// `H' = I + A_D^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheck {
    pub dimension: usize,
    /// Fixed-space basis as configuration codes over `[2]^n`.
    pub basis: Vec<u64>,
    /// `I + A_D^T`.
    pub matrix: GfMatrix,
}

pub fn parity_check_protocol(d: &Digraph) -> Result<ParityCheck> {
    let proto = LinearProtocol::scaled_adjacency(d, 2, 1)?;
    let matrix = proto.shifted().transpose();
    let basis_vecs = matrix.nullspace();
    for v in &basis_vecs {
        debug_assert_eq!(&proto.apply(d, v), v, "basis vector is not fixed");
    }
    let space = ConfigSpace::new(d.n(), 2)?;
    let basis = basis_vecs
        .iter()
        .map(|v| space.encode(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParityCheck {
        dimension: basis.len(),
        basis,
        matrix,
    })
}
