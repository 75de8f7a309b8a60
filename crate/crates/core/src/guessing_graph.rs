//! The guessing graph `G(D, s)`.
//!
//! Its vertices are the configurations `[s]^n`; `x ~ y` when some vertex `i`
//! has `x_i != y_i` while `x` and `y` agree on the in-neighbourhood of `i`.
//! Adjacency only depends on the set of coordinates where `x` and `y`
//! differ, so the graph is a Cayley graph of `Z_s^n` and every neighbourhood
//! is a translate of the connection set (the neighbours of `0`).

use crate::config::ConfigSpace;
use crate::digraph::Digraph;
use crate::error::{guard_pow, Error, Result};
use crate::ugraph::BitGraph;

/// Default cap on `s^n` for materializing a guessing graph.
pub const DEFAULT_GUARD: u64 = 1 << 22;

/// Largest `s^n` for which dense bit rows are built (32 MiB of adjacency).
pub const DENSE_LIMIT: u64 = 1 << 14;

#[derive(Debug, Clone)]
pub struct GuessingGraph {
    digraph: Digraph,
    space: ConfigSpace,
    in_masks: Vec<u64>,
    connection: Option<Vec<u64>>,
    dense: Option<BitGraph>,
}

impl GuessingGraph {
    /// Oracle-only handle; needs `n <= 64` and `s^n < 2^64`.
    pub fn new(d: &Digraph, s: u64) -> Result<Self> {
        let space = ConfigSpace::new(d.n(), s)?;
        Ok(GuessingGraph {
            in_masks: d.in_masks(),
            digraph: d.clone(),
            space,
            connection: None,
            dense: None,
        })
    }

    /// Builds the connection set, and dense adjacency when `s^n` is at most
    /// [`DENSE_LIMIT`]. Fails with a size guard error when `s^n > guard`.
    pub fn materialize(d: &Digraph, s: u64, guard: u64) -> Result<Self> {
        if s < 2 {
            return Err(Error::BadParams(format!(
                "alphabet size must be at least 2, got {s}"
            )));
        }
        guard_pow("guessing graph", s, d.n() as u32, guard)?;
        let mut h = GuessingGraph::new(d, s)?;
        let size = h.space.size();
        let connection: Vec<u64> = (1..size)
            .filter(|&delta| h.adjacent_support(h.space.support(delta)))
            .collect();
        if size <= DENSE_LIMIT {
            let mut g = BitGraph::new(size as usize);
            for x in 0..size {
                for &delta in &connection {
                    let y = h.space.add(x, delta);
                    if y > x {
                        g.add_edge(x as usize, y as usize);
                    }
                }
            }
            h.dense = Some(g);
        }
        h.connection = Some(connection);
        Ok(h)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn space(&self) -> &ConfigSpace {
        &self.space
    }

    pub fn s(&self) -> u64 {
        self.space.s()
    }

    /// Number of configurations `s^n`.
    pub fn order(&self) -> u64 {
        self.space.size()
    }

    /// Whether two configurations differing exactly on the coordinate set
    /// `support` are adjacent.
    #[inline]
    pub fn adjacent_support(&self, support: u64) -> bool {
        let mut m = support;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            if self.in_masks[i] & support == 0 {
                return true;
            }
            m &= m - 1;
        }
        false
    }

    pub fn adjacent(&self, x: u64, y: u64) -> Result<bool> {
        self.space.check(x)?;
        self.space.check(y)?;
        Ok(self.adjacent_support(self.space.support(self.space.sub(x, y))))
    }

    /// Sorted neighbours of `0`, when materialized.
    pub fn connection_set(&self) -> Option<&[u64]> {
        self.connection.as_deref()
    }

    pub fn dense(&self) -> Option<&BitGraph> {
        self.dense.as_ref()
    }

    /// The dense adjacency, or a size guard error naming `s^n`.
    pub fn require_dense(&self) -> Result<&BitGraph> {
        self.dense.as_ref().ok_or(Error::SizeGuard {
            what: "dense guessing graph",
            base: self.space.s(),
            exponent: self.space.n() as u32,
            guard: DENSE_LIMIT,
        })
    }

    /// Sorted neighbours of `x`.
    pub fn neighbors(&self, x: u64) -> Result<Vec<u64>> {
        self.space.check(x)?;
        let mut out: Vec<u64> = match &self.connection {
            Some(conn) => conn.iter().map(|&d| self.space.add(x, d)).collect(),
            None => {
                guard_pow(
                    "neighbour enumeration",
                    self.s(),
                    self.space.n() as u32,
                    DEFAULT_GUARD,
                )?;
                (0..self.order())
                    .filter(|&y| self.adjacent_support(self.space.support(self.space.sub(x, y))))
                    .collect()
            }
        };
        out.sort_unstable();
        Ok(out)
    }

    /// Plain-text edge list over configuration codes.
    pub fn to_edge_list(&self) -> Result<String> {
        Ok(self.require_dense()?.to_edge_list())
    }
}

/// Degree of `G(D, s)` by inclusion-exclusion over the independent vertex
/// sets `I` of `D`:
/// `sum (-1)^(|I|-1) (s-1)^|I| s^(n - |N-(I)| - |I|)`.
///
/// Never touches a configuration; needs `n <= 64` and `s^n < 2^64`.
pub fn degree_closed_form(d: &Digraph, s: u64) -> Result<u64> {
    let space = ConfigSpace::new(d.n(), s)?;
    let n = d.n();
    let ins = d.in_masks();
    let outs: Vec<u64> = (0..n)
        .map(|v| d.out_neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let s = space.s() as i128;

    // Extend `chosen` with vertices >= `next` that are not in `blocked`.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        next: usize,
        chosen: u32,
        in_union: u64,
        blocked: u64,
        n: usize,
        s: i128,
        ins: &[u64],
        outs: &[u64],
        total: &mut i128,
    ) {
        for v in next..n {
            if blocked >> v & 1 == 1 {
                continue;
            }
            let size = chosen + 1;
            let union = in_union | ins[v];
            let free = n as u32 - union.count_ones() - size;
            let term = (s - 1).pow(size) * s.pow(free);
            if size % 2 == 1 {
                *total += term;
            } else {
                *total -= term;
            }
            walk(
                v + 1,
                size,
                union,
                blocked | ins[v] | outs[v],
                n,
                s,
                ins,
                outs,
                total,
            );
        }
    }

    let mut total = 0i128;
    walk(0, 0, 0, 0, n, s, &ins, &outs, &mut total);
    Ok(total as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, StandardKind};

    fn k3() -> Digraph {
        standard(StandardKind::Clique(3)).unwrap()
    }

    fn c3() -> Digraph {
        standard(StandardKind::Cycle(3)).unwrap()
    }

    #[test]
    fn clique_gives_hamming_graph() {
        let h = GuessingGraph::new(&k3(), 2).unwrap();
        assert!(h.adjacent(0b000, 0b001).unwrap());
        assert!(!h.adjacent(0b000, 0b011).unwrap());
        assert!(!h.adjacent(5, 5).unwrap());
        assert_eq!(h.neighbors(0).unwrap(), vec![0b001, 0b010, 0b100]);
    }

    #[test]
    fn cycle_joins_all_but_opposite_words() {
        let h = GuessingGraph::new(&c3(), 2).unwrap();
        assert!(!h.adjacent(0b000, 0b111).unwrap());
        assert_eq!(h.neighbors(0).unwrap(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn materialized_cube() {
        let h = GuessingGraph::materialize(&k3(), 2, DEFAULT_GUARD).unwrap();
        let g = h.dense().unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 12));
        let h = GuessingGraph::materialize(&c3(), 2, DEFAULT_GUARD).unwrap();
        assert!((0..8).all(|v| h.dense().unwrap().degree(v) == 6));
    }

    #[test]
    fn guard_reports_exponent() {
        let c4 = standard(StandardKind::Cycle(4)).unwrap();
        let err = GuessingGraph::materialize(&c4, 3, 1 << 6).unwrap_err();
        assert_eq!(
            err,
            Error::SizeGuard {
                what: "guessing graph",
                base: 3,
                exponent: 4,
                guard: 64
            }
        );
    }

    #[test]
    fn alphabet_mismatch() {
        let h = GuessingGraph::new(&c3(), 2).unwrap();
        assert!(matches!(
            h.adjacent(8, 0),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn closed_form_small_cases() {
        assert_eq!(degree_closed_form(&k3(), 2).unwrap(), 3);
        assert_eq!(degree_closed_form(&c3(), 2).unwrap(), 6);
        let p = standard(StandardKind::Path(4)).unwrap();
        assert_eq!(degree_closed_form(&p, 3).unwrap(), 80);
    }
}
