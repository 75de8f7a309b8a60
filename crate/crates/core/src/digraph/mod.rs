//! Simple digraphs on dense vertex ids `0..n`.
//!
//! Loops are rejected and parallel edges collapse; a pair of opposite edges
//! (a bidirectional edge) is allowed. Every digraph keeps both its out- and
//! in-neighbourhoods, sorted, so either side can be queried in O(log d).

mod analysis;
mod families;
mod io;

pub use analysis::{
    clique_partition_number, girth, mas_exact, strong_components, structure_report,
    CliquePartition, Condensation, Girth, Mas, StructureReport, DEFAULT_MAS_BUDGET,
};
pub use families::{linked_cycle_powers, standard, union, StandardKind, UnionKind};
pub use io::{parse_digraph, to_dot, write_digraph};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Digraph {
    /// The digraph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph { n, out_adj, in_adj })
    }

    /// Builds a digraph from edges already known to be valid.
    pub(crate) fn from_valid_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges).expect("edge list produced internally is valid")
    }

    /// From a 0/1 adjacency matrix; the diagonal must be zero.
    pub fn from_adjacency(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadParams(format!(
                    "adjacency row {u} has {} entries, expected {n}",
                    row.len()
                )));
            }
            edges.extend(
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(v, _)| (u, v)),
            );
        }
        Self::from_edges(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    /// Out-neighbours of `v`, ascending.
    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// In-neighbours of `v`, ascending.
    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn min_in_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    pub fn max_in_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v)).max().unwrap_or(0)
    }

    /// Number of unordered pairs joined in both directions.
    pub fn bidirectional_edge_count(&self) -> usize {
        self.edges()
            .filter(|&(u, v)| u < v && self.has_edge(v, u))
            .count()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.n]; self.n];
        for (u, v) in self.edges() {
            m[u][v] = true;
        }
        m
    }

    /// The in-neighbourhood of each vertex as a bit mask (requires `n <= 64`).
    pub(crate) fn in_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bit-mask view needs at most 64 vertices");
        self.in_adj
            .iter()
            .map(|ins| ins.iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect()
    }

    /// The subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &u)| {
            let index = &index;
            self.out_adj[u]
                .iter()
                .filter(move |&&v| index[v] != usize::MAX)
                .map(move |&v| (i, index[v]))
        });
        Digraph::from_valid_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// Same digraph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::BadParams("relabelling is not a permutation".into()));
        }
        Ok(Digraph::from_valid_edges(
            self.n,
            self.edges()
                .map(|(u, v)| (perm[u], perm[v]))
                .collect::<Vec<_>>(),
        ))
    }

    /// True if the subgraph induced by `vertices` has no directed cycle.
    pub fn is_acyclic_set(&self, vertices: &[usize]) -> bool {
        let mut member = vec![false; self.n];
        for &v in vertices {
            member[v] = true;
        }
        let mut indeg = vec![0usize; self.n];
        for &v in vertices {
            indeg[v] = self.in_adj[v].iter().filter(|&&u| member[u]).count();
        }
        let mut stack: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|&v| indeg[v] == 0)
            .collect();
        let mut removed = 0;
        while let Some(u) = stack.pop() {
            removed += 1;
            for &v in &self.out_adj[u] {
                if member[v] {
                    indeg[v] -= 1;
                    if indeg[v] == 0 {
                        stack.push(v);
                    }
                }
            }
        }
        let distinct = {
            let mut vs = vertices.to_vec();
            vs.sort_unstable();
            vs.dedup();
            vs.len()
        };
        removed == distinct
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_set(&(0..self.n).collect::<Vec<_>>())
    }

    /// Strong product; vertex `(u1, u2)` is `u1 * other.n() + u2`.
    ///
    /// `(u1,u2) -> (v1,v2)` whenever each coordinate is either fixed or moves
    /// along an edge of its factor, and not both are fixed.
    pub fn strong_product(&self, other: &Digraph) -> Digraph {
        let n2 = other.n;
        let mut edges = Vec::new();
        for u1 in 0..self.n {
            let step1: Vec<usize> = std::iter::once(u1)
                .chain(self.out_adj[u1].iter().copied())
                .collect();
            for u2 in 0..n2 {
                let step2: Vec<usize> = std::iter::once(u2)
                    .chain(other.out_adj[u2].iter().copied())
                    .collect();
                for &v1 in &step1 {
                    for &v2 in &step2 {
                        if v1 != u1 || v2 != u2 {
                            edges.push((u1 * n2 + u2, v1 * n2 + v2));
                        }
                    }
                }
            }
        }
        Digraph::from_valid_edges(self.n * n2, edges)
    }

    /// `k` copies of the digraph, vertex `(v, i)` indexed `v * k + i`, with
    /// `(u, i) -> (v, j)` for every edge `u -> v` and all copies `i, j`.
    pub fn k_expand(&self, k: usize) -> Result<Digraph> {
        if k == 0 {
            return Err(Error::BadParams("k_expand needs at least one copy".into()));
        }
        let mut edges = Vec::with_capacity(self.edge_count() * k * k);
        for (u, v) in self.edges() {
            for i in 0..k {
                for j in 0..k {
                    edges.push((u * k + i, v * k + j));
                }
            }
        }
        Ok(Digraph::from_valid_edges(self.n * k, edges))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_builds_cycle() {
        let c3 = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(c3.in_neighbors(0), &[2]);
        assert_eq!(c3.out_neighbors(0), &[1]);
    }

    #[test]
    fn bidirectional_pair_is_k2() {
        let k2 = Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.bidirectional_edge_count(), 1);
        assert_eq!(k2.edge_count(), 2);
    }

    #[test]
    fn loops_and_out_of_range_rejected() {
        assert_eq!(Digraph::from_edges(3, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(
            Digraph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn duplicates_collapse() {
        let d = Digraph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(d.edge_count(), 1);
    }

    #[test]
    fn k_expand_in_neighbourhoods() {
        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        let d = c3.k_expand(2).unwrap();
        assert_eq!(d.n(), 6);
        for v in 0..6 {
            assert_eq!(d.in_degree(v), 2);
        }
        // (1, i) sees both copies of vertex 0.
        assert_eq!(d.in_neighbors(2), &[0, 1]);
        assert_eq!(d.in_neighbors(3), &[0, 1]);
        assert_eq!(c3.k_expand(1).unwrap(), c3);
    }

    #[test]
    fn k_expand_of_k2() {
        let k2 = standard(StandardKind::Clique(2)).unwrap();
        let d = k2.k_expand(2).unwrap();
        let expected: Vec<(usize, usize)> = vec![
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 0),
            (2, 1),
            (3, 0),
            (3, 1),
        ];
        assert_eq!(d.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn strong_product_of_cycles() {
        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        let p = c3.strong_product(&c3);
        assert_eq!(p.n(), 9);
        for v in 0..9 {
            assert_eq!(p.in_degree(v), 3);
            assert_eq!(p.out_degree(v), 3);
        }
        let k1 = Digraph::empty(1);
        assert_eq!(k1.strong_product(&c3), c3);
        assert_eq!(c3.strong_product(&k1), c3);
    }

    #[test]
    fn induced_subgraph_and_acyclicity() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        assert!(k3.is_acyclic_set(&[1]));
        assert!(!k3.is_acyclic_set(&[0, 2]));
        let h = k3.induced(&[0, 2]);
        assert_eq!(h, standard(StandardKind::Clique(2)).unwrap());
    }
}
