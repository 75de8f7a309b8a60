//! Dense undirected graphs stored as bit rows, and the four graph products.

use std::fmt;

/// Simple undirected graph on `0..n`, one bit row per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for BitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BitGraph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut m = word;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(w * 64 + b)
            }
        })
    })
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = BitGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Words per bit row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v, "no loops in a simple graph");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// First adjacent pair inside `set`, if any.
    pub fn find_edge_within(&self, set: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if u == v || self.has_edge(u, v) {
                    return Some((u.min(v), u.max(v)));
                }
            }
        }
        None
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.find_edge_within(set).is_none()
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True when every vertex has a color and adjacent vertices differ.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n && self.edges().all(|(u, v)| colors[u] != colors[v])
    }

    /// Plain-text edge list: `N` on the first line, then `u v` with `u < v`.
    pub fn to_edge_list(&self) -> String {
        use std::fmt::Write as _;
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// The graph products used by the union laws. Vertex `(u1, u2)` of a product
/// is `u1 + g1.n() * u2`, which matches how configurations of a union of
/// digraphs split into the two parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Product {
    /// Adjacent when either coordinate is adjacent.
    CoNormal,
    /// Adjacent when the first coordinates are adjacent, or they are equal
    /// and the second coordinates are adjacent.
    Lexicographic,
    /// Adjacent when one coordinate is equal and the other adjacent, or both
    /// are adjacent.
    Strong,
    /// Adjacent when one coordinate is equal and the other adjacent.
    Cartesian,
}

pub fn product(kind: Product, g1: &BitGraph, g2: &BitGraph) -> BitGraph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut p = BitGraph::new(n1 * n2);
    for u2 in 0..n2 {
        for u1 in 0..n1 {
            let u = u1 + n1 * u2;
            for v2 in 0..n2 {
                for v1 in 0..n1 {
                    let v = v1 + n1 * v2;
                    if v <= u {
                        continue;
                    }
                    let (a1, e1) = (g1.has_edge(u1, v1), u1 == v1);
                    let (a2, e2) = (g2.has_edge(u2, v2), u2 == v2);
                    let adjacent = match kind {
                        Product::CoNormal => a1 || a2,
                        Product::Lexicographic => a1 || (e1 && a2),
                        Product::Strong => (e1 && a2) || (e2 && a1) || (a1 && a2),
                        Product::Cartesian => (e1 && a2) || (e2 && a1),
                    };
                    if adjacent {
                        p.add_edge(u, v);
                    }
                }
            }
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> BitGraph {
        let mut g = BitGraph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g
    }

    #[test]
    fn rows_and_edges() {
        let g = path3();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert!(g.is_independent(&[0, 2]));
        assert_eq!(g.find_edge_within(&[2, 1]), Some((1, 2)));
        assert!(g.is_proper_coloring(&[0, 1, 0]));
        assert!(!g.is_proper_coloring(&[0, 0, 1]));
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut g = BitGraph::new(130);
        g.add_edge(3, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 3));
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(3, 129), (64, 65)]);
    }

    #[test]
    fn product_edge_counts_on_k2() {
        let k2 = BitGraph::complete(2);
        // K2 x K2 under each product.
        assert_eq!(product(Product::Cartesian, &k2, &k2).edge_count(), 4);
        assert_eq!(product(Product::Strong, &k2, &k2).edge_count(), 6);
        assert_eq!(product(Product::CoNormal, &k2, &k2).edge_count(), 6);
        assert_eq!(product(Product::Lexicographic, &k2, &k2).edge_count(), 6);
        let e2 = BitGraph::new(2);
        // Empty first factor: lexicographic keeps only the second factor's edges.
        let lex = product(Product::Lexicographic, &e2, &k2);
        assert_eq!(lex.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(product(Product::CoNormal, &e2, &k2).edge_count(), 4);
    }
}
