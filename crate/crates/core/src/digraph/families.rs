use super::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    /// All ordered pairs: every edge bidirectional.
    Clique(usize),
    /// `i -> i+1 mod n`.
    Cycle(usize),
    /// `i -> i+1`.
    Path(usize),
    /// Both directions between the parts `0..m` and `m..m+n`, nothing inside.
    CompleteBipartite(usize, usize),
}

pub fn standard(kind: StandardKind) -> Result<Digraph> {
    match kind {
        StandardKind::Clique(n) => {
            if n == 0 {
                return Err(Error::BadParams("clique needs at least one vertex".into()));
            }
            let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
            Ok(Digraph::from_valid_edges(n, edges.collect::<Vec<_>>()))
        }
        StandardKind::Cycle(n) => {
            if n < 2 {
                return Err(Error::BadParams("cycle needs at least two vertices".into()));
            }
            Ok(Digraph::from_valid_edges(
                n,
                (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>(),
            ))
        }
        StandardKind::Path(n) => {
            if n == 0 {
                return Err(Error::BadParams("path needs at least one vertex".into()));
            }
            Ok(Digraph::from_valid_edges(
                n,
                (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>(),
            ))
        }
        StandardKind::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return Err(Error::BadParams(
                    "both bipartite parts need a vertex".into(),
                ));
            }
            let edges = (0..m).flat_map(|a| (m..m + n).flat_map(move |b| [(a, b), (b, a)]));
            Ok(Digraph::from_valid_edges(m + n, edges.collect::<Vec<_>>()))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionKind {
    /// Side by side, no new edges.
    Disjoint,
    /// Every edge from the first digraph to the second.
    Unidirectional,
    /// Every edge between the two, in both directions.
    Bidirectional,
}

/// Union of two digraphs: `d1` keeps ids `0..n1`, `d2` is shifted by `n1`.
pub fn union(kind: UnionKind, d1: &Digraph, d2: &Digraph) -> Digraph {
    let (n1, n2) = (d1.n(), d2.n());
    let mut edges: Vec<(usize, usize)> = d1.edges().collect();
    edges.extend(d2.edges().map(|(u, v)| (u + n1, v + n1)));
    if kind != UnionKind::Disjoint {
        for a in 0..n1 {
            for b in n1..n1 + n2 {
                edges.push((a, b));
                if kind == UnionKind::Bidirectional {
                    edges.push((b, a));
                }
            }
        }
    }
    Digraph::from_valid_edges(n1 + n2, edges)
}

/// `m` copies of the `k`-th strong power of the directed `l`-cycle, tied into
/// one strong digraph.
///
/// Inside a copy, vertex tuples are ranked lexicographically (first coordinate
/// most significant), which is exactly the index used by
/// [`Digraph::strong_product`]; consecutive ranks are already joined by an
/// edge. Copy `a` occupies ids `a * l^k .. (a+1) * l^k`, and the last vertex
/// of copy `a` gets an edge to the first vertex of copy `a + 1 mod m`.
pub fn linked_cycle_powers(l: usize, k: usize, m: usize) -> Result<Digraph> {
    if l < 3 || k == 0 || m == 0 {
        return Err(Error::BadParams(format!(
            "need l >= 3, k >= 1, m >= 1 (got l={l}, k={k}, m={m})"
        )));
    }
    let cycle = standard(StandardKind::Cycle(l))?;
    let mut power = cycle.clone();
    for _ in 1..k {
        power = power.strong_product(&cycle);
    }
    let size = power.n();
    for i in 0..size - 1 {
        debug_assert!(
            power.has_edge(i, i + 1),
            "lexicographic successor edge missing"
        );
    }

    let mut edges = Vec::with_capacity(m * (power.edge_count() + 1));
    for a in 0..m {
        let base = a * size;
        edges.extend(power.edges().map(|(u, v)| (u + base, v + base)));
        let next = ((a + 1) % m) * size;
        edges.push((base + size - 1, next));
    }
    Ok(Digraph::from_valid_edges(m * size, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{structure_report, Girth};

    #[test]
    fn standard_families() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        assert_eq!(k3.edge_count(), 6);
        let c4 = standard(StandardKind::Cycle(4)).unwrap();
        assert!((0..4).all(|v| c4.in_degree(v) == 1));
        let p3 = standard(StandardKind::Path(3)).unwrap();
        assert!(p3.is_acyclic());
        let kb = standard(StandardKind::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(kb.n(), 5);
        assert!((0..2).all(|v| kb.in_degree(v) == 3));
        assert!((2..5).all(|v| kb.in_degree(v) == 2));
        assert!(standard(StandardKind::Cycle(1)).is_err());
        assert!(standard(StandardKind::Clique(0)).is_err());
    }

    #[test]
    fn unions_of_k2_and_p2() {
        let k2 = standard(StandardKind::Clique(2)).unwrap();
        let p2 = standard(StandardKind::Path(2)).unwrap();
        let dis = union(UnionKind::Disjoint, &k2, &p2);
        assert_eq!((dis.n(), dis.edge_count()), (4, 3));
        let uni = union(UnionKind::Unidirectional, &k2, &p2);
        assert_eq!(uni.edge_count(), 3 + 4);
        assert!(uni.has_edge(0, 2) && !uni.has_edge(2, 0));
        let bi = union(UnionKind::Bidirectional, &k2, &p2);
        assert_eq!(bi.edge_count(), 3 + 8);
    }

    #[test]
    fn linked_powers_small_cases() {
        let d = linked_cycle_powers(3, 1, 2).unwrap();
        assert_eq!(d.n(), 6);
        assert!(structure_report(&d).strong);

        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        assert_eq!(
            linked_cycle_powers(3, 2, 1).unwrap(),
            c3.strong_product(&c3)
        );

        let d = linked_cycle_powers(4, 1, 3).unwrap();
        let r = structure_report(&d);
        assert_eq!(r.girth, Girth::Cycle(4));
        assert!(r.strong);
        assert!(linked_cycle_powers(2, 1, 1).is_err());
    }
}
