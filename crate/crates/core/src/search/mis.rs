//! Maximum independent set by branch and bound on bit sets.
//!
//! Every search node partitions its candidate set into cliques. No
//! independent set meets a clique twice, so the number of cliques bounds
//! what the candidates can still add. The node then branches on the
//! smallest clique: take one of its vertices, or take none of them.

use crate::ugraph::{iter_bits, words_for, BitGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    /// Ascending vertex ids.
    pub vertices: Vec<usize>,
    /// The size is the independence number.
    pub exact: bool,
    pub nodes: u64,
}

/// Greedy independent set: repeatedly take the candidate with fewest
/// candidate neighbours (lowest id on ties).
pub fn greedy_independent_set(g: &BitGraph) -> Vec<usize> {
    let words = g.words();
    let mut cand = full_set(g.n());
    let mut out = Vec::new();
    while cand.iter().any(|&w| w != 0) {
        let v = iter_bits(&cand)
            .min_by_key(|&v| (and_count(g.row(v), &cand), v))
            .expect("nonempty candidate set");
        out.push(v);
        let row = g.row(v);
        for w in 0..words {
            cand[w] &= !row[w];
        }
        cand[v / 64] &= !(1 << (v % 64));
    }
    out.sort_unstable();
    out
}

fn full_set(n: usize) -> Vec<u64> {
    let mut set = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = set.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    set
}

fn first_bit(a: &[u64]) -> Option<usize> {
    a.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + a[i].trailing_zeros() as usize)
}

fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn is_empty(a: &[u64]) -> bool {
    a.iter().all(|&w| w == 0)
}

struct Frame {
    cand: Vec<u64>,
    class: Vec<usize>,
    next: usize,
    depth: usize,
}

struct Search<'a> {
    g: &'a BitGraph,
    cover: Option<Vec<Vec<u64>>>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Clique partition of `cand`, as vertex lists.
    fn classes(&self, cand: &[u64]) -> Vec<Vec<usize>> {
        match &self.cover {
            Some(cover) => cover
                .iter()
                .map(|clique| {
                    let meet: Vec<u64> = clique.iter().zip(cand).map(|(a, b)| a & b).collect();
                    iter_bits(&meet).collect::<Vec<_>>()
                })
                .filter(|c| !c.is_empty())
                .collect(),
            None => {
                let mut rest = cand.to_vec();
                let mut out = Vec::new();
                while let Some(v) = first_bit(&rest) {
                    let mut clique = vec![v];
                    let mut pool: Vec<u64> = self
                        .g
                        .row(v)
                        .iter()
                        .zip(&rest)
                        .map(|(a, b)| a & b)
                        .collect();
                    while let Some(u) = first_bit(&pool) {
                        clique.push(u);
                        for (p, r) in pool.iter_mut().zip(self.g.row(u)) {
                            *p &= r;
                        }
                    }
                    for &u in &clique {
                        rest[u / 64] &= !(1 << (u % 64));
                    }
                    out.push(clique);
                }
                out
            }
        }
    }

    /// Scores a node; returns the frame to expand, if any.
    fn visit(&mut self, cand: Vec<u64>, chosen: &[usize]) -> Option<Frame> {
        self.nodes += 1;
        if is_empty(&cand) {
            if chosen.len() > self.best.len() {
                self.best = chosen.to_vec();
            }
            return None;
        }
        let classes = self.classes(&cand);
        if chosen.len() + classes.len() <= self.best.len() {
            return None;
        }
        let class = classes
            .into_iter()
            .min_by_key(|c| c.len())
            .expect("nonempty candidate set has a class");
        Some(Frame {
            cand,
            class,
            next: 0,
            depth: chosen.len(),
        })
    }
}

/// Exact maximum independent set within `budget` search nodes.
///
/// `cover`, when given, must partition the vertices into cliques; it is
/// used for bounding and branching instead of greedy clique covers.
/// `seeds` are candidate independent sets; dependent seeds are ignored.
/// Past the budget the best set found is returned with `exact == false`.
pub fn max_independent_set(
    g: &BitGraph,
    cover: Option<&[Vec<usize>]>,
    seeds: &[Vec<usize>],
    budget: u64,
) -> IndependentSet {
    let words = g.words();
    let cover = cover.map(|cliques| {
        debug_assert!(
            cliques.iter().all(|c| g.is_clique(c)),
            "cover classes must be cliques"
        );
        cliques
            .iter()
            .map(|c| {
                let mut set = vec![0u64; words];
                for &v in c {
                    set[v / 64] |= 1 << (v % 64);
                }
                set
            })
            .collect()
    });
    let mut best = greedy_independent_set(g);
    for seed in seeds {
        let mut s = seed.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() > best.len() && s.iter().all(|&v| v < g.n()) && g.is_independent(&s) {
            best = s;
        }
    }

    let mut search = Search {
        g,
        cover,
        best,
        nodes: 0,
        budget,
    };
    let mut chosen: Vec<usize> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut aborted = false;
    if let Some(root) = search.visit(full_set(g.n()), &chosen) {
        stack.push(root);
    }
    while let Some(top) = stack.last_mut() {
        if search.nodes >= search.budget {
            aborted = true;
            break;
        }
        chosen.truncate(top.depth);
        let child = if top.next < top.class.len() {
            let v = top.class[top.next];
            top.next += 1;
            let row = g.row(v);
            let mut cand: Vec<u64> = top.cand.iter().zip(row).map(|(c, r)| c & !r).collect();
            cand[v / 64] &= !(1 << (v % 64));
            chosen.push(v);
            cand
        } else if top.next == top.class.len() {
            top.next += 1;
            let mut cand = top.cand.clone();
            for &v in &top.class {
                cand[v / 64] &= !(1 << (v % 64));
            }
            cand
        } else {
            stack.pop();
            continue;
        };
        if let Some(frame) = search.visit(child, &chosen) {
            stack.push(frame);
        }
    }
    let mut vertices = search.best;
    vertices.sort_unstable();
    IndependentSet {
        size: vertices.len(),
        vertices,
        exact: !aborted,
        nodes: search.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> BitGraph {
        let mut g = BitGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    #[test]
    fn odd_cycles_and_cliques() {
        for n in 3..12 {
            let r = max_independent_set(&cycle(n), None, &[], 1 << 20);
            assert_eq!((r.size, r.exact), (n / 2, true), "C_{n}");
            assert!(cycle(n).is_independent(&r.vertices));
        }
        let r = max_independent_set(&BitGraph::complete(7), None, &[], 1 << 20);
        assert_eq!(r.size, 1);
        assert_eq!(
            max_independent_set(&BitGraph::new(70), None, &[], 10).size,
            70
        );
    }

    #[test]
    fn cover_and_seeds() {
        // Two disjoint triangles plus a pendant edge between them.
        let mut g = BitGraph::new(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)] {
            g.add_edge(u, v);
        }
        let cover = vec![vec![0, 1, 2], vec![3, 4, 5]];
        let r = max_independent_set(&g, Some(&cover), &[vec![0, 3]], 1 << 20);
        assert_eq!((r.size, r.exact), (2, true));
        // A dependent seed is ignored.
        let r = max_independent_set(&g, None, &[vec![0, 1, 4]], 1 << 20);
        assert!(g.is_independent(&r.vertices));
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let r = max_independent_set(&cycle(41), None, &[], 1);
        assert!(!r.exact);
        assert!(cycle(41).is_independent(&r.vertices));
    }
}
