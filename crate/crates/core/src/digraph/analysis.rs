//! Structural statistics: degrees, girth, strong components, maximum induced
//! acyclic subgraphs and clique partitions.

use std::collections::VecDeque;

use super::Digraph;

/// Length of a shortest directed cycle; a bidirectional edge counts as 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Acyclic,
    Cycle(usize),
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Acyclic => f.write_str("acyclic"),
            Girth::Cycle(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub min_in_degree: usize,
    pub max_in_degree: usize,
    /// Every in-degree and every out-degree equal the same value.
    pub regular_in_out: bool,
    pub bidirectional_edge_count: usize,
    pub is_tournament: bool,
    pub girth: Girth,
    pub strong: bool,
    pub component_count: usize,
}

pub fn structure_report(d: &Digraph) -> StructureReport {
    let n = d.n();
    let regular_in_out = n == 0 || {
        let r = d.in_degree(0);
        (0..n).all(|v| d.in_degree(v) == r && d.out_degree(v) == r)
    };
    let is_tournament = (0..n).all(|u| (u + 1..n).all(|v| d.has_edge(u, v) != d.has_edge(v, u)));
    let component_count = strong_components(d).components.len();
    StructureReport {
        min_in_degree: d.min_in_degree(),
        max_in_degree: d.max_in_degree(),
        regular_in_out,
        bidirectional_edge_count: d.bidirectional_edge_count(),
        is_tournament,
        girth: girth(d),
        strong: component_count == 1,
        component_count,
    }
}

/// Shortest directed cycle, by a BFS from every vertex.
pub fn girth(d: &Digraph) -> Girth {
    let n = d.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            if dist[u] + 1 >= best {
                break;
            }
            for &v in d.out_neighbors(u) {
                if v == root {
                    best = best.min(dist[u] + 1);
                    break 'bfs;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if best == 2 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    /// Strong components in reverse topological order of the condensation
    /// (sink components first); each component is sorted ascending.
    pub components: Vec<Vec<usize>>,
    /// `component_of[v]` indexes into `components`.
    pub component_of: Vec<usize>,
    /// One vertex per component; acyclic.
    pub dag: Digraph,
}

/// Tarjan's algorithm, iterative.
pub fn strong_components(d: &Digraph) -> Condensation {
    let n = d.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut component_of = vec![UNSEEN; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let outs = d.out_neighbors(v);
            if *pos < outs.len() {
                let w = outs[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component_of[w] = components.len();
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }

    let dag_edges: Vec<(usize, usize)> = d
        .edges()
        .map(|(u, v)| (component_of[u], component_of[v]))
        .filter(|(a, b)| a != b)
        .collect();
    let dag = Digraph::from_valid_edges(components.len(), dag_edges);
    Condensation {
        components,
        component_of,
        dag,
    }
}

pub const DEFAULT_MAS_BUDGET: u64 = 1 << 25;

/// A maximum induced acyclic subgraph, or the best one found in budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mas {
    pub size: usize,
    /// Ascending vertex ids; always induces an acyclic subgraph.
    pub witness: Vec<usize>,
    /// The size is the true maximum.
    pub exact: bool,
}

/// Branch and bound over vertex subsets, one strong component at a time.
///
/// An acyclic set restricted to each strong component is acyclic and any
/// cycle lies inside one component, so the components are solved
/// independently. `budget` caps the number of search nodes summed over all
/// components; when it runs out the best set found is returned with
/// `exact == false`. The result is never below `n / (Δ + 1)`. In exact mode
/// the witness is the lexicographically first maximum set.
pub fn mas_exact(d: &Digraph, budget: u64) -> Mas {
    let cond = strong_components(d);
    let mut witness = Vec::new();
    let mut exact = true;
    let mut remaining = budget;
    for comp in &cond.components {
        if comp.len() == 1 {
            witness.push(comp[0]);
            continue;
        }
        let sub = d.induced(comp);
        let (local, local_exact, used) = mas_component(&sub, remaining);
        remaining = remaining.saturating_sub(used);
        exact &= local_exact;
        witness.extend(local.into_iter().map(|i| comp[i]));
    }
    witness.sort_unstable();
    Mas {
        size: witness.len(),
        witness,
        exact,
    }
}

/// Acyclic set in which no chosen vertex has an in-neighbour chosen later:
/// repeatedly keep a vertex of least remaining in-degree and discard its
/// remaining in-neighbours. Each step discards at most `Δ + 1` vertices.
fn greedy_acyclic(d: &Digraph) -> Vec<usize> {
    let n = d.n();
    let mut alive = vec![true; n];
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut chosen = Vec::new();
    let kill = |v: usize, alive: &mut Vec<bool>, indeg: &mut Vec<usize>| {
        alive[v] = false;
        for &w in d.out_neighbors(v) {
            indeg[w] = indeg[w].saturating_sub(1);
        }
    };
    loop {
        let pick = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (indeg[v], v));
        let Some(v) = pick else { break };
        chosen.push(v);
        let ins: Vec<usize> = d
            .in_neighbors(v)
            .iter()
            .copied()
            .filter(|&u| alive[u])
            .collect();
        kill(v, &mut alive, &mut indeg);
        for u in ins {
            kill(u, &mut alive, &mut indeg);
        }
    }
    // Extend with anything that still fits.
    let mut set = chosen;
    for v in 0..n {
        if !set.contains(&v) {
            set.push(v);
            if !d.is_acyclic_set(&set) {
                set.pop();
            }
        }
    }
    set.sort_unstable();
    set
}

struct MasSearch {
    n: usize,
    outs: Vec<u128>,
    ins: Vec<u128>,
    best: u128,
    best_size: usize,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl MasSearch {
    /// Would adding `v` to the acyclic set `set` close a cycle?
    fn closes_cycle(&self, set: u128, v: usize) -> bool {
        let target = self.ins[v] & set;
        if target == 0 {
            return false;
        }
        let mut reach = self.outs[v] & set;
        let mut frontier = reach;
        while frontier != 0 {
            if reach & target != 0 {
                return true;
            }
            let mut next = 0u128;
            for u in bits(frontier) {
                next |= self.outs[u];
            }
            frontier = next & set & !reach;
            reach |= frontier;
        }
        reach & target != 0
    }

    /// Vertices of a shortest cycle through `v` inside `allowed`, if any.
    fn shortest_cycle_through(&self, v: usize, allowed: u128) -> Option<u128> {
        let mut parent = [usize::MAX; 128];
        let mut seen = 1u128 << v;
        let mut queue = VecDeque::new();
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let nexts = self.outs[u] & allowed;
            if nexts & (1 << v) != 0 {
                let mut cyc = 1u128 << v;
                let mut w = u;
                while w != v {
                    cyc |= 1 << w;
                    w = parent[w];
                }
                return Some(cyc);
            }
            for w in bits(nexts & !seen) {
                seen |= 1 << w;
                parent[w] = u;
                queue.push_back(w);
            }
        }
        None
    }

    fn upper_bound(&self, set: u128, candidates: u128) -> usize {
        let mut open = candidates;
        let mut lost = 0;
        for v in bits(candidates) {
            if open & (1 << v) == 0 {
                continue;
            }
            if let Some(cyc) = self.shortest_cycle_through(v, set | open) {
                open &= !cyc;
                lost += 1;
            }
        }
        set.count_ones() as usize + candidates.count_ones() as usize - lost
    }

    fn search(&mut self, set: u128, next: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let mut candidates = 0u128;
        for v in next..self.n {
            if !self.closes_cycle(set, v) {
                candidates |= 1 << v;
            }
        }
        let size = set.count_ones() as usize;
        if candidates == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = set;
            }
            return;
        }
        if self.upper_bound(set, candidates) <= self.best_size {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        self.search(set | (1 << v), v + 1);
        self.search(set, v + 1);
    }
}

/// Returns (witness, exact, nodes used) for one strong component.
fn mas_component(d: &Digraph, budget: u64) -> (Vec<usize>, bool, u64) {
    let greedy = greedy_acyclic(d);
    if d.n() > 128 {
        return (greedy, false, 0);
    }
    let to_mask = |vs: &[usize]| vs.iter().fold(0u128, |m, &u| m | (1 << u));
    let mut s = MasSearch {
        n: d.n(),
        outs: (0..d.n()).map(|v| to_mask(d.out_neighbors(v))).collect(),
        ins: (0..d.n()).map(|v| to_mask(d.in_neighbors(v))).collect(),
        best: 0,
        // Look for sets at least as large as the greedy one, so the first
        // optimum met in search order is the one reported.
        best_size: greedy.len().saturating_sub(1),
        nodes: 0,
        budget,
        aborted: false,
    };
    s.search(0, 0);
    let found: Vec<usize> = bits(s.best).collect();
    let nodes = s.nodes;
    if s.aborted || found.len() < greedy.len() {
        let exact = !s.aborted;
        if found.len() >= greedy.len() {
            (found, exact, nodes)
        } else {
            (greedy, exact, nodes)
        }
    } else {
        (found, true, nodes)
    }
}

/// A partition of the vertices into bidirectionally complete classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    pub count: usize,
    pub classes: Vec<Vec<usize>>,
    pub exact: bool,
}

/// Minimum number of classes in a partition of `V(D)` into cliques whose
/// members are pairwise joined in both directions. Falls back to the best
/// partition found (an upper bound) when the node budget runs out.
pub fn clique_partition_number(d: &Digraph, budget: u64) -> CliquePartition {
    let n = d.n();
    let mutual = |u: usize, v: usize| d.has_edge(u, v) && d.has_edge(v, u);

    let mut greedy: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match greedy.iter_mut().find(|c| c.iter().all(|&u| mutual(u, v))) {
            Some(c) => c.push(v),
            None => greedy.push(vec![v]),
        }
    }

    struct Search<'a, F: Fn(usize, usize) -> bool> {
        n: usize,
        mutual: &'a F,
        best: Vec<Vec<usize>>,
        nodes: u64,
        budget: u64,
        aborted: bool,
    }
    impl<F: Fn(usize, usize) -> bool> Search<'_, F> {
        fn go(&mut self, v: usize, classes: &mut Vec<Vec<usize>>) {
            if self.aborted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.aborted = true;
                return;
            }
            if classes.len() >= self.best.len() {
                return;
            }
            if v == self.n {
                self.best = classes.clone();
                return;
            }
            for i in 0..classes.len() {
                if classes[i].iter().all(|&u| (self.mutual)(u, v)) {
                    classes[i].push(v);
                    self.go(v + 1, classes);
                    classes[i].pop();
                }
            }
            classes.push(vec![v]);
            self.go(v + 1, classes);
            classes.pop();
        }
    }

    let mut s = Search {
        n,
        mutual: &mutual,
        best: greedy,
        nodes: 0,
        budget,
        aborted: false,
    };
    s.go(0, &mut Vec::new());
    CliquePartition {
        count: s.best.len(),
        classes: s.best,
        exact: !s.aborted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, union, StandardKind, UnionKind};

    fn cycle(n: usize) -> Digraph {
        standard(StandardKind::Cycle(n)).unwrap()
    }

    fn clique(n: usize) -> Digraph {
        standard(StandardKind::Clique(n)).unwrap()
    }

    #[test]
    fn report_clique_and_cycle() {
        let r = structure_report(&clique(3));
        assert_eq!(r.girth, Girth::Cycle(2));
        assert!(r.strong && !r.is_tournament);
        let r = structure_report(&cycle(5));
        assert_eq!(r.girth, Girth::Cycle(5));
        assert!(r.strong && r.regular_in_out);
        assert_eq!((r.min_in_degree, r.max_in_degree), (1, 1));
    }

    #[test]
    fn acyclic_girth_is_not_a_number() {
        let p = standard(StandardKind::Path(4)).unwrap();
        let r = structure_report(&p);
        assert_eq!(r.girth, Girth::Acyclic);
        assert_eq!(r.component_count, 4);
        assert!(!r.strong);
    }

    #[test]
    fn components_of_unidirectional_union() {
        let k2 = clique(2);
        let d = union(UnionKind::Unidirectional, &k2, &k2);
        let c = strong_components(&d);
        // Sink component first.
        assert_eq!(c.components, vec![vec![2, 3], vec![0, 1]]);
        assert_eq!(c.dag.edges().collect::<Vec<_>>(), vec![(1, 0)]);
        assert_eq!(strong_components(&cycle(6)).components.len(), 1);
        let p = standard(StandardKind::Path(5)).unwrap();
        let c = strong_components(&p);
        assert_eq!(c.components.len(), 5);
        assert!(c.dag.is_acyclic());
    }

    #[test]
    fn mas_of_small_families() {
        assert_eq!(mas_exact(&clique(5), DEFAULT_MAS_BUDGET).size, 1);
        let m = mas_exact(&cycle(6), DEFAULT_MAS_BUDGET);
        assert_eq!((m.size, m.exact), (5, true));
        assert_eq!(m.witness, vec![0, 1, 2, 3, 4]);
        let p = standard(StandardKind::Path(4)).unwrap();
        assert_eq!(mas_exact(&p, DEFAULT_MAS_BUDGET).size, 4);
    }

    #[test]
    fn mas_budget_exhaustion_is_flagged() {
        let c3 = cycle(3);
        let d = c3.strong_product(&c3).strong_product(&c3);
        let m = mas_exact(&d, 3);
        assert!(!m.exact);
        assert!(d.is_acyclic_set(&m.witness));
        assert!(m.size * (d.max_in_degree() + 1) >= d.n());
    }

    #[test]
    fn clique_partition_small() {
        assert_eq!(clique_partition_number(&clique(4), 1 << 20).count, 1);
        assert_eq!(clique_partition_number(&cycle(5), 1 << 20).count, 5);
        let d = union(UnionKind::Disjoint, &clique(2), &clique(3));
        let p = clique_partition_number(&d, 1 << 20);
        assert_eq!((p.count, p.exact), (2, true));
    }
}
