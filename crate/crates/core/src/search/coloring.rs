//! Vertex coloring: DSATUR heuristic and DSATUR branch and bound.

use crate::ugraph::BitGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub count: usize,
    /// Color of each vertex, in `0..count`.
    pub colors: Vec<usize>,
    /// `count` is the chromatic number.
    pub exact: bool,
}

/// Exact search is skipped above this many vertices.
pub const EXACT_COLORING_LIMIT: usize = 2048;

const UNCOLORED: usize = usize::MAX;

/// DSATUR: color next the vertex seeing the most distinct colors, lowest id
/// on ties, with the smallest color it can take.
pub fn dsatur(g: &BitGraph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![UNCOLORED; n];
    // Sorted distinct colors among colored neighbours.
    let mut seen: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == UNCOLORED)
            .max_by_key(|&v| (seen[v].len(), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = first_gap(&seen[v]);
        colors[v] = c;
        for u in g.neighbors(v) {
            if colors[u] == UNCOLORED {
                if let Err(pos) = seen[u].binary_search(&c) {
                    seen[u].insert(pos, c);
                }
            }
        }
    }
    colors
}

/// Smallest value missing from a sorted list of distinct values.
fn first_gap(sorted: &[usize]) -> usize {
    sorted
        .iter()
        .enumerate()
        .find(|&(i, &c)| i != c)
        .map_or(sorted.len(), |(i, _)| i)
}

pub fn color_count(colors: &[usize]) -> usize {
    colors.iter().map(|&c| c + 1).max().unwrap_or(0)
}

struct Exact<'a> {
    g: &'a BitGraph,
    /// `count[v * width + c]`: colored neighbours of `v` with color `c`.
    count: Vec<u32>,
    sat: Vec<usize>,
    width: usize,
    colors: Vec<usize>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Exact<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for u in self.g.neighbors(v) {
            let slot = &mut self.count[u * self.width + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = UNCOLORED;
        for u in self.g.neighbors(v) {
            let slot = &mut self.count[u * self.width + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn go(&mut self, colored: usize, used: usize) {
        if self.aborted || self.best_count <= self.lower {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let n = self.g.n();
        if colored == n {
            self.best_count = used;
            self.best = self.colors.clone();
            return;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| (self.sat[v], std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        for c in 0..=used {
            // A new color only helps if it stays below the incumbent.
            let total = used.max(c + 1);
            if total >= self.best_count {
                break;
            }
            if self.count[v * self.width + c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.go(colored + 1, total);
            self.unassign(v, c);
            if self.aborted || self.best_count <= self.lower {
                return;
            }
        }
    }
}

/// Chromatic number within `budget` search nodes.
///
/// `lower` is a known lower bound (a clique size, say); `upper` colorings
/// are candidate proper colorings, improper ones are ignored. The search
/// stops as soon as a coloring meets `lower`.
pub fn chromatic_number(g: &BitGraph, lower: usize, upper: &[Vec<usize>], budget: u64) -> Coloring {
    let n = g.n();
    let mut best = dsatur(g);
    for cand in upper {
        if g.is_proper_coloring(cand) && color_count(cand) < color_count(&best) {
            best = cand.clone();
        }
    }
    let best_count = color_count(&best);
    let lower = lower.max(usize::from(n > 0));
    if best_count <= lower {
        return Coloring {
            count: best_count,
            colors: best,
            exact: true,
        };
    }
    if n > EXACT_COLORING_LIMIT {
        return Coloring {
            count: best_count,
            colors: best,
            exact: false,
        };
    }
    let width = best_count;
    let mut search = Exact {
        g,
        count: vec![0; n * width],
        sat: vec![0; n],
        width,
        colors: vec![UNCOLORED; n],
        best,
        best_count,
        lower,
        nodes: 0,
        budget,
        aborted: false,
    };
    search.go(0, 0);
    Coloring {
        count: search.best_count,
        colors: search.best,
        exact: !search.aborted,
    }
}
