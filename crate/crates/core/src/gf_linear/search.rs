//! The linear guessing number `n - min rank(I + A)` over matrices `A`
//! supported on the edges.
//!
//! Edges between strong components can be dropped without raising the
//! minimum rank (the matrix is block triangular in a topological order of
//! the components), so each component is solved on its own.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{check_prime, GfMatrix};
use super::LinearProtocol;
use crate::digraph::{
    clique_partition_number, mas_exact, strong_components, Digraph, DEFAULT_MAS_BUDGET,
};
use crate::error::Result;

/// Default cap on `p^|E|` per strong component for exhaustive search.
pub const DEFAULT_LINEAR_BUDGET: u64 = 1 << 24;

const RANDOM_SAMPLES: usize = 64;
const SAMPLE_SEED: u64 = 0x6c69_6e65_6172;
const CLIQUE_PARTITION_BUDGET: u64 = 1 << 18;

/// Value of one strong component, or an interval around it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLinear {
    pub vertices: Vec<usize>,
    pub lower: usize,
    pub upper: usize,
    pub lower_by: &'static str,
    pub upper_by: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearGuess {
    pub p: u64,
    pub lower: usize,
    pub upper: usize,
    pub upper_by: &'static str,
    pub components: Vec<ComponentLinear>,
    /// Achieves `lower`.
    pub witness: LinearProtocol,
}

impl LinearGuess {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }
}

fn floor_bound(x: f64) -> Option<usize> {
    if x.is_finite() {
        Some((x + 1e-9).floor().max(0.0) as usize)
    } else {
        None
    }
}

fn log_base(x: f64, base: f64) -> f64 {
    x.ln() / base.ln()
}

/// Largest `d` with `C(n, D-d+2) / C(D+1, D-d+2) >= n`, where `D` is the
/// maximum in-degree: the half-distance allowed by the Johnson bound for `n`
/// words of length `n` and weight `D + 1`.
pub fn johnson_half_distance(n: usize, max_in: usize) -> Option<usize> {
    fn ln_binom(a: usize, b: usize) -> f64 {
        if b > a {
            return f64::NEG_INFINITY;
        }
        (1..=b).map(|i| ((a - b + i) as f64 / i as f64).ln()).sum()
    }
    (1..=max_in + 1)
        .filter(|&d| {
            let w = max_in + 2 - d;
            ln_binom(n, w) - ln_binom(max_in + 1, w) >= (n as f64).ln() - 1e-9
        })
        .max()
}

/// Integer upper bounds on the linear guessing number of a digraph without
/// bidirectional edges, from its in-degrees. Returns `(min-degree bound,
/// max-degree bound)`; either may be inapplicable.
pub fn in_degree_linear_uppers(d: &Digraph, p: u64) -> (Option<usize>, Option<usize>) {
    if d.bidirectional_edge_count() > 0 || d.n() == 0 {
        return (None, None);
    }
    let n = d.n();
    let pf = p as f64;
    let min_in = d.min_in_degree();
    let max_in = d.max_in_degree();
    let by_min = floor_bound(n as f64 - log_base((n - min_in) as f64, pf) - 1.0);
    let by_max = johnson_half_distance(n, max_in).and_then(|e| {
        let rest = n as isize - max_in as isize - e as isize;
        if rest >= 1 {
            floor_bound(n as f64 - log_base(rest as f64, pf) - 2.0)
        } else {
            None
        }
    });
    (by_min, by_max)
}

fn rank_of(a: &GfMatrix) -> usize {
    let n = a.rows();
    GfMatrix::identity(n, a.p())
        .and_then(|i| i.add(a))
        .expect("square")
        .rank()
}

/// Support-respecting matrices worth trying before any search.
fn heuristic_candidates(d: &Digraph, p: u64, seed: u64) -> Vec<(&'static str, GfMatrix)> {
    let n = d.n();
    let mut out = Vec::new();
    let adjacency = |scale: u64| {
        let mut a = GfMatrix::zeros(n, n, p).expect("prime checked");
        for (u, v) in d.edges() {
            a.set(u, v, scale);
        }
        a
    };
    out.push(("parity check", adjacency(p - 1)));
    if p > 2 {
        out.push(("negated sum", adjacency(1)));
    }
    let cp = clique_partition_number(d, CLIQUE_PARTITION_BUDGET);
    let mut a = GfMatrix::zeros(n, n, p).expect("prime checked");
    for class in &cp.classes {
        for &u in class {
            for &v in class {
                if u != v {
                    a.set(u, v, 1);
                }
            }
        }
    }
    out.push(("clique partition", a));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = d.edges().collect();
    for _ in 0..RANDOM_SAMPLES {
        let mut a = GfMatrix::zeros(n, n, p).expect("prime checked");
        for &(u, v) in &edges {
            a.set(u, v, rng.gen_range(0..p));
        }
        out.push(("random sample", a));
    }
    out
}

/// Minimum rank of `I + A` by depth-first search over the rows, pruning as
/// soon as the rows chosen so far reach the incumbent rank. Patterns are
/// visited in lexicographic order of the edge entries, so the first pattern
/// reaching the final minimum is returned. `target` is a proven lower bound
/// on the rank; the search stops when it is met.
fn exhaustive_min_rank(
    d: &Digraph,
    p: u64,
    incumbent: usize,
    target: usize,
) -> Option<(usize, GfMatrix)> {
    let n = d.n();
    let free: Vec<Vec<usize>> = (0..n).map(|u| d.out_neighbors(u).to_vec()).collect();
    let mut choice: Vec<Vec<u64>> = free.iter().map(|f| vec![0; f.len()]).collect();
    let mut best: Option<(usize, Vec<Vec<u64>>)> = None;
    let mut bound = incumbent + 1;

    if p == 2 {
        struct S<'a> {
            free: &'a [Vec<usize>],
            pivots: [u64; 64],
            rank: usize,
        }
        fn insert(s: &mut S, mut v: u64) -> Option<usize> {
            while v != 0 {
                let t = 63 - v.leading_zeros() as usize;
                if s.pivots[t] == 0 {
                    s.pivots[t] = v;
                    s.rank += 1;
                    return Some(t);
                }
                v ^= s.pivots[t];
            }
            None
        }
        fn go(
            s: &mut S,
            row: usize,
            choice: &mut Vec<Vec<u64>>,
            best: &mut Option<(usize, Vec<Vec<u64>>)>,
            bound: &mut usize,
            target: usize,
        ) {
            let n = s.free.len();
            if row == n {
                if s.rank < *bound {
                    *bound = s.rank;
                    *best = Some((s.rank, choice.clone()));
                }
                return;
            }
            let cols = &s.free[row];
            let k = cols.len();
            for pattern in 0..(1u64 << k) {
                let mut v = 1u64 << row;
                for (idx, &c) in cols.iter().enumerate() {
                    let bit = pattern >> (k - 1 - idx) & 1;
                    choice[row][idx] = bit;
                    v |= bit << c;
                }
                let added = insert(s, v);
                if s.rank < *bound {
                    go(s, row + 1, choice, best, bound, target);
                }
                if let Some(t) = added {
                    s.pivots[t] = 0;
                    s.rank -= 1;
                }
                if *bound <= target {
                    return;
                }
            }
        }
        assert!(n <= 64, "exhaustive GF(2) search needs at most 64 vertices");
        let mut s = S {
            free: &free,
            pivots: [0; 64],
            rank: 0,
        };
        go(&mut s, 0, &mut choice, &mut best, &mut bound, target);
    } else {
        struct S<'a> {
            free: &'a [Vec<usize>],
            p: u64,
            pivots: Vec<Option<Vec<u64>>>,
            rank: usize,
        }
        fn insert(s: &mut S, mut v: Vec<u64>) -> Option<usize> {
            let p = s.p;
            for c in 0..v.len() {
                if v[c] == 0 {
                    continue;
                }
                match &s.pivots[c] {
                    Some(row) => {
                        let f = v[c];
                        for j in c..v.len() {
                            v[j] = (v[j] + (p - f) * row[j]) % p;
                        }
                    }
                    None => {
                        let inv = super::matrix::inv_mod(v[c], p);
                        for x in v.iter_mut() {
                            *x = *x * inv % p;
                        }
                        s.pivots[c] = Some(v);
                        s.rank += 1;
                        return Some(c);
                    }
                }
            }
            None
        }
        fn go(
            s: &mut S,
            row: usize,
            choice: &mut Vec<Vec<u64>>,
            best: &mut Option<(usize, Vec<Vec<u64>>)>,
            bound: &mut usize,
            target: usize,
        ) {
            let n = s.free.len();
            if row == n {
                if s.rank < *bound {
                    *bound = s.rank;
                    *best = Some((s.rank, choice.clone()));
                }
                return;
            }
            let k = s.free[row].len();
            let total = s.p.pow(k as u32);
            for pattern in 0..total {
                let mut v = vec![0u64; n];
                v[row] = 1;
                let mut rest = pattern;
                for idx in (0..k).rev() {
                    let x = rest % s.p;
                    rest /= s.p;
                    choice[row][idx] = x;
                    v[s.free[row][idx]] = x;
                }
                let added = insert(s, v);
                if s.rank < *bound {
                    go(s, row + 1, choice, best, bound, target);
                }
                if let Some(c) = added {
                    s.pivots[c] = None;
                    s.rank -= 1;
                }
                if *bound <= target {
                    return;
                }
            }
        }
        let mut s = S {
            free: &free,
            p,
            pivots: vec![None; n],
            rank: 0,
        };
        go(&mut s, 0, &mut choice, &mut best, &mut bound, target);
    }

    best.map(|(rank, choice)| {
        let mut a = GfMatrix::zeros(n, n, p).expect("prime checked");
        for (u, cols) in free.iter().enumerate() {
            for (idx, &v) in cols.iter().enumerate() {
                a.set(u, v, choice[u][idx]);
            }
        }
        (rank, a)
    })
}

fn solve_component(
    sub: &Digraph,
    p: u64,
    budget: u64,
    seed: u64,
) -> (usize, usize, &'static str, &'static str, GfMatrix) {
    let k = sub.n();
    let mut best_rank = usize::MAX;
    let mut best: Option<(&'static str, GfMatrix)> = None;
    for (name, a) in heuristic_candidates(sub, p, seed) {
        let r = rank_of(&a);
        if r < best_rank {
            best_rank = r;
            best = Some((name, a));
        }
    }
    let (mut lower_by, mut witness) = best.expect("at least one candidate");
    let mut lower = k - best_rank;

    let mas = mas_exact(sub, DEFAULT_MAS_BUDGET);
    let mut upper = k - mas.size;
    let mut upper_by = "acyclic set";
    let pf = p as f64;
    if sub.bidirectional_edge_count() == 0 {
        let sphere = floor_bound(k as f64 - log_base(((p - 1) as usize * k + 1) as f64, pf));
        let (by_min, by_max) = in_degree_linear_uppers(sub, p);
        for (name, b) in [
            ("sphere packing", sphere),
            ("minimum in-degree", by_min),
            ("maximum in-degree", by_max),
        ] {
            if let Some(b) = b {
                if b < upper {
                    upper = b;
                    upper_by = name;
                }
            }
        }
    }

    if lower < upper {
        let edges = sub.edge_count() as u32;
        let affordable = p.checked_pow(edges).is_some_and(|c| c <= budget);
        if affordable && k <= 64 {
            if let Some((rank, a)) = exhaustive_min_rank(sub, p, best_rank, k - upper) {
                if rank <= best_rank {
                    witness = a;
                    lower_by = "exhaustive search";
                    lower = k - rank;
                }
            }
            upper = lower;
            upper_by = "exhaustive search";
        }
    }
    (lower, upper, lower_by, upper_by, witness)
}

/// Linear guessing number over GF(p), exact when every strong component is
/// either pinched between its bounds or small enough to search
/// (`p^|E_c| <= budget`); an interval otherwise.
pub fn linear_guessing_number(d: &Digraph, p: u64, budget: u64) -> Result<LinearGuess> {
    check_prime(p)?;
    let n = d.n();
    let cond = strong_components(d);
    let mut a = GfMatrix::zeros(n, n, p)?;
    let mut components = Vec::with_capacity(cond.components.len());
    let (mut lower, mut upper) = (0, 0);
    for (ci, comp) in cond.components.iter().enumerate() {
        if comp.len() == 1 {
            components.push(ComponentLinear {
                vertices: comp.clone(),
                lower: 0,
                upper: 0,
                lower_by: "single vertex",
                upper_by: "single vertex",
            });
            continue;
        }
        let sub = d.induced(comp);
        let (lo, up, lo_by, up_by, wa) = solve_component(&sub, p, budget, SAMPLE_SEED ^ ci as u64);
        for i in 0..comp.len() {
            for j in 0..comp.len() {
                let x = wa.get(i, j);
                if x != 0 {
                    a.set(comp[i], comp[j], x);
                }
            }
        }
        lower += lo;
        upper += up;
        components.push(ComponentLinear {
            vertices: comp.clone(),
            lower: lo,
            upper: up,
            lower_by: lo_by,
            upper_by: up_by,
        });
    }
    let mut upper_by = "sum over strong components";
    let (by_min, by_max) = in_degree_linear_uppers(d, p);
    for (name, b) in [("minimum in-degree", by_min), ("maximum in-degree", by_max)] {
        if let Some(b) = b {
            if b < upper {
                upper = b;
                upper_by = name;
            }
        }
    }
    let witness = LinearProtocol::new(d, a)?;
    debug_assert_eq!(witness.fixed_dimension(), lower);
    Ok(LinearGuess {
        p,
        lower,
        upper,
        upper_by,
        components,
        witness,
    })
}

/// Lower bound for a strong product from witnesses on the factors:
/// `(I + A1) kron (I + A2) - I` is supported on the product's edges and has
/// rank `r1 * r2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductLower {
    pub bound: usize,
    pub factor_ranks: (usize, usize),
    pub witness: LinearProtocol,
}

pub fn linear_product_lower(
    d1: &Digraph,
    d2: &Digraph,
    p: u64,
    budget: u64,
) -> Result<ProductLower> {
    let w1 = linear_guessing_number(d1, p, budget)?.witness;
    let w2 = linear_guessing_number(d2, p, budget)?.witness;
    let k = w1.shifted().kron(&w2.shifted())?;
    let n = d1.n() * d2.n();
    let a = k.sub(&GfMatrix::identity(n, p)?)?;
    let product = d1.strong_product(d2);
    let witness = LinearProtocol::new(&product, a)?;
    let r1 = d1.n() - w1.fixed_dimension();
    let r2 = d2.n() - w2.fixed_dimension();
    let bound = witness.fixed_dimension();
    debug_assert_eq!(bound, n - r1 * r2);
    Ok(ProductLower {
        bound,
        factor_ranks: (r1, r2),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, StandardKind};

    #[test]
    fn clique_and_acyclic() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        let r = linear_guessing_number(&k3, 2, DEFAULT_LINEAR_BUDGET).unwrap();
        assert_eq!(r.value(), Some(2));
        let p = standard(StandardKind::Path(5)).unwrap();
        let r = linear_guessing_number(&p, 3, DEFAULT_LINEAR_BUDGET).unwrap();
        assert_eq!(r.value(), Some(0));
    }

    #[test]
    fn exhaustive_search_matches_pinched_value() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        let (rank, a) = exhaustive_min_rank(&k3, 2, 3, 0).unwrap();
        assert_eq!(rank, 1);
        assert_eq!(rank_of(&a), 1);
        let (rank, _) = exhaustive_min_rank(&k3, 3, 3, 0).unwrap();
        assert_eq!(rank, 1);
        let c4 = standard(StandardKind::Cycle(4)).unwrap();
        let (rank, a) = exhaustive_min_rank(&c4, 5, 4, 0).unwrap();
        assert_eq!(rank, 3);
        assert!(LinearProtocol::new(&c4, a).is_ok());
    }

    #[test]
    fn johnson_half_distance_examples() {
        // n = 7, D = 3: d = 2 gives C(7,3)/C(4,3) = 35/4 >= 7.
        assert_eq!(johnson_half_distance(7, 3), Some(2));
        assert_eq!(johnson_half_distance(5, 1), Some(1));
    }

    #[test]
    fn product_of_triangles() {
        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        let r = linear_product_lower(&c3, &c3, 2, DEFAULT_LINEAR_BUDGET).unwrap();
        assert_eq!((r.bound, r.factor_ranks), (5, (2, 2)));
        let c4 = standard(StandardKind::Cycle(4)).unwrap();
        assert_eq!(
            linear_product_lower(&c4, &c3, 2, DEFAULT_LINEAR_BUDGET)
                .unwrap()
                .bound,
            6
        );
    }
}
