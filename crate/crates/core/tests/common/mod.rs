//! Brute-force oracles that share no code with the library algorithms.
#![allow(dead_code)]

use guessgraph_core::Digraph;
use rand::Rng;

pub fn digits(mut x: u64, n: usize, s: u64) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let d = x % s;
            x /= s;
            d
        })
        .collect()
}

pub fn encode(w: &[u64], s: u64) -> u64 {
    w.iter().rev().fold(0, |acc, &d| acc * s + d)
}

/// Adjacency straight from the definition: some vertex differs while all of
/// its in-neighbours agree.
pub fn adjacent(d: &Digraph, s: u64, x: u64, y: u64) -> bool {
    let (a, b) = (digits(x, d.n(), s), digits(y, d.n(), s));
    (0..d.n()).any(|i| a[i] != b[i] && d.in_neighbors(i).iter().all(|&u| a[u] == b[u]))
}

pub fn degree_of_zero(d: &Digraph, s: u64) -> u64 {
    let total = s.pow(d.n() as u32);
    (1..total).filter(|&y| adjacent(d, s, 0, y)).count() as u64
}

/// Edge list of the guessing graph from the definition.
pub fn guessing_edges(d: &Digraph, s: u64) -> Vec<(u64, u64)> {
    let total = s.pow(d.n() as u32);
    let mut out = Vec::new();
    for x in 0..total {
        for y in x + 1..total {
            if adjacent(d, s, x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Maximum independent set size over all vertex subsets (`n <= 24`).
pub fn brute_alpha(n: usize, edges: &[(u64, u64)]) -> u64 {
    let mut nbr = vec![0u32; n];
    for &(u, v) in edges {
        nbr[u as usize] |= 1 << v;
        nbr[v as usize] |= 1 << u;
    }
    let mut best = 0;
    for set in 0u32..1 << n {
        if set.count_ones() <= best {
            continue;
        }
        if (0..n).all(|v| set >> v & 1 == 0 || nbr[v] & set == 0) {
            best = set.count_ones();
        }
    }
    best as u64
}

/// Largest number of configurations fixed by any protocol, trying every
/// protocol. Each vertex picks one of `s^(s^d_v)` functions.
pub fn max_fixed_over_all_protocols(d: &Digraph, s: u64) -> u64 {
    let n = d.n();
    let counts: Vec<u64> = (0..n)
        .map(|v| s.pow(s.pow(d.in_degree(v) as u32) as u32))
        .collect();
    let total: u64 = counts.iter().product();
    assert!(total <= 10_000_000, "too many protocols");
    let configs = s.pow(n as u32);
    let mut best = 0;
    for p in 0..total {
        // Decode the protocol: function index per vertex, then table entries.
        let mut rest = p;
        let tables: Vec<Vec<u64>> = (0..n)
            .map(|v| {
                let f = rest % counts[v];
                rest /= counts[v];
                digits(f, s.pow(d.in_degree(v) as u32) as usize, s)
            })
            .collect();
        let fixed = (0..configs)
            .filter(|&x| {
                let w = digits(x, n, s);
                (0..n).all(|v| {
                    let seen: Vec<u64> = d.in_neighbors(v).iter().map(|&u| w[u]).collect();
                    tables[v][encode(&seen, s) as usize] == w[v]
                })
            })
            .count() as u64;
        best = best.max(fixed);
    }
    best
}

pub fn brute_is_acyclic(d: &Digraph, set: u32) -> bool {
    // Repeatedly remove vertices of the set with no in-neighbour left in it.
    let mut left = set;
    loop {
        let removable = (0..d.n())
            .find(|&v| left >> v & 1 == 1 && d.in_neighbors(v).iter().all(|&u| left >> u & 1 == 0));
        match removable {
            Some(v) => left &= !(1 << v),
            None => return left == 0,
        }
    }
}

pub fn brute_mas(d: &Digraph) -> usize {
    (0u32..1 << d.n())
        .filter(|&set| brute_is_acyclic(d, set))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest binary code of length `n` and minimum distance `dist`, over all
/// subsets of words (`n <= 4`).
pub fn brute_a2(n: usize, dist: u32) -> u64 {
    let words = 1u32 << n;
    let mut best = 0;
    for code in 0u32..1 << words {
        let members: Vec<u32> = (0..words).filter(|&w| code >> w & 1 == 1).collect();
        let ok = members.iter().enumerate().all(|(i, a)| {
            members[i + 1..]
                .iter()
                .all(|b| (a ^ b).count_ones() >= dist)
        });
        if ok {
            best = best.max(members.len() as u64);
        }
    }
    best
}

/// Rank over GF(2) of square 0/1 matrices given as row masks.
pub fn rank_gf2(rows: &[u64]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for bit in 0..64 {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && rows[r] >> bit & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    rank
}

/// `n - min rank(I + A)` over every GF(2) matrix `A` supported on the
/// edges.
pub fn brute_linear_gf2(d: &Digraph) -> usize {
    let edges: Vec<(usize, usize)> = d.edges().collect();
    let n = d.n();
    let mut best = n;
    for pick in 0u64..1 << edges.len() {
        let mut rows: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for (k, &(u, v)) in edges.iter().enumerate() {
            if pick >> k & 1 == 1 {
                rows[u] |= 1 << v;
            }
        }
        best = best.min(rank_gf2(&rows));
    }
    n - best
}

pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::from_edges(n, edges).unwrap()
}

/// Every digraph on `n` vertices, by edge mask over ordered pairs.
pub fn all_digraphs(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            Digraph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
        })
        .collect()
}

/// Strongly connected, checked by reachability from vertex 0 both ways.
pub fn is_strong(d: &Digraph) -> bool {
    let reach = |forward: bool| {
        let mut seen = vec![false; d.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let next = if forward {
                d.out_neighbors(v)
            } else {
                d.in_neighbors(v)
            };
            for &w in next {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&b| b)
    };
    d.n() > 0 && reach(true) && reach(false)
}

/// GF(4) = {0, 1, w, w^2} as 0..4, with `2 = w`, `3 = w + 1`.
pub fn gf4_mul(a: u64, b: u64) -> u64 {
    const LOG: [u64; 4] = [0, 0, 1, 2];
    const EXP: [u64; 3] = [1, 2, 3];
    if a == 0 || b == 0 {
        0
    } else {
        EXP[((LOG[a as usize] + LOG[b as usize]) % 3) as usize]
    }
}

/// The Reed-Solomon code of length 4 and dimension 2 over GF(4): messages
/// `(a, b)` evaluated as `a + b t` at `t = 0, 1, w, w^2`. Minimum distance 3.
pub fn reed_solomon_4_2() -> Vec<Vec<u64>> {
    let points = [0u64, 1, 2, 3];
    let mut code = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            code.push(points.iter().map(|&t| a ^ gf4_mul(b, t)).collect());
        }
    }
    code
}
