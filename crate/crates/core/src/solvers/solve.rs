//! Guessing number and information defect through the guessing graph.

use crate::config::ConfigSpace;
use crate::digraph::{
    clique_partition_number, mas_exact, strong_components, Digraph, DEFAULT_MAS_BUDGET,
};
use crate::error::{guard_pow, Error, Result};
use crate::gf_linear::{is_prime, linear_guessing_number};
use crate::guessing_graph::{GuessingGraph, DENSE_LIMIT};
use crate::search::{self, color_count};

use super::protocol::{protocol_from_independent_set, Protocol};

const SEED_LINEAR_BUDGET: u64 = 1 << 16;
const SEED_PARTITION_BUDGET: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest `s^n` of a single strong component that gets materialized.
    pub guard: u64,
    pub mis_budget: u64,
    pub color_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            guard: DENSE_LIMIT,
            mis_budget: 1 << 24,
            color_budget: 1 << 22,
        }
    }
}

/// An independent set of configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentConfigs {
    pub alpha: u64,
    /// Ascending configuration codes.
    pub witness: Vec<u64>,
    pub exact: bool,
}

/// A proper coloring of the configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigColoring {
    pub chi: u64,
    /// Color of each configuration code.
    pub colors: Vec<usize>,
    pub exact: bool,
}

/// `log_s x`.
pub fn log_base(x: f64, s: u64) -> f64 {
    x.ln() / (s as f64).ln()
}

/// `Some(k)` when `x = s^k`.
pub fn exact_power(x: u64, s: u64) -> Option<u32> {
    let mut k = 0;
    let mut y = 1u64;
    while y < x {
        y = y.checked_mul(s)?;
        k += 1;
    }
    (y == x).then_some(k)
}

/// Configurations with `x_v = sum_u w(v, u) x_u (mod s)` at every vertex.
/// They form a subgroup of `Z_s^n`, independent in the guessing graph.
fn fixed_by_weights(d: &Digraph, space: &ConfigSpace, w: impl Fn(usize, usize) -> u64) -> Vec<u64> {
    let s = space.s();
    (0..space.size())
        .filter(|&x| {
            (0..d.n()).all(|v| {
                let guess = d
                    .in_neighbors(v)
                    .iter()
                    .fold(0, |acc, &u| (acc + w(v, u) * space.digit(x, u)) % s);
                guess == space.digit(x, v)
            })
        })
        .collect()
}

/// Subgroups of `Z_s^n` fixed by simple additive protocols: guessing the
/// in-neighbour sum, its negation, the negated sum over a clique class, and
/// the best linear protocol found when `s` is prime.
fn subgroup_seeds(h: &GuessingGraph) -> Result<Vec<Vec<u64>>> {
    let d = h.digraph();
    let space = h.space();
    let s = space.s();
    let mut seeds = vec![
        fixed_by_weights(d, space, |_, _| 1),
        fixed_by_weights(d, space, |_, _| s - 1),
    ];
    let partition = clique_partition_number(d, SEED_PARTITION_BUDGET);
    let mut class_of = vec![0; d.n()];
    for (i, class) in partition.classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    seeds.push(fixed_by_weights(d, space, |v, u| {
        if class_of[u] == class_of[v] {
            s - 1
        } else {
            0
        }
    }));
    if is_prime(s) {
        let lin = linear_guessing_number(d, s, SEED_LINEAR_BUDGET)?;
        seeds.push(lin.witness.fixed_space_codes(space.size())?);
    }
    seeds.sort_by_key(|set| std::cmp::Reverse(set.len()));
    seeds.dedup();
    Ok(seeds)
}

/// Partition of the configurations into cliques: group by the word outside
/// an acyclic set `H`. Two configurations that differ only inside `H`
/// differ on an acyclic support, which has a vertex with no in-neighbour in
/// it, so they are adjacent.
fn acyclic_cover(space: &ConfigSpace, acyclic: &[usize]) -> Vec<Vec<usize>> {
    let outside: Vec<usize> = (0..space.n()).filter(|v| !acyclic.contains(v)).collect();
    let classes = space.s().pow(outside.len() as u32) as usize;
    let mut cover = vec![Vec::new(); classes];
    for x in 0..space.size() {
        cover[space.restrict(x, &outside) as usize].push(x as usize);
    }
    cover
}

/// Exact (within `budget` nodes) maximum independent set of a materialized
/// guessing graph. The search bounds with the clique cover coming from a
/// maximum acyclic set, or greedy clique covers when that set is not known
/// to be maximum.
pub fn max_independent_set(h: &GuessingGraph, budget: u64) -> Result<IndependentConfigs> {
    let g = h.require_dense()?;
    let mas = mas_exact(h.digraph(), DEFAULT_MAS_BUDGET);
    let cover = mas.exact.then(|| acyclic_cover(h.space(), &mas.witness));
    let seeds: Vec<Vec<usize>> = subgroup_seeds(h)?
        .into_iter()
        .map(|set| set.into_iter().map(|x| x as usize).collect())
        .collect();
    let r = search::max_independent_set(g, cover.as_deref(), &seeds, budget);
    debug_assert!(g.is_independent(&r.vertices));
    Ok(IndependentConfigs {
        alpha: r.size as u64,
        witness: r.vertices.into_iter().map(|v| v as u64).collect(),
        exact: r.exact,
    })
}

/// Coloring by the cosets of a subgroup of independent configurations.
fn coset_coloring(space: &ConfigSpace, subgroup: &[u64]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut colors = vec![UNSET; space.size() as usize];
    let mut next = 0;
    for x in 0..space.size() {
        if colors[x as usize] == UNSET {
            for &a in subgroup {
                colors[space.add(x, a) as usize] = next;
            }
            next += 1;
        }
    }
    colors
}

fn is_subgroup(space: &ConfigSpace, set: &[u64]) -> bool {
    set.binary_search(&0).is_ok()
        && set.iter().all(|&a| {
            set.iter()
                .all(|&b| set.binary_search(&space.add(a, b)).is_ok())
        })
}

/// Chromatic number of a materialized guessing graph.
///
/// The search starts from the best of DSATUR and the coset colorings of
/// the additive fixed subgroups, with lower bound `s^|H|` for the acyclic
/// set `H` (a clique) and `ceil(s^n / alpha)` when alpha is known exactly
/// (the graph is vertex transitive).
pub fn chromatic_number(h: &GuessingGraph, budget: u64) -> Result<ConfigColoring> {
    let g = h.require_dense()?;
    let space = h.space();
    let n_configs = space.size();
    let mas = mas_exact(h.digraph(), DEFAULT_MAS_BUDGET);
    let mut lower = space.s().pow(mas.size as u32);
    let mut uppers: Vec<Vec<usize>> = subgroup_seeds(h)?
        .iter()
        .map(|sub| coset_coloring(space, sub))
        .collect();
    let best_upper = uppers
        .iter()
        .map(|c| color_count(c) as u64)
        .min()
        .unwrap_or(n_configs);
    if best_upper > lower {
        let mis = max_independent_set(h, budget)?;
        if mis.exact {
            lower = lower.max(n_configs.div_ceil(mis.alpha));
        }
        if mis.witness.len() * mis.witness.len() <= 1 << 24 && is_subgroup(space, &mis.witness) {
            uppers.push(coset_coloring(space, &mis.witness));
        }
    }
    let c = search::chromatic_number(g, lower as usize, &uppers, budget);
    debug_assert!(g.is_proper_coloring(&c.colors));
    Ok(ConfigColoring {
        chi: c.count as u64,
        colors: c.colors,
        exact: c.exact,
    })
}

/// Per strong component result inside [`GuessingNumber`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSolution {
    /// Vertices of `D`, ascending; the component's configurations use this
    /// order for their digits.
    pub vertices: Vec<usize>,
    pub alpha: u64,
    /// Configuration codes over the component.
    pub witness: Vec<u64>,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessingNumber {
    pub n: usize,
    pub s: u64,
    /// Maximum number of simultaneously fixed configurations (the best found
    /// when `exact` is false).
    pub alpha: u64,
    pub exact: bool,
    pub components: Vec<ComponentSolution>,
    /// Fixes every configuration of [`GuessingNumber::witness_set`].
    pub protocol: Protocol,
}

impl GuessingNumber {
    /// `log_s alpha`.
    pub fn g(&self) -> f64 {
        log_base(self.alpha as f64, self.s)
    }

    /// `Some(k)` when `alpha = s^k`.
    pub fn exact_log(&self) -> Option<u32> {
        exact_power(self.alpha, self.s)
    }

    /// The fixed configurations of the witness, as the product of the
    /// component witnesses; ascending.
    pub fn witness_set(&self, guard: u64) -> Result<Vec<u64>> {
        if self.alpha > guard {
            return Err(Error::SizeGuard {
                what: "witness set",
                base: self.alpha,
                exponent: 1,
                guard,
            });
        }
        let space = ConfigSpace::new(self.n, self.s)?;
        let mut all = vec![0u64];
        for comp in &self.components {
            let cspace = ConfigSpace::new(comp.vertices.len(), self.s)?;
            let lifted: Vec<u64> = comp
                .witness
                .iter()
                .map(|&w| lift(&space, &cspace, &comp.vertices, w))
                .collect();
            all = all
                .iter()
                .flat_map(|&x| lifted.iter().map(|&y| space.add(x, y)).collect::<Vec<_>>())
                .collect();
        }
        all.sort_unstable();
        Ok(all)
    }
}

/// Places the digits of a component word at the component's vertices.
fn lift(space: &ConfigSpace, cspace: &ConfigSpace, vertices: &[usize], w: u64) -> u64 {
    let mut digits = vec![0u64; space.n()];
    for (i, &v) in vertices.iter().enumerate() {
        digits[v] = cspace.digit(w, i);
    }
    space.encode(&digits).expect("component digits are symbols")
}

/// `g(D, s)` as the sum over strong components; each component with a
/// cycle is solved by a maximum independent set search on its guessing
/// graph. The witness protocol lets each vertex read only in-neighbours of
/// its own component.
pub fn guessing_number(d: &Digraph, s: u64, opts: &SolveOptions) -> Result<GuessingNumber> {
    let space = ConfigSpace::new(d.n(), s)?;
    let cond = strong_components(d);
    let mut components = Vec::new();
    for comp in &cond.components {
        let sub = d.induced(comp);
        let sol = if sub.edge_count() == 0 {
            ComponentSolution {
                vertices: comp.clone(),
                alpha: 1,
                witness: vec![0],
                exact: true,
            }
        } else {
            let h = GuessingGraph::materialize(&sub, s, opts.guard)?;
            if h.dense().is_none() {
                guard_pow("dense guessing graph", s, comp.len() as u32, DENSE_LIMIT)?;
            }
            let mis = max_independent_set(&h, opts.mis_budget)?;
            ComponentSolution {
                vertices: comp.clone(),
                alpha: mis.alpha,
                witness: mis.witness,
                exact: mis.exact,
            }
        };
        components.push(sol);
    }
    components.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut tables: Vec<Vec<u64>> = vec![Vec::new(); d.n()];
    for comp in &components {
        let sub = d.induced(&comp.vertices);
        let local = protocol_from_independent_set(&sub, s, &comp.witness)?;
        for (i, &v) in comp.vertices.iter().enumerate() {
            // In-neighbours of v inside the component, as positions in N-(v).
            let ins = d.in_neighbors(v);
            let positions: Vec<usize> = local
                .inputs(i)
                .iter()
                .map(|&j| ins.binary_search(&comp.vertices[j]).expect("induced edge"))
                .collect();
            let word_space = ConfigSpace::new(ins.len(), s)?;
            tables[v] = (0..word_space.size())
                .map(|w| local.table(i)[word_space.restrict(w, &positions) as usize])
                .collect();
        }
    }
    let protocol = Protocol::new(d, s, tables)?;
    let alpha = components
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.alpha));
    let alpha = alpha.ok_or_else(|| Error::SizeGuard {
        what: "independence number",
        base: s,
        exponent: d.n() as u32,
        guard: u64::MAX,
    })?;
    debug_assert!(alpha <= space.size());
    Ok(GuessingNumber {
        n: d.n(),
        s,
        alpha,
        exact: components.iter().all(|c| c.exact),
        components,
        protocol,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationDefect {
    pub s: u64,
    pub chi: u64,
    pub exact: bool,
    /// Color classes, each ascending; every class is fixed by one protocol.
    pub partition: Vec<Vec<u64>>,
}

impl InformationDefect {
    /// `log_s chi`.
    pub fn b(&self) -> f64 {
        log_base(self.chi as f64, self.s)
    }

    pub fn exact_log(&self) -> Option<u32> {
        exact_power(self.chi, self.s)
    }
}

/// `b(D, s)` from the chromatic number of the whole guessing graph.
pub fn information_defect(d: &Digraph, s: u64, opts: &SolveOptions) -> Result<InformationDefect> {
    let h = GuessingGraph::materialize(d, s, opts.guard)?;
    let c = chromatic_number(&h, opts.color_budget)?;
    let mut partition = vec![Vec::new(); c.chi as usize];
    for (x, &col) in c.colors.iter().enumerate() {
        partition[col].push(x as u64);
    }
    Ok(InformationDefect {
        s,
        chi: c.chi,
        exact: c.exact,
        partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, union, StandardKind, UnionKind};
    use crate::solvers::protocol::fixed_configurations;

    fn solve(d: &Digraph, s: u64) -> GuessingNumber {
        guessing_number(d, s, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn clique_three_binary() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        let h = GuessingGraph::materialize(&k3, 2, 1 << 10).unwrap();
        let mis = max_independent_set(&h, 1 << 20).unwrap();
        assert_eq!(
            (mis.alpha, mis.witness.clone(), mis.exact),
            (4, vec![0, 3, 5, 6], true)
        );
        let g = solve(&k3, 2);
        assert_eq!((g.alpha, g.exact_log()), (4, Some(2)));
        let def = information_defect(&k3, 2, &SolveOptions::default()).unwrap();
        assert_eq!((def.chi, def.exact), (2, true));
        assert_eq!(def.partition, vec![vec![0, 3, 5, 6], vec![1, 2, 4, 7]]);
    }

    #[test]
    fn witness_protocol_fixes_the_witness() {
        let a = standard(StandardKind::Clique(2)).unwrap();
        let b = standard(StandardKind::Cycle(3)).unwrap();
        let d = union(UnionKind::Unidirectional, &a, &b);
        let g = solve(&d, 2);
        assert_eq!((g.alpha, g.exact), (4, true));
        let set = g.witness_set(1 << 10).unwrap();
        let fixed = fixed_configurations(&d, 2, &g.protocol, 1 << 10).unwrap();
        assert!(set.iter().all(|x| fixed.contains(x)));
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn cycle_defect_and_acyclic() {
        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        let def = information_defect(&c3, 2, &SolveOptions::default()).unwrap();
        assert_eq!((def.chi, def.exact_log()), (4, Some(2)));
        let p3 = standard(StandardKind::Path(3)).unwrap();
        assert_eq!(solve(&p3, 3).alpha, 1);
        let def = information_defect(&p3, 2, &SolveOptions::default()).unwrap();
        assert_eq!(def.chi, 8);
    }

    #[test]
    fn powers() {
        assert_eq!(exact_power(27, 3), Some(3));
        assert_eq!(exact_power(1, 5), Some(0));
        assert_eq!(exact_power(6, 2), None);
    }
}
