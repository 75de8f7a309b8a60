//! Sizes of codes with a given minimum Hamming distance.

use crate::config::ConfigSpace;
use crate::error::{guard_pow, Error, Result};
use crate::search;
use crate::ugraph::BitGraph;

/// Largest `s^n` searched by [`a_s_exact`] by default.
pub const CODE_GUARD: u64 = 1 << 12;

/// Search nodes spent by [`a_s_exact`] before giving up.
pub const CODE_BUDGET: u64 = 1 << 18;

/// What is known about `A_s(n, d)`: the largest code in `[s]^n` with
/// minimum distance `d`. Values saturate at `u64::MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeSize {
    pub n: usize,
    pub d: usize,
    pub s: u64,
    pub exact: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    /// `s^(n - d + 1)`.
    pub singleton: u64,
    /// `floor(s^n / V(n, floor((d - 1) / 2)))`.
    pub sphere_packing: u64,
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn pow_sat(s: u64, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(s as u128))
}

/// Size of a Hamming ball of radius `r` in `[s]^n`.
pub fn ball_volume(n: usize, r: usize, s: u64) -> u128 {
    (0..=r.min(n)).fold(0u128, |acc, i| {
        acc.saturating_add(binomial(n, i).saturating_mul(pow_sat(s - 1, i)))
    })
}

fn sat(x: u128) -> u64 {
    u64::try_from(x).unwrap_or(u64::MAX)
}

/// `s` is a power of a prime.
pub fn is_prime_power(s: u64) -> bool {
    if s < 2 {
        return false;
    }
    let p = (2..=s)
        .find(|p| s.is_multiple_of(*p))
        .expect("s >= 2 has a prime factor");
    let mut t = s;
    while t.is_multiple_of(p) {
        t /= p;
    }
    t == 1
}

fn hamming(space: &ConfigSpace, x: u64, y: u64) -> u32 {
    space.support(space.sub(x, y)).count_ones()
}

/// Exact `A_s(n, d)`.
///
/// Trivial distances are answered directly. Otherwise some optimal code
/// contains the zero word, so the search looks for a maximum set of words
/// at distance at least `d` from zero and from each other. Fails with a
/// size guard error when `s^n > guard`, and with a budget error when the
/// search needs more than [`CODE_BUDGET`] nodes.
pub fn a_s_exact(n: usize, d: usize, s: u64, guard: u64) -> Result<u64> {
    match code_search(n, d, s, guard, CODE_BUDGET)? {
        (size, true) => Ok(size),
        _ => Err(Error::BudgetExhausted("code search")),
    }
}

/// Largest code found within `budget` nodes, and whether it is optimal.
fn code_search(n: usize, d: usize, s: u64, guard: u64, budget: u64) -> Result<(u64, bool)> {
    if d <= 1 {
        return Ok((guard_pow("code space", s, n as u32, u64::MAX)?, true));
    }
    if d > n {
        return Ok((1, true));
    }
    if d == n {
        return Ok((s, true));
    }
    if d == 2 {
        return Ok((guard_pow("code space", s, n as u32 - 1, u64::MAX)?, true));
    }
    guard_pow("code search", s, n as u32, guard)?;
    let space = ConfigSpace::new(n, s)?;
    let far: Vec<u64> = (1..space.size())
        .filter(|&x| hamming(&space, x, 0) >= d as u32)
        .collect();
    let mut g = BitGraph::new(far.len());
    for i in 0..far.len() {
        for j in i + 1..far.len() {
            if hamming(&space, far[i], far[j]) < d as u32 {
                g.add_edge(i, j);
            }
        }
    }
    let r = search::max_independent_set(&g, None, &[], budget);
    Ok((r.size as u64 + 1, r.exact))
}

/// Exact value when [`a_s_exact`] fits in `guard`, and standard bounds in
/// any case: Singleton and sphere packing above; Gilbert-Varshamov and,
/// for prime power `s >= n - 1`, Reed-Solomon codes below.
pub fn code_bounds(n: usize, d: usize, s: u64, guard: u64) -> CodeSize {
    let total = pow_sat(s, n);
    let singleton = sat(pow_sat(s, (n + 1).saturating_sub(d.max(1))));
    let sphere_packing = sat(total / ball_volume(n, d.saturating_sub(1) / 2, s));
    let gv = sat(total.div_ceil(ball_volume(n, d.saturating_sub(1), s)));
    let found = code_search(n, d, s, guard, CODE_BUDGET).ok();
    let mut lower = gv.max(1).max(found.map_or(0, |f| f.0));
    if is_prime_power(s) && n as u64 <= s + 1 && d >= 1 && d <= n {
        lower = lower.max(singleton);
    }
    let upper = singleton.min(sphere_packing);
    let exact = found.filter(|f| f.1).map(|f| f.0);
    CodeSize {
        n,
        d,
        s,
        exact,
        lower: exact.unwrap_or(lower),
        upper: exact.unwrap_or(upper),
        singleton,
        sphere_packing,
    }
}
