//! Guessing numbers of one digraph over related alphabets.

use crate::config::ConfigSpace;
use crate::error::Result;

/// A closed real interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.lo - tol <= x && x <= self.hi + tol
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }
}

/// Interval for `g(D, st)` given `g_s = g(D, s)` and `g_t = g(D, t)` on `n`
/// vertices. A pair of protocols over `[s]` and `[t]` runs side by side
/// over `[s] x [t]`, and any protocol over `[st]` projects to each factor.
pub fn alphabet_composition_bounds(g_s: f64, g_t: f64, n: usize, s: u64, t: u64) -> Interval {
    let (ls, lt) = ((s as f64).ln(), (t as f64).ln());
    let n = n as f64;
    let total = ls + lt;
    Interval {
        lo: (g_s * ls + g_t * lt) / total,
        hi: ((g_s * ls + n * lt) / total).min((g_t * lt + n * ls) / total),
    }
}

/// Interval for `g(D, t)`, `t >= s`, from `g_s = g(D, s)` alone, with
/// `m = floor(log_s t)`: `[g_s m / log_s t, (g_s + m n) / log_s t]`.
pub fn power_alphabet_bounds(g_s: f64, n: usize, s: u64, t: u64) -> Interval {
    assert!(t >= s && s >= 2, "needs t >= s >= 2");
    let mut m = 0u32;
    let mut p = 1u64;
    while let Some(q) = p.checked_mul(s).filter(|&q| q <= t) {
        p = q;
        m += 1;
    }
    let log_t = (t as f64).ln() / (s as f64).ln();
    Interval {
        lo: g_s * m as f64 / log_t,
        hi: (g_s + m as f64 * n as f64) / log_t,
    }
}

/// Splits a configuration over `[st]` into its pair over `[s]` and `[t]`,
/// reading each symbol `z` as `(z mod s, z div s)`.
pub fn split_configuration(code: u64, n: usize, s: u64, t: u64) -> Result<(u64, u64)> {
    let big = ConfigSpace::new(n, s * t)?;
    let small = ConfigSpace::new(n, s)?;
    let other = ConfigSpace::new(n, t)?;
    big.check(code)?;
    let digits = big.digits(code);
    let lo: Vec<u64> = digits.iter().map(|z| z % s).collect();
    let hi: Vec<u64> = digits.iter().map(|z| z / s).collect();
    Ok((small.encode(&lo)?, other.encode(&hi)?))
}
