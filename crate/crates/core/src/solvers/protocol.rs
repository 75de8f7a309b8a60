//! Protocols as explicit lookup tables.

use crate::config::ConfigSpace;
use crate::digraph::Digraph;
use crate::error::{guard_pow, Error, Result};
use crate::gf_linear::LinearProtocol;
use crate::guessing_graph::DEFAULT_GUARD;

/// One lookup table per vertex. The table of `v` is indexed by the word
/// `x_{N-(v)}` with the smallest in-neighbour as the least significant digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Protocol {
    s: u64,
    inputs: Vec<Vec<usize>>,
    tables: Vec<Vec<u64>>,
}

impl Protocol {
    pub fn new(d: &Digraph, s: u64, tables: Vec<Vec<u64>>) -> Result<Self> {
        if tables.len() != d.n() {
            return Err(Error::BadParams(format!(
                "{} tables for {} vertices",
                tables.len(),
                d.n()
            )));
        }
        for (v, t) in tables.iter().enumerate() {
            let want = guard_pow("protocol table", s, d.in_degree(v) as u32, DEFAULT_GUARD)?;
            if t.len() as u64 != want {
                return Err(Error::BadParams(format!(
                    "table of vertex {v} has {} entries, expected {want}",
                    t.len()
                )));
            }
            if let Some(x) = t.iter().find(|&&x| x >= s) {
                return Err(Error::BadParams(format!(
                    "table of vertex {v} holds symbol {x} >= {s}"
                )));
            }
        }
        Ok(Protocol {
            s,
            inputs: (0..d.n()).map(|v| d.in_neighbors(v).to_vec()).collect(),
            tables,
        })
    }

    /// Every vertex guesses 0.
    pub fn zero(d: &Digraph, s: u64) -> Result<Self> {
        Self::from_fn(d, s, |_, _| 0)
    }

    /// Tabulates `f(v, word)`, where `word` lists the in-neighbour symbols in
    /// ascending vertex order.
    pub fn from_fn(d: &Digraph, s: u64, f: impl Fn(usize, &[u64]) -> u64) -> Result<Self> {
        let mut tables = Vec::with_capacity(d.n());
        for v in 0..d.n() {
            let k = d.in_degree(v);
            let size = guard_pow("protocol table", s, k as u32, DEFAULT_GUARD)?;
            let word_space = ConfigSpace::new(k, s)?;
            tables.push((0..size).map(|w| f(v, &word_space.digits(w)) % s).collect());
        }
        Self::new(d, s, tables)
    }

    /// Tabulates a linear protocol over GF(p).
    pub fn from_linear(d: &Digraph, lp: &LinearProtocol) -> Result<Self> {
        let p = lp.p();
        Self::from_fn(d, p, |v, word| {
            d.in_neighbors(v)
                .iter()
                .zip(word)
                .fold(0, |acc, (&u, &x)| (acc + lp.coefficient(v, u) * x) % p)
        })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn n(&self) -> usize {
        self.tables.len()
    }

    pub fn table(&self, v: usize) -> &[u64] {
        &self.tables[v]
    }

    pub fn inputs(&self, v: usize) -> &[usize] {
        &self.inputs[v]
    }

    /// The guess of vertex `v` on configuration `x`.
    pub fn guess(&self, space: &ConfigSpace, v: usize, x: u64) -> u64 {
        self.tables[v][space.restrict(x, &self.inputs[v]) as usize]
    }

    pub fn apply(&self, space: &ConfigSpace, x: u64) -> u64 {
        let digits: Vec<u64> = (0..self.n()).map(|v| self.guess(space, v, x)).collect();
        space.encode(&digits).expect("guesses are symbols")
    }

    pub fn is_fixed(&self, space: &ConfigSpace, x: u64) -> bool {
        (0..self.n()).all(|v| self.guess(space, v, x) == space.digit(x, v))
    }
}

/// All configurations the protocol maps to themselves, ascending.
pub fn fixed_configurations(d: &Digraph, s: u64, p: &Protocol, guard: u64) -> Result<Vec<u64>> {
    if p.n() != d.n() || p.s() != s {
        return Err(Error::BadParams(
            "protocol does not match digraph and alphabet".into(),
        ));
    }
    let size = guard_pow("fixed-point enumeration", s, d.n() as u32, guard)?;
    let space = ConfigSpace::new(d.n(), s)?;
    Ok((0..size).filter(|&x| p.is_fixed(&space, x)).collect())
}

/// A protocol fixing every configuration of the independent set `set`:
/// vertex `v` answers `a_v` when it sees `a` restricted to its
/// in-neighbourhood, and 0 on words no member of the set produces.
///
/// Two members that the table cannot tell apart at some vertex are exactly
/// an adjacent pair of the guessing graph; the first such pair is reported.
pub fn protocol_from_independent_set(d: &Digraph, s: u64, set: &[u64]) -> Result<Protocol> {
    let space = ConfigSpace::new(d.n(), s)?;
    for &a in set {
        space.check(a)?;
    }
    let mut tables = Vec::with_capacity(d.n());
    for v in 0..d.n() {
        let ins = d.in_neighbors(v);
        let size = guard_pow("protocol table", s, ins.len() as u32, DEFAULT_GUARD)? as usize;
        let mut owner: Vec<Option<u64>> = vec![None; size];
        let mut table = vec![0u64; size];
        for &a in set {
            let w = space.restrict(a, ins) as usize;
            let x = space.digit(a, v);
            match owner[w] {
                None => {
                    owner[w] = Some(a);
                    table[w] = x;
                }
                Some(b) if table[w] != x => return Err(Error::NotIndependent(a.min(b), a.max(b))),
                Some(_) => {}
            }
        }
        tables.push(table);
    }
    Protocol::new(d, s, tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, StandardKind};

    #[test]
    fn even_words_on_clique_give_parity() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        let p = protocol_from_independent_set(&k3, 2, &[0b000, 0b011, 0b101, 0b110]).unwrap();
        for v in 0..3 {
            assert_eq!(p.table(v), &[0, 1, 1, 0]);
        }
        assert_eq!(
            fixed_configurations(&k3, 2, &p, 1 << 10).unwrap(),
            vec![0, 3, 5, 6]
        );
    }

    #[test]
    fn adjacent_pair_is_reported() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        let err = protocol_from_independent_set(&k3, 2, &[0b000, 0b001]).unwrap_err();
        assert_eq!(err, Error::NotIndependent(0, 1));
    }

    #[test]
    fn copying_on_cycle_fixes_constants() {
        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        let p = Protocol::from_fn(&c3, 3, |_, w| w[0]).unwrap();
        assert_eq!(
            fixed_configurations(&c3, 3, &p, 1 << 10).unwrap(),
            vec![0, 13, 26]
        );
        let z = Protocol::zero(&c3, 3).unwrap();
        assert_eq!(fixed_configurations(&c3, 3, &z, 1 << 10).unwrap(), vec![0]);
    }

    #[test]
    fn table_shapes_are_checked() {
        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        assert!(Protocol::new(&c3, 2, vec![vec![0, 1]; 2]).is_err());
        assert!(Protocol::new(&c3, 2, vec![vec![0, 2]; 3]).is_err());
        assert!(Protocol::new(&c3, 2, vec![vec![0]; 3]).is_err());
    }
}
