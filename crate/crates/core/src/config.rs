//! Configurations `[s]^n` coded as mixed-radix integers, `x_0` least
//! significant.

use crate::error::{guard_pow, Error, Result};

/// The set `[s]^n` together with its code arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigSpace {
    n: usize,
    s: u64,
    size: u64,
    powers: Vec<u64>,
}

impl ConfigSpace {
    /// Fails unless `s >= 2`, `n <= 64` and `s^n` fits in a `u64`.
    pub fn new(n: usize, s: u64) -> Result<Self> {
        if s < 2 {
            return Err(Error::BadParams(format!(
                "alphabet size must be at least 2, got {s}"
            )));
        }
        if n > 64 {
            return Err(Error::BadParams(format!(
                "at most 64 coordinates supported, got {n}"
            )));
        }
        let size = guard_pow("configuration space", s, n as u32, u64::MAX)?;
        let mut powers = Vec::with_capacity(n);
        let mut p = 1u64;
        for _ in 0..n {
            powers.push(p);
            p = p.wrapping_mul(s);
        }
        Ok(ConfigSpace { n, s, size, powers })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn s(&self) -> u64 {
        self.s
    }

    /// `s^n`.
    #[inline]
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn check(&self, code: u64) -> Result<()> {
        if code < self.size {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                code,
                n: self.n,
                s: self.s,
            })
        }
    }

    #[inline]
    pub fn digit(&self, code: u64, i: usize) -> u64 {
        if self.s == 2 {
            (code >> i) & 1
        } else {
            (code / self.powers[i]) % self.s
        }
    }

    pub fn digits(&self, code: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n);
        let mut c = code;
        for _ in 0..self.n {
            out.push(c % self.s);
            c /= self.s;
        }
        out
    }

    pub fn encode(&self, symbols: &[u64]) -> Result<u64> {
        if symbols.len() != self.n || symbols.iter().any(|&x| x >= self.s) {
            return Err(Error::BadParams(format!(
                "word {symbols:?} is not in [{}]^{}",
                self.s, self.n
            )));
        }
        Ok(symbols.iter().zip(&self.powers).map(|(&x, &p)| x * p).sum())
    }

    /// Coordinatewise sum modulo `s`.
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.s == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &p in &self.powers {
            out += ((a % self.s + b % self.s) % self.s) * p;
            a /= self.s;
            b /= self.s;
        }
        out
    }

    /// Coordinatewise difference modulo `s`.
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.s == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &p in &self.powers {
            out += ((a % self.s + self.s - b % self.s) % self.s) * p;
            a /= self.s;
            b /= self.s;
        }
        out
    }

    /// Bit mask of the coordinates where `code` is nonzero.
    pub fn support(&self, code: u64) -> u64 {
        if self.s == 2 {
            return code;
        }
        let mut c = code;
        let mut mask = 0u64;
        for i in 0..self.n {
            if !c.is_multiple_of(self.s) {
                mask |= 1 << i;
            }
            c /= self.s;
        }
        mask
    }

    /// The word `x_J` for the vertex list `J`, coded with `J[0]` least
    /// significant.
    pub fn restrict(&self, code: u64, vertices: &[usize]) -> u64 {
        let mut out = 0u64;
        for &v in vertices.iter().rev() {
            out = out * self.s + self.digit(code, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_little_endian() {
        let c = ConfigSpace::new(3, 3).unwrap();
        assert_eq!(c.size(), 27);
        assert_eq!(c.encode(&[1, 0, 2]).unwrap(), 1 + 2 * 9);
        assert_eq!(c.digits(19), vec![1, 0, 2]);
        assert_eq!(c.digit(19, 2), 2);
        assert!(c.check(27).is_err());
    }

    #[test]
    fn arithmetic_is_coordinatewise() {
        let c = ConfigSpace::new(3, 3).unwrap();
        let a = c.encode(&[2, 1, 0]).unwrap();
        let b = c.encode(&[2, 2, 1]).unwrap();
        assert_eq!(c.digits(c.add(a, b)), vec![1, 0, 1]);
        assert_eq!(c.digits(c.sub(a, b)), vec![0, 2, 2]);
        assert_eq!(c.support(c.sub(a, b)), 0b110);
        assert_eq!(c.restrict(b, &[2, 0]), 1 + 2 * 3);
    }

    #[test]
    fn binary_shortcuts_agree() {
        let c = ConfigSpace::new(4, 2).unwrap();
        assert_eq!(c.add(0b1010, 0b0110), 0b1100);
        assert_eq!(c.support(0b1001), 0b1001);
        assert_eq!(c.restrict(0b1001, &[0, 3, 1]), 0b011);
    }

    #[test]
    fn oversized_spaces_rejected() {
        assert!(ConfigSpace::new(65, 2).is_err());
        assert!(ConfigSpace::new(41, 3).unwrap_err().is_size_guard());
        assert!(ConfigSpace::new(2, 1).is_err());
    }
}
