//! Polynomials over GF(2), packed 64 coefficients per word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Bit `i` of the packed words is the coefficient of `x^i`. No trailing
/// zero words are stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        Gf2Poly { words }
    }

    /// `x^n + 1`.
    pub fn xn1(n: usize) -> Self {
        Self::monomial(n).add(&Self::one())
    }

    /// Coefficients from the bits of `mask`, constant term in bit 0.
    pub fn from_mask(mask: u64) -> Self {
        Self::from_words(vec![mask])
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        exps.iter()
            .fold(Self::zero(), |acc, &e| acc.add(&Self::monomial(e)))
    }

    /// Ascending coefficients.
    pub fn from_coefficients(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len() / 64 + 1];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Self::from_words(words)
    }

    fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Gf2Poly { words }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| {
                self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0)
            })
            .collect();
        Self::from_words(words)
    }

    /// `self * x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (wshift, bshift) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + wshift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + wshift] ^= w << bshift;
            if bshift > 0 {
                words[i + wshift + 1] ^= w >> (64 - bshift);
            }
        }
        Self::from_words(words)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = vec![0u64; self.words.len() + other.words.len() + 1];
        for e in self.exponents() {
            let (wshift, bshift) = (e / 64, e % 64);
            for (i, &w) in other.words.iter().enumerate() {
                acc[i + wshift] ^= w << bshift;
                if bshift > 0 {
                    acc[i + wshift + 1] ^= w >> (64 - bshift);
                }
            }
        }
        Self::from_words(acc)
    }

    /// Quotient and remainder, with `deg r < deg b`.
    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZeroPoly)?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let shift = dr - db;
            q = q.add(&Self::monomial(shift));
            r = r.add(&b.shl(shift));
        }
        Ok((q, r))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        self.divmod(b).map(|(_, r)| r)
    }

    /// Greatest common divisor by Euclid's algorithm. Over GF(2) every
    /// nonzero polynomial is monic, so no normalization is needed.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one().rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `g` divides `x^n + 1`.
    pub fn divides_xn1(&self, n: usize) -> bool {
        !self.is_zero() && Self::xn1(n).rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Ascending coefficient string, `"11101"` for `1 + x + x^2 + x^4`;
    /// `"0"` for zero.
    pub fn to_bit_string(&self) -> String {
        match self.degree() {
            None => "0".into(),
            Some(d) => (0..=d)
                .map(|i| if self.coeff(i) { '1' } else { '0' })
                .collect(),
        }
    }
}

impl fmt::Display for Gf2Poly {
    /// Descending terms: `x^4+x^2+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".into(),
                1 => "x".into(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    /// Either an ascending bit-string (`11101`) or a sum of terms such as
    /// `x4+x2+x+1` or `x^4 + x^2 + x + 1`. Repeated terms cancel.
    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::BadParams(format!("polynomial {text:?}: {msg}"));
        if t.is_empty() {
            return Err(bad("empty"));
        }
        if t.chars().all(|c| c == '0' || c == '1') {
            return Ok(Self::from_coefficients(
                &t.chars().map(|c| c == '1').collect::<Vec<_>>(),
            ));
        }
        let mut exps = Vec::new();
        for term in t.split('+') {
            let e = match term {
                "1" => 0,
                "x" => 1,
                "0" => continue,
                _ => {
                    let rest = term
                        .strip_prefix('x')
                        .ok_or_else(|| bad(&format!("bad term {term:?}")))?;
                    let rest = rest.strip_prefix('^').unwrap_or(rest);
                    rest.parse::<usize>()
                        .map_err(|_| bad(&format!("bad exponent in {term:?}")))?
                }
            };
            exps.push(e);
        }
        Ok(Self::from_exponents(&exps))
    }
}
