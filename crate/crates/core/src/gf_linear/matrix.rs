//! Dense matrices over a prime field.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) && p < (1 << 31) {
        Ok(())
    } else {
        Err(Error::NonPrimeField(p))
    }
}

/// Multiplicative inverse modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GfMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl GfMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(GfMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(n: usize, p: u64) -> Result<Self> {
        let mut m = GfMatrix::zeros(n, n, p)?;
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        Ok(m)
    }

    /// Entries are reduced modulo `p`.
    pub fn from_rows(rows: &[Vec<u64>], p: u64) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadParams("matrix rows differ in length".into()));
        }
        let mut m = GfMatrix::zeros(rows.len(), cols, p)?;
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = x % p;
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut t = GfMatrix {
            rows: self.cols,
            cols: self.rows,
            p: self.p,
            data: vec![0; self.data.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    fn same_field(&self, other: &GfMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::BadParams(format!(
                "fields differ: {} vs {}",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::BadParams("matrix shapes differ".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + b) % self.p;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GfMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = (self.p - *a) % self.p;
        }
        out
    }

    pub fn mul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::BadParams("inner dimensions differ".into()));
        }
        let mut out = GfMatrix::zeros(self.rows, other.cols, self.p)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % self.p;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; entry `(i1 * r2 + i2, j1 * c2 + j2)` is
    /// `self[i1][j1] * other[i2][j2]`.
    pub fn kron(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        let (r2, c2) = (other.rows, other.cols);
        let mut out = GfMatrix::zeros(self.rows * r2, self.cols * c2, self.p)?;
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        out.set(i1 * r2 + i2, j1 * c2 + j2, a * other.get(i2, j2));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (GfMatrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(piv * m.cols + j, r * m.cols + j);
            }
            let inv = inv_mod(m.get(r, c), p);
            for j in 0..m.cols {
                let x = m.get(r, j) * inv % p;
                m.data[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let x = (m.get(i, j) + (p - f) * m.get(r, j)) % p;
                    m.data[i * m.cols + j] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.p == 2 && self.cols <= 64 {
            return rank_bits(
                &(0..self.rows)
                    .map(|i| {
                        self.row(i)
                            .iter()
                            .enumerate()
                            .fold(0u64, |m, (j, &x)| m | (x << j))
                    })
                    .collect::<Vec<_>>(),
            );
        }
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column, in ascending
    /// order of the free column.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (i, &c) in pivots.iter().enumerate() {
                    v[c] = (p - r.get(i, f)) % p;
                }
                v
            })
            .collect()
    }

    /// `M x` for a column vector `x`.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| (acc + a * (b % self.p)) % self.p)
            })
            .collect()
    }
}

/// Rank over GF(2) of bit rows (bit `j` is column `j`).
pub fn rank_bits(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Reads `rows cols p` followed by the entries in row-major order.
pub fn parse_matrix(text: &str) -> Result<GfMatrix> {
    let mut tokens = text.lines().enumerate().flat_map(|(i, l)| {
        l.split('#')
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(move |t| (i + 1, t))
    });
    let mut next = |what: &str| -> Result<u64> {
        let (line, t) = tokens
            .next()
            .ok_or_else(|| Error::parse(0, format!("missing {what}")))?;
        t.parse::<u64>()
            .map_err(|_| Error::parse(line, format!("expected {what}, got {t:?}")))
    };
    let rows = next("row count")? as usize;
    let cols = next("column count")? as usize;
    let p = next("field size")?;
    check_prime(p)?;
    let mut m = GfMatrix::zeros(rows, cols, p)?;
    for i in 0..rows {
        for j in 0..cols {
            let x = next("entry")?;
            if x >= p {
                return Err(Error::parse(0, format!("entry {x} is not below {p}")));
            }
            m.set(i, j, x);
        }
    }
    if let Some((line, t)) = tokens.next() {
        return Err(Error::parse(
            line,
            format!("unexpected trailing token {t:?}"),
        ));
    }
    Ok(m)
}

pub fn write_matrix(m: &GfMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.rows, m.cols, m.p);
    for i in 0..m.rows {
        let row: Vec<String> = m.row(i).iter().map(u64::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(GfMatrix::zeros(2, 2, 4), Err(Error::NonPrimeField(4)));
    }

    #[test]
    fn ranks() {
        assert_eq!(GfMatrix::identity(5, 3).unwrap().rank(), 5);
        let ones = GfMatrix::from_rows(&vec![vec![1; 3]; 3], 2).unwrap();
        assert_eq!(ones.rank(), 1);
        let h = GfMatrix::from_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]], 2).unwrap();
        assert_eq!(h.rank(), 2);
        // Same pattern over GF(3) is invertible.
        let h3 = GfMatrix::from_rows(&h.to_rows(), 3).unwrap();
        assert_eq!(h3.rank(), 3);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = GfMatrix::from_rows(&[vec![1, 2, 0, 1], vec![2, 4, 1, 0]], 5).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 4 - m.rank());
        for v in &ns {
            assert!(m.apply(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn kronecker_rank_multiplies() {
        let a = GfMatrix::from_rows(&[vec![1, 1], vec![1, 1]], 2).unwrap();
        let b = GfMatrix::identity(3, 2).unwrap();
        let k = a.kron(&b).unwrap();
        assert_eq!((k.rows(), k.rank()), (6, 3));
        assert_eq!((k.get(3, 0), k.get(3, 1)), (1, 0));
    }

    #[test]
    fn text_round_trip() {
        let m = GfMatrix::from_rows(&[vec![1, 0, 2], vec![0, 1, 1]], 3).unwrap();
        let text = write_matrix(&m);
        assert_eq!(text, "2 3 3\n1 0 2\n0 1 1\n");
        assert_eq!(parse_matrix(&text).unwrap(), m);
        assert!(parse_matrix("1 1 4\n1\n").is_err());
        assert!(parse_matrix("1 1 3\n3\n").is_err());
    }
}
