//! Circulant digraphs generated by binary polynomials, in particular by
//! generator polynomials of cyclic codes.

mod poly;

pub use poly::Gf2Poly;

use crate::digraph::{
    mas_exact, structure_report, Digraph, Mas, StructureReport, DEFAULT_MAS_BUDGET,
};
use crate::error::{Error, Result};
use crate::gf_linear::parity_check_protocol;

/// Circulant digraph on `n` vertices with an edge from `v_{a+i mod n}` to
/// `v_a` whenever `g_i = 1`, `i >= 1`. Its matrix `I + A` has the cyclic
/// shifts of `g` as columns.
pub fn digraph_from_polynomial(g: &Gf2Poly, n: usize) -> Result<Digraph> {
    if !g.coeff(0) {
        return Err(Error::BadGenerator);
    }
    let deg = g.degree().expect("constant term is set");
    if deg >= n {
        return Err(Error::BadParams(format!(
            "degree {deg} is not below n = {n}"
        )));
    }
    let shifts: Vec<usize> = g.exponents().into_iter().filter(|&i| i > 0).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| shifts.iter().map(move |&i| ((a + i) % n, a)))
        .collect();
    Digraph::from_edges(n, edges)
}

/// Every divisor of `x^n + 1`, by trial division over all polynomials with
/// constant term 1; ascending by bit mask.
pub fn divisors_xn1(n: usize) -> Result<Vec<Gf2Poly>> {
    if n == 0 || n > 24 {
        return Err(Error::BadParams(format!(
            "divisor enumeration needs 1 <= n <= 24, got {n}"
        )));
    }
    Ok((0..1u64 << n)
        .map(|m| Gf2Poly::from_mask(m << 1 | 1))
        .filter(|g| g.divides_xn1(n))
        .collect())
}

/// Outcome of checking one structural claim about a generated digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// Structural checks for the digraph generated by `g` on `n` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicReport {
    pub n: usize,
    pub generator: Gf2Poly,
    /// `g` divides `x^n + 1`; otherwise only the gcd lower bound is claimed.
    pub generates_code: bool,
    pub gcd: Gf2Poly,
    pub digraph: Digraph,
    pub structure: StructureReport,
    pub mas: Mas,
    /// Dimension of the parity-check protocol's fixed space.
    pub parity_dimension: usize,
    pub properties: Vec<PropertyCheck>,
}

impl CyclicReport {
    pub fn all_hold(&self) -> bool {
        self.properties.iter().all(|p| p.holds)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyCheck> {
        self.properties.iter().find(|p| p.name == name)
    }

    /// Lower bound on `g(D, 2)`: `deg g` for a generator, `deg gcd(g, x^n+1)`
    /// otherwise.
    pub fn guessing_lower(&self) -> usize {
        self.gcd.degree().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "g = {} (n = {}, degree {}, weight {})\n",
            self.generator,
            self.n,
            self.generator.degree().unwrap_or(0),
            self.generator.weight()
        );
        if self.generates_code {
            out.push_str("generates a cyclic code\n");
        } else {
            out.push_str(&format!(
                "does not divide x^{}+1; gcd = {}, so g >= {}\n",
                self.n,
                self.gcd,
                self.guessing_lower()
            ));
        }
        out.push_str(&format!(
            "mas = {}{}, parity-check dimension = {}\n",
            self.mas.size,
            if self.mas.exact { "" } else { " (best found)" },
            self.parity_dimension
        ));
        for p in &self.properties {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                if p.holds { "ok" } else { "FAIL" },
                p.name.replace('_', " "),
                p.detail
            ));
        }
        out
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

/// Builds the digraph and checks each claim twice where possible, from the
/// coefficients of `g` and from the digraph itself. For polynomials that do
/// not divide `x^n + 1`, the claims that need a cyclic code are replaced by
/// the gcd lower bound.
pub fn cyclic_code_report(g: &Gf2Poly, n: usize) -> Result<CyclicReport> {
    let d = digraph_from_polynomial(g, n)?;
    let generates_code = g.divides_xn1(n);
    let gcd = g.gcd(&Gf2Poly::xn1(n));
    let structure = structure_report(&d);
    let mas = mas_exact(&d, DEFAULT_MAS_BUDGET);
    let parity_dimension = parity_check_protocol(&d)?.dimension;
    let deg = g.degree().expect("constant term is set");
    let w = g.weight();
    let c = |i: usize| g.coeff(i);
    let mut properties = Vec::new();

    let in_deg = structure.min_in_degree;
    properties.push(PropertyCheck {
        name: "regular",
        holds: structure.regular_in_out && in_deg == w - 1,
        detail: format!("in- and out-degree {in_deg}, weight minus one {}", w - 1),
    });

    let coeff_unidirectional = (1..=n / 2).all(|i| !(c(i) && c(n - i)));
    let digraph_unidirectional = structure.bidirectional_edge_count == 0;
    properties.push(PropertyCheck {
        name: "no_bidirectional_edges",
        holds: coeff_unidirectional == digraph_unidirectional,
        detail: format!(
            "coefficients say {coeff_unidirectional}, digraph says {digraph_unidirectional}"
        ),
    });

    let coeff_tournament = (1..n).all(|i| c(i) != c(n - i));
    properties.push(PropertyCheck {
        name: "tournament",
        holds: coeff_tournament == structure.is_tournament,
        detail: format!(
            "coefficients say {coeff_tournament}, digraph says {}",
            structure.is_tournament
        ),
    });

    let exps: Vec<usize> = g.exponents().into_iter().filter(|&i| i > 0).collect();
    let coprime_pair = exps.iter().find_map(|&i| {
        exps.iter()
            .find(|&&j| gcd_usize(i, j) == 1)
            .map(|&j| (i, j))
    });
    properties.push(PropertyCheck {
        name: "strong",
        holds: coprime_pair.is_none() || structure.strong,
        detail: match coprime_pair {
            Some((i, j)) => format!("g_{i} g_{j} = 1 with gcd 1; strong = {}", structure.strong),
            None => format!(
                "no coprime pair of exponents; strong = {}",
                structure.strong
            ),
        },
    });

    let prefix: Vec<usize> = (0..n - deg).collect();
    let prefix_acyclic = d.is_acyclic_set(&prefix);
    properties.push(PropertyCheck {
        name: "acyclic_prefix",
        holds: prefix_acyclic && (!mas.exact || mas.size == n - deg),
        detail: format!(
            "first {} vertices acyclic = {prefix_acyclic}, mas = {}{}",
            n - deg,
            mas.size,
            if mas.exact { "" } else { " (best found)" }
        ),
    });

    properties.push(PropertyCheck {
        name: "guessing_number",
        holds: parity_dimension == deg && n - mas.size == deg,
        detail: format!(
            "parity-check dimension {parity_dimension}, n - mas = {}, degree {deg}",
            n - mas.size
        ),
    });

    if !generates_code {
        let lower = gcd.degree().unwrap_or(0);
        properties
            .retain(|p| matches!(p.name, "regular" | "no_bidirectional_edges" | "tournament"));
        properties.push(PropertyCheck {
            name: "gcd_lower_bound",
            holds: parity_dimension >= lower,
            detail: format!("parity-check dimension {parity_dimension} >= deg gcd = {lower}"),
        });
    }

    Ok(CyclicReport {
        n,
        generator: g.clone(),
        generates_code,
        gcd,
        digraph: d,
        structure,
        mas,
        parity_dimension,
        properties,
    })
}

/// Primitive polynomials of degree 2..=10 as bit masks.
const PRIMITIVE: [u64; 9] = [
    0b111,
    0b1011,
    0b10011,
    0b100101,
    0b1000011,
    0b10000011,
    0b100011101,
    0b1000010001,
    0b10000001001,
];

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// `p` of degree `l` is primitive: `x` has multiplicative order `2^l - 1`
/// modulo `p`. A reducible `p` has fewer than `2^l - 1` units, so this also
/// certifies irreducibility.
pub fn is_primitive(p: &Gf2Poly) -> bool {
    let Some(l) = p.degree().filter(|&l| (1..64).contains(&l)) else {
        return false;
    };
    let order = (1u64 << l) - 1;
    let x = Gf2Poly::monomial(1);
    let one = Gf2Poly::one();
    x.pow_mod(order, p).is_ok_and(|r| r == one)
        && prime_factors(order)
            .into_iter()
            .all(|q| x.pow_mod(order / q, p).is_ok_and(|r| r != one))
}

/// Generator of the binary simplex code of length `2^l - 1`, namely
/// `(x^n + 1) / p(x)` for a primitive `p` of degree `l`, and its digraph.
pub fn simplex_digraph(l: usize) -> Result<(Gf2Poly, Digraph)> {
    if !(2..=10).contains(&l) {
        return Err(Error::BadParams(format!(
            "simplex dimension must be in 2..=10, got {l}"
        )));
    }
    let p = Gf2Poly::from_mask(PRIMITIVE[l - 2]);
    if !is_primitive(&p) {
        return Err(Error::BadParams(format!(
            "table polynomial {p} is not primitive"
        )));
    }
    let n = (1usize << l) - 1;
    let (g, r) = Gf2Poly::xn1(n).divmod(&p)?;
    debug_assert!(r.is_zero());
    let d = digraph_from_polynomial(&g, n)?;
    Ok((g, d))
}

/// Polynomial families generating digraphs without bidirectional edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `(x^t + 1)(x^2 + x + 1)` on `n = 3t`, `t > 3`, `3` not dividing `t`.
    ThreeT { t: usize },
    /// `1 + x + ... + x^(p-1)` on `n = 2p`.
    EvenHalf { p: usize },
    /// `(x + 1) g^(2^l)` on `n = 2^l t`, for `g` dividing
    /// `1 + x + ... + x^(t-1)`.
    Doubling { g: Gf2Poly, t: usize, l: u32 },
}

/// `(x + 1) g^(2^l)`, checking that `g` divides `1 + x + ... + x^(t-1)`.
/// Returns the polynomial and `n = 2^l t`.
pub fn doubling_polynomial(g: &Gf2Poly, t: usize, l: u32) -> Result<(Gf2Poly, usize)> {
    if t < 2 || l == 0 || l > 16 {
        return Err(Error::BadParams(format!(
            "doubling needs t >= 2 and 1 <= l <= 16, got t = {t}, l = {l}"
        )));
    }
    let all_ones = Gf2Poly::xn1(t).divmod(&Gf2Poly::from_mask(0b11))?.0;
    if g.is_zero() || !all_ones.rem(g)?.is_zero() {
        return Err(Error::BadParams(format!(
            "{g} does not divide 1 + x + ... + x^{}",
            t - 1
        )));
    }
    let h = Gf2Poly::from_mask(0b11).mul(&g.pow(1 << l));
    Ok((h, t << l))
}

/// Builds a family member and verifies it generates a cyclic code whose
/// digraph has no bidirectional edges.
pub fn family_unidirectional(family: &Family) -> Result<(Gf2Poly, Digraph)> {
    let (poly, n) = match family {
        Family::ThreeT { t } => {
            let t = *t;
            if t <= 3 || t % 3 == 0 {
                return Err(Error::BadParams(format!(
                    "three_t needs t > 3 not divisible by 3, got {t}"
                )));
            }
            (Gf2Poly::xn1(t).mul(&Gf2Poly::from_mask(0b111)), 3 * t)
        }
        Family::EvenHalf { p } => {
            if *p < 2 {
                return Err(Error::BadParams(format!("even_half needs p >= 2, got {p}")));
            }
            (Gf2Poly::xn1(*p).divmod(&Gf2Poly::from_mask(0b11))?.0, 2 * p)
        }
        Family::Doubling { g, t, l } => doubling_polynomial(g, *t, *l)?,
    };
    if !poly.divides_xn1(n) {
        return Err(Error::BadParams(format!("{poly} does not divide x^{n}+1")));
    }
    let d = digraph_from_polynomial(&poly, n)?;
    if d.bidirectional_edge_count() > 0 {
        return Err(Error::BadParams(format!(
            "{poly} on {n} vertices gives {} bidirectional edges",
            d.bidirectional_edge_count()
        )));
    }
    Ok((poly, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, StandardKind};

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_generators() {
        assert_eq!(digraph_from_polynomial(&p("x+1"), 5).unwrap(), {
            // Edge from v_{a+1} to v_a: the cycle run backwards.
            Digraph::from_edges(5, (0..5).map(|a| ((a + 1) % 5, a))).unwrap()
        });
        let k4 = digraph_from_polynomial(&p("x^3+x^2+x+1"), 4).unwrap();
        assert_eq!(k4, standard(StandardKind::Clique(4)).unwrap());
        assert_eq!(digraph_from_polynomial(&p("1"), 4).unwrap().edge_count(), 0);
        assert_eq!(
            digraph_from_polynomial(&p("x^2+x"), 4),
            Err(Error::BadGenerator)
        );
        assert!(digraph_from_polynomial(&p("x^4+1"), 4).is_err());
    }

    #[test]
    fn paley_tournament() {
        let r = cyclic_code_report(&p("x^4+x^2+x+1"), 7).unwrap();
        assert!(r.all_hold(), "{}", r.to_text());
        assert!(r.structure.is_tournament && r.structure.strong);
        assert_eq!((r.mas.size, r.parity_dimension), (3, 4));
    }

    #[test]
    fn simplex() {
        let (g, d) = simplex_digraph(3).unwrap();
        assert_eq!(g, p("x^4+x^2+x+1"));
        assert_eq!(d.min_in_degree(), 3);
        let (g, d) = simplex_digraph(2).unwrap();
        assert_eq!(g, p("x+1"));
        assert_eq!(d.edge_count(), 3);
        for l in 2..=10 {
            assert!(
                is_primitive(&Gf2Poly::from_mask(PRIMITIVE[l - 2])),
                "degree {l}"
            );
        }
        assert!(!is_primitive(&p("x^4+x^3+x^2+x+1")));
        assert!(simplex_digraph(11).is_err());
    }

    #[test]
    fn families() {
        let (g, d) = family_unidirectional(&Family::ThreeT { t: 5 }).unwrap();
        assert_eq!(g, p("x^7+x^6+x^5+x^2+x+1"));
        assert_eq!((d.n(), d.min_in_degree(), d.max_in_degree()), (15, 5, 5));
        assert!(family_unidirectional(&Family::ThreeT { t: 4 }).is_err());
        let (_, d) = family_unidirectional(&Family::EvenHalf { p: 5 }).unwrap();
        assert_eq!((d.n(), d.min_in_degree()), (10, 4));
        let (h, n) = doubling_polynomial(&p("x^2+x+1"), 3, 1).unwrap();
        assert_eq!((h.clone(), n), (p("x+1").mul(&p("x^4+x^2+1")), 6));
        assert_eq!((h.degree(), h.weight()), (Some(5), 6));
        assert!(doubling_polynomial(&p("x^2+1"), 3, 1).is_err());
    }

    #[test]
    fn divisor_count() {
        // x^7 + 1 = (x + 1)(x^3 + x + 1)(x^3 + x^2 + 1).
        assert_eq!(divisors_xn1(7).unwrap().len(), 8);
    }
}
