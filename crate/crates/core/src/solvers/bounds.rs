//! Structural bounds on `g`, `g_linear` and `b`, without touching the
//! guessing graph.

use std::fmt::Write as _;

use crate::digraph::{
    clique_partition_number, girth, mas_exact, strong_components, Digraph, Girth, Mas,
    DEFAULT_MAS_BUDGET,
};
use crate::gf_linear::{
    in_degree_linear_uppers, is_prime, linear_guessing_number, parity_check_protocol,
};
use crate::guessing_graph::degree_closed_form;

use super::codes::{code_bounds, is_prime_power, CODE_GUARD};
use super::solve::log_base;

const REPORT_LINEAR_BUDGET: u64 = 1 << 18;
const REPORT_PARTITION_BUDGET: u64 = 1 << 20;
/// Largest `n` for which the guessing graph degree is computed exactly.
const EXACT_DEGREE_MAX_N: usize = 24;
/// Slack allowed when comparing bounds.
pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// `g(D, s)`.
    Guessing,
    /// `g_linear(D, s)` over GF(s), `s` prime.
    Linear,
    /// `b(D, s)`.
    Defect,
}

impl Target {
    pub fn key(self) -> &'static str {
        match self {
            Target::Guessing => "g",
            Target::Linear => "g_linear",
            Target::Defect => "b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bound {
    pub target: Target,
    pub side: Side,
    pub name: &'static str,
    pub value: f64,
}

/// A bound that does not apply to this digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Omitted {
    pub target: Target,
    pub name: &'static str,
    pub reason: String,
}

/// One strong component and its share of the acyclic-set upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBound {
    pub vertices: Vec<usize>,
    pub mas: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub s: u64,
    pub mas: Mas,
    /// `log_s` of the clique number of the guessing graph is at least this.
    pub clique_lb: f64,
    pub min_in_degree: usize,
    pub girth: Girth,
    /// Degree of the guessing graph when computed exactly.
    pub degree: Option<u64>,
    /// Clique partition size used for the partition bound.
    pub clique_partition: usize,
    pub bounds: Vec<Bound>,
    pub omitted: Vec<Omitted>,
    /// The guessing number is the sum over these components.
    pub components: Vec<ComponentBound>,
}

impl BoundsReport {
    /// Lower bounds below zero say nothing and are raised to zero.
    fn push(&mut self, target: Target, side: Side, name: &'static str, value: f64) {
        let value = if side == Side::Lower {
            value.max(0.0)
        } else {
            value
        };
        self.bounds.push(Bound {
            target,
            side,
            name,
            value,
        });
    }

    fn omit(&mut self, target: Target, name: &'static str, reason: impl Into<String>) {
        self.omitted.push(Omitted {
            target,
            name,
            reason: reason.into(),
        });
    }

    pub fn get(&self, target: Target, side: Side, name: &str) -> Option<f64> {
        self.bounds
            .iter()
            .find(|b| b.target == target && b.side == side && b.name == name)
            .map(|b| b.value)
    }

    /// Bounds that apply to `target`, including those inherited through
    /// `g_linear <= g`.
    fn applicable(&self, target: Target, side: Side) -> impl Iterator<Item = &Bound> {
        self.bounds.iter().filter(move |b| {
            b.side == side
                && (b.target == target
                    || (target == Target::Guessing
                        && b.target == Target::Linear
                        && side == Side::Lower)
                    || (target == Target::Linear
                        && b.target == Target::Guessing
                        && side == Side::Upper))
        })
    }

    /// Largest lower bound on `target` (0 if none).
    pub fn best_lower(&self, target: Target) -> f64 {
        self.applicable(target, Side::Lower)
            .map(|b| b.value)
            .fold(0.0, f64::max)
    }

    /// Smallest upper bound on `target` (`n` if none).
    pub fn best_upper(&self, target: Target) -> f64 {
        self.applicable(target, Side::Upper)
            .map(|b| b.value)
            .fold(self.n as f64, f64::min)
    }

    /// The upper bound on `target` attaining [`BoundsReport::best_upper`].
    pub fn binding_upper(&self, target: Target) -> Option<&Bound> {
        self.applicable(target, Side::Upper)
            .min_by(|a, b| a.value.total_cmp(&b.value))
    }

    /// Every pair of a lower and an upper bound that cross.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for target in [Target::Guessing, Target::Linear, Target::Defect] {
            for lo in self.applicable(target, Side::Lower) {
                for hi in self.applicable(target, Side::Upper) {
                    if lo.value > hi.value + BOUND_TOLERANCE {
                        out.push(format!(
                            "{}: lower {} = {:.6} exceeds upper {} = {:.6}",
                            target.key(),
                            lo.name,
                            lo.value,
                            hi.name,
                            hi.value
                        ));
                    }
                }
            }
        }
        out
    }

    /// Bounds on `target` that the true value `value` breaks.
    pub fn check_value(&self, target: Target, value: f64) -> Vec<String> {
        let mut out = Vec::new();
        for b in self.applicable(target, Side::Lower) {
            if b.value > value + BOUND_TOLERANCE {
                out.push(format!(
                    "{}: lower {} = {:.6} > {value:.6}",
                    target.key(),
                    b.name,
                    b.value
                ));
            }
        }
        for b in self.applicable(target, Side::Upper) {
            if b.value < value - BOUND_TOLERANCE {
                out.push(format!(
                    "{}: upper {} = {:.6} < {value:.6}",
                    target.key(),
                    b.name,
                    b.value
                ));
            }
        }
        out
    }

    /// Adds the bounds that need the independence number of the guessing
    /// graph: `b <= n - g + log_s(1 + ln alpha)` for the vertex-transitive
    /// guessing graph.
    pub fn add_alpha(&mut self, alpha: u64) {
        let g = log_base(alpha as f64, self.s);
        self.push(
            Target::Defect,
            Side::Upper,
            "greedy_cover",
            self.n as f64 - g + log_base(1.0 + (alpha as f64).ln(), self.s),
        );
        self.push(Target::Defect, Side::Lower, "fractional", self.n as f64 - g);
    }

    /// Human-readable report.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n = {}, s = {}", self.n, self.s);
        let _ = writeln!(
            out,
            "mas = {}{}, girth = {}, min in-degree = {}",
            self.mas.size,
            if self.mas.exact { "" } else { " (best found)" },
            self.girth,
            self.min_in_degree
        );
        if let Some(d) = self.degree {
            let _ = writeln!(out, "guessing graph degree = {d}");
        }
        for target in [Target::Guessing, Target::Linear, Target::Defect] {
            let here: Vec<&Bound> = self.bounds.iter().filter(|b| b.target == target).collect();
            if here.is_empty() {
                continue;
            }
            let _ = writeln!(
                out,
                "{}: {:.4} <= {} <= {:.4}",
                target.key(),
                self.best_lower(target),
                target.key(),
                self.best_upper(target)
            );
            for b in here {
                let rel = if b.side == Side::Lower { ">=" } else { "<=" };
                let _ = writeln!(
                    out,
                    "  {} {rel} {:.4}  ({})",
                    target.key(),
                    b.value,
                    b.name.replace('_', " ")
                );
            }
        }
        for o in &self.omitted {
            let _ = writeln!(
                out,
                "  omitted {} {}: {}",
                o.target.key(),
                o.name.replace('_', " "),
                o.reason
            );
        }
        if self.components.len() > 1 {
            let _ = writeln!(out, "strong components (g is their sum):");
            for c in &self.components {
                let _ = writeln!(out, "  {:?}: mas {}, g <= {}", c.vertices, c.mas, c.upper);
            }
        }
        out
    }

    /// One `key=value` per line; bounds are keyed `<target>.<side>.<name>`.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "s={}", self.s);
        let _ = writeln!(out, "mas={}", self.mas.size);
        let _ = writeln!(out, "mas_exact={}", self.mas.exact);
        let _ = writeln!(out, "girth={}", self.girth);
        let _ = writeln!(out, "min_in_degree={}", self.min_in_degree);
        if let Some(d) = self.degree {
            let _ = writeln!(out, "degree={d}");
        }
        let _ = writeln!(out, "components={}", self.components.len());
        for b in &self.bounds {
            let side = if b.side == Side::Lower {
                "lower"
            } else {
                "upper"
            };
            let _ = writeln!(out, "{}.{side}.{}={}", b.target.key(), b.name, b.value);
        }
        for o in &self.omitted {
            let _ = writeln!(out, "{}.omitted.{}={}", o.target.key(), o.name, o.reason);
        }
        out
    }
}

/// Every structural bound that applies to `(D, s)`; the ones that do not
/// are listed with a reason.
pub fn bounds_report(d: &Digraph, s: u64) -> BoundsReport {
    assert!(s >= 2, "alphabet size must be at least 2");
    let n = d.n();
    let nf = n as f64;
    let mas = mas_exact(d, DEFAULT_MAS_BUDGET);
    let gamma = girth(d);
    let delta = d.min_in_degree();
    let cond = strong_components(d);
    let components: Vec<ComponentBound> = cond
        .components
        .iter()
        .map(|c| {
            let m = mas_exact(&d.induced(c), DEFAULT_MAS_BUDGET).size;
            ComponentBound {
                vertices: c.clone(),
                mas: m,
                upper: c.len() - m,
            }
        })
        .collect();
    let partition = clique_partition_number(d, REPORT_PARTITION_BUDGET);
    let acyclic = gamma == Girth::Acyclic;
    let degree = if n <= EXACT_DEGREE_MAX_N {
        degree_closed_form(d, s).ok()
    } else {
        None
    };
    let mut r = BoundsReport {
        n,
        s,
        clique_lb: mas.size as f64,
        mas,
        min_in_degree: delta,
        girth: gamma,
        degree,
        clique_partition: partition.count,
        bounds: Vec::new(),
        omitted: Vec::new(),
        components,
    };
    use Side::{Lower, Upper};
    use Target::{Defect, Guessing, Linear};

    // Guessing number, from above.
    r.push(Guessing, Upper, "acyclic_set", nf - r.mas.size as f64);
    r.push(
        Guessing,
        Upper,
        "strong_components",
        nf - r.components.len() as f64,
    );
    if d.bidirectional_edge_count() == 0 {
        r.push(
            Guessing,
            Upper,
            "sphere_packing",
            nf - log_base((s - 1) as f64 * nf + 1.0, s),
        );
    } else {
        r.omit(
            Guessing,
            "sphere_packing",
            "digraph has bidirectional edges",
        );
    }
    match gamma {
        Girth::Acyclic => r.push(Guessing, Upper, "girth_code", 0.0),
        Girth::Cycle(len) => {
            let code = code_bounds(n, len, s, CODE_GUARD);
            r.push(
                Guessing,
                Upper,
                "girth_code",
                log_base(code.upper as f64, s),
            );
        }
    }

    // Guessing number, from below.
    let code = code_bounds(n, n + 1 - delta, s, CODE_GUARD);
    r.push(
        Guessing,
        Lower,
        "in_degree_code",
        log_base(code.lower as f64, s),
    );
    let mds = is_prime_power(s)
        && (s + 1 >= n as u64
            || (s.is_power_of_two() && n as u64 == s + 2 && (delta == 4 || delta as u64 == s)));
    if mds {
        r.push(Guessing, Lower, "mds_code", delta as f64);
    }
    // Upper bound on the guessing graph degree; the bounds below weaken
    // as the degree grows, so an upper estimate keeps them valid.
    let degree_est = match r.degree {
        Some(x) => x as f64,
        None => nf * (s as f64).powi((n - delta) as i32) - 1.0,
    };
    if acyclic {
        r.omit(Guessing, "connectivity", "digraph is acyclic");
        r.omit(Guessing, "min_in_degree", "digraph is acyclic");
    } else {
        let inner = 1.0 - (1.0 - 4.0 / (3.0 * (degree_est + 1.0))).sqrt();
        r.push(
            Guessing,
            Lower,
            "connectivity",
            nf + log_base(1.5, s) + log_base(inner, s),
        );
        r.push(
            Guessing,
            Lower,
            "min_in_degree",
            delta as f64 - log_base(nf, s),
        );
    }
    r.push(
        Guessing,
        Lower,
        "degree",
        nf - log_base(degree_est + 1.0, s),
    );

    // Linear guessing number.
    let partition_lower = nf - partition.count as f64;
    if is_prime(s) {
        r.push(Linear, Lower, "clique_partition", partition_lower);
        if s == 2 {
            let pc = parity_check_protocol(d).expect("GF(2) is a field");
            r.push(Linear, Lower, "parity_check", pc.dimension as f64);
        }
        match linear_guessing_number(d, s, REPORT_LINEAR_BUDGET) {
            Ok(lin) => {
                r.push(Linear, Lower, "linear_search", lin.lower as f64);
                r.push(Linear, Upper, "linear_search", lin.upper as f64);
            }
            Err(e) => r.omit(Linear, "linear_search", e.to_string()),
        }
        let (by_min, by_max) = in_degree_linear_uppers(d, s);
        match by_min {
            Some(v) => r.push(Linear, Upper, "min_in_degree_linear", v as f64),
            None => r.omit(
                Linear,
                "min_in_degree_linear",
                "digraph has bidirectional edges",
            ),
        }
        match by_max {
            Some(v) => r.push(Linear, Upper, "max_in_degree_linear", v as f64),
            None => r.omit(
                Linear,
                "max_in_degree_linear",
                "needs no bidirectional edges and n - max in-degree - e >= 1",
            ),
        }
    } else {
        r.push(Guessing, Lower, "clique_partition", partition_lower);
        r.omit(
            Linear,
            "linear_search",
            format!("alphabet {s} is not a prime field"),
        );
    }

    // Information defect.
    r.push(Defect, Lower, "acyclic_set", r.mas.size as f64);
    let g_upper = r.best_upper(Guessing);
    r.push(Defect, Lower, "guessing_complement", nf - g_upper);
    r.push(Defect, Upper, "trivial", nf);
    if acyclic {
        r.omit(Defect, "degree", "digraph is acyclic");
    } else {
        r.push(Defect, Upper, "degree", log_base(degree_est, s));
        r.push(
            Defect,
            Upper,
            "in_degree",
            nf - delta as f64 + log_base(nf, s),
        );
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, StandardKind};

    #[test]
    fn cycle_three_binary() {
        let c3 = standard(StandardKind::Cycle(3)).unwrap();
        let r = bounds_report(&c3, 2);
        assert!(r.violations().is_empty(), "{:?}", r.violations());
        assert_eq!(
            r.get(Target::Guessing, Side::Upper, "acyclic_set"),
            Some(1.0)
        );
        assert_eq!(
            r.get(Target::Linear, Side::Lower, "parity_check"),
            Some(1.0)
        );
        assert_eq!(r.degree, Some(6));
        assert!(r.check_value(Target::Guessing, 1.0).is_empty());
        assert!(!r.check_value(Target::Guessing, 2.0).is_empty());
    }

    #[test]
    fn bipartite_is_pinched() {
        let d = standard(StandardKind::CompleteBipartite(2, 3)).unwrap();
        let r = bounds_report(&d, 3);
        assert!((r.best_lower(Target::Guessing) - 2.0).abs() < 1e-12);
        assert!((r.best_upper(Target::Guessing) - 2.0).abs() < 1e-12);
        assert!(r.omitted.iter().any(|o| o.name == "sphere_packing"));
    }

    #[test]
    fn acyclic_bounds() {
        let p = standard(StandardKind::Path(4)).unwrap();
        let r = bounds_report(&p, 2);
        assert_eq!(r.best_upper(Target::Guessing), 0.0);
        assert_eq!(r.best_lower(Target::Defect), 4.0);
        assert!(r.violations().is_empty());
    }
}
