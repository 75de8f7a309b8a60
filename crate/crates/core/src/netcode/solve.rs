//! Solvability through the guessing number of the merged digraph.

use std::fmt::Write as _;

use crate::config::ConfigSpace;
use crate::error::{guard_pow, Error, Result};
use crate::guessing_graph::DENSE_LIMIT;
use crate::solvers::{
    bounds_report, exact_power, guessing_number, information_defect, Protocol, SolveOptions,
    Target, BOUND_TOLERANCE,
};

use super::instance::{to_guessing_digraph, GuessingForm, NetworkInstance, Role};

/// Largest `s^n` for which certificates are checked by simulation.
pub const SIMULATION_GUARD: u64 = 1 << 16;

/// The function a node applies to the messages on its incoming edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeFunction {
    pub node: usize,
    /// Sending nodes, least significant digit first.
    pub inputs: Vec<usize>,
    pub table: Vec<u64>,
}

impl NodeFunction {
    fn eval(&self, s: u64, values: &[u64]) -> u64 {
        let idx = self
            .inputs
            .iter()
            .rev()
            .fold(0u64, |acc, &u| acc * s + values[u]);
        self.table[idx as usize]
    }

    /// `Some(c)` when the table is `sum_k c_k y_k mod s`.
    pub fn as_linear(&self, s: u64) -> Option<Vec<u64>> {
        let space = ConfigSpace::new(self.inputs.len(), s).ok()?;
        let coeffs: Vec<u64> = (0..self.inputs.len())
            .map(|k| self.table[s.pow(k as u32) as usize])
            .collect();
        let linear = (0..space.size()).all(|w| {
            let digits = space.digits(w);
            let sum = digits
                .iter()
                .zip(&coeffs)
                .fold(0, |acc, (x, c)| (acc + x * c) % s);
            self.table[w as usize] == sum
        });
        linear.then_some(coeffs)
    }
}

/// Coding functions for every intermediate (in topological order) and
/// decoding functions for every sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub s: u64,
    pub functions: Vec<NodeFunction>,
}

impl Certificate {
    /// Builds the certificate from a protocol on the merged digraph: each
    /// intermediate sends its guess, each sink outputs its pair's guess.
    pub fn from_protocol(
        inst: &NetworkInstance,
        form: &GuessingForm,
        protocol: &Protocol,
    ) -> Result<Self> {
        let order = inst
            .topological_order()
            .ok_or_else(|| Error::InvalidInstance("network has a directed cycle".into()))?;
        let mut functions = Vec::new();
        let n = inst.pair_count();
        for &node in order
            .iter()
            .filter(|&&v| matches!(inst.role(v), Role::Intermediate(_)))
        {
            let Role::Intermediate(j) = inst.role(node) else {
                unreachable!()
            };
            functions.push(node_function(inst, form, protocol, node, n + j));
        }
        for (i, &t) in inst.sinks().iter().enumerate() {
            functions.push(node_function(inst, form, protocol, t, i));
        }
        Ok(Certificate {
            s: protocol.s(),
            functions,
        })
    }

    /// Decoded message at each sink when the sources send `messages`.
    pub fn simulate(&self, inst: &NetworkInstance, messages: &[u64]) -> Vec<u64> {
        let mut values = vec![0u64; inst.node_count()];
        for (i, &src) in inst.sources().iter().enumerate() {
            values[src] = messages[i];
        }
        for f in &self.functions {
            values[f.node] = f.eval(self.s, &values);
        }
        inst.sinks().iter().map(|&t| values[t]).collect()
    }

    /// Runs every choice of source messages; `Ok(false)` if some sink
    /// decodes wrongly. Fails when `s^n` exceeds `guard`.
    pub fn verify(&self, inst: &NetworkInstance, guard: u64) -> Result<bool> {
        let n = inst.pair_count();
        guard_pow("certificate simulation", self.s, n as u32, guard)?;
        let space = ConfigSpace::new(n, self.s)?;
        Ok((0..space.size()).all(|x| {
            let msgs = space.digits(x);
            self.simulate(inst, &msgs) == msgs
        }))
    }

    /// The same code over `[s^k]`, applied to each base-`s` digit of the
    /// symbols separately.
    pub fn lift_power(&self, k: u32) -> Result<Certificate> {
        let s = self.s;
        let big = guard_pow("lifted alphabet", s, k, u32::MAX as u64)?;
        let functions = self
            .functions
            .iter()
            .map(|f| {
                let arity = f.inputs.len();
                let words = ConfigSpace::new(arity, big)?;
                let size = guard_pow("lifted table", big, arity as u32, 1 << 24)?;
                let table = (0..size)
                    .map(|w| {
                        let symbols = words.digits(w);
                        (0..k).fold(0u64, |acc, j| {
                            let place = s.pow(j);
                            let idx = symbols
                                .iter()
                                .rev()
                                .fold(0u64, |a, &y| a * s + (y / place) % s);
                            acc + f.table[idx as usize] * place
                        })
                    })
                    .collect();
                Ok(NodeFunction {
                    node: f.node,
                    inputs: f.inputs.clone(),
                    table,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate { s: big, functions })
    }

    /// Who sends what, one line per node.
    pub fn narrative(&self, inst: &NetworkInstance) -> String {
        let mut out = String::new();
        for f in &self.functions {
            let verb = match inst.role(f.node) {
                Role::Sink(_) => "decodes",
                _ => "sends",
            };
            let expr = match f.as_linear(self.s) {
                Some(c) => linear_text(inst, &f.inputs, &c, self.s),
                None => format!(
                    "a table over ({})",
                    f.inputs
                        .iter()
                        .map(|&u| inst.name(u))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            };
            let _ = writeln!(out, "{} {verb} {expr}", inst.name(f.node));
        }
        out
    }

    /// One line per node: `name <- inputs : table`.
    pub fn to_text(&self, inst: &NetworkInstance) -> String {
        let mut out = format!("alphabet {}\n", self.s);
        for f in &self.functions {
            let inputs: Vec<&str> = f.inputs.iter().map(|&u| inst.name(u)).collect();
            let table: Vec<String> = f.table.iter().map(u64::to_string).collect();
            let _ = writeln!(
                out,
                "{} <- [{}] : {}",
                inst.name(f.node),
                inputs.join(" "),
                table.join(" ")
            );
        }
        out
    }
}

fn linear_text(inst: &NetworkInstance, inputs: &[usize], coeffs: &[u64], s: u64) -> String {
    let terms: Vec<String> = inputs
        .iter()
        .zip(coeffs)
        .filter(|(_, &c)| c != 0)
        .map(|(&u, &c)| {
            if c == 1 {
                inst.name(u).to_string()
            } else {
                format!("{c}*{}", inst.name(u))
            }
        })
        .collect();
    match terms.len() {
        0 => "0".into(),
        1 => terms[0].clone(),
        _ => format!("{} (mod {s})", terms.join(" + ")),
    }
}

fn node_function(
    inst: &NetworkInstance,
    form: &GuessingForm,
    protocol: &Protocol,
    node: usize,
    vertex: usize,
) -> NodeFunction {
    let inputs: Vec<usize> = protocol
        .inputs(vertex)
        .iter()
        .map(|&u| form.sender(inst, u))
        .collect();
    debug_assert!(inputs.iter().all(|u| inst.in_neighbors(node).contains(u)));
    NodeFunction {
        node,
        inputs,
        table: protocol.table(vertex).to_vec(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Solvable,
    Unsolvable,
    /// The search ran out of budget before settling the question.
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solvability {
    pub verdict: Verdict,
    pub s: u64,
    pub pairs: usize,
    pub intermediates: usize,
    /// Fixed configurations found on the merged digraph; 0 when the search
    /// was skipped.
    pub alpha: u64,
    pub g: f64,
    pub certificate: Option<Certificate>,
    /// Outcome of simulating the certificate, when affordable.
    pub verified: Option<bool>,
    /// Why the instance is not solvable, or what is left open.
    pub reason: Option<String>,
    /// Whether `b(D, s)` equals the number of intermediates, when computed.
    pub defect_matches: Option<bool>,
}

/// Solvable over `[s]` exactly when the merged digraph has guessing number
/// equal to the number of pairs.
pub fn solvable(inst: &NetworkInstance, s: u64, opts: &SolveOptions) -> Result<Solvability> {
    let form = to_guessing_digraph(inst)?;
    let n = inst.pair_count();
    let m = inst.intermediate_count();
    let mut out = Solvability {
        verdict: Verdict::Unknown,
        s,
        pairs: n,
        intermediates: m,
        alpha: 0,
        g: 0.0,
        certificate: None,
        verified: None,
        reason: None,
        defect_matches: None,
    };
    let cut = inst.disconnected_pairs();
    if !cut.is_empty() {
        let names: Vec<String> = cut
            .iter()
            .map(|&i| {
                format!(
                    "{} -> {}",
                    inst.name(inst.sources()[i]),
                    inst.name(inst.sinks()[i])
                )
            })
            .collect();
        out.verdict = Verdict::Unsolvable;
        out.reason = Some(format!("no path for {}", names.join(", ")));
        return Ok(out);
    }
    let target = guard_pow("configurations of the pairs", s, n as u32, u64::MAX)?;
    let gn = guessing_number(&form.digraph, s, opts)?;
    assert!(
        gn.alpha <= target,
        "guessing number above the number of pairs"
    );
    out.alpha = gn.alpha;
    out.g = gn.g();
    if gn.alpha == target {
        out.verdict = Verdict::Solvable;
        let cert = Certificate::from_protocol(inst, &form, &gn.protocol)?;
        out.verified = match cert.verify(inst, SIMULATION_GUARD) {
            Ok(ok) => Some(ok),
            Err(e) if e.is_size_guard() => None,
            Err(e) => return Err(e),
        };
        out.certificate = Some(cert);
    } else {
        let report = bounds_report(&form.digraph, s);
        let binding = report.binding_upper(Target::Guessing);
        match binding {
            Some(b) if b.value < n as f64 - BOUND_TOLERANCE => {
                out.verdict = Verdict::Unsolvable;
                out.reason = Some(format!(
                    "g <= {:.4} < {n} by the {} bound",
                    b.value,
                    b.name.replace('_', " ")
                ));
            }
            _ if gn.exact => {
                out.verdict = Verdict::Unsolvable;
                out.reason = Some(format!("exhaustive search: alpha = {} < {s}^{n}", gn.alpha));
            }
            _ => {
                out.reason = Some(format!(
                    "best found alpha = {} < {s}^{n}; search budget exhausted",
                    gn.alpha
                ));
            }
        }
    }
    if guard_pow("defect check", s, (n + m) as u32, DENSE_LIMIT).is_ok() {
        let def = information_defect(&form.digraph, s, opts)?;
        if def.exact {
            out.defect_matches = Some(exact_power(def.chi, s) == Some(m as u32));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netcode::instance::{bottleneck, butterfly};

    #[test]
    fn butterfly_sends_the_sum() {
        let inst = butterfly();
        let r = solvable(&inst, 2, &SolveOptions::default()).unwrap();
        assert_eq!(
            (r.verdict, r.verified, r.defect_matches),
            (Verdict::Solvable, Some(true), Some(true))
        );
        let cert = r.certificate.unwrap();
        let z = cert
            .functions
            .iter()
            .find(|f| inst.name(f.node) == "z")
            .unwrap();
        assert_eq!(z.table, vec![0, 1, 1, 0]);
        assert!(cert.narrative(&inst).contains("z sends s1 + s2 (mod 2)"));
        let lifted = cert.lift_power(2).unwrap();
        assert_eq!(lifted.s, 4);
        assert!(lifted.verify(&inst, SIMULATION_GUARD).unwrap());
    }

    #[test]
    fn bottleneck_needs_enough_intermediates() {
        for s in 2..=3 {
            let r = solvable(&bottleneck(3, 2).unwrap(), s, &SolveOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Unsolvable);
            assert!((r.g - 2.0).abs() < 1e-9);
        }
        let r = solvable(&bottleneck(2, 2).unwrap(), 2, &SolveOptions::default()).unwrap();
        assert_eq!((r.verdict, r.verified), (Verdict::Solvable, Some(true)));
    }

    #[test]
    fn unreachable_sink() {
        let inst = NetworkInstance::from_names(
            &[("s1", "t1"), ("s2", "t2")],
            &["z"],
            &[("s1", "z"), ("z", "t2")],
        )
        .unwrap();
        let r = solvable(&inst, 2, &SolveOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Unsolvable);
        assert!(r.reason.unwrap().contains("s2 -> t2"));
    }
}
