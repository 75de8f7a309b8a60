use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;

use guessgraph_core::cyclic::{
    cyclic_code_report, family_unidirectional, simplex_digraph, Family, Gf2Poly,
};
use guessgraph_core::digraph::{
    linked_cycle_powers, mas_exact, parse_digraph, structure_report, to_dot, union, write_digraph,
    UnionKind,
};
use guessgraph_core::gf_linear::{is_prime, linear_guessing_number, write_matrix};
use guessgraph_core::netcode::{
    from_digraph, parse_instance, solvable, to_guessing_digraph, write_instance, Provenance,
    Verdict,
};
use guessgraph_core::solvers::bounds_report;
use guessgraph_core::{
    guessing_number, information_defect, ConfigSpace, Digraph, Error, GuessingGraph, SolveOptions,
};

use crate::{Cli, Command, FamilyArg, Output, UnionArg};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_size_guard() { 3 } else { 4 },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 4,
        message: message.into(),
    }
}

/// Key/value records plus the human rendering of the same result.
#[derive(Default)]
struct Reply {
    records: Vec<(String, String)>,
    human: String,
}

impl Reply {
    fn put(&mut self, key: &str, value: impl ToString) {
        self.records.push((key.to_string(), value.to_string()));
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.human.push_str(text.as_ref());
        self.human.push('\n');
    }

    fn render(self, machine: bool) -> String {
        if machine {
            self.records
                .iter()
                .map(|(k, v)| format!("{k}={v}\n"))
                .collect()
        } else {
            self.human
        }
    }
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| invalid(format!("standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))
}

fn write_text(path: &str, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| invalid(format!("{path}: {e}")))
}

fn read_digraph(path: &str) -> Result<Digraph, Failure> {
    parse_digraph(&read_text(path)?).map_err(|e| invalid(format!("{path}: {e}")))
}

fn check_alphabet(s: u64) -> Result<(), Failure> {
    if s < 2 {
        return Err(invalid(format!(
            "alphabet size must be at least 2, got {s}"
        )));
    }
    Ok(())
}

/// Writes a generated digraph to `--output`, or appends it to the human
/// output when there is none.
fn emit_digraph(cli: &Cli, d: &Digraph, out: &Output, reply: &mut Reply) -> Result<(), Failure> {
    let text = if cli.dot { to_dot(d) } else { write_digraph(d) };
    reply.put("vertices", d.n());
    reply.put("edges", d.edge_count());
    match &out.output {
        Some(path) => {
            write_text(path, &text)?;
            reply.put("digraph", path);
            reply.line(format!(
                "wrote {path} ({} vertices, {} edges)",
                d.n(),
                d.edge_count()
            ));
        }
        None => reply.human.push_str(&text),
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    if cli.workers == 0 {
        return Err(usage("--workers must be at least 1"));
    }
    let reply = match &cli.command {
        Command::Guess {
            digraph,
            alphabet,
            budget,
            guard,
            witness,
        } => guess(digraph, alphabet.s, *budget, *guard, witness.as_deref())?,
        Command::Defect {
            digraph,
            alphabet,
            budget,
            guard,
        } => defect(digraph, alphabet.s, *budget, *guard)?,
        Command::Linear { digraph, p, budget } => linear(digraph, *p, *budget)?,
        Command::Bounds { digraph, alphabet } => {
            check_alphabet(alphabet.s)?;
            let report = bounds_report(&read_digraph(digraph)?, alphabet.s);
            return Ok(if cli.machine {
                report.to_key_values()
            } else {
                report.to_text()
            });
        }
        Command::Mas { digraph, budget } => {
            let m = mas_exact(&read_digraph(digraph)?, *budget);
            let mut r = Reply::default();
            let witness = join(&m.witness);
            r.put("mas", m.size);
            r.put("exact", m.exact);
            r.put("witness", &witness);
            r.line(format!(
                "mas={}{}",
                m.size,
                if m.exact { "" } else { " (best found)" }
            ));
            r.line(format!("witness={witness}"));
            r
        }
        Command::Report { digraph, alphabet } => report(digraph, alphabet.s)?,
        Command::CyclicGen { poly, n, out } => {
            let g: Gf2Poly = poly.parse()?;
            let rep = cyclic_code_report(&g, *n)?;
            let mut r = Reply::default();
            r.put("generator", &rep.generator);
            r.put("n", rep.n);
            r.put("generates_code", rep.generates_code);
            r.put("gcd", &rep.gcd);
            r.put("mas", rep.mas.size);
            r.put("parity_dimension", rep.parity_dimension);
            for p in &rep.properties {
                r.put(&format!("property.{}", p.name), p.holds);
            }
            emit_digraph(cli, &rep.digraph, out, &mut r)?;
            r.human.push_str(&rep.to_text());
            r
        }
        Command::Simplex { l, out } => {
            let (g, d) = simplex_digraph(*l)?;
            let mut r = Reply::default();
            r.put("generator", &g);
            r.line(format!("# generated by {g} on {} vertices", d.n()));
            emit_digraph(cli, &d, out, &mut r)?;
            r
        }
        Command::Family {
            kind,
            t,
            p,
            poly,
            l,
            out,
        } => {
            let family = match kind {
                FamilyArg::ThreeT => Family::ThreeT {
                    t: t.ok_or_else(|| usage("three-t needs --t"))?,
                },
                FamilyArg::EvenHalf => Family::EvenHalf {
                    p: p.ok_or_else(|| usage("even-half needs --p"))?,
                },
                FamilyArg::Doubling => Family::Doubling {
                    g: poly
                        .as_deref()
                        .ok_or_else(|| usage("doubling needs --poly"))?
                        .parse()?,
                    t: t.ok_or_else(|| usage("doubling needs --t"))?,
                    l: l.ok_or_else(|| usage("doubling needs --l"))?,
                },
            };
            let (g, d) = family_unidirectional(&family)?;
            let mut r = Reply::default();
            r.put("generator", &g);
            r.line(format!("# generated by {g} on {} vertices", d.n()));
            emit_digraph(cli, &d, out, &mut r)?;
            r
        }
        Command::Product { first, second, out } => {
            let d = read_digraph(first)?.strong_product(&read_digraph(second)?);
            let mut r = Reply::default();
            emit_digraph(cli, &d, out, &mut r)?;
            r
        }
        Command::Union {
            kind,
            first,
            second,
            out,
        } => {
            let kind = match kind {
                UnionArg::Disjoint => UnionKind::Disjoint,
                UnionArg::Unidirectional => UnionKind::Unidirectional,
                UnionArg::Bidirectional => UnionKind::Bidirectional,
            };
            let d = union(kind, &read_digraph(first)?, &read_digraph(second)?);
            let mut r = Reply::default();
            emit_digraph(cli, &d, out, &mut r)?;
            r
        }
        Command::Expand { digraph, k, out } => {
            let d = read_digraph(digraph)?.k_expand(*k)?;
            let mut r = Reply::default();
            emit_digraph(cli, &d, out, &mut r)?;
            r
        }
        Command::Thm3 { l, k, m, out } => {
            let d = linked_cycle_powers(*l, *k, *m)?;
            let mut r = Reply::default();
            emit_digraph(cli, &d, out, &mut r)?;
            r
        }
        Command::NetcodeSolve { instance, alphabet } => netcode_solve(instance, alphabet.s)?,
        Command::NetcodeConvert {
            input,
            acyclic,
            out,
        } => netcode_convert(cli, input, acyclic.as_deref(), out)?,
        Command::GgExport {
            digraph,
            alphabet,
            guard,
            out,
        } => {
            check_alphabet(alphabet.s)?;
            let h = GuessingGraph::materialize(&read_digraph(digraph)?, alphabet.s, *guard)?;
            let text = h.to_edge_list()?;
            let mut r = Reply::default();
            r.put("order", h.order());
            match &out.output {
                Some(path) => {
                    write_text(path, &text)?;
                    r.put("graph", path);
                    r.line(format!("wrote {path} ({} configurations)", h.order()));
                }
                None => r.human.push_str(&text),
            }
            r
        }
    };
    Ok(reply.render(cli.machine))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn guess(
    path: &str,
    s: u64,
    budget: u64,
    guard: u64,
    witness: Option<&str>,
) -> Result<Reply, Failure> {
    check_alphabet(s)?;
    let d = read_digraph(path)?;
    let opts = SolveOptions {
        guard,
        mis_budget: budget,
        ..SolveOptions::default()
    };
    let g = guessing_number(&d, s, &opts)?;
    let mut r = Reply::default();
    r.put("alpha", g.alpha);
    r.put("g", g.g());
    r.put("exact", g.exact);
    r.put("components", g.components.len());
    r.line(format!("alpha={} g={:.3}", g.alpha, g.g()));
    if !g.exact {
        r.line("search budget ran out: alpha is the best found, a lower bound");
    }
    if let Some(out) = witness {
        let configs = g.witness_set(1 << 20)?;
        let space = ConfigSpace::new(d.n(), s)?;
        let mut text = String::from("# fixed configurations, symbols of vertices 0..n\n");
        for x in configs {
            let _ = writeln!(text, "{}", join(&space.digits(x)));
        }
        text.push_str("# protocol: vertex <- [in-neighbours read] : guess per input word\n");
        for v in 0..d.n() {
            let _ = writeln!(
                text,
                "{v} <- [{}] : {}",
                join(g.protocol.inputs(v)),
                join(g.protocol.table(v))
            );
        }
        write_text(out, &text)?;
        r.put("witness", out);
        r.line(format!("witness={out}"));
    }
    Ok(r)
}

fn defect(path: &str, s: u64, budget: u64, guard: u64) -> Result<Reply, Failure> {
    check_alphabet(s)?;
    let d = read_digraph(path)?;
    let opts = SolveOptions {
        guard,
        color_budget: budget,
        ..SolveOptions::default()
    };
    let b = information_defect(&d, s, &opts)?;
    let mut r = Reply::default();
    r.put("chi", b.chi);
    r.put("b", b.b());
    r.put("exact", b.exact);
    r.line(format!("chi={} b={:.3}", b.chi, b.b()));
    if !b.exact {
        r.line("colouring budget ran out: chi is the best found, an upper bound");
    }
    Ok(r)
}

fn linear(path: &str, p: u64, budget: u64) -> Result<Reply, Failure> {
    if !is_prime(p) {
        return Err(Error::NonPrimeField(p).into());
    }
    let d = read_digraph(path)?;
    let lin = linear_guessing_number(&d, p, budget)?;
    let mut r = Reply::default();
    if let Some(v) = lin.value() {
        r.put("g_linear", v);
        r.line(format!("g_linear={v}"));
    } else {
        r.line(format!("g_linear in [{}, {}]", lin.lower, lin.upper));
    }
    r.put("g_linear.lower", lin.lower);
    r.put("g_linear.upper", lin.upper);
    r.put("g_linear.upper_by", lin.upper_by);
    r.line(format!(
        "upper bound from {}",
        lin.upper_by.replace('_', " ")
    ));
    for (i, row) in lin.witness.matrix().to_rows().iter().enumerate() {
        r.put(&format!("witness.row.{i}"), join(row));
    }
    r.line(format!(
        "witness matrix A (fixed space dimension {}):",
        lin.witness.fixed_dimension()
    ));
    r.human.push_str(&write_matrix(lin.witness.matrix()));
    Ok(r)
}

fn report(path: &str, s: u64) -> Result<Reply, Failure> {
    check_alphabet(s)?;
    let d = read_digraph(path)?;
    let st = structure_report(&d);
    let mut r = Reply::default();
    r.put("n", d.n());
    r.put("edges", d.edge_count());
    r.put("min_in_degree", st.min_in_degree);
    r.put("max_in_degree", st.max_in_degree);
    r.put("regular", st.regular_in_out);
    r.put("bidirectional_edges", st.bidirectional_edge_count);
    r.put("tournament", st.is_tournament);
    r.put("girth", st.girth);
    r.put("strong", st.strong);
    r.put("strong_components", st.component_count);
    r.line(format!("{} vertices, {} edges", d.n(), d.edge_count()));
    r.line(format!(
        "in-degree {}..{}, regular = {}, bidirectional edges = {}, tournament = {}",
        st.min_in_degree,
        st.max_in_degree,
        st.regular_in_out,
        st.bidirectional_edge_count,
        st.is_tournament
    ));
    r.line(format!(
        "girth = {}, strong = {}, strong components = {}",
        st.girth, st.strong, st.component_count
    ));

    let mut bounds = bounds_report(&d, s);
    let opts = SolveOptions::default();
    match guessing_number(&d, s, &opts) {
        Ok(g) => {
            r.put("alpha", g.alpha);
            r.put("g", g.g());
            r.put("g_exact", g.exact);
            r.line(format!(
                "alpha={} g={:.3}{}",
                g.alpha,
                g.g(),
                if g.exact { "" } else { " (lower bound)" }
            ));
            if g.exact {
                bounds.add_alpha(g.alpha);
            }
        }
        Err(e) if e.is_size_guard() => {
            r.put("g", "skipped");
            r.line(format!("g skipped: {e}"));
        }
        Err(e) => return Err(e.into()),
    }
    match information_defect(&d, s, &opts) {
        Ok(b) => {
            r.put("chi", b.chi);
            r.put("b", b.b());
            r.put("b_exact", b.exact);
            r.line(format!(
                "chi={} b={:.3}{}",
                b.chi,
                b.b(),
                if b.exact { "" } else { " (upper bound)" }
            ));
        }
        Err(e) if e.is_size_guard() => {
            r.put("b", "skipped");
            r.line(format!("b skipped: {e}"));
        }
        Err(e) => return Err(e.into()),
    }
    for line in bounds.to_key_values().lines() {
        if let Some((k, v)) = line.split_once('=') {
            r.put(&format!("bounds.{k}"), v);
        }
    }
    r.human.push_str(&bounds.to_text());
    Ok(r)
}

fn netcode_solve(path: &str, s: u64) -> Result<Reply, Failure> {
    check_alphabet(s)?;
    let inst = parse_instance(&read_text(path)?).map_err(|e| invalid(format!("{path}: {e}")))?;
    let sol = solvable(&inst, s, &SolveOptions::default())?;
    let verdict = match sol.verdict {
        Verdict::Solvable => "true",
        Verdict::Unsolvable => "false",
        Verdict::Unknown => "unknown",
    };
    let mut r = Reply::default();
    r.put("solvable", verdict);
    r.put("pairs", sol.pairs);
    r.put("intermediates", sol.intermediates);
    r.put("alpha", sol.alpha);
    r.put("g", sol.g);
    r.line(format!("solvable={verdict}"));
    r.line(format!(
        "{} pairs, {} intermediates; merged digraph has alpha={} g={:.3}",
        sol.pairs, sol.intermediates, sol.alpha, sol.g
    ));
    if let Some(v) = sol.verified {
        r.put("verified", v);
        r.line(format!("certificate verified by simulation: {v}"));
    }
    if let Some(m) = sol.defect_matches {
        r.put("defect_matches", m);
    }
    if let Some(reason) = &sol.reason {
        r.put("reason", reason);
        r.line(format!("reason: {reason}"));
    }
    if let Some(cert) = &sol.certificate {
        for f in &cert.functions {
            r.put(
                &format!("certificate.{}", inst.name(f.node)),
                join(&f.table),
            );
        }
        r.human.push_str(&cert.narrative(&inst));
        r.human.push_str(&cert.to_text(&inst));
    }
    Ok(r)
}

fn netcode_convert(
    cli: &Cli,
    path: &str,
    acyclic: Option<&[usize]>,
    out: &Output,
) -> Result<Reply, Failure> {
    let text = read_text(path)?;
    let mut r = Reply::default();
    if path.ends_with(".nc") {
        let inst = parse_instance(&text).map_err(|e| invalid(format!("{path}: {e}")))?;
        let form = to_guessing_digraph(&inst)?;
        for (v, p) in form.provenance.iter().enumerate() {
            let what = match *p {
                Provenance::Pair(i) => {
                    format!(
                        "{}/{}",
                        inst.name(inst.sources()[i]),
                        inst.name(inst.sinks()[i])
                    )
                }
                Provenance::Intermediate(z) => inst.name(z).to_string(),
            };
            r.put(&format!("vertex.{v}"), &what);
        }
        emit_digraph(cli, &form.digraph, out, &mut r)?;
        return Ok(r);
    }
    let d = parse_digraph(&text).map_err(|e| invalid(format!("{path}: {e}")))?;
    let set = match acyclic {
        Some(set) => set.to_vec(),
        None => mas_exact(&d, 1 << 25).witness,
    };
    let inst = from_digraph(&d, &set)?;
    let text = write_instance(&inst);
    r.put("pairs", inst.pair_count());
    r.put("intermediates", inst.intermediate_count());
    match &out.output {
        Some(p) => {
            write_text(p, &text)?;
            r.put("instance", p);
            r.line(format!(
                "wrote {p} ({} pairs, {} intermediates)",
                inst.pair_count(),
                inst.intermediate_count()
            ));
        }
        None => r.human.push_str(&text),
    }
    Ok(r)
}
