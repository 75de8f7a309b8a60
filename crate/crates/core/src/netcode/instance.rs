//! Multiple-unicast instances in circuit form and their guessing digraphs.

use std::collections::HashMap;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// An acyclic network where sink `i` demands the message of source `i`.
/// Every node sends one message on all of its outgoing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkInstance {
    names: Vec<String>,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    intermediates: Vec<usize>,
    /// Sorted, without duplicates.
    edges: Vec<(usize, usize)>,
    in_adj: Vec<Vec<usize>>,
    out_adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Source(usize),
    Sink(usize),
    Intermediate(usize),
}

impl NetworkInstance {
    /// Node ids index `names`. Fails unless every node has exactly one role,
    /// sources have no incoming and sinks no outgoing edges, and the network
    /// is acyclic.
    pub fn new(
        names: Vec<String>,
        sources: Vec<usize>,
        sinks: Vec<usize>,
        intermediates: Vec<usize>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let total = names.len();
        let invalid = |msg: String| Error::InvalidInstance(msg);
        if sources.len() != sinks.len() {
            return Err(invalid(format!(
                "{} sources but {} sinks",
                sources.len(),
                sinks.len()
            )));
        }
        let mut seen = vec![false; total];
        for &v in sources.iter().chain(&sinks).chain(&intermediates) {
            if v >= total {
                return Err(invalid(format!("node id {v} out of range")));
            }
            if seen[v] {
                return Err(invalid(format!("node {} has more than one role", names[v])));
            }
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|&b| !b) {
            return Err(invalid(format!("node {} has no role", names[v])));
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        let mut in_adj = vec![Vec::new(); total];
        let mut out_adj = vec![Vec::new(); total];
        for &(u, v) in &edges {
            if u >= total || v >= total {
                return Err(invalid(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(invalid(format!("loop at node {}", names[u])));
            }
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for &s in &sources {
            if !in_adj[s].is_empty() {
                return Err(invalid(format!("source {} has incoming edges", names[s])));
            }
        }
        for &t in &sinks {
            if !out_adj[t].is_empty() {
                return Err(invalid(format!("sink {} has outgoing edges", names[t])));
            }
        }
        let inst = NetworkInstance {
            names,
            sources,
            sinks,
            intermediates,
            edges,
            in_adj,
            out_adj,
        };
        if inst.topological_order().is_none() {
            return Err(invalid("network has a directed cycle".into()));
        }
        Ok(inst)
    }

    /// Builds an instance from node names.
    pub fn from_names(
        pairs: &[(&str, &str)],
        intermediates: &[&str],
        edges: &[(&str, &str)],
    ) -> Result<Self> {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        let mut add = |name: &str| -> Result<usize> {
            if index.contains_key(name) {
                return Err(Error::InvalidInstance(format!(
                    "node {name} declared twice"
                )));
            }
            index.insert(name.to_string(), names.len());
            names.push(name.to_string());
            Ok(names.len() - 1)
        };
        let mut sources = Vec::new();
        let mut sinks = Vec::new();
        for (s, t) in pairs {
            sources.push(add(s)?);
            sinks.push(add(t)?);
        }
        let inter = intermediates
            .iter()
            .map(|z| add(z))
            .collect::<Result<Vec<_>>>()?;
        let lookup = |name: &str| {
            index.get(name).copied().ok_or_else(|| {
                Error::InvalidInstance(format!("edge mentions undeclared node {name}"))
            })
        };
        let edges = edges
            .iter()
            .map(|(u, v)| Ok((lookup(u)?, lookup(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, sources, sinks, inter, edges)
    }

    /// Number of source-sink pairs.
    pub fn pair_count(&self) -> usize {
        self.sources.len()
    }

    pub fn intermediate_count(&self) -> usize {
        self.intermediates.len()
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    pub fn intermediates(&self) -> &[usize] {
        &self.intermediates
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn role(&self, v: usize) -> Role {
        if let Some(i) = self.sources.iter().position(|&x| x == v) {
            Role::Source(i)
        } else if let Some(i) = self.sinks.iter().position(|&x| x == v) {
            Role::Sink(i)
        } else {
            Role::Intermediate(
                self.intermediates
                    .iter()
                    .position(|&x| x == v)
                    .expect("every node has a role"),
            )
        }
    }

    /// Kahn's algorithm, smallest id first; `None` on a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let total = self.node_count();
        let mut indeg: Vec<usize> = (0..total).map(|v| self.in_adj[v].len()).collect();
        let mut ready: std::collections::BTreeSet<usize> =
            (0..total).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(total);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &self.out_adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == total).then_some(order)
    }

    /// Pairs whose sink cannot be reached from their source.
    pub fn disconnected_pairs(&self) -> Vec<usize> {
        (0..self.pair_count())
            .filter(|&i| {
                let mut seen = vec![false; self.node_count()];
                let mut stack = vec![self.sources[i]];
                seen[self.sources[i]] = true;
                while let Some(v) = stack.pop() {
                    for &w in &self.out_adj[v] {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                !seen[self.sinks[i]]
            })
            .collect()
    }
}

/// Where a vertex of the guessing digraph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Source `i` merged with sink `i`.
    Pair(usize),
    /// An intermediate node id of the instance.
    Intermediate(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessingForm {
    pub digraph: Digraph,
    pub provenance: Vec<Provenance>,
}

impl GuessingForm {
    /// Instance node sending the message seen at digraph vertex `v`: the
    /// source for a merged pair, else the intermediate itself.
    pub fn sender(&self, inst: &NetworkInstance, v: usize) -> usize {
        match self.provenance[v] {
            Provenance::Pair(i) => inst.sources()[i],
            Provenance::Intermediate(z) => z,
        }
    }
}

/// Merges source `i` with sink `i` into vertex `i`; intermediates follow as
/// vertices `n, n+1, ...` in declaration order.
pub fn to_guessing_digraph(inst: &NetworkInstance) -> Result<GuessingForm> {
    let n = inst.pair_count();
    let mut vertex = vec![usize::MAX; inst.node_count()];
    for i in 0..n {
        vertex[inst.sources[i]] = i;
        vertex[inst.sinks[i]] = i;
    }
    for (j, &z) in inst.intermediates.iter().enumerate() {
        vertex[z] = n + j;
    }
    let mut edges = Vec::with_capacity(inst.edges.len());
    for &(u, v) in &inst.edges {
        if vertex[u] == vertex[v] {
            return Err(Error::SelfDemandLoop(inst.names[u].clone()));
        }
        edges.push((vertex[u], vertex[v]));
    }
    let digraph = Digraph::from_edges(n + inst.intermediate_count(), edges)?;
    let provenance = (0..n)
        .map(Provenance::Pair)
        .chain(
            inst.intermediates
                .iter()
                .map(|&z| Provenance::Intermediate(z)),
        )
        .collect();
    Ok(GuessingForm {
        digraph,
        provenance,
    })
}

/// Splits every vertex outside the acyclic set `acyclic` into a source
/// `s<v>` (its out-edges) and a sink `t<v>` (its in-edges); the vertices of
/// `acyclic` become intermediates `z<v>`. Pairs are in ascending vertex
/// order, and so are the intermediates.
pub fn from_digraph(d: &Digraph, acyclic: &[usize]) -> Result<NetworkInstance> {
    let n = d.n();
    if let Some(&v) = acyclic.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if !d.is_acyclic_set(acyclic) {
        return Err(Error::NotAcyclic);
    }
    let mut inside = vec![false; n];
    for &v in acyclic {
        inside[v] = true;
    }
    let mut names = Vec::new();
    let mut send = vec![0; n];
    let mut receive = vec![0; n];
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    let mut intermediates = Vec::new();
    for v in (0..n).filter(|&v| !inside[v]) {
        send[v] = names.len();
        sources.push(names.len());
        names.push(format!("s{v}"));
        receive[v] = names.len();
        sinks.push(names.len());
        names.push(format!("t{v}"));
    }
    for v in (0..n).filter(|&v| inside[v]) {
        send[v] = names.len();
        receive[v] = names.len();
        intermediates.push(names.len());
        names.push(format!("z{v}"));
    }
    let edges = d.edges().map(|(u, v)| (send[u], receive[v])).collect();
    NetworkInstance::new(names, sources, sinks, intermediates, edges)
}

/// Two pairs crossing through one intermediate `z`, with each source also
/// wired to the other pair's sink.
pub fn butterfly() -> NetworkInstance {
    NetworkInstance::from_names(
        &[("s1", "t1"), ("s2", "t2")],
        &["z"],
        &[
            ("s1", "z"),
            ("s2", "z"),
            ("s1", "t2"),
            ("s2", "t1"),
            ("z", "t1"),
            ("z", "t2"),
        ],
    )
    .expect("fixed instance is valid")
}

/// `n` pairs whose only routes run through `m` intermediates, each
/// intermediate hearing every source and reaching every sink.
pub fn bottleneck(n: usize, m: usize) -> Result<NetworkInstance> {
    if n == 0 || m == 0 {
        return Err(Error::BadParams(
            "bottleneck needs at least one pair and one intermediate".into(),
        ));
    }
    let src: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let snk: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let mid: Vec<String> = (1..=m).map(|j| format!("z{j}")).collect();
    let pairs: Vec<(&str, &str)> = src
        .iter()
        .zip(&snk)
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let inter: Vec<&str> = mid.iter().map(String::as_str).collect();
    let mut edges = Vec::new();
    for z in &inter {
        for i in 0..n {
            edges.push((src[i].as_str(), *z));
            edges.push((*z, snk[i].as_str()));
        }
    }
    NetworkInstance::from_names(&pairs, &inter, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{standard, StandardKind};

    #[test]
    fn butterfly_merges_to_clique() {
        let form = to_guessing_digraph(&butterfly()).unwrap();
        assert_eq!(form.digraph, standard(StandardKind::Clique(3)).unwrap());
        assert_eq!(form.provenance[2], Provenance::Intermediate(4));
    }

    #[test]
    fn bottleneck_merges_to_bipartite() {
        let form = to_guessing_digraph(&bottleneck(3, 2).unwrap()).unwrap();
        let want = standard(StandardKind::CompleteBipartite(3, 2)).unwrap();
        assert_eq!(form.digraph, want);
    }

    #[test]
    fn invariants_are_checked() {
        let direct = NetworkInstance::from_names(&[("s", "t")], &[], &[("s", "t")]).unwrap();
        assert_eq!(
            to_guessing_digraph(&direct),
            Err(Error::SelfDemandLoop("s".into()))
        );
        assert!(
            NetworkInstance::from_names(&[("s", "t")], &["a", "b"], &[("a", "b"), ("b", "a")])
                .is_err()
        );
        assert!(NetworkInstance::from_names(&[("s", "t")], &["a"], &[("a", "s")]).is_err());
        assert!(NetworkInstance::from_names(&[("s", "t")], &["s"], &[]).is_err());
    }

    #[test]
    fn splitting_a_clique() {
        let k3 = standard(StandardKind::Clique(3)).unwrap();
        let inst = from_digraph(&k3, &[2]).unwrap();
        assert_eq!((inst.pair_count(), inst.intermediate_count()), (2, 1));
        assert_eq!(to_guessing_digraph(&inst).unwrap().digraph, k3);
        assert_eq!(from_digraph(&k3, &[0, 1]), Err(Error::NotAcyclic));
        assert!(inst.disconnected_pairs().is_empty());
    }
}
