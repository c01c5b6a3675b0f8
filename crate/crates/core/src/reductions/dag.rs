//! DAG reachability as critical observability of a one-letter NFA.

use serde::Serialize;

use super::fresh;
use crate::alphabet::EventAlphabet;
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateSet};

/// Directed acyclic graph with a source and a target node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dag {
    nodes: Vec<String>,
    edges: Vec<(usize, usize)>,
    source: usize,
    target: usize,
}

impl Dag {
    pub fn new(nodes: Vec<String>, edges: Vec<(usize, usize)>, source: usize, target: usize) -> Result<Self> {
        let n = nodes.len();
        if source >= n || target >= n {
            return Err(Error::invalid("source and target must be nodes"));
        }
        if let Some(&(p, q)) = edges.iter().find(|&&(p, q)| p >= n || q >= n) {
            return Err(Error::invalid(format!("edge ({p},{q}) leaves the node set")));
        }
        // Kahn's algorithm
        let mut indegree = vec![0usize; n];
        for &(_, q) in &edges {
            indegree[q] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &(p, q) in &edges {
                if p == v {
                    indegree[q] -= 1;
                    if indegree[q] == 0 {
                        ready.push(q);
                    }
                }
            }
        }
        if removed != n {
            return Err(Error::invalid("graph has a cycle"));
        }
        Ok(Dag {
            nodes,
            edges,
            source,
            target,
        })
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }
}

/// NFA over one observable event `a` with states `V ∪ {r}`, a transition per
/// edge, and `(t,a,t)`, `(t,a,r)`; initial `{s}`, every state marked, critical
/// set `{t}`. Critically observable iff `t` is unreachable from `s`.
pub fn gen_dag_nfa(d: &Dag) -> Result<(Nfa, StateSet)> {
    let mut states = d.nodes.clone();
    states.push(fresh(&states, "r"));
    let r = states.len() - 1;
    let t = d.target;
    let transitions = d
        .edges
        .iter()
        .map(|&(p, q)| (p, 0, q))
        .chain([(t, 0, t), (t, 0, r)]);
    let n = states.len();
    let g = Nfa::from_parts(states, EventAlphabet::new([("a", true)])?, transitions, [d.source], 0..n)?;
    let critical = StateSet::from_indices(n, [t])?;
    Ok((g, critical))
}
