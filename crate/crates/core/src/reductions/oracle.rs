//! Direct answers to the source problems of the reductions, used to label
//! generated instances with their expected verdict.

use std::collections::{HashSet, VecDeque};

use super::dag::Dag;
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateId};
use crate::petri::{explore, explore_until, ExploreLimits, LabeledPetriNet, Marking, PetriNet};

/// Is the target reachable from the source?
pub fn dag_reachable(d: &Dag) -> bool {
    let mut seen = vec![false; d.nodes().len()];
    let mut stack = vec![d.source()];
    seen[d.source()] = true;
    while let Some(v) = stack.pop() {
        if v == d.target() {
            return true;
        }
        for &(p, q) in d.edges() {
            if p == v && !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    false
}

/// `⋂ Lm(A_i) ≠ ∅` for automata over the same event names, by search of the
/// explicit product.
pub fn marked_intersection_nonempty(automata: &[Nfa]) -> Result<bool> {
    let Some(first) = automata.first() else {
        return Err(Error::invalid("need at least one automaton"));
    };
    let events = first.alphabet().names();
    let mut local = Vec::new();
    for a in automata {
        let ids = events
            .iter()
            .map(|e| a.alphabet().require(e))
            .collect::<Result<Vec<_>>>()?;
        if a.alphabet().len() != events.len() {
            return Err(Error::invalid("automata must share one alphabet"));
        }
        local.push(ids);
    }
    let mut seen: HashSet<Vec<StateId>> = HashSet::new();
    let mut queue: VecDeque<Vec<StateId>> = VecDeque::new();
    let mut starts = vec![Vec::new()];
    for a in automata {
        starts = starts
            .into_iter()
            .flat_map(|t| {
                a.initial().iter().map(move |&q| {
                    let mut t = t.clone();
                    t.push(q);
                    t
                })
            })
            .collect();
    }
    for t in starts {
        if seen.insert(t.clone()) {
            queue.push_back(t);
        }
    }
    while let Some(t) = queue.pop_front() {
        if t.iter().zip(automata).all(|(q, a)| a.marked().contains(q)) {
            return Ok(true);
        }
        for e in 0..events.len() {
            let mut next = vec![Vec::new()];
            for (i, a) in automata.iter().enumerate() {
                let succ = a.successors(t[i], local[i][e]);
                next = next
                    .into_iter()
                    .flat_map(|prefix| {
                        succ.iter().map(move |&q| {
                            let mut p = prefix.clone();
                            p.push(q);
                            p
                        })
                    })
                    .collect();
            }
            for n in next {
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
    }
    Ok(false)
}

/// `Some(true)` when `target` is found, `Some(false)` when the exploration is
/// exhaustive without it, `None` otherwise.
pub fn petri_reachable(net: &PetriNet, m0: &Marking, target: &Marking, limits: ExploreLimits) -> Result<Option<bool>> {
    let e = explore_until(net, m0, limits, false, |m| m == target)?;
    Ok(match (e.stopped_at, e.exhaustive) {
        (Some(_), _) => Some(true),
        (None, true) => Some(false),
        (None, false) => None,
    })
}

/// `R(A) ⊆ R(B)` when both reachability sets can be enumerated.
pub fn marking_included(a: &LabeledPetriNet, b: &LabeledPetriNet, limits: ExploreLimits) -> Result<Option<bool>> {
    let ra = explore(&a.net, &a.initial, limits)?;
    let rb = explore(&b.net, &b.initial, limits)?;
    if !ra.exhaustive || !rb.exhaustive {
        return Ok(None);
    }
    Ok(Some(ra.graph.markings.iter().all(|m| rb.graph.contains(m))))
}
