//! The twin automaton `G ⫾ G`: two copies of `G` that share observable events
//! and move independently on unobservable ones.

use std::collections::VecDeque;

use crate::alphabet::EventId;
use crate::compose::tuple_name;
use crate::error::Result;
use crate::nfa::{Nfa, StateId};

/// Which copy of the automaton a twin move advances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Both,
    Left,
    Right,
}

/// Lazy successor function of `G ⫾ G`: every `(target pair, side)` reachable
/// from `(x, y)` under `e`, in lexicographic order.
pub fn twin_successors(
    g: &Nfa,
    (x, y): (StateId, StateId),
    e: EventId,
    out: &mut Vec<((StateId, StateId), Side)>,
) {
    if g.alphabet().is_observable(e) {
        for &x2 in g.successors(x, e) {
            for &y2 in g.successors(y, e) {
                out.push(((x2, y2), Side::Both));
            }
        }
    } else {
        for &x2 in g.successors(x, e) {
            out.push(((x2, y), Side::Left));
        }
        for &y2 in g.successors(y, e) {
            out.push(((x, y2), Side::Right));
        }
    }
}

/// Materialized accessible part of `G ⫾ G`.
#[derive(Debug, Clone)]
pub struct TwinAutomaton {
    pub automaton: Nfa,
    /// Source state pair behind every twin state.
    pub pairs: Vec<(StateId, StateId)>,
}

impl TwinAutomaton {
    pub fn state_of(&self, pair: (StateId, StateId)) -> Option<StateId> {
        self.pairs.iter().position(|&p| p == pair)
    }
}

pub fn twin(g: &Nfa) -> Result<TwinAutomaton> {
    let n = g.num_states();
    let mut id = vec![usize::MAX; n * n];
    let mut pairs = Vec::new();
    let mut queue = VecDeque::new();
    let mut initial = Vec::new();
    for &x in g.initial() {
        for &y in g.initial() {
            id[x * n + y] = pairs.len();
            initial.push(pairs.len());
            pairs.push((x, y));
            queue.push_back((x, y));
        }
    }
    let mut transitions = Vec::new();
    let mut buf = Vec::new();
    while let Some((x, y)) = queue.pop_front() {
        let src = id[x * n + y];
        for e in g.alphabet().events() {
            buf.clear();
            twin_successors(g, (x, y), e, &mut buf);
            for &((a, b), _) in &buf {
                let slot = &mut id[a * n + b];
                if *slot == usize::MAX {
                    *slot = pairs.len();
                    pairs.push((a, b));
                    queue.push_back((a, b));
                }
                transitions.push((src, e, *slot));
            }
        }
    }
    let marked: Vec<StateId> = pairs
        .iter()
        .enumerate()
        .filter(|(_, (x, y))| {
            g.marked().binary_search(x).is_ok() && g.marked().binary_search(y).is_ok()
        })
        .map(|(i, _)| i)
        .collect();
    let names = pairs
        .iter()
        .map(|&(x, y)| tuple_name(&[g.state_name(x), g.state_name(y)]))
        .collect();
    let automaton = Nfa::from_parts(names, g.alphabet().clone(), transitions, initial, marked)?;
    Ok(TwinAutomaton { automaton, pairs })
}
