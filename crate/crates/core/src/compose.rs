//! Classical parallel composition: shared events synchronize, private events
//! interleave.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{EventAlphabet, EventId};
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateId};

/// Union of the component alphabets in first-occurrence order.
///
/// Fails if an event is observable in one component and unobservable in
/// another.
pub fn merged_alphabet(components: &[&Nfa]) -> Result<EventAlphabet> {
    let mut events: Vec<(String, bool)> = Vec::new();
    let mut seen: HashMap<&str, bool> = HashMap::new();
    for nfa in components {
        let sigma = nfa.alphabet();
        for e in sigma.events() {
            let name = sigma.name(e);
            match seen.get(name) {
                Some(&obs) if obs != sigma.is_observable(e) => {
                    return Err(Error::InconsistentObservability(name.to_string()))
                }
                Some(_) => {}
                None => {
                    seen.insert(name, sigma.is_observable(e));
                    events.push((name.to_string(), sigma.is_observable(e)));
                }
            }
        }
    }
    EventAlphabet::new(events)
}

/// Renders a state tuple as `(x,y,...)`.
pub fn tuple_name<S: AsRef<str>>(parts: &[S]) -> String {
    let inner: Vec<&str> = parts.iter().map(AsRef::as_ref).collect();
    format!("({})", inner.join(","))
}

/// All combinations picking one element from each list, in lexicographic order.
pub(crate) fn cartesian(lists: &[&[StateId]]) -> Vec<Vec<StateId>> {
    let mut out = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for &x in *list {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
        if out.is_empty() {
            break;
        }
    }
    out
}

/// Accessible part of `G_1 ‖ … ‖ G_n` together with the component-state tuple
/// behind every composed state.
#[derive(Debug, Clone)]
pub struct Composition {
    pub automaton: Nfa,
    pub tuples: Vec<Vec<StateId>>,
}

impl Composition {
    pub fn state_of(&self, tuple: &[StateId]) -> Option<StateId> {
        self.tuples.iter().position(|t| t == tuple)
    }
}

/// Explicit synchronous product of any number of automata, accessible part
/// only, optionally capped at `max_states` composed states.
pub fn compose(components: &[&Nfa], max_states: Option<usize>) -> Result<Composition> {
    if components.is_empty() {
        return Err(Error::invalid("composition of zero automata"));
    }
    let sigma = merged_alphabet(components)?;
    // local[i][e] = component i's index for global event e
    let local: Vec<Vec<Option<EventId>>> = components
        .iter()
        .map(|c| sigma.names().iter().map(|n| c.alphabet().id(n)).collect())
        .collect();

    let initials: Vec<&[StateId]> = components.iter().map(|c| c.initial()).collect();
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut tuples: Vec<Vec<StateId>> = Vec::new();
    let mut queue = VecDeque::new();
    let mut transitions = Vec::new();
    let cap = max_states.unwrap_or(usize::MAX);

    let mut intern = |t: Vec<StateId>,
                      tuples: &mut Vec<Vec<StateId>>,
                      queue: &mut VecDeque<StateId>|
     -> Result<StateId> {
        if let Some(&id) = index.get(&t) {
            return Ok(id);
        }
        if tuples.len() >= cap {
            return Err(Error::Resource {
                what: "composed state count".into(),
                bound: cap.to_string(),
            });
        }
        let id = tuples.len();
        index.insert(t.clone(), id);
        tuples.push(t);
        queue.push_back(id);
        Ok(id)
    };

    let mut initial_ids = Vec::new();
    for t in cartesian(&initials) {
        initial_ids.push(intern(t, &mut tuples, &mut queue)?);
    }
    while let Some(id) = queue.pop_front() {
        let current = tuples[id].clone();
        for e in sigma.events() {
            let choices: Vec<&[StateId]> = components
                .iter()
                .enumerate()
                .map(|(i, c)| match local[i][e] {
                    Some(le) => c.successors(current[i], le),
                    None => std::slice::from_ref(&current[i]),
                })
                .collect();
            for t in cartesian(&choices) {
                let target = intern(t, &mut tuples, &mut queue)?;
                transitions.push((id, e, target));
            }
        }
    }

    let marked: Vec<StateId> = tuples
        .iter()
        .enumerate()
        .filter(|(_, t)| {
            t.iter()
                .zip(components)
                .all(|(&q, c)| c.marked().binary_search(&q).is_ok())
        })
        .map(|(i, _)| i)
        .collect();
    let names = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(components)
                .map(|(&q, c)| c.state_name(q))
                .collect();
            tuple_name(&parts)
        })
        .collect();
    let automaton = Nfa::from_parts(names, sigma, transitions, initial_ids, marked)?;
    Ok(Composition { automaton, tuples })
}

/// `A ‖ B`, accessible part.
pub fn parallel_compose(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    compose(&[a, b], None).map(|c| c.automaton)
}
