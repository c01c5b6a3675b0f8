//! Observer (subset construction with unobservable closure).

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{EventAlphabet, EventId};
use crate::error::Result;
use crate::nfa::{Nfa, StateSet};

/// Deterministic automaton over the observable events whose states are the
/// state estimates of the source automaton.
#[derive(Debug, Clone)]
pub struct Observer {
    pub automaton: Nfa,
    /// `estimates[i]` is the set of source states behind observer state `i`.
    pub estimates: Vec<StateSet>,
}

/// Reachable nonempty estimates in BFS order, with the observer transitions
/// `(from, observable event of G, to)` and the BFS tree.
pub(crate) struct EstimateSearch {
    pub estimates: Vec<StateSet>,
    pub transitions: Vec<(usize, EventId, usize)>,
    pub parent: Vec<Option<(usize, EventId)>>,
    /// Estimate at which `stop` fired.
    pub stopped_at: Option<usize>,
}

impl EstimateSearch {
    /// Observable word leading to estimate `i`; shortest, since estimates are
    /// discovered breadth-first.
    pub fn word_to(&self, mut i: usize) -> Vec<EventId> {
        let mut word = Vec::new();
        while let Some((p, e)) = self.parent[i] {
            word.push(e);
            i = p;
        }
        word.reverse();
        word
    }
}

/// Subset construction with unobservable closure, stopping at the first
/// estimate for which `stop` holds.
pub(crate) fn search_estimates(g: &Nfa, mut stop: impl FnMut(&StateSet) -> bool) -> Result<EstimateSearch> {
    let observable: Vec<EventId> = g.alphabet().observable_events().collect();
    let start = g.unobservable_reach(&g.initial_set());
    let mut out = EstimateSearch {
        estimates: Vec::new(),
        transitions: Vec::new(),
        parent: vec![None],
        stopped_at: None,
    };
    if stop(&start) {
        out.estimates.push(start);
        out.stopped_at = Some(0);
        return Ok(out);
    }
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    out.estimates.push(start);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &e in &observable {
            let next = g.unobservable_reach(&g.step(&out.estimates[i], e)?);
            if next.is_empty() {
                continue;
            }
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    let j = out.estimates.len();
                    let hit = stop(&next);
                    index.insert(next.clone(), j);
                    out.estimates.push(next);
                    out.parent.push(Some((i, e)));
                    out.transitions.push((i, e, j));
                    if hit {
                        out.stopped_at = Some(j);
                        return Ok(out);
                    }
                    queue.push_back(j);
                    continue;
                }
            };
            out.transitions.push((i, e, j));
        }
    }
    Ok(out)
}

/// Builds `Obs(G)`: the state after observation `s` is the set of states
/// reachable by some word projecting to `s`. Only nonempty estimates are kept,
/// so the observer generates exactly the projected language.
pub fn observer(g: &Nfa) -> Result<Observer> {
    let sigma = g.alphabet();
    let observable: Vec<EventId> = sigma.observable_events().collect();
    let search = search_estimates(g, |_| false)?;
    let names = search
        .estimates
        .iter()
        .map(|s| format!("{{{}}}", g.names_of(s).join(",")))
        .collect();
    let local = |e: EventId| observable.iter().position(|&o| o == e).expect("observable");
    let transitions = search.transitions.iter().map(|&(i, e, j)| (i, local(e), j));
    let obs_alphabet = EventAlphabet::new(observable.iter().map(|&e| (sigma.name(e).to_string(), true)));
    let automaton = match obs_alphabet {
        Ok(alphabet) => Nfa::from_parts(names, alphabet, transitions, [0], [])?,
        // Nothing is observable: a single estimate, no transitions. An alphabet
        // cannot be empty, so a placeholder event without transitions is used.
        Err(_) => Nfa::from_parts(names, EventAlphabet::new([("ε", true)])?, Vec::new(), [0], [])?,
    };
    Ok(Observer {
        automaton,
        estimates: search.estimates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::parallel_compose;

    fn handshake() -> (Nfa, Nfa) {
        let g1 = Nfa::builder()
            .states(["0", "1", "2"])
            .unobservable("a")
            .observable("b")
            .transition("0", "a", "1")
            .transition("1", "b", "2")
            .initial("0")
            .build()
            .unwrap();
        let g2 = Nfa::builder()
            .states(["0", "1", "2"])
            .observable("c")
            .unobservable("a")
            .transition("0", "c", "1")
            .transition("1", "a", "2")
            .initial("0")
            .build()
            .unwrap();
        (g1, g2)
    }

    fn language(g: &Nfa, n: usize) -> Vec<String> {
        g.bounded_language(n)
            .into_iter()
            .map(|w| g.alphabet().render(&w).concat())
            .collect()
    }

    #[test]
    fn observer_of_composition_is_a_chain() {
        let (g1, g2) = handshake();
        let obs = observer(&parallel_compose(&g1, &g2).unwrap()).unwrap();
        let mut l = language(&obs.automaton, 4);
        l.sort();
        assert_eq!(l, vec!["", "c", "cb"]);
    }

    #[test]
    fn composition_of_observers_is_a_diamond() {
        let (g1, g2) = handshake();
        let o1 = observer(&g1).unwrap().automaton;
        let o2 = observer(&g2).unwrap().automaton;
        let mut l = language(&parallel_compose(&o1, &o2).unwrap(), 4);
        l.sort();
        assert_eq!(l, vec!["", "b", "bc", "c", "cb"]);
    }

    #[test]
    fn observer_of_observable_dfa_is_isomorphic() {
        let g = Nfa::builder()
            .states(["0", "1", "2", "3"])
            .observable("a")
            .observable("b")
            .transition("0", "a", "1")
            .transition("1", "b", "2")
            .transition("2", "a", "0")
            .transition("3", "a", "3")
            .initial("0")
            .build()
            .unwrap();
        let obs = observer(&g).unwrap();
        assert_eq!(obs.automaton.num_states(), 3);
        assert_eq!(obs.automaton.num_transitions(), 3);
        assert!(obs.estimates.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn initial_estimate_is_unobservable_closure() {
        let (g1, _) = handshake();
        let obs = observer(&g1).unwrap();
        assert_eq!(g1.names_of(&obs.estimates[0]), vec!["0", "1"]);
    }
}
