//! Emptiness of DFA and unary NFA intersections as critical observability of
//! networks.

use serde::{Deserialize, Serialize};

use super::fresh;
use crate::alphabet::EventAlphabet;
use crate::error::{Error, Result};
use crate::network::{Network, TupleCriticalSet};
use crate::nfa::{Nfa, StateId};

/// How the escape to the fresh state `s_i` is labeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntersectionVariant {
    /// `(p, 1, s_i)`: every component stays over the observable `{0, 1}`.
    #[default]
    SharedObservable,
    /// `(p, u, s_i)` with one unobservable `u` shared by all components.
    Unobservable,
}

/// Name of the unobservable escape event.
pub const ESCAPE: &str = "u";

/// Copies `a` over `alphabet` (a superset of its own, by name), appends fresh
/// states named after `extra`, and adds `(p, event, k)` for every marked `p`
/// and every `(event, k)` in `escapes`, `k` indexing `extra`.
fn extend(a: &Nfa, alphabet: &EventAlphabet, extra: &[&str], escapes: &[(&str, usize)]) -> Result<(Nfa, Vec<StateId>)> {
    let mut states = a.state_names().to_vec();
    let mut added = Vec::new();
    for base in extra {
        states.push(fresh(&states, base));
        added.push(states.len() - 1);
    }
    let event = |e: usize| alphabet.require(a.alphabet().name(e));
    let mut transitions = a
        .transitions()
        .map(|(p, e, q)| Ok((p, event(e)?, q)))
        .collect::<Result<Vec<_>>>()?;
    for &p in a.marked() {
        for &(name, k) in escapes {
            transitions.push((p, alphabet.require(name)?, added[k]));
        }
    }
    let g = Nfa::from_parts(
        states,
        alphabet.clone(),
        transitions,
        a.initial().iter().copied(),
        a.marked().iter().copied(),
    )?;
    Ok((g, added))
}

fn singleton_critical(net: &Network, tuple: Vec<StateId>) -> Result<TupleCriticalSet> {
    let mut c = TupleCriticalSet::empty(net);
    c.add_tuple(tuple)?;
    Ok(c)
}

/// Components `G_i = A_i + s_i` with an escape `p → s_i` from every marked `p`;
/// critical set `{(s_1, …, s_n)}`. Critically observable iff `⋂ Lm(A_i) = ∅`.
///
/// Every `A_i` must be a total DFA over the observable events `0` and `1`.
pub fn gen_dfa_intersection(dfas: &[Nfa], variant: IntersectionVariant) -> Result<(Network, TupleCriticalSet)> {
    if dfas.is_empty() {
        return Err(Error::invalid("need at least one automaton"));
    }
    let mut events = vec![("0", true), ("1", true)];
    let escape = match variant {
        IntersectionVariant::SharedObservable => "1",
        IntersectionVariant::Unobservable => {
            events.push((ESCAPE, false));
            ESCAPE
        }
    };
    let alphabet = EventAlphabet::new(events)?;
    let mut components = Vec::new();
    let mut sinks = Vec::new();
    for (i, a) in dfas.iter().enumerate() {
        let sigma = a.alphabet();
        let binary = sigma.len() == 2
            && ["0", "1"]
                .iter()
                .all(|e| sigma.id(e).is_some_and(|id| sigma.is_observable(id)));
        if !binary || !a.is_total_dfa() {
            return Err(Error::invalid("expected a total DFA over the observable events 0 and 1")
                .at(format!("automaton {i}")));
        }
        let (g, added) = extend(a, &alphabet, &["s"], &[(escape, 0)])?;
        components.push(g);
        sinks.push(added[0]);
    }
    let net = Network::new(components)?;
    let critical = singleton_critical(&net, sinks)?;
    Ok((net, critical))
}

/// Components `G_i = A_i + s_i + t_i` with `(p, a, s_i)` and `(p, a, t_i)` for
/// every marked `p`; critical set `{(s_1, …, s_n)}`. Not critically observable
/// iff `⋂ Lm(A_i) ≠ ∅`.
pub fn gen_unary_intersection(nfas: &[Nfa]) -> Result<(Network, TupleCriticalSet)> {
    let Some(first) = nfas.first() else {
        return Err(Error::invalid("need at least one automaton"));
    };
    let alphabet = first.alphabet().clone();
    if alphabet.len() != 1 {
        return Err(Error::invalid("expected a one-letter alphabet").at("automaton 0"));
    }
    let a = alphabet.name(0).to_string();
    let mut components = Vec::new();
    let mut sinks = Vec::new();
    for (i, g) in nfas.iter().enumerate() {
        if g.alphabet() != &alphabet {
            return Err(Error::invalid(format!("expected the alphabet {{{a}}}")).at(format!("automaton {i}")));
        }
        let (g, added) = extend(g, &alphabet, &["s", "t"], &[(&a, 0), (&a, 1)])?;
        components.push(g);
        sinks.push(added[0]);
    }
    let net = Network::new(components)?;
    let critical = singleton_critical(&net, sinks)?;
    Ok((net, critical))
}
