//! Nondeterministic finite automata with partial observation.
//!
//! States and events carry string names for input and output; internally
//! everything is a dense index. The transition relation is kept as sorted
//! adjacency lists per `(state, event)`.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::{EventAlphabet, EventId, Word};
use crate::error::{Error, Result};

pub type StateId = usize;

/// A subset of the states of one automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    mask: Vec<bool>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            mask: vec![false; universe],
        }
    }

    pub fn full(universe: usize) -> Self {
        StateSet {
            mask: vec![true; universe],
        }
    }

    pub fn from_indices(universe: usize, members: impl IntoIterator<Item = StateId>) -> Result<Self> {
        let mut set = StateSet::empty(universe);
        for q in members {
            if q >= universe {
                return Err(Error::UnknownState(format!("#{q}")));
            }
            set.mask[q] = true;
        }
        Ok(set)
    }

    /// Resolves state names against `nfa`.
    pub fn from_names<S: AsRef<str>>(nfa: &Nfa, names: &[S]) -> Result<Self> {
        let mut set = StateSet::empty(nfa.num_states());
        for name in names {
            set.mask[nfa.require_state(name.as_ref())?] = true;
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.mask.get(q).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, q: StateId) -> bool {
        !std::mem::replace(&mut self.mask[q], true)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(q, &b)| b.then_some(q))
    }

    pub fn complement(&self) -> StateSet {
        StateSet {
            mask: self.mask.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.iter().all(|q| other.contains(q))
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.iter().any(|q| other.contains(q))
    }
}

/// Finite automaton `(Q, Σ, δ, I, F)` over an alphabet with an observable part.
#[derive(Debug, Clone)]
pub struct Nfa {
    states: Vec<String>,
    state_index: HashMap<String, StateId>,
    alphabet: EventAlphabet,
    /// `delta[q][e]` is the sorted list of successors of `q` under `e`.
    delta: Vec<Vec<Vec<StateId>>>,
    initial: Vec<StateId>,
    marked: Vec<StateId>,
}

impl Nfa {
    /// Builds an automaton from index-based parts. Duplicate transitions are
    /// merged.
    pub fn from_parts(
        states: Vec<String>,
        alphabet: EventAlphabet,
        transitions: impl IntoIterator<Item = (StateId, EventId, StateId)>,
        initial: impl IntoIterator<Item = StateId>,
        marked: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        let n = states.len();
        let mut state_index = HashMap::with_capacity(n);
        for (q, name) in states.iter().enumerate() {
            if state_index.insert(name.clone(), q).is_some() {
                return Err(Error::invalid(format!("duplicate state `{name}`")));
            }
        }
        let check = |q: StateId| {
            if q < n {
                Ok(q)
            } else {
                Err(Error::UnknownState(format!("#{q}")))
            }
        };
        let mut delta = vec![vec![Vec::new(); alphabet.len()]; n];
        for (p, e, q) in transitions {
            check(p)?;
            check(q)?;
            if e >= alphabet.len() {
                return Err(Error::UnknownEvent(format!("#{e}")));
            }
            delta[p][e].push(q);
        }
        for row in &mut delta {
            for targets in row {
                targets.sort_unstable();
                targets.dedup();
            }
        }
        let normalize = |it: &mut dyn Iterator<Item = StateId>| -> Result<Vec<StateId>> {
            let mut v = it.map(check).collect::<Result<Vec<_>>>()?;
            v.sort_unstable();
            v.dedup();
            Ok(v)
        };
        let initial = normalize(&mut initial.into_iter())?;
        let marked = normalize(&mut marked.into_iter())?;
        if initial.is_empty() {
            return Err(Error::invalid("an automaton needs at least one initial state"));
        }
        Ok(Nfa {
            states,
            state_index,
            alphabet,
            delta,
            initial,
            marked,
        })
    }

    pub fn builder() -> NfaBuilder {
        NfaBuilder::default()
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn alphabet(&self) -> &EventAlphabet {
        &self.alphabet
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.state_index.get(name).copied()
    }

    pub fn require_state(&self, name: &str) -> Result<StateId> {
        self.state_id(name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn marked(&self) -> &[StateId] {
        &self.marked
    }

    pub fn initial_set(&self) -> StateSet {
        StateSet::from_indices(self.num_states(), self.initial.iter().copied())
            .expect("initial states are validated")
    }

    pub fn successors(&self, q: StateId, e: EventId) -> &[StateId] {
        &self.delta[q][e]
    }

    pub fn has_transition(&self, p: StateId, e: EventId, q: StateId) -> bool {
        self.delta[p][e].binary_search(&q).is_ok()
    }

    /// All transitions in `(source, event, target)` order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, EventId, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(e, targets)| targets.iter().map(move |&q| (p, e, q)))
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().flatten().map(Vec::len).sum()
    }

    /// `δ(S, e)`.
    pub fn step(&self, set: &StateSet, e: EventId) -> Result<StateSet> {
        if set.universe() != self.num_states() {
            return Err(Error::DimensionMismatch {
                expected: self.num_states(),
                found: set.universe(),
            });
        }
        if e >= self.alphabet.len() {
            return Err(Error::UnknownEvent(format!("#{e}")));
        }
        let mut out = StateSet::empty(self.num_states());
        for q in set.iter() {
            for &r in &self.delta[q][e] {
                out.insert(r);
            }
        }
        Ok(out)
    }

    /// `δ(S, w)` for a whole word.
    pub fn run(&self, set: &StateSet, word: &[EventId]) -> Result<StateSet> {
        word.iter().try_fold(set.clone(), |s, &e| self.step(&s, e))
    }

    /// Closes `set` under unobservable transitions.
    pub fn unobservable_reach(&self, set: &StateSet) -> StateSet {
        let mut out = set.clone();
        let mut stack: Vec<StateId> = set.iter().collect();
        let hidden: Vec<EventId> = self.alphabet.unobservable_events().collect();
        while let Some(q) = stack.pop() {
            for &e in &hidden {
                for &r in &self.delta[q][e] {
                    if out.insert(r) {
                        stack.push(r);
                    }
                }
            }
        }
        out
    }

    /// `|I| = 1` and at most one successor per `(state, event)`.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.delta.iter().flatten().all(|t| t.len() <= 1)
    }

    /// Deterministic with exactly one successor per `(state, event)`.
    pub fn is_total_dfa(&self) -> bool {
        self.initial.len() == 1 && self.delta.iter().flatten().all(|t| t.len() == 1)
    }

    /// States reachable from the initial ones.
    pub fn accessible(&self) -> StateSet {
        let mut seen = self.initial_set();
        let mut stack = self.initial.clone();
        while let Some(q) = stack.pop() {
            for targets in &self.delta[q] {
                for &r in targets {
                    if seen.insert(r) {
                        stack.push(r);
                    }
                }
            }
        }
        seen
    }

    /// Every word of length at most `bound` generated by the automaton.
    pub fn bounded_language(&self, bound: usize) -> BTreeSet<Word> {
        let mut words = BTreeSet::new();
        let mut layer: Vec<(Word, StateSet)> = vec![(Vec::new(), self.initial_set())];
        words.insert(Vec::new());
        for _ in 0..bound {
            let mut next = Vec::new();
            for (word, set) in &layer {
                for e in self.alphabet.events() {
                    let reached = self.step(set, e).expect("indices are in range");
                    if !reached.is_empty() {
                        let mut w = word.clone();
                        w.push(e);
                        words.insert(w.clone());
                        next.push((w, reached));
                    }
                }
            }
            layer = next;
        }
        words
    }

    /// Names of the states in `set`, in index order.
    pub fn names_of(&self, set: &StateSet) -> Vec<String> {
        set.iter().map(|q| self.states[q].clone()).collect()
    }
}

/// Name-based incremental construction of an [`Nfa`].
#[derive(Debug, Default, Clone)]
pub struct NfaBuilder {
    states: Vec<String>,
    events: Vec<(String, bool)>,
    transitions: Vec<(String, String, String)>,
    initial: Vec<String>,
    marked: Vec<String>,
}

impl NfaBuilder {
    pub fn state(mut self, name: impl Into<String>) -> Self {
        self.states.push(name.into());
        self
    }

    pub fn states<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.states.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn event(mut self, name: impl Into<String>, observable: bool) -> Self {
        self.events.push((name.into(), observable));
        self
    }

    pub fn observable(self, name: impl Into<String>) -> Self {
        self.event(name, true)
    }

    pub fn unobservable(self, name: impl Into<String>) -> Self {
        self.event(name, false)
    }

    pub fn transition(
        mut self,
        source: impl Into<String>,
        event: impl Into<String>,
        target: impl Into<String>,
    ) -> Self {
        self.transitions
            .push((source.into(), event.into(), target.into()));
        self
    }

    pub fn initial(mut self, name: impl Into<String>) -> Self {
        self.initial.push(name.into());
        self
    }

    pub fn marked(mut self, name: impl Into<String>) -> Self {
        self.marked.push(name.into());
        self
    }

    pub fn build(self) -> Result<Nfa> {
        let alphabet = EventAlphabet::new(self.events)?;
        let index: HashMap<&str, StateId> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let state = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownState(name.to_string()))
        };
        let transitions = self
            .transitions
            .iter()
            .map(|(p, e, q)| Ok((state(p)?, alphabet.require(e)?, state(q)?)))
            .collect::<Result<Vec<_>>>()?;
        let initial = self
            .initial
            .iter()
            .map(|s| state(s))
            .collect::<Result<Vec<_>>>()?;
        let marked = self
            .marked
            .iter()
            .map(|s| state(s))
            .collect::<Result<Vec<_>>>()?;
        Nfa::from_parts(self.states, alphabet, transitions, initial, marked)
    }
}
