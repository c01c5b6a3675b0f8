//! Networks of automata composed by synchronous product, and the on-the-fly
//! twin search that decides their critical observability without building the
//! product.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::alphabet::{EventAlphabet, EventId};
use crate::compose::{cartesian, compose, merged_alphabet};
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateId, StateSet};
use crate::observability::check_nfa;
use crate::twin::Side;
use crate::verdict::{NetworkVerdict, NetworkWitness, SearchStats, Step, Verdict, Witness};

/// Default cap on composed states for [`materialize_and_check`].
pub const DEFAULT_PRODUCT_CAP: usize = 1_000_000;

/// `G_1 ‖ … ‖ G_n`, kept as its components.
#[derive(Debug, Clone)]
pub struct Network {
    components: Vec<Nfa>,
    alphabet: EventAlphabet,
    /// `local[i][e]`: component `i`'s index for global event `e`.
    local: Vec<Vec<Option<EventId>>>,
}

impl Network {
    pub fn new(components: Vec<Nfa>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("a network needs at least one component"));
        }
        let refs: Vec<&Nfa> = components.iter().collect();
        let alphabet = merged_alphabet(&refs)?;
        let local = components
            .iter()
            .map(|c| alphabet.names().iter().map(|n| c.alphabet().id(n)).collect())
            .collect();
        Ok(Network {
            components,
            alphabet,
            local,
        })
    }

    pub fn components(&self) -> &[Nfa] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Union of the component alphabets.
    pub fn alphabet(&self) -> &EventAlphabet {
        &self.alphabet
    }

    pub fn local_event(&self, component: usize, e: EventId) -> Option<EventId> {
        self.local[component][e]
    }

    pub fn initial_tuples(&self) -> Vec<Vec<StateId>> {
        let lists: Vec<&[StateId]> = self.components.iter().map(|c| c.initial()).collect();
        cartesian(&lists)
    }

    /// Composed successors of `tuple` under global event `e`: every component
    /// owning `e` moves, the others stay put.
    pub fn successors(&self, tuple: &[StateId], e: EventId) -> Vec<Vec<StateId>> {
        let choices: Vec<&[StateId]> = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| match self.local[i][e] {
                Some(le) => c.successors(tuple[i], le),
                None => std::slice::from_ref(&tuple[i]),
            })
            .collect();
        cartesian(&choices)
    }

    pub fn tuple_names(&self, tuple: &[StateId]) -> Vec<String> {
        tuple
            .iter()
            .zip(&self.components)
            .map(|(&q, c)| c.state_name(q).to_string())
            .collect()
    }

    pub fn tuple_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<StateId>> {
        if names.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: names.len(),
            });
        }
        names
            .iter()
            .zip(&self.components)
            .map(|(n, c)| c.require_state(n.as_ref()))
            .collect()
    }

    /// `∏ |Q_i|`, saturating.
    pub fn product_size(&self) -> u128 {
        self.components
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.num_states() as u128))
    }
}

/// A set of critical state tuples: explicit tuples plus optional product
/// terms `A_1 × … × A_n` (a missing factor stands for all states of that
/// component). Product terms are only ever tested for membership.
#[derive(Debug, Clone)]
pub struct TupleCriticalSet {
    sizes: Vec<usize>,
    tuples: HashSet<Vec<StateId>>,
    products: Vec<Vec<Option<StateSet>>>,
}

impl TupleCriticalSet {
    pub fn empty(net: &Network) -> Self {
        TupleCriticalSet {
            sizes: net.components.iter().map(Nfa::num_states).collect(),
            tuples: HashSet::new(),
            products: Vec::new(),
        }
    }

    pub fn from_tuples(
        net: &Network,
        tuples: impl IntoIterator<Item = Vec<StateId>>,
    ) -> Result<Self> {
        let mut set = Self::empty(net);
        for t in tuples {
            set.add_tuple(t)?;
        }
        Ok(set)
    }

    /// Parses tuples of state names.
    pub fn from_names<S: AsRef<str>>(net: &Network, tuples: &[Vec<S>]) -> Result<Self> {
        let mut set = Self::empty(net);
        for t in tuples {
            set.add_tuple(net.tuple_from_names(t)?)?;
        }
        Ok(set)
    }

    pub fn arity(&self) -> usize {
        self.sizes.len()
    }

    pub fn add_tuple(&mut self, tuple: Vec<StateId>) -> Result<()> {
        if tuple.len() != self.arity() {
            return Err(Error::DimensionMismatch {
                expected: self.arity(),
                found: tuple.len(),
            });
        }
        for (&q, &n) in tuple.iter().zip(&self.sizes) {
            if q >= n {
                return Err(Error::UnknownState(format!("#{q}")));
            }
        }
        self.tuples.insert(tuple);
        Ok(())
    }

    pub fn add_product(&mut self, factors: Vec<Option<StateSet>>) -> Result<()> {
        if factors.len() != self.arity() {
            return Err(Error::DimensionMismatch {
                expected: self.arity(),
                found: factors.len(),
            });
        }
        for (f, &n) in factors.iter().zip(&self.sizes) {
            if let Some(set) = f {
                if set.universe() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: set.universe(),
                    });
                }
            }
        }
        self.products.push(factors);
        Ok(())
    }

    pub fn contains(&self, tuple: &[StateId]) -> bool {
        self.tuples.contains(tuple)
            || self.products.iter().any(|factors| {
                factors
                    .iter()
                    .zip(tuple)
                    .all(|(f, &q)| f.as_ref().is_none_or(|s| s.contains(q)))
            })
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
            && self
                .products
                .iter()
                .all(|f| f.iter().any(|s| s.as_ref().is_some_and(StateSet::is_empty)))
    }

    pub fn explicit_tuples(&self) -> impl Iterator<Item = &Vec<StateId>> {
        self.tuples.iter()
    }

    pub(crate) fn products(&self) -> &[Vec<Option<StateSet>>] {
        &self.products
    }

    fn check_arity(&self, net: &Network) -> Result<()> {
        let sizes: Vec<usize> = net.components.iter().map(Nfa::num_states).collect();
        if sizes != self.sizes {
            return Err(Error::DimensionMismatch {
                expected: net.len(),
                found: self.arity(),
            });
        }
        Ok(())
    }
}

/// Search strategy for [`check_network_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NetworkSearch {
    /// Breadth-first with a visited set over pairs of tuples.
    #[default]
    Bfs,
    /// Iterative deepening over simple paths; memory proportional to the
    /// current path only, exponential time.
    IterativeDeepening,
}

/// Decides critical observability of the network by searching the twin of
/// the composed system on the fly.
pub fn check_network(net: &Network, critical: &TupleCriticalSet) -> Result<NetworkVerdict> {
    check_network_with(net, critical, NetworkSearch::Bfs)
}

pub fn check_network_with(
    net: &Network,
    critical: &TupleCriticalSet,
    search: NetworkSearch,
) -> Result<NetworkVerdict> {
    critical.check_arity(net)?;
    let twin = TwinSearch { net, critical };
    Ok(match search {
        NetworkSearch::Bfs => twin.bfs(),
        NetworkSearch::IterativeDeepening => twin.iterative_deepening(),
    })
}

/// One move of the composed twin: `(from, event, side, to)` with both tuples
/// concatenated.
type TwinMove = (Vec<StateId>, EventId, Side, Vec<StateId>);

struct TwinSearch<'a> {
    net: &'a Network,
    critical: &'a TupleCriticalSet,
}

impl TwinSearch<'_> {
    fn n(&self) -> usize {
        self.net.len()
    }

    fn is_hit(&self, pair: &[StateId]) -> bool {
        let (left, right) = pair.split_at(self.n());
        self.critical.contains(left) && !self.critical.contains(right)
    }

    fn initial_pairs(&self) -> Vec<Vec<StateId>> {
        let init = self.net.initial_tuples();
        let mut out = Vec::with_capacity(init.len() * init.len());
        for a in &init {
            for b in &init {
                out.push([a.as_slice(), b.as_slice()].concat());
            }
        }
        out
    }

    /// Successors of a twin state: observable events move both copies,
    /// unobservable events move one.
    fn successors(&self, pair: &[StateId], out: &mut Vec<(EventId, Side, Vec<StateId>)>) {
        let (left, right) = pair.split_at(self.n());
        let sigma = self.net.alphabet();
        for e in sigma.events() {
            let ls = self.net.successors(left, e);
            if sigma.is_observable(e) {
                if ls.is_empty() {
                    continue;
                }
                let rs = self.net.successors(right, e);
                for l in &ls {
                    for r in &rs {
                        out.push((e, Side::Both, [l.as_slice(), r.as_slice()].concat()));
                    }
                }
            } else {
                for l in ls {
                    out.push((e, Side::Left, [l.as_slice(), right].concat()));
                }
                for r in self.net.successors(right, e) {
                    out.push((e, Side::Right, [left, r.as_slice()].concat()));
                }
            }
        }
    }

    fn bfs(&self) -> NetworkVerdict {
        let mut index: HashMap<Vec<StateId>, usize> = HashMap::new();
        let mut nodes: Vec<Vec<StateId>> = Vec::new();
        let mut parent: Vec<Option<(usize, EventId, Side)>> = Vec::new();
        let mut depth: Vec<usize> = Vec::new();
        let mut queue = VecDeque::new();
        let mut stats = SearchStats::default();
        let mut hit = None;

        for pair in self.initial_pairs() {
            if index.contains_key(&pair) {
                continue;
            }
            let id = nodes.len();
            index.insert(pair.clone(), id);
            let found = self.is_hit(&pair);
            nodes.push(pair);
            parent.push(None);
            depth.push(0);
            queue.push_back(id);
            if found {
                hit = Some(id);
                break;
            }
        }
        let mut buf = Vec::new();
        'search: while hit.is_none() {
            let Some(id) = queue.pop_front() else { break };
            buf.clear();
            self.successors(&nodes[id], &mut buf);
            for (e, side, next) in buf.drain(..) {
                stats.transitions += 1;
                if index.contains_key(&next) {
                    continue;
                }
                let nid = nodes.len();
                index.insert(next.clone(), nid);
                let found = self.is_hit(&next);
                nodes.push(next);
                parent.push(Some((id, e, side)));
                depth.push(depth[id] + 1);
                stats.max_depth = stats.max_depth.max(depth[id] + 1);
                queue.push_back(nid);
                if found {
                    hit = Some(nid);
                    break 'search;
                }
            }
            stats.peak_frontier = stats.peak_frontier.max(queue.len());
        }
        stats.peak_frontier = stats.peak_frontier.max(queue.len());
        stats.states_explored = nodes.len();

        let Some(mut id) = hit else {
            return Verdict::observable(stats);
        };
        let end = nodes[id].clone();
        let mut moves = Vec::new();
        while let Some((prev, e, side)) = parent[id] {
            moves.push((nodes[prev].clone(), e, side, nodes[id].clone()));
            id = prev;
        }
        moves.reverse();
        Verdict::refuted(self.witness(&moves, &end), stats)
    }

    fn iterative_deepening(&self) -> NetworkVerdict {
        let mut stats = SearchStats::default();
        let roots = self.initial_pairs();
        for root in &roots {
            stats.states_explored += 1;
            if self.is_hit(root) {
                return Verdict::refuted(self.witness(&[], root), stats);
            }
        }
        // a simple path visits each twin pair at most once
        let pairs = self.net.product_size().saturating_mul(self.net.product_size());
        let mut limit = 1;
        loop {
            let mut cut_off = false;
            for root in &roots {
                let mut path = vec![root.clone()];
                let mut moves = Vec::new();
                if self.dfs(&mut path, &mut moves, limit, &mut cut_off, &mut stats) {
                    let end = path.last().expect("nonempty path").clone();
                    stats.max_depth = moves.len();
                    return Verdict::refuted(self.witness(&moves, &end), stats);
                }
            }
            stats.max_depth = limit;
            // no simple path reached the depth limit, so nothing new lies deeper
            if !cut_off || limit as u128 >= pairs {
                return Verdict::observable(stats);
            }
            limit += 1;
        }
    }

    fn dfs(
        &self,
        path: &mut Vec<Vec<StateId>>,
        moves: &mut Vec<TwinMove>,
        limit: usize,
        cut_off: &mut bool,
        stats: &mut SearchStats,
    ) -> bool {
        let current = path.last().expect("nonempty path").clone();
        let mut succ = Vec::new();
        self.successors(&current, &mut succ);
        for (e, side, next) in succ {
            stats.transitions += 1;
            if path.contains(&next) {
                continue;
            }
            if moves.len() + 1 == limit {
                stats.states_explored += 1;
                *cut_off = true;
                if self.is_hit(&next) {
                    moves.push((current.clone(), e, side, next.clone()));
                    path.push(next);
                    return true;
                }
                continue;
            }
            moves.push((current.clone(), e, side, next.clone()));
            path.push(next);
            stats.peak_frontier = stats.peak_frontier.max(path.len());
            if self.dfs(path, moves, limit, cut_off, stats) {
                return true;
            }
            path.pop();
            moves.pop();
        }
        false
    }

    fn witness(&self, moves: &[TwinMove], end: &[StateId]) -> NetworkWitness {
        let n = self.n();
        let names = |t: &[StateId]| self.net.tuple_names(t);
        let mut w = Witness {
            observation: Vec::new(),
            run1: Vec::new(),
            run2: Vec::new(),
            end1: names(&end[..n]),
            end2: names(&end[n..]),
        };
        for (from, e, side, to) in moves {
            let event = self.net.alphabet().name(*e).to_string();
            if *side != Side::Right {
                w.run1
                    .push(Step(names(&from[..n]), event.clone(), names(&to[..n])));
            }
            if *side != Side::Left {
                w.run2
                    .push(Step(names(&from[n..]), event.clone(), names(&to[n..])));
            }
            if *side == Side::Both {
                w.observation.push(event);
            }
        }
        w
    }
}

/// Builds the composition explicitly (up to `cap` states) and runs
/// [`check_nfa`] on it. The witness is mapped back to component tuples.
pub fn materialize_and_check(
    net: &Network,
    critical: &TupleCriticalSet,
    cap: usize,
) -> Result<NetworkVerdict> {
    critical.check_arity(net)?;
    let refs: Vec<&Nfa> = net.components.iter().collect();
    let product = compose(&refs, Some(cap))?;
    let g = &product.automaton;
    let c = StateSet::from_indices(
        g.num_states(),
        product
            .tuples
            .iter()
            .enumerate()
            .filter(|(_, t)| critical.contains(t))
            .map(|(i, _)| i),
    )?;
    let verdict = check_nfa(g, &c)?;
    let to_tuple = |name: &str| {
        let q = g.state_id(name).expect("witness names come from the product");
        net.tuple_names(&product.tuples[q])
    };
    let convert = |steps: &[Step<String>]| {
        steps
            .iter()
            .map(|Step(p, e, q)| Step(to_tuple(p), e.clone(), to_tuple(q)))
            .collect()
    };
    let witness = verdict.witness.map(|w| Witness {
        observation: w.observation,
        run1: convert(&w.run1),
        run2: convert(&w.run2),
        end1: to_tuple(&w.end1),
        end2: to_tuple(&w.end2),
    });
    Ok(Verdict {
        outcome: verdict.outcome,
        witness,
        stats: verdict.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Outcome;

    fn chain(states: [&str; 3], e1: (&str, bool), e2: (&str, bool)) -> Nfa {
        Nfa::builder()
            .states(states)
            .event(e1.0, e1.1)
            .event(e2.0, e2.1)
            .transition(states[0], e1.0, states[1])
            .transition(states[1], e2.0, states[2])
            .initial(states[0])
            .build()
            .unwrap()
    }

    /// `G1: 0 -a-> 1 -b-> 2`, `G2: 0 -c-> 1 -a-> 2`, `a` unobservable.
    fn handshake() -> Network {
        Network::new(vec![
            chain(["0", "1", "2"], ("a", false), ("b", true)),
            chain(["0", "1", "2"], ("c", true), ("a", false)),
        ])
        .unwrap()
    }

    #[test]
    fn final_state_of_handshake_network_is_observable() {
        let net = handshake();
        let c = TupleCriticalSet::from_names(&net, &[vec!["2", "2"]]).unwrap();
        for v in [
            check_network(&net, &c).unwrap(),
            check_network_with(&net, &c, NetworkSearch::IterativeDeepening).unwrap(),
            materialize_and_check(&net, &c, DEFAULT_PRODUCT_CAP).unwrap(),
        ] {
            assert_eq!(v.outcome, Outcome::CriticallyObservable);
        }
    }

    #[test]
    fn hidden_shared_event_mixes_estimates() {
        // after observing c the system is in (0,1) or (1,2)
        let net = handshake();
        let c = TupleCriticalSet::from_names(&net, &[vec!["1", "2"]]).unwrap();
        let v = check_network(&net, &c).unwrap();
        assert_eq!(v.outcome, Outcome::NotCriticallyObservable);
        let w = v.witness.unwrap();
        assert_eq!(w.observation, vec!["c"]);
        assert_eq!(w.end1, vec!["1", "2"]);
        assert_eq!(w.end2, vec!["0", "1"]);
        let id = check_network_with(&net, &c, NetworkSearch::IterativeDeepening).unwrap();
        assert_eq!(id.witness.unwrap().observation, vec!["c"]);
    }

    #[test]
    fn single_component_matches_check_nfa() {
        let g = crate::nfa::tests::loop_and_branch();
        let net = Network::new(vec![g.clone()]).unwrap();
        let c = TupleCriticalSet::from_names(&net, &[vec!["0"]]).unwrap();
        let v = check_network(&net, &c).unwrap();
        let direct = check_nfa(&g, &StateSet::from_names(&g, &["0"]).unwrap()).unwrap();
        assert_eq!(v.outcome, direct.outcome);
        assert_eq!(v.witness.unwrap().observation, direct.witness.unwrap().observation);
    }

    #[test]
    fn empty_critical_set_is_observable() {
        let net = handshake();
        let c = TupleCriticalSet::empty(&net);
        assert!(c.is_empty());
        assert!(materialize_and_check(&net, &c, 10).unwrap().is_observable());
        assert!(check_network(&net, &c).unwrap().is_observable());
    }

    #[test]
    fn product_terms_are_membership_only() {
        let net = handshake();
        let mut c = TupleCriticalSet::empty(&net);
        let second = StateSet::from_names(&net.components()[1], &["2"]).unwrap();
        c.add_product(vec![None, Some(second)]).unwrap();
        assert!(c.contains(&[0, 2]) && c.contains(&[1, 2]));
        assert!(!c.contains(&[1, 1]));
        // (1,2) and (0,1) share observation c
        assert_eq!(
            check_network(&net, &c).unwrap().outcome,
            Outcome::NotCriticallyObservable
        );
    }

    #[test]
    fn arity_and_consistency_errors() {
        let net = handshake();
        assert!(TupleCriticalSet::from_names(&net, &[vec!["0"]]).is_err());
        assert!(TupleCriticalSet::from_names(&net, &[vec!["0", "9"]]).is_err());
        let bad = Network::new(vec![
            chain(["0", "1", "2"], ("a", true), ("b", true)),
            chain(["0", "1", "2"], ("c", true), ("a", false)),
        ]);
        assert!(matches!(bad, Err(Error::InconsistentObservability(_))));
        let other = Network::new(vec![chain(["x", "y", "z"], ("a", false), ("b", true))]).unwrap();
        let c = TupleCriticalSet::empty(&other);
        assert!(check_network(&net, &c).is_err());
    }

    #[test]
    fn materialize_respects_cap() {
        let net = handshake();
        let c = TupleCriticalSet::empty(&net);
        assert!(materialize_and_check(&net, &c, 2).unwrap_err().is_resource());
    }
}
