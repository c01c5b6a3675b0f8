//! Reference answers computed by brute force, independent of the library's
//! decision procedures.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use critobs::petri::{CriticalMarkingSet, LabeledPetriNet, PetriNet};
use critobs::reductions::Dag;
use critobs::{EventAlphabet, Network, Nfa, StateSet, TupleCriticalSet};

/// Boolean transitive closure of the DAG, Floyd–Warshall style.
pub fn dag_reaches(d: &Dag) -> bool {
    let n = d.nodes().len();
    let mut r = vec![vec![false; n]; n];
    for v in 0..n {
        r[v][v] = true;
    }
    for &(p, q) in d.edges() {
        r[p][q] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r[d.source()][d.target()]
}

/// Some word is marked in every automaton. Depth-first search of the product
/// over tuples; events are matched by name.
pub fn intersection_nonempty(automata: &[Nfa]) -> bool {
    let events: Vec<String> = automata[0].alphabet().names().to_vec();
    let ids: Vec<Vec<usize>> = automata
        .iter()
        .map(|a| events.iter().map(|e| a.alphabet().id(e).unwrap()).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut stack: Vec<Vec<usize>> = tuples(&automata.iter().map(|a| a.initial().to_vec()).collect::<Vec<_>>());
    while let Some(t) = stack.pop() {
        if !seen.insert(t.clone()) {
            continue;
        }
        if t.iter().zip(automata).all(|(q, a)| a.marked().contains(q)) {
            return true;
        }
        for e in 0..events.len() {
            let succ: Vec<Vec<usize>> = t
                .iter()
                .enumerate()
                .map(|(i, &q)| automata[i].successors(q, ids[i][e]).to_vec())
                .collect();
            stack.extend(tuples(&succ));
        }
    }
    false
}

/// Cartesian product of the given lists.
pub fn tuples(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    lists.iter().fold(vec![Vec::new()], |acc, l| {
        acc.iter()
            .flat_map(|prefix| {
                l.iter().map(move |&q| {
                    let mut t = prefix.clone();
                    t.push(q);
                    t
                })
            })
            .collect()
    })
}

/// `δ(S, a)` on a one-letter automaton, computed from the transition list.
pub fn unary_step(g: &Nfa, set: &[bool]) -> Vec<bool> {
    let mut out = vec![false; g.num_states()];
    for (p, _, q) in g.transitions() {
        if set[p] {
            out[q] = true;
        }
    }
    out
}

/// Tries every `ℓ < bound`: is some product estimate `∏ S_i(ℓ)` mixed?
/// Returns the first such `ℓ`.
pub fn naive_unary_scan(net: &Network, c: &TupleCriticalSet, bound: u64) -> Option<u64> {
    let comps = net.components();
    let mut sets: Vec<Vec<bool>> = comps
        .iter()
        .map(|g| (0..g.num_states()).map(|q| g.initial().contains(&q)).collect())
        .collect();
    for len in 0..bound {
        let lists: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| s.iter().enumerate().filter(|(_, &b)| b).map(|(q, _)| q).collect())
            .collect();
        let all = tuples(&lists);
        let inside = all.iter().filter(|t| c.contains(t)).count();
        if inside > 0 && inside < all.len() {
            return Some(len);
        }
        sets = sets.iter().zip(comps).map(|(s, g)| unary_step(g, s)).collect();
    }
    None
}

/// Minimal `(tail, period)` of `S(ℓ)` read off the first `2^k + 1` terms.
pub fn direct_tail_period(g: &Nfa) -> (usize, usize) {
    let k = g.num_states();
    let mut seq = vec![(0..k).map(|q| g.initial().contains(&q)).collect::<Vec<_>>()];
    for _ in 0..(1usize << k) {
        let next = unary_step(g, seq.last().unwrap());
        seq.push(next);
    }
    for t in 0..seq.len() {
        if let Some(p) = (1..seq.len() - t).find(|&p| seq[t + p] == seq[t]) {
            return (t, p);
        }
    }
    unreachable!("a repetition exists among 2^k + 1 subsets")
}

/// All reachable markings by depth-first search, or `None` past `cap`.
pub fn reachable_markings(net: &PetriNet, m0: &[u64], cap: usize) -> Option<HashSet<Vec<u64>>> {
    let mut seen = HashSet::new();
    let mut stack = vec![m0.to_vec()];
    while let Some(m) = stack.pop() {
        if seen.contains(&m) {
            continue;
        }
        for t in 0..net.num_transitions() {
            if let Some(next) = fire(net, &m, t) {
                if !seen.contains(&next) {
                    stack.push(next);
                }
            }
        }
        seen.insert(m);
        if seen.len() > cap {
            return None;
        }
    }
    Some(seen)
}

pub fn fire(net: &PetriNet, m: &[u64], t: usize) -> Option<Vec<u64>> {
    (0..m.len())
        .map(|p| m[p].checked_sub(net.pre(p, t)).map(|k| k + net.post(p, t)))
        .collect()
}

/// Critical observability of a bounded labeled net by direct enumeration:
/// for every observation, the set of markings consistent with it, via
/// subset construction on the reachability graph.
pub fn petri_brute_force(g: &LabeledPetriNet, c: &CriticalMarkingSet, cap: usize) -> Option<bool> {
    let all = reachable_markings(&g.net, g.initial.tokens(), cap)?;
    let ids: HashMap<Vec<u64>, usize> = all.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let markings: Vec<Vec<u64>> = {
        let mut v = vec![Vec::new(); ids.len()];
        for (m, &i) in &ids {
            v[i] = m.clone();
        }
        v
    };
    let mut edges: Vec<Vec<(Option<String>, usize)>> = vec![Vec::new(); markings.len()];
    for (i, m) in markings.iter().enumerate() {
        for t in 0..g.net.num_transitions() {
            if let Some(next) = fire(&g.net, m, t) {
                edges[i].push((g.label(t).map(String::from), ids[&next]));
            }
        }
    }
    let closure = |set: BTreeSet<usize>| {
        let mut out = set.clone();
        let mut stack: Vec<usize> = set.into_iter().collect();
        while let Some(i) = stack.pop() {
            for (l, j) in &edges[i] {
                if l.is_none() && out.insert(*j) {
                    stack.push(*j);
                }
            }
        }
        out
    };
    let start = closure(BTreeSet::from([ids[g.initial.tokens()]]));
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(est) = stack.pop() {
        let inside = est
            .iter()
            .filter(|&&i| c.member(&critobs::Marking(markings[i].clone())))
            .count();
        if inside > 0 && inside < est.len() {
            return Some(false);
        }
        for sigma in g.alphabet() {
            let next: BTreeSet<usize> = est
                .iter()
                .flat_map(|&i| edges[i].iter())
                .filter(|(l, _)| l.as_deref() == Some(sigma.as_str()))
                .map(|&(_, j)| j)
                .collect();
            let next = closure(next);
            if !next.is_empty() && seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    Some(true)
}

/// Every state set of a universe of `n` states, as bitmasks.
pub fn all_subsets(n: usize) -> impl Iterator<Item = StateSet> {
    (0u32..1 << n).map(move |mask| StateSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap())
}

/// Partial deterministic automaton numbered by `code`, read in base `n + 1`
/// over the `(state, event)` slots: digit 0 is no transition, digit `k` is a
/// transition to state `k − 1`. Initial state 0.
pub fn partial_dfa(n: usize, code: usize, events: &[(&str, bool)]) -> Nfa {
    let sigma = EventAlphabet::new(events.iter().copied()).unwrap();
    let mut transitions = Vec::new();
    let mut c = code;
    for p in 0..n {
        for e in 0..events.len() {
            let digit = c % (n + 1);
            c /= n + 1;
            if digit > 0 {
                transitions.push((p, e, digit - 1));
            }
        }
    }
    Nfa::from_parts((0..n).map(|i| format!("q{i}")).collect(), sigma, transitions, [0], []).unwrap()
}

pub fn partial_dfa_count(n: usize, events: usize) -> usize {
    (n + 1).pow((n * events) as u32)
}
