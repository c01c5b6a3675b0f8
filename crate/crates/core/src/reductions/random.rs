//! Seeded random inputs for the generators and the differential tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dag::Dag;
use crate::alphabet::EventAlphabet;
use crate::error::Result;
use crate::nfa::Nfa;
use crate::petri::{Marking, PetriNet};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// NFA with states `q0…`, each possible transition present with probability
/// `density`, a nonempty random initial set and random marked states.
pub fn random_nfa(rng: &mut impl Rng, states: usize, events: &[(&str, bool)], density: f64) -> Result<Nfa> {
    let alphabet = EventAlphabet::new(events.iter().copied())?;
    let mut transitions = Vec::new();
    for p in 0..states {
        for e in 0..alphabet.len() {
            for q in 0..states {
                if rng.gen_bool(density) {
                    transitions.push((p, e, q));
                }
            }
        }
    }
    let mut initial: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.3)).collect();
    if initial.is_empty() {
        initial.push(rng.gen_range(0..states));
    }
    let marked: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    Nfa::from_parts(names("q", states), alphabet, transitions, initial, marked)
}

/// Single-initial NFA over one observable event `a`.
pub fn random_unary_nfa(rng: &mut impl Rng, states: usize, density: f64) -> Result<Nfa> {
    let mut transitions = Vec::new();
    for p in 0..states {
        for q in 0..states {
            if rng.gen_bool(density) {
                transitions.push((p, 0, q));
            }
        }
    }
    let marked: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.3)).collect();
    Nfa::from_parts(names("q", states), EventAlphabet::new([("a", true)])?, transitions, [0], marked)
}

/// Total DFA over the observable `0` and `1`, initial state `q0`.
pub fn random_total_dfa(rng: &mut impl Rng, states: usize, marked_prob: f64) -> Result<Nfa> {
    let alphabet = EventAlphabet::new([("0", true), ("1", true)])?;
    let transitions: Vec<_> = (0..states)
        .flat_map(|p| [(p, 0), (p, 1)])
        .map(|(p, e)| (p, e, rng.gen_range(0..states)))
        .collect();
    let marked: Vec<usize> = (0..states).filter(|_| rng.gen_bool(marked_prob)).collect();
    Nfa::from_parts(names("q", states), alphabet, transitions, [0], marked)
}

/// Edges only go from lower to higher index, so the graph is acyclic.
pub fn random_dag(rng: &mut impl Rng, nodes: usize, edge_prob: f64) -> Result<Dag> {
    let mut edges = Vec::new();
    for p in 0..nodes {
        for q in p + 1..nodes {
            if rng.gen_bool(edge_prob) {
                edges.push((p, q));
            }
        }
    }
    let source = rng.gen_range(0..nodes);
    let target = rng.gen_range(0..nodes);
    Dag::new(names("v", nodes), edges, source, target)
}

/// Arbitrary net: arc weights in `0..=max_weight`, initial tokens in
/// `0..=max_tokens`.
pub fn random_petri(
    rng: &mut impl Rng,
    places: usize,
    transitions: usize,
    max_weight: u64,
    max_tokens: u64,
) -> Result<(PetriNet, Marking)> {
    let mut matrix = || -> Vec<Vec<u64>> {
        (0..places)
            .map(|_| (0..transitions).map(|_| rng.gen_range(0..=max_weight)).collect())
            .collect()
    };
    let pre = matrix();
    let post = matrix();
    let net = PetriNet::new(names("p", places), names("t", transitions), pre, post)?;
    let m0 = Marking((0..places).map(|_| rng.gen_range(0..=max_tokens)).collect());
    Ok((net, m0))
}

/// Net in which every transition moves one token between two places, so the
/// token count is invariant and the net is bounded.
pub fn random_conservative_petri(
    rng: &mut impl Rng,
    places: usize,
    transitions: usize,
    tokens: u64,
) -> Result<(PetriNet, Marking)> {
    let mut pre = vec![vec![0; places]; transitions];
    let mut post = vec![vec![0; places]; transitions];
    for t in 0..transitions {
        pre[t][rng.gen_range(0..places)] = 1;
        post[t][rng.gen_range(0..places)] = 1;
    }
    let net = PetriNet::from_columns(names("p", places), names("t", transitions), pre, post)?;
    let mut m0 = vec![0; places];
    for _ in 0..tokens {
        m0[rng.gen_range(0..places)] += 1;
    }
    Ok((net, Marking(m0)))
}

/// Each transition is unobservable with probability `eps_prob`, otherwise
/// labeled by one of `labels` letters `a`, `b`, ….
pub fn random_labels(rng: &mut impl Rng, transitions: usize, labels: usize, eps_prob: f64) -> Vec<Option<String>> {
    let letters: Vec<String> = (0..labels).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    (0..transitions)
        .map(|_| {
            if letters.is_empty() || rng.gen_bool(eps_prob) {
                None
            } else {
                letters.choose(rng).cloned()
            }
        })
        .collect()
}
