//! Exact decision procedure for networks over a single shared observable
//! event.
//!
//! For one-letter automata the set of states reached after `a^ℓ` depends only
//! on `ℓ`, and per component the sequence `S_i(ℓ)` is eventually periodic.
//! The composed estimate after `a^ℓ` is `∏_i S_i(ℓ)`, so scanning `ℓ` up to
//! `max_i tail_i + lcm_i period_i` covers every estimate that can occur.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{Network, TupleCriticalSet};
use crate::nfa::{Nfa, StateId, StateSet};
use crate::verdict::{NetworkVerdict, SearchStats, Step, Verdict, Witness};

/// Default cap on the number of lengths scanned.
pub const DEFAULT_MAX_SCAN: u64 = 1 << 28;

/// `S(ℓ) = δ(I, a^ℓ)` stored up to its first repetition.
#[derive(Debug, Clone)]
pub struct SubsetSequence {
    /// `S(0), …, S(tail + period − 1)`.
    pub sets: Vec<StateSet>,
    pub tail: usize,
    pub period: usize,
}

impl SubsetSequence {
    pub fn of(nfa: &Nfa) -> Result<Self> {
        if nfa.alphabet().len() != 1 {
            return Err(Error::invalid("subset sequences need a one-letter alphabet"));
        }
        let mut seen: HashMap<StateSet, usize> = HashMap::new();
        let mut sets = Vec::new();
        let mut current = nfa.initial_set();
        loop {
            if let Some(&first) = seen.get(&current) {
                let period = sets.len() - first;
                return Ok(SubsetSequence {
                    sets,
                    tail: first,
                    period,
                });
            }
            seen.insert(current.clone(), sets.len());
            let next = nfa.step(&current, 0)?;
            sets.push(current);
            current = next;
        }
    }

    pub fn at(&self, len: u64) -> &StateSet {
        let tail = self.tail as u64;
        let idx = if len < tail {
            len
        } else {
            tail + (len - tail) % self.period as u64
        };
        &self.sets[idx as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Periodicity {
    pub tail: usize,
    pub period: usize,
}

#[derive(Debug, Clone)]
pub struct UnaryVerdict {
    pub verdict: NetworkVerdict,
    /// Length `ℓ` of the refuting observation `a^ℓ`.
    pub length: Option<u64>,
    /// `max tail + lcm period`: every length below it was examined unless a
    /// witness was found first.
    pub scan_bound: u64,
    pub sequences: Vec<Periodicity>,
}

pub fn check_unary_network(net: &Network, critical: &TupleCriticalSet) -> Result<UnaryVerdict> {
    check_unary_network_with(net, critical, DEFAULT_MAX_SCAN)
}

/// `max_scan` caps the scan bound; a larger bound is reported as a resource
/// error carrying the exact value.
pub fn check_unary_network_with(
    net: &Network,
    critical: &TupleCriticalSet,
    max_scan: u64,
) -> Result<UnaryVerdict> {
    validate_unary(net)?;
    if critical.arity() != net.len() {
        return Err(Error::DimensionMismatch {
            expected: net.len(),
            found: critical.arity(),
        });
    }
    let sequences = net
        .components()
        .iter()
        .map(SubsetSequence::of)
        .collect::<Result<Vec<_>>>()?;

    let max_tail = sequences.iter().map(|s| s.tail).max().unwrap_or(0);
    let lcm = sequences
        .iter()
        .fold(BigUint::from(1u32), |acc, s| acc.lcm(&BigUint::from(s.period)));
    let exact = lcm + BigUint::from(max_tail);
    let scan_bound = match exact.to_u64() {
        Some(b) if b <= max_scan => b,
        _ => {
            return Err(Error::Resource {
                what: "unary scan length (max tail + lcm of periods)".into(),
                bound: exact.to_string(),
            })
        }
    };

    let mut stats = SearchStats {
        states_explored: sequences.iter().map(|s| s.sets.len()).sum(),
        ..SearchStats::default()
    };
    let periodicity = sequences
        .iter()
        .map(|s| Periodicity {
            tail: s.tail,
            period: s.period,
        })
        .collect();

    for len in 0..scan_bound {
        stats.max_depth = len as usize;
        let estimate: Vec<&StateSet> = sequences.iter().map(|s| s.at(len)).collect();
        if let Some((inside, outside)) = mixed_pair(&estimate, critical) {
            let witness = Witness {
                observation: vec![net.alphabet().name(0).to_string(); len as usize],
                run1: tuple_run(net, &sequences, &inside, len),
                run2: tuple_run(net, &sequences, &outside, len),
                end1: net.tuple_names(&inside),
                end2: net.tuple_names(&outside),
            };
            return Ok(UnaryVerdict {
                verdict: Verdict::refuted(witness, stats),
                length: Some(len),
                scan_bound,
                sequences: periodicity,
            });
        }
    }
    Ok(UnaryVerdict {
        verdict: Verdict::observable(stats),
        length: None,
        scan_bound,
        sequences: periodicity,
    })
}

fn validate_unary(net: &Network) -> Result<()> {
    let sigma = net.alphabet();
    if sigma.len() != 1 {
        return Err(Error::invalid(format!(
            "unary check needs one shared event, found {}",
            sigma.len()
        )));
    }
    if !sigma.is_observable(0) {
        return Err(Error::invalid("the unary event must be observable"));
    }
    for (i, c) in net.components().iter().enumerate() {
        if c.alphabet().len() != 1 {
            return Err(Error::invalid(format!("component {i} is not unary")));
        }
    }
    Ok(())
}

/// Finds a tuple of `∏ estimate` inside `C` and one outside, if both exist.
fn mixed_pair(
    estimate: &[&StateSet],
    critical: &TupleCriticalSet,
) -> Option<(Vec<StateId>, Vec<StateId>)> {
    if estimate.iter().any(|s| s.is_empty()) {
        return None;
    }
    let inside = critical
        .explicit_tuples()
        .filter(|t| t.iter().zip(estimate).all(|(&q, s)| s.contains(q)))
        .min()
        .cloned()
        .or_else(|| {
            critical.products().iter().find_map(|factors| {
                factors
                    .iter()
                    .zip(estimate)
                    .map(|(f, s)| {
                        s.iter()
                            .find(|&q| f.as_ref().is_none_or(|fs| fs.contains(q)))
                    })
                    .collect::<Option<Vec<_>>>()
            })
        })?;
    // lexicographic enumeration until the first tuple outside C
    let lists: Vec<Vec<StateId>> = estimate.iter().map(|s| s.iter().collect()).collect();
    let mut idx = vec![0usize; lists.len()];
    loop {
        let t: Vec<StateId> = idx.iter().zip(&lists).map(|(&i, l)| l[i]).collect();
        if !critical.contains(&t) {
            return Some((inside, t));
        }
        let mut k = lists.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// A composed run of length `len` ending in `end`, built backwards through the
/// subset sequences.
fn tuple_run(
    net: &Network,
    sequences: &[SubsetSequence],
    end: &[StateId],
    len: u64,
) -> Vec<Step<Vec<String>>> {
    let mut states = vec![end.to_vec()];
    let mut current = end.to_vec();
    for l in (0..len).rev() {
        let prev: Vec<StateId> = net
            .components()
            .iter()
            .zip(sequences)
            .zip(&current)
            .map(|((c, seq), &q)| {
                seq.at(l)
                    .iter()
                    .find(|&p| c.has_transition(p, 0, q))
                    .expect("every state of S(l+1) has a predecessor in S(l)")
            })
            .collect();
        states.push(prev.clone());
        current = prev;
    }
    states.reverse();
    let event = net.alphabet().name(0).to_string();
    states
        .windows(2)
        .map(|w| Step(net.tuple_names(&w[0]), event.clone(), net.tuple_names(&w[1])))
        .collect()
}
