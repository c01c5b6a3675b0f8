//! Critical observability of a single automaton.
//!
//! [`check_nfa`] searches the twin automaton for a reachable pair
//! `(critical, non-critical)`; at most `|Q|²` pairs are ever visited.
//! [`check_nfa_oracle`] decides the same question directly from the observer
//! and is exponential; it exists to cross-check the twin search.

use std::collections::VecDeque;

use crate::alphabet::EventId;
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateId, StateSet};
use crate::observer::search_estimates;
use crate::twin::{twin_successors, Side};
use crate::verdict::{NfaVerdict, NfaWitness, SearchStats, Step, Verdict, Witness};

const NONE: usize = usize::MAX;

fn validate(g: &Nfa, critical: &StateSet) -> Result<()> {
    if critical.universe() != g.num_states() {
        return Err(Error::DimensionMismatch {
            expected: g.num_states(),
            found: critical.universe(),
        });
    }
    Ok(())
}

/// Breadth-first search of `G ⫾ G` from `I × I` for a pair in `C × (Q ∖ C)`.
///
/// Pairs are discovered in BFS order; within a level, successors are generated
/// by event index and then target index, so witnesses are shortest and
/// reproducible.
pub fn check_nfa(g: &Nfa, critical: &StateSet) -> Result<NfaVerdict> {
    validate(g, critical)?;
    let n = g.num_states();
    let is_hit = |x: StateId, y: StateId| critical.contains(x) && !critical.contains(y);

    let mut parent = vec![NONE; n * n];
    let mut via: Vec<(EventId, Side)> = vec![(0, Side::Both); n * n];
    let mut depth = vec![0usize; n * n];
    let mut seen = vec![false; n * n];
    let mut queue = VecDeque::new();
    let mut stats = SearchStats::default();

    let mut hit = None;
    'init: for &x in g.initial() {
        for &y in g.initial() {
            seen[x * n + y] = true;
            stats.states_explored += 1;
            queue.push_back((x, y));
            if is_hit(x, y) {
                hit = Some((x, y));
                break 'init;
            }
        }
    }
    let mut buf = Vec::new();
    'search: while hit.is_none() {
        let Some((x, y)) = queue.pop_front() else {
            break;
        };
        let src = x * n + y;
        for e in g.alphabet().events() {
            buf.clear();
            twin_successors(g, (x, y), e, &mut buf);
            for &((a, b), side) in &buf {
                stats.transitions += 1;
                let slot = a * n + b;
                if seen[slot] {
                    continue;
                }
                seen[slot] = true;
                parent[slot] = src;
                via[slot] = (e, side);
                depth[slot] = depth[src] + 1;
                stats.max_depth = stats.max_depth.max(depth[slot]);
                stats.states_explored += 1;
                queue.push_back((a, b));
                if is_hit(a, b) {
                    hit = Some((a, b));
                    break 'search;
                }
            }
        }
        stats.peak_frontier = stats.peak_frontier.max(queue.len());
    }
    stats.peak_frontier = stats.peak_frontier.max(queue.len());

    let Some((x, y)) = hit else {
        return Ok(Verdict::observable(stats));
    };

    // walk parent links back to an initial pair
    let mut moves = Vec::new();
    let mut slot = x * n + y;
    while parent[slot] != NONE {
        moves.push((parent[slot], via[slot], slot));
        slot = parent[slot];
    }
    moves.reverse();
    let name = |q: StateId| g.state_name(q).to_string();
    let event = |e: EventId| g.alphabet().name(e).to_string();
    let mut witness = Witness {
        observation: Vec::new(),
        run1: Vec::new(),
        run2: Vec::new(),
        end1: name(x),
        end2: name(y),
    };
    for (from, (e, side), to) in moves {
        let (x0, y0) = (from / n, from % n);
        let (x1, y1) = (to / n, to % n);
        if side != Side::Right {
            witness.run1.push(Step(name(x0), event(e), name(x1)));
        }
        if side != Side::Left {
            witness.run2.push(Step(name(y0), event(e), name(y1)));
        }
        if side == Side::Both {
            witness.observation.push(event(e));
        }
    }
    Ok(Verdict::refuted(witness, stats))
}

/// Reference decision procedure: every reachable observer estimate must lie
/// entirely inside or entirely outside `C`.
pub fn check_nfa_oracle(g: &Nfa, critical: &StateSet) -> Result<NfaVerdict> {
    validate(g, critical)?;
    let mixed = |s: &StateSet| s.intersects(critical) && !s.is_subset(critical);
    let search = search_estimates(g, mixed)?;
    let stats = SearchStats {
        states_explored: search.estimates.len(),
        transitions: search.transitions.len(),
        ..SearchStats::default()
    };
    let Some(i) = search.stopped_at else {
        return Ok(Verdict::observable(stats));
    };

    let estimate = &search.estimates[i];
    let x = estimate.iter().find(|&q| critical.contains(q)).expect("mixed");
    let y = estimate.iter().find(|&q| !critical.contains(q)).expect("mixed");
    let observation = search.word_to(i);
    let run1 = run_with_observation(g, &observation, x).expect("x is in the estimate");
    let run2 = run_with_observation(g, &observation, y).expect("y is in the estimate");
    let step = |&(p, e, q): &(StateId, EventId, StateId)| {
        Step(
            g.state_name(p).to_string(),
            g.alphabet().name(e).to_string(),
            g.state_name(q).to_string(),
        )
    };
    let witness: NfaWitness = Witness {
        observation: g.alphabet().render(&observation),
        run1: run1.iter().map(step).collect(),
        run2: run2.iter().map(step).collect(),
        end1: g.state_name(x).to_string(),
        end2: g.state_name(y).to_string(),
    };
    Ok(Verdict::refuted(witness, stats))
}

/// A run from some initial state to `target` whose projection is exactly
/// `observation`.
pub(crate) fn run_with_observation(
    g: &Nfa,
    observation: &[EventId],
    target: StateId,
) -> Option<Vec<(StateId, EventId, StateId)>> {
    let n = g.num_states();
    let width = observation.len() + 1;
    let key = |q: StateId, pos: usize| q * width + pos;
    let mut parent: Vec<Option<(usize, EventId)>> = vec![None; n * width];
    let mut seen = vec![false; n * width];
    let mut queue = VecDeque::new();
    for &i in g.initial() {
        seen[key(i, 0)] = true;
        queue.push_back((i, 0));
    }
    let goal = key(target, observation.len());
    while let Some((q, pos)) = queue.pop_front() {
        if key(q, pos) == goal {
            break;
        }
        for e in g.alphabet().events() {
            let next_pos = if g.alphabet().is_observable(e) {
                if pos < observation.len() && observation[pos] == e {
                    pos + 1
                } else {
                    continue;
                }
            } else {
                pos
            };
            for &r in g.successors(q, e) {
                let k = key(r, next_pos);
                if !seen[k] {
                    seen[k] = true;
                    parent[k] = Some((key(q, pos), e));
                    queue.push_back((r, next_pos));
                }
            }
        }
    }
    if !seen[goal] {
        return None;
    }
    let mut run = Vec::new();
    let mut k = goal;
    while let Some((prev, e)) = parent[k] {
        run.push((prev / width, e, k / width));
        k = prev;
    }
    run.reverse();
    Some(run)
}
