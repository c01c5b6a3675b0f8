//! Independent validation of witnesses against a model and critical set.

use serde::Serialize;

use crate::network::{Network, TupleCriticalSet};
use crate::nfa::{Nfa, StateId, StateSet};
use crate::petri::{CriticalMarkingSet, LabeledPetriNet, Marking};
use crate::verdict::{NetworkWitness, NfaWitness, PetriWitness, Step};

/// Result of a replay: `diagnostic` says what failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Replay {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl Replay {
    fn from(result: Result<(), String>) -> Self {
        match result {
            Ok(()) => Replay {
                valid: true,
                diagnostic: None,
            },
            Err(d) => Replay {
                valid: false,
                diagnostic: Some(d),
            },
        }
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Replays the step chain of one run; returns its observation.
fn replay_steps<C: PartialEq + std::fmt::Debug>(
    which: &str,
    run: &[Step<C>],
    end: &C,
    is_initial: impl Fn(&C) -> Result<bool, String>,
    mut has_step: impl FnMut(&C, &str, &C) -> Result<Option<bool>, String>,
) -> Result<Vec<String>, String> {
    let mut observation = Vec::new();
    let Some(first) = run.first() else {
        require(is_initial(end)?, || format!("{which} is empty but {end:?} is not initial"))?;
        return Ok(observation);
    };
    require(is_initial(&first.0)?, || format!("{which} starts in {:?}, which is not initial", first.0))?;
    for (i, Step(p, e, q)) in run.iter().enumerate() {
        if i > 0 {
            require(&run[i - 1].2 == p, || format!("{which}[{i}] starts in {p:?}, not where {which}[{}] ended", i - 1))?;
        }
        match has_step(p, e, q)? {
            None => return Err(format!("{which}[{i}]: no transition {p:?} -{e}-> {q:?}")),
            Some(true) => observation.push(e.clone()),
            Some(false) => {}
        }
    }
    let last = &run[run.len() - 1].2;
    require(last == end, || format!("{which} ends in {last:?}, not in the claimed {end:?}"))?;
    Ok(observation)
}

fn compare_observations(claimed: &[String], o1: &[String], o2: &[String]) -> Result<(), String> {
    require(o1 == claimed, || format!("run1 observes {o1:?}, not the claimed {claimed:?}"))?;
    require(o2 == claimed, || format!("run2 observes {o2:?}, not the claimed {claimed:?}"))
}

pub fn replay_nfa(g: &Nfa, critical: &StateSet, w: &NfaWitness) -> Replay {
    Replay::from(replay_nfa_inner(g, critical, w))
}

fn replay_nfa_inner(g: &Nfa, critical: &StateSet, w: &NfaWitness) -> Result<(), String> {
    let state = |name: &String| g.state_id(name).ok_or_else(|| format!("unknown state `{name}`"));
    let is_initial = |name: &String| Ok(g.initial().contains(&state(name)?));
    let has_step = |p: &String, e: &str, q: &String| {
        let sigma = g.alphabet();
        let e = sigma.id(e).ok_or_else(|| format!("unknown event `{e}`"))?;
        Ok(g.has_transition(state(p)?, e, state(q)?).then(|| sigma.is_observable(e)))
    };
    let o1 = replay_steps("run1", &w.run1, &w.end1, is_initial, has_step)?;
    let o2 = replay_steps("run2", &w.run2, &w.end2, is_initial, has_step)?;
    compare_observations(&w.observation, &o1, &o2)?;
    require(critical.contains(state(&w.end1)?), || format!("end1 `{}` is not critical", w.end1))?;
    require(!critical.contains(state(&w.end2)?), || format!("end2 `{}` is critical", w.end2))
}

pub fn replay_network(net: &Network, critical: &TupleCriticalSet, w: &NetworkWitness) -> Replay {
    Replay::from(replay_network_inner(net, critical, w))
}

fn replay_network_inner(net: &Network, critical: &TupleCriticalSet, w: &NetworkWitness) -> Result<(), String> {
    let tuple = |names: &Vec<String>| -> Result<Vec<StateId>, String> {
        net.tuple_from_names(names).map_err(|e| e.to_string())
    };
    let is_initial = |names: &Vec<String>| {
        let t = tuple(names)?;
        Ok(t.iter().zip(net.components()).all(|(q, c)| c.initial().contains(q)))
    };
    let has_step = |p: &Vec<String>, e: &str, q: &Vec<String>| {
        let sigma = net.alphabet();
        let e = sigma.id(e).ok_or_else(|| format!("unknown event `{e}`"))?;
        let (p, q) = (tuple(p)?, tuple(q)?);
        Ok(net.successors(&p, e).contains(&q).then(|| sigma.is_observable(e)))
    };
    let o1 = replay_steps("run1", &w.run1, &w.end1, is_initial, has_step)?;
    let o2 = replay_steps("run2", &w.run2, &w.end2, is_initial, has_step)?;
    compare_observations(&w.observation, &o1, &o2)?;
    require(critical.contains(&tuple(&w.end1)?), || format!("end1 {:?} is not critical", w.end1))?;
    require(!critical.contains(&tuple(&w.end2)?), || format!("end2 {:?} is critical", w.end2))
}

pub fn replay_petri(g: &LabeledPetriNet, critical: &CriticalMarkingSet, w: &PetriWitness) -> Replay {
    Replay::from(replay_petri_inner(g, critical, w))
}

fn replay_petri_inner(g: &LabeledPetriNet, critical: &CriticalMarkingSet, w: &PetriWitness) -> Result<(), String> {
    let run = |which: &str, seq: &[String], end: &[u64]| -> Result<Vec<String>, String> {
        let m = g
            .net
            .fire_sequence(&g.initial, seq)
            .map_err(|e| format!("{which}: {e}"))?;
        require(m.tokens() == end, || format!("{which} reaches {m}, not the claimed {}", Marking(end.to_vec())))?;
        g.observation(seq).map_err(|e| format!("{which}: {e}"))
    };
    let o1 = run("run1", &w.run1, &w.end1)?;
    let o2 = run("run2", &w.run2, &w.end2)?;
    compare_observations(&w.observation, &o1, &o2)?;
    require(critical.member(&Marking(w.end1.clone())), || format!("end1 {} is not critical", Marking(w.end1.clone())))?;
    require(!critical.member(&Marking(w.end2.clone())), || format!("end2 {} is critical", Marking(w.end2.clone())))
}
