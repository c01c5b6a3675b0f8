//! Critical observability of labeled nets with finite or co-finite critical
//! marking sets.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::explore::{explore_until, ExploreLimits, LimitKind};
use super::net::{LabeledPetriNet, Marking};
use super::twin::twin_net;
use crate::error::{Error, Result};
use crate::verdict::{Outcome, PetriWitness, SearchStats, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriticalMode {
    /// `C` is the listed markings.
    Finite,
    /// `C` is every reachable marking except the listed ones.
    CoFinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalMarkingSet {
    mode: CriticalMode,
    markings: Vec<Marking>,
    index: HashSet<Marking>,
}

impl CriticalMarkingSet {
    /// Rejects repeated entries and markings of mixed dimension.
    pub fn new(mode: CriticalMode, markings: Vec<Marking>) -> Result<Self> {
        let mut index = HashSet::new();
        for (i, m) in markings.iter().enumerate() {
            if m.len() != markings[0].len() {
                return Err(Error::DimensionMismatch {
                    expected: markings[0].len(),
                    found: m.len(),
                }
                .at(format!("markings[{i}]")));
            }
            if !index.insert(m.clone()) {
                return Err(Error::invalid(format!("marking {m} listed twice")).at(format!("markings[{i}]")));
            }
        }
        Ok(CriticalMarkingSet { mode, markings, index })
    }

    pub fn finite(markings: Vec<Marking>) -> Result<Self> {
        Self::new(CriticalMode::Finite, markings)
    }

    pub fn cofinite(markings: Vec<Marking>) -> Result<Self> {
        Self::new(CriticalMode::CoFinite, markings)
    }

    pub fn mode(&self) -> CriticalMode {
        self.mode
    }

    pub fn markings(&self) -> &[Marking] {
        &self.markings
    }

    /// Membership of a reachable marking.
    pub fn member(&self, m: &Marking) -> bool {
        let listed = self.index.contains(m);
        match self.mode {
            CriticalMode::Finite => listed,
            CriticalMode::CoFinite => !listed,
        }
    }

    /// The same set with the roles of `C` and its complement exchanged.
    pub fn complement(&self) -> Self {
        let mode = match self.mode {
            CriticalMode::Finite => CriticalMode::CoFinite,
            CriticalMode::CoFinite => CriticalMode::Finite,
        };
        CriticalMarkingSet {
            mode,
            ..self.clone()
        }
    }

    pub fn check_dimension(&self, places: usize) -> Result<()> {
        match self.markings.iter().position(|m| m.len() != places) {
            Some(i) => Err(Error::DimensionMismatch {
                expected: places,
                found: self.markings[i].len(),
            }
            .at(format!("markings[{i}]"))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetriVerdict {
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PetriWitness>,
    /// The whole twin reachability set was explored.
    pub exhaustive: bool,
    pub limits: ExploreLimits,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit_hit: Option<LimitKind>,
    pub stats: SearchStats,
    /// Some twin marking strictly covered one of its ancestors.
    pub unbounded_evidence: bool,
}

/// Searches the twin net for a marking `M` with `M(P) ∈ C` and `M(P′) ∉ C`.
///
/// Only this one orientation is tested: the twin reachability set is closed
/// under swapping the two halves, so the opposite orientation adds nothing.
pub fn check_petri(g: &LabeledPetriNet, critical: &CriticalMarkingSet, limits: ExploreLimits) -> Result<PetriVerdict> {
    critical.check_dimension(g.net.num_places())?;
    let twin = twin_net(g)?;
    let e = explore_until(&twin.net, &twin.initial, limits, true, |m| {
        critical.member(&twin.left(m)) && !critical.member(&twin.right(m))
    })?;
    let graph = &e.graph;
    let stats = SearchStats {
        states_explored: graph.len(),
        transitions: graph.edges.len(),
        peak_frontier: e.peak_frontier,
        max_depth: graph.depth.iter().copied().max().unwrap_or(0),
    };
    let witness = e.stopped_at.map(|i| {
        let (first, second) = twin.split(&graph.path_to(i));
        let names = |seq: Vec<usize>| -> Vec<String> {
            seq.into_iter().map(|t| g.net.transition_name(t).to_string()).collect()
        };
        let run1 = names(first);
        let observation = g.observation(&run1).expect("twin runs use source transitions");
        Witness {
            observation,
            run1,
            run2: names(second),
            end1: twin.left(&graph.markings[i]).0,
            end2: twin.right(&graph.markings[i]).0,
        }
    });
    let outcome = match (&witness, e.exhaustive) {
        (Some(_), _) => Outcome::NotCriticallyObservable,
        (None, true) => Outcome::CriticallyObservable,
        (None, false) => Outcome::Unknown,
    };
    Ok(PetriVerdict {
        outcome,
        witness,
        exhaustive: e.exhaustive,
        limits,
        limit_hit: e.limit_hit,
        stats,
        unbounded_evidence: e.unbounded_evidence,
    })
}
