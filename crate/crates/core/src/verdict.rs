//! Verdicts and the witnesses that back refutations.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    CriticallyObservable,
    NotCriticallyObservable,
    /// Exploration limits were hit before a witness was found.
    Unknown,
}

impl Outcome {
    pub fn describe(self) -> &'static str {
        match self {
            Outcome::CriticallyObservable => "critically observable",
            Outcome::NotCriticallyObservable => "not critically observable",
            Outcome::Unknown => "unknown",
        }
    }
}

/// Counters collected during a search.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Distinct search states discovered.
    pub states_explored: usize,
    pub transitions: usize,
    pub peak_frontier: usize,
    pub max_depth: usize,
}

/// One automaton transition `[source, event, target]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step<C>(pub C, pub String, pub C);

/// Two runs with the same observation, the first ending in a critical
/// configuration and the second in a non-critical one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness<T, C> {
    pub observation: Vec<String>,
    pub run1: Vec<T>,
    pub run2: Vec<T>,
    pub end1: C,
    pub end2: C,
}

/// Witness over the states of a single automaton.
pub type NfaWitness = Witness<Step<String>, String>;
/// Witness over state tuples of a network.
pub type NetworkWitness = Witness<Step<Vec<String>>, Vec<String>>;
/// Witness over a labeled Petri net: firing sequences and end markings.
pub type PetriWitness = Witness<String, Vec<u64>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict<W> {
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<W>,
    pub stats: SearchStats,
}

impl<W> Verdict<W> {
    pub fn observable(stats: SearchStats) -> Self {
        Verdict {
            outcome: Outcome::CriticallyObservable,
            witness: None,
            stats,
        }
    }

    pub fn refuted(witness: W, stats: SearchStats) -> Self {
        Verdict {
            outcome: Outcome::NotCriticallyObservable,
            witness: Some(witness),
            stats,
        }
    }

    pub fn is_observable(&self) -> bool {
        self.outcome == Outcome::CriticallyObservable
    }
}

pub type NfaVerdict = Verdict<NfaWitness>;
pub type NetworkVerdict = Verdict<NetworkWitness>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_json_shape() {
        let w: NfaWitness = Witness {
            observation: vec!["a".into()],
            run1: vec![Step("0".into(), "a".into(), "0".into())],
            run2: vec![Step("0".into(), "a".into(), "1".into())],
            end1: "0".into(),
            end2: "1".into(),
        };
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "observation": ["a"],
                "run1": [["0", "a", "0"]],
                "run2": [["0", "a", "1"]],
                "end1": "0",
                "end2": "1"
            })
        );
        let back: NfaWitness = serde_json::from_value(v).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn outcome_serializes_snake_case() {
        assert_eq!(
            serde_json::to_string(&Outcome::NotCriticallyObservable).unwrap(),
            "\"not_critically_observable\""
        );
    }
}
