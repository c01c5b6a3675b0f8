//! Critical observability for finite automata, networks of automata and
//! labeled Petri nets.
//!
//! A system is critically observable with respect to a set of critical states
//! if every state estimate consistent with an observation is either entirely
//! critical or entirely non-critical. Refutations come with a [`Witness`]: two
//! runs with the same observation, one ending in a critical configuration and
//! one ending outside the critical set.

pub mod alphabet;
pub mod cli;
pub mod compose;
pub mod error;
pub mod format;
pub mod network;
pub mod nfa;
pub mod observability;
pub mod observer;
pub mod petri;
pub mod reductions;
pub mod replay;
pub mod twin;
pub mod unary;
pub mod verdict;

pub use alphabet::{EventAlphabet, EventId, Word};
pub use compose::{compose, parallel_compose, Composition};
pub use error::{Error, Result};
pub use nfa::{Nfa, NfaBuilder, StateId, StateSet};
pub use observability::{check_nfa, check_nfa_oracle};
pub use observer::{observer, Observer};
pub use twin::{twin, TwinAutomaton};
pub use verdict::{
    NetworkVerdict, NetworkWitness, NfaVerdict, NfaWitness, Outcome, PetriWitness, SearchStats,
    Step, Verdict, Witness,
};
pub use network::{
    check_network, check_network_with, materialize_and_check, Network, NetworkSearch,
    TupleCriticalSet,
};
pub use unary::{check_unary_network, SubsetSequence, UnaryVerdict};
pub use petri::{
    check_petri, twin_net, CriticalMarkingSet, CriticalMode, ExploreLimits, LabeledPetriNet, Marking, PetriNet,
    PetriVerdict,
};
