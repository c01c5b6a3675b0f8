//! Labeled Petri nets: firing semantics, bounded exploration, the twin net and
//! the critical observability check built on it.

pub mod check;
pub mod explore;
pub mod net;
pub mod twin;

pub use check::{check_petri, CriticalMarkingSet, CriticalMode, PetriVerdict};
pub use explore::{explore, explore_until, Exploration, ExploreLimits, LimitKind, ReachabilityGraph};
pub use net::{LabeledPetriNet, Marking, PetriNet, PlaceId, TransitionId};
pub use twin::{twin_net, TwinNet, LAMBDA};
