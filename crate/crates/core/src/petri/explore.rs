//! Bounded breadth-first exploration of the reachability graph.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::net::{Marking, PetriNet, TransitionId};
use crate::error::{Error, Result};

/// Caps applied by [`explore`]; hitting any of them makes the exploration
/// non-exhaustive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreLimits {
    pub max_markings: usize,
    pub max_depth: usize,
    pub max_tokens: u64,
}

impl Default for ExploreLimits {
    fn default() -> Self {
        ExploreLimits {
            max_markings: 1_000_000,
            max_depth: 10_000,
            max_tokens: 1_000_000,
        }
    }
}

impl ExploreLimits {
    pub fn with_markings(max_markings: usize) -> Self {
        ExploreLimits {
            max_markings,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_markings == 0 || self.max_depth == 0 || self.max_tokens == 0 {
            return Err(Error::invalid("exploration limits must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitKind {
    Markings,
    Depth,
    Tokens,
}

/// Explored fragment of the reachability graph. Marking `0` is the initial
/// one; `parent[i]` is the BFS tree edge that discovered marking `i`.
#[derive(Debug, Clone, Default)]
pub struct ReachabilityGraph {
    pub markings: Vec<Marking>,
    pub depth: Vec<usize>,
    pub parent: Vec<Option<(usize, TransitionId)>>,
    /// Every expanded edge `(source, transition, target)`.
    pub edges: Vec<(usize, TransitionId, usize)>,
    index: HashMap<Marking, usize>,
}

impl ReachabilityGraph {
    pub fn len(&self) -> usize {
        self.markings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markings.is_empty()
    }

    pub fn id(&self, m: &Marking) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Marking) -> bool {
        self.index.contains_key(m)
    }

    /// Transition sequence leading from the initial marking to marking `i`.
    pub fn path_to(&self, mut i: usize) -> Vec<TransitionId> {
        let mut path = Vec::new();
        while let Some((p, t)) = self.parent[i] {
            path.push(t);
            i = p;
        }
        path.reverse();
        path
    }

    fn insert(&mut self, m: Marking, depth: usize, parent: Option<(usize, TransitionId)>) -> usize {
        let id = self.markings.len();
        self.index.insert(m.clone(), id);
        self.markings.push(m);
        self.depth.push(depth);
        self.parent.push(parent);
        id
    }
}

#[derive(Debug, Clone)]
pub struct Exploration {
    pub graph: ReachabilityGraph,
    /// The frontier emptied without any limit being hit: `graph` holds the
    /// whole reachability set.
    pub exhaustive: bool,
    pub limit_hit: Option<LimitKind>,
    /// Some discovered marking strictly covers an ancestor on its BFS path.
    /// Advisory only.
    pub unbounded_evidence: bool,
    pub peak_frontier: usize,
    /// Marking at which a `stop` predicate fired, if any.
    pub stopped_at: Option<usize>,
}

/// Breadth-first exploration from `m0`; transitions are tried in declared
/// order and the queue is FIFO.
pub fn explore(net: &PetriNet, m0: &Marking, limits: ExploreLimits) -> Result<Exploration> {
    explore_until(net, m0, limits, false, |_| false)
}

/// Like [`explore`] but stops as soon as `stop` holds for a newly discovered
/// marking (the initial marking included). With `detect_unbounded`, every new
/// marking is compared against its BFS ancestors.
pub fn explore_until(
    net: &PetriNet,
    m0: &Marking,
    limits: ExploreLimits,
    detect_unbounded: bool,
    mut stop: impl FnMut(&Marking) -> bool,
) -> Result<Exploration> {
    limits.validate()?;
    net.enabled(m0)?;
    let mut out = Exploration {
        graph: ReachabilityGraph::default(),
        exhaustive: false,
        limit_hit: None,
        unbounded_evidence: false,
        peak_frontier: 1,
        stopped_at: None,
    };
    let graph = &mut out.graph;
    if m0.tokens().iter().any(|&k| k > limits.max_tokens) {
        out.limit_hit = Some(LimitKind::Tokens);
        return Ok(out);
    }
    let root = graph.insert(m0.clone(), 0, None);
    if stop(m0) {
        out.stopped_at = Some(root);
        return Ok(out);
    }
    let mut queue = VecDeque::from([root]);
    let mut hit: Option<LimitKind> = None;
    'bfs: while let Some(id) = queue.pop_front() {
        let depth = graph.depth[id];
        for t in 0..net.num_transitions() {
            let m = &graph.markings[id];
            if !net.is_enabled_unchecked(m, t) {
                continue;
            }
            let next = net.fire_unchecked(m, t);
            if let Some(&target) = graph.index.get(&next) {
                if depth < limits.max_depth {
                    graph.edges.push((id, t, target));
                }
                continue;
            }
            if depth >= limits.max_depth {
                hit.get_or_insert(LimitKind::Depth);
                continue;
            }
            if next.tokens().iter().any(|&k| k > limits.max_tokens) {
                hit.get_or_insert(LimitKind::Tokens);
                continue;
            }
            if graph.len() >= limits.max_markings {
                hit = Some(LimitKind::Markings);
                break 'bfs;
            }
            if detect_unbounded && !out.unbounded_evidence {
                let mut a = Some(id);
                while let Some(i) = a {
                    if next.strictly_covers(&graph.markings[i]) {
                        out.unbounded_evidence = true;
                        break;
                    }
                    a = graph.parent[i].map(|(p, _)| p);
                }
            }
            let nid = graph.insert(next, depth + 1, Some((id, t)));
            graph.edges.push((id, t, nid));
            if stop(&graph.markings[nid]) {
                out.stopped_at = Some(nid);
                return Ok(out);
            }
            queue.push_back(nid);
            out.peak_frontier = out.peak_frontier.max(queue.len());
        }
    }
    out.limit_hit = hit;
    out.exhaustive = hit.is_none();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_transitions_is_exhaustive_singleton() {
        let net = PetriNet::new(vec!["p".into()], vec![], vec![vec![]], vec![vec![]]).unwrap();
        let e = explore(&net, &Marking(vec![3]), ExploreLimits::default()).unwrap();
        assert!(e.exhaustive);
        assert_eq!(e.graph.markings, vec![Marking(vec![3])]);
    }

    #[test]
    fn token_generator_hits_marking_limit() {
        let net = PetriNet::new(vec!["p".into()], vec!["t".into()], vec![vec![0]], vec![vec![1]]).unwrap();
        let e = explore_until(&net, &Marking(vec![0]), ExploreLimits::with_markings(100), true, |_| false)
            .unwrap();
        assert!(!e.exhaustive);
        assert_eq!(e.limit_hit, Some(LimitKind::Markings));
        assert_eq!(e.graph.len(), 100);
        assert!(e.unbounded_evidence);
    }

    #[test]
    fn depth_and_token_limits() {
        let net = PetriNet::new(vec!["p".into()], vec!["t".into()], vec![vec![0]], vec![vec![1]]).unwrap();
        let limits = ExploreLimits {
            max_markings: 1000,
            max_depth: 5,
            max_tokens: 1000,
        };
        let e = explore(&net, &Marking(vec![0]), limits).unwrap();
        assert_eq!(e.limit_hit, Some(LimitKind::Depth));
        assert_eq!(e.graph.len(), 6);
        let limits = ExploreLimits {
            max_tokens: 3,
            ..limits
        };
        let e = explore(&net, &Marking(vec![0]), limits).unwrap();
        assert_eq!(e.limit_hit, Some(LimitKind::Tokens));
        assert_eq!(e.graph.len(), 4);
    }

    #[test]
    fn cycle_at_depth_limit_is_still_exhaustive() {
        // p -> q -> p
        let net = PetriNet::new(
            vec!["p".into(), "q".into()],
            vec!["a".into(), "b".into()],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let limits = ExploreLimits {
            max_depth: 1,
            ..ExploreLimits::default()
        };
        let e = explore(&net, &Marking(vec![1, 0]), limits).unwrap();
        assert!(e.exhaustive);
        assert_eq!(e.graph.len(), 2);
        assert_eq!(e.graph.path_to(1), vec![0]);
    }

    #[test]
    fn zero_limits_are_rejected() {
        let net = PetriNet::new(vec!["p".into()], vec![], vec![vec![]], vec![vec![]]).unwrap();
        let limits = ExploreLimits {
            max_markings: 0,
            ..ExploreLimits::default()
        };
        assert!(explore(&net, &Marking(vec![0]), limits).is_err());
    }
}
