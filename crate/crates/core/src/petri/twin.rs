//! Label-based synchronization of a labeled net with a place-disjoint copy
//! of itself.

use std::collections::HashSet;

use super::net::{LabeledPetriNet, Marking, PetriNet, TransitionId};
use crate::error::Result;

/// Reserved name of the empty move in twin transition names.
pub const LAMBDA: &str = "λ";

/// The twin net `N‖` over places `P ∪ P′`.
///
/// Transitions are pairs: `(t, λ)` and `(λ, t)` for every unobservable `t`,
/// and `(t1, t2)` for every two observable transitions with the same label.
#[derive(Debug, Clone)]
pub struct TwinNet {
    pub net: PetriNet,
    /// `[M0 M0]`.
    pub initial: Marking,
    /// Source transitions behind every twin transition; `None` is `λ`.
    pub pairs: Vec<(Option<TransitionId>, Option<TransitionId>)>,
    /// `|P|` of the source net.
    pub places: usize,
}

impl TwinNet {
    /// `M(P)`.
    pub fn left(&self, m: &Marking) -> Marking {
        Marking(m.tokens()[..self.places].to_vec())
    }

    /// `M(P′)`.
    pub fn right(&self, m: &Marking) -> Marking {
        Marking(m.tokens()[self.places..].to_vec())
    }

    /// Splits a twin firing sequence into the two source sequences, dropping
    /// the `λ` entries.
    pub fn split(&self, seq: &[TransitionId]) -> (Vec<TransitionId>, Vec<TransitionId>) {
        let first = seq.iter().filter_map(|&t| self.pairs[t].0).collect();
        let second = seq.iter().filter_map(|&t| self.pairs[t].1).collect();
        (first, second)
    }
}

/// Builds `(N‖, M0‖)`. Transition order: for each `t` in declared order,
/// `(t, λ)` if `t` is unobservable, otherwise `(t, t2)` for every `t2` with
/// the same label; then `(λ, t)` for every unobservable `t`.
pub fn twin_net(g: &LabeledPetriNet) -> Result<TwinNet> {
    let net = &g.net;
    let np = net.num_places();
    let nt = net.num_transitions();
    let mut pairs = Vec::new();
    for t1 in 0..nt {
        match g.label(t1) {
            None => pairs.push((Some(t1), None)),
            Some(l1) => {
                for t2 in 0..nt {
                    if g.label(t2) == Some(l1) {
                        pairs.push((Some(t1), Some(t2)));
                    }
                }
            }
        }
    }
    for t in 0..nt {
        if !g.is_observable(t) {
            pairs.push((None, Some(t)));
        }
    }

    let column = |pair: &(Option<TransitionId>, Option<TransitionId>), post: bool| {
        let side = |t: Option<TransitionId>| match t {
            Some(t) if post => net.post_column(t).to_vec(),
            Some(t) => net.pre_column(t).to_vec(),
            None => vec![0; np],
        };
        [side(pair.0), side(pair.1)].concat()
    };
    let pre = pairs.iter().map(|p| column(p, false)).collect();
    let post = pairs.iter().map(|p| column(p, true)).collect();

    let name = |t: Option<TransitionId>| t.map_or(LAMBDA, |t| net.transition_name(t));
    let names: Vec<String> = pairs
        .iter()
        .map(|&(a, b)| format!("{}|{}", name(a), name(b)))
        .collect();
    let mut taken: HashSet<String> = net.places().iter().chain(&names).cloned().collect();
    let mut places = net.places().to_vec();
    for p in net.places() {
        let mut copy = format!("{p}'");
        while taken.contains(&copy) {
            copy.push('\'');
        }
        taken.insert(copy.clone());
        places.push(copy);
    }
    let twin = PetriNet::from_columns(places, names, pre, post)?;
    Ok(TwinNet {
        net: twin,
        initial: g.initial.concat(&g.initial),
        pairs,
        places: np,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net_with_labels(labels: Vec<Option<&str>>) -> LabeledPetriNet {
        let nt = labels.len();
        let names = (0..nt).map(|i| format!("t{i}")).collect();
        let net = PetriNet::new(vec!["p".into()], names, vec![vec![1; nt]], vec![vec![1; nt]]).unwrap();
        LabeledPetriNet::with_labels(net, Marking(vec![1]), labels.into_iter().map(|l| l.map(String::from)).collect())
            .unwrap()
    }

    #[test]
    fn single_unobservable_transition() {
        let t = twin_net(&net_with_labels(vec![None])).unwrap();
        assert_eq!(t.net.transitions(), ["t0|λ", "λ|t0"]);
        assert_eq!(t.net.num_places(), 2);
        assert_eq!(t.initial, Marking(vec![1, 1]));
    }

    #[test]
    fn shared_label_gives_all_pairs() {
        let t = twin_net(&net_with_labels(vec![Some("a"), Some("a")])).unwrap();
        assert_eq!(t.net.transitions(), ["t0|t0", "t0|t1", "t1|t0", "t1|t1"]);
    }

    #[test]
    fn arcs_follow_each_side() {
        let net = PetriNet::new(
            vec!["p".into(), "q".into()],
            vec!["x".into(), "y".into()],
            vec![vec![1, 0], vec![0, 2]],
            vec![vec![0, 1], vec![3, 0]],
        )
        .unwrap();
        let g = LabeledPetriNet::with_labels(
            net,
            Marking(vec![1, 0]),
            vec![Some("a".into()), Some("a".into())],
        )
        .unwrap();
        let t = twin_net(&g).unwrap();
        let xy = t.net.transition_id("x|y").unwrap();
        assert_eq!(t.net.pre_column(xy), [1, 0, 0, 2]);
        assert_eq!(t.net.post_column(xy), [0, 3, 1, 0]);
        assert_eq!(t.split(&[xy, xy]), (vec![0, 0], vec![1, 1]));
    }
}
