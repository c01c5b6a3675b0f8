use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type PlaceId = usize;
pub type TransitionId = usize;

/// Token counts indexed by place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Marking(pub Vec<u64>);

impl Marking {
    pub fn zeros(places: usize) -> Self {
        Marking(vec![0; places])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tokens(&self) -> &[u64] {
        &self.0
    }

    /// `self ≥ other` componentwise with at least one strict inequality.
    pub fn strictly_covers(&self, other: &Marking) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b) && self != other
    }

    /// Concatenation `[self other]`.
    pub fn concat(&self, other: &Marking) -> Marking {
        Marking([self.0.as_slice(), other.0.as_slice()].concat())
    }

    /// Appends `extra` to the marking.
    pub fn extended(&self, extra: &[u64]) -> Marking {
        Marking([self.0.as_slice(), extra].concat())
    }
}

impl From<Vec<u64>> for Marking {
    fn from(v: Vec<u64>) -> Self {
        Marking(v)
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// Place/transition net `(P, T, Pre, Post)` with arbitrary arc weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetriNet {
    places: Vec<String>,
    transitions: Vec<String>,
    /// `pre[t][p]`, stored per transition for firing.
    pre: Vec<Vec<u64>>,
    post: Vec<Vec<u64>>,
}

impl PetriNet {
    /// `pre` and `post` are indexed `[place][transition]`.
    pub fn new(
        places: Vec<String>,
        transitions: Vec<String>,
        pre: Vec<Vec<u64>>,
        post: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let (np, nt) = (places.len(), transitions.len());
        for (what, m) in [("pre", &pre), ("post", &post)] {
            if m.len() != np {
                return Err(Error::DimensionMismatch {
                    expected: np,
                    found: m.len(),
                }
                .at(what));
            }
            for (p, row) in m.iter().enumerate() {
                if row.len() != nt {
                    return Err(Error::DimensionMismatch {
                        expected: nt,
                        found: row.len(),
                    }
                    .at(format!("{what}[{p}]")));
                }
            }
        }
        let transpose = |m: &[Vec<u64>]| -> Vec<Vec<u64>> {
            (0..nt).map(|t| (0..np).map(|p| m[p][t]).collect()).collect()
        };
        let pre = transpose(&pre);
        let post = transpose(&post);
        Self::from_columns(places, transitions, pre, post)
    }

    /// `pre` and `post` are indexed `[transition][place]`.
    pub fn from_columns(
        places: Vec<String>,
        transitions: Vec<String>,
        pre: Vec<Vec<u64>>,
        post: Vec<Vec<u64>>,
    ) -> Result<Self> {
        if places.is_empty() && transitions.is_empty() {
            return Err(Error::invalid("a net needs at least one place or transition"));
        }
        let mut names = HashSet::new();
        for n in places.iter().chain(&transitions) {
            if !names.insert(n.as_str()) {
                return Err(Error::invalid(format!(
                    "name `{n}` is used twice (places and transitions must be distinct)"
                )));
            }
        }
        let (np, nt) = (places.len(), transitions.len());
        for m in [&pre, &post] {
            if m.len() != nt {
                return Err(Error::DimensionMismatch {
                    expected: nt,
                    found: m.len(),
                });
            }
            if let Some(col) = m.iter().find(|c| c.len() != np) {
                return Err(Error::DimensionMismatch {
                    expected: np,
                    found: col.len(),
                });
            }
        }
        Ok(PetriNet {
            places,
            transitions,
            pre,
            post,
        })
    }

    pub fn num_places(&self) -> usize {
        self.places.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    pub fn places(&self) -> &[String] {
        &self.places
    }

    pub fn transitions(&self) -> &[String] {
        &self.transitions
    }

    pub fn transition_name(&self, t: TransitionId) -> &str {
        &self.transitions[t]
    }

    pub fn transition_id(&self, name: &str) -> Option<TransitionId> {
        self.transitions.iter().position(|n| n == name)
    }

    pub fn pre(&self, p: PlaceId, t: TransitionId) -> u64 {
        self.pre[t][p]
    }

    pub fn post(&self, p: PlaceId, t: TransitionId) -> u64 {
        self.post[t][p]
    }

    pub fn pre_column(&self, t: TransitionId) -> &[u64] {
        &self.pre[t]
    }

    pub fn post_column(&self, t: TransitionId) -> &[u64] {
        &self.post[t]
    }

    /// `[place][transition]` view of `Pre`.
    pub fn pre_matrix(&self) -> Vec<Vec<u64>> {
        (0..self.num_places())
            .map(|p| self.pre.iter().map(|col| col[p]).collect())
            .collect()
    }

    pub fn post_matrix(&self) -> Vec<Vec<u64>> {
        (0..self.num_places())
            .map(|p| self.post.iter().map(|col| col[p]).collect())
            .collect()
    }

    pub fn check_marking(&self, m: &Marking) -> Result<()> {
        if m.len() != self.num_places() {
            return Err(Error::DimensionMismatch {
                expected: self.num_places(),
                found: m.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn is_enabled_unchecked(&self, m: &Marking, t: TransitionId) -> bool {
        self.pre[t].iter().zip(&m.0).all(|(need, have)| have >= need)
    }

    pub(crate) fn fire_unchecked(&self, m: &Marking, t: TransitionId) -> Marking {
        Marking(
            m.0.iter()
                .zip(self.pre[t].iter().zip(&self.post[t]))
                .map(|(&have, (&take, &give))| have - take + give)
                .collect(),
        )
    }

    pub fn is_enabled(&self, m: &Marking, t: TransitionId) -> Result<bool> {
        self.check_marking(m)?;
        if t >= self.num_transitions() {
            return Err(Error::UnknownTransition(format!("#{t}")));
        }
        Ok(self.is_enabled_unchecked(m, t))
    }

    /// Transitions enabled in `m`, in declared order.
    pub fn enabled(&self, m: &Marking) -> Result<Vec<TransitionId>> {
        self.check_marking(m)?;
        Ok((0..self.num_transitions())
            .filter(|&t| self.is_enabled_unchecked(m, t))
            .collect())
    }

    /// `M − Pre(·,t) + Post(·,t)`; fails if `t` is not enabled.
    pub fn fire(&self, m: &Marking, t: TransitionId) -> Result<Marking> {
        if !self.is_enabled(m, t)? {
            return Err(Error::NotEnabled(self.transitions[t].clone()));
        }
        Ok(self.fire_unchecked(m, t))
    }

    /// Fires a whole sequence of transition names.
    pub fn fire_sequence<S: AsRef<str>>(&self, m: &Marking, seq: &[S]) -> Result<Marking> {
        let mut current = m.clone();
        for name in seq {
            let t = self
                .transition_id(name.as_ref())
                .ok_or_else(|| Error::UnknownTransition(name.as_ref().to_string()))?;
            current = self.fire(&current, t)?;
        }
        Ok(current)
    }
}

/// `(N, M0, Σ, ℓ)`: a net with an initial marking and a labeling; `None`
/// labels are the unobservable transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPetriNet {
    pub net: PetriNet,
    pub initial: Marking,
    labels: Vec<Option<String>>,
    alphabet: Vec<String>,
}

impl LabeledPetriNet {
    pub fn new(
        net: PetriNet,
        initial: Marking,
        labels: Vec<Option<String>>,
        alphabet: Vec<String>,
    ) -> Result<Self> {
        net.check_marking(&initial)?;
        if labels.len() != net.num_transitions() {
            return Err(Error::DimensionMismatch {
                expected: net.num_transitions(),
                found: labels.len(),
            });
        }
        let sigma: HashSet<&str> = alphabet.iter().map(String::as_str).collect();
        if sigma.len() != alphabet.len() {
            return Err(Error::invalid("duplicate label in alphabet"));
        }
        for (t, l) in labels.iter().enumerate() {
            if let Some(l) = l {
                if !sigma.contains(l.as_str()) {
                    return Err(Error::invalid(format!(
                        "label `{l}` of transition `{}` is not in the alphabet",
                        net.transition_name(t)
                    )));
                }
            }
        }
        Ok(LabeledPetriNet {
            net,
            initial,
            labels,
            alphabet,
        })
    }

    /// Labels every transition by its own name.
    pub fn with_identity_labels(net: PetriNet, initial: Marking) -> Result<Self> {
        let labels = net.transitions().iter().cloned().map(Some).collect();
        let alphabet = net.transitions().to_vec();
        Self::new(net, initial, labels, alphabet)
    }

    /// Labels taken as given; the alphabet is the set of labels used.
    pub fn with_labels(net: PetriNet, initial: Marking, labels: Vec<Option<String>>) -> Result<Self> {
        let mut alphabet: Vec<String> = Vec::new();
        for l in labels.iter().flatten() {
            if !alphabet.contains(l) {
                alphabet.push(l.clone());
            }
        }
        Self::new(net, initial, labels, alphabet)
    }

    pub fn label(&self, t: TransitionId) -> Option<&str> {
        self.labels[t].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn is_observable(&self, t: TransitionId) -> bool {
        self.labels[t].is_some()
    }

    /// `ℓ(σ)` for a sequence of transition names.
    pub fn observation<S: AsRef<str>>(&self, seq: &[S]) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for name in seq {
            let t = self
                .net
                .transition_id(name.as_ref())
                .ok_or_else(|| Error::UnknownTransition(name.as_ref().to_string()))?;
            if let Some(l) = &self.labels[t] {
                out.push(l.clone());
            }
        }
        Ok(out)
    }

    /// Transitions grouped by label.
    pub fn by_label(&self) -> HashMap<&str, Vec<TransitionId>> {
        let mut groups: HashMap<&str, Vec<TransitionId>> = HashMap::new();
        for (t, l) in self.labels.iter().enumerate() {
            if let Some(l) = l {
                groups.entry(l.as_str()).or_default().push(t);
            }
        }
        groups
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_place(pre: u64, post: u64) -> PetriNet {
        PetriNet::new(
            vec!["p".into()],
            vec!["t".into()],
            vec![vec![pre]],
            vec![vec![post]],
        )
        .unwrap()
    }

    #[test]
    fn enabledness() {
        let net = one_place(1, 0);
        assert_eq!(net.enabled(&Marking(vec![1])).unwrap(), vec![0]);
        assert!(net.enabled(&Marking(vec![0])).unwrap().is_empty());
    }

    #[test]
    fn firing() {
        assert_eq!(one_place(1, 0).fire(&Marking(vec![1]), 0).unwrap(), Marking(vec![0]));
        assert_eq!(one_place(1, 1).fire(&Marking(vec![1]), 0).unwrap(), Marking(vec![1]));
        assert!(matches!(
            one_place(1, 0).fire(&Marking(vec![0]), 0),
            Err(Error::NotEnabled(_))
        ));
    }

    #[test]
    fn token_generator_is_always_enabled() {
        let net = one_place(0, 1);
        let mut m = Marking(vec![0]);
        for k in 1..=5 {
            assert_eq!(net.enabled(&m).unwrap(), vec![0]);
            m = net.fire(&m, 0).unwrap();
            assert_eq!(m, Marking(vec![k]));
        }
    }

    #[test]
    fn dimension_checks() {
        let net = one_place(1, 0);
        assert!(matches!(
            net.enabled(&Marking(vec![1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(PetriNet::new(vec!["p".into()], vec!["t".into()], vec![vec![1, 2]], vec![vec![0]]).is_err());
        assert!(PetriNet::new(vec!["x".into()], vec!["x".into()], vec![vec![0]], vec![vec![0]]).is_err());
        assert!(PetriNet::new(vec![], vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn labels_must_come_from_the_alphabet() {
        let net = one_place(0, 1);
        assert!(LabeledPetriNet::new(net.clone(), Marking(vec![0]), vec![Some("z".into())], vec!["a".into()]).is_err());
        let g = LabeledPetriNet::new(net, Marking(vec![0]), vec![None], vec![]).unwrap();
        assert!(!g.is_observable(0));
        assert!(g.observation(&["t", "t"]).unwrap().is_empty());
    }
}
