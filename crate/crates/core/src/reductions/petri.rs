//! Petri net gadgets: reachability (finite critical set) and marking
//! inclusion (general critical set).

use std::collections::HashSet;

use super::fresh;
use crate::error::{Error, Result};
use crate::petri::{explore, CriticalMarkingSet, ExploreLimits, LabeledPetriNet, Marking, PetriNet};

/// Adds a place `p′` and an unobservable generator `t′` with `Post(p′,t′) = 1`;
/// every original transition is labeled by its own name. Initial marking
/// `M0×(0)`, critical set `{Mtarget×(0)}`. Critically observable iff `Mtarget`
/// is unreachable in `(N, M0)`.
pub fn gen_reachability_petri(
    net: &PetriNet,
    m0: &Marking,
    target: &Marking,
) -> Result<(LabeledPetriNet, CriticalMarkingSet)> {
    net.check_marking(m0).map_err(|e| e.at("initial marking"))?;
    net.check_marking(target).map_err(|e| e.at("target marking"))?;
    let taken: Vec<&String> = net.places().iter().chain(net.transitions()).collect();
    let p = fresh(&taken, "p'");
    let t = fresh(&taken, "t'");
    let mut places = net.places().to_vec();
    places.push(p);
    let mut transitions = net.transitions().to_vec();
    transitions.push(t);
    let widen = |cols: Vec<Vec<u64>>, extra: u64| {
        let mut cols: Vec<Vec<u64>> = cols
            .into_iter()
            .map(|mut c| {
                c.push(0);
                c
            })
            .collect();
        let mut gen = vec![0; places.len()];
        *gen.last_mut().expect("p' was pushed") = extra;
        cols.push(gen);
        cols
    };
    let columns = |post: bool| -> Vec<Vec<u64>> {
        (0..net.num_transitions())
            .map(|t| if post { net.post_column(t) } else { net.pre_column(t) }.to_vec())
            .collect()
    };
    let pre = widen(columns(false), 0);
    let post = widen(columns(true), 1);
    let gadget = PetriNet::from_columns(places, transitions, pre, post)?;
    let mut labels: Vec<Option<String>> = net.transitions().iter().cloned().map(Some).collect();
    labels.push(None);
    let alphabet = net.transitions().to_vec();
    let g = LabeledPetriNet::new(gadget, m0.extended(&[0]), labels, alphabet)?;
    let c = CriticalMarkingSet::finite(vec![target.extended(&[0])])?;
    Ok((g, c))
}

/// The critical set `{0}^r×(0,0,1) ∪ R(B)×(1,0,0) ∪ R(B)×(0,1,0)`, kept
/// symbolic because `R(B)` is infinite in general.
#[derive(Debug, Clone)]
pub struct InclusionCritical {
    pub b: LabeledPetriNet,
}

impl InclusionCritical {
    /// Enumerates `R(B)`; fails with a resource error when `B` cannot be
    /// explored within `limits`.
    pub fn to_finite(&self, limits: ExploreLimits) -> Result<CriticalMarkingSet> {
        let reach = explore(&self.b.net, &self.b.initial, limits)?;
        if !reach.exhaustive {
            return Err(Error::Resource {
                what: "reachability set of B".into(),
                bound: format!("{} markings", reach.graph.len()),
            });
        }
        let r = self.b.net.num_places();
        let mut markings = vec![Marking::zeros(r).extended(&[0, 0, 1])];
        for gate in [[1, 0, 0], [0, 1, 0]] {
            markings.extend(reach.graph.markings.iter().map(|m| m.extended(&gate)));
        }
        CriticalMarkingSet::finite(markings)
    }
}

#[derive(Debug, Clone)]
pub struct MarkingInclusion {
    pub net: LabeledPetriNet,
    pub critical: InclusionCritical,
}

impl MarkingInclusion {
    /// Checks `R(G) = {0}^r×(0,0,1) ∪ R(A)×(1,0,0) ∪ R(B)×(0,1,0)` by
    /// exploring all three nets. `Ok(None)` when one of them is not exhausted.
    pub fn reachable_shape_holds(&self, a: &LabeledPetriNet, limits: ExploreLimits) -> Result<Option<bool>> {
        let mut expected = HashSet::new();
        expected.insert(Marking::zeros(a.net.num_places()).extended(&[0, 0, 1]));
        for (x, gate) in [(a, [1, 0, 0]), (&self.critical.b, [0, 1, 0])] {
            let e = explore(&x.net, &x.initial, limits)?;
            if !e.exhaustive {
                return Ok(None);
            }
            expected.extend(e.graph.markings.iter().map(|m| m.extended(&gate)));
        }
        let g = explore(&self.net.net, &self.net.initial, limits)?;
        if !g.exhaustive {
            return Ok(None);
        }
        let actual: HashSet<Marking> = g.graph.markings.into_iter().collect();
        Ok(Some(actual == expected))
    }
}

/// Gadget reducing `R(A) ⊆ R(B)` to critical observability.
///
/// Places: the `r` shared places (named after `A`'s), then `gate_A`, `gate_B`
/// and `start`, which initially holds the only token. Unobservable `t1`
/// (resp. `t2`) moves it from `start` to `gate_A` (resp. `gate_B`) and puts
/// `M0(A)` (resp. `M0(B)`) on the shared places. Every transition of `A`
/// (resp. `B`) is copied with a consume-and-restore loop on its gate and keeps
/// its label. `gate_B` also carries one self-loop per label of `A`.
pub fn gen_marking_inclusion(a: &LabeledPetriNet, b: &LabeledPetriNet) -> Result<MarkingInclusion> {
    let r = a.net.num_places();
    if b.net.num_places() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            found: b.net.num_places(),
        }
        .at("places of B"));
    }
    let mut places = a.net.places().to_vec();
    for base in ["gate_A", "gate_B", "start"] {
        let name = fresh(&places, base);
        places.push(name);
    }
    let (gate_a, gate_b, start) = (r, r + 1, r + 2);
    let np = r + 3;

    let mut transitions = Vec::new();
    let mut labels = Vec::new();
    let mut pre = Vec::new();
    let mut post = Vec::new();
    let mut push = |name: String, label: Option<String>, i: Vec<u64>, o: Vec<u64>| {
        transitions.push(name);
        labels.push(label);
        pre.push(i);
        post.push(o);
    };
    let unit = |p: usize| {
        let mut v = vec![0; np];
        v[p] = 1;
        v
    };
    for (name, gate, x) in [("t1", gate_a, a), ("t2", gate_b, b)] {
        let mut o = x.initial.extended(&[0, 0, 0]).0;
        o[gate] = 1;
        push(name.into(), None, unit(start), o);
    }
    for (prefix, gate, x) in [("A", gate_a, a), ("B", gate_b, b)] {
        for t in 0..x.net.num_transitions() {
            let column = |c: &[u64]| {
                let mut v = c.to_vec();
                v.extend([0, 0, 0]);
                v[gate] += 1;
                v
            };
            push(
                format!("{prefix}.{}", x.net.transition_name(t)),
                x.label(t).map(String::from),
                column(x.net.pre_column(t)),
                column(x.net.post_column(t)),
            );
        }
    }
    for (i, sigma) in a.alphabet().iter().enumerate() {
        push(format!("s{}", i + 1), Some(sigma.clone()), unit(gate_b), unit(gate_b));
    }

    // the names so far may collide with place names; rename with primes
    let mut taken = places.clone();
    for t in transitions.iter_mut() {
        *t = fresh(&taken, t);
        taken.push(t.clone());
    }
    let mut alphabet = a.alphabet().to_vec();
    for l in b.alphabet() {
        if !alphabet.contains(l) {
            alphabet.push(l.clone());
        }
    }
    let net = PetriNet::from_columns(places, transitions, pre, post)?;
    let initial = Marking(unit(start));
    Ok(MarkingInclusion {
        net: LabeledPetriNet::new(net, initial, labels, alphabet)?,
        critical: InclusionCritical { b: b.clone() },
    })
}
