// Labeled Petri nets: firing, the twin net, and the three-valued verdict.

use critobs::petri::twin_net;
use critobs::{check_petri, CriticalMarkingSet, ExploreLimits, LabeledPetriNet, Marking, Outcome, PetriNet};

fn run() -> critobs::Result<String> {
    // A token cycles p -> q -> p; `go` is observed, `back` is silent.
    let net = PetriNet::new(
        vec!["p".into(), "q".into()],
        vec!["go".into(), "back".into()],
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![0, 1], vec![1, 0]],
    )?;
    let g = LabeledPetriNet::with_labels(net, Marking(vec![1, 0]), vec![Some("go".into()), None])?;
    let twin = twin_net(&g)?;
    let mut out = format!("twin transitions: {:?}\n", twin.net.transitions());

    let limits = ExploreLimits::default();
    let in_q = CriticalMarkingSet::finite(vec![Marking(vec![0, 1])])?;
    let v = check_petri(&g, &in_q, limits)?;
    out += &format!("C = {{[0 1]}}: {}", v.outcome.describe());
    if let Some(w) = &v.witness {
        out += &format!(" ({:?} vs {:?} after {:?})", w.run1, w.run2, w.observation);
    }
    out += "\n";
    let everything = CriticalMarkingSet::cofinite(vec![])?;
    out += &format!("C = R(G): {}\n", check_petri(&g, &everything, limits)?.outcome.describe());

    // An unobservable token generator never stops growing, so a far-away
    // critical marking leaves the search inconclusive within small limits.
    let gen = PetriNet::new(vec!["p".into()], vec!["t".into()], vec![vec![0]], vec![vec![1]])?;
    let g = LabeledPetriNet::with_labels(gen, Marking(vec![0]), vec![None])?;
    let far = CriticalMarkingSet::finite(vec![Marking(vec![50])])?;
    let v = check_petri(&g, &far, ExploreLimits::with_markings(100))?;
    assert_eq!(v.outcome, Outcome::Unknown);
    out += &format!("generator: {} ({:?} limit hit)\n", v.outcome.describe(), v.limit_hit);
    Ok(out)
}

fn main() -> critobs::Result<()> {
    print!("{}", run()?);
    Ok(())
}
