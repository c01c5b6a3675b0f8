// Instance generators: each builds a model whose verdict answers another
// question, which is then answered directly for comparison.

use critobs::reductions::random::{random_conservative_petri, random_dag, random_labels, random_total_dfa, seeded};
use critobs::reductions::{
    gen_dag_nfa, gen_dfa_intersection, gen_marking_inclusion, gen_reachability_petri, oracle, IntersectionVariant,
};
use critobs::{check_network, check_nfa, check_petri, ExploreLimits, LabeledPetriNet, Marking, Outcome};

fn refuted(o: Outcome) -> bool {
    o == Outcome::NotCriticallyObservable
}

fn run() -> critobs::Result<String> {
    let mut rng = seeded(11);
    let limits = ExploreLimits::default();
    let mut out = String::new();

    let d = random_dag(&mut rng, 6, 0.3)?;
    let (g, c) = gen_dag_nfa(&d)?;
    out += &format!(
        "dag: reachable {}, refuted {}\n",
        oracle::dag_reachable(&d),
        refuted(check_nfa(&g, &c)?.outcome)
    );

    let dfas = vec![random_total_dfa(&mut rng, 3, 0.4)?, random_total_dfa(&mut rng, 3, 0.4)?];
    for variant in [IntersectionVariant::SharedObservable, IntersectionVariant::Unobservable] {
        let (net, c) = gen_dfa_intersection(&dfas, variant)?;
        out += &format!(
            "dfa intersection ({variant:?}): nonempty {}, refuted {}\n",
            oracle::marked_intersection_nonempty(&dfas)?,
            refuted(check_network(&net, &c)?.outcome)
        );
    }

    let (net, m0) = random_conservative_petri(&mut rng, 3, 3, 2)?;
    let target = Marking(vec![0, 0, 2]);
    let (g, c) = gen_reachability_petri(&net, &m0, &target)?;
    let v = check_petri(&g, &c, ExploreLimits::with_markings(20_000))?;
    out += &format!(
        "petri reachability: reachable {:?}, verdict {}\n",
        oracle::petri_reachable(&net, &m0, &target, limits)?,
        v.outcome.describe()
    );

    let (na, ma) = random_conservative_petri(&mut rng, 2, 2, 1)?;
    let a = LabeledPetriNet::with_labels(na, ma, random_labels(&mut rng, 2, 1, 0.0))?;
    let gadget = gen_marking_inclusion(&a, &a)?;
    let c = gadget.critical.to_finite(limits)?;
    out += &format!(
        "marking inclusion of a net in itself: shape {:?}, verdict {}\n",
        gadget.reachable_shape_holds(&a, limits)?,
        check_petri(&gadget.net, &c, limits)?.outcome.describe()
    );
    Ok(out)
}

fn main() -> critobs::Result<()> {
    print!("{}", run()?);
    Ok(())
}
