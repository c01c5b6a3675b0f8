// The observer of a composition can be strictly smaller than the
// composition of the observers.

use critobs::{observer, parallel_compose, Nfa};

fn language(g: &Nfa, n: usize) -> Vec<String> {
    g.bounded_language(n)
        .iter()
        .map(|w| {
            let s = g.alphabet().render(w).concat();
            if s.is_empty() { "ε".into() } else { s }
        })
        .collect()
}

fn run() -> critobs::Result<String> {
    // G1 does a hidden `a` then `b`; G2 does `c` then a hidden `a`. The shared
    // `a` forces `c` before `b`.
    let g1 = Nfa::builder()
        .states(["0", "1", "2"])
        .unobservable("a")
        .observable("b")
        .transition("0", "a", "1")
        .transition("1", "b", "2")
        .initial("0")
        .build()?;
    let g2 = Nfa::builder()
        .states(["0", "1", "2"])
        .observable("c")
        .unobservable("a")
        .transition("0", "c", "1")
        .transition("1", "a", "2")
        .initial("0")
        .build()?;

    let composed = parallel_compose(&g1, &g2)?;
    let of_composition = observer(&composed)?;
    let of_parts = parallel_compose(&observer(&g1)?.automaton, &observer(&g2)?.automaton)?;

    let mut out = format!("Obs(G1 || G2): {:?}\n", language(&of_composition.automaton, 4));
    out += &format!("Obs(G1) || Obs(G2): {:?}\n", language(&of_parts, 4));
    for est in &of_composition.estimates {
        out += &format!("estimate {:?}\n", composed.names_of(est));
    }
    Ok(out)
}

fn main() -> critobs::Result<()> {
    print!("{}", run()?);
    Ok(())
}
