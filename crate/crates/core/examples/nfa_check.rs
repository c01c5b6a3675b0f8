// Critical observability of a single automaton: the twin-plant check, the
// observer-based reference, and the witness that refutes it.

use critobs::{check_nfa, check_nfa_oracle, Nfa, StateSet};

fn run() -> critobs::Result<String> {
    // 0 loops on `a` and may also move to 1; only 0 is critical.
    let g = Nfa::builder()
        .states(["0", "1"])
        .observable("a")
        .transition("0", "a", "0")
        .transition("0", "a", "1")
        .initial("0")
        .build()?;
    let c = StateSet::from_names(&g, &["0"])?;

    let fast = check_nfa(&g, &c)?;
    let slow = check_nfa_oracle(&g, &c)?;
    assert_eq!(fast.outcome, slow.outcome);

    let mut out = format!("{}\n", fast.outcome.describe());
    if let Some(w) = &fast.witness {
        out += &format!("after {:?}: {} is critical, {} is not\n", w.observation, w.end1, w.end2);
    }
    out += &format!("twin states explored: {}\n", fast.stats.states_explored);
    Ok(out)
}

fn main() -> critobs::Result<()> {
    print!("{}", run()?);
    Ok(())
}
