// Witnesses are plain JSON and can be checked without rerunning the search.

use critobs::replay::replay_nfa;
use critobs::{check_nfa, Nfa, NfaWitness, StateSet};

fn run() -> critobs::Result<String> {
    // Two initial states, one critical: nothing observed yet, already mixed.
    let g = Nfa::builder().states(["0", "1"]).observable("a").initial("0").initial("1").build()?;
    let c = StateSet::from_names(&g, &["0"])?;
    let w = check_nfa(&g, &c)?.witness.expect("refuted");

    let json = serde_json::to_string(&w)?;
    let back: NfaWitness = serde_json::from_str(&json)?;
    let mut out = format!("{json}\nreplay: {:?}\n", replay_nfa(&g, &c, &back));

    let mut forged = back.clone();
    std::mem::swap(&mut forged.end1, &mut forged.end2);
    out += &format!("swapped ends: {:?}\n", replay_nfa(&g, &c, &forged).diagnostic);
    Ok(out)
}

fn main() -> critobs::Result<()> {
    print!("{}", run()?);
    Ok(())
}
