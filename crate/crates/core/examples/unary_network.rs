// Networks over one shared observable letter: per-component subset
// sequences are eventually periodic, so a finite scan decides the question.

use critobs::{check_unary_network, Network, Nfa, TupleCriticalSet};

/// A cycle of length `k` whose state 0 may also branch to a sink.
fn cycle(k: usize) -> critobs::Result<Nfa> {
    let mut b = Nfa::builder().observable("a");
    for i in 0..k {
        b = b.state(i.to_string());
    }
    b = b.state("sink");
    for i in 0..k {
        b = b.transition(i.to_string(), "a", ((i + 1) % k).to_string());
    }
    b.transition("0", "a", "sink").initial("0").build()
}

fn run() -> critobs::Result<String> {
    let net = Network::new(vec![cycle(2)?, cycle(3)?])?;
    let critical = TupleCriticalSet::from_names(&net, &[vec!["1", "2"]])?;
    let v = check_unary_network(&net, &critical)?;

    let mut out = String::new();
    for (i, p) in v.sequences.iter().enumerate() {
        out += &format!("component {i}: tail {}, period {}\n", p.tail, p.period);
    }
    out += &format!("scan bound {}\n", v.scan_bound);
    out += v.verdict.outcome.describe();
    match v.length {
        Some(l) => out += &format!(" after a^{l}\n"),
        None => out += "\n",
    }
    Ok(out)
}

fn main() -> critobs::Result<()> {
    print!("{}", run()?);
    Ok(())
}
