// A network read from disk, checked without building the product, by
// iterative deepening, and by explicit composition.

use std::path::Path;

use critobs::format::{load_network, load_tuple_critical};
use critobs::network::DEFAULT_PRODUCT_CAP;
use critobs::{check_network, check_network_with, materialize_and_check, NetworkSearch};

fn run() -> critobs::Result<String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/models");
    let net = load_network(&dir.join("handshake.json"))?;
    let c = load_tuple_critical(&dir.join("handshake_critical.json"), &net)?;

    let lazy = check_network(&net, &c)?;
    let deep = check_network_with(&net, &c, NetworkSearch::IterativeDeepening)?;
    let explicit = materialize_and_check(&net, &c, DEFAULT_PRODUCT_CAP)?;
    assert!(lazy.outcome == deep.outcome && lazy.outcome == explicit.outcome);

    let mut out = format!("{} components, {}\n", net.len(), lazy.outcome.describe());
    if let Some(w) = &lazy.witness {
        out += &format!("observation {:?}: {:?} vs {:?}\n", w.observation, w.end1, w.end2);
    }
    out += &format!(
        "pairs explored: bfs {}, deepening {}, explicit {}\n",
        lazy.stats.states_explored, deep.stats.states_explored, explicit.stats.states_explored
    );
    Ok(out)
}

fn main() -> critobs::Result<()> {
    print!("{}", run()?);
    Ok(())
}
