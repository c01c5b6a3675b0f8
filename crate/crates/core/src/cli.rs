//! Command-line front end. [`run`] parses arguments, performs one command and
//! returns the process exit code.
//!
//! Exit codes: 0 critically observable (or witness valid, or command done),
//! 1 not critically observable (or witness invalid), 2 unknown, 64 usage,
//! 65 malformed input, 66 unreadable or unwritable file, 69 resource limit.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::compose::compose;
use crate::error::{Error, Result};
use crate::format::{
    load_critical_markings, load_critical_states, load_network, load_nfa, load_petri, load_tuple_critical,
    parse_json, read_bytes, to_json, write_json, AutomatonFile, CriticalMarkingsFile, CriticalStatesFile, ModelKind,
    NetworkFile, PetriFile, TupleCriticalFile,
};
use crate::network::{check_network_with, materialize_and_check, NetworkSearch, DEFAULT_PRODUCT_CAP};
use crate::nfa::Nfa;
use crate::observability::{check_nfa, check_nfa_oracle};
use crate::observer::observer;
use crate::petri::{check_petri, explore, ExploreLimits, LabeledPetriNet, Marking};
use crate::reductions::random::{
    random_conservative_petri, random_dag, random_labels, random_total_dfa, random_unary_nfa, seeded,
};
use crate::reductions::{
    gen_dag_nfa, gen_dfa_intersection, gen_marking_inclusion, gen_reachability_petri, gen_unary_intersection,
    oracle, IntersectionVariant,
};
use crate::replay::{replay_network, replay_nfa, replay_petri, Replay};
use crate::unary::check_unary_network;
use crate::verdict::{NetworkWitness, NfaWitness, Outcome, PetriWitness, SearchStats, Verdict};

pub const EXIT_OBSERVABLE: i32 = 0;
pub const EXIT_NOT_OBSERVABLE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_RESOURCE: i32 = 69;

#[derive(Debug, Parser)]
#[command(name = "critobs", version, about = "Critical observability of automata, networks and labeled Petri nets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide critical observability.
    #[command(subcommand)]
    Check(CheckTarget),
    /// Write a generated instance, its critical set and a manifest.
    Gen(GenArgs),
    /// Print the observer of an automaton or of a composed network.
    Observer(ObserverArgs),
    /// Validate a witness against a model and critical set.
    Replay(ReplayArgs),
}

#[derive(Debug, Subcommand)]
enum CheckTarget {
    Nfa(NfaArgs),
    Network(NetworkArgs),
    Petri(PetriArgs),
}

#[derive(Debug, Args)]
struct Inputs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    critical: PathBuf,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct NfaArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// Use the observer-based reference procedure.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
struct NetworkArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// Compose explicitly, then check the product.
    #[arg(long, conflicts_with = "unary")]
    oracle: bool,
    /// Exact procedure for networks over one shared observable event.
    #[arg(long)]
    unary: bool,
    /// Iterative deepening instead of breadth-first search.
    #[arg(long, conflicts_with_all = ["unary", "oracle"])]
    memory_bounded: bool,
    /// State cap for `--oracle`.
    #[arg(long, default_value_t = DEFAULT_PRODUCT_CAP)]
    max_product: usize,
}

#[derive(Debug, Args)]
struct PetriArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(long, default_value_t = ExploreLimits::default().max_markings)]
    max_markings: usize,
    #[arg(long, default_value_t = ExploreLimits::default().max_depth)]
    max_depth: usize,
    #[arg(long, default_value_t = ExploreLimits::default().max_tokens)]
    max_tokens: u64,
}

impl LimitArgs {
    fn limits(&self) -> ExploreLimits {
        ExploreLimits {
            max_markings: self.max_markings,
            max_depth: self.max_depth,
            max_tokens: self.max_tokens,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum GenKind {
    Dag,
    DfaIntersection,
    UnaryIntersection,
    PetriReach,
    MarkingInclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    SharedObservable,
    Unobservable,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Nodes, states or places per generated input.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=64))]
    size: u64,
    /// Number of automata for the intersection generators.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=16))]
    components: u64,
    #[arg(long, value_enum, default_value_t = VariantArg::SharedObservable)]
    variant: VariantArg,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ObserverArgs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ReplayArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// A bare witness or a JSON report containing one.
    #[arg(long)]
    witness: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statistics {
    pub states_explored: usize,
    pub transitions: usize,
    pub peak_frontier: usize,
    pub max_depth: usize,
    /// The only field that differs between identical runs.
    pub wall_time_ms: u64,
}

/// A witness of any model kind; the JSON shapes do not overlap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyWitness {
    Nfa(NfaWitness),
    Network(NetworkWitness),
    Petri(PetriWitness),
}

impl From<NfaWitness> for AnyWitness {
    fn from(w: NfaWitness) -> Self {
        AnyWitness::Nfa(w)
    }
}

impl From<NetworkWitness> for AnyWitness {
    fn from(w: NetworkWitness) -> Self {
        AnyWitness::Network(w)
    }
}

impl From<PetriWitness> for AnyWitness {
    fn from(w: PetriWitness) -> Self {
        AnyWitness::Petri(w)
    }
}

/// What `check` prints.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AnyWitness>,
    pub statistics: Statistics,
    /// Procedure-specific data: exploration limits, unary scan bounds, ….
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    pub inputs: Vec<InputDigest>,
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check(target) => check(target),
        Command::Gen(args) => gen(&args),
        Command::Observer(args) => show_observer(&args),
        Command::Replay(args) => replay(&args),
    };
    match result {
        Ok((code, text)) => match out.write_all(text.as_bytes()) {
            Ok(()) => code,
            Err(_) => EXIT_NO_INPUT,
        },
        Err(e) => {
            let _ = writeln!(err, "critobs: {e}");
            if e.is_io() {
                EXIT_NO_INPUT
            } else if e.is_resource() {
                EXIT_RESOURCE
            } else {
                EXIT_DATA
            }
        }
    }
}

fn exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::CriticallyObservable => EXIT_OBSERVABLE,
        Outcome::NotCriticallyObservable => EXIT_NOT_OBSERVABLE,
        Outcome::Unknown => EXIT_UNKNOWN,
    }
}

fn digest(path: &Path) -> Result<InputDigest> {
    let bytes = read_bytes(path)?;
    Ok(InputDigest {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    })
}

fn statistics(stats: &SearchStats, started: Instant) -> Statistics {
    Statistics {
        states_explored: stats.states_explored,
        transitions: stats.transitions,
        peak_frontier: stats.peak_frontier,
        max_depth: stats.max_depth,
        wall_time_ms: started.elapsed().as_millis() as u64,
    }
}

fn report<W: Clone + Into<AnyWitness>>(
    command: &str,
    verdict: &Verdict<W>,
    details: Value,
    inputs: &Inputs,
    started: Instant,
) -> Result<RunReport> {
    Ok(RunReport {
        command: command.into(),
        outcome: verdict.outcome,
        witness: verdict.witness.clone().map(Into::into),
        statistics: statistics(&verdict.stats, started),
        details,
        inputs: vec![digest(&inputs.model)?, digest(&inputs.critical)?],
    })
}

fn check(target: CheckTarget) -> Result<(i32, String)> {
    let started = Instant::now();
    let (report, json) = match target {
        CheckTarget::Nfa(a) => {
            let g = load_nfa(&a.inputs.model)?;
            let c = load_critical_states(&a.inputs.critical, &g)?;
            let (v, procedure) = if a.oracle {
                (check_nfa_oracle(&g, &c)?, "observer")
            } else {
                (check_nfa(&g, &c)?, "twin-bfs")
            };
            let details = json!({ "procedure": procedure });
            (report("check nfa", &v, details, &a.inputs, started)?, a.inputs.json)
        }
        CheckTarget::Network(a) => {
            let net = load_network(&a.inputs.model)?;
            let c = load_tuple_critical(&a.inputs.critical, &net)?;
            let r = if a.unary {
                let u = check_unary_network(&net, &c)?;
                let details = json!({
                    "procedure": "unary-scan",
                    "length": u.length,
                    "scan_bound": u.scan_bound,
                    "sequences": u.sequences,
                });
                report("check network", &u.verdict, details, &a.inputs, started)?
            } else if a.oracle {
                let v = materialize_and_check(&net, &c, a.max_product)?;
                report("check network", &v, json!({ "procedure": "materialize" }), &a.inputs, started)?
            } else {
                let (search, procedure) = if a.memory_bounded {
                    (NetworkSearch::IterativeDeepening, "twin-iterative-deepening")
                } else {
                    (NetworkSearch::Bfs, "twin-bfs")
                };
                let v = check_network_with(&net, &c, search)?;
                report("check network", &v, json!({ "procedure": procedure }), &a.inputs, started)?
            };
            (r, a.inputs.json)
        }
        CheckTarget::Petri(a) => {
            let g = load_petri(&a.inputs.model)?;
            let c = load_critical_markings(&a.inputs.critical, &g)?;
            let v = check_petri(&g, &c, a.limits.limits())?;
            let details = json!({
                "procedure": "twin-net-bfs",
                "exhaustive": v.exhaustive,
                "limits": v.limits,
                "limit_hit": v.limit_hit,
                "unbounded_evidence": v.unbounded_evidence,
            });
            let verdict = Verdict {
                outcome: v.outcome,
                witness: v.witness,
                stats: v.stats,
            };
            (report("check petri", &verdict, details, &a.inputs, started)?, a.inputs.json)
        }
    };
    let text = if json { to_json(&report)? } else { render_report(&report) };
    Ok((exit_code(report.outcome), text))
}

fn render_report(r: &RunReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", r.outcome.describe());
    if let Some(w) = r.witness.as_ref().and_then(|w| serde_json::to_value(w).ok()) {
        render_witness(&mut s, &w);
    }
    let st = &r.statistics;
    let _ = writeln!(
        s,
        "explored {} states, {} transitions, peak frontier {}, max depth {}, {} ms",
        st.states_explored, st.transitions, st.peak_frontier, st.max_depth, st.wall_time_ms
    );
    if let Some(details) = r.details.as_object() {
        for (k, v) in details {
            let _ = writeln!(s, "{k}: {}", render_config(v));
        }
    }
    s
}

fn render_config(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(Value::is_string) => {
            let parts: Vec<String> = items.iter().map(render_config).collect();
            format!("({})", parts.join(","))
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
        other => other.to_string(),
    }
}

fn render_witness(s: &mut String, w: &Value) {
    let words = |v: &Value| -> Vec<String> {
        v.as_array()
            .map(|a| a.iter().map(render_config).collect())
            .unwrap_or_default()
    };
    let observation = words(&w["observation"]);
    let _ = writeln!(
        s,
        "observation: {}",
        if observation.is_empty() { "ε".to_string() } else { observation.join(" ") }
    );
    for run in ["run1", "run2"] {
        let steps = w[run].as_array().cloned().unwrap_or_default();
        let rendered: Vec<String> = steps
            .iter()
            .map(|step| match step.as_array() {
                Some(t) if t.len() == 3 => {
                    format!("{} -{}-> {}", render_config(&t[0]), render_config(&t[1]), render_config(&t[2]))
                }
                _ => render_config(step),
            })
            .collect();
        let _ = writeln!(s, "{run}: {}", if rendered.is_empty() { "ε".to_string() } else { rendered.join(", ") });
    }
    let _ = writeln!(s, "end1 (critical): {}", render_config(&w["end1"]));
    let _ = writeln!(s, "end2 (not critical): {}", render_config(&w["end2"]));
}

fn show_observer(a: &ObserverArgs) -> Result<(i32, String)> {
    let bytes = read_bytes(&a.model)?;
    let value: Value = parse_json(&bytes).map_err(|e| e.at(a.model.display().to_string()))?;
    let g = match ModelKind::detect(&value).map_err(|e| e.at(a.model.display().to_string()))? {
        ModelKind::Automaton => load_nfa(&a.model)?,
        ModelKind::Network => {
            let net = load_network(&a.model)?;
            let parts: Vec<&Nfa> = net.components().iter().collect();
            compose(&parts, Some(DEFAULT_PRODUCT_CAP))?.automaton
        }
        ModelKind::Petri => return Err(Error::invalid("observers are built for automata and networks only")),
    };
    let obs = observer(&g)?;
    let estimates: Vec<Vec<String>> = obs.estimates.iter().map(|s| g.names_of(s)).collect();
    let text = if a.json {
        to_json(&json!({
            "automaton": AutomatonFile::from_nfa(&obs.automaton),
            "estimates": estimates,
        }))?
    } else {
        let o = &obs.automaton;
        let mut s = format!("initial: {}\n", o.state_name(o.initial()[0]));
        for (p, e, q) in o.transitions() {
            let _ = writeln!(s, "{} -{}-> {}", o.state_name(p), o.alphabet().name(e), o.state_name(q));
        }
        s
    };
    Ok((EXIT_OBSERVABLE, text))
}

fn replay(a: &ReplayArgs) -> Result<(i32, String)> {
    let model_bytes = read_bytes(&a.inputs.model)?;
    let model: Value = parse_json(&model_bytes).map_err(|e| e.at(a.inputs.model.display().to_string()))?;
    let kind = ModelKind::detect(&model).map_err(|e| e.at(a.inputs.model.display().to_string()))?;
    let mut witness: Value = parse_json(&read_bytes(&a.witness)?).map_err(|e| e.at(a.witness.display().to_string()))?;
    if let Some(inner) = witness.get("witness") {
        witness = inner.clone();
    }
    let at_witness = |e: serde_json::Error| Error::Json(e).at(a.witness.display().to_string());
    let result: Replay = match kind {
        ModelKind::Automaton => {
            let g = load_nfa(&a.inputs.model)?;
            let c = load_critical_states(&a.inputs.critical, &g)?;
            let w: NfaWitness = serde_json::from_value(witness).map_err(at_witness)?;
            replay_nfa(&g, &c, &w)
        }
        ModelKind::Network => {
            let net = load_network(&a.inputs.model)?;
            let c = load_tuple_critical(&a.inputs.critical, &net)?;
            let w: NetworkWitness = serde_json::from_value(witness).map_err(at_witness)?;
            replay_network(&net, &c, &w)
        }
        ModelKind::Petri => {
            let g = load_petri(&a.inputs.model)?;
            let c = load_critical_markings(&a.inputs.critical, &g)?;
            let w: PetriWitness = serde_json::from_value(witness).map_err(at_witness)?;
            replay_petri(&g, &c, &w)
        }
    };
    let text = if a.inputs.json {
        to_json(&result)?
    } else if result.valid {
        "witness valid\n".to_string()
    } else {
        format!("witness invalid: {}\n", result.diagnostic.as_deref().unwrap_or(""))
    };
    Ok((if result.valid { EXIT_OBSERVABLE } else { EXIT_NOT_OBSERVABLE }, text))
}

#[derive(Debug, Serialize)]
struct Manifest {
    generator: GenKind,
    seed: u64,
    size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<IntersectionVariant>,
    /// The source problem and its answer.
    question: &'static str,
    answer: bool,
    /// The outcome implied by the answer.
    expected: Outcome,
    /// Some generated models are unbounded; the checker then reports
    /// `unknown` instead of the expected confirmation.
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
    files: Vec<String>,
}

fn gen(a: &GenArgs) -> Result<(i32, String)> {
    std::fs::create_dir_all(&a.out).map_err(|source| Error::Io {
        path: a.out.display().to_string(),
        source,
    })?;
    let mut rng = seeded(a.seed);
    let size = a.size as usize;
    let k = a.components as usize;
    let mut files: Vec<(String, Value)> = Vec::new();
    let mut components = None;
    let mut variant = None;
    let mut note = None;
    let (question, answer, expected) = match a.kind {
        GenKind::Dag => {
            let d = random_dag(&mut rng, size, 0.35)?;
            let (g, c) = gen_dag_nfa(&d)?;
            files.push(("model.json".into(), serde_json::to_value(AutomatonFile::from_nfa(&g))?));
            files.push(("critical.json".into(), serde_json::to_value(CriticalStatesFile::from_set(&g, &c))?));
            files.push(("dag.json".into(), serde_json::to_value(&d)?));
            let reachable = oracle::dag_reachable(&d);
            ("target reachable from source", reachable, refuted_if(reachable))
        }
        GenKind::DfaIntersection | GenKind::UnaryIntersection => {
            let (automata, (net, c)) = if a.kind == GenKind::DfaIntersection {
                let v = match a.variant {
                    VariantArg::SharedObservable => IntersectionVariant::SharedObservable,
                    VariantArg::Unobservable => IntersectionVariant::Unobservable,
                };
                variant = Some(v);
                let dfas = (0..k)
                    .map(|_| random_total_dfa(&mut rng, size, 0.3))
                    .collect::<Result<Vec<_>>>()?;
                let instance = gen_dfa_intersection(&dfas, v)?;
                (dfas, instance)
            } else {
                let nfas = (0..k)
                    .map(|_| random_unary_nfa(&mut rng, size, 0.3))
                    .collect::<Result<Vec<_>>>()?;
                let instance = gen_unary_intersection(&nfas)?;
                (nfas, instance)
            };
            components = Some(a.components);
            files.push(("model.json".into(), serde_json::to_value(NetworkFile::from_network(&net))?));
            files.push(("critical.json".into(), serde_json::to_value(TupleCriticalFile::from_set(&net, &c))?));
            for (i, g) in automata.iter().enumerate() {
                files.push((format!("input{i}.json"), serde_json::to_value(AutomatonFile::from_nfa(g))?));
            }
            let nonempty = oracle::marked_intersection_nonempty(&automata)?;
            ("marked languages intersect", nonempty, refuted_if(nonempty))
        }
        GenKind::PetriReach => {
            let (net, m0) = random_conservative_petri(&mut rng, size, size, 2)?;
            let reach = explore(&net, &m0, ExploreLimits::default())?;
            let target = if rng.gen_bool(0.5) {
                reach.graph.markings.choose(&mut rng).cloned().expect("m0 is reachable")
            } else {
                Marking((0..size).map(|_| rng.gen_range(0..=2)).collect())
            };
            let (g, c) = gen_reachability_petri(&net, &m0, &target)?;
            files.push(("model.json".into(), serde_json::to_value(PetriFile::from_net(&g))?));
            files.push(("critical.json".into(), serde_json::to_value(CriticalMarkingsFile::from_set(&c))?));
            files.push(("target.json".into(), json!({ "initial": m0, "target": target })));
            let reachable = oracle::petri_reachable(&net, &m0, &target, ExploreLimits::default())?
                .ok_or_else(|| Error::Resource {
                    what: "reachability set of the base net".into(),
                    bound: ExploreLimits::default().max_markings.to_string(),
                })?;
            if !reachable {
                note = Some("the gadget is unbounded, so the checker reports unknown");
            }
            ("target marking reachable", reachable, refuted_if(reachable))
        }
        GenKind::MarkingInclusion => {
            let labeled = |rng: &mut _| -> Result<LabeledPetriNet> {
                let (net, m0) = random_conservative_petri(rng, size, size, 2)?;
                let labels = random_labels(rng, size, 2, 0.2);
                LabeledPetriNet::with_labels(net, m0, labels)
            };
            let na = labeled(&mut rng)?;
            let nb = labeled(&mut rng)?;
            let mi = gen_marking_inclusion(&na, &nb)?;
            let c = mi.critical.to_finite(ExploreLimits::default())?;
            files.push(("model.json".into(), serde_json::to_value(PetriFile::from_net(&mi.net))?));
            files.push(("critical.json".into(), serde_json::to_value(CriticalMarkingsFile::from_set(&c))?));
            files.push(("a.json".into(), serde_json::to_value(PetriFile::from_net(&na))?));
            files.push(("b.json".into(), serde_json::to_value(PetriFile::from_net(&nb))?));
            let included = oracle::marking_included(&na, &nb, ExploreLimits::default())?.ok_or_else(|| {
                Error::Resource {
                    what: "reachability sets of A and B".into(),
                    bound: ExploreLimits::default().max_markings.to_string(),
                }
            })?;
            ("R(A) is included in R(B)", included, refuted_if(!included))
        }
    };
    let mut names = Vec::new();
    for (name, value) in &files {
        write_json(&a.out.join(name), value)?;
        names.push(name.clone());
    }
    let manifest = Manifest {
        generator: a.kind,
        seed: a.seed,
        size: a.size,
        components,
        variant,
        question,
        answer,
        expected,
        note,
        files: names,
    };
    write_json(&a.out.join("manifest.json"), &manifest)?;
    let text = if a.json {
        to_json(&manifest)?
    } else {
        format!(
            "wrote {} and manifest.json to {}\n{}: {}; expected {}\n",
            manifest.files.join(", "),
            a.out.display(),
            question,
            answer,
            expected.describe()
        )
    };
    Ok((EXIT_OBSERVABLE, text))
}

fn refuted_if(cond: bool) -> Outcome {
    if cond {
        Outcome::NotCriticallyObservable
    } else {
        Outcome::CriticallyObservable
    }
}
