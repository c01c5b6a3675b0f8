//! JSON file formats for models, critical sets and witnesses.
//!
//! Every conversion error names the offending field, e.g.
//! `transitions[3]: unknown state `q9``; [`read_json`] additionally prefixes
//! the file path and reports parse errors with line and column.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::alphabet::EventAlphabet;
use crate::error::{Error, Result};
use crate::network::{Network, TupleCriticalSet};
use crate::nfa::{Nfa, StateSet};
use crate::petri::{CriticalMarkingSet, CriticalMode, LabeledPetriNet, Marking, PetriNet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventSpec {
    pub name: String,
    pub observable: bool,
}

/// `{ "states", "events", "transitions": [[src, event, dst]], "initial", "marked" }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonFile {
    pub states: Vec<String>,
    pub events: Vec<EventSpec>,
    #[serde(default)]
    pub transitions: Vec<(String, String, String)>,
    pub initial: Vec<String>,
    #[serde(default)]
    pub marked: Vec<String>,
}

impl AutomatonFile {
    pub fn from_nfa(g: &Nfa) -> Self {
        let sigma = g.alphabet();
        AutomatonFile {
            states: g.state_names().to_vec(),
            events: sigma
                .events()
                .map(|e| EventSpec {
                    name: sigma.name(e).to_string(),
                    observable: sigma.is_observable(e),
                })
                .collect(),
            transitions: g
                .transitions()
                .map(|(p, e, q)| {
                    (
                        g.state_name(p).to_string(),
                        sigma.name(e).to_string(),
                        g.state_name(q).to_string(),
                    )
                })
                .collect(),
            initial: g.initial().iter().map(|&q| g.state_name(q).to_string()).collect(),
            marked: g.marked().iter().map(|&q| g.state_name(q).to_string()).collect(),
        }
    }

    pub fn to_nfa(&self) -> Result<Nfa> {
        let alphabet = EventAlphabet::new(self.events.iter().map(|e| (e.name.clone(), e.observable)))
            .map_err(|e| e.at("events"))?;
        let index: BTreeMap<&str, usize> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != self.states.len() {
            return Err(Error::invalid("duplicate state name").at("states"));
        }
        let state = |name: &str, at: String| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownState(name.to_string()).at(at))
        };
        let mut transitions = Vec::with_capacity(self.transitions.len());
        for (i, (p, e, q)) in self.transitions.iter().enumerate() {
            let at = || format!("transitions[{i}]");
            transitions.push((
                state(p, at())?,
                alphabet.require(e).map_err(|err| err.at(at()))?,
                state(q, at())?,
            ));
        }
        let list = |names: &[String], field: &str| {
            names
                .iter()
                .enumerate()
                .map(|(i, n)| state(n, format!("{field}[{i}]")))
                .collect::<Result<Vec<_>>>()
        };
        let initial = list(&self.initial, "initial")?;
        let marked = list(&self.marked, "marked")?;
        Nfa::from_parts(self.states.clone(), alphabet, transitions, initial, marked)
    }
}

/// `{ "states": [names] }`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalStatesFile {
    #[serde(default)]
    pub states: Vec<String>,
}

impl CriticalStatesFile {
    pub fn from_set(g: &Nfa, c: &StateSet) -> Self {
        CriticalStatesFile { states: g.names_of(c) }
    }

    pub fn to_set(&self, g: &Nfa) -> Result<StateSet> {
        StateSet::from_names(g, &self.states).map_err(|e| e.at("states"))
    }
}

/// A network component: inline automaton or path to an automaton file,
/// relative to the network file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentRef {
    Path(String),
    Inline(AutomatonFile),
}

/// `{ "components": [automaton | path] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub components: Vec<ComponentRef>,
}

impl NetworkFile {
    pub fn from_network(net: &Network) -> Self {
        NetworkFile {
            components: net
                .components()
                .iter()
                .map(|g| ComponentRef::Inline(AutomatonFile::from_nfa(g)))
                .collect(),
        }
    }

    /// Path components are resolved against `base`.
    pub fn to_network(&self, base: &Path) -> Result<Network> {
        let mut components = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let g = match c {
                ComponentRef::Inline(a) => a.to_nfa(),
                ComponentRef::Path(p) => {
                    let path = base.join(p);
                    read_json::<AutomatonFile>(&path).and_then(|a| a.to_nfa().map_err(|e| e.at(path.display().to_string())))
                }
            };
            components.push(g.map_err(|e| e.at(format!("components[{i}]")))?);
        }
        Network::new(components)
    }
}

/// `{ "tuples": [[names]], "product": [{component index: [names]}] }`. Each
/// product object is one term `A_1 × … × A_n`; a missing index means all
/// states of that component.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleCriticalFile {
    #[serde(default)]
    pub tuples: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub product: Vec<BTreeMap<String, Vec<String>>>,
}

impl TupleCriticalFile {
    /// Explicit tuples in sorted order; product terms are written out too.
    pub fn from_set(net: &Network, c: &TupleCriticalSet) -> Self {
        let mut tuples: Vec<_> = c.explicit_tuples().cloned().collect();
        tuples.sort();
        let product = c
            .products()
            .iter()
            .map(|factors| {
                factors
                    .iter()
                    .enumerate()
                    .filter_map(|(i, f)| f.as_ref().map(|s| (i.to_string(), net.components()[i].names_of(s))))
                    .collect()
            })
            .collect();
        TupleCriticalFile {
            tuples: tuples.iter().map(|t| net.tuple_names(t)).collect(),
            product,
        }
    }

    pub fn to_set(&self, net: &Network) -> Result<TupleCriticalSet> {
        let mut c = TupleCriticalSet::empty(net);
        for (i, t) in self.tuples.iter().enumerate() {
            let at = || format!("tuples[{i}]");
            let tuple = net.tuple_from_names(t).map_err(|e| e.at(at()))?;
            c.add_tuple(tuple).map_err(|e| e.at(at()))?;
        }
        for (i, term) in self.product.iter().enumerate() {
            let mut factors = vec![None; net.len()];
            for (k, names) in term {
                let at = || format!("product[{i}].{k}");
                let idx: usize = k
                    .parse()
                    .ok()
                    .filter(|&j| j < net.len())
                    .ok_or_else(|| Error::invalid(format!("`{k}` is not a component index")).at(at()))?;
                let set = StateSet::from_names(&net.components()[idx], names).map_err(|e| e.at(at()))?;
                factors[idx] = Some(set);
            }
            c.add_product(factors).map_err(|e| e.at(format!("product[{i}]")))?;
        }
        Ok(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionSpec {
    pub name: String,
    /// `null` is the empty label.
    pub label: Option<String>,
}

/// `{ "places", "transitions": [{name, label}], "pre", "post", "initial",
/// "alphabet" }`; `pre` and `post` are indexed `[place][transition]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PetriFile {
    pub places: Vec<String>,
    pub transitions: Vec<TransitionSpec>,
    pub pre: Vec<Vec<u64>>,
    pub post: Vec<Vec<u64>>,
    pub initial: Vec<u64>,
    /// Defaults to the labels in use.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
}

impl PetriFile {
    pub fn from_net(g: &LabeledPetriNet) -> Self {
        PetriFile {
            places: g.net.places().to_vec(),
            transitions: g
                .net
                .transitions()
                .iter()
                .zip(g.labels())
                .map(|(name, label)| TransitionSpec {
                    name: name.clone(),
                    label: label.clone(),
                })
                .collect(),
            pre: g.net.pre_matrix(),
            post: g.net.post_matrix(),
            initial: g.initial.0.clone(),
            alphabet: Some(g.alphabet().to_vec()),
        }
    }

    pub fn to_net(&self) -> Result<LabeledPetriNet> {
        let names = self.transitions.iter().map(|t| t.name.clone()).collect();
        let net = PetriNet::new(self.places.clone(), names, self.pre.clone(), self.post.clone())?;
        let initial = Marking(self.initial.clone());
        net.check_marking(&initial).map_err(|e| e.at("initial"))?;
        let labels = self.transitions.iter().map(|t| t.label.clone()).collect();
        match &self.alphabet {
            Some(sigma) => LabeledPetriNet::new(net, initial, labels, sigma.clone()),
            None => LabeledPetriNet::with_labels(net, initial, labels),
        }
    }
}

/// `{ "mode": "finite" | "cofinite", "markings": [[int]] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalMarkingsFile {
    pub mode: CriticalMode,
    #[serde(default)]
    pub markings: Vec<Vec<u64>>,
}

impl CriticalMarkingsFile {
    pub fn from_set(c: &CriticalMarkingSet) -> Self {
        CriticalMarkingsFile {
            mode: c.mode(),
            markings: c.markings().iter().map(|m| m.0.clone()).collect(),
        }
    }

    pub fn to_set(&self, g: &LabeledPetriNet) -> Result<CriticalMarkingSet> {
        let c = CriticalMarkingSet::new(self.mode, self.markings.iter().cloned().map(Marking).collect())?;
        c.check_dimension(g.net.num_places())?;
        Ok(c)
    }
}

/// What a model file describes, told apart by its top-level keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Automaton,
    Network,
    Petri,
}

impl ModelKind {
    pub fn detect(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::invalid("model must be a JSON object"))?;
        Ok(if obj.contains_key("components") {
            ModelKind::Network
        } else if obj.contains_key("places") {
            ModelKind::Petri
        } else if obj.contains_key("states") {
            ModelKind::Automaton
        } else {
            return Err(Error::invalid(
                "cannot tell the model kind: expected `states`, `components` or `places`",
            ));
        })
    }
}

pub fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses a JSON file; errors carry the path and, for syntax or schema
/// errors, the line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let bytes = read_bytes(path)?;
    parse_json(&bytes).map_err(|e| e.at(path.display().to_string()))
}

pub fn parse_json<T: DeserializeOwned>(bytes: &[u8]) -> Result<T> {
    serde_json::from_slice(bytes).map_err(|e| {
        let loc = format!("line {} column {}", e.line(), e.column());
        Error::Json(e).at(loc)
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Loads a file with `load`, attaching the path to any error.
fn load<F: DeserializeOwned, T>(path: &Path, convert: impl FnOnce(F) -> Result<T>) -> Result<T> {
    let file = read_json::<F>(path)?;
    convert(file).map_err(|e| e.at(path.display().to_string()))
}

pub fn load_nfa(path: &Path) -> Result<Nfa> {
    load(path, |f: AutomatonFile| f.to_nfa())
}

pub fn load_network(path: &Path) -> Result<Network> {
    let base: PathBuf = path.parent().map(Path::to_path_buf).unwrap_or_default();
    load(path, |f: NetworkFile| f.to_network(&base))
}

pub fn load_petri(path: &Path) -> Result<LabeledPetriNet> {
    load(path, |f: PetriFile| f.to_net())
}

pub fn load_critical_states(path: &Path, g: &Nfa) -> Result<StateSet> {
    load(path, |f: CriticalStatesFile| f.to_set(g))
}

pub fn load_tuple_critical(path: &Path, net: &Network) -> Result<TupleCriticalSet> {
    load(path, |f: TupleCriticalFile| f.to_set(net))
}

pub fn load_critical_markings(path: &Path, g: &LabeledPetriNet) -> Result<CriticalMarkingSet> {
    load(path, |f: CriticalMarkingsFile| f.to_set(g))
}
