//! Event alphabets partitioned into observable and unobservable events.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type EventId = usize;

/// A word over an alphabet, as a sequence of event indices.
pub type Word = Vec<EventId>;

/// Ordered set of events, each flagged observable or unobservable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventAlphabet {
    names: Vec<String>,
    observable: Vec<bool>,
    index: HashMap<String, EventId>,
}

impl EventAlphabet {
    /// Builds an alphabet from `(name, observable)` pairs. Names must be unique
    /// and the list nonempty.
    pub fn new<S: Into<String>>(events: impl IntoIterator<Item = (S, bool)>) -> Result<Self> {
        let mut alphabet = EventAlphabet {
            names: Vec::new(),
            observable: Vec::new(),
            index: HashMap::new(),
        };
        for (name, observable) in events {
            let name = name.into();
            if alphabet.index.contains_key(&name) {
                return Err(Error::invalid(format!("duplicate event `{name}`")));
            }
            alphabet.index.insert(name.clone(), alphabet.names.len());
            alphabet.names.push(name);
            alphabet.observable.push(observable);
        }
        if alphabet.names.is_empty() {
            return Err(Error::invalid("alphabet must contain at least one event"));
        }
        Ok(alphabet)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, e: EventId) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Option<EventId> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<EventId> {
        self.id(name).ok_or_else(|| Error::UnknownEvent(name.to_string()))
    }

    pub fn is_observable(&self, e: EventId) -> bool {
        self.observable[e]
    }

    pub fn events(&self) -> impl Iterator<Item = EventId> + '_ {
        0..self.names.len()
    }

    pub fn observable_events(&self) -> impl Iterator<Item = EventId> + '_ {
        self.events().filter(|&e| self.observable[e])
    }

    pub fn unobservable_events(&self) -> impl Iterator<Item = EventId> + '_ {
        self.events().filter(|&e| !self.observable[e])
    }

    /// Erases unobservable events from `word`, keeping the order of the rest.
    pub fn project(&self, word: &[EventId]) -> Result<Word> {
        let mut out = Vec::with_capacity(word.len());
        for &e in word {
            if e >= self.names.len() {
                return Err(Error::UnknownEvent(format!("#{e}")));
            }
            if self.observable[e] {
                out.push(e);
            }
        }
        Ok(out)
    }

    /// Same as [`EventAlphabet::project`] over event names.
    pub fn project_names<S: AsRef<str>>(&self, word: &[S]) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for name in word {
            let e = self.require(name.as_ref())?;
            if self.observable[e] {
                out.push(self.names[e].clone());
            }
        }
        Ok(out)
    }

    pub fn render(&self, word: &[EventId]) -> Vec<String> {
        word.iter().map(|&e| self.names[e].clone()).collect()
    }
}
