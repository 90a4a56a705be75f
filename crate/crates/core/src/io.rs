//! JSON file formats.
//!
//! Rationals are always strings `"p"` or `"p/q"`; numbers with a decimal
//! point or exponent are rejected so no precision is ever lost silently.
//!
//! - charge: `[{"re": "p/q", "im": "p/q"}, …]`, one entry per vertex;
//! - path: a list of charges;
//! - state: `{diagram, charge, slots: [{class, ledger}], log, shift}`;
//! - events: `[{segment, time, slot, direction}, …]`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::charges::CentralCharge;
use crate::cover::{ChargePath, CoverState, Event, Slot};
use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::gauss::{parse_rational, Gauss};
use crate::weylbraid::BraidWord;

/// Serialized form of a [`CoverState`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub diagram: String,
    pub charge: CentralCharge,
    pub slots: Vec<Slot>,
    pub log: BraidWord,
    /// Net number of whole-heart shifts; older dumps without it mean 0.
    #[serde(default)]
    pub shift: i64,
}

impl StateJson {
    pub fn from_state(s: &CoverState) -> Self {
        StateJson {
            diagram: s.diagram().name(),
            charge: s.charge().clone(),
            slots: s.slots().to_vec(),
            log: s.log().clone(),
            shift: s.shift_count(),
        }
    }

    /// Rebuilds the state and checks all of its invariants.
    pub fn into_state(self) -> Result<CoverState> {
        let d: Diagram = self.diagram.parse()?;
        crate::error::check_dim(d.size(), self.charge.len())?;
        crate::error::check_dim(d.size(), self.slots.len())?;
        for s in &self.slots {
            crate::error::check_dim(d.size(), s.class.len())?;
        }
        self.log.validate(&d)?;
        let state = CoverState::from_parts(d, self.charge, self.slots, self.log, self.shift)?;
        state.check_invariants(None).map_err(|e| match e {
            Error::Invariant(m) => Error::invalid(format!("inconsistent state: {m}")),
            other => other,
        })?;
        Ok(state)
    }
}

pub fn state_to_json(s: &CoverState) -> String {
    serde_json::to_string_pretty(&StateJson::from_state(s)).expect("states serialize")
}

pub fn state_from_json(text: &str) -> Result<CoverState> {
    let raw: StateJson = serde_json::from_str(text).map_err(json_error)?;
    raw.into_state()
}

fn json_error(e: serde_json::Error) -> Error {
    Error::invalid(format!(
        "malformed JSON at line {}, column {}: {e}",
        e.line(),
        e.column()
    ))
}

fn rational_field(entry: &Value, key: &str, at: &str) -> Result<crate::gauss::Rational> {
    match entry.get(key) {
        Some(Value::String(s)) => {
            parse_rational(s).map_err(|e| Error::invalid(format!("{at}, field {key:?}: {e}")))
        }
        Some(other) => Err(Error::invalid(format!(
            "{at}, field {key:?}: expected a rational string like \"1/2\", got {other}"
        ))),
        None => Err(Error::invalid(format!("{at}: missing field {key:?}"))),
    }
}

fn charge_from_value(v: &Value, at: &str) -> Result<CentralCharge> {
    let Value::Array(entries) = v else {
        return Err(Error::invalid(format!(
            "{at}: expected a list of {{\"re\", \"im\"}} objects"
        )));
    };
    let mut out = Vec::with_capacity(entries.len());
    for (i, e) in entries.iter().enumerate() {
        let here = format!("{at}entry {i}");
        if !e.is_object() {
            return Err(Error::invalid(format!("{here}: expected an object")));
        }
        if let Some(extra) = e
            .as_object()
            .and_then(|o| o.keys().find(|k| *k != "re" && *k != "im"))
        {
            return Err(Error::invalid(format!("{here}: unknown field {extra:?}")));
        }
        out.push(Gauss::new(
            rational_field(e, "re", &here)?,
            rational_field(e, "im", &here)?,
        ));
    }
    Ok(CentralCharge(out))
}

/// Parses a charge, reporting the offending entry on failure. When `d` is
/// given the length must match its vertex count.
pub fn parse_charge(text: &str, d: Option<&Diagram>) -> Result<CentralCharge> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    let z = charge_from_value(&v, "charge ")?;
    if let Some(d) = d {
        crate::error::check_dim(d.size(), z.len())?;
    }
    Ok(z)
}

/// Parses a path file: a JSON list of at least two charges.
pub fn parse_path(text: &str, d: Option<&Diagram>) -> Result<ChargePath> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    let Value::Array(items) = v else {
        return Err(Error::invalid("a path is a list of charges"));
    };
    let mut vertices = Vec::with_capacity(items.len());
    for (k, item) in items.iter().enumerate() {
        let z = charge_from_value(item, &format!("path vertex {k}, "))?;
        if let Some(d) = d {
            crate::error::check_dim(d.size(), z.len())?;
        }
        vertices.push(z);
    }
    ChargePath::new(vertices)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_charge_file(path: &Path, d: Option<&Diagram>) -> Result<CentralCharge> {
    parse_charge(&read(path)?, d).map_err(|e| in_file(path, e))
}

pub fn parse_path_file(path: &Path, d: Option<&Diagram>) -> Result<ChargePath> {
    parse_path(&read(path)?, d).map_err(|e| in_file(path, e))
}

pub fn parse_state_file(path: &Path) -> Result<CoverState> {
    state_from_json(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::InvalidInput(m) => Error::invalid(format!("{}: {m}", path.display())),
        other => other,
    }
}

pub fn charge_to_json(z: &CentralCharge) -> String {
    serde_json::to_string(z).expect("charges serialize")
}

pub fn path_to_json(p: &ChargePath) -> String {
    serde_json::to_string(p).expect("paths serialize")
}

pub fn events_to_json(events: &[Event]) -> String {
    serde_json::to_string_pretty(events).expect("events serialize")
}

pub fn events_from_json(text: &str) -> Result<Vec<Event>> {
    serde_json::from_str(text).map_err(json_error)
}
