//! Reader for TSPLIB / CVRPLIB style instance files.
//!
//! Only the pieces needed for demand expansion are interpreted: `DIMENSION`,
//! `NODE_COORD_SECTION`, `DEMAND_SECTION` and `DEPOT_SECTION`. `CAPACITY` and
//! any other header or section is skipped.

use std::collections::BTreeMap;

use serde_json::{Map, Number, Value};

use super::instance::{Customer, Depot, InstanceSpec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Coords,
    Demands,
    Depots,
    Skipped,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Tsplib {
        line,
        message: message.into(),
    }
}

fn number(token: &str, line: usize) -> Result<Value> {
    if let Ok(v) = token.parse::<i64>() {
        return Ok(Value::from(v));
    }
    token
        .parse::<f64>()
        .ok()
        .and_then(Number::from_f64)
        .map(Value::Number)
        .ok_or_else(|| err(line, format!("`{token}` is not a finite number")))
}

fn parse_id(token: &str, line: usize) -> Result<u64> {
    token
        .parse::<u64>()
        .map_err(|_| err(line, format!("node id `{token}` is not a non-negative integer")))
}

/// Parses the file into the native form with `k` fulfillers.
///
/// Depots come from `DEPOT_SECTION` when present; otherwise node 1 is the
/// depot if its demand is 0. Depots keep their coordinates and are not
/// expanded. Every other node needs a positive integer demand.
pub fn parse_tsplib(text: &str, k: u64) -> Result<InstanceSpec> {
    let mut dimension: Option<usize> = None;
    let mut coords: BTreeMap<u64, Map<String, Value>> = BTreeMap::new();
    let mut demands: BTreeMap<u64, u64> = BTreeMap::new();
    let mut depot_ids: Vec<u64> = Vec::new();
    let mut saw_depot_section = false;
    let mut section = Section::None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let starts_with_number = line
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_digit() || c == '-' || c == '+' || c == '.');
        if !starts_with_number {
            let (key, value) = match line.split_once(':') {
                Some((k, v)) => (k.trim(), Some(v.trim())),
                None => (line.split_whitespace().next().unwrap_or(line), None),
            };
            section = match key {
                "NODE_COORD_SECTION" => Section::Coords,
                "DEMAND_SECTION" => Section::Demands,
                "DEPOT_SECTION" => {
                    saw_depot_section = true;
                    Section::Depots
                }
                "EOF" => break,
                "DIMENSION" => {
                    let v = value.ok_or_else(|| err(line_no, "DIMENSION needs a value"))?;
                    let d = v
                        .parse::<usize>()
                        .map_err(|_| err(line_no, format!("bad DIMENSION `{v}`")))?;
                    dimension = Some(d);
                    Section::None
                }
                k if k.ends_with("_SECTION") => Section::Skipped,
                _ => Section::None,
            };
            continue;
        }

        let tokens: Vec<&str> = line.split_whitespace().collect();
        match section {
            Section::Coords => {
                if !(3..=4).contains(&tokens.len()) {
                    return Err(err(line_no, "coordinate lines need an id and 2 or 3 values"));
                }
                let id = parse_id(tokens[0], line_no)?;
                let mut attrs = Map::new();
                for (name, tok) in ["x", "y", "z"].iter().zip(&tokens[1..]) {
                    attrs.insert(name.to_string(), number(tok, line_no)?);
                }
                if coords.insert(id, attrs).is_some() {
                    return Err(err(line_no, format!("node {id} has two coordinate lines")));
                }
            }
            Section::Demands => {
                if tokens.len() != 2 {
                    return Err(err(line_no, "demand lines need an id and a demand"));
                }
                let id = parse_id(tokens[0], line_no)?;
                let demand = tokens[1].parse::<u64>().map_err(|_| {
                    err(
                        line_no,
                        format!("demand `{}` is not a non-negative integer", tokens[1]),
                    )
                })?;
                if demands.insert(id, demand).is_some() {
                    return Err(err(line_no, format!("node {id} has two demand lines")));
                }
            }
            Section::Depots => {
                for tok in tokens {
                    if tok == "-1" {
                        section = Section::None;
                        break;
                    }
                    depot_ids.push(parse_id(tok, line_no)?);
                }
            }
            Section::Skipped => {}
            Section::None => return Err(err(line_no, "data outside of a section")),
        }
    }

    let dimension = dimension.ok_or_else(|| err(0, "missing DIMENSION"))?;
    if demands.len() != dimension {
        return Err(err(
            0,
            format!(
                "DIMENSION is {dimension} but {} demands were given",
                demands.len()
            ),
        ));
    }
    if !coords.is_empty() && coords.len() != dimension {
        return Err(err(
            0,
            format!(
                "DIMENSION is {dimension} but {} coordinates were given",
                coords.len()
            ),
        ));
    }
    if let Some(id) = coords.keys().find(|id| !demands.contains_key(id)) {
        return Err(err(0, format!("node {id} has coordinates but no demand")));
    }
    if !saw_depot_section && demands.get(&1) == Some(&0) {
        depot_ids.push(1);
    }
    if let Some(id) = depot_ids.iter().find(|id| !demands.contains_key(id)) {
        return Err(err(0, format!("depot {id} has no demand line")));
    }

    let mut customers = Vec::new();
    let mut depots = Vec::new();
    for (id, demand) in demands {
        let attrs = coords.remove(&id).unwrap_or_default();
        if depot_ids.contains(&id) {
            if demand != 0 {
                return Err(err(0, format!("depot {id} has demand {demand}")));
            }
            depots.push(Depot {
                id: id.to_string(),
                attrs,
            });
        } else if demand == 0 {
            return Err(err(0, format!("node {id} has zero demand and is not a depot")));
        } else {
            customers.push(Customer {
                id: id.to_string(),
                demand,
                attrs,
            });
        }
    }
    let spec = InstanceSpec { k, customers, depots };
    spec.validate()?;
    Ok(spec)
}
