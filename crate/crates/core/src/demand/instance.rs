use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::generator::{minimal_generator, size_upper_bound};

/// Ordering used for every id in instance files: ids that are plain
/// non-negative integers come first in numeric order, everything else
/// follows in byte order.
pub fn id_order(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> (bool, Option<u128>) {
        match s.parse::<u128>() {
            Ok(v) if s.bytes().all(|c| c.is_ascii_digit()) => (false, Some(v)),
            _ => (true, None),
        }
    }
    key(a).cmp(&key(b)).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Customer {
    pub id: String,
    pub demand: u64,
    #[serde(default)]
    pub attrs: Map<String, Value>,
}

/// A zero-demand node (e.g. a vehicle depot) carried through unchanged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Depot {
    pub id: String,
    #[serde(default)]
    pub attrs: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    /// Number of fulfillers.
    pub k: u64,
    pub customers: Vec<Customer>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub depots: Vec<Depot>,
}

impl InstanceSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: InstanceSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidInstance("k must be at least 1".into()));
        }
        let mut seen = HashSet::new();
        let ids = self
            .customers
            .iter()
            .map(|c| &c.id)
            .chain(self.depots.iter().map(|d| &d.id));
        for id in ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::InvalidInstance(format!("duplicate id `{id}`")));
            }
        }
        if let Some(c) = self.customers.iter().find(|c| c.demand == 0) {
            return Err(Error::InvalidInstance(format!(
                "customer `{}` has zero demand",
                c.id
            )));
        }
        Ok(())
    }

    /// Customers and depots in output order.
    pub fn sorted(&self) -> InstanceSpec {
        let mut out = self.clone();
        out.customers.sort_by(|a, b| id_order(&a.id, &b.id));
        out.depots.sort_by(|a, b| id_order(&a.id, &b.id));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Copy {
    pub copy_id: String,
    pub parent_id: String,
    pub demand: u64,
    #[serde(default)]
    pub attrs: Map<String, Value>,
}

/// An instance whose customers have been replaced by demand copies.
///
/// The file form keeps the original customers next to the copies so that
/// recovery needs only this file and the copy assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawExpanded", into = "RawExpanded")]
pub struct ExpandedInstance {
    original: InstanceSpec,
    copies: Vec<Copy>,
    provenance: BTreeMap<String, Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawExpanded {
    k: u64,
    customers: Vec<Customer>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    depots: Vec<Depot>,
    copies: Vec<Copy>,
}

impl TryFrom<RawExpanded> for ExpandedInstance {
    type Error = Error;

    /// Only accepts exactly what [`expand_instance`] would have produced for
    /// the embedded customers.
    fn try_from(raw: RawExpanded) -> Result<Self> {
        let original = InstanceSpec {
            k: raw.k,
            customers: raw.customers,
            depots: raw.depots,
        };
        let expected = expand_instance(&original)?;
        if expected.original != original {
            return Err(Error::InvalidInstance(
                "customers are not in canonical order".into(),
            ));
        }
        if expected.copies.len() != raw.copies.len() {
            return Err(Error::InvalidInstance(format!(
                "expected {} copies, found {}",
                expected.copies.len(),
                raw.copies.len()
            )));
        }
        if let Some((want, got)) = expected.copies.iter().zip(&raw.copies).find(|(w, g)| w != g) {
            return Err(Error::InvalidInstance(format!(
                "copy `{}` does not match expected copy `{}` of `{}`",
                got.copy_id, want.copy_id, want.parent_id
            )));
        }
        Ok(expected)
    }
}

impl From<ExpandedInstance> for RawExpanded {
    fn from(e: ExpandedInstance) -> Self {
        RawExpanded {
            k: e.original.k,
            customers: e.original.customers,
            depots: e.original.depots,
            copies: e.copies,
        }
    }
}

impl ExpandedInstance {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInstance(e.to_string()))
    }

    pub fn fulfiller_count(&self) -> u64 {
        self.original.k
    }

    /// The source instance, customers in output order.
    pub fn original(&self) -> &InstanceSpec {
        &self.original
    }

    pub fn copies(&self) -> &[Copy] {
        &self.copies
    }

    /// Copy ids of each parent, in ordinal order.
    pub fn provenance(&self) -> &BTreeMap<String, Vec<String>> {
        &self.provenance
    }

    pub fn copy(&self, copy_id: &str) -> Option<&Copy> {
        self.copies.iter().find(|c| c.copy_id == copy_id)
    }
}

/// Replaces every customer with copies `<id>#1`, `<id>#2`, ... carrying the
/// parts of its minimal generator, largest first.
pub fn expand_instance(instance: &InstanceSpec) -> Result<ExpandedInstance> {
    instance.validate()?;
    let original = instance.sorted();
    let mut copies = Vec::new();
    let mut provenance = BTreeMap::new();
    for customer in &original.customers {
        let mu = minimal_generator(customer.demand, original.k)?;
        let ids: Vec<String> = (1..=mu.size()).map(|i| format!("{}#{i}", customer.id)).collect();
        for (copy_id, &demand) in ids.iter().zip(mu.parts()) {
            copies.push(Copy {
                copy_id: copy_id.clone(),
                parent_id: customer.id.clone(),
                demand,
                attrs: customer.attrs.clone(),
            });
        }
        provenance.insert(customer.id.clone(), ids);
    }
    Ok(ExpandedInstance {
        original,
        copies,
        provenance,
    })
}

/// Sum over customers of the logarithmic size bound; never below the number
/// of copies [`expand_instance`] creates.
pub fn expansion_bound(instance: &InstanceSpec) -> Result<u64> {
    instance.validate()?;
    instance.customers.iter().try_fold(0u64, |acc, c| {
        acc.checked_add(size_upper_bound(c.demand, instance.k)?)
            .ok_or(Error::Overflow("summing expansion bounds"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn customer(id: &str, demand: u64) -> Customer {
        Customer {
            id: id.into(),
            demand,
            attrs: Map::new(),
        }
    }

    fn spec(k: u64, customers: Vec<Customer>) -> InstanceSpec {
        InstanceSpec {
            k,
            customers,
            depots: Vec::new(),
        }
    }

    #[test]
    fn two_customer_expansion() {
        let inst = spec(3, vec![customer("B", 4), customer("A", 9)]);
        let e = expand_instance(&inst).unwrap();
        let a: Vec<u64> = e
            .copies()
            .iter()
            .filter(|c| c.parent_id == "A")
            .map(|c| c.demand)
            .collect();
        let b: Vec<u64> = e
            .copies()
            .iter()
            .filter(|c| c.parent_id == "B")
            .map(|c| c.demand)
            .collect();
        assert_eq!(a, vec![3, 2, 2, 1, 1]);
        assert_eq!(b, vec![2, 1, 1]);
        assert_eq!(e.copies().len(), 8);
        assert_eq!(e.copies()[0].copy_id, "A#1");
        assert_eq!(e.provenance()["B"], vec!["B#1", "B#2", "B#3"]);
        assert_eq!(expansion_bound(&inst).unwrap(), 12);
    }

    #[test]
    fn trivial_expansions() {
        for k in 1..6 {
            let inst = spec(k, vec![customer("A", 1)]);
            let e = expand_instance(&inst).unwrap();
            assert_eq!(e.copies().len(), 1);
            assert_eq!(e.copies()[0].demand, 1);
            assert_eq!(expansion_bound(&inst).unwrap(), 1);
        }
        let inst = spec(1, vec![customer("x", 7), customer("y", 30), customer("z", 2)]);
        let e = expand_instance(&inst).unwrap();
        assert_eq!(e.copies().len(), 3);
        assert!(e
            .copies()
            .iter()
            .zip(&inst.customers)
            .all(|(c, p)| c.demand == p.demand));
        assert_eq!(expansion_bound(&inst).unwrap(), 3);
    }

    #[test]
    fn attrs_are_copied_to_every_copy() {
        let mut c = customer("A", 5);
        c.attrs.insert("x".into(), json!(1.5));
        let e = expand_instance(&spec(2, vec![c.clone()])).unwrap();
        assert!(e.copies().iter().all(|copy| copy.attrs == c.attrs));
    }

    #[test]
    fn rejects_invalid_instances() {
        assert!(expand_instance(&spec(3, vec![customer("A", 1), customer("A", 2)])).is_err());
        assert!(expand_instance(&spec(3, vec![customer("A", 0)])).is_err());
        assert!(expand_instance(&spec(0, vec![customer("A", 2)])).is_err());
        assert!(InstanceSpec::from_json(r#"{"k":2,"customers":[{"id":"A","demand":2.5}]}"#).is_err());
        assert!(InstanceSpec::from_json(r#"{"k":2,"customers":[{"id":"A","demand":-1}]}"#).is_err());
        assert!(InstanceSpec::from_json(r#"{"k":2,"customers":[{"id":"A","demand":3}]}"#).is_ok());
    }

    #[test]
    fn natural_id_order() {
        let mut ids = vec!["10", "b", "2", "a", "1", "02"];
        ids.sort_by(|a, b| id_order(a, b));
        assert_eq!(ids, vec!["1", "02", "2", "10", "a", "b"]);
    }

    #[test]
    fn expanded_json_round_trip_and_validation() {
        let e = expand_instance(&spec(3, vec![customer("A", 9), customer("B", 4)])).unwrap();
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(ExpandedInstance::from_json(&text).unwrap(), e);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["copies"][0]["copy_id"], "A#1");
        assert!(ExpandedInstance::from_json(&text.replace("\"demand\":3", "\"demand\":4")).is_err());
        assert!(ExpandedInstance::from_json(&text.replace("A#5", "A#6")).is_err());
    }
}
