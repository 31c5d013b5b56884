//! JSON documents for instances, policies, gadgets and SubsetSum inputs.
//!
//! Rationals are always strings such as `"4/3"`, so files round-trip
//! exactly. An instance document may carry gadget metadata next to its
//! items; readers that only need the instance ignore it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{HardnessGadget, Label, SubsetSumInstance};
use crate::model::{Instance, Item, ItemId};
use crate::policy::UniversalPolicy;
use crate::rational::Rational;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ItemDoc {
    pub id: ItemId,
    pub value: Rational,
    pub size: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tiebreak: Option<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicyDoc {
    pub order: Vec<ItemId>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub items: Vec<ItemDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<ItemId, Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<PolicyDoc>,
}

impl InstanceDoc {
    pub fn from_instance(instance: &Instance) -> Self {
        InstanceDoc {
            items: instance
                .items()
                .iter()
                .map(|i| ItemDoc {
                    id: i.id.clone(),
                    value: i.value.clone(),
                    size: i.size.clone(),
                    tiebreak: Some(i.tiebreak),
                })
                .collect(),
            ..InstanceDoc::default()
        }
    }

    pub fn from_gadget(g: &HardnessGadget) -> Self {
        InstanceDoc {
            alpha: Some(g.alpha.clone()),
            epsilon: Some(g.epsilon.clone()),
            target: Some(g.target),
            labels: Some(g.labels.clone()),
            policy: Some(PolicyDoc {
                order: g.policy.order.clone(),
            }),
            ..InstanceDoc::from_instance(&g.instance)
        }
    }

    /// Tiebreaks are either given for every item or for none; in the latter
    /// case they are the 1-based listing positions.
    pub fn to_instance(&self) -> Result<Instance> {
        let given = self.items.iter().filter(|i| i.tiebreak.is_some()).count();
        if given != 0 && given != self.items.len() {
            return Err(Error::InvalidInstance(
                "tiebreak must be given for all items or for none".into(),
            ));
        }
        let items = self
            .items
            .iter()
            .enumerate()
            .map(|(pos, d)| {
                Item::new(
                    d.id.clone(),
                    d.value.clone(),
                    d.size.clone(),
                    d.tiebreak.unwrap_or(pos as u32 + 1),
                )
            })
            .collect();
        Instance::new(items)
    }
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    from_json::<InstanceDoc>(text, "instance")?.to_instance()
}

pub fn instance_to_json(instance: &Instance) -> String {
    to_json(&InstanceDoc::from_instance(instance))
}

pub fn gadget_to_json(gadget: &HardnessGadget) -> String {
    to_json(&InstanceDoc::from_gadget(gadget))
}

/// Accepts a bare `{"order": [...]}` document or any document with a
/// nested `policy` object, such as a gadget file.
pub fn parse_policy(text: &str) -> Result<UniversalPolicy> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        Bare(PolicyDoc),
        Nested { policy: PolicyDoc },
    }
    let doc: Either = from_json(text, "policy")?;
    let (Either::Bare(p) | Either::Nested { policy: p }) = doc;
    Ok(UniversalPolicy::new(p.order))
}

pub fn policy_to_json(policy: &UniversalPolicy) -> String {
    to_json(&PolicyDoc {
        order: policy.order.clone(),
    })
}

pub fn parse_subsetsum(text: &str) -> Result<SubsetSumInstance> {
    let s: SubsetSumInstance = from_json(text, "subset-sum instance")?;
    SubsetSumInstance::new(s.weights, s.target)
}

pub fn subsetsum_to_json(s: &SubsetSumInstance) -> String {
    to_json(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_hardness_general;

    #[test]
    fn instance_round_trip() {
        let inst = Instance::from_triples([
            ("a", Rational::frac(4, 3), Rational::from(2i64)),
            ("b", Rational::zero(), Rational::frac(1, 2)),
        ])
        .unwrap();
        let text = instance_to_json(&inst);
        assert!(text.contains("\"4/3\""));
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn tiebreak_defaults_to_position() {
        let text = r#"{"items":[{"id":"a","value":"1","size":2},{"id":"b","value":"3/2","size":"1"}]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.item(1).tiebreak, 2);
        assert_eq!(inst.item(1).value, Rational::frac(3, 2));
        let mixed = r#"{"items":[{"id":"a","value":"1","size":"2","tiebreak":1},{"id":"b","value":"1","size":"1"}]}"#;
        assert!(parse_instance(mixed).is_err());
        assert!(matches!(parse_instance("{"), Err(Error::Parse(_))));
        let zero = r#"{"items":[{"id":"a","value":"1","size":"0"}]}"#;
        assert!(matches!(parse_instance(zero), Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn gadget_file_serves_as_instance_and_policy() {
        let s = SubsetSumInstance::new(vec![2, 3], 8).unwrap();
        let g = gen_hardness_general(&s, &Rational::from(2i64)).unwrap();
        let text = gadget_to_json(&g);
        assert!(text.contains("\"epsilon\": \"6/13\""));
        assert_eq!(parse_instance(&text).unwrap(), g.instance);
        assert_eq!(parse_policy(&text).unwrap(), g.policy);
        let doc: InstanceDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.labels.unwrap()[&ItemId::from("d")], Label::Dummy);
    }

    #[test]
    fn policy_round_trip() {
        let p = UniversalPolicy::new(vec!["y".into(), "z".into(), "x".into()]);
        let text = policy_to_json(&p);
        assert_eq!(parse_policy(&text).unwrap(), p);
        assert!(parse_policy(r#"{"items":[]}"#).is_err());
    }

    #[test]
    fn subsetsum_round_trip() {
        let s = SubsetSumInstance::new(vec![6, 12], 16).unwrap();
        assert_eq!(parse_subsetsum(&subsetsum_to_json(&s)).unwrap(), s);
        assert!(parse_subsetsum(r#"{"weights":[0],"target":8}"#).is_err());
    }
}
