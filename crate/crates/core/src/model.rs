//! Items, instances and subset helpers.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Opaque item identifier, unique within an instance.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ItemId(String);

impl ItemId {
    pub fn new(id: impl Into<String>) -> Self {
        ItemId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for ItemId {
    fn from(s: &str) -> Self {
        ItemId(s.to_owned())
    }
}

impl From<String> for ItemId {
    fn from(s: String) -> Self {
        ItemId(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub id: ItemId,
    pub value: Rational,
    pub size: Rational,
    /// Position in the tie-breaking bijection onto `1..=n`.
    pub tiebreak: u32,
}

impl Item {
    pub fn new(id: impl Into<ItemId>, value: Rational, size: Rational, tiebreak: u32) -> Self {
        Item {
            id: id.into(),
            value,
            size,
            tiebreak,
        }
    }

    pub fn is_unit_density(&self) -> bool {
        self.value == self.size
    }
}

/// A finite set of items in a fixed listing order.
///
/// Construction checks that sizes are positive, values non-negative, ids
/// distinct and tiebreaks a bijection onto `1..=n`.
#[derive(Clone, Debug)]
pub struct Instance {
    items: Vec<Item>,
    index: HashMap<ItemId, usize>,
    unit_density: bool,
}

impl PartialEq for Instance {
    fn eq(&self, other: &Self) -> bool {
        self.items == other.items
    }
}

impl Eq for Instance {}

impl Instance {
    pub fn new(items: Vec<Item>) -> Result<Self> {
        let n = items.len();
        let mut index = HashMap::with_capacity(n);
        let mut seen_tiebreak = vec![false; n];
        for (pos, item) in items.iter().enumerate() {
            if !item.size.is_positive() {
                return Err(Error::InvalidInstance(format!(
                    "item {} has non-positive size {}",
                    item.id, item.size
                )));
            }
            if item.value.is_negative() {
                return Err(Error::InvalidInstance(format!(
                    "item {} has negative value {}",
                    item.id, item.value
                )));
            }
            let t = item.tiebreak as usize;
            if t == 0 || t > n || std::mem::replace(&mut seen_tiebreak[t - 1], true) {
                return Err(Error::InvalidInstance(format!(
                    "tiebreak {} of item {} is not part of a bijection onto 1..={n}",
                    item.tiebreak, item.id
                )));
            }
            if index.insert(item.id.clone(), pos).is_some() {
                return Err(Error::InvalidInstance(format!("duplicate item id {}", item.id)));
            }
        }
        let unit_density = items.iter().all(Item::is_unit_density);
        Ok(Instance {
            items,
            index,
            unit_density,
        })
    }

    /// Builds an instance whose tiebreaks are the 1-based listing positions.
    pub fn from_triples<I, S>(triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Rational, Rational)>,
        S: Into<ItemId>,
    {
        let items = triples
            .into_iter()
            .enumerate()
            .map(|(pos, (id, value, size))| Item::new(id, value, size, pos as u32 + 1))
            .collect();
        Instance::new(items)
    }

    pub fn empty() -> Self {
        Instance {
            items: Vec::new(),
            index: HashMap::new(),
            unit_density: true,
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn item(&self, index: usize) -> &Item {
        &self.items[index]
    }

    pub fn index_of(&self, id: &ItemId) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownItem(id.to_string()))
    }

    pub fn get(&self, id: &ItemId) -> Result<&Item> {
        Ok(&self.items[self.index_of(id)?])
    }

    /// `true` iff every item has value equal to size.
    pub fn is_unit_density(&self) -> bool {
        self.unit_density
    }

    /// First item whose value differs from its size, if any.
    pub fn first_non_unit_item(&self) -> Option<&Item> {
        self.items.iter().find(|i| !i.is_unit_density())
    }

    pub fn total_size(&self) -> Rational {
        self.items.iter().map(|i| &i.size).sum()
    }

    pub fn total_value(&self) -> Rational {
        self.items.iter().map(|i| &i.value).sum()
    }

    pub fn value_of(&self, indices: &[usize]) -> Rational {
        indices.iter().map(|&i| &self.items[i].value).sum()
    }

    pub fn size_of(&self, indices: &[usize]) -> Rational {
        indices.iter().map(|&i| &self.items[i].size).sum()
    }

    pub fn ids_of(&self, indices: &[usize]) -> Vec<ItemId> {
        indices.iter().map(|&i| self.items[i].id.clone()).collect()
    }

    /// The instance with one item removed; remaining tiebreaks are
    /// renumbered by listing position.
    pub fn without(&self, index: usize) -> Instance {
        let rest: Vec<_> = self
            .items
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, it)| (it.id.clone(), it.value.clone(), it.size.clone()))
            .collect();
        Instance::from_triples(rest).expect("sub-instance of a valid instance")
    }
}
