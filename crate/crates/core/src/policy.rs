//! Universal (fixed-order) and decision-tree packing policies.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Instance, ItemId};

/// A fixed order in which items are tried, independent of what fit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalPolicy {
    pub order: Vec<ItemId>,
}

impl UniversalPolicy {
    pub fn new(order: Vec<ItemId>) -> Self {
        UniversalPolicy { order }
    }

    pub fn from_indices(instance: &Instance, indices: &[usize]) -> Self {
        UniversalPolicy {
            order: instance.ids_of(indices),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Maps the order onto instance indices, checking that it is a
    /// permutation of the instance's items.
    pub fn resolve(&self, instance: &Instance) -> Result<Vec<usize>> {
        if self.order.len() != instance.len() {
            return Err(Error::MalformedPolicy(format!(
                "policy lists {} items but the instance has {}",
                self.order.len(),
                instance.len()
            )));
        }
        let mut seen = vec![false; instance.len()];
        self.order
            .iter()
            .map(|id| {
                let idx = instance
                    .index_of(id)
                    .map_err(|_| Error::MalformedPolicy(format!("unknown item {id}")))?;
                if std::mem::replace(&mut seen[idx], true) {
                    return Err(Error::MalformedPolicy(format!("item {id} listed twice")));
                }
                Ok(idx)
            })
            .collect()
    }
}

/// Node of a [`DecisionTreePolicy`]. `fit` is followed when the node's item
/// was packed, `no_fit` when it was discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub item: ItemId,
    pub fit: Option<usize>,
    pub no_fit: Option<usize>,
}

/// An adaptive policy stored as an arena of nodes. Nodes may be shared
/// between branches, so a universal policy is a chain of `n` nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionTreePolicy {
    nodes: Vec<TreeNode>,
    root: Option<usize>,
}

impl DecisionTreePolicy {
    pub fn new(nodes: Vec<TreeNode>, root: Option<usize>) -> Result<Self> {
        let in_range = |i: Option<usize>| i.map_or(true, |i| i < nodes.len());
        if !in_range(root)
            || nodes
                .iter()
                .any(|n| !in_range(n.fit) || !in_range(n.no_fit))
        {
            return Err(Error::MalformedPolicy("node reference out of range".into()));
        }
        Ok(DecisionTreePolicy { nodes, root })
    }

    /// The degenerate tree that tries `policy.order` on every path.
    pub fn from_universal(policy: &UniversalPolicy) -> Self {
        let n = policy.order.len();
        let nodes = policy
            .order
            .iter()
            .enumerate()
            .map(|(i, id)| {
                let next = (i + 1 < n).then_some(i + 1);
                TreeNode {
                    item: id.clone(),
                    fit: next,
                    no_fit: next,
                }
            })
            .collect();
        DecisionTreePolicy {
            nodes,
            root: (n > 0).then_some(0),
        }
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    /// Checks that every root-to-leaf path tries every item exactly once.
    pub fn validate(&self, instance: &Instance) -> Result<()> {
        let n = instance.len();
        let Some(root) = self.root else {
            return if n == 0 {
                Ok(())
            } else {
                Err(Error::MalformedPolicy("empty tree for a non-empty instance".into()))
            };
        };
        // (node, items already on the path); shared subtrees are visited
        // once per distinct path prefix set
        let mut visited: HashSet<(usize, Vec<bool>)> = HashSet::new();
        let mut stack = vec![(root, vec![false; n])];
        while let Some((node, mut seen)) = stack.pop() {
            let idx = instance.index_of(&self.nodes[node].item).map_err(|_| {
                Error::MalformedPolicy(format!("unknown item {}", self.nodes[node].item))
            })?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::MalformedPolicy(format!(
                    "item {} appears twice on a path",
                    self.nodes[node].item
                )));
            }
            let depth = seen.iter().filter(|&&s| s).count();
            let TreeNode { fit, no_fit, .. } = self.nodes[node];
            match (depth == n, fit, no_fit) {
                (true, None, None) => {}
                (true, _, _) => {
                    return Err(Error::MalformedPolicy(
                        "path continues after all items were tried".into(),
                    ))
                }
                (false, Some(f), Some(nf)) => {
                    for child in [f, nf] {
                        if visited.insert((child, seen.clone())) {
                            stack.push((child, seen.clone()));
                        }
                    }
                }
                (false, _, _) => {
                    return Err(Error::MalformedPolicy(format!(
                        "path ends after {depth} of {n} items"
                    )))
                }
            }
        }
        Ok(())
    }
}
