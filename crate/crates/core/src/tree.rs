//! Prefix-closed k-ary color trees.
//!
//! A tree is either an explicit finite node set (validated on construction) or
//! a membership oracle that may describe an infinite tree. The visit engine only
//! ever asks membership questions, so both behave the same from its point of
//! view.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{Color, ColorWord, PriorityList};

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("the tree does not contain the empty word")]
    MissingRoot,
    #[error("node {node} is present but its prefix {missing} is not")]
    NotPrefixClosed { node: ColorWord, missing: ColorWord },
    #[error("node {node} uses color {color}, out of range for k = {k}")]
    ColorOutOfRange { node: ColorWord, color: Color, k: u32 },
    #[error("node {0} is not in the tree")]
    NodeNotInTree(ColorWord),
    #[error("root {0} is not in the tree")]
    RootNotInTree(ColorWord),
    #[error("unknown tree family {0:?}")]
    UnknownFamily(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed tree file: {0}")]
    Json(#[from] serde_json::Error),
}

type Membership = dyn Fn(&ColorWord) -> bool + Send + Sync;

#[derive(Clone)]
enum Repr {
    Finite(Arc<BTreeSet<ColorWord>>),
    Oracle(Arc<Membership>),
}

/// A prefix-closed set of color words over `k` colors containing the root.
#[derive(Clone)]
pub struct ColorTree {
    k: u32,
    repr: Repr,
}

impl fmt::Debug for ColorTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Finite(nodes) => f
                .debug_struct("ColorTree")
                .field("k", &self.k)
                .field("nodes", nodes)
                .finish(),
            Repr::Oracle(_) => f
                .debug_struct("ColorTree")
                .field("k", &self.k)
                .field("nodes", &"<oracle>")
                .finish(),
        }
    }
}

/// On-disk form: `{"k": 2, "nodes": [[], [0], [0, 1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFile {
    pub k: u32,
    pub nodes: Vec<ColorWord>,
}

impl ColorTree {
    /// Validates an explicit node set.
    pub fn finite<I: IntoIterator<Item = ColorWord>>(nodes: I, k: u32) -> Result<Self, TreeError> {
        let nodes: BTreeSet<ColorWord> = nodes.into_iter().collect();
        if !nodes.contains(&ColorWord::root()) {
            return Err(TreeError::MissingRoot);
        }
        for node in &nodes {
            if let Some(&color) = node.letters().iter().find(|c| c.0 >= k) {
                return Err(TreeError::ColorOutOfRange { node: node.clone(), color, k });
            }
            // Checking the parent suffices: every parent is itself checked.
            if let Some(parent) = node.parent() {
                if !nodes.contains(&parent) {
                    let missing = node
                        .prefixes()
                        .find(|p| !nodes.contains(p))
                        .expect("parent is missing");
                    return Err(TreeError::NotPrefixClosed { node: node.clone(), missing });
                }
            }
        }
        Ok(ColorTree { k, repr: Repr::Finite(Arc::new(nodes)) })
    }

    /// Wraps a membership predicate. The predicate must be pure, accept the
    /// root, be prefix-closed, and reject words with letters `>= k`; none of
    /// this can be checked up front.
    pub fn oracle<F>(k: u32, membership: F) -> Self
    where
        F: Fn(&ColorWord) -> bool + Send + Sync + 'static,
    {
        ColorTree { k, repr: Repr::Oracle(Arc::new(membership)) }
    }

    /// All words over `{0}`: an infinite straight line.
    pub fn unary() -> Self {
        Self::complete(1)
    }

    /// All words over `0..k`.
    pub fn complete(k: u32) -> Self {
        ColorTree::oracle(k, move |w| w.letters().iter().all(|c| c.0 < k))
    }

    /// The full k-ary tree of the given depth, as an explicit node set.
    pub fn full(k: u32, depth: usize) -> Self {
        let mut nodes = vec![ColorWord::root()];
        let mut frontier = vec![ColorWord::root()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for w in &frontier {
                for c in 0..k {
                    next.push(w.child(Color(c)));
                }
            }
            nodes.extend(next.iter().cloned());
            frontier = next;
        }
        ColorTree::finite(nodes, k).expect("full tree is valid")
    }

    /// Parses a named family: `unary`, `complete:K`, or `full:K:DEPTH`.
    pub fn family(name: &str) -> Result<Self, TreeError> {
        let unknown = || TreeError::UnknownFamily(name.to_string());
        let parts: Vec<&str> = name.split(':').collect();
        match parts.as_slice() {
            ["unary"] => Ok(Self::unary()),
            ["complete", k] => Ok(Self::complete(k.parse().map_err(|_| unknown())?)),
            ["full", k, d] => Ok(Self::full(
                k.parse().map_err(|_| unknown())?,
                d.parse().map_err(|_| unknown())?,
            )),
            _ => Err(unknown()),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn contains(&self, w: &ColorWord) -> bool {
        match &self.repr {
            Repr::Finite(nodes) => nodes.contains(w),
            Repr::Oracle(f) => f(w),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.repr, Repr::Finite(_))
    }

    /// The node set of an explicit tree, in lexicographic order.
    pub fn nodes(&self) -> Option<&BTreeSet<ColorWord>> {
        match &self.repr {
            Repr::Finite(nodes) => Some(nodes),
            Repr::Oracle(_) => None,
        }
    }

    /// `(c, node*⟨c⟩)` for every present child, in increasing color order.
    pub fn children(&self, node: &ColorWord) -> Result<Vec<(Color, ColorWord)>, TreeError> {
        if !self.contains(node) {
            return Err(TreeError::NodeNotInTree(node.clone()));
        }
        Ok((0..self.k)
            .map(Color)
            .map(|c| (c, node.child(c)))
            .filter(|(_, w)| self.contains(w))
            .collect())
    }

    /// Membership in `U_D(λ)`: `node` is in the tree, extends `root`, and every
    /// letter after `root` is a color of `priority`.
    pub fn in_restricted(
        &self,
        priority: &PriorityList,
        root: &ColorWord,
        node: &ColorWord,
    ) -> Result<bool, TreeError> {
        if !self.contains(root) {
            return Err(TreeError::RootNotInTree(root.clone()));
        }
        Ok(root.is_prefix_of(node)
            && node.letters()[root.len()..].iter().all(|&c| priority.contains(c))
            && self.contains(node))
    }

    /// Exhaustive listing of `U_D(λ)` for an explicit tree.
    pub fn restricted_nodes(
        &self,
        priority: &PriorityList,
        root: &ColorWord,
    ) -> Result<Option<BTreeSet<ColorWord>>, TreeError> {
        if !self.contains(root) {
            return Err(TreeError::RootNotInTree(root.clone()));
        }
        let Some(nodes) = self.nodes() else {
            return Ok(None);
        };
        let mut out = BTreeSet::new();
        for n in nodes {
            if self.in_restricted(priority, root, n)? {
                out.insert(n.clone());
            }
        }
        Ok(Some(out))
    }

    pub fn to_file(&self) -> Option<TreeFile> {
        self.nodes().map(|nodes| TreeFile { k: self.k, nodes: nodes.iter().cloned().collect() })
    }

    pub fn from_json(text: &str) -> Result<Self, TreeError> {
        let file: TreeFile = serde_json::from_str(text)?;
        ColorTree::finite(file.nodes, file.k)
    }

    pub fn load(path: &Path) -> Result<Self, TreeError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Validates `nodes` as a finite tree over `k` colors.
pub fn validate_tree<I: IntoIterator<Item = ColorWord>>(nodes: I, k: u32) -> Result<ColorTree, TreeError> {
    ColorTree::finite(nodes, k)
}
