//! Brute-force reference implementations and seeded generators.
//!
//! Nothing in here calls into the generator in [`crate::visit::VisitCursor`]:
//! agreement between these functions and the engine is the evidence the test
//! suites rely on.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dsl::TableColoring;
use crate::tree::ColorTree;
use crate::visit::{check_visit, VisitError};
use crate::word::{Color, ColorWord, PriorityList};

/// Largest tree [`all_visits`] accepts.
pub const ALL_VISITS_MAX_NODES: usize = 25;
/// Largest tree [`all_visits_exhaustive`] accepts.
pub const EXHAUSTIVE_MAX_NODES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("tree has {nodes} nodes, the limit is {limit}")]
    TreeTooLarge { nodes: usize, limit: usize },
    #[error("exhaustive search needs an explicit finite tree")]
    NotFinite,
}

fn finite_nodes(tree: &ColorTree, limit: usize) -> Result<&BTreeSet<ColorWord>, OracleError> {
    let nodes = tree.nodes().ok_or(OracleError::NotFinite)?;
    if nodes.len() > limit {
        return Err(OracleError::TreeTooLarge { nodes: nodes.len(), limit });
    }
    Ok(nodes)
}

/// Every list accepted by [`check_visit`], shortest first.
///
/// The search only extends lists the checker already accepts. Prefixes of a
/// visit are visits (cut the decomposition where the prefix ends), so nothing
/// is missed; [`all_visits_exhaustive`] confirms this on small trees without
/// relying on it.
pub fn all_visits(
    tree: &ColorTree,
    priority: &PriorityList,
    root: &ColorWord,
) -> Result<Vec<Vec<ColorWord>>, OracleError> {
    let nodes = finite_nodes(tree, ALL_VISITS_MAX_NODES)?;
    let mut found = Vec::new();
    let mut stack = vec![vec![root.clone()]];
    while let Some(list) = stack.pop() {
        if !check_visit(tree, &list, priority, root) {
            continue;
        }
        for n in nodes {
            if !list.contains(n) {
                let mut longer = list.clone();
                longer.push(n.clone());
                stack.push(longer);
            }
        }
        found.push(list);
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

/// Every duplicate-free list over the tree's nodes accepted by
/// [`check_visit`], found by trying all of them.
pub fn all_visits_exhaustive(
    tree: &ColorTree,
    priority: &PriorityList,
    root: &ColorWord,
) -> Result<Vec<Vec<ColorWord>>, OracleError> {
    let nodes: Vec<ColorWord> = finite_nodes(tree, EXHAUSTIVE_MAX_NODES)?.iter().cloned().collect();
    let mut found = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; nodes.len()];
    permutations(tree, priority, root, &nodes, &mut used, &mut current, &mut found);
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

fn permutations(
    tree: &ColorTree,
    priority: &PriorityList,
    root: &ColorWord,
    nodes: &[ColorWord],
    used: &mut [bool],
    current: &mut Vec<ColorWord>,
    found: &mut Vec<Vec<ColorWord>>,
) {
    if !current.is_empty() && check_visit(tree, current, priority, root) {
        found.push(current.clone());
    }
    for i in 0..nodes.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        current.push(nodes[i].clone());
        permutations(tree, priority, root, nodes, used, current, found);
        current.pop();
        used[i] = false;
    }
}

/// The `n`-th `c`-expansion of `bases`, transcribed from the definition: the
/// word `μ*⟨c⟩` in the tree with exactly `n` bases `η <lex μ` whose `c`-child
/// is also in the tree.
pub fn naive_nth_expansion(
    tree: &ColorTree,
    bases: &[ColorWord],
    n: usize,
    c: Color,
) -> Result<Option<ColorWord>, VisitError> {
    if let Some(w) = bases.iter().find(|w| !tree.contains(w)) {
        return Err(VisitError::EntryNotInTree(w.clone()));
    }
    let distinct: BTreeSet<&ColorWord> = bases.iter().collect();
    for mu in &distinct {
        if !tree.contains(&mu.child(c)) {
            continue;
        }
        let below = distinct
            .iter()
            .filter(|eta| **eta < *mu && tree.contains(&eta.child(c)))
            .count();
        if below == n {
            return Ok(Some(mu.child(c)));
        }
    }
    Ok(None)
}

/// Exhaustive `U_D(λ)` by breadth-first search over children.
pub fn restricted_by_search(tree: &ColorTree, priority: &PriorityList, root: &ColorWord) -> HashSet<ColorWord> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([root.clone()]);
    while let Some(w) = queue.pop_front() {
        if !tree.contains(&w) || !seen.insert(w.clone()) {
            continue;
        }
        for &c in priority.colors() {
            queue.push_back(w.child(c));
        }
    }
    seen
}

#[derive(Debug, Clone, PartialEq)]
pub struct TreeGenParams {
    pub k: u32,
    pub max_depth: usize,
    pub max_nodes: usize,
    /// Probability that a node gets a child of each color.
    pub branch_prob: Vec<f64>,
    pub seed: u64,
}

impl TreeGenParams {
    /// Draws parameters of varied shape: chains, stars, bushy and sparse trees.
    pub fn sample<R: Rng>(rng: &mut R, max_k: u32, max_nodes: usize) -> Self {
        let k = rng.gen_range(1..=max_k);
        let shape = rng.gen_range(0..4);
        let branch_prob = (0..k)
            .map(|_| match shape {
                0 => 1.0,
                1 => rng.gen_range(0.3..0.7),
                _ => rng.gen_range(0.5..1.0),
            })
            .collect();
        let max_depth = match shape {
            0 => rng.gen_range(0..6),
            3 => 1,
            _ => rng.gen_range(2..16),
        };
        // mostly near the size cap, sometimes anything below it
        let max_nodes = if rng.gen_bool(0.25) {
            rng.gen_range(1..=max_nodes)
        } else {
            rng.gen_range(max_nodes.div_ceil(2)..=max_nodes)
        };
        TreeGenParams {
            k,
            max_depth,
            max_nodes,
            branch_prob,
            seed: rng.gen(),
        }
    }
}

/// A random finite tree grown breadth-first, deterministic in the seed.
pub fn random_tree(params: &TreeGenParams) -> ColorTree {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut nodes = vec![ColorWord::root()];
    let mut queue = VecDeque::from([ColorWord::root()]);
    while let Some(w) = queue.pop_front() {
        if w.len() >= params.max_depth {
            continue;
        }
        for c in 0..params.k {
            if nodes.len() >= params.max_nodes {
                break;
            }
            let p = params.branch_prob.get(c as usize).copied().unwrap_or(0.0);
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                let child = w.child(Color(c));
                nodes.push(child.clone());
                queue.push_back(child);
            }
        }
    }
    ColorTree::finite(nodes, params.k).expect("generated trees are prefix-closed")
}

/// A random duplicate-free priority list over `0..k` (possibly empty or partial).
pub fn random_priority<R: Rng>(rng: &mut R, k: u32) -> PriorityList {
    let mut colors: Vec<Color> = (0..k).map(Color).collect();
    colors.shuffle(rng);
    let len = rng.gen_range(0..=k as usize);
    colors.truncate(len);
    PriorityList::new(colors).expect("shuffled colors are distinct")
}

/// A random node of a finite tree.
pub fn random_node<R: Rng>(rng: &mut R, tree: &ColorTree) -> ColorWord {
    let nodes = tree.nodes().expect("finite tree");
    nodes.iter().nth(rng.gen_range(0..nodes.len())).cloned().expect("nonempty")
}

/// Uniform independent colors for every pair below `n`, deterministic in the seed.
pub fn random_coloring(seed: u64, k: u32, n: u64) -> TableColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for y in 1..n {
        for x in 0..y {
            pairs.push((x, y, Color(rng.gen_range(0..k))));
        }
    }
    TableColoring::new(k, pairs).expect("generated table is consistent")
}
