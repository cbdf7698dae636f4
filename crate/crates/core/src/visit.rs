//! Complete D-visits of k-ary color trees.
//!
//! A D-visit from `λ` with priority `D = ⟨d₀, …, d_{h−1}⟩` first runs a
//! `⟨d₁, …, d_{h−1}⟩`-visit from `λ`. Only when that inner visit is complete
//! does it fall back on the lowest-priority color `d₀`: it takes the
//! `d₀`-children of the inner visit one by one, in lexicographic order of their
//! parents, and from each runs a visit with the rotated priority
//! `⟨d₁, …, d_{h−1}, d₀⟩`, moving on only if that sub-visit is complete.
//!
//! Two independent routes live here:
//!
//! * [`check_visit`] decides the recursive definition directly by searching
//!   for a decomposition of the list. It is exponential in the worst case and
//!   meant for small inputs.
//! * [`VisitCursor`] generates the unique maximal visit step by step with an
//!   explicit stack of frames. [`enumerate_visit`] and [`extend_visit`] are
//!   thin wrappers around it.
//!
//! Every step of the generator needs only finitely many membership probes,
//! so it also works on oracle-backed infinite trees, with a budget bounding
//! the number of emitted nodes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::ColorTree;
use crate::word::{Color, ColorWord, PriorityError, PriorityList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VisitError {
    #[error("entry {0} is not in the tree")]
    EntryNotInTree(ColorWord),
    #[error("root {0} is not in the tree")]
    RootNotInTree(ColorWord),
    #[error("not a visit: {0}")]
    InvalidVisit(String),
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error(transparent)]
    Priority(#[from] PriorityError),
}

fn check_entries(tree: &ColorTree, list: &[ColorWord]) -> Result<(), VisitError> {
    match list.iter().find(|w| !tree.contains(w)) {
        Some(w) => Err(VisitError::EntryNotInTree(w.clone())),
        None => Ok(()),
    }
}

fn c_complete_unchecked(tree: &ColorTree, list: &[ColorWord], set: &HashSet<&ColorWord>, c: Color) -> bool {
    list.iter().all(|w| {
        let child = w.child(c);
        !tree.contains(&child) || set.contains(&child)
    })
}

fn d_complete_unchecked(tree: &ColorTree, list: &[ColorWord], priority: &PriorityList) -> bool {
    let set: HashSet<&ColorWord> = list.iter().collect();
    priority
        .colors()
        .iter()
        .all(|&c| c_complete_unchecked(tree, list, &set, c))
}

/// `Com(L, c)`: every `c`-child in the tree of an entry of `list` is itself an entry.
pub fn is_c_complete(tree: &ColorTree, list: &[ColorWord], c: Color) -> Result<bool, VisitError> {
    check_entries(tree, list)?;
    let set: HashSet<&ColorWord> = list.iter().collect();
    Ok(c_complete_unchecked(tree, list, &set, c))
}

/// `list` is `c`-complete for every color `c` of `priority`.
pub fn is_d_complete(tree: &ColorTree, list: &[ColorWord], priority: &PriorityList) -> Result<bool, VisitError> {
    check_entries(tree, list)?;
    Ok(d_complete_unchecked(tree, list, priority))
}

/// All `c`-expansions of `bases`: the words `ν*⟨c⟩` in the tree, in
/// lexicographic order of `ν`.
fn expansions_unchecked(tree: &ColorTree, bases: &[ColorWord], c: Color) -> Vec<ColorWord> {
    let mut sorted: Vec<&ColorWord> = bases.iter().collect();
    sorted.sort();
    sorted
        .into_iter()
        .map(|nu| nu.child(c))
        .filter(|w| tree.contains(w))
        .collect()
}

/// The `n`-th (from 0) `c`-expansion of `bases`, if there are more than `n`.
pub fn nth_expansion(
    tree: &ColorTree,
    bases: &[ColorWord],
    n: usize,
    c: Color,
) -> Result<Option<ColorWord>, VisitError> {
    check_entries(tree, bases)?;
    let mut sorted: Vec<&ColorWord> = bases.iter().collect();
    sorted.sort();
    Ok(sorted
        .into_iter()
        .map(|nu| nu.child(c))
        .filter(|w| tree.contains(w))
        .nth(n))
}

/// Decides whether `list` is a `priority`-visit from `root` by searching for a
/// decomposition `M * L₀ * … * L_{n−1}` as in the recursive definition.
///
/// Malformed input (entries outside the tree, wrong first entry) gives `false`.
pub fn check_visit(tree: &ColorTree, list: &[ColorWord], priority: &PriorityList, root: &ColorWord) -> bool {
    if list.first() != Some(root) || list.iter().any(|w| !tree.contains(w)) {
        return false;
    }
    Checker { tree, list, memo: HashMap::new() }.is_visit(0, list.len(), priority)
}

struct Checker<'a> {
    tree: &'a ColorTree,
    list: &'a [ColorWord],
    memo: HashMap<(usize, usize, Vec<Color>), bool>,
}

impl Checker<'_> {
    /// Is `list[start..end]` a `priority`-visit from `list[start]`?
    fn is_visit(&mut self, start: usize, end: usize, priority: &PriorityList) -> bool {
        if start >= end {
            return false;
        }
        if priority.is_empty() {
            return end - start == 1;
        }
        let key = (start, end, priority.colors().to_vec());
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let result = self.split(start, end, priority);
        self.memo.insert(key, result);
        result
    }

    fn split(&mut self, start: usize, end: usize, priority: &PriorityList) -> bool {
        let inner = priority.without_lowest();
        let lowest = priority.lowest().expect("nonempty priority");
        let rotated = priority.rotated();
        for mid in start + 1..=end {
            if !self.is_visit(start, mid, &inner) {
                continue;
            }
            // n = 0: the whole list is the inner visit
            if mid == end {
                return true;
            }
            // n >= 1: the inner visit must be complete before d₀ is used
            let inner_part = &self.list[start..mid];
            if !d_complete_unchecked(self.tree, inner_part, &inner) {
                continue;
            }
            let heads = expansions_unchecked(self.tree, inner_part, lowest);
            if self.segments(mid, end, 0, &heads, priority, &rotated) {
                return true;
            }
        }
        false
    }

    /// Can `list[pos..end]` be cut into `L_j * L_{j+1} * …` with heads drawn
    /// from `heads[j..]`, every segment a rotated-priority visit and every
    /// segment but the last complete?
    fn segments(
        &mut self,
        pos: usize,
        end: usize,
        j: usize,
        heads: &[ColorWord],
        priority: &PriorityList,
        rotated: &PriorityList,
    ) -> bool {
        if heads.get(j) != Some(&self.list[pos]) {
            return false;
        }
        for cut in pos + 1..=end {
            if !self.is_visit(pos, cut, rotated) {
                continue;
            }
            if cut == end {
                return true;
            }
            if d_complete_unchecked(self.tree, &self.list[pos..cut], priority)
                && self.segments(cut, end, j + 1, heads, priority, rotated)
            {
                return true;
            }
        }
        false
    }
}

#[derive(Debug, Clone)]
enum Phase {
    Start,
    /// The inner `⟨d₁, …⟩`-visit is running in the frame above.
    Inner,
    /// Walking the `d₀`-children of the finished inner visit.
    Expanding { bases: Vec<ColorWord>, next: usize },
}

#[derive(Debug, Clone)]
struct Frame {
    priority: PriorityList,
    root: ColorWord,
    /// Position in the output where this frame's visit begins.
    start: usize,
    phase: Phase,
}

/// Step-by-step generator of the complete visit.
///
/// Each call to [`Iterator::next`] performs finitely many membership probes
/// and yields the unique node extending the visit, or `None` once the visit is
/// complete.
#[derive(Debug, Clone)]
pub struct VisitCursor<'t> {
    tree: &'t ColorTree,
    stack: Vec<Frame>,
    order: Vec<ColorWord>,
}

impl<'t> VisitCursor<'t> {
    pub fn new(tree: &'t ColorTree, priority: &PriorityList, root: &ColorWord) -> Result<Self, VisitError> {
        if !tree.contains(root) {
            return Err(VisitError::RootNotInTree(root.clone()));
        }
        if let Some(&color) = priority.colors().iter().find(|c| c.0 >= tree.k()) {
            return Err(PriorityError::OutOfRange { color, k: tree.k() }.into());
        }
        let frame = Frame { priority: priority.clone(), root: root.clone(), start: 0, phase: Phase::Start };
        Ok(VisitCursor { tree, stack: vec![frame], order: Vec::new() })
    }

    /// Entries emitted so far.
    pub fn order(&self) -> &[ColorWord] {
        &self.order
    }

    pub fn into_order(self) -> Vec<ColorWord> {
        self.order
    }

    pub fn is_complete(&self) -> bool {
        self.stack.is_empty()
    }

    fn advance(&mut self) -> Option<ColorWord> {
        loop {
            let len = self.order.len();
            let top = self.stack.last_mut()?;
            match &mut top.phase {
                Phase::Start if top.priority.is_empty() => {
                    let w = top.root.clone();
                    self.stack.pop();
                    self.order.push(w.clone());
                    return Some(w);
                }
                Phase::Start => {
                    top.phase = Phase::Inner;
                    let inner = Frame {
                        priority: top.priority.without_lowest(),
                        root: top.root.clone(),
                        start: len,
                        phase: Phase::Start,
                    };
                    self.stack.push(inner);
                }
                Phase::Inner => {
                    // The inner visit has finished, so it is complete.
                    let mut bases = self.order[top.start..].to_vec();
                    bases.sort();
                    top.phase = Phase::Expanding { bases, next: 0 };
                }
                Phase::Expanding { bases, next } => {
                    let lowest = top.priority.lowest().expect("nonempty priority");
                    let mut head = None;
                    while *next < bases.len() {
                        let candidate = bases[*next].child(lowest);
                        *next += 1;
                        if self.tree.contains(&candidate) {
                            head = Some(candidate);
                            break;
                        }
                    }
                    match head {
                        Some(head) => {
                            let sub = Frame {
                                priority: top.priority.rotated(),
                                root: head,
                                start: len,
                                phase: Phase::Start,
                            };
                            self.stack.push(sub);
                        }
                        None => {
                            self.stack.pop();
                        }
                    }
                }
            }
        }
    }
}

impl Iterator for VisitCursor<'_> {
    type Item = ColorWord;

    fn next(&mut self) -> Option<ColorWord> {
        self.advance()
    }
}

/// Result of trying to extend a visit by one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    /// The visit is complete: it already covers `U_D(λ)`.
    Complete,
    /// The unique node `μ` such that `L * ⟨μ⟩` is again a visit.
    Next(ColorWord),
}

/// The unique one-step extension of the visit `list`.
///
/// `list` must be a visit; it is replayed against the generator and any
/// disagreement is reported as [`VisitError::InvalidVisit`].
pub fn extend_visit(
    tree: &ColorTree,
    list: &[ColorWord],
    priority: &PriorityList,
    root: &ColorWord,
) -> Result<Extension, VisitError> {
    let mut cursor = VisitCursor::new(tree, priority, root)?;
    for (i, expected) in list.iter().enumerate() {
        match cursor.next() {
            Some(ref got) if got == expected => {}
            Some(got) => {
                return Err(VisitError::InvalidVisit(format!(
                    "entry {i} is {expected} but the visit continues with {got}"
                )))
            }
            None => {
                return Err(VisitError::InvalidVisit(format!(
                    "entry {i} ({expected}) follows a complete visit"
                )))
            }
        }
    }
    if list.is_empty() {
        return Err(VisitError::InvalidVisit("empty list".into()));
    }
    Ok(match cursor.next() {
        Some(w) => Extension::Next(w),
        None => Extension::Complete,
    })
}

/// A (possibly truncated) run of the complete visit.
#[derive(Debug, Clone)]
pub struct Visit {
    pub tree: ColorTree,
    pub root: ColorWord,
    pub priority: PriorityList,
    pub order: Vec<ColorWord>,
    /// The visit reached completion within the budget.
    pub terminated: bool,
}

/// Runs the complete visit from `root` for at most `budget` entries.
pub fn enumerate_visit(
    tree: &ColorTree,
    priority: &PriorityList,
    root: &ColorWord,
    budget: usize,
) -> Result<Visit, VisitError> {
    if budget == 0 {
        return Err(VisitError::ZeroBudget);
    }
    let mut cursor = VisitCursor::new(tree, priority, root)?;
    let order: Vec<ColorWord> = cursor.by_ref().take(budget).collect();
    let terminated = order.len() < budget || cursor.next().is_none();
    Ok(Visit {
        tree: tree.clone(),
        root: root.clone(),
        priority: priority.clone(),
        order,
        terminated,
    })
}

impl Visit {
    pub fn k(&self) -> u32 {
        self.tree.k()
    }

    pub fn stable_indices(&self) -> Vec<usize> {
        stable_indices(&self.order)
    }

    pub fn branch(&self) -> Vec<ColorWord> {
        branch_approx(&self.order)
    }

    pub fn census(&self) -> ColorCensus {
        visit_census(&self.order, self.k())
    }

    pub fn trace(&self) -> VisitTrace {
        VisitTrace {
            k: self.k(),
            priority: self.priority.clone(),
            root: self.root.clone(),
            order: self.order.clone(),
            terminated: self.terminated,
            stable: self.stable_indices(),
            branch: self.branch(),
        }
    }

    /// Graphviz rendering: edges labelled by color, horizon-stable nodes
    /// filled, branch nodes and edges drawn bold red.
    pub fn to_dot(&self) -> String {
        let stable: HashSet<usize> = self.stable_indices().into_iter().collect();
        let branch: HashSet<ColorWord> = self.branch().into_iter().collect();
        let index: HashMap<&ColorWord, usize> = self.order.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut out = String::from("digraph visit {\n  node [shape=circle, fontsize=10];\n");
        for (i, w) in self.order.iter().enumerate() {
            let mut attrs = vec![format!("label=\"{i}\\n{w}\"")];
            if stable.contains(&i) {
                attrs.push("style=filled".into());
                attrs.push("fillcolor=lightblue".into());
            }
            if branch.contains(w) {
                attrs.push("color=red".into());
                attrs.push("penwidth=2".into());
            }
            let _ = writeln!(out, "  n{i} [{}];", attrs.join(", "));
        }
        for (i, w) in self.order.iter().enumerate().skip(1) {
            let (Some(parent), Some(c)) = (w.parent(), w.last()) else { continue };
            let Some(&p) = index.get(&parent) else { continue };
            let style = if branch.contains(w) { ", color=red, penwidth=2" } else { "" };
            let _ = writeln!(out, "  n{p} -> n{i} [label=\"{c}\"{style}];");
        }
        out.push_str("}\n");
        out
    }
}

/// Indices `m` such that every later entry is a proper descendant of `order[m]`.
///
/// The last index is always included. On a truncated run this over-approximates
/// stability in the infinite visit.
pub fn stable_indices(order: &[ColorWord]) -> Vec<usize> {
    let Some(last) = order.last() else {
        return Vec::new();
    };
    let mut stable = vec![order.len() - 1];
    // longest common prefix (as a prefix of `last`) and minimum length of the suffix
    let mut common = last.len();
    let mut min_len = last.len();
    for m in (0..order.len() - 1).rev() {
        let w = &order[m];
        if w.len() <= common && w.len() < min_len && w.is_prefix_of(last) {
            stable.push(m);
        }
        let shared = w
            .letters()
            .iter()
            .zip(last.letters())
            .take_while(|(a, b)| a == b)
            .count();
        common = common.min(shared);
        min_len = min_len.min(w.len());
    }
    stable.reverse();
    stable
}

/// Prefix-closure (from the visit root) of the deepest horizon-stable entry.
pub fn branch_approx(order: &[ColorWord]) -> Vec<ColorWord> {
    let (Some(root), Some(&deepest)) = (order.first(), stable_indices(order).last()) else {
        return Vec::new();
    };
    order[deepest].prefixes().skip(root.len()).collect()
}

/// Per-color edge counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BTreeMap<u32, u64>", from = "BTreeMap<u32, u64>")]
pub struct ColorCensus {
    counts: Vec<u64>,
}

impl ColorCensus {
    pub fn zeros(k: u32) -> Self {
        ColorCensus { counts: vec![0; k as usize] }
    }

    pub fn add(&mut self, c: Color) {
        let i = c.index();
        if i >= self.counts.len() {
            self.counts.resize(i + 1, 0);
        }
        self.counts[i] += 1;
    }

    pub fn get(&self, c: Color) -> u64 {
        self.counts.get(c.index()).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl From<ColorCensus> for BTreeMap<u32, u64> {
    fn from(c: ColorCensus) -> Self {
        c.counts.into_iter().enumerate().map(|(i, n)| (i as u32, n)).collect()
    }
}

impl From<BTreeMap<u32, u64>> for ColorCensus {
    fn from(m: BTreeMap<u32, u64>) -> Self {
        let len = m.keys().next_back().map_or(0, |&k| k as usize + 1);
        let mut counts = vec![0; len];
        for (c, n) in m {
            counts[c as usize] = n;
        }
        ColorCensus { counts }
    }
}

/// Counts each visit edge (every entry after the first, joined to its parent)
/// by its final letter.
pub fn visit_census(order: &[ColorWord], k: u32) -> ColorCensus {
    let mut census = ColorCensus::zeros(k);
    for w in order.iter().skip(1) {
        if let Some(c) = w.last() {
            census.add(c);
        }
    }
    census
}

/// Counts the colors of consecutive edges along a chain.
pub fn branch_census(branch: &[ColorWord], k: u32) -> ColorCensus {
    visit_census(branch, k)
}

/// Serialized form of a visit run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VisitTrace {
    pub k: u32,
    pub priority: PriorityList,
    pub root: ColorWord,
    pub order: Vec<ColorWord>,
    pub terminated: bool,
    pub stable: Vec<usize>,
    pub branch: Vec<ColorWord>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::validate_tree;

    fn w(v: &[u32]) -> ColorWord {
        ColorWord::from_indices(v.iter().copied())
    }

    fn ws(v: &[&[u32]]) -> Vec<ColorWord> {
        v.iter().map(|x| w(x)).collect()
    }

    fn d(v: &[u32]) -> PriorityList {
        PriorityList::from_indices(v.iter().copied()).unwrap()
    }

    /// Reference order for the depth-2 full binary tree with `D = ⟨0,1⟩`,
    /// frozen from the exhaustive search in `oracles::all_visits`.
    fn golden() -> Vec<ColorWord> {
        ws(&[&[], &[1], &[1, 1], &[0], &[0, 0], &[0, 1], &[1, 0]])
    }

    #[test]
    fn c_complete_examples() {
        let t = ColorTree::full(2, 2);
        let l = ws(&[&[], &[1], &[1, 1]]);
        assert!(is_c_complete(&t, &l, Color(1)).unwrap());
        assert!(!is_c_complete(&t, &l, Color(0)).unwrap());
        assert!(is_c_complete(&t, &[], Color(0)).unwrap());
        assert_eq!(
            is_c_complete(&t, &ws(&[&[0, 0, 0]]), Color(0)),
            Err(VisitError::EntryNotInTree(w(&[0, 0, 0])))
        );
    }

    #[test]
    fn d_complete_examples() {
        let t = ColorTree::full(2, 1);
        assert!(is_d_complete(&t, &ws(&[&[], &[0], &[1]]), &d(&[0, 1])).unwrap());
        assert!(is_d_complete(&t, &ws(&[&[], &[1]]), &d(&[1])).unwrap());
        assert!(is_d_complete(&t, &ws(&[&[]]), &d(&[])).unwrap());
        assert!(!is_d_complete(&t, &ws(&[&[]]), &d(&[0])).unwrap());
    }

    #[test]
    fn expansion_examples() {
        let t = validate_tree(ws(&[&[], &[0], &[1]]), 2).unwrap();
        assert_eq!(nth_expansion(&t, &ws(&[&[]]), 0, Color(0)).unwrap(), Some(w(&[0])));

        let t = validate_tree(ws(&[&[], &[0], &[1], &[1, 0]]), 2).unwrap();
        assert_eq!(
            nth_expansion(&t, &ws(&[&[], &[1]]), 1, Color(0)).unwrap(),
            Some(w(&[1, 0]))
        );
        // bases are taken in lexicographic order, not list order
        assert_eq!(
            nth_expansion(&t, &ws(&[&[1], &[]]), 0, Color(0)).unwrap(),
            Some(w(&[0]))
        );

        let t = validate_tree(ws(&[&[], &[1]]), 2).unwrap();
        assert_eq!(nth_expansion(&t, &ws(&[&[], &[1]]), 0, Color(0)).unwrap(), None);
    }

    #[test]
    fn check_examples() {
        let t = ColorTree::full(2, 2);
        assert!(check_visit(&t, &ws(&[&[1]]), &d(&[]), &w(&[1])));
        assert!(!check_visit(&t, &ws(&[&[1], &[1, 0]]), &d(&[]), &w(&[1])));
        assert!(check_visit(&t, &golden(), &d(&[0, 1]), &w(&[])));
        assert!(!check_visit(&t, &ws(&[&[], &[0]]), &d(&[0, 1]), &w(&[])));
        assert!(!check_visit(&t, &[], &d(&[0, 1]), &w(&[])));
        // malformed: entry outside the tree
        assert!(!check_visit(&t, &ws(&[&[], &[1], &[1, 1], &[1, 1, 1]]), &d(&[0, 1]), &w(&[])));
    }

    #[test]
    fn every_prefix_of_the_golden_run_is_a_visit() {
        let t = ColorTree::full(2, 2);
        let g = golden();
        for len in 1..=g.len() {
            assert!(check_visit(&t, &g[..len], &d(&[0, 1]), &w(&[])), "prefix {len}");
        }
    }

    #[test]
    fn extend_examples() {
        let root_only = validate_tree(ws(&[&[]]), 2).unwrap();
        assert_eq!(
            extend_visit(&root_only, &ws(&[&[]]), &d(&[0, 1]), &w(&[])).unwrap(),
            Extension::Complete
        );
        let t = ColorTree::full(2, 2);
        assert_eq!(
            extend_visit(&t, &ws(&[&[], &[1], &[1, 1]]), &d(&[0, 1]), &w(&[])).unwrap(),
            Extension::Next(w(&[0]))
        );
        assert_eq!(
            extend_visit(&t, &ws(&[&[]]), &d(&[0, 1]), &w(&[])).unwrap(),
            Extension::Next(w(&[1]))
        );
        assert!(matches!(
            extend_visit(&t, &ws(&[&[], &[0]]), &d(&[0, 1]), &w(&[])),
            Err(VisitError::InvalidVisit(_))
        ));
        assert_eq!(
            extend_visit(&t, &golden(), &d(&[0, 1]), &w(&[])).unwrap(),
            Extension::Complete
        );
    }

    #[test]
    fn enumerate_examples() {
        let root_only = validate_tree(ws(&[&[]]), 2).unwrap();
        let v = enumerate_visit(&root_only, &d(&[0]), &w(&[]), 10).unwrap();
        assert_eq!(v.order, ws(&[&[]]));
        assert!(v.terminated);

        let v = enumerate_visit(&ColorTree::full(2, 2), &d(&[0, 1]), &w(&[]), 100).unwrap();
        assert_eq!(v.order, golden());
        assert!(v.terminated);

        let v = enumerate_visit(&ColorTree::unary(), &d(&[0]), &w(&[]), 5).unwrap();
        assert_eq!(v.order, ws(&[&[], &[0], &[0, 0], &[0, 0, 0], &[0, 0, 0, 0]]));
        assert!(!v.terminated);

        assert_eq!(
            enumerate_visit(&root_only, &d(&[0]), &w(&[1]), 3).unwrap_err(),
            VisitError::RootNotInTree(w(&[1]))
        );
        assert_eq!(
            enumerate_visit(&root_only, &d(&[0]), &w(&[]), 0).unwrap_err(),
            VisitError::ZeroBudget
        );
    }

    #[test]
    fn exact_budget_on_a_finite_tree_still_terminates() {
        let v = enumerate_visit(&ColorTree::full(2, 2), &d(&[0, 1]), &w(&[]), 7).unwrap();
        assert!(v.terminated);
        let v = enumerate_visit(&ColorTree::full(2, 2), &d(&[0, 1]), &w(&[]), 6).unwrap();
        assert!(!v.terminated);
    }

    #[test]
    fn subvisit_from_inner_root() {
        // U_D(λ) with λ = ⟨1⟩ and D = ⟨1, 0⟩ on the full binary tree of depth 2
        let t = ColorTree::full(2, 2);
        let v = enumerate_visit(&t, &d(&[1, 0]), &w(&[1]), 100).unwrap();
        assert_eq!(v.order, ws(&[&[1], &[1, 0], &[1, 1]]));
        assert!(check_visit(&t, &v.order, &d(&[1, 0]), &w(&[1])));
    }

    #[test]
    fn stable_examples() {
        assert_eq!(stable_indices(&ws(&[&[], &[0], &[0, 0]])), vec![0, 1, 2]);
        // the root is a proper prefix of every later entry, so it is always stable
        assert_eq!(stable_indices(&golden()), vec![0, 6]);
        assert_eq!(stable_indices(&ws(&[&[], &[0], &[0, 0], &[0, 1]])), vec![0, 1, 3]);
        assert!(stable_indices(&[]).is_empty());
    }

    #[test]
    fn stable_matches_quadratic_definition() {
        let orders = [
            golden(),
            ws(&[&[], &[0], &[0, 0], &[0, 1]]),
            ws(&[&[], &[1], &[0], &[0, 1], &[0, 1, 1], &[0, 1, 0]]),
        ];
        for order in orders {
            let naive: Vec<usize> = (0..order.len())
                .filter(|&m| order[m + 1..].iter().all(|n| order[m].is_proper_prefix_of(n)))
                .collect();
            assert_eq!(stable_indices(&order), naive);
        }
    }

    #[test]
    fn branch_examples() {
        assert_eq!(branch_approx(&ws(&[&[]])), ws(&[&[]]));
        assert_eq!(branch_approx(&golden()), ws(&[&[], &[1], &[1, 0]]));
        let chain = ws(&[&[], &[0], &[0, 0], &[0, 0, 0]]);
        assert_eq!(branch_approx(&chain), chain);
        // branch starts at the visit root, not the tree root
        assert_eq!(branch_approx(&ws(&[&[1], &[1, 0]])), ws(&[&[1], &[1, 0]]));
    }

    #[test]
    fn census_examples() {
        let b = branch_census(&ws(&[&[], &[1], &[1, 0]]), 2);
        assert_eq!(b.counts(), &[1, 1]);
        assert_eq!(visit_census(&golden(), 2).counts(), &[3, 3]);
        assert_eq!(visit_census(&ws(&[&[]]), 2).counts(), &[0, 0]);
    }

    #[test]
    fn census_serializes_as_map() {
        let c = visit_census(&golden(), 3);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"0":3,"1":3,"2":0}"#);
        assert_eq!(serde_json::from_str::<ColorCensus>(&text).unwrap(), c);
    }

    #[test]
    fn trace_json_shape() {
        let v = enumerate_visit(&ColorTree::full(2, 1), &d(&[0, 1]), &w(&[]), 10).unwrap();
        let text = serde_json::to_string(&v.trace()).unwrap();
        assert_eq!(
            text,
            r#"{"k":2,"priority":[0,1],"root":[],"order":[[],[1],[0]],"terminated":true,"stable":[0,2],"branch":[[],[0]]}"#
        );
    }

    #[test]
    fn dot_mentions_every_node() {
        let v = enumerate_visit(&ColorTree::full(2, 2), &d(&[0, 1]), &w(&[]), 100).unwrap();
        let dot = v.to_dot();
        assert!(dot.starts_with("digraph visit {"));
        for i in 0..7 {
            assert!(dot.contains(&format!("n{i} [")));
        }
        assert_eq!(dot.matches("->").count(), 6);
        assert!(dot.contains("fillcolor=lightblue"));
    }

    #[test]
    fn priority_color_out_of_range() {
        let t = ColorTree::full(2, 1);
        assert!(matches!(
            enumerate_visit(&t, &d(&[2]), &w(&[]), 4),
            Err(VisitError::Priority(_))
        ));
    }
}
