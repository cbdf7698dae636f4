//! Erdős trees of edge colorings and homogeneous set extraction.
//!
//! The tree on `0..N` is grown by insertion: a new number `n` descends from
//! the root, at each node `x` following the child of color `c({x, n})` and
//! attaching itself there when that child is missing. Every descendant of the
//! `i`-child of `x` is then joined to `x` by an edge of color `i`, so every
//! branch is a set on which the color of `{x, y}` (x below y) depends only on
//! `x`.
//!
//! The tree is translated into a color-word tree (the word of a node is the
//! list of edge colors on its root path), visited with
//! [`crate::visit::enumerate_visit`], and the approximated branch of the visit
//! is mapped back to numbers. Grouping branch nodes by the color of the edge
//! to their successor gives `k` candidate homogeneous sets.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::ColorTree;
use crate::visit::{branch_census, enumerate_visit, ColorCensus, Visit, VisitError};
use crate::word::{Color, ColorWord, PriorityList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("pair {{{0}, {1}}} is not colored by the table")]
    TableIncomplete(u64, u64),
    #[error("division by zero while evaluating the coloring")]
    DivisionByZero,
    #[error("colorings are defined on pairs of distinct numbers, got {0} twice")]
    Diagonal(u64),
}

/// A total coloring of unordered pairs of distinct naturals with `k` colors.
pub trait Coloring: Send + Sync {
    fn k(&self) -> u32;

    /// Color of the pair `{x, y}`; symmetric in its arguments.
    fn color(&self, x: u64, y: u64) -> Result<Color, ColoringError>;
}

impl<C: Coloring + ?Sized> Coloring for &C {
    fn k(&self) -> u32 {
        (**self).k()
    }

    fn color(&self, x: u64, y: u64) -> Result<Color, ColoringError> {
        (**self).color(x, y)
    }
}

impl<C: Coloring + ?Sized> Coloring for Box<C> {
    fn k(&self) -> u32 {
        (**self).k()
    }

    fn color(&self, x: u64, y: u64) -> Result<Color, ColoringError> {
        (**self).color(x, y)
    }
}

/// A coloring computed by a closure over `(min, max)`, reduced mod `k`.
pub struct FnColoring<F> {
    k: u32,
    f: F,
}

impl<F: Fn(u64, u64) -> u64 + Send + Sync> FnColoring<F> {
    pub fn new(k: u32, f: F) -> Self {
        FnColoring { k, f }
    }
}

impl<F: Fn(u64, u64) -> u64 + Send + Sync> Coloring for FnColoring<F> {
    fn k(&self) -> u32 {
        self.k
    }

    fn color(&self, x: u64, y: u64) -> Result<Color, ColoringError> {
        if x == y {
            return Err(ColoringError::Diagonal(x));
        }
        let (a, b) = (x.min(y), x.max(y));
        Ok(Color(((self.f)(a, b) % self.k as u64) as u32))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ErdosError {
    #[error("expected to insert {expected}, got {got}")]
    NonContiguousInsert { expected: usize, got: usize },
    #[error("the horizon must contain at least one number")]
    EmptyHorizon,
    #[error("coloring returned color {color} for {{{x}, {y}}}, out of range for k = {k}")]
    ColorOutOfRange { x: u64, y: u64, color: Color, k: u32 },
    #[error("word {0} does not name a node of the tree")]
    WordNotInIndex(ColorWord),
    #[error("priority list must contain each of the {0} colors exactly once")]
    PriorityNotCovering(u32),
    #[error("malformed tree: {0}")]
    InvalidStructure(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Visit(#[from] VisitError),
}

fn checked_color<C: Coloring + ?Sized>(coloring: &C, x: usize, y: usize) -> Result<Color, ErdosError> {
    let color = coloring.color(x as u64, y as u64)?;
    if color.0 >= coloring.k() {
        return Err(ErdosError::ColorOutOfRange { x: x as u64, y: y as u64, color, k: coloring.k() });
    }
    Ok(color)
}

/// A rooted tree on `0..size` with at most one child of each color per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErdosTree {
    k: u32,
    parent: Vec<Option<usize>>,
    edge_color: Vec<Option<Color>>,
    children: Vec<BTreeMap<Color, usize>>,
}

impl ErdosTree {
    /// The one-node tree `{0}`.
    pub fn singleton(k: u32) -> Self {
        ErdosTree { k, parent: vec![None], edge_color: vec![None], children: vec![BTreeMap::new()] }
    }

    /// Builds a tree from explicit `(parent, color)` links; entry 0 must be
    /// `None` and every other node needs a smaller parent and a color unused
    /// among its siblings.
    pub fn from_links(k: u32, links: &[Option<(usize, Color)>]) -> Result<Self, ErdosError> {
        let bad = |m: String| Err(ErdosError::InvalidStructure(m));
        if links.first() != Some(&None) {
            return bad("node 0 must be the root".into());
        }
        let mut tree = ErdosTree::singleton(k);
        for (n, link) in links.iter().enumerate().skip(1) {
            let Some((p, c)) = *link else {
                return bad(format!("node {n} has no parent"));
            };
            if p >= n {
                return bad(format!("parent {p} of {n} is not smaller"));
            }
            if c.0 >= k {
                return bad(format!("edge color {c} of {n} out of range"));
            }
            if tree.children[p].contains_key(&c) {
                return bad(format!("node {p} has two children of color {c}"));
            }
            tree.attach(n, p, c);
        }
        Ok(tree)
    }

    fn attach(&mut self, n: usize, parent: usize, c: Color) {
        self.parent.push(Some(parent));
        self.edge_color.push(Some(c));
        self.children.push(BTreeMap::new());
        self.children[parent].insert(c, n);
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, n: usize) -> Option<usize> {
        self.parent[n]
    }

    pub fn edge_color(&self, n: usize) -> Option<Color> {
        self.edge_color[n]
    }

    pub fn children(&self, n: usize) -> &BTreeMap<Color, usize> {
        &self.children[n]
    }

    pub fn child(&self, n: usize, c: Color) -> Option<usize> {
        self.children[n].get(&c).copied()
    }

    /// Proper ancestors of `n`, root first.
    pub fn ancestors(&self, n: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.parent[n];
        while let Some(p) = cur {
            out.push(p);
            cur = self.parent[p];
        }
        out.reverse();
        out
    }

    pub fn is_ancestor(&self, x: usize, y: usize) -> bool {
        let mut cur = self.parent[y];
        while let Some(p) = cur {
            if p == x {
                return true;
            }
            cur = self.parent[p];
        }
        false
    }

    /// Inserts `n` (which must equal the current size) by descent from the root.
    pub fn insert<C: Coloring + ?Sized>(&mut self, n: usize, coloring: &C) -> Result<(), ErdosError> {
        if n != self.size() {
            return Err(ErdosError::NonContiguousInsert { expected: self.size(), got: n });
        }
        let mut x = 0;
        loop {
            let c = checked_color(coloring, x, n)?;
            match self.child(x, c) {
                Some(next) => x = next,
                None => {
                    self.attach(n, x, c);
                    return Ok(());
                }
            }
        }
    }

    /// The word of edge colors from the root to `n`.
    pub fn word(&self, n: usize) -> ColorWord {
        let mut letters = Vec::new();
        let mut cur = n;
        while let Some(c) = self.edge_color[cur] {
            letters.push(c);
            cur = self.parent[cur].expect("colored edge has a parent");
        }
        letters.reverse();
        ColorWord::new(letters)
    }

    /// Graphviz rendering; `report`, when given, highlights its branch and
    /// fills each member of `H_i` with the `i`-th palette color.
    pub fn to_dot(&self, report: Option<&HomogeneousReport>) -> String {
        const PALETTE: [&str; 8] =
            ["lightblue", "salmon", "palegreen", "khaki", "plum", "lightgray", "orange", "cyan"];
        let mut fill: BTreeMap<usize, usize> = BTreeMap::new();
        let mut on_branch = vec![false; self.size()];
        if let Some(r) = report {
            for (i, set) in r.sets.iter().enumerate() {
                for &x in set {
                    fill.insert(x, i);
                }
            }
            for &x in &r.branch {
                if x < on_branch.len() {
                    on_branch[x] = true;
                }
            }
        }
        let mut out = String::from("digraph erdos {\n  node [shape=circle, fontsize=10];\n");
        for n in 0..self.size() {
            let mut attrs = vec![format!("label=\"{n}\"")];
            if let Some(&i) = fill.get(&n) {
                attrs.push("style=filled".into());
                attrs.push(format!("fillcolor={}", PALETTE[i % PALETTE.len()]));
            }
            if on_branch[n] {
                attrs.push("color=red".into());
                attrs.push("penwidth=2".into());
            }
            let _ = writeln!(out, "  {n} [{}];", attrs.join(", "));
        }
        for n in 1..self.size() {
            let (p, c) = (self.parent[n].expect("non-root"), self.edge_color[n].expect("non-root"));
            let style = if on_branch[n] && on_branch[p] { ", color=red, penwidth=2" } else { "" };
            let _ = writeln!(out, "  {p} -> {n} [label=\"{c}\"{style}];");
        }
        out.push_str("}\n");
        out
    }
}

/// Inserts `1, …, n−1` into `{0}`.
pub fn build_erdos<C: Coloring + ?Sized>(coloring: &C, n: usize) -> Result<ErdosTree, ErdosError> {
    if n == 0 {
        return Err(ErdosError::EmptyHorizon);
    }
    let mut tree = ErdosTree::singleton(coloring.k());
    for m in 1..n {
        tree.insert(m, coloring)?;
    }
    Ok(tree)
}

/// Every descendant `y` of the `i`-child of `x` has `c({x, y}) = i`.
pub fn check_erdos_property<C: Coloring + ?Sized>(tree: &ErdosTree, coloring: &C) -> Result<bool, ErdosError> {
    for y in 1..tree.size() {
        // walk up from y; `below` is the child of `x` on the path to y
        let mut below = y;
        while let Some(x) = tree.parent(below) {
            let i = tree.edge_color(below).expect("non-root");
            if checked_color(coloring, x, y)? != i {
                return Ok(false);
            }
            below = x;
        }
    }
    Ok(true)
}

/// The ancestor relation given directly by the recursive formula
/// `x ≺ y ⟺ x < y ∧ ∀z < x (z ≺ x ⟹ c({z, x}) = c({z, y}))`.
///
/// `result[x][y]` says whether `x ≺ y`. Quadratic in memory, cubic in time.
pub fn formula_ancestors<C: Coloring + ?Sized>(coloring: &C, n: usize) -> Result<Vec<Vec<bool>>, ErdosError> {
    let mut rel = vec![vec![false; n]; n];
    for x in 0..n {
        for y in x + 1..n {
            let mut holds = true;
            for z in 0..x {
                if rel[z][x] && checked_color(coloring, z, x)? != checked_color(coloring, z, y)? {
                    holds = false;
                    break;
                }
            }
            rel[x][y] = holds;
        }
    }
    Ok(rel)
}

/// Bijection between tree nodes and the color words of their root paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordIndex {
    words: Vec<ColorWord>,
    nodes: BTreeMap<ColorWord, usize>,
}

impl WordIndex {
    pub fn word(&self, node: usize) -> Option<&ColorWord> {
        self.words.get(node)
    }

    pub fn node(&self, word: &ColorWord) -> Option<usize> {
        self.nodes.get(word).copied()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// The color-word tree of `tree` and the node/word bijection.
pub fn to_word_tree(tree: &ErdosTree) -> (ColorTree, WordIndex) {
    let words: Vec<ColorWord> = (0..tree.size()).map(|n| tree.word(n)).collect();
    let nodes = words.iter().cloned().enumerate().map(|(n, w)| (w, n)).collect();
    let word_tree = ColorTree::finite(words.iter().cloned(), tree.k())
        .expect("root paths of a tree with color-unique children form a prefix-closed set");
    (word_tree, WordIndex { words, nodes })
}

/// Candidate homogeneous sets read off a branch of the Erdős tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousReport {
    pub k: u32,
    #[serde(rename = "N")]
    pub n: usize,
    pub branch: Vec<usize>,
    /// `H_i`: branch nodes whose edge to the next branch node has color `i`.
    #[serde(rename = "H")]
    pub sets: Vec<Vec<usize>>,
    pub verified: bool,
    pub census: ColorCensus,
}

impl HomogeneousReport {
    pub fn largest(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether `self.branch` is a prefix of `other.branch`.
    pub fn branch_is_prefix_of(&self, other: &HomogeneousReport) -> bool {
        other.branch.starts_with(&self.branch)
    }
}

/// Relation between runs of the same coloring at two horizons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HorizonCheck {
    /// The smaller run's branch is a prefix of the larger one's, and no set shrank.
    Consistent,
    /// The branch moved between the horizons; set sizes are not comparable.
    Unstable,
}

pub fn compare_horizons(smaller: &HomogeneousReport, larger: &HomogeneousReport) -> HorizonCheck {
    if smaller.branch_is_prefix_of(larger) {
        debug_assert!(larger.largest() >= smaller.largest());
        HorizonCheck::Consistent
    } else {
        HorizonCheck::Unstable
    }
}

/// Maps `branch_words` (a prefix chain in the word tree) to numbers and puts
/// each branch node into `H_i`, `i` the color of the edge to its successor.
/// Every set is then checked pair by pair against the coloring.
pub fn extract_homogeneous<C: Coloring + ?Sized>(
    tree: &ErdosTree,
    branch_words: &[ColorWord],
    index: &WordIndex,
    coloring: &C,
) -> Result<HomogeneousReport, ErdosError> {
    let branch = branch_words
        .iter()
        .map(|w| index.node(w).ok_or_else(|| ErdosError::WordNotInIndex(w.clone())))
        .collect::<Result<Vec<usize>, _>>()?;
    let k = tree.k();
    let mut sets = vec![Vec::new(); k as usize];
    let mut census = ColorCensus::zeros(k);
    for pair in branch.windows(2) {
        let (x, y) = (pair[0], pair[1]);
        if tree.parent(y) != Some(x) {
            return Err(ErdosError::InvalidStructure(format!("branch step {x} -> {y} is not an edge")));
        }
        let c = tree.edge_color(y).expect("non-root");
        sets[c.index()].push(x);
        census.add(c);
    }
    debug_assert_eq!(census, branch_census(branch_words, k));
    let mut verified = true;
    'outer: for (i, set) in sets.iter().enumerate() {
        for (a, &x) in set.iter().enumerate() {
            for &y in &set[a + 1..] {
                if checked_color(coloring, x, y)?.index() != i {
                    verified = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(HomogeneousReport { k, n: tree.size(), branch, sets, verified, census })
}

/// Everything produced by one run of [`homog_pipeline`].
#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub tree: ErdosTree,
    pub index: WordIndex,
    pub visit: Visit,
    pub report: HomogeneousReport,
}

/// Erdős tree on `0..n` → word tree → visit of at most `budget` entries from
/// the root → approximated branch → homogeneous sets.
///
/// `priority` defaults to `⟨0, 1, …, k−1⟩` and must list every color once.
pub fn homog_pipeline<C: Coloring + ?Sized>(
    coloring: &C,
    n: usize,
    budget: usize,
    priority: Option<&PriorityList>,
) -> Result<PipelineRun, ErdosError> {
    let k = coloring.k();
    let priority = match priority {
        Some(p) if !p.covers(k) => return Err(ErdosError::PriorityNotCovering(k)),
        Some(p) => p.clone(),
        None => PriorityList::standard(k),
    };
    let tree = build_erdos(coloring, n)?;
    let (word_tree, index) = to_word_tree(&tree);
    let visit = enumerate_visit(&word_tree, &priority, &ColorWord::root(), budget)?;
    let report = extract_homogeneous(&tree, &visit.branch(), &index, coloring)?;
    Ok(PipelineRun { tree, index, visit, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity() -> FnColoring<impl Fn(u64, u64) -> u64 + Send + Sync> {
        FnColoring::new(2, |x, y| x + y)
    }

    fn constant(k: u32, c: u64) -> FnColoring<impl Fn(u64, u64) -> u64 + Send + Sync> {
        FnColoring::new(k, move |_, _| c)
    }

    fn w(v: &[u32]) -> ColorWord {
        ColorWord::from_indices(v.iter().copied())
    }

    #[test]
    fn insert_examples() {
        let mut t = ErdosTree::singleton(2);
        t.insert(1, &constant(2, 0)).unwrap();
        assert_eq!(t.parent(1), Some(0));
        assert_eq!(t.edge_color(1), Some(Color(0)));

        let mut t = build_erdos(&parity(), 4).unwrap();
        t.insert(4, &parity()).unwrap();
        assert_eq!(t.parent(4), Some(2));
        assert_eq!(t.edge_color(4), Some(Color(0)));

        let mut t = ErdosTree::singleton(2);
        assert_eq!(
            t.insert(2, &parity()),
            Err(ErdosError::NonContiguousInsert { expected: 1, got: 2 })
        );
    }

    #[test]
    fn build_examples() {
        let t = build_erdos(&constant(2, 0), 4).unwrap();
        for n in 1..4 {
            assert_eq!(t.parent(n), Some(n - 1));
            assert_eq!(t.edge_color(n), Some(Color(0)));
        }

        let t = build_erdos(&parity(), 5).unwrap();
        assert_eq!(t.children(0), &BTreeMap::from([(Color(0), 2), (Color(1), 1)]));
        assert_eq!(t.children(1), &BTreeMap::from([(Color(0), 3)]));
        assert_eq!(t.children(2), &BTreeMap::from([(Color(0), 4)]));
        assert!(t.children(3).is_empty() && t.children(4).is_empty());

        let t = build_erdos(&parity(), 1).unwrap();
        assert_eq!(t.size(), 1);
        assert!(t.children(0).is_empty());

        assert_eq!(build_erdos(&parity(), 0), Err(ErdosError::EmptyHorizon));
    }

    #[test]
    fn word_tree_examples() {
        let path = build_erdos(&constant(2, 0), 3).unwrap();
        let (wt, idx) = to_word_tree(&path);
        assert_eq!(wt.nodes().unwrap().len(), 3);
        assert_eq!(idx.node(&w(&[0, 0])), Some(2));

        let (wt, idx) = to_word_tree(&build_erdos(&parity(), 5).unwrap());
        let expected: Vec<ColorWord> = vec![w(&[]), w(&[0]), w(&[0, 0]), w(&[1]), w(&[1, 0])];
        assert_eq!(wt.nodes().unwrap().iter().cloned().collect::<Vec<_>>(), expected);
        for n in 0..5 {
            assert_eq!(idx.node(idx.word(n).unwrap()), Some(n));
        }

        let (wt, _) = to_word_tree(&ErdosTree::singleton(3));
        assert_eq!(wt.nodes().unwrap().len(), 1);
    }

    #[test]
    fn erdos_property_examples() {
        let t = build_erdos(&parity(), 30).unwrap();
        assert!(check_erdos_property(&t, &parity()).unwrap());

        let path = ErdosTree::from_links(2, &[None, Some((0, Color(0))), Some((1, Color(0)))]).unwrap();
        let bad = FnColoring::new(2, |x, y| u64::from(x == 0 && y == 2));
        assert!(!check_erdos_property(&path, &bad).unwrap());

        assert!(check_erdos_property(&ErdosTree::singleton(2), &parity()).unwrap());
    }

    #[test]
    fn from_links_rejects_bad_structure() {
        let c = |i| Color(i);
        assert!(ErdosTree::from_links(2, &[Some((0, c(0)))]).is_err());
        assert!(ErdosTree::from_links(2, &[None, Some((1, c(0)))]).is_err());
        assert!(ErdosTree::from_links(2, &[None, Some((0, c(0))), Some((0, c(0)))]).is_err());
        assert!(ErdosTree::from_links(2, &[None, Some((0, c(2)))]).is_err());
    }

    #[test]
    fn formula_agrees_with_descent_on_parity() {
        let n = 20;
        let t = build_erdos(&parity(), n).unwrap();
        let rel = formula_ancestors(&parity(), n).unwrap();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(rel[x][y], t.is_ancestor(x, y), "{x} {y}");
            }
        }
    }

    #[test]
    fn out_of_range_coloring_is_reported() {
        struct Bad;
        impl Coloring for Bad {
            fn k(&self) -> u32 {
                2
            }
            fn color(&self, _: u64, _: u64) -> Result<Color, ColoringError> {
                Ok(Color(5))
            }
        }
        assert!(matches!(build_erdos(&Bad, 3), Err(ErdosError::ColorOutOfRange { .. })));
    }

    #[test]
    fn extract_examples() {
        let c0 = constant(2, 0);
        let t = build_erdos(&c0, 6).unwrap();
        let (_, idx) = to_word_tree(&t);
        let branch: Vec<ColorWord> = (0..6).map(|n| t.word(n)).collect();
        let r = extract_homogeneous(&t, &branch, &idx, &c0).unwrap();
        assert_eq!(r.sets, vec![vec![0, 1, 2, 3, 4], vec![]]);
        assert!(r.verified);

        let t = build_erdos(&parity(), 20).unwrap();
        let (_, idx) = to_word_tree(&t);
        let evens: Vec<ColorWord> = (0..20).step_by(2).map(|n| t.word(n)).collect();
        let r = extract_homogeneous(&t, &evens, &idx, &parity()).unwrap();
        assert_eq!(r.branch, (0..20).step_by(2).collect::<Vec<_>>());
        assert_eq!(r.sets[0], (0..18).step_by(2).collect::<Vec<_>>());
        assert!(r.verified);

        let r = extract_homogeneous(&t, &[ColorWord::root()], &idx, &parity()).unwrap();
        assert!(r.sets.iter().all(Vec::is_empty));
        assert!(r.verified);

        assert_eq!(
            extract_homogeneous(&t, &[w(&[1, 1])], &idx, &parity()),
            Err(ErdosError::WordNotInIndex(w(&[1, 1])))
        );
    }

    #[test]
    fn verification_catches_a_wrong_coloring() {
        let t = build_erdos(&constant(2, 0), 5).unwrap();
        let (_, idx) = to_word_tree(&t);
        let branch: Vec<ColorWord> = (0..5).map(|n| t.word(n)).collect();
        // verify against a coloring the tree was not built from
        let r = extract_homogeneous(&t, &branch, &idx, &parity()).unwrap();
        assert!(!r.verified);
    }

    #[test]
    fn pipeline_examples() {
        let run = homog_pipeline(&constant(2, 0), 10, 100, None).unwrap();
        assert_eq!(run.report.sets[0], (0..9).collect::<Vec<_>>());
        assert!(run.report.verified);

        let run = homog_pipeline(&parity(), 50, 500, None).unwrap();
        assert!(run.report.verified);
        assert!(run.report.largest() >= 20);

        let bad = PriorityList::from_indices([0]).unwrap();
        assert_eq!(
            homog_pipeline(&parity(), 5, 5, Some(&bad)).unwrap_err(),
            ErdosError::PriorityNotCovering(2)
        );
    }

    #[test]
    fn report_json_shape() {
        let run = homog_pipeline(&constant(2, 0), 3, 10, None).unwrap();
        let text = serde_json::to_string(&run.report).unwrap();
        assert_eq!(
            text,
            r#"{"k":2,"N":3,"branch":[0,1,2],"H":[[0,1],[]],"verified":true,"census":{"0":2,"1":0}}"#
        );
    }

    #[test]
    fn dot_export() {
        let run = homog_pipeline(&parity(), 6, 10, None).unwrap();
        let dot = run.tree.to_dot(Some(&run.report));
        assert!(dot.starts_with("digraph erdos {"));
        assert_eq!(dot.matches("->").count(), 5);
        assert!(dot.contains("penwidth=2"));
    }
}
