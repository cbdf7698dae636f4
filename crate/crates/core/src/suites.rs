//! Seeded property suites over random trees and colorings.
//!
//! Each suite draws its cases from a single seed, so a failure can be
//! reproduced from `(suite, seed, cases)`. Failing tree cases are shrunk by
//! deleting leaves and priority colors while the property still fails.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dsl::{builtin, DslColoring};
use crate::erdos::{build_erdos, check_erdos_property, formula_ancestors, homog_pipeline, to_word_tree, Coloring};
use crate::oracles::{
    all_visits, naive_nth_expansion, random_coloring, random_node, random_priority, random_tree,
    restricted_by_search, TreeGenParams,
};
use crate::tree::ColorTree;
use crate::visit::{check_visit, enumerate_visit, is_d_complete, nth_expansion, stable_indices};
use crate::word::{Color, ColorWord, PriorityList};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Generator output is a duplicate-free subtree; terminated runs are maximal.
    Visits,
    /// Exhaustive visit enumeration agrees with the generator.
    Oracle,
    /// Fast and naive expansions agree.
    Expansion,
    /// Erdős trees have the Erdős property and match the recursive formula.
    Erdos,
    /// Pipeline reports are verified.
    Homog,
    /// DSL colorings are symmetric, in range and deterministic.
    Dsl,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Visits, Suite::Oracle, Suite::Expansion, Suite::Erdos, Suite::Homog, Suite::Dsl];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Visits => "visits",
            Suite::Oracle => "oracle",
            Suite::Expansion => "expansion",
            Suite::Erdos => "erdos",
            Suite::Homog => "homog",
            Suite::Dsl => "dsl",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: usize,
    pub message: String,
    /// Shrunk input reproducing the failure.
    pub counterexample: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_suite(suite: Suite, seed: u64, cases: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (suite as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut failures = Vec::new();
    for case in 0..cases {
        let result = match suite {
            Suite::Visits => tree_case(&mut rng, 4, 40, visit_properties),
            Suite::Oracle => tree_case(&mut rng, 3, 25, oracle_properties),
            Suite::Expansion => expansion_case(&mut rng),
            Suite::Erdos => erdos_case(&mut rng),
            Suite::Homog => homog_case(&mut rng),
            Suite::Dsl => dsl_case(&mut rng),
        };
        if let Err((message, counterexample)) = result {
            failures.push(Failure { case, message, counterexample });
        }
    }
    SuiteReport { suite, cases, failures }
}

type TreeProperty = fn(&ColorTree, &PriorityList, &ColorWord) -> Outcome;

fn tree_case(rng: &mut ChaCha8Rng, max_k: u32, max_nodes: usize, property: TreeProperty) -> Result<(), (String, String)> {
    let tree = random_tree(&TreeGenParams::sample(rng, max_k, max_nodes));
    let priority = random_priority(rng, tree.k());
    let root = if rng.gen_bool(0.7) { ColorWord::root() } else { random_node(rng, &tree) };
    match property(&tree, &priority, &root) {
        Ok(()) => Ok(()),
        Err(first) => {
            let (tree, priority, message) = shrink_tree_case(tree, priority, &root, first, property);
            let dump = format!(
                "tree={} priority={:?} root={}",
                serde_json::to_string(&tree.to_file().expect("finite")).expect("serializable"),
                priority.colors().iter().map(|c| c.0).collect::<Vec<_>>(),
                root
            );
            Err((message, dump))
        }
    }
}

fn shrink_tree_case(
    mut tree: ColorTree,
    mut priority: PriorityList,
    root: &ColorWord,
    mut message: String,
    property: TreeProperty,
) -> (ColorTree, PriorityList, String) {
    loop {
        let mut progressed = false;
        let nodes: Vec<ColorWord> = tree.nodes().expect("finite").iter().cloned().collect();
        for leaf in &nodes {
            if leaf.is_prefix_of(root) || nodes.iter().any(|m| leaf.is_proper_prefix_of(m)) {
                continue;
            }
            let smaller = ColorTree::finite(nodes.iter().filter(|n| *n != leaf).cloned(), tree.k())
                .expect("removing a leaf keeps the tree prefix-closed");
            if let Err(m) = property(&smaller, &priority, root) {
                tree = smaller;
                message = m;
                progressed = true;
                break;
            }
        }
        if !progressed {
            for i in 0..priority.len() {
                let mut colors = priority.colors().to_vec();
                colors.remove(i);
                let fewer = PriorityList::new(colors).expect("still distinct");
                if let Err(m) = property(&tree, &fewer, root) {
                    priority = fewer;
                    message = m;
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            return (tree, priority, message);
        }
    }
}

/// No repetitions, prefix-closed above the root, inside `U_D(λ)`, every entry
/// a `D`-child of an earlier one, horizon-stable entries form a chain, and a
/// terminated run is complete and covers `U_D(λ)`.
pub fn visit_properties(tree: &ColorTree, priority: &PriorityList, root: &ColorWord) -> Outcome {
    let visit = enumerate_visit(tree, priority, root, 10_000).map_err(|e| e.to_string())?;
    let order = &visit.order;
    let set: HashSet<&ColorWord> = order.iter().collect();
    ensure(set.len() == order.len(), || "visit repeats an entry".into())?;
    ensure(order.first() == Some(root), || "visit does not start at its root".into())?;
    for (i, mu) in order.iter().enumerate() {
        ensure(
            tree.in_restricted(priority, root, mu).map_err(|e| e.to_string())?,
            || format!("entry {mu} is outside U_D(root)"),
        )?;
        for eta in mu.prefixes().filter(|p| root.is_prefix_of(p)) {
            ensure(set.contains(&eta), || format!("prefix {eta} of {mu} is missing"))?;
        }
        if i > 0 {
            let parent = mu.parent().expect("non-root entry");
            ensure(order[..i].contains(&parent), || format!("{mu} precedes its parent"))?;
        }
    }
    let stable = stable_indices(order);
    for (a, &i) in stable.iter().enumerate() {
        for &j in &stable[a + 1..] {
            ensure(order[i].comparable(&order[j]), || {
                format!("stable entries {} and {} are incomparable", order[i], order[j])
            })?;
        }
    }
    if visit.terminated {
        ensure(is_d_complete(tree, order, priority).map_err(|e| e.to_string())?, || {
            "terminated visit is not D-complete".into()
        })?;
        let full = restricted_by_search(tree, priority, root);
        ensure(set.len() == full.len() && full.iter().all(|w| set.contains(w)), || {
            format!("terminated visit covers {} of {} nodes of U_D(root)", set.len(), full.len())
        })?;
    }
    Ok(())
}

/// The exhaustive set of visits is a prefix chain ending in the generator's
/// complete run, and every shorter visit has exactly one one-node extension.
pub fn oracle_properties(tree: &ColorTree, priority: &PriorityList, root: &ColorWord) -> Outcome {
    let visits = all_visits(tree, priority, root).map_err(|e| e.to_string())?;
    for pair in visits.windows(2) {
        ensure(pair[0].len() < pair[1].len() && pair[1].starts_with(&pair[0]), || {
            "visits are not totally ordered by prefix".into()
        })?;
    }
    let run = enumerate_visit(tree, priority, root, 10_000).map_err(|e| e.to_string())?;
    ensure(run.terminated, || "generator did not finish a finite tree".into())?;
    ensure(visits.last() == Some(&run.order), || "longest visit differs from the generator run".into())?;
    let nodes = tree.nodes().expect("finite");
    for v in &visits[..visits.len() - 1] {
        let extensions = nodes
            .iter()
            .filter(|n| !v.contains(n))
            .filter(|n| {
                let mut longer = v.clone();
                longer.push((*n).clone());
                check_visit(tree, &longer, priority, root)
            })
            .count();
        ensure(extensions == 1, || format!("visit of length {} has {extensions} extensions", v.len()))?;
    }
    let last = visits.last().expect("the root alone is a visit");
    ensure(is_d_complete(tree, last, priority).map_err(|e| e.to_string())?, || {
        "maximal visit is not D-complete".into()
    })
}

fn expansion_case(rng: &mut ChaCha8Rng) -> Result<(), (String, String)> {
    let tree = random_tree(&TreeGenParams::sample(rng, 4, 40));
    let nodes: Vec<&ColorWord> = tree.nodes().expect("finite").iter().collect();
    for _ in 0..20 {
        let bases: Vec<ColorWord> = nodes
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .map(|w| (*w).clone())
            .collect();
        let n = rng.gen_range(0..=bases.len());
        let c = Color(rng.gen_range(0..tree.k()));
        let fast = nth_expansion(&tree, &bases, n, c);
        let naive = naive_nth_expansion(&tree, &bases, n, c);
        if fast != naive {
            return Err((
                format!("expansions disagree: {fast:?} vs {naive:?}"),
                format!("bases={bases:?} n={n} c={c}"),
            ));
        }
    }
    Ok(())
}

fn erdos_case(rng: &mut ChaCha8Rng) -> Result<(), (String, String)> {
    let k = rng.gen_range(2..=4);
    let n = rng.gen_range(1..=64u64);
    let seed = rng.gen();
    let check = |n: u64| -> Outcome {
        let coloring = random_coloring(seed, k, n);
        let tree = build_erdos(&coloring, n as usize).map_err(|e| e.to_string())?;
        ensure(check_erdos_property(&tree, &coloring).map_err(|e| e.to_string())?, || {
            "Erdős property fails".into()
        })?;
        let (_, index) = to_word_tree(&tree);
        for m in 0..tree.size() {
            ensure(index.word(m).and_then(|w| index.node(w)) == Some(m), || {
                format!("word index does not round-trip node {m}")
            })?;
        }
        if n <= 20 {
            let rel = formula_ancestors(&coloring, n as usize).map_err(|e| e.to_string())?;
            for x in 0..n as usize {
                for y in 0..n as usize {
                    ensure(rel[x][y] == tree.is_ancestor(x, y), || {
                        format!("formula and descent disagree on ({x}, {y})")
                    })?;
                }
            }
        }
        Ok(())
    };
    shrink_horizon(n, check, |m| format!("random_coloring(seed={seed}, k={k}, N={m})"))
}

fn shrink_horizon(n: u64, check: impl Fn(u64) -> Outcome, describe: impl Fn(u64) -> String) -> Result<(), (String, String)> {
    let Err(mut message) = check(n) else {
        return Ok(());
    };
    let mut n = n;
    while n > 1 {
        match check(n - 1) {
            Err(m) => {
                message = m;
                n -= 1;
            }
            Ok(()) => break,
        }
    }
    Err((message, describe(n)))
}

const DSL_SAMPLES: [&str; 8] = [
    "(x + y) % 2",
    "x * y + 3",
    "if x < 5 then 0 else y % 3",
    "min(x, y) / 3",
    "max(x * x, y) - y",
    "y % (x - 1)",
    "-x + 2 * y",
    "(x == 0) + (y != 7)",
];

fn homog_case(rng: &mut ChaCha8Rng) -> Result<(), (String, String)> {
    let k = rng.gen_range(2..=4);
    let n = rng.gen_range(1..=200usize);
    let budget = rng.gen_range(1..=4000usize);
    let (label, coloring): (String, Box<dyn Coloring>) = match rng.gen_range(0..3) {
        0 => {
            let src = DSL_SAMPLES[rng.gen_range(0..DSL_SAMPLES.len())];
            (format!("dsl {src:?}"), Box::new(DslColoring::parse(src, k).expect("sample parses")))
        }
        1 => {
            let name = ["sum-mod", "diff-mod", "block:3", "constant:1"][rng.gen_range(0..4)];
            (format!("builtin {name}"), builtin(name, k).expect("builtin exists"))
        }
        _ => {
            let seed = rng.gen();
            (format!("random seed={seed}"), Box::new(random_coloring(seed, k, n as u64)))
        }
    };
    let priority = {
        let mut colors: Vec<Color> = (0..k).map(Color).collect();
        rand::seq::SliceRandom::shuffle(colors.as_mut_slice(), rng);
        PriorityList::new(colors).expect("distinct")
    };
    let check = |n: u64| -> Outcome {
        let run = homog_pipeline(&coloring, n as usize, budget, Some(&priority)).map_err(|e| e.to_string())?;
        ensure(run.report.verified, || "report is not verified".into())
    };
    shrink_horizon(n as u64, check, |m| {
        format!("{label} k={k} N={m} budget={budget} priority={:?}", priority.colors())
    })
}

fn dsl_case(rng: &mut ChaCha8Rng) -> Result<(), (String, String)> {
    let src = DSL_SAMPLES[rng.gen_range(0..DSL_SAMPLES.len())];
    let k = rng.gen_range(1..=5);
    let c = DslColoring::parse(src, k).expect("sample parses");
    for _ in 0..100 {
        let x = rng.gen_range(0..1_000_000u64);
        let y = rng.gen_range(0..1_000_000u64);
        if x == y {
            continue;
        }
        let a = c.color(x, y);
        let ok = match (&a, c.color(y, x), c.color(x, y)) {
            (Ok(a), Ok(b), Ok(again)) => *a == b && *a == again && a.0 < k,
            _ => false,
        };
        if !ok {
            return Err(("coloring is not symmetric, total and in range".into(), format!("{src:?} k={k} at ({x}, {y})")));
        }
    }
    Ok(())
}
