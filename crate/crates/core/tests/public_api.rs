//! End-to-end use of the public API, one module after another.

use dvisit::dsl::{builtin, DslColoring, TableColoring};
use dvisit::erdos::{compare_horizons, HorizonCheck};
use dvisit::suites::{run_suite, Suite};
use dvisit::{
    build_erdos, check_erdos_property, check_visit, enumerate_visit, extend_visit, homog_pipeline, nth_expansion,
    to_word_tree, Color, ColorTree, ColorWord, Extension, PriorityList, TreeError, VisitError,
};

fn w(v: &[u32]) -> ColorWord {
    ColorWord::from_indices(v.iter().copied())
}

#[test]
fn tree_file_round_trip() {
    let tree = ColorTree::from_json(r#"{"k":2,"nodes":[[],[0],[1],[1,0]]}"#).unwrap();
    assert!(tree.contains(&w(&[1, 0])));
    let text = serde_json::to_string(&tree.to_file().unwrap()).unwrap();
    assert_eq!(ColorTree::from_json(&text).unwrap().nodes(), tree.nodes());
    assert!(matches!(
        ColorTree::from_json(r#"{"k":2,"nodes":[[],[1,0]]}"#),
        Err(TreeError::NotPrefixClosed { .. })
    ));
}

#[test]
fn cursor_and_checker_agree_step_by_step() {
    let tree = ColorTree::full(3, 2);
    let d = PriorityList::from_indices([2, 0, 1]).unwrap();
    let full = enumerate_visit(&tree, &d, &ColorWord::root(), 1000).unwrap();
    assert!(full.terminated);
    assert_eq!(full.order.len(), 13);
    for end in 1..=full.order.len() {
        let prefix = &full.order[..end];
        assert!(check_visit(&tree, prefix, &d, &ColorWord::root()));
        let expected = match full.order.get(end) {
            Some(next) => Extension::Next(next.clone()),
            None => Extension::Complete,
        };
        assert_eq!(extend_visit(&tree, prefix, &d, &ColorWord::root()).unwrap(), expected);
    }
}

#[test]
fn visit_errors() {
    let tree = ColorTree::full(2, 1);
    let d = PriorityList::standard(2);
    assert_eq!(
        enumerate_visit(&tree, &d, &w(&[0, 0]), 10).unwrap_err(),
        VisitError::RootNotInTree(w(&[0, 0]))
    );
    assert_eq!(enumerate_visit(&tree, &d, &ColorWord::root(), 0).unwrap_err(), VisitError::ZeroBudget);
    assert!(nth_expansion(&tree, &[w(&[1, 1])], 0, Color(0)).is_err());
}

#[test]
fn infinite_complete_tree_is_enumerated_lazily() {
    let tree = ColorTree::complete(2);
    let visit = enumerate_visit(&tree, &PriorityList::standard(2), &ColorWord::root(), 30).unwrap();
    assert_eq!(visit.order.len(), 30);
    assert!(!visit.terminated);
    // the highest-priority color is followed forever
    assert!(visit.order.iter().enumerate().all(|(i, x)| *x == ColorWord::from_indices(vec![1; i])));
}

#[test]
fn erdos_tree_of_a_table() {
    let table = TableColoring::from_json(r#"{"k":2,"pairs":[[0,1,0],[0,2,0],[1,2,1]]}"#).unwrap();
    let tree = build_erdos(&table, 3).unwrap();
    assert_eq!(tree.parent(2), Some(1));
    assert!(check_erdos_property(&tree, &table).unwrap());
    let (word_tree, index) = to_word_tree(&tree);
    assert!(word_tree.contains(&w(&[0, 1])));
    assert_eq!(index.node(&w(&[0, 1])), Some(2));
}

#[test]
fn constant_coloring_pipeline() {
    let c = builtin("constant:0", 2).unwrap();
    let report = homog_pipeline(c.as_ref(), 10, 100, None).unwrap().report;
    assert!(report.verified);
    assert_eq!(report.sets[0], (0..9).collect::<Vec<_>>());
    assert!(report.sets[1].is_empty());
}

#[test]
fn parity_pipeline_across_horizons() {
    let c = DslColoring::parse("(x+y)%2", 2).unwrap();
    let small = homog_pipeline(&c, 50, 1000, None).unwrap().report;
    let large = homog_pipeline(&c, 200, 2000, None).unwrap().report;
    assert!(small.verified && large.verified);
    assert_eq!(compare_horizons(&small, &large), HorizonCheck::Consistent);
    assert!(large.largest() >= small.largest());
}

#[test]
fn priority_must_cover_colors_for_the_pipeline() {
    let c = builtin("sum-mod", 3).unwrap();
    let partial = PriorityList::from_indices([0, 1]).unwrap();
    assert!(homog_pipeline(c.as_ref(), 10, 100, Some(&partial)).is_err());
    let rotated = PriorityList::from_indices([2, 0, 1]).unwrap();
    assert!(homog_pipeline(c.as_ref(), 60, 500, Some(&rotated)).unwrap().report.verified);
}

#[test]
fn every_suite_passes_on_a_few_seeds() {
    for seed in [1, 42, 2024] {
        for suite in Suite::ALL {
            let report = run_suite(suite, seed, 40);
            assert!(report.passed(), "{} seed {seed}: {:?}", suite.name(), report.failures);
        }
    }
}
