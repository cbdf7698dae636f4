//! Priority-driven complete visits of k-ary color trees, and their use in
//! extracting homogeneous sets from edge colorings of the naturals.
//!
//! The crate is organised bottom-up:
//!
//! * [`word`] and [`tree`]: color words, priority lists, prefix-closed trees.
//! * [`visit`]: completeness, expansions, the declarative visit checker, the
//!   step-by-step generator, stable entries and the approximated branch.
//! * [`erdos`]: Erdős trees of colorings and the homogeneous-set pipeline.
//! * [`dsl`]: a small expression language and built-in coloring families.
//! * [`oracles`]: brute-force references and seeded generators.
//! * [`suites`]: seeded property suites, shared by the `check` command.
//!
//! ```
//! use dvisit::{enumerate_visit, ColorTree, ColorWord, PriorityList};
//!
//! let tree = ColorTree::full(2, 2);
//! let visit = enumerate_visit(&tree, &PriorityList::standard(2), &ColorWord::root(), 100).unwrap();
//! let shown: Vec<String> = visit.order.iter().map(|w| w.to_string()).collect();
//! assert_eq!(shown, ["<>", "<1>", "<1,1>", "<0>", "<0,0>", "<0,1>", "<1,0>"]);
//! assert!(visit.terminated);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod dsl;
pub mod erdos;
pub mod oracles;
pub mod suites;
pub mod tree;
pub mod visit;
pub mod word;

pub use erdos::{
    build_erdos, check_erdos_property, extract_homogeneous, homog_pipeline, to_word_tree, Coloring,
    ColoringError, ErdosError, ErdosTree, HomogeneousReport, PipelineRun, WordIndex,
};
pub use tree::{validate_tree, ColorTree, TreeError};
pub use visit::{
    branch_approx, check_visit, enumerate_visit, extend_visit, is_c_complete, is_d_complete, nth_expansion,
    stable_indices, ColorCensus, Extension, Visit, VisitCursor, VisitError, VisitTrace,
};
pub use word::{lex_compare, Color, ColorWord, PriorityList};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/visits.md")]
    mod visits {}
    #[doc = include_str!("../../../book/src/branches.md")]
    mod branches {}
    #[doc = include_str!("../../../book/src/erdos.md")]
    mod erdos {}
    #[doc = include_str!("../../../book/src/colorings.md")]
    mod colorings {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
