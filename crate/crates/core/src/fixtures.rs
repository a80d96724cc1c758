//! Small worked structures used as golden fixtures.

use alloc::vec;

use crate::ground::{GroundSet, RankTable};
use crate::structures::{RootedGraph, Tree};

/// Chain root, a, b plus a pendant c at the root; its branching greedoid is
/// [`three_edge_greedoid`].
pub fn three_edge_tree() -> RootedGraph {
    RootedGraph::new(
        vec!["root", "v1", "v2", "v3"],
        "root",
        vec![("a", "root", "v1"), ("b", "v1", "v2"), ("c", "root", "v3")],
    )
    .expect("valid rooted tree")
}

/// Branching greedoid on `{a, b, c}`; by subset `∅ a b c ab ac bc abc` the
/// ranks are `0 1 0 1 2 2 1 3`.
pub fn three_edge_greedoid() -> RankTable {
    RankTable::from_values(
        GroundSet::new(["a", "b", "c"]).expect("distinct labels"),
        vec![0, 1, 0, 2, 1, 2, 1, 3],
    )
    .expect("eight entries")
}

/// `r(∅) = 3, r(a) = −1, r(b) = 7, r(S) = 2`: not normalized, and its
/// Tutte function has negative exponents.
pub fn unnormalized_pair() -> RankTable {
    RankTable::from_values(
        GroundSet::new(["a", "b"]).expect("distinct labels"),
        vec![3, -1, 7, 2],
    )
    .expect("four entries")
}

/// Ten-edge tree for the pruning antimatroid examples.
///
/// Path `u1 -a- u2 -b- u3 -c- u4 -d- u5 -e- u6`, a pendant edge
/// `h = (u4, x1)`, and a branch `g = (u4, w1)` carrying `f = (w1, w2)` and
/// the chain `i = (w1, w3)`, `j = (w3, w4)`.
pub fn bundled_tree() -> Tree {
    Tree::new(
        vec!["u1", "u2", "u3", "u4", "u5", "u6", "x1", "w1", "w2", "w3", "w4"],
        vec![
            ("a", "u1", "u2"),
            ("b", "u2", "u3"),
            ("c", "u3", "u4"),
            ("d", "u4", "u5"),
            ("e", "u5", "u6"),
            ("f", "w1", "w2"),
            ("g", "u4", "w1"),
            ("h", "u4", "x1"),
            ("i", "w1", "w3"),
            ("j", "w3", "w4"),
        ],
    )
    .expect("valid tree")
}
