//! Rank tables realized from combinatorial structures, convex closure in
//! antimatroids, and greedoid minors through feasible sets.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::axioms::{check_antimatroid, check_greedoid, FeasibleFamily};
use crate::error::{Error, Result};
use crate::ground::{GroundSet, RankTable, Subset};

/// Largest edge count for which structure tables are materialized.
pub const MAX_STRUCTURE_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub ends: (usize, usize),
}

/// Shared validation for the two graph kinds: named vertices, labelled
/// simple edges.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Graph {
    fn new<V, L>(vertices: Vec<V>, edges: Vec<(L, V, V)>) -> Result<Self>
    where
        V: AsRef<str>,
        L: Into<String>,
    {
        let vertices: Vec<String> = vertices.iter().map(|v| String::from(v.as_ref())).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidGraph(format!("duplicate vertex {v:?}")));
            }
        }
        if vertices.len() > 64 {
            return Err(Error::InvalidGraph(format!(
                "{} vertices, at most 64 supported",
                vertices.len()
            )));
        }
        let find = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {name:?}")))
        };
        let mut out: Vec<Edge> = Vec::with_capacity(edges.len());
        for (label, u, v) in edges {
            let label: String = label.into();
            let (u, v) = (find(u.as_ref())?, find(v.as_ref())?);
            if out.iter().any(|e| e.label == label) {
                return Err(Error::InvalidGraph(format!("duplicate edge label {label:?}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at edge {label:?}")));
            }
            if out
                .iter()
                .any(|e| e.ends == (u, v) || e.ends == (v, u))
            {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge {label:?}; only simple graphs are supported"
                )));
            }
            out.push(Edge {
                label,
                ends: (u, v),
            });
        }
        if out.len() > MAX_STRUCTURE_EDGES {
            return Err(Error::TooManyElements {
                n: out.len(),
                max: MAX_STRUCTURE_EDGES,
            });
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    fn ground(&self) -> GroundSet {
        GroundSet::new(self.edges.iter().map(|e| e.label.clone()))
            .expect("edge labels validated distinct")
    }

    /// Vertices reachable from `start` using only edges in `a`.
    fn reach(&self, start: usize, a: Subset) -> u64 {
        let mut seen = 1u64 << start;
        loop {
            let before = seen;
            for i in a.elements() {
                let (u, v) = self.edges[i].ends;
                if seen >> u & 1 == 1 {
                    seen |= 1 << v;
                } else if seen >> v & 1 == 1 {
                    seen |= 1 << u;
                }
            }
            if seen == before {
                return seen;
            }
        }
    }

    fn is_connected(&self) -> bool {
        self.vertices.is_empty()
            || self.reach(0, Subset::full(self.edges.len())).count_ones() as usize
                == self.vertices.len()
    }

    /// Whether the edges of `a` form a connected subgraph (the empty set counts).
    fn edges_connected(&self, a: Subset) -> bool {
        let Some(first) = a.elements().next() else {
            return true;
        };
        let start = self.edges[first].ends.0;
        let reached = self.reach(start, a);
        a.elements().all(|i| reached >> self.edges[i].ends.0 & 1 == 1)
    }
}

/// A connected simple graph with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    /// `edges` are `(label, endpoint, endpoint)` triples.
    pub fn new<V, L>(vertices: Vec<V>, root: &str, edges: Vec<(L, V, V)>) -> Result<Self>
    where
        V: AsRef<str>,
        L: Into<String>,
    {
        let graph = Graph::new(vertices, edges)?;
        let root = graph
            .vertices
            .iter()
            .position(|v| v == root)
            .ok_or_else(|| Error::InvalidGraph(format!("root {root:?} is not a vertex")))?;
        let rg = RootedGraph { graph, root };
        if rg.graph.reach(root, Subset::full(rg.graph.edges.len())).count_ones() as usize
            != rg.graph.vertices.len()
        {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(rg)
    }

    pub fn vertices(&self) -> &[String] {
        &self.graph.vertices
    }

    pub fn root(&self) -> &str {
        &self.graph.vertices[self.root]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.graph.edges
    }

    pub fn ground(&self) -> GroundSet {
        self.graph.ground()
    }
}

/// A tree with labelled edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new<V, L>(vertices: Vec<V>, edges: Vec<(L, V, V)>) -> Result<Self>
    where
        V: AsRef<str>,
        L: Into<String>,
    {
        let graph = Graph::new(vertices, edges)?;
        if graph.vertices.is_empty() {
            return Err(Error::InvalidGraph("tree has no vertices".into()));
        }
        if graph.edges.len() + 1 != graph.vertices.len() {
            return Err(Error::InvalidGraph(format!(
                "{} edges on {} vertices is not a tree",
                graph.edges.len(),
                graph.vertices.len()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::InvalidGraph("tree is disconnected".into()));
        }
        Ok(Tree { graph })
    }

    pub fn vertices(&self) -> &[String] {
        &self.graph.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.graph.edges
    }

    pub fn ground(&self) -> GroundSet {
        self.graph.ground()
    }

    /// Whether the edges of `a` form a subtree; the empty edge set is one.
    pub fn is_subtree(&self, a: Subset) -> bool {
        self.graph.edges_connected(a)
    }
}

/// `r(A)` = edges in the largest subtree of `A` containing the root.
pub fn branching_greedoid(rg: &RootedGraph) -> RankTable {
    let g = &rg.graph;
    RankTable::from_fn(g.ground(), |a| {
        i64::from(g.reach(rg.root, a).count_ones()) - 1
    })
}

/// Whether every non-root vertex is adjacent to the root.
pub fn root_adjacency_test(rg: &RootedGraph) -> bool {
    let g = &rg.graph;
    let mut adjacent = 1u64 << rg.root;
    for e in &g.edges {
        if e.ends.0 == rg.root {
            adjacent |= 1 << e.ends.1;
        } else if e.ends.1 == rg.root {
            adjacent |= 1 << e.ends.0;
        }
    }
    adjacent.count_ones() as usize == g.vertices.len()
}

/// Rank of the largest feasible subset, given feasibility per mask.
fn rank_from_feasible(ground: GroundSet, feasible: &[bool]) -> RankTable {
    let mut best = vec![0i64; feasible.len()];
    for m in 0..feasible.len() {
        let a = Subset(m as u32);
        best[m] = if feasible[m] {
            a.len() as i64
        } else {
            a.elements()
                .map(|i| best[a.without(i).index()])
                .max()
                .unwrap_or(0)
        };
    }
    RankTable::from_values(ground, best).expect("sized to the ground set")
}

/// `A` is feasible when `S − A` is a subtree; rank is the largest feasible
/// subset.
pub fn pruning_antimatroid(t: &Tree) -> RankTable {
    let n = t.graph.edges.len();
    let feasible: Vec<bool> = (0..1u32 << n)
        .map(|m| t.is_subtree(Subset(m).complement(n)))
        .collect();
    rank_from_feasible(t.ground(), &feasible)
}

/// `r(A) = min(|A|, k)`.
pub fn uniform_matroid<I, S>(labels: I, k: usize) -> Result<RankTable>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let ground = GroundSet::new(labels)?;
    let n = ground.len();
    if k > n {
        return Err(Error::InvalidUniform { k, n });
    }
    Ok(RankTable::from_fn(ground, |a| a.len().min(k) as i64))
}

/// A table verified to be a full antimatroid, so that convex closure is
/// well defined. `C` is convex when `S − C` is feasible.
#[derive(Debug, Clone)]
pub struct FullAntimatroid {
    table: RankTable,
    feasible: Vec<bool>,
}

impl FullAntimatroid {
    pub fn new(table: RankTable) -> Result<Self> {
        if table.total_rank() != table.n() as i64 || !check_antimatroid(&table).passed() {
            return Err(Error::NotFullAntimatroid);
        }
        let feasible = table
            .entries()
            .map(|(a, r)| r == a.len() as i64)
            .collect();
        Ok(FullAntimatroid { table, feasible })
    }

    pub fn table(&self) -> &RankTable {
        &self.table
    }

    pub fn is_feasible(&self, a: Subset) -> bool {
        self.feasible[a.index()]
    }

    pub fn is_convex(&self, c: Subset) -> bool {
        self.is_feasible(self.table.ground().complement(c))
    }

    /// Intersection of all convex supersets of `a`, i.e. the complement of
    /// the union of feasible sets avoiding `a`.
    pub fn closure(&self, a: Subset) -> Result<Subset> {
        self.table.ground().check(a)?;
        let avoid = self.table.ground().complement(a);
        let union = avoid
            .submasks()
            .filter(|&f| self.is_feasible(f))
            .fold(Subset::EMPTY, |acc, f| acc.union(f));
        let closed = self.table.ground().complement(union);
        if !self.is_convex(closed) {
            return Err(Error::ClosureNotConvex);
        }
        Ok(closed)
    }
}

/// Convex closure of `a`; validates the antimatroid on every call.
pub fn convex_closure(g: &RankTable, a: Subset) -> Result<Subset> {
    FullAntimatroid::new(g.clone())?.closure(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorKind {
    Delete,
    Contract,
}

/// The feasible family of `G − p` or `G / p` for a greedoid `G`.
///
/// Contraction needs `{p}` feasible, or `p` a greedoid loop, in which case
/// `G / p = G − p`.
pub fn greedoid_minor_feasible(g: &RankTable, p: usize, kind: MinorKind) -> Result<FeasibleFamily> {
    if p >= g.n() {
        return Err(Error::UnknownLabel(format!("#{p}")));
    }
    if !check_greedoid(g).passed() {
        return Err(Error::InputNotGreedoid);
    }
    let family = FeasibleFamily::from_table(g);
    let keep = g.ground().full().without(p);
    let minor_ground = g.ground().restrict(keep);
    let singleton = Subset::singleton(p);
    let is_loop = !family.members().iter().any(|f| f.contains(p));
    let members: Vec<Subset> = match kind {
        MinorKind::Contract if !is_loop => {
            if !family.contains(singleton) {
                return Err(Error::NotAGreedoid(g.ground().label(p).into()));
            }
            family
                .members()
                .iter()
                .filter(|f| f.contains(p))
                .map(|f| f.without(p).compress(keep))
                .collect()
        }
        _ => family
            .members()
            .iter()
            .filter(|f| !f.contains(p))
            .map(|f| f.compress(keep))
            .collect(),
    };
    FeasibleFamily::from_members(minor_ground, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_matroid;
    use crate::fixtures::{bundled_tree, three_edge_tree, three_edge_greedoid};
    use crate::ops::{contract, delete, dual};

    fn bundled_set(labels: &[&str]) -> Subset {
        bundled_tree().ground().subset(labels.iter().copied()).unwrap()
    }

    #[test]
    fn three_edge_tree_ranks() {
        let r = branching_greedoid(&three_edge_tree());
        assert_eq!(r, three_edge_greedoid());
        assert_eq!(r.rank_of_labels(["b", "c"]).unwrap(), 1);
        assert!(!root_adjacency_test(&three_edge_tree()));
        assert_eq!(dual(&r).unwrap().rank_of_labels(["a"]).unwrap(), -1);
    }

    #[test]
    fn single_edge_and_star() {
        let one = RootedGraph::new(vec!["r", "x"], "r", vec![("e", "r", "x")]).unwrap();
        assert_eq!(branching_greedoid(&one).values(), &[0, 1]);

        let star = RootedGraph::new(
            vec!["r", "x", "y", "z"],
            "r",
            vec![("a", "r", "x"), ("b", "y", "r"), ("c", "r", "z")],
        )
        .unwrap();
        let t = branching_greedoid(&star);
        assert!(t.entries().all(|(a, r)| r == a.len() as i64));
        assert!(root_adjacency_test(&star));
        assert!(dual(&t).unwrap().values().iter().all(|&v| v >= 0));
    }

    #[test]
    fn triangle_is_root_adjacent() {
        let tri = RootedGraph::new(
            vec!["r", "u", "v"],
            "r",
            vec![("a", "r", "u"), ("b", "u", "v"), ("c", "v", "r")],
        )
        .unwrap();
        assert!(root_adjacency_test(&tri));
        assert!(check_greedoid(&branching_greedoid(&tri)).passed());
    }

    #[test]
    fn graph_validation() {
        assert!(matches!(
            RootedGraph::new(vec!["r", "x", "y"], "r", vec![("a", "r", "x")]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            RootedGraph::new(vec!["r", "x"], "r", vec![("a", "r", "x"), ("b", "x", "r")]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            RootedGraph::new(vec!["r"], "r", vec![("a", "r", "r")]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            RootedGraph::new(vec!["r", "x"], "q", vec![("a", "r", "x")]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Tree::new(
                vec!["u", "v", "w"],
                vec![("a", "u", "v"), ("b", "v", "w"), ("c", "w", "u")]
            ),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn bundled_tree_example_values() {
        let t = bundled_tree();
        let r = pruning_antimatroid(&t);
        let n = r.n();
        assert_eq!(n, 10);
        let rd = dual(&r).unwrap();

        let a = bundled_set(&["a", "d", "e", "f"]);
        assert!(t.is_subtree(a.complement(n)));
        assert_eq!(r.rank(a), 4);
        assert_eq!(rd.rank(a.complement(n)), 0);

        let a = bundled_set(&["b", "e", "h"]);
        assert_eq!(r.rank(a), 2);
        assert_eq!(r.rank(bundled_set(&["e", "h"])), 2);
        assert_eq!(convex_closure(&r, a).unwrap(), bundled_set(&["b", "c", "d", "e", "h"]));

        let a = bundled_set(&["a", "d", "f"]);
        assert_eq!(r.rank(a.complement(n)), 4);
        assert_eq!(r.rank(bundled_set(&["e", "h", "i", "j"])), 4);
        assert_eq!(rd.rank(a), -3);
        let closed = convex_closure(&r, a).unwrap();
        assert_eq!(closed, bundled_set(&["a", "b", "c", "d", "f", "g"]));
        assert_eq!(closed.difference(a).len(), 3);

        assert!(t.is_subtree(bundled_set(&["b", "c", "g", "h", "i", "j"])));
        assert!(check_antimatroid(&r).passed());
        assert_eq!(r.total_rank(), 10);
    }

    #[test]
    fn pruning_convexity_is_subtree() {
        let t = bundled_tree();
        let ag = FullAntimatroid::new(pruning_antimatroid(&t)).unwrap();
        for c in t.ground().subsets() {
            assert_eq!(ag.is_convex(c), t.is_subtree(c));
            if ag.is_convex(c) {
                assert_eq!(ag.closure(c).unwrap(), c);
            }
        }
    }

    #[test]
    fn single_edge_tree() {
        let t = Tree::new(vec!["u", "v"], vec![("e", "u", "v")]).unwrap();
        assert_eq!(pruning_antimatroid(&t).values(), &[0, 1]);
    }

    #[test]
    fn closure_rejects_non_antimatroids() {
        let u = uniform_matroid(["a", "b"], 1).unwrap();
        assert_eq!(convex_closure(&u, Subset::EMPTY), Err(Error::NotFullAntimatroid));
        // the three-edge branching greedoid is a full antimatroid
        assert!(convex_closure(&three_edge_greedoid(), Subset(0b010)).is_ok());
    }

    #[test]
    fn uniform_matroids() {
        assert_eq!(uniform_matroid(["a", "b"], 0).unwrap().values(), &[0, 0, 0, 0]);
        let u23 = uniform_matroid(["a", "b", "c"], 2).unwrap();
        assert_eq!(u23.total_rank(), 2);
        assert!(check_matroid(&u23).passed());
        assert_eq!(
            uniform_matroid(["a"], 2),
            Err(Error::InvalidUniform { k: 2, n: 1 })
        );
        for n in 0..=5 {
            let labels = GroundSet::alphabetic(n).unwrap().labels().to_vec();
            for k in 0..=n {
                let u = uniform_matroid(labels.clone(), k).unwrap();
                assert_eq!(dual(&u).unwrap(), uniform_matroid(labels.clone(), n - k).unwrap());
            }
        }
    }

    #[test]
    fn greedoid_minors_by_feasible_sets() {
        let g = three_edge_greedoid();
        let con_a = greedoid_minor_feasible(&g, 0, MinorKind::Contract).unwrap();
        assert_eq!(con_a.members(), &[Subset(0), Subset(0b01), Subset(0b10), Subset(0b11)]);
        assert_eq!(con_a.induced_rank(), contract(&g, 0).unwrap());

        assert_eq!(
            greedoid_minor_feasible(&g, 1, MinorKind::Contract),
            Err(Error::NotAGreedoid("b".into()))
        );
        let rank_based = contract(&g, 1).unwrap();
        assert_eq!(rank_based.rank_of_labels(["a"]).unwrap(), 2);
        assert!(!check_greedoid(&rank_based).passed());

        for p in 0..3 {
            let del = greedoid_minor_feasible(&g, p, MinorKind::Delete).unwrap();
            assert_eq!(del.induced_rank(), delete(&g, p).unwrap());
            assert!(check_greedoid(&del.induced_rank()).passed());
        }
    }

    #[test]
    fn contracting_a_greedoid_loop_is_deletion() {
        // c is added as a rank-0 element, so it lies in no feasible set
        let rg = RootedGraph::new(
            vec!["r", "x", "y"],
            "r",
            vec![("a", "r", "x"), ("b", "x", "y")],
        )
        .unwrap();
        let g = branching_greedoid(&rg);
        let null = RankTable::from_values(GroundSet::new(["c"]).unwrap(), vec![0, 0]).unwrap();
        let g = crate::ops::direct_sum(&g, &null).unwrap();
        let fam = greedoid_minor_feasible(&g, 2, MinorKind::Contract).unwrap();
        assert_eq!(fam, greedoid_minor_feasible(&g, 2, MinorKind::Delete).unwrap());
        assert_eq!(fam.induced_rank(), contract(&g, 2).unwrap());
    }
}
