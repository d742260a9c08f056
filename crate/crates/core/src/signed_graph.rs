//! Signed graphs encoding subsets of classical positive roots.
//!
//! `e_i - e_j` is a positive edge, `e_i + e_j` a negative edge, `e_i` a
//! halfedge at `i` and `2 e_i` a negative loop at `i`. Vertices are 0-based.
//! Parallel edges of opposite sign are allowed and form a 2-cycle, which is
//! always unbalanced.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::IntVector;
use crate::roots::RootShape;

/// One item of a signed graph. The derived order matches the root order of
/// [`crate::roots::root_shapes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeItem {
    Positive(usize, usize),
    Negative(usize, usize),
    Halfedge(usize),
    NegativeLoop(usize),
}

impl EdgeItem {
    fn from_shape(shape: RootShape) -> Self {
        match shape {
            RootShape::Difference(i, j) => EdgeItem::Positive(i, j),
            RootShape::Sum(i, j) => EdgeItem::Negative(i, j),
            RootShape::Short(i) => EdgeItem::Halfedge(i),
            RootShape::Long(i) => EdgeItem::NegativeLoop(i),
        }
    }

    pub fn root_shape(self) -> RootShape {
        match self {
            EdgeItem::Positive(i, j) => RootShape::Difference(i, j),
            EdgeItem::Negative(i, j) => RootShape::Sum(i, j),
            EdgeItem::Halfedge(i) => RootShape::Short(i),
            EdgeItem::NegativeLoop(i) => RootShape::Long(i),
        }
    }

    fn max_vertex(self) -> usize {
        match self {
            EdgeItem::Positive(_, j) | EdgeItem::Negative(_, j) => j,
            EdgeItem::Halfedge(i) | EdgeItem::NegativeLoop(i) => i,
        }
    }
}

impl fmt::Display for EdgeItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeItem::Positive(i, j) => write!(f, "+{}{}", i + 1, j + 1),
            EdgeItem::Negative(i, j) => write!(f, "-{}{}", i + 1, j + 1),
            EdgeItem::Halfedge(i) => write!(f, "h{}", i + 1),
            EdgeItem::NegativeLoop(i) => write!(f, "l{}", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    items: BTreeSet<EdgeItem>,
}

/// Kind of a pseudoforest component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Tree,
    HalfedgeTree,
    LoopTree,
    Pseudotree,
}

/// Raw structure of one connected component, before classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub halfedges: usize,
    pub loops: usize,
    /// Number of independent cycles among ordinary edges.
    pub cycle_rank: usize,
    /// Balance of the cycle when `cycle_rank == 1`.
    pub cycle_balanced: Option<bool>,
}

impl Component {
    /// The pseudoforest kind, or `None` if the component has two or more of
    /// {cycles, halfedges, loops} or a balanced cycle.
    pub fn kind(&self) -> Option<ComponentKind> {
        match (self.cycle_rank, self.halfedges, self.loops) {
            (0, 0, 0) => Some(ComponentKind::Tree),
            (0, 1, 0) => Some(ComponentKind::HalfedgeTree),
            (0, 0, 1) => Some(ComponentKind::LoopTree),
            (1, 0, 0) if self.cycle_balanced == Some(false) => Some(ComponentKind::Pseudotree),
            _ => None,
        }
    }
}

/// Component statistics of a signed pseudoforest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentStats {
    pub edge_count: usize,
    pub tc: usize,
    pub hc: usize,
    pub lc: usize,
    pub pc: usize,
    pub all_trees_even: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Pseudoforest(ComponentStats),
    NotPseudoforest,
}

impl Classification {
    pub fn stats(self) -> Option<ComponentStats> {
        match self {
            Classification::Pseudoforest(s) => Some(s),
            Classification::NotPseudoforest => None,
        }
    }
}

impl SignedGraph {
    pub fn new(n: usize, items: impl IntoIterator<Item = EdgeItem>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for item in items {
            let ok = match item {
                EdgeItem::Positive(i, j) | EdgeItem::Negative(i, j) => i < j,
                _ => true,
            };
            if !ok || item.max_vertex() >= n {
                return Err(Error::InvalidArgument(format!("invalid item {item} on {n} vertices")));
            }
            if !set.insert(item) {
                return Err(Error::InvalidArgument(format!("duplicate item {item}")));
            }
        }
        Ok(SignedGraph { n, items: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> impl Iterator<Item = EdgeItem> + '_ {
        self.items.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Connected components, each with its cycle structure. Cycle balance is
    /// read off vertex potentials of a BFS spanning tree: a non-tree edge
    /// `uw` of sign `σ` closes a balanced cycle iff `s(u) s(w) σ = +1`.
    pub fn components(&self) -> Vec<Component> {
        let mut adj: Vec<Vec<(usize, usize, i8)>> = vec![Vec::new(); self.n];
        let mut halfedges = vec![0usize; self.n];
        let mut loops = vec![0usize; self.n];
        let mut edge_count = 0;
        for item in &self.items {
            match *item {
                EdgeItem::Positive(i, j) | EdgeItem::Negative(i, j) => {
                    let sign = if matches!(item, EdgeItem::Positive(..)) { 1 } else { -1 };
                    adj[i].push((j, edge_count, sign));
                    adj[j].push((i, edge_count, sign));
                    edge_count += 1;
                }
                EdgeItem::Halfedge(i) => halfedges[i] += 1,
                EdgeItem::NegativeLoop(i) => loops[i] += 1,
            }
        }

        let mut potential: Vec<Option<i8>> = vec![None; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if potential[root].is_some() {
                continue;
            }
            potential[root] = Some(1);
            let mut queue = VecDeque::from([root]);
            let mut vertices = Vec::new();
            let mut tree_edges = BTreeSet::new();
            let mut seen_edges = BTreeSet::new();
            let mut closing_sign = None;
            while let Some(u) = queue.pop_front() {
                vertices.push(u);
                let su = potential[u].unwrap();
                for &(w, id, sign) in &adj[u] {
                    match potential[w] {
                        None => {
                            potential[w] = Some(su * sign);
                            tree_edges.insert(id);
                            seen_edges.insert(id);
                            queue.push_back(w);
                        }
                        Some(sw) => {
                            if seen_edges.insert(id) && !tree_edges.contains(&id) {
                                closing_sign = Some(su * sw * sign);
                            }
                        }
                    }
                }
            }
            vertices.sort_unstable();
            let edges = seen_edges.len();
            let cycle_rank = edges + 1 - vertices.len();
            out.push(Component {
                halfedges: vertices.iter().map(|&v| halfedges[v]).sum(),
                loops: vertices.iter().map(|&v| loops[v]).sum(),
                vertices,
                edges,
                cycle_rank,
                cycle_balanced: (cycle_rank == 1).then(|| closing_sign == Some(1)),
            });
        }
        out
    }

    pub fn classify(&self) -> Classification {
        let mut stats = ComponentStats { edge_count: self.items.len(), all_trees_even: true, ..Default::default() };
        for c in self.components() {
            match c.kind() {
                Some(ComponentKind::Tree) => {
                    stats.tc += 1;
                    if c.vertices.len() % 2 == 1 {
                        stats.all_trees_even = false;
                    }
                }
                Some(ComponentKind::HalfedgeTree) => stats.hc += 1,
                Some(ComponentKind::LoopTree) => stats.lc += 1,
                Some(ComponentKind::Pseudotree) => stats.pc += 1,
                None => return Classification::NotPseudoforest,
            }
        }
        Classification::Pseudoforest(stats)
    }

    /// True iff every tree component has an even number of vertices.
    pub fn all_tree_components_even(&self) -> Result<bool> {
        self.classify().stats().map(|s| s.all_trees_even).ok_or(Error::NotPseudoforest)
    }

    /// Switching at vertex `m`: negate `e_m` in every root. Edges at `m`
    /// change sign; halfedges and loops are unchanged up to the sign of the
    /// root vector, which does not affect spans.
    pub fn switch_vertex(&self, m: usize) -> SignedGraph {
        let items = self.items.iter().map(|&item| match item {
            EdgeItem::Positive(i, j) if i == m || j == m => EdgeItem::Negative(i, j),
            EdgeItem::Negative(i, j) if i == m || j == m => EdgeItem::Positive(i, j),
            other => other,
        });
        SignedGraph { n: self.n, items: items.collect() }
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{{", self.n)?;
        for (k, item) in self.items.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{item}")?;
        }
        write!(f, "}}")
    }
}

/// Encode a set of positive roots in `Z^n` as a signed graph on `n` vertices.
pub fn graph_from_roots(n: usize, roots: &[IntVector]) -> Result<SignedGraph> {
    let mut items = Vec::with_capacity(roots.len());
    for r in roots {
        if r.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: r.dim() });
        }
        items.push(EdgeItem::from_shape(RootShape::recognise(r)?));
    }
    SignedGraph::new(n, items)
}

/// Inverse of [`graph_from_roots`]; roots come out in the canonical root order.
pub fn roots_from_graph(g: &SignedGraph) -> Vec<IntVector> {
    g.items().map(|item| item.root_shape().to_vector(g.n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeItem::*;

    fn g(n: usize, items: &[EdgeItem]) -> SignedGraph {
        SignedGraph::new(n, items.iter().copied()).unwrap()
    }

    #[test]
    fn dictionary() {
        let e12 = IntVector::from_i64(&[1, -1, 0]);
        assert_eq!(graph_from_roots(3, &[e12]).unwrap(), g(3, &[Positive(0, 1)]));
        let two_e3 = IntVector::from_i64(&[0, 0, 2]);
        assert_eq!(graph_from_roots(3, &[two_e3]).unwrap(), g(3, &[NegativeLoop(2)]));
        let e2 = IntVector::from_i64(&[0, 1, 0]);
        assert_eq!(graph_from_roots(3, &[e2]).unwrap(), g(3, &[Halfedge(1)]));
        assert!(graph_from_roots(2, &[IntVector::from_i64(&[1, 2])]).is_err());
        let dup = IntVector::from_i64(&[1, 1]);
        assert!(graph_from_roots(2, &[dup.clone(), dup]).is_err());
    }

    #[test]
    fn classify_examples() {
        let s = g(2, &[Positive(0, 1)]).classify().stats().unwrap();
        assert_eq!((s.tc, s.hc, s.lc, s.pc), (1, 0, 0, 0));

        let s = g(2, &[Positive(0, 1), Negative(0, 1)]).classify().stats().unwrap();
        assert_eq!((s.tc, s.hc, s.lc, s.pc), (0, 0, 0, 1));

        let triangle = g(3, &[Positive(0, 1), Positive(1, 2), Positive(0, 2)]);
        assert_eq!(triangle.classify(), Classification::NotPseudoforest);

        // one negative edge makes the triangle unbalanced
        let s = g(3, &[Positive(0, 1), Positive(1, 2), Negative(0, 2)]).classify().stats().unwrap();
        assert_eq!(s.pc, 1);
        // two negative edges: balanced again
        let t = g(3, &[Negative(0, 1), Positive(1, 2), Negative(0, 2)]);
        assert_eq!(t.classify(), Classification::NotPseudoforest);
    }

    #[test]
    fn classify_rejects_double_decorations() {
        assert_eq!(g(1, &[Halfedge(0), NegativeLoop(0)]).classify(), Classification::NotPseudoforest);
        assert_eq!(g(2, &[Halfedge(0), Halfedge(1), Positive(0, 1)]).classify(), Classification::NotPseudoforest);
        assert_eq!(
            g(2, &[Halfedge(0), Positive(0, 1), Negative(0, 1)]).classify(),
            Classification::NotPseudoforest
        );
        let s = g(3, &[NegativeLoop(2), Positive(0, 1)]).classify().stats().unwrap();
        assert_eq!((s.tc, s.lc, s.edge_count), (1, 1, 2));
    }

    #[test]
    fn tree_parity() {
        assert!(g(2, &[Positive(0, 1)]).all_tree_components_even().unwrap());
        assert!(!g(3, &[Positive(0, 1)]).all_tree_components_even().unwrap());
        assert!(g(3, &[Halfedge(0), Positive(0, 1), Positive(0, 2)]).all_tree_components_even().unwrap());
        let triangle = g(3, &[Positive(0, 1), Positive(1, 2), Positive(0, 2)]);
        assert_eq!(triangle.all_tree_components_even(), Err(Error::NotPseudoforest));
    }

    #[test]
    fn isolated_vertices_are_trees() {
        let s = g(3, &[]).classify().stats().unwrap();
        assert_eq!(s.tc, 3);
        assert!(!s.all_trees_even);
    }

    #[test]
    fn switching_flips_incident_edges() {
        let h = g(3, &[Positive(0, 1), Negative(1, 2), Halfedge(1)]);
        let s = h.switch_vertex(1);
        assert_eq!(s, g(3, &[Negative(0, 1), Positive(1, 2), Halfedge(1)]));
        assert_eq!(s.switch_vertex(1), h);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(g(2, &[Positive(0, 1), Halfedge(1)]).to_string(), "[2]{+12 h2}");
    }
}
