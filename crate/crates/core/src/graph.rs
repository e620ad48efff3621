//! Simple undirected graphs and the graph operations used by the extremal
//! constructions: disjoint union, join, and the bipartite join.
//!
//! Every operation returns a fresh [`Graph`]. Vertex labels are deterministic:
//! the first operand keeps its indices and later operands are shifted past it.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Immutable undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are sorted and duplicate-free, adjacency is symmetric and
/// there are no self-loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge { u: a, v: b });
            }
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Internal constructor for edge sets already known to be simple.
    fn from_simple_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges).expect("construction produced a non-simple edge set")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n > 0 && self.m == n * (n - 1) / 2
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        const UNSEEN: usize = usize::MAX;
        let mut label = vec![UNSEEN; self.n()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if label[s] != UNSEEN {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if label[v] == UNSEEN {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let (label, count) = self.components();
        let mut sets = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            sets[c].push(v);
        }
        sets
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().1 == 1
    }

    /// Proper 2-colouring by breadth-first search, if one exists. In each
    /// component the smallest vertex is placed in `X`.
    pub fn bipartition(&self) -> Option<SidePartition> {
        let mut color: Vec<Option<Side>> = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(Side::X);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(cu.other());
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let labels: Vec<Side> = color.into_iter().map(Option::unwrap).collect();
        Some(SidePartition::from_labels(labels))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced on `keep` (sorted, distinct), relabelled `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = keep.iter().enumerate().flat_map(|(i, &u)| {
            let index = &index;
            self.adj[u]
                .iter()
                .filter_map(move |&v| (index[v] != usize::MAX && index[v] > i).then(|| (i, index[v])))
        });
        Graph::from_simple_edges(keep.len(), edges.collect::<Vec<_>>())
    }

    /// Copy with `add` inserted and `remove` deleted. Adding an existing edge
    /// or removing a missing one is an error.
    pub fn with_edge_changes(&self, add: &[(usize, usize)], remove: &[(usize, usize)]) -> Result<Graph> {
        let n = self.n();
        for &(u, v) in remove {
            if u >= n || v >= n || !self.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!("edge {u}-{v} is not present")));
            }
        }
        let removed = |u: usize, v: usize| remove.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
        let kept = self.edges().filter(|&(u, v)| !removed(u, v));
        Graph::from_edges(n, kept.chain(add.iter().copied()).collect::<Vec<_>>())
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_simple_edges(n, edges.filter(|&(u, v)| !self.has_edge(u, v)).collect::<Vec<_>>())
    }

    /// Dense adjacency matrix in row-major order.
    pub fn adjacency_dense(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs at least one vertex".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_simple_edges(n, edges.collect::<Vec<_>>()))
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Ok(Graph::from_simple_edges(n, (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()))
}

/// Path `P_n`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    Ok(Graph::from_simple_edges(n, (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_simple_edges(10, edges)
}

/// Which side of a bipartition a vertex lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Labelling of every vertex of a graph with side `X` or `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SidePartition {
    labels: Vec<Side>,
}

impl SidePartition {
    pub fn from_labels(labels: Vec<Side>) -> Self {
        SidePartition { labels }
    }

    /// Partition of `0..n` from explicit side sets, which must be disjoint and
    /// cover every vertex.
    pub fn new(n: usize, x: &[usize], y: &[usize]) -> Result<Self> {
        let mut labels: Vec<Option<Side>> = vec![None; n];
        for (side, set) in [(Side::X, x), (Side::Y, y)] {
            for &v in set {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if labels[v].replace(side).is_some() {
                    return Err(Error::InvalidSides(format!("vertex {v} listed twice")));
                }
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| Error::InvalidSides(format!("vertex {v} has no side"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SidePartition { labels })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn side_of(&self, v: usize) -> Side {
        self.labels[v]
    }

    pub fn side(&self, side: Side) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.labels[v] == side).collect()
    }

    pub fn x(&self) -> Vec<usize> {
        self.side(Side::X)
    }

    pub fn y(&self) -> Vec<usize> {
        self.side(Side::Y)
    }

    pub fn is_balanced(&self) -> bool {
        let x = self.labels.iter().filter(|&&s| s == Side::X).count();
        2 * x == self.n()
    }

    /// Same partition with the side names exchanged.
    pub fn swapped(&self) -> Self {
        SidePartition {
            labels: self.labels.iter().map(|s| s.other()).collect(),
        }
    }

    /// Checks that the partition labels `g` and every edge crosses sides.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::InvalidSides(format!(
                "partition covers {} vertices but the graph has {}",
                self.n(),
                g.n()
            )));
        }
        match g.edges().find(|&(u, v)| self.labels[u] == self.labels[v]) {
            Some((u, v)) => Err(Error::SideViolation { u, v }),
            None => Ok(()),
        }
    }
}

/// A graph together with its declared bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartite {
    pub graph: Graph,
    pub sides: SidePartition,
}

impl Bipartite {
    pub fn new(graph: Graph, sides: SidePartition) -> Result<Self> {
        sides.validate(&graph)?;
        Ok(Bipartite { graph, sides })
    }
}

/// `K_{p,q}` with `X = 0..p` and `Y = p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Bipartite> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter(format!("K_{{{p},{q}}} needs both sides nonempty")));
    }
    let edges = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)));
    let graph = Graph::from_simple_edges(p + q, edges.collect::<Vec<_>>());
    let sides = sides_by_blocks(&[(Side::X, p), (Side::Y, q)]);
    Ok(Bipartite { graph, sides })
}

/// `O_{a,b}`: `a + b` isolated vertices, the first `a` on side `X`.
pub fn empty_bipartite(a: usize, b: usize) -> Result<Bipartite> {
    if a + b == 0 {
        return Err(Error::InvalidParameter("O_{0,0} has no vertices".into()));
    }
    Ok(Bipartite {
        graph: Graph::empty(a + b),
        sides: sides_by_blocks(&[(Side::X, a), (Side::Y, b)]),
    })
}

fn sides_by_blocks(blocks: &[(Side, usize)]) -> SidePartition {
    SidePartition::from_labels(blocks.iter().flat_map(|&(s, k)| std::iter::repeat(s).take(k)).collect())
}

/// Disjoint union of `parts`, relabelled consecutively in the given order.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("disjoint union of no graphs".into()));
    }
    let n = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::with_capacity(parts.iter().map(Graph::m).sum());
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Ok(Graph::from_simple_edges(n, edges))
}

/// Join: disjoint union plus every edge between the two vertex sets.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    edges.extend((0..n1).flat_map(|u| (0..n2).map(move |v| (u, v + n1))));
    Graph::from_simple_edges(n1 + n2, edges)
}

/// Bipartite join: disjoint union plus all edges `X1-Y2` and `X2-Y1`.
pub fn bipartite_join(b1: &Bipartite, b2: &Bipartite) -> Result<Bipartite> {
    b1.sides.validate(&b1.graph)?;
    b2.sides.validate(&b2.graph)?;
    let n1 = b1.graph.n();
    let (x1, y1) = (b1.sides.x(), b1.sides.y());
    let (x2, y2) = (b2.sides.x(), b2.sides.y());
    let mut edges: Vec<(usize, usize)> = b1.graph.edges().collect();
    edges.extend(b2.graph.edges().map(|(u, v)| (u + n1, v + n1)));
    for &u in &x1 {
        edges.extend(y2.iter().map(|&v| (u, v + n1)));
    }
    for &u in &y1 {
        edges.extend(x2.iter().map(|&v| (u, v + n1)));
    }
    let graph = Graph::from_simple_edges(n1 + b2.graph.n(), edges);
    let mut labels: Vec<Side> = (0..n1).map(|v| b1.sides.side_of(v)).collect();
    labels.extend((0..b2.graph.n()).map(|v| b2.sides.side_of(v)));
    Ok(Bipartite {
        graph,
        sides: SidePartition::from_labels(labels),
    })
}

/// `K_{p,q} ∇₁ O_{a,b}`, the shape of every balanced bipartite extremal graph.
pub fn complete_join_empty(p: usize, q: usize, a: usize, b: usize) -> Result<Bipartite> {
    bipartite_join(&complete_bipartite(p, q)?, &empty_bipartite(a, b)?)
}
