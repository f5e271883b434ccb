//! Immutable simple undirected graphs and the structural queries the
//! perfect-forest constructions are built from.
//!
//! Vertices are dense ids `0..n`. Edges are stored normalized (`a < b`) in
//! lexicographic order, and every neighbor list is sorted, so that any
//! "smallest" choice made downstream is well defined.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge, stored with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        Edge { a: u.min(v), b: u.max(v) }
    }

    pub fn a(self) -> VertexId {
        self.a
    }

    pub fn b(self) -> VertexId {
        self.b
    }

    pub fn is_loop(self) -> bool {
        self.a == self.b
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint opposite `v`. `v` must be an endpoint.
    pub fn other(self, v: VertexId) -> VertexId {
        debug_assert!(self.contains(v));
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

impl From<(VertexId, VertexId)> for Edge {
    fn from((u, v): (VertexId, VertexId)) -> Self {
        Edge::new(u, v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I, E>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut edges = Vec::new();
        for pair in pairs {
            let e: Edge = pair.into();
            if e.b >= n {
                return Err(Error::VertexOutOfRange { vertex: e.b, n });
            }
            if e.is_loop() {
                return Err(Error::Loop(e.a));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    /// `edges` must already be normalized, sorted, deduplicated and in range.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        !e.is_loop() && self.has_edge(e.a, e.b)
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || reach_count(self, 0) == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

fn reach_count(g: &Graph, start: VertexId) -> usize {
    let mut seen = vec![false; g.n];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count
}

/// Maps the vertices of a relabeled subgraph back to the ids of the graph it
/// was taken from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remap {
    to_parent: Vec<VertexId>,
}

impl Remap {
    pub fn identity(n: usize) -> Self {
        Remap { to_parent: (0..n).collect() }
    }

    pub fn vertex(&self, v: VertexId) -> VertexId {
        self.to_parent[v]
    }

    pub fn edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_parent[e.a], self.to_parent[e.b])
    }

    /// Composes `self` (child -> this level) with `outer` (this level -> root).
    pub fn then(&self, outer: &Remap) -> Remap {
        Remap { to_parent: self.to_parent.iter().map(|&v| outer.vertex(v)).collect() }
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.to_parent
    }
}

/// The subgraph induced by `vertices`, relabeled to `0..|vertices|` in
/// increasing id order.
pub fn induced_subgraph(g: &Graph, vertices: &[VertexId]) -> Result<(Graph, Remap)> {
    if vertices.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut to_parent = vertices.to_vec();
    to_parent.sort_unstable();
    to_parent.dedup();
    let mut local = vec![usize::MAX; g.n];
    for (i, &v) in to_parent.iter().enumerate() {
        g.check_vertex(v)?;
        local[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in to_parent.iter().enumerate() {
        for &y in g.neighbors(v) {
            let j = local[y];
            if j != usize::MAX && i < j {
                edges.push(Edge { a: i, b: j });
            }
        }
    }
    // Vertices are visited in increasing order and neighbor lists are sorted,
    // so `edges` is already lexicographic.
    debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
    let sub = Graph::from_sorted_unchecked(to_parent.len(), edges);
    Ok((sub, Remap { to_parent }))
}

/// Connected components, each sorted, listed by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    for start in 0..g.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let x = comp[head];
            head += 1;
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A spanning tree of a host graph, rooted, with a parent map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree<'g> {
    host: &'g Graph,
    edges: Vec<Edge>,
    root: VertexId,
    parent: Vec<Option<VertexId>>,
}

impl<'g> SpanningTree<'g> {
    /// Validates `edges` as a spanning tree of `host` and roots it at `root`.
    pub fn from_edges(host: &'g Graph, mut edges: Vec<Edge>, root: VertexId) -> Result<Self> {
        host.check_vertex(root)?;
        edges.sort_unstable();
        edges.dedup();
        if let Some(e) = edges.iter().find(|e| !host.contains_edge(**e)) {
            return Err(Error::Precondition(format!("tree edge {e} is not a host edge")));
        }
        if edges.len() + 1 != host.n {
            return Err(Error::NotATree);
        }
        let tree = Graph::from_sorted_unchecked(host.n, edges);
        let parent = bfs_parents(&tree, root);
        if parent.iter().enumerate().any(|(v, p)| v != root && p.is_none()) {
            return Err(Error::NotATree);
        }
        Ok(SpanningTree { host, edges: tree.edges, root, parent })
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.host.n];
        for e in &self.edges {
            deg[e.a] += 1;
            deg[e.b] += 1;
        }
        deg
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// The tree as a standalone graph on the host's vertex set.
    pub fn to_graph(&self) -> Graph {
        Graph::from_sorted_unchecked(self.host.n, self.edges.clone())
    }

    pub fn branches(&self, w: VertexId) -> Result<Vec<Vec<VertexId>>> {
        branches_of(&self.to_graph(), w)
    }

    pub fn path(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        tree_path(&self.to_graph(), u, v)
    }
}

fn bfs_parents(g: &Graph, root: VertexId) -> Vec<Option<VertexId>> {
    let mut parent = vec![None; g.n];
    let mut seen = vec![false; g.n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    parent
}

/// Breadth-first spanning tree rooted at 0, neighbors taken in increasing id
/// order.
pub fn spanning_tree(g: &Graph) -> Result<SpanningTree<'_>> {
    if g.n == 0 {
        return Err(Error::Precondition("spanning tree of the empty graph".into()));
    }
    let parent = bfs_parents(g, 0);
    let mut edges = Vec::with_capacity(g.n - 1);
    for (v, p) in parent.iter().enumerate().skip(1) {
        match p {
            Some(p) => edges.push(Edge::new(*p, v)),
            None => return Err(Error::Disconnected),
        }
    }
    edges.sort_unstable();
    Ok(SpanningTree { host: g, edges, root: 0, parent })
}

/// Components of `tree - w`, listed by smallest member.
pub fn branches_of(tree: &Graph, w: VertexId) -> Result<Vec<Vec<VertexId>>> {
    tree.check_vertex(w)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let mut seen = vec![false; tree.n];
    seen[w] = true;
    let mut branches = Vec::with_capacity(tree.degree(w));
    for &start in tree.neighbors(w) {
        seen[start] = true;
        let mut branch = vec![start];
        let mut head = 0;
        while head < branch.len() {
            let x = branch[head];
            head += 1;
            for &y in tree.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    branch.push(y);
                }
            }
        }
        branch.sort_unstable();
        branches.push(branch);
    }
    branches.sort_unstable_by_key(|b| b[0]);
    Ok(branches)
}

/// The unique path `u = x0, ..., xk = v` in a tree.
pub fn tree_path(tree: &Graph, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
    tree.check_vertex(u)?;
    tree.check_vertex(v)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let parent = bfs_parents(tree, v);
    let mut path = vec![u];
    let mut x = u;
    while let Some(p) = parent[x] {
        path.push(p);
        x = p;
    }
    debug_assert_eq!(x, v);
    Ok(path)
}

/// A partition of the vertex set into two parts of even order, each inducing
/// a connected subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub part_a: Vec<VertexId>,
    pub part_b: Vec<VertexId>,
}

impl Split {
    /// Checks every structural invariant of the split against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut side = vec![0u8; g.n];
        for (mark, part) in [(1u8, &self.part_a), (2u8, &self.part_b)] {
            if part.len() < 2 || part.len() % 2 != 0 {
                return Err(Error::Precondition(format!("part of size {} is not even and >= 2", part.len())));
            }
            for &v in part.iter() {
                g.check_vertex(v)?;
                if side[v] != 0 {
                    return Err(Error::Precondition(format!("vertex {v} appears twice")));
                }
                side[v] = mark;
            }
            let (sub, _) = induced_subgraph(g, part)?;
            if !sub.is_connected() {
                return Err(Error::Precondition("part does not induce a connected subgraph".into()));
            }
        }
        if let Some(v) = side.iter().position(|&s| s == 0) {
            return Err(Error::Precondition(format!("vertex {v} is in neither part")));
        }
        Ok(())
    }
}

/// Union-find with path halving; used to track forest components.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSet { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already joined.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut x, mut y) = (self.find(x), self.find(y));
        if x == y {
            return false;
        }
        if self.size[x] < self.size[y] {
            std::mem::swap(&mut x, &mut y);
        }
        self.parent[y] = x;
        self.size[x] += self.size[y];
        true
    }
}
