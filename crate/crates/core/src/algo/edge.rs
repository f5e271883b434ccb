use std::collections::HashSet;

use super::{check_input, CyclePath, Forest};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, tree_path, DisjointSet, Edge, Graph, Remap, VertexId};

/// Outcome of [`select_edge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeChoice {
    Edge(Edge),
    /// Every edge is pendant: the graph is a star (or a single edge).
    Star,
}

/// Edge-selection policy for the edge induction.
///
/// Graphs with a cycle give their smallest non-bridge edge. Trees give their
/// smallest edge whose endpoints both have degree at least two, so that both
/// sides of the cut keep at least one edge. Stars have no such edge.
pub fn select_edge(g: &Graph) -> Result<EdgeChoice> {
    if g.m() == 0 {
        return Err(Error::Precondition("edge selection on a graph without edges".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() >= g.n() {
        let mut peeler = Peeler::new(g);
        let idx = peeler.next_non_bridge().expect("a graph with a cycle has a non-bridge edge");
        return Ok(EdgeChoice::Edge(g.edges()[idx]));
    }
    Ok(select_tree_edge(g))
}

fn select_tree_edge(tree: &Graph) -> EdgeChoice {
    tree.edges()
        .iter()
        .find(|e| tree.degree(e.a()) >= 2 && tree.degree(e.b()) >= 2)
        .map_or(EdgeChoice::Star, |&e| EdgeChoice::Edge(e))
}

/// The tree path in `component` between the endpoints of `closing`.
pub fn fundamental_cycle(component: &[Edge], closing: Edge) -> Result<CyclePath> {
    let (local, vertices) = local_tree(component)?;
    let find = |v: VertexId| {
        vertices
            .binary_search(&v)
            .map_err(|_| Error::Precondition(format!("vertex {v} of {closing} is not in the component")))
    };
    let (u, v) = (find(closing.a())?, find(closing.b())?);
    let path = tree_path(&local, u, v)?;
    Ok(CyclePath { vertices: path.into_iter().map(|x| vertices[x]).collect(), closing })
}

/// Relabels a tree given by its edges to `0..k`. Returns the local tree and
/// the sorted original vertex ids.
fn local_tree(component: &[Edge]) -> Result<(Graph, Vec<VertexId>)> {
    let mut vertices: Vec<VertexId> = component.iter().flat_map(|e| [e.a(), e.b()]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let index = |v: VertexId| vertices.binary_search(&v).expect("endpoint is a vertex");
    let local = Graph::from_edges(
        vertices.len(),
        component.iter().map(|e| (index(e.a()), index(e.b()))),
    )?;
    if !local.is_tree() {
        return Err(Error::NotATree);
    }
    Ok((local, vertices))
}

/// Checks everything about `(component, closing)` that does not involve the
/// host, and returns the fundamental cycle.
fn fix_preconditions(component: &[Edge], closing: Edge) -> Result<CyclePath> {
    if component.is_empty() {
        return Err(Error::Precondition("component has no edges".into()));
    }
    if closing.is_loop() {
        return Err(Error::Loop(closing.a()));
    }
    let (local, vertices) = local_tree(component)?;
    if let Some(x) = (0..local.n()).find(|&x| local.degree(x) % 2 == 0) {
        return Err(Error::Precondition(format!(
            "vertex {} has even degree {} in the component",
            vertices[x],
            local.degree(x)
        )));
    }
    if component.contains(&closing) {
        return Err(Error::Precondition(format!("closing edge {closing} is already a component edge")));
    }
    fundamental_cycle(component, closing)
}

fn apply_fix(component: &[Edge], cycle: &CyclePath) -> Vec<Edge> {
    let removed: HashSet<Edge> = cycle.path_edges().collect();
    let mut out: Vec<Edge> = component.iter().copied().filter(|e| !removed.contains(e)).collect();
    out.push(cycle.closing);
    out.sort_unstable();
    out
}

/// Repairs a perfect component after its closing edge is put back.
///
/// `component` is a tree with all degrees odd, `closing` joins two of its
/// vertices, and `component + closing` is exactly what `host` induces on the
/// component's vertices. Removing the tree path between the endpoints drops
/// inner path vertices by two and the endpoints by one; adding `closing`
/// back restores the endpoints' parity. The result is acyclic, all-odd, and
/// each of its trees is induced in `host`.
pub fn reattach_cycle_fix(component: &[Edge], closing: Edge, host: &Graph) -> Result<Vec<Edge>> {
    let cycle = fix_preconditions(component, closing)?;
    let mut vertices: Vec<VertexId> = component.iter().flat_map(|e| [e.a(), e.b()]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    if let Some(&v) = vertices.iter().find(|&&v| v >= host.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: host.n() });
    }
    let (induced, remap) = induced_subgraph(host, &vertices)?;
    let mut expected: Vec<Edge> = component.to_vec();
    expected.push(closing);
    expected.sort_unstable();
    let actual: Vec<Edge> = induced.edges().iter().map(|&e| remap.edge(e)).collect();
    if actual != expected {
        return Err(Error::Precondition(format!(
            "host induces {} edges on the component, expected exactly the component plus {closing}",
            actual.len()
        )));
    }
    Ok(apply_fix(component, &cycle))
}

/// Perfect forest by induction on the number of edges.
///
/// Non-bridge edges are peeled off in selection order until a spanning tree
/// remains. The tree is solved by cutting at non-pendant edges: an even/even
/// cut recurses on both sides, an odd/odd cut recurses on each side extended
/// by the cut edge's far endpoint. Stars are the base case. The peeled edges
/// are then put back in reverse order; an edge inside one forest component
/// triggers [`reattach_cycle_fix`], any other edge is simply left out.
pub fn perfect_forest_edge(g: &Graph) -> Result<Forest<'_>> {
    check_input(g)?;
    let mut peeler = Peeler::new(g);
    let mut peeled = Vec::new();
    while let Some(idx) = peeler.next_non_bridge() {
        peeler.remove(idx);
        peeled.push(idx);
    }
    let tree_edges: Vec<Edge> = (0..g.m()).filter(|&i| peeler.alive[i]).map(|i| g.edges()[i]).collect();
    let mut forest = solve_tree(Graph::from_sorted_unchecked(g.n(), tree_edges))?;

    while let Some(idx) = peeled.pop() {
        let closing = g.edges()[idx];
        peeler.restore(idx);
        let mut dsu = DisjointSet::new(g.n());
        for e in &forest {
            dsu.union(e.a(), e.b());
        }
        let root = dsu.find(closing.a());
        if root != dsu.find(closing.b()) {
            continue;
        }
        let (component, rest): (Vec<Edge>, Vec<Edge>) =
            forest.iter().partition(|e| dsu.find(e.a()) == root);
        let cycle = fix_preconditions(&component, closing)?;
        peeler.check_induced(&component, closing)?;
        forest = rest;
        forest.extend(apply_fix(&component, &cycle));
        forest.sort_unstable();
    }
    Forest::new(g, forest)
}

/// Tree phase of the edge induction. Returns edges in `tree`'s ids.
fn solve_tree(tree: Graph) -> Result<Vec<Edge>> {
    let mut out = Vec::with_capacity(tree.n());
    let n = tree.n();
    let mut stack = vec![(tree, Remap::identity(n))];
    while let Some((t, remap)) = stack.pop() {
        let cut = match select_tree_edge(&t) {
            EdgeChoice::Star => {
                debug_assert!(t.n() % 2 == 0);
                out.extend(t.edges().iter().map(|&e| remap.edge(e)));
                continue;
            }
            EdgeChoice::Edge(e) => e,
        };
        let (u, v) = (cut.a(), cut.b());
        let mut side = vec![false; t.n()];
        side[u] = true;
        let mut queue = vec![u];
        while let Some(x) = queue.pop() {
            for &y in t.neighbors(x) {
                if !side[y] && !(x == u && y == v) {
                    side[y] = true;
                    queue.push(y);
                }
            }
        }
        let mut part_u: Vec<VertexId> = (0..t.n()).filter(|&x| side[x]).collect();
        let mut part_v: Vec<VertexId> = (0..t.n()).filter(|&x| !side[x]).collect();
        if part_u.len() % 2 == 1 {
            // Odd/odd: each side keeps the cut edge and the far endpoint.
            part_u.push(v);
            part_v.push(u);
        }
        for part in [part_u, part_v] {
            let (child, child_remap) = induced_subgraph(&t, &part)?;
            stack.push((child, child_remap.then(&remap)));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The host graph minus a shrinking set of peeled edges.
///
/// Edges are only ever removed during peeling, so an edge found to be a bridge
/// stays a bridge; `cursor` therefore never moves backwards.
struct Peeler<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    alive_count: usize,
    incident: Vec<Vec<(VertexId, usize)>>,
    cursor: usize,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<VertexId>,
}

impl<'g> Peeler<'g> {
    fn new(g: &'g Graph) -> Self {
        let mut incident = vec![Vec::new(); g.n()];
        for (i, e) in g.edges().iter().enumerate() {
            incident[e.a()].push((e.b(), i));
            incident[e.b()].push((e.a(), i));
        }
        Peeler {
            g,
            alive: vec![true; g.m()],
            alive_count: g.m(),
            incident,
            cursor: 0,
            stamp: vec![0; g.n()],
            epoch: 0,
            queue: Vec::new(),
        }
    }

    /// Index of the smallest live non-bridge edge, or `None` once the live
    /// edges form a spanning tree.
    fn next_non_bridge(&mut self) -> Option<usize> {
        if self.alive_count + 1 <= self.g.n() {
            return None;
        }
        while self.cursor < self.g.m() {
            let idx = self.cursor;
            if self.alive[idx] && !self.is_bridge(idx) {
                return Some(idx);
            }
            self.cursor += 1;
        }
        unreachable!("connected graph with m >= n has a non-bridge edge")
    }

    fn remove(&mut self, idx: usize) {
        debug_assert!(self.alive[idx]);
        self.alive[idx] = false;
        self.alive_count -= 1;
    }

    /// Only used while unwinding, after peeling is finished.
    fn restore(&mut self, idx: usize) {
        debug_assert!(!self.alive[idx]);
        self.alive[idx] = true;
        self.alive_count += 1;
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch += 1;
        if self.epoch == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// Whether live edge `idx` is a bridge of the live graph: search from one
    /// endpoint to the other without using it.
    fn is_bridge(&mut self, idx: usize) -> bool {
        let e = self.g.edges()[idx];
        let (source, target) = (e.a(), e.b());
        let epoch = self.next_epoch();
        self.stamp[source] = epoch;
        self.queue.clear();
        self.queue.push(source);
        while let Some(x) = self.queue.pop() {
            for &(y, j) in &self.incident[x] {
                if j == idx || !self.alive[j] || self.stamp[y] == epoch {
                    continue;
                }
                if y == target {
                    return false;
                }
                self.stamp[y] = epoch;
                self.queue.push(y);
            }
        }
        true
    }

    /// The live graph must induce exactly `component + closing` on the
    /// component's vertices.
    fn check_induced(&mut self, component: &[Edge], closing: Edge) -> Result<()> {
        let mut vertices: Vec<VertexId> = component.iter().flat_map(|e| [e.a(), e.b()]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let epoch = self.next_epoch();
        for &v in &vertices {
            self.stamp[v] = epoch;
        }
        let inside: usize = vertices
            .iter()
            .map(|&x| {
                self.incident[x]
                    .iter()
                    .filter(|&&(y, j)| self.alive[j] && y > x && self.stamp[y] == epoch)
                    .count()
            })
            .sum();
        if inside != component.len() + 1 {
            return Err(Error::Precondition(format!(
                "host induces {inside} edges on the component, expected {} including {closing}",
                component.len() + 1
            )));
        }
        Ok(())
    }
}
