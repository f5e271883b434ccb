use crate::error::{Error, Result};
use crate::graph::{spanning_tree, Graph, SpanningTree, Split, VertexId};

/// A spanning tree with at least two vertices of even tree-degree.
///
/// Starts from the breadth-first tree. If every tree degree is odd, the
/// smallest non-tree edge `(u, v)` is swapped in for the first edge of the
/// tree path from `u` to `v`; that makes `v` and `u`'s old path neighbor even.
pub fn even_spanning_tree(g: &Graph) -> Result<SpanningTree<'_>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() % 2 != 0 {
        return Err(Error::OddOrder(g.n()));
    }
    let tree = spanning_tree(g)?;
    if tree.degrees().iter().any(|d| d % 2 == 0) {
        return Ok(tree);
    }
    let Some(&closing) = g.edges().iter().find(|e| !tree.contains(**e)) else {
        return Err(Error::AllOddTree);
    };
    let (u, v) = (closing.a(), closing.b());
    let path = tree.path(u, v)?;
    let dropped = crate::graph::Edge::new(u, path[1]);
    let mut edges: Vec<_> = tree.edges().iter().copied().filter(|&e| e != dropped).collect();
    edges.push(closing);
    SpanningTree::from_edges(g, edges, tree.root())
}

/// Splits a connected even-order graph into two connected parts of even
/// order, using the branches at the smallest even-degree vertex of
/// [`even_spanning_tree`].
pub fn choose_even_split(g: &Graph) -> Result<Split> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() % 2 != 0 {
        return Err(Error::OddOrder(g.n()));
    }
    if g.n() < 4 {
        return Err(Error::TooSmall(g.n()));
    }
    let tree = even_spanning_tree(g)?;
    let degrees = tree.degrees();
    let w: VertexId = degrees
        .iter()
        .position(|d| d % 2 == 0)
        .expect("even spanning tree has an even-degree vertex");
    // Branch sizes sum to n - 1 (odd) over an even number of branches, so at
    // least one branch has even size.
    let part_a = tree
        .branches(w)?
        .into_iter()
        .find(|b| b.len() % 2 == 0)
        .expect("some branch of an even-degree vertex has even size");
    let mut in_a = vec![false; g.n()];
    for &v in &part_a {
        in_a[v] = true;
    }
    let part_b = (0..g.n()).filter(|&v| !in_a[v]).collect();
    Ok(Split { part_a, part_b })
}
