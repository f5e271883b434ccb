use super::{check_input, choose_even_split, is_all_odd_tree, Forest};
use crate::error::Result;
use crate::graph::{induced_subgraph, Graph, Remap};

/// Perfect forest by induction on the number of vertices.
///
/// A tree whose degrees are all odd is its own perfect forest. Any other
/// connected even-order graph splits into two connected even-order induced
/// pieces; the forests of the pieces, taken together, are perfect for the
/// whole graph. Subproblems live on an explicit stack.
pub fn perfect_forest_split(g: &Graph) -> Result<Forest<'_>> {
    check_input(g)?;
    let mut edges = Vec::with_capacity(g.n());
    let mut stack = vec![(g.clone(), Remap::identity(g.n()))];
    while let Some((sub, remap)) = stack.pop() {
        if is_all_odd_tree(&sub) {
            edges.extend(sub.edges().iter().map(|&e| remap.edge(e)));
            continue;
        }
        let split = choose_even_split(&sub)?;
        for part in [&split.part_a, &split.part_b] {
            let (child, child_remap) = induced_subgraph(&sub, part)?;
            stack.push((child, child_remap.then(&remap)));
        }
    }
    Forest::new(g, edges)
}
