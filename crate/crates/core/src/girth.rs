//! Berge girth through the bipartite incidence graph.
//!
//! Vertex `v` is incidence node `v`, edge `i` is node `n + i`. A Berge cycle of
//! length `l` is exactly an incidence cycle of length `2l`, so the hypergraph
//! girth is half the incidence girth.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Adjacency lists of the incidence graph.
pub(crate) fn incidence_graph(h: &Hypergraph) -> Vec<Vec<usize>> {
    let n = h.vertex_count();
    let mut adj = vec![Vec::new(); n + h.edge_count()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            adj[v].push(n + i);
            adj[n + i].push(v);
        }
    }
    adj
}

/// Length of the shortest cycle of a simple graph, BFS from every node.
pub(crate) fn shortest_cycle(adj: &[Vec<usize>]) -> Option<usize> {
    let total = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    let mut queue = VecDeque::new();
    for source in 0..total {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[source] = 0;
        parent[source] = usize::MAX;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            // nothing shorter can close beyond this radius
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

impl Hypergraph {
    /// Length of the shortest Berge cycle, or `None` when acyclic.
    pub fn girth(&self) -> Result<Option<usize>> {
        if !self.is_linear() {
            return Err(Error::NotLinear);
        }
        Ok(shortest_cycle(&incidence_graph(self)).map(|c| c / 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_of_triples() {
        let h = Hypergraph::from_edges(6, vec![vec![0, 1, 3], vec![1, 2, 4], vec![0, 2, 5]])
            .unwrap();
        assert_eq!(h.girth(), Ok(Some(3)));
    }

    #[test]
    fn acyclic_and_nonlinear() {
        let path = Hypergraph::from_edges(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(path.girth(), Ok(None));
        let doubled = Hypergraph::from_edges(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(doubled.girth(), Err(Error::NotLinear));
        // the non-linear pair is a 4-cycle in the incidence graph
        assert_eq!(shortest_cycle(&incidence_graph(&doubled)), Some(4));
    }

    #[test]
    fn plain_graph_cycles() {
        // a 5-cycle with a chord: shortest cycle is 3
        let h = Hypergraph::from_edges(
            5,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0], vec![0, 2]],
        )
        .unwrap();
        assert_eq!(h.girth(), Ok(Some(3)));
    }
}
