//! Edge moving, pendant stripping and bicyclic classification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec};
use crate::girth::incidence_graph;
use crate::hypergraph::{Hypergraph, StructureClass, Vertex};

/// Move the edges at indices `moved_edges` from `u` to `v`: each `e` becomes
/// `(e \ {u}) ∪ {v}`. Indices refer to the normalized edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSpec {
    pub u: Vertex,
    pub v: Vertex,
    pub moved_edges: Vec<usize>,
}

/// Applies `mv` and returns the new hypergraph together with the change in
/// Zagreb index, recomputed from both degree sequences.
pub fn move_edges(h: &Hypergraph, mv: &MoveSpec) -> Result<(Hypergraph, i64)> {
    let n = h.vertex_count();
    let MoveSpec { u, v, ref moved_edges } = *mv;
    let illegal = |why: String| Err(Error::IllegalMove(why));
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return illegal(format!("source and target are both {u}"));
    }
    if moved_edges.is_empty() {
        return illegal("no edges to move".into());
    }
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    let mut edges = h.edges().to_vec();
    let mut seen = vec![false; edges.len()];
    for &i in moved_edges {
        let Some(e) = edges.get_mut(i) else {
            return illegal(format!("edge index {i} out of range"));
        };
        if std::mem::replace(&mut seen[i], true) {
            return illegal(format!("edge index {i} listed twice"));
        }
        if !e.contains(&u) {
            return illegal(format!("edge {e:?} does not contain {u}"));
        }
        if e.contains(&v) {
            return illegal(format!("edge {e:?} already contains {v}"));
        }
        e.retain(|&w| w != u);
        e.push(v);
        e.sort_unstable();
    }
    edges.sort();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::ResultDuplicateEdge);
    }
    let moved = Hypergraph::from_normalized(n, edges);
    if !moved.is_linear() {
        return Err(Error::ResultNotLinear);
    }
    let delta = moved.zagreb_index() as i64 - h.zagreb_index() as i64;
    Ok((moved, delta))
}

/// Removes pendant edges, with their cored vertices, until none is left, and
/// renumbers the surviving vertices in their original order.
///
/// This keeps exactly the edges in the 2-core of the incidence graph, which
/// is independent of removal order. An edge left with no other edge attached
/// is removed too, so a hypertree strips to the empty hypergraph.
pub fn strip_pendant_edges(h: &Hypergraph) -> (Hypergraph, usize) {
    let n = h.vertex_count();
    let alive = two_core(&incidence_graph(h));
    let kept: Vec<&Vec<Vertex>> =
        h.edges().iter().enumerate().filter(|&(i, _)| alive[n + i]).map(|(_, e)| e).collect();
    let mut new_id = vec![usize::MAX; n];
    for e in &kept {
        for &w in *e {
            new_id[w] = 0;
        }
    }
    let mut next = 0;
    for id in new_id.iter_mut().filter(|id| **id == 0) {
        *id = next;
        next += 1;
    }
    // renumbering is monotone, so edges stay sorted
    let edges = kept.iter().map(|e| e.iter().map(|&w| new_id[w]).collect()).collect();
    let removed = h.edge_count() - kept.len();
    (Hypergraph::from_normalized(next, edges), removed)
}

/// Nodes surviving repeated deletion of nodes of degree at most one.
fn two_core(adj: &[Vec<usize>]) -> Vec<bool> {
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; adj.len()];
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&x| deg[x] <= 1).collect();
    while let Some(x) = stack.pop() {
        if !alive[x] {
            continue;
        }
        alive[x] = false;
        for &y in &adj[x] {
            if alive[y] {
                deg[y] -= 1;
                if deg[y] == 1 {
                    stack.push(y);
                }
            }
        }
    }
    alive
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyResult {
    pub spec: FamilySpec,
    pub core_edge_count: usize,
    pub notes: Vec<String>,
}

/// Identifies which dumbbell or theta base a bicyclic hypergraph contains.
///
/// After stripping, the incidence graph minus its leaves is a subdivided
/// figure-eight, dumbbell or theta. Its branch points are vertex nodes
/// (joint attachments) or edge nodes (attachments at a cored position), and
/// every cycle or path length in hyperedges follows from the incidence
/// lengths between them. Parameters are reported sorted within the ranges
/// the families are defined on.
pub fn classify_bicyclic(h: &Hypergraph) -> Result<ClassifyResult> {
    let class = h.structure_class()?;
    if class != StructureClass::Bicyclic {
        return Err(Error::NotBicyclic(format!("hypergraph is {class}")));
    }
    let k = h.uniformity().expect("checked uniform");
    let (core, removed) = strip_pendant_edges(h);
    let n = core.vertex_count();
    let adj = incidence_graph(&core);
    let alive = two_core(&adj);
    let live_deg = |x: usize| adj[x].iter().filter(|&&y| alive[y]).count();
    let branches: Vec<usize> = (0..adj.len()).filter(|&x| alive[x] && live_deg(x) >= 3).collect();
    let is_vertex = |x: usize| x < n;
    let unrecognized = |what: &str| Err(Error::UnrecognizedCore(what.to_string()));
    let mut notes = Vec::new();

    let (family, variant, p, q, l) = match branches[..] {
        [w] if live_deg(w) == 4 => {
            let mut loops: Vec<usize> = trails(&adj, &alive, w).into_iter().map(|(_, len)| len).collect();
            loops.sort_unstable();
            let (a, b) = (loops[0] / 2, loops[2] / 2);
            if is_vertex(w) {
                (Family::B, 1, a, b, 0)
            } else {
                // two cycles through one edge: a theta whose middle path is that edge
                (Family::C, 3, a - 1, 1, b - 1)
            }
        }
        [x, y] if live_deg(x) == 3 && live_deg(y) == 3 => {
            let from_x = trails(&adj, &alive, x);
            let from_y = trails(&adj, &alive, y);
            if from_x.iter().all(|&(end, _)| end == y) {
                let mut lens: Vec<usize> = from_x.iter().map(|&(_, len)| len).collect();
                lens.sort_unstable();
                match (is_vertex(x), is_vertex(y)) {
                    (true, true) => (Family::C, 1, lens[0] / 2, lens[1] / 2, lens[2] / 2),
                    (false, false) => {
                        let c: Vec<usize> = lens.iter().map(|len| len / 2 - 1).collect();
                        if c[0] == 0 {
                            (Family::C, 3, c[1], 2, c[2])
                        } else {
                            (Family::C, 3, c[0], c[1] + 2, c[2])
                        }
                    }
                    _ => {
                        let a: Vec<usize> = lens.iter().map(|len| (len - 1) / 2).collect();
                        if a[0] == 0 {
                            (Family::C, 2, a[1], 1, a[2])
                        } else {
                            (Family::C, 2, a[0], a[1] + 1, a[2])
                        }
                    }
                }
            } else {
                let loop_at = |ts: &[(usize, usize)], me: usize| {
                    ts.iter().find(|&&(end, _)| end == me).map(|&(_, len)| len / 2)
                };
                let Some(bridge) = from_x.iter().find(|&&(end, _)| end == y).map(|&(_, len)| len) else {
                    return unrecognized("two branch points without a connecting path");
                };
                let (Some(cx), Some(cy)) = (loop_at(&from_x, x), loop_at(&from_y, y)) else {
                    return unrecognized("dumbbell end without a cycle");
                };
                match (is_vertex(x), is_vertex(y)) {
                    (true, true) => (Family::B, 1, cx.min(cy), cx.max(cy), bridge / 2),
                    (false, false) => (Family::B, 3, cx.min(cy), cx.max(cy), bridge / 2 - 1),
                    (xv, _) => {
                        let (joint, cored) = if xv { (cx, cy) } else { (cy, cx) };
                        if joint > cored {
                            notes.push(format!(
                                "cycle at the joint end ({joint}) is longer than the cycle at the cored end ({cored})"
                            ));
                        }
                        (Family::B, 2, joint, cored, (bridge - 1) / 2)
                    }
                }
            }
        }
        _ => return unrecognized(&format!("{} branch points in the core", branches.len())),
    };
    let spec = FamilySpec { family, variant, p, q, l, pendants: removed };
    if spec.base_edge_count() != core.edge_count() {
        return unrecognized(&format!("{spec} does not account for {} core edges", core.edge_count()));
    }
    if !spec.is_legal(k) && notes.is_empty() {
        return unrecognized(&format!("recovered parameters {spec} are out of range"));
    }
    Ok(ClassifyResult { spec, core_edge_count: core.edge_count(), notes })
}

/// Walks from branch node `start` along each live neighbour until the next
/// branch node, returning `(end, length)` per direction. A loop shows up once
/// per direction.
fn trails(adj: &[Vec<usize>], alive: &[bool], start: usize) -> Vec<(usize, usize)> {
    let live = |x: usize| adj[x].iter().copied().filter(|&y| alive[y]);
    live(start)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (start, first, 1);
            while live(cur).count() == 2 {
                let next = live(cur).find(|&y| y != prev).unwrap_or(prev);
                // a 2-cycle cannot occur in a simple incidence graph
                prev = cur;
                cur = next;
                len += 1;
            }
            (cur, len)
        })
        .collect()
}
