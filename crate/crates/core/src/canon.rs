//! Canonical codes for small hypergraphs.
//!
//! Colour refinement runs on the bipartite incidence graph, then a
//! backtracking search individualizes vertices of the first non-singleton
//! vertex cell until the vertex partition is discrete. Every leaf induces a
//! vertex labelling; the code is the least edge-list encoding over all leaves.
//! Two leaves with equal encodings expose an automorphism; siblings that an
//! automorphism fixing the current path maps onto an already explored sibling
//! are skipped, as are vertices lying in exactly the same edges as one tried.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::girth::incidence_graph;
use crate::hypergraph::{Dsu, Hypergraph};

pub const DEFAULT_SIZE_LIMIT: usize = 20;
pub const DEFAULT_SEARCH_BUDGET: usize = 1_000_000;

/// Byte string identifying the isomorphism class of a hypergraph: vertex
/// count, edge count, then each edge as its size followed by its sorted
/// vertex labels, edges in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative the code describes.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let bytes = &self.0;
        let n = bytes[0] as usize;
        let m = bytes[1] as usize;
        let mut edges = Vec::with_capacity(m);
        let mut pos = 2;
        for _ in 0..m {
            let len = bytes[pos] as usize;
            edges.push(bytes[pos + 1..pos + 1 + len].iter().map(|&b| b as usize).collect());
            pos += 1 + len;
        }
        Hypergraph::from_normalized(n, edges)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CanonLimits {
    pub max_vertices: usize,
    pub search_budget: usize,
}

impl Default for CanonLimits {
    fn default() -> Self {
        CanonLimits { max_vertices: DEFAULT_SIZE_LIMIT, search_budget: DEFAULT_SEARCH_BUDGET }
    }
}

pub fn canonical_code(h: &Hypergraph) -> Result<CanonicalCode> {
    canonical_code_with(h, CanonLimits::default())
}

pub fn canonical_code_with(h: &Hypergraph, limits: CanonLimits) -> Result<CanonicalCode> {
    let n = h.vertex_count();
    let limit = limits.max_vertices.min(u8::MAX as usize);
    if n > limit || h.edge_count() > u8::MAX as usize {
        return Err(Error::TooLarge { n, limit });
    }
    let adj = incidence_graph(h);
    let inc = h.incidence();
    // twin[v]: lowest vertex lying in exactly the same edges as v
    let twin = (0..n)
        .map(|v| (0..=v).find(|&w| inc[w] == inc[v]).unwrap())
        .collect();
    let mut search = Search {
        h,
        adj,
        twin,
        best: None,
        best_label: Vec::new(),
        automorphisms: Vec::new(),
        path: Vec::new(),
        steps: 0,
        budget: limits.search_budget,
    };
    let mut colors = vec![0u32; n + h.edge_count()];
    colors[n..].iter_mut().for_each(|c| *c = 1);
    search.descend(colors)?;
    Ok(CanonicalCode(search.best.expect("search reaches at least one leaf")))
}

pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_stats() != b.degree_stats()
    {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

struct Search<'a> {
    h: &'a Hypergraph,
    adj: Vec<Vec<usize>>,
    twin: Vec<usize>,
    best: Option<Vec<u8>>,
    best_label: Vec<u8>,
    automorphisms: Vec<Vec<usize>>,
    /// vertices individualized on the way to the current node
    path: Vec<usize>,
    steps: usize,
    budget: usize,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::SearchBudgetExceeded { budget: self.budget });
        }
        let colors = refine(&self.adj, colors);
        let n = self.h.vertex_count();
        let Some(target) = first_nontrivial_cell(&colors[..n]) else {
            self.leaf(&colors[..n]);
            return Ok(());
        };
        let mut tried: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| colors[v] == target) {
            if tried.iter().any(|&w| self.twin[w] == self.twin[v]) {
                continue;
            }
            let orbit = self.stabilizer_orbits();
            if tried.iter().any(|&w| orbit[w] == orbit[v]) {
                continue;
            }
            tried.push(v);
            let next = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + u32::from(c == target && x != v))
                .collect();
            self.path.push(v);
            let r = self.descend(next);
            self.path.pop();
            r?;
        }
        Ok(())
    }

    fn leaf(&mut self, vertex_colors: &[u32]) {
        let (code, label) = self.encode(vertex_colors);
        match &self.best {
            Some(b) if code == *b => {
                // both labellings give the same hypergraph, so
                // best_label^-1 . label is an automorphism
                let mut inverse = vec![0; label.len()];
                for (v, &l) in self.best_label.iter().enumerate() {
                    inverse[l as usize] = v;
                }
                let auto: Vec<usize> = label.iter().map(|&l| inverse[l as usize]).collect();
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(auto);
                }
            }
            Some(b) if code > *b => {}
            _ => {
                self.best = Some(code);
                self.best_label = label;
            }
        }
    }

    /// Orbit representative of each vertex under the known automorphisms
    /// that fix every vertex on the current path.
    fn stabilizer_orbits(&self) -> Vec<usize> {
        let n = self.h.vertex_count();
        let mut dsu = Dsu::new(n);
        for a in &self.automorphisms {
            if self.path.iter().all(|&p| a[p] == p) {
                for (v, &w) in a.iter().enumerate() {
                    dsu.union(v, w);
                }
            }
        }
        (0..n).map(|v| dsu.find(v)).collect()
    }

    /// Encoding under the labelling given by a discrete vertex colouring.
    fn encode(&self, vertex_colors: &[u32]) -> (Vec<u8>, Vec<u8>) {
        let mut order: Vec<usize> = (0..vertex_colors.len()).collect();
        order.sort_unstable_by_key(|&v| vertex_colors[v]);
        let mut label = vec![0u8; order.len()];
        for (rank, &v) in order.iter().enumerate() {
            label[v] = rank as u8;
        }
        let mut edges: Vec<Vec<u8>> = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut le: Vec<u8> = e.iter().map(|&v| label[v]).collect();
                le.sort_unstable();
                le.insert(0, e.len() as u8);
                le
            })
            .collect();
        edges.sort_unstable();
        let mut code = vec![vertex_colors.len() as u8, edges.len() as u8];
        for e in edges {
            code.extend(e);
        }
        (code, label)
    }
}

/// Smallest colour shared by two or more vertices.
fn first_nontrivial_cell(vertex_colors: &[u32]) -> Option<u32> {
    let mut sorted = vertex_colors.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
}

/// Equitable refinement: repeatedly split cells by the multiset of neighbour
/// colours until the number of cells is stable. New colours are ranks of
/// `(old colour, neighbour multiset)`, so the cell order is label-invariant.
fn refine(adj: &[Vec<usize>], mut colors: Vec<u32>) -> Vec<u32> {
    let mut cells = count_distinct(&colors);
    let mut sig: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(colors.len());
    loop {
        sig.clear();
        for (x, nbrs) in adj.iter().enumerate() {
            let mut nc: Vec<u32> = nbrs.iter().map(|&y| colors[y]).collect();
            nc.sort_unstable();
            sig.push((colors[x], nc, x));
        }
        sig.sort_unstable();
        let mut rank = 0u32;
        for i in 0..sig.len() {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                rank += 1;
            }
            colors[sig[i].2] = rank;
        }
        let now = rank as usize + 1;
        if now == cells || colors.is_empty() {
            return colors;
        }
        cells = now;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{c_base, hypercycle, hyperpath};
    use crate::family::FamilySpec;

    #[test]
    fn relabelled_copies_share_a_code() {
        let h = c_base(&FamilySpec::c(1, 2, 2, 2), 3).unwrap();
        let n = h.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
        assert_eq!(canonical_code(&h).unwrap(), canonical_code(&h.relabel(&perm)).unwrap());
    }

    #[test]
    fn distinguishes_cycle_from_path() {
        let c = hypercycle(3, 3).unwrap();
        let p = hyperpath(3, 3).unwrap();
        assert_ne!(canonical_code(&c).unwrap(), canonical_code(&p).unwrap());
        assert!(!are_isomorphic(&hypercycle(3, 4).unwrap(), &hypercycle(3, 5).unwrap()).unwrap());
    }

    #[test]
    fn code_decodes_to_isomorphic_representative() {
        let h = c_base(&FamilySpec::c(2, 1, 2, 1), 3).unwrap();
        let code = canonical_code(&h).unwrap();
        let rep = code.to_hypergraph();
        assert_eq!(canonical_code(&rep).unwrap(), code);
        assert_eq!(rep.zagreb_index(), h.zagreb_index());
    }

    #[test]
    fn empty_and_edgeless() {
        assert_eq!(canonical_code(&Hypergraph::empty(0)).unwrap().as_bytes(), &[0, 0]);
        assert_eq!(canonical_code(&Hypergraph::empty(3)).unwrap().as_bytes(), &[3, 0]);
    }

    #[test]
    fn size_guard() {
        let h = hyperpath(3, 10).unwrap();
        assert_eq!(canonical_code(&h), Err(Error::TooLarge { n: 21, limit: 20 }));
        let relaxed = CanonLimits { max_vertices: 64, ..CanonLimits::default() };
        assert!(canonical_code_with(&h, relaxed).is_ok());
    }

    #[test]
    fn search_budget_is_enforced() {
        let h = hypercycle(3, 6).unwrap();
        let tight = CanonLimits { max_vertices: 20, search_budget: 1 };
        assert_eq!(
            canonical_code_with(&h, tight),
            Err(Error::SearchBudgetExceeded { budget: 1 })
        );
    }
}
