//! The immutable hypergraph value type and its structural measurements.
//!
//! Vertices are dense ids `0..n`. Edges are stored as strictly increasing
//! vertex lists and the edge list itself is kept in lexicographic order, so two
//! hypergraphs with the same edge set compare equal.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "crate::io::HypergraphRecord", try_from = "crate::io::HypergraphRecord")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

/// Degree histogram of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    /// degree t -> number of vertices with degree t
    pub histogram: BTreeMap<usize, usize>,
    pub max_degree: usize,
    pub total_vertices: usize,
    pub total_degree: usize,
}

impl DegreeStats {
    pub fn count(&self, degree: usize) -> usize {
        self.histogram.get(&degree).copied().unwrap_or(0)
    }
}

/// Classification of a connected linear uniform hypergraph by its cycle
/// deficit `m(k-1) + 1 - n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StructureClass {
    Hypertree,
    Unicyclic,
    Bicyclic,
    Other(i64),
}

impl StructureClass {
    pub fn from_deficit(deficit: i64) -> Self {
        match deficit {
            0 => StructureClass::Hypertree,
            1 => StructureClass::Unicyclic,
            2 => StructureClass::Bicyclic,
            d => StructureClass::Other(d),
        }
    }

    pub fn deficit(self) -> i64 {
        match self {
            StructureClass::Hypertree => 0,
            StructureClass::Unicyclic => 1,
            StructureClass::Bicyclic => 2,
            StructureClass::Other(d) => d,
        }
    }

    /// Vertex count a connected linear k-uniform hypergraph with `m` edges
    /// must have to fall in this class. `None` if that count is negative.
    pub fn vertex_count(self, k: usize, m: usize) -> Option<usize> {
        let n = (m as i64) * (k as i64 - 1) + 1 - self.deficit();
        usize::try_from(n).ok()
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureClass::Hypertree => write!(f, "hypertree"),
            StructureClass::Unicyclic => write!(f, "unicyclic"),
            StructureClass::Bicyclic => write!(f, "bicyclic"),
            StructureClass::Other(d) => write!(f, "other({d})"),
        }
    }
}

impl Hypergraph {
    /// Builds a normalized hypergraph, rejecting out-of-range ids, repeated
    /// vertices inside an edge, edges with fewer than two vertices and
    /// repeated edges.
    pub fn from_edges(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, mut edge) in edges.into_iter().enumerate() {
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge { edge: i, vertex: w[0] });
            }
            if edge.len() < 2 {
                return Err(Error::EdgeTooSmall { edge: i });
            }
            normalized.push(edge);
        }
        normalized.sort();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { edge: w[0].clone() });
        }
        Ok(Hypergraph { n, edges: normalized })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Option<&[Vertex]> {
        self.edges.get(index).map(Vec::as_slice)
    }

    pub fn into_edges(self) -> Vec<Vec<Vertex>> {
        self.edges
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// For each vertex, the indices of the edges containing it (ascending).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut histogram = BTreeMap::new();
        let mut total_degree = 0;
        for d in self.degrees() {
            *histogram.entry(d).or_insert(0) += 1;
            total_degree += d;
        }
        DegreeStats {
            max_degree: histogram.keys().next_back().copied().unwrap_or(0),
            histogram,
            total_vertices: self.n,
            total_degree,
        }
    }

    /// Sum of squared vertex degrees.
    pub fn zagreb_index(&self) -> u64 {
        self.degrees().into_iter().map(|d| (d * d) as u64).sum()
    }

    /// Common edge size, or `None` for mixed sizes and for the edgeless case.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// True iff every pair of edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        // any two vertices may be co-located in at most one edge
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    if !seen.insert((a, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            for w in e.windows(2) {
                dsu.union(w[0], w[1]);
            }
        }
        let root = dsu.find(0);
        (1..self.n).all(|v| dsu.find(v) == root)
    }

    fn require_uniform_linear_connected(&self) -> Result<usize> {
        let k = self.uniformity().ok_or(Error::NotUniform)?;
        if !self.is_linear() {
            return Err(Error::NotLinear);
        }
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(k)
    }

    /// Hypertree / unicyclic / bicyclic classification of a connected linear
    /// uniform hypergraph.
    pub fn structure_class(&self) -> Result<StructureClass> {
        let k = self.require_uniform_linear_connected()?;
        let deficit = self.edges.len() as i64 * (k as i64 - 1) + 1 - self.n as i64;
        Ok(StructureClass::from_deficit(deficit))
    }

    /// Degree-one vertices, ascending.
    pub fn cored_vertices(&self) -> Vec<Vertex> {
        self.degrees()
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| (d == 1).then_some(v))
            .collect()
    }

    /// Indices of edges with exactly `|e| - 1` cored vertices. An isolated
    /// edge, whose vertices are all cored, does not qualify.
    pub fn pendant_edges(&self) -> Vec<usize> {
        let deg = self.degrees();
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| {
                let cored = e.iter().filter(|&&v| deg[v] == 1).count();
                (cored + 1 == e.len()).then_some(i)
            })
            .collect()
    }

    /// Applies `perm` (old id -> new id) to every vertex.
    pub fn relabel(&self, perm: &[Vertex]) -> Hypergraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut e: Vec<_> = e.iter().map(|&v| perm[v]).collect();
                e.sort_unstable();
                e
            })
            .collect::<Vec<_>>();
        let mut edges = edges;
        edges.sort();
        Hypergraph { n: self.n, edges }
    }

    /// Unchecked constructor for callers that already hold normalized edges.
    pub(crate) fn from_normalized(n: usize, edges: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Hypergraph { n, edges }
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, "])")
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
