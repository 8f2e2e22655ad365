//! Isomorph-free generation of connected linear uniform hypergraphs.
//!
//! Hypergraphs are grown one edge at a time, each new edge meeting the part
//! already built. An edge that reuses `j` existing vertices closes `j - 1`
//! independent cycles, so the running total of closed cycles must never pass
//! the class deficit and must hit it exactly after the last edge. Completed
//! hypergraphs are deduplicated by canonical code and returned in code order.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code_with, CanonLimits, CanonicalCode};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, StructureClass};

/// Largest vertex count the bitset-based search supports.
const MAX_VERTICES: usize = 64;
/// Target number of independent subtrees before the search fans out.
const SPLIT_TARGET: usize = 64;

/// Default largest edge count for each uniformity.
pub fn default_max_m(k: usize) -> usize {
    match k {
        0..=3 => 6,
        4 => 5,
        _ => 4,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub k: usize,
    pub m: usize,
    pub class: StructureClass,
    pub girth: Option<usize>,
    /// Overrides [`default_max_m`].
    pub max_m: Option<usize>,
    /// Worker threads; `None` uses rayon's global pool.
    pub workers: Option<usize>,
}

impl EnumerationRequest {
    pub fn new(k: usize, m: usize, class: StructureClass) -> Self {
        EnumerationRequest { k, m, class, girth: None, max_m: None, workers: None }
    }

    pub fn girth(self, g: usize) -> Self {
        EnumerationRequest { girth: Some(g), ..self }
    }

    pub fn max_m(self, max_m: usize) -> Self {
        EnumerationRequest { max_m: Some(max_m), ..self }
    }

    pub fn workers(self, workers: usize) -> Self {
        EnumerationRequest { workers: Some(workers), ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.k < 3 {
            return Err(Error::IllegalParameters(format!("uniformity k={} must be at least 3", self.k)));
        }
        if self.m == 0 {
            return Err(Error::IllegalParameters("edge count must be positive".into()));
        }
        let limit = self.max_m.unwrap_or_else(|| default_max_m(self.k));
        if self.m > limit {
            return Err(Error::GuardExceeded { k: self.k, m: self.m, limit });
        }
        if self.workers == Some(0) {
            return Err(Error::IllegalParameters("worker count must be positive".into()));
        }
        Ok(())
    }
}

/// One representative per isomorphism class of connected linear `k`-uniform
/// hypergraphs with `m` edges in the requested class (and girth, when set),
/// ordered by canonical code.
pub fn enumerate_linear(req: &EnumerationRequest) -> Result<Vec<Hypergraph>> {
    Ok(enumerate_codes(req)?.into_iter().map(|c| c.to_hypergraph()).collect())
}

/// Like [`enumerate_linear`] but returns the canonical codes.
pub fn enumerate_codes(req: &EnumerationRequest) -> Result<Vec<CanonicalCode>> {
    req.validate()?;
    let deficit = req.class.deficit();
    let max_deficit = ((req.m - 1) * (req.k - 1)) as i64;
    if deficit < 0 || deficit > max_deficit {
        return Ok(Vec::new());
    }
    let n = req.class.vertex_count(req.k, req.m).expect("deficit is in range");
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, limit: MAX_VERTICES });
    }
    let search = Search { k: req.k, m: req.m, deficit: deficit as usize, girth: req.girth };
    let run = || search.run();
    let codes = match req.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::IllegalParameters(format!("cannot start {w} workers: {e}")))?
            .install(run)?,
        None => run()?,
    };
    Ok(codes)
}

#[derive(Clone)]
struct Partial {
    edges: Vec<Vec<usize>>,
    deg: Vec<u8>,
    /// `mates[v]`: bitset of vertices sharing an edge with `v`
    mates: Vec<u64>,
    cycles: usize,
}

impl Partial {
    fn first(k: usize) -> Self {
        let mut p = Partial { edges: Vec::new(), deg: Vec::new(), mates: Vec::new(), cycles: 0 };
        p.push_edge(&[], k);
        p
    }

    fn n(&self) -> usize {
        self.deg.len()
    }

    /// Adds an edge made of `reused` plus fresh vertices up to size `k`.
    fn push_edge(&mut self, reused: &[usize], k: usize) {
        let mut e = reused.to_vec();
        let start = self.n();
        e.extend(start..start + k - reused.len());
        self.deg.resize(start + k - reused.len(), 0);
        self.mates.resize(self.deg.len(), 0);
        let mask = e.iter().fold(0u64, |acc, &v| acc | 1 << v);
        for &v in &e {
            self.deg[v] += 1;
            self.mates[v] |= mask & !(1 << v);
        }
        self.cycles += reused.len().saturating_sub(1);
        self.edges.push(e);
    }

    /// Existing vertices a new edge may use: every vertex of degree at least
    /// two, and from each edge its lowest degree-one vertex (the others are
    /// interchangeable with it).
    fn candidates(&self) -> Vec<usize> {
        let mut cands: Vec<usize> = (0..self.n()).filter(|&v| self.deg[v] >= 2).collect();
        for e in &self.edges {
            if let Some(&v) = e.iter().filter(|&&v| self.deg[v] == 1).min() {
                cands.push(v);
            }
        }
        cands.sort_unstable();
        cands
    }

    fn to_hypergraph(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e.sort_unstable();
                e
            })
            .collect();
        Hypergraph::from_edges(self.n(), edges).expect("search keeps edges valid")
    }
}

struct Search {
    k: usize,
    m: usize,
    deficit: usize,
    girth: Option<usize>,
}

impl Search {
    fn run(&self) -> Result<Vec<CanonicalCode>> {
        // fan out breadth-first until there are enough independent subtrees
        let mut frontier = vec![Partial::first(self.k)];
        let mut depth = 1;
        while depth < self.m && frontier.len() < SPLIT_TARGET {
            frontier = frontier.iter().flat_map(|p| self.children(p)).collect();
            depth += 1;
        }
        let found = frontier
            .par_iter()
            .map(|p| {
                let mut codes = BTreeSet::new();
                self.dfs(p, &mut codes).map(|_| codes)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut all = BTreeSet::new();
        for codes in found {
            all.extend(codes);
        }
        Ok(all.into_iter().collect())
    }

    fn dfs(&self, p: &Partial, codes: &mut BTreeSet<CanonicalCode>) -> Result<()> {
        if p.edges.len() == self.m {
            if p.cycles == self.deficit {
                let h = p.to_hypergraph();
                if self.girth.is_none() || h.girth()? == self.girth {
                    let limits = CanonLimits { max_vertices: MAX_VERTICES, ..CanonLimits::default() };
                    codes.insert(canonical_code_with(&h, limits)?);
                }
            }
            return Ok(());
        }
        for child in self.children(p) {
            self.dfs(&child, codes)?;
        }
        Ok(())
    }

    /// All one-edge extensions of `p` that can still reach the target class.
    fn children(&self, p: &Partial) -> Vec<Partial> {
        let cands = p.candidates();
        let edges_left = self.m - p.edges.len() - 1;
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(self.k);
        self.choose(p, &cands, 0, &mut chosen, edges_left, &mut out);
        out
    }

    fn choose(
        &self,
        p: &Partial,
        cands: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
        edges_left: usize,
        out: &mut Vec<Partial>,
    ) {
        if !chosen.is_empty() {
            let cycles = p.cycles + chosen.len() - 1;
            // every later edge can close at most k - 1 cycles
            if cycles <= self.deficit && cycles + edges_left * (self.k - 1) >= self.deficit {
                let mut child = p.clone();
                child.push_edge(chosen, self.k);
                if self.girth_allows(&child, chosen.len()) {
                    out.push(child);
                }
            }
        }
        if chosen.len() == self.k || p.cycles + chosen.len() > self.deficit {
            return;
        }
        let taken = chosen.iter().fold(0u64, |acc, &v| acc | p.mates[v] | 1 << v);
        for i in from..cands.len() {
            let v = cands[i];
            if taken & (1 << v) == 0 {
                chosen.push(v);
                self.choose(p, cands, i + 1, chosen, edges_left, out);
                chosen.pop();
            }
        }
    }

    /// Girth only shrinks as edges are added, so a cycle shorter than the
    /// requested girth ends the branch.
    fn girth_allows(&self, child: &Partial, reused: usize) -> bool {
        match self.girth {
            Some(g) if reused >= 2 => {
                let h = child.to_hypergraph();
                h.girth().ok().flatten().is_none_or(|c| c >= g)
            }
            _ => true,
        }
    }
}

/// Extremes of the Zagreb index over an enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub k: usize,
    pub m: usize,
    pub n: Option<usize>,
    pub class: StructureClass,
    pub girth: Option<usize>,
    pub count: usize,
    pub min_zagreb: Option<u64>,
    pub max_zagreb: Option<u64>,
    /// Least-code class attaining the minimum.
    pub min_witness: Option<Hypergraph>,
    pub max_witness: Option<Hypergraph>,
    /// Number of classes attaining each extreme.
    pub min_classes: usize,
    pub max_classes: usize,
    pub duration_ms: u64,
    #[serde(skip)]
    pub codes: Vec<CanonicalCode>,
}

impl EnumerationReport {
    /// Codes of the classes attaining the maximum.
    pub fn maximizer_codes(&self) -> Vec<&CanonicalCode> {
        self.codes_with(self.max_zagreb)
    }

    pub fn minimizer_codes(&self) -> Vec<&CanonicalCode> {
        self.codes_with(self.min_zagreb)
    }

    fn codes_with(&self, value: Option<u64>) -> Vec<&CanonicalCode> {
        self.codes
            .iter()
            .filter(|c| Some(c.to_hypergraph().zagreb_index()) == value)
            .collect()
    }
}

pub fn extremal_scan(req: &EnumerationRequest) -> Result<EnumerationReport> {
    let started = Instant::now();
    let codes = enumerate_codes(req)?;
    let values: Vec<u64> = codes.iter().map(|c| c.to_hypergraph().zagreb_index()).collect();
    let min = values.iter().copied().min();
    let max = values.iter().copied().max();
    // codes are sorted, so the first hit is the least code
    let witness = |target: Option<u64>| {
        values.iter().position(|&z| Some(z) == target).map(|i| codes[i].to_hypergraph())
    };
    let attaining = |target: Option<u64>| values.iter().filter(|&&z| Some(z) == target).count();
    Ok(EnumerationReport {
        k: req.k,
        m: req.m,
        n: req.class.vertex_count(req.k, req.m),
        class: req.class,
        girth: req.girth,
        count: codes.len(),
        min_zagreb: min,
        max_zagreb: max,
        min_witness: witness(min),
        max_witness: witness(max),
        min_classes: attaining(min),
        max_classes: attaining(max),
        duration_ms: started.elapsed().as_millis() as u64,
        codes,
    })
}
