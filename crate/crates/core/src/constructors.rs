//! Deterministic builders for hyperpaths, hypercycles, the six bicyclic base
//! families and the extremal witnesses built from them.
//!
//! Vertex ids are handed out in construction order. Wherever a construction
//! may pick any vertex of a given kind (a cored vertex of an edge, a vertex of
//! maximum degree) it takes the lowest id; all such choices are equivalent up
//! to isomorphism.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec};
use crate::hypergraph::{Hypergraph, Vertex};

struct Builder {
    k: usize,
    next: usize,
    edges: Vec<Vec<Vertex>>,
}

/// Joint vertices and edges of a path or cycle. Every edge is stored as its
/// two joints followed by its cored fill vertices.
struct Walk {
    joints: Vec<Vertex>,
    edges: Vec<Vec<Vertex>>,
}

impl Walk {
    fn first_fill(&self, edge: usize) -> Vertex {
        self.edges[edge][2]
    }
}

impl Builder {
    fn new(k: usize) -> Self {
        Builder { k, next: 0, edges: Vec::new() }
    }

    fn fresh(&mut self) -> Vertex {
        self.next += 1;
        self.next - 1
    }

    fn edge(&mut self, a: Vertex, b: Vertex, anchor_fill: Option<Vertex>) -> Vec<Vertex> {
        let mut e = vec![a, b];
        e.extend(anchor_fill);
        while e.len() < self.k {
            let v = self.fresh();
            e.push(v);
        }
        self.edges.push(e.clone());
        e
    }

    /// Path of `len` edges from `start`, ending at `end` when given.
    fn path(&mut self, start: Vertex, end: Option<Vertex>, len: usize) -> Walk {
        debug_assert!(len > 0 || end.is_none_or(|e| e == start));
        let mut joints = vec![start];
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let next = match end {
                Some(e) if i + 1 == len => e,
                _ => self.fresh(),
            };
            edges.push(self.edge(joints[i], next, None));
            joints.push(next);
        }
        Walk { joints, edges }
    }

    /// Cycle of `len` edges. `joint` fixes joint 0; `cored` fixes the first
    /// fill vertex of edge 0.
    fn cycle(&mut self, len: usize, joint: Option<Vertex>, cored: Option<Vertex>) -> Walk {
        let mut joints = Vec::with_capacity(len);
        joints.push(joint.unwrap_or_else(|| self.fresh()));
        for _ in 1..len {
            let v = self.fresh();
            joints.push(v);
        }
        let edges = (0..len)
            .map(|i| {
                let fill = if i == 0 { cored } else { None };
                self.edge(joints[i], joints[(i + 1) % len], fill)
            })
            .collect();
        Walk { joints, edges }
    }

    fn finish(self) -> Hypergraph {
        Hypergraph::from_edges(self.next, self.edges).expect("builder produces valid hypergraphs")
    }
}

fn require_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::IllegalParameters(format!("uniformity k={k} must be at least {min}")));
    }
    Ok(())
}

/// Hyperpath with `len` edges. Joints get ids `0..=len` in path order, then
/// the cored fill of each edge follows in edge order.
pub fn hyperpath(k: usize, len: usize) -> Result<Hypergraph> {
    require_k(k, 2)?;
    let mut next = len + 1;
    let edges = (0..len)
        .map(|i| {
            let mut e = vec![i, i + 1];
            e.extend(next..next + k - 2);
            next += k - 2;
            e
        })
        .collect();
    Hypergraph::from_edges(next, edges)
}

/// Hypercycle with `len >= 3` edges, numbered like [`hyperpath`].
pub fn hypercycle(k: usize, len: usize) -> Result<Hypergraph> {
    require_k(k, 2)?;
    if len < 3 {
        return Err(Error::LengthTooSmall { len, min: 3 });
    }
    let mut next = len;
    let edges = (0..len)
        .map(|i| {
            let mut e = vec![i, (i + 1) % len];
            e.extend(next..next + k - 2);
            next += k - 2;
            e
        })
        .collect();
    Hypergraph::from_edges(next, edges)
}

fn build_b(variant: u8, p: usize, q: usize, l: usize, k: usize) -> Hypergraph {
    let mut b = Builder::new(k);
    let c1 = b.cycle(p, None, None);
    let start = match variant {
        1 | 2 => c1.joints[0],
        _ => c1.first_fill(0),
    };
    let path = b.path(start, None, l);
    let end = *path.joints.last().unwrap();
    match variant {
        1 => b.cycle(q, Some(end), None),
        _ => b.cycle(q, None, Some(end)),
    };
    b.finish()
}

fn build_c(variant: u8, p: usize, q: usize, l: usize, k: usize) -> Hypergraph {
    let mut b = Builder::new(k);
    let x = b.fresh();
    let y = b.fresh();
    b.path(x, Some(y), p);
    let pq = b.path(x, Some(y), q);
    match variant {
        1 => {
            b.path(x, Some(y), l);
        }
        2 => {
            let v = pq.first_fill(q - 1);
            b.path(x, Some(v), l);
        }
        _ => {
            let v1 = pq.first_fill(0);
            let v2 = if q == 1 { pq.edges[0][3] } else { pq.first_fill(q - 1) };
            b.path(v1, Some(v2), l);
        }
    }
    b.finish()
}

/// Builds the base of `spec` (pendants ignored) without checking the family
/// parameter ordering. Only the conditions needed for a linear result are
/// enforced. Used for cores outside the literal family ranges, such as a `B_2`
/// whose joint-attached cycle is the longer one.
pub fn build_base_unchecked(spec: &FamilySpec, k: usize) -> Result<Hypergraph> {
    require_k(k, 3)?;
    let FamilySpec { family, variant, p, q, l, .. } = *spec;
    let bad = |why: &str| Err(Error::IllegalParameters(format!("{spec}: {why}")));
    if !(1..=3).contains(&variant) {
        return bad("variant must be 1, 2 or 3");
    }
    match family {
        Family::B => {
            if p < 3 || q < 3 {
                return bad("cycles need length at least 3");
            }
            Ok(build_b(variant, p, q, l, k))
        }
        Family::C => {
            if p == 0 || q == 0 || l == 0 {
                return bad("paths need length at least 1");
            }
            if variant == 3 && q == 1 && k < 4 {
                return bad("q = 1 needs k > 3");
            }
            let h = build_c(variant, p, q, l, k);
            if !h.is_linear() {
                return bad("result is not linear");
            }
            Ok(h)
        }
    }
}

/// Dumbbell base `B_i(p, l, q)`.
pub fn b_base(spec: &FamilySpec, k: usize) -> Result<Hypergraph> {
    if spec.family != Family::B {
        return Err(Error::IllegalParameters(format!("{spec} is not a B family")));
    }
    spec.check(k)?;
    build_base_unchecked(spec, k)
}

/// Theta base `C_i(p, q, l)`.
pub fn c_base(spec: &FamilySpec, k: usize) -> Result<Hypergraph> {
    if spec.family != Family::C {
        return Err(Error::IllegalParameters(format!("{spec} is not a C family")));
    }
    spec.check(k)?;
    build_base_unchecked(spec, k)
}

/// Hangs `count` new edges `{v} ∪ (k-1 fresh vertices)` from `v`. Fresh ids
/// continue after the current highest id.
pub fn attach_pendant_edges(h: &Hypergraph, v: Vertex, count: usize, k: usize) -> Result<Hypergraph> {
    let n = h.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    require_k(k, 2)?;
    if let Some(found) = h.uniformity() {
        if found != k {
            return Err(Error::UniformityMismatch { expected: k, found });
        }
    }
    let mut edges = h.edges().to_vec();
    let mut next = n;
    for _ in 0..count {
        let mut e = vec![v];
        e.extend(next..next + k - 1);
        next += k - 1;
        edges.push(e);
    }
    Hypergraph::from_edges(next, edges)
}

/// Lowest-id vertex of maximum degree.
fn apex(h: &Hypergraph) -> Vertex {
    let deg = h.degrees();
    let max = deg.iter().copied().max().unwrap_or(0);
    deg.iter().position(|&d| d == max).unwrap_or(0)
}

/// Base of `spec` with `spec.pendants` pendant edges at its lowest-id vertex
/// of maximum degree: the degree-4 vertex of `B_1(p, 0, q)`, a degree-3
/// junction of `B_1`, `B_2`, `C_1` and `C_2`, a degree-2 vertex of `B_3`
/// and `C_3`.
pub fn family_member(spec: &FamilySpec, k: usize) -> Result<Hypergraph> {
    let base = match spec.family {
        Family::B => b_base(spec, k)?,
        Family::C => c_base(spec, k)?,
    };
    attach_pendant_edges(&base, apex(&base), spec.pendants, k)
}

/// `B_1(g, 0, g)` with `m - 2g` pendant edges at its degree-4 vertex.
pub fn extremal_b(k: usize, m: usize, g: usize) -> Result<Hypergraph> {
    if k < 3 || g < 3 || m < 2 * g {
        return Err(Error::IllegalParameters(format!(
            "extremal B needs k >= 3, g >= 3, m >= 2g (k={k}, m={m}, g={g})"
        )));
    }
    family_member(&extremal_b_spec(m, g), k)
}

pub fn extremal_b_spec(m: usize, g: usize) -> FamilySpec {
    FamilySpec::b(1, g, g, 0).with_pendants(m.saturating_sub(2 * g))
}

/// Even `g`: `C_1(g/2, g/2, g/2)` with `m - 3g/2` pendants. Odd `g`:
/// `C_2(⌊g/2⌋, ⌈g/2⌉, ⌊g/2⌋)` with `m - g - ⌊g/2⌋` pendants. Pendants hang
/// from the lowest-id degree-3 junction.
pub fn extremal_c(k: usize, m: usize, g: usize) -> Result<Hypergraph> {
    let base_edges = g + g / 2;
    if k < 3 || g < 3 || m < base_edges {
        return Err(Error::IllegalParameters(format!(
            "extremal C needs k >= 3, g >= 3, m >= g + ⌊g/2⌋ (k={k}, m={m}, g={g})"
        )));
    }
    family_member(&extremal_c_spec(m, g), k)
}

pub fn extremal_c_spec(m: usize, g: usize) -> FamilySpec {
    let half = g / 2;
    let base = if g % 2 == 0 {
        FamilySpec::c(1, half, half, half)
    } else {
        FamilySpec::c(2, half, half + 1, half)
    };
    base.with_pendants(m.saturating_sub(base.base_edge_count()))
}

/// Flag attached to witnesses built outside the range a theorem covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RangeWarning {
    OutsideTheoremRange { m: usize, min_m: usize },
}

/// `C_2(1, 2, 1)` with `m - 4` pendants. Extremality is only claimed for
/// `m >= 6`; for `m` in `{4, 5}` the hypergraph is returned with a warning.
pub fn global_max(k: usize, m: usize) -> Result<(Hypergraph, Option<RangeWarning>)> {
    if m < 4 {
        return Err(Error::IllegalParameters(format!("global maximum needs m >= 4, got {m}")));
    }
    let h = extremal_c(k, m, 3)?;
    let warning = (m < 6).then_some(RangeWarning::OutsideTheoremRange { m, min_m: 6 });
    Ok((h, warning))
}

/// A maximum-degree-2 linear bicyclic hypergraph: the `C_3(1, 2, m - 3)` base.
/// No linear bicyclic hypergraph has `m <= 3`.
pub fn min_bicyclic(k: usize, m: usize) -> Result<Hypergraph> {
    if m < 4 {
        return Err(Error::IllegalParameters(format!(
            "no linear bicyclic hypergraph has m={m} <= 3 edges"
        )));
    }
    c_base(&FamilySpec::c(3, 1, 2, m - 3), k)
}
