//! Independent reference implementations used as oracles. They share no
//! code with the library beyond the `Hypergraph` value type.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hyperzagreb::Hypergraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Whether some bijection of vertices maps the edge set of `a` onto `b`,
/// found by plain backtracking over vertex assignments.
pub fn brute_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let target: BTreeSet<Vec<usize>> = b.edges().iter().cloned().collect();
    // edges of `a` that become fully mapped once vertex v is assigned
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in a.edges().iter().enumerate() {
        closing[*e.iter().max().unwrap()].push(i);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        a: &Hypergraph,
        da: &[usize],
        db: &[usize],
        target: &BTreeSet<Vec<usize>>,
        closing: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == map.len() {
            return true;
        }
        for w in 0..map.len() {
            if used[w] || da[v] != db[w] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            let ok = closing[v].iter().all(|&i| {
                let mut e: Vec<usize> = a.edges()[i].iter().map(|&x| map[x]).collect();
                e.sort_unstable();
                target.contains(&e)
            });
            if ok && go(v + 1, a, da, db, target, closing, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
    go(0, a, &da, &db, &target, &closing, &mut map, &mut used)
}

/// Shortest Berge cycle by exhaustive search over vertex/edge sequences.
pub fn brute_girth(h: &Hypergraph) -> Option<usize> {
    let m = h.edge_count();
    let mut best: Option<usize> = None;
    // a cycle through edges e_1..e_L, started from its lowest-index edge
    fn extend(
        h: &Hypergraph,
        start_vertex: usize,
        cur_vertex: usize,
        used_edges: &mut Vec<usize>,
        used_vertices: &mut Vec<usize>,
        best: &mut Option<usize>,
    ) {
        let len = used_edges.len();
        if best.is_some_and(|b| len >= b) {
            return;
        }
        for (i, e) in h.edges().iter().enumerate() {
            if i < used_edges[0] || used_edges.contains(&i) || !e.contains(&cur_vertex) {
                continue;
            }
            if len >= 1 && e.contains(&start_vertex) && len + 1 >= 2 {
                *best = Some(best.map_or(len + 1, |b| b.min(len + 1)));
            }
            for &next in e {
                if next == cur_vertex || used_vertices.contains(&next) {
                    continue;
                }
                used_edges.push(i);
                used_vertices.push(next);
                extend(h, start_vertex, next, used_edges, used_vertices, best);
                used_edges.pop();
                used_vertices.pop();
            }
        }
    }
    for first in 0..m {
        let e = &h.edges()[first];
        for &a in e {
            for &b in e {
                if a == b {
                    continue;
                }
                let mut used_edges = vec![first];
                let mut used_vertices = vec![a, b];
                extend(h, a, b, &mut used_edges, &mut used_vertices, &mut best);
            }
        }
    }
    best
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn connected_cover(n: usize, edges: &[&Vec<usize>]) -> bool {
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    let mut covered = vec![false; n];
    for e in edges {
        for &v in e.iter() {
            covered[v] = true;
            let (a, b) = (find(&mut comp, e[0]), find(&mut comp, v));
            comp[a] = b;
        }
    }
    let root = find(&mut comp, 0);
    covered.iter().all(|&c| c) && (0..n).all(|v| find(&mut comp, v) == root)
}

/// Isomorphism classes of connected linear `k`-uniform hypergraphs with `m`
/// edges on exactly `n` vertices: every `m`-set of `k`-subsets of `0..n` is
/// filtered, then grouped with [`brute_isomorphic`].
pub fn naive_classes(k: usize, m: usize, n: usize) -> Vec<Hypergraph> {
    let all = k_subsets(n, k);
    let mut reps: HashMap<Vec<usize>, Vec<Hypergraph>> = HashMap::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    fn go(
        from: usize,
        all: &[Vec<usize>],
        m: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        reps: &mut HashMap<Vec<usize>, Vec<Hypergraph>>,
    ) {
        if chosen.len() == m {
            let edges: Vec<&Vec<usize>> = chosen.iter().map(|&i| &all[i]).collect();
            if !connected_cover(n, &edges) {
                return;
            }
            let h = Hypergraph::from_edges(n, edges.into_iter().cloned().collect()).unwrap();
            let mut key = h.degrees();
            key.sort_unstable();
            let bucket = reps.entry(key).or_default();
            if !bucket.iter().any(|r| brute_isomorphic(r, &h)) {
                bucket.push(h);
            }
            return;
        }
        for i in from..all.len() {
            // linearity is hereditary, so failing subsets are cut early
            let linear = chosen.iter().all(|&j| all[j].iter().filter(|v| all[i].contains(v)).count() <= 1);
            if linear {
                chosen.push(i);
                go(i + 1, all, m, n, chosen, reps);
                chosen.pop();
            }
        }
    }
    go(0, &all, m, n, &mut chosen, &mut reps);
    reps.into_values().flatten().collect()
}

/// Random linear `k`-uniform hypergraph on `n` vertices: up to `attempts`
/// random `k`-sets, each kept if it leaves the edge set linear.
pub fn random_linear(rng: &mut impl Rng, n: usize, k: usize, attempts: usize) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let verts: Vec<usize> = (0..n).collect();
    for _ in 0..attempts {
        let mut e: Vec<usize> = verts.choose_multiple(rng, k).copied().collect();
        e.sort_unstable();
        if edges.iter().all(|f| f.iter().filter(|v| e.contains(v)).count() <= 1) {
            edges.push(e);
        }
    }
    Hypergraph::from_edges(n, edges).unwrap()
}

/// Random connected linear `k`-uniform hypergraph grown edge by edge; each
/// edge reuses one existing vertex, and with probability `close` a second
/// one when linearity allows.
pub fn random_connected(rng: &mut impl Rng, k: usize, m: usize, close: f64) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = vec![(0..k).collect()];
    let mut n = k;
    while edges.len() < m {
        let a = rng.gen_range(0..n);
        let mut e = vec![a];
        if rng.gen_bool(close) {
            let b = rng.gen_range(0..n);
            let shares = |x: usize, y: usize| edges.iter().any(|f| f.contains(&x) && f.contains(&y));
            if b != a && !shares(a, b) {
                e.push(b);
            }
        }
        while e.len() < k {
            e.push(n);
            n += 1;
        }
        e.sort_unstable();
        edges.push(e);
    }
    Hypergraph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Repeatedly removes a randomly chosen pendant edge (exactly `|e| - 1`
/// vertices of degree one) with its degree-one vertices, then renumbers the
/// remaining vertices in their original order.
pub fn strip_in_random_order(rng: &mut impl Rng, h: &Hypergraph) -> (Hypergraph, usize) {
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
    let mut removed = 0;
    loop {
        let mut deg = vec![0usize; h.vertex_count()];
        for e in &edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        let pendant: Vec<usize> = (0..edges.len())
            .filter(|&i| edges[i].iter().filter(|&&v| deg[v] == 1).count() + 1 == edges[i].len())
            .collect();
        let Some(&i) = pendant.choose(rng) else { break };
        edges.remove(i);
        removed += 1;
    }
    let mut alive: Vec<usize> = edges.iter().flatten().copied().collect();
    alive.sort_unstable();
    alive.dedup();
    let edges = edges
        .iter()
        .map(|e| e.iter().map(|v| alive.binary_search(v).unwrap()).collect())
        .collect();
    (Hypergraph::from_edges(alive.len(), edges).unwrap(), removed)
}

/// Random connected linear `k`-uniform hypergraph with `m >= cycles + 2`
/// edges and cycle deficit exactly `cycles`: `cycles` randomly placed edges
/// each reuse two existing vertices that share no edge.
pub fn random_with_cycles(rng: &mut impl Rng, k: usize, m: usize, cycles: usize) -> Hypergraph {
    'retry: loop {
        let mut steps: Vec<bool> = (1..m).map(|i| i <= cycles).collect();
        steps.shuffle(rng);
        let mut edges: Vec<Vec<usize>> = vec![(0..k).collect()];
        let mut n = k;
        for closing in steps {
            let mut e = vec![rng.gen_range(0..n)];
            if closing {
                let shares = |x: usize, y: usize| edges.iter().any(|f| f.contains(&x) && f.contains(&y));
                let partners: Vec<usize> = (0..n).filter(|&b| b != e[0] && !shares(e[0], b)).collect();
                let Some(&b) = partners.choose(rng) else { continue 'retry };
                e.push(b);
            }
            while e.len() < k {
                e.push(n);
                n += 1;
            }
            e.sort_unstable();
            edges.push(e);
        }
        return Hypergraph::from_edges(n, edges).unwrap();
    }
}
