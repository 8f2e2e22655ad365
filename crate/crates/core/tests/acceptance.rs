//! Desk-scale acceptance checks. Run with `cargo test --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits nonzero on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{naive_classes, random_connected, random_linear, random_permutation};
use hyperzagreb::canon::{canonical_code_with, CanonLimits};
use hyperzagreb::constructors::{extremal_b, extremal_c, family_member};
use hyperzagreb::enumerate::enumerate_linear;
use hyperzagreb::formulas::{
    b_max, b_max_decreasing, c1_even, c1_odd, c1_odd_below_c2_odd, c2_odd, c3_pendant, c_minus_b_positive,
    Domain, ExactValue,
};
use hyperzagreb::verify::{verify_b_family, verify_c_family, verify_global, verify_min, verify_taxonomy};
use hyperzagreb::{
    classify_bicyclic, move_edges, CanonicalCode, EnumerationRequest, FamilySpec, Hypergraph, MoveSpec,
    StructureClass, Verdict, VerifyOptions, VerifyReport,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn code(h: &Hypergraph) -> CanonicalCode {
    canonical_code_with(h, CanonLimits { max_vertices: 64, ..CanonLimits::default() }).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

fn passed(r: &VerifyReport) -> Result<(), String> {
    ensure(r.verdict == Verdict::Pass, || {
        format!(
            "{} k={} m={} g={:?}: expected {:?}, observed {:?}, witness {:?}, notes {:?}",
            r.theorem,
            r.k,
            r.m,
            r.g,
            r.expected.as_ref().map(ToString::to_string),
            r.observed,
            r.witness_isomorphic,
            r.notes
        )
    })
}

fn exact(v: u64) -> ExactValue {
    ExactValue::int(v as i64)
}

fn minimum_bicyclic() -> Outcome {
    let started = Instant::now();
    let mut seen = Vec::new();
    for (m, want) in [(4, 22), (5, 27), (6, 32)] {
        let r = verify_min(3, m, None, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        passed(&r)?;
        ensure(r.observed == Some(want), || format!("m={m}: min {:?}, want {want}", r.observed))?;
        seen.push(format!("m={m}: {want} ({} minimizers)", r.extremal_classes));
    }
    within(started, Duration::from_secs(600))?;
    Ok(seen.join(", "))
}

fn global_maximum() -> Outcome {
    let started = Instant::now();
    let r = verify_global(3, 6, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    passed(&r)?;
    let named = code(&family_member(&FamilySpec::c(2, 1, 2, 1).with_pendants(2), 3).unwrap());
    let formula = c2_odd(3, 6, 3, Domain::Checked).unwrap();
    ensure(r.observed == Some(44) && formula == exact(44), || format!("observed {:?}, formula {formula}", r.observed))?;
    let witness = code(r.witness.as_ref().unwrap());
    ensure(r.extremal_classes == 1 && witness == named, || "maximizer is not C2(1,2,1) with 2 pendants".into())?;
    within(started, Duration::from_secs(600))?;
    Ok(format!("max 44 over {} classes, unique maximizer C2(1,2,1)+2", r.classes))
}

fn girth_four_maximum() -> Outcome {
    let r = verify_c_family(3, 6, 4, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    passed(&r)?;
    // cross-check against every girth-4 class, not just the theta-type ones
    let all = enumerate_linear(&EnumerationRequest::new(3, 6, StructureClass::Bicyclic).girth(4))
        .map_err(|e| e.to_string())?;
    let max = all.iter().map(Hypergraph::zagreb_index).max();
    let named = code(&family_member(&FamilySpec::c(1, 2, 2, 2), 3).unwrap());
    ensure(max == Some(36) && r.observed == Some(36), || format!("girth-4 max {max:?}"))?;
    ensure(c1_even(3, 6, 4, Domain::Checked).unwrap() == exact(36), || "c1_even(3,6,4) != 36".into())?;
    let maximizers: Vec<CanonicalCode> =
        all.iter().filter(|h| h.zagreb_index() == 36).map(code).collect();
    ensure(maximizers == vec![named], || format!("{} maximizers, C1(2,2,2) among them?", maximizers.len()))?;
    Ok(format!("max 36 over {} girth-4 classes, unique maximizer C1(2,2,2)", all.len()))
}

fn dumbbell_maximum() -> Outcome {
    let opts = VerifyOptions { max_m: Some(7), workers: None };
    let mut seen = Vec::new();
    for (m, want) in [(6, 38), (7, 49)] {
        let r = verify_b_family(3, m, 3, &opts).map_err(|e| e.to_string())?;
        passed(&r)?;
        ensure(r.observed == Some(want), || format!("m={m}: max {:?}, want {want}", r.observed))?;
        ensure(code(r.witness.as_ref().unwrap()) == code(&extremal_b(3, m, 3).unwrap()), || {
            format!("m={m}: least maximizer is not the named extremal")
        })?;
        seen.push(format!("m={m}: {want} over {} dumbbells", r.classes));
    }
    Ok(seen.join(", "))
}

fn formula_grid() -> Outcome {
    let started = Instant::now();
    let mut points = 0usize;
    let z = |h: Hypergraph| exact(h.zagreb_index());
    for k in 3..=5usize {
        for m in 1..=12usize {
            let (ki, mi) = (k as i64, m as i64);
            for g in 3..=m {
                let gi = g as i64;
                if 2 * g <= m {
                    let f = b_max(ki, mi, gi, Domain::Checked).unwrap();
                    ensure(f == z(extremal_b(k, m, g).unwrap()), || format!("b_max k={k} m={m} g={g}"))?;
                    points += 1;
                }
                if g + g / 2 <= m {
                    let f = if g % 2 == 0 {
                        c1_even(ki, mi, gi, Domain::Checked)
                    } else {
                        c2_odd(ki, mi, gi, Domain::Checked)
                    }
                    .unwrap();
                    ensure(f == z(extremal_c(k, m, g).unwrap()), || format!("c extremal k={k} m={m} g={g}"))?;
                    points += 1;
                }
                if g % 2 == 1 && g + g.div_ceil(2) <= m {
                    let spec = FamilySpec::c(1, g / 2, g.div_ceil(2), g.div_ceil(2));
                    let h = family_member(&spec.with_pendants(m - spec.base_edge_count()), k).unwrap();
                    let f = c1_odd(ki, mi, gi, Domain::Checked).unwrap();
                    ensure(f == z(h), || format!("c1_odd k={k} m={m} g={g}"))?;
                    points += 1;
                }
            }
            for p in 1..=m {
                for q in 2..=m {
                    for l in 1..=m {
                        let spec = FamilySpec::c(3, p, q, l);
                        if p + q + l > m || !spec.is_legal(k) {
                            continue;
                        }
                        let h = family_member(&spec.with_pendants(m - p - q - l), k).unwrap();
                        let f = c3_pendant(ki, mi, p as i64, q as i64, l as i64, Domain::Checked).unwrap();
                        ensure(f == z(h), || format!("c3_pendant k={k} m={m} ({p},{q},{l})"))?;
                        points += 1;
                    }
                }
            }
        }
    }
    within(started, Duration::from_secs(60))?;
    Ok(format!("{points} grid points agree"))
}

fn random_moves() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let (mut done, mut improving) = (0, 0);
    let mut attempts = 0;
    while done < 1000 {
        attempts += 1;
        ensure(attempts < 1_000_000, || format!("only {done} legal moves found"))?;
        let h = if rng.gen_bool(0.5) {
            let (n, k, tries) = (rng.gen_range(4..=30), rng.gen_range(3..=4), rng.gen_range(2..25));
            random_linear(&mut rng, n, k, tries)
        } else {
            let m = rng.gen_range(2..=14);
            random_connected(&mut rng, 3, m, 0.4)
        };
        let n = h.vertex_count();
        if n > 30 {
            continue;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let movable: Vec<usize> =
            (0..h.edge_count()).filter(|&i| h.edges()[i].contains(&u) && !h.edges()[i].contains(&v)).collect();
        if u == v || movable.is_empty() {
            continue;
        }
        let t = rng.gen_range(1..=movable.len());
        let spec = MoveSpec { u, v, moved_edges: movable[..t].to_vec() };
        let Ok((moved, delta)) = move_edges(&h, &spec) else { continue };
        // recompute both indices from the raw edge lists
        let sq = |g: &Hypergraph| -> i64 {
            let mut d = vec![0i64; g.vertex_count()];
            g.edges().iter().flatten().for_each(|&x| d[x] += 1);
            d.iter().map(|x| x * x).sum()
        };
        let du = h.edges().iter().filter(|e| e.contains(&u)).count() as i64;
        let dv = h.edges().iter().filter(|e| e.contains(&v)).count() as i64;
        let t = t as i64;
        let fresh = sq(&moved) - sq(&h);
        ensure(fresh == delta && delta == 2 * t * (t + dv - du), || {
            format!("move {spec:?} on {h}: reported {delta}, recomputed {fresh}")
        })?;
        if dv > du - t {
            ensure(delta > 0, || format!("non-positive delta under hypothesis: {spec:?} on {h}"))?;
            improving += 1;
        }
        done += 1;
    }
    Ok(format!("{done} moves exact, {improving} under the hypothesis all positive"))
}

fn enumerator_completeness() -> Outcome {
    let started = Instant::now();
    let mut seen = Vec::new();
    for class in [StructureClass::Hypertree, StructureClass::Unicyclic, StructureClass::Bicyclic] {
        for m in 1..=4 {
            let Some(n) = class.vertex_count(3, m) else { continue };
            let naive = if n >= 3 { naive_classes(3, m, n).len() } else { 0 };
            let fast = enumerate_linear(&EnumerationRequest::new(3, m, class)).map_err(|e| e.to_string())?.len();
            ensure(naive == fast, || format!("{class} m={m}: enumerator {fast}, oracle {naive}"))?;
            if naive > 0 {
                seen.push(format!("{class} m={m}: {naive}"));
            }
        }
    }
    within(started, Duration::from_secs(60))?;
    Ok(seen.join(", "))
}

fn formula_scans() -> Outcome {
    let mut points = 0;
    for k in 3..=5 {
        for m in 8..=40 {
            let b = b_max_decreasing(k, m).unwrap();
            ensure(b.holds(), || format!("b_max not decreasing at k={k} m={m}: {b:?}"))?;
            let (even, odd) = c_minus_b_positive(k, m).unwrap();
            ensure(odd.holds() && even.holds(), || {
                format!("difference sign at k={k} m={m}: even {even:?}, odd {odd:?}")
            })?;
            let c = c1_odd_below_c2_odd(k, m).unwrap();
            ensure(c.holds(), || format!("c1_odd - c2_odd at k={k} m={m}: {c:?}"))?;
            points += b.points + even.points + odd.points + c.points;
        }
    }
    Ok(format!("{points} scan points"))
}

fn canonical_codes() -> Outcome {
    let mut rng = StdRng::seed_from_u64(99);
    for s in 0..20 {
        let h = if s % 2 == 0 {
            let m = rng.gen_range(3..=7);
            random_connected(&mut rng, 3, m, 0.5)
        } else {
            let n = rng.gen_range(6..=15);
            random_linear(&mut rng, n, 3, 12)
        };
        ensure(h.vertex_count() <= 15, || "sample too large".into())?;
        let c = code(&h);
        for _ in 0..500 {
            let r = h.relabel(&random_permutation(&mut rng, h.vertex_count()));
            ensure(code(&r) == c, || format!("relabelling of {h} changed its code"))?;
        }
    }
    let mut specs = 0;
    for k in 3..=4 {
        for variant in 1..=3u8 {
            for p in 1..=8 {
                for q in 1..=8 {
                    for l in 0..=8 {
                        for spec in [FamilySpec::b(variant, p, q, l), FamilySpec::c(variant, p, q, l)] {
                            if p + q + l > 8 || !spec.is_legal(k) {
                                continue;
                            }
                            for pendants in [0, 2] {
                                let spec = spec.with_pendants(pendants);
                                let h = family_member(&spec, k).unwrap();
                                let h = h.relabel(&random_permutation(&mut rng, h.vertex_count()));
                                let r = classify_bicyclic(&h).map_err(|e| format!("{spec} k={k}: {e}"))?;
                                ensure(r.spec == spec && r.notes.is_empty(), || {
                                    format!("{spec} k={k} classified as {} {:?}", r.spec, r.notes)
                                })?;
                            }
                            specs += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("20x500 relabellings stable, {specs} specs round-trip"))
}

fn taxonomy() -> Outcome {
    let mut seen = Vec::new();
    for m in 4..=6 {
        let r = verify_taxonomy(3, m, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        passed(&r)?;
        seen.push(format!("m={m}: {}/{}", r.observed.unwrap_or(0), r.classes));
    }
    Ok(seen.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("minimum bicyclic Zagreb index, k=3, m=4..6", minimum_bicyclic),
        ("global maximum, k=3, m=6", global_maximum),
        ("girth-4 maximum, k=3, m=6", girth_four_maximum),
        ("dumbbell-type maximum, k=3, m=6,7, g=3", dumbbell_maximum),
        ("formula/construction agreement grid", formula_grid),
        ("edge-move delta on 1000 random moves", random_moves),
        ("enumerator vs naive oracle, k=3, m<=4", enumerator_completeness),
        ("monotonicity and sign scans, m=8..40", formula_scans),
        ("canonical codes and classification round trip", canonical_codes),
        ("taxonomy of bicyclic classes, k=3, m<=6", taxonomy),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = started.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{ms} ms]: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name} [{ms} ms]: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
