//! Acceptance suite: one PASS/FAIL line per criterion, with wall time and limit.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use clusterqp::catalog::{
    all_entries, pentagon_step, verify_actions, verify_relations, verify_root_basis, CatalogEntry,
    Report,
};
use clusterqp::fano::{fano_polygon, seed_from_polygon, vector_multiset};
use clusterqp::qp6::{
    build_qp6_context, orbit_agreement, orbit_step_errors, qp6_maps, qp6_orbit, qp6_orbit_exact,
    verify_qp6_identities, Order, Qp6Params,
};
use clusterqp::symbolic::{triviality, EvalOptions};
use clusterqp::toric::{analyze, classify_type, TypeLabel, V2};

/// Relative tolerance between the float and exact qP6 pipelines.
const ORBIT_TOL: f64 = 1e-9;
const ORBIT_STEPS: usize = 100;
/// Length of the fully exact trajectory compared with the float one.
const EXACT_PREFIX: usize = 16;
const RELATION_LIMIT: Duration = Duration::from_secs(60);

type Outcome = Result<(), String>;

fn failures(rep: &Report) -> Outcome {
    let bad: Vec<String> = rep
        .failures()
        .map(|c| format!("{} {}: {}", rep.label, c.check, c.witness.clone().unwrap_or_default()))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join("; "))
    }
}

fn all_ok(results: impl IntoIterator<Item = Outcome>) -> Outcome {
    let errs: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs.join("; "))
    }
}

fn same_cycle(a: &[V2], b: &[V2]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|r| (0..a.len()).all(|i| a[(i + r) % a.len()] == b[i]))
}

fn entry(entries: &[CatalogEntry], l: TypeLabel) -> &CatalogEntry {
    entries.iter().find(|e| e.label == l).unwrap()
}

fn appendix_data(entries: &[CatalogEntry]) -> Outcome {
    let mut results: Vec<Outcome> = entries.iter().map(|e| failures(&verify_root_basis(e))).collect();
    let e8 = entry(entries, TypeLabel::E8);
    if e8.delta != [1, 1, 1, 1, 1, 1, 3, 2, 2, 2, 3] {
        results.push(Err(format!("E8 delta {:?}", e8.delta)));
    }
    for (l, norm) in [
        (TypeLabel::E2, -14),
        (TypeLabel::E1, -8),
        (TypeLabel::E1Prime, -2),
        (TypeLabel::E0, 0),
    ] {
        let e = entry(entries, l);
        let g = e.gram_computed().map_err(|x| x.to_string())?;
        let has = (0..g.rows()).any(|i| *g.get(i, i) == BigInt::from(norm));
        if !has {
            results.push(Err(format!("{l}: no root of norm {norm}")));
        }
    }
    all_ok(results)
}

fn classification(entries: &[CatalogEntry]) -> Outcome {
    let mut results = Vec::new();
    let mut labels = BTreeSet::new();
    for e in entries {
        let r = (|| -> Outcome {
            let l = classify_type(&e.vectors).map_err(|x| x.to_string())?;
            labels.insert(l);
            if l != e.label {
                return Err(format!("{} classified as {l}", e.label));
            }
            let a = analyze(&e.vectors, false).map_err(|x| x.to_string())?;
            let p = fano_polygon(&e.vectors, &a.null_root).map_err(|x| x.to_string())?;
            if !same_cycle(&p.vertices, &e.polygon) {
                return Err(format!("{} polygon {:?}", e.label, p.vertices));
            }
            let back = seed_from_polygon(&p).map_err(|x| x.to_string())?;
            if vector_multiset(&back) != vector_multiset(&e.vectors) {
                return Err(format!("{} round trip changes the vectors", e.label));
            }
            Ok(())
        })();
        results.push(r);
    }
    if labels.len() != TypeLabel::ALL.len() {
        results.push(Err(format!("{} distinct labels", labels.len())));
    }
    let pinned: [(TypeLabel, Vec<V2>); 3] = [
        (TypeLabel::E0, vec![[0, 1], [-1, -1], [1, 0]]),
        (TypeLabel::E5, vec![[1, 1], [-1, 1], [-1, -1], [1, -1]]),
        (TypeLabel::E8, vec![[3, 2], [-3, 2], [-3, -1], [3, -1]]),
    ];
    for (l, want) in pinned {
        let e = entry(entries, l);
        let a = analyze(&e.vectors, false).map_err(|x| x.to_string())?;
        let p = fano_polygon(&e.vectors, &a.null_root).map_err(|x| x.to_string())?;
        let got: BTreeSet<V2> = p.vertices.iter().copied().collect();
        if got != want.iter().copied().collect() {
            results.push(Err(format!("{l} vertices {:?}", p.vertices)));
        }
    }
    all_ok(results)
}

fn fan_invariance(entries: &[CatalogEntry]) -> Outcome {
    all_ok(entries.iter().map(|e| {
        let a = analyze(&e.vectors, false).map_err(|x| x.to_string())?;
        let b = analyze(&e.vectors, true).map_err(|x| x.to_string())?;
        if b.fan.len() != a.fan.len() + 1 {
            return Err(format!("{}: subdivision did not add a ray", e.label));
        }
        if a.null_root.c != b.null_root.c || a.null_root.delta != b.null_root.delta {
            return Err(format!("{}: c {:?} vs {:?}", e.label, a.null_root.c, b.null_root.c));
        }
        if a.kform.gram != b.kform.gram {
            return Err(format!("{}: K° Gram differs", e.label));
        }
        Ok(())
    }))
}

fn relation_suite(entries: &[CatalogEntry], opts: &EvalOptions) -> Outcome {
    let mut results = Vec::new();
    let mut count = 0;
    for e in entries {
        let rep = verify_relations(e, opts);
        count += rep.checks.len();
        results.push(failures(&rep));
        if let Some(c) = rep.checks.iter().find(|c| c.millis > RELATION_LIMIT.as_millis()) {
            results.push(Err(format!("{} {} took {} ms", e.label, c.check, c.millis)));
        }
    }
    let pentagon = triviality(&pentagon_step().power(5), opts).map_err(|x| x.to_string())?;
    if !pentagon.is_trivial() {
        results.push(Err(format!("pentagon: {pentagon:?}")));
    }
    let fourth = triviality(&pentagon_step().power(4), opts).map_err(|x| x.to_string())?;
    if fourth.is_trivial() {
        results.push(Err("pentagon step has order below five".into()));
    }
    println!("     {count} relation and order checks");
    all_ok(results)
}

fn actions(entries: &[CatalogEntry], opts: &EvalOptions) -> Outcome {
    all_ok(entries.iter().map(|e| failures(&verify_actions(e, opts))))
}

fn qp6(opts: &EvalOptions) -> Outcome {
    let ctx = build_qp6_context().map_err(|x| x.to_string())?;
    failures(&verify_qp6_identities(&ctx, opts))?;
    let maps = qp6_maps(&ctx, opts).map_err(|x| x.to_string())?;
    let mut worst_step: f64 = 0.0;
    let mut worst_prefix: f64 = 0.0;
    for (seed, order) in [(11, Order::C2First), (12, Order::C1First)] {
        let p = Qp6Params::random(seed);
        let traj = qp6_orbit(&ctx, &p, ORBIT_STEPS, order).map_err(|x| x.to_string())?;
        let q0 = traj[0].q;
        let q1 = traj[1].q;
        if (q0 * q1 - 1.0).abs() > ORBIT_TOL {
            return Err(format!("q not inverted: {q0} then {q1}"));
        }
        let errs = orbit_step_errors(&maps, &traj).map_err(|x| x.to_string())?;
        worst_step = errs.iter().copied().fold(worst_step, f64::max);
        let exact = qp6_orbit_exact(&maps, &p, EXACT_PREFIX, order).map_err(|x| x.to_string())?;
        worst_prefix = worst_prefix.max(orbit_agreement(&traj[..=EXACT_PREFIX], &exact));
    }
    println!(
        "     max per-step rel. error {worst_step:.2e} over {ORBIT_STEPS} steps, \
         max trajectory rel. error {worst_prefix:.2e} over {EXACT_PREFIX} exact steps (tol {ORBIT_TOL:.0e})"
    );
    if worst_step > ORBIT_TOL || worst_prefix > ORBIT_TOL {
        return Err("orbit tolerance exceeded".into());
    }
    Ok(())
}

fn properties() -> Outcome {
    use common::*;
    let named: Vec<(&str, Outcome)> = vec![
        ("mu+ mu- = id", run(seed_case(), mutation_round_trip)),
        ("mu mu = t_k", run(seed_case(), double_mutation_is_transvection)),
        ("iso-mutation exchange", run(symmetric_case(), iso_mutation_exchange)),
        ("H delta' = 0, sum c_i w_i = 0, delta^2 = 0", run(toric_case(), null_root_invariants)),
        ("qp_type_check vs minors", run(symmetric_small(), verdict_matches_minors)),
    ];
    all_ok(named.into_iter().map(|(n, r)| r.map_err(|e| format!("{n}: {e}"))))
}

fn main() -> ExitCode {
    let opts = EvalOptions::default();
    let t = Instant::now();
    let entries = all_entries();
    println!("catalog built in {} ms", t.elapsed().as_millis());

    type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("appendix data suite", Duration::from_secs(5), Box::new(|| appendix_data(&entries))),
        ("classification and polygons", Duration::from_secs(5), Box::new(|| classification(&entries))),
        ("fan invariance", Duration::from_secs(10), Box::new(|| fan_invariance(&entries))),
        ("relation suite", Duration::from_secs(600), Box::new(|| relation_suite(&entries, &opts))),
        ("actions on T_K", Duration::from_secs(120), Box::new(|| actions(&entries, &opts))),
        ("qP6 system", Duration::from_secs(120), Box::new(|| qp6(&opts))),
        ("property suites (100 cases each)", Duration::from_secs(60), Box::new(properties)),
    ];

    let mut summary = BTreeMap::new();
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut r = f();
        let el = t.elapsed();
        if r.is_ok() && el > *limit {
            r = Err(format!("over time limit of {} ms", limit.as_millis()));
        }
        let status = if r.is_ok() { "PASS" } else { "FAIL" };
        println!(
            "{status} [{}] {name} ({} ms, limit {} ms)",
            i + 1,
            el.as_millis(),
            limit.as_millis()
        );
        if let Err(e) = &r {
            println!("     {e}");
        }
        summary.insert(i + 1, r.is_ok());
    }
    let passed = summary.values().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", summary.len());
    if passed == summary.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
