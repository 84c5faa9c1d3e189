//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use transversal::contraction::{minimal_presenting_graph, PresentingContext, PresentingGraph};
use transversal::oracle::exhaustive_transversality;
use transversal::path_circular::{bicircular, multipath};
use transversal::selftest::{
    contraction_agreement_suite, contraction_synthesis_suite, contraction_verdict_counts,
    cyclic_flat_suite, dual_independence_suite, dual_rank_suite, path_circular_suite, CheckReport,
};
use transversal::{
    contract_presentation, first_difference, is_contraction_transversal, is_cotransversal,
    Dual, ElementSet, Error, GroundSet, MinorMatroid, Presentation, RankOracle, SimpleGraph,
    TransversalMatroid, DEFAULT_MAX_GROUND as MAX,
};

const SEED: u64 = 1;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn pres(elements: &[&str], sets: &[&[&str]]) -> TransversalMatroid {
    TransversalMatroid::new(Presentation::from_labels(elements, sets).unwrap())
}

fn petals() -> TransversalMatroid {
    pres(
        &["e", "u", "v", "w", "x", "y", "z"],
        &[&["e", "u", "v"], &["e", "w", "x"], &["e", "y", "z"]],
    )
}

fn chain() -> TransversalMatroid {
    pres(
        &["e", "s", "t", "u", "v", "w", "x", "y", "z"],
        &[
            &["e", "s", "t", "u", "v"],
            &["e", "u", "v", "w", "x"],
            &["e", "w", "x", "y", "z"],
        ],
    )
}

fn repeated() -> TransversalMatroid {
    pres(&["e", "w", "x", "y", "z"], &[&["e", "w", "x", "y", "z"][..]; 4])
}

/// All edge subsets of the complete graph on `0..n`.
fn subgraphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0..1u32 << all.len())
        .map(|mask| {
            (0..all.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| all[k])
                .collect()
        })
        .collect()
}

fn criterion_1() -> Check {
    let m = petals();
    let g = ok(minimal_presenting_graph(&m, 0))?;
    ensure(g.edges == BTreeSet::from([(0, 1), (0, 2), (1, 2)]), || {
        format!("minimal graph {}", g.describe_edges())
    })?;
    let check = ok(is_contraction_transversal(&m, 0, MAX))?;
    ensure(!check.transversal, || "verdict is transversal".into())?;
    let minor = ok(MinorMatroid::contract(&m, 0))?;
    ensure(minor.ground().len() == 6 && minor.full_rank() == 2, || "M/e is not rank 2 on 6".into())?;
    let found = ok(exhaustive_transversality(&minor, 2))?;
    ensure(found.is_none(), || "exhaustive search found a presentation".into())?;
    let alpha = ok(is_cotransversal(&Dual(&minor), MAX))?;
    let (x, a) = alpha.witness.ok_or("no negative alpha witness")?;
    Ok(format!(
        "triangle; search finds nothing; alpha({}) = {a} in (M/e)*",
        minor.ground().format_set(x)
    ))
}

fn criterion_2() -> Check {
    let m = chain();
    let g = ok(minimal_presenting_graph(&m, 0))?;
    ensure(g.edges == BTreeSet::from([(0, 1), (1, 2)]), || {
        format!("minimal graph {}", g.describe_edges())
    })?;
    let ctx = ok(PresentingContext::new(&m, 0))?;
    let mut minimal = Vec::new();
    for edges in subgraphs(3) {
        let h = ok(PresentingGraph::new(0, vec![0, 1, 2], edges.iter().copied()))?;
        if ok(ctx.is_presenting(&h))? && ok(ctx.is_minimal(&h))? {
            minimal.push(edges);
        }
    }
    ensure(minimal == vec![vec![(0, 1), (1, 2)]], || format!("minimal subgraphs {minimal:?}"))?;
    let out = ok(contract_presentation(&m, 0, MAX))?;
    let text = out.presentation.describe();
    ensure(text == "({s,t,u,v,w,x}, {u,v,w,x,y,z})", || format!("presentation {text}"))?;
    let ours = TransversalMatroid::new(out.presentation.clone());
    let minor = ok(MinorMatroid::contract(&m, 0))?;
    let diff = ok(first_difference(&ours, &minor, MAX))?;
    ensure(diff.is_none(), || "differs from M/e".into())?;
    Ok(format!("unique minimal graph of 8; {text}; equal on 2^{} subsets", ours.ground().len()))
}

fn criterion_3() -> Check {
    let m = repeated();
    let check = ok(is_contraction_transversal(&m, 0, MAX))?;
    ensure(check.transversal, || "verdict is not transversal".into())?;
    let ctx = ok(PresentingContext::new(&m, 0))?;
    let mut trees = 0;
    for edges in subgraphs(4) {
        let h = ok(PresentingGraph::new(0, vec![0, 1, 2, 3], edges.iter().copied()))?;
        if !h.is_tree() {
            continue;
        }
        trees += 1;
        ensure(ok(ctx.is_presenting(&h))? && ok(ctx.is_minimal(&h))?, || {
            format!("spanning tree {} fails", h.describe_edges())
        })?;
    }
    ensure(trees == 16, || format!("{trees} spanning trees"))?;
    let out = ok(contract_presentation(&m, 0, MAX))?;
    let c = TransversalMatroid::new(out.presentation);
    ensure(c.ground().len() == 4 && c.full_rank() == 3, || "contraction is not rank 3 on 4".into())?;
    for x in c.full().subsets().filter(|x| x.len() == 3) {
        ensure(c.rank(x) == 3, || format!("r({}) != 3", c.ground().format_set(x)))?;
    }
    Ok("all 16 spanning trees minimal presenting; contraction is U(3,4)".into())
}

fn suite(report: CheckReport) -> Check {
    ensure(report.passed(), || {
        format!(
            "{}: {} of {} failed; {}",
            report.check,
            report.failures,
            report.instances,
            report.witness.clone().unwrap_or_default()
        )
    })?;
    Ok(format!("{} x{}", report.check, report.instances))
}

fn criterion_4() -> Check {
    let a = suite(dual_rank_suite(SEED, 200))?;
    let b = suite(dual_independence_suite(SEED, 200))?;
    Ok(format!("{a}, {b}"))
}

fn criterion_5() -> Check {
    suite(cyclic_flat_suite(SEED, 100))
}

fn criterion_6() -> Check {
    let counts = ok(contraction_verdict_counts(SEED, 100))?;
    ensure(counts.tree > 0 && counts.cycle > 0, || format!("one-sided draws {counts:?}"))?;
    let s = suite(contraction_agreement_suite(SEED, 100))?;
    Ok(format!("{s}; {} tree, {} cycle, {} loop/coloop", counts.tree, counts.cycle, counts.degenerate))
}

fn criterion_7() -> Check {
    let counts = ok(contraction_verdict_counts(SEED, 100))?;
    let s = suite(contraction_synthesis_suite(SEED, 100))?;
    for (name, m) in [("chain", chain()), ("repeated", repeated())] {
        ok(contract_presentation(&m, 0, MAX)).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{s}; {} positive verdicts synthesized and verified", counts.tree + counts.degenerate))
}

fn criterion_8() -> Check {
    suite(path_circular_suite(SEED, 100))
}

fn criterion_9() -> Check {
    let k3 = ok(SimpleGraph::new(["a", "b", "c"]))?;
    let k3 = ok(k3.with_edges(&[("a", "b"), ("a", "c"), ("b", "c")]))?;
    let b = ok(bicircular(&k3))?;
    let m = ok(b.matroid_of())?;
    let ground = ok(GroundSet::new(b.labels().iter().cloned()))?;
    let free = TransversalMatroid::new(ok(Presentation::new(
        ground,
        (0..3).map(ElementSet::singleton).collect(),
    ))?);
    ensure(ok(first_difference(&m, &free, MAX))?.is_none(), || "bicircular(K3) is not free".into())?;

    let k5 = ok(SimpleGraph::new(["a", "b", "c", "d", "f"]))?;
    let names = ["a", "b", "c", "d", "f"];
    let edges: Vec<(&str, &str)> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (names[i], names[j])))
        .collect();
    let k5 = ok(k5.with_edges(&edges))?;
    for g in [&k3, &k5] {
        let m = ok(ok(bicircular(g))?.matroid_of())?;
        for x in 0..m.ground().len() {
            let n = m.presentation().sets().iter().filter(|s| s.contains(x)).count();
            ensure(n <= 2, || format!("element in {n} sets"))?;
        }
    }

    for bad in [vec![(0, 3), (1, 2)], vec![(1, 1), (0, 2)], vec![(0, 1), (0, 1)], vec![(4, 1), (0, 0)]] {
        ensure(matches!(multipath(5, &bad), Err(Error::Precondition(_))), || {
            format!("multipath accepted {bad:?}")
        })?;
    }
    ok(multipath(5, &[(0, 2), (2, 4), (4, 1)]))?;
    Ok("bicircular(K3) is free; K3, K5 elements in <= 2 sets; nested intervals rejected".into())
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn criterion_10() -> Check {
    let bin = env!("CARGO_BIN_EXE_transversal");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dot = |tag: &str, run: usize| dir.path().join(format!("{tag}-{run}.dot")).to_string_lossy().into_owned();
    let runs: Vec<(&str, Vec<String>)> = vec![
        ("check-a", vec!["contract-check".into(), fixture("petals.json"), "--element".into(), "e".into(), "--dot".into()]),
        ("check-c", vec!["contract-check".into(), fixture("repeated.json"), "--element".into(), "e".into(), "--dot".into()]),
        ("contract-b", vec!["contract".into(), fixture("chain.json"), "--element".into(), "e".into(), "--dot".into()]),
        ("pc-contract", vec!["pc-contract".into(), fixture("path_graph.json"), "--element".into(), "p".into(), "--dot".into()]),
        ("pc-random", vec!["pc-build".into(), "--kind".into(), "random".into(), "--seed".into(), "5".into(), "--dot".into()]),
        ("alpha", vec!["alpha".into(), fixture("chain.json"), "--dual".into()]),
        ("maximal", vec!["maximal".into(), fixture("petals.json")]),
        ("selftest", vec!["selftest".into(), "--seed".into(), "3".into(), "--cases".into(), "20".into()]),
    ];
    let mut compared = 0;
    for (tag, args) in &runs {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let mut args = args.clone();
            let dot_path = (args.last().map(String::as_str) == Some("--dot")).then(|| dot(tag, run));
            if let Some(p) = &dot_path {
                args.push(p.clone());
            }
            let out = Command::new(bin).args(&args).output().map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("{tag} exited with {}", out.status))?;
            let dot_bytes = match &dot_path {
                Some(p) => std::fs::read(p).map_err(|e| e.to_string())?,
                None => Vec::new(),
            };
            outputs.push((out.stdout, dot_bytes));
        }
        ensure(outputs[0] == outputs[1], || format!("{tag} differs between runs"))?;
        ensure(!outputs[0].0.is_empty(), || format!("{tag} printed nothing"))?;
        compared += 1;
    }
    Ok(format!("{compared} commands byte-identical across runs, 5 with DOT files"))
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("three-petal cycle verdict", Duration::from_secs(1), criterion_1),
        ("chain tree verdict", Duration::from_secs(1), criterion_2),
        ("repeated-set verdict", Duration::from_secs(1), criterion_3),
        ("dual rank and dual independence cross-oracle", Duration::from_secs(30), criterion_4),
        ("dual cyclic flats and maximal presentation", Duration::from_secs(20), criterion_5),
        ("contraction verdict triple agreement", Duration::from_secs(60), criterion_6),
        ("synthesized presentation verification", Duration::from_secs(60), criterion_7),
        ("path-circular minors", Duration::from_secs(60), criterion_8),
        ("class constructors", Duration::from_secs(1), criterion_9),
        ("CLI determinism", Duration::from_secs(60), criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= *limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
