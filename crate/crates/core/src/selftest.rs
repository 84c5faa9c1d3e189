//! Seeded property suites comparing the main implementations with the oracles.
//!
//! Each suite draws `cases` instances from `case_seed(seed, i)` and reports
//! the number of failures with the first failing instance as witness.

use serde::Serialize;

use crate::contraction::{contract_presentation, is_contraction_transversal, PivotKind};
use crate::cotransversal::{alpha_presentation, cyclic_flats, is_cotransversal, is_cyclic_flat, maximal_presentation};
use crate::error::Result;
use crate::ground::{ElementSet, GroundSet, DEFAULT_MAX_GROUND};
use crate::matroid::{first_difference, normalize_presentation, Dual, MinorMatroid, RankOracle, TransversalMatroid};
use crate::oracle::{
    case_seed, cyclic_flat_union_check, element_labels, dual_independent_hall, dual_rank_min_formula,
    exhaustive_transversality, random_path_circular, random_presentation, InstanceSpec, PathLimits,
};
use crate::path_circular::PathCircularInstance;
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instances: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub cases: usize,
    pub checks: Vec<CheckReport>,
    pub failures: usize,
}

/// Outcome of one case: `Ok(None)` passes, `Ok(Some(msg))` fails.
type Case = Result<Option<String>>;

fn run_suite(name: &str, seed: u64, cases: usize, mut case: impl FnMut(u64) -> Case) -> CheckReport {
    let mut failures = 0;
    let mut witness = None;
    for i in 0..cases {
        let s = case_seed(seed, i as u64);
        let outcome = match case(s) {
            Ok(None) => continue,
            Ok(Some(msg)) => msg,
            Err(e) => format!("error: {e}"),
        };
        failures += 1;
        witness.get_or_insert_with(|| format!("case {i} (seed {s}): {outcome}"));
    }
    CheckReport {
        check: name.to_string(),
        instances: cases,
        failures,
        witness,
    }
}

/// A random presentation trimmed to `r(M)` sets.
fn normalized_instance(s: u64, max_elements: usize, max_sets: usize) -> Result<TransversalMatroid> {
    let spec = InstanceSpec::draw(s, max_elements, max_sets);
    let raw = TransversalMatroid::new(random_presentation(&spec)?.presentation);
    Ok(normalize_presentation(&raw, DEFAULT_MAX_GROUND)?.0)
}

/// Dual rank from matching against the superset min formula, on every subset.
pub fn dual_rank_suite(seed: u64, cases: usize) -> CheckReport {
    run_suite("dual-rank-min-formula", seed, cases, |s| {
        let m = normalized_instance(s, 7, 4)?;
        for x in m.full().subsets() {
            let formula = dual_rank_min_formula(m.presentation(), x)?;
            if formula != m.dual_rank(x) {
                return Ok(Some(format!(
                    "{}: r*({}) = {} but the formula gives {formula}",
                    m.presentation().describe(),
                    m.ground().format_set(x),
                    m.dual_rank(x)
                )));
            }
        }
        Ok(None)
    })
}

/// Dual independence from matching against the Hall inequalities, on every subset.
pub fn dual_independence_suite(seed: u64, cases: usize) -> CheckReport {
    run_suite("dual-independence-hall", seed, cases, |s| {
        let m = normalized_instance(s, 7, 4)?;
        for x in m.full().subsets() {
            let hall = dual_independent_hall(m.presentation(), x)?;
            if hall != (m.dual_rank(x) == x.len()) {
                return Ok(Some(format!(
                    "{}: {} Hall says {hall}",
                    m.presentation().describe(),
                    m.ground().format_set(x)
                )));
            }
        }
        Ok(None)
    })
}

/// Cyclic flats of the dual are unions of presentation sets, and the maximal
/// presentation consists of dual cyclic flats with multiplicity α.
pub fn cyclic_flat_suite(seed: u64, cases: usize) -> CheckReport {
    run_suite("cyclic-flats-and-maximal-presentation", seed, cases, |s| {
        let m = normalized_instance(s, 7, 4)?;
        let pres = m.presentation();
        let dual = Dual(&m);
        for f in cyclic_flats(&dual, DEFAULT_MAX_GROUND)? {
            if !cyclic_flat_union_check(pres, f)? {
                return Ok(Some(format!(
                    "{}: dual cyclic flat {} is not a union of sets",
                    pres.describe(),
                    m.ground().format_set(f)
                )));
            }
        }
        let maximal = maximal_presentation(&m)?;
        let mm = TransversalMatroid::new(maximal.clone());
        if let Some(x) = first_difference(&mm, &m, DEFAULT_MAX_GROUND)? {
            return Ok(Some(format!(
                "maximal presentation {} differs on {}",
                maximal.describe(),
                m.ground().format_set(x)
            )));
        }
        for &a in maximal.sets() {
            if !is_cyclic_flat(&dual, a)? {
                return Ok(Some(format!(
                    "maximal set {} is not a dual cyclic flat",
                    m.ground().format_set(a)
                )));
            }
        }
        let by_alpha = alpha_presentation(&dual, DEFAULT_MAX_GROUND)?;
        if by_alpha.sorted_sets() != maximal.sorted_sets() {
            return Ok(Some(format!(
                "maximal presentation {} but α multiplicities give {}",
                maximal.describe(),
                by_alpha.describe()
            )));
        }
        Ok(None)
    })
}

/// The draw for the contraction suites, on at most 7 elements, in one of three
/// equally likely modes: a uniform random presentation; the same with the
/// pivot added to every set; or 7 elements where the pivot is in each of three
/// sets, the other six are split into pairs, one pair per set, and every
/// further incidence is added with probability 0.05.
fn contraction_instance(s: u64) -> Result<(TransversalMatroid, usize)> {
    let mut rng = crate::rng::SplitMix64::new(s ^ 0xE1E);
    let mode = rng.below(3);
    let (pres, e) = if mode < 2 {
        let spec = InstanceSpec::draw(s, 7, 5);
        let pres = random_presentation(&spec)?.presentation;
        let e = rng.below(spec.n_elements);
        if mode == 1 {
            let sets = pres.sets().iter().map(|a| a.with(e)).collect();
            (Presentation::new(pres.ground().clone(), sets)?, e)
        } else {
            (pres, e)
        }
    } else {
        let n = 7;
        let e = rng.below(n);
        let mut others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
        for j in (1..others.len()).rev() {
            others.swap(j, rng.below(j + 1));
        }
        let mut sets: Vec<ElementSet> = others
            .chunks(2)
            .map(|c| ElementSet::from_indices(c.iter().copied()).with(e))
            .collect();
        for a in sets.iter_mut() {
            for x in 0..n {
                if rng.chance(0.05) {
                    *a = a.with(x);
                }
            }
        }
        (Presentation::new(GroundSet::new(element_labels(n))?, sets)?, e)
    };
    Ok((TransversalMatroid::new(pres), e))
}

/// Presenting-graph verdict, α criterion on `(M/e)*` and exhaustive search agree.
pub fn contraction_agreement_suite(seed: u64, cases: usize) -> CheckReport {
    run_suite("contraction-verdict-agreement", seed, cases, |s| {
        let (m, e) = contraction_instance(s)?;
        let verdict = is_contraction_transversal(&m, e, DEFAULT_MAX_GROUND)?.transversal;
        let minor = MinorMatroid::contract(&m, e)?;
        let alpha = is_cotransversal(&Dual(&minor), DEFAULT_MAX_GROUND)?.cotransversal;
        let search = exhaustive_transversality(&minor, minor.full_rank())?.is_some();
        if verdict == alpha && alpha == search {
            Ok(None)
        } else {
            Ok(Some(format!(
                "{} / {}: graph {verdict}, alpha {alpha}, search {search}",
                m.presentation().describe(),
                m.ground().label(e)
            )))
        }
    })
}

/// Whenever the verdict is positive the synthesized presentation equals `M/e`.
pub fn contraction_synthesis_suite(seed: u64, cases: usize) -> CheckReport {
    run_suite("contraction-synthesis", seed, cases, |s| {
        let (m, e) = contraction_instance(s)?;
        let check = is_contraction_transversal(&m, e, DEFAULT_MAX_GROUND)?;
        if !check.transversal {
            return Ok(None);
        }
        let out = contract_presentation(&m, e, DEFAULT_MAX_GROUND)?;
        let minor = MinorMatroid::contract(&m, e)?;
        let ours = TransversalMatroid::new(out.presentation.clone());
        Ok(first_difference(&ours, &minor, DEFAULT_MAX_GROUND)?.map(|x| {
            format!(
                "{} / {} gives {} which differs on {}",
                m.presentation().describe(),
                m.ground().label(e),
                out.presentation.describe(),
                ours.ground().format_set(x)
            )
        }))
    })
}

/// How the contraction-suite draws split by verdict.
pub fn contraction_verdict_counts(seed: u64, cases: usize) -> Result<VerdictCounts> {
    let mut counts = VerdictCounts::default();
    for i in 0..cases {
        let (m, e) = contraction_instance(case_seed(seed, i as u64))?;
        let check = is_contraction_transversal(&m, e, DEFAULT_MAX_GROUND)?;
        match (check.kind, check.transversal) {
            (PivotKind::Ordinary, true) => counts.tree += 1,
            (PivotKind::Ordinary, false) => counts.cycle += 1,
            _ => counts.degenerate += 1,
        }
    }
    Ok(counts)
}

/// Verdicts over a run of the contraction suites.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    /// Ordinary pivots whose minimal presenting graph is a tree.
    pub tree: usize,
    /// Ordinary pivots whose minimal presenting graph has a cycle.
    pub cycle: usize,
    /// Loops and coloops.
    pub degenerate: usize,
}

fn check_path_minors(inst: &PathCircularInstance) -> Result<Option<String>> {
    let m = inst.matroid_of()?;
    for (i, label) in inst.labels().iter().enumerate() {
        let deleted = inst.delete_path(label)?;
        if !deleted.validate().is_valid() {
            return Ok(Some(format!("{inst}: deleting {label} is invalid")));
        }
        let minor = MinorMatroid::delete(&m, i)?;
        if first_difference(&deleted.matroid_of()?, &minor, DEFAULT_MAX_GROUND)?.is_some() {
            return Ok(Some(format!("{inst}: deleting {label} changes the matroid")));
        }

        let contracted = inst.contract_path(label, DEFAULT_MAX_GROUND)?;
        if !contracted.validate().is_valid() {
            return Ok(Some(format!("{inst}: contracting {label} is invalid")));
        }
        let minor = MinorMatroid::contract(&m, i)?;
        if first_difference(&contracted.matroid_of()?, &minor, DEFAULT_MAX_GROUND)?.is_some() {
            return Ok(Some(format!("{inst}: contracting {label} gives {contracted}, not M/{label}")));
        }
        let trivial = inst.paths()[i].is_empty() || m.coloops().contains(i);
        if !trivial && !inst.path_is_minimal_presenting(label)? {
            return Ok(Some(format!("{inst}: {label} is not a minimal presenting graph")));
        }
    }
    Ok(None)
}

/// Deletion and contraction of every path in random path-circular instances.
pub fn path_circular_suite(seed: u64, cases: usize) -> CheckReport {
    let limits = PathLimits::default();
    run_suite("path-circular-minors", seed, cases, |s| {
        let inst = random_path_circular(s, &limits)?;
        check_path_minors(&inst)
    })
}

pub fn run_all(seed: u64, cases: usize) -> SelftestReport {
    let checks = vec![
        dual_rank_suite(seed, cases),
        dual_independence_suite(seed, cases),
        cyclic_flat_suite(seed, cases),
        contraction_agreement_suite(seed, cases),
        contraction_synthesis_suite(seed, cases),
        path_circular_suite(seed, cases),
    ];
    let failures = checks.iter().map(|c| c.failures).sum();
    SelftestReport {
        seed,
        cases,
        checks,
        failures,
    }
}
