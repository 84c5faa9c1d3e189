//! Brute-force oracles and seeded instance generators for small cases.
//!
//! Everything here works by full enumeration and is meant as an independent
//! cross-check of the matching-based implementations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{ElementSet, GroundSet};
use crate::matroid::RankOracle;
use crate::path_circular::{PathCircularInstance, SimpleGraph};
use crate::presentation::Presentation;
use crate::rng::SplitMix64;

pub const MAX_FORMULA_ELEMENTS: usize = 7;
pub const MAX_HALL_SETS: usize = 5;
pub const MAX_EXHAUSTIVE_ELEMENTS: usize = 6;

fn check_size(pres: &Presentation, max: usize) -> Result<()> {
    pres.ground().check_bound(max)
}

/// `min over Y ⊇ X of |Y| - |{i : A_i ⊆ Y}|`, the rank of `X` in `M[A]*`.
pub fn dual_rank_min_formula(pres: &Presentation, x: ElementSet) -> Result<usize> {
    check_size(pres, MAX_FORMULA_ELEMENTS)?;
    pres.ground().check(x)?;
    if crate::matroid::max_partial_transversal(pres, pres.ground().full())? != pres.len() {
        return Err(Error::Precondition(
            "the min formula needs a presentation with r(M) sets".into(),
        ));
    }
    let best = x
        .supersets_within(pres.ground().full())
        .map(|y| y.len() as i64 - pres.contained_in(y).count() as i64)
        .min()
        .expect("X itself is a superset");
    usize::try_from(best).map_err(|_| Error::Internal(format!("negative corank {best}")))
}

/// Whether `X` is independent in `M[A]*`: for every `J`,
/// `|X ∩ A(J)| <= |A(J)| - |J|` where `A(J)` is the union of the `A_j`, `j ∈ J`.
pub fn dual_independent_hall(pres: &Presentation, x: ElementSet) -> Result<bool> {
    if pres.len() > MAX_HALL_SETS {
        return Err(Error::Precondition(format!(
            "Hall system limited to {MAX_HALL_SETS} sets, got {}",
            pres.len()
        )));
    }
    pres.ground().check(x)?;
    Ok((0..1u64 << pres.len()).all(|j| {
        let u = pres.union_of(j);
        ((x & u).len() as i64) <= u.len() as i64 - j.count_ones() as i64
    }))
}

/// Whether `f` is the union of some subfamily of the presentation.
pub fn cyclic_flat_union_check(pres: &Presentation, f: ElementSet) -> Result<bool> {
    if pres.len() > 20 {
        return Err(Error::Precondition("too many sets to enumerate unions".into()));
    }
    pres.ground().check(f)?;
    Ok((0..1u64 << pres.len()).any(|j| pres.union_of(j) == f))
}

/// Independent sets of a matroid on at most 6 elements, as a bitmask over subset masks.
fn independence_mask<M: RankOracle + ?Sized>(m: &M) -> u64 {
    let mut mask = 0u64;
    for x in m.full().subsets() {
        if m.is_independent(x) {
            mask |= 1 << x.bits();
        }
    }
    mask
}

/// Partial transversals of `family + a`, given those of `family`.
fn extend_family(indep: u64, a: ElementSet) -> u64 {
    let mut out = indep;
    let mut rest = indep;
    while rest != 0 {
        let y = rest.trailing_zeros() as u64;
        rest &= rest - 1;
        for x in a.iter() {
            if y & (1 << x) == 0 {
                out |= 1 << (y | 1 << x);
            }
        }
    }
    out
}

/// Searches all presentations of `r` sets for one presenting `m`.
///
/// Candidate sets are the nonempty subsets of `E` minus the loops, chosen
/// as sorted multisets in ascending bitmask order; a partial family is
/// abandoned as soon as it makes some dependent set of `m` independent.
/// Returns the first presentation found, or `None`.
pub fn exhaustive_transversality<M: RankOracle + ?Sized>(
    m: &M,
    r: usize,
) -> Result<Option<Presentation>> {
    m.ground().check_bound(MAX_EXHAUSTIVE_ELEMENTS)?;
    if r != m.full_rank() {
        return Err(Error::Precondition(format!(
            "search size {r} differs from the rank {}",
            m.full_rank()
        )));
    }
    let target = independence_mask(m);
    let live = m.full() - m.loops();
    let candidates: Vec<ElementSet> = live.subsets().filter(|s| !s.is_empty()).collect();

    fn search(
        candidates: &[ElementSet],
        target: u64,
        start: usize,
        left: usize,
        indep: u64,
        chosen: &mut Vec<ElementSet>,
    ) -> bool {
        if left == 0 {
            return indep == target;
        }
        for (i, &a) in candidates.iter().enumerate().skip(start) {
            let next = extend_family(indep, a);
            if next & !target != 0 {
                continue;
            }
            chosen.push(a);
            if search(candidates, target, i, left - 1, next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(r);
    if search(&candidates, target, 0, r, 1, &mut chosen) {
        Ok(Some(Presentation::new(m.ground().clone(), chosen)?))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub seed: u64,
    pub n_elements: usize,
    pub n_sets: usize,
    /// Probability of each (element, set) incidence.
    pub density: f64,
}

impl InstanceSpec {
    /// A spec drawn from `seed`, with sizes in `1..=max_elements` and `1..=max_sets`
    /// and density in `[0.2, 0.8)`.
    pub fn draw(seed: u64, max_elements: usize, max_sets: usize) -> Self {
        let mut rng = SplitMix64::new(seed);
        InstanceSpec {
            seed: rng.next_u64(),
            n_elements: rng.range(1, max_elements),
            n_sets: rng.range(1, max_sets),
            density: 0.2 + 0.6 * rng.next_f64(),
        }
    }
}

/// Seed of case `i` in a run seeded with `seed`:
/// the first SplitMix64 output from `seed ^ (i * 0xD1B54A32D192ED03)`.
pub fn case_seed(seed: u64, i: u64) -> u64 {
    SplitMix64::new(seed ^ i.wrapping_mul(0xD1B5_4A32_D192_ED03)).next_u64()
}

/// Labels `a, b, c, ...` for random instances.
pub fn element_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match u8::try_from(i) {
            Ok(b) if b < 26 => char::from(b'a' + b).to_string(),
            _ => format!("e{i}"),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RandomPresentation {
    pub spec: InstanceSpec,
    pub presentation: Presentation,
    pub loops: ElementSet,
    pub coloops: ElementSet,
}

/// Sets are filled in order, each visiting elements in order and keeping one
/// with probability `density`.
pub fn random_presentation(spec: &InstanceSpec) -> Result<RandomPresentation> {
    if spec.n_elements > MAX_FORMULA_ELEMENTS || spec.n_sets > MAX_HALL_SETS {
        return Err(Error::Precondition(format!(
            "random instances are limited to {MAX_FORMULA_ELEMENTS} elements and {MAX_HALL_SETS} sets"
        )));
    }
    if !(0.0..=1.0).contains(&spec.density) {
        return Err(Error::Precondition(format!("density {} outside [0, 1]", spec.density)));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let ground = GroundSet::new(element_labels(spec.n_elements))?;
    let sets = (0..spec.n_sets)
        .map(|_| {
            (0..spec.n_elements)
                .filter(|_| rng.next_f64() < spec.density)
                .collect()
        })
        .collect();
    let presentation = Presentation::new(ground, sets)?;
    let m = crate::matroid::TransversalMatroid::new(presentation.clone());
    Ok(RandomPresentation {
        spec: *spec,
        presentation,
        loops: m.loops(),
        coloops: m.coloops(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathLimits {
    pub max_vertices: usize,
    pub edge_probability: f64,
    pub max_paths: usize,
    /// Longest path, counted in vertices.
    pub max_path_vertices: usize,
    pub null_probability: f64,
    /// Shortenings allowed while repairing one sample.
    pub repairs: usize,
    /// Samples drawn before giving up.
    pub retries: usize,
}

impl Default for PathLimits {
    fn default() -> Self {
        PathLimits {
            max_vertices: 6,
            edge_probability: 0.45,
            max_paths: 7,
            max_path_vertices: 4,
            null_probability: 0.08,
            repairs: 6,
            retries: 64,
        }
    }
}

/// A random valid path-circular instance.
///
/// Each sample draws a graph on `v0, v1, ...` with independent edges, then
/// paths as random walks (neighbours in ascending order). While a path has
/// a violating interior vertex its last vertex is dropped, up to
/// `limits.repairs` times; samples still invalid are discarded.
pub fn random_path_circular(seed: u64, limits: &PathLimits) -> Result<PathCircularInstance> {
    if limits.max_vertices == 0 || limits.max_path_vertices == 0 {
        return Err(Error::Precondition("limits must allow a vertex".into()));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..limits.retries {
        let n = rng.range(1, limits.max_vertices);
        let mut graph = SimpleGraph::new((0..n).map(|i| format!("v{i}")))?;
        for a in 0..n {
            for b in a + 1..n {
                if rng.chance(limits.edge_probability) {
                    graph.add_edge(a, b)?;
                }
            }
        }
        let n_paths = rng.range(1, limits.max_paths);
        let mut paths = Vec::with_capacity(n_paths);
        for _ in 0..n_paths {
            if rng.chance(limits.null_probability) {
                paths.push(Vec::new());
                continue;
            }
            let len = rng.range(1, limits.max_path_vertices);
            let mut path = vec![rng.below(n)];
            while path.len() < len {
                let last = *path.last().expect("nonempty");
                let next: Vec<usize> = graph
                    .neighbors(last)
                    .into_iter()
                    .filter(|v| !path.contains(v))
                    .collect();
                if next.is_empty() {
                    break;
                }
                path.push(next[rng.below(next.len())]);
            }
            paths.push(path);
        }
        let labels: Vec<String> = (0..n_paths).map(|i| format!("p{i}")).collect();
        let mut inst = PathCircularInstance::new(graph.clone(), paths, labels.clone())?;
        for _ in 0..limits.repairs {
            let Some(v) = inst.validate().violations.first().cloned() else {
                break;
            };
            let mut paths = inst.paths().to_vec();
            paths[v.path].pop();
            inst = PathCircularInstance::new(graph.clone(), paths, labels.clone())?;
        }
        if inst.validate().is_valid() {
            return Ok(inst);
        }
    }
    Err(Error::Precondition(format!(
        "no valid path-circular instance after {} samples",
        limits.retries
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{matroids_equal, MinorMatroid, TransversalMatroid};

    fn pres(elements: &[&str], sets: &[&[&str]]) -> Presentation {
        Presentation::from_labels(elements, sets).unwrap()
    }

    fn petals() -> Presentation {
        pres(
            &["e", "u", "v", "w", "x", "y", "z"],
            &[&["e", "u", "v"], &["e", "w", "x"], &["e", "y", "z"]],
        )
    }

    #[test]
    fn min_formula_examples() {
        let p = petals();
        let m = TransversalMatroid::new(p.clone());
        let e = p.ground().full();
        assert_eq!(dual_rank_min_formula(&p, e).unwrap(), 7 - 3);
        assert_eq!(dual_rank_min_formula(&p, ElementSet::EMPTY).unwrap(), 0);
        for x in e.subsets() {
            assert_eq!(dual_rank_min_formula(&p, x).unwrap(), m.dual_rank(x));
        }
        let redundant = pres(&["a", "b"], &[&["a", "b"], &["a", "b"], &["a", "b"]]);
        assert!(dual_rank_min_formula(&redundant, ElementSet::EMPTY).is_err());
    }

    #[test]
    fn hall_examples() {
        let p = petals();
        let m = TransversalMatroid::new(p.clone());
        assert!(dual_independent_hall(&p, ElementSet::EMPTY).unwrap());
        assert!(!dual_independent_hall(&p, p.ground().full()).unwrap());
        let x = p.ground().subset(&["u", "w", "y"]).unwrap();
        assert_eq!(dual_independent_hall(&p, x).unwrap(), m.dual_rank(x) == 3);
        for x in p.ground().full().subsets() {
            assert_eq!(dual_independent_hall(&p, x).unwrap(), m.dual_rank(x) == x.len());
        }
    }

    #[test]
    fn union_check() {
        let p = petals();
        assert!(cyclic_flat_union_check(&p, ElementSet::EMPTY).unwrap());
        let ab = p.ground().subset(&["e", "u", "v", "w", "x"]).unwrap();
        assert!(cyclic_flat_union_check(&p, ab).unwrap());
        let u = p.ground().subset(&["u"]).unwrap();
        assert!(!cyclic_flat_union_check(&p, u).unwrap());
    }

    #[test]
    fn exhaustive_search() {
        let u23 = TransversalMatroid::new(pres(&["a", "b", "c"], &[&["a", "b", "c"], &["a", "b", "c"]]));
        let found = exhaustive_transversality(&u23, 2).unwrap().unwrap();
        assert!(matroids_equal(&TransversalMatroid::new(found), &u23, 16).unwrap());

        let zero = TransversalMatroid::new(pres(&["a", "b"], &[]));
        assert_eq!(exhaustive_transversality(&zero, 0).unwrap().unwrap().len(), 0);

        let m = TransversalMatroid::new(petals());
        let minor = MinorMatroid::contract(&m, 0).unwrap();
        assert_eq!(minor.full_rank(), 2);
        assert!(exhaustive_transversality(&minor, 2).unwrap().is_none());

        assert!(exhaustive_transversality(&m, 3).is_err());
        assert!(exhaustive_transversality(&u23, 1).is_err());
    }

    #[test]
    fn random_presentations() {
        let spec = InstanceSpec { seed: 5, n_elements: 6, n_sets: 4, density: 0.5 };
        let a = random_presentation(&spec).unwrap();
        let b = random_presentation(&spec).unwrap();
        assert_eq!(a.presentation.to_json_string(), b.presentation.to_json_string());

        let full = random_presentation(&InstanceSpec { density: 1.0, ..spec }).unwrap();
        assert!(full.presentation.sets().iter().all(|&s| s == ElementSet::full(6)));
        let empty = random_presentation(&InstanceSpec { density: 0.0, ..spec }).unwrap();
        assert_eq!(empty.loops, ElementSet::full(6));

        assert!(random_presentation(&InstanceSpec { n_elements: 8, ..spec }).is_err());
        assert_eq!(InstanceSpec::draw(3, 7, 4), InstanceSpec::draw(3, 7, 4));
    }

    #[test]
    fn random_path_circular_instances() {
        let limits = PathLimits::default();
        for seed in 0..40 {
            let a = random_path_circular(seed, &limits).unwrap();
            assert!(a.validate().is_valid());
            assert_eq!(a, random_path_circular(seed, &limits).unwrap());
        }
        let short = PathLimits { max_path_vertices: 2, repairs: 0, retries: 1, ..limits };
        for seed in 0..40 {
            assert!(random_path_circular(seed, &short).is_ok());
        }
        let none = PathLimits { retries: 0, ..limits };
        assert!(matches!(random_path_circular(1, &none), Err(Error::Precondition(_))));
    }
}
