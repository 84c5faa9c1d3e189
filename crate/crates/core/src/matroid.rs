//! Rank oracles: transversal matroids, minors, duals and tabulated ranks.

use crate::error::{Error, Result};
use crate::ground::{ElementSet, GroundSet};
use crate::matching::Incidence;
use crate::presentation::Presentation;

/// A matroid given by its rank function on a labelled ground set.
///
/// Implementors only provide `ground` and `rank`; everything else is derived
/// from them and may be overridden for speed.
pub trait RankOracle {
    fn ground(&self) -> &GroundSet;

    /// Rank of `x`. Callers must pass a subset of the ground set.
    fn rank(&self, x: ElementSet) -> usize;

    fn full(&self) -> ElementSet {
        self.ground().full()
    }

    fn full_rank(&self) -> usize {
        self.rank(self.full())
    }

    fn checked_rank(&self, x: ElementSet) -> Result<usize> {
        self.ground().check(x)?;
        Ok(self.rank(x))
    }

    fn is_independent(&self, x: ElementSet) -> bool {
        self.rank(x) == x.len()
    }

    /// Smallest flat containing `x`.
    fn closure(&self, x: ElementSet) -> ElementSet {
        let r = self.rank(x);
        (self.full() - x)
            .iter()
            .filter(|&y| self.rank(x.with(y)) == r)
            .fold(x, |acc, y| acc.with(y))
    }

    /// Rank in the dual matroid: `|X| + r(E - X) - r(E)`.
    fn dual_rank(&self, x: ElementSet) -> usize {
        let full = self.full();
        x.len() + self.rank(full - x) - self.full_rank()
    }

    fn dual_closure(&self, x: ElementSet) -> ElementSet {
        let r = self.dual_rank(x);
        (self.full() - x)
            .iter()
            .filter(|&y| self.dual_rank(x.with(y)) == r)
            .fold(x, |acc, y| acc.with(y))
    }

    fn is_flat(&self, x: ElementSet) -> bool {
        self.closure(x) == x
    }

    fn loops(&self) -> ElementSet {
        self.full()
            .iter()
            .filter(|&x| self.rank(ElementSet::singleton(x)) == 0)
            .collect()
    }

    fn coloops(&self) -> ElementSet {
        let full = self.full();
        let r = self.full_rank();
        full.iter()
            .filter(|&x| self.rank(full.without(x)) + 1 == r)
            .collect()
    }
}

impl<M: RankOracle + ?Sized> RankOracle for &M {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }
    fn rank(&self, x: ElementSet) -> usize {
        (**self).rank(x)
    }
    fn full_rank(&self) -> usize {
        (**self).full_rank()
    }
}

/// The dual matroid of `M`, viewed through `M`'s rank function.
#[derive(Clone, Debug)]
pub struct Dual<M>(pub M);

impl<M: RankOracle> RankOracle for Dual<M> {
    fn ground(&self) -> &GroundSet {
        self.0.ground()
    }

    fn rank(&self, x: ElementSet) -> usize {
        self.0.dual_rank(x)
    }

    fn full_rank(&self) -> usize {
        self.0.ground().len() - self.0.full_rank()
    }

    fn dual_rank(&self, x: ElementSet) -> usize {
        self.0.rank(x)
    }
}

/// Every subset's rank, precomputed. Used to make exhaustive scans cheap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    ground: GroundSet,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn from_oracle<M: RankOracle + ?Sized>(m: &M, max_ground: usize) -> Result<Self> {
        let ground = m.ground().clone();
        ground.check_bound(max_ground.min(24))?;
        let ranks = ground
            .full()
            .subsets()
            .map(|x| m.rank(x) as u8)
            .collect::<Vec<_>>();
        // subsets() of a full mask enumerates 0, 1, 2, ... in order.
        debug_assert_eq!(ranks.len(), 1usize << ground.len());
        Ok(RankTable { ground, ranks })
    }

    /// Builds a table from raw values, checking the matroid rank axioms.
    pub fn from_ranks(ground: GroundSet, ranks: Vec<u8>) -> Result<Self> {
        if ranks.len() != 1usize << ground.len() {
            return Err(Error::Precondition(format!(
                "rank table needs {} entries, got {}",
                1usize << ground.len(),
                ranks.len()
            )));
        }
        let table = RankTable { ground, ranks };
        if let Some(msg) = table.axiom_violation() {
            return Err(Error::Precondition(msg));
        }
        Ok(table)
    }

    /// First violation of normalization, unit increase or submodularity, if any.
    pub fn axiom_violation(&self) -> Option<String> {
        if self.ranks[0] != 0 {
            return Some("rank of the empty set is not 0".into());
        }
        let n = self.ground.len();
        for x in self.ground.full().subsets() {
            for y in (self.ground.full() - x).iter() {
                let d = self.rank(x.with(y)) as isize - self.rank(x) as isize;
                if !(0..=1).contains(&d) {
                    return Some(format!("unit increase fails at {x:?} + {y}"));
                }
            }
        }
        for a in 0..(1u64 << n) {
            for b in 0..(1u64 << n) {
                let (sa, sb) = (ElementSet::from_bits(a), ElementSet::from_bits(b));
                if self.rank(sa | sb) + self.rank(sa & sb) > self.rank(sa) + self.rank(sb) {
                    return Some(format!("submodularity fails at {sa:?}, {sb:?}"));
                }
            }
        }
        None
    }
}

impl RankOracle for RankTable {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, x: ElementSet) -> usize {
        self.ranks[x.bits() as usize] as usize
    }
}

/// `M[A]`: independent sets are the partial transversals of the presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalMatroid {
    presentation: Presentation,
    incidence: Incidence,
    full_rank: usize,
}

impl TransversalMatroid {
    pub fn new(presentation: Presentation) -> Self {
        let incidence = Incidence::new(presentation.ground().len(), presentation.sets());
        let full_rank = incidence.matching_size(presentation.ground().full());
        TransversalMatroid {
            presentation,
            incidence,
            full_rank,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn into_presentation(self) -> Presentation {
        self.presentation
    }

    pub fn set(&self, i: usize) -> ElementSet {
        self.presentation.set(i)
    }

    pub fn n_sets(&self) -> usize {
        self.presentation.len()
    }

    pub fn incidence(&self) -> &Incidence {
        &self.incidence
    }

    /// `|A| = r(M)`, the hypothesis of most structural results here.
    pub fn is_rank_sized(&self) -> bool {
        self.n_sets() == self.full_rank
    }
}

impl RankOracle for TransversalMatroid {
    fn ground(&self) -> &GroundSet {
        self.presentation.ground()
    }

    fn rank(&self, x: ElementSet) -> usize {
        debug_assert!(self.ground().contains_set(x));
        self.incidence.matching_size(x)
    }

    fn full_rank(&self) -> usize {
        self.full_rank
    }
}

/// The minor `M \ D / C` of a base matroid, on the ground set `E - D - C`.
#[derive(Clone, Debug)]
pub struct MinorMatroid<M> {
    base: M,
    deleted: ElementSet,
    contracted: ElementSet,
    ground: GroundSet,
    /// Base position of each minor element.
    positions: Vec<usize>,
    contracted_rank: usize,
}

impl<M: RankOracle> MinorMatroid<M> {
    pub fn new(base: M, deleted: ElementSet, contracted: ElementSet) -> Result<Self> {
        base.ground().check(deleted)?;
        base.ground().check(contracted)?;
        if !(deleted & contracted).is_empty() {
            return Err(Error::Precondition(
                "deleted and contracted sets must be disjoint".into(),
            ));
        }
        let keep = base.full() - deleted - contracted;
        let (ground, positions) = base.ground().restrict(keep);
        let contracted_rank = base.rank(contracted);
        Ok(MinorMatroid {
            base,
            deleted,
            contracted,
            ground,
            positions,
            contracted_rank,
        })
    }

    pub fn delete(base: M, element: usize) -> Result<Self> {
        Self::new(base, ElementSet::singleton(element), ElementSet::EMPTY)
    }

    pub fn contract(base: M, element: usize) -> Result<Self> {
        Self::new(base, ElementSet::EMPTY, ElementSet::singleton(element))
    }

    pub fn base(&self) -> &M {
        &self.base
    }

    pub fn deleted(&self) -> ElementSet {
        self.deleted
    }

    pub fn contracted(&self) -> ElementSet {
        self.contracted
    }

    /// Translate a subset of the minor's ground set into base positions.
    pub fn to_base(&self, x: ElementSet) -> ElementSet {
        x.iter().map(|i| self.positions[i]).collect()
    }
}

impl<M: RankOracle> RankOracle for MinorMatroid<M> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, x: ElementSet) -> usize {
        self.base.rank(self.to_base(x) | self.contracted) - self.contracted_rank
    }
}

/// Size of a maximum matching of `x` into the sets of `pres`; equals `r_{M[A]}(x)`.
pub fn max_partial_transversal(pres: &Presentation, x: ElementSet) -> Result<usize> {
    pres.ground().check(x)?;
    Ok(Incidence::new(pres.ground().len(), pres.sets()).matching_size(x))
}

/// Whether every set of `pres` can be matched to a distinct element.
pub fn has_transversal(pres: &Presentation) -> bool {
    let inc = Incidence::new(pres.ground().len(), pres.sets());
    inc.matching_size(pres.ground().full()) == pres.len()
}

/// `M | X`, presented by `(A_1 ∩ X, ..., A_r ∩ X)`.
pub fn restrict(m: &TransversalMatroid, keep: ElementSet) -> Result<TransversalMatroid> {
    m.ground().check(keep)?;
    Ok(TransversalMatroid::new(m.presentation().restrict(keep)))
}

/// Compares two matroids subset by subset.
///
/// The ground sets must carry the same labels; declaration order may differ.
pub fn matroids_equal<A, B>(a: &A, b: &B, max_ground: usize) -> Result<bool>
where
    A: RankOracle + ?Sized,
    B: RankOracle + ?Sized,
{
    Ok(first_difference(a, b, max_ground)?.is_none())
}

/// The first subset (of `a`'s ground set) on which the ranks differ.
pub fn first_difference<A, B>(a: &A, b: &B, max_ground: usize) -> Result<Option<ElementSet>>
where
    A: RankOracle + ?Sized,
    B: RankOracle + ?Sized,
{
    let (ga, gb) = (a.ground(), b.ground());
    ga.check_bound(max_ground)?;
    if ga.len() != gb.len() {
        return Err(Error::GroundMismatch);
    }
    let map = ga
        .labels()
        .iter()
        .map(|l| gb.position(l).ok_or(Error::GroundMismatch))
        .collect::<Result<Vec<_>>>()?;
    let identity = map.iter().enumerate().all(|(i, &j)| i == j);
    for x in ga.full().subsets() {
        let y = if identity {
            x
        } else {
            x.iter().map(|i| map[i]).collect()
        };
        if a.rank(x) != b.rank(y) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// `(loops, coloops)`.
pub fn loops_and_coloops<M: RankOracle + ?Sized>(m: &M) -> (ElementSet, ElementSet) {
    (m.loops(), m.coloops())
}

/// A presentation of `M` with exactly `r(M)` sets.
///
/// Empty sets are dropped first. If more than `r(M)` sets remain, the
/// lexicographically first `r(M)`-subset of indices presenting the same
/// matroid is chosen. Returns the new matroid and the kept indices into the
/// original presentation.
pub fn normalize_presentation(
    m: &TransversalMatroid,
    max_ground: usize,
) -> Result<(TransversalMatroid, Vec<usize>)> {
    let r = m.full_rank();
    if m.n_sets() == r {
        return Ok((m.clone(), (0..r).collect()));
    }
    let nonempty: Vec<usize> = (0..m.n_sets()).filter(|&i| !m.set(i).is_empty()).collect();
    if nonempty.len() == r {
        return Ok((
            TransversalMatroid::new(m.presentation().select(&nonempty)),
            nonempty,
        ));
    }
    m.ground().check_bound(max_ground)?;
    let table = RankTable::from_oracle(m, max_ground)?;
    for combo in Combinations::new(nonempty.len(), r) {
        let kept: Vec<usize> = combo.iter().map(|&c| nonempty[c]).collect();
        let candidate = TransversalMatroid::new(m.presentation().select(&kept));
        if candidate.full_rank() == r && matroids_equal(&candidate, &table, max_ground)? {
            return Ok((candidate, kept));
        }
    }
    Err(Error::Internal(format!(
        "no {r}-subset of the {} nonempty sets presents the matroid",
        nonempty.len()
    )))
}

/// `k`-subsets of `0..n` in lexicographic order.
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: if k <= n { Some((0..k).collect()) } else { None },
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(cur)
    }
}
