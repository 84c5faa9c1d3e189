//! Cyclic flats, Mason's α function and the co-transversality criterion.
//!
//! A matroid is co-transversal (the dual of a transversal matroid) exactly
//! when `α(X) >= 0` for every subset `X`, where
//!
//! ```text
//! α(X) = |X| - r(X) - Σ α(F)   over cyclic flats F ⊊ X
//! ```
//!
//! For a co-transversal matroid, each cyclic flat `F` appears exactly `α(F)`
//! times in the maximal presentation of the dual.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{ElementSet, GroundSet};
use crate::matroid::{matroids_equal, Dual, RankOracle, RankTable, TransversalMatroid};
use crate::presentation::Presentation;

/// Flats ordered by cardinality, then by ascending bitmask value.
pub fn flat_order(a: &ElementSet, b: &ElementSet) -> std::cmp::Ordering {
    (a.len(), a.bits()).cmp(&(b.len(), b.bits()))
}

/// A flat with no coloops in its restriction, i.e. a union of circuits.
pub fn is_cyclic_flat<M: RankOracle + ?Sized>(m: &M, f: ElementSet) -> Result<bool> {
    m.ground().check(f)?;
    let r = m.rank(f);
    if m.closure(f) != f {
        return Ok(false);
    }
    Ok(f.iter().all(|x| m.rank(f.without(x)) == r))
}

/// All cyclic flats, by exhaustive search over subsets.
pub fn cyclic_flats<M: RankOracle + ?Sized>(m: &M, max_ground: usize) -> Result<Vec<ElementSet>> {
    let table = RankTable::from_oracle(m, max_ground)?;
    Ok(cyclic_flats_of_table(&table))
}

fn cyclic_flats_of_table(t: &RankTable) -> Vec<ElementSet> {
    let full = t.full();
    let mut flats: Vec<ElementSet> = full
        .subsets()
        .filter(|&x| {
            let r = t.rank(x);
            (full - x).iter().all(|y| t.rank(x.with(y)) > r)
                && x.iter().all(|y| t.rank(x.without(y)) == r)
        })
        .collect();
    flats.sort_by(flat_order);
    flats
}

/// Cyclic flats of `M[A]*`, testing only unions of sets of `A`.
///
/// Every cyclic flat of the dual of a transversal matroid is such a union,
/// so the candidate list is complete.
pub fn cyclic_flats_of_dual(m: &TransversalMatroid) -> Result<Vec<ElementSet>> {
    let pres = m.presentation();
    if pres.len() > 24 {
        return Err(Error::GroundTooLarge {
            size: pres.len(),
            max: 24,
        });
    }
    let dual = Dual(m);
    let mut candidates: Vec<ElementSet> = (0..(1u64 << pres.len()))
        .map(|j| pres.union_of(j))
        .collect();
    candidates.sort_by(flat_order);
    candidates.dedup();
    let mut out = Vec::new();
    for f in candidates {
        if is_cyclic_flat(&dual, f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// α on the cyclic flats of a matroid, in flat order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    entries: Vec<(ElementSet, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaEntryJson {
    pub flat: Vec<String>,
    pub alpha: i64,
}

impl AlphaTable {
    pub fn entries(&self) -> &[(ElementSet, i64)] {
        &self.entries
    }

    pub fn get(&self, f: ElementSet) -> Option<i64> {
        self.entries
            .binary_search_by(|(g, _)| flat_order(g, &f))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn flats(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.entries.iter().map(|(f, _)| *f)
    }

    /// Sum of α over cyclic flats properly contained in `x`.
    fn below(&self, x: ElementSet) -> i64 {
        self.entries
            .iter()
            .filter(|(f, _)| f.is_proper_subset(x))
            .map(|(_, a)| a)
            .sum()
    }

    pub fn to_json(&self, ground: &GroundSet) -> Vec<AlphaEntryJson> {
        self.entries
            .iter()
            .map(|&(f, alpha)| AlphaEntryJson {
                flat: ground.names(f),
                alpha,
            })
            .collect()
    }
}

/// Builds the α table over all cyclic flats of `m`.
pub fn alpha_table<M: RankOracle + ?Sized>(m: &M, max_ground: usize) -> Result<AlphaTable> {
    let t = RankTable::from_oracle(m, max_ground)?;
    Ok(alpha_table_of(&t))
}

fn alpha_table_of(t: &RankTable) -> AlphaTable {
    let mut table = AlphaTable {
        entries: Vec::new(),
    };
    // Flat order lists every proper subset before its supersets.
    for f in cyclic_flats_of_table(t) {
        let a = f.len() as i64 - t.rank(f) as i64 - table.below(f);
        table.entries.push((f, a));
    }
    table
}

/// `α_M(x)` given the α values of the cyclic flats of `m`.
pub fn alpha<M: RankOracle + ?Sized>(m: &M, x: ElementSet, memo: &AlphaTable) -> Result<i64> {
    m.ground().check(x)?;
    if let Some(a) = memo.get(x) {
        return Ok(a);
    }
    Ok(x.len() as i64 - m.rank(x) as i64 - memo.below(x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotransversalVerdict {
    pub cotransversal: bool,
    /// A smallest subset with negative α (ties broken by bitmask), with its α.
    pub witness: Option<(ElementSet, i64)>,
    pub table: AlphaTable,
}

/// Checks `α(X) >= 0` on every subset of the ground set.
pub fn is_cotransversal<M: RankOracle + ?Sized>(
    m: &M,
    max_ground: usize,
) -> Result<CotransversalVerdict> {
    let t = RankTable::from_oracle(m, max_ground)?;
    let table = alpha_table_of(&t);
    let mut subsets: Vec<ElementSet> = t.full().subsets().collect();
    subsets.sort_by(flat_order);
    let witness = subsets.into_iter().find_map(|x| {
        let a = match table.get(x) {
            Some(a) => a,
            None => x.len() as i64 - t.rank(x) as i64 - table.below(x),
        };
        (a < 0).then_some((x, a))
    });
    Ok(CotransversalVerdict {
        cotransversal: witness.is_none(),
        witness,
        table,
    })
}

/// A presentation of `M*` in which each cyclic flat `F` of `M` appears `α(F)` times.
///
/// Coloops of `M` lie in no cyclic flat, so they end up in no set: they are
/// loops of `M*`.
pub fn alpha_presentation<M: RankOracle + ?Sized>(m: &M, max_ground: usize) -> Result<Presentation> {
    let verdict = is_cotransversal(m, max_ground)?;
    if let Some((x, a)) = verdict.witness {
        return Err(Error::NotCotransversal {
            witness: m.ground().format_set(x),
            alpha: a,
        });
    }
    let mut sets = Vec::new();
    for &(f, a) in verdict.table.entries() {
        sets.extend(std::iter::repeat_n(f, a as usize));
    }
    let dual_rank = m.ground().len() - m.full_rank();
    if sets.len() != dual_rank {
        return Err(Error::Internal(format!(
            "α multiplicities sum to {} but r(M*) = {dual_rank}",
            sets.len()
        )));
    }
    Presentation::new(m.ground().clone(), sets)
}

/// `(cl*(A_1), ..., cl*(A_r))`, the unique maximal presentation.
pub fn maximal_presentation(m: &TransversalMatroid) -> Result<Presentation> {
    if !m.is_rank_sized() {
        return Err(Error::Precondition(format!(
            "presentation has {} sets but the matroid has rank {}; normalize first",
            m.n_sets(),
            m.full_rank()
        )));
    }
    let sets = m
        .presentation()
        .sets()
        .iter()
        .map(|&a| m.dual_closure(a))
        .collect();
    Presentation::new(m.ground().clone(), sets)
}

/// Replaces `A_i` by `b`, after checking that the swap cannot change the matroid.
///
/// Requires `cl*(b) = cl*(A_i)` and, for every `B ⊇ b` not containing `A_i`,
/// `r*(B) < |B| - |{j : A_j ⊆ B}|`. The result is verified against `m`.
pub fn exchange_set(
    m: &TransversalMatroid,
    i: usize,
    b: ElementSet,
    max_ground: usize,
) -> Result<Presentation> {
    m.ground().check(b)?;
    m.ground().check_bound(max_ground)?;
    if i >= m.n_sets() {
        return Err(Error::Precondition(format!("no set with index {i}")));
    }
    if !m.is_rank_sized() {
        return Err(Error::Precondition(
            "exchange requires a presentation with r(M) sets".into(),
        ));
    }
    let g = m.ground();
    let a_i = m.set(i);
    if m.dual_closure(b) != m.dual_closure(a_i) {
        return Err(Error::ExchangeRejected(format!(
            "cl*({}) != cl*({})",
            g.format_set(b),
            g.format_set(a_i)
        )));
    }
    let pres = m.presentation();
    for sup in b.supersets_within(g.full()) {
        if a_i.is_subset(sup) {
            continue;
        }
        let contained = pres.contained_in(sup).count();
        let bound = sup.len() as isize - contained as isize;
        if m.dual_rank(sup) as isize >= bound {
            return Err(Error::ExchangeRejected(format!(
                "r*({}) = {} is not below |B| - |A(B)| = {bound}",
                g.format_set(sup),
                m.dual_rank(sup)
            )));
        }
    }
    let mut sets = pres.sets().to_vec();
    sets[i] = b;
    let out = Presentation::new(g.clone(), sets)?;
    if !matroids_equal(&TransversalMatroid::new(out.clone()), m, max_ground)? {
        return Err(Error::Internal(
            "validated set exchange changed the matroid".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::DEFAULT_MAX_GROUND as MAX;

    fn pres(elements: &[&str], sets: &[&[&str]]) -> TransversalMatroid {
        TransversalMatroid::new(Presentation::from_labels(elements, sets).unwrap())
    }

    /// Cycle matroid of K4 on edges ab, ac, ad, bc, bd, cd, from spanning-forest sizes.
    fn k4() -> RankTable {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let ground = GroundSet::new(["ab", "ac", "ad", "bc", "bd", "cd"]).unwrap();
        let ranks = (0..64u64)
            .map(|bits| {
                let mut parent = [0usize, 1, 2, 3];
                fn find(p: &mut [usize; 4], x: usize) -> usize {
                    if p[x] == x { x } else { let r = find(p, p[x]); p[x] = r; r }
                }
                let mut r = 0;
                for (k, &(a, b)) in edges.iter().enumerate() {
                    if bits & (1 << k) != 0 {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        if ra != rb {
                            parent[ra] = rb;
                            r += 1;
                        }
                    }
                }
                r
            })
            .collect();
        RankTable::from_ranks(ground, ranks).unwrap()
    }

    fn u24() -> TransversalMatroid {
        pres(&["a", "b", "c", "d"], &[&["a", "b", "c", "d"], &["a", "b", "c", "d"]])
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

    #[test]
    fn cyclic_flat_examples() {
        let u = u24();
        assert!(is_cyclic_flat(&u, ElementSet::EMPTY).unwrap());
        assert!(!is_cyclic_flat(&u, ElementSet::singleton(0)).unwrap());
        let a = petals();
        assert!(is_cyclic_flat(&a, a.ground().subset(&["u", "v"]).unwrap()).unwrap());

        assert_eq!(cyclic_flats(&u, MAX).unwrap(), vec![ElementSet::EMPTY, u.full()]);
        let k = k4();
        let flats = cyclic_flats(&k, MAX).unwrap();
        assert_eq!(flats.len(), 6);
        assert_eq!(flats[0], ElementSet::EMPTY);
        assert!(flats[1..5].iter().all(|f| f.len() == 3 && k.rank(*f) == 2));
        assert_eq!(flats[5], k.full());
        let free = pres(&["a", "b", "c"], &[&["a"], &["b"], &["c"]]);
        assert_eq!(cyclic_flats(&free, MAX).unwrap(), vec![ElementSet::EMPTY]);
    }

    #[test]
    fn alpha_examples() {
        let k = k4();
        let t = alpha_table(&k, MAX).unwrap();
        assert_eq!(alpha(&k, ElementSet::EMPTY, &t).unwrap(), 0);
        let tri = k.ground().subset(&["ab", "ac", "bc"]).unwrap();
        assert_eq!(alpha(&k, tri, &t).unwrap(), 1);
        assert_eq!(alpha(&k, k.full(), &t).unwrap(), -1);

        let u = u24();
        let t = alpha_table(&u, MAX).unwrap();
        assert_eq!(alpha(&u, u.full(), &t).unwrap(), 2);
    }

    #[test]
    fn cotransversality() {
        assert!(is_cotransversal(&u24(), MAX).unwrap().cotransversal);
        let k = is_cotransversal(&k4(), MAX).unwrap();
        assert!(!k.cotransversal);
        assert_eq!(k.witness, Some((k4().full(), -1)));
        let free = pres(&["a", "b", "c"], &[&["a"], &["b"], &["c"]]);
        assert!(is_cotransversal(&free, MAX).unwrap().cotransversal);
    }

    #[test]
    fn alpha_presentations() {
        let u = u24();
        let p = alpha_presentation(&u, MAX).unwrap();
        assert_eq!(p.sets(), &[u.full(), u.full()]);

        let free = pres(&["a", "b", "c"], &[&["a"], &["b"], &["c"]]);
        let p = alpha_presentation(&free, MAX).unwrap();
        assert!(p.is_empty());

        let err = alpha_presentation(&k4(), MAX).unwrap_err();
        assert!(matches!(err, Error::NotCotransversal { alpha: -1, .. }));

        let b = chain();
        let p = alpha_presentation(&Dual(&b), MAX).unwrap();
        let maximal = maximal_presentation(&b).unwrap();
        assert_eq!(p.sorted_sets(), maximal.sorted_sets());
        assert!(matroids_equal(&TransversalMatroid::new(p), &b, MAX).unwrap());
    }

    #[test]
    fn maximal_presentations() {
        let c = pres(&["e", "w", "x", "y", "z"], &[&["e", "w", "x", "y", "z"][..]; 4]);
        let m = maximal_presentation(&c).unwrap();
        assert_eq!(m, *c.presentation());

        let b = chain();
        let m = maximal_presentation(&b).unwrap();
        let tm = TransversalMatroid::new(m.clone());
        assert!(matroids_equal(&tm, &b, MAX).unwrap());
        assert_eq!(maximal_presentation(&tm).unwrap(), m);
        for &s in m.sets() {
            assert!(is_cyclic_flat(&Dual(&b), s).unwrap());
        }

        let wide = pres(&["a", "b"], &[&["a", "b"], &["a", "b"], &["a", "b"]]);
        assert!(matches!(maximal_presentation(&wide), Err(Error::Precondition(_))));
    }

    #[test]
    fn dual_candidate_flats_match_exhaustive_search() {
        for m in [petals(), chain(), u24()] {
            let by_union = cyclic_flats_of_dual(&m).unwrap();
            let exhaustive = cyclic_flats(&Dual(&m), MAX).unwrap();
            assert_eq!(by_union, exhaustive);
        }
    }

    #[test]
    fn exchanges() {
        let b = chain();
        assert_eq!(exchange_set(&b, 0, b.set(0), MAX).unwrap(), *b.presentation());
        for i in 0..3 {
            let closed = b.dual_closure(b.set(i));
            let out = exchange_set(&b, i, closed, MAX).unwrap();
            assert!(matroids_equal(&TransversalMatroid::new(out), &b, MAX).unwrap());
        }
        // Shrinking {e,s,t,u,v} to {s,t} changes the coclosure.
        let shrunk = b.ground().subset(&["s", "t"]).unwrap();
        assert!(matches!(
            exchange_set(&b, 0, shrunk, MAX),
            Err(Error::ExchangeRejected(_))
        ));
    }

    #[test]
    fn exchange_rejects_on_rank_condition() {
        // U_{1,2} on {a,b}: ({a,b}). cl*({a}) = {a,b}? r*({a}) = 1 = r*({a,b}),
        // so cl*({a}) = cl*({a,b}); but B = {a} gives r*(B) = 1 = |B| - 0.
        let m = pres(&["a", "b"], &[&["a", "b"]]);
        let a = m.ground().subset(&["a"]).unwrap();
        assert_eq!(m.dual_closure(a), m.dual_closure(m.set(0)));
        let err = exchange_set(&m, 0, a, MAX).unwrap_err();
        assert!(matches!(err, Error::ExchangeRejected(msg) if msg.contains("r*({a})")));
    }
}
