//! Augmenting-path matching between elements and the sets that contain them.

use crate::ground::ElementSet;

/// Element-to-set incidence, indexed by element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    /// `sets_of[x]` lists the indices of the sets containing element `x`, ascending.
    sets_of: Vec<Vec<usize>>,
    n_sets: usize,
}

impl Incidence {
    pub fn new(n_elements: usize, sets: &[ElementSet]) -> Self {
        let mut sets_of = vec![Vec::new(); n_elements];
        for (i, set) in sets.iter().enumerate() {
            for x in set.iter() {
                sets_of[x].push(i);
            }
        }
        Incidence {
            sets_of,
            n_sets: sets.len(),
        }
    }

    pub fn n_sets(&self) -> usize {
        self.n_sets
    }

    /// Maximum matching restricted to the elements of `x`.
    ///
    /// Elements are inserted in ascending order and each augmenting search
    /// tries sets in ascending order, so the result is reproducible.
    pub fn max_matching(&self, x: ElementSet) -> Matching {
        let mut set_owner: Vec<Option<usize>> = vec![None; self.n_sets];
        let mut visited = vec![false; self.n_sets];
        for elem in x.iter() {
            visited.iter_mut().for_each(|v| *v = false);
            self.augment(elem, &mut set_owner, &mut visited);
        }
        Matching { set_owner }
    }

    pub fn matching_size(&self, x: ElementSet) -> usize {
        self.max_matching(x).size()
    }

    fn augment(&self, elem: usize, set_owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
        for &s in &self.sets_of[elem] {
            if visited[s] {
                continue;
            }
            visited[s] = true;
            let free = match set_owner[s] {
                None => true,
                Some(other) => self.augment(other, set_owner, visited),
            };
            if free {
                set_owner[s] = Some(elem);
                return true;
            }
        }
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    set_owner: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.set_owner.iter().filter(|o| o.is_some()).count()
    }

    /// `(element, set)` pairs ordered by set index.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.set_owner
            .iter()
            .enumerate()
            .filter_map(|(s, o)| o.map(|e| (e, s)))
            .collect()
    }

    pub fn matched_elements(&self) -> ElementSet {
        self.set_owner.iter().flatten().copied().collect()
    }

    pub fn is_set_covered(&self, s: usize) -> bool {
        self.set_owner[s].is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(sets: &[ElementSet], x: ElementSet) -> usize {
        // Largest subset of x admitting an injection into distinct containing sets.
        fn injectable(sets: &[ElementSet], elems: &[usize], used: &mut Vec<bool>) -> bool {
            let Some((&first, rest)) = elems.split_first() else {
                return true;
            };
            for (i, s) in sets.iter().enumerate() {
                if !used[i] && s.contains(first) {
                    used[i] = true;
                    if injectable(sets, rest, used) {
                        used[i] = false;
                        return true;
                    }
                    used[i] = false;
                }
            }
            false
        }
        x.subsets()
            .filter(|y| {
                let elems: Vec<usize> = y.iter().collect();
                injectable(sets, &elems, &mut vec![false; sets.len()])
            })
            .map(|y| y.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn agrees_with_enumeration() {
        let sets = [
            ElementSet::from_indices([0, 1, 2]),
            ElementSet::from_indices([0, 3, 4]),
            ElementSet::from_indices([0, 5, 6]),
        ];
        let inc = Incidence::new(7, &sets);
        for x in ElementSet::full(7).subsets() {
            assert_eq!(inc.matching_size(x), brute_force(&sets, x), "{x:?}");
        }
        assert_eq!(inc.matching_size(ElementSet::from_indices([1, 2])), 1);
    }

    #[test]
    fn matching_pairs_are_valid() {
        let sets = [
            ElementSet::from_indices([0, 1]),
            ElementSet::from_indices([0]),
            ElementSet::from_indices([1, 2]),
        ];
        let m = Incidence::new(3, &sets).max_matching(ElementSet::full(3));
        assert_eq!(m.size(), 3);
        for (e, s) in m.pairs() {
            assert!(sets[s].contains(e));
        }
        assert_eq!(m.matched_elements(), ElementSet::full(3));
    }
}
