//! Set-system presentations and their JSON form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{ElementSet, GroundSet};

/// An ordered family of subsets `(A_1, ..., A_r)` of a labelled ground set.
///
/// Repeated and empty sets are allowed. Elements in no set are loops of the
/// transversal matroid the family presents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    ground: GroundSet,
    sets: Vec<ElementSet>,
}

/// Wire form: `{"elements": [...], "sets": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub elements: Vec<String>,
    pub sets: Vec<Vec<String>>,
}

impl Presentation {
    pub fn new(ground: GroundSet, sets: Vec<ElementSet>) -> Result<Self> {
        for &set in &sets {
            ground.check(set)?;
        }
        Ok(Presentation { ground, sets })
    }

    pub fn from_labels<S: AsRef<str>>(elements: &[S], sets: &[&[S]]) -> Result<Self> {
        let ground = GroundSet::new(elements.iter().map(|s| s.as_ref().to_string()))?;
        let sets = sets
            .iter()
            .map(|set| ground.subset(set))
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation { ground, sets })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> ElementSet {
        self.sets[i]
    }

    /// Number of sets, `|A|`.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Indices `i` with `A_i` contained in `x`.
    pub fn contained_in(&self, x: ElementSet) -> impl Iterator<Item = usize> + '_ {
        self.sets
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.is_subset(x))
            .map(|(i, _)| i)
    }

    /// Union of the sets indexed by the bits of `indices`.
    pub fn union_of(&self, indices: u64) -> ElementSet {
        let mut acc = ElementSet::EMPTY;
        let mut bits = indices;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc = acc | self.sets[i];
            bits &= bits - 1;
        }
        acc
    }

    /// The subfamily at `indices`, in the order given.
    pub fn select(&self, indices: &[usize]) -> Presentation {
        Presentation {
            ground: self.ground.clone(),
            sets: indices.iter().map(|&i| self.sets[i]).collect(),
        }
    }

    /// `(A_1 ∩ X, ..., A_r ∩ X)` over the ground set `X`.
    pub fn restrict(&self, keep: ElementSet) -> Presentation {
        let (ground, positions) = self.ground.restrict(keep);
        let sets = self
            .sets
            .iter()
            .map(|&a| {
                positions
                    .iter()
                    .enumerate()
                    .filter(|&(_, &old)| a.contains(old))
                    .map(|(new, _)| new)
                    .collect()
            })
            .collect();
        Presentation { ground, sets }
    }

    /// Sets sorted by bitmask, for comparisons up to reordering.
    pub fn sorted_sets(&self) -> Vec<ElementSet> {
        let mut s = self.sets.clone();
        s.sort();
        s
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            elements: self.ground.labels().to_vec(),
            sets: self.sets.iter().map(|&s| self.ground.names(s)).collect(),
        }
    }

    pub fn from_json(json: &PresentationJson) -> Result<Self> {
        let ground = GroundSet::new(json.elements.iter().cloned())?;
        let sets = json
            .sets
            .iter()
            .map(|set| ground.subset(set))
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation { ground, sets })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let json: PresentationJson = serde_json::from_str(text)?;
        Self::from_json(&json).map_err(|e| match e {
            Error::UnknownLabel(_) | Error::DuplicateLabel(_) | Error::EmptyLabel => {
                Error::Parse(e.to_string())
            }
            other => other,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("presentation json is serializable")
    }

    pub fn describe(&self) -> String {
        let sets: Vec<String> = self.sets.iter().map(|&s| self.ground.format_set(s)).collect();
        format!("({})", sets.join(", "))
    }
}
