//! Element sets and set families over one abelian group.
//!
//! A [`SetFamily`] is an *ordered* list of `m >= 2` equally sized sets. The
//! sets are not required to be disjoint; whether they are is one of the
//! properties the verifier reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::AbelianGroup;

/// A subset of group elements, stored as strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    group: AbelianGroup,
    elements: Vec<usize>,
}

impl ElementSet {
    pub fn new(group: AbelianGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        if let Some(&last) = elements.last() {
            group.check_element(last)?;
        }
        Ok(ElementSet { group, elements })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    /// The translate `t + A`, re-sorted into canonical element order.
    pub fn translate(&self, t: usize) -> Result<Self> {
        self.group.check_element(t)?;
        let translated = self
            .elements
            .iter()
            .map(|&a| self.group.add(t, a))
            .collect();
        ElementSet::new(self.group.clone(), translated)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

/// An ordered family of `m >= 2` equally sized, non-empty sets over one group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct SetFamily {
    group: AbelianGroup,
    sets: Vec<ElementSet>,
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    group: AbelianGroup,
    sets: Vec<Vec<usize>>,
}

impl TryFrom<RawFamily> for SetFamily {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        SetFamily::from_element_lists(raw.group, raw.sets)
    }
}

impl From<SetFamily> for RawFamily {
    fn from(family: SetFamily) -> Self {
        RawFamily {
            group: family.group,
            sets: family.sets.into_iter().map(|s| s.elements).collect(),
        }
    }
}

impl SetFamily {
    pub fn new(sets: Vec<ElementSet>) -> Result<Self> {
        if sets.len() < 2 {
            return Err(Error::TooFewSets);
        }
        let group = sets[0].group().clone();
        let k = sets[0].size();
        if k == 0 {
            return Err(Error::EmptySet);
        }
        for set in &sets {
            if set.group() != &group {
                return Err(Error::GroupMismatch);
            }
            if set.size() != k {
                return Err(Error::UnequalSetSizes);
            }
        }
        Ok(SetFamily { group, sets })
    }

    pub fn from_element_lists(group: AbelianGroup, lists: Vec<Vec<usize>>) -> Result<Self> {
        let sets = lists
            .into_iter()
            .map(|elements| ElementSet::new(group.clone(), elements))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(sets)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn set_size(&self) -> usize {
        self.sets[0].size()
    }

    /// Translates every set by the same `t`. External differences are
    /// invariant under this, so family classification is too.
    pub fn translate_all(&self, t: usize) -> Result<Self> {
        let sets = self
            .sets
            .iter()
            .map(|s| s.translate(t))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(sets)
    }

    pub fn pairwise_disjoint(&self) -> bool {
        for i in 0..self.sets.len() {
            for j in i + 1..self.sets.len() {
                if !self.sets[i].is_disjoint(&self.sets[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Concatenated element lists, the ordering key used for canonical forms.
    pub fn encoding(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.elements.clone()).collect()
    }
}
