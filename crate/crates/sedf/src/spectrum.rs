//! Difference-multiset spectra.
//!
//! The external difference multiset `D(A, B) = {a - b : a in A, b in B}`
//! counts *all* ordered pairs, including `a = b` (which contributes to the
//! identity whenever the sets intersect). The internal multiset `D(A)` ranges
//! over ordered pairs of distinct elements of one set. A spectrum stores the
//! multiplicity of every group element in such a multiset.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{ElementSet, SetFamily};
use crate::group::AbelianGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceSpectrum {
    #[serde(skip)]
    group: AbelianGroup,
    counts: Vec<usize>,
}

impl DifferenceSpectrum {
    pub fn zero(group: AbelianGroup) -> Self {
        let counts = vec![0; group.order()];
        DifferenceSpectrum { group, counts }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, element: usize) -> usize {
        self.counts[element]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `Some(lambda)` iff every element of the group occurs exactly `lambda`
    /// times.
    pub fn uniform(&self) -> Option<usize> {
        let lambda = self.counts[0];
        if self.counts.iter().all(|&c| c == lambda) {
            Some(lambda)
        } else {
            None
        }
    }

    /// `Some(lambda)` iff the identity never occurs and every other element
    /// occurs exactly `lambda` times.
    pub fn uniform_off_identity(&self) -> Option<usize> {
        if self.counts[0] != 0 || self.counts.len() < 2 {
            return None;
        }
        let lambda = self.counts[1];
        if self.counts[1..].iter().all(|&c| c == lambda) {
            Some(lambda)
        } else {
            None
        }
    }

    /// Elements with non-zero multiplicity.
    pub fn support(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(g, _)| g)
            .collect()
    }

    pub fn distinct_values(&self) -> BTreeSet<usize> {
        self.counts.iter().copied().collect()
    }

    pub fn disjoint_support(&self, other: &DifferenceSpectrum) -> bool {
        self.counts
            .iter()
            .zip(&other.counts)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Pointwise sum; both spectra must live over the same group.
    pub fn accumulate(&mut self, other: &DifferenceSpectrum) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        for (c, &o) in self.counts.iter_mut().zip(&other.counts) {
            *c += o;
        }
        Ok(())
    }
}

/// Spectrum of `D(A, B)`; total mass `|A| * |B|`.
pub fn external_spectrum(a: &ElementSet, b: &ElementSet) -> Result<DifferenceSpectrum> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let group = a.group();
    let mut spectrum = DifferenceSpectrum::zero(group.clone());
    for &x in a.elements() {
        for &y in b.elements() {
            spectrum.counts[group.sub(x, y)] += 1;
        }
    }
    Ok(spectrum)
}

/// Spectrum of `D(A)`; the identity count is always zero and the total mass
/// is `|A| * (|A| - 1)`.
pub fn internal_spectrum(a: &ElementSet) -> DifferenceSpectrum {
    let group = a.group();
    let mut spectrum = DifferenceSpectrum::zero(group.clone());
    for &x in a.elements() {
        for &y in a.elements() {
            if x != y {
                spectrum.counts[group.sub(x, y)] += 1;
            }
        }
    }
    spectrum
}

/// Pointwise sum of `external_spectrum(A_i, A_j)` over all `j != i`.
pub fn union_external_spectrum(family: &SetFamily, i: usize) -> Result<DifferenceSpectrum> {
    if i >= family.num_sets() {
        return Err(Error::SetIndexOutOfRange {
            index: i,
            count: family.num_sets(),
        });
    }
    let mut union = DifferenceSpectrum::zero(family.group().clone());
    for (j, other) in family.sets().iter().enumerate() {
        if j != i {
            union.accumulate(&external_spectrum(&family.sets()[i], other)?)?;
        }
    }
    Ok(union)
}
