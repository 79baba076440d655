//! Optical orthogonal codes and conflict-avoiding codes.
//!
//! A `(v, w, lambda_a, lambda_c)`-OOC is a family of length-`v`, weight-`w`
//! binary sequences whose periodic auto-correlations (non-trivial shifts)
//! stay at or below `lambda_a` and whose pairwise cross-correlations stay at
//! or below `lambda_c`. Cross-correlation of a pair can never average below
//! `w^2 / v`, and families meeting that bound at every shift are exactly the
//! pairwise strong external difference families.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::seq::BinarySeq;
use crate::spectrum::internal_spectrum;
use crate::verify::{verify_family, Kind, VerificationReport};

/// Full correlation tables of a sequence family.
///
/// Cross tables are stored once per unordered pair in ordered `(i, j)` form
/// with `i < j`: entry `delta` is `sum_t x^(i)_t x^(j)_{t+delta}`. The
/// opposite order is the same table read at negated shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    pub length: usize,
    pub weight: usize,
    pub size: usize,
    /// Max over all sequences and shifts `0 < delta < v`.
    pub max_auto: usize,
    /// Max over all pairs and shifts `0 <= delta < v`; `None` for a single
    /// sequence.
    pub max_cross: Option<usize>,
    pub auto_tables: Vec<Vec<usize>>,
    pub cross_tables: Vec<CrossTable>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossTable {
    pub i: usize,
    pub j: usize,
    pub counts: Vec<usize>,
}

impl CorrelationProfile {
    /// The single value all cross-correlations share, if they share one.
    pub fn constant_cross_value(&self) -> Option<usize> {
        let first = *self.cross_tables.first()?.counts.first()?;
        self.cross_tables
            .iter()
            .all(|t| t.counts.iter().all(|&c| c == first))
            .then_some(first)
    }
}

fn check_family(seqs: &[BinarySeq]) -> Result<(usize, usize)> {
    let first = seqs.first().ok_or(Error::TooFewSequences { need: 1, got: 0 })?;
    let v = first.len();
    let w = first.weight();
    for seq in seqs {
        if seq.len() != v {
            return Err(Error::LengthMismatch(v, seq.len()));
        }
        if seq.weight() != w {
            return Err(Error::WeightMismatch(w, seq.weight()));
        }
    }
    Ok((v, w))
}

/// Exact auto- and cross-correlation tables and maxima.
pub fn correlation_profile(seqs: &[BinarySeq]) -> Result<CorrelationProfile> {
    let (v, w) = check_family(seqs)?;
    let mut auto_tables = Vec::with_capacity(seqs.len());
    let mut max_auto = 0;
    for seq in seqs {
        let mut table = Vec::with_capacity(v);
        for delta in 0..v {
            let c = seq.correlation(seq, delta as i64)?;
            if delta > 0 {
                max_auto = max_auto.max(c);
            }
            table.push(c);
        }
        auto_tables.push(table);
    }

    let mut cross_tables = Vec::new();
    let mut max_cross = None;
    for i in 0..seqs.len() {
        for j in i + 1..seqs.len() {
            let mut counts = Vec::with_capacity(v);
            for delta in 0..v {
                let c = seqs[i].correlation(&seqs[j], delta as i64)?;
                max_cross = Some(max_cross.unwrap_or(0).max(c));
                counts.push(c);
            }
            cross_tables.push(CrossTable { i, j, counts });
        }
    }

    Ok(CorrelationProfile {
        length: v,
        weight: w,
        size: seqs.len(),
        max_auto,
        max_cross,
        auto_tables,
        cross_tables,
    })
}

/// Whether the family is a `(v, w, lambda_a, lambda_c)`-OOC.
pub fn verify_ooc(seqs: &[BinarySeq], lambda_a: usize, lambda_c: usize) -> Result<bool> {
    let profile = correlation_profile(seqs)?;
    Ok(profile.max_auto <= lambda_a && profile.max_cross.unwrap_or(0) <= lambda_c)
}

/// The cross-correlation floor `w^2 / v` as an exact rational together with
/// the least admissible integer bound.
pub fn cross_correlation_lower_bound(v: usize, w: usize) -> Result<(Ratio<u64>, u64)> {
    if v < 2 {
        return Err(Error::InvalidModulus(v));
    }
    if w == 0 || w > v {
        return Err(Error::ElementOutOfRange {
            element: w,
            order: v,
        });
    }
    let (v, w) = (v as u64, w as u64);
    let exact = Ratio::new(w * w, v);
    let ceil = (w * w).div_ceil(v);
    Ok((exact, ceil))
}

/// Outcome of checking whether a family attains the cross-correlation floor
/// at every pair and shift. When it does, the sequences form a PSEDF and the
/// verified family is returned as the witness.
#[derive(Debug, Clone)]
pub struct OptimalOocCheck {
    pub optimal: bool,
    /// The shared cross-correlation value when `optimal`.
    pub lambda: Option<usize>,
    pub witness: Option<(SetFamily, VerificationReport)>,
}

/// Tests whether every cross-correlation equals `w^2 / v`, i.e. whether the
/// family is an OOC meeting the lower bound with equality.
pub fn check_optimal_ooc(seqs: &[BinarySeq]) -> Result<OptimalOocCheck> {
    if seqs.len() < 2 {
        return Err(Error::TooFewSequences {
            need: 2,
            got: seqs.len(),
        });
    }
    let profile = correlation_profile(seqs)?;
    let Some(lambda) = profile.constant_cross_value() else {
        return Ok(OptimalOocCheck {
            optimal: false,
            lambda: None,
            witness: None,
        });
    };
    let family = sequences_to_family(seqs)?;
    let report = verify_family(&family);
    debug_assert_eq!(report.lambda_for(Kind::Psedf), Some(lambda));
    Ok(OptimalOocCheck {
        optimal: true,
        lambda: Some(lambda),
        witness: Some((family, report)),
    })
}

/// Conflict-avoiding check on set form: the internal difference supports of
/// the sets are pairwise disjoint.
pub fn is_cac(family: &SetFamily) -> bool {
    let spectra: Vec<_> = family.sets().iter().map(internal_spectrum).collect();
    for i in 0..spectra.len() {
        for j in i + 1..spectra.len() {
            if !spectra[i].disjoint_support(&spectra[j]) {
                return false;
            }
        }
    }
    true
}

/// Conflict-avoiding check on sequence form.
pub fn is_cac_sequences(seqs: &[BinarySeq]) -> Result<bool> {
    let family = sequences_to_family(seqs)?;
    Ok(is_cac(&family))
}

/// Interprets equal-length, equal-weight sequences as a set family.
pub fn sequences_to_family(seqs: &[BinarySeq]) -> Result<SetFamily> {
    if seqs.len() < 2 {
        return Err(Error::TooFewSequences {
            need: 2,
            got: seqs.len(),
        });
    }
    check_family(seqs)?;
    SetFamily::new(seqs.iter().map(|s| s.to_set()).collect())
}

/// The sequence view of a cyclic-group family.
pub fn family_to_sequences(family: &SetFamily) -> Result<Vec<BinarySeq>> {
    family.sets().iter().map(BinarySeq::from_set).collect()
}
