//! Explicit family constructions.
//!
//! Each constructor derives its sets twice: once from index formulas and once
//! through the binary-sequence route, and insists the two agree. The verifier
//! stays independent of both routes, so tests can hold every constructor to
//! its claimed parameters.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::group::AbelianGroup;
use crate::seq::BinarySeq;
use crate::spectrum::{external_spectrum, DifferenceSpectrum};

/// A named construction request, mirroring the CLI surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Two-set family in `Z_v` with the canonical block/periodic pattern;
    /// requires `k | v` and `v | k^2`.
    TwoSet { v: usize, k: usize },
    /// Two-set family whose second sequence repeats an arbitrary first
    /// period of weight `k^2 / v`.
    TwoSetGeneralized {
        v: usize,
        k: usize,
        first_period: BinarySeq,
    },
    /// `n`-set family in `Z_{2^n}` from the halving sequences.
    PowerOfTwo { n: u32 },
    /// The two-set family reinterpreted in `Z_{v+1}` by appending a zero.
    Extend { v: usize, k: usize },
    /// The `lambda = 1` two-set family translated into a disjoint classical
    /// family in `Z_{v+1}`.
    ConvertClassical { v: usize, k: usize },
}

impl Construction {
    pub fn build(&self) -> Result<SetFamily> {
        match self {
            Construction::TwoSet { v, k } => construct_two_set(*v, *k),
            Construction::TwoSetGeneralized { v, k, first_period } => {
                construct_two_set_generalized(*v, *k, first_period)
            }
            Construction::PowerOfTwo { n } => construct_power_of_two(*n),
            Construction::Extend { v, k } => {
                let (family, _claim) = extend_append_zero(&construct_two_set(*v, *k)?)?;
                Ok(family)
            }
            Construction::ConvertClassical { v, k } => {
                convert_to_classical(&construct_two_set(*v, *k)?)
            }
        }
    }
}

fn check_divisibility(v: usize, k: usize) -> Result<usize> {
    if v < 2 || k == 0 || v % k != 0 {
        return Err(Error::DivisibilityViolated {
            v,
            k,
            requirement: "k | v",
        });
    }
    if (k * k) % v != 0 {
        return Err(Error::DivisibilityViolated {
            v,
            k,
            requirement: "v | k^2",
        });
    }
    Ok(k * k / v)
}

/// The two-set `(v, 2, k, k^2/v)` family in `Z_v`: `A_X = {0, ..., k-1}` and
/// `A_Y = {ak, ..., ak + lambda - 1 : 0 <= a < v/k}`.
pub fn construct_two_set(v: usize, k: usize) -> Result<SetFamily> {
    let lambda = check_divisibility(v, k)?;
    // k | v and v | k^2 with v >= 2 force k >= 2, so the period is a valid
    // sequence. Canonical first period: 1^lambda 0^(k-lambda).
    let bits: Vec<bool> = (0..k).map(|r| r < lambda).collect();
    construct_two_set_generalized(v, k, &BinarySeq::from_bits(&bits)?)
}

/// Generalisation: `Y` repeats any length-`k` period of weight `k^2 / v`.
pub fn construct_two_set_generalized(
    v: usize,
    k: usize,
    first_period: &BinarySeq,
) -> Result<SetFamily> {
    let lambda = check_divisibility(v, k)?;
    if first_period.len() != k {
        return Err(Error::PeriodLength {
            got: first_period.len(),
            want: k,
        });
    }
    if first_period.weight() != lambda {
        return Err(Error::PeriodWeight {
            got: first_period.weight(),
            want: lambda,
        });
    }

    // Index route.
    let a_x: Vec<usize> = (0..k).collect();
    let mut a_y = Vec::with_capacity(k);
    for a in 0..v / k {
        for r in 0..k {
            if first_period.get(r) {
                a_y.push(a * k + r);
            }
        }
    }

    // Sequence route: X is a block of k ones then zeros; Y repeats the
    // period v/k times.
    let x_bits: Vec<bool> = (0..v).map(|i| i < k).collect();
    let y_bits: Vec<bool> = (0..v).map(|i| first_period.get(i % k)).collect();
    let x_set = BinarySeq::from_bits(&x_bits)?.to_set();
    let y_set = BinarySeq::from_bits(&y_bits)?.to_set();
    assert_eq!(x_set.elements(), &a_x[..], "index and sequence routes differ");
    assert_eq!(y_set.elements(), &a_y[..], "index and sequence routes differ");

    SetFamily::from_element_lists(AbelianGroup::cyclic(v)?, vec![a_x, a_y])
}

const MAX_POWER_OF_TWO_EXPONENT: u32 = 24;

/// The `(2^N, N, 2^(N-1), 2^(N-2))` family in `Z_{2^N}`: set `i` (1-indexed)
/// holds the residues whose bit `i-1` is clear, i.e. the sequence repeating
/// `2^(i-1)` ones then `2^(i-1)` zeros.
pub fn construct_power_of_two(n: u32) -> Result<SetFamily> {
    if !(2..=MAX_POWER_OF_TWO_EXPONENT).contains(&n) {
        return Err(Error::InvalidSetCountExponent {
            got: n,
            max: MAX_POWER_OF_TWO_EXPONENT,
        });
    }
    let v = 1usize << n;
    let mut lists = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let half_period = 1usize << (i - 1);
        // Index route.
        let formula: Vec<usize> = (0..v).filter(|t| t & half_period == 0).collect();
        // Sequence route.
        let bits: Vec<bool> = (0..v).map(|t| t % (2 * half_period) < half_period).collect();
        let from_seq = BinarySeq::from_bits(&bits)?.to_set();
        assert_eq!(
            from_seq.elements(),
            &formula[..],
            "index and sequence routes differ"
        );
        lists.push(formula);
    }
    SetFamily::from_element_lists(AbelianGroup::cyclic(v)?, lists)
}

/// Shape check for the canonical two-set family, accepting the sets in
/// either order. Returns `(v, k, lambda)` and the family normalised to
/// `(A_X, A_Y)` order.
fn normalize_two_set(family: &SetFamily) -> Result<(usize, usize, usize, SetFamily)> {
    if !family.group().is_cyclic() || family.num_sets() != 2 {
        return Err(Error::NotTwoSetShape);
    }
    let v = family.order();
    let k = family.set_size();
    let lambda = check_divisibility(v, k).map_err(|_| Error::NotTwoSetShape)?;
    let reference = construct_two_set(v, k)?;
    if family.sets() == reference.sets() {
        return Ok((v, k, lambda, reference));
    }
    let swapped = SetFamily::new(vec![family.sets()[1].clone(), family.sets()[0].clone()])?;
    if swapped.sets() == reference.sets() {
        return Ok((v, k, lambda, reference));
    }
    Err(Error::NotTwoSetShape)
}

/// Reinterprets a cyclic-group family inside `Z_{v+1}`, i.e. appends a `0`
/// to every corresponding sequence.
pub fn embed_append_zero(family: &SetFamily) -> Result<SetFamily> {
    if !family.group().is_cyclic() {
        return Err(Error::NonCyclicGroup);
    }
    let extended = AbelianGroup::cyclic(family.order() + 1)?;
    SetFamily::from_element_lists(
        extended,
        family.sets().iter().map(|s| s.elements().to_vec()).collect(),
    )
}

/// The exact spectrum the appended-zero pair must have: `lambda` everywhere
/// except on `{v-k+1, ..., v-k+lambda}`, where one occurrence is lost.
///
/// The claim is stated for `D(A_Y', A_X')`, the direction in which the
/// deficient window sits at `v-k+1, ..., v-k+lambda`; the opposite order
/// sees the negated window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedSpectrumClaim {
    pub uniform_value: usize,
    pub deficient_elements: Vec<usize>,
    pub deficient_value: usize,
}

impl ExtendedSpectrumClaim {
    fn for_parameters(v: usize, k: usize, lambda: usize) -> Self {
        let claim = ExtendedSpectrumClaim {
            uniform_value: lambda,
            deficient_elements: (v - k + 1..=v - k + lambda).collect(),
            deficient_value: lambda - 1,
        };
        debug_assert_eq!(claim.deficient_elements.len(), lambda);
        debug_assert_eq!(
            lambda * (v + 1 - lambda) + (lambda - 1) * lambda,
            k * k,
            "claimed total mass must be k^2"
        );
        claim
    }

    /// The full claimed count vector over `Z_{v+1}`.
    pub fn expected_counts(&self, extended_order: usize) -> Vec<usize> {
        let mut counts = vec![self.uniform_value; extended_order];
        for &e in &self.deficient_elements {
            counts[e] = self.deficient_value;
        }
        counts
    }

    pub fn matches(&self, spectrum: &DifferenceSpectrum) -> bool {
        self.expected_counts(spectrum.group().order()) == spectrum.counts()
    }
}

/// Appends a zero to both sequences of a canonical two-set family, lifting
/// it into `Z_{v+1}`, and returns the spectrum it must now have. The claim
/// is recomputed against the actual spectrum before returning; a mismatch is
/// an internal error, never a warning.
pub fn extend_append_zero(family: &SetFamily) -> Result<(SetFamily, ExtendedSpectrumClaim)> {
    let (v, k, lambda, normalized) = normalize_two_set(family)?;
    let extended = embed_append_zero(&normalized)?;
    let claim = ExtendedSpectrumClaim::for_parameters(v, k, lambda);
    let actual = external_spectrum(&extended.sets()[1], &extended.sets()[0])?;
    if !claim.matches(&actual) {
        return Err(Error::ClaimMismatch);
    }
    Ok((extended, claim))
}

/// Converts the `lambda = 1` two-set family (so `v = k^2`) into the disjoint
/// classical pair `{0, ..., k-1}, {k, 2k, ..., k^2}` in `Z_{k^2+1}`.
///
/// For `lambda > 1` no translate can separate the sets: the periodic
/// sequence would need a gap of length `k`, forcing `lambda <= 1`.
pub fn convert_to_classical(family: &SetFamily) -> Result<SetFamily> {
    let (_v, k, lambda, normalized) = normalize_two_set(family)?;
    if lambda != 1 {
        return Err(Error::LambdaObstruction(lambda));
    }
    let (extended, _claim) = extend_append_zero(&normalized)?;
    let a_x = extended.sets()[0].clone();
    let translated = extended.sets()[1].translate(k)?;
    let formula: Vec<usize> = (1..=k).map(|a| a * k).collect();
    assert_eq!(
        translated.elements(),
        &formula[..],
        "translate route and index formula differ"
    );
    let family = SetFamily::new(vec![a_x, translated])?;
    assert!(family.pairwise_disjoint(), "converted sets must be disjoint");
    Ok(family)
}
