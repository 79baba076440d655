//! Family classification.
//!
//! Four kinds are recognised, listed here from strongest to weakest:
//!
//! * **PSEDF** — every ordered pair of distinct sets has `D(A_i, A_j)`
//!   uniform over the whole group.
//! * **non-disjoint SEDF** — for every `i`, the union of `D(A_i, A_j)` over
//!   `j != i` covers every group element (identity included) the same number
//!   of times. Such families necessarily overlap.
//! * **classical SEDF** — pairwise disjoint sets whose per-set unions cover
//!   every non-identity element uniformly and the identity never.
//! * **EDF** — pairwise disjoint sets whose *total* external differences
//!   cover every non-identity element uniformly.
//!
//! Lambda values are always inferred from the computed spectra, never taken
//! from caller metadata. All ordered pairs are evaluated explicitly; no
//! negation-symmetry shortcut is taken here.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::family::SetFamily;
use crate::spectrum::{external_spectrum, DifferenceSpectrum};

/// Classification outcome, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Kind {
    #[serde(rename = "PSEDF")]
    Psedf,
    #[serde(rename = "nondisjoint-SEDF")]
    NondisjointSedf,
    #[serde(rename = "classical-SEDF")]
    ClassicalSedf,
    #[serde(rename = "EDF")]
    Edf,
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Kind::Psedf => "PSEDF",
            Kind::NondisjointSedf => "nondisjoint-SEDF",
            Kind::ClassicalSedf => "classical-SEDF",
            Kind::Edf => "EDF",
            Kind::None => "none",
        };
        f.write_str(name)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "PSEDF" => Ok(Kind::Psedf),
            "nondisjoint-SEDF" => Ok(Kind::NondisjointSedf),
            "classical-SEDF" => Ok(Kind::ClassicalSedf),
            "EDF" => Ok(Kind::Edf),
            "none" => Ok(Kind::None),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// The kinds that admit a counting identity and can be searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TargetKind {
    #[serde(rename = "PSEDF")]
    Psedf,
    #[serde(rename = "nondisjoint-SEDF")]
    NondisjointSedf,
    #[serde(rename = "classical-SEDF")]
    ClassicalSedf,
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Kind::from(*self).fmt(f)
    }
}

impl FromStr for TargetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "PSEDF" => Ok(TargetKind::Psedf),
            "nondisjoint-SEDF" => Ok(TargetKind::NondisjointSedf),
            "classical-SEDF" => Ok(TargetKind::ClassicalSedf),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

impl From<TargetKind> for Kind {
    fn from(kind: TargetKind) -> Kind {
        match kind {
            TargetKind::Psedf => Kind::Psedf,
            TargetKind::NondisjointSedf => Kind::NondisjointSedf,
            TargetKind::ClassicalSedf => Kind::ClassicalSedf,
        }
    }
}

/// Spectrum of one ordered pair `(i, j)`, kept for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSpectrum {
    pub i: usize,
    pub j: usize,
    pub spectrum: DifferenceSpectrum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub v: usize,
    pub m: usize,
    pub k: usize,
    /// Strongest satisfied kind.
    pub kind: Kind,
    /// Lambda of the strongest kind; `None` iff `kind` is [`Kind::None`].
    pub lambda: Option<usize>,
    pub psedf_lambda: Option<usize>,
    pub nondisjoint_sedf_lambda: Option<usize>,
    pub classical_sedf_lambda: Option<usize>,
    pub edf_lambda: Option<usize>,
    pub disjoint: bool,
    pub pair_spectra: Vec<PairSpectrum>,
    pub union_spectra: Vec<DifferenceSpectrum>,
}

impl VerificationReport {
    /// Lambda under which the family satisfies `kind`, if it does.
    pub fn lambda_for(&self, kind: Kind) -> Option<usize> {
        match kind {
            Kind::Psedf => self.psedf_lambda,
            Kind::NondisjointSedf => self.nondisjoint_sedf_lambda,
            Kind::ClassicalSedf => self.classical_sedf_lambda,
            Kind::Edf => self.edf_lambda,
            Kind::None => None,
        }
    }

    pub fn satisfies(&self, kind: TargetKind) -> Option<usize> {
        self.lambda_for(kind.into())
    }
}

/// Classifies a family against every kind it satisfies.
pub fn verify_family(family: &SetFamily) -> VerificationReport {
    let m = family.num_sets();
    let v = family.order();
    let k = family.set_size();
    let disjoint = family.pairwise_disjoint();

    let mut pair_spectra = Vec::with_capacity(m * (m - 1));
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let spectrum = external_spectrum(&family.sets()[i], &family.sets()[j])
                    .expect("family sets share one group");
                pair_spectra.push(PairSpectrum { i, j, spectrum });
            }
        }
    }

    // PSEDF: every ordered pair uniform, with one shared lambda.
    let mut psedf_lambda = None;
    let mut psedf_ok = true;
    for pair in &pair_spectra {
        match (pair.spectrum.uniform(), psedf_lambda) {
            (Some(l), None) => psedf_lambda = Some(l),
            (Some(l), Some(prev)) if l == prev => {}
            _ => {
                psedf_ok = false;
                break;
            }
        }
    }
    let psedf_lambda = if psedf_ok { psedf_lambda } else { None };

    // Per-set unions, summed from the ordered pair spectra.
    let mut union_spectra = Vec::with_capacity(m);
    for i in 0..m {
        let mut union = DifferenceSpectrum::zero(family.group().clone());
        for pair in &pair_spectra {
            if pair.i == i {
                union
                    .accumulate(&pair.spectrum)
                    .expect("unions share the family group");
            }
        }
        union_spectra.push(union);
    }

    let nondisjoint_sedf_lambda = shared_value(union_spectra.iter().map(|u| u.uniform()));
    let classical_sedf_lambda = if disjoint {
        shared_value(union_spectra.iter().map(|u| u.uniform_off_identity()))
    } else {
        None
    };
    let edf_lambda = if disjoint {
        let mut total = DifferenceSpectrum::zero(family.group().clone());
        for union in &union_spectra {
            total.accumulate(union).expect("same group");
        }
        total.uniform_off_identity()
    } else {
        None
    };

    let (kind, lambda) = if let Some(l) = psedf_lambda {
        (Kind::Psedf, Some(l))
    } else if let Some(l) = nondisjoint_sedf_lambda {
        (Kind::NondisjointSedf, Some(l))
    } else if let Some(l) = classical_sedf_lambda {
        (Kind::ClassicalSedf, Some(l))
    } else if let Some(l) = edf_lambda {
        (Kind::Edf, Some(l))
    } else {
        (Kind::None, None)
    };

    VerificationReport {
        v,
        m,
        k,
        kind,
        lambda,
        psedf_lambda,
        nondisjoint_sedf_lambda,
        classical_sedf_lambda,
        edf_lambda,
        disjoint,
        pair_spectra,
        union_spectra,
    }
}

fn shared_value(values: impl Iterator<Item = Option<usize>>) -> Option<usize> {
    let mut shared = None;
    for value in values {
        match (value, shared) {
            (Some(l), None) => shared = Some(l),
            (Some(l), Some(prev)) if l == prev => {}
            _ => return None,
        }
    }
    shared
}

/// Counting-identity feasibility for the given parameters.
///
/// * non-disjoint SEDF: `lambda * v = k^2 * (m - 1)`
/// * PSEDF: `lambda * v = k^2`
/// * classical SEDF: `lambda * (v - 1) = k^2 * (m - 1)` and `m * k <= v`
///
/// Returns `false` when the basic preconditions (positive inputs, `m >= 2`,
/// `k <= v`) fail.
pub fn feasible_parameters(
    v: usize,
    m: usize,
    k: usize,
    lambda: usize,
    kind: TargetKind,
) -> bool {
    if v < 2 || m < 2 || k == 0 || k > v || lambda == 0 {
        return false;
    }
    let (v, m, k, lambda) = (v as u128, m as u128, k as u128, lambda as u128);
    match kind {
        TargetKind::NondisjointSedf => lambda * v == k * k * (m - 1),
        TargetKind::Psedf => lambda * v == k * k,
        TargetKind::ClassicalSedf => lambda * (v - 1) == k * k * (m - 1) && m * k <= v,
    }
}
