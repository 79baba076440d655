//! External difference families over finite abelian groups, with and without
//! the disjointness condition, and their binary-sequence view.
//!
//! The crate covers four related objects. An **EDF** is a disjoint family of
//! equally sized sets whose total inter-set differences cover every
//! non-identity group element the same number of times; an **SEDF**
//! additionally demands this per set. Dropping disjointness and counting the
//! identity like any other element yields the **non-disjoint SEDF**, and
//! requiring uniformity for every ordered pair of sets separately yields the
//! **PSEDF** — the strongest of the four. Under the subset/sequence
//! correspondence in cyclic groups, pairwise external differences become
//! periodic cross-correlations, which connects these families to optical
//! orthogonal codes and conflict-avoiding codes.
//!
//! Functionality is grouped by module:
//!
//! * [`group`], [`family`], [`spectrum`], [`verify`] — group arithmetic, set
//!   families, difference spectra, and the classifier for all family kinds.
//! * [`seq`] — cyclic binary sequences, shifts, correlation, runs.
//! * [`construct`] — explicit two-set, generalized-period and power-of-two
//!   families, the append-zero extension, and conversion to classical form.
//! * [`ooc`] — correlation profiles, OOC/CAC checks, and the cross-
//!   correlation lower bound `w^2 / v`.
//! * [`search`] — pruned exhaustive enumeration in small groups, with
//!   translation-reduced canonical forms.

pub mod construct;
pub mod error;
pub mod family;
pub mod group;
pub mod ooc;
pub mod search;
pub mod seq;
pub mod spectrum;
pub mod verify;

pub use construct::{
    construct_power_of_two, construct_two_set, construct_two_set_generalized, convert_to_classical,
    embed_append_zero, extend_append_zero, Construction, ExtendedSpectrumClaim,
};
pub use error::{Error, Result};
pub use family::{ElementSet, SetFamily};
pub use group::AbelianGroup;
pub use ooc::{
    check_optimal_ooc, correlation_profile, cross_correlation_lower_bound, family_to_sequences,
    is_cac, is_cac_sequences, sequences_to_family, verify_ooc, CorrelationProfile,
};
pub use search::{
    canonical_form, canonical_sorted_form, confirm_lambda1_theorem, enumerate, Canonicalization,
    LambdaOneReport, SearchResult, SearchTask,
};
pub use seq::{BinarySeq, Run, RunDecomposition};
pub use spectrum::{
    external_spectrum, internal_spectrum, union_external_spectrum, DifferenceSpectrum,
};
pub use verify::{feasible_parameters, verify_family, Kind, TargetKind, VerificationReport};
