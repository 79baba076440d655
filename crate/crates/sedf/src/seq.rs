//! Cyclic binary sequences and their correlation calculus.
//!
//! A length-`v` binary sequence is the twin of a subset of `Z_v`: bit `i` is
//! set iff `i` belongs to the set. Periodic correlation against a shift
//! `delta` counts coinciding ones and equals the multiplicity of `delta` in
//! the external difference multiset `D(B, A)` of the corresponding sets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::ElementSet;
use crate::group::AbelianGroup;

/// Bit-packed cyclic binary sequence of length `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySeq {
    len: usize,
    words: Vec<u64>,
}

impl BinarySeq {
    pub fn zeros(len: usize) -> Result<Self> {
        if len < 2 {
            return Err(Error::SequenceTooShort(len));
        }
        Ok(BinarySeq {
            len,
            words: vec![0; (len + 63) / 64],
        })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let mut seq = BinarySeq::zeros(bits.len())?;
        for (i, &bit) in bits.iter().enumerate() {
            if bit {
                seq.set(i);
            }
        }
        Ok(seq)
    }

    /// Sequence with ones exactly at the elements of a cyclic-group set.
    pub fn from_set(set: &ElementSet) -> Result<Self> {
        if !set.group().is_cyclic() {
            return Err(Error::NonCyclicGroup);
        }
        let mut seq = BinarySeq::zeros(set.group().order())?;
        for &e in set.elements() {
            seq.set(e);
        }
        Ok(seq)
    }

    /// The subset of `Z_v` holding the positions of the ones.
    pub fn to_set(&self) -> ElementSet {
        let group = AbelianGroup::cyclic(self.len).expect("len >= 2");
        ElementSet::new(group, self.iter_ones().collect()).expect("bit positions are distinct")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// Number of ones; equals the cardinality of the corresponding set.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    fn reduce(&self, s: i64) -> usize {
        (s.rem_euclid(self.len as i64)) as usize
    }

    /// The cyclic shift `X + s`, whose bit `i` is `x_{i+s}`. Negative shifts
    /// are reduced mod `v`.
    pub fn shift(&self, s: i64) -> Self {
        let s = self.reduce(s);
        let mut out = BinarySeq::zeros(self.len).expect("len unchanged");
        for t in self.iter_ones() {
            // bit t of self lands at index t - s.
            out.set((t + self.len - s) % self.len);
        }
        out
    }

    /// Periodic correlation `sum_t x_t * y_{t+delta}`.
    ///
    /// With `X = X_A` and `Y = X_B` this equals the multiplicity of `delta`
    /// in `D(B, A)`.
    pub fn correlation(&self, other: &BinarySeq, delta: i64) -> Result<usize> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        let delta = self.reduce(delta);
        let mut sum = 0;
        for t in self.iter_ones() {
            let u = t + delta;
            let u = if u >= self.len { u - self.len } else { u };
            if other.get(u) {
                sum += 1;
            }
        }
        Ok(sum)
    }

    /// Maximal runs of the *linear* string, in order. Lengths sum to `v` and
    /// adjacent runs alternate symbols.
    pub fn run_decomposition(&self) -> RunDecomposition {
        let mut runs: Vec<Run> = Vec::new();
        for i in 0..self.len {
            let bit = self.get(i);
            match runs.last_mut() {
                Some(run) if run.bit == bit => run.len += 1,
                _ => runs.push(Run { bit, len: 1 }),
            }
        }
        RunDecomposition { runs }
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinarySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::InvalidSymbol(other)),
            }
        }
        BinarySeq::from_bits(&bits)
    }
}

/// One maximal run: a block when `bit` is set, a gap otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub bit: bool,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    pub runs: Vec<Run>,
}

impl RunDecomposition {
    /// Lengths of the runs of ones.
    pub fn blocks(&self) -> Vec<usize> {
        self.runs.iter().filter(|r| r.bit).map(|r| r.len).collect()
    }

    /// Lengths of the runs of zeros.
    pub fn gaps(&self) -> Vec<usize> {
        self.runs.iter().filter(|r| !r.bit).map(|r| r.len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::external_spectrum;

    fn seq(s: &str) -> BinarySeq {
        s.parse().unwrap()
    }

    fn set(v: usize, elements: &[usize]) -> ElementSet {
        ElementSet::new(AbelianGroup::cyclic(v).unwrap(), elements.to_vec()).unwrap()
    }

    #[test]
    fn set_sequence_correspondence() {
        assert_eq!(BinarySeq::from_set(&set(7, &[1, 2, 4])).unwrap(), seq("0110100"));
        assert_eq!(seq("0110100").to_set(), set(7, &[1, 2, 4]));
        assert_eq!(seq("11110000").to_set(), set(8, &[0, 1, 2, 3]));
        assert_eq!(BinarySeq::from_set(&set(9, &[0, 3, 6])).unwrap(), seq("100100100"));
        assert_eq!(seq("00000").to_set(), set(5, &[]));
        // All-ones boundary.
        let full = set(4, &[0, 1, 2, 3]);
        assert_eq!(BinarySeq::from_set(&full).unwrap(), seq("1111"));

        let product = AbelianGroup::new(vec![2, 2]).unwrap();
        let non_cyclic = ElementSet::new(product, vec![0, 1]).unwrap();
        assert_eq!(BinarySeq::from_set(&non_cyclic), Err(Error::NonCyclicGroup));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(seq("0110100").weight(), 3);
        assert_eq!(BinarySeq::zeros(11).unwrap().weight(), 0);
    }

    #[test]
    fn shift_examples() {
        let x = seq("0110100");
        assert_eq!(x.shift(1), seq("1101000"));
        assert_eq!(x.shift(0), x);
        assert_eq!(x.shift(3).shift(4), x.shift(7));
        assert_eq!(x.shift(-2), x.shift(5));
    }

    #[test]
    fn correlation_examples() {
        let x = seq("111000000");
        let y = seq("100100100");
        for delta in 0..9 {
            assert_eq!(x.correlation(&y, delta).unwrap(), 1);
        }
        let x = seq("11110000");
        let y = seq("11001100");
        for delta in 0..8 {
            assert_eq!(x.correlation(&y, delta).unwrap(), 2);
        }
        assert_eq!(x.correlation(&x, 0).unwrap(), x.weight());
        assert_eq!(
            x.correlation(&seq("110"), 0),
            Err(Error::LengthMismatch(8, 3))
        );
    }

    #[test]
    fn correlation_matches_external_spectrum() {
        // D(B, A) for A = {1,2,4}, B = {0,1,3} in Z_7, all deltas.
        let a = set(7, &[1, 2, 4]);
        let b = set(7, &[0, 1, 3]);
        let xa = BinarySeq::from_set(&a).unwrap();
        let xb = BinarySeq::from_set(&b).unwrap();
        let spectrum = external_spectrum(&b, &a).unwrap();
        for delta in 0..7 {
            assert_eq!(
                xa.correlation(&xb, delta as i64).unwrap(),
                spectrum.count(delta)
            );
        }
    }

    #[test]
    fn run_decomposition_examples() {
        let runs = seq("111100010").run_decomposition();
        assert_eq!(
            runs.runs,
            vec![
                Run { bit: true, len: 4 },
                Run { bit: false, len: 3 },
                Run { bit: true, len: 1 },
                Run { bit: false, len: 1 },
            ]
        );
        assert_eq!(runs.blocks(), vec![4, 1]);
        assert_eq!(runs.gaps(), vec![3, 1]);

        assert_eq!(
            seq("1111").run_decomposition().runs,
            vec![Run { bit: true, len: 4 }]
        );
        assert_eq!(
            seq("100100100").run_decomposition().runs,
            vec![
                Run { bit: true, len: 1 },
                Run { bit: false, len: 2 },
                Run { bit: true, len: 1 },
                Run { bit: false, len: 2 },
                Run { bit: true, len: 1 },
                Run { bit: false, len: 2 },
            ]
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!("011a".parse::<BinarySeq>(), Err(Error::InvalidSymbol('a')));
        assert_eq!("1".parse::<BinarySeq>(), Err(Error::SequenceTooShort(1)));
        assert_eq!(seq("0110100").to_string(), "0110100");
    }
}
