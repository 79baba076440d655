//! Finite abelian groups as direct products of cyclic factors.
//!
//! A group `Z_{n1} x ... x Z_{nr}` is stored by its factor moduli. Elements
//! are canonical indices in `[0, v)` with mixed-radix coordinates: index `i`
//! decodes to `(i mod n1, (i / n1) mod n2, ...)`. All arithmetic is additive.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported group order. Keeps index arithmetic comfortably inside
/// `usize` on 64-bit targets; every workload here is desk-scale anyway.
const MAX_ORDER: usize = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct AbelianGroup {
    moduli: Vec<usize>,
    order: usize,
}

#[derive(Serialize, Deserialize)]
struct RawGroup {
    moduli: Vec<usize>,
}

impl TryFrom<RawGroup> for AbelianGroup {
    type Error = Error;

    fn try_from(raw: RawGroup) -> Result<Self> {
        AbelianGroup::new(raw.moduli)
    }
}

impl From<AbelianGroup> for RawGroup {
    fn from(group: AbelianGroup) -> Self {
        RawGroup {
            moduli: group.moduli,
        }
    }
}

impl AbelianGroup {
    /// Direct product of cyclic groups with the given moduli, each `>= 2`.
    pub fn new(moduli: Vec<usize>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::EmptyGroup);
        }
        let mut order: usize = 1;
        for &n in &moduli {
            if n < 2 {
                return Err(Error::InvalidModulus(n));
            }
            order = order.checked_mul(n).ok_or(Error::GroupTooLarge)?;
            if order > MAX_ORDER {
                return Err(Error::GroupTooLarge);
            }
        }
        Ok(AbelianGroup { moduli, order })
    }

    /// The cyclic group `Z_v`.
    pub fn cyclic(v: usize) -> Result<Self> {
        AbelianGroup::new(vec![v])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn is_cyclic(&self) -> bool {
        self.moduli.len() == 1
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn check_element(&self, i: usize) -> Result<()> {
        if i < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: i,
                order: self.order,
            })
        }
    }

    /// Mixed-radix coordinates of an element index.
    pub fn decode(&self, mut i: usize) -> Vec<usize> {
        debug_assert!(i < self.order);
        let mut coords = Vec::with_capacity(self.moduli.len());
        for &n in &self.moduli {
            coords.push(i % n);
            i /= n;
        }
        coords
    }

    /// Inverse of [`decode`](Self::decode); coordinates are reduced per factor.
    pub fn encode(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.moduli.len());
        let mut index = 0;
        let mut base = 1;
        for (&c, &n) in coords.iter().zip(&self.moduli) {
            index += (c % n) * base;
            base *= n;
        }
        index
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        if self.moduli.len() == 1 {
            return (a + b) % self.order;
        }
        let (mut a, mut b) = (a, b);
        let mut index = 0;
        let mut base = 1;
        for &n in &self.moduli {
            index += ((a % n + b % n) % n) * base;
            a /= n;
            b /= n;
            base *= n;
        }
        index
    }

    pub fn neg(&self, a: usize) -> usize {
        debug_assert!(a < self.order);
        if self.moduli.len() == 1 {
            return (self.order - a) % self.order;
        }
        let mut a = a;
        let mut index = 0;
        let mut base = 1;
        for &n in &self.moduli {
            index += ((n - a % n) % n) * base;
            a /= n;
            base *= n;
        }
        index
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        if self.moduli.len() == 1 {
            return (a + self.order - b) % self.order;
        }
        self.add(a, self.neg(b))
    }
}
