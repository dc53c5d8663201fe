use std::fmt;
use std::ops::{BitAnd, BitOr};

use super::{Bits256, GfMatrix, GfVector};

/// A subset of the 255 points of PG(7,2). Bit `p` marks the point with mask `p`;
/// bit 0 is always clear.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(Bits256);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(Bits256::EMPTY);

    pub fn all() -> PointSet {
        let mut b = Bits256::FULL;
        b.set(0, false);
        PointSet(b)
    }

    pub fn from_bits(bits: Bits256) -> PointSet {
        let mut b = bits;
        b.set(0, false);
        PointSet(b)
    }

    pub fn bits(&self) -> Bits256 {
        self.0
    }

    pub fn contains(&self, p: GfVector) -> bool {
        self.0.get(p.0 as usize)
    }

    pub fn insert(&mut self, p: GfVector) {
        if !p.is_zero() {
            self.0.set(p.0 as usize, true);
        }
    }

    pub fn remove(&mut self, p: GfVector) {
        self.0.set(p.0 as usize, false);
    }

    pub fn len(&self) -> usize {
        self.0.count() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = GfVector> + '_ {
        self.0.ones().map(|i| GfVector(i as u8))
    }

    pub fn complement(&self) -> PointSet {
        PointSet::from_bits(!self.0)
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        (self.0 & other.0).is_empty()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        (self.0 & !other.0).is_empty()
    }

    /// Image of the set under a collineation.
    pub fn image(&self, a: &GfMatrix) -> PointSet {
        self.iter().map(|p| a.apply(p)).collect()
    }

    /// Smallest point in integer mask order.
    pub fn min_point(&self) -> Option<GfVector> {
        self.0.first().map(|i| GfVector(i as u8))
    }
}

impl FromIterator<GfVector> for PointSet {
    fn from_iter<I: IntoIterator<Item = GfVector>>(iter: I) -> PointSet {
        let mut s = PointSet::EMPTY;
        for p in iter {
            s.insert(p);
        }
        s
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|p| p.shorthand()))
            .finish()
    }
}
