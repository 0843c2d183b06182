//! Compact point-sets for explicit finite spaces.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest carrier an explicit space may have.
pub const MAX_POINTS: usize = 64;

/// A subset of `{0, .., n-1}` with `n <= 64`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_POINTS);
        PointSet(1u64 << x)
    }

    pub fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_POINTS && self.0 & (1u64 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to the carrier `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> PointSet {
        PointSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    /// Every subset of `{0, .., n-1}`, in mask order. Only sensible for small `n`.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        assert!(n < 32, "subset enumeration over {n} points");
        (0u64..(1u64 << n)).map(PointSet)
    }

    /// All subsets of `self` (including empty and `self`).
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let full = self.0;
        let mut sub = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = sub;
            if sub == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            Some(PointSet(out))
        })
    }

    /// Order by cardinality, then lexicographically by sorted point list.
    pub fn canonical_cmp(&self, other: &PointSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl From<PointSet> for Vec<usize> {
    fn from(s: PointSet) -> Self {
        s.iter().collect()
    }
}

impl TryFrom<Vec<usize>> for PointSet {
    type Error = String;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        if let Some(&x) = v.iter().find(|&&x| x >= MAX_POINTS) {
            return Err(format!("point {x} exceeds the {MAX_POINTS}-point limit"));
        }
        Ok(v.into_iter().collect())
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Sort a family by (cardinality, lexicographic) and drop duplicates.
pub fn sort_family(family: &mut Vec<PointSet>) {
    family.sort_by(PointSet::canonical_cmp);
    family.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_mask_cover_everything_once() {
        let s: PointSet = [0, 2, 5].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        let mut bits: Vec<u64> = subs.iter().map(|t| t.bits()).collect();
        bits.sort();
        bits.dedup();
        assert_eq!(bits.len(), 8);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut fam = vec![
            PointSet::from_iter([1, 2]),
            PointSet::from_iter([0]),
            PointSet::EMPTY,
            PointSet::from_iter([0, 2]),
            PointSet::from_iter([2]),
        ];
        sort_family(&mut fam);
        let shown: Vec<String> = fam.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{}", "{0}", "{2}", "{0 2}", "{1 2}"]);
    }

    #[test]
    fn full_and_complement() {
        assert_eq!(PointSet::full(3).len(), 3);
        assert_eq!(PointSet::full(64).len(), 64);
        assert_eq!(PointSet::singleton(1).complement(3), PointSet::from_iter([0, 2]));
    }
}
