//! Bitmap subsets of a small groundset, the graded lexicographic order, and
//! ordered set families.
//!
//! Elements are 1-based: the groundset is `{1, .., n}` and element `i`
//! occupies bit `i - 1` of the word. All set arithmetic is exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr};

/// Hard cap on the groundset size; one machine word holds any subset.
pub const MAX_GROUNDSET: usize = 24;

/// A subset of `{1, .., n}` packed into a bitmap.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct SubSet(u32);

impl SubSet {
    /// The empty set.
    pub const EMPTY: SubSet = SubSet(0);

    pub fn from_bits(bits: u32) -> Self {
        assert!(bits < (1u32 << MAX_GROUNDSET), "bits beyond the groundset cap");
        SubSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The full groundset `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUNDSET, "groundset larger than {MAX_GROUNDSET}");
        SubSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(e: usize) -> Self {
        assert!((1..=MAX_GROUNDSET).contains(&e), "element {e} out of range");
        SubSet(1 << (e - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut bits = 0u32;
        for e in elems {
            assert!((1..=MAX_GROUNDSET).contains(&e), "element {e} out of range");
            bits |= 1 << (e - 1);
        }
        SubSet(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e >= 1 && e <= MAX_GROUNDSET && self.0 & (1 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        SubSet(self.0 | Self::singleton(e).0)
    }

    pub fn without(self, e: usize) -> Self {
        SubSet(self.0 & !Self::singleton(e).0)
    }

    pub fn union(self, other: Self) -> Self {
        SubSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SubSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        SubSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Self) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }
}

impl BitOr for SubSet {
    type Output = SubSet;
    fn bitor(self, rhs: SubSet) -> SubSet {
        self.union(rhs)
    }
}

impl BitAnd for SubSet {
    type Output = SubSet;
    fn bitand(self, rhs: SubSet) -> SubSet {
        self.intersection(rhs)
    }
}

/// Graded lexicographic order: `X < Y` iff `|X| < |Y|`, or the cardinalities
/// agree and the smallest element of the symmetric difference lies in `X`.
impl Ord for SubSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let d = self.0 ^ other.0;
            if d == 0 {
                Ordering::Equal
            } else if self.0 & (d & d.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for SubSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Elements separated by single spaces; the empty set prints as nothing.
impl fmt::Display for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize + 1;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }
}

/// Three-way comparison in the graded lexicographic order.
pub fn graded_lex_cmp(x: SubSet, y: SubSet) -> Ordering {
    x.cmp(&y)
}

/// All `t`-subsets of `u` as a stream, in graded lexicographic order.
pub fn subsets_in_order(u: SubSet, t: usize) -> SubsetsOfSize {
    SubsetsOfSize::new(u, t)
}

/// Iterator over the `t`-subsets of a fixed set, emitted in graded
/// lexicographic order (equivalently, lexicographic order of the sorted
/// element sequences).
pub struct SubsetsOfSize {
    elements: Vec<usize>,
    indices: Vec<usize>,
    exhausted: bool,
}

impl SubsetsOfSize {
    fn new(u: SubSet, t: usize) -> Self {
        let elements: Vec<usize> = u.iter().collect();
        let exhausted = t > elements.len();
        SubsetsOfSize {
            elements,
            indices: (0..t).collect(),
            exhausted,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = SubSet;

    fn next(&mut self) -> Option<SubSet> {
        if self.exhausted {
            return None;
        }
        let out = SubSet::from_elements(self.indices.iter().map(|&i| self.elements[i]));
        // advance to the next index combination
        let t = self.indices.len();
        let m = self.elements.len();
        let mut i = t;
        loop {
            if i == 0 {
                self.exhausted = true;
                break;
            }
            i -= 1;
            if self.indices[i] < m - t + i {
                self.indices[i] += 1;
                for j in i + 1..t {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// The `|u| - t + 1` windows of `t` order-consecutive elements of `u`.
pub fn consecutive_subsets(u: SubSet, t: usize) -> SetFamily {
    assert!(t >= 1, "window size must be positive");
    let elements: Vec<usize> = u.iter().collect();
    if t > elements.len() {
        return SetFamily::empty();
    }
    SetFamily::new(
        elements
            .windows(t)
            .map(|w| SubSet::from_elements(w.iter().copied())),
    )
}

/// Adjacency in the Johnson graph `J(n, r)`: two `r`-sets are adjacent when
/// they intersect in exactly `r - 1` elements.
pub fn johnson_adjacent(x: SubSet, y: SubSet, r: usize) -> bool {
    assert!(x.len() == r && y.len() == r, "johnson_adjacent wants two {r}-sets");
    x.intersection(y).len() == r - 1
}

/// A deduplicated family of subsets, kept strictly increasing in the graded
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SetFamily {
    members: Vec<SubSet>,
}

/// Families of flats, hyperplanes, or Steiner blocks share the ordered-family
/// representation.
pub type FlatFamily = SetFamily;

impl SetFamily {
    pub fn empty() -> Self {
        SetFamily { members: Vec::new() }
    }

    pub fn new<I: IntoIterator<Item = SubSet>>(members: I) -> Self {
        let mut v: Vec<SubSet> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SetFamily { members: v }
    }

    /// Wrap a vector that is already strictly increasing.
    pub fn from_sorted(members: Vec<SubSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[SubSet] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = SubSet> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, s: SubSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Does some member contain `s`?
    pub fn any_member_contains(&self, s: SubSet) -> bool {
        self.members.iter().any(|&m| s.is_subset_of(m))
    }

    pub fn union_of_members(&self) -> SubSet {
        self.members
            .iter()
            .fold(SubSet::EMPTY, |acc, &m| acc.union(m))
    }

    /// No member properly contained in another.
    pub fn is_antichain(&self) -> bool {
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return false;
                }
            }
        }
        true
    }

    /// The inclusionwise maximal members.
    pub fn maximal_members(&self) -> SetFamily {
        let keep: Vec<SubSet> = self
            .members
            .iter()
            .copied()
            .filter(|&m| !self.members.iter().any(|&o| m.is_proper_subset_of(o)))
            .collect();
        SetFamily::from_sorted(keep)
    }
}

impl FromIterator<SubSet> for SetFamily {
    fn from_iter<I: IntoIterator<Item = SubSet>>(iter: I) -> Self {
        SetFamily::new(iter)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = SubSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, SubSet>>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(elems: &[usize]) -> SubSet {
        SubSet::from_elements(elems.iter().copied())
    }

    #[test]
    fn graded_lex_cardinality_first() {
        assert_eq!(graded_lex_cmp(s(&[3]), s(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn graded_lex_min_of_symmetric_difference() {
        assert_eq!(graded_lex_cmp(s(&[1, 2]), s(&[1, 3])), Ordering::Less);
        assert_eq!(graded_lex_cmp(s(&[1, 2]), s(&[1, 2])), Ordering::Equal);
        // {1,4} precedes {2,3}: the smallest differing element is 1
        assert_eq!(graded_lex_cmp(s(&[1, 4]), s(&[2, 3])), Ordering::Less);
        assert_eq!(graded_lex_cmp(s(&[2, 3]), s(&[1, 4])), Ordering::Greater);
    }

    #[test]
    fn subsets_of_size_in_order() {
        let got: Vec<SubSet> = subsets_in_order(s(&[1, 2, 3]), 2).collect();
        assert_eq!(got, vec![s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]);

        let got: Vec<SubSet> = subsets_in_order(s(&[1, 2, 3]), 0).collect();
        assert_eq!(got, vec![SubSet::EMPTY]);

        let got: Vec<SubSet> = subsets_in_order(s(&[2, 5, 9]), 3).collect();
        assert_eq!(got, vec![s(&[2, 5, 9])]);

        assert_eq!(subsets_in_order(s(&[1, 2]), 3).count(), 0);
    }

    #[test]
    fn subsets_count_is_binomial() {
        let u = SubSet::full(7);
        for t in 0..=7 {
            let expect = (0..t).fold(1u64, |a, i| a * (7 - i as u64)) / (1..=t.max(1) as u64).product::<u64>();
            let expect = if t == 0 { 1 } else { expect };
            assert_eq!(subsets_in_order(u, t).count() as u64, expect);
        }
    }

    #[test]
    fn consecutive_windows() {
        assert_eq!(
            consecutive_subsets(s(&[1, 3, 6]), 2).members(),
            &[s(&[1, 3]), s(&[3, 6])]
        );
        assert_eq!(consecutive_subsets(s(&[1, 2, 3]), 3).members(), &[s(&[1, 2, 3])]);
        let w = consecutive_subsets(s(&[1, 2, 3, 4]), 3);
        assert_eq!(w.members(), &[s(&[1, 2, 3]), s(&[2, 3, 4])]);
        assert_eq!(w.len(), 4 - 3 + 1);
        assert!(consecutive_subsets(s(&[1, 2]), 3).is_empty());
    }

    #[test]
    fn johnson_adjacency() {
        assert!(johnson_adjacent(s(&[1, 2, 3]), s(&[1, 2, 4]), 3));
        assert!(!johnson_adjacent(s(&[1, 2, 3]), s(&[1, 2, 3]), 3));
        assert!(!johnson_adjacent(s(&[1, 2, 3]), s(&[1, 4, 5]), 3));
    }

    #[test]
    fn family_dedups_and_sorts() {
        let f = SetFamily::new(vec![s(&[2, 3]), s(&[1]), s(&[2, 3]), s(&[1, 4])]);
        assert_eq!(f.members(), &[s(&[1]), s(&[1, 4]), s(&[2, 3])]);
        assert!(f.contains(s(&[1, 4])));
        assert!(!f.contains(s(&[2])));
    }

    #[test]
    fn maximal_members_filter() {
        let f = SetFamily::new(vec![s(&[1]), s(&[1, 2]), s(&[3]), s(&[1, 2, 4])]);
        assert_eq!(f.maximal_members().members(), &[s(&[3]), s(&[1, 2, 4])]);
        assert!(!f.is_antichain());
        assert!(f.maximal_members().is_antichain());
    }

    proptest! {
        #[test]
        fn graded_lex_is_a_total_order(a in 0u32..(1 << 12), b in 0u32..(1 << 12), c in 0u32..(1 << 12)) {
            let (x, y, z) = (SubSet::from_bits(a), SubSet::from_bits(b), SubSet::from_bits(c));
            // antisymmetry
            prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
            prop_assert_eq!(x.cmp(&y) == Ordering::Equal, x == y);
            // transitivity
            if x <= y && y <= z {
                prop_assert!(x <= z);
            }
        }

        #[test]
        fn subset_stream_strictly_increasing(bits in 0u32..(1 << 10), t in 0usize..6) {
            let u = SubSet::from_bits(bits);
            let v: Vec<SubSet> = subsets_in_order(u, t).collect();
            prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
            for x in &v {
                prop_assert!(x.is_subset_of(u));
                prop_assert_eq!(x.len(), t);
            }
        }

        #[test]
        fn consecutive_count(bits in 1u32..(1 << 10), t in 1usize..6) {
            let u = SubSet::from_bits(bits);
            let fam = consecutive_subsets(u, t);
            if t <= u.len() {
                prop_assert_eq!(fam.len(), u.len() - t + 1);
            } else {
                prop_assert!(fam.is_empty());
            }
        }
    }
}
