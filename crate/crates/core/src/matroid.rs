//! The matroid value type, represented canonically by its family of bases.
//!
//! Everything else — rank, closure, k-closure, flats, circuits, duality,
//! truncation, the paving and sparse-paving predicates — is derived on
//! demand. Equality of matroids is equality of `(n, rank, bases)`; all
//! counting is labeled, there is no isomorphism rejection anywhere.

use crate::sets::{johnson_adjacent, subsets_in_order, FlatFamily, SetFamily, SubSet, MAX_GROUNDSET};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("a matroid needs at least one basis")]
    EmptyBases,
    #[error("bases must all have the same cardinality")]
    MixedCardinality,
    #[error("basis uses elements outside the groundset")]
    ElementOutOfRange,
    #[error("groundset size {0} exceeds the cap of {MAX_GROUNDSET}")]
    GroundsetTooLarge(usize),
    #[error("rank {rank} exceeds groundset size {n}")]
    RankTooLarge { rank: usize, n: usize },
}

/// A labeled matroid on the groundset `{1, .., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: SetFamily,
}

impl Matroid {
    /// Build a matroid from its bases. Checks structure (nonempty,
    /// equicardinal, within the groundset) but not the exchange property;
    /// see [`Matroid::validate`] for that.
    pub fn from_bases(n: usize, bases: SetFamily) -> Result<Self, MatroidError> {
        if n > MAX_GROUNDSET {
            return Err(MatroidError::GroundsetTooLarge(n));
        }
        let first = bases.members().first().ok_or(MatroidError::EmptyBases)?;
        let rank = first.len();
        if rank > n {
            return Err(MatroidError::RankTooLarge { rank, n });
        }
        let full = SubSet::full(n);
        for b in bases.iter() {
            if b.len() != rank {
                return Err(MatroidError::MixedCardinality);
            }
            if !b.is_subset_of(full) {
                return Err(MatroidError::ElementOutOfRange);
            }
        }
        Ok(Matroid { n, rank, bases })
    }

    /// The uniform matroid `U(r, n)`: every `r`-set is a basis.
    pub fn uniform(r: usize, n: usize) -> Self {
        assert!(r <= n && n <= MAX_GROUNDSET);
        let bases = SetFamily::from_sorted(subsets_in_order(SubSet::full(n), r).collect());
        Matroid { n, rank: r, bases }
    }

    /// The rank-0 matroid on `{1, .., n}`; its single basis is the empty set.
    pub fn rank_zero(n: usize) -> Self {
        Matroid::uniform(0, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &SetFamily {
        &self.bases
    }

    pub fn is_basis(&self, s: SubSet) -> bool {
        self.bases.contains(s)
    }

    /// Basis-exchange check: for all bases `B`, `B'` and `x` in `B \ B'`
    /// there is `y` in `B' \ B` with `B - x + y` a basis. A nonempty
    /// equicardinal family with this property is exactly a basis family.
    pub fn validate(&self) -> bool {
        let members = self.bases.members();
        for &b in members {
            for &b2 in members {
                if b == b2 {
                    continue;
                }
                for x in b.difference(b2).iter() {
                    let stem = b.without(x);
                    let found = b2
                        .difference(b)
                        .iter()
                        .any(|y| self.bases.contains(stem.with(y)));
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, x: SubSet) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(x).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, x: SubSet) -> bool {
        self.rank_of(x) == x.len()
    }

    /// All elements whose addition does not raise the rank of `x`.
    pub fn closure(&self, x: SubSet) -> SubSet {
        let r = self.rank_of(x);
        let mut out = x;
        for e in x.complement(self.n).iter() {
            if self.rank_of(x.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    /// Set of loops, `closure(∅)`.
    pub fn loops(&self) -> SubSet {
        self.closure(SubSet::EMPTY)
    }

    /// Least `k`-closed superset of `x`: the fixpoint of adding closures of
    /// `k`-subsets. Only subsets of size `min(k, |x|)` need to be consulted
    /// because closure is monotone.
    pub fn k_closure(&self, k: usize, x: SubSet) -> SubSet {
        let mut cur = x;
        loop {
            let mut next = cur;
            let t = k.min(cur.len());
            for y in subsets_in_order(cur, t) {
                next = next.union(self.closure(y));
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Is `x` closed under closures of its subsets of size at most `k`?
    pub fn is_k_closed(&self, k: usize, x: SubSet) -> bool {
        self.k_closure(k, x) == x
    }

    /// All flats of the given rank, sorted. Every rank-`k` flat is the
    /// closure of an independent `k`-set.
    pub fn flats_of_rank(&self, k: usize) -> FlatFamily {
        assert!(k <= self.rank);
        SetFamily::new(
            subsets_in_order(SubSet::full(self.n), k)
                .filter(|&x| self.rank_of(x) == k)
                .map(|x| self.closure(x)),
        )
    }

    /// Flats of rank `rank - 1`; empty for the rank-0 matroid.
    pub fn hyperplanes(&self) -> FlatFamily {
        if self.rank == 0 {
            SetFamily::empty()
        } else {
            self.flats_of_rank(self.rank - 1)
        }
    }

    /// All minimal dependent sets. Circuit sizes never exceed `rank + 1`.
    pub fn circuits(&self) -> FlatFamily {
        let mut out = Vec::new();
        for size in 1..=(self.rank + 1).min(self.n) {
            for x in subsets_in_order(SubSet::full(self.n), size) {
                if self.rank_of(x) < size
                    && x.iter().all(|e| self.is_independent(x.without(e)))
                {
                    out.push(x);
                }
            }
        }
        SetFamily::from_sorted(out)
    }

    /// The rank-`k` truncation: bases are the independent `k`-sets.
    pub fn truncate(&self, k: usize) -> Matroid {
        assert!(k <= self.rank);
        if k == self.rank {
            return self.clone();
        }
        let bases = SetFamily::from_sorted(
            subsets_in_order(SubSet::full(self.n), k)
                .filter(|&x| self.rank_of(x) == k)
                .collect(),
        );
        Matroid { n: self.n, rank: k, bases }
    }

    /// The dual matroid: bases are the complements of bases.
    pub fn dualize(&self) -> Matroid {
        let bases = SetFamily::new(self.bases.iter().map(|b| b.complement(self.n)));
        Matroid {
            n: self.n,
            rank: self.n - self.rank,
            bases,
        }
    }

    /// Paving: every circuit has size at least `rank`, equivalently every
    /// `(rank-1)`-set is independent.
    pub fn is_paving(&self) -> bool {
        if self.rank == 0 {
            return true;
        }
        subsets_in_order(SubSet::full(self.n), self.rank - 1).all(|x| self.is_independent(x))
    }

    /// Sparse paving: the non-bases form a stable set in the Johnson graph
    /// `J(n, rank)`.
    pub fn is_sparse_paving(&self) -> bool {
        let nonbases: Vec<SubSet> = subsets_in_order(SubSet::full(self.n), self.rank)
            .filter(|&x| !self.is_basis(x))
            .collect();
        for (i, &a) in nonbases.iter().enumerate() {
            for &b in &nonbases[i + 1..] {
                if johnson_adjacent(a, b, self.rank) {
                    return false;
                }
            }
        }
        true
    }

    /// No circuit of size at most `k` inside `u`; equivalently all subsets
    /// of `u` of size `min(k, |u|)` are independent.
    pub fn is_k_free(&self, k: usize, u: SubSet) -> bool {
        let t = k.min(u.len());
        subsets_in_order(u, t).all(|x| self.is_independent(x))
    }
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, r={}, bases={:?})", self.n, self.rank, self.bases)
    }
}

/// Dense rank oracle for the hot paths: one byte per subset of the
/// groundset. Build once per matroid, then rank, closure, and k-closure are
/// table lookups. Intended for small `n`; memory is `2^n` bytes.
pub(crate) struct RankTable {
    n: usize,
    rank: Vec<u8>,
}

impl RankTable {
    pub fn new(m: &Matroid) -> Self {
        let n = m.n();
        let size = 1usize << n;
        let mut rank = vec![0u8; size];
        for (mask, slot) in rank.iter_mut().enumerate() {
            let mut best = 0u32;
            for b in m.bases.iter() {
                best = best.max((b.bits() & mask as u32).count_ones());
            }
            *slot = best as u8;
        }
        RankTable { n, rank }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self, s: SubSet) -> usize {
        self.rank[s.bits() as usize] as usize
    }

    pub fn is_independent(&self, s: SubSet) -> bool {
        self.rank(s) == s.len()
    }

    pub fn closure(&self, s: SubSet) -> SubSet {
        let r = self.rank(s);
        let mut out = s;
        for e in s.complement(self.n).iter() {
            if self.rank(s.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn k_closure(&self, k: usize, x: SubSet) -> SubSet {
        let mut cur = x;
        loop {
            let mut next = cur;
            let t = k.min(cur.len());
            for y in subsets_in_order(cur, t) {
                next = next.union(self.closure(y));
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}
