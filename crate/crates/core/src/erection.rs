//! Erections of matroids: Knuth's procedure, Crapo's validity conditions,
//! the completion operator, and exhaustive enumeration of all erections.
//!
//! An erection of a rank-`r` matroid `M` is a matroid `N` with `T(N) = M`
//! (nontrivial) or `N = M` (trivial). Nontrivial erections are in bijection
//! with families `H` satisfying Crapo's three conditions: every member has
//! rank `r` in `M`, every member is `(r-1)`-closed, and every basis of `M`
//! lies in exactly one member. Knuth's procedure produces such a family from
//! an arbitrary seed collection `U`:
//!
//! 1. start from `U` together with `F + e` for every hyperplane `F` and
//!    element `e` outside `F`;
//! 2. while two distinct members intersect in a spanning set, replace them
//!    by their union;
//! 3. keep the inclusionwise maximal members.
//!
//! The final maximality step absorbs seeds of deficient rank, which can
//! never merge; for spanning seeds it is a no-op. The result depends only on
//! `M` and `U`, not on the merge order, and equals the maximal members of
//! the completion operator — [`completion`] computes the latter directly
//! over dense down-sets and exists to cross-check [`knuth_flats`].

use crate::cover::{ExactCoverInstance, Solutions};
use crate::matroid::{Matroid, RankTable};
use crate::sets::{subsets_in_order, FlatFamily, SetFamily, SubSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Candidate rank-`r` flat family of an erection: pairwise incomparable, or
/// the trivial family containing only the groundset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErectionFlats {
    flats: FlatFamily,
}

impl ErectionFlats {
    pub fn family(&self) -> &FlatFamily {
        &self.flats
    }

    pub fn into_family(self) -> FlatFamily {
        self.flats
    }

    /// The trivial erection is signalled by the family `{E}`.
    pub fn is_trivial(&self, n: usize) -> bool {
        self.flats.len() == 1 && self.flats.members()[0] == SubSet::full(n)
    }
}

fn merge_fixpoint(table: &RankTable, r: usize, init: Vec<SubSet>) -> Vec<SubSet> {
    let mut queue = init;
    queue.sort_unstable();
    queue.dedup();
    let mut stable: Vec<SubSet> = Vec::new();
    while let Some(mut h) = queue.pop() {
        let mut i = 0;
        while i < stable.len() {
            if h == stable[i] {
                stable.swap_remove(i);
                continue;
            }
            if table.rank(h.intersection(stable[i])) == r {
                h = h.union(stable[i]);
                stable.swap_remove(i);
                i = 0;
            } else {
                i += 1;
            }
        }
        stable.push(h);
    }
    stable
}

fn knuth_init(m: &Matroid, table: &RankTable, u: &SetFamily) -> Vec<SubSet> {
    let mut init: Vec<SubSet> = u.iter().collect();
    if m.rank() == 0 {
        // the empty set is the single basis and seeds the merge
        init.push(SubSet::EMPTY);
    } else {
        for f in hyperplanes_with(m, table).iter() {
            for e in f.complement(m.n()).iter() {
                init.push(f.with(e));
            }
        }
    }
    init
}

fn hyperplanes_with(m: &Matroid, table: &RankTable) -> FlatFamily {
    if m.rank() == 0 {
        return SetFamily::empty();
    }
    let k = m.rank() - 1;
    SetFamily::new(
        subsets_in_order(SubSet::full(m.n()), k)
            .filter(|&x| table.rank(x) == k)
            .map(|x| table.closure(x)),
    )
}

fn maximal_only(sets: Vec<SubSet>) -> FlatFamily {
    let keep: Vec<SubSet> = sets
        .iter()
        .copied()
        .filter(|&a| !sets.iter().any(|&b| a.is_proper_subset_of(b)))
        .collect();
    SetFamily::new(keep)
}

pub(crate) fn knuth_flats_with(m: &Matroid, table: &RankTable, u: &SetFamily) -> ErectionFlats {
    let fixed = merge_fixpoint(table, m.rank(), knuth_init(m, table, u));
    ErectionFlats {
        flats: maximal_only(fixed),
    }
}

/// Run Knuth's procedure on seed collection `u`.
pub fn knuth_flats(m: &Matroid, u: &SetFamily) -> ErectionFlats {
    let table = RankTable::new(m);
    knuth_flats_with(m, &table, u)
}

/// Same fixpoint, but merging a uniformly random qualifying pair at every
/// step. Exists to exercise order-independence of the output.
pub fn knuth_flats_randomized(m: &Matroid, u: &SetFamily, seed: u64) -> ErectionFlats {
    let table = RankTable::new(m);
    let r = m.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = knuth_init(m, &table, u);
    work.sort_unstable();
    work.dedup();
    loop {
        let mut pairs = Vec::new();
        for i in 0..work.len() {
            for j in i + 1..work.len() {
                if table.rank(work[i].intersection(work[j])) == r {
                    pairs.push((i, j));
                }
            }
        }
        if pairs.is_empty() {
            break;
        }
        let (i, j) = pairs[rng.gen_range(0..pairs.len())];
        work[i] = work[i].union(work[j]);
        work.swap_remove(j);
        work.sort_unstable();
        work.dedup();
    }
    ErectionFlats {
        flats: maximal_only(work),
    }
}

/// The completion of `z`: the smallest family containing `z` that is closed
/// downward, contains every basis, is closed under `(r-1)`-closure, and is
/// closed under unions of members with spanning intersection. Returns its
/// maximal members, which agree with [`knuth_flats`]; computed directly over
/// a dense table of all `2^n` subsets, so intended for small `n` only.
pub fn completion(m: &Matroid, z: &SetFamily) -> ErectionFlats {
    let n = m.n();
    assert!(n <= 20, "completion materialises all 2^n subsets");
    let r = m.rank();
    let table = RankTable::new(m);
    let size = 1usize << n;
    let mut present = vec![false; size];
    let mut queue: Vec<u32> = Vec::new();

    fn add(bits: u32, present: &mut [bool], queue: &mut Vec<u32>) {
        if !present[bits as usize] {
            present[bits as usize] = true;
            queue.push(bits);
        }
    }

    for b in m.bases().iter() {
        add(b.bits(), &mut present, &mut queue);
    }
    for zm in z.iter() {
        add(zm.bits(), &mut present, &mut queue);
    }
    let mut rank_r: Vec<SubSet> = Vec::new();
    while let Some(bits) = queue.pop() {
        let x = SubSet::from_bits(bits);
        for e in x.iter() {
            add(x.without(e).bits(), &mut present, &mut queue);
        }
        if r >= 1 {
            add(table.k_closure(r - 1, x).bits(), &mut present, &mut queue);
        }
        if table.rank(x) == r {
            for i in 0..rank_r.len() {
                let other = rank_r[i];
                if table.rank(x.intersection(other)) == r {
                    add(x.union(other).bits(), &mut present, &mut queue);
                }
            }
            rank_r.push(x);
        }
    }

    // the family is closed downward, so a member is maximal iff no
    // one-element extension is present
    let mut maximal = Vec::new();
    for bits in 0..size {
        if present[bits] {
            let x = SubSet::from_bits(bits as u32);
            if x
                .complement(n)
                .iter()
                .all(|e| !present[x.with(e).bits() as usize])
            {
                maximal.push(x);
            }
        }
    }
    ErectionFlats {
        flats: SetFamily::new(maximal),
    }
}

/// Crapo's conditions: every member of `h` has rank `r` and is
/// `(r-1)`-closed, and every basis lies in exactly one member.
pub fn crapo_valid(m: &Matroid, h: &FlatFamily) -> bool {
    let r = m.rank();
    let table = RankTable::new(m);
    for f in h.iter() {
        if table.rank(f) != r {
            return false;
        }
        if r >= 1 && table.k_closure(r - 1, f) != f {
            return false;
        }
    }
    m.bases()
        .iter()
        .all(|b| h.iter().filter(|&f| b.is_subset_of(f)).count() == 1)
}

/// Completeness of a down-set, given by its maximal members; equivalent to
/// Crapo validity of those members.
pub fn is_complete(m: &Matroid, maximal_members: &SetFamily) -> bool {
    crapo_valid(m, &maximal_members.maximal_members())
}

pub(crate) fn matroid_from_flats_with(
    m: &Matroid,
    table: &RankTable,
    flats: &ErectionFlats,
) -> Matroid {
    let n = m.n();
    if flats.is_trivial(n) {
        return m.clone();
    }
    let r = m.rank();
    let bases: Vec<SubSet> = subsets_in_order(SubSet::full(n), r + 1)
        .filter(|&s| table.rank(s) == r && !flats.flats.iter().any(|f| s.is_subset_of(f)))
        .collect();
    Matroid::from_bases(n, SetFamily::from_sorted(bases))
        .expect("a valid erection flat family yields a nonempty basis family")
}

/// The erection `M ↑ U`: the matroid whose rank-`r` flats are
/// `knuth_flats(m, u)`, or `m` itself when that family is trivial. A
/// `(r+1)`-set is a basis of the result iff it spans `m` and lies inside no
/// member of the flat family.
pub fn erect(m: &Matroid, u: &SetFamily) -> Matroid {
    let table = RankTable::new(m);
    let flats = knuth_flats_with(m, &table, u);
    matroid_from_flats_with(m, &table, &flats)
}

/// Erection on the empty seed; equals `m` iff `m` has no nontrivial erection.
pub fn free_erection(m: &Matroid) -> Matroid {
    erect(m, &SetFamily::empty())
}

fn erection_candidates(m: &Matroid, table: &RankTable) -> Vec<SubSet> {
    let n = m.n();
    let r = m.rank();
    let full = SubSet::full(n);
    let mut out = Vec::new();
    for bits in 0u32..(1 << n) {
        let x = SubSet::from_bits(bits);
        if x == full || table.rank(x) != r {
            continue;
        }
        if r == 0 || table.k_closure(r - 1, x) == x {
            out.push(x);
        }
    }
    out.sort_unstable();
    out
}

/// Iterator over all nontrivial erections of a matroid, each exactly once,
/// in a deterministic order.
///
/// Candidate rank-`r` flats are the `(r-1)`-closed spanning proper subsets;
/// an exact cover of the bases by candidates is precisely a family meeting
/// Crapo's conditions.
pub struct Erections {
    m: Matroid,
    table: RankTable,
    candidates: Vec<SubSet>,
    sols: Solutions,
}

impl Erections {
    fn new(m: Matroid) -> Self {
        let table = RankTable::new(&m);
        let candidates = erection_candidates(&m, &table);
        let sols = erection_instance(&m, &candidates).solutions();
        Erections {
            m,
            table,
            candidates,
            sols,
        }
    }
}

fn erection_instance(m: &Matroid, candidates: &[SubSet]) -> ExactCoverInstance {
    let bases = m.bases().members();
    let mut inst = ExactCoverInstance::new(bases.len());
    for &h in candidates {
        let cols: Vec<usize> = bases
            .iter()
            .enumerate()
            .filter(|(_, &b)| b.is_subset_of(h))
            .map(|(i, _)| i)
            .collect();
        inst.add_row(cols);
    }
    inst
}

impl Iterator for Erections {
    type Item = Matroid;

    fn next(&mut self) -> Option<Matroid> {
        let rows = self.sols.next()?;
        // single-member families cannot cover every basis with a proper set
        debug_assert!(self.m.rank() == 0 || rows.len() >= 2);
        let flats = ErectionFlats {
            flats: SetFamily::new(rows.iter().map(|&i| self.candidates[i])),
        };
        Some(matroid_from_flats_with(&self.m, &self.table, &flats))
    }
}

/// Every nontrivial erection of `m`, exactly once. Empty when only the
/// trivial erection exists (in particular whenever `rank = n`).
pub fn enumerate_erections(m: &Matroid) -> Erections {
    Erections::new(m.clone())
}

/// Number of nontrivial erections, without materialising the matroids.
pub fn count_erections(m: &Matroid) -> u64 {
    let table = RankTable::new(m);
    let candidates = erection_candidates(m, &table);
    erection_instance(m, &candidates).count_solutions()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{fano, fano_lines, parallel_class_matroid, s};

    #[test]
    fn seeded_triple_absorbs_points() {
        let m = Matroid::uniform(1, 4);
        let u = SetFamily::new([s(&[1, 2, 3])]);
        let got = knuth_flats(&m, &u);
        assert_eq!(got.family(), &SetFamily::new([s(&[1, 2, 3]), s(&[4])]));
    }

    #[test]
    fn uniform_free_flats_are_all_k_sets() {
        for (k, n) in [(1, 4), (2, 5), (3, 6)] {
            let got = knuth_flats(&Matroid::uniform(k, n), &SetFamily::empty());
            let want: SetFamily = subsets_in_order(SubSet::full(n), k).collect();
            assert_eq!(got.family(), &want);
        }
    }

    #[test]
    fn rank_zero_seeds_merge_into_their_union() {
        let m = Matroid::rank_zero(4);
        let u = SetFamily::new([s(&[1]), s(&[3])]);
        assert_eq!(knuth_flats(&m, &u).family(), &SetFamily::new([s(&[1, 3])]));
        // empty seed: the single basis is the empty set
        assert_eq!(
            knuth_flats(&m, &SetFamily::empty()).family(),
            &SetFamily::new([SubSet::EMPTY])
        );
    }

    #[test]
    fn erect_point_line_example() {
        let m = Matroid::uniform(1, 4);
        let u = SetFamily::new([s(&[1, 2, 3])]);
        let n = erect(&m, &u);
        assert_eq!(n.rank(), 2);
        assert_eq!(
            n.bases(),
            &SetFamily::new([s(&[1, 4]), s(&[2, 4]), s(&[3, 4])])
        );
        assert_eq!(n.flats_of_rank(1), SetFamily::new([s(&[1, 2, 3]), s(&[4])]));
    }

    #[test]
    fn erecting_uniform_with_fano_lines_gives_fano() {
        let n = erect(&Matroid::uniform(2, 7), &fano_lines());
        assert_eq!(n, fano());
    }

    #[test]
    fn erect_rank_zero_gives_loops() {
        let m = Matroid::rank_zero(4);
        let u = SetFamily::new([s(&[1]), s(&[3])]);
        let n = erect(&m, &u);
        assert_eq!(n.rank(), 1);
        assert_eq!(n.loops(), s(&[1, 3]));
        // seeds covering the groundset leave no room for a rank increase
        let full = SetFamily::new([s(&[1, 2]), s(&[3, 4])]);
        assert_eq!(erect(&m, &full), m);
    }

    #[test]
    fn free_erection_of_uniform_raises_rank() {
        assert_eq!(free_erection(&Matroid::uniform(2, 5)), Matroid::uniform(3, 5));
        assert_eq!(free_erection(&Matroid::uniform(4, 4)), Matroid::uniform(4, 4));
        assert_eq!(free_erection(&Matroid::rank_zero(3)), Matroid::uniform(1, 3));
    }

    /// With a full parallel class `{1,2,3}` on four points no independent
    /// 3-set exists, so only the trivial erection remains.
    #[test]
    fn saturated_parallel_class_has_no_erection() {
        let m = parallel_class_matroid();
        assert_eq!(free_erection(&m), m);
        assert_eq!(count_erections(&m), 0);
    }

    /// A single parallel pair leaves room: the free erection has rank 3.
    #[test]
    fn parallel_pair_erects_to_rank_three() {
        let bases: SetFamily = subsets_in_order(SubSet::full(4), 2)
            .filter(|&x| x != s(&[1, 2]))
            .collect();
        let m = Matroid::from_bases(4, bases).unwrap();
        let n = free_erection(&m);
        assert_eq!(n.rank(), 3);
        assert_eq!(n.truncate(2), m);
        assert_eq!(
            n.bases(),
            &SetFamily::new([s(&[1, 3, 4]), s(&[2, 3, 4])])
        );
    }

    #[test]
    fn crapo_examples() {
        assert!(crapo_valid(&Matroid::uniform(2, 7), &fano_lines()));
        let trivial = SetFamily::new([SubSet::full(5)]);
        assert!(crapo_valid(&Matroid::uniform(2, 5), &trivial));
        let bad = SetFamily::new([s(&[1, 2, 3]), s(&[1, 3, 4])]);
        assert!(!crapo_valid(&Matroid::uniform(2, 4), &bad));
    }

    #[test]
    fn completeness_via_maximal_members() {
        let m = Matroid::uniform(2, 4);
        assert!(is_complete(&m, &SetFamily::new([SubSet::full(4)])));
        assert!(!is_complete(
            &m,
            &SetFamily::new([s(&[1, 2, 3]), s(&[1, 3, 4])])
        ));
        // hyperplane family of a known erection
        assert!(is_complete(&Matroid::uniform(2, 7), &fano_lines()));
    }

    #[test]
    fn completion_agrees_with_procedure() {
        let cases: Vec<(Matroid, SetFamily)> = vec![
            (Matroid::uniform(1, 4), SetFamily::new([s(&[1, 2, 3])])),
            (Matroid::uniform(2, 5), SetFamily::empty()),
            (Matroid::uniform(2, 5), SetFamily::new([s(&[1, 5])])),
            (Matroid::rank_zero(4), SetFamily::new([s(&[1]), s(&[3])])),
            (Matroid::rank_zero(4), SetFamily::empty()),
            (Matroid::uniform(2, 7), fano_lines()),
            (parallel_class_matroid(), SetFamily::empty()),
            (fano(), SetFamily::empty()),
            // seeds of deficient rank must be absorbed, not emitted
            (Matroid::uniform(2, 4), SetFamily::new([s(&[1])])),
        ];
        for (m, u) in cases {
            assert_eq!(
                knuth_flats(&m, &u),
                completion(&m, &u),
                "matroid {m:?} seed {u:?}"
            );
        }
    }

    #[test]
    fn deficient_rank_seeds_are_absorbed() {
        let m = Matroid::uniform(2, 4);
        let got = knuth_flats(&m, &SetFamily::new([s(&[1])]));
        let want: SetFamily = subsets_in_order(SubSet::full(4), 2).collect();
        assert_eq!(got.family(), &want);
    }

    #[test]
    fn randomized_merge_order_is_immaterial() {
        let cases: Vec<(Matroid, SetFamily)> = vec![
            (Matroid::uniform(2, 6), SetFamily::new([s(&[1, 2, 3]), s(&[3, 4, 5])])),
            (Matroid::uniform(1, 5), SetFamily::new([s(&[1, 2]), s(&[2, 3]), s(&[4, 5])])),
            (fano(), SetFamily::new([s(&[1, 2, 4, 5])])),
        ];
        for (m, u) in cases {
            let canonical = knuth_flats(&m, &u);
            for seed in 0..25 {
                assert_eq!(knuth_flats_randomized(&m, &u, seed), canonical);
            }
        }
    }

    #[test]
    fn two_point_free_matroid_has_unique_erection() {
        let got: Vec<Matroid> = enumerate_erections(&Matroid::uniform(1, 2)).collect();
        assert_eq!(got, vec![Matroid::uniform(2, 2)]);
    }

    #[test]
    fn free_matroid_has_no_erections() {
        assert_eq!(enumerate_erections(&Matroid::uniform(3, 3)).count(), 0);
    }

    #[test]
    fn erections_satisfy_crapo_and_truncate_back() {
        let m = Matroid::uniform(2, 5);
        let mut count = 0;
        for n in enumerate_erections(&m) {
            count += 1;
            assert_eq!(n.rank(), 3);
            assert_eq!(n.truncate(2), m);
            assert!(crapo_valid(&m, &n.flats_of_rank(2)));
        }
        assert_eq!(count as u64, count_erections(&m));
        assert!(count > 0);
    }

    /// Erections of a rank-0 matroid are the rank-1 matroids with a proper
    /// loop set.
    #[test]
    fn rank_zero_erections_are_loop_sets() {
        let got: Vec<Matroid> = enumerate_erections(&Matroid::rank_zero(3)).collect();
        assert_eq!(got.len(), 7);
        for n in &got {
            assert_eq!(n.rank(), 1);
            assert!(n.validate());
        }
    }
}
