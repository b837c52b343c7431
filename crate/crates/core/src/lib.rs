//! Combinatorial kernel and enumeration engine for matroids of fixed rank
//! at desk scale.
//!
//! The crate provides:
//!
//! - bitmap subsets, the graded lexicographic order, and a generic
//!   exact-cover solver ([`sets`], [`cover`]);
//! - the matroid value type with rank, closure, flats, circuits, duality,
//!   truncation, and the paving / sparse-paving predicates ([`matroid`]);
//! - Knuth's erection procedure, Crapo's validity conditions, the completion
//!   operator, and exhaustive enumeration of erections ([`erection`]);
//! - the leveled antichain encoding of a matroid with lossless decode, LYM
//!   verification, and essential-flat detection ([`encoding`]);
//! - exhaustive labeled censuses of matroids, paving matroids, sparse paving
//!   matroids, and Steiner systems, each by two independent methods
//!   ([`census`]);
//! - randomized generators: the erection stack and the random greedy
//!   matching process ([`random`]);
//! - the sparse-to-paving and Steiner-to-paving constructions with a lossless
//!   decoder ([`construct`]);
//! - exact big-integer helpers and evaluation of every counting bound
//!   ([`numbers`], [`log2`], [`bounds`]);
//! - plain-text serialization of matroids, encodings, and set families
//!   ([`format`]).

pub mod bounds;
pub mod census;
pub mod construct;
pub mod cover;
pub mod encoding;
pub mod erection;
pub mod format;
pub mod guards;
pub mod log2;
pub mod matroid;
pub mod numbers;
pub mod random;
pub mod sets;

pub use guards::Guards;
pub use matroid::{Matroid, MatroidError};
pub use sets::{FlatFamily, SetFamily, SubSet};

/// Shared fixtures for unit tests.
#[cfg(test)]
pub(crate) mod testkit {
    use crate::matroid::Matroid;
    use crate::sets::{subsets_in_order, SetFamily, SubSet};

    pub fn s(elems: &[usize]) -> SubSet {
        SubSet::from_elements(elems.iter().copied())
    }

    /// The Fano plane: rank 3 on 7 points, non-bases are the 7 lines.
    pub fn fano() -> Matroid {
        let lines = fano_lines();
        let bases = subsets_in_order(SubSet::full(7), 3)
            .filter(|t| !lines.contains(*t))
            .collect::<SetFamily>();
        Matroid::from_bases(7, bases).unwrap()
    }

    pub fn fano_lines() -> SetFamily {
        SetFamily::new(
            [
                [1, 2, 3],
                [1, 4, 5],
                [1, 6, 7],
                [2, 4, 6],
                [2, 5, 7],
                [3, 4, 7],
                [3, 5, 6],
            ]
            .iter()
            .map(|l| SubSet::from_elements(l.iter().copied())),
        )
    }

    /// Rank-2 matroid on `[4]` whose points 1, 2, 3 are parallel.
    pub fn parallel_class_matroid() -> Matroid {
        let bases = SetFamily::new([s(&[1, 4]), s(&[2, 4]), s(&[3, 4])]);
        Matroid::from_bases(4, bases).unwrap()
    }
}
