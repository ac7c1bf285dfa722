//! Compact vertex sets over ground sets of up to 64 vertices.
//!
//! Vertices carry 1-based labels `1..=n` externally; internally a set is a
//! bitmask with bit `i` standing for label `i + 1`. All set algebra is
//! branch-free word arithmetic, which the face queries, the lattice closure
//! and the census hot loop rely on.

use std::fmt;

/// Largest supported ground-set size.
pub const MAX_VERTICES: usize = 64;

/// A subset of the ground set `[n] = {1, …, n}`.
///
/// The ambient `n` is not stored; operations that need it (complement,
/// validation) take it as an argument. Two sets compare in *normal order*:
/// by cardinality first, then colexicographically, which for bitmasks is
/// plain numeric order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Builds a set from 1-based labels. Labels out of `1..=64` are rejected
    /// by the caller via [`VertexSet::is_within`]; this constructor only
    /// debug-asserts.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut bits = 0u64;
        for &l in labels {
            debug_assert!((1..=MAX_VERTICES).contains(&l));
            bits |= 1u64 << (l - 1);
        }
        VertexSet { bits }
    }

    /// The full set `[n]`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet::EMPTY
        } else {
            VertexSet {
                bits: u64::MAX >> (MAX_VERTICES - n),
            }
        }
    }

    #[inline]
    pub fn singleton(label: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&label));
        VertexSet {
            bits: 1u64 << (label - 1),
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, label: usize) -> bool {
        label >= 1 && label <= MAX_VERTICES && self.bits & (1u64 << (label - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_within(self, n: usize) -> bool {
        self.is_subset_of(VertexSet::full(n))
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.bits & other.bits != 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    /// Complement inside `[n]`.
    #[inline]
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet {
            bits: !self.bits & VertexSet::full(n).bits,
        }
    }

    #[inline]
    pub fn insert(self, label: usize) -> VertexSet {
        self.union(VertexSet::singleton(label))
    }

    #[inline]
    pub fn remove(self, label: usize) -> VertexSet {
        self.difference(VertexSet::singleton(label))
    }

    /// Iterates 1-based labels in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(tz + 1)
            }
        })
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest label, if any.
    #[inline]
    pub fn min_label(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize + 1)
        }
    }

    /// Normal order: cardinality, then colex. Colex on equal-size bitmasks is
    /// numeric order, since the highest differing bit decides.
    #[inline]
    pub fn normal_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.bits.cmp(&other.bits))
    }

    /// Relabels through `map`, where `map[old_label - 1] = new_label` (both
    /// 1-based).
    pub fn relabel(self, map: &[usize]) -> VertexSet {
        let mut out = 0u64;
        let mut bits = self.bits;
        while bits != 0 {
            let tz = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= 1u64 << (map[tz] - 1);
        }
        VertexSet { bits: out }
    }

    /// Shifts every label up by `offset`.
    pub fn shift_up(self, offset: usize) -> VertexSet {
        debug_assert!(self.bits.leading_zeros() as usize >= offset || self.bits == 0);
        VertexSet {
            bits: self.bits << offset,
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.normal_cmp(*other)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Enumerates all subsets of `mask` (including `mask` itself and the empty
/// set) in decreasing numeric order of their bit patterns.
pub fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(cur)
    })
}
