//! Simplicial complexes encoded by their minimal non-faces.
//!
//! A complex on the ground set `[n]` is stored as `n` together with the
//! antichain of its minimal non-faces. A set is a face exactly when it
//! contains none of them, so the encoding is complete. The list is kept in
//! normal order (cardinality, then colex) so that equal complexes compare
//! equal structurally.

use crate::set::VertexSet;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("antichain violation: {0} and {1} are nested or equal")]
    AntichainViolation(VertexSet, VertexSet),
    #[error("size violation: non-face {0} has fewer than 2 vertices")]
    SizeViolation(VertexSet),
    #[error("range violation: {0} is not a subset of [{1}]")]
    RangeViolation(VertexSet, usize),
    #[error("{0} is not a face")]
    NotAFace(VertexSet),
    #[error("{0} is not a lattice element")]
    NotInLattice(VertexSet),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input exceeds supported size: {0}")]
    TooLarge(String),
    #[error("nerve is not of unsuspended type: {0}")]
    Irrecoverable(String),
    #[error("census bounds exceeded: {0}")]
    BoundsExceeded(String),
    #[error("checkpoint corrupt: {0}")]
    CheckpointCorrupt(String),
    #[error("checkpoint written under a different configuration: {0}")]
    ConfigMismatch(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// A simplicial complex given by its ground-set size and minimal non-faces.
///
/// Invariants, enforced by [`MnfComplex::new`]:
/// * every non-face is a subset of `[n]` with at least two vertices,
/// * no non-face contains another (antichain, no duplicates),
/// * the list is sorted in normal order.
///
/// The complex with no non-faces and `n = 0` is `{∅}`, the complex whose
/// only face is the empty set. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MnfComplex {
    n: usize,
    mnf: Vec<VertexSet>,
}

impl MnfComplex {
    /// Validates and normal-orders a set of minimal non-faces over `[n]`.
    pub fn new(n: usize, sets: Vec<VertexSet>) -> Result<MnfComplex> {
        if n > crate::set::MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "ground set of {n} vertices (limit {})",
                crate::set::MAX_VERTICES
            )));
        }
        let mut mnf = sets;
        for &s in &mnf {
            if !s.is_within(n) {
                return Err(Error::RangeViolation(s, n));
            }
            if s.len() < 2 {
                return Err(Error::SizeViolation(s));
            }
        }
        mnf.sort();
        for i in 0..mnf.len() {
            for j in 0..i {
                // sorted by size, so only the smaller-or-equal side can nest
                if mnf[j].is_subset_of(mnf[i]) {
                    return Err(Error::AntichainViolation(mnf[j], mnf[i]));
                }
            }
        }
        Ok(MnfComplex { n, mnf })
    }

    /// The complex `{∅}` whose only face is the empty set.
    pub fn empty_complex() -> MnfComplex {
        MnfComplex { n: 0, mnf: Vec::new() }
    }

    /// The full simplex on `n` vertices (no non-faces).
    pub fn full_simplex(n: usize) -> Result<MnfComplex> {
        MnfComplex::new(n, Vec::new())
    }

    /// Construction shortcut taking 1-based label slices.
    pub fn from_label_sets(n: usize, sets: &[&[usize]]) -> Result<MnfComplex> {
        MnfComplex::new(n, sets.iter().map(|s| VertexSet::from_labels(s)).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.mnf.len()
    }

    #[inline]
    pub fn mnf(&self) -> &[VertexSet] {
        &self.mnf
    }

    /// True iff `s` contains no minimal non-face.
    pub fn is_face(&self, s: VertexSet) -> Result<bool> {
        if !s.is_within(self.n) {
            return Err(Error::RangeViolation(s, self.n));
        }
        Ok(self.mnf.iter().all(|m| !m.is_subset_of(s)))
    }

    /// All inclusion-maximal faces, in normal order.
    ///
    /// Faces are complements of blocking sets, so the facets are the
    /// complements of the minimal transversals of the non-face family.
    /// Those are built by Berge-style incremental minimalization.
    pub fn facets(&self) -> Vec<VertexSet> {
        let transversals = self.minimal_transversals();
        let mut out: Vec<VertexSet> = transversals
            .into_iter()
            .map(|t| t.complement(self.n))
            .collect();
        out.sort();
        out
    }

    /// Minimal transversals (blocking sets) of the non-face family.
    pub(crate) fn minimal_transversals(&self) -> Vec<VertexSet> {
        let mut trans: Vec<VertexSet> = vec![VertexSet::EMPTY];
        for &m in &self.mnf {
            let mut next: Vec<VertexSet> = Vec::with_capacity(trans.len() * 2);
            for &t in &trans {
                if t.intersects(m) {
                    next.push(t);
                } else {
                    for v in m.iter() {
                        next.push(t.insert(v));
                    }
                }
            }
            // keep only inclusion-minimal candidates
            next.sort();
            let mut kept: Vec<VertexSet> = Vec::with_capacity(next.len());
            'cand: for &c in &next {
                for &k in &kept {
                    if k.is_subset_of(c) {
                        continue 'cand;
                    }
                }
                kept.push(c);
            }
            trans = kept;
        }
        trans
    }

    /// Dimension of the complex; `{∅}` has dimension −1.
    pub fn dimension(&self) -> i64 {
        self.facets()
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// `d = dim + 1`, the facet cardinality for pure complexes.
    pub fn d(&self) -> i64 {
        self.dimension() + 1
    }

    /// True iff all facets have equal cardinality.
    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Enumerates every face, grouped by dimension starting at the empty
    /// face: `faces()[k]` holds the `(k-1)`-dimensional faces, sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        let facets = self.facets();
        let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut seen: Vec<std::collections::HashSet<u64>> = vec![Default::default(); top + 1];
        for f in &facets {
            for sub in crate::set::subsets_of(f.bits()) {
                seen[(sub.count_ones()) as usize].insert(sub);
            }
        }
        seen.into_iter()
            .map(|level| {
                let mut v: Vec<VertexSet> = level.into_iter().map(VertexSet::from_bits).collect();
                v.sort();
                v
            })
            .collect()
    }

    /// Face counts by dimension, starting at the empty face: `(1, n, …)`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_dim()
            .iter()
            .map(|level| level.len() as u64)
            .collect()
    }

    /// The invariant `α = m − (n − d)`.
    pub fn alpha(&self) -> i64 {
        self.m() as i64 - (self.n as i64 - self.d())
    }

    /// For each vertex, the set of non-face indices containing it (0-based
    /// indices into `mnf()`, encoded as a bitmask).
    pub(crate) fn membership_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n];
        for (j, m) in self.mnf.iter().enumerate() {
            for v in m.iter() {
                masks[v - 1] |= 1u64 << j;
            }
        }
        masks
    }
}

impl std::fmt::Display for MnfComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} mnf=[", self.n)?;
        for (k, m) in self.mnf.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}
