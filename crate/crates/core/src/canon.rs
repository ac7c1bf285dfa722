//! Canonical labeling of complexes up to vertex relabeling.
//!
//! Isomorphism of two complexes is a bijection of ground sets carrying one
//! antichain of minimal non-faces onto the other, i.e. an isomorphism of the
//! bipartite vertex/non-face incidence structure. The canonical form is
//! computed by color refinement on that structure followed by backtracking
//! over the residual symmetry (individualization-refinement); the canonical
//! representative is the minimal normal-ordered non-face list over all leaves
//! of the invariant search tree.
//!
//! Vertices whose non-face memberships coincide are interchangeable by a
//! transposition automorphism, so the search branches on one representative
//! per distinct membership pattern and stops as soon as every cell is
//! membership-homogeneous.

use crate::complex::MnfComplex;
use crate::set::VertexSet;

/// Label-independent identifier of an isomorphism class.
///
/// Encodes the ground-set size, the non-face count and the canonical
/// representative's non-face list. Keys are equal exactly when the complexes
/// are related by a vertex relabeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalKey> {
        if s.len() % 2 != 0 {
            return None;
        }
        let mut out = Vec::with_capacity(s.len() / 2);
        for i in (0..s.len()).step_by(2) {
            out.push(u8::from_str_radix(&s[i..i + 2], 16).ok()?);
        }
        Some(CanonicalKey(out))
    }
}

const KEY_VERSION: u8 = 1;

fn encode_key(n: usize, mnf: &[VertexSet]) -> CanonicalKey {
    let mut bytes = Vec::with_capacity(5 + 8 * mnf.len());
    bytes.push(KEY_VERSION);
    bytes.extend_from_slice(&(n as u16).to_le_bytes());
    bytes.extend_from_slice(&(mnf.len() as u16).to_le_bytes());
    for s in mnf {
        bytes.extend_from_slice(&s.bits().to_le_bytes());
    }
    CanonicalKey(bytes)
}

/// Canonical key of the isomorphism class of `c`.
pub fn canonical_key(c: &MnfComplex) -> CanonicalKey {
    let (form, _) = canonical_form(c);
    encode_key(c.n(), form.mnf())
}

/// Canonical representative of the class of `c`, together with the
/// relabeling that produces it (`perm[old - 1] = new`, 1-based labels).
pub fn canonical_form(c: &MnfComplex) -> (MnfComplex, Vec<usize>) {
    let n = c.n();
    if c.m() == 0 {
        // no incidence to distinguish vertices
        return (c.clone(), (1..=n).collect());
    }
    let mut search = Search::new(c);
    search.run();
    let (mnf, perm) = search.finish();
    let canon = MnfComplex::new(n, mnf).expect("relabeling preserves validity");
    (canon, perm)
}

/// True iff `a` and `b` differ only by a vertex relabeling.
pub fn are_isomorphic(a: &MnfComplex, b: &MnfComplex) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut sa: Vec<usize> = a.mnf().iter().map(|s| s.len()).collect();
    let mut sb: Vec<usize> = b.mnf().iter().map(|s| s.len()).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    canonical_key(a) == canonical_key(b)
}

struct Search<'a> {
    n: usize,
    m: usize,
    sets: &'a [VertexSet],
    memb: Vec<u64>,
    vcol: Vec<u32>,
    scol: Vec<u32>,
    best: Option<(Vec<VertexSet>, Vec<usize>)>,
    leaves: u64,
}

impl<'a> Search<'a> {
    fn new(c: &'a MnfComplex) -> Self {
        let n = c.n();
        let m = c.m();
        let memb = c.membership_masks();
        // initial colors: vertices uniform, sets by cardinality rank
        let mut sizes: Vec<usize> = c.mnf().iter().map(|s| s.len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let scol = c
            .mnf()
            .iter()
            .map(|s| sizes.binary_search(&s.len()).unwrap() as u32)
            .collect();
        Search {
            n,
            m,
            sets: c.mnf(),
            memb,
            vcol: vec![0; n],
            scol,
            best: None,
            leaves: 0,
        }
    }

    fn run(&mut self) {
        self.refine();
        self.recurse();
    }

    fn finish(self) -> (Vec<VertexSet>, Vec<usize>) {
        self.best.expect("at least one leaf")
    }

    /// One-sided refinement pass: recolor `side` from the colors it sees on
    /// the other side. Returns the new color count.
    fn refine(&mut self) {
        loop {
            let before = count_colors(&self.vcol) + count_colors(&self.scol);
            // sets from member vertex colors
            let mut ssig: Vec<(Vec<u32>, usize)> = (0..self.m)
                .map(|j| {
                    let mut sig = vec![self.scol[j]];
                    let mut member_cols: Vec<u32> =
                        self.sets[j].iter().map(|v| self.vcol[v - 1]).collect();
                    member_cols.sort_unstable();
                    sig.extend(member_cols);
                    (sig, j)
                })
                .collect();
            reassign(&mut ssig, &mut self.scol);
            // vertices from containing set colors
            let mut vsig: Vec<(Vec<u32>, usize)> = (0..self.n)
                .map(|v| {
                    let mut sig = vec![self.vcol[v]];
                    let mut set_cols: Vec<u32> = bit_indices(self.memb[v])
                        .map(|j| self.scol[j])
                        .collect();
                    set_cols.sort_unstable();
                    sig.extend(set_cols);
                    (sig, v)
                })
                .collect();
            reassign(&mut vsig, &mut self.vcol);
            if count_colors(&self.vcol) + count_colors(&self.scol) == before {
                return;
            }
        }
    }

    /// Smallest color whose cell holds two vertices with distinct
    /// membership patterns; `None` when every cell is homogeneous.
    fn target_cell(&self) -> Option<u32> {
        let mut cells: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        for (v, &col) in self.vcol.iter().enumerate() {
            cells.entry(col).or_default().push(v);
        }
        for (col, members) in cells {
            if members.len() >= 2 && members.iter().any(|&v| self.memb[v] != self.memb[members[0]])
            {
                return Some(col);
            }
        }
        None
    }

    fn recurse(&mut self) {
        match self.target_cell() {
            None => self.record_leaf(),
            Some(col) => {
                let fresh = count_colors(&self.vcol) as u32;
                let mut tried: Vec<u64> = Vec::new();
                for v in 0..self.n {
                    if self.vcol[v] != col || tried.contains(&self.memb[v]) {
                        continue;
                    }
                    tried.push(self.memb[v]);
                    let saved_v = self.vcol.clone();
                    let saved_s = self.scol.clone();
                    self.vcol[v] = fresh;
                    self.refine();
                    self.recurse();
                    self.vcol = saved_v;
                    self.scol = saved_s;
                }
            }
        }
    }

    /// Cells are membership-homogeneous here, so ordering vertices by color
    /// (ties broken by index; tied vertices are interchangeable) fixes the
    /// relabeled form.
    fn record_leaf(&mut self) {
        self.leaves += 1;
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (self.vcol[v], v));
        let mut perm = vec![0usize; self.n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new + 1;
        }
        let mut relabeled: Vec<VertexSet> = self.sets.iter().map(|s| s.relabel(&perm)).collect();
        relabeled.sort();
        let better = match &self.best {
            None => true,
            Some((cur, _)) => relabeled < *cur,
        };
        if better {
            self.best = Some((relabeled, perm));
        }
    }
}

fn count_colors(cols: &[u32]) -> usize {
    let mut seen: Vec<u32> = cols.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Re-index colors densely in sorted signature order, keeping the partition
/// refinement invariant (old color is the signature's first entry).
fn reassign(sigs: &mut [(Vec<u32>, usize)], cols: &mut [u32]) {
    sigs.sort();
    let mut next = 0u32;
    let mut prev: Option<&Vec<u32>> = None;
    // second pass writes colors; split borrows by indexing
    for i in 0..sigs.len() {
        let is_new = match prev {
            None => true,
            Some(p) => *p != sigs[i].0,
        };
        if is_new {
            if prev.is_some() {
                next += 1;
            }
            prev = Some(&sigs[i].0);
        }
        cols[sigs[i].1] = next;
    }
}

fn bit_indices(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let tz = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(tz)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> MnfComplex {
        MnfComplex::from_label_sets(5, &[&[1, 3], &[1, 4], &[2, 4], &[2, 5], &[3, 5]]).unwrap()
    }

    fn relabel_complex(c: &MnfComplex, perm: &[usize]) -> MnfComplex {
        MnfComplex::new(c.n(), c.mnf().iter().map(|s| s.relabel(perm)).collect()).unwrap()
    }

    #[test]
    fn pentagon_key_invariant_under_rotation() {
        let p = pentagon();
        // relabel by the cycle (1 2 3 4 5) -> (2 3 4 5 1)
        let q = relabel_complex(&p, &[2, 3, 4, 5, 1]);
        assert_eq!(canonical_key(&p), canonical_key(&q));
        assert!(are_isomorphic(&p, &q));
    }

    #[test]
    fn pentagon_vs_square_distinct() {
        let p = pentagon();
        let square = MnfComplex::from_label_sets(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_ne!(canonical_key(&p), canonical_key(&square));
        assert!(!are_isomorphic(&p, &square));
    }

    #[test]
    fn key_invariant_under_all_permutations_small() {
        // exhaustive over S_n for a handful of shapes
        let shapes: Vec<MnfComplex> = vec![
            pentagon(),
            MnfComplex::from_label_sets(4, &[&[1, 2], &[3, 4]]).unwrap(),
            MnfComplex::from_label_sets(6, &[&[1, 2], &[3, 4], &[5, 6]]).unwrap(),
            MnfComplex::from_label_sets(5, &[&[1, 2, 3], &[3, 4], &[4, 5, 1]]).unwrap(),
            MnfComplex::from_label_sets(4, &[&[1, 2, 3, 4]]).unwrap(),
            MnfComplex::full_simplex(4).unwrap(),
        ];
        for c in &shapes {
            let key = canonical_key(c);
            let n = c.n();
            let mut perm: Vec<usize> = (1..=n).collect();
            permute_all(&mut perm, 0, &mut |p| {
                assert_eq!(canonical_key(&relabel_complex(c, p)), key, "perm {p:?} on {c}");
            });
        }
    }

    fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute_all(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let p = pentagon();
        let (form, _) = canonical_form(&p);
        let (again, _) = canonical_form(&form);
        assert_eq!(form, again);
    }

    #[test]
    fn hex_round_trip() {
        let key = canonical_key(&pentagon());
        assert_eq!(CanonicalKey::from_hex(&key.to_hex()).unwrap(), key);
    }
}
