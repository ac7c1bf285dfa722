//! Building complexes from other complexes, plus the named families used
//! throughout: simplex and cross-polytope boundaries, the pyramid-over-facet
//! spheres, cyclic polytope boundaries via Gale's evenness condition, and the
//! codimension-3 window family.

use crate::complex::{Error, MnfComplex, Result};
use crate::set::VertexSet;

/// Join of two complexes on disjoint vertex sets; `b`'s labels are shifted
/// up by `a.n()`. The minimal non-faces of the join are the union of both
/// non-face families.
pub fn join(a: &MnfComplex, b: &MnfComplex) -> MnfComplex {
    let n = a.n() + b.n();
    let mut mnf: Vec<VertexSet> = a.mnf().to_vec();
    mnf.extend(b.mnf().iter().map(|s| s.shift_up(a.n())));
    MnfComplex::new(n, mnf).expect("disjoint antichains stay an antichain")
}

/// One-point suspension at `v`: the new vertex `n + 1` doubles `v`, joining
/// every minimal non-face that contains `v`.
pub fn one_point_suspension(c: &MnfComplex, v: usize) -> Result<MnfComplex> {
    if v < 1 || v > c.n() {
        return Err(Error::RangeViolation(VertexSet::singleton(v.max(1)), c.n()));
    }
    let new = c.n() + 1;
    let mnf = c
        .mnf()
        .iter()
        .map(|&s| if s.contains(v) { s.insert(new) } else { s })
        .collect();
    MnfComplex::new(new, mnf)
}

/// Two-point suspension: join with the boundary of a 1-simplex, i.e. one new
/// isolated non-face `{n + 1, n + 2}`.
pub fn two_point_suspension(c: &MnfComplex) -> MnfComplex {
    join(c, &simplex_boundary(1))
}

/// Link of a face, compacted to the vertices that actually appear in the
/// link. Returns the complex together with the original label of each new
/// vertex (`map[new - 1] = old`).
pub fn link(c: &MnfComplex, f: VertexSet) -> Result<(MnfComplex, Vec<usize>)> {
    if !c.is_face(f)? {
        return Err(Error::NotAFace(f));
    }
    // vertices v ∉ f with f ∪ {v} still a face
    let mut verts = VertexSet::EMPTY;
    for v in f.complement(c.n()).iter() {
        if c.is_face(f.insert(v))? {
            verts = verts.insert(v);
        }
    }
    // a subset s of the link vertices is a non-face iff s ∪ f contains some
    // minimal non-face, so the generators are the residues m \ f
    let residues: Vec<VertexSet> = c
        .mnf()
        .iter()
        .map(|m| m.difference(f))
        .filter(|r| r.is_subset_of(verts))
        .collect();
    let minimal = minimalize(residues);
    let map: Vec<usize> = verts.labels();
    let mut relabel = vec![0usize; c.n()];
    for (new, &old) in map.iter().enumerate() {
        relabel[old - 1] = new + 1;
    }
    let mnf = minimal.into_iter().map(|s| s.relabel(&relabel)).collect();
    Ok((MnfComplex::new(map.len(), mnf)?, map))
}

/// Induced subcomplex on `w`, relabeled contiguously. Returns the original
/// label of each new vertex alongside.
pub fn induced(c: &MnfComplex, w: VertexSet) -> Result<(MnfComplex, Vec<usize>)> {
    if !w.is_within(c.n()) {
        return Err(Error::RangeViolation(w, c.n()));
    }
    let kept: Vec<VertexSet> = c
        .mnf()
        .iter()
        .copied()
        .filter(|m| m.is_subset_of(w))
        .collect();
    let map: Vec<usize> = w.labels();
    let mut relabel = vec![0usize; c.n()];
    for (new, &old) in map.iter().enumerate() {
        relabel[old - 1] = new + 1;
    }
    let mnf = kept.into_iter().map(|s| s.relabel(&relabel)).collect();
    Ok((MnfComplex::new(map.len(), mnf)?, map))
}

fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    'outer: for &s in &sets {
        for &t in &out {
            if t.is_subset_of(s) {
                continue 'outer;
            }
        }
        out.push(s);
    }
    out
}

/// Boundary of the `k`-simplex: `k + 1` vertices, one non-face `[k + 1]`.
/// For `k = 0` this is the complex `{∅}` (a size-1 non-face would mean a
/// vertex outside the complex, which the representation excludes).
pub fn simplex_boundary(k: usize) -> MnfComplex {
    if k == 0 {
        return MnfComplex::empty_complex();
    }
    MnfComplex::new(k + 1, vec![VertexSet::full(k + 1)]).expect("single full non-face")
}

/// Boundary of the `d`-th cross-polytope: `2d` vertices, non-faces
/// `{2i−1, 2i}` for each antipodal pair.
pub fn cross_polytope(d: usize) -> MnfComplex {
    assert!(d >= 1, "cross_polytope requires d >= 1");
    let mnf = (1..=d)
        .map(|i| VertexSet::from_labels(&[2 * i - 1, 2 * i]))
        .collect();
    MnfComplex::new(2 * d, mnf).expect("disjoint pairs")
}

/// Boundary of the polytope obtained from the `d`-th cross-polytope by
/// adding a pyramid over one facet. With pairs `{x_i, y_i} = {2i−1, 2i}` and
/// apex `a = 2d + 1`, the non-faces are the `d` pairs, the `d` sets
/// `{a, y_i}`, and the replaced facet `{x_1, …, x_d}`.
pub fn pd_sphere(d: usize) -> MnfComplex {
    assert!(d >= 2, "pd_sphere requires d >= 2");
    let apex = 2 * d + 1;
    let mut mnf: Vec<VertexSet> = Vec::with_capacity(2 * d + 1);
    for i in 1..=d {
        mnf.push(VertexSet::from_labels(&[2 * i - 1, 2 * i]));
        mnf.push(VertexSet::from_labels(&[apex, 2 * i]));
    }
    mnf.push(VertexSet::from_labels(
        &(1..=d).map(|i| 2 * i - 1).collect::<Vec<_>>(),
    ));
    MnfComplex::new(apex, mnf).expect("pyramid construction")
}

/// Boundary complex of the cyclic polytope `C_d(n)`. Facets are the
/// `d`-subsets satisfying Gale's evenness condition: between any two omitted
/// elements lies an even number of chosen ones. Minimal non-faces are then
/// recovered by a subset sweep, so `n` is capped at 16.
pub fn cyclic_boundary(d: usize, n: usize) -> Result<MnfComplex> {
    if d < 1 || n < d + 1 {
        return Err(Error::InvalidParameter(format!(
            "cyclic boundary needs n >= d+1 >= 2, got d={d} n={n}"
        )));
    }
    if n > 16 {
        return Err(Error::TooLarge(format!(
            "cyclic boundary facet sweep supports n <= 16, got {n}"
        )));
    }
    let mut facets: Vec<VertexSet> = Vec::new();
    for bits in 0u64..(1u64 << n) {
        if bits.count_ones() as usize != d {
            continue;
        }
        let s = VertexSet::from_bits(bits);
        if gale_even(s, n) {
            facets.push(s);
        }
    }
    mnf_from_facets(n, &facets)
}

fn gale_even(s: VertexSet, n: usize) -> bool {
    let out: Vec<usize> = s.complement(n).labels();
    for (a, &i) in out.iter().enumerate() {
        for &j in &out[a + 1..] {
            let between = ((i + 1)..j).filter(|&k| s.contains(k)).count();
            if between % 2 != 0 {
                return false;
            }
        }
    }
    true
}

/// Recovers the minimal non-faces of the complex generated by `facets` via a
/// subset sweep over `[n]` (so `n <= 16`): a set is a minimal non-face when
/// it lies in no facet but each of its proper subsets does.
pub fn mnf_from_facets(n: usize, facets: &[VertexSet]) -> Result<MnfComplex> {
    if n > 16 {
        return Err(Error::TooLarge(format!(
            "facet-to-mnf sweep supports n <= 16, got {n}"
        )));
    }
    let is_face = |s: VertexSet| facets.iter().any(|f| s.is_subset_of(*f));
    let mut mnf = Vec::new();
    for bits in 0u64..(1u64 << n) {
        let s = VertexSet::from_bits(bits);
        if is_face(s) {
            continue;
        }
        if s.iter().all(|v| is_face(s.remove(v))) {
            mnf.push(s);
        }
    }
    MnfComplex::new(n, mnf)
}

/// The codimension-3 sphere on `m` vertices (`m` odd, `m >= 5`): with
/// `s = (m + 1) / 2`, the `i`-th non-face is the cyclic window of `s − 1`
/// consecutive vertices starting after position `i`.
pub fn codim3_sphere(m: usize) -> Result<MnfComplex> {
    if m < 5 || m % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "m must be odd >= 5, got {m}"
        )));
    }
    let s = (m + 1) / 2;
    let mut mnf = Vec::with_capacity(m);
    for i in 1..=m {
        let window: Vec<usize> = (1..s).map(|j| ((i + j - 1) % m) + 1).collect();
        mnf.push(VertexSet::from_labels(&window));
    }
    MnfComplex::new(m, mnf)
}

/// Boundary of the `k`-th cross-polytope with one facet removed: the `k`
/// antipodal pairs plus the removed facet `{x_1, …, x_k}` as non-faces.
/// A manifold with boundary, not a homology sphere.
pub fn cross_minus_facet(k: usize) -> MnfComplex {
    assert!(k >= 2, "cross_minus_facet requires k >= 2");
    let mut mnf: Vec<VertexSet> = (1..=k)
        .map(|i| VertexSet::from_labels(&[2 * i - 1, 2 * i]))
        .collect();
    mnf.push(VertexSet::from_labels(
        &(1..=k).map(|i| 2 * i - 1).collect::<Vec<_>>(),
    ));
    MnfComplex::new(2 * k, mnf).expect("pairs plus one facet")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn pentagon() -> MnfComplex {
        MnfComplex::from_label_sets(5, &[&[1, 3], &[1, 4], &[2, 4], &[2, 5], &[3, 5]]).unwrap()
    }

    #[test]
    fn join_basics() {
        let edge = simplex_boundary(1);
        let square = join(&edge, &edge);
        assert_eq!(square, MnfComplex::from_label_sets(4, &[&[1, 2], &[3, 4]]).unwrap());

        let pp = join(&pentagon(), &pentagon());
        assert_eq!(pp.n(), 10);
        assert_eq!(pp.m(), 10);
        assert_eq!(pp.alpha(), 4);

        assert_eq!(join(&pentagon(), &MnfComplex::empty_complex()), pentagon());
    }

    #[test]
    fn one_point_suspension_of_edge_is_triangle() {
        let edge = simplex_boundary(1);
        let tri = one_point_suspension(&edge, 1).unwrap();
        assert_eq!(tri, simplex_boundary(2));
    }

    #[test]
    fn suspension_of_pentagon() {
        let s = one_point_suspension(&pentagon(), 1).unwrap();
        assert_eq!(
            s,
            MnfComplex::from_label_sets(6, &[&[1, 3, 6], &[1, 4, 6], &[2, 4], &[2, 5], &[3, 5]])
                .unwrap()
        );
        assert_eq!(s.alpha(), pentagon().alpha());
        // the doubled vertex's link recovers the original complex
        let (lk, _) = link(&s, VertexSet::singleton(6)).unwrap();
        assert!(are_isomorphic(&lk, &pentagon()));
    }

    #[test]
    fn two_point_suspension_cases() {
        assert_eq!(two_point_suspension(&MnfComplex::empty_complex()), simplex_boundary(1));
        assert_eq!(
            two_point_suspension(&simplex_boundary(1)),
            MnfComplex::from_label_sets(4, &[&[1, 2], &[3, 4]]).unwrap()
        );
        let t = two_point_suspension(&pentagon());
        assert_eq!((t.n(), t.m(), t.alpha()), (7, 6, 2));
    }

    #[test]
    fn link_cases() {
        // vertex link in the octahedron is a square
        let oct = cross_polytope(3);
        let (lk, _) = link(&oct, VertexSet::singleton(1)).unwrap();
        assert!(are_isomorphic(&lk, &cross_polytope(2)));

        assert_eq!(
            link(&pentagon(), VertexSet::from_labels(&[1, 3])).unwrap_err(),
            Error::NotAFace(VertexSet::from_labels(&[1, 3]))
        );

        // link of a pentagon vertex: the two non-neighbors vanish, leaving S^0
        let (lk, map) = link(&pentagon(), VertexSet::singleton(1)).unwrap();
        assert_eq!(map, vec![2, 5]);
        assert_eq!(lk.n(), 2);
        assert_eq!(lk.m(), 1);
    }

    #[test]
    fn induced_cases() {
        let (path, _) = induced(&pentagon(), VertexSet::from_labels(&[1, 2, 3])).unwrap();
        assert_eq!(path, MnfComplex::from_label_sets(3, &[&[1, 3]]).unwrap());

        let (full, _) = induced(&pentagon(), VertexSet::full(5)).unwrap();
        assert_eq!(full, pentagon());

        let (empty, _) = induced(&pentagon(), VertexSet::EMPTY).unwrap();
        assert_eq!(empty, MnfComplex::empty_complex());
    }

    #[test]
    fn generator_invariants() {
        assert_eq!(simplex_boundary(2).alpha(), 0);
        assert_eq!(cross_polytope(3).alpha(), 0);
        assert_eq!(cross_polytope(1), simplex_boundary(1));
        for d in 2..=6 {
            assert_eq!(pd_sphere(d).alpha(), d as i64);
            assert_eq!(cross_minus_facet(d).alpha(), 1);
        }
        assert!(are_isomorphic(&pd_sphere(2), &pentagon()));
    }

    #[test]
    fn cyclic_boundary_cases() {
        let c25 = cyclic_boundary(2, 5).unwrap();
        assert!(are_isomorphic(&c25, &pentagon()));
        assert_eq!(cyclic_boundary(3, 4).unwrap(), simplex_boundary(3));

        let c47 = cyclic_boundary(4, 7).unwrap();
        assert_eq!((c47.n(), c47.m(), c47.alpha()), (7, 7, 4));
    }

    #[test]
    fn codim3_cases() {
        assert!(are_isomorphic(&codim3_sphere(5).unwrap(), &pentagon()));
        assert!(are_isomorphic(
            &codim3_sphere(7).unwrap(),
            &cyclic_boundary(4, 7).unwrap()
        ));
        assert!(matches!(codim3_sphere(4), Err(Error::InvalidParameter(_))));
        assert!(matches!(codim3_sphere(3), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn pd_sphere_matches_facet_level_construction() {
        // rebuild each pd sphere from facets: cross-polytope facets minus the
        // replaced one, plus the pyramid facets over its boundary
        for d in 2..=4usize {
            let apex = 2 * d + 1;
            let mut facets: Vec<VertexSet> = Vec::new();
            for choice in 0u64..(1 << d) {
                let f = VertexSet::from_labels(
                    &(1..=d)
                        .map(|i| if choice >> (i - 1) & 1 == 0 { 2 * i - 1 } else { 2 * i })
                        .collect::<Vec<_>>(),
                );
                if choice == 0 {
                    // replaced facet {x_1..x_d}: pyramid over its boundary
                    for v in f.iter() {
                        facets.push(f.remove(v).insert(apex));
                    }
                } else {
                    facets.push(f);
                }
            }
            let rebuilt = mnf_from_facets(apex, &facets).unwrap();
            assert!(are_isomorphic(&rebuilt, &pd_sphere(d)), "d = {d}");
        }
    }
}
