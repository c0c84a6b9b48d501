//! Simplicial complexes on an ambient vertex set, and the Stanley-Reisner
//! translation of squarefree monomial ideals.
//!
//! A complex is stored by its facets (maximal faces) as bitmasks over the
//! ambient vertices `1..=n`. Two degenerate states are distinguished: the
//! void complex (no faces at all, empty facet list) and the irrelevant
//! complex `{∅}` (single empty facet). Ambient vertices need not be faces:
//! a Stanley-Reisner complex of an ideal with a degree-1 generator has
//! ghost vertices.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::monomial::{indices_from_mask, mask_from_indices, MonomialIdeal};

/// Largest ambient vertex count for which full subset enumeration is allowed.
pub const ENUMERATION_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

/// Keeps only maximal masks, deduplicated and sorted.
fn maximal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The void complex: no faces, not even the empty one.
    pub fn void(n: usize) -> Self {
        Self { n, facets: Vec::new() }
    }

    /// The irrelevant complex `{∅}`.
    pub fn irrelevant(n: usize) -> Self {
        Self { n, facets: vec![0] }
    }

    /// Builds a complex from facet candidates given as vertex index lists;
    /// non-maximal entries are absorbed.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > 64 {
            return Err(Error::CapExceeded { what: "vertices", cap: 64, actual: n });
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let m = mask_from_indices(f)?;
            if f.iter().any(|&v| v > n) {
                return Err(Error::Invalid(format!("facet vertex beyond ambient {n}")));
            }
            masks.push(m);
        }
        Ok(Self::from_facet_masks(n, masks))
    }

    pub(crate) fn from_facet_masks(n: usize, masks: Vec<u64>) -> Self {
        Self { n, facets: maximal_masks(masks) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    #[cfg(test)]
    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as sorted vertex index lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| indices_from_mask(m)).collect()
    }

    /// Vertices that actually appear in some face.
    pub(crate) fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// The induced subcomplex on the vertex subset `w`.
    pub fn induced(&self, w: &[usize]) -> Result<Self> {
        let mask = mask_from_indices(w)?;
        Ok(self.induced_mask(mask))
    }

    pub(crate) fn induced_mask(&self, w: u64) -> Self {
        if self.is_void() {
            return Self::void(self.n);
        }
        Self::from_facet_masks(self.n, self.facets.iter().map(|&f| f & w).collect())
    }

    /// A vertex contained in every facet, if any; lowest index wins. Such a
    /// vertex makes the complex a cone, hence acyclic.
    pub fn cone_point(&self) -> Option<usize> {
        if self.facets.is_empty() {
            return None;
        }
        let common = self.facets.iter().fold(u64::MAX, |a, &f| a & f);
        if common == 0 {
            None
        } else {
            Some(common.trailing_zeros() as usize + 1)
        }
    }

    /// Connectivity of the 1-skeleton over the vertices that are faces.
    /// Complexes with at most one present vertex count as connected.
    pub fn is_connected(&self) -> bool {
        let verts = self.vertex_mask();
        if verts == 0 {
            return true;
        }
        // union-find over present vertices; every facet is a clique
        let idx: Vec<usize> = indices_from_mask(verts);
        let mut parent: Vec<usize> = (0..idx.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let pos = |v: usize| idx.binary_search(&v).expect("present vertex");
        for &f in &self.facets {
            let vs = indices_from_mask(f);
            for pair in vs.windows(2) {
                let (a, b) = (pos(pair[0]), pos(pair[1]));
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..idx.len()).all(|i| find(&mut parent, i) == root)
    }

    /// All faces grouped by cardinality: `levels[c]` holds the faces with
    /// `c` vertices, sorted. `levels[0]` is the empty face when present.
    pub(crate) fn face_levels(&self) -> Vec<Vec<u64>> {
        if self.is_void() {
            return Vec::new();
        }
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let max_card = self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut levels: Vec<Vec<u64>> = vec![Vec::new(); max_card + 1];
        for m in seen {
            levels[m.count_ones() as usize].push(m);
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        levels
    }

    /// Face counts by dimension: entry `d+1` is the number of `d`-faces,
    /// starting with the empty face at entry 0.
    pub fn face_counts(&self) -> Vec<usize> {
        self.face_levels().iter().map(|l| l.len()).collect()
    }
}

/// The Stanley-Reisner complex of a nonzero squarefree ideal: faces are the
/// subsets of the ambient vertices containing no generator support.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ambient();
    complex_avoiding(n, &ideal.gen_masks())
}

/// The complex on `1..=n` whose faces are exactly the subsets containing
/// none of the forbidden masks. The forbidden family is the set of minimal
/// non-faces of the result.
pub(crate) fn complex_avoiding(n: usize, forbidden: &[u64]) -> Result<SimplicialComplex> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { what: "subset enumeration vertices", cap: ENUMERATION_CAP, actual: n });
    }
    let size = 1usize << n;
    // contains[w] = some forbidden mask is a subset of w
    let mut contains = vec![false; size];
    for &f in forbidden {
        debug_assert!(f != 0 && (f as usize) < size);
        contains[f as usize] = true;
    }
    for b in 0..n {
        let bit = 1usize << b;
        for w in 0..size {
            if w & bit != 0 && contains[w ^ bit] {
                contains[w] = true;
            }
        }
    }
    let mut facets = Vec::new();
    'next: for w in 0..size {
        if contains[w] {
            continue;
        }
        for v in 0..n {
            let bit = 1usize << v;
            if w & bit == 0 && !contains[w | bit] {
                continue 'next;
            }
        }
        facets.push(w as u64);
    }
    Ok(SimplicialComplex::from_facet_masks(n, facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal_from_supports;

    /// Brute-force facets of the Stanley-Reisner complex: enumerate every
    /// subset, keep faces, filter maximal by direct comparison.
    fn stanley_reisner_oracle(ideal: &MonomialIdeal) -> Vec<u64> {
        let n = ideal.ambient();
        let gens = ideal.gen_masks();
        let faces: Vec<u64> = (0..(1u64 << n))
            .filter(|&w| gens.iter().all(|&g| g & !w != 0))
            .collect();
        faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| g != f && f & !g == 0))
            .collect()
    }

    #[test]
    fn stanley_reisner_of_single_edge() {
        let i = ideal_from_supports(&[&[1, 2]]);
        let cx = stanley_reisner(&i).unwrap();
        assert_eq!(cx.facets(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn stanley_reisner_of_path_matches_oracle() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let cx = stanley_reisner(&i).unwrap();
        assert_eq!(cx.facets(), vec![vec![2], vec![1, 3]]);
        assert_eq!(cx.facet_masks(), stanley_reisner_oracle(&i).as_slice());
    }

    #[test]
    fn stanley_reisner_with_ghost_vertices() {
        // degree-1 generators make their vertices non-faces
        let i = ideal_from_supports(&[&[1], &[2]]);
        let cx = stanley_reisner(&i).unwrap();
        assert!(cx.is_irrelevant());
    }

    #[test]
    fn induced_on_full_vertex_set_is_identity() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let cx = stanley_reisner(&i).unwrap();
        assert_eq!(cx.induced(&[1, 2, 3]).unwrap(), cx);
    }

    #[test]
    fn induced_on_empty_set_is_irrelevant() {
        let i = ideal_from_supports(&[&[1, 2]]);
        let cx = stanley_reisner(&i).unwrap();
        assert!(cx.induced(&[]).unwrap().is_irrelevant());
    }

    #[test]
    fn deleting_the_cut_vertex_disconnects_the_demo_clique_complex() {
        let g = crate::families::example36();
        let clique = g.complement().clique_complex().unwrap();
        assert!(clique.is_connected());
        let sub = clique.induced(&[2, 3, 4, 5, 6]).unwrap();
        assert_eq!(sub.facets(), vec![vec![2, 3], vec![4, 5, 6]]);
        assert!(!sub.is_connected());
    }

    #[test]
    fn cone_point_examples() {
        let cx = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1, 3]]).unwrap();
        assert_eq!(cx.cone_point(), Some(1));
        let boundary = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(boundary.cone_point(), None);
        let full = SimplicialComplex::from_facets(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(full.cone_point(), Some(1));
    }

    #[test]
    fn connectivity_examples() {
        let one = SimplicialComplex::from_facets(3, &[vec![1, 2, 3]]).unwrap();
        assert!(one.is_connected());
        let two = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![3]]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn face_counts_of_triangle_boundary() {
        let cx = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(cx.face_counts(), vec![1, 3, 3]);
    }

    #[test]
    fn void_and_irrelevant_are_distinguished() {
        let void = SimplicialComplex::void(2);
        let irr = SimplicialComplex::irrelevant(2);
        assert!(void.is_void() && !void.is_irrelevant());
        assert!(irr.is_irrelevant() && !irr.is_void());
        assert_ne!(void, irr);
        assert_eq!(irr.face_counts(), vec![1]);
    }
}
