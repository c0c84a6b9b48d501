//! Squarefree monomials and squarefree monomial ideals.
//!
//! A squarefree monomial is identified with its support, stored as a bitmask
//! over variable indices `1..=64`. An ideal stores its unique minimal
//! generating set together with the number of ambient variables. By default
//! the ambient ring is the smallest one containing the generators; ideals
//! with unused variables can only be produced through [`MonomialIdeal::with_ambient`].

use std::fmt;

use crate::error::{Error, Result};

/// Hard limit imposed by the bitmask representation.
pub const MAX_VARIABLES: usize = 64;

pub(crate) fn mask_from_indices(indices: &[usize]) -> Result<u64> {
    let mut mask = 0u64;
    for &i in indices {
        if i == 0 || i > MAX_VARIABLES {
            return Err(Error::Invalid(format!(
                "variable index {i} out of range 1..={MAX_VARIABLES}"
            )));
        }
        mask |= 1 << (i - 1);
    }
    Ok(mask)
}

pub(crate) fn indices_from_mask(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        out.push(b + 1);
        m &= m - 1;
    }
    out
}

/// A squarefree monomial, identified with its support set.
///
/// The derived ordering compares bitmasks numerically, which gives a fixed
/// canonical order on generators of an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquarefreeMonomial(u64);

impl SquarefreeMonomial {
    /// Builds a monomial from 1-based variable indices. Repeated indices
    /// collapse (the monomial is squarefree by construction).
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        Ok(Self(mask_from_indices(indices)?))
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    /// The support as a sorted list of 1-based variable indices.
    pub fn indices(self) -> Vec<usize> {
        indices_from_mask(self.0)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// The monomial `1` (empty support).
    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn divides(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Coprime means disjoint supports.
    pub fn is_coprime(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn lcm(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn gcd(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    /// Largest variable index in the support, or 0 for the unit monomial.
    pub fn max_index(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            64 - self.0.leading_zeros() as usize
        }
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// A squarefree monomial ideal, stored by its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<SquarefreeMonomial>,
    ambient: usize,
}

/// Keeps the maximal elements under divisibility removed, i.e. retains the
/// minimal generators. Input order does not matter; output is sorted.
fn minimal_antichain(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    /// The zero ideal. Per the ambient-minimality convention it lives in the
    /// polynomial ring with no variables.
    pub fn zero() -> Self {
        Self {
            gens: Vec::new(),
            ambient: 0,
        }
    }

    /// Builds the ideal generated by the given monomials: removes non-minimal
    /// generators and compresses the variable indices order-preservingly so
    /// that the ambient ring is the smallest one containing the generators.
    pub fn minimalize(mons: impl IntoIterator<Item = SquarefreeMonomial>) -> Result<Self> {
        let masks: Vec<u64> = mons.into_iter().map(|m| m.0).collect();
        if masks.contains(&0) {
            return Err(Error::Invalid(
                "unit generator: the ideal would be the whole ring".into(),
            ));
        }
        let kept = minimal_antichain(masks);
        if kept.is_empty() {
            return Ok(Self::zero());
        }
        let union: u64 = kept.iter().fold(0, |a, &m| a | m);
        // order-preserving compression of the used variable indices to 1..=n
        let used = indices_from_mask(union);
        let mut remap = [0usize; MAX_VARIABLES + 1];
        for (new, &old) in used.iter().enumerate() {
            remap[old] = new + 1;
        }
        let gens = kept
            .iter()
            .map(|&m| {
                let idx: Vec<usize> = indices_from_mask(m).iter().map(|&i| remap[i]).collect();
                SquarefreeMonomial(mask_from_indices(&idx).expect("remapped indices in range"))
            })
            .collect::<Vec<_>>();
        let mut gens = gens;
        gens.sort_unstable();
        Ok(Self {
            gens,
            ambient: used.len(),
        })
    }

    /// Builds an ideal in an explicitly chosen ambient ring, which may leave
    /// variables unused. This is the only way to produce a widened ideal;
    /// generators are still minimalized, but indices are not relabeled.
    pub fn with_ambient(
        mons: impl IntoIterator<Item = SquarefreeMonomial>,
        ambient: usize,
    ) -> Result<Self> {
        if ambient > MAX_VARIABLES {
            return Err(Error::CapExceeded {
                what: "ambient variables",
                cap: MAX_VARIABLES,
                actual: ambient,
            });
        }
        let masks: Vec<u64> = mons.into_iter().map(|m| m.0).collect();
        if masks.contains(&0) {
            return Err(Error::Invalid(
                "unit generator: the ideal would be the whole ring".into(),
            ));
        }
        let kept = minimal_antichain(masks);
        if kept.is_empty() {
            return Err(Error::Invalid(
                "zero ideal is only representable with ambient 0".into(),
            ));
        }
        let limit = if ambient == MAX_VARIABLES {
            u64::MAX
        } else {
            (1u64 << ambient) - 1
        };
        if kept.iter().any(|&m| m & !limit != 0) {
            return Err(Error::Invalid(format!(
                "generator support exceeds ambient {ambient}"
            )));
        }
        Ok(Self {
            gens: kept.into_iter().map(SquarefreeMonomial).collect(),
            ambient,
        })
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.gens
    }

    pub(crate) fn gen_masks(&self) -> Vec<u64> {
        self.gens.iter().map(|g| g.0).collect()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn support_union(&self) -> u64 {
        self.gens.iter().fold(0, |a, g| a | g.0)
    }

    /// Whether every ambient variable appears in some generator.
    pub fn is_ambient_minimal(&self) -> bool {
        let full = if self.ambient == 0 {
            0
        } else if self.ambient == MAX_VARIABLES {
            u64::MAX
        } else {
            (1u64 << self.ambient) - 1
        };
        self.support_union() == full
    }

    /// Membership test for a monomial: some generator divides it.
    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The monomial grade: the maximum size of a pairwise-coprime subset of
    /// the generators. Exact branch-and-bound with a greedy lower bound and
    /// a degree-sum prune.
    pub fn monomial_grade(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut masks = self.gen_masks();
        masks.sort_by_key(|m| m.count_ones());
        // greedy lower bound
        let mut best = 0usize;
        let mut used = 0u64;
        for &m in &masks {
            if m & used == 0 {
                used |= m;
                best += 1;
            }
        }
        fn dfs(cands: &[u64], count: usize, free: usize, best: &mut usize) {
            if count > *best {
                *best = count;
            }
            if cands.is_empty() {
                return;
            }
            let min_deg = cands
                .iter()
                .map(|m| m.count_ones() as usize)
                .min()
                .unwrap_or(1);
            let ub = count + cands.len().min(free / min_deg.max(1));
            if ub <= *best {
                return;
            }
            for (i, &c) in cands.iter().enumerate() {
                if count + (cands.len() - i) <= *best {
                    break;
                }
                let rest: Vec<u64> = cands[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&m| m & c == 0)
                    .collect();
                dfs(&rest, count + 1, free - c.count_ones() as usize, best);
            }
        }
        dfs(&masks, 0, self.ambient, &mut best);
        Ok(best)
    }

    /// The initial degree: minimum degree of a minimal generator.
    pub fn initial_degree(&self) -> Result<usize> {
        self.gens
            .iter()
            .map(|g| g.degree())
            .min()
            .ok_or(Error::ZeroIdeal)
    }

    /// The `k`th squarefree power: the ideal generated by all products of
    /// `k` pairwise-coprime generators. Returns the zero ideal when no such
    /// family exists (`k` above the monomial grade). The ambient ring is
    /// preserved, so powers may leave variables unused.
    pub fn squarefree_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroPowerIndex);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let masks = self.gen_masks();
        let mut products: Vec<u64> = Vec::new();
        fn collect(masks: &[u64], start: usize, acc: u64, left: usize, out: &mut Vec<u64>) {
            if left == 0 {
                out.push(acc);
                return;
            }
            for i in start..masks.len() {
                if masks.len() - i < left {
                    break;
                }
                if masks[i] & acc == 0 {
                    collect(masks, i + 1, acc | masks[i], left - 1, out);
                }
            }
        }
        collect(&masks, 0, 0, k, &mut products);
        if products.is_empty() {
            return Ok(Self::zero());
        }
        let kept = minimal_antichain(products);
        Ok(Self {
            gens: kept.into_iter().map(SquarefreeMonomial).collect(),
            ambient: self.ambient,
        })
    }

    /// Product with an ideal living in a fresh block of variables: the second
    /// factor is relabeled to variables `n1+1..=n1+n2`, so supports never
    /// overlap. Generators are all pairwise products.
    pub fn product_disjoint(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.ambient + other.ambient;
        if n > MAX_VARIABLES {
            return Err(Error::CapExceeded {
                what: "ambient variables",
                cap: MAX_VARIABLES,
                actual: n,
            });
        }
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                prods.push(u.0 | (v.0 << self.ambient));
            }
        }
        let kept = minimal_antichain(prods);
        Ok(Self {
            gens: kept.into_iter().map(SquarefreeMonomial).collect(),
            ambient: n,
        })
    }

    /// Adjoins a fresh variable as a new degree-1 generator, producing
    /// `(I, x)` in one more ambient variable.
    pub fn adjoin_variable(&self) -> Result<Self> {
        if self.ambient >= MAX_VARIABLES {
            return Err(Error::CapExceeded {
                what: "ambient variables",
                cap: MAX_VARIABLES,
                actual: self.ambient + 1,
            });
        }
        let mut gens = self.gen_masks();
        gens.push(1u64 << self.ambient);
        let kept = minimal_antichain(gens);
        Ok(Self {
            gens: kept.into_iter().map(SquarefreeMonomial).collect(),
            ambient: self.ambient + 1,
        })
    }

    /// Multiplies every generator by the variable `var` (1-based, within the
    /// ambient ring). Errors if some generator already contains it, since
    /// the product would not be squarefree.
    pub fn multiply_variable(&self, var: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if var == 0 || var > self.ambient {
            return Err(Error::Invalid(format!(
                "variable x{var} outside ambient {}",
                self.ambient
            )));
        }
        let bit = 1u64 << (var - 1);
        if self.gens.iter().any(|g| g.0 & bit != 0) {
            return Err(Error::Invalid(format!(
                "variable x{var} already divides a generator"
            )));
        }
        let gens: Vec<u64> = self.gens.iter().map(|g| g.0 | bit).collect();
        Ok(Self {
            gens: gens.into_iter().map(SquarefreeMonomial).collect(),
            ambient: self.ambient,
        })
    }

    /// Intersection of two squarefree ideals in the same ambient ring:
    /// generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        if self.ambient != other.ambient {
            return Err(Error::Invalid(format!(
                "ambient mismatch: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.push(u.0 | v.0);
            }
        }
        let kept = minimal_antichain(lcms);
        Ok(Self {
            gens: kept.into_iter().map(SquarefreeMonomial).collect(),
            ambient: self.ambient,
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Test-friendly constructor: each generator given by its support indices.
pub fn ideal_from_supports(supports: &[&[usize]]) -> MonomialIdeal {
    let mons: Vec<SquarefreeMonomial> = supports
        .iter()
        .map(|s| SquarefreeMonomial::from_indices(s).expect("valid support"))
        .collect();
    MonomialIdeal::minimalize(mons).expect("valid generators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(idx: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_indices(idx).unwrap()
    }

    /// Independent check for the monomial grade: exhaustive subset scan.
    fn grade_brute_force(i: &MonomialIdeal) -> usize {
        let masks = i.gen_masks();
        let s = masks.len();
        assert!(s <= 20, "brute force oracle limited to 20 generators");
        let mut best = 0;
        'outer: for sel in 0u32..(1 << s) {
            let mut union = 0u64;
            for (t, &m) in masks.iter().enumerate() {
                if sel & (1 << t) != 0 {
                    if m & union != 0 {
                        continue 'outer;
                    }
                    union |= m;
                }
            }
            best = best.max(sel.count_ones() as usize);
        }
        best
    }

    #[test]
    fn minimalize_removes_divisible_generators() {
        let i = ideal_from_supports(&[&[1, 2], &[1, 2, 3]]);
        assert_eq!(i.generators(), &[mono(&[1, 2])]);
        assert_eq!(i.ambient(), 2);
    }

    #[test]
    fn minimalize_keeps_antichain() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        assert_eq!(i.generators().len(), 2);
        assert_eq!(i.ambient(), 3);
    }

    #[test]
    fn minimalize_empty_is_zero() {
        let i = MonomialIdeal::minimalize(Vec::new()).unwrap();
        assert!(i.is_zero());
        assert_eq!(i.ambient(), 0);
    }

    #[test]
    fn minimalize_compresses_unused_variables() {
        let i = MonomialIdeal::minimalize(vec![mono(&[2, 5]), mono(&[5, 7])]).unwrap();
        assert_eq!(i.ambient(), 3);
        assert_eq!(i.generators(), &[mono(&[1, 2]), mono(&[2, 3])]);
    }

    #[test]
    fn minimalize_rejects_unit() {
        assert!(MonomialIdeal::minimalize(vec![mono(&[]), mono(&[1])]).is_err());
    }

    #[test]
    fn grade_of_principal_ideal() {
        let i = ideal_from_supports(&[&[1, 2]]);
        assert_eq!(i.monomial_grade().unwrap(), 1);
    }

    #[test]
    fn grade_of_path_ideal_matches_brute_force() {
        // edge ideal of the path 1-2-3-4
        let i = ideal_from_supports(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(grade_brute_force(&i), 2);
        assert_eq!(i.monomial_grade().unwrap(), 2);
    }

    #[test]
    fn grade_of_zero_ideal_is_undefined() {
        assert!(matches!(
            MonomialIdeal::zero().monomial_grade(),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn power_one_is_identity() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(i.squarefree_power(1).unwrap(), i);
    }

    #[test]
    fn power_zero_index_rejected() {
        let i = ideal_from_supports(&[&[1, 2]]);
        assert!(matches!(
            i.squarefree_power(0),
            Err(Error::ZeroPowerIndex)
        ));
    }

    #[test]
    fn power_beyond_grade_is_zero() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert!(i.squarefree_power(3).unwrap().is_zero());
    }

    #[test]
    fn power_of_disjoint_pair() {
        let i = ideal_from_supports(&[&[1, 2], &[3, 4]]);
        let p = i.squarefree_power(2).unwrap();
        assert_eq!(p.generators(), &[mono(&[1, 2, 3, 4])]);
        assert_eq!(p.ambient(), 4);
    }

    #[test]
    fn initial_degree_examples() {
        let i = ideal_from_supports(&[&[1], &[2, 3]]);
        assert_eq!(i.initial_degree().unwrap(), 1);
        assert!(MonomialIdeal::zero().initial_degree().is_err());
    }

    #[test]
    fn product_disjoint_of_principal_ideals() {
        let i1 = ideal_from_supports(&[&[1, 2]]);
        let i2 = ideal_from_supports(&[&[1, 2]]);
        let p = i1.product_disjoint(&i2).unwrap();
        assert_eq!(p.generators(), &[mono(&[1, 2, 3, 4])]);
        assert_eq!(p.ambient(), 4);
    }

    #[test]
    fn product_disjoint_grade_is_min() {
        // grade 2 times grade 1
        let i1 = ideal_from_supports(&[&[1, 2], &[3, 4]]);
        let i2 = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let p = i1.product_disjoint(&i2).unwrap();
        assert_eq!(p.monomial_grade().unwrap(), 1.min(i1.monomial_grade().unwrap()));
        let q = i2.product_disjoint(&i1).unwrap();
        assert_eq!(q.monomial_grade().unwrap(), 1);
    }

    #[test]
    fn product_with_zero_is_zero() {
        let i = ideal_from_supports(&[&[1, 2]]);
        assert!(i.product_disjoint(&MonomialIdeal::zero()).unwrap().is_zero());
        assert!(MonomialIdeal::zero().product_disjoint(&i).unwrap().is_zero());
    }

    #[test]
    fn adjoin_variable_examples() {
        let i = ideal_from_supports(&[&[1, 2]]);
        let j = i.adjoin_variable().unwrap();
        assert_eq!(j.generators(), &[mono(&[1, 2]), mono(&[3])]);
        assert_eq!(j.ambient(), 3);
        assert_eq!(j.monomial_grade().unwrap(), 2);

        let j0 = MonomialIdeal::zero().adjoin_variable().unwrap();
        assert_eq!(j0.generators(), &[mono(&[1])]);
        assert_eq!(j0.monomial_grade().unwrap(), 1);
    }

    #[test]
    fn adjoin_variable_raises_grade_each_time() {
        let mut i = ideal_from_supports(&[&[1, 2], &[2, 3], &[3, 4]]);
        let base = i.monomial_grade().unwrap();
        for s in 1..=3 {
            i = i.adjoin_variable().unwrap();
            assert_eq!(i.monomial_grade().unwrap(), base + s);
            assert_eq!(grade_brute_force(&i), base + s);
        }
    }

    #[test]
    fn multiply_variable_requires_fresh_variable() {
        let i = ideal_from_supports(&[&[1, 2]]).adjoin_variable().unwrap();
        // x3 divides the generator x3
        assert!(i.multiply_variable(3).is_err());
        let j = ideal_from_supports(&[&[1, 2]]);
        let wide = MonomialIdeal::with_ambient(j.generators().to_vec(), 3).unwrap();
        let xj = wide.multiply_variable(3).unwrap();
        assert_eq!(xj.generators(), &[mono(&[1, 2, 3])]);
    }

    #[test]
    fn intersect_by_pairwise_lcm() {
        let a3 = MonomialIdeal::with_ambient(vec![mono(&[1, 2])], 3).unwrap();
        let b3 = MonomialIdeal::with_ambient(vec![mono(&[2, 3])], 3).unwrap();
        let m = a3.intersect(&b3).unwrap();
        assert_eq!(m.generators(), &[mono(&[1, 2, 3])]);
    }

    #[test]
    fn widened_ideal_is_not_ambient_minimal() {
        let i = ideal_from_supports(&[&[1, 2]]);
        assert!(i.is_ambient_minimal());
        let w = MonomialIdeal::with_ambient(i.generators().to_vec(), 3).unwrap();
        assert!(!w.is_ambient_minimal());
    }

    fn arb_ideal(max_vars: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(1u64..(1 << max_vars), 1..=max_gens).prop_map(move |masks| {
            let mons: Vec<SquarefreeMonomial> =
                masks.into_iter().map(SquarefreeMonomial::from_mask).collect();
            MonomialIdeal::minimalize(mons).unwrap()
        })
    }

    proptest! {
        #[test]
        fn minimalize_is_idempotent(i in arb_ideal(7, 6)) {
            let again = MonomialIdeal::minimalize(i.generators().to_vec()).unwrap();
            prop_assert_eq!(again, i);
        }

        #[test]
        fn grade_matches_brute_force(i in arb_ideal(7, 6)) {
            prop_assert_eq!(i.monomial_grade().unwrap(), grade_brute_force(&i));
        }

        #[test]
        fn power_nonzero_exactly_up_to_grade(i in arb_ideal(7, 6)) {
            let nu = i.monomial_grade().unwrap();
            for k in 1..=nu {
                prop_assert!(!i.squarefree_power(k).unwrap().is_zero());
            }
            prop_assert!(i.squarefree_power(nu + 1).unwrap().is_zero());
        }

        #[test]
        fn power_generators_divisible_by_previous_power(i in arb_ideal(7, 6)) {
            let nu = i.monomial_grade().unwrap();
            let indeg = i.initial_degree().unwrap();
            let mut prev = i.clone();
            for k in 2..=nu {
                let cur = i.squarefree_power(k).unwrap();
                for g in cur.generators() {
                    prop_assert!(prev.contains(*g));
                }
                prop_assert!(cur.initial_degree().unwrap() >= prev.initial_degree().unwrap() + indeg);
                prev = cur;
            }
        }

        #[test]
        fn power_commutes_with_disjoint_product(
            i1 in arb_ideal(5, 4),
            i2 in arb_ideal(5, 4),
        ) {
            // powers preserve the ambient ring, so both sides place the
            // second block at the same offset and compare directly
            let p = i1.product_disjoint(&i2).unwrap();
            let nu = p.monomial_grade().unwrap();
            for k in 1..=nu {
                let lhs = p.squarefree_power(k).unwrap();
                let rhs = i1
                    .squarefree_power(k)
                    .unwrap()
                    .product_disjoint(&i2.squarefree_power(k).unwrap())
                    .unwrap();
                prop_assert_eq!(lhs.gen_masks(), rhs.gen_masks());
            }
        }
    }
}
