//! Graded Betti numbers of quotients by squarefree monomial ideals, and
//! everything derived from them: projective dimension, depth, the
//! normalized depth profile of squarefree powers, linearity tests, linear
//! quotient orders, Betti splittings and the matching-based certificate for
//! a vanishing normalized depth value.
//!
//! Two independent routes compute the same tables. The production route
//! accumulates reduced cohomology of induced subcomplexes of the
//! Stanley-Reisner complex over all vertex subsets. The oracle route takes
//! homology of the Taylor complex tensored with the field, graded by the
//! least common multiples of generator subsets. The two must agree entry
//! by entry wherever both are within their caps; the test suites exercise
//! exactly that.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::stanley_reisner;
use crate::error::{Error, Result};
use crate::graph::{Graph, Matching};
use crate::homology::{reduced_homology, FieldSpec};
use crate::monomial::MonomialIdeal;

/// Default ambient cap for the subset accumulation route.
pub const HOCHSTER_AMBIENT_CAP: usize = 22;
/// Generator-count cap for the Taylor oracle.
pub const TAYLOR_GENERATOR_CAP: usize = 16;
/// Generator-count cap for the linear-quotients subset search.
pub const LINEAR_QUOTIENTS_CAP: usize = 20;

/// Graded Betti numbers of `S/I`, keyed by (homological index, internal
/// degree). Zero entries are omitted; `β_{0,0} = 1` is always present.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    fn new(n: usize) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Betti number of the ideal itself: `β_{i,j}(I) = β_{i+1,j}(S/I)`.
    pub fn ideal_entry(&self, i: isize, j: usize) -> u64 {
        if i < 0 {
            0
        } else {
            self.get(i as usize + 1, j)
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti number in homological index `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Projective dimension: the largest nonzero homological index.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }
}

/// Betti numbers of `S/I` by Hochster's accumulation: for every vertex
/// subset `W`, reduced cohomology of the induced Stanley-Reisner
/// subcomplex in degree `|W| - i - 1` contributes to `β_{i,|W|}`.
/// Subcomplexes with a cone point are skipped; per-subset work fans out to
/// a worker pool and merges by keyed sums, so tables are deterministic.
pub fn betti_hochster(ideal: &MonomialIdeal, field: &FieldSpec) -> Result<BettiTable> {
    betti_hochster_capped(ideal, field, HOCHSTER_AMBIENT_CAP)
}

pub fn betti_hochster_capped(
    ideal: &MonomialIdeal,
    field: &FieldSpec,
    cap: usize,
) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ambient();
    if n > cap {
        return Err(Error::CapExceeded { what: "Hochster ambient", cap, actual: n });
    }
    let delta = stanley_reisner(ideal)?;
    let field = *field;
    let merged: BTreeMap<(usize, usize), u64> = (0u64..(1u64 << n))
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), u64>, w| {
            let sub = delta.induced_mask(w);
            let dims = reduced_homology(&sub, &field)
                .expect("induced subcomplex of a nonvoid complex is nonvoid");
            let wsize = w.count_ones() as i64;
            for (deg, h) in dims.iter() {
                let i = (wsize - 1 - deg) as usize;
                *acc.entry((i, wsize as usize)).or_insert(0) += h;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut table = BettiTable::new(n);
    for ((i, j), v) in merged {
        table.add(i, j, v);
    }
    Ok(table)
}

/// Independent oracle for the same table: homology of the Taylor complex
/// tensored with the field. The complex is indexed by generator subsets and
/// splits into strands by the least common multiple; differential entries
/// are signs exactly where deleting an element preserves the lcm.
pub fn betti_taylor(ideal: &MonomialIdeal, field: &FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let masks = ideal.gen_masks();
    let s = masks.len();
    if s > TAYLOR_GENERATOR_CAP {
        return Err(Error::CapExceeded {
            what: "Taylor generators",
            cap: TAYLOR_GENERATOR_CAP,
            actual: s,
        });
    }
    let total = 1usize << s;
    let mut lcm = vec![0u64; total];
    for sub in 1..total {
        let low = sub & sub.wrapping_neg();
        lcm[sub] = lcm[sub ^ low] | masks[low.trailing_zeros() as usize];
    }
    let mut strands: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for sub in 0..total {
        strands.entry(lcm[sub]).or_default().push(sub);
    }
    let mut table = BettiTable::new(ideal.ambient());
    for (alpha, subs) in strands {
        let degree = alpha.count_ones() as usize;
        let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &sub in &subs {
            levels.entry(sub.count_ones() as usize).or_default().push(sub);
        }
        let max_card = *levels.keys().max().expect("strand is nonempty");
        // rank of the strand differential out of each cardinality level
        let mut ranks: Vec<usize> = vec![0; max_card + 2];
        for c in 1..=max_card {
            let (Some(rows), Some(cols)) = (levels.get(&(c - 1)), levels.get(&c)) else {
                continue;
            };
            let row_index: BTreeMap<usize, usize> =
                rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
            for (j, &sub) in cols.iter().enumerate() {
                let mut sign = 1i64;
                let mut rem = sub;
                while rem != 0 {
                    let low = rem & rem.wrapping_neg();
                    let smaller = sub ^ low;
                    if lcm[smaller] == alpha {
                        matrix[row_index[&smaller]][j] = sign;
                    }
                    sign = -sign;
                    rem ^= low;
                }
            }
            ranks[c] = match field {
                FieldSpec::Char0 => crate::homology::rank_char0(&matrix),
                FieldSpec::Prime(p) => crate::homology::rank_mod_p(&matrix, *p),
            };
        }
        for (&c, level) in &levels {
            let h = level.len() as i64 - ranks[c] as i64 - ranks[c + 1] as i64;
            assert!(h >= 0, "negative Taylor homology: inconsistent ranks");
            table.add(c, degree, h as u64);
        }
    }
    Ok(table)
}

pub fn pd_of(ideal: &MonomialIdeal, field: &FieldSpec) -> Result<usize> {
    Ok(betti_hochster(ideal, field)?.pd())
}

/// Depth of `S/I` from projective dimension and the number of variables.
pub fn depth_of(ideal: &MonomialIdeal, field: &FieldSpec) -> Result<usize> {
    Ok(ideal.ambient() - pd_of(ideal, field)?)
}

/// The normalized depth profile of an ideal: initial degrees, depths and
/// normalized depth values of every squarefree power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GProfile {
    pub nu: usize,
    pub d: Vec<usize>,
    pub depth: Vec<usize>,
    pub g: Vec<usize>,
}

impl GProfile {
    pub fn is_non_increasing(&self) -> bool {
        self.g.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Computes the full profile for `k = 1..=ν(I)`. Every power keeps the
/// original ambient ring, so depth is measured in the ring of `I` even when
/// a power misses variables. Rejects widened input: unused ambient
/// variables would silently shift every depth.
pub fn g_profile(ideal: &MonomialIdeal, field: &FieldSpec) -> Result<GProfile> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_ambient_minimal() {
        return Err(Error::Invalid(
            "profile of a widened ideal: unused ambient variables would shift depth".into(),
        ));
    }
    let nu = ideal.monomial_grade()?;
    let n = ideal.ambient();
    let mut d = Vec::with_capacity(nu);
    let mut depth = Vec::with_capacity(nu);
    let mut g = Vec::with_capacity(nu);
    for k in 1..=nu {
        let power = ideal.squarefree_power(k)?;
        let dk = power.initial_degree()?;
        if let Some(&prev) = d.last() {
            assert!(dk > prev, "initial degrees must increase strictly");
        }
        let table = betti_hochster(&power, field)?;
        let dep = n - table.pd();
        let gk = dep
            .checked_sub(dk - 1)
            .expect("depth of a squarefree power is at least its initial degree minus one");
        d.push(dk);
        depth.push(dep);
        g.push(gk);
    }
    Ok(GProfile { nu, d, depth, g })
}

/// Predicted profile of `(I, x)` from the profile of `I`:
/// `g_J(k) = min(g_I(k) + d_k - d_{k-1} - 1, g_I(k-1))` with the
/// out-of-range values treated as infinite and `d_0 = 0`. The initial
/// degrees of the extension are `1, d_1 + 1, ..., d_ν + 1`.
pub fn predict_adjoin_variable(p: &GProfile) -> GProfile {
    let nu = p.nu;
    let mut g = Vec::with_capacity(nu + 1);
    let mut d = Vec::with_capacity(nu + 1);
    for k in 1..=nu + 1 {
        let first = if k <= nu {
            let d_prev = if k >= 2 { p.d[k - 2] } else { 0 };
            Some(p.g[k - 1] + p.d[k - 1] - d_prev - 1)
        } else {
            None
        };
        let second = if k >= 2 { Some(p.g[k - 2]) } else { None };
        let gk = match (first, second) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!("nu >= 1"),
        };
        g.push(gk);
        d.push(if k == 1 { 1 } else { p.d[k - 2] + 1 });
    }
    let depth = g.iter().zip(&d).map(|(&gk, &dk)| gk + dk - 1).collect();
    GProfile { nu: nu + 1, d, depth, g }
}

/// Outcome of the linear-resolution test; indices use the resolution of
/// the ideal itself, so linear means every `β_{i,j}(I)` sits in degree
/// `j = i + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearityCheck {
    Linear,
    /// Generators of mixed degrees; linearity is not defined here.
    NotEquigenerated,
    /// A Betti number outside the linear strand, in ideal convention.
    Nonlinear { i: usize, j: usize },
}

impl LinearityCheck {
    pub fn is_linear(&self) -> bool {
        matches!(self, LinearityCheck::Linear)
    }
}

pub fn linear_resolution_check(ideal: &MonomialIdeal, field: &FieldSpec) -> Result<LinearityCheck> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let d = ideal.initial_degree()?;
    if ideal.generators().iter().any(|g| g.degree() != d) {
        return Ok(LinearityCheck::NotEquigenerated);
    }
    let table = betti_hochster(ideal, field)?;
    for ((i, j), _) in table.entries() {
        if i >= 1 && j != (i - 1) + d {
            return Ok(LinearityCheck::Nonlinear { i: i - 1, j });
        }
    }
    Ok(LinearityCheck::Linear)
}

/// Single-variable colon test: the ideal generated by `prefix` colon `u`
/// is generated by variables.
fn colon_is_variable_generated(prefix: &[u64], u: u64) -> bool {
    let mut singles = 0u64;
    for &v in prefix {
        let diff = v & !u;
        if diff.count_ones() == 1 {
            singles |= diff;
        }
    }
    prefix.iter().all(|&v| (v & !u) & singles != 0)
}

/// Checks a specific ordering (as indices into the canonical generator
/// list) for the linear quotients property.
pub fn is_linear_quotients_order(ideal: &MonomialIdeal, order: &[usize]) -> Result<bool> {
    let masks = ideal.gen_masks();
    let s = masks.len();
    let mut seen = vec![false; s];
    if order.len() != s {
        return Err(Error::Invalid("ordering length mismatch".into()));
    }
    for &i in order {
        if i >= s || seen[i] {
            return Err(Error::Invalid("ordering is not a permutation".into()));
        }
        seen[i] = true;
    }
    let mut prefix: Vec<u64> = Vec::with_capacity(s);
    for &i in order {
        if !prefix.is_empty() && !colon_is_variable_generated(&prefix, masks[i]) {
            return Ok(false);
        }
        prefix.push(masks[i]);
    }
    Ok(true)
}

/// Searches for a linear quotients order by dynamic programming over
/// generator subsets: a set is admissible when some element can come last
/// with a variable-generated colon against the rest. Greedy extension is
/// not complete, so the search pays for the full subset lattice, hence
/// the generator cap.
pub fn linear_quotients_order(ideal: &MonomialIdeal) -> Result<Option<Vec<usize>>> {
    let masks = ideal.gen_masks();
    let s = masks.len();
    if s > LINEAR_QUOTIENTS_CAP {
        return Err(Error::CapExceeded {
            what: "linear quotients generators",
            cap: LINEAR_QUOTIENTS_CAP,
            actual: s,
        });
    }
    if s == 0 {
        return Ok(Some(Vec::new()));
    }
    // single[t][u]: the lone variable of masks[t] outside masks[u], if any
    let mut single = vec![vec![0u64; s]; s];
    for t in 0..s {
        for u in 0..s {
            let diff = masks[t] & !masks[u];
            if diff.count_ones() == 1 {
                single[t][u] = diff;
            }
        }
    }
    let total = 1usize << s;
    let mut admissible = vec![false; total];
    let mut last = vec![u8::MAX; total];
    admissible[0] = true;
    for a in 1..total {
        let mut bits = a;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let b = a ^ (1 << u);
            if !admissible[b] {
                continue;
            }
            let mut singles = 0u64;
            let mut rest = b;
            while rest != 0 {
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                singles |= single[t][u];
            }
            let mut ok = true;
            let mut rest = b;
            while rest != 0 {
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[t] & !masks[u] & singles == 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                admissible[a] = true;
                last[a] = u as u8;
                break;
            }
        }
    }
    let full = total - 1;
    if !admissible[full] {
        return Ok(None);
    }
    let mut order = Vec::with_capacity(s);
    let mut a = full;
    while a != 0 {
        let u = last[a] as usize;
        order.push(u);
        a ^= 1 << u;
    }
    order.reverse();
    Ok(Some(order))
}

/// Entrywise comparison of the Betti splitting identity
/// `β_{i,j}(I) = β_{i,j}(I1) + β_{i,j}(I2) + β_{i-1,j}(I1 ∩ I2)`
/// for a generator partition `G(I) = G(I1) ⊔ G(I2)`.
#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub holds: bool,
    /// (i, j, left side, right side) in ideal convention, where they differ.
    pub discrepancies: Vec<(usize, usize, u64, u64)>,
}

pub fn verify_betti_splitting(
    ideal: &MonomialIdeal,
    part1: &MonomialIdeal,
    part2: &MonomialIdeal,
    field: &FieldSpec,
) -> Result<SplittingReport> {
    let mut combined = part1.gen_masks();
    combined.extend(part2.gen_masks());
    combined.sort_unstable();
    let mut whole = ideal.gen_masks();
    whole.sort_unstable();
    if combined != whole || part1.gen_masks().iter().any(|m| part2.gen_masks().contains(m)) {
        return Err(Error::Invalid(
            "generators of the parts must partition the generators of the ideal".into(),
        ));
    }
    let n = ideal.ambient();
    for part in [part1, part2] {
        if !part.is_zero() && part.ambient() != n {
            return Err(Error::Invalid("parts must live in the ambient ring of the ideal".into()));
        }
    }
    let meet = part1.intersect(part2)?;
    let whole_t = ideal_betti(ideal, field)?;
    let p1_t = ideal_betti(part1, field)?;
    let p2_t = ideal_betti(part2, field)?;
    let meet_t = ideal_betti(&meet, field)?;

    let mut keys: Vec<(usize, usize)> = Vec::new();
    keys.extend(whole_t.keys());
    keys.extend(p1_t.keys());
    keys.extend(p2_t.keys());
    keys.extend(meet_t.keys().map(|&(i, j)| (i + 1, j)));
    keys.sort_unstable();
    keys.dedup();

    let get = |m: &BTreeMap<(usize, usize), u64>, i: usize, j: usize| -> u64 {
        m.get(&(i, j)).copied().unwrap_or(0)
    };
    let mut discrepancies = Vec::new();
    for (i, j) in keys {
        let lhs = get(&whole_t, i, j);
        let meet_part = if i == 0 { 0 } else { get(&meet_t, i - 1, j) };
        let rhs = get(&p1_t, i, j) + get(&p2_t, i, j) + meet_part;
        if lhs != rhs {
            discrepancies.push((i, j, lhs, rhs));
        }
    }
    Ok(SplittingReport { holds: discrepancies.is_empty(), discrepancies })
}

/// Betti numbers in ideal convention as a plain map; the zero ideal has an
/// empty table.
fn ideal_betti(
    ideal: &MonomialIdeal,
    field: &FieldSpec,
) -> Result<BTreeMap<(usize, usize), u64>> {
    if ideal.is_zero() {
        return Ok(BTreeMap::new());
    }
    let table = betti_hochster(ideal, field)?;
    let mut out = BTreeMap::new();
    for ((i, j), v) in table.entries() {
        if i >= 1 {
            out.insert((i - 1, j), v);
        }
    }
    Ok(out)
}

/// A certificate that the normalized depth of the `k`th squarefree power
/// of an edge ideal vanishes: a dominating `k`-matching whose vertex set is
/// a generator support, such that every outside vertex can be absorbed by
/// an earlier generator in the linear quotients order.
#[derive(Clone, Debug)]
pub struct GZeroWitness {
    pub matching: Matching,
    /// 1-based position in the supplied order.
    pub index: usize,
}

fn witness_holds(g: &Graph, ordered_gens: &[u64], pos: usize, f: u64) -> bool {
    let n = g.n();
    for t in 1..=n {
        let bit = 1u64 << (t - 1);
        if f & bit != 0 {
            continue;
        }
        if g.neighbors_mask(t) & f == 0 {
            return false; // not dominating
        }
        let target = f | bit;
        if !ordered_gens[..pos].iter().any(|&m| m & !target == 0) {
            return false;
        }
    }
    true
}

/// Searches for a witness, scanning positions from the top of the order
/// downwards. The first position is admissible only when its support
/// covers every vertex, which makes the outside-vertex condition vacuous;
/// that case carries the certificate for principal top powers.
pub fn g_zero_witness(g: &Graph, k: usize, order: &[usize]) -> Result<Option<GZeroWitness>> {
    let ideal = g.edge_ideal()?;
    let nu = g.matching_number();
    if k == 0 {
        return Err(Error::ZeroPowerIndex);
    }
    if k > nu {
        return Err(Error::PowerOutOfRange { k, nu });
    }
    let power = ideal.squarefree_power(k)?;
    if !is_linear_quotients_order(&power, order)? {
        return Err(Error::InadmissibleOrder);
    }
    let gens = power.gen_masks();
    let ordered: Vec<u64> = order.iter().map(|&i| gens[i]).collect();
    for pos in (0..ordered.len()).rev() {
        let f = ordered[pos];
        if witness_holds(g, &ordered, pos, f) {
            let matching = g
                .matchings(k)
                .into_iter()
                .find(|m| m.vertex_mask() == f)
                .expect("generator support is a matching vertex set");
            return Ok(Some(GZeroWitness { matching, index: pos + 1 }));
        }
    }
    Ok(None)
}

/// Validates a proposed witness (matching and 1-based order position).
pub fn check_g_zero_witness(
    g: &Graph,
    k: usize,
    order: &[usize],
    matching: &Matching,
    index: usize,
) -> Result<bool> {
    let ideal = g.edge_ideal()?;
    let power = ideal.squarefree_power(k)?;
    if !is_linear_quotients_order(&power, order)? {
        return Err(Error::InadmissibleOrder);
    }
    let validated = Matching::new(g, matching.edges())?;
    if validated.len() != k || index == 0 || index > order.len() {
        return Ok(false);
    }
    let gens = power.gen_masks();
    let ordered: Vec<u64> = order.iter().map(|&i| gens[i]).collect();
    let f = ordered[index - 1];
    Ok(validated.vertex_mask() == f && witness_holds(g, &ordered, index - 1, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{ideal_from_supports, SquarefreeMonomial};

    const Q: FieldSpec = FieldSpec::Char0;

    #[test]
    fn principal_ideal_is_koszul() {
        let i = ideal_from_supports(&[&[1, 2]]);
        for field in [Q, FieldSpec::Prime(2)] {
            let t = betti_hochster(&i, &field).unwrap();
            assert_eq!(t.get(0, 0), 1);
            assert_eq!(t.get(1, 2), 1);
            assert_eq!(t.entries().count(), 2);
            assert_eq!(t.pd(), 1);
            assert_eq!(depth_of(&i, &field).unwrap(), 1);
            assert_eq!(betti_taylor(&i, &field).unwrap(), t);
        }
    }

    /// Expected table computed by the Taylor strand decomposition: the two
    /// generators each give a first syzygy in their own degree-2 strand,
    /// and the full subset strand x1x2x3 is a bare cycle in index 2.
    #[test]
    fn path_ideal_table_is_frozen() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let t = betti_taylor(&i, &Q).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 3), 1);
        assert_eq!(t.entries().count(), 3);
        assert_eq!(t.pd(), 2);
        assert_eq!(betti_hochster(&i, &Q).unwrap(), t);
    }

    #[test]
    fn koszul_pair_table() {
        let i = ideal_from_supports(&[&[1, 2], &[3, 4]]);
        let t = betti_taylor(&i, &Q).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.pd(), 2);
        assert_eq!(betti_hochster(&i, &Q).unwrap(), t);
    }

    #[test]
    fn widened_ideal_keeps_ideal_betti_numbers() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let wide = MonomialIdeal::with_ambient(i.generators().to_vec(), 5).unwrap();
        let t = betti_hochster(&i, &Q).unwrap();
        let tw = betti_hochster(&wide, &Q).unwrap();
        assert_eq!(t.pd(), tw.pd());
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            tw.entries().collect::<Vec<_>>()
        );
        // depth picks up one per unused variable
        assert_eq!(depth_of(&wide, &Q).unwrap(), depth_of(&i, &Q).unwrap() + 2);
    }

    #[test]
    fn profile_of_single_edge() {
        let i = ideal_from_supports(&[&[1, 2]]);
        let p = g_profile(&i, &Q).unwrap();
        assert_eq!(p.nu, 1);
        assert_eq!(p.d, vec![2]);
        assert_eq!(p.depth, vec![1]);
        assert_eq!(p.g, vec![0]);
    }

    #[test]
    fn profile_rejects_widened_ideal() {
        let i = ideal_from_supports(&[&[1, 2]]);
        let wide = MonomialIdeal::with_ambient(i.generators().to_vec(), 3).unwrap();
        assert!(g_profile(&wide, &Q).is_err());
    }

    #[test]
    fn adjoin_variable_prediction_matches_direct_computation() {
        let i = ideal_from_supports(&[&[1, 2]]);
        let base = g_profile(&i, &Q).unwrap();
        let predicted = predict_adjoin_variable(&base);
        assert_eq!(predicted.g, vec![1, 0]);
        assert_eq!(predicted.d, vec![1, 3]);
        let j = i.adjoin_variable().unwrap();
        let direct = g_profile(&j, &Q).unwrap();
        assert_eq!(direct, predicted);
    }

    #[test]
    fn linearity_examples() {
        // two disjoint edges: complement of the four-cycle; the Koszul
        // relation in degree 4 is outside the linear strand
        let pair = ideal_from_supports(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            linear_resolution_check(&pair, &Q).unwrap(),
            LinearityCheck::Nonlinear { i: 1, j: 4 }
        );
        // the four-cycle itself is cochordal
        let c4 = crate::graph::Graph::cycle(4).unwrap();
        assert!(linear_resolution_check(&c4.edge_ideal().unwrap(), &Q)
            .unwrap()
            .is_linear());
        let principal = ideal_from_supports(&[&[1, 2, 3]]);
        assert!(linear_resolution_check(&principal, &Q).unwrap().is_linear());
        let mixed = ideal_from_supports(&[&[1], &[2, 3]]);
        assert_eq!(
            linear_resolution_check(&mixed, &Q).unwrap(),
            LinearityCheck::NotEquigenerated
        );
    }

    #[test]
    fn linear_quotients_of_path_ideal() {
        // hand colon computation: (x1x2, x2x3) : x3x4 = (x2)
        let i = ideal_from_supports(&[&[1, 2], &[2, 3], &[3, 4]]);
        let listed: Vec<usize> = (0..3)
            .map(|k| {
                i.generators()
                    .iter()
                    .position(|g| {
                        g.indices() == [[1usize, 2], [2, 3], [3, 4]][k].to_vec()
                    })
                    .unwrap()
            })
            .collect();
        assert!(is_linear_quotients_order(&i, &listed).unwrap());
        assert!(linear_quotients_order(&i).unwrap().is_some());
    }

    #[test]
    fn no_linear_quotients_for_disjoint_pair() {
        let i = ideal_from_supports(&[&[1, 2], &[3, 4]]);
        assert!(!is_linear_quotients_order(&i, &[0, 1]).unwrap());
        assert!(!is_linear_quotients_order(&i, &[1, 0]).unwrap());
        assert_eq!(linear_quotients_order(&i).unwrap(), None);
    }

    #[test]
    fn splitting_with_empty_part_is_degenerate() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let report =
            verify_betti_splitting(&i, &i, &MonomialIdeal::zero(), &Q).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn splitting_rejects_bad_partition() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let half = MonomialIdeal::with_ambient(vec![i.generators()[0]], 3).unwrap();
        assert!(verify_betti_splitting(&i, &half, &half, &Q).is_err());
    }

    #[test]
    fn vanishing_certificates_track_the_profile() {
        // complete bipartite: g(1) = 0, a certificate exists
        let k22 = crate::graph::Graph::complete_bipartite(2, 2).unwrap();
        let power = k22.edge_ideal().unwrap();
        let order = linear_quotients_order(&power).unwrap().unwrap();
        assert!(g_zero_witness(&k22, 1, &order).unwrap().is_some());

        // the path on four vertices has g(1) = 1, so no certificate
        let p4 = crate::graph::Graph::path(4).unwrap();
        let ideal = p4.edge_ideal().unwrap();
        let order = linear_quotients_order(&ideal).unwrap().unwrap();
        assert!(g_zero_witness(&p4, 1, &order).unwrap().is_none());
        assert_eq!(g_profile(&ideal, &Q).unwrap().g, vec![1, 0]);
    }

    #[test]
    fn witness_search_rejects_inadmissible_orders() {
        let pair_graph = crate::graph::Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        // two disjoint edges admit no linear quotients order at all
        assert!(matches!(
            g_zero_witness(&pair_graph, 1, &[0, 1]),
            Err(Error::InadmissibleOrder)
        ));
    }

    /// Negative control: an arbitrary partition of the four-cycle's edge
    /// ideal. The outcome is recorded, not asserted; the point is that the
    /// checker reports discrepancies rather than crashing.
    #[test]
    fn splitting_negative_control_runs() {
        let c4 = crate::graph::Graph::cycle(4).unwrap().edge_ideal().unwrap();
        let opposite_pair = |a: &[usize], b: &[usize]| {
            MonomialIdeal::with_ambient(
                vec![
                    SquarefreeMonomial::from_indices(a).unwrap(),
                    SquarefreeMonomial::from_indices(b).unwrap(),
                ],
                4,
            )
            .unwrap()
        };
        let part1 = opposite_pair(&[1, 2], &[3, 4]);
        let part2 = opposite_pair(&[2, 3], &[1, 4]);
        let report = verify_betti_splitting(&c4, &part1, &part2, &Q).unwrap();
        println!(
            "four-cycle opposite-edge partition: holds={} discrepancies={:?}",
            report.holds, report.discrepancies
        );
    }
}
