//! Graphs and ideals with prescribed normalized depth profiles.
//!
//! The building blocks: a family of graphs whose complement is chordal and
//! connected with a cut vertex (profile `1, 0, ..., 0`), ideals with a step
//! profile `1, ..., 1, 0, ..., 0` obtained by adjoining free variables to a
//! complete bipartite edge ideal, all-ones profiles obtained by a disjoint
//! product with another bipartite factor, and finally arbitrary
//! non-increasing profiles as disjoint products of those pieces, using the
//! additivity of the profile over products in disjoint variables.

use crate::betti::GProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::MonomialIdeal;

/// A prescribed profile: a non-increasing sequence of nonnegative values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileTarget(Vec<usize>);

impl ProfileTarget {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::BadParameters("profile target must be nonempty".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParameters("profile target must be non-increasing".into()));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A constructed instance together with the profile it is built to have.
/// Verification (profile equality over a chosen field) lives in the test
/// and verify suites, not here.
#[derive(Clone, Debug)]
pub struct Construction {
    pub ideal: MonomialIdeal,
    pub graph: Option<Graph>,
    pub predicted: GProfile,
    pub provenance: String,
}

/// The six-vertex demonstration graph: cochordal, complement connected
/// with cut vertex 1, matching number 3, profile (1, 0, 0).
pub fn example36() -> Graph {
    Graph::new(6, &[(2, 4), (3, 4), (2, 5), (3, 5), (2, 6), (3, 6), (1, 6)])
        .expect("fixed graph is valid")
}

/// A graph on `2t` vertices whose complement is chordal and connected with
/// cut vertex 1: the complement joins vertex 1 to a clique on `2..=t` and
/// to all but the last vertex of a clique on `t+1..=2t`. The graph itself
/// is complete bipartite between those blocks plus the pendant edge
/// `{1, 2t}`, and has matching number `t`.
///
/// Every call machine-checks the required conditions rather than trusting
/// the construction.
pub fn base_cut_vertex_graph(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::BadParameters(
            "cut-vertex base graphs need t >= 2: with matching number 1 the complement \
             of a graph without isolated vertices cannot be connected with a cut vertex"
                .into(),
        ));
    }
    let n = 2 * t;
    let mut edges = Vec::new();
    for a in 2..=t {
        for b in t + 1..=n {
            edges.push((a, b));
        }
    }
    edges.push((1, n));
    let g = Graph::new(n, &edges)?;

    // postconditions, checked on every call
    if !g.isolated_vertices().is_empty() {
        return Err(Error::Invalid("base graph has an isolated vertex".into()));
    }
    let gc = g.complement();
    if !gc.is_chordal() || !gc.is_connected() || !gc.cut_vertices()?.contains(&1) {
        return Err(Error::Invalid(
            "complement of the base graph is not chordal connected with cut vertex 1".into(),
        ));
    }
    if g.matching_number() != t {
        return Err(Error::Invalid("base graph has the wrong matching number".into()));
    }
    Ok(g)
}

/// Staircase profiles for graphs: `ν = m` and profile
/// `(s, s-1, ..., 1, 0, ..., 0)`. For `s = 1` this is the cut-vertex base
/// graph; each extra disjoint edge lifts the profile by the min-recursion,
/// adding one to the leading values.
pub fn staircase_graph(s: usize, m: usize) -> Result<Construction> {
    if s < 1 || s >= m {
        return Err(Error::BadParameters(format!(
            "staircase profiles need 1 <= s < m, got s={s}, m={m}"
        )));
    }
    let mut g = base_cut_vertex_graph(m - s + 1)?;
    let edge = Graph::new(2, &[(1, 2)])?;
    for _ in 0..s - 1 {
        g = g.disjoint_union(&edge)?;
    }
    let ideal = g.edge_ideal()?;
    let gvals: Vec<usize> = (1..=m).map(|k| s.saturating_sub(k - 1)).collect();
    let d: Vec<usize> = (1..=m).map(|k| 2 * k).collect();
    let depth: Vec<usize> = gvals.iter().zip(&d).map(|(&g, &d)| g + d - 1).collect();
    let predicted = GProfile { nu: m, d, depth, g: gvals };
    Ok(Construction {
        ideal,
        graph: Some(g),
        predicted,
        provenance: format!("thm38(s={s}, m={m})"),
    })
}

/// Predicted profile of the disjoint union of a cochordal graph with one
/// extra edge: `g(k) = min(g_H(k) + 1, g_H(k-1))` with out-of-range values
/// treated as infinite. Errors when the graph is not cochordal, which is
/// the hypothesis of the recursion.
pub fn predict_adjoin_edge(h: &Graph, profile: &GProfile) -> Result<GProfile> {
    if !h.complement().is_chordal() {
        return Err(Error::NotCochordal);
    }
    let nu = profile.nu;
    let mut g = Vec::with_capacity(nu + 1);
    for k in 1..=nu + 1 {
        let first = if k <= nu { Some(profile.g[k - 1] + 1) } else { None };
        let second = if k >= 2 { Some(profile.g[k - 2]) } else { None };
        let gk = match (first, second) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!("nu >= 1"),
        };
        g.push(gk);
    }
    let d: Vec<usize> = (1..=nu + 1).map(|k| 2 * k).collect();
    let depth: Vec<usize> = g.iter().zip(&d).map(|(&gk, &dk)| gk + dk - 1).collect();
    Ok(GProfile { nu: nu + 1, d, depth, g })
}

/// Step profiles: `ν = m`, `g = (1, ..., 1, 0, ..., 0)` with `s` ones.
/// Start from the complete bipartite graph on two blocks of size `m - s`
/// (complement: two disjoint cliques, so the profile is all zeros) and
/// adjoin `s` free variables.
pub fn step_ideal(s: usize, m: usize) -> Result<Construction> {
    if s < 1 || s >= m {
        return Err(Error::BadParameters(format!(
            "step profiles need 1 <= s < m, got s={s}, m={m}"
        )));
    }
    let t = m - s;
    let g = Graph::complete_bipartite(t, t)?;
    let mut ideal = g.edge_ideal()?;
    for _ in 0..s {
        ideal = ideal.adjoin_variable()?;
    }
    let gvals: Vec<usize> = (1..=m).map(|k| usize::from(k <= s)).collect();
    // k generators: min(k, s) fresh variables plus edges for the rest
    let d: Vec<usize> = (1..=m).map(|k| 2 * k - k.min(s)).collect();
    let depth: Vec<usize> = gvals.iter().zip(&d).map(|(&g, &d)| g + d - 1).collect();
    let predicted = GProfile { nu: m, d, depth, g: gvals };
    Ok(Construction {
        ideal,
        graph: None,
        predicted,
        provenance: format!("lemma42(s={s}, m={m})"),
    })
}

/// All-ones profiles: `ν = m`, `g = (1, ..., 1)`. A step factor with `m`
/// ones and grade `m + 1`, multiplied (in disjoint variables) by a
/// complete bipartite edge ideal of grade `m` and all-zero profile; the
/// product truncates the grade to `m` and the profiles add.
pub fn ones_ideal(m: usize) -> Result<Construction> {
    if m < 1 {
        return Err(Error::BadParameters("all-ones profiles need m >= 1".into()));
    }
    let step = step_ideal(m, m + 1)?;
    let bipartite = Graph::complete_bipartite(m, m)?.edge_ideal()?;
    let ideal = step.ideal.product_disjoint(&bipartite)?;
    let gvals = vec![1usize; m];
    let d: Vec<usize> = (1..=m)
        .map(|k| step.predicted.d[k - 1] + 2 * k)
        .collect();
    let depth: Vec<usize> = gvals.iter().zip(&d).map(|(&g, &d)| g + d - 1).collect();
    let predicted = GProfile { nu: m, d, depth, g: gvals };
    Ok(Construction {
        ideal,
        graph: None,
        predicted,
        provenance: format!("lemma43(m={m})"),
    })
}

/// Realizes an arbitrary non-increasing profile as a product of step and
/// all-ones factors in disjoint variables: the target decomposes uniquely
/// as `a_m` copies of the all-ones vector plus, for each descent, a step
/// vector. An all-zero target falls back to a single complete bipartite
/// edge ideal. Step factors are emitted from the largest support down.
pub fn prescribed_profile_ideal(target: &ProfileTarget) -> Result<Construction> {
    let values = target.values();
    let m = values.len();
    let mut factors: Vec<Construction> = Vec::new();
    let mut pieces: Vec<String> = Vec::new();
    for s in (1..m).rev() {
        let copies = values[s - 1] - values[s];
        for _ in 0..copies {
            factors.push(step_ideal(s, m)?);
        }
        if copies > 0 {
            pieces.push(format!("{copies} x lemma42(s={s}, m={m})"));
        }
    }
    let ones = values[m - 1];
    for _ in 0..ones {
        factors.push(ones_ideal(m)?);
    }
    if ones > 0 {
        pieces.push(format!("{ones} x lemma43(m={m})"));
    }

    let ideal = if factors.is_empty() {
        pieces.push(format!("edge ideal of K({m},{m})"));
        Graph::complete_bipartite(m, m)?.edge_ideal()?
    } else {
        let mut acc = factors[0].ideal.clone();
        for f in &factors[1..] {
            acc = acc.product_disjoint(&f.ideal)?;
        }
        acc
    };

    let d: Vec<usize> = (1..=m)
        .map(|k| {
            if factors.is_empty() {
                2 * k
            } else {
                factors.iter().map(|f| f.predicted.d[k - 1]).sum()
            }
        })
        .collect();
    let depth: Vec<usize> = values.iter().zip(&d).map(|(&g, &d)| g + d - 1).collect();
    let predicted = GProfile { nu: m, d, depth, g: values.to_vec() };
    Ok(Construction {
        ideal,
        graph: None,
        predicted,
        provenance: format!("thm41({values:?}) = {}", pieces.join(" * ")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{g_profile, predict_adjoin_variable};
    use crate::homology::FieldSpec;

    const Q: FieldSpec = FieldSpec::Char0;

    #[test]
    fn example_graph_facts() {
        let g = example36();
        assert_eq!(g.matching_number(), 3);
        let gc = g.complement();
        assert_eq!(
            gc.edges(),
            &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (4, 5), (4, 6), (5, 6)]
        );
        assert!(gc.is_chordal());
        assert!(gc.is_connected());
        assert_eq!(gc.cut_vertices().unwrap(), vec![1]);
    }

    #[test]
    fn base_graph_smallest_case_is_the_path() {
        let g = base_cut_vertex_graph(2).unwrap();
        // edges: 2-3, 2-4, 1-4, i.e. the path 1-4-2-3
        assert_eq!(g.edges(), &[(1, 4), (2, 3), (2, 4)]);
        assert_eq!(g.matching_number(), 2);
        assert!(base_cut_vertex_graph(1).is_err());
    }

    #[test]
    fn base_graph_profile_is_one_then_zeros() {
        for t in [2, 3] {
            let g = base_cut_vertex_graph(t).unwrap();
            let p = g_profile(&g.edge_ideal().unwrap(), &Q).unwrap();
            assert_eq!(p.nu, t);
            let mut expected = vec![0usize; t];
            expected[0] = 1;
            assert_eq!(p.g, expected, "t = {t}");
        }
    }

    #[test]
    fn step_ideal_small_cases() {
        let c = step_ideal(1, 2).unwrap();
        assert_eq!(c.ideal.ambient(), 3);
        assert_eq!(g_profile(&c.ideal, &Q).unwrap(), c.predicted);

        let c = step_ideal(2, 3).unwrap();
        assert_eq!(c.ideal.ambient(), 4);
        let p = g_profile(&c.ideal, &Q).unwrap();
        assert_eq!(p.g, vec![1, 1, 0]);
        assert_eq!(p, c.predicted);

        let c = step_ideal(1, 3).unwrap();
        assert_eq!(c.ideal.ambient(), 5);
        let p = g_profile(&c.ideal, &Q).unwrap();
        assert_eq!(p.g, vec![1, 0, 0]);
        assert_eq!(p, c.predicted);
    }

    #[test]
    fn step_ideal_matches_adjoin_variable_recursion() {
        // the predicted profile must agree with iterating the
        // variable-adjunction prediction from the bipartite base
        let g = Graph::complete_bipartite(2, 2).unwrap();
        let mut profile = g_profile(&g.edge_ideal().unwrap(), &Q).unwrap();
        assert_eq!(profile.g, vec![0, 0]);
        profile = predict_adjoin_variable(&profile);
        assert_eq!(profile.g, vec![1, 0, 0]);
        let c = step_ideal(1, 3).unwrap();
        assert_eq!(profile, c.predicted);
    }

    #[test]
    fn ones_ideal_smallest_case() {
        let c = ones_ideal(1).unwrap();
        assert_eq!(c.ideal.ambient(), 5);
        assert_eq!(c.predicted.g, vec![1]);
        assert_eq!(g_profile(&c.ideal, &Q).unwrap(), c.predicted);
    }

    #[test]
    fn adjoin_edge_prediction_examples() {
        let p4 = Graph::path(4).unwrap();
        let profile = g_profile(&p4.edge_ideal().unwrap(), &Q).unwrap();
        assert_eq!(profile.g, vec![1, 0]);
        let predicted = predict_adjoin_edge(&p4, &profile).unwrap();
        assert_eq!(predicted.g, vec![2, 1, 0]);

        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        let ep = g_profile(&edge.edge_ideal().unwrap(), &Q).unwrap();
        let predicted = predict_adjoin_edge(&edge, &ep).unwrap();
        assert_eq!(predicted.g, vec![1, 0]);

        let c4 = Graph::cycle(4).unwrap();
        // complement of the four-cycle is two disjoint edges: cochordal,
        // but the cycle complement of a path of length five is not
        assert!(predict_adjoin_edge(&c4, &ep).is_ok());
        let c5 = Graph::cycle(5).unwrap();
        assert!(predict_adjoin_edge(&c5.complement(), &ep).is_err());
    }

    #[test]
    fn staircase_parameters_are_validated() {
        assert!(staircase_graph(0, 2).is_err());
        assert!(staircase_graph(2, 2).is_err());
        assert!(staircase_graph(3, 2).is_err());
    }

    #[test]
    fn prescribed_profile_validation() {
        assert!(ProfileTarget::new(vec![]).is_err());
        assert!(ProfileTarget::new(vec![0, 1]).is_err());
        assert!(ProfileTarget::new(vec![2, 1, 1, 0]).is_ok());
    }

    #[test]
    fn prescribed_all_zero_target_uses_bipartite_base() {
        let t = ProfileTarget::new(vec![0, 0]).unwrap();
        let c = prescribed_profile_ideal(&t).unwrap();
        assert_eq!(c.ideal.ambient(), 4);
        assert_eq!(g_profile(&c.ideal, &Q).unwrap().g, vec![0, 0]);
    }
}
