//! Verification suites and sweep drivers.
//!
//! Each suite re-derives a family of claimed identities from scratch on
//! desk-scale instances and reports one line per check. The suites back
//! both the `verify` subcommand and the acceptance test target, so the CLI
//! and `cargo test` agree by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{
    betti_hochster, betti_taylor, g_profile, g_zero_witness, is_linear_quotients_order,
    linear_quotients_order, linear_resolution_check, predict_adjoin_variable,
    verify_betti_splitting,
};
use crate::complex::stanley_reisner;
use crate::error::{Error, Result};
use crate::families::{
    base_cut_vertex_graph, example36, ones_ideal, predict_adjoin_edge, prescribed_profile_ideal,
    staircase_graph, step_ideal, ProfileTarget,
};
use crate::graph::{
    admits_special_order, complement_cut_split, is_dominating_matching, is_special_matching,
    special_matching, Graph, Matching,
};
use crate::homology::{euler_from_dims, reduced_euler_characteristic, reduced_homology, FieldSpec};
use crate::io::{GraphJson, ProfileJson};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial};

pub const SCHEMA_VERSION: &str = "1";

/// Sweeps enumerate or sample edge subsets through a 64-bit mask, which
/// bounds the vertex count.
pub const SWEEP_VERTEX_CAP: usize = 11;

fn check_sweep_cap(n: usize) -> Result<()> {
    if n > SWEEP_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "sweep vertices",
            cap: SWEEP_VERTEX_CAP,
            actual: n,
        });
    }
    Ok(())
}

/// One named check inside a suite.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Machine-readable outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    pub field: String,
    pub passed: bool,
    pub instances: u64,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    fn new(suite: &str, field: &FieldSpec) -> Self {
        Self {
            schema: SCHEMA_VERSION.into(),
            suite: suite.into(),
            field: field.to_string(),
            passed: true,
            instances: 0,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(CheckLine { name: name.into(), passed, details: details.into() });
    }

    /// Records an informational line that does not gate the suite.
    fn note(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.checks.push(CheckLine { name: name.into(), passed: true, details: details.into() });
    }
}

/// A flagged instance of the conjecture sweep, replayable through the
/// `gprofile` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub graph: GraphJson,
    pub profile: ProfileJson,
}

/// Outcome of a conjecture sweep. Timing is deliberately not part of the
/// record so reports stay byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub schema: String,
    pub class: String,
    pub field: String,
    pub instances: u64,
    pub counterexamples: Vec<CounterexampleRecord>,
}

// ---------------------------------------------------------------------------
// instance generators

/// All labeled graphs on `1..=n` without isolated vertices, by edge-subset
/// enumeration.
pub fn graphs_without_isolated(n: usize) -> Vec<Graph> {
    assert!(n <= SWEEP_VERTEX_CAP, "edge-subset masks need C(n,2) <= 63");
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            pairs.push((a, b));
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("enumerated edges are valid");
        if g.isolated_vertices().is_empty() {
            out.push(g);
        }
    }
    out
}

/// A random nonzero ambient-minimal squarefree ideal.
pub fn random_ideal(rng: &mut ChaCha8Rng, max_vars: usize, max_gens: usize) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(1..=max_vars);
        let s = rng.gen_range(1..=max_gens);
        let mons: Vec<SquarefreeMonomial> = (0..s)
            .map(|_| SquarefreeMonomial::from_mask(rng.gen_range(1..(1u64 << n))))
            .collect();
        if let Ok(ideal) = MonomialIdeal::minimalize(mons) {
            if !ideal.is_zero() {
                return ideal;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// suites

/// Suite `example36`: every stated fact about the fixed six-vertex graph.
pub fn suite_example36(field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("example36", field);
    let g = example36();
    let ideal = g.edge_ideal()?;

    report.push("matching number is 3", g.matching_number() == 3, format!("{}", g.matching_number()));
    report.push(
        "grade of the edge ideal is 3",
        ideal.monomial_grade()? == 3,
        format!("{}", ideal.monomial_grade()?),
    );

    let gc = g.complement();
    report.push("complement is chordal", gc.is_chordal(), "");
    report.push("complement is connected", gc.is_connected(), "");
    let cuts = gc.cut_vertices()?;
    report.push("complement cut vertices are {1}", cuts == vec![1], format!("{cuts:?}"));

    let profile = g_profile(&ideal, field)?;
    report.push(
        "profile is (1, 0, 0)",
        profile.g == vec![1, 0, 0],
        format!("{:?}", profile.g),
    );
    report.push(
        "depth values are (2, 3, 5)",
        profile.depth == vec![2, 3, 5],
        format!("{:?}", profile.depth),
    );

    // the seven second-power generators, lowest-support first
    let p2 = ideal.squarefree_power(2)?;
    let expected: Vec<SquarefreeMonomial> = [
        vec![2, 3, 4, 5],
        vec![1, 2, 4, 6],
        vec![1, 3, 4, 6],
        vec![2, 3, 4, 6],
        vec![1, 2, 5, 6],
        vec![1, 3, 5, 6],
        vec![2, 3, 5, 6],
    ]
    .iter()
    .map(|s| SquarefreeMonomial::from_indices(s).expect("valid"))
    .collect();
    let mut expected_sorted = expected.clone();
    expected_sorted.sort();
    report.push(
        "second power has the seven listed generators",
        p2.generators() == expected_sorted.as_slice(),
        format!("{p2}"),
    );
    report.push(
        "first second-power generator is x2x3x4x5",
        p2.generators().first().map(|g| g.indices()) == Some(vec![2, 3, 4, 5]),
        format!("{:?}", p2.generators().first().map(|g| g.indices())),
    );
    let p3 = ideal.squarefree_power(3)?;
    report.push(
        "third power is principal on all six variables",
        p3.generators().len() == 1 && p3.generators()[0].indices() == vec![1, 2, 3, 4, 5, 6],
        format!("{p3}"),
    );
    report.push(
        "second power initial degree is 4",
        p2.initial_degree()? == 4,
        format!("{}", p2.initial_degree()?),
    );

    // listed linear quotient orders
    let order1 = listed_order(&ideal, &[
        vec![2, 4], vec![3, 4], vec![2, 5], vec![3, 5], vec![2, 6], vec![3, 6], vec![1, 6],
    ])?;
    report.push(
        "listed order for the first power has linear quotients",
        is_linear_quotients_order(&ideal, &order1)?,
        format!("{order1:?}"),
    );
    let order2 = listed_order(&p2, &[
        vec![2, 3, 4, 5], vec![2, 3, 4, 6], vec![1, 2, 4, 6], vec![1, 3, 4, 6],
        vec![1, 2, 5, 6], vec![1, 3, 5, 6], vec![2, 3, 5, 6],
    ])?;
    report.push(
        "listed order for the second power has linear quotients",
        is_linear_quotients_order(&p2, &order2)?,
        format!("{order2:?}"),
    );
    report.push(
        "third power trivially has linear quotients",
        is_linear_quotients_order(&p3, &[0])?,
        "",
    );

    // the distinguished 2-matching
    let m = Matching::new(&g, &[(1, 6), (3, 5)])?;
    let split = complement_cut_split(&g, 1, None)?;
    report.push(
        "complement split components are {2,3} and {4,5,6}",
        split.c1 == 0b000110 && split.c2 == 0b111000,
        format!("c1={:#b} c2={:#b}", split.c1, split.c2),
    );
    report.push("{{1,6},{3,5}} is special", is_special_matching(&m, &split), "");
    report.push(
        "{{1,6},{3,5}} is dominating",
        is_dominating_matching(&g, &m)?,
        "",
    );
    report.push(
        "{{1,6},{3,5}} certifies g(2) = 0 at position 6 of the listed order",
        crate::betti::check_g_zero_witness(&g, 2, &order2, &m, 6)?,
        "",
    );
    let found = g_zero_witness(&g, 2, &order2)?;
    report.push(
        "descending search finds a certificate for g(2) = 0",
        found.is_some(),
        format!("{found:?}"),
    );
    // the third power is principal; its certificate is the full-support
    // generator at the first position
    let found3 = g_zero_witness(&g, 3, &[0])?;
    report.push(
        "the principal top power is certified at position 1",
        found3.as_ref().map(|w| w.index) == Some(1),
        format!("{found3:?}"),
    );

    // constructed special matchings for every admissible k
    for k in 2..=3 {
        let constructed = special_matching(&g, &split, k)?;
        report.push(
            format!("constructed special {k}-matching is special and dominating"),
            is_special_matching(&constructed, &split)
                && is_dominating_matching(&g, &constructed)?,
            format!("{:?}", constructed.edges()),
        );
    }

    // every power of the one-variable extension splits
    let extension = ideal.adjoin_variable()?;
    let mut splittings_hold = true;
    if let Err(e) = check_extension_splittings(&ideal, &extension, field) {
        splittings_hold = false;
        report.push("extension powers are Betti splittings", false, e.to_string());
    }
    if splittings_hold {
        report.push("extension powers are Betti splittings", true, "k = 2..=4");
    }

    report.instances = 1;
    Ok(report)
}

/// Positions of the listed generators inside the canonical generator order.
fn listed_order(ideal: &MonomialIdeal, listed: &[Vec<usize>]) -> Result<Vec<usize>> {
    listed
        .iter()
        .map(|s| {
            let target = SquarefreeMonomial::from_indices(s)?;
            ideal
                .generators()
                .iter()
                .position(|g| *g == target)
                .ok_or_else(|| Error::Invalid(format!("{s:?} is not a generator")))
        })
        .collect()
}

/// Suites `thm32-sweep` and the degree identity: over every labeled
/// cochordal graph without isolated vertices on at most `max_n` vertices,
/// the three characterizations agree pairwise, and the next-to-top total
/// Betti number of `S/I(G)` equals the number of complement cut vertices
/// counted with cohomology multiplicity.
pub fn suite_cochordal_sweep(max_n: usize, field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("thm32-sweep", field);
    let mut total = 0u64;
    let mut equivalence_failures: Vec<String> = Vec::new();
    let mut degree_failures: Vec<String> = Vec::new();
    for n in 2..=max_n {
        let graphs: Vec<Graph> = graphs_without_isolated(n)
            .into_iter()
            .filter(|g| g.complement().is_chordal())
            .collect();
        total += graphs.len() as u64;
        let field = *field;
        let results: Vec<(Option<String>, Option<String>)> = graphs
            .par_iter()
            .map(|g| check_cochordal_instance(g, &field))
            .collect();
        for (eq, deg) in results {
            if let Some(e) = eq {
                equivalence_failures.push(e);
            }
            if let Some(e) = deg {
                degree_failures.push(e);
            }
        }
    }
    report.instances = total;
    report.push(
        format!("three characterizations agree on {total} cochordal graphs"),
        equivalence_failures.is_empty(),
        if equivalence_failures.is_empty() {
            String::new()
        } else {
            format!("{} failures, first: {}", equivalence_failures.len(), equivalence_failures[0])
        },
    );
    report.push(
        "next-to-top Betti number counts complement disconnections",
        degree_failures.is_empty(),
        if degree_failures.is_empty() {
            String::new()
        } else {
            format!("{} failures, first: {}", degree_failures.len(), degree_failures[0])
        },
    );
    Ok(report)
}

fn check_cochordal_instance(g: &Graph, field: &FieldSpec) -> (Option<String>, Option<String>) {
    let ideal = g.edge_ideal().expect("sweep graphs have no isolated vertices");
    let profile = g_profile(&ideal, field).expect("sweep sizes are within caps");
    let gc = g.complement();
    let cond_cut = gc.is_connected() && !gc.cut_vertices().expect("connected").is_empty();
    let cond_g1 = profile.g[0] == 1;
    let cond_full = profile.g[0] == 1 && profile.g[1..].iter().all(|&v| v == 0);
    let equivalence = if cond_cut == cond_g1 && cond_g1 == cond_full {
        None
    } else {
        Some(format!(
            "{g}: cut={cond_cut} g1={cond_g1} tail={cond_full} profile={:?}",
            profile.g
        ))
    };

    // total Betti number in index n-2 against the cohomology count over
    // vertex-deleted induced subcomplexes of the complement clique complex;
    // at n = 2 the empty subset contributes its degree -1 cohomology to the
    // same homological index, so that boundary term is added back
    let n = g.n();
    let table = betti_hochster(&ideal, field).expect("within caps");
    let clique = gc.clique_complex().expect("within caps");
    let mut rhs = 0u64;
    for j in 1..=n {
        let w: Vec<usize> = (1..=n).filter(|&v| v != j).collect();
        let sub = clique.induced(&w).expect("valid subset");
        let dims = reduced_homology(&sub, field).expect("nonvoid");
        rhs += dims.dim(0);
    }
    if n == 2 {
        rhs += 1;
    }
    let lhs = table.total(n - 2);
    let degree = if lhs == rhs {
        None
    } else {
        Some(format!("{g}: beta_(n-2) total {lhs} vs cohomology count {rhs}"))
    };
    (equivalence, degree)
}

/// Suite `product-additivity`: on seeded random disjoint pairs the grade of
/// the product is the minimum and the profile is the sum.
pub fn suite_product_additivity(trials: u64, seed: u64, field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("product-additivity", field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let i1 = random_ideal(&mut rng, 5, 5);
        let i2 = random_ideal(&mut rng, 5, 5);
        let p1 = g_profile(&i1, field)?;
        let p2 = g_profile(&i2, field)?;
        let product = i1.product_disjoint(&i2)?;
        let pp = g_profile(&product, field)?;
        let expected_nu = p1.nu.min(p2.nu);
        if pp.nu != expected_nu {
            failures.push(format!("trial {t}: nu {} vs min {}", pp.nu, expected_nu));
            continue;
        }
        for k in 0..expected_nu {
            if pp.g[k] != p1.g[k] + p2.g[k] {
                failures.push(format!(
                    "trial {t}: k={} product {} vs {}+{}",
                    k + 1,
                    pp.g[k],
                    p1.g[k],
                    p2.g[k]
                ));
            }
        }
    }
    report.instances = trials;
    report.push(
        format!("profile additivity on {trials} random disjoint pairs"),
        failures.is_empty(),
        if failures.is_empty() { String::new() } else { failures.join("; ") },
    );
    Ok(report)
}

/// Suite `adjoin-variable`: the predicted profile of `(I, x)` matches the
/// direct computation, and every power of the extension splits as
/// `I^[k] + x I^[k-1]` with matching Betti tables.
pub fn suite_adjoin_variable(trials: u64, seed: u64, field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("adjoin-variable", field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut profile_failures = Vec::new();
    let mut splitting_failures = Vec::new();
    let mut monotone_failures = Vec::new();
    for t in 0..trials {
        let ideal = random_ideal(&mut rng, 6, 6);
        let base = g_profile(&ideal, field)?;
        let extension = ideal.adjoin_variable()?;
        let predicted = predict_adjoin_variable(&base);
        let direct = g_profile(&extension, field)?;
        if direct != predicted {
            profile_failures.push(format!(
                "trial {t}: {ideal}: predicted {:?} direct {:?}",
                predicted.g, direct.g
            ));
        }
        if base.is_non_increasing() && !direct.is_non_increasing() {
            monotone_failures.push(format!(
                "trial {t}: {ideal}: base {:?} extension {:?}",
                base.g, direct.g
            ));
        }
        if let Err(e) = check_extension_splittings(&ideal, &extension, field) {
            splitting_failures.push(format!("trial {t}: {ideal}: {e}"));
        }
    }
    report.instances = trials;
    report.push(
        format!("profile recursion exact on {trials} random ideals"),
        profile_failures.is_empty(),
        if profile_failures.is_empty() { String::new() } else { profile_failures.join("; ") },
    );
    report.push(
        "adjoining a variable preserves non-increasing profiles",
        monotone_failures.is_empty(),
        if monotone_failures.is_empty() { String::new() } else { monotone_failures.join("; ") },
    );
    report.push(
        "every extension power is a Betti splitting",
        splitting_failures.is_empty(),
        if splitting_failures.is_empty() { String::new() } else { splitting_failures.join("; ") },
    );
    Ok(report)
}

/// Checks `J^[k] = I^[k] + x I^[k-1]` as a Betti splitting for every
/// `k = 2..=ν(J)`; the top power has an empty first part.
fn check_extension_splittings(
    ideal: &MonomialIdeal,
    extension: &MonomialIdeal,
    field: &FieldSpec,
) -> Result<()> {
    let n = extension.ambient();
    let x = n; // the adjoined variable is the last one
    let nu_ext = extension.monomial_grade()?;
    for k in 2..=nu_ext {
        let whole = extension.squarefree_power(k)?;
        let part1 = {
            let p = ideal.squarefree_power(k)?;
            if p.is_zero() {
                p
            } else {
                MonomialIdeal::with_ambient(p.generators().to_vec(), n)?
            }
        };
        let part2 = {
            let p = ideal.squarefree_power(k - 1)?;
            MonomialIdeal::with_ambient(p.generators().to_vec(), n)?.multiply_variable(x)?
        };
        let split = verify_betti_splitting(&whole, &part1, &part2, field)?;
        if !split.holds {
            return Err(Error::Invalid(format!(
                "k={k}: discrepancies {:?}",
                split.discrepancies
            )));
        }
    }
    Ok(())
}

/// Suite `adjoin-edge`: for every cochordal graph without isolated
/// vertices on at most `max_n` vertices, the profile of the disjoint union
/// with one extra edge matches the min-recursion prediction.
pub fn suite_adjoin_edge(max_n: usize, field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("adjoin-edge", field);
    let mut total = 0u64;
    let mut failures = Vec::new();
    let edge = Graph::new(2, &[(1, 2)])?;
    for n in 2..=max_n {
        let graphs: Vec<Graph> = graphs_without_isolated(n)
            .into_iter()
            .filter(|g| g.complement().is_chordal())
            .collect();
        total += graphs.len() as u64;
        let field = *field;
        let results: Vec<Option<String>> = graphs
            .par_iter()
            .map(|h| {
                let profile = g_profile(&h.edge_ideal().expect("no isolated"), &field)
                    .expect("within caps");
                let predicted = predict_adjoin_edge(h, &profile).expect("cochordal");
                let union = h.disjoint_union(&edge).expect("small");
                let direct = g_profile(&union.edge_ideal().expect("no isolated"), &field)
                    .expect("within caps");
                if direct == predicted {
                    None
                } else {
                    Some(format!("{h}: predicted {:?} direct {:?}", predicted.g, direct.g))
                }
            })
            .collect();
        failures.extend(results.into_iter().flatten());
    }
    report.instances = total;
    report.push(
        format!("edge-adjunction recursion exact on {total} cochordal graphs"),
        failures.is_empty(),
        if failures.is_empty() { String::new() } else { format!("first: {}", failures[0]) },
    );
    Ok(report)
}

/// Suite `staircase`: the graph constructions with profile
/// `(s, s-1, ..., 1, 0, ..., 0)` verify exactly, including the vanishing
/// pattern `g(k) = 0` iff `k > s`.
pub fn suite_staircase(field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("staircase", field);
    let cases = [(1usize, 2usize), (1, 3), (2, 3), (2, 4), (3, 4)];
    for (s, m) in cases {
        let c = staircase_graph(s, m)?;
        let direct = g_profile(&c.ideal, field)?;
        let ok = direct == c.predicted
            && direct.nu == m
            && (1..=m).all(|k| (direct.g[k - 1] == 0) == (k > s));
        report.push(
            format!("staircase (s={s}, m={m})"),
            ok,
            format!("profile {:?}", direct.g),
        );
    }
    report.instances = cases.len() as u64;
    Ok(report)
}

/// Suite `profile-targets`: prescribed profiles realized exactly by
/// disjoint products of step and all-ones factors.
pub fn suite_profile_targets(field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("profile-targets", field);
    let targets: Vec<(Vec<usize>, usize)> =
        vec![(vec![0, 0], 4), (vec![1, 0], 3), (vec![1, 1], 8), (vec![2, 1], 11)];
    for (values, max_vars) in &targets {
        let target = ProfileTarget::new(values.clone())?;
        let c = prescribed_profile_ideal(&target)?;
        let direct = g_profile(&c.ideal, field)?;
        report.push(
            format!("target {values:?} ({} variables)", c.ideal.ambient()),
            direct == c.predicted && &direct.g == values && c.ideal.ambient() <= *max_vars,
            format!("profile {:?} via {}", direct.g, c.provenance),
        );
    }
    // the building blocks on their smallest instances
    for (s, m) in [(1usize, 2usize), (2, 3), (1, 3)] {
        let c = step_ideal(s, m)?;
        let direct = g_profile(&c.ideal, field)?;
        report.push(
            format!("step profile (s={s}, m={m})"),
            direct == c.predicted,
            format!("profile {:?}", direct.g),
        );
    }
    for m in [1usize, 2] {
        let c = ones_ideal(m)?;
        let direct = g_profile(&c.ideal, field)?;
        report.push(
            format!("all-ones profile (m={m})"),
            direct == c.predicted,
            format!("profile {:?}", direct.g),
        );
    }
    report.instances = 9;
    Ok(report)
}

/// Suite `oracle`: the subset-accumulation tables equal the Taylor-complex
/// tables entry by entry, in characteristic 0 and 2.
pub fn suite_oracle(trials: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("oracle", &FieldSpec::Char0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ideals: Vec<MonomialIdeal> = (0..trials).map(|_| random_ideal(&mut rng, 8, 8)).collect();
    let failures: Vec<String> = ideals
        .par_iter()
        .enumerate()
        .filter_map(|(t, ideal)| {
            for field in [FieldSpec::Char0, FieldSpec::Prime(2)] {
                let h = betti_hochster(ideal, &field).expect("within caps");
                let y = betti_taylor(ideal, &field).expect("within caps");
                if h != y {
                    return Some(format!("trial {t} ({ideal}), char {field}"));
                }
            }
            None
        })
        .collect();
    report.instances = trials;
    report.push(
        format!("two routes agree on {trials} random ideals in characteristic 0 and 2"),
        failures.is_empty(),
        if failures.is_empty() { String::new() } else { failures.join("; ") },
    );
    Ok(report)
}

/// Suite `properties`: structural invariants over the full sweep of small
/// graphs: the Euler identity, the linear-resolution/cochordality
/// biconditional, the matching-complex round trip, generator counts,
/// special matchings and the vanishing certificate.
pub fn suite_properties(max_n: usize, field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("properties", field);
    let mut euler_failures = Vec::new();
    let mut froeberg_failures = Vec::new();
    let mut roundtrip_failures = Vec::new();
    let mut generator_failures = Vec::new();
    let mut grade_failures = Vec::new();
    let mut special_failures = Vec::new();
    let mut witness_failures = Vec::new();
    let mut chordal_invariance_failures = Vec::new();
    let mut total = 0u64;
    let mut order_agreement = 0u64;
    let mut order_total = 0u64;

    for n in 2..=max_n {
        for g in graphs_without_isolated(n) {
            total += 1;
            let ideal = g.edge_ideal()?;
            let gc = g.complement();
            let nu = g.matching_number();

            // grade equals matching number
            if ideal.monomial_grade()? != nu {
                grade_failures.push(format!("{g}"));
            }

            // linear resolution iff complement chordal
            let linear = linear_resolution_check(&ideal, field)?.is_linear();
            if linear != gc.is_chordal() {
                froeberg_failures.push(format!("{g}: linear={linear}"));
            }

            // chordal clique complexes are acyclic except in degree 0,
            // independently of the characteristic
            if gc.is_chordal() {
                let clique = gc.clique_complex()?;
                for f in [FieldSpec::Char0, FieldSpec::Prime(2)] {
                    let dims = reduced_homology(&clique, &f)?;
                    if dims.iter().any(|(d, v)| d != 0 && v > 0) {
                        chordal_invariance_failures.push(format!("{gc} char {f}"));
                    }
                }
            }

            for k in 1..=nu {
                let power = ideal.squarefree_power(k)?;
                // generators of the power are exactly the distinct
                // matching vertex sets
                let mut supports: Vec<u64> =
                    g.matchings(k).iter().map(|m| m.vertex_mask()).collect();
                supports.sort_unstable();
                supports.dedup();
                if power.gen_masks() != supports {
                    generator_failures.push(format!("{g} k={k}"));
                }
                // round trip through the matching complex
                let direct = g.squarefree_power_complex(k)?;
                let via_ideal = stanley_reisner(&power)?;
                if direct != via_ideal {
                    roundtrip_failures.push(format!("{g} k={k}"));
                }
                // Euler identity on the complex and all vertex-deleted
                // induced subcomplexes
                for cx in std::iter::once(direct.clone()).chain((1..=g.n()).map(|j| {
                    let w: Vec<usize> = (1..=g.n()).filter(|&v| v != j).collect();
                    direct.induced(&w).expect("valid subset")
                })) {
                    let dims = reduced_homology(&cx, field)?;
                    if reduced_euler_characteristic(&cx) != euler_from_dims(&dims) {
                        euler_failures.push(format!("{g} k={k}"));
                    }
                }
            }

            // special matchings for every cut vertex of the complement and
            // every choice of distinguished component, validated against
            // the definition and the enumeration-based filter
            if gc.is_chordal() && gc.is_connected() {
                for cut in gc.cut_vertices()? {
                    let default_split = complement_cut_split(&g, cut, None)?;
                    let mut choices: Vec<u64> = vec![default_split.c1, default_split.c2];
                    choices.dedup();
                    for c1 in choices {
                        let member = (c1.trailing_zeros() + 1) as usize;
                        let split = complement_cut_split(&g, cut, Some(member))?;
                        for k in 2..=nu {
                            let m = special_matching(&g, &split, k)?;
                            let ok = is_special_matching(&m, &split)
                                && is_dominating_matching(&g, &m)?
                                && g.matchings(k)
                                    .iter()
                                    .any(|cand| admits_special_order(cand, &split)
                                        && cand.vertex_mask() == m.vertex_mask());
                            if !ok {
                                special_failures.push(format!("{g} cut={cut} k={k}"));
                            }
                        }
                    }
                }
            }
            // initial degrees of edge-ideal powers are forced
            let profile_d = g_profile(&ideal, field)?.d;
            if profile_d != (1..=nu).map(|k| 2 * k).collect::<Vec<_>>() {
                grade_failures.push(format!("{g}: initial degrees {profile_d:?}"));
            }

            if gc.is_chordal() {
                let profile = g_profile(&ideal, field)?;
                for k in 1..=nu {
                    let power = ideal.squarefree_power(k)?;
                    let order = linear_quotients_order(&power)?
                        .expect("cochordal powers have linear quotients");
                    let witness = g_zero_witness(&g, k, &order)?;
                    if witness.is_some() != (profile.g[k - 1] == 0) {
                        witness_failures.push(format!(
                            "{g} k={k}: witness={} g={}",
                            witness.is_some(),
                            profile.g[k - 1]
                        ));
                    }
                    // agreement across an alternative admissible order is
                    // recorded, not asserted
                    let reversed_ok = {
                        let mut rev = order.clone();
                        rev.reverse();
                        if is_linear_quotients_order(&power, &rev)? {
                            order_total += 1;
                            let w2 = g_zero_witness(&g, k, &rev)?;
                            if w2.is_some() == witness.is_some() {
                                order_agreement += 1;
                            }
                            true
                        } else {
                            false
                        }
                    };
                    let _ = reversed_ok;
                }
            }
        }
    }

    report.instances = total;
    report.push(
        format!("grade equals matching number on {total} graphs"),
        grade_failures.is_empty(),
        first_or_empty(&grade_failures),
    );
    report.push(
        "linear resolution iff cochordal",
        froeberg_failures.is_empty(),
        first_or_empty(&froeberg_failures),
    );
    report.push(
        "chordal clique complexes are acyclic outside degree 0 in characteristic 0 and 2",
        chordal_invariance_failures.is_empty(),
        first_or_empty(&chordal_invariance_failures),
    );
    report.push(
        "power generators are the distinct matching vertex sets",
        generator_failures.is_empty(),
        first_or_empty(&generator_failures),
    );
    report.push(
        "matching complex round trip",
        roundtrip_failures.is_empty(),
        first_or_empty(&roundtrip_failures),
    );
    report.push(
        "Euler identity on every homology call",
        euler_failures.is_empty(),
        first_or_empty(&euler_failures),
    );
    report.push(
        "constructed special matchings are special and dominating",
        special_failures.is_empty(),
        first_or_empty(&special_failures),
    );
    report.push(
        "vanishing certificate exists iff g(k) = 0 on cochordal graphs",
        witness_failures.is_empty(),
        first_or_empty(&witness_failures),
    );
    report.note(
        "certificate agreement across alternative admissible orders (recorded)",
        format!("{order_agreement}/{order_total} reversed orders agree"),
    );
    Ok(report)
}

fn first_or_empty(failures: &[String]) -> String {
    if failures.is_empty() {
        String::new()
    } else {
        format!("{} failures, first: {}", failures.len(), failures[0])
    }
}

/// The conjecture sweep: profiles of all (or sampled) graphs without
/// isolated vertices, flagging any increase.
pub fn conjecture_sweep(
    max_n: usize,
    sample: Option<(u64, u64)>,
    field: &FieldSpec,
) -> Result<SweepReport> {
    check_sweep_cap(max_n)?;
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    match sample {
        None => {
            // stream over edge-subset masks: memory stays proportional to
            // the report, not to the number of instances
            for n in 1..=max_n {
                let mut pairs = Vec::new();
                for a in 1..=n {
                    for b in a + 1..=n {
                        pairs.push((a, b));
                    }
                }
                let field = *field;
                let pairs = &pairs;
                let (count, mut flagged) = (0u64..(1u64 << pairs.len()))
                    .into_par_iter()
                    .fold(
                        || (0u64, Vec::new()),
                        |(mut count, mut flagged), mask| {
                            let edges: Vec<(usize, usize)> = pairs
                                .iter()
                                .enumerate()
                                .filter(|(i, _)| mask & (1 << i) != 0)
                                .map(|(_, &e)| e)
                                .collect();
                            let g = Graph::new(n, &edges).expect("enumerated edges are valid");
                            if g.isolated_vertices().is_empty() {
                                count += 1;
                                if let Some(record) = flag_increase(&g, &field) {
                                    flagged.push(record);
                                }
                            }
                            (count, flagged)
                        },
                    )
                    .reduce(
                        || (0u64, Vec::new()),
                        |(c1, mut f1), (c2, mut f2)| {
                            f1.append(&mut f2);
                            (c1 + c2, f1)
                        },
                    );
                instances += count;
                counterexamples.append(&mut flagged);
            }
        }
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pairs = Vec::new();
            for a in 1..=max_n {
                for b in a + 1..=max_n {
                    pairs.push((a, b));
                }
            }
            let mut drawn = Vec::new();
            while (drawn.len() as u64) < count {
                let mask: u64 = rng.gen_range(0..(1u64 << pairs.len()));
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(max_n, &edges)?;
                if g.isolated_vertices().is_empty() {
                    drawn.push(g);
                }
            }
            instances = drawn.len() as u64;
            let field = *field;
            counterexamples = drawn
                .par_iter()
                .filter_map(|g| flag_increase(g, &field))
                .collect();
        }
    }
    // canonical output order regardless of scheduling
    counterexamples.sort_by(|a, b| (a.graph.n, &a.graph.edges).cmp(&(b.graph.n, &b.graph.edges)));
    let class = match sample {
        None => format!("all graphs without isolated vertices, n <= {max_n}"),
        Some((count, seed)) => {
            format!("{count} seeded random graphs on {max_n} vertices (seed {seed})")
        }
    };
    Ok(SweepReport {
        schema: SCHEMA_VERSION.into(),
        class,
        field: field.to_string(),
        instances,
        counterexamples,
    })
}

fn flag_increase(g: &Graph, field: &FieldSpec) -> Option<CounterexampleRecord> {
    let ideal = g.edge_ideal().expect("no isolated vertices");
    let profile = g_profile(&ideal, field).expect("within caps");
    if profile.is_non_increasing() {
        None
    } else {
        Some(CounterexampleRecord {
            graph: GraphJson::from_graph(g),
            profile: ProfileJson::from_profile(&profile),
        })
    }
}

/// Suite `conjecture`: the sweep plus the gate that no counterexample
/// appears at desk scale.
pub fn suite_conjecture(max_n: usize, field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("conjecture", field);
    let sweep = conjecture_sweep(max_n, None, field)?;
    report.instances = sweep.instances;
    report.push(
        format!(
            "profiles non-increasing on all {} graphs with n <= {max_n}",
            sweep.instances
        ),
        sweep.counterexamples.is_empty(),
        if sweep.counterexamples.is_empty() {
            String::new()
        } else {
            serde_json::to_string(&sweep.counterexamples).unwrap_or_default()
        },
    );
    Ok(report)
}

/// Suite `sanity-base`: the cut-vertex base family passes its own
/// postconditions and has the expected profile.
pub fn suite_base_family(field: &FieldSpec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("base-family", field);
    for t in 2..=3 {
        let g = base_cut_vertex_graph(t)?;
        let profile = g_profile(&g.edge_ideal()?, field)?;
        let mut expected = vec![0usize; t];
        expected[0] = 1;
        report.push(
            format!("base graph t={t} has profile (1, 0, ...)"),
            profile.g == expected && profile.nu == t,
            format!("{:?}", profile.g),
        );
    }
    report.instances = 2;
    Ok(report)
}

/// Options shared by the suite dispatcher.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub field: FieldSpec,
    pub max_vertices: Option<usize>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { field: FieldSpec::Char0, max_vertices: None, trials: None, seed: None }
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "example36",
    "thm32-sweep",
    "product-additivity",
    "adjoin-variable",
    "adjoin-edge",
    "staircase",
    "profile-targets",
    "oracle",
    "properties",
    "conjecture",
    "base-family",
];

/// Runs a named suite with its documented defaults.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    if let Some(n) = opts.max_vertices {
        check_sweep_cap(n)?;
    }
    let field = opts.field;
    match name {
        "example36" => suite_example36(&field),
        "thm32-sweep" => suite_cochordal_sweep(opts.max_vertices.unwrap_or(6), &field),
        "product-additivity" => {
            suite_product_additivity(opts.trials.unwrap_or(50), opts.seed.unwrap_or(7), &field)
        }
        "adjoin-variable" => {
            suite_adjoin_variable(opts.trials.unwrap_or(50), opts.seed.unwrap_or(7), &field)
        }
        "adjoin-edge" => suite_adjoin_edge(opts.max_vertices.unwrap_or(5), &field),
        "staircase" => suite_staircase(&field),
        "profile-targets" => suite_profile_targets(&field),
        "oracle" => suite_oracle(opts.trials.unwrap_or(100), opts.seed.unwrap_or(7)),
        "properties" => suite_properties(opts.max_vertices.unwrap_or(5), &field),
        "conjecture" => suite_conjecture(opts.max_vertices.unwrap_or(5), &field),
        "base-family" => suite_base_family(&field),
        other => Err(Error::Invalid(format!(
            "unknown suite '{other}'; available: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_ideals_are_ambient_minimal_and_nonzero() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let i = random_ideal(&mut rng, 6, 6);
            assert!(!i.is_zero());
            assert!(i.is_ambient_minimal());
        }
    }

    #[test]
    fn graph_enumeration_counts() {
        // on 3 vertices: triangle, three paths
        assert_eq!(graphs_without_isolated(3).len(), 4);
        // on 2 vertices only the single edge
        assert_eq!(graphs_without_isolated(2).len(), 1);
        assert_eq!(graphs_without_isolated(1).len(), 0);
    }

    #[test]
    fn sweep_reports_are_byte_identical() {
        let field = FieldSpec::Char0;
        let a = conjecture_sweep(4, None, &field).unwrap();
        let b = conjecture_sweep(4, None, &field).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let c = conjecture_sweep(5, Some((10, 42)), &field).unwrap();
        let d = conjecture_sweep(5, Some((10, 42)), &field).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            serde_json::to_string(&d).unwrap()
        );
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }

    /// Counterexample records must replay: recomputing the profile from the
    /// serialized graph gives back the serialized profile. No counterexample
    /// is expected at desk scale, so the record is built by hand.
    #[test]
    fn counterexample_records_replay() {
        let g = Graph::path(4).unwrap();
        let profile = g_profile(&g.edge_ideal().unwrap(), &FieldSpec::Char0).unwrap();
        let record = CounterexampleRecord {
            graph: GraphJson::from_graph(&g),
            profile: ProfileJson::from_profile(&profile),
        };
        let text = serde_json::to_string(&record).unwrap();
        let parsed: CounterexampleRecord = serde_json::from_str(&text).unwrap();
        let replayed = g_profile(
            &parsed.graph.to_graph().unwrap().edge_ideal().unwrap(),
            &FieldSpec::Char0,
        )
        .unwrap();
        assert_eq!(ProfileJson::from_profile(&replayed).g, parsed.profile.g);
    }
}
