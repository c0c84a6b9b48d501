//! Finite simple graphs on vertices `1..=n`: complements, chordality,
//! articulation points, matchings (plain, dominating and special), edge
//! ideals and the complexes whose minimal non-faces are the vertex sets of
//! `k`-matchings.

use std::fmt;

use crate::complex::{complex_avoiding, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomial::{indices_from_mask, MonomialIdeal, SquarefreeMonomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list; loops are rejected, duplicates
    /// collapse, endpoints are normalized to `u < v`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::CapExceeded { what: "vertices", cap: 64, actual: n });
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::Invalid(format!(
                    "edge ({a},{b}) outside vertex range 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![0u64; n];
        for &(a, b) in &norm {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Ok(Self { n, edges: norm, adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push((a, b));
            }
        }
        Self::new(n, &edges)
    }

    /// Complete bipartite graph on parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 1..=a {
            for v in a + 1..=a + b {
                edges.push((u, v));
            }
        }
        Self::new(a + b, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v, v + 1)).collect();
        Self::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v, v + 1)).collect();
        edges.push((n, 1));
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.n && b <= self.n && self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    /// Open neighborhood as a bitmask.
    pub(crate) fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        indices_from_mask(self.adj[v - 1])
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    /// Disjoint union; the other graph's vertices are relabeled to follow
    /// this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut edges = self.edges.clone();
        for &(a, b) in &other.edges {
            edges.push((a + self.n, b + self.n));
        }
        Graph::new(self.n + other.n, &edges)
    }

    /// The edge ideal: one degree-2 generator per edge. Isolated vertices
    /// would leave the ambient ring non-minimal, so they are rejected.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        if let Some(&v) = self.isolated_vertices().first() {
            return Err(Error::IsolatedVertex(v));
        }
        let gens: Vec<SquarefreeMonomial> = self
            .edges
            .iter()
            .map(|&(a, b)| SquarefreeMonomial::from_indices(&[a, b]).expect("valid edge"))
            .collect();
        MonomialIdeal::with_ambient(gens, self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if !self.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement edges are valid")
    }

    /// Maximum cardinality search followed by verification of the resulting
    /// candidate elimination ordering. Returns a perfect elimination
    /// ordering when the graph is chordal.
    pub fn chordal_witness(&self) -> Option<Vec<usize>> {
        let n = self.n;
        if n == 0 {
            return Some(Vec::new());
        }
        // MCS: repeatedly pick the unvisited vertex with the most visited
        // neighbors, lowest index breaking ties
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let mut best: Option<usize> = None;
            for v in 0..n {
                if !visited[v] && best.is_none_or(|b| weight[v] > weight[b]) {
                    best = Some(v);
                }
            }
            let v = best.expect("unvisited vertex exists");
            visited[v] = true;
            order.push(v + 1);
            for u in self.neighbors(v + 1) {
                if !visited[u - 1] {
                    weight[u - 1] += 1;
                }
            }
        }
        // the reverse of the MCS order is a perfect elimination ordering
        // exactly when the graph is chordal
        order.reverse();
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<usize> = self
                .neighbors(v)
                .into_iter()
                .filter(|&u| pos[u] > i)
                .collect();
            let Some(&w) = later.iter().min_by_key(|&&u| pos[u]) else {
                continue;
            };
            for &u in &later {
                if u != w && !self.has_edge(w, u) {
                    return None;
                }
            }
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.chordal_witness().is_some()
    }

    /// Connected components as vertex masks, ordered by lowest vertex.
    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen & (1 << v) != 0 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                let fresh = self.adj[u] & !comp;
                comp |= fresh;
                let mut m = fresh;
                while m != 0 {
                    let b = m.trailing_zeros() as usize;
                    stack.push(b);
                    m &= m - 1;
                }
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    /// Connected components as sorted vertex lists.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .iter()
            .map(|&m| indices_from_mask(m))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// Articulation points by depth-first low-link. Requires connectivity.
    pub fn cut_vertices(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = vec![false; n];
        let mut timer = 0usize;

        struct Dfs<'a> {
            g: &'a Graph,
            disc: &'a mut Vec<usize>,
            low: &'a mut Vec<usize>,
            cut: &'a mut Vec<bool>,
            timer: &'a mut usize,
        }
        fn go(d: &mut Dfs, u: usize, parent: Option<usize>) {
            d.disc[u] = *d.timer;
            d.low[u] = *d.timer;
            *d.timer += 1;
            let mut children = 0usize;
            for w in indices_from_mask(d.g.adj[u]) {
                let v = w - 1;
                if d.disc[v] == usize::MAX {
                    children += 1;
                    go(d, v, Some(u));
                    d.low[u] = d.low[u].min(d.low[v]);
                    if parent.is_some() && d.low[v] >= d.disc[u] {
                        d.cut[u] = true;
                    }
                } else if Some(v) != parent {
                    d.low[u] = d.low[u].min(d.disc[v]);
                }
            }
            if parent.is_none() && children > 1 {
                d.cut[u] = true;
            }
        }
        if n > 0 {
            let mut d = Dfs {
                g: self,
                disc: &mut disc,
                low: &mut low,
                cut: &mut cut,
                timer: &mut timer,
            };
            go(&mut d, 0, None);
        }
        Ok((1..=n).filter(|&v| cut[v - 1]).collect())
    }

    /// Exact matching number by branch-and-bound: branch on the lowest
    /// uncovered vertex, either leaving it unmatched or matching it to each
    /// uncovered neighbor.
    pub fn matching_number(&self) -> usize {
        fn bnb(g: &Graph, covered: u64, count: usize, best: &mut usize) {
            if count > *best {
                *best = count;
            }
            let free = !covered & low_mask(g.n);
            if free == 0 {
                return;
            }
            // upper bound: half the free vertices
            if count + (free.count_ones() as usize) / 2 <= *best {
                return;
            }
            let v = free.trailing_zeros() as usize;
            let partners = g.adj[v] & free;
            // branch: match v to each available partner
            let mut m = partners;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                bnb(g, covered | (1 << v) | (1 << u), count + 1, best);
                m &= m - 1;
            }
            // branch: v stays unmatched
            bnb(g, covered | (1 << v), count, best);
        }
        let mut best = 0;
        bnb(self, 0, 0, &mut best);
        best
    }

    /// First `k`-matching in lexicographic edge-list order, if any.
    pub fn first_matching(&self, k: usize) -> Option<Matching> {
        let mut found = None;
        self.for_each_matching(k, &mut |m| {
            found = Some(m.clone());
            false
        });
        found
    }

    /// All `k`-matchings, each exactly once, in lexicographic order of their
    /// sorted edge lists.
    pub fn matchings(&self, k: usize) -> Vec<Matching> {
        let mut out = Vec::new();
        self.for_each_matching(k, &mut |m| {
            out.push(m.clone());
            true
        });
        out
    }

    fn for_each_matching(&self, k: usize, visit: &mut impl FnMut(&Matching) -> bool) {
        fn rec(
            edges: &[(usize, usize)],
            start: usize,
            covered: u64,
            acc: &mut Vec<(usize, usize)>,
            left: usize,
            visit: &mut impl FnMut(&Matching) -> bool,
        ) -> bool {
            if left == 0 {
                return visit(&Matching { edges: acc.clone() });
            }
            for i in start..edges.len() {
                if edges.len() - i < left {
                    break;
                }
                let (a, b) = edges[i];
                let m = (1u64 << (a - 1)) | (1 << (b - 1));
                if m & covered == 0 {
                    acc.push((a, b));
                    let keep = rec(edges, i + 1, covered | m, acc, left - 1, visit);
                    acc.pop();
                    if !keep {
                        return false;
                    }
                }
            }
            true
        }
        if k == 0 {
            visit(&Matching { edges: Vec::new() });
            return;
        }
        let mut acc = Vec::with_capacity(k);
        rec(&self.edges, 0, 0, &mut acc, k, visit);
    }

    /// The clique complex: faces are exactly the cliques, i.e. the subsets
    /// containing no non-edge pair.
    pub fn clique_complex(&self) -> Result<SimplicialComplex> {
        let mut non_edges = Vec::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if !self.has_edge(a, b) {
                    non_edges.push((1u64 << (a - 1)) | (1 << (b - 1)));
                }
            }
        }
        complex_avoiding(self.n, &non_edges)
    }

    /// The complex on the vertices of the graph whose faces are the sets
    /// containing the vertex set of no `k`-matching; its Stanley-Reisner
    /// ideal is the `k`th squarefree power of the edge ideal.
    pub fn squarefree_power_complex(&self, k: usize) -> Result<SimplicialComplex> {
        if k == 0 {
            return Err(Error::ZeroPowerIndex);
        }
        let nu = self.matching_number();
        if k > nu {
            return Err(Error::PowerOutOfRange { k, nu });
        }
        let mut forbidden: Vec<u64> = self
            .matchings(k)
            .iter()
            .map(|m| m.vertex_mask())
            .collect();
        forbidden.sort_unstable();
        forbidden.dedup();
        complex_avoiding(self.n, &forbidden)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A matching as an ordered list of vertex-disjoint edges. The order only
/// matters for the special-matching predicate, which distinguishes the
/// first and second edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that the edges belong to the graph and are pairwise
    /// vertex-disjoint.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut covered = 0u64;
        for &(a, b) in edges {
            if !g.has_edge(a, b) {
                return Err(Error::NotAMatching(format!("({a},{b}) is not an edge")));
            }
            let m = (1u64 << (a - 1)) | (1 << (b - 1));
            if covered & m != 0 {
                return Err(Error::NotAMatching(format!("({a},{b}) shares a vertex")));
            }
            covered |= m;
        }
        let edges = edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.edges
            .iter()
            .fold(0, |acc, &(a, b)| acc | (1 << (a - 1)) | (1 << (b - 1)))
    }

    pub fn vertices(&self) -> Vec<usize> {
        indices_from_mask(self.vertex_mask())
    }

    /// Set equality, ignoring edge order.
    pub fn same_edge_set(&self, other: &Matching) -> bool {
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// Whether every vertex outside the matching is adjacent to a matched one.
pub fn is_dominating_matching(g: &Graph, m: &Matching) -> Result<bool> {
    let validated = Matching::new(g, m.edges())?;
    let covered = validated.vertex_mask();
    for v in 1..=g.n() {
        let bit = 1u64 << (v - 1);
        if covered & bit == 0 && g.neighbors_mask(v) & covered == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The situation around a cut vertex of the complement graph: the chosen
/// component `c1` of `complement − cut` and the union `c2` of the others.
/// In the graph itself every `c1`-`c2` pair is an edge.
#[derive(Clone, Debug)]
pub struct CutVertexSplit {
    pub cut: usize,
    pub c1: u64,
    pub c2: u64,
}

/// Validates the setup for special matchings: no isolated vertices, the
/// complement chordal and connected with `cut` among its cut vertices.
/// `c1_member` selects the component containing that vertex; by default the
/// component with the lowest vertex index is chosen.
pub fn complement_cut_split(
    g: &Graph,
    cut: usize,
    c1_member: Option<usize>,
) -> Result<CutVertexSplit> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let gc = g.complement();
    if !gc.is_chordal() {
        return Err(Error::NotCochordal);
    }
    if !gc.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let cuts = gc.cut_vertices()?;
    if !cuts.contains(&cut) {
        return Err(Error::Invalid(format!(
            "vertex {cut} is not a cut vertex of the complement"
        )));
    }
    // components of the complement with the cut vertex removed
    let mut edges = Vec::new();
    for &(a, b) in gc.edges() {
        if a != cut && b != cut {
            edges.push((a, b));
        }
    }
    let removed = Graph::new(gc.n(), &edges)?;
    let comps: Vec<u64> = removed
        .component_masks()
        .into_iter()
        .filter(|&m| m != 1u64 << (cut - 1))
        .collect();
    debug_assert!(comps.len() >= 2, "cut vertex must split the complement");
    let c1 = match c1_member {
        None => comps[0],
        Some(v) => *comps
            .iter()
            .find(|&&m| m & (1 << (v - 1)) != 0)
            .ok_or_else(|| Error::Invalid(format!("vertex {v} not in any component")))?,
    };
    let c2 = comps.iter().fold(0u64, |a, &m| a | m) & !c1;
    Ok(CutVertexSplit { cut, c1, c2 })
}

/// The special-matching predicate on an ordered matching: the first edge
/// uses the cut vertex of the complement, the second bridges the two sides
/// of the cut.
pub fn is_special_matching(m: &Matching, split: &CutVertexSplit) -> bool {
    if m.len() < 2 {
        return false;
    }
    let (a, b) = m.edges()[0];
    let cut_bit = 1u64 << (split.cut - 1);
    let first = (1u64 << (a - 1)) | (1 << (b - 1));
    if first & cut_bit == 0 {
        return false;
    }
    let (c, d) = m.edges()[1];
    let cm = 1u64 << (c - 1);
    let dm = 1u64 << (d - 1);
    (cm & split.c1 != 0 && dm & split.c2 != 0) || (cm & split.c2 != 0 && dm & split.c1 != 0)
}

/// Whether some ordering of the matching's edges satisfies the special
/// predicate; the brute-force oracle for [`special_matching`].
pub fn admits_special_order(m: &Matching, split: &CutVertexSplit) -> bool {
    let cut_bit = 1u64 << (split.cut - 1);
    let bridges = |&(c, d): &(usize, usize)| {
        let cm = 1u64 << (c - 1);
        let dm = 1u64 << (d - 1);
        (cm & split.c1 != 0 && dm & split.c2 != 0) || (cm & split.c2 != 0 && dm & split.c1 != 0)
    };
    m.edges().iter().enumerate().any(|(i, &(a, b))| {
        let first = (1u64 << (a - 1)) | (1 << (b - 1));
        first & cut_bit != 0
            && m.edges()
                .iter()
                .enumerate()
                .any(|(j, e)| j != i && bridges(e))
    })
}

/// Constructs a special `k`-matching by local swaps starting from the
/// lexicographically first `k`-matching: first reroute an edge through the
/// cut vertex, then repair the second position so it bridges the cut,
/// either by a cross-swap of two one-sided edges or by stealing a fresh
/// vertex from the deficient side.
pub fn special_matching(g: &Graph, split: &CutVertexSplit, k: usize) -> Result<Matching> {
    let nu = g.matching_number();
    if k < 2 || k > nu {
        return Err(Error::BadParameters(format!(
            "special matchings need 2 <= k <= {nu}, got {k}"
        )));
    }
    let v = split.cut;
    let mut edges: Vec<(usize, usize)> = g
        .first_matching(k)
        .expect("k within the matching number")
        .edges()
        .to_vec();

    // step 1: make the first edge contain the cut vertex
    if let Some(pos) = edges.iter().position(|&(a, b)| a == v || b == v) {
        edges.swap(0, pos);
    } else {
        let covered: u64 = edges
            .iter()
            .fold(0, |acc, &(a, b)| acc | (1u64 << (a - 1)) | (1 << (b - 1)));
        let nbrs = g.neighbors_mask(v);
        if nbrs & covered != 0 {
            // reroute: j is matched, replace its edge by {v, j}
            let j = (nbrs & covered).trailing_zeros() as usize + 1;
            let pos = edges
                .iter()
                .position(|&(a, b)| a == j || b == j)
                .expect("j is covered");
            edges.remove(pos);
            edges.insert(0, (v.min(j), v.max(j)));
        } else {
            // no matched neighbor: drop the first edge, add {v, j} for the
            // lowest neighbor j, which is fresh
            let j = nbrs.trailing_zeros() as usize + 1;
            edges.remove(0);
            edges.insert(0, (v.min(j), v.max(j)));
        }
    }
    debug_assert!(edges[0].0 == v || edges[0].1 == v);

    // step 2: make the second edge bridge c1 and c2
    let side = |x: usize| -> u64 { 1u64 << (x - 1) };
    let bridges = |(a, b): (usize, usize)| {
        (side(a) & split.c1 != 0 && side(b) & split.c2 != 0)
            || (side(a) & split.c2 != 0 && side(b) & split.c1 != 0)
    };
    if let Some(pos) = edges[1..].iter().position(|&e| bridges(e)) {
        edges.swap(1, pos + 1);
    } else {
        let covered: u64 = edges
            .iter()
            .fold(0, |acc, &(a, b)| acc | side(a) | side(b));
        let in_c1: Vec<usize> = (1..edges.len())
            .filter(|&i| side(edges[i].0) & split.c1 != 0 && side(edges[i].1) & split.c1 != 0)
            .collect();
        let in_c2: Vec<usize> = (1..edges.len())
            .filter(|&i| side(edges[i].0) & split.c2 != 0 && side(edges[i].1) & split.c2 != 0)
            .collect();
        if let (Some(&q1), Some(&q2)) = (in_c1.first(), in_c2.first()) {
            // cross-swap: both cross pairs are edges of the graph because
            // the complement has no edges between the components
            let (a1, a2) = edges[q1];
            let (b1, b2) = edges[q2];
            debug_assert!(g.has_edge(a1, b2) && g.has_edge(a2, b1));
            edges[q1] = (a1.min(b2), a1.max(b2));
            edges[q2] = (a2.min(b1), a2.max(b1));
            edges.swap(1, q1);
        } else {
            // every edge besides the first lies in one component; steal the
            // lowest fresh vertex from the other side
            let (pos, other_side) = if let Some(&q) = in_c1.first() {
                (q, split.c2)
            } else {
                let q = *in_c2.first().expect("k >= 2 leaves a one-sided edge");
                (q, split.c1)
            };
            let fresh = other_side & !covered;
            debug_assert!(fresh != 0, "deficient side must have a fresh vertex");
            let w = fresh.trailing_zeros() as usize + 1;
            let keep = edges[pos].0;
            debug_assert!(g.has_edge(keep, w));
            edges[pos] = (keep.min(w), keep.max(w));
            edges.swap(1, pos);
        }
    }

    let result = Matching::new(g, &edges)?;
    debug_assert!(is_special_matching(&result, split));
    Ok(result)
}

fn low_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal_from_supports;

    #[test]
    fn edge_ideal_of_single_edge() {
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(g.edge_ideal().unwrap(), ideal_from_supports(&[&[1, 2]]));
    }

    #[test]
    fn edge_ideal_rejects_isolated_vertex() {
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        assert!(matches!(g.edge_ideal(), Err(Error::IsolatedVertex(3))));
    }

    #[test]
    fn complete_bipartite_edge_count() {
        let g = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(g.edges().len(), 4);
        assert_eq!(g.edge_ideal().unwrap().generators().len(), 4);
    }

    #[test]
    fn complement_is_involutive_and_counts_add_up() {
        let g = Graph::new(5, &[(1, 2), (2, 3), (4, 5), (1, 5)]).unwrap();
        let gc = g.complement();
        assert_eq!(gc.complement(), g);
        assert_eq!(g.edges().len() + gc.edges().len(), 5 * 4 / 2);
    }

    #[test]
    fn path_four_is_self_complementary() {
        let p4 = Graph::path(4).unwrap();
        let gc = p4.complement();
        // the complement is again a path, relabeled: 3-1-4-2
        assert_eq!(gc.edges(), &[(1, 3), (1, 4), (2, 4)]);
        assert_eq!(gc.matching_number(), 2);
        assert!(gc.is_chordal());
    }

    #[test]
    fn complement_of_complete_graph_is_empty() {
        let g = Graph::complete(4).unwrap();
        assert!(g.complement().edges().is_empty());
    }

    #[test]
    fn four_cycle_is_not_chordal_but_trees_are() {
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(!Graph::cycle(5).unwrap().is_chordal());
        assert!(Graph::path(6).unwrap().is_chordal());
        let star = Graph::new(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert!(star.is_chordal());
        assert!(Graph::cycle(3).unwrap().is_chordal());
    }

    #[test]
    fn chordal_witness_is_a_perfect_elimination_ordering() {
        let g = Graph::new(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let peo = g.chordal_witness().unwrap();
        let mut pos = vec![0; g.n() + 1];
        for (i, &v) in peo.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in peo.iter().enumerate() {
            let later: Vec<usize> = g.neighbors(v).into_iter().filter(|&u| pos[u] > i).collect();
            for a in 0..later.len() {
                for b in a + 1..later.len() {
                    assert!(g.has_edge(later[a], later[b]));
                }
            }
        }
    }

    #[test]
    fn cut_vertices_examples() {
        let path = Graph::path(3).unwrap();
        assert_eq!(path.cut_vertices().unwrap(), vec![2]);
        let cycle = Graph::cycle(5).unwrap();
        assert!(cycle.cut_vertices().unwrap().is_empty());
        let split = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(split.cut_vertices(), Err(Error::DisconnectedGraph)));
    }

    #[test]
    fn matching_number_examples() {
        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().matching_number(), 3);
        let star = Graph::new(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(star.matching_number(), 1);
        assert_eq!(Graph::path(6).unwrap().matching_number(), 3);
    }

    /// Exhaustive cross-check of the matching enumeration: every edge
    /// subset of the right size with disjoint edges shows up exactly once.
    #[test]
    fn matchings_are_exhaustive_and_lexicographic() {
        let g = Graph::new(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (2, 5)]).unwrap();
        for k in 1..=2 {
            let listed = g.matchings(k);
            for w in listed.windows(2) {
                assert!(w[0].edges() < w[1].edges());
            }
            let mut expected = 0usize;
            let edges = g.edges();
            for sel in 0u32..(1 << edges.len()) {
                if sel.count_ones() as usize != k {
                    continue;
                }
                let mut covered = 0u64;
                let mut ok = true;
                for (i, &(a, b)) in edges.iter().enumerate() {
                    if sel & (1 << i) != 0 {
                        let m = (1u64 << (a - 1)) | (1 << (b - 1));
                        if covered & m != 0 {
                            ok = false;
                            break;
                        }
                        covered |= m;
                    }
                }
                if ok {
                    expected += 1;
                }
            }
            assert_eq!(listed.len(), expected);
        }
    }

    #[test]
    fn power_complex_of_single_edge() {
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        let cx = g.squarefree_power_complex(1).unwrap();
        assert_eq!(cx.facets(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn power_complex_at_one_is_the_complement_clique_complex() {
        let g = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)]).unwrap();
        assert_eq!(
            g.squarefree_power_complex(1).unwrap(),
            g.complement().clique_complex().unwrap()
        );
    }

    #[test]
    fn top_power_complex_of_demo_graph_is_the_boundary_of_the_simplex() {
        // a single 3-matching support covers all six vertices, so the
        // faces are exactly the proper subsets
        let g = crate::families::example36();
        let cx = g.squarefree_power_complex(3).unwrap();
        let expected: Vec<Vec<usize>> = (1..=6)
            .map(|skip| (1..=6).filter(|&v| v != skip).collect())
            .rev()
            .collect();
        assert_eq!(cx.facets(), expected);
    }

    #[test]
    fn power_complex_rejects_out_of_range() {
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        assert!(g.squarefree_power_complex(0).is_err());
        assert!(g.squarefree_power_complex(2).is_err());
    }

    #[test]
    fn dominating_matching_examples() {
        let g = Graph::path(4).unwrap();
        let perfect = Matching::new(&g, &[(1, 2), (3, 4)]).unwrap();
        assert!(is_dominating_matching(&g, &perfect).unwrap());

        let p5 = Graph::path(5).unwrap();
        let m = Matching::new(&p5, &[(1, 2)]).unwrap();
        assert!(!is_dominating_matching(&p5, &m).unwrap());
    }

    #[test]
    fn matching_validation() {
        let g = Graph::path(4).unwrap();
        assert!(Matching::new(&g, &[(1, 2), (2, 3)]).is_err());
        assert!(Matching::new(&g, &[(1, 3)]).is_err());
    }
}
