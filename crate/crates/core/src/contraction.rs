//! Presenting graphs and single-element contraction of transversal matroids.
//!
//! For a presentation `A = (A_1, ..., A_r)` with `r = r(M)` and an element
//! `e`, a graph on the indices `{i : e ∈ A_i}` is *presenting* when, for every
//! pair of vertices `i, j`, the vertices `u` with `A_u ⊆ cl*(A_i ∪ A_j)`
//! induce a connected subgraph. `M / e` is transversal exactly when a minimal
//! presenting graph is a tree, and then each tree edge `{u, v}` contributes
//! the set `A_u ∪ A_v - e` to a presentation of `M / e`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ground::ElementSet;
use crate::matroid::{
    first_difference, normalize_presentation, restrict, MinorMatroid, RankOracle,
    TransversalMatroid,
};
use crate::presentation::Presentation;

/// Indices of the sets containing `e`.
pub fn pivot_indices(m: &TransversalMatroid, e: usize) -> Result<Vec<usize>> {
    m.ground().check(ElementSet::singleton(e))?;
    Ok((0..m.n_sets()).filter(|&i| m.set(i).contains(e)).collect())
}

/// Pivot indices `u` with `A_u ⊆ cl*(A_i ∪ A_j)`.
pub fn induced_support(m: &TransversalMatroid, e: usize, i: usize, j: usize) -> Result<Vec<usize>> {
    let pivots = pivot_indices(m, e)?;
    if i == j || !pivots.contains(&i) || !pivots.contains(&j) {
        return Err(Error::Precondition(format!(
            "({i}, {j}) is not a pair of distinct pivot indices"
        )));
    }
    let cl = m.dual_closure(m.set(i) | m.set(j));
    Ok(pivots.into_iter().filter(|&u| m.set(u).is_subset(cl)).collect())
}

/// A simple graph on pivot indices. Edges are stored as `(min, max)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentingGraph {
    pub pivot: usize,
    pub vertices: Vec<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl PresentingGraph {
    pub fn new(pivot: usize, vertices: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Precondition(format!("self-loop at {a}")));
            }
            if !vertices.contains(&a) || !vertices.contains(&b) {
                return Err(Error::Precondition(format!("edge ({a}, {b}) leaves the vertex set")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(PresentingGraph {
            pivot,
            vertices,
            edges: set,
        })
    }

    pub fn complete(pivot: usize, vertices: Vec<usize>) -> Self {
        let mut edges = BTreeSet::new();
        for (k, &a) in vertices.iter().enumerate() {
            for &b in &vertices[k + 1..] {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        PresentingGraph {
            pivot,
            vertices,
            edges,
        }
    }

    /// No vertices: the pivot lies in no set.
    pub fn is_degenerate(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        let all = (1u64 << self.vertices.len()) - 1;
        self.vertices.len() <= 1 || self.component(all, 0) == all
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.vertices.len()
    }

    pub fn without_edge(&self, edge: (usize, usize)) -> Self {
        let mut g = self.clone();
        g.edges.remove(&edge);
        g
    }

    fn position(&self, v: usize) -> usize {
        self.vertices.iter().position(|&u| u == v).expect("vertex")
    }

    /// Adjacency bitmasks over vertex positions.
    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.vertices.len()];
        for &(a, b) in &self.edges {
            let (pa, pb) = (self.position(a), self.position(b));
            adj[pa] |= 1 << pb;
            adj[pb] |= 1 << pa;
        }
        adj
    }

    /// Vertices (as a position mask) reachable from `start` inside `within`.
    fn component(&self, within: u64, start: usize) -> u64 {
        reach(&self.adjacency(), within, start)
    }

    /// DOT rendering; vertices are labelled with their index and set.
    pub fn to_dot(&self, m: &TransversalMatroid) -> String {
        let g = m.ground();
        let mut out = String::from("graph presenting {\n");
        let _ = writeln!(out, "  label=\"pivot {}\";", escape(g.label(self.pivot)));
        for &v in &self.vertices {
            let _ = writeln!(
                out,
                "  {v} [label=\"{v}: {}\"];",
                escape(&g.format_set(m.set(v)))
            );
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn describe_edges(&self) -> String {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|(a, b)| format!("{{{a},{b}}}"))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn reach(adj: &[u64], within: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & within & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

/// Per-pair supports for a fixed `(M, e)`; they do not depend on the graph.
pub struct PresentingContext<'a> {
    matroid: &'a TransversalMatroid,
    pivot: usize,
    vertices: Vec<usize>,
    /// Position masks of the supports, one per unordered position pair `(a, b)`, `a < b`.
    supports: Vec<(usize, usize, u64)>,
}

impl<'a> PresentingContext<'a> {
    pub fn new(matroid: &'a TransversalMatroid, pivot: usize) -> Result<Self> {
        let vertices = pivot_indices(matroid, pivot)?;
        if vertices.len() > 64 {
            return Err(Error::Precondition("more than 64 pivot sets".into()));
        }
        let mut supports = Vec::new();
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                let cl = matroid.dual_closure(matroid.set(vertices[a]) | matroid.set(vertices[b]));
                let mask = vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| matroid.set(u).is_subset(cl))
                    .fold(0u64, |acc, (p, _)| acc | 1 << p);
                supports.push((a, b, mask));
            }
        }
        Ok(PresentingContext {
            matroid,
            pivot,
            vertices,
            supports,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn matroid(&self) -> &TransversalMatroid {
        self.matroid
    }

    /// The first pair whose support induces a disconnected subgraph, if any.
    pub fn violation(&self, g: &PresentingGraph) -> Result<Option<(usize, usize)>> {
        if g.vertices != self.vertices || g.pivot != self.pivot {
            return Err(Error::Precondition(
                "graph vertices must be exactly the pivot indices".into(),
            ));
        }
        let adj = g.adjacency();
        for &(a, b, mask) in &self.supports {
            if reach(&adj, mask, a) != mask {
                return Ok(Some((self.vertices[a], self.vertices[b])));
            }
        }
        Ok(None)
    }

    pub fn is_presenting(&self, g: &PresentingGraph) -> Result<bool> {
        Ok(self.violation(g)?.is_none())
    }

    /// Whether no single edge can be deleted while staying presenting.
    pub fn is_minimal(&self, g: &PresentingGraph) -> Result<bool> {
        if !self.is_presenting(g)? {
            return Ok(false);
        }
        for &edge in &g.edges {
            if self.is_presenting(&g.without_edge(edge))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Deletes edges from `start`, scanning in `order` and restarting after
    /// each deletion, until no edge can go.
    pub fn reduce(&self, start: PresentingGraph, order: &[(usize, usize)]) -> Result<PresentingGraph> {
        let mut g = start;
        if !self.is_presenting(&g)? {
            return Err(Error::Precondition("starting graph is not presenting".into()));
        }
        'scan: loop {
            for &edge in order {
                if !g.edges.contains(&edge) {
                    continue;
                }
                let candidate = g.without_edge(edge);
                if self.is_presenting(&candidate)? {
                    g = candidate;
                    continue 'scan;
                }
            }
            return Ok(g);
        }
    }

    /// The minimal graph reached by lexicographic deletion from the complete graph.
    pub fn minimal_graph(&self) -> Result<PresentingGraph> {
        let complete = PresentingGraph::complete(self.pivot, self.vertices.clone());
        let order: Vec<_> = complete.edges.iter().copied().collect();
        self.reduce(complete, &order)
    }
}

pub fn is_presenting(m: &TransversalMatroid, e: usize, g: &PresentingGraph) -> Result<bool> {
    PresentingContext::new(m, e)?.is_presenting(g)
}

/// A minimal presenting graph, from the complete graph by lexicographic edge deletion.
///
/// Requires `|A| = r(M)`. If `e` is a loop the result has no vertices.
pub fn minimal_presenting_graph(m: &TransversalMatroid, e: usize) -> Result<PresentingGraph> {
    if !m.is_rank_sized() {
        return Err(Error::Precondition(format!(
            "presentation has {} sets but r(M) = {}",
            m.n_sets(),
            m.full_rank()
        )));
    }
    PresentingContext::new(m, e)?.minimal_graph()
}

/// Same as [`minimal_presenting_graph`] but deleting edges in a caller-chosen order.
pub fn minimal_presenting_graph_in_order(
    m: &TransversalMatroid,
    e: usize,
    order: &[(usize, usize)],
) -> Result<PresentingGraph> {
    let ctx = PresentingContext::new(m, e)?;
    let complete = PresentingGraph::complete(e, ctx.vertices().to_vec());
    ctx.reduce(complete, order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotKind {
    Loop,
    Coloop,
    Ordinary,
}

#[derive(Clone, Debug)]
pub struct ContractionCheck {
    pub pivot: usize,
    pub kind: PivotKind,
    pub transversal: bool,
    /// Minimal presenting graph; empty for loops and coloops.
    pub graph: PresentingGraph,
    /// The presentation the graph refers to (normalized to `r(M)` sets).
    pub matroid: TransversalMatroid,
    /// Indices of the input sets kept by normalization, if it dropped any.
    pub kept_sets: Option<Vec<usize>>,
}

/// Decides whether `M / e` is transversal via a minimal presenting graph.
///
/// Loops and coloops short-circuit: then `M / e = M \ e`, which is transversal.
pub fn is_contraction_transversal(
    m: &TransversalMatroid,
    e: usize,
    max_ground: usize,
) -> Result<ContractionCheck> {
    m.ground().check(ElementSet::singleton(e))?;
    let (loops, coloops) = (m.loops(), m.coloops());
    let kind = if loops.contains(e) {
        PivotKind::Loop
    } else if coloops.contains(e) {
        PivotKind::Coloop
    } else {
        PivotKind::Ordinary
    };
    let (normalized, kept) = normalize_presentation(m, max_ground)?;
    let kept_sets = (kept.len() != m.n_sets()).then_some(kept);
    if kind != PivotKind::Ordinary {
        return Ok(ContractionCheck {
            pivot: e,
            kind,
            transversal: true,
            graph: PresentingGraph::complete(e, Vec::new()),
            matroid: normalized,
            kept_sets,
        });
    }
    let graph = minimal_presenting_graph(&normalized, e)?;
    Ok(ContractionCheck {
        pivot: e,
        kind,
        transversal: graph.is_tree(),
        graph,
        matroid: normalized,
        kept_sets,
    })
}

#[derive(Clone, Debug)]
pub struct ContractedPresentation {
    /// Presentation of `M / e` over `E - e`.
    pub presentation: Presentation,
    /// The tree edges used, in output order; each yields one set.
    pub edges: Vec<(usize, usize)>,
    /// Indices of sets (of the normalized presentation) copied unchanged.
    pub untouched: Vec<usize>,
    pub check: ContractionCheck,
}

/// A presentation of `M / e`, verified against the minor rank oracle.
///
/// Sets are emitted as `A_u ∪ A_v - e` for each tree edge `{u, v}` in edge
/// order, followed by the sets not containing `e` in their original order.
pub fn contract_presentation(
    m: &TransversalMatroid,
    e: usize,
    max_ground: usize,
) -> Result<ContractedPresentation> {
    let check = is_contraction_transversal(m, e, max_ground)?;
    let g = m.ground();
    let rest = g.full().without(e);
    let (presentation, edges, untouched) = match check.kind {
        PivotKind::Loop | PivotKind::Coloop => (
            restrict(m, rest)?.into_presentation(),
            Vec::new(),
            (0..m.n_sets()).collect(),
        ),
        PivotKind::Ordinary => {
            if !check.transversal {
                return Err(Error::NotTransversal {
                    element: g.label(e).to_string(),
                    edges: check.graph.describe_edges(),
                });
            }
            let a = &check.matroid;
            let edges: Vec<(usize, usize)> = check.graph.edges.iter().copied().collect();
            let untouched: Vec<usize> = (0..a.n_sets()).filter(|&i| !a.set(i).contains(e)).collect();
            let mut sets: Vec<ElementSet> = edges
                .iter()
                .map(|&(u, v)| (a.set(u) | a.set(v)).without(e))
                .collect();
            sets.extend(untouched.iter().map(|&i| a.set(i)));
            let full = Presentation::new(g.clone(), sets)?;
            (full.restrict(rest), edges, untouched)
        }
    };
    let minor = MinorMatroid::contract(m, e)?;
    let ours = TransversalMatroid::new(presentation.clone());
    if let Some(x) = first_difference(&ours, &minor, max_ground)? {
        return Err(Error::Internal(format!(
            "synthesized presentation {} differs from M/{} on {}",
            presentation.describe(),
            g.label(e),
            ours.ground().format_set(x)
        )));
    }
    Ok(ContractedPresentation {
        presentation,
        edges,
        untouched,
        check,
    })
}
