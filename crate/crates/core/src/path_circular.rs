//! Path-circular matroids.
//!
//! A path-circular collection of a simple graph `G` is a multiset of paths
//! such that, for every interior vertex `u` of a path `q`:
//!
//! 1. `u` has degree 2 in `G`, and
//! 2. every path through `u` also contains an end vertex of `q`.
//!
//! The matroid has the paths as ground set and is presented by the vertex
//! neighbourhoods `N(v) = {paths through v}`. The class is closed under
//! deletion (drop the path) and contraction (see [`PathCircularInstance::contract_path`]).

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::contraction::{PresentingContext, PresentingGraph};
use crate::error::{Error, Result};
use crate::ground::{ElementSet, GroundSet};
use crate::matroid::{first_difference, MinorMatroid, RankOracle, TransversalMatroid};
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut g = SimpleGraph {
            vertices: Vec::new(),
            index: HashMap::new(),
            edges: BTreeSet::new(),
        };
        for v in vertices {
            g.add_vertex(v)?;
        }
        Ok(g)
    }

    pub fn with_edges<S: AsRef<str>>(mut self, edges: &[(S, S)]) -> Result<Self> {
        for (a, b) in edges {
            let (a, b) = (self.require(a.as_ref())?, self.require(b.as_ref())?);
            self.add_edge(a, b)?;
        }
        Ok(self)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateLabel(name));
        }
        self.index.insert(name.clone(), self.vertices.len());
        self.vertices.push(name);
        Ok(self.vertices.len() - 1)
    }

    /// Adds `{a, b}`; repeated edges are rejected, not merged.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::InvalidInstance(format!(
                "self-loop at `{}`",
                self.vertices[a]
            )));
        }
        if !self.edges.insert((a.min(b), a.max(b))) {
            return Err(Error::InvalidInstance(format!(
                "duplicate edge {{{},{}}}",
                self.vertices[a], self.vertices[b]
            )));
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// A vertex name not yet in use, `base`, `base'`, `base''`, ...
    fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index.contains_key(&name) {
            name.push('\'');
        }
        name
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// An interior vertex does not have degree 2.
    Degree { degree: usize },
    /// Path `other` passes through the interior vertex but misses both ends.
    EndVertex { other: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: usize,
    pub vertex: usize,
    pub condition: Condition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A simple graph with a labelled multiset of vertex paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCircularInstance {
    graph: SimpleGraph,
    paths: Vec<Vec<usize>>,
    labels: Vec<String>,
}

/// Wire form. `labels` is optional on input and defaults to `p0, p1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub paths: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PathCircularInstance {
    /// Checks the structure of every path: known, distinct vertices joined by edges.
    ///
    /// Paths are stored with the lexicographically smaller end vertex first.
    /// The path-circular conditions are checked separately by [`Self::validate`].
    pub fn new(graph: SimpleGraph, paths: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        if paths.len() != labels.len() {
            return Err(Error::InvalidInstance(format!(
                "{} paths but {} labels",
                paths.len(),
                labels.len()
            )));
        }
        GroundSet::new(labels.iter().cloned())?;
        let mut normalized = Vec::with_capacity(paths.len());
        for (path, label) in paths.into_iter().zip(&labels) {
            let mut seen = BTreeSet::new();
            for &v in &path {
                if v >= graph.n_vertices() {
                    return Err(Error::InvalidInstance(format!("path `{label}` leaves the graph")));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidInstance(format!(
                        "path `{label}` repeats vertex `{}`",
                        graph.name(v)
                    )));
                }
            }
            for w in path.windows(2) {
                if !graph.adjacent(w[0], w[1]) {
                    return Err(Error::InvalidInstance(format!(
                        "path `{label}` uses the non-edge {{{},{}}}",
                        graph.name(w[0]),
                        graph.name(w[1])
                    )));
                }
            }
            normalized.push(orient(&graph, path));
        }
        Ok(PathCircularInstance {
            graph,
            paths: normalized,
            labels,
        })
    }

    pub fn from_names<S: AsRef<str>>(graph: SimpleGraph, paths: &[Vec<S>]) -> Result<Self> {
        let labels = (0..paths.len()).map(|i| format!("p{i}")).collect();
        Self::from_named_paths(graph, paths, labels)
    }

    pub fn from_named_paths<S: AsRef<str>>(
        graph: SimpleGraph,
        paths: &[Vec<S>],
        labels: Vec<String>,
    ) -> Result<Self> {
        let paths = paths
            .iter()
            .map(|p| p.iter().map(|v| graph.require(v.as_ref())).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::new(graph, paths, labels)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n_paths(&self) -> usize {
        self.paths.len()
    }

    pub fn path_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn path_names(&self, i: usize) -> Vec<String> {
        self.paths[i]
            .iter()
            .map(|&v| self.graph.name(v).to_string())
            .collect()
    }

    /// Checks the degree and end-vertex conditions on every interior vertex.
    pub fn validate(&self) -> Validation {
        let mut violations = Vec::new();
        for (pi, path) in self.paths.iter().enumerate() {
            if path.len() < 3 {
                continue;
            }
            let (first, last) = (path[0], path[path.len() - 1]);
            for &u in &path[1..path.len() - 1] {
                let degree = self.graph.degree(u);
                if degree != 2 {
                    violations.push(Violation {
                        path: pi,
                        vertex: u,
                        condition: Condition::Degree { degree },
                    });
                }
                for (qi, q) in self.paths.iter().enumerate() {
                    if q.contains(&u) && !q.contains(&first) && !q.contains(&last) {
                        violations.push(Violation {
                            path: pi,
                            vertex: u,
                            condition: Condition::EndVertex { other: qi },
                        });
                    }
                }
            }
        }
        Validation { violations }
    }

    pub fn describe_violation(&self, v: &Violation) -> String {
        let vertex = self.graph.name(v.vertex);
        let label = &self.labels[v.path];
        match v.condition {
            Condition::Degree { degree } => {
                format!("path `{label}`: interior vertex `{vertex}` has degree {degree}, not 2")
            }
            Condition::EndVertex { other } => format!(
                "path `{label}`: `{}` contains interior vertex `{vertex}` but neither end vertex",
                self.labels[other]
            ),
        }
    }

    fn require_valid(&self) -> Result<()> {
        let v = self.validate();
        match v.violations.first() {
            None => Ok(()),
            Some(first) => Err(Error::InvalidInstance(self.describe_violation(first))),
        }
    }

    /// `N(v)` for every vertex, in vertex order.
    pub fn neighbourhoods(&self) -> Vec<ElementSet> {
        (0..self.graph.n_vertices())
            .map(|v| {
                self.paths
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.contains(&v))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let ground = GroundSet::new(self.labels.iter().cloned())?;
        Presentation::new(ground, self.neighbourhoods())
    }

    /// The transversal matroid on the paths presented by `(N(v_1), ..., N(v_n))`.
    pub fn matroid_of(&self) -> Result<TransversalMatroid> {
        self.require_valid()?;
        Ok(TransversalMatroid::new(self.presentation()?))
    }

    fn without_paths(&self, drop: &BTreeSet<usize>) -> PathCircularInstance {
        let keep: Vec<usize> = (0..self.paths.len()).filter(|i| !drop.contains(i)).collect();
        PathCircularInstance {
            graph: self.graph.clone(),
            paths: keep.iter().map(|&i| self.paths[i].clone()).collect(),
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// `M \ p`: the same graph with `p` removed from the collection.
    pub fn delete_path(&self, label: &str) -> Result<PathCircularInstance> {
        let i = self.path_index(label)?;
        Ok(self.without_paths(&BTreeSet::from([i])))
    }

    /// Adds an isolated vertex carrying a single-vertex path, which is a coloop.
    pub fn add_coloop(&self) -> Result<PathCircularInstance> {
        let mut label = format!("p{}", self.paths.len());
        let mut n = self.paths.len();
        while self.labels.contains(&label) {
            n += 1;
            label = format!("p{n}");
        }
        let vertex = self.graph.fresh_name(&format!("v{}", self.graph.n_vertices()));
        let out = self.with_coloop_path(label, &vertex)?;
        let m = TransversalMatroid::new(out.presentation()?);
        let c = out.paths.len() - 1;
        if !m.coloops().contains(c) {
            return Err(Error::Internal("added path is not a coloop".into()));
        }
        Ok(out)
    }

    /// Appends a single-vertex path on `vertex`, creating the vertex if needed.
    fn with_coloop_path(&self, label: String, vertex: &str) -> Result<PathCircularInstance> {
        let mut graph = self.graph.clone();
        let v = match graph.position(vertex) {
            Some(v) => v,
            None => graph.add_vertex(vertex)?,
        };
        let mut paths = self.paths.clone();
        let mut labels = self.labels.clone();
        paths.push(vec![v]);
        labels.push(label);
        PathCircularInstance::new(graph, paths, labels)
    }

    /// `M / p` as a path-circular instance.
    ///
    /// Null paths are loops and coloops satisfy `M / p = M \ p`; both are
    /// deleted. Otherwise the coloops of `M` are set aside, each edge
    /// `{u_i, u_{i+1}}` of `p = u_1 ... u_k` is replaced by a new vertex
    /// `u_i~u_{i+1}`, the new vertices form a path, the first and last take
    /// over the outside neighbours of `u_1` and `u_k`, an edge `{u_1, u_k}`
    /// becomes an edge between the first and last new vertex, and
    /// `u_1, ..., u_k` are deleted. Every other path trades each `u_i` for the new vertices beside
    /// it, and coloops come back as single-vertex paths.
    ///
    /// The result is validated and, when the ground set is within
    /// `max_ground`, compared against the minor rank oracle.
    pub fn contract_path(&self, label: &str, max_ground: usize) -> Result<PathCircularInstance> {
        let p = self.path_index(label)?;
        self.require_valid()?;
        if self.paths[p].is_empty() {
            return self.delete_path(label);
        }
        let m = TransversalMatroid::new(self.presentation()?);
        let coloops = m.coloops();
        if coloops.contains(p) {
            return self.delete_path(label);
        }

        let set_aside: BTreeSet<usize> = coloops.iter().collect();
        let work = self.without_paths(&set_aside);
        let wm = TransversalMatroid::new(work.presentation()?);
        let nonempty = work.neighbourhoods().iter().filter(|s| !s.is_empty()).count();
        if nonempty != wm.full_rank() {
            return Err(Error::InvalidInstance(format!(
                "after removing coloops there are {nonempty} nonempty vertex sets but rank {}",
                wm.full_rank()
            )));
        }
        let wp = work.path_index(label)?;
        let contracted = work.subdivide_along(wp)?;

        // Reassemble in the original path order, restoring coloops.
        let mut out = PathCircularInstance {
            graph: contracted.graph.clone(),
            paths: Vec::new(),
            labels: Vec::new(),
        };
        for i in 0..self.paths.len() {
            if i == p {
                continue;
            }
            let label = &self.labels[i];
            if set_aside.contains(&i) {
                let vertex = match self.paths[i].as_slice() {
                    [v] => {
                        let name = self.graph.name(*v);
                        match out.graph.position(name) {
                            Some(nv) if out.graph.degree(nv) == 0 && !out.on_any_path(nv) && !contracted.on_any_path(nv) => {
                                name.to_string()
                            }
                            _ => out.graph.fresh_name(&format!("*{label}")),
                        }
                    }
                    _ => out.graph.fresh_name(&format!("*{label}")),
                };
                out = out.with_coloop_path(label.clone(), &vertex)?;
            } else {
                let j = contracted.path_index(label)?;
                out.paths.push(contracted.paths[j].clone());
                out.labels.push(label.clone());
            }
        }
        let out = PathCircularInstance::new(out.graph, out.paths, out.labels)?;

        let check = out.validate();
        if let Some(v) = check.violations.first() {
            return Err(Error::Internal(format!(
                "contraction produced an invalid collection: {}",
                out.describe_violation(v)
            )));
        }
        if self.paths.len() - 1 <= max_ground {
            let minor = MinorMatroid::contract(&m, p)?;
            let ours = TransversalMatroid::new(out.presentation()?);
            if let Some(x) = first_difference(&ours, &minor, max_ground)? {
                return Err(Error::Internal(format!(
                    "contracted instance differs from M/{label} on {}",
                    ours.ground().format_set(x)
                )));
            }
        }
        Ok(out)
    }

    fn on_any_path(&self, v: usize) -> bool {
        self.paths.iter().any(|p| p.contains(&v))
    }

    /// The subdivision step of `contract_path`, on an instance without coloops.
    fn subdivide_along(&self, p: usize) -> Result<PathCircularInstance> {
        let g = &self.graph;
        let path = &self.paths[p];
        let k = path.len();
        let on_p: HashMap<usize, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let mut graph = SimpleGraph::new(Vec::<String>::new())?;
        let mut renamed = vec![usize::MAX; g.n_vertices()];
        for (v, slot) in renamed.iter_mut().enumerate() {
            if !on_p.contains_key(&v) {
                *slot = graph.add_vertex(g.name(v))?;
            }
        }
        for (a, b) in g.edges() {
            if renamed[a] != usize::MAX && renamed[b] != usize::MAX {
                graph.add_edge(renamed[a], renamed[b])?;
            }
        }
        // gaps[i] sits between path[i] and path[i + 1].
        let mut gaps = Vec::with_capacity(k.saturating_sub(1));
        for i in 0..k.saturating_sub(1) {
            let name = format!("{}~{}", g.name(path[i]), g.name(path[i + 1]));
            if g.position(&name).is_some() {
                return Err(Error::InvalidInstance(format!(
                    "subdivision vertex `{name}` collides with an existing vertex"
                )));
            }
            gaps.push(graph.add_vertex(name)?);
        }
        for w in gaps.windows(2) {
            graph.add_edge(w[0], w[1])?;
        }
        if k >= 2 {
            for (end, gap) in [(path[0], gaps[0]), (path[k - 1], gaps[k - 2])] {
                for n in g.neighbors(end) {
                    if renamed[n] != usize::MAX && !graph.adjacent(gap, renamed[n]) {
                        graph.add_edge(gap, renamed[n])?;
                    }
                }
            }
            // an edge joining the ends of p closes a cycle through the new vertices
            let (first, last) = (gaps[0], gaps[k - 2]);
            if k >= 3 && g.adjacent(path[0], path[k - 1]) && !graph.adjacent(first, last) {
                graph.add_edge(first, last)?;
            }
        }

        let mut paths = Vec::new();
        let mut labels = Vec::new();
        for (qi, q) in self.paths.iter().enumerate() {
            if qi == p {
                continue;
            }
            let mut out: Vec<usize> = Vec::new();
            for (t, &v) in q.iter().enumerate() {
                let Some(&i) = on_p.get(&v) else {
                    out.push(renamed[v]);
                    continue;
                };
                let left = (i >= 1).then(|| gaps[i - 1]);
                let right = (i + 1 < k).then(|| gaps[i]);
                let prev = t.checked_sub(1).map(|s| q[s]);
                let next = q.get(t + 1).copied();
                let descending = (i + 1 < k && prev == Some(path[i + 1]))
                    || (i >= 1 && next == Some(path[i - 1]));
                let pair = if descending { [right, left] } else { [left, right] };
                for x in pair.into_iter().flatten() {
                    if out.last() != Some(&x) {
                        out.push(x);
                    }
                }
            }
            if out.len() >= 2 && out.first() == out.last() {
                out.remove(0);
            }
            let mut seen = BTreeSet::new();
            if !out.iter().all(|v| seen.insert(*v))
                || !out.windows(2).all(|w| graph.adjacent(w[0], w[1]))
            {
                return Err(Error::Internal(format!(
                    "path `{}` does not map to a path of the contracted graph",
                    self.labels[qi]
                )));
            }
            paths.push(out);
            labels.push(self.labels[qi].clone());
        }
        PathCircularInstance::new(graph, paths, labels)
    }

    /// Whether the path `p` itself, read as a graph on the sets of its
    /// vertices, is a minimal presenting graph for contracting `p`.
    ///
    /// Coloops are removed first and empty vertex sets dropped, so the
    /// presentation has exactly `r(M)` sets with the vertices of `p` first.
    pub fn path_is_minimal_presenting(&self, label: &str) -> Result<bool> {
        let p = self.path_index(label)?;
        let m = TransversalMatroid::new(self.presentation()?);
        let coloops: BTreeSet<usize> = m.coloops().iter().collect();
        if coloops.contains(&p) || self.paths[p].is_empty() {
            return Err(Error::Precondition(format!("`{label}` is a loop or a coloop")));
        }
        let work = self.without_paths(&coloops);
        let wp = work.path_index(label)?;
        let hoods = work.neighbourhoods();
        let path = &work.paths[wp];
        let mut order: Vec<usize> = path.clone();
        order.extend((0..hoods.len()).filter(|v| !path.contains(v) && !hoods[*v].is_empty()));
        let pres = Presentation::new(
            GroundSet::new(work.labels.iter().cloned())?,
            order.iter().map(|&v| hoods[v]).collect(),
        )?;
        let tm = TransversalMatroid::new(pres);
        if !tm.is_rank_sized() {
            return Err(Error::Internal(
                "coloop-free neighbourhood presentation is not rank sized".into(),
            ));
        }
        let ctx = PresentingContext::new(&tm, wp)?;
        let edges = (1..path.len()).map(|i| (i - 1, i));
        let graph = PresentingGraph::new(wp, (0..path.len()).collect(), edges)?;
        ctx.is_minimal(&graph)
    }

    pub fn to_json(&self) -> InstanceJson {
        InstanceJson {
            vertices: self.graph.vertices.clone(),
            edges: self
                .graph
                .edges()
                .map(|(a, b)| (self.graph.name(a).to_string(), self.graph.name(b).to_string()))
                .collect(),
            paths: (0..self.paths.len()).map(|i| self.path_names(i)).collect(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn from_json(json: &InstanceJson) -> Result<Self> {
        let mut graph = SimpleGraph::new(json.vertices.iter().cloned())?;
        for (a, b) in &json.edges {
            let (a, b) = (graph.require(a)?, graph.require(b)?);
            graph.add_edge(a, b)?;
        }
        let labels = json
            .labels
            .clone()
            .unwrap_or_else(|| (0..json.paths.len()).map(|i| format!("p{i}")).collect());
        Self::from_named_paths(graph, &json.paths, labels)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let json: InstanceJson = serde_json::from_str(text)?;
        Self::from_json(&json).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("instance json is serializable")
    }

    /// DOT rendering of the graph, with the paths listed in a legend node.
    pub fn to_dot(&self) -> String {
        let q = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
        let mut out = String::from("graph instance {\n");
        for v in &self.graph.vertices {
            let _ = writeln!(out, "  {};", q(v));
        }
        for (a, b) in self.graph.edges() {
            let _ = writeln!(out, "  {} -- {};", q(self.graph.name(a)), q(self.graph.name(b)));
        }
        let mut legend = String::new();
        for (i, label) in self.labels.iter().enumerate() {
            let names = self.path_names(i);
            let body = if names.is_empty() { "(null)".to_string() } else { names.join(" ") };
            let _ = write!(legend, "{label}: {body}\\l");
        }
        let _ = writeln!(
            out,
            "  legend [shape=box, label=\"{}\"];",
            legend.replace('"', "\\\"")
        );
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for PathCircularInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paths: Vec<String> = (0..self.paths.len())
            .map(|i| format!("{}=({})", self.labels[i], self.path_names(i).join(",")))
            .collect();
        write!(f, "{}", paths.join(" "))
    }
}

/// Reverse `path` if its last vertex name sorts before its first.
fn orient(graph: &SimpleGraph, mut path: Vec<usize>) -> Vec<usize> {
    if path.len() >= 2 && graph.name(path[path.len() - 1]) < graph.name(path[0]) {
        path.reverse();
    }
    path
}

/// One two-vertex path per edge of `h`, labelled `a-b`.
pub fn bicircular(h: &SimpleGraph) -> Result<PathCircularInstance> {
    let paths: Vec<Vec<usize>> = h.edges().map(|(a, b)| vec![a, b]).collect();
    let labels = h
        .edges()
        .map(|(a, b)| format!("{}-{}", h.name(a), h.name(b)))
        .collect();
    PathCircularInstance::new(h.clone(), paths, labels)
}

/// Paths along the cycle `v0 v1 ... v(n-1)`, one per cyclic interval `[start..end]`.
///
/// Intervals must be proper arcs and pairwise non-nested; the resulting
/// collection must satisfy the path-circular conditions.
pub fn multipath(n: usize, intervals: &[(usize, usize)]) -> Result<PathCircularInstance> {
    if n < 3 {
        return Err(Error::Precondition("a cycle needs at least 3 vertices".into()));
    }
    let mut graph = SimpleGraph::new((0..n).map(|i| format!("v{i}")))?;
    for i in 0..n {
        graph.add_edge(i, (i + 1) % n)?;
    }
    let mut arcs = Vec::with_capacity(intervals.len());
    for &(start, end) in intervals {
        if start >= n || end >= n {
            return Err(Error::Precondition(format!("interval [{start}..{end}] leaves the cycle")));
        }
        let len = (end + n - start) % n + 1;
        if len >= n {
            return Err(Error::Precondition(format!(
                "interval [{start}..{end}] is not a proper arc"
            )));
        }
        arcs.push((0..len).map(|t| (start + t) % n).collect::<Vec<_>>());
    }
    for (i, a) in arcs.iter().enumerate() {
        for (j, b) in arcs.iter().enumerate() {
            if i != j && a.iter().all(|v| b.contains(v)) {
                return Err(Error::Precondition(format!(
                    "interval {:?} is contained in interval {:?}: no set may contain another",
                    intervals[i], intervals[j]
                )));
            }
        }
    }
    let labels = (0..arcs.len()).map(|i| format!("p{i}")).collect();
    let inst = PathCircularInstance::new(graph, arcs, labels)?;
    inst.require_valid()?;
    Ok(inst)
}
