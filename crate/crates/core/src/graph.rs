//! Simple undirected graphs with strictly positive edge weights.

use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::numeric::checked_pow;

/// An undirected edge between two dense node indices, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// Simple undirected graph with positive weights.
///
/// Nodes are dense indices `0..n` carrying opaque string labels. The graph is
/// immutable once built; use [`GraphBuilder`] to construct one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

/// Summary used to decide which measures a graph supports.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub is_connected: bool,
    pub min_degree: usize,
    /// `None` for an edgeless graph.
    pub weight_range: Option<(f64, f64)>,
    pub node_count: usize,
    pub edge_count: usize,
}

#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: Vec<Edge>,
    seen: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `label`, creating the node on first sight.
    pub fn node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    pub fn add_edge(&mut self, u: &str, v: &str, weight: f64) -> Result<()> {
        let a = self.node(u);
        let b = self.node(v);
        self.add_edge_by_index(a, b, weight)
    }

    pub fn add_edge_by_index(&mut self, u: usize, v: usize, weight: f64) -> Result<()> {
        let n = self.labels.len();
        if u >= n {
            return Err(Error::UnknownNode(u));
        }
        if v >= n {
            return Err(Error::UnknownNode(v));
        }
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        check_weight(weight)?;
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            return Err(Error::DuplicateEdge(
                self.labels[key.0].clone(),
                self.labels[key.1].clone(),
            ));
        }
        self.edges.push(Edge {
            u: key.0,
            v: key.1,
            weight,
        });
        Ok(())
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.seen.contains(&(u.min(v), u.max(v)))
    }

    pub fn build(self) -> WeightedGraph {
        WeightedGraph::assemble(self.labels, self.edges)
    }
}

fn check_weight(weight: f64) -> Result<()> {
    if weight > 0.0 && weight.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidWeight(weight))
    }
}

impl WeightedGraph {
    fn assemble(labels: Vec<String>, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); labels.len()];
        for e in &edges {
            adjacency[e.u].push((e.v, e.weight));
            adjacency[e.v].push((e.u, e.weight));
        }
        Self {
            labels,
            edges,
            adjacency,
        }
    }

    /// Graph on nodes labelled `"0"..n` with the given index edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.node(&i.to_string());
        }
        for &(u, v, w) in edges {
            b.add_edge_by_index(u, v, w)?;
        }
        Ok(b.build())
    }

    /// Same node labels, new edge set. Used by the rewiring model.
    pub(crate) fn with_edges(&self, edges: Vec<Edge>) -> Self {
        Self::assemble(self.labels.clone(), edges)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels.get(u).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> Result<&[(usize, f64)]> {
        self.adjacency
            .get(u)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownNode(u))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(x, _)| x == v)
            .map(|&(_, w)| w)
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        Ok(self.neighbors(u)?.len())
    }

    pub fn strength(&self, u: usize) -> Result<f64> {
        Ok(self.neighbors(u)?.iter().map(|&(_, w)| w).sum())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn strengths(&self) -> Vec<f64> {
        self.adjacency
            .iter()
            .map(|nb| nb.iter().map(|&(_, w)| w).sum())
            .collect()
    }

    /// Copy of the graph with every weight replaced by its reciprocal.
    pub fn invert_weights(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                weight: 1.0 / e.weight,
                ..*e
            })
            .collect();
        Self::assemble(self.labels.clone(), edges)
    }

    /// Breadth-first hop counts from `source`; unreachable nodes get `+inf`.
    pub fn unweighted_distances(&self, source: usize) -> Result<Vec<f64>> {
        let n = self.node_count();
        if source >= n {
            return Err(Error::UnknownNode(source));
        }
        let mut dist = vec![f64::INFINITY; n];
        let mut queue = VecDeque::new();
        dist[source] = 0.0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1.0;
            for &(v, _) in &self.adjacency[u] {
                if dist[v].is_infinite() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Dijkstra distances from `source` where each edge costs `w^alpha`.
    ///
    /// Fails with [`Error::Computability`] if any `w^alpha` leaves the normal
    /// binary64 range.
    pub fn weighted_distances(&self, source: usize, alpha: f64) -> Result<Vec<f64>> {
        if alpha == 1.0 {
            return self.distances_by(source, Ok);
        }
        self.distances_by(source, |w| checked_pow(w, alpha))
    }

    /// Dijkstra distances with edge cost `cost(w)`; costs must be non-negative.
    pub fn distances_by<F>(&self, source: usize, cost: F) -> Result<Vec<f64>>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let n = self.node_count();
        if source >= n {
            return Err(Error::UnknownNode(source));
        }
        let mut dist = vec![f64::INFINITY; n];
        let mut done = vec![false; n];
        let mut heap = BinaryHeap::new();
        dist[source] = 0.0;
        heap.push(Candidate {
            cost: 0.0,
            node: source,
        });
        while let Some(Candidate { cost: d, node }) = heap.pop() {
            if done[node] {
                continue;
            }
            done[node] = true;
            for &(v, w) in &self.adjacency[node] {
                let next = d + cost(w)?;
                if next < dist[v] {
                    dist[v] = next;
                    heap.push(Candidate {
                        cost: next,
                        node: v,
                    });
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        match self.node_count() {
            0 => true,
            _ => self
                .unweighted_distances(0)
                .map(|d| d.iter().all(|x| x.is_finite()))
                .unwrap_or(false),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let weight_range = self.edges.iter().fold(None, |acc, e| match acc {
            None => Some((e.weight, e.weight)),
            Some((lo, hi)) => Some((f64::min(lo, e.weight), f64::max(hi, e.weight))),
        });
        ValidationReport {
            is_connected: self.is_connected(),
            min_degree: self.adjacency.iter().map(Vec::len).min().unwrap_or(0),
            weight_range,
            node_count: self.node_count(),
            edge_count: self.edge_count(),
        }
    }
}

/// Collapses directed arcs into an undirected graph.
///
/// The weight of `{u, v}` is `w(u, v) + w(v, u)`, a missing direction counting
/// as zero. Self-loops are dropped but their node is kept. Repeating the same
/// arc twice is an error.
pub fn symmetrize_directed<S: AsRef<str>>(arcs: &[(S, S, f64)]) -> Result<WeightedGraph> {
    let mut builder = GraphBuilder::new();
    let mut seen_arcs = BTreeSet::new();
    let mut sums: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    let mut order = Vec::new();
    for (u, v, w) in arcs {
        check_weight(*w)?;
        let a = builder.node(u.as_ref());
        let b = builder.node(v.as_ref());
        if !seen_arcs.insert((a, b)) {
            return Err(Error::DuplicateEdge(
                u.as_ref().to_string(),
                v.as_ref().to_string(),
            ));
        }
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        let entry = sums.entry(key).or_insert_with(|| {
            order.push(key);
            0.0
        });
        *entry += *w;
    }
    for key in order {
        builder.add_edge_by_index(key.0, key.1, sums[&key])?;
    }
    Ok(builder.build())
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    cost: f64,
    node: usize,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Candidate {}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    // Reversed so the max-heap pops the cheapest candidate first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}
