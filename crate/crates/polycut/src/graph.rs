//! Undirected simple graphs (1-skeletons of complexes).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex label. Labels within one graph or complex are distinct but need
/// not be contiguous.
pub type VertexId = u32;

/// Normalizes an unordered vertex pair to `(min, max)`.
pub fn edge_key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected simple graph: no loops, no multi-edges. Immutable by
/// convention once built; all algorithms take `&Graph`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let adj = vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        Graph { adj }
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert_ne!(u, v, "loops are not allowed");
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|ns| ns.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    pub fn neighbors(&self, v: VertexId) -> Option<&BTreeSet<VertexId>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.adj.get(&v).map(|ns| ns.len())
    }

    /// Edges as normalized pairs `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Minimum vertex degree δ(G). Empty graphs have no degree.
    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .values()
            .map(|ns| ns.len())
            .min()
            .ok_or_else(|| Error::InvalidInput("minimum degree of an empty graph".into()))
    }

    /// Connected components, each a sorted vertex set; components are
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.adj.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in &self.adj[&u] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Copy of the graph with the given edges removed (vertices kept).
    pub fn without_edges(&self, cut: &BTreeSet<(VertexId, VertexId)>) -> Graph {
        let mut g = Graph::with_vertices(self.vertices());
        for (u, v) in self.edges() {
            if !cut.contains(&edge_key(u, v)) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// All edges with exactly one endpoint in `side`.
    pub fn crossing_edges(&self, side: &BTreeSet<VertexId>) -> BTreeSet<(VertexId, VertexId)> {
        let mut out = BTreeSet::new();
        for &u in side {
            if let Some(ns) = self.adj.get(&u) {
                for &v in ns {
                    if !side.contains(&v) {
                        out.insert(edge_key(u, v));
                    }
                }
            }
        }
        out
    }
}

/// Complete graph on the given vertex labels.
pub fn complete_graph(vertices: &[VertexId]) -> Graph {
    let mut g = Graph::with_vertices(vertices.iter().copied());
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            g.add_edge(u, v);
        }
    }
    g
}
