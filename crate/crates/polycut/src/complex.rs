//! Pure simplicial complexes represented by their facet lists.
//!
//! A complex of "polytope dimension" `d` stores facets of exactly `d`
//! vertices each (the boundary complex of a simplicial d-polytope has
//! (d-1)-dimensional facets, i.e. d vertices per facet). Validation checks
//! the necessary conditions for being such a boundary complex: purity,
//! the pseudomanifold property (every ridge in exactly two facets),
//! connectivity of the facet-ridge adjacency graph, and Euler's relation
//! for d = 3. Polytopality itself is not decided.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Facet of a complex: a sorted set of distinct vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Facet(Vec<VertexId>);

impl Facet {
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "facet {vertices:?} has a repeated vertex"
            )));
        }
        Ok(Facet(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// The facet with vertex `v` removed (a ridge when `v` is a member).
    pub fn without(&self, v: VertexId) -> Facet {
        Facet(self.0.iter().copied().filter(|&u| u != v).collect())
    }
}

impl std::fmt::Display for Facet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// Pure facet-list complex of polytope dimension `dim_d` (facet size
/// `dim_d`). Facets are stored canonically sorted; the vertex set is the
/// union of all facets. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    dim_d: usize,
    facets: BTreeSet<Facet>,
    vertices: BTreeSet<VertexId>,
}

impl SimplicialComplex {
    /// Builds a complex, rejecting empty facet lists, facets of the wrong
    /// cardinality, and duplicate facets.
    pub fn new(dim_d: usize, facets: Vec<Facet>) -> Result<Self> {
        if dim_d < 1 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if facets.is_empty() {
            return Err(Error::InvalidInput("empty facet list".into()));
        }
        let count = facets.len();
        let mut set = BTreeSet::new();
        for f in facets {
            if f.len() != dim_d {
                return Err(Error::InvalidInput(format!(
                    "facet {f} has {} vertices, expected {dim_d}",
                    f.len()
                )));
            }
            set.insert(f);
        }
        if set.len() != count {
            return Err(Error::InvalidInput("duplicate facet in input".into()));
        }
        let vertices = set.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        Ok(SimplicialComplex {
            dim_d,
            facets: set,
            vertices,
        })
    }

    pub fn dim_d(&self) -> usize {
        self.dim_d
    }

    pub fn facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter()
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn contains_facet(&self, f: &Facet) -> bool {
        self.facets.contains(f)
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// 1-skeleton: all vertices, with an edge wherever two vertices share
    /// a facet. Deterministic: identical facet sets yield identical graphs.
    pub fn skeleton_graph(&self) -> Graph {
        let mut g = Graph::with_vertices(self.vertices.iter().copied());
        for f in &self.facets {
            let vs = f.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    g.add_edge(vs[i], vs[j]);
                }
            }
        }
        g
    }

    /// Link of a vertex: facets containing `v`, with `v` removed. One
    /// dimension lower than the complex.
    pub fn link(&self, v: VertexId) -> Result<SimplicialComplex> {
        if !self.vertices.contains(&v) {
            return Err(Error::NotFound(format!("vertex {v} is not in the complex")));
        }
        if self.dim_d < 2 {
            return Err(Error::InvalidInput(
                "links are only defined for complexes of dimension at least 2".into(),
            ));
        }
        let facets: Vec<Facet> = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect();
        SimplicialComplex::new(self.dim_d - 1, facets)
    }

    /// Checks the necessary conditions for a boundary complex of a
    /// simplicial polytope. Never fails; the verdicts live in the report.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();

        // Purity and duplicates hold by construction; re-derive anyway so
        // the report stands on its own.
        let pure = self.facets.iter().all(|f| f.len() == self.dim_d);
        if !pure {
            failures.push("complex is not pure".to_string());
        }

        // Ridge incidence: every (d-1)-subset of a facet must lie in
        // exactly two facets.
        let facet_list: Vec<&Facet> = self.facets.iter().collect();
        let mut ridge_map: BTreeMap<Vec<VertexId>, Vec<usize>> = BTreeMap::new();
        for (idx, f) in facet_list.iter().enumerate() {
            for &v in f.vertices() {
                let ridge = f.without(v).vertices().to_vec();
                ridge_map.entry(ridge).or_default().push(idx);
            }
        }
        let mut pseudomanifold = true;
        for (ridge, fs) in &ridge_map {
            if fs.len() != 2 {
                pseudomanifold = false;
                if failures.len() < 8 {
                    failures.push(format!("ridge {ridge:?} lies in {} facet(s)", fs.len()));
                }
            }
        }

        // Facet-ridge adjacency graph must be connected.
        let mut seen = vec![false; facet_list.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(i) = stack.pop() {
            for &v in facet_list[i].vertices() {
                let ridge = facet_list[i].without(v).vertices().to_vec();
                for &j in &ridge_map[&ridge] {
                    if !seen[j] {
                        seen[j] = true;
                        reached += 1;
                        stack.push(j);
                    }
                }
            }
        }
        let dual_connected = reached == facet_list.len();
        if !dual_connected {
            failures.push(format!(
                "facet adjacency graph splits: {reached} of {} facets reachable",
                facet_list.len()
            ));
        }

        let n_vertices = self.vertices.len();
        let n_facets = self.facets.len();
        let n_edges = self.skeleton_graph().edge_count();

        // Euler's relation for 2-spheres: n - e + f = 2.
        let euler_ok = (self.dim_d == 3).then(|| {
            let ok = n_vertices as i64 - n_edges as i64 + n_facets as i64 == 2;
            if !ok {
                failures.push(format!(
                    "Euler relation fails: {n_vertices} - {n_edges} + {n_facets} != 2"
                ));
            }
            ok
        });

        let valid = pure && pseudomanifold && dual_connected && euler_ok.unwrap_or(true);
        ValidationReport {
            dim_d: self.dim_d,
            n_vertices,
            n_facets,
            n_edges,
            pure,
            pseudomanifold,
            dual_connected,
            euler_ok,
            valid,
            failures,
        }
    }
}

/// Verdicts of [`SimplicialComplex::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub dim_d: usize,
    pub n_vertices: usize,
    pub n_facets: usize,
    pub n_edges: usize,
    pub pure: bool,
    pub pseudomanifold: bool,
    pub dual_connected: bool,
    /// Only evaluated for d = 3.
    pub euler_ok: Option<bool>,
    pub valid: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn summary(&self) -> String {
        if self.valid {
            "all checks passed".to_string()
        } else {
            self.failures.join("; ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{facet, octahedron};

    fn tetrahedron() -> SimplicialComplex {
        let facets = vec![
            facet(&[1, 2, 3]),
            facet(&[1, 2, 4]),
            facet(&[1, 3, 4]),
            facet(&[2, 3, 4]),
        ];
        SimplicialComplex::new(3, facets).unwrap()
    }

    #[test]
    fn facet_sorts_and_rejects_duplicates() {
        assert_eq!(facet(&[3, 1, 2]).vertices(), &[1, 2, 3]);
        assert!(Facet::new(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn tetrahedron_validates_with_euler() {
        let report = tetrahedron().validate();
        assert!(report.valid);
        assert!(report.pure && report.pseudomanifold && report.dual_connected);
        assert_eq!(report.euler_ok, Some(true));
        assert_eq!(
            (report.n_vertices, report.n_edges, report.n_facets),
            (4, 6, 4)
        );
    }

    #[test]
    fn incomplete_complex_fails_pseudomanifold() {
        let c =
            SimplicialComplex::new(3, vec![facet(&[1, 2, 3]), facet(&[1, 2, 4])]).unwrap();
        let report = c.validate();
        assert!(!report.valid);
        assert!(!report.pseudomanifold);
        // ridge {1,2} lies in both facets; ridge {1,3} only in one
        assert!(report.failures.iter().any(|f| f.contains("[1, 3]")));
    }

    #[test]
    fn empty_facet_list_rejected() {
        assert!(SimplicialComplex::new(3, Vec::new()).is_err());
    }

    #[test]
    fn wrong_cardinality_rejected() {
        assert!(SimplicialComplex::new(3, vec![facet(&[1, 2])]).is_err());
    }

    #[test]
    fn duplicate_facets_rejected() {
        let fs = vec![facet(&[1, 2, 3]), facet(&[3, 2, 1])];
        assert!(SimplicialComplex::new(3, fs).is_err());
    }

    #[test]
    fn skeleton_of_simplex_boundary_is_complete() {
        let g = tetrahedron().skeleton_graph();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.min_degree().unwrap(), 3);
    }

    #[test]
    fn octahedron_skeleton_counts() {
        let g = octahedron().skeleton_graph();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == Some(4)));
        // antipodal pairs are the non-edges
        assert!(!g.has_edge(1, 2) && !g.has_edge(3, 4) && !g.has_edge(5, 6));
    }

    #[test]
    fn link_of_tetrahedron_vertex_is_triangle() {
        let link = tetrahedron().link(4).unwrap();
        assert_eq!(link.dim_d(), 2);
        let expected: BTreeSet<Facet> =
            [facet(&[1, 2]), facet(&[1, 3]), facet(&[2, 3])].into_iter().collect();
        assert_eq!(link.facets().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(link.validate().valid);
    }

    #[test]
    fn link_of_stacked_sphere_apex_is_triangle() {
        // two tetrahedra glued along {1,2,3}; apexes 4 and 5
        let facets = vec![
            facet(&[1, 2, 4]),
            facet(&[1, 3, 4]),
            facet(&[2, 3, 4]),
            facet(&[1, 2, 5]),
            facet(&[1, 3, 5]),
            facet(&[2, 3, 5]),
        ];
        let c = SimplicialComplex::new(3, facets).unwrap();
        assert!(c.validate().valid);
        let link = c.link(5).unwrap();
        assert_eq!(link.n_facets(), 3);
        assert_eq!(link.vertex_set(), &BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn link_missing_vertex_is_not_found() {
        assert!(matches!(
            tetrahedron().link(99),
            Err(crate::Error::NotFound(_))
        ));
    }

    #[test]
    fn links_are_pure_pseudomanifolds() {
        for c in [tetrahedron(), octahedron()] {
            for &v in c.vertex_set() {
                let link = c.link(v).unwrap();
                let report = link.validate();
                assert!(report.pure, "link of {v} not pure");
                assert!(report.pseudomanifold, "link of {v} not pseudomanifold");
            }
        }
    }

    #[test]
    fn link_skeleton_matches_facet_restricted_neighborhood() {
        // Edges of the link are exactly the skeleton edges among neighbors
        // of v that lie in a facet containing v.
        let c = octahedron();
        let g = c.skeleton_graph();
        for &v in c.vertex_set() {
            let link = c.link(v).unwrap();
            let lg = link.skeleton_graph();
            assert_eq!(
                lg.vertices().collect::<BTreeSet<_>>(),
                g.neighbors(v).unwrap().iter().copied().collect::<BTreeSet<_>>()
            );
            for (a, b) in lg.edges() {
                assert!(g.has_edge(a, b));
                assert!(c.facets().any(|f| f.contains(v) && f.contains(a) && f.contains(b)));
            }
            for f in c.facets().filter(|f| f.contains(v)) {
                let vs = f.vertices();
                for i in 0..vs.len() {
                    for j in i + 1..vs.len() {
                        if vs[i] != v && vs[j] != v {
                            assert!(lg.has_edge(vs[i], vs[j]));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn d3_edge_count_identity() {
        // 3n - 6 = e for valid 2-spheres
        for c in [tetrahedron(), octahedron()] {
            let r = c.validate();
            assert!(r.valid);
            assert_eq!(3 * r.n_vertices - 6, r.n_edges);
        }
    }

    #[test]
    fn skeleton_is_deterministic() {
        let a = octahedron().skeleton_graph();
        let b = octahedron().skeleton_graph();
        assert_eq!(a, b);
    }

    #[test]
    fn dimension_one_complex_validates_as_two_points() {
        // boundary of a 1-polytope: two isolated 0-faces
        let c = SimplicialComplex::new(1, vec![facet(&[1]), facet(&[2])]).unwrap();
        let r = c.validate();
        assert!(r.valid, "{:?}", r.failures);
        let three = SimplicialComplex::new(1, vec![facet(&[1]), facet(&[2]), facet(&[3])])
            .unwrap();
        assert!(!three.validate().valid);
    }
}
