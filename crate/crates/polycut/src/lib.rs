//! Combinatorial toolkit for boundary complexes of simplicial polytopes.
//!
//! The crate builds facet-list complexes (simplex and cyclic-polytope
//! boundaries, stacked chains, connected sums, random plane triangulations),
//! extracts their 1-skeleton graphs, computes minimum edge cuts, classifies
//! cuts as trivial (a vertex star) or nontrivial, and runs randomized
//! verification campaigns over whole families of such complexes.

pub mod complex;
pub mod constructions;
pub mod cuts;
mod error;
pub mod graph;
pub mod io;
pub mod verifier;

pub use complex::{Facet, SimplicialComplex, ValidationReport};
pub use constructions::LabeledConstruction;
pub use cuts::{CutClassification, EdgeCut};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId};

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::complex::{Facet, SimplicialComplex};

    pub fn facet(vs: &[u32]) -> Facet {
        Facet::new(vs.to_vec()).unwrap()
    }

    /// Octahedron boundary: antipodal pairs (1,2), (3,4), (5,6).
    pub fn octahedron() -> SimplicialComplex {
        let facets = [
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [1, 4, 6],
            [2, 3, 5],
            [2, 3, 6],
            [2, 4, 5],
            [2, 4, 6],
        ]
        .iter()
        .map(|f| facet(f))
        .collect();
        SimplicialComplex::new(3, facets).unwrap()
    }
}
