//! Constructors for every complex family the toolkit studies: simplex
//! boundaries, cyclic polytope boundaries, connected sums, stacked chains,
//! the chain-between-two-cyclic-polytopes complex carrying a designated
//! nontrivial cut, and randomized plane triangulations.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Facet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{edge_key, VertexId};

/// A complex together with distinguished facets, vertex labels, and a
/// designated edge cut of its skeleton.
///
/// `f0` and `f1` are facets of the stacked chain the construction starts
/// from; for [`nontrivial_cut_polytope`] they are glued away in the final
/// complex but their vertex ids survive unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledConstruction {
    pub complex: SimplicialComplex,
    pub labels: BTreeMap<String, VertexId>,
    pub f0: Facet,
    pub f1: Facet,
    pub designated_cut: BTreeSet<(VertexId, VertexId)>,
}

/// Boundary of the d-simplex: vertices `1..=d+1`, facets all d-subsets.
pub fn boundary_simplex(d: usize) -> Result<SimplicialComplex> {
    if d < 2 {
        return Err(Error::InvalidInput(format!(
            "simplex boundary needs d >= 2, got {d}"
        )));
    }
    let facets: Vec<Facet> = (1..=d as VertexId + 1)
        .combinations(d)
        .map(|vs| Facet::new(vs).expect("combinations are distinct"))
        .collect();
    SimplicialComplex::new(d, facets)
}

/// Gale evenness: `subset` (sorted, within `1..=n`) is a facet of the
/// cyclic d-polytope iff any two non-members are separated by an even
/// number of members. Runs before the first and after the last non-member
/// are unconstrained.
fn gale_even(subset: &[VertexId], n: usize) -> bool {
    let mut member = vec![false; n + 1];
    for &v in subset {
        member[v as usize] = true;
    }
    let mut seen_gap = false;
    let mut run = 0usize;
    for &is_member in &member[1..] {
        if is_member {
            run += 1;
        } else {
            if seen_gap && run % 2 == 1 {
                return false;
            }
            seen_gap = true;
            run = 0;
        }
    }
    true
}

/// Boundary of the cyclic d-polytope with vertices `1..=n` on the moment
/// curve, facets given by the evenness condition.
pub fn cyclic_boundary(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d < 2 {
        return Err(Error::InvalidInput(format!(
            "cyclic boundary needs d >= 2, got {d}"
        )));
    }
    if n <= d {
        return Err(Error::InvalidInput(format!(
            "cyclic boundary needs n >= d + 1, got n={n}, d={d}"
        )));
    }
    let facets: Vec<Facet> = (1..=n as VertexId)
        .combinations(d)
        .filter(|s| gale_even(s, n))
        .map(|vs| Facet::new(vs).expect("combinations are distinct"))
        .collect();
    SimplicialComplex::new(d, facets)
}

/// Order-preserving identification: pairs the sorted vertices of `from`
/// with the sorted vertices of `to`.
pub fn sorted_pairing(from: &Facet, to: &Facet) -> Vec<(VertexId, VertexId)> {
    from.vertices()
        .iter()
        .copied()
        .zip(to.vertices().iter().copied())
        .collect()
}

/// Connected sum of `a` and `b` along facets `fa` and `fb`.
///
/// `identify` maps each vertex of `fb` to its partner in `fa`. The result
/// keeps `a`'s vertex ids; vertices of `b` outside `fb` get fresh ids above
/// `a`'s maximum, assigned in sorted order. Both glued facets disappear.
pub fn connected_sum(
    a: &SimplicialComplex,
    fa: &Facet,
    b: &SimplicialComplex,
    fb: &Facet,
    identify: &[(VertexId, VertexId)],
) -> Result<SimplicialComplex> {
    if a.dim_d() != b.dim_d() {
        return Err(Error::InvalidInput(format!(
            "dimension mismatch: {} vs {}",
            a.dim_d(),
            b.dim_d()
        )));
    }
    if !a.contains_facet(fa) {
        return Err(Error::NotFound(format!("{fa} is not a facet of the first complex")));
    }
    if !b.contains_facet(fb) {
        return Err(Error::NotFound(format!("{fb} is not a facet of the second complex")));
    }
    let from: BTreeSet<VertexId> = identify.iter().map(|&(bv, _)| bv).collect();
    let to: BTreeSet<VertexId> = identify.iter().map(|&(_, av)| av).collect();
    if from.len() != identify.len()
        || to.len() != identify.len()
        || from != fb.vertices().iter().copied().collect()
        || to != fa.vertices().iter().copied().collect()
    {
        return Err(Error::InvalidInput(
            "identification is not a bijection from the second facet onto the first".into(),
        ));
    }

    let mut rename: BTreeMap<VertexId, VertexId> = identify.iter().map(|&(bv, av)| (bv, av)).collect();
    let mut next = a.vertex_set().iter().last().copied().unwrap() + 1;
    for &v in b.vertex_set() {
        rename.entry(v).or_insert_with(|| {
            let fresh = next;
            next += 1;
            fresh
        });
    }

    let mut facets: Vec<Facet> = a.facets().filter(|f| *f != fa).cloned().collect();
    let a_count = facets.len();
    for f in b.facets().filter(|f| *f != fb) {
        let renamed = Facet::new(f.vertices().iter().map(|v| rename[v]).collect())?;
        if facets[..a_count].contains(&renamed) {
            return Err(Error::InvalidInput(format!(
                "identification collision: facet {renamed} appears on both sides"
            )));
        }
        facets.push(renamed);
    }
    SimplicialComplex::new(a.dim_d(), facets)
}

/// Chain of d-simplices `P_{d+1}, ..., P_{2d}`: starts from the boundary of
/// a d-simplex on `x_1..x_{d+1}` and repeatedly glues a fresh simplex onto
/// the facet spanned by the last d vertices. The result has the two
/// disjoint facets `f0 = {x_1..x_d}` and `f1 = {x_{d+1}..x_{2d}}`; the
/// designated cut is the set of skeleton edges between them.
pub fn stacked_chain(d: usize) -> Result<LabeledConstruction> {
    if d < 3 {
        return Err(Error::InvalidInput(format!(
            "stacked chain needs d >= 3, got {d}"
        )));
    }
    let dv = d as VertexId;
    let mut complex = boundary_simplex(d)?;
    let piece = boundary_simplex(d)?;
    let piece_facet = Facet::new((1..=dv).collect())?;
    for j in (d + 1)..=(2 * d - 1) {
        let jv = j as VertexId;
        let fa = Facet::new((jv + 1 - dv..=jv).collect())?;
        debug_assert!(complex.contains_facet(&fa));
        // fresh vertex of the piece lands on id j+1
        complex = connected_sum(&complex, &fa, &piece, &piece_facet, &sorted_pairing(&piece_facet, &fa))?;
    }

    let f0 = Facet::new((1..=dv).collect())?;
    let f1 = Facet::new((dv + 1..=2 * dv).collect())?;
    assert!(complex.contains_facet(&f0) && complex.contains_facet(&f1));

    let skeleton = complex.skeleton_graph();
    debug_assert_eq!(skeleton.edge_count(), (3 * d * d - d) / 2);
    let f0_set: BTreeSet<VertexId> = f0.vertices().iter().copied().collect();
    let designated_cut: BTreeSet<(VertexId, VertexId)> = skeleton
        .edges()
        .filter(|&(u, v)| f0_set.contains(&u) != f0_set.contains(&v))
        .collect();
    debug_assert_eq!(designated_cut.len(), (d * d + d) / 2);

    let labels = (1..=2 * dv).map(|i| (format!("x_{i}"), i)).collect();
    Ok(LabeledConstruction {
        complex,
        labels,
        f0,
        f1,
        designated_cut,
    })
}

/// Glues a cyclic d-polytope boundary onto each end facet of the stacked
/// chain. Every chain vertex lies on one of the two glued facets, so the
/// minimum degree is at least `(d^2 + d)/2`, met with equality by the
/// cyclic vertices away from the gluing; the chain's designated cut
/// survives as an edge cut of that cardinality separating the two cyclic
/// halves.
pub fn nontrivial_cut_polytope(d: usize) -> Result<LabeledConstruction> {
    if d < 4 {
        return Err(Error::InvalidInput(format!(
            "nontrivial cut construction needs d >= 4, got {d}"
        )));
    }
    let chain = stacked_chain(d)?;
    let cut_size = (d * d + d) / 2;
    // smallest complete skeleton reaching the required degree
    let n_c = cut_size + 1;
    let cyclic = cyclic_boundary(d, n_c)?;
    let glue = Facet::new((1..=d as VertexId).collect())?;
    debug_assert!(cyclic.contains_facet(&glue));

    let once = connected_sum(
        &chain.complex,
        &chain.f0,
        &cyclic,
        &glue,
        &sorted_pairing(&glue, &chain.f0),
    )?;
    let complex = connected_sum(&once, &chain.f1, &cyclic, &glue, &sorted_pairing(&glue, &chain.f1))?;

    let skeleton = complex.skeleton_graph();
    assert!(skeleton.min_degree()? >= cut_size);
    assert_eq!(chain.designated_cut.len(), cut_size);
    // the designated cut must split the skeleton into exactly two pieces
    let split = skeleton.without_edges(&chain.designated_cut);
    assert_eq!(split.components().len(), 2);

    Ok(LabeledConstruction {
        complex,
        labels: chain.labels,
        f0: chain.f0,
        f1: chain.f1,
        designated_cut: chain.designated_cut,
    })
}

/// Diagonal flip in a simplicial 2-sphere: the two triangles on `edge`
/// are replaced by the two triangles on the opposite diagonal. Legal only
/// when the opposite vertices are not already adjacent and both endpoints
/// have degree at least 4, which keeps the complex a simple 2-sphere.
pub fn edge_flip(
    complex: &SimplicialComplex,
    edge: (VertexId, VertexId),
) -> Result<SimplicialComplex> {
    let (u, v) = edge_key(edge.0, edge.1);
    if complex.dim_d() != 3 {
        return Err(Error::FlipIllegal(format!(
            "flips need a complex of dimension 3, got {}",
            complex.dim_d()
        )));
    }
    if u == v {
        return Err(Error::FlipIllegal("degenerate edge".into()));
    }
    let incident: Vec<&Facet> = complex
        .facets()
        .filter(|f| f.contains(u) && f.contains(v))
        .collect();
    if incident.len() != 2 {
        return Err(Error::FlipIllegal(format!(
            "edge ({u}, {v}) lies in {} facet(s), expected 2",
            incident.len()
        )));
    }
    let third = |f: &Facet| {
        f.vertices()
            .iter()
            .copied()
            .find(|&x| x != u && x != v)
            .expect("triangle has a third vertex")
    };
    let (w, x) = (third(incident[0]), third(incident[1]));
    if complex.facets().any(|f| f.contains(w) && f.contains(x)) {
        return Err(Error::FlipIllegal(format!(
            "opposite vertices {w} and {x} are already adjacent"
        )));
    }
    for endpoint in [u, v] {
        let mut neighbors: BTreeSet<VertexId> = BTreeSet::new();
        for f in complex.facets().filter(|f| f.contains(endpoint)) {
            neighbors.extend(f.vertices().iter().copied().filter(|&y| y != endpoint));
        }
        if neighbors.len() < 4 {
            return Err(Error::FlipIllegal(format!(
                "vertex {endpoint} has degree {} < 4",
                neighbors.len()
            )));
        }
    }

    let mut facets: Vec<Facet> = complex
        .facets()
        .filter(|f| !(f.contains(u) && f.contains(v)))
        .cloned()
        .collect();
    facets.push(Facet::new(vec![u, w, x])?);
    facets.push(Facet::new(vec![v, w, x])?);
    SimplicialComplex::new(3, facets)
}

/// Random simplicial 2-sphere: starts from the tetrahedron boundary,
/// stacks onto `n - 4` uniformly random facets, then performs `flip_count`
/// random legal diagonal flips. Deterministic for a given seed. If at some
/// point no edge admits a legal flip, the remaining flips are skipped.
pub fn random_plane_triangulation(
    n: usize,
    flip_count: usize,
    seed: u64,
) -> Result<SimplicialComplex> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "triangulation needs n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut complex = boundary_simplex(3)?;
    let piece = boundary_simplex(3)?;
    let piece_facet = Facet::new(vec![1, 2, 3])?;

    for _ in 0..(n - 4) {
        let facets: Vec<Facet> = complex.facets().cloned().collect();
        let fa = facets[rng.gen_range(0..facets.len())].clone();
        complex = connected_sum(&complex, &fa, &piece, &piece_facet, &sorted_pairing(&piece_facet, &fa))?;
    }

    for _ in 0..flip_count {
        let edges: Vec<(VertexId, VertexId)> = complex.skeleton_graph().edges().collect();
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.shuffle(&mut rng);
        let mut flipped = false;
        for &i in &order {
            match edge_flip(&complex, edges[i]) {
                Ok(next) => {
                    complex = next;
                    flipped = true;
                    break;
                }
                Err(Error::FlipIllegal(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        if !flipped {
            break;
        }
    }
    Ok(complex)
}
