//! Executable checks: per-complex edge-cut reports, vertex-link
//! verification, and randomized campaigns over instance families.
//!
//! A report records δ and λ, whether every minimum cut is trivial, the
//! `4d - 7` threshold test, and the `min(δ, 4d - 6)` edge-connectivity
//! bound. Instances whose construction guarantees polytopality and whose
//! λ falls inside the threshold but still show a nontrivial minimum cut
//! are flagged as contradictions (always an implementation bug, and
//! persisted for inspection).

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::constructions::{
    boundary_simplex, connected_sum, cyclic_boundary, nontrivial_cut_polytope,
    random_plane_triangulation,
};
use crate::cuts::{
    brute_force_min_cuts, classify, find_nontrivial_min_cut, global_min_cut,
    vertex_connectivity_at_least, EdgeCut, ORACLE_MAX_N,
};
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::io;

/// Where an analyzed complex came from. Contradictions are only flagged
/// when the construction guarantees polytopality; d = 3 complexes that
/// pass validation are always polytopal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub descriptor: String,
    pub seed: Option<u64>,
    pub polytopal: bool,
}

impl Provenance {
    pub fn file(path: &str, dim_d: usize) -> Self {
        Provenance {
            descriptor: path.to_string(),
            seed: None,
            polytopal: dim_d == 3,
        }
    }
}

/// Whether the exhaustive oracle cross-check must run. `Auto` runs it
/// whenever the skeleton has at most [`ORACLE_MAX_N`] vertices; `Required`
/// errors instead of silently skipping above that size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Auto,
    Required,
}

/// Per-complex verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub d: usize,
    pub n_vertices: usize,
    pub delta: usize,
    pub lambda: usize,
    pub theorem_applicable: bool,
    pub all_min_cuts_trivial: bool,
    pub corollary_holds: bool,
    pub lemma21_holds: Option<bool>,
    pub witness: Option<EdgeCut>,
    pub provenance: Provenance,
    pub contradiction: bool,
}

/// Computes the full edge-cut report for a validated complex.
///
/// λ comes from the deterministic global cut; the nontrivial-cut question
/// is settled by the pair-flow search (skipped when the global cut itself
/// is already nontrivial), and cross-checked against the exhaustive
/// bipartition oracle whenever the skeleton is small enough. Disagreement
/// between the two routes panics: the tool must not report anything it
/// cannot reproduce both ways.
pub fn analyze(
    complex: &SimplicialComplex,
    provenance: Provenance,
    oracle: OracleMode,
) -> Result<VerificationReport> {
    let validation = complex.validate();
    if !validation.valid {
        return Err(Error::InvalidComplex(Box::new(validation)));
    }
    let d = complex.dim_d();
    if d < 2 {
        return Err(Error::InvalidInput(
            "analysis needs polytope dimension at least 2".into(),
        ));
    }

    let g = complex.skeleton_graph();
    let n = g.n();
    let delta = g.min_degree()?;
    let global = global_min_cut(&g)?;
    let lambda = global.cardinality;
    assert!(lambda <= delta, "a vertex star is always a cut");

    let witness = if !classify(&g, &global)?.trivial {
        Some(global)
    } else {
        find_nontrivial_min_cut(&g, lambda)?
    };
    let all_min_cuts_trivial = witness.is_none();

    match oracle {
        OracleMode::Required if n > ORACLE_MAX_N => {
            return Err(Error::OracleScaleExceeded {
                n,
                max_n: ORACLE_MAX_N,
            });
        }
        _ if n <= ORACLE_MAX_N => {
            let enumerated = brute_force_min_cuts(&g, ORACLE_MAX_N)?;
            assert_eq!(
                enumerated[0].0.cardinality, lambda,
                "oracle disagrees with the global min cut"
            );
            let oracle_nontrivial = enumerated.iter().any(|(_, cl)| !cl.trivial);
            assert_eq!(
                oracle_nontrivial, !all_min_cuts_trivial,
                "oracle disagrees on cut triviality"
            );
        }
        _ => {}
    }

    let theorem_applicable = lambda <= 4 * d - 7;
    let corollary_holds = lambda >= delta.min(4 * d - 6);
    if all_min_cuts_trivial {
        // a trivial minimum cut is a full vertex star, so λ = δ
        assert_eq!(lambda, delta);
    }
    if !theorem_applicable || all_min_cuts_trivial {
        assert!(corollary_holds, "corollary must follow from the threshold test");
    }

    let lemma21_holds = match &witness {
        Some(cut) => {
            assert_eq!(cut.cardinality, lambda);
            let cl = classify(&g, cut)?;
            assert!(!cl.trivial);
            match vertex_connectivity_at_least(&g, d) {
                Ok(true) => Some(cl.n_x >= d && cl.n_xbar >= d),
                _ => None,
            }
        }
        None => None,
    };

    let contradiction = provenance.polytopal && theorem_applicable && !all_min_cuts_trivial;
    Ok(VerificationReport {
        d,
        n_vertices: n,
        delta,
        lambda,
        theorem_applicable,
        all_min_cuts_trivial,
        corollary_holds,
        lemma21_holds,
        witness,
        provenance,
        contradiction,
    })
}

/// One vertex-link verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkCheck {
    pub vertex: VertexId,
    pub valid: bool,
    pub connected: bool,
    pub covers_neighbors: bool,
}

impl LinkCheck {
    fn ok(&self) -> bool {
        self.valid && self.connected && self.covers_neighbors
    }
}

/// Link verdicts for a whole complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub d: usize,
    pub n_vertices: usize,
    pub checked: usize,
    pub sampled: bool,
    pub passed: bool,
    pub failures: Vec<LinkCheck>,
}

const LINK_SAMPLE_THRESHOLD: usize = 200;
const LINK_SAMPLE_SIZE: usize = 50;

/// Necessary link conditions for a boundary complex of a d-polytope: each
/// vertex link validates one dimension lower, spans exactly the vertex's
/// neighbors, and (for d >= 3) has a (d-1)-connected skeleton. Above 200
/// vertices a fixed-seed sample of 50 links is checked.
pub fn verify_links(complex: &SimplicialComplex) -> Result<LinkReport> {
    let d = complex.dim_d();
    if d < 2 {
        return Err(Error::InvalidInput(
            "link checks need polytope dimension at least 2".into(),
        ));
    }
    let g = complex.skeleton_graph();
    let all: Vec<VertexId> = complex.vertex_set().iter().copied().collect();
    let sampled = all.len() > LINK_SAMPLE_THRESHOLD;
    let chosen: Vec<VertexId> = if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut picked: Vec<VertexId> = all
            .choose_multiple(&mut rng, LINK_SAMPLE_SIZE)
            .copied()
            .collect();
        picked.sort_unstable();
        picked
    } else {
        all
    };

    let mut failures = Vec::new();
    for &v in &chosen {
        let link = complex.link(v)?;
        let valid = link.validate().valid;
        let covers_neighbors = link.vertex_set()
            == &g.neighbors(v).expect("vertex is in skeleton").iter().copied().collect();
        let connected = if d >= 3 && valid {
            vertex_connectivity_at_least(&link.skeleton_graph(), d - 1)?
        } else {
            valid
        };
        let check = LinkCheck {
            vertex: v,
            valid,
            connected,
            covers_neighbors,
        };
        if !check.ok() {
            failures.push(check);
        }
    }
    Ok(LinkReport {
        d,
        n_vertices: complex.n_vertices(),
        checked: chosen.len(),
        sampled,
        passed: failures.is_empty(),
        failures,
    })
}

/// Instance families the campaign engine can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PlaneTriangulations,
    ConnectedSumSpheres,
    PropositionConstructions,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plane-triangulations" => Ok(Family::PlaneTriangulations),
            "connected-sum-spheres" => Ok(Family::ConnectedSumSpheres),
            "proposition-constructions" => Ok(Family::PropositionConstructions),
            other => Err(Error::InvalidInput(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::PlaneTriangulations => "plane-triangulations",
            Family::ConnectedSumSpheres => "connected-sum-spheres",
            Family::PropositionConstructions => "proposition-constructions",
        };
        f.write_str(name)
    }
}

/// Campaign parameters. Identical configs (seed included) reproduce
/// byte-identical summaries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub family: Family,
    pub count: usize,
    pub seed: u64,
    /// vertex range for plane triangulations
    pub n_range: (usize, usize),
    /// flip range for plane triangulations
    pub flip_range: (usize, usize),
    /// polytope dimension for connected-sum spheres
    pub d: usize,
    /// dimension range cycled through by the proposition constructions
    pub d_range: (usize, usize),
}

impl CampaignConfig {
    pub fn new(family: Family, count: usize, seed: u64) -> Self {
        CampaignConfig {
            family,
            count,
            seed,
            n_range: (10, 40),
            flip_range: (0, 300),
            d: 4,
            d_range: (4, 6),
        }
    }

    fn check(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidInput("campaign needs at least one instance".into()));
        }
        match self.family {
            Family::PlaneTriangulations => {
                if self.n_range.0 < 4 || self.n_range.0 > self.n_range.1 {
                    return Err(Error::InvalidInput(format!(
                        "bad vertex range {:?}",
                        self.n_range
                    )));
                }
                if self.flip_range.0 > self.flip_range.1 {
                    return Err(Error::InvalidInput(format!(
                        "bad flip range {:?}",
                        self.flip_range
                    )));
                }
            }
            Family::ConnectedSumSpheres => {
                if self.d < 3 {
                    return Err(Error::InvalidInput(format!(
                        "connected-sum spheres need d >= 3, got {}",
                        self.d
                    )));
                }
            }
            Family::PropositionConstructions => {
                if self.d_range.0 < 4 || self.d_range.0 > self.d_range.1 {
                    return Err(Error::InvalidInput(format!(
                        "bad dimension range {:?}",
                        self.d_range
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One row of a campaign summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub index: usize,
    pub descriptor: String,
    pub seed: u64,
    pub d: usize,
    pub n_vertices: usize,
    pub delta: usize,
    pub lambda: usize,
    pub theorem_applicable: bool,
    pub all_min_cuts_trivial: bool,
    pub corollary_holds: bool,
    pub lemma21_holds: Option<bool>,
    pub links_ok: bool,
    pub contradiction: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignTotals {
    pub instances: usize,
    pub all_trivial: usize,
    pub nontrivial: usize,
    pub theorem_applicable: usize,
    pub lambda_eq_delta: usize,
    pub links_ok: usize,
    pub lemma21_checked: usize,
    pub lemma21_failures: usize,
    pub contradictions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub config: CampaignConfig,
    pub totals: CampaignTotals,
    pub instances: Vec<InstanceOutcome>,
}

impl CampaignSummary {
    /// No contradictions, no lemma failures, every link check green.
    pub fn passed(&self) -> bool {
        self.totals.contradictions == 0
            && self.totals.lemma21_failures == 0
            && self.totals.links_ok == self.totals.instances
    }
}

fn random_factor(rng: &mut ChaCha8Rng, d: usize) -> Result<(SimplicialComplex, String)> {
    if rng.gen_bool(0.5) {
        Ok((boundary_simplex(d)?, "simplex".to_string()))
    } else {
        let n = rng.gen_range(d + 2..=d + 6);
        Ok((cyclic_boundary(d, n)?, format!("cyclic({d},{n})")))
    }
}

fn build_instance(
    cfg: &CampaignConfig,
    index: usize,
    seed: u64,
) -> Result<(SimplicialComplex, Provenance)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match cfg.family {
        Family::PlaneTriangulations => {
            let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
            let flips = rng.gen_range(cfg.flip_range.0..=cfg.flip_range.1);
            let tri_seed: u64 = rng.gen();
            let complex = random_plane_triangulation(n, flips, tri_seed)?;
            Ok((
                complex,
                Provenance {
                    descriptor: format!("plane-triangulation n={n} flips={flips}"),
                    seed: Some(seed),
                    polytopal: true,
                },
            ))
        }
        Family::ConnectedSumSpheres => {
            let d = cfg.d;
            let (mut current, first) = random_factor(&mut rng, d)?;
            let mut names = vec![first];
            let sums = rng.gen_range(1..=3);
            for _ in 0..sums {
                let (piece, name) = random_factor(&mut rng, d)?;
                names.push(name);
                let facets_a: Vec<_> = current.facets().cloned().collect();
                let fa = facets_a[rng.gen_range(0..facets_a.len())].clone();
                let facets_b: Vec<_> = piece.facets().cloned().collect();
                let fb = facets_b[rng.gen_range(0..facets_b.len())].clone();
                // random gluing bijection: any pairing of simplex facets
                // is combinatorially admissible
                let mut to: Vec<VertexId> = fa.vertices().to_vec();
                to.shuffle(&mut rng);
                let identify: Vec<(VertexId, VertexId)> =
                    fb.vertices().iter().copied().zip(to).collect();
                current = connected_sum(&current, &fa, &piece, &fb, &identify)?;
            }
            Ok((
                current,
                Provenance {
                    descriptor: format!("connected-sum d={d} [{}]", names.join(" # ")),
                    seed: Some(seed),
                    polytopal: true,
                },
            ))
        }
        Family::PropositionConstructions => {
            let span = cfg.d_range.1 - cfg.d_range.0 + 1;
            let d = cfg.d_range.0 + index % span;
            let lc = nontrivial_cut_polytope(d)?;
            Ok((
                lc.complex,
                Provenance {
                    descriptor: format!("nontrivial-cut-polytope d={d}"),
                    seed: Some(seed),
                    polytopal: true,
                },
            ))
        }
    }
}

type InstanceResult = (InstanceOutcome, Option<(SimplicialComplex, VerificationReport)>);

fn run_instance(cfg: &CampaignConfig, index: usize, seed: u64) -> Result<InstanceResult> {
    let (complex, provenance) = build_instance(cfg, index, seed)?;
    let report = analyze(&complex, provenance, OracleMode::Auto)?;
    let links = verify_links(&complex)?;
    let outcome = InstanceOutcome {
        index,
        descriptor: report.provenance.descriptor.clone(),
        seed,
        d: report.d,
        n_vertices: report.n_vertices,
        delta: report.delta,
        lambda: report.lambda,
        theorem_applicable: report.theorem_applicable,
        all_min_cuts_trivial: report.all_min_cuts_trivial,
        corollary_holds: report.corollary_holds,
        lemma21_holds: report.lemma21_holds,
        links_ok: links.passed,
        contradiction: report.contradiction,
    };
    let artifact = report.contradiction.then_some((complex, report));
    Ok((outcome, artifact))
}

/// Generates `count` instances of the configured family, analyzes each in
/// parallel, and aggregates the outcomes. Contradiction instances are
/// persisted to `out_dir` (facet list plus report) along with the summary.
pub fn campaign(cfg: &CampaignConfig, out_dir: Option<&Path>) -> Result<CampaignSummary> {
    cfg.check()?;
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    let seeds: Vec<u64> = (0..cfg.count).map(|_| master.gen()).collect();

    let results: Vec<Result<InstanceResult>> = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| run_instance(cfg, i, s))
        .collect();

    let mut totals = CampaignTotals::default();
    let mut instances = Vec::with_capacity(cfg.count);
    let mut artifacts = Vec::new();
    for result in results {
        let (outcome, artifact) = result?;
        if let Some((complex, report)) = artifact {
            artifacts.push((outcome.index, complex, report));
        }
        totals.instances += 1;
        if outcome.all_min_cuts_trivial {
            totals.all_trivial += 1;
        } else {
            totals.nontrivial += 1;
        }
        if outcome.theorem_applicable {
            totals.theorem_applicable += 1;
        }
        if outcome.lambda == outcome.delta {
            totals.lambda_eq_delta += 1;
        }
        if outcome.links_ok {
            totals.links_ok += 1;
        }
        if let Some(held) = outcome.lemma21_holds {
            totals.lemma21_checked += 1;
            if !held {
                totals.lemma21_failures += 1;
            }
        }
        if outcome.contradiction {
            totals.contradictions += 1;
        }
        instances.push(outcome);
    }

    let summary = CampaignSummary {
        config: cfg.clone(),
        totals,
        instances,
    };

    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        for (index, complex, report) in &artifacts {
            let stem = format!("contradiction_{index:04}");
            io::write_complex(&dir.join(format!("{stem}.fl")), complex)?;
            fs::write(
                dir.join(format!("{stem}.report.json")),
                serde_json::to_string_pretty(report)? + "\n",
            )?;
        }
        fs::write(
            dir.join("summary.json"),
            serde_json::to_string_pretty(&summary)? + "\n",
        )?;
    }
    Ok(summary)
}
