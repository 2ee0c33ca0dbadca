//! Facet-list text format and the labels sidecar.
//!
//! Format: the first meaningful line is `dim <d>`; every following
//! nonblank line is one facet as space-separated vertex ids. `#` starts a
//! comment that runs to the end of the line. Canonical serialization sorts
//! vertices within each facet and facets lexicographically, so
//! parse-then-serialize is idempotent.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::complex::{Facet, SimplicialComplex};
use crate::constructions::LabeledConstruction;
use crate::error::{Error, Result};
use crate::graph::VertexId;

pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
    let mut dim: Option<usize> = None;
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match dim {
            None => {
                let mut parts = line.split_whitespace();
                let (kw, value) = (parts.next(), parts.next());
                if kw != Some("dim") || parts.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected `dim <d>` header, got `{line}`"),
                    });
                }
                let d: usize = value
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: format!("invalid dimension `{}`", value.unwrap_or("")),
                    })?;
                dim = Some(d);
            }
            Some(d) => {
                let ids: Vec<VertexId> = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse().map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("invalid vertex id `{tok}`"),
                        })
                    })
                    .collect::<Result<_>>()?;
                if ids.len() != d {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("facet has {} vertices, expected {d}", ids.len()),
                    });
                }
                facets.push(Facet::new(ids).map_err(|e| Error::Parse {
                    line: line_no,
                    msg: e.to_string(),
                })?);
            }
        }
    }
    let dim = dim.ok_or(Error::Parse {
        line: 0,
        msg: "missing `dim <d>` header".into(),
    })?;
    SimplicialComplex::new(dim, facets)
}

/// Canonical text form: `dim <d>` followed by lexicographically sorted
/// facets, one per line.
pub fn canonical_facet_list(c: &SimplicialComplex) -> String {
    let mut out = format!("dim {}\n", c.dim_d());
    for f in c.facets() {
        let parts: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_facet_list(&fs::read_to_string(path)?)
}

pub fn write_complex(path: &Path, c: &SimplicialComplex) -> Result<()> {
    fs::write(path, canonical_facet_list(c))?;
    Ok(())
}

/// Sidecar JSON carried next to the facet list of a labeled construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelsSidecar {
    pub labels: BTreeMap<String, VertexId>,
    pub f0: Vec<VertexId>,
    pub f1: Vec<VertexId>,
    pub designated_cut: Vec<(VertexId, VertexId)>,
}

impl From<&LabeledConstruction> for LabelsSidecar {
    fn from(lc: &LabeledConstruction) -> Self {
        LabelsSidecar {
            labels: lc.labels.clone(),
            f0: lc.f0.vertices().to_vec(),
            f1: lc.f1.vertices().to_vec(),
            designated_cut: lc.designated_cut.iter().copied().collect(),
        }
    }
}

/// `<out>.labels.json` next to the facet-list file.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".labels.json");
    out.with_file_name(name)
}

pub fn write_labels_sidecar(out: &Path, lc: &LabeledConstruction) -> Result<()> {
    let sidecar = LabelsSidecar::from(lc);
    fs::write(
        sidecar_path(out),
        serde_json::to_string_pretty(&sidecar)? + "\n",
    )?;
    Ok(())
}
