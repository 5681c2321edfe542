//! JSON documents for PD and plat diagrams. Output is compact JSON followed
//! by a newline.

use serde::{Deserialize, Serialize};

use super::plat::PlatDiagram;
use super::PdDiagram;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Doc {
    Pd {
        crossings: Vec<[u32; 4]>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        unknot: bool,
        #[serde(default, skip_serializing_if = "is_zero")]
        free_loops: usize,
    },
    Plat {
        m: usize,
        rows: Vec<Vec<i64>>,
    },
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

/// A parsed diagram file of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagram {
    Pd(PdDiagram),
    Plat(PlatDiagram),
}

impl Diagram {
    /// PD form; plats are expanded.
    pub fn to_pd(&self) -> Result<PdDiagram> {
        match self {
            Diagram::Pd(k) => Ok(k.clone()),
            Diagram::Plat(p) => p.to_pd(),
        }
    }
}

fn from_doc(doc: Doc, knot_only: bool) -> Result<Diagram> {
    match doc {
        Doc::Pd {
            crossings,
            unknot,
            free_loops,
        } => {
            if crossings.is_empty() {
                if !unknot && free_loops == 0 {
                    return Err(Error::Parse(
                        "empty crossing list requires the unknot flag".into(),
                    ));
                }
                let k = PdDiagram::unlink(free_loops.max(1));
                if knot_only {
                    k.require_knot()?;
                }
                return Ok(Diagram::Pd(k));
            }
            let k = PdDiagram::new_link(crossings, free_loops)?;
            if knot_only {
                k.require_knot()?;
            }
            Ok(Diagram::Pd(k))
        }
        Doc::Plat { m, rows } => Ok(Diagram::Plat(PlatDiagram::new(m, rows)?)),
    }
}

/// Parses either document kind; PD documents must describe knots.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    from_doc(serde_json::from_str(text)?, true)
}

pub fn parse_pd(text: &str) -> Result<PdDiagram> {
    match parse_diagram(text)? {
        Diagram::Pd(k) => Ok(k),
        Diagram::Plat(_) => Err(Error::Parse("expected a pd document".into())),
    }
}

/// Parses a PD document without requiring a single component.
pub fn parse_pd_link(text: &str) -> Result<PdDiagram> {
    match from_doc(serde_json::from_str(text)?, false)? {
        Diagram::Pd(k) => Ok(k),
        Diagram::Plat(_) => Err(Error::Parse("expected a pd document".into())),
    }
}

pub fn parse_plat(text: &str) -> Result<PlatDiagram> {
    match serde_json::from_str(text)? {
        Doc::Plat { m, rows } => PlatDiagram::new(m, rows),
        Doc::Pd { .. } => Err(Error::Parse("expected a plat document".into())),
    }
}

fn write(doc: &Doc) -> String {
    let mut s = serde_json::to_string(doc).expect("diagram documents serialize");
    s.push('\n');
    s
}

pub fn pd_to_json(k: &PdDiagram) -> String {
    let crossings = k.crossings().to_vec();
    let doc = if crossings.is_empty() {
        Doc::Pd {
            crossings,
            unknot: k.free_loops() == 1,
            free_loops: if k.free_loops() == 1 { 0 } else { k.free_loops() },
        }
    } else {
        Doc::Pd {
            crossings,
            unknot: false,
            free_loops: k.free_loops(),
        }
    };
    write(&doc)
}

pub fn plat_to_json(p: &PlatDiagram) -> String {
    write(&Doc::Plat {
        m: p.m(),
        rows: p.rows().to_vec(),
    })
}

pub fn diagram_to_json(d: &Diagram) -> String {
    match d {
        Diagram::Pd(k) => pd_to_json(k),
        Diagram::Plat(p) => plat_to_json(p),
    }
}
