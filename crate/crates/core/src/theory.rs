//! Selection of the invariant a pipeline run must preserve.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::cyclotomic::CyclotomicInt;
use crate::diagram::plat::PlatDiagram;
use crate::diagram::PdDiagram;
use crate::error::{Error, Result};
use crate::group::FiniteGroupWithClass;
use crate::invariants;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theory {
    /// Kauffman bracket at `A = ζ_N`.
    TemperleyLieb { order: u32 },
    /// Homomorphism count into a finite group with meridians in a class.
    DijkgraafWitten { group: Arc<FiniteGroupWithClass> },
}

/// Value of a theory on a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InvariantValue {
    Bracket(CyclotomicInt),
    Count(u64),
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Bracket(v) => write!(f, "{v}"),
            InvariantValue::Count(n) => write!(f, "{n}"),
        }
    }
}

impl Theory {
    /// Parses `tl:<N>` or `dw:<preset>`; `dw:<path>` reads a group file.
    pub fn parse(s: &str) -> Result<Theory> {
        if let Some(n) = s.strip_prefix("tl:") {
            let order: u32 = n
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad root order {n:?}")))?;
            if order < 3 {
                return Err(Error::InvalidArgument("root order must be at least 3".into()));
            }
            return Ok(Theory::TemperleyLieb { order });
        }
        if let Some(name) = s.strip_prefix("dw:") {
            let group = if crate::group::PRESETS.contains(&name) {
                FiniteGroupWithClass::preset(name)?
            } else {
                let text = std::fs::read_to_string(name).map_err(|e| {
                    Error::InvalidArgument(format!("unknown group {name:?}: {e}"))
                })?;
                FiniteGroupWithClass::from_json(name, &text)?
            };
            return Ok(Theory::DijkgraafWitten {
                group: Arc::new(group),
            });
        }
        Err(Error::InvalidArgument(format!(
            "theory must be tl:<N> or dw:<group>, got {s:?}"
        )))
    }

    pub fn tl(order: u32) -> Theory {
        Theory::TemperleyLieb { order }
    }

    pub fn dw(preset: &str) -> Result<Theory> {
        Ok(Theory::DijkgraafWitten {
            group: Arc::new(FiniteGroupWithClass::preset(preset)?),
        })
    }

    /// Order `e(V,V)` of the squared braiding.
    pub fn exponent(&self) -> Result<u64> {
        match self {
            Theory::TemperleyLieb { order } => invariants::tl_vafa_exponent(*order),
            Theory::DijkgraafWitten { group } => Ok(invariants::dw_pad_exponent(group)),
        }
    }

    /// Padding unit `T`: a multiple of `e(V,V)`, at least 2.
    pub fn pad_unit(&self) -> Result<u64> {
        Ok(invariants::pad_unit(self.exponent()?))
    }

    /// The framed invariant of a PD diagram, without a crossing cap.
    pub fn evaluate_pd(&self, k: &PdDiagram) -> Result<InvariantValue> {
        match self {
            Theory::TemperleyLieb { order } => Ok(InvariantValue::Bracket(
                invariants::bracket_pd_with_cap(k, *order, usize::MAX)?,
            )),
            Theory::DijkgraafWitten { group } => Ok(InvariantValue::Count(
                invariants::homcount_pd_with_cap(k, group, usize::MAX)?,
            )),
        }
    }

    pub fn evaluate_plat(&self, p: &PlatDiagram) -> Result<InvariantValue> {
        match self {
            Theory::TemperleyLieb { order } => Ok(InvariantValue::Bracket(
                invariants::bracket_plat_with_cap(p, *order, usize::MAX)?,
            )),
            Theory::DijkgraafWitten { group } => {
                Ok(InvariantValue::Count(invariants::homcount_plat(p, group)?))
            }
        }
    }

    /// `θ^r`: the factor a net framing change of `r` multiplies the value
    /// by. Homomorphism counts do not see framing.
    pub fn apply_twist(&self, v: &InvariantValue, r: i64) -> InvariantValue {
        match (self, v) {
            (Theory::TemperleyLieb { order }, InvariantValue::Bracket(b)) => {
                InvariantValue::Bracket(&CyclotomicInt::twist_pow(*order, r) * b)
            }
            _ => v.clone(),
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theory::TemperleyLieb { order } => write!(f, "tl:{order}"),
            Theory::DijkgraafWitten { group } => write!(f, "dw:{}", group.name()),
        }
    }
}

impl Serialize for Theory {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
