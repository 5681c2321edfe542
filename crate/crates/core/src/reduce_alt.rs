//! Rewriting a knot diagram into a reduced, prime, alternating diagram.
//!
//! Steps: flip a crossing set to reach an alternating diagram (each flipped
//! crossing becomes a chain of `2T − 1` crossings), untwist nugatory
//! crossings, splice summands together with `2T`-crossing pads, and route
//! torus knots and the unknot to a fixed highly twisted 3-plat. The framed
//! invariant changes by `θ^r`, where `r` sums the framing changes logged as
//! R1-type events.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::checkerboard::{checkerboard, Shading};
use crate::diagram::faces::Faces;
use crate::diagram::plat::PlatDiagram;
use crate::diagram::rewrite::{
    crossing_chain, cut_sides, flipped, insert_band, split_at_cut, untwist_all,
};
use crate::diagram::{dart_slot, PdDiagram};
use crate::error::{Error, Result};
use crate::theory::Theory;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    Hyperbolic,
    TorusFallback,
    UnknotFallback,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Special {
    Trivial,
    Torus(i64),
    Hyperbolic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditStep {
    pub kind: String,
    /// Crossing id or edge labels the step acted on, in the diagram it was
    /// applied to.
    pub location: Vec<i64>,
    pub delta_writhe: i64,
    /// Whether the step changes the framing, and so counts toward `r`.
    pub r1: bool,
    /// Framing change charged to `r`.
    pub delta_r: i64,
}

impl AuditStep {
    fn new(kind: &str, location: Vec<i64>, delta_writhe: i64, delta_r: Option<i64>) -> Self {
        AuditStep {
            kind: kind.to_string(),
            location,
            delta_writhe,
            r1: delta_r.is_some(),
            delta_r: delta_r.unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AltReductionReport {
    #[serde(serialize_with = "ser_pd")]
    pub output: PdDiagram,
    pub r: i64,
    pub case: Case,
    pub pad_unit: u64,
    pub steps: Vec<AuditStep>,
    pub crossings_before: usize,
    pub crossings_after: usize,
    /// The fallback plat, when one was used.
    pub plat: Option<PlatDiagram>,
}

fn ser_pd<S: serde::Serializer>(k: &PdDiagram, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(None)?;
    m.serialize_entry("type", "pd")?;
    m.serialize_entry("crossings", k.crossings())?;
    if k.crossing_count() == 0 {
        m.serialize_entry("unknot", &true)?;
    }
    m.end()
}

/// Crossings whose reversal makes the knot diagram alternating. Of the two
/// complementary solutions the smaller is returned (ties: lexicographically
/// smaller).
pub fn flip_set(k: &PdDiagram) -> Result<Vec<usize>> {
    k.require_knot()?;
    if k.crossing_count() == 0 {
        return Ok(Vec::new());
    }
    let passages = &k.passages()[0];
    let n = k.crossing_count();
    let mut first_index = vec![usize::MAX; n];
    let mut set_a = Vec::new();
    for (i, &(x, over)) in passages.iter().enumerate() {
        match first_index[x] {
            usize::MAX => first_index[x] = i,
            j if (i - j) % 2 == 0 => {
                return Err(Error::Internal(format!(
                    "crossing {x} is met twice at passages of equal parity"
                )))
            }
            _ => {}
        }
        // pattern A: over at even passages
        if over != (i % 2 == 0) && first_index[x] == i {
            set_a.push(x);
        }
    }
    set_a.sort_unstable();
    let set_b: Vec<usize> = (0..n).filter(|x| set_a.binary_search(x).is_err()).collect();
    Ok(if set_a.len() < set_b.len() || (set_a.len() == set_b.len() && set_a <= set_b) {
        set_a
    } else {
        set_b
    })
}

/// Replaces every crossing of the flip set by a chain of `2T − 1` copies of
/// its reversal. Returns the diagram and the flipped crossing ids.
pub fn make_alternating(k: &PdDiagram, t: u64) -> Result<(PdDiagram, Vec<usize>)> {
    if t == 0 {
        return Err(Error::InvalidArgument("T must be positive".into()));
    }
    let flips = flip_set(k)?;
    if flips.is_empty() {
        return Ok((k.clone(), flips));
    }
    let mut next = k.max_label() + 1;
    let mut crossings = Vec::new();
    for (x, &c) in k.crossings().iter().enumerate() {
        if flips.binary_search(&x).is_ok() {
            let s = k.sign(x);
            let y = flipped(c, s);
            crossings.extend(crossing_chain(y, -s, (2 * t - 1) as usize, &mut next));
        } else {
            crossings.push(c);
        }
    }
    let out = PdDiagram::from_oriented(crossings, k.free_loops())?;
    debug_assert!(out.is_alternating());
    Ok((out, flips))
}

/// A crossing is nugatory when one face meets it at two opposite corners.
pub fn nugatory_crossings(k: &PdDiagram) -> Vec<usize> {
    let faces = k.faces();
    (0..k.crossing_count())
        .filter(|&x| is_nugatory(&faces, x))
        .collect()
}

fn is_nugatory(faces: &Faces, x: usize) -> bool {
    faces.corner(x, 0) == faces.corner(x, 2) || faces.corner(x, 1) == faces.corner(x, 3)
}

/// Untwists nugatory crossings until none remain. Untwisting one keeps the
/// others nugatory, so each round removes every crossing that is nugatory at
/// its start. Returns the diagram, the total writhe change and one audit
/// step per removal, located by the crossing id at the start of its round.
pub fn remove_nugatory(k: &PdDiagram) -> Result<(PdDiagram, i64, Vec<AuditStep>)> {
    let mut cur = k.clone();
    let mut total = 0;
    let mut steps = Vec::new();
    loop {
        let xs = nugatory_crossings(&cur);
        if xs.is_empty() {
            break;
        }
        for &x in &xs {
            let dw = -(cur.sign(x) as i64);
            total += dw;
            steps.push(AuditStep::new("nugatory", vec![x as i64], dw, Some(dw)));
        }
        cur = untwist_all(&cur, &xs)?;
    }
    Ok((cur, total, steps))
}

/// Edge pairs bordering the same two faces and separating the crossings.
/// Sorted innermost first: smaller side, then smaller labels.
pub fn prime_cuts(k: &PdDiagram) -> Vec<(u32, u32, usize)> {
    let faces = k.faces();
    let mut by_faces: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
    for l in 1..=k.max_label() {
        let (a, b) = faces.sides(k.tail(l), k);
        if a != b {
            by_faces.entry((a.min(b), a.max(b))).or_default().push(l);
        }
    }
    let mut cuts = Vec::new();
    for edges in by_faces.values() {
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if let Some((a, b)) = cut_sides(k, e, f) {
                    cuts.push((e, f, a.len().min(b.len())));
                }
            }
        }
    }
    cuts.sort_by_key(|&(e, f, s)| (s, e, f));
    cuts
}

/// One bubbled-off summand and the cut that separated it.
#[derive(Clone, Debug, Serialize)]
pub struct Splice {
    pub cut: (u32, u32),
    #[serde(serialize_with = "ser_pd")]
    pub summand: PdDiagram,
}

/// Splits off innermost summands until the remainder is prime. The summands
/// come in the order they were bubbled off; the last entry is the
/// remainder, recorded with cut `(0, 0)`.
pub fn prime_decompose(k: &PdDiagram) -> Result<Vec<Splice>> {
    if k.crossing_count() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut cur = k.clone();
    while let Some(&(e, f, _)) = prime_cuts(&cur).first() {
        let (a, b) = split_at_cut(&cur, e, f)?;
        let (small, rest) = if a.crossing_count() <= b.crossing_count() {
            (a, b)
        } else {
            (b, a)
        };
        out.push(Splice {
            cut: (e, f),
            summand: small,
        });
        cur = rest;
    }
    out.push(Splice {
        cut: (0, 0),
        summand: cur,
    });
    Ok(out)
}

/// Record of one pad: the edge pair cut, the sign rule value and the chosen
/// over-pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadRecord {
    pub cut: (u32, u32),
    pub epsilon: i8,
    pub bl_tr_over: bool,
    pub delta_writhe: i64,
}

/// Joins the summands of a composite diagram with `2T`-crossing twist pads
/// until no separating edge pair remains. Each pad is a band between the
/// edges on either side of the cut along one of its faces; its handedness
/// is the one keeping the diagram alternating.
pub fn rejoin_with_pads(
    k: &PdDiagram,
    decomposition: &[Splice],
    t: u64,
) -> Result<(PdDiagram, Vec<PadRecord>)> {
    let mut cur = k.clone();
    let mut pads = Vec::new();
    let limit = decomposition.len().max(1) * 4 + cur.crossing_count();
    while let Some(&(e, f, _)) = prime_cuts(&cur).first() {
        if pads.len() > limit {
            return Err(Error::Internal("padding does not terminate".into()));
        }
        let faces = cur.faces();
        let mut chosen = None;
        for d in [cur.tail(e), cur.head(e)] {
            let face = faces.face_of(d);
            let walk = faces.boundary(face);
            let i = walk.iter().position(|&x| x == d).expect("dart on its face");
            let d1 = walk[(i + walk.len() - 1) % walk.len()];
            let d2 = walk[(i + 1) % walk.len()];
            let (g1, g2) = (cur.label_at(d1), cur.label_at(d2));
            if g1 != g2 && ![e, f].contains(&g1) && ![e, f].contains(&g2) {
                chosen = Some((d1, d2));
                break;
            }
        }
        let (d1, d2) =
            chosen.ok_or_else(|| Error::Internal(format!("no pad site at cut ({e}, {f})")))?;
        let epsilon: i8 = if dart_slot(cur.head(e)) == 0 { -1 } else { 1 };
        let mut done = None;
        for over in [true, false] {
            let cand = insert_band(&cur, d1, d2, &vec![over; 2 * t as usize])?;
            if cand.is_alternating() {
                done = Some((cand, over));
                break;
            }
        }
        let (next, over) = done.ok_or_else(|| {
            Error::Internal(format!("no alternating pad at cut ({e}, {f})"))
        })?;
        pads.push(PadRecord {
            cut: (e, f),
            epsilon,
            bl_tr_over: over,
            delta_writhe: next.writhe() - cur.writhe(),
        });
        cur = next;
    }
    Ok((cur, pads))
}

/// Trivial, standard closed 2-braid, or neither.
pub fn recognize_special(k: &PdDiagram) -> Result<Special> {
    if k.crossing_count() == 0 {
        return Ok(Special::Trivial);
    }
    let signs = k.signs();
    let same_sign = signs.iter().all(|&s| s == signs[0]);
    let two_vertices = [Shading::Black, Shading::White].iter().any(|&s| {
        let g = checkerboard(k, s);
        g.vertex_count() == 2 && g.edges.iter().all(|e| e.u != e.v)
    });
    if same_sign && two_vertices {
        let p = k.writhe();
        if p % 2 == 0 {
            return Err(Error::Internal(format!(
                "closed 2-braid with even p = {p} has two components"
            )));
        }
        return Ok(Special::Torus(p));
    }
    Ok(Special::Hyperbolic)
}

/// Rows of the fallback 3-plat.
pub const FALLBACK_ROWS: usize = 13;

/// Highly twisted alternating 3-plat carrying the `(2, p)` torus knot with
/// one extra unit of framing. Row 1 is `(2T+1, p)`, the remaining rows
/// alternate `(−2T, −2T, −2T)` and `(2T, 2T)`; everything is negated for
/// negative `p`.
pub fn torus_fallback(p: i64, t: u64) -> Result<PlatDiagram> {
    if p % 2 == 0 {
        return Err(Error::InvalidArgument(format!("p = {p} must be odd")));
    }
    if t < 2 {
        return Err(Error::InvalidArgument("T must be at least 2".into()));
    }
    if p.abs() < 3 {
        return Err(Error::InvalidArgument(format!("|p| = {} must be at least 3", p.abs())));
    }
    let s = p.signum();
    let t = t as i64;
    let mut rows = vec![vec![s * (2 * t + 1), p]];
    for i in 1..FALLBACK_ROWS {
        rows.push(if i % 2 == 1 {
            vec![-s * 2 * t; 3]
        } else {
            vec![s * 2 * t; 2]
        });
    }
    PlatDiagram::new(3, rows)
}

/// Full pipeline with `T` taken from the theory.
pub fn reduce_alternating(k: &PdDiagram, theory: &Theory) -> Result<AltReductionReport> {
    reduce_alternating_with(k, theory.pad_unit()?)
}

pub fn reduce_alternating_with(k: &PdDiagram, t: u64) -> Result<AltReductionReport> {
    k.require_knot()?;
    let mut steps = Vec::new();
    let mut r = 0i64;

    let (k1, flips) = make_alternating(k, t)?;
    if !flips.is_empty() {
        steps.push(AuditStep::new(
            "make_alternating",
            flips.iter().map(|&x| x as i64).collect(),
            k1.writhe() - k.writhe(),
            None,
        ));
    }

    let (k2, dw, nug) = remove_nugatory(&k1)?;
    r += dw;
    steps.extend(nug);

    let decomposition = prime_decompose(&k2)?;
    let (k3, pads) = if decomposition.len() > 1 {
        rejoin_with_pads(&k2, &decomposition, t)?
    } else {
        (k2.clone(), Vec::new())
    };
    for pad in &pads {
        steps.push(AuditStep::new(
            "pad",
            vec![pad.cut.0 as i64, pad.cut.1 as i64],
            pad.delta_writhe,
            None,
        ));
    }

    let (output, case, plat) = match recognize_special(&k3)? {
        Special::Hyperbolic => (k3, Case::Hyperbolic, None),
        Special::Torus(p) => {
            let plat = torus_fallback(p, t)?;
            let out = plat.to_pd()?;
            r += p.signum();
            steps.push(AuditStep::new(
                "torus_fallback",
                vec![p],
                out.writhe() - k3.writhe(),
                Some(p.signum()),
            ));
            (out, Case::TorusFallback, Some(plat))
        }
        Special::Trivial => {
            let p = 2 * t as i64 + 1;
            let plat = torus_fallback(p, t)?;
            let out = plat.to_pd()?;
            r += 2;
            steps.push(AuditStep::new("unknot_fallback", vec![p], out.writhe(), Some(2)));
            (out, Case::UnknotFallback, Some(plat))
        }
    };
    Ok(AltReductionReport {
        crossings_before: k.crossing_count(),
        crossings_after: output.crossing_count(),
        output,
        r,
        case,
        pad_unit: t,
        steps,
        plat,
    })
}
