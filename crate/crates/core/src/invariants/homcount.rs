//! Counting homomorphisms from the knot group to `G` sending meridians into
//! the class `C`, as colourings of diagram arcs.
//!
//! At a positive crossing with over colour `g` the under strand changes
//! from `h` to `g h g⁻¹`; at a negative one to `g⁻¹ h g`.

use std::collections::HashMap;

use super::bracket::{absorption_order, FRONTIER_STATE_CAP};
use crate::diagram::plat::{box_columns, PlatDiagram};
use crate::diagram::PdDiagram;
use crate::error::{Error, Result};
use crate::group::FiniteGroupWithClass;

pub const DEFAULT_ARC_CAP: usize = 60;
pub const DEFAULT_SEED_BUDGET: u64 = 50_000_000;

pub fn homcount_pd(k: &PdDiagram, g: &FiniteGroupWithClass) -> Result<u64> {
    homcount_pd_with_cap(k, g, DEFAULT_ARC_CAP)
}

/// Number of arcs: maximal strands running over crossings between two
/// under-passes.
pub fn arc_count(k: &PdDiagram) -> usize {
    let e = k.edge_count();
    let mut parent: Vec<usize> = (0..=e).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for cr in k.crossings() {
        let (a, b) = (find(&mut parent, cr[1] as usize), find(&mut parent, cr[3] as usize));
        parent[a] = b;
    }
    (1..=e).filter(|&l| find(&mut parent, l) == l).count()
}

/// Frontier count: crossings are absorbed in the same order as the bracket
/// state sum, carrying for each colouring of the open edges the number of
/// ways to reach it.
pub fn homcount_pd_with_cap(k: &PdDiagram, g: &FiniteGroupWithClass, cap: usize) -> Result<u64> {
    let c = g.class().len() as u64;
    if k.crossing_count() == 0 {
        return Ok(c.pow(k.free_loops() as u32));
    }
    let arcs = arc_count(k);
    if arcs > cap {
        return Err(Error::CapExceeded {
            what: "colouring arcs",
            size: arcs,
            cap,
        });
    }
    let seq = absorption_order(k);
    let e = k.edge_count();
    let mut seen = vec![0u8; e + 1];
    let mut frontier: Vec<u32> = Vec::new();
    let mut states: HashMap<Vec<u16>, u64> = HashMap::from([(Vec::new(), 1u64)]);
    for &x in &seq {
        let cr = k.crossings()[x];
        let positive = k.sign(x) > 0;
        for &l in &cr {
            seen[l as usize] += 1;
        }
        let mut fresh: Vec<u32> = Vec::new();
        for &l in &cr {
            if seen[l as usize] == 1 && !frontier.contains(&l) && !fresh.contains(&l) {
                fresh.push(l);
            }
        }
        let next: Vec<u32> = frontier
            .iter()
            .copied()
            .filter(|&l| seen[l as usize] < 2)
            .chain(fresh)
            .collect();
        let mut out: HashMap<Vec<u16>, u64> = HashMap::with_capacity(states.len());
        for (key, &count) in &states {
            let known = |l: u32| frontier.iter().position(|&f| f == l).map(|i| key[i] as usize);
            for local in crossing_colourings(g, cr, positive, known) {
                let colour_of = |l: u32| local.iter().find(|(m, _)| *m == l).map(|&(_, v)| v);
                let nk: Vec<u16> = next
                    .iter()
                    .map(|&l| {
                        colour_of(l)
                            .or_else(|| known(l))
                            .expect("frontier edge coloured") as u16
                    })
                    .collect();
                let slot = out.entry(nk).or_insert(0);
                *slot = slot.wrapping_add(count);
            }
        }
        if out.len() > FRONTIER_STATE_CAP {
            return Err(Error::CapExceeded {
                what: "colouring frontier states",
                size: out.len(),
                cap: FRONTIER_STATE_CAP,
            });
        }
        states = out;
        frontier = next;
    }
    let total = states.get(&Vec::new()).copied().unwrap_or(0);
    Ok(total.wrapping_mul(c.pow(k.free_loops() as u32)))
}

/// All colourings of the labels at one crossing that satisfy its relation
/// and agree with the colours already fixed by `known`.
fn crossing_colourings(
    g: &FiniteGroupWithClass,
    cr: [u32; 4],
    positive: bool,
    known: impl Fn(u32) -> Option<usize>,
) -> Vec<Vec<(u32, usize)>> {
    let mut out = Vec::new();
    let set = |asg: &mut Vec<(u32, usize)>, l: u32, v: usize| -> bool {
        if let Some(w) = known(l) {
            return w == v;
        }
        if let Some(&(_, w)) = asg.iter().find(|(m, _)| *m == l) {
            return w == v;
        }
        asg.push((l, v));
        true
    };
    let lookup = |asg: &Vec<(u32, usize)>, l: u32| -> Option<usize> {
        known(l).or_else(|| asg.iter().find(|(m, _)| *m == l).map(|&(_, v)| v))
    };
    let overs: Vec<usize> = match known(cr[1]).or_else(|| known(cr[3])) {
        Some(o) => vec![o],
        None => g.class().to_vec(),
    };
    for o in overs {
        let mut base = Vec::new();
        if !set(&mut base, cr[1], o) || !set(&mut base, cr[3], o) {
            continue;
        }
        let fwd = |a: usize| if positive { g.conj(o, a) } else { g.conj(g.inv(o), a) };
        let back = |b: usize| if positive { g.conj(g.inv(o), b) } else { g.conj(o, b) };
        let ins: Vec<usize> = match (lookup(&base, cr[0]), lookup(&base, cr[2])) {
            (Some(a), _) => vec![a],
            (None, Some(b)) => vec![back(b)],
            (None, None) => g.class().to_vec(),
        };
        for a in ins {
            let mut asg = base.clone();
            if set(&mut asg, cr[0], a) && set(&mut asg, cr[2], fwd(a)) {
                out.push(asg);
            }
        }
    }
    out
}

/// Sweep up the plat carrying the colours of all strands, each read with
/// the strand oriented upward. Seeds range over the bottom cups; the top
/// caps filter.
pub fn homcount_plat(p: &PlatDiagram, g: &FiniteGroupWithClass) -> Result<u64> {
    homcount_plat_with_budget(p, g, DEFAULT_SEED_BUDGET)
}

pub fn homcount_plat_with_budget(p: &PlatDiagram, g: &FiniteGroupWithClass, budget: u64) -> Result<u64> {
    let m = p.m();
    let c = g.class();
    // conjugation acts transitively on C, so the first cup is pinned to
    // c[0] and the count scaled by |C|
    let seeds = (c.len() as u64).checked_pow(m as u32 - 1).unwrap_or(u64::MAX);
    if seeds > budget {
        return Err(Error::CapExceeded {
            what: "plat colouring seeds",
            size: seeds.min(usize::MAX as u64) as usize,
            cap: budget.min(usize::MAX as u64) as usize,
        });
    }
    let up = p.cup_orientations();
    let order = g.order();
    let mut tables: HashMap<i64, Vec<(u32, u32)>> = HashMap::new();
    let mut boxes: Vec<(usize, i64)> = Vec::new();
    for (i, row) in p.rows().iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if a != 0 {
                tables.entry(a).or_insert_with(|| twist_table(g, a));
                boxes.push((box_columns(i, j).0 - 1, a));
            }
        }
    }
    let w = 2 * m;
    let mut digits = vec![0usize; m];
    let mut count = 0u64;
    let mut col = vec![0usize; w];
    loop {
        for j in 0..m {
            let h = c[digits[j]];
            let left = if up[j] { h } else { g.inv(h) };
            col[2 * j] = left;
            col[2 * j + 1] = g.inv(left);
        }
        for &(l, a) in &boxes {
            let (nl, nr) = tables[&a][col[l] * order + col[l + 1]];
            col[l] = nl as usize;
            col[l + 1] = nr as usize;
        }
        let ok = (1..=w).all(|a| {
            let b = p.top_partner(a);
            col[b - 1] == g.inv(col[a - 1])
        });
        if ok {
            count += 1;
        }
        // next seed
        let mut j = 1;
        while j < m {
            digits[j] += 1;
            if digits[j] < c.len() {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        if j == m {
            break;
        }
    }
    Ok(count * c.len() as u64)
}

/// Action of a twist box with coefficient `a` on the colour pair
/// `(left, right)`, indexed by `left·|G| + right`.
fn twist_table(g: &FiniteGroupWithClass, a: i64) -> Vec<(u32, u32)> {
    let n = g.order();
    let mut out = Vec::with_capacity(n * n);
    for sw in 0..n {
        for se in 0..n {
            let (mut l, mut r) = (sw, se);
            for _ in 0..a.unsigned_abs() {
                if a > 0 {
                    // over strand SW→NE keeps its colour; SE moves to NW
                    (l, r) = (g.conj(l, r), l);
                } else {
                    // over strand SE→NW; SW moves to NE
                    (l, r) = (r, g.conj(g.inv(r), l));
                }
            }
            out.push((l as u32, r as u32));
        }
    }
    out
}
