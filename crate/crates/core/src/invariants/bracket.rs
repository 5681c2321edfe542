//! Kauffman bracket at `A = ζ_N`, normalised so the crossingless unknot is 1.
//!
//! The A-smoothing of `[a, b, c, d]` joins `a`–`b` and `c`–`d`; the
//! B-smoothing joins `a`–`d` and `b`–`c`.

use std::collections::HashMap;

use crate::cyclotomic::{require_order, CyclotomicInt, RawCyclotomic};
use crate::diagram::plat::{box_columns, PlatDiagram};
use crate::diagram::PdDiagram;
use crate::error::{Error, Result};

pub const DEFAULT_CROSSING_CAP: usize = 26;
pub const DEFAULT_PLAT_CAP: usize = 7;
/// Bound on simultaneous frontier states before giving up.
pub const FRONTIER_STATE_CAP: usize = 1 << 21;

pub fn bracket_pd(k: &PdDiagram, order: u32) -> Result<CyclotomicInt> {
    bracket_pd_with_cap(k, order, DEFAULT_CROSSING_CAP)
}

/// Frontier state sum: crossings are absorbed one at a time, keeping for
/// every pairing of open edge ends its accumulated weight.
pub fn bracket_pd_with_cap(k: &PdDiagram, order: u32, cap: usize) -> Result<CyclotomicInt> {
    require_order(order)?;
    let n = k.crossing_count();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "bracket crossings",
            size: n,
            cap,
        });
    }
    if n == 0 {
        return Ok(CyclotomicInt::loop_value(order).pow(k.free_loops().saturating_sub(1) as u64));
    }
    let seq = absorption_order(k);
    let e = k.edge_count();
    // position of each label in the current frontier, or NONE
    const NONE: usize = usize::MAX;
    let mut seen = vec![0u8; e + 1];
    let mut frontier: Vec<u32> = Vec::new();
    let mut states: HashMap<Vec<u16>, RawCyclotomic> = HashMap::new();
    states.insert(Vec::new(), RawCyclotomic::monomial(order, 0, 1));

    for (step, &x) in seq.iter().enumerate() {
        let c = k.crossings()[x];
        for &l in &c {
            seen[l as usize] += 1;
        }
        // next frontier: old entries still open, then labels opened here
        let next: Vec<u32> = frontier
            .iter()
            .copied()
            .filter(|&l| seen[l as usize] < 2)
            .chain({
                let mut fresh: Vec<u32> = c
                    .iter()
                    .copied()
                    .filter(|&l| seen[l as usize] == 1 && !frontier.contains(&l))
                    .collect();
                fresh.dedup();
                fresh
            })
            .collect();
        let last = step + 1 == seq.len();

        // local node ids: frontier positions, then the four slots of x
        let f = frontier.len();
        let mut pos_in_next = vec![NONE; e + 1];
        for (i, &l) in next.iter().enumerate() {
            pos_in_next[l as usize] = i;
        }
        let mut old_pos = vec![NONE; e + 1];
        for (i, &l) in frontier.iter().enumerate() {
            old_pos[l as usize] = i;
        }

        let mut out: HashMap<Vec<u16>, RawCyclotomic> = HashMap::with_capacity(states.len() * 2);
        for (pairing, amp) in &states {
            for (pairs, shift) in [([(0usize, 1usize), (2, 3)], 1i64), ([(0, 3), (1, 2)], -1)] {
                // node graph: 0..f frontier ends, f..f+4 slots
                let mut adj = vec![[NONE; 2]; f + 4];
                let link = |adj: &mut Vec<[usize; 2]>, a: usize, b: usize| {
                    let s = if adj[a][0] == NONE { 0 } else { 1 };
                    adj[a][s] = b;
                    let s = if adj[b][0] == NONE { 0 } else { 1 };
                    adj[b][s] = a;
                };
                for (i, &p) in pairing.iter().enumerate() {
                    if (p as usize) > i {
                        link(&mut adj, i, p as usize);
                    }
                }
                for (a, b) in pairs {
                    link(&mut adj, f + a, f + b);
                }
                // a slot whose label was already open joins that frontier end;
                // a label occurring twice at x joins its two slots
                for s in 0..4 {
                    let l = c[s] as usize;
                    if old_pos[l] != NONE {
                        link(&mut adj, f + s, old_pos[l]);
                    } else if let Some(t) = (s + 1..4).find(|&t| c[t] as usize == l) {
                        link(&mut adj, f + s, f + t);
                    }
                }
                // endpoints: next-frontier labels, represented by one node
                let mut endpoint = vec![NONE; f + 4];
                for s in 0..4 {
                    let l = c[s] as usize;
                    if pos_in_next[l] != NONE && old_pos[l] == NONE {
                        endpoint[f + s] = pos_in_next[l];
                    }
                }
                for (i, &l) in frontier.iter().enumerate() {
                    if pos_in_next[l as usize] != NONE {
                        endpoint[i] = pos_in_next[l as usize];
                    }
                }
                let mut visited = vec![false; f + 4];
                let mut new_pairing = vec![0u16; next.len()];
                for start in 0..f + 4 {
                    if endpoint[start] == NONE || visited[start] {
                        continue;
                    }
                    let (mut prev, mut cur) = (NONE, start);
                    loop {
                        visited[cur] = true;
                        let nb = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
                        if nb == NONE {
                            break;
                        }
                        prev = cur;
                        cur = nb;
                        if endpoint[cur] != NONE {
                            visited[cur] = true;
                            break;
                        }
                    }
                    new_pairing[endpoint[start]] = endpoint[cur] as u16;
                    new_pairing[endpoint[cur]] = endpoint[start] as u16;
                }
                let mut loops = 0usize;
                for start in 0..f + 4 {
                    if visited[start] || adj[start][0] == NONE {
                        continue;
                    }
                    loops += 1;
                    let (mut prev, mut cur) = (NONE, start);
                    while !visited[cur] {
                        visited[cur] = true;
                        let nb = if adj[cur][0] != prev || adj[cur][0] == adj[cur][1] {
                            adj[cur][0]
                        } else {
                            adj[cur][1]
                        };
                        prev = cur;
                        cur = nb;
                    }
                }
                if last {
                    loops -= 1;
                }
                let mut term = RawCyclotomic::zero(order);
                term.add_shifted(amp, shift, 1);
                for _ in 0..loops {
                    term = term.times_loop();
                }
                out.entry(new_pairing)
                    .and_modify(|a| a.add_assign(&term))
                    .or_insert(term);
            }
        }
        out.retain(|_, v| !v.is_zero());
        if out.len() > FRONTIER_STATE_CAP {
            return Err(Error::CapExceeded {
                what: "bracket frontier states",
                size: out.len(),
                cap: FRONTIER_STATE_CAP,
            });
        }
        states = out;
        frontier = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_else(|| RawCyclotomic::zero(order));
    let mut value = total.reduce();
    let delta = CyclotomicInt::loop_value(order);
    for _ in 0..k.free_loops() {
        value = &value * &delta;
    }
    Ok(value)
}

/// Absorption order keeping the open-end frontier small: the best of the
/// given crossing order and greedy orders grown from a few seeds, scored by
/// peak then total frontier width.
pub(crate) fn absorption_order(k: &PdDiagram) -> Vec<usize> {
    let n = k.crossing_count();
    let mut best: Option<((usize, usize), Vec<usize>)> = None;
    let mut consider = |seq: Vec<usize>| {
        let score = frontier_profile(k, &seq);
        if best.as_ref().map_or(true, |(s, _)| score < *s) {
            best = Some((score, seq));
        }
    };
    consider((0..n).collect());
    let seeds = n.min(8);
    for i in 0..seeds {
        consider(greedy_order(k, i * n / seeds));
    }
    best.map(|(_, s)| s).unwrap_or_default()
}

fn open_delta(c: &[u32; 4], seen: &[u8]) -> i64 {
    let mut delta = 0i64;
    for (s, &l) in c.iter().enumerate() {
        if c[..s].contains(&l) {
            continue;
        }
        let here = c.iter().filter(|&&m| m == l).count();
        match (seen[l as usize], here) {
            (0, 1) => delta += 1,
            (1, 1) => delta -= 1,
            _ => {}
        }
    }
    delta
}

fn frontier_profile(k: &PdDiagram, seq: &[usize]) -> (usize, usize) {
    let mut seen = vec![0u8; k.edge_count() + 1];
    let (mut open, mut peak, mut total) = (0i64, 0usize, 0usize);
    for &x in seq {
        let c = k.crossings()[x];
        open += open_delta(&c, &seen);
        for &l in &c {
            seen[l as usize] += 1;
        }
        peak = peak.max(open as usize);
        total += open as usize;
    }
    (peak, total)
}

/// Repeatedly absorbs the crossing that grows the frontier least; ties go
/// to the lowest index.
fn greedy_order(k: &PdDiagram, start: usize) -> Vec<usize> {
    let n = k.crossing_count();
    let mut seen = vec![0u8; k.edge_count() + 1];
    let mut done = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    let mut next = Some(start);
    while let Some(x) = next {
        done[x] = true;
        for &l in &k.crossings()[x] {
            seen[l as usize] += 1;
        }
        seq.push(x);
        next = (0..n)
            .filter(|&y| !done[y])
            .min_by_key(|&y| (open_delta(&k.crossings()[y], &seen), y));
    }
    seq
}

/// Temperley–Lieb sweep through the rows of a plat. States are planar
/// matchings of the `2m` strand ends at the current height.
pub fn bracket_plat(p: &PlatDiagram, order: u32) -> Result<CyclotomicInt> {
    bracket_plat_with_cap(p, order, DEFAULT_PLAT_CAP)
}

pub fn bracket_plat_with_cap(p: &PlatDiagram, order: u32, cap: usize) -> Result<CyclotomicInt> {
    require_order(order)?;
    let m = p.m();
    if m > cap {
        return Err(Error::CapExceeded {
            what: "plat width",
            size: m,
            cap,
        });
    }
    let w = 2 * m;
    let cups: Vec<u8> = (0..w).map(|i| (i ^ 1) as u8).collect();
    let mut states: HashMap<Vec<u8>, RawCyclotomic> = HashMap::new();
    states.insert(cups, RawCyclotomic::monomial(order, 0, 1));
    let mut powers: HashMap<i64, (RawCyclotomic, RawCyclotomic)> = HashMap::new();
    for (i, row) in p.rows().iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let (c, _) = box_columns(i, j);
            let c = c - 1;
            let (alpha, beta) = powers
                .entry(a)
                .or_insert_with(|| twist_power(order, a))
                .clone();
            let mut out: HashMap<Vec<u8>, RawCyclotomic> =
                HashMap::with_capacity(states.len() * 2);
            for (mat, amp) in &states {
                let t = amp.mul(&alpha);
                out.entry(mat.clone()).and_modify(|v| v.add_assign(&t)).or_insert(t);

                let mut t = amp.mul(&beta);
                let mut nm = mat.clone();
                let (pa, pb) = (mat[c] as usize, mat[c + 1] as usize);
                if pa == c + 1 {
                    t = t.times_loop();
                } else {
                    nm[pa] = pb as u8;
                    nm[pb] = pa as u8;
                }
                nm[c] = (c + 1) as u8;
                nm[c + 1] = c as u8;
                out.entry(nm).and_modify(|v| v.add_assign(&t)).or_insert(t);
            }
            out.retain(|_, v| !v.is_zero());
            states = out;
        }
    }
    let mut total = RawCyclotomic::zero(order);
    for (mat, amp) in &states {
        // loops formed by the state and the top caps
        let mut seen = vec![false; w];
        let mut loops = 0usize;
        for s in 0..w {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut cur = s;
            while !seen[cur] {
                seen[cur] = true;
                let a = mat[cur] as usize;
                seen[a] = true;
                cur = p.top_partner(a + 1) - 1;
            }
        }
        let mut t = amp.clone();
        for _ in 1..loops {
            t = t.times_loop();
        }
        total.add_assign(&t);
    }
    Ok(total.reduce())
}

/// `σ^a = α·1 + β·e` in the two-strand Temperley–Lieb algebra, where a
/// positive box is `σ = A·1 + A⁻¹·e`, a negative one `A⁻¹·1 + A·e`, and
/// `e² = δe`.
fn twist_power(order: u32, a: i64) -> (RawCyclotomic, RawCyclotomic) {
    let (id_shift, e_shift) = if a > 0 { (1i64, -1i64) } else { (-1, 1) };
    let mut alpha = RawCyclotomic::monomial(order, 0, 1);
    let mut beta = RawCyclotomic::zero(order);
    for _ in 0..a.unsigned_abs() {
        let mut nb = RawCyclotomic::zero(order);
        nb.add_shifted(&alpha, e_shift, 1);
        nb.add_shifted(&beta, id_shift, 1);
        let looped = beta.times_loop();
        nb.add_shifted(&looped, e_shift, 1);
        let mut na = RawCyclotomic::zero(order);
        na.add_shifted(&alpha, id_shift, 1);
        alpha = na;
        beta = nb;
    }
    (alpha, beta)
}

/// `⟨K⟩`; depends on the framing.
pub fn framed_invariant(k: &PdDiagram, order: u32) -> Result<CyclotomicInt> {
    bracket_pd(k, order)
}

/// `(−A³)^{−w(K)} ⟨K⟩`.
pub fn jones_value(k: &PdDiagram, order: u32) -> Result<CyclotomicInt> {
    jones_value_with_cap(k, order, DEFAULT_CROSSING_CAP)
}

pub fn jones_value_with_cap(k: &PdDiagram, order: u32, cap: usize) -> Result<CyclotomicInt> {
    let b = bracket_pd_with_cap(k, order, cap)?;
    Ok(&CyclotomicInt::twist_pow(order, -k.writhe()) * &b)
}
