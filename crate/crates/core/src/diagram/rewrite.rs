//! Local rewrites on oriented diagrams. Every rewrite builds oriented raw
//! crossings and revalidates through [`PdDiagram::from_oriented`].

use super::{dart_crossing, dart_slot, Dart, PdDiagram};
use crate::error::{Error, Result};

/// Crossing with over and under strands exchanged, reoriented.
pub fn flipped(c: [u32; 4], sign: i8) -> [u32; 4] {
    if sign > 0 {
        [c[3], c[0], c[1], c[2]]
    } else {
        [c[1], c[2], c[3], c[0]]
    }
}

/// A diagonal chain of `len` copies of crossing `y` (oriented, sign `sign`)
/// occupying the same four ends. Consecutive copies share a bigon; along both
/// strands the passages alternate, and every copy has the sign of `y`.
pub fn crossing_chain(y: [u32; 4], sign: i8, len: usize, next_label: &mut u32) -> Vec<[u32; 4]> {
    assert!(len >= 1 && len % 2 == 1, "chain length must be odd");
    let mut east_north = Vec::with_capacity(len - 1);
    let mut south_west = Vec::with_capacity(len - 1);
    for _ in 0..len - 1 {
        east_north.push(*next_label);
        south_west.push(*next_label + 1);
        *next_label += 2;
    }
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let w = if i == 0 { y[0] } else { south_west[i - 1] };
        let n = if i == 0 { y[3] } else { east_north[i - 1] };
        let e = if i == len - 1 { y[2] } else { east_north[i] };
        let s = if i == len - 1 { y[1] } else { south_west[i] };
        // odd copies carry y's under-strand west to east; even copies carry
        // y's over-strand, which runs west to east only when it enters at n
        let forward = i % 2 == 0 || sign > 0;
        out.push(if forward { [w, s, e, n] } else { [e, n, w, s] });
    }
    out
}

/// Inserts a band of crossings between the edges leaving darts `d1` and `d2`,
/// which must lie on a common face. `bl_tr_over[t]` chooses which diagonal of
/// the `t`-th crossing passes over; the band length must be even so that
/// edge connectivity is kept.
pub fn insert_band(k: &PdDiagram, d1: Dart, d2: Dart, bl_tr_over: &[bool]) -> Result<PdDiagram> {
    let len = bl_tr_over.len();
    if len == 0 || len % 2 == 1 {
        return Err(Error::InvalidArgument("band length must be even and positive".into()));
    }
    let faces = k.faces();
    if faces.face_of(d1) != faces.face_of(d2) {
        return Err(Error::InvalidArgument("band darts lie on different faces".into()));
    }
    let g1 = k.label_at(d1);
    let g2 = k.label_at(d2);
    if g1 == g2 {
        return Err(Error::InvalidArgument("band needs two distinct edges".into()));
    }
    let o1 = k.opposite(d1);
    let o2 = k.opposite(d2);
    let fwd1 = k.tail(g1) == d1;
    let fwd2 = k.tail(g2) == o2;

    let mut next = k.max_label() + 1;
    let q = next;
    let s = next + 1;
    next += 2;
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for _ in 0..len - 1 {
        upper.push(next);
        lower.push(next + 1);
        next += 2;
    }

    let mut crossings = k.crossings().to_vec();
    crossings[dart_crossing(o1)][dart_slot(o1)] = q;
    crossings[dart_crossing(o2)][dart_slot(o2)] = s;
    for (t, &over_bltr) in bl_tr_over.iter().enumerate() {
        let bl = if t == 0 { s } else { lower[t - 1] };
        let tl = if t == 0 { g1 } else { upper[t - 1] };
        let br = if t == len - 1 { g2 } else { lower[t] };
        let tr = if t == len - 1 { q } else { upper[t] };
        let ring = [bl, br, tr, tl];
        // strand one runs TL-BR on even t (0-based)
        let tlbr_is_one = t % 2 == 0;
        let (under_left, under_right, under_is_one) = if over_bltr {
            (3usize, 1usize, tlbr_is_one)
        } else {
            (0, 2, !tlbr_is_one)
        };
        let forward = if under_is_one { fwd1 } else { fwd2 };
        let start = if forward { under_left } else { under_right };
        crossings.push([0, 1, 2, 3].map(|i| ring[(start + i) % 4]));
    }
    PdDiagram::from_oriented(crossings, k.free_loops())
}

/// Adds a one-crossing kink on edge `label`.
pub fn add_kink(k: &PdDiagram, label: u32, sign: i8, over_first: bool) -> Result<PdDiagram> {
    if k.crossing_count() == 0 && k.free_loops() > 0 && label == 1 {
        let c = kink_crossing(1, 2, 1, sign, over_first);
        return PdDiagram::from_oriented(vec![c], k.free_loops() - 1);
    }
    if label == 0 || label > k.max_label() {
        return Err(Error::InvalidEdge(label));
    }
    let mut crossings = k.crossings().to_vec();
    let e = label;
    let exit = k.max_label() + 1;
    let l = k.max_label() + 2;
    let h = k.head(e);
    crossings[dart_crossing(h)][dart_slot(h)] = exit;
    crossings.push(kink_crossing(e, l, exit, sign, over_first));
    PdDiagram::from_oriented(crossings, k.free_loops())
}

fn kink_crossing(enter: u32, lp: u32, exit: u32, sign: i8, over_first: bool) -> [u32; 4] {
    match (over_first, sign > 0) {
        (false, true) => [enter, exit, lp, lp],
        (false, false) => [enter, lp, lp, exit],
        (true, false) => [lp, enter, exit, lp],
        (true, true) => [lp, lp, exit, enter],
    }
}

/// Two kinks of opposite sign on edge `label`; writhe is unchanged.
pub fn apply_r1_pair(k: &PdDiagram, label: u32) -> Result<PdDiagram> {
    if k.crossing_count() == 0 {
        if label != 1 {
            return Err(Error::InvalidEdge(label));
        }
        // kinks on the bare circle: edges 1 -> K1 -> 2 -> K2 -> 1
        let crossings = vec![
            kink_crossing(1, 3, 2, 1, true),
            kink_crossing(2, 4, 1, -1, false),
        ];
        return PdDiagram::from_oriented(crossings, k.free_loops() - 1);
    }
    if label == 0 || label > k.max_label() {
        return Err(Error::InvalidEdge(label));
    }
    let base = k.max_label();
    let (mid, last, l1, l2) = (base + 1, base + 2, base + 3, base + 4);
    let mut crossings = k.crossings().to_vec();
    let h = k.head(label);
    crossings[dart_crossing(h)][dart_slot(h)] = last;
    crossings.push(kink_crossing(label, l1, mid, 1, true));
    crossings.push(kink_crossing(mid, l2, last, -1, false));
    PdDiagram::from_oriented(crossings, k.free_loops())
}

/// Deletes crossing `x`, joining its under ends and its over ends. On a
/// nugatory crossing this is the untwisting move; the rest of the diagram
/// keeps its rotation system.
pub fn untwist(k: &PdDiagram, x: usize) -> Result<PdDiagram> {
    untwist_all(k, &[x])
}

/// [`untwist`] applied to several crossings at once.
pub fn untwist_all(k: &PdDiagram, xs: &[usize]) -> Result<PdDiagram> {
    let n = k.crossing_count();
    let mut removed = vec![false; n];
    for &x in xs {
        if x >= n {
            return Err(Error::InvalidArgument(format!("no crossing {x}")));
        }
        removed[x] = true;
    }
    let mut parent: Vec<u32> = (0..=k.max_label()).collect();
    fn find(p: &mut [u32], mut a: u32) -> u32 {
        while p[a as usize] != a {
            p[a as usize] = p[p[a as usize] as usize];
            a = p[a as usize];
        }
        a
    }
    for &x in xs {
        let c = k.crossings()[x];
        for (a, b) in [(c[0], c[2]), (c[1], c[3])] {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            parent[ra as usize] = rb;
        }
    }
    let mut crossings = Vec::with_capacity(n - xs.len());
    let mut kept = vec![false; parent.len()];
    for (i, cr) in k.crossings().iter().enumerate() {
        if !removed[i] {
            let c = cr.map(|l| find(&mut parent, l));
            for l in c {
                kept[l as usize] = true;
            }
            crossings.push(c);
        }
    }
    let mut roots: Vec<u32> = xs
        .iter()
        .flat_map(|&x| k.crossings()[x])
        .map(|l| find(&mut parent, l))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    let loops = roots.iter().filter(|&&r| !kept[r as usize]).count();
    PdDiagram::from_oriented(crossings, k.free_loops() + loops)
}

/// Oriented connected sum joining edge `e1` of `a` with edge `e2` of `b`.
pub fn connected_sum(a: &PdDiagram, e1: u32, b: &PdDiagram, e2: u32) -> Result<PdDiagram> {
    if a.crossing_count() == 0 {
        return Ok(b.clone());
    }
    if b.crossing_count() == 0 {
        return Ok(a.clone());
    }
    if e1 == 0 || e1 > a.max_label() {
        return Err(Error::InvalidEdge(e1));
    }
    if e2 == 0 || e2 > b.max_label() {
        return Err(Error::InvalidEdge(e2));
    }
    let off = a.max_label();
    let n = a.crossing_count();
    let mut crossings = a.crossings().to_vec();
    crossings.extend(b.crossings().iter().map(|c| c.map(|l| l + off)));
    let h1 = a.head(e1);
    let h2 = b.head(e2);
    crossings[dart_crossing(h1)][dart_slot(h1)] = e2 + off;
    crossings[n + dart_crossing(h2)][dart_slot(h2)] = e1;
    PdDiagram::from_oriented(crossings, a.free_loops() + b.free_loops())
}

/// Crossing sets on the two sides of the edge pair `(e, f)`, or `None` when
/// removing both edges leaves the crossing graph connected.
pub fn cut_sides(k: &PdDiagram, e: u32, f: u32) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = k.crossing_count();
    let mut adj = vec![Vec::new(); n];
    for l in 1..=k.max_label() {
        if l == e || l == f {
            continue;
        }
        let a = dart_crossing(k.tail(l));
        let b = dart_crossing(k.head(l));
        adj[a].push(b);
        adj[b].push(a);
    }
    let start = dart_crossing(k.tail(e));
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&x| seen[x]);
    if b.is_empty() {
        None
    } else {
        Some((a, b))
    }
}

/// Cuts edges `e` and `f` and closes each side into its own diagram.
/// Returns the side containing the tail of `e` first.
pub fn split_at_cut(k: &PdDiagram, e: u32, f: u32) -> Result<(PdDiagram, PdDiagram)> {
    let (a, b) = cut_sides(k, e, f)
        .ok_or_else(|| Error::InvalidArgument(format!("edges {e}, {f} do not cut")))?;
    Ok((close_side(k, &a, e, f)?, close_side(k, &b, e, f)?))
}

fn close_side(k: &PdDiagram, side: &[usize], e: u32, f: u32) -> Result<PdDiagram> {
    let inside = |d: Dart| side.contains(&dart_crossing(d));
    let mut crossings: Vec<[u32; 4]> = side.iter().map(|&x| k.crossings()[x]).collect();
    let pos = |d: Dart| side.iter().position(|&x| x == dart_crossing(d)).unwrap();
    // the cut edge leaving this side keeps its label; the one entering is
    // renamed to it
    let (leaving, entering) = if inside(k.tail(e)) { (e, f) } else { (f, e) };
    if !inside(k.tail(leaving)) || !inside(k.head(entering)) {
        return Err(Error::Internal("cut edges do not cross the cut".into()));
    }
    let h = k.head(entering);
    crossings[pos(h)][dart_slot(h)] = leaving;
    PdDiagram::from_oriented(crossings, 0)
}
