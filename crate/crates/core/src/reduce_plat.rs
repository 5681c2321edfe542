//! Rewriting a knot diagram into a highly twisted standard plat.
//!
//! Route: Vogel moves bring the diagram into closed braid form, the braid
//! becomes a plat whose return strands pass under everything, the plat is
//! standardized (even row count, `m ≥ 3`, enough rows), and every twist
//! region is pushed away from zero by `2T`. The braid is shortened first;
//! the kinks lost to Markov destabilization are put back as curls under a
//! top cap, so the framed invariant is unchanged.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashSet};

use serde::Serialize;

use crate::diagram::braid::BraidWord;
use crate::diagram::plat::{row_len, PlatDiagram};
use crate::diagram::rewrite::insert_band;
use crate::diagram::PdDiagram;
use crate::error::{Error, Result};
use crate::theory::Theory;

/// Hyperbolic volume of the regular ideal tetrahedron, to the precision
/// used for the advisory bounds.
pub const V3: f64 = 1.01494;

/// Seifert circle of every edge label (index 0 unused).
pub fn seifert_circles(k: &PdDiagram) -> (Vec<usize>, usize) {
    let e = k.edge_count();
    let mut parent: Vec<usize> = (0..=e).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for (x, c) in k.crossings().iter().enumerate() {
        let pairs = seifert_pairs(*c, k.sign(x));
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
            parent[ra] = rb;
        }
    }
    let mut id = vec![usize::MAX; e + 1];
    let mut count = 0;
    for l in 1..=e {
        let r = find(&mut parent, l);
        if id[r] == usize::MAX {
            id[r] = count;
            count += 1;
        }
        id[l] = id[r];
    }
    (id, count)
}

/// Incoming edge joined to outgoing edge by the oriented smoothing.
fn seifert_pairs(c: [u32; 4], sign: i8) -> [(u32, u32); 2] {
    if sign > 0 {
        [(c[0], c[1]), (c[3], c[2])]
    } else {
        [(c[0], c[3]), (c[1], c[2])]
    }
}

/// A face holding edges of two different Seifert circles that run the same
/// way around it. Returns the two darts.
fn find_defect(k: &PdDiagram, circle: &[usize]) -> Option<(usize, usize)> {
    let faces = k.faces();
    for walk in faces.iter() {
        for (i, &d1) in walk.iter().enumerate() {
            let l1 = k.label_at(d1);
            let a1 = k.tail(l1) == d1;
            for &d2 in &walk[i + 1..] {
                let l2 = k.label_at(d2);
                if circle[l1 as usize] != circle[l2 as usize] && (k.tail(l2) == d2) == a1 {
                    return Some((d1, d2));
                }
            }
        }
    }
    None
}

/// Applies Vogel moves until the Seifert circles are coherently nested.
/// Returns the braided diagram and the number of moves.
pub fn vogel_braided(k: &PdDiagram) -> Result<(PdDiagram, usize)> {
    let mut cur = k.clone();
    let limit = 4 * (k.crossing_count() + 2).pow(2);
    for moves in 0..=limit {
        let (circle, _) = seifert_circles(&cur);
        match find_defect(&cur, &circle) {
            None => return Ok((cur, moves)),
            Some((d1, d2)) => cur = insert_band(&cur, d1, d2, &[true, false])?,
        }
    }
    Err(Error::Internal("Vogel moves did not terminate".into()))
}

/// Braid word whose closure is regularly isotopic to `k`.
pub fn to_braid(k: &PdDiagram) -> Result<BraidWord> {
    k.require_knot()?;
    if k.crossing_count() == 0 {
        return BraidWord::new(1, Vec::new());
    }
    let (b, _) = vogel_braided(k)?;
    read_braid(&b)
}

/// Reads the braid word off a diagram whose Seifert circles are nested.
fn read_braid(k: &PdDiagram) -> Result<BraidWord> {
    let (circle, count) = seifert_circles(k);
    let n = k.crossing_count();
    let ends: Vec<(usize, usize)> = k
        .crossings()
        .iter()
        .enumerate()
        .map(|(x, c)| {
            let [(a, _), (b, _)] = seifert_pairs(*c, k.sign(x));
            (circle[a as usize], circle[b as usize])
        })
        .collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); count];
    for &(a, b) in &ends {
        if a == b {
            return Err(Error::Internal("crossing joins a Seifert circle to itself".into()));
        }
        adj[a].insert(b);
        adj[b].insert(a);
    }
    // circles form a path
    let start = (0..count)
        .find(|&c| adj[c].len() <= 1)
        .ok_or_else(|| Error::Internal("Seifert circles are not nested".into()))?;
    let mut order = vec![start];
    while order.len() < count {
        let last = *order.last().unwrap();
        let prev = if order.len() > 1 { Some(order[order.len() - 2]) } else { None };
        let next = adj[last]
            .iter()
            .copied()
            .find(|&c| Some(c) != prev)
            .ok_or_else(|| Error::Internal("Seifert circles are not nested".into()))?;
        if adj[last].len() > 2 || order.contains(&next) {
            return Err(Error::Internal("Seifert circles are not nested".into()));
        }
        order.push(next);
    }
    let mut pos = vec![0usize; count];
    for (i, &c) in order.iter().enumerate() {
        pos[c] = i;
    }

    // a ray from inside the first circle to outside the last one
    let faces = k.faces();
    let inner = faces
        .iter()
        .position(|w| w.iter().all(|&d| circle[k.label_at(d) as usize] == order[0]))
        .ok_or_else(|| Error::Internal("no face inside the first Seifert circle".into()))?;
    let mut ray = Vec::with_capacity(count);
    let mut face = inner;
    for &c in &order {
        let d = *faces
            .boundary(face)
            .iter()
            .find(|&&d| circle[k.label_at(d) as usize] == c)
            .ok_or_else(|| Error::Internal("ray cannot leave a face".into()))?;
        ray.push(k.label_at(d));
        face = faces.face_of(k.opposite(d));
    }

    // the successor of each edge along its Seifert circle, with the crossing
    // passed
    let mut succ = vec![(0u32, 0usize); k.edge_count() + 1];
    for (x, c) in k.crossings().iter().enumerate() {
        for (a, b) in seifert_pairs(*c, k.sign(x)) {
            succ[a as usize] = (b, x);
        }
    }
    let mut before: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &start in &ray {
        let mut l = start;
        let mut prev: Option<usize> = None;
        loop {
            let (nl, x) = succ[l as usize];
            if let Some(p) = prev {
                before[p].push(x);
                indeg[x] += 1;
            }
            prev = Some(x);
            l = nl;
            if l == start {
                break;
            }
        }
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut letters = Vec::with_capacity(n);
    while let Some(x) = ready.pop_first() {
        let (a, b) = ends[x];
        letters.push((pos[a].min(pos[b]) + 1, k.sign(x)));
        for &y in &before[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.insert(y);
            }
        }
    }
    if letters.len() != n {
        return Err(Error::Internal("crossing order around the braid axis is cyclic".into()));
    }
    BraidWord::new(count, letters)
}

/// Result of [`simplify_braid`]: a shorter braid with the same closure
/// up to `framing` removed kinks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplified {
    pub braid: BraidWord,
    /// Signed count of the destabilized letters.
    pub framing: i64,
    pub destabilizations: usize,
}

/// Box coefficient of a single positive curl under a top cap.
const CURL_SIGN: i64 = -1;

/// Search budget of [`simplify_braid`], in letters scanned: this much per
/// input letter, up to [`SIMPLIFY_WORK`].
const SIMPLIFY_WORK_PER_LETTER: usize = 20_000;
const SIMPLIFY_WORK: usize = 1_000_000;

type Word = Vec<(usize, i8)>;

#[derive(Clone)]
struct BraidState {
    k: usize,
    w: Word,
    framing: i64,
    destabilizations: usize,
}

impl BraidState {
    fn key(&self) -> (usize, usize, usize) {
        let count = |g: usize| self.w.iter().filter(|l| l.0 == g).count();
        let h = if self.k > 1 { count(self.k - 1).min(count(1)) } else { 0 };
        (self.k, self.w.len(), h)
    }

    /// Cancels and destabilizes until neither applies.
    fn normalize(&mut self) {
        loop {
            cyclic_cancel(&mut self.w);
            match destabilize(&mut self.w, self.k) {
                Some(e) => {
                    self.k -= 1;
                    self.framing += e as i64;
                    self.destabilizations += 1;
                }
                None => break,
            }
        }
    }
}

/// Shrinks a braid without changing its closure: cancellations and braid
/// relations are applied around the cyclic word, letters that commute are
/// skipped over, and an outermost generator occurring once is removed by
/// Markov destabilization. The destabilized kinks are summed in `framing`.
/// Best-first search on strand count, then length.
pub fn simplify_braid(b: &BraidWord) -> Result<Simplified> {
    let mut start = BraidState {
        k: b.strand_count,
        w: b.letters.clone(),
        framing: 0,
        destabilizations: 0,
    };
    start.normalize();
    let mut best = start.clone();
    let mut seen: HashSet<(usize, Word)> = HashSet::new();
    let mut heap = BinaryHeap::new();
    let mut states = vec![start.clone()];
    seen.insert((start.k, min_rotation(&start.w)));
    heap.push(Reverse((start.key(), 0usize)));
    let budget = SIMPLIFY_WORK.min(SIMPLIFY_WORK_PER_LETTER * b.letters.len().max(1));
    let mut work = 0usize;
    while let Some(Reverse((_, id))) = heap.pop() {
        // a normalized 2-braid is a power of σ₁ fixed by the knot type
        if best.k <= 2 {
            break;
        }
        let cur = states[id].clone();
        let moves: Vec<Word> = relation_moves(&cur.w).into_iter().chain(handle_moves(&cur.w)).collect();
        work += cur.w.len() * (moves.len() + 1);
        if work > budget {
            break;
        }
        for w in moves {
            let mut next = BraidState { w, ..cur.clone() };
            next.normalize();
            if !seen.insert((next.k, min_rotation(&next.w))) {
                continue;
            }
            if (next.k, next.w.len()) < (best.k, best.w.len()) {
                best = next.clone();
            }
            heap.push(Reverse((next.key(), states.len())));
            states.push(next);
        }
    }
    Ok(Simplified {
        braid: BraidWord::new(best.k, best.w)?,
        framing: best.framing,
        destabilizations: best.destabilizations,
    })
}

fn commutes(a: usize, b: usize) -> bool {
    a.abs_diff(b) >= 2
}

/// Lexicographically least rotation (Booth's algorithm).
fn min_rotation(w: &[(usize, i8)]) -> Word {
    let n = w.len();
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    let at = |i: usize| w[i % n];
    for j in 1..2 * n {
        let mut i = fail[j - k - 1];
        while i != usize::MAX && at(j) != at(k + i + 1) {
            if at(j) < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && at(j) != at(k + i.wrapping_add(1)) {
            if at(j) < at(k) {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = i.wrapping_add(1);
        }
    }
    let mut r = w.to_vec();
    if n > 0 {
        r.rotate_left(k % n);
    }
    r
}

/// Next position after `p`, cyclically, whose letter does not commute with
/// `σ_g`; `None` if there is none before wrapping back to `p`.
fn next_blocker(w: &[(usize, i8)], p: usize, g: usize) -> Option<usize> {
    let n = w.len();
    (1..n).map(|d| (p + d) % n).find(|&q| !commutes(w[q].0, g))
}

/// Removes letter pairs `σ_g^e … σ_g^{−e}` with only commuting letters
/// between them, cyclically.
fn cyclic_cancel(w: &mut Word) {
    'outer: loop {
        for p in 0..w.len() {
            let (g, e) = w[p];
            if let Some(q) = next_blocker(w, p, g) {
                if q != p && w[q] == (g, -e) {
                    let (lo, hi) = (p.min(q), p.max(q));
                    w.remove(hi);
                    w.remove(lo);
                    continue 'outer;
                }
            }
        }
        return;
    }
}

/// Removes the only occurrence of `σ_{k−1}` or `σ_1`, returning its sign.
fn destabilize(w: &mut Word, k: usize) -> Option<i8> {
    if k == 1 {
        return None;
    }
    for top in [true, false] {
        let g = if top { k - 1 } else { 1 };
        let hits: Vec<usize> = (0..w.len()).filter(|&i| w[i].0 == g).collect();
        if hits.len() == 1 {
            let i = hits[0];
            let e = w[i].1;
            w.rotate_left(i + 1);
            w.pop();
            if !top {
                for l in w.iter_mut() {
                    l.0 -= 1;
                }
            }
            return Some(e);
        }
    }
    None
}

/// Handle reductions: `σ_i^e u σ_i^{−e}` with no `σ_i` in `u` and only one
/// of `σ_{i−1}`, `σ_{i+1}` present becomes `u` with each such `σ_j^d`
/// replaced by `σ_j^{−e} σ_i^d σ_j^e`.
fn handle_moves(w: &[(usize, i8)]) -> Vec<Word> {
    let n = w.len();
    let mut out = Vec::new();
    for p in 0..n {
        let (i, e) = w[p];
        let Some(q) = (1..n).map(|d| (p + d) % n).find(|&q| w[q].0 == i) else { continue };
        if w[q].1 != -e {
            continue;
        }
        let span = (q + n - p) % n;
        let inner: Vec<(usize, i8)> = (1..span).map(|t| w[(p + t) % n]).collect();
        let below = inner.iter().any(|l| l.0 + 1 == i);
        let above = inner.iter().any(|l| l.0 == i + 1);
        if below == above {
            continue;
        }
        let mut v = Vec::with_capacity(n + 2 * inner.len());
        for &(j, d) in &inner {
            if j.abs_diff(i) == 1 {
                v.extend_from_slice(&[(j, -e), (i, d), (j, e)]);
            } else {
                v.push((j, d));
            }
        }
        v.extend((span + 1..n).map(|t| w[(p + t) % n]));
        out.push(v);
    }
    out
}

/// Words obtained by one braid relation `σ_i^e σ_j^d σ_i^{−e} =
/// σ_j^{−e} σ_i^d σ_j^e` or `σ_i^e σ_j^e σ_i^e = σ_j^e σ_i^e σ_j^e`
/// (`|i − j| = 1`), where the outer letters may first be slid over letters
/// commuting with `σ_i`.
fn relation_moves(w: &[(usize, i8)]) -> Vec<Word> {
    let n = w.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for p in 0..n {
        let (i, e) = w[p];
        let Some(q) = next_blocker(w, p, i) else { continue };
        let (j, d) = w[q];
        if j.abs_diff(i) != 1 {
            continue;
        }
        let Some(r) = next_blocker(w, q, i) else { continue };
        if r == p || w[r].0 != i {
            continue;
        }
        let f = w[r].1;
        let rep = if f == -e {
            [(j, -e), (i, d), (j, e)]
        } else if d == e && f == e {
            [(j, e), (i, e), (j, e)]
        } else {
            continue;
        };
        // walk the cycle from p to r, dropping p, q, r and placing the
        // replacement where q was
        let span = (r + n - p) % n;
        if (q + n - p) % n >= span {
            continue;
        }
        let mut v = Vec::with_capacity(n);
        for t in 1..span {
            let x = (p + t) % n;
            if x == q {
                v.extend_from_slice(&rep);
            } else {
                v.push(w[x]);
            }
        }
        for t in span + 1..n {
            v.push(w[(p + t) % n]);
        }
        out.push(v);
    }
    out
}

fn empty_rows(m: usize, n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| vec![0; row_len(m, i)]).collect()
}

/// Plat closure realizing the trace closure of `b`.
///
/// On two strands the braid sits on columns 2 and 3 and collapses into a
/// single twist region. Otherwise strand `i` sits on column `2i−1` with its
/// return strand on column `2i`; each letter takes three rows, moving the
/// return strand between the two braid strands aside with crossings in
/// which it passes under, and a zero row separates letters.
pub fn braid_to_plat(b: &BraidWord) -> Result<PlatDiagram> {
    if b.closure_components() != 1 {
        return Err(Error::NotAKnot(b.closure_components()));
    }
    let k = b.strand_count;
    if k == 1 {
        return PlatDiagram::new(1, empty_rows(1, 1));
    }
    if k == 2 {
        return PlatDiagram::new(2, vec![vec![b.exponent_sum()]]);
    }
    let n = (4 * b.len()).max(2) - 1;
    let mut rows = empty_rows(k, n);
    for (t, &(i, e)) in b.letters.iter().enumerate() {
        let r = 4 * t;
        // return strand i (column 2i) swaps with braid strand i+1 and back
        rows[r][i - 1] = -1;
        rows[r + 1][i - 1] = e as i64;
        rows[r + 2][i - 1] = 1;
    }
    PlatDiagram::new(k, rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardizeLog {
    pub parity_rows: usize,
    pub stabilizations: usize,
    pub zero_rows: usize,
}

/// Raises `m` to at least 3 and makes `n` even with `n > 4m(m−2)`.
///
/// An odd plat gets one zero row and a run of `2m−2` single crossings that
/// carry the strand under the cap `(2m−1, 2m)` over to column 1, so the
/// adjacent top caps become the even-row matching. With `n` even, an extra
/// column pair of zero boxes is a planar stabilization. Zero rows are then
/// added two at a time below the top caps.
pub fn standardize(p: &PlatDiagram) -> Result<(PlatDiagram, StandardizeLog)> {
    let mut m = p.m();
    let mut rows = p.rows().to_vec();
    let mut log = StandardizeLog {
        parity_rows: 0,
        stabilizations: 0,
        zero_rows: 0,
    };
    if rows.len() % 2 == 1 {
        let n = rows.len();
        rows.extend(empty_rows(m, n + 2 * m - 1).into_iter().skip(n));
        for t in 1..2 * m - 1 {
            // box on columns (2m−1−t, 2m−t) in row n+t (0-based)
            let l = 2 * m - 1 - t;
            let j = if l % 2 == 0 { l / 2 - 1 } else { (l - 1) / 2 };
            rows[n + t][j] = -1;
        }
        log.parity_rows = 2 * m - 1;
    }
    while m < 3 {
        for r in rows.iter_mut() {
            r.push(0);
        }
        m += 1;
        log.stabilizations += 1;
    }
    let bound = 4 * m * (m - 2);
    while rows.len() <= bound {
        let n = rows.len();
        rows.push(vec![0; row_len(m, n)]);
        rows.push(vec![0; row_len(m, n + 1)]);
        log.zero_rows += 2;
    }
    Ok((PlatDiagram::new(m, rows)?, log))
}

/// Appends two rows whose only box twists the legs of the top cap `(2, 3)`,
/// giving `f` curls of total writhe `f`. Needs `n` even and `m ≥ 2`.
pub fn add_curls(p: &PlatDiagram, f: i64) -> Result<PlatDiagram> {
    if f == 0 {
        return Ok(p.clone());
    }
    let (m, n) = (p.m(), p.n());
    if m < 2 || n % 2 == 1 {
        return Err(Error::InvalidArgument("curls need an even plat with m ≥ 2".into()));
    }
    let mut rows = p.rows().to_vec();
    rows.extend(empty_rows(m, n + 2).into_iter().skip(n));
    rows[n][0] = CURL_SIGN * f;
    PlatDiagram::new(m, rows)
}

/// Pushes every coefficient away from zero by `2T`.
pub fn vafa_pad(p: &PlatDiagram, t: u64) -> Result<PlatDiagram> {
    if t < 2 {
        return Err(Error::InvalidArgument("T must be at least 2".into()));
    }
    let s = 2 * t as i64;
    let rows = p
        .rows()
        .iter()
        .map(|r| r.iter().map(|&a| if a >= 0 { a + s } else { a - s }).collect())
        .collect();
    PlatDiagram::new(p.m(), rows)
}

/// `⌈n / (2(m−2))⌉`, valid for highly twisted standard plats with
/// `m ≥ 3` and `n > 4m(m−2)`.
pub fn bridge_distance(m: usize, n: usize) -> Result<u64> {
    if m < 3 || n <= 4 * m * (m - 2) {
        return Err(Error::InvalidArgument(format!(
            "distance formula needs m ≥ 3 and n > 4m(m−2), got m = {m}, n = {n}"
        )));
    }
    Ok(n.div_ceil(2 * (m - 2)) as u64)
}

/// `t = ⌊(2m−1)·n/2⌋` twist regions.
pub fn twist_number(m: usize, n: usize) -> u64 {
    ((2 * m - 1) * n / 2) as u64
}

/// Advisory volume bounds `(v₃(t−2), 10·v₃(t−1))`.
pub fn volume_bounds(m: usize, n: usize) -> (f64, f64) {
    let t = twist_number(m, n) as f64;
    (V3 * (t - 2.0), 10.0 * V3 * (t - 1.0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub standard: bool,
    pub highly_twisted: bool,
    pub m_ge_3: bool,
    pub n_gt_bound: bool,
    pub n_even: bool,
    pub unique_minimal_bridge_sphere: bool,
    pub hyperbolic: bool,
}

impl Certificates {
    pub fn all(&self) -> bool {
        self.standard
            && self.highly_twisted
            && self.m_ge_3
            && self.n_gt_bound
            && self.n_even
            && self.unique_minimal_bridge_sphere
            && self.hyperbolic
    }
}

/// Everything the distance and volume statements need, recomputed from the
/// plat itself.
#[derive(Clone, Debug, Serialize)]
pub struct PlatCertificate {
    pub m: usize,
    pub n: usize,
    pub distance: Option<u64>,
    pub certificates: Certificates,
    pub twist_number: u64,
    pub volume_bounds: (f64, f64),
    pub alternating: bool,
}

pub fn certify(p: &PlatDiagram) -> PlatCertificate {
    let (m, n) = (p.m(), p.n());
    let standard = p.rows().iter().enumerate().all(|(i, r)| r.len() == row_len(m, i));
    let distance = bridge_distance(m, n).ok();
    let d = distance.unwrap_or(0);
    let alternating = p.is_alternating();
    PlatCertificate {
        m,
        n,
        distance,
        certificates: Certificates {
            standard,
            highly_twisted: p.is_highly_twisted(),
            m_ge_3: m >= 3,
            n_gt_bound: m >= 2 && n > 4 * m * (m - 2),
            n_even: n % 2 == 0,
            unique_minimal_bridge_sphere: distance.is_some() && d > 2 * m as u64,
            hyperbolic: distance.is_some() && d > 2,
        },
        twist_number: twist_number(m, n),
        volume_bounds: volume_bounds(m, n),
        alternating,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlatReductionReport {
    pub output: PlatDiagram,
    pub pad_unit: u64,
    pub braid: BraidWord,
    pub simplified: Simplified,
    pub vogel_moves: usize,
    pub standardize: StandardizeLog,
    pub certificate: PlatCertificate,
    pub crossings_before: usize,
    pub crossings_after: usize,
}

pub fn reduce_plat(k: &PdDiagram, theory: &Theory) -> Result<PlatReductionReport> {
    reduce_plat_with(k, theory.pad_unit()?)
}

pub fn reduce_plat_with(k: &PdDiagram, t: u64) -> Result<PlatReductionReport> {
    k.require_knot()?;
    let (braided, vogel_moves) = if k.crossing_count() == 0 {
        (k.clone(), 0)
    } else {
        vogel_braided(k)?
    };
    let braid = if braided.crossing_count() == 0 {
        BraidWord::new(1, Vec::new())?
    } else {
        read_braid(&braided)?
    };
    let simplified = simplify_braid(&braid)?;
    let plat = braid_to_plat(&simplified.braid)?;
    let (std, log) = standardize(&plat)?;
    let curled = add_curls(&std, simplified.framing)?;
    let output = vafa_pad(&curled, t)?;
    let certificate = certify(&output);
    Ok(PlatReductionReport {
        crossings_before: k.crossing_count(),
        crossings_after: output.crossing_total(),
        output,
        pad_unit: t,
        braid,
        simplified,
        vogel_moves,
        standardize: log,
        certificate,
    })
}
