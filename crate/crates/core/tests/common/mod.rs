//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use knotpad::group::FiniteGroupWithClass;
use knotpad::CyclotomicInt;

/// Laurent polynomial in `A`, exponent to coefficient.
pub type Laurent = BTreeMap<i64, i64>;

fn lmul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&i, &x) in a {
        for (&j, &y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn ladd(a: &mut Laurent, b: &Laurent) {
    for (&i, &x) in b {
        *a.entry(i).or_insert(0) += x;
    }
    a.retain(|_, v| *v != 0);
}

fn delta() -> Laurent {
    Laurent::from([(2, -1), (-2, -1)])
}

fn delta_pow(k: usize) -> Laurent {
    let mut p = Laurent::from([(0, 1)]);
    for _ in 0..k {
        p = lmul(&p, &delta());
    }
    p
}

/// State sum over all `2^n` smoothings, loops counted by union-find on the
/// eight half-edge ends of each crossing. `⟨O⟩ = 1`.
pub fn laurent_bracket(crossings: &[[u32; 4]], free_loops: usize) -> Laurent {
    let n = crossings.len();
    if n == 0 {
        return delta_pow(free_loops.saturating_sub(1));
    }
    let mut total = Laurent::new();
    for state in 0u64..(1u64 << n) {
        // nodes: edge labels; smoothing pairs union labels
        let max = crossings.iter().flatten().copied().max().unwrap() as usize;
        let mut p: Vec<usize> = (0..=max).collect();
        fn f(p: &mut Vec<usize>, a: usize) -> usize {
            if p[a] != a {
                let r = f(p, p[a]);
                p[a] = r;
            }
            p[a]
        }
        let mut exp = 0i64;
        for (x, c) in crossings.iter().enumerate() {
            let a_smooth = state >> x & 1 == 0;
            let pairs = if a_smooth {
                exp += 1;
                [(c[0], c[1]), (c[2], c[3])]
            } else {
                exp -= 1;
                [(c[0], c[3]), (c[1], c[2])]
            };
            for (u, v) in pairs {
                let (ru, rv) = (f(&mut p, u as usize), f(&mut p, v as usize));
                p[ru] = rv;
            }
        }
        let mut roots: Vec<usize> = crossings
            .iter()
            .flatten()
            .map(|&l| f(&mut p, l as usize))
            .collect();
        roots.sort();
        roots.dedup();
        let loops = roots.len() + free_loops;
        let term = lmul(&Laurent::from([(exp, 1)]), &delta_pow(loops - 1));
        ladd(&mut total, &term);
    }
    total
}

/// Writhe from scratch: orient by walking under-strand slot 0 → 2.
pub fn oracle_writhe(crossings: &[[u32; 4]]) -> i64 {
    let n = crossings.len();
    let mut head_slot: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, c) in crossings.iter().enumerate() {
        for (s, &l) in c.iter().enumerate() {
            occ.entry(l).or_default().push((x, s));
        }
    }
    let start = crossings[0][2];
    let mut from = (0usize, 2usize);
    let mut l = start;
    for _ in 0..4 * n {
        let o = &occ[&l];
        let to = if o[0] == from { o[1] } else { o[0] };
        head_slot.insert(l, to);
        from = (to.0, (to.1 + 2) % 4);
        l = crossings[from.0][from.1];
        if l == start {
            break;
        }
    }
    let mut w = 0;
    for (x, c) in crossings.iter().enumerate() {
        let in3 = head_slot.get(&c[3]) == Some(&(x, 3));
        w += if in3 { 1 } else { -1 };
    }
    w
}

/// Jones-normalised value `(−A³)^{−w}⟨K⟩` as a Laurent polynomial.
pub fn laurent_jones(crossings: &[[u32; 4]]) -> Laurent {
    let w = oracle_writhe(crossings);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    lmul(&Laurent::from([(-3 * w, sign)]), &laurent_bracket(crossings, 0))
}

pub fn eval(p: &Laurent, order: u32) -> CyclotomicInt {
    let mut raw = vec![0i64; order as usize];
    for (&e, &c) in p {
        raw[e.rem_euclid(order as i64) as usize] += c;
    }
    CyclotomicInt::from_power_coeffs(order, &raw)
}

/// Mirror image `A ↦ A⁻¹`.
pub fn mirror(p: &Laurent) -> Laurent {
    p.iter().map(|(&e, &c)| (-e, c)).collect()
}

/// Colourings of arcs by class elements, enumerated exhaustively. Arcs are
/// traced by walking the over strands; orientation comes from the passed
/// signs.
pub fn brute_homcount(crossings: &[[u32; 4]], signs: &[i8], g: &FiniteGroupWithClass) -> u64 {
    let e = crossings.len() * 2;
    if e == 0 {
        return g.class().len() as u64;
    }
    // arc id per edge label: labels joined across over passes
    let mut arc = vec![usize::MAX; e + 1];
    let mut arcs = 0;
    for l in 1..=e as u32 {
        if arc[l as usize] != usize::MAX {
            continue;
        }
        let mut stack = vec![l];
        while let Some(m) = stack.pop() {
            if arc[m as usize] != usize::MAX {
                continue;
            }
            arc[m as usize] = arcs;
            for c in crossings {
                if c[1] == m {
                    stack.push(c[3]);
                }
                if c[3] == m {
                    stack.push(c[1]);
                }
            }
        }
        arcs += 1;
    }
    let cls = g.class();
    let mut count = 0;
    let mut digits = vec![0usize; arcs];
    'outer: loop {
        let col: Vec<usize> = digits.iter().map(|&d| cls[d]).collect();
        let ok = crossings.iter().zip(signs).all(|(c, &s)| {
            let o = col[arc[c[1] as usize]];
            let i = col[arc[c[0] as usize]];
            let out = col[arc[c[2] as usize]];
            let want = if s > 0 {
                g.mul(g.mul(o, i), g.inv(o))
            } else {
                g.mul(g.mul(g.inv(o), i), o)
            };
            want == out
        });
        if ok {
            count += 1;
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < cls.len() {
                continue 'outer;
            }
            *d = 0;
        }
        break;
    }
    count
}
