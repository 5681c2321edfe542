//! Bundled test diagrams: small named knots, composites, kinked and
//! switched diagrams, and seeded random plats.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::plat::{row_len, PlatDiagram};
use crate::diagram::rewrite::{add_kink, connected_sum, flipped};
use crate::diagram::PdDiagram;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Unknot,
    Named,
    Composite,
    Switched,
    RandomPlat,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub family: Family,
    #[serde(skip)]
    pub diagram: PdDiagram,
}

pub const LEFT_TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
pub const RIGHT_TREFOIL: [[u32; 4]; 3] = [[4, 2, 5, 1], [6, 4, 1, 3], [2, 6, 3, 5]];
pub const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];
pub const KNOT_5_2: [[u32; 4]; 5] = [
    [1, 5, 2, 4],
    [3, 9, 4, 8],
    [5, 1, 6, 10],
    [7, 3, 8, 2],
    [9, 7, 10, 6],
];
pub const KNOT_6_1: [[u32; 4]; 6] = [
    [1, 7, 2, 6],
    [3, 10, 4, 11],
    [5, 3, 6, 2],
    [7, 1, 8, 12],
    [9, 4, 10, 5],
    [11, 9, 12, 8],
];

pub const RANDOM_SEED: u64 = 0x6b6e_6f74;
pub const RANDOM_COUNT: usize = 50;
pub const MAX_CROSSINGS: usize = 12;

fn pd(c: &[[u32; 4]]) -> PdDiagram {
    PdDiagram::new(c.to_vec()).expect("bundled diagram is valid")
}

/// Reverses crossing `x`.
pub fn switch_crossing(k: &PdDiagram, x: usize) -> Result<PdDiagram> {
    let mut c = k.crossings().to_vec();
    c[x] = flipped(c[x], k.sign(x));
    PdDiagram::from_oriented(c, k.free_loops())
}

/// Unknot carrying kinks of the given signs, all met over-first so the
/// diagram alternates.
pub fn kinked_unknot(signs: &[i8]) -> Result<PdDiagram> {
    let mut k = PdDiagram::unknot();
    for &s in signs {
        k = add_kink(&k, 1, s, true)?;
    }
    Ok(k)
}

/// Random plat whose closure is a knot with between 1 and `max_crossings`
/// crossings.
pub fn random_knot_plat(rng: &mut impl Rng, max_m: usize, max_n: usize, max_a: i64, max_crossings: usize) -> PlatDiagram {
    loop {
        let m = rng.gen_range(1..=max_m);
        let n = rng.gen_range(1..=max_n);
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..row_len(m, i)).map(|_| rng.gen_range(-max_a..=max_a)).collect())
            .collect();
        let p = PlatDiagram::new(m, rows).expect("row lengths match");
        let c = p.crossing_total();
        if c >= 1 && c <= max_crossings && p.to_pd().is_ok() {
            return p;
        }
    }
}

pub fn random_plats(seed: u64, count: usize) -> Vec<PlatDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_knot_plat(&mut rng, 3, 5, 3, MAX_CROSSINGS))
        .collect()
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut push = |name: &str, family: Family, diagram: PdDiagram| {
        out.push(CorpusEntry {
            name: name.to_string(),
            family,
            diagram,
        })
    };
    push("unknot", Family::Unknot, PdDiagram::unknot());
    push("unknot_kink_plus", Family::Unknot, kinked_unknot(&[1]).unwrap());
    push("unknot_kink_minus", Family::Unknot, kinked_unknot(&[-1]).unwrap());
    push("unknot_3kinks", Family::Unknot, kinked_unknot(&[1, 1, -1]).unwrap());
    let left = pd(&LEFT_TREFOIL);
    let right = pd(&RIGHT_TREFOIL);
    push("3_1_left", Family::Named, left.clone());
    push("3_1_right", Family::Named, right.clone());
    push("4_1", Family::Named, pd(&FIGURE_EIGHT));
    push("5_2", Family::Named, pd(&KNOT_5_2));
    push("6_1", Family::Named, pd(&KNOT_6_1));
    let granny = connected_sum(&left, 1, &left, 1).unwrap();
    let square = connected_sum(&left, 1, &right, 1).unwrap();
    push("granny", Family::Composite, granny.clone());
    push("square", Family::Composite, square.clone());
    for (name, k, x) in [
        ("3_1_switched", &left, 1),
        ("4_1_switched", &pd(&FIGURE_EIGHT), 0),
        ("5_2_switched", &pd(&KNOT_5_2), 2),
        ("6_1_switched", &pd(&KNOT_6_1), 3),
        ("granny_switched", &granny, 1),
        ("square_switched", &square, 4),
    ] {
        push(name, Family::Switched, switch_crossing(k, x).unwrap());
    }
    for (i, p) in random_plats(RANDOM_SEED, RANDOM_COUNT).into_iter().enumerate() {
        push(&format!("plat_{i:02}"), Family::RandomPlat, p.to_pd().unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid_and_small() {
        let c = corpus();
        assert_eq!(c.iter().filter(|e| e.family == Family::RandomPlat).count(), 50);
        for e in &c {
            assert!(e.diagram.is_knot(), "{}", e.name);
            assert!(e.diagram.crossing_count() <= MAX_CROSSINGS, "{}", e.name);
        }
        assert!(!c.iter().find(|e| e.name == "3_1_switched").unwrap().diagram.is_alternating());
    }

    #[test]
    fn corpus_is_deterministic() {
        let a: Vec<_> = corpus().into_iter().map(|e| e.diagram).collect();
        let b: Vec<_> = corpus().into_iter().map(|e| e.diagram).collect();
        assert_eq!(a, b);
    }
}
