mod common;

use common::*;
use knotpad::cyclotomic::root_order;
use knotpad::group::FiniteGroupWithClass;
use knotpad::invariants::*;
use knotpad::{PdDiagram, PlatDiagram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LEFT_TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

fn random_plat(rng: &mut ChaCha8Rng, max_m: usize, max_n: usize, max_a: i64) -> PlatDiagram {
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(0..=max_n);
    let rows = (0..n)
        .map(|i| {
            let len = if i % 2 == 0 { m - 1 } else { m };
            (0..len).map(|_| rng.gen_range(-max_a..=max_a)).collect()
        })
        .collect();
    PlatDiagram::new(m, rows).unwrap()
}

#[test]
fn left_trefoil_jones_polynomial() {
    // V = -t^-4 + t^-3 + t^-1 with t = A^-4
    let expected = Laurent::from([(16, -1), (12, 1), (4, 1)]);
    assert_eq!(laurent_jones(&LEFT_TREFOIL), expected);
    let k = PdDiagram::new(LEFT_TREFOIL.to_vec()).unwrap();
    for n in [5u32, 8, 12, 20, 28] {
        assert_eq!(jones_value(&k, n).unwrap(), eval(&expected, n), "N={n}");
    }
}

#[test]
fn figure_eight_is_amphichiral() {
    let j = laurent_jones(&FIGURE_EIGHT);
    assert_eq!(j, mirror(&j));
    let k = PdDiagram::new(FIGURE_EIGHT.to_vec()).unwrap();
    assert_eq!(k.writhe(), 0);
    assert_eq!(bracket_pd(&k, 20).unwrap(), eval(&j, 20));
}

#[test]
fn unknot_and_unlink() {
    assert!(bracket_pd(&PdDiagram::unknot(), 20).unwrap().is_one());
    assert_eq!(
        bracket_pd(&PdDiagram::unlink(2), 20).unwrap(),
        knotpad::CyclotomicInt::loop_value(20)
    );
    let zero = PlatDiagram::new(3, vec![vec![0, 0], vec![0, 0, 0]]).unwrap();
    assert!(bracket_plat(&zero, 12).unwrap().is_one());
}

#[test]
fn frontier_sum_matches_state_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 60 {
        let p = random_plat(&mut rng, 3, 6, 3);
        let k = p.to_pd_link().unwrap();
        if k.crossing_count() > 14 {
            continue;
        }
        let lb = laurent_bracket(k.crossings(), k.free_loops());
        for n in [8u32, 20] {
            assert_eq!(bracket_pd(&k, n).unwrap(), eval(&lb, n), "{p:?}");
        }
        checked += 1;
    }
}

#[test]
fn plat_sweep_matches_frontier_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..80 {
        let p = random_plat(&mut rng, 4, 12, 5);
        let k = p.to_pd_link().unwrap();
        for n in [8u32, 12, 20] {
            assert_eq!(
                bracket_pd_with_cap(&k, n, usize::MAX).unwrap(),
                bracket_plat(&p, n).unwrap(),
                "{p:?}"
            );
        }
    }
}

#[test]
fn crossing_cap_enforced() {
    let p = PlatDiagram::new(2, vec![vec![27]]).unwrap();
    let k = p.to_pd().unwrap();
    assert!(matches!(
        bracket_pd(&k, 20),
        Err(knotpad::Error::CapExceeded { .. })
    ));
    assert!(bracket_pd_with_cap(&k, 20, 27).is_ok());
}

#[test]
fn tl_exponent_matches_eigenvalue_orders() {
    for n in [3u32, 4, 5, 6, 7, 9, 10, 12, 20, 28] {
        // brute force: smallest k with A^{2k} = 1 and A^{-6k} = 1
        let k = (1u64..)
            .find(|&k| (2 * k as i64) % n as i64 == 0 && (6 * k as i64) % n as i64 == 0)
            .unwrap();
        assert_eq!(tl_vafa_exponent(n).unwrap(), k, "N={n}");
        assert_eq!(k, root_order(n, 2).max(1).max(k));
    }
}

#[test]
fn trefoil_three_colourings() {
    let s3 = FiniteGroupWithClass::preset("s3/transpositions").unwrap();
    let k = PdDiagram::new(LEFT_TREFOIL.to_vec()).unwrap();
    assert_eq!(homcount_pd(&k, &s3).unwrap(), 9);
    assert_eq!(homcount_pd(&PdDiagram::unknot(), &s3).unwrap(), 3);
    let f8 = PdDiagram::new(FIGURE_EIGHT.to_vec()).unwrap();
    assert_eq!(homcount_pd(&f8, &s3).unwrap(), 3);
}

#[test]
fn homcount_matches_exhaustive_colouring() {
    for name in ["s3/transpositions", "a5/5cycle-a", "a5/3cycle"] {
        let g = FiniteGroupWithClass::preset(name).unwrap();
        for pd in [LEFT_TREFOIL.to_vec(), FIGURE_EIGHT.to_vec()] {
            let k = PdDiagram::new(pd).unwrap();
            let brute = brute_homcount(k.crossings(), k.signs(), &g);
            assert_eq!(homcount_pd(&k, &g).unwrap(), brute, "{name}");
            assert!(brute >= g.class().len() as u64);
        }
    }
}

#[test]
fn plat_sweep_homcount_matches_pd() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let groups: Vec<FiniteGroupWithClass> = ["s3/transpositions", "a5/5cycle-a", "psl27/7a"]
        .iter()
        .map(|n| FiniteGroupWithClass::preset(n).unwrap())
        .collect();
    let mut done = 0;
    while done < 40 {
        let p = random_plat(&mut rng, 3, 10, 4);
        let Ok(k) = p.to_pd() else { continue };
        for g in &groups {
            assert_eq!(
                homcount_pd_with_cap(&k, g, usize::MAX).unwrap(),
                homcount_plat(&p, g).unwrap(),
                "{p:?} {}",
                g.name()
            );
        }
        done += 1;
    }
}

#[test]
fn dw_exponent_kills_double_twists() {
    for name in ["a5/5cycle-a", "a5/3cycle", "s3/transpositions"] {
        let g = FiniteGroupWithClass::preset(name).unwrap();
        let e = dw_vafa_exponent(&g);
        assert_eq!((g.exponent() as u64 * g.order() as u64) % e, 0);
        let e2 = dw_pad_exponent(&g) as i64;
        let p = PlatDiagram::new(2, vec![vec![3]]).unwrap();
        let q = PlatDiagram::new(2, vec![vec![3 + 2 * e2]]).unwrap();
        assert_eq!(homcount_plat(&p, &g).unwrap(), homcount_plat(&q, &g).unwrap());
    }
}
