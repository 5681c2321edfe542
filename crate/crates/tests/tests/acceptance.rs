//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every criterion is evaluated and
//! reported even when an earlier one fails; the process exits non-zero if
//! any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use common::{eval, laurent_bracket};
use knotpad::corpus::{corpus, random_knot_plat, CorpusEntry};
use knotpad::group::FiniteGroupWithClass;
use knotpad::invariants::{
    bracket_pd_with_cap, bracket_plat_with_cap, dw_vafa_exponent, dw_vafa_exponent_antiparallel,
    framed_invariant, homcount_pd_with_cap, homcount_plat, tl_vafa_exponent,
};
use knotpad::reduce_alt::{
    make_alternating, nugatory_crossings, prime_cuts, prime_decompose, reduce_alternating,
    reduce_alternating_with, rejoin_with_pads, remove_nugatory, AltReductionReport, Case,
};
use knotpad::reduce_plat::{bridge_distance, reduce_plat, reduce_plat_with, PlatReductionReport};
use knotpad::theory::{InvariantValue, Theory};
use knotpad::{CyclotomicInt, PdDiagram, PlatDiagram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RUNTIME_BUDGET_C1: Duration = Duration::from_secs(300);
const PIPELINE_BUDGET_C7: Duration = Duration::from_secs(10);
const R2_MIN: f64 = 0.99;
const T_VALUES: [u64; 4] = [2, 10, 30, 60];
const TIMING_REPEATS: usize = 5;
const LARGE_CROSSINGS: usize = 100;
const LARGE_INPUTS: usize = 5;
const V3: f64 = 1.01494;
const VOLUME_TOL: f64 = 1e-9;
const EIGEN_TOL: f64 = 1e-9;
const A5_PRESETS: [&str; 2] = ["a5/5cycle-a", "a5/5cycle-b"];
const DW_PRESETS: [&str; 5] = ["a5/5cycle-a", "a5/5cycle-b", "a5/3cycle", "psl27/7a", "s3/transpositions"];

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

/// Pipeline outputs shared between criteria.
struct Runs {
    corpus: Vec<CorpusEntry>,
    plat20: Vec<PlatReductionReport>,
    alt20: Vec<AltReductionReport>,
}

fn group(preset: &str) -> FiniteGroupWithClass {
    FiniteGroupWithClass::preset(preset).expect("preset exists")
}

fn bracket(k: &PdDiagram, n: u32) -> Result<CyclotomicInt, String> {
    bracket_pd_with_cap(k, n, usize::MAX).map_err(e)
}

fn count(k: &PdDiagram, g: &FiniteGroupWithClass) -> Result<u64, String> {
    homcount_pd_with_cap(k, g, usize::MAX).map_err(e)
}

/// `θ^r = (−A³)^r` at `A = ζ_N`, built from powers of `ζ`.
fn theta_pow(n: u32, r: i64) -> CyclotomicInt {
    let mut coeffs = vec![0i64; n as usize];
    let sign = if r % 2 == 0 { 1 } else { -1 };
    coeffs[(3 * r).rem_euclid(n as i64) as usize] = sign;
    CyclotomicInt::from_power_coeffs(n, &coeffs)
}

/// Value of an alternating-pipeline output. Fallback outputs come with the
/// plat they expand from; the expansion is checked and the plat evaluated.
fn alt_value(th: &Theory, rep: &AltReductionReport) -> Result<InvariantValue, String> {
    match &rep.plat {
        Some(p) => {
            ensure!(p.to_pd().map_err(e)? == rep.output, "fallback plat does not expand to the output");
            th.evaluate_plat(p).map_err(e)
        }
        None => th.evaluate_pd(&rep.output).map_err(e),
    }
}

fn boxes(p: &PlatDiagram) -> Vec<(usize, usize)> {
    p.rows()
        .iter()
        .enumerate()
        .flat_map(|(i, r)| (0..r.len()).map(move |j| (i, j)))
        .collect()
}

/// `p` with `delta` added to one box.
fn bumped(p: &PlatDiagram, at: (usize, usize), delta: i64) -> PlatDiagram {
    let mut rows = p.rows().to_vec();
    rows[at.0][at.1] += delta;
    PlatDiagram::new(p.m(), rows).unwrap()
}

fn criterion_1(runs: &mut Runs) -> Vec<(String, Check)> {
    let start = Instant::now();
    let mut parts = Vec::new();
    for n in [8u32, 12, 20] {
        let th = Theory::tl(n);
        let res = timed(|| {
            th.pad_unit().map_err(|x| format!("pipeline needs a padding exponent: {x}"))?;
            for ent in &runs.corpus {
                let rep = reduce_plat(&ent.diagram, &th).map_err(e)?;
                let out = bracket_plat_with_cap(&rep.output, n, usize::MAX).map_err(e)?;
                let inp = framed_invariant(&ent.diagram, n).map_err(e)?;
                ensure!(out == inp, "{} differs", ent.name);
                if n == 20 {
                    let k = &ent.diagram;
                    let oracle = eval(&laurent_bracket(k.crossings(), k.free_loops()), n);
                    ensure!(inp == oracle, "{} input disagrees with state sum", ent.name);
                    runs.plat20.push(rep);
                }
            }
            Ok(format!("{} knots", runs.corpus.len()))
        });
        parts.push((format!("N={n}"), res));
    }
    for preset in A5_PRESETS {
        let th = Theory::dw(preset).unwrap();
        let g = group(preset);
        let res = timed(|| {
            for ent in &runs.corpus {
                let rep = reduce_plat(&ent.diagram, &th).map_err(e)?;
                let out = homcount_plat(&rep.output, &g).map_err(e)?;
                ensure!(out == count(&ent.diagram, &g)?, "{} differs", ent.name);
            }
            Ok(format!("{} knots", runs.corpus.len()))
        });
        parts.push((preset.to_string(), res));
    }
    let elapsed = start.elapsed();
    let res = if elapsed < RUNTIME_BUDGET_C1 {
        Ok(format!("{:.1}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("{:.1}s over budget", elapsed.as_secs_f64()))
    };
    parts.push(("runtime".into(), res));
    parts
}

fn criterion_2(runs: &mut Runs) -> Vec<(String, Check)> {
    let th = Theory::tl(20);
    let mut parts = Vec::new();
    let res = timed(|| {
        let mut seen = BTreeSet::new();
        for ent in &runs.corpus {
            let rep = reduce_alternating(&ent.diagram, &th).map_err(e)?;
            let out = alt_value(&th, &rep)?;
            let inp = framed_invariant(&ent.diagram, 20).map_err(e)?;
            let want = InvariantValue::Bracket(&theta_pow(20, rep.r) * &inp);
            ensure!(out == want, "{} ({:?}, r = {})", ent.name, rep.case, rep.r);
            let charged: i64 = rep.steps.iter().map(|s| s.delta_r).sum();
            ensure!(charged == rep.r, "{}: steps charge {charged}, r = {}", ent.name, rep.r);
            let fallback = rep.steps.iter().find(|s| s.kind.ends_with("_fallback"));
            match (rep.case, fallback) {
                (Case::Hyperbolic, None) => {}
                (Case::TorusFallback, Some(s)) if s.delta_r.abs() == 1 => {}
                (Case::UnknotFallback, Some(s)) if s.delta_r == 2 => {}
                (c, s) => return Err(format!("{}: {c:?} with fallback step {s:?}", ent.name)),
            }
            seen.insert(format!("{:?}", rep.case));
            runs.alt20.push(rep);
        }
        ensure!(seen.len() == 3, "branches seen: {seen:?}");
        Ok(format!("{} knots, branches {:?}", runs.corpus.len(), seen))
    });
    parts.push(("N=20".into(), res));
    for preset in DW_PRESETS {
        let th = Theory::dw(preset).unwrap();
        let g = group(preset);
        let res = timed(|| {
            for ent in &runs.corpus {
                let rep = reduce_alternating(&ent.diagram, &th).map_err(e)?;
                let out = alt_value(&th, &rep)?;
                ensure!(out == InvariantValue::Count(count(&ent.diagram, &g)?), "{} differs", ent.name);
            }
            Ok(format!("{} knots", runs.corpus.len()))
        });
        parts.push((preset.to_string(), res));
    }
    parts
}

/// Smallest `k` with both eigenvalues `A²` and `A⁻⁶` of the squared
/// braiding raised to `k` equal to 1, in floating point.
fn eigen_order(n: u32) -> Option<u64> {
    let root = |p: i64| {
        let t = 2.0 * PI * p as f64 / n as f64;
        (t.cos(), t.sin())
    };
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let (l1, l2) = (root(2), root(-6));
    let (mut x, mut y) = (l1, l2);
    for k in 1..=4 * n as u64 {
        if (x.0 - 1.0).abs() < EIGEN_TOL && x.1.abs() < EIGEN_TOL && (y.0 - 1.0).abs() < EIGEN_TOL && y.1.abs() < EIGEN_TOL {
            return Some(k);
        }
        x = mul(x, l1);
        y = mul(y, l2);
    }
    None
}

fn criterion_3() -> Vec<(String, Check)> {
    let mut parts = Vec::new();
    let res = timed(|| {
        let e20 = tl_vafa_exponent(20).map_err(e)?;
        ensure!(e20 == 10, "tl_vafa_exponent(20) = {e20}");
        for n in [12u32, 20, 28] {
            let brute = eigen_order(n);
            let got = tl_vafa_exponent(n).map_err(e)?;
            ensure!(brute == Some(got), "N={n}: exponent {got}, eigenvalue order {brute:?}");
        }
        Ok("e(20) = 10 matches eigenvalue order".into())
    });
    parts.push(("exponent".into(), res));
    for n in [8u32, 12, 20, 28] {
        let res = timed(|| {
            let ex = tl_vafa_exponent(n).map_err(|x| format!("no exponent: {x}"))? as i64;
            let mut rng = ChaCha8Rng::seed_from_u64(0xc3 + n as u64);
            for trial in 0..100 {
                let p = random_knot_plat(&mut rng, 3, 5, 3, 12);
                let bs = boxes(&p);
                let at = bs[rng.gen_range(0..bs.len())];
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                let q = bumped(&p, at, s * 2 * ex);
                let before = bracket(&p.to_pd().map_err(e)?, n)?;
                let after = bracket(&q.to_pd().map_err(e)?, n)?;
                ensure!(before == after, "trial {trial}: box {at:?} of {:?}", p.rows());
            }
            Ok(format!("100 insertions of {}", 2 * ex))
        });
        parts.push((format!("N={n}"), res));
    }
    for preset in A5_PRESETS {
        let g = group(preset);
        let res = timed(|| {
            let ex = dw_vafa_exponent(&g) as i64;
            ensure!(
                dw_vafa_exponent_antiparallel(&g) as i64 == ex,
                "antiparallel order differs"
            );
            let mut rng = ChaCha8Rng::seed_from_u64(0xd3);
            for trial in 0..100 {
                let p = random_knot_plat(&mut rng, 3, 5, 3, 12);
                let bs = boxes(&p);
                let at = bs[rng.gen_range(0..bs.len())];
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                let q = bumped(&p, at, s * 2 * ex);
                let before = count(&p.to_pd().map_err(e)?, &g)?;
                let after = count(&q.to_pd().map_err(e)?, &g)?;
                ensure!(before == after, "trial {trial}: {before} vs {after}");
            }
            Ok(format!("100 insertions of {}", 2 * ex))
        });
        parts.push((preset.to_string(), res));
    }
    parts
}

/// Recomputes every certificate from the raw coefficient grid.
fn check_certificates(name: &str, rep: &PlatReductionReport) -> Result<(), String> {
    let p = &rep.output;
    let (m, n) = (p.m(), p.n());
    let rows = p.rows();
    ensure!(rows.len() == n, "{name}: row count");
    for (i, r) in rows.iter().enumerate() {
        let want = if i % 2 == 0 { m - 1 } else { m };
        ensure!(r.len() == want, "{name}: row {i} has {} boxes", r.len());
        ensure!(r.iter().all(|a| a.abs() >= 3), "{name}: row {i} = {r:?}");
    }
    ensure!(m >= 3, "{name}: m = {m}");
    ensure!(n % 2 == 0, "{name}: n = {n} odd");
    ensure!(n > 4 * m * (m - 2), "{name}: n = {n} ≤ 4m(m−2)");
    let d = (n + 2 * (m - 2) - 1) / (2 * (m - 2));
    ensure!(d > 2 * m, "{name}: d = {d} ≤ 2m");
    ensure!(rep.certificate.distance == Some(d as u64), "{name}: reported {:?}, expected {d}", rep.certificate.distance);
    ensure!(rep.certificate.certificates.all(), "{name}: {:?}", rep.certificate.certificates);
    Ok(())
}

fn criterion_4(runs: &Runs) -> Vec<(String, Check)> {
    let mut parts = Vec::new();
    let res = timed(|| {
        for (m, n, d) in [(3, 13, 7), (3, 14, 7), (4, 33, 9)] {
            let got = bridge_distance(m, n).map_err(e)?;
            ensure!(got == d, "d({m},{n}) = {got}, expected {d}");
        }
        Ok("d(3,13)=7 d(3,14)=7 d(4,33)=9".into())
    });
    parts.push(("spot values".into(), res));
    let res = timed(|| {
        ensure!(runs.plat20.len() == runs.corpus.len(), "corpus run incomplete");
        for (ent, rep) in runs.corpus.iter().zip(&runs.plat20) {
            check_certificates(&ent.name, rep)?;
        }
        Ok(format!("{} outputs", runs.plat20.len()))
    });
    parts.push(("corpus".into(), res));
    let res = timed(|| {
        let th = Theory::tl(20);
        let mut rng = ChaCha8Rng::seed_from_u64(0xc4);
        for i in 0..100 {
            let k = random_knot_plat(&mut rng, 4, 8, 3, 12).to_pd().map_err(e)?;
            let rep = reduce_plat(&k, &th).map_err(e)?;
            check_certificates(&format!("random {i}"), &rep)?;
        }
        Ok("100 outputs".into())
    });
    parts.push(("random".into(), res));
    parts
}

/// `ε = −1` when the cut edge enters its next crossing as the under
/// strand, read off the raw crossing tuples (slot 0 is the incoming under
/// edge).
fn epsilon_oracle(k: &PdDiagram, edge: u32) -> i8 {
    if k.crossings().iter().any(|c| c[0] == edge) {
        -1
    } else {
        1
    }
}

fn criterion_5(runs: &Runs) -> Vec<(String, Check)> {
    let mut parts = Vec::new();
    let res = timed(|| {
        ensure!(runs.alt20.len() == runs.corpus.len(), "corpus run incomplete");
        for (ent, rep) in runs.corpus.iter().zip(&runs.alt20) {
            let out = &rep.output;
            ensure!(out.is_alternating(), "{} not alternating", ent.name);
            ensure!(nugatory_crossings(out).is_empty(), "{} has nugatory crossings", ent.name);
            ensure!(prime_cuts(out).is_empty(), "{} has a 2-edge cut", ent.name);
        }
        Ok(format!("{} outputs", runs.alt20.len()))
    });
    parts.push(("outputs".into(), res));
    for name in ["granny", "square"] {
        let res = timed(|| {
            let t = 10u64;
            let k = &runs.corpus.iter().find(|x| x.name == name).unwrap().diagram;
            let (k1, _) = make_alternating(k, t).map_err(e)?;
            let (k2, _, _) = remove_nugatory(&k1).map_err(e)?;
            let parts = prime_decompose(&k2).map_err(e)?;
            ensure!(parts.len() == 2, "{} summands", parts.len());
            let (out, pads) = rejoin_with_pads(&k2, &parts, t).map_err(e)?;
            ensure!(pads.len() == 1, "{} pads", pads.len());
            let eps = epsilon_oracle(&k2, pads[0].cut.0);
            ensure!(pads[0].epsilon == eps, "ε = {}, oracle {eps}", pads[0].epsilon);
            let want = k2.crossing_count() + 2 * t as usize;
            ensure!(out.crossing_count() == want, "{} crossings, expected {want}", out.crossing_count());
            if name == "granny" {
                ensure!(want == 26, "granny pads to {want} crossings");
            }
            ensure!(out.is_alternating() && prime_cuts(&out).is_empty(), "rejoined diagram not reduced prime alternating");
            ensure!(bracket(&out, 20)? == bracket(&k2, 20)?, "bracket changed");
            Ok(format!("2 summands, ε = {eps}, {want} crossings"))
        });
        parts.push((name.to_string(), res));
    }
    parts
}

fn criterion_6() -> Vec<(String, Check)> {
    let g = group("a5/5cycle-a");
    let res = timed(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc6);
        let mut largest = 0;
        for i in 0..200 {
            let p = random_knot_plat(&mut rng, 4, 20, 2, usize::MAX);
            let k = p.to_pd().map_err(e)?;
            largest = largest.max(k.crossing_count());
            let a = bracket(&k, 20)?;
            let b = bracket_plat_with_cap(&p, 20, usize::MAX).map_err(e)?;
            ensure!(a == b, "plat {i}: bracket {:?}", p.rows());
            let a = count(&k, &g)?;
            let b = homcount_plat(&p, &g).map_err(e)?;
            ensure!(a == b, "plat {i}: count {a} vs {b}");
        }
        Ok(format!("200 plats, up to {largest} crossings"))
    });
    vec![("N=20 and a5/5cycle-a".into(), res)]
}

/// Coefficient of determination of the least-squares line through the
/// points.
fn r_squared(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if syy == 0.0 {
        return 1.0;
    }
    sxy * sxy / (sxx * syy)
}

/// Random knot diagram with exactly `c` crossings, in plat position.
fn large_input(rng: &mut ChaCha8Rng, c: usize) -> PdDiagram {
    loop {
        let m = rng.gen_range(3..=5);
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut total = 0;
        while total < c {
            let len = if rows.len() % 2 == 0 { m - 1 } else { m };
            let row: Vec<i64> = (0..len)
                .map(|_| {
                    let a = rng.gen_range(1..=3.min(c - total).max(1)) as i64;
                    let a = a.min((c - total) as i64);
                    total += a as usize;
                    if rng.gen_bool(0.5) { a } else { -a }
                })
                .collect();
            rows.push(row);
        }
        let p = PlatDiagram::new(m, rows).unwrap();
        if p.crossing_total() == c {
            if let Ok(k) = p.to_pd() {
                return k;
            }
        }
    }
}

fn criterion_7(runs: &Runs) -> Vec<(String, Check)> {
    let mut parts = Vec::new();
    let xs: Vec<f64> = T_VALUES.iter().map(|&t| t as f64).collect();
    type Run = fn(&PdDiagram, u64) -> Result<usize, String>;
    let alt: Run = |k, t| reduce_alternating_with(k, t).map(|r| r.output.crossing_count()).map_err(e);
    // the plat output is a compact encoding; time includes expanding it to
    // the diagram whose size is measured
    let plat: Run = |k, t| {
        let rep = reduce_plat_with(k, t).map_err(e)?;
        rep.output.to_pd().map(|d| d.crossing_count()).map_err(e)
    };
    for (name, run) in [("alternating", alt), ("plat", plat)] {
        let res = timed(|| {
            // T values interleaved per knot so machine drift hits all of
            // them alike; each knot contributes its fastest run
            let mut sizes = vec![0.0; T_VALUES.len()];
            let mut times = vec![0.0; T_VALUES.len()];
            for ent in &runs.corpus {
                let mut best = vec![f64::INFINITY; T_VALUES.len()];
                for rep in 0..TIMING_REPEATS {
                    for (i, &t) in T_VALUES.iter().enumerate() {
                        let start = Instant::now();
                        let out = run(&ent.diagram, t)?;
                        best[i] = best[i].min(start.elapsed().as_secs_f64());
                        if rep == 0 {
                            sizes[i] += out as f64;
                        }
                    }
                }
                for (acc, b) in times.iter_mut().zip(best) {
                    *acc += b;
                }
            }
            let (rs, rt) = (r_squared(&xs, &sizes), r_squared(&xs, &times));
            let detail = format!(
                "size R²={rs:.4} {:?}, time R²={rt:.4} {:?}",
                sizes,
                times.iter().map(|t| format!("{t:.2}s")).collect::<Vec<_>>()
            );
            ensure!(rs >= R2_MIN && rt >= R2_MIN, "{detail}");
            Ok(detail)
        });
        parts.push((format!("{name} scaling"), res));
    }
    let res = timed(|| {
        let th = Theory::tl(20);
        let mut rng = ChaCha8Rng::seed_from_u64(0xc7);
        let mut worst = (0.0f64, 0.0f64);
        for i in 0..LARGE_INPUTS {
            let k = large_input(&mut rng, LARGE_CROSSINGS);
            let start = Instant::now();
            reduce_alternating(&k, &th).map_err(e)?;
            let ta = start.elapsed();
            let start = Instant::now();
            reduce_plat(&k, &th).map_err(e)?;
            let tp = start.elapsed();
            ensure!(ta < PIPELINE_BUDGET_C7, "input {i}: alternating took {:.1}s", ta.as_secs_f64());
            ensure!(tp < PIPELINE_BUDGET_C7, "input {i}: plat took {:.1}s", tp.as_secs_f64());
            worst = (worst.0.max(ta.as_secs_f64()), worst.1.max(tp.as_secs_f64()));
        }
        Ok(format!(
            "{LARGE_INPUTS} inputs of {LARGE_CROSSINGS} crossings, slowest {:.2}s / {:.2}s",
            worst.0, worst.1
        ))
    });
    parts.push(("100 crossings".into(), res));
    parts
}

fn criterion_8(runs: &Runs) -> Vec<(String, Check)> {
    let res = timed(|| {
        ensure!(runs.plat20.len() == runs.corpus.len(), "corpus run incomplete");
        for (ent, rep) in runs.corpus.iter().zip(&runs.plat20) {
            let c = &rep.certificate;
            let t = ((2 * c.m - 1) * c.n / 2) as f64;
            let (lo, hi) = c.volume_bounds;
            ensure!(c.twist_number as f64 == t, "{}: twist number {}", ent.name, c.twist_number);
            ensure!((lo - V3 * (t - 2.0)).abs() < VOLUME_TOL, "{}: lower bound {lo}", ent.name);
            ensure!((hi - 10.0 * V3 * (t - 1.0)).abs() < VOLUME_TOL, "{}: upper bound {hi}", ent.name);
            ensure!(lo.is_finite() && 0.0 < lo && lo < hi, "{}: bounds {lo} {hi}", ent.name);
            ensure!(c.certificates.hyperbolic, "{}: not certified hyperbolic", ent.name);
        }
        let mut cases = std::collections::BTreeMap::new();
        for rep in &runs.alt20 {
            *cases.entry(format!("{:?}", rep.case)).or_insert(0) += 1;
        }
        ensure!(cases.values().sum::<usize>() == runs.corpus.len(), "alternating run incomplete");
        let c = &runs.plat20[runs.corpus.iter().position(|x| x.name == "4_1").unwrap()].certificate;
        Ok(format!(
            "trichotomy {cases:?}; 4_1 plat m={} n={} volume in [{:.1}, {:.1}] (advisory)",
            c.m, c.n, c.volume_bounds.0, c.volume_bounds.1
        ))
    });
    vec![("advisory report".into(), res)]
}

/// Runs the corpus through both pipelines at `N = 20` when a criterion
/// needs their outputs but the criterion producing them was not selected.
fn fill_runs(runs: &mut Runs) {
    let th = Theory::tl(20);
    if runs.plat20.is_empty() {
        runs.plat20 = runs.corpus.iter().filter_map(|x| reduce_plat(&x.diagram, &th).ok()).collect();
    }
    if runs.alt20.is_empty() {
        runs.alt20 = runs.corpus.iter().filter_map(|x| reduce_alternating(&x.diagram, &th).ok()).collect();
    }
}

/// Numeric arguments select criteria; anything else (such as flags passed
/// by `cargo test`) is ignored.
fn main() {
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let selected = |id: usize| wanted.is_empty() || wanted.contains(&id);
    let mut runs = Runs {
        corpus: corpus(),
        plat20: Vec::new(),
        alt20: Vec::new(),
    };
    let (mut ran, mut failed) = (0, 0);
    let mut report = |id: usize, parts: Vec<(String, Check)>| {
        let ok = parts.iter().all(|(_, r)| r.is_ok());
        let detail: Vec<String> = parts
            .into_iter()
            .map(|(name, r)| match r {
                Ok(s) => format!("{name}: ok ({s})"),
                Err(s) => format!("{name}: FAILED ({s})"),
            })
            .collect();
        println!("{} criterion {id}: {}", if ok { "PASS" } else { "FAIL" }, detail.join("; "));
        ran += 1;
        if !ok {
            failed += 1;
        }
    };
    if selected(1) {
        report(1, criterion_1(&mut runs));
    }
    if selected(2) {
        report(2, criterion_2(&mut runs));
    }
    if selected(3) {
        report(3, criterion_3());
    }
    if [4, 5, 8].into_iter().any(selected) {
        fill_runs(&mut runs);
    }
    if selected(4) {
        report(4, criterion_4(&runs));
    }
    if selected(5) {
        report(5, criterion_5(&runs));
    }
    if selected(6) {
        report(6, criterion_6());
    }
    if selected(7) {
        report(7, criterion_7(&runs));
    }
    if selected(8) {
        report(8, criterion_8(&runs));
    }
    println!("{failed} of {ran} criteria failed");
    if failed > 0 {
        std::process::exit(1);
    }
}

/// Runs one check and appends its wall-clock time to the outcome.
fn timed(f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let res = f();
    let secs = start.elapsed().as_secs_f64();
    match res {
        Ok(s) => Ok(format!("{s}, {secs:.1}s")),
        Err(s) => Err(format!("{s}, {secs:.1}s")),
    }
}
