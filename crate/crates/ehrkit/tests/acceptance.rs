//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N [PASS|FAIL] ...` line. All comparisons are exact; the only
//! pinned tolerances are the wall-clock limits below.
//!
//! Run with `cargo test -p ehrkit --test acceptance -- --nocapture` to see
//! the report lines.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ehrkit_core::barvinok::{decompose_unimodular, SignedUnimodularCone};
use ehrkit_core::ehrhart::{
    count, is_period, min_period, quasipolynomial, DefaultFactoring, DilationCounter, PipelineOptions, QuasiPolynomial,
};
use ehrkit_core::exact::{det, rat, ratio, IntVector, Rational, RationalMatrix};
use ehrkit_core::oracle::{
    brute_min_period, brute_quasipolynomial, expand_dense_along, quasipolynomial_from_counts, BruteCounter,
};
use ehrkit_core::polytope::{Cone, Polytope};
use ehrkit_core::rgf::{equals_laurent, hadamard, power_sum_rgf, Direction, ShortRGF, Term};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_EXAMPLE: Duration = Duration::from_secs(1);
const LIMIT_PENTAGON: Duration = Duration::from_secs(30);
const LIMIT_POLYNOMIALITY: Duration = Duration::from_secs(10);
const LIMIT_COUNTING: Duration = Duration::from_secs(300);
const LIMIT_LARGE_T: Duration = Duration::from_secs(1);

const RANDOM_POLYTOPES: usize = 100;
const MAX_COEFFICIENT: i64 = 8;
const MAX_VERTEX_DENOMINATOR: u64 = 6;
const MAX_DENOMINATOR: u64 = 60;
const LAURENT_TRIALS: u64 = 200;
const HADAMARD_TRIALS: u64 = 60;
const RANDOM_CONES: usize = 50;
const MAX_CONE_INDEX: i64 = 50;

fn report(n: u32, ok: bool, text: &str) {
    println!("criterion {n} [{}] {text}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {text}");
}

fn poly(dim: usize, rows: &[&[i64]]) -> Polytope {
    Polytope::from_rows(dim, rows).unwrap()
}

fn n(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `[lo_1, hi_1] x ... x [lo_d, hi_d]`.
fn product(bounds: &[(i64, i64)]) -> Polytope {
    let d = bounds.len();
    let mut rows = Vec::new();
    for (i, (lo, hi)) in bounds.iter().enumerate() {
        let mut r = vec![0; d + 1];
        r[i] = -1;
        r[d] = -lo;
        rows.push(r.clone());
        r[i] = 1;
        r[d] = *hi;
        rows.push(r);
    }
    let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
    poly(d, &refs)
}

/// `k` times the standard simplex `{x >= 0, sum x <= 1}`.
fn simplex(d: usize, k: i64) -> Polytope {
    let mut rows = Vec::new();
    for i in 0..d {
        let mut r = vec![0; d + 1];
        r[i] = -1;
        rows.push(r);
    }
    let mut r = vec![1; d + 1];
    r[d] = k;
    rows.push(r);
    let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
    poly(d, &refs)
}

fn half_cube(d: usize) -> Polytope {
    let mut rows = Vec::new();
    for i in 0..d {
        let mut r = vec![0; d + 1];
        r[i] = -1;
        rows.push(r.clone());
        r[i] = 2;
        r[d] = 1;
        rows.push(r);
    }
    let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
    poly(d, &refs)
}

#[test]
fn criterion_1_half_square() {
    let start = Instant::now();
    let p = half_cube(2);
    let q = quasipolynomial(&p, &PipelineOptions::default()).unwrap();
    // (t + 2)^2 / 4 and (t + 1)^2 / 4
    let want = QuasiPolynomial {
        period: 2,
        constituents: vec![vec![rat(1), rat(1), ratio(1, 4)], vec![ratio(1, 4), ratio(1, 2), ratio(1, 4)]],
    };
    let periods = (is_period(&p, &n(1)).unwrap(), is_period(&p, &n(2)).unwrap());
    let m = min_period(&p, &DefaultFactoring).unwrap();
    let elapsed = start.elapsed();
    let ok = q == want && periods == (false, true) && m == n(2) && elapsed < LIMIT_EXAMPLE;
    report(
        1,
        ok,
        &format!(
            "[0,1/2]^2: constituents {:?}, is_period(1,2) = {periods:?}, min_period = {m}, {elapsed:.2?} (limit {LIMIT_EXAMPLE:?})",
            q.constituents.iter().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_2_pentagons() {
    let mut ok = true;
    let mut lines = Vec::new();
    for (big_d, s) in [(2, 1), (4, 2), (6, 2), (6, 3), (8, 4), (12, 6)] {
        let start = Instant::now();
        let p = Polytope::pentagon(big_d, s).unwrap();
        let den = p.denominator();
        let m = min_period(&p, &DefaultFactoring).unwrap();
        let brute = brute_min_period(&brute_quasipolynomial(&p).unwrap());
        let elapsed = start.elapsed();
        let good = den == n(big_d) && m == n(s) && brute == s as u64 && elapsed < LIMIT_PENTAGON;
        ok &= good;
        lines.push(format!("(D={big_d},s={s}): D(P)={den} min={m} brute={brute} {elapsed:.2?}"));
    }
    report(2, ok, &format!("{} (limit {LIMIT_PENTAGON:?} each)", lines.join("; ")));
}

#[test]
fn criterion_3_polynomiality() {
    let start = Instant::now();
    let mut integral = vec![
        product(&[(0, 1)]),
        product(&[(0, 2)]),
        product(&[(-1, 3)]),
        product(&[(2, 7)]),
        product(&[(0, 1), (0, 1)]),
        product(&[(0, 2), (0, 1)]),
        product(&[(-1, 1), (0, 3)]),
        product(&[(0, 3), (1, 2)]),
        product(&[(0, 1), (0, 1), (0, 1)]),
        product(&[(0, 1), (0, 2), (0, 1)]),
        product(&[(-1, 0), (0, 2), (1, 2)]),
        product(&[(0, 2), (0, 2), (0, 2)]),
    ];
    for (d, k) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (1, 4), (3, 3)] {
        integral.push(simplex(d, k));
    }
    let polys: Vec<bool> = integral.iter().map(|p| is_period(p, &n(1)).unwrap()).collect();
    let halves: Vec<bool> = (1..=3).map(|d| is_period(&half_cube(d), &n(1)).unwrap()).collect();
    let elapsed = start.elapsed();
    let good = polys.iter().filter(|&&b| b).count();
    let ok = integral.len() == 20 && good == 20 && halves.iter().all(|b| !b) && elapsed < LIMIT_POLYNOMIALITY;
    report(
        3,
        ok,
        &format!(
            "is_period(1) true on {good}/{} integral polytopes, [0,1/2]^d (d=1..3) gives {halves:?}, {elapsed:.2?} (limit {LIMIT_POLYNOMIALITY:?})",
            integral.len()
        ),
    );
}

struct Instance {
    polytope: Polytope,
    /// `counts[t]` for `t = 0, ..., (d + 2) D`, by enumeration
    counts: Vec<u128>,
    brute_seconds: f64,
}

fn max_vertex_denominator(p: &Polytope) -> u64 {
    p.vertices().iter().flatten().map(|x| x.denom().to_u64().unwrap_or(u64::MAX)).max().unwrap_or(1)
}

/// Box rows `-a x_i <= b`, `a' x_i <= b'` and up to two random cuts, all
/// coefficients within `MAX_COEFFICIENT`.
fn random_polytope(rng: &mut ChaCha8Rng, d: usize) -> Option<Polytope> {
    let mut rows = Vec::new();
    for i in 0..d {
        for s in [-1, 1] {
            let mut r = vec![0; d + 1];
            r[i] = s * rng.gen_range(1..=MAX_COEFFICIENT);
            r[d] = rng.gen_range(0..=3);
            rows.push(r);
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let mut r: Vec<i64> = (0..d).map(|_| rng.gen_range(-MAX_COEFFICIENT..=MAX_COEFFICIENT)).collect();
        r.push(rng.gen_range(-2..=MAX_COEFFICIENT));
        rows.push(r);
    }
    let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
    let p = Polytope::from_rows(d, &refs).ok()?;
    let keep = !p.is_empty()
        && max_vertex_denominator(&p) <= MAX_VERTEX_DENOMINATOR
        && p.denominator() <= BigInt::from(MAX_DENOMINATOR);
    keep.then_some(p)
}

fn instances() -> &'static [Instance] {
    static CELL: OnceLock<Vec<Instance>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
        let mut out = Vec::new();
        while out.len() < RANDOM_POLYTOPES {
            let Some(p) = random_polytope(&mut rng, 1 + out.len() % 3) else {
                continue;
            };
            let start = Instant::now();
            let brute = BruteCounter::new(&p);
            let top = (p.dim() as u64 + 2) * p.denominator().to_u64().unwrap();
            let counts = (0..=top).map(|t| brute.count(t)).collect();
            out.push(Instance { polytope: p, counts, brute_seconds: start.elapsed().as_secs_f64() });
        }
        out
    })
}

#[test]
fn criterion_4_counting_oracle() {
    let insts = instances();
    let start = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (k, inst) in insts.iter().enumerate() {
        let counter = DilationCounter::new(&inst.polytope);
        for (t, &want) in inst.counts.iter().enumerate() {
            let got = counter.count(&BigInt::from(t));
            checked += 1;
            if got != BigInt::from(want) {
                failures.push(format!("instance {k} t={t}: {got} vs {want}"));
            }
        }
        // the direct per-dilation path on a few values
        for t in [0, 1, inst.counts.len() as u64 - 1] {
            let got = count(&inst.polytope, &BigInt::from(t));
            checked += 1;
            if got != BigInt::from(inst.counts[t as usize]) {
                failures.push(format!("instance {k} t={t} (direct): {got}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let brute: f64 = insts.iter().map(|i| i.brute_seconds).sum();
    let dims: Vec<usize> = (1..=3).map(|d| insts.iter().filter(|i| i.polytope.dim() == d).count()).collect();
    let max_d = insts.iter().map(|i| i.polytope.denominator()).max().unwrap();
    let total = Duration::from_secs_f64(brute) + elapsed;
    let ok = insts.len() == RANDOM_POLYTOPES && failures.is_empty() && total < LIMIT_COUNTING;
    report(
        4,
        ok,
        &format!(
            "{} polytopes (d=1/2/3: {dims:?}, max D {max_d}), {checked} counts over t in [0, (d+2)D] equal enumeration; failures {:?}; {:.1} s enumeration + {elapsed:.2?} (limit {LIMIT_COUNTING:?})",
            insts.len(),
            failures.iter().take(3).collect::<Vec<_>>(),
            brute
        ),
    );
}

#[test]
fn criterion_5_quasipolynomial_oracle() {
    let insts = instances();
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut periods: BTreeMap<u64, usize> = BTreeMap::new();
    for (k, inst) in insts.iter().enumerate() {
        let p = &inst.polytope;
        let q = quasipolynomial(p, &PipelineOptions::default()).unwrap();
        let brute = quasipolynomial_from_counts(p, |t| inst.counts[t as usize]).unwrap();
        if q != brute {
            failures.push(format!("instance {k}: quasi-polynomials differ"));
        }
        let m = min_period(p, &DefaultFactoring).unwrap();
        let bm = brute_min_period(&brute);
        if m != BigInt::from(bm) {
            failures.push(format!("instance {k}: min period {m} vs {bm}"));
        }
        *periods.entry(bm).or_default() += 1;
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty();
    report(
        5,
        ok,
        &format!(
            "{} polytopes with D <= {MAX_DENOMINATOR}: quasipolynomial and min_period equal the oracle; min periods seen {periods:?}; failures {:?}; {elapsed:.2?}",
            insts.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    );
}

fn rand_vec(rng: &mut ChaCha8Rng, d: usize, r: i64) -> Vec<i64> {
    (0..d).map(|_| rng.gen_range(-r..=r)).collect()
}

fn rand_nonzero(rng: &mut ChaCha8Rng, d: usize, r: i64) -> Vec<i64> {
    loop {
        let v = rand_vec(rng, d, r);
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

fn rand_coeff(rng: &mut ChaCha8Rng) -> Rational {
    let mut q = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    while q.is_zero() {
        q = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    }
    q
}

fn mk(c: Rational, num: &[i64], den: &[&[i64]]) -> Term {
    Term::new(c, IntVector::from_i64s(num), den.iter().map(|b| IntVector::from_i64s(b)).collect())
}

fn plus(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Random Laurent polynomial on `[-5, 5]^d`, its monomials rewritten through
/// `x^m = x^m/(1 - x^b) - x^(m+b)/(1 - x^b)` once or twice, compared with the
/// plain monomial list, optionally after perturbing one coefficient.
fn laurent_trial(seed: u64, perturb: bool) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rng.gen_range(1..=2);
    let mut monos: Vec<(Rational, Vec<i64>)> =
        (0..rng.gen_range(1..=6)).map(|_| (rand_coeff(&mut rng), rand_vec(&mut rng, d, 5))).collect();
    let mut encoded = Vec::new();
    for (c, m) in &monos {
        let b = rand_nonzero(&mut rng, d, 3);
        match rng.gen_range(0..3) {
            0 => encoded.push(mk(c.clone(), m, &[])),
            1 => {
                encoded.push(mk(c.clone(), m, &[&b]));
                encoded.push(mk(-c, &plus(m, &b), &[&b]));
            }
            _ => {
                let b2 = rand_nonzero(&mut rng, d, 2);
                let mb = plus(m, &b);
                encoded.push(mk(c.clone(), m, &[&b]));
                encoded.push(mk(-c, &mb, &[&b, &b2]));
                encoded.push(mk(c.clone(), &plus(&mb, &b2), &[&b, &b2]));
            }
        }
    }
    if perturb {
        let i = rng.gen_range(0..monos.len());
        monos[i].0 += rand_coeff(&mut rng);
    }
    let direct: Vec<Term> = monos.iter().map(|(c, m)| mk(c.clone(), m, &[])).collect();
    let g1 = ShortRGF::from_terms(d, encoded).unwrap();
    let g2 = ShortRGF::from_terms(d, direct).unwrap();
    equals_laurent(&g1, &g2).unwrap()
}

fn rand_rgf(rng: &mut ChaCha8Rng, d: usize) -> ShortRGF {
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| {
            let den: Vec<Vec<i64>> = (0..rng.gen_range(0..=2)).map(|_| rand_nonzero(rng, d, 2)).collect();
            let refs: Vec<&[i64]> = den.iter().map(|b| &b[..]).collect();
            mk(rand_coeff(rng), &rand_vec(rng, d, 3), &refs)
        })
        .collect();
    ShortRGF::from_terms(d, terms).unwrap()
}

fn to_i64s(v: &IntVector) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A direction inducing the same expansion as `l` wherever `<l, b> != 0`
/// and nonzero on every denominator.
fn perturb_direction(l: &[i64], f: &ShortRGF) -> Vec<i64> {
    let dens: Vec<Vec<i64>> = f.terms().iter().flat_map(|t| t.den.iter().map(to_i64s)).collect();
    if dens.iter().all(|b| dot(l, b) != 0) {
        return l.to_vec();
    }
    let k = 1 + dens.iter().flatten().map(|x| x.abs()).max().unwrap();
    (0..l.len())
        .map(|i| l.iter().enumerate().map(|(j, x)| k * x + (i == j) as i64).collect::<Vec<_>>())
        .find(|c| dens.iter().all(|b| dot(c, b) != 0))
        .unwrap()
}

/// Hadamard product against the coefficientwise product of dense expansions
/// on the numerator hull widened by 3.
fn hadamard_trial(seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rng.gen_range(1..=2);
    let (g1, g2) = (rand_rgf(&mut rng, d), rand_rgf(&mut rng, d));
    let dir = if d == 1 { Direction::ascending() } else { Direction::generic_for(d, &[&g1, &g2]) };
    let prod = hadamard(&g1, &g2, &dir).unwrap();
    let l = to_i64s(&dir.0);
    let (mut lo, mut hi) = (vec![i64::MAX; d], vec![i64::MIN; d]);
    for t in g1.terms().iter().chain(g2.terms()) {
        for (i, x) in to_i64s(&t.num).into_iter().enumerate() {
            lo[i] = lo[i].min(x - 3);
            hi[i] = hi[i].max(x + 3);
        }
    }
    let a = expand_dense_along(&g1, &l, &lo, &hi);
    let b = expand_dense_along(&g2, &l, &lo, &hi);
    let c = expand_dense_along(&prod, &perturb_direction(&l, &prod), &lo, &hi);
    a.exponents().iter().all(|e| c.get(e) == a.get(e) * b.get(e))
}

#[test]
fn criterion_6_rgf_algebra() {
    let equal_ok = (0..LAURENT_TRIALS / 2).filter(|&s| laurent_trial(s, false)).count();
    let differ_ok = (0..LAURENT_TRIALS / 2).filter(|&s| !laurent_trial(1_000_000 + s, true)).count();
    let had_ok = (0..HADAMARD_TRIALS).filter(|&s| hadamard_trial(s)).count();
    let mut power_ok = true;
    for big_d in 1..=30i64 {
        for j in 0..=4u32 {
            let s = expand_dense_along(&power_sum_rgf(j, &n(big_d)), &[1], &[-3], &[big_d + 3]);
            power_ok &= (-3..=big_d + 3)
                .all(|i| s.get(&[i]) == if (0..big_d).contains(&i) { rat(i.pow(j)) } else { rat(0) });
        }
    }
    let half = (LAURENT_TRIALS / 2) as usize;
    let ok = equal_ok == half && differ_ok == half && had_ok == HADAMARD_TRIALS as usize && power_ok;
    report(
        6,
        ok,
        &format!(
            "equals_laurent {equal_ok}/{half} disguised-equal and {differ_ok}/{half} perturbed-unequal; hadamard = dense product on {had_ok}/{HADAMARD_TRIALS} windows; power sums D <= 30, j <= 4 dense-correct: {power_ok}"
        ),
    );
}

fn in_cone(x: &[Rational], inv: &RationalMatrix, apex: &[Rational], closed: Option<&[bool]>) -> bool {
    let rel: Vec<Rational> = x.iter().zip(apex).map(|(a, b)| a - b).collect();
    inv.mul_vec(&rel).iter().enumerate().all(|(i, l)| match closed {
        Some(c) if !c[i] => l.is_positive(),
        _ => !l.is_negative(),
    })
}

fn cone_identity_holds(c: &Cone, pieces: &[SignedUnimodularCone]) -> bool {
    let d = c.dim();
    let inv = RationalMatrix::from_int_columns(&c.generators).inverse().unwrap();
    let invs: Vec<RationalMatrix> =
        pieces.iter().map(|p| RationalMatrix::from_int_columns(&p.generators).inverse().unwrap()).collect();
    let r: i64 = if d == 2 { 10 } else { 5 };
    let side = (2 * r + 1) as usize;
    (0..side.pow(d as u32)).all(|code| {
        let x: Vec<Rational> = (0..d).map(|i| rat((code / side.pow(i as u32) % side) as i64 - r)).collect();
        let want = in_cone(&x, &inv, &c.apex, None) as i32;
        let got: i32 = pieces
            .iter()
            .zip(&invs)
            .filter(|(p, pi)| in_cone(&x, pi, &p.apex, Some(&p.closed)))
            .map(|(p, _)| p.sign)
            .sum();
        got == want
    })
}

#[test]
fn criterion_7_barvinok_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let (mut unimodular, mut identity, mut pieces_total, mut max_index) = (0, 0, 0, 0i64);
    for _ in 0..RANDOM_CONES {
        let d = rng.gen_range(2..=3);
        let c = loop {
            let gens: Vec<IntVector> = (0..d).map(|_| IntVector::from_i64s(&rand_vec(&mut rng, d, 6))).collect();
            let index = det(&gens).abs();
            if !index.is_zero() && index <= BigInt::from(MAX_CONE_INDEX) {
                max_index = max_index.max(index.to_i64().unwrap());
                let apex = (0..d).map(|_| ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect();
                break Cone::new(apex, gens);
            }
        };
        let pieces = decompose_unimodular(&c).unwrap();
        pieces_total += pieces.len();
        unimodular += pieces.iter().all(|p| det(&p.generators).abs().is_one()) as usize;
        identity += cone_identity_holds(&c, &pieces) as usize;
    }
    let ok = unimodular == RANDOM_CONES && identity == RANDOM_CONES;
    report(
        7,
        ok,
        &format!(
            "{RANDOM_CONES} random simplicial cones (index <= {MAX_CONE_INDEX}, max seen {max_index}): all pieces |det| = 1 in {unimodular}, window identity in {identity}; {pieces_total} pieces"
        ),
    );
}

#[test]
fn criterion_8_large_dilation() {
    let start = Instant::now();
    let q = quasipolynomial(&simplex(3, 1), &PipelineOptions::default()).unwrap();
    let t = BigInt::from(1_000_000_000u64);
    let got = q.evaluate(&t);
    let elapsed = start.elapsed();
    let want = (&t + 3u32) * (&t + 2u32) * (&t + 1u32) / 6u32;
    let ok = got == Rational::from_integer(want.clone()) && elapsed < LIMIT_LARGE_T;
    report(8, ok, &format!("standard 3-simplex at t = 10^9: {got}, C(t+3,3) = {want}, {elapsed:.2?} (limit {LIMIT_LARGE_T:?})"));
}
