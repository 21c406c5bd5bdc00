//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mzv_shuffle::morphisms::{sigma, sigma_inv, smap, smap_inv, star_expand, tau, tau_word, IndexCombination};
use mzv_shuffle::numerics::{
    eval_combination, mzv, mzv_star, mzv_star_direct_with_cutoff, riemann_zeta, truncated_mzv, truncated_mzv_star,
    ApproxValue, Precision,
};
use mzv_shuffle::series::{eval_zeta_poly, height_one_gf, ZetaPoly};
use mzv_shuffle::verify::{
    check_alternating_hook_shuffle, check_alternating_single_shuffle, check_double_shuffle, check_duality, check_ohno,
    check_s_map_hook_expansion, check_star_hook_certificate, check_star_hook_duality, check_star_hook_formula,
    check_weighted_hook_sum, CheckResult,
};
use mzv_shuffle::wordalg::{
    admissible_indices, admissible_up_to, q, qf, shuffle, shuffle_poly, Index, Letter, Poly, Word,
};

const EXACT_GRID: u32 = 6;
const NUMERIC_GRID: u32 = 4;
const CHECK_TOL: f64 = 1e-6;
const STAR_21_TOL: f64 = 1e-8;
const STAR_ORACLE_CUTOFF: u64 = 3000;
const STAR_ORACLE_TOL: f64 = 1e-5;
const CLOSED_FORM_TOL: f64 = 1e-7;
const RANDOM_CASES: usize = 1000;
const SEED: u64 = 0x5eed_2024;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    summary: String,
}

fn outcome(passed: bool, summary: impl Into<String>) -> Outcome {
    Outcome { passed, summary: summary.into() }
}

fn prec(eps: f64) -> Precision {
    Precision::new(eps).unwrap()
}

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).unwrap()
}

fn word_from_bits(len: usize, bits: u32) -> Word {
    Word::from_letters((0..len).map(|i| if bits >> i & 1 == 1 { Letter::Y } else { Letter::X })).unwrap()
}

fn words_up_to(max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|len| (0..1u32 << len).map(move |b| word_from_bits(len, b))).collect()
}

fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    word_from_bits(len, rng.gen())
}

fn binomial(n: usize, k: usize) -> BigRational {
    let mut c = BigInt::from(1);
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(c)
}

/// Fails the list of results, naming the first failure.
fn all_pass(results: &[CheckResult]) -> Result<(), String> {
    match results.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(r) => Err(format!(
            "{} {} failed: residual {:?} terms {:?} {:?}",
            r.name,
            r.params_label(),
            r.residual,
            r.detail_terms,
            r.note
        )),
    }
}

/// Largest `|residual| − err` over numeric results.
fn worst_excess(results: &[CheckResult]) -> f64 {
    results.iter().filter_map(|r| r.residual).map(|r| r.value().abs() - r.err()).fold(f64::NEG_INFINITY, f64::max)
}

fn exact_structural_suite() -> Outcome {
    let mut results = Vec::new();
    for k in 1..=EXACT_GRID {
        for n in 1..=EXACT_GRID {
            results.push(check_s_map_hook_expansion(k, n));
            results.push(check_weighted_hook_sum(k, n));
            results.push(check_alternating_single_shuffle(k, n));
            results.push(check_alternating_hook_shuffle(k, n));
        }
    }
    match all_pass(&results) {
        Ok(()) => {
            outcome(true, format!("{} exact checks over 1<=k,n<={EXACT_GRID}, all differences zero", results.len()))
        }
        Err(e) => outcome(false, e),
    }
}

fn shuffle_laws() -> Outcome {
    let words = words_up_to(5);
    let mut pairs = 0usize;
    for u in &words {
        if shuffle(u, &Word::EMPTY) != Poly::from(*u) {
            return outcome(false, format!("unit fails at {u}"));
        }
        for v in &words {
            let uv = shuffle(u, v);
            if uv != shuffle(v, u) || uv.coefficient_mass() != binomial(u.len() + v.len(), u.len()) {
                return outcome(false, format!("commutativity or mass fails at {u}, {v}"));
            }
            pairs += 1;
        }
    }
    let short = words_up_to(3);
    for u in &short {
        for v in &short {
            let uv = shuffle(u, v);
            for w in &short {
                if shuffle_poly(&uv, &Poly::from(*w)) != shuffle_poly(&Poly::from(*u), &shuffle(v, w)) {
                    return outcome(false, format!("associativity fails at {u}, {v}, {w}"));
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..RANDOM_CASES {
        let (u, v) = (random_word(&mut rng, 8), random_word(&mut rng, 8));
        let uv = shuffle(&u, &v);
        if uv != shuffle(&v, &u)
            || uv.coefficient_mass() != binomial(u.len() + v.len(), u.len())
            || shuffle(&u, &Word::EMPTY) != Poly::from(u)
        {
            return outcome(false, format!("random pair {u}, {v} fails"));
        }
        let (a, b, c) = (random_word(&mut rng, 5), random_word(&mut rng, 5), random_word(&mut rng, 5));
        if shuffle_poly(&shuffle(&a, &b), &Poly::from(c)) != shuffle_poly(&Poly::from(a), &shuffle(&b, &c)) {
            return outcome(false, format!("random associativity fails at {a}, {b}, {c}"));
        }
    }
    outcome(
        true,
        format!(
            "{pairs} exhaustive pairs (len<=5), {} exhaustive triples (len<=3), {RANDOM_CASES} random pairs (len<=8) and triples (len<=5)",
            short.len().pow(3)
        ),
    )
}

fn map_laws() -> Outcome {
    let words = words_up_to(6);
    for u in &words {
        let pu = Poly::from(*u);
        let smap_ok = !u.in_h1() || (smap(&smap_inv(&pu)) == pu && smap_inv(&smap(&pu)) == pu);
        if sigma(&sigma_inv(&pu)) != pu || sigma_inv(&sigma(&pu)) != pu || tau(&tau(&pu)) != pu || !smap_ok {
            return outcome(false, format!("inverse law fails at {u}"));
        }
    }
    let mut pairs = 0usize;
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= 6) {
            let (pu, pv) = (Poly::from(*u), Poly::from(*v));
            let uv = shuffle(u, v);
            if tau_word(&u.concat(v)) != tau_word(v).concat(&tau_word(u))
                || sigma(&uv) != shuffle_poly(&sigma(&pu), &sigma(&pv))
                || tau(&uv) != shuffle_poly(&tau(&pu), &tau(&pv))
            {
                return outcome(false, format!("automorphism law fails at {u}, {v}"));
            }
            pairs += 1;
        }
    }
    outcome(
        true,
        format!("{} words (len<=6) for inverses, {pairs} pairs (total len<=6) for automorphisms", words.len()),
    )
}

fn numeric_duality() -> Outcome {
    let p = prec(CHECK_TOL);
    let results: Vec<CheckResult> = admissible_up_to(9).iter().map(|k| check_duality(k, p)).collect();
    let at_nine = admissible_indices(9).len();
    match all_pass(&results) {
        Ok(()) => outcome(
            true,
            format!(
                "{} admissible indices of weight <= 9 ({at_nine} at weight 9), worst |r|-err {:.1e}",
                results.len(),
                worst_excess(&results)
            ),
        ),
        Err(e) => outcome(false, e),
    }
}

fn ohno() -> Outcome {
    let p = prec(CHECK_TOL);
    let mut results = Vec::new();
    for k in admissible_up_to(6) {
        for l in 0..=3 {
            results.push(check_ohno(&k, l, p));
        }
        let d = check_duality(&k, p).residual.unwrap();
        let o = check_ohno(&k, 0, p).residual.unwrap();
        if d.value().to_bits() != o.value().to_bits() || d.err().to_bits() != o.err().to_bits() {
            return outcome(false, format!("l=0 residual for {k} differs from duality: {o} vs {d}"));
        }
    }
    match all_pass(&results) {
        Ok(()) => {
            outcome(true, format!("{} cases (weight <= 6, 0<=l<=3), l=0 bit-identical to duality", results.len()))
        }
        Err(e) => outcome(false, e),
    }
}

fn double_shuffle() -> Outcome {
    let p = prec(CHECK_TOL);
    let pool = admissible_up_to(6);
    let mut results = Vec::new();
    for (i, u) in pool.iter().enumerate() {
        for v in &pool[i..] {
            if u.weight() + v.weight() <= 8 {
                results.push(check_double_shuffle(u, v, p));
            }
        }
    }
    match all_pass(&results) {
        Ok(()) => outcome(
            true,
            format!(
                "{} unordered pairs with wt(u)+wt(v) <= 8, worst |r|-err {:.1e}",
                results.len(),
                worst_excess(&results)
            ),
        ),
        Err(e) => outcome(false, e),
    }
}

fn star_values() -> Outcome {
    let p = prec(1e-10);
    let r = mzv_star(&idx(&[2, 1]), p).unwrap() - riemann_zeta(3, p).unwrap().scale(&q(2));
    if r.magnitude() > STAR_21_TOL {
        return outcome(false, format!("zeta*(2,1) - 2 zeta(3) = {r}"));
    }
    let mut worst_direct = 0f64;
    let mut worst_truncated = 0f64;
    let mut worst_plain = 0f64;
    let mut count = 0;
    for k in admissible_up_to(5) {
        let route = mzv_star(&k, prec(1e-9)).unwrap();
        // weak-inequality sum over m ≤ M, completed by its asymptotic tail
        let direct = mzv_star_direct_with_cutoff(&k, STAR_ORACLE_CUTOFF).unwrap();
        worst_direct = worst_direct.max((direct - route).magnitude());
        // the same finite sums on both sides of ζ* = Σ ζ over the expansion
        let truncated_route: ApproxValue =
            star_expand(&k).unwrap().terms().map(|(t, c)| truncated_mzv(t, STAR_ORACLE_CUTOFF).scale(c)).sum();
        worst_truncated =
            worst_truncated.max((truncated_mzv_star(&k, STAR_ORACLE_CUTOFF) - truncated_route).magnitude());
        worst_plain = worst_plain.max((truncated_mzv_star(&k, STAR_ORACLE_CUTOFF) - route).value().abs());
        count += 1;
    }
    let passed = worst_direct <= STAR_ORACLE_TOL && worst_truncated <= STAR_ORACLE_TOL;
    outcome(
        passed,
        format!(
            "zeta*(2,1)-2zeta(3) within {:.1e}; {count} indices of weight <= 5 at M={STAR_ORACLE_CUTOFF}: \
             direct+tail {worst_direct:.1e}, truncated vs truncated {worst_truncated:.1e} \
             (bare truncation misses the limit by {worst_plain:.1e})",
            r.magnitude()
        ),
    )
}

fn generating_function() -> Outcome {
    let gf = height_one_gf(8);
    if gf.has_gamma() {
        return outcome(false, "gamma survives in height_one_gf(8)");
    }
    if gf.coeff(1, 1) != ZetaPoly::zeta(2) || gf.coeff(2, 1) != ZetaPoly::zeta(3) || gf.coeff(1, 2) != ZetaPoly::zeta(3)
    {
        return outcome(false, "low-order coefficients are not z2, z3, z3");
    }
    let p = prec(1e-8);
    let mut worst = 0f64;
    let mut count = 0;
    for k in 1..7u32 {
        for n in 1..=7 - k {
            let poly_value = eval_zeta_poly(&gf.coeff(k, n), p).unwrap();
            let direct = mzv(&Index::hook(k + 1, n as usize - 1), p).unwrap();
            let r = poly_value - direct;
            if r.value().abs() > r.err() + CHECK_TOL {
                return outcome(false, format!("coefficient ({k},{n}) off by {r}"));
            }
            worst = worst.max(r.magnitude());
            count += 1;
        }
    }
    outcome(true, format!("gamma-free; {count} coefficients with k+n <= 7 match, worst |r|+err {worst:.1e}"))
}

fn star_hook_identities() -> Outcome {
    let p = prec(CHECK_TOL);
    let mut results = Vec::new();
    for k in 1..=NUMERIC_GRID {
        for n in 1..=NUMERIC_GRID {
            results.push(check_star_hook_formula(k, n, p));
            results.push(check_star_hook_duality(k, n, p));
            results.push(check_star_hook_certificate(k, n, p));
        }
    }
    match all_pass(&results) {
        Ok(()) => outcome(
            true,
            format!(
                "{} checks over 1<=k,n<={NUMERIC_GRID}, certificates antisymmetric, worst |r|-err {:.1e}",
                results.len(),
                worst_excess(&results)
            ),
        ),
        Err(e) => outcome(false, e),
    }
}

fn closed_forms() -> Outcome {
    let p = prec(1e-10);
    let z2 = riemann_zeta(2, p).unwrap();
    let z4 = riemann_zeta(4, p).unwrap();
    let quarter = qf(1, 4);
    let three_quarters = qf(3, 4);
    // z₂ ⧢ z₂ = 2 z₂z₂ + 4 z₃z₁ gives 2ζ(2,2) + 4ζ(3,1) = ζ(2)²;
    // with ζ(2,2) + ζ(3,1) = ζ(4) this yields ζ(3,1) = (ζ(2)² − 2ζ(4))/2
    let z2w = idx(&[2]).to_word();
    let product = IndexCombination::from_poly(&shuffle(&z2w, &z2w)).unwrap();
    let a = product.coeff(&idx(&[2, 2]));
    let b = product.coeff(&idx(&[3, 1]));
    if a != q(2) || b != q(4) {
        return outcome(false, format!("z2 shuffle z2 = {product}"));
    }
    let sum_formula: IndexCombination = [(idx(&[2, 2]), q(1)), (idx(&[3, 1]), q(1))].into_iter().collect();
    let derived_31 = (z2 * z2 - z4.scale(&q(2))).scale(&qf(1, 2));
    let derived_22 = z4 - derived_31;
    let r31 = mzv(&idx(&[3, 1]), p).unwrap() - z4.scale(&quarter);
    let r22 = mzv(&idx(&[2, 2]), p).unwrap() - z4.scale(&three_quarters);
    let d31 = derived_31 - z4.scale(&quarter);
    let d22 = derived_22 - z4.scale(&three_quarters);
    let rs = eval_combination(&sum_formula, p).unwrap() - z4;
    let worst = [r31, r22, d31, d22, rs].iter().map(ApproxValue::magnitude).fold(0.0, f64::max);
    outcome(
        worst <= CLOSED_FORM_TOL,
        format!(
            "zeta(3,1)-zeta(4)/4 = {r31}; zeta(2,2)-3zeta(4)/4 = {r22}; derived from shuffle and sum formula within {:.1e}",
            d31.magnitude().max(d22.magnitude())
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exact structural identities", exact_structural_suite),
        ("shuffle algebra laws", shuffle_laws),
        ("map laws", map_laws),
        ("numeric duality", numeric_duality),
        ("ohno relation", ohno),
        ("double shuffle", double_shuffle),
        ("star values", star_values),
        ("height-one generating function", generating_function),
        ("star hook identities and certificate", star_hook_identities),
        ("closed forms at weight 4", closed_forms),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {name:<36} {secs:>7.2}s  {}", i + 1, o.summary);
        if !o.passed {
            failures += 1;
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
