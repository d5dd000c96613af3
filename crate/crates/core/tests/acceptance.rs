//! Acceptance suite: the exact identities and exhaustive grids the library
//! must satisfy, one test per criterion. Every expected value here is either
//! a closed form checked against an independent oracle (literal big-integer
//! factorization, tableau branching, the class-count generating function) or
//! a frozen regression value from the first exhaustive run.
//!
//! Degrees and their valuations depend on a character label only through its
//! degree profile, so grids over "all labels" iterate profiles and weight by
//! fiber multiplicity; that covers every label exactly once.

use num_bigint::BigUint;
use num_traits::One;

use glqchar::arith::prime_power;
use glqchar::chardeg::{
    degree_of_profile, psi, sym_degree_valuation, unipotent_degree, v2_lower_bound_of_profile,
    v_degree_of_profile, value_divisibility_certificate_of_profile, vl_lower_bound_of_profile,
};
use glqchar::glq::{count_labels, enumerate_profiles, profile_multiplicity};
use glqchar::partitions::{core_quotient, from_core_quotient, gen_partitions, size_decomposition};
use glqchar::statistics::{count_p_prime_degrees, proportion_value_certified};
use glqchar::valuations::{
    v2_pow_minus_one, v_big, v_product_geom, vl_pow_minus_one, Valuation, ValuationContext,
};
use glqchar::verify::class_count_oracle;

fn prime_powers_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&q| prime_power(q).is_some()).collect()
}

/// Multiplicity-weighted sum of squared degrees equals |GL(n, q)| =
/// q^(n(n-1)/2) * psi_n(q), exactly, for n <= 5 and q in {2, 3, 4, 5}.
#[test]
fn criterion_1_degree_squares_sum_to_group_order() {
    for q in [2u64, 3, 4, 5] {
        for n in 1..=5u32 {
            let mut sum = BigUint::ZERO;
            for profile in enumerate_profiles(n, q) {
                let mult = profile_multiplicity(&profile, q).unwrap();
                let d = degree_of_profile(&profile, q).unwrap().degree;
                sum += mult * (&d * &d);
            }
            let order = BigUint::from(q).pow(n * (n - 1) / 2) * psi(u64::from(n), q);
            assert_eq!(sum, order, "n = {n}, q = {q}");
        }
    }
    println!("PASS criterion 1: sum of squared degrees equals |GL(n,q)| (n <= 5, q <= 5)");
}

/// The characters with degree coprime to the defining characteristic number
/// exactly q^n - q^(n-1), and the p-divisible proportion is at most 1/q as
/// exact fractions, for n <= 7 and q in {2, 3, 4, 5}.
#[test]
fn criterion_2_p_prime_count_and_bound() {
    for q in [2u64, 3, 4, 5] {
        for n in 1..=7u32 {
            let (count, expected) = count_p_prime_degrees(n, q).unwrap();
            assert_eq!(count, expected, "n = {n}, q = {q}");

            // p-divisible count = all minus the p-coprime ones; check <= 1/q.
            let total = count_labels(n, q);
            let divisible = &total - &count;
            assert!(
                divisible * q <= total,
                "proportion > 1/q at n = {n}, q = {q}"
            );
        }
    }
    println!(
        "PASS criterion 2: p-coprime degree count is q^n - q^(n-1) and proportion <= 1/q (n <= 7)"
    );
}

/// The lifting-the-exponent valuation of every degree equals the valuation
/// of the literal big-integer degree, with zero mismatches, for all labels
/// with n <= 6, q in {2, 3, 5}, and primes ell in {2, 3, 5, 7} coprime to q.
#[test]
fn criterion_3_valuation_route_equivalence() {
    let mut checked = 0u64;
    for q in [2u64, 3, 5] {
        let contexts: Vec<ValuationContext> = [2u64, 3, 5, 7]
            .into_iter()
            .filter(|&ell| q % ell != 0)
            .map(|ell| ValuationContext::new(ell, q).unwrap())
            .collect();
        for n in 1..=6u32 {
            for profile in enumerate_profiles(n, q) {
                let exact = degree_of_profile(&profile, q).unwrap().degree;
                for ctx in &contexts {
                    let fast = v_degree_of_profile(&profile, ctx).unwrap();
                    let literal = v_big(&exact, ctx.ell()).unwrap();
                    assert_eq!(
                        fast,
                        literal,
                        "profile = {profile}, q = {q}, ell = {}",
                        ctx.ell()
                    );
                    checked += 1;
                }
            }
        }
    }
    println!("PASS criterion 3: valuation route = big-integer route on {checked} (label-class, ell) pairs");
}

/// Every lifting-the-exponent identity agrees with literal factorization on
/// the full grid: v2(a^n - 1) for odd a <= 21 and n <= 200; v_ell(q^n - 1)
/// and v_ell(prod (q^(Bi) - 1)) for odd primes ell <= 13, prime powers
/// q <= 25 coprime to ell, n <= 200, A <= 30, B <= 12.
#[test]
fn criterion_4_lifting_the_exponent_oracles() {
    // 2-adic.
    for a in (3..=21u64).step_by(2) {
        let mut power = BigUint::one();
        for n in 1..=200u64 {
            power *= a;
            assert_eq!(
                v2_pow_minus_one(a, n).unwrap(),
                v_big(&(&power - BigUint::one()), 2).unwrap(),
                "a = {a}, n = {n}"
            );
        }
    }
    // Odd primes: single powers and geometric products.
    for ell in [3u64, 5, 7, 11, 13] {
        for q in prime_powers_up_to(25) {
            if q % ell == 0 {
                continue;
            }
            let ctx = ValuationContext::new(ell, q).unwrap();
            let mut power = BigUint::one();
            for n in 1..=200u64 {
                power *= q;
                assert_eq!(
                    vl_pow_minus_one(&ctx, n).unwrap(),
                    v_big(&(&power - BigUint::one()), ell).unwrap(),
                    "ell = {ell}, q = {q}, n = {n}"
                );
            }
            for b in 1..=12u64 {
                let step = BigUint::from(q).pow(u32::try_from(b).unwrap());
                let mut term = BigUint::one();
                let mut literal = Valuation::ZERO;
                for a in 1..=30u64 {
                    term *= &step;
                    literal = literal + v_big(&(&term - BigUint::one()), ell).unwrap();
                    assert_eq!(
                        v_product_geom(&ctx, a, b).unwrap(),
                        literal,
                        "ell = {ell}, q = {q}, A = {a}, B = {b}"
                    );
                }
            }
        }
    }
    println!("PASS criterion 4: lifting-the-exponent identities match literal factorization on the full grid");
}

/// Core/quotient machinery: round-trip bijection, the size identity
/// |lambda| = |core| + t * sum |quotient_i|, the hook-multiset
/// correspondence, and the size-decomposition sum, for all lambda with
/// |lambda| <= 12 and t <= 5; zero failures.
#[test]
fn criterion_5_core_quotient_suite() {
    let mut checked = 0u64;
    for n in 0..=12u32 {
        for lambda in gen_partitions(n) {
            for t in 1..=5u32 {
                let cq = core_quotient(&lambda, t);
                assert!(cq.core.is_t_core(t), "core not a core: {lambda}, t = {t}");
                assert_eq!(
                    cq.total_size(),
                    lambda.size(),
                    "size identity: {lambda}, t = {t}"
                );
                assert_eq!(
                    from_core_quotient(&cq).unwrap(),
                    lambda,
                    "round trip: {lambda}, t = {t}"
                );
                let mut divided: Vec<u32> = cq
                    .quotient
                    .iter()
                    .flat_map(|c| c.hook_lengths().lengths().to_vec())
                    .collect();
                divided.sort_unstable_by(|x, y| y.cmp(x));
                assert_eq!(
                    divided,
                    lambda.hook_lengths().divided_multiples_of(t),
                    "hook correspondence: {lambda}, t = {t}"
                );
                assert_eq!(
                    size_decomposition(&lambda, t).iter().sum::<u64>(),
                    lambda.size(),
                    "size decomposition: {lambda}, t = {t}"
                );
                checked += 1;
            }
        }
    }
    println!("PASS criterion 5: core/quotient suite clean on {checked} (lambda, t) pairs");
}

/// Every degree-valuation lower bound is dominated by the exact valuation:
/// the 2-adic unipotent bound (odd q <= 9) and the core/quotient bound for
/// lambda up to size 10, and both label-level bounds for all labels with
/// n <= 6 on the stated grids; zero violations.
#[test]
fn criterion_6_bound_domination() {
    // Unipotent 2-adic: v2(degree at q) >= v2(symmetric-group degree).
    for q in [3u64, 5, 7, 9] {
        for n in 0..=10u32 {
            for lambda in gen_partitions(n) {
                let exact = v_big(&unipotent_degree(&lambda, q), 2).unwrap();
                let bound = sym_degree_valuation(&lambda, 2);
                assert!(bound <= exact, "2-adic unipotent: {lambda}, q = {q}");
            }
        }
    }
    // Unipotent odd-ell: v >= floor(|core_t|/t) + v(quotient degrees).
    for q in [2u64, 3, 4, 5] {
        for ell in [3u64, 5, 7] {
            if q % ell == 0 {
                continue;
            }
            let ctx = ValuationContext::new(ell, q).unwrap();
            let t = u32::try_from(ctx.t()).unwrap();
            for n in 0..=10u32 {
                for lambda in gen_partitions(n) {
                    let exact = v_big(&unipotent_degree(&lambda, q), ell).unwrap();
                    let cq = core_quotient(&lambda, t);
                    let mut bound = Valuation::Finite(cq.core.size() / ctx.t());
                    for component in &cq.quotient {
                        bound = bound + sym_degree_valuation(component, ell);
                    }
                    assert!(
                        bound <= exact,
                        "core/quotient: {lambda}, q = {q}, ell = {ell}"
                    );
                }
            }
        }
    }
    // Label-level 2-adic bound over odd q.
    for q in [3u64, 5] {
        let ctx = ValuationContext::new(2, q).unwrap();
        for n in 1..=6u32 {
            for profile in enumerate_profiles(n, q) {
                let bound = v2_lower_bound_of_profile(&profile, q).unwrap();
                let exact = v_degree_of_profile(&profile, &ctx).unwrap();
                assert!(bound <= exact, "label 2-adic: {profile}, q = {q}");
            }
        }
    }
    // Label-level core/quotient bound over q = 2.
    for ell in [3u64, 7] {
        let ctx = ValuationContext::new(ell, 2).unwrap();
        for n in 1..=6u32 {
            for profile in enumerate_profiles(n, 2) {
                let bound = vl_lower_bound_of_profile(&profile, &ctx).unwrap();
                let exact = v_degree_of_profile(&profile, &ctx).unwrap();
                assert!(bound <= exact, "label odd-ell: {profile}, ell = {ell}");
            }
        }
    }
    println!("PASS criterion 6: all four degree-valuation bounds dominated on their grids");
}

/// Certificate soundness: every certified label satisfies the big-integer
/// inequality v_ell(degree) >= v_ell(d) + v_ell(prod (q^(n-i) - 1)), checked
/// exhaustively at n <= 5, q = 3, d in {2, 4, 5}, n0 in {1, 2}.
#[test]
fn criterion_7_certificate_soundness() {
    let mut certified_total = 0u64;
    for n in 1..=5u32 {
        for profile in enumerate_profiles(n, 3) {
            let exact = degree_of_profile(&profile, 3).unwrap().degree;
            for d in [2u64, 4, 5] {
                for n0 in [1u32, 2] {
                    if n0 > n {
                        continue;
                    }
                    if !value_divisibility_certificate_of_profile(&profile, 3, d, n0).unwrap() {
                        continue;
                    }
                    certified_total += 1;
                    let mut product = BigUint::one();
                    for i in 0..n0 {
                        product *= BigUint::from(3u64).pow(n - i) - BigUint::one();
                    }
                    for (ell, mult) in glqchar::arith::factorize(d) {
                        let lhs = v_big(&exact, ell).unwrap();
                        let rhs = v_big(&product, ell).unwrap() + u64::from(mult);
                        assert!(
                            lhs >= rhs,
                            "unsound certificate: {profile}, d = {d}, n0 = {n0}, ell = {ell}"
                        );
                    }
                }
            }
        }
    }
    assert!(certified_total > 0, "the grid should certify something");
    println!(
        "PASS criterion 7: {certified_total} certificates issued, all sound against big integers"
    );
}

/// Trend diagnostic at q = 3, d = 2, n0 = 1: regression against the exact
/// proportions frozen from the first exhaustive run. The certified
/// proportion is nondecreasing along each parity class of n (even n carry a
/// strictly larger 2-adic threshold, so the raw sequence oscillates), and
/// exceeds 0.9 by n = 10.
#[test]
fn criterion_8_certified_trend() {
    let frozen: [(u32, u64, u64); 7] = [
        (4, 36, 78),
        (5, 204, 232),
        (6, 570, 720),
        (7, 2024, 2152),
        (8, 6014, 6528),
        (9, 19490, 19578),
        (10, 58180, 58944),
    ];
    let mut proportions = Vec::new();
    for &(n, numerator, denominator) in &frozen {
        let report = proportion_value_certified(n, 3, 2, 1).unwrap();
        assert_eq!(report.numerator, BigUint::from(numerator), "n = {n}");
        assert_eq!(report.denominator, BigUint::from(denominator), "n = {n}");
        proportions.push((n, numerator, denominator));
    }
    // Nondecreasing within each parity class: a/b <= c/d as a*d <= c*b.
    for window in proportions.windows(3) {
        let (n0, a, b) = window[0];
        let (n2, c, d) = window[2];
        assert!(
            a.checked_mul(d).unwrap() <= c.checked_mul(b).unwrap(),
            "parity trend broken between n = {n0} and n = {n2}"
        );
    }
    // Final proportion exceeds the frozen 0.9 threshold: 10 * num > 9 * den.
    let (_, num, den) = proportions[proportions.len() - 1];
    assert!(10 * num > 9 * den, "n = 10 proportion must exceed 0.9");
    println!("PASS criterion 8: certified trend matches frozen regression values and exceeds 0.9 at n = 10");
}

/// Label counts agree with the independent class-count generating function
/// and never exceed q^n, for n <= 8 and q in {2, 3, 4, 5}.
#[test]
fn criterion_9_class_count_consistency() {
    for q in [2u64, 3, 4, 5] {
        let series = class_count_oracle(q, 8);
        for n in 0..=8u32 {
            let counted = count_labels(n, q);
            assert_eq!(counted, series[n as usize], "n = {n}, q = {q}");
            assert!(counted <= BigUint::from(q).pow(n), "cap: n = {n}, q = {q}");
        }
    }
    println!(
        "PASS criterion 9: label counts match the class-count series and the q^n cap (n <= 8)"
    );
}
