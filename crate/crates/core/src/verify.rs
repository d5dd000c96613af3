//! Self-check suites backed by independent oracles: brute-force
//! enumeration, literal big-integer factorization, and generating-function
//! cross-checks for the identities the fast paths rely on. The CLI runs
//! these via `glqchar verify <suite>`; the oracles are deliberately written
//! against different routes than the library code they validate.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorial, factorize, prime_power};
use crate::chardeg::{
    degree_of_profile, psi, sym_degree_valuation, v2_lower_bound_of_profile, v_degree_of_profile,
    v_p_degree_of_profile, value_divisibility_certificate_of_profile, vl_lower_bound_of_profile,
};
use crate::glq::{count_labels, enumerate_profiles, profile_multiplicity, DegreeProfile};
use crate::partitions::{core_quotient, from_core_quotient, gen_partitions, Partition};
use crate::statistics::{
    count_p_prime_degrees, proportion_degree_divisible, proportion_value_certified,
};
use crate::valuations::{
    falling_factorial_bound_holds, v2_pow_minus_one, v_big, v_factorial, v_product_geom,
    vl_pow_minus_one, Valuation, ValuationContext,
};

/// First failed assertion of a verification run.
#[derive(Debug, Clone)]
pub struct CheckFailure {
    pub check: String,
    pub detail: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

/// Named verification suites, mirroring the CLI `verify` subcommand.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Suite {
    Partitions,
    Valuations,
    Degrees,
    DefChar,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "partitions" => Ok(Suite::Partitions),
            "valuations" => Ok(Suite::Valuations),
            "degrees" => Ok(Suite::Degrees),
            "defchar" => Ok(Suite::DefChar),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected partitions, valuations, degrees, defchar, or all)"
            )),
        }
    }
}

/// Runs a suite to the first failure, returning the names of passed checks.
pub fn run_suite(suite: Suite) -> Result<Vec<String>, CheckFailure> {
    match suite {
        Suite::Partitions => run_checks("partitions", PARTITION_CHECKS),
        Suite::Valuations => run_checks("valuations", VALUATION_CHECKS),
        Suite::Degrees => run_checks("degrees", DEGREE_CHECKS),
        Suite::DefChar => run_checks("defchar", DEFCHAR_CHECKS),
        Suite::All => {
            let mut passed = Vec::new();
            for s in [
                Suite::Partitions,
                Suite::Valuations,
                Suite::Degrees,
                Suite::DefChar,
            ] {
                passed.extend(run_suite(s)?);
            }
            Ok(passed)
        }
    }
}

type Check = (&'static str, fn() -> Result<(), String>);

fn run_checks(suite: &'static str, checks: &[Check]) -> Result<Vec<String>, CheckFailure> {
    let mut passed = Vec::new();
    for (name, check) in checks {
        check().map_err(|detail| CheckFailure {
            check: format!("{suite}: {name}"),
            detail,
        })?;
        passed.push(format!("{suite}: {name}"));
    }
    Ok(passed)
}

// ---------------------------------------------------------------------------
// Oracles.

/// p(n) by the Euler pentagonal-number recurrence; independent of the
/// partition generator.
pub fn partition_count_oracle(n: u32) -> u64 {
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for i in 1..=n {
        let mut total: i128 = 0;
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
            total += sign * i128::from(table[i - g1]);
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                total += sign * i128::from(table[i - g2]);
            }
            k += 1;
        }
        table[i] = u64::try_from(total).expect("partition counts are nonnegative");
    }
    table[n]
}

/// Number of standard Young tableaux of a shape, counted by removing one
/// corner cell at a time; independent of the hook length formula.
pub fn syt_count_oracle(shape: &Partition) -> BigUint {
    fn recurse(parts: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
        if parts.is_empty() {
            return BigUint::one();
        }
        if let Some(hit) = memo.get(parts) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..parts.len() {
            let removable = i + 1 == parts.len() || parts[i] > parts[i + 1];
            if removable {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                total += recurse(&smaller, memo);
            }
        }
        memo.insert(parts.to_vec(), total.clone());
        total
    }
    recurse(shape.parts(), &mut HashMap::new())
}

/// Hook lengths computed by literally walking the diagram: for every cell,
/// count the cells to its right, the cells below it, and itself.
pub fn hook_lengths_cell_oracle(shape: &Partition) -> Vec<u32> {
    let rows: Vec<u32> = shape.parts().to_vec();
    let mut lengths = Vec::new();
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = rows[i + 1..].iter().take_while(|&&r| r > j).count() as u32;
            lengths.push(arm + leg + 1);
        }
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Coefficients (up to u^n_max) of the conjugacy-class generating function
/// of the general linear groups over F_q,
/// prod_{i >= 1} (1 - u^i) / (1 - q u^i).
pub fn class_count_oracle(q: u64, n_max: u32) -> Vec<BigUint> {
    let len = n_max as usize + 1;
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); len];
    coeffs[0] = BigInt::one();
    for i in 1..len {
        // Multiply by (1 - u^i).
        for j in (i..len).rev() {
            let lower = coeffs[j - i].clone();
            coeffs[j] -= lower;
        }
        // Multiply by 1/(1 - q u^i) via the forward recurrence.
        for j in i..len {
            let lower = coeffs[j - i].clone();
            coeffs[j] += lower * BigInt::from(q);
        }
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(!c.is_negative(), "class counts are nonnegative");
            c.to_biguint().unwrap()
        })
        .collect()
}

/// The degree evaluated straight from the product formula
/// psi_n(q) * prod_f q^(d(f) * nstat) / prod_f prod_h (q^(d(f)|h|) - 1),
/// bypassing the index/unipotent factorization.
pub fn direct_degree_oracle(profile: &DegreeProfile, q: u64) -> BigUint {
    let n = profile.total();
    let mut numerator = psi(n, q);
    let mut denominator = BigUint::one();
    for (d, partition) in profile.entries() {
        let exponent = u64::from(d) * partition.n_statistic();
        numerator *= BigUint::from(q).pow(u32::try_from(exponent).expect("exponent fits"));
        for &h in partition.hook_lengths().lengths() {
            denominator *= BigUint::from(q).pow(d * h) - BigUint::one();
        }
    }
    let (degree, rem) = numerator.div_rem(&denominator);
    assert!(rem.is_zero(), "direct degree formula must divide exactly");
    degree
}

// ---------------------------------------------------------------------------
// Partition checks.

const PARTITION_CHECKS: &[Check] = &[
    (
        "counts match the pentagonal recurrence (n <= 30)",
        check_partition_counts,
    ),
    (
        "generation is strictly decreasing reverse-lex (n <= 12)",
        check_generation_order,
    ),
    (
        "hook multisets match the cell-walk oracle (n <= 12)",
        check_hooks_against_cells,
    ),
    (
        "hook-formula degrees match tableau branching (n <= 8)",
        check_degrees_against_branching,
    ),
    (
        "sum of squared degrees is n! (n <= 12)",
        check_degree_square_sum,
    ),
    (
        "degrees are conjugation-invariant (n <= 12)",
        check_conjugation_symmetry,
    ),
    (
        "core/quotient round-trip, sizes, and hooks (n <= 12, t <= 5)",
        check_core_quotient,
    ),
];

fn check_partition_counts() -> Result<(), String> {
    for n in 0..=30u32 {
        let generated = gen_partitions(n).count() as u64;
        let expected = partition_count_oracle(n);
        if generated != expected {
            return Err(format!(
                "n = {n}: generated {generated}, recurrence gives {expected}"
            ));
        }
    }
    Ok(())
}

fn check_generation_order() -> Result<(), String> {
    for n in 0..=12u32 {
        let all: Vec<Partition> = gen_partitions(n).collect();
        for pair in all.windows(2) {
            if pair[0] <= pair[1] {
                return Err(format!("n = {n}: {} does not precede {}", pair[0], pair[1]));
            }
        }
        if all.iter().any(|p| p.size() != u64::from(n)) {
            return Err(format!("n = {n}: a generated partition has the wrong size"));
        }
    }
    Ok(())
}

fn check_hooks_against_cells() -> Result<(), String> {
    for n in 0..=12u32 {
        for p in gen_partitions(n) {
            let fast = p.hook_lengths();
            if fast.lengths() != hook_lengths_cell_oracle(&p) {
                return Err(format!("hook mismatch at {p}"));
            }
            if fast.len() as u64 != p.size() {
                return Err(format!("hook count != size at {p}"));
            }
        }
    }
    Ok(())
}

fn check_degrees_against_branching() -> Result<(), String> {
    for n in 0..=8u32 {
        for p in gen_partitions(n) {
            if p.sym_degree() != syt_count_oracle(&p) {
                return Err(format!("degree mismatch at {p}"));
            }
        }
    }
    Ok(())
}

fn check_degree_square_sum() -> Result<(), String> {
    for n in 0..=12u32 {
        let sum: BigUint = gen_partitions(n)
            .map(|p| {
                let d = p.sym_degree();
                &d * &d
            })
            .sum();
        if sum != factorial(u64::from(n)) {
            return Err(format!("n = {n}: sum of squares is {sum}, expected {n}!"));
        }
    }
    Ok(())
}

fn check_conjugation_symmetry() -> Result<(), String> {
    for n in 0..=12u32 {
        for p in gen_partitions(n) {
            if p.sym_degree() != p.conjugate().sym_degree() {
                return Err(format!("conjugation broke degree at {p}"));
            }
        }
    }
    Ok(())
}

fn check_core_quotient() -> Result<(), String> {
    for n in 0..=12u32 {
        for p in gen_partitions(n) {
            for t in 1..=5u32 {
                let cq = core_quotient(&p, t);
                if !cq.core.is_t_core(t) {
                    return Err(format!("core of {p} at t = {t} is not a {t}-core"));
                }
                if cq.total_size() != p.size() {
                    return Err(format!("size identity fails for {p}, t = {t}"));
                }
                let round = from_core_quotient(&cq).map_err(|e| e.to_string())?;
                if round != p {
                    return Err(format!("round-trip of {p} at t = {t} gave {round}"));
                }
                let mut divided: Vec<u32> = cq
                    .quotient
                    .iter()
                    .flat_map(|c| c.hook_lengths().lengths().to_vec())
                    .collect();
                divided.sort_unstable_by(|a, b| b.cmp(a));
                if divided != p.hook_lengths().divided_multiples_of(t) {
                    return Err(format!("hook correspondence fails for {p}, t = {t}"));
                }
                let decomposition = crate::partitions::size_decomposition(&p, t);
                if decomposition.iter().sum::<u64>() != p.size() {
                    return Err(format!("size decomposition of {p} at t = {t} does not sum"));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Valuation checks.

const VALUATION_CHECKS: &[Check] = &[
    (
        "Legendre valuations match literal factorials (n <= 300)",
        check_factorial_valuations,
    ),
    (
        "2-adic lifting matches literal powers (odd a <= 21, n <= 200)",
        check_two_adic_lifting,
    ),
    (
        "odd-prime lifting matches literal powers (ell <= 13, q <= 25, n <= 200)",
        check_odd_lifting,
    ),
    (
        "geometric-product valuations match literal products (A <= 30, B <= 12)",
        check_product_lifting,
    ),
    (
        "falling-factorial bound holds on the sample grid (s <= 10^4)",
        check_falling_bound,
    ),
];

/// Prime powers q with 2 <= q <= bound.
fn small_prime_powers(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&q| prime_power(q).is_some()).collect()
}

fn check_factorial_valuations() -> Result<(), String> {
    for ell in [2u64, 3, 5, 7, 11, 13] {
        let mut fact = BigUint::one();
        for n in 1..=300u64 {
            fact *= n;
            let fast = v_factorial(n, ell);
            let literal = v_big(&fact, ell).unwrap();
            if fast != literal {
                return Err(format!("n = {n}, ell = {ell}: {fast} vs literal {literal}"));
            }
        }
    }
    Ok(())
}

fn check_two_adic_lifting() -> Result<(), String> {
    for a in (3..=21u64).step_by(2) {
        let mut power = BigUint::one();
        for n in 1..=200u64 {
            power *= a;
            let fast = v2_pow_minus_one(a, n).unwrap();
            let literal = v_big(&(&power - BigUint::one()), 2).unwrap();
            if fast != literal {
                return Err(format!("a = {a}, n = {n}: {fast} vs literal {literal}"));
            }
        }
    }
    Ok(())
}

fn check_odd_lifting() -> Result<(), String> {
    for ell in [3u64, 5, 7, 11, 13] {
        for q in small_prime_powers(25) {
            if q % ell == 0 {
                continue;
            }
            let ctx = ValuationContext::new(ell, q).unwrap();
            let mut power = BigUint::one();
            for n in 1..=200u64 {
                power *= q;
                let fast = vl_pow_minus_one(&ctx, n).unwrap();
                let literal = v_big(&(&power - BigUint::one()), ell).unwrap();
                if fast != literal {
                    return Err(format!(
                        "ell = {ell}, q = {q}, n = {n}: {fast} vs {literal}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_product_lifting() -> Result<(), String> {
    for ell in [3u64, 5, 7, 11, 13] {
        for q in small_prime_powers(25) {
            if q % ell == 0 {
                continue;
            }
            let ctx = ValuationContext::new(ell, q).unwrap();
            for b in 1..=12u64 {
                // v of the literal product as prefix sums of per-term valuations.
                let step = BigUint::from(q).pow(u32::try_from(b).unwrap());
                let mut power = BigUint::one();
                let mut literal = Valuation::ZERO;
                for a in 1..=30u64 {
                    power *= &step;
                    literal = literal + v_big(&(&power - BigUint::one()), ell).unwrap();
                    let fast = v_product_geom(&ctx, a, b).unwrap();
                    if fast != literal {
                        return Err(format!(
                            "ell = {ell}, q = {q}, A = {a}, B = {b}: {fast} vs {literal}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_falling_bound() -> Result<(), String> {
    for ell in [2u64, 3, 5, 7, 11, 13] {
        for denom in 1..=3u64 {
            let mut s_tops: Vec<u64> = (2..=120).collect();
            s_tops.extend((1..=40).map(|k| 250 * k)); // up to 10^4
            for s_top in s_tops {
                let s = Ratio::new(s_top, denom);
                for r_top in [1, 2, s_top / 2, s_top.saturating_sub(1)] {
                    if r_top == 0 {
                        continue;
                    }
                    let r = Ratio::new(r_top, denom);
                    if r >= s {
                        continue;
                    }
                    if !falling_factorial_bound_holds(s, r, ell).map_err(|e| e.to_string())? {
                        return Err(format!("bound fails at s = {s}, r = {r}, ell = {ell}"));
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Degree checks.

const DEGREE_CHECKS: &[Check] = &[
    (
        "factored degrees match the direct product formula (n <= 6)",
        check_factored_vs_direct,
    ),
    (
        "multiplicity-weighted degree squares sum to |GL(n,q)| (n <= 5)",
        check_degree_square_group_order,
    ),
    (
        "lifting-the-exponent valuations match big integers (n <= 6)",
        check_valuation_route,
    ),
    (
        "2-adic degree bound is dominated (odd q <= 9)",
        check_two_adic_bound,
    ),
    (
        "core/quotient degree bound is dominated",
        check_core_quotient_bound,
    ),
    (
        "label-level degree bounds are dominated (n <= 5)",
        check_label_bounds,
    ),
    (
        "defining-characteristic valuations match big integers (n <= 5)",
        check_p_valuations,
    ),
    (
        "label counts match the class-count series and the q^n cap (n <= 8)",
        check_label_counts,
    ),
    (
        "value-divisibility certificates are sound (n <= 4)",
        check_certificate_soundness,
    ),
];

fn check_factored_vs_direct() -> Result<(), String> {
    for q in [2u64, 3, 4, 5] {
        for n in 0..=6u32 {
            for profile in enumerate_profiles(n, q) {
                let factored = degree_of_profile(&profile, q).map_err(|e| e.to_string())?;
                let direct = direct_degree_oracle(&profile, q);
                if factored.degree != direct {
                    return Err(format!(
                        "{profile} over F_{q}: {} vs {direct}",
                        factored.degree
                    ));
                }
                if &factored.index_factor * &factored.unipotent_factor != factored.degree {
                    return Err(format!("{profile} over F_{q}: factorization inconsistent"));
                }
            }
        }
    }
    Ok(())
}

fn check_degree_square_group_order() -> Result<(), String> {
    for q in [2u64, 3, 4, 5] {
        for n in 1..=5u32 {
            let mut sum = BigUint::zero();
            for profile in enumerate_profiles(n, q) {
                let mult = profile_multiplicity(&profile, q).map_err(|e| e.to_string())?;
                let d = degree_of_profile(&profile, q)
                    .map_err(|e| e.to_string())?
                    .degree;
                sum += mult * (&d * &d);
            }
            let order = BigUint::from(q).pow(n * (n - 1) / 2) * psi(u64::from(n), q);
            if sum != order {
                return Err(format!("n = {n}, q = {q}: {sum} vs |GL| = {order}"));
            }
        }
    }
    Ok(())
}

fn check_valuation_route() -> Result<(), String> {
    for q in [2u64, 3, 5] {
        for n in 0..=6u32 {
            for profile in enumerate_profiles(n, q) {
                let exact = degree_of_profile(&profile, q)
                    .map_err(|e| e.to_string())?
                    .degree;
                for ell in [2u64, 3, 5, 7] {
                    if q % ell == 0 {
                        continue;
                    }
                    let ctx = ValuationContext::new(ell, q).map_err(|e| e.to_string())?;
                    let fast = v_degree_of_profile(&profile, &ctx).map_err(|e| e.to_string())?;
                    let literal = v_big(&exact, ell).unwrap();
                    if fast != literal {
                        return Err(format!(
                            "{profile}, q = {q}, ell = {ell}: {fast} vs literal {literal}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_two_adic_bound() -> Result<(), String> {
    for q in [3u64, 5, 7, 9] {
        for n in 0..=8u32 {
            for lambda in gen_partitions(n) {
                let degree = crate::chardeg::unipotent_degree(&lambda, q);
                let exact = v_big(&degree, 2).unwrap();
                let bound = sym_degree_valuation(&lambda, 2);
                if bound > exact {
                    return Err(format!("lambda = {lambda}, q = {q}: {bound} > {exact}"));
                }
            }
        }
    }
    Ok(())
}

fn check_core_quotient_bound() -> Result<(), String> {
    for q in [2u64, 3, 4, 5] {
        for ell in [3u64, 5, 7] {
            if q % ell == 0 {
                continue;
            }
            let ctx = ValuationContext::new(ell, q).unwrap();
            let t = u32::try_from(ctx.t()).unwrap();
            for n in 0..=8u32 {
                for lambda in gen_partitions(n) {
                    let degree = crate::chardeg::unipotent_degree(&lambda, q);
                    let exact = v_big(&degree, ell).unwrap();
                    let cq = core_quotient(&lambda, t);
                    let mut bound = Valuation::Finite(cq.core.size() / ctx.t());
                    for component in &cq.quotient {
                        bound = bound + sym_degree_valuation(component, ell);
                    }
                    if bound > exact {
                        return Err(format!(
                            "lambda = {lambda}, q = {q}, ell = {ell}: {bound} > {exact}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_label_bounds() -> Result<(), String> {
    for q in [3u64, 5] {
        let ctx = ValuationContext::new(2, q).unwrap();
        for n in 0..=5u32 {
            for profile in enumerate_profiles(n, q) {
                let bound = v2_lower_bound_of_profile(&profile, q).map_err(|e| e.to_string())?;
                let exact = v_degree_of_profile(&profile, &ctx).map_err(|e| e.to_string())?;
                if bound > exact {
                    return Err(format!("2-adic: {profile}, q = {q}: {bound} > {exact}"));
                }
            }
        }
    }
    for ell in [3u64, 7] {
        let ctx = ValuationContext::new(ell, 2).unwrap();
        for n in 0..=5u32 {
            for profile in enumerate_profiles(n, 2) {
                let bound = vl_lower_bound_of_profile(&profile, &ctx).map_err(|e| e.to_string())?;
                let exact = v_degree_of_profile(&profile, &ctx).map_err(|e| e.to_string())?;
                if bound > exact {
                    return Err(format!("ell = {ell}: {profile}: {bound} > {exact}"));
                }
            }
        }
    }
    Ok(())
}

fn check_p_valuations() -> Result<(), String> {
    for q in [2u64, 3, 4, 5, 8, 9] {
        let (p, _) = prime_power(q).unwrap();
        for n in 0..=5u32 {
            for profile in enumerate_profiles(n, q) {
                let exact = degree_of_profile(&profile, q)
                    .map_err(|e| e.to_string())?
                    .degree;
                let fast = v_p_degree_of_profile(&profile, q).map_err(|e| e.to_string())?;
                let literal = v_big(&exact, p).unwrap();
                if fast != literal {
                    return Err(format!("{profile}, q = {q}: {fast} vs literal {literal}"));
                }
            }
        }
    }
    Ok(())
}

fn check_label_counts() -> Result<(), String> {
    for q in [2u64, 3, 4, 5] {
        let series = class_count_oracle(q, 8);
        for n in 0..=8u32 {
            let counted = count_labels(n, q);
            if counted != series[n as usize] {
                return Err(format!(
                    "n = {n}, q = {q}: counted {counted}, series gives {}",
                    series[n as usize]
                ));
            }
            if counted > BigUint::from(q).pow(n) {
                return Err(format!("n = {n}, q = {q}: count exceeds q^n"));
            }
        }
    }
    Ok(())
}

fn check_certificate_soundness() -> Result<(), String> {
    for n in 1..=4u32 {
        for profile in enumerate_profiles(n, 3) {
            let exact = degree_of_profile(&profile, 3)
                .map_err(|e| e.to_string())?
                .degree;
            for d in [2u64, 4, 5] {
                for n0 in [1u32, 2] {
                    if n0 > n {
                        continue;
                    }
                    let certified = value_divisibility_certificate_of_profile(&profile, 3, d, n0)
                        .map_err(|e| e.to_string())?;
                    if !certified {
                        continue;
                    }
                    let mut product = BigUint::one();
                    for i in 0..n0 {
                        product *= BigUint::from(3u64).pow(n - i) - BigUint::one();
                    }
                    for (ell, mult) in factorize(d) {
                        let lhs = v_big(&exact, ell).unwrap();
                        let rhs = v_big(&product, ell).unwrap() + u64::from(mult);
                        if lhs < rhs {
                            return Err(format!(
                                "{profile}, d = {d}, n0 = {n0}, ell = {ell}: certified but {lhs} < {rhs}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Defining-characteristic checks.

const DEFCHAR_CHECKS: &[Check] = &[
    (
        "p-coprime degree count equals q^n - q^(n-1) (n <= 7)",
        check_p_prime_count,
    ),
    (
        "p-divisible proportion is at most 1/q (n <= 6)",
        check_p_divisible_bound,
    ),
    (
        "proportion chain down to 1/q is monotone (n <= 6)",
        check_proportion_chain,
    ),
    (
        "certified counts never exceed divisible counts (n0 = n)",
        check_certified_below_divisible,
    ),
];

fn check_p_prime_count() -> Result<(), String> {
    for q in [2u64, 3, 4, 5] {
        for n in 1..=7u32 {
            // Count independently of count_p_prime_degrees: walk profiles here.
            let mut count = BigUint::zero();
            for profile in enumerate_profiles(n, q) {
                if profile.entries().all(|(_, p)| p.len() <= 1) {
                    count += profile_multiplicity(&profile, q).map_err(|e| e.to_string())?;
                }
            }
            let expected = BigUint::from(q).pow(n - 1) * BigUint::from(q - 1);
            if count != expected {
                return Err(format!("n = {n}, q = {q}: {count} vs {expected}"));
            }
            let (reported, _) = count_p_prime_degrees(n, q).map_err(|e| e.to_string())?;
            if reported != count {
                return Err(format!("n = {n}, q = {q}: reported {reported} vs {count}"));
            }
        }
    }
    Ok(())
}

fn check_p_divisible_bound() -> Result<(), String> {
    for q in [2u64, 3, 4, 5] {
        let (p, _) = prime_power(q).unwrap();
        for n in 1..=6u32 {
            let report = proportion_degree_divisible(n, q, p).map_err(|e| e.to_string())?;
            if &report.numerator * q > report.denominator {
                return Err(format!("n = {n}, q = {q}: proportion exceeds 1/q"));
            }
        }
    }
    Ok(())
}

fn check_proportion_chain() -> Result<(), String> {
    // divisible-by-(multiple of p) <= divisible-by-p
    //   <= 1 - (q^n - q^(n-1)) / X <= 1/q, all as exact fractions.
    for q in [2u64, 3, 4] {
        let (p, _) = prime_power(q).unwrap();
        for n in 1..=6u32 {
            let at_multiple =
                proportion_degree_divisible(n, q, 2 * p).map_err(|e| e.to_string())?;
            let at_p = proportion_degree_divisible(n, q, p).map_err(|e| e.to_string())?;
            let size = at_p.denominator.clone();
            if at_multiple.numerator > at_p.numerator {
                return Err(format!(
                    "n = {n}, q = {q}: multiple-of-p count exceeds p count"
                ));
            }
            let p_prime = BigUint::from(q).pow(n - 1) * BigUint::from(q - 1);
            // at_p <= 1 - p_prime / size  <=>  at_p.numerator + p_prime <= size
            if &at_p.numerator + &p_prime > size {
                return Err(format!("n = {n}, q = {q}: middle link fails"));
            }
            // 1 - p_prime / size <= 1/q  <=>  q * (size - p_prime) <= size
            if (&size - &p_prime) * q > size {
                return Err(format!("n = {n}, q = {q}: final link fails"));
            }
        }
    }
    Ok(())
}

fn check_certified_below_divisible() -> Result<(), String> {
    for (q, d) in [(3u64, 2u64), (2, 3), (3, 5)] {
        for n in 1..=5u32 {
            let certified = proportion_value_certified(n, q, d, n).map_err(|e| e.to_string())?;
            let divisible = proportion_degree_divisible(n, q, d).map_err(|e| e.to_string())?;
            if certified.numerator > divisible.numerator {
                return Err(format!("n = {n}, q = {q}, d = {d}: certificate overcounts"));
            }
        }
    }
    Ok(())
}
