//! Character degrees of GL(n, q) under the polynomial-slot parameterization:
//! exact big-integer degrees factored into index and unipotent parts,
//! l-adic valuations of degrees computed purely by lifting the exponent,
//! the lower bounds that drive the divisibility statistics, and the
//! valuation certificate for divisibility of character values.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorize, prime_power};
use crate::error::Error;
use crate::glq::{count_irreducibles, CharLabel, DegreeProfile};
use crate::partitions::{core_quotient, Partition};
use crate::valuations::{v_factorial, v_u64, Valuation, ValuationContext};

/// The product (q^n - 1)(q^{n-1} - 1) ... (q - 1); the degree of GL(n, q)
/// divided by its q-power part.
pub fn psi(n: u64, q: u64) -> BigUint {
    psi_at(&BigUint::from(q), n)
}

/// The same product with an arbitrary big base: (Q - 1)(Q^2 - 1)...(Q^m - 1).
fn psi_at(base: &BigUint, m: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut power = BigUint::one();
    for _ in 0..m {
        power *= base;
        acc *= &power - BigUint::one();
    }
    acc
}

/// Degree of the unipotent character indexed by a partition, as a function
/// of Q: Q^(n-statistic) * prod_{i<=n} (Q^i - 1) / prod_hooks (Q^|h| - 1).
/// Q may be any integer >= 2; in degree formulas it takes the values q^d.
pub fn unipotent_degree(lambda: &Partition, base: u64) -> BigUint {
    assert!(base >= 2, "base must be at least 2");
    unipotent_degree_big(lambda, &BigUint::from(base))
}

fn unipotent_degree_big(lambda: &Partition, base: &BigUint) -> BigUint {
    let n = lambda.size();
    let numerator = base.pow(u32::try_from(lambda.n_statistic()).expect("n-statistic fits in u32"))
        * psi_at(base, n);
    let denominator: BigUint = lambda
        .hook_lengths()
        .lengths()
        .iter()
        .map(|&h| base.pow(h) - BigUint::one())
        .product();
    let (degree, rem) = numerator.div_rem(&denominator);
    assert!(
        rem.is_zero(),
        "hook product must divide the q-analogue numerator"
    );
    degree
}

/// A character degree split into its two factors: the index factor, which
/// depends only on the partition sizes and polynomial degrees, and the
/// unipotent factor, a product of unipotent degrees at powers of q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeFactorization {
    pub index_factor: BigUint,
    pub unipotent_factor: BigUint,
    pub degree: BigUint,
}

/// Exact degree data for every label in the fiber of a profile.
pub fn degree_of_profile(profile: &DegreeProfile, q: u64) -> Result<DegreeFactorization, Error> {
    check_profile_caps(profile, q)?;
    let n = profile.total();
    let mut index_denominator = BigUint::one();
    let mut unipotent_factor = BigUint::one();
    for (d, partition) in profile.entries() {
        let base = BigUint::from(q).pow(d);
        index_denominator *= psi_at(&base, partition.size());
        unipotent_factor *= unipotent_degree_big(partition, &base);
    }
    let (index_factor, rem) = psi(n, q).div_rem(&index_denominator);
    assert!(rem.is_zero(), "index factor must be an integer");
    let degree = &index_factor * &unipotent_factor;
    Ok(DegreeFactorization {
        index_factor,
        unipotent_factor,
        degree,
    })
}

/// Exact degree of the character indexed by a label.
pub fn degree(label: &CharLabel, q: u64) -> Result<DegreeFactorization, Error> {
    label.validate_slots(q)?;
    degree_of_profile(&label.profile(), q)
}

/// v_ell of a degree, computed entirely by lifting-the-exponent arithmetic:
/// v(psi) minus the hook contributions, with the q-power part contributing
/// nothing since ell does not divide q.
pub fn v_degree_of_profile(
    profile: &DegreeProfile,
    ctx: &ValuationContext,
) -> Result<Valuation, Error> {
    check_profile_caps(profile, ctx.q())?;
    let n = profile.total();
    let mut hooks = Valuation::ZERO;
    for (d, partition) in profile.entries() {
        for &h in partition.hook_lengths().lengths() {
            hooks = hooks + ctx.v_pow_minus_one(u64::from(d) * u64::from(h));
        }
    }
    Ok(ctx
        .v_psi(n)
        .checked_sub(hooks)
        .expect("degrees are integers, so the valuation is nonnegative"))
}

/// v_ell of the degree of the character indexed by a label.
pub fn v_degree(label: &CharLabel, ctx: &ValuationContext) -> Result<Valuation, Error> {
    label.validate_slots(ctx.q())?;
    v_degree_of_profile(&label.profile(), ctx)
}

/// v_ell of the symmetric-group degree of a partition, without big integers:
/// v(n!) minus the hook length valuations.
pub fn sym_degree_valuation(lambda: &Partition, ell: u64) -> Valuation {
    let hooks: u64 = lambda
        .hook_lengths()
        .lengths()
        .iter()
        .map(|&h| v_u64(u64::from(h), ell))
        .sum();
    v_factorial(lambda.size(), ell)
        .checked_sub(Valuation::Finite(hooks))
        .expect("hook product divides n!")
}

/// Lower bound for the 2-adic valuation of a degree over odd q:
/// v2 of the multinomial n! / prod |partition|! plus the 2-adic valuations
/// of the symmetric-group degrees of the assigned partitions.
pub fn v2_lower_bound_of_profile(profile: &DegreeProfile, q: u64) -> Result<Valuation, Error> {
    if q.is_multiple_of(2) {
        return Err(Error::InvalidParameter(
            "the 2-adic degree bound requires odd q".into(),
        ));
    }
    check_profile_caps(profile, q)?;
    let n = profile.total();
    let mut bound = v_factorial(n, 2);
    for (_, partition) in profile.entries() {
        bound = bound
            .checked_sub(v_factorial(partition.size(), 2))
            .expect("multinomial coefficients are integers");
        bound = bound + sym_degree_valuation(partition, 2);
    }
    Ok(bound)
}

/// Label-level form of [`v2_lower_bound_of_profile`].
pub fn v2_lower_bound(label: &CharLabel, q: u64) -> Result<Valuation, Error> {
    label.validate_slots(q)?;
    v2_lower_bound_of_profile(&label.profile(), q)
}

/// Lower bound for the ell-adic valuation of a degree for odd ell coprime
/// to q, through core/quotient data: with t the order of q mod ell and
/// h_f = gcd(d(f), t),
///
///   v(floor(n/t)! / prod_f floor(|mu(f)| h_f / t)!)
///     + sum_f ( floor(|core(mu(f))| / t_f) + v of the quotient degrees ),
///
/// where the core and quotient of mu(f) are taken at t_f = t / h_f, the
/// multiplicative order of q^(d(f)) mod ell. The order must track the base
/// q^(d(f)) of each unipotent factor or the bound can overshoot: over F_2
/// with ell = 3 (t = 2), the label putting [2,1] on a quadratic slot has
/// degree 4340 with v_3 = 0, while the 2-core term alone would claim 1.
pub fn vl_lower_bound_of_profile(
    profile: &DegreeProfile,
    ctx: &ValuationContext,
) -> Result<Valuation, Error> {
    if ctx.ell() == 2 {
        return Err(Error::OddPrimeRequired(2));
    }
    check_profile_caps(profile, ctx.q())?;
    let ell = ctx.ell();
    let t = ctx.t();
    let n = profile.total();

    let mut bound = v_factorial(n / t, ell);
    for (d, partition) in profile.entries() {
        let h = u64::from(d).gcd(&t);
        bound = bound
            .checked_sub(v_factorial(partition.size() * h / t, ell))
            .expect("the floor multinomial is an integer");
        bound = bound + core_quotient_term(partition, t / h, ell);
    }
    Ok(bound)
}

/// floor(|core_t|/t) plus the ell-adic valuation of the product of
/// symmetric-group degrees over the quotient components.
fn core_quotient_term(partition: &Partition, t: u64, ell: u64) -> Valuation {
    let max_hook = u64::from(partition.hook_lengths().max().unwrap_or(0));
    if t > max_hook {
        // Already a t-core with empty quotient.
        return Valuation::Finite(partition.size() / t);
    }
    let cq = core_quotient(partition, u32::try_from(t).expect("t bounded by max hook"));
    let mut term = Valuation::Finite(cq.core.size() / t);
    for component in &cq.quotient {
        term = term + sym_degree_valuation(component, ell);
    }
    term
}

/// Label-level form of [`vl_lower_bound_of_profile`].
pub fn vl_lower_bound(label: &CharLabel, ctx: &ValuationContext) -> Result<Valuation, Error> {
    label.validate_slots(ctx.q())?;
    vl_lower_bound_of_profile(&label.profile(), ctx)
}

/// Valuation of a degree at the defining characteristic p of q = p^e:
/// exactly e * sum_f d(f) * n-statistic(mu(f)). Zero precisely when every
/// assigned partition is a single row.
pub fn v_p_degree_of_profile(profile: &DegreeProfile, q: u64) -> Result<Valuation, Error> {
    let (_, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    check_profile_caps(profile, q)?;
    let total: u64 = profile
        .entries()
        .map(|(d, partition)| u64::from(d) * partition.n_statistic())
        .sum();
    Ok(Valuation::Finite(u64::from(e) * total))
}

/// Label-level form of [`v_p_degree_of_profile`].
pub fn v_p_degree(label: &CharLabel, q: u64) -> Result<Valuation, Error> {
    label.validate_slots(q)?;
    v_p_degree_of_profile(&label.profile(), q)
}

/// The exact valuation of a degree next to its provable lower bound.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ValuationBound {
    pub exact: Valuation,
    pub lower_bound: Valuation,
}

/// Computes the exact ell-adic valuation of the degree together with the
/// matching lower bound (the 2-adic bound for ell = 2, the core/quotient
/// bound otherwise). The bound never exceeds the exact value.
pub fn valuation_bound_of_profile(
    profile: &DegreeProfile,
    ctx: &ValuationContext,
) -> Result<ValuationBound, Error> {
    let exact = v_degree_of_profile(profile, ctx)?;
    let lower_bound = if ctx.ell() == 2 {
        v2_lower_bound_of_profile(profile, ctx.q())?
    } else {
        vl_lower_bound_of_profile(profile, ctx)?
    };
    debug_assert!(lower_bound <= exact);
    Ok(ValuationBound { exact, lower_bound })
}

/// Label-level form of [`valuation_bound_of_profile`].
pub fn valuation_bound(label: &CharLabel, ctx: &ValuationContext) -> Result<ValuationBound, Error> {
    label.validate_slots(ctx.q())?;
    valuation_bound_of_profile(&label.profile(), ctx)
}

/// The sufficient valuation criterion for divisibility of character values:
/// for d coprime to q and a fixed block size n0 <= n, returns true when for
/// every prime ell dividing d,
///
///   v_ell(degree) - v_ell( prod_{i=0}^{n0-1} (q^{n-i} - 1) ) >= v_ell(d).
///
/// True certifies that d divides the character value at every matrix of the
/// embedded GL(n0, q); false proves nothing (the criterion is one-sided).
pub fn value_divisibility_certificate_of_profile(
    profile: &DegreeProfile,
    q: u64,
    d: u64,
    n0: u32,
) -> Result<bool, Error> {
    let n = profile.total();
    check_certificate_params(q, d, n0, n)?;
    check_profile_caps(profile, q)?;
    for (ell, multiplicity) in factorize(d) {
        let ctx = ValuationContext::new(ell, q)?;
        let threshold = certificate_threshold(&ctx, n, n0, multiplicity);
        if v_degree_of_profile(profile, &ctx)? < threshold {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Label-level form of [`value_divisibility_certificate_of_profile`].
pub fn value_divisibility_certificate(
    label: &CharLabel,
    q: u64,
    d: u64,
    n0: u32,
) -> Result<bool, Error> {
    label.validate_slots(q)?;
    value_divisibility_certificate_of_profile(&label.profile(), q, d, n0)
}

/// v_ell(d) + v_ell of the centralizer-index product, evaluated exactly
/// term by term.
pub(crate) fn certificate_threshold(
    ctx: &ValuationContext,
    n: u64,
    n0: u32,
    ell_multiplicity: u32,
) -> Valuation {
    let mut threshold = Valuation::Finite(u64::from(ell_multiplicity));
    for i in 0..u64::from(n0) {
        threshold = threshold + ctx.v_pow_minus_one(n - i);
    }
    threshold
}

pub(crate) fn check_certificate_params(q: u64, d: u64, n0: u32, n: u64) -> Result<(), Error> {
    if d.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: d, b: q });
    }
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    if n0 == 0 || u64::from(n0) > n {
        return Err(Error::InvalidParameter(format!(
            "block size n0 must satisfy 1 <= n0 <= n, got n0 = {n0}, n = {n}"
        )));
    }
    Ok(())
}

/// Rejects profiles that assign more partitions at some degree than there
/// are irreducible polynomials of that degree.
fn check_profile_caps(profile: &DegreeProfile, q: u64) -> Result<(), Error> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    for (degree, group) in profile.groups() {
        let available = count_irreducibles(q, degree);
        if BigUint::from(group.len()) > available {
            return Err(Error::SlotOverflow {
                degree,
                used: group.len(),
                available,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glq::enumerate_profiles;
    use crate::partitions::gen_partitions;
    use crate::valuations::v_big;

    fn partition(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(2, 2), big(3));
        assert_eq!(psi(0, 5), big(1));
        assert_eq!(psi(3, 2), big(21));
        assert_eq!(psi(2, 3), big(16));
    }

    #[test]
    fn unipotent_degree_examples() {
        assert_eq!(unipotent_degree(&partition(&[2]), 2), big(1));
        assert_eq!(unipotent_degree(&partition(&[1, 1]), 2), big(2));
        assert_eq!(unipotent_degree(&partition(&[1]), 17), big(1));
        // GL(3,2): trivial, reflection-like, Steinberg.
        assert_eq!(unipotent_degree(&partition(&[3]), 2), big(1));
        assert_eq!(unipotent_degree(&partition(&[2, 1]), 2), big(6));
        assert_eq!(unipotent_degree(&partition(&[1, 1, 1]), 2), big(8));
    }

    #[test]
    fn steinberg_degree_is_q_power() {
        for q in [2u64, 3] {
            for n in 1..=5u32 {
                let column = Partition::new(vec![1; n as usize]).unwrap();
                let expected = BigUint::from(q).pow(n * (n - 1) / 2);
                assert_eq!(unipotent_degree(&column, q), expected, "n={n}, q={q}");
            }
        }
    }

    #[test]
    fn degree_examples_for_gl2() {
        // Unipotent (1,1) over F_2: degree 2.
        let label = CharLabel::unipotent(&partition(&[1, 1]));
        let f = degree(&label, 2).unwrap();
        assert_eq!(f.degree, big(2));
        assert_eq!(&f.index_factor * &f.unipotent_factor, f.degree);

        // A single degree-2 slot carrying [1]: degree q - 1 = 1.
        let label = CharLabel::new([((2, 0), partition(&[1]))]).unwrap();
        let f = degree(&label, 2).unwrap();
        assert_eq!(f.index_factor, big(1));
        assert_eq!(f.unipotent_factor, big(1));
        assert_eq!(f.degree, big(1));

        // GL(1, q) is abelian.
        let label = CharLabel::new([((1, 0), partition(&[1]))]).unwrap();
        assert_eq!(degree(&label, 5).unwrap().degree, big(1));
    }

    #[test]
    fn degree_rejects_slot_overflow() {
        let label = CharLabel::new([((1, 1), partition(&[1, 1]))]).unwrap();
        assert!(matches!(degree(&label, 2), Err(Error::SlotOverflow { .. })));
    }

    #[test]
    fn sum_of_squares_is_group_order_for_gl2_f3() {
        let mut sum = BigUint::zero();
        for profile in enumerate_profiles(2, 3) {
            let mult = crate::glq::profile_multiplicity(&profile, 3).unwrap();
            let d = degree_of_profile(&profile, 3).unwrap().degree;
            sum += mult * (&d * &d);
        }
        // |GL(2,3)| = (3^2 - 1)(3^2 - 3) = 48.
        assert_eq!(sum, big(48));
    }

    #[test]
    fn valuation_route_matches_big_integers_small() {
        for q in [2u64, 3] {
            for n in 0..=4u32 {
                for profile in enumerate_profiles(n, q) {
                    let exact = degree_of_profile(&profile, q).unwrap().degree;
                    for ell in [2u64, 3, 5, 7] {
                        if q % ell == 0 {
                            continue;
                        }
                        let ctx = ValuationContext::new(ell, q).unwrap();
                        assert_eq!(
                            v_degree_of_profile(&profile, &ctx).unwrap(),
                            v_big(&exact, ell).unwrap(),
                            "profile={profile}, q={q}, ell={ell}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sym_degree_valuation_matches_big_route() {
        for n in 0..=10u32 {
            for p in gen_partitions(n) {
                for ell in [2u64, 3, 5] {
                    let direct = v_big(&p.sym_degree(), ell).unwrap();
                    assert_eq!(sym_degree_valuation(&p, ell), direct);
                }
            }
        }
    }

    #[test]
    fn two_adic_bound_examples() {
        // Single row: bound is zero.
        let row = CharLabel::unipotent(&partition(&[4]));
        assert_eq!(v2_lower_bound(&row, 3).unwrap(), Valuation::Finite(0));
        // Unipotent (1,1) over F_3: degree 3, exact v2 = 0, bound 0.
        let col = CharLabel::unipotent(&partition(&[1, 1]));
        assert_eq!(v2_lower_bound(&col, 3).unwrap(), Valuation::Finite(0));
        assert!(matches!(
            v2_lower_bound(&col, 4),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn two_adic_bound_dominated_by_exact_valuation() {
        for q in [3u64, 5] {
            let ctx = ValuationContext::new(2, q).unwrap();
            for n in 0..=5u32 {
                for profile in enumerate_profiles(n, q) {
                    let bound = v2_lower_bound_of_profile(&profile, q).unwrap();
                    let exact = v_degree_of_profile(&profile, &ctx).unwrap();
                    assert!(bound <= exact, "profile={profile}, q={q}");
                }
            }
        }
    }

    #[test]
    fn odd_bound_dominated_by_exact_valuation() {
        for ell in [3u64, 7] {
            let ctx = ValuationContext::new(ell, 2).unwrap();
            for n in 0..=5u32 {
                for profile in enumerate_profiles(n, 2) {
                    let bound = vl_lower_bound_of_profile(&profile, &ctx).unwrap();
                    let exact = v_degree_of_profile(&profile, &ctx).unwrap();
                    assert!(bound <= exact, "profile={profile}, ell={ell}");
                }
            }
        }
    }

    #[test]
    fn odd_bound_with_order_one_reduces_to_multinomial_form() {
        // For ell | q - 1 the order t is 1: every 1-core is empty and the
        // 1-quotient is the partition itself, so the bound collapses to
        // v(n!/prod |mu(f)|!) + sum v of the symmetric-group degrees.
        let ctx = ValuationContext::new(3, 4).unwrap();
        assert_eq!(ctx.t(), 1);
        for n in 0..=5u32 {
            for profile in enumerate_profiles(n, 4) {
                let bound = vl_lower_bound_of_profile(&profile, &ctx).unwrap();
                let mut expected = v_factorial(u64::from(n), 3);
                for (_, partition) in profile.entries() {
                    expected = expected
                        .checked_sub(v_factorial(partition.size(), 3))
                        .unwrap();
                    expected = expected + sym_degree_valuation(partition, 3);
                }
                assert_eq!(bound, expected, "profile={profile}");
            }
        }
    }

    #[test]
    fn paired_bound_and_exact_valuation() {
        for (ell, q) in [(2u64, 3u64), (3, 2), (7, 2)] {
            let ctx = ValuationContext::new(ell, q).unwrap();
            for n in 0..=4u32 {
                for profile in enumerate_profiles(n, q) {
                    let pair = valuation_bound_of_profile(&profile, &ctx).unwrap();
                    assert!(pair.lower_bound <= pair.exact, "profile={profile}");
                    assert_eq!(pair.exact, v_degree_of_profile(&profile, &ctx).unwrap());
                }
            }
        }
        let label = CharLabel::unipotent(&partition(&[2, 1]));
        let ctx = ValuationContext::new(2, 3).unwrap();
        let pair = valuation_bound(&label, &ctx).unwrap();
        assert!(pair.lower_bound <= pair.exact);
    }

    #[test]
    fn odd_bound_rejects_ell_two() {
        let ctx = ValuationContext::new(2, 3).unwrap();
        let label = CharLabel::unipotent(&partition(&[2]));
        assert!(matches!(
            vl_lower_bound(&label, &ctx),
            Err(Error::OddPrimeRequired(2))
        ));
    }

    #[test]
    fn defining_characteristic_valuation() {
        let rows = CharLabel::new([((1, 0), partition(&[3])), ((2, 0), partition(&[2]))]).unwrap();
        assert_eq!(v_p_degree(&rows, 3).unwrap(), Valuation::Finite(0));

        let col = CharLabel::unipotent(&partition(&[1, 1]));
        assert_eq!(v_p_degree(&col, 2).unwrap(), Valuation::Finite(1));
        assert_eq!(v_p_degree(&col, 4).unwrap(), Valuation::Finite(2));
        assert!(matches!(v_p_degree(&col, 6), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn defining_characteristic_matches_big_integers() {
        for q in [2u64, 4, 3, 9] {
            let (p, _) = prime_power(q).unwrap();
            for n in 0..=4u32 {
                for profile in enumerate_profiles(n, q) {
                    let exact = degree_of_profile(&profile, q).unwrap().degree;
                    assert_eq!(
                        v_p_degree_of_profile(&profile, q).unwrap(),
                        v_big(&exact, p).unwrap(),
                        "profile={profile}, q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn certificate_trivial_cases() {
        let label = CharLabel::unipotent(&partition(&[1, 1]));
        // d = 1 has no prime divisors: vacuously certified.
        assert!(value_divisibility_certificate(&label, 3, 1, 2).unwrap());
        // A degree-1 character can never certify d = 2.
        let trivial = CharLabel::unipotent(&partition(&[2]));
        assert!(!value_divisibility_certificate(&trivial, 3, 2, 1).unwrap());
    }

    #[test]
    fn certificate_rejects_bad_parameters() {
        let label = CharLabel::unipotent(&partition(&[2]));
        assert!(matches!(
            value_divisibility_certificate(&label, 3, 6, 1),
            Err(Error::NotCoprime { a: 6, b: 3 })
        ));
        assert!(matches!(
            value_divisibility_certificate(&label, 3, 2, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            value_divisibility_certificate(&label, 3, 2, 5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn certificate_is_sound_small() {
        // Whenever the certificate fires, the big-integer inequality holds.
        for n in 1..=4u32 {
            for profile in enumerate_profiles(n, 3) {
                let exact = degree_of_profile(&profile, 3).unwrap().degree;
                for d in [2u64, 4, 5] {
                    for n0 in [1u32, 2] {
                        if u64::from(n0) > u64::from(n) {
                            continue;
                        }
                        let certified =
                            value_divisibility_certificate_of_profile(&profile, 3, d, n0).unwrap();
                        if !certified {
                            continue;
                        }
                        for (ell, mult) in factorize(d) {
                            let mut product = BigUint::one();
                            for i in 0..n0 {
                                product *= BigUint::from(3u64).pow(n - i) - BigUint::one();
                            }
                            let lhs = v_big(&exact, ell).unwrap();
                            let rhs =
                                v_big(&product, ell).unwrap() + Valuation::Finite(u64::from(mult));
                            assert!(lhs >= rhs, "profile={profile}, d={d}, n0={n0}");
                        }
                    }
                }
            }
        }
    }
}
