//! Divisibility statistics over the full character set of GL(n, q): exact
//! proportions as integer fractions, certified lower bounds for divisibility
//! of character values, and deterministic parameter sweeps.
//!
//! Everything iterates over degree profiles weighted by their label
//! multiplicity — every predicate here depends on a label only through its
//! profile, so no individual label is ever materialized.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{factorize, prime_power};
use crate::chardeg::{
    certificate_threshold, check_certificate_params, v_degree_of_profile, v_p_degree_of_profile,
};
use crate::error::Error;
use crate::glq::{enumerate_profiles, profile_multiplicity};
use crate::valuations::{Valuation, ValuationContext};

/// Which statistic a report row carries.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StatKind {
    /// Proportion of characters whose degree d | deg(chi).
    DegreeDivisible,
    /// Proportion certified to have d | chi(g) for every g in the top-left
    /// GL(n0, q) block; a lower bound for the true value-divisibility count.
    ValueCertified,
    /// Proportion of characters whose degree the defining characteristic
    /// divides.
    PDivisible,
}

impl StatKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StatKind::DegreeDivisible => "degree-divisible",
            StatKind::ValueCertified => "value-certified",
            StatKind::PDivisible => "p-divisible",
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "degree-divisible" | "degree" => Ok(StatKind::DegreeDivisible),
            "value-certified" | "certified" => Ok(StatKind::ValueCertified),
            "p-divisible" | "p" => Ok(StatKind::PDivisible),
            other => Err(Error::InvalidParameter(format!(
                "unknown statistic kind '{other}' (expected degree-divisible, value-certified, or p-divisible)"
            ))),
        }
    }
}

/// An exact proportion: how many of the |irr(GL(n,q))| characters satisfy a
/// divisibility predicate. The fraction numerator/denominator is exact; any
/// decimal rendering is advisory presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProportionReport {
    pub kind: StatKind,
    pub n: u32,
    pub q: u64,
    pub d: u64,
    /// Block size for value-certified rows; 0 when not applicable.
    pub n0: u32,
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl ProportionReport {
    /// Decimal rendering to the given number of places, rounding half to
    /// even, computed in exact integer arithmetic.
    pub fn decimal_string(&self, places: u32) -> String {
        decimal_string(&self.numerator, &self.denominator, places)
    }
}

/// Rounds numerator/denominator to `places` decimal digits, half to even.
pub fn decimal_string(numerator: &BigUint, denominator: &BigUint, places: u32) -> String {
    assert!(!denominator.is_zero(), "denominator must be nonzero");
    let scale = BigUint::from(10u32).pow(places);
    let (mut scaled, rem) = (numerator * &scale).div_rem(denominator);
    let doubled = &rem * 2u32;
    if doubled > *denominator || (doubled == *denominator && scaled.is_odd()) {
        scaled += BigUint::one();
    }
    let (int_part, frac_part) = scaled.div_rem(&scale);
    if places == 0 {
        int_part.to_string()
    } else {
        let frac = frac_part.to_string();
        format!("{int_part}.{frac:0>width$}", width = places as usize)
    }
}

/// Exact proportion of characters of GL(n, q) whose degree is divisible by
/// d, decided prime by prime: the defining characteristic through the exact
/// power-of-p formula, every other prime through lifting-the-exponent.
pub fn proportion_degree_divisible(n: u32, q: u64, d: u64) -> Result<ProportionReport, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    let (p, _) = prime_power(q).ok_or(Error::NotPrimePower(q))?;

    let mut p_requirement: Option<Valuation> = None;
    let mut coprime_requirements: Vec<(ValuationContext, Valuation)> = Vec::new();
    for (ell, multiplicity) in factorize(d) {
        let needed = Valuation::Finite(u64::from(multiplicity));
        if ell == p {
            p_requirement = Some(needed);
        } else {
            coprime_requirements.push((ValuationContext::new(ell, q)?, needed));
        }
    }

    let mut numerator = BigUint::zero();
    let mut denominator = BigUint::zero();
    for profile in enumerate_profiles(n, q) {
        let weight = profile_multiplicity(&profile, q)?;
        let mut divisible = true;
        if let Some(needed) = p_requirement {
            divisible &= v_p_degree_of_profile(&profile, q)? >= needed;
        }
        for (ctx, needed) in &coprime_requirements {
            if !divisible {
                break;
            }
            divisible &= v_degree_of_profile(&profile, ctx)? >= *needed;
        }
        if divisible {
            numerator += &weight;
        }
        denominator += weight;
    }
    Ok(ProportionReport {
        kind: StatKind::DegreeDivisible,
        n,
        q,
        d,
        n0: 0,
        numerator,
        denominator,
    })
}

/// Exact count of characters certified (by the valuation criterion) to have
/// every value on the embedded GL(n0, q) divisible by d. This undercounts,
/// never overcounts, the characters with d | chi(g).
pub fn proportion_value_certified(
    n: u32,
    q: u64,
    d: u64,
    n0: u32,
) -> Result<ProportionReport, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    check_certificate_params(q, d, n0, u64::from(n))?;

    // The certificate threshold depends only on (ell, n, n0), so fix it once
    // per prime rather than per profile.
    let mut requirements: Vec<(ValuationContext, Valuation)> = Vec::new();
    for (ell, multiplicity) in factorize(d) {
        let ctx = ValuationContext::new(ell, q)?;
        let threshold = certificate_threshold(&ctx, u64::from(n), n0, multiplicity);
        requirements.push((ctx, threshold));
    }

    let mut numerator = BigUint::zero();
    let mut denominator = BigUint::zero();
    for profile in enumerate_profiles(n, q) {
        let weight = profile_multiplicity(&profile, q)?;
        let mut certified = true;
        for (ctx, threshold) in &requirements {
            if v_degree_of_profile(&profile, ctx)? < *threshold {
                certified = false;
                break;
            }
        }
        if certified {
            numerator += &weight;
        }
        denominator += weight;
    }
    Ok(ProportionReport {
        kind: StatKind::ValueCertified,
        n,
        q,
        d,
        n0,
        numerator,
        denominator,
    })
}

/// Counts the characters of GL(n, q) whose degree is coprime to the defining
/// characteristic, together with the closed-form value q^n - q^(n-1) it must
/// equal. The two agree because such characters correspond to monic degree-n
/// polynomials not divisible by x; the equality is asserted.
pub fn count_p_prime_degrees(n: u32, q: u64) -> Result<(BigUint, BigUint), Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    prime_power(q).ok_or(Error::NotPrimePower(q))?;

    let mut count = BigUint::zero();
    for profile in enumerate_profiles(n, q) {
        // v_p vanishes exactly when every assigned partition is one row.
        if profile.entries().all(|(_, partition)| partition.len() <= 1) {
            count += profile_multiplicity(&profile, q)?;
        }
    }
    let expected = BigUint::from(q).pow(n - 1) * BigUint::from(q - 1);
    assert_eq!(
        count, expected,
        "count of p-coprime degrees must equal q^n - q^(n-1)"
    );
    Ok((count, expected))
}

/// Checks the exact inequality: the proportion of characters with d | degree
/// is at most 1/q, for d sharing a prime factor with q. Rejects coprime d,
/// where the inequality does not apply.
pub fn p_divisible_bound_holds(n: u32, q: u64, d: u64) -> Result<bool, Error> {
    if d.gcd(&q) == 1 {
        return Err(Error::InvalidParameter(format!(
            "d = {d} must share a prime factor with q = {q}"
        )));
    }
    let report = proportion_degree_divisible(n, q, d)?;
    Ok(report.numerator * q <= report.denominator)
}

/// A rectangular sweep request. Rows come out ordered by (q, d, n0, n);
/// parameters a kind does not use are pinned to a single placeholder cell.
#[derive(Clone, Debug)]
pub struct SweepGrid {
    pub kind: StatKind,
    pub q_values: Vec<u64>,
    pub d_values: Vec<u64>,
    pub n0_values: Vec<u32>,
    pub n_values: Vec<u32>,
}

/// A cell that could not be evaluated, with its grid coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCellError {
    pub q: u64,
    pub d: u64,
    pub n0: u32,
    pub n: u32,
    pub message: String,
}

impl fmt::Display for SweepCellError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cell (q={}, d={}, n0={}, n={}): {}",
            self.q, self.d, self.n0, self.n, self.message
        )
    }
}

/// Successful rows and failed cells of a sweep, both in grid order.
#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    pub reports: Vec<ProportionReport>,
    pub errors: Vec<SweepCellError>,
}

/// Evaluates every cell of the grid; cells run in parallel and failures are
/// recorded without aborting the sweep. Output order is deterministic.
pub fn sweep(grid: &SweepGrid) -> SweepOutcome {
    let d_values: &[u64] = match grid.kind {
        // d is derived from q for the defining-characteristic statistic.
        StatKind::PDivisible => &[0],
        _ => &grid.d_values,
    };
    let n0_values: &[u32] = match grid.kind {
        StatKind::ValueCertified => &grid.n0_values,
        _ => &[0],
    };

    let mut cells = Vec::new();
    for &q in &grid.q_values {
        for &d in d_values {
            for &n0 in n0_values {
                for &n in &grid.n_values {
                    cells.push((q, d, n0, n));
                }
            }
        }
    }

    let results: Vec<Result<ProportionReport, SweepCellError>> = cells
        .par_iter()
        .map(|&(q, d, n0, n)| {
            evaluate_cell(grid.kind, q, d, n0, n).map_err(|e| SweepCellError {
                q,
                d,
                n0,
                n,
                message: e.to_string(),
            })
        })
        .collect();

    let mut outcome = SweepOutcome::default();
    for result in results {
        match result {
            Ok(report) => outcome.reports.push(report),
            Err(error) => outcome.errors.push(error),
        }
    }
    outcome
}

fn evaluate_cell(
    kind: StatKind,
    q: u64,
    d: u64,
    n0: u32,
    n: u32,
) -> Result<ProportionReport, Error> {
    match kind {
        StatKind::DegreeDivisible => proportion_degree_divisible(n, q, d),
        StatKind::ValueCertified => proportion_value_certified(n, q, d, n0),
        StatKind::PDivisible => {
            let (p, _) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
            let mut report = proportion_degree_divisible(n, q, p)?;
            report.kind = StatKind::PDivisible;
            Ok(report)
        }
    }
}
