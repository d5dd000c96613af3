//! Exact l-adic valuation arithmetic: Legendre's formula, multiplicative
//! orders, and lifting-the-exponent identities, so valuations of the huge
//! products behind degree formulas never require building the products.
//!
//! The prime 2 and odd primes take genuinely different formulas and are kept
//! on separate code paths; [`ValuationContext::v_pow_minus_one`] dispatches
//! between them.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::arith::{is_prime, prime_power};
use crate::error::Error;

/// An l-adic valuation: a nonnegative exponent, or infinity for the
/// valuation of zero. Infinity absorbs under addition, which keeps composite
/// formulas total even when an intermediate value vanishes.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub const ZERO: Valuation = Valuation::Finite(0);

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// Unwraps a finite valuation; panics on infinity.
    pub fn expect_finite(self) -> u64 {
        self.finite().expect("valuation is infinite")
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }

    /// Scalar multiple; infinity stays infinite (even times zero, since the
    /// underlying quantity is still zero).
    pub fn times(self, k: u64) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v * k),
            Valuation::Infinite => Valuation::Infinite,
        }
    }

    /// Difference of valuations where the result is known to be a valuation
    /// again: finite minus larger finite, or anything subtracted from
    /// infinity, returns None.
    pub fn checked_sub(self, other: Valuation) -> Option<Valuation> {
        match (self, other) {
            (Valuation::Infinite, Valuation::Finite(_)) => Some(Valuation::Infinite),
            (Valuation::Finite(a), Valuation::Finite(b)) => a.checked_sub(b).map(Valuation::Finite),
            (_, Valuation::Infinite) => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl Add<u64> for Valuation {
    type Output = Valuation;

    fn add(self, other: u64) -> Valuation {
        self + Valuation::Finite(other)
    }
}

impl Sum for Valuation {
    fn sum<I: Iterator<Item = Valuation>>(iter: I) -> Valuation {
        iter.fold(Valuation::ZERO, Add::add)
    }
}

impl From<u64> for Valuation {
    fn from(v: u64) -> Valuation {
        Valuation::Finite(v)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Valuation of a positive machine integer. Callers guarantee x >= 1.
pub(crate) fn v_u64(mut x: u64, ell: u64) -> u64 {
    debug_assert!(x >= 1 && ell >= 2);
    let mut v = 0;
    while x.is_multiple_of(ell) {
        x /= ell;
        v += 1;
    }
    v
}

/// Largest r with ell^r dividing x. Rejects x = 0; sign is ignored.
pub fn v_int(x: i64, ell: u64) -> Result<Valuation, Error> {
    debug_assert!(is_prime(ell));
    if x == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(Valuation::Finite(v_u64(x.unsigned_abs(), ell)))
}

/// Largest r with ell^r dividing x, for big integers. Rejects x = 0.
pub fn v_big(x: &BigUint, ell: u64) -> Result<Valuation, Error> {
    debug_assert!(is_prime(ell));
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let ell = BigUint::from(ell);
    let mut v = 0;
    let mut rest = x.clone();
    loop {
        let (quot, rem) = rest.div_rem(&ell);
        if !rem.is_zero() {
            return Ok(Valuation::Finite(v));
        }
        v += 1;
        rest = quot;
    }
}

/// v_ell(n!) by Legendre's formula: sum of floor(n / ell^i).
pub fn v_factorial(n: u64, ell: u64) -> Valuation {
    debug_assert!(is_prime(ell));
    let mut total = 0;
    let mut power = ell;
    loop {
        total += n / power;
        if power > n / ell {
            break;
        }
        power *= ell;
    }
    Valuation::Finite(total)
}

/// Least t >= 1 with q^t = 1 mod ell. Rejects ell | q.
pub fn mult_order(q: u64, ell: u64) -> Result<u64, Error> {
    debug_assert!(is_prime(ell));
    let r = q % ell;
    if r == 0 {
        return Err(Error::NotCoprime { a: q, b: ell });
    }
    let mut current = r;
    let mut t = 1;
    while current != 1 {
        current = (u128::from(current) * u128::from(r) % u128::from(ell)) as u64;
        t += 1;
    }
    Ok(t)
}

/// v_2(a^n - 1) for odd a >= 3 by lifting the exponent:
/// v(a-1) + v(a+1) + v(n) - 1 for even n, v(a-1) for odd n.
pub fn v2_pow_minus_one(a: u64, n: u64) -> Result<Valuation, Error> {
    if a.is_multiple_of(2) || a < 3 {
        return Err(Error::InvalidBase(a));
    }
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    let v = if n.is_multiple_of(2) {
        v_u64(a - 1, 2) + v_u64(a + 1, 2) + v_u64(n, 2) - 1
    } else {
        v_u64(a - 1, 2)
    };
    Ok(Valuation::Finite(v))
}

/// Precomputed constants for valuation work at a fixed pair (ell, q):
/// t is the multiplicative order of q mod ell and tau = v_ell(q^t - 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuationContext {
    ell: u64,
    q: u64,
    t: u64,
    tau: u64,
}

impl ValuationContext {
    /// Validates that ell is prime, q is a prime power, and the two are
    /// coprime, then computes the order and tau.
    pub fn new(ell: u64, q: u64) -> Result<Self, Error> {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        if q.is_multiple_of(ell) {
            return Err(Error::NotCoprime { a: q, b: ell });
        }
        let t = mult_order(q, ell)?;
        let qt = BigUint::from(q).pow(u32::try_from(t).expect("order fits in u32"));
        let tau = v_big(&(qt - BigUint::one()), ell)?.expect_finite();
        debug_assert!(tau >= 1);
        Ok(ValuationContext { ell, q, t, tau })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Multiplicative order of q mod ell.
    pub fn t(&self) -> u64 {
        self.t
    }

    /// v_ell(q^t - 1).
    pub fn tau(&self) -> u64 {
        self.tau
    }

    /// v_ell(q^n - 1) for n >= 1, dispatching between the 2-adic and odd
    /// lifting-the-exponent formulas.
    pub fn v_pow_minus_one(&self, n: u64) -> Valuation {
        assert!(n >= 1);
        if self.ell == 2 {
            // q is odd >= 3 because it is a prime power coprime to 2.
            v2_pow_minus_one(self.q, n).expect("odd base")
        } else if n.is_multiple_of(self.t) {
            Valuation::Finite(v_u64(n / self.t, self.ell) + self.tau)
        } else {
            Valuation::ZERO
        }
    }

    /// v_ell of (q^n - 1)(q^{n-1} - 1) ... (q - 1).
    pub fn v_psi(&self, n: u64) -> Valuation {
        (1..=n).map(|i| self.v_pow_minus_one(i)).sum()
    }
}

/// v_ell(q^n - 1) for odd ell: v(n/t) + tau when t | n, else 0.
/// The prime 2 is rejected; use [`v2_pow_minus_one`].
pub fn vl_pow_minus_one(ctx: &ValuationContext, n: u64) -> Result<Valuation, Error> {
    if ctx.ell == 2 {
        return Err(Error::OddPrimeRequired(2));
    }
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(ctx.v_pow_minus_one(n))
}

/// v_ell of the product (q^B - 1)(q^{2B} - 1) ... (q^{AB} - 1) for odd ell,
/// in closed form: with h = gcd(B, t) and m = floor(A h / t), the value is
/// m * (v(B/h) + tau) + v(m!).
pub fn v_product_geom(
    ctx: &ValuationContext,
    a_count: u64,
    b_step: u64,
) -> Result<Valuation, Error> {
    if ctx.ell == 2 {
        return Err(Error::OddPrimeRequired(2));
    }
    if b_step == 0 {
        return Err(Error::ZeroValuation);
    }
    let h = b_step.gcd(&ctx.t);
    let m = (u128::from(a_count) * u128::from(h) / u128::from(ctx.t)) as u64;
    let per_term = v_u64(b_step / h, ctx.ell) + ctx.tau;
    Ok(Valuation::Finite(m * per_term) + v_factorial(m, ctx.ell))
}

/// v_ell of the extended falling factorial (s)_r = floor(s)! / floor(s-r)!
/// for rationals 0 < r < s.
pub fn v_falling_factorial(s: Ratio<u64>, r: Ratio<u64>, ell: u64) -> Result<Valuation, Error> {
    if r.is_zero() || r >= s {
        return Err(Error::FallingFactorialRange {
            s: s.to_string(),
            r: r.to_string(),
        });
    }
    let floor_s = s.floor().to_integer();
    let floor_s_minus_r = (s - r).floor().to_integer();
    Ok(v_factorial(floor_s, ell)
        .checked_sub(v_factorial(floor_s_minus_r, ell))
        .expect("floor(s) >= floor(s - r)"))
}

/// Checks v((s)_r) <= ceil(r) + log_ell(s) in exact arithmetic: when the
/// valuation exceeds ceil(r), compares ell^(v - ceil(r)) against s by
/// cross-multiplication, never through floating point.
pub fn falling_factorial_bound_holds(
    s: Ratio<u64>,
    r: Ratio<u64>,
    ell: u64,
) -> Result<bool, Error> {
    let v = v_falling_factorial(s, r, ell)?.expect_finite();
    let ceil_r = r.ceil().to_integer();
    if v <= ceil_r {
        return Ok(true);
    }
    let excess = u32::try_from(v - ceil_r).expect("exponent fits in u32");
    let lhs = BigUint::from(ell).pow(excess) * BigUint::from(*s.denom());
    Ok(lhs <= BigUint::from(*s.numer()))
}
