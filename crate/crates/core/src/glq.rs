//! Bookkeeping for the monic irreducible polynomials over F_q other than x:
//! counting them by degree and enumerating the per-degree partition data
//! that determines character degrees, without materializing a single
//! polynomial. Degrees depend on a polynomial only through its degree, so
//! slots (degree, index) replace actual irreducibles throughout.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factorial, factorize, prime_power};
use crate::error::Error;
use crate::partitions::{gen_partitions, Partition};

/// Number of monic irreducible polynomials of the given degree over F_q,
/// excluding the polynomial x itself: the Moebius necklace count, minus one
/// in degree 1.
pub fn count_irreducibles(q: u64, degree: u32) -> BigUint {
    assert!(degree >= 1, "degree must be positive");
    debug_assert!(prime_power(q).is_some());
    let mut sum = BigInt::zero();
    for e in divisors(degree) {
        let term = BigInt::from(q).pow(degree / e);
        match moebius(e) {
            1 => sum += term,
            -1 => sum -= term,
            _ => {}
        }
    }
    let (count, rem) = sum.div_rem(&BigInt::from(degree));
    assert!(
        rem.is_zero() && count.is_positive(),
        "necklace count must be a positive integer"
    );
    let mut count = count.to_biguint().unwrap();
    if degree == 1 {
        count -= BigUint::one();
    }
    count
}

/// Divisors of n in increasing order.
fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function: 0 on non-squarefree n, otherwise (-1)^(number of primes).
fn moebius(n: u32) -> i8 {
    let factors = factorize(u64::from(n));
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// For each polynomial degree, the multiset of nonempty partitions that a
/// character label assigns to distinct irreducibles of that degree.
///
/// This is the fiber descriptor: every quantity computed here (degrees,
/// valuations, certificates) depends on a label only through its profile,
/// and [`profile_multiplicity`] counts the labels in each fiber.
///
/// Multisets are kept sorted in decreasing partition order, so equal
/// profiles compare and hash equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeProfile {
    assignments: BTreeMap<u32, Vec<Partition>>,
}

impl DegreeProfile {
    /// Builds a profile from (degree, partitions) groups. Rejects degree 0
    /// and empty partitions; empty groups are dropped; each group is sorted
    /// into canonical (decreasing) order.
    pub fn new(groups: impl IntoIterator<Item = (u32, Vec<Partition>)>) -> Result<Self, Error> {
        let mut assignments: BTreeMap<u32, Vec<Partition>> = BTreeMap::new();
        for (degree, partitions) in groups {
            if degree == 0 {
                return Err(Error::InvalidParameter(
                    "polynomial degree must be positive".into(),
                ));
            }
            if partitions.iter().any(Partition::is_empty) {
                return Err(Error::EmptyPartitionSlot);
            }
            assignments.entry(degree).or_default().extend(partitions);
        }
        assignments.retain(|_, group| !group.is_empty());
        for group in assignments.values_mut() {
            group.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(DegreeProfile { assignments })
    }

    pub fn empty() -> Self {
        DegreeProfile {
            assignments: BTreeMap::new(),
        }
    }

    /// Total weight: sum over entries of degree * |partition|. This is the n
    /// of the group GL(n, q) the profile belongs to.
    pub fn total(&self) -> u64 {
        self.assignments
            .iter()
            .map(|(&d, group)| u64::from(d) * group.iter().map(Partition::size).sum::<u64>())
            .sum()
    }

    /// The (degree, multiset) groups in increasing degree order.
    pub fn groups(&self) -> impl Iterator<Item = (u32, &[Partition])> {
        self.assignments.iter().map(|(&d, v)| (d, v.as_slice()))
    }

    /// Every (degree, partition) entry, flattened.
    pub fn entries(&self) -> impl Iterator<Item = (u32, &Partition)> {
        self.assignments
            .iter()
            .flat_map(|(&d, group)| group.iter().map(move |p| (d, p)))
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }
}

impl fmt::Display for DegreeProfile {
    /// Compact descriptor like `1:[2][1,1];2:[1]`; `-` for the empty profile.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.assignments.is_empty() {
            return write!(f, "-");
        }
        for (i, (d, group)) in self.assignments.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{d}:")?;
            for p in group {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A character label: a finitely supported assignment of nonempty partitions
/// to slots (degree d, index j), the slot standing for the j-th monic
/// irreducible of degree d in some fixed enumeration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharLabel {
    entries: BTreeMap<(u32, u64), Partition>,
}

impl CharLabel {
    /// Builds a label, rejecting empty partitions, degree-0 slots, and
    /// duplicate slot assignments.
    pub fn new(entries: impl IntoIterator<Item = ((u32, u64), Partition)>) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for ((degree, index), partition) in entries {
            if degree == 0 {
                return Err(Error::InvalidParameter(
                    "polynomial degree must be positive".into(),
                ));
            }
            if partition.is_empty() {
                return Err(Error::EmptyPartitionSlot);
            }
            if map.insert((degree, index), partition).is_some() {
                return Err(Error::DuplicateSlot { degree, index });
            }
        }
        Ok(CharLabel { entries: map })
    }

    /// The label concentrating a single partition at the slot for x - 1
    /// (degree 1, index 0). Indexes the unipotent characters.
    pub fn unipotent(lambda: &Partition) -> CharLabel {
        if lambda.is_empty() {
            CharLabel {
                entries: BTreeMap::new(),
            }
        } else {
            CharLabel {
                entries: BTreeMap::from([((1, 0), lambda.clone())]),
            }
        }
    }

    /// Sum over entries of degree * |partition|.
    pub fn total(&self) -> u64 {
        self.entries
            .iter()
            .map(|(&(d, _), p)| u64::from(d) * p.size())
            .sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u64, &Partition)> {
        self.entries.iter().map(|(&(d, j), p)| (d, j, p))
    }

    /// Forgets slot indices, keeping the per-degree multisets.
    pub fn profile(&self) -> DegreeProfile {
        let mut assignments: BTreeMap<u32, Vec<Partition>> = BTreeMap::new();
        for (&(d, _), p) in &self.entries {
            assignments.entry(d).or_default().push(p.clone());
        }
        for group in assignments.values_mut() {
            group.sort_unstable_by(|a, b| b.cmp(a));
        }
        DegreeProfile { assignments }
    }

    /// A canonical label in the fiber of a profile: at each degree, the
    /// partitions are assigned to slots 0, 1, 2, ... in decreasing order.
    pub fn from_profile(profile: &DegreeProfile) -> CharLabel {
        let mut entries = BTreeMap::new();
        for (d, group) in profile.groups() {
            for (j, p) in group.iter().enumerate() {
                entries.insert((d, j as u64), p.clone());
            }
        }
        CharLabel { entries }
    }

    /// Checks every slot index against the number of irreducibles of its
    /// degree over F_q.
    pub fn validate_slots(&self, q: u64) -> Result<(), Error> {
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        let mut max_index: BTreeMap<u32, u64> = BTreeMap::new();
        for &(d, j) in self.entries.keys() {
            let slot = max_index.entry(d).or_insert(j);
            *slot = (*slot).max(j);
        }
        for (d, j) in max_index {
            let available = count_irreducibles(q, d);
            if BigUint::from(j) >= available {
                return Err(Error::SlotOverflow {
                    degree: d,
                    used: j as usize + 1,
                    available,
                });
            }
        }
        Ok(())
    }
}

/// All degree profiles of total weight n over F_q, each exactly once, in a
/// fixed deterministic order. The multiset at degree d never exceeds the
/// number of available irreducibles of degree d.
pub fn enumerate_profiles(n: u32, q: u64) -> Vec<DegreeProfile> {
    // Partitions of every size up to n, generated once.
    let table: Vec<Vec<Partition>> = (0..=n).map(|s| gen_partitions(s).collect()).collect();
    // Slot cap per degree d: at most n/d partitions fit anyway.
    let caps: Vec<usize> = (1..=n.max(1))
        .map(|d| {
            let by_weight = (n / d) as usize;
            let available = count_irreducibles(q, d);
            if available < BigUint::from(by_weight) {
                available.to_usize().expect("cap fits in usize")
            } else {
                by_weight
            }
        })
        .collect();

    let mut out = Vec::new();
    let mut current: Vec<(u32, Vec<Partition>)> = Vec::new();
    descend(1, n, &table, &caps, &mut current, &mut out);
    out
}

/// Recursion over degrees: pick the total partition size at degree d, then
/// every admissible multiset carrying that size, then move to degree d + 1.
fn descend(
    d: u32,
    remaining: u32,
    table: &[Vec<Partition>],
    caps: &[usize],
    current: &mut Vec<(u32, Vec<Partition>)>,
    out: &mut Vec<DegreeProfile>,
) {
    if remaining == 0 {
        let assignments = current
            .iter()
            .map(|(degree, group)| (*degree, group.clone()))
            .collect();
        out.push(DegreeProfile { assignments });
        return;
    }
    if d > remaining {
        return;
    }
    for weight in 0..=remaining / d {
        if weight == 0 {
            descend(d + 1, remaining, table, caps, current, out);
            continue;
        }
        let cap = caps[(d - 1) as usize];
        for multiset in partition_multisets(weight, cap, table) {
            current.push((d, multiset));
            descend(d + 1, remaining - d * weight, table, caps, current, out);
            current.pop();
        }
    }
}

/// Multisets of nonempty partitions with total size `total` and at most
/// `cap` elements, each as a vector sorted in decreasing partition order.
fn partition_multisets(total: u32, cap: usize, table: &[Vec<Partition>]) -> Vec<Vec<Partition>> {
    fn walk(
        total: u32,
        cap: usize,
        bound: Option<&Partition>,
        table: &[Vec<Partition>],
        acc: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if total == 0 {
            out.push(acc.clone());
            return;
        }
        if cap == 0 {
            return;
        }
        for size in 1..=total {
            for p in &table[size as usize] {
                if bound.is_some_and(|b| p > b) {
                    continue;
                }
                acc.push(p.clone());
                walk(total - size, cap - 1, Some(p), table, acc, out);
                acc.pop();
            }
        }
    }

    let mut out = Vec::new();
    let mut acc = Vec::new();
    walk(total, cap, None, table, &mut acc, &mut out);
    out
}

/// Number of character labels realizing a profile: at each degree,
/// the count of injective assignments of the multiset to distinct
/// polynomials, i.e. available * (available - 1) * ... over repetitions.
pub fn profile_multiplicity(profile: &DegreeProfile, q: u64) -> Result<BigUint, Error> {
    let mut total = BigUint::one();
    for (degree, group) in profile.groups() {
        let available = count_irreducibles(q, degree);
        let used = group.len();
        if BigUint::from(used) > available {
            return Err(Error::SlotOverflow {
                degree,
                used,
                available,
            });
        }
        let mut numerator = BigUint::one();
        for i in 0..used as u64 {
            numerator *= &available - BigUint::from(i);
        }
        let mut denominator = BigUint::one();
        let mut run = 1u64;
        for pair in group.windows(2) {
            if pair[0] == pair[1] {
                run += 1;
            } else {
                denominator *= factorial(run);
                run = 1;
            }
        }
        denominator *= factorial(run);
        let (count, rem) = numerator.div_rem(&denominator);
        assert!(
            rem.is_zero(),
            "repetition factorials divide the falling product"
        );
        total *= count;
    }
    Ok(total)
}

/// Number of character labels of total weight n over F_q, i.e. the number
/// of irreducible characters (equivalently conjugacy classes) of GL(n, q).
pub fn count_labels(n: u32, q: u64) -> BigUint {
    enumerate_profiles(n, q)
        .iter()
        .map(|p| profile_multiplicity(p, q).expect("enumerated profiles respect slot caps"))
        .sum()
}
