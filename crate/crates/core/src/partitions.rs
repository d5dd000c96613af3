//! Integer partitions: generation, hook lengths, the t-core/t-quotient
//! correspondence via beta numbers on a t-runner abacus, and
//! symmetric-group character degrees by the hook length formula.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::factorial;
use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// Partitions order lexicographically on their part lists, so for a fixed
/// size the order is reverse-lexicographic: `(4) > (3,1) > (2,2) > (2,1,1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting part lists that are not weakly
    /// decreasing sequences of positive integers.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.last().is_none_or(|&p| p > 0);
        if decreasing && positive {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition)
        }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (n), or the empty partition for n = 0.
    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    fn part_or_zero(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transposed (conjugate) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part_or_zero(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook lengths of every cell of the Young diagram.
    pub fn hook_lengths(&self) -> HookMultiset {
        let conj = self.conjugate();
        let mut lengths = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                // arm + leg + 1 = (row - j - 1) + (col_height - i - 1) + 1
                lengths.push(row + conj.parts[j] - i as u32 - j as u32 - 1);
            }
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        HookMultiset { lengths }
    }

    /// The statistic sum_i (i - 1) * lambda_i over rows (1-based i); the
    /// exponent of the power-of-q prefactor in the q-analogue degree.
    pub fn n_statistic(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * u64::from(p))
            .sum()
    }

    /// Degree of the symmetric-group character indexed by this partition:
    /// n! divided by the product of all hook lengths.
    pub fn sym_degree(&self) -> BigUint {
        let numerator = factorial(self.size());
        let denominator: BigUint = self
            .hook_lengths()
            .lengths()
            .iter()
            .map(|&h| BigUint::from(h))
            .product();
        let (degree, rem) = numerator.div_rem(&denominator);
        assert!(rem.is_zero(), "hook product must divide |lambda|!");
        degree
    }

    /// True when no hook length is divisible by t.
    pub fn is_t_core(&self, t: u32) -> bool {
        count_t_hooks(self, t) == 0
    }

    /// Beta numbers lambda_i + (length - i) for the given padded length,
    /// which must be at least the number of parts. Strictly decreasing.
    fn beta_numbers(&self, padded_len: usize) -> Vec<u64> {
        debug_assert!(padded_len >= self.len());
        (1..=padded_len)
            .map(|i| u64::from(self.part_or_zero(i - 1)) + (padded_len - i) as u64)
            .collect()
    }
}

/// Recovers the partition whose beta set (for padding `beta.len()`) is the
/// given strictly decreasing sequence.
fn partition_from_beta(beta_desc: &[u64]) -> Partition {
    let l = beta_desc.len();
    let parts: Vec<u32> = beta_desc
        .iter()
        .enumerate()
        .map(|(j, &b)| (b - (l - 1 - j) as u64) as u32)
        .filter(|&p| p > 0)
        .collect();
    debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    Partition { parts }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The multiset of hook lengths of a partition, sorted in decreasing order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookMultiset {
    lengths: Vec<u32>,
}

impl HookMultiset {
    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.lengths.first().copied()
    }

    /// How many hook lengths are divisible by t.
    pub fn count_multiples_of(&self, t: u32) -> usize {
        assert!(t >= 1);
        self.lengths.iter().filter(|&&h| h % t == 0).count()
    }

    /// The multiset { h/t : t divides h }, again sorted decreasing.
    pub fn divided_multiples_of(&self, t: u32) -> Vec<u32> {
        assert!(t >= 1);
        self.lengths
            .iter()
            .filter(|&&h| h % t == 0)
            .map(|&h| h / t)
            .collect()
    }
}

/// Iterator over all partitions of n in reverse-lexicographic order:
/// (n) first, (1,...,1) last.
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

/// Next partition after `parts` in reverse-lexicographic order: decrement the
/// rightmost part exceeding 1 and repack everything to its right greedily.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let new_part = parts[i] - 1;
    let to_place = u64::from(parts[i]) + (parts.len() - i - 1) as u64;
    let mut next = parts[..i].to_vec();
    let full = to_place / u64::from(new_part);
    let rem = to_place % u64::from(new_part);
    next.extend(std::iter::repeat_n(new_part, full as usize));
    if rem > 0 {
        next.push(rem as u32);
    }
    Some(next)
}

/// All partitions of n, yielded exactly once each, largest-first
/// (reverse-lexicographic).
pub fn gen_partitions(n: u32) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { next: Some(first) }
}

/// All t-core partitions of n.
pub fn gen_t_cores(n: u32, t: u32) -> Vec<Partition> {
    assert!(t >= 1);
    gen_partitions(n).filter(|p| p.is_t_core(t)).collect()
}

/// Number of hooks of the partition whose length is divisible by t.
pub fn count_t_hooks(partition: &Partition, t: u32) -> usize {
    partition.hook_lengths().count_multiples_of(t)
}

/// A t-core together with the ordered t-tuple of quotient components.
///
/// Satisfies `core.size() + t * sum(quotient sizes) == size of the original
/// partition`, and the quotient components collect the t-hooks with their
/// lengths divided by t.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub t: u32,
}

impl CoreQuotient {
    /// Size of the partition this data came from: |core| + t * sum |quotient_i|.
    pub fn total_size(&self) -> u64 {
        self.core.size()
            + u64::from(self.t) * self.quotient.iter().map(Partition::size).sum::<u64>()
    }
}

/// Splits a partition into its t-core and t-quotient.
///
/// Beta numbers for the smallest padded length L that is a multiple of t are
/// distributed on t runners by residue mod t; pushing all beads down yields
/// the core, and the bead pattern on runner r yields quotient component r.
/// The outcome is independent of padding L by further multiples of t.
pub fn core_quotient(partition: &Partition, t: u32) -> CoreQuotient {
    assert!(t >= 1);
    let padded = partition.len().next_multiple_of(t as usize);
    let beta = partition.beta_numbers(padded);

    // Bead positions per runner, descending since beta is descending.
    let mut runners: Vec<Vec<u64>> = vec![Vec::new(); t as usize];
    for &b in &beta {
        runners[(b % u64::from(t)) as usize].push(b / u64::from(t));
    }

    let quotient = runners
        .iter()
        .map(|positions| partition_from_beta(positions))
        .collect();

    let mut core_beta = Vec::with_capacity(padded);
    for (r, positions) in runners.iter().enumerate() {
        for x in 0..positions.len() as u64 {
            core_beta.push(r as u64 + u64::from(t) * x);
        }
    }
    core_beta.sort_unstable_by(|a, b| b.cmp(a));
    let core = partition_from_beta(&core_beta);

    CoreQuotient { core, quotient, t }
}

/// Reassembles the partition from its core and quotient; inverse of
/// [`core_quotient`] under the same runner convention.
pub fn from_core_quotient(cq: &CoreQuotient) -> Result<Partition, Error> {
    let t = cq.t;
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    if cq.quotient.len() != t as usize {
        return Err(Error::QuotientLength {
            expected: t,
            found: cq.quotient.len(),
        });
    }
    if !cq.core.is_t_core(t) {
        return Err(Error::NotACore { t });
    }

    // Bead counts per runner for the core at its minimal padding; every
    // extra padding step of t adds one bead to every runner, so grow the
    // padding until each runner can hold its quotient component.
    let padded = cq.core.len().next_multiple_of(t as usize);
    let mut bead_counts = vec![0usize; t as usize];
    for &b in &cq.core.beta_numbers(padded) {
        bead_counts[(b % u64::from(t)) as usize] += 1;
    }
    let grow = cq
        .quotient
        .iter()
        .zip(&bead_counts)
        .map(|(component, &count)| component.len().saturating_sub(count))
        .max()
        .unwrap_or(0);
    for count in &mut bead_counts {
        *count += grow;
    }

    let mut beta = Vec::with_capacity(padded + grow * t as usize);
    for (r, component) in cq.quotient.iter().enumerate() {
        let count = bead_counts[r];
        for j in 1..=count {
            let position = u64::from(component.part_or_zero(j - 1)) + (count - j) as u64;
            beta.push(r as u64 + u64::from(t) * position);
        }
    }
    beta.sort_unstable_by(|a, b| b.cmp(a));
    Ok(partition_from_beta(&beta))
}

/// The (t+1)-vector (t*|q_0|, ..., t*|q_{t-1}|, |core|) recording how the
/// size of the partition splits across quotient components and core.
/// Its entries always sum to the size of the partition.
pub fn size_decomposition(partition: &Partition, t: u32) -> Vec<u64> {
    let cq = core_quotient(partition, t);
    let mut out: Vec<u64> = cq
        .quotient
        .iter()
        .map(|component| u64::from(t) * component.size())
        .collect();
    out.push(cq.core.size());
    out
}
