//! Brute-force partition counting, used as an independent check on the
//! algebra.
//!
//! Counting is plain recursion over the next (largest remaining) part,
//! memoized on `(remaining, largest allowed part, parts left)`. It knows
//! nothing about q-binomials or series inversion, which is the point. It is
//! comfortable up to `m` of roughly 150.
//!
//! Two standard facts connect it to the rest of the crate: the coefficient
//! of `q^m` in `[n, k]` counts partitions of `m` inside a `k x (n-k)` box, and
//! the Rogers-Ramanujan sum sides count partitions whose parts differ by at
//! least 2 (with all parts at least 2 for the second identity).

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::identities::RrVariant;
use crate::qpoly::{IntPoly, QSeries};

/// Restrictions on the partitions being counted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartitionConstraint {
    pub max_parts: Option<u64>,
    pub max_part: Option<u64>,
    pub residues: Option<Residues>,
    /// Minimum difference between consecutive parts (sorted decreasingly).
    pub min_gap: Option<u64>,
    pub min_part: u64,
}

/// Parts must be congruent to one of `allowed` modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residues {
    modulus: u64,
    allowed: BTreeSet<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstraintError {
    #[error("residue modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("residue {residue} is not below the modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },
}

impl Residues {
    pub fn new(modulus: u64, allowed: impl IntoIterator<Item = u64>) -> Result<Self, ConstraintError> {
        if modulus < 2 {
            return Err(ConstraintError::ModulusTooSmall(modulus));
        }
        let allowed: BTreeSet<u64> = allowed.into_iter().collect();
        if let Some(&residue) = allowed.iter().find(|&&r| r >= modulus) {
            return Err(ConstraintError::ResidueOutOfRange { residue, modulus });
        }
        Ok(Self { modulus, allowed })
    }

    pub fn admits(&self, part: u64) -> bool {
        self.allowed.contains(&(part % self.modulus))
    }
}

impl PartitionConstraint {
    pub fn unrestricted() -> Self {
        Self::default()
    }

    /// At most `rows` parts, each at most `cols`.
    pub fn in_box(rows: u64, cols: u64) -> Self {
        Self {
            max_parts: Some(rows),
            max_part: Some(cols),
            ..Self::default()
        }
    }

    /// Parts differing pairwise by at least `gap`, each at least `min_part`.
    pub fn gap(gap: u64, min_part: u64) -> Self {
        Self {
            min_gap: Some(gap),
            min_part,
            ..Self::default()
        }
    }

    pub fn with_residues(residues: Residues) -> Self {
        Self {
            residues: Some(residues),
            ..Self::default()
        }
    }
}

/// Memoized counter for one constraint; reusable across `m`.
pub struct PartitionCounter<'a> {
    c: &'a PartitionConstraint,
    memo: HashMap<(u64, u64, Option<u64>), BigUint>,
}

impl<'a> PartitionCounter<'a> {
    pub fn new(c: &'a PartitionConstraint) -> Self {
        Self { c, memo: HashMap::new() }
    }

    pub fn count(&mut self, m: u64) -> BigUint {
        let cap = self.c.max_part.map_or(m, |p| p.min(m));
        self.count_from(m, cap, self.c.max_parts)
    }

    fn count_from(&mut self, remaining: u64, cap: u64, slots: Option<u64>) -> BigUint {
        if remaining == 0 {
            return BigUint::one();
        }
        if slots == Some(0) {
            return BigUint::zero();
        }
        let cap = cap.min(remaining);
        let key = (remaining, cap, slots);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let floor = self.c.min_part.max(1);
        let gap = self.c.min_gap.unwrap_or(0);
        let mut total = BigUint::zero();
        let mut part = cap;
        while part >= floor {
            if self.c.residues.as_ref().is_none_or(|r| r.admits(part)) {
                let rest = remaining - part;
                if rest == 0 {
                    total += 1u32;
                } else if let Some(next_cap) = part.checked_sub(gap) {
                    total += self.count_from(rest, next_cap, slots.map(|s| s - 1));
                }
            }
            part -= 1;
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Number of partitions of `m` satisfying `c`.
pub fn count_partitions(m: u64, c: &PartitionConstraint) -> BigUint {
    PartitionCounter::new(c).count(m)
}

/// Counts for `m = 0..=order` as a series.
pub fn partition_series(order: usize, c: &PartitionConstraint) -> QSeries {
    let mut counter = PartitionCounter::new(c);
    let coeffs = (0..=order as u64).map(|m| BigInt::from(counter.count(m))).collect();
    QSeries::from_coeffs(coeffs, order)
}

/// Generating polynomial of partitions in a `k x (n-k)` box. Zero outside
/// `0 <= k <= n`, matching the q-binomial convention.
pub fn gaussian_from_box(n: i64, k: i64) -> IntPoly {
    if n < 0 || k < 0 || k > n {
        return IntPoly::zero();
    }
    let (rows, cols) = (k as u64, (n - k) as u64);
    let c = PartitionConstraint::in_box(rows, cols);
    let mut counter = PartitionCounter::new(&c);
    let coeffs = (0..=rows * cols).map(|m| BigInt::from(counter.count(m))).collect();
    IntPoly::from_coeffs(coeffs)
}

/// Gap-2 partition counts: parts `>= 1` (first) or `>= 2` (second).
pub fn rr_oracle_series(order: usize, variant: RrVariant) -> QSeries {
    let min_part = match variant {
        RrVariant::First => 1,
        RrVariant::Second => 2,
    };
    partition_series(order, &PartitionConstraint::gap(2, min_part))
}

/// Counts of partitions into parts `≡ ±1 (mod 5)` (first) or `≡ ±2 (mod 5)` (second).
pub fn rr_residue_series(order: usize, variant: RrVariant) -> QSeries {
    let allowed = match variant {
        RrVariant::First => [1, 4],
        RrVariant::Second => [2, 3],
    };
    let residues = Residues::new(5, allowed).expect("valid mod-5 residues");
    partition_series(order, &PartitionConstraint::with_residues(residues))
}
