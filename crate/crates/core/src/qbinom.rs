//! Gaussian binomial coefficients `[n, k]`.
//!
//! Three independent routes are provided so they can be checked against one
//! another:
//!
//! * [`qbin`]: the Pascal recurrence `[n+1,k] = [n,k] + q^(n-k+1) [n,k-1]`,
//!   memoized in a process-wide [`QBinomTable`];
//! * [`qbin_alt`]: the mirrored recurrence `[n+1,k] = q^k [n,k] + [n,k-1]`,
//!   recomputed from scratch on each call;
//! * [`qbin_product`]: `prod_{i=1..k} (1-q^(n-k+i)) / (1-q^i)` by exact division.
//!
//! Every route returns the zero polynomial whenever `n < 0`, `k < 0` or
//! `k > n`. Bilateral sums over `j` lean on that convention to stay plain loops.

use std::sync::{Arc, LazyLock, PoisonError, RwLock};

use crate::qpoly::{pochhammer_qq, IntPoly, PolyError};

/// Rows above this index are computed directly instead of memoized; a full
/// triangle of that size already holds a few million big integers.
pub const TABLE_MAX_N: i64 = 100;

/// Triangle of Gaussian binomials filled row by row from the Pascal
/// recurrence. Only `k <= n/2` is stored; the other half comes from symmetry.
#[derive(Debug, Clone)]
pub struct QBinomTable {
    rows: Vec<Vec<Arc<IntPoly>>>,
    zero: Arc<IntPoly>,
}

impl Default for QBinomTable {
    fn default() -> Self {
        Self::new()
    }
}

impl QBinomTable {
    pub fn new() -> Self {
        Self {
            rows: vec![vec![Arc::new(IntPoly::one())]],
            zero: Arc::new(IntPoly::zero()),
        }
    }

    /// A table with rows `0..=max_n` already built, suitable for sharing
    /// read-only between threads.
    pub fn with_max_n(max_n: usize) -> Self {
        let mut t = Self::new();
        t.extend_to(max_n);
        t
    }

    /// Largest row currently present.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, max_n: usize) {
        while self.rows.len() <= max_n {
            let n = self.rows.len();
            let prev = &self.rows[n - 1];
            let lookup_prev = |k: usize| -> &IntPoly {
                let k = k.min(n - 1 - k);
                &prev[k]
            };
            let mut row = Vec::with_capacity(n / 2 + 1);
            row.push(Arc::new(IntPoly::one()));
            for k in 1..=n / 2 {
                // [n,k] = [n-1,k] + q^(n-k) [n-1,k-1]; [n-1,k] vanishes when k = n.
                let mut entry = if k < n { lookup_prev(k).clone() } else { IntPoly::zero() };
                entry.add_signed_shifted(lookup_prev(k - 1), false, n - k);
                row.push(Arc::new(entry));
            }
            self.rows.push(row);
        }
    }

    /// `None` only when `0 <= k <= n` and row `n` has not been built yet.
    pub fn get(&self, n: i64, k: i64) -> Option<&IntPoly> {
        self.get_shared(n, k).map(|p| &**p)
    }

    fn get_shared(&self, n: i64, k: i64) -> Option<&Arc<IntPoly>> {
        if n < 0 || k < 0 || k > n {
            return Some(&self.zero);
        }
        let row = self.rows.get(n as usize)?;
        let k = k.min(n - k) as usize;
        Some(&row[k])
    }
}

static TABLE: LazyLock<RwLock<QBinomTable>> = LazyLock::new(|| RwLock::new(QBinomTable::new()));

/// Shared handle to `[n, k]`; the global table is extended under the write
/// lock, so readers only ever see complete rows.
pub(crate) fn qbin_shared(n: i64, k: i64) -> Arc<IntPoly> {
    if n > TABLE_MAX_N && (0..=n).contains(&k) {
        return Arc::new(pascal_column(n as usize, k as usize));
    }
    {
        let table = TABLE.read().unwrap_or_else(PoisonError::into_inner);
        if let Some(p) = table.get_shared(n, k) {
            return Arc::clone(p);
        }
    }
    let mut table = TABLE.write().unwrap_or_else(PoisonError::into_inner);
    table.extend_to(n as usize);
    Arc::clone(table.get_shared(n, k).expect("row was just built"))
}

/// Gaussian binomial `[n, k]`; zero outside `0 <= k <= n`.
pub fn qbin(n: i64, k: i64) -> IntPoly {
    (*qbin_shared(n, k)).clone()
}

// Pascal recurrence restricted to columns 0..=k, without the memo table.
fn pascal_column(n: usize, k: usize) -> IntPoly {
    let mut col = vec![IntPoly::zero(); k + 1];
    col[0] = IntPoly::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let below = col[j - 1].clone();
            col[j].add_signed_shifted(&below, false, i - j);
        }
    }
    col.swap_remove(k)
}

/// `[n, k]` from the mirrored recurrence `[i,j] = q^j [i-1,j] + [i-1,j-1]`.
/// Bypasses the memo table.
pub fn qbin_alt(n: i64, k: i64) -> IntPoly {
    if n < 0 || k < 0 || k > n {
        return IntPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut col = vec![IntPoly::zero(); k + 1];
    col[0] = IntPoly::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let mut next = col[j].shift(j);
            next.add_signed_shifted(&col[j - 1], false, 0);
            col[j] = next;
        }
    }
    col.swap_remove(k)
}

/// `[n, k]` as `prod_{i=1..k} (1-q^(n-k+i)) / (q;q)_k`.
///
/// A `NotDivisible` error here would mean the arithmetic kernel is broken;
/// it is surfaced rather than hidden.
pub fn qbin_product(n: i64, k: i64) -> Result<IntPoly, PolyError> {
    if n < 0 || k < 0 || k > n {
        return Ok(IntPoly::zero());
    }
    let (n, k) = (n as usize, k as usize);
    let numer = (1..=k).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::one_minus_q_pow(n - k + i));
    numer.exact_div(&pochhammer_qq(k))
}

/// `[floor(num2 / 2), k]`, rounding toward negative infinity.
///
/// Callers pass the doubled upper index (`n + j`, `n - j + 1`, ...), so
/// half-integer indices are resolved in one place.
pub fn qbin_floor2(num2: i64, k: i64) -> IntPoly {
    qbin(num2.div_euclid(2), k)
}

pub(crate) fn qbin_floor2_shared(num2: i64, k: i64) -> Arc<IntPoly> {
    qbin_shared(num2.div_euclid(2), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_values() {
        assert_eq!(qbin(2, 1), p(&[1, 1]));
        assert_eq!(qbin(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(qbin(0, 0), IntPoly::one());
        assert!(qbin(3, 5).is_zero());
        assert!(qbin(3, -1).is_zero());
        assert!(qbin(-2, 0).is_zero());
    }

    #[test]
    fn alternative_strategies_agree_on_small_cases() {
        assert_eq!(qbin_alt(2, 1), p(&[1, 1]));
        assert_eq!(qbin_alt(0, 0), IntPoly::one());
        assert_eq!(qbin_product(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(qbin_product(7, 0).unwrap(), IntPoly::one());
        assert_eq!(qbin_product(6, 3).unwrap(), qbin(6, 3));
        assert!(qbin_alt(3, 4).is_zero());
        assert!(qbin_product(-1, 0).unwrap().is_zero());
    }

    #[test]
    fn floor_halving() {
        assert_eq!(qbin_floor2(9, 4), IntPoly::one());
        assert!(qbin_floor2(-1, 0).is_zero());
        assert_eq!(qbin_floor2(5, 1), p(&[1, 1]));
        assert_eq!(qbin_floor2(-3, 0), IntPoly::zero());
    }

    #[test]
    fn large_rows_bypass_the_table() {
        let n = TABLE_MAX_N + 3;
        assert_eq!(qbin(n, 2), qbin_alt(n, 2));
        assert_eq!(qbin(n, n - 1), qbin_alt(n, 1));
    }

    #[test]
    fn private_table_matches_global() {
        let t = QBinomTable::with_max_n(12);
        assert_eq!(t.max_n(), 12);
        for n in 0..=12 {
            for k in -1..=n + 1 {
                assert_eq!(t.get(n, k).unwrap(), &qbin(n, k));
            }
        }
        assert!(t.get(13, 2).is_none());
        assert_eq!(t.get(13, 14), Some(&IntPoly::zero()));
    }
}
