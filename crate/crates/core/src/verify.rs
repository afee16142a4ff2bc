//! Parameter sweeps over the identities, with a first-counterexample report.
//!
//! Every identity has an ID (`eq1`, `eq15`, `cert`, ...), a parameter grid
//! in lexicographic order, and a check that produces one or more
//! `(lhs, rhs)` pairs per grid point. A sweep stops at the first grid point
//! where some pair differs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::certificate::{telescoped_sides, telescoping_steps_perturbed, CertError};
use crate::identities::{self as ids, ExponentVariant, RrVariant};
use crate::qbinom::qbin;
use crate::qpoly::{IntPoly, PolyError};
use crate::schur::{self, HalfIndex, SchurVariant};
use crate::sum::Perturbation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Eq1,
    Eq4,
    Eq6,
    Eq7,
    Eq9,
    Eq10,
    Eq11,
    Eq12,
    Eq12Pre,
    Eq15,
    Eq16,
    Eq17,
    Eq18,
    Eq19,
    Eq19Pre,
    Ell,
    H,
    Involution,
    Cert,
    Rr1,
    Rr2,
}

impl IdentityId {
    pub const ALL: [IdentityId; 21] = [
        IdentityId::Eq1,
        IdentityId::Eq4,
        IdentityId::Eq6,
        IdentityId::Eq7,
        IdentityId::Eq9,
        IdentityId::Eq10,
        IdentityId::Eq11,
        IdentityId::Eq12,
        IdentityId::Eq12Pre,
        IdentityId::Eq15,
        IdentityId::Eq16,
        IdentityId::Eq17,
        IdentityId::Eq18,
        IdentityId::Eq19,
        IdentityId::Eq19Pre,
        IdentityId::Ell,
        IdentityId::H,
        IdentityId::Involution,
        IdentityId::Cert,
        IdentityId::Rr1,
        IdentityId::Rr2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq4 => "eq4",
            IdentityId::Eq6 => "eq6",
            IdentityId::Eq7 => "eq7",
            IdentityId::Eq9 => "eq9",
            IdentityId::Eq10 => "eq10",
            IdentityId::Eq11 => "eq11",
            IdentityId::Eq12 => "eq12",
            IdentityId::Eq12Pre => "eq12pre",
            IdentityId::Eq15 => "eq15",
            IdentityId::Eq16 => "eq16",
            IdentityId::Eq17 => "eq17",
            IdentityId::Eq18 => "eq18",
            IdentityId::Eq19 => "eq19",
            IdentityId::Eq19Pre => "eq19pre",
            IdentityId::Ell => "ell",
            IdentityId::H => "h",
            IdentityId::Involution => "involution",
            IdentityId::Cert => "cert",
            IdentityId::Rr1 => "rr1",
            IdentityId::Rr2 => "rr2",
        }
    }

    /// `"all"` expands to every identity; anything else must name one.
    pub fn parse_selection(s: &str) -> Result<Vec<IdentityId>, VerifyError> {
        if s == "all" {
            return Ok(Self::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl FromStr for IdentityId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownIdentity(s.to_string()))
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error(transparent)]
    Certificate(#[from] CertError),
    #[error(transparent)]
    Arithmetic(#[from] PolyError),
}

/// Bounds of a sweep. `n_max` bounds the leading parameter (the truncation
/// order for `rr1`/`rr2`); `k_max`, when given, bounds the second one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepRange {
    pub n_max: i64,
    pub k_max: Option<i64>,
}

impl SweepRange {
    pub fn new(n_max: i64) -> Self {
        Self { n_max, k_max: None }
    }

    pub fn with_k_max(mut self, k_max: i64) -> Self {
        self.k_max = Some(k_max);
        self
    }

    fn k_cap(&self, k: i64) -> bool {
        self.k_max.is_none_or(|m| k <= m)
    }
}

/// Named parameter values of one grid point, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params(pub Vec<(&'static str, i64)>);

impl Params {
    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Params,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity: IdentityId,
    pub params_checked: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.first_counterexample.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub perturbation: Perturbation,
    /// Evaluate grid points on the rayon pool. Reports are identical to the
    /// sequential ones.
    pub parallel: bool,
}

/// One `(lhs, rhs)` pair, optionally tagged with an inner index (the `j` of
/// a certificate step).
struct Check {
    tag: Option<(&'static str, i64)>,
    lhs: IntPoly,
    rhs: IntPoly,
}

fn plain(pairs: impl IntoIterator<Item = (IntPoly, IntPoly)>) -> Vec<Check> {
    pairs
        .into_iter()
        .map(|(lhs, rhs)| Check { tag: None, lhs, rhs })
        .collect()
}

/// Sweeps the identity named `id` (or `"all"` is rejected here: use
/// [`IdentityId::parse_selection`]).
pub fn run_verify(id: &str, range: SweepRange) -> Result<VerifyReport, VerifyError> {
    run_verify_id(id.parse()?, range, &VerifyOptions::default())
}

pub fn run_verify_id(id: IdentityId, range: SweepRange, opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    let grid = grid(id, range);
    let pert = opts.perturbation;
    let outcome = |p: &Params| -> Result<Option<Counterexample>, VerifyError> {
        let checks = evaluate(id, p, &pert)?;
        Ok(checks.into_iter().find(|c| c.lhs != c.rhs).map(|c| {
            let mut params = p.clone();
            params.0.extend(c.tag);
            Counterexample {
                params,
                lhs: c.lhs,
                rhs: c.rhs,
            }
        }))
    };
    let stop = |r: &Result<Option<Counterexample>, VerifyError>| !matches!(r, Ok(None));
    let first = if opts.parallel {
        grid.par_iter()
            .enumerate()
            .map(|(i, p)| (i, outcome(p)))
            .find_first(|(_, r)| stop(r))
    } else {
        grid.iter().enumerate().map(|(i, p)| (i, outcome(p))).find(|(_, r)| stop(r))
    };
    match first {
        None => Ok(VerifyReport {
            identity: id,
            params_checked: grid.len(),
            first_counterexample: None,
        }),
        Some((i, result)) => Ok(VerifyReport {
            identity: id,
            params_checked: i + 1,
            first_counterexample: result?,
        }),
    }
}

fn nk_grid(range: SweepRange, k_min: i64, strict: bool) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 0..=range.n_max {
        let k_hi = if strict { n - 1 } else { n };
        for k in k_min..=k_hi {
            if range.k_cap(k) {
                out.push(Params(vec![("n", n), ("k", k)]));
            }
        }
    }
    out
}

fn n_grid(range: SweepRange, n_min: i64) -> Vec<Params> {
    (n_min..=range.n_max).map(|n| Params(vec![("n", n)])).collect()
}

/// The lexicographically ordered grid swept for `id`.
pub fn grid(id: IdentityId, range: SweepRange) -> Vec<Params> {
    use IdentityId::*;
    match id {
        Eq1 | Eq4 | Eq6 | Eq7 | Involution | Eq12Pre | Eq15 | Eq16 | Ell => nk_grid(range, 0, false),
        H | Eq17 => nk_grid(range, 1, false),
        Cert => nk_grid(range, 0, true),
        Eq9 => {
            let mut out = Vec::new();
            for m in 0..=range.n_max {
                for n in 0..=range.n_max {
                    for k in (0..=range.n_max).filter(|&k| range.k_cap(k)) {
                        out.push(Params(vec![("m", m), ("n", n), ("k", k)]));
                    }
                }
            }
            out
        }
        Eq10 => {
            let mut out = Vec::new();
            for n in 0..=range.n_max {
                for j in (-n..=n).filter(|j| range.k_cap(j.abs())) {
                    out.push(Params(vec![("n", n), ("j", j)]));
                }
            }
            out
        }
        Eq11 | Eq12 | Eq18 | Eq19Pre => n_grid(range, 0),
        Eq19 => n_grid(range, 1),
        Rr1 | Rr2 if range.n_max >= 0 => vec![Params(vec![("order", range.n_max)])],
        Rr1 | Rr2 => Vec::new(),
    }
}

fn evaluate(id: IdentityId, p: &Params, pert: &Perturbation) -> Result<Vec<Check>, VerifyError> {
    use IdentityId::*;
    let n = p.get("n").unwrap_or(0);
    let k = p.get("k").unwrap_or(0);
    let f = |n, k| ids::f_sum(n, k, ExponentVariant::Minus);
    let q_k = |poly: IntPoly| poly.shift(k as usize);
    Ok(match id {
        Eq1 => plain([
            (ids::f_sum_perturbed(n, k, ExponentVariant::Minus, pert), qbin(n, k)),
            (ids::f_sum(n, k, ExponentVariant::Plus), qbin(n, k)),
        ]),
        Eq4 => plain([(ids::mixed_sum_perturbed(n, k, pert), f(n, k))]),
        Eq6 => plain([(ids::raised_sum_perturbed(n, k, pert), f(n, k))]),
        Eq7 => plain([
            (ids::f_sum_perturbed(n, k, ExponentVariant::Minus, pert), qbin(n, k)),
            (ids::mixed_sum(n, k), qbin(n, k)),
            (ids::raised_sum(n, k), qbin(n, k)),
        ])
        .into_iter()
        .chain(plain(ids::f_recurrence_sides(n, k)))
        .collect(),
        Involution => plain([(ids::involution_zero_sum_perturbed(n, k, pert), IntPoly::zero())]),
        Eq9 => {
            let m = p.get("m").unwrap_or(0);
            let (lhs, rhs) = ids::q_vandermonde_perturbed(m, n, k, pert);
            plain([(rhs, lhs)])
        }
        Eq10 => {
            let j = p.get("j").unwrap_or(0);
            plain([ids::vandermonde_diag_perturbed(n, j, pert)])
        }
        Eq11 => plain([swap(ids::bressoud_perturbed(n, RrVariant::First, pert))]),
        Eq12 => plain([swap(ids::bressoud_perturbed(n, RrVariant::Second, pert))]),
        Eq12Pre => plain([(ids::pre_bressoud2_sum_perturbed(n, k, pert), q_k(qbin(n, k)))]),
        Eq15 => plain([(schur::g_sum_perturbed(n, k, pert), qbin(n - k, k))]),
        Eq16 => plain([(schur::eq16_sum_perturbed(n, k, pert), q_k(schur::g_sum(n, k)))]),
        Ell => plain([(schur::ell_sum_perturbed(n, k, pert), IntPoly::zero())]),
        H => plain([(schur::h_sum_perturbed(n, k, pert), schur::g_sum(n - 1, k - 1))]),
        Eq17 => {
            let mut pairs = schur::schur_recursion_sides_perturbed(n, k, pert);
            if k == 1 {
                pairs.push((schur::g_sum(n, 0), IntPoly::one()));
            }
            if n == k {
                pairs.extend(schur::boundary_sides(k).into_iter().skip(1));
            }
            plain(pairs)
        }
        Eq18 | Eq19 | Eq19Pre => {
            let variant = match id {
                Eq18 => SchurVariant::First,
                Eq19 => SchurVariant::Second,
                _ => SchurVariant::SecondPre,
            };
            plain([swap(schur::schur_identity_perturbed(n, variant, HalfIndex::Floor, pert))])
        }
        Cert => {
            let mut checks: Vec<Check> = telescoping_steps_perturbed(n, k, pert)?
                .into_iter()
                .map(|s| Check {
                    tag: Some(("j", s.j)),
                    lhs: s.lhs,
                    rhs: s.rhs,
                })
                .collect();
            checks.extend(plain(telescoped_sides(n, k)?));
            checks
        }
        Rr1 | Rr2 => {
            let order = p.get("order").unwrap_or(0) as usize;
            let variant = if id == Rr1 { RrVariant::First } else { RrVariant::Second };
            let sum_side = ids::rr_sum_side(order, variant);
            let product_side = ids::rr_product_side_perturbed(order, variant, pert);
            plain([(product_side.to_poly(), sum_side.to_poly())])
        }
    })
}

// Sums that carry the perturbation go on the left of every reported pair.
fn swap((lhs, rhs): (IntPoly, IntPoly)) -> (IntPoly, IntPoly) {
    (rhs, lhs)
}

/// Mini-language transcription of an identity: `lhs` and `rhs` in the free
/// parameters of the identity's grid.
///
/// For `rr1`/`rr2` the transcription is the bilateral theta sum of the
/// product side over `j` in `-n..=n`, and `rhs` is `None`: it equals
/// `(q;q)_inf` times the sum side only after truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcription {
    pub lhs: String,
    pub rhs: Option<String>,
}

fn g_text(n: &str, k: &str) -> String {
    format!(
        "sum(j, -({k}), {k}, alt(j)*q^pent(j)*qbin(floor2({n} + j), {k} - j)*qbin(floor2({n} - j + 1), {k} + j))"
    )
}

pub fn transcription(id: IdentityId) -> Transcription {
    use IdentityId::*;
    let t = |lhs: &str, rhs: &str| Transcription {
        lhs: lhs.to_string(),
        rhs: Some(rhs.to_string()),
    };
    match id {
        Eq1 => t("sum(j, -k, k, alt(j)*q^pent(j)*qbin(n, k - j)*qbin(n, k + j))", "qbin(n, k)"),
        Eq4 => t("sum(j, -k, k, alt(j)*q^pent(j)*qbin(n, k - j)*qbin(n + 1, k + j))", "qbin(n, k)"),
        Eq6 => t(
            "sum(j, -k - 1, k, alt(j)*q^pent2(j)*qbin(n, k - j)*qbin(n + 1, k + j + 1))",
            "qbin(n, k)",
        ),
        Eq7 => t("sum(j, -k, k, alt(j)*q^pent2(j)*qbin(n, k - j)*qbin(n, k + j))", "qbin(n, k)"),
        Involution => t("sum(j, 1 - k, k, alt(j)*q^(pent(j) - j)*qbin(n, k - j)*qbin(n, k + j - 1))", "0"),
        Eq9 => t("qbin(m + n, k)", "sum(j, 0, k, qbin(m, j)*qbin(n, k - j)*q^((m - j)*(k - j)))"),
        Eq10 => t("sum(k, 0, n, qbin(n, k - j)*qbin(n, k + j)*q^((k - j)*(k + j)))", "qbin(2*n, n - 2*j)"),
        Eq11 => t(
            "sum(k, 0, n, qbin(n, k)*q^(k*k))",
            "sum(j, -n, n, alt(j)*q^rr5a(j)*qbin(2*n, n - 2*j))",
        ),
        Eq12 => t(
            "sum(k, 0, n, qbin(n, k)*q^(k*k + k))",
            "sum(j, -n, n, alt(j)*q^rr5b(j)*qbin(2*n + 1, n + 1 - 2*j))",
        ),
        Eq12Pre => t(
            "sum(j, -k, k, alt(j)*q^(pent(j) - j)*qbin(n, k - j)*qbin(n + 1, k + j))",
            "q^k*qbin(n, k)",
        ),
        Eq15 => t(&g_text("n", "k"), "qbin(n - k, k)"),
        Eq16 => t(
            "sum(j, -k, k, alt(j)*q^(pent(j) - j)*qbin(floor2(n + j), k - j)*qbin(floor2(n - j + 3), k + j))",
            &format!("q^k*{}", g_text("n", "k")),
        ),
        Ell => t(
            "sum(j, 1 - k, k, alt(j)*q^(pent(j) - j)*qbin(floor2(n + j), k - j)*qbin(floor2(n - j + 1), k + j - 1))",
            "0",
        ),
        H => t(
            "sum(j, 1 - k, k, alt(j)*q^pent(j)*qbin(floor2(n + j + 1), k - j)*qbin(floor2(n - j), k + j - 1))",
            &g_text("n - 1", "k - 1"),
        ),
        Eq17 => t(
            &g_text("n + 2", "k"),
            &format!(
                "q^(2*k)*{} + q^k*{} + {}",
                g_text("n", "k"),
                g_text("n - 1", "k - 1"),
                g_text("n", "k - 1")
            ),
        ),
        Eq18 => t(
            "sum(k, 0, n, q^(k*k)*qbin(n - k, k))",
            "sum(j, -n, n, alt(j)*q^rr5a(j)*qbin(n, floor2(n + 5*j)))",
        ),
        Eq19Pre => t(
            "sum(k, 0, n, q^(k*k + k)*qbin(n - k, k))",
            "sum(j, -n, n, alt(j)*q^rr5b(j)*qbin(n + 1, floor2(n - 5*j + 3)))",
        ),
        Eq19 => t(
            "sum(k, 0, n - 1, q^(k*k + k)*qbin(n - k - 1, k))",
            "sum(j, -n, n, alt(j)*q^rr5b(j)*qbin(n, floor2(n - 5*j + 2)))",
        ),
        Cert => t(
            "sum(j, -k, k, alt(j)*(q^pent(j) + q^pent2(j))*qbin(n, k - j)*qbin(n, k + j))",
            "2*qbin(n, k)",
        ),
        Rr1 => Transcription {
            lhs: "sum(j, -n, n, alt(j)*q^rr5a(j))".into(),
            rhs: None,
        },
        Rr2 => Transcription {
            lhs: "sum(j, -n, n, alt(j)*q^rr5b(j))".into(),
            rhs: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(IdentityId::parse_selection("all").unwrap().len(), 21);
        assert_eq!(
            run_verify("bogus", SweepRange::new(3)),
            Err(VerifyError::UnknownIdentity("bogus".into()))
        );
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(grid(IdentityId::Eq1, SweepRange::new(10)).len(), 66);
        assert_eq!(grid(IdentityId::Eq15, SweepRange::new(0)).len(), 1);
        assert_eq!(grid(IdentityId::Cert, SweepRange::new(3)).len(), 6);
        assert_eq!(grid(IdentityId::Eq9, SweepRange::new(2)).len(), 27);
        assert_eq!(grid(IdentityId::Eq10, SweepRange::new(2)).len(), 9);
        assert_eq!(grid(IdentityId::Eq1, SweepRange::new(4).with_k_max(1)).len(), 9);
        assert_eq!(grid(IdentityId::Eq19, SweepRange::new(0)).len(), 0);
    }

    #[test]
    fn small_sweeps_pass() {
        let r = run_verify("eq1", SweepRange::new(10)).unwrap();
        assert!(r.passed());
        assert_eq!(r.params_checked, 66);
        let r = run_verify("eq15", SweepRange::new(0)).unwrap();
        assert!(r.passed());
        assert_eq!(r.params_checked, 1);
    }

    #[test]
    fn perturbed_sweep_stops_at_first_failure() {
        let opts = VerifyOptions {
            perturbation: Perturbation::exponent_shift(1, 1),
            parallel: false,
        };
        let r = run_verify_id(IdentityId::Eq1, SweepRange::new(6), &opts).unwrap();
        let ce = r.first_counterexample.expect("perturbed identity must fail");
        assert_eq!(ce.params, Params(vec![("n", 2), ("k", 1)]));
        // (n,k) = (0,0), (1,0), (1,1), (2,0), (2,1)
        assert_eq!(r.params_checked, 5);
    }
}
