use num_bigint::BigInt;
use qverify::identities::*;
use qverify::{qbin, IntPoly};

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

#[test]
fn hand_expansions() {
    assert_eq!(f_sum(2, 1, ExponentVariant::Minus), p(&[1, 1]));
    assert_eq!(f_sum(0, 0, ExponentVariant::Plus), IntPoly::one());
    assert_eq!(theorem1_forms(2, 1), (p(&[1, 1]), p(&[1, 1]), p(&[1, 1])));
    assert_eq!(theorem1_forms(7, 0), (IntPoly::one(), IntPoly::one(), IntPoly::one()));
    assert!(involution_zero_sum(2, 1).is_zero());
    assert_eq!(q_vandermonde(1, 1, 1), (p(&[1, 1]), p(&[1, 1])));
    assert_eq!(vandermonde_diag(2, 1), (IntPoly::one(), IntPoly::one()));
    assert_eq!(vandermonde_diag(1, 1), (IntPoly::zero(), IntPoly::zero()));
    assert_eq!(bressoud(2, RrVariant::First), (p(&[1, 1, 1, 0, 1]), p(&[1, 1, 1, 0, 1])));
    assert_eq!(bressoud(1, RrVariant::Second), (p(&[1, 0, 1]), p(&[1, 0, 1])));
    assert_eq!(bressoud(0, RrVariant::First), (IntPoly::one(), IntPoly::one()));
    assert_eq!(pre_bressoud2_sum(1, 1), p(&[0, 1]));
}

#[test]
fn theorem_one_forms() {
    for n in 0..=18 {
        for k in 0..=n {
            let (a, b, c) = theorem1_forms(n, k);
            let expect = qbin(n, k);
            assert_eq!(a, expect, "n={n} k={k}");
            assert_eq!(b, expect, "n={n} k={k}");
            assert_eq!(c, expect, "n={n} k={k}");
            assert_eq!(f_sum(n, k, ExponentVariant::Plus), expect);
            assert!(involution_zero_sum(n, k).is_zero());
            assert_eq!(pre_bressoud2_sum(n, k), expect.shift(k as usize));
        }
    }
}

#[test]
fn recurrences() {
    assert_eq!(f_recurrence_sides(2, 1)[0], (p(&[1, 1, 1]), p(&[1, 1, 1])));
    for n in 0..=18 {
        for k in 0..=n {
            assert!(f_recurrence_check(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn vandermonde() {
    for m in 0..=7 {
        for n in 0..=7 {
            for k in 0..=8 {
                let (l, r) = q_vandermonde(m, n, k);
                assert_eq!(l, r, "m={m} n={n} k={k}");
            }
        }
    }
    for n in 0..=12 {
        for j in -n..=n {
            let (l, r) = vandermonde_diag(n, j);
            assert_eq!(l, r, "n={n} j={j}");
            if 2 * j.abs() > n {
                assert!(l.is_zero());
            }
        }
    }
}

#[test]
fn bressoud_identities() {
    for n in 0..=25 {
        for v in [RrVariant::First, RrVariant::Second] {
            let (l, r) = bressoud(n, v);
            assert_eq!(l, r, "n={n} {v:?}");
        }
        let two_n = BigInt::from(2).pow(n as u32);
        assert_eq!(bressoud(n, RrVariant::First).0.eval(&BigInt::from(1)), two_n);
    }
}

#[test]
fn bressoud_stabilises_to_rogers_ramanujan() {
    // Coefficients of [n,k] through q^N agree with 1/(q;q)_k once n >= N.
    let order = 30;
    let first = rr_sum_side(order, RrVariant::First);
    let second = rr_sum_side(order, RrVariant::Second);
    for n in [30i64, 35, 45] {
        let (lhs1, _) = bressoud(n, RrVariant::First);
        let (lhs2, _) = bressoud(n, RrVariant::Second);
        for i in 0..=order {
            assert_eq!(&lhs1.coeff(i), first.coeff(i).unwrap(), "n={n} i={i}");
            assert_eq!(&lhs2.coeff(i), second.coeff(i).unwrap(), "n={n} i={i}");
        }
    }
    // and not before
    let (lhs, _) = bressoud(3, RrVariant::First);
    assert!((0..=order).any(|i| &lhs.coeff(i) != first.coeff(i).unwrap()));
}

#[test]
fn rogers_ramanujan_small_orders() {
    let coeffs = |s: qverify::QSeries| s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
    assert_eq!(coeffs(rr_sum_side(6, RrVariant::First)), [1, 1, 1, 1, 2, 2, 3]);
    assert_eq!(coeffs(rr_sum_side(6, RrVariant::Second)), [1, 0, 1, 1, 1, 1, 2]);
    assert_eq!(coeffs(rr_sum_side(0, RrVariant::First)), [1]);
    assert_eq!(coeffs(rr_product_side(0, RrVariant::Second)), [1]);
    for order in [6, 50, 120] {
        for v in [RrVariant::First, RrVariant::Second] {
            assert_eq!(rr_sum_side(order, v), rr_product_side(order, v));
        }
    }
}

#[test]
fn truncation_is_independent_of_cutoff() {
    let long = rr_sum_side(80, RrVariant::First);
    let short = rr_sum_side(40, RrVariant::First);
    assert_eq!(&long.coeffs()[..=40], short.coeffs());
    let long = rr_product_side(80, RrVariant::Second);
    let short = rr_product_side(40, RrVariant::Second);
    assert_eq!(&long.coeffs()[..=40], short.coeffs());
}
