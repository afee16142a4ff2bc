use qverify::schur::*;
use qverify::{qbin, IntPoly};

#[test]
fn closed_form_and_companions() {
    for n in 0..=22 {
        for k in 0..=n {
            assert_eq!(g_sum(n, k), qbin(n - k, k), "n={n} k={k}");
            assert_eq!(eq16_sum(n, k), g_sum(n, k).shift(k as usize), "n={n} k={k}");
            assert!(ell_sum(n, k).is_zero(), "n={n} k={k}");
            if k >= 1 {
                assert_eq!(h_sum(n, k), g_sum(n - 1, k - 1), "n={n} k={k}");
                assert!(schur_recursion_check(n, k), "n={n} k={k}");
            }
        }
    }
}

#[test]
fn boundary_values() {
    for k in 0..=20 {
        for (computed, expected) in boundary_sides(k) {
            assert_eq!(computed, expected, "k={k}");
        }
    }
    assert_eq!(boundary_sides(0).len(), 1);
    assert_eq!(boundary_sides(1).len(), 2);
    assert_eq!(boundary_sides(2).len(), 3);
}

#[test]
fn schur_identities() {
    let (l, r) = schur_identity(4, SchurVariant::First);
    assert_eq!(l, IntPoly::from_i64s(&[1, 1, 1, 1, 1]));
    assert_eq!(r, l);
    for n in 0..=30 {
        for v in [SchurVariant::First, SchurVariant::SecondPre] {
            let (l, r) = schur_identity(n, v);
            assert_eq!(l, r, "n={n} {v:?}");
        }
        if n >= 1 {
            let (l, r) = schur_identity(n, SchurVariant::Second);
            assert_eq!(l, r, "n={n}");
        }
    }
}

#[test]
fn dropping_odd_indices_breaks_the_identity() {
    let (l, r) = schur_identity_with(1, SchurVariant::First, HalfIndex::DropOdd);
    assert_ne!(l, r);
    let (l, r) = schur_identity_with(1, SchurVariant::First, HalfIndex::Floor);
    assert_eq!(l, r);
}
