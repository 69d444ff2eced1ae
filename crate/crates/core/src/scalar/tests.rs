use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::testutil;

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn rf(terms: &[(i64, i64)]) -> RationalFunction {
    RationalFunction::from_laurent(&lp(terms))
}

fn frac(n: &[(i64, i64)], d: &[(i64, i64)]) -> RationalFunction {
    RationalFunction::normalize(&lp(n), &lp(d)).unwrap()
}

#[test]
fn normalize_examples() {
    let a = frac(&[(1, 1), (-1, -1)], &[(0, 1)]);
    assert_eq!(a.numer(), lp(&[(2, 1), (0, -1)]));
    assert_eq!(a.denom(), lp(&[(1, 1)]));

    let b = frac(&[(2, 1), (0, -1)], &[(1, 1), (0, -1)]);
    assert_eq!(b, rf(&[(1, 1), (0, 1)]));
    assert!(b.denom() == LaurentPoly::one());

    let z = frac(&[], &[(3, 1)]);
    assert!(z.is_zero());
    assert_eq!(z.denom(), LaurentPoly::one());

    assert_eq!(RationalFunction::normalize(&lp(&[(0, 1)]), &LaurentPoly::zero()), Err(Error::DivisionByZero));
}

#[test]
fn denominator_is_primitive_with_positive_lead() {
    // (2q) / (-4q^2 + 6) = -q / (2q^2 - 3)
    let a = frac(&[(1, 2)], &[(2, -4), (0, 6)]);
    assert_eq!(a.denom(), lp(&[(2, 2), (0, -3)]));
    assert_eq!(a.numer(), lp(&[(1, -1)]));
}

#[test]
fn add_examples() {
    let s = &RationalFunction::q() + &RationalFunction::q_pow(-1);
    assert_eq!(s.numer(), lp(&[(2, 1), (0, 1)]));
    assert_eq!(s.denom(), lp(&[(1, 1)]));
    assert_eq!(&s + &RationalFunction::zero(), s);
    let a = frac(&[(0, 1)], &[(1, 1), (0, -1)]);
    let b = frac(&[(0, 1)], &[(0, 1), (1, -1)]);
    assert!((&a + &b).is_zero());
}

#[test]
fn mul_examples() {
    let d = rf(&[(1, 1), (-1, -1)]);
    assert!((&d * &d.inv().unwrap()).is_one());
    assert_eq!(&d * &RationalFunction::one(), d);
    assert_eq!(&RationalFunction::q_pow(2) * &RationalFunction::q_pow(-3), RationalFunction::q_pow(-1));
}

#[test]
fn inv_examples() {
    assert_eq!(RationalFunction::q().inv().unwrap(), RationalFunction::q_pow(-1));
    let a = frac(&[(1, 1), (0, 1)], &[(1, 1)]);
    assert_eq!(a.inv().unwrap(), frac(&[(1, 1)], &[(1, 1), (0, 1)]));
    assert_eq!(RationalFunction::zero().inv(), Err(Error::DivisionByZero));
}

#[test]
fn eval_examples() {
    let a = rf(&[(1, 1), (-1, 1)]);
    assert_eq!(a.eval_at(&rat(2)).unwrap(), ratio(5, 2));
    assert_eq!(RationalFunction::one().eval_at(&ratio(-7, 3)).unwrap(), rat(1));
    let p = frac(&[(0, 1)], &[(1, 1), (0, -1)]);
    assert_eq!(p.eval_at(&rat(1)), Err(Error::EvaluationPole));
    assert_eq!(a.eval_at(&rat(0)), Err(Error::EvaluationPole));
}

#[test]
fn pow_handles_negative_exponents() {
    let a = rf(&[(1, 1), (0, 1)]);
    assert_eq!(a.pow(2).unwrap(), rf(&[(2, 1), (1, 2), (0, 1)]));
    assert_eq!(a.pow(-1).unwrap(), a.inv().unwrap());
    assert!(a.pow(0).unwrap().is_one());
    assert_eq!(RationalFunction::zero().pow(-2), Err(Error::DivisionByZero));
}

#[test]
fn rendering() {
    assert_eq!(rf(&[(2, 1), (0, 2), (-2, 1)]).to_string(), "q^2 + 2 + q^-2");
    assert_eq!(RationalFunction::from_rational(ratio(3, 2)).to_string(), "3/2");
    assert_eq!(rf(&[(1, -1), (-1, -2)]).to_string(), "-q - 2*q^-1");
    assert_eq!(RationalFunction::zero().to_string(), "0");
    assert_eq!(frac(&[(0, 1)], &[(1, 1), (0, -1)]).to_string(), "1*(q - 1)^-1");
    assert_eq!(frac(&[(1, 1), (0, 1)], &[(2, 1), (0, 1)]).to_string(), "(q + 1)*(q^2 + 1)^-1");
}

#[test]
fn laurent_bar_and_shift() {
    let a = lp(&[(2, 1), (-1, 3)]);
    assert_eq!(a.bar(), lp(&[(-2, 1), (1, 3)]));
    assert_eq!(a.shift(1), lp(&[(3, 1), (0, 3)]));
    assert_eq!(a.min_exponent(), Some(-1));
    assert_eq!(a.max_exponent(), Some(2));
}

fn near_pole(a: &RationalFunction, v: &BigRational) -> bool {
    a.eval_at(v).is_err()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_uniqueness(
        n in testutil::laurent(),
        d in testutil::nonzero_laurent(),
        c in testutil::nonzero_laurent(),
    ) {
        let a = RationalFunction::normalize(&n, &d).unwrap();
        let b = RationalFunction::normalize(&n.mul(&c), &d.mul(&c)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn field_laws(a in testutil::rf(), b in testutil::rf(), c in testutil::rf()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn eval_is_a_homomorphism(
        a in testutil::rf(),
        b in testutil::rf(),
        num in 1i64..20,
        den in 1i64..7,
        neg in any::<bool>(),
    ) {
        let v = ratio(if neg { -num } else { num }, den);
        prop_assume!(!near_pole(&a, &v) && !near_pole(&b, &v));
        let (x, y) = (a.eval_at(&v).unwrap(), b.eval_at(&v).unwrap());
        prop_assert_eq!((&a + &b).eval_at(&v).unwrap(), &x + &y);
        prop_assert_eq!((&a * &b).eval_at(&v).unwrap(), &x * &y);
    }

    #[test]
    fn laurent_round_trips_through_rf(l in testutil::laurent()) {
        prop_assert_eq!(RationalFunction::from_laurent(&l).as_laurent(), Some(l));
    }
}
