//! q-integers, q-factorials and Gaussian binomials at `q_i = q^{d_i}`.

use crate::error::{Error, Result};
use crate::scalar::{rat, LaurentPoly, RationalFunction};

/// A node of the Cartan datum together with its symmetrizer entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QIndex {
    /// Zero-based node index.
    pub node: usize,
    /// Symmetrizer `d_i >= 1`.
    pub d: u32,
}

impl QIndex {
    pub fn new(node: usize, d: u32) -> Self {
        assert!(d >= 1, "symmetrizer entries are positive");
        QIndex { node, d }
    }

    /// `q_i^k`
    pub fn q_pow(&self, k: i64) -> RationalFunction {
        RationalFunction::q_pow(k * self.d as i64)
    }

    /// `q_i - q_i^{-1}`
    pub fn q_diff(&self) -> RationalFunction {
        let d = self.d as i64;
        RationalFunction::from_laurent(&LaurentPoly::from_terms([(d, 1), (-d, -1)]))
    }
}

/// `q_i = q^{d_i}`.
pub fn q_sub(i: QIndex) -> RationalFunction {
    i.q_pow(1)
}

/// The q-integer `[m]_i = (q_i^m - q_i^{-m}) / (q_i - q_i^{-1})`, expanded as
/// the Laurent polynomial `q_i^{m-1} + q_i^{m-3} + ... + q_i^{1-m}`.
pub fn q_int(m: i64, i: QIndex) -> RationalFunction {
    let sign = m.signum();
    let m = m.abs();
    let d = i.d as i64;
    let terms = (0..m).map(|k| ((m - 1 - 2 * k) * d, sign));
    RationalFunction::from_laurent(&LaurentPoly::from_terms(terms))
}

/// `[m]_i! = [m]_i [m-1]_i ... [1]_i`, with `[0]_i! = 1`.
pub fn q_factorial(m: u32, i: QIndex) -> RationalFunction {
    (1..=m as i64).fold(RationalFunction::one(), |acc, k| &acc * &q_int(k, i))
}

/// The Gaussian binomial `[m over r]_i = [m]_i! / ([r]_i! [m-r]_i!)`; zero when
/// `r < 0` or `r > m`.
pub fn q_binom(m: u32, r: i64, i: QIndex) -> RationalFunction {
    if r < 0 || r > m as i64 {
        return RationalFunction::zero();
    }
    let r = r as u32;
    let den = &q_factorial(r, i) * &q_factorial(m - r, i);
    q_factorial(m, i)
        .checked_div(&den)
        .expect("q-factorials are nonzero")
}

/// `prod_{s=0}^{-a} (1 - q_i^{a+2s})`, the scalar on the right of the
/// equitable Serre relations for `a = A_ij` (`i != j`).
pub fn serre_rhs_product(a: i64, i: QIndex) -> Result<RationalFunction> {
    if a > 0 {
        return Err(Error::InvalidCartanEntry(a));
    }
    let one = RationalFunction::one();
    Ok((0..=-a).fold(one.clone(), |acc, s| &acc * &(&one - &i.q_pow(a + 2 * s))))
}

/// `sum_{r=0}^{m} (-1)^r [m over r]_i λ^r`, the left side of the q-binomial
/// theorem specialisation.
pub fn alternating_binomial_sum(m: u32, lambda: &RationalFunction, i: QIndex) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    let mut power = RationalFunction::one();
    for r in 0..=m as i64 {
        let term = &q_binom(m, r, i) * &power;
        acc = if r % 2 == 0 { &acc + &term } else { &acc - &term };
        power = &power * lambda;
    }
    acc
}

/// `prod_{s=0}^{m-1} (1 - λ q_i^{1-m+2s})`, the right side of the same identity.
pub fn q_binomial_product(m: u32, lambda: &RationalFunction, i: QIndex) -> RationalFunction {
    let one = RationalFunction::one();
    let m = m as i64;
    (0..m).fold(one.clone(), |acc, s| &acc * &(&one - &(lambda * &i.q_pow(1 - m + 2 * s))))
}

/// The integer `(-1)^k` as a scalar.
pub fn sign(k: i64) -> RationalFunction {
    RationalFunction::from_rational(rat(if k.rem_euclid(2) == 0 { 1 } else { -1 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::from_laurent(&LaurentPoly::from_terms(terms.iter().copied()))
    }

    fn qi(d: u32) -> QIndex {
        QIndex::new(0, d)
    }

    /// Gaussian binomials from Pascal's rule alone, with `[m over 0] = [m over m] = 1`.
    fn pascal_oracle(m: u32, r: u32, i: QIndex) -> RationalFunction {
        if r == 0 || r == m {
            return RationalFunction::one();
        }
        // [m+1 over r] = q_i^{-r} ([m over r] + q_i^{m+1} [m over r-1])
        let (mm, rr) = (m - 1, r as i64);
        let a = pascal_oracle(mm, r, i);
        let b = pascal_oracle(mm, r - 1, i);
        &i.q_pow(-rr) * &(&a + &(&i.q_pow(mm as i64 + 1) * &b))
    }

    #[test]
    fn q_sub_is_power_of_q() {
        assert_eq!(q_sub(qi(1)), RationalFunction::q());
        assert_eq!(q_sub(qi(2)), RationalFunction::q_pow(2));
        assert_eq!(q_sub(qi(3)), RationalFunction::q_pow(3));
    }

    #[test]
    fn q_int_small_values() {
        assert!(q_int(0, qi(1)).is_zero());
        assert!(q_int(1, qi(2)).is_one());
        // defining ratio, computed symbolically
        let ratio = (&RationalFunction::q_pow(2) - &RationalFunction::q_pow(-2))
            .checked_div(&(&RationalFunction::q() - &RationalFunction::q_pow(-1)))
            .unwrap();
        assert_eq!(q_int(2, qi(1)), ratio);
        assert_eq!(ratio, lp(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn q_int_matches_defining_ratio_including_negative() {
        for d in 1..=3 {
            let i = qi(d);
            for m in -6..=6 {
                let ratio = (&i.q_pow(m) - &i.q_pow(-m)).checked_div(&i.q_diff()).unwrap();
                assert_eq!(q_int(m, i), ratio, "m={m} d={d}");
            }
        }
    }

    #[test]
    fn q_binom_examples() {
        assert!(q_binom(0, 0, qi(1)).is_one());
        assert_eq!(q_binom(2, 1, qi(1)), lp(&[(1, 1), (-1, 1)]));
        let oracle = pascal_oracle(4, 2, qi(1));
        assert_eq!(oracle, lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        assert_eq!(q_binom(4, 2, qi(1)), oracle);
        assert!(q_binom(3, 4, qi(1)).is_zero());
        assert!(q_binom(3, -1, qi(1)).is_zero());
    }

    #[test]
    fn q_binom_agrees_with_pascal_oracle() {
        for d in 1..=3 {
            for m in 0..=8 {
                for r in 0..=m {
                    assert_eq!(q_binom(m, r as i64, qi(d)), pascal_oracle(m, r, qi(d)));
                }
            }
        }
    }

    #[test]
    fn q_binom_symmetric_and_bar_invariant() {
        for m in 0..=8u32 {
            for r in 0..=m as i64 {
                let b = q_binom(m, r, qi(2));
                assert_eq!(b, q_binom(m, m as i64 - r, qi(2)));
                let l = b.as_laurent().expect("denominator-free");
                assert_eq!(l, l.bar());
            }
        }
    }

    #[test]
    fn serre_product_examples() {
        assert!(serre_rhs_product(0, qi(1)).unwrap().is_zero());
        assert!(serre_rhs_product(-2, qi(1)).unwrap().is_zero());
        // (1 - q^-1)(1 - q) = 2 - q - q^-1
        assert_eq!(serre_rhs_product(-1, qi(1)).unwrap(), lp(&[(0, 2), (1, -1), (-1, -1)]));
        assert_eq!(serre_rhs_product(1, qi(1)), Err(Error::InvalidCartanEntry(1)));
    }
}
