use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Stored sparsely as exponent → coefficient with no zero entries, so the
/// empty map is `0` and structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// `c * q^exp`
    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// `q^exp`
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    /// Builds from `(exponent, integer coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, BigRational::from_integer(c.into()));
        }
        out
    }

    pub fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, x)| (e + k, x.clone())).collect() }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, x)| (*e, -x)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (ea, a) in &self.coeffs {
            for (eb, b) in &other.coeffs {
                out.add_term(ea + eb, a * b);
            }
        }
        out
    }

    /// Splits into `q^shift * p(q)` with `p` an ordinary polynomial, `p(0) != 0`
    /// unless `p` is zero.
    pub(crate) fn to_shifted_poly(&self) -> (i64, Poly) {
        let Some(lo) = self.min_exponent() else {
            return (0, Poly::zero());
        };
        let hi = self.max_exponent().unwrap_or(lo);
        let mut dense = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, Poly::from_coeffs(dense))
    }

    pub(crate) fn from_poly(p: &Poly, shift: i64) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 + shift, c.clone()))
            .collect();
        LaurentPoly { coeffs }
    }

    /// True for `c * q^k` (including zero).
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }
}

/// Renders with descending exponents in the expression grammar, e.g. `q^2 + 2 + q^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            match e {
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}
