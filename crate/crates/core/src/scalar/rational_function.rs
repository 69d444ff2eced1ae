use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::poly::Poly;
use crate::error::{Error, Result};

/// An element of ℚ(q) in canonical form.
///
/// Invariants: `numer` and `denom` are ordinary polynomials, coprime over ℚ[q];
/// `denom` has coprime integer coefficients and a positive leading coefficient;
/// zero is `0/1`. Equal field elements therefore have identical representations,
/// and `==` is exact equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numer: Poly,
    denom: Poly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { numer: Poly::zero(), denom: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RationalFunction { numer: Poly::constant(c), denom: Poly::one() }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let one = BigRational::one();
        if k >= 0 {
            RationalFunction { numer: Poly::monomial(k as usize, one), denom: Poly::one() }
        } else {
            RationalFunction {
                numer: Poly::one(),
                denom: Poly::monomial(k.unsigned_abs() as usize, one),
            }
        }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let (shift, poly) = p.to_shifted_poly();
        Self::from_shifted(poly, shift)
    }

    /// `q^shift * p` with `p(0) != 0` or `p == 0`.
    fn from_shifted(poly: Poly, shift: i64) -> Self {
        if poly.is_zero() {
            return Self::zero();
        }
        if shift >= 0 {
            RationalFunction { numer: poly.shift_up(shift as usize), denom: Poly::one() }
        } else {
            RationalFunction {
                numer: poly,
                denom: Poly::monomial(shift.unsigned_abs() as usize, BigRational::one()),
            }
        }
    }

    /// Canonical form of `n / d`.
    pub fn normalize(n: &LaurentPoly, d: &LaurentPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (sn, pn) = n.to_shifted_poly();
        let (sd, pd) = d.to_shifted_poly();
        let shift = sn - sd;
        let (num, den) = if shift >= 0 {
            (pn.shift_up(shift as usize), pd)
        } else {
            (pn, pd.shift_up(shift.unsigned_abs() as usize))
        };
        Ok(Self::reduce(num, den))
    }

    /// Cancels the gcd and fixes the denominator's content and sign.
    fn reduce(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Self::fix_content(num, den)
    }

    fn fix_content(num: Poly, den: Poly) -> Self {
        let c = den.content();
        if c.is_one() {
            return RationalFunction { numer: num, denom: den };
        }
        let inv = c.recip();
        RationalFunction { numer: num.scale(&inv), denom: den.scale(&inv) }
    }

    /// Fraction `num / q^k` with the common powers of `q` removed.
    fn over_q_power(num: Poly, k: usize) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let v = num.valuation().min(k);
        let num = num.shift_down(v);
        let k = k - v;
        let denom = if k == 0 { Poly::one() } else { Poly::monomial(k, BigRational::one()) };
        RationalFunction { numer: num, denom }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    /// Numerator as an ordinary polynomial.
    pub fn numer(&self) -> LaurentPoly {
        LaurentPoly::from_poly(&self.numer, 0)
    }

    /// Denominator as an ordinary polynomial with primitive integer coefficients.
    pub fn denom(&self) -> LaurentPoly {
        LaurentPoly::from_poly(&self.denom, 0)
    }

    /// The Laurent polynomial this equals, when the denominator is a power of `q`.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let k = self.denom.as_unit_monomial()?;
        Some(LaurentPoly::from_poly(&self.numer, -(k as i64)))
    }

    /// A nonzero constant, if this is one.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.denom.is_one() && self.numer.degree().unwrap_or(0) == 0 {
            Some(self.numer.coeffs().first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_content(self.denom.clone(), self.numer.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Value at `q = v`.
    pub fn eval_at(&self, v: &BigRational) -> Result<BigRational> {
        if v.is_zero() {
            return Err(Error::EvaluationPole);
        }
        let d = self.denom.eval(v);
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        Ok(self.numer.eval(v) / d)
    }

    fn denom_q_power(&self) -> Option<usize> {
        self.denom.as_unit_monomial()
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if let (Some(ka), Some(kb)) = (self.denom_q_power(), rhs.denom_q_power()) {
            let k = ka.max(kb);
            let num = self.numer.shift_up(k - ka).add(&rhs.numer.shift_up(k - kb));
            return RationalFunction::over_q_power(num, k);
        }
        if self.denom == rhs.denom {
            return RationalFunction::reduce(self.numer.add(&rhs.numer), self.denom.clone());
        }
        let g = self.denom.gcd(&rhs.denom);
        let da = self.denom.div_exact(&g);
        let db = rhs.denom.div_exact(&g);
        let num = self.numer.mul(&db).add(&rhs.numer.mul(&da));
        RationalFunction::reduce(num, da.mul(&rhs.denom))
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if let (Some(ka), Some(kb)) = (self.denom_q_power(), rhs.denom_q_power()) {
            return RationalFunction::over_q_power(self.numer.mul(&rhs.numer), ka + kb);
        }
        // cross-cancel, which keeps the product coprime without a final gcd
        let g1 = self.numer.gcd(&rhs.denom);
        let g2 = rhs.numer.gcd(&self.denom);
        let n1 = self.numer.div_exact(&g1);
        let d2 = rhs.denom.div_exact(&g1);
        let n2 = rhs.numer.div_exact(&g2);
        let d1 = self.denom.div_exact(&g2);
        RationalFunction::fix_content(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { numer: self.numer.neg(), denom: self.denom.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &'a RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.as_laurent() {
            return write!(f, "{l}");
        }
        let num = self.numer();
        if num.len() == 1 {
            write!(f, "{num}")?;
        } else {
            write!(f, "({num})")?;
        }
        write!(f, "*({})^-1", self.denom())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RF[{self}]")
    }
}

impl RationalFunction {
    /// True when rendering needs no parentheses inside a product, i.e. a
    /// single signed monomial `c*q^k`.
    pub fn is_monomial(&self) -> bool {
        self.as_laurent().is_some_and(|l| l.len() <= 1)
    }
}
