use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::{Generator, Word};
use crate::scalar::RationalFunction;

/// An element of the free algebra: a finite map from words to nonzero
/// coefficients, iterated in term order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, RationalFunction>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    pub fn scalar(c: RationalFunction) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(Word::letter(g))
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RationalFunction::one())
    }

    pub fn term(w: Word, c: RationalFunction) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RationalFunction)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c * w` in place, pruning a cancelled term.
    pub fn add_term(&mut self, w: Word, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &RationalFunction)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, RationalFunction)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> RationalFunction {
        self.terms.get(w).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// The largest word in term order with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &RationalFunction)> {
        self.terms.iter().next_back()
    }

    /// The scalar if `self` lies in ℚ(q)·1.
    pub fn as_scalar(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Every generator occurring in some word.
    pub fn generators(&self) -> std::collections::BTreeSet<Generator> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).collect()
    }

    /// Greatest word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }
}

impl From<Generator> for NCPoly {
    fn from(g: Generator) -> Self {
        NCPoly::generator(g)
    }
}

impl From<RationalFunction> for NCPoly {
    fn from(c: RationalFunction) -> Self {
        NCPoly::scalar(c)
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: &NCPoly) -> NCPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}
