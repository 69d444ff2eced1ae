use std::collections::BTreeMap;
use std::fmt;

use super::{NCPoly, Word};
use crate::error::{Error, Result};
use crate::scalar::RationalFunction;

/// An element of the k-fold tensor power of the free algebra, `1 <= k <= 3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    arity: usize,
    terms: BTreeMap<Vec<Word>, RationalFunction>,
}

impl TensorPoly {
    pub const MAX_ARITY: usize = 3;

    pub fn zero(arity: usize) -> Self {
        assert!((1..=Self::MAX_ARITY).contains(&arity), "tensor arity {arity} out of range");
        TensorPoly { arity, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`
    pub fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(vec![Word::empty(); arity], RationalFunction::one());
        t
    }

    /// `legs[0] ⊗ legs[1] ⊗ ...`, expanded multilinearly.
    pub fn pure(legs: &[NCPoly]) -> Self {
        let mut acc = Self::zero(legs.len());
        let mut stack: Vec<(Vec<Word>, RationalFunction)> = vec![(Vec::new(), RationalFunction::one())];
        for leg in legs {
            let mut next = Vec::with_capacity(stack.len() * leg.len());
            for (ws, c) in &stack {
                for (w, a) in leg.terms() {
                    let mut ws = ws.clone();
                    ws.push(w.clone());
                    next.push((ws, c * a));
                }
            }
            stack = next;
        }
        for (ws, c) in stack {
            acc.add_term(ws, c);
        }
        acc
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: RationalFunction) {
        assert_eq!(words.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(words) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (ws, c) in &other.terms {
            out.add_term(ws.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-RationalFunction::one()))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero(self.arity);
        for (ws, a) in &self.terms {
            out.add_term(ws.clone(), a * c);
        }
        out
    }

    /// Legwise concatenation product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.arity);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let ws = a.iter().zip(b).map(|(u, v)| u.concat(v)).collect();
                out.add_term(ws, x * y);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every leg-`leg` word, replacing it by a polynomial and
    /// expanding linearly.
    pub fn map_leg<F>(&self, leg: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&Word) -> Result<NCPoly>,
    {
        let mut out = Self::zero(self.arity);
        let mut memo: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for (ws, c) in &self.terms {
            if !memo.contains_key(&ws[leg]) {
                memo.insert(ws[leg].clone(), f(&ws[leg])?);
            }
            for (w, a) in memo[&ws[leg]].terms() {
                let mut next = ws.clone();
                next[leg] = w.clone();
                out.add_term(next, c * a);
            }
        }
        Ok(out)
    }

    /// Regroups by the words of every leg except `leg`, giving the polynomial
    /// coefficient that sits in position `leg`.
    pub fn slices(&self, leg: usize) -> BTreeMap<Vec<Word>, NCPoly> {
        let mut out: BTreeMap<Vec<Word>, NCPoly> = BTreeMap::new();
        for (ws, c) in &self.terms {
            let mut key = ws.clone();
            let w = key.remove(leg);
            out.entry(key).or_default().add_term(w, c.clone());
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch(self.arity, other.arity))
        }
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (ws, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let legs: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
            write!(f, "({})*[{}]", c, legs.join(" ⊗ "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{}[{}]", self.arity, self)
    }
}
