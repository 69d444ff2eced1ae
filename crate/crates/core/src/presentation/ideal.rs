use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PresentationSpec, SerreRelator};
use crate::algebra::{Flavor, Generator, NCPoly, TensorPoly, Word};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Row};
use crate::scalar::{BigInt, BigRational, RationalFunction};

/// Limits and sampling parameters for Serre-ideal membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipConfig {
    /// Largest total non-invertible multidegree that is enumerated.
    pub degree_cap: usize,
    /// Number of random points used by the sampled decision.
    pub sample_points: usize,
    pub seed: u64,
}

impl Default for MembershipConfig {
    fn default() -> Self {
        MembershipConfig { degree_cap: 14, sample_points: 3, seed: 0x5eed_cafe }
    }
}

fn within(m: &BTreeMap<Generator, usize>, bound: &BTreeMap<Generator, usize>) -> bool {
    m.iter().all(|(g, &c)| bound.get(g).is_some_and(|&b| c <= b))
}

fn minus(bound: &BTreeMap<Generator, usize>, m: &BTreeMap<Generator, usize>) -> BTreeMap<Generator, usize> {
    bound.iter().map(|(g, &b)| (*g, b - m.get(g).copied().unwrap_or(0))).collect()
}

/// All words over `letters` whose letter counts stay within `budget`.
fn words_within(letters: &[Generator], budget: &BTreeMap<Generator, usize>) -> Vec<Word> {
    fn go(
        letters: &[Generator],
        budget: &mut BTreeMap<Generator, usize>,
        prefix: &mut Vec<Generator>,
        out: &mut Vec<Word>,
    ) {
        out.push(Word(prefix.clone()));
        for &g in letters {
            let left = budget.get(&g).copied().unwrap_or(0);
            if left == 0 {
                continue;
            }
            budget.insert(g, left - 1);
            prefix.push(g);
            go(letters, budget, prefix, out);
            prefix.pop();
            budget.insert(g, left);
        }
    }
    let mut out = Vec::new();
    go(letters, &mut budget.clone(), &mut Vec::new(), &mut out);
    out
}

/// Componentwise maximum multidegree over all terms.
fn max_multidegree<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> BTreeMap<Generator, usize> {
    let mut m: BTreeMap<Generator, usize> = BTreeMap::new();
    for w in words {
        for (g, c) in PresentationSpec::multidegree(w) {
            let e = m.entry(g).or_insert(0);
            *e = (*e).max(c);
        }
    }
    m
}

impl PresentationSpec {
    fn relator_bases(&self, r: &SerreRelator, bound: &BTreeMap<Generator, usize>) -> Vec<(Word, Word)> {
        let budget = minus(bound, &r.signature);
        let (lk, rk) = self.block_kinds();
        let n = self.rank();
        let left: Vec<Generator> = (0..n).map(|i| Generator::new(lk, i)).collect();
        let right: Vec<Generator> = (0..n).map(|i| Generator::new(rk, i)).collect();
        let mut out = Vec::new();
        let outer = if r.kind.is_left_block() { &left } else { &right };
        let other = if r.kind.is_left_block() { &right } else { &left };
        for a in words_within(outer, &budget) {
            let rest = minus(&budget, &PresentationSpec::multidegree(&a));
            for b in words_within(other, &rest) {
                for k in 0..=a.len() {
                    let (a1, a2) = (Word(a.letters()[..k].to_vec()), Word(a.letters()[k..].to_vec()));
                    // left relator: a1 r a2 b ; right relator: b a1 r a2
                    if r.kind.is_left_block() {
                        out.push((a1, a2.concat(&b)));
                    } else {
                        out.push((b.concat(&a1), a2));
                    }
                }
            }
        }
        out
    }

    /// Laurent exponent vectors that multiply the base spanners.
    fn laurent_window(&self, words: &[&Word]) -> Vec<Vec<i64>> {
        let observed: BTreeSet<Vec<i64>> = words.iter().map(|w| self.split_laurent(w).0).collect();
        if self.flavor() == Flavor::Chevalley {
            return observed.into_iter().collect();
        }
        let n = self.rank();
        let widen = 1 - self.cartan().gcm().min_off_diagonal().min(0);
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for e in &observed {
            for i in 0..n {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for i in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (lo[i] - widen..=hi[i] + widen).map(move |e| {
                        let mut v = v.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Multiplies every term by the Laurent monomial with exponents `l`.
    fn shift_laurent(&self, p: &NCPoly, l: &[i64]) -> NCPoly {
        NCPoly::from_terms(p.terms().map(|(w, c)| {
            let (mut e, core) = self.split_laurent(w);
            for (x, y) in e.iter_mut().zip(l) {
                *x += y;
            }
            (self.join_laurent(&e, &core), c.clone())
        }))
    }

    /// Normal-form ideal elements whose top multidegree is bounded by the
    /// words in `words`.
    fn spanners(&self, words: &[&Word]) -> Result<Vec<NCPoly>> {
        if self.relators().is_empty() || words.is_empty() {
            return Ok(Vec::new());
        }
        let bound = max_multidegree(words.iter().copied());
        let total: usize = bound.values().sum();
        let cap = self.membership().degree_cap;
        if total > cap {
            return Err(Error::WindowTooSmall { degree: total, cap });
        }
        let mut bases = Vec::new();
        for r in self.relators().iter().filter(|r| within(&r.signature, &bound)) {
            for (left, right) in self.relator_bases(r, &bound) {
                bases.push(self.normal_form(&r.relator.sandwich(&left, &right))?);
            }
        }
        if bases.is_empty() {
            return Ok(bases);
        }
        let window = self.laurent_window(words);
        let mut out = Vec::with_capacity(bases.len() * window.len());
        for l in &window {
            for b in &bases {
                out.push(self.shift_laurent(b, l));
            }
        }
        Ok(out)
    }

    /// Whether `p` lies in the Serre ideal, decided by exact elimination over
    /// ℚ(q) within the enumeration window.
    pub fn serre_ideal_member(&self, p: &NCPoly) -> Result<bool> {
        let p = self.normal_form(p)?;
        if p.is_zero() {
            return Ok(true);
        }
        Ok(Reducer::new(self, &[&p])?.reduce(&p).is_zero())
    }

    /// The same decision after specialising `q` at random rational points;
    /// true only if every point agrees on membership.
    pub fn serre_ideal_member_sampled(&self, p: &NCPoly) -> Result<bool> {
        let p = self.normal_form(p)?;
        if p.is_zero() {
            return Ok(true);
        }
        let words: Vec<&Word> = p.terms().map(|(w, _)| w).collect();
        let spanners = self.spanners(&words)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.membership().seed);
        for _ in 0..self.membership().sample_points {
            let (target, rows) = loop {
                let v = random_point(&mut rng);
                if let Some(sample) = evaluate_all(&p, &spanners, &v) {
                    break sample;
                }
            };
            let mut e = Echelon::new();
            for r in rows {
                e.insert(r);
            }
            if !e.contains(target) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p = 0` in the quotient algebra.
    pub fn is_zero(&self, p: &NCPoly) -> Result<bool> {
        self.serre_ideal_member(p)
    }

    /// `a = b` in the quotient algebra.
    pub fn equal(&self, a: &NCPoly, b: &NCPoly) -> Result<bool> {
        self.is_zero(&(a - b))
    }

    /// `t = 0` in the tensor power of the quotient: factorwise normal form,
    /// then each leg reduced modulo the Serre ideal.
    pub fn tensor_is_zero(&self, t: &TensorPoly) -> Result<bool> {
        Ok(self.reduce_tensors(std::slice::from_ref(t))?[0].is_zero())
    }

    /// Normal form of every leg, then each leg projected along the Serre
    /// ideal with one projection shared by all of `ts`, so that linear
    /// relations among the results are relations in the quotient.
    pub fn reduce_tensors(&self, ts: &[TensorPoly]) -> Result<Vec<TensorPoly>> {
        let mut ts = ts.iter().map(|t| self.normal_form_tensor(t)).collect::<Result<Vec<_>>>()?;
        if self.relators().is_empty() || ts.iter().all(TensorPoly::is_zero) {
            return Ok(ts);
        }
        let arity = ts.iter().map(TensorPoly::arity).max().unwrap_or(1);
        for leg in 0..arity {
            let words: BTreeSet<Word> =
                ts.iter().filter(|t| t.arity() > leg).flat_map(|t| t.terms().map(|(ws, _)| ws[leg].clone())).collect();
            if words.is_empty() {
                continue;
            }
            let polys: Vec<NCPoly> = words.into_iter().map(NCPoly::word).collect();
            let refs: Vec<&NCPoly> = polys.iter().collect();
            let reducer = Reducer::new(self, &refs)?;
            if reducer.rank() == 0 {
                continue;
            }
            for t in ts.iter_mut().filter(|t| t.arity() > leg) {
                *t = t.map_leg(leg, |w| Ok(reducer.reduce(&NCPoly::word(w.clone()))))?;
            }
        }
        Ok(ts)
    }

    /// `a = b` as tensors in the quotient.
    pub fn tensor_equal(&self, a: &TensorPoly, b: &TensorPoly) -> Result<bool> {
        self.tensor_is_zero(&a.sub(b)?)
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(-60..=60);
        let d: i64 = rng.gen_range(1..=25);
        let v = BigRational::new(BigInt::from(n), BigInt::from(d));
        let small = [-1i64, 0, 1].iter().any(|&k| v == BigRational::from_integer(BigInt::from(k)));
        if !small {
            return v;
        }
    }
}

fn eval_poly(p: &NCPoly, v: &BigRational) -> Option<Row<Word, BigRational>> {
    let mut row = Row::new();
    for (w, c) in p.terms() {
        let x = c.eval_at(v).ok()?;
        if !num_traits::Zero::is_zero(&x) {
            row.insert(w.clone(), x);
        }
    }
    Some(row)
}

type Sample = (Row<Word, BigRational>, Vec<Row<Word, BigRational>>);

fn evaluate_all(p: &NCPoly, spanners: &[NCPoly], v: &BigRational) -> Option<Sample> {
    let target = eval_poly(p, v)?;
    let rows = spanners.iter().map(|s| eval_poly(s, v)).collect::<Option<Vec<_>>>()?;
    Some((target, rows))
}

/// A linear projection along the Serre ideal, fixed for a window of words so
/// that it can be applied consistently to many polynomials.
pub struct Reducer {
    echelon: Echelon<Word, RationalFunction>,
}

impl Reducer {
    /// Builds the projection for the window spanned by the terms of `polys`,
    /// which must be in normal form.
    pub fn new(spec: &PresentationSpec, polys: &[&NCPoly]) -> Result<Self> {
        let words: Vec<&Word> = polys.iter().flat_map(|p| p.terms().map(|(w, _)| w)).collect();
        let mut echelon = Echelon::new();
        for s in spec.spanners(&words)? {
            echelon.insert(s.into_terms().collect());
        }
        Ok(Reducer { echelon })
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// The remainder of `p`, free of pivot words.
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        if self.echelon.rank() == 0 {
            return p.clone();
        }
        let row: Row<Word, RationalFunction> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        NCPoly::from_terms(self.echelon.reduce(row))
    }
}
