//! Coproduct, counit and antipode on both presentations, the Hopf-axiom
//! checks, and the group-like and (quasi) twisted primitive predicates.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{apply_antihom, Flavor, Generator, GeneratorAssignment, Kind, NCPoly, TensorPoly, Word};
use crate::cartan::SymmetrizedCartan;
use crate::error::{Error, Result};
use crate::iso::IsoMaps;
use crate::linalg::{nullspace, Echelon, Row};
use crate::presentation::{PresentationSpec, Reducer};
use crate::report::{CheckEntry, VerificationReport, Witness};
use crate::scalar::RationalFunction;

/// Which defining equation a candidate must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimitiveKind {
    /// `Δ(u) = g ⊗ u + u ⊗ S(g)`
    Twisted,
    /// `Δ(u) = 1 ⊗ u + u ⊗ S(g)`
    QuasiTwisted,
}

/// A presentation together with generator images for Δ, ε and S.
#[derive(Clone, Debug)]
pub struct HopfData {
    pres: Arc<PresentationSpec>,
    delta: BTreeMap<Generator, TensorPoly>,
    counit: BTreeMap<Generator, RationalFunction>,
    antipode: GeneratorAssignment,
}

fn t2(a: NCPoly, b: NCPoly) -> TensorPoly {
    TensorPoly::pure(&[a, b])
}

fn gen(g: Generator) -> NCPoly {
    NCPoly::generator(g)
}

impl HopfData {
    pub fn new(
        pres: Arc<PresentationSpec>,
        delta: BTreeMap<Generator, TensorPoly>,
        counit: BTreeMap<Generator, RationalFunction>,
        antipode: GeneratorAssignment,
    ) -> Self {
        HopfData { pres, delta, counit, antipode }
    }

    /// The standard structure for the flavor of `pres`. On the equitable side
    /// these are the claimed formulas, not yet checked against the Chevalley
    /// structure; see [`HopfData::equitable_verified`].
    pub fn standard(pres: Arc<PresentationSpec>) -> Self {
        let n = pres.rank();
        let one = NCPoly::one();
        let mut delta = BTreeMap::new();
        let mut counit = BTreeMap::new();
        let mut antipode = GeneratorAssignment::new();
        for i in 0..n {
            match pres.flavor() {
                Flavor::Chevalley => {
                    let (e, f, k, ki) = (gen(Generator::e(i)), gen(Generator::f(i)), gen(Generator::k(i)), gen(Generator::kinv(i)));
                    delta.insert(Generator::e(i), t2(e.clone(), one.clone()).add(&t2(k.clone(), e.clone())).unwrap());
                    delta.insert(Generator::f(i), t2(f.clone(), ki.clone()).add(&t2(one.clone(), f.clone())).unwrap());
                    delta.insert(Generator::k(i), t2(k.clone(), k.clone()));
                    delta.insert(Generator::kinv(i), t2(ki.clone(), ki.clone()));
                    counit.insert(Generator::e(i), RationalFunction::zero());
                    counit.insert(Generator::f(i), RationalFunction::zero());
                    counit.insert(Generator::k(i), RationalFunction::one());
                    counit.insert(Generator::kinv(i), RationalFunction::one());
                    antipode.insert(Generator::e(i), -(&ki * &e));
                    antipode.insert(Generator::f(i), -(&f * &k));
                    antipode.insert(Generator::k(i), ki);
                    antipode.insert(Generator::kinv(i), k);
                }
                Flavor::Equitable => {
                    let (x, xi) = (gen(Generator::x(i)), gen(Generator::xinv(i)));
                    delta.insert(Generator::x(i), t2(x.clone(), x.clone()));
                    delta.insert(Generator::xinv(i), t2(xi.clone(), xi.clone()));
                    for g in [Generator::y(i), Generator::z(i)] {
                        let v = gen(g);
                        delta.insert(g, t2(&v - &one, xi.clone()).add(&t2(one.clone(), v.clone())).unwrap());
                        antipode.insert(g, &(&one + &x) - &(&v * &x));
                    }
                    for g in [Generator::x(i), Generator::xinv(i), Generator::y(i), Generator::z(i)] {
                        counit.insert(g, RationalFunction::one());
                    }
                    antipode.insert(Generator::x(i), xi);
                    antipode.insert(Generator::xinv(i), x);
                }
            }
        }
        HopfData { pres, delta, counit, antipode }
    }

    pub fn chevalley(sc: &SymmetrizedCartan) -> Self {
        Self::standard(Arc::new(crate::presentation::chevalley_presentation(sc)))
    }

    /// The equitable structure, available only once
    /// [`equitable_hopf_formula_check`] passes for `sc`.
    pub fn equitable_verified(sc: &SymmetrizedCartan) -> Result<Self> {
        let maps = IsoMaps::new(sc);
        let report = formula_check(&maps);
        if let Some(bad) = report.failures().next() {
            return Err(Error::UnverifiedFormula(bad.name.clone()));
        }
        Ok(Self::standard(maps.equitable().clone()))
    }

    pub fn presentation(&self) -> &PresentationSpec {
        &self.pres
    }

    pub fn presentation_arc(&self) -> &Arc<PresentationSpec> {
        &self.pres
    }

    pub fn delta_assignment(&self) -> &BTreeMap<Generator, TensorPoly> {
        &self.delta
    }

    pub fn counit_assignment(&self) -> &BTreeMap<Generator, RationalFunction> {
        &self.counit
    }

    pub fn antipode_assignment(&self) -> &GeneratorAssignment {
        &self.antipode
    }

    pub fn set_delta(&mut self, g: Generator, image: TensorPoly) {
        self.delta.insert(g, image);
    }

    pub fn set_counit(&mut self, g: Generator, value: RationalFunction) {
        self.counit.insert(g, value);
    }

    pub fn set_antipode(&mut self, g: Generator, image: NCPoly) {
        self.antipode.insert(g, image);
    }

    fn delta_word(&self, w: &Word) -> Result<TensorPoly> {
        let mut acc = TensorPoly::one(2);
        for &g in w.letters() {
            let image = self.delta.get(&g).ok_or(Error::UnassignedSymbol(g))?;
            acc = acc.mul(image)?;
        }
        Ok(acc)
    }

    fn delta_free(&self, p: &NCPoly) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero(2);
        for (w, c) in p.terms() {
            out = out.add(&self.delta_word(w)?.scale(c))?;
        }
        Ok(out)
    }

    /// Δ for arity 2, `(Δ ⊗ id)Δ` for arity 3; every leg in normal form.
    pub fn delta(&self, p: &NCPoly, arity: usize) -> Result<TensorPoly> {
        self.pres.check_alphabet(p)?;
        let d = self.pres.normal_form_tensor(&self.delta_free(p)?)?;
        match arity {
            2 => Ok(d),
            3 => self.pres.normal_form_tensor(&expand_leg(&d, 0, |w| self.delta_word(w))?),
            other => Err(Error::ArityMismatch(other, 2)),
        }
    }

    /// `(id ⊗ Δ)Δ`, computed separately from [`HopfData::delta`].
    pub fn delta_right_iterated(&self, p: &NCPoly) -> Result<TensorPoly> {
        let d = self.delta(p, 2)?;
        self.pres.normal_form_tensor(&expand_leg(&d, 1, |w| self.delta_word(w))?)
    }

    fn counit_word(&self, w: &Word) -> Result<RationalFunction> {
        let mut acc = RationalFunction::one();
        for &g in w.letters() {
            acc = &acc * self.counit.get(&g).ok_or(Error::UnassignedSymbol(g))?;
        }
        Ok(acc)
    }

    pub fn counit(&self, p: &NCPoly) -> Result<RationalFunction> {
        let mut acc = RationalFunction::zero();
        for (w, c) in p.terms() {
            acc = &acc + &(c * &self.counit_word(w)?);
        }
        Ok(acc)
    }

    pub fn antipode(&self, p: &NCPoly) -> Result<NCPoly> {
        self.pres.check_alphabet(p)?;
        self.pres.normal_form(&apply_antihom(&self.antipode, p)?)
    }

    fn tensor_residual(&self, t: &TensorPoly) -> Result<Option<Witness>> {
        if self.pres.tensor_is_zero(t)? {
            Ok(None)
        } else {
            Ok(Some(Witness::Tensor(self.pres.normal_form_tensor(t)?)))
        }
    }

    fn poly_residual(&self, p: &NCPoly) -> Result<Option<Witness>> {
        if self.pres.is_zero(p)? {
            Ok(None)
        } else {
            Ok(Some(Witness::Poly(self.pres.normal_form(p)?)))
        }
    }

    /// `(ε ⊗ id)` (leg 0) or `(id ⊗ ε)` (leg 1) of an arity-2 tensor.
    fn counit_leg(&self, t: &TensorPoly, leg: usize) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (ws, c) in t.terms() {
            out.add_term(ws[1 - leg].clone(), c * &self.counit_word(&ws[leg])?);
        }
        Ok(out)
    }

    /// `m(S ⊗ id)` (leg 0) or `m(id ⊗ S)` (leg 1) of an arity-2 tensor.
    fn antipode_leg(&self, t: &TensorPoly, leg: usize) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (ws, c) in t.terms() {
            let s = self.antipode(&NCPoly::word(ws[leg].clone()))?;
            let other = NCPoly::word(ws[1 - leg].clone());
            let prod = if leg == 0 { &s * &other } else { &other * &s };
            out += &prod.scale(c);
        }
        Ok(out)
    }

    /// The axiom checks for one generator, named `<axiom>[<generator>]`.
    fn generator_checks(&self, g: Generator) -> Vec<CheckEntry> {
        let p = gen(g);
        let mut out = Vec::new();
        out.push(CheckEntry::run(format!("coassoc[{g}]"), || {
            let left = self.delta(&p, 3)?;
            let right = self.delta_right_iterated(&p)?;
            self.tensor_residual(&left.sub(&right)?)
        }));
        for (leg, side) in [(0, "left"), (1, "right")] {
            out.push(CheckEntry::run(format!("counit.{side}[{g}]"), || {
                let d = self.delta(&p, 2)?;
                self.poly_residual(&(&self.counit_leg(&d, leg)? - &p))
            }));
            out.push(CheckEntry::run(format!("antipode.{side}[{g}]"), || {
                let d = self.delta(&p, 2)?;
                let eps = NCPoly::scalar(self.counit(&p)?);
                self.poly_residual(&(&self.antipode_leg(&d, leg)? - &eps))
            }));
        }
        out
    }

    /// Coassociativity, both counit laws and both antipode laws on every
    /// generator of the alphabet.
    pub fn check_hopf_axioms(&self) -> VerificationReport {
        let entries: Vec<CheckEntry> =
            self.pres.alphabet().into_par_iter().flat_map_iter(|g| self.generator_checks(g)).collect();
        VerificationReport::from_entries(self.pres.cartan().gcm().to_string(), entries)
    }

    /// `u ≠ 0` in the quotient and `Δ(u) = u ⊗ u`.
    pub fn is_group_like(&self, u: &NCPoly) -> Result<bool> {
        let u = self.pres.normal_form(u)?;
        if self.pres.is_zero(&u)? {
            return Ok(false);
        }
        let d = self.delta(&u, 2)?;
        self.pres.tensor_equal(&d, &t2(u.clone(), u))
    }

    /// `Δ(u) = 1 ⊗ u + u ⊗ 1`.
    pub fn is_primitive(&self, u: &NCPoly) -> Result<bool> {
        let one = NCPoly::one();
        let target = t2(one.clone(), u.clone()).add(&t2(u.clone(), one))?;
        self.pres.tensor_equal(&self.delta(u, 2)?, &target)
    }

    fn require_group_like(&self, g: &NCPoly) -> Result<()> {
        if self.is_group_like(g)? {
            Ok(())
        } else {
            Err(Error::NotGroupLike)
        }
    }

    /// `Δ(u) - left ⊗ u - u ⊗ S(g)` with `left = g` or `1`.
    fn primitive_residual(&self, u: &NCPoly, g: &NCPoly, sg: &NCPoly, kind: PrimitiveKind) -> Result<TensorPoly> {
        let left = match kind {
            PrimitiveKind::Twisted => g.clone(),
            PrimitiveKind::QuasiTwisted => NCPoly::one(),
        };
        let target = t2(left, u.clone()).add(&t2(u.clone(), sg.clone()))?;
        self.delta(u, 2)?.sub(&target)
    }

    fn satisfies(&self, u: &NCPoly, g: &NCPoly, kind: PrimitiveKind) -> Result<bool> {
        self.require_group_like(g)?;
        let sg = self.antipode(g)?;
        self.pres.tensor_is_zero(&self.primitive_residual(u, g, &sg, kind)?)
    }

    /// `Δ(u) = g ⊗ u + u ⊗ S(g)`; `u = 0` qualifies.
    pub fn is_twisted_primitive(&self, u: &NCPoly, g: &NCPoly) -> Result<bool> {
        self.satisfies(u, g, PrimitiveKind::Twisted)
    }

    /// `Δ(u) = 1 ⊗ u + u ⊗ S(g)`; `u = 0` qualifies.
    pub fn is_quasi_twisted_primitive(&self, u: &NCPoly, g: &NCPoly) -> Result<bool> {
        self.satisfies(u, g, PrimitiveKind::QuasiTwisted)
    }

    /// `u S(g)` in normal form. Carries twisted primitives for `g` to quasi
    /// twisted primitives for `g²`.
    pub fn twisted_to_quasi(&self, u: &NCPoly, g: &NCPoly) -> Result<NCPoly> {
        self.require_group_like(g)?;
        self.pres.normal_form(&(u * &self.antipode(g)?))
    }

    /// Normal words with at most `bound` non-invertible letters and every
    /// Laurent exponent in `[-bound, bound]`.
    pub fn monomial_pool(&self, bound: usize) -> Vec<Word> {
        let pres = &self.pres;
        let n = pres.rank();
        let (lk, rk) = match pres.flavor() {
            Flavor::Chevalley => (Kind::F, Kind::E),
            Flavor::Equitable => (Kind::Y, Kind::Z),
        };
        let letters: Vec<Generator> =
            (0..n).map(|i| Generator::new(lk, i)).chain((0..n).map(|i| Generator::new(rk, i))).collect();
        let mut cores = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &frontier {
                for &g in &letters {
                    let v = w.concat(&Word::letter(g));
                    if pres.is_normal_word(&v) {
                        next.push(v);
                    }
                }
            }
            cores.extend(next.iter().cloned());
            frontier = next;
        }
        let b = bound as i64;
        let mut exps: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..n {
            exps = exps.into_iter().flat_map(|v| (-b..=b).map(move |e| [v.clone(), vec![e]].concat())).collect();
        }
        let mut pool: Vec<Word> = cores
            .iter()
            .flat_map(|c| exps.iter().map(move |e| pres.join_laurent(e, c)))
            .filter(|w| pres.is_normal_word(w))
            .collect();
        pool.sort();
        pool.dedup();
        pool
    }

    /// A basis, modulo the Serre ideal, of the elements spanned by
    /// [`HopfData::monomial_pool`] that satisfy the `kind` equation for `g`.
    pub fn solve_twisted_space(&self, g: &NCPoly, bound: usize, kind: PrimitiveKind) -> Result<Vec<NCPoly>> {
        self.require_group_like(g)?;
        let pool = self.monomial_pool(bound);
        if pool.is_empty() {
            return Ok(Vec::new());
        }
        let sg = self.antipode(g)?;
        let residuals = pool
            .par_iter()
            .map(|w| self.primitive_residual(&NCPoly::word(w.clone()), g, &sg, kind))
            .collect::<Result<Vec<_>>>()?;
        let rows: Vec<Row<Vec<Word>, RationalFunction>> = self
            .pres
            .reduce_tensors(&residuals)?
            .iter()
            .map(|t| t.terms().map(|(k, c)| (k.clone(), c.clone())).collect())
            .collect();
        let candidates: Vec<NCPoly> = nullspace(&rows)
            .into_iter()
            .map(|c| NCPoly::from_terms(pool.iter().cloned().zip(c)))
            .filter(|u| !u.is_zero())
            .collect();
        let refs: Vec<&NCPoly> = candidates.iter().collect();
        let reducer = Reducer::new(&self.pres, &refs)?;
        let mut echelon = Echelon::new();
        let mut basis = Vec::new();
        for u in candidates {
            if echelon.insert(reducer.reduce(&u).into_terms().collect()) {
                basis.push(monic(u));
            }
        }
        Ok(basis)
    }
}

fn monic(u: NCPoly) -> NCPoly {
    match u.leading().and_then(|(_, c)| c.inv().ok()) {
        Some(inv) => u.scale(&inv),
        None => u,
    }
}

/// Replaces each leg-`leg` word by an arity-2 tensor, raising the arity by one.
fn expand_leg<F>(t: &TensorPoly, leg: usize, mut f: F) -> Result<TensorPoly>
where
    F: FnMut(&Word) -> Result<TensorPoly>,
{
    let mut out = TensorPoly::zero(t.arity() + 1);
    let mut memo: BTreeMap<Word, TensorPoly> = BTreeMap::new();
    for (ws, c) in t.terms() {
        if !memo.contains_key(&ws[leg]) {
            memo.insert(ws[leg].clone(), f(&ws[leg])?);
        }
        for (pair, a) in memo[&ws[leg]].terms() {
            let mut next = Vec::with_capacity(ws.len() + 1);
            next.extend_from_slice(&ws[..leg]);
            next.extend(pair.iter().cloned());
            next.extend_from_slice(&ws[leg + 1..]);
            out.add_term(next, c * a);
        }
    }
    Ok(out)
}

fn formula_check(maps: &IsoMaps) -> VerificationReport {
    let chev = HopfData::standard(maps.chevalley().clone());
    let claimed = HopfData::standard(maps.equitable().clone());
    let cp = maps.chevalley();
    let entries: Vec<CheckEntry> = maps
        .equitable()
        .alphabet()
        .into_par_iter()
        .flat_map_iter(|g| {
            let image = maps.phi(&gen(g));
            let (chev, claimed, image) = (&chev, &claimed, image);
            let delta = CheckEntry::run(format!("hopf.delta[{g}]"), || {
                let image = image.clone()?;
                let lhs = chev.delta(&image, 2)?;
                let mut rhs = claimed.delta[&g].clone();
                for leg in 0..2 {
                    rhs = rhs.map_leg(leg, |w| maps.phi(&NCPoly::word(w.clone())))?;
                }
                chev.tensor_residual(&lhs.sub(&rhs)?)
            });
            let counit = CheckEntry::run(format!("hopf.counit[{g}]"), || {
                let lhs = chev.counit(&image.clone()?)?;
                let rhs = &claimed.counit[&g];
                Ok((&lhs != rhs).then(|| Witness::Poly(NCPoly::scalar(&lhs - rhs))))
            });
            let antipode = CheckEntry::run(format!("hopf.antipode[{g}]"), || {
                let lhs = chev.antipode(&image.clone()?)?;
                let rhs = maps.phi(claimed.antipode.get(g)?)?;
                let diff = cp.normal_form(&(&lhs - &rhs))?;
                chev.poly_residual(&diff)
            });
            [delta, counit, antipode]
        })
        .collect();
    VerificationReport::from_entries(maps.chevalley().cartan().gcm().to_string(), entries)
}

/// Checks the equitable Δ, ε and S formulas against the Chevalley structure
/// through the isomorphism `φ`, one entry per formula and generator.
pub fn equitable_hopf_formula_check(sc: &SymmetrizedCartan) -> VerificationReport {
    formula_check(&IsoMaps::new(sc))
}

#[cfg(test)]
mod tests;
