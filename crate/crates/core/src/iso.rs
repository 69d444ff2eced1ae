//! The maps between the equitable and Chevalley presentations, the two
//! antiautomorphisms used to transport relations, and the end-to-end
//! certification driver.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{apply_antihom, apply_hom, Generator, GeneratorAssignment, NCPoly};
use crate::cartan::SymmetrizedCartan;
use crate::error::Result;
use crate::presentation::{chevalley_presentation, equitable_presentation, serre_sum, PresentationSpec};
use crate::report::{CheckEntry, VerificationReport, Witness};
use crate::scalar::RationalFunction;

fn gen(g: Generator) -> NCPoly {
    NCPoly::generator(g)
}

/// Both presentations of one Cartan datum with the generator images of
/// `φ`, `ψ`, `μ` and `σ`.
#[derive(Clone, Debug)]
pub struct IsoMaps {
    chevalley: Arc<PresentationSpec>,
    equitable: Arc<PresentationSpec>,
    phi: GeneratorAssignment,
    psi: GeneratorAssignment,
    mu: GeneratorAssignment,
    sigma: GeneratorAssignment,
}

impl IsoMaps {
    pub fn new(sc: &SymmetrizedCartan) -> Self {
        Self::with_presentations(Arc::new(chevalley_presentation(sc)), Arc::new(equitable_presentation(sc)))
    }

    pub fn with_presentations(chevalley: Arc<PresentationSpec>, equitable: Arc<PresentationSpec>) -> Self {
        let sc = chevalley.cartan().clone();
        let mut phi = GeneratorAssignment::new();
        let mut psi = GeneratorAssignment::new();
        let mut mu = GeneratorAssignment::new();
        let mut sigma = GeneratorAssignment::new();
        let one = NCPoly::one();
        for i in 0..sc.rank() {
            let qi = sc.q_pow(i, 1);
            let qi_inv = sc.q_pow(i, -1);
            let diff = q_diff(&sc, i);
            let diff_inv = diff.inv().expect("q_i - q_i^-1 is nonzero");
            let (e, f, k, ki) = (gen(Generator::e(i)), gen(Generator::f(i)), gen(Generator::k(i)), gen(Generator::kinv(i)));
            let (x, xi, y, z) = (gen(Generator::x(i)), gen(Generator::xinv(i)), gen(Generator::y(i)), gen(Generator::z(i)));

            phi.insert(Generator::x(i), k.clone());
            phi.insert(Generator::xinv(i), ki.clone());
            phi.insert(Generator::y(i), &ki + &f.scale(&diff));
            phi.insert(Generator::z(i), &ki - &(&ki * &e).scale(&(&qi * &diff)));

            psi.insert(Generator::e(i), (&one - &(&x * &z)).scale(&(&qi_inv * &diff_inv)));
            psi.insert(Generator::f(i), (&y - &xi).scale(&diff_inv));
            psi.insert(Generator::k(i), x.clone());
            psi.insert(Generator::kinv(i), xi.clone());

            mu.insert(Generator::e(i), (&f * &k).scale(&-&qi_inv));
            mu.insert(Generator::f(i), (&ki * &e).scale(&-&qi));
            mu.insert(Generator::k(i), k);
            mu.insert(Generator::kinv(i), ki);

            sigma.insert(Generator::x(i), x);
            sigma.insert(Generator::xinv(i), xi);
            sigma.insert(Generator::y(i), z);
            sigma.insert(Generator::z(i), y);
        }
        IsoMaps { chevalley, equitable, phi, psi, mu, sigma }
    }

    pub fn chevalley(&self) -> &Arc<PresentationSpec> {
        &self.chevalley
    }

    pub fn equitable(&self) -> &Arc<PresentationSpec> {
        &self.equitable
    }

    pub fn cartan(&self) -> &SymmetrizedCartan {
        self.chevalley.cartan()
    }

    /// Overrides the image of one equitable generator under `φ`.
    pub fn set_phi(&mut self, g: Generator, image: NCPoly) {
        self.phi.insert(g, image);
    }

    pub fn set_psi(&mut self, g: Generator, image: NCPoly) {
        self.psi.insert(g, image);
    }

    pub fn phi_assignment(&self) -> &GeneratorAssignment {
        &self.phi
    }

    pub fn psi_assignment(&self) -> &GeneratorAssignment {
        &self.psi
    }

    /// Equitable to Chevalley, homomorphic, in normal form.
    pub fn phi(&self, p: &NCPoly) -> Result<NCPoly> {
        self.equitable.check_alphabet(p)?;
        self.chevalley.normal_form(&apply_hom(&self.phi, p)?)
    }

    /// Chevalley to equitable, homomorphic, in normal form.
    pub fn psi(&self, p: &NCPoly) -> Result<NCPoly> {
        self.chevalley.check_alphabet(p)?;
        self.equitable.normal_form(&apply_hom(&self.psi, p)?)
    }

    /// The Chevalley antiautomorphism `K ↦ K`, `E_i ↦ -q_i^-1 F_i K_i`,
    /// `F_i ↦ -q_i K_i^-1 E_i`: letter reversal `E ↔ F` followed by the
    /// automorphism `E_i ↦ -q_i K_i^-1 E_i`, `F_i ↦ -q_i^-1 F_i K_i`.
    pub fn mu(&self, p: &NCPoly) -> Result<NCPoly> {
        self.chevalley.check_alphabet(p)?;
        self.chevalley.normal_form(&apply_antihom(&self.mu, p)?)
    }

    /// The equitable antiautomorphism fixing `X_i^±1` and swapping `Y_i ↔ Z_i`.
    pub fn sigma(&self, p: &NCPoly) -> Result<NCPoly> {
        self.equitable.check_alphabet(p)?;
        self.equitable.normal_form(&apply_antihom(&self.sigma, p)?)
    }

    /// Every check of the certification run, sorted by name.
    pub fn verify(&self) -> VerificationReport {
        let checks = self.checks();
        let entries: Vec<CheckEntry> = checks.into_par_iter().map(|(name, check)| CheckEntry::run(name, check)).collect();
        VerificationReport::from_entries(self.cartan().gcm().to_string(), entries)
    }

    /// The names of the checks [`IsoMaps::verify`] runs.
    pub fn check_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.checks().into_iter().map(|(n, _)| n).collect();
        names.sort();
        names
    }

    fn checks(&self) -> Vec<(String, Check<'_>)> {
        let mut out: Vec<(String, Check<'_>)> = Vec::new();
        let (chev, eq) = (&self.chevalley, &self.equitable);
        for rel in eq.relations() {
            out.push((format!("hat.{}", rel.name), Box::new(move || zero_check(chev, &self.phi(&rel.poly)?))));
            out.push((format!("sigma.sound[{}]", rel.name), Box::new(move || zero_check(eq, &self.sigma(&rel.poly)?))));
        }
        for rel in chev.relations() {
            out.push((format!("tilde.{}", rel.name), Box::new(move || zero_check(eq, &self.psi(&rel.poly)?))));
            out.push((format!("mu.sound[{}]", rel.name), Box::new(move || zero_check(chev, &self.mu(&rel.poly)?))));
        }
        for g in eq.alphabet() {
            out.push((
                format!("inverse.psi_phi[{g}]"),
                Box::new(move || zero_check(eq, &(&self.psi(&self.phi(&gen(g))?)? - &gen(g)))),
            ));
        }
        for g in chev.alphabet() {
            out.push((
                format!("inverse.phi_psi[{g}]"),
                Box::new(move || zero_check(chev, &(&self.phi(&self.psi(&gen(g))?)? - &gen(g)))),
            ));
        }
        for i in 0..self.cartan().rank() {
            let id = i + 1;
            out.push((
                format!("mu.fixes_xhat[{id}]"),
                Box::new(move || {
                    let xhat = self.phi(&gen(Generator::x(i)))?;
                    zero_check(chev, &(&self.mu(&xhat)? - &xhat))
                }),
            ));
            out.push((
                format!("mu.yhat_to_zhat[{id}]"),
                Box::new(move || {
                    let yhat = self.phi(&gen(Generator::y(i)))?;
                    let zhat = self.phi(&gen(Generator::z(i)))?;
                    zero_check(chev, &(&self.mu(&yhat)? - &zhat))
                }),
            ));
        }
        for (i, j) in self.cartan().off_diagonal_pairs().collect::<Vec<_>>() {
            out.push((format!("sigma.route[{},{}]", i + 1, j + 1), Box::new(move || self.sigma_route(i, j))));
        }
        out
    }

    /// Transports the `E`-side Serre identity through `σ`: with
    /// `u_k = 1 - X_k Z_k` and `v_k = Y_k X_k - 1`, the Serre sum in `u`
    /// vanishes after `σ`, equals minus the Serre sum in `v`, and the latter
    /// times `X_i^(A_ij - 1) X_j^-1` vanishes.
    fn sigma_route(&self, i: usize, j: usize) -> Result<Option<Witness>> {
        let eq = &self.equitable;
        let sc = self.cartan();
        let one = NCPoly::one();
        let u = |k: usize| &one - &(&gen(Generator::x(k)) * &gen(Generator::z(k)));
        let v = |k: usize| &(&gen(Generator::y(k)) * &gen(Generator::x(k))) - &one;
        let e_side = serre_sum(sc, i, j, &u(i), &u(j));
        let image = self.sigma(&e_side)?;
        if let Some(w) = zero_check(eq, &image)? {
            return Ok(Some(w));
        }
        let f_side = eq.normal_form(&serre_sum(sc, i, j, &v(i), &v(j)))?;
        let gap = &f_side + &image;
        if !gap.is_zero() {
            return Ok(Some(Witness::Poly(gap)));
        }
        let mut exps = vec![0i64; sc.rank()];
        exps[i] += sc.a(i, j) - 1;
        exps[j] -= 1;
        let shifted = &f_side * &NCPoly::word(eq.laurent_word(&exps));
        zero_check(eq, &shifted)
    }
}

type Check<'a> = Box<dyn FnOnce() -> Result<Option<Witness>> + Send + 'a>;

fn zero_check(pres: &PresentationSpec, p: &NCPoly) -> Result<Option<Witness>> {
    if pres.is_zero(p)? {
        Ok(None)
    } else {
        Ok(Some(Witness::Poly(pres.normal_form(p)?)))
    }
}

pub fn phi(sc: &SymmetrizedCartan, p: &NCPoly) -> Result<NCPoly> {
    IsoMaps::new(sc).phi(p)
}

pub fn psi(sc: &SymmetrizedCartan, p: &NCPoly) -> Result<NCPoly> {
    IsoMaps::new(sc).psi(p)
}

pub fn mu_chevalley(sc: &SymmetrizedCartan, p: &NCPoly) -> Result<NCPoly> {
    IsoMaps::new(sc).mu(p)
}

pub fn sigma_equitable(sc: &SymmetrizedCartan, p: &NCPoly) -> Result<NCPoly> {
    IsoMaps::new(sc).sigma(p)
}

/// Runs the full certification for one Cartan datum.
pub fn verify_presentation_iso(sc: &SymmetrizedCartan) -> VerificationReport {
    IsoMaps::new(sc).verify()
}

/// `q_i - q_i^-1`.
pub fn q_diff(sc: &SymmetrizedCartan, i: usize) -> RationalFunction {
    &sc.q_pow(i, 1) - &sc.q_pow(i, -1)
}
