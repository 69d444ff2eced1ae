//! The Chevalley and equitable presentations: oriented rewrite rules, Serre
//! relators, normal forms and zero-testing in the quotient algebra.

mod ideal;
mod normal;
mod rules;

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

pub use ideal::{MembershipConfig, Reducer};
pub use rules::{chevalley_relations, equitable_relations};
pub(crate) use rules::serre_sum;

use crate::algebra::{Flavor, Generator, Kind, NCPoly, Word};
use crate::cartan::SymmetrizedCartan;
use crate::error::{Error, Result};
use crate::scalar::RationalFunction;

/// Default rewrite step budget per normal-form call.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_FUEL`].
pub const FUEL_ENV: &str = "EQKIT_FUEL";

/// `DEFAULT_FUEL`, or the value of `EQKIT_FUEL` when it parses.
pub fn fuel_from_env() -> u64 {
    std::env::var(FUEL_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_FUEL)
}

/// A named defining relation, stored as `lhs - rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: String,
    pub poly: NCPoly,
}

/// How a rule's `lhs - rhs` arises from a defining relation:
/// `lhs - rhs = scale * junction_cancel(relation, left, right)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    pub relation: String,
    pub scale: RationalFunction,
    pub left: Word,
    pub right: Word,
}

/// `a b -> rhs` for a fixed pair of letters.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: (Generator, Generator),
    pub rhs: NCPoly,
    pub derivation: Derivation,
}

impl RewriteRule {
    pub fn lhs_word(&self) -> Word {
        Word(vec![self.lhs.0, self.lhs.1])
    }
}

/// Which block a Serre relator lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelatorKind {
    ChevalleyE,
    ChevalleyF,
    EquitableY,
    EquitableZ,
}

impl RelatorKind {
    /// Left-block relators (`F`, `Y`) sit next to the left block of the
    /// normal shape; right-block ones (`E`, `Z`) next to the right block.
    pub fn is_left_block(self) -> bool {
        matches!(self, RelatorKind::ChevalleyF | RelatorKind::EquitableY)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SerreRelator {
    pub name: String,
    pub kind: RelatorKind,
    pub i: usize,
    pub j: usize,
    /// `lhs - rhs`, in normal form.
    pub relator: NCPoly,
    /// Letter counts of the homogeneous top part.
    pub signature: BTreeMap<Generator, usize>,
}

/// One presentation of `U_q(g)` for a fixed Cartan datum.
pub struct PresentationSpec {
    flavor: Flavor,
    cartan: SymmetrizedCartan,
    rules: Vec<RewriteRule>,
    relators: Vec<SerreRelator>,
    relations: Vec<Relation>,
    rule_index: HashMap<(Generator, Generator), usize>,
    fuel: u64,
    membership: MembershipConfig,
    cache: RwLock<HashMap<Word, NCPoly>>,
}

impl std::fmt::Debug for PresentationSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PresentationSpec")
            .field("flavor", &self.flavor)
            .field("cartan", &self.cartan)
            .field("rules", &self.rules.len())
            .field("relators", &self.relators.len())
            .finish()
    }
}

/// The Chevalley presentation (R1)-(R7) with normal shape `F-block E-block K-block`.
pub fn chevalley_presentation(sc: &SymmetrizedCartan) -> PresentationSpec {
    PresentationSpec::new(Flavor::Chevalley, sc)
}

/// The equitable presentation (E1)-(E8) with normal shape `X-block Y-block Z-block`.
pub fn equitable_presentation(sc: &SymmetrizedCartan) -> PresentationSpec {
    PresentationSpec::new(Flavor::Equitable, sc)
}

impl PresentationSpec {
    pub fn new(flavor: Flavor, sc: &SymmetrizedCartan) -> Self {
        let (rules, relations) = match flavor {
            Flavor::Chevalley => (rules::chevalley_rules(sc), chevalley_relations(sc)),
            Flavor::Equitable => (rules::equitable_rules(sc), equitable_relations(sc)),
        };
        let rule_index = rules.iter().enumerate().map(|(k, r)| (r.lhs, k)).collect();
        let mut spec = PresentationSpec {
            flavor,
            cartan: sc.clone(),
            rules,
            relators: Vec::new(),
            relations,
            rule_index,
            fuel: fuel_from_env(),
            membership: MembershipConfig::default(),
            cache: RwLock::new(HashMap::new()),
        };
        let relators = rules::serre_relators(&spec);
        spec.relators = relators;
        spec
    }

    /// Replaces the per-call rewrite step budget.
    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self.cache = RwLock::new(HashMap::new());
        self
    }

    pub fn with_membership(mut self, config: MembershipConfig) -> Self {
        self.membership = config;
        self
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn cartan(&self) -> &SymmetrizedCartan {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    pub fn membership(&self) -> &MembershipConfig {
        &self.membership
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn relators(&self) -> &[SerreRelator] {
        &self.relators
    }

    /// Every defining relation as `lhs - rhs`, the Serre ones included.
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    pub fn rule_for(&self, a: Generator, b: Generator) -> Option<&RewriteRule> {
        self.rule_index.get(&(a, b)).map(|&k| &self.rules[k])
    }

    pub fn alphabet(&self) -> Vec<Generator> {
        self.flavor.alphabet(self.rank())
    }

    pub fn generator(&self, kind: Kind, i: usize) -> NCPoly {
        NCPoly::generator(Generator::new(kind, i))
    }

    pub fn check_alphabet(&self, p: &NCPoly) -> Result<()> {
        for g in p.generators() {
            if g.kind.flavor() != self.flavor || g.index >= self.rank() {
                return Err(Error::ForeignGenerator(g));
            }
        }
        Ok(())
    }

    /// The invertible kinds `(positive, negative)`.
    pub(crate) fn laurent_kinds(&self) -> (Kind, Kind) {
        match self.flavor {
            Flavor::Chevalley => (Kind::K, Kind::Kinv),
            Flavor::Equitable => (Kind::X, Kind::Xinv),
        }
    }

    /// The kinds of the left and right non-invertible blocks.
    pub(crate) fn block_kinds(&self) -> (Kind, Kind) {
        match self.flavor {
            Flavor::Chevalley => (Kind::F, Kind::E),
            Flavor::Equitable => (Kind::Y, Kind::Z),
        }
    }

    /// Chevalley normal words carry the Laurent block on the right,
    /// equitable ones on the left.
    pub(crate) fn laurent_on_right(&self) -> bool {
        self.flavor == Flavor::Chevalley
    }

    /// The sorted Laurent monomial with the given exponents.
    pub fn laurent_word(&self, exps: &[i64]) -> Word {
        let (pos, neg) = self.laurent_kinds();
        let mut letters = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            let g = Generator::new(if e >= 0 { pos } else { neg }, i);
            letters.extend(std::iter::repeat_n(g, e.unsigned_abs() as usize));
        }
        Word(letters)
    }

    /// Splits a normal word into Laurent exponents and its non-invertible core.
    pub(crate) fn split_laurent(&self, w: &Word) -> (Vec<i64>, Word) {
        let mut exps = vec![0i64; self.rank()];
        let mut core = Vec::with_capacity(w.len());
        for &g in w.letters() {
            if g.is_invertible() {
                exps[g.index] += g.laurent_sign();
            } else {
                core.push(g);
            }
        }
        (exps, Word(core))
    }

    /// Reassembles `split_laurent`.
    pub(crate) fn join_laurent(&self, exps: &[i64], core: &Word) -> Word {
        let l = self.laurent_word(exps);
        if self.laurent_on_right() {
            core.concat(&l)
        } else {
            l.concat(core)
        }
    }

    /// Letter counts of the non-invertible letters.
    pub fn multidegree(w: &Word) -> BTreeMap<Generator, usize> {
        let mut m = BTreeMap::new();
        for &g in w.letters() {
            if !g.is_invertible() {
                *m.entry(g).or_insert(0) += 1;
            }
        }
        m
    }

    /// Checks every rule against its recorded derivation; returns the rules
    /// that fail.
    pub fn audit_rules(&self) -> Vec<&RewriteRule> {
        self.rules
            .iter()
            .filter(|rule| {
                let Some(rel) = self.relation(&rule.derivation.relation) else { return true };
                let d = &rule.derivation;
                let derived = junction_cancel(&rel.poly, &d.left, &d.right).scale(&d.scale);
                let stated = &NCPoly::word(rule.lhs_word()) - &rule.rhs;
                derived != stated
            })
            .collect()
    }
}

/// `left * p * right`, cancelling inverse pairs `K_i K_i^-1`, `X_i^-1 X_i`, ...
/// that meet at the two junctions. Nothing inside `p` is simplified.
pub fn junction_cancel(p: &NCPoly, left: &Word, right: &Word) -> NCPoly {
    fn join(a: &[Generator], b: &[Generator]) -> Vec<Generator> {
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].inverse() == Some(b[k]) {
            k += 1;
        }
        let mut out = a[..a.len() - k].to_vec();
        out.extend_from_slice(&b[k..]);
        out
    }
    NCPoly::from_terms(p.terms().map(|(w, c)| {
        let inner = join(left.letters(), w.letters());
        (Word(join(&inner, right.letters())), c.clone())
    }))
}
