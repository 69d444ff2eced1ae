use super::PresentationSpec;
use crate::algebra::{Generator, NCPoly, TensorPoly, Word};
use crate::error::{Error, Result};

/// Rewrite step counter for one normal-form call.
struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn step(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::FuelExhausted(self.limit))
        } else {
            Ok(())
        }
    }
}

impl PresentationSpec {
    /// Reduces `p` to the fixed point of the oriented rules.
    ///
    /// Words are processed letter by letter: a normal word `u` followed by one
    /// more letter `x` has at most one redex, at the junction. Results are
    /// memoized per word.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.check_alphabet(p)?;
        let mut budget = Budget { used: 0, limit: self.fuel() };
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out += &self.nf_word(w, &mut budget)?.scale(c);
        }
        Ok(out)
    }

    /// `normal_form` applied to every leg.
    pub fn normal_form_tensor(&self, t: &TensorPoly) -> Result<TensorPoly> {
        let mut out = t.clone();
        for leg in 0..t.arity() {
            out = out.map_leg(leg, |w| self.normal_form(&NCPoly::word(w.clone())))?;
        }
        Ok(out)
    }

    fn cached(&self, w: &Word) -> Option<NCPoly> {
        self.cache_read().get(w).cloned()
    }

    fn cache_read(&self) -> std::sync::RwLockReadGuard<'_, std::collections::HashMap<Word, NCPoly>> {
        self.cache.read().unwrap_or_else(|e| e.into_inner())
    }

    fn store(&self, w: Word, p: &NCPoly) {
        self.cache.write().unwrap_or_else(|e| e.into_inner()).insert(w, p.clone());
    }

    fn nf_word(&self, w: &Word, budget: &mut Budget) -> Result<NCPoly> {
        if let Some(p) = self.cached(w) {
            return Ok(p);
        }
        let p = self.extend(&Word::empty(), w.letters(), budget)?;
        self.store(w.clone(), &p);
        Ok(p)
    }

    /// `NF(u * letters)` for a normal word `u`.
    fn extend(&self, u: &Word, letters: &[Generator], budget: &mut Budget) -> Result<NCPoly> {
        let mut cur = NCPoly::word(u.clone());
        for &x in letters {
            let mut next = NCPoly::zero();
            for (v, c) in cur.terms() {
                next += &self.append(v, x, budget)?.scale(c);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// `NF(u * x)` for a normal word `u`.
    fn append(&self, u: &Word, x: Generator, budget: &mut Budget) -> Result<NCPoly> {
        let key = u.concat(&Word::letter(x));
        if let Some(p) = self.cached(&key) {
            return Ok(p);
        }
        let result = match u.letters().last().and_then(|&a| self.rule_for(a, x)) {
            None => NCPoly::word(key.clone()),
            Some(rule) => {
                budget.step()?;
                let prefix = Word(u.letters()[..u.len() - 1].to_vec());
                let mut acc = NCPoly::zero();
                for (w, c) in rule.rhs.terms() {
                    acc += &self.extend(&prefix, w.letters(), budget)?.scale(c);
                }
                acc
            }
        };
        self.store(key, &result);
        Ok(result)
    }

    /// True when no rule applies anywhere in `w`.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        w.letters().windows(2).all(|p| self.rule_for(p[0], p[1]).is_none())
    }
}
