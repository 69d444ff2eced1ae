//! Sparse Gaussian elimination over any [`Field`], with rows keyed by an
//! ordered column type. The pivot of a row is its largest key.

use std::collections::BTreeMap;

use crate::scalar::Field;

pub type Row<K, F> = BTreeMap<K, F>;

fn axpy<K: Ord + Clone, F: Field>(target: &mut Row<K, F>, c: &F, row: &Row<K, F>) {
    for (k, v) in row {
        let delta = c.mul(v);
        match target.get_mut(k) {
            Some(t) => {
                let s = t.add(&delta);
                if s.is_zero() {
                    target.remove(k);
                } else {
                    *t = s;
                }
            }
            None if !delta.is_zero() => {
                target.insert(k.clone(), delta);
            }
            None => {}
        }
    }
}

/// A row-echelon basis of a subspace, one monic row per pivot key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone, F: Field> {
    pivots: BTreeMap<K, Row<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for Echelon<K, F> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> Echelon<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.pivots.contains_key(k)
    }

    /// Reduces `v` until no key of the result is a pivot.
    pub fn reduce(&self, mut v: Row<K, F>) -> Row<K, F> {
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().next_back().cloned(),
                Some(b) => v.range(..b.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { return v };
            if let Some(p) = self.pivots.get(&k) {
                let c = v[&k].neg();
                axpy(&mut v, &c, p);
            }
            bound = Some(k);
        }
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: Row<K, F>) -> bool {
        let v = self.reduce(v);
        let Some((k, lead)) = v.iter().next_back() else { return false };
        let (k, inv) = (k.clone(), lead.recip());
        let v = v.into_iter().map(|(key, c)| (key, c.mul(&inv))).collect();
        self.pivots.insert(k, v);
        true
    }

    pub fn contains(&self, v: Row<K, F>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// A basis of `{ c : sum_k c_k vectors[k] = 0 }`, each element given by its
/// coefficient vector.
pub fn nullspace<K: Ord + Clone, F: Field>(vectors: &[Row<K, F>]) -> Vec<Vec<F>> {
    let m = vectors.len();
    // each pivot row carries the combination of inputs that produced it
    let mut pivots: BTreeMap<K, (Row<K, F>, Row<usize, F>)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut v = v.clone();
        let mut combo: Row<usize, F> = BTreeMap::new();
        combo.insert(idx, F::one());
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().next_back().cloned(),
                Some(b) => v.range(..b.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some((row, c)) = pivots.get(&k) {
                let s = v[&k].neg();
                axpy(&mut v, &s, row);
                axpy(&mut combo, &s, c);
            }
            bound = Some(k);
        }
        match v.iter().next_back() {
            None => {
                kernel.push((0..m).map(|i| combo.get(&i).cloned().unwrap_or_else(F::zero)).collect());
            }
            Some((k, lead)) => {
                let (k, inv) = (k.clone(), lead.recip());
                let v = v.into_iter().map(|(key, c)| (key, c.mul(&inv))).collect();
                let combo = combo.into_iter().map(|(key, c)| (key, c.mul(&inv))).collect();
                pivots.insert(k, (v, combo));
            }
        }
    }
    kernel
}

/// Rank of a set of vectors.
pub fn rank<K: Ord + Clone, F: Field>(vectors: &[Row<K, F>]) -> usize {
    let mut e = Echelon::new();
    vectors.iter().filter(|v| e.insert((*v).clone())).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, BigRational, RationalFunction};
    use proptest::prelude::*;

    fn row(entries: &[(u32, i64)]) -> Row<u32, BigRational> {
        entries.iter().map(|&(k, v)| (k, rat(v))).filter(|(_, v)| !num_traits::Zero::is_zero(v)).collect()
    }

    #[test]
    fn membership_in_span() {
        let mut e = Echelon::new();
        assert!(e.insert(row(&[(0, 1), (1, 1)])));
        assert!(e.insert(row(&[(1, 1), (2, 1)])));
        assert!(!e.insert(row(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[(0, 2), (1, 4), (2, 2)])));
        assert!(!e.contains(row(&[(0, 1)])));
        assert!(e.contains(Row::new()));
    }

    #[test]
    fn remainder_avoids_pivots() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 1), (2, 1)]));
        let r = e.reduce(row(&[(2, 3), (1, 1)]));
        assert_eq!(r, row(&[(1, 1), (0, -3)]));
    }

    #[test]
    fn nullspace_over_rational_functions() {
        let q = RationalFunction::q();
        let one = RationalFunction::one();
        let v0: Row<u32, RationalFunction> = [(0, q.clone()), (1, one.clone())].into_iter().collect();
        let v1: Row<u32, RationalFunction> = [(0, one.clone())].into_iter().collect();
        let v2: Row<u32, RationalFunction> = [(1, one.clone())].into_iter().collect();
        let k = nullspace(&[v0, v1, v2]);
        assert_eq!(k.len(), 1);
        // v0 - q v1 - v2 = 0
        let c = &k[0];
        let scale = c[0].inv().unwrap();
        assert!((&c[0] * &scale).is_one());
        assert_eq!(&c[1] * &scale, -&q);
        assert_eq!(&c[2] * &scale, -&one);
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(vs in prop::collection::vec(prop::collection::vec((0u32..5, -3i64..=3), 0..5), 0..7)) {
            let rows: Vec<Row<u32, BigRational>> = vs.iter().map(|v| {
                let mut r = Row::new();
                for &(k, c) in v { r.insert(k, rat(c)); }
                r.into_iter().filter(|(_, c)| !num_traits::Zero::is_zero(c)).collect()
            }).collect();
            let kernel = nullspace(&rows);
            prop_assert_eq!(rank(&rows) + kernel.len(), rows.len());
            for c in &kernel {
                let mut sum: Row<u32, BigRational> = Row::new();
                for (ci, r) in c.iter().zip(&rows) { axpy(&mut sum, ci, r); }
                prop_assert!(sum.is_empty());
            }
        }
    }
}
