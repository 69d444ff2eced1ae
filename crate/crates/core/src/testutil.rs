//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::algebra::{Flavor, Generator, NCPoly, Word};
use crate::scalar::{LaurentPoly, RationalFunction};

pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(LaurentPoly::from_terms)
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |l| !l.is_zero())
}

/// Small rational functions, including genuine fractions.
pub fn rf() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFunction::normalize(&n, &d).unwrap())
}

/// Rational functions that are Laurent polynomials.
pub fn laurent_rf() -> impl Strategy<Value = RationalFunction> {
    laurent().prop_map(|l| RationalFunction::from_laurent(&l))
}

pub fn generator(flavor: Flavor, n: usize) -> impl Strategy<Value = Generator> {
    prop::sample::select(flavor.alphabet(n))
}

pub fn word(flavor: Flavor, n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(generator(flavor, n), 0..=max_len).prop_map(Word)
}

pub fn ncpoly_with(
    flavor: Flavor,
    n: usize,
    max_len: usize,
    max_terms: usize,
    coeff: BoxedStrategy<RationalFunction>,
) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(flavor, n, max_len), coeff), 0..=max_terms).prop_map(NCPoly::from_terms)
}

pub fn ncpoly(flavor: Flavor, n: usize) -> impl Strategy<Value = NCPoly> {
    ncpoly_with(flavor, n, 3, 3, laurent_rf().boxed())
}

pub fn cartan(rows: &[&[i64]]) -> crate::cartan::SymmetrizedCartan {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    crate::cartan::SymmetrizedCartan::from_rows(&rows).unwrap()
}

/// sl2, A2, B2, G2 and the rank-2 affine-type matrix with `-2` entries.
pub fn test_matrices() -> Vec<crate::cartan::SymmetrizedCartan> {
    vec![
        cartan(&[&[2]]),
        cartan(&[&[2, -1], &[-1, 2]]),
        cartan(&[&[2, -1], &[-2, 2]]),
        cartan(&[&[2, -1], &[-3, 2]]),
        cartan(&[&[2, -2], &[-2, 2]]),
    ]
}
