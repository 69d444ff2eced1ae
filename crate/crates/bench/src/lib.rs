//! Shared inputs for the criterion benches.

use eqkit::{NCPoly, SymmetrizedCartan};

/// sl2, A2, B2, G2 and the rank-2 matrix with `-2` off the diagonal, by name.
pub fn matrices() -> Vec<(&'static str, SymmetrizedCartan)> {
    [
        ("sl2", vec![vec![2]]),
        ("a2", vec![vec![2, -1], vec![-1, 2]]),
        ("b2", vec![vec![2, -1], vec![-2, 2]]),
        ("g2", vec![vec![2, -1], vec![-3, 2]]),
        ("affine", vec![vec![2, -2], vec![-2, 2]]),
    ]
    .into_iter()
    .map(|(name, rows)| (name, SymmetrizedCartan::from_rows(&rows).expect("valid matrix")))
    .collect()
}

pub fn g2() -> SymmetrizedCartan {
    matrices().remove(3).1
}

/// Parses `text` in the flavor its letters imply.
pub fn expr(text: &str, sc: &SymmetrizedCartan) -> NCPoly {
    eqkit::expr::parse_expression_inferred(text, sc).expect("valid expression").poly
}
