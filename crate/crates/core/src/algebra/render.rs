use std::fmt;

use num_traits::Signed;

use super::{Generator, Kind, NCPoly, Word};
use crate::scalar::RationalFunction;

impl Word {
    fn runs(&self) -> Vec<(Generator, usize)> {
        let mut runs: Vec<(Generator, usize)> = Vec::new();
        for &g in self.letters() {
            match runs.last_mut() {
                Some((h, n)) if *h == g => *n += 1,
                _ => runs.push((g, 1)),
            }
        }
        runs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, n)) in self.runs().into_iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}{}", g.kind.symbol(), g.index + 1)?;
            let inverse = matches!(g.kind, Kind::Kinv | Kind::Xinv);
            match (inverse, n) {
                (false, 1) => {}
                (false, n) => write!(f, "^{n}")?,
                (true, n) => write!(f, "^-{n}")?,
            }
        }
        Ok(())
    }
}

/// Splits a coefficient into a sign and an unsigned rendering; coefficients
/// that are not a single monomial are parenthesised and keep their sign inside.
fn coefficient_parts(c: &RationalFunction) -> (bool, Option<String>) {
    if let Some(l) = c.as_laurent() {
        if l.is_monomial() {
            let (e, a) = l.terms().next().expect("monomial has a term");
            let negative = a.is_negative();
            let abs = RationalFunction::from_laurent(&crate::scalar::LaurentPoly::monomial(e, a.abs()));
            let body = if abs.is_one() { None } else { Some(abs.to_string()) };
            return (negative, body);
        }
    }
    (false, Some(format!("({c})")))
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            let (negative, coeff) = coefficient_parts(c);
            let body = match (coeff, w.is_empty()) {
                (None, true) => "1".to_string(),
                (None, false) => w.to_string(),
                (Some(c), true) => c,
                (Some(c), false) => format!("{c}*{w}"),
            };
            match (k, negative) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{self}]")
    }
}
