//! Generalized Cartan matrices and their symmetrizers.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcomb::QIndex;
use crate::scalar::RationalFunction;

/// A validated generalized Cartan matrix: `A_ii = 2`, `A_ij <= 0` off the
/// diagonal, and `A_ij = 0` exactly when `A_ji = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gcm {
    n: usize,
    entries: Vec<i64>,
}

impl Gcm {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// `A_ij`, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// Smallest off-diagonal entry, `0` in rank one.
    pub fn min_off_diagonal(&self) -> i64 {
        (0..self.n)
            .flat_map(|i| (0..self.n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j))
            .min()
            .unwrap_or(0)
    }
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn validate_gcm(n: usize, entries: &[Vec<i64>]) -> Result<Gcm> {
    if n == 0 || entries.len() != n || entries.iter().any(|r| r.len() != n) {
        return Err(Error::BadShape { n });
    }
    for (i, row) in entries.iter().enumerate() {
        if row[i] != 2 {
            return Err(Error::BadDiagonal { i, value: row[i] });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = entries[i][j];
            if a > 0 {
                return Err(Error::PositiveOffDiagonal { i, j, value: a });
            }
            if (a == 0) != (entries[j][i] == 0) {
                return Err(Error::AsymmetricZero { i, j });
            }
        }
    }
    Ok(Gcm { n, entries: entries.concat() })
}

/// A GCM together with coprime positive `d` satisfying `d_i A_ij = d_j A_ji`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetrizedCartan {
    gcm: Gcm,
    d: Vec<u32>,
}

impl SymmetrizedCartan {
    /// Validates and symmetrizes in one step.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        compute_symmetrizer(validate_gcm(rows.len(), rows)?)
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.n
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm.entry(i, j)
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn qindex(&self, i: usize) -> QIndex {
        QIndex::new(i, self.d[i])
    }

    /// `q_i^k`
    pub fn q_pow(&self, i: usize, k: i64) -> RationalFunction {
        self.qindex(i).q_pow(k)
    }

    /// `q_i^{A_ij}`
    pub fn q_a(&self, i: usize, j: usize) -> RationalFunction {
        self.q_pow(i, self.a(i, j))
    }

    /// Index pairs `i != j`.
    pub fn off_diagonal_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
    }

    pub fn all_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
    }
}

impl fmt::Display for SymmetrizedCartan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(u32::to_string).collect();
        write!(f, "{} d=({})", self.gcm, d.join(","))
    }
}

/// Solves `d_i A_ij = d_j A_ji` by propagating ratios along the nonzero
/// pattern of `A`, one connected component at a time.
///
/// Each component is scaled to the smallest positive integer vector, so the
/// result is deterministic and globally coprime.
pub fn compute_symmetrizer(gcm: Gcm) -> Result<SymmetrizedCartan> {
    let n = gcm.n;
    let mut ratio: Vec<Option<Rational64>> = vec![None; n];
    let mut d = vec![0u32; n];
    for root in 0..n {
        if ratio[root].is_some() {
            continue;
        }
        ratio[root] = Some(Rational64::one());
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = ratio[i].expect("visited");
            for j in 0..n {
                let (aij, aji) = (gcm.entry(i, j), gcm.entry(j, i));
                if j == i || aij == 0 {
                    continue;
                }
                // d_j = d_i * A_ij / A_ji
                let dj = di * Rational64::new(aij, aji);
                match ratio[j] {
                    None => {
                        ratio[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotSymmetrizable { i, j });
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i64, |acc, &k| acc.lcm(ratio[k].expect("visited").denom()));
        let ints: Vec<i64> = component
            .iter()
            .map(|&k| (ratio[k].expect("visited") * lcm).to_integer())
            .collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        debug_assert!(!g.is_zero());
        for (&k, &x) in component.iter().zip(&ints) {
            d[k] = u32::try_from(x / g).expect("symmetrizer fits in u32");
        }
    }
    Ok(SymmetrizedCartan { gcm, d })
}

/// Parses the Cartan file format: the rank on the first data line, then one
/// whitespace-separated row per line; `#` lines are comments.
pub fn parse_cartan_file(text: &str) -> Result<Gcm> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(Error::CartanFormat {
        line: 1,
        message: "missing rank".into(),
    })?;
    let n: usize = first.parse().map_err(|_| Error::CartanFormat {
        line,
        message: format!("invalid rank {first:?}"),
    })?;
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        let row = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| Error::CartanFormat {
                    line,
                    message: format!("invalid integer {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::CartanFormat {
                line,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::CartanFormat {
            line: text.lines().count(),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    validate_gcm(n, &rows)
}

/// Renders a GCM in the Cartan file format.
pub fn render_cartan_file(gcm: &Gcm) -> String {
    let mut out = format!("{}\n", gcm.rank());
    for row in gcm.rows() {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(rows: &[&[i64]]) -> Result<SymmetrizedCartan> {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        SymmetrizedCartan::from_rows(&rows)
    }

    #[test]
    fn validation_examples() {
        assert!(validate_gcm(1, &[vec![2]]).is_ok());
        assert!(validate_gcm(2, &[vec![2, -1], vec![-3, 2]]).is_ok());
        assert_eq!(
            validate_gcm(2, &[vec![2, -1], vec![0, 2]]),
            Err(Error::AsymmetricZero { i: 0, j: 1 })
        );
        assert_eq!(validate_gcm(1, &[vec![3]]), Err(Error::BadDiagonal { i: 0, value: 3 }));
        assert!(matches!(
            validate_gcm(2, &[vec![2, 1], vec![1, 2]]),
            Err(Error::PositiveOffDiagonal { .. })
        ));
        assert_eq!(validate_gcm(2, &[vec![2, -1]]), Err(Error::BadShape { n: 2 }));
    }

    #[test]
    fn symmetrizer_examples() {
        assert_eq!(sym(&[&[2]]).unwrap().d(), &[1]);
        assert_eq!(sym(&[&[2, -1], &[-2, 2]]).unwrap().d(), &[2, 1]);
        assert_eq!(sym(&[&[2, -1], &[-3, 2]]).unwrap().d(), &[3, 1]);
        assert_eq!(sym(&[&[2, -2], &[-2, 2]]).unwrap().d(), &[1, 1]);
        assert_eq!(sym(&[&[2, -2], &[-1, 2]]).unwrap().d(), &[1, 2]);
    }

    #[test]
    fn disconnected_components_scale_independently() {
        let s = sym(&[&[2, -1, 0], &[-2, 2, 0], &[0, 0, 2]]).unwrap();
        assert_eq!(s.d(), &[2, 1, 1]);
    }

    #[test]
    fn inconsistent_cycle_is_rejected() {
        let r = sym(&[&[2, -1, -1], &[-2, 2, -1], &[-1, -1, 2]]);
        assert!(matches!(r, Err(Error::NotSymmetrizable { .. })));
    }

    #[test]
    fn symmetrized_powers_agree() {
        for rows in [
            vec![vec![2, -1], vec![-3, 2]],
            vec![vec![2, -1], vec![-2, 2]],
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
        ] {
            let s = SymmetrizedCartan::from_rows(&rows).unwrap();
            for (i, j) in s.all_pairs() {
                assert_eq!(s.q_a(i, j), s.q_a(j, i));
                assert_eq!(s.d()[i] as i64 * s.a(i, j), s.d()[j] as i64 * s.a(j, i));
            }
        }
    }

    #[test]
    fn permuting_indices_permutes_d() {
        let s = sym(&[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]]).unwrap();
        let perm = [2, 0, 1];
        let rows: Vec<Vec<i64>> =
            (0..3).map(|i| (0..3).map(|j| s.a(perm[i], perm[j])).collect()).collect();
        let p = SymmetrizedCartan::from_rows(&rows).unwrap();
        for i in 0..3 {
            assert_eq!(p.d()[i], s.d()[perm[i]]);
        }
    }

    #[test]
    fn cartan_file_round_trip_and_comments() {
        let text = "# G2\n2\n2 -1\n-3 2\n";
        let g = parse_cartan_file(text).unwrap();
        assert_eq!(g.entry(1, 0), -3);
        assert_eq!(parse_cartan_file(&render_cartan_file(&g)).unwrap(), g);
        assert!(matches!(parse_cartan_file("2\n2 -1\n"), Err(Error::CartanFormat { .. })));
        assert!(matches!(parse_cartan_file("1\nx\n"), Err(Error::CartanFormat { line: 2, .. })));
        assert_eq!(parse_cartan_file("2\n2 -1\n0 2\n"), Err(Error::AsymmetricZero { i: 0, j: 1 }));
    }
}
