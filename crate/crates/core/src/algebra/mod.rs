//! The free noncommutative algebra over ℚ(q) on the Chevalley and equitable
//! alphabets, its tensor powers, and (anti)homomorphic substitutions.

mod poly;
mod render;
mod tensor;

use std::cmp::Ordering;
use std::fmt;

pub use poly::NCPoly;
pub use tensor::TensorPoly;

use crate::error::{Error, Result};

/// Letter kinds; declaration order is the kind rank used by the term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    F,
    E,
    K,
    Kinv,
    X,
    Xinv,
    Y,
    Z,
}

impl Kind {
    pub fn flavor(self) -> Flavor {
        match self {
            Kind::E | Kind::F | Kind::K | Kind::Kinv => Flavor::Chevalley,
            Kind::X | Kind::Xinv | Kind::Y | Kind::Z => Flavor::Equitable,
        }
    }

    pub fn is_invertible(self) -> bool {
        matches!(self, Kind::K | Kind::Kinv | Kind::X | Kind::Xinv)
    }

    /// `K <-> Kinv`, `X <-> Xinv`; other kinds have no inverse letter.
    pub fn inverse(self) -> Option<Kind> {
        match self {
            Kind::K => Some(Kind::Kinv),
            Kind::Kinv => Some(Kind::K),
            Kind::X => Some(Kind::Xinv),
            Kind::Xinv => Some(Kind::X),
            _ => None,
        }
    }

    /// The letter used in the expression grammar (`Kinv` prints as `K`).
    pub fn symbol(self) -> char {
        match self {
            Kind::E => 'E',
            Kind::F => 'F',
            Kind::K | Kind::Kinv => 'K',
            Kind::X | Kind::Xinv => 'X',
            Kind::Y => 'Y',
            Kind::Z => 'Z',
        }
    }
}

/// Which presentation an alphabet or value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Chevalley,
    Equitable,
}

impl Flavor {
    pub fn kinds(self) -> [Kind; 4] {
        match self {
            Flavor::Chevalley => [Kind::F, Kind::E, Kind::K, Kind::Kinv],
            Flavor::Equitable => [Kind::X, Kind::Xinv, Kind::Y, Kind::Z],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Chevalley => "chevalley",
            Flavor::Equitable => "equitable",
        }
    }

    /// All generators of rank `n`, in term order.
    pub fn alphabet(self, n: usize) -> Vec<Generator> {
        let mut out: Vec<Generator> = self
            .kinds()
            .iter()
            .flat_map(|&kind| (0..n).map(move |index| Generator { kind, index }))
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "chevalley" => Ok(Flavor::Chevalley),
            "equitable" => Ok(Flavor::Equitable),
            other => Err(format!("unknown flavor {other:?}")),
        }
    }
}

/// One letter of the alphabet. `index` is zero-based; it renders one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: Kind,
    pub index: usize,
}

impl Generator {
    pub const fn new(kind: Kind, index: usize) -> Self {
        Generator { kind, index }
    }
    pub const fn e(i: usize) -> Self {
        Self::new(Kind::E, i)
    }
    pub const fn f(i: usize) -> Self {
        Self::new(Kind::F, i)
    }
    pub const fn k(i: usize) -> Self {
        Self::new(Kind::K, i)
    }
    pub const fn kinv(i: usize) -> Self {
        Self::new(Kind::Kinv, i)
    }
    pub const fn x(i: usize) -> Self {
        Self::new(Kind::X, i)
    }
    pub const fn xinv(i: usize) -> Self {
        Self::new(Kind::Xinv, i)
    }
    pub const fn y(i: usize) -> Self {
        Self::new(Kind::Y, i)
    }
    pub const fn z(i: usize) -> Self {
        Self::new(Kind::Z, i)
    }

    pub fn inverse(self) -> Option<Generator> {
        self.kind.inverse().map(|kind| Generator { kind, index: self.index })
    }

    pub fn is_invertible(self) -> bool {
        self.kind.is_invertible()
    }

    /// Exponent contribution of an invertible letter: `+1` or `-1`.
    pub fn laurent_sign(self) -> i64 {
        match self.kind {
            Kind::K | Kind::X => 1,
            Kind::Kinv | Kind::Xinv => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.index + 1)?;
        if matches!(self.kind, Kind::Kinv | Kind::Xinv) {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A monomial of the free algebra; the empty word is the identity.
///
/// Ordered by length first, then lexicographically by letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Generator) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `g^count`
    pub fn power(g: Generator, count: usize) -> Word {
        Word(vec![g; count])
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Images of generators under a substitution.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GeneratorAssignment {
    map: std::collections::BTreeMap<Generator, NCPoly>,
}

impl GeneratorAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, g: Generator, image: NCPoly) {
        self.map.insert(g, image);
    }

    pub fn get(&self, g: Generator) -> Result<&NCPoly> {
        self.map.get(&g).ok_or(Error::UnassignedSymbol(g))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &NCPoly)> {
        self.map.iter()
    }

    /// `g -> image` for the letters of `alphabet` only.
    pub fn restricted(&self, alphabet: &[Generator]) -> Self {
        let map = self
            .map
            .iter()
            .filter(|(g, _)| alphabet.contains(g))
            .map(|(g, p)| (*g, p.clone()))
            .collect();
        GeneratorAssignment { map }
    }
}

impl FromIterator<(Generator, NCPoly)> for GeneratorAssignment {
    fn from_iter<I: IntoIterator<Item = (Generator, NCPoly)>>(iter: I) -> Self {
        GeneratorAssignment { map: iter.into_iter().collect() }
    }
}

/// The algebra-homomorphism extension of `assign`: each word maps to the
/// ordered product of its letters' images, scalars are fixed.
pub fn apply_hom(assign: &GeneratorAssignment, p: &NCPoly) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut image = NCPoly::scalar(c.clone());
        for &g in w.letters() {
            image = &image * assign.get(g)?;
        }
        out += &image;
    }
    Ok(out)
}

/// The antihomomorphism extension: `w_1 ... w_m` maps to
/// `image(w_m) ... image(w_1)`.
pub fn apply_antihom(assign: &GeneratorAssignment, p: &NCPoly) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut image = NCPoly::scalar(c.clone());
        for &g in w.letters().iter().rev() {
            image = &image * assign.get(g)?;
        }
        out += &image;
    }
    Ok(out)
}

/// Product in the k-fold tensor power, legwise concatenation.
pub fn tensor_mul(a: &TensorPoly, b: &TensorPoly) -> Result<TensorPoly> {
    a.mul(b)
}
