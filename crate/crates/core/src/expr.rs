//! The expression grammar shared by the command line and the renderers.
//!
//! ```text
//! expr    := ["-"] term (("+" | "-") term)*
//! term    := factor ("*" factor)*
//! factor  := atom ("^" ["-"] int)?
//! atom    := generator | scalar | "(" expr ")"
//! scalar  := "q" | int ["/" int] | "qint(" int "," int ")" | "qbinom(" int "," int "," int ")"
//! ```
//!
//! Generators are `E1`, `F2`, `K1`, `X3`, ... with 1-based indices. Negative
//! exponents are accepted on `K`, `X`, scalars and parenthesised scalars.
//! The node argument of `qint` and `qbinom` is 1-based and selects `q_i`.

use num_bigint::BigInt;

use crate::algebra::{Flavor, Generator, Kind, NCPoly, Word};
use crate::cartan::SymmetrizedCartan;
use crate::error::{Error, Result};
use crate::qcomb::{q_binom, q_int};
use crate::scalar::{BigRational, RationalFunction};

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedExpression {
    pub source: String,
    pub poly: NCPoly,
    pub flavor: Flavor,
}

/// Parses `text` over the `flavor` alphabet of rank `sc.rank()`.
pub fn parse_expression(text: &str, flavor: Flavor, sc: &SymmetrizedCartan) -> Result<ParsedExpression> {
    let poly = Parser::new(text, flavor, sc)?.parse()?;
    Ok(ParsedExpression { source: text.to_string(), poly, flavor })
}

/// Like [`parse_expression`], taking the flavor from the first generator
/// letter that appears (Chevalley when there is none).
pub fn parse_expression_inferred(text: &str, sc: &SymmetrizedCartan) -> Result<ParsedExpression> {
    let flavor = text
        .chars()
        .find_map(|c| match c {
            'E' | 'F' | 'K' => Some(Flavor::Chevalley),
            'X' | 'Y' | 'Z' => Some(Flavor::Equitable),
            _ => None,
        })
        .unwrap_or(Flavor::Chevalley);
    parse_expression(text, flavor, sc)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Syntax { position: start, expected: "an operator, number, generator or '('".into() });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

enum Atom {
    Letter(Generator),
    Poly(NCPoly),
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    flavor: Flavor,
    sc: &'a SymmetrizedCartan,
}

impl<'a> Parser<'a> {
    fn new(text: &str, flavor: Flavor, sc: &'a SymmetrizedCartan) -> Result<Self> {
        Ok(Parser { toks: lex(text)?, pos: 0, flavor, sc })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), expected: expected.to_string() })
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(expected)
        }
    }

    fn parse(&mut self) -> Result<NCPoly> {
        let p = self.expr()?;
        if *self.peek() != Tok::End {
            return self.fail("'+', '-', '*' or end of input");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<NCPoly> {
        let negate = *self.peek() == Tok::Minus;
        if negate {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail("an integer"),
        }
    }

    fn small_int(&mut self) -> Result<i64> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let at = self.offset();
        let n: i64 = self.int()?.try_into().map_err(|_| Error::Syntax { position: at, expected: "a small integer".into() })?;
        Ok(if negative { -n } else { n })
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let atom = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(match atom {
                Atom::Letter(g) => NCPoly::generator(g),
                Atom::Poly(p) => p,
            });
        }
        self.bump();
        let at = self.offset();
        let e = self.small_int()?;
        let bad = |expected: &str| Error::Syntax { position: at, expected: expected.to_string() };
        match atom {
            Atom::Letter(g) if e >= 0 => Ok(NCPoly::word(Word::power(g, e as usize))),
            Atom::Letter(g) => match g.inverse() {
                Some(inv) => Ok(NCPoly::word(Word::power(inv, e.unsigned_abs() as usize))),
                None => Err(bad("a nonnegative exponent (negative powers exist only for K and X)")),
            },
            Atom::Poly(p) if e >= 0 => Ok(p.pow(e as u32)),
            Atom::Poly(p) => match p.as_scalar() {
                Some(c) => Ok(NCPoly::scalar(c.pow(e)?)),
                None => Err(bad("a nonnegative exponent (negative powers of non-scalars are undefined)")),
            },
        }
    }

    fn node(&mut self) -> Result<crate::qcomb::QIndex> {
        let at = self.offset();
        let i = self.small_int()?;
        if i < 1 || i as usize > self.sc.rank() {
            return Err(Error::Syntax { position: at, expected: format!("a node index in 1..={}", self.sc.rank()) });
        }
        Ok(self.sc.qindex(i as usize - 1))
    }

    fn atom(&mut self) -> Result<Atom> {
        let at = self.offset();
        if matches!(self.peek(), Tok::End | Tok::Plus | Tok::Minus | Tok::Star | Tok::Caret | Tok::Slash | Tok::Comma | Tok::RParen) {
            return self.fail("a generator, scalar or '('");
        }
        match self.bump() {
            Tok::LParen => {
                let p = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Atom::Poly(p))
            }
            Tok::Int(n) => {
                let mut value = BigRational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let at = self.offset();
                    let d = self.int()?;
                    if d == BigInt::from(0) {
                        return Err(Error::Syntax { position: at, expected: "a nonzero denominator".into() });
                    }
                    value /= BigRational::from_integer(d);
                }
                Ok(Atom::Poly(NCPoly::scalar(RationalFunction::from_rational(value))))
            }
            Tok::Ident(name) => self.ident(&name, at),
            _ => unreachable!("operators are rejected above"),
        }
    }

    fn ident(&mut self, name: &str, at: usize) -> Result<Atom> {
        match name {
            "q" => return Ok(Atom::Poly(NCPoly::scalar(RationalFunction::q()))),
            "qint" => {
                self.expect(Tok::LParen, "'('")?;
                let m = self.small_int()?;
                self.expect(Tok::Comma, "','")?;
                let i = self.node()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Atom::Poly(NCPoly::scalar(q_int(m, i))));
            }
            "qbinom" => {
                self.expect(Tok::LParen, "'('")?;
                let m_at = self.offset();
                let m = self.small_int()?;
                let m: u32 = m
                    .try_into()
                    .map_err(|_| Error::Syntax { position: m_at, expected: "a nonnegative integer".into() })?;
                self.expect(Tok::Comma, "','")?;
                let r = self.small_int()?;
                self.expect(Tok::Comma, "','")?;
                let i = self.node()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Atom::Poly(NCPoly::scalar(q_binom(m, r, i))));
            }
            _ => {}
        }
        let mut chars = name.chars();
        let letter = chars.next().expect("identifiers are nonempty");
        let digits = chars.as_str();
        let kind = match letter {
            'E' => Kind::E,
            'F' => Kind::F,
            'K' => Kind::K,
            'X' => Kind::X,
            'Y' => Kind::Y,
            'Z' => Kind::Z,
            _ => return Err(Error::Syntax { position: at, expected: "a generator, scalar or '('".into() }),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Syntax { position: at, expected: "a generator index after the letter".into() });
        }
        if kind.flavor() != self.flavor {
            return Err(Error::FlavorMismatch { name: name.to_string(), flavor: self.flavor.name() });
        }
        let rank = self.sc.rank();
        match digits.parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(Atom::Letter(Generator::new(kind, i - 1))),
            _ => Err(Error::UnknownGenerator { name: name.to_string(), rank }),
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::testutil::{self, cartan};

    fn sl2() -> SymmetrizedCartan {
        cartan(&[&[2]])
    }

    fn a2() -> SymmetrizedCartan {
        cartan(&[&[2, -1], &[-1, 2]])
    }

    fn chev(text: &str) -> Result<NCPoly> {
        parse_expression(text, Flavor::Chevalley, &a2()).map(|p| p.poly)
    }

    fn g(x: Generator) -> NCPoly {
        NCPoly::generator(x)
    }

    #[test]
    fn two_term_expression() {
        let p = chev("K1*E1 - q^2*E1*K1").unwrap();
        let expected = &(&g(Generator::k(0)) * &g(Generator::e(0)))
            - &(&g(Generator::e(0)) * &g(Generator::k(0))).scale(&RationalFunction::q_pow(2));
        assert_eq!(p, expected);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn f_image_under_psi() {
        let sc = sl2();
        let p = parse_expression("(q - q^-1)^-1 * (Y1 - X1^-1)", Flavor::Equitable, &sc).unwrap().poly;
        let c = (&RationalFunction::q() - &RationalFunction::q_pow(-1)).inv().unwrap();
        let expected = (&g(Generator::y(0)) - &g(Generator::xinv(0))).scale(&c);
        assert_eq!(p, expected);
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(chev("E3"), Err(Error::UnknownGenerator { name: "E3".into(), rank: 2 }));
        assert_eq!(chev("E0"), Err(Error::UnknownGenerator { name: "E0".into(), rank: 2 }));
    }

    #[test]
    fn letters_of_the_other_flavor() {
        assert_eq!(chev("Y1"), Err(Error::FlavorMismatch { name: "Y1".into(), flavor: "chevalley" }));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(chev("E1 +"), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(chev("(E1"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(chev("E1 E2"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(chev("E1^-1"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(chev("(E1 + 1)^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(chev("1/0"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(chev("E1 # 2"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(chev("W1"), Err(Error::Syntax { position: 0, .. })));
    }

    #[test]
    fn negative_powers_of_laurent_letters() {
        let p = chev("K1^-2*K2").unwrap();
        assert_eq!(p, NCPoly::word(Word(vec![Generator::kinv(0), Generator::kinv(0), Generator::k(1)])));
        assert_eq!(chev("K1^0").unwrap(), NCPoly::one());
    }

    #[test]
    fn scalar_literals() {
        let sc = cartan(&[&[2, -1], &[-2, 2]]);
        let p = parse_expression("qint(2,1) - qbinom(2,1,2) + 3/6", Flavor::Chevalley, &sc).unwrap().poly;
        let expected = &(&q_int(2, sc.qindex(0)) - &q_binom(2, 1, sc.qindex(1)))
            + &RationalFunction::from_rational(crate::scalar::ratio(1, 2));
        assert_eq!(p.as_scalar().unwrap(), expected);
        assert!(matches!(parse_expression("qint(2,3)", Flavor::Chevalley, &sc), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unary_minus_at_the_start_of_a_group() {
        assert_eq!(chev("-E1").unwrap(), -g(Generator::e(0)));
        assert_eq!(chev("(-q + 1)*E1").unwrap(), g(Generator::e(0)).scale(&(&RationalFunction::one() - &RationalFunction::q())));
    }

    #[test]
    fn inferred_flavor() {
        assert_eq!(parse_expression_inferred("2*Y1", &sl2()).unwrap().flavor, Flavor::Equitable);
        assert_eq!(parse_expression_inferred("q", &sl2()).unwrap().flavor, Flavor::Chevalley);
    }

    #[test]
    fn rendered_fractions_parse_back() {
        let c = RationalFunction::normalize(
            &crate::scalar::LaurentPoly::from_terms([(0, 1), (1, 1)]),
            &crate::scalar::LaurentPoly::from_terms([(0, 1), (2, 1)]),
        )
        .unwrap();
        let p = g(Generator::e(0)).scale(&c);
        assert_eq!(chev(&p.to_string()).unwrap(), p);
        assert_eq!(chev(&(-&p).to_string()).unwrap(), -&p);
    }

    proptest! {
        #[test]
        fn render_then_parse_chevalley(p in testutil::ncpoly(Flavor::Chevalley, 2)) {
            prop_assert_eq!(chev(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn render_then_parse_equitable(p in testutil::ncpoly(Flavor::Equitable, 2)) {
            let back = parse_expression(&p.to_string(), Flavor::Equitable, &a2()).unwrap().poly;
            prop_assert_eq!(back, p);
        }
    }
}
