use super::{Derivation, PresentationSpec, Relation, RelatorKind, RewriteRule, SerreRelator};
use crate::algebra::{Flavor, Generator, Kind, NCPoly, Word};
use crate::cartan::SymmetrizedCartan;
use crate::qcomb::{q_binom, serre_rhs_product, sign};
use crate::scalar::RationalFunction;

fn one() -> RationalFunction {
    RationalFunction::one()
}

fn word(gs: &[Generator]) -> Word {
    Word(gs.to_vec())
}

fn mono(c: RationalFunction, gs: &[Generator]) -> NCPoly {
    NCPoly::term(word(gs), c)
}

fn rel(name: String, poly: NCPoly) -> Relation {
    Relation { name, poly }
}

fn deriv(relation: String, scale: RationalFunction, left: &[Generator], right: &[Generator]) -> Derivation {
    Derivation { relation, scale, left: word(left), right: word(right) }
}

fn rule(a: Generator, b: Generator, rhs: NCPoly, derivation: Derivation) -> RewriteRule {
    RewriteRule { lhs: (a, b), rhs, derivation }
}

/// `1 - c`
fn one_minus(c: &RationalFunction) -> RationalFunction {
    &one() - c
}

/// `sum_r (-1)^r [m over r]_i a^{m-r} b a^r` with `m = 1 - A_ij`.
pub(crate) fn serre_sum(sc: &SymmetrizedCartan, i: usize, j: usize, a: &NCPoly, b: &NCPoly) -> NCPoly {
    let m = (1 - sc.a(i, j)) as u32;
    let mut out = NCPoly::zero();
    for r in 0..=m {
        let c = &sign(r as i64) * &q_binom(m, r as i64, sc.qindex(i));
        let t = &(&a.pow(m - r) * b) * &a.pow(r);
        out += &t.scale(&c);
    }
    out
}

/// Relations that let two commuting Laurent letters be sorted and cancelled.
fn laurent_relations(out: &mut Vec<Relation>, n: usize, tag: &str, pos: Kind, neg: Kind) {
    for i in 0..n {
        let (p, m) = (Generator::new(pos, i), Generator::new(neg, i));
        out.push(rel(format!("{tag}1.a[{}]", i + 1), &mono(one(), &[p, m]) - &NCPoly::one()));
        out.push(rel(format!("{tag}1.b[{}]", i + 1), &mono(one(), &[m, p]) - &NCPoly::one()));
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (Generator::new(pos, i), Generator::new(pos, j));
            out.push(rel(format!("{tag}2[{},{}]", i + 1, j + 1), &mono(one(), &[a, b]) - &mono(one(), &[b, a])));
        }
    }
}

fn laurent_rules(out: &mut Vec<RewriteRule>, n: usize, tag: &str, pos: Kind, neg: Kind) {
    for i in 0..n {
        let (p, m) = (Generator::new(pos, i), Generator::new(neg, i));
        let id = i + 1;
        out.push(rule(p, m, NCPoly::one(), deriv(format!("{tag}1.a[{id}]"), one(), &[], &[])));
        out.push(rule(m, p, NCPoly::one(), deriv(format!("{tag}1.b[{id}]"), one(), &[], &[])));
    }
    // a_i b_j -> b_j a_i for i > j, from a rotated copy of the commutation relation
    for i in 0..n {
        for j in 0..i {
            let name = format!("{tag}2[{},{}]", j + 1, i + 1);
            let (pi, mi, pj, mj) =
                (Generator::new(pos, i), Generator::new(neg, i), Generator::new(pos, j), Generator::new(neg, j));
            let minus = -one();
            out.push(rule(pi, pj, mono(one(), &[pj, pi]), deriv(name.clone(), minus.clone(), &[], &[])));
            out.push(rule(pi, mj, mono(one(), &[mj, pi]), deriv(name.clone(), one(), &[mj], &[mj])));
            out.push(rule(mi, pj, mono(one(), &[pj, mi]), deriv(name.clone(), one(), &[mi], &[mi])));
            out.push(rule(mi, mj, mono(one(), &[mj, mi]), deriv(name, minus, &[mi, mj], &[mj, mi])));
        }
    }
}

/// (R1)-(R7) as `lhs - rhs`.
pub fn chevalley_relations(sc: &SymmetrizedCartan) -> Vec<Relation> {
    let n = sc.rank();
    let mut out = Vec::new();
    laurent_relations(&mut out, n, "R", Kind::K, Kind::Kinv);
    for (i, j) in sc.all_pairs() {
        let (k, ki) = (Generator::k(i), Generator::kinv(i));
        let id = format!("[{},{}]", i + 1, j + 1);
        out.push(rel(
            format!("R3{id}"),
            &mono(one(), &[k, Generator::e(j), ki]) - &mono(sc.q_a(i, j), &[Generator::e(j)]),
        ));
        out.push(rel(
            format!("R4{id}"),
            &mono(one(), &[k, Generator::f(j), ki]) - &mono(sc.q_pow(i, -sc.a(i, j)), &[Generator::f(j)]),
        ));
    }
    for (i, j) in sc.all_pairs() {
        let (e, f) = (Generator::e(i), Generator::f(j));
        let mut p = &mono(one(), &[e, f]) - &mono(one(), &[f, e]);
        if i == j {
            p -= &k_correction(sc, i);
        }
        out.push(rel(format!("R5[{},{}]", i + 1, j + 1), p));
    }
    for (i, j) in sc.off_diagonal_pairs() {
        let id = format!("[{},{}]", i + 1, j + 1);
        let (ei, ej) = (NCPoly::generator(Generator::e(i)), NCPoly::generator(Generator::e(j)));
        out.push(rel(format!("R6{id}"), serre_sum(sc, i, j, &ei, &ej)));
        let (fi, fj) = (NCPoly::generator(Generator::f(i)), NCPoly::generator(Generator::f(j)));
        out.push(rel(format!("R7{id}"), serre_sum(sc, i, j, &fi, &fj)));
    }
    out
}

/// `(K_i - K_i^-1) / (q_i - q_i^-1)`
pub(crate) fn k_correction(sc: &SymmetrizedCartan, i: usize) -> NCPoly {
    let c = sc.qindex(i).q_diff().inv().expect("q_i - q_i^-1 is nonzero");
    (&mono(one(), &[Generator::k(i)]) - &mono(one(), &[Generator::kinv(i)])).scale(&c)
}

/// `X_i^{A_ij - 1} X_j^{-1} prod_{s=0}^{-A_ij} (1 - q_i^{A_ij + 2s})`
pub(crate) fn equitable_serre_rhs(sc: &SymmetrizedCartan, i: usize, j: usize) -> NCPoly {
    let a = sc.a(i, j);
    let c = serre_rhs_product(a, sc.qindex(i)).expect("off-diagonal entries are nonpositive");
    let mut letters = vec![Generator::xinv(i); (1 - a) as usize];
    letters.push(Generator::xinv(j));
    NCPoly::term(Word(letters), c)
}

/// (E1)-(E8) as `lhs - rhs`.
pub fn equitable_relations(sc: &SymmetrizedCartan) -> Vec<Relation> {
    let n = sc.rank();
    let mut out = Vec::new();
    laurent_relations(&mut out, n, "E", Kind::X, Kind::Xinv);
    for (i, j) in sc.all_pairs() {
        let qa = sc.q_a(i, j);
        let id = format!("[{},{}]", i + 1, j + 1);
        let (x, xi, y, z) = (Generator::x, Generator::xinv, Generator::y, Generator::z);
        out.push(rel(
            format!("E3{id}"),
            &(&mono(one(), &[y(i), x(j)]) - &mono(qa.clone(), &[x(j), y(i)]))
                - &mono(one_minus(&qa), &[xi(i), x(j)]),
        ));
        out.push(rel(
            format!("E4{id}"),
            &(&mono(one(), &[x(i), z(j)]) - &mono(qa.clone(), &[z(j), x(i)]))
                - &mono(one_minus(&qa), &[x(i), xi(j)]),
        ));
    }
    for i in 0..n {
        let q2 = sc.q_pow(i, 2);
        let (y, z) = (Generator::y(i), Generator::z(i));
        out.push(rel(
            format!("E5[{}]", i + 1),
            &(&mono(one(), &[z, y]) - &mono(q2.clone(), &[y, z])) - &NCPoly::scalar(one_minus(&q2)),
        ));
    }
    for (i, j) in sc.off_diagonal_pairs() {
        let qa = sc.q_a(i, j);
        out.push(rel(
            format!("E6[{},{}]", i + 1, j + 1),
            &(&mono(one(), &[Generator::z(i), Generator::y(j)]) - &mono(qa.clone(), &[Generator::y(j), Generator::z(i)]))
                - &mono(one_minus(&qa), &[Generator::xinv(i), Generator::xinv(j)]),
        ));
    }
    for (i, j) in sc.off_diagonal_pairs() {
        let id = format!("[{},{}]", i + 1, j + 1);
        let rhs = equitable_serre_rhs(sc, i, j);
        let (yi, yj) = (NCPoly::generator(Generator::y(i)), NCPoly::generator(Generator::y(j)));
        out.push(rel(format!("E7{id}"), &serre_sum(sc, i, j, &yi, &yj) - &rhs));
        let (zi, zj) = (NCPoly::generator(Generator::z(i)), NCPoly::generator(Generator::z(j)));
        out.push(rel(format!("E8{id}"), &serre_sum(sc, i, j, &zi, &zj) - &rhs));
    }
    out
}

pub(crate) fn chevalley_rules(sc: &SymmetrizedCartan) -> Vec<RewriteRule> {
    let n = sc.rank();
    let mut out = Vec::new();
    laurent_rules(&mut out, n, "R", Kind::K, Kind::Kinv);
    for (i, j) in sc.all_pairs() {
        let id = format!("[{},{}]", i + 1, j + 1);
        let (k, ki) = (Generator::k(i), Generator::kinv(i));
        let (up, down) = (sc.q_a(i, j), sc.q_pow(i, -sc.a(i, j)));
        let (e, f) = (Generator::e(j), Generator::f(j));
        out.push(rule(k, e, mono(up.clone(), &[e, k]), deriv(format!("R3{id}"), one(), &[], &[k])));
        out.push(rule(ki, e, mono(down.clone(), &[e, ki]), deriv(format!("R3{id}"), -&down, &[ki], &[])));
        out.push(rule(k, f, mono(down.clone(), &[f, k]), deriv(format!("R4{id}"), one(), &[], &[k])));
        out.push(rule(ki, f, mono(up.clone(), &[f, ki]), deriv(format!("R4{id}"), -&up, &[ki], &[])));
    }
    for (i, j) in sc.all_pairs() {
        let (e, f) = (Generator::e(i), Generator::f(j));
        let mut rhs = mono(one(), &[f, e]);
        if i == j {
            rhs += &k_correction(sc, i);
        }
        out.push(rule(e, f, rhs, deriv(format!("R5[{},{}]", i + 1, j + 1), one(), &[], &[])));
    }
    out
}

pub(crate) fn equitable_rules(sc: &SymmetrizedCartan) -> Vec<RewriteRule> {
    let n = sc.rank();
    let mut out = Vec::new();
    laurent_rules(&mut out, n, "E", Kind::X, Kind::Xinv);
    let (x, xi, y, z) = (Generator::x, Generator::xinv, Generator::y, Generator::z);
    for (i, j) in sc.all_pairs() {
        let id = format!("[{},{}]", i + 1, j + 1);
        let qa = sc.q_a(i, j);
        let qma = sc.q_pow(i, -sc.a(i, j));
        let c = one_minus(&qa);
        // Y_i past X_j^{+-1}
        out.push(rule(
            y(i),
            x(j),
            &mono(qa.clone(), &[x(j), y(i)]) + &mono(c.clone(), &[xi(i), x(j)]),
            deriv(format!("E3{id}"), one(), &[], &[]),
        ));
        out.push(rule(
            y(i),
            xi(j),
            &mono(qma.clone(), &[xi(j), y(i)]) - &mono(&qma * &c, &[xi(j), xi(i)]),
            deriv(format!("E3{id}"), -&qma, &[xi(j)], &[xi(j)]),
        ));
        // Z_j past X_i^{+-1}
        out.push(rule(
            z(j),
            x(i),
            &mono(qma.clone(), &[x(i), z(j)]) - &mono(&qma * &c, &[x(i), xi(j)]),
            deriv(format!("E4{id}"), -&qma, &[], &[]),
        ));
        out.push(rule(
            z(j),
            xi(i),
            &mono(qa.clone(), &[xi(i), z(j)]) + &mono(c, &[xi(j), xi(i)]),
            deriv(format!("E4{id}"), one(), &[xi(i)], &[xi(i)]),
        ));
    }
    for i in 0..n {
        let q2 = sc.q_pow(i, 2);
        out.push(rule(
            z(i),
            y(i),
            &mono(q2.clone(), &[y(i), z(i)]) + &NCPoly::scalar(one_minus(&q2)),
            deriv(format!("E5[{}]", i + 1), one(), &[], &[]),
        ));
    }
    for (i, j) in sc.off_diagonal_pairs() {
        let qa = sc.q_a(i, j);
        out.push(rule(
            z(i),
            y(j),
            &mono(qa.clone(), &[y(j), z(i)]) + &mono(one_minus(&qa), &[xi(i), xi(j)]),
            deriv(format!("E6[{},{}]", i + 1, j + 1), one(), &[], &[]),
        ));
    }
    out
}

pub(crate) fn serre_relators(spec: &PresentationSpec) -> Vec<SerreRelator> {
    let sc = spec.cartan();
    let mut out = Vec::new();
    let kinds: [(RelatorKind, &str, Kind); 2] = match spec.flavor() {
        Flavor::Chevalley => [(RelatorKind::ChevalleyE, "R6", Kind::E), (RelatorKind::ChevalleyF, "R7", Kind::F)],
        Flavor::Equitable => [(RelatorKind::EquitableY, "E7", Kind::Y), (RelatorKind::EquitableZ, "E8", Kind::Z)],
    };
    for (i, j) in sc.off_diagonal_pairs() {
        for &(kind, tag, letter) in &kinds {
            let name = format!("{tag}[{},{}]", i + 1, j + 1);
            let raw = &spec.relation(&name).expect("Serre relation is registered").poly;
            let relator = spec.normal_form(raw).expect("relators reduce within budget");
            let m = (1 - sc.a(i, j)) as usize;
            let signature = [(Generator::new(letter, i), m), (Generator::new(letter, j), 1)].into_iter().collect();
            out.push(SerreRelator { name, kind, i, j, relator, signature });
        }
    }
    out
}
