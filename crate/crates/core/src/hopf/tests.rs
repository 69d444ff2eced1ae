use super::*;
use crate::presentation::{chevalley_presentation, equitable_presentation};
use crate::report::CheckStatus;
use crate::testutil::{cartan, test_matrices};

fn g(x: Generator) -> NCPoly {
    NCPoly::generator(x)
}

fn w(xs: &[Generator]) -> NCPoly {
    NCPoly::word(Word(xs.to_vec()))
}

fn sl2() -> SymmetrizedCartan {
    cartan(&[&[2]])
}

fn chev(sc: &SymmetrizedCartan) -> HopfData {
    HopfData::chevalley(sc)
}

fn equi(sc: &SymmetrizedCartan) -> HopfData {
    HopfData::standard(Arc::new(equitable_presentation(sc)))
}

fn x_pow(i: usize, k: i64) -> NCPoly {
    let letter = if k >= 0 { Generator::x(i) } else { Generator::xinv(i) };
    NCPoly::word(Word::power(letter, k.unsigned_abs() as usize))
}

#[test]
fn delta_examples() {
    let h = chev(&sl2());
    let (k, ki, f) = (g(Generator::k(0)), g(Generator::kinv(0)), g(Generator::f(0)));
    assert_eq!(h.delta(&k, 2).unwrap(), t2(k.clone(), k.clone()));
    assert_eq!(h.delta(&f, 2).unwrap(), t2(f.clone(), ki).add(&t2(NCPoly::one(), f)).unwrap());
    assert_eq!(h.delta(&NCPoly::one(), 2).unwrap(), TensorPoly::one(2));
    assert_eq!(h.delta(&k, 3).unwrap(), TensorPoly::pure(&[k.clone(), k.clone(), k]));
    assert!(h.delta(&NCPoly::one(), 4).is_err());
}

#[test]
fn delta_reports_missing_images() {
    let mut h = chev(&sl2());
    h.delta.remove(&Generator::e(0));
    assert_eq!(h.delta(&g(Generator::e(0)), 2), Err(Error::UnassignedSymbol(Generator::e(0))));
}

#[test]
fn counit_examples() {
    let sc = sl2();
    assert!(chev(&sc).counit(&g(Generator::e(0))).unwrap().is_zero());
    assert!(equi(&sc).counit(&g(Generator::x(0))).unwrap().is_one());
    let c = RationalFunction::q_pow(3);
    assert_eq!(chev(&sc).counit(&NCPoly::scalar(c.clone())).unwrap(), c);
}

#[test]
fn antipode_examples() {
    let h = chev(&sl2());
    assert_eq!(h.antipode(&g(Generator::k(0))).unwrap(), g(Generator::kinv(0)));
    let ef = w(&[Generator::e(0), Generator::f(0)]);
    assert_eq!(h.antipode(&ef).unwrap(), w(&[Generator::f(0), Generator::e(0)]));
    assert_eq!(h.antipode(&NCPoly::one()).unwrap(), NCPoly::one());
}

#[test]
fn axioms_hold_on_both_presentations() {
    for sc in test_matrices() {
        for h in [chev(&sc), equi(&sc)] {
            let r = h.check_hopf_axioms();
            let bad: Vec<_> = r.failures().map(|e| e.name.clone()).collect();
            assert!(bad.is_empty(), "{sc} {}: {bad:?}", h.presentation().flavor());
            assert_eq!(r.counts().total, 5 * h.presentation().alphabet().len());
        }
    }
}

#[test]
fn corrupted_k_coproduct_is_caught() {
    let mut h = chev(&sl2());
    let k = g(Generator::k(0));
    h.set_delta(Generator::k(0), t2(k, NCPoly::one()));
    let r = h.check_hopf_axioms();
    assert!(r.entries().iter().any(|e| e.name.starts_with("counit") && e.status == CheckStatus::Fail));
}

#[test]
fn every_single_corruption_is_caught() {
    for sc in [sl2(), cartan(&[&[2, -1], &[-1, 2]])] {
        for base in [chev(&sc), equi(&sc)] {
            for x in base.presentation().alphabet() {
                let mut d = base.clone();
                let bumped = d.delta[&x].add(&TensorPoly::one(2)).unwrap();
                d.set_delta(x, bumped);
                let mut c = base.clone();
                c.set_counit(x, &c.counit[&x] + &RationalFunction::one());
                let mut s = base.clone();
                s.set_antipode(x, s.antipode.get(x).unwrap() + &NCPoly::one());
                for corrupted in [d, c, s] {
                    assert!(!corrupted.check_hopf_axioms().all_pass(), "{sc} {x}");
                }
            }
        }
    }
}

#[test]
fn equitable_formulas_match_the_chevalley_structure() {
    for sc in test_matrices() {
        let r = equitable_hopf_formula_check(&sc);
        let bad: Vec<_> = r.failures().map(|e| e.name.clone()).collect();
        assert!(bad.is_empty(), "{sc}: {bad:?}");
        assert_eq!(r.counts().total, 3 * 4 * sc.rank());
        assert!(HopfData::equitable_verified(&sc).is_ok());
    }
}

#[test]
fn formula_check_sees_a_wrong_claim() {
    let sc = sl2();
    let maps = IsoMaps::new(&sc);
    let mut claimed = HopfData::standard(maps.equitable().clone());
    let x = g(Generator::x(0));
    claimed.set_antipode(Generator::y(0), &NCPoly::one() - &x);
    let chev = HopfData::standard(maps.chevalley().clone());
    let yhat = maps.phi(&g(Generator::y(0))).unwrap();
    let lhs = chev.antipode(&yhat).unwrap();
    let rhs = maps.phi(claimed.antipode.get(Generator::y(0)).unwrap()).unwrap();
    assert!(!maps.chevalley().is_zero(&(&lhs - &rhs)).unwrap());
}

#[test]
fn powers_of_x_are_group_like() {
    let h = equi(&sl2());
    for k in -4..=4 {
        assert!(h.is_group_like(&x_pow(0, k)).unwrap(), "k={k}");
    }
    assert!(!h.is_group_like(&g(Generator::y(0))).unwrap());
    assert!(!h.is_group_like(&NCPoly::zero()).unwrap());
}

#[test]
fn group_likes_are_closed_with_inverses() {
    let sc = cartan(&[&[2, -1], &[-1, 2]]);
    let h = equi(&sc);
    let pres = h.presentation();
    for (a, b) in [(1, 0), (2, -1), (-3, 2)] {
        let u = x_pow(0, a);
        let v = x_pow(1, b);
        assert!(h.is_group_like(&(&u * &v)).unwrap());
        let uv = &u * &v;
        let s = h.antipode(&uv).unwrap();
        assert_eq!(pres.normal_form(&(&s * &uv)).unwrap(), NCPoly::one());
        assert_eq!(pres.normal_form(&(&uv * &s)).unwrap(), NCPoly::one());
    }
}

#[test]
fn x_has_no_square_root_among_its_powers() {
    let h = equi(&sl2());
    let pres = h.presentation();
    let x = g(Generator::x(0));
    for k in -4..=4 {
        let u = x_pow(0, k);
        assert!(h.is_group_like(&u).unwrap());
        assert!(!pres.is_zero(&(&(&u * &u) - &x)).unwrap(), "k={k}");
    }
}

#[test]
fn primitive_examples() {
    let h = chev(&sl2());
    assert!(h.is_primitive(&NCPoly::zero()).unwrap());
    assert!(!h.is_primitive(&g(Generator::e(0))).unwrap());
    assert!(!h.is_primitive(&g(Generator::f(0))).unwrap());
}

#[test]
fn twisted_primitive_examples() {
    let sc = sl2();
    let (e, f, k) = (g(Generator::e(0)), g(Generator::f(0)), g(Generator::k(0)));
    assert!(equi(&sc).is_twisted_primitive(&NCPoly::zero(), &g(Generator::x(0))).unwrap());
    let h = chev(&sc);
    assert!(!h.is_twisted_primitive(&e, &k).unwrap());
    assert!(!h.is_twisted_primitive(&f, &k).unwrap());
    assert_eq!(h.is_twisted_primitive(&e, &f), Err(Error::NotGroupLike));
}

#[test]
fn quasi_twisted_primitive_examples() {
    let sc = sl2();
    let y = &g(Generator::y(0)) - &NCPoly::one();
    assert!(equi(&sc).is_quasi_twisted_primitive(&y, &g(Generator::x(0))).unwrap());
    let h = chev(&sc);
    let (e, f, k) = (g(Generator::e(0)), g(Generator::f(0)), g(Generator::k(0)));
    assert!(h.is_quasi_twisted_primitive(&f, &k).unwrap());
    assert!(!h.is_quasi_twisted_primitive(&e, &k).unwrap());
    assert_eq!(h.is_quasi_twisted_primitive(&f, &e), Err(Error::NotGroupLike));
}

#[test]
fn shifted_y_and_z_are_quasi_twisted_for_x() {
    for sc in test_matrices() {
        let h = equi(&sc);
        let one = NCPoly::one();
        for i in 0..sc.rank() {
            let x = g(Generator::x(i));
            for v in [Generator::y(i), Generator::z(i)] {
                let u = &g(v) - &one;
                assert!(h.is_quasi_twisted_primitive(&u, &x).unwrap(), "{sc} {v}");
                let xi = g(Generator::xinv(i));
                let expected = t2(u.clone(), xi).add(&t2(one.clone(), u.clone())).unwrap();
                assert!(h.presentation().tensor_equal(&h.delta(&u, 2).unwrap(), &expected).unwrap());
            }
        }
    }
}

#[test]
fn twisted_to_quasi_examples() {
    let sc = sl2();
    let h = chev(&sc);
    let (e, k) = (g(Generator::e(0)), g(Generator::k(0)));
    assert_eq!(h.twisted_to_quasi(&e, &k).unwrap(), w(&[Generator::e(0), Generator::kinv(0)]));
    assert_eq!(h.twisted_to_quasi(&e, &NCPoly::one()).unwrap(), e);
    assert!(equi(&sc).twisted_to_quasi(&NCPoly::zero(), &g(Generator::x(0))).unwrap().is_zero());
}

/// Whether `u` lies in the span of `basis`.
fn in_span(basis: &[NCPoly], u: &NCPoly) -> bool {
    let mut e: Echelon<Word, RationalFunction> = Echelon::new();
    for b in basis {
        e.insert(b.terms().map(|(w, c)| (w.clone(), c.clone())).collect());
    }
    e.contains(u.terms().map(|(w, c)| (w.clone(), c.clone())).collect())
}

#[test]
fn quasi_space_for_k_at_bound_one() {
    let h = chev(&sl2());
    let k = g(Generator::k(0));
    let basis = h.solve_twisted_space(&k, 1, PrimitiveKind::QuasiTwisted).unwrap();
    assert!(in_span(&basis, &g(Generator::f(0))));
    assert!(in_span(&basis, &w(&[Generator::e(0), Generator::kinv(0)])));
    assert!(in_span(&basis, &(&NCPoly::one() - &g(Generator::kinv(0)))));
    for u in &basis {
        assert!(h.is_quasi_twisted_primitive(u, &k).unwrap(), "{u}");
    }
    assert_eq!(basis.len(), 3);
}

#[test]
fn quasi_space_for_k_at_bound_zero_is_trivial() {
    let h = chev(&sl2());
    let basis = h.solve_twisted_space(&g(Generator::k(0)), 0, PrimitiveKind::QuasiTwisted).unwrap();
    assert!(basis.is_empty());
}

#[test]
fn monomial_pool_shape() {
    let h = chev(&sl2());
    assert_eq!(h.monomial_pool(0), vec![Word::empty()]);
    // cores 1, F, E times K^-1, 1, K
    assert_eq!(h.monomial_pool(1).len(), 9);
    let pres = h.presentation();
    assert!(h.monomial_pool(2).iter().all(|w| pres.is_normal_word(w)));
}

#[test]
fn twisted_to_quasi_carries_bases_forward() {
    let h = chev(&sl2());
    let k = g(Generator::k(0));
    for gl in [k.clone(), &k * &k] {
        let g2 = &gl * &gl;
        let basis = h.solve_twisted_space(&gl, 2, PrimitiveKind::Twisted).unwrap();
        assert!(!basis.is_empty());
        let images: Vec<NCPoly> = basis.iter().map(|u| h.twisted_to_quasi(u, &gl).unwrap()).collect();
        for (u, v) in basis.iter().zip(&images) {
            assert!(h.is_twisted_primitive(u, &gl).unwrap());
            assert!(h.is_quasi_twisted_primitive(v, &g2).unwrap(), "{v}");
        }
        let rows: Vec<Row<Word, RationalFunction>> =
            images.iter().map(|v| v.terms().map(|(w, c)| (w.clone(), c.clone())).collect()).collect();
        assert_eq!(crate::linalg::rank(&rows), basis.len());
    }
}

#[test]
fn chevalley_spaces_respect_the_serre_ideal() {
    let sc = cartan(&[&[2, -1], &[-1, 2]]);
    let h = HopfData::standard(Arc::new(chevalley_presentation(&sc)));
    let k = g(Generator::k(0));
    let basis = h.solve_twisted_space(&k, 1, PrimitiveKind::QuasiTwisted).unwrap();
    assert!(in_span(&basis, &g(Generator::f(0))));
    for u in &basis {
        assert!(h.is_quasi_twisted_primitive(u, &k).unwrap(), "{u}");
    }
}
