use std::sync::Arc;

use eqkit::{
    chevalley_presentation, compute_symmetrizer, equitable_presentation, parse_cartan_file, parse_expression,
    verify_presentation_iso, Error, Flavor, HopfData, IsoMaps, NCPoly, SymmetrizedCartan,
};

fn b2() -> SymmetrizedCartan {
    compute_symmetrizer(parse_cartan_file("# B2\n2\n2 -1\n-2 2\n").unwrap()).unwrap()
}

#[test]
fn cartan_file_to_symmetrizer() {
    assert_eq!(b2().d(), &[2, 1]);
    let bad = parse_cartan_file("2\n2 -1\n0 2\n").and_then(compute_symmetrizer);
    assert!(matches!(bad, Err(Error::AsymmetricZero { .. })));
}

#[test]
fn parsed_expressions_reduce_and_round_trip() {
    let sc = b2();
    let chev = chevalley_presentation(&sc);
    let p = parse_expression("K1*E2 - qbinom(2,1,1)*F1", Flavor::Chevalley, &sc).unwrap().poly;
    let nf = chev.normal_form(&p).unwrap();
    assert_eq!(nf.to_string(), "(-q^2 - q^-2)*F1 + q^-2*E2*K1");
    let back = parse_expression(&nf.to_string(), Flavor::Chevalley, &sc).unwrap().poly;
    assert_eq!(back, nf);
}

#[test]
fn maps_round_trip_through_both_presentations() {
    let sc = b2();
    let maps = IsoMaps::new(&sc);
    let u = parse_expression("Y1*Z2*X1^-1 + 3/2*Y2", Flavor::Equitable, &sc).unwrap().poly;
    let back = maps.psi(&maps.phi(&u).unwrap()).unwrap();
    assert!(maps.equitable().equal(&back, &u).unwrap());
}

#[test]
fn certification_and_hopf_axioms() {
    let sc = b2();
    assert!(verify_presentation_iso(&sc).all_pass());
    let h = HopfData::standard(Arc::new(equitable_presentation(&sc)));
    assert!(h.check_hopf_axioms().all_pass());
    let x = parse_expression("X2^-3", Flavor::Equitable, &sc).unwrap().poly;
    assert!(h.is_group_like(&x).unwrap());
    assert!(!h.is_group_like(&NCPoly::zero()).unwrap());
}
