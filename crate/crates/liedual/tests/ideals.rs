use liedual::catalog::{fixture, fixture_suite, so_n, su_n, FamilySpec, Object};
use liedual::duality::{phi, psi};
use liedual::exact::QMatrix;
use liedual::ideals::{
    classify_pair, classify_triad, ideal_correspondence, irreducible_components_pair, irreducible_components_triad, is_irreducible, minimal_ideals,
    object_lattice, self_properties_pair, self_properties_triad, TypeTag, Verdict,
};
use liedual::invol::{invariant_profile, CompactTriad};
use liedual::Error;

fn triad(name: &str) -> CompactTriad {
    fixture(name).unwrap().build().unwrap().as_triad().unwrap().clone()
}

#[test]
fn minimal_ideal_examples() {
    assert_eq!(minimal_ideals(&so_n(3)).unwrap().len(), 1);
    let so4 = minimal_ideals(&so_n(4)).unwrap();
    assert_eq!(so4.ideals.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![3, 3]);
    let su2_4 = FamilySpec::parse("su2pow(4) id id").unwrap().build().unwrap();
    let d = minimal_ideals(su2_4.algebra()).unwrap();
    assert_eq!(d.len(), 4);
    assert!(d.ideals.iter().all(|s| s.dim() == 3 && su2_4.algebra().is_ideal(s)));
    assert_eq!(minimal_ideals(&su_n(3)).unwrap().len(), 1);
    let gl = liedual::catalog::gl_n_r(2);
    assert_eq!(minimal_ideals(&gl).unwrap_err(), Error::NotSemisimple);
}

#[test]
fn lattice_examples() {
    let so4 = triad("so4-IJ");
    let lat = object_lattice(&so4).unwrap();
    assert_eq!((lat.orbits.len(), lat.ideals.len()), (2, 4));
    assert!(!is_irreducible(&so4).unwrap());
    assert!(is_irreducible(&triad("T-a")).unwrap());
    let id = FamilySpec::parse("so(4) id id").unwrap().build().unwrap();
    let lat = object_lattice(id.as_triad().unwrap()).unwrap();
    assert_eq!((lat.orbits.len(), lat.ideals.len()), (2, 4));
    let tc = triad("T-c");
    assert!(object_lattice(&tc).unwrap().is_trivial());
    let sum = triad("sum-so6-Tb");
    assert!(!is_irreducible(&sum).unwrap());
}

#[test]
fn components_commute_with_phi() {
    let t = triad("sum-so6-Tb");
    let comps = irreducible_components_triad(&t).unwrap();
    let mut dims: Vec<usize> = comps.iter().map(|c| c.g.dim()).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![6, 15]);
    assert!(comps.iter().all(|c| is_irreducible(c).unwrap()));
    let pc = irreducible_components_pair(&phi(&t).unwrap()).unwrap();
    assert_eq!(pc.len(), comps.len());
    for c in &comps {
        let pcp = invariant_profile(&phi(c).unwrap()).unwrap();
        assert!(pc.iter().any(|q| invariant_profile(q).unwrap().differences(&pcp).is_empty()));
    }
}

#[test]
fn correspondence_holds() {
    for f in fixture_suite() {
        let p = match f.build().unwrap() {
            Object::Triad(t) => phi(&t).unwrap(),
            Object::Pair(p) => p,
        };
        let r = ideal_correspondence(&p).unwrap();
        assert!(r.passed(), "{}: {r:?}", f.name);
        assert_eq!(r.pair_lattice_size, r.triad_lattice_size);
    }
}

#[test]
fn classification_is_dual() {
    for (name, tag, dual) in [("T-a", TypeTag::Ta, TypeTag::Pa), ("T-b", TypeTag::Tb, TypeTag::Pb), ("T-c", TypeTag::Tc, TypeTag::Pc), ("T-d", TypeTag::Td, TypeTag::Pd)] {
        let t = triad(name);
        assert_eq!(classify_triad(&t).unwrap().tag, tag);
        assert_eq!(tag.dual(), dual);
        let c = classify_pair(&phi(&t).unwrap()).unwrap();
        assert_eq!(c.tag, dual, "{name}");
        assert_eq!(classify_triad(&psi(&phi(&t).unwrap()).unwrap()).unwrap().tag, tag);
    }
    assert_eq!(classify_triad(&triad("so6-IJ")).unwrap().tag, TypeTag::Simple);
    assert_eq!(classify_triad(&triad("sum-so6-Tb")).unwrap_err(), Error::NotIrreducible);
}

#[test]
fn self_properties() {
    let r = triad("su2-riem");
    let id = QMatrix::identity(r.g.dim());
    let rep = self_properties_triad(&r, std::slice::from_ref(&id)).unwrap();
    assert_eq!((rep.self_dual, rep.dual_witness), (Verdict::Yes, Some(0)));
    // the associated triad carries the identity as second involution
    assert_eq!(rep.self_associated, Verdict::No);
    // the joint eigenspaces (+-) and (-+) have different dimensions
    let rep = self_properties_triad(&triad("so4-IJ"), &[]).unwrap();
    assert_eq!(rep.self_dual, Verdict::No);
    let p = phi(&r).unwrap();
    let rep = self_properties_pair(&p, &[id]).unwrap();
    assert_eq!(rep.self_dual, Verdict::Yes);
}
