use liedual::catalog::{fixture_suite, witness, FamilySpec, WITNESS_NAMES};
use liedual::ideals::{classify_pair, classify_triad, invariant_ideal_lattice, minimal_ideals};
use liedual::invol::eigensplit;
use liedual::catalog::Object;

#[test]
fn fixtures_match_frozen_expectations() {
    for f in fixture_suite() {
        let t0 = std::time::Instant::now();
        let obj = f.build().unwrap_or_else(|e| panic!("{}: {e}", f.name));
        let g = obj.algebra();
        let [a, b] = obj.involutions();
        assert!(obj.validate().iter().all(|c| c.1), "{}: {:?}", f.name, obj.validate());
        assert_eq!(g.dim(), f.expected.dim, "{}", f.name);
        assert_eq!((eigensplit(a).0.dim(), eigensplit(b).0.dim()), f.expected.fixed_dims, "{}", f.name);
        assert_eq!(minimal_ideals(g).unwrap().len(), f.expected.minimal_ideals, "{}", f.name);
        let lat = invariant_ideal_lattice(g, &[a, b]).unwrap();
        assert_eq!(lat.ideals.len(), f.expected.lattice_size, "{}", f.name);
        let tag = match &obj {
            Object::Triad(t) => classify_triad(t).ok().map(|c| c.tag),
            Object::Pair(p) => classify_pair(p).ok().map(|c| c.tag),
        };
        assert_eq!(tag, f.expected.tag, "{}", f.name);
        eprintln!("{} {:?}", f.name, t0.elapsed());
    }
}

#[test]
fn spec_strings_round_trip() {
    for f in fixture_suite() {
        assert_eq!(FamilySpec::parse(&f.spec.to_string()).unwrap(), f.spec);
    }
}

#[test]
fn named_witnesses_verify() {
    for name in WITNESS_NAMES {
        let w = witness(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(w.verify().unwrap(), "{name}");
    }
    assert!(witness("nope").is_err());
}

#[test]
fn bad_family_parameters_are_rejected() {
    for s in ["so(4) ad_i(1,2) id", "su2pow(2) rho_13 rho", "so(9) id id", "xx(3) id id"] {
        assert!(FamilySpec::parse(s).and_then(|s| s.build()).is_err(), "{s}");
    }
}
