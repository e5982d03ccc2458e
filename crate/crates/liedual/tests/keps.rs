use liedual::catalog::{fixture, sl_n_r};
use liedual::duality::{psi, same_triad};
use liedual::exact::{gauss, rat, GMatrix, Rat};
use liedual::invol::{fixed_view, CompactTriad, Involution, NoncompactPairC};
use liedual::keps::{
    characteristic_element, grading_from_z, is_grade_reversing, keps_from_gamma, keps_pair, search_parity_witness, sigma_z, theta_sim_witness_check,
};
use liedual::lie::AmbientCoords;
use liedual::roots::{maximal_abelian, restricted_roots};
use liedual::{Error, RealLieAlgebra, Signature};

fn coords(g: &RealLieAlgebra, diag: &[Rat]) -> Vec<Rat> {
    let m = GMatrix::diag(&diag.iter().map(|x| gauss(x.clone(), rat(0, 1))).collect::<Vec<_>>());
    AmbientCoords::new(g.ambient().unwrap()).unwrap().coords(&m).unwrap()
}

fn neg_transpose(n: usize) -> NoncompactPairC {
    fixture(if n == 3 { "sl3-K" } else { "sl4-K" }).unwrap().build().unwrap().as_pair().unwrap().clone()
}

fn triad(name: &str) -> CompactTriad {
    fixture(name).unwrap().build().unwrap().as_triad().unwrap().clone()
}

#[test]
fn sl3_grading() {
    let g = sl_n_r(3);
    let z = coords(&g, &[rat(1, 1), rat(0, 1), rat(-1, 1)]);
    let gd = grading_from_z(&g, &z).unwrap();
    assert_eq!(gd.dims(), vec![(-2, 1), (-1, 2), (0, 2), (1, 2), (2, 1)]);
    assert_eq!((gd.kind, gd.degenerate), (2, false));
    assert_eq!(characteristic_element(&g, &gd), Some(z));
    let sz = sigma_z(&g, &gd).unwrap();
    assert!(sz.is_valid_for(&g));
    for (k, s) in &gd.components {
        let sign = if k % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        assert!(s.basis().iter().all(|b| sz.mat().mul_vec(b) == b.iter().map(|x| x * &sign).collect::<Vec<_>>()));
    }
    let zero = grading_from_z(&g, &vec![rat(0, 1); 8]).unwrap();
    assert!(zero.degenerate);
    assert_eq!(zero.kind, 0);
    assert!(sigma_z(&g, &zero).unwrap().is_identity());
}

#[test]
fn non_integer_gradings_are_rejected() {
    let g = sl_n_r(3);
    let z = coords(&g, &[rat(1, 2), rat(0, 1), rat(-1, 2)]);
    assert_eq!(grading_from_z(&g, &z).unwrap_err(), Error::NonIntegerGrading);
    assert!(matches!(grading_from_z(&g, &[rat(1, 1)]), Err(Error::DimMismatch(_))));
}

#[test]
fn keps_pair_examples() {
    let p = neg_transpose(3);
    let gd = grading_from_z(&p.g0, &coords(&p.g0, &[rat(1, 1), rat(0, 1), rat(-1, 1)])).unwrap();
    let k = keps_pair(&p.g0, &gd, &p.theta).unwrap();
    let h = fixed_view(&k.g0, &k.sigma);
    assert_eq!(h.algebra.dim(), 3);
    assert_eq!(h.algebra.killing_signature(), Signature::new(2, 1, 0));
    let p = neg_transpose(4);
    let half = [rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2)];
    let gd = grading_from_z(&p.g0, &coords(&p.g0, &half)).unwrap();
    assert_eq!(gd.kind, 1);
    let k = keps_pair(&p.g0, &gd, &p.theta).unwrap();
    assert_eq!(fixed_view(&k.g0, &k.sigma).algebra.dim(), 6);
    assert!(!is_grade_reversing(&gd, &Involution::identity(15)));
    assert_eq!(keps_pair(&p.g0, &gd, &Involution::identity(15)).unwrap_err(), Error::NotGradeReversing);
}

#[test]
fn construction_from_gamma() {
    let t = triad("so5-I23");
    let a1 = maximal_abelian(&t.g, &t.theta1);
    let rd = restricted_roots(&t.g, &t.theta1, &a1).unwrap();
    let zero = keps_from_gamma(&t.g, &t.theta1, &rd, &[rat(0, 1), rat(0, 1)]).unwrap();
    assert!(zero.degenerate && zero.grading.degenerate);
    assert_eq!(zero.triad.theta1, zero.triad.theta2);
    for v in &rd.gamma {
        let kc = keps_from_gamma(&t.g, &t.theta1, &rd, v).unwrap();
        assert!(kc.sigma_matches && !kc.degenerate);
        assert_eq!(kc.grading.kind, kc.expected_kind);
        assert!(same_triad(&psi(&kc.pair).unwrap(), &kc.triad.normalized().unwrap()));
        assert!(theta_sim_witness_check(&kc.triad, &rd, v).unwrap());
        let found = search_parity_witness(&kc.triad, &rd).unwrap().unwrap();
        assert!(theta_sim_witness_check(&kc.triad, &rd, &found).unwrap());
    }
    let half: Vec<Rat> = rd.gamma[0].iter().map(|x| x * rat(1, 2)).collect();
    assert_eq!(keps_from_gamma(&t.g, &t.theta1, &rd, &half).unwrap_err(), Error::NotInGamma);
}

#[test]
fn parity_search_on_fixtures() {
    let t = triad("so4-IJ");
    let a1 = maximal_abelian(&t.g, &t.theta1);
    let rd = restricted_roots(&t.g, &t.theta1, &a1).unwrap();
    // relative to the chosen a1 no parity class relates the two involutions
    assert_eq!(search_parity_witness(&t, &rd).unwrap(), None);
    let r = triad("su2-riem");
    let a1 = maximal_abelian(&r.g, &r.theta1);
    let rd = restricted_roots(&r.g, &r.theta1, &a1).unwrap();
    assert_eq!(search_parity_witness(&r, &rd).unwrap(), Some(vec![rat(0, 1)]));
}
