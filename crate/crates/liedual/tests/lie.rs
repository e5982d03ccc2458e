use liedual::catalog::{real_matrix_algebra, sl_n_r, so_n, su_n};
use liedual::exact::{rat, unit, GMatrix, Rat};
use liedual::ideals::centroid_dim;
use liedual::{Error, RealLieAlgebra, Signature};

fn e(n: usize, i: usize) -> Vec<Rat> {
    unit(n, i)
}

/// `sl(2, C)` as a 6-dimensional real algebra.
fn sl2c() -> RealLieAlgebra {
    real_matrix_algebra(2, |x| GMatrix::from_fn(1, 1, |_, _| x.trace()))
}

#[test]
fn brackets() {
    let so3 = so_n(3);
    // basis E12-E21, E13-E31, E23-E32
    assert_eq!(so3.bracket(&e(3, 0), &e(3, 2)), vec![rat(0, 1), rat(1, 1), rat(0, 1)]);
    let x = vec![rat(1, 2), rat(-3, 1), rat(2, 7)];
    assert!(so3.bracket(&x, &x).iter().all(|c| *c == rat(0, 1)));
    let sl2 = sl_n_r(2);
    // H, E12, E21
    assert_eq!(sl2.bracket(&e(3, 0), &e(3, 1)), vec![rat(0, 1), rat(2, 1), rat(0, 1)]);
    assert!(matches!(so3.checked_bracket(&e(2, 0), &e(3, 0)), Err(Error::DimMismatch(_))));
}

#[test]
fn killing_signatures() {
    let abelian = RealLieAlgebra::from_structure_constants(2, &[]).unwrap();
    assert!(abelian.killing_form().is_zero());
    assert!(!abelian.is_semisimple());
    assert_eq!(so_n(3).killing_signature(), Signature::new(0, 3, 0));
    assert_eq!(sl_n_r(2).killing_signature(), Signature::new(2, 1, 0));
    assert_eq!(su_n(3).killing_signature(), Signature::new(0, 8, 0));
    let so4 = so_n(4);
    assert!(so4.is_semisimple() && so4.is_compact());
    let sl3 = sl_n_r(3);
    assert!(sl3.is_semisimple() && !sl3.is_compact());
}

#[test]
fn closures() {
    let so3 = so_n(3);
    assert_eq!(so3.subalgebra_closure(&[]).unwrap().space.dim(), 0);
    assert_eq!(so3.subalgebra_closure(&[e(3, 0)]).unwrap().space.dim(), 1);
    assert_eq!(so3.ideal_closure(&[e(3, 0)]).dim(), 3);
    assert_eq!(so3.ideal_closure(&[]).dim(), 0);
    let sl2 = sl_n_r(2);
    let h = sl2.subalgebra_closure(&[e(3, 0)]).unwrap();
    assert_eq!(h.space.dim(), 1);
    let g = so3.direct_sum(&so3);
    let first = g.ideal_closure(&[e(6, 1)]);
    assert_eq!(first.dim(), 3);
    assert!(g.is_ideal(&first));
    assert!(first.contains(&e(6, 0)) && !first.contains(&e(6, 3)));
}

#[test]
fn ideal_closure_is_an_ideal() {
    let g = su_n(2).direct_sum(&so_n(4));
    for i in 0..g.dim() {
        let s = g.ideal_closure(&[e(g.dim(), i)]);
        assert!(g.is_ideal(&s));
    }
}

#[test]
fn centroid_dimensions() {
    assert_eq!(centroid_dim(&so_n(3)).unwrap(), 1);
    assert_eq!(centroid_dim(&su_n(2)).unwrap(), 1);
    let c = sl2c();
    assert_eq!(c.dim(), 6);
    assert_eq!(centroid_dim(&c).unwrap(), 2);
    assert_eq!(centroid_dim(&so_n(4)), Err(Error::NotSimpleSummand));
}

#[test]
fn catalog_algebras_are_consistent() {
    for g in [so_n(5), su_n(4), sl_n_r(4), sl2c()] {
        assert!(g.check_jacobi());
        assert!(g.ambient_consistent());
        let b = g.killing_form();
        for i in 0..g.dim() {
            let ad = g.ad_basis(i);
            assert!(ad.transpose().mul(&b).add(&b.mul(&ad)).is_zero());
        }
    }
}
