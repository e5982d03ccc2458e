use liedual::catalog::fixture;
use liedual::exact::{dot, rat, Rat};
use liedual::invol::{eigensplit, CompactTriad};
use liedual::roots::{f_lambda, maximal_abelian, restricted_roots, st_basis, st_identities_hold, RootDatum};

fn triad(name: &str) -> CompactTriad {
    fixture(name).unwrap().build().unwrap().as_triad().unwrap().clone()
}

fn datum(t: &CompactTriad) -> RootDatum {
    let a1 = maximal_abelian(&t.g, &t.theta1);
    restricted_roots(&t.g, &t.theta1, &a1).unwrap()
}

fn neg(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| -x.clone()).collect()
}

#[test]
fn maximal_abelian_dims() {
    for (name, rank) in [("so4-IJ", 2), ("su2-riem", 1), ("su3-K", 2), ("so5-I23", 2), ("so6-IJ", 2)] {
        let t = triad(name);
        let a = maximal_abelian(&t.g, &t.theta1);
        assert_eq!(a.dim(), rank, "{name}");
        let (_, p1) = eigensplit(&t.theta1);
        assert!(a.is_subspace_of(&p1));
        assert_eq!(t.g.bracket_spaces(&a, &a).dim(), 0);
    }
}

#[test]
fn root_system_examples() {
    let rd = datum(&triad("su2-riem"));
    assert_eq!(rd.roots.len(), 2);
    assert_eq!(rd.roots[0].mult, 1);
    for name in ["su2-riem", "so4-IJ", "su3-K", "so5-I23", "T-a"] {
        let rd = datum(&triad(name));
        assert!(rd.decomposition_holds(), "{name}");
        for r in &rd.roots {
            assert!(rd.root_index(&neg(&r.coords)).is_some(), "{name}: Sigma = -Sigma");
        }
        assert_eq!(rd.positive_roots().len() * 2, rd.roots.len());
    }
}

#[test]
fn f_lambda_properties() {
    for name in ["su2-riem", "so4-IJ", "su3-K", "so5-I23"] {
        let t = triad(name);
        let rd = datum(&t);
        let killing = t.g.killing_form();
        let ip = |a: &[Rat], b: &[Rat]| -dot(a, &killing.mul_vec(b));
        for &k in &rd.positive_roots() {
            let minus = rd.root_index(&neg(&rd.roots[k].coords)).unwrap();
            let space = rd.space_of(k).unwrap();
            for x in space.k.basis() {
                let fx = f_lambda(&t.g, &rd, k, x).unwrap();
                assert!(space.p.contains(&fx), "{name}: f maps k into p");
                assert_eq!(f_lambda(&t.g, &rd, minus, &fx).unwrap(), *x, "{name}: f_lambda f_-lambda = id");
            }
            let (s, tt) = st_basis(&t.g, &rd, k).unwrap();
            assert!(st_identities_hold(&t.g, &rd, k, &s, &tt));
            for i in 0..s.len() {
                for j in 0..s.len() {
                    assert_eq!(ip(&s[i], &s[j]), ip(&tt[i], &tt[j]), "{name}: T has the Gram matrix of S");
                }
            }
            // a direction orthogonal to lambda acts trivially on S
            for a in rd.a1.basis() {
                let c = rd.a1.coords(a).unwrap();
                if rd.pairing(k, &c) == rat(0, 1) {
                    assert!(s.iter().all(|x| t.g.bracket(a, x).iter().all(|v| *v == rat(0, 1))));
                }
            }
        }
    }
}

#[test]
fn gamma_lattice_box() {
    let rd = datum(&triad("so4-IJ"));
    assert_eq!(rd.gamma.len(), 2);
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            let v: Vec<Rat> = (0..2).map(|j| rd.gamma[0][j].clone() * rat(a, 1) + rd.gamma[1][j].clone() * rat(b, 1)).collect();
            assert!(rd.in_gamma(&v));
        }
    }
    let half: Vec<Rat> = rd.gamma[0].iter().map(|x| x * rat(1, 2)).collect();
    assert!(!rd.in_gamma(&half));
}

#[test]
fn partition_by_sign() {
    let rd = datum(&triad("su3-K"));
    let v = rd.gamma[0].clone();
    let (pos, negs, zero) = rd.partition_by(&v);
    assert_eq!(pos.len() + negs.len() + zero.len(), rd.roots.len());
    assert_eq!(pos.len(), negs.len());
    for &k in &pos {
        assert!(negs.contains(&rd.root_index(&neg(&rd.roots[k].coords)).unwrap()));
    }
    let (pos, _, zero) = rd.partition_by(&vec![rat(0, 1); rd.rank()]);
    assert!(pos.is_empty() && zero.len() == rd.roots.len());
}
