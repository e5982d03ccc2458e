use liedual::catalog::{fixture, fixture_names, Object};
use liedual::duality::{check_compatibility, phi, psi, same_pair, same_triad};
use liedual::exact::{gauss, rat, symmetric_signature, GMatrix, QMatrix, Rat};
use liedual::ideals::{classify_pair, classify_triad, object_lattice};
use liedual::invol::{invariant_profile, verify_equivalence_witness};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

/// `L U` with unit diagonals: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = QMatrix> {
    (proptest::collection::vec(small(), n * n), proptest::collection::vec(small(), n * n)).prop_map(move |(a, b)| {
        let l = QMatrix::from_fn(n, n, |r, c| if r == c { rat(1, 1) } else if r > c { rat(a[r * n + c], 1) } else { rat(0, 1) });
        let u = QMatrix::from_fn(n, n, |r, c| if r == c { rat(1, 1) } else if r < c { rat(b[r * n + c], 1) } else { rat(0, 1) });
        l.mul(&u)
    })
}

fn rat_matrix(r: usize, c: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec((small(), 1i64..=4), r * c).prop_map(move |v| QMatrix::from_fn(r, c, |i, j| rat(v[i * c + j].0, v[i * c + j].1)))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec((small(), 1i64..=3), n).prop_map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect())
}

/// Small fixtures, cheap enough to rebuild per case.
const SMALL: &[&str] = &["so4-IJ", "so4-IJ2", "su3-K", "T-a", "T-b", "T-d", "sl3-K", "sl3-I12", "so22-u11", "so22-gl2", "so21-riem", "so3+so21"];

fn rebased(name: &str, p: &QMatrix) -> (Object, Object) {
    let o = fixture(name).unwrap().build().unwrap();
    let r = match &o {
        Object::Triad(t) => Object::Triad(t.rebase(p).unwrap()),
        Object::Pair(q) => Object::Pair(q.rebase(p).unwrap()),
    };
    (o, r)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn inverse_and_kernel(m in rat_matrix(4, 4), k in rat_matrix(3, 5)) {
        if let Some(inv) = m.inverse() {
            prop_assert!(m.mul(&inv).is_identity());
        } else {
            prop_assert!(m.rank() < 4);
        }
        let ker = k.kernel();
        prop_assert_eq!(ker.len() + k.rank(), 5);
        for v in &ker {
            prop_assert!(k.mul_vec(v).iter().all(|x| *x == rat(0, 1)));
        }
    }

    #[test]
    fn gaussian_inverse(a in rat_matrix(3, 3), b in rat_matrix(3, 3)) {
        let m = GMatrix::from_fn(3, 3, |r, c| gauss(a[(r, c)].clone(), b[(r, c)].clone()));
        if let Some(inv) = m.inverse() {
            prop_assert!(inv.mul(&m).is_identity());
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(a in rat_matrix(5, 5), p in invertible(5)) {
        let s = a.add(&a.transpose());
        let moved = p.transpose().mul(&s).mul(&p);
        let sig = symmetric_signature(&s).unwrap();
        prop_assert_eq!(symmetric_signature(&moved).unwrap(), sig);
        prop_assert_eq!(sig.n_zero, 5 - s.rank());
    }

    #[test]
    fn killing_form_is_invariant(k in 0..SMALL.len(), x in vector(8), y in vector(8), z in vector(8)) {
        let o = fixture(SMALL[k]).unwrap().build().unwrap();
        let g = o.algebra();
        let n = g.dim();
        let (x, y, z) = (&x[..n.min(8)], &y[..n.min(8)], &z[..n.min(8)]);
        let pad = |v: &[Rat]| { let mut w = v.to_vec(); w.resize(n, rat(0, 1)); w };
        let (x, y, z) = (pad(x), pad(y), pad(z));
        let lhs = g.killing(&g.bracket(&x, &y), &z);
        let rhs = -g.killing(&y, &g.bracket(&x, &z));
        prop_assert_eq!(lhs, rhs);
        // Jacobi on arbitrary elements
        let j: Vec<Rat> = (0..n).map(|i| {
            g.bracket(&x, &g.bracket(&y, &z))[i].clone() + &g.bracket(&y, &g.bracket(&z, &x))[i] + &g.bracket(&z, &g.bracket(&x, &y))[i]
        }).collect();
        prop_assert!(j.iter().all(|c| *c == rat(0, 1)));
    }

    #[test]
    fn rebasing_is_an_equivalence(k in 0..SMALL.len(), seed in invertible(8)) {
        let dim = fixture(SMALL[k]).unwrap().expected.dim;
        let p = QMatrix::from_fn(dim, dim, |r, c| if r < 8 && c < 8 { seed[(r, c)].clone() } else if r == c { rat(1, 1) } else { rat(0, 1) });
        let (o, r) = rebased(SMALL[k], &p);
        let pinv = p.inverse().unwrap();
        match (&o, &r) {
            (Object::Triad(a), Object::Triad(b)) => {
                prop_assert!(verify_equivalence_witness(a, b, &pinv).unwrap());
                prop_assert!(invariant_profile(a).unwrap().differences(&invariant_profile(b).unwrap()).is_empty());
                prop_assert_eq!(object_lattice(a).unwrap().ideals.len(), object_lattice(b).unwrap().ideals.len());
                prop_assert_eq!(classify_triad(a).ok().map(|c| c.tag), classify_triad(b).ok().map(|c| c.tag));
                prop_assert!(same_triad(&psi(&phi(b).unwrap()).unwrap(), &b.normalized().unwrap()));
                prop_assert!(check_compatibility(b).unwrap().passed());
            }
            (Object::Pair(a), Object::Pair(b)) => {
                prop_assert!(verify_equivalence_witness(a, b, &pinv).unwrap());
                prop_assert!(invariant_profile(a).unwrap().differences(&invariant_profile(b).unwrap()).is_empty());
                prop_assert_eq!(object_lattice(a).unwrap().ideals.len(), object_lattice(b).unwrap().ideals.len());
                prop_assert_eq!(classify_pair(a).ok().map(|c| c.tag), classify_pair(b).ok().map(|c| c.tag));
                prop_assert!(same_pair(&phi(&psi(b).unwrap()).unwrap(), &b.normalized().unwrap()));
            }
            _ => unreachable!(),
        }
    }
}

#[test]
fn small_fixtures_exist() {
    let names = fixture_names();
    assert!(SMALL.iter().all(|s| names.contains(s)));
}
