//! One PASS/FAIL line per acceptance criterion. All checks are exact; the only
//! tolerances are the wall-clock budgets below.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use liedual::catalog::{fixture, fixture_suite, witness, Object};
use liedual::duality::{associated_triad, check_compatibility, dual_pair, dual_triad, phi, psi, same_pair, same_triad};
use liedual::exact::{dot, minimal_polynomial, rational_roots, Rat};
use liedual::ideals::{classify_pair, classify_triad, ideal_correspondence, is_irreducible, minimal_ideals, self_properties_triad, TypeTag, Verdict};
use liedual::invol::{eigensplit, invariant_profile, verify_equivalence_witness, CompactTriad, NoncompactPairC};
use liedual::keps::{grading_from_z, is_grade_reversing, keps_from_gamma, pair_dual_witness, rotation_operator, sigma_z};
use liedual::lie::AmbientCoords;
use liedual::modrep::{h_module_analysis, is_effective, is_invariant_witness, riemannian_ideal, ModuleFlag};
use liedual::roots::{f_lambda, maximal_abelian, restricted_roots, st_basis, st_identities_hold};
use liedual::{RealLieAlgebra, Subspace};

const BUDGET_ROUNDTRIP: Duration = Duration::from_secs(5);
const BUDGET_COMPAT: Duration = Duration::from_secs(5);
const BUDGET_ROOTS: Duration = Duration::from_secs(10);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn triads() -> Vec<(&'static str, CompactTriad)> {
    fixture_suite()
        .into_iter()
        .filter_map(|f| match f.build().unwrap() {
            Object::Triad(t) => Some((f.name, t)),
            Object::Pair(_) => None,
        })
        .collect()
}

fn pairs() -> Vec<(&'static str, NoncompactPairC)> {
    fixture_suite()
        .into_iter()
        .filter_map(|f| match f.build().unwrap() {
            Object::Pair(p) => Some((f.name, p)),
            Object::Triad(_) => None,
        })
        .collect()
}

/// Pair fixtures together with the duals of the triad fixtures.
fn all_pairs() -> Vec<(String, NoncompactPairC)> {
    let mut out: Vec<(String, NoncompactPairC)> = pairs().into_iter().map(|(n, p)| (n.to_string(), p)).collect();
    out.extend(triads().into_iter().map(|(n, t)| (format!("phi({n})"), phi(&t).unwrap())));
    out
}

fn c1_roundtrip() -> Outcome {
    let start = Instant::now();
    let fixtures = fixture_suite();
    let mut bad = Vec::new();
    for f in &fixtures {
        let ok = match f.build().unwrap() {
            Object::Triad(t) => same_triad(&psi(&phi(&t).unwrap()).unwrap(), &t.normalized().unwrap()),
            Object::Pair(p) => same_pair(&phi(&psi(&p).unwrap()).unwrap(), &p.normalized().unwrap()),
        };
        if !ok {
            bad.push(f.name);
        }
    }
    let t = start.elapsed();
    outcome(fixtures.len() >= 12 && bad.is_empty() && t < BUDGET_ROUNDTRIP, format!("{} fixtures, failures {bad:?}, {t:.2?}", fixtures.len()))
}

fn c2_compatibility() -> Outcome {
    let start = Instant::now();
    let mut objects: Vec<(String, CompactTriad)> = triads().into_iter().map(|(n, t)| (n.to_string(), t)).collect();
    objects.extend(pairs().into_iter().map(|(n, p)| (format!("psi({n})"), psi(&p).unwrap())));
    let bad: Vec<String> = objects.iter().filter(|(_, t)| !check_compatibility(t).unwrap().passed()).map(|(n, _)| n.clone()).collect();
    let t = start.elapsed();
    outcome(bad.is_empty() && t < BUDGET_COMPAT, format!("{} objects, failures {bad:?}, {t:.2?}", objects.len()))
}

fn c3_examples() -> Outcome {
    let w = witness("ad_iprime(1,1)").unwrap();
    let iso = w.verify().unwrap();
    let so_u = phi(fixture("so4-IJ").unwrap().build().unwrap().as_triad().unwrap()).unwrap();
    let so_gl = phi(fixture("so4-IJ2").unwrap().build().unwrap().as_triad().unwrap()).unwrap();
    let pu = invariant_profile(&so_u).unwrap().other_view;
    let pg = invariant_profile(&so_gl).unwrap().other_view;
    let ok = iso && pu.dim == 4 && pu.center_split == (1, 0) && pg.dim == 4 && pg.center_split == (0, 1);
    outcome(
        ok,
        format!(
            "Ad I' witness {iso}; u(1,1) side dim {} centre (k0, p0) {:?}; gl(2,R) side dim {} centre {:?}",
            pu.dim, pu.center_split, pg.dim, pg.center_split
        ),
    )
}

fn c4_non_equivalence() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (p, a, b) in [(1usize, "so4-IJ", "so4-IJ2"), (2, "so8-IJ", "so8-IJ2")] {
        let pa = invariant_profile(fixture(a).unwrap().build().unwrap().as_triad().unwrap()).unwrap();
        let pb = invariant_profile(fixture(b).unwrap().build().unwrap().as_triad().unwrap()).unwrap();
        let (da, db) = (pa.joint_dims[0], pb.joint_dims[0]);
        ok &= da == 2 * p * p && db == p * (2 * p - 1) && !pa.differences(&pb).is_empty();
        detail.push(format!("p={p}: {da} vs {db}"));
    }
    outcome(ok, detail.join("; "))
}

fn c5_ideal_correspondence() -> Outcome {
    let mut counts = BTreeSet::new();
    let mut bad = Vec::new();
    let mut n = 0;
    for (name, p) in all_pairs() {
        let r = ideal_correspondence(&p).unwrap();
        counts.insert(minimal_ideals(&p.g0).unwrap().len());
        counts.insert(minimal_ideals(&psi(&p).unwrap().g).unwrap().len());
        n += 1;
        if !r.passed() {
            bad.push(name);
        }
    }
    let covered = [1, 2, 4].iter().all(|k| counts.contains(k));
    outcome(bad.is_empty() && covered, format!("{n} pairs, minimal ideal counts {counts:?}, failures {bad:?}"))
}

fn c6_types() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, tag) in [("T-a", TypeTag::Ta), ("T-b", TypeTag::Tb), ("T-c", TypeTag::Tc), ("T-d", TypeTag::Td)] {
        let t = fixture(name).unwrap().build().unwrap().as_triad().unwrap().clone();
        let tt = classify_triad(&t).unwrap().tag;
        let pt = classify_pair(&phi(&t).unwrap()).unwrap().tag;
        ok &= tt == tag && pt == tag.dual();
        detail.push(format!("{} -> {}", tt.as_str(), pt.as_str()));
    }
    let tri = |n: &str| fixture(n).unwrap().build().unwrap().as_triad().unwrap().clone();
    let witnesses_ok = ["phi_nu_a", "phi_nu_d", "rho_13", "rho_34"].iter().all(|w| witness(w).unwrap().verify().unwrap());
    let map = |w: &str| witness(w).unwrap().map().clone();
    let a = self_properties_triad(&tri("T-a"), &[map("phi_nu_a")]).unwrap();
    let c = self_properties_triad(&tri("T-c"), &[map("rho_13"), map("rho_34")]).unwrap();
    let d = self_properties_triad(&tri("T-d"), &[map("phi_nu_d")]).unwrap();
    let b_assoc = associated_triad(&tri("T-b")) == tri("T-a");
    let (src, dst, w) = pair_dual_witness(&tri("T-a"), &map("phi_nu_a")).unwrap();
    let pair_side = verify_equivalence_witness(&src, &dst, &w).unwrap();
    let witness_checks = witnesses_ok
        && a.self_dual == Verdict::Yes
        && c.self_dual == Verdict::Yes
        && c.self_associated == Verdict::Yes
        && d.self_associated == Verdict::Yes
        && b_assoc
        && pair_side;
    ok &= witness_checks;
    outcome(ok, format!("{}; witnesses {witnesses_ok}, T-b^a = T-a {b_assoc}, pair-side witness {pair_side}", detail.join(", ")))
}

/// Number of positive roots and their multiplicities from the eigenspaces of
/// `ad(A)^2` for a generic `A` in `a1`.
fn eigen_oracle(g: &RealLieAlgebra, a1: &Subspace) -> Vec<usize> {
    let mut a = vec![Rat::from_integer(0.into()); g.dim()];
    for (k, b) in a1.basis().iter().enumerate() {
        let c = Rat::from_integer(3i64.pow(k as u32).into());
        for (x, y) in a.iter_mut().zip(b) {
            *x += &c * y;
        }
    }
    let ad = g.ad(&a);
    let sq = ad.mul(&ad);
    let roots = rational_roots(&minimal_polynomial(&sq));
    let mut mults: Vec<usize> = roots.iter().filter(|r| **r != Rat::from_integer(0.into())).map(|r| sq.shift(r).kernel().len() / 2).collect();
    mults.sort_unstable();
    mults
}

fn c7_roots() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, expected) in [("so4-IJ", 4usize), ("so5-I23", 8)] {
        let t = fixture(name).unwrap().build().unwrap().as_triad().unwrap().clone();
        let a1 = maximal_abelian(&t.g, &t.theta1);
        let rd = restricted_roots(&t.g, &t.theta1, &a1).unwrap();
        let oracle = eigen_oracle(&t.g, &a1);
        let mults: Vec<usize> = rd.roots.iter().map(|r| r.mult).collect();
        let killing = t.g.killing_form();
        let ip = |x: &[Rat], y: &[Rat]| -dot(x, &killing.mul_vec(y));
        let mut identities = true;
        for sp in &rd.spaces {
            let (s, tt) = st_basis(&t.g, &rd, sp.root).unwrap();
            identities &= st_identities_hold(&t.g, &rd, sp.root, &s, &tt);
            for x in sp.v.basis() {
                let fx = f_lambda(&t.g, &rd, sp.root, x).unwrap();
                for y in sp.v.basis() {
                    let fy = f_lambda(&t.g, &rd, sp.root, y).unwrap();
                    identities &= ip(&fx, &fy) == ip(x, y);
                }
            }
        }
        let this = rd.decomposition_holds()
            && rd.roots.len() == expected
            && mults.iter().all(|&m| m == 1)
            && oracle.len() * 2 == expected
            && oracle.iter().all(|&m| m == 1)
            && identities;
        ok &= this;
        detail.push(format!("{name}: {} roots (oracle {}), multiplicities {mults:?}, identities {identities}", rd.roots.len(), oracle.len() * 2));
    }
    let t = start.elapsed();
    ok &= t < BUDGET_ROOTS;
    outcome(ok, format!("{}; {t:.2?}", detail.join("; ")))
}

fn c8_keps() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, n) in [("sl3-K", 3usize), ("sl4-K", 4)] {
        let p = fixture(name).unwrap().build().unwrap().as_pair().unwrap().clone();
        let zm = liedual::catalog::i_mn(1, 1).direct_sum(&liedual::GMatrix::zeros(n - 2, n - 2));
        let z = AmbientCoords::new(p.g0.ambient().unwrap()).unwrap().coords(&zm).unwrap();
        let gd = grading_from_z(&p.g0, &z).unwrap();
        let sigma_ok = sigma_z(&p.g0, &gd).unwrap().compose(&p.theta) == p.sigma;
        let this = gd.kind == 2 && is_grade_reversing(&gd, &p.theta) && sigma_ok;
        ok &= this;
        detail.push(format!("{name}: kind {} sigma = sigma_Z theta {sigma_ok}", gd.kind));
    }
    for name in ["so4-IJ", "so5-I23"] {
        let t = fixture(name).unwrap().build().unwrap().as_triad().unwrap().clone();
        let a1 = maximal_abelian(&t.g, &t.theta1);
        let rd = restricted_roots(&t.g, &t.theta1, &a1).unwrap();
        let mut vs = rd.gamma.clone();
        vs.push(rd.gamma.iter().fold(vec![Rat::from_integer(0.into()); rd.rank()], |acc, v| acc.iter().zip(v).map(|(a, b)| a + b).collect()));
        let mut good = 0;
        for v in &vs {
            let kc = keps_from_gamma(&t.g, &t.theta1, &rd, v).unwrap();
            let regraded = grading_from_z(&kc.pair.g0, &kc.grading.z).is_ok();
            let profile = invariant_profile(&kc.pair).unwrap().differences(&invariant_profile(&dual_pair(&kc.pair).unwrap()).unwrap()).is_empty();
            let rot = rotation_operator(&t.g, &rd, v).unwrap();
            let triad_w = verify_equivalence_witness(&kc.triad, &dual_triad(&kc.triad), &rot).unwrap();
            let (src, dst, w) = pair_dual_witness(&kc.triad, &rot).unwrap();
            let pair_w = verify_equivalence_witness(&src, &dst, &w).unwrap();
            if regraded && kc.sigma_matches && kc.grading.kind == kc.expected_kind && profile && triad_w && pair_w {
                good += 1;
            }
        }
        ok &= good == vs.len();
        detail.push(format!("{name}: {good}/{} Gamma vectors", vs.len()));
    }
    outcome(ok, detail.join("; "))
}

fn c9_isotropy() -> Outcome {
    let p = fixture("sl3-I12").unwrap().build().unwrap().as_pair().unwrap().clone();
    let irreducible = is_irreducible(&p).unwrap();
    let ma = h_module_analysis(&p).unwrap();
    let dim2 = ma.flag == ModuleFlag::ReducibleWitness && ma.invariant_subspaces_found.iter().any(|w| w.dim() == 2 && is_invariant_witness(&p, w));
    let mut riem = true;
    for name in ["so21-riem", "so21x2-riem"] {
        let p = fixture(name).unwrap().build().unwrap().as_pair().unwrap().clone();
        let (_, p0) = eigensplit(&p.theta);
        for ideal in &minimal_ideals(&p.g0).unwrap().ideals {
            let p1 = p0.intersect(ideal);
            let r = riemannian_ideal(&p, &p1).unwrap();
            riem &= r.passed() && r.l0 == *ideal;
        }
        riem &= riemannian_ideal(&p, &p0).unwrap().passed();
    }
    let mut effective = 0;
    let mut implication = true;
    let mut ineffective = Vec::new();
    for (name, p) in all_pairs() {
        if !is_effective(&p).unwrap() {
            ineffective.push(name);
            continue;
        }
        effective += 1;
        if h_module_analysis(&p).unwrap().flag == ModuleFlag::Irreducible {
            implication &= is_irreducible(&p).unwrap();
        }
    }
    outcome(
        irreducible && dim2 && riem && implication,
        format!("(N1) {irreducible}, dim-2 invariant subspace {dim2}, Riemannian ideals {riem}, (N2)=>(N1) on {effective} effective pairs {implication}, not effective {ineffective:?}"),
    )
}

fn ad_invariant(g: &RealLieAlgebra) -> bool {
    let b = g.killing_form();
    (0..g.dim()).all(|i| {
        let ad = g.ad_basis(i);
        ad.transpose().mul(&b).add(&b.mul(&ad)).is_zero()
    })
}

fn c10_foundation() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    let mut check = |name: String, checks: Vec<(String, bool)>, g: &RealLieAlgebra| {
        n += 1;
        let failed: Vec<String> = checks.into_iter().filter(|c| !c.1).map(|c| c.0).collect();
        if !failed.is_empty() || !ad_invariant(g) {
            bad.push(format!("{name}: {failed:?}"));
        }
    };
    for f in fixture_suite() {
        let o = f.build().unwrap();
        check(f.name.to_string(), o.validate(), o.algebra());
        match &o {
            Object::Triad(t) => {
                let p = phi(t).unwrap();
                check(format!("phi({})", f.name), p.validate(), &p.g0);
            }
            Object::Pair(p) => {
                let t = psi(p).unwrap();
                check(format!("psi({})", f.name), t.validate(), &t.g);
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} objects, failures {bad:?}"))
}

#[test]
fn acceptance() {
    let start = Instant::now();
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("duality round trip", c1_roundtrip),
        ("compatibility with associated and dual", c2_compatibility),
        ("so(4) examples", c3_examples),
        ("non-equivalence of the so(4p) triads", c4_non_equivalence),
        ("ideal correspondence", c5_ideal_correspondence),
        ("type classification", c6_types),
        ("restricted roots", c7_roots),
        ("K_eps gradings", c8_keps),
        ("isotropy module and Riemannian ideals", c9_isotropy),
        ("foundation checks", c10_foundation),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!("criterion {:>2} {} {name}: {}", k + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed.push(k + 1);
        }
    }
    println!("acceptance total {:.2?}", start.elapsed());
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}

#[test]
fn eigen_oracle_counts_rank_one() {
    let t = fixture("su2-riem").unwrap().build().unwrap().as_triad().unwrap().clone();
    let a1 = maximal_abelian(&t.g, &t.theta1);
    assert_eq!(eigen_oracle(&t.g, &a1), vec![1]);
}
