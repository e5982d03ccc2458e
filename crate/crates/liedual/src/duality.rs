//! The sign twist along an involution, the maps between triads and pairs it
//! induces, the associated and dual constructions, and their compatibility.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{gi, GMatrix, GaussRat, QMatrix, Rat};
use crate::invol::{adapted_basis, eigensplit, fixed_view, CompactTriad, Involution, NoncompactPairC};
use crate::lie::{RealLieAlgebra, Subspace};

/// Algebra obtained by multiplying the `-1` eigenspace of an involution by `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistResult {
    pub algebra: RealLieAlgebra,
    /// Carried involutions in the adapted basis.
    pub carried: Vec<Involution>,
    /// Real adapted basis of the input: `+1` eigenvectors, then `-1` eigenvectors.
    pub change: QMatrix,
    /// New basis inside the complexified input: `change` with the `-1` columns multiplied by `i`.
    pub basis_record: GMatrix,
    pub plus_dim: usize,
}

/// A twisted object together with its basis bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct Twisted<O> {
    pub object: O,
    pub change: QMatrix,
    pub basis_record: GMatrix,
}

fn record(change: &QMatrix, plus_dim: usize) -> GMatrix {
    let i = gi();
    GMatrix::from_fn(change.rows(), change.cols(), |r, c| {
        let x = GaussRat::new(change[(r, c)].clone(), Rat::zero());
        if c >= plus_dim {
            x * &i
        } else {
            x
        }
    })
}

pub fn cartan_twist(g: &RealLieAlgebra, tau: &Involution, carried: &[&Involution]) -> Result<TwistResult> {
    let n = g.dim();
    if tau.dim() != n || carried.iter().any(|c| c.dim() != n) {
        return Err(Error::DimMismatch("involution and algebra dimensions differ".into()));
    }
    if !tau.mat().mul(tau.mat()).is_identity() {
        return Err(Error::NotInvolution);
    }
    if carried.iter().any(|c| !c.commutes_with(tau)) {
        return Err(Error::NotCommuting);
    }
    let (p, k) = adapted_basis(tau);
    let pinv = p.inverse().ok_or(Error::Singular)?;
    let h = g.rebase(&p)?;
    let mut algebra = RealLieAlgebra::from_brackets(n, |i, j| {
        let b = h.bracket(&crate::exact::unit(n, i), &crate::exact::unit(n, j));
        if i >= k && j >= k {
            b.into_iter().map(|x| -x).collect()
        } else {
            b
        }
    });
    if let Some(amb) = h.ambient() {
        let i = gi();
        algebra = algebra.with_ambient(amb.iter().enumerate().map(|(c, m)| if c >= k { m.scale(&i) } else { m.clone() }).collect());
    }
    Ok(TwistResult {
        algebra,
        carried: carried.iter().map(|c| c.rebase(&p, &pinv)).collect(),
        basis_record: record(&p, k),
        change: p,
        plus_dim: k,
    })
}

pub fn phi_twist(t: &CompactTriad) -> Result<Twisted<NoncompactPairC>> {
    let tw = cartan_twist(&t.g, &t.theta1, &[&t.theta1, &t.theta2])?;
    let mut c = tw.carried.into_iter();
    let theta = c.next().unwrap();
    let sigma = c.next().unwrap();
    let object = NoncompactPairC::from_parts(tw.algebra, sigma, theta)?;
    Ok(Twisted { object, change: tw.change, basis_record: tw.basis_record })
}

/// `(g, theta1, theta2) -> (g0, theta2; theta1)` with `g0 = k1 + i p1`.
pub fn phi(t: &CompactTriad) -> Result<NoncompactPairC> {
    Ok(phi_twist(t)?.object)
}

pub fn psi_twist(p: &NoncompactPairC) -> Result<Twisted<CompactTriad>> {
    let tw = cartan_twist(&p.g0, &p.theta, &[&p.theta, &p.sigma])?;
    let mut c = tw.carried.into_iter();
    let theta1 = c.next().unwrap();
    let theta2 = c.next().unwrap();
    let object = CompactTriad::from_parts(tw.algebra, theta1, theta2)?;
    Ok(Twisted { object, change: tw.change, basis_record: tw.basis_record })
}

/// `(g0, sigma; theta) -> (g, theta, sigma)` with `g = k0 + i p0`.
pub fn psi(p: &NoncompactPairC) -> Result<CompactTriad> {
    Ok(psi_twist(p)?.object)
}

/// Associated pair, flagged when `theta sigma` is the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Flagged<O> {
    pub object: O,
    pub degenerate_identity: bool,
}

/// `(g0, theta sigma; theta)`.
pub fn associated_pair(p: &NoncompactPairC) -> Flagged<NoncompactPairC> {
    let sigma = p.theta.compose(&p.sigma);
    let degenerate_identity = sigma.is_identity();
    Flagged { object: NoncompactPairC { g0: p.g0.clone(), sigma, theta: p.theta.clone() }, degenerate_identity }
}

/// `(g, theta1, theta1 theta2)`.
pub fn associated_triad(t: &CompactTriad) -> CompactTriad {
    CompactTriad { g: t.g.clone(), theta1: t.theta1.clone(), theta2: t.theta1.compose(&t.theta2) }
}

/// `(g, theta2, theta1)`.
pub fn dual_triad(t: &CompactTriad) -> CompactTriad {
    CompactTriad { g: t.g.clone(), theta1: t.theta2.clone(), theta2: t.theta1.clone() }
}

/// Dual pair: twist along `sigma theta`, then read `theta|` as the new `sigma`
/// and `sigma|` as the new Cartan involution, on a basis adapted to the latter.
pub fn dual_pair_twist(p: &NoncompactPairC) -> Result<Twisted<NoncompactPairC>> {
    let tau = p.sigma.compose(&p.theta);
    let tw = cartan_twist(&p.g0, &tau, &[&p.sigma, &p.theta])?;
    let mut c = tw.carried.into_iter();
    let new_theta = c.next().unwrap();
    let new_sigma = c.next().unwrap();
    let raw = NoncompactPairC::from_parts(tw.algebra, new_sigma, new_theta)?;
    let (q, _) = adapted_basis(&raw.theta);
    let object = raw.rebase(&q)?;
    Ok(Twisted { object, change: tw.change.mul(&q), basis_record: tw.basis_record.mul(&q.to_gauss()) })
}

pub fn dual_pair(p: &NoncompactPairC) -> Result<NoncompactPairC> {
    Ok(dual_pair_twist(p)?.object)
}

/// Equal structure constants and involution matrices. Matrix realizations are
/// not compared: a round trip through two twists negates the `-1` block of the
/// realization.
pub fn same_triad(a: &CompactTriad, b: &CompactTriad) -> bool {
    a.g.structure_constants() == b.g.structure_constants() && a.theta1 == b.theta1 && a.theta2 == b.theta2
}

pub fn same_pair(a: &NoncompactPairC, b: &NoncompactPairC) -> bool {
    a.g0.structure_constants() == b.g0.structure_constants() && a.sigma == b.sigma && a.theta == b.theta
}

/// `P^{-1}(s^theta) + P^{-1}(s^{-theta})`: a theta-stable subspace carried
/// into the coordinates of a twist with real adapted basis `P`.
pub fn transport_subspace(s: &Subspace, theta: &Involution, pinv: &QMatrix) -> Subspace {
    let half = Rat::new(1.into(), 2.into());
    let mut vs = Vec::new();
    for v in s.basis() {
        let tv = theta.mat().mul_vec(v);
        let plus: Vec<Rat> = v.iter().zip(&tv).map(|(a, b)| (a.clone() + b) * &half).collect();
        let minus: Vec<Rat> = v.iter().zip(&tv).map(|(a, b)| (a.clone() - b) * &half).collect();
        vs.push(pinv.mul_vec(&plus));
        vs.push(pinv.mul_vec(&minus));
    }
    Subspace::span(s.ambient_dim(), &vs)
}

/// Whether two objects realized inside the same complex algebra coincide after
/// a real change of basis `C = E_a^{-1} E_b`.
fn aligned_equal(a: &NoncompactPairC, ea: &GMatrix, b: &NoncompactPairC, eb: &GMatrix) -> bool {
    let Some(eainv) = ea.inverse() else {
        return false;
    };
    let Some(c) = eainv.mul(eb).to_real() else {
        return false;
    };
    match a.rebase(&c) {
        Ok(r) => same_pair(&r, b),
        Err(_) => false,
    }
}

/// Pass/fail of the two compatibility identities between duality and the
/// associated and dual constructions.
#[derive(Clone, Debug, PartialEq)]
pub struct CompatibilityReport {
    /// `(t^a)^* = (t^*)^a`
    pub associated: bool,
    /// `(t^d)^* = (t^*)^d`, after canonical basis alignment.
    pub dual: bool,
    /// `t^{ada} = t^{dad}`
    pub ada_dad: bool,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.associated && self.dual && self.ada_dad
    }
}

pub fn check_compatibility(t: &CompactTriad) -> Result<CompatibilityReport> {
    let star = phi_twist(t)?;
    let lhs_a = phi(&associated_triad(t))?;
    let rhs_a = associated_pair(&star.object).object;
    let associated = lhs_a == rhs_a;

    let lhs_d = phi_twist(&dual_triad(t))?;
    let rhs_d = dual_pair_twist(&star.object)?;
    let rhs_record = star.basis_record.mul(&rhs_d.basis_record);
    let dual = aligned_equal(&lhs_d.object, &lhs_d.basis_record, &rhs_d.object, &rhs_record);

    let ada = associated_triad(&dual_triad(&associated_triad(t)));
    let dad = dual_triad(&associated_triad(&dual_triad(t)));
    Ok(CompatibilityReport { associated, dual, ada_dad: ada == dad })
}

/// Comparison of the twisted fixed-point subalgebra of a pair with the fixed
/// points of `theta2` in the compact dual.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedDualReport {
    pub dim: usize,
    /// Twist of `g0^sigma` equals `g^{theta2}`.
    pub matches: bool,
    /// Twist of the derived part equals the derived part of `g^{theta2}`.
    pub semisimple_matches: bool,
    /// Twist of the centre equals the centre of `g^{theta2}`.
    pub center_matches: bool,
    /// Dimensions of the centre of `g0^sigma` inside `k0` and inside `p0`.
    pub center_split: (usize, usize),
}

pub fn fixed_subalgebra_dual(p: &NoncompactPairC) -> Result<FixedDualReport> {
    let dual = psi_twist(p)?;
    let t = &dual.object;
    let pinv = dual.change.inverse().ok_or(Error::Singular)?;
    let h0 = fixed_view(&p.g0, &p.sigma);
    let h = fixed_view(&t.g, &t.theta2);
    let h0_center = h0.center();
    let h0_derived = h0.derived();
    let (k0, p0) = eigensplit(&p.theta);
    let image = transport_subspace(&h0.space, &p.theta, &pinv);
    Ok(FixedDualReport {
        dim: h0.space.dim(),
        matches: image == h.space,
        semisimple_matches: transport_subspace(&h0_derived, &p.theta, &pinv) == h.derived(),
        center_matches: transport_subspace(&h0_center, &p.theta, &pinv) == h.center(),
        center_split: (h0_center.intersect(&k0).dim(), h0_center.intersect(&p0).dim()),
    })
}
