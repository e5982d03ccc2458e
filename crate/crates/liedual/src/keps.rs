//! Gradings by a characteristic element, the parity involution `sigma_Z`,
//! pairs of type `K_epsilon`, and their construction from `Gamma`.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::duality::{dual_pair_twist, phi_twist};
use crate::error::{Error, Result};
use crate::exact::{minimal_polynomial, rational_roots, GMatrix, QMatrix, Rat};
use crate::invol::{CompactTriad, Involution, NoncompactPairC};
use crate::lie::{RealLieAlgebra, Subspace};
use crate::roots::{st_basis, RootDatum};

/// Eigenspace decomposition of `ad Z` with integer eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct GradingDatum {
    pub z: Vec<Rat>,
    /// Nonzero components `g0(k)`, in increasing `k`.
    pub components: Vec<(i64, Subspace)>,
    /// Largest `k` with `g0(k) != 0`.
    pub kind: usize,
    /// `Z = 0`: a single component, not a grading of positive kind.
    pub degenerate: bool,
}

impl GradingDatum {
    pub fn component(&self, k: i64) -> Option<&Subspace> {
        self.components.iter().find(|(j, _)| *j == k).map(|(_, s)| s)
    }

    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.components.iter().map(|(k, s)| (*k, s.dim())).collect()
    }

    /// Columns: component bases in increasing degree.
    fn adapted(&self) -> (QMatrix, Vec<i64>) {
        let n = self.z.len();
        let mut cols = Vec::new();
        let mut degs = Vec::new();
        for (k, s) in &self.components {
            for b in s.basis() {
                cols.push(b.clone());
                degs.push(*k);
            }
        }
        (QMatrix::from_cols(n, &cols), degs)
    }
}

pub fn grading_from_z(g0: &RealLieAlgebra, z: &[Rat]) -> Result<GradingDatum> {
    let n = g0.dim();
    if z.len() != n {
        return Err(Error::DimMismatch(format!("element of length {} in a {}-dimensional algebra", z.len(), n)));
    }
    let m = g0.ad(z);
    let poly = minimal_polynomial(&m);
    let roots = rational_roots(&poly);
    if roots.len() + 1 != poly.len() || roots.iter().any(|r| !r.is_integer()) {
        return Err(Error::NonIntegerGrading);
    }
    let mut components = Vec::new();
    for r in &roots {
        let k = r.to_integer().to_i64().ok_or(Error::NonIntegerGrading)?;
        components.push((k, Subspace::span(n, &m.shift(r).kernel())));
    }
    if components.iter().map(|(_, s)| s.dim()).sum::<usize>() != n {
        return Err(Error::NonIntegerGrading);
    }
    for (k, a) in &components {
        for (l, b) in &components {
            let target = components.iter().find(|(j, _)| *j == k + l).map(|(_, s)| s);
            for x in a.basis() {
                for y in b.basis() {
                    let br = g0.bracket(x, y);
                    let ok = match target {
                        Some(s) => s.contains(&br),
                        None => br.iter().all(|c| c.is_zero()),
                    };
                    if !ok {
                        return Err(Error::NonIntegerGrading);
                    }
                }
            }
        }
    }
    let kind = components.iter().map(|(k, _)| k.unsigned_abs() as usize).max().unwrap_or(0);
    let gd = GradingDatum { z: z.to_vec(), components, kind, degenerate: kind == 0 };
    if !gd.component(0).is_some_and(|s| s.contains(z)) {
        return Err(Error::NonIntegerGrading);
    }
    Ok(gd)
}

/// The unique `Y` with `ad Y = k` on every `g0(k)`, if it exists.
pub fn characteristic_element(g0: &RealLieAlgebra, gd: &GradingDatum) -> Option<Vec<Rat>> {
    let n = g0.dim();
    let (q, degs) = gd.adapted();
    let qinv = q.inverse()?;
    let d = QMatrix::diag(&degs.iter().map(|k| Rat::from_integer((*k).into())).collect::<Vec<_>>());
    let target = q.mul(&d).mul(&qinv);
    let cols: Vec<Vec<Rat>> = (0..n).map(|i| g0.ad_basis(i).entries().to_vec()).collect();
    let system = QMatrix::from_cols(n * n, &cols);
    let y = system.solve(target.entries())?;
    (system.rank() == n).then_some(y)
}

/// `(-1)^k` on `g0(k)`.
pub fn sigma_z(g0: &RealLieAlgebra, gd: &GradingDatum) -> Result<Involution> {
    let (q, degs) = gd.adapted();
    let qinv = q.inverse().ok_or(Error::Singular)?;
    let d = QMatrix::diag(&degs.iter().map(|k| if k % 2 == 0 { Rat::one() } else { -Rat::one() }).collect::<Vec<_>>());
    Involution::new(g0, q.mul(&d).mul(&qinv))
}

/// `theta(Z) = -Z`, and `theta(g0(k)) = g0(-k)` for every `k`.
pub fn grade_reversal_checks(gd: &GradingDatum, theta: &Involution) -> (bool, bool) {
    let tz = theta.mat().mul_vec(&gd.z);
    let by_z = tz.iter().zip(&gd.z).all(|(a, b)| *a == -b.clone());
    let by_components = gd.components.iter().all(|(k, s)| gd.component(-k).is_some_and(|t| s.image(theta.mat()) == *t));
    (by_z, by_components)
}

pub fn is_grade_reversing(gd: &GradingDatum, theta: &Involution) -> bool {
    let (a, b) = grade_reversal_checks(gd, theta);
    a && b
}

/// `(g0, sigma_Z theta; theta)`.
pub fn keps_pair(g0: &RealLieAlgebra, gd: &GradingDatum, theta: &Involution) -> Result<NoncompactPairC> {
    if !is_grade_reversing(gd, theta) {
        return Err(Error::NotGradeReversing);
    }
    let sz = sigma_z(g0, gd)?;
    let sigma = Involution::new(g0, sz.compose(theta).mat().clone())?;
    NoncompactPairC::from_parts(g0.clone(), sigma, theta.clone())
}

/// Basis adapted to `zk + a1 + sum V(lambda)`, with `S`, `T` bases on each root space.
fn root_frame(g: &RealLieAlgebra, rd: &RootDatum) -> Result<(Vec<Vec<Rat>>, Vec<(usize, Vec<Vec<Rat>>, Vec<Vec<Rat>>)>)> {
    let mut fixed: Vec<Vec<Rat>> = rd.zk.basis().to_vec();
    fixed.extend(rd.a1.basis().iter().cloned());
    let mut blocks = Vec::new();
    for sp in &rd.spaces {
        let (s, t) = st_basis(g, rd, sp.root)?;
        blocks.push((sp.root, s, t));
    }
    Ok((fixed, blocks))
}

fn pairing_int(rd: &RootDatum, root: usize, v: &[Rat]) -> Result<i64> {
    let x = rd.pairing(root, v);
    if !x.is_integer() {
        return Err(Error::NotInGamma);
    }
    x.to_integer().to_i64().ok_or(Error::NotInGamma)
}

/// `e^{ad 2 Z_1}` for `Z_1 = (pi/2) v`: `(-1)^{<lambda, v>}` on `V(lambda)`, identity on `zk + a1`.
pub fn parity_operator(g: &RealLieAlgebra, rd: &RootDatum, v: &[Rat]) -> Result<QMatrix> {
    if !rd.in_gamma(v) {
        return Err(Error::NotInGamma);
    }
    let n = g.dim();
    let mut cols: Vec<Vec<Rat>> = rd.zk.basis().to_vec();
    cols.extend(rd.a1.basis().iter().cloned());
    let mut signs = vec![Rat::one(); cols.len()];
    for sp in &rd.spaces {
        let k = pairing_int(rd, sp.root, v)?;
        let s = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
        for b in sp.v.basis() {
            cols.push(b.clone());
            signs.push(s.clone());
        }
    }
    let q = QMatrix::from_cols(n, &cols);
    let qinv = q.inverse().ok_or(Error::Singular)?;
    Ok(q.mul(&QMatrix::diag(&signs)).mul(&qinv))
}

/// `e^{ad Z_1}`: rotation by `(pi/2) <lambda, v>` on each `span(S_i, T_i)`.
pub fn rotation_operator(g: &RealLieAlgebra, rd: &RootDatum, v: &[Rat]) -> Result<QMatrix> {
    if !rd.in_gamma(v) {
        return Err(Error::NotInGamma);
    }
    let n = g.dim();
    let (fixed, blocks) = root_frame(g, rd)?;
    let mut src = fixed.clone();
    let mut dst = fixed;
    for (root, s, t) in blocks {
        let k = pairing_int(rd, root, v)?.rem_euclid(4);
        let (c, sn) = [(1, 0), (0, 1), (-1, 0), (0, -1)][k as usize];
        let (c, sn) = (Rat::from_integer(c.into()), Rat::from_integer(sn.into()));
        for (si, ti) in s.iter().zip(&t) {
            let lin = |a: &Rat, x: &[Rat], b: &Rat, y: &[Rat]| -> Vec<Rat> { x.iter().zip(y).map(|(p, q)| a * p + b * q).collect() };
            src.push(si.clone());
            dst.push(lin(&c, si, &sn, ti));
            src.push(ti.clone());
            dst.push(lin(&-sn.clone(), si, &c, ti));
        }
    }
    let q = QMatrix::from_cols(n, &src);
    let qinv = q.inverse().ok_or(Error::Singular)?;
    Ok(QMatrix::from_cols(n, &dst).mul(&qinv))
}

/// Everything built from one `Gamma` vector.
#[derive(Clone, Debug, PartialEq)]
pub struct KepsConstruction {
    pub triad: CompactTriad,
    pub pair: NoncompactPairC,
    pub grading: GradingDatum,
    /// `sigma = sigma_Z theta` on the dual pair.
    pub sigma_matches: bool,
    /// `max <lambda, v>` over the roots.
    pub expected_kind: usize,
    /// `v = 0`: Riemannian triad and trivial grading.
    pub degenerate: bool,
}

/// Characteristic element of the dual pair: `-i (v . A)` in the twisted basis.
pub fn twisted_z(change: &QMatrix, rd: &RootDatum, v: &[Rat]) -> Result<Vec<Rat>> {
    let pinv = change.inverse().ok_or(Error::Singular)?;
    Ok(pinv.mul_vec(&rd.element(v)).into_iter().map(|x| -x).collect())
}

pub fn keps_from_gamma(g: &RealLieAlgebra, theta1: &Involution, rd: &RootDatum, v: &[Rat]) -> Result<KepsConstruction> {
    let pv = parity_operator(g, rd, v)?;
    let theta2 = Involution::new(g, pv.mul(theta1.mat()))?;
    let triad = CompactTriad::from_parts(g.clone(), theta1.clone(), theta2)?;
    let star = phi_twist(&triad)?;
    let z = twisted_z(&star.change, rd, v)?;
    let pair = star.object;
    let grading = grading_from_z(&pair.g0, &z)?;
    let sz = sigma_z(&pair.g0, &grading)?;
    let sigma_matches = sz.compose(&pair.theta) == pair.sigma;
    let expected_kind = (0..rd.roots.len()).map(|k| rd.pairing(k, v).abs().to_integer().to_usize().unwrap_or(0)).max().unwrap_or(0);
    let degenerate = v.iter().all(|x| x.is_zero());
    Ok(KepsConstruction { triad, pair, grading, sigma_matches, expected_kind, degenerate })
}

/// Whether `theta2` is the parity twist of `theta1` by `v`.
pub fn theta_sim_witness_check(t: &CompactTriad, rd: &RootDatum, v: &[Rat]) -> Result<bool> {
    let pv = parity_operator(&t.g, rd, v)?;
    Ok(pv.mul(t.theta1.mat()) == *t.theta2.mat())
}

/// Searches the parity classes `Gamma / 2 Gamma` for a `v` with `theta2` the
/// parity twist of `theta1`. `None` means no witness relative to this `a1`.
pub fn search_parity_witness(t: &CompactTriad, rd: &RootDatum) -> Result<Option<Vec<Rat>>> {
    let r = rd.gamma.len();
    if r > 16 {
        return Err(Error::BadParams(format!("lattice rank {r} too large for exhaustive parity search")));
    }
    for mask in 0u32..(1u32 << r) {
        let mut v = vec![Rat::zero(); rd.rank()];
        for (j, b) in rd.gamma.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += bi;
                }
            }
        }
        if theta_sim_witness_check(t, rd, &v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Carries a map of the common complexification between two real forms with
/// recorded bases `ea`, `eb`; `None` if the result is not real.
pub fn transfer_map(phi: &QMatrix, ea: &GMatrix, eb: &GMatrix) -> Option<QMatrix> {
    eb.inverse()?.mul(&phi.to_gauss()).mul(ea).to_real()
}

/// Witness `phi(t) -> dual_pair(phi(t))` induced by a triad witness `t -> t^d`.
pub fn pair_dual_witness(t: &CompactTriad, triad_witness: &QMatrix) -> Result<(NoncompactPairC, NoncompactPairC, QMatrix)> {
    let star = phi_twist(t)?;
    let dual = dual_pair_twist(&star.object)?;
    let eb = star.basis_record.mul(&dual.basis_record);
    let w = transfer_map(triad_witness, &star.basis_record, &eb).ok_or(Error::Singular)?;
    Ok((star.object, dual.object, w))
}
