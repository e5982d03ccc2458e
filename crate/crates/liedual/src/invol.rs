//! Involutions, joint eigenspace splittings, and the two symmetric objects:
//! commutative compact triads and non-compact pairs with a Cartan involution.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_positive_definite, QMatrix, Rat, Signature};
use crate::ideals::minimal_ideals;
use crate::lie::{RealLieAlgebra, SubalgebraView, Subspace};

/// Involutive automorphism, stored by its matrix on the algebra's basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Involution {
    mat: QMatrix,
}

impl Involution {
    /// Checks `mat^2 = I` and that `mat` preserves brackets.
    pub fn new(g: &RealLieAlgebra, mat: QMatrix) -> Result<Self> {
        if mat.rows() != g.dim() || mat.cols() != g.dim() {
            return Err(Error::DimMismatch(format!("{}x{} matrix on a {}-dimensional algebra", mat.rows(), mat.cols(), g.dim())));
        }
        if !mat.mul(&mat).is_identity() {
            return Err(Error::NotInvolution);
        }
        if !g.is_automorphism(&mat) {
            return Err(Error::NotAutomorphism);
        }
        Ok(Involution { mat })
    }

    /// Wraps a matrix already known to be an involutive automorphism.
    pub fn unchecked(mat: QMatrix) -> Self {
        Involution { mat }
    }

    pub fn identity(n: usize) -> Self {
        Involution { mat: QMatrix::identity(n) }
    }

    pub fn mat(&self) -> &QMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn commutes_with(&self, o: &Involution) -> bool {
        self.mat.mul(&o.mat) == o.mat.mul(&self.mat)
    }

    /// `self ∘ o`; an involution when the two commute.
    pub fn compose(&self, o: &Involution) -> Involution {
        Involution { mat: self.mat.mul(&o.mat) }
    }

    /// Whether this is an involutive automorphism of `g`.
    pub fn is_valid_for(&self, g: &RealLieAlgebra) -> bool {
        self.mat.rows() == g.dim() && self.mat.mul(&self.mat).is_identity() && g.is_automorphism(&self.mat)
    }

    /// Matrix in the basis given by the columns of `p`.
    pub fn rebase(&self, p: &QMatrix, pinv: &QMatrix) -> Involution {
        Involution { mat: pinv.mul(&self.mat).mul(p) }
    }
}

/// `(+1, -1)` eigenspaces.
pub fn eigensplit(inv: &Involution) -> (Subspace, Subspace) {
    let one = Rat::one();
    let plus = inv.mat.shift(&one).kernel();
    let minus = inv.mat.shift(&-one).kernel();
    let n = inv.dim();
    (Subspace::span(n, &plus), Subspace::span(n, &minus))
}

/// Columns: canonical basis of the +1 space followed by that of the -1 space.
pub fn adapted_basis(inv: &Involution) -> (QMatrix, usize) {
    let (plus, minus) = eigensplit(inv);
    let mut cols: Vec<Vec<Rat>> = plus.basis().to_vec();
    cols.extend(minus.basis().iter().cloned());
    (QMatrix::from_cols(inv.dim(), &cols), plus.dim())
}

/// Joint eigenspaces of two commuting involutions, indexed by the sign pair.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDecomposition {
    /// `(+, +)`
    pub pp: Subspace,
    /// `(+, -)`
    pub pm: Subspace,
    /// `(-, +)`
    pub mp: Subspace,
    /// `(-, -)`
    pub mm: Subspace,
}

impl JointDecomposition {
    pub fn dims(&self) -> [usize; 4] {
        [self.pp.dim(), self.pm.dim(), self.mp.dim(), self.mm.dim()]
    }

    /// Whether the four pieces form a direct sum of the whole space.
    pub fn is_direct_sum(&self) -> bool {
        let n = self.pp.ambient_dim();
        let all = self.pp.sum(&self.pm).sum(&self.mp).sum(&self.mm);
        self.dims().iter().sum::<usize>() == n && all.dim() == n
    }
}

pub fn joint_split(i1: &Involution, i2: &Involution) -> Result<JointDecomposition> {
    if i1.dim() != i2.dim() {
        return Err(Error::DimMismatch("involutions on different dimensions".into()));
    }
    if !i1.commutes_with(i2) {
        return Err(Error::NotCommuting);
    }
    let (p1, m1) = eigensplit(i1);
    let (p2, m2) = eigensplit(i2);
    Ok(JointDecomposition { pp: p1.intersect(&p2), pm: p1.intersect(&m2), mp: m1.intersect(&p2), mm: m1.intersect(&m2) })
}

/// Whether `(x, y) -> -B(x, theta y)` is positive definite.
pub fn is_cartan(g0: &RealLieAlgebra, theta: &Involution) -> bool {
    if !theta.is_valid_for(g0) {
        return false;
    }
    let form = g0.killing_form().mul(theta.mat()).scale(&-Rat::one());
    is_positive_definite(&form).unwrap_or(false)
}

/// Commutative compact semisimple symmetric triad `(g, theta1, theta2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CompactTriad {
    pub g: RealLieAlgebra,
    pub theta1: Involution,
    pub theta2: Involution,
}

/// Non-compact semisimple symmetric pair `(g0, sigma)` with a commuting Cartan involution.
#[derive(Clone, Debug, PartialEq)]
pub struct NoncompactPairC {
    pub g0: RealLieAlgebra,
    pub sigma: Involution,
    pub theta: Involution,
}

impl CompactTriad {
    pub fn new(g: RealLieAlgebra, theta1: QMatrix, theta2: QMatrix) -> Result<Self> {
        let theta1 = Involution::new(&g, theta1)?;
        let theta2 = Involution::new(&g, theta2)?;
        Self::from_parts(g, theta1, theta2)
    }

    pub fn from_parts(g: RealLieAlgebra, theta1: Involution, theta2: Involution) -> Result<Self> {
        if !g.is_compact() {
            return Err(Error::NotCompact);
        }
        if !theta1.commutes_with(&theta2) {
            return Err(Error::NotCommuting);
        }
        Ok(CompactTriad { g, theta1, theta2 })
    }

    /// Rebased so that `theta1 = diag(I, -I)` on its canonical adapted basis.
    pub fn normalized(&self) -> Result<Self> {
        let (p, _) = adapted_basis(&self.theta1);
        self.rebase(&p)
    }

    pub fn rebase(&self, p: &QMatrix) -> Result<Self> {
        let pinv = p.inverse().ok_or(Error::Singular)?;
        Ok(CompactTriad { g: self.g.rebase(p)?, theta1: self.theta1.rebase(p, &pinv), theta2: self.theta2.rebase(p, &pinv) })
    }

    /// Every defining invariant, by name.
    pub fn validate(&self) -> Vec<(String, bool)> {
        let g = &self.g;
        vec![
            ("jacobi".into(), g.check_jacobi()),
            ("ambient_consistent".into(), g.ambient_consistent()),
            ("compact".into(), g.is_compact()),
            ("theta1_involutive_automorphism".into(), self.theta1.is_valid_for(g)),
            ("theta2_involutive_automorphism".into(), self.theta2.is_valid_for(g)),
            ("commuting".into(), self.theta1.commutes_with(&self.theta2)),
        ]
    }
}

impl NoncompactPairC {
    pub fn new(g0: RealLieAlgebra, sigma: QMatrix, theta: QMatrix) -> Result<Self> {
        let sigma = Involution::new(&g0, sigma)?;
        let theta = Involution::new(&g0, theta)?;
        Self::from_parts(g0, sigma, theta)
    }

    pub fn from_parts(g0: RealLieAlgebra, sigma: Involution, theta: Involution) -> Result<Self> {
        if !is_cartan(&g0, &theta) {
            return Err(Error::NotCartan);
        }
        if !sigma.commutes_with(&theta) {
            return Err(Error::NotCommuting);
        }
        Ok(NoncompactPairC { g0, sigma, theta })
    }

    /// Rebased so that `theta = diag(I, -I)` on its canonical adapted basis.
    pub fn normalized(&self) -> Result<Self> {
        let (p, _) = adapted_basis(&self.theta);
        self.rebase(&p)
    }

    pub fn rebase(&self, p: &QMatrix) -> Result<Self> {
        let pinv = p.inverse().ok_or(Error::Singular)?;
        Ok(NoncompactPairC { g0: self.g0.rebase(p)?, sigma: self.sigma.rebase(p, &pinv), theta: self.theta.rebase(p, &pinv) })
    }

    pub fn is_riemannian(&self) -> bool {
        self.sigma == self.theta
    }

    /// Every defining invariant, by name.
    pub fn validate(&self) -> Vec<(String, bool)> {
        let g = &self.g0;
        vec![
            ("jacobi".into(), g.check_jacobi()),
            ("ambient_consistent".into(), g.ambient_consistent()),
            ("semisimple".into(), g.is_semisimple()),
            ("sigma_involutive_automorphism".into(), self.sigma.is_valid_for(g)),
            ("theta_involutive_automorphism".into(), self.theta.is_valid_for(g)),
            ("theta_cartan".into(), is_cartan(g, &self.theta)),
            ("commuting".into(), self.sigma.commutes_with(&self.theta)),
        ]
    }
}

/// Common view of triads and pairs: an algebra with a distinguished involution
/// (`theta1` or `theta`) and a second one (`theta2` or `sigma`).
pub trait SymmetricObject {
    fn algebra(&self) -> &RealLieAlgebra;
    fn distinguished(&self) -> &Involution;
    fn other(&self) -> &Involution;
}

impl SymmetricObject for CompactTriad {
    fn algebra(&self) -> &RealLieAlgebra {
        &self.g
    }
    fn distinguished(&self) -> &Involution {
        &self.theta1
    }
    fn other(&self) -> &Involution {
        &self.theta2
    }
}

impl SymmetricObject for NoncompactPairC {
    fn algebra(&self) -> &RealLieAlgebra {
        &self.g0
    }
    fn distinguished(&self) -> &Involution {
        &self.theta
    }
    fn other(&self) -> &Involution {
        &self.sigma
    }
}

/// Whether `phi` is a Lie algebra isomorphism intertwining both involutions.
pub fn verify_equivalence_witness<S: SymmetricObject>(src: &S, dst: &S, phi: &QMatrix) -> Result<bool> {
    let (a, b) = (src.algebra(), dst.algebra());
    if a.dim() != b.dim() || phi.rows() != b.dim() || phi.cols() != a.dim() {
        return Err(Error::DimMismatch(format!(
            "witness {}x{} between algebras of dimension {} and {}",
            phi.rows(),
            phi.cols(),
            a.dim(),
            b.dim()
        )));
    }
    let intertwines = |x: &Involution, y: &Involution| phi.mul(x.mat()) == y.mat().mul(phi);
    Ok(intertwines(src.distinguished(), dst.distinguished())
        && intertwines(src.other(), dst.other())
        && phi.inverse().is_some()
        && a.is_homomorphism_to(b, phi))
}

/// Whether `phi` is a bracket-preserving bijection between two algebras.
pub fn verify_isomorphism(src: &RealLieAlgebra, dst: &RealLieAlgebra, phi: &QMatrix) -> bool {
    src.dim() == dst.dim() && phi.inverse().is_some() && src.is_homomorphism_to(dst, phi)
}

/// Invariants of a fixed-point subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViewProfile {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub killing: Signature,
    /// Dimensions of the centre's `+1` and `-1` parts under the other involution.
    pub center_split: (usize, usize),
}

/// Equivalence invariants of a triad or pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub dim: usize,
    /// Joint eigenspace dimensions for (distinguished, other): `(+,+), (+,-), (-,+), (-,-)`.
    pub joint_dims: [usize; 4],
    /// Fixed points of the distinguished involution.
    pub distinguished_view: ViewProfile,
    /// Fixed points of the other involution.
    pub other_view: ViewProfile,
    /// Sorted dimensions of the minimal ideals.
    pub minimal_ideal_dims: Vec<usize>,
}

impl Profile {
    /// Names of the fields on which two profiles differ.
    pub fn differences(&self, o: &Profile) -> Vec<&'static str> {
        let mut d = Vec::new();
        if self.dim != o.dim {
            d.push("dim");
        }
        if self.joint_dims != o.joint_dims {
            d.push("joint_dims");
        }
        if self.distinguished_view != o.distinguished_view {
            d.push("distinguished_view");
        }
        if self.other_view != o.other_view {
            d.push("other_view");
        }
        if self.minimal_ideal_dims != o.minimal_ideal_dims {
            d.push("minimal_ideal_dims");
        }
        d
    }
}

/// Fixed-point subalgebra of an involution.
pub fn fixed_view(g: &RealLieAlgebra, inv: &Involution) -> SubalgebraView {
    let (plus, _) = eigensplit(inv);
    SubalgebraView::new(g, plus).expect("fixed points of an automorphism form a subalgebra")
}

fn view_profile(g: &RealLieAlgebra, inv: &Involution, by: &Involution) -> ViewProfile {
    let v = fixed_view(g, inv);
    let center = v.center();
    let (plus, minus) = eigensplit(by);
    ViewProfile {
        dim: v.space.dim(),
        center_dim: center.dim(),
        derived_dim: v.derived().dim(),
        killing: v.algebra.killing_signature(),
        center_split: (center.intersect(&plus).dim(), center.intersect(&minus).dim()),
    }
}

pub fn invariant_profile<S: SymmetricObject>(obj: &S) -> Result<Profile> {
    let g = obj.algebra();
    let (d, o) = (obj.distinguished(), obj.other());
    let mut dims: Vec<usize> = minimal_ideals(g)?.ideals.iter().map(|s| s.dim()).collect();
    dims.sort_unstable();
    Ok(Profile {
        dim: g.dim(),
        joint_dims: joint_split(d, o)?.dims(),
        distinguished_view: view_profile(g, d, o),
        other_view: view_profile(g, o, d),
        minimal_ideal_dims: dims,
    })
}

/// Entry-wise test that a rational matrix is zero off a block diagonal of the given sizes.
pub fn is_block_diagonal(m: &QMatrix, first: usize) -> bool {
    let n = m.rows();
    (0..n).all(|r| (0..n).all(|c| (r < first) == (c < first) || m[(r, c)].is_zero()))
}

/// `diag(I_p, -I_q)`.
pub fn sign_diag(p: usize, q: usize) -> QMatrix {
    let mut v = vec![Rat::one(); p];
    v.extend(std::iter::repeat_n(-Rat::one(), q));
    QMatrix::diag(&v)
}

/// Convenience used by tests and the catalog.
pub fn involution_from_fn(g: &RealLieAlgebra, f: impl Fn(&[Rat]) -> Vec<Rat>) -> Result<Involution> {
    let n = g.dim();
    let cols: Vec<Vec<Rat>> = (0..n).map(|i| f(&crate::exact::unit(n, i))).collect();
    Involution::new(g, QMatrix::from_cols(n, &cols))
}
