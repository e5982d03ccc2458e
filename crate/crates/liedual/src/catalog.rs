//! Matrix families, their involutions, explicit isomorphisms between
//! realizations, and the fixture suite.

use std::fmt;

use num_traits::{One, Zero};

use crate::duality::{associated_triad, dual_triad, phi};
use crate::error::{Error, Result};
use crate::exact::{gi, GMatrix, GaussRat, QMatrix, Rat};
use crate::ideals::TypeTag;
use crate::invol::{fixed_view, CompactTriad, Involution, NoncompactPairC};
use crate::lie::{AmbientCoords, RealLieAlgebra};

fn re(x: i64) -> GaussRat {
    GaussRat::new(Rat::from_integer(x.into()), Rat::zero())
}

/// Matrix unit `E_ij` of size `n`.
pub fn e_ij(n: usize, i: usize, j: usize) -> GMatrix {
    GMatrix::from_fn(n, n, |r, c| if r == i && c == j { re(1) } else { re(0) })
}

/// `diag(I_m, -I_n)`
pub fn i_mn(m: usize, n: usize) -> GMatrix {
    let v: Vec<GaussRat> = (0..m + n).map(|k| if k < m { re(1) } else { re(-1) }).collect();
    GMatrix::diag(&v)
}

/// `[[0, -I_m], [I_m, 0]]`
pub fn j_m(m: usize) -> GMatrix {
    GMatrix::from_fn(2 * m, 2 * m, |r, c| {
        if r < m && c == r + m {
            re(-1)
        } else if r >= m && c + m == r {
            re(1)
        } else {
            re(0)
        }
    })
}

/// `diag(J_m, J_n)`
pub fn j_mn(m: usize, n: usize) -> GMatrix {
    j_m(m).direct_sum(&j_m(n))
}

/// `[[0, I_{2p}], [I_{2p}, 0]]`
pub fn j_prime(p: usize) -> GMatrix {
    let h = 2 * p;
    GMatrix::from_fn(2 * h, 2 * h, |r, c| if (r < h && c == r + h) || (r >= h && c + h == r) { re(1) } else { re(0) })
}

/// `diag(I_{2p}, -i I_{2q})`
pub fn i_prime(p: usize, q: usize) -> GMatrix {
    let v: Vec<GaussRat> = (0..2 * p + 2 * q).map(|k| if k < 2 * p { re(1) } else { -gi() }).collect();
    GMatrix::diag(&v)
}

fn from_ambient(basis: Vec<GMatrix>) -> RealLieAlgebra {
    RealLieAlgebra::from_ambient(basis).expect("family basis closes under the commutator")
}

/// Compact `so(n)` on `E_ij - E_ji`, `i < j`.
pub fn so_n(n: usize) -> RealLieAlgebra {
    let mut b = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            b.push(e_ij(n, i, j).sub(&e_ij(n, j, i)));
        }
    }
    from_ambient(b)
}

/// `su(n)` on `i(E_kk - E_{k+1,k+1})`, `E_jk - E_kj`, `i(E_jk + E_kj)`.
pub fn su_n(n: usize) -> RealLieAlgebra {
    let i = gi();
    let mut b = Vec::new();
    for k in 0..n - 1 {
        b.push(e_ij(n, k, k).sub(&e_ij(n, k + 1, k + 1)).scale(&i));
    }
    for j in 0..n {
        for k in j + 1..n {
            b.push(e_ij(n, j, k).sub(&e_ij(n, k, j)));
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            b.push(e_ij(n, j, k).add(&e_ij(n, k, j)).scale(&i));
        }
    }
    from_ambient(b)
}

/// `sl(n, R)` on `E_kk - E_{k+1,k+1}`, then `E_ij` (`i != j`) row by row.
pub fn sl_n_r(n: usize) -> RealLieAlgebra {
    let mut b = Vec::new();
    for k in 0..n - 1 {
        b.push(e_ij(n, k, k).sub(&e_ij(n, k + 1, k + 1)));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                b.push(e_ij(n, i, j));
            }
        }
    }
    from_ambient(b)
}

/// `so(p, q)` as `[[A, B], [B^t, D]]`: `E_ij - E_ji` inside a block, `E_ij + E_ji` across.
pub fn so_pq(p: usize, q: usize) -> RealLieAlgebra {
    let n = p + q;
    let mut b = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let cross = (i < p) != (j < p);
            b.push(if cross { e_ij(n, i, j).add(&e_ij(n, j, i)) } else { e_ij(n, i, j).sub(&e_ij(n, j, i)) });
        }
    }
    from_ambient(b)
}

/// Real matrix algebra `{X in M(n, C) : constraint(X) = 0}` for a real-linear constraint.
pub fn real_matrix_algebra(n: usize, constraint: impl Fn(&GMatrix) -> GMatrix) -> RealLieAlgebra {
    let gens: Vec<GMatrix> = (0..n * n)
        .flat_map(|k| {
            let (r, c) = (k / n, k % n);
            [e_ij(n, r, c), e_ij(n, r, c).scale(&gi())]
        })
        .collect();
    let flatten = |m: &GMatrix| -> Vec<Rat> { m.entries().iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect() };
    let cols: Vec<Vec<Rat>> = gens.iter().map(|g| flatten(&constraint(g))).collect();
    let sys = QMatrix::from_cols(cols[0].len(), &cols);
    let basis: Vec<GMatrix> = sys
        .kernel()
        .into_iter()
        .map(|v| v.iter().zip(&gens).fold(GMatrix::zeros(n, n), |acc, (c, g)| acc.add(&g.scale(&GaussRat::new(c.clone(), Rat::zero())))))
        .collect();
    from_ambient(basis)
}

/// `u(p, q) = {X : conj(X)^t I_{p,q} + I_{p,q} X = 0}`
pub fn u_pq(p: usize, q: usize) -> RealLieAlgebra {
    let i = i_mn(p, q);
    real_matrix_algebra(p + q, |x| x.conj().transpose().mul(&i).add(&i.mul(x)))
}

/// `gl(n, R)`
pub fn gl_n_r(n: usize) -> RealLieAlgebra {
    real_matrix_algebra(n, |x| x.map(|z| GaussRat::new(Rat::zero(), z.im.clone())))
}

/// Involution of a matrix-realized algebra induced by a map on matrices.
pub fn ambient_involution(g: &RealLieAlgebra, f: impl Fn(&GMatrix) -> GMatrix) -> Result<Involution> {
    let m = ambient_map(g, g, f)?;
    Involution::new(g, m)
}

/// Coordinate matrix of a map between matrix-realized algebras.
pub fn ambient_map(src: &RealLieAlgebra, dst: &RealLieAlgebra, f: impl Fn(&GMatrix) -> GMatrix) -> Result<QMatrix> {
    let a = src.ambient().ok_or_else(|| Error::BadParams("source has no matrix realization".into()))?;
    let b = dst.ambient().ok_or_else(|| Error::BadParams("target has no matrix realization".into()))?;
    let coords = AmbientCoords::new(b)?;
    let cols = a
        .iter()
        .map(|x| coords.coords(&f(x)).ok_or_else(|| Error::BadParams("map leaves the target algebra".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(QMatrix::from_cols(dst.dim(), &cols))
}

/// `X -> M X M^{-1}`
pub fn conjugation_by(m: &GMatrix) -> impl Fn(&GMatrix) -> GMatrix {
    let m = m.clone();
    let inv = m.inverse().expect("invertible conjugating matrix");
    move |x| m.mul(x).mul(&inv)
}

/// Block permutation on `u^k`: output block `i` is input block `perm[i]`.
pub fn block_permutation(block: usize, perm: &[usize]) -> QMatrix {
    let n = block * perm.len();
    let mut m = QMatrix::zeros(n, n);
    for (i, &src) in perm.iter().enumerate() {
        for a in 0..block {
            m[(i * block + a, src * block + a)] = Rat::one();
        }
    }
    m
}

/// Complex conjugation on `su(2)`: `diag(-1, 1, -1)` on the standard basis.
pub fn nu_su2() -> QMatrix {
    QMatrix::diag(&[-Rat::one(), Rat::one(), -Rat::one()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    So(usize),
    Su(usize),
    SlR(usize),
    SoPQ(usize, usize),
    /// `su(2)^k`
    Su2Power(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvTag {
    Identity,
    AdIPQ(usize, usize),
    AdJM(usize),
    AdJPQ(usize, usize),
    AdJPrime2P(usize),
    NegTranspose,
    Conjugation,
    /// `X -> I_{p,q} conj(X) I_{p,q}`
    ConjIPQ(usize, usize),
    /// `X -> -I_{p,q} X^t I_{p,q}`
    NegTransposeIPQ(usize, usize),
    Rho,
    NuOplusNu,
    RhoCompose,
    Rho12_34,
    Rho14_23,
    Rho13_24,
    Rho13,
    Rho34,
}

/// One algebra with two involutions, or a direct sum of such.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Simple { family: Family, invs: [InvTag; 2] },
    Sum(Vec<FamilySpec>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Triad(CompactTriad),
    Pair(NoncompactPairC),
}

impl Object {
    pub fn algebra(&self) -> &RealLieAlgebra {
        match self {
            Object::Triad(t) => &t.g,
            Object::Pair(p) => &p.g0,
        }
    }

    pub fn involutions(&self) -> [&Involution; 2] {
        match self {
            Object::Triad(t) => [&t.theta1, &t.theta2],
            Object::Pair(p) => [&p.sigma, &p.theta],
        }
    }

    pub fn as_triad(&self) -> Option<&CompactTriad> {
        match self {
            Object::Triad(t) => Some(t),
            Object::Pair(_) => None,
        }
    }

    pub fn as_pair(&self) -> Option<&NoncompactPairC> {
        match self {
            Object::Pair(p) => Some(p),
            Object::Triad(_) => None,
        }
    }

    pub fn validate(&self) -> Vec<(String, bool)> {
        match self {
            Object::Triad(t) => t.validate(),
            Object::Pair(p) => p.validate(),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

impl Family {
    pub fn build(&self) -> Result<RealLieAlgebra> {
        Ok(match *self {
            Family::So(n) if (3..=8).contains(&n) => so_n(n),
            Family::Su(n) if (2..=8).contains(&n) => su_n(n),
            Family::SlR(n) if (2..=8).contains(&n) => sl_n_r(n),
            Family::SoPQ(p, q) if p >= 1 && q >= 1 && p + q >= 3 && p + q <= 8 => so_pq(p, q),
            Family::Su2Power(k) if (1..=4).contains(&k) => {
                let u = su_n(2);
                (1..k).fold(u.clone(), |acc, _| acc.direct_sum(&u))
            }
            _ => return Err(bad(format!("unsupported family parameters {self}"))),
        })
    }

    /// Size of the defining matrices.
    fn matrix_size(&self) -> Option<usize> {
        match *self {
            Family::So(n) | Family::Su(n) | Family::SlR(n) => Some(n),
            Family::SoPQ(p, q) => Some(p + q),
            Family::Su2Power(_) => None,
        }
    }
}

impl InvTag {
    pub fn build(&self, family: &Family, g: &RealLieAlgebra) -> Result<Involution> {
        let size = family.matrix_size();
        let need = |n: usize| -> Result<()> {
            if size == Some(n) {
                Ok(())
            } else {
                Err(bad(format!("{self} needs {n}x{n} matrices")))
            }
        };
        let power = match family {
            Family::Su2Power(k) => Some(*k),
            _ => None,
        };
        let need_power = |k: usize| -> Result<()> {
            if power == Some(k) {
                Ok(())
            } else {
                Err(bad(format!("{self} needs su(2)^{k}")))
            }
        };
        match *self {
            InvTag::Identity => Ok(Involution::identity(g.dim())),
            InvTag::AdIPQ(p, q) => {
                need(p + q)?;
                ambient_involution(g, conjugation_by(&i_mn(p, q)))
            }
            InvTag::AdJM(m) => {
                need(2 * m)?;
                ambient_involution(g, conjugation_by(&j_m(m)))
            }
            InvTag::AdJPQ(p, q) => {
                need(2 * p + 2 * q)?;
                ambient_involution(g, conjugation_by(&j_mn(p, q)))
            }
            InvTag::AdJPrime2P(p) => {
                need(4 * p)?;
                ambient_involution(g, conjugation_by(&j_prime(p)))
            }
            InvTag::NegTranspose => {
                if size.is_none() {
                    return Err(bad("neg_transpose needs a matrix family"));
                }
                ambient_involution(g, |x| x.transpose().scale(&re(-1)))
            }
            InvTag::Conjugation => match family {
                Family::Su2Power(k) => {
                    let nu = nu_su2();
                    let m = (1..*k).fold(nu.clone(), |acc, _| acc.direct_sum(&nu));
                    Involution::new(g, m)
                }
                _ => ambient_involution(g, |x| x.conj()),
            },
            InvTag::ConjIPQ(p, q) => {
                need(p + q)?;
                let i = i_mn(p, q);
                ambient_involution(g, move |x| i.mul(&x.conj()).mul(&i))
            }
            InvTag::NegTransposeIPQ(p, q) => {
                need(p + q)?;
                let i = i_mn(p, q);
                ambient_involution(g, move |x| i.mul(&x.transpose()).mul(&i).scale(&re(-1)))
            }
            InvTag::Rho => {
                need_power(2)?;
                Involution::new(g, block_permutation(3, &[1, 0]))
            }
            InvTag::NuOplusNu => {
                need_power(2)?;
                Involution::new(g, nu_su2().direct_sum(&nu_su2()))
            }
            InvTag::RhoCompose => {
                need_power(2)?;
                Involution::new(g, block_permutation(3, &[1, 0]).mul(&nu_su2().direct_sum(&nu_su2())))
            }
            InvTag::Rho12_34 => {
                need_power(4)?;
                Involution::new(g, block_permutation(3, &[1, 0, 3, 2]))
            }
            InvTag::Rho14_23 => {
                need_power(4)?;
                Involution::new(g, block_permutation(3, &[3, 2, 1, 0]))
            }
            InvTag::Rho13_24 => {
                need_power(4)?;
                Involution::new(g, block_permutation(3, &[2, 3, 0, 1]))
            }
            InvTag::Rho13 => {
                need_power(4)?;
                Involution::new(g, block_permutation(3, &[2, 1, 0, 3]))
            }
            InvTag::Rho34 => {
                need_power(4)?;
                Involution::new(g, block_permutation(3, &[0, 1, 3, 2]))
            }
        }
    }
}

impl FamilySpec {
    pub fn simple(family: Family, a: InvTag, b: InvTag) -> Self {
        FamilySpec::Simple { family, invs: [a, b] }
    }

    /// Algebra and the two involutions, in spec order.
    pub fn parts(&self) -> Result<(RealLieAlgebra, Involution, Involution)> {
        match self {
            FamilySpec::Simple { family, invs } => {
                let g = family.build()?;
                let a = invs[0].build(family, &g)?;
                let b = invs[1].build(family, &g)?;
                Ok((g, a, b))
            }
            FamilySpec::Sum(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| bad("empty direct sum"))?.parts()?;
                it.try_fold(first, |(g, a, b), s| {
                    let (h, c, d) = s.parts()?;
                    Ok((g.direct_sum(&h), Involution::unchecked(a.mat().direct_sum(c.mat())), Involution::unchecked(b.mat().direct_sum(d.mat()))))
                })
            }
        }
    }

    /// A compact algebra gives the triad `(g, first, second)`; otherwise the
    /// pair `(g0, first; second)` with `second` the Cartan involution.
    pub fn build(&self) -> Result<Object> {
        let (g, a, b) = self.parts()?;
        if g.is_compact() {
            Ok(Object::Triad(CompactTriad::from_parts(g, a, b)?))
        } else {
            Ok(Object::Pair(NoncompactPairC::from_parts(g, a, b)?))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('+').map(str::trim).collect();
        if parts.len() > 1 {
            return Ok(FamilySpec::Sum(parts.into_iter().map(Self::parse).collect::<Result<_>>()?));
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(bad(format!("expected `family inv inv`, got `{s}`")));
        }
        let family = parse_family(toks[0])?;
        Ok(FamilySpec::Simple { family, invs: [parse_inv(toks[1])?, parse_inv(toks[2])?] })
    }
}

fn split_call(tok: &str) -> Result<(&str, Vec<usize>)> {
    match tok.find('(') {
        None => Ok((tok, Vec::new())),
        Some(k) => {
            let name = &tok[..k];
            let inner = tok[k + 1..].strip_suffix(')').ok_or_else(|| bad(format!("unbalanced `{tok}`")))?;
            let args = inner
                .split(',')
                .map(|a| a.trim().parse::<usize>().map_err(|_| bad(format!("bad parameter in `{tok}`"))))
                .collect::<Result<Vec<_>>>()?;
            Ok((name, args))
        }
    }
}

fn parse_family(tok: &str) -> Result<Family> {
    let (name, args) = split_call(tok)?;
    Ok(match (name, args.as_slice()) {
        ("so", [n]) => Family::So(*n),
        ("so", [p, q]) => Family::SoPQ(*p, *q),
        ("su", [n]) => Family::Su(*n),
        ("sl", [n]) => Family::SlR(*n),
        ("su2^", [k]) | ("su2pow", [k]) => Family::Su2Power(*k),
        _ => return Err(bad(format!("unknown family `{tok}`"))),
    })
}

fn parse_inv(tok: &str) -> Result<InvTag> {
    let (name, args) = split_call(tok)?;
    Ok(match (name, args.as_slice()) {
        ("id", []) => InvTag::Identity,
        ("ad_i", [p, q]) => InvTag::AdIPQ(*p, *q),
        ("ad_j", [m]) => InvTag::AdJM(*m),
        ("ad_j", [p, q]) => InvTag::AdJPQ(*p, *q),
        ("ad_jprime", [p]) => InvTag::AdJPrime2P(*p),
        ("neg_transpose", []) => InvTag::NegTranspose,
        ("conj", []) => InvTag::Conjugation,
        ("conj_i", [p, q]) => InvTag::ConjIPQ(*p, *q),
        ("neg_transpose_i", [p, q]) => InvTag::NegTransposeIPQ(*p, *q),
        ("rho", []) => InvTag::Rho,
        ("nu_nu", []) => InvTag::NuOplusNu,
        ("rho_nu", []) => InvTag::RhoCompose,
        ("rho_12_34", []) => InvTag::Rho12_34,
        ("rho_14_23", []) => InvTag::Rho14_23,
        ("rho_13_24", []) => InvTag::Rho13_24,
        ("rho_13", []) => InvTag::Rho13,
        ("rho_34", []) => InvTag::Rho34,
        _ => return Err(bad(format!("unknown involution `{tok}`"))),
    })
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::So(n) => write!(f, "so({n})"),
            Family::Su(n) => write!(f, "su({n})"),
            Family::SlR(n) => write!(f, "sl({n})"),
            Family::SoPQ(p, q) => write!(f, "so({p},{q})"),
            Family::Su2Power(k) => write!(f, "su2pow({k})"),
        }
    }
}

impl fmt::Display for InvTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvTag::Identity => write!(f, "id"),
            InvTag::AdIPQ(p, q) => write!(f, "ad_i({p},{q})"),
            InvTag::AdJM(m) => write!(f, "ad_j({m})"),
            InvTag::AdJPQ(p, q) => write!(f, "ad_j({p},{q})"),
            InvTag::AdJPrime2P(p) => write!(f, "ad_jprime({p})"),
            InvTag::NegTranspose => write!(f, "neg_transpose"),
            InvTag::Conjugation => write!(f, "conj"),
            InvTag::ConjIPQ(p, q) => write!(f, "conj_i({p},{q})"),
            InvTag::NegTransposeIPQ(p, q) => write!(f, "neg_transpose_i({p},{q})"),
            InvTag::Rho => write!(f, "rho"),
            InvTag::NuOplusNu => write!(f, "nu_nu"),
            InvTag::RhoCompose => write!(f, "rho_nu"),
            InvTag::Rho12_34 => write!(f, "rho_12_34"),
            InvTag::Rho14_23 => write!(f, "rho_14_23"),
            InvTag::Rho13_24 => write!(f, "rho_13_24"),
            InvTag::Rho13 => write!(f, "rho_13"),
            InvTag::Rho34 => write!(f, "rho_34"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Simple { family, invs } => write!(f, "{family} {} {}", invs[0], invs[1]),
            FamilySpec::Sum(parts) => {
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

/// Frozen expectations for a fixture.
#[derive(Clone, Debug, PartialEq)]
pub struct Expected {
    pub dim: usize,
    /// Dimensions of the fixed points of the first and second involution.
    pub fixed_dims: (usize, usize),
    pub minimal_ideals: usize,
    /// Size of the lattice of ideals invariant under both involutions.
    pub lattice_size: usize,
    /// Type when irreducible.
    pub tag: Option<TypeTag>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: &'static str,
    pub spec: FamilySpec,
    pub expected: Expected,
    pub note: &'static str,
}

impl Fixture {
    pub fn build(&self) -> Result<Object> {
        self.spec.build()
    }
}

/// Fixture names with spec strings, expectations, and a short description.
const SUITE: &[(&str, &str, [usize; 5], Option<TypeTag>, &str)] = &[
    // dim, fixed dims, minimal ideals, lattice size
    ("so4-IJ", "so(4) ad_i(2,2) ad_j(1,1)", [6, 2, 4, 2, 4], None, "so(4) with Ad I_{2,2}, Ad J_{1,1}"),
    ("so4-IJ2", "so(4) ad_i(2,2) ad_j(2)", [6, 2, 4, 2, 4], None, "so(4) with Ad I_{2,2}, Ad J_2"),
    ("so6-IJ", "so(6) ad_i(2,4) ad_j(1,2)", [15, 7, 9, 1, 2], Some(TypeTag::Simple), "so(6) with Ad I_{2,4}, Ad J_{1,2}"),
    ("so8-IJ", "so(8) ad_i(4,4) ad_j(2,2)", [28, 12, 16, 1, 2], Some(TypeTag::Simple), "so(8) with Ad I_{4,4}, Ad J_{2,2}"),
    ("so8-IJ2", "so(8) ad_i(4,4) ad_j(4)", [28, 12, 16, 1, 2], Some(TypeTag::Simple), "so(8) with Ad I_{4,4}, Ad J_4"),
    ("su3-K", "su(3) conj conj_i(2,1)", [8, 3, 3, 1, 2], Some(TypeTag::Simple), "su(3), conjugation and its I_{2,1} twist"),
    ("su4-K", "su(4) conj conj_i(2,2)", [15, 6, 6, 1, 2], Some(TypeTag::Simple), "su(4), conjugation and its I_{2,2} twist"),
    ("so5-I23", "so(5) ad_i(2,3) ad_i(2,3)", [10, 4, 4, 1, 2], Some(TypeTag::Simple), "Riemannian so(5) with Ad I_{2,3}"),
    ("su2-riem", "su(2) conj conj", [3, 1, 1, 1, 2], Some(TypeTag::Simple), "Riemannian su(2)"),
    ("T-a", "su2pow(2) rho rho_nu", [6, 3, 3, 2, 2], Some(TypeTag::Ta), "(u+u, rho, rho(nu+nu)) over su(2)"),
    ("T-b", "su2pow(2) rho nu_nu", [6, 3, 2, 2, 2], Some(TypeTag::Tb), "(u+u, rho, nu+nu) over su(2)"),
    ("T-c", "su2pow(4) rho_12_34 rho_14_23", [12, 6, 6, 4, 2], Some(TypeTag::Tc), "fourfold su(2)"),
    ("T-d", "su2pow(2) nu_nu rho", [6, 2, 3, 2, 2], Some(TypeTag::Td), "(u+u, nu+nu, rho) over su(2)"),
    ("sum-so6-Tb", "so(6) ad_i(2,4) ad_j(1,2) + su2pow(2) rho nu_nu", [21, 10, 11, 3, 4], None, "direct sum of two irreducible triads"),
    ("sl3-K", "sl(3) neg_transpose_i(2,1) neg_transpose", [8, 3, 3, 1, 2], Some(TypeTag::Simple), "sl(3,R) of type K_eps"),
    ("sl4-K", "sl(4) neg_transpose_i(2,2) neg_transpose", [15, 6, 6, 1, 2], Some(TypeTag::Simple), "sl(4,R) of type K_eps"),
    ("sl3-I12", "sl(3) ad_i(1,2) neg_transpose", [8, 4, 3, 1, 2], Some(TypeTag::Simple), "sl(3,R) with Ad I_{1,2}"),
    ("sl4-I22", "sl(4) ad_i(2,2) neg_transpose", [15, 7, 6, 1, 2], Some(TypeTag::Simple), "sl(4,R) with Ad I_{2,2}"),
    ("so22-u11", "so(2,2) ad_j(1,1) ad_i(2,2)", [6, 4, 2, 2, 4], None, "so(2,2) with sigma = Ad J_{1,1}"),
    ("so22-gl2", "so(2,2) ad_jprime(1) ad_i(2,2)", [6, 4, 2, 2, 4], None, "so(2,2) with sigma = Ad J'_2"),
    ("so21-riem", "so(2,1) ad_i(2,1) ad_i(2,1)", [3, 1, 1, 1, 2], Some(TypeTag::Simple), "Riemannian so(2,1)"),
    (
        "so21x2-riem",
        "so(2,1) ad_i(2,1) ad_i(2,1) + so(2,1) ad_i(2,1) ad_i(2,1)",
        [6, 2, 2, 2, 4],
        None,
        "Riemannian so(2,1)+so(2,1)",
    ),
    ("so3+so21", "so(3) id id + so(2,1) ad_i(2,1) ad_i(2,1)", [6, 4, 4, 2, 4], None, "compact factor inside h0"),
];

pub fn fixture_suite() -> Vec<Fixture> {
    SUITE
        .iter()
        .map(|(name, spec, d, tag, note)| Fixture {
            name,
            spec: FamilySpec::parse(spec).expect("suite specs parse"),
            expected: Expected { dim: d[0], fixed_dims: (d[1], d[2]), minimal_ideals: d[3], lattice_size: d[4], tag: *tag },
            note,
        })
        .collect()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    fixture_suite().into_iter().find(|f| f.name == name).ok_or_else(|| bad(format!("unknown fixture `{name}`")))
}

pub fn fixture_names() -> Vec<&'static str> {
    SUITE.iter().map(|s| s.0).collect()
}

/// Objects related by a named explicit map.
#[derive(Clone, Debug, PartialEq)]
pub enum WitnessCase {
    Triads { src: CompactTriad, dst: CompactTriad, map: QMatrix },
    Pairs { src: NoncompactPairC, dst: NoncompactPairC, map: QMatrix },
    Algebras { src: RealLieAlgebra, dst: RealLieAlgebra, map: QMatrix },
}

impl WitnessCase {
    pub fn map(&self) -> &QMatrix {
        match self {
            WitnessCase::Triads { map, .. } | WitnessCase::Pairs { map, .. } | WitnessCase::Algebras { map, .. } => map,
        }
    }

    /// Runs the matching verifier.
    pub fn verify(&self) -> Result<bool> {
        match self {
            WitnessCase::Triads { src, dst, map } => crate::invol::verify_equivalence_witness(src, dst, map),
            WitnessCase::Pairs { src, dst, map } => crate::invol::verify_equivalence_witness(src, dst, map),
            WitnessCase::Algebras { src, dst, map } => Ok(crate::invol::verify_isomorphism(src, dst, map)),
        }
    }
}

pub const WITNESS_NAMES: &[&str] =
    &["ad_iprime(1,1)", "ad_iprime(1,2)", "iota_gl(1)", "u_pq_block(1,1)", "u_pq_block(1,2)", "u_block(1,1)", "u_block(1,2)", "phi_nu_a", "phi_nu_d", "rho_13", "rho_34"];

fn triad_of(spec: &str) -> Result<CompactTriad> {
    FamilySpec::parse(spec)?.build()?.as_triad().cloned().ok_or_else(|| bad("expected a triad"))
}

fn pair_of(spec: &str) -> Result<NoncompactPairC> {
    FamilySpec::parse(spec)?.build()?.as_pair().cloned().ok_or_else(|| bad("expected a pair"))
}

fn slice(x: &GMatrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> GMatrix {
    x.submatrix(rows, cols)
}

fn blocks2(a: &GMatrix, b: &GMatrix, c: &GMatrix, d: &GMatrix) -> GMatrix {
    let (p, q) = (a.rows(), d.rows());
    GMatrix::from_fn(p + q, p + q, |r, s| match (r < p, s < p) {
        (true, true) => a[(r, s)].clone(),
        (true, false) => b[(r, s - p)].clone(),
        (false, true) => c[(r - p, s)].clone(),
        (false, false) => d[(r - p, s - p)].clone(),
    })
}

/// `X + i Y`
fn cplx(x: &GMatrix, y: &GMatrix) -> GMatrix {
    x.add(&y.scale(&gi()))
}

/// Builds a named witness; see [`WITNESS_NAMES`].
pub fn witness(name: &str) -> Result<WitnessCase> {
    let unknown = || Error::UnknownWitness(name.to_string());
    let (base, args) = split_call(name).map_err(|_| unknown())?;
    let two = |args: &[usize]| -> Result<(usize, usize)> {
        match args {
            [p, q] if *p >= 1 && *q >= 1 && p + q <= 4 => Ok((*p, *q)),
            _ => Err(unknown()),
        }
    };
    match base {
        "ad_iprime" => {
            let (p, q) = two(&args)?;
            let t = triad_of(&format!("so({}) ad_i({},{}) ad_j({p},{q})", 2 * p + 2 * q, 2 * p, 2 * q))?;
            let src = phi(&t)?;
            let dst = pair_of(&format!("so({},{}) ad_j({p},{q}) ad_i({},{})", 2 * p, 2 * q, 2 * p, 2 * q))?;
            let map = ambient_map(&src.g0, &dst.g0, conjugation_by(&i_prime(p, q)))?;
            Ok(WitnessCase::Pairs { src, dst, map })
        }
        "iota_gl" => {
            let p = match args.as_slice() {
                [p] if (1..=2).contains(p) => *p,
                _ => return Err(unknown()),
            };
            let pair = pair_of(&format!("so({},{}) ad_jprime({p}) ad_i({},{})", 2 * p, 2 * p, 2 * p, 2 * p))?;
            let src = fixed_view(&pair.g0, &pair.sigma).algebra;
            let dst = gl_n_r(2 * p);
            let h = 2 * p;
            let map = ambient_map(&src, &dst, |x| slice(x, 0..h, 0..h).add(&slice(x, 0..h, h..2 * h)))?;
            Ok(WitnessCase::Algebras { src, dst, map })
        }
        "u_pq_block" | "u_block" => {
            let (p, q) = two(&args)?;
            let (src, dst, sign) = if base == "u_pq_block" {
                let pair = pair_of(&format!("so({},{}) ad_j({p},{q}) ad_i({},{})", 2 * p, 2 * q, 2 * p, 2 * q))?;
                (fixed_view(&pair.g0, &pair.sigma).algebra, u_pq(p, q), 1)
            } else {
                let t = triad_of(&format!("so({}) ad_i({},{}) ad_j({p},{q})", 2 * p + 2 * q, 2 * p, 2 * q))?;
                (fixed_view(&t.g, &t.theta2).algebra, u_pq(p + q, 0).clone(), -1)
            };
            let s = re(sign);
            let (a, b, d) = (0..p, p..2 * p, 2 * p..2 * p + q);
            let e = 2 * p + q..2 * p + 2 * q;
            let map = ambient_map(&src, &dst, |x| {
                let a1 = slice(x, a.clone(), a.clone());
                let a2 = slice(x, b.clone(), a.clone());
                let d1 = slice(x, d.clone(), d.clone());
                let d2 = slice(x, e.clone(), d.clone());
                // B1 sits at (a, d) with the sign s, B2 at (b, d) or (a, e)
                let (b1, b2) = if sign == 1 {
                    (slice(x, a.clone(), d.clone()), slice(x, b.clone(), d.clone()))
                } else {
                    (slice(x, a.clone(), d.clone()).scale(&s), slice(x, a.clone(), e.clone()))
                };
                let top_right = cplx(&b1, &b2).scale(&s);
                let bottom_left = cplx(&b1.transpose(), &b2.transpose().scale(&re(-1)));
                blocks2(&cplx(&a1, &a2), &top_right, &bottom_left, &cplx(&d1, &d2))
            })?;
            Ok(WitnessCase::Algebras { src, dst, map })
        }
        "phi_nu_a" | "phi_nu_d" if args.is_empty() => {
            let spec = if base == "phi_nu_a" { "su2pow(2) rho rho_nu" } else { "su2pow(2) nu_nu rho" };
            let src = triad_of(spec)?;
            let dst = if base == "phi_nu_a" { dual_triad(&src) } else { associated_triad(&src) };
            let map = nu_su2().direct_sum(&QMatrix::identity(3));
            Ok(WitnessCase::Triads { src, dst, map })
        }
        "rho_13" | "rho_34" if args.is_empty() => {
            let src = triad_of("su2pow(4) rho_12_34 rho_14_23")?;
            let (dst, perm) = if base == "rho_13" { (dual_triad(&src), [2, 1, 0, 3]) } else { (associated_triad(&src), [0, 1, 3, 2]) };
            Ok(WitnessCase::Triads { src, dst, map: block_permutation(3, &perm) })
        }
        _ => Err(unknown()),
    }
}
