//! Maximal abelian subspaces of `p1`, restricted roots over `Q(i)`, the root
//! spaces `V(lambda)`, the maps `f_lambda` with their S/T bases, and the
//! lattice `Gamma`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, minimal_polynomial, rational_roots, split_gauss_vec, GaussRat, QMatrix, Rat};
use crate::invol::{eigensplit, Involution};
use crate::lie::{RealLieAlgebra, Subspace};

/// Greedy maximal abelian subspace of the `-1` eigenspace of `theta1`.
pub fn maximal_abelian(g: &RealLieAlgebra, theta1: &Involution) -> Subspace {
    let n = g.dim();
    let (_, p1) = eigensplit(theta1);
    let mut current: Vec<Vec<Rat>> = Vec::new();
    if let Some(first) = p1.basis().first() {
        current.push(first.clone());
    }
    loop {
        let span = Subspace::span(n, &current);
        let cent = centralizer_in(g, &p1, &current);
        match cent.basis().iter().find(|v| !span.contains(v)) {
            Some(v) => current.push(v.clone()),
            None => return span,
        }
    }
}

/// `{y in s : [y, a] = 0 for all a}`.
pub fn centralizer_in(g: &RealLieAlgebra, s: &Subspace, elems: &[Vec<Rat>]) -> Subspace {
    let n = g.dim();
    if elems.is_empty() {
        return s.clone();
    }
    let b = s.basis();
    // unknown coefficients over the basis of s; rows are (element, coordinate)
    let rows: Vec<Vec<Rat>> = elems
        .iter()
        .flat_map(|a| {
            let cols: Vec<Vec<Rat>> = b.iter().map(|y| g.bracket(y, a)).collect();
            (0..n).map(move |k| cols.iter().map(|c| c[k].clone()).collect::<Vec<Rat>>()).collect::<Vec<_>>()
        })
        .collect();
    if rows.is_empty() || b.is_empty() {
        return s.clone();
    }
    let m = QMatrix::from_rows(rows);
    let vs: Vec<Vec<Rat>> = m
        .kernel()
        .iter()
        .map(|c| {
            let mut v = vec![Rat::zero(); n];
            for (ck, y) in c.iter().zip(b) {
                for (vi, yi) in v.iter_mut().zip(y) {
                    *vi += ck * yi;
                }
            }
            v
        })
        .collect();
    Subspace::span(n, &vs)
}

/// Rational square root, if one exists.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rat::new(sn, sd))
}

/// One restricted root with its root space.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    /// Coordinates of `lambda` on the basis of `a1`.
    pub coords: Vec<Rat>,
    /// `<lambda, A_i>` for each basis vector `A_i` of `a1`.
    pub pairings: Vec<Rat>,
    /// `d_lambda = dim_C g_C(lambda)`
    pub mult: usize,
}

/// Root space data of a positive root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSpace {
    /// Index into [`RootDatum::roots`].
    pub root: usize,
    /// `V(lambda)`: real span of `g_C(lambda) + g_C(-lambda)`.
    pub v: Subspace,
    /// `V(lambda) ∩ k1`
    pub k: Subspace,
    /// `V(lambda) ∩ p1`
    pub p: Subspace,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    pub a1: Subspace,
    /// Gram matrix of `-B` on the basis of `a1`.
    pub gram: QMatrix,
    /// All roots; negatives included.
    pub roots: Vec<Root>,
    /// Root spaces of the positive roots, whose first nonzero pairing is positive.
    pub spaces: Vec<RootSpace>,
    /// Centralizer of `a1` in `k1`.
    pub zk: Subspace,
    /// Basis of `Gamma` in `a1` coordinates.
    pub gamma: Vec<Vec<Rat>>,
}

fn is_positive(pairings: &[Rat]) -> bool {
    pairings.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.a1.dim()
    }

    /// `sum_j c_j A_j` for coordinates `c` on `a1`.
    pub fn element(&self, c: &[Rat]) -> Vec<Rat> {
        let n = self.a1.ambient_dim();
        let mut v = vec![Rat::zero(); n];
        for (cj, a) in c.iter().zip(self.a1.basis()) {
            for (vi, ai) in v.iter_mut().zip(a) {
                *vi += cj * ai;
            }
        }
        v
    }

    /// `<lambda, lambda>`
    pub fn norm(&self, root: usize) -> Rat {
        let r = &self.roots[root];
        dot(&r.coords, &r.pairings)
    }

    /// `<lambda, v>` for `v` in `a1` coordinates.
    pub fn pairing(&self, root: usize, v: &[Rat]) -> Rat {
        dot(&self.roots[root].pairings, v)
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.root).collect()
    }

    pub fn root_index(&self, coords: &[Rat]) -> Option<usize> {
        self.roots.iter().position(|r| r.coords == coords)
    }

    pub fn space_of(&self, root: usize) -> Option<&RootSpace> {
        let neg: Vec<Rat> = self.roots[root].coords.iter().map(|x| -x.clone()).collect();
        let other = self.root_index(&neg);
        self.spaces.iter().find(|s| s.root == root || Some(s.root) == other)
    }

    /// Whether `<lambda, v>` is an integer for every root.
    pub fn in_gamma(&self, v: &[Rat]) -> bool {
        v.len() == self.rank() && self.roots.iter().enumerate().all(|(k, _)| self.pairing(k, v).is_integer())
    }

    /// `Sigma^+`, `Sigma^-`, `Sigma^0` by the sign of `<lambda, v>`.
    pub fn partition_by(&self, v: &[Rat]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for k in 0..self.roots.len() {
            let x = self.pairing(k, v);
            if x.is_positive() {
                pos.push(k);
            } else if x.is_negative() {
                neg.push(k);
            } else {
                zero.push(k);
            }
        }
        (pos, neg, zero)
    }

    /// Whether `zk`, `a1` and the `V(lambda)` form a direct sum equal to the algebra.
    pub fn decomposition_holds(&self) -> bool {
        let n = self.a1.ambient_dim();
        let mut total = self.zk.sum(&self.a1);
        let mut dims = self.zk.dim() + self.a1.dim();
        for s in &self.spaces {
            total = total.sum(&s.v);
            dims += s.v.dim();
        }
        total.dim() == n && dims == n
    }
}

pub fn restricted_roots(g: &RealLieAlgebra, theta1: &Involution, a1: &Subspace) -> Result<RootDatum> {
    let n = g.dim();
    let basis = a1.basis();
    let r = basis.len();
    let killing = g.killing_form();
    let gram = QMatrix::from_fn(r, r, |i, j| -dot(&basis[i], &killing.mul_vec(&basis[j])));
    let ginv = gram.inverse().ok_or(Error::Singular)?;
    let ads: Vec<QMatrix> = basis.iter().map(|a| g.ad(a)).collect();

    // candidate eigenvalues i*c of each ad A_i
    let mut values: Vec<Vec<GaussRat>> = Vec::new();
    for m in &ads {
        let sq = m.mul(m);
        let poly = minimal_polynomial(&sq);
        let rr = rational_roots(&poly);
        if rr.len() + 1 != poly.len() {
            return Err(Error::RootNotGaussian);
        }
        let mut vals = Vec::new();
        for x in rr {
            let c = rat_sqrt(&-x).ok_or(Error::RootNotGaussian)?;
            vals.push(GaussRat::new(Rat::zero(), c.clone()));
            if !c.is_zero() {
                vals.push(GaussRat::new(Rat::zero(), -c));
            }
        }
        values.push(vals);
    }

    // simultaneous eigenspaces in g_C, keyed by the pairing vector
    let mut joint: Vec<(Vec<Rat>, Subspace<GaussRat>)> = vec![(Vec::new(), Subspace::full(n))];
    for (m, vals) in ads.iter().zip(&values) {
        let gm = m.to_gauss();
        let mut next = Vec::new();
        for (key, space) in &joint {
            for v in vals {
                let e = Subspace::span(n, &gm.shift(v).kernel());
                let s = space.intersect(&e);
                if s.dim() > 0 {
                    let mut k = key.clone();
                    k.push(v.im.clone());
                    next.push((k, s));
                }
            }
        }
        joint = next;
    }
    if joint.iter().map(|(_, s)| s.dim()).sum::<usize>() != n {
        return Err(Error::RootNotGaussian);
    }

    let (k1, p1) = eigensplit(theta1);
    let mut roots = Vec::new();
    let mut spaces = Vec::new();
    let mut zk = Subspace::zero(n);
    for (pairings, space) in &joint {
        let real_parts: Vec<Vec<Rat>> = space
            .basis()
            .iter()
            .flat_map(|v| {
                let (re, im) = split_gauss_vec(v);
                [re, im]
            })
            .collect();
        let v = Subspace::span(n, &real_parts);
        if pairings.iter().all(|x| x.is_zero()) {
            zk = v.intersect(&k1);
            continue;
        }
        let coords = ginv.mul_vec(pairings);
        let idx = roots.len();
        roots.push(Root { coords, pairings: pairings.clone(), mult: space.dim() });
        if is_positive(pairings) {
            let k = v.intersect(&k1);
            let p = v.intersect(&p1);
            spaces.push(RootSpace { root: idx, v, k, p });
        }
    }
    let mut datum = RootDatum { a1: a1.clone(), gram, roots, spaces, zk, gamma: Vec::new() };
    datum.gamma = gamma_lattice(&datum);
    Ok(datum)
}

/// `f_lambda(x) = <lambda, lambda>^{-1} (ad lambda) x` on `V(lambda)`.
pub fn f_lambda(g: &RealLieAlgebra, rd: &RootDatum, root: usize, x: &[Rat]) -> Result<Vec<Rat>> {
    let space = rd.space_of(root).ok_or(Error::NotInV)?;
    if !space.v.contains(x) {
        return Err(Error::NotInV);
    }
    let lam = rd.element(&rd.roots[root].coords);
    let inv = Rat::one() / rd.norm(root);
    Ok(g.bracket(&lam, x).into_iter().map(|c| c * &inv).collect())
}

/// Orthogonal basis `S` of `k1(lambda)` for `-B` without normalization, and `T = f_lambda(S)`.
pub fn st_basis(g: &RealLieAlgebra, rd: &RootDatum, root: usize) -> Result<(Vec<Vec<Rat>>, Vec<Vec<Rat>>)> {
    let space = rd.space_of(root).ok_or(Error::NotInV)?;
    let killing = g.killing_form();
    let ip = |a: &[Rat], b: &[Rat]| -dot(a, &killing.mul_vec(b));
    let mut s: Vec<Vec<Rat>> = Vec::new();
    for v in space.k.basis() {
        let mut w = v.clone();
        for u in &s {
            let c = ip(v, u) / ip(u, u);
            for (wi, ui) in w.iter_mut().zip(u) {
                *wi -= &c * ui;
            }
        }
        s.push(w);
    }
    let t = s.iter().map(|x| f_lambda(g, rd, root, x)).collect::<Result<Vec<_>>>()?;
    Ok((s, t))
}

/// Checks `(ad A) S_i = <lambda, A> T_i` and `(ad A) T_i = -<lambda, A> S_i` for every basis `A` of `a1`.
pub fn st_identities_hold(g: &RealLieAlgebra, rd: &RootDatum, root: usize, s: &[Vec<Rat>], t: &[Vec<Rat>]) -> bool {
    rd.a1.basis().iter().enumerate().all(|(j, a)| {
        let c = rd.roots[root].pairings[j].clone();
        s.iter().zip(t).all(|(si, ti)| {
            let ads = g.bracket(a, si);
            let adt = g.bracket(a, ti);
            ads == ti.iter().map(|x| x * &c).collect::<Vec<_>>() && adt == si.iter().map(|x| -(x * &c)).collect::<Vec<_>>()
        })
    })
}

/// Basis of the row lattice of an integer matrix, triangular and of full rank.
fn integer_row_basis(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut basis = Vec::new();
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    basis.push(rows.remove(i));
                }
                break;
            }
            let piv = *nz.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            let pr = rows[piv].clone();
            for &i in &nz {
                if i != piv {
                    let q = rows[i][c].div_floor(&pr[c]);
                    for k in 0..cols {
                        let d = &q * &pr[k];
                        rows[i][k] -= d;
                    }
                }
            }
        }
    }
    basis
}

/// Basis of `{v : <lambda, v> in Z for all lambda}` in `a1` coordinates.
pub fn gamma_lattice(rd: &RootDatum) -> Vec<Vec<Rat>> {
    let r = rd.rank();
    if rd.roots.is_empty() || r == 0 {
        return Vec::new();
    }
    let den = rd.roots.iter().flat_map(|x| x.pairings.iter()).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let rows: Vec<Vec<BigInt>> = rd
        .roots
        .iter()
        .map(|x| x.pairings.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect())
        .collect();
    let basis = integer_row_basis(rows, r);
    if basis.len() < r {
        return Vec::new();
    }
    let bm = QMatrix::from_fn(r, r, |i, j| Rat::new(basis[i][j].clone(), den.clone()));
    let inv = bm.inverse().expect("full-rank row lattice");
    let gamma = inv.to_cols();
    debug_assert!(gamma.iter().all(|v| rd.in_gamma(v)));
    gamma
}
