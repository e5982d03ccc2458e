//! Real Lie algebras given by structure constants, with subspaces and closures.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{
    dot, is_negative_definite, is_zero_vec, symmetric_signature, unit, vec_add, Echelon, GMatrix, GaussRat, Matrix,
    QMatrix, Rat, Scalar, Signature,
};

/// Sparse bracket of two basis vectors: `(k, c)` pairs with `c != 0`.
pub type SparseVec<T> = Vec<(usize, T)>;

/// Lie algebra on a fixed basis `e_0..e_{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<T = Rat> {
    dim: usize,
    table: Vec<Vec<SparseVec<T>>>,
    ambient: Option<Vec<GMatrix>>,
}

pub type RealLieAlgebra = LieAlgebra<Rat>;

fn sparse<T: Scalar>(v: &[T]) -> SparseVec<T> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

impl<T: Scalar> LieAlgebra<T> {
    /// Builds the algebra from `[e_i, e_j]` for `i < j`.
    pub fn from_brackets(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<T>) -> Self {
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "bracket length");
                table[j][i] = sparse(&v.iter().map(|x| -x.clone()).collect::<Vec<_>>());
                table[i][j] = sparse(&v);
            }
        }
        LieAlgebra { dim, table, ambient: None }
    }

    /// Builds the algebra from records `c_{ij}^k`; both orders may appear but must agree.
    pub fn from_structure_constants(dim: usize, records: &[(usize, usize, usize, T)]) -> Result<Self> {
        let mut dense = vec![vec![vec![T::zero(); dim]; dim]; dim];
        let mut seen = vec![vec![vec![false; dim]; dim]; dim];
        for (i, j, k, c) in records {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::BadStructure(format!("index out of range in ({i},{j},{k})")));
            }
            if i == j {
                if !c.is_zero() {
                    return Err(Error::BadStructure(format!("[e{i},e{i}] must vanish")));
                }
                continue;
            }
            let (a, b, v) = if i < j { (i, j, c.clone()) } else { (j, i, -c.clone()) };
            if seen[a][b][k] && dense[a][b][k] != v {
                return Err(Error::BadStructure(format!("antisymmetry violated at ({i},{j},{k})")));
            }
            seen[a][b][k] = true;
            dense[a][b][k] = v;
        }
        Ok(Self::from_brackets(dim, |i, j| dense[i][j].clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> Option<&[GMatrix]> {
        self.ambient.as_deref()
    }

    pub fn with_ambient(mut self, ambient: Vec<GMatrix>) -> Self {
        assert_eq!(ambient.len(), self.dim);
        self.ambient = Some(ambient);
        self
    }

    pub fn without_ambient(mut self) -> Self {
        self.ambient = None;
        self
    }

    /// `[e_i, e_j]` in sparse form.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, T)] {
        &self.table[i][j]
    }

    /// Records `(i, j, k, c)` with `i < j` in lexicographic order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, T)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in &self.table[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        assert!(x.len() == self.dim && y.len() == self.dim, "bracket: dimension mismatch");
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let f = xi.clone() * yj;
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].clone() + f.clone() * c;
                }
            }
        }
        out
    }

    pub fn checked_bracket(&self, x: &[T], y: &[T]) -> Result<Vec<T>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimMismatch(format!("vectors of length {} and {} in dimension {}", x.len(), y.len(), self.dim)));
        }
        Ok(self.bracket(x, y))
    }

    /// Matrix of `ad e_i`.
    pub fn ad_basis(&self, i: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.table[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of `ad x`.
    pub fn ad(&self, x: &[T]) -> Matrix<T> {
        let mut m: Matrix<T> = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in &self.table[i][j] {
                    m[(*k, j)] = m[(*k, j)].clone() + xi.clone() * c;
                }
            }
        }
        m
    }

    /// Killing form `B(e_i, e_j) = Tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Matrix<T> {
        let n = self.dim;
        let ads: Vec<Matrix<T>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // Tr(ad_i ad_j) = sum over (k,l) of ad_i[k,l] ad_j[l,k]
                let mut acc = T::zero();
                for l in 0..n {
                    for (k, c) in &self.table[i][l] {
                        let d = &ads[j][(l, *k)];
                        if !d.is_zero() {
                            acc = acc + c.clone() * d;
                        }
                    }
                }
                b[(i, j)] = acc.clone();
                b[(j, i)] = acc;
            }
        }
        b
    }

    pub fn killing(&self, x: &[T], y: &[T]) -> T {
        self.ad(x).mul(&self.ad(y)).trace()
    }

    /// Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.densify(&self.table[i][j]);
                for k in j + 1..n {
                    let a = self.bracket(&ij, &unit(n, k));
                    let jk = self.densify(&self.table[j][k]);
                    let b = self.bracket(&jk, &unit(n, i));
                    let ki = self.densify(&self.table[k][i]);
                    let c = self.bracket(&ki, &unit(n, j));
                    if !is_zero_vec(&vec_add(&vec_add(&a, &b), &c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn densify(&self, s: &[(usize, T)]) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim];
        for (k, c) in s {
            v[*k] = c.clone();
        }
        v
    }

    /// Whether `m [x, y] = [m x, m y]` on all basis pairs.
    pub fn is_automorphism(&self, m: &Matrix<T>) -> bool {
        let n = self.dim;
        if m.rows() != n || m.cols() != n {
            return false;
        }
        let cols = m.to_cols();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = m.mul_vec(&self.densify(&self.table[i][j]));
                if lhs != self.bracket(&cols[i], &cols[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `m` maps brackets of `self` to brackets of `dst`.
    pub fn is_homomorphism_to(&self, dst: &LieAlgebra<T>, m: &Matrix<T>) -> bool {
        if m.cols() != self.dim || m.rows() != dst.dim {
            return false;
        }
        let cols = m.to_cols();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = m.mul_vec(&self.densify(&self.table[i][j]));
                if lhs != dst.bracket(&cols[i], &cols[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// The same algebra on the basis given by the columns of `p`.
    pub fn rebase(&self, p: &Matrix<T>) -> Result<Self> {
        let pinv = p.inverse().ok_or(Error::Singular)?;
        let cols = p.to_cols();
        let mut out = Self::from_brackets(self.dim, |i, j| pinv.mul_vec(&self.bracket(&cols[i], &cols[j])));
        if let Some(amb) = &self.ambient {
            out.ambient = Some(cols.iter().map(|c| combine(amb, c)).collect());
        }
        Ok(out)
    }

    /// Induced algebra on a bracket-closed subspace, in the subspace's basis.
    pub fn restrict(&self, s: &Subspace<T>) -> Result<Self> {
        let basis = s.basis();
        let mut err = None;
        let mut out = Self::from_brackets(s.dim(), |i, j| {
            let b = self.bracket(&basis[i], &basis[j]);
            match s.coords(&b) {
                Some(c) => c,
                None => {
                    err = Some(Error::BadStructure("subspace is not bracket-closed".into()));
                    vec![T::zero(); basis.len()]
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if let Some(amb) = &self.ambient {
            out.ambient = Some(basis.iter().map(|c| combine(amb, c)).collect());
        }
        Ok(out)
    }

    /// Direct sum with the basis of `self` followed by that of `o`.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let (n, m) = (self.dim, o.dim);
        let mut out = Self::from_brackets(n + m, |i, j| {
            let mut v = vec![T::zero(); n + m];
            if j < n {
                for (k, c) in &self.table[i][j] {
                    v[*k] = c.clone();
                }
            } else if i >= n {
                for (k, c) in &o.table[i - n][j - n] {
                    v[n + k] = c.clone();
                }
            }
            v
        });
        if let (Some(a), Some(b)) = (&self.ambient, &o.ambient) {
            let (na, nb) = (a[0].rows(), b[0].rows());
            let za = GMatrix::zeros(na, na);
            let zb = GMatrix::zeros(nb, nb);
            let mut amb: Vec<GMatrix> = a.iter().map(|x| x.direct_sum(&zb)).collect();
            amb.extend(b.iter().map(|y| za.direct_sum(y)));
            out.ambient = Some(amb);
        }
        out
    }

    /// Centre `{x : [x, g] = 0}`.
    pub fn center(&self) -> Subspace<T> {
        let n = self.dim;
        // rows indexed by (j, k): coefficient of e_k in [x, e_j]
        let mut rows = Vec::new();
        for j in 0..n {
            let mut block = vec![vec![T::zero(); n]; n];
            for i in 0..n {
                for (k, c) in &self.table[i][j] {
                    block[*k][i] = c.clone();
                }
            }
            rows.extend(block.into_iter().filter(|r| !is_zero_vec(r)));
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Subspace::span(n, &Matrix::from_rows(rows).kernel())
    }

    /// Derived algebra `[g, g]`.
    pub fn derived(&self) -> Subspace<T> {
        let n = self.dim;
        let mut e = Echelon::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if !self.table[i][j].is_empty() {
                    e.insert(&self.densify(&self.table[i][j]));
                }
            }
        }
        Subspace::span(n, &e.vectors())
    }

    /// Smallest subalgebra containing the seeds.
    pub fn subalgebra_closure(&self, seeds: &[Vec<T>]) -> Result<SubalgebraView<T>> {
        let n = self.dim;
        let mut e = Echelon::new(n);
        let mut gens: Vec<Vec<T>> = Vec::new();
        for s in seeds {
            if e.insert(s) {
                gens.push(s.clone());
            }
        }
        let mut i = 0;
        while i < gens.len() {
            for j in 0..i {
                let b = self.bracket(&gens[i], &gens[j]);
                if e.insert(&b) {
                    gens.push(b);
                }
            }
            i += 1;
        }
        let space = Subspace::span(n, &gens);
        let algebra = self.restrict(&space)?;
        Ok(SubalgebraView { space, algebra })
    }

    /// Smallest ideal containing the seeds.
    pub fn ideal_closure(&self, seeds: &[Vec<T>]) -> Subspace<T> {
        let n = self.dim;
        let mut e = Echelon::new(n);
        let mut gens: Vec<Vec<T>> = Vec::new();
        for s in seeds {
            if e.insert(s) {
                gens.push(s.clone());
            }
        }
        let mut i = 0;
        while i < gens.len() && !e.is_full() {
            for k in 0..n {
                let b = self.bracket(&unit(n, k), &gens[i]);
                if e.insert(&b) {
                    gens.push(b);
                }
            }
            i += 1;
        }
        Subspace::span(n, &e.vectors())
    }

    /// Whether a subspace is an ideal.
    pub fn is_ideal(&self, s: &Subspace<T>) -> bool {
        let n = self.dim;
        s.basis().iter().all(|v| (0..n).all(|k| s.contains(&self.bracket(&unit(n, k), v))))
    }

    /// Whether a subspace is closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace<T>) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&self.bracket(&b[i], &b[j]))))
    }

    /// `[A, B]` for subspaces.
    pub fn bracket_spaces(&self, a: &Subspace<T>, b: &Subspace<T>) -> Subspace<T> {
        let mut e = Echelon::new(self.dim);
        for x in a.basis() {
            for y in b.basis() {
                e.insert(&self.bracket(x, y));
            }
        }
        Subspace::span(self.dim, &e.vectors())
    }

    /// Killing-orthogonal complement of a subspace.
    pub fn killing_complement(&self, s: &Subspace<T>) -> Subspace<T> {
        let b = self.killing_form();
        orthogonal_complement(&b, s)
    }

    /// Centroid `{T : T ad x = ad x T for all x}` of a semisimple algebra, as a
    /// list of matrices starting with the identity.
    ///
    /// The adjoint module of a semisimple algebra is multiplicity free, so a
    /// cyclic vector `v` exists and `T` is determined by `T v`. Returns `None`
    /// when none of the trial vectors is cyclic.
    pub fn centroid_basis(&self) -> Option<Vec<Matrix<T>>> {
        let n = self.dim;
        if n == 0 {
            return Some(Vec::new());
        }
        let ads: Vec<Matrix<T>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let trials: Vec<Vec<T>> = std::iter::once(unit(n, 0))
            .chain((1..=4i64).map(|p| (0..n).map(|k| T::int((k as i64 + 1).pow(p as u32 - 1))).collect()))
            .collect();
        let (words, uinv) = trials.iter().find_map(|v| self.cyclic_words(&ads, v))?;
        let mut eqs = Echelon::new(n);
        'outer: for adj in &ads {
            for (ua, ma) in &words {
                let c = uinv.mul_vec(&adj.mul_vec(ua));
                let mut lhs = Matrix::zeros(n, n);
                for (b, cb) in c.iter().enumerate() {
                    if !cb.is_zero() {
                        lhs = lhs.add(&words[b].1.scale(cb));
                    }
                }
                let block = lhs.sub(&adj.mul(ma));
                for r in 0..n {
                    eqs.insert(block.row(r));
                }
                // only scalars remain
                if eqs.len() + 1 == n {
                    break 'outer;
                }
            }
        }
        let sols = if eqs.is_empty() { (0..n).map(|i| unit(n, i)).collect() } else { Matrix::from_rows(eqs.vectors()).kernel() };
        let mut out: Vec<Matrix<T>> = vec![Matrix::identity(n)];
        let mut seen = Echelon::new(n * n);
        seen.insert(out[0].entries());
        for w in sols {
            let images: Vec<Vec<T>> = words.iter().map(|(_, m)| m.mul_vec(&w)).collect();
            let t = Matrix::from_cols(n, &images).mul(&uinv);
            if seen.insert(t.entries()) {
                out.push(t);
            }
        }
        Some(out)
    }

    /// Words `u_a = M_a v` spanning the algebra, with the inverse of `[u_a]`.
    #[allow(clippy::type_complexity)]
    fn cyclic_words(&self, ads: &[Matrix<T>], v: &[T]) -> Option<(Vec<(Vec<T>, Matrix<T>)>, Matrix<T>)> {
        let n = self.dim;
        let mut span = Echelon::new(n);
        span.insert(v);
        let mut words: Vec<(Vec<T>, Matrix<T>)> = vec![(v.to_vec(), Matrix::identity(n))];
        let mut a = 0;
        while a < words.len() && !span.is_full() {
            for adj in ads {
                let u = adj.mul_vec(&words[a].0);
                if span.insert(&u) {
                    let m = adj.mul(&words[a].1);
                    words.push((u, m));
                }
            }
            a += 1;
        }
        if !span.is_full() {
            return None;
        }
        let u = Matrix::from_cols(n, &words.iter().map(|w| w.0.clone()).collect::<Vec<_>>());
        let uinv = u.inverse()?;
        Some((words, uinv))
    }
}

/// `sum_k c_k A_k` for ambient matrices.
fn combine<T: Scalar>(amb: &[GMatrix], c: &[T]) -> GMatrix {
    let n = amb[0].rows();
    let mut m = GMatrix::zeros(n, n);
    for (a, ck) in amb.iter().zip(c) {
        if !ck.is_zero() {
            m = m.add(&a.scale(&ck.to_gauss()));
        }
    }
    m
}

/// `{x : B(x, s) = 0}` for a bilinear form given by its Gram matrix.
pub fn orthogonal_complement<T: Scalar>(form: &Matrix<T>, s: &Subspace<T>) -> Subspace<T> {
    let n = form.rows();
    if s.dim() == 0 {
        return Subspace::full(n);
    }
    let rows: Vec<Vec<T>> = s.basis().iter().map(|v| form.transpose().mul_vec(v)).collect();
    Subspace::span(n, &Matrix::from_rows(rows).kernel())
}

impl RealLieAlgebra {
    /// Realizes a real span of complex matrices closed under the commutator.
    pub fn from_ambient(basis: Vec<GMatrix>) -> Result<Self> {
        let coords = AmbientCoords::new(&basis)?;
        let n = basis.len();
        let mut err = None;
        let alg = Self::from_brackets(n, |i, j| {
            let c = basis[i].commutator(&basis[j]);
            coords.coords(&c).unwrap_or_else(|| {
                err = Some(Error::BadStructure(format!("commutator of basis {i},{j} leaves the span")));
                vec![Rat::zero(); n]
            })
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(alg.with_ambient(basis))
    }

    /// Whether the ambient commutators reproduce the structure constants.
    pub fn ambient_consistent(&self) -> bool {
        let Some(amb) = &self.ambient else {
            return true;
        };
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let lhs = amb[i].commutator(&amb[j]);
                if lhs != combine(amb, &self.densify(&self.table[i][j])) {
                    return false;
                }
            }
        }
        true
    }

    pub fn killing_signature(&self) -> Signature {
        symmetric_signature(&self.killing_form()).expect("Killing form is symmetric")
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim > 0 && self.killing_signature().is_nondegenerate()
    }

    pub fn is_compact(&self) -> bool {
        self.dim > 0 && is_negative_definite(&self.killing_form()).expect("Killing form is symmetric")
    }

    /// Ambient matrix of a coordinate vector.
    pub fn ambient_of(&self, x: &[Rat]) -> Option<GMatrix> {
        self.ambient.as_ref().map(|a| combine(a, x))
    }
}

/// Real coordinates of complex matrices relative to a real-independent basis.
pub struct AmbientCoords {
    rows: Vec<usize>,
    inv: QMatrix,
    full: QMatrix,
}

fn flatten_real(m: &GMatrix) -> Vec<Rat> {
    let mut v: Vec<Rat> = m.entries().iter().map(|z| z.re.clone()).collect();
    v.extend(m.entries().iter().map(|z| z.im.clone()));
    v
}

impl AmbientCoords {
    pub fn new(basis: &[GMatrix]) -> Result<Self> {
        let cols: Vec<Vec<Rat>> = basis.iter().map(flatten_real).collect();
        let len = cols.first().map_or(0, |c| c.len());
        let full = QMatrix::from_cols(len, &cols);
        let (_, pivots) = full.transpose().rref();
        if pivots.len() != basis.len() {
            return Err(Error::BadStructure("ambient basis is not independent over R".into()));
        }
        let sq = QMatrix::from_fn(pivots.len(), basis.len(), |r, c| full[(pivots[r], c)].clone());
        let inv = sq.inverse().ok_or(Error::Singular)?;
        Ok(AmbientCoords { rows: pivots, inv, full })
    }

    /// Real coordinates of `m`, or `None` if `m` is outside the real span.
    pub fn coords(&self, m: &GMatrix) -> Option<Vec<Rat>> {
        let x = flatten_real(m);
        let sel: Vec<Rat> = self.rows.iter().map(|&r| x[r].clone()).collect();
        let c = self.inv.mul_vec(&sel);
        if self.full.mul_vec(&c) == x {
            Some(c)
        } else {
            None
        }
    }
}

/// Subspace of `T^n` stored by its canonical reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<T = Rat> {
    n: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Subspace<T> {
    pub fn span(n: usize, vectors: &[Vec<T>]) -> Self {
        let vs: Vec<Vec<T>> = vectors.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
        if vs.is_empty() {
            return Self::zero(n);
        }
        let (r, pivots) = Matrix::from_rows(vs).rref();
        let basis = (0..pivots.len()).map(|k| r.row(k).to_vec()).collect();
        Subspace { n, basis, pivots }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { n, basis: (0..n).map(|i| unit(n, i)).collect(), pivots: (0..n).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Coordinates relative to the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[T]) -> Option<Vec<T>> {
        let c: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (ck, b) in c.iter().zip(&self.basis) {
            if !ck.is_zero() {
                for (x, y) in r.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = x.clone() - ck.clone() * y;
                    }
                }
            }
        }
        if is_zero_vec(&r) {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coords(v).is_some()
    }

    pub fn is_subspace_of(&self, o: &Self) -> bool {
        self.basis.iter().all(|v| o.contains(v))
    }

    pub fn sum(&self, o: &Self) -> Self {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Self::span(self.n, &v)
    }

    pub fn intersect(&self, o: &Self) -> Self {
        if self.dim() == 0 || o.dim() == 0 {
            return Self::zero(self.n);
        }
        let mut cols = self.basis.clone();
        cols.extend(o.basis.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
        let k = Matrix::from_cols(self.n, &cols).kernel();
        let vs: Vec<Vec<T>> = k
            .iter()
            .map(|a| {
                let mut x = vec![T::zero(); self.n];
                for (ak, b) in a.iter().zip(&self.basis) {
                    crate::exact::axpy(&mut x, ak, b);
                }
                x
            })
            .collect();
        Self::span(self.n, &vs)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix<T>) -> Self {
        Self::span(m.rows(), &self.basis.iter().map(|v| m.mul_vec(v)).collect::<Vec<_>>())
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant(&self, m: &Matrix<T>) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Gram matrix of a bilinear form on the canonical basis.
    pub fn gram(&self, form: &Matrix<T>) -> Matrix<T> {
        let fb: Vec<Vec<T>> = self.basis.iter().map(|v| form.mul_vec(v)).collect();
        Matrix::from_fn(self.dim(), self.dim(), |r, c| dot(&self.basis[r], &fb[c]))
    }
}

/// A bracket-closed subspace together with its induced structure constants.
#[derive(Clone, Debug)]
pub struct SubalgebraView<T = Rat> {
    pub space: Subspace<T>,
    pub algebra: LieAlgebra<T>,
}

impl<T: Scalar> SubalgebraView<T> {
    pub fn new(g: &LieAlgebra<T>, space: Subspace<T>) -> Result<Self> {
        let algebra = g.restrict(&space)?;
        Ok(SubalgebraView { space, algebra })
    }

    /// Centre of the view, in parent coordinates.
    pub fn center(&self) -> Subspace<T> {
        self.lift(&self.algebra.center())
    }

    /// Derived algebra of the view, in parent coordinates.
    pub fn derived(&self) -> Subspace<T> {
        self.lift(&self.algebra.derived())
    }

    /// Maps a subspace in view coordinates to parent coordinates.
    pub fn lift(&self, s: &Subspace<T>) -> Subspace<T> {
        let vs: Vec<Vec<T>> = s
            .basis()
            .iter()
            .map(|c| {
                let mut x = vec![T::zero(); self.space.ambient_dim()];
                for (ck, b) in c.iter().zip(self.space.basis()) {
                    crate::exact::axpy(&mut x, ck, b);
                }
                x
            })
            .collect();
        Subspace::span(self.space.ambient_dim(), &vs)
    }
}

/// Convenience: unit vector over the reals.
pub fn e(n: usize, i: usize) -> Vec<Rat> {
    unit(n, i)
}

/// Gaussian-rational version of an algebra.
pub fn complexify(g: &RealLieAlgebra) -> LieAlgebra<GaussRat> {
    let mut out = LieAlgebra::from_brackets(g.dim(), |i, j| {
        let mut v = vec![GaussRat::zero(); g.dim()];
        for (k, c) in g.basis_bracket(i, j) {
            v[*k] = c.to_gauss();
        }
        v
    });
    if let Some(a) = g.ambient() {
        out.ambient = Some(a.to_vec());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// so(3) on the basis E23-E32, E31-E13, E12-E21.
    fn so3() -> RealLieAlgebra {
        let l = |a: usize, b: usize| {
            let mut m = QMatrix::zeros(3, 3);
            m[(a, b)] = rat(1, 1);
            m[(b, a)] = rat(-1, 1);
            m.to_gauss()
        };
        RealLieAlgebra::from_ambient(vec![l(1, 2), l(2, 0), l(0, 1)]).unwrap()
    }

    #[test]
    fn so3_killing_form() {
        let g = so3();
        assert!(g.check_jacobi());
        assert!(g.ambient_consistent());
        assert_eq!(g.killing_form(), QMatrix::diag(&[rat(-2, 1), rat(-2, 1), rat(-2, 1)]));
        assert_eq!(g.killing_signature(), Signature::new(0, 3, 0));
        assert!(g.is_compact());
        assert_eq!(g.center().dim(), 0);
        assert_eq!(g.derived().dim(), 3);
    }

    #[test]
    fn closures() {
        let g = so3();
        let s = g.subalgebra_closure(&[e(3, 0)]).unwrap();
        assert_eq!(s.space.dim(), 1);
        let s = g.subalgebra_closure(&[e(3, 0), e(3, 1)]).unwrap();
        assert_eq!(s.space.dim(), 3);
        assert_eq!(g.ideal_closure(&[e(3, 2)]).dim(), 3);
        assert_eq!(g.centroid_basis().unwrap().len(), 1);
    }

    #[test]
    fn bad_structure_constants() {
        let r = RealLieAlgebra::from_structure_constants(2, &[(0, 1, 0, rat(1, 1)), (1, 0, 0, rat(1, 1))]);
        assert!(matches!(r, Err(Error::BadStructure(_))));
        let g = RealLieAlgebra::from_structure_constants(2, &[(0, 1, 1, rat(1, 1))]).unwrap();
        assert!(g.check_jacobi());
        assert!(!g.is_semisimple());
        assert!(matches!(g.checked_bracket(&e(3, 0), &e(2, 0)), Err(Error::DimMismatch(_))));
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::span(3, &[e(3, 0), e(3, 1)]);
        let b = Subspace::span(3, &[e(3, 1), e(3, 2)]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[e(3, 1)]));
        assert_eq!(a.sum(&b), Subspace::full(3));
        let v = vec![rat(2, 1), rat(3, 1), rat(0, 1)];
        assert_eq!(a.coords(&v), Some(vec![rat(2, 1), rat(3, 1)]));
        assert!(!a.contains(&e(3, 2)));
    }
}
