//! Exact scalars and dense linear algebra over Q and Q(i).

use std::fmt;
use std::ops::{Index, IndexMut, Neg};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{NumRef, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;
pub type GaussRat = Complex<Rat>;

/// Field of exact scalars the linear algebra is generic over.
pub trait Scalar: NumRef + Clone + Neg<Output = Self> + fmt::Debug + Send + Sync + 'static {
    fn from_rat(r: Rat) -> Self;

    fn to_gauss(&self) -> GaussRat;

    fn int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }
}

impl Scalar for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn to_gauss(&self) -> GaussRat {
        Complex::new(self.clone(), Rat::zero())
    }
}

impl Scalar for GaussRat {
    fn from_rat(r: Rat) -> Self {
        Complex::new(r, Rat::zero())
    }

    fn to_gauss(&self) -> GaussRat {
        self.clone()
    }
}

/// `n/d` as a rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn gauss(re: Rat, im: Rat) -> GaussRat {
    Complex::new(re, im)
}

/// The imaginary unit.
pub fn gi() -> GaussRat {
    Complex::new(Rat::zero(), Rat::one())
}

pub fn is_zero_vec<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y).collect()
}

pub fn vec_sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}

pub fn vec_scale<T: Scalar>(c: &T, a: &[T]) -> Vec<T> {
    a.iter().map(|x| x.clone() * c).collect()
}

/// `a += c * b`
pub fn axpy<T: Scalar>(a: &mut [T], c: &T, b: &[T]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.clone() + c.clone() * y;
        }
    }
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc + x.clone() * y })
}

pub fn unit<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

pub fn to_gauss_vec(v: &[Rat]) -> Vec<GaussRat> {
    v.iter().map(|x| GaussRat::from_rat(x.clone())).collect()
}

/// Real and imaginary parts of a Gaussian vector.
pub fn split_gauss_vec(v: &[GaussRat]) -> (Vec<Rat>, Vec<Rat>) {
    (v.iter().map(|z| z.re.clone()).collect(), v.iter().map(|z| z.im.clone()).collect())
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Matrix<Rat>;
pub type GMatrix = Matrix<GaussRat>;

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors; `n` is the column length.
    pub fn from_cols(n: usize, cols: &[Vec<T>]) -> Self {
        Self::from_fn(n, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn diag(entries: &[T]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| if r == c { self[(r, c)].is_one() } else { self[(r, c)].is_zero() }))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_add(&self.data, &o.data) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &o.data) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "product shape");
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// `self - c I`
    pub fn shift(&self, c: &T) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] = m[(i, i)].clone() - c;
        }
        m
    }

    /// Commutator `self * o - o * self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut m = Self::zeros(self.rows + o.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..o.rows {
            for c in 0..o.cols {
                m[(self.rows + r, self.cols + c)] = o[(r, c)].clone();
            }
        }
        m
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows.start + r, cols.start + c)].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduced row echelon form and pivot columns; pivots are chosen as the first
    /// nonzero entry so the result is canonical.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m[(r, c)].clone();
            for k in c..m.cols {
                if !m[(r, k)].is_zero() {
                    m[(r, k)] = m[(r, k)].clone() * &inv;
                }
            }
            let pivot_row: Vec<T> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (off, p) in pivot_row.iter().enumerate() {
                    if !p.is_zero() {
                        let k = c + off;
                        m[(i, k)] = m[(i, k)].clone() - f.clone() * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis: one vector per free column, in increasing column order,
    /// with a 1 in its free column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| if c < self.cols { self[(r, c)].clone() } else { b[r].clone() });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r[(k, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                T::one()
            } else {
                T::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    /// Flattened row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl QMatrix {
    pub fn to_gauss(&self) -> GMatrix {
        self.map(|x| GaussRat::from_rat(x.clone()))
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }
}

impl GMatrix {
    /// The real matrix, if every entry has zero imaginary part.
    pub fn to_real(&self) -> Option<QMatrix> {
        if self.data.iter().all(|z| z.im.is_zero()) {
            Some(self.map(|z| z.re.clone()))
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }
}

/// Incrementally built row echelon basis, used for spans and rank tracking.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    n: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row).skip(*p) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.n);
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / r[p].clone();
        let r: Vec<T> = r.into_iter().map(|x| x * &inv).collect();
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r));
        true
    }

    pub fn vectors(&self) -> Vec<Vec<T>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// Eigenspaces of a square matrix for a list of candidate eigenvalues.
#[derive(Clone, Debug)]
pub struct Eigenspaces<T> {
    /// Nonempty eigenspaces in candidate order.
    pub spaces: Vec<(T, Vec<Vec<T>>)>,
    /// Whether the eigenspaces together span the whole space.
    pub full: bool,
}

impl<T: Scalar> Eigenspaces<T> {
    pub fn get(&self, value: &T) -> Option<&Vec<Vec<T>>> {
        self.spaces.iter().find(|(v, _)| v == value).map(|(_, b)| b)
    }
}

pub fn eigenspaces<T: Scalar>(m: &Matrix<T>, candidates: &[T]) -> Eigenspaces<T> {
    assert!(m.is_square(), "eigenspaces of a non-square matrix");
    let mut seen: Vec<T> = Vec::new();
    let mut spaces = Vec::new();
    let mut total = 0;
    for c in candidates {
        if seen.contains(c) {
            continue;
        }
        seen.push(c.clone());
        let basis = m.shift(c).kernel();
        if !basis.is_empty() {
            total += basis.len();
            spaces.push((c.clone(), basis));
        }
    }
    Eigenspaces { spaces, full: total == m.rows() }
}

/// Monic minimal polynomial of a square matrix, coefficients from degree 0 upwards.
pub fn minimal_polynomial<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let n = m.rows();
    let mut powers: Vec<Matrix<T>> = vec![Matrix::identity(n)];
    let mut span = Echelon::new(n * n);
    span.insert(powers[0].entries());
    loop {
        let next = powers.last().unwrap().mul(m);
        if !span.insert(next.entries()) {
            let cols: Vec<Vec<T>> = powers.iter().map(|p| p.entries().to_vec()).collect();
            let a = Matrix::from_cols(n * n, &cols);
            let c = a.solve(next.entries()).expect("dependent power lies in the span");
            let mut poly: Vec<T> = c.into_iter().map(|x| -x).collect();
            poly.push(T::one());
            return poly;
        }
        powers.push(next);
    }
}

/// Evaluates a polynomial (coefficients from degree 0) at `x`.
pub fn poly_eval<T: Scalar>(poly: &[T], x: &T) -> T {
    poly.iter().rev().fold(T::zero(), |acc, c| acc * x + c)
}

/// Evaluates a polynomial at a square matrix.
pub fn poly_eval_matrix<T: Scalar>(poly: &[T], m: &Matrix<T>) -> Matrix<T> {
    let n = m.rows();
    poly.iter().rev().fold(Matrix::zeros(n, n), |acc, c| acc.mul(m).add(&Matrix::identity(n).scale(c)))
}

fn poly_trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder and quotient of `a` by a nonzero `b`.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let mut q = vec![Rat::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &b[db];
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
        r.pop();
        poly_trim(&mut r);
    }
    (r, q)
}

fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let (r, _) = poly_divmod(&a, &b);
        a = std::mem::replace(&mut b, r);
    }
    a
}

fn poly_derivative(p: &[Rat]) -> Vec<Rat> {
    p.iter().enumerate().skip(1).map(|(k, c)| c * Rat::from_integer(BigInt::from(k))).collect()
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut chain = vec![p.to_vec(), poly_derivative(p)];
    loop {
        let n = chain.len();
        let (r, _) = poly_divmod(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            return chain;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
}

fn sign_changes(chain: &[Vec<Rat>], x: &Rat) -> usize {
    let signs: Vec<bool> = chain.iter().map(|p| poly_eval(p, x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Integer bound `2 max_k |a_{n-k} / a_n|^{1/k}` on the absolute value of the
/// roots, with the constant term halved.
fn fujiwara_bound(ints: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    let n = ints.len() - 1;
    let lead = ints[n].abs();
    let mut best = BigInt::zero();
    for k in 1..=n {
        let mut num = ints[n - k].abs();
        let mut den = lead.clone();
        if k == n {
            den *= 2;
        }
        if num.is_zero() {
            continue;
        }
        num = num.div_ceil(&den);
        let mut r = num.nth_root(k as u32);
        if r.pow(k as u32) < num {
            r += 1;
        }
        best = best.max(r);
    }
    best * 2 + 1
}

/// Integer roots of a squarefree polynomial in `(lo, hi]` by Sturm bisection.
fn integer_roots_in(chain: &[Vec<Rat>], lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    let count = |a: &BigInt| sign_changes(chain, &Rat::from_integer(a.clone()));
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        if count(&a) == count(&b) {
            continue;
        }
        if &b - &a == BigInt::one() {
            if poly_eval(&chain[0], &Rat::from_integer(b.clone())).is_zero() {
                out.push(b);
            }
            continue;
        }
        let mid: BigInt = num_integer::Integer::div_floor(&(&a + &b), &BigInt::from(2));
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
}

/// Distinct rational roots of a rational polynomial, in increasing order.
///
/// With integer coefficients `a_k`, the substitution `y = a_n x` gives a monic
/// integer polynomial whose integer roots are isolated by Sturm bisection.
pub fn rational_roots(poly: &[Rat]) -> Vec<Rat> {
    use num_integer::Integer;
    let mut p: Vec<Rat> = poly.to_vec();
    poly_trim(&mut p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let n = ints.len() - 1;
    let lead = ints[n].clone();
    let monic: Vec<BigInt> = ints.iter().enumerate().map(|(k, a)| if k == n { BigInt::one() } else { a * lead.pow((n - 1 - k) as u32) }).collect();
    let m: Vec<Rat> = monic.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let g = poly_gcd(&m, &poly_derivative(&m));
    let (_, squarefree) = poly_divmod(&m, &g);
    let bound = fujiwara_bound(&monic);
    let mut ys = Vec::new();
    integer_roots_in(&sturm_chain(&squarefree), -bound.clone() - 1, bound, &mut ys);
    let mut roots: Vec<Rat> = ys.into_iter().map(|y| Rat::new(y, lead.clone())).collect();
    roots.sort();
    roots
}

/// Sylvester inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

impl Signature {
    pub fn new(n_pos: usize, n_neg: usize, n_zero: usize) -> Self {
        Signature { n_pos, n_neg, n_zero }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }
}

/// Inertia by symmetric Gaussian elimination (congruence diagonalization).
pub fn symmetric_signature(form: &QMatrix) -> Result<Signature> {
    if !form.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    let n = form.rows();
    let mut a = form.clone();
    let mut sig = Signature::new(0, 0, 0);
    let mut k = 0;
    while k < n {
        let diag = (k..n).find(|&i| !a[(i, i)].is_zero());
        let p = match diag {
            Some(i) => i,
            None => {
                // All remaining diagonal entries vanish; e_i <- e_i + e_j creates one.
                let off = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero());
                let Some((i, j)) = off else {
                    sig.n_zero += n - k;
                    break;
                };
                for c in 0..n {
                    let v = a[(j, c)].clone();
                    a[(i, c)] = a[(i, c)].clone() + v;
                }
                for r in 0..n {
                    let v = a[(r, j)].clone();
                    a[(r, i)] = a[(r, i)].clone() + v;
                }
                i
            }
        };
        if p != k {
            a.swap_rows(p, k);
            for r in 0..n {
                a.data.swap(r * n + p, r * n + k);
            }
        }
        let d = a[(k, k)].clone();
        if d.is_positive() {
            sig.n_pos += 1;
        } else {
            sig.n_neg += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = a[(i, k)].clone() / &d;
            for j in k + 1..n {
                if !a[(k, j)].is_zero() {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * &a[(k, j)];
                }
            }
            a[(i, k)] = Rat::zero();
        }
        for j in k + 1..n {
            a[(k, j)] = Rat::zero();
        }
        k += 1;
    }
    Ok(sig)
}

/// Whether a symmetric form is positive definite.
pub fn is_positive_definite(form: &QMatrix) -> Result<bool> {
    let s = symmetric_signature(form)?;
    Ok(s.n_pos == form.rows())
}

/// Whether a symmetric form is negative definite.
pub fn is_negative_definite(form: &QMatrix) -> Result<bool> {
    let s = symmetric_signature(form)?;
    Ok(s.n_neg == form.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_ints(rows)
    }

    #[test]
    fn kernel_examples() {
        let z = q(&[&[0, 0], &[0, 0]]);
        assert_eq!(z.kernel(), vec![unit(2, 0), unit(2, 1)]);
        assert!(QMatrix::identity(3).kernel().is_empty());
        let m = q(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel(), vec![vec![rat(-1, 1), rat(1, 1)]]);
    }

    #[test]
    fn eigenspace_examples() {
        let d = q(&[&[1, 0], &[0, -1]]);
        let e = eigenspaces(&d, &[rat(1, 1), rat(-1, 1)]);
        assert!(e.full);
        assert_eq!(e.spaces.len(), 2);
        assert!(e.spaces.iter().all(|(_, b)| b.len() == 1));
        let e = eigenspaces(&QMatrix::identity(3), &[rat(1, 1)]);
        assert!(e.full);
        assert_eq!(e.get(&rat(1, 1)).unwrap().len(), 3);
        let n = q(&[&[0, 1], &[0, 0]]);
        let e = eigenspaces(&n, &[rat(0, 1)]);
        assert!(!e.full);
        assert_eq!(e.get(&rat(0, 1)).unwrap().len(), 1);
    }

    #[test]
    fn gaussian_eigenspaces_of_rotation() {
        let r = q(&[&[0, -1], &[1, 0]]).to_gauss();
        let e = eigenspaces(&r, &[gi(), -gi()]);
        assert!(e.full);
        for (val, basis) in &e.spaces {
            for v in basis {
                assert_eq!(r.mul_vec(v), vec_scale(val, v));
            }
        }
    }

    #[test]
    fn signature_examples() {
        assert_eq!(symmetric_signature(&q(&[&[2, 0], &[0, 3]])).unwrap(), Signature::new(2, 0, 0));
        assert_eq!(symmetric_signature(&q(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]])).unwrap(), Signature::new(1, 1, 1));
        assert_eq!(symmetric_signature(&q(&[&[0, 1], &[1, 0]])).unwrap(), Signature::new(1, 1, 0));
        assert_eq!(symmetric_signature(&q(&[&[0, 1], &[2, 0]])), Err(Error::NonSymmetric));
    }

    #[test]
    fn rational_root_examples() {
        // (x - 2)^2 (2x + 3) (x^2 + 1)
        let p = [rat(12, 1), rat(-4, 1), rat(7, 1), rat(-2, 1), rat(-5, 1), rat(2, 1)];
        assert_eq!(rational_roots(&p), vec![rat(-3, 2), rat(2, 1)]);
        assert_eq!(rational_roots(&[rat(-2, 1), rat(0, 1), rat(1, 1)]), vec![]);
        assert_eq!(rational_roots(&[rat(0, 1), rat(0, 1), rat(1, 1)]), vec![rat(0, 1)]);
        // roots far beyond any divisor search
        let (a, b) = (rat(982_451_653, 7_919), rat(-1_000_000_007, 3));
        let p = [a.clone() * &b, -(a.clone() + &b), rat(1, 1)];
        assert_eq!(rational_roots(&p), vec![b, a]);
    }

    #[test]
    fn inverse_and_solve() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&[rat(3, 1), rat(2, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(1, 1)]);
        assert!(q(&[&[1, 1], &[1, 1]]).solve(&[rat(1, 1), rat(2, 1)]).is_none());
    }
}
