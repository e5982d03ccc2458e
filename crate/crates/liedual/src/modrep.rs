//! Effectiveness, irreducibility of the isotropy action of `h0` on `q0`, and
//! the ideal `[p1, p1] + p1` of a Riemannian pair.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, minimal_polynomial, rational_roots, Echelon, QMatrix, Rat};
use crate::ideals::minimal_ideals;
use crate::invol::{eigensplit, NoncompactPairC};
use crate::lie::{orthogonal_complement, Subspace};

/// No nonzero ideal of `g0` lies in `h0 = g0^sigma`.
pub fn is_effective(p: &NoncompactPairC) -> Result<bool> {
    let (h0, _) = eigensplit(&p.sigma);
    Ok(minimal_ideals(&p.g0)?.ideals.iter().all(|s| !s.is_subspace_of(&h0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleFlag {
    Irreducible,
    ReducibleWitness,
    Unknown,
}

impl ModuleFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModuleFlag::Irreducible => "IRREDUCIBLE",
            ModuleFlag::ReducibleWitness => "REDUCIBLE_WITNESS",
            ModuleFlag::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleAnalysis {
    /// Proper nonzero `ad(h0)`-stable subspaces of `q0`, in algebra coordinates.
    pub invariant_subspaces_found: Vec<Subspace>,
    pub flag: ModuleFlag,
    pub q0_dim: usize,
    /// Dimension of the commutant of `ad(h0)|q0`, when computed.
    pub commutant_dim: Option<usize>,
    /// Dimension of its part self-adjoint for `-B(x, theta y)`, when computed.
    pub self_adjoint_dim: Option<usize>,
}

/// Smallest subspace containing `seed` and stable under every `ms`.
fn stable_closure(ms: &[QMatrix], seed: &[Rat], n: usize) -> Subspace {
    let mut ech = Echelon::new(n);
    let mut queue = vec![seed.to_vec()];
    ech.insert(seed);
    while let Some(v) = queue.pop() {
        for m in ms {
            let w = m.mul_vec(&v);
            if ech.insert(&w) {
                queue.push(w);
            }
        }
    }
    Subspace::span(n, &ech.vectors())
}

/// Commutant basis of a family of `m x m` matrices, optionally restricted to
/// operators self-adjoint for the Gram matrix `gram`.
fn commutant(ms: &[QMatrix], m: usize, gram: Option<&QMatrix>) -> Vec<QMatrix> {
    // unknown T flattened row-major; T A - A T = 0 for every A
    let idx = |r: usize, c: usize| r * m + c;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for a in ms {
        for r in 0..m {
            for c in 0..m {
                let mut row = vec![Rat::zero(); m * m];
                for k in 0..m {
                    row[idx(r, k)] += &a[(k, c)];
                    row[idx(k, c)] -= &a[(r, k)];
                }
                rows.push(row);
            }
        }
    }
    if let Some(g) = gram {
        // G T - T^t G = 0
        for r in 0..m {
            for c in 0..m {
                let mut row = vec![Rat::zero(); m * m];
                for k in 0..m {
                    row[idx(k, c)] += &g[(r, k)];
                    row[idx(k, r)] -= &g[(k, c)];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..m * m).map(|k| QMatrix::from_fn(m, m, |r, c| if idx(r, c) == k { Rat::one() } else { Rat::zero() })).collect();
    }
    QMatrix::from_rows(rows)
        .kernel()
        .into_iter()
        .map(|v| QMatrix::from_fn(m, m, |r, c| v[idx(r, c)].clone()))
        .collect()
}

pub fn h_module_analysis(p: &NoncompactPairC) -> Result<ModuleAnalysis> {
    let g = &p.g0;
    let n = g.dim();
    let (h0, q0) = eigensplit(&p.sigma);
    let m = q0.dim();
    let ads: Vec<QMatrix> = h0.basis().iter().map(|h| g.ad(h)).collect();
    let mut found: Vec<Subspace> = Vec::new();
    for seed in q0.basis() {
        let s = stable_closure(&ads, seed, n);
        if s.dim() < m && !found.contains(&s) {
            found.push(s);
        }
    }
    if m == 0 {
        return Ok(ModuleAnalysis { invariant_subspaces_found: found, flag: ModuleFlag::Unknown, q0_dim: 0, commutant_dim: None, self_adjoint_dim: None });
    }
    if !found.is_empty() {
        return Ok(ModuleAnalysis { invariant_subspaces_found: found, flag: ModuleFlag::ReducibleWitness, q0_dim: m, commutant_dim: None, self_adjoint_dim: None });
    }
    // action in q0 coordinates
    let qb = q0.basis();
    let restricted: Vec<QMatrix> = ads
        .iter()
        .map(|a| {
            let cols: Vec<Vec<Rat>> = qb.iter().map(|v| q0.coords(&a.mul_vec(v)).expect("q0 is ad(h0)-stable")).collect();
            QMatrix::from_cols(m, &cols)
        })
        .collect();
    let killing = g.killing_form();
    let gram = QMatrix::from_fn(m, m, |i, j| -dot(&qb[i], &killing.mul_vec(&p.theta.mat().mul_vec(&qb[j]))));
    let full = commutant(&restricted, m, None);
    let sa = commutant(&restricted, m, Some(&gram));
    let mut analysis = ModuleAnalysis {
        invariant_subspaces_found: Vec::new(),
        flag: ModuleFlag::Unknown,
        q0_dim: m,
        commutant_dim: Some(full.len()),
        self_adjoint_dim: Some(sa.len()),
    };
    if sa.len() == 1 {
        analysis.flag = ModuleFlag::Irreducible;
        return Ok(analysis);
    }
    for t in &sa {
        for r in rational_roots(&minimal_polynomial(t)) {
            let k = t.shift(&r).kernel();
            if !k.is_empty() && k.len() < m {
                let lifted: Vec<Vec<Rat>> = k
                    .iter()
                    .map(|c| {
                        let mut v = vec![Rat::zero(); n];
                        for (ck, b) in c.iter().zip(qb) {
                            crate::exact::axpy(&mut v, ck, b);
                        }
                        v
                    })
                    .collect();
                let s = Subspace::span(n, &lifted);
                if !analysis.invariant_subspaces_found.contains(&s) {
                    analysis.invariant_subspaces_found.push(s);
                }
            }
        }
    }
    if !analysis.invariant_subspaces_found.is_empty() {
        analysis.flag = ModuleFlag::ReducibleWitness;
    }
    Ok(analysis)
}

/// Whether `w` is a proper nonzero subspace of `q0` stable under `ad(h0)`.
pub fn is_invariant_witness(p: &NoncompactPairC, w: &Subspace) -> bool {
    let (h0, q0) = eigensplit(&p.sigma);
    w.dim() > 0 && w.dim() < q0.dim() && w.is_subspace_of(&q0) && h0.basis().iter().all(|h| w.is_invariant(&p.g0.ad(h)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RiemannianIdeal {
    /// `[p1, p1] + p1`
    pub l0: Subspace,
    /// `B`-orthogonal complement of `p1` in `p0`.
    pub p2: Subspace,
    pub is_ideal: bool,
    pub theta_stable: bool,
    /// `[p1, p2] = 0`
    pub p1_p2_commute: bool,
}

impl RiemannianIdeal {
    pub fn passed(&self) -> bool {
        self.is_ideal && self.theta_stable && self.p1_p2_commute
    }
}

pub fn riemannian_ideal(p: &NoncompactPairC, p1: &Subspace) -> Result<RiemannianIdeal> {
    if !p.is_riemannian() {
        return Err(Error::NotRiemannian);
    }
    let g = &p.g0;
    let (k0, p0) = eigensplit(&p.theta);
    if !p1.is_subspace_of(&p0) || !k0.basis().iter().all(|k| p1.is_invariant(&g.ad(k))) {
        return Err(Error::NotInvariant);
    }
    let l0 = g.bracket_spaces(p1, p1).sum(p1);
    let p2 = orthogonal_complement(&g.killing_form(), p1).intersect(&p0);
    Ok(RiemannianIdeal {
        is_ideal: g.is_ideal(&l0),
        theta_stable: l0.is_invariant(p.theta.mat()),
        p1_p2_commute: g.bracket_spaces(p1, &p2).dim() == 0,
        l0,
        p2,
    })
}
