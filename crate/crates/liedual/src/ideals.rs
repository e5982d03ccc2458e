//! Minimal ideals, invariant-ideal lattices, irreducible components, the
//! ideal correspondence under duality, and the classification of irreducible
//! non-simple triads and pairs.

use num_traits::{One, Zero};

use crate::duality::{psi_twist, transport_subspace};
use crate::error::{Error, Result};
use crate::exact::{minimal_polynomial, rational_roots, QMatrix, Rat};
use crate::invol::{invariant_profile, verify_equivalence_witness, CompactTriad, Involution, NoncompactPairC, SymmetricObject};
use crate::lie::{RealLieAlgebra, SubalgebraView, Subspace};

/// Minimal ideals of a semisimple algebra in discovery order.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealDecomposition {
    pub ideals: Vec<Subspace>,
}

impl IdealDecomposition {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// `perm[k] = j` when the involution maps the k-th minimal ideal onto the j-th.
    pub fn permutation(&self, inv: &Involution) -> Result<Vec<usize>> {
        self.ideals
            .iter()
            .map(|s| {
                let img = s.image(inv.mat());
                self.ideals
                    .iter()
                    .position(|t| *t == img)
                    .ok_or_else(|| Error::BadStructure("automorphism does not permute the minimal ideals".into()))
            })
            .collect()
    }
}

/// Shrinks an ideal by replacing it with the smallest ideal generated by one of its basis vectors.
fn refine(g: &RealLieAlgebra, mut ideal: Subspace) -> Subspace {
    loop {
        let best = ideal.basis().iter().map(|b| g.ideal_closure(std::slice::from_ref(b))).min_by_key(|s| s.dim());
        match best {
            Some(b) if b.dim() < ideal.dim() => ideal = b,
            _ => return ideal,
        }
    }
}

/// A proper nonzero ideal inside `ideal`, found from the centroid of the
/// induced algebra, or `None` if the centroid is a field.
fn split_ideal(g: &RealLieAlgebra, ideal: &Subspace) -> Result<Option<Subspace>> {
    let view = SubalgebraView::new(g, ideal.clone())?;
    let basis = view
        .algebra
        .centroid_basis()
        .ok_or_else(|| Error::BadStructure("no cyclic vector for the adjoint module".into()))?;
    if basis.len() <= 1 {
        return Ok(None);
    }
    let mut candidates: Vec<QMatrix> = basis[1..].to_vec();
    for a in 1..basis.len() {
        for b in a..basis.len() {
            candidates.push(basis[a].mul(&basis[b]));
        }
    }
    let n = ideal.dim();
    for t in &candidates {
        let roots = rational_roots(&minimal_polynomial(t));
        for r in roots {
            let k = t.shift(&r).kernel();
            if !k.is_empty() && k.len() < n {
                return Ok(Some(view.lift(&Subspace::span(n, &k))));
            }
        }
    }
    if basis.len() == 2 {
        return Ok(None);
    }
    Err(Error::BadStructure("ideal does not split over Q".into()))
}

pub fn minimal_ideals(g: &RealLieAlgebra) -> Result<IdealDecomposition> {
    if !g.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let killing = g.killing_form();
    let mut remaining = Subspace::full(g.dim());
    let mut ideals = Vec::new();
    while remaining.dim() > 0 {
        let seed = remaining.basis()[0].clone();
        let mut ideal = refine(g, g.ideal_closure(&[seed]));
        while let Some(smaller) = split_ideal(g, &ideal)? {
            ideal = refine(g, smaller);
        }
        remaining = remaining.intersect(&crate::lie::orthogonal_complement(&killing, &ideal));
        ideals.push(ideal);
    }
    Ok(IdealDecomposition { ideals })
}

/// Involution-invariant ideals: all sums of orbits of minimal ideals.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantLattice {
    pub decomposition: IdealDecomposition,
    /// Orbits of the minimal ideals under the group generated by the involutions.
    pub orbits: Vec<Vec<usize>>,
    /// Every invariant ideal, indexed by the bitmask of orbits it contains.
    pub ideals: Vec<Subspace>,
}

impl InvariantLattice {
    /// Whether the only invariant ideals are `0` and the whole algebra.
    pub fn is_trivial(&self) -> bool {
        self.orbits.len() == 1
    }

    /// Sum of the minimal ideals in an orbit.
    pub fn orbit_ideal(&self, k: usize) -> Subspace {
        let n = self.ideals[0].ambient_dim();
        self.orbits[k].iter().fold(Subspace::zero(n), |acc, &i| acc.sum(&self.decomposition.ideals[i]))
    }
}

pub fn invariant_ideal_lattice(g: &RealLieAlgebra, invs: &[&Involution]) -> Result<InvariantLattice> {
    let decomposition = minimal_ideals(g)?;
    let m = decomposition.len();
    let perms: Vec<Vec<usize>> = invs.iter().map(|i| decomposition.permutation(i)).collect::<Result<_>>()?;
    let mut label: Vec<usize> = (0..m).collect();
    loop {
        let mut changed = false;
        for p in &perms {
            for k in 0..m {
                let (a, b) = (label[k], label[p[k]]);
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    for l in label.iter_mut() {
                        if *l == hi {
                            *l = lo;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut reps: Vec<usize> = label.clone();
    reps.sort_unstable();
    reps.dedup();
    let orbits: Vec<Vec<usize>> = reps.iter().map(|r| (0..m).filter(|&k| label[k] == *r).collect()).collect();
    let n = g.dim();
    let mut ideals = Vec::new();
    for mask in 0u64..(1u64 << orbits.len()) {
        let mut s = Subspace::zero(n);
        for (o, orbit) in orbits.iter().enumerate() {
            if mask >> o & 1 == 1 {
                for &k in orbit {
                    s = s.sum(&decomposition.ideals[k]);
                }
            }
        }
        ideals.push(s);
    }
    Ok(InvariantLattice { decomposition, orbits, ideals })
}

/// Lattice of ideals invariant under both involutions of a triad or pair.
pub fn object_lattice<S: SymmetricObject>(obj: &S) -> Result<InvariantLattice> {
    invariant_ideal_lattice(obj.algebra(), &[obj.distinguished(), obj.other()])
}

pub fn is_irreducible<S: SymmetricObject>(obj: &S) -> Result<bool> {
    Ok(object_lattice(obj)?.is_trivial())
}

/// Restriction of an invariant subspace: induced algebra and involution matrices.
fn restrict_parts(g: &RealLieAlgebra, invs: [&Involution; 2], s: &Subspace) -> Result<(RealLieAlgebra, [Involution; 2])> {
    let alg = g.restrict(s)?;
    let mut out = Vec::new();
    for inv in invs {
        let cols: Vec<Vec<Rat>> = s
            .basis()
            .iter()
            .map(|b| s.coords(&inv.mat().mul_vec(b)).ok_or(Error::ThetaNotStable))
            .collect::<Result<_>>()?;
        out.push(Involution::unchecked(QMatrix::from_cols(s.dim(), &cols)));
    }
    let b = out.pop().unwrap();
    let a = out.pop().unwrap();
    Ok((alg, [a, b]))
}

pub fn irreducible_components_triad(t: &CompactTriad) -> Result<Vec<CompactTriad>> {
    let lat = object_lattice(t)?;
    (0..lat.orbits.len())
        .map(|k| {
            let s = lat.orbit_ideal(k);
            let (g, [a, b]) = restrict_parts(&t.g, [&t.theta1, &t.theta2], &s)?;
            Ok(CompactTriad { g, theta1: a, theta2: b })
        })
        .collect()
}

pub fn irreducible_components_pair(p: &NoncompactPairC) -> Result<Vec<NoncompactPairC>> {
    let lat = object_lattice(p)?;
    (0..lat.orbits.len())
        .map(|k| {
            let s = lat.orbit_ideal(k);
            let (g0, [sigma, theta]) = restrict_parts(&p.g0, [&p.sigma, &p.theta], &s)?;
            if !crate::invol::is_cartan(&g0, &theta) {
                return Err(Error::ThetaNotStable);
            }
            Ok(NoncompactPairC { g0, sigma, theta })
        })
        .collect()
}

/// Outcome of matching the invariant-ideal lattices of a pair and its compact dual.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrespondenceReport {
    pub pair_lattice_size: usize,
    pub triad_lattice_size: usize,
    /// Dimensions of the invariant ideals of the pair, in lattice order.
    pub dims: Vec<usize>,
    /// Images, in triad coordinates, of the pair's invariant ideals.
    pub images: Vec<Subspace>,
    /// Every image is a distinct invariant ideal of the triad and every
    /// invariant ideal of the triad is hit.
    pub bijective: bool,
    /// Dimensions are preserved.
    pub dims_preserved: bool,
    /// Pulling each image back through the inverse twist recovers the ideal.
    pub round_trip: bool,
    /// The pair is irreducible exactly when the triad is.
    pub irreducibility_agrees: bool,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.dims_preserved && self.round_trip && self.irreducibility_agrees
    }
}

/// `l0 -> l0^theta + i l0^{-theta}`, expressed in the adapted coordinates of the
/// compact dual.
pub fn ideal_correspondence(p: &NoncompactPairC) -> Result<CorrespondenceReport> {
    let dual = psi_twist(p)?;
    let t = &dual.object;
    let cinv = dual.change.inverse().ok_or(Error::Singular)?;
    let lp = object_lattice(p)?;
    let lt = object_lattice(t)?;
    let images: Vec<Subspace> = lp.ideals.iter().map(|s| transport_subspace(s, &p.theta, &cinv)).collect();
    let mut hit = vec![false; lt.ideals.len()];
    let mut injective = true;
    for img in &images {
        match lt.ideals.iter().position(|s| s == img) {
            Some(k) if !hit[k] => hit[k] = true,
            _ => injective = false,
        }
    }
    let bijective = injective && hit.iter().all(|&h| h) && images.len() == lt.ideals.len();
    let dims: Vec<usize> = lp.ideals.iter().map(|s| s.dim()).collect();
    let dims_preserved = images.iter().zip(&dims).all(|(s, d)| s.dim() == *d);
    let round_trip = images.iter().zip(&lp.ideals).all(|(img, orig)| transport_subspace(img, &t.theta1, &dual.change) == *orig);
    Ok(CorrespondenceReport {
        pair_lattice_size: lp.ideals.len(),
        triad_lattice_size: lt.ideals.len(),
        dims,
        images,
        bijective,
        dims_preserved,
        round_trip,
        irreducibility_agrees: lp.is_trivial() == lt.is_trivial(),
    })
}

/// Irreducible types of triads and pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeTag {
    Simple,
    Ta,
    Tb,
    Tc,
    Td,
    Pa,
    Pb,
    Pc,
    Pd,
}

impl TypeTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            TypeTag::Simple => "SIMPLE",
            TypeTag::Ta => "T_a",
            TypeTag::Tb => "T_b",
            TypeTag::Tc => "T_c",
            TypeTag::Td => "T_d",
            TypeTag::Pa => "P_a",
            TypeTag::Pb => "P_b",
            TypeTag::Pc => "P_c",
            TypeTag::Pd => "P_d",
        }
    }

    /// Type of the dual object under the duality correspondence.
    pub fn dual(&self) -> TypeTag {
        match self {
            TypeTag::Simple => TypeTag::Simple,
            TypeTag::Ta => TypeTag::Pa,
            TypeTag::Tb => TypeTag::Pb,
            TypeTag::Tc => TypeTag::Pc,
            TypeTag::Td => TypeTag::Pd,
            TypeTag::Pa => TypeTag::Ta,
            TypeTag::Pb => TypeTag::Tb,
            TypeTag::Pc => TypeTag::Tc,
            TypeTag::Pd => TypeTag::Td,
        }
    }
}

/// Whether `sigma` is complex linear or antilinear for a complex structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    Antilinear,
}

/// Data the classification was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct Evidence {
    pub ideal_count: usize,
    /// Permutation of the minimal ideals induced by each involution.
    pub permutations: Vec<Vec<usize>>,
    pub centroid_dims: Vec<usize>,
    pub linearity: Option<Linearity>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibleType {
    pub tag: TypeTag,
    pub evidence: Evidence,
}

fn is_swap(p: &[usize]) -> bool {
    p.len() == 2 && p[0] == 1 && p[1] == 0
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut s = p;
                    s.sort_unstable();
                    if s == [0, 1, 2, 3] {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

pub fn classify_triad(t: &CompactTriad) -> Result<IrreducibleType> {
    let lat = object_lattice(t)?;
    if !lat.is_trivial() {
        return Err(Error::NotIrreducible);
    }
    let d = &lat.decomposition;
    let p1 = d.permutation(&t.theta1)?;
    let p2 = d.permutation(&t.theta2)?;
    let tag = match d.len() {
        1 => TypeTag::Simple,
        2 => match (is_swap(&p1), is_swap(&p2)) {
            (true, true) => TypeTag::Ta,
            (true, false) => TypeTag::Tb,
            (false, true) => TypeTag::Td,
            (false, false) => return Err(Error::NotIrreducible),
        },
        4 => {
            let a = [1, 0, 3, 2];
            let b = [3, 2, 1, 0];
            // relabel r: position k of the standard pattern is ideal r[k]
            let ok = permutations4().into_iter().any(|r| (0..4).all(|k| p1[r[k]] == r[a[k]] && p2[r[k]] == r[b[k]]));
            if ok {
                TypeTag::Tc
            } else {
                return Err(Error::UnrecognizedPattern);
            }
        }
        _ => return Err(Error::UnrecognizedPattern),
    };
    Ok(IrreducibleType {
        tag,
        evidence: Evidence { ideal_count: d.len(), permutations: vec![p1, p2], centroid_dims: Vec::new(), linearity: None },
    })
}

/// Centroid basis of a simple algebra.
fn simple_centroid(g: &RealLieAlgebra) -> Result<Vec<QMatrix>> {
    g.centroid_basis().ok_or_else(|| Error::BadStructure("no cyclic vector for the adjoint module".into()))
}

/// Dimension of the centroid of an algebra with one minimal ideal: 1, or 2
/// when the algebra carries a complex structure.
pub fn centroid_dim(g: &RealLieAlgebra) -> Result<usize> {
    if minimal_ideals(g)?.len() != 1 {
        return Err(Error::NotSimpleSummand);
    }
    Ok(simple_centroid(g)?.len())
}

/// Traceless centroid element `J` with `J^2` a negative multiple of the identity.
pub fn complex_structure(g: &RealLieAlgebra) -> Result<Option<QMatrix>> {
    let basis = simple_centroid(g)?;
    if basis.len() < 2 {
        return Ok(None);
    }
    let t = &basis[1];
    let n = g.dim();
    let shift = t.trace() / Rat::from_integer((n as i64).into());
    let j = t.shift(&shift);
    let sq = j.mul(&j);
    let c = -sq[(0, 0)].clone();
    if sq == QMatrix::identity(n).scale(&-c.clone()) && c > Rat::zero() {
        Ok(Some(j))
    } else {
        Ok(None)
    }
}

pub fn classify_pair(p: &NoncompactPairC) -> Result<IrreducibleType> {
    let lat = object_lattice(p)?;
    if !lat.is_trivial() {
        return Err(Error::NotIrreducible);
    }
    let d = &lat.decomposition;
    let ps = d.permutation(&p.sigma)?;
    let pt = d.permutation(&p.theta)?;
    let mut evidence = Evidence { ideal_count: d.len(), permutations: vec![ps.clone(), pt], centroid_dims: Vec::new(), linearity: None };
    let tag = match d.len() {
        1 => {
            let basis = simple_centroid(&p.g0)?;
            evidence.centroid_dims.push(basis.len());
            match basis.len() {
                1 => TypeTag::Simple,
                2 => {
                    let j = complex_structure(&p.g0)?.ok_or(Error::UnrecognizedPattern)?;
                    let sj = p.sigma.mat().mul(&j);
                    let js = j.mul(p.sigma.mat());
                    if sj == js {
                        evidence.linearity = Some(Linearity::Linear);
                        TypeTag::Pb
                    } else if sj == js.scale(&-Rat::one()) {
                        evidence.linearity = Some(Linearity::Antilinear);
                        TypeTag::Pa
                    } else {
                        return Err(Error::UnrecognizedPattern);
                    }
                }
                _ => return Err(Error::UnrecognizedPattern),
            }
        }
        2 if is_swap(&ps) => {
            let factor = p.g0.restrict(&d.ideals[0])?;
            let c = simple_centroid(&factor)?.len();
            evidence.centroid_dims.push(c);
            match c {
                2 => TypeTag::Pc,
                1 => TypeTag::Pd,
                _ => return Err(Error::UnrecognizedPattern),
            }
        }
        _ => return Err(Error::UnrecognizedPattern),
    };
    Ok(IrreducibleType { tag, evidence })
}

/// Three-valued answer: proven, refuted by an invariant, or undecided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Self-duality and self-association of a triad.
#[derive(Clone, Debug, PartialEq)]
pub struct SelfReport {
    pub self_dual: Verdict,
    /// Index of the supplied witness proving self-duality.
    pub dual_witness: Option<usize>,
    pub self_associated: Verdict,
    pub associated_witness: Option<usize>,
}

fn decide<S: SymmetricObject>(obj: &S, other: &S, witnesses: &[QMatrix]) -> Result<(Verdict, Option<usize>)> {
    for (k, w) in witnesses.iter().enumerate() {
        if w.rows() == obj.algebra().dim() && w.cols() == obj.algebra().dim() && verify_equivalence_witness(obj, other, w)? {
            return Ok((Verdict::Yes, Some(k)));
        }
    }
    if invariant_profile(obj)? != invariant_profile(other)? {
        return Ok((Verdict::No, None));
    }
    Ok((Verdict::Unknown, None))
}

/// Tries each candidate map as a witness `t -> t^d` and `t -> t^a`; falls back
/// to invariant profiles to refute.
pub fn self_properties_triad(t: &CompactTriad, witnesses: &[QMatrix]) -> Result<SelfReport> {
    let dual = crate::duality::dual_triad(t);
    let assoc = crate::duality::associated_triad(t);
    let (self_dual, dual_witness) = decide(t, &dual, witnesses)?;
    let (self_associated, associated_witness) = decide(t, &assoc, witnesses)?;
    Ok(SelfReport { self_dual, dual_witness, self_associated, associated_witness })
}

/// Same as [`self_properties_triad`] for pairs, comparing against the dual and associated pairs
/// transported into the pair's own coordinates where possible.
pub fn self_properties_pair(p: &NoncompactPairC, witnesses: &[QMatrix]) -> Result<SelfReport> {
    let dual = crate::duality::dual_pair(p)?;
    let assoc = crate::duality::associated_pair(p).object;
    let (self_dual, dual_witness) = decide(p, &dual, witnesses)?;
    let (self_associated, associated_witness) = decide(p, &assoc, witnesses)?;
    Ok(SelfReport { self_dual, dual_witness, self_associated, associated_witness })
}

/// Whether `x` is the identity on the given subspace.
pub fn fixes(s: &Subspace, m: &QMatrix) -> bool {
    s.basis().iter().all(|v| m.mul_vec(v) == *v)
}

