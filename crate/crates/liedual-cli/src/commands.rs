//! Subcommand handlers. Each returns the text for stdout or a [`Failure`]
//! carrying the exit code.

use liedual::catalog::{fixture, fixture_suite, witness, FamilySpec, Object, WitnessCase};
use liedual::duality::{associated_pair, associated_triad, dual_pair_twist, dual_triad, fixed_subalgebra_dual, phi_twist, psi, psi_twist};
use liedual::ideals::{
    classify_pair, classify_triad, invariant_ideal_lattice, irreducible_components_pair, irreducible_components_triad, minimal_ideals, object_lattice,
    InvariantLattice, IrreducibleType, Linearity,
};
use liedual::invol::{invariant_profile, verify_equivalence_witness, verify_isomorphism, CompactTriad, NoncompactPairC, Profile, ViewProfile};
use liedual::keps::{keps_from_gamma, pair_dual_witness, rotation_operator, search_parity_witness, theta_sim_witness_check};
use liedual::modrep::{h_module_analysis, is_effective, ModuleFlag};
use liedual::roots::{maximal_abelian, restricted_roots, RootDatum};
use liedual::{Error, Rat, Subspace};
use serde_json::{json, Value};

use crate::doc::{matrix_rows, parse_matrix, parse_rat, rat_str, to_json, AlgebraDocument, Kind, Loaded, MapDocument, Malformed};

pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// A mathematical property does not hold; the report is still printed.
    Property { report: String, message: String },
    Malformed(String),
    Unsupported(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Property { .. } => 1,
            Failure::Malformed(_) => 2,
            Failure::Unsupported(_) => 3,
        }
    }

    fn property(message: impl Into<String>) -> Self {
        Failure::Property { report: String::new(), message: message.into() }
    }
}

impl From<Malformed> for Failure {
    fn from(m: Malformed) -> Self {
        Failure::Malformed(m.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = format!("{}: {e}", e.code());
        match e {
            Error::DimMismatch(_) | Error::BadStructure(_) | Error::BadParams(_) | Error::UnknownWitness(_) | Error::NonSymmetric => Failure::Malformed(msg),
            Error::RootNotGaussian | Error::UnrecognizedPattern => Failure::Unsupported(msg),
            _ => Failure::property(msg),
        }
    }
}

pub type Outcome = Result<String, Failure>;

/// Fails with a property failure, still emitting the report, unless `ok`.
fn finish(report: Value, ok: bool, message: &str) -> Outcome {
    let text = to_json(&report);
    if ok {
        Ok(text)
    } else {
        Err(Failure::Property { report: text, message: message.to_string() })
    }
}

fn vec_json(v: &[Rat]) -> Value {
    Value::from(v.iter().map(rat_str).collect::<Vec<_>>())
}

fn basis_json(s: &Subspace) -> Value {
    Value::from(s.basis().iter().map(|v| vec_json(v)).collect::<Vec<_>>())
}

pub fn parse_vector(s: &str) -> Result<Vec<Rat>, Malformed> {
    s.split(',').map(|x| parse_rat(x.trim())).collect()
}

/// Reads a document, enforcing the dimension cap.
pub fn read_document(text: &str, max_dim: usize) -> Result<AlgebraDocument, Failure> {
    let doc = AlgebraDocument::from_json(text)?;
    if doc.dim > max_dim {
        return Err(Failure::Unsupported(format!("dimension {} exceeds LIEDUAL_MAX_DIM = {max_dim}", doc.dim)));
    }
    Ok(doc)
}

fn checks(l: &Loaded) -> Vec<(String, bool)> {
    match l {
        Loaded::Algebra(g) => vec![("jacobi".into(), g.check_jacobi()), ("ambient_consistent".into(), g.ambient_consistent())],
        Loaded::Triad(t) => t.validate(),
        Loaded::Pair(p) => p.validate(),
    }
}

/// Loads a document and insists that it satisfies its type invariants.
fn load_valid(doc: &AlgebraDocument) -> Result<Loaded, Failure> {
    let l = doc.load()?;
    let failed: Vec<String> = checks(&l).into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
    if failed.is_empty() {
        Ok(l)
    } else {
        Err(Failure::property(format!("input fails validation: {}", failed.join(", "))))
    }
}

fn need_triad(l: Loaded, what: &str) -> Result<CompactTriad, Failure> {
    match l {
        Loaded::Triad(t) => Ok(t),
        _ => Err(Failure::Malformed(format!("{what} needs a triad"))),
    }
}

fn need_pair(l: Loaded, what: &str) -> Result<NoncompactPairC, Failure> {
    match l {
        Loaded::Pair(p) => Ok(p),
        _ => Err(Failure::Malformed(format!("{what} needs a pair"))),
    }
}

pub fn catalog_list() -> Outcome {
    let items: Vec<Value> = fixture_suite()
        .iter()
        .map(|f| {
            json!({
                "name": f.name,
                "spec": f.spec.to_string(),
                "note": f.note,
                "expected": {
                    "dim": f.expected.dim,
                    "fixed_dims": [f.expected.fixed_dims.0, f.expected.fixed_dims.1],
                    "minimal_ideals": f.expected.minimal_ideals,
                    "lattice_size": f.expected.lattice_size,
                    "tag": f.expected.tag.map(|t| t.as_str()),
                },
            })
        })
        .collect();
    Ok(to_json(&items))
}

/// A fixture name or a family spec string.
pub fn catalog_emit(spec: &str) -> Outcome {
    let (obj, name, spec_str, note) = match fixture(spec) {
        Ok(f) => (f.build()?, Some(f.name), f.spec.to_string(), Some(f.note)),
        Err(_) => {
            let s = FamilySpec::parse(spec)?;
            (s.build()?, None, s.to_string(), None)
        }
    };
    let mut doc = AlgebraDocument::from_loaded(&Loaded::from(obj)).with_meta("spec", spec_str);
    if let Some(n) = name {
        doc = doc.with_name(n);
    }
    if let Some(n) = note {
        doc = doc.with_meta("note", n);
    }
    Ok(doc.to_json())
}

pub fn catalog_witness(name: &str, part: &str) -> Outcome {
    let w = witness(name)?;
    let (src, dst) = match &w {
        WitnessCase::Triads { src, dst, .. } => (Loaded::Triad(src.clone()), Loaded::Triad(dst.clone())),
        WitnessCase::Pairs { src, dst, .. } => (Loaded::Pair(src.clone()), Loaded::Pair(dst.clone())),
        WitnessCase::Algebras { src, dst, .. } => (Loaded::Algebra(src.clone()), Loaded::Algebra(dst.clone())),
    };
    match part {
        "src" => Ok(AlgebraDocument::from_loaded(&src).with_meta("witness", name).to_json()),
        "dst" => Ok(AlgebraDocument::from_loaded(&dst).with_meta("witness", name).to_json()),
        "map" => Ok(to_json(&MapDocument { schema_version: crate::doc::SCHEMA_VERSION, map: matrix_rows(w.map()) })),
        other => Err(Failure::Malformed(format!("unknown witness part {other:?}; expected src, dst or map"))),
    }
}

pub fn validate(doc: &AlgebraDocument) -> Outcome {
    let l = doc.load()?;
    let list = checks(&l);
    let ok = list.iter().all(|(_, b)| *b);
    let map: serde_json::Map<String, Value> = list.into_iter().map(|(n, b)| (n, Value::from(b))).collect();
    finish(json!({ "kind": doc.kind, "dim": doc.dim, "checks": map, "passed": ok }), ok, "validation failed")
}

pub const DIRECTIONS: &[&str] = &["phi", "psi", "pair-dual", "associated", "triad-dual", "normalize"];

pub fn dualize(doc: &AlgebraDocument, direction: Option<&str>) -> Outcome {
    let l = load_valid(doc)?;
    let direction = direction.unwrap_or(match doc.kind {
        Kind::Pair => "psi",
        _ => "phi",
    });
    let out = match direction {
        "phi" => {
            let tw = phi_twist(&need_triad(l, "phi")?)?;
            AlgebraDocument::from_loaded(&Loaded::Pair(tw.object)).with_basis_record(&tw.basis_record)
        }
        "psi" => {
            let tw = psi_twist(&need_pair(l, "psi")?)?;
            AlgebraDocument::from_loaded(&Loaded::Triad(tw.object)).with_basis_record(&tw.basis_record)
        }
        "pair-dual" => {
            let tw = dual_pair_twist(&need_pair(l, "pair-dual")?)?;
            AlgebraDocument::from_loaded(&Loaded::Pair(tw.object)).with_basis_record(&tw.basis_record)
        }
        "associated" => match l {
            Loaded::Triad(t) => AlgebraDocument::from_loaded(&Loaded::Triad(associated_triad(&t))),
            Loaded::Pair(p) => {
                let f = associated_pair(&p);
                AlgebraDocument::from_loaded(&Loaded::Pair(f.object)).with_meta("degenerate_identity", f.degenerate_identity.to_string())
            }
            Loaded::Algebra(_) => return Err(Failure::Malformed("associated needs a triad or a pair".into())),
        },
        "triad-dual" => AlgebraDocument::from_loaded(&Loaded::Triad(dual_triad(&need_triad(l, "triad-dual")?))),
        "normalize" => match l {
            Loaded::Triad(t) => AlgebraDocument::from_loaded(&Loaded::Triad(t.normalized()?)),
            Loaded::Pair(p) => AlgebraDocument::from_loaded(&Loaded::Pair(p.normalized()?)),
            Loaded::Algebra(_) => return Err(Failure::Malformed("normalize needs a triad or a pair".into())),
        },
        other => return Err(Failure::Malformed(format!("unknown direction {other:?}; expected one of {}", DIRECTIONS.join(", ")))),
    };
    let mut out = out.with_meta("direction", direction);
    if let Some(n) = &doc.name {
        out = out.with_meta("source", n.clone());
    }
    Ok(out.to_json())
}

fn lattice_json(lat: &InvariantLattice) -> Value {
    json!({
        "minimal_ideals": lat.decomposition.ideals.iter().map(|s| json!({ "dim": s.dim(), "basis": basis_json(s) })).collect::<Vec<_>>(),
        "orbits": lat.orbits,
        "invariant_ideal_dims": lat.ideals.iter().map(|s| s.dim()).collect::<Vec<_>>(),
        "irreducible": lat.is_trivial(),
    })
}

pub fn decompose(doc: &AlgebraDocument) -> Outcome {
    let l = load_valid(doc)?;
    let report = match &l {
        Loaded::Algebra(g) => {
            let lat = invariant_ideal_lattice(g, &[])?;
            json!({ "kind": "algebra", "lattice": lattice_json(&lat) })
        }
        Loaded::Triad(t) => {
            let comps: Vec<AlgebraDocument> = irreducible_components_triad(t)?.into_iter().map(|c| AlgebraDocument::from_loaded(&Loaded::Triad(c))).collect();
            json!({ "kind": "triad", "lattice": lattice_json(&object_lattice(t)?), "components": comps })
        }
        Loaded::Pair(p) => {
            let comps: Vec<AlgebraDocument> = irreducible_components_pair(p)?.into_iter().map(|c| AlgebraDocument::from_loaded(&Loaded::Pair(c))).collect();
            json!({ "kind": "pair", "lattice": lattice_json(&object_lattice(p)?), "components": comps })
        }
    };
    Ok(to_json(&report))
}

fn type_json(t: &IrreducibleType) -> Value {
    json!({
        "tag": t.tag.as_str(),
        "evidence": {
            "ideal_count": t.evidence.ideal_count,
            "permutations": t.evidence.permutations,
            "centroid_dims": t.evidence.centroid_dims,
            "linearity": t.evidence.linearity.map(|l| match l {
                Linearity::Linear => "linear",
                Linearity::Antilinear => "antilinear",
            }),
        },
    })
}

pub fn classify(doc: &AlgebraDocument) -> Outcome {
    let t = match load_valid(doc)? {
        Loaded::Triad(t) => classify_triad(&t)?,
        Loaded::Pair(p) => classify_pair(&p)?,
        Loaded::Algebra(_) => return Err(Failure::Malformed("classify needs a triad or a pair".into())),
    };
    Ok(to_json(&type_json(&t)))
}

/// Root datum of a triad for `theta1`; a pair is handled through its compact dual.
fn datum_of(l: Loaded) -> Result<(CompactTriad, RootDatum, bool), Failure> {
    let (t, via_dual) = match l {
        Loaded::Triad(t) => (t, false),
        Loaded::Pair(p) => (psi(&p)?, true),
        Loaded::Algebra(_) => return Err(Failure::Malformed("roots need a triad or a pair".into())),
    };
    let a1 = maximal_abelian(&t.g, &t.theta1);
    let rd = restricted_roots(&t.g, &t.theta1, &a1)?;
    Ok((t, rd, via_dual))
}

pub fn roots(doc: &AlgebraDocument) -> Outcome {
    let (_, rd, via_dual) = datum_of(load_valid(doc)?)?;
    let positive = rd.positive_roots();
    let roots: Vec<Value> = rd
        .roots
        .iter()
        .enumerate()
        .map(|(k, r)| json!({ "coords": vec_json(&r.coords), "pairings": vec_json(&r.pairings), "mult": r.mult, "positive": positive.contains(&k) }))
        .collect();
    let report = json!({
        "computed_on_compact_dual": via_dual,
        "rank": rd.rank(),
        "a1": basis_json(&rd.a1),
        "gram": matrix_rows(&rd.gram),
        "roots": roots,
        "root_spaces": rd.spaces.iter().map(|s| json!({ "root": s.root, "dim": s.v.dim(), "k_dim": s.k.dim(), "p_dim": s.p.dim() })).collect::<Vec<_>>(),
        "zk_dim": rd.zk.dim(),
        "gamma": rd.gamma.iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
        "decomposition_holds": rd.decomposition_holds(),
    });
    let ok = rd.decomposition_holds();
    finish(report, ok, "root space decomposition fails")
}

fn gamma_vector(rd: &RootDatum, gamma: &str) -> Result<Vec<Rat>, Failure> {
    let v = parse_vector(gamma)?;
    if v.len() != rd.rank() {
        return Err(Failure::Malformed(format!("--gamma has {} entries; the rank is {}", v.len(), rd.rank())));
    }
    Ok(v)
}

pub fn keps_build(doc: &AlgebraDocument, gamma: &str) -> Outcome {
    let t = need_triad(load_valid(doc)?, "keps build")?;
    let (_, rd, _) = datum_of(Loaded::Triad(t.clone()))?;
    let v = gamma_vector(&rd, gamma)?;
    let kc = keps_from_gamma(&t.g, &t.theta1, &rd, &v)?;
    let ok = kc.sigma_matches && kc.grading.kind == kc.expected_kind;
    let report = json!({
        "gamma": vec_json(&v),
        "triad": AlgebraDocument::from_loaded(&Loaded::Triad(kc.triad.clone())),
        "pair": AlgebraDocument::from_loaded(&Loaded::Pair(kc.pair.clone())),
        "grading": {
            "z": vec_json(&kc.grading.z),
            "dims": kc.grading.dims(),
            "kind": kc.grading.kind,
            "degenerate": kc.grading.degenerate,
        },
        "sigma_matches": kc.sigma_matches,
        "expected_kind": kc.expected_kind,
        "degenerate": kc.degenerate,
    });
    finish(report, ok, "K_eps construction failed its checks")
}

pub fn keps_check(doc: &AlgebraDocument, gamma: &str) -> Outcome {
    let t = need_triad(load_valid(doc)?, "keps check")?;
    let (_, rd, _) = datum_of(Loaded::Triad(t.clone()))?;
    let v = gamma_vector(&rd, gamma)?;
    let theta_sim = theta_sim_witness_check(&t, &rd, &v)?;
    let (rotation, pair_dual) = if theta_sim {
        let rot = rotation_operator(&t.g, &rd, &v)?;
        let r = verify_equivalence_witness(&t, &dual_triad(&t), &rot)?;
        let (src, dst, w) = pair_dual_witness(&t, &rot)?;
        (Some(r), Some(verify_equivalence_witness(&src, &dst, &w)?))
    } else {
        (None, None)
    };
    let search = search_parity_witness(&t, &rd)?;
    let ok = theta_sim && rotation == Some(true) && pair_dual == Some(true);
    let report = json!({
        "gamma": vec_json(&v),
        "theta_sim": theta_sim,
        "rotation_witness": rotation,
        "pair_dual_witness": pair_dual,
        "parity_search": match &search {
            Some(w) => json!({ "found": true, "gamma": vec_json(w) }),
            None => json!({ "found": false, "note": "no witness found relative to the chosen a1" }),
        },
        "passed": ok,
    });
    finish(report, ok, "K_eps witness check failed")
}

pub fn verify_witness(src: &AlgebraDocument, dst: &AlgebraDocument, map: &MapDocument) -> Outcome {
    let m = parse_matrix(&map.map, "map")?;
    let (ls, ld) = (load_valid(src)?, load_valid(dst)?);
    let (verified, detail) = match (&ls, &ld) {
        (Loaded::Algebra(a), Loaded::Algebra(b)) => (verify_isomorphism(a, b, &m), "bracket-preserving bijection"),
        (Loaded::Triad(a), Loaded::Triad(b)) => (verify_equivalence_witness(a, b, &m)?, "isomorphism intertwining theta1 and theta2"),
        (Loaded::Pair(a), Loaded::Pair(b)) => (verify_equivalence_witness(a, b, &m)?, "isomorphism intertwining sigma and theta"),
        _ => return Err(Failure::Malformed("source and target have different kinds".into())),
    };
    finish(json!({ "verified": verified, "detail": detail }), verified, "witness does not verify")
}

fn view_json(v: &ViewProfile) -> Value {
    json!({
        "dim": v.dim,
        "center_dim": v.center_dim,
        "derived_dim": v.derived_dim,
        "killing_signature": [v.killing.n_pos, v.killing.n_neg, v.killing.n_zero],
        "center_split": [v.center_split.0, v.center_split.1],
    })
}

fn profile_json(p: &Profile) -> Value {
    json!({
        "dim": p.dim,
        "joint_dims": p.joint_dims,
        "distinguished_view": view_json(&p.distinguished_view),
        "other_view": view_json(&p.other_view),
        "minimal_ideal_dims": p.minimal_ideal_dims,
    })
}

fn pair_analysis(p: &NoncompactPairC) -> Result<(Value, bool), Failure> {
    let n1 = object_lattice(p)?.is_trivial();
    let effective = is_effective(p)?;
    let ma = h_module_analysis(p)?;
    let n2 = ma.flag == ModuleFlag::Irreducible;
    // (N2) implies (N1) for effective pairs
    let implication = !(effective && n2) || n1;
    let fixed = fixed_subalgebra_dual(p)?;
    let v = json!({
        "n1_irreducible": n1,
        "effective": effective,
        "isotropy_module": {
            "flag": ma.flag.as_str(),
            "q0_dim": ma.q0_dim,
            "invariant_subspaces": ma.invariant_subspaces_found.iter().map(|s| json!({ "dim": s.dim(), "basis": basis_json(s) })).collect::<Vec<_>>(),
            "commutant_dim": ma.commutant_dim,
            "self_adjoint_dim": ma.self_adjoint_dim,
        },
        "n2_implies_n1": implication,
        "fixed_subalgebra": {
            "dim": fixed.dim,
            "matches_dual": fixed.matches,
            "center_split": [fixed.center_split.0, fixed.center_split.1],
        },
    });
    Ok((v, implication))
}

pub fn report(doc: &AlgebraDocument) -> Outcome {
    let (report, ok) = match load_valid(doc)? {
        Loaded::Triad(t) => {
            let pair = phi_twist(&t)?.object;
            let (analysis, ok) = pair_analysis(&pair)?;
            (json!({ "kind": "triad", "profile": profile_json(&invariant_profile(&t)?), "dual_pair": analysis }), ok)
        }
        Loaded::Pair(p) => {
            let (analysis, ok) = pair_analysis(&p)?;
            (json!({ "kind": "pair", "profile": profile_json(&invariant_profile(&p)?), "analysis": analysis }), ok)
        }
        Loaded::Algebra(g) => {
            let dims: Vec<usize> = minimal_ideals(&g)?.ideals.iter().map(|s| s.dim()).collect();
            let sig = g.killing_signature();
            (json!({ "kind": "algebra", "dim": g.dim(), "minimal_ideal_dims": dims, "killing_signature": [sig.n_pos, sig.n_neg, sig.n_zero] }), true)
        }
    };
    finish(report, ok, "(N2) => (N1) fails")
}

/// Builds a fixture object; used by tests.
pub fn fixture_document(name: &str) -> Result<AlgebraDocument, Failure> {
    let obj: Object = fixture(name)?.build()?;
    Ok(AlgebraDocument::from_loaded(&Loaded::from(obj)).with_name(name))
}
