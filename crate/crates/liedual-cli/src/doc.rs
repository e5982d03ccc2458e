//! JSON wire format: exact rationals as reduced `"num/den"` strings, stable key order.

use std::collections::BTreeMap;

use liedual::catalog::Object;
use liedual::exact::gauss;
use liedual::invol::{CompactTriad, Involution, NoncompactPairC};
use liedual::{GMatrix, GaussRat, QMatrix, Rat, RealLieAlgebra};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Input that cannot be turned into a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Malformed(pub String);

impl std::fmt::Display for Malformed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn bad(msg: impl Into<String>) -> Malformed {
    Malformed(msg.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussEntry {
    pub re: String,
    pub im: String,
}

pub type RatRows = Vec<Vec<String>>;
pub type GaussRows = Vec<Vec<GaussEntry>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Algebra,
    Triad,
    Pair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema_version: u32,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub sc: Vec<ScRecord>,
    /// `theta1`, `theta2` for triads; `sigma`, `theta` for pairs.
    #[serde(default)]
    pub involutions: BTreeMap<String, RatRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<Vec<GaussRows>>,
    /// Columns: the new basis in the coordinates of the input's complexification.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_record: Option<GaussRows>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

/// A transformation matrix on its own, as read by `verify-witness --map`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub schema_version: u32,
    pub map: RatRows,
}

pub fn rat_str(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"n"` or a reduced `"n/d"` with `d > 0`.
pub fn parse_rat(s: &str) -> Result<Rat, Malformed> {
    let r: Rat = s.parse().map_err(|_| bad(format!("not a rational: {s:?}")))?;
    let canonical = rat_str(&r);
    if canonical == s || (r.is_integer() && r.numer().to_string() == s) {
        Ok(r)
    } else {
        Err(bad(format!("rational not in reduced form: {s:?}")))
    }
}

pub fn matrix_rows(m: &QMatrix) -> RatRows {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| rat_str(&m[(r, c)])).collect()).collect()
}

pub fn gauss_rows(m: &GMatrix) -> GaussRows {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| GaussEntry { re: rat_str(&m[(r, c)].re), im: rat_str(&m[(r, c)].im) }).collect()).collect()
}

fn shape<T>(rows: &[Vec<T>], what: &str) -> Result<(usize, usize), Malformed> {
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) {
        return Err(bad(format!("{what}: ragged rows")));
    }
    Ok((rows.len(), cols))
}

pub fn parse_matrix(rows: &RatRows, what: &str) -> Result<QMatrix, Malformed> {
    let (n, m) = shape(rows, what)?;
    let cells: Vec<Vec<Rat>> = rows.iter().map(|r| r.iter().map(|s| parse_rat(s)).collect()).collect::<Result<_, _>>()?;
    Ok(QMatrix::from_fn(n, m, |r, c| cells[r][c].clone()))
}

pub fn parse_gauss_matrix(rows: &GaussRows, what: &str) -> Result<GMatrix, Malformed> {
    let (n, m) = shape(rows, what)?;
    let cells: Vec<Vec<GaussRat>> =
        rows.iter().map(|r| r.iter().map(|e| Ok(gauss(parse_rat(&e.re)?, parse_rat(&e.im)?))).collect()).collect::<Result<_, _>>()?;
    Ok(GMatrix::from_fn(n, m, |r, c| cells[r][c].clone()))
}

/// A document's content, with involutions taken as given.
#[derive(Clone, Debug, PartialEq)]
pub enum Loaded {
    Algebra(RealLieAlgebra),
    Triad(CompactTriad),
    Pair(NoncompactPairC),
}

impl Loaded {
    pub fn algebra(&self) -> &RealLieAlgebra {
        match self {
            Loaded::Algebra(g) => g,
            Loaded::Triad(t) => &t.g,
            Loaded::Pair(p) => &p.g0,
        }
    }
}

impl From<Object> for Loaded {
    fn from(o: Object) -> Self {
        match o {
            Object::Triad(t) => Loaded::Triad(t),
            Object::Pair(p) => Loaded::Pair(p),
        }
    }
}

const TRIAD_NAMES: [&str; 2] = ["theta1", "theta2"];
const PAIR_NAMES: [&str; 2] = ["sigma", "theta"];

impl AlgebraDocument {
    pub fn from_algebra(kind: Kind, g: &RealLieAlgebra, involutions: &[(&str, &Involution)]) -> Self {
        let sc = g
            .structure_constants()
            .into_iter()
            .map(|(i, j, k, c)| ScRecord { i, j, k, num: c.numer().to_string(), den: c.denom().to_string() })
            .collect();
        AlgebraDocument {
            schema_version: SCHEMA_VERSION,
            kind,
            name: None,
            dim: g.dim(),
            sc,
            involutions: involutions.iter().map(|(n, inv)| (n.to_string(), matrix_rows(inv.mat()))).collect(),
            ambient: g.ambient().map(|a| a.iter().map(gauss_rows).collect()),
            basis_record: None,
            metadata: BTreeMap::new(),
        }
    }

    pub fn from_loaded(l: &Loaded) -> Self {
        match l {
            Loaded::Algebra(g) => Self::from_algebra(Kind::Algebra, g, &[]),
            Loaded::Triad(t) => Self::from_algebra(Kind::Triad, &t.g, &[(TRIAD_NAMES[0], &t.theta1), (TRIAD_NAMES[1], &t.theta2)]),
            Loaded::Pair(p) => Self::from_algebra(Kind::Pair, &p.g0, &[(PAIR_NAMES[0], &p.sigma), (PAIR_NAMES[1], &p.theta)]),
        }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_basis_record(mut self, m: &GMatrix) -> Self {
        self.basis_record = Some(gauss_rows(m));
        self
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<String>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }

    pub fn algebra(&self) -> Result<RealLieAlgebra, Malformed> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(bad(format!("unsupported schema_version {}", self.schema_version)));
        }
        let mut records = Vec::with_capacity(self.sc.len());
        for r in &self.sc {
            let c = parse_rat(&format!("{}/{}", r.num, r.den))?;
            records.push((r.i, r.j, r.k, c));
        }
        let g = RealLieAlgebra::from_structure_constants(self.dim, &records).map_err(|e| bad(e.to_string()))?;
        match &self.ambient {
            None => Ok(g),
            Some(mats) => {
                if mats.len() != self.dim {
                    return Err(bad(format!("ambient has {} matrices for dimension {}", mats.len(), self.dim)));
                }
                let ms: Vec<GMatrix> = mats.iter().map(|m| parse_gauss_matrix(m, "ambient")).collect::<Result<_, _>>()?;
                let n = ms.first().map_or(0, |m| m.rows());
                if ms.iter().any(|m| m.rows() != n || m.cols() != n) {
                    return Err(bad("ambient matrices must share one square shape"));
                }
                Ok(g.with_ambient(ms))
            }
        }
    }

    fn involution(&self, name: &str) -> Result<Involution, Malformed> {
        let rows = self.involutions.get(name).ok_or_else(|| bad(format!("missing involution {name:?}")))?;
        let m = parse_matrix(rows, name)?;
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(bad(format!("involution {name:?} is {}x{}, expected {}x{}", m.rows(), m.cols(), self.dim, self.dim)));
        }
        Ok(Involution::unchecked(m))
    }

    fn expect_names(&self, names: &[&str]) -> Result<(), Malformed> {
        if let Some(extra) = self.involutions.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(bad(format!("unexpected involution {extra:?}")));
        }
        Ok(())
    }

    /// Parses without checking any mathematical invariant.
    pub fn load(&self) -> Result<Loaded, Malformed> {
        let g = self.algebra()?;
        match self.kind {
            Kind::Algebra => {
                self.expect_names(&[])?;
                Ok(Loaded::Algebra(g))
            }
            Kind::Triad => {
                self.expect_names(&TRIAD_NAMES)?;
                Ok(Loaded::Triad(CompactTriad { g, theta1: self.involution(TRIAD_NAMES[0])?, theta2: self.involution(TRIAD_NAMES[1])? }))
            }
            Kind::Pair => {
                self.expect_names(&PAIR_NAMES)?;
                Ok(Loaded::Pair(NoncompactPairC { g0: g, sigma: self.involution(PAIR_NAMES[0])?, theta: self.involution(PAIR_NAMES[1])? }))
            }
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self, Malformed> {
        serde_json::from_str(s).map_err(|e| bad(format!("invalid document: {e}")))
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}
