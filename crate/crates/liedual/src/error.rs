use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("form is not symmetric")]
    NonSymmetric,
    #[error("involutions do not commute")]
    NotCommuting,
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("matrix is not a Lie algebra automorphism")]
    NotAutomorphism,
    #[error("structure constants are invalid: {0}")]
    BadStructure(String),
    #[error("involution is not a Cartan involution")]
    NotCartan,
    #[error("algebra is not compact")]
    NotCompact,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("algebra has more than one minimal ideal")]
    NotSimpleSummand,
    #[error("invariant ideal is not stable under the Cartan involution")]
    ThetaNotStable,
    #[error("object is not irreducible")]
    NotIrreducible,
    #[error("ideal permutation pattern not recognized")]
    UnrecognizedPattern,
    #[error("ad-eigenvalue outside sqrt(-1)*Q")]
    RootNotGaussian,
    #[error("vector does not lie in V(lambda)")]
    NotInV,
    #[error("vector is not in the Gamma lattice")]
    NotInGamma,
    #[error("ad Z is not diagonalizable with integer eigenvalues")]
    NonIntegerGrading,
    #[error("involution does not reverse the grading")]
    NotGradeReversing,
    #[error("pair is not Riemannian")]
    NotRiemannian,
    #[error("subspace is not invariant")]
    NotInvariant,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown witness: {0}")]
    UnknownWitness(String),
    #[error("matrix is singular")]
    Singular,
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimMismatch(_) => "DIM_MISMATCH",
            Error::NonSymmetric => "NON_SYMMETRIC",
            Error::NotCommuting => "NOT_COMMUTING",
            Error::NotInvolution => "NOT_INVOLUTION",
            Error::NotAutomorphism => "NOT_AUTOMORPHISM",
            Error::BadStructure(_) => "BAD_STRUCTURE",
            Error::NotCartan => "NOT_CARTAN",
            Error::NotCompact => "NOT_COMPACT",
            Error::NotSemisimple => "NOT_SEMISIMPLE",
            Error::NotSimpleSummand => "NOT_SIMPLE_SUMMAND",
            Error::ThetaNotStable => "THETA_NOT_STABLE",
            Error::NotIrreducible => "NOT_IRREDUCIBLE",
            Error::UnrecognizedPattern => "UNRECOGNIZED_PATTERN",
            Error::RootNotGaussian => "ROOT_NOT_GAUSSIAN",
            Error::NotInV => "NOT_IN_V",
            Error::NotInGamma => "NOT_IN_GAMMA",
            Error::NonIntegerGrading => "NON_INTEGER_GRADING",
            Error::NotGradeReversing => "NOT_GRADE_REVERSING",
            Error::NotRiemannian => "NOT_RIEMANNIAN",
            Error::NotInvariant => "NOT_INVARIANT",
            Error::BadParams(_) => "BAD_PARAMS",
            Error::UnknownWitness(_) => "UNKNOWN_WITNESS",
            Error::Singular => "SINGULAR",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
