use thiserror::Error;

/// Named structural constraints an algebra configuration must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// At least one of the six block sizes is positive.
    NonemptyShape,
    /// Group elements vanish on `I_6`, `Ī_4`, `Ī_5`, `Ī_6`.
    GammaSupport,
    /// `1_[p]` lies in Γ for every `p ∈ J_{1,3} ∪ I_{4,5}`.
    GammaUnits,
    /// `1_[0]` lies in Γ whenever some element has a nonzero 0-coordinate.
    GammaZeroUnit,
    /// Generators are linearly independent over ℚ.
    GammaFree,
    /// Exponents vanish on `I_1`, `I_2`, `I_4`, `Ī_1` (and on 0 when 𝒥₀ = {0}).
    ExponentSupport,
    /// 𝒥₀ + Γ₀ ≠ {0}.
    NontrivialZeroDirection,
}

impl Constraint {
    pub fn name(self) -> &'static str {
        match self {
            Constraint::NonemptyShape => "nonempty-shape",
            Constraint::GammaSupport => "gamma-support",
            Constraint::GammaUnits => "gamma-units",
            Constraint::GammaZeroUnit => "gamma-zero-unit",
            Constraint::GammaFree => "gamma-free",
            Constraint::ExponentSupport => "exponent-support",
            Constraint::NontrivialZeroDirection => "j0-plus-gamma0-nonzero",
        }
    }
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("constraint {constraint} violated: {detail}")]
    Constraint {
        constraint: Constraint,
        detail: String,
    },
    #[error("index {index} out of range (valid: {valid})")]
    IndexOutOfRange { index: usize, valid: String },
    #[error("vector has length {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("vector {0} is not a member of the group")]
    NotMember(String),
    #[error("elements belong to different algebra configurations")]
    MixedConfigs,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("homomorphism does not vanish on sigma_{index}")]
    HomNotAdmissible { index: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn constraint(constraint: Constraint, detail: impl Into<String>) -> Self {
        Error::Constraint {
            constraint,
            detail: detail.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
