use std::fmt;

use polarcsm::arrangements::ArrangementError;
use polarcsm::classcalc::ClassCalcError;
use polarcsm::field_poly::FieldPolyError;
use polarcsm::groebner::GroebnerError;
use polarcsm::gring::GRingError;
use polarcsm::input::InputError;
use polarcsm::polar::PolarError;
use polarcsm::unipoly::UniPolyError;

/// Failure classes, each with its own exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input.
    Usage(String),
    /// A Gröbner computation hit its reduction budget.
    ResourceCap(String),
    /// Independent randomized trials returned different answers.
    Disagreement(String),
    /// Anything else, including a failed cross-check.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::ResourceCap(_) => 3,
            CliError::Disagreement(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, msg) = match self {
            CliError::Usage(m) => ("usage error", m),
            CliError::ResourceCap(m) => ("resource cap", m),
            CliError::Disagreement(m) => ("trial disagreement", m),
            CliError::Failure(m) => ("error", m),
        };
        write!(f, "{kind}: {msg}")
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::ResourceCap { .. } => CliError::ResourceCap(e.to_string()),
            GroebnerError::NotHomogeneous | GroebnerError::ZeroPolynomial => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<PolarError> for CliError {
    fn from(e: PolarError) -> Self {
        match e {
            PolarError::Groebner(g) => g.into(),
            PolarError::TrialDisagreement(_) => CliError::Disagreement(e.to_string()),
            PolarError::GenericityFailure { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ClassCalcError> for CliError {
    fn from(e: ClassCalcError) -> Self {
        match e {
            ClassCalcError::Polar(p) => p.into(),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<ArrangementError> for CliError {
    fn from(e: ArrangementError) -> Self {
        match e {
            ArrangementError::Pipeline(c) => c.into(),
            ArrangementError::Division(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<FieldPolyError> for CliError {
    fn from(e: FieldPolyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<UniPolyError> for CliError {
    fn from(e: UniPolyError) -> Self {
        match e {
            UniPolyError::Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<GRingError> for CliError {
    fn from(e: GRingError) -> Self {
        CliError::Failure(e.to_string())
    }
}
