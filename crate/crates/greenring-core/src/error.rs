//! Error types shared across the engine.

use alloc::string::String;
use core::fmt;

/// All failure modes of the engine.
///
/// Each variant corresponds to one named error surface of the public API;
/// the payload is a human-readable description of what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Parameter `a` hit one of the excluded non-generic values.
    Genericity(String),
    /// A precondition on inputs failed (zero triple, bad sum, missing data).
    Domain(String),
    /// The matrix realization of the algebra failed a relation or the
    /// dimension count.
    Realization(String),
    /// A graded module violated one of the defining relations.
    Module(String),
    /// Composition-count consistency failed.
    Count(String),
    /// A projective constructor produced the wrong module.
    Construction(String),
    /// A syzygy/omega index exceeded the configured bound.
    Limit(String),
    /// Parameter recovery found a pencil that is not a power of a linear form.
    Recovery(String),
    /// No branch of the classification matched an indecomposable module.
    Identify(String),
    /// An identity of the tensor-embedding lemma failed.
    Lemma(String),
    /// A projective cover assembly was not surjective.
    Cover(String),
    /// A retraction solve for splitting off a projective summand failed.
    Split(String),
    /// Idempotent lifting did not stabilize.
    Lift(String),
    /// A relation of the basic algebra failed.
    Morita(String),
    /// Malformed textual input (labels, expressions, rationals).
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Genericity(_) => "GenericityError",
            Error::Domain(_) => "DomainError",
            Error::Realization(_) => "RealizationError",
            Error::Module(_) => "ModuleError",
            Error::Count(_) => "CountError",
            Error::Construction(_) => "ConstructionError",
            Error::Limit(_) => "LimitError",
            Error::Recovery(_) => "RecoveryError",
            Error::Identify(_) => "IdentifyError",
            Error::Lemma(_) => "LemmaError",
            Error::Cover(_) => "CoverError",
            Error::Split(_) => "SplitError",
            Error::Lift(_) => "LiftError",
            Error::Morita(_) => "MoritaError",
            Error::Parse(_) => "ParseError",
        }
    }

    fn message(&self) -> &str {
        match self {
            Error::Genericity(m)
            | Error::Domain(m)
            | Error::Realization(m)
            | Error::Module(m)
            | Error::Count(m)
            | Error::Construction(m)
            | Error::Limit(m)
            | Error::Recovery(m)
            | Error::Identify(m)
            | Error::Lemma(m)
            | Error::Cover(m)
            | Error::Split(m)
            | Error::Lift(m)
            | Error::Morita(m)
            | Error::Parse(m) => m,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind(), self.message())
    }
}

impl core::error::Error for Error {}
