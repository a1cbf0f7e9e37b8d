use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Order outside `1..=64`.
    InvalidOrder {
        n: usize,
    },
    OutOfRangeVertex {
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    DuplicateOrConflictingArc {
        from: usize,
        to: usize,
    },
    IncompleteOrientation {
        u: usize,
        v: usize,
    },
    EmptyKeepSet,
    NotABijection,
    EvenOrderForRotational {
        n: usize,
    },
    OrderTooLargeForCanonicalization {
        n: usize,
        limit: usize,
    },
    SetNotSubsetOfVertices,
    OrderTooLargeForExactSearch {
        n: usize,
        limit: usize,
    },
    NoSourceOrSink,
    WrongOrder {
        expected: usize,
        found: usize,
    },
    DegreeConditionUnmet {
        vertex: usize,
    },
    OddOrder {
        n: usize,
    },
    OrderBelowEight {
        n: usize,
    },
    OrderTooLarge {
        n: usize,
        limit: usize,
    },
    NotFoundWithinBudget {
        target: usize,
        budget: u64,
    },
    /// A case analysis ran out of cases. Always a defect.
    FallthroughReached {
        routine: &'static str,
    },
    /// A constructed set failed the checker or its size bound. Always a defect.
    VerificationFailed {
        routine: &'static str,
    },
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_defect(&self) -> bool {
        matches!(
            self,
            Error::FallthroughReached { .. } | Error::VerificationFailed { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder { n } => write!(f, "order {n} outside 1..=64"),
            Error::OutOfRangeVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateOrConflictingArc { from, to } => {
                write!(f, "pair {{{from},{to}}} oriented more than once")
            }
            Error::IncompleteOrientation { u, v } => write!(f, "pair {{{u},{v}}} has no arc"),
            Error::EmptyKeepSet => f.write_str("induced subtournament needs a nonempty vertex set"),
            Error::NotABijection => f.write_str("permutation is not a bijection on the vertices"),
            Error::EvenOrderForRotational { n } => {
                write!(f, "rotational tournaments need odd order, got {n}")
            }
            Error::OrderTooLargeForCanonicalization { n, limit } => {
                write!(f, "order {n} exceeds canonicalization limit {limit}")
            }
            Error::SetNotSubsetOfVertices => {
                f.write_str("vertex set has bits outside the tournament")
            }
            Error::OrderTooLargeForExactSearch { n, limit } => {
                write!(f, "order {n} exceeds exact search cap {limit}")
            }
            Error::NoSourceOrSink => f.write_str("tournament has neither a source nor a sink"),
            Error::WrongOrder { expected, found } => {
                write!(f, "expected order {expected}, found {found}")
            }
            Error::DegreeConditionUnmet { vertex } => {
                write!(f, "vertex {vertex} does not meet the degree condition")
            }
            Error::OddOrder { n } => write!(f, "order {n} is odd"),
            Error::OrderBelowEight { n } => write!(f, "order {n} is below 8"),
            Error::OrderTooLarge { n, limit } => write!(f, "order {n} exceeds limit {limit}"),
            Error::NotFoundWithinBudget { target, budget } => {
                write!(
                    f,
                    "no tournament with gamma* >= {target} found in {budget} steps"
                )
            }
            Error::FallthroughReached { routine } => {
                write!(f, "{routine}: case analysis fell through")
            }
            Error::VerificationFailed { routine } => {
                write!(f, "{routine}: constructed set failed verification")
            }
        }
    }
}

impl core::error::Error for Error {}
