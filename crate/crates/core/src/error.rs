use thiserror::Error;

/// Validity rules for bi-leveled trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CirclingRule {
    /// The leftmost node must be circled.
    LeftmostCircled,
    /// The parent of a circled node must be circled.
    UpwardClosed,
    /// The leftmost node may not have circled children.
    LeftmostChildrenUncircled,
    /// A bi-leveled tree needs at least one node.
    NonEmpty,
}

impl std::fmt::Display for CirclingRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            CirclingRule::LeftmostCircled => "the leftmost node must be circled",
            CirclingRule::UpwardClosed => "the parent of a circled node must be circled",
            CirclingRule::LeftmostChildrenUncircled => {
                "the leftmost node must not have circled children"
            }
            CirclingRule::NonEmpty => "a bi-leveled tree must have at least one node",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error in {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid bi-leveled tree {key}: {rule}")]
    Validity { key: String, rule: CirclingRule },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("arity mismatch: forest has {pieces} pieces but the base tree has {nodes} nodes")]
    Arity { pieces: usize, nodes: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("family mismatch: expected {expected}, found {found}")]
    Family { expected: String, found: String },

    #[error("certification failed: {0}")]
    Certification(String),
}

impl Error {
    pub(crate) fn parse(input: impl AsRef<str>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.as_ref().to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
