use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed network document: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("cannot read network document: {0}")]
    Io(#[from] std::io::Error),

    #[error("invalid network:\n{0}")]
    InvalidNetwork(ValidationReport),

    #[error("unknown built-in network `{0}` (expected one of test1..test5)")]
    UnknownBuiltin(String),

    #[error("d must satisfy 1 ≤ d ≤ b (got b={b}, d={d})")]
    InvalidDemand { b: u32, d: u32 },

    #[error("solution vector has {got} coordinates but the network has {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("chain violation: {cur} units cannot leave a stage holding {prev}")]
    ChainViolation { prev: u32, cur: u32 },

    #[error("unknown node {0}")]
    UnknownNode(u32),

    #[error("node {node} has no capacity level {load} (maximum level {max_level})")]
    LoadExceedsCapacity { node: u32, load: u32, max_level: u32 },

    #[error("state box holds {size} vectors, above the oracle limit of {limit}")]
    BoxTooLarge { size: u128, limit: u128 },

    #[error("tuple count Π m_j overflows 64 bits")]
    CountOverflow,

    #[error("cannot summarize an empty list of reports")]
    EmptySummary,
}

/// One invariant violation, located by a field path into the network
/// document (for example `nodes[1].capacity_prob`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub path: String,
    pub message: String,
}

/// Every invariant violation found in a network. Empty means the network is
/// usable by the engine.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.findings.len()
    }

    pub(crate) fn push(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.findings.push(Finding {
            path: path.into(),
            message: message.into(),
        });
    }

    /// True if any finding's message contains `needle`.
    pub fn mentions(&self, needle: &str) -> bool {
        self.findings
            .iter()
            .any(|f| f.message.contains(needle) || f.path.contains(needle))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, finding) in self.findings.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {}: {}", finding.path, finding.message)?;
        }
        Ok(())
    }
}
