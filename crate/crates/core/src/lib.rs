//! Exact reliability of one-batch preempt deterioration-effect multi-state
//! multi-rework networks.
//!
//! A batch of `b` work-in-process units enters a production network whose
//! nodes have random capacities and whose arcs lose units binomially. Some
//! defective units are sent through rework lines and rejoin the output. The
//! reliability `R_{b,d}` is the probability of getting at least `d` good units
//! out.
//!
//! The computation runs in four stages:
//!
//! 1. each product line's non-increasing WIP vectors are listed top-down
//!    ([`enumerate`]);
//! 2. one vector per line is combined by a nested odometer;
//! 3. combinations violating the node, split, chain or output constraints
//!    are discarded ([`feasibility`]);
//! 4. the probabilities of the survivors are summed ([`probability`]).
//!
//! [`engine::solve`] runs the pipeline; [`oracle`] holds an independent
//! brute-force solver used to cross-check it.
//!
//! ```
//! use rework_core::{builtin_network, solve, SolveOptions};
//!
//! let net = builtin_network("test1")?;
//! let report = solve(&net, 5, 3, &SolveOptions::default())?;
//! assert_eq!(report.line_counts, vec![15, 56]);
//! assert_eq!(report.feasible_count, 16);
//! assert!((report.reliability - 0.0092850973).abs() < 1e-9);
//! # Ok::<(), rework_core::Error>(())
//! ```

pub mod builtin;
pub mod engine;
pub mod enumerate;
mod error;
pub mod feasibility;
pub mod model;
pub mod oracle;
pub mod probability;
pub mod sum;

pub use builtin::{builtin_network, BUILTIN_IDS};
pub use engine::{solve, summarize, sweep, unrestricted_space, RunReport, SolveOptions, SweepSummary};
pub use error::{Error, Finding, Result, ValidationReport};
pub use model::{load_network, validate_network, CoordRef, Network, SolutionVector};
