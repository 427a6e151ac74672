//! The constraint system on assembled solution vectors.
//!
//! A vector `X` is feasible for input `b` and demand `d` when
//!
//! * **chain**: along every line the counts never increase, no count exceeds
//!   its coordinate cap, and no line starts above `b`;
//! * **split**: for every split, `Σ_{i ∈ members} x_i ≤ x_feeder`;
//! * **node**: for every node `k`,
//!   `max(d, D_min(k)) ≤ Σ_{i ∈ load(k)} x_i ≤ min(b, D_max(k))`;
//! * **output**: the last coordinates of all lines add up to at least `d`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::model::{Network, SolutionVector};

/// Network constraints resolved to flat coordinate indices.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    pub lines: Vec<Range<usize>>,
    pub caps: Vec<u32>,
    /// `(min_level, max_level, flat load indices)` per node.
    pub nodes: Vec<(u32, u32, Vec<usize>)>,
    /// `(feeder, members)` per split.
    pub splits: Vec<(usize, Vec<usize>)>,
    pub width: usize,
}

impl Layout {
    pub fn new(net: &Network) -> Layout {
        let mut lines = Vec::with_capacity(net.lines.len());
        let mut start = 0;
        for line in &net.lines {
            lines.push(start..start + line.coords.len());
            start += line.coords.len();
        }
        let flat = |r| net.flat_index(r).expect("validated network");
        Layout {
            lines,
            caps: net.lines.iter().flat_map(|l| l.coords.iter().map(|c| c.cap)).collect(),
            nodes: net
                .nodes
                .iter()
                .map(|n| {
                    (
                        n.capacity.min_level,
                        n.capacity.max_level(),
                        n.load_coords.iter().map(|&r| flat(r)).collect(),
                    )
                })
                .collect(),
            splits: net
                .splits
                .iter()
                .map(|s| (flat(s.feeder), s.members.iter().map(|&r| flat(r)).collect()))
                .collect(),
            width: start,
        }
    }

    fn values<'a>(&self, x: &'a SolutionVector) -> Result<&'a [u32]> {
        if x.values.len() == self.width {
            Ok(&x.values)
        } else {
            Err(Error::DimensionMismatch {
                expected: self.width,
                got: x.values.len(),
            })
        }
    }

    fn chain_violation(&self, x: &[u32], b: u32) -> Option<String> {
        for (li, range) in self.lines.iter().enumerate() {
            let line = &x[range.clone()];
            if let Some(&first) = line.first() {
                if first > b {
                    return Some(format!("line {} starts with {first} > b = {b}", li + 1));
                }
            }
            for (offset, pair) in line.windows(2).enumerate() {
                if pair[1] > pair[0] {
                    return Some(format!(
                        "x_{} = {} > x_{} = {}",
                        range.start + offset + 2,
                        pair[1],
                        range.start + offset + 1,
                        pair[0]
                    ));
                }
            }
        }
        x.iter()
            .zip(&self.caps)
            .position(|(v, cap)| v > cap)
            .map(|i| format!("x_{} = {} exceeds its cap {}", i + 1, x[i], self.caps[i]))
    }

    fn split_violation(&self, x: &[u32]) -> Option<String> {
        self.splits.iter().find_map(|(feeder, members)| {
            let total: u32 = members.iter().map(|&i| x[i]).sum();
            (total > x[*feeder]).then(|| {
                format!(
                    "split onto x_{}: members sum to {total} > {}",
                    feeder + 1,
                    x[*feeder]
                )
            })
        })
    }

    fn node_violation(&self, net: &Network, x: &[u32], b: u32, d: u32) -> Option<String> {
        self.nodes
            .iter()
            .zip(&net.nodes)
            .find_map(|((min_level, max_level, load), node)| {
                let lo = d.max(*min_level);
                let hi = b.min(*max_level);
                let total: u32 = load.iter().map(|&i| x[i]).sum();
                (total < lo || total > hi).then(|| {
                    format!("node {} load {total} outside [{lo}, {hi}]", node.id)
                })
            })
    }

    fn output(&self, x: &[u32]) -> u32 {
        self.lines
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| x[r.end - 1])
            .sum()
    }
}

/// Outcome of [`is_feasible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintReport {
    pub chain_ok: bool,
    pub split_ok: bool,
    pub node_ok: bool,
    pub output_ok: bool,
    pub first_violation: Option<String>,
}

impl ConstraintReport {
    pub fn is_feasible(&self) -> bool {
        self.chain_ok && self.split_ok && self.node_ok && self.output_ok
    }
}

/// Chain constraint: non-increasing lines, caps respected, every line starts
/// at most at `b`.
pub fn check_chain(net: &Network, x: &SolutionVector, b: u32) -> Result<bool> {
    let layout = Layout::new(net);
    Ok(layout.chain_violation(layout.values(x)?, b).is_none())
}

pub fn check_split(net: &Network, x: &SolutionVector) -> Result<bool> {
    let layout = Layout::new(net);
    Ok(layout.split_violation(layout.values(x)?).is_none())
}

pub fn check_node_loads(net: &Network, x: &SolutionVector, b: u32, d: u32) -> Result<bool> {
    let layout = Layout::new(net);
    Ok(layout.node_violation(net, layout.values(x)?, b, d).is_none())
}

pub fn check_output(net: &Network, x: &SolutionVector, d: u32) -> Result<bool> {
    let layout = Layout::new(net);
    Ok(layout.output(layout.values(x)?) >= d)
}

/// Evaluates all four constraints. `first_violation` follows the order
/// node, split, output, chain.
pub fn is_feasible(net: &Network, x: &SolutionVector, b: u32, d: u32) -> Result<ConstraintReport> {
    let layout = Layout::new(net);
    let values = layout.values(x)?;
    let node = layout.node_violation(net, values, b, d);
    let split = layout.split_violation(values);
    let output = layout.output(values);
    let output_msg = (output < d).then(|| format!("output {output} < d = {d}"));
    let chain = layout.chain_violation(values, b);
    Ok(ConstraintReport {
        chain_ok: chain.is_none(),
        split_ok: split.is_none(),
        node_ok: node.is_none(),
        output_ok: output_msg.is_none(),
        first_violation: node.or(split).or(output_msg).or(chain),
    })
}
