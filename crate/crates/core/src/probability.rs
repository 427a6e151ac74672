//! Solution probabilities.
//!
//! The probability of a feasible vector is the product of one factor per
//! product line and one capacity factor per node:
//!
//! * on the perfect line, with `y_0 = b` and entry rate `r_0`, each stage
//!   contributes `C(y_{t-1}, y_t) r^{y_t} (1-r)^{y_{t-1}-y_t}`;
//! * on a rework line the first coordinate is the number of units selected
//!   for rework and carries no factor; later stages contribute as above;
//! * every line ends with `r_last^{y_last}`, all units surviving the output
//!   arc;
//! * node `k` with load `l_k` contributes `D(k, l_k)`.
//!
//! These probabilities are not normalized over all vectors; the reliability
//! is their sum over the feasible set.

use serde::Serialize;

use crate::enumerate::IndexTuple;
use crate::error::{Error, Result};
use crate::model::{LineKind, Network, ProductLineSpec, SolutionVector};

/// A feasible solution and its probability.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionRecord {
    pub global_index: u64,
    pub z: Vec<usize>,
    pub x: SolutionVector,
    pub prob: f64,
}

impl SolutionRecord {
    pub fn tuple(&self) -> IndexTuple {
        IndexTuple {
            z: self.z.clone(),
            global_index: self.global_index,
        }
    }
}

/// Largest `n` for which `C(n, k)` is formed exactly in integer arithmetic.
const EXACT_BINOMIAL_LIMIT: u32 = 64;

/// `C(n, k)` as a float; exact for `n ≤ 64`.
pub fn binomial_coefficient(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    if n <= EXACT_BINOMIAL_LIMIT {
        // acc * (n - i) is divisible by i + 1 at every step, and the
        // intermediate stays below 2^128 for n ≤ 64
        let mut acc: u128 = 1;
        for i in 0..k as u128 {
            acc = acc * (n as u128 - i) / (i + 1);
        }
        acc as f64
    } else {
        let ln: f64 = (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum();
        ln.exp().round()
    }
}

/// `C(prev, cur) · rate^cur · (1 − rate)^(prev − cur)`: the probability that
/// exactly `cur` of `prev` units survive an arc with survival rate `rate`.
pub fn binomial_survival(prev: u32, cur: u32, rate: f64) -> Result<f64> {
    if cur > prev {
        return Err(Error::ChainViolation { prev, cur });
    }
    Ok(binomial_coefficient(prev, cur) * pow(rate, cur) * pow(1.0 - rate, prev - cur))
}

// powi(0.0, 0) is 1, which is the convention wanted for empty products.
fn pow(base: f64, exp: u32) -> f64 {
    match i32::try_from(exp) {
        Ok(e) => base.powi(e),
        Err(_) => base.powf(exp as f64),
    }
}

/// Probability factor of one product line holding the vector `v`.
pub fn line_probability(line: &ProductLineSpec, v: &[u32], b: u32) -> Result<f64> {
    debug_assert_eq!(v.len(), line.coords.len());
    let mut p = 1.0;
    let (mut prev, mut rate) = match line.kind {
        LineKind::Perfect => (Some(b), line.entry_rate.unwrap_or(1.0)),
        LineKind::Rework => (None, 1.0),
    };
    for (coord, &y) in line.coords.iter().zip(v) {
        if let Some(prev) = prev {
            p *= binomial_survival(prev, y, rate)?;
        }
        prev = Some(y);
        rate = coord.rate;
    }
    if let Some(last) = prev {
        p *= pow(rate, last);
    }
    Ok(p)
}

/// `D(node, load)`.
pub fn node_state_probability(net: &Network, node: u32, load: u32) -> Result<f64> {
    let spec = net.node(node).ok_or(Error::UnknownNode(node))?;
    spec.capacity
        .prob(load)
        .ok_or(Error::LoadExceedsCapacity {
            node,
            load,
            max_level: spec.capacity.max_level(),
        })
}

/// Product of all line factors and all node factors of `x`.
pub fn solution_probability(net: &Network, x: &SolutionVector, b: u32) -> Result<f64> {
    let expected = net.coordinate_count();
    if x.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: x.len(),
        });
    }
    let mut p = 1.0;
    for (li, line) in net.lines.iter().enumerate() {
        p *= line_probability(line, x.line(net, li + 1), b)?;
    }
    for node in &net.nodes {
        let load = node
            .load_coords
            .iter()
            .map(|&r| x.get(net, r).expect("validated network"))
            .sum();
        p *= node_state_probability(net, node.id, load)?;
    }
    Ok(p)
}
