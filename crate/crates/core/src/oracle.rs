//! Brute-force reference solver.
//!
//! [`oracle_solve`] visits every vector of the per-coordinate box
//! `0 ≤ x_i ≤ cap_i` and applies the constraint and probability definitions
//! directly. It deliberately shares no code with the enumerators, the
//! feasibility module or the probability module, so that a bug in one of
//! those shows up as a disagreement here.
//!
//! [`random_small_network`] produces seeded random networks small enough
//! for the oracle.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{check_demand, RunReport};
use crate::error::{Error, Result};
use crate::model::{
    CoordRef, CoordinateSpec, LineKind, Network, NodeSpec, ProductLineSpec, SolutionVector,
    SplitSpec, StateDistribution,
};
use crate::probability::SolutionRecord;

/// Largest box the oracle agrees to walk.
pub const ORACLE_BOX_LIMIT: u128 = 10_000_000;

/// Size of the per-coordinate box `Π (cap_i + 1)`.
pub fn box_size(net: &Network) -> u128 {
    net.lines
        .iter()
        .flat_map(|l| &l.coords)
        .fold(1u128, |acc, c| acc.saturating_mul(c.cap as u128 + 1))
}

/// Solves `(b, d)` by full-box filtration. The report's `line_counts` are
/// the per-line box sizes and `total_tuples` the whole box. Solutions are
/// recorded in ascending box order with `global_index` the box rank.
pub fn oracle_solve(net: &Network, b: u32, d: u32) -> Result<RunReport> {
    check_demand(b, d)?;
    let report = net.validate();
    if !report.is_empty() {
        return Err(Error::InvalidNetwork(report));
    }
    let size = box_size(net);
    if size > ORACLE_BOX_LIMIT {
        return Err(Error::BoxTooLarge {
            size,
            limit: ORACLE_BOX_LIMIT,
        });
    }
    let start = Instant::now();

    let caps: Vec<u32> = net.lines.iter().flat_map(|l| l.coords.iter().map(|c| c.cap)).collect();
    let mut starts = Vec::new();
    let mut offset = 0;
    for line in &net.lines {
        starts.push(offset);
        offset += line.coords.len();
    }
    let index_of = |r: CoordRef| starts[r.line - 1] + r.pos - 1;

    let mut x = vec![0u32; caps.len()];
    let mut rank: u64 = 0;
    let mut count: u64 = 0;
    // Kahan–Babuška accumulation, written out here rather than shared
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    let mut records = Vec::new();
    loop {
        if feasible(net, &x, &starts, &index_of, b, d) {
            let p = probability(net, &x, &starts, &index_of, b);
            count += 1;
            let t = sum + p;
            comp += if sum.abs() >= p.abs() { (sum - t) + p } else { (p - t) + sum };
            sum = t;
            records.push(SolutionRecord {
                global_index: rank,
                z: Vec::new(),
                x: SolutionVector::new(x.clone()),
                prob: p,
            });
        }
        // odometer step, last coordinate fastest
        let mut i = x.len();
        loop {
            if i == 0 {
                let reliability = sum + comp;
                return Ok(RunReport {
                    network: net.name.clone(),
                    b,
                    d,
                    line_counts: net
                        .lines
                        .iter()
                        .map(|l| l.coords.iter().map(|c| c.cap as u64 + 1).product())
                        .collect(),
                    total_tuples: size as u64,
                    feasible_count: count,
                    reliability,
                    elapsed_seconds: start.elapsed().as_secs_f64(),
                    structurally_infeasible: count == 0,
                    warnings: Vec::new(),
                    solutions: Some(records),
                });
            }
            i -= 1;
            if x[i] < caps[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
        rank += 1;
    }
}

fn feasible(
    net: &Network,
    x: &[u32],
    starts: &[usize],
    index_of: &dyn Fn(CoordRef) -> usize,
    b: u32,
    d: u32,
) -> bool {
    // chain: x_{j+1} ≤ x_j within a line, x_1 ≤ b
    for (line, &start) in net.lines.iter().zip(starts) {
        let mut upper = b;
        for j in 0..line.coords.len() {
            let v = x[start + j];
            if v > upper || v > line.coords[j].cap {
                return false;
            }
            upper = v;
        }
    }
    for split in &net.splits {
        let members: u32 = split.members.iter().map(|&r| x[index_of(r)]).sum();
        if members > x[index_of(split.feeder)] {
            return false;
        }
    }
    for node in &net.nodes {
        let load: u32 = node.load_coords.iter().map(|&r| x[index_of(r)]).sum();
        let lo = std::cmp::max(d, node.capacity.min_level);
        let hi = std::cmp::min(b, node.capacity.prob.len() as u32 - 1);
        if load < lo || load > hi {
            return false;
        }
    }
    let output: u32 = net
        .lines
        .iter()
        .zip(starts)
        .map(|(line, &start)| x[start + line.coords.len() - 1])
        .sum();
    output >= d
}

fn probability(
    net: &Network,
    x: &[u32],
    starts: &[usize],
    index_of: &dyn Fn(CoordRef) -> usize,
    b: u32,
) -> f64 {
    let mut p = 1.0;
    for (line, &start) in net.lines.iter().zip(starts) {
        let values = &x[start..start + line.coords.len()];
        let mut factor = 1.0;
        // (units before the arc, arc rate) for each arc with a binomial factor
        let mut upstream = match line.kind {
            LineKind::Perfect => Some((b, line.entry_rate.unwrap_or(1.0))),
            LineKind::Rework => None,
        };
        for (coord, &v) in line.coords.iter().zip(values) {
            if let Some((n, r)) = upstream {
                factor *= choose(n, v) * power(r, v) * power(1.0 - r, n - v);
            }
            upstream = Some((v, coord.rate));
        }
        let (last, rate) = upstream.expect("lines are non-empty");
        factor *= power(rate, last);
        p *= factor;
    }
    for node in &net.nodes {
        let load: u32 = node.load_coords.iter().map(|&r| x[index_of(r)]).sum();
        p *= node.capacity.prob[load as usize];
    }
    p
}

fn choose(n: u32, k: u32) -> f64 {
    let mut c = 1.0;
    for i in 1..=k {
        c = c * (n - k + i) as f64 / i as f64;
    }
    c.round()
}

fn power(base: f64, exp: u32) -> f64 {
    let mut p = 1.0;
    for _ in 0..exp {
        p *= base;
    }
    p
}

/// Outcome of comparing an engine report with an oracle report.
#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    Agree { feasible: u64, relative_error: f64 },
    Disagree { detail: String },
}

/// Relative tolerance on `R` for engine/oracle agreement.
pub const AGREEMENT_TOLERANCE: f64 = 1e-12;

/// Compares feasible counts exactly and reliabilities to
/// [`AGREEMENT_TOLERANCE`]. When both reports carry solutions, a mismatch
/// names the first vector on which they differ.
pub fn compare(engine: &RunReport, oracle: &RunReport) -> CheckOutcome {
    let denom = oracle.reliability.abs().max(f64::MIN_POSITIVE);
    let relative_error = if engine.reliability == oracle.reliability {
        0.0
    } else {
        (engine.reliability - oracle.reliability).abs() / denom
    };
    if engine.feasible_count == oracle.feasible_count && relative_error <= AGREEMENT_TOLERANCE {
        return CheckOutcome::Agree {
            feasible: engine.feasible_count,
            relative_error,
        };
    }
    let mut detail = format!(
        "engine s={} R={:e}, oracle s={} R={:e}",
        engine.feasible_count, engine.reliability, oracle.feasible_count, oracle.reliability
    );
    if let (Some(e), Some(o)) = (&engine.solutions, &oracle.solutions) {
        let mut e: Vec<&SolutionRecord> = e.iter().collect();
        let mut o: Vec<&SolutionRecord> = o.iter().collect();
        e.sort_by(|a, b| a.x.values.cmp(&b.x.values));
        o.sort_by(|a, b| a.x.values.cmp(&b.x.values));
        let first = e
            .iter()
            .zip(&o)
            .find(|(a, b)| a.x != b.x || rel_diff(a.prob, b.prob) > AGREEMENT_TOLERANCE);
        match first {
            Some((a, b)) if a.x != b.x => {
                let (x, side) = if a.x.values < b.x.values {
                    (&a.x, "engine only")
                } else {
                    (&b.x, "oracle only")
                };
                detail.push_str(&format!("; first differing vector {x} ({side})"));
            }
            Some((a, b)) => detail.push_str(&format!(
                "; vector {} has probability {:e} (engine) vs {:e} (oracle)",
                a.x, a.prob, b.prob
            )),
            None if e.len() != o.len() => {
                let (x, side) = if e.len() > o.len() {
                    (&e[o.len()].x, "engine only")
                } else {
                    (&o[e.len()].x, "oracle only")
                };
                detail.push_str(&format!("; first differing vector {x} ({side})"));
            }
            None => {}
        }
    }
    CheckOutcome::Disagree { detail }
}

fn rel_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomNetworkParams {
    pub seed: u64,
    pub max_lines: usize,
    pub max_coords_per_line: usize,
    pub max_cap: u32,
    /// Rates and probability weights are multiples of this step.
    pub granularity: f64,
}

impl RandomNetworkParams {
    pub fn with_seed(seed: u64) -> Self {
        RandomNetworkParams {
            seed,
            ..Default::default()
        }
    }
}

impl Default for RandomNetworkParams {
    fn default() -> Self {
        RandomNetworkParams {
            seed: 0,
            max_lines: 3,
            max_coords_per_line: 3,
            max_cap: 3,
            granularity: 0.05,
        }
    }
}

/// A valid random network, a deterministic function of `p.seed`. The size
/// limits are taken as given; keep them small enough for [`oracle_solve`].
///
/// Every coordinate is placed in exactly one node's load set. Rates include
/// 0 and 1, and some capacity distributions put all mass on one level.
pub fn random_small_network(p: &RandomNetworkParams) -> Network {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let max_lines = p.max_lines.max(1);
    let max_coords = p.max_coords_per_line.max(1);
    let max_cap = p.max_cap.max(1);
    let steps = (1.0 / p.granularity).round().max(1.0) as u32;
    let rate = |rng: &mut ChaCha8Rng| rng.gen_range(0..=steps) as f64 / steps as f64;

    let line_count = rng.gen_range(1..=max_lines);
    let mut lines = Vec::with_capacity(line_count);
    let mut coords = Vec::new();
    for li in 0..line_count {
        let kind = if li == 0 { LineKind::Perfect } else { LineKind::Rework };
        let len = rng.gen_range(1..=max_coords);
        let entry_rate = (kind == LineKind::Perfect).then(|| rate(&mut rng));
        let specs = (0..len)
            .map(|pi| {
                let id = CoordRef::new(li + 1, pi + 1);
                coords.push(id);
                CoordinateSpec {
                    id,
                    cap: if rng.gen_bool(0.1) { 0 } else { rng.gen_range(1..=max_cap) },
                    rate: rate(&mut rng),
                }
            })
            .collect();
        lines.push(ProductLineSpec {
            kind,
            entry_rate,
            coords: specs,
        });
    }

    let node_count = rng.gen_range(1..=coords.len().min(4));
    let mut loads: Vec<Vec<CoordRef>> = vec![Vec::new(); node_count];
    let mut shuffled = coords.clone();
    shuffled.shuffle(&mut rng);
    for (i, r) in shuffled.into_iter().enumerate() {
        let k = if i < node_count { i } else { rng.gen_range(0..node_count) };
        loads[k].push(r);
    }
    let nodes = loads
        .into_iter()
        .enumerate()
        .map(|(k, mut load)| {
            load.sort();
            let max_level = if rng.gen_bool(0.1) { 0 } else { rng.gen_range(1..=max_cap + 1) as usize };
            let mut weights: Vec<u32> = if rng.gen_bool(0.2) {
                let mut w = vec![0; max_level + 1];
                w[rng.gen_range(0..=max_level)] = steps;
                w
            } else {
                (0..=max_level).map(|_| rng.gen_range(0..=steps)).collect()
            };
            if weights.iter().all(|&w| w == 0) {
                weights[max_level] = 1;
            }
            let total: u32 = weights.iter().sum();
            let mut capacity =
                StateDistribution::new(weights.iter().map(|&w| w as f64 / total as f64).collect());
            if rng.gen_bool(0.1) {
                capacity.min_level = rng.gen_range(0..=capacity.max_level());
            }
            NodeSpec {
                id: k as u32 + 1,
                capacity,
                load_coords: load,
            }
        })
        .collect();

    // Mostly flow-conserving splits (each rework line fed from a distinct
    // non-final coordinate of an earlier line); otherwise arbitrary ones.
    let mut splits = Vec::new();
    let conserving = rng.gen_bool(0.75);
    let mut used = Vec::new();
    for li in 1..line_count {
        let head = CoordRef::new(li + 1, 1);
        if conserving {
            let candidates: Vec<CoordRef> = (0..li)
                .flat_map(|l| (1..lines[l].coords.len()).map(move |p| CoordRef::new(l + 1, p)))
                .filter(|f| !used.contains(f))
                .collect();
            if let Some(&feeder) = candidates.choose(&mut rng) {
                used.push(feeder);
                splits.push(SplitSpec {
                    feeder,
                    members: vec![CoordRef::new(feeder.line, feeder.pos + 1), head],
                });
                continue;
            }
        }
        if rng.gen_bool(0.5) {
            let feeder_line = rng.gen_range(0..li);
            let feeder_pos = rng.gen_range(0..lines[feeder_line].coords.len());
            let feeder = CoordRef::new(feeder_line + 1, feeder_pos + 1);
            let mut members = vec![head];
            if feeder_pos + 1 < lines[feeder_line].coords.len() && rng.gen_bool(0.5) {
                members.insert(0, CoordRef::new(feeder_line + 1, feeder_pos + 2));
            }
            splits.push(SplitSpec { feeder, members });
        }
    }

    Network {
        name: format!("random-{}", p.seed),
        lines,
        nodes,
        splits,
    }
}
