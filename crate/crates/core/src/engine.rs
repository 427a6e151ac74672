//! The solve pipeline: per-line vectors → nested combination → feasibility
//! filter → probability summation.
//!
//! Every per-line vector is precomputed together with its line probability
//! and its contributions to node loads, split slacks and output, so the
//! search over index tuples only adds small integer arrays.
//!
//! Work is split into blocks, one per index of the outermost line. Each
//! block keeps its own count and compensated sum; blocks are reduced in
//! ascending order afterwards, so the result does not depend on how many
//! workers ran or which worker took which block.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use serde::Serialize;

use crate::enumerate::{top_down_vectors, IndexTuple, LineTable};
use crate::error::{Error, Result};
use crate::feasibility::Layout;
use crate::model::{LineKind, Network, SolutionVector};
use crate::probability::{line_probability, SolutionRecord};
use crate::sum::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Skip prefixes that no completion can make feasible. Changes only the
    /// amount of work, never `S`, `s` or `R`.
    pub prune: bool,
    pub workers: usize,
    pub record_solutions: bool,
    pub warn_r_gt_1: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            prune: false,
            workers: 1,
            record_solutions: false,
            warn_r_gt_1: true,
        }
    }
}

/// Result of one `(b, d)` instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub network: String,
    pub b: u32,
    pub d: u32,
    /// `m_1..m_φ`.
    pub line_counts: Vec<u64>,
    /// `S = Π m_j`.
    pub total_tuples: u64,
    /// `s`.
    pub feasible_count: u64,
    /// `R_{b,d}`.
    pub reliability: f64,
    pub elapsed_seconds: f64,
    /// Set when no feasible vector exists.
    pub structurally_infeasible: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<SolutionRecord>>,
}

impl RunReport {
    /// Equality of everything but the wall-clock time.
    pub fn same_result(&self, other: &RunReport) -> bool {
        let mut a = self.clone();
        a.elapsed_seconds = other.elapsed_seconds;
        a == *other && a.reliability.to_bits() == other.reliability.to_bits()
    }
}

/// Averages over the rows of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    /// `N_{b,d}`: rows averaged (flagged rows excluded).
    pub rows: usize,
    pub elapsed_avg: f64,
    pub total_tuples_avg: f64,
    pub feasible_avg: f64,
    pub reliability_avg: f64,
    /// `S*`, the size of the unrestricted search space.
    pub s_star: f64,
    /// `S_avg / S*`.
    pub tuple_ratio: f64,
}

pub(crate) fn check_demand(b: u32, d: u32) -> Result<()> {
    if d == 0 || d > b {
        Err(Error::InvalidDemand { b, d })
    } else {
        Ok(())
    }
}

pub fn solve(net: &Network, b: u32, d: u32, opts: &SolveOptions) -> Result<RunReport> {
    check_demand(b, d)?;
    let report = net.validate();
    if !report.is_empty() {
        return Err(Error::InvalidNetwork(report));
    }
    let start = Instant::now();
    let plan = Plan::new(net, b, d)?;
    let total_tuples = plan
        .counts
        .iter()
        .try_fold(1u64, |acc, &m| acc.checked_mul(m as u64))
        .ok_or(Error::CountOverflow)?;

    let blocks = plan.run(opts);

    let mut feasible_count = 0;
    let mut total = NeumaierSum::new();
    let mut solutions = opts.record_solutions.then(Vec::new);
    for block in blocks {
        feasible_count += block.count;
        total.add(block.sum.value());
        if let Some(all) = solutions.as_mut() {
            all.extend(block.records);
        }
    }
    let reliability = total.value();

    let mut warnings = Vec::new();
    if opts.warn_r_gt_1 && reliability > 1.0 {
        warnings.push(format!(
            "reliability {reliability} exceeds 1: the solution probabilities of this network are not normalized"
        ));
    }
    Ok(RunReport {
        network: net.name.clone(),
        b,
        d,
        line_counts: plan.counts.iter().map(|&m| m as u64).collect(),
        total_tuples,
        feasible_count,
        reliability,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        structurally_infeasible: feasible_count == 0,
        warnings,
        solutions,
    })
}

/// One report per `(b, d)` with `b` in `b_range` and `1 ≤ d ≤ b`.
pub fn sweep(net: &Network, b_range: RangeInclusive<u32>, opts: &SolveOptions) -> Result<Vec<RunReport>> {
    let mut reports = Vec::new();
    for b in b_range {
        for d in 1..=b {
            reports.push(solve(net, b, d, opts)?);
        }
    }
    Ok(reports)
}

/// Size of the search space without any line decomposition: every
/// coordinate ranges over `0..=c`, where `c` is the smallest maximal level
/// among the nodes whose load contains it, or its own cap if no node does.
/// Used as the default `S*` of a summary.
pub fn unrestricted_space(net: &Network) -> f64 {
    net.lines
        .iter()
        .flat_map(|l| &l.coords)
        .map(|c| {
            net.nodes
                .iter()
                .filter(|n| n.load_coords.contains(&c.id))
                .map(|n| n.capacity.max_level())
                .min()
                .unwrap_or(c.cap) as f64
                + 1.0
        })
        .product()
}

/// Arithmetic means of `T`, `S`, `s` and `R` over the rows that are not
/// flagged structurally infeasible.
pub fn summarize(reports: &[RunReport], s_star: f64) -> Result<SweepSummary> {
    let rows: Vec<&RunReport> = reports.iter().filter(|r| !r.structurally_infeasible).collect();
    if rows.is_empty() {
        return Err(Error::EmptySummary);
    }
    let n = rows.len() as f64;
    let mean = |f: &dyn Fn(&RunReport) -> f64| rows.iter().map(|r| f(r)).sum::<f64>() / n;
    let total_tuples_avg = mean(&|r| r.total_tuples as f64);
    Ok(SweepSummary {
        rows: rows.len(),
        elapsed_avg: mean(&|r| r.elapsed_seconds),
        total_tuples_avg,
        feasible_avg: mean(&|r| r.feasible_count as f64),
        reliability_avg: mean(&|r| r.reliability),
        s_star,
        tuple_ratio: total_tuples_avg / s_star,
    })
}

#[derive(Debug, Default)]
struct BlockResult {
    count: u64,
    sum: NeumaierSum,
    records: Vec<SolutionRecord>,
}

/// Everything the search needs, precomputed per line vector.
struct Plan {
    d: u32,
    counts: Vec<usize>,
    tables: Vec<LineTable>,
    node_count: usize,
    split_count: usize,
    line_probs: Vec<Vec<f64>>,
    /// `[line][vector * node_count + k]`
    node_contrib: Vec<Vec<u32>>,
    /// `[line][vector * split_count + s]`: feeder minus members.
    split_contrib: Vec<Vec<i32>>,
    output_contrib: Vec<Vec<u32>>,
    node_lo: Vec<u32>,
    node_hi: Vec<u32>,
    node_probs: Vec<Vec<f64>>,
    /// Largest contributions still to come after each line, for pruning.
    future_node: Vec<Vec<u32>>,
    future_split: Vec<Vec<i32>>,
    future_output: Vec<u32>,
}

impl Plan {
    fn new(net: &Network, b: u32, d: u32) -> Result<Plan> {
        let layout = Layout::new(net);
        // The perfect line may start below d only if rework flow can
        // outgrow it; see Network::entry_bounds_output.
        let floor = if net.entry_bounds_output() { d } else { 0 };
        let tables: Vec<LineTable> = net
            .lines
            .iter()
            .map(|l| match l.kind {
                LineKind::Perfect => {
                    LineTable::from_vectors(l.len(), top_down_vectors(&l.caps(), b, floor))
                }
                LineKind::Rework => LineTable::build(l, b, d),
            })
            .collect();
        let counts: Vec<usize> = tables.iter().map(LineTable::len).collect();
        let node_count = layout.nodes.len();
        let split_count = layout.splits.len();
        let lines = layout.lines.len();

        // flat coordinate -> (owning line, offset within line)
        let mut owner = vec![(0, 0); layout.width];
        for (li, range) in layout.lines.iter().enumerate() {
            for (off, flat) in range.clone().enumerate() {
                owner[flat] = (li, off);
            }
        }

        let mut line_probs = Vec::with_capacity(lines);
        let mut node_contrib = Vec::with_capacity(lines);
        let mut split_contrib = Vec::with_capacity(lines);
        let mut output_contrib: Vec<Vec<u32>> = Vec::with_capacity(lines);
        for (li, (line, table)) in net.lines.iter().zip(&tables).enumerate() {
            let probs = table
                .iter()
                .map(|v| line_probability(line, v, b))
                .collect::<Result<Vec<f64>>>()?;
            let mut nodes = Vec::with_capacity(table.len() * node_count);
            let mut splits = Vec::with_capacity(table.len() * split_count);
            for v in table.iter() {
                for (_, _, load) in &layout.nodes {
                    nodes.push(
                        load.iter()
                            .filter(|&&f| owner[f].0 == li)
                            .map(|&f| v[owner[f].1])
                            .sum(),
                    );
                }
                for (feeder, members) in &layout.splits {
                    let mut slack: i32 = 0;
                    if owner[*feeder].0 == li {
                        slack += v[owner[*feeder].1] as i32;
                    }
                    for &m in members {
                        if owner[m].0 == li {
                            slack -= v[owner[m].1] as i32;
                        }
                    }
                    splits.push(slack);
                }
            }
            line_probs.push(probs);
            node_contrib.push(nodes);
            split_contrib.push(splits);
            output_contrib.push(table.iter().map(|v| *v.last().unwrap_or(&0)).collect());
        }

        let node_lo = layout.nodes.iter().map(|(min, _, _)| d.max(*min)).collect();
        let node_hi = layout.nodes.iter().map(|(_, max, _)| b.min(*max)).collect();
        let node_probs = net.nodes.iter().map(|n| n.capacity.prob.clone()).collect();

        let mut future_node = vec![vec![0u32; node_count]; lines];
        let mut future_split = vec![vec![0i32; split_count]; lines];
        let mut future_output = vec![0u32; lines];
        for level in (0..lines.saturating_sub(1)).rev() {
            let next = level + 1;
            let mut node_acc = future_node[next].clone();
            for (k, acc) in node_acc.iter_mut().enumerate() {
                *acc += (0..counts[next])
                    .map(|z| node_contrib[next][z * node_count + k])
                    .max()
                    .unwrap_or(0);
            }
            let mut split_acc = future_split[next].clone();
            for (s, acc) in split_acc.iter_mut().enumerate() {
                *acc += (0..counts[next])
                    .map(|z| split_contrib[next][z * split_count + s])
                    .max()
                    .unwrap_or(0);
            }
            future_node[level] = node_acc;
            future_split[level] = split_acc;
            future_output[level] =
                future_output[next] + output_contrib[next].iter().copied().max().unwrap_or(0);
        }

        Ok(Plan {
            d,
            counts,
            tables,
            node_count,
            split_count,
            line_probs,
            node_contrib,
            split_contrib,
            output_contrib,
            node_lo,
            node_hi,
            node_probs,
            future_node,
            future_split,
            future_output,
        })
    }

    fn run(&self, opts: &SolveOptions) -> Vec<BlockResult> {
        if self.counts.is_empty() || self.counts.contains(&0) {
            return Vec::new();
        }
        let blocks = self.counts[0];
        let workers = opts.workers.clamp(1, blocks);
        if workers == 1 {
            return (0..blocks).map(|z| self.block(z, opts)).collect();
        }
        let next = AtomicUsize::new(0);
        let mut done: Vec<(usize, BlockResult)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    scope.spawn(|| {
                        let mut mine = Vec::new();
                        loop {
                            let z = next.fetch_add(1, Ordering::Relaxed);
                            if z >= blocks {
                                break mine;
                            }
                            mine.push((z, self.block(z, opts)));
                        }
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("solver worker panicked"))
                .collect()
        });
        done.sort_by_key(|(z, _)| *z);
        done.into_iter().map(|(_, r)| r).collect()
    }

    fn block(&self, z0: usize, opts: &SolveOptions) -> BlockResult {
        let mut state = Search {
            loads: vec![0; self.node_count],
            slack: vec![0; self.split_count],
            output: 0,
            z: vec![0; self.counts.len()],
            result: BlockResult::default(),
        };
        self.descend(0, z0..z0 + 1, 1.0, &mut state, opts);
        state.result
    }

    fn descend(&self, level: usize, range: std::ops::Range<usize>, prob: f64, st: &mut Search, opts: &SolveOptions) {
        let n = self.node_count;
        let s = self.split_count;
        let last = level + 1 == self.counts.len();
        let nodes = &self.node_contrib[level];
        let splits = &self.split_contrib[level];
        let outputs = &self.output_contrib[level];
        let probs = &self.line_probs[level];

        if last {
            'vectors: for zi in range {
                let contrib = &nodes[zi * n..(zi + 1) * n];
                for ((&have, &add), (&lo, &hi)) in
                    st.loads.iter().zip(contrib).zip(self.node_lo.iter().zip(&self.node_hi))
                {
                    let load = have + add;
                    if load < lo || load > hi {
                        continue 'vectors;
                    }
                }
                let slack = &splits[zi * s..(zi + 1) * s];
                if st.slack.iter().zip(slack).any(|(&have, &add)| have + add < 0) {
                    continue;
                }
                if st.output + outputs[zi] < self.d {
                    continue;
                }
                let mut p = prob * probs[zi];
                for ((&have, &add), dist) in st.loads.iter().zip(contrib).zip(&self.node_probs) {
                    p *= dist[(have + add) as usize];
                }
                st.result.count += 1;
                st.result.sum.add(p);
                if opts.record_solutions {
                    st.z[level] = zi;
                    st.result.records.push(self.record(&st.z, p));
                }
            }
            return;
        }

        for zi in range {
            let contrib = &nodes[zi * n..(zi + 1) * n];
            let slack = &splits[zi * s..(zi + 1) * s];
            st.loads.iter_mut().zip(contrib).for_each(|(have, &add)| *have += add);
            st.slack.iter_mut().zip(slack).for_each(|(have, &add)| *have += add);
            st.output += outputs[zi];
            st.z[level] = zi;

            if !opts.prune || self.prefix_viable(level, st) {
                self.descend(level + 1, 0..self.counts[level + 1], prob * probs[zi], st, opts);
            }

            st.loads.iter_mut().zip(contrib).for_each(|(have, &add)| *have -= add);
            st.slack.iter_mut().zip(slack).for_each(|(have, &add)| *have -= add);
            st.output -= outputs[zi];
        }
    }

    /// False when no choice for the remaining lines can satisfy the node,
    /// split or output constraints. Contributions are non-negative except
    /// for split slacks, whose best future value is tracked separately.
    fn prefix_viable(&self, level: usize, st: &Search) -> bool {
        let nodes_ok = st
            .loads
            .iter()
            .zip(&self.future_node[level])
            .zip(self.node_lo.iter().zip(&self.node_hi))
            .all(|((&load, &future), (&lo, &hi))| load <= hi && load + future >= lo);
        let splits_ok = st
            .slack
            .iter()
            .zip(&self.future_split[level])
            .all(|(&slack, &future)| slack + future >= 0);
        nodes_ok
            && splits_ok
            && st.output + self.future_output[level] >= self.d
    }

    fn record(&self, z: &[usize], prob: f64) -> SolutionRecord {
        let mut x = Vec::new();
        for (table, &zi) in self.tables.iter().zip(z) {
            x.extend_from_slice(table.get(zi));
        }
        SolutionRecord {
            global_index: IndexTuple::rank(z, &self.counts),
            z: z.to_vec(),
            x: SolutionVector::new(x),
            prob,
        }
    }
}

struct Search {
    loads: Vec<u32>,
    slack: Vec<i32>,
    output: u32,
    z: Vec<usize>,
    result: BlockResult,
}
