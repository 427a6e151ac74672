//! Network data model and the JSON network document format.
//!
//! A network is described in activity-on-arc form: every coordinate is the
//! WIP count carried by one arc, and every arc belongs to exactly one product
//! line. Node-load sets and split sets are explicit data rather than being
//! derived from a drawing of the topology.
//!
//! Coordinates are addressed by [`CoordRef`], a 1-based `(line, position)`
//! pair with line 1 being the perfect line. Internally the engine works on a
//! flat 0-based layout in which the lines are concatenated in order.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result, ValidationReport};

/// Tolerance on `Σ_l D(i, l) = 1`.
pub const DISTRIBUTION_TOLERANCE: f64 = 1e-9;

/// A 1-based `(line, position)` reference to a coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordRef {
    pub line: usize,
    pub pos: usize,
}

impl CoordRef {
    pub const fn new(line: usize, pos: usize) -> Self {
        CoordRef { line, pos }
    }
}

impl fmt::Display for CoordRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.line, self.pos)
    }
}

impl Serialize for CoordRef {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.line, self.pos].serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoordRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [line, pos] = <[usize; 2]>::deserialize(d)?;
        Ok(CoordRef { line, pos })
    }
}

/// Capacity distribution of a node: `prob[l]` is the probability that the
/// node operates at capacity level `l`, for `l` in `0..=max_level`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateDistribution {
    pub min_level: u32,
    pub prob: Vec<f64>,
}

impl StateDistribution {
    pub fn new(prob: Vec<f64>) -> Self {
        StateDistribution { min_level: 0, prob }
    }

    /// Uniform distribution over `0..=max_level`.
    pub fn uniform(max_level: u32) -> Self {
        let n = max_level as usize + 1;
        StateDistribution::new(vec![1.0 / n as f64; n])
    }

    pub fn max_level(&self) -> u32 {
        self.prob.len().saturating_sub(1) as u32
    }

    /// `D(i, level)`, or `None` above the maximal level.
    pub fn prob(&self, level: u32) -> Option<f64> {
        self.prob.get(level as usize).copied()
    }

    pub fn total(&self) -> f64 {
        self.prob.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeSpec {
    pub id: u32,
    pub capacity: StateDistribution,
    /// Coordinates whose WIP counts add up to the load of this node.
    pub load_coords: Vec<CoordRef>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordinateSpec {
    pub id: CoordRef,
    /// Upper bound on the WIP count of this coordinate.
    pub cap: u32,
    /// Survival probability of the arc traversed after this coordinate. For
    /// the last coordinate of a line this is the line's output arc.
    pub rate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Perfect,
    Rework,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductLineSpec {
    pub kind: LineKind,
    /// Survival probability of the entry arc; perfect line only.
    pub entry_rate: Option<f64>,
    pub coords: Vec<CoordinateSpec>,
}

impl ProductLineSpec {
    pub fn caps(&self) -> Vec<u32> {
        self.coords.iter().map(|c| c.cap).collect()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// `Σ_{i ∈ members} x_i ≤ x_feeder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSpec {
    pub feeder: CoordRef,
    pub members: Vec<CoordRef>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    pub name: String,
    pub lines: Vec<ProductLineSpec>,
    pub nodes: Vec<NodeSpec>,
    pub splits: Vec<SplitSpec>,
}

/// An assignment of WIP counts to every coordinate, stored flat with the
/// lines concatenated in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SolutionVector {
    pub values: Vec<u32>,
}

impl SolutionVector {
    pub fn new(values: Vec<u32>) -> Self {
        SolutionVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value of the coordinate `r`, if it exists in `net`.
    pub fn get(&self, net: &Network, r: CoordRef) -> Option<u32> {
        net.flat_index(r).and_then(|i| self.values.get(i).copied())
    }

    /// The slice belonging to the 1-based `line`.
    pub fn line<'a>(&'a self, net: &Network, line: usize) -> &'a [u32] {
        let start = net.line_offset(line);
        &self.values[start..start + net.lines[line - 1].coords.len()]
    }
}

impl fmt::Display for SolutionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl Network {
    /// Total number of coordinates `m` (the input arc `a_0` is not a coordinate).
    pub fn coordinate_count(&self) -> usize {
        self.lines.iter().map(|l| l.coords.len()).sum()
    }

    /// Flat offset of the first coordinate of the 1-based `line`.
    pub fn line_offset(&self, line: usize) -> usize {
        self.lines[..line - 1].iter().map(|l| l.coords.len()).sum()
    }

    pub fn contains(&self, r: CoordRef) -> bool {
        r.line >= 1
            && r.line <= self.lines.len()
            && r.pos >= 1
            && r.pos <= self.lines[r.line - 1].coords.len()
    }

    /// Flat 0-based index of `r`, or `None` if it dangles.
    pub fn flat_index(&self, r: CoordRef) -> Option<usize> {
        self.contains(r).then(|| self.line_offset(r.line) + r.pos - 1)
    }

    /// Inverse of [`Network::flat_index`].
    pub fn coord_ref(&self, flat: usize) -> Option<CoordRef> {
        let mut rest = flat;
        for (li, line) in self.lines.iter().enumerate() {
            if rest < line.coords.len() {
                return Some(CoordRef::new(li + 1, rest + 1));
            }
            rest -= line.coords.len();
        }
        None
    }

    pub fn node(&self, id: u32) -> Option<&NodeSpec> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn coordinate(&self, r: CoordRef) -> Option<&CoordinateSpec> {
        self.contains(r).then(|| &self.lines[r.line - 1].coords[r.pos - 1])
    }

    /// True when the total output can never exceed the first perfect-line
    /// coordinate: every rework line `R` is fed by a split with feeder
    /// `(L, p)`, `L < R`, whose members include both `(L, p + 1)` and
    /// `(R, 1)`, and no two rework lines share a feeder. Under this structure
    /// a perfect-line start below `d` can never meet the demand.
    pub fn entry_bounds_output(&self) -> bool {
        let mut feeders = HashSet::new();
        for (ri, line) in self.lines.iter().enumerate().skip(1) {
            if line.kind != LineKind::Rework {
                return false;
            }
            let head = CoordRef::new(ri + 1, 1);
            let fed = self.splits.iter().find(|s| {
                let f = s.feeder;
                f.line <= ri
                    && self.contains(f)
                    && s.members.contains(&head)
                    && s.members.contains(&CoordRef::new(f.line, f.pos + 1))
                    && self.contains(CoordRef::new(f.line, f.pos + 1))
            });
            match fed {
                Some(s) if feeders.insert(s.feeder) => {}
                _ => return false,
            }
        }
        true
    }

    pub fn validate(&self) -> ValidationReport {
        validate_network(self)
    }

    pub fn from_json(doc: &str) -> Result<Network> {
        load_network(doc)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Network> {
        let text = std::fs::read_to_string(path)?;
        load_network(&text)
    }

    /// Serializes to the network document format.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&NetworkDoc::from(self)).expect("network documents serialize")
    }
}

/// Parses and validates a network document.
pub fn load_network(doc: &str) -> Result<Network> {
    let raw: NetworkDoc = serde_json::from_str(doc)?;
    let mut report = ValidationReport::default();
    let net = raw.into_network(&mut report);
    report.findings.extend(validate_network(&net).findings);
    if report.is_empty() {
        Ok(net)
    } else {
        Err(Error::InvalidNetwork(report))
    }
}

/// Lists every invariant violation of `net`.
pub fn validate_network(net: &Network) -> ValidationReport {
    let mut report = ValidationReport::default();

    if net.lines.is_empty() {
        report.push("lines", "network has no product lines");
    }
    let perfect = net
        .lines
        .iter()
        .filter(|l| l.kind == LineKind::Perfect)
        .count();
    if perfect == 0 && !net.lines.is_empty() {
        report.push("lines", "network has no perfect line");
    } else if perfect > 1 {
        report.push("lines", format!("multiple perfect lines ({perfect}); exactly one is allowed"));
    }
    if let Some(first) = net.lines.first() {
        if first.kind != LineKind::Perfect && perfect > 0 {
            report.push("lines[0].kind", "line 1 must be the perfect line");
        }
    }

    let mut owners: HashSet<CoordRef> = HashSet::new();
    for (li, line) in net.lines.iter().enumerate() {
        let path = format!("lines[{li}]");
        match (line.kind, line.entry_rate) {
            (LineKind::Perfect, None) => {
                report.push(format!("{path}.entry_rate"), "perfect line needs an entry rate")
            }
            (LineKind::Rework, Some(_)) => {
                report.push(format!("{path}.entry_rate"), "rework lines have no entry rate")
            }
            (_, Some(rate)) if !is_probability(rate) => report.push(
                format!("{path}.entry_rate"),
                format!("rate {rate} is not a probability"),
            ),
            _ => {}
        }
        if line.coords.is_empty() {
            report.push(format!("{path}.coords"), "product line has no coordinates");
        }
        for (pi, coord) in line.coords.iter().enumerate() {
            let cpath = format!("{path}.coords[{pi}]");
            if !is_probability(coord.rate) {
                report.push(
                    format!("{cpath}.rate"),
                    format!("rate {} is not a probability", coord.rate),
                );
            }
            if !owners.insert(coord.id) {
                report.push(cpath.clone(), format!("coordinate {} owned twice", coord.id));
            }
            let here = CoordRef::new(li + 1, pi + 1);
            if coord.id != here {
                report.push(
                    cpath,
                    format!("coordinate {} is stored at position {here}", coord.id),
                );
            }
        }
    }

    let mut ids = HashSet::new();
    for (ni, node) in net.nodes.iter().enumerate() {
        let path = format!("nodes[{ni}]");
        if !ids.insert(node.id) {
            report.push(format!("{path}.id"), format!("duplicate node id {}", node.id));
        }
        let dist = &node.capacity;
        if dist.prob.is_empty() {
            report.push(format!("{path}.capacity_prob"), "distribution has no levels");
        }
        for (level, &p) in dist.prob.iter().enumerate() {
            if !is_probability(p) {
                report.push(
                    format!("{path}.capacity_prob.{level}"),
                    format!("node {} level {level} has probability {p} outside [0, 1]", node.id),
                );
            }
        }
        let total = dist.total();
        if !dist.prob.is_empty() && (total - 1.0).abs() > DISTRIBUTION_TOLERANCE {
            report.push(
                format!("{path}.capacity_prob"),
                format!("node {} distribution sums to {total}, not 1", node.id),
            );
        }
        if !dist.prob.is_empty() && dist.min_level > dist.max_level() {
            report.push(
                format!("{path}.min_level"),
                format!(
                    "node {} has min_level {} above max level {}",
                    node.id,
                    dist.min_level,
                    dist.max_level()
                ),
            );
        }
        check_refs(net, &mut report, &format!("{path}.load_coords"), &node.load_coords);
    }

    for (si, split) in net.splits.iter().enumerate() {
        let path = format!("splits[{si}]");
        if !net.contains(split.feeder) {
            report.push(
                format!("{path}.feeder"),
                format!("dangling coordinate reference {}", split.feeder),
            );
        }
        if split.members.is_empty() {
            report.push(format!("{path}.members"), "split has no members");
        }
        if split.members.contains(&split.feeder) {
            report.push(
                format!("{path}.members"),
                format!("feeder {} is also a member", split.feeder),
            );
        }
        check_refs(net, &mut report, &format!("{path}.members"), &split.members);
    }

    report
}

fn check_refs(net: &Network, report: &mut ValidationReport, path: &str, refs: &[CoordRef]) {
    let mut seen = HashSet::new();
    for (i, &r) in refs.iter().enumerate() {
        if !net.contains(r) {
            report.push(format!("{path}[{i}]"), format!("dangling coordinate reference {r}"));
        }
        if !seen.insert(r) {
            report.push(format!("{path}[{i}]"), format!("coordinate {r} listed twice"));
        }
    }
}

fn is_probability(p: f64) -> bool {
    (0.0..=1.0).contains(&p)
}

// Document representation. Key names are part of the file format.

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    name: String,
    nodes: Vec<NodeDoc>,
    lines: Vec<LineDoc>,
    #[serde(default)]
    splits: Vec<SplitDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    id: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    min_level: Option<u32>,
    #[serde(serialize_with = "serialize_levels")]
    capacity_prob: BTreeMap<String, f64>,
    load_coords: Vec<CoordRef>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineDoc {
    kind: LineKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    entry_rate: Option<f64>,
    coords: Vec<CoordDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoordDoc {
    cap: u32,
    rate: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitDoc {
    feeder: CoordRef,
    members: Vec<CoordRef>,
}

/// Writes levels in numeric rather than lexicographic key order.
fn serialize_levels<S: Serializer>(
    levels: &BTreeMap<String, f64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut entries: Vec<(&String, &f64)> = levels.iter().collect();
    entries.sort_by_key(|(k, _)| k.parse::<u64>().unwrap_or(u64::MAX));
    let mut map = s.serialize_map(Some(entries.len()))?;
    for (k, v) in entries {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl NetworkDoc {
    fn into_network(self, report: &mut ValidationReport) -> Network {
        let nodes = self
            .nodes
            .into_iter()
            .enumerate()
            .map(|(ni, node)| {
                let mut prob = Vec::new();
                for (key, p) in node.capacity_prob {
                    match key.parse::<usize>() {
                        Ok(level) => {
                            if prob.len() <= level {
                                prob.resize(level + 1, 0.0);
                            }
                            prob[level] = p;
                        }
                        Err(_) => report.push(
                            format!("nodes[{ni}].capacity_prob"),
                            format!("level key `{key}` is not a non-negative integer"),
                        ),
                    }
                }
                NodeSpec {
                    id: node.id,
                    capacity: StateDistribution {
                        min_level: node.min_level.unwrap_or(0),
                        prob,
                    },
                    load_coords: node.load_coords,
                }
            })
            .collect();
        let lines = self
            .lines
            .into_iter()
            .enumerate()
            .map(|(li, line)| ProductLineSpec {
                kind: line.kind,
                entry_rate: line.entry_rate,
                coords: line
                    .coords
                    .into_iter()
                    .enumerate()
                    .map(|(pi, c)| CoordinateSpec {
                        id: CoordRef::new(li + 1, pi + 1),
                        cap: c.cap,
                        rate: c.rate,
                    })
                    .collect(),
            })
            .collect();
        let splits = self
            .splits
            .into_iter()
            .map(|s| SplitSpec {
                feeder: s.feeder,
                members: s.members,
            })
            .collect();
        Network {
            name: self.name,
            lines,
            nodes,
            splits,
        }
    }
}

impl From<&Network> for NetworkDoc {
    fn from(net: &Network) -> Self {
        NetworkDoc {
            name: net.name.clone(),
            nodes: net
                .nodes
                .iter()
                .map(|n| NodeDoc {
                    id: n.id,
                    min_level: (n.capacity.min_level != 0).then_some(n.capacity.min_level),
                    capacity_prob: n
                        .capacity
                        .prob
                        .iter()
                        .enumerate()
                        .map(|(l, &p)| (l.to_string(), p))
                        .collect(),
                    load_coords: n.load_coords.clone(),
                })
                .collect(),
            lines: net
                .lines
                .iter()
                .map(|l| LineDoc {
                    kind: l.kind,
                    entry_rate: l.entry_rate,
                    coords: l
                        .coords
                        .iter()
                        .map(|c| CoordDoc {
                            cap: c.cap,
                            rate: c.rate,
                        })
                        .collect(),
                })
                .collect(),
            splits: net
                .splits
                .iter()
                .map(|s| SplitDoc {
                    feeder: s.feeder,
                    members: s.members.clone(),
                })
                .collect(),
        }
    }
}
