//! The five benchmark networks.
//!
//! `test1` is the single-rework example network with its own capacity
//! distributions and arc rates. `test2`..`test5` use ten equally likely
//! capacity levels (`0..=9`, probability 0.1 each) on every node and a
//! survival rate of 0.99 on every arc; `test2` reuses the `test1` topology.
//!
//! Coordinate caps are the smaller `D_max` of the two nodes an arc joins.

use crate::error::{Error, Result};
use crate::model::{
    CoordRef, CoordinateSpec, LineKind, Network, NodeSpec, ProductLineSpec, SplitSpec,
    StateDistribution,
};

pub const BUILTIN_IDS: [&str; 5] = ["test1", "test2", "test3", "test4", "test5"];

pub fn builtin_network(id: &str) -> Result<Network> {
    match id {
        "test1" => Ok(test1()),
        "test2" => Ok(test2()),
        "test3" => Ok(test3()),
        "test4" => Ok(test4()),
        "test5" => Ok(test5()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

const fn c(line: usize, pos: usize) -> CoordRef {
    CoordRef::new(line, pos)
}

fn line(index: usize, kind: LineKind, entry_rate: Option<f64>, coords: &[(u32, f64)]) -> ProductLineSpec {
    ProductLineSpec {
        kind,
        entry_rate,
        coords: coords
            .iter()
            .enumerate()
            .map(|(p, &(cap, rate))| CoordinateSpec {
                id: c(index, p + 1),
                cap,
                rate,
            })
            .collect(),
    }
}

fn node(id: u32, capacity: StateDistribution, load: &[CoordRef]) -> NodeSpec {
    NodeSpec {
        id,
        capacity,
        load_coords: load.to_vec(),
    }
}

fn split(feeder: CoordRef, members: &[CoordRef]) -> SplitSpec {
    SplitSpec {
        feeder,
        members: members.to_vec(),
    }
}

fn test1() -> Network {
    Network {
        name: "test1".into(),
        lines: vec![
            line(1, LineKind::Perfect, Some(0.99), &[(5, 0.9), (5, 0.8)]),
            // The capacity table lists 1.0 for the last rework arc, but the
            // worked probabilities use 0.9 (every solution with x_5 > 0
            // carries a 0.9^x_5 factor), so 0.9 is stored here.
            line(2, LineKind::Rework, None, &[(5, 0.95), (5, 0.7), (5, 0.9)]),
        ],
        nodes: vec![
            node(
                1,
                StateDistribution::new(vec![0.002, 0.003, 0.005, 0.010, 0.030, 0.050, 0.100, 0.800]),
                &[c(1, 1), c(2, 2)],
            ),
            node(
                2,
                StateDistribution::new(vec![0.003, 0.005, 0.010, 0.012, 0.070, 0.900]),
                &[c(1, 2), c(2, 1), c(2, 3)],
            ),
        ],
        splits: vec![split(c(1, 1), &[c(1, 2), c(2, 1)])],
    }
}

const UNIFORM_RATE: f64 = 0.99;
const UNIFORM_CAP: u32 = 9;

fn uniform_line(index: usize, kind: LineKind, len: usize) -> ProductLineSpec {
    let entry = (kind == LineKind::Perfect).then_some(UNIFORM_RATE);
    line(index, kind, entry, &vec![(UNIFORM_CAP, UNIFORM_RATE); len])
}

fn uniform_nodes(loads: &[&[CoordRef]]) -> Vec<NodeSpec> {
    loads
        .iter()
        .enumerate()
        .map(|(i, load)| node(i as u32 + 1, StateDistribution::uniform(UNIFORM_CAP), load))
        .collect()
}

fn test2() -> Network {
    Network {
        name: "test2".into(),
        lines: vec![
            uniform_line(1, LineKind::Perfect, 2),
            uniform_line(2, LineKind::Rework, 3),
        ],
        nodes: uniform_nodes(&[&[c(1, 1), c(2, 2)], &[c(1, 2), c(2, 1), c(2, 3)]]),
        splits: vec![split(c(1, 1), &[c(1, 2), c(2, 1)])],
    }
}

fn test3() -> Network {
    // x1..x4 = (1,1..4), x5..x8 = (2,1..4)
    Network {
        name: "test3".into(),
        lines: vec![
            uniform_line(1, LineKind::Perfect, 4),
            uniform_line(2, LineKind::Rework, 4),
        ],
        nodes: uniform_nodes(&[
            &[c(1, 1)],
            &[c(1, 2), c(2, 2)],
            &[c(1, 3), c(2, 1), c(2, 3)],
            &[c(1, 4), c(2, 4)],
        ]),
        splits: vec![split(c(1, 2), &[c(1, 3), c(2, 1)])],
    }
}

fn test4_nodes() -> Vec<Vec<CoordRef>> {
    // x1..x6 = (1,1..6), x7..x12 = (2,1..6)
    vec![
        vec![c(1, 1)],
        vec![c(1, 2), c(2, 2)],
        vec![c(1, 3), c(2, 3)],
        vec![c(1, 4), c(2, 1), c(2, 4)],
        vec![c(1, 5), c(2, 5)],
        vec![c(1, 6), c(2, 6)],
    ]
}

fn test4() -> Network {
    Network {
        name: "test4".into(),
        lines: vec![
            uniform_line(1, LineKind::Perfect, 6),
            uniform_line(2, LineKind::Rework, 6),
        ],
        nodes: uniform_nodes(&slices(&test4_nodes())),
        splits: vec![split(c(1, 3), &[c(1, 4), c(2, 1)])],
    }
}

fn slices(loads: &[Vec<CoordRef>]) -> Vec<&[CoordRef]> {
    loads.iter().map(Vec::as_slice).collect()
}

fn test5() -> Network {
    // test4 plus a second rework loop x13..x15 = (3,1..3) leaving node 5;
    // x13 sits in no node load.
    let mut loads = test4_nodes();
    loads[4] = vec![c(1, 5), c(2, 5), c(3, 2)];
    loads[5] = vec![c(1, 6), c(2, 6), c(3, 3)];
    Network {
        name: "test5".into(),
        lines: vec![
            uniform_line(1, LineKind::Perfect, 6),
            uniform_line(2, LineKind::Rework, 6),
            uniform_line(3, LineKind::Rework, 3),
        ],
        nodes: uniform_nodes(&slices(&loads)),
        splits: vec![
            split(c(1, 3), &[c(1, 4), c(2, 1)]),
            split(c(1, 5), &[c(1, 6), c(3, 1)]),
        ],
    }
}
