//! Binary-addition-tree (BAT) enumerators.
//!
//! Four variants are provided:
//!
//! * [`enumerate_binary`]: every 0/1 vector of length `m`, in ascending
//!   binary order, obtained by repeatedly adding one with carry;
//! * [`enumerate_multistate`]: the same for mixed-radix vectors bounded by
//!   per-coordinate caps;
//! * [`enumerate_line_vectors`]: the top-down deterioration-effect variant,
//!   which walks non-increasing vectors from the largest one down;
//! * [`nested_tuples`]: an odometer over indices into per-line vector lists,
//!   last line fastest.
//!
//! All of them are streaming iterators. Indices are 0-based.

use crate::model::{LineKind, ProductLineSpec};

/// Ascending binary vectors of length `m`; see [`enumerate_binary`].
#[derive(Debug, Clone)]
pub struct BinaryVectors {
    next: Option<Vec<u8>>,
}

/// Emits all `2^m` binary vectors, starting from all zeros. `m = 0` emits
/// the single empty vector.
pub fn enumerate_binary(m: usize) -> BinaryVectors {
    BinaryVectors {
        next: Some(vec![0; m]),
    }
}

impl Iterator for BinaryVectors {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // add one: flip trailing ones to zero, then the first zero to one
        for i in (0..succ.len()).rev() {
            if succ[i] == 0 {
                succ[i] = 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Ascending mixed-radix vectors; see [`enumerate_multistate`].
#[derive(Debug, Clone)]
pub struct MultiStateVectors {
    caps: Vec<u32>,
    next: Option<Vec<u32>>,
}

/// Emits the `Π (cap_i + 1)` vectors `0 ≤ x_i ≤ cap_i` in ascending order.
pub fn enumerate_multistate(caps: &[u32]) -> MultiStateVectors {
    MultiStateVectors {
        caps: caps.to_vec(),
        next: Some(vec![0; caps.len()]),
    }
}

impl Iterator for MultiStateVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.caps[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Non-increasing vectors in strictly decreasing lexicographic order; see
/// [`enumerate_line_vectors`] and [`top_down_vectors`].
#[derive(Debug, Clone)]
pub struct LineVectors {
    caps: Vec<u32>,
    floor: u32,
    next: Option<Vec<u32>>,
}

/// Top-down enumeration of the vectors `v` with
/// `floor ≤ v_1 ≤ min(first_max, cap_1)`, `v_{j+1} ≤ v_j` and `v_j ≤ cap_j`.
///
/// After position `i` is decremented every later position is reset to
/// `min(v_{j-1}, cap_j)`, which is the largest value the chain and the cap
/// allow. With uniform caps this is the plain `x_j = x_i` reset.
pub fn top_down_vectors(caps: &[u32], first_max: u32, floor: u32) -> LineVectors {
    let mut start = Vec::with_capacity(caps.len());
    let mut prev = first_max;
    for &cap in caps {
        prev = prev.min(cap);
        start.push(prev);
    }
    let next = match start.first() {
        Some(&first) if first < floor => None,
        _ => Some(start),
    };
    LineVectors {
        caps: caps.to_vec(),
        floor,
        next,
    }
}

/// Per-line vectors for input `b` and demand `d`.
///
/// The first coordinate starts at `min(b, cap_1)`. On the perfect line it
/// never drops below `d`: every output unit passes through that coordinate,
/// so smaller values cannot meet the demand. Rework lines run down to the
/// zero vector.
///
/// The floor is only lossless when rework flow cannot outgrow the perfect
/// line; the engine checks [`Network::entry_bounds_output`] before using it.
///
/// [`Network::entry_bounds_output`]: crate::model::Network::entry_bounds_output
pub fn enumerate_line_vectors(line: &ProductLineSpec, b: u32, d: u32) -> LineVectors {
    let floor = match line.kind {
        LineKind::Perfect => d,
        LineKind::Rework => 0,
    };
    top_down_vectors(&line.caps(), b, floor)
}

impl Iterator for LineVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            let floor = if i == 0 { self.floor } else { 0 };
            if succ[i] > floor {
                succ[i] -= 1;
                for j in i + 1..succ.len() {
                    succ[j] = succ[j - 1].min(self.caps[j]);
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(current)
    }
}

/// Materialized per-line vectors, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineTable {
    width: usize,
    values: Vec<u32>,
}

impl LineTable {
    pub fn build(line: &ProductLineSpec, b: u32, d: u32) -> Self {
        Self::from_vectors(line.coords.len(), enumerate_line_vectors(line, b, d))
    }

    pub fn from_vectors(width: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut values = Vec::new();
        for v in vectors {
            debug_assert_eq!(v.len(), width);
            values.extend_from_slice(&v);
        }
        LineTable { width, values }
    }

    /// Number of vectors, `m_j`.
    pub fn len(&self) -> usize {
        self.values.len().checked_div(self.width).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, index: usize) -> &[u32] {
        &self.values[index * self.width..(index + 1) * self.width]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.values.chunks_exact(self.width.max(1))
    }
}

/// A choice of one vector index per line, together with its rank in the
/// nested enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexTuple {
    pub z: Vec<usize>,
    pub global_index: u64,
}

impl IndexTuple {
    /// Row-major rank with the last line fastest:
    /// `((z_1·m_2 + z_2)·m_3 + z_3)…`.
    pub fn rank(z: &[usize], counts: &[usize]) -> u64 {
        z.iter()
            .zip(counts)
            .fold(0u64, |acc, (&zi, &mi)| acc * mi as u64 + zi as u64)
    }

    /// Inverse of [`IndexTuple::rank`].
    pub fn unrank(mut global_index: u64, counts: &[usize]) -> IndexTuple {
        let rank = global_index;
        let mut z = vec![0; counts.len()];
        for (zi, &mi) in z.iter_mut().zip(counts).rev() {
            *zi = (global_index % mi as u64) as usize;
            global_index /= mi as u64;
        }
        IndexTuple {
            z,
            global_index: rank,
        }
    }
}

/// Odometer over index tuples; see [`nested_tuples`].
#[derive(Debug, Clone)]
pub struct NestedTuples {
    counts: Vec<usize>,
    next: Option<IndexTuple>,
}

/// Emits the `Π m_j` tuples `0 ≤ z_j < m_j` starting from all zeros with the
/// last line varying fastest. A zero count yields nothing.
pub fn nested_tuples(counts: &[usize]) -> NestedTuples {
    let next = (!counts.contains(&0)).then(|| IndexTuple {
        z: vec![0; counts.len()],
        global_index: 0,
    });
    NestedTuples {
        counts: counts.to_vec(),
        next,
    }
}

impl Iterator for NestedTuples {
    type Item = IndexTuple;

    fn next(&mut self) -> Option<IndexTuple> {
        let current = self.next.take()?;
        let mut z = current.z.clone();
        for i in (0..z.len()).rev() {
            if z[i] + 1 < self.counts[i] {
                z[i] += 1;
                self.next = Some(IndexTuple {
                    z,
                    global_index: current.global_index + 1,
                });
                break;
            }
            z[i] = 0;
        }
        Some(current)
    }
}
